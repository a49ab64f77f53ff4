#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "aacbr/model.hpp"

// Finite argumentation frameworks with labelled attacks, grounded-extension
// computation and cycle detection. Arguments are identified by id; the
// default argument and the new-case argument are singletons.

namespace aacbr {

enum class ArgKind { Default, Case, NewCase };

struct ArgumentRef {
    ArgKind kind = ArgKind::Case;
    std::string id;

    friend bool operator==(const ArgumentRef&, const ArgumentRef&) = default;
    friend bool operator<(const ArgumentRef& a, const ArgumentRef& b) { return a.id < b.id; }
};

enum class AttackKind { Order, Incoherent, NewCase };

struct AttackLabel {
    AttackKind kind = AttackKind::Order;
    std::size_t order = 0;  // 0-based order index; meaningful for Order only

    // Human-facing label: the 1-based order index, "inc" or "new".
    std::string display() const;

    friend bool operator==(const AttackLabel&, const AttackLabel&) = default;
};

struct AttackEdge {
    ArgumentRef attacker;
    ArgumentRef target;
    AttackLabel label;

    friend bool operator==(const AttackEdge&, const AttackEdge&) = default;
};

// Canonical ordering: by attacker id, target id, then label.
bool canonical_less(const AttackEdge& a, const AttackEdge& b);

struct ArgumentationFramework {
    std::vector<ArgumentRef> arguments;  // sorted by id, ids unique
    std::vector<AttackEdge> attacks;     // canonical order

    // Sorts both vectors into canonical order and drops duplicate edges.
    void canonicalise();

    const ArgumentRef* find(const std::string& id) const;

    // Structural invariants: unique ids, sortedness, edge endpoints present,
    // at most one Default and one NewCase argument.
    std::vector<Violation> validate() const;

    friend bool operator==(const ArgumentationFramework&, const ArgumentationFramework&) = default;
};

struct GroundedResult {
    // layers[k] is G_k: G_0 collects the unattacked arguments, G_{k+1} the
    // arguments defended by G_k. The last layer is the fixpoint.
    std::vector<std::vector<ArgumentRef>> layers;
    std::vector<ArgumentRef> grounded;  // union of the layers, sorted by id

    bool contains(const ArgumentRef& arg) const;
    bool contains_id(const std::string& id) const;
    bool contains_kind(ArgKind kind) const;
};

GroundedResult grounded_extension(const ArgumentationFramework& af);

// True when the attack graph restricted to edges whose label kind is not in
// `ignore` has no directed cycle.
bool is_acyclic(const ArgumentationFramework& af,
                std::initializer_list<AttackKind> ignore = {});

}  // namespace aacbr
