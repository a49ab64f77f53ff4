#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "aacbr/model.hpp"

// Preference sequences: an ordered list of preorders, each binding one
// characterisation component to a comparator. Comparisons are pure over the
// two characterisations.

namespace aacbr {

enum class ComparatorKind { SupersetOfFeatures, LongerStagePrefix, GreaterEqualInteger };

const char* to_string(ComparatorKind kind);

// Comparator kind matching a component kind (a 1:1 mapping).
ComparatorKind comparator_for(ComponentKind kind);

struct PreorderSpec {
    std::size_t component = 0;
    ComparatorKind comparator = ComparatorKind::SupersetOfFeatures;

    friend bool operator==(const PreorderSpec&, const PreorderSpec&) = default;
};

// Non-empty sequence of preorders. Each spec binds exactly one component;
// a component may be referenced by at most one spec.
struct PreferenceSequence {
    std::vector<PreorderSpec> orders;

    std::size_t size() const { return orders.size(); }
    const PreorderSpec& at(std::size_t i) const { return orders.at(i); }

    // Diagnostic check against a schema: arity, kind matching, no component
    // referenced twice. Empty result means the sequence is valid.
    std::vector<Violation> validate(const std::vector<ComponentSchema>& schema) const;

    friend bool operator==(const PreferenceSequence&, const PreferenceSequence&) = default;
};

// Incomparable is a first-class result, not an error.
enum class CompareResult { Greater, Less, Equivalent, Incomparable };

const char* to_string(CompareResult r);

// Compares x and y under one preorder. Throws SchemaError when the addressed
// component is missing or of the wrong kind.
CompareResult compare(const PreorderSpec& spec, const Characterisation& x,
                      const Characterisation& y);

inline bool is_geq(CompareResult r) {
    return r == CompareResult::Greater || r == CompareResult::Equivalent;
}

// Range operations over the 0-based half-open order interval [from, to).
// An empty interval holds vacuously. Indices beyond size() throw.
bool geq_range(const PreferenceSequence& prefs, const Characterisation& x,
               const Characterisation& y, std::size_t from, std::size_t to);
bool eq_range(const PreferenceSequence& prefs, const Characterisation& x,
              const Characterisation& y, std::size_t from, std::size_t to);
// True when x is strictly greater than y on some order in [from, to).
bool strict_in_range(const PreferenceSequence& prefs, const Characterisation& x,
                     const Characterisation& y, std::size_t from, std::size_t to);

bool geq_all(const PreferenceSequence& prefs, const Characterisation& x,
             const Characterisation& y);
bool eq_all(const PreferenceSequence& prefs, const Characterisation& x,
            const Characterisation& y);

// First order (0-based) where x and y are not equivalent, with the relation
// found there. relation == Equivalent (and no order) means x and y are
// equivalent on every order; Incomparable is reported distinctly.
struct FirstDivergence {
    std::optional<std::size_t> order;
    CompareResult relation = CompareResult::Equivalent;

    friend bool operator==(const FirstDivergence&, const FirstDivergence&) = default;
};

FirstDivergence first_strict_order(const PreferenceSequence& prefs, const Characterisation& x,
                                   const Characterisation& y);

}  // namespace aacbr
