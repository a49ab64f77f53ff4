#pragma once

#include <string>
#include <vector>

#include "aacbr/af.hpp"
#include "aacbr/engine.hpp"
#include "aacbr/model.hpp"
#include "aacbr/orders.hpp"

// Single-order AA-CBR and the staged variants, plus framework comparison.
// These engines exist to be compared against the preference engine: the
// single-order and modified-stages runs coincide with it, the verbatim
// stages run differs on concision.

namespace aacbr {

// A single preorder over whole characterisations.
class SingleOrder {
  public:
    // The preorder of one preference-sequence entry.
    static SingleOrder component(PreorderSpec spec);
    // Plain superset comparison over the union of all feature-set
    // components; other components are ignored.
    static SingleOrder union_superset();
    // Pointwise dominance: greater-or-equal on every order of the sequence.
    static SingleOrder dominance(PreferenceSequence prefs);

    CompareResult compare(const Characterisation& x, const Characterisation& y) const;

  private:
    enum class Kind { Component, UnionSuperset, Dominance };
    Kind kind_ = Kind::Component;
    PreorderSpec spec_{};
    PreferenceSequence prefs_{};
};

// Single-order attacks: outcomes differ and either the attacker is strictly
// greater with no same-outcome case strictly between it and the target, or
// the two characterisations are equivalent (the symmetric incoherence case).
std::vector<AttackEdge> classic_attacks(const Casebase& cb, const SingleOrder& order);

ArgumentationFramework classic_framework(const Casebase& cb, const SingleOrder& order,
                                         const Characterisation& new_case,
                                         const std::string& new_case_id = "N");

Prediction classic_predict(const Casebase& cb, const SingleOrder& order,
                           const Characterisation& new_case,
                           const std::string& new_case_id = "N");

enum class StagesMode { Verbatim, ModifiedConcision };

// Staged attacks over a schema of one feature-set and one stage component.
// Specificity: the attacker's features strictly contain the target's and no
// same-outcome case blocks it (feature chain, shorter same-feature stage, or
// equal-to-target features with a stage between). Verbatim mode takes the
// feature-chain blocker as is; modified concision additionally requires the
// attacker to reach the blocker's stage. Advance: equal features, strictly
// longer stage, no same-outcome case at a stage strictly between.
std::vector<AttackEdge> stages_attacks(const Casebase& cb, StagesMode mode);

ArgumentationFramework stages_framework(const Casebase& cb, StagesMode mode,
                                        const Characterisation& new_case,
                                        const std::string& new_case_id = "N");

Prediction stages_predict(const Casebase& cb, StagesMode mode, const Characterisation& new_case,
                          const std::string& new_case_id = "N");

// Attack-relation comparison after dropping labels. Edges whose label kind
// is listed in `ignore` are left out of the comparison entirely.
struct FrameworkDiff {
    bool same_arguments = true;
    std::vector<std::string> only_in_a;  // rendered "attacker -> target"
    std::vector<std::string> only_in_b;

    bool equal() const { return same_arguments && only_in_a.empty() && only_in_b.empty(); }
};

FrameworkDiff frameworks_equal(const ArgumentationFramework& a, const ArgumentationFramework& b,
                               std::initializer_list<AttackKind> ignore = {});

}  // namespace aacbr
