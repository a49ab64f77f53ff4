#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aacbr/af.hpp"
#include "aacbr/model.hpp"
#include "aacbr/orders.hpp"

// Preference-based case-based reasoning: attack mining over a casebase and a
// preference sequence, framework assembly, grounded prediction, coherence and
// regularity diagnostics, and the nearest/preferred case relations.

namespace aacbr {

// Raised by framework assembly when the casebase or preference sequence is
// invalid, or when the run configuration is unsupported.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Run configuration assembled by callers (CLI, evaluation harness). Only the
// regular mode is supported: the default characterisation must be least on
// every order.
struct EngineConfig {
    PreferenceSequence preferences;
    bool regular = true;

    void validate() const {
        if (!regular) throw EngineError("only the regular mode is supported");
    }
};

// Smallest order i (0-based) on which `attacker` potentially attacks
// `target`: outcomes differ, attacker is strictly greater at i and
// equivalent on every earlier order. Unique when it exists.
std::optional<std::size_t> potential_attack_order(const PreferenceSequence& prefs,
                                                  const Case& attacker, const Case& target);

// Specificity attacks over cases plus the default argument: potential
// attacks that survive concision. A potential attack at order i is blocked
// by a case g with the attacker's outcome, dominated by the attacker on
// every order, such that either g potentially attacks the target at i and
// the attacker is strictly greater than g somewhere at or after i, or g
// potentially attacks the target only at some later order.
std::vector<AttackEdge> casebase_attacks(const Casebase& cb, const PreferenceSequence& prefs);

// Symmetric attack pairs between arguments equivalent on every order but
// with differing outcomes (default argument included).
std::vector<AttackEdge> incoherent_attacks(const Casebase& cb, const PreferenceSequence& prefs);

// New-case attacks in regular mode: the new case attacks exactly the
// arguments it fails to dominate on some order.
std::vector<AttackEdge> new_case_attacks(const Casebase& cb, const PreferenceSequence& prefs,
                                         const Characterisation& new_case,
                                         const std::string& new_case_id = "N");

// Full framework: default argument, cases and the new case; specificity,
// incoherence and new-case attacks. Throws EngineError when validation or
// the regularity check fails, or when the new-case id collides.
ArgumentationFramework build_framework(const Casebase& cb, const PreferenceSequence& prefs,
                                       const Characterisation& new_case,
                                       const std::string& new_case_id = "N");

struct Prediction {
    Outcome outcome;
    ArgumentationFramework framework;
    GroundedResult grounded;
};

// Grounded prediction: the default outcome exactly when the default argument
// is in the grounded extension.
Prediction predict(const Casebase& cb, const PreferenceSequence& prefs,
                   const Characterisation& new_case, const std::string& new_case_id = "N");

struct CoherenceReport {
    bool coherent = true;
    // Pairs of case ids equivalent on every order with differing outcomes.
    std::vector<std::pair<std::string, std::string>> clashes;
};

// Coherence is a property of the casebase proper: the default argument does
// not take part in the clash scan.
CoherenceReport is_coherent(const Casebase& cb, const PreferenceSequence& prefs);

struct RegularityViolation {
    std::string case_id;
    std::size_t order = 0;  // 0-based order on which the default is not below
};

// Regular mode requires the default characterisation to be dominated by
// every case on every order.
std::vector<RegularityViolation> check_regular(const Casebase& cb,
                                               const PreferenceSequence& prefs);

// Cases (default argument included) dominated by the new case on every
// order and maximal among those: no case in the casebase dominates them on
// every order with strict preference somewhere.
std::vector<Case> nearest_cases(const Casebase& cb, const PreferenceSequence& prefs,
                                const Characterisation& new_case);

// Nearest cases not beaten at their first point of divergence: no other
// nearest case equivalent on every earlier order and strictly greater at
// some order.
std::vector<Case> preferred_cases(const Casebase& cb, const PreferenceSequence& prefs,
                                  const Characterisation& new_case);

}  // namespace aacbr
