#include "aacbr/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace aacbr {

namespace {

// Arguments with known outcomes: the default argument at slot 0, then the
// casebase in stored order.
std::vector<const Case*> outcome_arguments(const Casebase& cb) {
    std::vector<const Case*> args;
    args.reserve(cb.cases.size() + 1);
    args.push_back(&cb.default_case);
    for (const Case& c : cb.cases) args.push_back(&c);
    return args;
}

ArgumentRef ref_for(const Casebase& cb, const Case& c) {
    ArgKind kind = &c == &cb.default_case ? ArgKind::Default : ArgKind::Case;
    return ArgumentRef{kind, c.id};
}

// Pairwise order relations between all outcome-bearing arguments, computed
// once per mining pass. Masks hold one bit per order.
struct PairRelations {
    std::size_t n = 0;
    std::size_t orders = 0;
    std::vector<std::int8_t> pot;         // first strict-after-equal order, -1 if none
    std::vector<std::uint32_t> strict;    // bit i: row strictly greater at order i
    std::vector<std::uint8_t> geq_every;  // row >= column on every order
    std::vector<std::uint8_t> eq_every;   // row equivalent to column on every order

    std::size_t slot(std::size_t a, std::size_t b) const { return a * n + b; }
};

PairRelations relate_pairs(const std::vector<const Case*>& args, const PreferenceSequence& prefs) {
    PairRelations rel;
    rel.n = args.size();
    rel.orders = prefs.size();
    if (rel.orders > 32) throw EngineError("at most 32 orders are supported");
    rel.pot.assign(rel.n * rel.n, -1);
    rel.strict.assign(rel.n * rel.n, 0);
    rel.geq_every.assign(rel.n * rel.n, 1);
    rel.eq_every.assign(rel.n * rel.n, 1);

    for (std::size_t a = 0; a < rel.n; ++a) {
        for (std::size_t b = a; b < rel.n; ++b) {
            std::size_t ab = rel.slot(a, b);
            std::size_t ba = rel.slot(b, a);
            bool diverged = false;
            for (std::size_t i = 0; i < rel.orders; ++i) {
                CompareResult r =
                    compare(prefs.at(i), args[a]->characterisation, args[b]->characterisation);
                if (r == CompareResult::Equivalent) continue;
                rel.eq_every[ab] = rel.eq_every[ba] = 0;
                if (r == CompareResult::Greater) {
                    rel.strict[ab] |= 1u << i;
                    rel.geq_every[ba] = 0;
                } else if (r == CompareResult::Less) {
                    rel.strict[ba] |= 1u << i;
                    rel.geq_every[ab] = 0;
                } else {
                    rel.geq_every[ab] = rel.geq_every[ba] = 0;
                }
                // Only the first divergence can carry a potential attack:
                // every earlier order must be equivalent.
                if (!diverged) {
                    diverged = true;
                    if (r == CompareResult::Greater) rel.pot[ab] = static_cast<std::int8_t>(i);
                    if (r == CompareResult::Less) rel.pot[ba] = static_cast<std::int8_t>(i);
                }
            }
        }
    }
    return rel;
}

}  // namespace

std::optional<std::size_t> potential_attack_order(const PreferenceSequence& prefs,
                                                  const Case& attacker, const Case& target) {
    if (attacker.outcome.name == target.outcome.name) return std::nullopt;
    for (std::size_t i = 0; i < prefs.size(); ++i) {
        CompareResult r = compare(prefs.at(i), attacker.characterisation, target.characterisation);
        if (r == CompareResult::Equivalent) continue;
        if (r == CompareResult::Greater) return i;
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<AttackEdge> casebase_attacks(const Casebase& cb, const PreferenceSequence& prefs) {
    std::vector<const Case*> args = outcome_arguments(cb);
    PairRelations rel = relate_pairs(args, prefs);

    std::vector<AttackEdge> edges;
    for (std::size_t a = 0; a < rel.n; ++a) {
        for (std::size_t b = 0; b < rel.n; ++b) {
            if (a == b || args[a]->outcome.name == args[b]->outcome.name) continue;
            std::int8_t i = rel.pot[rel.slot(a, b)];
            if (i < 0) continue;

            bool blocked = false;
            for (std::size_t g = 0; g < rel.n && !blocked; ++g) {
                if (g == a || args[g]->outcome.name != args[a]->outcome.name) continue;
                if (!rel.geq_every[rel.slot(a, g)]) continue;
                std::int8_t pg = rel.pot[rel.slot(g, b)];
                if (pg == i) {
                    // g competes at the same order; it blocks when the
                    // attacker exceeds it at or after i.
                    blocked = (rel.strict[rel.slot(a, g)] >> i) != 0;
                } else if (pg > i) {
                    blocked = true;
                }
            }
            if (!blocked) {
                edges.push_back({ref_for(cb, *args[a]), ref_for(cb, *args[b]),
                                 {AttackKind::Order, static_cast<std::size_t>(i)}});
            }
        }
    }
    std::sort(edges.begin(), edges.end(), canonical_less);
    return edges;
}

std::vector<AttackEdge> incoherent_attacks(const Casebase& cb, const PreferenceSequence& prefs) {
    std::vector<const Case*> args = outcome_arguments(cb);
    std::vector<AttackEdge> edges;
    for (std::size_t a = 0; a < args.size(); ++a) {
        for (std::size_t b = a + 1; b < args.size(); ++b) {
            if (args[a]->outcome.name == args[b]->outcome.name) continue;
            if (!eq_all(prefs, args[a]->characterisation, args[b]->characterisation)) continue;
            edges.push_back(
                {ref_for(cb, *args[a]), ref_for(cb, *args[b]), {AttackKind::Incoherent, 0}});
            edges.push_back(
                {ref_for(cb, *args[b]), ref_for(cb, *args[a]), {AttackKind::Incoherent, 0}});
        }
    }
    std::sort(edges.begin(), edges.end(), canonical_less);
    return edges;
}

std::vector<AttackEdge> new_case_attacks(const Casebase& cb, const PreferenceSequence& prefs,
                                         const Characterisation& new_case,
                                         const std::string& new_case_id) {
    ArgumentRef n{ArgKind::NewCase, new_case_id};
    std::vector<AttackEdge> edges;
    for (const Case* c : outcome_arguments(cb)) {
        if (!geq_all(prefs, new_case, c->characterisation)) {
            edges.push_back({n, ref_for(cb, *c), {AttackKind::NewCase, 0}});
        }
    }
    std::sort(edges.begin(), edges.end(), canonical_less);
    return edges;
}

static std::string join_violations(const std::vector<Violation>& violations) {
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) out << "; ";
        if (!violations[i].case_id.empty()) out << violations[i].case_id << ": ";
        out << violations[i].message;
    }
    return out.str();
}

ArgumentationFramework build_framework(const Casebase& cb, const PreferenceSequence& prefs,
                                       const Characterisation& new_case,
                                       const std::string& new_case_id) {
    std::vector<Violation> violations = validate_casebase(cb);
    std::vector<Violation> pref_violations = prefs.validate(cb.schema);
    violations.insert(violations.end(), pref_violations.begin(), pref_violations.end());
    if (!violations.empty()) {
        throw EngineError("invalid casebase: " + join_violations(violations));
    }
    std::vector<RegularityViolation> irregular = check_regular(cb, prefs);
    if (!irregular.empty()) {
        std::ostringstream msg;
        msg << "default characterisation is not least: ";
        for (std::size_t i = 0; i < irregular.size(); ++i) {
            if (i > 0) msg << "; ";
            msg << "below case " << irregular[i].case_id << " fails on order "
                << irregular[i].order + 1;
        }
        throw EngineError(msg.str());
    }
    if (new_case_id == cb.default_case.id) {
        throw EngineError("new-case id collides with the default case id");
    }
    for (const Case& c : cb.cases) {
        if (c.id == new_case_id) throw EngineError("new-case id collides with case " + c.id);
    }

    ArgumentationFramework af;
    af.arguments.push_back(ArgumentRef{ArgKind::Default, cb.default_case.id});
    for (const Case& c : cb.cases) af.arguments.push_back(ArgumentRef{ArgKind::Case, c.id});
    af.arguments.push_back(ArgumentRef{ArgKind::NewCase, new_case_id});

    af.attacks = casebase_attacks(cb, prefs);
    std::vector<AttackEdge> inc = incoherent_attacks(cb, prefs);
    std::vector<AttackEdge> fresh = new_case_attacks(cb, prefs, new_case, new_case_id);
    af.attacks.insert(af.attacks.end(), inc.begin(), inc.end());
    af.attacks.insert(af.attacks.end(), fresh.begin(), fresh.end());
    af.canonicalise();
    return af;
}

Prediction predict(const Casebase& cb, const PreferenceSequence& prefs,
                   const Characterisation& new_case, const std::string& new_case_id) {
    Prediction p;
    p.framework = build_framework(cb, prefs, new_case, new_case_id);
    p.grounded = grounded_extension(p.framework);
    p.outcome = p.grounded.contains_kind(ArgKind::Default) ? cb.outcome_for(Polarity::Default)
                                                           : cb.outcome_for(Polarity::NonDefault);
    return p;
}

CoherenceReport is_coherent(const Casebase& cb, const PreferenceSequence& prefs) {
    CoherenceReport report;
    for (std::size_t a = 0; a < cb.cases.size(); ++a) {
        for (std::size_t b = a + 1; b < cb.cases.size(); ++b) {
            if (cb.cases[a].outcome.name == cb.cases[b].outcome.name) continue;
            if (eq_all(prefs, cb.cases[a].characterisation, cb.cases[b].characterisation)) {
                report.clashes.emplace_back(cb.cases[a].id, cb.cases[b].id);
            }
        }
    }
    report.coherent = report.clashes.empty();
    return report;
}

std::vector<RegularityViolation> check_regular(const Casebase& cb,
                                               const PreferenceSequence& prefs) {
    std::vector<RegularityViolation> out;
    for (const Case& c : cb.cases) {
        for (std::size_t i = 0; i < prefs.size(); ++i) {
            if (!is_geq(compare(prefs.at(i), c.characterisation,
                                cb.default_case.characterisation))) {
                out.push_back({c.id, i});
            }
        }
    }
    return out;
}

std::vector<Case> nearest_cases(const Casebase& cb, const PreferenceSequence& prefs,
                                const Characterisation& new_case) {
    std::vector<const Case*> candidates;
    for (const Case* c : outcome_arguments(cb)) {
        if (geq_all(prefs, new_case, c->characterisation)) candidates.push_back(c);
    }
    std::vector<Case> out;
    for (const Case* c : candidates) {
        bool beaten = false;
        // Dominance witnesses range over the casebase proper.
        for (const Case& other : cb.cases) {
            if (&other == c) continue;
            if (!geq_all(prefs, new_case, other.characterisation)) continue;
            if (geq_all(prefs, other.characterisation, c->characterisation) &&
                strict_in_range(prefs, other.characterisation, c->characterisation, 0,
                                prefs.size())) {
                beaten = true;
                break;
            }
        }
        if (!beaten) out.push_back(*c);
    }
    std::sort(out.begin(), out.end(), [](const Case& a, const Case& b) { return a.id < b.id; });
    return out;
}

std::vector<Case> preferred_cases(const Casebase& cb, const PreferenceSequence& prefs,
                                  const Characterisation& new_case) {
    std::vector<Case> nearest = nearest_cases(cb, prefs, new_case);
    std::vector<Case> out;
    for (const Case& c : nearest) {
        bool beaten = false;
        for (const Case& other : nearest) {
            if (other.id == c.id) continue;
            // `other` wins at the first divergence: equivalent before order j,
            // strictly greater at j.
            FirstDivergence div = first_strict_order(prefs, other.characterisation,
                                                     c.characterisation);
            if (div.order && div.relation == CompareResult::Greater) {
                beaten = true;
                break;
            }
        }
        if (!beaten) out.push_back(c);
    }
    return out;
}

}  // namespace aacbr
