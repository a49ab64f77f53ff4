#include "aacbr/legacy.hpp"

#include <algorithm>
#include <set>

namespace aacbr {

SingleOrder SingleOrder::component(PreorderSpec spec) {
    SingleOrder order;
    order.kind_ = Kind::Component;
    order.spec_ = spec;
    return order;
}

SingleOrder SingleOrder::union_superset() {
    SingleOrder order;
    order.kind_ = Kind::UnionSuperset;
    return order;
}

SingleOrder SingleOrder::dominance(PreferenceSequence prefs) {
    SingleOrder order;
    order.kind_ = Kind::Dominance;
    order.prefs_ = std::move(prefs);
    return order;
}

static FeatureSet union_of_feature_components(const Characterisation& ch) {
    std::vector<std::string> all;
    bool any = false;
    for (const ComponentValue& value : ch.components) {
        if (const auto* fs = std::get_if<FeatureSet>(&value)) {
            any = true;
            all.insert(all.end(), fs->features.begin(), fs->features.end());
        }
    }
    if (!any) throw SchemaError("union order needs at least one feature-set component");
    return FeatureSet{std::move(all)};
}

CompareResult SingleOrder::compare(const Characterisation& x, const Characterisation& y) const {
    switch (kind_) {
        case Kind::Component:
            return aacbr::compare(spec_, x, y);
        case Kind::UnionSuperset: {
            FeatureSet fx = union_of_feature_components(x);
            FeatureSet fy = union_of_feature_components(y);
            bool sup = fx.contains_all(fy);
            bool sub = fy.contains_all(fx);
            if (sup && sub) return CompareResult::Equivalent;
            if (sup) return CompareResult::Greater;
            if (sub) return CompareResult::Less;
            return CompareResult::Incomparable;
        }
        case Kind::Dominance: {
            bool geq = geq_all(prefs_, x, y);
            bool leq = geq_all(prefs_, y, x);
            if (geq && leq) return CompareResult::Equivalent;
            if (geq) return CompareResult::Greater;
            if (leq) return CompareResult::Less;
            return CompareResult::Incomparable;
        }
    }
    throw SchemaError("unknown single-order kind");
}

namespace {

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

ArgumentationFramework assemble(const Casebase& cb, std::vector<AttackEdge> attacks,
                                std::vector<AttackEdge> fresh, const std::string& new_case_id) {
    ArgumentationFramework af;
    af.arguments.push_back(ArgumentRef{ArgKind::Default, cb.default_case.id});
    for (const Case& c : cb.cases) af.arguments.push_back(ArgumentRef{ArgKind::Case, c.id});
    af.arguments.push_back(ArgumentRef{ArgKind::NewCase, new_case_id});
    af.attacks = std::move(attacks);
    af.attacks.insert(af.attacks.end(), fresh.begin(), fresh.end());
    af.canonicalise();
    return af;
}

Prediction conclude(const Casebase& cb, ArgumentationFramework af) {
    Prediction p;
    p.framework = std::move(af);
    p.grounded = grounded_extension(p.framework);
    p.outcome = p.grounded.contains_kind(ArgKind::Default) ? cb.outcome_for(Polarity::Default)
                                                           : cb.outcome_for(Polarity::NonDefault);
    return p;
}

}  // namespace

std::vector<AttackEdge> classic_attacks(const Casebase& cb, const SingleOrder& order) {
    std::vector<const Case*> args = outcome_arguments(cb);
    std::size_t n = args.size();
    std::vector<CompareResult> cmp(n * n, CompareResult::Equivalent);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            cmp[a * n + b] = order.compare(args[a]->characterisation, args[b]->characterisation);
        }
    }

    std::vector<AttackEdge> edges;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || args[a]->outcome.name == args[b]->outcome.name) continue;
            CompareResult r = cmp[a * n + b];
            if (r == CompareResult::Equivalent) {
                // Symmetric incoherence attack; the mirrored edge is emitted
                // when the loop visits (b, a).
                edges.push_back(
                    {ref_for(cb, *args[a]), ref_for(cb, *args[b]), {AttackKind::Incoherent, 0}});
                continue;
            }
            if (r != CompareResult::Greater) continue;
            bool blocked = false;
            for (std::size_t g = 0; g < n && !blocked; ++g) {
                if (g == a || args[g]->outcome.name != args[a]->outcome.name) continue;
                blocked = cmp[a * n + g] == CompareResult::Greater &&
                          cmp[g * n + b] == CompareResult::Greater;
            }
            if (!blocked) {
                edges.push_back(
                    {ref_for(cb, *args[a]), ref_for(cb, *args[b]), {AttackKind::Order, 0}});
            }
        }
    }
    std::sort(edges.begin(), edges.end(), canonical_less);
    return edges;
}

ArgumentationFramework classic_framework(const Casebase& cb, const SingleOrder& order,
                                         const Characterisation& new_case,
                                         const std::string& new_case_id) {
    std::vector<AttackEdge> fresh;
    ArgumentRef n{ArgKind::NewCase, new_case_id};
    for (const Case* c : outcome_arguments(cb)) {
        if (!is_geq(order.compare(new_case, c->characterisation))) {
            fresh.push_back({n, ref_for(cb, *c), {AttackKind::NewCase, 0}});
        }
    }
    return assemble(cb, classic_attacks(cb, order), std::move(fresh), new_case_id);
}

Prediction classic_predict(const Casebase& cb, const SingleOrder& order,
                           const Characterisation& new_case, const std::string& new_case_id) {
    return conclude(cb, classic_framework(cb, order, new_case, new_case_id));
}

namespace {

struct StagedView {
    const Case* owner = nullptr;
    const FeatureSet* features = nullptr;
    int stage = 0;
};

struct StagedCasebase {
    std::vector<StagedView> args;   // default at slot 0
    std::vector<StagedView> cases;  // the casebase proper
};

StagedCasebase staged_view(const Casebase& cb) {
    std::size_t feature_slot = cb.schema.size();
    std::size_t stage_slot = cb.schema.size();
    for (std::size_t i = 0; i < cb.schema.size(); ++i) {
        if (cb.schema[i].kind == ComponentKind::FeatureSet) {
            if (feature_slot != cb.schema.size()) {
                throw EngineError("staged runs need exactly one feature-set component");
            }
            feature_slot = i;
        } else if (cb.schema[i].kind == ComponentKind::StagePrefix) {
            if (stage_slot != cb.schema.size()) {
                throw EngineError("staged runs need exactly one stage component");
            }
            stage_slot = i;
        } else {
            throw EngineError("staged runs support feature-set and stage components only");
        }
    }
    if (feature_slot == cb.schema.size() || stage_slot == cb.schema.size()) {
        throw EngineError("staged runs need one feature-set and one stage component");
    }

    auto view = [&](const Case& c) {
        const auto& components = c.characterisation.components;
        if (components.size() != cb.schema.size() ||
            !std::holds_alternative<FeatureSet>(components[feature_slot]) ||
            !std::holds_alternative<StageValue>(components[stage_slot])) {
            throw EngineError("case " + c.id + " does not fit the staged schema");
        }
        return StagedView{&c, &std::get<FeatureSet>(components[feature_slot]),
                          std::get<StageValue>(components[stage_slot]).stage};
    };
    StagedCasebase out;
    StagedView def = view(cb.default_case);
    if (def.features->size() != 0 || def.stage != 0) {
        throw EngineError("staged runs need the empty default characterisation");
    }
    out.args.push_back(def);
    for (const Case& c : cb.cases) {
        out.args.push_back(view(c));
        out.cases.push_back(view(c));
    }
    return out;
}

bool strict_superset(const FeatureSet& a, const FeatureSet& b) {
    return a.size() > b.size() && a.contains_all(b);
}

}  // namespace

std::vector<AttackEdge> stages_attacks(const Casebase& cb, StagesMode mode) {
    StagedCasebase staged = staged_view(cb);

    std::vector<AttackEdge> edges;
    for (const StagedView& a : staged.args) {
        for (const StagedView& b : staged.args) {
            if (a.owner == b.owner || a.owner->outcome.name == b.owner->outcome.name) continue;

            if (strict_superset(*a.features, *b.features)) {
                bool blocked = false;
                // Concision blockers carry the attacker's outcome and come
                // from the casebase proper.
                for (const StagedView& g : staged.cases) {
                    if (g.owner == a.owner || g.owner->outcome.name != a.owner->outcome.name) {
                        continue;
                    }
                    bool chain = strict_superset(*a.features, *g.features) &&
                                 strict_superset(*g.features, *b.features);
                    if (mode == StagesMode::ModifiedConcision) chain = chain && a.stage >= g.stage;
                    bool shorter_here = *g.features == *a.features && a.stage > g.stage;
                    bool between_at_target =
                        *g.features == *b.features && a.stage >= g.stage && g.stage > b.stage;
                    if (chain || shorter_here || between_at_target) {
                        blocked = true;
                        break;
                    }
                }
                if (!blocked) {
                    edges.push_back(
                        {ref_for(cb, *a.owner), ref_for(cb, *b.owner), {AttackKind::Order, 0}});
                }
                continue;
            }

            if (*a.features == *b.features && a.stage > b.stage) {
                bool blocked = false;
                for (const StagedView& g : staged.cases) {
                    if (g.owner->outcome.name != a.owner->outcome.name) continue;
                    if (*g.features == *a.features && a.stage > g.stage && g.stage > b.stage) {
                        blocked = true;
                        break;
                    }
                }
                if (!blocked) {
                    edges.push_back(
                        {ref_for(cb, *a.owner), ref_for(cb, *b.owner), {AttackKind::Order, 1}});
                }
            }
        }
    }
    std::sort(edges.begin(), edges.end(), canonical_less);
    return edges;
}

ArgumentationFramework stages_framework(const Casebase& cb, StagesMode mode,
                                        const Characterisation& new_case,
                                        const std::string& new_case_id) {
    StagedCasebase staged = staged_view(cb);
    std::size_t feature_slot = 0;
    while (cb.schema[feature_slot].kind != ComponentKind::FeatureSet) ++feature_slot;
    std::size_t stage_slot = 0;
    while (cb.schema[stage_slot].kind != ComponentKind::StagePrefix) ++stage_slot;
    if (new_case.components.size() != cb.schema.size() ||
        !std::holds_alternative<FeatureSet>(new_case.components[feature_slot]) ||
        !std::holds_alternative<StageValue>(new_case.components[stage_slot])) {
        throw EngineError("new case does not fit the staged schema");
    }
    const auto& n_features = std::get<FeatureSet>(new_case.components[feature_slot]);
    int n_stage = std::get<StageValue>(new_case.components[stage_slot]).stage;

    std::vector<AttackEdge> fresh;
    ArgumentRef n{ArgKind::NewCase, new_case_id};
    for (const StagedView& c : staged.args) {
        if (!n_features.contains_all(*c.features) || n_stage < c.stage) {
            fresh.push_back({n, ref_for(cb, *c.owner), {AttackKind::NewCase, 0}});
        }
    }
    return assemble(cb, stages_attacks(cb, mode), std::move(fresh), new_case_id);
}

Prediction stages_predict(const Casebase& cb, StagesMode mode, const Characterisation& new_case,
                          const std::string& new_case_id) {
    return conclude(cb, stages_framework(cb, mode, new_case, new_case_id));
}

FrameworkDiff frameworks_equal(const ArgumentationFramework& a, const ArgumentationFramework& b,
                               std::initializer_list<AttackKind> ignore) {
    FrameworkDiff diff;
    diff.same_arguments = a.arguments == b.arguments;

    auto pairs = [&](const ArgumentationFramework& af) {
        std::set<std::pair<std::string, std::string>> out;
        for (const AttackEdge& e : af.attacks) {
            bool skip = false;
            for (AttackKind kind : ignore) skip = skip || e.label.kind == kind;
            if (!skip) out.insert({e.attacker.id, e.target.id});
        }
        return out;
    };
    std::set<std::pair<std::string, std::string>> in_a = pairs(a);
    std::set<std::pair<std::string, std::string>> in_b = pairs(b);
    for (const auto& [attacker, target] : in_a) {
        if (!in_b.count({attacker, target})) diff.only_in_a.push_back(attacker + " -> " + target);
    }
    for (const auto& [attacker, target] : in_b) {
        if (!in_a.count({attacker, target})) diff.only_in_b.push_back(attacker + " -> " + target);
    }
    return diff;
}

}  // namespace aacbr
