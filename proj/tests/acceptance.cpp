// Acceptance gate: eleven end-to-end checks over frozen worked examples,
// randomised suites and the scaling benchmark. One PASS/FAIL line per check;
// the process exits 0 only when every check passes within its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "aacbr/engine.hpp"
#include "aacbr/eval.hpp"
#include "aacbr/legacy.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace {

using namespace aacbr;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

template <typename T>
std::string render_list(const std::vector<T>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += xs[i];
    }
    return out + "}";
}

void require_equal(const std::vector<std::string>& got, const std::vector<std::string>& want,
                   const std::string& what) {
    if (got != want) {
        throw Failure(what + ": got " + render_list(got) + ", want " + render_list(want));
    }
}

std::vector<std::string> edges_of(const ArgumentationFramework& af) {
    return oracle::canonical_edges(af);
}

std::vector<std::string> grounded_ids(const GroundedResult& grounded) {
    std::vector<std::string> ids;
    for (const ArgumentRef& a : grounded.grounded) ids.push_back(a.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::string> case_ids(const std::vector<Case>& cases) {
    std::vector<std::string> ids;
    for (const Case& c : cases) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::optional<std::string> agreed_outcome(const std::vector<Case>& cases) {
    if (cases.empty()) return std::nullopt;
    for (const Case& c : cases) {
        if (c.outcome.name != cases.front().outcome.name) return std::nullopt;
    }
    return cases.front().outcome.name;
}

// Two feature-set tiers, high priority before low, outcomes pos/neg with neg
// as the default.
Casebase two_tier_base(const std::string& default_id) {
    Casebase cb;
    cb.schema.push_back({"high", ComponentKind::FeatureSet, 0});
    cb.schema.push_back({"low", ComponentKind::FeatureSet, 0});
    cb.default_outcome = "neg";
    cb.non_default_outcome = "pos";
    cb.default_case.id = default_id;
    cb.default_case.outcome = cb.outcome_for(Polarity::Default);
    cb.default_case.characterisation.components = {FeatureSet{}, FeatureSet{}};
    return cb;
}

void add_two_tier(Casebase& cb, const std::string& id, FeatureSet high, FeatureSet low,
                  const std::string& outcome) {
    Case c;
    c.id = id;
    c.characterisation.components = {std::move(high), std::move(low)};
    c.outcome = cb.outcome_named(outcome);
    cb.cases.push_back(std::move(c));
}

const PreferenceSequence kTwoTiers{{{0, ComparatorKind::SupersetOfFeatures},
                                    {1, ComparatorKind::SupersetOfFeatures}}};

// The four-case motivating casebase: outcome follows the high-priority
// feature (d for neg, c for pos) with a low-priority pair a,b behind it.
Casebase motivating_base() {
    Casebase cb = two_tier_base("C0");
    add_two_tier(cb, "C1", {}, {"a", "b"}, "pos");
    add_two_tier(cb, "C2", {"c"}, {}, "pos");
    add_two_tier(cb, "C3", {"d"}, {}, "neg");
    return cb;
}

// Nearest/preferred split: C1 and C5 are both nearest to N3 but only C5
// survives the first-divergence comparison.
Casebase preferred_base() {
    Casebase cb = two_tier_base("C0");
    add_two_tier(cb, "C1", {}, {"a", "b"}, "pos");
    add_two_tier(cb, "C2", {"c"}, {}, "pos");
    add_two_tier(cb, "C4", {"d"}, {"a"}, "neg");
    add_two_tier(cb, "C5", {"c", "d"}, {"a"}, "neg");
    return cb;
}

// One feature set plus a stage prefix; plus is the default outcome.
Casebase staged_base() {
    Casebase cb;
    cb.schema.push_back({"findings", ComponentKind::FeatureSet, 0});
    cb.schema.push_back({"stage", ComponentKind::StagePrefix, 3});
    cb.default_outcome = "plus";
    cb.non_default_outcome = "minus";
    cb.default_case.id = "C0";
    cb.default_case.outcome = cb.outcome_for(Polarity::Default);
    cb.default_case.characterisation.components = {FeatureSet{}, StageValue{0}};
    Case c1;
    c1.id = "C1";
    c1.characterisation.components = {FeatureSet{"a", "b", "c"}, StageValue{2}};
    c1.outcome = cb.outcome_named("plus");
    Case c2;
    c2.id = "C2";
    c2.characterisation.components = {FeatureSet{"a"}, StageValue{1}};
    c2.outcome = cb.outcome_named("minus");
    Case c3;
    c3.id = "C3";
    c3.characterisation.components = {FeatureSet{"a", "b"}, StageValue{3}};
    c3.outcome = cb.outcome_named("plus");
    cb.cases = {c1, c2, c3};
    return cb;
}

const PreferenceSequence kSupersetThenStage{{{0, ComparatorKind::SupersetOfFeatures},
                                             {1, ComparatorKind::LongerStagePrefix}}};

Characterisation two_tier(FeatureSet high, FeatureSet low) {
    Characterisation ch;
    ch.components = {std::move(high), std::move(low)};
    return ch;
}

Characterisation staged(FeatureSet features, int stage) {
    Characterisation ch;
    ch.components = {std::move(features), StageValue{stage}};
    return ch;
}

// A casebase whose only mined attack is the concise case's: the larger
// attacker alpha is blocked. `gamma_high`/`gamma_low` select the blocker of
// either concision condition.
Casebase blocked_base(FeatureSet gamma_high, FeatureSet gamma_low) {
    Casebase cb = two_tier_base("beta");
    add_two_tier(cb, "alpha", {"c", "d"}, {"a", "b"}, "pos");
    add_two_tier(cb, "gamma", std::move(gamma_high), std::move(gamma_low), "pos");
    return cb;
}

// --- 01: the six worked frameworks, edge-for-edge with labels ---
void check_worked_frameworks() {
    {
        // Blocked attack, shared potential order: gamma matches alpha on the
        // high tier and is smaller on the low tier.
        Casebase cb = blocked_base({"c", "d"}, {"a"});
        ArgumentationFramework af = build_framework(cb, kTwoTiers, two_tier({"c", "d"}, {"a", "b"}));
        require_equal(edges_of(af), {"gamma -> beta [1]"}, "blocked attack, first condition");
        require(af.arguments.size() == 4, "blocked framework keeps all four arguments");
    }
    {
        // Blocked attack, later order: gamma matches beta on the high tier
        // and mounts its own attack on the low tier.
        Casebase cb = blocked_base({}, {"a", "b"});
        ArgumentationFramework af = build_framework(cb, kTwoTiers, two_tier({"c", "d"}, {"a", "b"}));
        require_equal(edges_of(af), {"gamma -> beta [2]"}, "blocked attack, second condition");
    }
    Casebase motivating = motivating_base();
    require_equal(
        edges_of(build_framework(motivating, kTwoTiers, two_tier({"d"}, {"a", "b"}), "N1")),
        {"C1 -> C0 [2]", "C2 -> C0 [1]", "C3 -> C1 [1]", "N1 -> C2 [new]"},
        "motivating framework for N1");
    require_equal(edges_of(build_framework(motivating, kTwoTiers, two_tier({"c"}, {"a"}), "N2")),
                  {"C1 -> C0 [2]", "C2 -> C0 [1]", "C3 -> C1 [1]", "N2 -> C1 [new]",
                   "N2 -> C3 [new]"},
                  "motivating framework for N2");
    require_equal(
        edges_of(build_framework(staged_base(), kSupersetThenStage, staged({"a", "b", "c"}, 2),
                                 "Nprime")),
        {"C1 -> C2 [1]", "C2 -> C0 [1]", "C3 -> C2 [1]", "Nprime -> C3 [new]"},
        "staged framework for Nprime");
    require_equal(
        edges_of(build_framework(preferred_base(), kTwoTiers, two_tier({"c", "d"}, {"a", "b"}),
                                 "N3")),
        {"C1 -> C0 [2]", "C2 -> C0 [1]", "C4 -> C1 [1]", "C5 -> C2 [1]"},
        "preferred framework for N3 (no new-case attacks)");
}

// --- 02: the predictions and grounded extensions of those examples ---
void check_example_predictions() {
    Casebase motivating = motivating_base();
    Prediction n1 = predict(motivating, kTwoTiers, two_tier({"d"}, {"a", "b"}), "N1");
    require(n1.outcome.name == "neg", "N1 takes the default outcome");
    require_equal(grounded_ids(n1.grounded), {"C0", "C3", "N1"}, "grounded extension for N1");

    Prediction n2 = predict(motivating, kTwoTiers, two_tier({"c"}, {"a"}), "N2");
    require(n2.outcome.name == "pos", "N2 takes the non-default outcome");
    require_equal(grounded_ids(n2.grounded), {"C2", "N2"}, "grounded extension for N2");

    Prediction np = predict(staged_base(), kSupersetThenStage, staged({"a", "b", "c"}, 2),
                            "Nprime");
    require(np.outcome.name == "plus", "Nprime takes the default outcome");
    require_equal(grounded_ids(np.grounded), {"C0", "C1", "Nprime"},
                  "grounded extension for Nprime");

    Prediction n3 = predict(preferred_base(), kTwoTiers, two_tier({"c", "d"}, {"a", "b"}), "N3");
    require(n3.outcome.name == "neg", "N3 takes the default outcome");
    require_equal(grounded_ids(n3.grounded), {"C0", "C4", "C5", "N3"},
                  "grounded extension for N3");
}

// --- 03: coherent casebases mine acyclic frameworks ---
void check_acyclicity() {
    std::mt19937 rng(9001);
    for (int round = 0; round < 1000; ++round) {
        testgen::Instance inst = testgen::random_instance(rng);
        ArgumentationFramework af =
            build_framework(inst.casebase, inst.preferences, inst.new_case);
        require(is_acyclic(af, {AttackKind::NewCase}),
                "cycle in a coherent framework at round " + std::to_string(round));
    }
}

// --- 04: agreeing nearest/preferred cases fix the prediction ---
void check_nearest_preferred() {
    std::mt19937 rng(9002);
    std::size_t splits_matched = 0;
    for (std::size_t round = 0; round < 20000; ++round) {
        if (round >= 1000 && splits_matched >= 50) break;
        testgen::Instance inst = testgen::random_instance(rng);
        std::vector<Case> nearest =
            nearest_cases(inst.casebase, inst.preferences, inst.new_case);
        std::vector<Case> preferred =
            preferred_cases(inst.casebase, inst.preferences, inst.new_case);
        require(!nearest.empty(), "some case is always nearest");
        require(!preferred.empty(), "some case is always preferred");
        Prediction p = predict(inst.casebase, inst.preferences, inst.new_case);

        std::optional<std::string> near_y = agreed_outcome(nearest);
        std::optional<std::string> pref_y = agreed_outcome(preferred);
        if (near_y) {
            require(p.outcome.name == *near_y,
                    "agreed nearest outcome missed at round " + std::to_string(round));
        }
        if (pref_y) {
            require(p.outcome.name == *pref_y,
                    "agreed preferred outcome missed at round " + std::to_string(round));
        }
        if (!near_y && pref_y) ++splits_matched;
    }
    require(splits_matched >= 50, "only " + std::to_string(splits_matched) +
                                      " split-but-preferred instances sampled");
}

// --- 05: every mined order label is the most preferred applicable order ---
void check_most_preferred_order() {
    std::mt19937 rng(9003);
    for (int round = 0; round < 1000; ++round) {
        testgen::GenConfig cfg;
        cfg.allow_incoherent = round % 2 == 1;
        testgen::Instance inst = testgen::random_instance(rng, cfg);
        const Casebase& cb = inst.casebase;
        ArgumentationFramework af = build_framework(cb, inst.preferences, inst.new_case);

        std::map<std::string, const Case*> by_id;
        by_id[cb.default_case.id] = &cb.default_case;
        for (const Case& c : cb.cases) by_id[c.id] = &c;

        for (const AttackEdge& e : af.attacks) {
            if (e.label.kind != AttackKind::Order) continue;
            const Case* a = by_id.at(e.attacker.id);
            const Case* t = by_id.at(e.target.id);
            std::optional<std::size_t> order = potential_attack_order(inst.preferences, *a, *t);
            require(order && *order == e.label.order,
                    "label disagrees with the recomputed order at round " +
                        std::to_string(round));
            for (std::size_t k = 0; k < e.label.order; ++k) {
                require(!oracle::potential_at(inst.preferences, a->characterisation,
                                              t->characterisation, k),
                        "an earlier order also qualifies at round " + std::to_string(round));
            }
        }
    }
}

// --- 06: single-order and modified-stages runs coincide with the engine ---
void check_equivalences() {
    std::mt19937 rng(9004);
    for (int round = 0; round < 500; ++round) {
        testgen::GenConfig cfg;
        cfg.single_order = true;
        cfg.min_orders = cfg.max_orders = 1;
        testgen::Instance inst = testgen::random_instance(rng, cfg);
        SingleOrder order = SingleOrder::component(inst.preferences.at(0));

        ArgumentationFramework classic =
            classic_framework(inst.casebase, order, inst.new_case);
        ArgumentationFramework sequenced =
            build_framework(inst.casebase, inst.preferences, inst.new_case);
        require(frameworks_equal(classic, sequenced).equal(),
                "single-order frameworks diverged at round " + std::to_string(round));
        require(classic_predict(inst.casebase, order, inst.new_case).outcome ==
                    predict(inst.casebase, inst.preferences, inst.new_case).outcome,
                "single-order predictions diverged at round " + std::to_string(round));
    }
    for (int round = 0; round < 500; ++round) {
        testgen::GenConfig cfg;
        cfg.stages_shape = true;
        testgen::Instance inst = testgen::random_instance(rng, cfg);

        ArgumentationFramework staged =
            stages_framework(inst.casebase, StagesMode::ModifiedConcision, inst.new_case);
        ArgumentationFramework sequenced =
            build_framework(inst.casebase, inst.preferences, inst.new_case);
        require(frameworks_equal(staged, sequenced).equal(),
                "modified-stages frameworks diverged at round " + std::to_string(round));
        require(stages_predict(inst.casebase, StagesMode::ModifiedConcision,
                               inst.new_case).outcome ==
                    predict(inst.casebase, inst.preferences, inst.new_case).outcome,
                "modified-stages predictions diverged at round " + std::to_string(round));
    }
}

// --- 07: the two-tier engine is not any single-order run on the motivating
// casebase: both flattenings change the framework and a prediction ---
void check_divergence_witness() {
    Casebase cb = motivating_base();
    Characterisation n1 = two_tier({"d"}, {"a", "b"});
    Characterisation n2 = two_tier({"c"}, {"a"});

    std::vector<std::pair<std::string, SingleOrder>> flattenings;
    flattenings.emplace_back("union superset", SingleOrder::union_superset());
    flattenings.emplace_back("pointwise dominance", SingleOrder::dominance(kTwoTiers));

    for (const auto& [name, order] : flattenings) {
        require(!frameworks_equal(classic_framework(cb, order, n1, "N1"),
                                  build_framework(cb, kTwoTiers, n1, "N1"))
                     .equal(),
                name + " framework unexpectedly matches for N1");

        std::string classic1 = classic_predict(cb, order, n1, "N1").outcome.name;
        std::string classic2 = classic_predict(cb, order, n2, "N2").outcome.name;
        std::string tiered1 = predict(cb, kTwoTiers, n1, "N1").outcome.name;
        std::string tiered2 = predict(cb, kTwoTiers, n2, "N2").outcome.name;
        require(classic1 != tiered1 || classic2 != tiered2,
                name + " agrees on both N1 and N2");
        require(tiered1 == "neg" && tiered2 == "pos", "tiered predictions hold");
        require(classic1 == "pos", name + " misses the high-priority d for N1");
    }
}

// --- 08: the verbatim staged run breaks the nearest-case property that the
// two-order run restores ---
void check_stages_counterexample() {
    Casebase cb = staged_base();
    Characterisation nprime = staged({"a", "b", "c"}, 2);

    Prediction verbatim = stages_predict(cb, StagesMode::Verbatim, nprime, "Nprime");
    require(verbatim.outcome.name == "minus", "verbatim staged run predicts the non-default");

    std::vector<Case> nearest = nearest_cases(cb, kSupersetThenStage, nprime);
    require_equal(case_ids(nearest), {"C1"}, "unique nearest case");
    require(nearest.front().outcome.name == "plus",
            "the nearest case disagrees with the verbatim prediction");

    Prediction sequenced = predict(cb, kSupersetThenStage, nprime, "Nprime");
    require(sequenced.outcome.name == "plus", "two-order run restores the nearest outcome");
}

// --- 09: grounded extensions match subset enumeration ---
void check_grounded_oracle() {
    std::mt19937 rng(9005);
    for (int round = 0; round < 600; ++round) {
        testgen::GenConfig cfg;
        cfg.max_cases = 10;  // 12 arguments with the default and new case
        cfg.allow_incoherent = round % 2 == 1;
        testgen::Instance inst = testgen::random_instance(rng, cfg);
        ArgumentationFramework af =
            build_framework(inst.casebase, inst.preferences, inst.new_case);
        require_equal(grounded_ids(grounded_extension(af)),
                      oracle::grounded_by_enumeration(af),
                      "grounded mismatch at round " + std::to_string(round));
    }
}

// --- 10: framework mining stays near-linear in the order count ---
void check_scaling() {
    SyntheticSpec spec;
    spec.n_cases = 200;
    spec.n_holdout = 0;
    spec.with_stages = false;
    spec.seed = 97;
    SyntheticData base = generate_synthetic(spec);

    std::vector<BenchRow> rows = bench_scaling(base.document, {1, 4}, 7);
    require(rows.size() == 2 && rows[0].orders == 1 && rows[1].orders == 4,
            "benchmark rows are per order count");
    require(rows[0].median_millis > 0.0, "single-order build takes measurable time");
    double ratio = rows[1].median_millis / rows[0].median_millis;
    require(ratio >= 1.0 && ratio <= 8.0,
            "four-order build is " + std::to_string(ratio) + "x the single-order build");
}

// --- 11: on clean synthetic data the engine beats the constant default and
// the kNN baseline matches its closed-form oracle ---
void check_synthetic_sanity() {
    SyntheticSpec spec;
    spec.n_cases = 60;
    spec.n_holdout = 50;
    spec.with_stages = false;
    spec.noise_rate = 0.0;
    spec.seed = 7;
    SyntheticData data = generate_synthetic(spec);
    require(data.clashes.empty(), "a clean generator run has no clashes");

    const Casebase& cb = data.document.casebase;
    const PreferenceSequence& prefs = data.document.preferences;
    Predictor engine = [&](const Characterisation& ch) { return predict(cb, prefs, ch).outcome; };
    Predictor constant = [&](const Characterisation&) { return cb.outcome_for(Polarity::Default); };

    EvaluationReport engine_report =
        evaluate(engine, data.holdout, cb.non_default_outcome, 4);
    EvaluationReport constant_report =
        evaluate(constant, data.holdout, cb.non_default_outcome);
    require(engine_report.accuracy >= constant_report.accuracy,
            "engine accuracy " + std::to_string(engine_report.accuracy) +
                " below the constant default " + std::to_string(constant_report.accuracy));

    for (const Case& query : data.holdout) {
        for (std::size_t k : {1, 3, 5}) {
            require(knn_predict(cb, query.characterisation, k).name ==
                        oracle::knn_by_closed_form(cb, query.characterisation, k).name,
                    "kNN disagrees with the closed form on " + query.id + " at k=" +
                        std::to_string(k));
        }
    }
}

struct Check {
    const char* name;
    double budget_seconds;
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Check> checks = {
        {"worked-example-frameworks", 1.0, check_worked_frameworks},
        {"example-predictions", 1.0, check_example_predictions},
        {"coherent-acyclicity", 30.0, check_acyclicity},
        {"nearest-preferred-agreement", 60.0, check_nearest_preferred},
        {"most-preferred-order-labels", 60.0, check_most_preferred_order},
        {"single-order-and-stages-equivalence", 60.0, check_equivalences},
        {"classic-divergence-witness", 1.0, check_divergence_witness},
        {"stages-concision-counterexample", 1.0, check_stages_counterexample},
        {"grounded-enumeration-oracle", 60.0, check_grounded_oracle},
        {"order-count-scaling", 120.0, check_scaling},
        {"synthetic-and-knn-sanity", 60.0, check_synthetic_sanity},
    };

    std::size_t passed = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            checks[i].run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        if (error.empty() && seconds > checks[i].budget_seconds) {
            error = "over the " + std::to_string(checks[i].budget_seconds) + "s budget";
        }
        bool ok = error.empty();
        passed += ok;
        std::printf("%s  %02zu %-38s %6.2fs\n", ok ? "PASS" : "FAIL", i + 1, checks[i].name,
                    seconds);
        if (!ok) std::printf("      %s\n", error.c_str());
    }
    std::printf("%zu/%zu checks passed\n", passed, checks.size());
    return passed == checks.size() ? 0 : 1;
}
