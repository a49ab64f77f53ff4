#include "aacbr/eval.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aacbr/engine.hpp"

namespace aacbr {

EvaluationReport metrics_from_confusion(std::size_t tp, std::size_t fp, std::size_t fn,
                                        std::size_t tn, const std::string& positive_class) {
    std::size_t total = tp + fp + fn + tn;
    if (total == 0) throw std::invalid_argument("empty confusion matrix");

    EvaluationReport r;
    r.tp = tp;
    r.fp = fp;
    r.fn = fn;
    r.tn = tn;
    r.positive_class = positive_class;
    r.accuracy = static_cast<double>(tp + tn) / static_cast<double>(total);
    if (tp + fp == 0) {
        r.precision_defined = false;
    } else {
        r.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    }
    if (tp + fn == 0) {
        r.recall_defined = false;
    } else {
        r.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    }
    if (!r.precision_defined || !r.recall_defined || r.precision + r.recall == 0.0) {
        r.f1_defined = false;
    } else {
        r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
    }
    return r;
}

EvaluationReport evaluate(const Predictor& predictor, const std::vector<Case>& test,
                          const std::string& positive_class, std::size_t jobs) {
    if (test.empty()) throw std::invalid_argument("empty test set");

    std::vector<Outcome> predicted(test.size());
    jobs = std::max<std::size_t>(1, std::min(jobs, test.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < test.size(); ++i) {
            predicted[i] = predictor(test[i].characterisation);
        }
    } else {
        std::vector<std::thread> workers;
        for (std::size_t t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t i = t; i < test.size(); i += jobs) {
                    predicted[i] = predictor(test[i].characterisation);
                }
            });
        }
        for (std::thread& w : workers) w.join();
    }

    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (std::size_t i = 0; i < test.size(); ++i) {
        bool actual_positive = test[i].outcome.name == positive_class;
        bool predicted_positive = predicted[i].name == positive_class;
        if (predicted_positive) {
            actual_positive ? ++tp : ++fp;
        } else {
            actual_positive ? ++fn : ++tn;
        }
    }
    return metrics_from_confusion(tp, fp, fn, tn, positive_class);
}

static std::string fixed3(double value) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << value;
    return out.str();
}

std::string format_report_table(const EvaluationReport& r) {
    std::ostringstream out;
    out << "positive class: " << r.positive_class << "\n";
    out << "confusion: tp=" << r.tp << " fp=" << r.fp << " fn=" << r.fn << " tn=" << r.tn << "\n";
    out << "metric     value\n";
    out << "accuracy   " << fixed3(r.accuracy) << "\n";
    out << "precision  " << fixed3(r.precision) << (r.precision_defined ? "" : "  (undefined)")
        << "\n";
    out << "recall     " << fixed3(r.recall) << (r.recall_defined ? "" : "  (undefined)") << "\n";
    out << "f1         " << fixed3(r.f1) << (r.f1_defined ? "" : "  (undefined)") << "\n";
    return out.str();
}

std::string format_report_kv(const EvaluationReport& r) {
    std::ostringstream out;
    out << "positive=" << r.positive_class << "\n";
    out << "tp=" << r.tp << "\nfp=" << r.fp << "\nfn=" << r.fn << "\ntn=" << r.tn << "\n";
    out << "accuracy=" << fixed3(r.accuracy) << "\n";
    out << "precision=" << fixed3(r.precision) << "\n";
    out << "precision_defined=" << (r.precision_defined ? 1 : 0) << "\n";
    out << "recall=" << fixed3(r.recall) << "\n";
    out << "recall_defined=" << (r.recall_defined ? 1 : 0) << "\n";
    out << "f1=" << fixed3(r.f1) << "\n";
    out << "f1_defined=" << (r.f1_defined ? 1 : 0) << "\n";
    return out.str();
}

namespace {

// One-hot vectorisation bound to a training casebase.
struct Vectoriser {
    // Per component: the ordered column values (feature names, stage values
    // or integer values rendered as strings).
    std::vector<std::vector<std::string>> columns;

    static Vectoriser fit(const Casebase& train) {
        Vectoriser v;
        v.columns.resize(train.schema.size());
        for (std::size_t i = 0; i < train.schema.size(); ++i) {
            const ComponentSchema& spec = train.schema[i];
            if (spec.kind == ComponentKind::StagePrefix) {
                for (int s = 0; s <= spec.max_stage; ++s) {
                    v.columns[i].push_back(std::to_string(s));
                }
                continue;
            }
            std::vector<std::string> values;
            for (const Case& c : train.cases) {
                const ComponentValue& value = c.characterisation.components[i];
                if (const auto* fs = std::get_if<FeatureSet>(&value)) {
                    values.insert(values.end(), fs->features.begin(), fs->features.end());
                } else if (const auto* iv = std::get_if<IntValue>(&value)) {
                    values.push_back(std::to_string(iv->value));
                }
            }
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            v.columns[i] = std::move(values);
        }
        return v;
    }

    std::vector<bool> encode(const Characterisation& ch) const {
        std::vector<bool> bits;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const ComponentValue& value = ch.components[i];
            if (const auto* fs = std::get_if<FeatureSet>(&value)) {
                for (const std::string& column : columns[i]) bits.push_back(fs->contains(column));
            } else {
                std::string rendered = render_value(value);
                for (const std::string& column : columns[i]) bits.push_back(column == rendered);
            }
        }
        return bits;
    }
};

std::size_t hamming(const std::vector<bool>& a, const std::vector<bool>& b) {
    std::size_t distance = 0;
    for (std::size_t i = 0; i < a.size(); ++i) distance += a[i] != b[i];
    return distance;
}

}  // namespace

Outcome knn_predict(const Casebase& train, const Characterisation& query, std::size_t k) {
    if (train.cases.empty()) throw std::invalid_argument("knn needs a non-empty casebase");
    if (k == 0) throw std::invalid_argument("knn needs k >= 1");

    Vectoriser v = Vectoriser::fit(train);
    std::vector<bool> q = v.encode(query);

    struct Scored {
        std::size_t distance;
        const Case* c;
    };
    std::vector<Scored> scored;
    for (const Case& c : train.cases) {
        scored.push_back({hamming(q, v.encode(c.characterisation)), &c});
    }
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.c->id < b.c->id;
    });

    std::size_t take = std::min(k, scored.size());
    std::map<std::string, std::size_t> votes;
    for (std::size_t i = 0; i < take; ++i) ++votes[scored[i].c->outcome.name];
    // The closest case (lowest id among ties) settles split votes.
    Outcome best = scored[0].c->outcome;
    for (std::size_t i = 0; i < take; ++i) {
        if (votes[scored[i].c->outcome.name] > votes[best.name]) best = scored[i].c->outcome;
    }
    return best;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

bool chance(std::mt19937_64& rng, double rate) {
    return draw(rng, 1000000) < static_cast<std::uint64_t>(rate * 1000000.0);
}

std::string padded(const char* prefix, std::size_t index, std::size_t width) {
    std::string digits = std::to_string(index);
    while (digits.size() < width) digits.insert(digits.begin(), '0');
    return prefix + digits;
}

}  // namespace

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
    std::mt19937_64 rng(spec.seed);

    std::vector<std::string> high_tier, low_tier;
    for (int i = 0; i < 10; ++i) {
        high_tier.push_back(padded("pa", static_cast<std::size_t>(i), 1));
        low_tier.push_back(padded("pro", static_cast<std::size_t>(i), 1));
    }

    // Hidden monotone signal: three high-tier features.
    std::vector<std::string> signal;
    while (signal.size() < 3) {
        std::string pick = high_tier[draw(rng, high_tier.size())];
        if (std::find(signal.begin(), signal.end(), pick) == signal.end()) signal.push_back(pick);
    }

    SyntheticData data;
    Casebase& cb = data.document.casebase;
    cb.schema.push_back({"pa", ComponentKind::FeatureSet, 0});
    cb.schema.push_back({"pro", ComponentKind::FeatureSet, 0});
    if (spec.with_stages) cb.schema.push_back({"stage", ComponentKind::StagePrefix, spec.max_stage});
    cb.default_outcome = "sd";
    cb.non_default_outcome = "pd";
    cb.default_case.id = "default";
    cb.default_case.outcome = cb.outcome_for(Polarity::Default);
    for (const ComponentSchema& component : cb.schema) {
        cb.default_case.characterisation.components.push_back(least_value(component));
    }
    for (std::size_t i = 0; i < cb.schema.size(); ++i) {
        data.document.preferences.orders.push_back({i, comparator_for(cb.schema[i].kind)});
    }

    auto draw_subset = [&](const std::vector<std::string>& tier) {
        std::vector<std::string> picked;
        for (const std::string& feature : tier) {
            if (draw(rng, 4) == 0) picked.push_back(feature);
        }
        return FeatureSet(std::move(picked));
    };
    auto rule_label = [&](const FeatureSet& high) {
        for (const std::string& feature : signal) {
            if (high.contains(feature)) return Polarity::NonDefault;
        }
        return Polarity::Default;
    };
    auto make_case = [&](const std::string& id, bool with_noise) {
        Case c;
        c.id = id;
        FeatureSet high = draw_subset(high_tier);
        c.characterisation.components.push_back(high);
        c.characterisation.components.push_back(draw_subset(low_tier));
        if (spec.with_stages) {
            c.characterisation.components.push_back(
                StageValue{static_cast<int>(draw(rng, static_cast<std::uint64_t>(spec.max_stage) + 1))});
        }
        Polarity label = rule_label(high);
        if (with_noise && chance(rng, spec.noise_rate)) {
            label = label == Polarity::Default ? Polarity::NonDefault : Polarity::Default;
        }
        c.outcome = cb.outcome_for(label);
        return c;
    };

    std::map<std::string, std::pair<std::string, std::string>> by_shape;  // shape -> id, outcome
    for (std::size_t i = 1; i <= spec.n_cases; ++i) {
        Case c = make_case(padded("T", i, 3), true);
        std::string shape = render_characterisation(c.characterisation);
        auto [it, inserted] = by_shape.try_emplace(shape, c.id, c.outcome.name);
        if (!inserted && it->second.second != c.outcome.name) {
            data.clashes.emplace_back(it->second.first, c.id);
        }
        cb.cases.push_back(std::move(c));
    }
    for (std::size_t i = 1; i <= spec.n_holdout; ++i) {
        data.holdout.push_back(make_case(padded("H", i, 3), false));
    }
    return data;
}

CasebaseDocument replicate_orders(const CasebaseDocument& base, std::size_t order_count) {
    if (order_count == 0) throw std::invalid_argument("need at least one order");
    std::vector<std::size_t> feature_slots;
    for (std::size_t i = 0; i < base.casebase.schema.size(); ++i) {
        if (base.casebase.schema[i].kind == ComponentKind::FeatureSet) feature_slots.push_back(i);
    }
    if (feature_slots.empty()) {
        throw std::invalid_argument("replication needs a feature-set component");
    }

    CasebaseDocument doc;
    Casebase& cb = doc.casebase;
    cb.default_outcome = base.casebase.default_outcome;
    cb.non_default_outcome = base.casebase.non_default_outcome;
    for (std::size_t j = 0; j < order_count; ++j) {
        cb.schema.push_back({padded("tier", j, 1), ComponentKind::FeatureSet, 0});
        doc.preferences.orders.push_back({j, ComparatorKind::SupersetOfFeatures});
    }

    auto replicate = [&](const Characterisation& ch) {
        Characterisation out;
        for (std::size_t j = 0; j < order_count; ++j) {
            const auto& source =
                std::get<FeatureSet>(ch.components[feature_slots[j % feature_slots.size()]]);
            std::vector<std::string> renamed;
            for (const std::string& feature : source.features) {
                renamed.push_back(padded("o", j, 1) + "_" + feature);
            }
            out.components.push_back(FeatureSet(std::move(renamed)));
        }
        return out;
    };

    cb.default_case.id = base.casebase.default_case.id;
    cb.default_case.characterisation = replicate(base.casebase.default_case.characterisation);
    cb.default_case.outcome = cb.outcome_for(Polarity::Default);
    for (const Case& c : base.casebase.cases) {
        cb.cases.push_back({c.id, replicate(c.characterisation), c.outcome});
    }
    return doc;
}

std::vector<BenchRow> bench_scaling(const CasebaseDocument& base,
                                    const std::vector<std::size_t>& order_counts,
                                    std::size_t repeats) {
    if (repeats == 0) throw std::invalid_argument("need at least one repeat");
    std::vector<BenchRow> rows;
    for (std::size_t m : order_counts) {
        CasebaseDocument doc = replicate_orders(base, m);

        // Fixed probe new case: the componentwise union over the casebase,
        // so it dominates every argument.
        Characterisation probe;
        for (std::size_t j = 0; j < doc.casebase.schema.size(); ++j) {
            std::vector<std::string> all;
            for (const Case& c : doc.casebase.cases) {
                const auto& fs = std::get<FeatureSet>(c.characterisation.components[j]);
                all.insert(all.end(), fs.features.begin(), fs.features.end());
            }
            probe.components.push_back(FeatureSet(std::move(all)));
        }

        BenchRow row;
        row.orders = m;
        std::vector<double> times;
        for (std::size_t r = 0; r < repeats; ++r) {
            auto start = std::chrono::steady_clock::now();
            ArgumentationFramework af = build_framework(doc.casebase, doc.preferences, probe);
            auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
            row.edges = af.attacks.size();
        }
        std::sort(times.begin(), times.end());
        row.median_millis = times[times.size() / 2];
        rows.push_back(row);
    }
    return rows;
}

}  // namespace aacbr
