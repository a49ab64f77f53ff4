// Command-line surface: predict, explain, check, eval, gen, bench.
// Exit codes: 0 success, 1 validation/usage failure, 2 I/O or parse failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "aacbr/engine.hpp"
#include "aacbr/eval.hpp"
#include "aacbr/io.hpp"
#include "aacbr/legacy.hpp"

namespace {

using namespace aacbr;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("cannot write '" + path + "'");
}

// Declares which outcome name plays the default role, swapping the two
// roles when the named outcome currently sits on the non-default side.
void set_default_outcome(Casebase& cb, const std::string& name) {
    if (name == cb.default_outcome) return;
    if (name != cb.non_default_outcome) {
        throw UsageError("unknown outcome '" + name + "' for --default-outcome");
    }
    std::swap(cb.default_outcome, cb.non_default_outcome);
    for (Case& c : cb.cases) c.outcome = cb.outcome_named(c.outcome.name);
    cb.default_case.outcome = cb.outcome_for(Polarity::Default);
}

CasebaseDocument load_document(const std::string& path, const std::string& default_outcome) {
    CasebaseDocument doc = parse_casebase(read_file(path));
    if (!default_outcome.empty()) set_default_outcome(doc.casebase, default_outcome);
    return doc;
}

enum class Variant { Aacbrp, Classic, Stages, StagesModified, Knn };

Variant parse_variant(const std::string& name, bool allow_knn) {
    if (name == "aacbrp") return Variant::Aacbrp;
    if (name == "classic") return Variant::Classic;
    if (name == "stages") return Variant::Stages;
    if (name == "stages-modified") return Variant::StagesModified;
    if (allow_knn && name == "knn") return Variant::Knn;
    throw UsageError("unknown variant '" + name + "'");
}

SingleOrder classic_order(const CasebaseDocument& doc, const std::string& flag) {
    if (flag.empty()) {
        if (doc.preferences.size() == 1) return SingleOrder::component(doc.preferences.at(0));
        throw UsageError("--classic-order is required when the document lists more than one order");
    }
    if (flag == "union") return SingleOrder::union_superset();
    if (flag == "lex") return SingleOrder::dominance(doc.preferences);
    const std::string prefix = "component:";
    if (flag.rfind(prefix, 0) == 0) {
        std::string name = flag.substr(prefix.size());
        for (std::size_t i = 0; i < doc.casebase.schema.size(); ++i) {
            if (doc.casebase.schema[i].name == name) {
                return SingleOrder::component({i, comparator_for(doc.casebase.schema[i].kind)});
            }
        }
        throw UsageError("unknown component '" + name + "' in --classic-order");
    }
    throw UsageError("--classic-order takes component:NAME, union or lex");
}

// One prediction routine shared by predict, explain and eval.
Prediction predict_with(const CasebaseDocument& doc, Variant variant,
                        const SingleOrder* order, const Characterisation& ch,
                        const std::string& id) {
    switch (variant) {
        case Variant::Aacbrp: return predict(doc.casebase, doc.preferences, ch, id);
        case Variant::Classic: return classic_predict(doc.casebase, *order, ch, id);
        case Variant::Stages: return stages_predict(doc.casebase, StagesMode::Verbatim, ch, id);
        case Variant::StagesModified:
            return stages_predict(doc.casebase, StagesMode::ModifiedConcision, ch, id);
        case Variant::Knn: break;
    }
    throw UsageError("variant has no framework semantics");
}

// Runs fn(i) for i in [0, n) across up to `jobs` threads. Exceptions are
// rethrown on the caller thread; results land indexed, so output order is
// the input order.
void map_indexed(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    jobs = std::max<std::size_t>(1, std::min(jobs, n));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += jobs) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (std::thread& w : workers) w.join();
    for (const std::exception_ptr& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

struct PredictArgs {
    std::string casebase_path;
    std::string new_cases_path;
    std::string variant = "aacbrp";
    std::string classic_order_flag;
    std::string default_outcome;
    std::size_t jobs = 1;
    // explain extras
    std::string format = "dot";
    std::string out_dir;
};

int run_predict(const PredictArgs& args) {
    CasebaseDocument doc = load_document(args.casebase_path, args.default_outcome);
    Variant variant = parse_variant(args.variant, false);
    SingleOrder order = SingleOrder::union_superset();
    if (variant == Variant::Classic) order = classic_order(doc, args.classic_order_flag);

    std::vector<NewCase> queries = parse_new_cases(read_file(args.new_cases_path), doc.casebase);
    std::vector<std::string> lines(queries.size());
    map_indexed(queries.size(), args.jobs, [&](std::size_t i) {
        Prediction p =
            predict_with(doc, variant, &order, queries[i].characterisation, queries[i].id);
        lines[i] = queries[i].id + "\t" + p.outcome.name;
    });
    for (const std::string& line : lines) std::cout << line << "\n";
    return 0;
}

int run_explain(const PredictArgs& args) {
    CasebaseDocument doc = load_document(args.casebase_path, args.default_outcome);
    Variant variant = parse_variant(args.variant, false);
    SingleOrder order = SingleOrder::union_superset();
    if (variant == Variant::Classic) order = classic_order(doc, args.classic_order_flag);
    if (args.format != "dot" && args.format != "edges") {
        throw UsageError("--format takes dot or edges");
    }
    ExportFormat format = args.format == "dot" ? ExportFormat::Dot : ExportFormat::EdgeList;
    if (!args.out_dir.empty()) std::filesystem::create_directories(args.out_dir);

    std::vector<NewCase> queries = parse_new_cases(read_file(args.new_cases_path), doc.casebase);
    std::vector<Prediction> predictions(queries.size());
    map_indexed(queries.size(), args.jobs, [&](std::size_t i) {
        predictions[i] =
            predict_with(doc, variant, &order, queries[i].characterisation, queries[i].id);
    });

    for (std::size_t i = 0; i < queries.size(); ++i) {
        const Prediction& p = predictions[i];
        std::cout << queries[i].id << "\t" << p.outcome.name << "\n";
        for (std::size_t layer = 0; layer < p.grounded.layers.size(); ++layer) {
            std::cout << "  G" << layer << ":";
            for (const ArgumentRef& a : p.grounded.layers[layer]) std::cout << " " << a.id;
            std::cout << "\n";
        }
        std::string exported = export_framework(p.framework, format, &doc.casebase,
                                                &queries[i].characterisation);
        if (args.out_dir.empty()) {
            std::cout << exported;
        } else {
            std::string ext = format == ExportFormat::Dot ? ".dot" : ".edges";
            write_file((std::filesystem::path(args.out_dir) / (queries[i].id + ext)).string(),
                       exported);
        }
    }
    return 0;
}

struct CheckArgs {
    std::string casebase_path;
    std::string default_outcome;
};

int run_check(const CheckArgs& args) {
    CasebaseDocument doc = load_document(args.casebase_path, args.default_outcome);
    const Casebase& cb = doc.casebase;
    std::cout << "cases: " << cb.cases.size() << "\n";
    std::cout << "orders: " << doc.preferences.size() << "\n";

    CoherenceReport coherence = is_coherent(cb, doc.preferences);
    if (coherence.coherent) {
        std::cout << "coherent: yes\n";
    } else {
        std::cout << "coherent: no\n";
        for (const auto& [a, b] : coherence.clashes) {
            std::cout << "  clash: " << a << " / " << b << "\n";
        }
    }

    std::vector<RegularityViolation> irregular = check_regular(cb, doc.preferences);
    if (irregular.empty()) {
        std::cout << "regular: yes\n";
        return 0;
    }
    std::cout << "regular: no\n";
    for (const RegularityViolation& v : irregular) {
        std::cout << "  case " << v.case_id << " does not dominate the default on order "
                  << v.order + 1 << "\n";
    }
    return 1;
}

struct EvalArgs {
    std::string train_path;
    std::string test_path;
    std::string variant = "aacbrp";
    std::string classic_order_flag;
    std::string default_outcome;
    std::string positive;
    std::size_t k = 3;
    std::size_t jobs = 1;
    bool machine = false;
};

int run_eval(const EvalArgs& args) {
    CasebaseDocument doc = load_document(args.train_path, args.default_outcome);
    Variant variant = parse_variant(args.variant, true);
    SingleOrder order = SingleOrder::union_superset();
    if (variant == Variant::Classic) order = classic_order(doc, args.classic_order_flag);

    std::vector<Case> test = parse_labelled_cases(read_file(args.test_path), doc.casebase);
    // The positive class follows the non-default outcome unless overridden.
    std::string positive = args.positive.empty() ? doc.casebase.non_default_outcome : args.positive;
    if (positive != doc.casebase.default_outcome && positive != doc.casebase.non_default_outcome) {
        throw UsageError("unknown outcome '" + positive + "' for --positive");
    }

    Predictor predictor;
    if (variant == Variant::Knn) {
        std::size_t k = args.k;
        predictor = [&doc, k](const Characterisation& ch) {
            return knn_predict(doc.casebase, ch, k);
        };
    } else {
        predictor = [&doc, variant, &order](const Characterisation& ch) {
            return predict_with(doc, variant, &order, ch, "N").outcome;
        };
    }
    EvaluationReport report = evaluate(predictor, test, positive, args.jobs);
    std::cout << (args.machine ? format_report_kv(report) : format_report_table(report));
    return 0;
}

struct GenArgs {
    std::size_t cases = 60;
    std::size_t holdout = 50;
    int max_stage = 3;
    bool flat = false;
    double noise = 0.0;
    std::uint64_t seed = 1;
    std::string out;
    std::string holdout_out;
};

int run_gen(const GenArgs& args) {
    SyntheticSpec spec;
    spec.n_cases = args.cases;
    spec.n_holdout = args.holdout;
    spec.max_stage = args.max_stage;
    spec.with_stages = !args.flat;
    spec.noise_rate = args.noise;
    spec.seed = args.seed;
    SyntheticData data = generate_synthetic(spec);

    std::string document = serialise_casebase(data.document);
    if (args.out.empty()) {
        std::cout << document;
    } else {
        write_file(args.out, document);
    }
    if (!args.holdout_out.empty()) {
        write_file(args.holdout_out,
                   serialise_labelled_cases(data.holdout, data.document.casebase));
    }
    for (const auto& [a, b] : data.clashes) {
        std::cerr << "clash: " << a << " / " << b << "\n";
    }
    return 0;
}

struct BenchArgs {
    std::size_t cases = 200;
    std::vector<std::size_t> orders = {1, 2, 4};
    std::size_t repeats = 7;
    std::uint64_t seed = 1;
};

int run_bench(const BenchArgs& args) {
    SyntheticSpec spec;
    spec.n_cases = args.cases;
    spec.n_holdout = 0;
    spec.with_stages = false;
    spec.seed = args.seed;
    SyntheticData base = generate_synthetic(spec);

    std::vector<BenchRow> rows = bench_scaling(base.document, args.orders, args.repeats);
    std::cout << "orders\tmedian_ms\tedges\n";
    for (const BenchRow& row : rows) {
        std::cout << row.orders << "\t" << row.median_millis << "\t" << row.edges << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Case-based reasoning over preference-ordered casebases"};
    app.require_subcommand(1);

    PredictArgs predict_args;
    CLI::App* predict_cmd = app.add_subcommand("predict", "Predict outcomes for new cases");
    predict_cmd->add_option("--casebase", predict_args.casebase_path, "Casebase document")
        ->required();
    predict_cmd->add_option("--new-cases", predict_args.new_cases_path, "New-case document")
        ->required();
    predict_cmd->add_option("--variant", predict_args.variant,
                            "aacbrp, classic, stages or stages-modified");
    predict_cmd->add_option("--classic-order", predict_args.classic_order_flag,
                            "component:NAME, union or lex");
    predict_cmd->add_option("--default-outcome", predict_args.default_outcome,
                            "Outcome name to treat as the default");
    predict_cmd->add_option("--jobs", predict_args.jobs, "Concurrent predictions");

    PredictArgs explain_args;
    CLI::App* explain_cmd =
        app.add_subcommand("explain", "Predict and export the argumentation graphs");
    explain_cmd->add_option("--casebase", explain_args.casebase_path, "Casebase document")
        ->required();
    explain_cmd->add_option("--new-cases", explain_args.new_cases_path, "New-case document")
        ->required();
    explain_cmd->add_option("--variant", explain_args.variant,
                            "aacbrp, classic, stages or stages-modified");
    explain_cmd->add_option("--classic-order", explain_args.classic_order_flag,
                            "component:NAME, union or lex");
    explain_cmd->add_option("--default-outcome", explain_args.default_outcome,
                            "Outcome name to treat as the default");
    explain_cmd->add_option("--jobs", explain_args.jobs, "Concurrent predictions");
    explain_cmd->add_option("--format", explain_args.format, "dot or edges");
    explain_cmd->add_option("--out-dir", explain_args.out_dir,
                            "Write one graph file per new case instead of stdout");

    CheckArgs check_args;
    CLI::App* check_cmd = app.add_subcommand("check", "Coherence and regularity diagnostics");
    check_cmd->add_option("--casebase", check_args.casebase_path, "Casebase document")->required();
    check_cmd->add_option("--default-outcome", check_args.default_outcome,
                          "Outcome name to treat as the default");

    EvalArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a variant on labelled cases");
    eval_cmd->add_option("--casebase", eval_args.train_path, "Training casebase document")
        ->required();
    eval_cmd->add_option("--test", eval_args.test_path, "Labelled test cases")->required();
    eval_cmd->add_option("--variant", eval_args.variant,
                         "aacbrp, classic, stages, stages-modified or knn");
    eval_cmd->add_option("--classic-order", eval_args.classic_order_flag,
                         "component:NAME, union or lex");
    eval_cmd->add_option("--default-outcome", eval_args.default_outcome,
                         "Outcome name to treat as the default");
    eval_cmd->add_option("--positive", eval_args.positive,
                         "Positive class (defaults to the non-default outcome)");
    eval_cmd->add_option("--k", eval_args.k, "Neighbour count for the knn variant");
    eval_cmd->add_option("--jobs", eval_args.jobs, "Concurrent predictions");
    eval_cmd->add_flag("--machine", eval_args.machine, "Key-value output");

    GenArgs gen_args;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic casebase");
    gen_cmd->add_option("--cases", gen_args.cases, "Training cases");
    gen_cmd->add_option("--holdout", gen_args.holdout, "Held-out labelled cases");
    gen_cmd->add_option("--max-stage", gen_args.max_stage, "Longest stage prefix");
    gen_cmd->add_flag("--flat", gen_args.flat, "Skip the stage component");
    gen_cmd->add_option("--noise", gen_args.noise, "Training label flip rate")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen_args.seed, "Generator seed");
    gen_cmd->add_option("--out", gen_args.out, "Casebase path (stdout when omitted)");
    gen_cmd->add_option("--holdout-out", gen_args.holdout_out, "Held-out cases path");

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Time framework mining per order count");
    bench_cmd->add_option("--cases", bench_args.cases, "Casebase size");
    bench_cmd->add_option("--orders", bench_args.orders, "Order counts to time");
    bench_cmd->add_option("--repeats", bench_args.repeats, "Runs per order count");
    bench_cmd->add_option("--seed", bench_args.seed, "Generator seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*predict_cmd) return run_predict(predict_args);
        if (*explain_cmd) return run_explain(explain_args);
        if (*check_cmd) return run_check(check_args);
        if (*eval_cmd) return run_eval(eval_args);
        if (*gen_cmd) return run_gen(gen_args);
        if (*bench_cmd) return run_bench(bench_args);
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
