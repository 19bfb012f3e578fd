#include "inqmc/inqmc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDisagree = 3;

// Thrown to leave a command with a diagnostic and exit status 2.
struct Failure {
    std::string message;
};

template <class T, void (*Free)(T*)>
struct HandleDeleter {
    void operator()(T* p) const { Free(p); }
};

using Model = std::unique_ptr<inqmc_model, HandleDeleter<inqmc_model, inqmc_model_free>>;
using FormulaHandle = std::unique_ptr<inqmc_formula, HandleDeleter<inqmc_formula, inqmc_formula_free>>;
using QbfHandle = std::unique_ptr<inqmc_qbf, HandleDeleter<inqmc_qbf, inqmc_qbf_free>>;
using Instance = std::unique_ptr<inqmc_instance, HandleDeleter<inqmc_instance, inqmc_instance_free>>;

void require(inqmc_status status, const std::string& context)
{
    if (status == INQMC_OK) return;
    std::string msg = context + ": " + inqmc_status_name(status);
    const char* detail = inqmc_last_error();
    if (detail && *detail) msg += ": " + std::string(detail);
    throw Failure{msg};
}

std::string take_string(char* s)
{
    std::string out = s ? s : "";
    inqmc_string_free(s);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{path + ": cannot open"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{path + ": cannot write"};
    out << content;
    if (!out) throw Failure{path + ": write failed"};
}

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

Model load_model(const std::string& path)
{
    inqmc_model* m = nullptr;
    require(inqmc_model_parse(read_file(path).c_str(), &m), path);
    return Model(m);
}

FormulaHandle parse_formula(const std::string& text, const std::string& origin)
{
    inqmc_formula* f = nullptr;
    require(inqmc_formula_parse(text.c_str(), &f), origin);
    return FormulaHandle(f);
}

QbfHandle load_qbf(const std::string& path, bool rename)
{
    inqmc_qbf* q = nullptr;
    require(inqmc_qbf_parse(read_file(path).c_str(), rename ? 1 : 0, &q), path);
    return QbfHandle(q);
}

Instance reduce(const inqmc_qbf* q, const std::string& origin)
{
    inqmc_instance* inst = nullptr;
    require(inqmc_reduce(q, &inst), origin);
    return Instance(inst);
}

// Every report carries the same keys; those a command does not compute are null.
nlohmann::json empty_report()
{
    return nlohmann::json{{"result", nullptr},          {"nodes_visited", nullptr}, {"l", nullptr},
                          {"matrix_size", nullptr},     {"translated_size", nullptr}, {"ratio", nullptr}};
}

void fill_size(nlohmann::json& report, const inqmc_size_report& r)
{
    report["l"] = r.l;
    report["matrix_size"] = r.matrix_size;
    report["translated_size"] = r.translated_size;
    report["ratio"] = r.ratio;
}

void print_size(const inqmc_size_report& r)
{
    std::cout << "l " << r.l << "\n"
              << "matrix_size " << r.matrix_size << "\n"
              << "translated_size " << r.translated_size << "\n"
              << "ratio " << r.ratio << "\n"
              << "bound " << r.bound_constant << (r.violation ? " EXCEEDED" : " ok") << "\n";
}

struct CheckOptions {
    std::string model;
    std::string state;
    std::optional<std::string> formula;
    std::optional<std::string> formula_file;
    bool naive = false;
    bool json = false;
};

int run_check(const CheckOptions& o)
{
    const Model model = load_model(o.model);
    const FormulaHandle formula = o.formula ? parse_formula(*o.formula, "formula")
                                            : parse_formula(read_file(*o.formula_file), *o.formula_file);
    int supported = 0;
    inqmc_check_stats stats{};
    require(inqmc_check(model.get(), trim(o.state).c_str(), formula.get(), o.naive ? 0 : 1, &supported, &stats),
            "check");
    const char* verdict = supported ? "SUPPORTED" : "NOT-SUPPORTED";
    if (o.json) {
        nlohmann::json report = empty_report();
        report["result"] = verdict;
        report["nodes_visited"] = stats.nodes_visited;
        std::cout << report.dump() << "\n";
    } else {
        std::cout << verdict << "\n"
                  << "nodes_visited " << stats.nodes_visited << "\n"
                  << "cache_hits " << stats.cache_hits << "\n";
    }
    return supported ? 0 : 1;
}

struct ReduceOptions {
    std::string qbf;
    std::string out;
    bool rename = false;
    bool json = false;
};

int run_reduce(const ReduceOptions& o)
{
    const QbfHandle q = load_qbf(o.qbf, o.rename);
    const Instance inst = reduce(q.get(), o.qbf);

    inqmc_model* m = nullptr;
    require(inqmc_instance_model(inst.get(), &m), "reduce");
    const Model model(m);
    inqmc_formula* f = nullptr;
    require(inqmc_instance_formula(inst.get(), &f), "reduce");
    const FormulaHandle formula(f);
    char* raw = nullptr;

    require(inqmc_model_render(model.get(), &raw), "reduce");
    write_file(o.out + ".im", take_string(raw));
    require(inqmc_instance_state(inst.get(), &raw), "reduce");
    write_file(o.out + ".state", take_string(raw) + "\n");
    require(inqmc_formula_render(formula.get(), &raw), "reduce");
    write_file(o.out + ".formula", take_string(raw) + "\n");

    inqmc_size_report r{};
    require(inqmc_instance_size_report(inst.get(), 0.0, &r), "reduce");
    if (o.json) {
        nlohmann::json report = empty_report();
        fill_size(report, r);
        std::cout << report.dump() << "\n";
    } else {
        print_size(r);
    }
    return 0;
}

struct StatsOptions {
    std::string qbf;
    bool rename = false;
    double bound = 0.0;
    bool json = false;
};

int run_stats(const StatsOptions& o)
{
    const QbfHandle q = load_qbf(o.qbf, o.rename);
    const Instance inst = reduce(q.get(), o.qbf);
    inqmc_size_report r{};
    require(inqmc_instance_size_report(inst.get(), o.bound, &r), "stats");
    if (o.json) {
        nlohmann::json report = empty_report();
        report["result"] = r.violation ? "EXCEEDED" : "WITHIN-BOUND";
        fill_size(report, r);
        std::cout << report.dump() << "\n";
    } else {
        print_size(r);
    }
    return 0;
}

struct EvalOptions {
    std::string qbf;
    bool rename = false;
    bool json = false;
};

int run_qbf_eval(const EvalOptions& o)
{
    const QbfHandle q = load_qbf(o.qbf, o.rename);
    int value = 0;
    require(inqmc_qbf_eval(q.get(), &value), o.qbf);
    if (o.json) {
        nlohmann::json report = empty_report();
        report["result"] = value ? "TRUE" : "FALSE";
        report["l"] = inqmc_qbf_vars(q.get());
        std::cout << report.dump() << "\n";
    } else {
        std::cout << (value ? "TRUE" : "FALSE") << "\n";
    }
    return value ? 0 : 1;
}

struct VerifyOptions {
    std::optional<std::string> qbf;
    bool rename = false;
    std::size_t random = 0;
    std::uint64_t seed = 1;
    std::size_t max_vars = 4;
    std::size_t matrix_nodes = 12;
    unsigned jobs = 1;
    bool json = false;
};

std::string verdict(const inqmc_verify_result& r)
{
    if (!r.agree) return "DISAGREE";
    return r.qbf_value ? "AGREE(true)" : "AGREE(false)";
}

int verify_one(const VerifyOptions& o)
{
    const QbfHandle q = load_qbf(*o.qbf, o.rename);
    inqmc_verify_result r{};
    require(inqmc_verify(q.get(), &r), *o.qbf);
    if (o.json) {
        nlohmann::json report = empty_report();
        report["result"] = verdict(r);
        report["nodes_visited"] = r.stats.nodes_visited;
        report["l"] = inqmc_qbf_vars(q.get());
        std::cout << report.dump() << "\n";
    } else {
        std::cout << verdict(r) << "\n";
    }
    return r.agree ? 0 : kExitDisagree;
}

// Case i of the sweep uses seed + i and cycles l through 1..max_vars.
int verify_random(const VerifyOptions& o)
{
    if (o.max_vars == 0 || o.matrix_nodes == 0) throw Failure{"--max-vars and --matrix-nodes must be positive"};
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> disagreements{0};
    std::atomic<std::size_t> truths{0};
    std::vector<std::string> errors(o.jobs);

    auto worker = [&](unsigned id) {
        for (std::size_t i = next++; i < o.random; i = next++) {
            inqmc_qbf* raw = nullptr;
            if (inqmc_qbf_random(o.seed + i, 1 + i % o.max_vars, o.matrix_nodes, &raw) != INQMC_OK) {
                errors[id] = inqmc_last_error();
                return;
            }
            const QbfHandle q(raw);
            inqmc_verify_result r{};
            if (inqmc_verify(q.get(), &r) != INQMC_OK) {
                errors[id] = inqmc_last_error();
                return;
            }
            if (!r.agree) {
                ++disagreements;
                char* text = nullptr;
                inqmc_qbf_render(q.get(), &text);
                std::cerr << "DISAGREE: " << take_string(text) << "\n";
            }
            if (r.qbf_value) ++truths;
        }
    };

    std::vector<std::thread> pool;
    for (unsigned id = 0; id < o.jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (!e.empty()) throw Failure{"verify: " + e};
    }

    const bool agree = disagreements == 0;
    if (o.json) {
        nlohmann::json report = empty_report();
        report["result"] = agree ? "AGREE" : "DISAGREE";
        std::cout << report.dump() << "\n";
    } else {
        std::cout << (agree ? "AGREE" : "DISAGREE") << " cases " << o.random << " true " << truths.load()
                  << " disagreements " << disagreements.load() << "\n";
    }
    return agree ? 0 : kExitDisagree;
}

struct RandomModelOptions {
    std::uint64_t seed = 0;
    std::size_t worlds = 3;
    std::size_t atoms = 2;
    std::size_t max_generators = 2;
};

int run_random_model(const RandomModelOptions& o)
{
    inqmc_model* raw = nullptr;
    require(inqmc_model_random(o.seed, o.worlds, o.atoms, o.max_generators, &raw), "random-model");
    const Model model(raw);
    char* text = nullptr;
    require(inqmc_model_render(model.get(), &text), "random-model");
    std::cout << take_string(text);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Support checker for inquisitive modal logic and TQBF reduction toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(inqmc_version()));
    int status = 0;

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Decide whether a state supports a formula in a model");
    check_cmd->add_option("--model", check.model, "Model file")->required();
    check_cmd->add_option("--state", check.state, "State bitstring, one character per world")->required();
    auto* inline_formula = check_cmd->add_option("--formula", check.formula, "Formula text");
    auto* file_formula = check_cmd->add_option("--formula-file", check.formula_file, "File holding the formula");
    inline_formula->excludes(file_formula);
    check_cmd->add_flag("--naive", check.naive, "Use the uncached evaluator");
    check_cmd->add_flag("--json", check.json, "Emit a JSON report");
    check_cmd->callback([&] {
        if (!check.formula && !check.formula_file) throw CLI::RequiredError("--formula or --formula-file");
        status = run_check(check);
    });

    ReduceOptions red;
    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a QBF to a model checking instance");
    reduce_cmd->add_option("--qbf", red.qbf, "QBF file")->required();
    reduce_cmd->add_option("--out", red.out, "Output stem for .im, .state and .formula")->required();
    reduce_cmd->add_flag("--rename", red.rename, "Rename prefix variables to x0, x1, ...");
    reduce_cmd->add_flag("--json", red.json, "Emit a JSON report");
    reduce_cmd->callback([&] { status = run_reduce(red); });

    EvalOptions ev;
    auto* eval_cmd = app.add_subcommand("qbf-eval", "Evaluate a QBF by brute force");
    eval_cmd->add_option("--qbf", ev.qbf, "QBF file")->required();
    eval_cmd->add_flag("--rename", ev.rename, "Rename prefix variables to x0, x1, ...");
    eval_cmd->add_flag("--json", ev.json, "Emit a JSON report");
    eval_cmd->callback([&] { status = run_qbf_eval(ev); });

    VerifyOptions ver;
    auto* verify_cmd = app.add_subcommand("verify", "Compare brute-force evaluation with reduce-then-check");
    auto* qbf_opt = verify_cmd->add_option("--qbf", ver.qbf, "QBF file");
    auto* random_opt = verify_cmd->add_option("--random", ver.random, "Number of random QBFs to verify");
    qbf_opt->excludes(random_opt);
    verify_cmd->add_flag("--rename", ver.rename, "Rename prefix variables to x0, x1, ...");
    verify_cmd->add_option("--seed", ver.seed, "First seed of the random sweep");
    verify_cmd->add_option("--max-vars", ver.max_vars, "Largest number of variables in the sweep");
    verify_cmd->add_option("--matrix-nodes", ver.matrix_nodes, "Matrix node budget in the sweep");
    verify_cmd->add_option("--jobs", ver.jobs, "Worker threads for the sweep")->check(CLI::Range(1u, 256u));
    verify_cmd->add_flag("--json", ver.json, "Emit a JSON report");
    verify_cmd->callback([&] {
        if (ver.qbf) {
            status = verify_one(ver);
        } else if (ver.random > 0) {
            status = verify_random(ver);
        } else {
            throw CLI::RequiredError("--qbf or --random");
        }
    });

    StatsOptions st;
    auto* stats_cmd = app.add_subcommand("stats", "Report the size of the reduced formula");
    stats_cmd->add_option("--qbf", st.qbf, "QBF file")->required();
    stats_cmd->add_flag("--rename", st.rename, "Rename prefix variables to x0, x1, ...");
    stats_cmd->add_option("--bound", st.bound, "Ratio bound; 0 selects the default");
    stats_cmd->add_flag("--json", st.json, "Emit a JSON report");
    stats_cmd->callback([&] { status = run_stats(st); });

    RandomModelOptions rm;
    auto* random_cmd = app.add_subcommand("random-model", "Print a random model");
    random_cmd->add_option("--seed", rm.seed, "Generator seed");
    random_cmd->add_option("--worlds", rm.worlds, "Number of worlds")->check(CLI::PositiveNumber);
    random_cmd->add_option("--atoms", rm.atoms, "Number of atoms")->check(CLI::PositiveNumber);
    random_cmd->add_option("--max-generators", rm.max_generators, "Generators per world; 0 gives a model without Σ");
    random_cmd->callback([&] { status = run_random_model(rm); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const Failure& f) {
        std::cerr << "inqmc: " << f.message << "\n";
        return kExitUsage;
    }
    return status;
}
