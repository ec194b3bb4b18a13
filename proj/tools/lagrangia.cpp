// Command-line front end. JSON on stdout by default, --pretty for tables.
// Exit codes: 0 success / all assertions pass, 1 assertion failure, 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "lagrangia/algorithms.hpp"
#include "lagrangia/constructions.hpp"
#include "lagrangia/detection.hpp"
#include "lagrangia/enumerate.hpp"
#include "lagrangia/families.hpp"
#include "lagrangia/io.hpp"
#include "lagrangia/json_io.hpp"
#include "lagrangia/verify.hpp"

using namespace lagrangia;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Hypergraph load(const std::string& path) {
    if (path == "-") return read_hg(std::cin);
    return load_hg(path);
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render(std::ostream& out, const Json& j, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        std::size_t width = 0;
        for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            const bool nested = v.is_object() ? !v.empty() : (v.is_array() && !v.empty() && v.front().is_structured());
            if (nested) {
                out << pad << it.key() << ":\n";
                render(out, v, indent + 2);
            } else {
                out << pad << std::left << std::setw(static_cast<int>(width)) << it.key() << "  " << scalar_text(v)
                    << '\n';
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                out << pad << "-\n";
                render(out, v, indent + 2);
            } else {
                out << pad << "- " << scalar_text(v) << '\n';
            }
        }
    } else {
        out << pad << scalar_text(j) << '\n';
    }
}

void render_report(std::ostream& out, const Json& report) {
    out << "suite    " << report["suite"].get<std::string>() << "\nseed     " << report["seed"].dump()
        << "\nversion  " << report["version"].get<std::string>() << "\n\n";
    std::size_t width = 2;
    for (const auto& a : report["assertions"]) width = std::max(width, a["id"].get<std::string>().size());
    out << std::left << std::setw(static_cast<int>(width)) << "id" << "  result  claim\n";
    for (const auto& a : report["assertions"])
        out << std::left << std::setw(static_cast<int>(width)) << a["id"].get<std::string>() << "  "
            << (a["passed"].get<bool>() ? "PASS  " : "FAIL  ") << "  " << a["claim"].get<std::string>() << '\n';
    out << '\n' << (report["passed"].get<bool>() ? "all assertions passed" : "some assertions FAILED") << '\n';
}

void emit(const Json& j, bool pretty) {
    if (!pretty) {
        std::cout << j.dump() << '\n';
    } else if (j.contains("command") && j["command"] == "verify") {
        render_report(std::cout, j);
    } else {
        render(std::cout, j, 0);
    }
}

std::vector<double> parse_weights(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(to_double(parse_rational(item)));
    return out;
}

std::vector<Rational> parse_rational_weights(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    return out;
}

/// "SPEC:p" with the core size after the last colon.
std::pair<Hypergraph, int> parse_forbid(const std::string& text) {
    const auto colon = text.rfind(':');
    if (colon == std::string::npos) throw UsageError("--forbid expects SPEC:p, got '" + text + "'");
    const int p = std::stoi(text.substr(colon + 1));
    return {construct(FamilySpec::parse(text.substr(0, colon))), p};
}

struct Options {
    bool pretty = false;
    // lagrangian compute
    std::string file;
    std::optional<std::string> bound;
    int restarts = 50;
    std::uint64_t seed = 0;
    int threads = 1;
    // construct
    std::string spec;
    std::string output;
    // compress
    std::string weights;
    // symmetrize
    double alpha = 0.5;
    std::string forbid;
    // enumerate / turan
    int r = 3;
    int n = 6;
    int m = 0;
    std::vector<std::string> preds;
    std::optional<std::size_t> limit;
    bool force_scale = false;
    std::string checkpoint;
    bool resume = false;
    bool count_only = false;
    bool brute = false;
    // verify
    std::string suite;
    std::optional<int> vn, vt, samples;
    bool timing = false;
    bool list = false;
    // closed-form
    std::string formula;
    std::vector<std::string> params;
};

OptimizerConfig optimizer(const Options& o) {
    OptimizerConfig c;
    c.restarts = o.restarts;
    c.seed = o.seed;
    c.threads = o.threads;
    return c;
}

FreePredicates predicates(const std::vector<std::string>& preds) {
    FreePredicates p;
    for (const auto& text : preds) {
        const auto colon = text.find(':');
        const std::string key = text.substr(0, colon);
        const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
        if (key == "matching-free" && !arg.empty())
            p.matching_free = std::stoi(arg);
        else if (key == "clique-free" && !arg.empty())
            p.clique_free = std::stoi(arg);
        else if (key == "forbid" && !arg.empty())
            p.subgraph_free.push_back(construct(FamilySpec::parse(arg)));
        else if (key == "no-isolated" && arg.empty())
            p.no_isolated = true;
        else if (key == "left-compressed" && arg.empty())
            p.left_compressed = true;
        else
            throw UsageError("unknown predicate '" + text +
                             "' (matching-free:t, clique-free:p, forbid:SPEC, no-isolated, left-compressed)");
    }
    return p;
}

int run_compute(const Options& o) {
    const Hypergraph g = load(o.file);
    LagrangianResult res;
    if (o.bound)
        res = maximize_bounded(g, to_double(parse_rational(*o.bound)), optimizer(o));
    else
        res = maximize(g, optimizer(o));
    Json j = to_json(res);
    if (g.uniformity() == 2 && !o.bound) j["exact"] = to_json(motzkin_straus(g));
    emit(j, o.pretty);
    return 0;
}

int run_construct(const Options& o) {
    const Hypergraph g = construct(FamilySpec::parse(o.spec));
    if (o.output.empty())
        write_hg(std::cout, g);
    else
        save_hg(o.output, g);
    return 0;
}

int run_compress(const Options& o) {
    const Hypergraph g = load(o.file);
    LeftCompression out;
    Json j;
    if (o.weights.empty()) {
        const auto res = maximize(g, optimizer(o));
        out = left_compress_to_fixpoint(g, res.witness.values());
        j["weights"] = to_json(res)["witness"];
    } else {
        const auto x = parse_rational_weights(o.weights);
        if (!is_feasible(std::span<const Rational>(x))) throw UsageError("weights must be nonnegative and sum to 1");
        out = left_compress_to_fixpoint(g, std::span<const Rational>(x));
        Json w = Json::array();
        for (const auto& q : x) w.push_back(q.get_str());
        j["weights"] = w;
    }
    j["order"] = out.order;
    j["graph"] = to_json(out.graph);
    j["trace"] = to_json(out.trace);
    emit(j, o.pretty);
    return 0;
}

int run_dense(const Options& o) {
    const Hypergraph g = load(o.file);
    DenseCompressedOptions options;
    options.optimizer = optimizer(o);
    const auto out = dense_compressed_subgraph(g, options);
    Json j;
    j["graph"] = to_json(out.graph);
    j["original"] = out.original;
    j["y"] = out.y;
    j["value"] = out.value;
    j["input_value"] = out.input_value;
    j["converged"] = out.converged;
    j["trace"] = to_json(out.trace);
    emit(j, o.pretty);
    return 0;
}

int run_symmetrize(const Options& o) {
    const Hypergraph g = load(o.file);
    SymmetrizeOptions options;
    options.alpha = o.alpha;
    const auto out = symmetrize_and_clean(g, options);
    Json j;
    j["alpha"] = o.alpha;
    j["graph"] = to_json(out.graph);
    j["original"] = out.original;
    Json removed = Json::array();
    for (VertexSet z : out.removed) removed.push_back(members(z));
    j["removed"] = removed;
    j["iterations"] = out.iterations;
    j["converged"] = out.converged;
    j["classes"] = equivalence_classes(out.graph).size();
    j["blowup_of_representatives"] = is_blowup_of_representatives(out.graph);
    if (!o.forbid.empty()) {
        const auto [f, p] = parse_forbid(o.forbid);
        j["forbidden"] = {{"graph", to_json(f)}, {"core", p}};
        j["input_free"] = !contains_weak_extension(g, f, p);
        j["output_free"] = !contains_weak_extension(out.graph, f, p);
    }
    j["trace"] = to_json(out.trace);
    emit(j, o.pretty);
    return 0;
}

int run_enumerate(const Options& o) {
    EnumerateOptions options;
    options.limit = o.limit;
    options.force_scale = o.force_scale;
    options.threads = o.threads;
    options.checkpoint = o.checkpoint;
    options.resume = o.resume;
    const FreePredicates p = predicates(o.preds);
    Json graphs = Json::array();
    std::size_t count = 0;
    for_each_free(o.r, o.n, p, options, [&](const Hypergraph& g) {
        ++count;
        if (!o.count_only) graphs.push_back(to_json(g));
        return true;
    });
    Json j;
    j["r"] = o.r;
    j["n"] = o.n;
    j["predicates"] = o.preds;
    j["count"] = count;
    if (!o.count_only) j["graphs"] = graphs;
    emit(j, o.pretty);
    return 0;
}

int run_turan(const Options& o) {
    Json j;
    j["r"] = o.r;
    j["n"] = o.n;
    if (o.brute) {
        if (o.preds.empty() && o.forbid.empty()) throw UsageError("turan --brute needs --forbid SPEC or --pred");
        FreePredicates p = predicates(o.preds);
        if (!o.forbid.empty()) {
            const auto f = construct(FamilySpec::parse(o.forbid));
            const auto extra = forbidding(f);
            if (extra.matching_free) p.matching_free = extra.matching_free;
            if (extra.clique_free) p.clique_free = extra.clique_free;
            for (const auto& h : extra.subgraph_free) p.subgraph_free.push_back(h);
            j["forbid"] = o.forbid;
        }
        j["ex"] = turan_bruteforce(o.r, o.n, p, o.force_scale);
    } else {
        if (o.m <= 0) throw UsageError("turan needs --m for the blowup count, or --brute");
        j["m"] = o.m;
        j["edges"] = turan_count(o.r, o.m, o.n);
        j["parts"] = balanced_parts(o.m, o.n);
    }
    emit(j, o.pretty);
    return 0;
}

int run_verify(const Options& o) {
    if (o.list) {
        emit(Json(suite_names()), o.pretty);
        return 0;
    }
    if (o.suite.empty()) throw UsageError("verify needs a suite name (see verify --list)");
    VerifyParams p;
    p.seed = o.seed;
    p.n = o.vn;
    p.t = o.vt;
    p.samples = o.samples;
    p.threads = o.threads;
    p.timing = o.timing;
    p.force_scale = o.force_scale;
    const Report report = verify(o.suite, p);
    const Json j = report.to_json();
    if (!o.output.empty()) {
        std::ofstream out(o.output);
        out << j.dump(2) << '\n';
    }
    emit(j, o.pretty);
    return report.passed() ? 0 : 1;
}

int run_closed_form(const Options& o) {
    if (o.formula.empty() || o.formula == "list") {
        Json list = Json::array();
        for (const auto& f : formula_catalog())
            list.push_back({{"name", f.name}, {"params", f.params}, {"formula", f.description}});
        emit(list, o.pretty);
        return 0;
    }
    std::map<std::string, Rational> params;
    for (const auto& text : o.params) {
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw UsageError("parameters are name=value, got '" + text + "'");
        params[text.substr(0, eq)] = parse_rational(text.substr(eq + 1));
    }
    Json j;
    j["name"] = o.formula;
    Json inputs = Json::object();
    for (const auto& [k, v] : params) inputs[k] = v.get_str();
    j["params"] = inputs;
    j["value"] = to_json(closed_form(o.formula, params));
    emit(j, o.pretty);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrangians of uniform hypergraphs: optimizer, constructions, exhaustive checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lagrangia::version()));
    Options o;
    app.add_flag("--pretty", o.pretty, "Render tables instead of JSON");

    auto* lag = app.add_subcommand("lagrangian", "Lagrangian computations");
    lag->require_subcommand(1);
    auto* compute = lag->add_subcommand("compute", "Maximize the Lagrangian of a .hg file");
    compute->add_option("file", o.file, ".hg file, or - for stdin")->required();
    compute->add_option("--bound", o.bound, "Cap b on every weight (rational or decimal)");

    auto* construct_cmd = app.add_subcommand("construct", "Emit a named construction as .hg");
    construct_cmd->add_option("spec", o.spec, "K:r:p, M:r:t, L:r:t, T:r:m:n, F:t:l:n, G:k:n, H:p:SPEC")->required();
    construct_cmd->add_option("-o,--output", o.output, "Write to a file instead of stdout");

    auto* compress_cmd = app.add_subcommand("compress", "Left-compress to a fixpoint in the weight order");
    compress_cmd->add_option("file", o.file)->required();
    compress_cmd->add_option("--weights", o.weights, "Comma-separated rational weights (default: optimum witness)");

    auto* dense_cmd = app.add_subcommand("dense-sub", "Dense, compressed subgraph with its optimum");
    dense_cmd->add_option("file", o.file)->required();

    auto* sym = app.add_subcommand("symmetrize", "Symmetrization and cleaning with threshold alpha");
    sym->add_option("file", o.file)->required();
    sym->add_option("--alpha", o.alpha, "Density threshold in (0, 1]")->check(CLI::Range(0.0, 1.0));
    sym->add_option("--forbid", o.forbid, "SPEC:p, report weak-extension freeness before and after");

    auto* enumerate = app.add_subcommand("enumerate", "Isomorphism classes satisfying predicates");
    enumerate->add_option("--r", o.r)->required();
    enumerate->add_option("--n", o.n)->required();
    enumerate->add_option("--pred", o.preds, "matching-free:t, clique-free:p, forbid:SPEC, no-isolated, left-compressed");
    enumerate->add_option("--limit", o.limit);
    enumerate->add_flag("--force-scale", o.force_scale);
    enumerate->add_option("--checkpoint", o.checkpoint, "Frontier file, written before each level");
    enumerate->add_flag("--resume", o.resume, "Continue from --checkpoint");
    enumerate->add_flag("--count", o.count_only, "Only report the number of graphs");

    auto* turan = app.add_subcommand("turan", "Turan numbers: blowup counts or exhaustive search");
    turan->add_option("--r", o.r)->required();
    turan->add_option("--n", o.n)->required();
    turan->add_option("--m", o.m, "Parts of the balanced blowup");
    turan->add_flag("--brute", o.brute, "Exhaustive ex(n, F)");
    turan->add_option("--forbid", o.forbid, "Forbidden graph SPEC");
    turan->add_option("--pred", o.preds);
    turan->add_flag("--force-scale", o.force_scale);

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", o.suite);
    verify_cmd->add_flag("--list", o.list, "List suite names");
    verify_cmd->add_option("--n", o.vn);
    verify_cmd->add_option("--t", o.vt);
    verify_cmd->add_option("--samples", o.samples);
    verify_cmd->add_flag("--timing", o.timing, "Record wall time (breaks byte-identical reruns)");
    verify_cmd->add_flag("--force-scale", o.force_scale);
    verify_cmd->add_option("-o,--output", o.output, "Also write the report to a file");

    auto* closed = app.add_subcommand("closed-form", "Evaluate a closed-form value exactly");
    closed->add_option("name", o.formula, "Formula name, or list");
    closed->add_option("params", o.params, "name=value pairs");

    for (auto* cmd : {compute, compress_cmd, dense_cmd, verify_cmd}) {
        cmd->add_option("--restarts", o.restarts)->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", o.seed);
        cmd->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
    }
    for (auto* cmd : {sym, enumerate}) cmd->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
    for (auto* cmd : {compute, construct_cmd, compress_cmd, dense_cmd, sym, enumerate, turan, verify_cmd, closed})
        cmd->add_flag("--pretty", o.pretty, "Render tables instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) return run_compute(o);
        if (*construct_cmd) return run_construct(o);
        if (*compress_cmd) return run_compress(o);
        if (*dense_cmd) return run_dense(o);
        if (*sym) return run_symmetrize(o);
        if (*enumerate) return run_enumerate(o);
        if (*turan) return run_turan(o);
        if (*verify_cmd) return run_verify(o);
        if (*closed) return run_closed_form(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
