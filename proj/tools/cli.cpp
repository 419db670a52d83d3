#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <regex>
#include <sstream>

#include "sparsity/applications.hpp"
#include "sparsity/catalog.hpp"
#include "sparsity/counting.hpp"
#include "sparsity/decomposition.hpp"
#include "sparsity/density.hpp"
#include "sparsity/error.hpp"
#include "sparsity/homomorphism.hpp"
#include "sparsity/treedepth.hpp"

namespace sparsity::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

struct Global {
    std::string format = "json";
    std::uint64_t seed = 1;
    int exact_limit = -1;
    std::uint64_t budget = 0;  // 0 keeps each routine's default
    unsigned threads = 1;
};

struct Outcome {
    json payload;
    int code = kOk;
    std::string raw;  // emitted verbatim instead of the payload when non-empty
};

// Generator tokens may omit the trailing seed; --seed fills it in.
std::string with_seed(const std::string& token, std::uint64_t seed) {
    static const std::regex short_form(
        R"(^\s*(random_tree|girth5|planar)\s*\(\s*\d+\s*\)\s*$|^\s*(bounded_degree|gnm)\s*\(\s*\d+\s*,\s*\d+\s*\)\s*$)");
    if (!std::regex_match(token, short_form)) return token;
    auto close = token.rfind(')');
    return token.substr(0, close) + "," + std::to_string(seed) + ")";
}

Graph load_graph(const std::string& token, const Global& global) {
    if (token.rfind("named:", 0) == 0) return named(token);
    if (fs::is_regular_file(token)) {
        std::ifstream in(token);
        if (!in) throw UsageError("cannot open " + token);
        return parse_edge_list(in);
    }
    try {
        return generate(with_seed(token, global.seed));
    } catch (const UsageError&) {
        throw UsageError("no such file or graph spec: " + token);
    }
}

json forest_json(const EliminationForest& f) {
    return {{"parent", f.parent}, {"roots", f.roots}, {"height", f.height}};
}

const char* decision_name(Decision d) { return to_string(d); }

int decision_code(Decision d, int on_no = kOk) {
    return d == Decision::yes ? kOk : d == Decision::no ? on_no : kIndeterminate;
}

json edges_json(const Graph& g) {
    json out = json::array();
    for (auto [u, v] : g.edges()) out.push_back({u, v});
    return out;
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
}

void emit(const Outcome& outcome, const std::string& format, std::ostream& out) {
    if (!outcome.raw.empty()) {
        out << outcome.raw;
        return;
    }
    const json& j = outcome.payload;
    if (format == "json") {
        out << j.dump(2) << '\n';
    } else if (format == "text") {
        for (const auto& [key, value] : j.items())
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    } else {  // csv: one header row, one value row
        std::string header, row;
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) {
                header += ',';
                row += ',';
            }
            first = false;
            header += key;
            row += csv_cell(value);
        }
        out << header << '\n' << row << '\n';
    }
}

void emit_error(std::ostream& err, const char* kind, const std::string& message, int code,
                std::optional<std::size_t> line = std::nullopt) {
    json e = {{"error", kind}, {"message", message}, {"exit_code", code}};
    if (line) e["line"] = *line;
    err << e.dump() << '\n';
}

Outcome ok(json payload) {
    Outcome o;
    o.payload = std::move(payload);
    return o;
}

// --- commands -------------------------------------------------------------

Outcome cmd_td(const Graph& g, std::optional<int> k, const Global& global) {
    Outcome o;
    auto dfs = dfs_height_bounds(g);
    json bounds = {{"upper", dfs.upper}, {"lower", dfs.lower}, {"path_lower", dfs.path_lower}};
    if (k) {
        auto res = treedepth_at_most(g, *k, global.budget ? global.budget : 2'000'000);
        o.payload = {{"k", *k}, {"decision", decision_name(res.decision)}, {"dfs", bounds},
                     {"witness", res.witness ? forest_json(*res.witness) : json(nullptr)}};
        o.code = decision_code(res.decision);
        return o;
    }
    auto res = treedepth_exact(g, global.exact_limit >= 0 ? global.exact_limit : 18);
    o.payload = {{"treedepth", res.treedepth},
                 {"witness", forest_json(res.witness)},
                 {"witness_valid", verify_elimination_forest(g, res.witness)},
                 {"dfs", bounds},
                 {"order", g.order()},
                 {"size", g.size()}};
    return o;
}

LtdOptions ltd_options(const Global& global, int rounds) {
    LtdOptions options;
    options.rounds = rounds;
    options.threads = global.threads;
    if (global.budget) options.td_budget = global.budget;
    if (global.exact_limit >= 0) options.oracle_limit = global.exact_limit;
    return options;
}

Outcome cmd_decompose(const Graph& g, int p, int rounds, const Global& global) {
    auto d = ltd_coloring(g, p, ltd_options(global, rounds));
    return ok({{"p", d.p},
             {"palette", d.coloring.palette},
             {"colors", d.coloring.color},
             {"rounds_used", d.rounds_used},
             {"verified", d.verified}});
}

Outcome cmd_verify_ltd(const Graph& g, int p, const std::string& coloring_path,
                       const Global& global) {
    std::ifstream in(coloring_path);
    if (!in) throw UsageError("cannot open coloring file " + coloring_path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("coloring file is not JSON: ") + e.what());
    }
    if (!doc.contains("colors") || !doc["colors"].is_array())
        throw ValidationError("coloring file needs a \"colors\" array");
    std::vector<int> colors;
    for (const auto& c : doc["colors"]) {
        if (!c.is_number_integer()) throw ValidationError("colors must be integers");
        colors.push_back(c.get<int>());
    }
    auto coloring = Coloring::from_colors(std::move(colors));
    if (doc.contains("palette") && doc["palette"].is_number_integer())
        coloring.palette = std::max(coloring.palette, doc["palette"].get<int>());
    if (p <= 0 && doc.contains("p") && doc["p"].is_number_integer()) p = doc["p"].get<int>();
    if (p <= 0) throw UsageError("verify-ltd needs -p (or a \"p\" field in the coloring file)");
    auto check = verify_ltd(g, p, coloring, ltd_options(global, -1));
    Outcome o;
    o.payload = {{"p", p},
                 {"palette", coloring.palette},
                 {"status", decision_name(check.status)},
                 {"valid", check.status == Decision::yes},
                 {"violating_colors", check.colors}};
    o.code = decision_code(check.status, kFailure);
    return o;
}

Outcome cmd_count(const Graph& g, const std::string& pattern, const std::string& mode_text,
                  const std::string& method, const Global& global) {
    Graph h = load_graph(pattern, global);
    auto mode = parse_count_mode(mode_text);
    Outcome o;
    if (method == "bruteforce") {
        auto count = count_bruteforce(h, g, mode);
        o.payload = {{"count", count}, {"method", "bruteforce"}, {"mode", to_string(mode)},
                     {"palette", nullptr}, {"pattern_order", h.order()}};
        return o;
    }
    auto res = count_ltd(h, g, mode, ltd_options(global, -1));
    o.payload = {{"count", res.count},
                 {"method", "ltd"},
                 {"mode", to_string(mode)},
                 {"palette", res.palette},
                 {"rounds_used", res.rounds},
                 {"embeddings", res.embeddings},
                 {"automorphisms", res.automorphisms},
                 {"pattern_order", h.order()}};
    return o;
}

json path_model_json(const PathModel& m) {
    return {{"principal", m.principal}, {"paths", m.paths}, {"depth", m.depth}};
}

Outcome cmd_density(const Graph& g, const std::string& measure, int r, bool lower_bound,
                    const Global& global) {
    DensityOptions options;
    options.exact_limit = global.exact_limit;
    if (global.budget) options.budget = global.budget;
    Outcome o;
    json payload = {{"measure", measure}, {"r", r}, {"exact", true}};
    if (measure == "nabla0") {
        auto d = nabla0(g);
        payload["value"] = d.density.str();
        payload["witness"] = {{"vertices", d.vertices}};
    } else if (measure == "grad") {
        auto d = grad(g, r, options);
        auto check = check_minor_model(g, d.model);
        payload["value"] = d.density.str();
        payload["witness"] = {{"branch_sets", d.model.branch_sets},
                              {"depth", d.model.depth},
                              {"minor_edges", edges_json(d.minor)}};
        payload["witness_valid"] = check.valid && check.density == d.density;
    } else if (measure == "topgrad" || measure == "immgrad") {
        const bool top = measure == "topgrad";
        const int limit = global.exact_limit >= 0 ? global.exact_limit
                                                  : (top ? kTopGradLimit : kImmGradLimit);
        PathModelResult d;
        if (top && lower_bound && g.order() > limit) {
            d = top_grad_lower_bound(g, r);
            payload["exact"] = false;
        } else {
            d = top ? top_grad(g, r, options) : imm_grad(g, r, options);
        }
        auto check = top ? check_topological_model(g, d.model) : check_immersion_model(g, d.model);
        payload["value"] = d.density.str();
        payload["witness"] = path_model_json(d.model);
        payload["witness_valid"] = check.valid && check.density == d.density;
    } else {
        throw UsageError("unknown measure " + measure + " (nabla0, grad, topgrad, immgrad)");
    }
    o.payload = std::move(payload);
    return o;
}

Outcome cmd_density_profile(const std::string& family, int r, const std::vector<int>& sizes,
                            bool csv, const Global& global) {
    DensityOptions options;
    options.exact_limit = global.exact_limit;
    if (global.budget) options.budget = global.budget;
    auto rows = density_profile(family, r, sizes, global.seed, options);
    Outcome o;
    if (csv) {
        o.raw = density_profile_csv(rows);
        return o;
    }
    json list = json::array();
    auto number_or_null = [](double x) { return std::isnan(x) ? json(nullptr) : json(x); };
    for (const auto& row : rows)
        list.push_back({{"family", row.family},
                        {"size", row.size},
                        {"order", row.order},
                        {"edges", row.edges},
                        {"top_density", row.top_density.str()},
                        {"exact", row.exact},
                        {"witness_order", row.witness_order},
                        {"witness_edges", row.witness_edges},
                        {"log_density", number_or_null(row.log_density)},
                        {"witness_log_density", number_or_null(row.witness_log_density)}});
    o.payload = {{"family", family}, {"r", r}, {"rows", list}};
    return o;
}

Outcome cmd_dncolor(const Graph& g, int n) {
    auto c = dn_coloring(g, n);
    return ok({{"n", n}, {"palette", c.palette}, {"colors", c.color},
             {"valid", verify_dn_coloring(g, n, c)}});
}

Outcome cmd_cover(const Graph& g, int r) {
    auto cover = neighborhood_cover(g, r);
    auto verdict = verify_cover(g, cover);
    json clusters = json::array();
    for (const auto& c : cover.clusters)
        clusters.push_back({{"vertices", c.vertices}, {"center", c.center}, {"radius", c.radius}});
    Outcome o;
    o.payload = {{"r", r},
                 {"clusters", clusters},
                 {"max_membership", cover.max_membership(g.order())},
                 {"valid", verdict.valid},
                 {"violation", verdict.valid ? json(nullptr) : json(verdict.violation)},
                 {"nabla0", nabla0(g).density.str()}};
    o.code = verdict.valid ? kOk : kFailure;
    return o;
}

Outcome cmd_oddset(const Graph& g, const Global& global) {
    auto set = max_odd_distance_set(g, global.exact_limit >= 0 ? global.exact_limit : 30);
    return ok({{"size", set.size()}, {"vertices", set}});
}

Outcome cmd_hom(const Graph& g, const Graph& h, const Global& global) {
    auto res = hom_exists(g, h, global.budget ? global.budget : kHomBudget);
    Outcome o;
    o.payload = {{"status", decision_name(res.status)},
                 {"exists", res.status == Decision::indeterminate ? json(nullptr)
                                                                  : json(res.status == Decision::yes)},
                 {"map", res.status == Decision::yes ? json(res.map) : json(nullptr)}};
    o.code = decision_code(res.status);
    return o;
}

Outcome cmd_core(const Graph& g, const Global& global) {
    auto res = core(g, global.exact_limit >= 0 ? global.exact_limit : 12,
                    global.budget ? global.budget : kHomBudget);
    return ok({{"order", res.core.order()},
             {"vertices", res.vertices},
             {"edges", edges_json(res.core)},
             {"retraction", res.retraction}});
}

Outcome cmd_dual_check(const std::string& pattern, const std::string& dual,
                       const std::vector<std::string>& inputs, const Global& global) {
    Graph f = load_graph(pattern, global);
    Graph d = load_graph(dual, global);
    std::vector<Graph> family;
    std::vector<std::string> names;
    for (const auto& input : inputs) {
        if (fs::is_directory(input)) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(input))
                if (entry.is_regular_file()) files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            for (const auto& file : files) {
                family.push_back(load_graph(file.string(), global));
                names.push_back(file.filename().string());
            }
        } else {
            family.push_back(load_graph(input, global));
            names.push_back(input);
        }
    }
    auto report = dual_check(f, d, family, names, global.budget ? global.budget : kHomBudget,
                             global.threads);
    json instances = json::array();
    for (const auto& inst : report.instances)
        instances.push_back({{"name", inst.name},
                             {"pattern_maps", decision_name(inst.pattern_maps)},
                             {"maps_to_dual", decision_name(inst.maps_to_dual)},
                             {"holds", decision_name(inst.holds)}});
    Outcome o;
    o.payload = {{"pattern_to_dual", decision_name(report.pattern_to_dual)},
                 {"holds", decision_name(report.holds)},
                 {"instances", instances}};
    o.code = decision_code(report.holds, kFailure);
    return o;
}

Outcome cmd_choosable(const Graph& g, int k, const Global& global) {
    auto res = is_k_choosable(g, k, global.exact_limit >= 0 ? global.exact_limit
                                                           : kChoosableVertexLimit);
    return ok({{"k", k},
             {"choosable", res.choosable},
             {"bad_lists", res.choosable ? json(nullptr) : json(res.bad_lists)}});
}

Outcome cmd_scan(const Graph& g, int s, int t, int q, const Global& global) {
    if (s <= 0 && t <= 0 && q <= 0) throw UsageError("scan needs at least one of --s, --t, --q");
    auto results = induced_pattern_scan(g, s, t, q, global.budget ? global.budget : 50'000'000);
    json patterns = json::array();
    bool undecided = false;
    for (const auto& r : results) {
        undecided |= r.result.found == Decision::indeterminate;
        patterns.push_back({{"pattern", r.pattern},
                            {"found", decision_name(r.result.found)},
                            {"witness", r.result.found == Decision::yes ? json(r.result.witness)
                                                                        : json(nullptr)}});
    }
    Outcome o;
    o.payload = {{"patterns", patterns}};
    o.code = undecided ? kIndeterminate : kOk;
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structural sparse-graph toolkit", "sparsity"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    Global global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", global.seed, "Seed for generators without an explicit seed");
    app.add_option("--exact-limit", global.exact_limit, "Override the size limit of exact routines");
    app.add_option("--budget", global.budget, "Search-node budget for bounded searches");
    app.add_option("--threads", global.threads, "Worker threads")->check(CLI::Range(1U, 256U));

    std::string input, second, pattern, mode = "subgraph", method = "ltd", measure = "grad",
                                        family, coloring_path, dual;
    std::vector<std::string> inputs;
    std::vector<int> sizes;
    std::optional<int> k_bound;
    int p = 0, rounds = 0, r = 1, n = 1, k = 2, s = 0, t = 0, q = 0;
    bool lower_bound = false;

    auto* td = app.add_subcommand("td", "Exact tree-depth with an elimination-forest witness");
    td->add_option("-k", k_bound, "Only decide td <= k (works on large graphs)");
    td->add_option("input", input)->required();

    auto* decompose = app.add_subcommand("decompose", "Low tree-depth coloring");
    decompose->add_option("-p", p)->required();
    decompose->add_option("--rounds", rounds, "First augmentation round count tried (default 0)");
    decompose->add_option("input", input)->required();

    auto* verify = app.add_subcommand("verify-ltd", "Check a coloring produced by decompose");
    verify->add_option("-p", p);
    verify->add_option("--coloring", coloring_path)->required();
    verify->add_option("input", input)->required();

    auto* count = app.add_subcommand("count", "Count copies of a pattern");
    count->add_option("--pattern", pattern)->required();
    count->add_option("--mode", mode)->check(CLI::IsMember({"subgraph", "induced"}));
    count->add_option("--method", method)->check(CLI::IsMember({"ltd", "bruteforce"}));
    count->add_option("input", input)->required();

    auto* density = app.add_subcommand("density", "Shallow minor / topological minor / immersion density");
    density->add_option("--measure", measure)
        ->check(CLI::IsMember({"nabla0", "grad", "topgrad", "immgrad"}));
    density->add_option("-r", r)->check(CLI::NonNegativeNumber);
    density->add_flag("--lower-bound", lower_bound,
                      "topgrad above the exact limit: report a certified lower bound");
    density->add_option("input", input)->required();

    auto* profile = app.add_subcommand("density-profile", "Density trajectory over a graph family");
    profile->add_option("--family", family)->required();
    profile->add_option("-r", r)->check(CLI::NonNegativeNumber);
    profile->add_option("--sizes", sizes)->delimiter(',')->required();

    auto* dncolor = app.add_subcommand("dncolor", "Coloring distinguishing vertices at distance n");
    dncolor->add_option("-n", n)->required();
    dncolor->add_option("input", input)->required();

    auto* cover = app.add_subcommand("cover", "Greedy r-neighborhood cover");
    cover->add_option("-r", r)->check(CLI::PositiveNumber);
    cover->add_option("input", input)->required();

    auto* oddset = app.add_subcommand("oddset", "Maximum set of vertices pairwise at odd distance");
    oddset->add_option("input", input)->required();

    auto* hom = app.add_subcommand("hom", "Homomorphism search G -> H");
    hom->add_option("source", input)->required();
    hom->add_option("target", second)->required();

    auto* core_cmd = app.add_subcommand("core", "Homomorphism core with a retraction");
    core_cmd->add_option("input", input)->required();

    auto* dual_cmd = app.add_subcommand("dual-check", "Check F -/-> G iff G -> D on a family");
    dual_cmd->add_option("--pattern", pattern)->required();
    dual_cmd->add_option("--dual", dual)->required();
    dual_cmd->add_option("inputs", inputs, "Graph files, directories or specs")->required();

    auto* choosable = app.add_subcommand("choosable", "Exhaustive k-choosability");
    choosable->add_option("-k", k)->required();
    choosable->add_option("input", input)->required();

    auto* scan = app.add_subcommand("scan", "Look for induced P_s, K_t and K_{q,q}");
    scan->add_option("--s", s);
    scan->add_option("--t", t);
    scan->add_option("--q", q);
    scan->add_option("input", input)->required();

    auto* gen = app.add_subcommand("gen", "Print a catalog or random graph as an edge list");
    gen->add_option("spec", input)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << "0.1.0\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage", e.what(), kUsage);
        return kUsage;
    }

    try {
        Outcome outcome;
        std::string format = global.format;
        if (app.got_subcommand(td)) {
            outcome = cmd_td(load_graph(input, global), k_bound, global);
        } else if (app.got_subcommand(decompose)) {
            outcome = cmd_decompose(load_graph(input, global), p, rounds, global);
        } else if (app.got_subcommand(verify)) {
            outcome = cmd_verify_ltd(load_graph(input, global), p, coloring_path, global);
        } else if (app.got_subcommand(count)) {
            outcome = cmd_count(load_graph(input, global), pattern, mode, method, global);
        } else if (app.got_subcommand(density)) {
            outcome = cmd_density(load_graph(input, global), measure, r, lower_bound, global);
        } else if (app.got_subcommand(profile)) {
            const bool csv = app.count("--format") == 0 || format == "csv";
            if (csv) format = "csv";
            outcome = cmd_density_profile(family, r, sizes, csv, global);
        } else if (app.got_subcommand(dncolor)) {
            outcome = cmd_dncolor(load_graph(input, global), n);
        } else if (app.got_subcommand(cover)) {
            outcome = cmd_cover(load_graph(input, global), r);
        } else if (app.got_subcommand(oddset)) {
            outcome = cmd_oddset(load_graph(input, global), global);
        } else if (app.got_subcommand(hom)) {
            outcome = cmd_hom(load_graph(input, global), load_graph(second, global), global);
        } else if (app.got_subcommand(core_cmd)) {
            outcome = cmd_core(load_graph(input, global), global);
        } else if (app.got_subcommand(dual_cmd)) {
            outcome = cmd_dual_check(pattern, dual, inputs, global);
        } else if (app.got_subcommand(choosable)) {
            outcome = cmd_choosable(load_graph(input, global), k, global);
        } else if (app.got_subcommand(scan)) {
            outcome = cmd_scan(load_graph(input, global), s, t, q, global);
        } else if (app.got_subcommand(gen)) {
            outcome.raw = serialize_edge_list(load_graph(input, global));
            if (outcome.raw.empty()) outcome.raw = "# empty graph\n";
        }
        emit(outcome, format, out);
        return outcome.code;
    } catch (const ParseError& e) {
        emit_error(err, "parse", e.what(), kFailure, e.line());
        return kFailure;
    } catch (const LtdFailure& e) {
        json payload = {{"error", "verification"},
                        {"message", e.what()},
                        {"exit_code", kFailure},
                        {"violating_colors", e.check().colors}};
        err << payload.dump() << '\n';
        return kFailure;
    } catch (const ValidationError& e) {
        emit_error(err, "validation", e.what(), kFailure);
        return kFailure;
    } catch (const VerificationFailure& e) {
        emit_error(err, "verification", e.what(), kFailure);
        return kFailure;
    } catch (const UsageError& e) {
        emit_error(err, "usage", e.what(), kUsage);
        return kUsage;
    } catch (const SizeLimitError& e) {
        emit_error(err, "size_limit", e.what(), kRefused);
        return kRefused;
    } catch (const BudgetExceeded& e) {
        emit_error(err, "budget", e.what(), kRefused);
        return kRefused;
    } catch (const OverflowError& e) {
        emit_error(err, "overflow", e.what(), kRefused);
        return kRefused;
    }
}

}  // namespace sparsity::cli
