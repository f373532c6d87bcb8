#include "fintopo/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fintopo/height_one.hpp"
#include "fintopo/homotopy.hpp"
#include "fintopo/hypergraph.hpp"
#include "fintopo/invariants.hpp"
#include "fintopo/io.hpp"
#include "fintopo/poset.hpp"
#include "fintopo/search.hpp"
#include "fintopo/simplicial.hpp"

namespace fintopo {

namespace {

// Common run options; budgets fall back to the FINTOPO_BUDGET variable.
struct RunConfig {
    std::string input;
    std::size_t budget = std::size_t{1} << 20;
    int max_elements = 16;
    std::uint64_t seed = 0;
    bool json = false;
    bool dot = false;
};

std::size_t default_budget() {
    if (const char* env = std::getenv("FINTOPO_BUDGET")) {
        const long long v = std::atoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 20;
}

FinitePoset load_poset(const std::string& path) {
    if (path == "-") return read_poset_any(std::cin);
    return read_poset_file(path);
}

Hypergraph load_hypergraph(const std::string& path) {
    if (path == "-") return read_hypergraph_text(std::cin);
    return read_hypergraph_file(path);
}

InvariantBudget invariant_budget(const RunConfig& cfg) {
    InvariantBudget b;
    b.max_candidates = cfg.budget;
    b.max_elements = cfg.max_elements;
    return b;
}

void print_cover(std::ostream& out, const CoverReport& report) {
    out << "mode: " << to_string(report.mode) << "\n";
    out << "bound: " << report.bound << "\n";
    out << "kind: " << (report.bound_kind == BoundKind::exact ? "exact" : "upper") << "\n";
    out << "cover:";
    for (const auto& member : report.cover_labels()) {
        out << " {";
        for (std::size_t i = 0; i < member.size(); ++i) out << (i ? "," : "") << member[i];
        out << "}";
    }
    out << "\n";
    out << "evaluations: " << report.stats.evaluations << "\n";
}

void print_exact_cover(std::ostream& out, const char* name, const ExactCoverResult& result) {
    out << name << ": " << result.value << "\n";
    out << "cover:";
    for (const auto& member : result.cover_labels()) {
        out << " {";
        for (std::size_t i = 0; i < member.size(); ++i) out << (i ? "," : "") << member[i];
        out << "}";
    }
    out << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"covering-based invariants of finite T0-spaces"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.budget = default_budget();
    app.add_option("--budget", cfg.budget, "cap on candidate subsets for exact searches")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-elements", cfg.max_elements,
                   "element cap for the exact gcat search (default 16)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized orderings (default 0)");

    // core
    auto* cmd_core = app.add_subcommand("core", "compute the core by beat-point removal");
    std::string core_trace;
    cmd_core->add_option("input", cfg.input, "poset file (- for stdin)")->required();
    cmd_core->add_option("--trace", core_trace, "write the removal log to this file");
    cmd_core->add_flag("--dot", cfg.dot, "emit DOT instead of the text format");

    // is-contractible
    auto* cmd_contr = app.add_subcommand("is-contractible", "contractibility test");
    cmd_contr->add_option("input", cfg.input, "poset file (- for stdin)")->required();

    // invariants
    auto* cmd_inv = app.add_subcommand("invariants", "gcat / gcat_p / Cat_u chain report");
    cmd_inv->add_option("input", cfg.input, "poset file (- for stdin)")->required();
    cmd_inv->add_flag("--json", cfg.json, "JSON report");

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "U/D algorithms and heuristics");
    std::string bound_algo, bound_mode = "gcat", bound_order, h2_variant = "disjoint";
    int bound_k = -1;
    bool h1_skip_one = false, shuffle = false;
    cmd_bound->add_option("input", cfg.input, "poset file (- for stdin)")->required();
    cmd_bound->add_option("--algo", bound_algo, "u | d | h1 | h2")->required();
    cmd_bound->add_option("--mode", bound_mode, "gcat | gcatp | catu");
    cmd_bound->add_option("--k", bound_k, "stop length (u/d) or subset size (h2)");
    cmd_bound->add_option("--order", bound_order,
                          "ordering file: one label per line (h1) or one comma-separated "
                          "subset per line (h2)");
    cmd_bound->add_flag("--skip-one", h1_skip_one, "h1: skip incompatible additions");
    cmd_bound->add_flag("--shuffle", shuffle, "h1: shuffle the universe with --seed");
    cmd_bound->add_option("--variant", h2_variant, "h2: disjoint | covering");

    // table
    auto* cmd_table = app.add_subcommand("table", "compatibility table up to a length");
    std::string table_mode = "gcat";
    int table_k = 2;
    cmd_table->add_option("input", cfg.input, "poset file (- for stdin)")->required();
    cmd_table->add_option("--mode", table_mode, "gcat | gcatp | catu | cath1");
    cmd_table->add_option("--k", table_k, "evaluate all subsets of size <= k");

    // cat
    auto* cmd_cat = app.add_subcommand("cat", "exact LS-category (height 1 only)");
    bool cat_height1_flag = false;
    cmd_cat->add_option("input", cfg.input, "poset file (- for stdin)")->required();
    cmd_cat->add_flag("--height1", cat_height1_flag, "required: the height-1 computation");

    // strongify
    auto* cmd_strong = app.add_subcommand("strongify", "realize Cat = cat at height 1");
    std::string cover_path, cover_out;
    cmd_strong->add_option("input", cfg.input, "poset file (- for stdin)")->required();
    cmd_strong->add_option("--cover", cover_path, "prime cover: one member per line")->required();
    cmd_strong->add_option("--cover-out", cover_out, "write the widened cover here");
    cmd_strong->add_flag("--dot", cfg.dot, "emit DOT instead of the text format");

    // hypergraph
    auto* cmd_hyper = app.add_subcommand("hypergraph", "covering / transversal / dual / sperner");
    std::string hyper_op;
    cmd_hyper->add_option("op", hyper_op, "cover | transversal | dual | sperner")->required();
    cmd_hyper->add_option("input", cfg.input, "hypergraph file (- for stdin)")->required();

    // sd
    auto* cmd_sd = app.add_subcommand("sd", "iterated subdivision");
    int sd_k = 1;
    cmd_sd->add_option("input", cfg.input, "poset file (- for stdin)")->required();
    cmd_sd->add_option("-k,--k", sd_k, "number of subdivisions")->required();
    cmd_sd->add_flag("--dot", cfg.dot, "emit DOT instead of the text format");

    // iso
    auto* cmd_iso = app.add_subcommand("iso", "poset isomorphism");
    std::string iso_other;
    cmd_iso->add_option("input", cfg.input, "poset file (- for stdin)")->required();
    cmd_iso->add_option("other", iso_other, "second poset file")->required();

    // export
    auto* cmd_export = app.add_subcommand("export", "emit the Hasse diagram");
    bool export_dot = false;
    cmd_export->add_option("input", cfg.input, "poset file (- for stdin)")->required();
    cmd_export->add_flag("--dot", export_dot, "DOT output");

    // make
    auto* cmd_make = app.add_subcommand("make", "emit a canonical family");
    std::string make_kind;
    std::vector<int> make_params;
    cmd_make->add_option("family", make_kind,
                         "chain | antichain | fence | cycle | bipartite | c5crowns | cone is "
                         "not available here (it needs a base space)")
        ->required();
    cmd_make->add_option("params", make_params, "family parameters");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));  // CLI11 consumes a reversed argv
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, out, msg);
        err << msg.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_core->parsed()) {
            const FinitePoset poset = load_poset(cfg.input);
            const CoreResult result = core(poset);
            if (!core_trace.empty()) {
                std::ofstream trace_out(core_trace);
                if (!trace_out) throw ParseError("cannot open '" + core_trace + "' for writing");
                write_trace(trace_out, result.trace);
            }
            if (cfg.dot)
                write_dot(out, result.core);
            else
                write_poset_text(out, result.core);
        } else if (cmd_contr->parsed()) {
            out << (is_contractible(load_poset(cfg.input)) ? "true" : "false") << "\n";
        } else if (cmd_inv->parsed()) {
            const InvariantReport report =
                invariant_chain_report(load_poset(cfg.input), invariant_budget(cfg));
            write_invariant_report(out, report, cfg.json);
            return report.budget_hit ? 2 : 0;
        } else if (cmd_bound->parsed()) {
            const FinitePoset poset = load_poset(cfg.input);
            const Mode mode = mode_from_string(bound_mode);
            CoverReport report;
            if (bound_algo == "u") {
                CompatibilityOracle probe(poset, mode);
                const int n = probe.universe_size();
                report = u_algorithm(poset, mode, bound_k > 0 ? bound_k : n);
            } else if (bound_algo == "d") {
                report = d_algorithm(poset, mode, bound_k > 0 ? bound_k : 1);
            } else if (bound_algo == "h1") {
                Heuristic1Options options;
                options.skip_one = h1_skip_one;
                CompatibilityOracle probe(poset, mode);
                const int n = probe.universe_size();
                if (!bound_order.empty()) {
                    std::ifstream in(bound_order);
                    if (!in) throw ParseError("cannot open '" + bound_order + "'");
                    std::string line;
                    while (std::getline(in, line)) {
                        line.erase(std::remove_if(line.begin(), line.end(), ::isspace),
                                   line.end());
                        if (line.empty() || line[0] == '#') continue;
                        const auto idx = probe.space().find(line);
                        if (!idx) throw ParseError("unknown element '" + line + "' in ordering");
                        const auto pos = std::find(probe.universe().begin(),
                                                   probe.universe().end(), *idx);
                        if (pos == probe.universe().end())
                            throw ParseError("'" + line + "' is not in the universe");
                        options.ordering.push_back(
                            static_cast<int>(pos - probe.universe().begin()));
                    }
                } else if (shuffle) {
                    options.ordering.resize(n);
                    std::iota(options.ordering.begin(), options.ordering.end(), 0);
                    std::mt19937_64 rng(cfg.seed);
                    std::shuffle(options.ordering.begin(), options.ordering.end(), rng);
                }
                report = heuristic1(poset, mode, options);
            } else if (bound_algo == "h2") {
                if (bound_k <= 0) throw BadParameter("h2 needs --k");
                Heuristic2Options options;
                if (h2_variant == "covering")
                    options.variant = Heuristic2Options::Variant::covering;
                else if (h2_variant != "disjoint")
                    throw BadParameter("--variant must be disjoint or covering");
                if (!bound_order.empty()) {
                    std::ifstream in(bound_order);
                    if (!in) throw ParseError("cannot open '" + bound_order + "'");
                    CompatibilityOracle probe(poset, mode);
                    std::string line;
                    while (std::getline(in, line)) {
                        const auto hash = line.find('#');
                        if (hash != std::string::npos) line = line.substr(0, hash);
                        std::uint64_t subset = 0;
                        std::stringstream names(line);
                        std::string name;
                        bool any = false;
                        while (std::getline(names, name, ',')) {
                            name.erase(std::remove_if(name.begin(), name.end(), ::isspace),
                                       name.end());
                            if (name.empty()) continue;
                            const auto idx = probe.space().find(name);
                            if (!idx)
                                throw ParseError("unknown element '" + name + "' in ordering");
                            const auto pos = std::find(probe.universe().begin(),
                                                       probe.universe().end(), *idx);
                            if (pos == probe.universe().end())
                                throw ParseError("'" + name + "' is not in the universe");
                            subset |= std::uint64_t{1}
                                      << (pos - probe.universe().begin());
                            any = true;
                        }
                        if (any) options.preferred.push_back(subset);
                    }
                }
                report = heuristic2(poset, mode, bound_k, options);
            } else {
                throw BadParameter("--algo must be one of u, d, h1, h2");
            }
            out << "algo: " << bound_algo << "\n";
            print_cover(out, report);
        } else if (cmd_table->parsed()) {
            const FinitePoset poset = load_poset(cfg.input);
            CompatibilitySearchBudget budget;
            budget.max_subsets = cfg.budget;
            const CompatibilityTable table =
                enumerate_compatibility(poset, mode_from_string(table_mode), table_k, budget);
            write_compatibility_table(out, table);
        } else if (cmd_cat->parsed()) {
            if (!cat_height1_flag)
                throw BadParameter("general cat is not computable here; pass --height1");
            const ExactCoverResult result =
                cat_height1(load_poset(cfg.input), invariant_budget(cfg));
            print_exact_cover(out, "cat", result);
        } else if (cmd_strong->parsed()) {
            const FinitePoset poset = load_poset(cfg.input);
            std::ifstream cov_in(cover_path);
            if (!cov_in) throw ParseError("cannot open '" + cover_path + "'");
            const std::vector<Bitset> cover = read_cover_file(cov_in, poset);
            const StrongifyResult result = strongify(poset, cover);
            if (cfg.dot)
                write_dot(out, result.space);
            else
                write_poset_text(out, result.space);
            if (!cover_out.empty()) {
                std::ofstream cov_out(cover_out);
                if (!cov_out) throw ParseError("cannot open '" + cover_out + "' for writing");
                for (const Bitset& member : result.cover) {
                    bool first = true;
                    for (int x = member.find_first(); x != static_cast<int>(Bitset::npos);
                         x = member.find_next(x)) {
                        cov_out << (first ? "" : ",") << result.space.label(x);
                        first = false;
                    }
                    cov_out << "\n";
                }
            }
        } else if (cmd_hyper->parsed()) {
            const Hypergraph h = load_hypergraph(cfg.input);
            if (hyper_op == "cover") {
                const CoverValue v = covering_number(h);
                out << "covering number: " << v.value << (v.exact ? " (exact)" : " (bound)")
                    << "\n";
                out << "witness:";
                for (int i : v.witness) {
                    out << " {";
                    const auto labels = h.edge_labels(h.edges[i]);
                    for (std::size_t j = 0; j < labels.size(); ++j)
                        out << (j ? "," : "") << labels[j];
                    out << "}";
                }
                out << "\n";
            } else if (hyper_op == "transversal") {
                const CoverValue v = transversal_number(h);
                out << "transversal number: " << v.value << (v.exact ? " (exact)" : " (bound)")
                    << "\n";
                out << "witness:";
                for (int vx : v.witness) out << " " << h.labels[vx];
                out << "\n";
            } else if (hyper_op == "dual") {
                write_hypergraph_text(out, dual_hypergraph(h));
            } else if (hyper_op == "sperner") {
                write_hypergraph_text(out, sperner_reduction(h));
            } else {
                throw BadParameter("hypergraph op must be cover, transversal, dual or sperner");
            }
        } else if (cmd_sd->parsed()) {
            const FinitePoset result = subdivide(load_poset(cfg.input), sd_k);
            if (cfg.dot)
                write_dot(out, result);
            else
                write_poset_text(out, result);
        } else if (cmd_iso->parsed()) {
            const FinitePoset p = load_poset(cfg.input);
            const FinitePoset q = load_poset(iso_other);
            const IsoResult r = is_isomorphic(p, q, std::max(cfg.max_elements, 16));
            out << "isomorphic: " << (r.isomorphic ? "true" : "false") << "\n";
            if (r.isomorphic)
                for (int x = 0; x < p.size(); ++x)
                    out << p.label(x) << " -> " << q.label(r.mapping[x]) << "\n";
        } else if (cmd_export->parsed()) {
            if (!export_dot) throw BadParameter("export currently supports --dot only");
            write_dot(out, load_poset(cfg.input));
        } else if (cmd_make->parsed()) {
            write_poset_text(out, make_family(make_kind, make_params));
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const SizeBudgetExceeded& e) {
        err << "size budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace fintopo
