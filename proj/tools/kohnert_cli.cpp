#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kohnert/core.hpp"
#include "kohnert/expansions.hpp"
#include "kohnert/golden.hpp"
#include "kohnert/insertion.hpp"
#include "kohnert/io.hpp"
#include "kohnert/labeling.hpp"
#include "kohnert/render.hpp"
#include "kohnert/tableaux.hpp"
#include "kohnert/verify.hpp"

namespace fs = std::filesystem;
using namespace kohnert;

namespace {

constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

Diagram diagram_argument(const std::string& diagram_json, const std::string& alpha_csv) {
    if (!diagram_json.empty()) return diagram_from_json(json::parse(diagram_json));
    if (!alpha_csv.empty()) return composition_diagram(parse_composition(alpha_csv));
    throw std::invalid_argument("pass --diagram or --alpha");
}

void emit_diagram_list(const std::vector<Diagram>& list, int length, bool count_only, bool as_json) {
    if (count_only) {
        std::cout << list.size() << '\n';
        return;
    }
    if (as_json) {
        json out = json::array();
        for (const Diagram& d : list) out.push_back(to_json(d));
        std::cout << out.dump() << '\n';
        return;
    }
    for (const Diagram& d : list) {
        std::cout << render_diagram(d) << "weight " << to_string(diagram_weight(d, length))
                  << "\n\n";
    }
}

int run_golden(const std::string& name, const std::string& fixtures, bool write) {
    std::vector<std::string> names =
        name == "all" ? golden::artifact_names() : std::vector<std::string>{name};
    bool mismatch = false;
    for (const std::string& n : names) {
        std::string text = golden::artifact(n);
        fs::path path = fs::path(fixtures) / (n + ".txt");
        if (write) {
            std::ofstream out(path);
            out << text;
            std::cout << "wrote " << path.string() << '\n';
            continue;
        }
        std::ifstream in(path);
        if (!in) {
            std::cout << n << ": missing fixture " << path.string() << '\n';
            mismatch = true;
            continue;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        if (buf.str() == text) {
            std::cout << n << ": ok\n";
        } else {
            std::cout << n << ": MISMATCH against " << path.string() << '\n';
            mismatch = true;
        }
    }
    return mismatch ? kExitMismatch : 0;
}

struct GridOptions {
    std::string grid;  // "parts=2,len=4,cells=4"
    int parts = 2;
    int length = 4;
    int cells = 4;
    int jobs = 1;

    verify::GridSpec spec() const {
        verify::GridSpec g{parts, length, cells, jobs};
        std::istringstream is(grid);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            std::string key = tok.substr(0, eq);
            int value = std::stoi(tok.substr(eq + 1));
            if (key == "parts") g.parts = value;
            else if (key == "len") g.length = value;
            else if (key == "cells") g.cells = value;
            else throw std::invalid_argument("unknown grid key: " + key);
        }
        return g;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kohnert diagram calculator: characters, atoms, and insertion"};
    app.require_subcommand(1);

    std::string alpha_csv, beta_csv, lambda_csv, diagram_json, rows_csv, basis = "atom";
    std::string fixtures = "fixtures", golden_name = "all", checks = "all", tableau_json;
    int k = -1, budget = -1, tableau_index = -1;
    bool count_only = false, as_json = false, trace = false, write = false, ungrouped = false;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "cell budget for closures (default 12)");
    };

    auto* kd = app.add_subcommand("kd", "Kohnert diagrams of a composition");
    kd->add_option("--alpha", alpha_csv)->required();
    kd->add_flag("--count", count_only);
    kd->add_flag("--json", as_json);
    add_budget(kd);

    auto* akd = app.add_subcommand("akd", "atomic Kohnert diagrams");
    akd->add_option("--alpha", alpha_csv)->required();
    akd->add_flag("--count", count_only);
    akd->add_flag("--json", as_json);
    add_budget(akd);

    auto* pkd = app.add_subcommand("pkd", "pinned Kohnert diagrams");
    pkd->add_option("--alpha", alpha_csv)->required();
    pkd->add_flag("--count", count_only);
    pkd->add_flag("--json", as_json);
    add_budget(pkd);

    auto* threads = app.add_subcommand("threads", "thread decomposition");
    threads->add_option("--alpha", alpha_csv);
    threads->add_option("--diagram", diagram_json, "diagram as {\"cells\":[[c,r],...]}");
    threads->add_flag("--json", as_json);

    auto* label = app.add_subcommand("label", "proper labeling of a diagram");
    label->add_option("--alpha", alpha_csv)->required();
    label->add_option("--diagram", diagram_json);
    label->add_flag("--json", as_json);

    auto* insert = app.add_subcommand("insert", "restricted insertion of rows");
    insert->add_option("--beta", beta_csv)->required();
    insert->add_option("--k", k)->required();
    insert->add_option("--rows", rows_csv)->required();
    insert->add_option("--diagram", diagram_json, "starting diagram (default D(beta))");
    insert->add_flag("--trace", trace);
    insert->add_flag("--json", as_json);

    auto* excise_cmd = app.add_subcommand("excise", "undo one restricted insertion");
    excise_cmd->add_option("--beta", beta_csv)->required();
    excise_cmd->add_option("--k", k)->required();
    excise_cmd->add_option("--diagram", diagram_json)->required();
    excise_cmd->add_flag("--json", as_json);

    auto* product = app.add_subcommand("product", "insert a reverse tableau into a diagram");
    product->add_option("--beta", beta_csv)->required();
    product->add_option("--lambda", lambda_csv)->required();
    product->add_option("--diagram", diagram_json, "starting diagram (default D(beta))");
    product->add_option("--tableau", tableau_json,
                        "tableau as {\"shape\":[...],\"rows\":[[...],...]}");
    product->add_option("--tableau-index", tableau_index, "index into the sorted tableau list");
    product->add_flag("--json", as_json);

    auto* expand = app.add_subcommand("expand", "expand a character times a Schur polynomial");
    expand->add_option("--beta", beta_csv)->required();
    expand->add_option("--lambda", lambda_csv)->required();
    expand->add_option("--basis", basis, "atom|schubert|key");
    expand->add_option("--k", k, "restriction (default: length of lambda)");
    expand->add_flag("--json", as_json);
    expand->add_flag("--ungrouped", ungrouped, "experimental ungrouped signed expansion");
    add_budget(expand);

    GridOptions grid_options;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity checks on a grid");
    verify_cmd->add_option("--grid", grid_options.grid, "parts=2,len=4,cells=4");
    verify_cmd->add_option("--parts", grid_options.parts);
    verify_cmd->add_option("--len", grid_options.length);
    verify_cmd->add_option("--cells", grid_options.cells);
    verify_cmd->add_option("--jobs", grid_options.jobs, "worker threads");
    verify_cmd->add_option("--checks", checks,
                           "comma list: decomposition,atom,schubert,key,intersection,counting,rsk,"
                           "invertibility (default all)");

    auto* render_cmd = app.add_subcommand("render", "ascii picture of a diagram");
    render_cmd->add_option("--alpha", alpha_csv);
    render_cmd->add_option("--diagram", diagram_json);

    auto* golden_cmd = app.add_subcommand("golden", "regenerate paper artifacts and diff fixtures");
    golden_cmd->add_option("name", golden_name, "artifact name or 'all'");
    golden_cmd->add_option("--fixtures", fixtures, "fixture directory");
    golden_cmd->add_flag("--write", write, "rewrite fixtures instead of diffing");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*kd || *akd || *pkd) {
            Composition a = parse_composition(alpha_csv);
            std::vector<Diagram> list = *kd    ? kohnert_diagrams(a, budget)
                                        : *akd ? atomic_kohnert_diagrams(a, budget)
                                               : pinned_kohnert_diagrams(a, budget);
            emit_diagram_list(list, int(a.size()), count_only, as_json);
            return 0;
        }
        if (*threads) {
            Diagram d = diagram_argument(diagram_json, alpha_csv);
            int length = std::max(
                d.max_row(), alpha_csv.empty() ? 1 : int(parse_composition(alpha_csv).size()));
            if (as_json) {
                json out = json::array();
                for (const Thread& t : thread_decomposition(d)) {
                    json cells = json::array();
                    for (const Cell& c : t.cells) cells.push_back({c.col, c.row});
                    out.push_back({{"cells", cells}, {"terminal_row", t.terminal_row}});
                }
                std::cout << json{{"threads", out}, {"thread_weight", thread_weight(d, length)}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << render_threads(d);
                std::cout << "thread weight: " << to_string(thread_weight(d, length)) << '\n';
            }
            return 0;
        }
        if (*label) {
            Composition a = parse_composition(alpha_csv);
            Diagram d = diagram_json.empty() ? composition_diagram(a)
                                             : diagram_from_json(json::parse(diagram_json));
            auto res = proper_labeling(d, a);
            if (!res.ok()) {
                std::cerr << "unlabelable: "
                          << (res.failure == LabelFailure::column_mismatch ? "column count mismatch"
                                                                           : "no legal label")
                          << " at " << to_string(res.failed_at) << '\n';
                return kExitError;
            }
            if (as_json)
                std::cout << to_json(res.labeling).dump() << '\n';
            else {
                std::cout << render_labeling(res.labeling);
                std::cout << "flagged: " << (is_flagged(res.labeling) ? "yes" : "no")
                          << ", pinned: " << (is_pinned(res.labeling) ? "yes" : "no") << '\n';
            }
            return 0;
        }
        if (*insert) {
            Composition b = parse_composition(beta_csv);
            Diagram d = diagram_json.empty() ? composition_diagram(b)
                                             : diagram_from_json(json::parse(diagram_json));
            std::vector<int> rows = parse_int_list(rows_csv);
            IteratedInsertResult run = iterated_insert(d, b, k, rows);
            if (as_json) {
                json chain = json::array();
                for (const KChainStep& s : run.chain) chain.push_back(to_json(s));
                json traces = json::array();
                for (const RectTrace& t : run.traces) traces.push_back(to_json(t));
                json alphas = json::array();
                for (const Composition& a : run.alpha_chain) alphas.push_back(a);
                std::cout << json{{"diagram", to_json(run.diagram)},
                                  {"chain", chain},
                                  {"traces", traces},
                                  {"alpha_chain", alphas}}
                                 .dump()
                          << '\n';
                return 0;
            }
            Diagram current = d;
            Composition labelc = b;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::cout << "insert row " << rows[i] << " with label " << to_string(labelc)
                          << ":\n";
                if (trace) {
                    int start_col = 1;
                    for (int v : labelc) start_col = std::max(start_col, v + 1);
                    std::cout << render_trace_panel(current, run.traces[i], {start_col, rows[i]});
                }
                for (const RectStep& step : run.traces[i].steps) {
                    if (step.kind == RectStep::Kind::bump)
                        current = current.with_cell(step.position).without_cell(*step.bumped);
                    else if (step.kind == RectStep::Kind::land)
                        current = current.with_cell(step.position);
                }
                std::cout << "landing " << to_string(run.traces[i].landing) << ", label becomes "
                          << to_string(run.chain[i].after) << "\n\n";
                labelc = run.chain[i].after;
            }
            std::cout << render_diagram(run.diagram);
            std::cout << "thread weight " << to_string(thread_weight(run.diagram, int(b.size())))
                      << '\n';
            return 0;
        }
        if (*excise_cmd) {
            Composition b = parse_composition(beta_csv);
            Diagram u = diagram_from_json(json::parse(diagram_json));
            ExciseResult res = excise(u, b, k);
            if (as_json)
                std::cout << json{{"diagram", to_json(res.diagram)}, {"row", res.row}}.dump()
                          << '\n';
            else {
                std::cout << render_diagram(res.diagram);
                std::cout << "excised row " << res.row << '\n';
            }
            return 0;
        }
        if (*product) {
            Composition b = parse_composition(beta_csv);
            Composition l = parse_composition(lambda_csv);
            Diagram d = diagram_json.empty() ? composition_diagram(b)
                                             : diagram_from_json(json::parse(diagram_json));
            ReverseTableau r;
            if (!tableau_json.empty()) {
                json j = json::parse(tableau_json);
                r.shape = j.at("shape").get<Composition>();
                r.rows = j.at("rows").get<std::vector<std::vector<int>>>();
            } else {
                auto all = generate_ssrt(l);
                if (tableau_index < 0 || tableau_index >= int(all.size()))
                    throw std::invalid_argument("pass --tableau or --tableau-index below " +
                                                std::to_string(all.size()));
                r = all[std::size_t(tableau_index)];
            }
            TwoLineArray biword = tableau_to_biword(r);
            std::vector<int> rows;
            for (const auto& [q, row] : biword.pairs) rows.push_back(row);
            IteratedInsertResult run = iterated_insert(d, b, int(l.size()), rows);
            SkewTableau atomic = record(run, b, int(l.size()), biword);
            SkewTableau key = atomic_to_key(atomic);
            if (as_json) {
                std::cout << json{{"diagram", to_json(run.diagram)},
                                  {"atomic", to_json(atomic)},
                                  {"key", to_json(key)}}
                                 .dump()
                          << '\n';
                return 0;
            }
            std::cout << "insertion diagram:\n" << render_diagram(run.diagram) << '\n';
            std::cout << "atomic recording tableau:\n" << render_skew(atomic) << '\n';
            std::cout << "key recording tableau:\n" << render_skew(key);
            return 0;
        }
        if (*expand) {
            Composition b = parse_composition(beta_csv);
            Composition l = parse_composition(lambda_csv);
            if (k < 0) k = int(l.size());
            json coeffs = json::array();
            if (basis == "atom") {
                for (const auto& [g, c] : atom_expansion(b, l, k, budget)) {
                    coeffs.push_back({{"index", g}, {"value", c}});
                    if (!as_json) std::cout << to_string(g) << ": " << c << '\n';
                }
            } else if (basis == "schubert") {
                for (const SchubertTerm& t : schubert_expansion(b, l, k)) {
                    json gens = json::array();
                    for (const Composition& g : t.ideal.generators) gens.push_back(g);
                    coeffs.push_back(
                        {{"index", t.columns}, {"generators", gens}, {"value", t.coefficient}});
                    if (!as_json) {
                        std::cout << "columns";
                        for (int c : t.columns) std::cout << ' ' << c;
                        std::cout << ", ideal generated by";
                        for (const Composition& g : t.ideal.generators)
                            std::cout << ' ' << to_string(g);
                        std::cout << ": " << t.coefficient << '\n';
                    }
                }
            } else if (basis == "key") {
                for (const auto& [g, c] : signed_key_expansion(b, l, k, !ungrouped)) {
                    coeffs.push_back({{"index", g}, {"value", c}});
                    if (!as_json) std::cout << to_string(g) << ": " << c << '\n';
                }
            } else {
                throw std::invalid_argument("basis must be atom, schubert, or key");
            }
            if (as_json)
                std::cout << json{{"basis", basis},
                                  {"beta", b},
                                  {"lambda", l},
                                  {"k", k},
                                  {"coefficients", coeffs}}
                                 .dump()
                          << '\n';
            return 0;
        }
        if (*verify_cmd) {
            verify::GridSpec g = grid_options.spec();
            g.jobs = grid_options.jobs;
            std::vector<verify::CheckResult> results;
            auto want = [&](const std::string& name) {
                return checks == "all" || checks.find(name) != std::string::npos;
            };
            if (want("decomposition")) results.push_back(verify::check_decomposition(g));
            if (want("atom")) results.push_back(verify::check_atom_expansion(g));
            if (want("schubert")) results.push_back(verify::check_schubert_expansion(g));
            if (want("key")) results.push_back(verify::check_signed_expansion(g));
            if (want("intersection")) results.push_back(verify::check_intersections(8));
            if (want("counting")) results.push_back(verify::check_counting(g));
            if (want("rsk")) results.push_back(verify::check_rsk_equivalence(5, 4));
            if (want("invertibility")) results.push_back(verify::check_invertibility(g, 4));
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checked
                          << " cases, " << r.seconds << "s)";
                if (!r.pass) std::cout << "  " << r.detail;
                std::cout << '\n';
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : kExitMismatch;
        }
        if (*render_cmd) {
            std::cout << render_diagram(diagram_argument(diagram_json, alpha_csv));
            return 0;
        }
        if (*golden_cmd) {
            return run_golden(golden_name, fixtures, write);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
