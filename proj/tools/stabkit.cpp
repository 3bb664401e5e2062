// stabkit: command-line front end. Exit codes: 0 yes/valid, 1 no/invalid,
// 2 usage, format or internal error.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stabkit/constructors.hpp"
#include "stabkit/error.hpp"
#include "stabkit/families.hpp"
#include "stabkit/interval.hpp"
#include "stabkit/json_io.hpp"
#include "stabkit/oracle.hpp"
#include "stabkit/recognizers.hpp"

using namespace stabkit;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Graph read_graph(const std::string& path) { return parse_edge_list_string(slurp(path)); }

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
}

Mode parse_mode(const std::string& m) { return m == "srig" ? Mode::SRIG : Mode::ESRIG; }

Engine parse_engine(const std::string& e) {
    if (e == "pairwise") return Engine::Pairwise;
    if (e == "sweep") return Engine::Sweep;
    return Engine::Auto;
}

// Validates before anything reaches stdout.
void emit_rep(const StabbedRepresentation& r, const Graph& g, Mode mode, const std::string& emit, const std::string& out,
              Engine engine = Engine::Auto) {
    auto report = validate(r, g, mode, engine);
    if (!report.valid()) throw InternalError("refusing to emit an invalid representation");
    if (emit == "graph") write_out(out, to_edge_list(g));
    else if (emit == "svg") write_out(out, to_svg(r, "validator: valid"));
    else write_out(out, dump_json(rep_to_json(r)));
}

struct Figure {
    std::string file;
    StabbedRepresentation rep;
    Graph graph;
    Mode mode;
};

int regen_figures(const std::string& outdir) {
    std::filesystem::create_directories(outdir);
    auto fx = fixture_reps();
    auto grid = grid_rep(3, 5);
    auto gap = gen_gap_tree(4);
    std::vector<Figure> figs{
        {"k33.svg", fx.k33.rep, fx.k33.graph, Mode::ESRIG},
        {"k44.svg", fx.k44.rep, fx.k44.graph, Mode::SRIG},
        {"grid_3x5.svg", grid.rep, grid.graph, Mode::ESRIG},
        {"G3.svg", rep_G(3), gen_G(3).graph, Mode::ESRIG},
        {"F3_path_on_top.svg", rep_F(3, FMode::PathOnTop), gen_F(3).graph, Mode::ESRIG},
        {"F3_roots_only.svg", rep_F(3, FMode::RootsOnly), gen_F(3).graph, Mode::ESRIG},
        {"gap_tree_4.svg", gap.rep, gap.graph, Mode::SRIG},
    };
    for (const auto& f : figs) {
        auto report = validate(f.rep, f.graph, f.mode);
        std::string status = report.valid() ? "valid" : "INVALID";
        std::string mode = f.mode == Mode::SRIG ? "srig" : "esrig";
        write_out((std::filesystem::path(outdir) / f.file).string(),
                  to_svg(f.rep, "validator: " + status + " (" + mode + ", " + std::to_string(f.rep.k()) + " stab lines)"));
        if (!report.valid()) throw InternalError(f.file + " failed validation");
        std::cerr << "wrote " << f.file << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabkit: stabbed rectangle intersection representations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "Seed for randomized instance generation")->capture_default_str();

    // recognize
    auto* rec = app.add_subcommand("recognize", "Certifying recognition; exit 0 with a representation or 1 with a certificate");
    std::string rec_kind, rec_graph;
    rec->add_option("kind", rec_kind, "interval | 2esrig-block | 3esrig-tree")
        ->required()
        ->check(CLI::IsMember({"interval", "2esrig-block", "3esrig-tree"}));
    rec->add_option("graph", rec_graph, "Edge-list file ('-' for stdin)")->required();

    // construct
    auto* con = app.add_subcommand("construct", "Build a representation with one of the constructions");
    std::string con_kind, con_graph, con_rep, con_emit = "rep", con_out;
    int con_h = 2, con_w = 2, con_clique = 4, con_indep = 6;
    con->add_option("kind", con_kind, "grid | block | split | fixture | split-fixture | planted-split | k33 | k44")
        ->required()
        ->check(CLI::IsMember({"grid", "block", "split", "fixture", "split-fixture", "planted-split", "k33", "k44"}));
    std::string con_name = "k33";
    con->add_option("--name", con_name, "Fixture for 'fixture': k33 | k44 | split")
        ->check(CLI::IsMember({"k33", "k44", "split"}))
        ->capture_default_str();
    con->add_option("graph", con_graph, "Edge-list file for block and split");
    con->add_option("--rep", con_rep, "Box representation JSON of the split graph (split)");
    con->add_option("--rows", con_h, "Grid rows")->capture_default_str();
    con->add_option("--cols", con_w, "Grid columns")->capture_default_str();
    con->add_option("--clique", con_clique, "Clique size (planted-split)")->capture_default_str();
    con->add_option("--independent", con_indep, "Independent set size (planted-split)")->capture_default_str();
    con->add_option("--emit", con_emit, "rep | graph | svg")->check(CLI::IsMember({"rep", "graph", "svg"}))->capture_default_str();
    con->add_option("-o,--out", con_out, "Output file (default stdout)");

    // family
    auto* fam = app.add_subcommand("family", "Generate one of the extremal tree families");
    std::string fam_kind, fam_emit = "rep", fam_out, fam_mode = "path-on-top";
    int fam_l = 2, fam_k = 4;
    fam->add_option("kind", fam_kind, "G | F | D | J | block-ce | tree-not-k | gap")
        ->required()
        ->check(CLI::IsMember({"G", "F", "D", "J", "block-ce", "tree-not-k", "gap"}));
    fam->add_option("--l", fam_l, "Level for G, F, D, J")->capture_default_str();
    fam->add_option("--k", fam_k, "Stab count for tree-not-k and gap")->capture_default_str();
    fam->add_option("--mode", fam_mode, "F layout: path-on-top | roots-only")
        ->check(CLI::IsMember({"path-on-top", "roots-only"}))
        ->capture_default_str();
    fam->add_option("--emit", fam_emit, "rep | graph | svg (block-ce and tree-not-k: graph only)")
        ->check(CLI::IsMember({"rep", "graph", "svg"}))
        ->capture_default_str();
    fam->add_option("-o,--out", fam_out, "Output file (default stdout)");

    // validate
    auto* val = app.add_subcommand("validate", "Check a representation against a graph; exit 0 valid, 1 invalid");
    std::string val_rep, val_graph, val_mode = "esrig", val_engine = "auto";
    val->add_option("rep", val_rep, "Representation JSON")->required();
    val->add_option("graph", val_graph, "Edge-list file")->required();
    val->add_option("--mode", val_mode, "srig | esrig")->check(CLI::IsMember({"srig", "esrig"}))->capture_default_str();
    val->add_option("--engine", val_engine, "auto | pairwise | sweep")
        ->check(CLI::IsMember({"auto", "pairwise", "sweep"}))
        ->capture_default_str();

    // oracle
    auto* ora = app.add_subcommand("oracle", "Exhaustive stab/estab for small graphs (n <= STABKIT_ORACLE_CAP, default 8)");
    std::string ora_graph;
    int ora_k = 0, ora_kmax = 0;
    bool ora_exact = false, ora_witness = false;
    ora->add_option("graph", ora_graph, "Edge-list file")->required();
    auto* ok = ora->add_option("--k", ora_k, "Decide k-SRIG and k-ESRIG; exit 0 iff k-SRIG");
    ora->add_flag("--exact", ora_exact, "Report stab and estab (the default)")->excludes(ok);
    ora->add_option("--k-max", ora_kmax, "Upper end of the estab search (default n)");
    ora->add_flag("--witness", ora_witness, "With --k, also print witness representations");

    // census
    auto* cen = app.add_subcommand("census", "Stab numbers of all small trees or connected graphs, as CSV");
    bool cen_trees = false, cen_connected = false;
    int cen_n = 5;
    std::string cen_out;
    auto* ct = cen->add_flag("--trees", cen_trees, "All trees (n <= 10)");
    cen->add_flag("--connected", cen_connected, "All connected graphs (n <= 8)")->excludes(ct);
    cen->add_option("-n", cen_n, "Number of vertices")->capture_default_str();
    cen->add_option("--out", cen_out, "CSV file (default stdout)");

    // svg
    auto* svg = app.add_subcommand("svg", "Render a representation JSON as SVG");
    std::string svg_rep, svg_graph, svg_out, svg_mode = "esrig";
    svg->add_option("rep", svg_rep, "Representation JSON")->required();
    svg->add_option("--graph", svg_graph, "Edge list; embeds the validator status in a comment");
    svg->add_option("--mode", svg_mode, "srig | esrig, used with --graph")->check(CLI::IsMember({"srig", "esrig"}))->capture_default_str();
    svg->add_option("-o,--out", svg_out, "Output file (default stdout)");

    // regen-figures
    auto* fig = app.add_subcommand("regen-figures", "Write the reference SVG figures");
    std::string fig_dir = "figures";
    fig->add_option("--outdir", fig_dir, "Output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*rec) {
            Graph g = read_graph(rec_graph);
            if (rec_kind == "interval") {
                auto r = is_interval(g);
                if (r.yes()) {
                    std::cout << dump_json(interval_rep_to_json(*r.rep, g));
                    return 0;
                }
                std::cout << dump_json(witness_to_json(*r.witness, g));
                return 1;
            }
            Recognition r = rec_kind == "2esrig-block" ? recognize_block_2esrig(g) : recognize_tree_3esrig(g);
            if (r.yes()) {
                emit_rep(*r.rep, g, Mode::ESRIG, "rep", "");
                return 0;
            }
            std::cout << dump_json(certificate_to_json(*r.cert, g));
            return 1;
        }
        if (*con) {
            if (con_kind == "fixture") con_kind = con_name == "split" ? "split-fixture" : con_name;
            if (con_kind == "grid") {
                auto b = grid_rep(con_h, con_w);
                emit_rep(b.rep, b.graph, Mode::ESRIG, con_emit, con_out);
            } else if (con_kind == "block") {
                if (con_graph.empty()) throw CLI::ValidationError("construct block needs a graph file");
                Graph g = read_graph(con_graph);
                emit_rep(block_graph_rep(g), g, Mode::ESRIG, con_emit, con_out);
            } else if (con_kind == "split") {
                if (con_graph.empty() || con_rep.empty()) throw CLI::ValidationError("construct split needs a graph file and --rep");
                Graph g = read_graph(con_graph);
                auto box = parse_rep(slurp(con_rep));
                emit_rep(split_to_3esrig(g, box), g, Mode::ESRIG, con_emit, con_out);
            } else if (con_kind == "split-fixture" || con_kind == "planted-split") {
                auto b = con_kind == "split-fixture" ? split_fixture() : planted_split(con_clique, con_indep, seed);
                emit_rep(split_to_3esrig(b.graph, b.rep), b.graph, Mode::ESRIG, con_emit, con_out);
            } else {
                auto fx = fixture_reps();
                const auto& b = con_kind == "k33" ? fx.k33 : fx.k44;
                emit_rep(b.rep, b.graph, con_kind == "k33" ? Mode::ESRIG : Mode::SRIG, con_emit, con_out);
            }
            return 0;
        }
        if (*fam) {
            if (fam_kind == "block-ce" || fam_kind == "tree-not-k") {
                if (fam_emit != "graph") throw CLI::ValidationError(fam_kind + " has no representation; use --emit graph");
                Graph g = fam_kind == "block-ce" ? gen_block_counterexample() : gen_tree_not_k_srig(fam_k);
                write_out(fam_out, to_edge_list(g));
                return 0;
            }
            if (fam_kind == "gap") {
                if (fam_k < 10)
                    std::cerr << "warning: the gap tree is only known not to be " << fam_k
                              << "-ESRIG for k >= 10; smaller k are layout checks only\n";
                auto t = gen_gap_tree(fam_k);
                emit_rep(t.rep, t.graph, Mode::SRIG, fam_emit, fam_out, Engine::Sweep);
                return 0;
            }
            FMode m = fam_mode == "roots-only" ? FMode::RootsOnly : FMode::PathOnTop;
            RootedTree t = fam_kind == "G" ? gen_G(fam_l) : fam_kind == "F" ? gen_F(fam_l) : fam_kind == "D" ? gen_D(fam_l) : gen_J(fam_l);
            StabbedRepresentation r = fam_kind == "G"   ? rep_G(fam_l)
                                      : fam_kind == "F" ? rep_F(fam_l, m)
                                      : fam_kind == "D" ? rep_D(fam_l)
                                                        : rep_J(fam_l);
            emit_rep(r, t.graph, Mode::ESRIG, fam_emit, fam_out);
            return 0;
        }
        if (*val) {
            auto r = parse_rep(slurp(val_rep));
            Graph g = read_graph(val_graph);
            auto report = validate(r, g, parse_mode(val_mode), parse_engine(val_engine));
            std::cout << dump_json(report_to_json(report));
            return report.valid() ? 0 : 1;
        }
        if (*ora) {
            Graph g = read_graph(ora_graph);
            if (ok->count() > 0) {
                bool s = stab_oracle(g, ora_k), e = estab_oracle(g, ora_k);
                Json j{{"k", ora_k}, {"srig", s}, {"esrig", e}};
                if (ora_witness) {
                    auto ws = oracle_witness(g, ora_k, Mode::SRIG);
                    auto we = oracle_witness(g, ora_k, Mode::ESRIG);
                    j["srig_witness"] = ws ? rep_to_json(*ws) : Json(nullptr);
                    j["esrig_witness"] = we ? rep_to_json(*we) : Json(nullptr);
                }
                std::cout << dump_json(j);
                return s ? 0 : 1;
            }
            auto nums = stab_numbers(g, ora_kmax > 0 ? std::optional<int>(ora_kmax) : std::nullopt);
            std::cout << dump_json(stab_numbers_to_json(nums));
            return 0;
        }
        if (*cen) {
            if (!cen_trees && !cen_connected) throw CLI::ValidationError("census needs --trees or --connected");
            auto rows = census(cen_trees ? CensusKind::Trees : CensusKind::Connected, cen_n);
            write_out(cen_out, census_csv(rows));
            return 0;
        }
        if (*svg) {
            auto r = parse_rep(slurp(svg_rep));
            std::string comment;
            if (!svg_graph.empty()) {
                Graph g = read_graph(svg_graph);
                comment = validate(r, g, parse_mode(svg_mode)).valid() ? "validator: valid" : "validator: INVALID";
            }
            write_out(svg_out, to_svg(r, comment));
            return 0;
        }
        if (*fig) return regen_figures(fig_dir);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "stabkit: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "stabkit: format error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "stabkit: internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "stabkit: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
