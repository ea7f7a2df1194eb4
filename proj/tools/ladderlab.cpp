#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladderlab/config.hpp"
#include "ladderlab/constructions.hpp"
#include "ladderlab/core.hpp"
#include "ladderlab/digraph.hpp"
#include "ladderlab/ramsey.hpp"
#include "ladderlab/search.hpp"
#include "ladderlab/setlang.hpp"

using namespace ladderlab;
using ordered_json = nlohmann::ordered_json;

namespace {

// exit codes: 0 success, 1 claim-false/none-found, 2 usage, 3 resource/interrupt
constexpr int kOk = 0, kNone = 1, kUsage = 2, kResource = 3;

std::string g_out_path;

void emit(const std::string& payload) {
    if (g_out_path.empty()) {
        std::cout << payload << '\n';
    } else {
        std::ofstream out(g_out_path);
        if (!out) throw std::runtime_error("cannot open output file " + g_out_path);
        out << payload << '\n';
    }
}

void emit_cert(const Certificate& cert) { emit(certificate_to_json(cert)); }

Coloring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coloring file " + path);
    ordered_json j = ordered_json::parse(in);
    Coloring c;
    c.N = j.at("N").get<long long>();
    c.r = j.at("r").get<int>();
    c.colors = j.at("assignment").get<std::vector<int>>();
    if (static_cast<long long>(c.colors.size()) != c.N)
        throw std::runtime_error("coloring assignment length disagrees with N");
    for (int v : c.colors)
        if (v < 0 || v >= c.r) throw std::runtime_error("color value out of range");
    return c;
}

ordered_json window_json(const SetExprPtr& expr, const SortedWindow& win) {
    ordered_json j;
    j["expr"] = render(expr);
    j["N"] = win.N();
    j["elements"] = win.elements();
    if (!win.excluded().empty()) j["excluded"] = win.excluded();
    return j;
}

std::string rational_str(const Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

int emit_threshold(const ThresholdResult& res) {
    emit_cert(threshold_certificate(res));
    bool found = res.outcome == ThresholdResult::Outcome::Found;
    std::cerr << (found ? "found threshold N=" : "no threshold up to N=") << res.N << '\n';
    std::cerr << "stats: {\"nodes\": " << res.nodes << "}\n";
    return found ? kOk : kNone;
}

std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for ladders, accessible and walkable sets"};
    app.require_subcommand(1);
    app.fallthrough(); // accept global flags after the subcommand too

    std::string config_path;
    app.add_option("--config", config_path, "config file (or LADDERLAB_CONFIG)");
    app.add_option("--out", g_out_path, "write machine output here instead of stdout");
    int flag_workers = 0;
    long long flag_cap = 0, flag_time = 0;
    long long flag_budget = 0;
    app.add_option("--workers", flag_workers, "engine worker threads");
    app.add_option("--window-cap", flag_cap, "materialization cap");
    app.add_option("--node-budget", flag_budget, "search node budget");
    app.add_option("--time-limit-ms", flag_time, "search time limit");

    std::string expr_text, x_expr_text, s_expr_text, file_arg, coloring_path, floors_path,
        ns_list;
    long long N = 0, len = 0, mlen = 0, nmax = 0, n_param = 0, k_param = 0, dim = 0,
              target = 0, maxdim = 0, height = 0, mod_n = 0, mod_k = 0;
    int colors = 0;
    unsigned long long budget = 1'000'000'000ULL;

    auto* eval_cmd = app.add_subcommand("eval", "materialize a set window");
    eval_cmd->add_option("expr", expr_text)->required();
    eval_cmd->add_option("--N", N)->required();

    auto* density_cmd = app.add_subcommand("density", "window or relative density");
    density_cmd->add_option("expr", expr_text)->required();
    density_cmd->add_option("--N", N);
    density_cmd->add_option("--mod", mod_n);
    density_cmd->add_option("--k", mod_k);

    auto* monoap_cmd = app.add_subcommand("mono-ap", "search a coloring for a mono AP");
    monoap_cmd->add_option("--expr", expr_text)->required();
    monoap_cmd->add_option("--coloring", coloring_path)->required();
    monoap_cmd->add_option("--len", len)->required();

    auto* walk_cmd = app.add_subcommand("walk", "longest mono walk in a coloring");
    walk_cmd->add_option("--expr", expr_text)->required();
    walk_cmd->add_option("--coloring", coloring_path)->required();

    auto* cube_cmd = app.add_subcommand("cube", "combinatorial cube detection");
    cube_cmd->add_option("--expr", expr_text)->required();
    cube_cmd->add_option("--dim", dim)->required();
    cube_cmd->add_option("--N", N)->required();
    cube_cmd->add_option("--budget", budget);

    auto* hom_cmd = app.add_subcommand("homothetic", "find x with x..nx in the set");
    hom_cmd->add_option("--expr", expr_text)->required();
    hom_cmd->add_option("--n", n_param)->required();
    hom_cmd->add_option("--N", N)->required();

    auto* vdw_cmd = app.add_subcommand("vdw", "AP threshold over colorings");
    vdw_cmd->add_option("--expr", expr_text)->required();
    vdw_cmd->add_option("--len", len)->required();
    vdw_cmd->add_option("--colors", colors)->required();
    vdw_cmd->add_option("--nmax", nmax)->required();

    auto* wt_cmd = app.add_subcommand("walk-threshold", "walk threshold over colorings");
    wt_cmd->add_option("--expr", expr_text)->required();
    wt_cmd->add_option("--mlen", mlen)->required();
    wt_cmd->add_option("--colors", colors)->required();
    wt_cmd->add_option("--nmax", nmax)->required();

    auto* adv_cmd = app.add_subcommand("adversarial", "interval-partition coloring");
    adv_cmd->add_option("--expr", expr_text)->required();
    adv_cmd->add_option("--k", k_param)->required();
    adv_cmd->add_option("--N", N)->required();

    auto* hgrow_cmd = app.add_subcommand("hgrow", "grow H with H-H inside the set");
    hgrow_cmd->add_option("--expr", expr_text)->required();
    hgrow_cmd->add_option("--target", target)->required();
    hgrow_cmd->add_option("--N", N)->required();

    auto* sl_cmd = app.add_subcommand("sparse-ladder", "cube-bearing sparse set");
    sl_cmd->add_option("--floors", floors_path)->required();
    sl_cmd->add_option("--maxdim", maxdim)->required();
    sl_cmd->add_option("--N", N)->required();

    auto* diag_cmd = app.add_subcommand("diagonal", "diagonal include/exclude set");
    diag_cmd->add_option("--height", height)->required();
    diag_cmd->add_option("--N", N)->required();

    auto* dp_cmd = app.add_subcommand("digraph-partition", "split edges into two DAGs");
    dp_cmd->add_option("file", file_arg)->required();

    auto* cg_cmd = app.add_subcommand("chromatic-growth", "greedy colors per window");
    cg_cmd->add_option("--expr", expr_text)->required();
    cg_cmd->add_option("--ns", ns_list)->required();

    auto* sap_cmd = app.add_subcommand("subset-ap", "AP inside a subset, steps in S");
    sap_cmd->add_option("--x-expr", x_expr_text)->required();
    sap_cmd->add_option("--s-expr", s_expr_text)->required();
    sap_cmd->add_option("--len", len)->required();
    sap_cmd->add_option("--N", N)->required();

    auto* verify_cmd = app.add_subcommand("verify", "replay a certificate");
    verify_cmd->add_option("file", file_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        ToolConfig cfg = config_load(config_path);
        if (flag_workers > 0) cfg.workers = flag_workers;
        if (flag_cap > 0) cfg.window_cap = flag_cap;
        if (flag_budget > 0) cfg.node_budget = static_cast<unsigned long long>(flag_budget);
        if (flag_time > 0) cfg.time_limit_ms = flag_time;
        EngineLimits limits{cfg.node_budget, cfg.workers, cfg.time_limit_ms};

        if (*eval_cmd) {
            SetExprPtr e = parse(expr_text);
            emit(window_json(e, materialize(e, N, cfg.window_cap)).dump());
            return kOk;
        }
        if (*density_cmd) {
            SetExprPtr e = parse(expr_text);
            ordered_json j;
            j["expr"] = render(e);
            if (mod_n > 0) {
                if (mod_k < 1) throw CLI::ValidationError("--mod needs --k");
                j["mod"] = mod_n;
                j["k"] = mod_k;
                j["density"] = rational_str(relative_density(e, mod_n, mod_k));
            } else {
                if (N < 1) throw CLI::ValidationError("density needs --N or --mod/--k");
                j["N"] = N;
                j["density"] = rational_str(density(materialize(e, N, cfg.window_cap)));
            }
            emit(j.dump());
            return kOk;
        }
        if (*monoap_cmd) {
            SetExprPtr e = parse(expr_text);
            Coloring col = load_coloring(coloring_path);
            SortedWindow win = materialize(e, col.N, cfg.window_cap);
            Certificate cert;
            cert.expr = render(e);
            cert.N = col.N;
            cert.r = col.r;
            cert.param = len;
            cert.coloring = col;
            if (auto w = find_mono_ap(col, win, len)) {
                cert.claim = Claim::WitnessFound;
                cert.witness = *w;
                emit_cert(cert);
                std::cerr << "mono AP found: a=" << w->a << " d=" << w->d << '\n';
                return kOk;
            }
            cert.claim = Claim::NoMonoAp;
            emit_cert(cert);
            std::cerr << "no monochromatic " << len << "-term AP\n";
            return kNone;
        }
        if (*walk_cmd) {
            SetExprPtr e = parse(expr_text);
            Coloring col = load_coloring(coloring_path);
            SortedWindow win = materialize(e, col.N, cfg.window_cap);
            WalkWitness w = longest_mono_walk(col, win);
            Certificate cert;
            cert.claim = Claim::WitnessFound;
            cert.expr = render(e);
            cert.N = col.N;
            cert.r = col.r;
            cert.param = static_cast<long long>(w.vertices.size());
            cert.coloring = col;
            cert.witness = w;
            emit_cert(cert);
            std::cerr << "longest mono walk: " << w.vertices.size() << " elements\n";
            return kOk;
        }
        if (*cube_cmd) {
            SetExprPtr e = parse(expr_text);
            SortedWindow win = materialize(e, N, cfg.window_cap);
            CubeSearchResult res = detect_cube(win, dim, budget);
            if (res.witness) {
                Certificate cert;
                cert.claim = Claim::WitnessFound;
                cert.expr = render(e);
                cert.N = N;
                cert.param = dim;
                cert.witness = *res.witness;
                emit_cert(cert);
                std::cerr << "cube of dimension " << dim << " found\n";
                return kOk;
            }
            ordered_json j;
            j["expr"] = render(e);
            j["N"] = N;
            j["dim"] = dim;
            j["found"] = false;
            j["exhausted"] = res.exhausted;
            emit(j.dump());
            std::cerr << "none (" << (res.exhausted ? "search exhausted" : "budget hit")
                      << ", " << res.nodes << " nodes)\n";
            return kNone;
        }
        if (*hom_cmd) {
            SetExprPtr e = parse(expr_text);
            SortedWindow win = materialize(e, N, cfg.window_cap);
            if (auto w = find_homothetic(win, n_param)) {
                Certificate cert;
                cert.claim = Claim::WitnessFound;
                cert.expr = render(e);
                cert.N = N;
                cert.param = n_param;
                cert.witness = *w;
                emit_cert(cert);
                std::cerr << "homothetic progression at x=" << w->x << '\n';
                return kOk;
            }
            std::cerr << "none\n";
            return kNone;
        }
        if (*vdw_cmd)
            return emit_threshold(vdw_threshold(parse(expr_text), len, colors, nmax, limits));
        if (*wt_cmd)
            return emit_threshold(walk_threshold(parse(expr_text), mlen, colors, nmax, limits));
        if (*adv_cmd) {
            SetExprPtr e = parse(expr_text);
            SortedWindow win = materialize(e, N, cfg.window_cap);
            try {
                IntervalPartition part = interval_partition(win, k_param);
                Coloring col = adversarial_coloring(win, k_param, part);
                WalkWitness longest = longest_mono_walk(col, win);
                Certificate cert;
                cert.claim = Claim::NoMonoWalk;
                cert.expr = render(e);
                cert.N = N;
                cert.r = static_cast<int>(k_param) + 2;
                cert.param = static_cast<long long>(longest.vertices.size()) + 1;
                cert.coloring = std::move(col);
                cert.partition = part.intervals;
                emit_cert(cert);
                std::cerr << "adversarial " << (k_param + 2) << "-coloring emitted; "
                          << "longest mono walk has " << longest.vertices.size()
                          << " elements\n";
                return kOk;
            } catch (const GapConditionUnverifiable& ex) {
                std::cerr << "construction refused: " << ex.what() << '\n';
                return kNone;
            }
        }
        if (*hgrow_cmd) {
            SetExprPtr e = parse(expr_text);
            SortedWindow win = materialize(e, N, cfg.window_cap);
            ordered_json j;
            j["expr"] = render(e);
            j["N"] = N;
            try {
                DifferenceSet H = grow_difference_set(win, target);
                j["H"] = H.elements;
                emit(j.dump());
                return kOk;
            } catch (const WindowExhausted& ex) {
                j["H"] = ex.partial();
                j["exhausted"] = true;
                emit(j.dump());
                std::cerr << ex.what() << '\n';
                return kNone;
            }
        }
        if (*sl_cmd) {
            std::ifstream in(floors_path);
            if (!in) throw std::runtime_error("cannot open floors file " + floors_path);
            std::vector<long long> floors;
            long long v;
            while (in >> v) floors.push_back(v);
            SortedWindow win = sparse_ladder(floors, maxdim, N);
            ordered_json j;
            j["N"] = win.N();
            j["elements"] = win.elements();
            emit(j.dump());
            return kOk;
        }
        if (*diag_cmd) {
            SortedWindow win = diagonal_set(height, N, cfg.window_cap);
            ordered_json j;
            j["height"] = height;
            j["N"] = N;
            j["elements"] = win.elements();
            j["excluded"] = win.excluded();
            emit(j.dump());
            return kOk;
        }
        if (*dp_cmd) {
            std::ifstream in(file_arg);
            if (!in) throw std::runtime_error("cannot open edge-list file " + file_arg);
            Digraph g = read_edge_list(in);
            std::vector<long long> ordering(static_cast<std::size_t>(g.vertex_count()));
            for (std::size_t i = 0; i < ordering.size(); ++i)
                ordering[i] = static_cast<long long>(i);
            auto [g1, g2] = partition_acyclic(g, ordering);
            ordered_json j;
            j["V"] = g.vertex_count();
            j["E1"] = ordered_json::array();
            for (const auto& [u, w] : g1.edges()) j["E1"].push_back({u, w});
            j["E2"] = ordered_json::array();
            for (const auto& [u, w] : g2.edges()) j["E2"].push_back({u, w});
            emit(j.dump());
            return kOk;
        }
        if (*cg_cmd) {
            SetExprPtr e = parse(expr_text);
            auto rows = chromatic_growth(e, parse_ll_list(ns_list), cfg.window_cap);
            std::string csv = "N,colors\n";
            for (const auto& row : rows)
                csv += std::to_string(row.N) + "," + std::to_string(row.colors) + "\n";
            csv.pop_back();
            emit(csv);
            return kOk;
        }
        if (*sap_cmd) {
            SetExprPtr x = parse(x_expr_text);
            SetExprPtr s = parse(s_expr_text);
            SortedWindow xw = materialize(x, N, cfg.window_cap);
            SortedWindow sw = materialize(s, N, cfg.window_cap);
            if (auto w = find_ap_in_subset(xw, sw, len)) {
                Certificate cert;
                cert.claim = Claim::WitnessFound;
                cert.expr = render(x);
                cert.aux_expr = render(s);
                cert.N = N;
                cert.param = len;
                cert.witness = *w;
                emit_cert(cert);
                std::cerr << "AP in subset: a=" << w->a << " d=" << w->d << '\n';
                return kOk;
            }
            std::cerr << "none\n";
            return kNone;
        }
        if (*verify_cmd) {
            std::ifstream in(file_arg);
            if (!in) throw std::runtime_error("cannot open certificate file " + file_arg);
            std::stringstream ss;
            ss << in.rdbuf();
            Certificate cert = certificate_from_json(ss.str());
            VerifyReport report = verify_certificate(cert, cfg.node_budget, cfg.window_cap);
            std::cerr << (report.pass ? "pass: " : "fail: ") << report.detail << '\n';
            return report.pass ? kOk : kNone;
        }
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConstantTermError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const MalformedCertificate& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResource;
    } catch (const Interrupted& e) {
        std::cerr << "interrupted: " << e.what() << " (best depth "
                  << e.best_depth() << ")\n";
        return kResource;
    } catch (const WindowTooSmall& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
