// egctool: generation, exact search, verification, theorem sweeps and
// conjecture harness for edge-girth colorings.
//
// Exit codes: 0 success / egc found / verified; 1 impossible / violations /
// counterexample-free conjecture run with a failed prediction; 2 timeout;
// 3 bad parameters.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "colorings.hpp"
#include "egc.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "hamiltonicity.hpp"
#include "io.hpp"
#include "json.hpp"

using namespace tf;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "egctool 1.0.0";

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw CliError{code, msg}; }

// ---------------------------------------------------------------------------
// input helpers

Graph load_graph(const std::string& arg) {
    // a known catalog name, or a JSON file path ("-" = stdin)
    auto cat = named_catalog();
    if (std::find(cat.begin(), cat.end(), arg) != cat.end()) return named(arg);
    try {
        return graph_from_json(read_file(arg));
    } catch (const std::exception& e) {
        fail(3, "cannot load graph '" + arg + "': " + e.what());
    }
}

Multigraph load_multigraph(const std::string& arg) {
    try {
        return named_multigraph(arg);
    } catch (const std::exception&) {
    }
    try {
        json j = json::parse(read_file(arg));
        Multigraph m;
        m.n = j.at("n").get<int>();
        for (const auto& e : j.at("edges"))
            m.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        m.name = j.value("name", "");
        return m;
    } catch (const std::exception& e) {
        fail(3, "cannot load multigraph '" + arg + "': " + e.what());
    }
}

EdgeColoring load_coloring(const std::string& arg, int* kappa) {
    try {
        return coloring_from_json(read_file(arg), kappa);
    } catch (const std::exception& e) {
        fail(3, "cannot load coloring '" + arg + "': " + e.what());
    }
}

int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(3, "bad integer parameter '" + s + "'");
    }
}

// ---------------------------------------------------------------------------
// deterministic instance-level parallelism for sweeps

template <typename Fn>
std::vector<std::string> run_instances(int count, int jobs, Fn fn) {
    std::vector<std::string> out(count);
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::mutex mu;
    int next = 0;
    auto worker = [&] {
        for (;;) {
            int i;
            {
                std::lock_guard<std::mutex> lk(mu);
                if (next >= count) return;
                i = next++;
            }
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

std::string status_word(EgcStatus s) {
    switch (s) {
        case EgcStatus::Colored: return "colored";
        case EgcStatus::Impossible: return "impossible";
        default: return "timeout";
    }
}

std::string triple_str(const StarTriple& t) {
    return std::to_string(t.a) + "/" + std::to_string(t.b) + "/" + std::to_string(t.c);
}

// ---------------------------------------------------------------------------
// gen

Graph generate(const std::string& family, const std::vector<std::string>& p) {
    auto want = [&](size_t k) {
        if (p.size() != k)
            fail(3, "family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
    };
    try {
        if (family == "named") {
            want(1);
            return named(p[0]);
        }
        if (family == "torus44") {
            want(3);
            return torus44(parse_int(p[0]), parse_int(p[1]), parse_int(p[2]));
        }
        if (family == "klein44") {
            want(2);
            return klein44(parse_int(p[0]), parse_int(p[1]));
        }
        if (family == "circulant") {
            want(3);
            return circulant(parse_int(p[0]), parse_int(p[1]), parse_int(p[2]));
        }
        if (family == "wreath") {
            want(1);
            return wreath(parse_int(p[0]));
        }
        if (family == "prism") {
            want(1);
            return prism(load_graph(p[0]));
        }
        if (family == "subdivided-double") {
            want(1);
            return subdivided_double(load_graph(p[0]));
        }
        if (family == "hex-torus") {
            want(3);
            return hex_torus(parse_int(p[0]), parse_int(p[1]), parse_int(p[2])).g;
        }
        if (family == "hex-klein") {
            want(2);
            return hex_klein(parse_int(p[0]), parse_int(p[1]));
        }
        if (family == "petersen-barrel") {
            want(1);
            return petersen_barrel(parse_int(p[0]));
        }
        if (family == "dod-barrel") {
            want(1);
            return dod_barrel(parse_int(p[0]));
        }
        if (family == "ti-barrel") {
            want(1);
            return ti_barrel(parse_int(p[0]));
        }
        if (family == "nabla") {
            want(1);
            return nabla(load_multigraph(p[0]));
        }
        if (family == "plg-barrel" || family == "plg-mutant-barrel") {
            want(3);
            auto cd = family == "plg-barrel"
                          ? barrel(parse_int(p[0]), parse_int(p[1]), parse_int(p[2]))
                          : mutant_barrel(parse_int(p[0]), parse_int(p[1]), parse_int(p[2]));
            return partial_line_graph(cd);
        }
        if (family == "plg-wreath") {
            want(1);
            return partial_line_graph(wreath_decomposition(parse_int(p[0])));
        }
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        fail(3, e.what());
    }
    fail(3, "unknown family '" + family +
                "' (families: named torus44 klein44 circulant wreath prism "
                "subdivided-double hex-torus hex-klein petersen-barrel dod-barrel "
                "ti-barrel nabla plg-barrel plg-mutant-barrel plg-wreath)");
}

// ---------------------------------------------------------------------------
// egc construct

struct Constructed {
    Graph g;
    EdgeColoring coloring;
    int kappa = 0;
};

Constructed construct(const std::string& what, const std::vector<std::string>& p) {
    Constructed out;
    auto want = [&](size_t k) {
        if (p.size() != k)
            fail(3, "construction '" + what + "' takes " + std::to_string(k) + " parameter(s)");
    };
    try {
        if (what == "zigzag" || what == "zigzag-klein") {
            want(what == "zigzag" ? 3u : 2u);
            CutoutSpec spec;
            spec.surface = what == "zigzag" ? Surface::Torus : Surface::KleinBottle;
            spec.r = parse_int(p[0]);
            spec.t = parse_int(p[1]);
            spec.s = what == "zigzag" ? parse_int(p[2]) : 0;
            auto z = zigzag_coloring(spec);
            if (!z.result.applicable) fail(1, "zigzag coloring not applicable: " + z.result.reason);
            out.g = z.geom.g;
            out.coloring = z.result.coloring;
            out.kappa = 4;
            return out;
        }
        if (what == "q4") {
            want(1);
            auto q = q4_mols_colorings();
            out.g = q.q4;
            out.kappa = 4;
            if (p[0] == "f0")
                out.coloring = q.f0;
            else if (p[0] == "f1")
                out.coloring = q.f1;
            else if (p[0] == "f2")
                out.coloring = q.f2;
            else
                fail(3, "q4 construction wants f0, f1 or f2");
            return out;
        }
        if (what == "wreath") {
            want(1);
            auto w = wreath_plg_coloring(parse_int(p[0]));
            out.g = w.plg.g;
            out.coloring = w.coloring;
            out.kappa = 4;
            return out;
        }
        if (what == "aw") {
            want(0);
            out.g = named("armanios-wells");
            out.coloring = aw_orbit_coloring();
            out.kappa = 5;
            return out;
        }
        if (what == "barrel-abcd" || what == "mutant-barrel-abcd") {
            want(3);
            auto cd = what == "barrel-abcd"
                          ? barrel(parse_int(p[0]), parse_int(p[1]), parse_int(p[2]))
                          : mutant_barrel(parse_int(p[0]), parse_int(p[1]), parse_int(p[2]));
            auto plg = partial_line_graph_info(cd);
            out.g = plg.g;
            out.coloring = barrel_abcd_coloring(plg);
            out.kappa = 4;
            return out;
        }
        if (what == "tower") {
            want(2);
            int k = parse_int(p[1]);
            if (p[0] == "pet") {
                out.g = petersen_barrel(k);
                out.coloring = barrel_tower_coloring(Tower::Pet, k);
            } else if (p[0] == "dod") {
                out.g = dod_barrel(k);
                out.coloring = barrel_tower_coloring(Tower::Dod, k);
            } else if (p[0] == "ti") {
                out.g = ti_barrel(k);
                out.coloring = barrel_tower_coloring(Tower::TI, k);
            } else {
                fail(3, "tower construction wants pet, dod or ti");
            }
            out.kappa = 5;
            return out;
        }
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        fail(3, e.what());
    }
    fail(3, "unknown construction '" + what +
                "' (constructions: zigzag zigzag-klein q4 wreath aw barrel-abcd "
                "mutant-barrel-abcd tower)");
}

json config_echo(const std::string& command, const json& params) {
    return json{{"tool", kVersion}, {"command", command}, {"params", params}};
}

// ---------------------------------------------------------------------------
// theorem sweep predictions

struct ReInstance {
    std::string item;
    CutoutSpec spec;
    bool predicted_egc;
};

bool predict_item3(int t, int r, int s, Surface surf) {
    if (surf == Surface::KleinBottle) return r % 2 == 0 && r >= 6 && t >= 3 && t % 2 == 1;
    switch (t) {
        case 1:
            return r % 2 == 0 && r % 4 != 0 && s % 2 == 1 && s != 1 && r != 3 * s + 1;
        case 2:
            return r % 2 == 0 && r >= 10 && s % 2 == 0 && s >= 4 && s <= r - 4;
        case 3:
            return r % 2 == 0 && r >= 6 && s % 2 == 1 && s >= 3 && s <= r - 3;
        case 4:
            return r % 2 == 0 && r >= 4 && s > 0 && s % 2 == 0;
        default:  // t >= 5
            return r % 2 == 0 && (t + s) % 2 == 0;
    }
}

// ---------------------------------------------------------------------------
// sweeps

int cmd_sweep(const std::string& which, int jobs, double timeout_s,
              const std::string& out_path) {
    std::ostringstream csv;
    bool all_agree = true;
    if (which == "theorem-re") {
        std::vector<ReInstance> inst;
        for (int r = 6; r <= 14; r += 2)
            for (int s = 0; s < r; ++s)
                if (3 <= r) inst.push_back({"3c", {Surface::Torus, r, 3, s}, predict_item3(3, r, s, Surface::Torus)});
        for (int r = 8; r <= 14; r += 2)
            for (int s = 0; s < r; ++s)
                inst.push_back({"3b", {Surface::Torus, r, 2, s}, predict_item3(2, r, s, Surface::Torus)});
        auto rows = run_instances(static_cast<int>(inst.size()), jobs, [&](int i) {
            const auto& in = inst[i];
            std::string engine;
            try {
                Graph g = cutout_geometry(in.spec).g;
                engine = status_word(find_egc(g, timeout_s).status);
            } catch (const std::exception&) {
                engine = "degenerate";
            }
            bool agree = engine == (in.predicted_egc ? "colored" : "impossible") ||
                         (engine == "degenerate" && !in.predicted_egc);
            std::ostringstream row;
            row << in.item << "," << in.spec.r << "," << in.spec.t << "," << in.spec.s
                << "," << (in.predicted_egc ? "egc" : "not-egc") << "," << engine << ","
                << (agree ? "agree" : "DISAGREE");
            if (!agree) row << "!";
            return row.str();
        });
        csv << "item,r,t,s,predicted,engine,agreement\n";
        for (auto& r : rows) {
            if (r.back() == '!') {
                all_agree = false;
                r.pop_back();
            }
            csv << r << "\n";
        }
    } else if (which == "table-ix" || which == "display-x") {
        const auto& cells =
            which == "table-ix" ? published_table_cells() : published_display_cells();
        std::vector<CutoutSpec> specs;
        for (const auto& c : cells) specs.push_back({Surface::Torus, c.r, c.t, c.s});
        auto rows = star_sweep(specs);
        csv << "r,t,s,published,formula,oracle,formula_vs_oracle,published_vs_formula\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            StarTriple rev{row.formula.c, row.formula.b, row.formula.a};
            std::string pubcmp = !row.formula_ok                ? "n/a"
                                 : cells[i].value == row.formula ? "exact"
                                 : cells[i].value == rev         ? "reversed"
                                                                 : "mismatch";
            std::string fo = !row.formula_ok || !row.oracle_ok ? "n/a"
                             : row.agree                       ? "agree"
                                                               : "disagree";
            if (pubcmp == "mismatch" || fo == "disagree") all_agree = false;
            csv << row.r << "," << row.t << "," << row.s << ","
                << triple_str(cells[i].value) << ","
                << (row.formula_ok ? triple_str(row.formula) : row.note) << ","
                << (row.oracle_ok ? triple_str(row.oracle) : "n/a") << "," << fo << ","
                << pubcmp << "\n";
        }
    } else {
        fail(3, "unknown sweep '" + which + "' (sweeps: theorem-re table-ix display-x)");
    }
    write_file(out_path, csv.str());
    return all_agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// conjectures

int cmd_conjecture(const std::string& which, double timeout_s, const std::string& out_path) {
    std::ostringstream rep;
    bool counterexample = false, timed_out = false;
    rep << kVersion << " conjecture " << which << "\n";
    if (which == "2egcs") {
        // claim: graphs with signatures (3,2,2,1) and (4,4,4,3) are not egc
        for (const char* nm : {"truncated-octahedron", "k33"}) {
            Graph g = prism(named(nm));
            auto sig = signature(g);
            auto v = find_egc(g, timeout_s);
            rep << "prism(" << nm << "): sig=(";
            for (size_t i = 0; i < sig.sig.size(); ++i)
                rep << (i ? "," : "") << sig.sig[i];
            rep << ") verdict=" << status_word(v.status) << " nodes=" << v.nodes << "\n";
            if (v.status == EgcStatus::Colored) {
                counterexample = true;
                rep << "  COUNTEREXAMPLE coloring: " << coloring_to_json(v.coloring, 4);
            }
            if (v.status == EgcStatus::Timeout) timed_out = true;
        }
    } else if (which == "att") {
        // claim: all-even translation periods of a hexagonal torus quotient
        // are sufficient for its prism to be egc
        struct H {
            int m, n, sigma;
        };
        for (H h : {H{4, 2, 1}, H{8, 1, 2}, H{6, 2, 2}, H{4, 4, 0}, H{4, 3, 2},
                    H{10, 2, 4}, H{3, 3, 0}, H{3, 3, 1}, H{7, 2, 1}, H{4, 3, 1},
                    H{5, 3, 0}, H{12, 1, 3}}) {
            HexQuotient hq;
            try {
                hq = hex_torus(h.m, h.n, h.sigma, true);
            } catch (const std::exception& e) {
                rep << "hex(" << h.m << "," << h.n << "," << h.sigma << "): skipped (" << e.what()
                    << ")\n";
                continue;
            }
            if (girth(hq.g) != std::optional<int>(6)) {
                rep << "hex(" << h.m << "," << h.n << "," << h.sigma << "): skipped (girth below 6)\n";
                continue;
            }
            bool pred = hq.periods[0] % 2 == 0 && hq.periods[1] % 2 == 0 &&
                        hq.periods[2] % 2 == 0;
            auto v = find_egc(prism(hq.g), timeout_s);
            rep << "hex(" << h.m << "," << h.n << "," << h.sigma << "): periods="
                << hq.periods[0] << "/" << hq.periods[1] << "/" << hq.periods[2]
                << " predicted=" << (pred ? "colored" : "impossible")
                << " engine=" << status_word(v.status) << "\n";
            if (v.status == EgcStatus::Timeout) {
                timed_out = true;
            } else if (pred && v.status != EgcStatus::Colored) {
                counterexample = true;
                rep << "  COUNTEREXAMPLE: even periods but no edge-girth coloring\n";
            } else if (!pred && v.status == EgcStatus::Colored) {
                rep << "  note: colored despite an odd period (the claim is sufficiency only)\n";
            }
        }
        // the Pappus graph arises as a quotient with an odd period
        auto v = find_egc(prism(named("pappus")), timeout_s);
        rep << "prism(pappus): engine=" << status_word(v.status) << "\n";
        if (v.status == EgcStatus::Colored) counterexample = true;
        if (v.status == EgcStatus::Timeout) timed_out = true;
    } else if (which == "att2") {
        // claim: hexagonal Klein-bottle quotients never have egc prisms
        struct H {
            int m, n;
        };
        for (H h : {H{2, 2}, H{3, 2}, H{2, 3}, H{4, 2}, H{3, 3}}) {
            Graph g;
            try {
                g = hex_klein(h.m, h.n);
            } catch (const std::exception& e) {
                rep << "hex-klein(" << h.m << "," << h.n << "): skipped (" << e.what() << ")\n";
                continue;
            }
            if (girth(g) != std::optional<int>(6)) {
                rep << "hex-klein(" << h.m << "," << h.n << "): skipped (girth below 6)\n";
                continue;
            }
            auto v = find_egc(prism(g), timeout_s);
            rep << "hex-klein(" << h.m << "," << h.n << "): engine=" << status_word(v.status)
                << "\n";
            if (v.status == EgcStatus::Colored) {
                counterexample = true;
                rep << "  COUNTEREXAMPLE coloring: " << coloring_to_json(v.coloring, 6);
            }
            if (v.status == EgcStatus::Timeout) timed_out = true;
        }
    } else {
        fail(3, "unknown conjecture '" + which + "' (conjectures: 2egcs att att2)");
    }
    rep << (counterexample ? "result: counterexample found"
            : timed_out    ? "result: no counterexample within budget (some instances timed out)"
                           : "result: no counterexample within budget")
        << "\n";
    write_file(out_path, rep.str());
    if (counterexample) return 1;
    return timed_out ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for edge-girth colorings of girth-regular graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    double timeout_s = 300.0;
    int jobs = 1;
    std::string out_path = "-";
    std::string format = "json";
    app.add_option("--timeout", timeout_s, "per-instance time budget in seconds");
    app.add_option("--jobs", jobs, "parallel workers for sweep instances");
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--format", format, "output format: json, csv or dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}));

    std::vector<std::string> args;

    auto* c_catalog = app.add_subcommand("catalog", "list named graphs");
    auto* c_gen = app.add_subcommand("gen", "generate a graph from a family");
    c_gen->add_option("args", args, "family name and parameters")->expected(-1);
    auto* c_girth = app.add_subcommand("girth", "print the girth of a graph");
    c_girth->add_option("args", args, "graph (name or JSON file)")->expected(-1);
    auto* c_sig = app.add_subcommand("signature", "girth-cycle signature of a graph");
    c_sig->add_option("args", args, "graph (name or JSON file)")->expected(-1);
    auto* c_egc = app.add_subcommand("egc", "find / verify / construct edge-girth colorings");
    c_egc->add_option("args", args, "find <graph> | verify <graph> <coloring> | construct <what> [params]")
        ->expected(-1);
    auto* c_obstruct = app.add_subcommand("obstruct", "search a K_{2,3} obstruction");
    c_obstruct->add_option("args", args, "graph (name or JSON file)")->expected(-1);
    auto* c_nabla = app.add_subcommand("nabla", "triangle replacement and its inverse");
    c_nabla->add_option("args", args, "apply <multigraph> | invert <graph>")->expected(-1);
    auto* c_star = app.add_subcommand("star", "star-notation cycle counts");
    c_star->add_option("args", args, "formula r t s | oracle <graph> <coloring>")->expected(-1);
    auto* c_sweep = app.add_subcommand("sweep", "theorem reproduction sweeps (CSV)");
    c_sweep->add_option("args", args, "theorem-re | table-ix | display-x")->expected(-1);
    auto* c_conj = app.add_subcommand("conjecture", "conjecture harness");
    c_conj->add_option("args", args, "2egcs | att | att2")->expected(-1);
    auto* c_export = app.add_subcommand("export", "export a graph (optionally colored)");
    c_export->add_option("args", args, "<graph> [coloring]")->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    }

    try {
        if (c_catalog->parsed()) {
            std::string s;
            for (const auto& nm : named_catalog()) s += nm + "\n";
            write_file(out_path, s);
            return 0;
        }
        if (c_gen->parsed()) {
            if (args.empty()) fail(3, "gen: missing family name");
            Graph g = generate(args[0], {args.begin() + 1, args.end()});
            if (format == "dot")
                write_file(out_path, graph_to_dot(g, {}));
            else
                write_file(out_path, graph_to_json(g));
            return 0;
        }
        if (c_girth->parsed()) {
            if (args.size() != 1) fail(3, "girth: expected one graph argument");
            Graph g = load_graph(args[0]);
            auto og = girth(g);
            write_file(out_path, og ? std::to_string(*og) + "\n" : "acyclic\n");
            return 0;
        }
        if (c_sig->parsed()) {
            if (args.size() != 1) fail(3, "signature: expected one graph argument");
            Graph g = load_graph(args[0]);
            auto s = signature(g);
            json j;
            j["name"] = g.name;
            j["regular"] = s.regular;
            j["girth_regular"] = s.girth_regular;
            if (s.girth_regular)
                j["signature"] = s.sig;
            else
                j["witnesses"] = {s.witness_a, s.witness_b};
            auto og = girth(g);
            if (og) j["girth"] = *og;
            write_file(out_path, j.dump(2) + "\n");
            return 0;
        }
        if (c_obstruct->parsed()) {
            if (args.size() != 1) fail(3, "obstruct: expected one graph argument");
            Graph g = load_graph(args[0]);
            auto ob = find_k23_obstruction(g);
            json j;
            j["found"] = bool(ob);
            if (ob) j["vertices"] = *ob;
            write_file(out_path, j.dump(2) + "\n");
            return ob ? 0 : 1;
        }
        if (c_nabla->parsed()) {
            if (args.size() != 2) fail(3, "nabla: expected 'apply <multigraph>' or 'invert <graph>'");
            if (args[0] == "apply") {
                Multigraph m = load_multigraph(args[1]);
                write_file(out_path, graph_to_json(nabla(m)));
                return 0;
            }
            if (args[0] == "invert") {
                Graph g = load_graph(args[1]);
                auto inv = nabla_inverse(g);
                if (!inv) {
                    write_file(out_path, "{\"invertible\": false}\n");
                    return 1;
                }
                json j;
                j["invertible"] = true;
                j["base"] = {{"name", inv->base.name}, {"n", inv->base.n}};
                json es = json::array();
                for (auto [u, v] : inv->base.edges) es.push_back({u, v});
                j["base"]["edges"] = es;
                write_file(out_path, j.dump(2) + "\n");
                return 0;
            }
            fail(3, "nabla: unknown subcommand '" + args[0] + "'");
        }
        if (c_star->parsed()) {
            if (args.empty()) fail(3, "star: expected 'formula r t s' or 'oracle <graph> <coloring>'");
            StarReport rep;
            json j;
            if (args[0] == "formula") {
                if (args.size() != 4) fail(3, "star formula: expected r t s");
                CutoutSpec spec{Surface::Torus, parse_int(args[1]), parse_int(args[2]),
                                parse_int(args[3])};
                rep = star_by_formula(spec);
            } else if (args[0] == "oracle") {
                if (args.size() != 3) fail(3, "star oracle: expected <graph> <coloring>");
                Graph g = load_graph(args[1]);
                auto col = load_coloring(args[2], nullptr);
                rep = star_by_oracle(g, col);
                if (rep.applicable) {
                    j["lengths"] = {rep.lengths[0], rep.lengths[1], rep.lengths[2]};
                    j["equal_lengths"] = {rep.equal_lengths[0], rep.equal_lengths[1],
                                          rep.equal_lengths[2]};
                }
            } else {
                fail(3, "star: unknown subcommand '" + args[0] + "'");
            }
            j["applicable"] = rep.applicable;
            if (rep.applicable)
                j["triple"] = {rep.triple.a, rep.triple.b, rep.triple.c};
            else
                j["reason"] = rep.reason;
            write_file(out_path, j.dump(2) + "\n");
            return rep.applicable ? 0 : 1;
        }
        if (c_egc->parsed()) {
            if (args.empty()) fail(3, "egc: expected find, verify or construct");
            if (args[0] == "find") {
                if (args.size() != 2) fail(3, "egc find: expected one graph argument");
                Graph g = load_graph(args[1]);
                auto v = find_egc(g, timeout_s);
                int kappa = g.regular_degree().value_or(0);
                json j = json::parse(verdict_to_json(v, kappa));
                j["config"] = config_echo("egc find", json{{"graph", args[1]}, {"timeout", timeout_s}});
                write_file(out_path, j.dump(2) + "\n");
                return v.status == EgcStatus::Colored    ? 0
                       : v.status == EgcStatus::Timeout  ? 2
                                                         : 1;
            }
            if (args[0] == "verify") {
                if (args.size() != 3) fail(3, "egc verify: expected <graph> <coloring>");
                Graph g = load_graph(args[1]);
                int kappa = 0;
                auto col = load_coloring(args[2], &kappa);
                auto viol = verify_egc(g, col, kappa);
                json j;
                j["valid"] = viol.empty();
                j["violations"] = viol;
                write_file(out_path, j.dump(2) + "\n");
                return viol.empty() ? 0 : 1;
            }
            if (args[0] == "construct") {
                if (args.size() < 2) fail(3, "egc construct: missing construction name");
                auto c = construct(args[1], {args.begin() + 2, args.end()});
                auto viol = verify_egc(c.g, c.coloring, c.kappa);
                json j;
                j["graph"] = json::parse(graph_to_json(c.g));
                j["coloring"] = json::parse(coloring_to_json(c.coloring, c.kappa));
                j["valid"] = viol.empty();
                if (!viol.empty()) j["violations"] = viol;
                if (format == "dot")
                    write_file(out_path, graph_to_dot(c.g, c.coloring));
                else
                    write_file(out_path, j.dump(2) + "\n");
                return viol.empty() ? 0 : 1;
            }
            fail(3, "egc: unknown subcommand '" + args[0] + "'");
        }
        if (c_sweep->parsed()) {
            if (args.size() != 1) fail(3, "sweep: expected theorem-re, table-ix or display-x");
            return cmd_sweep(args[0], jobs, timeout_s, out_path);
        }
        if (c_conj->parsed()) {
            if (args.size() != 1) fail(3, "conjecture: expected 2egcs, att or att2");
            return cmd_conjecture(args[0], timeout_s, out_path);
        }
        if (c_export->parsed()) {
            if (args.empty() || args.size() > 2) fail(3, "export: expected <graph> [coloring]");
            Graph g = load_graph(args[0]);
            EdgeColoring col;
            if (args.size() == 2) col = load_coloring(args[1], nullptr);
            if (format == "json")
                write_file(out_path, graph_to_json(g));
            else if (format == "dot")
                write_file(out_path, graph_to_dot(g, col));
            else
                fail(3, "export: csv format is only for sweeps");
            return 0;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
