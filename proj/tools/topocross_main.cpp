#include "CLI11.hpp"

#include "topocross/claims.hpp"
#include "topocross/drawing_io.hpp"
#include "topocross/generators.hpp"
#include "topocross/oracle.hpp"
#include "topocross/saturation.hpp"
#include "topocross/svg.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace topocross;

namespace {

int worker_threads() {
    const char* env = std::getenv("TOPOCROSS_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

int resolve_vertex(const Drawing& d, const std::string& name) {
    if (const Vertex* v = d.vertex_by_label(name)) return v->id;
    try {
        size_t pos = 0;
        int id = std::stoi(name, &pos);
        if (pos == name.size() && d.vertex_by_id(id)) return id;
    } catch (const std::exception&) {
    }
    throw std::runtime_error("unknown vertex '" + name + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"topocross: exact arrangements and insertion queries for k-simple drawings"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a construction as a drawing file");
    GenRequest req;
    std::string gen_out;
    gen->add_option("--construction", req.construction,
                    "grb|g|gridblock|blackblock|redblock|block3|twosimple|local4|local5|local12")
        ->required();
    gen->add_option("--layers", req.layers, "layer/block count");
    gen->add_option("--left", req.left, "left remainder group size");
    gen->add_option("--right", req.right, "right remainder group size");
    gen->add_option("--copies", req.copies, "gadget copies");
    gen->add_option("--n", req.n, "vertex count for local4");
    gen->add_option("--out", gen_out, "output file")->required();

    // validate
    auto* val = app.add_subcommand("validate", "validate a drawing and print its simplicity report");
    std::string val_in;
    int val_k = 0;
    val->add_option("--in", val_in)->required();
    val->add_option("--k", val_k, "simplicity level (defaults to the file's k)");

    // neighbors
    auto* nb = app.add_subcommand("neighbors", "potential neighbors of a vertex");
    std::string nb_in, nb_vertex;
    int nb_k = 1;
    nb->add_option("--in", nb_in)->required();
    nb->add_option("--vertex", nb_vertex)->required();
    nb->add_option("--k", nb_k);

    // saturate
    auto* sat = app.add_subcommand("saturate", "add edges until no more fit");
    std::string sat_in, sat_out, sat_report, sat_policy = "lex";
    int sat_k = 1;
    unsigned sat_seed = 0;
    sat->add_option("--in", sat_in)->required();
    sat->add_option("--k", sat_k);
    sat->add_option("--policy", sat_policy, "lex|random|maxdeg");
    sat->add_option("--seed", sat_seed);
    sat->add_option("--out", sat_out, "write the base drawing back (unchanged geometry)");
    sat->add_option("--report", sat_report, "write the saturation report");

    // check
    auto* chk = app.add_subcommand("check", "run claim checks");
    std::string chk_claim;
    bool chk_all = false;
    std::vector<std::string> chk_params;
    chk->add_option("--claim", chk_claim, "claim name");
    chk->add_flag("--all", chk_all, "run every claim");
    chk->add_option("--param", chk_params, "key=val claim parameter")->take_all();

    // render
    auto* ren = app.add_subcommand("render", "render a drawing to SVG");
    std::string ren_in, ren_out;
    ren->add_option("--in", ren_in)->required();
    ren->add_option("--out", ren_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            Drawing d = generate(req);
            save_drawing_file(d, gen_out);
            std::cout << "wrote " << gen_out << " (" << d.vertices.size() << " vertices, "
                      << d.edges.size() << " edges)\n";
            return 0;
        }
        if (val->parsed()) {
            Drawing d = load_drawing_file(val_in);
            auto viols = validate_drawing(d);
            if (!viols.empty()) {
                for (auto& v : viols)
                    std::cout << "violation " << violation_name(v.kind) << " a=" << v.a
                              << " b=" << v.b << " " << v.detail << "\n";
                return 1;
            }
            int k = val_k > 0 ? val_k : d.k;
            auto rep = simplicity_report(d, k);
            std::cout << "k=" << k << " pairs-with-common-points=" << rep.pairs.size()
                      << " pass=" << (rep.pass ? "yes" : "no") << "\n";
            for (auto& pc : rep.violating_pairs)
                std::cout << "violating-pair " << pc.edge_a << " " << pc.edge_b << " common="
                          << pc.common_points() << "\n";
            return rep.pass ? 0 : 1;
        }
        if (nb->parsed()) {
            Drawing d = load_drawing_file(nb_in);
            int v = resolve_vertex(d, nb_vertex);
            auto rep = potential_neighbors(d, v, nb_k);
            for (auto& [u, verdict] : rep.verdicts) {
                const Vertex* uv = d.vertex_by_id(u);
                std::cout << (uv ? uv->label : std::to_string(u)) << " "
                          << (verdict.kind == VerdictKind::Insertable ? "insertable" : "walk-only")
                          << "\n";
            }
            std::cout << "total " << rep.potential_count() << " (" << rep.insertable.size()
                      << " certified)\n";
            return 0;
        }
        if (sat->parsed()) {
            Drawing d = load_drawing_file(sat_in);
            PairPolicy policy = PairPolicy::Lexicographic;
            if (sat_policy == "random") policy = PairPolicy::SeededRandom;
            else if (sat_policy == "maxdeg") policy = PairPolicy::MaxDegreeLast;
            else if (sat_policy != "lex") throw std::runtime_error("unknown policy " + sat_policy);
            auto res = saturate(d, sat_k, policy, sat_seed);
            std::cout << res.report();
            if (!sat_out.empty()) save_drawing_file(d, sat_out);
            if (!sat_report.empty()) {
                std::ofstream f(sat_report);
                f << res.report();
            }
            return 0;
        }
        if (chk->parsed()) {
            std::map<std::string, std::string> params;
            for (auto& kv : chk_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw std::runtime_error("bad --param " + kv);
                params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            std::vector<ClaimReport> reports;
            if (chk_all) {
                reports = run_all_claims(worker_threads());
            } else if (!chk_claim.empty()) {
                reports.push_back(run_claim(chk_claim, params));
            } else {
                std::cout << "available claims:\n";
                for (auto& n : claim_names()) std::cout << "  " << n << "\n";
                return 0;
            }
            bool all = true;
            for (auto& r : reports) {
                std::cout << format_report(r);
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
        if (ren->parsed()) {
            Drawing d = load_drawing_file(ren_in);
            std::ofstream f(ren_out);
            if (!f) throw std::runtime_error("cannot write " + ren_out);
            f << render_svg(d);
            std::cout << "wrote " << ren_out << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
