#include "topocross/claims.hpp"

#include "topocross/generators.hpp"
#include "topocross/gridwalk.hpp"
#include "topocross/oracle.hpp"
#include "topocross/saturation.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <atomic>
#include <set>
#include <random>
#include <sstream>
#include <thread>

namespace topocross {

namespace {

using Params = std::map<std::string, std::string>;

int param_int(const Params& p, const std::string& key, int def) {
    auto it = p.find(key);
    return it == p.end() ? def : std::stoi(it->second);
}

int vid_by_label(const Drawing& d, const std::string& label) {
    const Vertex* v = d.vertex_by_label(label);
    if (!v) throw std::invalid_argument("no vertex labeled " + label);
    return v->id;
}

std::string join_labels(const Drawing& d, std::vector<int> ids) {
    std::map<int, std::string> lab;
    for (auto& v : d.vertices) lab[v.id] = v.label;
    std::vector<std::string> names;
    for (int id : ids) names.push_back(lab.count(id) ? lab[id] : std::to_string(id));
    std::sort(names.begin(), names.end());
    std::string out;
    for (auto& n : names) out += (out.empty() ? "" : " ") + n;
    return out;
}

std::string join_sorted(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    std::string out;
    for (auto& n : names) out += (out.empty() ? "" : " ") + n;
    return out;
}

// The belt between layers i and i+1 of gen_grb(k): the 12 vertices of the two
// layers with the 6 edges between them.
Drawing belt_subdrawing(int k, int i) {
    Drawing g = gen_grb(k);
    std::set<std::string> keep;
    for (const char* x : {"A", "B", "C"})
        for (int l : {i, i + 1})
            for (const char* s : {"L", "R"}) keep.insert(std::string(x) + std::to_string(l) + s);
    Drawing out;
    out.surface = g.surface;
    out.k = g.k;
    std::set<int> vids;
    for (auto& v : g.vertices)
        if (keep.count(v.label)) {
            out.vertices.push_back(v);
            vids.insert(v.id);
        }
    for (auto& e : g.edges)
        if (vids.count(e.v1) && vids.count(e.v2)) out.edges.push_back(e);
    return out;
}

// Lemma lists for the canonical parameters (k = 5, i = 3).
std::vector<std::string> lemma_grb_16() {
    return {"A2L", "B2L", "C2L", "A2R", "B2R", "C2R", "B3L", "C3L",
            "A3R", "B3R", "C3R", "A1R", "A4L", "B4L", "C4L", "A4R"};
}
std::vector<std::string> lemma_g_13() {
    return {"B3L", "C3L", "A3R", "B3R", "C3R", "A2L", "B2L",
            "A2R", "B2R", "C2R", "A1R", "A4L", "C4L"};
}
std::vector<std::string> lemma_g_15() {
    return {"A3L", "B3L", "C3L", "B3R", "C3R", "A4L", "B4L", "C4L",
            "A4R", "B4R", "C4R", "A2R", "B2R", "C2R", "A5L"};
}

ClaimReport make_report(const std::string& name, const std::string& params,
                        const std::string& citation, const std::string& expected,
                        const std::string& computed, bool pass, double ms) {
    ClaimReport r;
    r.name = name;
    r.params = params;
    r.citation = citation;
    r.expected = expected;
    r.computed = computed;
    r.pass = pass;
    r.millis = ms;
    return r;
}

struct NeighborSummary {
    std::vector<std::string> names;
    int walk_only = 0;
};

NeighborSummary neighbor_labels(const Drawing& d, const std::string& vlabel, int k) {
    NeighborSummary out;
    auto rep = potential_neighbors(d, vid_by_label(d, vlabel), k);
    std::map<int, std::string> lab;
    for (auto& v : d.vertices) lab[v.id] = v.label;
    for (int id : rep.insertable) out.names.push_back(lab[id]);
    for (int id : rep.walk_only) {
        out.names.push_back(lab[id]);
        out.walk_only++;
    }
    return out;
}

// ---------------------------------------------------------------------------

ClaimReport claim_belt_blocks(const Params&) {
    Drawing belt = belt_subdrawing(5, 3);
    PlanarMap m = planarize(belt);
    auto res = exists_bounded_face_path(m, m.inner_face, m.outer_face, 1);
    return make_report("belt_blocks", "layers 3-4 of grb(5)",
                       "Lemma 2: no edge can cross a belt", "no cap-1 left-right path",
                       res.reachable ? "path found" : "no cap-1 left-right path", !res.reachable, 0);
}

ClaimReport claim_grb_neighbors_16(const Params& p) {
    int k = param_int(p, "k", 5);
    Drawing d = gen_grb(k);
    auto rep = potential_neighbors(d, vid_by_label(d, "A3L"), 1);
    std::map<int, std::string> lab;
    for (auto& v : d.vertices) lab[v.id] = v.label;
    std::vector<std::string> got;
    for (int id : rep.insertable) got.push_back(lab[id]);
    bool all_certified = rep.walk_only.empty();
    std::string expect = join_sorted(lemma_grb_16());
    std::string computed = join_sorted(got);
    if (!all_certified) computed += " [walk-only:" + join_labels(d, rep.walk_only) + "]";
    return make_report("grb_neighbors_16", "k=" + std::to_string(k) + " vertex=A3L",
                       "Lemma 3: the 16 potential neighbors of a typical vertex", expect, computed,
                       all_certified && computed == expect, 0);
}

ClaimReport claim_g_neighbors(const std::string& name, const std::string& vlabel,
                              std::vector<std::string> expect_names, const std::string& cite,
                              const Params& p) {
    int k = param_int(p, "k", 5);
    Drawing d = gen_g(k);
    auto rep = potential_neighbors(d, vid_by_label(d, vlabel), 1);
    std::map<int, std::string> lab;
    for (auto& v : d.vertices) lab[v.id] = v.label;
    std::vector<std::string> got;
    for (int id : rep.insertable) got.push_back(lab[id]);
    bool all_certified = rep.walk_only.empty();
    std::string expect = join_sorted(expect_names);
    std::string computed = join_sorted(got);
    if (!all_certified) computed += " [walk-only:" + join_labels(d, rep.walk_only) + "]";
    return make_report(name, "k=" + std::to_string(k) + " vertex=" + vlabel, cite, expect, computed,
                       all_certified && computed == expect, 0);
}

ClaimReport claim_g_excluded_pairs(const Params& p) {
    int k = param_int(p, "k", 5);
    Drawing d = gen_g(k);
    PlanarMap m = planarize(d);
    auto check_pair = [&](const std::string& a, const std::string& b) {
        int u = vid_by_label(d, a), v = vid_by_label(d, b);
        Budget bud = budgets_for_map(m, u, v, 1);
        return search_insertion(m, u, v, bud).kind == VerdictKind::NotInsertable;
    };
    bool p1 = check_pair("A3L", "A4R");
    bool p2 = check_pair("A3L", "B4L");
    std::string computed = std::string("(A3L,A4R):") + (p1 ? "not-insertable" : "insertable") +
                           " (A3L,B4L):" + (p2 ? "not-insertable" : "insertable");
    return make_report("g_excluded_pairs", "k=" + std::to_string(k),
                       "the straight-right and diagonal neighbors are impossible in G",
                       "(A3L,A4R):not-insertable (A3L,B4L):not-insertable", computed, p1 && p2, 0);
}

ClaimReport claim_g_degree_schedule(const Params& p) {
    int k = param_int(p, "k", 5);
    Drawing d = gen_g(k);
    PlanarMap m = planarize(d);
    std::map<int, int> deg;
    for (auto& e : d.edges) {
        deg[e.v1]++;
        deg[e.v2]++;
    }
    struct Cls {
        std::vector<std::string> labels;
        int bound;
    };
    std::vector<Cls> classes = {
        {{"A1L", "B1L", "C1L"}, 7},
        {{"A1R", "B1R", "C1R"}, 12},
        {{"A2L", "B2L", "C2L"}, 12},
        {{"A2R", "B2R", "C2R", "A3R", "B3R", "C3R"}, 15},
        {{"A3L", "B3L", "C3L", "A4L", "B4L", "C4L"}, 13},
        {{"A4R", "B4R", "C4R"}, 14},
        {{"A5L", "B5L", "C5L"}, 11},
        {{"A5R", "B5R", "C5R"}, 8},
    };
    std::ostringstream comp;
    bool pass = true;
    for (auto& cls : classes) {
        int worst = 0;
        for (auto& lbl : cls.labels) {
            int vid = vid_by_label(d, lbl);
            auto rep = potential_neighbors_map(m, vid, 1);
            worst = std::max(worst, deg[vid] + rep.potential_count());
        }
        comp << (comp.str().empty() ? "" : " ") << "<=" << cls.bound << ":got" << worst;
        if (worst > cls.bound) pass = false;
    }
    return make_report("g_degree_schedule", "k=" + std::to_string(k),
                       "saturated degrees by boundary class: 7,12,12,15,13,14,11,8",
                       "all classes within bounds", comp.str(), pass, 0);
}

ClaimReport claim_g_7n_minus_30(const Params& p) {
    std::ostringstream comp;
    bool pass = true;
    int kmax = param_int(p, "kmax", 4);
    for (int k = 2; k <= kmax; ++k) {
        auto res = saturate(gen_g(k), 1);
        int n = 6 * k;
        int bound = 7 * n - 30;
        bool ok = res.walk_only_residue.empty() && res.final_edges <= bound;
        comp << (k > 2 ? " " : "") << "k=" << k << ":edges=" << res.final_edges << "/" << bound
             << (res.walk_only_residue.empty() ? "" : "(residue)");
        pass = pass && ok;
    }
    return make_report("g_7n_minus_30", "k=2..4", "a saturated extension of G has at most 7n-30 edges",
                       "saturated, no residue, edges <= 7n-30", comp.str(), pass, 0);
}

ClaimReport claim_clone_7n(const Params& p) {
    int k = param_int(p, "k", 4);
    auto base = saturate(gen_g(k), 1);
    // Lowest-degree vertex of the saturated drawing.
    int best = -1, bdeg = 1 << 30;
    for (auto& [vid, dg] : base.degrees)
        if (dg < bdeg) {
            bdeg = dg;
            best = vid;
        }
    std::ostringstream comp;
    bool pass = base.walk_only_residue.empty();
    for (int rho = 1; rho <= 5; ++rho) {
        PlanarMap m = base.map;
        clone_vertex(m, best, rho);
        auto res = saturate_map(std::move(m), 1);
        int n = 6 * k + rho;
        bool ok = res.final_edges < 7 * n && res.walk_only_residue.empty();
        comp << (rho > 1 ? " " : "") << "rho=" << rho << ":edges=" << res.final_edges << "/<"
             << 7 * n;
        pass = pass && ok;
    }
    return make_report("clone_7n", "n=6*" + std::to_string(k) + "+rho, rho=1..5",
                       "cloning the minimum degree vertex keeps the count below 7n",
                       "edges < 7n for all rho", comp.str(), pass, 0);
}

ClaimReport claim_gridblock_min5(const Params&) {
    GridBlock gb = gen_gridblock();
    PlanarMap m = planarize(gb.drawing);
    int got = min_crossing_face_path(m, m.inner_face, m.outer_face);
    return make_report("gridblock_min5", "", "a left-right path crosses the grid-block at least 5 times",
                       "5", std::to_string(got), got == 5, 0);
}

// Random dual walks across the grid-block for the normalization suite.
std::vector<WitnessWalk> random_gridblock_walks(const PlanarMap& m, const std::set<int>& reds,
                                                int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<WitnessWalk> out;
    // Face adjacency via arcs.
    std::vector<std::vector<std::pair<int, int>>> adj(m.faces.size()); // (arc, other)
    for (size_t ai = 0; ai < m.arcs.size(); ++ai) {
        const Arc& a = m.arcs[ai];
        int fa = m.hedges[a.h_fwd].face, fb = m.hedges[a.h_rev].face;
        adj[fa].push_back({(int)ai, fb});
        if (fa != fb) adj[fb].push_back({(int)ai, fa});
    }
    int FL = m.inner_face, FR = m.outer_face;
    while ((int)out.size() < count) {
        WitnessWalk w;
        w.start_face = FL;
        int cur = FL;
        bool ok = false;
        for (int step = 0; step < 60; ++step) {
            auto& opts = adj[cur];
            std::vector<std::pair<int, int>> cands;
            for (auto& [arc, other] : opts) {
                if (other == FL) continue; // never revisit the left region
                if (cur == FL && other == FR) continue;
                cands.push_back({arc, other});
            }
            if (cands.empty()) break;
            auto& pick = cands[rng() % cands.size()];
            w.steps.push_back({cur, pick.first, pick.second});
            cur = pick.second;
            if (cur == FR) {
                ok = true;
                break;
            }
        }
        if (ok) out.push_back(w);
    }
    return out;
}

ClaimReport claim_gridblock_normalize(const Params& p) {
    int count = param_int(p, "walks", 500);
    GridBlock gb = gen_gridblock();
    PlanarMap m = planarize(gb.drawing);
    auto walks = random_gridblock_walks(m, gb.red_edges, count, 20260808);
    int bad = 0;
    std::string first_fail;
    for (auto& w : walks) {
        WitnessWalk nw;
        try {
            nw = normalize_gridblock_walk(m, gb.red_edges, w);
        } catch (const std::exception& e) {
            bad++;
            if (first_fail.empty()) first_fail = e.what();
            continue;
        }
        auto before = w.per_edge_counts(m);
        auto after = nw.per_edge_counts(m);
        bool counts_ok = true;
        for (auto& [eid, cnt] : after)
            if (cnt > (before.count(eid) ? before[eid] : 0)) counts_ok = false;
        // Normal form: black steps before red steps, no backward steps.
        auto info = classify_gridblock_walk(m, gb.red_edges, nw);
        bool seen_up = false;
        bool form_ok = true;
        for (auto kind : info.kinds) {
            if (kind == GridStep::Left || kind == GridStep::Down) form_ok = false;
            if (kind == GridStep::Up) seen_up = true;
            if (kind == GridStep::Right && seen_up) form_ok = false;
        }
        if (nw.start_face != w.start_face || nw.end_face() != w.end_face()) form_ok = false;
        if (!(counts_ok && form_ok)) {
            bad++;
            if (first_fail.empty())
                first_fail = counts_ok ? "normal form not reached" : "edge count increased";
        }
    }
    return make_report("gridblock_normalize", "walks=" + std::to_string(count),
                       "path simplification keeps multiplicities and sorts steps",
                       "all walks normalized", bad == 0 ? "all walks normalized"
                                                        : std::to_string(bad) + " failures: " + first_fail,
                       bad == 0, 0);
}

ClaimReport claim_block3_blocks_cap2(const Params&) {
    Drawing d = gen_3block();
    PlanarMap m = planarize(d);
    auto res = exists_bounded_face_path(m, m.inner_face, m.outer_face, 2);
    return make_report("block3_blocks_cap2", "", "no left-right path crosses every 3-block edge at most twice",
                       "no cap-2 left-right path",
                       res.reachable ? "path found" : "no cap-2 left-right path", !res.reachable, 0);
}

ClaimReport claim_grid_triple_pass_15(const Params&) {
    Drawing d = gen_3block();
    PlanarMap m = planarize(d);
    int best = 1 << 30;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int f = face_label_lookup(m, "L_" + std::to_string(i));
            int g = face_label_lookup(m, "LM_" + std::to_string(j));
            best = std::min(best, min_crossing_face_path(m, f, g));
        }
    int triple = 3 * best;
    bool pass = best >= 5 && triple >= 15;
    std::string computed = "min(L->LM)=" + std::to_string(best) + " triple=" + std::to_string(triple);
    return make_report("grid_triple_pass_15", "",
                       "an L->LM->L->LM walk pays three grid-block passages",
                       "min(L->LM)=5 triple=15", computed, pass, 0);
}

ClaimReport claim_twosimple_29(const Params& p) {
    int k = param_int(p, "blocks", 3);
    Drawing d = gen_twosimple(k, 3, 3);
    PlanarMap m = planarize(d);
    std::map<int, int> deg;
    for (auto& e : d.edges) {
        deg[e.v1]++;
        deg[e.v2]++;
    }
    int worst = 0;
    for (auto& v : d.vertices) {
        auto rep = potential_neighbors_map(m, v.id, 2);
        worst = std::max(worst, deg[v.id] + rep.potential_count());
    }
    bool pass = worst <= 29;
    return make_report("twosimple_29", "blocks=" + std::to_string(k) + " l1=l2=3",
                       "no vertex of the blocked chain exceeds 29 neighbors at level 2",
                       "max(deg+potential) <= 29", "max=" + std::to_string(worst), pass, 0);
}

ClaimReport claim_twosimple_14_5n(const Params& p) {
    int k = param_int(p, "blocks", 3);
    auto res = saturate(gen_twosimple(k, 0, 0), 2);
    int n = 6 * k;
    bool pass = res.walk_only_residue.empty() && 2 * res.final_edges <= 29 * n;
    std::string computed = "edges=" + std::to_string(res.final_edges) +
                           (res.walk_only_residue.empty() ? "" : " residue");
    return make_report("twosimple_14_5n", "blocks=" + std::to_string(k),
                       "saturating the block chain stays below 14.5n edges",
                       "edges <= 14.5n, no residue", computed, pass, 0);
}

ClaimReport claim_local4_saturated(const Params& p) {
    int n = param_int(p, "n", 6);
    LocalGadget g = gen_local4(n);
    auto rep = potential_neighbors(g.drawing, g.centers[0], 1);
    bool pass = rep.potential_count() == 0;
    return make_report("local4_saturated", "n=" + std::to_string(n),
                       "the degree-4 apex admits no further edge",
                       "0 potential neighbors", std::to_string(rep.potential_count()), pass, 0);
}

ClaimReport claim_local5_blocked(const Params&) {
    // Probe: the center cannot reach a vertex in the unbounded face.
    LocalGadget g1 = gen_local5(1);
    {
        Drawing& d = g1.drawing;
        Vertex probe;
        probe.id = 9999;
        probe.pos = {150, 150};
        probe.label = "probe";
        d.vertices.push_back(probe);
    }
    PlanarMap m = planarize(g1.drawing);
    Budget bud = budgets_for_map(m, g1.centers[0], 9999, 1);
    bool blocked = search_insertion(m, g1.centers[0], 9999, bud).kind == VerdictKind::NotInsertable;

    // Two copies saturate with both centers staying at degree 5.
    auto res = saturate(gen_local5(2).drawing, 1);
    LocalGadget g2 = gen_local5(2);
    bool degrees_ok = true;
    for (int c : g2.centers)
        if (res.degrees.at(c) != 5) degrees_ok = false;
    std::string computed = std::string(blocked ? "probe blocked" : "probe reachable") +
                           (degrees_ok ? ", centers stay degree 5" : ", center degree changed");
    return make_report("local5_blocked", "copies=2",
                       "the degree-5 center cannot reach the unbounded region",
                       "probe blocked, centers stay degree 5", computed, blocked && degrees_ok, 0);
}

ClaimReport claim_local12_cap(const Params&) {
    LocalGadget g = gen_local12(1);
    Drawing& d = g.drawing;
    PlanarMap m = planarize(d);
    std::map<int, int> deg;
    for (auto& e : d.edges) {
        deg[e.v1]++;
        deg[e.v2]++;
    }
    auto rep = potential_neighbors_map(m, g.centers[0], 2);
    int total = deg[g.centers[0]] + rep.potential_count();
    // The far block's left wave vertices must stay unreachable.
    bool far_blocked = true;
    std::map<int, std::string> lab;
    for (auto& v : d.vertices) lab[v.id] = v.label;
    for (int id : rep.insertable)
        if (lab[id].find("B_b") != std::string::npos && lab[id].back() == 'L') far_blocked = false;
    for (int id : rep.walk_only)
        if (lab[id].find("B_b") != std::string::npos && lab[id].back() == 'L') far_blocked = false;
    bool pass = total <= 12 && far_blocked;
    return make_report("local12_cap", "copies=1",
                       "the convergence vertex can join at most 12 others at level 2",
                       "deg+potential <= 12, far side blocked",
                       "deg+potential=" + std::to_string(total) +
                           (far_blocked ? ", far side blocked" : ", far side reachable"),
                       pass, 0);
}

using ClaimFn = std::function<ClaimReport(const Params&)>;

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
    static const std::vector<std::pair<std::string, ClaimFn>> reg = {
        {"belt_blocks", claim_belt_blocks},
        {"grb_neighbors_16", claim_grb_neighbors_16},
        {"g_neighbors_13",
         [](const Params& p) {
             return claim_g_neighbors("g_neighbors_13", "A3L", lemma_g_13(),
                                      "the 13 potential neighbors of a typical blue vertex", p);
         }},
        {"g_neighbors_15",
         [](const Params& p) {
             return claim_g_neighbors("g_neighbors_15", "A3R", lemma_g_15(),
                                      "the 15 potential neighbors of a typical red vertex", p);
         }},
        {"g_excluded_pairs", claim_g_excluded_pairs},
        {"g_degree_schedule", claim_g_degree_schedule},
        {"g_7n_minus_30", claim_g_7n_minus_30},
        {"clone_7n", claim_clone_7n},
        {"gridblock_min5", claim_gridblock_min5},
        {"gridblock_normalize", claim_gridblock_normalize},
        {"block3_blocks_cap2", claim_block3_blocks_cap2},
        {"grid_triple_pass_15", claim_grid_triple_pass_15},
        {"twosimple_29", claim_twosimple_29},
        {"twosimple_14_5n", claim_twosimple_14_5n},
        {"local4_saturated", claim_local4_saturated},
        {"local5_blocked", claim_local5_blocked},
        {"local12_cap", claim_local12_cap},
    };
    return reg;
}

} // namespace

std::vector<std::string> claim_names() {
    std::vector<std::string> out;
    for (auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

ClaimReport run_claim(const std::string& name, const std::map<std::string, std::string>& params) {
    for (auto& [n, fn] : registry()) {
        if (n != name) continue;
        auto t0 = std::chrono::steady_clock::now();
        ClaimReport r;
        try {
            r = fn(params);
        } catch (const std::exception& e) {
            r.name = name;
            r.expected = "(claim ran to completion)";
            r.computed = std::string("error: ") + e.what();
            r.pass = false;
        }
        auto t1 = std::chrono::steady_clock::now();
        r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return r;
    }
    throw std::invalid_argument("unknown claim '" + name + "'");
}

std::vector<ClaimReport> run_all_claims(int threads) {
    auto names = claim_names();
    std::vector<ClaimReport> out(names.size());
    if (threads <= 1) {
        for (size_t i = 0; i < names.size(); ++i) out[i] = run_claim(names[i]);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= names.size()) return;
                out[i] = run_claim(names[i]);
            }
        });
    for (auto& th : pool) th.join();
    return out;
}

std::string format_report(const ClaimReport& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " " << r.name;
    if (!r.params.empty()) os << " [" << r.params << "]";
    os << " (" << (int)r.millis << " ms)\n";
    os << "  expected: " << r.expected << "\n";
    os << "  computed: " << r.computed << "\n";
    return os.str();
}

} // namespace topocross
