#include "topocross/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace topocross {

Budget budgets_for_map(const PlanarMap& m, int u, int v, int k) {
    if (k < 1) throw std::invalid_argument("budgets_for: k must be positive");
    if (u == v) throw std::invalid_argument("budgets_for: identical endpoints");
    m.node_of_vertex(u);
    m.node_of_vertex(v);
    if (m.adjacent_vertices(u, v)) throw std::invalid_argument("budgets_for: endpoints adjacent");
    Budget b;
    for (auto& e : m.edges) {
        bool incident = (e.v1 == u || e.v2 == u || e.v1 == v || e.v2 == v);
        b.cap[e.id] = incident ? k - 1 : k;
    }
    return b;
}

Budget budgets_for(const Drawing& d, int u, int v, int k) {
    if (k < 1) throw std::invalid_argument("budgets_for: k must be positive");
    if (u == v) throw std::invalid_argument("budgets_for: identical endpoints");
    if (!d.vertex_by_id(u) || !d.vertex_by_id(v))
        throw std::invalid_argument("budgets_for: unknown vertex");
    if (d.adjacent(u, v)) throw std::invalid_argument("budgets_for: endpoints adjacent");
    Budget b;
    for (auto& e : d.edges) {
        bool incident = (e.v1 == u || e.v2 == u || e.v1 == v || e.v2 == v);
        b.cap[e.id] = incident ? k - 1 : k;
    }
    return b;
}

Budget uniform_budget(const PlanarMap& m, int cap)  {
    Budget b;
    for (auto& e : m.edges) b.cap[e.id] = cap;
    return b;
}

std::map<int, int> WitnessWalk::per_edge_counts(const PlanarMap& m) const {
    std::map<int, int> out;
    for (auto& s : steps) out[m.arcs[s.arc].parent_edge]++;
    return out;
}

std::string WitnessWalk::serialize() const {
    std::ostringstream os;
    for (auto& s : steps)
        os << "step " << s.from_face << " " << s.arc << " " << s.to_face << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

namespace {

// Position map of hedges along a single-cycle face.
std::vector<int> cycle_hedges(const PlanarMap& m, int face) {
    const MapFace& f = m.faces[face];
    std::vector<int> out;
    if (f.cycles.empty()) return out;
    int h = f.cycles[0];
    int cur = h;
    do {
        out.push_back(cur);
        cur = m.hedges[cur].next;
    } while (cur != h);
    return out;
}

bool in_open_cyclic(int x, int s, int e) {
    if (s < e) return x > s && x < e;
    return x > s || x < e;
}

} // namespace

CertifyResult certify_simple(const WitnessWalk& w, const PlanarMap& m) {
    CertifyResult res;
    // Validate chaining.
    int cur = w.start_face;
    if (cur < 0 || cur >= (int)m.faces.size())
        throw std::invalid_argument("certify_simple: malformed walk (bad start face)");
    for (auto& s : w.steps) {
        if (s.arc < 0 || s.arc >= (int)m.arcs.size())
            throw std::invalid_argument("certify_simple: malformed walk (bad arc)");
        const Arc& a = m.arcs[s.arc];
        int fa = m.hedges[a.h_fwd].face, fb = m.hedges[a.h_rev].face;
        if (s.from_face != cur)
            throw std::invalid_argument("certify_simple: malformed walk (steps do not chain)");
        if (!((s.from_face == fa && s.to_face == fb) || (s.from_face == fb && s.to_face == fa)))
            throw std::invalid_argument("certify_simple: malformed walk (arc not between step faces)");
        cur = s.to_face;
    }

    std::vector<int> visit_faces;
    visit_faces.push_back(w.start_face);
    for (auto& s : w.steps) visit_faces.push_back(s.to_face);

    std::set<int> distinct(visit_faces.begin(), visit_faces.end());
    if (distinct.size() == visit_faces.size()) {
        res.accepted = true;
        res.mode = CertifyMode::DistinctFaces;
        return res;
    }

    // Repeated faces: conservative nested-pass certification.
    std::map<int, int> arc_use;
    for (auto& s : w.steps)
        if (++arc_use[s.arc] > 1) {
            res.reason = "arc crossed more than once with repeated faces";
            return res;
        }

    // Gather passes per face as (entry hedge, exit hedge); -1 marks the walk
    // endpoints (vertex attachments).
    struct Pass {
        int entry_hedge = -1, exit_hedge = -1;
    };
    std::map<int, std::vector<Pass>> passes;
    int n = (int)visit_faces.size();
    for (int i = 0; i < n; ++i) {
        Pass p;
        if (i > 0) {
            const Arc& a = m.arcs[w.steps[i - 1].arc];
            p.entry_hedge = (m.hedges[a.h_fwd].face == visit_faces[i]) ? a.h_fwd : a.h_rev;
        }
        if (i < n - 1) {
            const Arc& a = m.arcs[w.steps[i].arc];
            p.exit_hedge = (m.hedges[a.h_fwd].face == visit_faces[i]) ? a.h_fwd : a.h_rev;
        }
        passes[visit_faces[i]].push_back(p);
    }

    auto vertex_gap_hedge = [&](int vid, int face) -> int {
        if (vid < 0) return -1;
        int node = m.node_of_vertex(vid);
        for (int oh : m.nodes[node].rot)
            if (m.hedges[oh].face == face) return oh;
        return -1;
    };

    for (auto& [face, pl] : passes) {
        if (pl.size() <= 1) continue;
        if (m.faces[face].cycles.size() != 1) {
            res.reason = "repeated face is not a disk (multiple boundary cycles)";
            return res;
        }
        auto cyc = cycle_hedges(m, face);
        std::map<int, int> pos;
        for (size_t i = 0; i < cyc.size(); ++i) pos[cyc[i]] = (int)i;
        int L = (int)cyc.size();
        // Resolve endpoint attachments to vertex gap positions.
        std::vector<std::pair<int, int>> chords;
        for (auto& p : pl) {
            int a = p.entry_hedge, b = p.exit_hedge;
            if (a < 0) a = vertex_gap_hedge(w.u, face);
            if (b < 0) b = vertex_gap_hedge(w.v, face);
            if (a < 0 || b < 0) {
                res.reason = "endpoint gap not on repeated face";
                return res;
            }
            if (!pos.count(a) || !pos.count(b)) {
                res.reason = "pass hedge not on face cycle";
                return res;
            }
            if (a == b) {
                res.reason = "pass enters and exits through one boundary position";
                return res;
            }
            chords.push_back({pos[a], pos[b]});
        }
        // All chord endpoints must be distinct boundary positions.
        std::set<int> used;
        for (auto& c : chords) {
            if (!used.insert(c.first).second || !used.insert(c.second).second) {
                res.reason = "passes share a boundary position";
                return res;
            }
        }
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j) {
                bool c_in = in_open_cyclic(chords[j].first, chords[i].first, chords[i].second);
                bool d_in = in_open_cyclic(chords[j].second, chords[i].first, chords[i].second);
                if (c_in != d_in) {
                    res.reason = "interleaving passes through a repeated face";
                    return res;
                }
                (void)L;
            }
    }
    res.accepted = true;
    res.mode = CertifyMode::NestedPasses;
    return res;
}

// ---------------------------------------------------------------------------
// Dominance-pruned multi-budget search
// ---------------------------------------------------------------------------

namespace {

constexpr unsigned long long kLaneHi = 0x8888888888888888ULL;

struct VecArena {
    int words = 0;
    std::vector<unsigned long long> data;
    unsigned long long* at(size_t off) { return data.data() + off; }
    const unsigned long long* at(size_t off) const { return data.data() + off; }
    size_t alloc_zero() {
        size_t off = data.size();
        data.resize(off + words, 0);
        return off;
    }
    size_t alloc_copy(size_t src) {
        size_t off = data.size();
        data.resize(off + words);
        std::memcpy(data.data() + off, data.data() + src, words * sizeof(unsigned long long));
        return off;
    }
};

inline bool vec_leq(const unsigned long long* a, const unsigned long long* b, int words) {
    for (int i = 0; i < words; ++i) {
        if ((((b[i] | kLaneHi) - a[i]) & kLaneHi) != kLaneHi) return false;
    }
    return true;
}

inline bool vec_eq(const unsigned long long* a, const unsigned long long* b, int words) {
    return std::memcmp(a, b, words * sizeof(unsigned long long)) == 0;
}

inline int lane_get(const unsigned long long* v, int lane) {
    return (int)((v[lane >> 4] >> ((lane & 15) * 4)) & 0xF);
}

inline void lane_inc(unsigned long long* v, int lane) {
    v[lane >> 4] += 1ULL << ((lane & 15) * 4);
}

struct DualArcs {
    // Per face: (arc, other_face, lane or -1 for wall, cap) sorted by arc.
    struct Out {
        int arc, other, lane, cap;
    };
    std::vector<std::vector<Out>> out;
};

struct Label {
    int face = -1;
    int len = 0;
    size_t vec = 0;
    // (parent label, via arc); several for merged equal-state arrivals.
    std::vector<std::pair<int, int>> parents;
};

struct Engine {
    const PlanarMap& m;
    Budget budget;
    DualArcs dual;
    VecArena arena;
    std::vector<Label> labels;
    std::vector<std::vector<std::pair<size_t, int>>> frontier; // face -> (vec, label)
    std::unordered_map<unsigned long long, std::vector<int>> state_index;
    SearchStats* stats;

    Engine(const PlanarMap& map, const Budget& b, SearchStats* st) : m(map), budget(b), stats(st) {
        // Assign lanes to edges with positive capacity.
        std::map<int, int> lane_of;
        int lanes = 0;
        for (auto& e : m.edges) {
            int c = budget.capacity(e.id);
            if (budget.cap.find(e.id) == budget.cap.end())
                throw std::invalid_argument("search_insertion: budget missing edge");
            if (c > 0) lane_of[e.id] = lanes++;
        }
        for (auto& [eid, cap] : budget.cap)
            if (!m.edge_by_id(eid))
                throw std::invalid_argument("search_insertion: budget edge not in map");
        arena.words = (lanes + 15) / 16;
        if (arena.words == 0) arena.words = 1;
        dual.out.resize(m.faces.size());
        for (size_t ai = 0; ai < m.arcs.size(); ++ai) {
            const Arc& a = m.arcs[ai];
            int fa = m.hedges[a.h_fwd].face, fb = m.hedges[a.h_rev].face;
            int cap = budget.capacity(a.parent_edge);
            int lane = cap > 0 ? lane_of[a.parent_edge] : -1;
            dual.out[fa].push_back({(int)ai, fb, lane, cap});
            if (fb != fa) dual.out[fb].push_back({(int)ai, fa, lane, cap});
        }
        for (auto& v : dual.out)
            std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.arc < y.arc; });
        frontier.resize(m.faces.size());
    }

    unsigned long long state_hash(int face, const unsigned long long* v) const {
        unsigned long long h = 1469598103934665603ULL ^ (unsigned long long)face;
        for (int i = 0; i < arena.words; ++i) {
            h ^= v[i];
            h *= 1099511628211ULL;
        }
        return h;
    }

    // Returns label id or -1 if pruned. Merges parents on equal states at equal length.
    int add_label(int face, size_t vec_off, int len, int parent, int via_arc) {
        const unsigned long long* v = arena.at(vec_off);
        unsigned long long hh = state_hash(face, v);
        auto it = state_index.find(hh);
        if (it != state_index.end()) {
            for (int lid : it->second) {
                if (labels[lid].face != face) continue;
                if (!vec_eq(arena.at(labels[lid].vec), v, arena.words)) continue;
                if (labels[lid].len == len && parent >= 0)
                    labels[lid].parents.push_back({parent, via_arc});
                return -1; // state already known (equal or shorter)
            }
        }
        for (auto& [fv, flid] : frontier[face]) {
            if (vec_leq(arena.at(fv), v, arena.words)) return -1; // dominated
        }
        int id = (int)labels.size();
        Label l;
        l.face = face;
        l.len = len;
        l.vec = vec_off;
        if (parent >= 0) l.parents.push_back({parent, via_arc});
        labels.push_back(std::move(l));
        frontier[face].push_back({vec_off, id});
        state_index[hh].push_back(id);
        if (stats) stats->labels++;
        return id;
    }
};

// Reconstruct up to `max_walks` start-to-goal step sequences ending at `goal`.
void enumerate_walks(const Engine& eng, int goal_label, size_t max_walks,
                     std::vector<std::vector<std::pair<int, int>>>& out) {
    // Each element of a path is (label, via_arc_to_reach_it); walk is read
    // start -> goal. DFS over parents.
    std::vector<std::pair<int, int>> cur;
    struct Rec {
        const Engine& eng;
        size_t cap;
        std::vector<std::vector<std::pair<int, int>>>& out;
        std::vector<std::pair<int, int>> stack;
        void go(int lid) {
            if (out.size() >= cap) return;
            const Label& l = eng.labels[lid];
            if (l.parents.empty()) {
                std::vector<std::pair<int, int>> walk;
                walk.push_back({lid, -1});
                for (auto it = stack.rbegin(); it != stack.rend(); ++it) walk.push_back(*it);
                out.push_back(std::move(walk));
                return;
            }
            for (auto& [p, arc] : l.parents) {
                stack.push_back({lid, arc});
                go(p);
                stack.pop_back();
                if (out.size() >= cap) return;
            }
        }
    } rec{eng, max_walks, out, {}};
    (void)cur;
    rec.go(goal_label);
}

WitnessWalk walk_from_labels(const Engine& eng,
                             const std::vector<std::pair<int, int>>& path, int u, int v) {
    WitnessWalk w;
    w.u = u;
    w.v = v;
    w.start_face = eng.labels[path.front().first].face;
    for (size_t i = 1; i < path.size(); ++i) {
        WalkStep s;
        s.from_face = eng.labels[path[i - 1].first].face;
        s.to_face = eng.labels[path[i].first].face;
        s.arc = path[i].second;
        w.steps.push_back(s);
    }
    return w;
}

std::vector<int> arc_sequence(const WitnessWalk& w) {
    std::vector<int> s;
    for (auto& st : w.steps) s.push_back(st.arc);
    return s;
}

// Depth-first enumeration without dominance pruning, used as a fallback to
// look for a certifiable witness slightly beyond the minimal length.
struct FallbackSearch {
    const PlanarMap& m;
    const Engine& eng;
    const std::set<int>& goals;
    int u, v;
    int max_len;
    long long step_budget = 400000;
    WitnessWalk found;
    bool ok = false;
    std::vector<WalkStep> cur;
    std::vector<int> face_visits;
    std::vector<int> edge_counts; // by lane
    std::vector<int> caps;

    void dfs(int face, int len) {
        if (ok || step_budget-- <= 0) return;
        if (goals.count(face) && !cur.empty()) {
            WitnessWalk w;
            w.u = u;
            w.v = v;
            w.start_face = cur.front().from_face;
            w.steps = cur;
            if (certify_simple(w, m).accepted) {
                found = std::move(w);
                ok = true;
            }
            if (ok) return;
        }
        if (len >= max_len) return;
        for (auto& o : eng.dual.out[face]) {
            if (o.cap <= 0) continue;
            if (o.lane >= 0 && edge_counts[o.lane] >= o.cap) continue;
            if (face_visits[o.other] >= 3) continue;
            edge_counts[o.lane]++;
            face_visits[o.other]++;
            cur.push_back({face, o.arc, o.other});
            dfs(o.other, len + 1);
            cur.pop_back();
            face_visits[o.other]--;
            edge_counts[o.lane]--;
            if (ok) return;
        }
    }
};

Verdict run_search(const PlanarMap& m, const std::vector<int>& start_faces_in,
                   const std::set<int>& goal_faces, const Budget& b, int u, int v,
                   bool want_certified, SearchStats* stats) {
    Verdict verdict;
    Engine eng(m, b, stats);

    std::vector<int> start_faces = start_faces_in;
    std::sort(start_faces.begin(), start_faces.end());
    start_faces.erase(std::unique(start_faces.begin(), start_faces.end()), start_faces.end());

    // 0-step witness.
    for (int f : start_faces)
        if (goal_faces.count(f)) {
            WitnessWalk w;
            w.u = u;
            w.v = v;
            w.start_face = f;
            verdict.kind = VerdictKind::Insertable;
            verdict.witness = w;
            verdict.certificate = certify_simple(w, m);
            return verdict;
        }

    std::deque<int> queue;
    for (int f : start_faces) {
        size_t vec = eng.arena.alloc_zero();
        int id = eng.add_label(f, vec, 0, -1, -1);
        if (id >= 0) queue.push_back(id);
    }

    int goal_level = -1;
    std::vector<int> goal_labels;
    while (!queue.empty()) {
        int lid = queue.front();
        queue.pop_front();
        int len = eng.labels[lid].len;
        if (goal_level >= 0 && len >= goal_level) break;
        if (stats) stats->expanded++;
        int face = eng.labels[lid].face;
        size_t vec = eng.labels[lid].vec;
        for (auto& o : eng.dual.out[face]) {
            if (o.cap <= 0) continue;
            if (o.lane >= 0 && lane_get(eng.arena.at(vec), o.lane) >= o.cap) continue;
            size_t nv = eng.arena.alloc_copy(vec);
            if (o.lane >= 0) lane_inc(eng.arena.at(nv), o.lane);
            int nid = eng.add_label(o.other, nv, len + 1, lid, o.arc);
            if (nid < 0) continue;
            if (goal_faces.count(o.other)) {
                if (goal_level < 0) goal_level = len + 1;
                goal_labels.push_back(nid);
            }
            queue.push_back(nid);
        }
    }

    if (goal_labels.empty()) {
        verdict.kind = VerdictKind::NotInsertable;
        return verdict;
    }

    // Enumerate minimal-length goal walks; prefer a certified witness, then
    // shortest length, then lexicographically smallest arc-id sequence.
    std::vector<std::vector<std::pair<int, int>>> paths;
    for (int gl : goal_labels) {
        if (eng.labels[gl].len != goal_level) continue;
        enumerate_walks(eng, gl, 20000 - paths.size(), paths);
        if (paths.size() >= 20000) break;
    }
    std::vector<WitnessWalk> walks;
    walks.reserve(paths.size());
    for (auto& p : paths) walks.push_back(walk_from_labels(eng, p, u, v));
    std::stable_sort(walks.begin(), walks.end(), [](const WitnessWalk& a, const WitnessWalk& b) {
        return arc_sequence(a) < arc_sequence(b);
    });

    if (!want_certified) {
        verdict.kind = VerdictKind::WalkOnly;
        verdict.witness = walks.front();
        return verdict;
    }

    for (auto& w : walks) {
        auto cert = certify_simple(w, m);
        if (cert.accepted) {
            verdict.kind = VerdictKind::Insertable;
            verdict.witness = w;
            verdict.certificate = cert;
            return verdict;
        }
    }

    // No minimal-length walk certifies; look a little deeper for a simple one.
    FallbackSearch fb{m, eng, goal_faces, u, v, goal_level + 4};
    fb.face_visits.assign(m.faces.size(), 0);
    int lanes = 0;
    for (auto& e : m.edges)
        if (b.capacity(e.id) > 0) lanes++;
    fb.edge_counts.assign(std::max(lanes, 1), 0);
    for (int f : start_faces) {
        fb.face_visits[f]++;
        fb.dfs(f, 0);
        fb.face_visits[f]--;
        if (fb.ok) break;
    }
    if (fb.ok) {
        verdict.kind = VerdictKind::Insertable;
        verdict.witness = fb.found;
        verdict.certificate = certify_simple(fb.found, m);
        return verdict;
    }

    verdict.kind = VerdictKind::WalkOnly;
    verdict.witness = walks.front();
    return verdict;
}

} // namespace

Verdict search_insertion(const PlanarMap& m, int u, int v, const Budget& b, SearchStats* stats) {
    if (u == v) throw std::invalid_argument("search_insertion: identical endpoints");
    if (m.adjacent_vertices(u, v))
        throw std::invalid_argument("search_insertion: endpoints adjacent");
    auto fan_u = m.vertex_fan(u);
    auto fan_v = m.vertex_fan(v);
    std::set<int> goals(fan_v.begin(), fan_v.end());
    return run_search(m, fan_u, goals, b, u, v, /*want_certified=*/true, stats);
}

FacePathResult exists_bounded_face_path(const PlanarMap& m, int f_from, int f_to, int cap) {
    if (f_from < 0 || f_from >= (int)m.faces.size() || f_to < 0 || f_to >= (int)m.faces.size())
        throw std::invalid_argument("exists_bounded_face_path: unknown face");
    Budget b = uniform_budget(m, cap);
    std::set<int> goals{f_to};
    Verdict v = run_search(m, {f_from}, goals, b, -1, -1, /*want_certified=*/false, nullptr);
    FacePathResult r;
    r.reachable = v.kind != VerdictKind::NotInsertable;
    if (r.reachable) r.walk = v.witness;
    return r;
}

int min_crossing_face_path(const PlanarMap& m, int f_from, int f_to) {
    if (f_from < 0 || f_from >= (int)m.faces.size() || f_to < 0 || f_to >= (int)m.faces.size())
        throw std::invalid_argument("min_crossing_face_path: unknown face");
    if (f_from == f_to) return 0;
    std::vector<std::vector<int>> adj(m.faces.size());
    for (auto& a : m.arcs) {
        int fa = m.hedges[a.h_fwd].face, fb = m.hedges[a.h_rev].face;
        adj[fa].push_back(fb);
        adj[fb].push_back(fa);
    }
    std::vector<int> dist(m.faces.size(), -1);
    std::deque<int> q{f_from};
    dist[f_from] = 0;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        if (f == f_to) return dist[f];
        for (int g : adj[f])
            if (dist[g] < 0) {
                dist[g] = dist[f] + 1;
                q.push_back(g);
            }
    }
    throw std::invalid_argument("min_crossing_face_path: faces not connected in dual");
}

NeighborReport potential_neighbors_map(const PlanarMap& m, int v, int k) {
    NeighborReport rep;
    rep.vertex = v;
    m.node_of_vertex(v);
    std::vector<int> candidates;
    for (auto& [vid, node] : m.vertex_node)
        if (vid != v && !m.adjacent_vertices(v, vid)) candidates.push_back(vid);
    std::sort(candidates.begin(), candidates.end());
    for (int u : candidates) {
        Budget b = budgets_for_map(m, v, u, k);
        Verdict ver = search_insertion(m, v, u, b);
        if (ver.kind == VerdictKind::NotInsertable) continue;
        if (ver.kind == VerdictKind::Insertable) rep.insertable.push_back(u);
        else rep.walk_only.push_back(u);
        rep.verdicts[u] = std::move(ver);
    }
    return rep;
}

NeighborReport potential_neighbors(const Drawing& d, int v, int k) {
    PlanarMap m = planarize(d);
    return potential_neighbors_map(m, v, k);
}

} // namespace topocross
