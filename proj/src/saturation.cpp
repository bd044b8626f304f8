#include "topocross/saturation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace topocross {

int insert_edge(PlanarMap& m, const WitnessWalk& w) {
    const int u = w.u, v = w.v;
    if (u < 0 || v < 0 || u == v) throw std::invalid_argument("insert_edge: bad endpoints");
    if (m.adjacent_vertices(u, v)) throw std::invalid_argument("insert_edge: endpoints adjacent");
    int nu = m.node_of_vertex(u);
    int nv = m.node_of_vertex(v);

    Budget b = budgets_for_map(m, u, v, m.k);
    for (auto& [eid, cnt] : w.per_edge_counts(m))
        if (cnt > b.capacity(eid))
            throw std::invalid_argument("insert_edge: witness violates the crossing budget");
    CertifyResult cert = certify_simple(w, m);
    if (!cert.accepted)
        throw std::invalid_argument("insert_edge: witness is not certified simple (" + cert.reason + ")");

    auto fan_contains = [&](int vid, int face) {
        auto fan = m.vertex_fan(vid);
        return std::find(fan.begin(), fan.end(), face) != fan.end();
    };
    if (!fan_contains(u, w.start_face))
        throw std::invalid_argument("insert_edge: walk does not start at the source fan");
    if (!fan_contains(v, w.end_face()))
        throw std::invalid_argument("insert_edge: walk does not end at the target fan");

    const int c = (int)w.steps.size();
    const int new_eid = m.next_edge_id++;

    // Crossing nodes n_1..n_c.
    std::vector<int> curve_nodes;
    curve_nodes.push_back(nu);
    for (int i = 0; i < c; ++i) {
        MapNode n;
        n.kind = NodeKind::Crossing;
        n.has_point = false;
        n.edge_a = m.arcs[w.steps[i].arc].parent_edge;
        n.edge_b = new_eid;
        n.index_on_b = i;
        curve_nodes.push_back((int)m.nodes.size());
        m.nodes.push_back(std::move(n));
    }
    curve_nodes.push_back(nv);

    // New edge arcs and hedges (chain along the curve).
    std::vector<int> chain_arcs, chain_fwd, chain_rev;
    int attach_begin = (int)m.hedges.size();
    for (int i = 0; i <= c; ++i) {
        Arc a;
        a.parent_edge = new_eid;
        a.pos = i;
        a.from = curve_nodes[i];
        a.to = curve_nodes[i + 1];
        a.synthetic = true;
        int aid = (int)m.arcs.size();
        a.h_fwd = (int)m.hedges.size();
        a.h_rev = a.h_fwd + 1;
        int seed_face = (i == 0) ? w.start_face : w.steps[i - 1].to_face;
        HalfEdge fwd, rev;
        fwd.arc = rev.arc = aid;
        fwd.forward = true;
        rev.forward = false;
        fwd.src = a.from;
        fwd.dst = a.to;
        rev.src = a.to;
        rev.dst = a.from;
        fwd.twin = a.h_rev;
        rev.twin = a.h_fwd;
        fwd.face = rev.face = seed_face;
        chain_arcs.push_back(aid);
        chain_fwd.push_back(a.h_fwd);
        chain_rev.push_back(a.h_rev);
        m.hedges.push_back(fwd);
        m.hedges.push_back(rev);
        m.arcs.push_back(std::move(a));
    }
    int attach_end = (int)m.hedges.size();

    // Split each crossed arc and build the rotation at the new node.
    for (int i = 0; i < c; ++i) {
        int a1 = w.steps[i].arc;
        int n_i = curve_nodes[i + 1];
        Arc& A = m.arcs[a1];
        int parent = A.parent_edge;
        int old_fwd = A.h_fwd, old_rev = A.h_rev;
        int old_to = A.to;
        bool fwd_has_from_face = (m.hedges[old_fwd].face == w.steps[i].from_face);

        // a1 keeps [from -> n_i]; a2 takes [n_i -> old_to].
        int a2 = (int)m.arcs.size();
        Arc A2;
        A2.parent_edge = parent;
        A2.from = n_i;
        A2.to = old_to;
        A2.synthetic = true;
        int new1 = (int)m.hedges.size(); // a1 reverse: n_i -> from
        int new2 = new1 + 1;             // a2 forward: n_i -> old_to
        {
            HalfEdge h1;
            h1.arc = a1;
            h1.forward = false;
            h1.src = n_i;
            h1.dst = A.from;
            h1.twin = old_fwd;
            h1.face = m.hedges[old_rev].face;
            HalfEdge h2;
            h2.arc = a2;
            h2.forward = true;
            h2.src = n_i;
            h2.dst = old_to;
            h2.twin = old_rev;
            h2.face = m.hedges[old_fwd].face;
            m.hedges.push_back(h1);
            m.hedges.push_back(h2);
        }
        A2.h_fwd = new2;
        A2.h_rev = old_rev;
        A.to = n_i;
        A.h_rev = new1;
        A.synthetic = true;
        A.pts.clear();
        A.base_a.clear();
        A.base_b.clear();
        m.hedges[old_fwd].dst = n_i;
        m.hedges[old_fwd].twin = new1;
        m.hedges[old_rev].src = old_to;
        m.hedges[old_rev].dst = n_i;
        m.hedges[old_rev].twin = new2;
        m.hedges[old_rev].arc = a2;
        m.arcs.push_back(std::move(A2));

        // Rotation at the crossing: the curve passes from the left of the
        // hedge whose face is the step's from-face to its right.
        int toward_prev = chain_rev[i];
        int toward_next = chain_fwd[i + 1];
        if (fwd_has_from_face)
            m.nodes[n_i].rot = {new2, toward_prev, new1, toward_next};
        else
            m.nodes[n_i].rot = {new1, toward_prev, new2, toward_next};

        // Parent edge arc list: insert a2 after a1, then renumber.
        EdgeRec* rec = m.edge_by_id(parent);
        auto it = std::find(rec->arcs.begin(), rec->arcs.end(), a1);
        rec->arcs.insert(it + 1, a2);
        for (size_t p = 0; p < rec->arcs.size(); ++p) m.arcs[rec->arcs[p]].pos = (int)p;
        // Crossing indices along the parent follow arc positions.
        for (size_t p = 0; p + 1 < rec->arcs.size(); ++p) {
            int node = m.arcs[rec->arcs[p]].to;
            MapNode& nd = m.nodes[node];
            if (nd.kind != NodeKind::Crossing) continue;
            if (nd.edge_a == parent) nd.index_on_a = (int)p;
            else if (nd.edge_b == parent) nd.index_on_b = (int)p;
        }
        auto key = std::minmax(parent, new_eid);
        m.pair_crossings[{key.first, key.second}]++;
    }

    // Splice the chain ends into the endpoint rotations.
    auto splice_at = [&](int node, int face, int hedge) {
        MapNode& nd = m.nodes[node];
        if (nd.rot.empty()) {
            if (nd.containing_face != face)
                throw std::logic_error("insert_edge: isolated endpoint not in the start face");
            auto& punct = m.faces[face].punctures;
            punct.erase(std::remove(punct.begin(), punct.end(), node), punct.end());
            nd.containing_face = -1;
            nd.rot = {hedge};
            return;
        }
        for (size_t i = 0; i < nd.rot.size(); ++i) {
            if (m.hedges[nd.rot[i]].face == face) {
                nd.rot.insert(nd.rot.begin() + i + 1, hedge);
                return;
            }
        }
        throw std::logic_error("insert_edge: endpoint face not found in rotation");
    };
    splice_at(nu, w.start_face, chain_fwd.front());
    splice_at(nv, w.end_face(), chain_rev.back());

    EdgeRec rec;
    rec.id = new_eid;
    rec.v1 = u;
    rec.v2 = v;
    rec.arcs = chain_arcs;
    rec.inserted = true;
    m.edges.push_back(rec);

    m.rebuild_faces(attach_begin, attach_end);
    return new_eid;
}

SaturationCheck is_saturated(const PlanarMap& m, int k) {
    SaturationCheck out;
    std::vector<int> vids;
    for (auto& [vid, node] : m.vertex_node) vids.push_back(vid);
    std::sort(vids.begin(), vids.end());
    for (size_t i = 0; i < vids.size(); ++i)
        for (size_t j = i + 1; j < vids.size(); ++j) {
            int a = vids[i], b = vids[j];
            if (m.adjacent_vertices(a, b)) continue;
            Budget bud = budgets_for_map(m, a, b, k);
            Verdict ver = search_insertion(m, a, b, bud);
            if (ver.kind == VerdictKind::Insertable) {
                out.status = SaturationStatus::Insertable;
                out.first_insertable = {a, b};
                return out;
            }
            if (ver.kind == VerdictKind::WalkOnly) out.walk_only.push_back({a, b});
        }
    out.status = out.walk_only.empty() ? SaturationStatus::Saturated
                                       : SaturationStatus::WalkOnlyResidue;
    return out;
}

namespace {

std::vector<std::pair<int, int>> pair_order(const PlanarMap& m, PairPolicy policy, unsigned seed) {
    std::vector<int> vids;
    for (auto& [vid, node] : m.vertex_node) vids.push_back(vid);
    std::sort(vids.begin(), vids.end());
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < vids.size(); ++i)
        for (size_t j = i + 1; j < vids.size(); ++j) pairs.push_back({vids[i], vids[j]});
    if (policy == PairPolicy::SeededRandom) {
        std::mt19937 rng(seed);
        std::shuffle(pairs.begin(), pairs.end(), rng);
    } else if (policy == PairPolicy::MaxDegreeLast) {
        std::map<int, int> deg;
        for (auto& e : m.edges) {
            deg[e.v1]++;
            deg[e.v2]++;
        }
        std::stable_sort(pairs.begin(), pairs.end(), [&](auto& a, auto& b) {
            return deg[a.first] + deg[a.second] < deg[b.first] + deg[b.second];
        });
    }
    return pairs;
}

} // namespace

SaturationResult saturate_map(PlanarMap m, int k, PairPolicy policy, unsigned seed) {
    SaturationResult res;
    res.k = k;
    res.initial_edges = (int)m.edges.size();

    std::set<std::pair<int, int>> dead; // proven NotInsertable (monotone under insertion)
    for (;;) {
        bool inserted = false;
        auto pairs = pair_order(m, policy, seed);
        res.walk_only_residue.clear();
        for (auto& [a, b] : pairs) {
            if (m.adjacent_vertices(a, b)) continue;
            if (dead.count({a, b})) continue;
            Budget bud = budgets_for_map(m, a, b, k);
            Verdict ver = search_insertion(m, a, b, bud);
            if (ver.kind == VerdictKind::NotInsertable) {
                dead.insert({a, b});
                continue;
            }
            if (ver.kind == VerdictKind::WalkOnly) {
                res.walk_only_residue.push_back({a, b});
                continue;
            }
            insert_edge(m, ver.witness);
            res.log.push_back({a, b, (int)ver.witness.steps.size()});
            inserted = true;
            break;
        }
        if (!inserted) break;
    }

    res.final_edges = (int)m.edges.size();
    for (auto& [vid, node] : m.vertex_node) res.degrees[vid] = 0;
    for (auto& e : m.edges) {
        res.degrees[e.v1]++;
        res.degrees[e.v2]++;
    }
    res.map = std::move(m);
    return res;
}

SaturationResult saturate(const Drawing& d, int k, PairPolicy policy, unsigned seed) {
    return saturate_map(planarize(d), k, policy, seed);
}

std::string SaturationResult::report() const {
    std::ostringstream os;
    os << "saturation n=" << degrees.size() << " k=" << k << " edges " << initial_edges << " -> "
       << final_edges << "\n";
    os << "degrees:";
    for (auto& [vid, deg] : degrees) os << " " << vid << ":" << deg;
    os << "\n";
    for (auto& e : log) os << "add " << e.u << " " << e.v << " crossings=" << e.crossings << "\n";
    if (!walk_only_residue.empty()) {
        os << "walk-only residue:";
        for (auto& [a, b] : walk_only_residue) os << " (" << a << "," << b << ")";
        os << "\n";
    }
    return os.str();
}

std::vector<int> clone_vertex(PlanarMap& m, int v, int count) {
    if (count < 1) throw std::invalid_argument("clone_vertex: count must be >= 1");
    int nv = m.node_of_vertex(v);
    std::vector<int> neighbors;
    for (auto& e : m.edges) {
        if (e.v1 == v) neighbors.push_back(e.v2);
        if (e.v2 == v) neighbors.push_back(e.v1);
    }
    std::sort(neighbors.begin(), neighbors.end());
    std::vector<int> clones;
    for (int j = 0; j < count; ++j) {
        // Place the clone in the face at v's first rotation slot (or v's own
        // containing face if v is isolated).
        int face;
        if (m.nodes[nv].rot.empty())
            face = m.nodes[nv].containing_face;
        else
            face = m.hedges[m.nodes[nv].rot[0]].face;
        MapNode cn;
        cn.kind = NodeKind::Vertex;
        cn.has_point = false;
        cn.vertex_id = m.next_vertex_id++;
        cn.label = m.nodes[nv].label + "+" + std::to_string(j + 1);
        cn.containing_face = face;
        int node_id = (int)m.nodes.size();
        m.nodes.push_back(cn);
        m.vertex_node[cn.vertex_id] = node_id;
        m.faces[face].punctures.push_back(node_id);
        clones.push_back(cn.vertex_id);
        // Join the clone to each neighbor of v with a certified witness.
        for (int w : neighbors) {
            if (m.adjacent_vertices(cn.vertex_id, w)) continue;
            Budget bud = budgets_for_map(m, cn.vertex_id, w, m.k);
            Verdict ver = search_insertion(m, cn.vertex_id, w, bud);
            if (ver.kind != VerdictKind::Insertable) continue;
            insert_edge(m, ver.witness);
        }
    }
    return clones;
}

} // namespace topocross
