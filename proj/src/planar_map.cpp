#include "topocross/planar_map.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace topocross {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Direction of the piece `i` of an arc, oriented along the arc.
Pt piece_dir(const Arc& a, int i) {
    return Pt{a.base_b[i].x - a.base_a[i].x, a.base_b[i].y - a.base_a[i].y};
}

Pt hedge_out_dir(const PlanarMap& m, int h) {
    const HalfEdge& he = m.hedges[h];
    const Arc& a = m.arcs[he.arc];
    if (he.forward) return piece_dir(a, 0);
    Pt d = piece_dir(a, (int)a.base_a.size() - 1);
    return Pt{-d.x, -d.y};
}

} // namespace

const EdgeRec* PlanarMap::edge_by_id(int id) const {
    for (auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

EdgeRec* PlanarMap::edge_by_id(int id) {
    for (auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

bool PlanarMap::adjacent_vertices(int a, int b) const {
    for (auto& e : edges)
        if ((e.v1 == a && e.v2 == b) || (e.v1 == b && e.v2 == a)) return true;
    return false;
}

int PlanarMap::crossings_between(int e1, int e2) const {
    auto key = std::minmax(e1, e2);
    auto it = pair_crossings.find({key.first, key.second});
    return it == pair_crossings.end() ? 0 : it->second;
}

bool PlanarMap::edges_share_endpoint(int e1, int e2) const {
    const EdgeRec* a = edge_by_id(e1);
    const EdgeRec* b = edge_by_id(e2);
    if (!a || !b) return false;
    return a->v1 == b->v1 || a->v1 == b->v2 || a->v2 == b->v1 || a->v2 == b->v2;
}

int PlanarMap::common_points(int e1, int e2) const {
    return crossings_between(e1, e2) + (edges_share_endpoint(e1, e2) ? 1 : 0);
}

bool PlanarMap::is_k_simple(int k) const {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (common_points(edges[i].id, edges[j].id) > k) return false;
    return true;
}

int PlanarMap::node_of_vertex(int vid) const {
    auto it = vertex_node.find(vid);
    if (it == vertex_node.end()) throw std::invalid_argument("unknown vertex id");
    return it->second;
}

std::vector<int> PlanarMap::vertex_fan(int vid) const {
    int n = node_of_vertex(vid);
    const MapNode& node = nodes[n];
    if (node.rot.empty()) {
        if (node.containing_face < 0) throw std::logic_error("isolated vertex without containing face");
        return {node.containing_face};
    }
    std::vector<int> out;
    out.reserve(node.rot.size());
    for (int h : node.rot) out.push_back(hedges[h].face);
    return out;
}

int PlanarMap::derived_next(int h) const {
    int tw = hedges[h].twin;
    int n = hedges[h].dst;
    const auto& r = nodes[n].rot;
    for (size_t j = 0; j < r.size(); ++j)
        if (r[j] == tw) return r[(j + r.size() - 1) % r.size()];
    throw std::logic_error("twin not found in rotation");
}

void PlanarMap::rebuild_faces(int attach_begin, int attach_end) {
    for (size_t h = 0; h < hedges.size(); ++h) {
        int nx = derived_next((int)h);
        hedges[h].next = nx;
        hedges[nx].prev = (int)h;
    }
    // Trace orbits.
    int H = (int)hedges.size();
    std::vector<int> orbit(H, -1);
    std::vector<std::vector<int>> orbits;
    for (int h = 0; h < H; ++h) {
        if (orbit[h] >= 0) continue;
        int id = (int)orbits.size();
        orbits.emplace_back();
        int cur = h;
        while (orbit[cur] < 0) {
            orbit[cur] = id;
            orbits[id].push_back(cur);
            cur = hedges[cur].next;
        }
    }
    // Vote each orbit's former face from its hedges' current assignments.
    int old_count = (int)faces.size();
    std::vector<std::vector<int>> claim(old_count);
    std::vector<int> vote((int)orbits.size(), -1);
    std::vector<bool> attach_only((int)orbits.size(), false);
    for (size_t i = 0; i < orbits.size(); ++i) {
        int of = -1;
        bool all_attach = attach_end > attach_begin;
        for (int h : orbits[i]) {
            if (hedges[h].face >= 0 && of < 0) of = hedges[h].face;
            if (h < attach_begin || h >= attach_end) all_attach = false;
        }
        vote[i] = of;
        attach_only[i] = all_attach && of >= 0;
        if (of >= 0 && !attach_only[i]) claim[of].push_back((int)i);
    }
    std::vector<MapFace> nf(old_count);
    for (int f = 0; f < old_count; ++f) {
        nf[f].labels = faces[f].labels;
        nf[f].punctures = faces[f].punctures;
    }
    std::vector<int> final_of((int)orbits.size(), -1);
    for (int f = 0; f < old_count; ++f) {
        if (claim[f].empty()) continue;
        // Keep the id on the orbit containing the smallest participating hedge.
        std::sort(claim[f].begin(), claim[f].end(), [&](int a, int b) {
            int ma = *std::min_element(orbits[a].begin(), orbits[a].end());
            int mb = *std::min_element(orbits[b].begin(), orbits[b].end());
            return ma < mb;
        });
        final_of[claim[f][0]] = f;
        for (size_t i = 1; i < claim[f].size(); ++i) {
            int nid = (int)nf.size();
            nf.emplace_back();
            final_of[claim[f][i]] = nid;
        }
    }
    for (size_t i = 0; i < orbits.size(); ++i) {
        if (final_of[i] >= 0 || !attach_only[i]) continue;
        // A cycle of the inserted edge alone: an extra boundary cycle of the
        // face it was drawn in (or of that face's id-keeping fragment).
        final_of[i] = vote[i];
    }
    for (size_t i = 0; i < orbits.size(); ++i) {
        if (final_of[i] >= 0) continue;
        int nid = (int)nf.size();
        nf.emplace_back();
        final_of[i] = nid;
    }
    for (size_t i = 0; i < orbits.size(); ++i) {
        int f = final_of[i];
        nf[f].cycles.push_back(orbits[i].front());
        for (int h : orbits[i]) hedges[h].face = f;
    }
    faces = std::move(nf);
    face_labels.clear();
    for (size_t f = 0; f < faces.size(); ++f)
        for (auto& l : faces[f].labels) face_labels[l] = (int)f;
}

std::string PlanarMap::debug_dump() const {
    std::ostringstream os;
    os << "planar-map nodes=" << nodes.size() << " arcs=" << arcs.size()
       << " faces=" << faces.size() << "\n";
    for (size_t i = 0; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        os << "node " << i << " " << (n.kind == NodeKind::Vertex ? "vertex" : "crossing");
        if (n.kind == NodeKind::Vertex) os << " v=" << n.vertex_id << " label=" << n.label;
        else os << " edges=" << n.edge_a << "," << n.edge_b
                << " idx=" << n.index_on_a << "," << n.index_on_b;
        if (n.has_point) os << " at=(" << n.point.x.str() << "," << n.point.y.str() << ")";
        os << " rot=[";
        for (size_t j = 0; j < n.rot.size(); ++j) os << (j ? " " : "") << n.rot[j];
        os << "]\n";
    }
    for (size_t i = 0; i < arcs.size(); ++i) {
        const auto& a = arcs[i];
        os << "arc " << i << " edge=" << a.parent_edge << " pos=" << a.pos
           << " from=" << a.from << " to=" << a.to
           << " faces=" << hedges[a.h_fwd].face << "/" << hedges[a.h_rev].face << "\n";
    }
    for (size_t f = 0; f < faces.size(); ++f) {
        os << "face " << f << " cycles=" << faces[f].cycles.size();
        if ((int)f == outer_face) os << " outer";
        if ((int)f == inner_face) os << " inner";
        for (auto& l : faces[f].labels) os << " label=" << l;
        os << " walk=";
        for (int c : faces[f].cycles) {
            os << "(";
            int h = c;
            bool first = true;
            do {
                os << (first ? "" : " ") << h;
                first = false;
                h = hedges[h].next;
            } while (h != c);
            os << ")";
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// ---------- Ray shooting (westward / eastward at a perturbed level) ----------

struct RayQuery {
    // Shoot from (x0, y0 + eps) in direction dir (-1 = west, +1 = east).
    Rat x0, y0;
    int dir = -1;
    const std::vector<int>* skip_arcs = nullptr; // sorted arc ids to ignore
};

struct RayHit {
    bool found = false;
    int arc = -1;
    int piece = -1;
    Rat x;       // x coordinate at the unperturbed level
    Rat slope;   // dx/dy of the hit piece
    bool piece_up = false; // underlying direction has dy > 0
};

RayHit shoot_ray(const PlanarMap& m, const RayQuery& q) {
    RayHit best;
    i64 h = m.surface.is_cylinder() ? m.surface.height : 0;
    for (size_t ai = 0; ai < m.arcs.size(); ++ai) {
        if (q.skip_arcs &&
            std::binary_search(q.skip_arcs->begin(), q.skip_arcs->end(), (int)ai))
            continue;
        const Arc& a = m.arcs[ai];
        if (a.synthetic) continue;
        for (size_t p = 0; p + 1 < a.pts.size(); ++p) {
            const RatPt& u = a.pts[p];
            const RatPt& v = a.pts[p + 1];
            Pt ba = a.base_a[p], bb = a.base_b[p];
            i64 dy = bb.y - ba.y;
            if (dy == 0) continue; // horizontal pieces never cross the perturbed level
            Rat ylo = std::min(u.y, v.y), yhi = std::max(u.y, v.y);
            // Candidate level lifts: y0 + t*h within [ylo, yhi).
            std::vector<Rat> levels;
            if (h == 0) {
                levels.push_back(q.y0);
            } else {
                // t range so that y0 + t*h in [ylo - h, yhi + h]; cheap bounds.
                i64 lo_t = (ylo - q.y0).floor() / h - 2;
                i64 hi_t = (yhi - q.y0).floor() / h + 2;
                for (i64 t = lo_t; t <= hi_t; ++t)
                    levels.push_back(q.y0 + Rat(t * h));
            }
            for (const Rat& lev : levels) {
                // Crossing of level (lev + eps): ylo <= lev < yhi.
                if (lev < ylo || !(lev < yhi)) continue;
                // x on the underlying line at height lev.
                Rat x = Rat(ba.x) + (lev - Rat(ba.y)) * Rat(bb.x - ba.x, dy);
                if (q.dir < 0) {
                    if (!(x < q.x0)) continue;
                } else {
                    if (!(x > q.x0)) continue;
                }
                Rat slope(bb.x - ba.x, dy);
                bool better;
                if (!best.found) better = true;
                else if (q.dir < 0)
                    better = (x > best.x) || (x == best.x && slope > best.slope);
                else
                    better = (x < best.x) || (x == best.x && slope < best.slope);
                if (better) {
                    best.found = true;
                    best.arc = (int)ai;
                    best.piece = (int)p;
                    best.x = x;
                    best.slope = slope;
                    best.piece_up = dy > 0;
                }
            }
        }
    }
    return best;
}

// Face on the east (resp. west) flank of a ray hit, as a half-edge whose face
// should be consulted after tracing.
int hit_side_hedge(const PlanarMap& m, const RayHit& hit, bool east_side) {
    const Arc& a = m.arcs[hit.arc];
    // Forward hedge travels with the base direction. Heading down (dy < 0)
    // puts east on its left; heading up puts west on its left.
    bool fwd_has_east = !hit.piece_up;
    if (east_side) return fwd_has_east ? a.h_fwd : a.h_rev;
    return fwd_has_east ? a.h_rev : a.h_fwd;
}

// True if the canonical point q lies on some arc of the map.
bool point_on_any_arc(const PlanarMap& m, Pt q) {
    i64 h = m.surface.is_cylinder() ? m.surface.height : 0;
    for (const Arc& a : m.arcs) {
        if (a.synthetic) continue;
        for (size_t p = 0; p + 1 < a.pts.size(); ++p) {
            Pt ba = a.base_a[p], bb = a.base_b[p];
            std::vector<i64> lifts{0};
            if (h > 0) {
                i64 lo = std::min(ba.y, bb.y), hi = std::max(ba.y, bb.y);
                for (i64 t = (lo - q.y) / h - 2; t <= (hi - q.y) / h + 2; ++t)
                    lifts.push_back(t * h);
            }
            for (i64 m2 : lifts) {
                Pt qq{q.x, q.y + m2};
                if (!point_on_segment(qq, ba, bb)) continue;
                // within the sub-piece [u, v]
                RatPt rq = to_ratpt(qq);
                Rat lo = std::min(a.pts[p].y, a.pts[p + 1].y);
                Rat hi = std::max(a.pts[p].y, a.pts[p + 1].y);
                Rat lox = std::min(a.pts[p].x, a.pts[p + 1].x);
                Rat hix = std::max(a.pts[p].x, a.pts[p + 1].x);
                if (rq.y >= lo && rq.y <= hi && rq.x >= lox && rq.x <= hix) return true;
            }
        }
    }
    return false;
}

} // namespace

PlanarMap planarize(const Drawing& d) {
    auto viols = validate_drawing(d);
    if (!viols.empty())
        throw std::invalid_argument("planarize: drawing fails validation (" +
                                    std::string(violation_name(viols.front().kind)) + ")");
    PlanarMap m;
    m.surface = d.surface;
    m.k = d.k;
    const i64 h = d.surface.is_cylinder() ? d.surface.height : 0;

    // Vertex nodes.
    for (auto& v : d.vertices) {
        MapNode n;
        n.kind = NodeKind::Vertex;
        n.point = to_ratpt(v.pos);
        n.has_point = true;
        n.vertex_id = v.id;
        n.label = v.label;
        m.vertex_node[v.id] = (int)m.nodes.size();
        m.nodes.push_back(std::move(n));
        m.next_vertex_id = std::max(m.next_vertex_id, v.id + 1);
    }

    // Crossing events and nodes.
    auto events = all_crossings(d);
    struct Cut {
        int seg;
        Rat t;
        int node;
    };
    std::map<int, std::vector<Cut>> cuts; // edge id -> cuts
    for (auto& ev : events) {
        MapNode n;
        n.kind = NodeKind::Crossing;
        n.point = ev.point;
        n.has_point = true;
        n.edge_a = ev.edge_a;
        n.edge_b = ev.edge_b;
        int node = (int)m.nodes.size();
        m.nodes.push_back(std::move(n));
        cuts[ev.edge_a].push_back({ev.seg_a, ev.ta, node});
        cuts[ev.edge_b].push_back({ev.seg_b, ev.tb, node});
        auto key = std::minmax(ev.edge_a, ev.edge_b);
        m.pair_crossings[{key.first, key.second}]++;
    }

    // Arcs per edge.
    for (auto& e : d.edges) {
        EdgeRec rec;
        rec.id = e.id;
        rec.v1 = e.v1;
        rec.v2 = e.v2;
        m.next_edge_id = std::max(m.next_edge_id, e.id + 1);
        auto poly = d.lifted_polyline(e);
        auto& cl = cuts[e.id];
        std::sort(cl.begin(), cl.end(), [](const Cut& a, const Cut& b) {
            if (a.seg != b.seg) return a.seg < b.seg;
            return a.t < b.t;
        });
        // Crossing index along this edge.
        for (size_t i = 0; i < cl.size(); ++i) {
            MapNode& n = m.nodes[cl[i].node];
            if (n.edge_a == e.id) n.index_on_a = (int)i;
            else n.index_on_b = (int)i;
        }
        // Pseudo-cuts at the curve ends.
        struct Stop {
            int seg;
            Rat t;
            int node;
        };
        std::vector<Stop> stops;
        stops.push_back({0, Rat(0), m.vertex_node[e.v1]});
        for (auto& c : cl) stops.push_back({c.seg, c.t, c.node});
        stops.push_back({(int)poly.size() - 2, Rat(1), m.vertex_node[e.v2]});

        for (size_t i = 0; i + 1 < stops.size(); ++i) {
            Arc a;
            a.parent_edge = e.id;
            a.pos = (int)i;
            a.from = stops[i].node;
            a.to = stops[i + 1].node;
            int s0 = stops[i].seg, s1 = stops[i + 1].seg;
            RatPt p0 = segment_point(poly[s0], poly[s0 + 1], stops[i].t);
            RatPt p1 = segment_point(poly[s1], poly[s1 + 1], stops[i + 1].t);
            a.pts.push_back(p0);
            for (int s = s0; s < s1; ++s) {
                a.pts.push_back(to_ratpt(poly[s + 1]));
                a.base_a.push_back(poly[s]);
                a.base_b.push_back(poly[s + 1]);
            }
            a.pts.push_back(p1);
            a.base_a.push_back(poly[s1]);
            a.base_b.push_back(poly[s1 + 1]);
            // Drop degenerate leading/trailing pieces (cut exactly at a bend
            // cannot happen for crossings; only for t=0/1 stops at segment ends).
            // Guard anyway: remove zero-length pieces.
            for (size_t p = 0; p + 1 < a.pts.size();) {
                if (a.pts[p] == a.pts[p + 1]) {
                    a.pts.erase(a.pts.begin() + p + 1);
                    a.base_a.erase(a.base_a.begin() + p);
                    a.base_b.erase(a.base_b.begin() + p);
                } else {
                    ++p;
                }
            }
            int arc_id = (int)m.arcs.size();
            rec.arcs.push_back(arc_id);

            HalfEdge fwd, rev;
            fwd.arc = rev.arc = arc_id;
            fwd.forward = true;
            rev.forward = false;
            fwd.src = a.from;
            fwd.dst = a.to;
            rev.src = a.to;
            rev.dst = a.from;
            a.h_fwd = (int)m.hedges.size();
            a.h_rev = a.h_fwd + 1;
            fwd.twin = a.h_rev;
            rev.twin = a.h_fwd;
            m.hedges.push_back(fwd);
            m.hedges.push_back(rev);
            m.arcs.push_back(std::move(a));
        }
        m.edges.push_back(std::move(rec));
    }

    // Rotations.
    for (size_t ai = 0; ai < m.arcs.size(); ++ai) {
        m.nodes[m.arcs[ai].from].rot.push_back(m.arcs[ai].h_fwd);
        m.nodes[m.arcs[ai].to].rot.push_back(m.arcs[ai].h_rev);
    }
    for (auto& n : m.nodes) {
        std::sort(n.rot.begin(), n.rot.end(), [&](int h1, int h2) {
            return angle_less(hedge_out_dir(m, h1), hedge_out_dir(m, h2));
        });
    }

    // Trace raw faces.
    m.rebuild_faces();
    int raw_faces = (int)m.faces.size();

    // Components over arcs.
    Dsu node_dsu((int)m.nodes.size());
    for (auto& a : m.arcs) node_dsu.unite(a.from, a.to);
    std::map<int, std::vector<int>> comp_arcs; // root node -> arcs
    for (size_t ai = 0; ai < m.arcs.size(); ++ai)
        comp_arcs[node_dsu.find(m.arcs[ai].from)].push_back((int)ai);

    const bool cyl = m.surface.is_cylinder();
    int GLOBAL_L = raw_faces;
    int GLOBAL_R = raw_faces + 1;
    Dsu face_dsu(raw_faces + 2);
    if (!cyl) face_dsu.unite(GLOBAL_R, GLOBAL_L);

    // For each component: extreme points, gap faces, rays.
    for (auto& [root, arcs_of] : comp_arcs) {
        std::vector<int> sorted_arcs = arcs_of;
        std::sort(sorted_arcs.begin(), sorted_arcs.end());

        // Find extreme points among all polyline points of the component.
        struct Extreme {
            RatPt p;
            int arc = -1;
            int pt_index = -1;
            bool set = false;
        };
        Extreme west, east;
        for (int ai : sorted_arcs) {
            const Arc& a = m.arcs[ai];
            for (size_t pi = 0; pi < a.pts.size(); ++pi) {
                const RatPt& p = a.pts[pi];
                if (!west.set || p < west.p) west = {p, ai, (int)pi, true};
                if (!east.set || east.p < p) east = {p, ai, (int)pi, true};
            }
        }

        // The face in the angular gap containing `probe_dir` at the extreme point.
        auto gap_face = [&](const Extreme& ex, Pt probe_dir) -> int {
            const Arc& a = m.arcs[ex.arc];
            std::vector<std::pair<Pt, int>> dirs; // (outgoing dir, hedge leaving that way)
            bool at_from = (ex.pt_index == 0);
            bool at_to = (ex.pt_index == (int)a.pts.size() - 1);
            int node = at_from ? a.from : (at_to ? a.to : -1);
            if (node >= 0) {
                for (int oh : m.nodes[node].rot)
                    dirs.push_back({hedge_out_dir(m, oh), oh});
            } else {
                // A bend: hedge leaving along the next piece is the forward one.
                int pi = ex.pt_index;
                Pt dn = piece_dir(a, pi);                  // toward next point
                Pt dp = piece_dir(a, pi - 1);              // previous piece, arc order
                dirs.push_back({dn, a.h_fwd});
                dirs.push_back({Pt{-dp.x, -dp.y}, a.h_rev});
                std::sort(dirs.begin(), dirs.end(), [&](auto& x, auto& y) {
                    return angle_less(x.first, y.first);
                });
            }
            // Find consecutive pair (d_i, d_{i+1}) CCW with probe_dir inside
            // the half-open interval [d_i, d_{i+1});  the gap belongs to the
            // hedge leaving along d_i.
            int sz = (int)dirs.size();
            for (int i = 0; i < sz; ++i) {
                Pt d1 = dirs[i].first;
                Pt d2 = dirs[(i + 1) % sz].first;
                bool in_gap;
                if (sz == 1) in_gap = true;
                else {
                    // probe in CCW interval (d1, d2)
                    bool a1 = angle_less(d1, probe_dir) || (d1 == probe_dir);
                    bool a2 = angle_less(probe_dir, d2);
                    if (angle_less(d1, d2)) in_gap = a1 && a2;
                    else in_gap = a1 || a2; // wrapped interval
                }
                if (in_gap) return m.hedges[dirs[i].second].face;
            }
            throw std::logic_error("gap_face: no gap found");
        };

        int west_face = gap_face(west, Pt{-1, 0});
        RayQuery qw{west.p.x, west.p.y, -1, &sorted_arcs};
        RayHit hw = shoot_ray(m, qw);
        int west_target = hw.found ? m.hedges[hit_side_hedge(m, hw, /*east=*/true)].face : GLOBAL_L;
        face_dsu.unite(west_face, west_target);

        if (cyl) {
            int east_face = gap_face(east, Pt{1, 0});
            RayQuery qe{east.p.x, east.p.y, +1, &sorted_arcs};
            RayHit he = shoot_ray(m, qe);
            int east_target = he.found ? m.hedges[hit_side_hedge(m, he, /*east=*/false)].face : GLOBAL_R;
            face_dsu.unite(east_face, east_target);
        }
    }

    // Isolated vertices: locate containing face slot.
    std::vector<std::pair<int, int>> isolated_slots; // (node, slot)
    for (size_t ni = 0; ni < m.nodes.size(); ++ni) {
        if (!m.nodes[ni].rot.empty()) continue;
        RayQuery q{m.nodes[ni].point.x, m.nodes[ni].point.y, -1, nullptr};
        RayHit hit = shoot_ray(m, q);
        int slot = hit.found ? m.hedges[hit_side_hedge(m, hit, true)].face : GLOBAL_L;
        isolated_slots.push_back({(int)ni, slot});
    }

    // Face anchors.
    std::vector<std::pair<std::string, int>> label_slots;
    for (auto& anchor : d.face_anchors) {
        Pt p = anchor.pos;
        if (point_on_any_arc(m, p))
            throw std::invalid_argument("face anchor '" + anchor.label + "' lies on an edge");
        for (auto& n : m.nodes)
            if (n.has_point && n.point == to_ratpt(p))
                throw std::invalid_argument("face anchor '" + anchor.label + "' lies on a node");
        RayQuery q{Rat(p.x), Rat(p.y), -1, nullptr};
        RayHit hit = shoot_ray(m, q);
        int slot = hit.found ? m.hedges[hit_side_hedge(m, hit, true)].face : GLOBAL_L;
        label_slots.push_back({anchor.label, slot});
    }

    // Merge raw faces into final faces.
    std::map<int, int> class_face; // dsu root -> final face id
    std::vector<MapFace> finals;
    std::vector<int> raw_to_final(raw_faces, -1);
    for (int f = 0; f < raw_faces; ++f) {
        int root = face_dsu.find(f);
        auto it = class_face.find(root);
        if (it == class_face.end()) {
            it = class_face.insert({root, (int)finals.size()}).first;
            finals.emplace_back();
        }
        raw_to_final[f] = it->second;
        for (int c : m.faces[f].cycles) finals[it->second].cycles.push_back(c);
    }
    auto slot_to_final = [&](int slot) -> int {
        int root = face_dsu.find(slot);
        auto it = class_face.find(root);
        if (it == class_face.end()) {
            // A global region with no boundary cycles (e.g. empty drawing).
            it = class_face.insert({root, (int)finals.size()}).first;
            finals.emplace_back();
        }
        return it->second;
    };
    int inner = slot_to_final(GLOBAL_L);
    int outer = cyl ? slot_to_final(GLOBAL_R) : inner;

    for (auto& he : m.hedges) he.face = raw_to_final[he.face];
    m.faces = std::move(finals);
    m.inner_face = cyl ? inner : -1;
    m.outer_face = outer;
    if (!cyl) m.inner_face = -1;

    for (auto& [node, slot] : isolated_slots) {
        int f = slot_to_final(slot);
        m.nodes[node].containing_face = f;
        m.faces[f].punctures.push_back(node);
    }
    for (auto& [label, slot] : label_slots) {
        int f = slot_to_final(slot);
        if (m.face_labels.count(label))
            throw std::invalid_argument("duplicate face label '" + label + "'");
        m.face_labels[label] = f;
        m.faces[f].labels.push_back(label);
    }
    return m;
}

std::vector<MapFace> faces_of(const PlanarMap& m) { return m.faces; }

DualGraph dual_of(const PlanarMap& m) {
    DualGraph g;
    g.face_count = (int)m.faces.size();
    for (auto& a : m.arcs) {
        DualLink l;
        l.arc = (int)(&a - m.arcs.data());
        l.face_a = m.hedges[a.h_fwd].face;
        l.face_b = m.hedges[a.h_rev].face;
        l.parent_edge = a.parent_edge;
        g.links.push_back(l);
    }
    return g;
}

std::vector<int> vertex_fan(const PlanarMap& m, int vertex_id) {
    return m.vertex_fan(vertex_id);
}

int face_label_lookup(const PlanarMap& m, const std::string& label) {
    auto it = m.face_labels.find(label);
    if (it == m.face_labels.end())
        throw std::invalid_argument("unknown face label '" + label + "'");
    return it->second;
}

} // namespace topocross
