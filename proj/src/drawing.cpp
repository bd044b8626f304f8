#include "topocross/drawing.hpp"

#include <algorithm>
#include <cstdlib>

namespace topocross {

const Vertex* Drawing::vertex_by_id(int id) const {
    for (auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

const Vertex* Drawing::vertex_by_label(const std::string& label) const {
    for (auto& v : vertices)
        if (v.label == label) return &v;
    return nullptr;
}

const Edge* Drawing::edge_by_id(int id) const {
    for (auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

std::optional<int> Drawing::edge_between(int u, int v) const {
    for (auto& e : edges)
        if ((e.v1 == u && e.v2 == v) || (e.v1 == v && e.v2 == u)) return e.id;
    return std::nullopt;
}

std::vector<Pt> Drawing::lifted_polyline(const Edge& e) const {
    const Vertex* a = vertex_by_id(e.v1);
    const Vertex* b = vertex_by_id(e.v2);
    if (!a || !b) throw std::invalid_argument("edge with unknown endpoint");
    i64 h = surface.is_cylinder() ? surface.height : 0;
    std::vector<Pt> pts;
    pts.reserve(e.interior.size() + 2);
    pts.push_back(a->pos);
    i64 lift = 0;
    for (size_t i = 0; i < e.interior.size(); ++i) {
        if (i < e.wraps.size()) lift += (i64)e.wraps[i] * h;
        else if (!e.wraps.empty()) lift += 0;
        pts.push_back(Pt{e.interior[i].x, e.interior[i].y + lift});
    }
    size_t last_seg = e.interior.size();
    if (last_seg < e.wraps.size()) lift += (i64)e.wraps[last_seg] * h;
    pts.push_back(Pt{b->pos.x, b->pos.y + lift});
    return pts;
}

const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::DuplicateVertexPoint: return "duplicate-vertex-point";
        case ViolationKind::VertexOnEdge: return "vertex-on-edge";
        case ViolationKind::SelfIntersection: return "self-intersection";
        case ViolationKind::OverlapIntersection: return "non-transversal-overlap";
        case ViolationKind::TouchIntersection: return "non-transversal-touch";
        case ViolationKind::CrossingAtBend: return "crossing-at-bend";
        case ViolationKind::TriplePoint: return "triple-point";
        case ViolationKind::DuplicateEdgePair: return "duplicate-edge-pair";
        case ViolationKind::SelfLoop: return "self-loop";
        case ViolationKind::BadWindingData: return "bad-winding-data";
        case ViolationKind::SegmentTooTall: return "segment-vertical-extent";
        case ViolationKind::CoordinateOutOfRange: return "coordinate-out-of-range";
        case ViolationKind::ZeroLengthSegment: return "zero-length-segment";
        case ViolationKind::UnknownEndpoint: return "unknown-endpoint";
    }
    return "unknown";
}

namespace {

struct LiftedSeg {
    Pt a, b;
};

// Shift the segment vertically by a multiple of h so min(y) lands in [0, h).
LiftedSeg reduce_mod(LiftedSeg s, i64 h) {
    if (h <= 0) return s;
    i64 lo = std::min(s.a.y, s.b.y);
    i64 k = lo >= 0 ? lo / h : -((-lo + h - 1) / h);
    s.a.y -= k * h;
    s.b.y -= k * h;
    return s;
}

bool share_vertex_point(const Drawing& d, const Edge& ea, const Edge& eb, RatPt p) {
    for (int v : {ea.v1, ea.v2}) {
        if (v != eb.v1 && v != eb.v2) continue;
        const Vertex* vv = d.vertex_by_id(v);
        if (!vv) continue;
        RatPt q = to_ratpt(vv->pos);
        if (d.surface.is_cylinder()) {
            // p is canonical already; vertex points are canonical by validation.
        }
        if (q == p) return true;
    }
    return false;
}

RatPt canonicalize(RatPt p, const Surface& s) {
    if (!s.is_cylinder()) return p;
    // y mod H into [0, H): subtract floor(y/H)*H, exactly.
    i128 dh = (i128)p.y.den * s.height;
    i128 n = p.y.num;
    i128 q = n >= 0 ? n / dh : -((-n + dh - 1) / dh);
    p.y = Rat::rat_from_i128(n - q * dh, p.y.den);
    return p;
}

bool is_bend_point(const std::vector<Pt>& poly, RatPt p, int seg) {
    // True if p equals an interior breakpoint adjacent to segment seg.
    if (seg > 0 && to_ratpt(poly[seg]) == p) return true;
    if (seg + 2 < (int)poly.size() && to_ratpt(poly[seg + 1]) == p) return true;
    return false;
}

} // namespace

std::vector<Violation> validate_drawing(const Drawing& d) {
    std::vector<Violation> out;
    const bool cyl = d.surface.is_cylinder();
    const i64 h = cyl ? d.surface.height : 0;

    if (cyl && (h <= 0 || h > kCoordLimit)) {
        out.push_back({ViolationKind::CoordinateOutOfRange, -1, -1, "cylinder height out of range"});
        return out;
    }

    // Vertices: range, canonical position, distinctness.
    for (auto& v : d.vertices) {
        if (std::llabs(v.pos.x) > kCoordLimit || std::llabs(v.pos.y) > kCoordLimit)
            out.push_back({ViolationKind::CoordinateOutOfRange, v.id, -1, "vertex"});
        if (cyl && (v.pos.y < 0 || v.pos.y >= h))
            out.push_back({ViolationKind::CoordinateOutOfRange, v.id, -1, "vertex y not canonical"});
    }
    for (size_t i = 0; i < d.vertices.size(); ++i)
        for (size_t j = i + 1; j < d.vertices.size(); ++j) {
            if (d.vertices[i].id == d.vertices[j].id)
                out.push_back({ViolationKind::DuplicateVertexPoint, d.vertices[i].id, d.vertices[j].id, "duplicate id"});
            if (d.vertices[i].pos == d.vertices[j].pos)
                out.push_back({ViolationKind::DuplicateVertexPoint, d.vertices[i].id, d.vertices[j].id, ""});
        }

    // Edge structural checks.
    std::vector<std::vector<Pt>> lifts(d.edges.size());
    std::vector<bool> usable(d.edges.size(), true);
    for (size_t i = 0; i < d.edges.size(); ++i) {
        const Edge& e = d.edges[i];
        if (!d.vertex_by_id(e.v1) || !d.vertex_by_id(e.v2)) {
            out.push_back({ViolationKind::UnknownEndpoint, e.id, -1, ""});
            usable[i] = false;
            continue;
        }
        if (e.v1 == e.v2) {
            out.push_back({ViolationKind::SelfLoop, e.id, -1, ""});
            usable[i] = false;
            continue;
        }
        if (!e.wraps.empty() && (int)e.wraps.size() != e.segment_count()) {
            out.push_back({ViolationKind::BadWindingData, e.id, -1, "wraps size mismatch"});
            usable[i] = false;
            continue;
        }
        if (!cyl) {
            for (int w : e.wraps)
                if (w != 0) {
                    out.push_back({ViolationKind::BadWindingData, e.id, -1, "wraps on plane"});
                    usable[i] = false;
                }
        }
        if (!usable[i]) continue;
        for (auto& p : e.interior) {
            if (std::llabs(p.x) > kCoordLimit || std::llabs(p.y) > kCoordLimit)
                out.push_back({ViolationKind::CoordinateOutOfRange, e.id, -1, "interior point"});
            if (cyl && (p.y < 0 || p.y >= h))
                out.push_back({ViolationKind::CoordinateOutOfRange, e.id, -1, "interior y not canonical"});
        }
        auto poly = d.lifted_polyline(e);
        for (auto& p : poly)
            if (std::llabs(p.y) > kCoordLimit) {
                out.push_back({ViolationKind::CoordinateOutOfRange, e.id, -1, "lifted point"});
                usable[i] = false;
            }
        if (!usable[i]) continue;
        for (size_t s = 0; s + 1 < poly.size(); ++s) {
            if (poly[s] == poly[s + 1]) {
                out.push_back({ViolationKind::ZeroLengthSegment, e.id, (int)s, ""});
                usable[i] = false;
            }
            if (cyl && std::llabs(poly[s + 1].y - poly[s].y) >= h) {
                out.push_back({ViolationKind::SegmentTooTall, e.id, (int)s, ""});
                usable[i] = false;
            }
        }
        if (!usable[i]) continue;
        lifts[i] = std::move(poly);
    }

    for (size_t i = 0; i < d.edges.size(); ++i)
        for (size_t j = i + 1; j < d.edges.size(); ++j) {
            if (d.edges[i].id == d.edges[j].id)
                out.push_back({ViolationKind::DuplicateEdgePair, d.edges[i].id, d.edges[j].id, "duplicate id"});
            else if (usable[i] && usable[j] &&
                     ((d.edges[i].v1 == d.edges[j].v1 && d.edges[i].v2 == d.edges[j].v2) ||
                      (d.edges[i].v1 == d.edges[j].v2 && d.edges[i].v2 == d.edges[j].v1)))
                out.push_back({ViolationKind::DuplicateEdgePair, d.edges[i].id, d.edges[j].id, ""});
        }
    if (!out.empty()) {
        // Structural problems can make the geometric checks below meaningless;
        // still run them for usable edges so callers see everything at once.
    }

    auto offsets_for = [&](const LiftedSeg& sa, const LiftedSeg& sb) {
        std::vector<i64> ms;
        if (!cyl) { ms.push_back(0); return ms; }
        ms = {-h, 0, h};
        return ms;
    };

    // Vertex-on-edge.
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (!usable[i]) continue;
        const Edge& e = d.edges[i];
        for (auto& v : d.vertices) {
            bool endpoint = (v.id == e.v1 || v.id == e.v2);
            for (size_t s = 0; s + 1 < lifts[i].size(); ++s) {
                LiftedSeg seg = reduce_mod({lifts[i][s], lifts[i][s + 1]}, h);
                for (i64 m : offsets_for(seg, seg)) {
                    Pt vp{v.pos.x, v.pos.y + m};
                    if (!point_on_segment(vp, seg.a, seg.b)) continue;
                    if (endpoint) {
                        // Touching its own endpoint is fine only exactly at the ends
                        // of the whole curve; interior contact is a self-intersection.
                        bool at_first = (s == 0 && v.id == e.v1 && vp == seg.a);
                        bool at_last = (s + 2 == lifts[i].size() && v.id == e.v2 && vp == seg.b);
                        if (!at_first && !at_last)
                            out.push_back({ViolationKind::SelfIntersection, e.id, v.id, "curve through own endpoint"});
                    } else {
                        out.push_back({ViolationKind::VertexOnEdge, e.id, v.id, ""});
                    }
                }
            }
        }
    }

    // Self-intersection: segment pairs within one edge.
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (!usable[i]) continue;
        const auto& poly = lifts[i];
        int n = (int)poly.size() - 1;
        for (int s = 0; s < n; ++s)
            for (int t = s + 1; t < n; ++t) {
                LiftedSeg A{poly[s], poly[s + 1]};
                LiftedSeg B{poly[t], poly[t + 1]};
                // Compare in reduced coordinates at offsets {-h, 0, h}.
                LiftedSeg ra = reduce_mod(A, h), rb = reduce_mod(B, h);
                i64 shift_a = ra.a.y - A.a.y, shift_b = rb.a.y - B.a.y;
                for (i64 m : offsets_for(ra, rb)) {
                    LiftedSeg bb{Pt{rb.a.x, rb.a.y + m}, Pt{rb.b.x, rb.b.y + m}};
                    SegHit hit = intersect_segments(ra.a, ra.b, bb.a, bb.b);
                    if (hit.kind == SegContact::None) continue;
                    if (t == s + 1) {
                        // Consecutive segments legitimately share one bend point.
                        bool same_lift = (shift_a == shift_b + m);
                        if (same_lift && hit.kind == SegContact::Touch &&
                            hit.point == to_ratpt(Pt{poly[s + 1].x, poly[s + 1].y + shift_a}))
                            continue;
                    }
                    out.push_back({ViolationKind::SelfIntersection, d.edges[i].id, -1,
                                   "segments " + std::to_string(s) + "," + std::to_string(t)});
                }
            }
    }

    // Pairwise edge contacts.
    std::vector<RatPt> proper_points;
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (!usable[i]) continue;
        for (size_t j = i + 1; j < d.edges.size(); ++j) {
            if (!usable[j]) continue;
            const Edge& ea = d.edges[i];
            const Edge& eb = d.edges[j];
            const auto& pa = lifts[i];
            const auto& pb = lifts[j];
            for (int s = 0; s + 1 < (int)pa.size(); ++s)
                for (int t = 0; t + 1 < (int)pb.size(); ++t) {
                    LiftedSeg ra = reduce_mod({pa[s], pa[s + 1]}, h);
                    LiftedSeg rb = reduce_mod({pb[t], pb[t + 1]}, h);
                    i64 shift_a = ra.a.y - pa[s].y;
                    i64 shift_b = rb.a.y - pb[t].y;
                    for (i64 m : offsets_for(ra, rb)) {
                        LiftedSeg bb{Pt{rb.a.x, rb.a.y + m}, Pt{rb.b.x, rb.b.y + m}};
                        SegHit hit = intersect_segments(ra.a, ra.b, bb.a, bb.b);
                        if (hit.kind == SegContact::None) continue;
                        if (hit.kind == SegContact::Overlap) {
                            out.push_back({ViolationKind::OverlapIntersection, ea.id, eb.id, ""});
                            continue;
                        }
                        RatPt canon = canonicalize(hit.point, d.surface);
                        if (hit.kind == SegContact::Proper) {
                            proper_points.push_back(canon);
                            continue;
                        }
                        // Touch: allowed only at a shared endpoint vertex.
                        if (share_vertex_point(d, ea, eb, canon)) continue;
                        RatPt in_a{hit.point.x, hit.point.y - Rat(shift_a)};
                        RatPt in_b{hit.point.x, hit.point.y - Rat(shift_b + m)};
                        if (is_bend_point(pa, in_a, s) || is_bend_point(pb, in_b, t))
                            out.push_back({ViolationKind::CrossingAtBend, ea.id, eb.id, ""});
                        else
                            out.push_back({ViolationKind::TouchIntersection, ea.id, eb.id, ""});
                    }
                }
        }
    }

    std::sort(proper_points.begin(), proper_points.end());
    for (size_t i = 0; i + 1 < proper_points.size(); ++i)
        if (proper_points[i] == proper_points[i + 1])
            out.push_back({ViolationKind::TriplePoint, -1, -1, ""});

    return out;
}

std::vector<CrossingEvent> all_crossings(const Drawing& d) {
    auto viols = validate_drawing(d);
    if (!viols.empty())
        throw std::invalid_argument("all_crossings: drawing fails validation (" +
                                    std::string(violation_name(viols.front().kind)) + ")");
    std::vector<CrossingEvent> out;
    const i64 h = d.surface.is_cylinder() ? d.surface.height : 0;
    std::vector<std::vector<Pt>> lifts;
    lifts.reserve(d.edges.size());
    for (auto& e : d.edges) lifts.push_back(d.lifted_polyline(e));

    for (size_t i = 0; i < d.edges.size(); ++i)
        for (size_t j = i + 1; j < d.edges.size(); ++j) {
            const auto& pa = lifts[i];
            const auto& pb = lifts[j];
            for (int s = 0; s + 1 < (int)pa.size(); ++s)
                for (int t = 0; t + 1 < (int)pb.size(); ++t) {
                    Pt a0 = pa[s], a1 = pa[s + 1], b0 = pb[t], b1 = pb[t + 1];
                    // reduce both
                    i64 ka = 0, kb = 0;
                    if (h > 0) {
                        i64 lo = std::min(a0.y, a1.y);
                        ka = lo >= 0 ? lo / h : -((-lo + h - 1) / h);
                        lo = std::min(b0.y, b1.y);
                        kb = lo >= 0 ? lo / h : -((-lo + h - 1) / h);
                    }
                    Pt ra0{a0.x, a0.y - ka * h}, ra1{a1.x, a1.y - ka * h};
                    Pt rb0{b0.x, b0.y - kb * h}, rb1{b1.x, b1.y - kb * h};
                    std::vector<i64> ms = h > 0 ? std::vector<i64>{-h, 0, h} : std::vector<i64>{0};
                    for (i64 m : ms) {
                        SegHit hit = intersect_segments(ra0, ra1, Pt{rb0.x, rb0.y + m}, Pt{rb1.x, rb1.y + m});
                        if (hit.kind != SegContact::Proper) continue;
                        CrossingEvent ev;
                        ev.edge_a = d.edges[i].id;
                        ev.edge_b = d.edges[j].id;
                        ev.seg_a = s;
                        ev.seg_b = t;
                        ev.ta = hit.ta;
                        ev.tb = hit.tb;
                        ev.point = canonicalize(hit.point, d.surface);
                        out.push_back(ev);
                    }
                }
        }
    return out;
}

int crossing_count(const Drawing& d, int e1, int e2) {
    const Edge* ea = d.edge_by_id(e1);
    const Edge* eb = d.edge_by_id(e2);
    if (!ea || !eb) throw std::invalid_argument("crossing_count: unknown edge id");
    if (e1 == e2) return 0;
    const i64 h = d.surface.is_cylinder() ? d.surface.height : 0;
    auto pa = d.lifted_polyline(*ea);
    auto pb = d.lifted_polyline(*eb);
    int count = 0;
    for (int s = 0; s + 1 < (int)pa.size(); ++s)
        for (int t = 0; t + 1 < (int)pb.size(); ++t) {
            Pt a0 = pa[s], a1 = pa[s + 1], b0 = pb[t], b1 = pb[t + 1];
            i64 ka = 0, kb = 0;
            if (h > 0) {
                i64 lo = std::min(a0.y, a1.y);
                ka = lo >= 0 ? lo / h : -((-lo + h - 1) / h);
                lo = std::min(b0.y, b1.y);
                kb = lo >= 0 ? lo / h : -((-lo + h - 1) / h);
            }
            Pt ra0{a0.x, a0.y - ka * h}, ra1{a1.x, a1.y - ka * h};
            Pt rb0{b0.x, b0.y - kb * h}, rb1{b1.x, b1.y - kb * h};
            std::vector<i64> ms = h > 0 ? std::vector<i64>{-h, 0, h} : std::vector<i64>{0};
            for (i64 m : ms) {
                SegHit hit = intersect_segments(ra0, ra1, Pt{rb0.x, rb0.y + m}, Pt{rb1.x, rb1.y + m});
                if (hit.kind == SegContact::Proper) ++count;
            }
        }
    return count;
}

SimplicityReport simplicity_report(const Drawing& d, int k) {
    if (k < 1) throw std::invalid_argument("simplicity_report: k must be positive");
    auto viols = validate_drawing(d);
    if (!viols.empty())
        throw std::invalid_argument("simplicity_report: drawing fails validation (" +
                                    std::string(violation_name(viols.front().kind)) + ")");
    auto events = all_crossings(d);
    std::map<std::pair<int, int>, PairCount> acc;
    for (auto& ev : events) {
        auto key = std::minmax(ev.edge_a, ev.edge_b);
        auto& pc = acc[{key.first, key.second}];
        pc.edge_a = key.first;
        pc.edge_b = key.second;
        pc.crossings++;
    }
    for (size_t i = 0; i < d.edges.size(); ++i)
        for (size_t j = i + 1; j < d.edges.size(); ++j) {
            const Edge& a = d.edges[i];
            const Edge& b = d.edges[j];
            bool share = (a.v1 == b.v1 || a.v1 == b.v2 || a.v2 == b.v1 || a.v2 == b.v2);
            if (!share) continue;
            auto key = std::minmax(a.id, b.id);
            auto& pc = acc[{key.first, key.second}];
            pc.edge_a = key.first;
            pc.edge_b = key.second;
            pc.share_endpoint = true;
        }
    SimplicityReport rep;
    rep.k = k;
    rep.pass = true;
    for (auto& [key, pc] : acc) {
        rep.pairs.push_back(pc);
        if (pc.common_points() > k) {
            rep.pass = false;
            rep.violating_pairs.push_back(pc);
        }
    }
    return rep;
}

} // namespace topocross
