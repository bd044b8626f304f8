#ifndef TOPOCROSS_DRAWING_HPP
#define TOPOCROSS_DRAWING_HPP

#include "topocross/geom.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace topocross {

enum class SurfaceKind { Plane, Cylinder };

// Plane, or a cylinder whose y coordinate is periodic with circumference
// `height`. The x axis runs along the cylinder.
struct Surface {
    SurfaceKind kind = SurfaceKind::Plane;
    i64 height = 0;

    static Surface plane() { return Surface{SurfaceKind::Plane, 0}; }
    static Surface cylinder(i64 h) { return Surface{SurfaceKind::Cylinder, h}; }
    bool is_cylinder() const { return kind == SurfaceKind::Cylinder; }
    bool operator==(const Surface&) const = default;
};

struct Vertex {
    int id = -1;
    Pt pos;
    std::string label;
};

// An edge curve is the polyline vertex(v1) -> interior[0] -> ... -> vertex(v2).
// On a cylinder, points are stored canonically (0 <= y < H) and wraps[s] gives
// the winding increment of segment s: the lift of segment s rises by
// wraps[s] * H in addition to the canonical y difference. wraps is empty on
// the plane and may be empty on cylinders (meaning all zero).
struct Edge {
    int id = -1;
    int v1 = -1, v2 = -1;
    std::vector<Pt> interior;
    std::vector<int> wraps;
    int segment_count() const { return (int)interior.size() + 1; }
};

// A labeled point used to attach names to faces of the planarization. The
// anchor must lie strictly inside the intended face.
struct FaceAnchor {
    Pt pos;
    std::string label;
};

struct Drawing {
    Surface surface;
    int k = 1; // intended simplicity level
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<FaceAnchor> face_anchors;

    const Vertex* vertex_by_id(int id) const;
    const Vertex* vertex_by_label(const std::string& label) const;
    const Edge* edge_by_id(int id) const;
    std::optional<int> edge_between(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_between(u, v).has_value(); }

    // Lifted polyline of an edge in the universal cover: first point is
    // vertex(v1)'s position; y accumulates wraps * H.
    std::vector<Pt> lifted_polyline(const Edge& e) const;
};

enum class ViolationKind {
    DuplicateVertexPoint,
    VertexOnEdge,
    SelfIntersection,
    OverlapIntersection,
    TouchIntersection,
    CrossingAtBend,
    TriplePoint,
    DuplicateEdgePair,
    SelfLoop,
    BadWindingData,
    SegmentTooTall,
    CoordinateOutOfRange,
    ZeroLengthSegment,
    UnknownEndpoint,
};

struct Violation {
    ViolationKind kind;
    // Offending ids; unused entries are -1.
    int a = -1, b = -1;
    std::string detail;
};

const char* violation_name(ViolationKind k);

// Checks all Drawing invariants. An empty result means the drawing is valid.
std::vector<Violation> validate_drawing(const Drawing& d);

// One proper crossing between two edge curves, with exact positions on both.
struct CrossingEvent {
    int edge_a = -1, edge_b = -1;      // edge ids, edge_a < edge_b
    int seg_a = 0, seg_b = 0;          // segment index along each polyline
    Rat ta, tb;                        // parameter within each segment, in (0,1)
    RatPt point;                       // canonical surface point (0 <= y < H on cylinders)
};

// All proper crossings of a validated drawing, exact. Throws std::invalid_argument
// if the drawing fails validation.
std::vector<CrossingEvent> all_crossings(const Drawing& d);

// Crossings between one pair of edges (either order). Does not validate.
int crossing_count(const Drawing& d, int e1, int e2);

struct PairCount {
    int edge_a = -1, edge_b = -1;
    int crossings = 0;
    bool share_endpoint = false;
    int common_points() const { return crossings + (share_endpoint ? 1 : 0); }
};

struct SimplicityReport {
    int k = 1;
    bool pass = false;
    std::vector<PairCount> pairs;              // all unordered pairs with >0 common points
    std::vector<PairCount> violating_pairs;    // pairs with common_points() > k
};

SimplicityReport simplicity_report(const Drawing& d, int k);

} // namespace topocross

#endif
