#ifndef TOPOCROSS_PLANAR_MAP_HPP
#define TOPOCROSS_PLANAR_MAP_HPP

#include "topocross/drawing.hpp"

#include <map>
#include <string>
#include <vector>

namespace topocross {

enum class NodeKind { Vertex, Crossing };

// One maximal crossing-free piece of an edge curve. `pts` is the polyline in
// the parent edge's lift frame; `bases` are the underlying integer segments
// (one per polyline piece) used for exact direction and ray queries. Arcs
// created by combinatorial insertion carry no geometry (synthetic = true).
struct Arc {
    int parent_edge = -1;
    int pos = 0;            // 0-based position along the parent edge
    int from = -1, to = -1; // node ids; `from` is earlier along the parent
    int h_fwd = -1, h_rev = -1;
    bool synthetic = false;
    std::vector<RatPt> pts;
    std::vector<Pt> base_a, base_b; // underlying integer segment per piece
};

struct MapNode {
    NodeKind kind = NodeKind::Vertex;
    RatPt point;              // canonical surface point (geometric nodes only)
    bool has_point = false;
    int vertex_id = -1;       // original/clone vertex id when kind == Vertex
    std::string label;
    int edge_a = -1, edge_b = -1;     // crossing parents
    int index_on_a = -1, index_on_b = -1;
    std::vector<int> rot;     // outgoing half-edges in CCW order
    int containing_face = -1; // for isolated vertices
};

struct HalfEdge {
    int arc = -1;
    bool forward = true;
    int src = -1, dst = -1;
    int twin = -1, next = -1, prev = -1;
    int face = -1;
};

struct MapFace {
    std::vector<int> cycles;    // one representative half-edge per boundary cycle
    std::vector<std::string> labels;
    std::vector<int> punctures; // isolated vertex nodes inside this face
    bool is_disk() const { return cycles.size() == 1; }
};

struct EdgeRec {
    int id = -1;
    int v1 = -1, v2 = -1;     // vertex ids
    std::vector<int> arcs;    // in order from v1 to v2
    bool inserted = false;    // true for combinatorially inserted edges
};

struct DualLink {
    int arc = -1;
    int face_a = -1, face_b = -1; // faces left of forward / reverse half-edge
    int parent_edge = -1;
};

struct DualGraph {
    int face_count = 0;
    std::vector<DualLink> links;
};

struct PlanarMap {
    Surface surface;
    int k = 1;
    std::vector<MapNode> nodes;
    std::vector<Arc> arcs;
    std::vector<HalfEdge> hedges;
    std::vector<MapFace> faces;
    std::vector<EdgeRec> edges;              // index by position; EdgeRec.id is the edge id
    std::map<int, int> vertex_node;          // vertex id -> node id
    std::map<std::pair<int, int>, int> pair_crossings; // (min,max edge id) -> crossings
    std::map<std::string, int> face_labels;  // label -> face id
    int outer_face = -1;
    int inner_face = -1;
    int next_vertex_id = 0;                  // fresh ids for clones
    int next_edge_id = 0;

    const EdgeRec* edge_by_id(int id) const;
    EdgeRec* edge_by_id(int id);
    bool adjacent_vertices(int vid1, int vid2) const;
    int crossings_between(int e1, int e2) const;
    bool edges_share_endpoint(int e1, int e2) const;

    int node_of_vertex(int vid) const;
    // Faces incident to a vertex, in rotation order (isolated: containing face).
    std::vector<int> vertex_fan(int vid) const;

    // Derived next pointer: rotations are authoritative.
    int derived_next(int h) const;
    // Recompute next/prev, trace face cycles, and remap face identity using
    // the hedges' current face values as votes. Old faces whose boundary was
    // split keep their id on one fragment. Orbits made purely of hedges in
    // [attach_begin, attach_end) become extra boundary cycles of their voted
    // face instead of new faces (used for slit insertions).
    void rebuild_faces(int attach_begin = 0, int attach_end = 0);

    int node_count() const { return (int)nodes.size(); }
    int arc_count() const { return (int)arcs.size(); }
    int face_count() const { return (int)faces.size(); }

    // Common-point count between two edges (crossings + shared endpoint).
    int common_points(int e1, int e2) const;
    // Max over all edge pairs of common points; the map's effective simplicity.
    bool is_k_simple(int k) const;

    std::string debug_dump() const;
};

PlanarMap planarize(const Drawing& d);

std::vector<MapFace> faces_of(const PlanarMap& m);
DualGraph dual_of(const PlanarMap& m);
std::vector<int> vertex_fan(const PlanarMap& m, int vertex_id);
int face_label_lookup(const PlanarMap& m, const std::string& label);

} // namespace topocross

#endif
