#ifndef TOPOCROSS_ORACLE_HPP
#define TOPOCROSS_ORACLE_HPP

#include "topocross/planar_map.hpp"

#include <map>
#include <string>
#include <vector>

namespace topocross {

// Per-edge crossing capacities for one insertion query. Edges incident to a
// query endpoint get k-1 (the shared endpoint already counts as one common
// point), every other edge gets k.
struct Budget {
    std::map<int, int> cap; // edge id -> capacity
    int capacity(int edge) const {
        auto it = cap.find(edge);
        return it == cap.end() ? 0 : it->second;
    }
};

Budget budgets_for_map(const PlanarMap& m, int u, int v, int k);
Budget budgets_for(const Drawing& d, int u, int v, int k);
// Uniform capacity on every edge (face-to-face searches).
Budget uniform_budget(const PlanarMap& m, int cap);

struct WalkStep {
    int from_face = -1;
    int arc = -1;
    int to_face = -1;
};

struct WitnessWalk {
    int u = -1, v = -1; // vertex ids; -1 for face-to-face queries
    std::vector<WalkStep> steps;
    int start_face = -1; // equals steps.front().from_face when steps exist

    int end_face() const { return steps.empty() ? start_face : steps.back().to_face; }
    std::map<int, int> per_edge_counts(const PlanarMap& m) const;
    std::string serialize() const;
};

enum class CertifyMode { DistinctFaces, NestedPasses };

struct CertifyResult {
    bool accepted = false;
    CertifyMode mode = CertifyMode::DistinctFaces;
    std::string reason; // reject reason when !accepted
};

// Sufficient test that a budget-respecting dual walk is realizable as a
// non-self-intersecting curve. Accept is sound; reject is not a proof.
CertifyResult certify_simple(const WitnessWalk& w, const PlanarMap& m);

enum class VerdictKind { NotInsertable, Insertable, WalkOnly };

struct Verdict {
    VerdictKind kind = VerdictKind::NotInsertable;
    WitnessWalk witness;      // valid for Insertable and WalkOnly
    CertifyResult certificate; // valid for Insertable
    bool insertable_or_walk() const { return kind != VerdictKind::NotInsertable; }
};

struct SearchStats {
    long long labels = 0;
    long long expanded = 0;
};

// Exhaustive multi-budget reachability over the dual graph with Pareto
// dominance pruning. NotInsertable is a proof that no curve within budget
// exists; Insertable carries a certified-simple witness.
Verdict search_insertion(const PlanarMap& m, int u, int v, const Budget& b,
                         SearchStats* stats = nullptr);

// Same search between two faces with a uniform capacity; no vertex fans.
struct FacePathResult {
    bool reachable = false;
    WitnessWalk walk;
};
FacePathResult exists_bounded_face_path(const PlanarMap& m, int f_from, int f_to, int cap);

// Minimum number of arc crossings over all dual walks (plain BFS).
int min_crossing_face_path(const PlanarMap& m, int f_from, int f_to);

struct NeighborReport {
    int vertex = -1;
    std::map<int, Verdict> verdicts; // candidate vertex id -> verdict
    std::vector<int> insertable;     // certified
    std::vector<int> walk_only;
    int potential_count() const { return (int)(insertable.size() + walk_only.size()); }
};

// All non-adjacent vertices u with a non-NotInsertable verdict for edge (v,u).
NeighborReport potential_neighbors_map(const PlanarMap& m, int v, int k);
NeighborReport potential_neighbors(const Drawing& d, int v, int k);

} // namespace topocross

#endif
