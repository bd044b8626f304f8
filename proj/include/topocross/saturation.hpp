#ifndef TOPOCROSS_SATURATION_HPP
#define TOPOCROSS_SATURATION_HPP

#include "topocross/oracle.hpp"

#include <string>
#include <vector>

namespace topocross {

// Insert a certified witness edge combinatorially: the crossed arcs split at
// new crossing nodes, rotations are spliced, and faces are rebuilt. Throws on
// an uncertified witness or a budget violation at the map's level k.
// Returns the new edge id.
int insert_edge(PlanarMap& m, const WitnessWalk& w);

enum class SaturationStatus {
    Saturated,        // every non-adjacent pair is NotInsertable
    WalkOnlyResidue,  // no insertable pair, but some pairs returned WalkOnly
    Insertable,       // a certified-insertable pair exists
};

struct SaturationCheck {
    SaturationStatus status = SaturationStatus::Saturated;
    std::pair<int, int> first_insertable{-1, -1};
    std::vector<std::pair<int, int>> walk_only;
    bool is_saturated() const { return status != SaturationStatus::Insertable; }
};

SaturationCheck is_saturated(const PlanarMap& m, int k);

enum class PairPolicy { Lexicographic, MaxDegreeLast, SeededRandom };

struct InsertionLogEntry {
    int u = -1, v = -1;
    int crossings = 0;
};

struct SaturationResult {
    PlanarMap map;
    int k = 1;
    int initial_edges = 0;
    int final_edges = 0;
    std::vector<InsertionLogEntry> log;
    std::vector<std::pair<int, int>> walk_only_residue;
    std::map<int, int> degrees; // vertex id -> final degree

    std::string report() const;
};

SaturationResult saturate(const Drawing& d, int k, PairPolicy policy = PairPolicy::Lexicographic,
                          unsigned seed = 0);
SaturationResult saturate_map(PlanarMap m, int k, PairPolicy policy = PairPolicy::Lexicographic,
                              unsigned seed = 0);

// Add `count` clones of vertex v: each clone is joined to every neighbor of v
// along a corridor parallel to v's own edge (falling back to an oracle witness
// when the corridor does not certify). Returns the clone vertex ids.
std::vector<int> clone_vertex(PlanarMap& m, int v, int count);

} // namespace topocross

#endif
