#ifndef TOPOCROSS_GRIDWALK_HPP
#define TOPOCROSS_GRIDWALK_HPP

#include "topocross/oracle.hpp"

#include <set>

namespace topocross {

// Step kinds of a dual walk over the grid-block, in the face-label grid:
// columns 0..5 (0 = left region, 5 = right region), rows mod 3.
//   Right: crosses a black edge, (k,i) -> (k+1,i)
//   Up:    crosses a red edge,   (k,i) -> (k+1,i+1)
//   Left/Down: the reverse steps
//   Stay:  a step inside the boundary region (column 0 or 5)
enum class GridStep { Right, Up, Left, Down, Stay };

struct GridWalkInfo {
    std::vector<GridStep> kinds; // one per walk step
};

// Classifies a walk over a grid-block map produced by gen_gridblock.
// Throws std::invalid_argument if the walk is not confined to the grid-block
// or does not run left region -> right region.
GridWalkInfo classify_gridblock_walk(const PlanarMap& m, const std::set<int>& red_edges,
                                     const WitnessWalk& w);

// Lemma-style two-stage normalization: annihilate or push back every backward
// step, then commute all black steps before all red steps. The result crosses
// every edge at most as often as the input and has the step sequence
// [boundary moves] [Right*] [Up*] [boundary moves].
WitnessWalk normalize_gridblock_walk(const PlanarMap& m, const std::set<int>& red_edges,
                                     const WitnessWalk& w);

} // namespace topocross

#endif
