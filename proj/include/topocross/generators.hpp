#ifndef TOPOCROSS_GENERATORS_HPP
#define TOPOCROSS_GENERATORS_HPP

#include "topocross/drawing.hpp"

#include <set>
#include <string>

namespace topocross {

// The paper's constructions, as concrete validated drawings. Coordinates are
// implementation choices; the crossing structure is what the claim suite pins.

// Cylinder drawing of the red/blue grid graph: 6k vertices X_i^{L/R}
// (X in {A,B,C}), three blue left paths and three red right paths.
Drawing gen_grb(int k);

// gen_grb plus the k green triangles A_i^L B_i^L C_i^L.
Drawing gen_g(int k);

// The (3,2) grid-block: three horizontal red edges, three wrapping black
// edges crossing them in rotating order twice around the cylinder. Faces are
// labeled "(k,i)" with columns 0..5 and rows mod 3.
struct GridBlock {
    Drawing drawing;
    std::set<int> red_edges;
    std::set<int> black_edges;
};
GridBlock gen_gridblock();

enum class BlockColor { Black, Red };
// One block: three edges pairwise crossing exactly twice.
Drawing gen_block(BlockColor color);

// Black, red, black blocks composed on the cylinder; faces labeled
// L_i / LM_i / RM_i / R_i.
Drawing gen_3block();

// k alternating black/red blocks plus l1 (left) and l2 (right) isolated
// vertices; 2-simple.
Drawing gen_twosimple(int k, int l1, int l2);

// Local saturation gadgets. Each returns the drawing plus the distinguished
// vertex ids.
struct LocalGadget {
    Drawing drawing;
    std::vector<int> centers; // distinguished vertex per copy
};
LocalGadget gen_local4(int n);
LocalGadget gen_local5(int copies);
LocalGadget gen_local12(int copies);

// Generator dispatch used by the CLI.
struct GenRequest {
    std::string construction; // grb|g|gridblock|blackblock|redblock|block3|twosimple|local4|local5|local12
    int layers = 5;
    int left = 0, right = 0;
    int copies = 1;
    int n = 6;
};
Drawing generate(const GenRequest& req);

} // namespace topocross

#endif
