#include "topocross/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace topocross {

namespace {

// Incremental drawing assembly: vertices by canonical position, edges given as
// lifted polylines (wraps derived from the lift).
struct Builder {
    Drawing d;
    int next_vid = 0;
    int next_eid = 0;

    Builder(Surface s, int k) {
        d.surface = s;
        d.k = k;
    }

    int vertex(Pt canonical, const std::string& label) {
        Vertex v;
        v.id = next_vid++;
        v.pos = canonical;
        v.label = label;
        d.vertices.push_back(v);
        return v.id;
    }

    i64 canon_y(i64 y) const {
        i64 h = d.surface.is_cylinder() ? d.surface.height : 0;
        if (h == 0) return y;
        i64 m = y >= 0 ? y / h : -((-y + h - 1) / h);
        return y - m * h;
    }

    // `lift` runs from over v1's position to over v2's position; any uniform
    // vertical multiple of H is normalized away.
    int edge(int v1, int v2, std::vector<Pt> lift) {
        const i64 h = d.surface.is_cylinder() ? d.surface.height : 0;
        Edge e;
        e.id = next_eid++;
        e.v1 = v1;
        e.v2 = v2;
        const Vertex* a = d.vertex_by_id(v1);
        const Vertex* b = d.vertex_by_id(v2);
        if (!a || !b) throw std::logic_error("builder: unknown endpoint");
        i64 start_shift = lift.front().y - canon_y(lift.front().y);
        if (start_shift != 0)
            for (auto& p : lift) p.y -= start_shift;
        if (!(lift.front() == a->pos)) throw std::logic_error("builder: lift must start at v1");
        if (lift.back().x != b->pos.x || canon_y(lift.back().y) != b->pos.y)
            throw std::logic_error("builder: lift must end over v2");
        std::vector<i64> ks;
        for (auto& p : lift) ks.push_back(h == 0 ? 0 : (p.y - canon_y(p.y)) / h);
        for (size_t i = 1; i + 1 < lift.size(); ++i)
            e.interior.push_back(Pt{lift[i].x, canon_y(lift[i].y)});
        bool any_wrap = false;
        for (size_t s = 0; s + 1 < lift.size(); ++s) {
            int w = (int)(ks[s + 1] - ks[s]);
            e.wraps.push_back(w);
            if (w != 0) any_wrap = true;
        }
        if (!any_wrap) e.wraps.clear();
        d.edges.push_back(e);
        return e.id;
    }

    int segment(int v1, int v2) {
        const Vertex* a = d.vertex_by_id(v1);
        const Vertex* b = d.vertex_by_id(v2);
        return edge(v1, v2, {a->pos, b->pos});
    }

    void anchor(Pt p, const std::string& label) { d.face_anchors.push_back({p, label}); }
};

std::vector<Pt> shifted(std::vector<Pt> pts, Pt off) {
    for (auto& p : pts) {
        p.x += off.x;
        p.y += off.y;
    }
    return pts;
}

} // namespace

// ---------------------------------------------------------------------------
// Grid-block: three red rails, three black double-wrap diagonals
// ---------------------------------------------------------------------------

GridBlock gen_gridblock() {
    const i64 H = 96;
    Builder b(Surface::cylinder(H), 2);
    GridBlock gb;

    // Reds: horizontal rails at y = 16, 48, 80 spanning x in [1, 46].
    for (int i = 0; i < 3; ++i) {
        i64 y = 16 + 32 * i;
        int vl = b.vertex({1, y}, "r" + std::to_string(i + 1) + "L");
        int vr = b.vertex({46, y}, "r" + std::to_string(i + 1) + "R");
        gb.red_edges.insert(b.segment(vl, vr));
    }
    // Blacks: slope-4 climbs rising 2H over x in [0, 48], bases 8, 40, 72.
    for (int i = 0; i < 3; ++i) {
        i64 base = 8 + 32 * i;
        int vl = b.vertex({0, base}, "b" + std::to_string(i + 1) + "L");
        int vr = b.vertex({48, base}, "b" + std::to_string(i + 1) + "R");
        std::vector<Pt> lift;
        for (int s = 0; s <= 4; ++s) lift.push_back(Pt{12 * s, base + 48 * s});
        gb.black_edges.insert(b.edge(vl, vr, lift));
    }
    // Cell labels (k,i), columns 1..4 between the black winds, rows between
    // the rails; the left/right boundary regions take the 0 and 5 columns.
    for (int col = 1; col <= 4; ++col)
        for (int row = 0; row < 3; ++row)
            b.anchor({8 * col + 2, 32 * row},
                     "(" + std::to_string(col) + "," + std::to_string(row) + ")");
    for (int row = 0; row < 3; ++row) {
        b.anchor({-8, 32 * row}, "(0," + std::to_string(row) + ")");
        b.anchor({56, 32 * row}, "(5," + std::to_string(row) + ")");
    }
    gb.drawing = std::move(b.d);
    return gb;
}

// ---------------------------------------------------------------------------
// Blocks and the 2-simple chain
// ---------------------------------------------------------------------------

namespace {

constexpr i64 kBlockH = 192;
constexpr i64 kGroupSpan = 336; // one [black, red, mirrored black] group
constexpr i64 kGroupStride = 400;

struct BlockIds {
    std::array<int, 3> left{}, right{}, edges{};
};

// Black block edge lifts relative to x-offset 0: a steep hook from the left
// vertex walls off most of the cylinder circle, then a slope-4 climb winding
// a bit over two full turns, all three climbs ending at x = 120. The hooks of
// the later edges double-cross the earlier edges' climbs, giving pairwise
// exactly two crossings.
std::vector<std::vector<Pt>> black_block_lifts() {
    std::vector<std::vector<Pt>> lifts(3);
    lifts[0] = {{0, 152}, {1, 268}, {2, 384}, {4, 384}};
    lifts[1] = {{8, 12}, {9, 112}, {10, 212}, {12, 256}};
    lifts[2] = {{16, 44}, {17, 182}, {18, 320}, {20, 320}};
    for (auto& lift : lifts) {
        i64 x = lift.back().x;
        i64 dx = (120 - x) / 4;
        for (int s = 1; s <= 4; ++s) {
            i64 step = (s < 4) ? dx : (120 - x - 3 * dx);
            lift.push_back({lift.back().x + step, lift.back().y + 4 * step});
        }
    }
    return lifts;
}

BlockIds emit_black_block(Builder& b, i64 X, const std::string& tag) {
    BlockIds ids;
    auto lifts = black_block_lifts();
    for (int i = 0; i < 3; ++i) {
        auto lift = shifted(lifts[i], {X, 0});
        ids.left[i] = b.vertex({lift.front().x, b.canon_y(lift.front().y)},
                               tag + "b" + std::to_string(i) + "L");
        ids.right[i] = b.vertex({lift.back().x, b.canon_y(lift.back().y)},
                                tag + "b" + std::to_string(i) + "R");
        ids.edges[i] = b.edge(ids.left[i], ids.right[i], lift);
    }
    return ids;
}

// Mirror image about x = X + kGroupSpan/2: climbs descend from tips in the
// right-rail pockets, hooks wall the right entrance.
BlockIds emit_black_block_mirrored(Builder& b, i64 X, const std::string& tag) {
    BlockIds ids;
    auto lifts = black_block_lifts();
    for (int i = 0; i < 3; ++i) {
        std::vector<Pt> lift(lifts[i].rbegin(), lifts[i].rend());
        for (auto& p : lift) p.x = X + kGroupSpan - p.x;
        ids.left[i] = b.vertex({lift.front().x, b.canon_y(lift.front().y)},
                               tag + "b" + std::to_string(i) + "L");
        ids.right[i] = b.vertex({lift.back().x, b.canon_y(lift.back().y)},
                                tag + "b" + std::to_string(i) + "R");
        ids.edges[i] = b.edge(ids.left[i], ids.right[i], lift);
    }
    return ids;
}

// Red block: V-shaped edges between the two black blocks. Each red descends
// from its left tip (sitting in a black climb pocket) at slope -4, drops
// through a steep valley hook walling the middle, and rises at slope +4 into
// the mirrored block's territory. The 48-wide slope overlaps give exactly two
// crossings with every black edge; the valley hooks pair the reds.
BlockIds emit_red_block(Builder& b, i64 X, const std::string& tag) {
    BlockIds ids;
    const i64 tip[3] = {82, 116, 148};
    const i64 valley[3] = {168, 171, 174};
    for (int i = 0; i < 3; ++i) {
        i64 d = tip[i], v = valley[i];
        i64 B = d - 4 * (v - 72);
        std::vector<Pt> lift;
        lift.push_back({X + 72, d});
        for (int s = 1; s <= 3; ++s) {
            i64 xs = 72 + (v - 72) * s / 3;
            lift.push_back({X + xs, d - 4 * (xs - 72)});
        }
        lift.push_back({X + v + 1, B - 97});
        lift.push_back({X + v + 2, B - 194});
        i64 x0 = v + 2, y0 = B - 194;
        for (int s = 1; s <= 3; ++s) {
            i64 xs = x0 + (264 - x0) * s / 3;
            lift.push_back({X + xs, y0 + 4 * (xs - x0)});
        }
        ids.left[i] = b.vertex({X + 72, d}, tag + "r" + std::to_string(i) + "L");
        ids.right[i] = b.vertex({X + 264, b.canon_y(lift.back().y)},
                                tag + "r" + std::to_string(i) + "R");
        ids.edges[i] = b.edge(ids.left[i], ids.right[i], lift);
    }
    return ids;
}

Drawing chain_blocks(int k, int l1, int l2, bool with_labels) {
    Builder b(Surface::cylinder(kBlockH), 2);
    i64 xmax = 0;
    for (int i = 0; i < k; ++i) {
        i64 G = (i64)(i / 3) * kGroupStride;
        std::string tag;
        switch (i % 3) {
            case 0:
                tag = "B" + std::to_string(i) + "_";
                emit_black_block(b, G, tag);
                xmax = std::max(xmax, G + 124);
                break;
            case 1:
                tag = "R" + std::to_string(i) + "_";
                emit_red_block(b, G, tag);
                xmax = std::max(xmax, G + 264);
                break;
            default:
                tag = "B" + std::to_string(i) + "_";
                emit_black_block_mirrored(b, G, tag);
                xmax = std::max(xmax, G + kGroupSpan);
                break;
        }
    }
    for (int j = 0; j < l1; ++j) b.vertex({-60 - 10 * j, 96}, "extraL" + std::to_string(j));
    for (int j = 0; j < l2; ++j) b.vertex({xmax + 60 + 10 * j, 96}, "extraR" + std::to_string(j));

    if (with_labels && k >= 3) {
        const i64 lv[3] = {83, 117, 149};
        for (int i = 0; i < 3; ++i) b.anchor({71, lv[i]}, "L_" + std::to_string(i));
        const i64 lm[3] = {81, 113, 145};
        for (int i = 0; i < 3; ++i) b.anchor({121, lm[i]}, "LM_" + std::to_string(i));
        for (int i = 0; i < 3; ++i)
            b.anchor({kGroupSpan - 121, lm[i]}, "RM_" + std::to_string(i));
        const i64 rv[3] = {73, 83, 91};
        for (int i = 0; i < 3; ++i)
            b.anchor({kGroupSpan - 71, rv[i]}, "R_" + std::to_string(i));
    }
    return std::move(b.d);
}

} // namespace

Drawing gen_block(BlockColor color) {
    Builder b(Surface::cylinder(kBlockH), 2);
    emit_black_block(b, 0, "");
    if (color == BlockColor::Black) return std::move(b.d);
    // Red block standalone: x-mirror of the black block (wraps are along y,
    // so only x coordinates flip).
    Drawing d = std::move(b.d);
    for (auto& v : d.vertices) v.pos.x = 124 - v.pos.x;
    for (auto& e : d.edges)
        for (auto& p : e.interior) p.x = 124 - p.x;
    return d;
}

Drawing gen_3block() { return chain_blocks(3, 0, 0, /*with_labels=*/true); }

Drawing gen_twosimple(int k, int l1, int l2) {
    if (k < 1) throw std::invalid_argument("gen_twosimple: k must be >= 1");
    if (l1 < 0 || l1 > 3 || l2 < 0 || l2 > 3)
        throw std::invalid_argument("gen_twosimple: remainder groups must have 0..3 vertices");
    return chain_blocks(k, l1, l2, /*with_labels=*/k >= 3);
}

// ---------------------------------------------------------------------------
// G_RB and G
// ---------------------------------------------------------------------------

namespace {
constexpr i64 kGrbH = 96;
constexpr i64 kGrbW = 60;
} // namespace

Drawing gen_grb(int k) {
    if (k < 2) throw std::invalid_argument("gen_grb: k must be >= 2");
    Builder b(Surface::cylinder(kGrbH), 1);
    std::vector<std::array<int, 6>> layer(k + 1); // [AL,AR,BL,BR,CL,CR], 1-based
    const char* names[3] = {"A", "B", "C"};
    for (int i = 1; i <= k; ++i) {
        i64 x = (i64)(i - 1) * kGrbW;
        for (int c = 0; c < 3; ++c) {
            i64 y = 32 * c;
            layer[i][2 * c] = b.vertex({x, y}, std::string(names[c]) + std::to_string(i) + "L");
            layer[i][2 * c + 1] =
                b.vertex({x + 8, y + 8}, std::string(names[c]) + std::to_string(i) + "R");
        }
    }
    for (int i = 1; i < k; ++i) {
        i64 x0 = (i64)(i - 1) * kGrbW;
        for (int c = 0; c < 3; ++c) {
            i64 y = 32 * c;
            // Blue: winds +1 with a fast rise before the red rails begin.
            b.edge(layer[i][2 * c], layer[i + 1][2 * c],
                   {{x0, y}, {x0 + 3, y + 48}, {x0 + 6, y + 96}, {x0 + kGrbW, y + 96}});
            // Red: flat rail, then a fast fall winding -1, and a short tail.
            b.edge(layer[i][2 * c + 1], layer[i + 1][2 * c + 1],
                   {{x0 + 8, y + 8},
                    {x0 + 40, y + 8},
                    {x0 + 50, y + 8 - 48},
                    {x0 + kGrbW, y + 8 - 96},
                    {x0 + kGrbW + 8, y + 8 - 96}});
        }
    }
    return std::move(b.d);
}

Drawing gen_g(int k) {
    Drawing base = gen_grb(k);
    Builder b(base.surface, base.k);
    b.d = std::move(base);
    b.next_vid = (int)b.d.vertices.size();
    b.next_eid = (int)b.d.edges.size();
    for (int i = 1; i <= k; ++i) {
        i64 x = (i64)(i - 1) * kGrbW;
        int AL = -1, BL = -1, CL = -1;
        std::string suffix = std::to_string(i) + "L";
        for (auto& v : b.d.vertices) {
            if (v.label == "A" + suffix) AL = v.id;
            if (v.label == "B" + suffix) BL = v.id;
            if (v.label == "C" + suffix) CL = v.id;
        }
        // Green triangle bulging left of the L column.
        b.edge(AL, BL, {{x, 0}, {x - 4, 8}, {x - 4, 24}, {x, 32}});
        b.edge(BL, CL, {{x, 32}, {x - 4, 40}, {x - 4, 56}, {x, 64}});
        b.edge(CL, AL, {{x, 64}, {x - 4, 72}, {x - 4, 88}, {x, 96}});
    }
    return std::move(b.d);
}

// ---------------------------------------------------------------------------
// Local saturation gadgets
// ---------------------------------------------------------------------------

namespace {

// Degree-4 core: S with neighbors a/b/c/d where a-b spirals twice around the
// core, S-b threads the spiral corridor outward and b-c threads back in. At
// level 1 nothing outside the spiral can be reached from S.
struct SpiralGadget {
    int S = -1;
};

SpiralGadget emit_spiral_gadget(Builder& b, Pt off, const std::string& tag, int extra_neighbors) {
    SpiralGadget g;
    auto V = [&](i64 x, i64 y, const std::string& l) {
        return b.vertex({off.x + x, off.y + y}, tag + l);
    };
    auto P = [&](i64 x, i64 y) { return Pt{off.x + x, off.y + y}; };
    g.S = V(0, 0, "S");
    int a = V(6, 0, "a");
    int bb = V(42, 0, "b");
    int c = V(10, -12, "c");
    int dd = V(0, 6, "d");
    b.segment(g.S, a);
    b.segment(g.S, dd);
    b.segment(g.S, c);
    b.edge(g.S, bb,
           {P(0, 0), P(0, -15), P(33, -15), P(33, 33), P(-33, 33), P(-33, -33), P(39, -33),
            P(39, -2), P(42, 0)});
    b.edge(a, bb,
           {P(6, 0), P(30, 0), P(30, 30), P(-30, 30), P(-30, -30), P(36, -30), P(36, 36),
            P(-36, 36), P(-36, -36), P(42, -36), P(42, 0)});
    b.edge(bb, c,
           {P(42, 0), P(40, -3), P(40, -31), P(-31, -31), P(-31, 31), P(31, 31), P(31, -13),
            P(10, -13), P(10, -12)});
    for (int j = 0; j < extra_neighbors; ++j) {
        int e = V(-4 - 3 * j, 4 + 2 * j, "e" + std::to_string(j));
        b.segment(g.S, e);
    }
    return g;
}

} // namespace

LocalGadget gen_local4(int n) {
    if (n < 6) throw std::invalid_argument("gen_local4: n must be >= 6");
    Builder b(Surface::plane(), 1);
    LocalGadget out;
    SpiralGadget g = emit_spiral_gadget(b, {0, 0}, "", 0);
    out.centers.push_back(g.S);
    for (int j = 0; j < n - 5; ++j) b.vertex({-80 - 10 * j, 80}, "x" + std::to_string(j));
    out.drawing = std::move(b.d);
    return out;
}

LocalGadget gen_local5(int copies) {
    if (copies < 1) throw std::invalid_argument("gen_local5: copies must be >= 1");
    Builder b(Surface::plane(), 1);
    LocalGadget out;
    for (int m = 0; m < copies; ++m) {
        i64 ox = (i64)m * 200;
        SpiralGadget g = emit_spiral_gadget(b, {ox, 0}, "g" + std::to_string(m) + "_", 1);
        out.centers.push_back(g.S);
        for (int j = 0; j < 4; ++j)
            b.vertex({ox - 80 + 8 * j, 80}, "g" + std::to_string(m) + "_x" + std::to_string(j));
    }
    out.drawing = std::move(b.d);
    return out;
}

LocalGadget gen_local12(int copies) {
    if (copies < 1) throw std::invalid_argument("gen_local12: copies must be >= 1");
    Builder b(Surface::cylinder(kBlockH), 2);
    LocalGadget out;
    for (int m = 0; m < copies; ++m) {
        i64 X = (i64)m * 600;
        std::string tag = "g" + std::to_string(m) + "_";
        emit_black_block(b, X, tag + "B_");
        emit_red_block(b, X, tag + "R_");
        // Convergent mirrored black block: tips in the right-rail pockets,
        // descending climbs (no hooks), then a fan into the rightmost vertex A.
        auto lifts = black_block_lifts();
        const i64 fan_lift[3] = {448, 256, 256};
        int A = b.vertex({X + kGroupSpan + 8, 64}, tag + "A");
        for (int i = 0; i < 3; ++i) {
            std::vector<Pt> lift(lifts[i].begin() + 3, lifts[i].end());
            std::reverse(lift.begin(), lift.end());
            for (auto& p : lift) p.x = X + kGroupSpan - p.x;
            int tip = b.vertex({lift.front().x, b.canon_y(lift.front().y)},
                               tag + "bp" + std::to_string(i));
            lift.push_back({X + kGroupSpan + 8, fan_lift[i]});
            b.edge(tip, A, lift);
        }
        out.centers.push_back(A);
    }
    out.drawing = std::move(b.d);
    return out;
}

Drawing generate(const GenRequest& req) {
    if (req.construction == "grb") return gen_grb(req.layers);
    if (req.construction == "g") return gen_g(req.layers);
    if (req.construction == "gridblock") return gen_gridblock().drawing;
    if (req.construction == "blackblock") return gen_block(BlockColor::Black);
    if (req.construction == "redblock") return gen_block(BlockColor::Red);
    if (req.construction == "block3") return gen_3block();
    if (req.construction == "twosimple") return gen_twosimple(req.layers, req.left, req.right);
    if (req.construction == "local4") return gen_local4(req.n).drawing;
    if (req.construction == "local5") return gen_local5(req.copies).drawing;
    if (req.construction == "local12") return gen_local12(req.copies).drawing;
    throw std::invalid_argument("unknown construction '" + req.construction + "'");
}

} // namespace topocross
