#include "topocross/gridwalk.hpp"

#include <algorithm>

namespace topocross {

namespace {

struct Cell {
    int col = -1; // 0..5; 0 and 5 are the boundary regions
    int row = -1; // 0..2, meaningless for boundary regions
};

// Face -> grid coordinates, read off the generator's labels "(k,i)".
std::vector<Cell> face_grid(const PlanarMap& m) {
    std::vector<Cell> g(m.faces.size());
    for (auto& [label, face] : m.face_labels) {
        if (label.size() < 5 || label.front() != '(' || label.back() != ')') continue;
        auto comma = label.find(',');
        if (comma == std::string::npos) continue;
        int col = std::stoi(label.substr(1, comma - 1));
        int row = std::stoi(label.substr(comma + 1, label.size() - comma - 2));
        if (g[face].col >= 0 && (g[face].col != col && (g[face].col != 0 && g[face].col != 5)))
            continue;
        // Boundary faces carry several labels; keep col, row is irrelevant there.
        if (g[face].col < 0) g[face] = {col, row};
    }
    return g;
}

struct Sym {
    GridStep kind;
    int from_face, to_face, arc;
};

int arc_between(const PlanarMap& m, const std::set<int>& red_edges, int f, int g, bool red) {
    int found = -1;
    for (size_t ai = 0; ai < m.arcs.size(); ++ai) {
        const Arc& a = m.arcs[ai];
        bool is_red = red_edges.count(a.parent_edge) > 0;
        if (is_red != red) continue;
        int fa = m.hedges[a.h_fwd].face, fb = m.hedges[a.h_rev].face;
        if (!((fa == f && fb == g) || (fa == g && fb == f))) continue;
        if (found >= 0) throw std::logic_error("grid-block: ambiguous arc between faces");
        found = (int)ai;
    }
    if (found < 0) throw std::logic_error("grid-block: no arc between faces");
    return found;
}

} // namespace

GridWalkInfo classify_gridblock_walk(const PlanarMap& m, const std::set<int>& red_edges,
                                     const WitnessWalk& w) {
    auto grid = face_grid(m);
    auto cell = [&](int f) -> const Cell& {
        if (f < 0 || f >= (int)grid.size() || grid[f].col < 0)
            throw std::invalid_argument("walk not confined to the grid-block");
        return grid[f];
    };
    GridWalkInfo info;
    const Cell& start = cell(w.start_face);
    if (start.col != 0) throw std::invalid_argument("grid-block walk must start in column 0");
    int cur = w.start_face;
    bool left_start = false;
    for (size_t i = 0; i < w.steps.size(); ++i) {
        const WalkStep& s = w.steps[i];
        if (s.from_face != cur) throw std::invalid_argument("walk steps do not chain");
        const Cell& a = cell(s.from_face);
        const Cell& b = cell(s.to_face);
        bool red = red_edges.count(m.arcs[s.arc].parent_edge) > 0;
        GridStep k;
        if (s.from_face == s.to_face || (a.col == b.col && (a.col == 0 || a.col == 5))) {
            k = GridStep::Stay;
        } else if (b.col == a.col + 1) {
            k = red ? GridStep::Up : GridStep::Right;
        } else if (b.col == a.col - 1) {
            k = red ? GridStep::Down : GridStep::Left;
        } else {
            throw std::invalid_argument("walk step skips columns");
        }
        // Interior boundary-region visits are disallowed by the rewrite's
        // precondition: column 0 only before any progress, column 5 only at the end.
        if (k != GridStep::Stay) {
            if (b.col == 0 && left_start)
                throw std::invalid_argument("walk revisits column 0");
            if (a.col != 0) left_start = true;
            if (b.col != 0) left_start = true;
        }
        if (a.col == 5 && i + 1 < w.steps.size() && b.col != 5)
            throw std::invalid_argument("walk leaves column 5 before its end");
        info.kinds.push_back(k);
        cur = s.to_face;
    }
    if (cell(cur).col != 5) throw std::invalid_argument("grid-block walk must end in column 5");
    return info;
}

WitnessWalk normalize_gridblock_walk(const PlanarMap& m, const std::set<int>& red_edges,
                                     const WitnessWalk& w) {
    auto grid = face_grid(m);
    classify_gridblock_walk(m, red_edges, w); // validates preconditions

    // Find a labeled face by grid coordinates (cells are unique; boundary
    // regions resolve through any of their aliases).
    auto face_at = [&](int col, int row) -> int {
        row = ((row % 3) + 3) % 3;
        std::string lab = "(" + std::to_string(col) + "," + std::to_string(row) + ")";
        return face_label_lookup(m, lab);
    };

    std::vector<Sym> seq;
    {
        int cur = w.start_face;
        for (auto& s : w.steps) {
            bool red = red_edges.count(m.arcs[s.arc].parent_edge) > 0;
            const auto& a = grid[s.from_face];
            const auto& b = grid[s.to_face];
            GridStep k;
            if (s.from_face == s.to_face || (a.col == b.col && (a.col == 0 || a.col == 5)))
                k = GridStep::Stay;
            else if (b.col == a.col + 1)
                k = red ? GridStep::Up : GridStep::Right;
            else
                k = red ? GridStep::Down : GridStep::Left;
            seq.push_back({k, s.from_face, s.to_face, s.arc});
            cur = s.to_face;
        }
        (void)cur;
    }

    auto col_of = [&](int f) { return grid[f].col; };
    auto row_of = [&](int f) { return grid[f].row; };
    auto mk = [&](GridStep k, int from, int to) -> Sym {
        bool red = (k == GridStep::Up || k == GridStep::Down);
        return {k, from, to, arc_between(m, red_edges, from, to, red)};
    };
    auto is_backward = [](GridStep k) { return k == GridStep::Left || k == GridStep::Down; };
    auto is_forward = [](GridStep k) { return k == GridStep::Right || k == GridStep::Up; };

    // Stage 1: remove backward steps.
    for (;;) {
        size_t j = 0;
        while (j < seq.size() && !is_backward(seq[j].kind)) ++j;
        if (j == seq.size()) break;
        if (j == 0) throw std::logic_error("backward step at walk start");
        Sym& prev = seq[j - 1];
        Sym& back = seq[j];
        if (!is_forward(prev.kind))
            throw std::logic_error("backward step not preceded by a forward step");

        bool ann = (prev.kind == GridStep::Right && back.kind == GridStep::Left) ||
                   (prev.kind == GridStep::Up && back.kind == GridStep::Down);
        if (ann) {
            // Opposite steps across the same boundary cancel.
            seq.erase(seq.begin() + j - 1, seq.begin() + j + 1);
            continue;
        }
        int from = prev.from_face;
        int to = back.to_face;
        if (prev.kind == GridStep::Up && back.kind == GridStep::Left) {
            // (k,i) U (k+1,i+1) L (k,i+1)  =>  L' then U' via (k-1,i).
            int k = col_of(from), i = row_of(from);
            if (k >= 2) {
                int mid = face_at(k - 1, i);
                Sym s1 = mk(GridStep::Left, from, mid);
                Sym s2 = mk(GridStep::Up, mid, to);
                seq[j - 1] = s1;
                seq[j] = s2;
            } else {
                // The reorder would leave the block: collapse the entry.
                // [entry to (1,i)] U L  =>  single red entry into (1,i+1).
                if (j < 2) throw std::logic_error("boundary case without entry step");
                Sym entry = seq[j - 2];
                if (col_of(entry.from_face) != 0)
                    throw std::logic_error("boundary case: predecessor not an entry");
                Sym s = mk(GridStep::Up, entry.from_face, to);
                seq.erase(seq.begin() + j - 1, seq.begin() + j + 1);
                seq[j - 2] = s;
            }
            continue;
        }
        if (prev.kind == GridStep::Right && back.kind == GridStep::Down) {
            // (k,i) R (k+1,i) D (k,i-1)  =>  D' then R' via (k-1,i-1).
            int k = col_of(from), i = row_of(from);
            if (k >= 2) {
                int mid = face_at(k - 1, i - 1);
                Sym s1 = mk(GridStep::Down, from, mid);
                Sym s2 = mk(GridStep::Right, mid, to);
                seq[j - 1] = s1;
                seq[j] = s2;
            } else {
                if (j < 2) throw std::logic_error("boundary case without entry step");
                Sym entry = seq[j - 2];
                if (col_of(entry.from_face) != 0)
                    throw std::logic_error("boundary case: predecessor not an entry");
                Sym s = mk(GridStep::Right, entry.from_face, to);
                seq.erase(seq.begin() + j - 1, seq.begin() + j + 1);
                seq[j - 2] = s;
            }
            continue;
        }
        throw std::logic_error("unhandled backward configuration");
    }

    // Stage 2: commute black (Right) steps before red (Up) steps.
    for (;;) {
        bool swapped = false;
        for (size_t j = 0; j + 1 < seq.size(); ++j) {
            if (seq[j].kind != GridStep::Up || seq[j + 1].kind != GridStep::Right) continue;
            int from = seq[j].from_face;
            int to = seq[j + 1].to_face;
            // (a,b) U (a+1,b+1) R (a+2,b+1)  =>  (a,b) R (a+1,b) U (a+2,b+1)
            int a = col_of(from);
            int b_row;
            if (a == 0) {
                // Entry: row comes from the Up target minus one.
                b_row = row_of(seq[j].to_face) - 1;
            } else {
                b_row = row_of(from);
            }
            int mid = face_at(a + 1, b_row);
            Sym s1 = mk(GridStep::Right, from, mid);
            Sym s2 = mk(GridStep::Up, mid, to);
            seq[j] = s1;
            seq[j + 1] = s2;
            swapped = true;
        }
        if (!swapped) break;
    }

    WitnessWalk out;
    out.u = w.u;
    out.v = w.v;
    out.start_face = w.start_face;
    for (auto& s : seq) out.steps.push_back({s.from_face, s.arc, s.to_face});
    // Re-chain faces (rewrites keep endpoints, interior faces were rebuilt).
    int cur = out.start_face;
    for (auto& s : out.steps) {
        if (s.from_face != cur) throw std::logic_error("normalization broke the walk chain");
        cur = s.to_face;
    }
    return out;
}

} // namespace topocross
