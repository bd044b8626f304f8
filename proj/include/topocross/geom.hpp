#ifndef TOPOCROSS_GEOM_HPP
#define TOPOCROSS_GEOM_HPP

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace topocross {

using i64 = long long;
using i128 = __int128;

// Coordinates are bounded so that every predicate below stays exact in
// 128-bit intermediates. Lifted cylinder coordinates must also obey this.
constexpr i64 kCoordLimit = 1 << 18;

struct Pt {
    i64 x = 0, y = 0;
    bool operator==(const Pt&) const = default;
};

// Orientation of C relative to the directed line A->B.
// > 0: left turn, < 0: right turn, 0: collinear. Exact for |coords| <= kCoordLimit.
inline i64 orient(Pt a, Pt b, Pt c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline i64 cross_dir(i64 ax, i64 ay, i64 bx, i64 by) { return ax * by - ay * bx; }

// Exact rational with gcd-reduced int64 numerator/denominator, den > 0.
// All comparisons go through 128-bit products.
struct Rat {
    i64 num = 0, den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i64 g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n; den = d;
    }

    bool is_integer() const { return den == 1; }
    i64 floor() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        i128 l = (i128)a.num * b.den;
        i128 r = (i128)b.num * a.den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return rat_from_i128((i128)a.num * b.den + (i128)b.num * a.den, (i128)a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return rat_from_i128((i128)a.num * b.den - (i128)b.num * a.den, (i128)a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return rat_from_i128((i128)a.num * b.num, (i128)a.den * b.den);
    }

    static Rat rat_from_i128(i128 n, i128 d);

    double to_double() const { return (double)num / (double)den; }
    std::string str() const;
};

struct RatPt {
    Rat x, y;
    bool operator==(const RatPt&) const = default;
    friend std::strong_ordering operator<=>(const RatPt& a, const RatPt& b) {
        auto c = a.x <=> b.x;
        if (c != std::strong_ordering::equal) return c;
        return a.y <=> b.y;
    }
};

inline RatPt to_ratpt(Pt p) { return RatPt{Rat(p.x), Rat(p.y)}; }

// Kinds of pairwise segment contact. Segments are closed; "proper" means the
// intersection point is interior to both.
enum class SegContact {
    None,
    Proper,       // transversal crossing interior to both segments
    Touch,        // single common point, on an endpoint of at least one segment
    Overlap,      // collinear, common part is a positive-length segment
};

struct SegHit {
    SegContact kind = SegContact::None;
    // For Proper: parameters along each segment, in (0,1) exclusive, exact.
    Rat ta, tb;
    RatPt point;
};

// Classify the intersection of segments a0-a1 and b0-b1.
SegHit intersect_segments(Pt a0, Pt a1, Pt b0, Pt b1);

// True if point p lies on the closed segment a-b.
bool point_on_segment(RatPt p, Pt a, Pt b);
bool point_on_segment(Pt p, Pt a, Pt b);

// Point at parameter t in [0,1] along a->b.
RatPt segment_point(Pt a, Pt b, Rat t);

// Angular comparator for direction vectors: orders by CCW angle starting
// just above the positive x axis. Directions must be nonzero.
bool angle_less(Pt d1, Pt d2);

} // namespace topocross

#endif
