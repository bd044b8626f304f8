#include "topocross/geom.hpp"

namespace topocross {

Rat Rat::rat_from_i128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 an = n < 0 ? -n : n;
    // gcd on i128
    i128 a = an, b = d;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    constexpr i128 lim = (i128)INT64_MAX;
    if (n > lim || n < -lim || d > lim)
        throw std::overflow_error("Rat: value out of 64-bit range after reduction");
    Rat r;
    r.num = (i64)n;
    r.den = (i64)d;
    return r;
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

SegHit intersect_segments(Pt a0, Pt a1, Pt b0, Pt b1) {
    SegHit hit;
    i64 d1 = orient(b0, b1, a0);
    i64 d2 = orient(b0, b1, a1);
    i64 d3 = orient(a0, a1, b0);
    i64 d4 = orient(a0, a1, b1);

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        hit.kind = SegContact::Proper;
        // a0 + ta*(a1-a0) is on line b0-b1: ta = d1 / (d1 - d2), exact.
        hit.ta = Rat(d1, d1 - d2);
        hit.tb = Rat(d3, d3 - d4);
        hit.point = segment_point(a0, a1, hit.ta);
        return hit;
    }

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Collinear; compare intervals on the dominant axis.
        bool use_x = !(a0.x == a1.x && b0.x == b1.x);
        auto proj = [&](Pt p) { return use_x ? p.x : p.y; };
        i64 alo = std::min(proj(a0), proj(a1)), ahi = std::max(proj(a0), proj(a1));
        i64 blo = std::min(proj(b0), proj(b1)), bhi = std::max(proj(b0), proj(b1));
        i64 lo = std::max(alo, blo), hi = std::min(ahi, bhi);
        if (lo > hi) return hit;
        if (lo == hi) {
            hit.kind = SegContact::Touch;
            Pt p = (proj(a0) == lo) ? a0 : (proj(a1) == lo ? a1 : (proj(b0) == lo ? b0 : b1));
            hit.point = to_ratpt(p);
            return hit;
        }
        hit.kind = SegContact::Overlap;
        return hit;
    }

    // Not collinear, not proper: either disjoint or touching at a point that is
    // an endpoint of at least one segment.
    auto ends_touch = [&](Pt p, Pt c0, Pt c1) {
        return point_on_segment(p, c0, c1);
    };
    if (d1 == 0 && ends_touch(a0, b0, b1)) { hit.kind = SegContact::Touch; hit.point = to_ratpt(a0); return hit; }
    if (d2 == 0 && ends_touch(a1, b0, b1)) { hit.kind = SegContact::Touch; hit.point = to_ratpt(a1); return hit; }
    if (d3 == 0 && ends_touch(b0, a0, a1)) { hit.kind = SegContact::Touch; hit.point = to_ratpt(b0); return hit; }
    if (d4 == 0 && ends_touch(b1, a0, a1)) { hit.kind = SegContact::Touch; hit.point = to_ratpt(b1); return hit; }
    return hit;
}

bool point_on_segment(Pt p, Pt a, Pt b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool point_on_segment(RatPt p, Pt a, Pt b) {
    // cross = (b-a) x (p-a) == 0, cleared of denominators, then a bbox check.
    i128 c1 = (i128)(b.x - a.x) * (p.y.num - (i128)a.y * p.y.den) * p.x.den;
    i128 c2 = (i128)(b.y - a.y) * (p.x.num - (i128)a.x * p.x.den) * p.y.den;
    if (c1 != c2) return false;
    if (Rat(std::min(a.x, b.x)) > p.x || p.x > Rat(std::max(a.x, b.x))) return false;
    if (Rat(std::min(a.y, b.y)) > p.y || p.y > Rat(std::max(a.y, b.y))) return false;
    return true;
}

RatPt segment_point(Pt a, Pt b, Rat t) {
    Rat x = Rat::rat_from_i128((i128)a.x * t.den + (i128)t.num * (b.x - a.x), t.den);
    Rat y = Rat::rat_from_i128((i128)a.y * t.den + (i128)t.num * (b.y - a.y), t.den);
    return RatPt{x, y};
}

bool angle_less(Pt d1, Pt d2) {
    auto half = [](Pt d) {
        // 0 for angle in (0, 180], 1 for (180, 360]. Positive x axis is half 0.
        if (d.y > 0) return 0;
        if (d.y < 0) return 1;
        return d.x > 0 ? 0 : 1;
    };
    int h1 = half(d1), h2 = half(d2);
    if (h1 != h2) return h1 < h2;
    i64 c = cross_dir(d1.x, d1.y, d2.x, d2.y);
    return c > 0;
}

} // namespace topocross
