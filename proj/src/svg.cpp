#include "topocross/svg.hpp"

#include <algorithm>
#include <sstream>

namespace topocross {

namespace {

// Edge color from the generators' vertex label conventions.
std::string edge_color(const Drawing& d, const Edge& e) {
    const Vertex* a = d.vertex_by_id(e.v1);
    const Vertex* b = d.vertex_by_id(e.v2);
    auto is_left = [](const std::string& s) { return !s.empty() && s.back() == 'L'; };
    auto is_right = [](const std::string& s) { return !s.empty() && s.back() == 'R'; };
    if (!a || !b) return "black";
    if (a->label.size() && b->label.size()) {
        char ca = a->label[0], cb = b->label[0];
        if (ca == 'r' && cb == 'r') return "crimson";
        if (ca == 'b' && cb == 'b') return "black";
        bool glike = (ca == 'A' || ca == 'B' || ca == 'C') && (cb == 'A' || cb == 'B' || cb == 'C');
        if (glike) {
            if (is_left(a->label) && is_left(b->label) && a->label[0] != b->label[0]) return "seagreen";
            if (is_left(a->label) && is_left(b->label)) return "royalblue";
            if (is_right(a->label) && is_right(b->label)) return "crimson";
        }
        if (a->label.find("r") != std::string::npos && b->label.find("r") != std::string::npos)
            return "crimson";
    }
    return "black";
}

} // namespace

std::string render_svg(const Drawing& d) {
    const double S = 6.0;
    i64 minx = 0, maxx = 10, miny = 0, maxy = 10;
    bool first = true;
    auto see = [&](Pt p) {
        if (first) {
            minx = maxx = p.x;
            miny = maxy = p.y;
            first = false;
        }
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    };
    for (auto& v : d.vertices) see(v.pos);
    for (auto& e : d.edges) {
        auto lift = d.lifted_polyline(e);
        for (auto& p : lift) see(p);
    }
    i64 h = d.surface.is_cylinder() ? d.surface.height : 0;
    if (h > 0) {
        miny = std::min<i64>(miny, 0);
        maxy = std::max<i64>(maxy, h);
    }
    auto X = [&](double x) { return (x - (double)minx + 4) * S; };
    auto Y = [&](double y) { return ((double)maxy - y + 4) * S; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)X((double)maxx + 4)
       << "\" height=\"" << (int)Y((double)miny - 4) << "\">\n";
    if (h > 0) {
        os << "<line x1=\"" << X((double)minx - 2) << "\" y1=\"" << Y(0) << "\" x2=\""
           << X((double)maxx + 2) << "\" y2=\"" << Y(0)
           << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"6 4\"/>\n";
        os << "<line x1=\"" << X((double)minx - 2) << "\" y1=\"" << Y((double)h) << "\" x2=\""
           << X((double)maxx + 2) << "\" y2=\"" << Y((double)h)
           << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"6 4\"/>\n";
    }
    for (auto& e : d.edges) {
        auto lift = d.lifted_polyline(e);
        std::string color = edge_color(d, e);
        // Draw the lift and, on cylinders, its vertical translates that fall
        // into the visible band.
        std::vector<i64> offs{0};
        if (h > 0) {
            offs = {-2 * h, -h, 0, h, 2 * h};
        }
        for (i64 off : offs) {
            os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (auto& p : lift) os << X((double)p.x) << "," << Y((double)(p.y + off)) << " ";
            os << "\"/>\n";
        }
    }
    for (auto& v : d.vertices) {
        os << "<circle cx=\"" << X((double)v.pos.x) << "\" cy=\"" << Y((double)v.pos.y)
           << "\" r=\"3\" fill=\"black\"/>\n";
        os << "<text x=\"" << X((double)v.pos.x) + 4 << "\" y=\"" << Y((double)v.pos.y) - 4
           << "\" font-size=\"10\">" << v.label << "</text>\n";
    }
    auto events = all_crossings(d);
    for (auto& ev : events) {
        os << "<circle cx=\"" << X(ev.point.x.to_double()) << "\" cy=\"" << Y(ev.point.y.to_double())
           << "\" r=\"1.8\" fill=\"dimgray\"/>\n";
    }
    for (auto& a : d.face_anchors) {
        os << "<text x=\"" << X((double)a.pos.x) << "\" y=\"" << Y((double)a.pos.y)
           << "\" font-size=\"9\" fill=\"#777777\">" << a.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace topocross
