#include "topocross/drawing_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace topocross {

std::string write_drawing(const Drawing& d) {
    std::ostringstream os;
    os << "topocross-drawing v1\n";
    if (d.surface.is_cylinder())
        os << "surface cylinder H=" << d.surface.height << "\n";
    else
        os << "surface plane\n";
    os << "k " << d.k << "\n";
    for (auto& v : d.vertices)
        os << "v " << v.id << " " << v.pos.x << " " << v.pos.y << " " << v.label << "\n";
    for (auto& e : d.edges) {
        os << "e " << e.id << " " << e.v1 << " " << e.v2;
        for (auto& p : e.interior) os << " " << p.x << " " << p.y;
        if (!e.wraps.empty()) {
            os << " wrap";
            for (int w : e.wraps) os << " " << w;
        }
        os << "\n";
    }
    for (auto& f : d.face_anchors)
        os << "f " << f.pos.x << " " << f.pos.y << " " << f.label << "\n";
    return os.str();
}

namespace {

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw std::runtime_error("drawing parse error at line " + std::to_string(lineno) + ": " + msg);
}

i64 to_int(const std::string& tok, int lineno) {
    try {
        size_t pos = 0;
        i64 v = std::stoll(tok, &pos);
        if (pos != tok.size()) fail(lineno, "bad integer '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(lineno, "bad integer '" + tok + "'");
    }
}

} // namespace

Drawing parse_drawing(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Drawing d;
    bool saw_header = false, saw_surface = false, saw_k = false;
    std::set<int> vids, eids;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;

        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "topocross-drawing" || tok[1] != "v1")
                fail(lineno, "expected header 'topocross-drawing v1'");
            saw_header = true;
            continue;
        }
        if (tok[0] == "surface") {
            if (saw_surface) fail(lineno, "duplicate surface line");
            saw_surface = true;
            if (tok.size() == 2 && tok[1] == "plane") {
                d.surface = Surface::plane();
            } else if (tok.size() == 2 && tok[1].rfind("cylinder", 0) == 0) {
                fail(lineno, "cylinder requires H=<int>");
            } else if (tok.size() == 3 && tok[1] == "cylinder" && tok[2].rfind("H=", 0) == 0) {
                d.surface = Surface::cylinder(to_int(tok[2].substr(2), lineno));
            } else {
                fail(lineno, "bad surface line");
            }
            continue;
        }
        if (tok[0] == "k") {
            if (saw_k) fail(lineno, "duplicate k line");
            if (tok.size() != 2) fail(lineno, "bad k line");
            saw_k = true;
            i64 k = to_int(tok[1], lineno);
            if (k < 1) fail(lineno, "k must be positive");
            d.k = (int)k;
            continue;
        }
        if (tok[0] == "v") {
            if (tok.size() != 5) fail(lineno, "v line needs id x y label");
            Vertex v;
            v.id = (int)to_int(tok[1], lineno);
            v.pos = Pt{to_int(tok[2], lineno), to_int(tok[3], lineno)};
            v.label = tok[4];
            if (!vids.insert(v.id).second) fail(lineno, "duplicate vertex id");
            d.vertices.push_back(v);
            continue;
        }
        if (tok[0] == "e") {
            if (tok.size() < 4) fail(lineno, "e line needs id v1 v2");
            Edge e;
            e.id = (int)to_int(tok[1], lineno);
            e.v1 = (int)to_int(tok[2], lineno);
            e.v2 = (int)to_int(tok[3], lineno);
            if (!eids.insert(e.id).second) fail(lineno, "duplicate edge id");
            size_t i = 4;
            while (i < tok.size() && tok[i] != "wrap") {
                if (i + 1 >= tok.size() || tok[i + 1] == "wrap") fail(lineno, "odd coordinate list");
                e.interior.push_back(Pt{to_int(tok[i], lineno), to_int(tok[i + 1], lineno)});
                i += 2;
            }
            if (i < tok.size() && tok[i] == "wrap") {
                ++i;
                while (i < tok.size()) e.wraps.push_back((int)to_int(tok[i++], lineno));
                if ((int)e.wraps.size() != e.segment_count())
                    fail(lineno, "wrap list must have one entry per segment");
            }
            d.edges.push_back(e);
            continue;
        }
        if (tok[0] == "f") {
            if (tok.size() != 4) fail(lineno, "f line needs x y label");
            FaceAnchor a;
            a.pos = Pt{to_int(tok[1], lineno), to_int(tok[2], lineno)};
            a.label = tok[3];
            d.face_anchors.push_back(a);
            continue;
        }
        fail(lineno, "unknown directive '" + tok[0] + "'");
    }
    if (!saw_header) fail(lineno, "missing header");
    if (!saw_surface) fail(lineno, "missing surface line");
    if (!saw_k) fail(lineno, "missing k line");
    return d;
}

Drawing load_drawing_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_drawing(ss.str());
}

void save_drawing_file(const Drawing& d, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << write_drawing(d);
}

} // namespace topocross
