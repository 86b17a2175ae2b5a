#include "tetratwist/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tetra::io {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const char* where) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw std::runtime_error(std::string("aggregate JSON: missing field \"") + key +
                                 "\" in " + where);
    return *it;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string aggregate_to_json(const Aggregate& agg) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"kind\": \"" << to_string(agg.kind) << "\",\n";
    out << "  \"edge_length\": " << format_double(agg.params.edge_length) << ",\n";
    out << "  \"parameters\": {";
    bool first = true;
    auto emit = [&](const std::string& k, const std::string& v) {
        out << (first ? "" : ", ") << "\"" << k << "\": " << v;
        first = false;
    };
    if (agg.kind == AggregateKind::edge_ring) {
        emit("n", std::to_string(agg.params.n));
        emit("twisted", agg.params.twisted ? "true" : "false");
    } else if (agg.kind == AggregateKind::icosahedral) {
        emit("twisted", agg.params.twisted ? "true" : "false");
    } else {
        emit("count", std::to_string(agg.params.count));
        emit("underlying", "\"" + to_string(agg.params.underlying) + "\"");
        emit("rotation_sense", "\"" + to_string(agg.params.rotation_sense) + "\"");
    }
    out << "},\n";
    out << "  \"tetrahedra\": [\n";
    for (int i = 0; i < agg.size(); ++i) {
        const auto& t = agg.tetrahedra[i];
        out << "    {\"id\": " << t.id << ", \"vertices\": [";
        for (int v = 0; v < 4; ++v) {
            const Vec3& p = t.vertices[v];
            out << (v ? ", " : "") << "[" << format_double(p.x) << ", " << format_double(p.y)
                << ", " << format_double(p.z) << "]";
        }
        out << "]}" << (i + 1 < agg.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

Aggregate aggregate_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("aggregate JSON: parse error: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("aggregate JSON: top level must be an object");

    Aggregate agg;
    agg.kind = aggregate_kind_from_string(require(doc, "kind", "top level").get<std::string>());
    agg.params.edge_length = require(doc, "edge_length", "top level").get<double>();
    if (!(agg.params.edge_length > 0))
        throw std::runtime_error("aggregate JSON: edge_length must be positive");

    const json& params = require(doc, "parameters", "top level");
    if (params.contains("n")) agg.params.n = params["n"].get<int>();
    if (params.contains("count")) agg.params.count = params["count"].get<int>();
    if (params.contains("twisted")) agg.params.twisted = params["twisted"].get<bool>();
    if (params.contains("underlying"))
        agg.params.underlying = chirality_from_string(params["underlying"].get<std::string>());
    if (params.contains("rotation_sense"))
        agg.params.rotation_sense =
            chirality_from_string(params["rotation_sense"].get<std::string>());

    const json& tets = require(doc, "tetrahedra", "top level");
    if (!tets.is_array()) throw std::runtime_error("aggregate JSON: \"tetrahedra\" must be an array");
    for (const auto& jt : tets) {
        Tetrahedron t;
        t.id = require(jt, "id", "tetrahedron").get<int>();
        t.edge_length = agg.params.edge_length;
        const json& verts = require(jt, "vertices", "tetrahedron");
        if (!verts.is_array() || verts.size() != 4)
            throw std::runtime_error("aggregate JSON: tetrahedron " + std::to_string(t.id) +
                                     ": \"vertices\" must be an array of 4 points");
        for (int v = 0; v < 4; ++v) {
            const json& p = verts[v];
            if (!p.is_array() || p.size() != 3)
                throw std::runtime_error("aggregate JSON: tetrahedron " + std::to_string(t.id) +
                                         ", vertex " + std::to_string(v) +
                                         ": expected [x, y, z]");
            t.vertices[v] = {p[0].get<double>(), p[1].get<double>(), p[2].get<double>()};
        }
        agg.tetrahedra.push_back(t);
    }
    agg.validate();
    return agg;
}

Aggregate load_aggregate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\" for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return aggregate_from_json(buf.str());
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
    out << text;
    if (!out) throw std::runtime_error("write to \"" + path + "\" failed");
}

std::string aggregate_to_obj(const Aggregate& agg) {
    std::ostringstream out;
    out << "# tetratwist aggregate, kind " << to_string(agg.kind) << ", " << agg.size()
        << " tetrahedra\n";
    int base = 1;  // OBJ indices are 1-based
    for (const auto& t : agg.tetrahedra) {
        out << "o tet_" << t.id << "\n";
        for (const auto& v : t.vertices)
            out << "v " << format_double(v.x) << " " << format_double(v.y) << " "
                << format_double(v.z) << "\n";
        for (int fi = 0; fi < 4; ++fi) {
            const auto labels = Tetrahedron::face_labels(fi);
            out << "f " << base + labels[0] << " " << base + labels[1] << " "
                << base + labels[2] << "\n";
        }
        base += 4;
    }
    return out.str();
}

ObjData parse_obj(const std::string& text) {
    ObjData data;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "#") continue;
        if (tag == "v") {
            Vec3 p;
            if (!(ls >> p.x >> p.y >> p.z))
                throw std::runtime_error("OBJ line " + std::to_string(lineno) +
                                         ": malformed vertex");
            data.vertices.push_back(p);
        } else if (tag == "f") {
            std::array<int, 3> f{};
            if (!(ls >> f[0] >> f[1] >> f[2]))
                throw std::runtime_error("OBJ line " + std::to_string(lineno) +
                                         ": malformed face (triangles only)");
            for (auto& ix : f) {
                if (ix < 1 || ix > static_cast<int>(data.vertices.size()))
                    throw std::runtime_error("OBJ line " + std::to_string(lineno) +
                                             ": face index out of range");
                ix -= 1;
            }
            data.faces.push_back(f);
        } else if (tag == "o") {
            std::string name;
            ls >> name;
            data.groups.push_back(name);
        }
    }
    return data;
}

std::string junction_to_svg(const FaceJunction& j) {
    const JunctionProjection prj = junction_projection(j);
    const double scale = 100.0 / j.edge_length;

    double extent = 0;
    for (const auto& tri : {prj.lower, prj.higher})
        for (const auto& p : tri) extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
    const double half = std::ceil(extent * scale) + 20.0;

    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", v);
        return std::string(buf);
    };
    // y axis up: flip the y coordinate inside the viewBox.
    auto pt = [&](const std::array<double, 2>& p) {
        return fmt(p[0] * scale) + "," + fmt(-p[1] * scale);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << fmt(-half) << " " << fmt(-half) << " " << fmt(2 * half) << " " << fmt(2 * half)
        << "\">\n";
    out << "  <polygon points=\"" << pt(prj.lower[0]) << " " << pt(prj.lower[1]) << " "
        << pt(prj.lower[2])
        << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
    out << "  <polygon points=\"" << pt(prj.higher[0]) << " " << pt(prj.higher[1]) << " "
        << pt(prj.higher[2])
        << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    out << "  <circle cx=\"0\" cy=\"0\" r=\"2\" fill=\"#1f77b4\"/>\n";
    out << "  <circle cx=\"" << fmt(prj.higher_centroid[0] * scale) << "\" cy=\""
        << fmt(-prj.higher_centroid[1] * scale) << "\" r=\"2\" fill=\"#d62728\"/>\n";
    out << "  <text x=\"" << fmt(-half + 6) << "\" y=\"" << fmt(half - 8)
        << "\" font-family=\"monospace\" font-size=\"10\">angle_min "
        << fmt(j.angle_min * 180.0 / std::numbers::pi) << " deg, offset "
        << fmt(j.offset_in_delta) << " delta</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace tetra::io
