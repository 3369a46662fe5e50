#include <unistd.h>
#include "minksum/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "minksum/minkd.hpp"
#include "minksum/planar.hpp"

namespace minksum {

using nlohmann::json;

namespace {

Vec parse_point(const json& arr, int dim, const std::string& where) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim) {
        throw ParseError(where + ": expected an array of " + std::to_string(dim) + " rationals");
    }
    std::vector<Rational> coords;
    coords.reserve(arr.size());
    for (const auto& c : arr) {
        if (!c.is_string()) {
            throw ParseError(where + ": rationals must be \"num\" or \"num/den\" strings");
        }
        coords.push_back(Rational::parse(c.get<std::string>()));
    }
    return Vec(std::move(coords));
}

json point_to_json(const Vec& p) {
    json arr = json::array();
    for (int i = 0; i < p.dim(); ++i) arr.push_back(p[i].str());
    return arr;
}

}  // namespace

Polytope parse_polytope_json(const std::string& text, const std::string& context, bool validate) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(context + ": " + e.what());
    }

    try {
        if (!doc.is_object()) throw ParseError(context + ": document is not an object");
        if (doc.value("format", std::string()) != "minksum-lattice") {
            throw ParseError(context + ": missing or unknown \"format\"");
        }
        if (doc.value("version", 0) != 1) {
            throw ParseError(context + ": unsupported version");
        }
        if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
            throw ParseError(context + ": missing integer \"dim\"");
        }
        const int dim = doc["dim"].get<int>();
        if (dim < 1) throw ParseError(context + ": dim must be >= 1");
        const std::string label = doc.value("label", std::string("unnamed"));

        if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty()) {
            throw ParseError(context + ": missing nonempty \"vertices\" array");
        }
        std::vector<Vec> vertices;
        for (size_t i = 0; i < doc["vertices"].size(); ++i) {
            vertices.push_back(parse_point(doc["vertices"][i], dim,
                                           context + ": vertex " + std::to_string(i)));
        }

        std::vector<FaceSpec> faces;
        if (doc.contains("faces")) {
            if (!doc["faces"].is_array()) throw ParseError(context + ": \"faces\" must be an array");
            for (size_t j = 0; j < doc["faces"].size(); ++j) {
                const auto& f = doc["faces"][j];
                const std::string where = context + ": face " + std::to_string(j);
                if (!f.is_object() || !f.contains("dim") || !f.contains("vertices")) {
                    throw ParseError(where + ": needs \"dim\" and \"vertices\"");
                }
                FaceSpec spec;
                spec.dim = f["dim"].get<int>();
                if (spec.dim < 1 || spec.dim >= dim) {
                    throw ParseError(where + ": face dimension out of range [1, dim)");
                }
                for (const auto& v : f["vertices"]) {
                    const int id = v.get<int>();
                    if (id < 0 || id >= static_cast<int>(vertices.size())) {
                        throw ParseError(where + ": vertex id " + std::to_string(id) +
                                         " out of range");
                    }
                    spec.vertex_indices.push_back(id);
                }
                if (f.contains("interior_point")) {
                    spec.interior_point =
                        parse_point(f["interior_point"], dim, where + ": interior_point");
                }
                faces.push_back(std::move(spec));
            }
        }

        std::vector<std::pair<int, int>> arcs;
        const bool has_arcs = doc.contains("incidences");
        if (has_arcs) {
            const int id_count = static_cast<int>(vertices.size() + faces.size());
            for (const auto& a : doc["incidences"]) {
                if (!a.is_array() || a.size() != 2) {
                    throw ParseError(context + ": incidences must be [sub, super] pairs");
                }
                const int sub = a[0].get<int>();
                const int super = a[1].get<int>();
                if (sub < 0 || sub >= id_count || super < 0 || super >= id_count) {
                    throw ParseError(context + ": incidence id out of range");
                }
                arcs.emplace_back(sub, super);
            }
        }

        FaceLattice lattice;
        try {
            lattice = assemble_lattice(dim, vertices, faces, has_arcs ? &arcs : nullptr);
        } catch (const Error& e) {
            throw ParseError(context + ": " + e.what());
        }
        if (validate) {
            const ValidationReport report = validate_lattice(lattice, ValidationLevel::full);
            if (!report.ok) throw ValidationFailure(report.violations);
        }
        return Polytope{std::move(lattice), label};
    } catch (const json::exception& e) {
        throw ParseError(context + ": " + e.what());
    }
}

std::string polytope_to_json(const Polytope& p) {
    const FaceLattice& L = p.lattice;
    json doc;
    doc["format"] = "minksum-lattice";
    doc["version"] = 1;
    doc["dim"] = L.ambient_dim();
    doc["label"] = p.label;

    // Vertices in layer order; faces refer to positions in this list.
    std::vector<int> vertex_pos(L.node_count(), -1);
    json verts = json::array();
    for (int v : L.faces_of_dim(0)) {
        vertex_pos[static_cast<size_t>(v)] = static_cast<int>(verts.size());
        verts.push_back(point_to_json(L.vertex_point(v)));
    }
    doc["vertices"] = std::move(verts);

    json faces = json::array();
    for (int k = 1; k < L.top_dim(); ++k) {
        for (int id : L.faces_of_dim(k)) {
            const FaceNode& n = L.node(id);
            json f;
            f["dim"] = k;
            json vs = json::array();
            for (int v : n.vertex_ids) vs.push_back(vertex_pos[static_cast<size_t>(v)]);
            f["vertices"] = std::move(vs);
            if (n.interior_point) f["interior_point"] = point_to_json(*n.interior_point);
            faces.push_back(std::move(f));
        }
    }
    doc["faces"] = std::move(faces);
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw IoError("failed reading " + path);
    return buf.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out.good()) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("failed renaming " + tmp.string() + " to " + path);
    }
}

Polytope load_polytope(const std::string& path, bool validate) {
    return parse_polytope_json(read_file(path), path, validate);
}

void save_polytope(const Polytope& p, const std::string& path) {
    atomic_write(path, polytope_to_json(p));
}

std::string to_off(const Polytope& p) {
    const FaceLattice& L = p.lattice;
    if (L.ambient_dim() != 3 || L.top_dim() != 3) {
        throw InvalidArgument("to_off: OFF export needs a full-dimensional 3-polytope");
    }
    std::vector<int> vertex_pos(L.node_count(), -1);
    const auto& vertex_layer = L.faces_of_dim(0);
    for (size_t i = 0; i < vertex_layer.size(); ++i) {
        vertex_pos[static_cast<size_t>(vertex_layer[i])] = static_cast<int>(i);
    }

    std::ostringstream os;
    os << "OFF\n";
    os << vertex_layer.size() << " " << L.faces_of_dim(2).size() << " "
       << L.faces_of_dim(1).size() << "\n";
    os.precision(17);
    for (int v : vertex_layer) {
        const Vec& pt = L.vertex_point(v);
        os << pt[0].to_double() << " " << pt[1].to_double() << " " << pt[2].to_double() << "\n";
    }

    for (int fid : L.faces_of_dim(2)) {
        const FaceNode& facet = L.node(fid);
        const std::vector<Vec> pts = L.vertex_points(facet.vertex_ids);
        const Vec c = centroid(pts);
        const std::vector<Vec> basis = affine_basis(pts);

        // Ring order: sort by angle in the facet plane, then orient the
        // ring CCW as seen from outside.
        std::vector<size_t> order(pts.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        auto plane_coords = [&](size_t i) {
            return Vec{dot(pts[i] - c, basis[0]), dot(pts[i] - c, basis[1])};
        };
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            const Vec u = plane_coords(a);
            const Vec w = plane_coords(b);
            const int hu = u[1].sign() > 0 || (u[1].sign() == 0 && u[0].sign() > 0) ? 0 : 1;
            const int hw = w[1].sign() > 0 || (w[1].sign() == 0 && w[0].sign() > 0) ? 0 : 1;
            if (hu != hw) return hu < hw;
            return cross2(u, w).sign() > 0;
        });

        const Vec ring_normal = orthogonal_complement_1d(
            {pts[order[1]] - pts[order[0]], pts[order[2]] - pts[order[1]]});
        if (dot(ring_normal, facet_outward_normal(L, fid)).sign() < 0) {
            std::reverse(order.begin(), order.end());
        }
        os << pts.size();
        for (size_t i : order) {
            os << " " << vertex_pos[static_cast<size_t>(facet.vertex_ids[i])];
        }
        os << "\n";
    }
    return os.str();
}

void save_off(const Polytope& p, const std::string& path) {
    atomic_write(path, to_off(p));
}

}  // namespace minksum
