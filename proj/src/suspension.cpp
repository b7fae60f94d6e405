#include "hypflex/suspension.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hypflex/format.hpp"

namespace hypflex {

const char* to_string(EdgeClass c)
{
    switch (c) {
    case EdgeClass::equator: return "equator";
    case EdgeClass::apex_a: return "apex_a";
    case EdgeClass::apex_b: return "apex_b";
    }
    return "?";
}

namespace {

EdgeClass parse_edge_class(const std::string& s)
{
    if (s == "equator") return EdgeClass::equator;
    if (s == "apex_a") return EdgeClass::apex_a;
    if (s == "apex_b") return EdgeClass::apex_b;
    throw std::invalid_argument("unknown edge class '" + s + "'");
}

// Sign that turns lorentz_normal(v0, v1, v2) into the outward normal for the
// face orientation used below (counterclockwise seen from outside).
constexpr double kOutward = 1.0;

Eigen::Vector4d outward_normal(const MinkowskiPoint& a, const MinkowskiPoint& b, const MinkowskiPoint& c)
{
    return kOutward * normalize_spacelike(lorentz_normal(a, b, c));
}

void fill_edges(SuspensionMesh& mesh)
{
    const int n = mesh.n();
    std::map<std::pair<int, int>, int> index;
    mesh.edges.clear();
    for (int f = 0; f < static_cast<int>(mesh.faces.size()); ++f) {
        const Face& face = mesh.faces[f];
        for (int i = 0; i < 3; ++i) {
            const int u = face[i];
            const int v = face[(i + 1) % 3];
            const auto key = std::minmax(u, v);
            auto it = index.find(key);
            if (it == index.end()) {
                EdgeRecord e;
                e.vertices = {u, v};
                e.faces = {f, -1};
                const bool pole = u < 2 || v < 2;
                const int star = std::max(u, v);
                if (!pole)
                    e.cls = EdgeClass::equator;
                else
                    e.cls = star < 2 + n ? EdgeClass::apex_a : EdgeClass::apex_b;
                index.emplace(key, static_cast<int>(mesh.edges.size()));
                mesh.edges.push_back(e);
            } else {
                EdgeRecord& e = mesh.edges[it->second];
                if (e.faces[1] != -1 || e.vertices[0] != v)
                    throw GeometryError("mesh is not a consistently oriented closed surface");
                e.faces[1] = f;
            }
        }
    }
    for (int i = 0; i < static_cast<int>(mesh.edges.size()); ++i) {
        EdgeRecord& e = mesh.edges[i];
        if (e.faces[1] == -1) throw GeometryError("boundary edge in suspension mesh");
        e.length = hyp_distance(mesh.vertices[e.vertices[0]], mesh.vertices[e.vertices[1]]);
        e.dihedral = dihedral_from_normals(mesh, i).radians();
    }
}

int third_vertex(const Face& f, int u, int v)
{
    for (int x : f)
        if (x != u && x != v) return x;
    throw GeometryError("face does not contain the edge");
}

}  // namespace

SuspensionMesh build_mesh(const SuspensionParams& params, const FlexVelocities& vel, double t,
                          const MeshOptions& options)
{
    params.validate();
    const auto legs = deformed_legs(params, vel, t);
    const double h = legs.h.value;
    const double p = legs.p.value;
    const double q = legs.q.value;
    const int n = params.n;

    SuspensionMesh mesh;
    mesh.params = params;
    mesh.velocities = vel;
    mesh.t = t;
    mesh.options = options;
    mesh.vertices.resize(2 + 2 * n);
    mesh.vertex_names.resize(2 + 2 * n);

    mesh.vertices[SuspensionMesh::north()] = point_at(h, {0.0, 0.0, 1.0});
    mesh.vertices[SuspensionMesh::south()] = point_at(h, {0.0, 0.0, -1.0});
    mesh.vertex_names[0] = "N";
    mesh.vertex_names[1] = "S";
    for (int k = 0; k < n; ++k) {
        const double az_a = 2.0 * std::numbers::pi * k / n;
        const double az_b = (2.0 * k + 1.0) * std::numbers::pi / n + options.petal_twist;
        mesh.vertices[mesh.a_index(k)] = point_at(p, {std::cos(az_a), std::sin(az_a), 0.0});
        mesh.vertices[mesh.b_index(k)] = point_at(q, {std::cos(az_b), std::sin(az_b), 0.0});
        mesh.vertex_names[mesh.a_index(k)] = "A" + std::to_string(k + 1);
        mesh.vertex_names[mesh.b_index(k)] = "B" + std::to_string(k + 1);
    }

    constexpr int N = SuspensionMesh::north();
    constexpr int S = SuspensionMesh::south();
    for (int k = 0; k < n; ++k) {
        const int a0 = mesh.a_index(k);
        const int b0 = mesh.b_index(k);
        const int a1 = mesh.a_index(k + 1);
        mesh.faces.push_back({a0, b0, N});
        mesh.faces.push_back({b0, a1, N});
    }
    for (int k = 0; k < n; ++k) {
        const int a0 = mesh.a_index(k);
        const int b0 = mesh.b_index(k);
        const int a1 = mesh.a_index(k + 1);
        mesh.faces.push_back({b0, a0, S});
        mesh.faces.push_back({a1, b0, S});
    }
    fill_edges(mesh);
    return mesh;
}

Angle<double> interior_dihedral(const MinkowskiPoint& p, const MinkowskiPoint& q, const MinkowskiPoint& r1,
                                const MinkowskiPoint& r2)
{
    const Eigen::Vector4d e = tangent_toward(p, q);
    auto across = [&](const MinkowskiPoint& r) {
        const Eigen::Vector4d d = tangent_toward(p, r);
        return normalize_spacelike(d - minkowski_dot(d, e) * e);
    };
    const Eigen::Vector4d t1 = across(r1);
    const Eigen::Vector4d t2 = across(r2);
    const Eigen::Vector4d n1 = outward_normal(p, q, r1);
    // Rotating t1 toward the interior (-n1) by the dihedral angle lands on t2.
    return {-minkowski_dot(t2, n1), minkowski_dot(t2, t1)};
}

Angle<double> dihedral_from_normals(const SuspensionMesh& mesh, int edge)
{
    const EdgeRecord& e = mesh.edges.at(static_cast<std::size_t>(edge));
    if (e.faces[0] < 0 || e.faces[1] < 0) throw GeometryError("edge does not have two incident faces");
    const int u = e.vertices[0];
    const int v = e.vertices[1];
    const int r1 = third_vertex(mesh.faces[e.faces[0]], u, v);
    const int r2 = third_vertex(mesh.faces[e.faces[1]], u, v);
    const auto& X = mesh.vertices;
    for (int f : e.faces) {
        const Face& face = mesh.faces[f];
        const Eigen::Vector4d nrm = lorentz_normal(X[face[0]], X[face[1]], X[face[2]]);
        if (!(minkowski_dot(nrm, nrm) > 1e-24)) throw GeometryError("degenerate face");
    }
    return interior_dihedral(X[u], X[v], X[r1], X[r2]);
}

Eigen::Vector4d face_normal(const SuspensionMesh& mesh, int face)
{
    const Face& f = mesh.faces.at(static_cast<std::size_t>(face));
    return outward_normal(mesh.vertices[f[0]], mesh.vertices[f[1]], mesh.vertices[f[2]]);
}

// Embedding ----------------------------------------------------------------

namespace {

using V3 = Eigen::Vector3d;

struct Tri {
    V3 a, b, c;
    V3 normal() const { return (b - a).cross(c - a); }
};

// Signed distance of x from the plane of t.
double plane_distance(const Tri& t, const V3& x)
{
    const V3 nrm = t.normal();
    return nrm.dot(x - t.a) / nrm.norm();
}

bool point_in_triangle(const V3& x, const Tri& t, double eps)
{
    const V3 nrm = t.normal();
    const double area2 = nrm.squaredNorm();
    const double l0 = (t.c - t.b).cross(x - t.b).dot(nrm) / area2;
    const double l1 = (t.a - t.c).cross(x - t.c).dot(nrm) / area2;
    const double l2 = (t.b - t.a).cross(x - t.a).dot(nrm) / area2;
    return l0 >= -eps && l1 >= -eps && l2 >= -eps;
}

int dominant_axis(const V3& v)
{
    int k = 0;
    v.cwiseAbs().maxCoeff(&k);
    return k;
}

Eigen::Vector2d drop(const V3& x, int axis)
{
    return axis == 0 ? Eigen::Vector2d(x[1], x[2]) : axis == 1 ? Eigen::Vector2d(x[0], x[2]) : Eigen::Vector2d(x[0], x[1]);
}

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

bool segments_cross_2d(const Eigen::Vector2d& p, const Eigen::Vector2d& q, const Eigen::Vector2d& r,
                       const Eigen::Vector2d& s, double eps)
{
    const double d1 = cross2(q - p, r - p);
    const double d2 = cross2(q - p, s - p);
    const double d3 = cross2(s - r, p - r);
    const double d4 = cross2(s - r, q - r);
    if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
        return true;
    auto on_segment = [eps](const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& x, double d) {
        return std::abs(d) <= eps && x[0] >= std::min(a[0], b[0]) - eps && x[0] <= std::max(a[0], b[0]) + eps &&
               x[1] >= std::min(a[1], b[1]) - eps && x[1] <= std::max(a[1], b[1]) + eps;
    };
    return on_segment(p, q, r, d1) || on_segment(p, q, s, d2) || on_segment(r, s, p, d3) || on_segment(r, s, q, d4);
}

bool coplanar_segment_hits(const V3& p, const V3& q, const Tri& t, double eps)
{
    if (point_in_triangle(p, t, eps) || point_in_triangle(q, t, eps)) return true;
    const int axis = dominant_axis(t.normal());
    const auto P = drop(p, axis), Q = drop(q, axis);
    const auto A = drop(t.a, axis), B = drop(t.b, axis), C = drop(t.c, axis);
    return segments_cross_2d(P, Q, A, B, eps) || segments_cross_2d(P, Q, B, C, eps) ||
           segments_cross_2d(P, Q, C, A, eps);
}

bool segment_hits_triangle(const V3& p, const V3& q, const Tri& t, double eps)
{
    const double dp = plane_distance(t, p);
    const double dq = plane_distance(t, q);
    if ((dp > eps && dq > eps) || (dp < -eps && dq < -eps)) return false;
    if (std::abs(dp) <= eps && std::abs(dq) <= eps) return coplanar_segment_hits(p, q, t, eps);
    const V3 x = p + dp / (dp - dq) * (q - p);
    return point_in_triangle(x, t, eps);
}

bool triangles_intersect(const Tri& s, const Tri& t, double eps)
{
    const std::array<std::pair<V3, V3>, 3> es{{{s.a, s.b}, {s.b, s.c}, {s.c, s.a}}};
    const std::array<std::pair<V3, V3>, 3> et{{{t.a, t.b}, {t.b, t.c}, {t.c, t.a}}};
    for (const auto& [p, q] : es)
        if (segment_hits_triangle(p, q, t, eps)) return true;
    for (const auto& [p, q] : et)
        if (segment_hits_triangle(p, q, s, eps)) return true;
    return false;
}

// Rotates the face so that the listed shared vertices come first.
Tri arrange(const std::vector<KleinPoint>& k, const Face& f, const std::vector<int>& shared)
{
    std::array<int, 3> order{};
    int pos = 0;
    for (int s : shared) order[pos++] = s;
    for (int x : f)
        if (std::find(shared.begin(), shared.end(), x) == shared.end()) order[pos++] = x;
    return {k[order[0]], k[order[1]], k[order[2]]};
}

}  // namespace

EmbeddingReport check_embedding(const SuspensionMesh& mesh, double eps)
{
    std::vector<KleinPoint> k;
    k.reserve(mesh.vertices.size());
    for (const auto& x : mesh.vertices) k.push_back(to_klein(x));

    EmbeddingReport report;
    const int nf = static_cast<int>(mesh.faces.size());
    for (int i = 0; i < nf; ++i) {
        for (int j = i + 1; j < nf; ++j) {
            const Face& fi = mesh.faces[i];
            const Face& fj = mesh.faces[j];
            std::vector<int> shared;
            for (int x : fi)
                if (std::find(fj.begin(), fj.end(), x) != fj.end()) shared.push_back(x);
            ++report.pairs_tested;

            bool hit = false;
            std::string why;
            const Tri s = arrange(k, fi, shared);
            const Tri t = arrange(k, fj, shared);
            if (shared.empty()) {
                hit = triangles_intersect(s, t, eps);
                why = "disjoint faces intersect";
            } else if (shared.size() == 1) {
                // s = (V, X1, Y1), t = (V, X2, Y2): only the opposite edges can
                // cross the other face away from V, unless the faces are coplanar.
                hit = segment_hits_triangle(s.b, s.c, t, eps) || segment_hits_triangle(t.b, t.c, s, eps);
                if (!hit && std::abs(plane_distance(s, t.b)) <= eps && std::abs(plane_distance(s, t.c)) <= eps) {
                    const V3 inner_s = s.a + 1e-3 * (0.5 * (s.b + s.c) - s.a);
                    const V3 inner_t = t.a + 1e-3 * (0.5 * (t.b + t.c) - t.a);
                    hit = point_in_triangle(inner_s, t, -eps) || point_in_triangle(inner_t, s, -eps);
                }
                why = "faces sharing a vertex overlap";
            } else if (shared.size() == 2) {
                // Faces on a common edge only collide by folding onto each other.
                if (std::abs(plane_distance(s, t.c)) <= eps) {
                    const V3 e = s.b - s.a;
                    hit = e.cross(s.c - s.a).dot(e.cross(t.c - s.a)) > 0.0;
                }
                why = "faces sharing an edge fold onto each other";
            } else {
                hit = true;
                why = "duplicate face";
            }
            if (hit) {
                report.embedded = false;
                report.violating_faces = std::array<int, 2>{i, j};
                report.detail = why;
                return report;
            }
        }
    }
    return report;
}

// Export -------------------------------------------------------------------

MeshFormat parse_mesh_format(const std::string& s)
{
    if (s == "json") return MeshFormat::json;
    if (s == "obj") return MeshFormat::obj;
    throw std::invalid_argument("unknown mesh format '" + s + "' (expected json or obj)");
}

namespace {

std::string vec4(const Eigen::Vector4d& x)
{
    return "[" + fmt17(x[0]) + ", " + fmt17(x[1]) + ", " + fmt17(x[2]) + ", " + fmt17(x[3]) + "]";
}

void write_json(const SuspensionMesh& m, std::ostream& out)
{
    out << "{\n";
    out << "  \"format\": \"hypflex-suspension-mesh\",\n";
    out << "  \"version\": 1,\n";
    out << "  \"params\": {\"n\": " << m.params.n << ", \"h\": " << fmt17(m.params.h)
        << ", \"p\": " << fmt17(m.params.p) << ", \"q\": " << fmt17(m.params.q)
        << ", \"alpha\": " << fmt17(m.params.alpha) << "},\n";
    out << "  \"velocities\": {\"u\": " << fmt17(m.velocities.u) << ", \"v\": " << fmt17(m.velocities.v)
        << ", \"w\": " << fmt17(m.velocities.w) << "},\n";
    out << "  \"t\": " << fmt17(m.t) << ",\n";
    out << "  \"petal_twist\": " << fmt17(m.options.petal_twist) << ",\n";
    out << "  \"center\": " << vec4(m.center) << ",\n";
    out << "  \"vertices\": [\n";
    for (std::size_t i = 0; i < m.vertices.size(); ++i)
        out << "    {\"name\": \"" << m.vertex_names[i] << "\", \"x\": " << vec4(m.vertices[i]) << "}"
            << (i + 1 < m.vertices.size() ? ",\n" : "\n");
    out << "  ],\n";
    out << "  \"faces\": [\n";
    for (std::size_t i = 0; i < m.faces.size(); ++i)
        out << "    [" << m.faces[i][0] << ", " << m.faces[i][1] << ", " << m.faces[i][2] << "]"
            << (i + 1 < m.faces.size() ? ",\n" : "\n");
    out << "  ],\n";
    out << "  \"edges\": [\n";
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        const EdgeRecord& e = m.edges[i];
        out << "    {\"class\": \"" << to_string(e.cls) << "\", \"vertices\": [" << e.vertices[0] << ", "
            << e.vertices[1] << "], \"faces\": [" << e.faces[0] << ", " << e.faces[1]
            << "], \"length\": " << fmt17(e.length) << ", \"dihedral\": " << fmt17(e.dihedral) << "}"
            << (i + 1 < m.edges.size() ? ",\n" : "\n");
    }
    out << "  ]\n";
    out << "}\n";
}

void write_obj(const SuspensionMesh& m, std::ostream& out)
{
    out << "# hypflex suspension mesh, Klein model coordinates\n";
    out << "# n " << m.params.n << " h " << fmt17(m.params.h) << " p " << fmt17(m.params.p) << " q "
        << fmt17(m.params.q) << " t " << fmt17(m.t) << "\n";
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        const KleinPoint k = to_klein(m.vertices[i]);
        out << "v " << fmt17(k[0]) << " " << fmt17(k[1]) << " " << fmt17(k[2]) << "\n";
    }
    for (const Face& f : m.faces) out << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
}

}  // namespace

void export_mesh(const SuspensionMesh& mesh, MeshFormat format, std::ostream& out)
{
    if (format == MeshFormat::json)
        write_json(mesh, out);
    else
        write_obj(mesh, out);
    if (!out) throw std::runtime_error("failed to write mesh");
}

std::string export_mesh(const SuspensionMesh& mesh, MeshFormat format)
{
    std::ostringstream os;
    export_mesh(mesh, format, os);
    return os.str();
}

SuspensionMesh import_mesh_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    if (j.at("format") != "hypflex-suspension-mesh") throw std::invalid_argument("not a hypflex mesh file");
    auto vec = [](const nlohmann::json& a) {
        return Eigen::Vector4d(a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>(),
                               a.at(3).get<double>());
    };
    SuspensionMesh m;
    const auto& p = j.at("params");
    m.params = {p.at("n").get<int>(), p.at("h").get<double>(), p.at("p").get<double>(), p.at("q").get<double>(),
                p.at("alpha").get<double>()};
    const auto& v = j.at("velocities");
    m.velocities = {v.at("u").get<double>(), v.at("v").get<double>(), v.at("w").get<double>()};
    m.t = j.at("t").get<double>();
    m.options.petal_twist = j.at("petal_twist").get<double>();
    m.center = vec(j.at("center"));
    for (const auto& x : j.at("vertices")) {
        m.vertex_names.push_back(x.at("name").get<std::string>());
        m.vertices.push_back(vec(x.at("x")));
    }
    for (const auto& f : j.at("faces")) m.faces.push_back({f.at(0).get<int>(), f.at(1).get<int>(), f.at(2).get<int>()});
    for (const auto& e : j.at("edges")) {
        EdgeRecord r;
        r.cls = parse_edge_class(e.at("class").get<std::string>());
        r.vertices = {e.at("vertices").at(0).get<int>(), e.at("vertices").at(1).get<int>()};
        r.faces = {e.at("faces").at(0).get<int>(), e.at("faces").at(1).get<int>()};
        r.length = e.at("length").get<double>();
        r.dihedral = e.at("dihedral").get<double>();
        m.edges.push_back(r);
    }
    return m;
}

}  // namespace hypflex
