#pragma once

// Explicit hyperboloid-model realization of the suspension S(t).
//
// The star lies in the plane x3 = 0 around C = (1, 0, 0, 0). A_k sits at
// distance p(t) and azimuth 2 pi k / n, B_k at distance q(t) and azimuth
// (2k + 1) pi / n, and the poles N, S at distance h(t) along +-x3. The faces
// are the 4n lateral triangles of the two pyramids; the common base is not
// part of the surface and C is kept only as metadata.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypflex/hyp_kernel.hpp"
#include "hypflex/minkowski.hpp"
#include "hypflex/tetra_metrics.hpp"

namespace hypflex {

enum class EdgeClass { equator, apex_a, apex_b };

const char* to_string(EdgeClass c);

struct EdgeRecord {
    EdgeClass cls = EdgeClass::equator;
    std::array<int, 2> vertices{};
    std::array<int, 2> faces{};  // faces[0] traverses vertices[0] -> vertices[1]
    double length = 0.0;
    double dihedral = 0.0;  // interior dihedral angle of the surface, in (0, 2 pi)
};

using Face = std::array<int, 3>;

struct MeshOptions {
    /// Extra azimuth added to every B_k. Nonzero values leave the suspension
    /// family; large ones fold petals over their neighbours.
    double petal_twist = 0.0;
};

struct SuspensionMesh {
    SuspensionParams params;
    FlexVelocities velocities;
    double t = 0.0;
    MeshOptions options;
    MinkowskiPoint center = hyperboloid_origin();
    std::vector<MinkowskiPoint> vertices;
    std::vector<std::string> vertex_names;
    std::vector<Face> faces;  // oriented with outward normals
    std::vector<EdgeRecord> edges;

    int n() const { return params.n; }
    static constexpr int north() { return 0; }
    static constexpr int south() { return 1; }
    int a_index(int k) const { return 2 + ((k % n()) + n()) % n(); }
    int b_index(int k) const { return 2 + n() + ((k % n()) + n()) % n(); }

    int euler_characteristic() const
    {
        return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
    }
};

SuspensionMesh build_mesh(const SuspensionParams& params, const FlexVelocities& vel, double t,
                          const MeshOptions& options = {});

/// Interior dihedral angle along the edge p -> q between the faces (p, q, r1)
/// and (q, p, r2), both oriented with outward normals. Measured from normals in
/// the tangent space at p; values above pi mean a reflex edge.
Angle<double> interior_dihedral(const MinkowskiPoint& p, const MinkowskiPoint& q, const MinkowskiPoint& r1,
                                const MinkowskiPoint& r2);

/// Dihedral angle of the mesh at edge index `edge`, recomputed from vertex
/// coordinates.
Angle<double> dihedral_from_normals(const SuspensionMesh& mesh, int edge);

/// Outward unit normal of a face, in the tangent space at its first vertex.
Eigen::Vector4d face_normal(const SuspensionMesh& mesh, int face);

struct EmbeddingReport {
    bool embedded = true;
    std::optional<std::array<int, 2>> violating_faces;
    std::string detail;
    long pairs_tested = 0;
};

inline constexpr double kIntersectionEpsilon = 1e-12;

/// Self-intersection test in the Klein model, where faces are flat Euclidean
/// triangles. Non-adjacent face pairs use a full triangle-triangle test;
/// pairs sharing a vertex or an edge only count contact away from the shared
/// simplex.
EmbeddingReport check_embedding(const SuspensionMesh& mesh, double eps = kIntersectionEpsilon);

enum class MeshFormat { json, obj };

MeshFormat parse_mesh_format(const std::string& s);

/// JSON carries hyperboloid coordinates, edge records, parameters and t with
/// 17 significant digits; OBJ carries Klein coordinates and 1-based faces.
void export_mesh(const SuspensionMesh& mesh, MeshFormat format, std::ostream& out);
std::string export_mesh(const SuspensionMesh& mesh, MeshFormat format);

/// Reads back the JSON form written by export_mesh.
SuspensionMesh import_mesh_json(const std::string& text);

}  // namespace hypflex
