#pragma once

#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sloshing/common.hpp"
#include "sloshing/config.hpp"

namespace sloshing {

/// Conforming triangulation of the cross-section.  Boundary edges are tagged
/// sloshing (on y = 0) or wall.
struct TriangleMesh {
    struct BoundaryEdge {
        int a = 0;
        int b = 0;
        bool sloshing = false;
    };

    std::vector<std::array<double, 2>> vertices;
    std::vector<std::array<int, 3>> cells;
    std::vector<BoundaryEdge> boundary_edges;
    double h = 0.0;
    double grading = 1.0;
};

namespace detail {

/// Graded subdivision of [0,1] into n intervals: spacing shrinks by the given
/// factor inside the refined fraction (0.1) of each requested end.
inline std::vector<double> graded_points(int n, double grading, bool refine_start,
                                         bool refine_end) {
    std::vector<double> pts(static_cast<std::size_t>(n) + 1, 0.0);
    double total = 0.0;
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = (i + 0.5) / n;
        const bool fine = (refine_start && t < 0.1) || (refine_end && t > 0.9);
        w[static_cast<std::size_t>(i)] = fine ? 1.0 / grading : 1.0;
        total += w[static_cast<std::size_t>(i)];
    }
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += w[static_cast<std::size_t>(i)];
        pts[static_cast<std::size_t>(i) + 1] = acc / total;
    }
    pts.back() = 1.0;
    return pts;
}

inline double signed_area(const std::array<double, 2>& a, const std::array<double, 2>& b,
                          const std::array<double, 2>& c) {
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

}  // namespace detail

/// Structured mesh of the triangle (0,0), (L,0), apex.  Rows of nodes run
/// between the two walls toward the apex; spacing is refined by `grading`
/// near the two surface corners and near the surface itself.
inline TriangleMesh generate_mesh(const PrismConfig& cfg, double h, double grading = 1.0) {
    if (!(h > 0.0)) fail(ErrorCode::DomainError, "generate_mesh: h must be positive");
    if (!(grading >= 1.0)) fail(ErrorCode::DomainError, "generate_mesh: grading must be >= 1");
    const auto apex = triangle_apex(cfg);
    if (!(apex[1] < 0.0))
        fail(ErrorCode::DegenerateTriangle, "generate_mesh: walls do not meet below the surface");

    // Extra resolution compensates for the coarse part of the graded spacing.
    const double budget = 0.8 + 0.2 * grading;
    const int N = std::max(2, static_cast<int>(std::ceil(cfg.L * budget / h)));

    TriangleMesh mesh;
    mesh.h = h;
    mesh.grading = grading;

    const std::vector<double> depth = detail::graded_points(N, grading, true, false);
    std::vector<int> row_offset(static_cast<std::size_t>(N) + 1, 0);
    for (int j = 0; j <= N; ++j) {
        row_offset[static_cast<std::size_t>(j)] = static_cast<int>(mesh.vertices.size());
        const double v = depth[static_cast<std::size_t>(j)];
        // Chord between the two walls at depth fraction v.
        const std::array<double, 2> left{v * apex[0], v * apex[1]};
        const std::array<double, 2> right{cfg.L + v * (apex[0] - cfg.L), v * apex[1]};
        const int cols = N - j;
        if (cols == 0) {
            mesh.vertices.push_back({apex[0], apex[1]});
            continue;
        }
        const std::vector<double> along = detail::graded_points(cols, grading, true, true);
        for (int k = 0; k <= cols; ++k) {
            const double s = along[static_cast<std::size_t>(k)];
            mesh.vertices.push_back(
                {left[0] + s * (right[0] - left[0]), left[1] + s * (right[1] - left[1])});
        }
    }

    auto idx = [&](int j, int k) { return row_offset[static_cast<std::size_t>(j)] + k; };
    for (int j = 0; j < N; ++j) {
        const int cols = N - j;
        for (int k = 0; k < cols; ++k) {
            std::array<int, 3> lower{idx(j, k), idx(j, k + 1), idx(j + 1, k)};
            if (detail::signed_area(mesh.vertices[static_cast<std::size_t>(lower[0])],
                                    mesh.vertices[static_cast<std::size_t>(lower[1])],
                                    mesh.vertices[static_cast<std::size_t>(lower[2])]) < 0.0)
                std::swap(lower[1], lower[2]);
            mesh.cells.push_back(lower);
            if (k + 1 < cols) {
                std::array<int, 3> upper{idx(j, k + 1), idx(j + 1, k + 1), idx(j + 1, k)};
                if (detail::signed_area(mesh.vertices[static_cast<std::size_t>(upper[0])],
                                        mesh.vertices[static_cast<std::size_t>(upper[1])],
                                        mesh.vertices[static_cast<std::size_t>(upper[2])]) < 0.0)
                    std::swap(upper[1], upper[2]);
                mesh.cells.push_back(upper);
            }
        }
    }

    for (int k = 0; k < N; ++k)
        mesh.boundary_edges.push_back({idx(0, k), idx(0, k + 1), true});
    for (int j = 0; j < N; ++j) {
        mesh.boundary_edges.push_back({idx(j, 0), idx(j + 1, 0), false});
        mesh.boundary_edges.push_back({idx(j, N - j), idx(j + 1, N - j - 1), false});
    }
    return mesh;
}

inline void write_mesh(std::ostream& out, const TriangleMesh& mesh) {
    out << mesh.vertices.size() << "\n";
    out.precision(17);
    for (const auto& v : mesh.vertices) out << v[0] << " " << v[1] << "\n";
    out << mesh.cells.size() << "\n";
    for (const auto& c : mesh.cells) out << c[0] << " " << c[1] << " " << c[2] << "\n";
    out << mesh.boundary_edges.size() << "\n";
    for (const auto& e : mesh.boundary_edges)
        out << e.a << " " << e.b << " " << (e.sloshing ? "S" : "W") << "\n";
}

inline TriangleMesh read_mesh(std::istream& in) {
    TriangleMesh mesh;
    std::size_t nv = 0, nc = 0, nb = 0;
    if (!(in >> nv)) fail(ErrorCode::DomainError, "read_mesh: malformed vertex count");
    mesh.vertices.resize(nv);
    for (auto& v : mesh.vertices)
        if (!(in >> v[0] >> v[1])) fail(ErrorCode::DomainError, "read_mesh: malformed vertex");
    if (!(in >> nc)) fail(ErrorCode::DomainError, "read_mesh: malformed cell count");
    mesh.cells.resize(nc);
    for (auto& c : mesh.cells)
        if (!(in >> c[0] >> c[1] >> c[2])) fail(ErrorCode::DomainError, "read_mesh: malformed cell");
    if (!(in >> nb)) fail(ErrorCode::DomainError, "read_mesh: malformed boundary count");
    mesh.boundary_edges.resize(nb);
    for (auto& e : mesh.boundary_edges) {
        std::string tag;
        if (!(in >> e.a >> e.b >> tag) || (tag != "S" && tag != "W"))
            fail(ErrorCode::DomainError, "read_mesh: malformed boundary edge");
        e.sloshing = (tag == "S");
    }
    return mesh;
}

}  // namespace sloshing
