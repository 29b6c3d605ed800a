#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "sloshing/common.hpp"
#include "sloshing/config.hpp"
#include "sloshing/mesh.hpp"

namespace sloshing {

/// Discrete pencil A x = sigma B x with A = stiffness + lambda_n^2 mass and
/// B the boundary mass supported on sloshing nodes.  Quadratic (P2) elements
/// by default: the sloshing eigenfunctions oscillate along the whole surface,
/// and the fourth-order eigenvalue accuracy of P2 is what keeps desk-scale
/// meshes within the validation tolerance at sigma ~ 10.
struct EigPencil {
    Eigen::SparseMatrix<double> A;
    Eigen::SparseMatrix<double> B;
    std::vector<int> sloshing_nodes;  // sorted, unique
};

namespace detail {

/// Degree-4 six-point triangle quadrature (barycentric points and weights,
/// weights summing to 1).
struct TriQuadPoint {
    double l0, l1, l2, w;
};

inline const std::array<TriQuadPoint, 6>& tri_quadrature() {
    static const std::array<TriQuadPoint, 6> rule = [] {
        const double a1 = 0.108103018168070, b1 = 0.445948490915965, w1 = 0.223381589678011;
        const double a2 = 0.816847572980459, b2 = 0.091576213509771, w2 = 0.109951743655322;
        return std::array<TriQuadPoint, 6>{{{a1, b1, b1, w1},
                                            {b1, a1, b1, w1},
                                            {b1, b1, a1, w1},
                                            {a2, b2, b2, w2},
                                            {b2, a2, b2, w2},
                                            {b2, b2, a2, w2}}};
    }();
    return rule;
}

}  // namespace detail

inline EigPencil assemble_pencil(const TriangleMesh& mesh, double lambda_n) {
    const int nv = static_cast<int>(mesh.vertices.size());

    // Assign one extra node to every cell edge (P2 midpoints).
    std::map<std::pair<int, int>, int> midpoint;
    auto mid_index = [&](int a, int b) {
        const std::pair<int, int> key = std::minmax(a, b);
        auto [it, inserted] = midpoint.try_emplace(key, nv + static_cast<int>(midpoint.size()));
        return it->second;
    };

    std::vector<Eigen::Triplet<double>> ta, tb;
    ta.reserve(mesh.cells.size() * 36);

    for (const auto& cell : mesh.cells) {
        const auto& p0 = mesh.vertices[static_cast<std::size_t>(cell[0])];
        const auto& p1 = mesh.vertices[static_cast<std::size_t>(cell[1])];
        const auto& p2 = mesh.vertices[static_cast<std::size_t>(cell[2])];
        const double area = detail::signed_area(p0, p1, p2);
        if (!(std::fabs(area) > 1e-16))
            fail(ErrorCode::SingularElement, "assemble_pencil: zero-area cell");
        // Constant gradients of the barycentric coordinates.
        const double gx[3] = {(p1[1] - p2[1]) / (2.0 * area), (p2[1] - p0[1]) / (2.0 * area),
                              (p0[1] - p1[1]) / (2.0 * area)};
        const double gy[3] = {(p2[0] - p1[0]) / (2.0 * area), (p0[0] - p2[0]) / (2.0 * area),
                              (p1[0] - p0[0]) / (2.0 * area)};
        const int dof[6] = {cell[0],
                            cell[1],
                            cell[2],
                            mid_index(cell[0], cell[1]),
                            mid_index(cell[1], cell[2]),
                            mid_index(cell[2], cell[0])};

        double ke[6][6] = {};
        for (const auto& qp : detail::tri_quadrature()) {
            const double l[3] = {qp.l0, qp.l1, qp.l2};
            // P2 basis values and gradients at the quadrature point.
            double phi[6], dphix[6], dphiy[6];
            for (int i = 0; i < 3; ++i) {
                phi[i] = l[i] * (2.0 * l[i] - 1.0);
                dphix[i] = (4.0 * l[i] - 1.0) * gx[i];
                dphiy[i] = (4.0 * l[i] - 1.0) * gy[i];
            }
            const int ea[3] = {0, 1, 2}, eb[3] = {1, 2, 0};
            for (int e = 0; e < 3; ++e) {
                phi[3 + e] = 4.0 * l[ea[e]] * l[eb[e]];
                dphix[3 + e] = 4.0 * (l[ea[e]] * gx[eb[e]] + l[eb[e]] * gx[ea[e]]);
                dphiy[3 + e] = 4.0 * (l[ea[e]] * gy[eb[e]] + l[eb[e]] * gy[ea[e]]);
            }
            const double wgt = qp.w * std::fabs(area);
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j)
                    ke[i][j] += wgt * (dphix[i] * dphix[j] + dphiy[i] * dphiy[j] +
                                       lambda_n * lambda_n * phi[i] * phi[j]);
        }
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) ta.emplace_back(dof[i], dof[j], ke[i][j]);
    }

    const int ndof = nv + static_cast<int>(midpoint.size());
    std::vector<char> on_surface(static_cast<std::size_t>(ndof), 0);
    for (const auto& edge : mesh.boundary_edges) {
        if (!edge.sloshing) continue;
        const int m = mid_index(edge.a, edge.b);
        on_surface[static_cast<std::size_t>(edge.a)] = 1;
        on_surface[static_cast<std::size_t>(edge.b)] = 1;
        on_surface[static_cast<std::size_t>(m)] = 1;
        const auto& pa = mesh.vertices[static_cast<std::size_t>(edge.a)];
        const auto& pb = mesh.vertices[static_cast<std::size_t>(edge.b)];
        const double len = std::hypot(pb[0] - pa[0], pb[1] - pa[1]);
        // 1D quadratic mass matrix over (end, end, midpoint).
        const int dof[3] = {edge.a, edge.b, m};
        const double me[3][3] = {{2.0 / 15.0, -1.0 / 30.0, 1.0 / 15.0},
                                 {-1.0 / 30.0, 2.0 / 15.0, 1.0 / 15.0},
                                 {1.0 / 15.0, 1.0 / 15.0, 8.0 / 15.0}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) tb.emplace_back(dof[i], dof[j], len * me[i][j]);
    }

    EigPencil pencil;
    pencil.A.resize(ndof, ndof);
    pencil.A.setFromTriplets(ta.begin(), ta.end());
    pencil.B.resize(ndof, ndof);
    pencil.B.setFromTriplets(tb.begin(), tb.end());
    for (int i = 0; i < ndof; ++i)
        if (on_surface[static_cast<std::size_t>(i)]) pencil.sloshing_nodes.push_back(i);
    return pencil;
}

/// Smallest `count` eigenvalues of A x = sigma B x.  B is rank-deficient, so
/// the interior unknowns are eliminated by the Schur complement onto the
/// sloshing nodes (the discrete Dirichlet-to-Neumann matrix) and the reduced
/// dense symmetric-definite problem is solved directly.
inline std::vector<double> solve_sloshing_modes(const EigPencil& pencil, int count) {
    const int nv = static_cast<int>(pencil.A.rows());
    const int ns = static_cast<int>(pencil.sloshing_nodes.size());
    if (count < 1) fail(ErrorCode::DomainError, "solve_sloshing_modes: count must be >= 1");
    if (count > ns)
        fail(ErrorCode::InsufficientModes,
             "solve_sloshing_modes: count exceeds the number of sloshing nodes");

    std::vector<int> where(static_cast<std::size_t>(nv), -1);
    for (int s = 0; s < ns; ++s) where[static_cast<std::size_t>(pencil.sloshing_nodes[s])] = s;
    std::vector<int> interior;
    interior.reserve(static_cast<std::size_t>(nv - ns));
    for (int i = 0; i < nv; ++i)
        if (where[static_cast<std::size_t>(i)] < 0) interior.push_back(i);
    const int ni = static_cast<int>(interior.size());
    std::vector<int> iwhere(static_cast<std::size_t>(nv), -1);
    for (int i = 0; i < ni; ++i) iwhere[static_cast<std::size_t>(interior[i])] = i;

    Eigen::MatrixXd Ass = Eigen::MatrixXd::Zero(ns, ns);
    std::vector<Eigen::Triplet<double>> tis, tii;
    for (int col = 0; col < nv; ++col) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(pencil.A, col); it; ++it) {
            const int r = static_cast<int>(it.row());
            const int c = col;
            const int rs = where[static_cast<std::size_t>(r)];
            const int cs = where[static_cast<std::size_t>(c)];
            if (rs >= 0 && cs >= 0) {
                Ass(rs, cs) += it.value();
            } else if (rs < 0 && cs >= 0) {
                tis.emplace_back(iwhere[static_cast<std::size_t>(r)], cs, it.value());
            } else if (rs < 0 && cs < 0) {
                tii.emplace_back(iwhere[static_cast<std::size_t>(r)],
                                 iwhere[static_cast<std::size_t>(c)], it.value());
            }
        }
    }
    Eigen::SparseMatrix<double> Ais(ni, ns);
    Ais.setFromTriplets(tis.begin(), tis.end());
    Eigen::SparseMatrix<double> Aii(ni, ni);
    Aii.setFromTriplets(tii.begin(), tii.end());

    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(Aii);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::FactorizationFailure, "solve_sloshing_modes: interior factorization failed");
    // Schur complement in column blocks so the dense interior solution never
    // holds more than a slice of A_II^{-1} A_IS at once.
    Eigen::MatrixXd dtn = Ass;
    const int block = 128;
    for (int c0 = 0; c0 < ns; c0 += block) {
        const int bc = std::min(block, ns - c0);
        const Eigen::MatrixXd rhs = Eigen::MatrixXd(Ais.middleCols(c0, bc));
        const Eigen::MatrixXd X = solver.solve(rhs);
        dtn.middleCols(c0, bc) -= Ais.transpose() * X;
    }
    dtn = 0.5 * (dtn + dtn.transpose().eval());

    Eigen::MatrixXd Bss = Eigen::MatrixXd::Zero(ns, ns);
    for (int col = 0; col < nv; ++col) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(pencil.B, col); it; ++it) {
            const int rs = where[static_cast<std::size_t>(it.row())];
            const int cs = where[static_cast<std::size_t>(col)];
            if (rs >= 0 && cs >= 0) Bss(rs, cs) += it.value();
        }
    }

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> eig(dtn, Bss);
    if (eig.info() != Eigen::Success)
        fail(ErrorCode::FactorizationFailure, "solve_sloshing_modes: reduced eigensolve failed");
    std::vector<double> sigmas;
    sigmas.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) sigmas.push_back(eig.eigenvalues()(k));
    return sigmas;
}

struct FemSpectrum {
    struct Entry {
        double sigma = 0.0;
        int n = 0;
        int k = 0;  // index within the fixed-n family
    };
    std::map<int, std::vector<double>> per_n;
    std::vector<Entry> merged;  // ascending
    double h = 0.0;
};

/// FEM sloshing eigenvalues below sigma_max: one pencil per transverse index
/// n, stopping once the smallest nonzero eigenvalue exceeds sigma_max.
inline FemSpectrum compute_fem_spectrum(const PrismConfig& cfg, double sigma_max, double h,
                                        double grading = 4.0) {
    if (!(sigma_max > 0.0)) fail(ErrorCode::DomainError, "compute_fem_spectrum: sigma_max <= 0");
    FemSpectrum spectrum;
    spectrum.h = h;
    const TriangleMesh mesh = generate_mesh(cfg, h, grading);
    for (int n = 0;; ++n) {
        const EigPencil pencil = assemble_pencil(mesh, cfg.lambda(n));
        const int ns = static_cast<int>(pencil.sloshing_nodes.size());
        std::vector<double> all = solve_sloshing_modes(pencil, ns);
        std::vector<double>& kept = spectrum.per_n[n];
        for (double s : all)
            if (s < sigma_max) kept.push_back(s);
        const double first_nonzero =
            (n == 0) ? (all.size() > 1 ? all[1] : sigma_max) : all.front();
        for (std::size_t k = 0; k < kept.size(); ++k)
            spectrum.merged.push_back({kept[k], n, static_cast<int>(k)});
        if (first_nonzero > sigma_max) break;
        if (kept.empty()) break;
    }
    std::sort(spectrum.merged.begin(), spectrum.merged.end(),
              [](const FemSpectrum::Entry& a, const FemSpectrum::Entry& b) {
                  if (a.sigma != b.sigma) return a.sigma < b.sigma;
                  if (a.n != b.n) return a.n < b.n;
                  return a.k < b.k;
              });
    return spectrum;
}

struct AlignmentReport {
    int offset = 0;            // quasi index j matches reference index j + offset
    bool stable = false;       // a median gap below 0.05 was found
    double median_gap = 0.0;   // over the interquartile slice of the overlap
    std::vector<double> gaps;  // per matched pair, quasi order
    int first_matched = -1;    // smallest j beyond which all gaps < tolerance
};

/// Aligns a quasi-eigenvalue list against a reference list by an integer
/// index offset chosen to minimize the median interquartile gap.
inline AlignmentReport match_spectra(const std::vector<double>& reference,
                                     const std::vector<double>& quasi,
                                     double tolerance = 1e-2) {
    if (reference.empty() || quasi.empty())
        fail(ErrorCode::DomainError, "match_spectra: empty spectrum");
    AlignmentReport best;
    double best_median = std::numeric_limits<double>::infinity();
    for (int J = -5; J <= 5; ++J) {
        std::vector<double> gaps;
        for (std::size_t j = 0; j < quasi.size(); ++j) {
            const long rj = static_cast<long>(j) + J;
            if (rj < 0 || rj >= static_cast<long>(reference.size())) continue;
            gaps.push_back(std::fabs(quasi[j] - reference[static_cast<std::size_t>(rj)]));
        }
        if (gaps.size() < 4) continue;
        // Median over the interquartile slice: the first entries differ
        // structurally (finitely many missing modes) and the last feel the
        // sigma_max cutoff, so both ends are excluded from the objective.
        std::vector<double> middle(gaps.begin() + static_cast<long>(gaps.size() / 4),
                                   gaps.begin() + static_cast<long>(3 * gaps.size() / 4));
        std::sort(middle.begin(), middle.end());
        const double median = middle[middle.size() / 2];
        if (median < best_median) {
            best_median = median;
            best.offset = J;
            best.median_gap = median;
            best.gaps = gaps;
        }
    }
    best.stable = best_median < 0.05;
    best.first_matched = -1;
    for (long j = static_cast<long>(best.gaps.size()) - 1; j >= 0; --j) {
        if (best.gaps[static_cast<std::size_t>(j)] >= tolerance) break;
        best.first_matched = static_cast<int>(j);
    }
    return best;
}

}  // namespace sloshing
