#pragma once

/**
 * operators.hpp
 *
 * The analysis / synthesis machinery for a VectorFamily:
 *
 *   analyze(phi, f)_i  = <f, phi_{x_i}>                  (no quadrature weight)
 *   synthesize(phi, xi) = sum_i w_i xi_i phi_{x_i}
 *   S_{psi,phi} f       = sum_i w_i <f, psi_{x_i}> phi_{x_i}
 *
 * together with frame bounds, singular-value summaries and the two grid
 * rank diagnostics: mu_total (analysis map injective on C^d) and
 * mu_independent (synthesis map injective on coefficients).
 *
 * All rank and spectral decisions are made on the weighted synthesis array
 *   B = diag(sqrt(metric)) * vectors * diag(sqrt(weights)),
 * whose singular values squared are exactly the frame-operator eigenvalues;
 * this keeps frame_bounds, mu_total and mu_independent numerically
 * consistent (one decomposition, one tolerance discipline: a singular value
 * counts as zero iff sigma <= tol * sigma_max).
 */

#include "framepair/core.hpp"
#include "framepair/family.hpp"

#include <algorithm>
#include <string>

namespace framepair {

namespace detail {

inline void require_compatible(const VectorFamily& a, const VectorFamily& b,
                               const std::string& op) {
    if (a.dim() != b.dim())
        fail(op + ": families have different dimensions " + std::to_string(a.dim()) +
             " and " + std::to_string(b.dim()));
    if (!a.grid().same_as(b.grid()))
        fail(op + ": families live on different grids (" + std::to_string(a.size()) +
             " vs " + std::to_string(b.size()) + " points or unequal coordinates/weights)");
    if ((a.metric() - b.metric()).cwiseAbs().maxCoeff() > 1e-12)
        fail(op + ": families carry different metrics");
}

// m.row(k) *= s(k)
inline void scale_rows(Mat& m, const RealVec& s) {
    m.array().colwise() *= s.array().cast<cxd>();
}

// m.col(i) *= s(i)
inline void scale_cols(Mat& m, const RealVec& s) {
    m.array().rowwise() *= s.transpose().array().cast<cxd>();
}

// B = diag(sqrt(metric)) * vectors * diag(sqrt(weights)); the singular
// values of B are the metric singular values of the synthesis map.
inline Mat weighted_synthesis_array(const VectorFamily& fam) {
    Mat b = fam.vectors();
    scale_rows(b, fam.metric().cwiseSqrt());
    scale_cols(b, fam.grid().weights().cwiseSqrt());
    return b;
}

// Singular values in decreasing order.  Jacobi for small problems (it is
// the most accurate), divide-and-conquer beyond that.
inline RealVec singular_values(const Mat& m) {
    if (std::max(m.rows(), m.cols()) <= 96) {
        Eigen::JacobiSVD<Mat> svd(m);
        return svd.singularValues();
    }
    Eigen::BDCSVD<Mat> svd(m);
    return svd.singularValues();
}

// Metric adjoint of a coordinate matrix: A* = G^{-1} A^H G.
inline Mat metric_adjoint(const Mat& a, const RealVec& metric) {
    Mat r = a.adjoint();
    scale_rows(r, metric.cwiseInverse());
    scale_cols(r, metric);
    return r;
}

// Operator rewritten in metric-orthonormal coordinates, G^{1/2} A G^{-1/2};
// its singular values are the operator singular values with respect to the
// metric inner product.
inline Mat metric_normalized(const Mat& a, const RealVec& metric) {
    Mat r = a;
    scale_rows(r, metric.cwiseSqrt());
    scale_cols(r, metric.cwiseSqrt().cwiseInverse());
    return r;
}

inline SpectralSummary summary_from_singulars(const RealVec& sv) {
    const double smax = sv.size() ? sv(0) : 0.0;
    const double smin = sv.size() ? sv(sv.size() - 1) : 0.0;
    return SpectralSummary::from_extremes(std::max(smin, 0.0), std::max(smax, 0.0));
}

}  // namespace detail

// Analysis coefficients <f, phi_{x_i}> of f against every family member.
// Quadrature weights do not enter here; they belong to synthesis.
inline CoefficientFunction analyze(const VectorFamily& fam, const Vec& f) {
    if (f.size() != fam.dim())
        fail("analyze: vector has length " + std::to_string(f.size()) +
             " but the family expects dimension " + std::to_string(fam.dim()));
    Vec scaled = fam.metric().cast<cxd>().cwiseProduct(f);
    return CoefficientFunction(fam.vectors().adjoint() * scaled);
}

// Weighted superposition sum_i w_i xi_i phi_{x_i}.
inline Vec synthesize(const VectorFamily& fam, const CoefficientFunction& xi) {
    if (xi.size() != fam.size())
        fail("synthesize: coefficient length " + std::to_string(xi.size()) +
             " does not match grid size " + std::to_string(fam.size()));
    Vec weighted = fam.grid().weights().cast<cxd>().cwiseProduct(xi.values());
    return fam.vectors() * weighted;
}

// Coordinate matrix of S_{psi,phi} f = sum_i w_i <f, psi_{x_i}> phi_{x_i}.
// Families must share grid, dimension and metric.
inline LinearMap mixed_frame_operator(const VectorFamily& psi, const VectorFamily& phi) {
    detail::require_compatible(psi, phi, "mixed_frame_operator");
    Mat analysis = psi.vectors().adjoint();                      // N x d, row i = psi_i^H
    detail::scale_cols(analysis, psi.metric());                  // metric inner product
    detail::scale_rows(analysis, phi.grid().weights());          // quadrature weights
    return LinearMap(phi.vectors() * analysis);
}

struct FrameBounds {
    double lower = 0.0;   // optimal m with m ||f||^2 <= sum w |<f,phi>|^2
    double upper = 0.0;   // optimal M on the same quadratic form
};

// Extreme eigenvalues of the frame operator S_{phi,phi}, computed as
// squared extreme singular values of the weighted synthesis array.  When
// the grid has fewer points than the dimension the lower bound is zero.
inline FrameBounds frame_bounds(const VectorFamily& fam) {
    RealVec sv = detail::singular_values(detail::weighted_synthesis_array(fam));
    FrameBounds b;
    b.upper = sv.size() ? sv(0) * sv(0) : 0.0;
    if (fam.size() >= fam.dim() && sv.size() == fam.dim()) {
        const double smin = std::max(sv(sv.size() - 1), 0.0);
        b.lower = smin * smin;
    } else {
        b.lower = 0.0;
    }
    return b;
}

// Raw singular-value summary of a coordinate matrix.
inline SpectralSummary spectral_summary(const LinearMap& map) {
    return detail::summary_from_singulars(detail::singular_values(map.matrix()));
}

// Operator singular values with respect to the family metric.  Coincides
// with spectral_summary for the unit metric.
inline SpectralSummary operator_summary(const LinearMap& map, const RealVec& metric) {
    require(map.dim() == metric.size(), "operator_summary: dimension mismatch");
    return detail::summary_from_singulars(
        detail::singular_values(detail::metric_normalized(map.matrix(), metric)));
}

// mu-totality: no nonzero vector is orthogonal to every family member,
// i.e. the weighted synthesis array has full row rank at relative
// tolerance tol.
inline bool mu_total(const VectorFamily& fam, double tol = kDefaultRankTol) {
    require(tol > 0.0, "mu_total: tolerance must be positive");
    if (fam.size() < fam.dim()) return false;
    RealVec sv = detail::singular_values(detail::weighted_synthesis_array(fam));
    if (sv.size() == 0 || sv(0) <= 0.0) return false;
    return sv(fam.dim() - 1) > tol * sv(0);
}

struct MuIndependence {
    bool independent = false;      // synthesis map has trivial kernel
    Eigen::Index kernel_dim = 0;   // grid size minus numerical rank
};

// mu-independence: the synthesis map xi -> sum w_i xi_i phi_{x_i} is
// injective; kernel_dim counts the coefficient directions it annihilates.
inline MuIndependence mu_independent(const VectorFamily& fam, double tol = kDefaultRankTol) {
    require(tol > 0.0, "mu_independent: tolerance must be positive");
    RealVec sv = detail::singular_values(detail::weighted_synthesis_array(fam));
    Eigen::Index rank = 0;
    if (sv.size() > 0 && sv(0) > 0.0) {
        const double cut = tol * sv(0);
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > cut) ++rank;
    }
    MuIndependence r;
    r.kernel_dim = fam.size() - rank;
    r.independent = (r.kernel_dim == 0);
    return r;
}

}  // namespace framepair
