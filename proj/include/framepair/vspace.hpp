#pragma once

/**
 * vspace.hpp
 *
 * The coefficient space attached to a family phi.  A coefficient function
 * xi represents the Hilbert-space element synthesize(phi, xi); two
 * coefficient functions are equivalent when their synthesis images agree.
 * The norm, inner product and equality tests below all live on that
 * quotient:
 *
 *   v_norm(phi, xi)       = || synthesize(phi, xi) ||
 *   v_inner(phi, xi, eta) = < synthesize(phi, xi), synthesize(phi, eta) >
 *
 * dual_pairing is the plain weighted sesquilinear pairing between
 * coefficient functions, and dual_norm evaluates the functional norm of a
 * representer g over the quotient (the norm of its projection onto the
 * synthesis range).
 */

#include "framepair/core.hpp"
#include "framepair/family.hpp"
#include "framepair/operators.hpp"

#include <algorithm>
#include <cmath>

namespace framepair {

// Quotient norm of a coefficient function: the length of its synthesis image.
inline double v_norm(const VectorFamily& phi, const CoefficientFunction& xi) {
    return metric_norm(synthesize(phi, xi), phi.metric());
}

// Quotient inner product through the synthesis images.
inline cxd v_inner(const VectorFamily& phi, const CoefficientFunction& xi,
                   const CoefficientFunction& eta) {
    return metric_inner(synthesize(phi, xi), synthesize(phi, eta), phi.metric());
}

// Equality in the quotient: the synthesis images agree up to tol relative
// to max(1, v_norm(xi)).
inline bool quotient_equal(const VectorFamily& phi, const CoefficientFunction& xi,
                           const CoefficientFunction& eta, double tol = 1e-10) {
    require(tol > 0.0, "quotient_equal: tolerance must be positive");
    require(xi.size() == eta.size(), "quotient_equal: coefficient lengths differ");
    CoefficientFunction diff(xi.values() - eta.values());
    return v_norm(phi, diff) <= tol * std::max(1.0, v_norm(phi, xi));
}

// Weighted sesquilinear pairing sum_i w_i xi_i conj(eta_i).
inline cxd dual_pairing(const CoefficientFunction& xi, const CoefficientFunction& eta,
                        const MeasureGrid& grid) {
    require(xi.size() == grid.size() && eta.size() == grid.size(),
            "dual_pairing: coefficient lengths must match the grid");
    return (xi.values().array() * eta.values().conjugate().array() *
            grid.weights().array().cast<cxd>())
        .sum();
}

// Norm of the bounded functional xi -> <synthesize(phi, xi), g> on the
// quotient: the metric norm of the projection of g onto the closed
// synthesis range (the span of the family).  For a mu-total family this is
// just ||g||.
inline double dual_norm(const VectorFamily& phi, const Vec& g,
                        double tol = kDefaultRankTol) {
    if (g.size() != phi.dim())
        fail("dual_norm: vector has length " + std::to_string(g.size()) +
             " but the family expects dimension " + std::to_string(phi.dim()));
    Mat b = detail::weighted_synthesis_array(phi);
    Eigen::BDCSVD<Mat> svd(b, Eigen::ComputeThinU);
    const RealVec& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0.0;
    const double cut = tol * sv(0);
    Vec gn = phi.metric().cwiseSqrt().cast<cxd>().cwiseProduct(g);
    double norm2 = 0.0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) <= cut) continue;
        norm2 += std::norm(svd.matrixU().col(k).dot(gn));
    }
    return std::sqrt(norm2);
}

// Discrete Riesz-map primitive between coefficient spaces:
//   (R eta)_i = sum_j w_j eta_j <phi_{x_j}, phi_{x_i}>,
// i.e. analyze(phi, synthesize(phi, eta)).  psi names the companion family
// whose coefficient space receives the result; it must share the grid.
// The defining identity is  dual_pairing(xi, R eta) = v_inner(phi, xi, eta).
inline CoefficientFunction vspace_riesz_map(const VectorFamily& phi,
                                            const VectorFamily& psi,
                                            const CoefficientFunction& eta) {
    detail::require_compatible(phi, psi, "vspace_riesz_map");
    return analyze(phi, synthesize(phi, eta));
}

}  // namespace framepair
