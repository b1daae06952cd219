#pragma once

/**
 * partner.hpp
 *
 * Constructive existence test for a reproducing partner.  Given a family
 * phi whose synthesis map is onto C^d, pick an orthonormal basis {u_n} and
 * the minimal-norm coefficient solutions of
 *
 *     synthesize(phi, xi_n) = u_n,
 *
 * then assemble the partner family psi_{x_i} = sum_n conj(xi_n(x_i)) u_n.
 * By construction S_{psi,phi} is the identity, so (psi, phi) is a
 * reproducing pair of the model space.  The report carries the two
 * diagnostics whose boundedness is the genuinely restrictive condition in
 * refinement studies: the coefficient norms ||xi_n|| and the pointwise
 * sums sum_n |xi_n(x_i)|^2.
 */

#include "framepair/core.hpp"
#include "framepair/family.hpp"
#include "framepair/operators.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace framepair {

struct PartnerReport {
    VectorFamily psi;                 // candidate partner (least-squares built)
    RealVec coefficient_norm_rows;    // ||xi_n||_{L2(mu)} per basis row n
    RealVec pointwise_sums;           // sum_n |xi_n(x_i)|^2 per grid point i
    bool feasible = false;            // synthesis map onto C^d at tolerance
};

// Builds the candidate partner.  basis, when given, must be orthonormal for
// the family metric (columns u_n with <u_n, u_m> = delta_{nm}); it defaults
// to the metric-normalized standard basis.  Rank decisions use the relative
// threshold tol.  An underfilled family is reported infeasible, not thrown.
inline PartnerReport construct_partner(const VectorFamily& phi, const Mat* basis = nullptr,
                                       double tol = kDefaultRankTol) {
    require(tol > 0.0, "construct_partner: tolerance must be positive");
    const Eigen::Index d = phi.dim();

    Mat u_b;
    if (basis) {
        require(basis->rows() == d && basis->cols() == d,
                "construct_partner: basis must be d x d");
        Mat gram = *basis;
        detail::scale_rows(gram, phi.metric());
        gram = basis->adjoint() * gram;
        require((gram - Mat::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-10,
                "construct_partner: basis columns must be orthonormal in the family metric");
        u_b = *basis;
    } else {
        u_b = Mat::Zero(d, d);
        for (Eigen::Index k = 0; k < d; ++k)
            u_b(k, k) = cxd(1.0 / std::sqrt(phi.metric()(k)), 0.0);
    }

    Mat b = detail::weighted_synthesis_array(phi);
    Eigen::BDCSVD<Mat> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVec& sv = svd.singularValues();
    Eigen::Index rank = 0;
    const double cut = (sv.size() && sv(0) > 0.0) ? tol * sv(0) : 0.0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > cut && sv(k) > 0.0) ++rank;
    const bool feasible = (rank == d);

    // Minimal-norm solutions through the pseudo-inverse, assembled for all
    // basis vectors at once: coeff column n solves synthesize = u_n.
    Mat rhs = u_b;
    detail::scale_rows(rhs, phi.metric().cwiseSqrt());       // G^{1/2} u_n
    Mat proj = svd.matrixU().adjoint() * rhs;                 // r x d
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        const double s = sv(k);
        proj.row(k) *= (s > cut && s > 0.0) ? cxd(1.0 / s, 0.0) : cxd(0.0, 0.0);
    }
    Mat coeff = svd.matrixV() * proj;                         // N x d
    detail::scale_rows(coeff, phi.grid().weights().cwiseSqrt().cwiseInverse());

    RealVec row_norms(d);
    for (Eigen::Index n = 0; n < d; ++n)
        row_norms(n) = std::sqrt(
            (coeff.col(n).array().abs2() * phi.grid().weights().array()).sum());
    RealVec point_sums = coeff.cwiseAbs2().rowwise().sum();

    VectorFamily psi(phi.grid(), u_b * coeff.adjoint(), phi.metric());
    return PartnerReport{std::move(psi), std::move(row_norms), std::move(point_sums),
                         feasible};
}

enum class TrendVerdict { stable, diverging };

inline std::string to_string(TrendVerdict v) {
    return v == TrendVerdict::diverging ? "diverging" : "stable";
}

struct PartnerTrend {
    std::vector<double> max_row_norms;       // per level
    std::vector<double> max_pointwise_sums;  // per level
    std::vector<bool> feasible;              // per level
    TrendVerdict verdict = TrendVerdict::stable;
};

// Runs construct_partner on each refinement level and flags divergence when
// both diagnostics grow by at least growth_factor at every transition.
inline PartnerTrend partner_feasibility_trend(const std::vector<VectorFamily>& levels,
                                              double growth_factor = 1.5,
                                              double tol = kDefaultRankTol) {
    require(!levels.empty(), "partner_feasibility_trend: at least one level required");
    require(growth_factor > 1.0, "partner_feasibility_trend: growth factor must exceed 1");
    PartnerTrend t;
    for (const auto& fam : levels) {
        PartnerReport rep = construct_partner(fam, nullptr, tol);
        t.max_row_norms.push_back(rep.coefficient_norm_rows.maxCoeff());
        t.max_pointwise_sums.push_back(rep.pointwise_sums.maxCoeff());
        t.feasible.push_back(rep.feasible);
    }
    bool diverging = levels.size() >= 2;
    for (std::size_t l = 1; l < levels.size(); ++l) {
        const bool grew = t.max_row_norms[l] >= growth_factor * t.max_row_norms[l - 1] &&
                          t.max_pointwise_sums[l] >=
                              growth_factor * t.max_pointwise_sums[l - 1];
        if (!t.feasible[l] || !t.feasible[l - 1] || !grew) diverging = false;
    }
    t.verdict = diverging ? TrendVerdict::diverging : TrendVerdict::stable;
    return t;
}

}  // namespace framepair
