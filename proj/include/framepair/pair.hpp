#pragma once

/**
 * pair.hpp
 *
 * Reproducing-pair verdicts and the operator identities around them.  A
 * pair (psi, phi) reproduces when the mixed frame operator S_{psi,phi} is
 * boundedly invertible; on a finite model that is a singular-value
 * statement, so the verdict is driven by the operator singular values of
 * S and the admissible condition number kappa_max.
 */

#include "framepair/core.hpp"
#include "framepair/family.hpp"
#include "framepair/operators.hpp"

#include <Eigen/Eigenvalues>

#include <string>
#include <utility>
#include <vector>

namespace framepair {

enum class PairVerdict { reproducing_pair, singular, ill_conditioned };

inline const char* to_string(PairVerdict v) {
    switch (v) {
        case PairVerdict::reproducing_pair: return "reproducing_pair";
        case PairVerdict::singular: return "singular";
        case PairVerdict::ill_conditioned: return "ill_conditioned";
    }
    return "unknown";
}

struct PairReport {
    LinearMap S;               // coordinate matrix of S_{psi,phi}
    SpectralSummary summary;   // operator singular values w.r.t. the metric
    PairVerdict verdict = PairVerdict::singular;
    double tolerance_used = kDefaultRankTol;
    double kappa_max = kDefaultKappaMax;
};

// Decides the pair verdict: singular when sigma_min vanishes at the rank
// tolerance, ill_conditioned when cond exceeds kappa_max, reproducing_pair
// otherwise.
inline PairReport check_pair(const VectorFamily& psi, const VectorFamily& phi,
                             double kappa_max = kDefaultKappaMax,
                             double tol = kDefaultRankTol) {
    require(kappa_max >= 1.0, "check_pair: kappa_max must be at least 1");
    require(tol > 0.0, "check_pair: tolerance must be positive");
    detail::require_compatible(psi, phi, "check_pair");
    LinearMap s = mixed_frame_operator(psi, phi);
    SpectralSummary summary = operator_summary(s, phi.metric());
    PairVerdict verdict;
    if (summary.sigma_max <= 0.0 || summary.sigma_min <= tol * summary.sigma_max) {
        verdict = PairVerdict::singular;
    } else if (summary.cond > kappa_max) {
        verdict = PairVerdict::ill_conditioned;
    } else {
        verdict = PairVerdict::reproducing_pair;
    }
    return PairReport{std::move(s), summary, verdict, tol, kappa_max};
}

// Optimal constants in  m ||f|| <= || analyze-then-quotient image of f ||
// <= M ||f||: the extreme operator singular values of S_{psi,phi}.
inline FrameBounds hat_c_bounds(const VectorFamily& psi, const VectorFamily& phi) {
    detail::require_compatible(psi, phi, "hat_c_bounds");
    SpectralSummary s =
        operator_summary(mixed_frame_operator(psi, phi), phi.metric());
    return FrameBounds{s.sigma_min, s.sigma_max};
}

struct PartnerDecomposition {
    LinearMap A;          // invertible factor with theta ~ A psi
    VectorFamily theta0;  // defect family, annihilated by analysis against phi
    double residual;      // operator norm of S_{theta0,phi}
};

// Splits a second partner theta of phi as theta = A psi + theta0 with
// A = S_{phi,theta} (S_{psi,phi}^{-1})^*  (metric adjoint) and theta0 the
// remainder; for a true partner the residual vanishes.  Both (psi, phi)
// and (theta, phi) must be reproducing pairs.
inline PartnerDecomposition decompose_partner(const VectorFamily& theta,
                                              const VectorFamily& psi,
                                              const VectorFamily& phi,
                                              double kappa_max = kDefaultKappaMax,
                                              double tol = kDefaultRankTol) {
    detail::require_compatible(theta, phi, "decompose_partner");
    detail::require_compatible(psi, phi, "decompose_partner");
    PairReport base = check_pair(psi, phi, kappa_max, tol);
    if (base.verdict != PairVerdict::reproducing_pair)
        fail(std::string("decompose_partner: (psi, phi) is not a reproducing pair "
                         "(verdict ") +
             to_string(base.verdict) + ")");
    PairReport second = check_pair(theta, phi, kappa_max, tol);
    if (second.verdict != PairVerdict::reproducing_pair)
        fail(std::string("decompose_partner: (theta, phi) is not a reproducing pair "
                         "(verdict ") +
             to_string(second.verdict) + ")");

    Mat s_phi_theta = mixed_frame_operator(phi, theta).matrix();
    Mat s_inv = base.S.matrix().partialPivLu().solve(Mat::Identity(phi.dim(), phi.dim()));
    Mat a = s_phi_theta * detail::metric_adjoint(s_inv, phi.metric());

    VectorFamily theta0(theta.grid(), theta.vectors() - a * psi.vectors(), theta.metric());
    double residual =
        operator_summary(mixed_frame_operator(theta0, phi), phi.metric()).sigma_max;
    return PartnerDecomposition{LinearMap(std::move(a)), std::move(theta0), residual};
}

// Coefficient-space reproducing projector
//   K[i,j] = w_j <S_{psi,phi}^{-1} phi_{x_j}, psi_{x_i}>,
// the oblique projector onto the analysis range of psi along the synthesis
// kernel of phi.  Requires an invertible mixed frame operator.
inline LinearMap kernel_projection(const VectorFamily& psi, const VectorFamily& phi,
                                   double tol = kDefaultRankTol) {
    detail::require_compatible(psi, phi, "kernel_projection");
    LinearMap s = mixed_frame_operator(psi, phi);
    SpectralSummary summary = operator_summary(s, phi.metric());
    if (summary.sigma_max <= 0.0 || summary.sigma_min <= tol * summary.sigma_max)
        fail("kernel_projection: mixed frame operator is singular at tolerance " +
             std::to_string(tol));

    Mat synth = phi.vectors();                                   // d x N
    detail::scale_cols(synth, phi.grid().weights());
    Mat solved = s.matrix().partialPivLu().solve(synth);         // S^{-1} T_phi
    Mat an = psi.vectors().adjoint();                            // N x d
    detail::scale_cols(an, psi.metric());
    return LinearMap(an * solved);
}

struct ProjectorSpectrum {
    Eigen::Index zero_count = 0;
    Eigen::Index one_count = 0;
    double max_deviation = 0.0;   // largest distance to the nearest of {0, 1}
};

// Clusters the eigenvalues of a (possibly oblique) projector to {0, 1}.
// An eigenvalue further than snap_radius from both targets is a structural
// failure and throws.
inline ProjectorSpectrum projector_spectrum(const LinearMap& k, double snap_radius = 0.1) {
    Eigen::ComplexEigenSolver<Mat> es(k.matrix(), /*computeEigenvectors=*/false);
    require(es.info() == Eigen::Success, "projector_spectrum: eigensolver failed");
    ProjectorSpectrum out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const cxd lam = es.eigenvalues()(i);
        const double d0 = std::abs(lam);
        const double d1 = std::abs(lam - cxd(1.0, 0.0));
        const double dist = std::min(d0, d1);
        if (dist > snap_radius)
            fail("projector_spectrum: eigenvalue " + std::to_string(lam.real()) + "+" +
                 std::to_string(lam.imag()) + "i sits more than " +
                 std::to_string(snap_radius) + " from both 0 and 1");
        if (d0 <= d1) ++out.zero_count; else ++out.one_count;
        out.max_deviation = std::max(out.max_deviation, dist);
    }
    return out;
}

struct BesselDegeneracyReport {
    Eigen::Index complement_dim = 0;    // codim of the analysis range of psi
    MuIndependence phi_independence;    // synthesis kernel data for phi
    bool consistent = true;             // one-directional implication holds
    std::string note;
};

// For a verified pair: a nontrivial orthogonal complement of the analysis
// range of psi forces phi to be mu-dependent.  The converse direction is
// not decided by this check.
inline BesselDegeneracyReport bessel_degeneracy_check(const VectorFamily& psi,
                                                      const VectorFamily& phi,
                                                      double kappa_max = kDefaultKappaMax,
                                                      double tol = kDefaultRankTol) {
    PairReport rep = check_pair(psi, phi, kappa_max, tol);
    if (rep.verdict != PairVerdict::reproducing_pair)
        fail(std::string("bessel_degeneracy_check: (psi, phi) is not a reproducing "
                         "pair (verdict ") +
             to_string(rep.verdict) + ")");
    RealVec sv = detail::singular_values(detail::weighted_synthesis_array(psi));
    Eigen::Index rank = 0;
    if (sv.size() > 0 && sv(0) > 0.0) {
        const double cut = tol * sv(0);
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > cut) ++rank;
    }
    BesselDegeneracyReport out;
    out.complement_dim = psi.size() - rank;
    out.phi_independence = mu_independent(phi, tol);
    out.consistent = !(out.complement_dim > 0 && out.phi_independence.independent);
    out.note = (out.complement_dim > 0)
                   ? "analysis range of psi has a nontrivial complement; phi must be "
                     "mu-dependent (one-directional criterion)"
                   : "analysis range of psi fills the coefficient space; no conclusion "
                     "about phi";
    return out;
}

}  // namespace framepair
