#pragma once

/**
 * scenarios.hpp
 *
 * Command implementations behind the CLI: the four analysis commands on
 * loaded families (pair-check, partner, kernel, classify) and the seven
 * named example scenarios (onb, riesz, weighted, gabor-finite,
 * cwt-gaussian, affine-cs, spherical).  Everything returns a Report plus an
 * exit code, so the shell surface stays a thin argument parser and the
 * acceptance suite can drive the same code paths in-process.
 *
 * Randomized pieces draw from a seeded generator with hand-rolled uniform
 * and Gaussian transforms, so identical seeds give byte-identical reports
 * on any platform.
 */

#include "framepair/classify.hpp"
#include "framepair/core.hpp"
#include "framepair/family.hpp"
#include "framepair/gallery.hpp"
#include "framepair/io.hpp"
#include "framepair/operators.hpp"
#include "framepair/pair.hpp"
#include "framepair/partner.hpp"
#include "framepair/report.hpp"
#include "framepair/vspace.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace framepair {

struct ScenarioOptions {
    Eigen::Index dim = 0;       // 0 = scenario default
    Eigen::Index levels = 0;    // 0 = scenario default
    double tol = kDefaultRankTol;
    double kappa_max = kDefaultKappaMax;
    long long seed = 0;
    std::string input;          // optional data file (spherical table)
};

struct CommandOutcome {
    Report report;
    int exit_code = 0;
};

namespace detail {

// Deterministic uniform/Gaussian source on top of the standardized
// mt19937_64 stream; std::*_distribution is implementation-defined, so the
// transforms are spelled out here.
class PortableRng {
public:
    explicit PortableRng(long long seed) : rng_(std::uint64_t(seed)) {}

    double uniform() { return double(rng_() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();   // (0, 1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    cxd complex_gaussian() {
        const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
        return cxd(gaussian() * inv_sqrt2, gaussian() * inv_sqrt2);
    }

    Mat matrix(Eigen::Index rows, Eigen::Index cols) {
        Mat m(rows, cols);
        for (Eigen::Index c = 0; c < cols; ++c)
            for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = complex_gaussian();
        return m;
    }

    Vec vector(Eigen::Index n) {
        Vec v(n);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_gaussian();
        return v;
    }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

inline void echo_config(Report& r, const ScenarioOptions& o) {
    r.add("config.tol", o.tol);
    r.add("config.kappa_max", o.kappa_max);
    r.add("config.seed", o.seed);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Analysis commands on loaded families
// ---------------------------------------------------------------------------

inline CommandOutcome pair_check_command(const VectorFamily& psi, const VectorFamily& phi,
                                         double kappa_max, double tol) {
    PairReport pr = check_pair(psi, phi, kappa_max, tol);
    Report r("pair-check");
    r.add("config.tol", tol);
    r.add("config.kappa_max", kappa_max);
    r.add("result.dim", psi.dim());
    r.add("result.grid_size", psi.size());
    r.add("result.sigma_min", pr.summary.sigma_min);
    r.add("result.sigma_max", pr.summary.sigma_max);
    r.add("result.cond", pr.summary.cond);
    r.add("result.verdict", to_string(pr.verdict));
    const int exit_code = (pr.verdict == PairVerdict::reproducing_pair) ? 0 : 2;
    return {std::move(r), exit_code};
}

inline CommandOutcome partner_command(const VectorFamily& phi, double tol) {
    PartnerReport pr = construct_partner(phi, nullptr, tol);
    Report r("partner");
    r.add("config.tol", tol);
    r.add("result.dim", phi.dim());
    r.add("result.grid_size", phi.size());
    r.add("result.feasible", pr.feasible);
    r.add("result.coefficient_norm_rows.max", pr.coefficient_norm_rows.maxCoeff());
    r.add("result.pointwise_sums.max", pr.pointwise_sums.maxCoeff());
    const Mat s = mixed_frame_operator(pr.psi, phi).matrix();
    r.add("result.s_minus_identity_max",
          detail::max_abs(s - Mat::Identity(s.rows(), s.cols())));
    std::vector<std::pair<double, double>> rows;
    for (Eigen::Index n = 0; n < pr.coefficient_norm_rows.size(); ++n)
        rows.emplace_back(double(n), pr.coefficient_norm_rows(n));
    r.add_curve("coefficient_norm_rows", std::move(rows));
    rows.clear();
    for (Eigen::Index i = 0; i < pr.pointwise_sums.size(); ++i)
        rows.emplace_back(double(i), pr.pointwise_sums(i));
    r.add_curve("pointwise_sums", std::move(rows));
    return {std::move(r), pr.feasible ? 0 : 2};
}

inline CommandOutcome kernel_command(const VectorFamily& psi, const VectorFamily& phi,
                                     double kappa_max, double tol) {
    PairReport pr = check_pair(psi, phi, kappa_max, tol);
    Report r("kernel");
    r.add("config.tol", tol);
    r.add("config.kappa_max", kappa_max);
    r.add("result.dim", psi.dim());
    r.add("result.grid_size", psi.size());
    r.add("result.verdict", to_string(pr.verdict));
    if (pr.verdict != PairVerdict::reproducing_pair) return {std::move(r), 2};

    LinearMap k = kernel_projection(psi, phi, tol);
    r.add("result.idempotency_max_dev",
          detail::max_abs(k.matrix() * k.matrix() - k.matrix()));
    bool spectrum_ok = true;
    try {
        ProjectorSpectrum sp = projector_spectrum(k);
        r.add("result.one_count", sp.one_count);
        r.add("result.zero_count", sp.zero_count);
        r.add("result.eigenvalue_max_dev", sp.max_deviation);
        spectrum_ok = (sp.one_count == psi.dim());
        r.add("result.range_dim_matches", spectrum_ok);
    } catch (const std::invalid_argument& e) {
        r.add("result.spectrum_error", e.what());
        spectrum_ok = false;
    }
    BesselDegeneracyReport bd = bessel_degeneracy_check(psi, phi, kappa_max, tol);
    r.add("result.complement_dim", bd.complement_dim);
    r.add("result.phi_independent", bd.phi_independence.independent);
    r.add("result.phi_kernel_dim", bd.phi_independence.kernel_dim);
    r.add("result.consistent", bd.consistent);
    r.add("result.note", bd.note);
    return {std::move(r), spectrum_ok ? 0 : 2};
}

inline CommandOutcome classify_command(const std::vector<VectorFamily>& levels, double tol) {
    const double stability_tol = 1e-6;
    Classification c = classify(levels, stability_tol, tol);
    Report r("classify");
    r.add("config.tol", tol);
    r.add("config.stability_tol", stability_tol);
    r.add("result.levels", Eigen::Index(levels.size()));
    r.add("result.kind", to_string(c.kind));
    r.add("result.trend", to_string(c.trend));
    r.add("result.finest_mu_total", c.finest_mu_total);
    std::vector<std::pair<double, double>> lower, upper;
    for (std::size_t l = 0; l < c.bounds_per_level.size(); ++l) {
        lower.emplace_back(double(l), c.bounds_per_level[l].lower);
        upper.emplace_back(double(l), c.bounds_per_level[l].upper);
    }
    r.add_curve("bounds_per_level.lower", std::move(lower));
    r.add_curve("bounds_per_level.upper", std::move(upper));
    return {std::move(r), 0};
}

// ---------------------------------------------------------------------------
// Named example scenarios
// ---------------------------------------------------------------------------

inline Report example_onb(const ScenarioOptions& opts) {
    const Eigen::Index d = opts.dim > 0 ? opts.dim : 4;
    VectorFamily fam = onb(d);
    Report r("example");
    r.add("config.name", "onb");
    detail::echo_config(r, opts);
    r.add("config.dim", d);

    FrameBounds b = frame_bounds(fam);
    r.add("result.bounds.lower", b.lower);
    r.add("result.bounds.upper", b.upper);
    r.add("result.mu_total", mu_total(fam, opts.tol));
    MuIndependence mi = mu_independent(fam, opts.tol);
    r.add("result.mu_independent", mi.independent);
    r.add("result.kernel_dim", mi.kernel_dim);

    detail::PortableRng rng(opts.seed);
    double max_dev = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        CoefficientFunction xi(rng.vector(d));
        const double quotient = v_norm(fam, xi);
        const double plain = xi.values().norm();
        max_dev = std::max(max_dev, std::abs(quotient - plain));
    }
    r.add("result.vnorm_vs_l2_max_dev", max_dev);
    return r;
}

inline Report example_riesz(const ScenarioOptions& opts) {
    const Eigen::Index d = opts.dim > 0 ? opts.dim : 4;
    detail::PortableRng rng(opts.seed);
    Mat a = Mat::Identity(d, d) + 0.3 / std::sqrt(double(d)) * rng.matrix(d, d);
    VectorFamily fam = riesz(a, opts.tol);

    Report r("example");
    r.add("config.name", "riesz");
    detail::echo_config(r, opts);
    r.add("config.dim", d);

    RealVec sv = detail::singular_values(a);
    const double smin = sv(sv.size() - 1), smax = sv(0);
    FrameBounds b = frame_bounds(fam);
    r.add("result.bounds.lower", b.lower);
    r.add("result.bounds.upper", b.upper);
    r.add("result.sigma_min_sq", smin * smin);
    r.add("result.sigma_max_sq", smax * smax);
    r.add("result.lower_bound_dev", std::abs(b.lower - smin * smin));
    r.add("result.upper_bound_dev", std::abs(b.upper - smax * smax));

    double ratio_min = inf(), ratio_max = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        CoefficientFunction xi(rng.vector(d));
        const double ratio = synthesize(fam, xi).norm() / xi.values().norm();
        ratio_min = std::min(ratio_min, ratio);
        ratio_max = std::max(ratio_max, ratio);
    }
    r.add("result.synthesis_ratio_min", ratio_min);
    r.add("result.synthesis_ratio_max", ratio_max);
    r.add("result.ratios_within_singular_range",
          ratio_min >= smin * (1.0 - 1e-12) && ratio_max <= smax * (1.0 + 1e-12));
    return r;
}

inline Report example_weighted(const ScenarioOptions& opts) {
    const Eigen::Index base = opts.dim > 0 ? opts.dim : 8;
    const Eigen::Index level_count = opts.levels > 0 ? opts.levels : 3;

    Report r("example");
    r.add("config.name", "weighted");
    detail::echo_config(r, opts);
    r.add("config.dim", base);
    r.add("config.levels", level_count);

    std::vector<VectorFamily> levels;
    for (Eigen::Index l = 0; l < level_count; ++l) {
        const Eigen::Index d = base << l;
        Vec m(d);
        for (Eigen::Index n = 0; n < d; ++n) m(n) = 1.0 / double(n + 1);
        levels.push_back(weighted(onb(d), m));
    }

    Classification c = classify(levels, 1e-6, opts.tol);
    r.add("result.kind", to_string(c.kind));
    r.add("result.trend", to_string(c.trend));
    std::vector<std::pair<double, double>> lower, upper;
    for (std::size_t l = 0; l < c.bounds_per_level.size(); ++l) {
        const double d = double(base << l);
        lower.emplace_back(d, c.bounds_per_level[l].lower);
        upper.emplace_back(d, c.bounds_per_level[l].upper);
    }

    const Eigen::Index d_fine = base << (level_count - 1);
    const double m_fine = c.bounds_per_level.back().lower;
    const double m_expected = 1.0 / (double(d_fine) * double(d_fine));
    r.add("result.lower_bound_finest", m_fine);
    r.add("result.lower_bound_expected", m_expected);
    r.add("result.lower_bound_rel_err", std::abs(m_fine - m_expected) / m_expected);

    // Closed-form partner phi_n = theta_n / conj(m_n) restores S = identity.
    Vec m(d_fine);
    for (Eigen::Index n = 0; n < d_fine; ++n) m(n) = 1.0 / double(n + 1);
    VectorFamily psi = weighted(onb(d_fine), m);
    VectorFamily phi = weighted(onb(d_fine), m.conjugate().cwiseInverse());
    const Mat s = mixed_frame_operator(psi, phi).matrix();
    r.add("result.partner_identity_max_dev",
          detail::max_abs(s - Mat::Identity(d_fine, d_fine)));

    r.add_curve("bounds_per_level.lower", std::move(lower));
    r.add_curve("bounds_per_level.upper", std::move(upper));
    return r;
}

inline Report example_gabor_finite(const ScenarioOptions& opts) {
    Report r("example");
    r.add("config.name", "gabor-finite");
    detail::echo_config(r, opts);

    // Dense lattice sanity point: a = b = 1 with a delta window.
    {
        const Eigen::Index d = 4;
        Vec e1 = Vec::Zero(d);
        e1(0) = 1.0;
        FrameBounds b = frame_bounds(finite_gabor(e1, 1, 1));
        r.add("result.dense_lattice.dim", d);
        r.add("result.dense_lattice.lower", b.lower);
        r.add("result.dense_lattice.upper", b.upper);
    }

    // Critical-density trend with a periodized Gaussian window; exploratory,
    // no verdict is attached.
    std::vector<Eigen::Index> sides = {3, 4, 5, 6, 8};
    if (opts.levels > 0 && std::size_t(opts.levels) < sides.size())
        sides.resize(std::size_t(opts.levels));
    std::vector<std::pair<double, double>> lower, upper, cond;
    for (const Eigen::Index side : sides) {
        const Eigen::Index d = side * side;
        Vec g(d);
        for (Eigen::Index t = 0; t < d; ++t) {
            double acc = 0.0;
            for (long long k = -8; k <= 8; ++k) {
                const double u = double(t) + double(k) * double(d);
                acc += std::exp(-std::numbers::pi * u * u / double(d));
            }
            g(t) = acc;
        }
        FrameBounds b = frame_bounds(finite_gabor(g, side, side));
        lower.emplace_back(double(d), b.lower);
        upper.emplace_back(double(d), b.upper);
        cond.emplace_back(double(d), b.lower > 0.0 ? b.upper / b.lower : inf());
    }
    r.add("result.critical_levels", Eigen::Index(sides.size()));
    r.add_curve("critical.lower", std::move(lower));
    r.add_curve("critical.upper", std::move(upper));
    r.add_curve("critical.cond", std::move(cond));
    return r;
}

inline Report example_cwt_gaussian(const ScenarioOptions& opts) {
    Report r("example");
    r.add("config.name", "cwt-gaussian");
    detail::echo_config(r, opts);

    auto psi_hat_fn = [](double w) { return std::abs(w) * std::exp(-std::numbers::pi * w * w); };
    auto phi_hat_fn = [](double w) { return std::exp(-std::numbers::pi * w * w); };

    // Cross-admissibility on a refined symmetric grid.  The integrand
    // conj(psi_hat) phi_hat / |omega| is a plain Gaussian, so trapezoidal
    // quadrature with spacing ~1e-3 is far below the 1e-6 target.
    {
        RealVec omega = symmetric_uniform_frequency_grid(1e-8, 6.0, 6001);
        FrequencyProfile psi_hat = sample_frequency_profile(omega, psi_hat_fn);
        FrequencyProfile phi_hat = sample_frequency_profile(omega, phi_hat_fn);
        const cxd c = cross_admissibility(psi_hat, phi_hat);
        const double target = std::numbers::sqrt2 / 2.0;
        r.add("config.refined_grid.omega_min", 1e-8);
        r.add("config.refined_grid.omega_max", 6.0);
        r.add("config.refined_grid.points_per_side", Eigen::Index(6001));
        r.add("result.cross_admissibility", c);
        r.add("result.cross_admissibility_target", target);
        r.add("result.cross_admissibility_rel_err", std::abs(c - cxd(target)) / target);
        const double c_psi = admissibility(psi_hat);
        r.add("result.c_psi", c_psi);
        r.add("result.c_psi_exact", 1.0 / (2.0 * std::numbers::pi));
    }

    // Divergence of c_phi as the grid reaches toward omega = 0.
    {
        std::vector<std::pair<double, double>> estimates;
        double prev = 0.0;
        bool monotone = true;
        for (const double omega_min : {1e-1, 1e-2, 1e-3}) {
            RealVec omega = symmetric_log_frequency_grid(omega_min, 6.0, 2000);
            const double c_phi = admissibility(sample_frequency_profile(omega, phi_hat_fn));
            if (!estimates.empty() && c_phi < prev * 1.2) monotone = false;
            estimates.emplace_back(omega_min, c_phi);
            prev = c_phi;
        }
        r.add("result.c_phi_divergence_flagged", monotone);
        r.add_curve("c_phi_estimates", std::move(estimates));
    }

    // Finite periodic model: the mixed frame operator is diagonal in the
    // Fourier basis; on the band of frequencies whose Gaussian scale content
    // the grid covers, the diagonal is flat and the operator is a multiple
    // of the identity.
    {
        const Eigen::Index d = opts.dim > 0 ? opts.dim : 256;
        r.add("config.dim", d);
        const Eigen::Index n_scale = 64;
        RealVec x_grid(d);
        for (Eigen::Index p = 0; p < d; ++p) x_grid(p) = double(p);
        RealVec a_grid(2 * n_scale);
        const double lmin = std::log(0.125), lmax = std::log(8.0);
        for (Eigen::Index k = 0; k < n_scale; ++k) {
            const double a = std::exp(lmin + (lmax - lmin) * double(k) / double(n_scale - 1));
            a_grid(n_scale + k) = a;
            a_grid(n_scale - 1 - k) = -a;
        }
        RealVec profile_grid = symmetric_uniform_frequency_grid(1e-8, 4.2, 4201);
        FrequencyProfile psi_hat = sample_frequency_profile(profile_grid, psi_hat_fn);
        FrequencyProfile phi_hat = sample_frequency_profile(profile_grid, phi_hat_fn);

        r.add("config.model.dim", d);
        r.add("config.model.scales_per_side", n_scale);
        r.add("config.model.scale_min", 0.125);
        r.add("config.model.scale_max", 8.0);

        VectorFamily psi_fam = cwt_family(psi_hat, x_grid, a_grid, d);
        VectorFamily phi_fam = cwt_family(phi_hat, x_grid, a_grid, d);
        const Mat s = mixed_frame_operator(psi_fam, phi_fam).matrix();
        const Mat f = detail::dft_matrix(d);
        const Mat s_hat = f * s * f.adjoint();
        const Vec pred = cwt_predicted_diagonal(psi_hat, phi_hat, a_grid, d);

        const double diag_scale = pred.cwiseAbs().maxCoeff();
        double diag_dev = 0.0, offdiag_max = 0.0;
        for (Eigen::Index j = 0; j < d; ++j) {
            diag_dev = std::max(diag_dev, std::abs(s_hat(j, j) - pred(j)));
            for (Eigen::Index k2 = 0; k2 < d; ++k2)
                if (k2 != j) offdiag_max = std::max(offdiag_max, std::abs(s_hat(j, k2)));
        }
        r.add("result.model.diag_vs_quadrature_max", diag_dev);
        r.add("result.model.diag_scale", diag_scale);
        r.add("result.model.offdiag_max", offdiag_max);

        // Covered band: maximal contiguous run of positive-frequency bins
        // whose predicted diagonal stays within 0.5% of its peak.
        Eigen::Index jstar = 1;
        for (Eigen::Index j = 1; j < d / 2; ++j)
            if (std::abs(pred(j)) > std::abs(pred(jstar))) jstar = j;
        const double peak = std::abs(pred(jstar));
        Eigen::Index lo = jstar, hi = jstar;
        while (lo > 1 && std::abs(pred(lo - 1)) >= 0.995 * peak) --lo;
        while (hi < d / 2 - 1 && std::abs(pred(hi + 1)) >= 0.995 * peak) ++hi;

        double band_min = inf(), band_max = 0.0;
        for (Eigen::Index j = lo; j <= hi; ++j) {
            band_min = std::min(band_min, pred(j).real());
            band_max = std::max(band_max, pred(j).real());
        }
        const double fitted_c = 0.5 * (band_min + band_max);

        // Max deviation of the matrix from fitted_c * identity over the
        // band block (positive bins and their mirror images).
        std::vector<Eigen::Index> band;
        for (Eigen::Index j = lo; j <= hi; ++j) {
            band.push_back(j);
            band.push_back(d - j);
        }
        double band_dev = 0.0;
        for (const Eigen::Index j : band)
            for (const Eigen::Index k2 : band) {
                const cxd want = (j == k2) ? cxd(fitted_c) : cxd(0.0);
                band_dev = std::max(band_dev, std::abs(s_hat(j, k2) - want));
            }

        r.add("result.band.lo_bin", lo);
        r.add("result.band.hi_bin", hi);
        r.add("result.band.lo_nu", double(lo) / double(d));
        r.add("result.band.hi_nu", double(hi) / double(d));
        r.add("result.band.bin_count", Eigen::Index(hi - lo + 1));
        r.add("result.band.fitted_c", fitted_c);
        r.add("result.band.max_dev", band_dev);
        r.add("result.band.dev_over_c", band_dev / fitted_c);

        std::vector<std::pair<double, double>> diag_curve;
        for (Eigen::Index j = 1; j < d / 2; ++j)
            diag_curve.emplace_back(double(j) / double(d), pred(j).real());
        r.add_curve("predicted_diagonal", std::move(diag_curve));
    }
    return r;
}

inline Report example_affine_cs(const ScenarioOptions& opts) {
    Report r("example");
    r.add("config.name", "affine-cs");
    detail::echo_config(r, opts);

    const int n_index = 2;
    const double dr = 0.05;
    const Eigen::Index level_count = opts.levels > 0 ? opts.levels : 4;
    r.add("config.n", n_index);
    r.add("config.dr", dr);
    r.add("config.levels", level_count);

    // Admissible normalization: psi(r) = (2 pi r^{n-1})^{-1/2} h(r) with
    // sup |h| = 1 makes the multiplication symbol s(r) = |h(r)|^2.
    auto make_profile = [&](double r_max, double spacing) {
        const Eigen::Index n_r = Eigen::Index(std::llround(r_max / spacing));
        RealVec rs(n_r);
        for (Eigen::Index i = 0; i < n_r; ++i) rs(i) = spacing * double(i + 1);
        Vec values(n_r);
        for (Eigen::Index i = 0; i < n_r; ++i) {
            const double h = std::exp(-0.5 * rs(i) * rs(i));
            values(i) = h / std::sqrt(2.0 * std::numbers::pi *
                                      std::pow(rs(i), double(n_index - 1)));
        }
        return RadialProfile(std::move(rs), std::move(values), n_index);
    };

    // Square model at the coarsest extent: exact diagonality and the fitted
    // proportionality constant against r^{n-1} |psi(r)|^2.
    {
        RadialProfile profile = make_profile(3.0, dr);
        const Eigen::Index n_r = profile.size();
        VectorFamily fam = affine_cs_family(profile, n_r);
        const Mat s = mixed_frame_operator(fam, fam).matrix();

        double diag_max = 0.0, offdiag_max = 0.0, imag_max = 0.0;
        for (Eigen::Index i = 0; i < n_r; ++i) {
            diag_max = std::max(diag_max, std::abs(s(i, i)));
            imag_max = std::max(imag_max, std::abs(s(i, i).imag()));
            for (Eigen::Index k = 0; k < n_r; ++k)
                if (k != i) offdiag_max = std::max(offdiag_max, std::abs(s(i, k)));
        }
        double c_min = inf(), c_max = 0.0;
        for (Eigen::Index i = 0; i < n_r; ++i) {
            const double shape = std::pow(profile.r()(i), double(n_index - 1)) *
                                 std::norm(profile.values()(i));
            const double c = s(i, i).real() / shape;
            c_min = std::min(c_min, c);
            c_max = std::max(c_max, c);
        }
        const double fitted = 0.5 * (c_min + c_max);
        r.add("result.square.grid_size", n_r);
        r.add("result.square.offdiag_over_diag", offdiag_max / diag_max);
        r.add("result.square.imag_over_diag", imag_max / diag_max);
        r.add("result.square.fitted_constant", fitted);
        r.add("result.square.fitted_constant_rel_spread", (c_max - c_min) / fitted);

        MuIndependence over = mu_independent(affine_cs_family(profile, 2 * n_r), opts.tol);
        r.add("result.oversampled.kernel_dim", over.kernel_dim);
        r.add("result.oversampled.kernel_dim_expected", n_r);
        r.add("result.oversampled.matches", over.kernel_dim == n_r);
    }

    // Resolution ladder: with sup |h| = 1 the upper frame bound approaches 1
    // as the radial grid refines toward r = 0.
    {
        std::vector<std::pair<double, double>> uppers;
        double prev_gap = inf();
        bool approaching = true;
        for (int k = 0; k < 3; ++k) {
            const double spacing = dr / double(1 << k);
            FrameBounds b = frame_bounds(affine_cs_family(make_profile(3.0, spacing),
                                                          Eigen::Index(std::llround(3.0 / spacing))));
            const double gap = std::abs(b.upper - 1.0);
            if (gap >= prev_gap) approaching = false;
            prev_gap = gap;
            uppers.emplace_back(spacing, b.upper);
        }
        r.add("result.upper_bound_approaches_one", approaching);
        r.add_curve("upper_bound_resolution", std::move(uppers));
    }

    // Extension ladder: growing radial extent drives the minimal-norm
    // partner coefficients to blow up; no partner survives the refinement.
    {
        std::vector<VectorFamily> levels;
        std::vector<double> extents;
        for (Eigen::Index l = 0; l < level_count; ++l) {
            const double r_max = 3.0 + double(l);
            RadialProfile profile = make_profile(r_max, dr);
            levels.push_back(affine_cs_family(profile, profile.size()));
            extents.push_back(r_max);
        }
        PartnerTrend trend = partner_feasibility_trend(levels, 1.5, opts.tol);
        bool all_feasible = true;
        std::vector<std::pair<double, double>> row_norms, point_sums;
        for (std::size_t l = 0; l < levels.size(); ++l) {
            all_feasible = all_feasible && trend.feasible[l];
            row_norms.emplace_back(extents[l], trend.max_row_norms[l]);
            point_sums.emplace_back(extents[l], trend.max_pointwise_sums[l]);
        }
        r.add("result.trend.verdict", to_string(trend.verdict));
        r.add("result.trend.all_feasible", all_feasible);
        double min_growth = inf();
        for (std::size_t l = 1; l < trend.max_row_norms.size(); ++l)
            min_growth = std::min(min_growth,
                                  trend.max_row_norms[l] / trend.max_row_norms[l - 1]);
        r.add("result.trend.min_row_norm_growth", min_growth);
        r.add_curve("max_row_norms", std::move(row_norms));
        r.add_curve("max_pointwise_sums", std::move(point_sums));
    }
    return r;
}

inline Report example_spherical(const ScenarioOptions& opts) {
    Report r("example");
    r.add("config.name", "spherical");
    detail::echo_config(r, opts);

    if (!opts.input.empty()) {
        SphericalCoefficients c = io::read_spherical_table(opts.input);
        RealVec s = spherical_symbol(c);
        r.add("config.input", opts.input);
        r.add("result.lmax", c.lmax());
        r.add("result.scale_count", c.a_grid().size());
        std::vector<std::pair<double, double>> rows;
        for (Eigen::Index l = 0; l < s.size(); ++l)
            rows.emplace_back(double(l), s(l));
        r.add_curve("s_phi", std::move(rows));
        return r;
    }

    auto uniform_grid = [](Eigen::Index n) {
        RealVec a(n);
        for (Eigen::Index k = 0; k < n; ++k)
            a(k) = 1.0 + double(k) / double(n - 1);
        return a;
    };

    // Unit coefficients at l = 0 on a in [1, 2]: the cell masses integrate
    // da/a^3 exactly, so s(0) = 8 pi^2 * (3/8) = 3 pi^2.
    const double three_pi_sq = 3.0 * std::numbers::pi * std::numbers::pi;
    {
        RealVec a = uniform_grid(33);
        std::vector<Mat> blocks = {Mat::Ones(1, a.size())};
        RealVec s = spherical_symbol(SphericalCoefficients(a, std::move(blocks)));
        r.add("result.unit.s0", s(0));
        r.add("result.unit.s0_exact", three_pi_sq);
        r.add("result.unit.s0_rel_err", std::abs(s(0) - three_pi_sq) / three_pi_sq);

        RealVec a_fine = uniform_grid(65);
        std::vector<Mat> blocks_fine = {Mat::Ones(1, a_fine.size())};
        RealVec s_fine = spherical_symbol(SphericalCoefficients(a_fine, std::move(blocks_fine)));
        r.add("result.unit.s0_refined_dev", std::abs(s_fine(0) - s(0)));
    }

    // Closed-form symbol s(l) = 1 + 1/(l+1): constant-magnitude coefficients
    // per degree.  The partner bounds carry a half-ulp guard because s(0)
    // lands exactly on the upper bound 2.
    {
        const Eigen::Index lmax = 4;
        RealVec a = uniform_grid(33);
        std::vector<Mat> blocks;
        for (Eigen::Index l = 0; l <= lmax; ++l) {
            const double target = 1.0 + 1.0 / double(l + 1);
            const double mag = std::sqrt(target / three_pi_sq);
            blocks.push_back(Mat::Constant(2 * l + 1, a.size(), cxd(mag, 0.0)));
        }
        SphericalCoefficients c(a, std::move(blocks));
        RealVec s = spherical_symbol(c);
        std::vector<std::pair<double, double>> rows;
        for (Eigen::Index l = 0; l < s.size(); ++l) rows.emplace_back(double(l), s(l));

        const double guard = 1e-9;
        const bool inside = partner_condition(s, 1.0 - guard, 2.0 + guard);
        r.add("result.closed_form.partner_condition", inside);

        Vec cross = spherical_cross_symbol(c, c);
        double cross_dev = 0.0;
        for (Eigen::Index l = 0; l < s.size(); ++l)
            cross_dev = std::max(cross_dev, std::abs(cross(l) - cxd(s(l))));
        r.add("result.closed_form.cross_matches_auto", cross_dev);

        // Zeroing the top degree violates any positive lower bound.
        RealVec s_zero = s;
        s_zero(lmax) = 0.0;
        r.add("result.zero_degree.partner_condition",
              partner_condition(s_zero, 1.0 - guard, 2.0 + guard));
        r.add_curve("s_phi", std::move(rows));
    }
    return r;
}

inline CommandOutcome example_command(const std::string& name, const ScenarioOptions& opts) {
    if (name == "onb") return {example_onb(opts), 0};
    if (name == "riesz") return {example_riesz(opts), 0};
    if (name == "weighted") return {example_weighted(opts), 0};
    if (name == "gabor-finite") return {example_gabor_finite(opts), 0};
    if (name == "cwt-gaussian") return {example_cwt_gaussian(opts), 0};
    if (name == "affine-cs") return {example_affine_cs(opts), 0};
    if (name == "spherical") return {example_spherical(opts), 0};
    fail("unknown example '" + name +
         "'; valid names: onb, riesz, weighted, gabor-finite, cwt-gaussian, "
         "affine-cs, spherical");
}

}  // namespace framepair
