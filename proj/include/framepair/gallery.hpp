#pragma once

/**
 * gallery.hpp
 *
 * Concrete model families and their closed-form diagnostics:
 *
 *   - onb / riesz / weighted: the sequence-space models on C^d;
 *   - finite_gabor: cyclic translations and modulations of a window;
 *   - FrequencyProfile + (cross_)admissibility and cwt_family: the 1-D
 *     wavelet model on a length-d periodic signal space;
 *   - RadialProfile + affine_cs_family: modulation families on a weighted
 *     half-line space, diagonalised exactly by a DFT-dual grid;
 *   - SphericalCoefficients + symbol machinery for zonal dilations.
 *
 * Quadrature conventions: 1-D grids carry trapezoidal weights derived from
 * point spacing; periodic lattices carry the uniform spacing weight; the
 * scale measure da/a^3 of the spherical model uses exact per-cell mass so
 * constant integrands are integrated exactly.
 */

#include "framepair/core.hpp"
#include "framepair/family.hpp"
#include "framepair/measure_grid.hpp"
#include "framepair/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace framepair {

// ---------------------------------------------------------------------------
// Sequence-space models
// ---------------------------------------------------------------------------

// Standard orthonormal basis of C^d on the index grid with unit weights.
inline VectorFamily onb(Eigen::Index d) {
    require(d >= 1, "onb: dimension must be at least 1");
    return VectorFamily(MeasureGrid::index_grid(d), Mat::Identity(d, d));
}

// Riesz family r_n = A e_n for an invertible A (columns of A).
inline VectorFamily riesz(const LinearMap& a, double tol = kDefaultRankTol) {
    RealVec sv = detail::singular_values(a.matrix());
    if (sv.size() == 0 || sv(0) <= 0.0 || sv(sv.size() - 1) <= tol * sv(0))
        fail("riesz: matrix is not invertible at relative tolerance " + std::to_string(tol));
    return VectorFamily(MeasureGrid::index_grid(a.dim()), a.matrix());
}

inline VectorFamily riesz(const Mat& a, double tol = kDefaultRankTol) {
    return riesz(LinearMap(a), tol);
}

// Pointwise multiplied family {m_i theta_i}; every multiplier must be nonzero.
inline VectorFamily weighted(const VectorFamily& theta, const Vec& m) {
    require(m.size() == theta.size(),
            "weighted: one multiplier per family member required");
    require(all_finite(m), "weighted: multipliers must be finite");
    require((m.array().abs() > 0.0).all(), "weighted: zero multipliers are not allowed");
    Mat v = theta.vectors();
    v.array().rowwise() *= m.transpose().array();
    return VectorFamily(theta.grid(), std::move(v), theta.metric());
}

// Cyclic Gabor system on C^d: columns are modulations by multiples of b of
// translations by multiples of a, N = (d/a)(d/b).  The window must be
// nonzero and both steps must divide d.
inline VectorFamily finite_gabor(const Vec& g, Eigen::Index a, Eigen::Index b) {
    const Eigen::Index d = g.size();
    require(d >= 1, "finite_gabor: empty window");
    require(g.cwiseAbs().maxCoeff() > 0.0, "finite_gabor: window must be nonzero");
    require(a >= 1 && b >= 1, "finite_gabor: lattice steps must be positive");
    require(d % a == 0, "finite_gabor: translation step must divide the dimension");
    require(d % b == 0, "finite_gabor: modulation step must divide the dimension");

    const Eigen::Index n_trans = d / a;
    const Eigen::Index n_mod = d / b;
    const Eigen::Index n = n_trans * n_mod;
    const double tau = 2.0 * std::numbers::pi;

    Mat vectors(d, n);
    RealMat points(n, 2);
    for (Eigen::Index p = 0; p < n_trans; ++p) {
        for (Eigen::Index q = 0; q < n_mod; ++q) {
            const Eigen::Index col = p * n_mod + q;
            points(col, 0) = double(p * a);
            points(col, 1) = double(q * b);
            for (Eigen::Index t = 0; t < d; ++t) {
                const Eigen::Index src = ((t - p * a) % d + d) % d;
                const double phase = tau * double(q * b) * double(t) / double(d);
                vectors(t, col) = std::polar(1.0, phase) * g(src);
            }
        }
    }
    return VectorFamily(MeasureGrid(std::move(points), RealVec::Ones(n)),
                        std::move(vectors));
}

// ---------------------------------------------------------------------------
// 1-D wavelet model
// ---------------------------------------------------------------------------

namespace detail {

// Unitary discrete Fourier matrix, F_{jt} = d^{-1/2} exp(-2 pi i j t / d).
inline Mat dft_matrix(Eigen::Index d) {
    const double tau = 2.0 * std::numbers::pi;
    Mat f(d, d);
    const double scale = 1.0 / std::sqrt(double(d));
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index t = 0; t < d; ++t)
            f(j, t) = std::polar(scale, -tau * double(j) * double(t) / double(d));
    return f;
}

// Signed frequency index of DFT bin j on a length-d lattice.
inline double signed_bin(Eigen::Index j, Eigen::Index d) {
    return (j < (d + 1) / 2) ? double(j) : double(j - d);
}

// Trapezoidal weights computed separately on each sign branch of a strictly
// increasing grid that jumps across 0: no quadrature cell ever bridges the
// excluded neighbourhood of 0, where the scale and frequency measures are
// singular.
inline RealVec branch_trapezoid_weights(const RealVec& x) {
    const Eigen::Index n = x.size();
    require(n >= 1, "branch_trapezoid_weights: empty grid");
    Eigen::Index split = n;
    for (Eigen::Index i = 0; i < n; ++i) {
        require(x(i) != 0.0, "branch_trapezoid_weights: grid must exclude 0");
        if (i > 0) require(x(i) > x(i - 1), "branch_trapezoid_weights: grid must increase");
        if (x(i) > 0.0 && split == n) split = i;
    }
    RealVec w(n);
    if (split > 0) w.head(split) = trapezoid_weights(x.head(split));
    if (split < n) w.tail(n - split) = trapezoid_weights(x.tail(n - split));
    return w;
}

}  // namespace detail

// Sampled transform-domain profile on a grid that excludes 0.  Weights are
// the d-omega quadrature; the two-argument constructor derives trapezoidal
// weights from the point spacing, per sign branch.
class FrequencyProfile {
public:
    FrequencyProfile(RealVec omega, Vec values, RealVec weights)
        : omega_(std::move(omega)), values_(std::move(values)), weights_(std::move(weights)) {
        require(omega_.size() >= 1, "FrequencyProfile: empty grid");
        require(values_.size() == omega_.size() && weights_.size() == omega_.size(),
                "FrequencyProfile: values and weights must match the grid");
        require(all_finite(omega_) && all_finite(values_) && all_finite(weights_),
                "FrequencyProfile: entries must be finite");
        require((omega_.array() != 0.0).all(), "FrequencyProfile: grid must exclude 0");
        for (Eigen::Index i = 1; i < omega_.size(); ++i)
            require(omega_(i) > omega_(i - 1),
                    "FrequencyProfile: grid must be strictly increasing");
        require((weights_.array() > 0.0).all(),
                "FrequencyProfile: weights must be strictly positive");
    }

    FrequencyProfile(const RealVec& omega, Vec values)
        : FrequencyProfile(omega, std::move(values), detail::branch_trapezoid_weights(omega)) {}

    Eigen::Index size() const { return omega_.size(); }
    const RealVec& omega() const { return omega_; }
    const Vec& values() const { return values_; }
    const RealVec& weights() const { return weights_; }

    // Linear interpolation between samples, zero outside the covered range.
    cxd eval(double w) const {
        if (w < omega_(0) || w > omega_(omega_.size() - 1)) return cxd(0.0, 0.0);
        const double* begin = omega_.data();
        const double* end = begin + omega_.size();
        const double* it = std::lower_bound(begin, end, w);
        Eigen::Index hi = it - begin;
        if (hi == 0) return values_(0);
        if (hi >= omega_.size()) return values_(omega_.size() - 1);
        const Eigen::Index lo = hi - 1;
        const double t = (w - omega_(lo)) / (omega_(hi) - omega_(lo));
        return values_(lo) * cxd(1.0 - t, 0.0) + values_(hi) * cxd(t, 0.0);
    }

private:
    RealVec omega_;
    Vec values_;
    RealVec weights_;
};

// Symmetric two-sided grid of uniform points covering +-[omega_min, omega_max]
// with n_per_side nodes per sign, both interval ends included, sorted
// ascending.
inline RealVec symmetric_uniform_frequency_grid(double omega_min, double omega_max,
                                                Eigen::Index n_per_side) {
    require(0.0 < omega_min && omega_min < omega_max,
            "symmetric_uniform_frequency_grid: need 0 < omega_min < omega_max");
    require(n_per_side >= 2, "symmetric_uniform_frequency_grid: need at least 2 points per side");
    RealVec omega(2 * n_per_side);
    const double h = (omega_max - omega_min) / double(n_per_side - 1);
    for (Eigen::Index k = 0; k < n_per_side; ++k) {
        const double w = omega_min + h * double(k);
        omega(n_per_side + k) = w;
        omega(n_per_side - 1 - k) = -w;
    }
    return omega;
}

// Symmetric two-sided log-spaced grid between omega_min and omega_max.
inline RealVec symmetric_log_frequency_grid(double omega_min, double omega_max,
                                            Eigen::Index n_per_side) {
    require(0.0 < omega_min && omega_min < omega_max,
            "symmetric_log_frequency_grid: need 0 < omega_min < omega_max");
    require(n_per_side >= 2, "symmetric_log_frequency_grid: need at least 2 points per side");
    RealVec omega(2 * n_per_side);
    const double lmin = std::log(omega_min), lmax = std::log(omega_max);
    for (Eigen::Index k = 0; k < n_per_side; ++k) {
        const double w = std::exp(lmin + (lmax - lmin) * double(k) / double(n_per_side - 1));
        omega(n_per_side + k) = w;
        omega(n_per_side - 1 - k) = -w;
    }
    return omega;
}

template <typename F>
FrequencyProfile sample_frequency_profile(const RealVec& omega, F f) {
    Vec values(omega.size());
    for (Eigen::Index i = 0; i < omega.size(); ++i) values(i) = cxd(f(omega(i)));
    return FrequencyProfile(omega, std::move(values));
}

// c_phi = sum_k w_k |phi_hat(omega_k)|^2 / |omega_k|.
inline double admissibility(const FrequencyProfile& p) {
    return (p.values().array().abs2() * p.weights().array() /
            p.omega().array().abs())
        .sum();
}

inline void require_same_frequency_grid(const FrequencyProfile& a,
                                        const FrequencyProfile& b) {
    if (a.size() != b.size() ||
        (a.omega() - b.omega()).cwiseAbs().maxCoeff() > 1e-12 ||
        (a.weights() - b.weights()).cwiseAbs().maxCoeff() > 1e-12)
        fail("cross_admissibility: profiles must share one frequency grid");
}

// c_{psi,phi} = sum_k w_k conj(psi_hat_k) phi_hat_k / |omega_k|.
inline cxd cross_admissibility(const FrequencyProfile& psi_hat,
                               const FrequencyProfile& phi_hat) {
    require_same_frequency_grid(psi_hat, phi_hat);
    return (psi_hat.values().conjugate().array() * phi_hat.values().array() *
            (psi_hat.weights().array() / psi_hat.omega().array().abs()).cast<cxd>())
        .sum();
}

// Builds the periodic 1-D wavelet family on C^d.  Column (p, q) is the
// inverse DFT of  sqrt(|a_q|) phi_hat(a_q nu_j) exp(-2 pi i nu_j x_p)  with
// nu_j = j/d the signed bin frequency.  x_grid must be uniformly spaced
// (periodic lattice, uniform weight = spacing); a_grid entries are nonzero
// scales, increasing, with weights realizing da/a^2 per sign branch.
inline VectorFamily cwt_family(const FrequencyProfile& phi_hat, const RealVec& x_grid,
                               const RealVec& a_grid, Eigen::Index d) {
    require(d >= 2, "cwt_family: signal length must be at least 2");
    const Eigen::Index n_x = x_grid.size();
    const Eigen::Index n_a = a_grid.size();
    require(n_x >= 1 && n_a >= 1, "cwt_family: empty translation or scale grid");
    double dx = 1.0;
    if (n_x > 1) {
        dx = x_grid(1) - x_grid(0);
        require(dx > 0.0, "cwt_family: translation grid must increase");
        for (Eigen::Index p = 1; p < n_x; ++p)
            require(std::abs((x_grid(p) - x_grid(p - 1)) - dx) <= 1e-9 * std::abs(dx),
                    "cwt_family: translation grid must be uniformly spaced");
    }

    RealVec a_cells = detail::branch_trapezoid_weights(a_grid);
    const double tau = 2.0 * std::numbers::pi;

    // Fourier-domain atom table, one column per (p, q).
    Mat atoms(d, n_x * n_a);
    Mat profile_part(d, n_a);
    for (Eigen::Index q = 0; q < n_a; ++q) {
        const double a = a_grid(q);
        const double amp = std::sqrt(std::abs(a)) / std::sqrt(double(d));
        for (Eigen::Index j = 0; j < d; ++j) {
            const double nu = detail::signed_bin(j, d) / double(d);
            profile_part(j, q) = amp * phi_hat.eval(a * nu);
        }
    }
    for (Eigen::Index p = 0; p < n_x; ++p) {
        Vec phase(d);
        for (Eigen::Index j = 0; j < d; ++j) {
            const double nu = detail::signed_bin(j, d) / double(d);
            phase(j) = std::polar(1.0, -tau * nu * x_grid(p));
        }
        for (Eigen::Index q = 0; q < n_a; ++q)
            atoms.col(p * n_a + q) = profile_part.col(q).cwiseProduct(phase);
    }

    // Back to the time domain in one multiply.
    Mat time_vectors = detail::dft_matrix(d).adjoint() * atoms;

    RealMat points(n_x * n_a, 2);
    RealVec weights(n_x * n_a);
    for (Eigen::Index p = 0; p < n_x; ++p) {
        for (Eigen::Index q = 0; q < n_a; ++q) {
            const Eigen::Index col = p * n_a + q;
            points(col, 0) = x_grid(p);
            points(col, 1) = a_grid(q);
            weights(col) = dx * a_cells(q) / (a_grid(q) * a_grid(q));
        }
    }
    return VectorFamily(MeasureGrid(std::move(points), std::move(weights)),
                        std::move(time_vectors));
}

// Predicted Fourier diagonal of S_{psi,phi} for cwt families built on the
// full period-d translation lattice:
//   diag_j = sum_q cell_q / |a_q| conj(psi_hat(a_q nu_j)) phi_hat(a_q nu_j).
// Serves as the quadrature-route oracle against the matrix route.
inline Vec cwt_predicted_diagonal(const FrequencyProfile& psi_hat,
                                  const FrequencyProfile& phi_hat,
                                  const RealVec& a_grid, Eigen::Index d) {
    require(d >= 2, "cwt_predicted_diagonal: signal length must be at least 2");
    RealVec cells = detail::branch_trapezoid_weights(a_grid);
    Vec diag = Vec::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const double nu = detail::signed_bin(j, d) / double(d);
        cxd acc(0.0, 0.0);
        for (Eigen::Index q = 0; q < a_grid.size(); ++q) {
            const double a = a_grid(q);
            acc += cells(q) / std::abs(a) * std::conj(psi_hat.eval(a * nu)) *
                   phi_hat.eval(a * nu);
        }
        diag(j) = acc;
    }
    return diag;
}

// ---------------------------------------------------------------------------
// Affine coherent-state model on the weighted half-line
// ---------------------------------------------------------------------------

// Sampled radial function psi(r) on a strictly positive increasing grid,
// together with the power index n of the weight r^{n-1}.
class RadialProfile {
public:
    RadialProfile(RealVec r, Vec values, int n)
        : r_(std::move(r)), values_(std::move(values)), n_(n) {
        require(r_.size() >= 2, "RadialProfile: at least two radial points required");
        require(values_.size() == r_.size(), "RadialProfile: one sample per radius");
        require(all_finite(r_) && all_finite(values_), "RadialProfile: entries must be finite");
        require(r_(0) > 0.0, "RadialProfile: radii must be strictly positive");
        for (Eigen::Index i = 1; i < r_.size(); ++i)
            require(r_(i) > r_(i - 1), "RadialProfile: radii must be strictly increasing");
        require(n_ >= 1, "RadialProfile: the power index n must be a positive integer");
    }

    Eigen::Index size() const { return r_.size(); }
    const RealVec& r() const { return r_; }
    const Vec& values() const { return values_; }
    int n() const { return n_; }

    // Uniform spacing of the radial grid; throws when the grid is not uniform.
    double spacing() const {
        const double dr = r_(1) - r_(0);
        for (Eigen::Index i = 1; i < r_.size(); ++i)
            require(std::abs((r_(i) - r_(i - 1)) - dr) <= 1e-9 * dr,
                    "RadialProfile: radial grid must be uniformly spaced");
        return dr;
    }

    // Diagonal metric r^{n-1} dr realized with the uniform cell size.
    RealVec metric() const {
        const double dr = spacing();
        return r_.array().pow(double(n_ - 1)) * dr;
    }

private:
    RealVec r_;
    Vec values_;
    int n_;
};

template <typename F>
RadialProfile sample_radial_profile(const RealVec& r, int n, F f) {
    Vec values(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) values(i) = cxd(f(r(i)));
    return RadialProfile(r, std::move(values), n);
}

// Modulation family psi_x(r) = exp(-i x r) psi(r) on the x-lattice DFT-dual
// to the radial grid: x_j = 2 pi j / (N_r dr), j = 0..x_count-1, uniform
// weight 2 pi / (N_r dr).  With x_count = N_r the frame operator is exactly
// diagonal in the radial coordinates.
inline VectorFamily affine_cs_family(const RadialProfile& profile, Eigen::Index x_count) {
    require(x_count >= 1, "affine_cs_family: at least one modulation required");
    const Eigen::Index n_r = profile.size();
    const double dr = profile.spacing();
    const double dx = 2.0 * std::numbers::pi / (double(n_r) * dr);

    Mat vectors(n_r, x_count);
    RealVec xs(x_count);
    for (Eigen::Index j = 0; j < x_count; ++j) {
        const double x = dx * double(j);
        xs(j) = x;
        for (Eigen::Index i = 0; i < n_r; ++i)
            vectors(i, j) = std::polar(1.0, -x * profile.r()(i)) * profile.values()(i);
    }
    return VectorFamily(MeasureGrid(xs, RealVec::Constant(x_count, dx)),
                        std::move(vectors), profile.metric());
}

// Transform-domain route to the coefficient quotient norm: the synthesis
// image of xi is (sum_j dx xi_j exp(-i x_j r)) psi(r), so the norm is the
// metric norm of that pointwise product.  Must agree with v_norm on the
// matching affine family.
inline double affine_vnorm(const RadialProfile& profile, const CoefficientFunction& xi) {
    const Eigen::Index n_r = profile.size();
    const double dr = profile.spacing();
    const double dx = 2.0 * std::numbers::pi / (double(n_r) * dr);
    RealVec metric = profile.metric();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n_r; ++i) {
        cxd hat(0.0, 0.0);
        for (Eigen::Index j = 0; j < xi.size(); ++j)
            hat += dx * xi.value(j) * std::polar(1.0, -dx * double(j) * profile.r()(i));
        acc += std::norm(hat * profile.values()(i)) * metric(i);
    }
    return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// Spherical zonal-dilation symbols
// ---------------------------------------------------------------------------

// Exact per-cell mass of the measure da/a^3 on an increasing positive grid:
// cell boundaries sit halfway between samples and the end cells close at
// the end samples, so the weights sum to the exact integral over the grid
// span and constant integrands are quadrature-exact.
inline RealVec scale_weights_inverse_cubic(const RealVec& a) {
    const Eigen::Index n = a.size();
    require(n >= 1, "scale_weights_inverse_cubic: empty grid");
    require(a(0) > 0.0, "scale_weights_inverse_cubic: scales must be positive");
    for (Eigen::Index i = 1; i < n; ++i)
        require(a(i) > a(i - 1), "scale_weights_inverse_cubic: scales must increase");
    auto mass = [](double lo, double hi) {
        return 0.5 * (1.0 / (lo * lo) - 1.0 / (hi * hi));
    };
    RealVec w(n);
    if (n == 1) {
        w(0) = 1.0;
        return w;
    }
    double lo = a(0);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double hi = (k + 1 < n) ? 0.5 * (a(k) + a(k + 1)) : a(n - 1);
        w(k) = mass(lo, hi);
        lo = hi;
    }
    require((w.array() > 0.0).all(), "scale_weights_inverse_cubic: degenerate cells");
    return w;
}

// Transform coefficients of a zonal family: block l holds the (2l+1) x K
// table of values indexed by order n = -l..l (rows) and scale sample
// (columns).  a_weights realize da/a^3.
class SphericalCoefficients {
public:
    SphericalCoefficients(RealVec a_grid, RealVec a_weights, std::vector<Mat> blocks)
        : a_grid_(std::move(a_grid)), a_weights_(std::move(a_weights)),
          blocks_(std::move(blocks)) {
        require(a_grid_.size() >= 1, "SphericalCoefficients: empty scale grid");
        require(a_weights_.size() == a_grid_.size(),
                "SphericalCoefficients: one weight per scale sample");
        require(all_finite(a_grid_) && all_finite(a_weights_),
                "SphericalCoefficients: grid entries must be finite");
        require(a_grid_(0) > 0.0, "SphericalCoefficients: scales must be positive");
        for (Eigen::Index i = 1; i < a_grid_.size(); ++i)
            require(a_grid_(i) > a_grid_(i - 1),
                    "SphericalCoefficients: scales must increase");
        require((a_weights_.array() > 0.0).all(),
                "SphericalCoefficients: weights must be strictly positive");
        require(!blocks_.empty(), "SphericalCoefficients: at least the l = 0 block required");
        for (std::size_t l = 0; l < blocks_.size(); ++l) {
            require(blocks_[l].rows() == Eigen::Index(2 * l + 1),
                    "SphericalCoefficients: block " + std::to_string(l) + " must have " +
                        std::to_string(2 * l + 1) + " order rows");
            require(blocks_[l].cols() == a_grid_.size(),
                    "SphericalCoefficients: block " + std::to_string(l) +
                        " must have one column per scale sample");
            require(all_finite(blocks_[l]),
                    "SphericalCoefficients: coefficients must be finite");
        }
    }

    SphericalCoefficients(const RealVec& a_grid, std::vector<Mat> blocks)
        : SphericalCoefficients(a_grid, scale_weights_inverse_cubic(a_grid),
                                std::move(blocks)) {}

    Eigen::Index lmax() const { return Eigen::Index(blocks_.size()) - 1; }
    const RealVec& a_grid() const { return a_grid_; }
    const RealVec& a_weights() const { return a_weights_; }
    const Mat& block(Eigen::Index l) const { return blocks_[std::size_t(l)]; }

private:
    RealVec a_grid_;
    RealVec a_weights_;
    std::vector<Mat> blocks_;
};

// s_phi(l) = (8 pi^2 / (2l+1)) sum_{|n|<=l} sum_k w_k |c_{l,n,k}|^2.
inline RealVec spherical_symbol(const SphericalCoefficients& c) {
    const double front = 8.0 * std::numbers::pi * std::numbers::pi;
    RealVec s(c.lmax() + 1);
    for (Eigen::Index l = 0; l <= c.lmax(); ++l) {
        double acc = 0.0;
        const Mat& blk = c.block(l);
        for (Eigen::Index row = 0; row < blk.rows(); ++row)
            acc += (blk.row(row).cwiseAbs2().transpose().array() *
                    c.a_weights().array())
                       .sum();
        s(l) = front / double(2 * l + 1) * acc;
    }
    return s;
}

inline void require_same_scale_grid(const SphericalCoefficients& a,
                                    const SphericalCoefficients& b) {
    if (a.lmax() != b.lmax() || a.a_grid().size() != b.a_grid().size() ||
        (a.a_grid() - b.a_grid()).cwiseAbs().maxCoeff() > 1e-12 ||
        (a.a_weights() - b.a_weights()).cwiseAbs().maxCoeff() > 1e-12)
        fail("spherical_cross_symbol: coefficient tables must share degree range "
             "and scale grid");
}

// s_{psi,phi}(l) = (8 pi^2/(2l+1)) sum_{|n|<=l} sum_k w_k psi_{l,n,k} conj(phi_{l,n,k}).
inline Vec spherical_cross_symbol(const SphericalCoefficients& cpsi,
                                  const SphericalCoefficients& cphi) {
    require_same_scale_grid(cpsi, cphi);
    const double front = 8.0 * std::numbers::pi * std::numbers::pi;
    Vec s(cpsi.lmax() + 1);
    for (Eigen::Index l = 0; l <= cpsi.lmax(); ++l) {
        cxd acc(0.0, 0.0);
        const Mat& bp = cpsi.block(l);
        const Mat& bq = cphi.block(l);
        for (Eigen::Index row = 0; row < bp.rows(); ++row)
            acc += (bp.row(row).transpose().array() * bq.row(row).transpose().conjugate().array() *
                    cpsi.a_weights().array().cast<cxd>())
                      .sum();
        s(l) = front / double(2 * l + 1) * acc;
    }
    return s;
}

// Partner condition for zonal symbols: m <= |s(l)| <= M for every degree.
inline bool partner_condition(const Vec& symbol, double m, double big_m) {
    require(symbol.size() >= 1, "partner_condition: empty symbol");
    require(0.0 <= m && m <= big_m, "partner_condition: need 0 <= m <= M");
    for (Eigen::Index l = 0; l < symbol.size(); ++l) {
        const double v = std::abs(symbol(l));
        if (v < m || v > big_m) return false;
    }
    return true;
}

inline bool partner_condition(const RealVec& symbol, double m, double big_m) {
    return partner_condition(Vec(symbol.cast<cxd>()), m, big_m);
}

}  // namespace framepair
