#include "support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

using namespace framepair;
using Catch::Matchers::ContainsSubstring;

namespace {

// Gaussian sample normalized so that the diagonal symbol 2 pi r^{n-1}
// |psi(r)|^2 has supremum 1 in the continuum limit.
RadialProfile gaussian_profile(Eigen::Index n_r, double dr, int n) {
    RealVec r(n_r);
    for (Eigen::Index i = 0; i < n_r; ++i) r(i) = dr * double(i + 1);
    Vec values(n_r);
    for (Eigen::Index i = 0; i < n_r; ++i) {
        const double h = std::exp(-r(i) * r(i) / 2.0);
        values(i) = cxd(h / std::sqrt(2.0 * oracle::kPi * std::pow(r(i), n - 1)), 0.0);
    }
    return RadialProfile(r, values, n);
}

}  // namespace

TEST_CASE("radial profiles validate the grid and expose the weighted metric") {
    RealVec r(3);
    r << 0.5, 1.0, 1.5;
    Vec v = Vec::Ones(3);

    RadialProfile p(r, v, 3);
    CHECK(p.spacing() == Catch::Approx(0.5));
    RealVec metric = p.metric();
    CHECK(metric(1) == Catch::Approx(1.0 * 1.0 * 0.5));
    CHECK(metric(2) == Catch::Approx(1.5 * 1.5 * 0.5));

    RealVec neg(2);
    neg << -0.5, 1.0;
    CHECK_THROWS_WITH(RadialProfile(neg, Vec::Ones(2), 1),
                      ContainsSubstring("strictly positive"));
    RealVec repeat(2);
    repeat << 1.0, 1.0;
    CHECK_THROWS_AS(RadialProfile(repeat, Vec::Ones(2), 1), std::invalid_argument);
    CHECK_THROWS_AS(RadialProfile(r, Vec::Ones(2), 1), std::invalid_argument);
    CHECK_THROWS_AS(RadialProfile(r, v, 0), std::invalid_argument);

    RealVec uneven(3);
    uneven << 0.5, 1.0, 2.0;
    CHECK_THROWS_WITH(RadialProfile(uneven, v, 1).spacing(),
                      ContainsSubstring("uniformly spaced"));
}

TEST_CASE("modulation family matches its defining formula") {
    RadialProfile p = gaussian_profile(12, 0.2, 2);
    VectorFamily fam = affine_cs_family(p, 12);
    const double dx = 2.0 * oracle::kPi / (12.0 * 0.2);

    REQUIRE(fam.size() == 12);
    REQUIRE(fam.dim() == 12);
    for (Eigen::Index j = 0; j < 12; ++j) {
        CHECK(fam.grid().coord(j) == Catch::Approx(dx * double(j)));
        CHECK(fam.grid().weight(j) == Catch::Approx(dx));
        for (Eigen::Index i = 0; i < 12; ++i) {
            cxd expect = std::polar(1.0, -dx * double(j) * p.r()(i)) * p.values()(i);
            CHECK(std::abs(fam.vectors()(i, j) - expect) < 1e-13);
        }
    }
    CHECK((fam.metric() - p.metric()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS_AS(affine_cs_family(p, 0), std::invalid_argument);
}

TEST_CASE("square modulation model has an exactly diagonal frame operator") {
    RadialProfile p = gaussian_profile(40, 0.1, 2);
    VectorFamily fam = affine_cs_family(p, 40);
    Mat s = mixed_frame_operator(fam, fam).matrix();

    double diag_max = 0.0, off_max = 0.0, imag_max = 0.0;
    for (Eigen::Index i = 0; i < 40; ++i)
        for (Eigen::Index j = 0; j < 40; ++j) {
            if (i == j) {
                diag_max = std::max(diag_max, std::abs(s(i, i)));
                imag_max = std::max(imag_max, std::abs(s(i, i).imag()));
            } else {
                off_max = std::max(off_max, std::abs(s(i, j)));
            }
        }
    REQUIRE(diag_max > 0.0);
    CHECK(off_max < 1e-10 * diag_max);
    CHECK(imag_max < 1e-12 * diag_max);

    // Diagonal equals 2 pi r^{n-1} |psi(r)|^2 exactly on this model: the
    // fitted proportionality constant against r^{n-1}|psi|^2 is 2 pi with
    // vanishing spread.
    double c_min = framepair::inf(), c_max = 0.0;
    for (Eigen::Index i = 0; i < 40; ++i) {
        const double symbol = std::pow(p.r()(i), 1) * std::norm(p.values()(i));
        const double c = s(i, i).real() / symbol;
        c_min = std::min(c_min, c);
        c_max = std::max(c_max, c);
    }
    CHECK((c_max - c_min) / c_max < 1e-10);
    CHECK(0.5 * (c_min + c_max) == Catch::Approx(2.0 * oracle::kPi).epsilon(1e-10));
}

TEST_CASE("admissible normalization drives the upper frame bound to one") {
    double prev_gap = framepair::inf();
    for (int level = 0; level < 3; ++level) {
        const double dr = 0.1 / std::pow(2.0, level);
        const Eigen::Index n_r = Eigen::Index(std::lround(3.0 / dr));
        RadialProfile p = gaussian_profile(n_r, dr, 2);
        FrameBounds b = frame_bounds(affine_cs_family(p, n_r));
        const double gap = std::abs(b.upper - 1.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-3);
}

TEST_CASE("oversampling in modulation leaves a kernel of the radial size") {
    RadialProfile p = gaussian_profile(15, 0.2, 2);
    VectorFamily fam = affine_cs_family(p, 30);
    MuIndependence mi = mu_independent(fam);
    CHECK_FALSE(mi.independent);
    CHECK(mi.kernel_dim == 15);
    CHECK(mu_total(fam));
}

TEST_CASE("transform-domain norm equals the quotient norm of the family") {
    oracle::Rng rng(91);
    RadialProfile p = gaussian_profile(16, 0.15, 3);
    VectorFamily fam = affine_cs_family(p, 16);
    for (int trial = 0; trial < 10; ++trial) {
        CoefficientFunction xi(rng.cvector(16));
        CHECK(affine_vnorm(p, xi) == Catch::Approx(v_norm(fam, xi)).margin(1e-10));
    }
}

TEST_CASE("a transform-dual delta hits a single radial term") {
    RadialProfile p = gaussian_profile(12, 0.2, 2);
    const Eigen::Index n_r = 12;
    const double dx = 2.0 * oracle::kPi / (double(n_r) * 0.2);
    const Eigen::Index target = 7;

    // xi_j = (1 / (N dx)) exp(+i x_j r_target): its transform is the
    // Kronecker delta at the target radius.
    Vec xi(n_r);
    for (Eigen::Index j = 0; j < n_r; ++j)
        xi(j) = std::polar(1.0 / (double(n_r) * dx), dx * double(j) * p.r()(target));

    const double expect =
        std::abs(p.values()(target)) * std::sqrt(p.metric()(target));
    CHECK(affine_vnorm(p, CoefficientFunction(xi)) ==
          Catch::Approx(expect).epsilon(1e-10));

    // Concentrating the transform where the window is negligible collapses
    // the quotient norm.
    RealVec r_wide(40);
    for (Eigen::Index i = 0; i < 40; ++i) r_wide(i) = 0.2 * double(i + 1);
    Vec tail_values(40);
    for (Eigen::Index i = 0; i < 40; ++i)
        tail_values(i) = cxd(std::exp(-r_wide(i) * r_wide(i) / 2.0), 0.0);
    RadialProfile wide(r_wide, tail_values, 1);
    const double dx_w = 2.0 * oracle::kPi / (40.0 * 0.2);
    Vec tail_xi(40);
    for (Eigen::Index j = 0; j < 40; ++j)
        tail_xi(j) = std::polar(1.0 / (40.0 * dx_w), dx_w * double(j) * r_wide(39));
    CHECK(affine_vnorm(wide, CoefficientFunction(tail_xi)) < 1e-10);
}
