#include "support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace framepair;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("standard basis family is a tight frame") {
    VectorFamily e = onb(3);
    CHECK(e.dim() == 3);
    CHECK(e.size() == 3);
    FrameBounds b = frame_bounds(e);
    CHECK(b.lower == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(b.upper == Catch::Approx(1.0).epsilon(1e-14));
    MuIndependence mi = mu_independent(e);
    CHECK(mi.independent);
    CHECK(mi.kernel_dim == 0);

    // Coefficient quotient norm is the plain little-l2 norm here.
    oracle::Rng rng(81);
    Vec xi = rng.cvector(3);
    CHECK(v_norm(e, CoefficientFunction(xi)) == Catch::Approx(xi.norm()).epsilon(1e-12));
    CHECK_THROWS_AS(onb(0), std::invalid_argument);
}

TEST_CASE("linear images of the basis keep the operator spectrum") {
    SECTION("identity map returns the basis") {
        VectorFamily r = riesz(LinearMap(Mat::Identity(4, 4)));
        CHECK(oracle::max_abs(r.vectors() - Mat::Identity(4, 4)) == 0.0);
    }
    SECTION("diagonal map has squared-diagonal frame bounds") {
        Mat a = Mat::Zero(2, 2);
        a(0, 0) = cxd(1.0, 0.0);
        a(1, 1) = cxd(2.0, 0.0);
        FrameBounds b = frame_bounds(riesz(LinearMap(a)));
        CHECK(b.lower == Catch::Approx(1.0).epsilon(1e-12));
        CHECK(b.upper == Catch::Approx(4.0).epsilon(1e-12));
    }
    SECTION("random map: bounds are the squared extreme singular values") {
        oracle::Rng rng(82);
        Mat a = Mat::Identity(5, 5) + 0.4 * rng.cmatrix(5, 5);
        Eigen::JacobiSVD<Mat> svd(a);
        FrameBounds b = frame_bounds(riesz(a));
        CHECK(b.lower ==
              Catch::Approx(std::pow(svd.singularValues()(4), 2)).epsilon(1e-10));
        CHECK(b.upper ==
              Catch::Approx(std::pow(svd.singularValues()(0), 2)).epsilon(1e-10));

        // Synthesis norm equivalence with the singular range.
        for (int trial = 0; trial < 20; ++trial) {
            Vec xi = rng.cvector(5);
            double ratio = synthesize(riesz(a), CoefficientFunction(xi)).norm() / xi.norm();
            CHECK(ratio >= svd.singularValues()(4) * (1.0 - 1e-12));
            CHECK(ratio <= svd.singularValues()(0) * (1.0 + 1e-12));
        }
    }
    SECTION("singular maps are rejected") {
        CHECK_THROWS_WITH(riesz(Mat::Zero(3, 3)), ContainsSubstring("not invertible"));
        Mat a = Mat::Identity(3, 3);
        a(2, 2) = cxd(0.0, 0.0);
        CHECK_THROWS_AS(riesz(a), std::invalid_argument);
    }
}

TEST_CASE("multiplier families scale columns") {
    VectorFamily e = onb(4);
    oracle::Rng rng(83);

    SECTION("unit multipliers change nothing") {
        VectorFamily w = weighted(e, Vec::Ones(4));
        CHECK(oracle::max_abs(w.vectors() - e.vectors()) == 0.0);
    }
    SECTION("frame operator becomes the squared-modulus diagonal") {
        Vec m(4);
        for (Eigen::Index k = 0; k < 4; ++k) m(k) = cxd(1.0 / double(k + 1), 0.0);
        VectorFamily w = weighted(e, m);
        Mat s = mixed_frame_operator(w, w).matrix();
        Mat expect = Mat::Zero(4, 4);
        for (Eigen::Index k = 0; k < 4; ++k) expect(k, k) = std::norm(m(k));
        CHECK(oracle::max_abs(s - expect) < 1e-14);
    }
    SECTION("conjugate-inverse multipliers give an exact reproducing partner") {
        Vec m(4);
        for (Eigen::Index k = 0; k < 4; ++k) m(k) = rng.cgauss() + cxd(2.0, 0.0);
        VectorFamily phi = weighted(e, m);
        VectorFamily psi = weighted(e, m.conjugate().cwiseInverse());
        Mat s = mixed_frame_operator(psi, phi).matrix();
        CHECK(oracle::max_abs(s - Mat::Identity(4, 4)) < 1e-12);
    }
    SECTION("composition is multiplicative") {
        Vec m1 = rng.cvector(4) + Vec::Constant(4, cxd(2.0, 0.0));
        Vec m2 = rng.cvector(4) + Vec::Constant(4, cxd(2.0, 0.0));
        VectorFamily lhs = weighted(weighted(e, m1), m2);
        VectorFamily rhs = weighted(e, m1.cwiseProduct(m2));
        CHECK(oracle::max_abs(lhs.vectors() - rhs.vectors()) < 1e-12);
    }
    SECTION("zero and mismatched multipliers are rejected") {
        Vec m = Vec::Ones(4);
        m(2) = cxd(0.0, 0.0);
        CHECK_THROWS_WITH(weighted(e, m), ContainsSubstring("zero multipliers"));
        CHECK_THROWS_AS(weighted(e, Vec::Ones(3)), std::invalid_argument);
    }
}

TEST_CASE("cyclic time-frequency family enumerates the lattice") {
    Vec g = Vec::Zero(4);
    g(0) = cxd(1.0, 0.0);

    SECTION("dense lattice with a point window is a tight frame") {
        VectorFamily fam = finite_gabor(g, 1, 1);
        CHECK(fam.size() == 16);
        FrameBounds b = frame_bounds(fam);
        CHECK(b.lower == Catch::Approx(4.0).epsilon(1e-12));
        CHECK(b.upper == Catch::Approx(4.0).epsilon(1e-12));
    }
    SECTION("columns match the hand-written translation and modulation") {
        oracle::Rng rng(84);
        Vec window = rng.cvector(4);
        VectorFamily fam = finite_gabor(window, 2, 2);
        REQUIRE(fam.size() == 4);
        for (Eigen::Index p = 0; p < 2; ++p) {
            for (Eigen::Index q = 0; q < 2; ++q) {
                const Eigen::Index col = p * 2 + q;
                CHECK(fam.grid().coord(col, 0) == double(2 * p));
                CHECK(fam.grid().coord(col, 1) == double(2 * q));
                for (Eigen::Index t = 0; t < 4; ++t) {
                    cxd expect = std::polar(1.0, 2.0 * oracle::kPi * double(2 * q) *
                                                     double(t) / 4.0) *
                                 window(((t - 2 * p) % 4 + 4) % 4);
                    CHECK(std::abs(fam.vectors()(t, col) - expect) < 1e-13);
                }
            }
        }
    }
    SECTION("degenerate inputs are rejected") {
        CHECK_THROWS_WITH(finite_gabor(Vec::Zero(4), 1, 1),
                          ContainsSubstring("window must be nonzero"));
        CHECK_THROWS_WITH(finite_gabor(g, 3, 1), ContainsSubstring("divide"));
        CHECK_THROWS_AS(finite_gabor(g, 1, 3), std::invalid_argument);
        CHECK_THROWS_AS(finite_gabor(g, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("admissibility integrates the normalized window energy") {
    SECTION("flat-top window over both branches integrates to two") {
        RealVec omega = symmetric_uniform_frequency_grid(1.0, 2.0, 41);
        FrequencyProfile p = sample_frequency_profile(
            omega, [](double w) { return std::sqrt(std::abs(w)); });
        CHECK(admissibility(p) == Catch::Approx(2.0).epsilon(1e-12));
    }
    SECTION("zero window has zero constant") {
        RealVec omega = symmetric_uniform_frequency_grid(1.0, 2.0, 5);
        FrequencyProfile p(omega, Vec::Zero(10));
        CHECK(admissibility(p) == 0.0);
    }
    SECTION("window with mass at the origin diverges under refinement") {
        std::vector<double> estimates;
        for (double omega_min : {1e-1, 1e-2, 1e-3}) {
            RealVec omega = symmetric_log_frequency_grid(omega_min, 6.0, 800);
            FrequencyProfile p = sample_frequency_profile(
                omega, [](double w) { return std::exp(-oracle::kPi * w * w); });
            estimates.push_back(admissibility(p));
        }
        CHECK(estimates[1] >= 1.2 * estimates[0]);
        CHECK(estimates[2] >= 1.2 * estimates[1]);
    }
}

TEST_CASE("cross admissibility conjugates the first window") {
    RealVec omega = symmetric_uniform_frequency_grid(0.5, 4.0, 200);
    oracle::Rng rng(85);

    SECTION("against itself it reduces to the admissibility constant") {
        FrequencyProfile p = sample_frequency_profile(
            omega, [](double w) { return std::exp(-w * w); });
        cxd c = cross_admissibility(p, p);
        CHECK(c.imag() == Catch::Approx(0.0).margin(1e-15));
        CHECK(c.real() == Catch::Approx(admissibility(p)).epsilon(1e-12));
    }
    SECTION("matches the loop sum with the conjugate on the first argument") {
        Vec v1 = rng.cvector(omega.size()), v2 = rng.cvector(omega.size());
        FrequencyProfile p1(omega, v1), p2(omega, v2);
        cxd expect(0.0, 0.0);
        for (Eigen::Index k = 0; k < omega.size(); ++k)
            expect += p1.weights()(k) * std::conj(v1(k)) * v2(k) / std::abs(omega(k));
        CHECK(std::abs(cross_admissibility(p1, p2) - expect) < 1e-12);
    }
    SECTION("Cauchy-Schwarz bound holds") {
        Vec v1 = rng.cvector(omega.size()), v2 = rng.cvector(omega.size());
        FrequencyProfile p1(omega, v1), p2(omega, v2);
        double bound = std::sqrt(admissibility(p1) * admissibility(p2));
        CHECK(std::abs(cross_admissibility(p1, p2)) <= bound * (1.0 + 1e-12));
    }
    SECTION("grids must agree") {
        RealVec other = symmetric_uniform_frequency_grid(0.5, 4.0, 201);
        FrequencyProfile p1(omega, Vec::Ones(omega.size()));
        FrequencyProfile p2(other, Vec::Ones(other.size()));
        CHECK_THROWS_WITH(cross_admissibility(p1, p2),
                          ContainsSubstring("share one frequency grid"));
    }
}

TEST_CASE("gaussian window pair converges to the exact cross constant") {
    RealVec omega = symmetric_uniform_frequency_grid(1e-8, 6.0, 6001);
    FrequencyProfile psi_hat = sample_frequency_profile(
        omega, [](double w) { return std::abs(w) * std::exp(-oracle::kPi * w * w); });
    FrequencyProfile phi_hat = sample_frequency_profile(
        omega, [](double w) { return std::exp(-oracle::kPi * w * w); });
    const double target = std::sqrt(0.5);
    cxd c = cross_admissibility(psi_hat, phi_hat);
    CHECK(std::abs(c - cxd(target, 0.0)) / target < 1e-6);
}

TEST_CASE("scale weights realize the inverse-cubic measure exactly") {
    RealVec a = RealVec::LinSpaced(33, 1.0, 2.0);
    RealVec w = scale_weights_inverse_cubic(a);

    // Total mass of da/a^3 on [1, 2] is 3/8, independent of the grid.
    CHECK(w.sum() == Catch::Approx(3.0 / 8.0).epsilon(1e-14));
    RealVec fine = scale_weights_inverse_cubic(RealVec::LinSpaced(65, 1.0, 2.0));
    CHECK(fine.sum() == Catch::Approx(3.0 / 8.0).epsilon(1e-14));

    RealVec bad(2);
    bad << 1.0, 1.0;
    CHECK_THROWS_AS(scale_weights_inverse_cubic(bad), std::invalid_argument);
    RealVec neg(2);
    neg << -1.0, 1.0;
    CHECK_THROWS_AS(scale_weights_inverse_cubic(neg), std::invalid_argument);
}

TEST_CASE("zonal symbols apply the degree normalization") {
    RealVec a = RealVec::LinSpaced(33, 1.0, 2.0);

    SECTION("unit coefficients at degree zero hit the closed-form constant") {
        std::vector<Mat> blocks{Mat::Ones(1, 33)};
        SphericalCoefficients c(a, blocks);
        RealVec s = spherical_symbol(c);
        REQUIRE(s.size() == 1);
        CHECK(s(0) == Catch::Approx(3.0 * oracle::kPi * oracle::kPi).epsilon(1e-12));
    }
    SECTION("zero coefficients give zero symbols") {
        std::vector<Mat> blocks{Mat::Zero(1, 33), Mat::Zero(3, 33)};
        RealVec s = spherical_symbol(SphericalCoefficients(a, blocks));
        CHECK(s.cwiseAbs().maxCoeff() == 0.0);
    }
    SECTION("equal coefficients cancel the (2l+1) normalization") {
        std::vector<Mat> blocks{Mat::Ones(1, 33), Mat::Ones(3, 33)};
        RealVec s = spherical_symbol(SphericalCoefficients(a, blocks));
        REQUIRE(s.size() == 2);
        CHECK(s(1) / s(0) == Catch::Approx(1.0).epsilon(1e-12));
    }
    SECTION("quadrature is exact for integrands the rule represents") {
        std::vector<Mat> coarse{Mat::Ones(1, 33)};
        std::vector<Mat> fine{Mat::Ones(1, 129)};
        RealVec s_coarse = spherical_symbol(SphericalCoefficients(a, coarse));
        RealVec s_fine = spherical_symbol(
            SphericalCoefficients(RealVec::LinSpaced(129, 1.0, 2.0), fine));
        CHECK(s_coarse(0) == Catch::Approx(s_fine(0)).epsilon(1e-13));
    }
    SECTION("block shapes are validated") {
        std::vector<Mat> wrong{Mat::Ones(2, 33)};
        CHECK_THROWS_WITH(SphericalCoefficients(a, wrong),
                          ContainsSubstring("order rows"));
        std::vector<Mat> short_cols{Mat::Ones(1, 32)};
        CHECK_THROWS_AS(SphericalCoefficients(a, short_cols), std::invalid_argument);
    }
}

TEST_CASE("cross symbols pair first against second") {
    RealVec a = RealVec::LinSpaced(17, 1.0, 2.0);
    oracle::Rng rng(86);
    std::vector<Mat> bp{rng.cmatrix(1, 17), rng.cmatrix(3, 17)};
    std::vector<Mat> bq{rng.cmatrix(1, 17), rng.cmatrix(3, 17)};
    SphericalCoefficients cp(a, bp), cq(a, bq);

    SECTION("self cross symbol is the real symbol") {
        Vec s = spherical_cross_symbol(cp, cp);
        RealVec auto_s = spherical_symbol(cp);
        for (Eigen::Index l = 0; l < 2; ++l) {
            CHECK(s(l).imag() == Catch::Approx(0.0).margin(1e-12));
            CHECK(s(l).real() == Catch::Approx(auto_s(l)).epsilon(1e-12));
        }
    }
    SECTION("loop oracle with psi times conj(phi)") {
        Vec s = spherical_cross_symbol(cp, cq);
        for (Eigen::Index l = 0; l < 2; ++l) {
            cxd acc(0.0, 0.0);
            for (Eigen::Index row = 0; row < 2 * l + 1; ++row)
                for (Eigen::Index k = 0; k < 17; ++k)
                    acc += cp.a_weights()(k) * bp[std::size_t(l)](row, k) *
                           std::conj(bq[std::size_t(l)](row, k));
            acc *= 8.0 * oracle::kPi * oracle::kPi / double(2 * l + 1);
            CHECK(std::abs(s(l) - acc) < 1e-12 * std::max(1.0, std::abs(acc)));
        }
    }
    SECTION("swapping the arguments conjugates the symbol") {
        Vec s_pq = spherical_cross_symbol(cp, cq);
        Vec s_qp = spherical_cross_symbol(cq, cp);
        CHECK((s_pq - s_qp.conjugate()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SECTION("degree counts must match") {
        std::vector<Mat> shallow{rng.cmatrix(1, 17)};
        SphericalCoefficients cs(a, shallow);
        CHECK_THROWS_AS(spherical_cross_symbol(cp, cs), std::invalid_argument);
    }
}

TEST_CASE("two-sided symbol bound check") {
    SECTION("closed-form family between one and two") {
        Vec s(5);
        for (Eigen::Index l = 0; l < 5; ++l)
            s(l) = cxd(1.0 + 1.0 / double(l + 1), 0.0);
        CHECK(partner_condition(s, 1.0, 2.0));
        CHECK_FALSE(partner_condition(s, 1.6, 2.0));
    }
    SECTION("a vanishing degree fails every positive lower bound") {
        Vec s(3);
        s << cxd(1.0, 0.0), cxd(1.5, 0.0), cxd(0.0, 0.0);
        CHECK_FALSE(partner_condition(s, 0.1, 2.0));
    }
    SECTION("modulus is what is bounded") {
        Vec s(1);
        s << cxd(0.0, 1.5);
        CHECK(partner_condition(s, 1.0, 2.0));
    }
    SECTION("real-array overload agrees") {
        RealVec s(2);
        s << 1.25, 1.75;
        CHECK(partner_condition(s, 1.0, 2.0));
        CHECK_FALSE(partner_condition(s, 1.5, 2.0));
    }
    SECTION("bounds are validated") {
        Vec s = Vec::Ones(2);
        CHECK_THROWS_AS(partner_condition(s, -0.5, 2.0), std::invalid_argument);
        CHECK_THROWS_AS(partner_condition(s, 2.0, 1.0), std::invalid_argument);
    }
}
