#include "support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <stdexcept>

using namespace framepair;

namespace {

CoefficientFunction random_coeff(oracle::Rng& rng, Eigen::Index n) {
    return CoefficientFunction(rng.cvector(n));
}

}  // namespace

TEST_CASE("coefficient norm is the length of the synthesis image") {
    oracle::Rng rng(41);
    auto built = oracle::random_total_family(rng, 4, 9);
    CoefficientFunction xi = random_coeff(rng, 9);
    Vec image = oracle::synthesize_loops(built.fam, xi.values());
    CHECK(v_norm(built.fam, xi) ==
          Catch::Approx(metric_norm(image, built.fam.metric())).epsilon(1e-12));

    cxd ip = v_inner(built.fam, xi, xi);
    CHECK(ip.imag() == Catch::Approx(0.0).margin(1e-12));
    CHECK(std::sqrt(ip.real()) == Catch::Approx(v_norm(built.fam, xi)).epsilon(1e-12));
}

TEST_CASE("quotient equality ignores synthesis-kernel directions") {
    oracle::Rng rng(42);
    // Oversampled family: right singular directions beyond the rank span the
    // kernel of the weighted synthesis map.
    auto built = oracle::random_total_family(rng, 4, 9);
    CoefficientFunction xi = random_coeff(rng, 9);

    // Unweight the kernel vector: synthesize(phi, k) = 0 exactly in theory.
    Vec kernel_dir = built.v.col(8);
    kernel_dir = built.fam.grid().weights().cwiseSqrt().cwiseInverse().cast<cxd>()
                     .cwiseProduct(kernel_dir);
    CoefficientFunction shifted(xi.values() + 3.0 * kernel_dir);
    CHECK(quotient_equal(built.fam, xi, shifted));

    // A perturbation with a visible synthesis image breaks equality.
    CoefficientFunction off(xi.values() + 0.1 * built.v.col(0));
    CHECK_FALSE(quotient_equal(built.fam, xi, off));
    CHECK_THROWS_AS(quotient_equal(built.fam, xi, random_coeff(rng, 8)),
                    std::invalid_argument);
    CHECK_THROWS_AS(quotient_equal(built.fam, xi, xi, 0.0), std::invalid_argument);
}

TEST_CASE("dual pairing matches the weighted loop sum") {
    oracle::Rng rng(43);
    MeasureGrid grid(RealVec(RealVec::LinSpaced(7, 0.0, 6.0)), rng.positive(7));
    Vec xi = rng.cvector(7), eta = rng.cvector(7);
    cxd expect(0.0, 0.0);
    for (Eigen::Index i = 0; i < 7; ++i)
        expect += grid.weight(i) * xi(i) * std::conj(eta(i));
    cxd got = dual_pairing(CoefficientFunction(xi), CoefficientFunction(eta), grid);
    CHECK(std::abs(got - expect) < 1e-12);
}

TEST_CASE("representer pairing identity") {
    // <synthesize(phi, xi), g> = dual_pairing(xi, analyze(phi, g)) exactly.
    oracle::Rng rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        auto built = oracle::random_total_family(rng, 5, 11);
        Vec g = rng.cvector(5);
        CoefficientFunction xi = random_coeff(rng, 11);
        cxd lhs = metric_inner(synthesize(built.fam, xi), g, built.fam.metric());
        cxd rhs = dual_pairing(xi, analyze(built.fam, g), built.fam.grid());
        CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("dual norm is an isometry on the range of a total family") {
    oracle::Rng rng(45);
    for (int trial = 0; trial < 10; ++trial) {
        auto built = oracle::random_total_family(rng, 5, 12);
        Vec g = rng.cvector(5);
        CHECK(dual_norm(built.fam, g) ==
              Catch::Approx(metric_norm(g, built.fam.metric())).epsilon(1e-10));
    }
    auto built = oracle::random_total_family(rng, 4, 8);
    CHECK_THROWS_AS(dual_norm(built.fam, rng.cvector(5)), std::invalid_argument);
}

TEST_CASE("dual norm projects away the unreachable component") {
    oracle::Rng rng(46);
    auto built = oracle::rank_deficient_family(rng, 5, 12, 3);
    Vec g = rng.cvector(5);

    // The synthesis range is spanned by G^{-1/2} u_k for the built range
    // basis; project g there explicitly.
    Mat range(5, 3);
    for (Eigen::Index k = 0; k < 3; ++k)
        range.col(k) = built.fam.metric().cwiseSqrt().cwiseInverse().cast<cxd>()
                           .cwiseProduct(built.u.col(k));
    Vec proj = Vec::Zero(5);
    for (Eigen::Index k = 0; k < 3; ++k)
        proj += metric_inner(g, range.col(k), built.fam.metric()) * range.col(k);

    CHECK(dual_norm(built.fam, g) ==
          Catch::Approx(metric_norm(proj, built.fam.metric())).epsilon(1e-9));
    CHECK(dual_norm(built.fam, g) < metric_norm(g, built.fam.metric()));
}

TEST_CASE("riesz map satisfies its defining pairing identity") {
    oracle::Rng rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        auto built = oracle::random_total_family(rng, 4, 9);
        VectorFamily psi(built.fam.grid(), rng.cmatrix(4, 9), built.fam.metric());
        CoefficientFunction xi = random_coeff(rng, 9);
        CoefficientFunction eta = random_coeff(rng, 9);
        CoefficientFunction r = vspace_riesz_map(built.fam, psi, eta);
        cxd lhs = dual_pairing(xi, r, built.fam.grid());
        cxd rhs = v_inner(built.fam, xi, eta);
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("representer recovery through the frame operator") {
    // eta = analyze(phi, g) determines g for a total family:
    // g = S_{phi,phi}^{-1} synthesize(phi, eta).
    oracle::Rng rng(48);
    for (int trial = 0; trial < 10; ++trial) {
        auto built = oracle::random_total_family(rng, 5, 11);
        Vec g_true = rng.cvector(5);
        CoefficientFunction eta = analyze(built.fam, g_true);
        Mat s = mixed_frame_operator(built.fam, built.fam).matrix();
        Vec g_rec = s.partialPivLu().solve(synthesize(built.fam, eta));
        CHECK((g_rec - g_true).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(quotient_equal(built.fam, eta, analyze(built.fam, g_rec)));
    }
}
