#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sedeph/errors.hpp"
#include "sedeph/xstate.hpp"

using namespace sedeph;

namespace {

Eigen::MatrixXcd bell_phi_minus() {
    Eigen::Vector4cd v(0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0);
    return v * v.adjoint();
}

} // namespace

TEST_CASE("validate_x_state accepts valid and rejects invalid states") {
    const XState w = WernerParams{0.5}.to_x_state();
    CHECK(w.rho11() == doctest::Approx(0.125));
    CHECK(w.rho22() == doctest::Approx(0.375));
    CHECK(w.rho23().real() == doctest::Approx(-0.25));

    const XState pure = XState::make(1.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    CHECK(pure.rho11() == 1.0);

    CHECK_THROWS_AS(XState::make(0.0, 0.5, 0.5, 0.0, 0.0, cplx{0.6, 0.0}), NegativityError);
    CHECK_THROWS_AS(XState::make(0.3, 0.3, 0.3, 0.3, 0.0, 0.0), TraceError);
    CHECK_THROWS_AS(XState::make(-0.1, 0.5, 0.3, 0.3, 0.0, 0.0), NegativityError);
    CHECK_THROWS_AS(XState::make(0.5, 0.0, 0.0, 0.5, cplx{0.6, 0.0}, 0.0), NegativityError);
    CHECK_THROWS_AS(WernerParams{1.5}.to_x_state(), RangeError);
}

TEST_CASE("concurrence_x closed form") {
    CHECK(concurrence_x(WernerParams{0.9}.to_x_state(), 1.0) == doctest::Approx(0.85));
    CHECK(concurrence_x(WernerParams{0.2}.to_x_state(), 1.0) == 0.0);
    // Exact sudden-death point for c = 0.5.
    CHECK(concurrence_x(WernerParams{0.5}.to_x_state(), 0.5) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("Werner entanglement onset at c = 1/3") {
    for (int i = 0; i <= 1000; ++i) {
        const double c = i * 1e-3;
        const double conc = concurrence_x(WernerParams{c}.to_x_state(), 1.0);
        if (c > 1.0 / 3.0 + 1e-12) {
            CHECK(conc > 0.0);
        } else {
            CHECK(conc == doctest::Approx(0.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("concurrence_x is nonincreasing in d") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        double p[4];
        double s = 0.0;
        for (double& v : p) s += (v = u(rng));
        for (double& v : p) v /= s;
        const double m14 = std::sqrt(p[0] * p[3]) * u(rng);
        const double m23 = std::sqrt(p[1] * p[2]) * u(rng);
        const XState x = XState::make(p[0], p[1], p[2], p[3], std::polar(m14, 6.0 * u(rng)),
                                      std::polar(m23, 6.0 * u(rng)));
        double prev = concurrence_x(x, 0.0);
        for (int k = 1; k <= 50; ++k) {
            const double cur = concurrence_x(x, k / 50.0);
            CHECK(cur >= prev);
            CHECK(cur <= 1.0);
            prev = cur;
        }
    }
}

TEST_CASE("transpose_x conjugates coherences") {
    const XState x = XState::make(0.4, 0.1, 0.1, 0.4, cplx{0.1, 0.2}, cplx{0.05, -0.02});
    const XState t = transpose_x(x);
    CHECK(t.rho14() == cplx{0.1, -0.2});
    CHECK(t.rho23() == cplx{0.05, 0.02});
    CHECK(t.rho11() == x.rho11());
    const XState tt = transpose_x(t);
    CHECK(tt.rho14() == x.rho14());
    CHECK(tt.rho23() == x.rho23());
    const XState w = WernerParams{0.7}.to_x_state();
    CHECK((transpose_x(w).matrix() - w.matrix()).norm() == 0.0);
}

TEST_CASE("min_eigpair_x on Werner, mixed and pure states") {
    SUBCASE("transposed Werner c = 0.5") {
        const EigPair p = min_eigpair_x(transpose_x(WernerParams{0.5}.to_x_state()));
        CHECK(p.value == doctest::Approx(0.125));
        CHECK(std::abs(p.vector(0)) < 1e-15);
        CHECK(p.vector(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(p.vector(2).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(std::abs(p.vector(3)) < 1e-15);
    }
    SUBCASE("maximally mixed: tie broken towards {2,3}, lower index") {
        const EigPair p = min_eigpair_x(XState::make(0.25, 0.25, 0.25, 0.25, 0.0, 0.0));
        CHECK(p.value == doctest::Approx(0.25));
        CHECK(p.vector(1) == cplx{1.0, 0.0});
        CHECK(p.vector.norm() == doctest::Approx(1.0));
    }
    SUBCASE("pure |00>: zero eigenvalue outside |00>") {
        const EigPair p = min_eigpair_x(XState::make(1.0, 0.0, 0.0, 0.0, 0.0, 0.0));
        CHECK(p.value == 0.0);
        CHECK(std::abs(p.vector(0)) == 0.0);
        CHECK(p.vector(1) == cplx{1.0, 0.0});
    }
}

TEST_CASE("min_eigpair_x residual property on random X states") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        double p[4];
        double s = 0.0;
        for (double& v : p) s += (v = u(rng));
        for (double& v : p) v /= s;
        const XState x = XState::make(p[0], p[1], p[2], p[3],
                                      std::polar(std::sqrt(p[0] * p[3]) * u(rng), 6.3 * u(rng)),
                                      std::polar(std::sqrt(p[1] * p[2]) * u(rng), 6.3 * u(rng)));
        const EigPair e = min_eigpair_x(x);
        CHECK(e.vector.norm() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK((x.matrix() * e.vector - e.value * e.vector).norm() <= 1e-12);
        CHECK(e.value == doctest::Approx(testing::min_eigenvalue(x.matrix())).epsilon(1e-12));
    }
}

TEST_CASE("partial_transpose") {
    SUBCASE("product state maps to sigma (x) rho^T") {
        Eigen::Matrix2cd sigma, rho;
        sigma << 0.7, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.3;
        rho << 0.4, cplx(0.0, 0.3), cplx(0.0, -0.3), 0.6;
        Eigen::MatrixXcd prod(4, 4), expected(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                prod.block(2 * i, 2 * j, 2, 2) = sigma(i, j) * rho;
                expected.block(2 * i, 2 * j, 2, 2) = sigma(i, j) * rho.transpose();
            }
        const DenseHermitian pt = partial_transpose(DenseHermitian(prod), 2, 2);
        CHECK((pt.matrix() - expected).norm() < 1e-15);
    }
    SUBCASE("Bell state has PT eigenvalue -1/2") {
        const DenseHermitian pt = partial_transpose(DenseHermitian(bell_phi_minus()), 2, 2);
        CHECK(pt.min_eigenvalue() == doctest::Approx(-0.5).epsilon(1e-14));
        CHECK(pt.trace() == doctest::Approx(1.0));
    }
    SUBCASE("involution, trace and Hermiticity on a 2x3 random matrix") {
        std::mt19937 rng(3);
        std::normal_distribution<double> n(0.0, 1.0);
        Eigen::MatrixXcd a(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) a(i, j) = cplx(n(rng), n(rng));
        const DenseHermitian h(a * a.adjoint());
        const DenseHermitian once = partial_transpose(h, 2, 3);
        const DenseHermitian twice = partial_transpose(once, 2, 3);
        CHECK((twice.matrix() - h.matrix()).norm() == 0.0);
        CHECK(once.trace() == h.trace());
        CHECK((once.matrix() - once.matrix().adjoint()).norm() <= (h.matrix() - h.matrix().adjoint()).norm() + 1e-15);
    }
    CHECK_THROWS_AS(partial_transpose(DenseHermitian(bell_phi_minus()), 3, 2), DimensionError);
}
