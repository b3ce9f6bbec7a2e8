#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>
#include <random>

#include "oracles.hpp"
#include "sedeph/dynamics.hpp"
#include "sedeph/errors.hpp"

using namespace sedeph;

namespace {

XState random_x_state(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double p[4];
    double s = 0.0;
    for (double& v : p) s += (v = u(rng));
    for (double& v : p) v /= s;
    return XState::make(p[0], p[1], p[2], p[3],
                        std::polar(std::sqrt(p[0] * p[3]) * u(rng), 6.3 * u(rng)),
                        std::polar(std::sqrt(p[1] * p[2]) * u(rng), 6.3 * u(rng)));
}

double max_entry_diff(const DenseHermitian& a, const DenseHermitian& b) {
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("decoherence_factor") {
    const BathModel weak = BathModel::continuum(1e-3);
    const DecoherenceFactor f0 = decoherence_factor(weak, 0.2, 0.0, {0.3, 0.7});
    CHECK(f0.magnitude == 1.0);
    CHECK(f0.phase_plus == 0.0);
    CHECK(f0.phase_minus == 0.0);

    const DecoherenceFactor a = decoherence_factor(weak, 0.2, 7.0, {0.0, 0.0});
    const DecoherenceFactor b = decoherence_factor(weak, 0.2, 7.0, {1.3, -0.4});
    CHECK(a.magnitude == b.magnitude);
    CHECK(b.phase_plus == doctest::Approx(-(1.3 - 0.4) * 7.0));
    CHECK(b.phase_minus == doctest::Approx(-(1.3 + 0.4) * 7.0));

    const double tdec = decoherence_time(weak, 0.2);
    CHECK(decoherence_factor(weak, 0.2, tdec).magnitude == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
}

TEST_CASE("reduced_state") {
    const BathModel weak = BathModel::continuum(1e-3);
    const XState w = WernerParams{0.5}.to_x_state();
    CHECK(max_entry_diff(reduced_state(w, weak, 0.2, 0.0), DenseHermitian(w.matrix())) == 0.0);

    const XState diag = XState::make(0.1, 0.2, 0.3, 0.4, 0.0, 0.0);
    for (double tau : {1.0, 10.0, 100.0}) {
        CHECK(max_entry_diff(reduced_state(diag, weak, 0.2, tau), DenseHermitian(diag.matrix())) == 0.0);
    }

    const DenseHermitian r = reduced_state(w, weak, 0.2, 10.0);
    const double expected = std::exp(-testing::big_gamma_simpson(1e-3, 0.2, 10.0, 400000));
    CHECK(std::abs(r(1, 2)) == doctest::Approx(0.25 * expected).epsilon(1e-10));
    CHECK(r(0, 0).real() == 0.125);
    CHECK(r(1, 1).real() == 0.375);
    CHECK(r(2, 2).real() == 0.375);
    CHECK(r(3, 3).real() == 0.125);
}

TEST_CASE("reduced_state stays a density matrix") {
    std::mt19937 rng(5);
    const BathModel strong = BathModel::continuum(1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const XState x = random_x_state(rng);
        for (double theta : {0.05, 1.0, 10.0})
            for (double tau : {0.1, 2.0, 30.0}) {
                const DenseHermitian r = reduced_state(x, strong, theta, tau, {0.4, 0.9});
                CHECK(r.trace() == doctest::Approx(1.0).epsilon(1e-15));
                CHECK(r.min_eigenvalue() >= -1e-12);
            }
    }
}

TEST_CASE("evolve_master matches reduced_state") {
    const BathModel weak = BathModel::continuum(1e-3);
    const XState w = WernerParams{0.5}.to_x_state();

    const XState diag = XState::make(0.1, 0.2, 0.3, 0.4, 0.0, 0.0);
    CHECK(max_entry_diff(evolve_master(diag, weak, 0.2, 5.0, 3), DenseHermitian(diag.matrix())) == 0.0);

    CHECK(max_entry_diff(evolve_master(w, weak, 0.2, 5.0, 2000), reduced_state(w, weak, 0.2, 5.0)) < 1e-8);

    SUBCASE("with splittings") {
        const Splittings split{0.8, 0.3};
        CHECK(max_entry_diff(evolve_master(w, weak, 0.2, 5.0, 2000, split),
                             reduced_state(w, weak, 0.2, 5.0, split)) < 1e-8);
    }
    SUBCASE("fourth-order convergence") {
        const BathModel strong = BathModel::continuum(1.0);
        const DenseHermitian exact = reduced_state(w, strong, 1.0, 1.0, {6.0, 2.0});
        const double e1 = max_entry_diff(evolve_master(w, strong, 1.0, 1.0, 40, {6.0, 2.0}), exact);
        const double e2 = max_entry_diff(evolve_master(w, strong, 1.0, 1.0, 80, {6.0, 2.0}), exact);
        CAPTURE(e1);
        CAPTURE(e2);
        CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.25));
    }
    CHECK_THROWS_AS(evolve_master(w, weak, 0.2, 5.0, 0), RangeError);
}

TEST_CASE("concurrence_at") {
    const BathModel weak = BathModel::continuum(1e-3);
    const XState w = WernerParams{0.5}.to_x_state();
    CHECK(concurrence_at(w, weak, 0.2, 0.0) == doctest::Approx(0.25));

    const auto tsd = sudden_death_time(w, weak, 0.2);
    REQUIRE(tsd.has_value());
    CHECK(big_gamma(weak, 0.2, *tsd) == doctest::Approx(std::log(2.0)).epsilon(1e-8));
    CHECK(concurrence_at(w, weak, 0.2, *tsd) == doctest::Approx(0.0).epsilon(1e-9));

    SUBCASE("oscillatory decay at low temperature, smoothed when warmer") {
        // Relative spread of the decay rate -dC/dtau over tau in [10, 60] and
        // the number of its local extrema.
        struct Wiggle {
            double spread;
            int extrema;
        };
        auto wiggle = [&](double theta) {
            const double h = 0.05;
            std::vector<double> rate;
            for (double tau = 10.0; tau <= 60.0; tau += h)
                rate.push_back((concurrence_at(w, weak, theta, tau) - concurrence_at(w, weak, theta, tau + h)) / h);
            int extrema = 0;
            for (std::size_t i = 1; i + 1 < rate.size(); ++i)
                if ((rate[i] - rate[i - 1]) * (rate[i + 1] - rate[i]) < 0.0) ++extrema;
            const auto [lo, hi] = std::minmax_element(rate.begin(), rate.end());
            double mean = 0.0;
            for (double r : rate) mean += r / rate.size();
            return Wiggle{(*hi - *lo) / mean, extrema};
        };
        const Wiggle cold = wiggle(0.1);
        const Wiggle warm = wiggle(0.3);
        CAPTURE(cold.spread);
        CAPTURE(warm.spread);
        CHECK(cold.extrema >= 10);
        CHECK(cold.spread > warm.spread);
        for (double tau = 0.0; tau < 60.0; tau += 0.5)
            CHECK(concurrence_at(w, weak, 0.1, tau + 0.5) <= concurrence_at(w, weak, 0.1, tau));
    }
}

TEST_CASE("decoherence_time") {
    const BathModel weak = BathModel::continuum(1e-3);
    double prev = 1e300;
    for (double theta : {0.05, 0.1, 0.2, 0.3, 0.5}) {
        const double t = decoherence_time(weak, theta);
        CHECK(big_gamma(weak, theta, t) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(t < prev);
        prev = t;
    }

    SUBCASE("agrees with a brute-force scan") {
        const BathModel strong = BathModel::continuum(1.0);
        double tau = 0.0;
        while (big_gamma(strong, 1.0, tau + 1e-3) < 1.0) tau += 1e-3;
        CHECK(std::abs(decoherence_time(strong, 1.0) - tau) <= 1e-3);
    }
    SUBCASE("unreachable crossing") {
        const BathModel tiny = BathModel::discretized_ohmic(1e-9, 3);
        CHECK_THROWS_AS(decoherence_time(tiny, 0.1), NotReachedError);
        CHECK_FALSE(first_gamma_crossing(tiny, 0.1, 1.0).has_value());
    }
}

TEST_CASE("sudden_death") {
    const BathModel weak = BathModel::continuum(1e-3);
    CHECK_FALSE(sudden_death_time(WernerParams{0.2}.to_x_state(), weak, 0.2).has_value());
    CHECK_FALSE(sudden_death_gamma(WernerParams{1.0}.to_x_state()).has_value());
    CHECK(*sudden_death_gamma(WernerParams{0.5}.to_x_state()) == doctest::Approx(std::log(2.0)));

    const double tdec = decoherence_time(weak, 0.2);
    const auto t5 = sudden_death_time(WernerParams{0.5}.to_x_state(), weak, 0.2);
    const auto t9 = sudden_death_time(WernerParams{0.9}.to_x_state(), weak, 0.2);
    REQUIRE(t5.has_value());
    REQUIRE(t9.has_value());
    CHECK(*t5 < tdec);
    CHECK(*t9 > tdec);
    CHECK(*t5 < *t9);

    // A product state never had entanglement to lose.
    CHECK_FALSE(sudden_death_time(XState::make(0.25, 0.25, 0.25, 0.25, 0.0, 0.0), weak, 0.2)
                    .has_value());
}

TEST_CASE("populations and concurrence ignore the splittings") {
    std::mt19937 rng(11);
    const BathModel strong = BathModel::continuum(0.3);
    for (int trial = 0; trial < 10; ++trial) {
        const XState x = random_x_state(rng);
        const DenseHermitian a = reduced_state(x, strong, 0.7, 1.5);
        const DenseHermitian b = reduced_state(x, strong, 0.7, 1.5, {2.3, -1.1});
        for (int i = 0; i < 4; ++i) CHECK(a(i, i) == b(i, i));
        CHECK(std::abs(a(0, 3)) == doctest::Approx(std::abs(b(0, 3))).epsilon(1e-14));
        CHECK(std::abs(a(1, 2)) == doctest::Approx(std::abs(b(1, 2))).epsilon(1e-14));
    }
}

TEST_CASE("reduced_trajectory") {
    const BathModel weak = BathModel::continuum(1e-3);
    const XState w = WernerParams{0.5}.to_x_state();
    const std::vector<double> taus{0.0, 1.0, 50.0};
    const auto traj = reduced_trajectory(w, weak, 0.2, taus);
    REQUIRE(traj.size() == 3);
    for (std::size_t i = 0; i < taus.size(); ++i) {
        CHECK(traj[i].tau == taus[i]);
        CHECK(traj[i].concurrence == concurrence_at(w, weak, 0.2, taus[i]));
        CHECK(traj[i].decoherence_mag == decoherence_factor(weak, 0.2, taus[i]).magnitude);
    }
}
