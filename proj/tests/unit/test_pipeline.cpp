#include <doctest.h>

#include <cmath>
#include <random>

#include "orbita/action_angle.hpp"
#include "orbita/cartan.hpp"
#include "orbita/chart.hpp"
#include "orbita/linalg.hpp"
#include "orbita/reduced.hpp"
#include "orbita/u3.hpp"

using namespace orbita;
using namespace orbita::algebra;

namespace {

std::mt19937_64 rng(2718);

// orbit weights of a moment matrix from its trace powers
WeightVector orbit_of(const U3Element& a) {
    auto c = a.casimirs();
    double e1 = c[0];
    double e2 = 0.5 * (c[0] * c[0] - c[1]);
    double e3 = (c[0] * c[0] * c[0] - 3.0 * c[0] * c[1] + 2.0 * c[2]) / 6.0;
    auto r = cubic_roots_bisect(e1, e2, e3);
    return WeightVector(r[0], r[1], r[2]);
}

} // namespace

TEST_CASE("many-particle pipeline: moments to action-angle flow and back") {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int done = 0;
    for (int attempt = 0; attempt < 400 && done < 25; ++attempt) {
        std::vector<Vec3> xs, ps;
        std::vector<double> ms;
        for (int k = 0; k < 6; ++k) {
            xs.push_back({u(rng), u(rng), u(rng)});
            ps.push_back({u(rng), u(rng), u(rng)});
            ms.push_back(0.5 + std::abs(u(rng)));
        }
        U3Element a = u3_from_particles(xs, ps, ms, 1.0);
        Vec3 lv = a.angular_momentum();
        if (norm(lv) < 0.3) continue;

        // rotate into the frame with L along +e3 and read off the state
        U3Element b = cartan::amf_reduce(a, +1);
        ReducedState s = ReducedState::from_matrix(b.a);
        CHECK(s.L3 == doctest::Approx(norm(lv)).epsilon(1e-12));

        WeightVector w = orbit_of(a);
        if (w.lambda() < 0.2 || w.mu() < 0.2) continue;
        auto cas = s.casimirs();
        CHECK(cas[0] == doctest::Approx(w.s1()).epsilon(1e-10));
        CHECK(cas[1] == doctest::Approx(w.s2()).epsilon(1e-10));
        CHECK(cas[2] == doctest::Approx(w.s3()).epsilon(1e-10));

        // chart the state; skip the measure-zero boundary neighborhoods
        orbit::ChartPoint c;
        try {
            c = orbit::chart_inverse(w, s);
        } catch (const Error&) {
            continue;
        }
        ReducedState s2 = orbit::chart_forward(w, c);
        CHECK(s2.Q1 == doctest::Approx(s.Q1).epsilon(1e-8));
        CHECK(s2.q1 == doctest::Approx(s.q1).epsilon(1e-8));
        CHECK(s2.q3 == doctest::Approx(s.q3).epsilon(1e-8));

        // push through the wobbling variables and one flow period
        orbit::Kernels kr(w);
        if (std::abs(kr.q_of(c.L, c.p, c.gamma) - w.p2) < 0.02 * w.scale()) continue;
        orbit::HamiltonianSpec h;
        h.omega_custom = [](double) { return 0.7; };
        h.omega_prime_custom = [](double) { return 0.0; };
        aa::ActionAnglePoint a0 = aa::kappa_forward(w, c);
        wobble::ActionKernel kern(w, a0.L, a0.Q);
        double period = 2.0 * kern.half_period(a0.L) / (0.25 * 0.7);
        aa::ActionAnglePoint a1 = aa::evolve(w, a0, h, period);
        orbit::ChartPoint c1 = aa::kappa_inverse(w, a1);
        CHECK(c1.p == doctest::Approx(c.p).epsilon(1e-8));
        CHECK(c1.gamma == doctest::Approx(c.gamma).epsilon(1e-8));
        ++done;
    }
    CHECK(done >= 25);
}
