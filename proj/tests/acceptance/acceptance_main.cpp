// Acceptance suite: one self-contained check per shipped guarantee, each
// printed as a PASS/FAIL line with its measured residuals and runtime.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "orbita/action_angle.hpp"
#include "orbita/bands.hpp"
#include "orbita/cartan.hpp"
#include "orbita/chart.hpp"
#include "orbita/emit.hpp"
#include "orbita/quantize.hpp"
#include "orbita/reduced.hpp"

using namespace orbita;
using namespace orbita::algebra;
using orbit::ChartPoint;
namespace qz = orbita::quantize;

namespace {

constexpr double kPi = 3.14159265358979323846;
int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report(int idx, const char* name, bool pass, const std::string& detail,
            double secs, double budget) {
    bool in_budget = secs <= budget;
    if (!pass || !in_budget) ++g_failures;
    std::printf("C%-2d %-18s %s (%s) [%.2fs%s]\n", idx, name,
                pass && in_budget ? "PASS" : "FAIL", detail.c_str(), secs,
                in_budget ? "" : " > budget");
}

constexpr Gen kGens[7] = {Gen::L3, Gen::Q1, Gen::Q2, Gen::Q3,
                          Gen::q1, Gen::q2, Gen::q3};

template <typename F>
double nested_bracket(const ReducedState& s, Gen x, F&& h) {
    double scale = 0;
    for (Gen g : kGens) scale = std::fmax(scale, std::abs(s.value(g)));
    double step = 1e-6 * std::fmax(1.0, scale);
    double acc = 0;
    for (int gi = 0; gi < 7; ++gi) {
        ReducedState sp = s, sm = s;
        double ReducedState::* member[7] = {&ReducedState::L3, &ReducedState::Q1,
                                            &ReducedState::Q2, &ReducedState::Q3,
                                            &ReducedState::q1, &ReducedState::q2,
                                            &ReducedState::q3};
        sp.*member[gi] += step;
        sm.*member[gi] -= step;
        acc += (h(sp) - h(sm)) / (2 * step) *
               reduced_bracket_oracle(s, x, kGens[gi]);
    }
    return acc;
}

// ---------------------------------------------------------------- C1
void c1_bracket_fidelity() {
    Timer tm;
    std::mt19937_64 rng(101);
    WeightVector w(60, 20, 0);
    double worst_table = 0, worst_jacobi = 0, worst_central = 0;
    double s2 = w.scale() * w.scale();
    for (int rep = 0; rep < 500; ++rep) {
        ReducedState s = orbit::chart_forward(w, orbit::sample_interior(w, rng));
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b) {
                double o = reduced_bracket_oracle(s, kGens[a], kGens[b]);
                double t = reduced_bracket_table(s, 1.0, kGens[a], kGens[b]);
                worst_table = std::fmax(
                    worst_table, std::abs(o - t) / std::fmax(1.0, std::abs(o)));
            }
        if (rep % 5 == 0) {
            int ia = static_cast<int>(rng() % 7);
            int ib = static_cast<int>((ia + 1 + rng() % 6) % 7);
            int ic = ia;
            while (ic == ia || ic == ib) ic = static_cast<int>(rng() % 7);
            Gen x = kGens[ia], y = kGens[ib], z = kGens[ic];
            double j = nested_bracket(s, x, [&](const ReducedState& t2) {
                           return reduced_bracket_oracle(t2, y, z);
                       }) +
                       nested_bracket(s, y, [&](const ReducedState& t2) {
                           return reduced_bracket_oracle(t2, z, x);
                       }) +
                       nested_bracket(s, z, [&](const ReducedState& t2) {
                           return reduced_bracket_oracle(t2, x, y);
                       });
            worst_jacobi = std::fmax(worst_jacobi, std::abs(j) / s2);
            for (int k = 0; k < 3; ++k) {
                for (Gen x2 : kGens) {
                    double c = nested_bracket(s, x2, [k](const ReducedState& t2) {
                        return t2.casimirs()[k];
                    });
                    worst_central = std::fmax(
                        worst_central, std::abs(c) / std::pow(w.scale(), k + 2));
                }
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "table-oracle %.2e<=1e-9, jacobi %.2e<=1e-7, centrality %.2e<=1e-9",
                  worst_table, worst_jacobi, worst_central);
    report(1, "bracket-fidelity",
           worst_table <= 1e-9 && worst_jacobi <= 1e-7 && worst_central <= 1e-9,
           buf, tm.seconds(), 10.0);
}

// ---------------------------------------------------------------- C2
void c2_canonicity() {
    Timer tm;
    std::mt19937_64 rng(202);
    WeightVector w(60, 20, 0);
    double worst_chart = 0;
    for (int rep = 0; rep < 200; ++rep) {
        ChartPoint c = orbit::sample_interior(w, rng, 5e-3);
        ReducedState s = orbit::chart_forward(w, c);
        double jac[7][4];
        double hs[4] = {1e-6 * w.scale(), 1e-6, 1e-6 * w.scale(), 1e-6};
        for (int v = 0; v < 4; ++v) {
            auto shift = [&](double step) {
                ChartPoint cs = c;
                double* f[4] = {&cs.L, &cs.phi, &cs.p, &cs.gamma};
                *f[v] += step;
                return orbit::chart_forward_unchecked(w, cs);
            };
            ReducedState s2p = shift(2 * hs[v]), s1p = shift(hs[v]);
            ReducedState s1m = shift(-hs[v]), s2m = shift(-2 * hs[v]);
            for (int g = 0; g < 7; ++g)
                jac[g][v] = (-s2p.value(kGens[g]) + 8 * s1p.value(kGens[g]) -
                             8 * s1m.value(kGens[g]) + s2m.value(kGens[g])) /
                            (12 * hs[v]);
        }
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b) {
                double pushed = jac[a][1] * jac[b][0] - jac[a][0] * jac[b][1] +
                                jac[a][3] * jac[b][2] - jac[a][2] * jac[b][3];
                double oracle = reduced_bracket_oracle(s, kGens[a], kGens[b]);
                worst_chart = std::fmax(worst_chart, std::abs(pushed - oracle) /
                                                         std::fmax(1.0, std::abs(oracle)));
            }
    }

    orbit::Kernels kr(w);
    double worst_kappa = 0;
    for (int rep = 0; rep < 200; ++rep) {
        ChartPoint c = orbit::sample_interior(w, rng, 1e-2);
        if (std::abs(kr.q_of(c.L, c.p, c.gamma) - w.p2) < 0.02 * w.scale()) {
            --rep;
            continue;
        }
        double jac[4][4];
        double hs[4] = {1e-6 * w.scale(), 1e-6, 1e-6 * w.scale(), 1e-6};
        for (int v = 0; v < 4; ++v) {
            auto shift = [&](double step) {
                ChartPoint cs = c;
                double* f[4] = {&cs.L, &cs.phi, &cs.p, &cs.gamma};
                *f[v] += step;
                return aa::kappa_forward_raw(w, cs);
            };
            aa::ActionAnglePoint a2p = shift(2 * hs[v]), a1p = shift(hs[v]);
            aa::ActionAnglePoint a1m = shift(-hs[v]), a2m = shift(-2 * hs[v]);
            jac[0][v] = (-a2p.L + 8 * a1p.L - 8 * a1m.L + a2m.L) / (12 * hs[v]);
            jac[1][v] = (8 * std::remainder(a1p.psi - a1m.psi, 2 * kPi) -
                         std::remainder(a2p.psi - a2m.psi, 2 * kPi)) /
                        (12 * hs[v]);
            jac[2][v] = (-a2p.Q + 8 * a1p.Q - 8 * a1m.Q + a2m.Q) / (12 * hs[v]);
            jac[3][v] = (-a2p.theta + 8 * a1p.theta - 8 * a1m.theta + a2m.theta) /
                        (12 * hs[v]);
        }
        double om[4][4] = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double sij = 0;
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b)
                        sij += jac[a][i] * om[a][b] * jac[b][j];
                worst_kappa = std::fmax(worst_kappa, std::abs(sij - om[i][j]));
            }
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "chart %.2e<=1e-6, kappa M'OM-O %.2e<=1e-6",
                  worst_chart, worst_kappa);
    report(2, "canonicity", worst_chart <= 1e-6 && worst_kappa <= 1e-6, buf,
           tm.seconds(), 30.0);
}

// ---------------------------------------------------------------- C3
void c3_eigenvalues() {
    Timer tm;
    double worst = 0;
    bool order_ok = true;
    for (WeightVector w : {WeightVector(60, 20, 0), WeightVector(165, 115, 100),
                           WeightVector(9, 5, 2)}) {
        double tol = 1e-9 * w.scale();
        for (int il = 1; il < 200; ++il) {
            double L = w.l_max() * il / 200.0;
            orbit::QRange r = orbit::q_range(w, L);
            for (int iq = 1; iq < 200; ++iq) {
                double q = r.q_min + (r.q_max - r.q_min) * iq / 200.0;
                orbit::EigenTriple e = orbit::eigenvalues(w, L, q);
                auto rb = cubic_roots_bisect(w.s1(), w.s11() + 0.25 * L * L,
                                             w.s111() + 0.25 * L * L * q);
                worst = std::fmax(worst, std::abs(e.p1 - rb[0]) / w.scale());
                worst = std::fmax(worst, std::abs(e.p2 - rb[1]) / w.scale());
                worst = std::fmax(worst, std::abs(e.p3 - rb[2]) / w.scale());
                bool ok = e.p3 >= w.p3 - tol && e.p1 <= w.p1 + tol;
                if (q >= w.p2)
                    ok = ok && e.p3 <= e.p2 + tol && e.p2 <= w.p2 + tol &&
                         q <= e.p1 + tol;
                else
                    ok = ok && e.p3 <= q + tol && w.p2 <= e.p2 + tol &&
                         e.p2 <= e.p1 + tol;
                order_ok = order_ok && ok;
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "roots rel %.2e<=1e-10, interlacing %s", worst,
                  order_ok ? "held" : "VIOLATED");
    report(3, "eigenvalue-formula", worst <= 1e-10 && order_ok, buf, tm.seconds(),
           60.0);
}

// ---------------------------------------------------------------- C4 + C5
void c45_volume_and_branching() {
    Timer tm;
    double worst = 0;
    bool branch_ok = true;
    long cases = 0;
    for (long lam = 1; lam <= 12; ++lam)
        for (long mu = 1; mu <= 12; ++mu) {
            WeightVector w(static_cast<double>(lam + mu), static_cast<double>(mu), 0.0);
            for (long l = 0; l <= lam + mu; ++l) {
                orbit::QRange r = orbit::q_range(w, static_cast<double>(l));
                double v = qz::volume_q(w, static_cast<double>(l), r.q_max, 1e-9);
                worst = std::fmax(
                    worst, std::abs(v - static_cast<double>(qz::volume_closed(
                                            lam, mu, l))));
                qz::BranchingRecord b = qz::branching(lam, mu, l);
                if (b.d >= 1)
                    branch_ok = branch_ok &&
                                b.d == (qz::volume_closed(lam, mu, l) - b.delta) / 2 + 1;
                ++cases;
            }
        }
    double t4 = tm.seconds();
    char buf[120];
    std::snprintf(buf, sizeof(buf), "|quad-closed| %.2e<=1e-6 over %ld cases", worst,
                  cases);
    report(4, "integer-volume", worst <= 1e-6, buf, t4, 300.0);

    bool singlet = qz::branching(40, 20, 0).d == 1;
    std::snprintf(buf, sizeof(buf), "K-rule vs defect %s, d[60,20,0;L=0]=%ld",
                  branch_ok ? "exact" : "MISMATCH", qz::branching(40, 20, 0).d);
    report(5, "branching", branch_ok && singlet, buf, 0.0, 60.0);
}

// ---------------------------------------------------------------- C6
void c6_total_volume() {
    Timer tm;
    double worst = 0;
    for (WeightVector w : {WeightVector(60, 20, 0), WeightVector(24, 12, 0),
                           WeightVector(10, 3, 0)}) {
        double closed = qz::total_volume(w);
        double quad = qz::total_volume_quad(w);
        worst = std::fmax(worst, std::abs(quad - closed) / closed);
    }
    char buf[80];
    std::snprintf(buf, sizeof(buf), "rel dev %.2e<=1e-4", worst);
    report(6, "total-volume", worst <= 1e-4, buf, tm.seconds(), 120.0);
}

// ---------------------------------------------------------------- C7
void c7_pi_sequence() {
    Timer tm;
    WeightVector w(60, 20, 0);
    qz::PiSequence pi = qz::pi_sequence(w, 1.0);
    double spread = 0;
    for (const auto& m : pi.members) spread = std::fmax(spread, std::abs(m.q - pi.q_pi));
    bool value_ok = std::abs(pi.q_pi - 23.85) <= 0.01;
    bool closed_ok = std::abs(pi.q_pi_closed - pi.q_pi_band) <= 1e-10;
    bool degenerate = spread <= 1e-8;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "Q_pi %.4f in 23.85+-0.01:%s, closed=band %s, spread %.2e<=1e-8",
                  pi.q_pi, value_ok ? "yes" : "NO", closed_ok ? "yes" : "NO", spread);
    report(7, "pi-sequence", value_ok && closed_ok && degenerate, buf, tm.seconds(),
           120.0);
    if (!degenerate && !pi.members.empty())
        std::printf("    note: the members sit exactly at half the level volume; "
                    "their common value holds only to ~%.0e\n"
                    "    (L=%ld gives %.4f, L=%ld gives %.4f), so the 1e-8 "
                    "degeneracy is not a property of the flow\n",
                    spread, pi.members.front().l, pi.members.front().q,
                    pi.members.back().l, pi.members.back().q);
}

// ---------------------------------------------------------------- C8
void c8_spectrum_files() {
    Timer tm;
    WeightVector w(60, 20, 0);
    long expected_rows = 0;
    for (long l = 0; l <= 60; ++l) expected_rows += qz::multiplicity_k_rule(40, 20, l);

    bool ok = true;
    std::string detail;
    for (double s : {1.0, -1.0}) {
        qz::SpectrumTable t = qz::build_spectrum(w, s, 1e-9);
        io::SpectrumFile f = io::make_spectrum_file(w, t);
        ok = ok && (t.rows.size() == static_cast<size_t>(expected_rows));
        // gap annotation of the lower family
        std::string want = s > 0 ? "P-: dL=2 (parity split)" : "P-: dL=1";
        bool found = false;
        for (const auto& note : f.gap_notes) found = found || note == want;
        ok = ok && found;
        detail += (s > 0 ? "s=+1 " : "s=-1 ") + std::to_string(t.rows.size()) +
                  " rows, ";
    }
    // endpoints of the populated families against the catalog intersections
    orbit::BandCatalog cat = orbit::band_catalog(w);
    qz::SpectrumTable t = qz::build_spectrum(w, 1.0, 1e-9);
    io::SpectrumFile f = io::make_spectrum_file(w, t);
    auto state_q = [&](long l, bool top) -> double {
        double q = 1e300;
        long d = qz::multiplicity_k_rule(40, 20, l);
        for (const auto& r : t.rows)
            if (r.l == l && r.k == (top ? d : 1)) q = r.q;
        return q;
    };
    double tol = 1e-8 * w.scale();
    for (const auto& in : cat.intersections) {
        long li = std::lround(in.l);
        if (std::abs(in.l - li) > 1e-9 || li % 2) continue; // exact grid points only
        bool upper = in.a == orbit::BandKind::Pplus;
        double q = state_q(li, upper);
        ok = ok && std::abs(q - in.q) <= tol;
    }
    // the emitted catalog curves terminate exactly on the intersections
    for (const auto& in : cat.intersections) {
        for (const auto& b : cat.bands) {
            if (b.stability == orbit::Stability::Saddle) continue;
            if (b.kind != in.a && b.kind != in.b) continue;
            bool at_min = std::abs(b.l_min - in.l) < 1e-12 * w.scale();
            bool at_max = std::abs(b.l_max - in.l) < 1e-12 * w.scale();
            if (!at_min && !at_max) continue;
            double q = b.q_of_l(in.l);
            ok = ok && std::abs(q - in.q) < 1e-9 * w.scale();
        }
    }
    detail += "endpoints on intersections";
    report(8, "spectrum-files", ok, detail, tm.seconds(), 300.0);
}

// ---------------------------------------------------------------- C9
void c9_dynamics() {
    Timer tm;
    std::mt19937_64 rng(909);
    orbit::HamiltonianSpec h;
    h.omega_custom = [](double) { return 1.0; };
    h.omega_prime_custom = [](double) { return 0.0; };
    double worst = 0, worst_close = 0;
    const WeightVector orbits[3] = {WeightVector(60, 20, 0),
                                    WeightVector(165, 115, 100),
                                    WeightVector(11, 6, 2)};
    for (int rep = 0; rep < 20; ++rep) {
        const WeightVector& w = orbits[rep % 3];
        orbit::Kernels kr(w);
        ChartPoint c0;
        for (;;) {
            c0 = orbit::sample_interior(w, rng, 1e-2);
            if (std::abs(kr.q_of(c0.L, c0.p, c0.gamma) - w.p2) > 0.02 * w.scale())
                break;
        }
        aa::ActionAnglePoint a0 = aa::kappa_forward(w, c0);
        wobble::ActionKernel k(w, a0.L, a0.Q);
        double period = 8.0 * k.half_period(a0.L);
        auto closed = aa::trajectory_closed(w, a0, h, period, 211);
        auto rk = aa::trajectory_rk4(w, a0.L, a0.Q, c0.p, c0.gamma, c0.phi, h,
                                     period, 100000, 211);
        for (size_t i = 0; i < closed.size(); ++i) {
            worst = std::fmax(worst, std::abs(closed[i].p - rk[i].p) / w.scale());
            worst = std::fmax(worst, std::abs(closed[i].gamma - rk[i].gamma));
        }
        worst_close = std::fmax(
            worst_close,
            std::fmax(std::abs(rk.front().p - rk.back().p) / w.scale(),
                      std::abs(rk.front().gamma - rk.back().gamma)));
    }
    // separatrix detection on the middle axial family
    WeightVector w(60, 20, 0);
    orbit::BandCatalog cat = orbit::band_catalog(w);
    bool saddle_zero = false;
    for (const auto& b : cat.bands)
        if (b.stability == orbit::Stability::Saddle)
            saddle_zero = aa::wobbling_frequency(w, b, 0.5 * b.l_max, h) == 0.0;
    char buf[140];
    std::snprintf(buf, sizeof(buf),
                  "sup|closed-rk4| %.2e<=1e-6, closure %.2e<=1e-7, saddle freq %s",
                  worst, worst_close, saddle_zero ? "0" : "NONZERO");
    report(9, "dynamics", worst <= 1e-6 && worst_close <= 1e-7 && saddle_zero, buf,
           tm.seconds(), 300.0);
}

// ---------------------------------------------------------------- C10
void c10_cartan_suite() {
    Timer tm;
    std::mt19937_64 rng(1010);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> uni(0.2, 5.0);
    double worst_props = 0, worst_fd = 0;
    int coplanar_checked = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        Vec3 v{g(rng), g(rng), g(rng)};
        double n = norm(v);
        if (n < 1e-3 || n + v.z < 1e-3 * n) {
            --rep;
            continue;
        }
        v = v * (uni(rng) / n);
        Mat3 m = cartan::cartan_matrix(v).m;
        // orthogonality, unit determinant
        worst_props =
            std::fmax(worst_props, max_abs_diff(matmul(transpose(m), m),
                                                Mat3::identity()));
        worst_props = std::fmax(worst_props, std::abs(det(m) - 1.0));
        // scale invariance
        worst_props = std::fmax(
            worst_props, max_abs_diff(m, cartan::cartan_matrix(v * 2.3).m));
        // alignment and star properties
        worst_props = std::fmax(
            worst_props, norm(matvec(m, {0, 0, 1}) - v / norm(v)));
        worst_props = std::fmax(
            worst_props,
            norm(matvec(m, cartan::star(v)) - Vec3{0, 0, norm(v)}) / (1 + norm(v)));
        worst_props = std::fmax(
            worst_props,
            max_abs_diff(cartan::cartan_matrix(cartan::star(v)).m, transpose(m)));
        // fixed transverse axis
        Vec3 ax = cross(v, {0, 0, 1});
        if (norm(ax) > 1e-6)
            worst_props = std::fmax(
                worst_props, norm(matvec(m, ax) - ax) / (1 + norm(ax)));
        // meridian decomposition
        if (norm(ax) > 1e-3 * norm(v)) {
            Mat3 rhs = matmul(
                cartan::cartan_matrix(cross(Vec3{0, 0, 1}, v)).m,
                matmul(cartan::rot3(cartan::section_angle(v)),
                       cartan::cartan_matrix(cartan::star(cross(Vec3{0, 0, 1}, v))).m));
            worst_props = std::fmax(worst_props, max_abs_diff(m, rhs));
        }
        // coplanar composition
        Vec3 a = v * (g(rng) * 0.4) + Vec3{0, 0, 1} * (g(rng) * 0.4 + 1.0);
        if (norm(a) > 1e-3 && norm(a) + a.z > 1e-3 * norm(a)) {
            Vec3 va = matvec(m, a);
            if (norm(va) + va.z > 1e-3 * norm(va)) {
                worst_props = std::fmax(
                    worst_props,
                    max_abs_diff(cartan::cartan_matrix(va).m,
                                 matmul(m, cartan::cartan_matrix(a).m)));
                ++coplanar_checked;
            }
        }
        // differential identity under central finite differences
        auto ac = cartan::appendix_coeffs(v, norm(v));
        double h = 1e-6 * std::fmax(1.0, norm(v));
        for (int j = 0; j < 3; ++j) {
            Vec3 vp = v, vm = v;
            vp[j] += h;
            vm[j] -= h;
            Mat3 mp = cartan::cartan_matrix(vp).m;
            Mat3 mm = cartan::cartan_matrix(vm).m;
            for (int a2 = 0; a2 < 3; ++a2)
                for (int i = 0; i < 3; ++i)
                    worst_fd = std::fmax(
                        worst_fd, std::abs((mp[a2][i] - mm[a2][i]) / (2 * h) -
                                           ac.d_section_first(m, a2, i, j)));
        }
    }
    char buf[140];
    std::snprintf(buf, sizeof(buf),
                  "properties %.2e<=1e-12, d-section FD %.2e<=1e-6 (%d coplanar)",
                  worst_props, worst_fd, coplanar_checked);
    report(10, "cartan-appendix", worst_props <= 1e-12 && worst_fd <= 1e-6, buf,
           tm.seconds(), 5.0);
}

} // namespace

int main() {
    setvbuf(stdout, nullptr, _IONBF, 0);
    std::printf("acceptance suite\n----------------\n");
    c1_bracket_fidelity();
    c2_canonicity();
    c3_eigenvalues();
    c45_volume_and_branching();
    c6_total_volume();
    c7_pi_sequence();
    c8_spectrum_files();
    c9_dynamics();
    c10_cartan_suite();
    std::printf("----------------\n%s (%d failure%s)\n",
                g_failures ? "SUITE FAILED" : "SUITE PASSED", g_failures,
                g_failures == 1 ? "" : "s");
    return g_failures ? 1 : 0;
}
