// Command-line front end: verification suites, band tables, quantized
// spectra and closed-form trajectories with an optional independent
// integrator column.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>

#include "orbita/action_angle.hpp"
#include "orbita/bands.hpp"
#include "orbita/cartan.hpp"
#include "orbita/chart.hpp"
#include "orbita/elliptic.hpp"
#include "orbita/emit.hpp"
#include "orbita/quantize.hpp"
#include "orbita/reduced.hpp"

using namespace orbita;
namespace qz = orbita::quantize;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgs = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumerics = 3;

struct OrbitArgs {
    std::vector<double> p;      // --p p1,p2,p3
    double lam = -1, mu = -1, p3 = 0;

    WeightVector resolve() const {
        if (p.size() == 3) return WeightVector(p[0], p[1], p[2]);
        if (lam > 0 && mu > 0)
            return WeightVector(p3 + lam + mu, p3 + mu, p3);
        throw Error("no orbit given: use --p p1,p2,p3 or --lam/--mu [--p3]");
    }
};

double quad_tol_env(double fallback) {
    const char* v = std::getenv("ORBITA_QUAD_TOL");
    if (!v) return fallback;
    double t = std::atof(v);
    return t > 0 ? t : fallback;
}

std::string meta_json(const WeightVector& w, const std::string& extra) {
    std::ostringstream os;
    os << "{\"orbit\": [" << io::num(w.p1) << "," << io::num(w.p2) << ","
       << io::num(w.p3) << "], \"version\": \"1.0\"";
    if (!extra.empty()) os << ", " << extra;
    os << "}";
    return os.str();
}

void emit_table(const io::Table& t, const std::string& format,
                const std::string& out, const std::string& meta) {
    std::string text = format == "json" ? io::to_json(t, meta) : t.to_csv();
    if (out.empty() || out == "-")
        std::fputs(text.c_str(), stdout);
    else
        io::write_file(out, text);
}

// ------------------------------------------------------------------ verify
struct SuiteResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass() const { return residual <= tolerance; }
};

SuiteResult verify_brackets(const WeightVector& w, int states) {
    using namespace orbita::algebra;
    std::mt19937_64 rng(1);
    constexpr Gen gens[7] = {Gen::L3, Gen::Q1, Gen::Q2, Gen::Q3,
                             Gen::q1, Gen::q2, Gen::q3};
    double worst = 0;
    for (int rep = 0; rep < states; ++rep) {
        ReducedState s = orbit::chart_forward(w, orbit::sample_interior(w, rng));
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b) {
                double o = reduced_bracket_oracle(s, gens[a], gens[b]);
                double t = reduced_bracket_table(s, 1.0, gens[a], gens[b]);
                worst = std::fmax(worst,
                                  std::abs(o - t) / std::fmax(1.0, std::abs(o)));
            }
    }
    return {"brackets", worst, 1e-9};
}

SuiteResult verify_cartan(int samples) {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        Vec3 v{g(rng), g(rng), g(rng)};
        double n = norm(v);
        if (n < 1e-3 || n + v.z < 1e-3 * n) {
            --i;
            continue;
        }
        Mat3 m = cartan::cartan_matrix(v).m;
        worst = std::fmax(worst, max_abs_diff(matmul(transpose(m), m),
                                              Mat3::identity()));
        worst = std::fmax(worst, std::abs(det(m) - 1.0));
        worst = std::fmax(worst, norm(matvec(m, cartan::star(v)) -
                                      Vec3{0, 0, norm(v)}) /
                                     (1 + norm(v)));
    }
    return {"cartan", worst, 1e-12};
}

SuiteResult verify_roots(const WeightVector& w, int grid) {
    double worst = 0;
    for (int il = 1; il < grid; ++il) {
        double L = w.l_max() * il / grid;
        orbit::QRange r = orbit::q_range(w, L);
        for (int iq = 1; iq < grid; ++iq) {
            double q = r.q_min + (r.q_max - r.q_min) * iq / grid;
            orbit::EigenTriple e = orbit::eigenvalues(w, L, q);
            auto rb = cubic_roots_bisect(w.s1(), w.s11() + 0.25 * L * L,
                                         w.s111() + 0.25 * L * L * q);
            worst = std::fmax(worst, std::abs(e.p1 - rb[0]) / w.scale());
            worst = std::fmax(worst, std::abs(e.p2 - rb[1]) / w.scale());
            worst = std::fmax(worst, std::abs(e.p3 - rb[2]) / w.scale());
        }
    }
    return {"roots", worst, 1e-10};
}

SuiteResult verify_elliptic() {
    double worst = 0;
    for (int i = 0; i <= 20; ++i) {
        double m = 0.045 * i;
        worst = std::fmax(worst, std::abs(elliptic::comp_first(m) -
                                          elliptic::agm_comp_first(m)));
    }
    worst = std::fmax(worst,
                      std::abs(elliptic::inc_first(1.0, 0.0) - 1.0));
    return {"elliptic", worst, 1e-12};
}

SuiteResult verify_volume(int wmax) {
    double worst = 0;
    for (long lam = 1; lam <= wmax; ++lam)
        for (long mu = 1; mu <= wmax; ++mu) {
            WeightVector w(static_cast<double>(lam + mu),
                           static_cast<double>(mu), 0.0);
            for (long l = 0; l <= lam + mu; ++l) {
                orbit::QRange r = orbit::q_range(w, static_cast<double>(l));
                double v = qz::volume_q(w, static_cast<double>(l), r.q_max, 1e-9);
                worst = std::fmax(
                    worst,
                    std::abs(v - static_cast<double>(qz::volume_closed(lam, mu, l))));
            }
        }
    return {"volume", worst, 1e-6};
}

SuiteResult verify_dynamics(const WeightVector& w) {
    std::mt19937_64 rng(3);
    orbit::HamiltonianSpec h;
    h.omega_custom = [](double) { return 1.0; };
    h.omega_prime_custom = [](double) { return 0.0; };
    orbit::Kernels kr(w);
    double worst = 0;
    for (int rep = 0; rep < 4; ++rep) {
        orbit::ChartPoint c0;
        do {
            c0 = orbit::sample_interior(w, rng, 1e-2);
        } while (std::abs(kr.q_of(c0.L, c0.p, c0.gamma) - w.p2) < 0.02 * w.scale());
        aa::ActionAnglePoint a0 = aa::kappa_forward(w, c0);
        wobble::ActionKernel k(w, a0.L, a0.Q);
        double period = 8.0 * k.half_period(a0.L);
        auto closed = aa::trajectory_closed(w, a0, h, period, 50);
        auto rk = aa::trajectory_rk4(w, a0.L, a0.Q, c0.p, c0.gamma, c0.phi, h,
                                     period, 50000, 50);
        for (size_t i = 0; i < closed.size(); ++i) {
            worst = std::fmax(worst, std::abs(closed[i].p - rk[i].p) / w.scale());
            worst = std::fmax(worst, std::abs(closed[i].gamma - rk[i].gamma));
        }
    }
    return {"dynamics", worst, 1e-6};
}

int run_verify(const OrbitArgs& orbit_args, const std::string& suite,
               const std::string& format, double tol_override) {
    if (tol_override != -1 && tol_override <= 0) {
        std::fprintf(stderr, "verify: tolerance override must be positive\n");
        return kExitArgs;
    }
    WeightVector w = orbit_args.p.empty() && orbit_args.lam < 0
                         ? WeightVector(60, 20, 0)
                         : orbit_args.resolve();
    std::vector<SuiteResult> results;
    try {
        if (suite.empty() || suite == "brackets") results.push_back(verify_brackets(w, 100));
        if (suite.empty() || suite == "cartan") results.push_back(verify_cartan(300));
        if (suite.empty() || suite == "roots") results.push_back(verify_roots(w, 60));
        if (suite.empty() || suite == "elliptic") results.push_back(verify_elliptic());
        if (suite.empty() || suite == "volume") results.push_back(verify_volume(5));
        if (suite.empty() || suite == "dynamics") results.push_back(verify_dynamics(w));
    } catch (const QuadratureFailure& e) {
        std::fprintf(stderr, "verify: %s\n", e.what());
        return kExitNumerics;
    }
    if (results.empty()) {
        std::fprintf(stderr, "verify: unknown suite '%s'\n", suite.c_str());
        return kExitArgs;
    }
    if (tol_override > 0)
        for (auto& r : results) r.tolerance = tol_override;

    bool all = true;
    if (format == "json") {
        std::printf("{\n  \"meta\": %s,\n  \"suites\": [\n",
                    meta_json(w, "").c_str());
        for (size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            all = all && r.pass();
            std::printf("    {\"suite\": \"%s\", \"max_residual\": %s, "
                        "\"tolerance\": %s, \"pass\": %s}%s\n",
                        r.name.c_str(), io::num(r.residual).c_str(),
                        io::num(r.tolerance).c_str(), r.pass() ? "true" : "false",
                        i + 1 < results.size() ? "," : "");
        }
        std::printf("  ]\n}\n");
    } else {
        std::printf("suite      max-residual   tolerance   status\n");
        for (const auto& r : results) {
            all = all && r.pass();
            std::printf("%-10s %-14.3e %-11.0e %s\n", r.name.c_str(), r.residual,
                        r.tolerance, r.pass() ? "pass" : "FAIL");
        }
    }
    return all ? kExitOk : kExitNumerics;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reduced dynamics on u(3) coadjoint orbits"};
    app.require_subcommand(1);

    OrbitArgs orbit_args;
    std::string format = "csv", out, suite;
    double tol_override = -1;

    auto add_orbit_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", orbit_args.p, "orbit weights p1,p2,p3")
            ->delimiter(',')
            ->expected(3);
        cmd->add_option("--lam", orbit_args.lam, "weight gap p1 - p2");
        cmd->add_option("--mu", orbit_args.mu, "weight gap p2 - p3");
        cmd->add_option("--p3", orbit_args.p3, "smallest weight (default 0)");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
        cmd->add_option("--out", out, "output path (default stdout)");
    };

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    add_orbit_opts(verify);
    verify->add_option("--suite", suite,
                       "brackets|cartan|roots|elliptic|volume|dynamics");
    verify->add_option("--tol", tol_override, "tolerance override");

    auto* bands = app.add_subcommand("bands", "equilibrium band tables");
    int l_steps = 128;
    double ham_r = 2.0, ham_s = 2.0;
    add_orbit_opts(bands);
    bands->add_option("--l-steps", l_steps, "grid points per band")
        ->check(CLI::PositiveNumber);
    bands->add_option("--r", ham_r, "det-power family exponent r <= 2");
    bands->add_option("--s", ham_s, "det-power family exponent s >= 0");

    auto* spectrum = app.add_subcommand("spectrum", "quantized (L,Q) tables");
    double branch_s = 1.0;
    add_orbit_opts(spectrum);
    spectrum->add_option("--s", branch_s, "branch parameter in [-1,1]");

    auto* traj = app.add_subcommand("trajectory", "closed-form time series");
    double tl = 30, tq = 25, tpsi = 0, ttheta = 0.1, t_end = -1, omega0 = 1.0,
           e0 = 0.0;
    int samples = 256;
    bool with_oracle = false;
    add_orbit_opts(traj);
    traj->add_option("--L", tl, "angular momentum");
    traj->add_option("--Q", tq, "wobbling momentum");
    traj->add_option("--psi", tpsi, "precession angle");
    traj->add_option("--theta", ttheta, "wobbling angle");
    traj->add_option("--t-end", t_end, "integration time (default one period)");
    traj->add_option("--samples", samples, "number of rows")
        ->check(CLI::PositiveNumber);
    traj->add_option("--omega", omega0, "base frequency");
    traj->add_option("--E0", e0, "energy offset");
    traj->add_flag("--oracle", with_oracle,
                   "append independent Runge-Kutta columns");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(orbit_args, suite, format, tol_override);

        WeightVector w = orbit_args.resolve();

        if (bands->parsed()) {
            orbit::BandCatalog cat = orbit::band_catalog(w, ham_r, ham_s);
            if (format == "svg") {
                std::string svg = io::bands_svg(w, cat, l_steps);
                if (out.empty())
                    std::fputs(svg.c_str(), stdout);
                else
                    io::write_file(out, svg);
                return kExitOk;
            }
            io::Table t = io::make_band_table(w, cat, l_steps);
            emit_table(t, format, out, meta_json(w, "\"kind\": \"bands\""));
            return kExitOk;
        }

        if (spectrum->parsed()) {
            long lam = std::lround(w.lambda()), mu = std::lround(w.mu());
            if (std::abs(w.lambda() - lam) > 1e-9 || std::abs(w.mu() - mu) > 1e-9) {
                std::fprintf(stderr, "spectrum: lambda and mu must be integers\n");
                return kExitDomain;
            }
            qz::SpectrumTable table =
                qz::build_spectrum(w, branch_s, quad_tol_env(1e-9));
            if (format == "svg") {
                std::string svg = io::spectrum_svg(w, table);
                if (out.empty())
                    std::fputs(svg.c_str(), stdout);
                else
                    io::write_file(out, svg);
                return kExitOk;
            }
            io::SpectrumFile f = io::make_spectrum_file(w, table);
            std::ostringstream extra;
            extra << "\"kind\": \"spectrum\", \"s\": " << io::num(branch_s)
                  << ", \"quad_tol\": " << io::num(quad_tol_env(1e-9))
                  << ", \"Q_pi\": " << io::num(table.pi.q_pi) << ", \"notes\": [";
            for (size_t i = 0; i < f.gap_notes.size(); ++i)
                extra << (i ? "," : "") << '"' << f.gap_notes[i] << '"';
            extra << "]";
            emit_table(f.states, format, out, meta_json(w, extra.str()));
            if (!out.empty() && format == "csv") {
                io::write_file(out + ".bands", f.band_lines.to_csv());
            }
            return kExitOk;
        }

        if (traj->parsed()) {
            orbit::HamiltonianSpec h;
            h.e0 = e0;
            h.omega0 = omega0;
            if (w.p_geo() <= 0)
                h.omega_custom = [omega0](double) { return omega0; };
            if (!orbit::in_projection(w, tl, tq)) {
                std::fprintf(stderr, "trajectory: (L,Q) outside the orbit\n");
                return kExitDomain;
            }
            aa::ActionAnglePoint a0{tl, tq, tpsi, ttheta};
            wobble::ActionKernel kern(w, tl, tq);
            if (kern.saddle()) {
                std::fprintf(stderr,
                             "trajectory: separatrix level set has no period\n");
                return kExitDomain;
            }
            double period = 2.0 * kern.half_period(tl) /
                            (0.25 * h.omega_of_l(w, tl));
            double tend = t_end > 0 ? t_end : period;
            auto closed = aa::trajectory_closed(w, a0, h, tend, samples);
            orbit::ChartPoint c0 = aa::kappa_inverse(w, a0);
            std::vector<aa::TrajectorySample> rk;
            if (with_oracle)
                rk = aa::trajectory_rk4(w, tl, tq, c0.p, c0.gamma, c0.phi, h, tend,
                                        100000, samples);
            io::Table t;
            t.header = {"t", "L",     "Q",   "psi", "theta", "p",
                        "gamma", "phi", "H", "C1",  "C2",    "C3"};
            if (with_oracle) {
                t.header.push_back("p_rk4");
                t.header.push_back("gamma_rk4");
            }
            double sup_dev = 0;
            for (size_t i = 0; i < closed.size(); ++i) {
                double tt = closed[i].t;
                aa::ActionAnglePoint at = aa::evolve(w, a0, h, tt);
                orbit::ChartPoint ct{tl, closed[i].p, closed[i].phi,
                                     closed[i].gamma, 2, 0};
                auto cas = orbit::chart_forward_unchecked(w, ct).casimirs();
                std::vector<std::string> row = {
                    io::num(tt),
                    io::num(tl),
                    io::num(tq),
                    io::num(at.psi),
                    io::num(at.theta),
                    io::num(closed[i].p),
                    io::num(closed[i].gamma),
                    io::num(closed[i].phi),
                    io::num(h.linear_value(w, tl, tq)),
                    io::num(cas[0]),
                    io::num(cas[1]),
                    io::num(cas[2])};
                if (with_oracle) {
                    row.push_back(io::num(rk[i].p));
                    row.push_back(io::num(rk[i].gamma));
                    sup_dev = std::fmax(sup_dev,
                                        std::abs(rk[i].p - closed[i].p) / w.scale());
                }
                t.rows.push_back(row);
            }
            emit_table(t, format, out, meta_json(w, "\"kind\": \"trajectory\""));
            if (with_oracle && sup_dev > 1e-6) {
                std::fprintf(stderr,
                             "trajectory: integrator deviation %.3e above 1e-6\n",
                             sup_dev);
                return kExitNumerics;
            }
            return kExitOk;
        }
    } catch (const OutOfDomain& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitDomain;
    } catch (const OutsideProjection& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitDomain;
    } catch (const DegenerateOrbit& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitDomain;
    } catch (const QuadratureFailure& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitNumerics;
    } catch (const Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitArgs;
    }
    return kExitArgs;
}
