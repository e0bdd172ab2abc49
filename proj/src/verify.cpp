#include "loracap/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "loracap/capacity.hpp"
#include "loracap/channel.hpp"
#include "loracap/mcsim.hpp"
#include "loracap/oracle.hpp"
#include "loracap/rng.hpp"
#include "loracap/schemes.hpp"

namespace loracap::verify {

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, m, fa, flm, fm);
    double right = simpson(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(f, a, b, fa, fm, fb);
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

NetworkScenario reference_scenario() {
    NetworkScenario s;
    s.finalize();
    return s;
}

}  // namespace

double capture_integral_quadrature(double eta, double z, double rel_tol) {
    auto integrand = [eta, z](double t) { return 2.0 * t / (1.0 + z * std::pow(t, eta)); };
    // Pilot pass fixes the absolute tolerance for the requested relative one.
    double pilot = adaptive_simpson(integrand, 0.0, 1.0, 1e-6);
    double tol = std::max(rel_tol * std::abs(pilot), 1e-15);
    return adaptive_simpson(integrand, 0.0, 1.0, tol);
}

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string Report::to_json() const {
    std::ostringstream out;
    out << "{\n  \"all_passed\": " << (all_passed() ? "true" : "false") << ",\n  \"checks\": [\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        out << "    {\"name\": \"" << checks[i].name << "\", \"passed\": "
            << (checks[i].passed ? "true" : "false") << ", \"detail\": \"" << checks[i].detail
            << "\"}" << (i + 1 < checks.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

Report run_verify(bool deep, std::uint64_t seed, int threads) {
    Report report;

    {  // Corollary identities: HT(m,0,r) = RT(m), HT(1,n,1) = CT(n).
        CounterRng rng(seed, 1);
        int samples = deep ? 10000 : 1000;
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            double o = rng.next_double();
            int m = 1 + static_cast<int>(rng.next_u64() % 8);
            int n = 1 + static_cast<int>(rng.next_u64() % 4);
            int r = 1 + static_cast<int>(rng.next_u64() % 8);
            worst = std::max(worst, std::abs(outage_ht(o, m, 0, r) - outage_rt(o, m)));
            worst = std::max(worst, std::abs(outage_ht(o, 1, n, 1) - outage_ct(o, n)));
        }
        report.checks.push_back({"corollary_identities", worst <= 1e-12,
                                 "max deviation " + format_double(worst)});
    }

    {  // Closed form vs enumeration oracle.
        double worst = 0.0;
        int lim = deep ? 3 : 2;
        for (int m = 1; m <= lim; ++m)
            for (int r = 1; r <= lim; ++r)
                for (int n = 1; n <= (deep ? 3 : 2); ++n)
                    for (double o : {0.1, 0.3, 0.5, 0.7, 0.9})
                        worst = std::max(worst, std::abs(oracle::oracle_outage_exact(o, m, n, r) -
                                                         outage_ht(o, m, n, r)));
        report.checks.push_back({"oracle_vs_closed_form", worst <= 1e-12,
                                 "max deviation " + format_double(worst)});
    }

    {  // Hypergeometric evaluator vs quadrature of the capture integrand.
        CounterRng rng(seed, 2);
        int samples = deep ? 1000 : 200;
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            double eta = 2.1 + 3.9 * rng.next_double();
            double z = 1000.0 * rng.next_double();
            double f = hyp2f1_capture(eta, z);
            double q = capture_integral_quadrature(eta, z);
            worst = std::max(worst, std::abs(f - q) / std::abs(q));
        }
        report.checks.push_back({"hyp2f1_vs_quadrature", worst <= 1e-8,
                                 "max relative deviation " + format_double(worst)});
    }

    {  // Peeling decoder never does worse than the counted chain events.
        bool ok = true;
        double worst = 0.0;
        for (int m = 1; m <= 2; ++m)
            for (int r = 1; r <= 2; ++r)
                for (int n = 1; n <= 2; ++n)
                    for (double o : {0.2, 0.5, 0.8}) {
                        double gap = oracle::peeling_outage_exact(o, m, n, r) -
                                     outage_ht(o, m, n, r);
                        worst = std::max(worst, gap);
                        ok = ok && gap <= 1e-12;
                    }
        report.checks.push_back({"peeling_one_sided_bound", ok,
                                 "max (peeling - closed form) " + format_double(worst)});
    }

    {  // Monte Carlo channel estimates vs the analytic expressions.
        NetworkScenario s = reference_scenario();
        std::uint64_t trials = deep ? 1000000 : 100000;
        bool ok = true;
        double worst_sigma = 0.0;
        for (double frac : {0.25, 0.5, 1.0}) {
            for (double n_bar : {50.0, 200.0, 1000.0}) {
                for (int copies : {1, 4}) {
                    NetworkScenario sc = s;
                    sc.set_mean_nodes(7, n_bar);
                    TrialConfig cfg{sc, 7, frac * sc.radius_m, copies, trials, seed, threads};
                    // Deviations are measured against the binomial error of
                    // the analytic probability: the observed error collapses
                    // to zero when no failures land in the sample (H1 is
                    // within 1e-6 of 1 for interior nodes).
                    double nt = static_cast<double>(trials);
                    McEstimate est = simulate_capture(cfg);
                    double analytic = capture_prob(sc, 7, cfg.d1_m, copies);
                    double sigma = std::abs(est.value - analytic) /
                                   std::sqrt(analytic * (1.0 - analytic) / nt);
                    worst_sigma = std::max(worst_sigma, sigma);
                    ok = ok && sigma <= 3.0;

                    McEstimate conn = simulate_connection(cfg);
                    double h1 = connection_prob(sc, 7, cfg.d1_m);
                    double csig = std::abs(conn.value - h1) /
                                  std::sqrt(h1 * (1.0 - h1) / nt);
                    worst_sigma = std::max(worst_sigma, csig);
                    ok = ok && csig <= 3.0;
                }
            }
        }
        report.checks.push_back({"mc_vs_analytic_channel", ok,
                                 "worst deviation " + format_double(worst_sigma) + " sigma"});
    }

    return report;
}

}  // namespace loracap::verify
