#ifndef LORACAP_VERIFY_HPP
#define LORACAP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace loracap::verify {

/// Independent evaluation of the capture integral 2 * int_0^1 t/(1+z t^eta) dt
/// by adaptive Simpson quadrature. Equals hyp2f1_capture(eta, z) but never
/// touches the series code path.
double capture_integral_quadrature(double eta, double z, double rel_tol = 1e-12);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    std::string to_json() const;
};

/// Runs the invariant suites: corollary identities, oracle-vs-closed-form
/// agreement, hypergeometric-vs-quadrature agreement, peeling bound, and
/// Monte Carlo vs analytic channel agreement. Deep mode uses the full
/// acceptance-sized grids and trial counts.
Report run_verify(bool deep, std::uint64_t seed, int threads);

}  // namespace loracap::verify

#endif
