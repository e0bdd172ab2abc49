#ifndef LORACAP_CAPACITY_HPP
#define LORACAP_CAPACITY_HPP

#include <vector>

#include "loracap/params.hpp"
#include "loracap/schemes.hpp"

namespace loracap {

/// Supported device count for one (sf, scheme, target) operating point.
struct CapacityResult {
    int sf = 7;
    SchemeConfig config;
    double target = 0.0;              // required post-decoding success probability
    double required_link_outage = 0.0;  // O_M solving scheme outage = 1 - target
    double n_devices = 0.0;           // mean supported nodes on SF j
    bool reachable = true;            // false when even zero interference misses the target
};

/// Optimizer output: the winning configuration plus any candidate whose
/// capacity is within the near-tie fraction of the winner.
struct OptimizeResult {
    CapacityResult best;
    std::vector<CapacityResult> near_ties;
};

inline constexpr double kNearTieFraction = 0.005;
inline constexpr double kInvertTolerance = 1e-12;

/// The unique o in (0, 1) with scheme_outage(config, o) = target, found by
/// bisection (every closed form is continuous and monotone onto [0, 1]).
double invert_scheme(const SchemeConfig& config, double target_final_outage);

/// Mean device count on SF j sustaining the reliability target at the cell
/// border. Density-independent by construction (it outputs the density).
CapacityResult max_devices(const NetworkScenario& scenario, int sf,
                           const SchemeConfig& config, double target);

enum class OptimizeKind { RT, CT, HT, HTStar };

const char* to_string(OptimizeKind k);

/// Exhaustive enumeration over the valid configurations of the requested
/// family with at most m_cap copies (duty cycle enforced via max_copies).
/// HTStar restricts the copy budget to the optimal CT's. Ties go to the
/// smallest M, then smallest n, then smallest m.
OptimizeResult optimize(const NetworkScenario& scenario, int sf, double target,
                        OptimizeKind kind, int m_cap = 10);

}  // namespace loracap

#endif
