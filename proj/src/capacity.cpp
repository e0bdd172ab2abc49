#include "loracap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "loracap/channel.hpp"

namespace loracap {

const char* to_string(OptimizeKind k) {
    switch (k) {
        case OptimizeKind::RT: return "RT";
        case OptimizeKind::CT: return "CT";
        case OptimizeKind::HT: return "HT";
        case OptimizeKind::HTStar: return "HT*";
    }
    return "?";
}

double invert_scheme(const SchemeConfig& config, double target_final_outage) {
    config.validate();
    if (!(target_final_outage > 0.0 && target_final_outage < 1.0))
        throw std::domain_error("invert_scheme: target must be in (0, 1)");
    double lo = 0.0, hi = 1.0;
    // The closed forms map [0,1] onto [0,1] monotonically, so the bracket
    // always holds. 2^-64 < 1e-12 after at most 64 halvings.
    while (hi - lo > kInvertTolerance) {
        double mid = 0.5 * (lo + hi);
        if (scheme_outage(config, mid).final_outage < target_final_outage)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

CapacityResult max_devices(const NetworkScenario& scenario, int sf,
                           const SchemeConfig& config, double target) {
    if (!(target > 0.0 && target < 1.0))
        throw std::domain_error("max_devices: target must be in (0, 1)");
    CapacityResult res;
    res.sf = sf;
    res.config = config;
    res.target = target;
    res.required_link_outage = invert_scheme(config, 1.0 - target);

    // Worst-case position: the cell border.
    double h1 = connection_prob(scenario, sf, scenario.radius_m);
    double q_needed = (1.0 - res.required_link_outage) / h1;
    if (q_needed > 1.0) {
        res.reachable = false;
        res.n_devices = 0.0;
        return res;
    }
    double f21 = hyp2f1_capture(scenario.ploss_exponent, 1.0 / scenario.theta_linear);
    double denom = 2.0 * config.copies() * activity_factor(scenario, sf) * f21;
    res.n_devices = -std::log(q_needed) / denom;
    return res;
}

namespace {

// Smaller M wins ties, then smaller n, then smaller m.
bool better(const CapacityResult& a, const CapacityResult& b) {
    if (a.reachable != b.reachable) return a.reachable;
    if (a.n_devices != b.n_devices) return a.n_devices > b.n_devices;
    return std::make_tuple(a.config.copies(), a.config.n, a.config.m) <
           std::make_tuple(b.config.copies(), b.config.n, b.config.m);
}

std::vector<SchemeConfig> candidates_for(OptimizeKind kind, int cap) {
    std::vector<SchemeConfig> out;
    switch (kind) {
        case OptimizeKind::RT:
            for (int m = 1; m <= cap; ++m) out.push_back(SchemeConfig::rt(m));
            break;
        case OptimizeKind::CT:
            for (int n = 0; n + 1 <= cap; ++n) out.push_back(SchemeConfig::ct(n));
            break;
        case OptimizeKind::HT:
        case OptimizeKind::HTStar:
            for (int m = 1; m <= cap; ++m) {
                out.push_back(SchemeConfig::ht(m, 0, 1));
                for (int n = 1; n <= cap; ++n)
                    for (int r = 1; m + n * r <= cap; ++r)
                        out.push_back(SchemeConfig::ht(m, n, r));
            }
            break;
    }
    return out;
}

}  // namespace

OptimizeResult optimize(const NetworkScenario& scenario, int sf, double target,
                        OptimizeKind kind, int m_cap) {
    int cap = max_copies(scenario, sf, m_cap);
    if (kind == OptimizeKind::HTStar) {
        // Same resource budget as the best CT configuration.
        OptimizeResult ct = optimize(scenario, sf, target, OptimizeKind::CT, m_cap);
        cap = std::min(cap, ct.best.config.copies());
    }

    std::vector<CapacityResult> evaluated;
    for (const SchemeConfig& cfg : candidates_for(kind, cap))
        evaluated.push_back(max_devices(scenario, sf, cfg, target));
    std::sort(evaluated.begin(), evaluated.end(), better);

    OptimizeResult result;
    result.best = evaluated.front();
    for (std::size_t i = 1; i < evaluated.size(); ++i) {
        const CapacityResult& c = evaluated[i];
        if (c.reachable && c.n_devices >= result.best.n_devices * (1.0 - kNearTieFraction))
            result.near_ties.push_back(c);
    }
    return result;
}

}  // namespace loracap
