#ifndef LORACAP_SCHEMES_HPP
#define LORACAP_SCHEMES_HPP

#include "loracap/params.hpp"

namespace loracap {

struct SchemeOutage {
    SchemeConfig config;
    double link_outage = 0.0;   // O_M going in
    double final_outage = 0.0;  // post-decoding
};

/// RT: probability that all m identical copies are lost, o^m.
double outage_rt(double o, int m);

/// CT closed form with n coded transmissions per information message,
/// o^(2n+1) (1 + o + o^2 - 5 o^3 + 4 o^4 - o^5)^(2n).
double outage_ct(double o, int n);

/// Success probability of one recovery chain: the neighbor message is
/// available within three hops and every coded link along the way holds.
/// Depends on (m, r) only.
double event_prob(double o, int m, int r);

/// HT post-decoding outage via the union form,
/// o^m (1 - event_prob)^(2n). Safe as o -> 0.
double outage_ht(double o, int m, int n, int r);

/// HT outage through the expanded polynomial o^(m(2n+1)) F^(2n). Contains
/// an o^-m term, so it is numerically hazardous near o = 0; kept as an
/// algebraic cross-check of outage_ht.
double outage_ht_expanded(double o, int m, int n, int r);

/// Dispatch over the closed forms by scheme kind.
SchemeOutage scheme_outage(const SchemeConfig& config, double o);

}  // namespace loracap

#endif
