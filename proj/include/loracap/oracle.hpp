#ifndef LORACAP_ORACLE_HPP
#define LORACAP_ORACLE_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace loracap {

/// Monte Carlo estimate with its binomial standard error.
struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

namespace oracle {

/// One realization of the decoding-event structure the closed forms count:
/// the uncoded group of the target period, plus 2n recovery chains. Chain c
/// holds the outcomes along its path at depths 1..3 -- uncoded[d] is the
/// uncoded group of the period reached after d+1 hops away from the target,
/// coded[d] the coded group linking hop d to hop d+1. A group outcome is
/// true on success; uncoded groups fail with probability o^m, coded groups
/// with o^r.
struct EventWindow {
    struct Chain {
        std::array<bool, 3> uncoded{};
        std::array<bool, 3> coded{};
    };
    bool center_uncoded = false;
    std::vector<Chain> chains;  // size 2n, directions -n..-1, +1..+n
};

/// Walks one chain: at depth d the chain dies if the coded link fails, and
/// succeeds as soon as the uncoded group at that depth is available.
bool chain_succeeds(const EventWindow::Chain& chain);

/// True iff message k is recovered: its own uncoded group succeeded or any
/// recovery chain did.
bool chain_decode(const EventWindow& window);

/// Exact outage by exhaustive enumeration of the group-outcome patterns.
/// For n <= 2 the full joint space (1 + 12n binary outcomes) is walked
/// pattern by pattern; for n = 3 each chain's 64 patterns are enumerated
/// exhaustively and combined across chains by independence (the group
/// outcomes are independent by construction, so both routes are exact).
/// Rejects n > 3.
double oracle_outage_exact(double o, int m, int n, int r);

/// Monte Carlo estimate over random windows. Deterministic for a fixed
/// (seed, trials) regardless of thread count.
McEstimate oracle_outage_mc(double o, int m, int n, int r, std::uint64_t trials,
                            std::uint64_t seed, int threads = 1);

/// Full XOR peeling over the literal 7-period window (periods k-3..k+3,
/// one uncoded plus n coded groups each; the coded group of period t with
/// offset j links messages t and t-j). Messages outside the window are
/// treated as already delivered, which makes the decoder strictly
/// optimistic: its outage is a valid one-sided lower bound on the closed
/// form. Exact for n <= 2 (up to 2^21 patterns).
double peeling_outage_exact(double o, int m, int n, int r);

/// Monte Carlo version of the peeling bound, usable for any n.
McEstimate peeling_outage_mc(double o, int m, int n, int r, std::uint64_t trials,
                             std::uint64_t seed);

}  // namespace oracle
}  // namespace loracap

#endif
