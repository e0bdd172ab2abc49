#include "loracap/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "loracap/rng.hpp"

namespace loracap::oracle {

namespace {

void check_args(double o, int m, int n, int r) {
    if (!(o >= 0.0 && o <= 1.0)) throw std::domain_error("oracle: o must be in [0, 1]");
    if (m < 1 || n < 0 || r < 1)
        throw std::domain_error("oracle: requires m >= 1, n >= 0, r >= 1");
}

EventWindow::Chain chain_from_bits(std::uint32_t bits) {
    EventWindow::Chain c;
    for (int d = 0; d < 3; ++d) {
        c.uncoded[d] = (bits >> d) & 1u;
        c.coded[d] = (bits >> (3 + d)) & 1u;
    }
    return c;
}

// Per-chain 64-pattern tables: occurrence probability and success flag.
struct ChainTables {
    std::array<double, 64> prob;
    std::array<bool, 64> succeeds;
};

ChainTables build_chain_tables(double om, double orr) {
    ChainTables t;
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        EventWindow::Chain c = chain_from_bits(bits);
        double p = 1.0;
        for (int d = 0; d < 3; ++d) {
            p *= c.uncoded[d] ? (1.0 - om) : om;
            p *= c.coded[d] ? (1.0 - orr) : orr;
        }
        t.prob[bits] = p;
        t.succeeds[bits] = chain_succeeds(c);
    }
    return t;
}

EventWindow draw_window(CounterRng& rng, int n, double om, double orr) {
    EventWindow w;
    w.center_uncoded = !rng.next_bool(om);
    w.chains.resize(2 * n);
    for (auto& c : w.chains) {
        for (int d = 0; d < 3; ++d) c.uncoded[d] = !rng.next_bool(om);
        for (int d = 0; d < 3; ++d) c.coded[d] = !rng.next_bool(orr);
    }
    return w;
}

McEstimate finish_estimate(std::uint64_t failures, std::uint64_t trials) {
    McEstimate e;
    e.trials = trials;
    e.value = static_cast<double>(failures) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
    return e;
}

}  // namespace

bool chain_succeeds(const EventWindow::Chain& chain) {
    for (int d = 0; d < 3; ++d) {
        if (!chain.coded[d]) return false;   // link to the next hop is gone
        if (chain.uncoded[d]) return true;   // hop message available, chain closes
    }
    return false;
}

bool chain_decode(const EventWindow& window) {
    if (window.center_uncoded) return true;
    for (const auto& c : window.chains)
        if (chain_succeeds(c)) return true;
    return false;
}

double oracle_outage_exact(double o, int m, int n, int r) {
    check_args(o, m, n, r);
    if (n > 3) throw std::domain_error("oracle_outage_exact: enumeration bound is n <= 3");
    double om = std::pow(o, m);
    if (n == 0) return om;
    double orr = std::pow(o, r);
    ChainTables t = build_chain_tables(om, orr);
    int chains = 2 * n;

    if (n <= 2) {
        // Full joint walk over every pattern of the 1 + 12n group outcomes.
        // Kahan-compensated: the n = 2 walk adds ~1.7e7 terms and a naive
        // sum drifts past the 1e-12 agreement bound.
        double outage = 0.0, comp = 0.0;
        std::vector<std::uint32_t> idx(chains, 0);
        for (;;) {
            double p = 1.0;
            bool any_success = false;
            for (int c = 0; c < chains; ++c) {
                p *= t.prob[idx[c]];
                any_success = any_success || t.succeeds[idx[c]];
            }
            if (!any_success) {  // center must also fail, factored below
                double y = p - comp;
                double s = outage + y;
                comp = (s - outage) - y;
                outage = s;
            }
            int c = 0;
            while (c < chains && ++idx[c] == 64) idx[c++] = 0;
            if (c == chains) break;
        }
        return om * outage;
    }

    // n == 3: each chain's 64 patterns enumerated exhaustively, chains
    // combined by independence of their disjoint group sets.
    double chain_fail = 0.0;
    for (std::uint32_t bits = 0; bits < 64; ++bits)
        if (!t.succeeds[bits]) chain_fail += t.prob[bits];
    return om * std::pow(chain_fail, chains);
}

McEstimate oracle_outage_mc(double o, int m, int n, int r, std::uint64_t trials,
                            std::uint64_t seed, int threads) {
    check_args(o, m, n, r);
    if (trials < 1) throw std::domain_error("oracle_outage_mc: trials must be >= 1");
    double om = std::pow(o, m);
    double orr = std::pow(o, r);
    int workers = std::max(1, threads);
    std::vector<std::uint64_t> failures(workers, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::uint64_t lo = trials * w / workers;
            std::uint64_t hi = trials * (w + 1) / workers;
            std::uint64_t fail = 0;
            for (std::uint64_t trial = lo; trial < hi; ++trial) {
                CounterRng rng(seed, trial);
                if (!chain_decode(draw_window(rng, n, om, orr))) ++fail;
            }
            failures[w] = fail;
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (auto f : failures) total += f;
    return finish_estimate(total, trials);
}

namespace {

constexpr int kPeriods = 7;  // k-3 .. k+3, target at index 3

// Iterative XOR peeling over one window realization. unc_bits holds the 7
// uncoded outcomes, cod_bit(t, j) the coded group of period t with offset j
// (linking messages t and t-j). Out-of-window messages count as delivered.
bool peel_decodes(std::uint32_t unc_bits, std::uint64_t cod_bits, int n) {
    std::array<bool, kPeriods> known;
    for (int t = 0; t < kPeriods; ++t) known[t] = (unc_bits >> t) & 1u;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t < kPeriods; ++t) {
            for (int j = 1; j <= n; ++j) {
                if (!((cod_bits >> (t * n + j - 1)) & 1u)) continue;
                int other = t - j;
                bool other_known = other < 0 ? true : known[other];
                if (known[t] == other_known) continue;
                if (!known[t]) known[t] = true;
                else if (other >= 0) known[other] = true;
                changed = true;
            }
        }
    }
    return known[3];
}

}  // namespace

double peeling_outage_exact(double o, int m, int n, int r) {
    check_args(o, m, n, r);
    if (n > 2)
        throw std::domain_error("peeling_outage_exact: enumeration bound is n <= 2");
    double om = std::pow(o, m);
    if (n == 0) return om;
    double orr = std::pow(o, r);

    int cod_count = kPeriods * n;
    // Success-count powers for the pattern weights.
    std::array<double, kPeriods + 1> punc;
    std::vector<double> pcod(cod_count + 1);
    for (int s = 0; s <= kPeriods; ++s)
        punc[s] = std::pow(1.0 - om, s) * std::pow(om, kPeriods - s);
    for (int s = 0; s <= cod_count; ++s)
        pcod[s] = std::pow(1.0 - orr, s) * std::pow(orr, cod_count - s);

    double outage = 0.0;
    for (std::uint32_t unc = 0; unc < (1u << kPeriods); ++unc) {
        if ((unc >> 3) & 1u) continue;  // target delivered directly
        double pu = punc[std::popcount(unc)];
        for (std::uint64_t cod = 0; cod < (1ull << cod_count); ++cod) {
            if (!peel_decodes(unc, cod, n))
                outage += pu * pcod[std::popcount(cod)];
        }
    }
    return outage;
}

McEstimate peeling_outage_mc(double o, int m, int n, int r, std::uint64_t trials,
                             std::uint64_t seed) {
    check_args(o, m, n, r);
    if (trials < 1) throw std::domain_error("peeling_outage_mc: trials must be >= 1");
    double om = std::pow(o, m);
    double orr = std::pow(o, r);
    std::uint64_t failures = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        CounterRng rng(seed, trial);
        std::uint32_t unc = 0;
        for (int t = 0; t < kPeriods; ++t)
            if (!rng.next_bool(om)) unc |= (1u << t);
        std::uint64_t cod = 0;
        for (int i = 0; i < kPeriods * n; ++i)
            if (!rng.next_bool(orr)) cod |= (1ull << i);
        if (!peel_decodes(unc, cod, n)) ++failures;
    }
    return finish_estimate(failures, trials);
}

}  // namespace loracap::oracle
