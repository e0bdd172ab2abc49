#ifndef LORACAP_PARAMS_HPP
#define LORACAP_PARAMS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace loracap {

inline constexpr int kSfMin = 7;
inline constexpr int kSfMax = 12;
inline constexpr int kNumSf = kSfMax - kSfMin + 1;

/// Per-spreading-factor PHY constants for a 9-byte uplink at 125 kHz.
struct SfParams {
    int sf = 7;                  // spreading factor index, 7..12
    double toa_s = 0.0;          // time-on-air of one packet
    double snr_threshold_db = 0.0;
    double rx1w_s = 0.0;         // first receive window duration
    double rx2w_s = 0.0;         // second receive window duration
};

/// The six uplink rows (SF7..SF12), compiled-in defaults.
const std::array<SfParams, kNumSf>& default_sf_table();

/// Row lookup by spreading factor. Throws std::out_of_range for sf outside 7..12.
const SfParams& sf_params_for(int sf);

/// Deployment geometry, radio parameters and traffic model.
/// Raw fields are in the units of the configuration file (dB, dBm, meters);
/// finalize() validates the invariants and converts to linear/SI once.
struct NetworkScenario {
    double radius_m = 200.0;            // network radius R
    double ploss_exponent = 3.51;       // eta
    double ploss_ref_db = 55.05;        // PL0 at the reference distance
    double ref_dist_m = 15.0;           // d0
    double tx_power_dbm = 11.0;
    double bandwidth_hz = 125e3;
    double noise_figure_db = 6.0;
    double sir_threshold_db = 1.0;      // theta; see theta_is_linear
    bool theta_is_linear = false;       // interpret sir_threshold_db as a linear ratio
    double period_s = 600.0;            // message period P
    double duty_cycle_limit = 0.01;
    double battery_mah = 2400.0;
    std::array<double, kNumSf> densities{};  // nodes per m^2, indexed sf-7

    // filled by finalize()
    double tx_power_w = 0.0;
    double noise_w = 0.0;
    double theta_linear = 0.0;
    double ploss_ref_linear = 0.0;      // 10^(PL0/10)

    /// Validates invariants and computes the linear-unit fields.
    /// Throws std::invalid_argument with the violated invariant named.
    void finalize();

    double density(int sf) const { return densities[sf - kSfMin]; }
    /// Mean node count for SF j over the disk, rho_j * pi R^2.
    double mean_nodes(int sf) const;
    void set_mean_nodes(int sf, double n_bar);
};

/// Scenario serialization; plain JSON with the field names above.
NetworkScenario scenario_from_json(const std::string& text);
NetworkScenario load_scenario(const std::string& path);
std::string scenario_to_json(const NetworkScenario& s);

enum class SchemeKind { DT, RT, CT, HT };

const char* to_string(SchemeKind k);
SchemeKind scheme_kind_from_string(const std::string& s);

/// Replication scheme identity: m uncoded replicas, n distinct coded
/// messages, r replicas of each coded message. M = m + n*r copies total.
struct SchemeConfig {
    SchemeKind kind = SchemeKind::DT;
    int m = 1;
    int n = 0;
    int r = 1;

    int copies() const { return m + n * r; }
    /// Throws std::invalid_argument if the parameters contradict the kind
    /// (DT: m=1,n=0; RT: n=0; CT: m=1,r=1).
    void validate() const;

    static SchemeConfig dt() { return {SchemeKind::DT, 1, 0, 1}; }
    static SchemeConfig rt(int m) { return {SchemeKind::RT, m, 0, 1}; }
    static SchemeConfig ct(int n) { return {SchemeKind::CT, 1, n, 1}; }
    static SchemeConfig ht(int m, int n, int r) { return {SchemeKind::HT, m, n, r}; }
};

/// One operating state of the device (Table-style duration/current rows).
struct EnergyState {
    std::string name;
    double duration_s = 0.0;
    double current_a = 0.0;
};

/// The 10 active states in protocol order plus the sleep current.
/// Sleep duration is derived from the period at evaluation time.
struct EnergyStateTable {
    std::array<EnergyState, 10> active;
    double sleep_current_a = 0.0;

    double active_duration_s() const;        // sum of all 10 active durations
    double active_charge_c() const;          // sum duration*current over active states
    double tx_phase_duration_s() const;      // states 1..6 (through turn-off sequence)
    double tx_phase_charge_c() const;
    double rx_phase_duration_s() const;      // states 7..10 (receive windows)
    double rx_phase_charge_c() const;
};

/// Builds the 11-state table with the transmission and receive-window rows
/// substituted from the given SF. Throws if rx1w >= 1 s (state 9 would be
/// negative).
EnergyStateTable default_energy_table(const SfParams& sf);

/// Fraction of time a device transmits: toa(sf) / period.
double activity_factor(const NetworkScenario& scenario, int sf);

/// Largest copy count allowed by the duty cycle, clamped by hard_cap and
/// never below 1.
int max_copies(const NetworkScenario& scenario, int sf, int hard_cap);

}  // namespace loracap

#endif
