#include "loracap/params.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace loracap {

const std::array<SfParams, kNumSf>& default_sf_table() {
    // 9-byte payload, B = 125 kHz, CRC and header enabled.
    static const std::array<SfParams, kNumSf> table = {{
        {7, 41.22e-3, -6.0, 12.29e-3, 1.28e-3},
        {8, 72.19e-3, -9.0, 24.58e-3, 2.30e-3},
        {9, 144.38e-3, -12.0, 49.15e-3, 4.35e-3},
        {10, 247.81e-3, -15.0, 98.30e-3, 8.45e-3},
        {11, 495.62e-3, -17.5, 131.07e-3, 16.64e-3},
        {12, 991.23e-3, -20.0, 262.14e-3, 33.02e-3},
    }};
    return table;
}

const SfParams& sf_params_for(int sf) {
    if (sf < kSfMin || sf > kSfMax)
        throw std::out_of_range("spreading factor must be in 7..12, got " + std::to_string(sf));
    return default_sf_table()[sf - kSfMin];
}

void NetworkScenario::finalize() {
    if (!(ref_dist_m > 0.0) || !(radius_m > ref_dist_m))
        throw std::invalid_argument("scenario: requires radius_m > ref_dist_m > 0");
    if (!(ploss_exponent > 2.0))
        throw std::invalid_argument("scenario: ploss_exponent must exceed 2");
    if (!(period_s > 0.0))
        throw std::invalid_argument("scenario: period_s must be positive");
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("scenario: bandwidth_hz must be positive");
    if (!(duty_cycle_limit > 0.0 && duty_cycle_limit <= 1.0))
        throw std::invalid_argument("scenario: duty_cycle_limit must be in (0,1]");
    for (double rho : densities)
        if (rho < 0.0) throw std::invalid_argument("scenario: densities must be non-negative");
    for (const SfParams& p : default_sf_table()) {
        double pj = p.toa_s / period_s;
        if (!(pj > 0.0) || pj > duty_cycle_limit)
            throw std::invalid_argument("scenario: activity factor for SF" + std::to_string(p.sf) +
                                        " outside (0, duty_cycle_limit]");
    }

    tx_power_w = std::pow(10.0, (tx_power_dbm - 30.0) / 10.0);
    double noise_dbm = -174.0 + noise_figure_db + 10.0 * std::log10(bandwidth_hz);
    noise_w = std::pow(10.0, (noise_dbm - 30.0) / 10.0);
    theta_linear = theta_is_linear ? sir_threshold_db
                                   : std::pow(10.0, sir_threshold_db / 10.0);
    if (!(theta_linear > 0.0))
        throw std::invalid_argument("scenario: SIR threshold must be positive");
    ploss_ref_linear = std::pow(10.0, ploss_ref_db / 10.0);
}

double NetworkScenario::mean_nodes(int sf) const {
    return density(sf) * std::numbers::pi * radius_m * radius_m;
}

void NetworkScenario::set_mean_nodes(int sf, double n_bar) {
    if (n_bar < 0.0) throw std::invalid_argument("mean node count must be non-negative");
    densities[sf - kSfMin] = n_bar / (std::numbers::pi * radius_m * radius_m);
}

NetworkScenario scenario_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NetworkScenario s;
    auto get = [&](const char* key, double& field) {
        if (j.contains(key)) field = j.at(key).get<double>();
    };
    get("radius_m", s.radius_m);
    get("ploss_exponent", s.ploss_exponent);
    get("ploss_ref_db", s.ploss_ref_db);
    get("ref_dist_m", s.ref_dist_m);
    get("tx_power_dbm", s.tx_power_dbm);
    get("bandwidth_hz", s.bandwidth_hz);
    get("noise_figure_db", s.noise_figure_db);
    get("sir_threshold_db", s.sir_threshold_db);
    get("period_s", s.period_s);
    get("duty_cycle_limit", s.duty_cycle_limit);
    get("battery_mah", s.battery_mah);
    if (j.contains("theta_is_linear")) s.theta_is_linear = j.at("theta_is_linear").get<bool>();
    if (j.contains("densities")) {
        for (auto& [key, value] : j.at("densities").items()) {
            int sf = std::stoi(key);
            if (sf < kSfMin || sf > kSfMax)
                throw std::invalid_argument("scenario: density key outside SF7..SF12: " + key);
            s.densities[sf - kSfMin] = value.get<double>();
        }
    }
    s.finalize();
    return s;
}

NetworkScenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

std::string scenario_to_json(const NetworkScenario& s) {
    nlohmann::json j;
    j["radius_m"] = s.radius_m;
    j["ploss_exponent"] = s.ploss_exponent;
    j["ploss_ref_db"] = s.ploss_ref_db;
    j["ref_dist_m"] = s.ref_dist_m;
    j["tx_power_dbm"] = s.tx_power_dbm;
    j["bandwidth_hz"] = s.bandwidth_hz;
    j["noise_figure_db"] = s.noise_figure_db;
    j["sir_threshold_db"] = s.sir_threshold_db;
    j["theta_is_linear"] = s.theta_is_linear;
    j["period_s"] = s.period_s;
    j["duty_cycle_limit"] = s.duty_cycle_limit;
    j["battery_mah"] = s.battery_mah;
    nlohmann::json dens;
    for (int sf = kSfMin; sf <= kSfMax; ++sf)
        dens[std::to_string(sf)] = s.densities[sf - kSfMin];
    j["densities"] = dens;
    return j.dump(2);
}

const char* to_string(SchemeKind k) {
    switch (k) {
        case SchemeKind::DT: return "DT";
        case SchemeKind::RT: return "RT";
        case SchemeKind::CT: return "CT";
        case SchemeKind::HT: return "HT";
    }
    return "?";
}

SchemeKind scheme_kind_from_string(const std::string& s) {
    if (s == "DT") return SchemeKind::DT;
    if (s == "RT") return SchemeKind::RT;
    if (s == "CT") return SchemeKind::CT;
    if (s == "HT") return SchemeKind::HT;
    throw std::invalid_argument("unknown scheme kind: " + s);
}

void SchemeConfig::validate() const {
    if (m < 1) throw std::invalid_argument("scheme: m must be >= 1");
    if (n < 0) throw std::invalid_argument("scheme: n must be >= 0");
    if (r < 1) throw std::invalid_argument("scheme: r must be >= 1");
    switch (kind) {
        case SchemeKind::DT:
            if (m != 1 || n != 0) throw std::invalid_argument("scheme: DT requires m=1, n=0");
            break;
        case SchemeKind::RT:
            if (n != 0) throw std::invalid_argument("scheme: RT requires n=0");
            break;
        case SchemeKind::CT:
            if (m != 1 || r != 1) throw std::invalid_argument("scheme: CT requires m=1, r=1");
            break;
        case SchemeKind::HT:
            break;
    }
}

double EnergyStateTable::active_duration_s() const {
    double t = 0.0;
    for (const auto& st : active) t += st.duration_s;
    return t;
}

double EnergyStateTable::active_charge_c() const {
    double q = 0.0;
    for (const auto& st : active) q += st.duration_s * st.current_a;
    return q;
}

double EnergyStateTable::tx_phase_duration_s() const {
    double t = 0.0;
    for (int i = 0; i < 6; ++i) t += active[i].duration_s;
    return t;
}

double EnergyStateTable::tx_phase_charge_c() const {
    double q = 0.0;
    for (int i = 0; i < 6; ++i) q += active[i].duration_s * active[i].current_a;
    return q;
}

double EnergyStateTable::rx_phase_duration_s() const {
    double t = 0.0;
    for (int i = 6; i < 10; ++i) t += active[i].duration_s;
    return t;
}

double EnergyStateTable::rx_phase_charge_c() const {
    double q = 0.0;
    for (int i = 6; i < 10; ++i) q += active[i].duration_s * active[i].current_a;
    return q;
}

EnergyStateTable default_energy_table(const SfParams& sf) {
    if (sf.rx1w_s >= 1.0)
        throw std::invalid_argument("energy table: rx1w must be shorter than the 1 s "
                                    "inter-window interval");
    EnergyStateTable t;
    t.active = {{
        {"wake_up", 168.2e-3, 22.1e-3},
        {"radio_preparation", 83.8e-3, 13.3e-3},
        {"transmission", sf.toa_s, 83.0e-3},
        {"radio_off", 147.4e-3, 13.2e-3},
        {"postprocessing", 268.0e-3, 21.0e-3},
        {"turn_off_sequence", 38.6e-3, 13.3e-3},
        {"wait_1st_window", 983.3e-3, 27.0e-3},
        {"rx_1st_window", sf.rx1w_s, 38.1e-3},
        {"wait_2nd_window", 1.0 - sf.rx1w_s, 27.1e-3},
        {"rx_2nd_window", sf.rx2w_s, 35.0e-3},
    }};
    t.sleep_current_a = 45e-6;
    return t;
}

double activity_factor(const NetworkScenario& scenario, int sf) {
    return sf_params_for(sf).toa_s / scenario.period_s;
}

int max_copies(const NetworkScenario& scenario, int sf, int hard_cap) {
    if (hard_cap < 1) throw std::invalid_argument("max_copies: hard_cap must be >= 1");
    double pj = activity_factor(scenario, sf);
    int duty = static_cast<int>(std::floor(scenario.duty_cycle_limit / pj));
    return std::max(1, std::min(hard_cap, duty));
}

}  // namespace loracap
