#include "loracap/energy.hpp"

#include <stdexcept>

namespace loracap {

const char* to_string(EnergyMode m) {
    return m == EnergyMode::Default ? "default" : "modified";
}

const char* to_string(EnergyFormula f) {
    return f == EnergyFormula::Literal ? "literal" : "charge-balance";
}

namespace {

void check_inputs(int copies, double period_s) {
    if (copies < 1) throw std::domain_error("energy: copies must be >= 1");
    if (!(period_s > 0.0)) throw std::domain_error("energy: period must be positive");
}

}  // namespace

EnergyReport avg_current_default(const SfParams& sf, const EnergyStateTable& table, int copies,
                                 double period_s, EnergyFormula formula) {
    check_inputs(copies, period_s);
    double sleep = period_s - copies * table.active_duration_s();
    if (sleep < 0.0)
        throw std::domain_error("energy: " + std::to_string(copies) +
                                " full cycles do not fit in the period");
    EnergyReport rep;
    rep.sf = sf.sf;
    rep.copies = copies;
    rep.period_s = period_s;
    rep.sleep_time_s = sleep;
    rep.mode = EnergyMode::Default;
    rep.formula = formula;
    double active = table.active_charge_c();
    double sleep_q = sleep * table.sleep_current_a;
    if (formula == EnergyFormula::Literal)
        rep.avg_current_a = copies / period_s * (active + sleep_q);
    else
        rep.avg_current_a = (copies * active + sleep_q) / period_s;
    return rep;
}

EnergyReport avg_current_modified(const SfParams& sf, const EnergyStateTable& table, int copies,
                                  double period_s, EnergyFormula formula) {
    check_inputs(copies, period_s);
    double sleep = period_s - copies * table.tx_phase_duration_s() - table.rx_phase_duration_s();
    if (sleep < 0.0)
        throw std::domain_error("energy: " + std::to_string(copies) +
                                " transmissions plus one receive pass do not fit in the period");
    EnergyReport rep;
    rep.sf = sf.sf;
    rep.copies = copies;
    rep.period_s = period_s;
    rep.sleep_time_s = sleep;
    rep.mode = EnergyMode::Modified;
    rep.formula = formula;
    double tx = table.tx_phase_charge_c();
    double rx = table.rx_phase_charge_c();
    double sleep_q = sleep * table.sleep_current_a;
    if (formula == EnergyFormula::Literal)
        rep.avg_current_a = copies / period_s * (tx + rx + sleep_q);
    else
        rep.avg_current_a = (copies * tx + rx + sleep_q) / period_s;
    return rep;
}

double lifetime_h(const EnergyReport& report, double battery_mah) {
    if (!(report.avg_current_a > 0.0))
        throw std::domain_error("lifetime: average current must be positive");
    if (battery_mah < 0.0) throw std::domain_error("lifetime: capacity must be non-negative");
    double avg_current_ma = report.avg_current_a * 1e3;
    return battery_mah / avg_current_ma;
}

}  // namespace loracap
