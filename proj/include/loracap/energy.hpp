#ifndef LORACAP_ENERGY_HPP
#define LORACAP_ENERGY_HPP

#include "loracap/params.hpp"

namespace loracap {

enum class EnergyMode { Default, Modified };

/// Two ways to account the period's charge. Literal follows the printed
/// model (the per-period prefactor M multiplies every term, sleep and
/// once-per-period receive windows included); ChargeBalance scales only the
/// repeated transmission states by M and counts sleep and once-per-period
/// terms exactly once. Literal is the reference behaviour, ChargeBalance
/// the physically consistent variant; reports label which one was used.
enum class EnergyFormula { Literal, ChargeBalance };

const char* to_string(EnergyMode m);
const char* to_string(EnergyFormula f);

struct EnergyReport {
    int sf = 7;
    int copies = 1;
    double period_s = 0.0;
    double avg_current_a = 0.0;
    double sleep_time_s = 0.0;
    EnergyMode mode = EnergyMode::Default;
    EnergyFormula formula = EnergyFormula::Literal;
};

/// Average current when every copy runs the full 11-state cycle including
/// both receive windows. Throws std::domain_error when M copies do not fit
/// in the period (negative sleep time).
EnergyReport avg_current_default(const SfParams& sf, const EnergyStateTable& table, int copies,
                                 double period_s,
                                 EnergyFormula formula = EnergyFormula::Literal);

/// Average current when receive windows are opened only after the last
/// copy of the period.
EnergyReport avg_current_modified(const SfParams& sf, const EnergyStateTable& table, int copies,
                                  double period_s,
                                  EnergyFormula formula = EnergyFormula::Literal);

/// Battery capacity over average current, in hours.
double lifetime_h(const EnergyReport& report, double battery_mah);

}  // namespace loracap

#endif
