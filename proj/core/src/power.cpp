#include "btcprof/power.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace btcprof {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::out_of_range(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

double dynamic_power(const DynamicPowerParams& p) {
  if (!(p.tau >= 0.0 && p.tau <= 1.0)) {
    throw std::out_of_range("tau " + std::to_string(p.tau) +
                            " outside [0, 1]");
  }
  require_positive(p.load_capacitance, "load capacitance");
  require_positive(p.supply_voltage, "supply voltage");
  require_positive(p.frequency, "frequency");
  if (p.voltage_exponent != 1 && p.voltage_exponent != 2) {
    throw std::out_of_range("voltage exponent must be 1 or 2");
  }
  const double v = p.voltage_exponent == 2
                       ? p.supply_voltage * p.supply_voltage
                       : p.supply_voltage;
  return p.tau * p.load_capacitance * v * p.frequency;
}

double leakage_current(double saturation_current, double diode_voltage,
                       double temperature) {
  require_positive(saturation_current, "saturation current");
  require_positive(temperature, "temperature");
  if (!std::isfinite(diode_voltage)) {
    throw std::out_of_range("diode voltage must be finite");
  }
  const double x =
      kElementaryCharge * diode_voltage / (kBoltzmann * temperature);
  if (x > kMaxDiodeExponent) {
    throw std::out_of_range("qV/kT = " + std::to_string(x) +
                            " exceeds " + std::to_string(kMaxDiodeExponent));
  }
  return saturation_current * std::expm1(x);
}

double static_power(const StaticPowerParams& p) {
  require_positive(p.supply_voltage, "supply voltage");
  return leakage_current(p.saturation_current, p.diode_voltage,
                         p.temperature) *
         p.supply_voltage;
}

double static_power(double leakage, double supply_voltage) {
  require_positive(supply_voltage, "supply voltage");
  if (!std::isfinite(leakage)) throw std::out_of_range("leakage must be finite");
  return leakage * supply_voltage;
}

}  // namespace btcprof
