// CMOS power models. SI units throughout.

#ifndef BTCPROF_POWER_HPP_
#define BTCPROF_POWER_HPP_

namespace btcprof {

inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kBoltzmann = 1.380649e-23;            // J/K

// Largest diode exponent qV/kT accepted by leakage_current.
inline constexpr double kMaxDiodeExponent = 700.0;

struct DynamicPowerParams {
  double tau = 1.0;
  double load_capacitance = 0.0;  // F
  double supply_voltage = 0.0;    // V
  double frequency = 0.0;         // Hz
  // 1 gives tau * C * V * f; 2 gives the usual tau * C * V^2 * f.
  int voltage_exponent = 1;
};

// tau * C_L * V_dd^exponent * f. Throws std::out_of_range for tau outside
// [0, 1], a non-positive physical quantity or an exponent other than 1 or 2.
double dynamic_power(const DynamicPowerParams& p);

// Diode leakage i_s * (exp(qV / kT) - 1), evaluated with expm1.
// Throws std::out_of_range for i_s <= 0, T <= 0 or qV/kT > 700.
double leakage_current(double saturation_current, double diode_voltage,
                       double temperature);

struct StaticPowerParams {
  double saturation_current = 0.0;  // A
  double diode_voltage = 0.0;       // V
  double temperature = 300.0;       // K
  double supply_voltage = 0.0;      // V
};

// leakage_current(...) * V_dd. For several devices sum their leakage first
// and multiply by V_dd once.
double static_power(const StaticPowerParams& p);
// Total leakage current (A) times V_dd.
double static_power(double leakage, double supply_voltage);

inline constexpr double to_microwatts(double watts) { return watts * 1e6; }

}  // namespace btcprof

#endif  // BTCPROF_POWER_HPP_
