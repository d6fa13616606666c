#pragma once

#include <numbers>

namespace subseaflush::units {

inline constexpr double kPi = std::numbers::pi;

// Standard atmosphere, Pa.
inline constexpr double kAtmosphere = 101325.0;
inline constexpr double kGravity = 9.81;

inline constexpr double kSecondsPerHour = 3600.0;
inline constexpr double kMetersPerInch = 0.0254;
inline constexpr double kMetersPerFoot = 0.3048;
inline constexpr double kPascalPerBar = 1.0e5;
inline constexpr double kPascalPerPsi = 6894.757293168361;
inline constexpr double kJoulePerMWh = 3.6e9;

constexpr double m3h_to_m3s(double q) { return q / kSecondsPerHour; }
constexpr double inch_to_m(double d) { return d * kMetersPerInch; }
constexpr double m_to_inch(double d) { return d / kMetersPerInch; }
constexpr double ft_to_m(double l) { return l * kMetersPerFoot; }
constexpr double pa_to_bar(double p) { return p / kPascalPerBar; }
constexpr double bar_to_pa(double p) { return p * kPascalPerBar; }
constexpr double psi_to_pa(double p) { return p * kPascalPerPsi; }

} // namespace subseaflush::units
