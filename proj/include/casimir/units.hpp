#pragma once

// Internal unit system: hbar = c = 1, lengths in micrometers.
// Frequencies xi carry 1/um, energies hbar*c/um, 3d pressures hbar*c/um^4.
// Conversion to SI happens only at the reporting layer, through this table.

namespace casimir::units {

inline constexpr double hbar_c_eV_um = 0.1973269804;       // hbar*c in eV*um
inline constexpr double kB_eV_per_K = 8.617333262e-5;      // Boltzmann constant, eV/K
inline constexpr double hbar_c_J_m = 3.1615267734966903e-26;  // hbar*c in J*m

// SI values of one natural unit of each reported quantity.
inline constexpr double pressure_unit_Pa = hbar_c_J_m * 1e24;     // (hbar c / um^4) in Pa
inline constexpr double energy_unit_J = hbar_c_J_m * 1e6;         // (hbar c / um) in J
inline constexpr double energy2d_unit_J_per_m = hbar_c_J_m * 1e12;  // (hbar c / um^2) in J/m
inline constexpr double force2d_unit_N_per_m = hbar_c_J_m * 1e18;   // (hbar c / um^3) in N/m
inline constexpr double force3d_unit_N = hbar_c_J_m * 1e12;         // (hbar c / um^2) in N

// Thermal wavelength lambda_T = hbar*c/(kB*T) in um; ~7.6 um at 300 K.
inline double thermal_wavelength_um(double kelvin) {
    return hbar_c_eV_um / (kB_eV_per_K * kelvin);
}

// Matsubara spacing 2*pi*kB*T/(hbar*c) in 1/um.
inline double matsubara_spacing(double kelvin) {
    return 6.283185307179586476925287 / thermal_wavelength_um(kelvin);
}

}  // namespace casimir::units
