#pragma once

// Atomic units (hbar = e = m_e = 1). Conversions are applied by the CLI only.
namespace confined_atom::units {

inline constexpr double bohr_nm = 0.0529177210903;
inline constexpr double hartree_ev = 27.211386245988;

constexpr double length_to_nm(double bohr) { return bohr * bohr_nm; }
constexpr double energy_to_ev(double hartree) { return hartree * hartree_ev; }

}  // namespace confined_atom::units
