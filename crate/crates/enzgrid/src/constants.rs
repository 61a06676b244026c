//! Physical constants (SI, CODATA 2018).

/// Speed of light in vacuum (m/s).
pub const C0: f64 = 299_792_458.0;
/// Vacuum permittivity (F/m).
pub const EPS0: f64 = 8.854_187_812_8e-12;
/// Vacuum permeability (H/m).
pub const MU0: f64 = 1.256_637_062_12e-6;
/// Vacuum impedance (ohm).
pub const ETA0: f64 = 376.730_313_668;
/// Reduced Planck constant (J·s).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Electron volt (J).
pub const EV: f64 = 1.602_176_634e-19;
