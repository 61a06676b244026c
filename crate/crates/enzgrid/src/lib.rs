//! 2D dispersive FDTD simulator and analytic coherence toolkit for
//! epsilon-near-zero (ENZ) waveguide networks.
//!
//! The crate is organized around a pipeline:
//!
//! * [`materials`] — dispersive permittivity models (Drude + Lorentz),
//!   tabulated optical constants, ENZ crossings, and coherence time/length
//!   derived from the loss function Im(−1/ε).
//! * [`geometry`] — cavity/channel network scenes (grids, bent channels)
//!   rasterized onto a Yee grid as material-id maps.
//! * [`fdtd`] — 2D TM (Ex, Ey, Hz) finite-difference time-domain engine with
//!   auxiliary-differential-equation dispersion, CPML absorbing boundaries,
//!   dipole sources, and frequency-domain (DFT) monitors.
//! * [`analysis`] — Green-tensor extraction, coupled decay rates and Lamb
//!   shifts, decay-vs-distance curves, phase-coherence maps, supercoupling
//!   transmission, and network node budgets.
//! * [`oracle`] — closed-form references (2D dyadic Green function from
//!   Hankel functions, slab transfer matrix, Drude loss-function width)
//!   computed independently of the engine; tests compare engine output
//!   against these.
//! * [`cli`] — config-driven front end with reproducible run manifests.

pub mod analysis;
pub mod cli;
pub mod constants;
pub mod fdtd;
pub mod geometry;
pub mod materials;
pub mod oracle;
pub mod units;

pub use num_complex::Complex64;
