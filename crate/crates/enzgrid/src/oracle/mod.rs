//! Independent analytic references used by tests: closed-form small-scale
//! truths the simulator must match. Everything here is computed without the
//! FDTD engine; oracle-vs-engine comparisons form the core test suite.

pub mod hankel;

use crate::constants::C0;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("observation and source points coincide")]
    CoincidentPoints,
    #[error("drude_fwhm_limit requires gamma < wp/10 (got gamma/wp = {0})")]
    DampingTooLarge(f64),
}

/// 2×2 complex tensor, row-major: `[[xx, xy], [yx, yy]]`.
pub type Tensor2 = [[Complex64; 2]; 2];

/// 2D vacuum dyadic Green function for in-plane electric fields under the
/// e^{−iωt} convention, normalized such that E(r2) = ω²µ₀ G(r2, r1) d for a
/// line dipole of moment d (C·m per metre of depth).
///
/// G_ij = (i/4) [ (H₀(kρ) − H₁(kρ)/(kρ)) δ_ij − (H₀(kρ) − 2H₁(kρ)/(kρ)) ρ̂_i ρ̂_j ]
///
/// with outgoing-wave Hankel functions of the first kind. On the diagonal in
/// the frame aligned with ρ̂ this reduces to (i/4)H₁/(kρ) longitudinally and
/// (i/4)(H₀ − H₁/(kρ)) transversely.
pub fn vacuum_green_2d(r1: [f64; 2], r2: [f64; 2], omega: f64) -> Result<Tensor2, OracleError> {
    let dx = r2[0] - r1[0];
    let dy = r2[1] - r1[1];
    let rho = (dx * dx + dy * dy).sqrt();
    if rho == 0.0 {
        return Err(OracleError::CoincidentPoints);
    }
    let k = omega / C0;
    let z = k * rho;
    let h0 = hankel::hankel1(0, z);
    let h1_over_z = hankel::hankel1(1, z) / z;
    let trans = h0 - h1_over_z; // coefficient of delta_ij
    let radial = h0 - 2.0 * h1_over_z; // coefficient of rho_i rho_j
    let quarter_i = Complex64::new(0.0, 0.25);
    let rh = [dx / rho, dy / rho];
    let mut g = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let delta = if i == j { 1.0 } else { 0.0 };
            g[i][j] = quarter_i * (trans * delta - radial * rh[i] * rh[j]);
        }
    }
    Ok(g)
}

/// Imaginary part of the 2D vacuum Green tensor at coincident points. The
/// ρ → 0 limit of both diagonal components is 1/8; off-diagonals vanish.
/// This value sets the free-space decay-rate normalization.
pub const IM_G_VACUUM_SELF: f64 = 0.125;

/// Complex reflection and transmission of a uniform slab of relative
/// permittivity `eps` and the given thickness in vacuum surroundings, normal
/// incidence. The transmission phase is referenced across the slab (exit
/// face relative to incident at entry face), so eps = 1 gives t = e^{iωL/c}.
pub fn transfer_matrix_slab(eps: Complex64, thickness: f64, omega: f64) -> (Complex64, Complex64) {
    assert!(thickness > 0.0, "slab thickness must be positive");
    let n = eps.sqrt(); // principal branch: Im n >= 0 for passive media
    let delta = n * omega * thickness / C0;
    let r12 = (1.0 - n) / (1.0 + n);
    let phase = (Complex64::i() * delta).exp();
    let phase2 = phase * phase;
    let denom = 1.0 - r12 * r12 * phase2;
    let r = r12 * (1.0 - phase2) / denom;
    let t = (1.0 - r12 * r12) * phase / denom;
    (r, t)
}

/// Leading-order FWHM of the Drude loss function Im(−1/ε): for
/// ε = ε∞ − ωp²/(ω² + iγω) with γ ≪ ωp the loss peak at ωp/√ε∞ has full
/// width γ, independent of ε∞.
pub fn drude_fwhm_limit(wp: f64, gamma: f64, _eps_inf: f64) -> Result<f64, OracleError> {
    if gamma >= wp / 10.0 {
        return Err(OracleError::DampingTooLarge(gamma / wp));
    }
    Ok(gamma)
}
