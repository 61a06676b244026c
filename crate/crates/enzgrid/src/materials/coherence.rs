//! ENZ crossing search and coherence time/length from the loss function.
//!
//! Coherence time is defined as τ_c = 1/Δω where Δω is the full width at
//! half maximum of the loss function Im(−1/ε) around its peak near the ENZ
//! crossing. Phase velocity uses v_p = c/Re(n) with the principal branch of
//! n = √ε, so the coherence length is L_c = v_p · τ_c.

use super::{loss_function, MaterialError, Permittivity};
use crate::constants::C0;
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

/// Relative tolerance for crossing refinement.
const CROSSING_TOL: f64 = 1e-10;
/// Relative tolerance for peak/half-maximum searches.
const PEAK_TOL: f64 = 1e-8;

/// ENZ crossing, loss-function width, and the derived coherence budget.
#[derive(Debug, Clone, Serialize)]
pub struct CoherenceReport {
    /// Vacuum wavelength of the ENZ crossing (m).
    pub enz_wavelength: f64,
    /// ε at the crossing.
    pub eps_at_enz: Complex64,
    /// Loss-function FWHM Δω (rad/s).
    pub loss_fwhm: f64,
    /// τ_c = 1/Δω (s).
    pub coherence_time: f64,
    /// Principal-branch refractive index at the evaluation frequency.
    pub refractive_index: Complex64,
    /// v_p = c/Re n (m/s).
    pub phase_velocity: f64,
    /// L_c = v_p · τ_c (m).
    pub coherence_length: f64,
    /// Vacuum wavelength at which n and v_p were evaluated (m). Differs from
    /// `enz_wavelength` only when the report was requested off-crossing.
    pub evaluation_wavelength: f64,
    /// False when the evaluation point was supplied explicitly and does not
    /// coincide with the crossing.
    pub at_crossing: bool,
}

/// Peak of the loss function and its width.
#[derive(Debug, Clone, Copy)]
pub struct LossPeak {
    /// Peak position (rad/s).
    pub omega_peak: f64,
    /// Peak value of Im(−1/ε).
    pub peak_value: f64,
    /// Full width at half maximum (rad/s).
    pub fwhm: f64,
}

/// All ω in `[lo, hi]` (intersected with the material's validity window)
/// where Re ε changes sign, refined by bisection to relative tolerance
/// 1e−10. No crossing yields an empty list.
pub fn enz_crossing(
    p: &(impl Permittivity + ?Sized),
    lo: f64,
    hi: f64,
) -> Result<Vec<f64>, MaterialError> {
    if !(lo > 0.0) || !(hi > lo) {
        return Err(MaterialError::NonPositiveFrequency(lo.min(hi)));
    }
    let (v_lo, v_hi) = p.omega_range();
    let lo = lo.max(v_lo);
    let hi = hi.min(v_hi);
    if !(hi > lo) {
        return Ok(Vec::new());
    }
    const N: usize = 4096;
    let re_at = |w: f64| -> Result<f64, MaterialError> { Ok(p.eval(w)?.re) };
    let mut crossings = Vec::new();
    let mut prev_w = lo;
    let mut prev_re = re_at(lo)?;
    for i in 1..=N {
        let w = lo + (hi - lo) * i as f64 / N as f64;
        let re = re_at(w)?;
        if prev_re == 0.0 {
            crossings.push(prev_w);
        } else if prev_re * re < 0.0 {
            // bisection refine
            let (mut a, mut b) = (prev_w, w);
            let mut fa = prev_re;
            while (b - a) > CROSSING_TOL * b {
                let m = 0.5 * (a + b);
                let fm = re_at(m)?;
                if fm == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if fa * fm < 0.0 {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            crossings.push(0.5 * (a + b));
        }
        prev_w = w;
        prev_re = re;
    }
    Ok(crossings)
}

/// Locates the loss-function peak near `crossing` and measures its FWHM.
///
/// The search window is [crossing/2, 2·crossing] clipped to the validity
/// range. Peak localization uses a coarse scan with geometric zoom followed
/// by golden-section refinement; half-maximum points are bracketed by
/// geometric marching and refined by bisection.
pub fn loss_peak(
    p: &(impl Permittivity + ?Sized),
    crossing: f64,
) -> Result<LossPeak, MaterialError> {
    let (v_lo, v_hi) = p.omega_range();
    let lo = (0.5 * crossing).max(v_lo);
    let hi = (2.0 * crossing).min(v_hi);
    if !(hi > lo) {
        return Err(MaterialError::PeakAtBoundary);
    }
    let f = |w: f64| loss_function(p, w).unwrap_or(f64::NEG_INFINITY);

    // coarse scan with zoom: narrows onto the global maximum bucket
    const N: usize = 513;
    let (mut a, mut b) = (lo, hi);
    let mut peak_guess = crossing;
    for _ in 0..40 {
        let step = (b - a) / (N - 1) as f64;
        let mut best = (0usize, f64::NEG_INFINITY);
        for i in 0..N {
            let v = f(a + step * i as f64);
            if v > best.1 {
                best = (i, v);
            }
        }
        let i = best.0;
        if (i == 0 && a <= lo) || (i == N - 1 && b >= hi) {
            return Err(MaterialError::PeakAtBoundary);
        }
        peak_guess = a + step * i as f64;
        let na = (peak_guess - 2.0 * step).max(lo);
        let nb = (peak_guess + 2.0 * step).min(hi);
        if nb - na <= PEAK_TOL * peak_guess * 16.0 {
            a = na;
            b = nb;
            break;
        }
        a = na;
        b = nb;
    }

    // golden-section maximization on the final bracket
    let gr = (5.0_f64.sqrt() - 1.0) / 2.0;
    let (mut x1, mut x2) = (b - gr * (b - a), a + gr * (b - a));
    let (mut f1, mut f2) = (f(x1), f(x2));
    while (b - a) > PEAK_TOL * peak_guess {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    let omega_peak = 0.5 * (a + b);
    let peak_value = f(omega_peak);
    if !peak_value.is_finite() || peak_value <= 0.0 {
        return Err(MaterialError::InconclusiveFwhm);
    }
    let half = 0.5 * peak_value;

    // bracket the half-maximum on each side by geometric marching
    let half_point = |direction: f64| -> Result<f64, MaterialError> {
        let limit = if direction > 0.0 { hi } else { lo };
        let mut step = (b - a).max(omega_peak * PEAK_TOL) * 2.0;
        let mut x_in = omega_peak;
        loop {
            let x_out = (x_in + direction * step).clamp(lo, hi);
            if f(x_out) < half {
                // bisection between x_in (above half) and x_out (below)
                let (mut p_in, mut p_out) = (x_in, x_out);
                while (p_out - p_in).abs() > PEAK_TOL * omega_peak {
                    let m = 0.5 * (p_in + p_out);
                    if f(m) >= half {
                        p_in = m;
                    } else {
                        p_out = m;
                    }
                }
                return Ok(0.5 * (p_in + p_out));
            }
            if x_out == limit {
                return Err(MaterialError::InconclusiveFwhm);
            }
            x_in = x_out;
            step *= 1.6;
        }
    };
    let w_hi = half_point(1.0)?;
    let w_lo = half_point(-1.0)?;
    Ok(LossPeak {
        omega_peak,
        peak_value,
        fwhm: w_hi - w_lo,
    })
}

/// τ_c = 1/Δω_FWHM of the loss-function peak near the given crossing.
pub fn coherence_time(
    p: &(impl Permittivity + ?Sized),
    crossing: f64,
) -> Result<f64, MaterialError> {
    Ok(1.0 / loss_peak(p, crossing)?.fwhm)
}

/// Phase velocity v_p = c/Re n with n the principal square root of ε.
pub fn phase_velocity(eps: Complex64) -> Result<(Complex64, f64), MaterialError> {
    let n = eps.sqrt();
    if n.re <= 0.0 {
        return Err(MaterialError::InfinitePhaseVelocity);
    }
    Ok((n, C0 / n.re))
}

/// Full coherence report. `at` optionally overrides the evaluation frequency
/// for ε, n, and v_p; τ_c always comes from the loss peak at the crossing.
pub fn coherence_length(
    p: &(impl Permittivity + ?Sized),
    at: Option<f64>,
) -> Result<CoherenceReport, MaterialError> {
    let (lo, hi) = p.omega_range();
    let crossings = enz_crossing(p, lo.max(f64::MIN_POSITIVE), hi.min(f64::MAX))?;
    if crossings.is_empty() {
        return Err(MaterialError::NoCrossing);
    }
    // the ENZ point of interest is the crossing with the smallest |eps|
    // (equivalently the lowest loss at the crossing)
    let mut enz = crossings[0];
    let mut best = f64::INFINITY;
    for &w in &crossings {
        let norm = p.eval(w)?.norm();
        if norm < best {
            best = norm;
            enz = w;
        }
    }
    let peak = loss_peak(p, enz)?;
    let tau = 1.0 / peak.fwhm;
    let omega_eval = at.unwrap_or(enz);
    if !(omega_eval > 0.0) {
        return Err(MaterialError::NonPositiveFrequency(omega_eval));
    }
    let eps_eval = p.eval(omega_eval)?;
    let (n, v_p) = phase_velocity(eps_eval)?;
    let two_pi_c = 2.0 * PI * C0;
    Ok(CoherenceReport {
        enz_wavelength: two_pi_c / enz,
        eps_at_enz: p.eval(enz)?,
        loss_fwhm: peak.fwhm,
        coherence_time: tau,
        refractive_index: n,
        phase_velocity: v_p,
        coherence_length: v_p * tau,
        evaluation_wavelength: two_pi_c / omega_eval,
        at_crossing: (omega_eval - enz).abs() <= 1e-6 * enz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::DispersionModel;
    use approx::assert_relative_eq;

    #[test]
    fn lossless_drude_crossing_at_plasma_frequency() {
        let m = DispersionModel::drude(1.0, 1.0, 0.0);
        let c = enz_crossing(&m, 0.5, 1.5).unwrap();
        assert_eq!(c.len(), 1);
        assert_relative_eq!(c[0], 1.0, max_relative = 1e-9);
    }

    #[test]
    fn no_crossing_is_empty_not_error() {
        let m = DispersionModel::constant(2.25);
        assert!(enz_crossing(&m, 0.5, 1.5).unwrap().is_empty());
    }

    #[test]
    fn drude_fwhm_approaches_gamma() {
        // tau_c -> 1/gamma as gamma/wp -> 0; within 5% already at 0.01
        for &gamma in &[1e-2, 1e-3] {
            let m = DispersionModel::drude(1.0, 1.0, gamma);
            let tau = coherence_time(&m, 1.0).unwrap();
            assert_relative_eq!(tau, 1.0 / gamma, max_relative = 0.05);
        }
        // convergence: relative deviation shrinks with gamma
        let d = |g: f64| {
            let m = DispersionModel::drude(1.0, 1.0, g);
            (coherence_time(&m, 1.0).unwrap() * g - 1.0).abs()
        };
        assert!(d(1e-3) <= d(1e-2));
    }

    #[test]
    fn fwhm_matches_oracle_limit() {
        let gamma = 0.01;
        let m = DispersionModel::drude(1.0, 1.0, gamma);
        let peak = loss_peak(&m, 1.0).unwrap();
        let limit = crate::oracle::drude_fwhm_limit(1.0, gamma, 1.0).unwrap();
        assert_relative_eq!(peak.fwhm, limit, max_relative = 0.05);
    }

    #[test]
    fn vacuum_phase_velocity_is_c() {
        let (n, vp) = phase_velocity(Complex64::new(1.0, 0.0)).unwrap();
        assert_eq!(n, Complex64::new(1.0, 0.0));
        assert_eq!(vp, C0);
        // externally supplied tau of 1 s gives L_c = c
        assert_relative_eq!(vp * 1.0, C0);
    }

    #[test]
    fn metallic_eps_has_no_phase_velocity() {
        assert!(matches!(
            phase_velocity(Complex64::new(-4.0, 0.0)),
            Err(MaterialError::InfinitePhaseVelocity)
        ));
    }

    #[test]
    fn report_invariant_lc_equals_vp_tau() {
        let m = DispersionModel::drude(1.0, 1.0, 0.01);
        let r = coherence_length(&m, None).unwrap();
        assert_eq!(r.coherence_length, r.phase_velocity * r.coherence_time);
        assert!(r.coherence_time > 0.0 && r.phase_velocity > 0.0);
        assert!(r.at_crossing);
    }

    #[test]
    fn off_crossing_report_is_flagged() {
        let m = DispersionModel::drude(1.0, 1.0, 0.01);
        let r = coherence_length(&m, Some(1.3)).unwrap();
        assert!(!r.at_crossing);
        assert_relative_eq!(
            r.evaluation_wavelength,
            2.0 * PI * C0 / 1.3,
            max_relative = 1e-12
        );
    }

    #[test]
    fn peak_at_boundary_is_an_error() {
        // restrict validity so the Drude loss peak sits outside the window
        struct Clipped(DispersionModel);
        impl Permittivity for Clipped {
            fn eval(&self, w: f64) -> Result<Complex64, MaterialError> {
                self.0.permittivity(w)
            }
            fn omega_range(&self) -> (f64, f64) {
                (0.2, 0.9)
            }
        }
        let c = Clipped(DispersionModel::drude(1.0, 1.0, 0.01));
        assert!(matches!(
            loss_peak(&c, 0.85),
            Err(MaterialError::PeakAtBoundary | MaterialError::InconclusiveFwhm)
        ));
    }
}
