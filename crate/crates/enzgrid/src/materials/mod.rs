//! Dispersive permittivity models, ENZ crossings, and coherence budgeting.
//!
//! Sign convention throughout: time dependence e^{−iωt}, so passive loss
//! means Im ε(ω) > 0. The Drude–Lorentz form evaluated here is
//!
//! ε(ω) = ε∞ − ωp²/(ω² + iγω) + Σ_k S_k/(ω₀k² − ω² − iγ_k ω)

mod coherence;
mod interp;
mod presets;

pub use coherence::{
    coherence_length, coherence_time, enz_crossing, phase_velocity, CoherenceReport, LossPeak,
};
pub use interp::MonotoneCubic;
pub use presets::{builtin_preset_names, load_preset, preset_from_toml, MaterialPreset};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MaterialError {
    #[error("angular frequency must be positive (got {0})")]
    NonPositiveFrequency(f64),
    #[error("permittivity is exactly zero at omega = {0} rad/s; loss function is singular")]
    SingularPermittivity(f64),
    #[error("wavelength {0} m outside tabulated range [{1}, {2}] m; extrapolation is forbidden")]
    Extrapolation(f64, f64, f64),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("loss-function peak at scan boundary; FWHM inconclusive")]
    PeakAtBoundary,
    #[error("half-maximum not bracketed inside scan range; FWHM inconclusive")]
    InconclusiveFwhm,
    #[error("Re n = 0 at the evaluation point: infinite phase velocity")]
    InfinitePhaseVelocity,
    #[error("no ENZ crossing found in the scan range")]
    NoCrossing,
    #[error("preset `{0}` not found")]
    UnknownPreset(String),
    #[error("cannot read preset: {0}")]
    PresetIo(String),
}

/// One Lorentz oscillator: contributes S/(ω₀² − ω² − iγω) to ε(ω).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorTerm {
    /// Oscillator strength S (rad²/s²).
    pub strength: f64,
    /// Resonance frequency ω₀ (rad/s).
    #[serde(rename = "w0")]
    pub resonance_frequency: f64,
    /// Damping γ (rad/s).
    #[serde(rename = "gamma")]
    pub damping: f64,
}

/// Drude + Lorentz description of complex relative permittivity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DispersionModel {
    pub eps_infinity: f64,
    /// Drude plasma frequency ωp (rad/s); 0 disables the Drude term.
    pub drude_plasma_frequency: f64,
    /// Drude damping γ (rad/s).
    pub drude_damping: f64,
    #[serde(default)]
    pub lorentz_terms: Vec<OscillatorTerm>,
}

impl DispersionModel {
    /// Pure Drude model.
    pub fn drude(eps_infinity: f64, wp: f64, gamma: f64) -> Self {
        Self {
            eps_infinity,
            drude_plasma_frequency: wp,
            drude_damping: gamma,
            lorentz_terms: Vec::new(),
        }
    }

    /// Frequency-independent ε (no dispersion terms).
    pub fn constant(eps: f64) -> Self {
        Self::drude(eps, 0.0, 0.0)
    }

    /// Checks passivity-sufficient parameter signs.
    pub fn validate(&self) -> Result<(), MaterialError> {
        if !self.eps_infinity.is_finite() || self.eps_infinity <= 0.0 {
            return Err(MaterialError::InvalidModel(format!(
                "eps_infinity must be positive and finite, got {}",
                self.eps_infinity
            )));
        }
        if self.drude_plasma_frequency < 0.0 || self.drude_damping < 0.0 {
            return Err(MaterialError::InvalidModel(
                "Drude parameters must be non-negative".into(),
            ));
        }
        for (i, t) in self.lorentz_terms.iter().enumerate() {
            if t.strength < 0.0 || t.resonance_frequency < 0.0 || t.damping < 0.0 {
                return Err(MaterialError::InvalidModel(format!(
                    "Lorentz term {i} has a negative parameter"
                )));
            }
        }
        Ok(())
    }

    /// Complex relative permittivity at angular frequency `omega` (rad/s).
    pub fn permittivity(&self, omega: f64) -> Result<Complex64, MaterialError> {
        if !(omega > 0.0) {
            return Err(MaterialError::NonPositiveFrequency(omega));
        }
        let mut eps = Complex64::new(self.eps_infinity, 0.0);
        if self.drude_plasma_frequency > 0.0 {
            let wp2 = self.drude_plasma_frequency * self.drude_plasma_frequency;
            let denom = Complex64::new(omega * omega, self.drude_damping * omega);
            eps -= wp2 / denom;
        }
        for t in &self.lorentz_terms {
            let denom = Complex64::new(
                t.resonance_frequency * t.resonance_frequency - omega * omega,
                -t.damping * omega,
            );
            eps += t.strength / denom;
        }
        Ok(eps)
    }
}

/// Measured optical constants on a strictly increasing wavelength grid,
/// interpolated with a monotone cubic; extrapolation is forbidden.
#[derive(Debug, Clone)]
pub struct TabulatedPermittivity {
    wavelengths: Vec<f64>,
    re: MonotoneCubic,
    im: MonotoneCubic,
}

impl TabulatedPermittivity {
    /// Builds from `(wavelength_m, eps_re, eps_im)` samples.
    pub fn new(samples: Vec<(f64, f64, f64)>) -> Result<Self, MaterialError> {
        if samples.len() < 2 {
            return Err(MaterialError::InvalidTable(
                "need at least two samples".into(),
            ));
        }
        for w in samples.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(MaterialError::InvalidTable(
                    "wavelengths must be strictly increasing".into(),
                ));
            }
        }
        if samples.iter().any(|s| s.2 < 0.0) {
            return Err(MaterialError::InvalidTable(
                "eps_imag must be non-negative (passivity)".into(),
            ));
        }
        let wavelengths: Vec<f64> = samples.iter().map(|s| s.0).collect();
        let re = MonotoneCubic::new(&wavelengths, &samples.iter().map(|s| s.1).collect::<Vec<_>>())
            .map_err(MaterialError::InvalidTable)?;
        let im = MonotoneCubic::new(&wavelengths, &samples.iter().map(|s| s.2).collect::<Vec<_>>())
            .map_err(MaterialError::InvalidTable)?;
        Ok(Self { wavelengths, re, im })
    }

    /// Parses CSV with header `wavelength_m,eps_re,eps_im`.
    pub fn from_csv(text: &str) -> Result<Self, MaterialError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| MaterialError::InvalidTable("empty CSV".into()))?;
        let cols: Vec<&str> = header.split(',').map(str::trim).collect();
        if cols != ["wavelength_m", "eps_re", "eps_im"] {
            return Err(MaterialError::InvalidTable(format!(
                "expected header `wavelength_m,eps_re,eps_im`, got `{header}`"
            )));
        }
        let mut samples = Vec::new();
        for (ln, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(MaterialError::InvalidTable(format!(
                    "line {}: expected 3 fields",
                    ln + 2
                )));
            }
            let parse = |s: &str| {
                s.parse::<f64>().map_err(|_| {
                    MaterialError::InvalidTable(format!("line {}: bad number `{s}`", ln + 2))
                })
            };
            samples.push((parse(fields[0])?, parse(fields[1])?, parse(fields[2])?));
        }
        Self::new(samples)
    }

    pub fn wavelength_range(&self) -> (f64, f64) {
        (self.wavelengths[0], *self.wavelengths.last().unwrap())
    }

    pub fn permittivity(&self, omega: f64) -> Result<Complex64, MaterialError> {
        if !(omega > 0.0) {
            return Err(MaterialError::NonPositiveFrequency(omega));
        }
        let lambda = 2.0 * std::f64::consts::PI * crate::constants::C0 / omega;
        let (lo, hi) = self.wavelength_range();
        if lambda < lo || lambda > hi {
            return Err(MaterialError::Extrapolation(lambda, lo, hi));
        }
        Ok(Complex64::new(self.re.eval(lambda), self.im.eval(lambda)))
    }
}

/// Anything that can produce ε(ω) over a validity window. Implementations
/// are pure functions over immutable data and safe to share across threads.
pub trait Permittivity: Sync {
    fn eval(&self, omega: f64) -> Result<Complex64, MaterialError>;
    /// Angular-frequency window over which `eval` is meaningful.
    fn omega_range(&self) -> (f64, f64);
}

impl Permittivity for DispersionModel {
    fn eval(&self, omega: f64) -> Result<Complex64, MaterialError> {
        self.permittivity(omega)
    }
    fn omega_range(&self) -> (f64, f64) {
        (f64::MIN_POSITIVE, f64::MAX)
    }
}

impl Permittivity for TabulatedPermittivity {
    fn eval(&self, omega: f64) -> Result<Complex64, MaterialError> {
        self.permittivity(omega)
    }
    fn omega_range(&self) -> (f64, f64) {
        let (lam_lo, lam_hi) = self.wavelength_range();
        let two_pi_c = 2.0 * std::f64::consts::PI * crate::constants::C0;
        (two_pi_c / lam_hi, two_pi_c / lam_lo)
    }
}

/// Loss function L(ω) = Im(−1/ε) = Im ε / |ε|²; its peaks mark longitudinal
/// resonances and their width sets the collective-oscillation relaxation
/// rate.
pub fn loss_function(p: &(impl Permittivity + ?Sized), omega: f64) -> Result<f64, MaterialError> {
    let eps = p.eval(omega)?;
    let norm = eps.norm_sqr();
    if norm == 0.0 {
        return Err(MaterialError::SingularPermittivity(omega));
    }
    Ok(eps.im / norm)
}
