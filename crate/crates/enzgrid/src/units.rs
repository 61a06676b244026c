//! Parsing of quantities with SI suffixes, as accepted in config files and
//! CLI flags.
//!
//! Lengths: `nm`, `um` (or `µm`), `mm`, `cm`, `m`. Frequencies convert to
//! angular frequency in rad/s: `Hz`/`kHz`/`MHz`/`GHz`/`THz` multiply by 2π,
//! `eV` converts via ω = E/ħ, and `rad/s` is taken verbatim. A bare number
//! is interpreted in the SI base unit of the expected dimension.

use crate::constants::{EV, HBAR};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum UnitError {
    #[error("cannot parse quantity `{0}`")]
    Parse(String),
    #[error("quantity `{0}` has {1} units where {2} was expected")]
    WrongDimension(String, &'static str, &'static str),
    #[error("quantity `{0}` must be positive")]
    NonPositive(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Quantity {
    /// Length in metres.
    Length(f64),
    /// Angular frequency in rad/s.
    AngularFrequency(f64),
    /// Bare number (dimension decided by context).
    Bare(f64),
}

/// Splits `"310nm"` into `(310.0, "nm")`. Whitespace between number and
/// suffix is allowed.
fn split_suffix(s: &str) -> Result<(f64, &str), UnitError> {
    let s = s.trim();
    let end = s
        .char_indices()
        .take_while(|(_, c)| c.is_ascii_digit() || matches!(c, '.' | '+' | '-' | 'e' | 'E'))
        .map(|(i, c)| i + c.len_utf8())
        .last()
        .unwrap_or(0);
    let (num, suffix) = s.split_at(end);
    let value: f64 = num
        .trim()
        .parse()
        .map_err(|_| UnitError::Parse(s.to_string()))?;
    Ok((value, suffix.trim()))
}

/// Parses a quantity string, classifying its dimension from the suffix.
pub fn parse_quantity(s: &str) -> Result<Quantity, UnitError> {
    let (value, suffix) = split_suffix(s)?;
    let q = match suffix {
        "" => Quantity::Bare(value),
        "nm" => Quantity::Length(value * 1e-9),
        "um" | "µm" => Quantity::Length(value * 1e-6),
        "mm" => Quantity::Length(value * 1e-3),
        "cm" => Quantity::Length(value * 1e-2),
        "m" => Quantity::Length(value),
        "Hz" => Quantity::AngularFrequency(2.0 * PI * value),
        "kHz" => Quantity::AngularFrequency(2.0 * PI * value * 1e3),
        "MHz" => Quantity::AngularFrequency(2.0 * PI * value * 1e6),
        "GHz" => Quantity::AngularFrequency(2.0 * PI * value * 1e9),
        "THz" => Quantity::AngularFrequency(2.0 * PI * value * 1e12),
        "eV" => Quantity::AngularFrequency(value * EV / HBAR),
        "rad/s" => Quantity::AngularFrequency(value),
        _ => return Err(UnitError::Parse(s.to_string())),
    };
    Ok(q)
}

/// Parses a length in metres. Bare numbers are metres.
pub fn parse_length(s: &str) -> Result<f64, UnitError> {
    match parse_quantity(s)? {
        Quantity::Length(v) | Quantity::Bare(v) => Ok(v),
        Quantity::AngularFrequency(_) => {
            Err(UnitError::WrongDimension(s.to_string(), "frequency", "length"))
        }
    }
}

/// Parses an angular frequency in rad/s. Bare numbers are rad/s; a length
/// suffix is interpreted as a vacuum wavelength and converted by ω = 2πc/λ.
pub fn parse_angular_frequency(s: &str) -> Result<f64, UnitError> {
    match parse_quantity(s)? {
        Quantity::AngularFrequency(v) | Quantity::Bare(v) => Ok(v),
        Quantity::Length(lambda) => {
            if lambda <= 0.0 {
                return Err(UnitError::NonPositive(s.to_string()));
            }
            Ok(2.0 * PI * crate::constants::C0 / lambda)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn lengths() {
        assert_relative_eq!(parse_length("310nm").unwrap(), 310e-9);
        assert_relative_eq!(parse_length("2.089um").unwrap(), 2.089e-6);
        assert_relative_eq!(parse_length("1.4mm").unwrap(), 1.4e-3);
        assert_relative_eq!(parse_length("0.5").unwrap(), 0.5);
    }

    #[test]
    fn frequencies() {
        assert_relative_eq!(
            parse_angular_frequency("1THz").unwrap(),
            2.0 * PI * 1e12,
            max_relative = 1e-12
        );
        // 1 eV = 1.519e15 rad/s
        assert_relative_eq!(
            parse_angular_frequency("1eV").unwrap(),
            1.519_267_4e15,
            max_relative = 1e-6
        );
        // wavelength suffix converts through 2πc/λ
        assert_relative_eq!(
            parse_angular_frequency("10.3um").unwrap(),
            1.828_787_93e14,
            max_relative = 1e-8
        );
    }

    #[test]
    fn rejects_garbage_and_wrong_dimension() {
        assert!(parse_length("abc").is_err());
        assert!(matches!(
            parse_length("1THz"),
            Err(UnitError::WrongDimension(..))
        ));
    }
}
