//! Numeric tolerances used throughout the analyses.

use crate::error::{Error, Result};
use alloc::format;

/// Tolerance knobs. Every analysis takes these explicitly so the CLI can
/// override them; the defaults are the values the verdicts are calibrated
/// for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative gap below which two sorted eigenvalues are merged into one
    /// cluster: `gap <= cluster * (1 + spectral_radius)`.
    pub cluster: f64,
    /// Relative threshold for membership in an eigenvalue support:
    /// `||E_r x|| > support * ||x||`.
    pub support: f64,
    /// A transfer entry counts as perfect when `|H(t)_{v,u}| >= 1 - fidelity`.
    pub fidelity: f64,
    /// Flat-time scans report a hit when the flatness residual drops below
    /// this.
    pub flatness: f64,
    /// Certificates are re-verified (vector norm and phase equations) to
    /// this absolute tolerance.
    pub certificate: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            cluster: 1e-8,
            support: 1e-8,
            fidelity: 1e-8,
            flatness: 1e-6,
            certificate: 1e-7,
        }
    }
}

impl Tolerances {
    /// All tolerances must sit in `(0, 1e-2)`.
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("cluster", self.cluster),
            ("support", self.support),
            ("fidelity", self.fidelity),
            ("flatness", self.flatness),
            ("certificate", self.certificate),
        ] {
            if !(value > 0.0 && value < 1e-2) {
                return Err(Error::InvalidParameter(format!(
                    "tolerance `{name}` = {value} outside (0, 1e-2)"
                )));
            }
        }
        Ok(())
    }
}
