//! Spectra, energies and energy bounds of the generalized adjacency matrix
//! `A_alpha(G) = alpha D(G) + (1 - alpha) A(G)` of simple graphs.

pub mod bounds;
pub mod cli;
pub mod closed_forms;
pub mod graph;
pub mod spectra;
pub mod verify;

pub use graph::{Graph, GraphError, GraphFamily};
pub use spectra::{spectrum, Spectrum};

/// Significant digits kept in serialized output.
pub const OUTPUT_DIGITS: usize = 12;

/// Rounds to [`OUTPUT_DIGITS`] significant digits. Non-finite values pass
/// through unchanged.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", OUTPUT_DIGITS - 1, x).parse().unwrap_or(x)
}

#[cfg(test)]
mod tests {
    use super::round_sig;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(-2.0f64.sqrt() * 1e5), -141421.356237);
        assert_eq!(round_sig(0.0), 0.0);
        assert!(round_sig(f64::NAN).is_nan());
        assert_eq!(round_sig(4.0), 4.0);
    }
}
