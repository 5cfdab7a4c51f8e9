//! Localization at a rational point by truncation stabilization.
//!
//! With `m` the maximal ideal at the origin (after shifting the point there),
//! `d_N = dim K[x]/(I + m^N)` is non-decreasing in `N`. Once `d_N = d_{N+1}`
//! we have `m^N ⊆ I + m^{N+1}` in the local ring, so `m^N ⊆ I` there by
//! Nakayama, and `K[x]/(I + m^N)` is the local factor at the point.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::MonomialOrder;

use super::{buchberger_with_cancel, CancelToken, GroebnerBasis, Ideal};

pub const DEFAULT_TRUNCATION_CAP: u32 = 50;

#[derive(Clone, Debug)]
pub struct LocalizeOptions {
    /// Largest truncation exponent tried before giving up as non-isolated.
    pub cap: u32,
    pub cancel: Option<CancelToken>,
}

impl Default for LocalizeOptions {
    fn default() -> Self {
        LocalizeOptions {
            cap: DEFAULT_TRUNCATION_CAP,
            cancel: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LocalComponent {
    pub point: Vec<Rational>,
    /// The input ideal in coordinates centred at the point.
    pub shifted: Ideal,
    /// Reduced basis of `shifted + m^N`.
    pub gb: GroebnerBasis,
    /// Stabilization exponent `N`; the maximal ideal of the local factor
    /// satisfies `m̄^N = 0` and `m̄^{N-1} ≠ 0`.
    pub exponent: u32,
    pub dim: usize,
}

pub fn local_component(
    ideal: &Ideal,
    point: &[Rational],
    order: &MonomialOrder,
    opts: &LocalizeOptions,
) -> Result<LocalComponent> {
    for g in ideal.generators() {
        if !g.eval(point)?.is_zero() {
            return Err(Error::NotZeroAtPoint {
                generator: g.to_string(),
            });
        }
    }
    let shifted = ideal.shift(point)?;
    let cancel = opts.cancel.as_ref();
    let truncated = |n: u32| -> Result<(GroebnerBasis, usize)> {
        let gb = buchberger_with_cancel(&shifted.plus_power_of_maximal(n), order, cancel)?;
        let d = gb.dimension()?;
        Ok((gb, d))
    };
    let (mut gb, mut dim) = truncated(1)?;
    for n in 1..=opts.cap {
        CancelToken::check(cancel)?;
        let (next_gb, next_dim) = truncated(n + 1)?;
        if next_dim == dim {
            return Ok(LocalComponent {
                point: point.to_vec(),
                shifted,
                gb,
                exponent: n,
                dim,
            });
        }
        gb = next_gb;
        dim = next_dim;
    }
    Err(Error::NotIsolated { cap: opts.cap })
}
