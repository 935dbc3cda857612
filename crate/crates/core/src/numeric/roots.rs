//! Bisection root finding.

use super::ext::ExtReal;
use crate::error::{Error, Result};

/// Root of `f` in `[lo, hi]` by bisection to an interval of width `tol`.
///
/// The midpoint is always the next probe, so the sequence of evaluations is
/// fixed by the inputs. Returns the final midpoint, or an exact zero if one
/// is hit.
pub fn find_root_bisect(
    mut f: impl FnMut(&ExtReal) -> Result<ExtReal>,
    lo: &ExtReal,
    hi: &ExtReal,
    tol: &ExtReal,
) -> Result<ExtReal> {
    let (mut lo, mut hi) = if lo <= hi {
        (lo.clone(), hi.clone())
    } else {
        (hi.clone(), lo.clone())
    };
    let flo = f(&lo)?;
    let fhi = f(&hi)?;
    if flo.is_zero() {
        return Ok(lo);
    }
    if fhi.is_zero() {
        return Ok(hi);
    }
    if flo.is_negative() == fhi.is_negative() {
        return Err(Error::NotBracketed {
            lo: lo.to_decimal(16),
            hi: hi.to_decimal(16),
        });
    }
    let lo_negative = flo.is_negative();
    for _ in 0..100_000 {
        let mid = (&lo + &hi) / 2;
        if &hi - &lo <= *tol || mid == lo || mid == hi {
            return Ok(mid);
        }
        let fm = f(&mid)?;
        if fm.is_zero() {
            return Ok(mid);
        }
        if fm.is_negative() == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((&lo + &hi) / 2)
}
