//! Shared rendering of signed sums like `1 - 1/24*h^2 + t`.

use core::fmt;

use num_traits::{One, Signed};

use crate::Rational;

/// Writes `Σ c·m` where `monomial` is the already-rendered power (empty for
/// the constant term). Zero sums print as `0`.
pub(crate) fn write_sum<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, sep: &str) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Rational, alloc::string::String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{abs}{sep}{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `x`, `x^k`, or empty for `k == 0`.
pub(crate) fn power(var: &str, k: i64) -> alloc::string::String {
    use alloc::format;
    match k {
        0 => alloc::string::String::new(),
        1 => alloc::string::String::from(var),
        _ => format!("{var}^{k}"),
    }
}
