//! The scalar field abstraction.
//!
//! Everything geometric is written against [`Field`]. The exact instance is
//! [`BigRational`]; `f64`/`f32` are provided for plotting and quick
//! experiments but carry no exactness guarantee.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// An ordered field usable by the geometry kernel.
pub trait Field:
    Clone + fmt::Debug + fmt::Display + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    /// Whether comparisons are exact.
    const EXACT: bool;

    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the field")
    }

    fn frac(n: i64, d: i64) -> Self {
        Self::int(n) / Self::int(d)
    }

    fn to_f64(&self) -> f64;

    /// Rescale a homogeneous vector so that equal projective points get equal
    /// coordinates: the first nonzero entry becomes positive and, for exact
    /// fields, the entries become coprime integers.
    fn normalize_projective(v: &mut [Self]);

    /// Positive common multiple of the denominators, when the field has them.
    fn common_denominator(_xs: &[Self]) -> Option<Self> {
        None
    }

    /// The value as a machine integer, when it is an integer that fits.
    fn to_small_int(&self) -> Option<i128> {
        None
    }

    /// Sign of the dot product `a·b`.
    fn dot_sign(a: &[Self], b: &[Self]) -> Ordering {
        let s = a.iter().zip(b).fold(Self::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
        sign(&s)
    }
}

/// Total comparison; incomparable floats count as equal.
pub fn cmp<T: Field>(a: &T, b: &T) -> Ordering {
    a.partial_cmp(b).unwrap_or(Ordering::Equal)
}

/// Sign of a scalar as an ordering against zero.
pub fn sign<T: Field>(a: &T) -> Ordering {
    cmp(a, &T::zero())
}

pub fn min<T: Field>(a: T, b: T) -> T {
    if b < a {
        b
    } else {
        a
    }
}

pub fn max<T: Field>(a: T, b: T) -> T {
    if b > a {
        b
    } else {
        a
    }
}

fn flip_to_positive<T: Field>(v: &mut [T]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

impl Field for BigRational {
    const EXACT: bool = true;

    fn int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn frac(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn normalize_projective(v: &mut [Self]) {
        if v.iter().all(|x| x.is_zero()) {
            return;
        }
        let lcm = v
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let nums: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let g = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        for (x, n) in v.iter_mut().zip(nums) {
            *x = BigRational::from_integer(n / &g);
        }
        flip_to_positive(v);
    }

    fn common_denominator(xs: &[Self]) -> Option<Self> {
        let l = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        Some(BigRational::from_integer(l))
    }

    fn to_small_int(&self) -> Option<i128> {
        if self.is_integer() {
            self.numer().to_i128()
        } else {
            None
        }
    }

    /// Integer vectors (as produced by `normalize_projective`) take a
    /// machine-word path when nothing overflows.
    fn dot_sign(a: &[Self], b: &[Self]) -> Ordering {
        if a.iter().chain(b).all(|x| x.is_integer()) {
            let small = a.iter().zip(b).try_fold(0i128, |acc, (x, y)| {
                acc.checked_add(x.numer().to_i128()?.checked_mul(y.numer().to_i128()?)?)
            });
            if let Some(s) = small {
                return s.cmp(&0);
            }
            let big: BigInt = a.iter().zip(b).map(|(x, y)| x.numer() * y.numer()).sum();
            return big.sign().cmp(&num_bigint::Sign::NoSign);
        }
        let s = a.iter().zip(b).fold(Self::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
        sign(&s)
    }
}

macro_rules! float_field {
    ($t:ty) => {
        impl Field for $t {
            const EXACT: bool = false;

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn normalize_projective(v: &mut [Self]) {
                let Some(first) = v.iter().copied().find(|x| *x != 0.0) else {
                    return;
                };
                let s = first.abs();
                for x in v.iter_mut() {
                    *x /= s;
                }
                flip_to_positive(v);
            }
        }
    };
}

float_field!(f64);
float_field!(f32);

/// Parse a canonical scalar string (`"p"` or `"p/q"`).
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str_radix(n.trim(), 10).ok()?;
            let d = BigInt::from_str_radix(d.trim(), 10).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => BigInt::from_str_radix(s, 10)
            .ok()
            .map(BigRational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::frac(n, d)
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(q(6, -4).to_string(), "-3/2");
        assert_eq!(q(8, 4).to_string(), "2");
        assert_eq!(parse_rational("-3/2"), Some(q(-3, 2)));
        assert_eq!(parse_rational("10/4"), Some(q(5, 2)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn projective_normalization() {
        let mut v = vec![q(-1, 2), q(1, 3), q(0, 1)];
        BigRational::normalize_projective(&mut v);
        assert_eq!(v, vec![q(3, 1), q(-2, 1), q(0, 1)]);
        let mut w = vec![0.0f64, -2.0, 4.0];
        f64::normalize_projective(&mut w);
        assert_eq!(w, vec![0.0, 1.0, -2.0]);
    }
}
