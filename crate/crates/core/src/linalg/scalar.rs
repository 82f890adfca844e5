use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The coefficient field of a session: the rationals or a prime field F_p.
///
/// The choice is global to every object built from an algebra; mixing fields
/// is rejected at load time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

pub const MAX_PRIME: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// Checks that a prime field uses an actual prime `p <= 2^31`.
    pub fn validate(self) -> Result<()> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime(p) => {
                if p > MAX_PRIME {
                    Err(Error::InvalidField(format!("{p} exceeds 2^31")))
                } else if !is_prime(p) {
                    Err(Error::InvalidField(format!("{p} is not prime")))
                } else {
                    Ok(())
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

pub(crate) fn fp_add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn fp_sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    // p <= 2^31 keeps the product below 2^62.
    (a * b) % p
}

pub(crate) fn fp_neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

/// Modular inverse by the extended Euclidean algorithm. Panics on zero.
pub(crate) fn fp_inv(a: u64, p: u64) -> u64 {
    assert!(a != 0, "inverse of zero in F_{p}");
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "not invertible");
    t0.rem_euclid(p as i64) as u64
}

/// An exact field element tagged with its field.
///
/// `num`'s `BigRational` keeps values reduced to lowest terms with a positive
/// denominator, so rational scalars are always canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Prime { p: u64, value: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Scalar::from_int(field, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Scalar::from_int(field, 1)
    }

    pub fn from_int(field: FieldSpec, n: i64) -> Self {
        match field {
            FieldSpec::Prime(p) => Scalar::Prime {
                p,
                value: n.rem_euclid(p as i64) as u64,
            },
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_ratio(field: FieldSpec, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        match field {
            FieldSpec::Rationals => {
                Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            FieldSpec::Prime(p) => {
                let n = num.rem_euclid(p as i64) as u64;
                let d = den.rem_euclid(p as i64) as u64;
                assert!(d != 0, "denominator divisible by {p}");
                Scalar::Prime {
                    p,
                    value: fp_mul(n, fp_inv(d, p), p),
                }
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Prime { p, .. } => FieldSpec::Prime(*p),
            Scalar::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    fn match_prime(&self, other: &Scalar) -> (u64, u64, u64) {
        match (self, other) {
            (Scalar::Prime { p, value: a }, Scalar::Prime { p: q, value: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                (*p, *a, *b)
            }
            _ => unreachable!(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let (p, a, b) = self.match_prime(other);
                Scalar::Prime { p, value: fp_add(a, b, p) }
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => {
                let (p, a, b) = self.match_prime(other);
                Scalar::Prime { p, value: fp_sub(a, b, p) }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                let (p, a, b) = self.match_prime(other);
                Scalar::Prime { p, value: fp_mul(a, b, p) }
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { p, value } => Scalar::Prime { p: *p, value: fp_neg(*value, *p) },
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rational(a.recip())
            }
            Scalar::Prime { p, value } => Scalar::Prime { p: *p, value: fp_inv(*value, *p) },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Canonical text form: `n` or `a/b` (rationals in lowest terms).
    pub fn render(&self) -> String {
        match self {
            Scalar::Prime { value, .. } => value.to_string(),
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// Parses the canonical text form back into a scalar of `field`.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n, d),
            None => (text, "1"),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {text:?}")))?;
        let den: BigInt = den_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {text:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        match field {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let red = |x: &BigInt| -> u64 {
                    let m = x % &pb;
                    let m = if m.is_negative() { m + &pb } else { m };
                    m.to_string().parse().unwrap()
                };
                let d = red(&den);
                if d == 0 {
                    return Err(Error::Parse(format!(
                        "denominator of {text:?} vanishes in F_{p}"
                    )));
                }
                Ok(Scalar::Prime {
                    p,
                    value: fp_mul(red(&num), fp_inv(d, p), p),
                })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic_round_trips() {
        let p = 7;
        for a in 0..p {
            for b in 1..p {
                let x = Scalar::Prime { p, value: a };
                let y = Scalar::Prime { p, value: b };
                assert_eq!(x.add(&y).sub(&y), x);
                assert_eq!(x.mul(&y).div(&y), x);
                assert!(y.mul(&y.inv()).is_one());
            }
        }
    }

    #[test]
    fn rational_scalars_stay_canonical() {
        let f = FieldSpec::Rationals;
        let x = Scalar::from_ratio(f, 6, -4);
        assert_eq!(x.render(), "-3/2");
        let y = Scalar::from_ratio(f, 1, 2).add(&Scalar::from_ratio(f, 1, 2));
        assert_eq!(y.render(), "1");
    }

    #[test]
    fn field_validation_rejects_bad_primes() {
        assert!(FieldSpec::Prime(2).validate().is_ok());
        assert!(FieldSpec::Prime(2147483647).validate().is_ok());
        assert!(FieldSpec::Prime(4).validate().is_err());
        assert!(FieldSpec::Prime((1 << 31) + 11).validate().is_err());
    }

    #[test]
    fn parse_and_render_are_inverse() {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(5)] {
            for s in ["0", "3", "2/3", "-7/2"] {
                let v = Scalar::parse(f, s).unwrap();
                assert_eq!(Scalar::parse(f, &v.render()).unwrap(), v);
            }
        }
    }
}
