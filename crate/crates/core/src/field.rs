//! Exact scalars over the rationals and prime fields.
//!
//! A [`Scalar`] always knows which field it lives in, so mixing fields is
//! caught rather than silently reduced. The `checked_*` methods report a
//! mismatch as an error; the operator impls treat it as a bug and panic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The base field: ℚ or GF(p) for a word-sized prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(FieldKind);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec(FieldKind::Rationals);

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec(FieldKind::Prime(p)))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.0
    }

    /// The prime p for GF(p), `None` for ℚ.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            FieldKind::Rationals => None,
            FieldKind::Prime(p) => Some(p),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.modulus().is_some()
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_i64(*self, 0)
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_i64(*self, 1)
    }

    /// All elements of a prime field in residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(|v| Scalar(Repr::Modular { value: v, p })).collect())
    }

    /// Fails with `UnsupportedField` unless this is a prime field.
    pub fn require_finite(&self, what: &str) -> Result<u64> {
        self.modulus()
            .ok_or_else(|| Error::UnsupportedField(format!("{what} requires a prime field, got Q")))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Self::RATIONALS);
        }
        let p = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|d| d.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("bad field descriptor {s:?}")))?;
        Self::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i128) as u64
}

/// An exact field element in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    // Boxed so that the common GF(p) case stays small.
    Rational(Box<BigRational>),
    Modular { value: u64, p: u64 },
}

/// Arithmetic operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Apply `op` to two scalars of the same field.
pub fn field_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl Scalar {
    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        match field.0 {
            FieldKind::Rationals => Scalar(Repr::Rational(Box::new(BigRational::from_integer(n.into())))),
            FieldKind::Prime(p) => Scalar(Repr::Modular {
                value: (n as i128).rem_euclid(p as i128) as u64,
                p,
            }),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar(Repr::Rational(Box::new(q)))
    }

    /// The residue in [0, p) for GF(p); panics on a rational.
    pub fn from_residue(field: FieldSpec, value: u64) -> Self {
        let p = field.modulus().expect("residue requires a prime field");
        Scalar(Repr::Modular { value: value % p, p })
    }

    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec::RATIONALS,
            Repr::Modular { p, .. } => FieldSpec(FieldKind::Prime(*p)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Modular { value, .. } => *value == 1,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Modular { value, .. } => Some(*value),
            Repr::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Modular { .. } => None,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field().to_string(), other.field().to_string()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar::from_rational(a.as_ref() + b.as_ref()),
            (Repr::Modular { value: a, p }, Repr::Modular { value: b, .. }) => Scalar(Repr::Modular {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            }),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar::from_rational(a.as_ref() - b.as_ref()),
            (Repr::Modular { value: a, p }, Repr::Modular { value: b, .. }) => Scalar(Repr::Modular {
                value: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64,
                p: *p,
            }),
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar::from_rational(a.as_ref() * b.as_ref()),
            (Repr::Modular { value: a, p }, Repr::Modular { value: b, .. }) => Scalar(Repr::Modular {
                value: mul_mod(*a, *b, *p),
                p: *p,
            }),
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        let inv = other.inv()?;
        self.checked_mul(&inv)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(q) => Scalar::from_rational(q.recip()),
            Repr::Modular { value, p } => Scalar(Repr::Modular {
                value: inv_mod(*value, *p),
                p: *p,
            }),
        })
    }

    /// Parse the text grammar `-?[0-9]+(/[1-9][0-9]*)?` into `field`.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar> {
        let bad = || Error::Parse(format!("bad scalar {text:?}"));
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        let body = text.strip_prefix('-').unwrap_or(text);
        let negative = body.len() != text.len();
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => {
                if !digits(d) || d.starts_with('0') {
                    return Err(bad());
                }
                (n, Some(d))
            }
            None => (body, None),
        };
        if !digits(num) {
            return Err(bad());
        }
        let parse_int = |s: &str| BigInt::parse_bytes(s.as_bytes(), 10).ok_or_else(bad);
        let mut n = parse_int(num)?;
        if negative {
            n = -n;
        }
        let d = match den {
            Some(d) => parse_int(d)?,
            None => BigInt::one(),
        };
        match field.0 {
            FieldKind::Rationals => Ok(Scalar::from_rational(BigRational::new(n, d))),
            FieldKind::Prime(p) => {
                let pb = BigInt::from(p);
                let reduce = |x: &BigInt| x.mod_floor(&pb).to_u64().expect("residue fits in u64");
                let num = Scalar(Repr::Modular { value: reduce(&n), p });
                let den = Scalar(Repr::Modular { value: reduce(&d), p });
                num.checked_div(&den)
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Ord for Scalar {
    /// Rationals by value, residues by their representative; used for
    /// deterministic tie-breaking only.
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (Repr::Modular { value: a, p: pa }, Repr::Modular { value: b, p: pb }) => (pa, a).cmp(&(pb, b)),
            (Repr::Rational(_), Repr::Modular { .. }) => Ordering::Less,
            (Repr::Modular { .. }, Repr::Rational(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect(concat!("Scalar::", stringify!($method)))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar::from_rational(-q.as_ref()),
            Repr::Modular { value, p } => Scalar(Repr::Modular {
                value: (p - value) % p,
                p: *p,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, FieldSpec::RATIONALS).unwrap()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn worked_arithmetic() {
        assert_eq!(field_arith(&q("1/2"), &q("1/3"), ArithOp::Add).unwrap(), q("5/6"));
        let two = Scalar::from_i64(gf(3), 2);
        assert_eq!(field_arith(&two, &two, ArithOp::Mul).unwrap(), Scalar::from_i64(gf(3), 1));
        for s in ["3", "-7/2", "11/13"] {
            assert!(field_arith(&q(s), &q(s), ArithOp::Div).unwrap().is_one());
        }
    }

    #[test]
    fn arithmetic_errors() {
        assert_eq!(q("1").checked_div(&q("0")), Err(Error::DivisionByZero));
        let a = Scalar::from_i64(gf(3), 1);
        let b = Scalar::from_i64(gf(5), 1);
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        assert!(matches!(a.checked_add(&q("1")), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn parsing() {
        assert_eq!(q("-3/6").to_string(), "-1/2");
        assert_eq!(Scalar::parse("7", gf(5)).unwrap().residue(), Some(2));
        assert_eq!(Scalar::parse("-1", gf(5)).unwrap().residue(), Some(4));
        assert_eq!(Scalar::parse("1/5", gf(5)), Err(Error::DivisionByZero));
        for bad in ["", "-", "1/0", "1/", "/2", "1.5", "+1", "1/-2", "a", "1/02"] {
            assert!(matches!(Scalar::parse(bad, FieldSpec::RATIONALS), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn half_in_gf5_matches_inverse_table() {
        // brute-force inverse of 2 in GF(5)
        let inv2 = (0..5u64).find(|x| (2 * x) % 5 == 1).unwrap();
        assert_eq!(inv2, 3);
        assert_eq!(Scalar::parse("1/2", gf(5)).unwrap().residue(), Some(inv2));
    }

    #[test]
    fn field_descriptors() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::RATIONALS);
        assert_eq!("GF(3)".parse::<FieldSpec>().unwrap(), gf(3));
        assert_eq!(gf(7).to_string(), "GF(7)");
        assert_eq!("GF(4)".parse::<FieldSpec>(), Err(Error::NotPrime(4)));
        assert!("GF()".parse::<FieldSpec>().is_err());
        assert!("F3".parse::<FieldSpec>().is_err());
        assert_ne!(gf(3), gf(5));
    }

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "{n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(18_446_744_073_709_551_555));
    }

    fn arb_scalar(field: FieldSpec) -> BoxedStrategy<Scalar> {
        match field.modulus() {
            Some(p) => (0..p).prop_map(move |v| Scalar::from_residue(field, v)).boxed(),
            None => (-50i64..50, 1i64..20)
                .prop_map(|(n, d)| Scalar::from_rational(BigRational::new(n.into(), d.into())))
                .boxed(),
        }
    }

    fn arb_triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        prop_oneof![
            Just(FieldSpec::RATIONALS),
            Just(gf(2)),
            Just(gf(3)),
            Just(gf(5)),
            Just(gf(1_000_000_007))
        ]
        .prop_flat_map(|f| (arb_scalar(f), arb_scalar(f), arb_scalar(f)))
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn parse_print_roundtrip((a, _, _) in arb_triple()) {
            prop_assert_eq!(Scalar::parse(&a.to_string(), a.field()).unwrap(), a);
        }
    }
}
