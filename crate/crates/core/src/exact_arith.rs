//! Exact rational and quadratic-surd scalars.
//!
//! Every geometric comparison in this crate is decided with these types.
//! Integers are 128-bit and every operation is checked: an overflow is a
//! hard error (either an [`ArithError::Overflow`] from the `checked_*`
//! methods or a panic from the operator impls), never a silent wrap.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("128-bit overflow in exact arithmetic")]
    Overflow,
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative rational")]
    NegativeRadicand,
    #[error("incompatible radicands sqrt({0}) and sqrt({1}) cannot share one extension")]
    IncompatibleRadicands(u64, u64),
}

pub type Result<T> = std::result::Result<T, ArithError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {0:?} as a rational")]
pub struct ParseRationalError(pub String);

const OVERFLOW: &str = "128-bit overflow in exact arithmetic";

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn gcd(a: i128, b: i128) -> i128 {
    // Both operands are bounded away from i128::MIN by construction except in
    // pathological inputs; the conversion back is checked.
    i128::try_from(gcd_u128(a.unsigned_abs(), b.unsigned_abs())).expect(OVERFLOW)
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(ArithError::Overflow)
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(ArithError::Overflow)
}

/// Writes `m = f^2 * r` with `r` square-free and returns `(f, r)`.
///
/// `m = 0` yields `(0, 1)`.
pub fn squarefree_decompose(m: u64) -> (u64, u64) {
    if m == 0 {
        return (0, 1);
    }
    let mut rest = m;
    let mut f = 1u64;
    let mut r = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        f *= p.pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // Whatever is left is 1 or a prime.
    r *= rest;
    (f, r)
}

pub fn is_squarefree(m: u64) -> bool {
    m != 0 && squarefree_decompose(m).0 == 1
}

/// Sign of `a + b*sqrt(m)` for integers `a`, `b` and square-free `m >= 1`.
///
/// Decided by case analysis on the signs of `a` and `b`, squaring only when
/// they disagree. Panics on overflow of the squares.
pub fn sign_of_surd_int(a: i128, b: i128, m: u64) -> Ordering {
    if m == 1 {
        return a.checked_add(b).expect(OVERFLOW).cmp(&0);
    }
    match (a.cmp(&0), b.cmp(&0)) {
        (sa, Ordering::Equal) => sa,
        (Ordering::Equal, sb) => sb,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        (sa, _) => {
            // a and b have opposite signs: compare a^2 against b^2 m.
            let a2 = a.checked_mul(a).expect(OVERFLOW);
            let b2m = b
                .checked_mul(b)
                .and_then(|x| x.checked_mul(i128::from(m)))
                .expect(OVERFLOW);
            match a2.cmp(&b2m) {
                Ordering::Greater => sa,
                Ordering::Less => sa.reverse(),
                // a^2 = b^2 m forces m to be a perfect square; unreachable for
                // square-free m > 1 but kept total.
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

/// A rational number in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(ArithError::DivisionByZero);
        }
        let g = gcd(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = n.checked_neg().ok_or(ArithError::Overflow)?;
            d = d.checked_neg().ok_or(ArithError::Overflow)?;
        }
        Ok(Rational { num: n, den: d })
    }

    /// Panicking constructor for literals.
    pub fn frac(num: i128, den: i128) -> Self {
        Self::new(num, den).expect("invalid rational literal")
    }

    pub const fn integer(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn signum(&self) -> Ordering {
        self.num.cmp(&0)
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let g = gcd(self.den, rhs.den);
        let left = mul(self.num, rhs.den / g)?;
        let right = mul(rhs.num, self.den / g)?;
        Rational::new(add(left, right)?, mul(self.den / g, rhs.den)?)
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(ArithError::Overflow)?,
            den: self.den,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let g1 = gcd(self.num, rhs.den);
        let g2 = gcd(rhs.num, self.den);
        let num = mul(self.num / g1, rhs.num / g2)?;
        let den = mul(self.den / g2, rhs.den / g1)?;
        Rational::new(num, den)
    }

    pub fn checked_recip(self) -> Result<Self> {
        Rational::new(self.den, self.num)
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        self.checked_mul(rhs.checked_recip()?)
    }

    pub fn abs(self) -> Self {
        Rational {
            num: self.num.checked_abs().expect(OVERFLOW),
            den: self.den,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(i128::from(n))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num.checked_mul(other.den).expect(OVERFLOW);
        let rhs = other.num.checked_mul(self.den).expect(OVERFLOW);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$checked(rhs).expect(OVERFLOW)
            }
        }
    };
}

rational_binop!(Add, add, checked_add);
rational_binop!(Sub, sub, checked_sub);
rational_binop!(Mul, mul, checked_mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.checked_div(rhs).expect("exact division failed")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.checked_neg().expect(OVERFLOW)
    }
}

impl std::str::FromStr for Rational {
    type Err = ParseRationalError;

    /// Parses `p` or `p/q`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i128 = num.parse().map_err(|_| bad())?;
        let den: i128 = den.parse().map_err(|_| bad())?;
        Rational::new(num, den).map_err(|_| bad())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `coeff * sqrt(radicand)` with a square-free radicand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurdScalar {
    coeff: Rational,
    radicand: u64,
}

impl SurdScalar {
    pub fn new(coeff: Rational, radicand: u64) -> Result<Self> {
        let (f, r) = squarefree_decompose(radicand);
        let coeff = coeff.checked_mul(Rational::integer(i128::from(f)))?;
        if coeff.is_zero() {
            return Ok(SurdScalar { coeff, radicand: 1 });
        }
        Ok(SurdScalar { coeff, radicand: r })
    }

    pub fn rational(q: Rational) -> Self {
        SurdScalar { coeff: q, radicand: 1 }
    }

    /// The non-negative square root of a non-negative rational.
    pub fn sqrt_of(q: Rational) -> Result<Self> {
        if q.signum() == Ordering::Less {
            return Err(ArithError::NegativeRadicand);
        }
        // sqrt(p/q) = sqrt(p q) / q
        let pq = u64::try_from(mul(q.numer(), q.denom())?).map_err(|_| ArithError::Overflow)?;
        SurdScalar::new(Rational::new(1, q.denom())?, pq)
    }

    pub fn coeff(&self) -> Rational {
        self.coeff
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn scaled(self, q: Rational) -> Result<Self> {
        SurdScalar::new(self.coeff.checked_mul(q)?, self.radicand)
    }

    pub fn to_f64(self) -> f64 {
        self.coeff.to_f64() * (self.radicand as f64).sqrt()
    }
}

impl fmt::Display for SurdScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

/// `rational + surd * sqrt(radicand)`, kept in canonical form: the radicand
/// is square-free, and a zero surd part or a radicand of one collapses to
/// the pure rational representation with radicand 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedValue {
    rational: Rational,
    surd: Rational,
    radicand: u64,
}

impl ExtendedValue {
    pub const ZERO: ExtendedValue = ExtendedValue {
        rational: Rational::ZERO,
        surd: Rational::ZERO,
        radicand: 1,
    };

    pub fn new(rational: Rational, surd: Rational, radicand: u64) -> Result<Self> {
        let s = SurdScalar::new(surd, radicand)?;
        if s.radicand == 1 {
            return Ok(ExtendedValue {
                rational: rational.checked_add(s.coeff)?,
                surd: Rational::ZERO,
                radicand: 1,
            });
        }
        Ok(ExtendedValue {
            rational,
            surd: s.coeff,
            radicand: s.radicand,
        })
    }

    pub fn from_rational(q: Rational) -> Self {
        ExtendedValue {
            rational: q,
            surd: Rational::ZERO,
            radicand: 1,
        }
    }

    pub fn from_surd(s: SurdScalar) -> Self {
        ExtendedValue::new(Rational::ZERO, s.coeff, s.radicand).expect("surd scalar is normalized")
    }

    pub fn rational_part(&self) -> Rational {
        self.rational
    }

    pub fn surd_part(&self) -> Rational {
        self.surd
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    /// Re-normalizes the value; a no-op on values built through the
    /// constructors.
    pub fn normalized(self) -> Result<Self> {
        ExtendedValue::new(self.rational, self.surd, self.radicand)
    }

    fn common_radicand(&self, other: &Self) -> Result<u64> {
        match (self.radicand, other.radicand) {
            (1, m) | (m, 1) => Ok(m),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(ArithError::IncompatibleRadicands(a, b)),
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let m = self.common_radicand(&rhs)?;
        ExtendedValue::new(
            self.rational.checked_add(rhs.rational)?,
            self.surd.checked_add(rhs.surd)?,
            m,
        )
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(ExtendedValue {
            rational: self.rational.checked_neg()?,
            surd: self.surd.checked_neg()?,
            radicand: self.radicand,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn scaled(self, q: Rational) -> Result<Self> {
        ExtendedValue::new(
            self.rational.checked_mul(q)?,
            self.surd.checked_mul(q)?,
            self.radicand,
        )
    }

    pub fn signum(&self) -> Ordering {
        compare_extended(self, Rational::ZERO)
    }

    /// Exact ordering of two values sharing an extension.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(*other)?.signum())
    }

    pub fn to_f64(&self) -> f64 {
        self.rational.to_f64() + self.surd.to_f64() * (self.radicand as f64).sqrt()
    }
}

impl From<Rational> for ExtendedValue {
    fn from(q: Rational) -> Self {
        ExtendedValue::from_rational(q)
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        if !self.rational.is_zero() {
            write!(f, "{}", self.rational)?;
            if self.surd.signum() == Ordering::Greater {
                write!(f, "+")?;
            }
        }
        write!(f, "{}*sqrt({})", self.surd, self.radicand)
    }
}

/// Product of two surds, with `sqrt(m) * sqrt(m')` folded into one
/// square-free radicand.
pub fn surd_product(a: SurdScalar, b: SurdScalar) -> Result<ExtendedValue> {
    let coeff = a.coeff.checked_mul(b.coeff)?;
    let m = a
        .radicand
        .checked_mul(b.radicand)
        .ok_or(ArithError::Overflow)?;
    ExtendedValue::new(Rational::ZERO, coeff, m)
}

/// Product of two surds that must land in `Q(sqrt(m))`.
pub fn surd_product_in(a: SurdScalar, b: SurdScalar, m: u64) -> Result<ExtendedValue> {
    let p = surd_product(a, b)?;
    if p.radicand != 1 && p.radicand != m {
        return Err(ArithError::IncompatibleRadicands(p.radicand, m));
    }
    Ok(p)
}

/// Exact sign of `x - t`.
///
/// The surd term is isolated and both sides are squared with explicit sign
/// bookkeeping; no irrational value is ever evaluated. Panics only on
/// 128-bit overflow.
pub fn compare_extended(x: &ExtendedValue, t: Rational) -> Ordering {
    let u = x.rational.checked_sub(t).expect(OVERFLOW);
    if x.surd.is_zero() {
        return u.signum();
    }
    // Clear denominators with a positive common multiple.
    let g = gcd(u.den, x.surd.den);
    let l = (u.den / g).checked_mul(x.surd.den).expect(OVERFLOW);
    let a = u.num.checked_mul(l / u.den).expect(OVERFLOW);
    let b = x.surd.num.checked_mul(l / x.surd.den).expect(OVERFLOW);
    sign_of_surd_int(a, b, x.radicand)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn rationals_stay_reduced() {
        let x = r(6, -8);
        assert_eq!((x.numer(), x.denom()), (-3, 4));
        let y = r(1, 6) + r(1, 3);
        assert_eq!(y, r(1, 2));
        assert_eq!(r(2, 3) * r(9, 4), r(3, 2));
        assert_eq!(r(0, -5), Rational::ZERO);
        assert_eq!(Rational::new(1, 0), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::integer(i128::MAX / 2 + 1);
        assert_eq!(big.checked_add(big), Err(ArithError::Overflow));
        assert_eq!(big.checked_mul(Rational::integer(3)), Err(ArithError::Overflow));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn operator_overflow_panics() {
        let big = Rational::integer(i128::MAX);
        let _ = big + Rational::ONE;
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_decompose(8), (2, 2));
        assert_eq!(squarefree_decompose(40), (2, 10));
        assert_eq!(squarefree_decompose(38), (1, 38));
        assert_eq!(squarefree_decompose(72), (6, 2));
        assert_eq!(squarefree_decompose(1), (1, 1));
        assert_eq!(squarefree_decompose(49), (7, 1));
        assert!(is_squarefree(42));
        assert!(!is_squarefree(12));
    }

    #[test]
    fn product_of_equal_radicands_is_rational() {
        let s2 = SurdScalar::new(Rational::ONE, 2).unwrap();
        let p = surd_product(s2, s2).unwrap();
        assert_eq!(p, ExtendedValue::from_rational(Rational::integer(2)));
        assert_eq!(p.radicand(), 1);
    }

    #[test]
    fn product_of_rationals() {
        let a = SurdScalar::rational(r(2, 3));
        let b = SurdScalar::rational(Rational::ONE);
        assert_eq!(
            surd_product(a, b).unwrap(),
            ExtendedValue::from_rational(r(2, 3))
        );
    }

    #[test]
    fn sqrt_eight_nineteenths() {
        let s = SurdScalar::sqrt_of(r(8, 19)).unwrap();
        assert_eq!((s.coeff(), s.radicand()), (r(2, 19), 38));
        // (2/19)^2 * 38 = 152/361 = 8/19, checked in integers.
        assert_eq!(4 * 38 * 19, 8 * 361);
        let p = surd_product(s, SurdScalar::rational(Rational::ONE)).unwrap();
        assert_eq!(p.rational_part(), Rational::ZERO);
        assert_eq!(p.surd_part(), r(2, 19));
        assert_eq!(p.radicand(), 38);
    }

    #[test]
    fn restricted_product_rejects_foreign_radicand() {
        let a = SurdScalar::new(Rational::ONE, 2).unwrap();
        let b = SurdScalar::new(Rational::ONE, 3).unwrap();
        assert_eq!(
            surd_product_in(a, b, 2),
            Err(ArithError::IncompatibleRadicands(6, 2))
        );
        assert!(surd_product_in(a, a, 2).unwrap().is_rational());
    }

    #[test]
    fn mixing_radicands_in_a_sum_fails() {
        let a = ExtendedValue::new(Rational::ZERO, Rational::ONE, 2).unwrap();
        let b = ExtendedValue::new(Rational::ZERO, Rational::ONE, 3).unwrap();
        assert_eq!(a.checked_add(b), Err(ArithError::IncompatibleRadicands(2, 3)));
        let q = ExtendedValue::from_rational(r(1, 2));
        assert_eq!(a.checked_add(q).unwrap().radicand(), 2);
    }

    #[test]
    fn threshold_at_eighteen_is_sharp() {
        let at = |n: i128| {
            let s = SurdScalar::sqrt_of(r(8, n)).unwrap().scaled(Rational::integer(6)).unwrap();
            compare_extended(&ExtendedValue::from_surd(s), Rational::integer(4))
        };
        assert_eq!(at(18), Ordering::Equal);
        assert_eq!(at(19), Ordering::Less);
        assert_eq!(at(17), Ordering::Greater);
        // 6 sqrt(8/19) squared is 288/19 < 16.
        assert_eq!(at(19), compare_extended(&Rational::frac(288, 19).into(), Rational::integer(16)));
    }

    #[test]
    fn eight_thirds_below_four() {
        let s8 = SurdScalar::new(Rational::ONE, 8).unwrap();
        let s8_3 = SurdScalar::new(r(1, 3), 8).unwrap();
        let p = surd_product(s8, s8_3).unwrap();
        assert_eq!(p, ExtendedValue::from_rational(r(8, 3)));
        assert_eq!(compare_extended(&p, Rational::integer(4)), Ordering::Less);
    }

    #[test]
    fn mixed_sign_comparisons() {
        // 3 - sqrt(2) vs 1: 2 - sqrt(2) > 0
        let x = ExtendedValue::new(Rational::integer(3), -Rational::ONE, 2).unwrap();
        assert_eq!(compare_extended(&x, Rational::ONE), Ordering::Greater);
        // -1 + sqrt(2) vs 1/2: sqrt(2) - 3/2 < 0
        let y = ExtendedValue::new(-Rational::ONE, Rational::ONE, 2).unwrap();
        assert_eq!(compare_extended(&y, r(1, 2)), Ordering::Less);
        assert_eq!(compare_extended(&y, r(2, 5)), Ordering::Greater);
    }

    #[test]
    fn rendering() {
        assert_eq!(r(-7, 9).to_string(), "-7/9");
        assert_eq!(Rational::integer(4).to_string(), "4");
        let v = ExtendedValue::new(Rational::ZERO, r(1, 19), 38).unwrap();
        assert_eq!(v.to_string(), "1/19*sqrt(38)");
        let w = ExtendedValue::new(r(1, 2), r(-3, 4), 10).unwrap();
        assert_eq!(w.to_string(), "1/2-3/4*sqrt(10)");
        let z = ExtendedValue::new(r(1, 2), r(3, 4), 10).unwrap();
        assert_eq!(z.to_string(), "1/2+3/4*sqrt(10)");
    }

    #[test]
    fn zero_coefficient_forces_unit_radicand() {
        let s = SurdScalar::new(Rational::ZERO, 7).unwrap();
        assert_eq!(s.radicand(), 1);
        let v = ExtendedValue::new(r(1, 3), Rational::ZERO, 7).unwrap();
        assert_eq!(v.radicand(), 1);
        assert_eq!(v, ExtendedValue::from_rational(r(1, 3)));
    }

    mod properties {
        use super::*;
        use num_bigint::BigInt;
        use proptest::prelude::*;

        fn rational() -> impl Strategy<Value = Rational> {
            (-1_000_000i128..1_000_000, 1i128..10_000).prop_map(|(n, d)| r(n, d))
        }

        fn radicand() -> impl Strategy<Value = u64> {
            prop::sample::select(vec![2u64, 3, 5, 6, 10, 19, 38, 42, 8, 12, 50, 9])
        }

        /// Sign of `x + y sqrt(m)` from an integer square root bracket
        /// `s <= |y| sqrt(m) < s + 1`.
        fn bracket_sign(x: BigInt, y: BigInt, m: u64) -> Ordering {
            if y < BigInt::from(0) {
                return bracket_sign(-x, -y, m).reverse();
            }
            let sq = &y * &y * BigInt::from(m);
            let s = sq.sqrt();
            let exact = &s * &s == sq;
            let neg_x = -x;
            match neg_x.cmp(&s) {
                Ordering::Less => Ordering::Greater,
                Ordering::Equal if exact => Ordering::Equal,
                Ordering::Equal => Ordering::Greater,
                Ordering::Greater => Ordering::Less,
            }
        }

        fn oracle(a: Rational, c: Rational, m: u64, t: Rational) -> Ordering {
            // (a - t) + c sqrt(m) over the common denominator a.den * t.den * c.den.
            let (an, ad) = (BigInt::from(a.numer()), BigInt::from(a.denom()));
            let (tn, td) = (BigInt::from(t.numer()), BigInt::from(t.denom()));
            let (cn, cd) = (BigInt::from(c.numer()), BigInt::from(c.denom()));
            let x = (&an * &td - &tn * &ad) * &cd;
            let y = cn * ad * td;
            bracket_sign(x, y, m)
        }

        proptest! {
            #[test]
            fn rational_ops_commute(a in rational(), b in rational()) {
                prop_assert_eq!(a + b, b + a);
                prop_assert_eq!(a * b, b * a);
                prop_assert_eq!((a - b) + b, a);
            }

            #[test]
            fn reduction_is_canonical(n in -10_000i128..10_000, d in 1i128..10_000, k in 1i128..1000) {
                let x = r(n * k, d * k);
                prop_assert_eq!(x, r(n, d));
                prop_assert_eq!(Rational::new(x.numer(), x.denom()).unwrap(), x);
                prop_assert!(x.denom() > 0);
            }

            #[test]
            fn normalization_is_idempotent(a in rational(), c in rational(), m in radicand()) {
                let v = ExtendedValue::new(a, c, m).unwrap();
                prop_assert_eq!(v.normalized().unwrap(), v);
                prop_assert!(v.radicand() == 1 || is_squarefree(v.radicand()));
                prop_assert!((v.to_f64() - (a.to_f64() + c.to_f64() * (m as f64).sqrt())).abs() < 1e-6);
            }

            #[test]
            fn comparison_matches_bigint_oracle(a in rational(), c in rational(), m in radicand(), t in rational()) {
                let v = ExtendedValue::new(a, c, m).unwrap();
                prop_assert_eq!(compare_extended(&v, t), oracle(a, c, m, t));
            }

            #[test]
            fn comparison_near_ties(c in 1i128..3000, m in radicand(), delta in -2i128..=2, p in 1i128..3000) {
                // Rational approximations of c sqrt(m) that sit just around it.
                let approx = (BigInt::from(c * c * i128::from(m)) * BigInt::from(p * p)).sqrt();
                let approx: i128 = i128::try_from(approx).unwrap() + delta;
                let t = r(approx, p);
                let v = ExtendedValue::new(Rational::ZERO, Rational::integer(c), m).unwrap();
                prop_assert_eq!(compare_extended(&v, t), oracle(Rational::ZERO, Rational::integer(c), m, t));
            }
        }
    }
}
