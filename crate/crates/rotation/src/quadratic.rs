use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::RotationError;

/// The real number `(p + q·√d)/r` with arbitrary-precision integer parts.
///
/// Canonical form: `r > 0`, `gcd(p, q, r) = 1`, `d` square-free, and `d = 1`
/// exactly when `q = 0` (so the value is irrational iff `q != 0`). Ordering
/// and arithmetic are exact; every comparison reduces to integer sign tests.
///
/// Sums and differences require both operands to live in the same radical
/// field: mixing two irrational values with different `d` panics, which marks
/// a programming error rather than a data error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticReal {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: u64,
}

fn square_free(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut x = d;
    let mut i = 2u64;
    while i.checked_mul(i).is_some_and(|sq| sq <= x) {
        if x.is_multiple_of(i) {
            x /= i;
            if x.is_multiple_of(i) {
                return false;
            }
        }
        i += 1;
    }
    true
}

impl QuadraticReal {
    pub fn new(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        r: impl Into<BigInt>,
        d: u64,
    ) -> Result<Self, RotationError> {
        let (p, q, r) = (p.into(), q.into(), r.into());
        if r.is_zero() {
            return Err(RotationError::ZeroDenominator);
        }
        if !square_free(d) {
            return Err(RotationError::NotSquareFree(d));
        }
        Ok(Self::canonical(p, q, r, d))
    }

    fn canonical(mut p: BigInt, mut q: BigInt, mut r: BigInt, mut d: u64) -> Self {
        if d == 1 {
            // √1 is rational; fold it away
            p += &q;
            q = BigInt::zero();
        }
        if q.is_zero() {
            d = 1;
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_zero() && g != BigInt::from(1) {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        QuadraticReal { p, q, r, d }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::canonical(n.into(), BigInt::zero(), BigInt::from(1), 1)
    }

    pub fn from_ratio(
        num: impl Into<BigInt>,
        den: impl Into<BigInt>,
    ) -> Result<Self, RotationError> {
        let den = den.into();
        if den.is_zero() {
            return Err(RotationError::ZeroDenominator);
        }
        Ok(Self::canonical(num.into(), BigInt::zero(), den, 1))
    }

    /// `(√5 - 1)/2`, the golden rotation angle.
    pub fn golden() -> Self {
        Self::new(-1, 1, 2, 5).expect("golden parameters are valid")
    }

    /// `√2 - 1`.
    pub fn sqrt2_minus_one() -> Self {
        Self::new(-1, 1, 1, 2).expect("parameters are valid")
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero_value(&self) -> bool {
        self.q.is_zero() && self.p.is_zero()
    }

    /// Canonical parts `(p, q, r, d)`.
    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt, u64) {
        (&self.p, &self.q, &self.r, self.d)
    }

    fn common_d(&self, other: &Self) -> u64 {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => 1,
            (true, false) => other.d,
            (false, true) => self.d,
            (false, false) => {
                assert_eq!(
                    self.d, other.d,
                    "arithmetic across different radical fields (√{} vs √{})",
                    self.d, other.d
                );
                self.d
            }
        }
    }

    /// Sign of `p + q√d` for `d` square-free, decided by integer arithmetic.
    fn sign_parts(p: &BigInt, q: &BigInt, d: u64) -> Ordering {
        match (p.sign(), q.sign()) {
            (_, num_bigint::Sign::NoSign) => p.cmp(&BigInt::zero()),
            (num_bigint::Sign::NoSign, _) => q.cmp(&BigInt::zero()),
            (num_bigint::Sign::Plus, num_bigint::Sign::Plus) => Ordering::Greater,
            (num_bigint::Sign::Minus, num_bigint::Sign::Minus) => Ordering::Less,
            (num_bigint::Sign::Plus, num_bigint::Sign::Minus) => {
                // p > 0 > q: sign of p² - q²d
                (p * p).cmp(&(q * q * d))
            }
            (num_bigint::Sign::Minus, num_bigint::Sign::Plus) => {
                // q > 0 > p: sign of q²d - p²
                (q * q * d).cmp(&(p * p))
            }
        }
    }

    pub fn signum(&self) -> Ordering {
        Self::sign_parts(&self.p, &self.q, self.d)
    }

    /// Exact comparison; panics when both operands are irrational over
    /// different radicands.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let d = self.common_d(other);
        let p = &self.p * &other.r - &other.p * &self.r;
        let q = &self.q * &other.r - &other.q * &self.r;
        Self::sign_parts(&p, &q, d)
    }

    pub fn mul_int(&self, n: impl Into<BigInt>) -> Self {
        let n = n.into();
        Self::canonical(&self.p * &n, &self.q * &n, self.r.clone(), self.d)
    }

    pub fn mul_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self, RotationError> {
        if den.is_zero() {
            return Err(RotationError::ZeroDenominator);
        }
        Ok(Self::canonical(
            &self.p * num,
            &self.q * num,
            &self.r * den,
            self.d,
        ))
    }

    /// Exact integer floor.
    pub fn floor(&self) -> BigInt {
        if self.q.is_zero() {
            return self.p.div_floor(&self.r);
        }
        // floor(q√d) from the integer square root of q²d
        let s = &self.q * &self.q * self.d;
        let t = s.sqrt();
        let radical_floor = if self.q.is_positive() {
            t
        } else if &t * &t == s {
            -t
        } else {
            -t - 1
        };
        let mut n = (&self.p + radical_floor).div_floor(&self.r);
        // adjust in case the rational floor estimate straddles the radical
        while self.cmp_int(&(&n + 1)) != Ordering::Less {
            n += 1;
        }
        while self.cmp_int(&n) == Ordering::Less {
            n -= 1;
        }
        n
    }

    fn cmp_int(&self, n: &BigInt) -> Ordering {
        Self::sign_parts(&(&self.p - n * &self.r), &self.q, self.d)
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract(&self) -> Self {
        self - &Self::from_integer(self.floor())
    }

    /// Approximate value for display and statistics only; no comparison in
    /// the library goes through this.
    pub fn to_f64(&self) -> f64 {
        let p = approx_big(&self.p);
        let q = approx_big(&self.q);
        let r = approx_big(&self.r);
        (p + q * (self.d as f64).sqrt()) / r
    }
}

fn approx_big(x: &BigInt) -> f64 {
    // BigInt -> f64 with saturation; values in this crate stay tiny
    let s = x.to_string();
    s.parse::<f64>()
        .unwrap_or(if x.is_negative() { f64::MIN } else { f64::MAX })
}

impl PartialOrd for QuadraticReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if !self.is_rational() && !other.is_rational() && self.d != other.d {
            return None;
        }
        Some(self.cmp_exact(other))
    }
}

impl Add for &QuadraticReal {
    type Output = QuadraticReal;
    fn add(self, other: &QuadraticReal) -> QuadraticReal {
        let d = self.common_d(other);
        QuadraticReal::canonical(
            &self.p * &other.r + &other.p * &self.r,
            &self.q * &other.r + &other.q * &self.r,
            &self.r * &other.r,
            d,
        )
    }
}

impl Sub for &QuadraticReal {
    type Output = QuadraticReal;
    fn sub(self, other: &QuadraticReal) -> QuadraticReal {
        self + &(-other)
    }
}

impl Neg for &QuadraticReal {
    type Output = QuadraticReal;
    fn neg(self) -> QuadraticReal {
        QuadraticReal::canonical(-&self.p, -&self.q, self.r.clone(), self.d)
    }
}

impl fmt::Display for QuadraticReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            if self.r == BigInt::from(1) {
                write!(f, "{}", self.p)
            } else {
                write!(f, "{}/{}", self.p, self.r)
            }
        } else if self.r == BigInt::from(1) {
            write!(f, "{} + {}√{}", self.p, self.q, self.d)
        } else {
            write!(f, "({} + {}√{})/{}", self.p, self.q, self.d, self.r)
        }
    }
}
