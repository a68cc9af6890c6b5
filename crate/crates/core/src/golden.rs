//! Exact arithmetic in the ring `Z[phi]`, where `phi = (1 + sqrt 5) / 2`.
//!
//! Every element is stored as a pair `(a, b)` standing for `a*phi + b`.
//! Products are reduced with `phi^2 = phi + 1`, and ordering is decided with
//! integer arithmetic only, so potentials that sit exactly on a threshold
//! compare as equal instead of drifting through floating point.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldenError {
    #[error("integer overflow in Z[phi] arithmetic")]
    Overflow,
    #[error("cannot parse golden number from {0:?}")]
    Parse(String),
}

/// The real number `a*phi + b`.
///
/// Since `phi` is irrational the representation is unique, so the derived
/// `Eq`/`Hash` coincide with equality of the represented reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GoldenNumber {
    pub a: i64,
    pub b: i64,
}

impl GoldenNumber {
    pub const ZERO: GoldenNumber = GoldenNumber { a: 0, b: 0 };
    pub const ONE: GoldenNumber = GoldenNumber { a: 0, b: 1 };
    pub const PHI: GoldenNumber = GoldenNumber { a: 1, b: 0 };
    /// `phi^2 = phi + 1`
    pub const PHI_SQ: GoldenNumber = GoldenNumber { a: 1, b: 1 };
    /// `phi^3 = 2*phi + 1`
    pub const PHI_CUBED: GoldenNumber = GoldenNumber { a: 2, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenNumber { a, b }
    }

    pub const fn int(b: i64) -> Self {
        GoldenNumber { a: 0, b }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self, GoldenError> {
        Ok(GoldenNumber {
            a: self.a.checked_add(rhs.a).ok_or(GoldenError::Overflow)?,
            b: self.b.checked_add(rhs.b).ok_or(GoldenError::Overflow)?,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self, GoldenError> {
        Ok(GoldenNumber {
            a: self.a.checked_sub(rhs.a).ok_or(GoldenError::Overflow)?,
            b: self.b.checked_sub(rhs.b).ok_or(GoldenError::Overflow)?,
        })
    }

    /// `(a phi + b)(c phi + d) = (ac + ad + bc) phi + (ac + bd)`.
    pub fn checked_mul(self, rhs: Self) -> Result<Self, GoldenError> {
        let ac = self.a.checked_mul(rhs.a).ok_or(GoldenError::Overflow)?;
        let ad = self.a.checked_mul(rhs.b).ok_or(GoldenError::Overflow)?;
        let bc = self.b.checked_mul(rhs.a).ok_or(GoldenError::Overflow)?;
        let bd = self.b.checked_mul(rhs.b).ok_or(GoldenError::Overflow)?;
        let a = ac
            .checked_add(ad)
            .and_then(|x| x.checked_add(bc))
            .ok_or(GoldenError::Overflow)?;
        let b = ac.checked_add(bd).ok_or(GoldenError::Overflow)?;
        Ok(GoldenNumber { a, b })
    }

    pub fn checked_scale(self, k: i64) -> Result<Self, GoldenError> {
        self.checked_mul(GoldenNumber::int(k))
    }

    /// Sign of `a*phi + b` as -1, 0 or 1.
    ///
    /// `a*phi + b = (a*sqrt5 + (a + 2b)) / 2`, so the sign follows from the
    /// signs of `a` and `c = a + 2b` and, when they disagree, from comparing
    /// `5a^2` against `c^2`.
    pub fn signum(self) -> i32 {
        let a = self.a as i128;
        let c = a + 2 * self.b as i128;
        match (a.signum(), c.signum()) {
            (0, s) | (s, 0) => s as i32,
            (sa, sc) if sa == sc => sa as i32,
            (sa, _) => {
                // sqrt5 term and rational term have opposite signs
                match (5 * a * a).cmp(&(c * c)) {
                    Ordering::Greater => sa as i32,
                    Ordering::Less => -sa as i32,
                    // 5a^2 = c^2 with a != 0 would make sqrt5 rational
                    Ordering::Equal => unreachable!("sqrt 5 is irrational"),
                }
            }
        }
    }

    /// Smallest integer `>= a*phi + b`.
    pub fn ceil(self) -> i64 {
        -(-self).floor()
    }

    /// Largest integer `<= a*phi + b`.
    pub fn floor(self) -> i64 {
        if self.a == 0 {
            return self.b;
        }
        // a*phi = (a + sqrt(5a^2)) / 2 for a > 0; sqrt(5a^2) lies strictly
        // between s = isqrt(5a^2) and s + 1.
        let a = self.a as i128;
        let s = (5 * a * a).isqrt();
        let fl = if a > 0 {
            // a*phi in ((a+s)/2, (a+s+1)/2)
            (a + s).div_euclid(2)
        } else {
            // a*phi = (a - sqrt(5a^2)) / 2 in ((a-s-1)/2, (a-s)/2)
            (a - s - 1).div_euclid(2)
        };
        (fl + self.b as i128) as i64
    }

    pub fn to_f64(self) -> f64 {
        const PHI: f64 = 1.618_033_988_749_895;
        self.a as f64 * PHI + self.b as f64
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        let da = self.a as i128 - other.a as i128;
        let db = self.b as i128 - other.b as i128;
        let c = da + 2 * db;
        let sign = match (da.signum(), c.signum()) {
            (0, s) | (s, 0) => s,
            (sa, sc) if sa == sc => sa,
            (sa, _) => {
                if 5 * da * da > c * c {
                    sa
                } else {
                    -sa
                }
            }
        };
        sign.cmp(&0)
    }
}

impl Add for GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("golden number overflow in add")
    }
}

impl Sub for GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("golden number overflow in sub")
    }
}

impl Mul for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("golden number overflow in mul")
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> Self {
        GoldenNumber::ZERO - self
    }
}

impl Sum for GoldenNumber {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GoldenNumber::ZERO, |acc, x| acc + x)
    }
}

impl From<i64> for GoldenNumber {
    fn from(b: i64) -> Self {
        GoldenNumber::int(b)
    }
}

/// Renders as `a*phi+b`, e.g. `2*phi-3`.
impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 0 {
            write!(f, "{}*phi-{}", self.a, self.b.unsigned_abs())
        } else {
            write!(f, "{}*phi+{}", self.a, self.b)
        }
    }
}

impl FromStr for GoldenNumber {
    type Err = GoldenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GoldenError::Parse(s.to_string());
        let t = s.trim();
        let (a, rest) = t.split_once("*phi").ok_or_else(err)?;
        let a: i64 = a.trim().parse().map_err(|_| err())?;
        let rest = rest.trim();
        let b = if let Some(r) = rest.strip_prefix('+') {
            r.trim().parse::<i64>().map_err(|_| err())?
        } else if let Some(r) = rest.strip_prefix('-') {
            -r.trim().parse::<i64>().map_err(|_| err())?
        } else if rest.is_empty() {
            0
        } else {
            return Err(err());
        };
        Ok(GoldenNumber { a, b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PHI_F: f64 = 1.618_033_988_749_895;

    fn g(a: i64, b: i64) -> GoldenNumber {
        GoldenNumber::new(a, b)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(g(1, 0) + g(0, 1), g(1, 1));
        assert_eq!(g(1, 0) + g(1, 0), g(2, 0));
        assert_eq!(g(2, -3) + g(-2, 3), g(0, 0));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(g(1, 0) * g(1, 0), g(1, 1));
        assert_eq!(g(1, 0) * g(1, 1), g(2, 1));
        assert_eq!(g(0, 3) * g(1, -2), g(3, -6));
        let phi = GoldenNumber::PHI;
        assert_eq!(phi * phi * phi, GoldenNumber::PHI_CUBED);
    }

    #[test]
    fn compare_examples() {
        assert_eq!(g(1, 0).cmp(&g(0, 2)), Ordering::Less);
        assert_eq!(g(2, 0).cmp(&g(0, 3)), Ordering::Greater);
        assert_eq!(g(5, -7).cmp(&g(5, -7)), Ordering::Equal);
        assert_eq!(g(-1, 2).signum(), 1);
        assert_eq!(g(-1, 1).signum(), -1);
    }

    #[test]
    fn ceil_examples() {
        assert_eq!(g(1, 3).ceil(), 5);
        assert_eq!(g(2, 4).ceil(), 8);
        assert_eq!(g(0, 7).ceil(), 7);
        assert_eq!(g(-1, 0).ceil(), -1);
        assert_eq!(g(-1, 0).floor(), -2);
        assert_eq!(g(1, 4).ceil(), 6);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(g(i64::MAX, 0).checked_add(g(1, 0)), Err(GoldenError::Overflow));
        assert_eq!(g(1 << 40, 0).checked_mul(g(1 << 40, 0)), Err(GoldenError::Overflow));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn operator_overflow_panics() {
        let _ = g(0, i64::MAX) + g(0, 1);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(g(2, -3).to_string(), "2*phi-3");
        assert_eq!(g(1, 1).to_string(), "1*phi+1");
        assert_eq!("2*phi-3".parse::<GoldenNumber>().unwrap(), g(2, -3));
        assert_eq!("-4*phi+0".parse::<GoldenNumber>().unwrap(), g(-4, 0));
        assert!("phi".parse::<GoldenNumber>().is_err());
    }

    #[test]
    fn compare_agrees_with_floats_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let bound = 1_000_000;
        let mut checked = 0;
        for _ in 0..1_000_000 {
            let x = g(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
            let y = g(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
            let fx = x.a as f64 * PHI_F + x.b as f64;
            let fy = y.a as f64 * PHI_F + y.b as f64;
            if (fx - fy).abs() > 1e-6 {
                checked += 1;
                assert_eq!(x.cmp(&y), fx.partial_cmp(&fy).unwrap(), "{x} vs {y}");
            }
        }
        assert!(checked > 900_000);
    }

    #[test]
    fn ceil_brackets_value_on_random_inputs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..1_000_000 {
            let x = g(rng.gen_range(-1_000_000..=1_000_000), rng.gen_range(-1_000_000..=1_000_000));
            let c = x.ceil();
            assert!(GoldenNumber::int(c - 1) < x && x <= GoldenNumber::int(c), "{x} -> {c}");
        }
    }

    proptest::proptest! {
        #[test]
        fn ring_laws(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000,
                     d in -1000i64..1000, e in -1000i64..1000, f in -1000i64..1000) {
            let (x, y, z) = (g(a, b), g(c, d), g(e, f));
            proptest::prop_assert_eq!(x + y, y + x);
            proptest::prop_assert_eq!(x * y, y * x);
            proptest::prop_assert_eq!((x + y) + z, x + (y + z));
            proptest::prop_assert_eq!((x * y) * z, x * (y * z));
            proptest::prop_assert_eq!(x * (y + z), x * y + x * z);
        }

        #[test]
        fn display_round_trips(a in any_i32(), b in any_i32()) {
            let x = g(a as i64, b as i64);
            proptest::prop_assert_eq!(x.to_string().parse::<GoldenNumber>().unwrap(), x);
        }
    }

    fn any_i32() -> impl proptest::strategy::Strategy<Value = i32> {
        proptest::num::i32::ANY
    }
}
