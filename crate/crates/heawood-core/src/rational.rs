//! Exact rational numbers for orbit-counting arguments.
//!
//! Burnside quotients are carried as reduced integer pairs; whether a count
//! is an integer is part of what gets certified, so floating point is never
//! involved.

use std::fmt;
use std::ops::Add;

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a.abs()
}

/// A rational number kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational {
    numer: i64,
    denom: i64,
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        let sign = denom.signum();
        let g = gcd(numer, denom).max(1);
        Rational {
            numer: sign * numer / g,
            denom: sign * denom / g,
        }
    }

    pub fn zero() -> Self {
        Rational { numer: 0, denom: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational { numer: n, denom: 1 }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::new(
            self.numer * rhs.denom + rhs.numer * self.denom,
            self.denom * rhs.denom,
        )
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Rational::new(30, 12);
        assert_eq!((r.numer(), r.denom()), (5, 2));
        assert_eq!(r, Rational::new(5, 2));
        assert!(!r.is_integer());
    }

    #[test]
    fn integers_are_detected() {
        assert!(Rational::new(28, 14).is_integer());
        assert_eq!(Rational::new(28, 14), Rational::from(2));
    }

    #[test]
    fn negative_denominator_is_normalized() {
        let r = Rational::new(1, -2);
        assert_eq!((r.numer(), r.denom()), (-1, 2));
    }

    #[test]
    fn addition_is_exact() {
        let sum = Rational::new(1, 3) + Rational::new(1, 6);
        assert_eq!(sum, Rational::new(1, 2));
    }

    #[test]
    fn display_format() {
        assert_eq!(Rational::new(30, 12).to_string(), "5/2");
        assert_eq!(Rational::from(14).to_string(), "14");
    }
}
