//! Exact numbers of the form `a + b·λ` with rational `a`, `b`.
//!
//! `λ` is the free parameter of `D(2,1;λ)`. It is never given a value in
//! symbolic mode; every quantity the crate needs is at most linear in it.
//! Nonzero tests use the standing assumption `λ ∉ {0, −1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational used everywhere in the crate.
pub type Q = Rational64;

/// Builds `n/d` as a reduced rational.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Builds the integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

/// Renders a rational as `"p/q"`, always with an explicit denominator.
pub fn rational_to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => s.parse::<i64>().map(Q::from_integer).map_err(|_| bad()),
    }
}

/// How `λ` is treated by a form table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum LambdaMode {
    /// `λ` stays a formal parameter.
    #[default]
    Symbolic,
    /// `λ` is fixed to an admissible rational.
    Value(Q),
}

impl LambdaMode {
    /// Fixes `λ` to `value`, rejecting the excluded points `0` and `−1`.
    pub fn value(value: Q) -> Result<Self> {
        if value.is_zero() || value == -Q::one() {
            return Err(Error::Parse(format!(
                "lambda = {} is excluded (must avoid 0 and -1)",
                rational_to_string(&value)
            )));
        }
        Ok(LambdaMode::Value(value))
    }

    /// Parses `symbolic` or a rational `p/q`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim() == "symbolic" {
            Ok(LambdaMode::Symbolic)
        } else {
            Self::value(parse_rational(s)?)
        }
    }

    /// Label used in JSON output.
    pub fn label(&self) -> String {
        match self {
            LambdaMode::Symbolic => "symbolic".to_string(),
            LambdaMode::Value(v) => rational_to_string(v),
        }
    }
}

/// The value `constant + lambda·λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    pub constant: Q,
    pub lambda: Q,
}

impl Scalar {
    pub const fn new(constant: Q, lambda: Q) -> Self {
        Scalar { constant, lambda }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn rational(c: Q) -> Self {
        Scalar::new(c, Q::zero())
    }

    pub fn int(c: i64) -> Self {
        Scalar::rational(qi(c))
    }

    /// The symbol `λ` itself.
    pub fn lambda_symbol() -> Self {
        Scalar::new(Q::zero(), Q::one())
    }

    /// Zero as a polynomial in `λ`.
    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.lambda.is_zero()
    }

    /// The constant value when no `λ` part is present.
    pub fn as_rational(&self) -> Option<Q> {
        self.lambda.is_zero().then_some(self.constant)
    }

    /// Substitutes a value for `λ`.
    pub fn eval(&self, lambda: Q) -> Q {
        self.constant + self.lambda * lambda
    }

    /// Nonzero test under `λ ∉ {0, −1}`.
    ///
    /// `a + bλ` with `b ≠ 0` vanishes only at `λ = −a/b`; that root must be
    /// one of the excluded points, otherwise the sign is ambiguous.
    pub fn is_nonzero(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        if self.lambda.is_zero() {
            return Ok(true);
        }
        let root = -self.constant / self.lambda;
        if root.is_zero() || root == -Q::one() {
            Ok(true)
        } else {
            Err(Error::AmbiguousSign(*self))
        }
    }

    /// Exact quotient, defined only when the result is again linear in `λ`.
    pub fn checked_div(&self, den: &Scalar) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if den.lambda.is_zero() {
            return Ok(Scalar::new(self.constant / den.constant, self.lambda / den.constant));
        }
        // den carries λ: only a rational multiple of den divides to a constant.
        let c = self.lambda / den.lambda;
        if self.constant == c * den.constant {
            Ok(Scalar::rational(c))
        } else {
            Err(Error::NonLinearQuotient { num: *self, den: *den })
        }
    }

    /// Applies a [`LambdaMode`]: symbolic leaves the value untouched.
    pub fn specialize(&self, mode: LambdaMode) -> Scalar {
        match mode {
            LambdaMode::Symbolic => *self,
            LambdaMode::Value(v) => Scalar::rational(self.eval(v)),
        }
    }
}

/// Free-function form of [`Scalar::checked_div`].
pub fn scalar_div(x: Scalar, y: Scalar) -> Result<Scalar> {
    x.checked_div(&y)
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.constant + rhs.constant, self.lambda + rhs.lambda)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.constant - rhs.constant, self.lambda - rhs.lambda)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.constant, -self.lambda)
    }
}

impl Mul<Q> for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Q) -> Scalar {
        Scalar::new(self.constant * rhs, self.lambda * rhs)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.constant;
        let l = self.lambda;
        if l.is_zero() {
            return write!(f, "{c}");
        }
        if !c.is_zero() {
            write!(f, "{c}")?;
            f.write_str(if l.is_negative() { "-" } else { "+" })?;
        } else if l.is_negative() {
            f.write_str("-")?;
        }
        let a = l.abs();
        if !a.is_one() {
            write!(f, "{a}")?;
        }
        f.write_str("λ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_examples() {
        let two_l = Scalar::new(qi(0), qi(2));
        let four_l = Scalar::new(qi(0), qi(4));
        assert_eq!(scalar_div(two_l, four_l).unwrap(), Scalar::rational(q(1, 2)));
        assert_eq!(scalar_div(Scalar::int(6), Scalar::int(3)).unwrap(), Scalar::int(2));
        let one_plus_l = Scalar::new(qi(1), qi(1));
        assert!(matches!(
            scalar_div(one_plus_l, Scalar::lambda_symbol()),
            Err(Error::NonLinearQuotient { .. })
        ));
        assert_eq!(scalar_div(Scalar::int(1), Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn nonzero_respects_excluded_points() {
        assert!(Scalar::lambda_symbol().is_nonzero().unwrap());
        assert!(Scalar::new(qi(-1), qi(-1)).is_nonzero().unwrap());
        assert!(Scalar::new(qi(1), qi(1)).is_nonzero().unwrap());
        assert!(!Scalar::zero().is_nonzero().unwrap());
        let half = Scalar::new(qi(1), qi(2));
        assert_eq!(half.is_nonzero(), Err(Error::AmbiguousSign(half)));
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(Scalar::new(qi(-1), qi(-1)).to_string(), "-1-λ");
        assert_eq!(Scalar::lambda_symbol().to_string(), "λ");
        assert_eq!(Scalar::new(q(1, 2), qi(3)).to_string(), "1/2+3λ");
        assert_eq!(Scalar::int(-4).to_string(), "-4");
    }

    #[test]
    fn lambda_guard() {
        assert!(LambdaMode::parse("0").is_err());
        assert!(LambdaMode::parse("-1/1").is_err());
        assert_eq!(LambdaMode::parse("2/3").unwrap(), LambdaMode::Value(q(2, 3)));
        assert_eq!(LambdaMode::parse("symbolic").unwrap(), LambdaMode::Symbolic);
    }
}
