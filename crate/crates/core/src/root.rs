//! Root vectors: a finite part over an ambient basis plus integer `δ` and
//! `σ` multiplicities.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, qi, Q};

/// The ambient basis a finite part is written over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    /// `ε̇_1..ε̇_m, δ̇_1..δ̇_n` in that order.
    EpsDelta { m: usize, n: usize },
    /// `γ̇_1, γ̇_2, γ̇_3`.
    Gamma,
    /// `ε̇, δ̇_1, δ̇_2, δ̇_3` with `ε̇` of squared length 3.
    F4,
    /// `ν̇, ε̇_1, ε̇_2, ε̇_3` with `ν̇` of squared length −2.
    G3,
}

impl Ambient {
    pub fn dim(&self) -> usize {
        match *self {
            Ambient::EpsDelta { m, n } => m + n,
            Ambient::Gamma => 3,
            Ambient::F4 | Ambient::G3 => 4,
        }
    }

    /// ASCII symbol of basis vector `i`, used in JSON keys and parsing.
    pub fn symbol(&self, i: usize) -> String {
        match *self {
            Ambient::EpsDelta { m, .. } => {
                if i < m {
                    format!("e{}", i + 1)
                } else {
                    format!("d{}", i - m + 1)
                }
            }
            Ambient::Gamma => format!("g{}", i + 1),
            Ambient::F4 => {
                if i == 0 {
                    "e".to_string()
                } else {
                    format!("d{i}")
                }
            }
            Ambient::G3 => {
                if i == 0 {
                    "nu".to_string()
                } else {
                    format!("e{i}")
                }
            }
        }
    }

    pub fn symbols(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.symbol(i)).collect()
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.symbol(i) == symbol)
    }

    fn check(&self, other: &Ambient) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::EpsDelta { m, n } => write!(f, "eps{m}/delta{n}"),
            Ambient::Gamma => f.write_str("gamma"),
            Ambient::F4 => f.write_str("F4"),
            Ambient::G3 => f.write_str("G3"),
        }
    }
}

/// `finite part + sigma·σ + delta·δ`.
///
/// The derived order compares the finite coordinates lexicographically
/// first; canonical class representatives rely on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    ambient: Ambient,
    coords: Vec<Q>,
    delta: i64,
    sigma: i64,
}

impl Root {
    pub fn new(ambient: Ambient, coords: Vec<Q>, delta: i64, sigma: i64) -> Self {
        assert_eq!(coords.len(), ambient.dim(), "coordinate count must match the ambient");
        Root {
            ambient,
            coords,
            delta,
            sigma,
        }
    }

    /// Finite root from integer coordinates.
    pub fn from_ints(ambient: Ambient, coords: &[i64]) -> Self {
        Root::new(ambient, coords.iter().map(|&c| qi(c)).collect(), 0, 0)
    }

    pub fn zero(ambient: Ambient) -> Self {
        Root::new(ambient, vec![Q::zero(); ambient.dim()], 0, 0)
    }

    /// The basis vector `i` of the ambient.
    pub fn basis(ambient: Ambient, i: usize) -> Self {
        let mut r = Root::zero(ambient);
        r.coords[i] = Q::one();
        r
    }

    /// `k·δ`.
    pub fn delta_multiple(ambient: Ambient, k: i64) -> Self {
        Root::zero(ambient).with_delta(k)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    pub fn with_delta(mut self, k: i64) -> Self {
        self.delta = k;
        self
    }

    pub fn with_sigma(mut self, s: i64) -> Self {
        self.sigma = s;
        self
    }

    /// Same finite part, `δ`-multiplicity shifted by `k`.
    pub fn shifted(&self, k: i64) -> Self {
        self.clone().with_delta(self.delta + k)
    }

    /// Finite part with `δ` and `σ` dropped.
    pub fn finite(&self) -> Root {
        Root::new(self.ambient, self.coords.clone(), 0, 0)
    }

    /// Finite part together with `σ`: the "layer" of an affine root.
    pub fn layer(&self) -> Root {
        Root::new(self.ambient, self.coords.clone(), 0, self.sigma)
    }

    pub fn is_zero(&self) -> bool {
        self.delta == 0 && self.sigma == 0 && self.finite_is_zero()
    }

    pub fn finite_is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: i64) -> Root {
        Root::new(
            self.ambient,
            self.coords.iter().map(|x| *x * qi(c)).collect(),
            self.delta * c,
            self.sigma * c,
        )
    }

    /// Rational scaling of the finite part; `δ` and `σ` must stay integral.
    pub fn scale_rational(&self, c: Q) -> Option<Root> {
        let d = qi(self.delta) * c;
        let s = qi(self.sigma) * c;
        if !d.is_integer() || !s.is_integer() {
            return None;
        }
        Some(Root::new(
            self.ambient,
            self.coords.iter().map(|x| *x * c).collect(),
            d.to_integer(),
            s.to_integer(),
        ))
    }

    pub fn try_add(&self, other: &Root) -> Result<Root> {
        self.ambient.check(&other.ambient)?;
        Ok(self.add_unchecked(other))
    }

    fn add_unchecked(&self, other: &Root) -> Root {
        Root {
            ambient: self.ambient,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| *a + *b).collect(),
            delta: self.delta + other.delta,
            sigma: self.sigma + other.sigma,
        }
    }

    /// Coordinates with `δ` and `σ` appended, for linear algebra.
    pub fn extended_coords(&self) -> Vec<Q> {
        let mut v = self.coords.clone();
        v.push(qi(self.delta));
        v.push(qi(self.sigma));
        v
    }

    /// Inverse of [`Root::extended_coords`].
    pub fn from_extended(ambient: Ambient, v: &[Q]) -> Option<Root> {
        let d = ambient.dim();
        if v.len() != d + 2 || !v[d].is_integer() || !v[d + 1].is_integer() {
            return None;
        }
        Some(Root::new(
            ambient,
            v[..d].to_vec(),
            v[d].to_integer(),
            v[d + 1].to_integer(),
        ))
    }

    /// Parses expressions such as `e1-d1+sigma+3delta` or `1/2*e+1/2*d1`.
    pub fn parse(ambient: Ambient, text: &str) -> Result<Root> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty root expression".into()));
        }
        let mut root = Root::zero(ambient);
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let split = body.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(body.len());
            let (coef_text, symbol) = body.split_at(split);
            let coef_text = coef_text.trim_end_matches('*');
            let mut coef = if coef_text.is_empty() {
                Q::one()
            } else {
                parse_rational(coef_text)?
            };
            if negative {
                coef = -coef;
            }
            match symbol {
                "" => {
                    if !coef.is_zero() {
                        return Err(Error::Parse(format!("bare constant in {text:?}")));
                    }
                }
                "delta" | "sigma" => {
                    if !coef.is_integer() {
                        return Err(Error::Parse(format!("{symbol} needs an integer coefficient")));
                    }
                    if symbol == "delta" {
                        root.delta += coef.to_integer();
                    } else {
                        root.sigma += coef.to_integer();
                    }
                }
                s => {
                    let i = ambient
                        .index_of(s)
                        .ok_or_else(|| Error::Parse(format!("unknown symbol {s:?} for {ambient}")))?;
                    root.coords[i] += coef;
                }
            }
        }
        Ok(root)
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch");
        self.add_unchecked(rhs)
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        self + &(-rhs)
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root {
            ambient: self.ambient,
            coords: self.coords.iter().map(|x| -*x).collect(),
            delta: -self.delta,
            sigma: -self.sigma,
        }
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: &mut bool, c: Q, symbol: &str) -> fmt::Result {
    if c.is_zero() {
        return Ok(());
    }
    if c.is_negative() {
        f.write_str("-")?;
    } else if !*first {
        f.write_str("+")?;
    }
    *first = false;
    let a = c.abs();
    if a.is_integer() {
        if !a.is_one() {
            write!(f, "{a}")?;
        }
    } else {
        write!(f, "{a}*")?;
    }
    f.write_str(symbol)
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            write_term(f, &mut first, *c, &self.ambient.symbol(i))?;
        }
        write_term(f, &mut first, qi(self.sigma), "sigma")?;
        write_term(f, &mut first, qi(self.delta), "delta")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    const B11: Ambient = Ambient::EpsDelta { m: 1, n: 1 };

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["e1-d1", "2d1+5delta", "-e1+sigma-3delta", "0", "delta"] {
            let r = Root::parse(B11, text).unwrap();
            assert_eq!(Root::parse(B11, &r.to_string()).unwrap(), r);
        }
        let r = Root::parse(Ambient::F4, "1/2*e-1/2*d2").unwrap();
        assert_eq!(r.coords(), &[q(1, 2), qi(0), q(-1, 2), qi(0)]);
        assert_eq!(r.to_string(), "1/2*e-1/2*d2");
    }

    #[test]
    fn parse_rejects_foreign_symbols() {
        assert!(Root::parse(B11, "g1").is_err());
        assert!(Root::parse(B11, "1/2*delta").is_err());
    }

    #[test]
    fn order_is_lexicographic_in_coordinates() {
        let a = Root::from_ints(B11, &[-1, 0]);
        let b = Root::from_ints(B11, &[1, 0]);
        let c = Root::from_ints(B11, &[0, 5]);
        assert!(a < c && c < b);
    }

    #[test]
    fn mismatched_ambients_are_rejected() {
        let a = Root::zero(B11);
        let b = Root::zero(Ambient::Gamma);
        assert!(matches!(a.try_add(&b), Err(Error::BasisMismatch { .. })));
    }
}
