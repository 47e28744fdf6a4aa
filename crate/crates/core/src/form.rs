//! The symmetric bilinear form on root space, one Gram table per ambient.
//!
//! `δ` and `σ` pair to zero with everything.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::root::{Ambient, Root};
use crate::scalar::{qi, LambdaMode, Scalar, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormTable {
    ambient: Ambient,
    mode: LambdaMode,
    gram: Vec<Vec<Scalar>>,
}

impl FormTable {
    /// The Gram table of `ambient`.
    ///
    /// `ε̇` blocks are Euclidean and `δ̇` blocks negative definite. The
    /// F(4) and G(3) normalizations enter as squared lengths 3 and −2.
    pub fn for_ambient(ambient: Ambient, mode: LambdaMode) -> Self {
        let diag: Vec<Scalar> = match ambient {
            Ambient::EpsDelta { m, n } => std::iter::repeat_n(Scalar::int(1), m)
                .chain(std::iter::repeat_n(Scalar::int(-1), n))
                .collect(),
            Ambient::Gamma => vec![Scalar::lambda_symbol(), Scalar::new(qi(-1), qi(-1)), Scalar::int(1)],
            Ambient::F4 => vec![Scalar::int(3), Scalar::int(-1), Scalar::int(-1), Scalar::int(-1)],
            Ambient::G3 => vec![Scalar::int(-2), Scalar::int(1), Scalar::int(1), Scalar::int(1)],
        };
        let d = diag.len();
        let gram = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i == j {
                            diag[i].specialize(mode)
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        FormTable { ambient, mode, gram }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn lambda_mode(&self) -> LambdaMode {
        self.mode
    }

    pub fn gram(&self) -> &[Vec<Scalar>] {
        &self.gram
    }

    /// `(u, v)`.
    pub fn pair(&self, u: &Root, v: &Root) -> Result<Scalar> {
        for r in [u, v] {
            if r.ambient() != self.ambient {
                return Err(Error::BasisMismatch {
                    left: self.ambient,
                    right: r.ambient(),
                });
            }
        }
        let mut acc = Scalar::zero();
        for (i, a) in u.coords().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.coords().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc = acc + self.gram[i][j] * (*a * *b);
            }
        }
        Ok(acc)
    }

    /// `(u, u)`.
    pub fn norm(&self, u: &Root) -> Result<Scalar> {
        self.pair(u, u)
    }

    /// Gram matrix of a family of vectors evaluated at `λ = lambda`.
    pub fn gram_of(&self, family: &[Root], lambda: Q) -> Result<Vec<Vec<Q>>> {
        family
            .iter()
            .map(|u| family.iter().map(|v| Ok(self.pair(u, v)?.eval(lambda))).collect())
            .collect()
    }
}

/// `(u, v)` under `form`.
pub fn form_eval(u: &Root, v: &Root, form: &FormTable) -> Result<Scalar> {
    form.pair(u, v)
}

/// `⟨β, α⟩ = 2(β, α)/(α, α)`, required to be an integer constant.
pub fn cartan_integer(beta: &Root, alpha: &Root, form: &FormTable) -> Result<i64> {
    let aa = form.norm(alpha)?;
    if !aa.is_nonzero()? {
        return Err(Error::IsotropicReflection(alpha.to_string()));
    }
    let num = form.pair(beta, alpha)? * qi(2);
    let quotient = num
        .checked_div(&aa)
        .map_err(|_| Error::AxiomViolation(format!("<{beta}, {alpha}> = ({num})/({aa}) depends on lambda")))?;
    match quotient.as_rational() {
        Some(c) if c.is_integer() => Ok(c.to_integer()),
        _ => Err(Error::AxiomViolation(format!(
            "<{beta}, {alpha}> = {quotient} is not an integer"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_pairings() {
        let ed = Ambient::EpsDelta { m: 1, n: 1 };
        let f = FormTable::for_ambient(ed, LambdaMode::Symbolic);
        let e1 = Root::parse(ed, "e1").unwrap();
        assert_eq!(form_eval(&e1, &e1, &f).unwrap(), Scalar::int(1));
        let delta = Root::delta_multiple(ed, 1);
        let odd = Root::parse(ed, "e1-d1").unwrap();
        assert_eq!(form_eval(&delta, &odd, &f).unwrap(), Scalar::zero());

        let g = FormTable::for_ambient(Ambient::Gamma, LambdaMode::Symbolic);
        let g2 = Root::parse(Ambient::Gamma, "g2").unwrap();
        assert_eq!(g.norm(&g2).unwrap(), Scalar::new(qi(-1), qi(-1)));
    }

    #[test]
    fn cartan_integer_examples() {
        let a10 = Ambient::EpsDelta { m: 2, n: 1 };
        let f = FormTable::for_ambient(a10, LambdaMode::Symbolic);
        let beta = Root::parse(a10, "e1-d1").unwrap();
        let alpha = Root::parse(a10, "e1-e2").unwrap();
        assert_eq!(cartan_integer(&beta, &alpha, &f).unwrap(), 1);
        assert_eq!(cartan_integer(&alpha, &alpha, &f).unwrap(), 2);

        let g = FormTable::for_ambient(Ambient::Gamma, LambdaMode::Symbolic);
        let iso = Root::parse(Ambient::Gamma, "g1+g2+g3").unwrap();
        let two_g1 = Root::parse(Ambient::Gamma, "2g1").unwrap();
        assert!(matches!(
            cartan_integer(&two_g1, &iso, &g),
            Err(Error::IsotropicReflection(_))
        ));
        assert_eq!(cartan_integer(&iso, &two_g1, &g).unwrap(), 1);
    }

    #[test]
    fn fixed_lambda_specializes_the_gram() {
        let g = FormTable::for_ambient(Ambient::Gamma, LambdaMode::Value(qi(2)));
        let g1 = Root::parse(Ambient::Gamma, "g1").unwrap();
        assert_eq!(g.norm(&g1).unwrap(), Scalar::int(2));
    }
}
