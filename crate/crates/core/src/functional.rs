//! Linear functionals on the root span, given by values on a basis.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::root::{Ambient, Root};
use crate::scalar::{qi, Q};

/// A linear functional fixed by rational values on linearly independent
/// roots. Values are well defined on the span of the basis only.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFunctional {
    ambient: Ambient,
    basis: Vec<Root>,
    values: Vec<Q>,
    /// Some extension to the whole extended coordinate space.
    covector: Vec<Q>,
}

impl LinearFunctional {
    pub fn new(basis: Vec<Root>, values: Vec<Q>) -> Result<Self> {
        let ambient = basis
            .first()
            .map(Root::ambient)
            .ok_or_else(|| Error::DegenerateFunctional("empty basis".into()))?;
        if basis.len() != values.len() {
            return Err(Error::DegenerateFunctional(format!(
                "{} basis roots but {} values",
                basis.len(),
                values.len()
            )));
        }
        for b in &basis {
            if b.ambient() != ambient {
                return Err(Error::BasisMismatch {
                    left: ambient,
                    right: b.ambient(),
                });
            }
        }
        let rows: Vec<Vec<Q>> = basis.iter().map(Root::extended_coords).collect();
        if linalg::rank(&rows) != rows.len() {
            return Err(Error::DegenerateFunctional("basis is linearly dependent".into()));
        }
        let covector = linalg::solve_dual(&rows, &values)
            .ok_or_else(|| Error::DegenerateFunctional("inconsistent values".into()))?;
        Ok(LinearFunctional {
            ambient,
            basis,
            values,
            covector,
        })
    }

    /// The functional with the given values on the ambient basis vectors,
    /// on `δ` and on `σ`.
    pub fn on_ambient(ambient: Ambient, finite: &[Q], delta: Q, sigma: Q) -> Result<Self> {
        if finite.len() != ambient.dim() {
            return Err(Error::DegenerateFunctional(format!(
                "{} values for {} basis vectors",
                finite.len(),
                ambient.dim()
            )));
        }
        let mut basis: Vec<Root> = (0..ambient.dim()).map(|i| Root::basis(ambient, i)).collect();
        basis.push(Root::delta_multiple(ambient, 1));
        basis.push(Root::zero(ambient).with_sigma(1));
        let mut values = finite.to_vec();
        values.push(delta);
        values.push(sigma);
        LinearFunctional::new(basis, values)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn basis(&self) -> &[Root] {
        &self.basis
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    /// Value at `r`, assuming `r` lies in the span of the basis.
    pub fn value(&self, r: &Root) -> Q {
        r.extended_coords()
            .iter()
            .zip(&self.covector)
            .map(|(a, b)| *a * *b)
            .fold(Q::zero(), |acc, x| acc + x)
    }

    /// Value at `r`, checking that `r` lies in the span.
    pub fn try_value(&self, r: &Root) -> Result<Q> {
        let rows: Vec<Vec<Q>> = self.basis.iter().map(Root::extended_coords).collect();
        let x = linalg::solve(&rows, &r.extended_coords())
            .ok_or_else(|| Error::DegenerateFunctional(format!("{r} is outside the span of the basis")))?;
        Ok(x.iter()
            .zip(&self.values)
            .map(|(a, b)| *a * *b)
            .fold(Q::zero(), |acc, v| acc + v))
    }

    /// `ζ(δ)`, which must be in the span.
    pub fn delta_value(&self) -> Result<Q> {
        self.try_value(&Root::delta_multiple(self.ambient, 1))
    }

    /// The same functional with `values[i]` replaced by `-values[i]`.
    pub fn with_flipped(&self, i: usize) -> Result<Self> {
        let mut values = self.values.clone();
        values[i] = -values[i];
        LinearFunctional::new(self.basis.clone(), values)
    }

    /// The functional scaled by an integer.
    pub fn scaled(&self, c: i64) -> Result<Self> {
        let values = self.values.iter().map(|v| *v * qi(c)).collect();
        LinearFunctional::new(self.basis.clone(), values)
    }
}
