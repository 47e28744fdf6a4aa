//! Untwisted affine root systems `Ṙ + ℤδ`, with the extra `σ` direction
//! of `A(n,n)⁽¹⁾`.
//!
//! A system is stored through its finite "layers": pairs `(β̇, s)` such
//! that `β̇ + sσ + kδ` is a root for every `k`. Membership, kind and
//! parity depend only on the layer, so the infinite set is never
//! materialized.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite::{build_finite_with, traceless, FiniteRootSet, FiniteTypeId, Parity, RootKind};
use crate::form::{cartan_integer, FormTable};
use crate::root::{Ambient, Root};
use crate::scalar::{qi, LambdaMode};

/// Affine types. `A { m, n }` is `A(m,n)⁽¹⁾` with `m+1` letters `ε̇` and
/// `n+1` letters `δ̇`; `C { n }` is `C(n)⁽¹⁾ = D(1, n−1)⁽¹⁾`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineTypeId {
    A { m: usize, n: usize },
    Ann { n: usize },
    B { m: usize, n: usize },
    C { n: usize },
    D { m: usize, n: usize },
    F4,
    G3,
    D21,
}

impl AffineTypeId {
    /// The finite type whose affinization this is.
    pub fn finite_type(&self) -> FiniteTypeId {
        match *self {
            AffineTypeId::A { m, n } => FiniteTypeId::A { m, n },
            AffineTypeId::Ann { n } => FiniteTypeId::Ann { n },
            AffineTypeId::B { m, n } => FiniteTypeId::B { m, n },
            AffineTypeId::C { n } => FiniteTypeId::D {
                m: 1,
                n: n.saturating_sub(1),
            },
            AffineTypeId::D { m, n } => FiniteTypeId::D { m, n },
            AffineTypeId::F4 => FiniteTypeId::F4,
            AffineTypeId::G3 => FiniteTypeId::G3,
            AffineTypeId::D21 => FiniteTypeId::D21,
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        match *self {
            AffineTypeId::A { m, n } | AffineTypeId::B { m, n } | AffineTypeId::D { m, n } => {
                vec![m, n]
            }
            AffineTypeId::Ann { n } => vec![n, n],
            AffineTypeId::C { n } => vec![n],
            _ => Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::Rank(format!("{self}: {why}")));
        match *self {
            AffineTypeId::C { n } if n < 2 => bad("n must be at least 2"),
            AffineTypeId::D { m, n } if m < 2 || n == 0 => bad("need m >= 2 and n >= 1"),
            _ => Ok(()),
        }
    }

    /// Parses `B,1,1`-style specs as well as display names like
    /// `B(1,1)^(1)`.
    pub fn parse(text: &str) -> Result<AffineTypeId> {
        let t = text.trim().trim_end_matches("^(1)");
        match t {
            "D21" | "D21L" | "D(2,1;λ)" | "D(2,1;lambda)" => return Ok(AffineTypeId::D21),
            "F4" | "F(4)" => return Ok(AffineTypeId::F4),
            "G3" | "G(3)" => return Ok(AffineTypeId::G3),
            _ => {}
        }
        let normalized = t.replace(['(', ')'], ",");
        let mut parts = normalized.split(',').map(str::trim).filter(|s| !s.is_empty());
        let family = parts.next().unwrap_or_default().to_string();
        let ranks: Vec<usize> = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad rank in {text:?}")))
            })
            .collect::<Result<_>>()?;
        let ty = match (family.as_str(), ranks.as_slice()) {
            ("A", &[m, n]) if m == n => AffineTypeId::Ann { n },
            ("A", &[m, n]) => AffineTypeId::A { m, n },
            ("B", &[m, n]) => AffineTypeId::B { m, n },
            ("C", &[n]) => AffineTypeId::C { n },
            ("D", &[1, n]) => AffineTypeId::C { n: n + 1 },
            ("D", &[m, n]) => AffineTypeId::D { m, n },
            _ => return Err(Error::UnknownType(text.to_string())),
        };
        ty.validate()?;
        Ok(ty)
    }
}

impl fmt::Display for AffineTypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AffineTypeId::C { n } => write!(f, "C({n})^(1)"),
            other => write!(f, "{}^(1)", other.finite_type()),
        }
    }
}

struct Layer {
    root: Root,
    parity: Parity,
    kind: RootKind,
}

struct Inner {
    type_id: AffineTypeId,
    finite: FiniteRootSet,
    layers: Vec<Layer>,
    index: HashMap<Root, usize>,
}

/// `Ṙ + ℤδ`, cheap to clone.
#[derive(Clone)]
pub struct AffineRootSystem {
    inner: Arc<Inner>,
}

impl fmt::Debug for AffineRootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineRootSystem({})", self.inner.type_id)
    }
}

impl PartialEq for AffineRootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.inner.type_id == other.inner.type_id && self.form().lambda_mode() == other.form().lambda_mode()
    }
}

/// Builds `type_id` with symbolic `λ`.
pub fn build_affine(type_id: AffineTypeId) -> Result<AffineRootSystem> {
    build_affine_with(type_id, LambdaMode::Symbolic)
}

pub fn build_affine_with(type_id: AffineTypeId, mode: LambdaMode) -> Result<AffineRootSystem> {
    type_id.validate()?;
    let finite = build_finite_with(type_id.finite_type(), mode)?;
    let ambient = finite.ambient();
    let mut raw: Vec<(Root, Parity)> = Vec::new();
    match type_id {
        AffineTypeId::Ann { n } => {
            let m = n + 1;
            for (r, p) in finite.entries() {
                if p == Parity::Even {
                    raw.push((r.clone(), p));
                }
            }
            // σ rides along ε̇_i − δ̇_j with +1 and δ̇_j − ε̇_i with −1. For
            // n = 1 distinct gl directions share a traceless image, so one
            // finite part can carry both signs.
            for i in 0..m {
                for j in 0..m {
                    let mut c = vec![qi(0); 2 * m];
                    c[i] = qi(1);
                    c[m + j] = qi(-1);
                    let odd = traceless(&Root::new(ambient, c, 0, 0), m);
                    raw.push((odd.clone().with_sigma(1), Parity::Odd));
                    raw.push(((-odd).with_sigma(-1), Parity::Odd));
                }
            }
        }
        _ => raw.extend(finite.entries().map(|(r, p)| (r.clone(), p))),
    }
    raw.sort();
    raw.dedup_by(|a, b| a.0 == b.0);

    let finite_parts: Vec<Root> = raw.iter().map(|(r, _)| r.finite()).collect();
    let form = finite.form();
    let mut layers = Vec::with_capacity(raw.len());
    for (root, parity) in raw {
        let kind = if root.finite_is_zero() {
            RootKind::Imaginary
        } else if form.norm(&root)?.is_nonzero()? {
            RootKind::Real
        } else {
            let mut kind = RootKind::Imaginary;
            for other in &finite_parts {
                if !form.pair(&root, other)?.is_zero() {
                    kind = RootKind::Nonsingular;
                    break;
                }
            }
            kind
        };
        layers.push(Layer { root, parity, kind });
    }
    let index = layers.iter().enumerate().map(|(i, l)| (l.root.clone(), i)).collect();
    Ok(AffineRootSystem {
        inner: Arc::new(Inner {
            type_id,
            finite,
            layers,
            index,
        }),
    })
}

impl AffineRootSystem {
    pub fn type_id(&self) -> AffineTypeId {
        self.inner.type_id
    }

    /// The finite root set `Ṙ`.
    pub fn finite_part(&self) -> &FiniteRootSet {
        &self.inner.finite
    }

    pub fn form(&self) -> &FormTable {
        self.inner.finite.form()
    }

    pub fn ambient(&self) -> Ambient {
        self.inner.finite.ambient()
    }

    /// Finite parts with `σ` (the layers), sorted.
    pub fn layers(&self) -> impl Iterator<Item = &Root> {
        self.inner.layers.iter().map(|l| &l.root)
    }

    fn layer_of(&self, root: &Root) -> Option<&Layer> {
        if root.ambient() != self.ambient() {
            return None;
        }
        self.inner.index.get(&root.layer()).map(|&i| &self.inner.layers[i])
    }

    /// `σ` values admissible with the finite part `finite`.
    pub fn sigma_rule(&self, finite: &Root) -> Vec<i64> {
        [-1, 0, 1]
            .into_iter()
            .filter(|s| self.contains(&finite.finite().with_sigma(*s)))
            .collect()
    }

    /// Exact membership.
    pub fn contains(&self, root: &Root) -> bool {
        self.layer_of(root).is_some()
    }

    pub fn classify(&self, root: &Root) -> Result<RootKind> {
        let layer = self.layer_of(root).ok_or_else(|| Error::NotARoot(root.to_string()))?;
        if root.is_zero() {
            Ok(RootKind::Zero)
        } else {
            Ok(layer.kind)
        }
    }

    pub fn parity(&self, root: &Root) -> Result<Parity> {
        self.layer_of(root)
            .map(|l| l.parity)
            .ok_or_else(|| Error::NotARoot(root.to_string()))
    }

    pub fn is_real(&self, root: &Root) -> bool {
        self.layer_of(root).is_some_and(|l| l.kind == RootKind::Real)
    }

    /// `r_α(β) = β − ⟨β, α⟩α`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        match self.classify(alpha)? {
            RootKind::Real => {}
            _ => return Err(Error::IsotropicReflection(alpha.to_string())),
        }
        let beta_kind = self.classify(beta)?;
        let k = cartan_integer(beta, alpha, self.form())?;
        let image = beta - &alpha.scale(k);
        if matches!(beta_kind, RootKind::Real | RootKind::Imaginary | RootKind::Zero) && !self.contains(&image) {
            return Err(Error::AxiomViolation(format!(
                "r_{alpha}({beta}) = {image} is not a root"
            )));
        }
        Ok(image)
    }

    /// All roots with `|k| ≤ window`, zero included, sorted.
    pub fn window(&self, window: i64) -> Vec<Root> {
        let mut out: Vec<Root> = self
            .inner
            .layers
            .iter()
            .flat_map(|l| (-window..=window).map(move |k| l.root.clone().with_delta(k)))
            .collect();
        out.sort();
        out
    }

    /// Real roots with `|k| ≤ window`.
    pub fn real_window(&self, window: i64) -> Vec<Root> {
        let mut out: Vec<Root> = self
            .inner
            .layers
            .iter()
            .filter(|l| l.kind == RootKind::Real)
            .flat_map(|l| (-window..=window).map(move |k| l.root.clone().with_delta(k)))
            .collect();
        out.sort();
        out
    }

    /// Real finite parts `β̇` (with `σ = 0`), sorted.
    pub fn real_layers(&self) -> Vec<Root> {
        self.inner
            .layers
            .iter()
            .filter(|l| l.kind == RootKind::Real)
            .map(|l| l.root.clone())
            .collect()
    }

    /// One representative per class `{±β̇}` of real finite parts: the
    /// lexicographically smaller of the two.
    pub fn real_classes(&self) -> Vec<Root> {
        let mut out: Vec<Root> = self.real_layers().into_iter().filter(|r| *r <= -r).collect();
        out.sort();
        out
    }

    /// The even roots of `Ṙ` as a finite set.
    pub fn even_finite(&self) -> FiniteRootSet {
        self.inner.finite.even_part()
    }

    /// Parses a root expression over this system's ambient.
    pub fn parse_root(&self, text: &str) -> Result<Root> {
        Root::parse(self.ambient(), text)
    }

    /// `k·δ` in this ambient.
    pub fn delta(&self, k: i64) -> Root {
        Root::delta_multiple(self.ambient(), k)
    }
}

/// Canonical representative of `{±β̇}` and the sign of `β̇` relative to it.
pub fn canonical_class(finite: &Root) -> (Root, i64) {
    let f = finite.finite();
    let neg = -&f;
    if f <= neg {
        (f, 1)
    } else {
        (neg, -1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let b = build_affine(AffineTypeId::B { m: 1, n: 1 }).unwrap();
        assert!(b.contains(&b.parse_root("e1-3delta").unwrap()));
        assert!(b.contains(&b.delta(2)));
        let a = build_affine(AffineTypeId::Ann { n: 1 }).unwrap();
        let plain = traceless(&a.parse_root("e1-d1").unwrap(), 2);
        assert!(!a.contains(&plain));
        assert!(a.contains(&plain.clone().with_sigma(1)));
        // For A(1,1) the same finite part also carries σ = −1.
        assert_eq!(a.sigma_rule(&plain), vec![-1, 1]);
    }

    #[test]
    fn classification_examples() {
        let b = build_affine(AffineTypeId::B { m: 1, n: 1 }).unwrap();
        assert_eq!(b.classify(&b.parse_root("d1+2delta").unwrap()).unwrap(), RootKind::Real);
        assert_eq!(b.classify(&b.delta(3)).unwrap(), RootKind::Imaginary);
        assert_eq!(b.classify(&b.delta(0)).unwrap(), RootKind::Zero);
        assert_eq!(b.parity(&b.parse_root("d1").unwrap()).unwrap(), Parity::Odd);
        assert_eq!(b.parity(&b.parse_root("2d1+5delta").unwrap()).unwrap(), Parity::Even);
        let d = build_affine(AffineTypeId::D21).unwrap();
        let iso = d.parse_root("g1+g2+g3+3delta").unwrap();
        assert_eq!(d.classify(&iso).unwrap(), RootKind::Nonsingular);
        let g = build_affine(AffineTypeId::G3).unwrap();
        assert_eq!(g.parity(&g.parse_root("nu").unwrap()).unwrap(), Parity::Odd);
        assert!(matches!(
            b.classify(&b.parse_root("3e1").unwrap()),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn reflection_examples() {
        let d = build_affine(AffineTypeId::D21).unwrap();
        let a = d.parse_root("2g1").unwrap();
        let b = d.parse_root("g1+g2+g3").unwrap();
        assert_eq!(d.reflect(&a, &b).unwrap(), d.parse_root("-g1+g2+g3").unwrap());
        assert_eq!(d.reflect(&a, &a).unwrap(), -&a);
        assert!(matches!(d.reflect(&b, &a), Err(Error::IsotropicReflection(_))));
        let bs = build_affine(AffineTypeId::B { m: 1, n: 1 }).unwrap();
        let e1 = bs.parse_root("e1").unwrap();
        let d1 = bs.parse_root("d1").unwrap();
        assert_eq!(bs.reflect(&e1, &d1).unwrap(), d1);
    }

    #[test]
    fn type_parsing() {
        assert_eq!(AffineTypeId::parse("B,1,1").unwrap(), AffineTypeId::B { m: 1, n: 1 });
        assert_eq!(AffineTypeId::parse("A,1,1").unwrap(), AffineTypeId::Ann { n: 1 });
        assert_eq!(AffineTypeId::parse("C(2)^(1)").unwrap(), AffineTypeId::C { n: 2 });
        assert_eq!(AffineTypeId::parse("D(2,1;λ)^(1)").unwrap(), AffineTypeId::D21);
        for t in [
            AffineTypeId::A { m: 2, n: 1 },
            AffineTypeId::D { m: 2, n: 1 },
            AffineTypeId::G3,
        ] {
            assert_eq!(AffineTypeId::parse(&t.to_string()).unwrap(), t);
        }
        assert!(AffineTypeId::parse("Q,1").is_err());
    }
}
