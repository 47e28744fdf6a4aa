//! Plain (non-super) finite root systems: recognition, bases, highest
//! roots and the Weyl orbit of a base.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::finite::{is_unit, length_ratio, FiniteRootSet};
use crate::form::cartan_integer;
use crate::linalg;
use crate::root::Root;
use crate::scalar::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PureFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// `X_r` for a reduced irreducible finite root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureType {
    pub family: PureFamily,
    pub rank: usize,
}

impl fmt::Display for PureType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Checks the finite-root-system axioms: every nonzero root real, only
/// `±α` proportional to `α`, closure under reflections, integrality.
pub fn verify_finite_root_system(set: &FiniteRootSet) -> Result<()> {
    let fail = |why: String| Err(Error::NotAFiniteRootSystem(why));
    if !set.contains_zero() {
        return fail("0 is missing".into());
    }
    let nonzero: Vec<&Root> = set.nonzero().collect();
    for a in &nonzero {
        if !set.form().norm(a)?.is_nonzero()? {
            return fail(format!("{a} is not real"));
        }
    }
    for a in &nonzero {
        for b in &nonzero {
            if let Some(c) = proportionality(a, b) {
                if !is_unit(&c) {
                    return fail(format!("{a} and {b} are proportional"));
                }
            }
            let k = cartan_integer(b, a, set.form())
                .map_err(|e| Error::NotAFiniteRootSystem(format!("<{b}, {a}>: {e}")))?;
            let image = *b - &a.scale(k);
            if !set.contains(&image) {
                return fail(format!("reflection of {b} in {a} leaves the set"));
            }
        }
    }
    Ok(())
}

/// `c` with `b = c·a`, if the two are proportional.
fn proportionality(a: &Root, b: &Root) -> Option<Q> {
    let i = a.coords().iter().position(|x| !x.is_zero())?;
    let c = b.coords()[i] / a.coords()[i];
    let scaled: Vec<Q> = a.coords().iter().map(|x| *x * c).collect();
    (scaled == b.coords()).then_some(c)
}

/// Names an irreducible reduced root system by rank, size and root lengths.
pub fn identify_pure(set: &FiniteRootSet) -> Option<PureType> {
    verify_finite_root_system(set).ok()?;
    let nonzero: Vec<&Root> = set.nonzero().collect();
    let first = *nonzero.first()?;
    let r = set.span_rank();
    let n = nonzero.len();
    let mut ratios: Vec<Q> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for a in &nonzero {
        let c = length_ratio(set.form(), a, first)?.abs();
        match ratios.iter().position(|x| *x == c) {
            Some(i) => counts[i] += 1,
            None => {
                ratios.push(c);
                counts.push(1);
            }
        }
    }
    use PureFamily::*;
    let family = match ratios.len() {
        1 => match (r, n) {
            (6, 72) => E,
            (7, 126) => E,
            (8, 240) => E,
            _ if n == r * (r + 1) => A,
            _ if r >= 4 && n == 2 * r * (r - 1) => D,
            _ => return None,
        },
        2 => {
            let long = if ratios[0] > ratios[1] { counts[0] } else { counts[1] };
            match (r, n) {
                (2, 12) => G,
                (4, 48) => F,
                _ if n == 2 * r * r && long == 2 * r * (r - 1) => B,
                _ if n == 2 * r * r && long == 2 * r => C,
                _ => return None,
            }
        }
        _ => return None,
    };
    Some(PureType { family, rank: r })
}

fn lex_positive(r: &Root) -> bool {
    r.coords()
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_positive())
}

/// The base of the lexicographically positive system, in descending order.
///
/// Every base element is lexicographically positive, which pins the base
/// down uniquely among all bases of the system.
pub fn find_base(component: &FiniteRootSet) -> Result<Vec<Root>> {
    verify_finite_root_system(component)?;
    let positive: Vec<&Root> = component.nonzero().filter(|r| lex_positive(r)).collect();
    let sums: HashSet<Root> = positive
        .iter()
        .flat_map(|a| positive.iter().map(move |b| *a + *b))
        .collect();
    let mut base: Vec<Root> = positive.into_iter().filter(|r| !sums.contains(*r)).cloned().collect();
    base.sort_by(|a, b| b.cmp(a));
    if base.len() != component.span_rank() {
        return Err(Error::NotAFiniteRootSystem(format!(
            "{} simple roots for a span of dimension {}",
            base.len(),
            component.span_rank()
        )));
    }
    Ok(base)
}

/// Coefficients of `r` in `base`, when they are all integers.
pub fn base_coefficients(base: &[Root], r: &Root) -> Option<Vec<i64>> {
    let rows: Vec<Vec<Q>> = base.iter().map(|b| b.coords().to_vec()).collect();
    let x = linalg::solve(&rows, r.coords())?;
    x.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

/// Highest root `θ = Σ r_j α_j` with respect to `base`.
pub fn highest_root(component: &FiniteRootSet, base: &[Root]) -> Result<(Root, Vec<i64>)> {
    let mut best: Option<(Root, Vec<i64>)> = None;
    for r in component.nonzero() {
        let c = base_coefficients(base, r)
            .ok_or_else(|| Error::NotAFiniteRootSystem(format!("{r} is not an integral combination of the base")))?;
        if c.iter().any(|x| *x < 0) {
            continue;
        }
        let h: i64 = c.iter().sum();
        if best.as_ref().is_none_or(|(_, bc)| h > bc.iter().sum()) {
            best = Some((r.clone(), c));
        }
    }
    let (theta, coeffs) = best.ok_or_else(|| Error::NotAFiniteRootSystem("no positive roots".into()))?;
    if let Some(a) = base.iter().find(|a| component.contains(&(&theta + a))) {
        return Err(Error::NotAFiniteRootSystem(format!(
            "no unique highest root: {theta} + {a} is a root"
        )));
    }
    Ok((theta, coeffs))
}

/// All bases in the Weyl orbit of `base`, starting with `base` itself and
/// proceeding breadth first through simple reflections.
pub fn weyl_orbit_bases(component: &FiniteRootSet, base: &[Root]) -> Result<Vec<Vec<Root>>> {
    let form = component.form();
    let key = |b: &[Root]| b.iter().cloned().collect::<BTreeSet<Root>>();
    let mut seen = HashSet::new();
    seen.insert(key(base));
    let mut queue = VecDeque::from([base.to_vec()]);
    let mut out = Vec::new();
    while let Some(b) = queue.pop_front() {
        for a in &b {
            let reflected: Vec<Root> = b
                .iter()
                .map(|x| Ok(x - &a.scale(cartan_integer(x, a, form)?)))
                .collect::<Result<_>>()?;
            if seen.insert(key(&reflected)) {
                queue.push_back(reflected);
            }
        }
        out.push(b);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{build_finite, irreducible_components, FiniteTypeId, Parity};
    use crate::form::FormTable;
    use crate::root::Ambient;
    use crate::scalar::LambdaMode;

    fn system(ambient: Ambient, texts: &[&str]) -> FiniteRootSet {
        let form = FormTable::for_ambient(ambient, LambdaMode::Symbolic);
        let mut entries = vec![(Root::zero(ambient), Parity::Even)];
        for t in texts {
            let r = Root::parse(ambient, t).unwrap();
            entries.push((-&r, Parity::Even));
            entries.push((r, Parity::Even));
        }
        FiniteRootSet::from_parts(FiniteTypeId::Custom("test".into()), form, entries)
    }

    #[test]
    fn a2_base_and_highest_root() {
        let a = Ambient::EpsDelta { m: 3, n: 0 };
        let s = system(a, &["e1-e2", "e2-e3", "e1-e3"]);
        let base = find_base(&s).unwrap();
        let expect: Vec<Root> = ["e1-e2", "e2-e3"].iter().map(|t| Root::parse(a, t).unwrap()).collect();
        assert_eq!(base, expect);
        let (theta, c) = highest_root(&s, &base).unwrap();
        assert_eq!(theta, Root::parse(a, "e1-e3").unwrap());
        assert_eq!(c, vec![1, 1]);
        assert_eq!(identify_pure(&s).unwrap().to_string(), "A2");
        assert_eq!(weyl_orbit_bases(&s, &base).unwrap().len(), 6);
    }

    #[test]
    fn b2_in_negative_definite_block() {
        let a = Ambient::EpsDelta { m: 0, n: 2 };
        let s = system(a, &["d1+d2", "d1-d2", "d1", "d2"]);
        let base = find_base(&s).unwrap();
        assert_eq!(
            base,
            vec![Root::parse(a, "d1-d2").unwrap(), Root::parse(a, "d2").unwrap()]
        );
        let (theta, c) = highest_root(&s, &base).unwrap();
        assert_eq!(theta, Root::parse(a, "d1+d2").unwrap());
        assert_eq!(c, vec![1, 2]);
        assert_eq!(weyl_orbit_bases(&s, &base).unwrap().len(), 8);
    }

    #[test]
    fn even_parts_are_recognized() {
        let g3 = build_finite(FiniteTypeId::G3).unwrap().even_part();
        let names: Vec<String> = irreducible_components(&g3)
            .unwrap()
            .iter()
            .map(|c| c.type_id().to_string())
            .collect();
        assert_eq!(names, vec!["A1", "G2"]);
        let f4 = build_finite(FiniteTypeId::F4).unwrap().even_part();
        let mut names: Vec<String> = irreducible_components(&f4)
            .unwrap()
            .iter()
            .map(|c| c.type_id().to_string())
            .collect();
        names.sort();
        assert_eq!(names, vec!["A1", "B3"]);
    }

    #[test]
    fn non_reduced_sets_are_rejected() {
        let a = Ambient::EpsDelta { m: 1, n: 0 };
        let s = system(a, &["e1", "2e1"]);
        assert!(matches!(find_base(&s), Err(Error::NotAFiniteRootSystem(_))));
    }
}
