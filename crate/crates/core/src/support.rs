//! Support sets built from points and rays along one axis, and exact
//! evaluation of the operators `𝔅` and `ℭ` on them.
//!
//! Every component lies on a line `anchor + ℚ·axis`. A line is identified
//! by its point with vanishing pivot coordinate, and a point on it by the
//! rational parameter `t` along the axis. Components are then integer
//! progressions `t₀ + J` with `J` a point, a half-line or all of `ℤ`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::root::Root;
use crate::scalar::{qi, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extent {
    Point,
    /// `anchor + ℤ^{≥0}·axis`.
    Up,
    /// `anchor + ℤ^{≤0}·axis`.
    Down,
    Line,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub anchor: Root,
    pub extent: Extent,
}

/// A finite union of points and axis rays.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportSet {
    axis: Root,
    pivot: usize,
    components: Vec<Component>,
}

/// Integer offsets `[lo, hi]`, `None` meaning unbounded.
type Interval = (Option<i64>, Option<i64>);

impl SupportSet {
    pub fn new(axis: Root, components: Vec<Component>) -> Result<Self> {
        let coords = axis.extended_coords();
        let pivot = coords
            .iter()
            .position(|x| !x.is_zero())
            .ok_or_else(|| Error::DirectionNotDecidable("the axis of a support is zero".into()))?;
        for c in &components {
            if c.anchor.ambient() != axis.ambient() {
                return Err(Error::BasisMismatch {
                    left: axis.ambient(),
                    right: c.anchor.ambient(),
                });
            }
        }
        Ok(SupportSet {
            axis,
            pivot,
            components,
        })
    }

    /// Rays along `δ`.
    pub fn along_delta(components: Vec<Component>) -> Result<Self> {
        let ambient = components
            .first()
            .map(|c| c.anchor.ambient())
            .ok_or_else(|| Error::DirectionNotDecidable("empty support has no ambient".into()))?;
        SupportSet::new(Root::delta_multiple(ambient, 1), components)
    }

    pub fn axis(&self) -> &Root {
        &self.axis
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// `(line key, t)` with `p = key + t·axis`.
    fn locate(&self, p: &Root) -> (Vec<Q>, Q) {
        let v = p.extended_coords();
        let u = self.axis.extended_coords();
        let t = v[self.pivot] / u[self.pivot];
        let key = v.iter().zip(&u).map(|(a, b)| *a - t * *b).collect();
        (key, t)
    }

    /// `α = c·axis`, if parallel.
    fn ratio(&self, alpha: &Root) -> Option<Q> {
        let (key, t) = self.locate(alpha);
        key.iter().all(Zero::is_zero).then_some(t)
    }

    /// Components grouped by line and by `t mod 1`, as integer intervals
    /// relative to a common base parameter.
    fn fibers(&self) -> BTreeMap<(Vec<Q>, Q), Vec<Interval>> {
        let mut out: BTreeMap<(Vec<Q>, Q), Vec<Interval>> = BTreeMap::new();
        for c in &self.components {
            let (key, t) = self.locate(&c.anchor);
            let frac = t - t.floor();
            let o = (t - frac).to_integer();
            let iv = match c.extent {
                Extent::Point => (Some(o), Some(o)),
                Extent::Up => (Some(o), None),
                Extent::Down => (None, Some(o)),
                Extent::Line => (None, None),
            };
            out.entry((key, frac)).or_default().push(iv);
        }
        out
    }

    pub fn contains(&self, p: &Root) -> bool {
        let (key, t) = self.locate(p);
        let frac = t - t.floor();
        let o = (t - frac).to_integer();
        self.fibers()
            .get(&(key, frac))
            .is_some_and(|ivs| ivs.iter().any(|iv| in_interval(iv, o)))
    }

    /// `α ∈ 𝔅`: from every point of the support, only finitely many
    /// positive multiples of `α` stay in the support.
    pub fn in_frak_b(&self, alpha: &Root) -> bool {
        if self.components.is_empty() {
            return true;
        }
        let Some(c) = self.ratio(alpha) else {
            // A line not parallel to the axis meets each component line at
            // most once.
            return true;
        };
        if c.is_zero() {
            return false;
        }
        let step = c.denom().abs();
        for target in &self.components {
            let unbounded = match target.extent {
                Extent::Point => false,
                Extent::Up => c.is_positive(),
                Extent::Down => c.is_negative(),
                Extent::Line => true,
            };
            if !unbounded {
                continue;
            }
            let (tkey, t0) = self.locate(&target.anchor);
            for source in &self.components {
                let (skey, s0) = self.locate(&source.anchor);
                if skey != tkey {
                    continue;
                }
                // λ = s0 + n; λ + kc hits the target progression when
                // s0 − t0 + kc is an integer, which recurs with period step.
                if (1..=step).any(|k| (s0 - t0 + c * qi(k)).is_integer()) {
                    return false;
                }
            }
        }
        true
    }

    /// `α ∈ ℭ`: `α + supp ⊆ supp`.
    pub fn in_frak_c(&self, alpha: &Root) -> bool {
        let fibers = self.fibers();
        for comp in &self.components {
            let moved = &comp.anchor + alpha;
            let (key, t) = self.locate(&moved);
            let frac = t - t.floor();
            let o = (t - frac).to_integer();
            let need = match comp.extent {
                Extent::Point => (Some(o), Some(o)),
                Extent::Up => (Some(o), None),
                Extent::Down => (None, Some(o)),
                Extent::Line => (None, None),
            };
            let have = fibers.get(&(key, frac)).cloned().unwrap_or_default();
            if !covers(&have, need) {
                return false;
            }
        }
        true
    }
}

fn in_interval(iv: &Interval, x: i64) -> bool {
    iv.0.is_none_or(|lo| x >= lo) && iv.1.is_none_or(|hi| x <= hi)
}

/// Whether the union of `have` contains every integer of `need`.
fn covers(have: &[Interval], need: Interval) -> bool {
    // Furthest upper end among intervals satisfying `pick`; `Some(None)`
    // means unbounded above.
    let furthest = |pick: &dyn Fn(&Interval) -> bool| -> Option<Option<i64>> {
        have.iter()
            .filter(|iv| pick(iv))
            .map(|iv| iv.1)
            .fold(None, |best, hi| match (best, hi) {
                (None, h) => Some(h),
                (Some(None), _) | (_, None) => Some(None),
                (Some(Some(a)), Some(b)) => Some(Some(a.max(b))),
            })
    };
    // Everything in need from its lower end up to `covered` is covered.
    let mut covered = match need.0 {
        Some(lo) => lo - 1,
        None => match furthest(&|iv| iv.0.is_none()) {
            None => return false,
            Some(None) => return true,
            Some(Some(h)) => h,
        },
    };
    loop {
        if need.1.is_some_and(|top| covered >= top) {
            return true;
        }
        let x = covered + 1;
        match furthest(&|iv| in_interval(iv, x)) {
            None => return false,
            Some(None) => return true,
            Some(Some(h)) => covered = h,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::Ambient;

    fn amb() -> Ambient {
        Ambient::EpsDelta { m: 1, n: 1 }
    }

    fn r(text: &str) -> Root {
        Root::parse(amb(), text).unwrap()
    }

    fn supp(parts: &[(&str, Extent)]) -> SupportSet {
        SupportSet::along_delta(
            parts
                .iter()
                .map(|(a, e)| Component {
                    anchor: r(a),
                    extent: *e,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn downward_ray() {
        let s = supp(&[("e1", Extent::Down)]);
        assert!(s.in_frak_b(&r("delta")));
        assert!(!s.in_frak_b(&r("-delta")));
        assert!(s.in_frak_c(&r("-delta")));
        assert!(!s.in_frak_c(&r("delta")));
        assert!(s.contains(&r("e1-4delta")));
        assert!(!s.contains(&r("e1+delta")));
    }

    #[test]
    fn full_line() {
        let s = supp(&[("e1", Extent::Line)]);
        assert!(!s.in_frak_b(&r("delta")));
        assert!(s.in_frak_c(&r("3delta")));
        assert!(!s.in_frak_c(&r("d1")));
        assert!(s.in_frak_b(&r("d1")));
    }

    #[test]
    fn coverage_by_several_pieces() {
        // (−∞, 0] ∪ {1} ∪ [2, ∞) covers the whole line.
        let s = supp(&[
            ("e1", Extent::Down),
            ("e1+delta", Extent::Point),
            ("e1+2delta", Extent::Up),
        ]);
        assert!(s.in_frak_c(&r("delta")));
        assert!(s.in_frak_c(&r("-5delta")));
        let gap = supp(&[("e1", Extent::Down), ("e1+2delta", Extent::Up)]);
        assert!(!gap.in_frak_c(&r("delta")));
        assert!(!gap.in_frak_c(&r("2delta")));
    }

    #[test]
    fn translated_point_needs_a_landing_spot() {
        let s = supp(&[("0", Extent::Point), ("d1", Extent::Point)]);
        assert!(!s.in_frak_c(&r("d1")));
        assert!(s.in_frak_b(&r("d1")));
        assert!(!s.in_frak_b(&Root::zero(amb())));
    }
}
