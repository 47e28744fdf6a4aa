//! Subsets of an affine root system described line by line, and the
//! machinery that turns a hybrid shadow on a symmetric closed subset into
//! parabolic sets, compatible bases and a functional `ζ`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::affine::AffineRootSystem;
use crate::error::{Error, Result};
use crate::finite::{irreducible_components, FiniteRootSet, FiniteTypeId, Parity};
use crate::functional::LinearFunctional;
use crate::pure::{
    base_coefficients, find_base, highest_root, identify_pure, verify_finite_root_system, weyl_orbit_bases, PureType,
};
use crate::root::Root;
use crate::scalar::{qi, Q};
use crate::shadow::{Action, ClassConfig, Direction, LineShape, Shadow};

/// A set of `δ`-multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KRange {
    All,
    AtLeast(i64),
    AtMost(i64),
    Between(i64, i64),
}

impl KRange {
    pub fn contains(&self, k: i64) -> bool {
        match *self {
            KRange::All => true,
            KRange::AtLeast(a) => k >= a,
            KRange::AtMost(b) => k <= b,
            KRange::Between(a, b) => a <= k && k <= b,
        }
    }

    pub fn negated(&self) -> KRange {
        match *self {
            KRange::All => KRange::All,
            KRange::AtLeast(a) => KRange::AtMost(-a),
            KRange::AtMost(b) => KRange::AtLeast(-b),
            KRange::Between(a, b) => KRange::Between(-b, -a),
        }
    }

    fn bounds(&self) -> (Option<i64>, Option<i64>) {
        match *self {
            KRange::All => (None, None),
            KRange::AtLeast(a) => (Some(a), None),
            KRange::AtMost(b) => (None, Some(b)),
            KRange::Between(a, b) => (Some(a), Some(b)),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            KRange::All => "all".into(),
            KRange::AtLeast(a) => format!(">={a}"),
            KRange::AtMost(b) => format!("<={b}"),
            KRange::Between(a, b) => format!("{a}..={b}"),
        }
    }
}

/// The part of a subset on one layer: exact ranges plus isolated points.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct LinePart {
    ranges: Vec<KRange>,
    points: BTreeSet<i64>,
}

impl LinePart {
    fn contains(&self, k: i64) -> bool {
        self.points.contains(&k) || self.ranges.iter().any(|r| r.contains(k))
    }

    fn is_empty(&self) -> bool {
        self.points.is_empty() && self.ranges.is_empty()
    }

    /// A bound beyond which membership is constant in each direction.
    fn horizon(&self) -> i64 {
        let ends = self.ranges.iter().flat_map(|r| {
            let (a, b) = r.bounds();
            [a, b]
        });
        ends.flatten()
            .chain(self.points.iter().copied())
            .map(i64::abs)
            .max()
            .unwrap_or(0)
            + 1
    }

    /// Smallest `|k|` missing from the part, if any.
    fn first_gap(&self) -> Option<i64> {
        let h = self.horizon();
        (0..=h).flat_map(|x| [x, -x]).find(|&k| !self.contains(k))
    }

    fn window(&self, w: i64) -> Vec<i64> {
        (-w..=w).filter(|&k| self.contains(k)).collect()
    }

    fn negated(&self) -> LinePart {
        LinePart {
            ranges: self.ranges.iter().map(KRange::negated).collect(),
            points: self.points.iter().map(|k| -k).collect(),
        }
    }
}

/// A subset of `R`: per layer, exact `δ`-ranges and explicit points.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSubset {
    system: AffineRootSystem,
    parts: BTreeMap<Root, LinePart>,
}

impl RootSubset {
    pub fn empty(system: &AffineRootSystem) -> Self {
        RootSubset {
            system: system.clone(),
            parts: BTreeMap::new(),
        }
    }

    /// All of `R`.
    pub fn full(system: &AffineRootSystem) -> Self {
        let mut s = RootSubset::empty(system);
        for l in system.layers() {
            s.parts.entry(l.clone()).or_default().ranges.push(KRange::All);
        }
        s
    }

    /// `R₀`, the even roots.
    pub fn even(system: &AffineRootSystem) -> Self {
        let mut s = RootSubset::empty(system);
        for l in system.layers() {
            if system.parity(l) == Ok(Parity::Even) {
                s.parts.entry(l.clone()).or_default().ranges.push(KRange::All);
            }
        }
        s
    }

    pub fn system(&self) -> &AffineRootSystem {
        &self.system
    }

    fn check_layer(&self, r: &Root) -> Result<Root> {
        let layer = r.layer();
        if !self.system.contains(&layer) {
            return Err(Error::NotARoot(r.to_string()));
        }
        Ok(layer)
    }

    /// Adds `layer + kδ` for all `k` in `range`.
    pub fn with_line(mut self, layer: &Root, range: KRange) -> Result<Self> {
        let layer = self.check_layer(layer)?;
        if let KRange::Between(a, b) = range {
            if a > b {
                return Ok(self);
            }
        }
        self.parts.entry(layer).or_default().ranges.push(range);
        Ok(self)
    }

    pub fn with_root(mut self, root: &Root) -> Result<Self> {
        let layer = self.check_layer(root)?;
        self.parts.entry(layer).or_default().points.insert(root.delta());
        Ok(self)
    }

    pub fn from_roots<'a>(system: &AffineRootSystem, roots: impl IntoIterator<Item = &'a Root>) -> Result<Self> {
        roots
            .into_iter()
            .try_fold(RootSubset::empty(system), |s, r| s.with_root(r))
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.parts.get(&r.layer()).is_some_and(|p| p.contains(r.delta()))
    }

    fn part(&self, layer: &Root) -> Option<&LinePart> {
        self.parts.get(layer)
    }

    /// Layers meeting the subset.
    pub fn layers(&self) -> impl Iterator<Item = &Root> {
        self.parts.iter().filter(|(_, p)| !p.is_empty()).map(|(l, _)| l)
    }

    /// Members with `|k| ≤ window`, sorted.
    pub fn window(&self, window: i64) -> Vec<Root> {
        let mut out: Vec<Root> = self
            .parts
            .iter()
            .flat_map(|(l, p)| p.window(window).into_iter().map(move |k| l.clone().with_delta(k)))
            .collect();
        out.sort();
        out
    }

    /// `−S`.
    pub fn negated(&self) -> RootSubset {
        RootSubset {
            system: self.system.clone(),
            parts: self.parts.iter().map(|(l, p)| (-l, p.negated())).collect(),
        }
    }

    pub fn union(&self, other: &RootSubset) -> Result<RootSubset> {
        if self.system != other.system {
            return Err(Error::InvalidShadow("subsets of different systems".into()));
        }
        let mut out = self.clone();
        for (l, p) in &other.parts {
            let e = out.parts.entry(l.clone()).or_default();
            for r in &p.ranges {
                if !e.ranges.contains(r) {
                    e.ranges.push(*r);
                }
            }
            e.points.extend(p.points.iter().copied());
        }
        Ok(out)
    }

    /// Per layer, a readable description of the `δ`-multiplicities.
    pub fn describe(&self) -> Vec<(Root, Vec<String>)> {
        self.parts
            .iter()
            .filter(|(_, p)| !p.is_empty())
            .map(|(l, p)| {
                let mut d: Vec<String> = p.ranges.iter().map(KRange::label).collect();
                d.extend(p.points.iter().map(|k| format!("={k}")));
                (l.clone(), d)
            })
            .collect()
    }

    /// Layers with their members in the window, for the pairwise checks.
    fn table(&self, window: i64) -> Vec<(&Root, Vec<i64>)> {
        self.parts
            .iter()
            .map(|(l, p)| (l, p.window(window)))
            .filter(|(_, ks)| !ks.is_empty())
            .collect()
    }
}

/// Why a subset fails to be symmetric, closed or parabolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsetWitness {
    NotSymmetric { root: Root },
    NotClosed { alpha: Root, beta: Root, sum: Root },
    NotContained { root: Root },
    NotCovering { root: Root },
}

impl fmt::Display for SubsetWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetWitness::NotSymmetric { root } => write!(f, "{root} is in the set but its negative is not"),
            SubsetWitness::NotClosed { alpha, beta, sum } => {
                write!(f, "{alpha} + {beta} = {sum} is a root outside the set")
            }
            SubsetWitness::NotContained { root } => write!(f, "{root} lies outside the ambient subset"),
            SubsetWitness::NotCovering { root } => write!(f, "neither {root} nor its negative is in the set"),
        }
    }
}

/// A windowed closure and whether it was cut off at the window.
#[derive(Debug, Clone)]
pub struct Closure {
    pub subset: RootSubset,
    /// Some sum landed in `R` outside the window and was dropped; widen the
    /// window before trusting the result.
    pub touched_boundary: bool,
}

/// Least superset of `seed` (within `|k| ≤ window`) closed under sums that
/// are roots.
pub fn closure(seed: &RootSubset, window: i64) -> Closure {
    let system = seed.system();
    let mut members: Vec<Root> = seed.window(window);
    let mut seen: HashSet<Root> = members.iter().cloned().collect();
    let mut touched = false;
    let mut next = 0;
    while next < members.len() {
        let x = members[next].clone();
        next += 1;
        let mut i = 0;
        while i < members.len() && i < next {
            let s = &x + &members[i];
            i += 1;
            if !system.contains(&s) {
                continue;
            }
            if s.delta().abs() > window {
                touched = true;
            } else if seen.insert(s.clone()) {
                members.push(s);
            }
        }
    }
    let subset = RootSubset::from_roots(system, members.iter()).expect("sums were checked to be roots");
    Closure {
        subset,
        touched_boundary: touched,
    }
}

/// First failure of `S = −S` or `(S + S) ∩ R ⊆ S` over summands with
/// `|k| ≤ window`; the sum itself is tested exactly.
pub fn symmetric_closed_witness(s: &RootSubset, window: i64) -> Option<SubsetWitness> {
    let table = s.table(window);
    for (l, ks) in &table {
        for &k in ks {
            if !s.contains(&(-*l).with_delta(-k)) {
                return Some(SubsetWitness::NotSymmetric {
                    root: (*l).clone().with_delta(k),
                });
            }
        }
    }
    closed_witness(s, s, &table)
}

/// First `α, β ∈ P` in the table with `α + β ∈ U \ P`.
fn closed_witness(p: &RootSubset, universe: &RootSubset, table: &[(&Root, Vec<i64>)]) -> Option<SubsetWitness> {
    let system = p.system();
    for (i, (a, ka)) in table.iter().enumerate() {
        for (b, kb) in &table[i..] {
            let c = *a + *b;
            if !system.contains(&c) {
                continue;
            }
            let Some(uc) = universe.part(&c) else { continue };
            let pc = p.part(&c);
            for &x in ka {
                for &y in kb {
                    let k = x + y;
                    if uc.contains(k) && !pc.is_some_and(|pc| pc.contains(k)) {
                        return Some(SubsetWitness::NotClosed {
                            alpha: (*a).clone().with_delta(x),
                            beta: (*b).clone().with_delta(y),
                            sum: c.with_delta(k),
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_symmetric_closed(s: &RootSubset, window: i64) -> bool {
    symmetric_closed_witness(s, window).is_none()
}

/// First failure of `P ⊆ U`, `(P + P) ∩ U ⊆ P` or `U = P ∪ −P`.
pub fn parabolic_witness(p: &RootSubset, universe: &RootSubset, window: i64) -> Option<SubsetWitness> {
    for r in p.window(window) {
        if !universe.contains(&r) {
            return Some(SubsetWitness::NotContained { root: r });
        }
    }
    if let Some(w) = closed_witness(p, universe, &p.table(window)) {
        return Some(w);
    }
    universe
        .window(window)
        .into_iter()
        .find(|r| !p.contains(r) && !p.contains(&-r))
        .map(|root| SubsetWitness::NotCovering { root })
}

/// Parabolic relative to `universe`.
pub fn is_parabolic(p: &RootSubset, universe: &RootSubset, window: i64) -> bool {
    parabolic_witness(p, universe, window).is_none()
}

/// A root of `universe` missing from `p`, which makes `p` proper.
pub fn properness_witness(p: &RootSubset, universe: &RootSubset, window: i64) -> Option<Root> {
    universe.window(window).into_iter().find(|r| !p.contains(r))
}

/// One irreducible piece of a decomposed subset.
#[derive(Debug, Clone)]
pub struct ComponentData {
    pub index: usize,
    /// `Ṡ(i)`, zero included.
    pub dot_component: FiniteRootSet,
    /// `S(i) = (Ṡ(i) + ℤδ) ∩ R₀`, containing `ℤδ`.
    pub affine_part: RootSubset,
    /// The canonical base `B_i` of `Ṡ(i)`.
    pub base: Vec<Root>,
    pub theta: Root,
    pub coeffs: Vec<i64>,
    pub pure_type: Option<PureType>,
}

impl ComponentData {
    /// Nonzero roots of `Ṡ(i)`.
    pub fn finite_roots(&self) -> impl Iterator<Item = &Root> {
        self.dot_component.nonzero()
    }
}

fn violated(reason: &str, witness: impl fmt::Display) -> Error {
    Error::HypothesisViolated {
        reason: reason.into(),
        witness: witness.to_string(),
    }
}

/// Splits a symmetric closed subset into the affine pieces `S(i)`.
///
/// Checks the hypotheses first: `S` symmetric and closed (summands with
/// `|k| ≤ window`), `S_re ≠ ∅`, and every line `α̇ + ℤδ` with
/// `0 ≠ α̇ ∈ Ṡ` contained in `S`.
pub fn decompose(s: &RootSubset, window: i64) -> Result<Vec<ComponentData>> {
    let system = s.system();
    if let Some(w) = symmetric_closed_witness(s, window) {
        return Err(violated("S is not symmetric and closed", w));
    }
    if !s.layers().any(|l| system.is_real(l)) {
        return Err(violated("S has no real root", "none"));
    }
    let zero = Root::zero(system.ambient());
    let mut dot = vec![(zero.clone(), Parity::Even)];
    for (l, part) in &s.parts {
        if l.is_zero() || part.is_empty() || system.parity(l) != Ok(Parity::Even) {
            continue;
        }
        if let Some(k) = part.first_gap() {
            return Err(violated(
                "a line of an even root of S-dot is not contained in S",
                l.clone().with_delta(k),
            ));
        }
        dot.push((l.finite(), Parity::Even));
    }
    let dot = FiniteRootSet::from_parts(FiniteTypeId::Custom("S-dot".into()), system.form().clone(), dot);
    verify_finite_root_system(&dot).map_err(|e| violated("S-dot is not a finite root system", e))?;
    let mut out = Vec::new();
    for (index, c) in irreducible_components(&dot)?.into_iter().enumerate() {
        let base = find_base(&c)?;
        let (theta, coeffs) = highest_root(&c, &base)?;
        let mut affine_part = RootSubset::empty(system);
        for r in c.roots() {
            affine_part = affine_part.with_line(r, KRange::All)?;
        }
        out.push(ComponentData {
            index,
            pure_type: identify_pure(&c),
            dot_component: c,
            affine_part,
            base,
            theta,
            coeffs,
        });
    }
    Ok(out)
}

/// `P_i` together with its direction.
#[derive(Debug, Clone)]
pub struct ParabolicSet {
    pub component: usize,
    pub direction: Direction,
    pub set: RootSubset,
}

impl ParabolicSet {
    /// `p'(α̇)`: `P ∩ (α̇ + ℤδ)` is `{k : direction·k ≥ p'(α̇)}`.
    fn threshold(&self, layer: &Root) -> Result<i64> {
        let part = self.set.part(layer);
        match (self.direction, part.map(|p| p.ranges.as_slice())) {
            (Direction::Up, Some([KRange::AtLeast(a)])) => Ok(*a),
            (Direction::Down, Some([KRange::AtMost(b)])) => Ok(-*b),
            _ => Err(Error::NotUniformlyHybrid(format!("P is not a half-line on {layer}"))),
        }
    }
}

/// `P_i = S(i)^ln ∪ −S(i)^in ∪ ℤ^{≥0}δ` (up) or with `ℤ^{≤0}δ` (down).
pub fn build_p(component: &ComponentData, shadow: &Shadow) -> Result<ParabolicSet> {
    let mut direction = None;
    let mut lines = Vec::new();
    for a in component.finite_roots() {
        let (_, config, sign) = shadow.class_of(a)?;
        let d = config
            .direction()
            .ok_or_else(|| Error::NotUniformlyHybrid(format!("class of {a} is tight: {config}")))?;
        if *direction.get_or_insert(d) != d {
            return Err(Error::NotUniformlyHybrid(format!(
                "component {} mixes up and down classes",
                component.index
            )));
        }
        lines.push((a.clone(), config.shape(sign), config.shape(-sign)));
    }
    let direction = direction.ok_or_else(|| Error::NotUniformlyHybrid("component has no real class".into()))?;
    let system = shadow.system();
    let zero = Root::zero(system.ambient());
    let mut set = RootSubset::empty(system);
    for (a, plus, minus) in lines {
        let (LineShape::Switch { from: f, .. }, LineShape::Switch { from: g, .. }) = (plus, minus) else {
            unreachable!("hybrid classes switch on both lines");
        };
        let range = match direction {
            // ln from f on α̇; −α̇ − kδ is in iff −k < g.
            Direction::Up => KRange::AtLeast(f.min(1 - g)),
            // ln below f on α̇; −α̇ − kδ is in iff −k ≥ g.
            Direction::Down => KRange::AtMost((f - 1).max(-g)),
        };
        set = set.with_line(&a, range)?;
    }
    let imaginary = match direction {
        Direction::Up => KRange::AtLeast(0),
        Direction::Down => KRange::AtMost(0),
    };
    set = set.with_line(&zero, imaginary)?;
    Ok(ParabolicSet {
        component: component.index,
        direction,
        set,
    })
}

/// Membership of a base element in `P \ −P` or `P ∩ −P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseClass {
    Strict,
    Both,
}

impl BaseClass {
    pub fn label(&self) -> &'static str {
        match self {
            BaseClass::Strict => "P\\-P",
            BaseClass::Both => "P&-P",
        }
    }
}

/// A base `Π_i = B'_i ∪ {δ − θ'_i}` of `S(i)` whose positive roots lie in
/// `P_i`. For down components `δ` is read as `−δ` throughout.
#[derive(Debug, Clone)]
pub struct CompatibleBase {
    pub component: usize,
    pub direction: Direction,
    /// `α_{j,i}` as roots of the system.
    pub simple: Vec<Root>,
    /// `δ − θ_i` as a root of the system.
    pub affine_simple: Root,
    pub theta: Root,
    pub coeffs: Vec<i64>,
    pub simple_classes: Vec<BaseClass>,
    pub affine_class: BaseClass,
    /// `t_i`: simple roots in `P \ −P`.
    pub strict_count: usize,
    /// Candidates examined before this one was accepted.
    pub searched: usize,
}

/// Searches the Weyl orbit of the canonical base, with every admissible
/// `δ`-shift of the simple roots. Prefers bases with `t_i ≥ 1`.
pub fn find_compatible_base(component: &ComponentData, p: &ParabolicSet) -> Result<CompatibleBase> {
    let sign = p.direction.sign();
    let dot = &component.dot_component;
    let roots: Vec<Root> = dot.nonzero().cloned().collect();
    let thresholds: BTreeMap<Root, i64> = roots
        .iter()
        .map(|r| Ok((r.clone(), p.threshold(r)?)))
        .collect::<Result<_>>()?;
    let mut searched = 0;
    let mut fallback = None;
    for base in weyl_orbit_bases(dot, &component.base)? {
        let (theta, coeffs) = highest_root(dot, &base)?;
        let coords: Vec<Vec<i64>> = roots
            .iter()
            .map(|r| {
                base_coefficients(&base, r)
                    .ok_or_else(|| Error::NotAFiniteRootSystem(format!("{r} is not integral over the base")))
            })
            .collect::<Result<_>>()?;
        let boxes: Vec<(i64, i64)> = base.iter().map(|a| (thresholds[a], 1 - thresholds[&-a])).collect();
        if boxes.iter().any(|(lo, hi)| lo > hi) {
            continue;
        }
        let mut shift: Vec<i64> = boxes.iter().map(|b| b.0).collect();
        loop {
            searched += 1;
            let phi = |c: &[i64]| -> i64 { c.iter().zip(&shift).map(|(x, s)| x * s).sum() };
            let compatible = roots.iter().zip(&coords).all(|(r, c)| {
                let positive = c.iter().all(|x| *x >= 0);
                phi(c) + i64::from(!positive) >= thresholds[r]
            });
            if compatible {
                let class = |layer: &Root, k: i64| {
                    // −(layer + kδ') lies in P iff −k ≥ p'(−layer).
                    if -k >= thresholds[&-layer] {
                        BaseClass::Both
                    } else {
                        BaseClass::Strict
                    }
                };
                let simple_classes: Vec<BaseClass> = base.iter().zip(&shift).map(|(a, c)| class(a, *c)).collect();
                let theta_shift: i64 = coeffs.iter().zip(&shift).map(|(r, s)| r * s).sum();
                let affine_class = class(&-&theta, 1 - theta_shift);
                let strict_count = simple_classes.iter().filter(|c| **c == BaseClass::Strict).count();
                let found = CompatibleBase {
                    component: component.index,
                    direction: p.direction,
                    simple: base
                        .iter()
                        .zip(&shift)
                        .map(|(a, c)| a.clone().with_delta(sign * c))
                        .collect(),
                    affine_simple: (-&theta).with_delta(sign * (1 - theta_shift)),
                    theta: theta.clone().with_delta(sign * theta_shift),
                    coeffs: coeffs.clone(),
                    simple_classes,
                    affine_class,
                    strict_count,
                    searched,
                };
                if strict_count >= 1 {
                    return Ok(found);
                }
                fallback.get_or_insert(found);
            }
            // Odometer over the shift box.
            let mut j = 0;
            loop {
                if j == shift.len() {
                    break;
                }
                if shift[j] < boxes[j].1 {
                    shift[j] += 1;
                    break;
                }
                shift[j] = boxes[j].0;
                j += 1;
            }
            if j == shift.len() {
                break;
            }
        }
    }
    fallback
        .map(|mut f| {
            f.searched = searched;
            f
        })
        .ok_or(Error::NoCompatibleBase { searched })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZetaCase {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl ZetaCase {
    pub fn number(&self) -> u8 {
        match self {
            ZetaCase::Case1 => 1,
            ZetaCase::Case2 => 2,
            ZetaCase::Case3 => 3,
            ZetaCase::Case4 => 4,
        }
    }

    pub const ALL: [ZetaCase; 4] = [ZetaCase::Case1, ZetaCase::Case2, ZetaCase::Case3, ZetaCase::Case4];
}

/// Which case to build when the classes of the `δ − θ_i` allow a choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CasePreference {
    /// Case 1 or 2 when uniform, Case 3 when mixed.
    #[default]
    Auto,
    Force(ZetaCase),
}

#[derive(Debug, Clone)]
pub struct ZetaConstruction {
    pub case: ZetaCase,
    /// Component indices after reindexing; the first plays component 1.
    pub order: Vec<usize>,
    pub direction: Direction,
    pub zeta: LinearFunctional,
    /// `ζ(δ)`; negative for down components.
    pub zeta_delta: Q,
}

/// Builds `ζ` on `Π = ∪Π_i \ {δ − θ_2, …, δ − θ_k}`.
pub fn construct_zeta(bases: &[CompatibleBase], preference: CasePreference) -> Result<ZetaConstruction> {
    let first = bases
        .first()
        .ok_or_else(|| Error::CaseMismatch("no components".into()))?;
    let direction = first.direction;
    if bases.iter().any(|b| b.direction != direction) {
        return Err(Error::NotUniformlyHybrid("components differ in direction".into()));
    }
    let strict: Vec<usize> = (0..bases.len())
        .filter(|&i| bases[i].affine_class == BaseClass::Strict)
        .collect();
    let both: Vec<usize> = (0..bases.len())
        .filter(|&i| bases[i].affine_class == BaseClass::Both)
        .collect();
    let uniform_case = if strict.is_empty() {
        Some(ZetaCase::Case1)
    } else if both.is_empty() {
        Some(ZetaCase::Case2)
    } else {
        None
    };
    let case = match (preference, uniform_case) {
        (CasePreference::Auto, Some(c)) => c,
        (CasePreference::Auto, None) => ZetaCase::Case3,
        (CasePreference::Force(c), Some(u)) if c == u => c,
        (CasePreference::Force(c @ (ZetaCase::Case3 | ZetaCase::Case4)), None) => c,
        (CasePreference::Force(c), _) => {
            return Err(Error::CaseMismatch(format!(
                "case {} does not fit: {} components with delta-theta in P\\-P, {} in P&-P",
                c.number(),
                strict.len(),
                both.len()
            )))
        }
    };
    let lead = match case {
        ZetaCase::Case1 | ZetaCase::Case4 => both[0],
        ZetaCase::Case2 | ZetaCase::Case3 => strict[0],
    };
    let mut order = vec![lead];
    order.extend((0..bases.len()).filter(|&i| i != lead));
    let weight = |b: &CompatibleBase| -> i64 {
        match (case, b.affine_class) {
            (ZetaCase::Case3, BaseClass::Both) | (ZetaCase::Case4, BaseClass::Both) => 2,
            _ => 1,
        }
    };
    let mut basis = Vec::new();
    let mut values = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        let b = &bases[i];
        let w = weight(b);
        for ((a, class), r) in b.simple.iter().zip(&b.simple_classes).zip(&b.coeffs) {
            basis.push(a.clone());
            values.push(match class {
                BaseClass::Strict => Q::new(w, b.strict_count as i64 * r),
                BaseClass::Both => Q::zero(),
            });
        }
        if pos == 0 {
            basis.push(b.affine_simple.clone());
            values.push(match case {
                ZetaCase::Case1 | ZetaCase::Case4 => Q::zero(),
                ZetaCase::Case2 | ZetaCase::Case3 => qi(1),
            });
        }
    }
    let zeta = LinearFunctional::new(basis, values)?;
    let zeta_delta = zeta.value(&Root::delta_multiple(first.simple[0].ambient(), 1));
    if !(zeta_delta * qi(direction.sign())).is_positive() {
        return Err(Error::CaseMismatch(format!(
            "zeta(delta) = {zeta_delta} has the wrong sign for a {} component",
            direction.label()
        )));
    }
    for b in bases {
        let v = zeta.value(&b.affine_simple);
        let expect = match b.affine_class {
            BaseClass::Both => Q::zero(),
            BaseClass::Strict => qi(1),
        };
        if v != expect {
            return Err(Error::CaseMismatch(format!(
                "zeta({}) = {v} but its class {} requires {expect}",
                b.affine_simple,
                b.affine_class.label()
            )));
        }
    }
    Ok(ZetaConstruction {
        case,
        order,
        direction,
        zeta,
        zeta_delta,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionalViolation {
    /// `α ∈ P` disagrees with `ζ(α) ≥ 0`.
    Membership {
        root: Root,
        in_p: bool,
        value: Q,
    },
    /// `ζ(α) > 0` but `α` is `in`, or `ζ(α) < 0` but `α` is `ln`.
    Shadow {
        root: Root,
        value: Q,
        action: Action,
    },
    NotParabolic {
        component: usize,
        witness: SubsetWitness,
    },
    NotProper {
        component: usize,
    },
}

impl fmt::Display for FunctionalViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionalViolation::Membership { root, in_p, value } => {
                write!(f, "{root}: zeta = {value} but membership in P is {in_p}")
            }
            FunctionalViolation::Shadow { root, value, action } => {
                write!(f, "{root}: zeta = {value} but the root is {}", action.label())
            }
            FunctionalViolation::NotParabolic { component, witness } => {
                write!(f, "P_{} is not parabolic: {witness}", component + 1)
            }
            FunctionalViolation::NotProper { component } => {
                write!(f, "P_{} equals S({})", component + 1, component + 1)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct FunctionalReport {
    pub zeta_delta: Q,
    pub window: i64,
    pub roots_checked: usize,
    pub violations: Vec<FunctionalViolation>,
}

impl FunctionalReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `P = {α ∈ S : ζ(α) ≥ 0}`, the sign split against the shadow on
/// real roots, and that every `P_i` is a proper parabolic subset of `S(i)`,
/// all over `|k| ≤ window`.
pub fn verify_functional(
    zeta: &LinearFunctional,
    components: &[ComponentData],
    parts: &[ParabolicSet],
    shadow: &Shadow,
    window: i64,
) -> Result<FunctionalReport> {
    let zeta_delta = zeta.delta_value()?;
    if zeta_delta.is_zero() {
        return Err(Error::DegenerateFunctional("zeta(delta) = 0".into()));
    }
    let system = shadow.system();
    let mut s = RootSubset::empty(system);
    let mut p = RootSubset::empty(system);
    for c in components {
        s = s.union(&c.affine_part)?;
    }
    for part in parts {
        p = p.union(&part.set)?;
    }
    let mut violations = Vec::new();
    let roots = s.window(window);
    for r in &roots {
        let value = zeta.value(r);
        let in_p = p.contains(r);
        if in_p != !value.is_negative() {
            violations.push(FunctionalViolation::Membership {
                root: r.clone(),
                in_p,
                value,
            });
        }
        if system.is_real(r) && !value.is_zero() {
            let action = shadow.membership(r)?;
            let expect = if value.is_positive() { Action::Ln } else { Action::In };
            if action != expect {
                violations.push(FunctionalViolation::Shadow {
                    root: r.clone(),
                    value,
                    action,
                });
            }
        }
    }
    for part in parts {
        let universe = &components
            .iter()
            .find(|c| c.index == part.component)
            .ok_or_else(|| Error::InvalidShadow(format!("no component {}", part.component)))?
            .affine_part;
        if let Some(witness) = parabolic_witness(&part.set, universe, window) {
            violations.push(FunctionalViolation::NotParabolic {
                component: part.component,
                witness,
            });
        }
        if properness_witness(&part.set, universe, window).is_none() {
            violations.push(FunctionalViolation::NotProper {
                component: part.component,
            });
        }
    }
    Ok(FunctionalReport {
        zeta_delta,
        window,
        roots_checked: roots.len(),
        violations,
    })
}

/// Everything produced from one hybrid shadow on a decomposed subset.
#[derive(Debug, Clone)]
pub struct ZetaOutcome {
    pub parts: Vec<ParabolicSet>,
    pub bases: Vec<CompatibleBase>,
    pub construction: ZetaConstruction,
    pub report: FunctionalReport,
}

/// `build_p`, `find_compatible_base`, `construct_zeta` and
/// `verify_functional` in sequence.
pub fn zeta_pipeline(
    components: &[ComponentData],
    shadow: &Shadow,
    preference: CasePreference,
    window: i64,
) -> Result<ZetaOutcome> {
    let parts: Vec<ParabolicSet> = components.iter().map(|c| build_p(c, shadow)).collect::<Result<_>>()?;
    let bases: Vec<CompatibleBase> = components
        .iter()
        .zip(&parts)
        .map(|(c, p)| find_compatible_base(c, p))
        .collect::<Result<_>>()?;
    let construction = construct_zeta(&bases, preference)?;
    let report = verify_functional(&construction.zeta, components, &parts, shadow, window)?;
    Ok(ZetaOutcome {
        parts,
        bases,
        construction,
        report,
    })
}

/// A shadow on `system` giving every class of component `i` the config
/// `configs[i]`; odd real classes follow their doubles.
pub fn component_shadow(
    system: &AffineRootSystem,
    components: &[ComponentData],
    configs: &[ClassConfig],
) -> Result<Shadow> {
    if configs.len() != components.len() {
        return Err(Error::InvalidShadow(format!(
            "{} configs for {} components",
            configs.len(),
            components.len()
        )));
    }
    let mut even = Vec::new();
    for (c, config) in components.iter().zip(configs) {
        for r in c.finite_roots() {
            if *r <= -r {
                even.push((r.clone(), *config));
            }
        }
    }
    Shadow::from_even_classes(system, even)
}

/// Named instances of the `ζ` construction.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: &'static str,
    pub system: AffineRootSystem,
    pub subset: RootSubset,
    pub configs: Vec<ClassConfig>,
    pub preference: CasePreference,
}

pub const SCENARIO_NAMES: [&str; 8] = [
    "d21l-case1",
    "d21l-case2",
    "d21l-case3",
    "d21l-case4",
    "b11-case1",
    "b11-case2",
    "b11-case3",
    "b11-case4",
];

/// `R₀` of `D(2,1;λ)^(1)` (three components) or `B(1,1)^(1)` (two), with
/// up-hybrid classes whose `t` values select the case: `t = 0` puts
/// `δ − θ_i` in `P \ −P`, `t = ±1` puts it in `P ∩ −P`.
pub fn scenario(name: &str) -> Result<Scenario> {
    use crate::affine::{build_affine, AffineTypeId};
    let (ty, ts, preference): (AffineTypeId, &[i64], CasePreference) = match name {
        "d21l-case1" => (AffineTypeId::D21, &[1, 1, 1], CasePreference::Force(ZetaCase::Case1)),
        "d21l-case2" => (AffineTypeId::D21, &[0, 0, 0], CasePreference::Force(ZetaCase::Case2)),
        "d21l-case3" => (AffineTypeId::D21, &[0, 0, 1], CasePreference::Force(ZetaCase::Case3)),
        "d21l-case4" => (AffineTypeId::D21, &[1, 1, 0], CasePreference::Force(ZetaCase::Case4)),
        "b11-case1" => (
            AffineTypeId::B { m: 1, n: 1 },
            &[1, 1],
            CasePreference::Force(ZetaCase::Case1),
        ),
        "b11-case2" => (
            AffineTypeId::B { m: 1, n: 1 },
            &[0, 0],
            CasePreference::Force(ZetaCase::Case2),
        ),
        "b11-case3" => (
            AffineTypeId::B { m: 1, n: 1 },
            &[0, 1],
            CasePreference::Force(ZetaCase::Case3),
        ),
        "b11-case4" => (
            AffineTypeId::B { m: 1, n: 1 },
            &[1, 0],
            CasePreference::Force(ZetaCase::Case4),
        ),
        other => {
            return Err(Error::UnknownType(format!(
                "scenario {other}; known: {}",
                SCENARIO_NAMES.join(", ")
            )))
        }
    };
    let system = build_affine(ty)?;
    let name = SCENARIO_NAMES.iter().find(|n| **n == name).copied().unwrap_or("custom");
    Ok(Scenario {
        name,
        subset: RootSubset::even(&system),
        configs: ts.iter().map(|t| ClassConfig::up(0, *t)).collect(),
        system,
        preference,
    })
}

impl Scenario {
    pub fn components(&self, window: i64) -> Result<Vec<ComponentData>> {
        decompose(&self.subset, window)
    }

    pub fn shadow(&self, components: &[ComponentData]) -> Result<Shadow> {
        component_shadow(&self.system, components, &self.configs)
    }
}
