//! Shadows of weight modules as threshold patterns on `δ`-lines.
//!
//! A shadow assigns every real root to `ln` (locally nilpotent) or `in`
//! (injective). It is stored per class `{±β̇}` of real finite parts as one
//! of the four admissible patterns, so membership is exact for every `k`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::affine::{canonical_class, AffineRootSystem};
use crate::error::{Error, Result};
use crate::functional::LinearFunctional;
use crate::root::Root;
use crate::scalar::Q;

/// How a real root vector acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Action {
    Ln,
    In,
}

impl Action {
    pub fn label(&self) -> &'static str {
        match self {
            Action::Ln => "ln",
            Action::In => "in",
        }
    }

    pub fn flip(self) -> Action {
        match self {
            Action::Ln => Action::In,
            Action::In => Action::Ln,
        }
    }

    /// Name of the constant pattern on one line.
    pub fn full_label(&self) -> &'static str {
        match self {
            Action::Ln => "FullLN",
            Action::In => "FullIN",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn label(&self) -> &'static str {
        match self {
            Direction::Up => "up",
            Direction::Down => "down",
        }
    }

    /// `+1` for up, `-1` for down: the sign of `δ` in the shifted frame.
    pub fn sign(&self) -> i64 {
        match self {
            Direction::Up => 1,
            Direction::Down => -1,
        }
    }
}

/// Pattern of one class `{±β̇}`, relative to the class representative `β̇`.
///
/// `Hybrid { Down, m, t }`: with `γ = β̇ + mδ`, `γ + kδ` is `in` iff
/// `k ≥ 1` and `−γ + kδ` is `in` iff `k ≥ t`.
/// `Hybrid { Up, m, t }`: with `η = β̇ + mδ`, `η + kδ` is `ln` iff `k ≥ 0`
/// and `−η + kδ` is `ln` iff `k ≥ 1 − t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassConfig {
    Tight { plus: Action, minus: Action },
    Hybrid { direction: Direction, m: i64, t: i64 },
}

impl ClassConfig {
    pub fn up(m: i64, t: i64) -> Self {
        ClassConfig::Hybrid {
            direction: Direction::Up,
            m,
            t,
        }
    }

    pub fn down(m: i64, t: i64) -> Self {
        ClassConfig::Hybrid {
            direction: Direction::Down,
            m,
            t,
        }
    }

    pub fn tight(plus: Action, minus: Action) -> Self {
        ClassConfig::Tight { plus, minus }
    }

    pub fn is_hybrid(&self) -> bool {
        matches!(self, ClassConfig::Hybrid { .. })
    }

    pub fn is_tight(&self) -> bool {
        matches!(self, ClassConfig::Tight { .. })
    }

    pub fn direction(&self) -> Option<Direction> {
        match self {
            ClassConfig::Hybrid { direction, .. } => Some(*direction),
            ClassConfig::Tight { .. } => None,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            ClassConfig::Hybrid { t, .. } if !(-1..=1).contains(t) => {
                Err(Error::InvalidShadow(format!("t = {t} is outside {{-1, 0, 1}}")))
            }
            _ => Ok(()),
        }
    }

    /// The shape of the line `sign·β̇ + ℤδ`.
    pub fn shape(&self, sign: i64) -> LineShape {
        let plus = sign > 0;
        match *self {
            ClassConfig::Tight { plus: p, minus } => LineShape::Constant(if plus { p } else { minus }),
            ClassConfig::Hybrid {
                direction: Direction::Up,
                m,
                t,
            } => LineShape::Switch {
                from: if plus { m } else { 1 - t - m },
                upper: Action::Ln,
            },
            ClassConfig::Hybrid {
                direction: Direction::Down,
                m,
                t,
            } => LineShape::Switch {
                from: if plus { m + 1 } else { t - m },
                upper: Action::In,
            },
        }
    }

    /// Action on `sign·β̇ + kδ`.
    pub fn action(&self, sign: i64, k: i64) -> Action {
        self.shape(sign).at(k)
    }
}

impl fmt::Display for ClassConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassConfig::Tight { plus, minus } => {
                write!(f, "({}, {})", plus.full_label(), minus.full_label())
            }
            ClassConfig::Hybrid { direction, m, t } => {
                let name = match direction {
                    Direction::Up => "UpHybrid",
                    Direction::Down => "DownHybrid",
                };
                write!(f, "{name}{{m={m}, t={t}}}")
            }
        }
    }
}

/// A `{ln, in}` assignment on `ℤ` with at most one switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineShape {
    Constant(Action),
    /// `upper` for `k ≥ from`, the other action below.
    Switch {
        from: i64,
        upper: Action,
    },
}

impl LineShape {
    pub fn at(&self, k: i64) -> Action {
        match *self {
            LineShape::Constant(a) => a,
            LineShape::Switch { from, upper } => {
                if k >= from {
                    upper
                } else {
                    upper.flip()
                }
            }
        }
    }

    /// First `k` from which the line is `ln` onwards, for up-switching
    /// lines; `None` otherwise.
    pub fn ln_from(&self) -> Option<i64> {
        match *self {
            LineShape::Switch {
                from,
                upper: Action::Ln,
            } => Some(from),
            _ => None,
        }
    }
}

/// A line assignment given by a finite window and declared tails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineOracle {
    lo: i64,
    values: Vec<Action>,
    below: Action,
    above: Action,
}

impl LineOracle {
    /// `values[i]` is the action at `lo + i`; every `k` below the window is
    /// `below` and every `k` above it is `above`.
    pub fn new(lo: i64, values: Vec<Action>, below: Action, above: Action) -> Self {
        LineOracle {
            lo,
            values,
            below,
            above,
        }
    }

    /// Samples `f` on `lo..=hi` and declares the tails equal to the
    /// endpoint samples.
    pub fn sample(lo: i64, hi: i64, f: impl Fn(i64) -> Action) -> Self {
        let values: Vec<Action> = (lo..=hi).map(&f).collect();
        LineOracle {
            lo,
            below: f(lo),
            above: f(hi),
            values,
        }
    }

    pub fn shape(&self) -> Result<LineShape> {
        let seq: Vec<Action> = std::iter::once(self.below)
            .chain(self.values.iter().copied())
            .chain(std::iter::once(self.above))
            .collect();
        let switches: Vec<usize> = (1..seq.len()).filter(|&i| seq[i] != seq[i - 1]).collect();
        match switches.as_slice() {
            [] => Ok(LineShape::Constant(seq[0])),
            // seq[0] stands for every k < lo.
            [p] => Ok(LineShape::Switch {
                from: self.lo - 1 + *p as i64,
                upper: seq[*p],
            }),
            _ => Err(Error::NotAShadowPattern(format!(
                "{} switches between ln and in",
                switches.len()
            ))),
        }
    }
}

/// Recovers the class pattern from the shapes of `+β̇ + ℤδ` and `−β̇ + ℤδ`.
pub fn classify_shapes(plus: LineShape, minus: LineShape) -> Result<ClassConfig> {
    let config = match (plus, minus) {
        (LineShape::Constant(p), LineShape::Constant(q)) => ClassConfig::tight(p, q),
        (
            LineShape::Switch {
                from: a,
                upper: Action::Ln,
            },
            LineShape::Switch {
                from: b,
                upper: Action::Ln,
            },
        ) => ClassConfig::up(a, 1 - b - a),
        (
            LineShape::Switch {
                from: a,
                upper: Action::In,
            },
            LineShape::Switch {
                from: c,
                upper: Action::In,
            },
        ) => ClassConfig::down(a - 1, c + a - 1),
        _ => {
            return Err(Error::NotAShadowPattern(format!(
                "lines {plus:?} and {minus:?} do not couple"
            )))
        }
    };
    config
        .validate()
        .map_err(|_| Error::NotAShadowPattern(format!("{config} has t outside {{-1, 0, 1}}")))?;
    Ok(config)
}

/// Inverse of membership: the pattern realized by two line oracles.
pub fn classify_line(plus: &LineOracle, minus: &LineOracle) -> Result<ClassConfig> {
    classify_shapes(plus.shape()?, minus.shape()?)
}

/// A shadow on an affine root system.
#[derive(Debug, Clone, PartialEq)]
pub struct Shadow {
    system: AffineRootSystem,
    classes: BTreeMap<Root, ClassConfig>,
}

impl Shadow {
    /// Every real class of `system` must receive exactly one config, keyed
    /// by its canonical representative.
    pub fn new(system: &AffineRootSystem, classes: impl IntoIterator<Item = (Root, ClassConfig)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (rep, config) in classes {
            config.validate()?;
            let rep = rep.finite();
            if !system.is_real(&rep) {
                return Err(Error::InvalidShadow(format!("{rep} is not a real class")));
            }
            let (canon, _) = canonical_class(&rep);
            if canon != rep {
                return Err(Error::InvalidShadow(format!("{rep} is not canonical, use {canon}")));
            }
            if map.insert(rep.clone(), config).is_some() {
                return Err(Error::InvalidShadow(format!("{rep} configured twice")));
            }
        }
        for rep in system.real_classes() {
            if !map.contains_key(&rep) {
                return Err(Error::InvalidShadow(format!("class {rep} has no config")));
            }
        }
        Ok(Shadow {
            system: system.clone(),
            classes: map,
        })
    }

    /// The same config on every class.
    pub fn uniform(system: &AffineRootSystem, config: ClassConfig) -> Result<Self> {
        Shadow::new(system, system.real_classes().into_iter().map(|r| (r, config)))
    }

    /// `ln` where `ζ > 0`, `in` where `ζ < 0`. `ζ` must not vanish on a
    /// real root and `ζ(δ)` must be nonzero.
    pub fn from_functional(system: &AffineRootSystem, zeta: &LinearFunctional) -> Result<Self> {
        let d = zeta.delta_value()?;
        if d.is_zero() {
            return Err(Error::DegenerateFunctional("zeta(delta) = 0".into()));
        }
        let mut classes = Vec::new();
        for rep in system.real_classes() {
            let c = zeta.value(&rep);
            let plus = functional_shape(c, d, &rep)?;
            let minus = functional_shape(-c, d, &rep)?;
            classes.push((rep, classify_shapes(plus, minus)?));
        }
        Shadow::new(system, classes)
    }

    /// Configs on some classes; every remaining real class `β̇` must have
    /// `2β̇` among them and follows it (`β̇ + kδ` is ln iff `2β̇ + 2kδ` is).
    pub fn from_even_classes(
        system: &AffineRootSystem,
        classes: impl IntoIterator<Item = (Root, ClassConfig)>,
    ) -> Result<Self> {
        let given: BTreeMap<Root, ClassConfig> = classes.into_iter().collect();
        let mut all = given.clone();
        for rep in system.real_classes() {
            if given.contains_key(&rep) {
                continue;
            }
            let double = rep.scale(2);
            let (drep, dsign) = canonical_class(&double);
            let config = given.get(&drep).ok_or_else(|| {
                Error::InvalidShadow(format!("class {rep} has no config and {double} is not configured"))
            })?;
            let plus = halved(config.shape(dsign));
            let minus = halved(config.shape(-dsign));
            all.insert(rep, classify_shapes(plus, minus)?);
        }
        Shadow::new(system, all)
    }

    pub fn system(&self) -> &AffineRootSystem {
        &self.system
    }

    pub fn classes(&self) -> impl Iterator<Item = (&Root, &ClassConfig)> {
        self.classes.iter()
    }

    pub fn config(&self, rep: &Root) -> Option<&ClassConfig> {
        self.classes.get(rep)
    }

    /// Replaces the config of one class.
    pub fn with_class(&self, rep: &Root, config: ClassConfig) -> Result<Self> {
        config.validate()?;
        if !self.classes.contains_key(rep) {
            return Err(Error::InvalidShadow(format!("{rep} is not a class representative")));
        }
        let mut out = self.clone();
        out.classes.insert(rep.clone(), config);
        Ok(out)
    }

    /// Config of the class of `alpha`, with the sign of `alpha` relative to
    /// the representative.
    pub fn class_of(&self, alpha: &Root) -> Result<(&Root, &ClassConfig, i64)> {
        let (rep, sign) = canonical_class(alpha);
        self.classes
            .get_key_value(&rep)
            .map(|(r, c)| (r, c, sign))
            .ok_or_else(|| Error::NotRealRoot(alpha.to_string()))
    }

    /// Exact membership for any real root.
    pub fn membership(&self, alpha: &Root) -> Result<Action> {
        if !self.system.is_real(alpha) {
            return Err(Error::NotRealRoot(alpha.to_string()));
        }
        let (_, config, sign) = self.class_of(alpha)?;
        Ok(config.action(sign, alpha.delta()))
    }

    /// Real roots with `|k| ≤ window` acting locally nilpotently.
    pub fn ln_window(&self, window: i64) -> Vec<Root> {
        self.system
            .real_window(window)
            .into_iter()
            .filter(|r| self.membership(r) == Ok(Action::Ln))
            .collect()
    }
}

/// The shape of `k ↦ shape(2k)`.
fn halved(shape: LineShape) -> LineShape {
    match shape {
        LineShape::Constant(a) => LineShape::Constant(a),
        LineShape::Switch { from, upper } => LineShape::Switch {
            from: (from + 1).div_euclid(2),
            upper,
        },
    }
}

/// Shape of `k ↦ sign of c + k·d` as ln/in; `d ≠ 0`.
fn functional_shape(c: Q, d: Q, rep: &Root) -> Result<LineShape> {
    let x = -c / d;
    if x.is_integer() {
        return Err(Error::DegenerateFunctional(format!(
            "zeta vanishes on a root of the line through {rep}"
        )));
    }
    // c + k·d changes sign exactly when k passes x.
    let from = x.floor().to_integer() + 1;
    let upper = if d.is_positive() { Action::Ln } else { Action::In };
    Ok(LineShape::Switch { from, upper })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureRule {
    /// `(R^ln + R^ln) ∩ R_re ⊆ R^ln`.
    Sum,
    /// `(R^ln + 2R^ln) ∩ R_re ⊆ R^ln`.
    SumDouble,
}

impl ClosureRule {
    pub fn label(&self) -> &'static str {
        match self {
            ClosureRule::Sum => "ln+ln",
            ClosureRule::SumDouble => "ln+2ln",
        }
    }
}

/// A real `alpha + beta` (or `alpha + 2beta`) acting injectively although
/// both summands are `ln`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClosureViolation {
    pub rule: ClosureRule,
    pub alpha: Root,
    pub beta: Root,
    pub sum: Root,
}

impl fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plus = match self.rule {
            ClosureRule::Sum => "+",
            ClosureRule::SumDouble => "+2*",
        };
        write!(
            f,
            "{} {plus} ({}) = {} is real and in, expected ln",
            self.alpha, self.beta, self.sum
        )
    }
}

/// Checks both closure laws over all `ln` summands with `|k| ≤ window`. The
/// sum is tested exactly, whatever its `δ`-multiplicity.
pub fn check_closure_38(shadow: &Shadow, window: i64) -> Vec<ClosureViolation> {
    let mut out = Vec::new();
    scan_closure(shadow, window, |v| {
        out.push(v);
        true
    });
    out
}

/// The first violation [`check_closure_38`] would report.
pub fn first_closure_violation(shadow: &Shadow, window: i64) -> Option<ClosureViolation> {
    let mut found = None;
    scan_closure(shadow, window, |v| {
        found = Some(v);
        false
    });
    found
}

/// Feeds violations to `sink` until it returns `false`.
fn scan_closure(shadow: &Shadow, window: i64, mut sink: impl FnMut(ClosureViolation) -> bool) {
    let system = shadow.system();
    let ln = shadow.ln_window(window);
    let mut test = |rule, alpha: &Root, beta: &Root, sum: Root| {
        if system.is_real(&sum) && shadow.membership(&sum) == Ok(Action::In) {
            return sink(ClosureViolation {
                rule,
                alpha: alpha.clone(),
                beta: beta.clone(),
                sum,
            });
        }
        true
    };
    for (i, a) in ln.iter().enumerate() {
        for (j, b) in ln.iter().enumerate() {
            if i <= j && !test(ClosureRule::Sum, a, b, a + b) {
                return;
            }
            if !test(ClosureRule::SumDouble, a, b, a + &b.scale(2)) {
                return;
            }
        }
    }
}

/// Whether the hybrid classes among `reps` share one direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Uniformity {
    AllUp,
    AllDown,
    Mixed,
    NoneHybrid,
}

impl Uniformity {
    pub fn label(&self) -> &'static str {
        match self {
            Uniformity::AllUp => "all up-nilpotent hybrid",
            Uniformity::AllDown => "all down-nilpotent hybrid",
            Uniformity::Mixed => "mixed",
            Uniformity::NoneHybrid => "no hybrid class",
        }
    }
}

/// Scans the classes of the real finite parts `reps`.
pub fn uniform_hybrid_check<'a>(shadow: &Shadow, reps: impl IntoIterator<Item = &'a Root>) -> Result<Uniformity> {
    let mut up = false;
    let mut down = false;
    for r in reps {
        let (_, config, _) = shadow.class_of(r)?;
        match config.direction() {
            Some(Direction::Up) => up = true,
            Some(Direction::Down) => down = true,
            None => {}
        }
    }
    Ok(match (up, down) {
        (true, true) => Uniformity::Mixed,
        (true, false) => Uniformity::AllUp,
        (false, true) => Uniformity::AllDown,
        (false, false) => Uniformity::NoneHybrid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{build_affine, AffineTypeId};
    use crate::scalar::{q, qi};

    fn line(config: &ClassConfig, sign: i64) -> LineOracle {
        LineOracle::sample(-12, 12, |k| config.action(sign, k))
    }

    #[test]
    fn up_hybrid_membership() {
        let c = ClassConfig::up(0, 0);
        assert_eq!(c.action(1, 0), Action::Ln);
        assert_eq!(c.action(1, -1), Action::In);
        assert_eq!(c.action(-1, 1), Action::Ln);
        assert_eq!(c.action(-1, 0), Action::In);
    }

    #[test]
    fn down_hybrid_membership() {
        let c = ClassConfig::down(1, -1);
        assert_eq!(c.action(1, 2), Action::In);
        assert_eq!(c.action(1, 1), Action::Ln);
        assert_eq!(c.action(-1, -2), Action::In);
        assert_eq!(c.action(-1, -3), Action::Ln);
    }

    #[test]
    fn classify_line_inverts_membership() {
        for m in -3..=3 {
            for t in -1..=1 {
                for c in [ClassConfig::up(m, t), ClassConfig::down(m, t)] {
                    assert_eq!(classify_line(&line(&c, 1), &line(&c, -1)).unwrap(), c);
                }
            }
        }
        let tight = ClassConfig::tight(Action::Ln, Action::In);
        assert_eq!(classify_line(&line(&tight, 1), &line(&tight, -1)).unwrap(), tight);
    }

    #[test]
    fn alternating_lines_are_rejected() {
        let alt = LineOracle::sample(-4, 4, |k| if k % 2 == 0 { Action::Ln } else { Action::In });
        let full = LineOracle::sample(-4, 4, |_| Action::Ln);
        assert!(matches!(classify_line(&alt, &full), Err(Error::NotAShadowPattern(_))));
        // An up line against a down line does not couple.
        let up = line(&ClassConfig::up(0, 0), 1);
        let down = line(&ClassConfig::down(0, 0), -1);
        assert!(classify_line(&up, &down).is_err());
        // Thresholds too far apart give t outside the admissible range.
        let far = LineOracle::sample(-8, 8, |k| if k >= 5 { Action::Ln } else { Action::In });
        assert!(classify_line(&up, &far).is_err());
    }

    #[test]
    fn naming() {
        assert!(ClassConfig::up(0, 0).is_hybrid());
        assert!(ClassConfig::down(-2, 1).is_hybrid());
        assert!(ClassConfig::tight(Action::Ln, Action::In).is_tight());
    }

    #[test]
    fn closure_trivial_cases() {
        let s = build_affine(AffineTypeId::B { m: 1, n: 1 }).unwrap();
        let ln = Shadow::uniform(&s, ClassConfig::tight(Action::Ln, Action::Ln)).unwrap();
        assert!(check_closure_38(&ln, 3).is_empty());
        let inj = Shadow::uniform(&s, ClassConfig::tight(Action::In, Action::In)).unwrap();
        assert!(check_closure_38(&inj, 3).is_empty());
    }

    #[test]
    fn odd_and_doubled_classes_must_agree() {
        let s = build_affine(AffineTypeId::B { m: 1, n: 1 }).unwrap();
        let base = Shadow::uniform(&s, ClassConfig::up(0, 0)).unwrap();
        let rep = s.parse_root("-2d1").unwrap();
        let bad = base.with_class(&rep, ClassConfig::down(0, 0)).unwrap();
        let v = check_closure_38(&bad, 3);
        assert!(!v.is_empty());
        for w in &v {
            assert_eq!(bad.membership(&w.alpha).unwrap(), Action::Ln);
            assert_eq!(bad.membership(&w.beta).unwrap(), Action::Ln);
            assert_eq!(bad.membership(&w.sum).unwrap(), Action::In);
        }
        assert!(check_closure_38(&base, 3).is_empty());
    }

    #[test]
    fn functional_shadows_are_hybrid_with_t_zero() {
        let s = build_affine(AffineTypeId::D21).unwrap();
        let z = LinearFunctional::on_ambient(s.ambient(), &[q(1, 3), q(-2, 7), q(5, 11)], qi(1), qi(0)).unwrap();
        let sh = Shadow::from_functional(&s, &z).unwrap();
        for (rep, c) in sh.classes() {
            assert!(matches!(
                c,
                ClassConfig::Hybrid {
                    direction: Direction::Up,
                    t: 0,
                    ..
                }
            ));
            for k in -4..=4 {
                let r = rep.shifted(k);
                let expect = if z.value(&r) > qi(0) { Action::Ln } else { Action::In };
                assert_eq!(sh.membership(&r).unwrap(), expect);
            }
        }
        assert_eq!(
            uniform_hybrid_check(&sh, sh.classes().map(|(r, _)| r)).unwrap(),
            Uniformity::AllUp
        );
    }

    #[test]
    fn shadows_must_cover_every_class() {
        let s = build_affine(AffineTypeId::B { m: 1, n: 1 }).unwrap();
        let rep = s.real_classes()[0].clone();
        assert!(matches!(
            Shadow::new(&s, [(rep, ClassConfig::up(0, 0))]),
            Err(Error::InvalidShadow(_))
        ));
        assert!(Shadow::uniform(&s, ClassConfig::up(0, 2)).is_err());
    }
}
