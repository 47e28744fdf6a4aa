//! Finite root supersystems: construction, axiom checks, root strings and
//! irreducible components.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::form::{cartan_integer, FormTable};
use crate::linalg;
use crate::pure::{identify_pure, PureType};
use crate::root::{Ambient, Root};
use crate::scalar::{q, qi, LambdaMode, Q};

/// Kind of a root, computed from the form alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    Zero,
    Imaginary,
    Real,
    Nonsingular,
}

impl RootKind {
    pub fn label(&self) -> &'static str {
        match self {
            RootKind::Zero => "Zero",
            RootKind::Imaginary => "Imaginary",
            RootKind::Real => "Real",
            RootKind::Nonsingular => "Nonsingular",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn label(&self) -> &'static str {
        match self {
            Parity::Even => "Even",
            Parity::Odd => "Odd",
        }
    }

    fn of_integer(g: i64) -> Parity {
        if g.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Finite types. Rank conventions: `A { m, n }` is `sl(m+1|n+1)` with
/// `m+1` letters `ε̇` and `n+1` letters `δ̇`; the orthosymplectic families
/// use `m` and `n` letters directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteTypeId {
    A {
        m: usize,
        n: usize,
    },
    /// `A(n,n)` in traceless coordinates.
    Ann {
        n: usize,
    },
    B {
        m: usize,
        n: usize,
    },
    C {
        m: usize,
        n: usize,
    },
    /// Includes `C(n) = D(1, n−1)`.
    D {
        m: usize,
        n: usize,
    },
    BC {
        m: usize,
        n: usize,
    },
    D21,
    F4,
    G3,
    /// The degenerate set `𝔰(m−1, m−1)` with `m` letters of each kind.
    Degenerate {
        m: usize,
    },
    Pure(PureType),
    /// A subset carved out of a larger system.
    Custom(String),
}

impl FiniteTypeId {
    /// Rank parameters in the order they are written.
    pub fn ranks(&self) -> Vec<usize> {
        match *self {
            FiniteTypeId::A { m, n }
            | FiniteTypeId::B { m, n }
            | FiniteTypeId::C { m, n }
            | FiniteTypeId::D { m, n }
            | FiniteTypeId::BC { m, n } => vec![m, n],
            FiniteTypeId::Ann { n } => vec![n, n],
            FiniteTypeId::Degenerate { m } => vec![m - 1, m - 1],
            FiniteTypeId::Pure(p) => vec![p.rank],
            _ => Vec::new(),
        }
    }

    pub fn ambient(&self) -> Result<Ambient> {
        Ok(match *self {
            FiniteTypeId::A { m, n } => Ambient::EpsDelta { m: m + 1, n: n + 1 },
            FiniteTypeId::Ann { n } => Ambient::EpsDelta { m: n + 1, n: n + 1 },
            FiniteTypeId::B { m, n }
            | FiniteTypeId::C { m, n }
            | FiniteTypeId::D { m, n }
            | FiniteTypeId::BC { m, n } => Ambient::EpsDelta { m, n },
            FiniteTypeId::D21 => Ambient::Gamma,
            FiniteTypeId::F4 => Ambient::F4,
            FiniteTypeId::G3 => Ambient::G3,
            FiniteTypeId::Degenerate { m } => Ambient::EpsDelta { m, n: m },
            FiniteTypeId::Pure(_) | FiniteTypeId::Custom(_) => {
                return Err(Error::UnknownType(format!("{self} has no standard ambient")))
            }
        })
    }

    /// Parses `B,1,2`-style specs; `s,m` is the degenerate set with `m`
    /// letters of each kind.
    pub fn parse(text: &str) -> Result<FiniteTypeId> {
        let t = text.trim();
        match t {
            "D21" | "D21L" | "D(2,1;λ)" | "D(2,1;lambda)" => return Ok(FiniteTypeId::D21),
            "F4" | "F(4)" => return Ok(FiniteTypeId::F4),
            "G3" | "G(3)" => return Ok(FiniteTypeId::G3),
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
            ("A", &[m, n]) if m == n => FiniteTypeId::Ann { n },
            ("A", &[m, n]) => FiniteTypeId::A { m, n },
            ("B", &[m, n]) => FiniteTypeId::B { m, n },
            ("C", &[m, n]) => FiniteTypeId::C { m, n },
            ("D", &[m, n]) => FiniteTypeId::D { m, n },
            ("BC", &[m, n]) => FiniteTypeId::BC { m, n },
            ("s", &[m]) => FiniteTypeId::Degenerate { m },
            _ => return Err(Error::UnknownType(text.to_string())),
        };
        ty.validate()?;
        Ok(ty)
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::Rank(format!("{self}: {why}")));
        match *self {
            FiniteTypeId::A { m, n } if m == n => bad("use A(n,n) for equal ranks"),
            FiniteTypeId::Ann { n: 0 } => bad("n must be at least 1"),
            FiniteTypeId::B { n: 0, .. } => bad("n must be positive"),
            FiniteTypeId::C { m, n } | FiniteTypeId::D { m, n } | FiniteTypeId::BC { m, n } if m + n == 0 => {
                bad("m + n must be positive")
            }
            FiniteTypeId::Degenerate { m } if m < 2 => bad("m must be at least 2"),
            FiniteTypeId::Pure(_) | FiniteTypeId::Custom(_) => bad("not constructible by rule"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FiniteTypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteTypeId::A { m, n } => write!(f, "A({m},{n})"),
            FiniteTypeId::Ann { n } => write!(f, "A({n},{n})"),
            FiniteTypeId::B { m, n } => write!(f, "B({m},{n})"),
            FiniteTypeId::C { m, n } => write!(f, "C({m},{n})"),
            FiniteTypeId::D { m, n } => write!(f, "D({m},{n})"),
            FiniteTypeId::BC { m, n } => write!(f, "BC({m},{n})"),
            FiniteTypeId::D21 => f.write_str("D(2,1;λ)"),
            FiniteTypeId::F4 => f.write_str("F(4)"),
            FiniteTypeId::G3 => f.write_str("G(3)"),
            FiniteTypeId::Degenerate { m } => write!(f, "s({},{})", m - 1, m - 1),
            FiniteTypeId::Pure(p) => write!(f, "{p}"),
            FiniteTypeId::Custom(s) => f.write_str(s),
        }
    }
}

/// A finite set of roots containing zero, with its form and parities.
#[derive(Debug, Clone)]
pub struct FiniteRootSet {
    type_id: FiniteTypeId,
    form: FormTable,
    roots: Vec<Root>,
    parities: Vec<Parity>,
    index: HashMap<Root, usize>,
}

impl FiniteRootSet {
    /// Assembles a set from explicit roots. Duplicates are merged; nothing
    /// else is validated, so the axiom checker can inspect arbitrary sets.
    pub fn from_parts(
        type_id: FiniteTypeId,
        form: FormTable,
        entries: impl IntoIterator<Item = (Root, Parity)>,
    ) -> Self {
        let mut sorted: Vec<(Root, Parity)> = entries.into_iter().collect();
        sorted.sort();
        sorted.dedup_by(|a, b| a.0 == b.0);
        let (roots, parities): (Vec<Root>, Vec<Parity>) = sorted.into_iter().unzip();
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        FiniteRootSet {
            type_id,
            form,
            roots,
            parities,
            index,
        }
    }

    pub fn type_id(&self) -> &FiniteTypeId {
        &self.type_id
    }

    pub fn form(&self) -> &FormTable {
        &self.form
    }

    pub fn ambient(&self) -> Ambient {
        self.form.ambient()
    }

    /// All roots including zero, sorted.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Root::zero(self.ambient()))
    }

    pub fn parity_of(&self, r: &Root) -> Option<Parity> {
        self.index.get(r).map(|&i| self.parities[i])
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Root, Parity)> {
        self.roots.iter().zip(self.parities.iter().copied())
    }

    /// Roots other than zero.
    pub fn nonzero(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| !r.is_zero())
    }

    /// Kind of `r` relative to this set.
    pub fn kind_of(&self, r: &Root) -> Result<RootKind> {
        if r.is_zero() {
            return Ok(RootKind::Zero);
        }
        if self.form.norm(r)?.is_nonzero()? {
            return Ok(RootKind::Real);
        }
        for s in &self.roots {
            if !self.form.pair(r, s)?.is_zero() {
                return Ok(RootKind::Nonsingular);
            }
        }
        Ok(RootKind::Imaginary)
    }

    /// `T×`: roots not orthogonal to the whole set.
    pub fn non_imaginary(&self) -> Result<Vec<Root>> {
        let mut out = Vec::new();
        for r in &self.roots {
            if !matches!(self.kind_of(r)?, RootKind::Zero | RootKind::Imaginary) {
                out.push(r.clone());
            }
        }
        Ok(out)
    }

    /// Real roots, sorted.
    pub fn real_roots(&self) -> Result<Vec<Root>> {
        let mut out = Vec::new();
        for r in self.nonzero() {
            if self.form.norm(r)?.is_nonzero()? {
                out.push(r.clone());
            }
        }
        Ok(out)
    }

    /// The even roots, zero included.
    pub fn even_part(&self) -> FiniteRootSet {
        FiniteRootSet::from_parts(
            FiniteTypeId::Custom(format!("even part of {}", self.type_id)),
            self.form.clone(),
            self.entries()
                .filter(|(_, p)| *p == Parity::Even)
                .map(|(r, p)| (r.clone(), p)),
        )
    }

    /// Copy with a different type label.
    pub fn relabeled(&self, type_id: FiniteTypeId) -> FiniteRootSet {
        let mut out = self.clone();
        out.type_id = type_id;
        out
    }

    /// Copy with the roots `removed` dropped.
    pub fn without(&self, removed: &[Root]) -> FiniteRootSet {
        FiniteRootSet::from_parts(
            self.type_id.clone(),
            self.form.clone(),
            self.entries()
                .filter(|(r, _)| !removed.contains(r))
                .map(|(r, p)| (r.clone(), p)),
        )
    }

    /// Dimension of the linear span.
    pub fn span_rank(&self) -> usize {
        let rows: Vec<Vec<Q>> = self.roots.iter().map(|r| r.coords().to_vec()).collect();
        linalg::rank(&rows)
    }

    /// A basis of the span chosen greedily among the roots.
    pub fn span_basis(&self) -> Vec<Root> {
        let rows: Vec<Vec<Q>> = self.roots.iter().map(|r| r.coords().to_vec()).collect();
        linalg::independent_rows(&rows)
            .into_iter()
            .map(|i| self.roots[i].clone())
            .collect()
    }
}

fn ed(m: usize, n: usize, eps: &[(usize, i64)], del: &[(usize, i64)]) -> Root {
    let amb = Ambient::EpsDelta { m, n };
    let mut c = vec![Q::zero(); m + n];
    for &(i, x) in eps {
        c[i] += qi(x);
    }
    for &(j, x) in del {
        c[m + j] += qi(x);
    }
    Root::new(amb, c, 0, 0)
}

/// Parity by a grading functional that is integral on the roots.
fn graded(root: Root, grading: impl Fn(&Root) -> Q) -> (Root, Parity) {
    let g = grading(&root);
    debug_assert!(g.is_integer(), "grading must be integral on roots");
    let p = Parity::of_integer(g.to_integer());
    (root, p)
}

fn delta_sum(m: usize) -> impl Fn(&Root) -> Q {
    move |r: &Root| r.coords()[m..].iter().copied().sum()
}

fn signs() -> [i64; 2] {
    [1, -1]
}

/// Roots `±ε̇_i ± ε̇_r`, `±δ̇_j ± δ̇_s`, `±ε̇_i ± δ̇_j` with the given index
/// restrictions, plus optional short roots.
fn orthosymplectic(m: usize, n: usize, distinct_eps: bool, short_eps: bool, short_delta: bool) -> Vec<Root> {
    let mut out = vec![ed(m, n, &[], &[])];
    for i in 0..m {
        for r in 0..m {
            if distinct_eps && i == r {
                continue;
            }
            for s1 in signs() {
                for s2 in signs() {
                    out.push(ed(m, n, &[(i, s1), (r, s2)], &[]));
                }
            }
        }
        for j in 0..n {
            for s1 in signs() {
                for s2 in signs() {
                    out.push(ed(m, n, &[(i, s1)], &[(j, s2)]));
                }
            }
        }
        if short_eps {
            for s in signs() {
                out.push(ed(m, n, &[(i, s)], &[]));
            }
        }
    }
    for j in 0..n {
        for s in 0..n {
            for s1 in signs() {
                for s2 in signs() {
                    out.push(ed(m, n, &[], &[(j, s1), (s, s2)]));
                }
            }
        }
        if short_delta {
            for s in signs() {
                out.push(ed(m, n, &[], &[(j, s)]));
            }
        }
    }
    out
}

/// Projection of `gl` coordinates onto the traceless complement of the
/// radical `I = Σε̇_k − Σδ̇_k`.
pub(crate) fn traceless(r: &Root, m: usize) -> Root {
    let s: Q = r.coords()[..m].iter().copied().sum::<Q>() - r.coords()[m..].iter().copied().sum::<Q>();
    let c = s / qi(2 * m as i64);
    let coords = r
        .coords()
        .iter()
        .enumerate()
        .map(|(k, x)| if k < m { *x - c } else { *x + c })
        .collect();
    Root::new(r.ambient(), coords, r.delta(), r.sigma())
}

/// Builds the finite set of `type_id` in symbolic `λ` mode.
pub fn build_finite(type_id: FiniteTypeId) -> Result<FiniteRootSet> {
    build_finite_with(type_id, LambdaMode::Symbolic)
}

/// Builds the finite set of `type_id` with the given `λ` mode.
pub fn build_finite_with(type_id: FiniteTypeId, mode: LambdaMode) -> Result<FiniteRootSet> {
    type_id.validate()?;
    let ambient = type_id.ambient()?;
    let form = FormTable::for_ambient(ambient, mode);
    let entries: Vec<(Root, Parity)> = match type_id {
        FiniteTypeId::A { m, n } => {
            let (m, n) = (m + 1, n + 1);
            linear_family(m, n)
                .into_iter()
                .map(|r| graded(r, delta_sum(m)))
                .collect()
        }
        FiniteTypeId::Degenerate { m } => linear_family(m, m)
            .into_iter()
            .map(|r| graded(r, delta_sum(m)))
            .collect(),
        FiniteTypeId::Ann { n } => {
            let m = n + 1;
            let mut out = Vec::new();
            for (r, odd) in linear_family_tagged(m, m) {
                let p = if odd { Parity::Odd } else { Parity::Even };
                out.push((traceless(&r, m), p));
            }
            out
        }
        FiniteTypeId::B { m, n } => orthosymplectic(m, n, true, true, true)
            .into_iter()
            .map(|r| graded(r, delta_sum(m)))
            .collect(),
        FiniteTypeId::C { m, n } => orthosymplectic(m, n, false, false, false)
            .into_iter()
            .map(|r| graded(r, delta_sum(m)))
            .collect(),
        FiniteTypeId::D { m, n } => orthosymplectic(m, n, true, false, false)
            .into_iter()
            .map(|r| graded(r, delta_sum(m)))
            .collect(),
        FiniteTypeId::BC { m, n } => orthosymplectic(m, n, false, true, true)
            .into_iter()
            .map(|r| graded(r, delta_sum(m)))
            .collect(),
        FiniteTypeId::D21 => {
            let mut out = vec![Root::zero(ambient)];
            for i in 0..3 {
                for s in signs() {
                    let mut c = [0; 3];
                    c[i] = 2 * s;
                    out.push(Root::from_ints(ambient, &c));
                }
            }
            for a in signs() {
                for b in signs() {
                    for c in signs() {
                        out.push(Root::from_ints(ambient, &[a, b, c]));
                    }
                }
            }
            out.into_iter().map(|r| graded(r, |r| r.coords()[0])).collect()
        }
        FiniteTypeId::F4 => {
            let mut out = vec![Root::zero(ambient)];
            let unit = |i: usize, s: i64| {
                let mut c = [0; 4];
                c[i] = s;
                c
            };
            for s in signs() {
                out.push(Root::from_ints(ambient, &unit(0, s)));
            }
            for i in 1..4 {
                for s in signs() {
                    out.push(Root::from_ints(ambient, &unit(i, s)));
                }
                for j in 1..4 {
                    if i == j {
                        continue;
                    }
                    for s1 in signs() {
                        for s2 in signs() {
                            let mut c = unit(i, s1);
                            c[j] = s2;
                            out.push(Root::from_ints(ambient, &c));
                        }
                    }
                }
            }
            let half = q(1, 2);
            for a in signs() {
                for b in signs() {
                    for c in signs() {
                        for d in signs() {
                            let coords = [a, b, c, d].iter().map(|&x| qi(x) * half).collect();
                            out.push(Root::new(ambient, coords, 0, 0));
                        }
                    }
                }
            }
            out.into_iter().map(|r| graded(r, |r| r.coords()[0] * qi(2))).collect()
        }
        FiniteTypeId::G3 => {
            let mut out = vec![Root::zero(ambient)];
            for s in signs() {
                out.push(Root::from_ints(ambient, &[s, 0, 0, 0]));
                out.push(Root::from_ints(ambient, &[2 * s, 0, 0, 0]));
            }
            for i in 1..4 {
                for j in 1..4 {
                    if i == j {
                        continue;
                    }
                    let mut diff = [0i64; 4];
                    diff[i] = 1;
                    diff[j] = -1;
                    out.push(Root::from_ints(ambient, &diff));
                    for s in signs() {
                        let mut c = diff;
                        c[0] = s;
                        out.push(Root::from_ints(ambient, &c));
                    }
                    // 2ε̇_i − ε̇_j − ε̇_t with {i, j, t} = {1, 2, 3}.
                    let t = 6 - i - j;
                    for s in signs() {
                        let mut c = [0i64; 4];
                        c[i] = 2 * s;
                        c[j] = -s;
                        c[t] = -s;
                        out.push(Root::from_ints(ambient, &c));
                    }
                }
            }
            out.into_iter().map(|r| graded(r, |r| r.coords()[0])).collect()
        }
        FiniteTypeId::Pure(_) | FiniteTypeId::Custom(_) => unreachable!("rejected by validate"),
    };
    Ok(FiniteRootSet::from_parts(type_id, form, entries))
}

/// `ε̇_i − ε̇_r`, `δ̇_j − δ̇_s`, `±(ε̇_i − δ̇_j)` over `m` and `n` letters.
fn linear_family(m: usize, n: usize) -> Vec<Root> {
    linear_family_tagged(m, n).into_iter().map(|(r, _)| r).collect()
}

fn linear_family_tagged(m: usize, n: usize) -> Vec<(Root, bool)> {
    let mut out = vec![(ed(m, n, &[], &[]), false)];
    for i in 0..m {
        for r in 0..m {
            if i != r {
                out.push((ed(m, n, &[(i, 1), (r, -1)], &[]), false));
            }
        }
    }
    for j in 0..n {
        for s in 0..n {
            if j != s {
                out.push((ed(m, n, &[], &[(j, 1), (s, -1)]), false));
            }
        }
    }
    for i in 0..m {
        for j in 0..n {
            out.push((ed(m, n, &[(i, 1)], &[(j, -1)]), true));
            out.push((ed(m, n, &[(i, -1)], &[(j, 1)]), true));
        }
    }
    out
}

/// The axioms checked by [`check_supersystem_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Finite, contains zero.
    ContainsZero,
    /// `T = −T`.
    Symmetric,
    /// `⟨β, α⟩ ∈ ℤ` for real `α`.
    Integrality,
    /// Unbroken `α`-strings with `p − q = ⟨β, α⟩`.
    RootStrings,
    /// `{β − α, β + α} ∩ T ≠ ∅` for nonsingular `α` with `(α, β) ≠ 0`.
    Nonsingular,
    /// The form is nondegenerate on the span.
    Nondegenerate,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::ContainsZero,
        Axiom::Symmetric,
        Axiom::Integrality,
        Axiom::RootStrings,
        Axiom::Nonsingular,
        Axiom::Nondegenerate,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Axiom::ContainsZero => "(a) finite, contains 0",
            Axiom::Symmetric => "(b) T = -T",
            Axiom::Integrality => "(c) integral Cartan numbers",
            Axiom::RootStrings => "(d) unbroken root strings",
            Axiom::Nonsingular => "(e) nonsingular pairing",
            Axiom::Nondegenerate => "(f) nondegenerate form",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub passed: bool,
    /// Number of instances examined.
    pub checked: usize,
    /// First failing instance.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub type_label: String,
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failed(&self) -> Vec<Axiom> {
        self.outcomes.iter().filter(|o| !o.passed).map(|o| o.axiom).collect()
    }

    pub fn outcome(&self, axiom: Axiom) -> &AxiomOutcome {
        self.outcomes
            .iter()
            .find(|o| o.axiom == axiom)
            .expect("every axiom has an outcome")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "axioms for {}", self.type_label)?;
        for o in &self.outcomes {
            write!(
                f,
                "  {:<30} {} ({} checked)",
                o.axiom.label(),
                if o.passed { "PASS" } else { "FAIL" },
                o.checked
            )?;
            if let Some(w) = &o.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Integer `k` with `v = k·alpha`, if any.
fn integer_multiple(v: &Root, alpha: &Root) -> Option<i64> {
    let i = alpha.coords().iter().position(|x| !x.is_zero())?;
    let k = v.coords()[i] / alpha.coords()[i];
    if !k.is_integer() {
        return None;
    }
    let k = k.to_integer();
    (&alpha.scale(k) == v).then_some(k)
}

/// The `α`-string through `β`: `(p, q, β − pα, …, β + qα)`.
pub fn root_string(set: &FiniteRootSet, alpha: &Root, beta: &Root) -> Result<(i64, i64, Vec<Root>)> {
    if !set.contains(alpha) || !set.contains(beta) {
        return Err(Error::NotARoot(format!("{alpha} or {beta}")));
    }
    if !set.form().norm(alpha)?.is_nonzero()? {
        return Err(Error::IsotropicReflection(alpha.to_string()));
    }
    let mut ks: Vec<i64> = set
        .roots()
        .iter()
        .filter_map(|g| integer_multiple(&(g - beta), alpha))
        .collect();
    ks.sort_unstable();
    let (lo, hi) = (ks[0], *ks.last().expect("β itself is on the string"));
    if ks.len() as i64 != hi - lo + 1 {
        return Err(Error::AxiomViolation(format!(
            "{alpha}-string through {beta} is broken: steps {ks:?}"
        )));
    }
    let (p, q) = (-lo, hi);
    let pairing = cartan_integer(beta, alpha, set.form())?;
    if p - q != pairing {
        return Err(Error::AxiomViolation(format!(
            "{alpha}-string through {beta}: p - q = {} but <β,α> = {pairing}",
            p - q
        )));
    }
    let string = (lo..=hi).map(|k| beta + &alpha.scale(k)).collect();
    Ok((p, q, string))
}

/// Admissible `λ` sample points for generic-rank computations.
fn lambda_samples(mode: LambdaMode, count: usize) -> Vec<Q> {
    match mode {
        LambdaMode::Value(v) => vec![v],
        LambdaMode::Symbolic => (1..=count as i64).map(qi).collect(),
    }
}

/// Runs the six supersystem checks; failures become report entries.
pub fn check_supersystem_axioms(set: &FiniteRootSet) -> AxiomReport {
    let form = set.form();
    let mut outcomes = Vec::new();

    outcomes.push(AxiomOutcome {
        axiom: Axiom::ContainsZero,
        passed: set.contains_zero(),
        checked: 1,
        witness: (!set.contains_zero()).then(|| "0 missing".to_string()),
    });

    let asym = set.roots().iter().find(|r| !set.contains(&-*r));
    outcomes.push(AxiomOutcome {
        axiom: Axiom::Symmetric,
        passed: asym.is_none(),
        checked: set.len(),
        witness: asym.map(|r| format!("{r} present but {} missing", -r)),
    });

    // Kinds; a sign ambiguity counts against integrality.
    let mut real = Vec::new();
    let mut nonsingular = Vec::new();
    let mut kind_error = None;
    for r in set.nonzero() {
        match set.kind_of(r) {
            Ok(RootKind::Real) => real.push(r.clone()),
            Ok(RootKind::Nonsingular) => nonsingular.push(r.clone()),
            Ok(_) => {}
            Err(e) => kind_error = Some(format!("{r}: {e}")),
        }
    }

    let mut integrality = (0usize, kind_error);
    let mut strings = (0usize, None::<String>);
    for a in &real {
        for b in set.roots() {
            integrality.0 += 1;
            if let Err(e) = cartan_integer(b, a, form) {
                integrality.1.get_or_insert(format!("<{b}, {a}>: {e}"));
                continue;
            }
            strings.0 += 1;
            if let Err(e) = root_string(set, a, b) {
                strings.1.get_or_insert(e.to_string());
            }
        }
    }
    outcomes.push(AxiomOutcome {
        axiom: Axiom::Integrality,
        passed: integrality.1.is_none(),
        checked: integrality.0,
        witness: integrality.1,
    });
    outcomes.push(AxiomOutcome {
        axiom: Axiom::RootStrings,
        passed: strings.1.is_none(),
        checked: strings.0,
        witness: strings.1,
    });

    let mut ns = (0usize, None::<String>);
    for a in &nonsingular {
        for b in set.roots() {
            let pairing = match form.pair(a, b) {
                Ok(p) => p,
                Err(e) => {
                    ns.1.get_or_insert(e.to_string());
                    continue;
                }
            };
            if pairing.is_zero() {
                continue;
            }
            ns.0 += 1;
            if !set.contains(&(b - a)) && !set.contains(&(b + a)) {
                ns.1.get_or_insert(format!("alpha = {a}, beta = {b}"));
            }
        }
    }
    outcomes.push(AxiomOutcome {
        axiom: Axiom::Nonsingular,
        passed: ns.1.is_none(),
        checked: ns.0,
        witness: ns.1,
    });

    // Generic rank over λ: a nonzero determinant of degree ≤ dim is nonzero
    // at one of dim + 1 distinct sample points.
    let basis = set.span_basis();
    let dim = basis.len();
    let mut best = 0;
    for lambda in lambda_samples(form.lambda_mode(), dim + 1) {
        if let Ok(g) = form.gram_of(&basis, lambda) {
            best = best.max(linalg::rank(&g));
        }
    }
    outcomes.push(AxiomOutcome {
        axiom: Axiom::Nondegenerate,
        passed: best == dim,
        checked: 1,
        witness: (best != dim).then(|| format!("Gram rank {best} on a span of dimension {dim}")),
    });

    AxiomReport {
        type_label: set.type_id().to_string(),
        outcomes,
    }
}

/// Connected components of `T×` under nonzero pairing, each with 0 adjoined.
///
/// Components are ordered by their largest root, descending.
pub fn irreducible_components(set: &FiniteRootSet) -> Result<Vec<FiniteRootSet>> {
    let nodes = set.non_imaginary()?;
    let n = nodes.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !set.form().pair(&nodes[i], &nodes[j])?.is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Root>> = HashMap::new();
    for (i, r) in nodes.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(r.clone());
    }
    let mut groups: Vec<Vec<Root>> = groups.into_values().collect();
    for g in &mut groups {
        g.sort();
    }
    groups.sort_by(|a, b| b.last().cmp(&a.last()));

    let single = groups.len() == 1;
    let zero = Root::zero(set.ambient());
    let mut out = Vec::new();
    for (idx, g) in groups.into_iter().enumerate() {
        let members: BTreeSet<Root> = g.iter().cloned().collect();
        let entries = set
            .entries()
            .filter(|(r, _)| members.contains(*r) || **r == zero)
            .map(|(r, p)| (r.clone(), p));
        let component = FiniteRootSet::from_parts(FiniteTypeId::Custom(String::new()), set.form().clone(), entries);
        let label = if single && component.len() == set.len() {
            set.type_id().clone()
        } else if let Some(p) = identify_pure(&component) {
            FiniteTypeId::Pure(p)
        } else {
            FiniteTypeId::Custom(format!("component {} of {}", idx + 1, set.type_id()))
        };
        out.push(component.relabeled(label));
    }
    Ok(out)
}

/// Ratio `(α, α)/(β, β)` when it is a rational constant.
pub(crate) fn length_ratio(form: &FormTable, a: &Root, b: &Root) -> Option<Q> {
    let na = form.norm(a).ok()?;
    let nb = form.norm(b).ok()?;
    na.checked_div(&nb).ok()?.as_rational()
}

/// True when `c` is `±1`.
pub(crate) fn is_unit(c: &Q) -> bool {
    c.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b11() -> FiniteRootSet {
        build_finite(FiniteTypeId::B { m: 1, n: 1 }).unwrap()
    }

    #[test]
    fn documented_cardinalities() {
        assert_eq!(build_finite(FiniteTypeId::D21).unwrap().len(), 15);
        assert_eq!(b11().len(), 11);
        let b01 = build_finite(FiniteTypeId::B { m: 0, n: 1 }).unwrap();
        assert_eq!(b01.len(), 5);
        assert_eq!(build_finite(FiniteTypeId::F4).unwrap().len(), 37);
        assert_eq!(build_finite(FiniteTypeId::G3).unwrap().len(), 29);
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        assert!(matches!(
            build_finite(FiniteTypeId::B { m: 1, n: 0 }),
            Err(Error::Rank(_))
        ));
        assert!(build_finite(FiniteTypeId::A { m: 1, n: 1 }).is_err());
        assert!(build_finite(FiniteTypeId::Degenerate { m: 1 }).is_err());
    }

    #[test]
    fn b11_passes_and_mutilations_fail() {
        let set = b11();
        assert!(check_supersystem_axioms(&set).all_passed());
        let e1 = Root::parse(set.ambient(), "e1").unwrap();
        let cut = set.without(&[e1]);
        assert!(check_supersystem_axioms(&cut).failed().contains(&Axiom::Symmetric));
    }

    #[test]
    fn degenerate_set_fails_only_nondegeneracy() {
        let s = build_finite(FiniteTypeId::Degenerate { m: 2 }).unwrap();
        assert_eq!(check_supersystem_axioms(&s).failed(), vec![Axiom::Nondegenerate]);
    }

    #[test]
    fn root_string_examples() {
        let set = b11();
        let a = Root::parse(set.ambient(), "e1").unwrap();
        let b = Root::parse(set.ambient(), "d1").unwrap();
        let (p, q, s) = root_string(&set, &a, &b).unwrap();
        assert_eq!((p, q), (1, 1));
        assert_eq!(s.len(), 3);
        let (p, q, s) = root_string(&set, &a, &a).unwrap();
        assert_eq!((p, q, s.len()), (2, 0, 3));
        // 2δ̇₁ is a root, so the δ̇₁-string through itself has five members.
        let (p, q, _) = root_string(&set, &b, &b).unwrap();
        assert_eq!((p, q), (3, 1));
    }

    #[test]
    fn components_of_even_parts() {
        assert_eq!(irreducible_components(&b11()).unwrap().len(), 1);
        let even = b11().even_part();
        let comps = irreducible_components(&even).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].nonzero().count(), 2);
        let d21 = build_finite(FiniteTypeId::D21).unwrap().even_part();
        assert_eq!(irreducible_components(&d21).unwrap().len(), 3);
    }

    #[test]
    fn traceless_odd_roots_coincide_for_a11() {
        let set = build_finite(FiniteTypeId::Ann { n: 1 }).unwrap();
        // 8 odd gl roots collapse to 4, plus 4 even roots and zero.
        assert_eq!(set.len(), 9);
        assert!(check_supersystem_axioms(&set).all_passed());
    }
}
