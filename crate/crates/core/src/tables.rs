//! Printed classification data, transcribed row by row, and the
//! comparison of that data against the form-computed classification.
//!
//! Nothing in here feeds back into construction or classification. Rows
//! are transcribed as printed, including entries that fall outside the
//! ambient basis or outside the root system; those surface as findings.

use std::collections::BTreeSet;
use std::fmt;

use crate::affine::{AffineRootSystem, AffineTypeId};
use crate::error::{Error, Result};
use crate::finite::{traceless, FiniteTypeId, Parity, RootKind};
use crate::root::{Ambient, Root};

/// The even-part label of a finite type.
pub fn even_part_label(type_id: &FiniteTypeId) -> Result<&'static str> {
    Ok(match type_id {
        FiniteTypeId::A { .. } => "A_m ⊕ A_n ⊕ ℂ",
        FiniteTypeId::Ann { .. } => "A_n ⊕ A_n",
        FiniteTypeId::B { .. } => "B_m ⊕ C_n",
        FiniteTypeId::D { m: 1, .. } => "C_{n-1} ⊕ ℂ",
        FiniteTypeId::D { .. } => "D_m ⊕ C_n",
        FiniteTypeId::F4 => "A₁ ⊕ B₃",
        FiniteTypeId::G3 => "A₁ ⊕ G₂",
        FiniteTypeId::D21 => "A₁ ⊕ A₁ ⊕ A₁",
        other => return Err(Error::UnknownType(format!("{other} has no even-part label"))),
    })
}

/// One transcribed row: the finite layers listed in each column. The
/// imaginary column is `ℤδ` for every row and is implicit.
#[derive(Debug, Clone, Default)]
pub struct GoldenTable {
    pub real: BTreeSet<Root>,
    pub nonsingular: BTreeSet<Root>,
    pub even: BTreeSet<Root>,
    pub odd: BTreeSet<Root>,
    /// Printed entries that could not be placed in the ambient basis.
    pub notes: Vec<String>,
}

#[derive(Clone, Copy)]
enum Column {
    Real,
    Nonsingular,
    Even,
    Odd,
}

struct Transcriber {
    ambient: Ambient,
    /// Letters `ε̇` for traceless projection, when the row needs it.
    traceless: Option<usize>,
    table: GoldenTable,
}

impl Transcriber {
    fn new(ambient: Ambient) -> Self {
        Transcriber {
            ambient,
            traceless: None,
            table: GoldenTable::default(),
        }
    }

    fn parse(&mut self, text: &str) -> Option<Root> {
        match Root::parse(self.ambient, text) {
            Ok(r) => Some(match self.traceless {
                Some(m) => traceless(&r, m),
                None => r,
            }),
            Err(_) => {
                let note = format!("{text} lies outside the ambient basis");
                if !self.table.notes.contains(&note) {
                    self.table.notes.push(note);
                }
                None
            }
        }
    }

    fn insert(&mut self, column: Column, root: Root) {
        let target = match column {
            Column::Real => &mut self.table.real,
            Column::Nonsingular => &mut self.table.nonsingular,
            Column::Even => &mut self.table.even,
            Column::Odd => &mut self.table.odd,
        };
        target.insert(root);
    }

    fn put(&mut self, column: Column, text: &str) {
        if let Some(r) = self.parse(text) {
            self.insert(column, r);
        }
    }

    /// Adds `text` and its negative.
    fn pm(&mut self, column: Column, text: &str) {
        if let Some(r) = self.parse(text) {
            self.insert(column, -&r);
            self.insert(column, r);
        }
    }
}

/// Joins signed terms into an expression: `[(1,"e1"),(-1,"d2")]` → `e1-d2`.
fn expr(terms: &[(i64, String)]) -> String {
    let mut s = String::new();
    for (c, sym) in terms {
        if *c == 0 {
            continue;
        }
        if *c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(sym);
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

fn e(i: usize) -> String {
    format!("e{i}")
}

fn d(j: usize) -> String {
    format!("d{j}")
}

const SIGNS: [i64; 2] = [1, -1];

/// The transcribed row for `ty` over `ambient`.
pub fn golden_table(ty: AffineTypeId, ambient: Ambient) -> GoldenTable {
    use Column::*;
    let mut t = Transcriber::new(ambient);
    match ty {
        AffineTypeId::A { m, n } => {
            let (m, n) = (m + 1, n + 1);
            for i in 1..=m {
                for r in 1..=m {
                    let x = expr(&[(1, e(i)), (-1, e(r))]);
                    if i != r {
                        t.put(Real, &x);
                    }
                    t.put(Even, &x);
                }
            }
            for j in 1..=n {
                for s in 1..=n {
                    let x = expr(&[(1, d(j)), (-1, d(s))]);
                    if j != s {
                        t.put(Real, &x);
                    }
                    t.put(Even, &x);
                }
            }
            for i in 1..=m {
                for j in 1..=n {
                    let x = expr(&[(1, e(i)), (-1, d(j))]);
                    t.pm(Nonsingular, &x);
                    t.pm(Odd, &x);
                }
            }
        }
        AffineTypeId::Ann { n } => {
            let n = n + 1;
            t.traceless = Some(n);
            for i in 1..=n {
                for j in 1..=n {
                    for (a, b) in [(e(i), e(j)), (d(i), d(j))] {
                        let x = expr(&[(1, a), (-1, b)]);
                        if i != j {
                            t.put(Real, &x);
                        }
                        t.put(Even, &x);
                    }
                    let x = format!("{}+sigma", expr(&[(1, e(i)), (-1, d(j))]));
                    t.pm(Nonsingular, &x);
                    t.pm(Odd, &x);
                }
            }
        }
        AffineTypeId::B { m, n } => {
            for i in 1..=m {
                t.pm(Real, &e(i));
                t.pm(Even, &e(i));
                for r in 1..=m {
                    for s in SIGNS {
                        let x = expr(&[(1, e(i)), (s, e(r))]);
                        if i != r {
                            t.pm(Real, &x);
                            t.pm(Even, &x);
                        }
                    }
                }
                for j in 1..=n {
                    for s in SIGNS {
                        let x = expr(&[(1, e(i)), (s, d(j))]);
                        t.pm(Nonsingular, &x);
                        t.pm(Odd, &x);
                    }
                }
            }
            for j in 1..=n {
                t.pm(Real, &d(j));
                t.pm(Odd, &d(j));
                t.pm(Real, &expr(&[(2, d(j))]));
                for s in 1..=n {
                    for sg in SIGNS {
                        let x = expr(&[(1, d(j)), (sg, d(s))]);
                        if j != s {
                            t.pm(Real, &x);
                        }
                        t.pm(Even, &x);
                    }
                }
            }
        }
        AffineTypeId::C { n } => {
            t.pm(Real, "2e1");
            t.pm(Even, "2e1");
            for j in 1..n {
                t.pm(Real, &expr(&[(2, d(j))]));
                for s in 1..n {
                    for sg in SIGNS {
                        let x = expr(&[(1, d(j)), (sg, d(s))]);
                        if j != s {
                            t.pm(Real, &x);
                        }
                        t.pm(Even, &x);
                    }
                }
            }
            for j in 1..=n {
                for sg in SIGNS {
                    let x = expr(&[(1, e(1)), (sg, d(j))]);
                    t.pm(Nonsingular, &x);
                    t.pm(Odd, &x);
                }
            }
        }
        AffineTypeId::D { m, n } => {
            for i in 1..=m {
                for r in 1..=m {
                    for s in SIGNS {
                        let x = expr(&[(1, e(i)), (s, e(r))]);
                        if i != r {
                            t.pm(Real, &x);
                            t.pm(Even, &x);
                        }
                    }
                }
                for j in 1..=n {
                    for s in SIGNS {
                        let x = expr(&[(1, e(i)), (s, d(j))]);
                        t.pm(Nonsingular, &x);
                        t.pm(Odd, &x);
                    }
                }
            }
            for j in 1..=n {
                t.pm(Real, &expr(&[(2, d(j))]));
                for s in 1..=n {
                    for sg in SIGNS {
                        let x = expr(&[(1, d(j)), (sg, d(s))]);
                        if j != s {
                            t.pm(Real, &x);
                        }
                        t.pm(Even, &x);
                    }
                }
            }
        }
        AffineTypeId::F4 => {
            t.pm(Real, "e");
            t.pm(Even, "e");
            t.put(Even, "0");
            for i in 1..=3 {
                t.pm(Real, &d(i));
                t.pm(Even, &d(i));
                for j in 1..=3 {
                    if i == j {
                        continue;
                    }
                    for s in SIGNS {
                        let x = expr(&[(1, d(i)), (s, d(j))]);
                        t.pm(Real, &x);
                        t.pm(Even, &x);
                    }
                }
            }
            for a in SIGNS {
                for b in SIGNS {
                    for c in SIGNS {
                        let sign = |x: i64| if x > 0 { "+" } else { "-" };
                        let x = format!("1/2*e{}1/2*d1{}1/2*d2{}1/2*d3", sign(a), sign(b), sign(c));
                        t.pm(Nonsingular, &x);
                        t.pm(Odd, &x);
                    }
                }
            }
        }
        AffineTypeId::G3 => {
            t.pm(Real, "nu");
            t.pm(Real, "2nu");
            t.put(Even, "0");
            t.pm(Even, "2nu");
            t.pm(Odd, "nu");
            for i in 1..=3 {
                for j in 1..=3 {
                    if i == j {
                        continue;
                    }
                    let diff = expr(&[(1, e(i)), (-1, e(j))]);
                    t.pm(Real, &diff);
                    t.pm(Even, &diff);
                    for s in SIGNS {
                        let x = expr(&[(1, "nu".into()), (s, e(i)), (-s, e(j))]);
                        t.pm(Real, &x);
                        t.pm(Even, &x);
                    }
                    let k = 6 - i - j;
                    let x = expr(&[(2, e(i)), (-1, e(j)), (-1, e(k))]);
                    t.pm(Nonsingular, &x);
                    t.pm(Odd, &x);
                }
            }
        }
        AffineTypeId::D21 => {
            t.put(Even, "0");
            for i in 1..=3 {
                let x = format!("2g{i}");
                t.pm(Real, &x);
                t.pm(Even, &x);
            }
            for a in SIGNS {
                for b in SIGNS {
                    for c in SIGNS {
                        let x = expr(&[(a, "g1".into()), (b, "g2".into()), (c, "g3".into())]);
                        t.put(Nonsingular, &x);
                        t.put(Odd, &x);
                    }
                }
            }
        }
    }
    t.table
}

/// Disagreement between the computed and the printed classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenMismatch {
    pub root: Root,
    pub computed_kind: RootKind,
    /// `None` when the printed row does not list the root in any column.
    pub table_kind: Option<RootKind>,
    pub computed_parity: Parity,
    pub table_parity: Option<Parity>,
}

impl fmt::Display for GoldenMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tk = self.table_kind.map_or("unlisted", |k| k.label());
        let tp = self.table_parity.map_or("unlisted", |p| p.label());
        write!(
            f,
            "{}: computed {}/{}, printed {}/{}",
            self.root,
            self.computed_kind.label(),
            self.computed_parity.label(),
            tk,
            tp
        )
    }
}

#[derive(Debug, Clone)]
pub struct GoldenReport {
    pub type_id: AffineTypeId,
    pub window: i64,
    pub roots_checked: usize,
    /// One row per computed root: (root, kind, parity).
    pub rows: Vec<(Root, RootKind, Parity)>,
    pub mismatches: Vec<GoldenMismatch>,
    /// Printed layers that are not layers of the constructed system.
    pub printed_non_roots: Vec<Root>,
    pub notes: Vec<String>,
}

impl GoldenReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Classifies every root with `|k| ≤ window` from the form and compares
/// kind and parity with the printed row.
pub fn golden_compare(system: &AffineRootSystem, window: i64) -> Result<GoldenReport> {
    let table = golden_table(system.type_id(), system.ambient());
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for root in system.window(window) {
        let kind = system.classify(&root)?;
        let parity = system.parity(&root)?;
        let layer = root.layer();
        let computed_kind = if kind == RootKind::Zero {
            RootKind::Imaginary
        } else {
            kind
        };
        let table_kind = if layer.is_zero() {
            Some(RootKind::Imaginary)
        } else {
            match (table.real.contains(&layer), table.nonsingular.contains(&layer)) {
                (true, false) => Some(RootKind::Real),
                (false, true) => Some(RootKind::Nonsingular),
                _ => None,
            }
        };
        let table_parity = match (table.even.contains(&layer), table.odd.contains(&layer)) {
            (true, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        };
        if table_kind != Some(computed_kind) || table_parity != Some(parity) {
            mismatches.push(GoldenMismatch {
                root: root.clone(),
                computed_kind,
                table_kind,
                computed_parity: parity,
                table_parity,
            });
        }
        rows.push((root, kind, parity));
    }
    let printed_non_roots: Vec<Root> = table
        .real
        .iter()
        .chain(&table.nonsingular)
        .chain(&table.even)
        .chain(&table.odd)
        .filter(|r| !system.contains(r))
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(GoldenReport {
        type_id: system.type_id(),
        window,
        roots_checked: rows.len(),
        rows,
        mismatches,
        printed_non_roots,
        notes: table.notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::build_affine;

    #[test]
    fn labels() {
        assert_eq!(even_part_label(&FiniteTypeId::B { m: 2, n: 1 }).unwrap(), "B_m ⊕ C_n");
        assert_eq!(even_part_label(&FiniteTypeId::G3).unwrap(), "A₁ ⊕ G₂");
        assert_eq!(even_part_label(&FiniteTypeId::D21).unwrap(), "A₁ ⊕ A₁ ⊕ A₁");
        assert!(even_part_label(&FiniteTypeId::BC { m: 1, n: 1 }).is_err());
    }

    #[test]
    fn b11_row_matches() {
        let s = build_affine(AffineTypeId::B { m: 1, n: 1 }).unwrap();
        let rep = golden_compare(&s, 5).unwrap();
        assert!(rep.is_clean(), "{:?}", rep.mismatches);
        assert_eq!(rep.roots_checked, 11 * 11);
    }

    #[test]
    fn c2_row_reports_printed_extras() {
        let s = build_affine(AffineTypeId::C { n: 2 }).unwrap();
        let rep = golden_compare(&s, 2).unwrap();
        assert!(rep.is_clean(), "{:?}", rep.mismatches);
        assert!(rep.printed_non_roots.iter().any(|r| r.to_string() == "2e1"));
        assert!(rep.notes.iter().any(|n| n.contains("d2")));
    }
}
