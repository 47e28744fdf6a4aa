//! Brute-force oracles for bases and highest roots of small components.

mod common;

use superroots::{find_base, highest_root, irreducible_components, FiniteRootSet, Root, Q};

/// Lexicographically positive: first nonzero coordinate positive.
fn lex_positive(r: &Root) -> bool {
    r.coords()
        .iter()
        .find(|c| **c != Q::from_integer(0))
        .is_some_and(|c| *c > Q::from_integer(0))
}

/// Nonnegative integer coefficients (each at most 4) writing `r` over
/// `base`, by exhaustive enumeration.
fn brute_coefficients(base: &[Root], r: &Root) -> Option<Vec<i64>> {
    let n = base.len();
    let mut c = vec![0i64; n];
    loop {
        let sum = base
            .iter()
            .zip(&c)
            .fold(Root::zero(r.ambient()), |acc, (b, k)| &acc + &b.scale(*k));
        if &sum == r {
            return Some(c);
        }
        let mut i = 0;
        while i < n && c[i] == 4 {
            c[i] = 0;
            i += 1;
        }
        if i == n {
            return None;
        }
        c[i] += 1;
    }
}

fn subsets(items: &[Root], k: usize) -> Vec<Vec<Root>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<Root>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0].clone());
            s
        })
        .collect();
    with.extend(subsets(&items[1..], k));
    with
}

/// Every rank-sized subset of the positive roots whose nonnegative integer
/// span covers all positive roots.
fn oracle_bases(component: &FiniteRootSet) -> Vec<Vec<Root>> {
    let positive: Vec<Root> = component.nonzero().filter(|r| lex_positive(r)).cloned().collect();
    let rank = component.span_rank();
    subsets(&positive, rank)
        .into_iter()
        .filter(|b| positive.iter().all(|p| brute_coefficients(b, p).is_some()))
        .collect()
}

fn small_components() -> Vec<FiniteRootSet> {
    let mut out = Vec::new();
    for s in common::table_systems() {
        for c in irreducible_components(&s.even_finite()).unwrap() {
            if c.span_rank() <= 3 {
                out.push(c);
            }
        }
    }
    out
}

#[test]
fn bases_match_the_unique_brute_force_base() {
    let comps = small_components();
    assert!(comps.len() >= 15);
    for c in comps {
        let oracle = oracle_bases(&c);
        assert_eq!(
            oracle.len(),
            1,
            "{}: positive system must have a unique base",
            c.type_id()
        );
        let mut expected = oracle[0].clone();
        let mut found = find_base(&c).unwrap();
        expected.sort();
        found.sort();
        assert_eq!(found, expected, "{}", c.type_id());
    }
}

#[test]
fn highest_roots_have_maximal_height() {
    for c in small_components() {
        let base = find_base(&c).unwrap();
        let heights: Vec<(i64, Root, Vec<i64>)> = c
            .nonzero()
            .filter(|r| lex_positive(r))
            .map(|r| {
                let co = brute_coefficients(&base, r).unwrap();
                (co.iter().sum(), r.clone(), co)
            })
            .collect();
        let top = heights.iter().map(|h| h.0).max().unwrap();
        let tops: Vec<_> = heights.iter().filter(|h| h.0 == top).collect();
        assert_eq!(tops.len(), 1, "{}: highest root is unique", c.type_id());
        let (theta, coeffs) = highest_root(&c, &base).unwrap();
        assert_eq!(theta, tops[0].1);
        assert_eq!(coeffs, tops[0].2);
    }
}
