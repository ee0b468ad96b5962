//! Star sets, Janet multiplicative variables and Pommaret bases of order ideals.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::barcode::BarCode;
use crate::monomials::{minimal_generators, OrderIdeal, Term};
use crate::{Error, Result};

/// The star set `F(N) = {s not in N : s / min(s) in N}` together with its source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarSet {
    pub terms: BTreeSet<Term>,
    #[serde(skip)]
    pub source: OrderIdeal,
}

/// Star set read off an admissible Bar Code.
///
/// Row `i` contributes `x_i * P_{x_i}(t)` for the term `t` over its last bar, and for
/// every pair of consecutive `i`-bars lying over different `(i+1)`-bars, the same
/// expression for a term over the left one.
pub fn star_set_from_barcode(b: &BarCode) -> Result<StarSet> {
    if !b.is_admissible() {
        return Err(Error::NotAdmissible);
    }
    let labels = b.decode();
    let n = b.n();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        let row = b.row(i);
        // column of the last 1-bar under each i-bar
        let mut ends = Vec::with_capacity(row.len());
        let mut acc = 0;
        for &l in row {
            acc += l;
            ends.push(acc - 1);
        }
        let star = |col: usize| labels[col].p_operator(i).unwrap().mul_var(i);
        out.insert(star(*ends.last().unwrap()));
        if i < n {
            let upper_cuts: BTreeSet<usize> = {
                let mut s = BTreeSet::new();
                let mut a = 0;
                for &l in b.row(i + 1) {
                    a += l;
                    s.insert(a);
                }
                s
            };
            for &e in &ends[..ends.len() - 1] {
                if upper_cuts.contains(&(e + 1)) {
                    out.insert(star(e));
                }
            }
        }
    }
    let source = OrderIdeal::new(n, labels)?;
    Ok(StarSet { terms: out, source })
}

/// Star set from the definition, scanning `x_i * t` for `t` in `N`.
pub fn star_set_direct(n: &OrderIdeal) -> StarSet {
    let mut out = BTreeSet::new();
    for t in n.terms() {
        for i in 1..=n.arity() {
            let s = t.mul_var(i);
            if n.contains(&s) {
                continue;
            }
            let m = s.min_var().unwrap();
            if n.contains(&s.div_var(m).unwrap()) {
                out.insert(s);
            }
        }
    }
    StarSet { terms: out, source: n.clone() }
}

/// Janet multiplicative variables of `t` with respect to `m`.
pub fn multiplicative_vars(m: &BTreeSet<Term>, t: &Term) -> Result<BTreeSet<usize>> {
    if !m.contains(t) {
        return Err(Error::TermNotInSet(t.to_string()));
    }
    let n = t.arity();
    Ok((1..=n)
        .filter(|&j| {
            !m.iter().any(|s| {
                s.exponents()[j..] == t.exponents()[j..] && s.exp(j) > t.exp(j)
            })
        })
        .collect())
}

fn in_cone(sigma: &Term, tau: &Term, mult: &BTreeSet<usize>) -> bool {
    match sigma.div(tau) {
        None => false,
        Some(q) => (1..=q.arity()).all(|j| q.exp(j) == 0 || mult.contains(&j)),
    }
}

/// Every non-multiplicative product lands in the cone of some element.
pub fn is_complete(m: &BTreeSet<Term>) -> bool {
    let mults: Vec<(&Term, BTreeSet<usize>)> =
        m.iter().map(|t| (t, multiplicative_vars(m, t).unwrap())).collect();
    mults.iter().all(|(t, mult)| {
        (1..=t.arity()).filter(|j| !mult.contains(j)).all(|j| {
            let s = t.mul_var(j);
            mults.iter().any(|(u, mu)| in_cone(&s, u, mu))
        })
    })
}

/// Complete, and every multiplicative set is `{x_i : i <= min(t)}`.
///
/// The unit term counts every variable as lying below its minimum.
pub fn is_stably_complete(m: &BTreeSet<Term>) -> bool {
    if m.is_empty() {
        return false;
    }
    let shape_ok = m.iter().all(|t| {
        let bound = t.min_var().unwrap_or(t.arity());
        multiplicative_vars(m, t).unwrap() == (1..=bound).collect()
    });
    shape_ok && is_complete(m)
}

/// The Pommaret basis of the ideal whose escalier is `n`; it is its star set.
pub fn pommaret_basis(n: &OrderIdeal) -> StarSet {
    let s = star_set_direct(n);
    assert!(is_stably_complete(&s.terms), "star set must be stably complete");
    s
}

/// Stability test via the star set: stable iff the star set equals the minimal generators.
pub fn is_stable_via_starset(n: &OrderIdeal) -> bool {
    star_set_direct(n).terms == *minimal_generators(n).generators()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barcode::encode;

    fn set(n: usize, ts: &[&str]) -> BTreeSet<Term> {
        ts.iter().map(|s| Term::parse(s, n).unwrap()).collect()
    }

    fn oi(n: usize, ts: &[&str]) -> OrderIdeal {
        OrderIdeal::new(n, set(n, ts)).unwrap()
    }

    fn both(n: &OrderIdeal) -> BTreeSet<Term> {
        let direct = star_set_direct(n).terms;
        let code: Vec<Term> = n.terms().iter().cloned().collect();
        let via = star_set_from_barcode(&encode(&code).unwrap()).unwrap().terms;
        assert_eq!(direct, via);
        direct
    }

    #[test]
    fn star_set_examples() {
        let n = oi(3, &["1", "x1", "x2", "x3"]);
        assert_eq!(both(&n), set(3, &["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"]));
        assert_eq!(both(&oi(2, &["1"])), set(2, &["x1", "x2"]));
        let n = oi(4, &["1", "x1", "x2", "x3", "x4", "x1*x4"]);
        let f = both(&n);
        let g = minimal_generators(&n);
        assert!(f.contains(&Term::parse("x1^2*x4", 4).unwrap()));
        assert!(g.generators().is_subset(&f));
        assert_ne!(&f, g.generators());
    }

    #[test]
    fn non_admissible_code_rejected() {
        let code = encode(&set(3, &["x1", "x1^2", "x2*x3", "x1*x2^2*x3", "x2^3*x3"]).into_iter().collect::<Vec<_>>()).unwrap();
        assert_eq!(star_set_from_barcode(&code), Err(Error::NotAdmissible));
    }

    #[test]
    fn multiplicative_examples() {
        let m = set(2, &["x1", "x2"]);
        let x1 = Term::parse("x1", 2).unwrap();
        assert_eq!(multiplicative_vars(&m, &x1).unwrap(), [1].into_iter().collect());
        let single = set(3, &["x1*x2"]);
        let t = Term::parse("x1*x2", 3).unwrap();
        assert_eq!(multiplicative_vars(&single, &t).unwrap(), [1, 2, 3].into_iter().collect());
        assert!(multiplicative_vars(&m, &Term::one(2)).is_err());
    }

    #[test]
    fn stably_complete_examples() {
        assert!(!is_stably_complete(&set(2, &["x1"])));
        assert!(is_stably_complete(&set(2, &["x1", "x2"])));
        let n = oi(3, &["1", "x1", "x1^2", "x2", "x3", "x1*x3"]);
        assert!(is_stably_complete(&pommaret_basis(&n).terms));
    }

    #[test]
    fn stability_via_star_set() {
        let n = oi(3, &["1", "x1", "x1^2", "x2", "x3", "x1*x3"]);
        assert!(is_stable_via_starset(&n));
        assert!(!is_stable_via_starset(&oi(4, &["1", "x1", "x2", "x3", "x4", "x1*x4"])));
        assert!(is_stable_via_starset(&oi(3, &["1"])));
    }
}
