//! Terms, the Lex order with `x_1 < ... < x_n`, order ideals and monomial ideals.
//!
//! Variables are indexed from 1. A [`Term`] stores its exponent vector; position
//! `i - 1` holds the exponent of `x_i`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A power product `x_1^g1 * ... * x_n^gn`.
///
/// `Ord` is the Lex order (highest-index differing exponent decides). Terms of
/// different arity are ordered by arity first so the order stays total, but no
/// operation in this crate mixes arities.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Term(Vec<u32>);

impl Term {
    pub fn new(exponents: Vec<u32>) -> Self {
        Term(exponents)
    }

    /// The unit term in `n` variables.
    pub fn one(n: usize) -> Self {
        Term(vec![0; n])
    }

    /// The variable `x_i` in `n` variables.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        check_var(n, i)?;
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Ok(Term(e))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.arity() == other.arity() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `x_i * self`.
    pub fn mul_var(&self, i: usize) -> Term {
        let mut e = self.0.clone();
        e[i - 1] += 1;
        Term(e)
    }

    /// `self / x_i`, if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Term> {
        if self.0[i - 1] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i - 1] -= 1;
        Some(Term(e))
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Term) -> Option<Term> {
        if !other.divides(self) {
            return None;
        }
        Some(Term(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Index of the smallest variable dividing the term.
    pub fn min_var(&self) -> Result<usize> {
        self.0.iter().position(|&e| e > 0).map(|p| p + 1).ok_or(Error::UnitTerm)
    }

    /// The `P_{x_i}` operator: drops `x_1, ..., x_{i-1}`.
    pub fn p_operator(&self, i: usize) -> Result<Term> {
        check_var(self.arity(), i)?;
        let mut e = self.0.clone();
        e[..i - 1].iter_mut().for_each(|x| *x = 0);
        Ok(Term(e))
    }

    /// The predecessors `self / x_j` for every `x_j` dividing `self`.
    pub fn predecessors(&self) -> impl Iterator<Item = Term> + '_ {
        (1..=self.arity()).filter_map(move |j| self.div_var(j))
    }

    /// Parses `x1^2*x3`, `x2`, or `1` into a term in `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Term> {
        let mut e = vec![0u32; n];
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        if s == "1" {
            return Ok(Term(e));
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("bad factor `{factor}` in `{s}`")))?;
            let (idx, pow) = match body.split_once('^') {
                Some((i, p)) => (i, p),
                None => (body, "1"),
            };
            let i: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{factor}`")))?;
            let p: u32 = pow
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
            if i == 0 || i > n {
                return Err(Error::VariableOutOfRange { index: i, arity: n });
            }
            e[i - 1] = e[i - 1]
                .checked_add(p)
                .ok_or_else(|| Error::Parse(format!("exponent overflow in `{s}`")))?;
        }
        Ok(Term(e))
    }

    /// Largest variable index mentioned in a textual term; 0 for the unit.
    pub fn max_var_in_text(s: &str) -> Result<usize> {
        let s = s.trim();
        if s == "1" {
            return Ok(0);
        }
        let mut m = 0;
        for factor in s.split('*') {
            let body = factor.trim().strip_prefix('x').unwrap_or("");
            let idx = body.split('^').next().unwrap_or("");
            let i: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad factor `{}`", factor.trim())))?;
            m = m.max(i);
        }
        Ok(m)
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity()
            .cmp(&other.arity())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_var(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::VariableOutOfRange { index: i, arity: n })
    } else {
        Ok(())
    }
}

fn common_arity<'a>(terms: impl IntoIterator<Item = &'a Term>) -> Result<Option<usize>> {
    let mut n = None;
    for t in terms {
        match n {
            None => n = Some(t.arity()),
            Some(m) if m != t.arity() => {
                return Err(Error::ArityMismatch { expected: m, found: t.arity() })
            }
            _ => {}
        }
    }
    Ok(n)
}

/// Lex comparison with `x_1 < ... < x_n`.
pub fn lex_compare(t1: &Term, t2: &Term) -> Result<Ordering> {
    if t1.arity() != t2.arity() {
        return Err(Error::ArityMismatch { expected: t1.arity(), found: t2.arity() });
    }
    Ok(t1.cmp(t2))
}

pub fn p_operator(t: &Term, i: usize) -> Result<Term> {
    t.p_operator(i)
}

pub fn min_var(t: &Term) -> Result<usize> {
    t.min_var()
}

/// Divisor closure test. The empty set is an order ideal.
pub fn is_order_ideal(terms: &BTreeSet<Term>) -> Result<bool> {
    common_arity(terms)?;
    Ok(first_missing_predecessor(terms).is_none())
}

fn first_missing_predecessor(terms: &BTreeSet<Term>) -> Option<(Term, Term)> {
    for t in terms {
        for p in t.predecessors() {
            if !terms.contains(&p) {
                return Some((t.clone(), p));
            }
        }
    }
    None
}

/// A finite, non-empty, divisor-closed set of terms (a Groebner escalier).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct OrderIdeal {
    arity: usize,
    terms: BTreeSet<Term>,
}

impl OrderIdeal {
    pub fn new(n: usize, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let terms: BTreeSet<Term> = terms.into_iter().collect();
        if terms.is_empty() {
            return Err(Error::Empty("order ideal"));
        }
        if let Some(t) = terms.iter().find(|t| t.arity() != n) {
            return Err(Error::ArityMismatch { expected: n, found: t.arity() });
        }
        if let Some((term, missing)) = first_missing_predecessor(&terms) {
            return Err(Error::NotOrderIdeal { term: term.to_string(), missing: missing.to_string() });
        }
        Ok(OrderIdeal { arity: n, terms })
    }

    /// Builds an order ideal without checking closure. Callers guarantee the invariant.
    pub(crate) fn from_trusted(n: usize, terms: BTreeSet<Term>) -> Self {
        debug_assert!(first_missing_predecessor(&terms).is_none());
        OrderIdeal { arity: n, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Terms in Lex-ascending order.
    pub fn terms(&self) -> &BTreeSet<Term> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.terms.contains(t)
    }

    /// The border set `{x_h * t : t in N} \ N`.
    pub fn border(&self) -> BTreeSet<Term> {
        let mut out = BTreeSet::new();
        for t in &self.terms {
            for h in 1..=self.arity {
                let s = t.mul_var(h);
                if !self.terms.contains(&s) {
                    out.insert(s);
                }
            }
        }
        out
    }

    pub fn minimal_generators(&self) -> MonomialIdeal {
        minimal_generators(self)
    }
}

/// A monomial ideal stored by its minimal monomial basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct MonomialIdeal {
    arity: usize,
    generators: BTreeSet<Term>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding non-minimal generators.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Term>) -> Result<Self> {
        let all: BTreeSet<Term> = gens.into_iter().collect();
        if all.is_empty() {
            return Err(Error::Empty("generator set"));
        }
        if let Some(t) = all.iter().find(|t| t.arity() != n) {
            return Err(Error::ArityMismatch { expected: n, found: t.arity() });
        }
        let generators = all
            .iter()
            .filter(|t| !all.iter().any(|s| s != *t && s.divides(t)))
            .cloned()
            .collect();
        Ok(MonomialIdeal { arity: n, generators })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Minimal generators in Lex-ascending order.
    pub fn generators(&self) -> &BTreeSet<Term> {
        &self.generators
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.generators.iter().any(|g| g.divides(t))
    }

    /// The complement of the ideal, when it is finite.
    pub fn escalier(&self) -> Result<OrderIdeal> {
        let mut bounds = vec![0u32; self.arity];
        for g in &self.generators {
            let support: Vec<usize> = (0..self.arity).filter(|&i| g.0[i] > 0).collect();
            if support.len() == 1 {
                let i = support[0];
                if bounds[i] == 0 || g.0[i] < bounds[i] {
                    bounds[i] = g.0[i];
                }
            } else if support.is_empty() {
                return Err(Error::Empty("escalier of the unit ideal"));
            }
        }
        if bounds.contains(&0) {
            return Err(Error::NotZeroDimensional);
        }
        let mut terms = BTreeSet::new();
        let mut cur = vec![0u32; self.arity];
        loop {
            let t = Term(cur.clone());
            if !self.contains(&t) {
                terms.insert(t);
            }
            let mut i = 0;
            loop {
                if i == self.arity {
                    return Ok(OrderIdeal::from_trusted(self.arity, terms));
                }
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    pub fn is_stable(&self) -> bool {
        is_stable(self)
    }

    pub fn is_strongly_stable(&self) -> bool {
        is_strongly_stable(self)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// `{t not in N : every predecessor of t is in N}`.
pub fn minimal_generators(n: &OrderIdeal) -> MonomialIdeal {
    let generators = n
        .border()
        .into_iter()
        .filter(|t| t.predecessors().all(|p| n.contains(&p)))
        .collect();
    MonomialIdeal { arity: n.arity, generators }
}

pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.generators.iter().all(|t| {
        let Ok(m) = t.min_var() else { return true };
        let q = t.div_var(m).expect("min variable divides");
        (m + 1..=ideal.arity).all(|j| ideal.contains(&q.mul_var(j)))
    })
}

pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal.generators.iter().all(|t| {
        (1..=ideal.arity).all(|i| match t.div_var(i) {
            None => true,
            Some(q) => (i + 1..=ideal.arity).all(|j| ideal.contains(&q.mul_var(j))),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str, n: usize) -> Term {
        Term::parse(s, n).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| t(g, n))).unwrap()
    }

    fn set(n: usize, ts: &[&str]) -> BTreeSet<Term> {
        ts.iter().map(|s| t(s, n)).collect()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&t("x1", 3), &t("x2", 3)).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&t("x1*x2^3*x3^4", 3), &t("x2*x3^5", 3)).unwrap(), Ordering::Less);
        let tau = t("x1*x2^3*x3^4", 3);
        assert_eq!(lex_compare(&tau, &tau).unwrap(), Ordering::Equal);
        assert!(lex_compare(&t("x1", 2), &t("x1", 3)).is_err());
    }

    #[test]
    fn p_operator_examples() {
        let tau = t("x1*x2^3*x3^4", 3);
        assert_eq!(p_operator(&tau, 2).unwrap(), t("x2^3*x3^4", 3));
        assert_eq!(p_operator(&tau, 1).unwrap(), tau);
        assert_eq!(p_operator(&p_operator(&tau, 2).unwrap(), 3).unwrap(), t("x3^4", 3));
        assert!(p_operator(&tau, 4).is_err());
        assert!(p_operator(&tau, 0).is_err());
    }

    #[test]
    fn min_var_examples() {
        assert_eq!(min_var(&t("x2*x3", 3)).unwrap(), 2);
        assert_eq!(min_var(&t("x1*x2^3*x3^4", 3)).unwrap(), 1);
        assert_eq!(min_var(&t("x3^2", 3)).unwrap(), 3);
        assert_eq!(min_var(&t("1", 3)), Err(Error::UnitTerm));
    }

    #[test]
    fn order_ideal_examples() {
        assert!(is_order_ideal(&set(2, &["1", "x1", "x2"])).unwrap());
        assert!(!is_order_ideal(&set(2, &["x1", "x1^2"])).unwrap());
        assert!(!is_order_ideal(&set(3, &["1", "x1", "x3", "x2*x3", "x2^2*x3"])).unwrap());
        assert!(is_order_ideal(&BTreeSet::new()).unwrap());
        let mixed: BTreeSet<Term> = [Term::one(2), Term::one(3)].into_iter().collect();
        assert!(is_order_ideal(&mixed).is_err());
    }

    #[test]
    fn minimal_generator_examples() {
        let n = OrderIdeal::new(2, set(2, &["1", "x1", "x2"])).unwrap();
        assert_eq!(minimal_generators(&n).generators(), &set(2, &["x1^2", "x1*x2", "x2^2"]));
        let n = OrderIdeal::new(3, [Term::one(3)]).unwrap();
        assert_eq!(minimal_generators(&n).generators(), &set(3, &["x1", "x2", "x3"]));
        let n = OrderIdeal::new(3, set(3, &["1", "x1", "x1^2", "x2", "x3", "x1*x3"])).unwrap();
        assert_eq!(
            minimal_generators(&n).generators(),
            &set(3, &["x1^3", "x1*x2", "x2^2", "x1^2*x3", "x2*x3", "x3^2"])
        );
        assert!(OrderIdeal::new(2, set(2, &["x1"])).is_err());
    }

    #[test]
    fn stability_examples() {
        let i1 = ideal(3, &["x1^3", "x1*x2", "x2^2", "x1^2*x3", "x2*x3", "x3^2"]);
        assert!(is_stable(&i1));
        assert!(!is_strongly_stable(&i1));
        let i2 = ideal(3, &["x1^2", "x1*x2", "x2^2", "x3"]);
        assert!(is_strongly_stable(&i2));
        assert!(is_stable(&i2));
        let bad = ideal(
            4,
            &["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2", "x1^2*x4", "x2*x4", "x3*x4", "x4^2"],
        );
        assert!(!is_stable(&bad));
        for n in 1..5 {
            let m = MonomialIdeal::new(n, (1..=n).map(|i| Term::var(n, i).unwrap())).unwrap();
            assert!(is_stable(&m) && is_strongly_stable(&m));
        }
        assert!(MonomialIdeal::new(3, []).is_err());
    }

    #[test]
    fn ideal_minimizes_generators() {
        let bad = ideal(4, &["x1^2", "x1^2*x4", "x2"]);
        assert_eq!(bad.generators(), &set(4, &["x1^2", "x2"]));
    }

    #[test]
    fn escalier_roundtrip() {
        let i1 = ideal(3, &["x1^3", "x1*x2", "x2^2", "x1^2*x3", "x2*x3", "x3^2"]);
        let n = i1.escalier().unwrap();
        assert_eq!(n.terms(), &set(3, &["1", "x1", "x1^2", "x2", "x3", "x1*x3"]));
        assert_eq!(minimal_generators(&n), i1);
        assert_eq!(ideal(2, &["x1^2"]).escalier(), Err(Error::NotZeroDimensional));
    }

    #[test]
    fn text_roundtrip() {
        for s in ["1", "x1", "x1^2*x3", "x2*x3^5"] {
            assert_eq!(t(s, 3).to_string(), s);
        }
        assert_eq!(t("x1*x1", 2), t("x1^2", 2));
        assert!(Term::parse("x4", 3).is_err());
        assert!(Term::parse("y1", 3).is_err());
        assert!(Term::parse("x1^99999999999", 3).is_err());
        assert_eq!(serde_json::to_string(&t("x1^2*x3", 3)).unwrap(), "[2,0,1]");
    }
}
