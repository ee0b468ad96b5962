//! Brute-force ground truth: every order ideal of a given size, definitional class
//! counts, and a probe comparing four-variable counts with solid partitions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::barcode::encode;
use crate::monomials::{minimal_generators, OrderIdeal, Term};
use crate::partitions::{validate_solid, SolidKind, SolidPartition};
use crate::{Class, Error, Result};

/// Largest `p` the enumerator accepts for each number of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCaps {
    pub one_var: u64,
    pub two_vars: u64,
    pub three_vars: u64,
    pub four_vars: u64,
    pub more_vars: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { one_var: 10_000, two_vars: 40, three_vars: 12, four_vars: 8, more_vars: 6 }
    }
}

impl OracleCaps {
    pub fn cap(&self, n: usize) -> u64 {
        match n {
            1 => self.one_var,
            2 => self.two_vars,
            3 => self.three_vars,
            4 => self.four_vars,
            _ => self.more_vars,
        }
    }

    pub fn with_cap(mut self, n: usize, cap: u64) -> Self {
        match n {
            1 => self.one_var = cap,
            2 => self.two_vars = cap,
            3 => self.three_vars = cap,
            4 => self.four_vars = cap,
            _ => self.more_vars = cap,
        }
        self
    }

    fn check(&self, n: usize, p: u64) -> Result<()> {
        if n == 0 || p == 0 {
            return Err(Error::Precondition("need n >= 1 and p >= 1".into()));
        }
        let cap = self.cap(n);
        if p > cap {
            return Err(Error::CapExceeded { n, p, cap });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EscalierEnumeration {
    pub n: usize,
    pub p: u64,
    pub items: Vec<OrderIdeal>,
}

/// All order ideals of cardinality `p` in `n` variables.
///
/// Terms are added in increasing Lex order, each new one being a border term greater
/// than the last; every Lex-initial segment of an order ideal is again one, so each
/// ideal is produced exactly once.
pub fn enumerate_order_ideals(n: usize, p: u64, caps: &OracleCaps) -> Result<EscalierEnumeration> {
    caps.check(n, p)?;
    let mut items = Vec::new();
    let mut cur = BTreeSet::from([Term::one(n)]);
    extend(&mut cur, Term::one(n), p as usize, &mut items);
    Ok(EscalierEnumeration { n, p, items })
}

fn extend(cur: &mut BTreeSet<Term>, last: Term, p: usize, out: &mut Vec<OrderIdeal>) {
    if cur.len() == p {
        out.push(OrderIdeal::from_trusted(last.arity(), cur.clone()));
        return;
    }
    let n = last.arity();
    let mut cands = BTreeSet::new();
    for t in cur.iter() {
        for i in 1..=n {
            let u = t.mul_var(i);
            if u > last && !cur.contains(&u) && u.predecessors().all(|q| cur.contains(&q)) {
                cands.insert(u);
            }
        }
    }
    for u in cands {
        cur.insert(u.clone());
        extend(cur, u.clone(), p, out);
        cur.remove(&u);
    }
}

fn in_class(n: &OrderIdeal, class: Class) -> bool {
    let ideal = minimal_generators(n);
    match class {
        Class::Stable => ideal.is_stable(),
        Class::StronglyStable => ideal.is_strongly_stable(),
    }
}

/// Number of escaliers of size `p` whose ideal is in `class`, by direct check.
pub fn count_by_definition(n: usize, p: u64, class: Class, caps: &OracleCaps) -> Result<u64> {
    let e = enumerate_order_ideals(n, p, caps)?;
    Ok(e.items.iter().filter(|oi| in_class(oi, class)).count() as u64)
}

/// Definitional counts keyed by bar list.
pub fn census_by_definition(
    n: usize,
    p: u64,
    class: Class,
    caps: &OracleCaps,
) -> Result<BTreeMap<Vec<usize>, u64>> {
    let e = enumerate_order_ideals(n, p, caps)?;
    let mut out = BTreeMap::new();
    for oi in e.items.iter().filter(|oi| in_class(oi, class)) {
        let terms: Vec<Term> = oi.terms().iter().cloned().collect();
        *out.entry(encode(&terms)?.bar_list()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Total as a big integer, for comparison with the counting pipelines.
pub fn count_by_definition_big(n: usize, p: u64, class: Class, caps: &OracleCaps) -> Result<BigUint> {
    count_by_definition(n, p, class, caps).map(BigUint::from)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeRow {
    pub bar_list: Vec<usize>,
    pub ideals: u64,
    pub partitions: u64,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub n: usize,
    pub p: u64,
    pub class: Class,
    pub rows: Vec<ProbeRow>,
    pub all_agree: bool,
}

/// Four-variable comparison of (strongly) stable ideals against strict (shifted) solid
/// partitions, per bar list.
///
/// Every valid array is weakly decreasing along each axis, so it is the `x_1`-height
/// array of exactly one escalier; scanning all escaliers of size `p` therefore reaches
/// every valid solid partition of norm `p`.
pub fn conjecture_probe(p: u64, class: Class, caps: &OracleCaps) -> Result<ProbeReport> {
    let n = 4;
    let e = enumerate_order_ideals(n, p, caps)?;
    let kind = match class {
        Class::Stable => SolidKind::Strict,
        Class::StronglyStable => SolidKind::Shifted,
    };
    let mut table: BTreeMap<Vec<usize>, (u64, u64)> = BTreeMap::new();
    for oi in &e.items {
        if in_class(oi, class) {
            let terms: Vec<Term> = oi.terms().iter().cloned().collect();
            table.entry(encode(&terms)?.bar_list()).or_default().0 += 1;
        }
        let sp = SolidPartition::from_order_ideal(kind, oi)?;
        if validate_solid(&sp)? {
            table.entry(sp.bar_list()).or_default().1 += 1;
        }
    }
    // census order: h, then the remaining entries, descending
    let mut rows: Vec<ProbeRow> = table
        .into_iter()
        .map(|(bar_list, (ideals, partitions))| ProbeRow { bar_list, ideals, partitions, agree: ideals == partitions })
        .collect();
    rows.sort_by(|a, b| a.bar_list.cmp(&b.bar_list));
    let all_agree = rows.iter().all(|r| r.agree);
    Ok(ProbeReport { n, p, class, rows, all_agree })
}
