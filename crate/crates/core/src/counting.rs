//! Counting zero-dimensional stable and strongly stable monomial ideals with a given
//! constant affine Hilbert polynomial `p`, one bar list at a time.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::partitions::{count_q, count_q_all, enumerate_distinct};
use crate::qpolys::{gf_shifted, gf_shifted_truncated, gf_strict, gf_strict_truncated, ShiftedGf, StrictGf};
use crate::{Class, Error, IntPoly, Result};

fn as_string<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Pipeline knobs. Results never depend on them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    /// Work modulo `x^(p+1)` inside the generating functions.
    pub truncate: bool,
    /// Evaluate bar lists on the rayon pool.
    pub parallel: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { truncate: true, parallel: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeCount {
    pub shape: Vec<u64>,
    #[serde(serialize_with = "as_string")]
    pub count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub bar_list: Vec<u64>,
    pub shapes: Vec<ShapeCount>,
    #[serde(serialize_with = "as_string")]
    pub subtotal: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarListCensus {
    pub p: u64,
    pub n: usize,
    pub class: Class,
    pub rows: Vec<CensusRow>,
    #[serde(serialize_with = "as_string")]
    pub total: BigUint,
}

impl BarListCensus {
    fn from_rows(p: u64, n: usize, class: Class, rows: Vec<CensusRow>) -> Self {
        let total = rows.iter().map(|r| &r.subtotal).sum();
        BarListCensus { p, n, class, rows, total }
    }

    /// Subtotals grouped by the last entry of the bar list (the number of bars in the
    /// bottom row), in increasing order.
    pub fn grouped_by_last(&self) -> Vec<(u64, BigUint)> {
        let mut out: Vec<(u64, BigUint)> = Vec::new();
        for r in &self.rows {
            let k = *r.bar_list.last().unwrap();
            match out.last_mut() {
                Some((kk, s)) if *kk == k => *s += &r.subtotal,
                _ => out.push((k, r.subtotal.clone())),
            }
        }
        out
    }
}

/// Largest `h` with `h (h + 1) / 2 <= p`.
pub fn max_h_2vars(p: u64) -> u64 {
    let mut h = ((2.0 * p as f64).sqrt() as u64).saturating_sub(1);
    while (h + 1) * (h + 2) / 2 <= p {
        h += 1;
    }
    while h > 0 && h * (h + 1) / 2 > p {
        h -= 1;
    }
    h
}

/// `sum_{i <= max_h} Q(p, i)`: the number of stable (equivalently strongly stable)
/// ideals in two variables.
pub fn count_2vars(p: u64) -> BigUint {
    count_q_all(p, max_h_2vars(p)).into_iter().sum()
}

/// Two-variable census with one row per bar list `(p, h)`.
pub fn census_2vars(p: u64, class: Class) -> Result<BarListCensus> {
    if p == 0 {
        return Err(Error::Precondition("p must be positive".into()));
    }
    let qs = count_q_all(p, max_h_2vars(p));
    let rows = qs
        .into_iter()
        .enumerate()
        .map(|(i, q)| {
            let h = i as u64 + 1;
            CensusRow { bar_list: vec![p, h], shapes: vec![ShapeCount { shape: vec![h], count: q.clone() }], subtotal: q }
        })
        .collect();
    Ok(BarListCensus::from_rows(p, 2, class, rows))
}

/// Whether some partition of `r` into `k` distinct parts has minimal sum at most `p`.
pub fn shape_feasible(r: u64, k: u64, p: u64) -> bool {
    fn go(rem: u64, k: u64, max: u64, budget: u64) -> bool {
        if k == 0 {
            return rem == 0;
        }
        let min_rest = k * (k - 1) / 2;
        let hi = max.min(rem.saturating_sub(min_rest));
        // smallest largest part that can still reach rem with k distinct parts
        let lo = k.max((rem + min_rest).div_ceil(k));
        for v in lo.min(hi + 1)..=hi {
            let cost = v * (v + 1) / 2;
            if cost > budget {
                break;
            }
            if go(rem - v, k - 1, v - 1, budget - cost) {
                return true;
            }
        }
        false
    }
    if k == 0 || r < k * (k + 1) / 2 {
        return false;
    }
    go(r, k, r, p)
}

/// Largest `k` with `C(k + 2, 3) <= p`.
pub fn max_k_3vars(p: u64) -> u64 {
    let mut k = 0;
    while (k + 1) * (k + 2) * (k + 3) / 6 <= p {
        k += 1;
    }
    k
}

/// All bar lists `(p, h, k)` of escaliers of stable ideals in three variables, ordered by
/// `k` then `h`.
pub fn bar_lists_3vars(p: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for k in 1..=max_k_3vars(p) {
        let start = k * (k + 1) / 2;
        let m = (start..=p).filter(|&r| shape_feasible(r, k, p)).max();
        if let Some(m) = m {
            out.extend((start..=m).map(|h| (p, h, k)));
        }
    }
    out
}

fn check_bar_list(p: u64, h: u64, k: u64) -> Result<()> {
    if p == 0 || !bar_lists_3vars(p).contains(&(p, h, k)) {
        return Err(Error::BarListOutOfRange(format!("({p},{h},{k})")));
    }
    Ok(())
}

/// Bounds on first parts for the stable count: `a_1 = p - b_1(b_1-1)/2 - sum_{i>1} b_i(b_i+1)/2`,
/// decreasing by one per row. `None` when the last bound drops below 1.
pub fn a_vector_stable(beta: &[u64], p: u64) -> Option<Vec<i64>> {
    let first = beta.first()?;
    let a1 = p as i64
        - (first * (first - 1) / 2) as i64
        - beta[1..].iter().map(|b| (b * (b + 1) / 2) as i64).sum::<i64>();
    let a: Vec<i64> = (0..beta.len() as i64).map(|i| a1 - i).collect();
    (*a.last().unwrap() >= 1).then_some(a)
}

/// All first-part vectors for a shifted shape `lambda` in the strongly stable count.
pub fn a_vectors_strongly(lambda: &[i64], p: u64) -> Vec<Vec<i64>> {
    let r = lambda.len();
    if r == 0 {
        return Vec::new();
    }
    let c: Vec<i64> = (0..r).map(|j| if j == 0 { lambda[0] - 1 } else { lambda[j] - j as i64 }).collect();
    let m = p as i64 - c.iter().map(|x| x * (x + 1) / 2).sum::<i64>();
    let mut out = Vec::new();
    let mut cur = vec![0i64; r];
    fn go(i: usize, lower: i64, m: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let upper = m - i as i64;
        for v in lower..=upper {
            cur[i] = v;
            if i == 0 {
                out.push(cur.clone());
            } else {
                go(i - 1, v + 1, m, cur, out);
            }
        }
    }
    go(r - 1, lambda[r - 1] - r as i64 + 1, m, &mut cur, &mut out);
    out.sort();
    out
}

fn coefficient(poly: &IntPoly, p: u64) -> BigUint {
    poly.coeff(p as usize)
        .to_biguint()
        .expect("generating function coefficients are non-negative")
}

fn strict_count(beta: &[u64], p: u64, opts: CountOptions) -> Result<BigUint> {
    let Some(a) = a_vector_stable(beta, p) else { return Ok(BigUint::zero()) };
    let r = beta.len();
    let spec = StrictGf {
        lambda: beta.iter().map(|&b| b as i64).collect(),
        mu: vec![0; r],
        a,
        b: vec![1; r],
        c: 1,
        d: 1,
    };
    let g: IntPoly = if opts.truncate { gf_strict_truncated(&spec, p as usize)? } else { gf_strict(&spec)? };
    Ok(coefficient(&g, p))
}

fn shifted_count(alpha: &[u64], p: u64, opts: CountOptions) -> Result<BigUint> {
    let lambda: Vec<i64> = alpha.iter().enumerate().map(|(i, &a)| i as i64 + a as i64).collect();
    let r = lambda.len();
    let mut total = BigUint::zero();
    for a in a_vectors_strongly(&lambda, p) {
        let spec = ShiftedGf { lambda: lambda.clone(), a, b: vec![1; r], c: 1, d: 0 };
        let g: IntPoly =
            if opts.truncate { gf_shifted_truncated(&spec, p as usize)? } else { gf_shifted(&spec)? };
        total += coefficient(&g, p);
    }
    Ok(total)
}

/// Count for one bar list `(p, h, k)` with per-shape breakdown.
pub fn count_barlist(class: Class, p: u64, h: u64, k: u64, opts: CountOptions) -> Result<(BigUint, Vec<ShapeCount>)> {
    check_bar_list(p, h, k)?;
    if k == 1 {
        let q = count_q(p, h);
        return Ok((q.clone(), vec![ShapeCount { shape: vec![h], count: q }]));
    }
    let mut shapes = Vec::new();
    for part in enumerate_distinct(h, k) {
        let count = match class {
            Class::Stable => strict_count(part.parts(), p, opts)?,
            Class::StronglyStable => shifted_count(part.parts(), p, opts)?,
        };
        shapes.push(ShapeCount { shape: part.parts().to_vec(), count });
    }
    let total = shapes.iter().map(|s| &s.count).sum();
    Ok((total, shapes))
}

pub fn count_stable_barlist(p: u64, h: u64, k: u64) -> Result<(BigUint, Vec<ShapeCount>)> {
    count_barlist(Class::Stable, p, h, k, CountOptions::default())
}

pub fn count_sstable_barlist(p: u64, h: u64, k: u64) -> Result<(BigUint, Vec<ShapeCount>)> {
    count_barlist(Class::StronglyStable, p, h, k, CountOptions::default())
}

/// Three-variable census over every bar list.
pub fn census_3vars(p: u64, class: Class, opts: CountOptions) -> Result<BarListCensus> {
    if p == 0 {
        return Err(Error::Precondition("p must be positive".into()));
    }
    let lists = bar_lists_3vars(p);
    let one = |&(p, h, k): &(u64, u64, u64)| -> Result<CensusRow> {
        let (subtotal, shapes) = count_barlist(class, p, h, k, opts)?;
        Ok(CensusRow { bar_list: vec![p, h, k], shapes, subtotal })
    };
    let rows: Result<Vec<CensusRow>> =
        if opts.parallel { lists.par_iter().map(one).collect() } else { lists.iter().map(one).collect() };
    Ok(BarListCensus::from_rows(p, 3, class, rows?))
}

pub fn count_stable_3vars(p: u64) -> Result<BarListCensus> {
    census_3vars(p, Class::Stable, CountOptions::default())
}

pub fn count_sstable_3vars(p: u64) -> Result<BarListCensus> {
    census_3vars(p, Class::StronglyStable, CountOptions::default())
}

/// Census for `n` in {2, 3}.
pub fn census(n: usize, p: u64, class: Class, opts: CountOptions) -> Result<BarListCensus> {
    match n {
        2 => census_2vars(p, class),
        3 => census_3vars(p, class, opts),
        _ => Err(Error::Unsupported(format!("counting in {n} variables"))),
    }
}

/// `floor(((p - 1)^2 + 6) / 12)`.
pub fn closed_form_shape22(p: u64) -> u64 {
    let q = p.saturating_sub(1);
    (q * q + 6) / 12
}

/// Exact integer conversion used by callers that need a machine word.
pub fn to_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn max_h_examples() {
        assert_eq!(max_h_2vars(10), 4);
        assert_eq!(max_h_2vars(1), 1);
        assert_eq!(max_h_2vars(2), 1);
        assert_eq!(max_h_2vars(3), 2);
        for p in 1..2000u64 {
            let h = max_h_2vars(p);
            assert!(h * (h + 1) / 2 <= p && (h + 1) * (h + 2) / 2 > p);
        }
    }

    #[test]
    fn two_variables() {
        assert_eq!(count_2vars(10), u(10));
        assert_eq!(count_2vars(100), u(444793));
        assert_eq!(count_2vars(6), u(4));
        let c = census_2vars(10, Class::Stable).unwrap();
        let subs: Vec<BigUint> = c.rows.iter().map(|r| r.subtotal.clone()).collect();
        assert_eq!(subs, vec![u(1), u(4), u(4), u(1)]);
    }

    #[test]
    fn bar_list_examples() {
        assert_eq!(
            bar_lists_3vars(10),
            vec![(10, 1, 1), (10, 2, 1), (10, 3, 1), (10, 4, 1), (10, 3, 2), (10, 4, 2), (10, 5, 2), (10, 6, 3)]
        );
        assert_eq!(bar_lists_3vars(1), vec![(1, 1, 1)]);
        assert!(!shape_feasible(6, 2, 10));
        for p in 1..40 {
            for (_, h, k) in bar_lists_3vars(p) {
                assert!(shape_feasible(h, k, p), "p={p} h={h} k={k}");
            }
        }
    }

    #[test]
    fn a_vectors() {
        assert_eq!(a_vector_stable(&[2, 1], 10), Some(vec![8, 7]));
        assert_eq!(a_vector_stable(&[3, 1], 10), Some(vec![6, 5]));
        assert_eq!(a_vector_stable(&[3, 2], 10), Some(vec![4, 3]));
        assert_eq!(a_vector_stable(&[3, 2, 1], 10), Some(vec![3, 2, 1]));
        assert_eq!(a_vector_stable(&[5, 1], 10), None);
        let v = a_vectors_strongly(&[2, 2], 10);
        assert_eq!(v.len(), 28);
        assert!(v.iter().all(|a| (1..=7).contains(&a[1]) && a[0] > a[1] && a[0] <= 8));
        assert_eq!(a_vectors_strongly(&[3, 3, 3], 10), vec![vec![3, 2, 1]]);
        assert!(a_vectors_strongly(&[3, 3, 3], 5).is_empty());
    }

    #[test]
    fn stable_p10() {
        assert_eq!(count_stable_barlist(10, 3, 2).unwrap().0, u(11));
        assert_eq!(count_stable_barlist(10, 4, 2).unwrap().0, u(6));
        assert_eq!(count_stable_barlist(10, 5, 2).unwrap().0, u(1));
        assert_eq!(count_stable_barlist(10, 6, 3).unwrap().0, u(1));
        let c = count_stable_3vars(10).unwrap();
        assert_eq!(c.total, u(29));
        let grouped: Vec<(u64, BigUint)> = c.grouped_by_last();
        assert_eq!(grouped, vec![(1, u(10)), (2, u(18)), (3, u(1))]);
        assert!(count_stable_barlist(10, 7, 2).is_err());
        assert_eq!(count_stable_3vars(1).unwrap().total, u(1));
    }

    #[test]
    fn strongly_stable_p10() {
        assert_eq!(count_sstable_barlist(10, 3, 2).unwrap().0, u(7));
        assert_eq!(count_sstable_barlist(10, 4, 2).unwrap().0, u(5));
        assert_eq!(count_sstable_barlist(10, 5, 2).unwrap().0, u(1));
        assert_eq!(count_sstable_barlist(10, 6, 3).unwrap().0, u(1));
        assert_eq!(count_sstable_3vars(10).unwrap().total, u(24));
        assert_eq!(count_sstable_3vars(1).unwrap().total, u(1));
    }

    #[test]
    fn options_do_not_change_results() {
        for class in [Class::Stable, Class::StronglyStable] {
            let base = census_3vars(14, class, CountOptions::default()).unwrap();
            for (truncate, parallel) in [(false, false), (true, true), (false, true)] {
                assert_eq!(census_3vars(14, class, CountOptions { truncate, parallel }).unwrap(), base);
            }
        }
    }

    #[test]
    fn closed_form() {
        assert_eq!(closed_form_shape22(10), 7);
        assert_eq!(closed_form_shape22(1), 0);
    }
}
