//! Integer partitions, `(c, d)`-plane partitions (plain, skew and shifted), their
//! brute-force enumerators, and strict / shifted higher-dimensional arrays.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::monomials::OrderIdeal;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPartition {
    parts: Vec<u64>,
}

impl IntPartition {
    /// Strips trailing zeros and checks the parts are weakly decreasing and positive.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing and positive")));
        }
        Ok(IntPartition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

/// Columns `P(., 0..=k)` of the largest-part table up to `n`.
fn p_columns(n: usize, k: usize) -> Vec<Vec<BigUint>> {
    let mut cols: Vec<Vec<BigUint>> = Vec::with_capacity(k + 1);
    let mut c0 = vec![BigUint::zero(); n + 1];
    c0[0] = BigUint::one();
    cols.push(c0);
    for j in 1..=k {
        let mut c = vec![BigUint::zero(); n + 1];
        for m in j..=n {
            c[m] = &cols[j - 1][m - 1] + &c[m - j];
        }
        cols.push(c);
    }
    cols
}

/// Number of partitions of `n` with largest part exactly `k`, by
/// `P(n,k) = P(n-1,k-1) + P(n-k,k)`.
pub fn count_p(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if k == n {
        return BigUint::one();
    }
    if k == 0 {
        return BigUint::zero();
    }
    p_columns(n as usize, k as usize)[k as usize][n as usize].clone()
}

/// Number of partitions of `p` into exactly `i` distinct parts, `P(p - C(i,2), i)`.
pub fn count_q(p: u64, i: u64) -> BigUint {
    if i == 1 {
        return BigUint::from(u8::from(p >= 1));
    }
    let shift = i * i.saturating_sub(1) / 2;
    if shift > p {
        return BigUint::zero();
    }
    count_p(p - shift, i)
}

/// `Q(p, 1), ..., Q(p, h)` computed from one shared table.
pub fn count_q_all(p: u64, h: u64) -> Vec<BigUint> {
    let cols = p_columns(p as usize, h as usize);
    (1..=h)
        .map(|i| {
            let shift = i * (i - 1) / 2;
            if i == 1 {
                BigUint::from(u8::from(p >= 1))
            } else if shift > p {
                BigUint::zero()
            } else {
                cols[i as usize][(p - shift) as usize].clone()
            }
        })
        .collect()
}

/// All partitions of `p` into `k` distinct positive parts, in descending lexicographic order.
pub fn enumerate_distinct(p: u64, k: u64) -> Vec<IntPartition> {
    fn go(rem: u64, k: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<IntPartition>) {
        if k == 0 {
            if rem == 0 {
                out.push(IntPartition { parts: cur.clone() });
            }
            return;
        }
        // the k parts are at most max, max-1, ... and at least k, k-1, ..., 1
        let min_rest = (k - 1) * k / 2;
        let hi = max.min(rem.saturating_sub(min_rest));
        for v in (k..=hi).rev() {
            let rest = rem - v;
            // largest achievable sum of k-1 distinct parts below v
            let max_rest = if k > 1 { (k - 1) * (2 * (v - 1) - (k - 2)) / 2 } else { 0 };
            if rest > max_rest {
                break;
            }
            cur.push(v);
            go(rest, k - 1, v - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if p == 0 {
            out.push(IntPartition { parts: Vec::new() });
        }
        return out;
    }
    go(p, k, p, &mut Vec::new(), &mut out);
    out
}

/// `sum a (a + 1) / 2` over the parts.
pub fn minimal_sum(parts: &[u64]) -> u64 {
    parts.iter().map(|a| a * (a + 1) / 2).sum()
}

/// A `(c, d)`-plane partition of skew shape `outer / inner`, or a shifted one of shape
/// `outer` (row `i` then occupies columns `i..=outer_i`). Cells outside the shape are
/// absent rather than zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PlaneJson", into = "PlaneJson")]
pub struct PlanePartition {
    outer: Vec<usize>,
    inner: Vec<usize>,
    shifted: bool,
    c: i64,
    d: i64,
    rows: Vec<Vec<i64>>,
    norm: i64,
}

#[derive(Serialize, Deserialize)]
struct PlaneJson {
    shape: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inner: Option<Vec<usize>>,
    shifted: bool,
    c: i64,
    d: i64,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<PlaneJson> for PlanePartition {
    type Error = Error;
    fn try_from(j: PlaneJson) -> Result<Self> {
        let inner = j.inner.unwrap_or_else(|| vec![0; j.shape.len()]);
        PlanePartition::new(j.shape, inner, j.shifted, j.c, j.d, j.rows)
    }
}

impl From<PlanePartition> for PlaneJson {
    fn from(p: PlanePartition) -> Self {
        let inner = p.inner.iter().any(|&m| m > 0).then_some(p.inner);
        PlaneJson { shape: p.outer, inner, shifted: p.shifted, c: p.c, d: p.d, rows: p.rows }
    }
}

impl PlanePartition {
    /// Wraps an array after checking each row has exactly the cells of its shape row.
    pub fn new(
        outer: Vec<usize>,
        inner: Vec<usize>,
        shifted: bool,
        c: i64,
        d: i64,
        rows: Vec<Vec<i64>>,
    ) -> Result<Self> {
        if inner.len() != outer.len() {
            return Err(Error::Ragged(format!("inner shape has {} rows, outer {}", inner.len(), outer.len())));
        }
        if shifted && inner.iter().any(|&m| m != 0) {
            return Err(Error::Ragged("shifted shapes take no inner shape".into()));
        }
        if rows.len() != outer.len() {
            return Err(Error::Ragged(format!("{} rows for a shape with {} rows", rows.len(), outer.len())));
        }
        for (i, row) in rows.iter().enumerate() {
            let want = row_len(&outer, &inner, shifted, i)
                .ok_or_else(|| Error::Ragged(format!("row {} of the shape is negative", i + 1)))?;
            if row.len() != want {
                return Err(Error::Ragged(format!("row {} has {} entries, shape needs {want}", i + 1, row.len())));
            }
        }
        let norm = rows.iter().flatten().sum();
        Ok(PlanePartition { outer, inner, shifted, c, d, rows, norm })
    }

    /// Unshifted, straight shape given by the row lengths, with `c = d = 1`.
    pub fn strict_from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let outer: Vec<usize> = rows.iter().map(Vec::len).collect();
        let inner = vec![0; outer.len()];
        PlanePartition::new(outer, inner, false, 1, 1, rows)
    }

    /// Shifted shape `lambda_i = i + len_i - 1`, with `c = 1, d = 0`.
    pub fn shifted_from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let outer: Vec<usize> = rows.iter().enumerate().map(|(i, r)| i + r.len()).collect();
        let inner = vec![0; outer.len()];
        PlanePartition::new(outer, inner, true, 1, 0, rows)
    }

    pub fn shape(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn shifted(&self) -> bool {
        self.shifted
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn norm(&self) -> i64 {
        self.norm
    }

    /// 0-based column of entry `k` in row `i`.
    fn column(&self, i: usize, k: usize) -> usize {
        if self.shifted {
            i + k
        } else {
            self.inner[i] + k
        }
    }

    fn entry_at(&self, i: usize, col: usize) -> Option<i64> {
        let start = self.column(i, 0);
        col.checked_sub(start).and_then(|k| self.rows[i].get(k).copied())
    }

    /// Whether every row and column inequality holds.
    pub fn validate(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] < w[1] + self.c) {
                return false;
            }
            if i + 1 < self.rows.len() {
                for (k, &v) in row.iter().enumerate() {
                    if let Some(below) = self.entry_at(i + 1, self.column(i, k)) {
                        if v < below + self.d {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Left-justifies a shifted partition into an unshifted one with the same rows and
    /// `c = d = 1`.
    pub fn unshift_left(&self) -> Result<PlanePartition> {
        if !self.shifted {
            return Err(Error::InvalidPartition("partition is not shifted".into()));
        }
        PlanePartition::strict_from_rows(self.rows.clone())
    }
}

fn row_len(outer: &[usize], inner: &[usize], shifted: bool, i: usize) -> Option<usize> {
    if shifted {
        (outer[i] + 1).checked_sub(i + 1)
    } else {
        outer[i].checked_sub(inner[i])
    }
}

/// Brute-force enumeration request.
///
/// `first` bounds the first part of each row: an upper bound for unshifted shapes, an
/// exact value for shifted ones; `None` leaves it free. `last_min` bounds the last
/// part of each row from below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneSpec {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    pub shifted: bool,
    pub c: i64,
    pub d: i64,
    pub first: Option<Vec<i64>>,
    pub last_min: Vec<i64>,
    pub norm: i64,
}

impl PlaneSpec {
    /// Straight unshifted shape, positive parts, free first parts.
    pub fn straight(outer: Vec<usize>, c: i64, d: i64, norm: i64) -> Self {
        let r = outer.len();
        PlaneSpec { inner: vec![0; r], outer, shifted: false, c, d, first: None, last_min: vec![1; r], norm }
    }

    /// Shifted shape, positive parts, free first parts.
    pub fn shifted(outer: Vec<usize>, c: i64, d: i64, norm: i64) -> Self {
        let r = outer.len();
        PlaneSpec { inner: vec![0; r], outer, shifted: true, c, d, first: None, last_min: vec![1; r], norm }
    }
}

/// All partitions matching `spec`, in descending lexicographic order of the flattened entries.
pub fn enumerate_plane_partitions(spec: &PlaneSpec) -> Result<Vec<PlanePartition>> {
    let r = spec.outer.len();
    if spec.inner.len() != r || spec.last_min.len() != r || spec.first.as_ref().is_some_and(|a| a.len() != r) {
        return Err(Error::Precondition("shape, inner shape and bounds must have equal length".into()));
    }
    if spec.c < 0 {
        return Err(Error::Unsupported("enumeration needs c >= 0".into()));
    }
    if spec.first.is_none() && spec.last_min.iter().any(|&b| b < 1) {
        return Err(Error::Unsupported("free first parts need positive lower bounds".into()));
    }
    let lens: Vec<usize> = (0..r)
        .map(|i| row_len(&spec.outer, &spec.inner, spec.shifted, i))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Precondition("shape row shorter than its offset".into()))?;
    // cells in row-major order: (row, index within row)
    let cells: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..lens[i]).map(move |k| (i, k))).collect();
    let lo: Vec<i64> =
        cells.iter().map(|&(i, k)| spec.last_min[i] + spec.c * (lens[i] - 1 - k) as i64).collect();
    let mut suffix_min = vec![0i64; cells.len() + 1];
    for x in (0..cells.len()).rev() {
        suffix_min[x] = suffix_min[x + 1] + lo[x];
    }
    let start = |i: usize| if spec.shifted { i } else { spec.inner[i] };
    let mut rows: Vec<Vec<i64>> = lens.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        x: usize,
        remaining: i64,
        cells: &[(usize, usize)],
        lo: &[i64],
        suffix_min: &[i64],
        spec: &PlaneSpec,
        start: &dyn Fn(usize) -> usize,
        rows: &mut Vec<Vec<i64>>,
        out: &mut Vec<PlanePartition>,
    ) {
        if x == cells.len() {
            if remaining == 0 {
                let p = PlanePartition::new(
                    spec.outer.clone(),
                    spec.inner.clone(),
                    spec.shifted,
                    spec.c,
                    spec.d,
                    rows.clone(),
                )
                .expect("enumerated rows match the shape");
                out.push(p);
            }
            return;
        }
        let (i, k) = cells[x];
        let mut hi = remaining - suffix_min[x + 1];
        let mut low = lo[x];
        if k == 0 {
            if let Some(a) = &spec.first {
                hi = hi.min(a[i]);
                if spec.shifted {
                    low = low.max(a[i]);
                }
            }
        } else {
            hi = hi.min(rows[i][k - 1] - spec.c);
        }
        if i > 0 {
            let col = start(i) + k;
            if let Some(kk) = col.checked_sub(start(i - 1)) {
                if let Some(&above) = rows[i - 1].get(kk) {
                    hi = hi.min(above - spec.d);
                }
            }
        }
        let mut v = hi;
        while v >= low {
            rows[i].push(v);
            go(x + 1, remaining - v, cells, lo, suffix_min, spec, start, rows, out);
            rows[i].pop();
            v -= 1;
        }
    }

    go(0, spec.norm, &cells, &lo, &suffix_min, spec, &start, &mut rows, &mut out);
    Ok(out)
}

/// Strict or shifted arrays in three or more dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolidKind {
    Strict,
    Shifted,
}

/// A finite array of positive integers indexed by exponent vectors of `x_2, ..., x_n`.
///
/// The value at `(e_2, ..., e_n)` is the number of powers of `x_1` an escalier holds
/// over `x_2^e_2 ... x_n^e_n`; arrays read from layered listings are converted to these
/// coordinates on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SolidPartition {
    kind: SolidKind,
    dim: usize,
    cells: BTreeMap<Vec<u32>, i64>,
}

impl SolidPartition {
    pub fn new(kind: SolidKind, dim: usize, cells: BTreeMap<Vec<u32>, i64>) -> Result<Self> {
        if let Some(key) = cells.keys().find(|k| k.len() != dim) {
            return Err(Error::Ragged(format!("cell {key:?} does not have {dim} coordinates")));
        }
        Ok(SolidPartition { kind, dim, cells })
    }

    /// Layers `layers[l][r][s]` of a strict array; a zero marks an absent cell. Layer
    /// index, row index and column index become the exponents of `x_4`, `x_3`, `x_2`.
    pub fn from_strict_layers(layers: &[Vec<Vec<i64>>]) -> Result<Self> {
        let mut cells = BTreeMap::new();
        for (l, layer) in layers.iter().enumerate() {
            for (r, row) in layer.iter().enumerate() {
                let mut ended = false;
                for (s, &v) in row.iter().enumerate() {
                    if v == 0 {
                        ended = true;
                        continue;
                    }
                    if ended || v < 0 {
                        return Err(Error::Ragged(format!("layer {} row {} has a gap", l + 1, r + 1)));
                    }
                    cells.insert(vec![s as u32, r as u32, l as u32], v);
                }
            }
        }
        SolidPartition::new(SolidKind::Strict, 3, cells)
    }

    /// Layers of a shifted array in the padded layout, where layer `l` starts at row
    /// `l` and row `r` at column `r` (all 0-based); zeros are padding.
    pub fn from_shifted_layers(layers: &[Vec<Vec<i64>>]) -> Result<Self> {
        let mut cells = BTreeMap::new();
        for (l, layer) in layers.iter().enumerate() {
            for (r, row) in layer.iter().enumerate() {
                for (s, &v) in row.iter().enumerate() {
                    if v == 0 {
                        continue;
                    }
                    if v < 0 || r < l || s < r {
                        return Err(Error::Ragged(format!(
                            "layer {} row {} column {} lies outside the shifted layout",
                            l + 1,
                            r + 1,
                            s + 1
                        )));
                    }
                    cells.insert(vec![(s - r) as u32, (r - l) as u32, l as u32], v);
                }
            }
        }
        SolidPartition::new(SolidKind::Shifted, 3, cells)
    }

    /// The array of `x_1`-column heights of an escalier in `n >= 2` variables.
    pub fn from_order_ideal(kind: SolidKind, n: &OrderIdeal) -> Result<Self> {
        if n.arity() < 2 {
            return Err(Error::Precondition("need at least two variables".into()));
        }
        let mut cells: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for t in n.terms() {
            *cells.entry(t.exponents()[1..].to_vec()).or_insert(0) += 1;
        }
        SolidPartition::new(kind, n.arity() - 1, cells)
    }

    pub fn kind(&self) -> SolidKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.cells
    }

    pub fn norm(&self) -> i64 {
        self.cells.values().sum()
    }

    /// The bar list of the corresponding escalier: the norm, then the number of
    /// distinct suffixes `(e_i, ..., e_n)` for `i = 2..n`.
    pub fn bar_list(&self) -> Vec<usize> {
        let mut out = vec![self.norm() as usize];
        for skip in 0..self.dim {
            let distinct: BTreeSet<&[u32]> = self.cells.keys().map(|k| &k[skip..]).collect();
            out.push(distinct.len());
        }
        out
    }
}

/// Validity of a solid (or higher) partition; see [`validate_array`].
pub fn validate_solid(sp: &SolidPartition) -> Result<bool> {
    if sp.dim < 3 {
        return Err(Error::Precondition(format!("dimension {} is below 3", sp.dim)));
    }
    Ok(validate_array(sp.kind, &sp.cells))
}

/// Validity of a strict or shifted array of any dimension `d >= 1`.
///
/// Both kinds need positive values on a divisor-closed support and a projection
/// (counting cells along the first axis) that is itself valid of the same kind in one
/// dimension less. Strict arrays decrease strictly between any two comparable cells.
/// Shifted arrays decrease strictly along the first axis, and moving one unit from
/// axis `k - 1` to axis `k` never increases the value.
pub fn validate_array(kind: SolidKind, cells: &BTreeMap<Vec<u32>, i64>) -> bool {
    if cells.is_empty() {
        return true;
    }
    let d = cells.keys().next().unwrap().len();
    if d == 0 || cells.keys().any(|k| k.len() != d) || cells.values().any(|&v| v < 1) {
        return false;
    }
    for key in cells.keys() {
        for a in 0..d {
            if key[a] > 0 {
                let mut p = key.clone();
                p[a] -= 1;
                if !cells.contains_key(&p) {
                    return false;
                }
            }
        }
    }
    match kind {
        SolidKind::Strict => {
            for (x, vx) in cells {
                for (y, vy) in cells {
                    if x != y && x.iter().zip(y).all(|(a, b)| a <= b) && vx <= vy {
                        return false;
                    }
                }
            }
        }
        SolidKind::Shifted => {
            for (x, vx) in cells {
                let mut next = x.clone();
                next[0] += 1;
                if cells.get(&next).is_some_and(|vn| vn >= vx) {
                    return false;
                }
                for k in 1..d {
                    if x[k - 1] == 0 {
                        continue;
                    }
                    let mut moved = x.clone();
                    moved[k - 1] -= 1;
                    moved[k] += 1;
                    if cells.get(&moved).is_some_and(|vm| vm > vx) {
                        return false;
                    }
                }
            }
        }
    }
    if d == 1 {
        return true;
    }
    let mut proj: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for key in cells.keys() {
        *proj.entry(key[1..].to_vec()).or_insert(0) += 1;
    }
    validate_array(kind, &proj)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<i64>> {
        v.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn p_and_q() {
        for n in 0..10 {
            assert_eq!(count_p(n, n), BigUint::one());
        }
        assert_eq!(count_p(4, 4), BigUint::one());
        assert_eq!(count_p(9, 2), BigUint::from(4u32));
        assert_eq!(count_p(5, 0), BigUint::zero());
        assert_eq!(count_p(3, 5), BigUint::zero());
        assert_eq!(count_q(10, 3), BigUint::from(4u32));
        assert_eq!(count_q(10, 4), BigUint::one());
        assert_eq!(count_q(7, 1), BigUint::one());
        assert_eq!(count_q(3, 3), BigUint::zero());
        let all = count_q_all(10, 5);
        let single: Vec<BigUint> = (1..=5).map(|i| count_q(10, i)).collect();
        assert_eq!(all, single);
    }

    #[test]
    fn distinct_enumeration() {
        let parts = |v: Vec<IntPartition>| v.into_iter().map(|p| p.parts).collect::<Vec<_>>();
        assert_eq!(parts(enumerate_distinct(6, 2)), vec![vec![5, 1], vec![4, 2]]);
        assert_eq!(parts(enumerate_distinct(3, 2)), vec![vec![2, 1]]);
        assert_eq!(parts(enumerate_distinct(10, 4)), vec![vec![4, 3, 2, 1]]);
        assert!(enumerate_distinct(4, 3).is_empty());
        for p in 1..=40 {
            for k in 1..=8 {
                assert_eq!(BigUint::from(enumerate_distinct(p, k).len()), count_q(p, k), "p={p} k={k}");
            }
        }
    }

    #[test]
    fn minimal_sums() {
        assert_eq!(minimal_sum(&[5, 1]), 16);
        assert_eq!(minimal_sum(&[4, 2, 1]), 14);
        assert_eq!(minimal_sum(&[1]), 1);
    }

    #[test]
    fn validate_examples() {
        let p = PlanePartition::strict_from_rows(rows(&[&[5, 4, 3], &[4, 1]])).unwrap();
        assert!(p.validate());
        let s = PlanePartition::new(vec![3, 3], vec![0, 0], true, 1, 0, rows(&[&[5, 4, 3], &[4, 1]])).unwrap();
        assert!(s.validate());
        let bad = PlanePartition::new(vec![2], vec![0], false, 1, 0, rows(&[&[2, 2]])).unwrap();
        assert!(!bad.validate());
        assert!(PlanePartition::new(vec![3, 2], vec![0, 0], false, 1, 1, rows(&[&[5, 4], &[4, 1]])).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let spec = PlaneSpec {
            outer: vec![2, 1],
            inner: vec![0, 0],
            shifted: false,
            c: 1,
            d: 1,
            first: Some(vec![4, 3]),
            last_min: vec![1, 1],
            norm: 8,
        };
        let got: Vec<Vec<Vec<i64>>> =
            enumerate_plane_partitions(&spec).unwrap().into_iter().map(|p| p.rows).collect();
        assert_eq!(got, vec![rows(&[&[4, 3], &[1]]), rows(&[&[4, 2], &[2]]), rows(&[&[4, 1], &[3]])]);

        let spec = PlaneSpec {
            outer: vec![3, 3, 3],
            inner: vec![0, 0, 0],
            shifted: true,
            c: 1,
            d: 0,
            first: Some(vec![6, 3, 1]),
            last_min: vec![1, 1, 1],
            norm: 17,
        };
        let got = enumerate_plane_partitions(&spec).unwrap();
        assert_eq!(got.len(), 3);
        assert!(got.iter().any(|p| p.rows == rows(&[&[6, 5, 1], &[3, 1], &[1]])));
        assert!(got.iter().all(|p| p.validate() && p.norm() == 17));

        let tiny = PlaneSpec::straight(vec![2, 1], 1, 1, 3);
        assert!(enumerate_plane_partitions(&tiny).unwrap().is_empty());
    }

    #[test]
    fn json_shape() {
        let s = PlanePartition::shifted_from_rows(rows(&[&[3, 2], &[1]])).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"shape":[2,2],"shifted":true,"c":1,"d":0,"rows":[[3,2],[1]]}"#);
        assert_eq!(serde_json::from_str::<PlanePartition>(&j).unwrap(), s);
        assert!(serde_json::from_str::<PlanePartition>(r#"{"shape":[2,2],"shifted":true,"c":1,"d":0,"rows":[[3,2],[1,1]]}"#).is_err());
    }

    #[test]
    fn solid_examples() {
        let strict = SolidPartition::from_strict_layers(&[
            rows(&[&[4, 3, 2, 1], &[3, 1], &[1]]),
            rows(&[&[2, 1], &[1]]),
            rows(&[&[1]]),
        ])
        .unwrap();
        assert!(validate_solid(&strict).unwrap());
        let shifted = SolidPartition::from_shifted_layers(&[
            rows(&[&[3, 2, 1], &[0, 2, 1], &[0, 0, 1]]),
            rows(&[&[0, 0, 0], &[0, 2, 1]]),
        ])
        .unwrap();
        assert!(validate_solid(&shifted).unwrap());
        let stacked =
            SolidPartition::from_strict_layers(&[rows(&[&[2, 1]]), rows(&[&[2]])]).unwrap();
        assert!(!validate_solid(&stacked).unwrap());
        assert!(SolidPartition::from_strict_layers(&[rows(&[&[2, 0, 1]])]).is_err());
        let flat = SolidPartition::new(SolidKind::Strict, 2, BTreeMap::new()).unwrap();
        assert!(validate_solid(&flat).is_err());
    }
}
