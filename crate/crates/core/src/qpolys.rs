//! Univariate polynomials over an integer-like ring, Gaussian binomials,
//! determinants of polynomial matrices, and the norm generating functions of
//! bounded `(c, d)`-plane partitions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Coefficient rings usable in [`Poly`]. Division must be exact integer division.
pub trait Coeff: Num + Clone + PartialOrd + fmt::Debug + fmt::Display + Send + Sync {}

impl<T: Num + Clone + PartialOrd + fmt::Debug + fmt::Display + Send + Sync> Coeff for T {}

/// Dense polynomial, index = degree, optionally truncated modulo `x^(T+1)`.
#[derive(Clone, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
    trunc: Option<usize>,
}

impl<T: Coeff> Poly<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs, trunc: None };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self
    where
        T: From<i64>,
    {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new(), trunc: None }
    }

    pub fn one() -> Self {
        Self::monomial(0, T::one())
    }

    pub fn monomial(deg: usize, c: T) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        Self::monomial(k, T::one())
    }

    /// `[k] = 1 - x^k`.
    pub fn bracket(k: usize) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self::one() - Self::x_pow(k)
    }

    /// Truncates modulo `x^(t+1)`; subsequent products keep the truncation.
    pub fn truncated(mut self, t: usize) -> Self {
        self.trunc = Some(self.trunc.map_or(t, |u| u.min(t)));
        self.normalize();
        self
    }

    pub fn truncation(&self) -> Option<usize> {
        self.trunc
    }

    fn normalize(&mut self) {
        if let Some(t) = self.trunc {
            self.coeffs.truncate(t + 1);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> T {
        self.coeffs.get(d).cloned().unwrap_or_else(T::zero)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        let mut p = Poly { coeffs, trunc: self.trunc.map(|t| t + k) };
        p.normalize();
        p
    }

    /// Division by `x^k`; fails if a coefficient below degree `k` is nonzero.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        let coeffs = self.coeffs.iter().skip(k).cloned().collect();
        let mut p = Poly { coeffs, trunc: self.trunc.map(|t| t.saturating_sub(k)) };
        p.normalize();
        Ok(p)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    fn join_trunc(a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Exact long division; errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let dd = divisor.degree().ok_or(Error::InexactDivision)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let sd = rem.len() - 1;
        if sd < dd {
            return Err(Error::InexactDivision);
        }
        let mut quot = vec![T::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            if !(top.clone() % lead.clone()).is_zero() {
                return Err(Error::InexactDivision);
            }
            let q = top / lead.clone();
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - q.clone() * dc.clone();
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl<T: Coeff> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        let mut p = Poly { coeffs, trunc: Poly::<T>::join_trunc(self.trunc, rhs.trunc) };
        p.normalize();
        p
    }
}

impl<T: Coeff> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        let mut p = Poly { coeffs, trunc: Poly::<T>::join_trunc(self.trunc, rhs.trunc) };
        p.normalize();
        p
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Self {
        &Poly::zero() - &self
    }
}

impl<T: Coeff> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        let trunc = Poly::<T>::join_trunc(self.trunc, rhs.trunc);
        if self.is_zero() || rhs.is_zero() {
            return Poly { coeffs: Vec::new(), trunc };
        }
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Some(t) = trunc {
            len = len.min(t + 1);
        }
        let mut coeffs = vec![T::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        let mut p = Poly { coeffs, trunc };
        p.normalize();
        p
    }
}


/// Equality ignores the truncation setting and compares coefficients only.
impl<T: Coeff> PartialEq for Poly<T> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<T: Coeff + Eq> Eq for Poly<T> {}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < T::zero();
            let abs = if neg { T::zero() - c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if !abs.is_one() || d == 0 {
                write!(f, "{abs}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coeff> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut st = s.serialize_struct("Poly", 1)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// `n(n-1)/2` for every integer `n`, so `binom2(-1) = 1`.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Gaussian binomial `[n]! / ([k]! [n-k]!)`, by exact long division.
///
/// Returns 1 for `k = 0` and 0 when `k < 0` or `n < k` (for any sign of `n`).
pub fn gauss_binomial<T: Coeff>(n: i64, k: i64) -> Poly<T> {
    if k == 0 {
        return Poly::one();
    }
    if k < 0 || n < k {
        return Poly::zero();
    }
    let k = k.min(n - k);
    if k == 0 {
        return Poly::one();
    }
    let mut num = Poly::one();
    let mut den = Poly::one();
    for i in 1..=k {
        num = &num * &Poly::bracket((n - k + i) as usize);
        den = &den * &Poly::bracket(i as usize);
    }
    num.div_exact(&den).expect("Gaussian binomial division is exact")
}

/// Gaussian binomial built by the q-Pascal recurrence `[n,k] = [n-1,k-1] + x^k [n-1,k]`.
pub fn gauss_binomial_pascal<T: Coeff>(n: i64, k: i64) -> Poly<T> {
    if k == 0 {
        return Poly::one();
    }
    if k < 0 || n < k {
        return Poly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let mut row: Vec<Poly<T>> = vec![Poly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m.min(k) + 1);
        for j in 0..=m.min(k) {
            let left = if j == 0 { Poly::zero() } else { row[j - 1].clone() };
            let right = if j < row.len() && j < m { row[j].shift(j) } else { Poly::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Gaussian binomial modulo `x^(t+1)`, via power-series division by each `[i]`.
pub fn gauss_binomial_truncated<T: Coeff>(n: i64, k: i64, t: usize) -> Poly<T> {
    if k == 0 {
        return Poly::<T>::one().truncated(t);
    }
    if k < 0 || n < k {
        return Poly::<T>::zero().truncated(t);
    }
    let k = k.min(n - k);
    let mut c = vec![T::zero(); t + 1];
    c[0] = T::one();
    for i in 1..=k {
        let up = (n - k + i) as usize;
        for d in (up..=t).rev() {
            c[d] = c[d].clone() - c[d - up].clone();
        }
        let down = i as usize;
        for d in down..=t {
            c[d] = c[d].clone() + c[d - down].clone();
        }
    }
    Poly::from_coeffs(c).truncated(t)
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let r = m.len();
    if r == 0 {
        return Err(Error::NonSquare { rows: 0, row: 0, cols: 0 });
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != r {
            return Err(Error::NonSquare { rows: r, row: i + 1, cols: row.len() });
        }
    }
    Ok(r)
}

/// Determinant: cofactor expansion for size at most 6, fraction-free elimination otherwise.
pub fn det<T: Coeff>(m: &[Vec<Poly<T>>]) -> Result<Poly<T>> {
    let r = check_square(m)?;
    if r <= 6 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// Laplace expansion along the first row.
pub fn det_cofactor<T: Coeff>(m: &[Vec<Poly<T>>]) -> Result<Poly<T>> {
    let r = check_square(m)?;
    let trunc = m.iter().flatten().filter_map(Poly::truncation).min();
    let mut cols: Vec<usize> = (0..r).collect();
    let mut d = laplace(m, 0, &mut cols);
    if let Some(t) = trunc {
        d = d.truncated(t);
    }
    Ok(d)
}

fn laplace<T: Coeff>(m: &[Vec<Poly<T>>], row: usize, cols: &mut Vec<usize>) -> Poly<T> {
    if row == m.len() {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for k in 0..cols.len() {
        let c = cols[k];
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        cols.remove(k);
        let minor = laplace(m, row + 1, cols);
        cols.insert(k, c);
        let term = entry * &minor;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Bareiss fraction-free elimination with exact polynomial division.
///
/// Truncation is applied to the result only, since the intermediate divisions need
/// the full polynomials.
pub fn det_bareiss<T: Coeff>(m: &[Vec<Poly<T>>]) -> Result<Poly<T>> {
    let r = check_square(m)?;
    let trunc = m.iter().flatten().filter_map(Poly::truncation).min();
    let mut a: Vec<Vec<Poly<T>>> = m
        .iter()
        .map(|row| row.iter().map(|p| Poly::from_coeffs(p.coeffs().to_vec())).collect())
        .collect();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..r.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..r).find(|&i| !a[i][k].is_zero()) {
                None => return Ok(Poly::zero()),
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
            }
        }
        for i in k + 1..r {
            for j in k + 1..r {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let mut d = a[r - 1][r - 1].clone();
    if negate {
        d = -d;
    }
    if let Some(t) = trunc {
        d = d.truncated(t);
    }
    Ok(d)
}

/// Determinant of a matrix whose `(s, t)` entry is `x^{e(s,t)} * g(s,t)` with possibly
/// negative `e`. Rows are scaled by powers of `x` to clear negative exponents, and the
/// scaling is divided out of the result.
fn laurent_det<T: Coeff>(entries: Vec<Vec<Option<(i64, i64, i64)>>>, trunc: Option<usize>) -> Result<Poly<T>> {
    let lifts: Vec<i64> = entries
        .iter()
        .map(|row| (-row.iter().flatten().map(|&(e, _, _)| e).min().unwrap_or(0)).max(0))
        .collect();
    let total_shift = lifts.iter().sum::<i64>() as usize;
    let m: Vec<Vec<Poly<T>>> = entries
        .into_iter()
        .zip(&lifts)
        .map(|(row, &lift)| {
            row.into_iter()
                .map(|entry| match entry {
                    None => Poly::zero(),
                    Some((e, n, k)) => {
                        let deg = (e + lift) as usize;
                        match trunc {
                            // the entry only matters up to degree t + total_shift of the lifted determinant
                            Some(t) if deg > t + total_shift => Poly::zero(),
                            Some(t) => gauss_binomial_truncated(n, k, t + total_shift - deg)
                                .shift(deg)
                                .truncated(t + total_shift),
                            None => gauss_binomial(n, k).shift(deg),
                        }
                    }
                })
                .collect()
        })
        .collect();
    let mut d = det(&m)?.unshift(total_shift)?;
    if let Some(t) = trunc {
        d = d.truncated(t);
    }
    Ok(d)
}

/// Whether the Gaussian binomial `[n, k]` is a nonzero polynomial.
fn gauss_nonzero(n: i64, k: i64) -> bool {
    k == 0 || (k > 0 && n >= k)
}

/// Parameters of the strict-shape generating function: shape `lambda / mu`, row bounds
/// `a` (first part of row `i` at most `a_i`) and `b` (last part at least `b_i`), and
/// strictness `c` along rows, `d` down columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictGf {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub c: i64,
    pub d: i64,
}

impl StrictGf {
    pub fn check(&self) -> Result<()> {
        let r = self.lambda.len();
        if r == 0 {
            return Err(Error::Precondition("shape has no rows".into()));
        }
        for (name, v) in [("mu", &self.mu), ("a", &self.a), ("b", &self.b)] {
            if v.len() != r {
                return Err(Error::Precondition(format!("{name} has {} entries, expected {r}", v.len())));
            }
        }
        let decreasing = |v: &[i64]| v.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing(&self.lambda) || !decreasing(&self.mu) {
            return Err(Error::Precondition("lambda and mu must be weakly decreasing".into()));
        }
        if self.lambda.iter().zip(&self.mu).any(|(l, m)| l < m) {
            return Err(Error::Precondition("lambda must contain mu".into()));
        }
        let (c, d) = (self.c, self.d);
        for i in 0..r - 1 {
            if self.a[i] - c * (self.mu[i] - self.mu[i + 1]) + (1 - d) < self.a[i + 1] {
                return Err(Error::Precondition(format!("bound a fails between rows {} and {}", i + 1, i + 2)));
            }
            if self.b[i] + c * (self.lambda[i] - self.lambda[i + 1]) + (1 - d) < self.b[i + 1] {
                return Err(Error::Precondition(format!("bound b fails between rows {} and {}", i + 1, i + 2)));
            }
        }
        Ok(())
    }

    fn build<T: Coeff>(&self, trunc: Option<usize>) -> Result<Poly<T>> {
        self.check()?;
        let r = self.lambda.len();
        let (c, d) = (self.c, self.d);
        let entries = (1..=r as i64)
            .map(|s| {
                let si = (s - 1) as usize;
                (1..=r as i64)
                    .map(|t| {
                        let ti = (t - 1) as usize;
                        let (ls, mt) = (self.lambda[si], self.mu[ti]);
                        let k = ls - s - mt + t;
                        let n = (1 - c) * (ls - mt) - d * (s - t) + self.a[ti] - self.b[si] + c;
                        if !gauss_nonzero(n, k) {
                            return None;
                        }
                        let e = self.b[si] * k
                            + (1 - c - d) * (binom2(mt + s - t) - binom2(mt))
                            + c * binom2(k);
                        Some((e, n, k))
                    })
                    .collect()
            })
            .collect();
        laurent_det(entries, trunc)
    }
}

/// Norm generating function of `(c, d)`-plane partitions of shape `lambda / mu` with
/// first part of row `i` at most `a_i` and last part at least `b_i`.
pub fn gf_strict<T: Coeff>(spec: &StrictGf) -> Result<Poly<T>> {
    spec.build(None)
}

/// [`gf_strict`] modulo `x^(t+1)`.
pub fn gf_strict_truncated<T: Coeff>(spec: &StrictGf, t: usize) -> Result<Poly<T>> {
    spec.build(Some(t))
}

/// Parameters of the shifted-shape generating function: shape `lambda`, first part of
/// row `i` exactly `a_i`, last part at least `b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedGf {
    pub lambda: Vec<i64>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub c: i64,
    pub d: i64,
}

impl ShiftedGf {
    pub fn check(&self) -> Result<()> {
        let r = self.lambda.len();
        if r == 0 {
            return Err(Error::Precondition("shape has no rows".into()));
        }
        for (name, v) in [("a", &self.a), ("b", &self.b)] {
            if v.len() != r {
                return Err(Error::Precondition(format!("{name} has {} entries, expected {r}", v.len())));
            }
        }
        if !self.lambda.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("lambda must be weakly decreasing".into()));
        }
        if self.lambda[r - 1] < r as i64 {
            return Err(Error::Precondition("last row of a shifted shape must reach its diagonal".into()));
        }
        let (c, d) = (self.c, self.d);
        for i in 0..r - 1 {
            if self.a[i] - c - d < self.a[i + 1] {
                return Err(Error::Precondition(format!("bound a fails between rows {} and {}", i + 1, i + 2)));
            }
            if self.b[i] + c * (self.lambda[i] - self.lambda[i + 1]) + 1 - d < self.b[i + 1] {
                return Err(Error::Precondition(format!("bound b fails between rows {} and {}", i + 1, i + 2)));
            }
        }
        Ok(())
    }

    /// The exponent of the monomial prefactor.
    pub fn prefactor_exponent(&self) -> i64 {
        (0..self.lambda.len())
            .map(|k| {
                let li = self.lambda[k] - (k as i64 + 1);
                self.b[k] * li + self.a[k] + self.c * binom2(li)
            })
            .sum()
    }

    /// The determinant without the monomial prefactor.
    pub fn determinant<T: Coeff>(&self) -> Result<Poly<T>> {
        self.build(None, false)
    }

    fn build<T: Coeff>(&self, trunc: Option<usize>, prefactor: bool) -> Result<Poly<T>> {
        self.check()?;
        let r = self.lambda.len();
        let (c, d) = (self.c, self.d);
        let n1 = if prefactor { self.prefactor_exponent() } else { 0 };
        let entries = (1..=r as i64)
            .map(|s| {
                let si = (s - 1) as usize;
                let ls = self.lambda[si] - s;
                (1..=r as i64)
                    .map(|t| {
                        let ti = (t - 1) as usize;
                        let n = ls * (1 - c) + (1 - c - d) * (s - t) + self.a[ti] - self.b[si];
                        // the prefactor rides on the first row
                        gauss_nonzero(n, ls).then_some((if s == 1 { n1 } else { 0 }, n, ls))
                    })
                    .collect()
            })
            .collect();
        laurent_det(entries, trunc)
    }
}

/// Norm generating function of shifted `(c, d)`-plane partitions of shape `lambda`
/// with first part of row `i` equal to `a_i` and last part at least `b_i`.
pub fn gf_shifted<T: Coeff>(spec: &ShiftedGf) -> Result<Poly<T>> {
    spec.build(None, true)
}

/// [`gf_shifted`] modulo `x^(t+1)`.
pub fn gf_shifted_truncated<T: Coeff>(spec: &ShiftedGf, t: usize) -> Result<Poly<T>> {
    spec.build(Some(t), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Poly<BigInt>;

    fn p(c: &[i64]) -> P {
        Poly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn truncation_keeps_terms_lifted_past_the_bound() {
        let spec = StrictGf { lambda: vec![2, 2, 2], mu: vec![0; 3], a: vec![5, 5, 5], b: vec![2, 1, 1], c: 1, d: 1 };
        let full: P = gf_strict(&spec).unwrap();
        for t in 0..=20 {
            let tr: P = gf_strict_truncated(&spec, t).unwrap();
            assert_eq!(tr, full.clone().truncated(t), "t={t}");
        }
    }

    #[test]
    fn gauss_examples() {
        let g: P = gauss_binomial(5, 2);
        assert_eq!(g, &p(&[1, 0, 1]) * &p(&[1, 1, 1, 1, 1]));
        assert_eq!(gauss_binomial::<BigInt>(2, 2), P::one());
        assert!(gauss_binomial::<BigInt>(0, 2).is_zero());
        assert!(gauss_binomial::<BigInt>(-3, 2).is_zero());
        assert!(gauss_binomial::<BigInt>(4, -1).is_zero());
        assert_eq!(gauss_binomial::<BigInt>(-4, 0), P::one());
    }

    #[test]
    fn gauss_routes_agree() {
        for n in 0..=30 {
            for k in 0..=n {
                let a: P = gauss_binomial(n, k);
                assert_eq!(a, gauss_binomial_pascal(n, k), "n={n} k={k}");
                let t = 17;
                assert_eq!(a.clone().truncated(t), gauss_binomial_truncated(n, k, t));
                let ordinary = (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1));
                assert_eq!(a.eval(&BigInt::from(1)), ordinary);
            }
        }
    }

    #[test]
    fn division_rejects_remainder() {
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), Err(Error::InexactDivision));
        assert_eq!(p(&[2, 3, 1]).div_exact(&p(&[1, 1])).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn det_basics() {
        let id: Vec<Vec<P>> =
            (0..3).map(|i| (0..3).map(|j| if i == j { P::one() } else { P::zero() }).collect()).collect();
        assert_eq!(det(&id).unwrap(), P::one());
        assert_eq!(det(&[vec![p(&[3, 1])]]).unwrap(), p(&[3, 1]));
        assert!(det::<BigInt>(&[vec![P::one(), P::one()]]).is_err());
        assert!(det::<BigInt>(&[]).is_err());
    }

    #[test]
    fn det_routes_agree() {
        let m: Vec<Vec<P>> = (0..5)
            .map(|i| (0..5).map(|j| p(&[(i * 3 + j) % 5 - 2, (i + j * j) % 3, (i * j) % 4 - 1])).collect())
            .collect();
        assert_eq!(det_cofactor(&m).unwrap(), det_bareiss(&m).unwrap());
    }

    #[test]
    fn example_strict_gf() {
        let spec = StrictGf { lambda: vec![2, 1], mu: vec![0, 0], a: vec![4, 3], b: vec![1, 1], c: 1, d: 1 };
        let g: P = gf_strict(&spec).unwrap();
        assert_eq!(g, p(&[0, 0, 0, 0, 1, 1, 3, 3, 3, 2, 1]));
        assert_eq!(g.coeff(8), BigInt::from(3));
        assert_eq!(gf_strict_truncated::<BigInt>(&spec, 8).unwrap().coeff(8), BigInt::from(3));
        assert_eq!(g.to_string(), "x^10 + 2x^9 + 3x^8 + 3x^7 + 3x^6 + x^5 + x^4");
        let small: Poly<i128> = gf_strict(&spec).unwrap();
        assert_eq!(small.coeffs().iter().map(|&c| c as i64).collect::<Vec<_>>(), vec![0, 0, 0, 0, 1, 1, 3, 3, 3, 2, 1]);
    }

    #[test]
    fn example_shifted_gf() {
        let spec = ShiftedGf { lambda: vec![3, 3, 3], a: vec![6, 3, 1], b: vec![1, 1, 1], c: 1, d: 0 };
        assert_eq!(spec.prefactor_exponent(), 14);
        assert_eq!(spec.determinant::<BigInt>().unwrap(), p(&[0, 1, 2, 3, 3, 3, 2, 1]));
        let g: P = gf_shifted(&spec).unwrap();
        let mut want = vec![0; 15];
        want.extend([1, 2, 3, 3, 3, 2, 1]);
        assert_eq!(g, p(&want));
        assert_eq!(g.coeff(17), BigInt::from(3));
    }

    #[test]
    fn preconditions_enforced() {
        let bad = StrictGf { lambda: vec![2, 1], mu: vec![0, 0], a: vec![2, 5], b: vec![1, 1], c: 1, d: 1 };
        assert!(gf_strict::<BigInt>(&bad).is_err());
        let empty = StrictGf { lambda: vec![], mu: vec![], a: vec![], b: vec![], c: 1, d: 1 };
        assert!(gf_strict::<BigInt>(&empty).is_err());
        let low = ShiftedGf { lambda: vec![3, 1], a: vec![6, 3], b: vec![1, 1], c: 1, d: 0 };
        assert!(gf_shifted::<BigInt>(&low).is_err());
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[-1, 0, 2]).to_string(), "2x^2 - 1");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(serde_json::to_string(&p(&[0, 1, 2])).unwrap(), r#"{"coeffs":["0","1","2"]}"#);
    }
}
