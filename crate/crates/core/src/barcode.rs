//! Bar Codes of finite term sets.
//!
//! A Bar Code with `n` rows and width `m` is stored as, for each row `i`, the
//! lengths of its consecutive `i`-bars measured in 1-bars. Row 1 therefore
//! consists of `m` ones, and every row refines the row below it.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::monomials::Term;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "BarCodeJson", into = "BarCodeJson")]
pub struct BarCode {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct BarCodeJson {
    n: usize,
    width: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<BarCodeJson> for BarCode {
    type Error = Error;

    fn try_from(j: BarCodeJson) -> Result<Self> {
        let b = BarCode::new(j.rows)?;
        if b.n() != j.n || b.width() != j.width {
            return Err(Error::MalformedBarCode(format!(
                "declared n={} width={} but rows give n={} width={}",
                j.n,
                j.width,
                b.n(),
                b.width()
            )));
        }
        Ok(b)
    }
}

impl From<BarCode> for BarCodeJson {
    fn from(b: BarCode) -> Self {
        BarCodeJson { n: b.n(), width: b.width(), rows: b.rows }
    }
}

/// Output flavour for [`BarCode::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl BarCode {
    /// Validates and wraps per-row interval lengths, row 1 first.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::MalformedBarCode("no rows".into()));
        }
        let width: usize = rows[0].iter().sum();
        if width == 0 {
            return Err(Error::MalformedBarCode("zero width".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() || row.contains(&0) {
                return Err(Error::MalformedBarCode(format!("row {} has an empty bar", i + 1)));
            }
            let s: usize = row.iter().sum();
            if s != width {
                return Err(Error::MalformedBarCode(format!(
                    "row {} has length {s}, row 1 has length {width}",
                    i + 1
                )));
            }
        }
        if rows[0].iter().any(|&l| l != 1) {
            return Err(Error::MalformedBarCode("row 1 must consist of bars of length 1".into()));
        }
        for i in 1..rows.len() {
            let lower = cuts(&rows[i]);
            let upper = cuts(&rows[i - 1]);
            if !lower.is_subset(&upper) {
                return Err(Error::MalformedBarCode(format!(
                    "row {} does not refine row {}",
                    i,
                    i + 1
                )));
            }
        }
        Ok(BarCode { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// Interval lengths of row `i` (1-based).
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i - 1]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `(mu(1), ..., mu(n))`.
    pub fn bar_list(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Half-open column range `[start, end)` of the `j`-th bar of row `i` (both 0-based).
    fn span(&self, i: usize, j: usize) -> (usize, usize) {
        let start: usize = self.rows[i][..j].iter().sum();
        (start, start + self.rows[i][j])
    }

    /// For each row (0-based), the bar index (0-based) covering each column.
    fn column_owners(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .flat_map(|(j, &l)| std::iter::repeat_n(j, l))
                    .collect()
            })
            .collect()
    }

    /// `l_l(B_j^{(i)})`: the number of `l`-bars lying over the `j`-th `i`-bar. All indices 1-based.
    pub fn length(&self, i: usize, j: usize, l: usize) -> Result<usize> {
        if i == 0 || i > self.n() || l == 0 || l > i {
            return Err(Error::IndexOutOfRange(format!("rows i={i}, l={l} with n={}", self.n())));
        }
        if j == 0 || j > self.rows[i - 1].len() {
            return Err(Error::IndexOutOfRange(format!(
                "bar {j} in row {i} with {} bars",
                self.rows[i - 1].len()
            )));
        }
        let (s, e) = self.span(i - 1, j - 1);
        let mut pos = 0;
        let mut count = 0;
        for &len in &self.rows[l - 1] {
            if pos >= s && pos + len <= e {
                count += 1;
            }
            pos += len;
        }
        Ok(count)
    }

    fn e_lists(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let owners = self.column_owners();
        // first bar index of row i lying over each bar of row i+1
        let mut block_start: Vec<Vec<usize>> = Vec::with_capacity(n);
        for (own, next) in owners.iter().zip(&self.rows[1..]) {
            let mut starts = Vec::with_capacity(next.len());
            let mut col = 0;
            for &len in next {
                starts.push(own[col]);
                col += len;
            }
            block_start.push(starts);
        }
        block_start.push(vec![0]);
        (0..self.width())
            .map(|col| {
                (0..n)
                    .map(|i| {
                        let bar = owners[i][col];
                        let base = if i + 1 == n { 0 } else { block_start[i][owners[i + 1][col]] };
                        (bar - base) as u32
                    })
                    .collect()
            })
            .collect()
    }

    /// The e-list of the `j`-th 1-bar (1-based).
    pub fn e_list(&self, j: usize) -> Result<Vec<u32>> {
        if j == 0 || j > self.width() {
            return Err(Error::IndexOutOfRange(format!("1-bar {j} with width {}", self.width())));
        }
        Ok(self.e_lists().swap_remove(j - 1))
    }

    /// The term set assigned by the canonical labelling, in column (Lex-ascending) order.
    pub fn decode(&self) -> Vec<Term> {
        self.e_lists().into_iter().map(Term::new).collect()
    }

    pub fn is_admissible(&self) -> bool {
        let lists = self.e_lists();
        let present: HashSet<&[u32]> = lists.iter().map(Vec::as_slice).collect();
        let mut probe = Vec::new();
        lists.iter().all(|e| {
            (0..e.len()).all(|k| {
                if e[k] == 0 {
                    return true;
                }
                probe.clear();
                probe.extend_from_slice(e);
                probe[k] -= 1;
                present.contains(probe.as_slice())
            })
        })
    }

    /// Whether the length chains of admissible codes hold, weakly (`strict = false`)
    /// or strictly (`strict = true`, the shape of codes of stable ideals).
    pub fn length_chains_hold(&self, strict: bool) -> bool {
        let n = self.n();
        if n < 2 {
            return true;
        }
        let ok = |a: usize, b: usize| if strict { a > b } else { a >= b };
        let top: Vec<usize> =
            (1..=self.rows[n - 1].len()).map(|j| self.length(n, j, n - 1).unwrap()).collect();
        if !top.windows(2).all(|w| ok(w[0], w[1])) {
            return false;
        }
        for i in 1..=n.saturating_sub(2) {
            // (i+1)-bars grouped by the (i+2)-bar beneath them
            let mut col = 0;
            let mut idx = 0;
            for &len in &self.rows[i + 1] {
                let end = col + len;
                let mut prev: Option<usize> = None;
                while idx < self.rows[i].len() && col < end {
                    let l = self.length(i + 1, idx + 1, i).unwrap();
                    if let Some(p) = prev {
                        if !ok(p, l) {
                            return false;
                        }
                    }
                    prev = Some(l);
                    col += self.rows[i][idx];
                    idx += 1;
                }
            }
        }
        true
    }

    /// Deterministic drawing, rows 1..n from top to bottom, optionally labelled with
    /// the decoded terms.
    pub fn render(&self, format: RenderFormat, labels: bool) -> String {
        let names: Option<Vec<String>> =
            labels.then(|| self.decode().iter().map(Term::to_string).collect());
        match format {
            RenderFormat::Ascii => self.render_ascii(names.as_deref()),
            RenderFormat::Svg => self.render_svg(names.as_deref()),
        }
    }

    fn render_ascii(&self, names: Option<&[String]>) -> String {
        let w = names.map_or(3, |ns| ns.iter().map(String::len).max().unwrap_or(3).max(3));
        let mut out = String::new();
        if let Some(ns) = names {
            let cells: Vec<String> = ns.iter().map(|s| format!("{s:^w$}")).collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        for row in &self.rows {
            let bars: Vec<String> = row.iter().map(|&c| "-".repeat(c * w + c - 1)).collect();
            out.push_str(&bars.join(" "));
            out.push('\n');
        }
        out
    }

    fn render_svg(&self, names: Option<&[String]>) -> String {
        const CELL: usize = 60;
        const GAP: usize = 8;
        const ROW: usize = 30;
        let label_h = if names.is_some() { ROW } else { 0 };
        let width = self.width() * CELL + 2 * GAP;
        let height = label_h + self.n() * ROW + GAP;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        if let Some(ns) = names {
            for (k, name) in ns.iter().enumerate() {
                let x = GAP + k * CELL + CELL / 2;
                let _ = writeln!(
                    s,
                    r#"  <text x="{x}" y="{}" font-family="monospace" font-size="12" text-anchor="middle">{}</text>"#,
                    ROW - 10,
                    xml_escape(name)
                );
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            let y = label_h + i * ROW + ROW / 2;
            let _ = writeln!(
                s,
                r#"  <text x="2" y="{}" font-family="monospace" font-size="10">{}</text>"#,
                y + 4,
                i + 1
            );
            let mut col = 0;
            for &len in row {
                let x1 = GAP + col * CELL + 6;
                let x2 = GAP + (col + len) * CELL - 6;
                let _ = writeln!(
                    s,
                    r#"  <line x1="{x1}" y1="{y}" x2="{x2}" y2="{y}" stroke="black" stroke-width="3"/>"#
                );
                col += len;
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Internal cut positions of a row.
fn cuts(row: &[usize]) -> BTreeSet<usize> {
    let mut acc = 0;
    let mut out = BTreeSet::new();
    for &l in &row[..row.len() - 1] {
        acc += l;
        out.insert(acc);
    }
    out
}

/// Bar Code of a finite term set: sort by Lex, then group row `i` by equal `P_{x_i}` values.
pub fn encode(terms: &[Term]) -> Result<BarCode> {
    if terms.is_empty() {
        return Err(Error::Empty("term set"));
    }
    let n = terms[0].arity();
    if n == 0 {
        return Err(Error::MalformedBarCode("terms in zero variables".into()));
    }
    if let Some(t) = terms.iter().find(|t| t.arity() != n) {
        return Err(Error::ArityMismatch { expected: n, found: t.arity() });
    }
    let mut sorted = terms.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateTerm(w[0].to_string()));
    }
    let rows = (1..=n)
        .map(|i| {
            let keys: Vec<Term> = sorted.iter().map(|t| t.p_operator(i).unwrap()).collect();
            let mut row = Vec::new();
            let mut run = 1;
            for w in keys.windows(2) {
                if w[0] == w[1] {
                    run += 1;
                } else {
                    row.push(run);
                    run = 1;
                }
            }
            row.push(run);
            row
        })
        .collect();
    BarCode::new(rows)
}

pub fn decode(b: &BarCode) -> Vec<Term> {
    b.decode()
}

pub fn is_admissible(b: &BarCode) -> bool {
    b.is_admissible()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(n: usize, ts: &[&str]) -> Vec<Term> {
        ts.iter().map(|s| Term::parse(s, n).unwrap()).collect()
    }

    fn non_admissible_code() -> BarCode {
        encode(&terms(3, &["x1", "x1^2", "x2*x3", "x1*x2^2*x3", "x2^3*x3"])).unwrap()
    }

    #[test]
    fn encode_example() {
        let b = non_admissible_code();
        assert_eq!(b.rows(), &[vec![1, 1, 1, 1, 1], vec![2, 1, 1, 1], vec![2, 3]]);
        assert_eq!(b.bar_list(), vec![5, 4, 2]);
        assert_eq!(b.length(2, 1, 1).unwrap(), 2);
        assert_eq!(b.length(3, 2, 2).unwrap(), 3);
        assert_eq!(b.length(3, 2, 1).unwrap(), 3);
        assert_eq!(b.length(2, 3, 2).unwrap(), 1);
        assert!(b.length(2, 5, 1).is_err());
        assert!(b.length(2, 1, 3).is_err());
        assert!(!b.is_admissible());
    }

    #[test]
    fn decode_non_admissible() {
        let b = non_admissible_code();
        assert_eq!(b.decode(), terms(3, &["1", "x1", "x3", "x2*x3", "x2^2*x3"]));
        assert!(!b.is_admissible());
    }

    #[test]
    fn singleton_and_collisions() {
        let b = encode(&[Term::one(4)]).unwrap();
        assert_eq!(b.bar_list(), vec![1, 1, 1, 1]);
        assert_eq!(b.decode(), vec![Term::one(4)]);
        assert_eq!(
            encode(&terms(2, &["1", "x1"])).unwrap(),
            encode(&terms(2, &["x1", "x1^2"])).unwrap()
        );
        assert!(encode(&[]).is_err());
        assert!(encode(&terms(2, &["x1", "x1"])).is_err());
    }

    #[test]
    fn six_term_escalier() {
        let n = terms(3, &["1", "x1", "x1^2", "x2", "x3", "x1*x3"]);
        let b = encode(&n).unwrap();
        assert_eq!(b.bar_list(), vec![6, 3, 2]);
        assert_eq!(b.rows(), &[vec![1; 6], vec![3, 1, 2], vec![4, 2]]);
        let mut sorted = n.clone();
        sorted.sort();
        assert_eq!(b.decode(), sorted);
        assert!(b.is_admissible());
    }

    #[test]
    fn e_lists_example() {
        let b = encode(&terms(3, &["1", "x1", "x2", "x3"])).unwrap();
        let got: Vec<Vec<u32>> = (1..=4).map(|j| b.e_list(j).unwrap()).collect();
        assert_eq!(got, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(b.e_list(0).is_err());
        assert!(b.e_list(5).is_err());
        assert_eq!(b.decode(), terms(3, &["1", "x1", "x2", "x3"]));
    }

    #[test]
    fn malformed_rows() {
        assert!(BarCode::new(vec![]).is_err());
        assert!(BarCode::new(vec![vec![1, 1], vec![3]]).is_err());
        assert!(BarCode::new(vec![vec![1, 1, 1], vec![1, 2], vec![2, 1]]).is_err());
        assert!(BarCode::new(vec![vec![2], vec![2]]).is_err());
        assert!(BarCode::new(vec![vec![1, 1, 1], vec![2, 1], vec![3]]).is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let b = non_admissible_code();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"n":3,"width":5,"rows":[[1,1,1,1,1],[2,1,1,1],[2,3]]}"#);
        let back: BarCode = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<BarCode>(r#"{"n":2,"width":5,"rows":[[1,1,1,1,1],[2,1,1,1],[2,3]]}"#).is_err());
    }

    #[test]
    fn ascii_render() {
        let b = encode(&[Term::one(3)]).unwrap();
        assert_eq!(b.render(RenderFormat::Ascii, false), "---\n---\n---\n");
        let b = encode(&terms(3, &["1", "x1", "x1^2", "x2", "x3", "x1*x3"])).unwrap();
        let expected = concat!(
            "  1    x1   x1^2   x2    x3   x1*x3\n",
            "----- ----- ----- ----- ----- -----\n",
            "----------------- ----- -----------\n",
            "----------------------- -----------\n",
        );
        assert_eq!(b.render(RenderFormat::Ascii, true), expected);
    }

    #[test]
    fn chains() {
        let b = encode(&terms(3, &["1", "x1", "x1^2", "x2", "x3", "x1*x3"])).unwrap();
        assert!(b.length_chains_hold(false));
        assert!(b.length_chains_hold(true));
        let flat = encode(&terms(3, &["1", "x1", "x2", "x1*x2"])).unwrap();
        assert!(flat.length_chains_hold(false));
        assert!(!flat.length_chains_hold(true));
    }
}
