//! Correspondences between partitions, Bar Codes and (strongly) stable ideals, and
//! explicit listings of all such ideals for a given `p`.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::barcode::BarCode;
use crate::counting::{bar_lists_3vars, max_h_2vars};
use crate::monomials::{minimal_generators, MonomialIdeal, OrderIdeal, Term};
use crate::partitions::{enumerate_distinct, enumerate_plane_partitions, IntPartition, PlanePartition, PlaneSpec};
use crate::{Class, Error, Result};

fn term3(e1: usize, e2: usize, e3: usize) -> Term {
    Term::new(vec![e1 as u32, e2 as u32, e3 as u32])
}

fn strictly_decreasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

fn check_strict_pp(rho: &PlanePartition) -> Result<()> {
    let ok = !rho.shifted()
        && rho.inner().iter().all(|&m| m == 0)
        && !rho.rows().is_empty()
        && rho.rows().iter().all(|r| !r.is_empty())
        && rho.rows().iter().flatten().all(|&v| v >= 1)
        && strictly_decreasing(rho.shape())
        && PlanePartition::strict_from_rows(rho.rows().to_vec()).is_ok_and(|p| p.validate());
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPartition("expected a row- and column-strict plane partition with strictly decreasing row lengths".into()))
    }
}

fn check_shifted_pp(pi: &PlanePartition) -> Result<()> {
    let lens: Vec<usize> = pi.rows().iter().map(Vec::len).collect();
    let ok = pi.shifted()
        && !lens.is_empty()
        && lens.iter().all(|&l| l > 0)
        && pi.rows().iter().flatten().all(|&v| v >= 1)
        && strictly_decreasing(&lens)
        && PlanePartition::shifted_from_rows(pi.rows().to_vec()).is_ok_and(|p| p.validate());
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPartition("expected a shifted plane partition, row-strict and column-weak, with strictly decreasing row lengths".into()))
    }
}

/// Three-row code: row 3 has one bar per partition row, row 2 one bar per entry.
fn code_from_rows(rows: &[Vec<i64>]) -> Result<BarCode> {
    let row2: Vec<usize> = rows.iter().flatten().map(|&v| v as usize).collect();
    let row3: Vec<usize> = rows.iter().map(|r| r.iter().sum::<i64>() as usize).collect();
    let width = row2.iter().sum();
    BarCode::new(vec![vec![1; width], row2, row3])
}

/// Entries grouped by 3-bar: the `l_1` of each 2-bar.
fn rows_from_code(b: &BarCode) -> Result<Vec<Vec<i64>>> {
    if b.n() != 3 {
        return Err(Error::Precondition(format!("expected 3 rows, got {}", b.n())));
    }
    if !b.is_admissible() {
        return Err(Error::NotAdmissible);
    }
    let mut out = Vec::new();
    let mut it = b.row(2).iter();
    for &len in b.row(3) {
        let mut row = Vec::new();
        let mut acc = 0;
        while acc < len {
            let &l = it.next().expect("refinement");
            acc += l;
            row.push(l as i64);
        }
        out.push(row);
    }
    Ok(out)
}

pub fn barcode_from_strict_pp(rho: &PlanePartition) -> Result<BarCode> {
    check_strict_pp(rho)?;
    code_from_rows(rho.rows())
}

pub fn strict_pp_from_barcode(b: &BarCode) -> Result<PlanePartition> {
    let rho = PlanePartition::strict_from_rows(rows_from_code(b)?)?;
    check_strict_pp(&rho).map_err(|_| Error::NotStable("stable"))?;
    Ok(rho)
}

/// The generating set `{x_3^k, x_2^{b_i} x_3^{i-1}, x_1^{rho_ij} x_2^{j-1} x_3^{i-1}}`.
pub fn ideal_from_strict_pp(rho: &PlanePartition) -> Result<MonomialIdeal> {
    check_strict_pp(rho)?;
    let rows = rho.rows();
    let mut gens = vec![term3(0, 0, rows.len())];
    for (i, row) in rows.iter().enumerate() {
        gens.push(term3(0, row.len(), i));
        for (j, &v) in row.iter().enumerate() {
            gens.push(term3(v as usize, j, i));
        }
    }
    MonomialIdeal::new(3, gens)
}

pub fn barcode_from_shifted_pp(pi: &PlanePartition) -> Result<BarCode> {
    check_shifted_pp(pi)?;
    code_from_rows(pi.rows())
}

pub fn shifted_pp_from_barcode(b: &BarCode) -> Result<PlanePartition> {
    let pi = PlanePartition::shifted_from_rows(rows_from_code(b)?)?;
    check_shifted_pp(&pi).map_err(|_| Error::NotStable("strongly stable"))?;
    Ok(pi)
}

/// Escalier decoded from a code, and its minimal generators.
pub fn ideal_of_code(b: &BarCode) -> Result<MonomialIdeal> {
    let n = OrderIdeal::new(b.n(), b.decode())?;
    Ok(minimal_generators(&n))
}

pub fn ideal_from_shifted_pp(pi: &PlanePartition) -> Result<MonomialIdeal> {
    ideal_of_code(&barcode_from_shifted_pp(pi)?)
}

/// The partition `(l_1(B_1^(2)), ..., l_1(B_h^(2)))` of a two-variable code.
pub fn partition_2vars(b: &BarCode) -> Result<IntPartition> {
    if b.n() != 2 {
        return Err(Error::Precondition(format!("expected 2 rows, got {}", b.n())));
    }
    if !b.is_admissible() {
        return Err(Error::NotAdmissible);
    }
    if !strictly_decreasing(b.row(2)) {
        return Err(Error::NotStable("stable"));
    }
    IntPartition::new(b.row(2).iter().map(|&l| l as u64).collect())
}

pub fn barcode_from_partition_2vars(alpha: &IntPartition) -> Result<BarCode> {
    if alpha.is_empty() || !alpha.is_distinct() {
        return Err(Error::InvalidPartition("expected distinct positive parts".into()));
    }
    let row2: Vec<usize> = alpha.parts().iter().map(|&a| a as usize).collect();
    BarCode::new(vec![vec![1; alpha.sum() as usize], row2])
}

/// `(x_1^{a_1}, x_1^{a_2} x_2, ..., x_1^{a_h} x_2^{h-1}, x_2^h)`.
pub fn ideal_from_partition_2vars(alpha: &IntPartition) -> Result<MonomialIdeal> {
    if alpha.is_empty() || !alpha.is_distinct() {
        return Err(Error::InvalidPartition("expected distinct positive parts".into()));
    }
    let h = alpha.len();
    let mut gens: Vec<Term> =
        alpha.parts().iter().enumerate().map(|(j, &a)| Term::new(vec![a as u32, j as u32])).collect();
    gens.push(Term::new(vec![0, h as u32]));
    MonomialIdeal::new(2, gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum ListedPartition {
    Integer(IntPartition),
    Plane(PlanePartition),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListingItem {
    pub partition: ListedPartition,
    pub barcode: BarCode,
    #[serde(serialize_with = "generators_json")]
    pub generators: MonomialIdeal,
}

fn generators_json<S: Serializer>(m: &MonomialIdeal, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(m.generators().len()))?;
    for g in m.generators() {
        seq.serialize_element(g)?;
    }
    seq.end()
}

/// All ideals of a class with escalier size `p`; serialises as the bare item array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealListing {
    pub p: u64,
    pub n: usize,
    pub class: Class,
    pub items: Vec<ListingItem>,
}

impl Serialize for IdealListing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.items.serialize(s)
    }
}

fn items_2vars(p: u64, h: u64) -> Result<Vec<ListingItem>> {
    enumerate_distinct(p, h)
        .into_iter()
        .map(|alpha| {
            Ok(ListingItem {
                barcode: barcode_from_partition_2vars(&alpha)?,
                generators: ideal_from_partition_2vars(&alpha)?,
                partition: ListedPartition::Integer(alpha),
            })
        })
        .collect()
}

fn items_3vars(p: u64, h: u64, k: u64, class: Class) -> Result<Vec<ListingItem>> {
    let mut out = Vec::new();
    for shape in enumerate_distinct(h, k) {
        let parts: Vec<usize> = shape.parts().iter().map(|&a| a as usize).collect();
        let spec = match class {
            Class::Stable => PlaneSpec::straight(parts, 1, 1, p as i64),
            Class::StronglyStable => {
                PlaneSpec::shifted(parts.iter().enumerate().map(|(i, &a)| i + a).collect(), 1, 0, p as i64)
            }
        };
        for pp in enumerate_plane_partitions(&spec)? {
            let barcode = match class {
                Class::Stable => barcode_from_strict_pp(&pp)?,
                Class::StronglyStable => barcode_from_shifted_pp(&pp)?,
            };
            let generators = ideal_of_code(&barcode)?;
            out.push(ListingItem { partition: ListedPartition::Plane(pp), barcode, generators });
        }
    }
    Ok(out)
}

/// Listing restricted to one bar list: `(p, h)` for two variables, `(p, h, k)` for three.
pub fn list_ideals_for_bar_list(bar_list: &[u64], class: Class) -> Result<IdealListing> {
    match *bar_list {
        [p, h] if p > 0 && (1..=max_h_2vars(p)).contains(&h) => {
            Ok(IdealListing { p, n: 2, class, items: items_2vars(p, h)? })
        }
        [p, h, k] if p > 0 && bar_lists_3vars(p).contains(&(p, h, k)) => {
            Ok(IdealListing { p, n: 3, class, items: items_3vars(p, h, k, class)? })
        }
        _ => Err(Error::BarListOutOfRange(format!("{bar_list:?}"))),
    }
}

/// Every ideal of the class in `n` in {2, 3} variables with escalier size `p`: bar lists
/// in census order, shapes descending, partitions in enumeration order.
pub fn list_ideals(p: u64, n: usize, class: Class) -> Result<IdealListing> {
    if p == 0 {
        return Err(Error::Precondition("p must be positive".into()));
    }
    let mut items = Vec::new();
    match n {
        2 => {
            for h in 1..=max_h_2vars(p) {
                items.extend(items_2vars(p, h)?);
            }
        }
        3 => {
            for (p, h, k) in bar_lists_3vars(p) {
                items.extend(items_3vars(p, h, k, class)?);
            }
        }
        _ => return Err(Error::Unsupported(format!("listing in {n} variables"))),
    }
    Ok(IdealListing { p, n, class, items })
}
