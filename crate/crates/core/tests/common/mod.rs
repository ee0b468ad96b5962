//! Seeded random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use escalier::partitions::enumerate_distinct;
use escalier::{BarCode, IntPartition, OrderIdeal, Term};
use rand::seq::IteratorRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Grows `{1}` by adding a uniformly chosen corner (a border term whose predecessors
/// all lie in the set) until `size` terms are present. Every order ideal of that size
/// has positive probability, but shapes near the axes are favoured.
pub fn random_order_ideal(rng: &mut impl Rng, n: usize, size: usize) -> OrderIdeal {
    let mut cur = BTreeSet::from([Term::one(n)]);
    while cur.len() < size {
        let corners: BTreeSet<Term> = cur
            .iter()
            .flat_map(|t| (1..=n).map(move |i| t.mul_var(i)))
            .filter(|u| !cur.contains(u) && u.predecessors().all(|q| cur.contains(&q)))
            .collect();
        let pick = corners.into_iter().choose(rng).expect("corners exist");
        cur.insert(pick);
    }
    OrderIdeal::new(n, cur).unwrap()
}

/// Random composition of `total`: each of the `total - 1` gaps is a cut with
/// probability `cut`.
fn composition(rng: &mut impl Rng, total: usize, cut: f64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut run = 1;
    for _ in 1..total {
        if rng.gen_bool(cut) {
            out.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    out.push(run);
    out
}

/// Structurally valid Bar Code with `n` rows over `width` columns: the top row is a
/// random composition, and each lower row refines every bar above it independently
/// with cut probability 1/2. Row 1 is then forced to unit bars. Most samples with
/// `width > 4` are not admissible.
pub fn random_barcode(rng: &mut impl Rng, n: usize, width: usize) -> BarCode {
    let mut rows = vec![composition(rng, width, 0.3)];
    for _ in 1..n.saturating_sub(1) {
        let above = rows.last().unwrap().clone();
        rows.push(above.iter().flat_map(|&l| composition(rng, l, 0.5)).collect());
    }
    if n > 1 {
        rows.push(vec![1; width]);
    } else {
        rows = vec![vec![1; width]];
    }
    rows.reverse();
    BarCode::new(rows).unwrap()
}

/// Uniform choice among the partitions of `p` into distinct parts.
pub fn random_distinct_partition(rng: &mut impl Rng, p: u64) -> IntPartition {
    (1..=p).flat_map(|k| enumerate_distinct(p, k)).choose(rng).expect("p >= 1")
}
