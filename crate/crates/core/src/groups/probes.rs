use std::collections::BTreeMap;

use serde::Serialize;

use super::lattice::{order_histogram, IndexedGroup};
use super::FiniteMonomialGroup;

/// Structural invariants computed by enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProbes {
    pub order: usize,
    pub center_order: usize,
    pub derived_order: usize,
    /// Invariant factors `d_1 | d_2 | …` of `G/[G,G]`, without the trivial ones.
    pub abelianization: Vec<u64>,
    /// Conjugacy class sizes, ascending.
    pub class_sizes: Vec<usize>,
    pub order_histogram: BTreeMap<u64, usize>,
}

pub fn structure_probes(g: &FiniteMonomialGroup) -> StructureProbes {
    probes_indexed(&IndexedGroup::new(g))
}

pub(crate) fn probes_indexed(ig: &IndexedGroup<'_>) -> StructureProbes {
    let derived = ig.derived_subgroup();
    let mut class_sizes: Vec<usize> = ig.conjugacy_classes().iter().map(Vec::len).collect();
    class_sizes.sort_unstable();
    StructureProbes {
        order: ig.size(),
        center_order: ig.center().order(),
        derived_order: derived.order(),
        abelianization: abelian_invariants(ig, &derived),
        class_sizes,
        order_histogram: order_histogram(ig).into_iter().collect(),
    }
}

fn prime_factors(mut k: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut p = 2;
    while p * p <= k {
        if k % p == 0 {
            out.push(p);
            while k % p == 0 {
                k /= p;
            }
        }
        p += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

/// Invariant factors of `G/N` for normal `N ⊇ [G,G]`, read off from the
/// counts `#{xN : x^{p^j} ∈ N}`.
fn abelian_invariants(ig: &IndexedGroup<'_>, normal: &super::Subgroup) -> Vec<u64> {
    let (label, reps) = ig.coset_labels(normal);
    let quotient = reps.len() as u64;
    let id_label = label[ig.identity() as usize];
    // p-primary parts as partitions, largest first
    let mut primary: Vec<Vec<u64>> = vec![];
    for p in prime_factors(quotient) {
        let mut counts = vec![1u64];
        let mut pj = 1u64;
        loop {
            pj *= p;
            let c = reps
                .iter()
                .filter(|&&x| label[ig.pow(x, pj) as usize] == id_label)
                .count() as u64;
            if c == *counts.last().unwrap() {
                break;
            }
            counts.push(c);
        }
        // rank_j = number of cyclic factors of order ≥ p^j
        let ranks: Vec<u32> = counts.windows(2).map(|w| (w[1] / w[0]).ilog(p)).collect();
        let mut parts = vec![];
        for (j, &r) in ranks.iter().enumerate() {
            let next = ranks.get(j + 1).copied().unwrap_or(0);
            for _ in 0..(r - next) {
                parts.push(p.pow(j as u32 + 1));
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        primary.push(parts);
    }
    let len = primary.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|i| primary.iter().filter_map(|v| v.get(i)).product())
        .collect();
    factors.reverse();
    factors
}
