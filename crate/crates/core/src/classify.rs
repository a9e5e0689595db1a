//! Abstract isomorphism, the regular/singular dichotomy for thick subgroups,
//! and the isomorphism grids between `G(m,p,n)`, `μ(G(m,p,n))` and friends.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclo::RootOfUnity;
use crate::error::{Error, Result};
use crate::groups::probes::probes_indexed;
use crate::groups::{
    enumerate_thick, identify_thick, FiniteMonomialGroup, GroupKind, IndexedGroup, StructureProbes,
};
use crate::monomial::{is_long_cycle, MonomialElement};
use crate::mystic::mu_group;

pub type Fingerprint = StructureProbes;

/// Largest order handled by the backtracking stage of [`isomorphic`].
pub const ISO_CAP: usize = 500;

pub fn fingerprint(g: &FiniteMonomialGroup) -> Fingerprint {
    crate::groups::structure_probes(g)
}

/// Decides `G ≅ H`: fingerprint filter, then a search over images of a
/// generating set of `G`.
pub fn isomorphic(g: &FiniteMonomialGroup, h: &FiniteMonomialGroup) -> Result<bool> {
    let a = IndexedGroup::new(g);
    let b = IndexedGroup::new(h);
    if probes_indexed(&a) != probes_indexed(&b) {
        return Ok(false);
    }
    if g.order() > ISO_CAP {
        return Err(Error::CapExceeded { cap: ISO_CAP });
    }
    Ok(find_isomorphism(&a, &b).is_some())
}

struct ClassData {
    size_of: Vec<usize>,
    reps: BTreeSet<u32>,
}

fn class_data(ig: &IndexedGroup<'_>) -> ClassData {
    let mut size_of = vec![0; ig.size()];
    let mut reps = BTreeSet::new();
    for class in ig.conjugacy_classes() {
        reps.insert(class[0]);
        for &x in &class {
            size_of[x as usize] = class.len();
        }
    }
    ClassData { size_of, reps }
}

/// An isomorphism `G → H` as the images of all elements of `G`, if one exists.
pub fn find_isomorphism(a: &IndexedGroup<'_>, b: &IndexedGroup<'_>) -> Option<Vec<u32>> {
    if a.size() != b.size() {
        return None;
    }
    let gens = a.generating_set();
    let ca = class_data(a);
    let cb = class_data(b);
    let orders_b: Vec<u64> = (0..b.size() as u32).map(|x| b.element_order(x)).collect();
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .enumerate()
        .map(|(i, &g)| {
            let og = a.element_order(g);
            let cg = ca.size_of[g as usize];
            (0..b.size() as u32)
                .filter(|&x| orders_b[x as usize] == og && cb.size_of[x as usize] == cg)
                .filter(|x| i > 0 || cb.reps.contains(x))
                .collect()
        })
        .collect();
    let mut images = vec![];
    search(a, b, &gens, &candidates, &mut images)
}

fn search(
    a: &IndexedGroup<'_>,
    b: &IndexedGroup<'_>,
    gens: &[u32],
    candidates: &[Vec<u32>],
    images: &mut Vec<u32>,
) -> Option<Vec<u32>> {
    let level = images.len();
    if level == gens.len() {
        let map = extend_map(a, b, gens, images)?;
        return (map.iter().all(|&x| x != u32::MAX)).then_some(map);
    }
    for &x in &candidates[level] {
        images.push(x);
        if extend_map(a, b, &gens[..=level], images).is_some() {
            if let Some(map) = search(a, b, gens, candidates, images) {
                return Some(map);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] ↦ images[i]` along the Cayley graph of `⟨gens⟩`;
/// `None` on an inconsistency or a collision.
fn extend_map(
    a: &IndexedGroup<'_>,
    b: &IndexedGroup<'_>,
    gens: &[u32],
    images: &[u32],
) -> Option<Vec<u32>> {
    let mut map = vec![u32::MAX; a.size()];
    let mut used = vec![false; b.size()];
    map[a.identity() as usize] = b.identity();
    used[b.identity() as usize] = true;
    let mut queue = vec![a.identity()];
    let mut next = 0;
    while next < queue.len() {
        let x = queue[next];
        next += 1;
        let fx = map[x as usize];
        for (&g, &fg) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(fx, fg);
            match map[y as usize] {
                u32::MAX => {
                    if used[fy as usize] {
                        return None;
                    }
                    used[fy as usize] = true;
                    map[y as usize] = fy;
                    queue.push(y);
                }
                v if v != fy => return None,
                _ => {}
            }
        }
    }
    Some(map)
}

/// Regular/singular classification of a thick subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct Regularity {
    pub group: String,
    pub regular: bool,
    pub torus_order: usize,
    /// A normal abelian subgroup `N ≠ T_G` with `|N| ≥ |T_G|`.
    pub witness: Option<Vec<MonomialElement>>,
}

pub fn regular_singular(g: &FiniteMonomialGroup) -> Regularity {
    let ig = IndexedGroup::new(g);
    let torus = g.torus_part().group;
    let abelian = ig.normal_subgroups(|ig, s| ig.is_abelian(s));
    let witness = abelian
        .iter()
        .filter(|n| n.order() >= torus.order())
        .map(|n| ig.to_group(n))
        .find(|n| !n.same_elements(&torus));
    Regularity {
        group: g.descriptor(),
        regular: witness.is_none(),
        torus_order: torus.order(),
        witness: witness.map(|w| w.elements().to_vec()),
    }
}

/// One cell of a predicted-versus-computed comparison.
#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    pub params: String,
    pub predicted: bool,
    pub computed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Cell {
    pub fn pass(&self) -> bool {
        self.predicted == self.computed
    }
}

fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// `G(m,p,n) ≇ μ(G(m,p,n))` exactly when `n` is even and `m/p` is odd; checked
/// for even `m ≤ max_m`, `n ≤ max_n` and `|G| ≤` [`ISO_CAP`].
pub fn verify_not_iso_grid(max_m: u32, max_n: usize) -> Result<Vec<Cell>> {
    let mut params = vec![];
    for m in (2..=max_m).step_by(2) {
        for p in divisors(m) {
            for n in 1..=max_n {
                let size = (m as usize).pow(n as u32) * (1..=n).product::<usize>() / p as usize;
                if size <= ISO_CAP {
                    params.push((m, p, n));
                }
            }
        }
    }
    let mut cells = params
        .par_iter()
        .map(|&(m, p, n)| {
            let g = FiniteMonomialGroup::make_gmpn(m, p, n)?;
            let mu = mu_group(&g)?;
            let computed = isomorphic(&g, &mu)?;
            Ok(Cell {
                params: format!("G({m},{p},{n})"),
                predicted: !(n % 2 == 0 && (m / p) % 2 == 1),
                computed,
                witness: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    cells.sort_by(|a, b| a.params.cmp(&b.params));
    Ok(cells)
}

/// A thick subgroup of `G(m,1,n)` together with its name.
#[derive(Clone, Debug)]
pub struct NamedThick {
    pub m: u32,
    pub n: usize,
    pub kind: GroupKind,
    pub group: FiniteMonomialGroup,
}

impl NamedThick {
    pub fn name(&self) -> String {
        self.kind.to_string()
    }
}

/// All thick subgroups of `G(m,1,n)` for `m ≤ max_m`, `min_n ≤ n ≤ max_n`.
pub fn named_thick(max_m: u32, min_n: usize, max_n: usize, cap: usize) -> Result<Vec<NamedThick>> {
    let cells: Vec<(u32, usize)> = (1..=max_m)
        .flat_map(|m| (min_n..=max_n).map(move |n| (m, n)))
        .collect();
    let mut out: Vec<NamedThick> = cells
        .par_iter()
        .map(|&(m, n)| {
            let thick = enumerate_thick(m, n, cap)?;
            thick
                .into_iter()
                .map(|g| {
                    let kind = identify_thick(&g, m).ok_or_else(|| {
                        Error::Internal(format!("unnamed thick subgroup of G({m},1,{n})"))
                    })?;
                    Ok(NamedThick {
                        m,
                        n,
                        group: g.with_kind(kind.clone()),
                        kind,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.sort_by(|a, b| (a.n, a.m, a.name()).cmp(&(b.n, b.m, b.name())));
    Ok(out)
}

/// The classification prediction for two distinct thick subgroups.
pub fn classification_predicts_iso(a: &NamedThick, b: &NamedThick) -> bool {
    let (small, large) = if a.n <= b.n { (a, b) } else { (b, a) };
    if small.n == large.n {
        let n = small.n;
        let (m, mp) = (small.m, large.m);
        if n % 2 == 0 || m != mp || m % 2 == 1 {
            return false;
        }
        // {G, G'} = {G(m,p,n), μ(G(m,p,n))} with m/p odd
        let pair = |x: &GroupKind, y: &GroupKind| match (x, y) {
            (GroupKind::Gmpn { m, p, .. }, GroupKind::W { cprime, .. }) => {
                m / p == *cprime && cprime % 2 == 1
            }
            _ => false,
        };
        pair(&small.kind, &large.kind) || pair(&large.kind, &small.kind)
    } else {
        let s4 = GroupKind::Gmpn { m: 1, p: 1, n: 4 };
        let small_ok = matches!(small.kind, GroupKind::Gmpn { m: 2, p: 2, n: 3 })
            || matches!(
                small.kind,
                GroupKind::W {
                    m: 2,
                    cprime: 1,
                    n: 3
                }
            );
        small.n == 3 && large.n == 4 && small_ok && large.kind == s4
    }
}

/// Isomorphism between every thick subgroup with `m ≤ max_m, n ≤ max_n`
/// and every thick subgroup with `m' ≤ max_mp, n' ≤ max_n` (ranks from 2).
pub fn verify_classification_grid(
    max_m: u32,
    max_mp: u32,
    max_n: usize,
    cap: usize,
) -> Result<Vec<Cell>> {
    let left = named_thick(max_m, 2, max_n, cap)?;
    let right: Vec<&NamedThick> = left.iter().filter(|t| t.m <= max_mp).collect();
    let mut pairs = vec![];
    let mut seen = BTreeSet::new();
    for a in &left {
        for &b in &right {
            if a.group.same_elements(&b.group) {
                continue;
            }
            let key = if a.name() <= b.name() {
                (a.name(), b.name())
            } else {
                (b.name(), a.name())
            };
            if seen.insert(key) {
                pairs.push((a, b));
            }
        }
    }
    let mut cells = pairs
        .par_iter()
        .map(|(a, b)| {
            let predicted = classification_predicts_iso(a, b);
            let computed = if a.group.order() != b.group.order() {
                false
            } else {
                isomorphic(&a.group, &b.group)?
            };
            Ok(Cell {
                params: format!("{} ~ {}", a.name(), b.name()),
                predicted,
                computed,
                witness: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    cells.sort_by(|a, b| a.params.cmp(&b.params));
    Ok(cells)
}

/// Names of the singular thick subgroups with `m ≤ max_m`, `2 ≤ n ≤ max_n`.
pub fn singular_list(max_m: u32, max_n: usize, cap: usize) -> Result<Vec<(String, Regularity)>> {
    let thick = named_thick(max_m, 2, max_n, cap)?;
    let mut out: Vec<(String, Regularity)> = thick
        .par_iter()
        .map(|t| (t.name(), regular_singular(&t.group)))
        .filter(|(_, r)| !r.regular)
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// The long-cycle power obstruction separating `G` from `μ(G)` for `n` even,
/// `m/p` odd: `z^{(-1)}` is an `n|C'|`-th power of an element of `μ(G)` over a
/// long cycle, while the same powers in `G` are all trivial.
#[derive(Clone, Debug, Serialize)]
pub struct ZObstruction {
    pub params: (u32, u32, usize),
    pub mu_attains_z: bool,
    pub g_powers_trivial: bool,
}

impl ZObstruction {
    pub fn pass(&self) -> bool {
        self.mu_attains_z && self.g_powers_trivial
    }
}

pub fn z_obstruction(m: u32, p: u32, n: usize) -> Result<ZObstruction> {
    let g = FiniteMonomialGroup::make_gmpn(m, p, n)?;
    let mu = mu_group(&g)?;
    let order = g.ambient_order();
    let e = (n as u32 * (m / p)) as u64;
    let z = MonomialElement::central_scalar(n, order, RootOfUnity::new(2, 1))?;
    let powers = |h: &FiniteMonomialGroup| -> BTreeSet<MonomialElement> {
        h.elements()
            .iter()
            .filter(|x| is_long_cycle(x.perm()))
            .map(|x| x.pow(e))
            .collect()
    };
    let pg = powers(&g);
    Ok(ZObstruction {
        params: (m, p, n),
        mu_attains_z: powers(&mu).contains(&z),
        g_powers_trivial: pg.len() == 1 && pg.iter().all(MonomialElement::is_identity),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gmpn(m: u32, p: u32, n: usize) -> FiniteMonomialGroup {
        FiniteMonomialGroup::make_gmpn(m, p, n).unwrap()
    }

    #[test]
    fn fingerprints() {
        let f = fingerprint(&gmpn(2, 2, 2));
        assert_eq!(
            f.order_histogram.into_iter().collect::<Vec<_>>(),
            vec![(1, 1), (2, 3)]
        );
        let f = fingerprint(&mu_group(&gmpn(2, 2, 2)).unwrap());
        assert_eq!(
            f.order_histogram.into_iter().collect::<Vec<_>>(),
            vec![(1, 1), (2, 1), (4, 2)]
        );
        let triv = FiniteMonomialGroup::closure_generate(2, 4, &[], 1).unwrap();
        let f = fingerprint(&triv);
        assert_eq!(f.order, 1);
        assert_eq!(
            f.order_histogram.into_iter().collect::<Vec<_>>(),
            vec![(1, 1)]
        );
    }

    #[test]
    fn isomorphism_examples() {
        let g = gmpn(2, 2, 2);
        assert!(!isomorphic(&g, &mu_group(&g).unwrap()).unwrap());
        assert!(isomorphic(&gmpn(2, 2, 3), &gmpn(1, 1, 4)).unwrap());
        assert!(isomorphic(&g, &g).unwrap());
        // D4 and Q8 share order and class sizes but differ in element orders;
        // S3 x C2 and D6 are isomorphic though realized differently
        let d6 = gmpn(6, 6, 2);
        let s3c2 = FiniteMonomialGroup::closure_generate(
            3,
            4,
            &[
                MonomialElement::simple_reflection(3, 1, 4).unwrap(),
                MonomialElement::simple_reflection(3, 2, 4).unwrap(),
                MonomialElement::central_scalar(3, 4, RootOfUnity::new(2, 1)).unwrap(),
            ],
            100,
        )
        .unwrap();
        assert!(isomorphic(&d6, &s3c2).unwrap());
    }

    #[test]
    fn backtracking_agrees_with_fingerprint_filter() {
        // groups of order 8 in the family: D4 (twice), Q8, C2^3 is absent
        let d4a = gmpn(2, 1, 2);
        let d4b = gmpn(4, 4, 2);
        let q8 = FiniteMonomialGroup::make_w(4, 1, 2).unwrap();
        assert!(isomorphic(&d4a, &d4b).unwrap());
        assert!(!isomorphic(&d4a, &q8).unwrap());
        let a = IndexedGroup::new(&d4a);
        let b = IndexedGroup::new(&d4b);
        let map = find_isomorphism(&a, &b).unwrap();
        for x in 0..8u32 {
            for y in 0..8u32 {
                assert_eq!(
                    map[a.mul(x, y) as usize],
                    b.mul(map[x as usize], map[y as usize])
                );
            }
        }
    }

    #[test]
    fn regularity_examples() {
        assert!(!regular_singular(&gmpn(2, 1, 2)).regular);
        assert!(regular_singular(&gmpn(1, 1, 5)).regular);
        assert!(!regular_singular(&mu_group(&gmpn(2, 2, 2)).unwrap()).regular);
        assert!(regular_singular(&gmpn(3, 1, 3)).regular);
    }

    #[test]
    fn predictions() {
        let t = |m: u32, n: usize, kind: GroupKind| NamedThick {
            m,
            n,
            group: FiniteMonomialGroup::closure_generate(n, 4, &[], 1).unwrap(),
            kind,
        };
        let a = t(2, 3, GroupKind::Gmpn { m: 2, p: 2, n: 3 });
        let b = t(1, 4, GroupKind::Gmpn { m: 1, p: 1, n: 4 });
        assert!(classification_predicts_iso(&a, &b));
        let c = t(
            2,
            3,
            GroupKind::W {
                m: 2,
                cprime: 1,
                n: 3,
            },
        );
        assert!(classification_predicts_iso(&a, &c));
        let d = t(2, 2, GroupKind::Gmpn { m: 2, p: 1, n: 2 });
        let e = t(2, 2, GroupKind::Gmpn { m: 2, p: 2, n: 2 });
        assert!(!classification_predicts_iso(&d, &e));
    }

    #[test]
    fn z_powers() {
        let z = z_obstruction(2, 2, 2).unwrap();
        assert!(z.pass());
        let z = z_obstruction(2, 2, 4).unwrap();
        assert!(z.pass());
    }
}
