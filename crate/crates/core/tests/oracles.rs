//! Library results against brute-force computations written from the
//! definitions alone.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use mystica::classify::{isomorphic, regular_singular};
use mystica::cyclo::Cyclotomic;
use mystica::groups::{enumerate_thick, FiniteMonomialGroup, DEFAULT_CAP};
use mystica::linalg::{dense_rank, Matrix};
use mystica::monomial::MonomialElement;
use mystica::mystic::{faithfulness_rank, mu_group};
use mystica::qpoly::{hilbert_free, invariant_dimension, operator_matrix, SliceBasis, Twist};

fn gmpn(m: u32, p: u32, n: usize) -> FiniteMonomialGroup {
    FiniteMonomialGroup::make_gmpn(m, p, n).unwrap()
}

/// `ρ_c(t w) x^k = χ_t(w(k)) φ_w(k) x^{w(k)}`, straight from the formulas.
fn action_oracle(c: Option<&Cyclotomic>, g: &MonomialElement, d: u32) -> Matrix {
    let n = g.rank();
    let basis = SliceBasis::new(n, d);
    let mut out = Matrix::zeros(basis.len(), basis.len());
    for (col, k) in basis.monomials.iter().enumerate() {
        let w = g.perm();
        let mut image = vec![0u32; n];
        for i in 0..n {
            image[w[i] as usize] = k.0[i];
        }
        let mut coef = Cyclotomic::one(1);
        if let Some(c) = c {
            for i in 0..n {
                for j in i + 1..n {
                    if w[i] > w[j] {
                        let (ki, kj) = (k.0[i] as i64, k.0[j] as i64);
                        let sign = if ki * kj % 2 == 0 { 1 } else { -1 };
                        let f = &Cyclotomic::from_integer(sign) * &c.pow(ki % 2 - kj % 2).unwrap();
                        coef = &coef * &f;
                    }
                }
            }
        }
        let torus: i64 = (0..n).map(|j| g.exps()[j] as i64 * image[j] as i64).sum();
        coef = &coef * &Cyclotomic::root(g.order(), torus).unwrap();
        let row = basis.index_of(&mystica::qpoly::ExponentVector(image));
        out.set(row, col, coef);
    }
    out
}

fn twist_scalar(t: &Twist) -> Option<&Cyclotomic> {
    match t {
        Twist::Plus => None,
        Twist::Scalar(c) => Some(c),
    }
}

fn twists() -> Vec<Twist> {
    vec![
        Twist::Plus,
        Twist::minus(),
        Twist::scalar("zeta4^1".parse().unwrap()),
        Twist::scalar("zeta3^1".parse().unwrap()),
        Twist::scalar(Cyclotomic::from_integer(2)),
    ]
}

#[test]
fn operator_matrices_match_formula() {
    for g in [gmpn(4, 1, 2), gmpn(2, 1, 3)] {
        for c in twists() {
            for e in g.elements().iter().step_by(3) {
                for d in 0..=3 {
                    let lib = operator_matrix(&c, e, d).unwrap();
                    assert_eq!(
                        lib,
                        action_oracle(twist_scalar(&c), e, d),
                        "{e} c={c} d={d}"
                    );
                }
            }
        }
    }
}

/// `t w` as an `n × n` matrix, entry `(w(i), i) = ζ^{e_{w(i)}}`.
fn as_matrix(g: &MonomialElement) -> Matrix {
    let n = g.rank();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        let r = g.perm()[i] as usize;
        m.set(
            r,
            i,
            Cyclotomic::root(g.order(), g.exps()[r] as i64).unwrap(),
        );
    }
    m
}

#[test]
fn composition_is_matrix_product() {
    let g = gmpn(4, 1, 3);
    let elems: Vec<&MonomialElement> = g.elements().iter().step_by(7).collect();
    for a in &elems {
        for b in &elems {
            assert_eq!(as_matrix(&(*a * *b)), as_matrix(a).mul(&as_matrix(b)));
        }
        assert_eq!(
            as_matrix(&a.invert()).mul(&as_matrix(a)),
            Matrix::identity(3)
        );
    }
}

#[test]
fn invariant_dimensions_match_dense_reynolds() {
    let cases = [
        (gmpn(2, 2, 2), Twist::Plus),
        (mu_group(&gmpn(2, 2, 2)).unwrap(), Twist::minus()),
        (gmpn(4, 2, 2), Twist::minus()),
        (mu_group(&gmpn(2, 1, 3)).unwrap(), Twist::minus()),
        (gmpn(3, 1, 2), Twist::scalar("zeta3^1".parse().unwrap())),
    ];
    for (g, c) in cases {
        for d in 0..=5 {
            let dim = SliceBasis::new(g.rank(), d).len();
            let mut sum = Matrix::zeros(dim, dim);
            for e in g.elements() {
                sum = sum.add(&action_oracle(twist_scalar(&c), e, d));
            }
            assert_eq!(
                invariant_dimension(&g, &c, d).unwrap(),
                sum.rank(),
                "{} c={c} d={d}",
                g.descriptor()
            );
        }
    }
}

#[test]
fn hilbert_coefficients_count_degree_multisets() {
    for degrees in [
        vec![2, 2],
        vec![2, 4],
        vec![3, 6, 4],
        vec![1, 1, 1],
        vec![4, 8, 12, 2],
    ] {
        let series = hilbert_free(&degrees, 14).unwrap();
        for (d, &coeff) in series.iter().enumerate() {
            let count = degrees
                .iter()
                .map(|&a| (0..=14 / a).collect::<Vec<_>>())
                .multi_cartesian_product()
                .filter(|e| e.iter().zip(&degrees).map(|(x, a)| x * a).sum::<u32>() == d as u32)
                .count();
            assert_eq!(coeff, count as u64, "{degrees:?} degree {d}");
        }
    }
}

#[test]
fn faithfulness_matches_stacked_operator_rank() {
    for (g, c) in [
        (gmpn(2, 2, 2), Twist::minus()),
        (gmpn(2, 1, 2), Twist::scalar("zeta4^1".parse().unwrap())),
        (mu_group(&gmpn(2, 1, 2)).unwrap(), Twist::Plus),
        (gmpn(4, 4, 2), Twist::minus()),
    ] {
        for d_max in 0..=4 {
            let rows: Vec<Vec<Cyclotomic>> = g
                .elements()
                .iter()
                .map(|e| {
                    (0..=d_max)
                        .flat_map(|d| {
                            action_oracle(twist_scalar(&c), e, d)
                                .row_vecs()
                                .into_iter()
                                .flatten()
                        })
                        .collect()
                })
                .collect();
            assert_eq!(
                faithfulness_rank(&g, &c, d_max).unwrap(),
                dense_rank(rows),
                "{} c={c} D={d_max}",
                g.descriptor()
            );
        }
    }
}

type Table = Vec<Vec<usize>>;

fn table(g: &FiniteMonomialGroup) -> Table {
    let idx: HashMap<&MonomialElement, usize> = g
        .elements()
        .iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    g.elements()
        .iter()
        .map(|a| g.elements().iter().map(|b| idx[&(a * b)]).collect())
        .collect()
}

fn iso_brute_force(a: &Table, b: &Table) -> bool {
    let n = a.len();
    n == b.len()
        && (0..n)
            .permutations(n)
            .any(|f| (0..n).all(|x| (0..n).all(|y| f[a[x][y]] == b[f[x]][f[y]])))
}

#[test]
fn isomorphism_matches_exhaustive_search() {
    let small = vec![
        gmpn(2, 2, 2),
        mu_group(&gmpn(2, 2, 2)).unwrap(),
        gmpn(4, 1, 1),
        gmpn(2, 1, 2),
        gmpn(4, 4, 2),
        mu_group(&gmpn(4, 4, 2)).unwrap(),
        gmpn(1, 1, 3),
        gmpn(3, 3, 2),
        gmpn(6, 1, 1),
        gmpn(8, 1, 1),
    ];
    for (g, h) in small.iter().tuple_combinations() {
        if g.order() != h.order() {
            continue;
        }
        assert_eq!(
            isomorphic(g, h).unwrap(),
            iso_brute_force(&table(g), &table(h)),
            "{} vs {}",
            g.descriptor(),
            h.descriptor()
        );
    }
}

/// All subgroups generated by at most three elements.
fn subgroups(g: &FiniteMonomialGroup) -> BTreeSet<Vec<MonomialElement>> {
    let mut out = BTreeSet::new();
    let e = g.elements();
    for (a, b, c) in (0..e.len())
        .flat_map(|a| (a..e.len()).flat_map(move |b| (b..e.len()).map(move |c| (a, b, c))))
    {
        let gens = [e[a].clone(), e[b].clone(), e[c].clone()];
        let h = FiniteMonomialGroup::closure_generate(g.rank(), g.ambient_order(), &gens, 10_000)
            .unwrap();
        out.insert(h.elements().to_vec());
    }
    out
}

fn is_normal(sub: &[MonomialElement], g: &FiniteMonomialGroup) -> bool {
    let set: BTreeSet<&MonomialElement> = sub.iter().collect();
    g.elements()
        .iter()
        .all(|x| sub.iter().all(|s| set.contains(&s.conjugate_by(x))))
}

#[test]
fn thick_subgroups_match_subgroup_search() {
    for (m, n) in [(2, 2), (4, 2), (3, 2), (1, 3), (2, 3)] {
        let big = gmpn(m, 1, n);
        let perms: BTreeSet<Vec<u8>> = big.elements().iter().map(|e| e.perm().to_vec()).collect();
        let brute: BTreeSet<Vec<MonomialElement>> = subgroups(&big)
            .into_iter()
            .filter(|s| {
                let p: BTreeSet<Vec<u8>> = s.iter().map(|e| e.perm().to_vec()).collect();
                p == perms && is_normal(s, &big)
            })
            .collect();
        let lib: BTreeSet<Vec<MonomialElement>> = enumerate_thick(m, n, DEFAULT_CAP)
            .unwrap()
            .iter()
            .map(|g| g.elements().to_vec())
            .collect();
        assert_eq!(lib, brute, "G({m},1,{n})");
    }
}

#[test]
fn regularity_matches_subset_search() {
    let groups = [
        gmpn(2, 2, 2),
        mu_group(&gmpn(2, 2, 2)).unwrap(),
        gmpn(2, 1, 2),
        gmpn(4, 4, 2),
        mu_group(&gmpn(4, 4, 2)).unwrap(),
        gmpn(1, 1, 3),
        gmpn(3, 3, 2),
        gmpn(6, 6, 2),
    ];
    for g in groups {
        let torus: Vec<MonomialElement> = g
            .elements()
            .iter()
            .filter(|e| e.is_torus())
            .cloned()
            .collect();
        let t = table(&g);
        let n = g.order();
        let singular = (1u32..(1 << n)).any(|mask| {
            let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let closed = s
                .iter()
                .all(|&a| s.iter().all(|&b| mask >> t[a][b] & 1 == 1));
            let abelian = s.iter().all(|&a| s.iter().all(|&b| t[a][b] == t[b][a]));
            let elems: Vec<MonomialElement> = s.iter().map(|&i| g.elements()[i].clone()).collect();
            closed && abelian && s.len() >= torus.len() && elems != torus && is_normal(&elems, &g)
        });
        assert_eq!(
            !regular_singular(&g).regular,
            singular,
            "{}",
            g.descriptor()
        );
    }
}
