//! Exact linear algebra over cyclotomic fields.

use std::collections::HashMap;
use std::fmt;

use crate::cyclo::Cyclotomic;

/// Dense matrix with cyclotomic entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclotomic::zero(1); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cyclotomic::one(1));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclotomic) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Cyclotomic) {
        let i = r * self.cols + c;
        self.data[i] = &self.data[i] + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclotomic::is_zero)
    }

    pub fn scale(&self, s: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.rows.min(self.cols)).fold(Cyclotomic::zero(1), |acc, i| &acc + self.get(i, i))
    }

    pub fn row_vecs(&self) -> Vec<Vec<Cyclotomic>> {
        self.data
            .chunks(self.cols.max(1))
            .map(<[_]>::to_vec)
            .collect()
    }

    pub fn rank(&self) -> usize {
        dense_rank(self.row_vecs())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank by Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Cyclotomic>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        let pivot: Vec<Cyclotomic> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot).skip(col) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Incrementally maintained row echelon basis of a subspace of `K^cols`.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    /// Rows normalized to leading entry 1 at their pivot column.
    rows: Vec<(usize, Vec<Cyclotomic>)>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis { cols, rows: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Cyclotomic>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("pivot is nonzero");
        let v: Vec<Cyclotomic> = v.iter().map(|x| x * &inv).collect();
        // keep earlier rows reduced against the new pivot
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Sparse matrix given by its nonzero entries; the rank is computed on the
/// connected components of the bipartite row/column incidence graph.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    entries: HashMap<(usize, usize), Cyclotomic>,
}

impl SparseMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: Cyclotomic) {
        match self.entries.get_mut(&(r, c)) {
            Some(x) => *x = &*x + &v,
            None => {
                self.entries.insert((r, c), v);
            }
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Cyclotomic> {
        self.entries.get(&(r, c)).filter(|x| !x.is_zero())
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, usize), &Cyclotomic)> {
        self.entries.iter().filter(|(_, v)| !v.is_zero())
    }

    pub fn rank(&self) -> usize {
        let mut row_id: HashMap<usize, usize> = HashMap::new();
        let mut col_id: HashMap<usize, usize> = HashMap::new();
        let mut parent: Vec<usize> = vec![];
        let node = |map: &mut HashMap<usize, usize>, key: usize, parent: &mut Vec<usize>| {
            *map.entry(key).or_insert_with(|| {
                parent.push(parent.len());
                parent.len() - 1
            })
        };
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let nz: Vec<_> = self.nonzero().collect();
        let mut links = vec![];
        for (&(r, c), _) in &nz {
            let a = node(&mut row_id, r, &mut parent);
            let b = node(&mut col_id, c, &mut parent);
            links.push((a, b));
        }
        for (a, b) in links {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        // component -> (local rows, local cols, entries)
        let mut blocks: HashMap<usize, (HashMap<usize, usize>, HashMap<usize, usize>, Vec<_>)> =
            HashMap::new();
        for (&(r, c), v) in nz {
            let root = find(&mut parent, row_id[&r]);
            let (rows, cols, ents) = blocks.entry(root).or_default();
            let nr = rows.len();
            let lr = *rows.entry(r).or_insert(nr);
            let nc = cols.len();
            let lc = *cols.entry(c).or_insert(nc);
            ents.push((lr, lc, v.clone()));
        }
        blocks
            .into_values()
            .map(|(rows, cols, ents)| {
                let mut dense = vec![vec![Cyclotomic::zero(1); cols.len()]; rows.len()];
                for (r, c, v) in ents {
                    dense[r][c] = v;
                }
                dense_rank(dense)
            })
            .sum()
    }
}
