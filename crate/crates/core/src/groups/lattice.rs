//! Index-based subgroup machinery: Dimino closure, conjugacy classes and the
//! lattice of normal subgroups built from joins of class closures.

use std::collections::{HashMap, HashSet, VecDeque};

use bitvec::prelude::*;

use super::FiniteMonomialGroup;
use crate::monomial::MonomialElement;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

/// A subgroup of an [`IndexedGroup`], stored extensionally by element index
/// together with the generators that were used to build it.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub members: BitVec,
    pub elements: Vec<u32>,
    pub gens: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members[x as usize]
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// A finite monomial group with its elements numbered `0..|G|` in canonical order.
pub struct IndexedGroup<'a> {
    group: &'a FiniteMonomialGroup,
    table: Option<Vec<u32>>,
    inverse: Vec<u32>,
    identity: u32,
}

impl<'a> IndexedGroup<'a> {
    pub fn new(group: &'a FiniteMonomialGroup) -> Self {
        let elems = group.elements();
        let size = elems.len();
        let idx = |e: &MonomialElement| group.index_of(e).expect("group is closed");
        let table = (size <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(size * size);
            for a in elems {
                for b in elems {
                    t.push(idx(&(a * b)));
                }
            }
            t
        });
        let inverse = elems.iter().map(|e| idx(&e.invert())).collect();
        let identity = idx(&MonomialElement::identity(
            group.rank(),
            group.ambient_order(),
        ));
        IndexedGroup {
            group,
            table,
            inverse,
            identity,
        }
    }

    pub fn group(&self) -> &'a FiniteMonomialGroup {
        self.group
    }

    pub fn size(&self) -> usize {
        self.inverse.len()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn element(&self, i: u32) -> &'a MonomialElement {
        &self.group.elements()[i as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.size() + b as usize],
            None => {
                let p = self.element(a) * self.element(b);
                self.group.index_of(&p).expect("group is closed")
            }
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut acc = self.identity;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn trivial(&self) -> Subgroup {
        let mut members = bitvec![0; self.size()];
        members.set(self.identity as usize, true);
        Subgroup {
            members,
            elements: vec![self.identity],
            gens: vec![],
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: bitvec![1; self.size()],
            elements: (0..self.size() as u32).collect(),
            gens: self.generating_set(),
        }
    }

    fn add_coset(&self, sub: &mut Subgroup, base: &[u32], x: u32) {
        for &h in base {
            let y = self.mul(h, x);
            sub.members.set(y as usize, true);
            sub.elements.push(y);
        }
    }

    /// Dimino's algorithm: the subgroup generated by `h` and `new_gens`.
    pub fn extend(&self, h: &Subgroup, new_gens: &[u32]) -> Subgroup {
        let mut sub = h.clone();
        for &g in new_gens {
            if sub.contains(g) {
                continue;
            }
            let base = sub.elements.clone();
            sub.gens.push(g);
            self.add_coset(&mut sub, &base, g);
            let mut reps = vec![g];
            let mut next = 0;
            while next < reps.len() {
                let r = reps[next];
                next += 1;
                for gi in 0..sub.gens.len() {
                    let x = self.mul(r, sub.gens[gi]);
                    if !sub.contains(x) {
                        self.add_coset(&mut sub, &base, x);
                        reps.push(x);
                    }
                }
            }
        }
        sub
    }

    pub fn generated(&self, gens: &[u32]) -> Subgroup {
        self.extend(&self.trivial(), gens)
    }

    /// A small generating set, found greedily in element order.
    pub fn generating_set(&self) -> Vec<u32> {
        let mut sub = self.trivial();
        for x in 0..self.size() as u32 {
            if sub.order() == self.size() {
                break;
            }
            if !sub.contains(x) {
                sub = self.extend(&sub, &[x]);
            }
        }
        sub.gens
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let gens = self.generating_set();
        let mut seen = bitvec![0; self.size()];
        let mut classes = vec![];
        for x in 0..self.size() as u32 {
            if seen[x as usize] {
                continue;
            }
            seen.set(x as usize, true);
            let mut class = vec![x];
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &g in &gens {
                    let z = self.conj(g, y);
                    if !seen[z as usize] {
                        seen.set(z as usize, true);
                        class.push(z);
                        queue.push_back(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[u32]) -> Subgroup {
        let group_gens = self.generating_set();
        let mut sub = self.generated(gens);
        loop {
            let mut missing = None;
            'search: for &x in &sub.gens {
                for &g in &group_gens {
                    let c = self.conj(g, x);
                    if !sub.contains(c) {
                        missing = Some(c);
                        break 'search;
                    }
                }
            }
            match missing {
                Some(c) => sub = self.extend(&sub, &[c]),
                None => return sub,
            }
        }
    }

    pub fn is_abelian(&self, sub: &Subgroup) -> bool {
        sub.gens
            .iter()
            .enumerate()
            .all(|(i, &a)| sub.gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        let group_gens = self.generating_set();
        sub.gens
            .iter()
            .all(|&x| group_gens.iter().all(|&g| sub.contains(self.conj(g, x))))
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generating_set();
        let central: Vec<u32> = (0..self.size() as u32)
            .filter(|&x| gens.iter().all(|&g| self.commute(g, x)))
            .collect();
        self.generated(&central)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = self.generating_set();
        let mut comms = vec![];
        for &a in &gens {
            for &b in &gens {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                comms.push(c);
            }
        }
        self.normal_closure(&comms)
    }

    /// All normal subgroups `N` for which `keep` holds, assuming `keep` is
    /// inherited by normal subgroups of `N`. Every normal subgroup is the join
    /// of the normal closures of the classes it contains, so the search runs
    /// over joins of class closures.
    pub fn normal_subgroups<F>(&self, keep: F) -> Vec<Subgroup>
    where
        F: Fn(&Self, &Subgroup) -> bool,
    {
        let mut distinct: HashSet<BitVec> = HashSet::new();
        let mut closures = vec![];
        for class in self.conjugacy_classes() {
            if class == [self.identity] {
                continue;
            }
            let k = self.generated(&class);
            if keep(self, &k) && distinct.insert(k.members.clone()) {
                closures.push(k);
            }
        }
        let mut seen: HashSet<BitVec> = HashSet::new();
        let trivial = self.trivial();
        seen.insert(trivial.members.clone());
        let mut found = vec![trivial];
        let mut next = 0;
        while next < found.len() {
            let base = found[next].clone();
            next += 1;
            for k in &closures {
                if k.gens.iter().all(|&g| base.contains(g)) {
                    continue;
                }
                let j = self.extend(&base, &k.gens);
                if !seen.contains(&j.members) && keep(self, &j) {
                    seen.insert(j.members.clone());
                    found.push(j);
                }
            }
        }
        found.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| sorted(&a.elements).cmp(&sorted(&b.elements)))
        });
        found
    }

    /// Materializes a subgroup as a standalone group.
    pub fn to_group(&self, sub: &Subgroup) -> FiniteMonomialGroup {
        let elems = sub
            .elements
            .iter()
            .map(|&i| self.element(i).clone())
            .collect();
        FiniteMonomialGroup::from_closed_set(
            self.group.rank(),
            self.group.ambient_order(),
            elems,
            super::GroupKind::Generated,
        )
    }

    /// Cosets of a normal subgroup, as a label per element.
    pub fn coset_labels(&self, normal: &Subgroup) -> (Vec<u32>, Vec<u32>) {
        let mut label = vec![u32::MAX; self.size()];
        let mut reps = vec![];
        for x in 0..self.size() as u32 {
            if label[x as usize] != u32::MAX {
                continue;
            }
            let l = reps.len() as u32;
            reps.push(x);
            for &d in &normal.elements {
                label[self.mul(x, d) as usize] = l;
            }
        }
        (label, reps)
    }
}

fn sorted(v: &[u32]) -> Vec<u32> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

/// Histogram of element orders.
pub fn order_histogram(ig: &IndexedGroup<'_>) -> HashMap<u64, usize> {
    let mut h = HashMap::new();
    for x in 0..ig.size() as u32 {
        *h.entry(ig.element_order(x)).or_insert(0) += 1;
    }
    h
}
