//! Finite groups enumerated by breadth-first closure over their generators.

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::Deref;

use super::{CycMatrix, LinalgError};

/// Elements that can be multiplied, inverted and canonically hashed.
pub trait GroupElem: Clone + Eq + Hash + Ord + Send + Sync {
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// The identity in the same ambient structure as `self`.
    fn identity_like(&self) -> Self;
}

impl GroupElem for CycMatrix {
    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn inverse(&self) -> Self {
        CycMatrix::inverse(self).expect("group elements are invertible")
    }
    fn identity_like(&self) -> Self {
        CycMatrix::identity(self.dim(), self.conductor())
    }
}

enum Target {
    Known(usize),
    Fresh(usize),
}

/// Default bound on the number of elements produced by a closure.
pub const DEFAULT_CAP: usize = 100_000;

/// A finite group with a fixed element order and a Cayley graph for its generators.
///
/// Element 0 is the identity. Elements are numbered in breadth-first order
/// from the identity, each layer sorted by the elements' canonical order, so
/// the numbering is deterministic. Every element other than the identity
/// has a parent one layer closer with `parent · gen = element`.
#[derive(Clone)]
pub struct FiniteGroup<E: GroupElem> {
    gens: Vec<E>,
    elements: Vec<E>,
    index: HashMap<E, usize>,
    cayley: Cayley,
}

/// The Cayley graph of an enumerated group on its generators.
///
/// Everything here works on element indices only, so it is shared by all
/// realizations of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cayley {
    ngens: usize,
    /// `right[i][s]` is the index of `elements[i] · gens[s]`.
    right: Vec<Vec<u32>>,
    parent: Vec<(u32, u32)>,
    inverse: Vec<u32>,
    depth: Vec<u32>,
}

impl<E: GroupElem> Deref for FiniteGroup<E> {
    type Target = Cayley;
    fn deref(&self) -> &Cayley {
        &self.cayley
    }
}

impl<E: GroupElem> FiniteGroup<E> {
    /// Enumerates the group generated by `gens`, failing if it exceeds `cap` elements.
    pub fn closure(gens: Vec<E>, cap: usize) -> Result<FiniteGroup<E>, LinalgError> {
        let first = gens.first().ok_or(LinalgError::NoGenerators)?;
        let id = first.identity_like();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut parent = vec![(0u32, 0u32)];
        let mut depth = vec![0u32];
        let mut right: Vec<Vec<u32>> = Vec::new();
        let mut layer = vec![0usize];
        let mut d = 0u32;
        while !layer.is_empty() {
            d += 1;
            let mut fresh: Vec<(E, u32, u32)> = Vec::new();
            let mut fresh_index: HashMap<E, usize> = HashMap::new();
            let mut pending: Vec<(usize, usize, Target)> = Vec::new();
            for &i in &layer {
                for (s, g) in gens.iter().enumerate() {
                    let h = elements[i].compose(g);
                    let target = if let Some(&j) = index.get(&h) {
                        Target::Known(j)
                    } else if let Some(&k) = fresh_index.get(&h) {
                        Target::Fresh(k)
                    } else {
                        fresh_index.insert(h.clone(), fresh.len());
                        fresh.push((h, i as u32, s as u32));
                        if elements.len() + fresh.len() > cap {
                            return Err(LinalgError::CapExceeded(cap));
                        }
                        Target::Fresh(fresh.len() - 1)
                    };
                    pending.push((i, s, target));
                }
            }
            // Sort the new layer canonically, then number it.
            let mut order: Vec<usize> = (0..fresh.len()).collect();
            order.sort_by(|&a, &b| fresh[a].0.cmp(&fresh[b].0));
            let base = elements.len();
            let mut slot = vec![0usize; fresh.len()];
            for (pos, &k) in order.iter().enumerate() {
                slot[k] = base + pos;
            }
            let mut fresh: Vec<Option<(E, u32, u32)>> = fresh.into_iter().map(Some).collect();
            for &k in &order {
                let (h, p, s) = fresh[k].take().expect("each new element placed once");
                index.insert(h.clone(), elements.len());
                elements.push(h);
                parent.push((p, s));
                depth.push(d);
            }
            right.resize(elements.len(), Vec::new());
            for (i, s, target) in pending {
                let j = match target {
                    Target::Known(j) => j,
                    Target::Fresh(k) => slot[k],
                };
                let row = &mut right[i];
                if row.len() < gens.len() {
                    row.resize(gens.len(), u32::MAX);
                }
                row[s] = j as u32;
            }
            layer = (base..elements.len()).collect();
        }
        let inverse = elements
            .iter()
            .map(|e| *index.get(&e.inverse()).expect("closure contains inverses") as u32)
            .collect();
        let cayley = Cayley { ngens: gens.len(), right, parent, inverse, depth };
        Ok(FiniteGroup { gens, elements, index, cayley })
    }

    pub fn generators(&self) -> &[E] {
        &self.gens
    }

    pub fn cayley(&self) -> &Cayley {
        &self.cayley
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }
}

impl Cayley {
    /// Rebuilds a Cayley graph from its right-multiplication table and
    /// breadth-first tree, checking that they are consistent.
    pub fn from_parts(ngens: usize, right: Vec<Vec<u32>>, parent: Vec<(u32, u32)>) -> Option<Cayley> {
        let n = right.len();
        if n == 0 || parent.len() != n || right.iter().any(|r| r.len() != ngens || r.iter().any(|&j| j as usize >= n)) {
            return None;
        }
        let mut depth = vec![0u32; n];
        for i in 1..n {
            let (p, s) = parent[i];
            if p as usize >= i || s as usize >= ngens || right[p as usize][s as usize] as usize != i {
                return None;
            }
            depth[i] = depth[p as usize] + 1;
        }
        let mut c = Cayley { ngens, right, parent, inverse: vec![0; n], depth };
        // x · x^{-1} = 1: walk the inverse word (generator inverses are found first).
        let mut gen_inv = vec![0usize; ngens];
        for (s, slot) in gen_inv.iter_mut().enumerate() {
            *slot = (0..n).find(|&j| c.right[j][s] == 0)?;
        }
        for i in 0..n {
            let mut acc = 0usize;
            for s in c.word(i).into_iter().rev() {
                acc = c.mul(acc, gen_inv[s]);
            }
            c.inverse[i] = acc as u32;
        }
        Some(c)
    }

    pub fn order(&self) -> usize {
        self.right.len()
    }

    pub fn generator_count(&self) -> usize {
        self.ngens
    }

    /// `right[i][s]`, the index of `elements[i] · gens[s]`.
    pub fn right_table(&self) -> &[Vec<u32>] {
        &self.right
    }

    /// Index of `elements[i] · gens[s]`.
    pub fn right_mul_gen(&self, i: usize, s: usize) -> usize {
        self.right[i][s] as usize
    }

    /// Breadth-first parent and the generator leading from it, `None` for the identity.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        if i == 0 {
            None
        } else {
            let (p, s) = self.parent[i];
            Some((p as usize, s as usize))
        }
    }

    /// Word length of element `i` in the generators.
    pub fn depth(&self, i: usize) -> usize {
        self.depth[i] as usize
    }

    /// A shortest word `[s1, s2, …]` with `elements[i] = gens[s1]·gens[s2]·…`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.depth(i));
        while let Some((p, s)) = self.parent(i) {
            w.push(s);
            i = p;
        }
        w.reverse();
        w
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Index of `elements[i] · elements[j]`, by walking `j`'s word (no hashing).
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.word(j).into_iter().fold(i, |acc, s| self.right_mul_gen(acc, s))
    }

    /// Index of `elements[g]^{-1} · elements[x] · elements[g]`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse_of(g), x), g)
    }

    /// Index of the generator `gens[s]` itself.
    pub fn gen_index(&self, s: usize) -> usize {
        self.right_mul_gen(0, s)
    }

    /// Order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.mul(cur, i);
            k += 1;
        }
        k
    }

    /// Extends generator images along the breadth-first tree and checks the
    /// result is a homomorphism (`image(g·s) = image(g)·image(s)` for every
    /// element `g` and generator `s`, which implies it for all pairs).
    pub fn extend_homomorphism<T, F>(&self, gen_images: &[T], identity: T, compose: F) -> Option<Vec<T>>
    where
        T: Clone + PartialEq,
        F: Fn(&T, &T) -> T,
    {
        assert_eq!(gen_images.len(), self.ngens);
        let mut img: Vec<T> = Vec::with_capacity(self.order());
        img.push(identity);
        for i in 1..self.order() {
            let (p, s) = self.parent[i];
            img.push(compose(&img[p as usize], &gen_images[s as usize]));
        }
        for i in 0..self.order() {
            for (s, g) in gen_images.iter().enumerate() {
                if img[self.right_mul_gen(i, s)] != compose(&img[i], g) {
                    return None;
                }
            }
        }
        Some(img)
    }

    /// Membership mask of the subgroup generated by the given elements.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        inside
    }

    /// Membership mask of the normal closure of `seeds`.
    pub fn normal_closure(&self, seeds: &[usize]) -> Vec<bool> {
        // All conjugates of the seeds under the generators' action.
        let mut conj = vec![false; self.order()];
        let mut stack: Vec<usize> = Vec::new();
        for &x in seeds {
            if !conj[x] {
                conj[x] = true;
                stack.push(x);
            }
        }
        let gen_ids: Vec<usize> = (0..self.ngens).map(|s| self.gen_index(s)).collect();
        while let Some(x) = stack.pop() {
            for &g in &gen_ids {
                let y = self.conjugate(x, g);
                if !conj[y] {
                    conj[y] = true;
                    stack.push(y);
                }
            }
        }
        let conj_set: Vec<usize> = (0..self.order()).filter(|&i| conj[i]).collect();
        self.subgroup_generated(&conj_set)
    }

    /// The commutator subgroup, as the normal closure of generator commutators.
    pub fn commutator_subgroup(&self) -> Vec<bool> {
        let ids: Vec<usize> = (0..self.ngens).map(|s| self.gen_index(s)).collect();
        let mut seeds = Vec::new();
        for &a in &ids {
            for &b in &ids {
                let c = self.mul(self.mul(self.inverse_of(a), self.inverse_of(b)), self.mul(a, b));
                seeds.push(c);
            }
        }
        self.normal_closure(&seeds)
    }

    /// Right cosets `x·N` of a normal subgroup `N`; returns the coset id of each
    /// element (ids in order of first appearance) and the number of cosets.
    pub fn cosets(&self, normal: &[bool]) -> (Vec<usize>, usize) {
        let members: Vec<usize> = (0..self.order()).filter(|&i| normal[i]).collect();
        let mut id = vec![usize::MAX; self.order()];
        let mut count = 0;
        for g in 0..self.order() {
            if id[g] != usize::MAX {
                continue;
            }
            for &h in &members {
                id[self.mul(g, h)] = count;
            }
            count += 1;
        }
        (id, count)
    }
}

/// Convenience wrapper: closure of a list of matrices.
pub fn group_closure(gens: Vec<CycMatrix>, cap: usize) -> Result<FiniteGroup<CycMatrix>, LinalgError> {
    FiniteGroup::closure(gens, cap)
}
