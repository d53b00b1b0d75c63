//! Hyperplanes, their G-orbits, flats, and the well-restricted predicate.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::exactnum::{CycloNum, Rat};
use crate::linalg::{Cayley, CycMatrix};

use super::{GroupError, Hyperplane, Orbit, ReflectionGroup};

/// The normal line of a reflection: the image of `r − 1`, scaled so its
/// first nonzero coordinate is 1.
pub fn root_line(r: &CycMatrix) -> Vec<CycloNum> {
    let a = r.minus_identity();
    let n = a.dim();
    for j in 0..n {
        let col: Vec<CycloNum> = (0..n).map(|i| a.get(i, j).clone()).collect();
        if let Some(lead) = col.iter().find(|x| !x.is_zero()).cloned() {
            let inv = lead.inv().expect("nonzero");
            return col.iter().map(|x| x * &inv).collect();
        }
    }
    panic!("root_line called on the identity");
}

fn line_key(v: &[CycloNum]) -> Vec<Vec<Rat>> {
    v.iter().map(|x| x.coeffs().to_vec()).collect()
}

/// Names the orbits of a group, given each orbit's hyperplane indices.
pub(super) type OrbitLabeler<'a> = dyn Fn(&ReflectionGroup, &[Vec<usize>]) -> Result<Vec<char>, GroupError> + 'a;

/// Fills in hyperplanes and orbits of a freshly assembled group.
pub(super) fn compute_orbits(
    g: &mut ReflectionGroup,
    labels: &OrbitLabeler<'_>,
) -> Result<(), GroupError> {
    let mut index: HashMap<Vec<Vec<Rat>>, usize> = HashMap::new();
    let mut hyperplanes: Vec<Hyperplane> = Vec::new();
    let mut hyperplane_of = HashMap::new();
    for &r in &g.reflections {
        let line = root_line(&g.matrix(r));
        let h = *index.entry(line_key(&line)).or_insert_with(|| {
            hyperplanes.push(Hyperplane { normal: line, reflections: Vec::new(), orbit: 0 });
            hyperplanes.len() - 1
        });
        hyperplanes[h].reflections.push(r);
        hyperplane_of.insert(r, h);
    }
    // Union-find over hyperplanes, joined by conjugation with each generator.
    let mut parent: Vec<usize> = (0..hyperplanes.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let cay = g.cayley();
    let gens = g.generator_ids();
    for (h, hp) in hyperplanes.iter().enumerate() {
        let r = hp.reflections[0];
        for &s in &gens {
            let h2 = hyperplane_of[&cay.conjugate(r, s)];
            let (a, b) = (find(&mut parent, h), find(&mut parent, h2));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut root_to_orbit: HashMap<usize, usize> = HashMap::new();
    let mut orbits: Vec<Orbit> = Vec::new();
    for (h, hyp) in hyperplanes.iter_mut().enumerate() {
        let root = find(&mut parent, h);
        let o = *root_to_orbit.entry(root).or_insert_with(|| {
            orbits.push(Orbit { label: '?', hyperplanes: Vec::new(), reflections: Vec::new(), generators: Vec::new() });
            orbits.len() - 1
        });
        hyp.orbit = o;
        orbits[o].hyperplanes.push(h);
        orbits[o].reflections.extend(hyp.reflections.iter().copied());
    }
    for (s, &id) in gens.iter().enumerate() {
        let h = *hyperplane_of.get(&id).ok_or_else(|| GroupError::Data(format!("generator {s} of {} is not a reflection", g.name)))?;
        orbits[hyperplanes[h].orbit].generators.push(s);
    }
    if orbits.iter().any(|o| o.generators.is_empty()) {
        return Err(GroupError::Data(format!("an orbit of {} contains no generator", g.name)));
    }
    for o in &mut orbits {
        o.reflections.sort_unstable();
    }
    // Order orbits by their first generator before labelling.
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&o| orbits[o].generators[0]);
    let mut remap = vec![0usize; orbits.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old] = new;
    }
    let mut sorted: Vec<Orbit> = order.iter().map(|&o| orbits[o].clone()).collect();
    for h in &mut hyperplanes {
        h.orbit = remap[h.orbit];
    }
    g.hyperplanes = hyperplanes;
    g.hyperplane_of = hyperplane_of;
    g.orbits = sorted.clone();
    let orbit_gens: Vec<Vec<usize>> = sorted.iter().map(|o| o.generators.clone()).collect();
    let letters = labels(g, &orbit_gens)?;
    let distinct: BTreeSet<char> = letters.iter().copied().collect();
    if distinct.len() != letters.len() {
        return Err(GroupError::Data(format!("orbit labels of {} are not distinct", g.name)));
    }
    for (o, l) in sorted.iter_mut().zip(letters) {
        o.label = l;
    }
    // Store in label order s, t, u.
    let mut by_label: Vec<usize> = (0..sorted.len()).collect();
    by_label.sort_by_key(|&o| sorted[o].label);
    let mut remap = vec![0usize; sorted.len()];
    for (new, &old) in by_label.iter().enumerate() {
        remap[old] = new;
    }
    for h in &mut g.hyperplanes {
        h.orbit = remap[h.orbit];
    }
    g.orbits = by_label.iter().map(|&o| sorted[o].clone()).collect();
    Ok(())
}

/// Row-echelon basis of a subspace of ℚ(ζ_N)^n.
#[derive(Clone)]
struct Span {
    rows: Vec<(usize, Vec<CycloNum>)>,
}

impl Span {
    fn new() -> Span {
        Span { rows: Vec::new() }
    }

    fn reduce(&self, v: &[CycloNum]) -> Vec<CycloNum> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if !w[*p].is_zero() {
                let c = w[*p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    *x -= &(&c * y);
                }
            }
        }
        w
    }

    fn contains(&self, v: &[CycloNum]) -> bool {
        self.reduce(v).iter().all(CycloNum::is_zero)
    }

    fn insert(&mut self, v: &[CycloNum]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        let w: Vec<CycloNum> = w.iter().map(|x| x * &inv).collect();
        for (_, row) in &mut self.rows {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    *x -= &(&c * y);
                }
            }
        }
        self.rows.push((p, w));
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// A flat of the hyperplane arrangement, given by the hyperplanes containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Codimension of the flat.
    pub rank: usize,
    /// Sorted ids of the hyperplanes containing the flat.
    pub hyperplanes: Vec<usize>,
}

/// All flats of codimension at most `max_rank`, by increasing codimension.
///
/// A flat corresponds to a span of normal lines; the hyperplanes containing
/// it are those whose normal lies in the span.
pub fn flats(g: &ReflectionGroup, max_rank: usize) -> Vec<Flat> {
    let hs = g.hyperplanes();
    let mut out = vec![Flat { rank: 0, hyperplanes: Vec::new() }];
    let mut layer: Vec<(Span, Vec<usize>)> = vec![(Span::new(), Vec::new())];
    for rank in 1..=max_rank.min(g.rank()) {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut next = Vec::new();
        for (span, members) in &layer {
            for h in 0..hs.len() {
                if members.binary_search(&h).is_ok() {
                    continue;
                }
                let mut s = span.clone();
                s.insert(&hs[h].normal);
                debug_assert_eq!(s.dim(), rank);
                let inside: Vec<usize> = (0..hs.len()).filter(|&k| s.contains(&hs[k].normal)).collect();
                if seen.insert(inside.clone()) {
                    out.push(Flat { rank, hyperplanes: inside.clone() });
                    next.push((s, inside));
                }
            }
        }
        layer = next;
    }
    out
}

fn subgroup_size(cay: &Cayley, gens: &[usize]) -> usize {
    cay.subgroup_generated(gens).iter().filter(|&&b| b).count()
}

/// Smallest `j ≤ max` such that some `j` of `candidates` generate a subgroup
/// of order `target`.
fn min_generators(cay: &Cayley, candidates: &[usize], target: usize, max: usize) -> Option<usize> {
    fn search(cay: &Cayley, cands: &[usize], start: usize, left: usize, chosen: &mut Vec<usize>, target: usize) -> bool {
        if left == 0 {
            return subgroup_size(cay, chosen) == target;
        }
        for i in start..cands.len() {
            chosen.push(cands[i]);
            if search(cay, cands, i + 1, left - 1, chosen, target) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    (1..=max).find(|&j| search(cay, candidates, 0, j, &mut Vec::new(), target))
}

/// The orbit is well-restricted: some parabolic subgroup (pointwise
/// stabilizer of a flat) is generated by reflections from the orbit and is
/// minimally generated by exactly n_ε reflections.
pub(super) fn is_well_restricted(g: &ReflectionGroup, label: char) -> bool {
    let Some(oi) = g.orbit_index(label) else {
        return false;
    };
    let n_eps = g.orbits()[oi].n_eps();
    let cay = g.cayley();
    for flat in flats(g, n_eps) {
        if flat.rank == 0 {
            continue;
        }
        let all: Vec<usize> = flat.hyperplanes.iter().flat_map(|&h| g.hyperplanes()[h].reflections.iter().copied()).collect();
        let own: Vec<usize> = flat
            .hyperplanes
            .iter()
            .filter(|&&h| g.hyperplanes()[h].orbit == oi)
            .flat_map(|&h| g.hyperplanes()[h].reflections.iter().copied())
            .collect();
        if own.is_empty() {
            continue;
        }
        let size = subgroup_size(cay, &all);
        if own.len() != all.len() && subgroup_size(cay, &own) != size {
            continue;
        }
        if min_generators(cay, &all, size, n_eps) == Some(n_eps) {
            return true;
        }
    }
    false
}

/// Every set of `size` reflections generating the whole group, as sorted
/// element ids. Exhaustive; meant for small groups.
pub fn minimal_generating_sets(g: &ReflectionGroup, size: usize) -> Vec<Vec<usize>> {
    let cay = g.cayley();
    let refl = g.reflections();
    let target = g.order();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(cay: &Cayley, refl: &[usize], start: usize, left: usize, chosen: &mut Vec<usize>, target: usize, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if subgroup_size(cay, chosen) == target {
                out.push(chosen.clone());
            }
            return;
        }
        for i in start..refl.len() {
            chosen.push(refl[i]);
            rec(cay, refl, i + 1, left - 1, chosen, target, out);
            chosen.pop();
        }
    }
    rec(cay, refl, 0, size, &mut chosen, target, &mut out);
    out
}
