//! The supported exceptional groups.
//!
//! Rank-two groups, G4 and G26 come from an embedded generator table; G23
//! is the Coxeter group H3 and G28 the Weyl group of F4.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::exactnum::CycloNum;
use crate::exec::Strategy;
use crate::linalg::coxeter::coxeter_generators;
use crate::linalg::{CycMatrix, FiniteGroup, DEFAULT_CAP};
use crate::rootsys::{build_root_system, RootType};

use super::reference::{known_group, KnownGroup};
use super::{GroupError, GroupName, Realization, ReflectionGroup};

pub const EXCEPTIONAL_NAMES: &[u32] = &[4, 5, 6, 7, 9, 10, 11, 13, 14, 15, 17, 18, 19, 21, 23, 26, 28];

const TABLE: &str = include_str!("../../data/exceptional_generators.json");

#[derive(Deserialize)]
struct TableEntry {
    conductor: u32,
    generators: Vec<Vec<Vec<String>>>,
}

fn table() -> &'static BTreeMap<String, TableEntry> {
    static PARSED: OnceLock<BTreeMap<String, TableEntry>> = OnceLock::new();
    PARSED.get_or_init(|| serde_json::from_str(TABLE).expect("embedded generator table is valid JSON"))
}

/// Generator matrices of `G_k` and their conductor.
pub fn exceptional_generators(k: u32) -> Result<(u32, Vec<CycMatrix>), GroupError> {
    match k {
        23 => {
            let gens = coxeter_generators(&[vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]]);
            Ok((gens[0].conductor(), gens))
        }
        28 => {
            let f4 = build_root_system(RootType::F, 4).map_err(|e| GroupError::Data(e.to_string()))?;
            Ok((1, f4.simple_reflection_matrices()))
        }
        _ => {
            let entry = table().get(&format!("G{k}")).ok_or_else(|| GroupError::Unsupported(format!("G{k}")))?;
            let mut gens = Vec::new();
            for m in &entry.generators {
                let rows = m
                    .iter()
                    .map(|row| row.iter().map(|s| CycloNum::parse(entry.conductor, s)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| GroupError::Data(e.to_string()))?;
                gens.push(CycMatrix::from_rows(rows, entry.conductor).map_err(|e| GroupError::Data(e.to_string()))?);
            }
            Ok((entry.conductor, gens))
        }
    }
}

pub fn build_exceptional(k: u32) -> Result<ReflectionGroup, GroupError> {
    build_exceptional_with(k, Strategy::default())
}

/// Enumerates `G_k`, names its orbits and validates it against the known
/// order and orbit sizes.
pub fn build_exceptional_with(k: u32, strategy: Strategy) -> Result<ReflectionGroup, GroupError> {
    let known = known_group(k).ok_or_else(|| GroupError::Unsupported(format!("G{k}")))?;
    let (conductor, gens) = exceptional_generators(k)?;
    let rank = gens[0].dim();
    let fg = FiniteGroup::closure(gens, DEFAULT_CAP)?;
    assemble_exceptional(k, known, rank, conductor, Realization::Matrix(fg), strategy)
}

pub(super) fn assemble_exceptional(
    k: u32,
    known: &'static KnownGroup,
    rank: usize,
    conductor: u32,
    realization: Realization,
    strategy: Strategy,
) -> Result<ReflectionGroup, GroupError> {
    let name = format!("G{k}");
    if realization.cayley().order() != known.order() {
        return Err(GroupError::Validation { name, reason: format!("order {} instead of {}", realization.cayley().order(), known.order()) });
    }
    let labels = |g: &ReflectionGroup, _: &[Vec<usize>]| label_by_counts(g, known);
    ReflectionGroup::assemble(GroupName::Exceptional(k), rank, conductor, realization, strategy, &labels)
}

/// Assigns letters by matching (|H_ε|, |R_ε|) with the known orbit data;
/// among orbits with equal counts the one with the earlier generator comes first.
fn label_by_counts(g: &ReflectionGroup, known: &KnownGroup) -> Result<Vec<char>, GroupError> {
    let fail = |reason: String| GroupError::Validation { name: g.name().to_string(), reason };
    if g.orbits().len() != known.orbits.len() {
        return Err(fail(format!("{} hyperplane orbits instead of {}", g.orbits().len(), known.orbits.len())));
    }
    let mut labels = vec!['?'; g.orbits().len()];
    for ko in known.orbits {
        let slot = g
            .orbits()
            .iter()
            .enumerate()
            .position(|(i, o)| labels[i] == '?' && o.hyperplanes.len() == ko.hyperplane_count() && o.reflections.len() == ko.reflection_count())
            .ok_or_else(|| fail(format!("no orbit with {} hyperplanes and {} reflections for {}", ko.hyperplane_count(), ko.reflection_count(), ko.label)))?;
        labels[slot] = ko.label;
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_exceptionals() {
        let g4 = build_exceptional(4).unwrap();
        assert_eq!(g4.order(), 24);
        assert_eq!(g4.orbits().len(), 1);
        let g5 = build_exceptional(5).unwrap();
        assert_eq!(g5.order(), 72);
        let g13 = build_exceptional(13).unwrap();
        assert_eq!(g13.order(), 96);
        assert!(g13.is_well_restricted('s'));
        assert!(!g13.is_well_restricted('t'));
    }
}
