//! Built groups and their invariant tables, computed once per name.

use std::collections::BTreeMap;
use std::sync::Arc;

use reflex_core::exec::Strategy;
use reflex_core::groups::{GroupName, ReflectionGroup, EXCEPTIONAL_NAMES};
use reflex_core::reps::{eps_rep, EpsRep};
use reflex_core::series::{invariant_table, InvariantTable, MolienData};

use crate::groupspec::build_group;
use crate::CliError;

pub struct Entry {
    pub group: ReflectionGroup,
    pub table: InvariantTable,
    /// The orbit representation for each orbit, or why it could not be built.
    pub reps: Vec<(char, Result<EpsRep, String>)>,
}

#[derive(Default)]
pub struct Catalog {
    entries: BTreeMap<GroupName, Arc<Entry>>,
}

impl Catalog {
    pub fn get(&mut self, name: GroupName) -> Result<Arc<Entry>, CliError> {
        if let Some(e) = self.entries.get(&name) {
            return Ok(e.clone());
        }
        let group = build_group(name)?;
        let data = MolienData::new(&group, Strategy::default()).map_err(|e| CliError::Compute(format!("{name}: {e}")))?;
        let table = invariant_table(&group, &data).map_err(|e| CliError::Compute(format!("{name}: {e}")))?;
        let reps = group.orbits().iter().map(|o| (o.label, eps_rep(&group, o.label).map_err(|e| e.to_string()))).collect();
        let entry = Arc::new(Entry { group, table, reps });
        self.entries.insert(name, entry.clone());
        Ok(entry)
    }
}

/// |G(m,b,n)| = m^n n! / b.
pub fn monomial_order(m: u32, b: u32, n: usize) -> u64 {
    (m as u64).pow(n as u32) * (1..=n as u64).product::<u64>() / b as u64
}

/// The supported groups: G(m,b,n) with m ≤ 6, b | m, n ≤ 4 and order at most
/// 20000; G(2b,2b,2) and G(2b+1,2b+1,2) for b ≤ 6; the embedded exceptionals.
pub fn supported_groups() -> Vec<GroupName> {
    let mut out = Vec::new();
    for m in 1..=6u32 {
        for b in (1..=m).filter(|b| m % b == 0) {
            for n in 1..=4usize {
                if n == 1 && (m == 1 || b > 1) {
                    continue;
                }
                if monomial_order(m, b, n) <= 20_000 {
                    out.push(GroupName::Monomial { m, b, n });
                }
            }
        }
    }
    for k in 2..=13u32 {
        let g = GroupName::Monomial { m: k, b: k, n: 2 };
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out.extend(EXCEPTIONAL_NAMES.iter().map(|&k| GroupName::Exceptional(k)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supported_list() {
        let all = supported_groups();
        assert_eq!(all.len(), 70);
        assert!(all.contains(&GroupName::Monomial { m: 6, b: 2, n: 4 }));
        assert!(!all.contains(&GroupName::Monomial { m: 6, b: 1, n: 4 }));
    }
}
