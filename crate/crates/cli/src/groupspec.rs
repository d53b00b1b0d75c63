//! Textual group specifications: `G(m,b,n)`, `Gk`, `I2(k)` and Weyl types
//! such as `C2` or `~C2` (affine).

use std::fmt;
use std::str::FromStr;

use reflex_core::groups::{build_exceptional, build_monomial_group, GroupName, ReflectionGroup};
use reflex_core::rootsys::{build_root_system, RootSystem, RootType};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Complex(GroupName),
    /// The dihedral group of order 2k, realized as G(k,k,2).
    Dihedral(u32),
    Weyl { kind: RootType, rank: usize, affine: bool },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Complex(name) => write!(f, "{name}"),
            GroupSpec::Dihedral(k) => write!(f, "I2({k})"),
            GroupSpec::Weyl { kind, rank, affine } => write!(f, "{}{kind}{rank}", if *affine { "~" } else { "" }),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = CliError;
    fn from_str(s: &str) -> Result<GroupSpec, CliError> {
        let bad = || CliError::Usage(format!("cannot parse group {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(k) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let k: u32 = k.parse().map_err(|_| bad())?;
            return if k >= 2 { Ok(GroupSpec::Dihedral(k)) } else { Err(bad()) };
        }
        let (affine, body) = match t.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, t.as_str()),
        };
        let mut chars = body.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let weyl_rank = rest.parse::<usize>().ok().filter(|_| !rest.starts_with('0'));
        // G4 … G37 name exceptional groups, G2 the Weyl type
        let is_weyl = head.is_ascii_uppercase() && ('A'..='G').contains(&head) && weyl_rank.is_some() && !(head == 'G' && weyl_rank != Some(2));
        if is_weyl {
            let kind: RootType = head.to_string().parse().map_err(|_| bad())?;
            let rank = weyl_rank.unwrap_or(0);
            build_root_system(kind, rank).map_err(|e| CliError::Usage(e.to_string()))?;
            return Ok(GroupSpec::Weyl { kind, rank, affine });
        }
        if affine {
            return Err(bad());
        }
        body.parse::<GroupName>().map(GroupSpec::Complex).map_err(|_| bad())
    }
}

impl GroupSpec {
    pub fn name(&self) -> Result<GroupName, CliError> {
        match *self {
            GroupSpec::Complex(name) => Ok(name),
            GroupSpec::Dihedral(k) => Ok(GroupName::Monomial { m: k, b: k, n: 2 }),
            GroupSpec::Weyl { .. } => Err(CliError::Usage(format!("{self} is a root system, not a complex reflection group"))),
        }
    }

    pub fn root_system(&self) -> Result<RootSystem, CliError> {
        match *self {
            GroupSpec::Weyl { kind, rank, .. } => build_root_system(kind, rank).map_err(|e| CliError::Usage(e.to_string())),
            _ => Err(CliError::Usage(format!("{self} is not a Weyl type"))),
        }
    }
}

pub fn build_group(name: GroupName) -> Result<ReflectionGroup, CliError> {
    let built = match name {
        GroupName::Monomial { m, b, n } => build_monomial_group(m, b, n),
        GroupName::Exceptional(k) => build_exceptional(k),
    };
    built.map_err(|e| CliError::Usage(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["G(4,2,3)", "G13", "I2(8)", "C2", "~C2", "G2", "F4", "~G2", "E6"] {
            assert_eq!(s.parse::<GroupSpec>().unwrap().to_string(), s);
        }
        assert!(matches!("G4".parse::<GroupSpec>().unwrap(), GroupSpec::Complex(GroupName::Exceptional(4))));
        for s in ["G(99", "", "~G13", "I2(1)", "Q3", "B0", "G(4,3,2)x"] {
            assert!(s.parse::<GroupSpec>().is_err(), "{s}");
        }
    }
}
