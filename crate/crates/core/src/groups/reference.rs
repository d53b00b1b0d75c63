//! Published invariants of the supported exceptional groups.
//!
//! Used to name hyperplane orbits (by matching |R_ε| and |H_ε|) and to
//! validate generator tables on load. Computed invariants never come from
//! here.

/// Reflexponent data of one orbit. `extension` marks an orbit that is not
/// well-restricted, whose numbers come from a substitute representation.
#[derive(Clone, Copy, Debug)]
pub struct KnownOrbit {
    pub label: char,
    pub reflexponents: &'static [u32],
    pub coreflexponents: &'static [u32],
    pub extension: bool,
}

impl KnownOrbit {
    /// |R_ε| = Σ ε_i.
    pub fn reflection_count(&self) -> usize {
        self.reflexponents.iter().sum::<u32>() as usize
    }

    /// |H_ε| = Σ ε_i*.
    pub fn hyperplane_count(&self) -> usize {
        self.coreflexponents.iter().sum::<u32>() as usize
    }
}

#[derive(Clone, Copy, Debug)]
pub struct KnownGroup {
    pub index: u32,
    pub exponents: &'static [u32],
    pub coexponents: &'static [u32],
    pub orbits: &'static [KnownOrbit],
}

impl KnownGroup {
    pub fn order(&self) -> usize {
        self.exponents.iter().map(|e| *e as usize + 1).product()
    }
}

const fn o(label: char, reflexponents: &'static [u32], coreflexponents: &'static [u32]) -> KnownOrbit {
    KnownOrbit { label, reflexponents, coreflexponents, extension: false }
}

const fn g(index: u32, exponents: &'static [u32], coexponents: &'static [u32], orbits: &'static [KnownOrbit]) -> KnownGroup {
    KnownGroup { index, exponents, coexponents, orbits }
}

pub const KNOWN_GROUPS: &[KnownGroup] = &[
    g(4, &[3, 5], &[1, 3], &[o('s', &[3, 5], &[1, 3])]),
    g(5, &[5, 11], &[1, 7], &[o('s', &[8], &[4]), o('t', &[8], &[4])]),
    g(6, &[3, 11], &[1, 9], &[o('s', &[6], &[6]), o('t', &[8], &[4])]),
    g(7, &[11, 11], &[1, 13], &[o('s', &[6], &[6]), o('t', &[8], &[4]), o('u', &[8], &[4])]),
    g(9, &[7, 23], &[1, 17], &[o('s', &[12], &[12]), o('t', &[18], &[6])]),
    g(10, &[11, 23], &[1, 13], &[o('s', &[16], &[8]), o('t', &[18], &[6])]),
    g(11, &[23, 23], &[1, 25], &[o('s', &[12], &[12]), o('t', &[16], &[8]), o('u', &[18], &[6])]),
    g(
        13,
        &[7, 11],
        &[1, 17],
        &[o('s', &[6], &[6]), KnownOrbit { label: 't', reflexponents: &[4, 8], coreflexponents: &[0, 12], extension: true }],
    ),
    g(14, &[5, 23], &[1, 19], &[o('s', &[12], &[12]), o('t', &[16], &[8])]),
    g(15, &[11, 23], &[1, 25], &[o('s', &[12], &[12]), o('t', &[16], &[8]), o('u', &[6], &[6])]),
    g(17, &[19, 59], &[1, 41], &[o('s', &[30], &[30]), o('t', &[48], &[12])]),
    g(18, &[29, 59], &[1, 31], &[o('s', &[40], &[20]), o('t', &[48], &[12])]),
    g(19, &[59, 59], &[1, 61], &[o('s', &[30], &[30]), o('t', &[40], &[20]), o('u', &[48], &[12])]),
    g(21, &[11, 59], &[1, 49], &[o('s', &[30], &[30]), o('t', &[40], &[20])]),
    g(23, &[1, 5, 9], &[1, 5, 9], &[o('s', &[1, 5, 9], &[1, 5, 9])]),
    g(26, &[5, 11, 17], &[1, 7, 13], &[o('s', &[9], &[9]), o('t', &[9, 15], &[3, 9])]),
    g(28, &[1, 5, 7, 11], &[1, 5, 7, 11], &[o('s', &[4, 8], &[4, 8]), o('t', &[4, 8], &[4, 8])]),
];

pub fn known_group(index: u32) -> Option<&'static KnownGroup> {
    KNOWN_GROUPS.iter().find(|g| g.index == index)
}
