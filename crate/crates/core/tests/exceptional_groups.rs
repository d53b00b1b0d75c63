use reflex_core::groups::{build_exceptional, EXCEPTIONAL_NAMES};
use reflex_core::groups::reference::known_group;

#[test]
fn every_exceptional_matches_known_counts() {
    for &k in EXCEPTIONAL_NAMES {
        let g = build_exceptional(k).unwrap_or_else(|e| panic!("G{k}: {e}"));
        let known = known_group(k).unwrap();
        assert_eq!(g.order(), known.order());
        for ko in known.orbits {
            let o = g.orbit(ko.label).unwrap();
            assert_eq!(o.hyperplanes.len(), ko.hyperplane_count(), "G{k} {}", ko.label);
            assert_eq!(o.reflections.len(), ko.reflection_count(), "G{k} {}", ko.label);
            assert_eq!(g.is_well_restricted(ko.label), !ko.extension, "G{k} {}", ko.label);
        }
    }
}
