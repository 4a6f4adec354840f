use std::collections::HashSet;

use madness_core::geometry::Corner;
use madness_core::{
    ColorPermutation, CornerNumber, CubeId, CubeName, FaceColoring, Rotation, Tableau,
};
use proptest::prelude::*;

fn cube(name: &str) -> &'static madness_core::Cube {
    Tableau::global().by_name(name.parse().unwrap())
}

fn values(corners: &[CornerNumber]) -> Vec<u16> {
    let mut v: Vec<u16> = corners.iter().map(|c| c.value()).collect();
    v.sort();
    v
}

#[test]
fn thirty_cubes_from_720_colorings() {
    let t = Tableau::global();
    let ids: HashSet<CubeId> = FaceColoring::all()
        .map(|c| t.canonicalize(&c).unwrap().id)
        .collect();
    assert_eq!(ids.len(), 30);
    assert_eq!(FaceColoring::all().count(), 720);
}

#[test]
fn corner_sets_are_identity_keys() {
    let t = Tableau::global();
    let masks: HashSet<u64> = t.cubes().iter().map(|c| c.corner_mask).collect();
    assert_eq!(masks.len(), 30);
    for c in t.cubes() {
        assert_eq!(c.corner_mask.count_ones(), 8);
    }
}

#[test]
fn documented_corner_examples() {
    assert_eq!(
        values(&cube("Fb").corners),
        [124, 146, 152, 165, 234, 253, 356, 364]
    );
    assert_eq!(
        values(&cube("Ba").corners),
        [123, 134, 146, 162, 253, 265, 354, 456]
    );
    assert_eq!(
        values(&cube("Ab").corners),
        [126, 132, 143, 164, 235, 256, 345, 465]
    );
}

#[test]
fn corner_sets_are_rotation_invariant() {
    let t = Tableau::global();
    for c in t.cubes() {
        for r in Rotation::all() {
            assert_eq!(t.corner_numbers(&c.coloring.rotated(r)), c.corners);
            assert_eq!(t.canonicalize(&c.coloring.rotated(r)).unwrap().id, c.id);
        }
    }
}

#[test]
fn every_row_and_column_covers_all_forty_corners_once() {
    let t = Tableau::global();
    for line in 0..6 {
        for set in [t.row_set(line), t.column_set(line)] {
            assert_eq!(set.len(), 5);
            let mut seen = Vec::new();
            for id in set.iter() {
                seen.extend(t.cube(id).corners);
            }
            seen.sort();
            assert_eq!(seen, CornerNumber::all().to_vec());
        }
    }
}

#[test]
fn mirror_cubes_reverse_every_corner() {
    let t = Tableau::global();
    for c in t.cubes() {
        let m = t.by_name(c.name.mirror());
        assert_eq!(c.corner_mask & m.corner_mask, 0, "{}", c.name);
        for corner in c.corners {
            assert!(m.has_corner(corner.reversed()));
        }
    }
}

#[test]
fn usable_corner_counts() {
    let t = Tableau::global();
    assert_eq!(cube("Ba").usable_corner_count(cube("Ba")), 8);
    assert_eq!(cube("Bc").usable_corner_count(cube("Ba")), 0);
    assert_eq!(cube("Ae").usable_corner_count(cube("Ba")), 2);
    let shared: Vec<u16> = cube("Ae")
        .corners
        .iter()
        .filter(|c| cube("Ba").has_corner(**c))
        .map(|c| c.value())
        .collect();
    assert_eq!(shared, [162, 354]);

    for target in t.cubes() {
        let mut zero = Vec::new();
        let mut two = 0;
        for c in t.cubes() {
            match c.usable_corner_count(target) {
                0 => zero.push(c.name),
                2 => two += 1,
                8 => assert_eq!(c.id, target.id),
                n => panic!("usable corner count {n}"),
            }
        }
        assert_eq!(two, 20);
        assert_eq!(zero.len(), 9);
        let same_row = zero.iter().filter(|n| n.row() == target.name.row()).count();
        let same_col = zero.iter().filter(|n| n.col() == target.name.col()).count();
        assert_eq!((same_row, same_col), (4, 4));
        assert!(zero.contains(&target.name.mirror()));
    }
}

#[test]
fn recolor_orbit_and_stabilizer_of_ba() {
    let t = Tableau::global();
    let ba: CubeName = "Ba".parse().unwrap();
    let mut orbit = HashSet::new();
    let mut stabilizer = 0;
    for p in t.permutations() {
        let image = t.recolor(p, ba.id());
        orbit.insert(image);
        if image == ba.id() {
            stabilizer += 1;
        }
    }
    assert_eq!(orbit.len(), 30);
    assert_eq!(stabilizer, 24);
    assert_eq!(t.recolor(&ColorPermutation::identity(), ba.id()), ba.id());
}

#[test]
fn corner_numbers_follow_recoloring() {
    let t = Tableau::global();
    for p in t.permutations().iter().step_by(7) {
        for c in t.cubes() {
            let image = t.cube(t.recolor(p, c.id));
            let mut mapped: Vec<CornerNumber> =
                c.corners.iter().map(|k| k.recolored(p.mapping())).collect();
            mapped.sort();
            assert_eq!(mapped, image.corners.to_vec());
        }
    }
}

#[test]
fn positions_read_the_target_corners() {
    let t = Tableau::global();
    for c in t.cubes() {
        let mut at: Vec<CornerNumber> = Corner::all()
            .iter()
            .map(|k| t.corner_number_at(&c.coloring, *k))
            .collect();
        at.sort();
        assert_eq!(at, c.corners.to_vec());
    }
}

fn permutation() -> impl Strategy<Value = ColorPermutation> {
    (0usize..720).prop_map(|i| Tableau::global().permutations()[i])
}

fn cube_id() -> impl Strategy<Value = CubeId> {
    (0usize..30).prop_map(|i| CubeId::new(i).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recolor_is_a_group_action(p in permutation(), q in permutation(), c in cube_id()) {
        let t = Tableau::global();
        let pq = p.compose(&q);
        prop_assert_eq!(t.recolor(&pq, c), t.recolor(&p, t.recolor(&q, c)));
    }

    #[test]
    fn recolor_preserves_usable_counts(p in permutation(), a in cube_id(), b in cube_id()) {
        let t = Tableau::global();
        let (ra, rb) = (t.cube(t.recolor(&p, a)), t.cube(t.recolor(&p, b)));
        prop_assert_eq!(ra.usable_corner_count(rb), t.cube(a).usable_corner_count(t.cube(b)));
    }
}
