use madness_core::arrangement::{
    enumerate_arrangements, interior_matching_count, orient_cube, CornerFrame,
};
use madness_core::graph::{EdgeKind, Slot, TargetGraph};
use madness_core::oracle::{
    prime_scan, solution_number_permanent, solution_number_prime_scan, CornerCountVector,
    IncidenceMatrix,
};
use madness_core::solver::solve_checked;
use madness_core::universal::random_subset;
use madness_core::{solution_number, Collection, CornerNumber, CubeId, CubeName, CubeSet, Tableau};

const ALLOWED: [u32; 8] = [0, 2, 4, 6, 8, 10, 12, 16];

fn id(name: &str) -> CubeId {
    name.parse::<CubeName>().unwrap().id()
}

fn collection(list: &str) -> Collection {
    Collection::parse_list(list).unwrap()
}

fn random_collection(seed: u64, i: u64) -> Collection {
    Collection::new(random_subset(seed, i, 8)).unwrap()
}

/// Random 8-collection from the target's usable cubes, so most are nonzero.
fn random_usable_collection(target: CubeId, i: u64) -> Collection {
    let usable = madness_core::set::ALL_CUBES.difference(TargetGraph::for_target(target).unusable);
    let members: Vec<CubeId> = usable.iter().collect();
    let picks = random_subset(0xabc, i, 21);
    let chosen: CubeSet = picks
        .iter()
        .filter(|p| p.index() < 21)
        .take(8)
        .map(|p| members[p.index()])
        .collect();
    Collection::new(chosen).unwrap()
}

fn mirror_line_collection(target: CubeId) -> Collection {
    let m = target.name().mirror();
    let set: CubeSet = CubeId::all()
        .filter(|c| c.name() != m && (c.name().row() == m.row() || c.name().col() == m.col()))
        .collect();
    Collection::new(set).unwrap()
}

#[test]
fn ba_graph_structure() {
    let g = TargetGraph::for_target(id("Ba"));
    assert_eq!(
        g.unusable,
        CubeSet::parse_list("Bc,Bd,Be,Bf,Ca,Da,Ea,Fa,Ab").unwrap()
    );
    assert_eq!(
        g.diagonal,
        CubeSet::parse_list("Ac,Ad,Ae,Af,Cb,Db,Eb,Fb").unwrap()
    );
    assert_eq!(
        g.standard,
        CubeSet::parse_list("Cd,Ce,Cf,Dc,De,Df,Ec,Ed,Ef,Fc,Fd,Fe").unwrap()
    );
    let Slot::Edge(u, v) = g.slots[id("Ae").index()] else {
        panic!("Ae is an edge for Ba")
    };
    let mut ends = [
        g.vertices[u as usize].value(),
        g.vertices[v as usize].value(),
    ];
    ends.sort();
    assert_eq!(ends, [162, 354]);
}

#[test]
fn every_target_graph_has_twelve_standard_and_eight_diagonal_edges() {
    let t = Tableau::global();
    for g in TargetGraph::all() {
        assert_eq!(g.edges().count(), 20);
        assert_eq!(g.standard.len(), 12);
        assert_eq!(g.diagonal.len(), 8);
        assert_eq!(g.unusable.len(), 9);
        // diagonal edges join opposite corners of the target, standard edges adjacent ones
        let target = t.cube(g.target);
        let position_of = |v: u8| {
            madness_core::Corner::all()
                .into_iter()
                .find(|k| t.corner_number_at(&target.coloring, *k) == g.vertices[v as usize])
                .unwrap()
                .position()
        };
        for (cube, u, v) in g.edges() {
            let (a, b) = (position_of(u), position_of(v));
            let differing = (0..3).filter(|&i| a[i] != b[i]).count();
            match g.kinds[cube.index()].unwrap() {
                EdgeKind::Diagonal => assert_eq!(differing, 3),
                EdgeKind::Standard => assert_eq!(differing, 1),
            }
        }
    }
}

#[test]
fn target_graphs_are_bipartite() {
    for g in TargetGraph::all() {
        let mut side = [None::<bool>; 8];
        side[0] = Some(false);
        let mut changed = true;
        while changed {
            changed = false;
            for (_, u, v) in g.edges() {
                let (u, v) = (u as usize, v as usize);
                match (side[u], side[v]) {
                    (Some(a), None) => {
                        side[v] = Some(!a);
                        changed = true;
                    }
                    (None, Some(b)) => {
                        side[u] = Some(!b);
                        changed = true;
                    }
                    (Some(a), Some(b)) => assert_ne!(a, b, "odd cycle for {}", g.target.name()),
                    (None, None) => {}
                }
            }
        }
        assert!(side.iter().all(Option::is_some));
    }
}

#[test]
fn classify_examples() {
    let g = TargetGraph::for_target(id("Ba"));
    let sub = g.classify(collection("Ac,Ad,Ae,Af,Cb,Db,Eb,Fb"));
    assert_eq!(sub.components.len(), 4);
    assert!(sub
        .components
        .iter()
        .all(|c| c.vertices == 2 && c.edges == 2 && !c.is_tree()));

    let sub = g.classify(collection("Ba,Ac,Ad,Ae,Af,Cb,Db,Eb"));
    assert!(sub.target_in_collection);
    assert_eq!(sub.edge_list.len(), 7);

    let sub = g.classify(collection("Bc,Ad,Ae,Af,Cb,Db,Eb,Fb"));
    assert!(sub.unusable_count >= 1);
    assert_eq!(sub.components.iter().map(|c| c.vertices).sum::<u8>(), 8);
}

#[test]
fn documented_solution_numbers() {
    let w = collection("Ac,Ad,Ae,Af,Cb,Db,Eb,Fb");
    assert_eq!(solution_number(w, id("Ba")), 16);
    assert_eq!(solution_number_permanent(w, id("Ba")), 16);
    assert_eq!(solution_number_prime_scan(w, id("Ba")), 16);

    let five = collection("Ac,Af,Ba,Bf,Ea,Ef,Fa,Fc");
    assert_eq!(solution_number(five, id("Cd")), 4);
    assert_eq!(solution_number(five, id("Db")), 2);
    assert_eq!(solution_number(five, id("Ba")), 0);
}

#[test]
fn ba_ba_zero_oracle() {
    // frozen from the permanent oracle
    let five = collection("Ac,Af,Ba,Bf,Ea,Ef,Fa,Fc");
    assert_eq!(solution_number_permanent(five, id("Ba")), 0);
}

#[test]
fn target_replacing_a_diagonal_keeps_sixteen() {
    let diag = CubeSet::parse_list("Ac,Ad,Ae,Af,Cb,Db,Eb,Fb").unwrap();
    for c in diag.iter() {
        let w = Collection::new(diag.without(c).with(id("Ba"))).unwrap();
        assert_eq!(solve_checked(w, id("Ba")).unwrap().formula, 16);
    }
}

#[test]
fn prime_scan_zero_when_a_corner_is_uncovered() {
    // Bc shares no corner with Ba, so some corner count drops to zero for
    // this collection of cubes from Ba's own row and column
    let w = collection("Bc,Bd,Be,Bf,Ca,Da,Ea,Fa");
    let v = CornerCountVector::new(&w.ids(), id("Ba"));
    assert!(v.0.iter().any(|c| c.multiplicity == 0));
    assert_eq!(prime_scan(&v), 0);
}

#[test]
fn incidence_rows_match_corner_counts() {
    for i in 0..50 {
        let w = random_collection(11, i);
        let target = CubeId::new(i as usize % 30).unwrap();
        let m = IncidenceMatrix::new(w, target);
        let v = CornerCountVector::new(&w.ids(), target);
        for (row, cc) in m.rows.iter().zip(&v.0) {
            assert_eq!(row.count_ones() as usize, cc.multiplicity);
        }
    }
}

#[test]
fn three_methods_agree_on_random_pairs() {
    for i in 0..4000 {
        let target = id("Ba");
        let w = if i % 2 == 0 {
            random_collection(1, i)
        } else {
            random_usable_collection(target, i)
        };
        let r = solve_checked(w, target).unwrap();
        assert!(ALLOWED.contains(&r.formula));
    }
    for i in 0..6000 {
        let target = CubeId::new((i * 7 % 30) as usize).unwrap();
        let w = random_usable_collection(target, i + 5000);
        solve_checked(w, target).unwrap();
    }
}

#[test]
fn collections_with_target_agree() {
    for target in CubeId::all() {
        for i in 0..40 {
            let w = random_usable_collection(target, i);
            let with_target = w.set().without(w.ids()[0]).with(target);
            let w = if w.contains(target) {
                w
            } else {
                Collection::new(with_target).unwrap()
            };
            solve_checked(w, target).unwrap();
        }
    }
}

#[test]
fn nonzero_without_target_means_unicyclic_components() {
    let target = id("Ba");
    for i in 0..3000 {
        let w = random_usable_collection(target, i);
        if w.contains(target) {
            continue;
        }
        let g = TargetGraph::for_target(target);
        if g.solution_number(w) > 0 {
            let sub = g.classify(w);
            assert!(sub.components.iter().all(|c| c.edges == c.vertices));
        }
    }
}

#[test]
fn recoloring_preserves_solution_numbers() {
    let t = Tableau::global();
    for i in 0..500u64 {
        let p = (i * 131 % 720) as usize;
        let target = CubeId::new((i * 17 % 30) as usize).unwrap();
        let w = if i % 2 == 0 {
            random_collection(3, i)
        } else {
            random_usable_collection(target, i)
        };
        let image = Collection::new(t.recolor_set(p, w.set())).unwrap();
        assert_eq!(
            solution_number(image, t.recolor_by_index(p, target)),
            solution_number(w, target)
        );
    }
}

#[test]
fn arrangement_counts_match_solution_numbers() {
    for i in 0..1000u64 {
        let target = CubeId::new((i * 11 % 30) as usize).unwrap();
        let w = random_usable_collection(target, i + 100);
        let arrangements = enumerate_arrangements(w, target);
        assert_eq!(arrangements.len() as u32, solution_number(w, target));
        for a in &arrangements {
            a.validate(w).unwrap();
        }
        // deterministic lexicographic order
        let keys: Vec<Vec<CubeId>> = arrangements
            .iter()
            .map(|a| a.placements.iter().map(|p| p.cube).collect())
            .collect();
        assert!(keys.windows(2).all(|k| k[0] < k[1]));
    }
}

#[test]
fn arrangements_examples() {
    let w = collection("Ac,Ad,Ae,Af,Cb,Db,Eb,Fb");
    assert_eq!(enumerate_arrangements(w, id("Ba")).len(), 16);
    assert!(enumerate_arrangements(collection("Bc,Ad,Ae,Af,Cb,Db,Eb,Fb"), id("Ba")).is_empty());
    assert_eq!(
        enumerate_arrangements(collection("Ac,Af,Ba,Bf,Ea,Ef,Fa,Fc"), id("De")).len(),
        2
    );
}

#[test]
fn orient_ae_at_corner_162_of_ba() {
    let t = Tableau::global();
    let ba = t.by_name("Ba".parse().unwrap());
    let ae = t.by_name("Ae".parse().unwrap());
    let c162: CornerNumber = "162".parse().unwrap();
    let position = madness_core::Corner::all()
        .into_iter()
        .find(|k| t.corner_number_at(&ba.coloring, *k) == c162)
        .unwrap();
    let frame = CornerFrame::from_target(ba, position);
    let oriented = orient_cube(ae, &frame).unwrap();
    assert_eq!(t.canonicalize(&oriented).unwrap().id, ae.id);
    for (f, c) in frame.faces.iter().zip(frame.colors) {
        assert_eq!(oriented.color(*f).value(), c);
    }
}

#[test]
fn interior_matching() {
    assert_eq!(
        interior_matching_count(collection("Ac,Ad,Ae,Af,Cb,Db,Eb,Fb"), id("Ba")),
        2
    );
    assert_eq!(
        interior_matching_count(collection("Bc,Ad,Ae,Af,Cb,Db,Eb,Fb"), id("Ba")),
        0
    );
    for target in CubeId::all() {
        let w = mirror_line_collection(target);
        assert_eq!(solution_number(w, target), 16, "{}", target.name());
        assert_eq!(interior_matching_count(w, target), 2, "{}", target.name());
    }
    for i in 0..300u64 {
        let target = CubeId::new((i % 30) as usize).unwrap();
        let w = random_usable_collection(target, i);
        assert!(interior_matching_count(w, target) as u32 <= solution_number(w, target));
    }
}

/// Placement by rotation alone (no corner numbers) agrees with the corner-number incidence.
#[test]
fn geometric_incidence_matches_corner_numbers() {
    let t = Tableau::global();
    for target in t.cubes() {
        for position in madness_core::Corner::all() {
            let faces = position.faces();
            let wanted = t.corner_number_at(&target.coloring, position);
            for cube in t.cubes() {
                let fits = madness_core::Rotation::all().iter().any(|r| {
                    let c = cube.coloring.rotated(r);
                    faces
                        .iter()
                        .all(|f| c.color(*f) == target.coloring.color(*f))
                });
                assert_eq!(
                    fits,
                    cube.has_corner(wanted),
                    "{} at {:?} of {}",
                    cube.name,
                    position,
                    target.name
                );
            }
        }
    }
}
