mod common;

use diperfect_core::constructive::{
    clique_cut_split, compose_partitions, cycle_split, extend_through_universal,
    hamilton_cycle_strong_in_semicomplete, partition_cycle_digraph, partition_in_semicomplete,
    partition_perfect, partition_semi_symmetric, partition_series_parallel, redei_hamilton_path,
    st_hamilton_path,
};
use diperfect_core::forbidden::{
    classify, find_induced_anti_directed_odd_cycle, find_induced_blocking_odd_cycle,
    find_induced_transitive_triangle, is_series_parallel, lonely_arcs, sp_induced_cycle_two_high,
};
use diperfect_core::harness::{
    check_diperfect, check_property, enumerate_digraphs, survey_conjecture, validate_theorem,
    SurveyConfig, TheoremClass,
};
use diperfect_core::oracles::{
    check_maximum_stable, exists_s_path_partition, hamilton_search, is_perfect,
    max_bipartite_matching, max_stable_sets, min_clique_partition, path_partition_number,
    HamiltonConstraint,
};
use diperfect_core::{instances, Digraph, Error, ForbiddenClass, Graph, Mode, Path, PathPartition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn digraph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
    Digraph::from_arcs(n, arcs.iter().copied()).unwrap()
}

fn paths(p: &PathPartition) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = p.paths.iter().map(|p| p.vertices().to_vec()).collect();
    out.sort();
    out
}

fn vertex_sets(p: &PathPartition) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = p
        .paths
        .iter()
        .map(|p| {
            let mut v = p.vertices().to_vec();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

fn random_tournament(n: usize, rng: &mut ChaCha8Rng) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            arcs.push(if rng.gen() { (u, v) } else { (v, u) });
        }
    }
    digraph(n, &arcs)
}

#[test]
fn digraph_construction() {
    let tt = digraph(3, &[(0, 1), (0, 2), (2, 1)]);
    assert_eq!(tt, instances::transitive_triangle());
    let single = digraph(1, &[]);
    assert_eq!((single.order(), single.arc_count()), (1, 0));
    assert_eq!(digraph(2, &[(0, 1), (0, 1)]).arc_count(), 1);
}

#[test]
fn underlying_and_induced() {
    let k3 = Graph::complete(3).unwrap();
    assert_eq!(instances::transitive_triangle().underlying_graph(), k3);
    assert_eq!(
        digraph(2, &[(0, 1), (1, 0)]).underlying_graph().edges(),
        vec![(0, 1)]
    );
    assert_eq!(
        Digraph::empty(4).unwrap().underlying_graph().edge_count(),
        0
    );

    let tt = instances::transitive_triangle();
    let sub = tt.induced(&[0, 1]).unwrap();
    assert_eq!(sub.digraph.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
    let all = tt.induced(&[0, 1, 2]).unwrap();
    assert!(common::isomorphic(&all.digraph, &tt));
    let a9 = instances::anti_directed_nine().induced(&[0, 1, 2]).unwrap();
    assert_eq!(a9.digraph.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 1)]);
}

#[test]
fn strong_components_and_canonical_forms() {
    assert_eq!(
        instances::directed_cycle(3)
            .strong_decomposition()
            .components
            .len(),
        1
    );
    let tt = instances::transitive_triangle();
    let sc = tt.strong_decomposition();
    assert_eq!(sc.components.len(), 3);
    assert!(common::isomorphic(&sc.condensation, &tt));
    assert_eq!(
        instances::exceptional()
            .strong_decomposition()
            .components
            .len(),
        1
    );

    let relabelled = tt.permute(&[2, 0, 1]).unwrap();
    assert_eq!(
        tt.canonical_form().unwrap(),
        relabelled.canonical_form().unwrap()
    );
    let c3 = instances::directed_cycle(3);
    assert!(!common::isomorphic(&tt, &c3));
    assert_ne!(tt.canonical_form().unwrap(), c3.canonical_form().unwrap());
    assert_eq!(
        digraph(1, &[]).canonical_form().unwrap(),
        digraph(1, &[]).canonical_form().unwrap()
    );
}

#[test]
fn stable_sets() {
    let tt = max_stable_sets(&instances::transitive_triangle()).unwrap();
    assert_eq!(
        (tt.alpha, tt.sets),
        (
            1,
            common::max_stable_sets(&instances::transitive_triangle())
        )
    );
    let dc5 = instances::directed_cycle(5);
    let family = max_stable_sets(&dc5).unwrap();
    assert_eq!(family.alpha, common::alpha(&dc5));
    assert_eq!(family.sets, common::max_stable_sets(&dc5));
    assert_eq!(family.sets.len(), 5);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 1..=4 {
        let choices: Vec<u8> = (0..2 * k).map(|_| rng.gen_range(0..3)).collect();
        let d = instances::blocking_cycle(k, &choices);
        let s: Vec<usize> = (1..=k).map(|i| 2 * i).collect();
        assert!(check_maximum_stable(&d, &s).is_ok());
    }
}

#[test]
fn path_partition_numbers() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 1..=7 {
        assert_eq!(
            path_partition_number(&random_tournament(n, &mut rng)).unwrap(),
            1
        );
    }
    assert_eq!(
        path_partition_number(&Digraph::empty(4).unwrap()).unwrap(),
        4
    );
    assert_eq!(
        path_partition_number(&instances::directed_cycle(5)).unwrap(),
        1
    );
}

#[test]
fn s_path_partitions() {
    let tt = instances::transitive_triangle();
    let p = exists_s_path_partition(&tt, &[2], Mode::Alpha)
        .unwrap()
        .unwrap();
    assert_eq!(paths(&p), vec![vec![0, 2, 1]]);
    assert!(exists_s_path_partition(&tt, &[2], Mode::Be)
        .unwrap()
        .is_none());
    assert!(!common::has_s_path_partition(&tt, &[2], Mode::Be));

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let choices: Vec<u8> = (0..8).map(|_| rng.gen_range(0..3)).collect();
        let d = instances::blocking_cycle(4, &choices);
        assert!(exists_s_path_partition(&d, &[2, 4, 6, 8], Mode::Be)
            .unwrap()
            .is_none());
    }
}

#[test]
fn cliques_perfection_matching() {
    assert_eq!(
        min_clique_partition(&Graph::complete(3).unwrap())
            .unwrap()
            .len(),
        1
    );
    assert_eq!(
        min_clique_partition(&Graph::empty(3).unwrap())
            .unwrap()
            .len(),
        3
    );
    let mut c5: Vec<usize> = min_clique_partition(&Graph::cycle(5).unwrap())
        .unwrap()
        .iter()
        .map(Vec::len)
        .collect();
    c5.sort();
    assert_eq!(c5, vec![1, 2, 2]);

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..20 {
        let n = rng.gen_range(2..=8);
        let split = rng.gen_range(1..n);
        let edges: Vec<_> = (0..split)
            .flat_map(|u| (split..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        assert!(
            is_perfect(&Graph::from_edges(n, edges).unwrap())
                .unwrap()
                .perfect
        );
    }
    let check = is_perfect(&Graph::cycle(5).unwrap()).unwrap();
    assert!(!check.perfect);
    let mut witness = check.witness.unwrap();
    witness.sort();
    assert_eq!(witness, vec![0, 1, 2, 3, 4]);
    assert!(is_perfect(&Graph::complete(4).unwrap()).unwrap().perfect);

    let m = max_bipartite_matching(&[0, 1], &[2, 3], |_, _| true).unwrap();
    assert_eq!(m.len(), 2);
    assert_eq!(
        max_bipartite_matching(&[0], &[1], |_, _| false)
            .unwrap()
            .len(),
        0
    );
}

#[test]
fn hamilton_search_examples() {
    let e4 = instances::exceptional();
    assert_eq!(
        hamilton_search(&e4, HamiltonConstraint::Ends(0, 2)).unwrap(),
        None
    );
    assert!(common::permutations(4)
        .iter()
        .filter(|p| (p[0] == 0 && p[3] == 2) || (p[0] == 2 && p[3] == 0))
        .all(|p| !Path::new(p.clone()).is_path_in(&e4)));
    let cycle = hamilton_search(&e4, HamiltonConstraint::Cycle)
        .unwrap()
        .unwrap();
    assert_eq!(cycle.vertices(), [0, 3, 2, 1]);
    assert!(cycle.is_cycle_in(&e4));
    let dc5 = hamilton_search(&instances::directed_cycle(5), HamiltonConstraint::Start(0)).unwrap();
    assert_eq!(dc5.unwrap().vertices(), [0, 1, 2, 3, 4]);
}

#[test]
fn recognition() {
    let e4 = classify(&instances::exceptional()).unwrap();
    assert!(e4.semicomplete && !e4.tournament);
    assert_eq!(e4.lonely_arcs, 4);
    let sym = classify(&instances::symmetric_cycle(5)).unwrap();
    assert!(sym.symmetric && sym.blocking_free);
    assert_eq!(sym.lonely_arcs, 0);
    let tt = classify(&instances::transitive_triangle()).unwrap();
    assert!(tt.semicomplete && !tt.blocking_free);

    assert!(find_induced_transitive_triangle(&instances::transitive_triangle()).is_some());
    assert!(find_induced_transitive_triangle(&instances::directed_cycle(3)).is_none());
    assert!(find_induced_transitive_triangle(&instances::exceptional()).is_none());

    let b7 = find_induced_blocking_odd_cycle(&instances::blocking_seven())
        .unwrap()
        .unwrap();
    assert_eq!(b7.extra, vec![0, 1]);
    assert!(b7.validate(&instances::blocking_seven()));
    assert!(
        find_induced_blocking_odd_cycle(&instances::symmetric_cycle(5))
            .unwrap()
            .is_none()
    );
    assert!(
        find_induced_blocking_odd_cycle(&instances::directed_cycle(5))
            .unwrap()
            .is_none()
    );

    for a9 in [
        instances::anti_directed_nine(),
        instances::anti_directed_nine_alternating(),
    ] {
        assert!(find_induced_anti_directed_odd_cycle(&a9).unwrap().is_some());
    }
    let tt = instances::transitive_triangle();
    assert!(find_induced_anti_directed_odd_cycle(&tt).unwrap().is_none());
    assert!(find_induced_blocking_odd_cycle(&tt).unwrap().is_some());
    assert!(
        find_induced_anti_directed_odd_cycle(&instances::directed_cycle(5))
            .unwrap()
            .is_none()
    );

    assert_eq!(lonely_arcs(&instances::symmetric_cycle(5)), vec![]);
    assert_eq!(lonely_arcs(&instances::transitive_triangle()).len(), 3);
    assert_eq!(lonely_arcs(&instances::blocking_seven()).len(), 5);
}

#[test]
fn series_parallel_recognition() {
    let k4 = Graph::complete(4).unwrap();
    assert!(!is_series_parallel(&k4));
    let tree =
        Graph::from_edges(8, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6), (5, 7)]).unwrap();
    assert!(is_series_parallel(&tree));
    let subdivided =
        Graph::from_edges(5, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(common::has_k4_minor(&subdivided));
    assert!(!is_series_parallel(&subdivided));

    assert_eq!(
        sp_induced_cycle_two_high(&Graph::complete(3).unwrap())
            .unwrap()
            .len(),
        3
    );
    let theta = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)]).unwrap();
    let mut c = sp_induced_cycle_two_high(&theta).unwrap();
    c.sort();
    assert!(c == vec![0, 1, 2] || c == vec![1, 2, 3]);
    let c6 = Graph::cycle(6).unwrap();
    let cycle = sp_induced_cycle_two_high(&c6).unwrap();
    assert_eq!(cycle.len(), 6);
    assert!(cycle.iter().all(|&v| c6.degree(v) == 2));
}

#[test]
fn semicomplete_paths() {
    assert_eq!(
        redei_hamilton_path(&instances::transitive_triangle())
            .unwrap()
            .vertices(),
        [0, 2, 1]
    );
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=7 {
        let t = random_tournament(n, &mut rng);
        let p = redei_hamilton_path(&t).unwrap();
        assert!(p.is_path_in(&t) && p.len() == n);
    }
    assert_eq!(
        redei_hamilton_path(&digraph(1, &[])).unwrap().vertices(),
        [0]
    );

    let e4 = instances::exceptional();
    assert_eq!(
        st_hamilton_path(&e4, 0, 2),
        Err(Error::ExceptionDigraph { s: 0, t: 2 })
    );
    let p = st_hamilton_path(&e4, 1, 0).unwrap();
    assert!(p.is_path_in(&e4) && p.len() == 4);
    let mut ends = [p.vertices()[0], p.vertices()[3]];
    ends.sort();
    assert_eq!(ends, [0, 1]);
    let split = digraph(
        4,
        &[
            (0, 1),
            (1, 0),
            (2, 3),
            (3, 2),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
        ],
    );
    assert_eq!(
        st_hamilton_path(&split, 0, 3).unwrap().vertices(),
        [0, 1, 2, 3]
    );
}

#[test]
fn perfect_builder() {
    let tt = instances::transitive_triangle();
    let built = partition_perfect(&tt, &[2], Mode::Alpha).unwrap();
    assert_eq!(paths(&built.partition), vec![vec![0, 2, 1]]);
    assert!(matches!(
        partition_perfect(&instances::symmetric_cycle(5), &[0, 2], Mode::Be),
        Err(Error::NotPerfect(_))
    ));
    let d = digraph(3, &[(0, 1), (1, 0)]);
    let built = partition_perfect(&d, &[0, 2], Mode::Be).unwrap();
    assert_eq!(vertex_sets(&built.partition), vec![vec![0, 1], vec![2]]);
    assert!(built.partition.validate(&d).is_ok());
}

#[test]
fn universal_extension() {
    let tt = instances::transitive_triangle();
    let p = PathPartition::certified(vec![Path::new(vec![2, 1])], Mode::Alpha, &[2]);
    let out = extend_through_universal(&tt, 0, &[2], &p, Mode::Alpha).unwrap();
    assert_eq!(paths(&out), vec![vec![0, 2, 1]]);

    let d = instances::universal_vertex_counterexample();
    let p = PathPartition::certified(
        vec![Path::new(vec![0, 2]), Path::new(vec![1, 3])],
        Mode::Be,
        &[0, 1],
    );
    assert_eq!(
        extend_through_universal(&d, 4, &[0, 1], &p, Mode::Be),
        Err(Error::NotInClass(ForbiddenClass::BlockingFree))
    );

    let star = digraph(3, &[(0, 2), (2, 0), (1, 2), (2, 1)]);
    let p = PathPartition::certified(
        vec![Path::new(vec![0]), Path::new(vec![1])],
        Mode::Be,
        &[0, 1],
    );
    let out = extend_through_universal(&star, 2, &[0, 1], &p, Mode::Be).unwrap();
    assert!(out.validate(&star).is_ok());
    let sets = vertex_sets(&out);
    assert!(sets == vec![vec![0], vec![1, 2]] || sets == vec![vec![0, 2], vec![1]]);
}

#[test]
fn composition_and_splits() {
    let mut arcs = vec![(0, 1), (0, 2), (2, 1)];
    arcs.extend([(3, 4), (3, 5), (5, 4)]);
    let d = digraph(6, &arcs);
    let left = d.induced(&[0, 1, 2]).unwrap();
    let right = d.induced(&[3, 4, 5]).unwrap();
    let p = PathPartition::certified(vec![Path::new(vec![0, 2, 1])], Mode::Alpha, &[2]);
    let whole = compose_partitions(&d, &[(left, p.clone()), (right, p.clone())]).unwrap();
    assert_eq!(paths(&whole), vec![vec![0, 2, 1], vec![3, 5, 4]]);
    let tt = instances::transitive_triangle();
    let single = compose_partitions(&tt, &[(tt.induced(&[0, 1, 2]).unwrap(), p.clone())]).unwrap();
    assert_eq!(paths(&single), paths(&p));

    let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(
        clique_cut_split(&path, &[1]).unwrap(),
        (vec![0, 1], vec![2])
    );
    let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    let (h1, h2) = clique_cut_split(&two, &[]).unwrap();
    assert_eq!((h1, h2), (vec![0, 1], vec![2, 3]));
    let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
    let (h1, h2) = clique_cut_split(&bowtie, &[2]).unwrap();
    let alpha = |vs: &[usize]| {
        common::alpha(&Digraph::from_arcs(vs.len(), bowtie.induced(vs).unwrap().edges()).unwrap())
    };
    assert_eq!(alpha(&h1) + alpha(&h2), 2);

    let c5_edge = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6)]).unwrap();
    assert_eq!(
        cycle_split(&c5_edge, &[0, 1, 2, 3, 4]).unwrap(),
        (vec![0, 1, 2, 3, 4], vec![5, 6])
    );
    let c4s = Graph::from_edges(
        7,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (4, 5),
            (5, 6),
            (6, 0),
        ],
    )
    .unwrap();
    let (h1, h2) = cycle_split(&c4s, &[0, 1, 2, 3]).unwrap();
    let g_alpha = |vs: &[usize]| {
        let sub = c4s.induced(vs).unwrap();
        common::alpha(&Digraph::from_arcs(vs.len(), sub.edges()).unwrap())
    };
    assert_eq!(g_alpha(&h1) + g_alpha(&h2), 4);
}

#[test]
fn cycle_and_sp_builders() {
    let dc5 = instances::directed_cycle(5);
    let built = partition_cycle_digraph(&dc5, &[0, 2], Mode::Be).unwrap();
    assert_eq!(paths(&built.partition), vec![vec![0, 1], vec![2, 3, 4]]);
    assert!(exists_s_path_partition(&dc5, &[0, 2], Mode::Be)
        .unwrap()
        .is_some());
    let sym = instances::symmetric_cycle(5);
    assert!(partition_cycle_digraph(&sym, &[0, 2], Mode::Be)
        .unwrap()
        .partition
        .validate(&sym)
        .is_ok());

    let a9 = instances::anti_directed_nine();
    let s = max_stable_sets(&a9).unwrap().sets[0].clone();
    assert_eq!(
        partition_cycle_digraph(&a9, &s, Mode::Alpha),
        Err(Error::NotInClass(ForbiddenClass::AntiDirectedFree))
    );
    let mut arcs: Vec<_> = a9.arcs().collect();
    arcs.push((0, 9));
    let pendant = Digraph::from_arcs(10, arcs).unwrap();
    let s = max_stable_sets(&pendant).unwrap().sets[0].clone();
    assert_eq!(
        partition_series_parallel(&pendant, &s, Mode::Alpha),
        Err(Error::NotInClass(ForbiddenClass::AntiDirectedFree))
    );

    let mut arcs: Vec<_> = dc5.arcs().collect();
    arcs.extend([(5, 6), (6, 5)]);
    let d = Digraph::from_arcs(7, arcs).unwrap();
    for s in max_stable_sets(&d).unwrap().sets {
        let built = partition_series_parallel(&d, &s, Mode::Alpha).unwrap();
        assert!(built.partition.validate(&d).is_ok());
    }
}

#[test]
fn in_semicomplete_builders() {
    let c3 = hamilton_cycle_strong_in_semicomplete(&instances::directed_cycle(3)).unwrap();
    assert!(c3.is_cycle_in(&instances::directed_cycle(3)));
    let e4 = hamilton_cycle_strong_in_semicomplete(&instances::exceptional()).unwrap();
    assert_eq!(e4.vertices(), [0, 3, 2, 1]);
    let dc5 = hamilton_cycle_strong_in_semicomplete(&instances::directed_cycle(5)).unwrap();
    assert_eq!(dc5.vertices(), [0, 1, 2, 3, 4]);

    let built =
        partition_in_semicomplete(&instances::directed_cycle(5), &[0, 2], Mode::Alpha).unwrap();
    assert_eq!(paths(&built.partition), vec![vec![0, 1], vec![2, 3, 4]]);
    let star = digraph(4, &[(0, 1), (0, 2), (0, 3)]);
    let built = partition_in_semicomplete(&star, &[1, 2, 3], Mode::Alpha).unwrap();
    assert_eq!(
        vertex_sets(&built.partition),
        vec![vec![0, 1], vec![2], vec![3]]
    );
    assert_eq!(
        partition_in_semicomplete(&instances::transitive_triangle(), &[2], Mode::Be),
        Err(Error::NotInClass(ForbiddenClass::BlockingFree))
    );
}

#[test]
fn semi_symmetric_builder() {
    let sym = instances::symmetric_cycle(5);
    assert!(partition_semi_symmetric(&sym, &[0, 2])
        .unwrap()
        .partition
        .validate(&sym)
        .is_ok());
    let one = sym.without_arcs(&[(1, 0)]);
    assert_eq!(lonely_arcs(&one), vec![(0, 1)]);
    assert!(exists_s_path_partition(&one, &[0, 2], Mode::Be)
        .unwrap()
        .is_some());
    assert!(partition_semi_symmetric(&one, &[0, 2])
        .unwrap()
        .partition
        .validate(&one)
        .is_ok());
    assert!(matches!(
        partition_semi_symmetric(&instances::transitive_triangle(), &[2]),
        Err(Error::SharedEndvertex(_))
    ));
}

#[test]
fn property_checks() {
    let tt = instances::transitive_triangle();
    let be = check_property(&tt, Mode::Be).unwrap();
    assert!(!be.holds);
    assert_eq!(be.failing_stable_set, Some(vec![2]));
    assert!(check_property(&tt, Mode::Alpha).unwrap().holds);
    assert!(
        !check_property(&instances::anti_directed_nine(), Mode::Alpha)
            .unwrap()
            .holds
    );

    assert!(
        check_diperfect(&instances::symmetric_cycle(5), Mode::Be)
            .unwrap()
            .holds
    );
    let mut arcs: Vec<_> = tt.arcs().collect();
    arcs.extend([(2, 3), (3, 2)]);
    let with_tt = Digraph::from_arcs(4, arcs).unwrap();
    let report = check_diperfect(&with_tt, Mode::Be).unwrap();
    assert!(!report.holds);
    assert_eq!(report.failing_stable_set.map(|s| s.len()), Some(1));
    for mode in [Mode::Alpha, Mode::Be] {
        assert!(check_diperfect(&digraph(1, &[]), mode).unwrap().holds);
    }
}

#[test]
fn enumeration_survey_validation() {
    assert_eq!(enumerate_digraphs(2, false, None).unwrap().count(), 4);
    assert_eq!(enumerate_digraphs(2, true, None).unwrap().count(), 3);
    assert_eq!(enumerate_digraphs(1, true, None).unwrap().count(), 1);
    let tournament = |d: &Digraph| d.is_tournament();
    assert_eq!(
        enumerate_digraphs(3, false, Some(&tournament))
            .unwrap()
            .count(),
        8
    );
    assert_eq!(
        enumerate_digraphs(3, true, Some(&tournament))
            .unwrap()
            .count(),
        2
    );

    let report = survey_conjecture(&SurveyConfig::exhaustive(3, Mode::Be)).unwrap();
    assert!(report.counterexamples.is_empty());
    assert!(report.orders[2].out_of_class_not_diperfect >= 1);
    let alpha = survey_conjecture(&SurveyConfig::exhaustive(4, Mode::Alpha)).unwrap();
    assert!(alpha.counterexamples.is_empty());
    for mode in [Mode::Alpha, Mode::Be] {
        assert!(survey_conjecture(&SurveyConfig::exhaustive(1, mode))
            .unwrap()
            .counterexamples
            .is_empty());
    }

    let r = validate_theorem(TheoremClass::InSemicomplete, 5, Mode::Alpha, None, 0).unwrap();
    assert!(r.failures.is_empty() && r.members > 0);
    let r = validate_theorem(TheoremClass::SeriesParallel, 6, Mode::Be, Some(500), 42).unwrap();
    assert!(r.failures.is_empty());
    let r = validate_theorem(TheoremClass::Semicomplete, 4, Mode::Be, None, 0).unwrap();
    assert!(r.failures.is_empty() && r.skipped > 0);
}
