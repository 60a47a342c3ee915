use diperfect_core::constructive::{run_builder, Builder};
use diperfect_core::harness::{enumerate_digraphs, random_digraph};
use diperfect_core::oracles::{exists_s_path_partition, max_stable_sets};
use diperfect_core::{Digraph, Mode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CLASS_BUILDERS: [Builder; 6] = [
    Builder::Perfect,
    Builder::Semicomplete,
    Builder::SeriesParallel,
    Builder::Cycle,
    Builder::InSemicomplete,
    Builder::SemiSymmetric,
];

fn cross_check(d: &Digraph) {
    for s in max_stable_sets(d).unwrap().sets {
        for mode in [Mode::Alpha, Mode::Be] {
            let oracle = exists_s_path_partition(d, &s, mode).unwrap();
            for b in CLASS_BUILDERS {
                let applies = b.applies(d, mode).unwrap();
                match run_builder(b, d, &s, mode) {
                    Ok(Some(built)) => {
                        assert!(applies, "{b} succeeded outside its class on {d:?}");
                        built.partition.validate(d).unwrap();
                        assert!(
                            oracle.is_some(),
                            "{b} succeeded where the oracle found nothing: {d:?} {s:?}"
                        );
                        let mut replayed = built.trace.replay().unwrap();
                        let mut paths = built.partition.paths.clone();
                        replayed.sort();
                        paths.sort();
                        assert_eq!(replayed, paths);
                    }
                    Ok(None) => panic!("class builder returned no answer"),
                    Err(e) => assert!(!applies, "{b} failed on {d:?} with S = {s:?} ({mode}): {e}"),
                }
            }
        }
    }
}

#[test]
fn builders_agree_with_oracle_up_to_four_vertices() {
    for n in 1..=4 {
        for d in enumerate_digraphs(n, true, None).unwrap() {
            cross_check(&d);
        }
    }
}

#[test]
fn builders_agree_with_oracle_on_random_digraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..400 {
        let n = 5 + i % 4;
        let p = [0.3, 0.5, 0.8][i % 3];
        let d = random_digraph(n, p, &mut rng).unwrap();
        cross_check(&d);
    }
}
