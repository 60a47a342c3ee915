use crate::bits::{self, Mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forbidden::ForbiddenClass;
use crate::oracles::{check_maximum_stable, is_perfect, min_clique_partition};
use crate::path::{Mode, Path};

use super::semicomplete::semicomplete_path_through;
use super::trace::{identity, Built, Lemma, Tracer};

/// One path per clique of a minimum clique partition of the underlying graph,
/// each clique holding exactly one vertex of `s`.
///
/// The underlying graph must be perfect; BE mode also needs `d` free of
/// induced blocking odd cycles, so that every clique is free of transitive triangles.
pub fn partition_perfect(d: &Digraph, s: &[usize], mode: Mode) -> Result<Built> {
    check_maximum_stable(d, s)?;
    let check = is_perfect(&d.underlying_graph())?;
    if !check.perfect {
        return Err(Error::NotPerfect(check.witness.unwrap_or_default()));
    }
    if mode == Mode::Be {
        ForbiddenClass::BlockingFree.require(d)?;
    }
    let mut tr = Tracer::new();
    let paths = perfect_paths(d, bits::from_slice(s), mode, &identity(d.order()), &mut tr)?;
    tr.finish(d, paths, mode, s)
}

pub(crate) fn perfect_paths(
    d: &Digraph,
    s: Mask,
    mode: Mode,
    labels: &[usize],
    tr: &mut Tracer,
) -> Result<Vec<Path>> {
    let cliques = min_clique_partition(&d.underlying_graph())?;
    if cliques.len() != s.count_ones() as usize {
        return Err(Error::internal(format!(
            "clique cover number {} differs from the stability number {}",
            cliques.len(),
            s.count_ones()
        )));
    }
    let mut paths = Vec::with_capacity(cliques.len());
    for clique in &cliques {
        let x = match clique
            .iter()
            .filter(|&&v| bits::contains(s, v))
            .collect::<Vec<_>>()[..]
        {
            [&x] => x,
            _ => {
                return Err(Error::internal(format!(
                    "clique {clique:?} does not meet the stable set once"
                )))
            }
        };
        let sub = d.induced(clique)?;
        let local = sub.local(x).expect("clique vertex");
        let p = semicomplete_path_through(&sub.digraph, local, mode)?;
        paths.push(Path(p.into_iter().map(|v| sub.host(v)).collect()));
    }
    tr.paths(Lemma::PerfectCliques, labels, &paths);
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn transitive_triangle_alpha() {
        let built =
            partition_perfect(&instances::transitive_triangle(), &[1], Mode::Alpha).unwrap();
        assert_eq!(built.partition.paths, vec![Path(vec![0, 2, 1])]);
        assert_eq!(built.trace.replay().unwrap(), built.partition.paths);
    }

    #[test]
    fn transitive_triangle_be_refused() {
        let r = partition_perfect(&instances::transitive_triangle(), &[1], Mode::Be);
        assert_eq!(r, Err(Error::NotInClass(ForbiddenClass::BlockingFree)));
    }

    #[test]
    fn exceptional_be_breaks_the_cycle() {
        let e4 = instances::exceptional();
        for x in 0..4 {
            let built = partition_perfect(&e4, &[x], Mode::Be).unwrap();
            assert_eq!(built.partition.paths.len(), 1);
            assert_eq!(built.partition.paths[0].first(), Some(x));
        }
    }

    #[test]
    fn odd_cycle_is_not_perfect() {
        let r = partition_perfect(&instances::directed_cycle(5), &[0, 2], Mode::Alpha);
        assert!(matches!(r, Err(Error::NotPerfect(_))));
    }
}
