use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Disjoint left/right pairs, sorted by left vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn partner_of_left(&self, l: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 == l).map(|p| p.1)
    }
}

/// Maximum matching by augmenting paths, trying partners in the given order.
pub fn max_bipartite_matching<F>(left: &[usize], right: &[usize], adjacent: F) -> Result<Matching>
where
    F: Fn(usize, usize) -> bool,
{
    if let Some(v) = left.iter().find(|v| right.contains(v)) {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v} lies on both sides of the bipartition"
        )));
    }
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&l| {
            (0..right.len())
                .filter(|&j| adjacent(l, right[j]))
                .collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; right.len()];
    for i in 0..left.len() {
        let mut seen = vec![false; right.len()];
        augment(i, &adj, &mut owner, &mut seen);
    }
    let mut pairs: Vec<(usize, usize)> = owner
        .iter()
        .enumerate()
        .filter_map(|(j, o)| o.map(|i| (left[i], right[j])))
        .collect();
    pairs.sort_unstable();
    Ok(Matching { pairs })
}

fn augment(i: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if owner[j].is_none_or(|k| augment(k, adj, owner, seen)) {
            owner[j] = Some(i);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let m = max_bipartite_matching(&[0, 1], &[2, 3], |_, _| true).unwrap();
        assert_eq!(m.len(), 2);
        let m = max_bipartite_matching(&[0], &[1, 2], |_, _| false).unwrap();
        assert!(m.is_empty());
        assert!(max_bipartite_matching(&[0], &[0], |_, _| true).is_err());
    }

    #[test]
    fn augmenting_path_reassigns() {
        // 0 takes 2 first; 1 only likes 2, forcing 0 over to 3.
        let m = max_bipartite_matching(&[0, 1], &[2, 3], |l, r| l == 0 || r == 2).unwrap();
        assert_eq!(m.pairs, vec![(0, 3), (1, 2)]);
    }
}
