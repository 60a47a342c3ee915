use std::collections::HashSet;

use crate::bits;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest order enumerated exhaustively.
pub const ENUMERATION_CAP: usize = 6;

/// Number of labeled digraphs on `n` vertices: four states per vertex pair.
pub fn labeled_count(n: usize) -> u64 {
    4u64.pow((n * n.saturating_sub(1) / 2) as u32)
}

pub(crate) fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// The labeled digraph whose pair states are the base-4 digits of `code`,
/// least significant first, over pairs in lexicographic order: 0 none,
/// 1 `i -> j`, 2 `j -> i`, 3 digon.
pub(crate) fn decode(n: usize, pairs: &[(usize, usize)], code: u64) -> Digraph {
    let mut out = vec![0u64; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let state = (code >> (2 * k)) & 3;
        if state & 1 != 0 {
            out[i] |= bits::bit(j);
        }
        if state & 2 != 0 {
            out[j] |= bits::bit(i);
        }
    }
    Digraph::from_out_masks(out)
}

/// Deterministic stream of all labeled digraphs on `n` vertices, optionally
/// filtered and reduced to the first representative of each isomorphism class.
pub struct DigraphStream<'a> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
    seen: Option<HashSet<Vec<u8>>>,
    filter: Option<&'a (dyn Fn(&Digraph) -> bool + Sync)>,
}

impl Iterator for DigraphStream<'_> {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        while self.next < self.total {
            let d = decode(self.n, &self.pairs, self.next);
            self.next += 1;
            if self.filter.is_some_and(|f| !f(&d)) {
                continue;
            }
            if let Some(seen) = &mut self.seen {
                let key = d
                    .canonical_form()
                    .expect("order within the canonical-form cap");
                if !seen.insert(key) {
                    continue;
                }
            }
            return Some(d);
        }
        None
    }
}

pub fn enumerate_digraphs<'a>(
    n: usize,
    up_to_iso: bool,
    filter: Option<&'a (dyn Fn(&Digraph) -> bool + Sync)>,
) -> Result<DigraphStream<'a>> {
    Error::check_cap("enumerate_digraphs", n, ENUMERATION_CAP)?;
    Ok(DigraphStream {
        n,
        pairs: pairs(n),
        next: 0,
        total: labeled_count(n),
        seen: up_to_iso.then(HashSet::new),
        filter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_digraphs(1, false, None).unwrap().count(), 1);
        assert_eq!(enumerate_digraphs(2, false, None).unwrap().count(), 4);
        assert_eq!(enumerate_digraphs(2, true, None).unwrap().count(), 3);
    }

    #[test]
    fn tournaments_on_three_vertices() {
        let f = |d: &Digraph| d.is_tournament();
        assert_eq!(enumerate_digraphs(3, false, Some(&f)).unwrap().count(), 8);
        assert_eq!(enumerate_digraphs(3, true, Some(&f)).unwrap().count(), 2);
    }

    #[test]
    fn isomorphism_classes_on_four_vertices() {
        assert_eq!(enumerate_digraphs(3, true, None).unwrap().count(), 16);
        assert_eq!(enumerate_digraphs(4, true, None).unwrap().count(), 218);
    }
}
