//! Vertex sets as `u64` masks. Every digraph in this crate has at most 64 vertices.

pub(crate) type Mask = u64;

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1u64 << v
}

#[inline]
pub(crate) fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) fn contains(mask: Mask, v: usize) -> bool {
    mask >> v & 1 == 1
}

#[inline]
pub(crate) fn lowest(mask: Mask) -> Option<usize> {
    (mask != 0).then(|| mask.trailing_zeros() as usize)
}

/// Ascending iterator over the members of a mask.
#[derive(Clone, Copy)]
pub(crate) struct Members(Mask);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub(crate) fn members(mask: Mask) -> Members {
    Members(mask)
}

pub(crate) fn to_vec(mask: Mask) -> Vec<usize> {
    members(mask).collect()
}

pub(crate) fn from_slice(vs: &[usize]) -> Mask {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

/// Iterates over all non-empty submasks of `mask` in decreasing numeric order.
pub(crate) fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut sub = mask;
    let mut done = mask == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
            return None;
        }
        sub = (sub - 1) & mask;
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_ascending() {
        assert_eq!(to_vec(0b101101), vec![0, 2, 3, 5]);
        assert_eq!(to_vec(0), Vec::<usize>::new());
    }

    #[test]
    fn submask_count() {
        assert_eq!(submasks(0b1011).count(), 7);
        assert_eq!(submasks(0).count(), 0);
    }
}
