//! Sets of tensor-component indices. Components are numbered `1..=n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type IndexSet = BTreeSet<usize>;

/// Builds an [`IndexSet`] from a slice.
pub fn set(items: &[usize]) -> IndexSet {
    items.iter().copied().collect()
}

pub fn full(n: usize) -> IndexSet {
    (1..=n).collect()
}

pub fn complement(s: &IndexSet, n: usize) -> IndexSet {
    (1..=n).filter(|i| !s.contains(i)).collect()
}

pub fn without(s: &IndexSet, items: &[usize]) -> IndexSet {
    s.iter().copied().filter(|i| !items.contains(i)).collect()
}

pub fn with(s: &IndexSet, item: usize) -> IndexSet {
    let mut out = s.clone();
    out.insert(item);
    out
}

pub fn check_component(index: usize, n: usize) -> Result<()> {
    if index == 0 || index > n {
        Err(Error::IndexOutOfRange { index, n })
    } else {
        Ok(())
    }
}

pub fn check_set(s: &IndexSet, n: usize) -> Result<()> {
    s.iter().try_for_each(|&i| check_component(i, n))
}

/// All `k`-element subsets of `{1..=n}` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<IndexSet> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..=n {
            if n + 1 - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All nonempty subsets of `items`, ordered by size then lexicographically.
pub fn nonempty_subsets(items: &IndexSet) -> Vec<IndexSet> {
    let v: Vec<usize> = items.iter().copied().collect();
    let mut out: Vec<IndexSet> = (1u32..(1 << v.len()))
        .map(|mask| {
            v.iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &i)| i)
                .collect()
        })
        .collect();
    out.sort_by(|a: &IndexSet, b: &IndexSet| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_counted_by_binomials() {
        for n in 0..7 {
            for k in 0..=n {
                assert_eq!(subsets_of_size(n, k).len() as u64, binomial(n, k));
            }
        }
        assert_eq!(subsets_of_size(3, 2), vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
    }

    #[test]
    fn nonempty_subsets_of_three() {
        let s = nonempty_subsets(&set(&[2, 5, 7]));
        assert_eq!(s.len(), 7);
        assert_eq!(s[0], set(&[2]));
        assert_eq!(s[6], set(&[2, 5, 7]));
    }

    #[test]
    fn component_checks() {
        assert!(check_component(0, 3).is_err());
        assert!(check_component(4, 3).is_err());
        assert!(check_set(&set(&[1, 3]), 3).is_ok());
    }
}
