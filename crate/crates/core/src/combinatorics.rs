//! Small exact counting helpers.

use alloc::vec::Vec;

/// Largest edge cardinality accepted anywhere in the crate.
pub const MAX_ARITY: usize = 20;

const FACTORIALS: [u64; MAX_ARITY + 1] = {
    let mut table = [1u64; MAX_ARITY + 1];
    let mut i = 1;
    while i <= MAX_ARITY {
        table[i] = table[i - 1] * i as u64;
        i += 1;
    }
    table
};

/// `r!` for `r <= MAX_ARITY`.
pub fn factorial(r: usize) -> Option<u64> {
    FACTORIALS.get(r).copied()
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All `k`-element subsets of `items`, in lexicographic order of positions.
pub fn k_subsets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance the rightmost index that still has room
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < items.len() - k + pos {
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_table() {
        assert_eq!(factorial(0), Some(1));
        assert_eq!(factorial(3), Some(6));
        assert_eq!(factorial(20), Some(2_432_902_008_176_640_000));
        assert_eq!(factorial(21), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn subsets_enumerate_in_order() {
        let s = k_subsets(&[1, 2, 3, 4], 2);
        assert_eq!(s.len(), 6);
        assert_eq!(s[0], [1, 2]);
        assert_eq!(s[5], [3, 4]);
        assert_eq!(k_subsets(&[1, 2], 0), [Vec::<i32>::new()]);
        assert!(k_subsets(&[1, 2], 3).is_empty());
        assert_eq!(k_subsets(&[7], 1), [[7]]);
    }
}
