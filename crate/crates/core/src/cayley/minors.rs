//! All k-by-k minors of the symbolic Gram matrix, by cofactor expansion
//! with memoized sub-minors keyed on (row set, column set) bitmasks.

use std::collections::HashMap;

use crate::presentation::{CElem, CentralDescriptor};

/// Sub-minors are shared across many k-minor requests, so they are cached
/// up to this matrix size; past it the table streams each cofactor
/// expansion without caching to bound memory.
const MEMO_LIMIT: usize = 16;

pub struct MinorTable<'a> {
    gram: &'a [Vec<CElem>],
    desc: &'a CentralDescriptor,
    memo: HashMap<(u32, u32), CElem>,
    memoize: bool,
}

impl<'a> MinorTable<'a> {
    pub fn new(gram: &'a [Vec<CElem>], desc: &'a CentralDescriptor) -> Self {
        assert!(gram.len() < 31, "minor enumeration supports sizes below 31");
        MinorTable {
            gram,
            desc,
            memo: HashMap::new(),
            memoize: gram.len() <= MEMO_LIMIT,
        }
    }

    pub fn size(&self) -> usize {
        self.gram.len()
    }

    /// Determinant of the submatrix picked by the row and column bitmasks,
    /// which must have equal popcount.
    pub fn minor(&mut self, rows: u32, cols: u32) -> CElem {
        debug_assert_eq!(rows.count_ones(), cols.count_ones());
        if rows == 0 {
            return CElem::one(self.desc);
        }
        if let Some(m) = self.memo.get(&(rows, cols)) {
            return m.clone();
        }
        let last_row = 31 - rows.leading_zeros();
        let rest_rows = rows & !(1 << last_row);
        let col_list: Vec<u32> = (0..32).filter(|c| cols & (1 << c) != 0).collect();
        let k = col_list.len();
        let mut acc = CElem::zero();
        for (t, &c) in col_list.iter().enumerate() {
            let entry = &self.gram[last_row as usize][c as usize];
            if entry.is_zero() {
                continue;
            }
            let sub = self.minor(rest_rows, cols & !(1 << c));
            if sub.is_zero() {
                continue;
            }
            let term = entry.mul(&sub, self.desc);
            // the expanded row is the last of the submatrix: sign (-1)^(k-1+t)
            acc = if (k - 1 + t) % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        if self.memoize {
            self.memo.insert((rows, cols), acc.clone());
        }
        acc
    }
}

/// All bitmasks with `k` bits set among the low `n`, in increasing numeric
/// order; the deterministic enumeration order for ideal generators.
pub fn subsets(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        return vec![0];
    }
    let mut mask: u32 = (1 << k) - 1;
    let limit: u32 = 1 << n;
    while mask < limit {
        out.push(mask);
        // Gosper's hack
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Scalar;

    #[test]
    fn subsets_counts() {
        assert_eq!(subsets(9, 4).len(), 126);
        assert_eq!(subsets(4, 4), vec![0b1111]);
        assert_eq!(subsets(3, 1), vec![1, 2, 4]);
    }

    #[test]
    fn minors_of_integer_matrix() {
        let d = CentralDescriptor::default();
        let c = |i: i64| CElem::from_scalar(&d, Scalar::from_int(i));
        let gram = vec![
            vec![c(1), c(2), c(3)],
            vec![c(4), c(5), c(6)],
            vec![c(7), c(8), c(10)],
        ];
        let mut t = MinorTable::new(&gram, &d);
        assert_eq!(t.minor(0b111, 0b111), c(-3));
        assert_eq!(t.minor(0b011, 0b011), c(-3)); // det [[1,2],[4,5]]
        assert_eq!(t.minor(0b001, 0b100), c(3));
    }
}
