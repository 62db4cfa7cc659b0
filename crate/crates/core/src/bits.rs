//! Fixed-width bitsets and square boolean matrices over the (∨, ∧) semiring.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut set = BitSet::new(len);
        for i in 0..len {
            set.insert(i);
        }
        set
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = BitSet::new(len);
        for i in indices {
            set.insert(i);
        }
        set
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for width {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for width {}", self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if value {
            self.insert(i)
        } else {
            self.remove(i)
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + bit)
            })
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Square boolean matrix stored as one bitset per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    rows: Vec<BitSet>,
}

impl BoolMatrix {
    pub fn zero(n: usize) -> Self {
        BoolMatrix {
            rows: vec![BitSet::new(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BoolMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitSet::is_empty)
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    /// Boolean product: `(self · rhs)[i][j] = ∨_k self[i][k] ∧ rhs[k][j]`.
    pub fn mul(&self, rhs: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        let n = self.dim();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = BitSet::new(n);
                for k in row.iter() {
                    out.union_with(&rhs.rows[k]);
                }
                out
            })
            .collect();
        BoolMatrix { rows }
    }

    /// Transitive closure `A ∨ A² ∨ …` (Warshall): paths of length at least one.
    pub fn transitive_closure(&self) -> BoolMatrix {
        let n = self.dim();
        let mut r = self.clone();
        for k in 0..n {
            let row_k = r.rows[k].clone();
            for i in 0..n {
                if r.rows[i].contains(k) {
                    r.rows[i].union_with(&row_k);
                }
            }
        }
        r
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            if i + 1 < self.dim() {
                f.write_str("/")?;
            }
        }
        Ok(())
    }
}
