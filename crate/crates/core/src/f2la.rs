//! Dense linear algebra over F₂ with bit-packed rows.
//!
//! Everything downstream (field towers, resolutions, restriction and cup
//! product matrices) bottoms out in the two types here. Rows are packed
//! into `u64` words, low bit first, and the pad bits past `len` in the last
//! word are always zero so that word-level equality and popcounts are exact.

use std::fmt;

use rand::Rng;
use thiserror::Error;

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A vector over F₂.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        let mut v = BitVector { len, words: (0..words_for(len)).map(|_| rng.gen()).collect() };
        v.clear_padding();
        v
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the number of set bits.
    pub fn parity(&self) -> bool {
        self.words.iter().fold(0u32, |acc, w| acc ^ (w.count_ones() & 1)) == 1
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + t)
                }
            })
        })
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// XOR `other` into `self`, skipping the leading words known to be zero in `other`.
    #[inline]
    fn xor_from_word(&mut self, other: &BitVector, start: usize) {
        for (a, b) in self.words[start..].iter_mut().zip(&other.words[start..]) {
            *a ^= *b;
        }
    }

    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ ((a & b).count_ones() & 1))
            == 1
    }

    /// Copy of bits `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        debug_assert!(start + len <= self.len);
        let mut out = BitVector::zeros(len);
        if start.is_multiple_of(WORD) {
            let w0 = start / WORD;
            let n = out.words.len();
            out.words.copy_from_slice(&self.words[w0..w0 + n]);
            out.clear_padding();
        } else {
            for i in self.iter_ones_in(start, start + len) {
                out.set(i - start, true);
            }
        }
        out
    }

    fn iter_ones_in(&self, start: usize, end: usize) -> impl Iterator<Item = usize> + '_ {
        self.iter_ones().skip_while(move |&i| i < start).take_while(move |&i| i < end)
    }

    /// Parity of bits `[start, start + len)`.
    pub fn range_parity(&self, start: usize, len: usize) -> bool {
        let end = start + len;
        let mut acc = 0u32;
        let mut i = start;
        while i < end {
            let wi = i / WORD;
            let off = i % WORD;
            let take = (WORD - off).min(end - i);
            let mask = if take == WORD { u64::MAX } else { ((1u64 << take) - 1) << off };
            acc ^= (self.words[wi] & mask).count_ones() & 1;
            i += take;
        }
        acc == 1
    }

    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector[")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// A dense `rows × cols` matrix over F₂, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { rows, cols, data: vec![BitVector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from its rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self, LinAlgError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinAlgError::DimensionMismatch { expected: cols, got: bad.len() });
        }
        Ok(BitMatrix { rows: rows.len(), cols, data: rows })
    }

    pub fn from_bools(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows.iter().map(|r| BitVector::from_bools(r)).collect();
        BitMatrix { rows: rows.len(), cols, data }
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self {
        BitMatrix { rows, cols, data: (0..rows).map(|_| BitVector::random(cols, rng)).collect() }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value)
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    pub fn column(&self, c: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.iter_ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `self · v` for a column vector `v` of length `cols`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let mut out = BitVector::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.dot(v) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix, LinAlgError> {
        if other.rows != self.cols {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let acc = &mut out.data[r];
            for k in row.iter_ones() {
                acc.xor_assign(&other.data[k]);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the (strictly increasing) pivot columns.
    /// Pivoting is deterministic: the first row with a one in the column.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..m.cols {
            if next == m.rows {
                break;
            }
            let Some(p) = (next..m.rows).find(|&r| m.data[r].get(c)) else {
                continue;
            };
            m.data.swap(next, p);
            let pivot_row = m.data[next].clone();
            let start = c / WORD;
            for r in 0..m.rows {
                if r != next && m.data[r].get(c) {
                    m.data[r].xor_from_word(&pivot_row, start);
                }
            }
            pivots.push(c);
            next += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for row in &self.data {
            ech.insert(row.clone());
        }
        ech.rank()
    }

    /// Basis of `{v : self · v = 0}`, one vector per row, read off the free
    /// columns of the reduced form.
    pub fn kernel_basis(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVector::unit(self.cols, free);
            for (i, &p) in pivots.iter().enumerate() {
                if r.get(i, free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        BitMatrix { rows: basis.len(), cols: self.cols, data: basis }
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero, so the answer is the rref-first solution.
    pub fn solve(&self, b: &BitVector) -> Result<Option<BitVector>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let augmented = BitMatrix {
            rows: self.rows,
            cols: self.cols + 1,
            data: self
                .data
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut r = row.concat(&BitVector::zeros(1));
                    r.set(self.cols, b.get(i));
                    r
                })
                .collect(),
        };
        let (r, pivots) = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if r.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(row.get(c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Incrementally built echelon basis of a subspace of F₂^width.
///
/// Each stored row has its pivot at its lowest set bit and is zero at the
/// pivots of every row stored before it, so reducing against the rows in
/// insertion order is exact. Optional tags record, for every stored row, the
/// combination of inserted vectors it came from; this is what turns the
/// structure into a kernel finder and a preimage solver.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    tag_width: usize,
    rows: Vec<BitVector>,
    tags: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self::with_tags(width, 0)
    }

    pub fn with_tags(width: usize, tag_width: usize) -> Self {
        Echelon { width, tag_width, rows: Vec::new(), tags: Vec::new(), pivots: Vec::new() }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place; the result is zero iff `v` was in the span.
    pub fn reduce(&self, v: &mut BitVector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_from_word(row, p / WORD);
            }
        }
    }

    /// Reduces `v` and accumulates the tags of the rows used into `tag`.
    pub fn reduce_tagged(&self, v: &mut BitVector, tag: &mut BitVector) {
        for ((row, t), &p) in self.rows.iter().zip(&self.tags).zip(&self.pivots) {
            if v.get(p) {
                v.xor_from_word(row, p / WORD);
                tag.xor_assign(t);
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Inserts `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, mut v: BitVector) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        match v.first_one() {
            Some(p) => {
                self.rows.push(v);
                self.tags.push(BitVector::zeros(self.tag_width));
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }

    /// Inserts `v` with its tag. When `v` is already in the span the
    /// accumulated tag (a dependency among inserted vectors) is returned.
    pub fn insert_tagged(&mut self, mut v: BitVector, mut tag: BitVector) -> Option<BitVector> {
        debug_assert_eq!(v.len(), self.width);
        debug_assert_eq!(tag.len(), self.tag_width);
        self.reduce_tagged(&mut v, &mut tag);
        match v.first_one() {
            Some(p) => {
                self.rows.push(v);
                self.tags.push(tag);
                self.pivots.push(p);
                None
            }
            None => Some(tag),
        }
    }

    /// Finds a combination of inserted vectors equal to `target`, expressed in
    /// tag coordinates, or `None` if `target` is outside the span.
    pub fn preimage(&self, target: &BitVector) -> Option<BitVector> {
        let mut v = target.clone();
        let mut tag = BitVector::zeros(self.tag_width);
        self.reduce_tagged(&mut v, &mut tag);
        v.is_zero().then_some(tag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Straightforward elimination on unpacked rows; the reference for the packed code.
    fn naive_rank(rows: &[Vec<bool>]) -> usize {
        let mut m: Vec<Vec<bool>> = rows.to_vec();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][c]) else { continue };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && m[r][c] {
                    let pivot = m[rank].clone();
                    for (x, b) in m[r].iter_mut().zip(pivot) {
                        *x ^= b;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn to_bools(m: &BitMatrix) -> Vec<Vec<bool>> {
        m.row_vectors().iter().map(BitVector::to_bools).collect()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = BitMatrix::identity(70);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, (0..70).collect::<Vec<_>>());
        let z = BitMatrix::zeros(5, 9);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn random_64_rank_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(64);
        let m = BitMatrix::random(64, 64, &mut rng);
        assert_eq!(m.rank(), naive_rank(&to_bools(&m)));
        assert_eq!(m.rref().1.len(), m.rank());
    }

    #[test]
    fn packed_agrees_with_naive_on_many_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..1000 {
            let rows = rng.gen_range(0..=128);
            let cols = rng.gen_range(0..=128);
            let m = BitMatrix::random(rows, cols, &mut rng);
            let naive = naive_rank(&to_bools(&m));
            assert_eq!(m.rank(), naive);
            assert_eq!(m.rref().1.len(), naive);
        }
    }

    #[test]
    fn kernel_edge_cases() {
        assert_eq!(BitMatrix::identity(10).kernel_basis().rows(), 0);
        let z = BitMatrix::zeros(3, 7);
        let k = z.kernel_basis();
        assert_eq!(k.rows(), 7);
        assert_eq!(k.rank(), 7);
    }

    #[test]
    fn kernel_random_40x60() {
        let mut rng = ChaCha8Rng::seed_from_u64(4060);
        let m = BitMatrix::random(40, 60, &mut rng);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 60 - naive_rank(&to_bools(&m)));
        assert_eq!(k.rank(), k.rows());
        for v in k.row_vectors() {
            assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let b = BitVector::random(12, &mut rng);
        assert_eq!(BitMatrix::identity(12).solve(&b).unwrap(), Some(b.clone()));

        let m = BitMatrix::random(8, 5, &mut rng);
        assert_eq!(m.solve(&BitVector::zeros(8)).unwrap(), Some(BitVector::zeros(5)));

        let mut m = BitMatrix::identity(3);
        m.set(2, 2, false);
        assert_eq!(m.solve(&BitVector::unit(3, 2)).unwrap(), None);

        assert!(matches!(
            m.solve(&BitVector::zeros(4)),
            Err(LinAlgError::DimensionMismatch { expected: 3, got: 4 })
        ));
    }

    #[test]
    fn echelon_preimage_and_dependencies() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let m = BitMatrix::random(30, 50, &mut rng);
        // Rows of the echelon are the images of unit vectors, i.e. columns of m.
        let mut ech = Echelon::with_tags(30, 50);
        let mut kernel = Vec::new();
        for c in 0..50 {
            if let Some(dep) = ech.insert_tagged(m.column(c), BitVector::unit(50, c)) {
                kernel.push(dep);
            }
        }
        assert_eq!(kernel.len(), 50 - m.rank());
        for k in &kernel {
            assert!(m.mul_vec(k).unwrap().is_zero());
        }
        let x = BitVector::random(50, &mut rng);
        let b = m.mul_vec(&x).unwrap();
        let y = ech.preimage(&b).unwrap();
        assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn range_parity_and_slice() {
        let v = BitVector::from_indices(200, [1, 3, 64, 65, 130, 199]);
        assert!(!v.range_parity(0, 64));
        assert!(!v.range_parity(64, 64));
        assert!(v.range_parity(128, 71));
        assert!(!v.range_parity(128, 72));
        assert!(v.range_parity(60, 5));
        assert_eq!(v.slice(64, 64), BitVector::from_indices(64, [0, 1]));
        assert_eq!(v.slice(3, 62), BitVector::from_indices(62, [0, 61]));
    }

    fn matrix_strategy() -> impl Strategy<Value = BitMatrix> {
        (0usize..40, 0usize..40, any::<u64>()).prop_map(|(r, c, seed)| {
            BitMatrix::random(r, c, &mut ChaCha8Rng::seed_from_u64(seed))
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in matrix_strategy()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_plus_nullity(m in matrix_strategy()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().rows(), m.cols());
        }

        #[test]
        fn rref_idempotent(m in matrix_strategy()) {
            let (r, p) = m.rref();
            let (r2, p2) = r.rref();
            prop_assert_eq!(r, r2);
            prop_assert_eq!(p.clone(), p2);
            prop_assert!(p.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn solve_returns_true_solutions(m in matrix_strategy(), seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = BitVector::random(m.cols(), &mut rng);
            let b = m.mul_vec(&x).unwrap();
            let y = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
        }
    }
}
