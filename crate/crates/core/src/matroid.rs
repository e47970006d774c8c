//! Labelled binary matroids in standard form `[I_r | D]`.
//!
//! A matroid value is immutable. Columns 1..=r are the implicit identity
//! block; the `D` block holds the remaining columns. `labels[p-1]` is the
//! ground-set label of column position `p`, so minors can keep their
//! original labels while the representation is re-pivoted underneath.
//!
//! Internally a column is a `u64` of width `rank` and a ground-set subset is
//! a `u64` of width `size`, both with position 1 in the most significant
//! bit, matching [`crate::gf2::BitVec`].

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};

/// Largest ground set accepted by the exponential-scan operations
/// (connectivity, circuits, separations).
pub const SCAN_LIMIT: usize = 20;

#[derive(Clone)]
pub struct BinaryMatroid {
    rank: usize,
    size: usize,
    d: BitMatrix,
    labels: Vec<u32>,
    name: Option<String>,
    /// Cached full column vectors of `[I_r | D]`, width `rank`.
    cols: Vec<u64>,
}

/// One side of a partition of the ground set together with its connectivity
/// value `lambda = r(A) + r(E-A) - r(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub side_a: BTreeSet<u32>,
    pub lambda: usize,
}

impl PartialEq for BinaryMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.size == other.size
            && self.d == other.d
            && self.labels == other.labels
    }
}
impl Eq for BinaryMatroid {}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BinaryMatroid({} r={} n={})",
            self.name.as_deref().unwrap_or("?"),
            self.rank,
            self.size
        )
    }
}

impl BinaryMatroid {
    /// Builds `[I_r | D]` with default labels `1..=n`.
    pub fn new(rank: usize, size: usize, d: BitMatrix, name: Option<&str>) -> Result<Self> {
        let labels = (1..=size as u32).collect();
        Self::with_labels(rank, size, d, labels, name)
    }

    pub fn with_labels(
        rank: usize,
        size: usize,
        d: BitMatrix,
        labels: Vec<u32>,
        name: Option<&str>,
    ) -> Result<Self> {
        if size > 64 {
            return Err(Error::TooLarge(format!("ground set of {size} exceeds 64")));
        }
        if rank > size {
            return Err(Error::RankDeficient(format!(
                "rank {rank} exceeds ground-set size {size}"
            )));
        }
        if d.nrows() != rank || d.ncols() != size - rank {
            return Err(Error::DimensionMismatch(format!(
                "D is {}x{}, expected {}x{}",
                d.nrows(),
                d.ncols(),
                rank,
                size - rank
            )));
        }
        if labels.len() != size {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} columns",
                labels.len(),
                size
            )));
        }
        let mut seen = labels.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != labels.len() {
            return Err(Error::DimensionMismatch("labels are not distinct".into()));
        }
        let cols = full_columns(rank, size, &d);
        Ok(BinaryMatroid {
            rank,
            size,
            d,
            labels,
            name: name.map(str::to_owned),
            cols,
        })
    }

    /// Builds a matroid from printed `D` rows, e.g. `from_rows(4, &["01111", ...])`.
    pub fn from_rows(rank: usize, rows: &[&str], name: Option<&str>) -> Result<Self> {
        let d = BitMatrix::parse_rows(rows)?;
        if d.nrows() != rank {
            return Err(Error::DimensionMismatch(format!(
                "{} rows for rank {rank}",
                d.nrows()
            )));
        }
        let size = rank + d.ncols();
        Self::new(rank, size, d, name)
    }

    /// Standardizes an arbitrary labelled column list by pivoting on the
    /// lowest-index column available for each new pivot row. Rank deficit is
    /// absorbed: the result has rank equal to the rank of the columns.
    pub(crate) fn from_labeled_columns(
        width: usize,
        columns: &[(u64, u32)],
        name: Option<&str>,
    ) -> Self {
        let k = columns.len();
        debug_assert!(k <= 64);
        // Row matrix of the given columns: row i collects bit (width-1-i) of
        // every column.
        let mut rows = vec![0u64; width];
        for (j, &(val, _)) in columns.iter().enumerate() {
            for i in 0..width {
                if val >> (width - 1 - i) & 1 == 1 {
                    rows[i] |= 1 << (k - 1 - j);
                }
            }
        }
        let rref = BitMatrix::from_raw(k, rows).rref();
        let r = rref.rank;
        let pivot_set: BTreeSet<usize> = rref.pivots.iter().copied().collect();
        let mut new_labels = Vec::with_capacity(k);
        for &c in &rref.pivots {
            new_labels.push(columns[c - 1].1);
        }
        let mut d_cols: Vec<u64> = Vec::new();
        for j in 1..=k {
            if pivot_set.contains(&j) {
                continue;
            }
            new_labels.push(columns[j - 1].1);
            let mut v = 0u64;
            for i in 0..r {
                if rref.reduced.raw_rows()[i] >> (k - j) & 1 == 1 {
                    v |= 1 << (r - 1 - i);
                }
            }
            d_cols.push(v);
        }
        let d = matrix_from_columns(r, &d_cols);
        let size = k;
        let cols = full_columns(r, size, &d);
        BinaryMatroid {
            rank: r,
            size,
            d,
            labels: new_labels,
            name: name.map(str::to_owned),
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn d(&self) -> &BitMatrix {
        &self.d
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label_set(&self) -> BTreeSet<u32> {
        self.labels.iter().copied().collect()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_owned());
        self
    }

    /// Full column vector (width `rank`) at 1-based position `p`.
    pub fn column(&self, p: usize) -> BitVec {
        BitVec::new(self.rank, self.cols[p - 1]).expect("cached column fits rank width")
    }

    pub(crate) fn raw_columns(&self) -> &[u64] {
        &self.cols
    }

    pub(crate) fn position_of(&self, label: u32) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .map(|p| p + 1)
            .ok_or(Error::UnknownLabel(label))
    }

    fn mask_of(&self, set: &BTreeSet<u32>) -> Result<u64> {
        let mut mask = 0u64;
        for &l in set {
            let p = self.position_of(l)?;
            mask |= 1 << (self.size - p);
        }
        Ok(mask)
    }

    fn labels_of_mask(&self, mask: u64) -> BTreeSet<u32> {
        (1..=self.size)
            .filter(|p| mask >> (self.size - p) & 1 == 1)
            .map(|p| self.labels[p - 1])
            .collect()
    }

    fn full_mask(&self) -> u64 {
        if self.size == 0 {
            0
        } else if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        }
    }

    pub(crate) fn rank_of_mask(&self, mask: u64) -> usize {
        let mut pivots = [0u64; 64];
        let mut rank = 0;
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            let p = self.size - b; // 1-based position
            let mut c = self.cols[p - 1];
            while c != 0 {
                let h = 63 - c.leading_zeros() as usize;
                if pivots[h] == 0 {
                    pivots[h] = c;
                    rank += 1;
                    break;
                }
                c ^= pivots[h];
            }
        }
        rank
    }

    /// GF(2) rank of the columns labelled by `set`.
    pub fn subset_rank(&self, set: &BTreeSet<u32>) -> Result<usize> {
        Ok(self.rank_of_mask(self.mask_of(set)?))
    }

    /// Dual matroid `[I_{n-r} | D^T]`; every element keeps its label.
    pub fn dual(&self) -> Self {
        let dt = self.d.transpose();
        let mut labels = Vec::with_capacity(self.size);
        labels.extend_from_slice(&self.labels[self.rank..]);
        labels.extend_from_slice(&self.labels[..self.rank]);
        let corank = self.size - self.rank;
        let cols = full_columns(corank, self.size, &dt);
        BinaryMatroid {
            rank: corank,
            size: self.size,
            d: dt,
            labels,
            name: None,
            cols,
        }
    }

    /// Deletes the elements labelled by `set` and re-standardizes.
    pub fn delete(&self, set: &BTreeSet<u32>) -> Result<Self> {
        for &l in set {
            self.position_of(l)?;
        }
        let kept: Vec<(u64, u32)> = self
            .labels
            .iter()
            .enumerate()
            .filter(|(_, l)| !set.contains(l))
            .map(|(i, &l)| (self.cols[i], l))
            .collect();
        Ok(Self::from_labeled_columns(self.rank, &kept, None))
    }

    /// Contracts the elements labelled by `set`: dual, delete, dual.
    pub fn contract(&self, set: &BTreeSet<u32>) -> Result<Self> {
        Ok(self.dual().delete(set)?.dual())
    }

    /// Restriction to `keep`: deletes everything else.
    pub fn restriction(&self, keep: &BTreeSet<u32>) -> Result<Self> {
        for &l in keep {
            self.position_of(l)?;
        }
        let drop: BTreeSet<u32> = self
            .labels
            .iter()
            .copied()
            .filter(|l| !keep.contains(l))
            .collect();
        self.delete(&drop)
    }

    /// No loops, no parallel pairs.
    pub fn is_simple(&self) -> bool {
        if self.cols.contains(&0) {
            return false;
        }
        let mut sorted = self.cols.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// No coloops, no series pairs: every `D` row is distinct with >= 2 ones.
    pub fn is_cosimple(&self) -> bool {
        let rows = self.d.raw_rows();
        if rows.iter().any(|r| r.count_ones() < 2) {
            return false;
        }
        let mut sorted = rows.to_vec();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Support words (width `size`) of the nonzero null-space vectors of
    /// `[I_r | D]` that are minimal, i.e. the circuits.
    pub(crate) fn circuit_masks(&self) -> Result<Vec<u64>> {
        let k = self.size - self.rank;
        if k > SCAN_LIMIT {
            return Err(Error::TooLarge(format!(
                "corank {k} exceeds the circuit scan limit {SCAN_LIMIT}"
            )));
        }
        // Null-space basis: one vector per D column.
        let basis: Vec<u64> = (0..k)
            .map(|j| {
                let dcol = self.cols[self.rank + j];
                (dcol << k) | (1 << (k - 1 - j))
            })
            .collect();
        Ok(minimal_supports(gray_combinations(&basis)))
    }

    /// Minimal supports of the nonzero row-space vectors: the cocircuits.
    pub(crate) fn cocircuit_masks(&self) -> Result<Vec<u64>> {
        if self.rank > SCAN_LIMIT {
            return Err(Error::TooLarge(format!(
                "rank {} exceeds the cocircuit scan limit {SCAN_LIMIT}",
                self.rank
            )));
        }
        let k = self.size - self.rank;
        let basis: Vec<u64> = (0..self.rank)
            .map(|i| (1 << (self.size - 1 - i)) | self.d.raw_rows()[i])
            .collect();
        let _ = k;
        Ok(minimal_supports(gray_combinations(&basis)))
    }

    pub fn circuits(&self) -> Result<BTreeSet<BTreeSet<u32>>> {
        Ok(self
            .circuit_masks()?
            .iter()
            .map(|&m| self.labels_of_mask(m))
            .collect())
    }

    pub fn cocircuits(&self) -> Result<BTreeSet<BTreeSet<u32>>> {
        Ok(self
            .cocircuit_masks()?
            .iter()
            .map(|&m| self.labels_of_mask(m))
            .collect())
    }

    /// True iff `set` is dependent and every proper subset is independent.
    pub fn is_circuit(&self, set: &BTreeSet<u32>) -> Result<bool> {
        if set.is_empty() {
            return Ok(false);
        }
        let mask = self.mask_of(set)?;
        let k = set.len();
        if self.rank_of_mask(mask) != k - 1 {
            return Ok(false);
        }
        let mut m = mask;
        while m != 0 {
            let bit = m & m.wrapping_neg();
            m &= m - 1;
            if self.rank_of_mask(mask & !bit) != k - 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_cocircuit(&self, set: &BTreeSet<u32>) -> Result<bool> {
        self.dual().is_circuit(set)
    }

    /// Connectivity value `lambda(S) = r(S) + r(E-S) - r(M)`.
    pub fn lambda(&self, set: &BTreeSet<u32>) -> Result<usize> {
        let mask = self.mask_of(set)?;
        Ok(self.lambda_of_mask(mask))
    }

    fn lambda_of_mask(&self, mask: u64) -> usize {
        self.rank_of_mask(mask) + self.rank_of_mask(self.full_mask() & !mask) - self.rank
    }

    /// Tutte 3-connectivity: no k-separation for k in {1, 2}. For four or
    /// more elements this is equivalent to simple + cosimple + no
    /// 2-separation; matroids on at most three elements follow the bare
    /// definition, under which e.g. the 3-point line is 3-connected.
    pub fn is_3connected(&self) -> Result<bool> {
        if self.size > SCAN_LIMIT {
            return Err(Error::TooLarge(format!(
                "{} elements exceeds the connectivity scan limit {SCAN_LIMIT}",
                self.size
            )));
        }
        if self.size <= 1 {
            return Ok(true);
        }
        if self.size >= 4 && (!self.is_simple() || !self.is_cosimple()) {
            return Ok(false);
        }
        let n = self.size;
        let top = 1u64 << (n - 1);
        for sub in 0..top {
            let mask = (sub << 1) | 1;
            if mask == self.full_mask() {
                continue;
            }
            let a = mask.count_ones() as usize;
            let min_side = a.min(n - a);
            let lambda = self.lambda_of_mask(mask);
            if lambda == 0 || (lambda <= 1 && min_side >= 2) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions with `lambda = 2` and both sides of at least
    /// `min_side` elements, one representative per unordered pair. The side
    /// reported contains the smallest label.
    pub fn exact_3separations(&self, min_side: usize) -> Result<Vec<Separation>> {
        if self.size > SCAN_LIMIT {
            return Err(Error::TooLarge(format!(
                "{} elements exceeds the connectivity scan limit {SCAN_LIMIT}",
                self.size
            )));
        }
        let n = self.size;
        let mut out = Vec::new();
        if n < 2 {
            return Ok(out);
        }
        let min_label = *self.labels.iter().min().expect("nonempty");
        let top = 1u64 << (n - 1);
        for sub in 0..top {
            let mask = (sub << 1) | 1;
            if mask == self.full_mask() {
                continue;
            }
            let a = mask.count_ones() as usize;
            if a.min(n - a) < min_side {
                continue;
            }
            if self.lambda_of_mask(mask) != 2 {
                continue;
            }
            let side = self.labels_of_mask(mask);
            let side_a = if side.contains(&min_label) {
                side
            } else {
                self.labels_of_mask(self.full_mask() & !mask)
            };
            out.push(Separation { side_a, lambda: 2 });
        }
        out.sort_by(|x, y| {
            (x.side_a.len(), &x.side_a).cmp(&(y.side_a.len(), &y.side_a))
        });
        Ok(out)
    }

    /// 3-connected with no exact 3-separation whose sides both have >= 4
    /// elements.
    pub fn is_internally_4connected(&self) -> Result<bool> {
        Ok(self.is_3connected()? && self.exact_3separations(4)?.is_empty())
    }

    /// Same representation, fresh default labels 1..=n in column order.
    /// Used when a matroid obtained through duals or minors is promoted to a
    /// named value in its own right.
    pub fn with_default_labels(&self) -> Self {
        let labels = (1..=self.size as u32).collect();
        BinaryMatroid {
            rank: self.rank,
            size: self.size,
            d: self.d.clone(),
            labels,
            name: self.name.clone(),
            cols: self.cols.clone(),
        }
    }

    /// Renames every label through `map`, which must cover the ground set
    /// injectively. Column order is untouched.
    pub fn relabel(&self, map: &std::collections::BTreeMap<u32, u32>) -> Result<Self> {
        let mut new_labels = Vec::with_capacity(self.size);
        for &l in &self.labels {
            match map.get(&l) {
                Some(&img) => new_labels.push(img),
                None => return Err(Error::UnknownLabel(l)),
            }
        }
        let mut seen = new_labels.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != new_labels.len() {
            return Err(Error::DimensionMismatch(
                "relabelling map is not injective on the ground set".into(),
            ));
        }
        Ok(BinaryMatroid {
            rank: self.rank,
            size: self.size,
            d: self.d.clone(),
            labels: new_labels,
            name: None,
            cols: self.cols.clone(),
        })
    }

    /// Representation-independent byte form of the *labelled* matroid:
    /// columns are taken in ascending label order and reduced by pivoting on
    /// the lowest label available. Two values compare equal here iff they are
    /// the same matroid on the same labels.
    pub fn normal_form_bytes(&self) -> Vec<u8> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&i| self.labels[i]);
        let columns: Vec<(u64, u32)> = order
            .iter()
            .map(|&i| (self.cols[i], self.labels[i]))
            .collect();
        let std = Self::from_labeled_columns(self.rank, &columns, None);
        // Emit (label, column) pairs in ascending label order.
        let mut pairs: Vec<(u32, u64)> = std
            .labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, std.cols[i]))
            .collect();
        pairs.sort_unstable();
        let mut bytes = Vec::with_capacity(2 + pairs.len() * 12);
        bytes.push(std.rank as u8);
        bytes.push(std.size as u8);
        for (l, v) in pairs {
            bytes.extend_from_slice(&l.to_be_bytes());
            bytes.extend_from_slice(&v.to_be_bytes());
        }
        bytes
    }
}

fn full_columns(rank: usize, size: usize, d: &BitMatrix) -> Vec<u64> {
    let mut cols = Vec::with_capacity(size);
    for p in 1..=rank {
        cols.push(1u64 << (rank - p));
    }
    for j in 1..=size - rank {
        let mut v = 0u64;
        for i in 0..rank {
            if d.raw_rows()[i] >> (size - rank - j) & 1 == 1 {
                v |= 1 << (rank - 1 - i);
            }
        }
        cols.push(v);
    }
    cols
}

pub(crate) fn matrix_from_columns(rank: usize, cols: &[u64]) -> BitMatrix {
    let k = cols.len();
    let mut rows = vec![0u64; rank];
    for (j, &c) in cols.iter().enumerate() {
        for i in 0..rank {
            if c >> (rank - 1 - i) & 1 == 1 {
                rows[i] |= 1 << (k - 1 - j);
            }
        }
    }
    BitMatrix::from_raw(k, rows)
}

/// All nonzero GF(2) combinations of `basis`, enumerated Gray-code style.
fn gray_combinations(basis: &[u64]) -> Vec<u64> {
    let k = basis.len();
    let mut out = Vec::with_capacity((1usize << k).saturating_sub(1));
    let mut cur = 0u64;
    for g in 1u64..(1 << k) {
        cur ^= basis[g.trailing_zeros() as usize];
        out.push(cur);
    }
    out
}

/// Keeps the supports that contain no other support properly.
fn minimal_supports(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::new();
    'outer: for m in masks {
        for &k in &kept {
            if k & m == k {
                continue 'outer;
            }
        }
        kept.push(m);
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p9() -> BinaryMatroid {
        BinaryMatroid::from_rows(4, &["01111", "10111", "11010", "11110"], Some("P9")).unwrap()
    }

    fn set(labels: &[u32]) -> BTreeSet<u32> {
        labels.iter().copied().collect()
    }

    /// Naive circuit finder used as an independent oracle: checks every
    /// subset for "dependent with all proper subsets independent" via ranks.
    fn circuits_by_subsets(m: &BinaryMatroid) -> BTreeSet<BTreeSet<u32>> {
        let labels: Vec<u32> = m.labels().to_vec();
        let n = labels.len();
        let mut out = BTreeSet::new();
        for mask in 1u64..1 << n {
            let s: BTreeSet<u32> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| labels[i])
                .collect();
            if m.subset_rank(&s).unwrap() != s.len() - 1 {
                continue;
            }
            let all_proper_independent = s.iter().all(|&e| {
                let mut t = s.clone();
                t.remove(&e);
                m.subset_rank(&t).unwrap() == t.len()
            });
            if all_proper_independent {
                out.insert(s);
            }
        }
        out
    }

    /// Naive 3-connectivity: scan every unordered partition with full rank
    /// recomputation, no fixed-element trick.
    fn three_connected_oracle(m: &BinaryMatroid) -> bool {
        let labels: Vec<u32> = m.labels().to_vec();
        let n = labels.len();
        if n <= 1 {
            return true;
        }
        for mask in 1u64..(1 << n) - 1 {
            let a: BTreeSet<u32> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| labels[i])
                .collect();
            let lambda = m.lambda(&a).unwrap();
            let min_side = a.len().min(n - a.len());
            if lambda == 0 || (lambda <= 1 && min_side >= 2) {
                return false;
            }
        }
        true
    }

    #[test]
    fn make_p9_shape() {
        let m = p9();
        assert_eq!((m.rank(), m.size()), (4, 9));
        assert_eq!(m.labels(), (1..=9).collect::<Vec<u32>>().as_slice());
    }

    #[test]
    fn make_free_matroid() {
        let m = BinaryMatroid::new(3, 3, BitMatrix::parse_rows(&[]).unwrap(), None);
        // Zero-column D needs an explicit shape.
        assert!(m.is_err());
        let d = BitMatrix::new(0, vec![BitVec::zero(0); 3]).unwrap();
        let m = BinaryMatroid::new(3, 3, d, None).unwrap();
        assert_eq!(m.subset_rank(&set(&[1, 2, 3])).unwrap(), 3);
    }

    #[test]
    fn make_accepts_parallel_to_identity() {
        let m = BinaryMatroid::from_rows(2, &["10", "01"], None).unwrap();
        assert_eq!((m.rank(), m.size()), (2, 4));
        assert!(!m.is_simple());
    }

    #[test]
    fn make_rejects_bad_shape() {
        let d = BitMatrix::parse_rows(&["011", "110"]).unwrap();
        assert!(matches!(
            BinaryMatroid::new(3, 6, d, None),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn subset_rank_examples() {
        let m = p9();
        assert_eq!(m.subset_rank(&set(&[1, 2, 5, 6])).unwrap(), 3);
        assert_eq!(m.subset_rank(&set(&[])).unwrap(), 0);
        assert_eq!(m.subset_rank(&m.label_set()).unwrap(), m.rank());
        assert!(matches!(
            m.subset_rank(&set(&[42])),
            Err(Error::UnknownLabel(42))
        ));
    }

    #[test]
    fn dual_is_involution_and_swaps_rank() {
        let m = p9();
        let dd = m.dual().dual();
        assert_eq!(m.normal_form_bytes(), dd.normal_form_bytes());
        assert_eq!(m.dual().rank(), 5);
        // Every element keeps its label.
        assert_eq!(m.dual().label_set(), m.label_set());
    }

    #[test]
    fn delete_empty_is_identity() {
        let m = p9();
        assert_eq!(m.delete(&set(&[])).unwrap().normal_form_bytes(), {
            let mut b = m.normal_form_bytes();
            b.truncate(b.len());
            b
        });
    }

    #[test]
    fn delete_identity_column_repivots() {
        let m = p9();
        let d = m.delete(&set(&[1])).unwrap();
        assert_eq!((d.rank(), d.size()), (4, 8));
        assert!(!d.label_set().contains(&1));
    }

    #[test]
    fn contract_then_delete_labels_survive() {
        let m = p9();
        let c = m.contract(&set(&[5])).unwrap();
        assert_eq!((c.rank(), c.size()), (3, 8));
        assert_eq!(
            c.label_set(),
            set(&[1, 2, 3, 4, 6, 7, 8, 9])
        );
    }

    #[test]
    fn circuits_of_triangle() {
        let m = BinaryMatroid::from_rows(2, &["1", "1"], None).unwrap();
        let cs = m.circuits().unwrap();
        assert_eq!(cs.len(), 1);
        assert!(cs.contains(&set(&[1, 2, 3])));
    }

    #[test]
    fn circuit_cocircuit_in_p9() {
        let m = p9();
        let a = set(&[1, 2, 5, 6]);
        assert!(m.circuits().unwrap().contains(&a));
        assert!(m.cocircuits().unwrap().contains(&a));
        assert!(m.is_circuit(&a).unwrap());
        assert!(m.is_cocircuit(&a).unwrap());
        assert!(!m.is_circuit(&set(&[])).unwrap());
    }

    #[test]
    fn circuits_match_subset_oracle() {
        // Fano plane: all seven nonzero columns of width 3.
        let f7 =
            BinaryMatroid::from_rows(3, &["0111", "1011", "1101"], Some("F7")).unwrap();
        let cs = f7.circuits().unwrap();
        assert_eq!(cs, circuits_by_subsets(&f7));
        assert_eq!(cs.len(), 14);
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 7);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 7);

        let small = BinaryMatroid::from_rows(3, &["110", "011", "111"], None).unwrap();
        assert_eq!(small.circuits().unwrap(), circuits_by_subsets(&small));
    }

    #[test]
    fn loops_are_one_element_circuits() {
        let m = BinaryMatroid::from_rows(2, &["10", "00"], None).unwrap();
        // Column 4 of D is zero: a loop.
        let cs = m.circuits().unwrap();
        assert!(cs.contains(&set(&[4])));
    }

    #[test]
    fn lambda_examples() {
        let m = p9();
        assert_eq!(m.lambda(&set(&[1, 2, 5, 6])).unwrap(), 2);
        assert_eq!(m.lambda(&m.label_set()).unwrap(), 0);
        let s = set(&[2, 3, 9]);
        let complement: BTreeSet<u32> =
            m.label_set().difference(&s).copied().collect();
        assert_eq!(m.lambda(&s).unwrap(), m.lambda(&complement).unwrap());
    }

    #[test]
    fn three_connectivity_basics() {
        assert!(p9().is_3connected().unwrap());
        let parallel = BinaryMatroid::from_rows(2, &["10", "01"], None).unwrap();
        assert!(!parallel.is_3connected().unwrap());
        assert_eq!(
            parallel.is_3connected().unwrap(),
            three_connected_oracle(&parallel)
        );
        // Small-matroid convention: the 3-point line is 3-connected, the
        // 3-element free matroid is not.
        let line = BinaryMatroid::from_rows(2, &["1", "1"], None).unwrap();
        assert!(line.is_3connected().unwrap());
        assert!(three_connected_oracle(&line));
        let d = BitMatrix::new(0, vec![BitVec::zero(0); 3]).unwrap();
        let free3 = BinaryMatroid::new(3, 3, d, None).unwrap();
        assert!(!free3.is_3connected().unwrap());
    }

    #[test]
    fn three_connectivity_matches_oracle_on_p9_minors() {
        let m = p9();
        for l in [1u32, 5, 9] {
            let del = m.delete(&set(&[l])).unwrap();
            assert_eq!(del.is_3connected().unwrap(), three_connected_oracle(&del));
            let con = m.contract(&set(&[l])).unwrap();
            assert_eq!(con.is_3connected().unwrap(), three_connected_oracle(&con));
        }
    }

    #[test]
    fn p9_has_the_printed_exact_3separation() {
        let seps = p9().exact_3separations(4).unwrap();
        assert!(seps.iter().any(|s| s.side_a == set(&[1, 2, 5, 6])));
    }

    #[test]
    fn f7_has_no_nonminimal_3separation() {
        let f7 = BinaryMatroid::from_rows(3, &["0111", "1011", "1101"], None).unwrap();
        assert!(f7.exact_3separations(4).unwrap().is_empty());
        assert!(f7.is_internally_4connected().unwrap());
    }

    #[test]
    fn normal_form_is_representation_invariant() {
        let m = p9();
        // Same labelled matroid reached through different pivot histories.
        let once = m.delete(&set(&[9])).unwrap();
        let twice = m
            .dual()
            .dual()
            .delete(&set(&[9]))
            .unwrap();
        assert_eq!(once.normal_form_bytes(), twice.normal_form_bytes());
    }

    #[test]
    fn scan_limit_is_enforced() {
        let d = BitMatrix::new(21, vec![BitVec::zero(21); 1]).unwrap();
        let m = BinaryMatroid::new(1, 22, d, None).unwrap();
        assert!(matches!(m.circuits(), Err(Error::TooLarge(_))));
        assert!(matches!(m.is_3connected(), Err(Error::TooLarge(_))));
    }
}
