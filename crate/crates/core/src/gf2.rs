//! Word-level GF(2) linear algebra.
//!
//! A [`BitVec`] is a fixed-width bit string of at most 64 positions, so a
//! whole row fits in one machine word. Position 1 is the leftmost character
//! of the printed string and maps to the most significant bit of the window;
//! comparing the stored words therefore agrees with comparing printed
//! strings, and sorting vectors sorts them as unsigned integers.

use std::fmt;

use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Fixed-width bit string over GF(2).
///
/// `width` may be 0 for the empty vector (the `D` part of a free matroid
/// has no columns); every other use stays within 1..=64.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitVec {
    width: usize,
    bits: u64,
}

impl BitVec {
    pub fn new(width: usize, bits: u64) -> Result<Self> {
        if width > 64 {
            return Err(Error::DimensionMismatch(format!(
                "bit width {width} exceeds 64"
            )));
        }
        if width < 64 && bits >> width != 0 {
            return Err(Error::DimensionMismatch(format!(
                "value 0b{bits:b} does not fit in width {width}"
            )));
        }
        Ok(BitVec { width, bits })
    }

    pub fn zero(width: usize) -> Self {
        BitVec { width, bits: 0 }
    }

    /// Parses a printed bit string such as "01001".
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > 64 {
            return Err(Error::DimensionMismatch(format!(
                "bit string `{s}` must have 1..=64 characters"
            )));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                _ => {
                    return Err(Error::DimensionMismatch(format!(
                        "bit string `{s}` contains `{c}`"
                    )))
                }
            }
        }
        Ok(BitVec {
            width: s.len(),
            bits,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Entry at 1-based position `pos` (position 1 = leftmost as printed).
    pub fn get(&self, pos: usize) -> bool {
        assert!(pos >= 1 && pos <= self.width, "position {pos} out of range");
        (self.bits >> (self.width - pos)) & 1 == 1
    }

    /// Copy with the entry at `pos` set to `value`.
    pub fn with(&self, pos: usize, value: bool) -> Self {
        assert!(pos >= 1 && pos <= self.width, "position {pos} out of range");
        let mask = 1u64 << (self.width - pos);
        BitVec {
            width: self.width,
            bits: if value {
                self.bits | mask
            } else {
                self.bits & !mask
            },
        }
    }

    pub fn xor(&self, other: &BitVec) -> Self {
        assert_eq!(self.width, other.width, "width mismatch in xor");
        BitVec {
            width: self.width,
            bits: self.bits ^ other.bits,
        }
    }

    /// Number of ones.
    pub fn ones(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// 1-based positions carrying a one, ascending.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.width).filter(|&p| self.get(p))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 1..=self.width {
            f.write_str(if self.get(p) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl Serialize for BitVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Dense GF(2) matrix stored as one word per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<u64>,
}

/// Outcome of [`BitMatrix::rref`].
pub struct Rref {
    pub reduced: BitMatrix,
    /// 1-based indices of the pivot columns, ascending.
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl BitMatrix {
    pub fn new(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if ncols > 64 {
            return Err(Error::DimensionMismatch(format!(
                "column count {ncols} exceeds 64"
            )));
        }
        for r in &rows {
            if r.width() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row width {} differs from column count {ncols}",
                    r.width()
                )));
            }
        }
        Ok(BitMatrix {
            ncols,
            rows: rows.iter().map(|r| r.bits()).collect(),
        })
    }

    /// Builds a matrix from printed row strings.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<BitVec> = rows.iter().map(|s| BitVec::parse(s)).collect::<Result<_>>()?;
        let ncols = parsed.first().map_or(0, |r| r.width());
        BitMatrix::new(ncols, parsed)
    }

    /// Builds the matrix whose j-th column is `cols[j]`; every column must
    /// have width `nrows`.
    pub fn from_columns(nrows: usize, cols: &[BitVec]) -> Result<Self> {
        let k = cols.len();
        if k > 64 {
            return Err(Error::DimensionMismatch(format!(
                "column count {k} exceeds 64"
            )));
        }
        let mut rows = vec![0u64; nrows];
        for (j, c) in cols.iter().enumerate() {
            if c.width() != nrows {
                return Err(Error::DimensionMismatch(format!(
                    "column width {} differs from row count {nrows}",
                    c.width()
                )));
            }
            for i in 0..nrows {
                if c.get(i + 1) {
                    rows[i] |= 1 << (k - 1 - j);
                }
            }
        }
        Ok(BitMatrix { ncols: k, rows })
    }

    pub(crate) fn from_raw(ncols: usize, rows: Vec<u64>) -> Self {
        debug_assert!(ncols <= 64);
        BitMatrix { ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec {
            width: self.ncols,
            bits: self.rows[i],
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = BitVec> + '_ {
        self.rows.iter().map(|&bits| BitVec {
            width: self.ncols,
            bits,
        })
    }

    pub(crate) fn raw_rows(&self) -> &[u64] {
        &self.rows
    }

    /// Entry at 1-based (row, column).
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.row(row - 1).get(col)
    }

    /// Reduced row-echelon form over GF(2); row space is preserved and zero
    /// rows sink to the bottom.
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 1..=self.ncols {
            let mask = 1u64 << (self.ncols - col);
            if let Some(hit) = (next..rows.len()).find(|&i| rows[i] & mask != 0) {
                rows.swap(next, hit);
                let pivot_row = rows[next];
                for (i, row) in rows.iter_mut().enumerate() {
                    if i != next && *row & mask != 0 {
                        *row ^= pivot_row;
                    }
                }
                pivots.push(col);
                next += 1;
            }
        }
        Rref {
            reduced: BitMatrix {
                ncols: self.ncols,
                rows,
            },
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// True iff `v` is a GF(2) combination of the rows.
    pub fn in_row_space(&self, v: &BitVec) -> bool {
        assert_eq!(v.width(), self.ncols, "vector width must match ncols");
        let rref = self.rref();
        let mut bits = v.bits();
        for (i, &col) in rref.pivots.iter().enumerate() {
            let mask = 1u64 << (self.ncols - col);
            if bits & mask != 0 {
                bits ^= rref.reduced.rows[i];
            }
        }
        bits == 0
    }

    pub fn transpose(&self) -> BitMatrix {
        let nrows = self.rows.len();
        let mut out = vec![0u64; self.ncols];
        for (i, &row) in self.rows.iter().enumerate() {
            for c in 0..self.ncols {
                if row >> (self.ncols - 1 - c) & 1 == 1 {
                    out[c] |= 1 << (nrows - 1 - i);
                }
            }
        }
        BitMatrix {
            ncols: nrows,
            rows: out,
        }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix[{}x{}]", self.nrows(), self.ncols)?;
        for r in self.rows() {
            write!(f, " {r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BitMatrix {
        BitMatrix::parse_rows(rows).unwrap()
    }

    /// Brute-force membership oracle: tries all 2^nrows row combinations.
    fn row_space_oracle(mat: &BitMatrix, v: &BitVec) -> bool {
        let n = mat.nrows();
        assert!(n <= 20);
        (0u64..1 << n).any(|pick| {
            let mut acc = 0u64;
            for i in 0..n {
                if pick >> i & 1 == 1 {
                    acc ^= mat.raw_rows()[i];
                }
            }
            acc == v.bits()
        })
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["01001", "0000011", "1", "0", "1110"] {
            assert_eq!(BitVec::parse(s).unwrap().to_string(), s);
        }
        assert!(BitVec::parse("01x").is_err());
        assert!(BitVec::parse("").is_err());
    }

    #[test]
    fn position_one_is_leftmost() {
        let v = BitVec::parse("1000").unwrap();
        assert!(v.get(1));
        assert!(!v.get(4));
        assert_eq!(v.bits(), 0b1000);
        // Integer order equals printed lexicographic order.
        assert!(BitVec::parse("0011").unwrap() < BitVec::parse("0101").unwrap());
        assert!(BitVec::parse("1110").unwrap() > BitVec::parse("1001").unwrap());
    }

    #[test]
    fn rref_two_independent_rows() {
        let r = m(&["110", "011"]).rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![1, 2]);
    }

    #[test]
    fn rref_duplicate_and_zero_rows() {
        let r = m(&["111", "111", "000"]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![1]);
        assert_eq!(r.reduced.row(0).to_string(), "111");
        assert_eq!(r.reduced.row(1).to_string(), "000");
    }

    #[test]
    fn rref_identity_block_forces_full_rank() {
        // 5x10 standard form: identity followed by arbitrary columns.
        let rows = [
            "1000001111",
            "0100010111",
            "0010011010",
            "0001011110",
            "0000110100",
        ];
        assert_eq!(m(&rows).rank(), 5);
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(&["1011", "0111", "1100", "0001"]);
        let r = a.rref();
        let again = r.reduced.rref();
        assert_eq!(r.reduced, again.reduced);
        assert_eq!(r.pivots, again.pivots);
    }

    #[test]
    fn row_space_membership() {
        let a = m(&["110", "011"]);
        assert!(a.in_row_space(&BitVec::parse("101").unwrap()));
        assert!(!a.in_row_space(&BitVec::parse("100").unwrap()));
        assert!(a.in_row_space(&BitVec::zero(3)));
    }

    #[test]
    fn row_space_matches_oracle_on_selected_cases() {
        let mats = [
            m(&["110", "011"]),
            m(&["1011", "0111", "1100"]),
            m(&["10000", "01000", "00111", "11111"]),
        ];
        for mat in &mats {
            for bits in 0u64..1 << mat.ncols() {
                let v = BitVec::new(mat.ncols(), bits).unwrap();
                assert_eq!(mat.in_row_space(&v), row_space_oracle(mat, &v));
            }
        }
    }

    #[test]
    fn transpose_small() {
        let t = m(&["110", "011"]).transpose();
        assert_eq!(t.nrows(), 3);
        assert_eq!(t.ncols(), 2);
        let rows: Vec<String> = t.rows().map(|r| r.to_string()).collect();
        assert_eq!(rows, ["10", "11", "01"]);
    }

    #[test]
    fn transpose_involution() {
        let a = m(&["10110", "01101", "11000"]);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn rank_equals_transpose_rank_random_sample() {
        // Deterministic LCG sample, 10_000 matrices up to 12x12.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..10_000 {
            let nrows = (next() % 12 + 1) as usize;
            let ncols = (next() % 12 + 1) as usize;
            let rows: Vec<u64> = (0..nrows)
                .map(|_| next() & ((1u64 << ncols) - 1))
                .collect();
            let a = BitMatrix::from_raw(ncols, rows);
            assert_eq!(a.rank(), a.transpose().rank());
        }
    }
}
