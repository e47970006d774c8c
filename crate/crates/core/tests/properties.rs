//! Property-based checks for the bit-level layer and the canonical form.

use std::collections::BTreeMap;

use proptest::prelude::*;

use matx_core::{iso, BinaryMatroid, BitMatrix, BitVec};

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(nr, nc)| {
        proptest::collection::vec(0u64..(1 << nc), nr).prop_map(move |rows| {
            let rows = rows
                .into_iter()
                .map(|bits| BitVec::new(nc, bits).unwrap())
                .collect();
            BitMatrix::new(nc, rows).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in arb_matrix(10, 12)) {
        let once = m.rref();
        let twice = once.reduced.rref();
        prop_assert_eq!(&once.reduced, &twice.reduced);
        prop_assert_eq!(once.pivots, twice.pivots);
    }

    #[test]
    fn rank_survives_transposition(m in arb_matrix(12, 12)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn row_space_membership_matches_brute_force(
        m in arb_matrix(8, 10),
        v in 0u64..(1 << 10),
    ) {
        let v = BitVec::new(10, v & ((1 << m.ncols()) - 1)).unwrap();
        let v = BitVec::new(m.ncols(), v.bits() & ((1u64 << m.ncols()) - 1)).unwrap();
        let brute = (0u64..1 << m.nrows()).any(|pick| {
            let mut acc = 0u64;
            for i in 0..m.nrows() {
                if pick >> i & 1 == 1 {
                    acc ^= m.row(i).bits();
                }
            }
            acc == v.bits()
        });
        prop_assert_eq!(m.in_row_space(&v), brute);
    }

    #[test]
    fn bitvec_parse_display_round_trip(bits in 0u64..(1 << 16), width in 1usize..=16) {
        let v = BitVec::new(width, bits & ((1 << width) - 1)).unwrap();
        prop_assert_eq!(BitVec::parse(&v.to_string()).unwrap(), v);
    }
}

/// Random small matroids: canonical form and bijection search agree under
/// relabelling.
fn arb_matroid() -> impl Strategy<Value = BinaryMatroid> {
    (2usize..=4, 1usize..=5).prop_flat_map(|(rank, extra)| {
        proptest::collection::vec(0u64..(1u64 << rank), extra).prop_map(move |cols| {
            let cols: Vec<BitVec> = cols
                .into_iter()
                .map(|bits| BitVec::new(rank, bits).unwrap())
                .collect();
            let d = BitMatrix::from_columns(rank, &cols).unwrap();
            BinaryMatroid::new(rank, rank + extra, d, None).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn canonical_form_is_stable_under_relabelling(
        m in arb_matroid(),
        seed in 0u64..u64::MAX,
    ) {
        // A deterministic permutation of the labels derived from the seed.
        let n = m.size();
        let mut perm: Vec<u32> = (1..=n as u32).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let map: BTreeMap<u32, u32> = (1..=n as u32).zip(perm).collect();
        let relabelled = m.relabel(&map).unwrap();
        prop_assert_eq!(
            iso::canonical_form(&m).unwrap(),
            iso::canonical_form(&relabelled).unwrap()
        );
        prop_assert!(iso::are_isomorphic(&m, &relabelled).unwrap().is_some());
        prop_assert_eq!(
            iso::invariant_key(&m).unwrap(),
            iso::invariant_key(&relabelled).unwrap()
        );
    }
}
