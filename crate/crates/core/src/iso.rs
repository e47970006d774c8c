//! Canonical forms, isomorphism with explicit bijections, minor testing.
//!
//! Binary matroids are uniquely representable over GF(2), so a matroid
//! isomorphism is induced by an invertible linear map carrying columns onto
//! columns. Both the canonical form and the bijection search walk ordered
//! bases; per-element invariants derived from circuit structure prune the
//! walks without affecting what they define.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::matroid::BinaryMatroid;
use crate::util::fnv1a;

/// Byte string identifying an isomorphism class; equal keys mean isomorphic
/// matroids and vice versa.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Short hex fingerprint for display and for naming unnamed classes.
    pub fn short_hash(&self) -> String {
        format!("{:08x}", fnv1a(&self.0) as u32)
    }
}

impl serde::Serialize for CanonicalKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.short_hash())
    }
}

/// Certificate that `m.contract(contract_set).delete(delete_set)`, relabelled
/// through `bijection`, is exactly the target matroid.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MinorWitness {
    pub contract_set: BTreeSet<u32>,
    pub delete_set: BTreeSet<u32>,
    /// Minor label -> target label.
    pub bijection: BTreeMap<u32, u32>,
}

const ISO_LIMIT: usize = 20;

fn check_size(m: &BinaryMatroid) -> Result<()> {
    if m.size() > ISO_LIMIT {
        return Err(Error::TooLarge(format!(
            "{} elements exceeds the isomorphism limit {ISO_LIMIT}",
            m.size()
        )));
    }
    Ok(())
}

/// Loop labels, and the distinct nonzero columns with multiplicities.
struct Decomposition {
    loops: Vec<u32>,
    /// Sorted by value: (column value, labels holding that value).
    core: Vec<(u64, Vec<u32>)>,
}

fn decompose(m: &BinaryMatroid) -> Decomposition {
    let mut loops = Vec::new();
    let mut by_value: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for (i, &c) in m.raw_columns().iter().enumerate() {
        let label = m.labels()[i];
        if c == 0 {
            loops.push(label);
        } else {
            by_value.entry(c).or_default().push(label);
        }
    }
    loops.sort_unstable();
    let core = by_value
        .into_iter()
        .map(|(v, mut ls)| {
            ls.sort_unstable();
            (v, ls)
        })
        .collect();
    Decomposition { loops, core }
}

/// Per-element invariant: multiplicity of the element's parallel class plus
/// the multisets of circuit and cocircuit sizes through it.
fn element_profiles(m: &BinaryMatroid) -> Result<BTreeMap<u32, Vec<u8>>> {
    let circuits = m.circuit_masks()?;
    let cocircuits = m.cocircuit_masks()?;
    let n = m.size();
    let mut mult: BTreeMap<u64, u16> = BTreeMap::new();
    for &c in m.raw_columns() {
        *mult.entry(c).or_insert(0) += 1;
    }
    let mut out = BTreeMap::new();
    for (i, &label) in m.labels().iter().enumerate() {
        let bit = 1u64 << (n - 1 - i);
        let mut sizes: Vec<u8> = circuits
            .iter()
            .filter(|&&c| c & bit != 0)
            .map(|c| c.count_ones() as u8)
            .collect();
        sizes.sort_unstable();
        let mut cosizes: Vec<u8> = cocircuits
            .iter()
            .filter(|&&c| c & bit != 0)
            .map(|c| c.count_ones() as u8)
            .collect();
        cosizes.sort_unstable();
        let mut bytes = Vec::with_capacity(sizes.len() + cosizes.len() + 6);
        bytes.extend_from_slice(&mult[&m.raw_columns()[i]].to_be_bytes());
        bytes.extend_from_slice(&(sizes.len() as u16).to_be_bytes());
        bytes.extend_from_slice(&sizes);
        bytes.extend_from_slice(&(cosizes.len() as u16).to_be_bytes());
        bytes.extend_from_slice(&cosizes);
        out.insert(label, bytes);
    }
    Ok(out)
}

/// Isomorphism-invariant fingerprint: size, rank, circuit-size multiset,
/// cocircuit-size multiset and the sorted per-element circuit counts.
pub fn invariant_key(m: &BinaryMatroid) -> Result<Vec<u8>> {
    check_size(m)?;
    let circuits = m.circuit_masks()?;
    let cocircuits = m.cocircuit_masks()?;
    let mut sizes: Vec<u8> = circuits.iter().map(|c| c.count_ones() as u8).collect();
    sizes.sort_unstable();
    let mut cosizes: Vec<u8> = cocircuits.iter().map(|c| c.count_ones() as u8).collect();
    cosizes.sort_unstable();
    let n = m.size();
    let mut counts: Vec<u32> = (0..n)
        .map(|i| {
            let bit = 1u64 << (n - 1 - i);
            circuits.iter().filter(|&&c| c & bit != 0).count() as u32
        })
        .collect();
    counts.sort_unstable();
    let mut bytes = Vec::new();
    bytes.push(n as u8);
    bytes.push(m.rank() as u8);
    bytes.extend_from_slice(&(sizes.len() as u32).to_be_bytes());
    bytes.extend_from_slice(&sizes);
    bytes.extend_from_slice(&(cosizes.len() as u32).to_be_bytes());
    bytes.extend_from_slice(&cosizes);
    for c in counts {
        bytes.extend_from_slice(&c.to_be_bytes());
    }
    Ok(bytes)
}

fn swap_bits(w: u64, i: u32, j: u32) -> u64 {
    let x = ((w >> i) ^ (w >> j)) & 1;
    w ^ ((x << i) | (x << j))
}

/// Applies the row operations that turn `values[idx]` into the unit vector
/// for basis slot `level` (0-based), transforming every value accordingly.
fn pivot_values(values: &[(u64, u16)], idx: usize, level: usize, rank: usize) -> Vec<(u64, u16)> {
    let t = (rank - 1 - level) as u32;
    let low_mask = (1u64 << (rank - level)) - 1;
    let v = values[idx].0;
    let sub = v & low_mask;
    debug_assert!(sub != 0, "pivot candidate must be independent");
    let h = 63 - sub.leading_zeros();
    let mut out: Vec<(u64, u16)> = values
        .iter()
        .map(|&(w, m)| (if h == t { w } else { swap_bits(w, h, t) }, m))
        .collect();
    let v_swapped = out[idx].0;
    let clear = v_swapped & !(1u64 << t);
    let mut bits = clear;
    while bits != 0 {
        let q = bits.trailing_zeros();
        bits &= bits - 1;
        for (w, _) in out.iter_mut() {
            *w ^= ((*w >> t) & 1) << q;
        }
    }
    out
}

fn leaf_bytes(n: usize, rank: usize, loops: usize, values: &[(u64, u16)]) -> Vec<u8> {
    let mut pairs: Vec<(u64, u16)> = values.to_vec();
    pairs.sort_unstable();
    let mut bytes = Vec::with_capacity(3 + pairs.len() * 10);
    bytes.push(n as u8);
    bytes.push(rank as u8);
    bytes.push(loops as u8);
    for (v, m) in pairs {
        bytes.extend_from_slice(&v.to_be_bytes());
        bytes.extend_from_slice(&m.to_be_bytes());
    }
    bytes
}

/// Canonical form: the minimum, over ordered bases of the representation, of
/// the standardized column multiset bytes. Equal keys iff isomorphic.
pub fn canonical_form(m: &BinaryMatroid) -> Result<CanonicalKey> {
    check_size(m)?;
    let rank = m.rank();
    let dec = decompose(m);
    let values: Vec<(u64, u16)> = dec
        .core
        .iter()
        .map(|(v, ls)| (*v, ls.len() as u16))
        .collect();
    if rank == 0 {
        return Ok(CanonicalKey(leaf_bytes(
            m.size(),
            0,
            dec.loops.len(),
            &values,
        )));
    }
    // First basis slot is restricted to the elements whose invariant profile
    // is minimal; the restriction is itself isomorphism-invariant.
    let profiles = element_profiles(m)?;
    let profile_of_value: Vec<&Vec<u8>> = dec
        .core
        .iter()
        .map(|(_, ls)| &profiles[&ls[0]])
        .collect();
    let min_profile: &Vec<u8> = profile_of_value
        .iter()
        .copied()
        .min()
        .expect("rank > 0 implies a nonzero column");

    struct Search {
        rank: usize,
        n: usize,
        loops: usize,
        best: Option<Vec<u8>>,
    }
    impl Search {
        fn go(&mut self, level: usize, values: &[(u64, u16)], first: Option<&[bool]>) {
            if level == self.rank {
                let bytes = leaf_bytes(self.n, self.rank, self.loops, values);
                if self.best.as_ref().is_none_or(|b| bytes < *b) {
                    self.best = Some(bytes);
                }
                return;
            }
            let low_mask = (1u64 << (self.rank - level)) - 1;
            for idx in 0..values.len() {
                if values[idx].0 & low_mask == 0 {
                    continue;
                }
                if let Some(allowed) = first {
                    if !allowed[idx] {
                        continue;
                    }
                }
                let next = pivot_values(values, idx, level, self.rank);
                self.go(level + 1, &next, None);
            }
        }
    }

    let allowed: Vec<bool> = profile_of_value
        .iter()
        .map(|p| **p == *min_profile)
        .collect();
    let mut search = Search {
        rank,
        n: m.size(),
        loops: dec.loops.len(),
        best: None,
    };
    search.go(0, &values, Some(&allowed));
    Ok(CanonicalKey(search.best.expect("at least one basis exists")))
}

/// Expresses each of `targets` in the coordinates of the ordered basis
/// `basis`. Coefficient k (1-based) is encoded in bit `rank - k`.
fn coordinates(basis: &[u64], rank: usize, targets: &[u64]) -> Vec<u64> {
    // Echelon rows (value, coefficient word), eliminating by leading bit.
    let mut pivots: Vec<(u64, u64)> = Vec::new();
    for (k, &bv) in basis.iter().enumerate() {
        let mut v = bv;
        let mut c = 1u64 << (rank - 1 - k);
        loop {
            debug_assert!(v != 0, "basis values are independent");
            let h = 63 - v.leading_zeros();
            if let Some(&(pv, pc)) = pivots.iter().find(|(p, _)| 63 - p.leading_zeros() == h) {
                v ^= pv;
                c ^= pc;
            } else {
                pivots.push((v, c));
                break;
            }
        }
    }
    targets
        .iter()
        .map(|&t| {
            let mut v = t;
            let mut acc = 0u64;
            while v != 0 {
                let h = 63 - v.leading_zeros();
                let (pv, pc) = pivots
                    .iter()
                    .find(|(p, _)| 63 - p.leading_zeros() == h)
                    .copied()
                    .expect("targets lie in the span of a full basis");
                v ^= pv;
                acc ^= pc;
            }
            acc
        })
        .collect()
}

struct IsoSearch<'a> {
    rank: usize,
    basis_idx: &'a [usize],
    profile_a: &'a [&'a Vec<u8>],
    profile_b: &'a [&'a Vec<u8>],
    db_vals: &'a [u64],
    b_value_to_idx: &'a BTreeMap<u64, usize>,
    da_core: &'a [(u64, Vec<u32>)],
    db_core: &'a [(u64, Vec<u32>)],
    coords: &'a [u64],
}

impl IsoSearch<'_> {
    fn run(&self, level: usize, chosen: &mut Vec<u64>) -> Option<Vec<u64>> {
        if level == self.rank {
            return self.check_leaf(chosen);
        }
        let src_profile = self.profile_a[self.basis_idx[level]];
        for (j, &w) in self.db_vals.iter().enumerate() {
            if self.profile_b[j] != src_profile {
                continue;
            }
            if !independent_with(chosen, w) {
                continue;
            }
            chosen.push(w);
            if let Some(found) = self.run(level + 1, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    /// The basis images determine the linear map; accept iff it carries the
    /// column multiset of `a` exactly onto the column multiset of `b`.
    fn check_leaf(&self, chosen: &[u64]) -> Option<Vec<u64>> {
        let mut images = Vec::with_capacity(self.da_core.len());
        for (i, &c) in self.coords.iter().enumerate() {
            let mut y = 0u64;
            let mut bits = c;
            while bits != 0 {
                let b = 63 - bits.leading_zeros() as usize;
                bits &= !(1u64 << b);
                let k = self.rank - 1 - b;
                y ^= chosen[k];
            }
            let &j = self.b_value_to_idx.get(&y)?;
            if self.db_core[j].1.len() != self.da_core[i].1.len() {
                return None;
            }
            images.push(y);
        }
        let distinct: BTreeSet<u64> = images.iter().copied().collect();
        if distinct.len() != images.len() {
            return None;
        }
        Some(images)
    }
}

fn independent_with(chosen: &[u64], w: u64) -> bool {
    let mut piv = [0u64; 64];
    for &v in chosen.iter().chain(std::iter::once(&w)) {
        let mut c = v;
        loop {
            if c == 0 {
                return false;
            }
            let h = 63 - c.leading_zeros() as usize;
            if piv[h] == 0 {
                piv[h] = c;
                break;
            }
            c ^= piv[h];
        }
    }
    true
}

/// Searches for a label bijection carrying circuits onto circuits. Returns
/// the first bijection found in a fixed deterministic order, or `None`.
pub fn are_isomorphic(a: &BinaryMatroid, b: &BinaryMatroid) -> Result<Option<BTreeMap<u32, u32>>> {
    check_size(a)?;
    check_size(b)?;
    if a.size() != b.size() || a.rank() != b.rank() {
        return Ok(None);
    }
    let da = decompose(a);
    let db = decompose(b);
    if da.loops.len() != db.loops.len() || da.core.len() != db.core.len() {
        return Ok(None);
    }
    let mut mults_a: Vec<usize> = da.core.iter().map(|(_, ls)| ls.len()).collect();
    let mut mults_b: Vec<usize> = db.core.iter().map(|(_, ls)| ls.len()).collect();
    mults_a.sort_unstable();
    mults_b.sort_unstable();
    if mults_a != mults_b {
        return Ok(None);
    }
    if invariant_key(a)? != invariant_key(b)? {
        return Ok(None);
    }
    let rank = a.rank();
    if rank == 0 {
        let map = da
            .loops
            .iter()
            .zip(db.loops.iter())
            .map(|(&x, &y)| (x, y))
            .collect();
        return Ok(Some(map));
    }

    let prof_a = element_profiles(a)?;
    let prof_b = element_profiles(b)?;
    let profile_a: Vec<&Vec<u8>> = da.core.iter().map(|(_, ls)| &prof_a[&ls[0]]).collect();
    let profile_b: Vec<&Vec<u8>> = db.core.iter().map(|(_, ls)| &prof_b[&ls[0]]).collect();
    {
        let mut pa = profile_a.clone();
        let mut pb = profile_b.clone();
        pa.sort();
        pb.sort();
        if pa != pb {
            return Ok(None);
        }
    }

    // Fixed ordered basis on the a-side: greedily take independent values.
    let mut basis_idx: Vec<usize> = Vec::new();
    {
        let mut piv = [0u64; 64];
        for (i, (v, _)) in da.core.iter().enumerate() {
            let mut c = *v;
            while c != 0 {
                let h = 63 - c.leading_zeros() as usize;
                if piv[h] == 0 {
                    piv[h] = c;
                    basis_idx.push(i);
                    break;
                }
                c ^= piv[h];
            }
            if basis_idx.len() == rank {
                break;
            }
        }
    }
    debug_assert_eq!(basis_idx.len(), rank);
    let basis_vals: Vec<u64> = basis_idx.iter().map(|&i| da.core[i].0).collect();
    let core_vals_a: Vec<u64> = da.core.iter().map(|(v, _)| *v).collect();
    let coords = coordinates(&basis_vals, rank, &core_vals_a);
    let db_vals: Vec<u64> = db.core.iter().map(|(v, _)| *v).collect();
    let b_value_to_idx: BTreeMap<u64, usize> =
        db.core.iter().enumerate().map(|(i, (v, _))| (*v, i)).collect();

    let search = IsoSearch {
        rank,
        basis_idx: &basis_idx,
        profile_a: &profile_a,
        profile_b: &profile_b,
        db_vals: &db_vals,
        b_value_to_idx: &b_value_to_idx,
        da_core: &da.core,
        db_core: &db.core,
        coords: &coords,
    };
    let mut chosen = Vec::with_capacity(rank);
    let images = match search.run(0, &mut chosen) {
        Some(images) => images,
        None => return Ok(None),
    };

    let mut map = BTreeMap::new();
    for (&x, &y) in da.loops.iter().zip(db.loops.iter()) {
        map.insert(x, y);
    }
    for (i, (_, labels_a)) in da.core.iter().enumerate() {
        let j = b_value_to_idx[&images[i]];
        for (&x, &y) in labels_a.iter().zip(db.core[j].1.iter()) {
            map.insert(x, y);
        }
    }
    Ok(Some(map))
}

/// `are_isomorphic(m, dual(m))` is present.
pub fn is_selfdual(m: &BinaryMatroid) -> Result<bool> {
    Ok(are_isomorphic(m, &m.dual())?.is_some())
}

/// Relabels `minor` through the witness bijection and compares labelled
/// normal forms with the target, bit for bit.
pub fn verify_witness(m: &BinaryMatroid, target: &BinaryMatroid, w: &MinorWitness) -> bool {
    let step = match m
        .contract(&w.contract_set)
        .and_then(|c| c.delete(&w.delete_set))
    {
        Ok(x) => x,
        Err(_) => return false,
    };
    let relabelled = match step.relabel(&w.bijection) {
        Ok(x) => x,
        Err(_) => return false,
    };
    relabelled.normal_form_bytes() == target.normal_form_bytes()
}

/// Searches for an `n`-minor of `m`: contraction sets range over independent
/// sets, deletion sets over coindependent sets, both in ascending label
/// order, so the first witness found is reproducible. Absent iff no minor
/// exists.
pub fn has_minor(m: &BinaryMatroid, n: &BinaryMatroid) -> Result<Option<MinorWitness>> {
    check_size(m)?;
    if n.rank() > m.rank() || n.size() > m.size() {
        return Ok(None);
    }
    let dr = m.rank() - n.rank();
    let dn = m.size() - n.size();
    if dn < dr {
        return Ok(None);
    }
    let dd = dn - dr;
    let target_key = invariant_key(n)?;
    let labels: Vec<u32> = m.labels().to_vec();

    fn contract_rec(
        m: &BinaryMatroid,
        labels: &[u32],
        start: usize,
        chosen: &mut Vec<u32>,
        want: usize,
        check: &mut dyn FnMut(&[u32]) -> Option<MinorWitness>,
    ) -> Option<MinorWitness> {
        if chosen.len() == want {
            return check(chosen);
        }
        for i in start..labels.len() {
            chosen.push(labels[i]);
            let set: BTreeSet<u32> = chosen.iter().copied().collect();
            if m.subset_rank(&set).expect("labels exist") == set.len() {
                if let Some(w) = contract_rec(m, labels, i + 1, chosen, want, check) {
                    return Some(w);
                }
            }
            chosen.pop();
        }
        None
    }

    fn delete_rec(
        mc: &BinaryMatroid,
        n: &BinaryMatroid,
        target_key: &[u8],
        mc_labels: &[u32],
        start: usize,
        chosen: &mut Vec<u32>,
        want: usize,
        cset: &BTreeSet<u32>,
    ) -> Option<MinorWitness> {
        let remaining: BTreeSet<u32> = mc_labels
            .iter()
            .copied()
            .filter(|l| !chosen.contains(l))
            .collect();
        // Deletions must be coindependent: prune once the rank drops.
        if mc.subset_rank(&remaining).expect("subset of labels") < n.rank() {
            return None;
        }
        if chosen.len() == want {
            let dset: BTreeSet<u32> = chosen.iter().copied().collect();
            let minor = mc.delete(&dset).expect("delete set is valid");
            debug_assert_eq!(minor.rank(), n.rank());
            if invariant_key(&minor).ok()? != target_key {
                return None;
            }
            if let Some(bij) = are_isomorphic(&minor, n).ok()? {
                return Some(MinorWitness {
                    contract_set: cset.clone(),
                    delete_set: dset,
                    bijection: bij,
                });
            }
            return None;
        }
        for i in start..mc_labels.len() {
            chosen.push(mc_labels[i]);
            if let Some(w) = delete_rec(mc, n, target_key, mc_labels, i + 1, chosen, want, cset) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }

    let mut check = |contract: &[u32]| -> Option<MinorWitness> {
        let cset: BTreeSet<u32> = contract.iter().copied().collect();
        let mc = m.contract(&cset).expect("contract set is valid");
        debug_assert_eq!(mc.rank(), n.rank());
        let mc_labels: Vec<u32> = mc.labels().to_vec();
        let mut sorted = mc_labels.clone();
        sorted.sort_unstable();
        let mut chosen = Vec::new();
        delete_rec(&mc, n, &target_key, &sorted, 0, &mut chosen, dd, &cset)
    };

    let mut chosen = Vec::new();
    Ok(contract_rec(m, &labels, 0, &mut chosen, dr, &mut check))
}

/// True iff none of the excluded matroids occurs as a minor.
pub fn in_class(m: &BinaryMatroid, excluded: &[BinaryMatroid]) -> Result<bool> {
    for x in excluded {
        if has_minor(m, x)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive reference routes, kept separate from the pruned searches they
/// cross-check. Intended for tests; not optimized.
pub mod reference {
    use super::*;

    /// Minor search over every disjoint (contract, delete) pair, with no
    /// independence or coindependence restriction and no pruning beyond
    /// size/rank equality of the result.
    pub fn unpruned_has_minor(m: &BinaryMatroid, n: &BinaryMatroid) -> Result<bool> {
        if n.size() > m.size() {
            return Ok(false);
        }
        let dn = m.size() - n.size();
        let labels: Vec<u32> = m.labels().to_vec();
        let total = labels.len();

        fn combos(
            k: usize,
            start: usize,
            total: usize,
            idx: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]) -> Result<bool>,
        ) -> Result<bool> {
            if idx.len() == k {
                return f(idx);
            }
            for i in start..total {
                idx.push(i);
                if combos(k, i + 1, total, idx, f)? {
                    return Ok(true);
                }
                idx.pop();
            }
            Ok(false)
        }

        let mut check = |idx: &[usize]| -> Result<bool> {
            let removed: Vec<u32> = idx.iter().map(|&i| labels[i]).collect();
            for split in 0u64..1 << removed.len() {
                let mut contract = BTreeSet::new();
                let mut delete = BTreeSet::new();
                for (j, &l) in removed.iter().enumerate() {
                    if split >> j & 1 == 1 {
                        contract.insert(l);
                    } else {
                        delete.insert(l);
                    }
                }
                let minor = m.contract(&contract)?.delete(&delete)?;
                if minor.rank() != n.rank() || minor.size() != n.size() {
                    continue;
                }
                if are_isomorphic(&minor, n)?.is_some() {
                    return Ok(true);
                }
            }
            Ok(false)
        };
        let mut idx = Vec::new();
        combos(dn, 0, total, &mut idx, &mut check)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::BinaryMatroid;

    fn p9() -> BinaryMatroid {
        BinaryMatroid::from_rows(4, &["01111", "10111", "11010", "11110"], Some("P9")).unwrap()
    }

    fn f7() -> BinaryMatroid {
        BinaryMatroid::from_rows(3, &["0111", "1011", "1101"], Some("F7")).unwrap()
    }

    #[test]
    fn canonical_form_is_relabel_invariant() {
        let m = p9();
        let key = canonical_form(&m).unwrap();
        let perms: [[u32; 9]; 3] = [
            [9, 8, 7, 6, 5, 4, 3, 2, 1],
            [2, 3, 4, 5, 6, 7, 8, 9, 1],
            [5, 1, 8, 2, 9, 3, 7, 4, 6],
        ];
        for perm in perms {
            let map: BTreeMap<u32, u32> = (1..=9).zip(perm.iter().copied()).collect();
            let relabelled = m.relabel(&map).unwrap();
            assert_eq!(canonical_form(&relabelled).unwrap(), key);
            assert_eq!(canonical_form(&relabelled.dual().dual()).unwrap(), key);
        }
    }

    #[test]
    fn canonical_form_separates_f7_from_its_dual() {
        assert_ne!(
            canonical_form(&f7()).unwrap(),
            canonical_form(&f7().dual()).unwrap()
        );
    }

    #[test]
    fn isomorphism_identity_carries_circuits_to_circuits() {
        let m = p9();
        let bij = are_isomorphic(&m, &m).unwrap().unwrap();
        let circuits = m.circuits().unwrap();
        for c in &circuits {
            let image: std::collections::BTreeSet<u32> = c.iter().map(|e| bij[e]).collect();
            assert!(circuits.contains(&image));
        }
        assert!(are_isomorphic(&f7(), &f7().dual()).unwrap().is_none());
    }

    #[test]
    fn isomorphism_agrees_with_canonical_form_under_relabelling() {
        let m = p9();
        let map: BTreeMap<u32, u32> = (1..=9).zip([4u32, 7, 1, 9, 3, 8, 2, 6, 5]).collect();
        let other = m.relabel(&map).unwrap();
        assert!(are_isomorphic(&m, &other).unwrap().is_some());
        assert_eq!(canonical_form(&m).unwrap(), canonical_form(&other).unwrap());
    }

    #[test]
    fn self_minor_witness_is_empty() {
        let m = p9();
        let w = has_minor(&m, &m).unwrap().unwrap();
        assert!(w.contract_set.is_empty());
        assert!(w.delete_set.is_empty());
        assert!(verify_witness(&m, &m, &w));
    }

    #[test]
    fn minor_search_finds_fano_dual_inside_p9() {
        let m = p9();
        let target = f7().dual();
        let w = has_minor(&m, &target).unwrap().expect("P9 has an F7* minor");
        assert!(verify_witness(&m, &target, &w));
        assert!(reference::unpruned_has_minor(&m, &target).unwrap());
    }

    #[test]
    fn minor_search_negative_case_agrees_with_reference() {
        // The 4-wheel is graphic, so it has no Fano minor.
        let w4 =
            BinaryMatroid::from_rows(4, &["1001", "1100", "0110", "0011"], Some("W4")).unwrap();
        assert!(has_minor(&w4, &f7()).unwrap().is_none());
        assert!(!reference::unpruned_has_minor(&w4, &f7()).unwrap());
    }

    #[test]
    fn selfdual_examples() {
        assert!(!is_selfdual(&f7()).unwrap());
        let w4 = BinaryMatroid::from_rows(4, &["1001", "1100", "0110", "0011"], None).unwrap();
        assert!(is_selfdual(&w4).unwrap());
    }

    #[test]
    fn invariant_key_is_permutation_invariant() {
        let m = p9();
        let map: BTreeMap<u32, u32> = (1..=9).zip([3u32, 1, 4, 2, 9, 5, 8, 7, 6]).collect();
        assert_eq!(
            invariant_key(&m).unwrap(),
            invariant_key(&m.relabel(&map).unwrap()).unwrap()
        );
    }

    #[test]
    fn in_class_excludes_self() {
        let m = p9();
        assert!(!in_class(&m, &[m.clone()]).unwrap());
        assert!(in_class(&f7(), &[p9()]).unwrap());
    }

    #[test]
    fn size_limit_is_enforced() {
        let d = crate::gf2::BitMatrix::new(20, vec![crate::gf2::BitVec::zero(20); 1]).unwrap();
        let big = BinaryMatroid::new(1, 21, d, None).unwrap();
        assert!(matches!(canonical_form(&big), Err(crate::error::Error::TooLarge(_))));
        assert!(matches!(
            has_minor(&big, &f7()),
            Err(crate::error::Error::TooLarge(_))
        ));
    }

    #[test]
    fn canonical_form_handles_loops_and_parallels() {
        // Rank-2 matroid with a loop and a parallel pair.
        let a = BinaryMatroid::from_rows(2, &["100", "010"], None).unwrap();
        // Columns: 10, 01, 10, 01, 00 -> relabelled version must agree.
        let map: BTreeMap<u32, u32> = [(1, 5), (2, 4), (3, 3), (4, 2), (5, 1)].into();
        let b = a.relabel(&map).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let bij = are_isomorphic(&a, &b).unwrap().unwrap();
        assert_eq!(bij.len(), 5);
    }
}
