//! Single-element extension and coextension machinery, class partitions of
//! candidate columns/rows, and the splitter-pruned census.
//!
//! Candidate columns have at least two ones and differ from every existing
//! column, so a simple extension of a 3-connected matroid is again
//! 3-connected, and dually for coextension rows; the census therefore only
//! has to filter on excluded minors.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::iso::{self, CanonicalKey};
use crate::matroid::{matrix_from_columns, BinaryMatroid};
use crate::util::parallel_map;

/// Grouping of every candidate column/row by the isomorphism class of the
/// matroid it produces.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub base: BinaryMatroid,
    pub mode: Mode,
    /// Every candidate that survived the filters, ascending.
    pub candidates: Vec<BitVec>,
    /// One entry per isomorphism class, ordered by smallest member.
    pub classes: Vec<ClassInfo>,
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub key: CanonicalKey,
    /// Catalog name, when the class is isomorphic to a catalog entry.
    pub name: Option<String>,
    /// Member candidates, ascending.
    pub members: Vec<BitVec>,
    /// Matroid built from the smallest member candidate.
    pub representative: BinaryMatroid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    Extend,
    Coextend,
}

/// Filters applied to each candidate before classification.
#[derive(Clone, Default)]
pub struct Filters {
    pub three_connected: bool,
    pub excluded: Vec<BinaryMatroid>,
}

impl ClassPartition {
    pub fn class_of(&self, candidate: &BitVec) -> Option<&ClassInfo> {
        self.classes
            .iter()
            .find(|c| c.members.binary_search(candidate).is_ok())
    }

    pub fn class_named(&self, name: &str) -> Option<&ClassInfo> {
        self.classes.iter().find(|c| c.name.as_deref() == Some(name))
    }
}

/// All length-r columns with at least two ones that differ from every
/// existing column of `[I_r | D]`, in ascending order.
pub fn extension_candidates(m: &BinaryMatroid) -> Vec<BitVec> {
    let r = m.rank();
    if r < 2 {
        return Vec::new();
    }
    let existing: BTreeSet<u64> = (r + 1..=m.size()).map(|p| m.column(p).bits()).collect();
    let mut out = Vec::new();
    for v in 1u64..(1 << r) {
        if v.count_ones() >= 2 && !existing.contains(&v) {
            out.push(BitVec::new(r, v).expect("fits width"));
        }
    }
    out
}

/// All length-(n-r) rows with at least two ones that differ from every
/// existing row of `D`, in ascending order.
pub fn coextension_candidates(m: &BinaryMatroid) -> Vec<BitVec> {
    let w = m.size() - m.rank();
    if w < 2 {
        return Vec::new();
    }
    let existing: BTreeSet<u64> = m.d().raw_rows().iter().copied().collect();
    let mut out = Vec::new();
    for v in 1u64..(1 << w) {
        if v.count_ones() >= 2 && !existing.contains(&v) {
            out.push(BitVec::new(w, v).expect("fits width"));
        }
    }
    out
}

/// Appends `col` as a new element labelled n+1. The result carries default
/// labels 1..=n+1 regardless of the base's labelling.
pub fn extend_by(m: &BinaryMatroid, col: &BitVec) -> Result<BinaryMatroid> {
    if col.width() != m.rank() {
        return Err(Error::InvalidCandidate(format!(
            "column width {} does not match rank {}",
            col.width(),
            m.rank()
        )));
    }
    if col.ones() < 2 {
        return Err(Error::InvalidCandidate(format!(
            "column {col} has fewer than two ones"
        )));
    }
    for p in m.rank() + 1..=m.size() {
        if m.column(p).bits() == col.bits() {
            return Err(Error::InvalidCandidate(format!(
                "column {col} already present"
            )));
        }
    }
    let mut d_cols: Vec<u64> = (m.rank() + 1..=m.size()).map(|p| m.column(p).bits()).collect();
    d_cols.push(col.bits());
    let d = matrix_from_columns(m.rank(), &d_cols);
    BinaryMatroid::new(m.rank(), m.size() + 1, d, None)
}

/// Adds a new identity column labelled r+1 and appends `row` to `D`; labels
/// of the old columns beyond r shift up by one. The result carries default
/// labels 1..=n+1.
pub fn coextend_by(m: &BinaryMatroid, row: &BitVec) -> Result<BinaryMatroid> {
    let w = m.size() - m.rank();
    if row.width() != w {
        return Err(Error::InvalidCandidate(format!(
            "row width {} does not match corank {}",
            row.width(),
            w
        )));
    }
    if row.ones() < 2 {
        return Err(Error::InvalidCandidate(format!(
            "row {row} has fewer than two ones"
        )));
    }
    if m.d().raw_rows().contains(&row.bits()) {
        return Err(Error::InvalidCandidate(format!("row {row} already present")));
    }
    let mut rows: Vec<BitVec> = m.d().rows().collect();
    rows.push(*row);
    let d = BitMatrix::new(w, rows)?;
    BinaryMatroid::new(m.rank() + 1, m.size() + 1, d, None)
}

/// The one coextension that must be checked after two consecutive
/// extensions: the new row has its ones exactly under the last two columns,
/// so the new element forms a triad with them.
pub fn triad_coextend(m: &BinaryMatroid, e1: u32, e2: u32) -> Result<BinaryMatroid> {
    let n = m.size() as u32;
    if e1 != n - 1 || e2 != n {
        return Err(Error::InvalidCandidate(format!(
            "triad coextension expects the two most recent columns {} and {}, got {e1} and {e2}",
            n - 1,
            n
        )));
    }
    let w = m.size() - m.rank();
    if w < 2 {
        return Err(Error::InvalidCandidate("no room for a triad row".into()));
    }
    let row = BitVec::new(w, 0b11).expect("fits width");
    let out = coextend_by(m, &row)?;
    debug_assert!(
        out.is_cocircuit(&[m.rank() as u32 + 1, n, n + 1].into_iter().collect())
            .unwrap_or(false),
        "triad row must produce a 3-element cocircuit"
    );
    Ok(out)
}

/// Applies every candidate, filters, and groups the survivors by
/// isomorphism class. `names` resolves classes to catalog names.
pub fn classify(
    m: &BinaryMatroid,
    mode: Mode,
    filters: &Filters,
    names: &BTreeMap<CanonicalKey, String>,
) -> Result<ClassPartition> {
    let candidates = match mode {
        Mode::Extend => extension_candidates(m),
        Mode::Coextend => coextension_candidates(m),
    };
    let mut kept: Vec<(BitVec, BinaryMatroid)> = Vec::new();
    for c in &candidates {
        let built = match mode {
            Mode::Extend => extend_by(m, c)?,
            Mode::Coextend => coextend_by(m, c)?,
        };
        if filters.three_connected && !built.is_3connected()? {
            continue;
        }
        if !iso::in_class(&built, &filters.excluded)? {
            continue;
        }
        kept.push((*c, built));
    }

    // Group by invariant bucket first, confirming with a bijection search
    // against the class representative; the canonical key is computed once
    // per class.
    let mut classes: Vec<ClassInfo> = Vec::new();
    let mut buckets: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for (cand, built) in kept {
        let inv = iso::invariant_key(&built)?;
        let mut assigned = false;
        if let Some(indices) = buckets.get(&inv) {
            for &ci in indices {
                if iso::are_isomorphic(&built, &classes[ci].representative)?.is_some() {
                    classes[ci].members.push(cand);
                    assigned = true;
                    break;
                }
            }
        }
        if !assigned {
            let key = iso::canonical_form(&built)?;
            let name = names.get(&key).cloned();
            buckets.entry(inv).or_default().push(classes.len());
            classes.push(ClassInfo {
                key,
                name,
                members: vec![cand],
                representative: built,
            });
        }
    }
    for c in &mut classes {
        c.members.sort();
    }
    classes.sort_by(|a, b| a.members[0].cmp(&b.members[0]));
    let survivors: Vec<BitVec> = {
        let mut v: Vec<BitVec> = classes.iter().flat_map(|c| c.members.clone()).collect();
        v.sort();
        v
    };
    Ok(ClassPartition {
        base: m.clone(),
        mode,
        candidates: survivors,
        classes,
    })
}

/// Row tag for [`pruned_second_rows`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RowType {
    /// Prefix is an admissible (in-class) coextension row of the base, with
    /// either final entry.
    TypeI,
    /// Unit prefix with a one in the last position.
    TypeII,
    /// An existing row of the extension with its last entry flipped.
    TypeIII,
}

/// For `m = extend_by(n, c)`, the coextension rows of `m` that remain after
/// the second-element analysis: every other candidate row provably yields a
/// matroid with a minor from `excluded` (through its prefix) or is not a
/// cosimple candidate at all.
pub fn pruned_second_rows(
    n: &BinaryMatroid,
    m: &BinaryMatroid,
    excluded: &[BinaryMatroid],
) -> Result<Vec<(BitVec, RowType)>> {
    // m must be n plus exactly one column, labels preserved.
    if m.rank() != n.rank() || m.size() != n.size() + 1 {
        return Err(Error::NotAnExtension);
    }
    let r = n.rank();
    for p in 1..=n.size() {
        if m.column(p).bits() != n.column(p).bits() {
            return Err(Error::NotAnExtension);
        }
    }
    let w = n.size() - r; // prefix width
    let candidates: BTreeSet<u64> = coextension_candidates(m).iter().map(|v| v.bits()).collect();

    let mut out: Vec<(BitVec, RowType)> = Vec::new();
    // Type I: admissible coextension rows of n, both values of the last bit.
    for prefix in coextension_candidates(n) {
        let built = coextend_by(n, &prefix)?;
        if !iso::in_class(&built, excluded)? {
            continue;
        }
        for last in [0u64, 1] {
            let bits = (prefix.bits() << 1) | last;
            if candidates.contains(&bits) {
                out.push((BitVec::new(w + 1, bits)?, RowType::TypeI));
            }
        }
    }
    // Type II: unit prefixes with a trailing one.
    for i in 0..w {
        let bits = (1u64 << (w - i)) | 1;
        if candidates.contains(&bits) {
            out.push((BitVec::new(w + 1, bits)?, RowType::TypeII));
        }
    }
    // Type III: rows of m's D with the last entry reversed.
    for row in m.d().raw_rows() {
        let bits = row ^ 1;
        if candidates.contains(&bits) {
            out.push((BitVec::new(w + 1, bits)?, RowType::TypeIII));
        }
    }
    out.sort_by_key(|(v, t)| (*t as u8, *v));
    Ok(out)
}

/// One census member: a canonical representative plus the chain that first
/// reached it.
#[derive(Clone, Debug, Serialize)]
pub struct CensusNode {
    #[serde(skip)]
    pub matroid: BinaryMatroid,
    pub key: CanonicalKey,
    pub size: usize,
    pub rank: usize,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub seed: String,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "op", content = "vector")]
pub enum Step {
    Extend(BitVec),
    Coextend(BitVec),
}

/// Replays a provenance chain from its seed.
pub fn replay(seed: &BinaryMatroid, steps: &[Step]) -> Result<BinaryMatroid> {
    let mut m = seed.clone();
    for s in steps {
        m = match s {
            Step::Extend(c) => extend_by(&m, c)?,
            Step::Coextend(r) => coextend_by(&m, r)?,
        };
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug)]
pub struct CensusParams {
    pub max_size: usize,
    pub max_rank: usize,
    /// Splitter-ordered chain generation when true; the exhaustive closure
    /// oracle when false.
    pub prune: bool,
    pub jobs: usize,
    /// Hard cap on canonical classes, as a runaway guard.
    pub node_budget: usize,
}

impl CensusParams {
    pub fn new(max_size: usize, max_rank: usize, prune: bool) -> Self {
        CensusParams {
            max_size,
            max_rank,
            prune,
            jobs: 1,
            node_budget: 200_000,
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

/// Census result: every member of the closure, deduplicated by canonical
/// form and ordered by (size, rank, key).
#[derive(Clone, Debug)]
pub struct Census {
    pub members: Vec<CensusNode>,
}

impl Census {
    pub fn keys(&self) -> BTreeSet<CanonicalKey> {
        self.members.iter().map(|m| m.key.clone()).collect()
    }

    pub fn find(&self, key: &CanonicalKey) -> Option<&CensusNode> {
        self.members.iter().find(|m| &m.key == key)
    }
}

/// Chain state relevant to the splitter ordering: how many consecutive
/// extensions happened since the last coextension (or the seed).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Tier {
    Fresh,
    OneExt,
    TwoExt,
    ExtRun,
}

struct WorkItem {
    matroid: BinaryMatroid,
    tier: Tier,
    steps: Vec<Step>,
}

/// Closure of `seed` under 3-connected single-element extensions and
/// coextensions inside the excluded-minor class.
///
/// With `prune` set, chains follow the splitter ordering: a general
/// coextension may only follow at most one trailing extension; after two
/// consecutive extensions only the triad coextension is applied; extensions
/// may always continue (runs longer than two are final, so no coextension
/// ever follows them).
pub fn census(
    seed: &BinaryMatroid,
    seed_name: &str,
    excluded: &[BinaryMatroid],
    params: CensusParams,
) -> Result<Census> {
    if !seed.is_3connected()? {
        return Err(Error::InvalidSeed(format!(
            "{seed_name} is not 3-connected"
        )));
    }
    if !iso::in_class(seed, excluded)? {
        return Err(Error::InvalidSeed(format!(
            "{seed_name} already has an excluded minor"
        )));
    }
    if seed.size() > params.max_size || seed.rank() > params.max_rank {
        return Err(Error::InvalidSeed(format!(
            "{seed_name} exceeds the census caps"
        )));
    }

    let mut members: Vec<CensusNode> = Vec::new();
    let mut member_buckets: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    // Canonical keys whose full coextension fan ran (tier <= OneExt), whose
    // extension fan ran from a Fresh item, and whose extension fan ran from
    // any deeper tier.
    let mut coext_done: BTreeSet<CanonicalKey> = BTreeSet::new();
    let mut fresh_expanded: BTreeSet<CanonicalKey> = BTreeSet::new();
    let mut extrun_done: BTreeSet<CanonicalKey> = BTreeSet::new();

    // Queue keyed by (size, rank): breadth-first in that order.
    let mut queue: BTreeMap<(usize, usize), Vec<WorkItem>> = BTreeMap::new();
    queue.entry((seed.size(), seed.rank())).or_default().push(WorkItem {
        matroid: seed.clone(),
        tier: Tier::Fresh,
        steps: Vec::new(),
    });

    // Records a member; returns its canonical key and whether it was new.
    let record = |members: &mut Vec<CensusNode>,
                  buckets: &mut BTreeMap<Vec<u8>, Vec<usize>>,
                  m: &BinaryMatroid,
                  seed_name: &str,
                  steps: &[Step]|
     -> Result<(CanonicalKey, bool)> {
        let inv = iso::invariant_key(m)?;
        if let Some(indices) = buckets.get(&inv) {
            for &i in indices {
                if iso::are_isomorphic(m, &members[i].matroid)?.is_some() {
                    return Ok((members[i].key.clone(), false));
                }
            }
        }
        let key = iso::canonical_form(m)?;
        buckets.entry(inv).or_default().push(members.len());
        members.push(CensusNode {
            matroid: m.clone(),
            key: key.clone(),
            size: m.size(),
            rank: m.rank(),
            provenance: Provenance {
                seed: seed_name.to_owned(),
                steps: steps.to_vec(),
            },
        });
        Ok((key, true))
    };

    while let Some((&bucket_key, _)) = queue.iter().next() {
        let items = queue.remove(&bucket_key).expect("bucket exists");
        for item in items {
            if members.len() > params.node_budget {
                return Err(Error::Budget(format!(
                    "census exceeded {} canonical classes",
                    params.node_budget
                )));
            }
            let (key, _) = record(
                &mut members,
                &mut member_buckets,
                &item.matroid,
                seed_name,
                &item.steps,
            )?;

            let tier = if params.prune { item.tier } else { Tier::Fresh };

            // Dedup of expansion work, per the rights each tier grants.
            let run_coext = match tier {
                Tier::Fresh | Tier::OneExt => {
                    params.max_rank > item.matroid.rank()
                        && params.max_size > item.matroid.size()
                        && !coext_done.contains(&key)
                }
                _ => false,
            };
            let run_triad = params.prune
                && tier == Tier::TwoExt
                && params.max_rank > item.matroid.rank()
                && params.max_size > item.matroid.size()
                && !fresh_expanded.contains(&key);
            let run_ext = params.max_size > item.matroid.size()
                && match tier {
                    Tier::Fresh => !fresh_expanded.contains(&key),
                    Tier::OneExt => !fresh_expanded.contains(&key),
                    Tier::TwoExt => !fresh_expanded.contains(&key),
                    Tier::ExtRun => {
                        !fresh_expanded.contains(&key) && !extrun_done.contains(&key)
                    }
                };

            if tier == Tier::Fresh {
                fresh_expanded.insert(key.clone());
            }
            if run_coext {
                coext_done.insert(key.clone());
            }
            if tier == Tier::ExtRun && run_ext {
                extrun_done.insert(key.clone());
            }

            let mut children: Vec<(BinaryMatroid, Tier, Step)> = Vec::new();

            if run_coext {
                let rows = coextension_candidates(&item.matroid);
                let keep = parallel_map(&rows, params.jobs, |row| {
                    let built = coextend_by(&item.matroid, row).expect("candidate row");
                    iso::in_class(&built, excluded).map(|ok| ok.then_some(built))
                });
                for (row, res) in rows.iter().zip(keep) {
                    if let Some(built) = res? {
                        children.push((built, Tier::Fresh, Step::Coextend(*row)));
                    }
                }
            } else if run_triad {
                let n = item.matroid.size() as u32;
                match triad_coextend(&item.matroid, n - 1, n) {
                    Ok(built) => {
                        if iso::in_class(&built, excluded)? {
                            let w = item.matroid.size() - item.matroid.rank();
                            children.push((
                                built,
                                Tier::Fresh,
                                Step::Coextend(BitVec::new(w, 0b11)?),
                            ));
                        }
                    }
                    // The triad row may coincide with an existing row of D;
                    // that coextension is not cosimple and is skipped.
                    Err(Error::InvalidCandidate(_)) => {}
                    Err(e) => return Err(e),
                }
            }

            if run_ext {
                let next_tier = match tier {
                    Tier::Fresh => Tier::OneExt,
                    Tier::OneExt => Tier::TwoExt,
                    _ => Tier::ExtRun,
                };
                let cols = extension_candidates(&item.matroid);
                let keep = parallel_map(&cols, params.jobs, |col| {
                    let built = extend_by(&item.matroid, col).expect("candidate column");
                    iso::in_class(&built, excluded).map(|ok| ok.then_some(built))
                });
                for (col, res) in cols.iter().zip(keep) {
                    if let Some(built) = res? {
                        children.push((built, next_tier, Step::Extend(*col)));
                    }
                }
            }

            for (built, tier, step) in children {
                let mut steps = item.steps.clone();
                steps.push(step);
                queue
                    .entry((built.size(), built.rank()))
                    .or_default()
                    .push(WorkItem {
                        matroid: built,
                        tier,
                        steps,
                    });
            }
        }
    }

    members.sort_by(|a, b| (a.size, a.rank, &a.key).cmp(&(b.size, b.rank, &b.key)));
    Ok(Census { members })
}

/// True iff no 3-connected single-element extension or coextension of `m`
/// stays in the class.
pub fn is_splitter(m: &BinaryMatroid, excluded: &[BinaryMatroid]) -> Result<bool> {
    for col in extension_candidates(m) {
        let built = extend_by(m, &col)?;
        if built.is_3connected()? && iso::in_class(&built, excluded)? {
            return Ok(false);
        }
    }
    for row in coextension_candidates(m) {
        let built = coextend_by(m, &row)?;
        if built.is_3connected()? && iso::in_class(&built, excluded)? {
            return Ok(false);
        }
    }
    Ok(true)
}
