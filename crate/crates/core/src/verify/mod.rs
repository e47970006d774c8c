//! Claims registry: every checkable published statement is bound to an
//! executable check with a reproducible witness.
//!
//! Each claim is a strategy object behind the [`Claim`] trait, registered by
//! id and selected at runtime (`verify_claim`) or run in bulk (`run_all`).
//! Claims are independent and may run concurrently; reports are assembled in
//! id order, so output does not depend on scheduling.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::generate::{census, Census, CensusParams};
use crate::util::parallel_map;

mod data;
mod inventory;
mod lemmas;
mod oxley;
mod tables;

pub use data::{TABLE_1A, TABLE_1B, TABLE_2A, TABLE_2B, TABLE_3, TABLE_4};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Discrepancy,
}

/// Outcome of one claim.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub status: ClaimStatus,
    pub detail: String,
    #[serde(rename = "paperRef")]
    pub paper_ref: String,
}

#[derive(Clone, Copy, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
}

/// Full report: claims in id order plus summary counts.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claims: Vec<ClaimResult>,
    pub summary: Summary,
}

/// A registered check. `run` returns the status and a deterministic detail
/// string; internal errors surface as failures in [`verify_claim`].
pub trait Claim: Sync {
    fn id(&self) -> &'static str;
    fn paper_ref(&self) -> &'static str;
    fn run(&self, cx: &VerifyCtx) -> Result<(ClaimStatus, String)>;
}

/// Shared context: the catalog under test plus a cache for the censuses
/// several claims share.
pub struct VerifyCtx<'a> {
    pub catalog: &'a Catalog,
    pub jobs: usize,
    census_cache: Mutex<BTreeMap<String, Arc<Census>>>,
}

impl<'a> VerifyCtx<'a> {
    pub fn new(catalog: &'a Catalog) -> Self {
        VerifyCtx {
            catalog,
            jobs: 1,
            census_cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    /// Census keyed by its parameters; computed once per context.
    pub fn census_cached(
        &self,
        seed_name: &str,
        excluded_names: &[&str],
        max_size: usize,
        max_rank: usize,
        prune: bool,
    ) -> Result<Arc<Census>> {
        let key = format!(
            "{seed_name}|{}|{max_size}|{max_rank}|{prune}",
            excluded_names.join(",")
        );
        if let Some(hit) = self.census_cache.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let seed = self.catalog.get(seed_name)?;
        let excluded: Vec<_> = excluded_names
            .iter()
            .map(|n| self.catalog.get(n))
            .collect::<Result<_>>()?;
        let result = Arc::new(census(
            &seed,
            seed_name,
            &excluded,
            CensusParams::new(max_size, max_rank, prune).with_jobs(self.jobs),
        )?);
        self.census_cache
            .lock()
            .expect("cache lock")
            .insert(key, result.clone());
        Ok(result)
    }
}

/// All registered claims, in report order.
pub fn registry() -> Vec<Box<dyn Claim>> {
    vec![
        Box::new(tables::Table1a),
        Box::new(tables::Table1b),
        Box::new(tables::Table2a),
        Box::new(tables::Table2b),
        Box::new(tables::Table3),
        Box::new(tables::Table4),
        Box::new(lemmas::Lemma21Separation),
        Box::new(lemmas::Lemma22Stage1),
        Box::new(lemmas::Lemma22Stage2),
        Box::new(lemmas::Lemma22Stage3),
        Box::new(inventory::Theorem11D2Branch),
        Box::new(inventory::InternallyFourConnectedInventory),
        Box::new(oxley::OxleyBaseCases),
        Box::new(oxley::SplitterOrderingEquivalence),
    ]
}

pub fn claim_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id()).collect()
}

/// Runs a single claim by id.
pub fn verify_claim(cx: &VerifyCtx, id: &str) -> Result<ClaimResult> {
    let registry = registry();
    let claim = registry
        .iter()
        .find(|c| c.id() == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_owned()))?;
    Ok(run_one(cx, claim.as_ref()))
}

fn run_one(cx: &VerifyCtx, claim: &dyn Claim) -> ClaimResult {
    let (status, detail) = match claim.run(cx) {
        Ok(r) => r,
        Err(e) => (ClaimStatus::Fail, format!("error: {e}")),
    };
    ClaimResult {
        id: claim.id().to_owned(),
        status,
        detail,
        paper_ref: claim.paper_ref().to_owned(),
    }
}

/// Runs every claim; results are sorted by id and are identical for any job
/// count.
pub fn run_all(cx: &VerifyCtx) -> Report {
    let registry = registry();
    let mut claims = parallel_map(&registry, cx.jobs, |c| run_one(cx, c.as_ref()));
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    let mut summary = Summary::default();
    for c in &claims {
        match c.status {
            ClaimStatus::Pass => summary.pass += 1,
            ClaimStatus::Fail => summary.fail += 1,
            ClaimStatus::Discrepancy => summary.discrepancy += 1,
        }
    }
    Report { claims, summary }
}
