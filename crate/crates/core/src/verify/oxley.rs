//! The rank-4 base-case cross-check against the P9/P9*-free classification,
//! and the equivalence of the splitter-ordered census with the exhaustive
//! closure.

use super::{Claim, ClaimStatus, VerifyCtx};
use crate::catalog::spike;
use crate::error::Result;
use crate::generate::{classify, Filters, Mode};
use crate::iso;

pub struct OxleyBaseCases;

impl Claim for OxleyBaseCases {
    fn id(&self) -> &'static str {
        "OX"
    }
    fn paper_ref(&self) -> &'static str {
        "the rank-4 base cases and the spike family of the P9/P9*-free classification"
    }
    fn run(&self, cx: &VerifyCtx) -> Result<(ClaimStatus, String)> {
        let mut problems = Vec::new();

        // Extension chains: F7* -> {AG(3,2), S8}, S8 -> {P9, Z4},
        // AG(3,2) -> {Z4}.
        let chains: [(&str, &[&str]); 3] = [
            ("F7*", &["AG(3,2)", "S8"]),
            ("S8", &["P9", "Z4"]),
            ("AG(3,2)", &["Z4"]),
        ];
        let filters = Filters {
            three_connected: true,
            excluded: vec![],
        };
        for (base, expected) in chains {
            let part = classify(
                &cx.catalog.get(base)?,
                Mode::Extend,
                &filters,
                cx.catalog.canon_names(),
            )?;
            let mut names: Vec<&str> =
                part.classes.iter().filter_map(|c| c.name.as_deref()).collect();
            names.sort_unstable();
            if names != expected {
                problems.push(format!(
                    "3-connected extensions of {base}: {names:?}, expected {expected:?}"
                ));
            }
        }

        // Spike identities for r = 4, 5, 6.
        let s8 = cx.catalog.get("S8")?;
        let ag = cx.catalog.get("AG(3,2)")?;
        for r in 4usize..=6 {
            let z = spike(r)?;
            let b_label = 2 * r as u32;
            let c_label = 2 * r as u32 + 1;
            let zb = z.delete(&[b_label].into_iter().collect())?;
            let zc = z.delete(&[c_label].into_iter().collect())?;
            if r == 4 {
                if iso::are_isomorphic(&zb, &s8)?.is_none() {
                    problems.push("Z4 \\ b4 is not S8".into());
                }
                if iso::are_isomorphic(&zc, &ag)?.is_none() {
                    problems.push("Z4 \\ c4 is not AG(3,2)".into());
                }
            }
            if !iso::is_selfdual(&zb)? {
                problems.push(format!("Z{r} \\ b{r} is not self-dual"));
            }
            if !iso::is_selfdual(&zc)? {
                problems.push(format!("Z{r} \\ c{r} is not self-dual"));
            }
            let cut = z.delete(&[b_label, c_label].into_iter().collect())?;
            let smaller_dual = if r == 4 {
                cx.catalog.get("F7*")?
            } else {
                spike(r - 1)?.dual()
            };
            if iso::are_isomorphic(&cut, &smaller_dual)?.is_none() {
                problems.push(format!("Z{r} \\ {{b{r}, c{r}}} is not the dual of Z{}", r - 1));
            }
        }

        // Census from F7* avoiding P9 and P9*: every member is on the list
        // F7, F7*, Z_r, Z_r*, Z_r \ b_r, Z_r \ c_r.
        let census = cx.census_cached("F7*", &["P9", "P9*"], 12, 6, true)?;
        let mut list_keys = std::collections::BTreeSet::new();
        for name in ["F7", "F7*"] {
            list_keys.insert(iso::canonical_form(&cx.catalog.get(name)?)?);
        }
        for r in 4usize..=6 {
            let z = spike(r)?;
            for m in [
                z.clone(),
                z.dual(),
                z.delete(&[2 * r as u32].into_iter().collect())?,
                z.delete(&[2 * r as u32 + 1].into_iter().collect())?,
            ] {
                if m.size() <= 12 {
                    list_keys.insert(iso::canonical_form(&m)?);
                }
            }
        }
        let mut members = 0usize;
        for node in &census.members {
            members += 1;
            if !list_keys.contains(&node.key) {
                problems.push(format!(
                    "census member of size {} rank {} ({}) is outside the spike list",
                    node.size,
                    node.rank,
                    node.key.short_hash()
                ));
            }
        }

        if problems.is_empty() {
            Ok((
                ClaimStatus::Pass,
                format!(
                    "extension chains match; spike identities hold for ranks 4, 5, 6; all \
                     {members} census members from F7* avoiding P9 and P9* lie on the spike list"
                ),
            ))
        } else {
            Ok((ClaimStatus::Fail, problems.join("; ")))
        }
    }
}

pub struct SplitterOrderingEquivalence;

impl Claim for SplitterOrderingEquivalence {
    fn id(&self) -> &'static str {
        "SST.EQ"
    }
    fn paper_ref(&self) -> &'static str {
        "the splitter ordering: at most two consecutive extensions, then the triad row"
    }
    fn run(&self, cx: &VerifyCtx) -> Result<(ClaimStatus, String)> {
        let mut problems = Vec::new();
        let mut notes = Vec::new();
        for seed in ["P9", "E5"] {
            let pruned = cx.census_cached(seed, &["E4"], 12, 6, true)?;
            let full = cx.census_cached(seed, &["E4"], 12, 6, false)?;
            let pk = pruned.keys();
            let fk = full.keys();
            if pk != fk {
                let only_pruned: Vec<String> =
                    pk.difference(&fk).map(|k| k.short_hash()).collect();
                let only_full: Vec<String> =
                    fk.difference(&pk).map(|k| k.short_hash()).collect();
                problems.push(format!(
                    "seed {seed}: pruned-only {only_pruned:?}, closure-only {only_full:?}"
                ));
            } else {
                notes.push(format!("{seed}: {} classes", pk.len()));
            }
        }
        if problems.is_empty() {
            Ok((
                ClaimStatus::Pass,
                format!(
                    "splitter-ordered and exhaustive censuses agree up to 12 elements ({})",
                    notes.join(", ")
                ),
            ))
        } else {
            Ok((ClaimStatus::Fail, problems.join("; ")))
        }
    }
}
