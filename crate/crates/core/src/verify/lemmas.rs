//! The Lemma 2.1 one-element check and the three stages of Lemma 2.2.

use std::collections::BTreeSet;

use super::data::TABLE_3;
use super::{Claim, ClaimStatus, VerifyCtx};
use crate::error::Result;
use crate::generate::{
    classify, coextend_by, extend_by, extension_candidates, coextension_candidates, is_splitter,
    triad_coextend, Filters, Mode,
};
use crate::gf2::BitVec;
use crate::iso::{self, MinorWitness};
use crate::matroid::BinaryMatroid;

fn set(labels: &[u32]) -> BTreeSet<u32> {
    labels.iter().copied().collect()
}

fn circuit_and_cocircuit(m: &BinaryMatroid, s: &BTreeSet<u32>) -> Result<bool> {
    Ok(m.is_circuit(s)? && m.is_cocircuit(s)?)
}

pub struct Lemma21Separation;

impl Claim for Lemma21Separation {
    fn id(&self) -> &'static str {
        "L21.sep"
    }
    fn paper_ref(&self) -> &'static str {
        "Lemma 2.1: the sufficient one-element check around P9's 3-separation"
    }
    fn run(&self, cx: &VerifyCtx) -> Result<(ClaimStatus, String)> {
        let mut problems = Vec::new();
        let p9 = cx.catalog.get("P9")?;
        let a = set(&[1, 2, 5, 6]);
        let a_shift = set(&[1, 2, 6, 7]);

        // The separation itself.
        if !circuit_and_cocircuit(&p9, &a)? {
            problems.push("{1,2,5,6} is not both a circuit and a cocircuit in P9".into());
        }
        if p9.lambda(&a)? != 2 {
            problems.push("lambda({1,2,5,6}) != 2 in P9".into());
        }

        // Named representatives.
        for name in ["D1", "D3"] {
            if !circuit_and_cocircuit(&cx.catalog.get(name)?, &a)? {
                problems.push(format!("{{1,2,5,6}} fails in {name}"));
            }
        }
        for name in ["E1", "E2", "E3", "E6", "E6*", "E7"] {
            if !circuit_and_cocircuit(&cx.catalog.get(name)?, &a_shift)? {
                problems.push(format!("{{1,2,6,7}} fails in {name}"));
            }
        }

        // Every column is checked: the failing extension columns must be
        // exactly the D2 group of Table 1a.
        let mut failing_cols = Vec::new();
        for col in extension_candidates(&p9) {
            let ext = extend_by(&p9, &col)?;
            if !circuit_and_cocircuit(&ext, &a)? {
                failing_cols.push(col.to_string());
            }
        }
        let expected_cols: Vec<String> =
            ["0101", "0110", "1001", "1010"].iter().map(|s| s.to_string()).collect();
        if failing_cols != expected_cols {
            problems.push(format!(
                "failing extension columns {failing_cols:?}, expected the D2 group {expected_cols:?}"
            ));
        }

        // Every row is checked: the failing coextension rows must be exactly
        // the E4 and E5 groups of Table 1b.
        let mut failing_rows = Vec::new();
        for row in coextension_candidates(&p9) {
            let coext = coextend_by(&p9, &row)?;
            if !circuit_and_cocircuit(&coext, &a_shift)? {
                failing_rows.push(row.to_string());
            }
        }
        let expected_rows: Vec<String> = [
            "01001", "01010", "01011", "01100", "01101", "01110", "10001", "10010", "10011",
            "10100", "10101", "10110",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        if failing_rows != expected_rows {
            problems.push(format!(
                "failing coextension rows {failing_rows:?}, expected the E4 and E5 groups"
            ));
        }

        // The failing classes themselves.
        if !cx.catalog.get("D2")?.is_internally_4connected()? {
            problems.push("D2 is not internally 4-connected".into());
        }
        for name in ["E4", "E5"] {
            if !iso::is_selfdual(&cx.catalog.get(name)?)? {
                problems.push(format!("{name} is not self-dual"));
            }
        }

        if problems.is_empty() {
            Ok((
                ClaimStatus::Pass,
                "the one-element check isolates exactly the classes D2 (extensions) and E4, E5 \
                 (coextensions); D2 is internally 4-connected; E4 and E5 are self-dual"
                    .into(),
            ))
        } else {
            Ok((ClaimStatus::Fail, problems.join("; ")))
        }
    }
}

/// Looks up the printed rows of `base`'s `coext k` class in Table 3.
fn table3_class(base: &str, k: usize) -> &'static [&'static str] {
    TABLE_3
        .iter()
        .find(|(b, _)| *b == base)
        .map(|(_, classes)| classes[k - 1])
        .expect("base is A, B or C")
}

/// Verifies a printed witness `(base, coext k)/contract \ delete ~ E4`
/// bit for bit: the isomorphism found is replayed through the minor
/// operations. The identity must hold for one of the class's printed rows
/// (its first row in every observed case); the realizing row is reported.
fn check_e4_witness(
    cx: &VerifyCtx,
    base_name: &str,
    coext_index: usize,
    contract: &[u32],
    delete: &[u32],
) -> Result<std::result::Result<String, String>> {
    let base = cx.catalog.get(base_name)?;
    let e4 = cx.catalog.get("E4")?;
    let rows = table3_class(base_name, coext_index);
    for (i, row) in rows.iter().enumerate() {
        let m = coextend_by(&base, &BitVec::parse(row).expect("printed row"))?;
        let minor = m.contract(&set(contract))?.delete(&set(delete))?;
        if let Some(bijection) = iso::are_isomorphic(&minor, &e4)? {
            let witness = MinorWitness {
                contract_set: set(contract),
                delete_set: set(delete),
                bijection,
            };
            if iso::verify_witness(&m, &e4, &witness) {
                let note = if i == 0 {
                    format!("({base_name},coext{coext_index}) row {row}")
                } else {
                    format!("({base_name},coext{coext_index}) realized by later row {row}")
                };
                return Ok(Ok(note));
            }
        }
    }
    Ok(Err(format!(
        "({base_name},coext{coext_index})/{contract:?}\\{delete:?} is not E4 for any printed row"
    )))
}

pub struct Lemma22Stage1;

impl Claim for Lemma22Stage1 {
    fn id(&self) -> &'static str {
        "L22.stage1"
    }
    fn paper_ref(&self) -> &'static str {
        "Lemma 2.2 proof, first stage: coextensions of A, B and C"
    }
    fn run(&self, cx: &VerifyCtx) -> Result<(ClaimStatus, String)> {
        let mut problems = Vec::new();
        let mut notes = Vec::new();

        // The five printed minor identities.
        let witnesses: [(&str, usize, &[u32], &[u32]); 5] = [
            ("A", 11, &[11], &[3]),
            ("C", 8, &[12], &[2]),
            ("C", 9, &[12], &[1]),
            ("C", 10, &[12], &[10]),
            ("C", 14, &[12], &[6]),
        ];
        for (base, k, contract, delete) in witnesses {
            match check_e4_witness(cx, base, k, contract, delete)? {
                Ok(note) => notes.push(note),
                Err(e) => problems.push(e),
            }
        }

        // (B, coext 8) and (C, coext 12) are the same matroid, M12, and it
        // has no E4-minor.
        let b8 = coextend_by(
            &cx.catalog.get("B")?,
            &BitVec::parse(table3_class("B", 8)[0]).expect("printed"),
        )?;
        let c12 = coextend_by(
            &cx.catalog.get("C")?,
            &BitVec::parse(table3_class("C", 12)[0]).expect("printed"),
        )?;
        let m12 = cx.catalog.get("M12")?;
        if iso::are_isomorphic(&b8, &c12)?.is_none() {
            problems.push("(B,coext8) and (C,coext12) are not isomorphic".into());
        }
        if iso::are_isomorphic(&b8, &m12)?.is_none() {
            problems.push("(B,coext8) is not M12".into());
        }
        let e4 = cx.catalog.get("E4")?;
        if iso::has_minor(&m12, &e4)?.is_some() {
            problems.push("M12 has an E4-minor".into());
        }

        if problems.is_empty() {
            Ok((
                ClaimStatus::Pass,
                format!(
                    "five printed witnesses replay bit for bit [{}]; (B,coext8) = (C,coext12) = \
                     M12 with no E4-minor",
                    notes.join(", ")
                ),
            ))
        } else {
            Ok((ClaimStatus::Fail, problems.join("; ")))
        }
    }
}

pub struct Lemma22Stage2;

impl Claim for Lemma22Stage2 {
    fn id(&self) -> &'static str {
        "L22.stage2"
    }
    fn paper_ref(&self) -> &'static str {
        "Lemma 2.2 proof, second stage: M12 is a splitter"
    }
    fn run(&self, cx: &VerifyCtx) -> Result<(ClaimStatus, String)> {
        let mut problems = Vec::new();
        let m12 = cx.catalog.get("M12")?;
        let e4 = cx.catalog.get("E4")?;
        if !is_splitter(&m12, &[e4])? {
            problems.push("M12 is not a splitter for the E4-free class".to_owned());
        }
        if !iso::is_selfdual(&m12)? {
            problems.push("M12 is not self-dual".into());
        }
        if !m12.is_3connected()? {
            problems.push("M12 is not 3-connected".into());
        }
        if m12.is_internally_4connected()? {
            problems.push("M12 is internally 4-connected, expected not".into());
        }
        if problems.is_empty() {
            Ok((
                ClaimStatus::Pass,
                "M12 is a self-dual 3-connected splitter and is not internally 4-connected".into(),
            ))
        } else {
            Ok((ClaimStatus::Fail, problems.join("; ")))
        }
    }
}

pub struct Lemma22Stage3;

impl Claim for Lemma22Stage3 {
    fn id(&self) -> &'static str {
        "L22.stage3"
    }
    fn paper_ref(&self) -> &'static str {
        "Lemma 2.2 proof, third stage: D, E, F, G, the triad coextensions and R17"
    }
    fn run(&self, cx: &VerifyCtx) -> Result<(ClaimStatus, String)> {
        let mut problems = Vec::new();
        let e4 = cx.catalog.get("E4")?;

        // E4-free extension classes of A, B and C, with the printed
        // column-to-class assignments for A.
        let filters = Filters {
            three_connected: false,
            excluded: vec![e4.clone()],
        };
        let a_part = classify(
            &cx.catalog.get("A")?,
            Mode::Extend,
            &filters,
            cx.catalog.canon_names(),
        )?;
        let expected_a: [(&str, &[&str]); 4] = [
            ("D", &["00110", "01100", "10011"]),
            ("E", &["01011"]),
            ("F", &["11001"]),
            ("G", &["11101"]),
        ];
        if a_part.classes.len() != 4 {
            problems.push(format!(
                "A has {} E4-free extension classes, expected 4",
                a_part.classes.len()
            ));
        }
        for (name, cols) in expected_a {
            let Some(class) = a_part.class_named(name) else {
                problems.push(format!("A has no E4-free extension class named {name}"));
                continue;
            };
            let got: Vec<String> = class.members.iter().map(|v| v.to_string()).collect();
            if got != cols {
                problems.push(format!("A -> {name}: columns {got:?}, expected {cols:?}"));
            }
        }
        for (base, expected) in [("B", vec!["D", "F"]), ("C", vec!["F", "G"])] {
            let part = classify(
                &cx.catalog.get(base)?,
                Mode::Extend,
                &filters,
                cx.catalog.canon_names(),
            )?;
            let mut names: Vec<&str> =
                part.classes.iter().filter_map(|c| c.name.as_deref()).collect();
            names.sort_unstable();
            if part.classes.len() != expected.len() || names != expected {
                problems.push(format!(
                    "{base} extends (E4-free) to {names:?}, expected {expected:?}"
                ));
            }
        }

        // Adding all seven columns to E5 gives R17, internally 4-connected
        // and E4-free.
        let mut r17_built = cx.catalog.get("E5-lemma")?;
        for col in ["00101", "00110", "01011", "01100", "10011", "11001", "11101"] {
            r17_built = extend_by(&r17_built, &BitVec::parse(col).expect("printed"))?;
        }
        let r17 = cx.catalog.get("R17")?;
        if iso::are_isomorphic(&r17_built, &r17)?.is_none() {
            problems.push("E5 plus all seven columns is not R17".into());
        }
        if !r17.is_internally_4connected()? {
            problems.push("R17 is not internally 4-connected".into());
        }
        if iso::has_minor(&r17, &e4)?.is_some() {
            problems.push("R17 has an E4-minor".into());
        }

        // Triad coextensions of D, E, F and G all have E4-minors, with the
        // printed witnesses.
        let triads: [(&str, &[u32], &[u32]); 4] = [
            ("D", &[1], &[3, 11]),
            ("E", &[1], &[7, 11]),
            ("F", &[1], &[3, 11]),
            ("G", &[1], &[7, 11]),
        ];
        for (name, contract, delete) in triads {
            let base = cx.catalog.get(name)?;
            let n = base.size() as u32;
            let primed = triad_coextend(&base, n - 1, n)?;
            let minor = primed.contract(&set(contract))?.delete(&set(delete))?;
            match iso::are_isomorphic(&minor, &e4)? {
                Some(bijection) => {
                    let w = MinorWitness {
                        contract_set: set(contract),
                        delete_set: set(delete),
                        bijection,
                    };
                    if !iso::verify_witness(&primed, &e4, &w) {
                        problems.push(format!("{name}' witness does not replay"));
                    }
                }
                None => problems.push(format!(
                    "{name}'/{contract:?}\\{delete:?} is not E4"
                )),
            }
        }

        // Census: every rank-5 member with an E5-minor is a restriction of
        // R17.
        let census = cx.census_cached("E5", &["E4"], 17, 6, true)?;
        let mut rank5 = 0usize;
        for node in census.members.iter().filter(|n| n.rank == 5) {
            rank5 += 1;
            if iso::has_minor(&r17, &node.matroid)?.is_none() {
                problems.push(format!(
                    "rank-5 census member of size {} ({}) is not a restriction of R17",
                    node.size,
                    node.key.short_hash()
                ));
            }
        }

        if problems.is_empty() {
            Ok((
                ClaimStatus::Pass,
                format!(
                    "A, B, C extend E4-free to exactly D, E, F, G; E5 plus seven columns is R17 \
                     (internally 4-connected, E4-free); the four triad coextensions have their \
                     printed E4 witnesses; all {rank5} rank-5 census members are restrictions of \
                     R17"
                ),
            ))
        } else {
            Ok((ClaimStatus::Fail, problems.join("; ")))
        }
    }
}
