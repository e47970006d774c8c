//! Fixture-corruption controls: every claim family must notice a flipped bit
//! in the catalog value it checks.

use matx_core::catalog::Catalog;
use matx_core::verify::{verify_claim, ClaimStatus, VerifyCtx};
use matx_core::BinaryMatroid;

/// The entry's D matrix with one bit flipped, as printed row strings.
fn flip_bit(catalog: &Catalog, name: &str, row: usize, col: usize) -> BinaryMatroid {
    let m = catalog.get(name).unwrap();
    let rows: Vec<String> = m
        .d()
        .rows()
        .enumerate()
        .map(|(i, r)| {
            if i + 1 == row {
                r.with(col, !r.get(col)).to_string()
            } else {
                r.to_string()
            }
        })
        .collect();
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    BinaryMatroid::from_rows(m.rank(), &refs, m.name()).unwrap()
}

fn expect_fail(catalog: &Catalog, claim: &str) -> String {
    let cx = VerifyCtx::new(catalog);
    let result = verify_claim(&cx, claim).unwrap();
    assert_eq!(
        result.status,
        ClaimStatus::Fail,
        "{claim} should fail against the corrupted catalog: {}",
        result.detail
    );
    result.detail
}

#[test]
fn corrupted_d1_fails_table_1a_naming_the_column() {
    let catalog = Catalog::standard();
    let corrupted = catalog.with_replaced("D1", flip_bit(&catalog, "D1", 1, 6)).unwrap();
    let detail = expect_fail(&corrupted, "T1A");
    // The diagnostic pinpoints an offending candidate column.
    assert!(
        detail.contains("1110") || detail.contains("0110"),
        "diagnostic does not name the column: {detail}"
    );
}

#[test]
fn corrupted_p9_fails_the_one_element_check() {
    let catalog = Catalog::standard();
    let corrupted = catalog.with_replaced("P9", flip_bit(&catalog, "P9", 2, 3)).unwrap();
    expect_fail(&corrupted, "L21.sep");
}

#[test]
fn corrupted_c_fails_stage_one_witnesses() {
    let catalog = Catalog::standard();
    let corrupted = catalog.with_replaced("C", flip_bit(&catalog, "C", 3, 2)).unwrap();
    expect_fail(&corrupted, "L22.stage1");
}

#[test]
fn corrupted_m12_fails_the_splitter_stage() {
    let catalog = Catalog::standard();
    let corrupted = catalog.with_replaced("M12", flip_bit(&catalog, "M12", 6, 1)).unwrap();
    expect_fail(&corrupted, "L22.stage2");
}

#[test]
fn corrupted_z_fails_the_d2_branch() {
    let catalog = Catalog::standard();
    let corrupted = catalog.with_replaced("Z", flip_bit(&catalog, "Z", 5, 4)).unwrap();
    expect_fail(&corrupted, "TH11.d2");
}

#[test]
fn corrupted_r16_fails_the_inventory() {
    let catalog = Catalog::standard();
    let corrupted = catalog.with_replaced("R16", flip_bit(&catalog, "R16", 2, 9)).unwrap();
    expect_fail(&corrupted, "COR.i4c");
}

#[test]
fn corrupted_s8_fails_the_rank4_base_cases() {
    let catalog = Catalog::standard();
    let corrupted = catalog.with_replaced("S8", flip_bit(&catalog, "S8", 1, 2)).unwrap();
    expect_fail(&corrupted, "OX");
}
