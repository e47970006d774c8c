//! Named matroids, each carrying its construction provenance.
//!
//! Entries marked `Printed` are bit-exact transcriptions of displayed
//! matrices. `Reconstructed` entries come from an unambiguous recipe (for
//! example a coextension row listed in a census table) because their own
//! display is truncated or absent; `Derived` entries are computed from other
//! entries. The reconstruction identities are machine-checked by this
//! module's tests and again by the verification suite.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::generate::{coextend_by, extend_by, extension_candidates};
use crate::gf2::BitVec;
use crate::iso::{self, CanonicalKey};
use crate::matroid::BinaryMatroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Printed,
    Reconstructed,
    Derived,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Source::Printed => "printed",
            Source::Reconstructed => "reconstructed",
            Source::Derived => "derived",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub matroid: BinaryMatroid,
    pub source: Source,
    pub source_note: String,
}

pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: BTreeMap<String, usize>,
    canon_names: OnceLock<BTreeMap<CanonicalKey, String>>,
}

/// Rank-r binary spike: `[I_r | D]` where `D` has columns b_1..b_r with
/// zeros on the diagonal and ones elsewhere, plus the all-ones column c_r.
/// Ground labels: b_i is r+i, c_r is 2r+1.
pub fn spike(r: usize) -> Result<BinaryMatroid> {
    if r < 4 {
        return Err(Error::BadRank(r, "spikes start at rank 4"));
    }
    let width = r + 1;
    let full = (1u64 << width) - 1;
    let rows: Vec<BitVec> = (1..=r)
        .map(|i| BitVec::new(width, full ^ (1 << (width - i))).expect("fits"))
        .collect();
    let d = crate::gf2::BitMatrix::new(width, rows)?;
    BinaryMatroid::new(r, 2 * r + 1, d, Some(&format!("Z{r}")))
}

/// Binary projective geometry of the given rank: every nonzero column,
/// identity first, the rest ascending.
pub fn pg(rank: usize) -> Result<BinaryMatroid> {
    if rank != 3 && rank != 4 {
        return Err(Error::BadRank(rank, "only ranks 3 and 4 are catalogued"));
    }
    let cols: Vec<u64> = (1..1u64 << rank).filter(|v| v.count_ones() >= 2).collect();
    let d = crate::matroid::matrix_from_columns(rank, &cols);
    let n = (1 << rank) - 1;
    let name = if rank == 3 { "F7" } else { "PG(3,2)" };
    BinaryMatroid::new(rank, n, d, Some(name))
}

fn printed(name: &str, rank: usize, rows: &[&str], note: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_owned(),
        matroid: BinaryMatroid::from_rows(rank, rows, Some(name)).expect("transcribed matrix"),
        source: Source::Printed,
        source_note: note.to_owned(),
    }
}

impl Catalog {
    /// Builds the full catalog. Construction is deterministic; derived
    /// entries are computed from the printed ones.
    pub fn standard() -> Catalog {
        let mut entries: Vec<CatalogEntry> = Vec::new();

        let p9 = BinaryMatroid::from_rows(4, &["01111", "10111", "11010", "11110"], Some("P9"))
            .expect("P9");
        entries.push(CatalogEntry {
            name: "P9".into(),
            matroid: p9.clone(),
            source: Source::Reconstructed,
            source_note: "columns forced by the printed D1 (P9 plus one column) and E1 (P9 plus one row)".into(),
        });
        entries.push(CatalogEntry {
            name: "P9*".into(),
            matroid: p9.dual().with_default_labels().with_name("P9*"),
            source: Source::Reconstructed,
            source_note: "dual of P9".into(),
        });

        let f7 = pg(3).expect("F7");
        entries.push(CatalogEntry {
            name: "F7".into(),
            matroid: f7.clone(),
            source: Source::Reconstructed,
            source_note: "PG(2,2): all seven nonzero columns of width 3".into(),
        });
        entries.push(CatalogEntry {
            name: "F7*".into(),
            matroid: f7.dual().with_default_labels().with_name("F7*"),
            source: Source::Reconstructed,
            source_note: "dual of F7".into(),
        });

        let z4 = spike(4).expect("Z4");
        let s8 = z4
            .delete(&[8].into_iter().collect())
            .expect("b4 is label 8")
            .with_default_labels()
            .with_name("S8");
        let ag32 = z4
            .delete(&[9].into_iter().collect())
            .expect("c4 is label 9")
            .with_default_labels()
            .with_name("AG(3,2)");
        entries.push(CatalogEntry {
            name: "S8".into(),
            matroid: s8,
            source: Source::Derived,
            source_note: "Z4 \\ b4".into(),
        });
        entries.push(CatalogEntry {
            name: "AG(3,2)".into(),
            matroid: ag32,
            source: Source::Derived,
            source_note: "Z4 \\ c4".into(),
        });
        entries.push(CatalogEntry {
            name: "W4".into(),
            matroid: BinaryMatroid::from_rows(4, &["1001", "1100", "0110", "0011"], Some("W4"))
                .expect("W4"),
            source: Source::Reconstructed,
            source_note: "4-wheel: spokes I4, rim columns 1100 0110 0011 1001".into(),
        });

        // Rank-4 extensions of P9 and their extensions (Table 1a chain).
        entries.push(printed("D1", 4, &["011111", "101111", "110101", "111100"], "displayed with Lemma 2.1"));
        entries.push(printed("D2", 4, &["011111", "101110", "110100", "111101"], "displayed with Lemma 2.1"));
        entries.push(printed("D3", 4, &["011110", "101110", "110101", "111101"], "displayed with Lemma 2.1"));
        entries.push(printed("X1", 4, &["0111111", "1011100", "1101001", "1111010"], "displayed with Theorem 1.1 (D2 plus column 1010)"));
        entries.push(printed("X3", 4, &["0111110", "1011100", "1101001", "1111011"], "displayed with Theorem 1.1 (D2 plus column 0011)"));
        {
            let d1 = &entries.iter().find(|e| e.name == "D1").expect("D1").matroid;
            let x2 = extend_by(d1, &BitVec::parse("0011").expect("col"))
                .expect("X2")
                .with_name("X2");
            entries.push(CatalogEntry {
                name: "X2".into(),
                matroid: x2,
                source: Source::Derived,
                source_note: "D1 plus column 0011 (Table 1a; equals D3 plus 1110 up to isomorphism)".into(),
            });
        }
        {
            let x1 = entries.iter().find(|e| e.name == "X1").expect("X1").matroid.clone();
            let y1 = extend_by(&x1, &BitVec::parse("0011").expect("col"))
                .expect("Y1")
                .with_name("Y1");
            let y2 = extend_by(&x1, &BitVec::parse("1110").expect("col"))
                .expect("Y2")
                .with_name("Y2");
            entries.push(CatalogEntry {
                name: "Y1".into(),
                matroid: y1,
                source: Source::Derived,
                source_note: "X1 plus column 0011 (Table 1a)".into(),
            });
            entries.push(CatalogEntry {
                name: "Y2".into(),
                matroid: y2,
                source: Source::Derived,
                source_note: "X1 plus column 1110 (Table 1a)".into(),
            });
        }

        // Coextensions of P9 (Table 1b class representatives, displayed in
        // full with Lemma 2.1).
        for (name, last) in [
            ("E1", "11000"),
            ("E2", "11011"),
            ("E3", "11001"),
            ("E4", "01001"),
            ("E5", "10100"),
            ("E6", "00101"),
            ("E6*", "00111"),
            ("E7", "00011"),
        ] {
            entries.push(printed(
                name,
                5,
                &["01111", "10111", "11010", "11110", last],
                "displayed with Lemma 2.1",
            ));
        }

        entries.push(printed(
            "E5-lemma",
            5,
            &["01111", "10110", "11011", "11110", "11000"],
            "the representation of E5 used from Lemma 2.2 onwards",
        ));

        // Extensions of E5 without an E4-minor (Table 2a) and their
        // extensions, all in the Lemma 2.2 coordinates.
        entries.push(printed("A", 5, &["011110", "101100", "110111", "111100", "110001"], "displayed with Lemma 2.2 (E5 plus column 00101)"));
        entries.push(printed("B", 5, &["011111", "101100", "110110", "111101", "110001"], "displayed with Lemma 2.2 (E5 plus column 10011)"));
        entries.push(printed("C", 5, &["011111", "101101", "110110", "111100", "110001"], "displayed with Lemma 2.2 (E5 plus column 11001)"));
        entries.push(printed("D", 5, &["0111100", "1011000", "1101111", "1111001", "1100010"], "displayed with Lemma 2.2 (A plus column 00110)"));
        entries.push(printed("E", 5, &["0111100", "1011001", "1101110", "1111001", "1100011"], "displayed with Lemma 2.2 (A plus column 01011)"));
        entries.push(printed("F", 5, &["0111101", "1011001", "1101110", "1111000", "1100011"], "displayed with Lemma 2.2 (A plus column 11001)"));
        entries.push(printed("G", 5, &["0111101", "1011001", "1101111", "1111000", "1100011"], "displayed with Lemma 2.2 (A plus column 11101)"));
        entries.push(printed("Z", 5, &["011111", "101110", "110100", "111101", "000111"], "displayed with Theorem 1.1 (D2 plus row 000111)"));

        {
            let c = entries.iter().find(|e| e.name == "C").expect("C").matroid.clone();
            let m12 = coextend_by(&c, &BitVec::parse("100111").expect("row"))
                .expect("M12")
                .with_name("M12");
            entries.push(CatalogEntry {
                name: "M12".into(),
                matroid: m12,
                source: Source::Reconstructed,
                source_note: "C plus coextension row 100111 (Table 3, coext 12); the introductory display is truncated".into(),
            });
        }

        // R17 and R16 carry reconstructed labellings. Their displayed
        // matrices use different coordinates from the introduction's (whose
        // own display is truncated), while the deletion identities
        // R16 = R17 \ 17 and R10 = R16 \ {11..16} are stated against the
        // introduction's labels. The identities pin those labels inside the
        // displayed matrices: column 3 is the unique column of the R17
        // display whose removal leaves R16, and deleting the R16 display's
        // columns 1, 2, 3, 4, 5, 9 one at a time is the least nested chain
        // of internally 4-connected restrictions ending at the regular
        // self-dual 10-element matroid.
        {
            let d = crate::gf2::BitMatrix::parse_rows(&[
                "011110000111",
                "101100011011",
                "110111101001",
                "111100110100",
                "110001010111",
            ])
            .expect("R17 rows");
            let mut labels: Vec<u32> = (1..=17).collect();
            labels.swap(2, 16); // column 3 is element 17
            let r17 = BinaryMatroid::with_labels(5, 17, d, labels, Some("R17")).expect("R17");
            entries.push(CatalogEntry {
                name: "R17".into(),
                matroid: r17,
                source: Source::Printed,
                source_note: "the full 5x12 display (E5 plus all seven columns without an \
                              E4-minor); element 17 is display column 3, the unique column \
                              whose deletion leaves R16"
                    .into(),
            });
        }
        {
            let d = crate::gf2::BitMatrix::parse_rows(&[
                "01111100011",
                "10111001101",
                "11010010111",
                "11110111000",
                "00011111110",
            ])
            .expect("R16 rows");
            let labels: Vec<u32> = vec![16, 15, 14, 13, 12, 1, 2, 3, 11, 4, 5, 6, 7, 8, 9, 10];
            let r16 = BinaryMatroid::with_labels(5, 16, d, labels, Some("R16")).expect("R16");
            entries.push(CatalogEntry {
                name: "R16".into(),
                matroid: r16,
                source: Source::Printed,
                source_note: "the full 5x11 display (Z plus the five listed columns); elements \
                              16..11 are display columns 1, 2, 3, 4, 5, 9, the least nested \
                              internally-4-connected deletion chain ending at R10"
                    .into(),
            });
        }

        {
            let r16 = entries.iter().find(|e| e.name == "R16").expect("R16").matroid.clone();
            let r10 = r16
                .delete(&(11..=16).collect())
                .expect("labels 11..16")
                .with_default_labels()
                .with_name("R10");
            entries.push(CatalogEntry {
                name: "R10".into(),
                matroid: r10,
                source: Source::Derived,
                source_note: "R16 \\ {11,...,16}; validated as 10-element, self-dual and regular".into(),
            });
        }

        entries.push(CatalogEntry {
            name: "PG(3,2)".into(),
            matroid: pg(4).expect("PG(3,2)"),
            source: Source::Reconstructed,
            source_note: "all fifteen nonzero columns of width 4".into(),
        });

        for r in 4..=6 {
            let z = spike(r).expect("spike");
            let b = z
                .delete(&[(2 * r) as u32].into_iter().collect())
                .expect("b_r label")
                .with_default_labels()
                .with_name(&format!("Z{r}\\b{r}"));
            let c = z
                .delete(&[(2 * r + 1) as u32].into_iter().collect())
                .expect("c_r label")
                .with_default_labels()
                .with_name(&format!("Z{r}\\c{r}"));
            entries.push(CatalogEntry {
                name: format!("Z{r}"),
                matroid: z,
                source: Source::Derived,
                source_note: "rank-r spike: zeros on the diagonal, ones elsewhere, plus the all-ones column".into(),
            });
            entries.push(CatalogEntry {
                name: format!("Z{r}\\b{r}"),
                matroid: b,
                source: Source::Derived,
                source_note: format!("Z{r} minus b{r} (ground label {})", 2 * r),
            });
            entries.push(CatalogEntry {
                name: format!("Z{r}\\c{r}"),
                matroid: c,
                source: Source::Derived,
                source_note: format!("Z{r} minus c{r} (ground label {})", 2 * r + 1),
            });
        }

        // Y: the extension class of Z that is neither D nor F. No matrix is
        // displayed for it; store the first candidate column that produces
        // the third class.
        {
            let z = entries.iter().find(|e| e.name == "Z").expect("Z").matroid.clone();
            let e4 = entries.iter().find(|e| e.name == "E4").expect("E4").matroid.clone();
            let d = entries.iter().find(|e| e.name == "D").expect("D").matroid.clone();
            let f = entries.iter().find(|e| e.name == "F").expect("F").matroid.clone();
            let mut y = None;
            for col in extension_candidates(&z) {
                let built = extend_by(&z, &col).expect("candidate");
                if iso::has_minor(&built, &e4).expect("minor search").is_some() {
                    continue;
                }
                if iso::are_isomorphic(&built, &d).expect("iso").is_some()
                    || iso::are_isomorphic(&built, &f).expect("iso").is_some()
                {
                    continue;
                }
                y = Some((built.with_name("Y"), col));
                break;
            }
            let (y, col) = y.expect("Z has a third extension class");
            entries.push(CatalogEntry {
                name: "Y".into(),
                matroid: y,
                source: Source::Derived,
                source_note: format!(
                    "the extension class of Z that is neither D nor F; first realizing column {col}"
                ),
            });
        }

        let index = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.name.clone(), i))
            .collect();
        Catalog {
            entries,
            index,
            canon_names: OnceLock::new(),
        }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Result<&CatalogEntry> {
        self.index
            .get(name)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| Error::UnknownName(name.to_owned()))
    }

    /// Fresh immutable value for a catalog name.
    pub fn get(&self, name: &str) -> Result<BinaryMatroid> {
        Ok(self.entry(name)?.matroid.clone())
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    /// Canonical key -> preferred entry name. Aliases such as Z4\b4 (= S8)
    /// resolve to the name registered first.
    pub fn canon_names(&self) -> &BTreeMap<CanonicalKey, String> {
        self.canon_names.get_or_init(|| {
            let mut map = BTreeMap::new();
            for e in &self.entries {
                let key = iso::canonical_form(&e.matroid).expect("catalog sizes fit");
                map.entry(key).or_insert_with(|| e.name.clone());
            }
            map
        })
    }

    /// Copy of the catalog with one entry's matroid replaced. Intended for
    /// negative-control tests that corrupt a known value.
    pub fn with_replaced(&self, name: &str, matroid: BinaryMatroid) -> Result<Catalog> {
        let mut entries = self.entries.clone();
        let &i = self
            .index
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_owned()))?;
        entries[i].matroid = matroid;
        Ok(Catalog {
            entries,
            index: self.index.clone(),
            canon_names: OnceLock::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn cat() -> Catalog {
        Catalog::standard()
    }

    fn isomorphic(a: &BinaryMatroid, b: &BinaryMatroid) -> bool {
        iso::are_isomorphic(a, b).unwrap().is_some()
    }

    #[test]
    fn catalog_resolves_names() {
        let c = cat();
        assert_eq!(c.get("R17").unwrap().size(), 17);
        assert_eq!(c.get("M12").unwrap().rank(), 6);
        assert!(matches!(c.get("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn p9_is_forced_by_d1_and_e1() {
        let c = cat();
        let p9 = c.get("P9").unwrap();
        let from_d1 = c.get("D1").unwrap().delete(&[10].into_iter().collect()).unwrap();
        let from_e1 = c.get("E1").unwrap().contract(&[5].into_iter().collect()).unwrap();
        assert!(isomorphic(&p9, &from_d1));
        assert!(isomorphic(&p9, &from_e1));
    }

    #[test]
    fn e4_reconstruction_checks() {
        let c = cat();
        let e4 = c.get("E4").unwrap();
        let rebuilt = coextend_by(&c.get("P9").unwrap(), &BitVec::parse("01001").unwrap()).unwrap();
        assert!(isomorphic(&e4, &rebuilt));
        assert_eq!(e4.size(), 10);
        assert!(e4.is_3connected().unwrap());
        assert!(iso::is_selfdual(&e4).unwrap());
    }

    #[test]
    fn e5_lemma_representation_is_e5() {
        let c = cat();
        assert!(isomorphic(&c.get("E5").unwrap(), &c.get("E5-lemma").unwrap()));
        assert!(iso::is_selfdual(&c.get("E5").unwrap()).unwrap());
    }

    #[test]
    fn m12_is_also_a_coextension_of_b() {
        let c = cat();
        let via_b = coextend_by(&c.get("B").unwrap(), &BitVec::parse("100111").unwrap()).unwrap();
        assert!(isomorphic(&via_b, &c.get("M12").unwrap()));
    }

    #[test]
    fn r16_is_r17_minus_17() {
        let c = cat();
        let cut = c.get("R17").unwrap().delete(&[17].into_iter().collect()).unwrap();
        assert_eq!(
            iso::canonical_form(&cut).unwrap(),
            iso::canonical_form(&c.get("R16").unwrap()).unwrap()
        );
    }

    #[test]
    fn z_is_d2_plus_the_printed_row() {
        let c = cat();
        let built = coextend_by(&c.get("D2").unwrap(), &BitVec::parse("000111").unwrap()).unwrap();
        assert_eq!(built.normal_form_bytes(), c.get("Z").unwrap().normal_form_bytes());
    }

    #[test]
    fn r16_deletion_chain_is_internally_4connected() {
        let c = cat();
        let r16 = c.get("R16").unwrap();
        for low in 11..=16u32 {
            let dels: std::collections::BTreeSet<u32> = (low..=16).collect();
            let m = r16.delete(&dels).unwrap();
            assert!(
                m.is_internally_4connected().unwrap(),
                "R16 minus {{{low}..16}} must stay internally 4-connected"
            );
        }
    }

    #[test]
    fn r10_is_ten_element_selfdual_and_regular() {
        let c = cat();
        let r10 = c.get("R10").unwrap();
        assert_eq!(r10.size(), 10);
        assert!(iso::is_selfdual(&r10).unwrap());
        assert!(iso::has_minor(&r10, &c.get("F7").unwrap()).unwrap().is_none());
        assert!(iso::has_minor(&r10, &c.get("F7*").unwrap()).unwrap().is_none());
        assert!(r10.is_3connected().unwrap());
    }

    #[test]
    fn x2_from_d1_equals_x2_from_d3() {
        let c = cat();
        let alt = extend_by(&c.get("D3").unwrap(), &BitVec::parse("1110").unwrap()).unwrap();
        assert!(isomorphic(&alt, &c.get("X2").unwrap()));
    }

    #[test]
    fn w4_is_a_deletion_minor_of_p9() {
        let c = cat();
        let p9 = c.get("P9").unwrap();
        let w4 = c.get("W4").unwrap();
        let hit = (1..=9u32)
            .any(|x| isomorphic(&p9.delete(&[x].into_iter().collect()).unwrap(), &w4));
        assert!(hit, "P9 is a single-element extension of the 4-wheel");
    }

    #[test]
    fn s8_and_ag32_are_the_extensions_of_fano_dual() {
        let c = cat();
        let f7d = c.get("F7*").unwrap();
        let part = generate::classify(
            &f7d,
            generate::Mode::Extend,
            &generate::Filters {
                three_connected: true,
                excluded: vec![],
            },
            c.canon_names(),
        )
        .unwrap();
        let names: Vec<_> = part.classes.iter().filter_map(|x| x.name.clone()).collect();
        assert_eq!(part.classes.len(), 2);
        assert!(names.contains(&"S8".to_string()));
        assert!(names.contains(&"AG(3,2)".to_string()));
    }

    #[test]
    fn spike_identities() {
        let c = cat();
        // S8 and AG(3,2) are definitionally Z4 \ b4 and Z4 \ c4; the named
        // spike-deletion entries must agree.
        assert!(isomorphic(&c.get("S8").unwrap(), &c.get("Z4\\b4").unwrap()));
        assert!(isomorphic(&c.get("AG(3,2)").unwrap(), &c.get("Z4\\c4").unwrap()));
        // Z_r \ {b_r, c_r} is the dual of the next spike down.
        for r in [5usize, 6] {
            let z = spike(r).unwrap();
            let cut = z
                .delete(&[(2 * r) as u32, (2 * r + 1) as u32].into_iter().collect())
                .unwrap();
            let smaller_dual = spike(r - 1).unwrap().dual();
            assert!(isomorphic(&cut, &smaller_dual));
        }
        // Z4 \ {b4, c4} against the rank-3 spike, which is the Fano plane.
        let cut = spike(4)
            .unwrap()
            .delete(&[8u32, 9].into_iter().collect())
            .unwrap();
        assert!(isomorphic(&cut, &c.get("F7*").unwrap()));
        // One-element spike deletions are self-dual.
        for r in [4usize, 5, 6] {
            let z = spike(r).unwrap();
            let b = z.delete(&[(2 * r) as u32].into_iter().collect()).unwrap();
            let cc = z.delete(&[(2 * r + 1) as u32].into_iter().collect()).unwrap();
            assert!(iso::is_selfdual(&b).unwrap());
            assert!(iso::is_selfdual(&cc).unwrap());
        }
    }

    #[test]
    fn fano_dual_d_part_is_the_transpose() {
        let c = cat();
        assert_eq!(
            c.get("F7").unwrap().d().transpose(),
            *c.get("F7*").unwrap().d()
        );
    }

    #[test]
    fn pg_catalog_shapes() {
        let c = cat();
        assert!(isomorphic(&pg(3).unwrap(), &c.get("F7").unwrap()));
        let pg4 = c.get("PG(3,2)").unwrap();
        assert_eq!((pg4.rank(), pg4.size()), (4, 15));
        assert!(generate::extension_candidates(&pg4).is_empty());
        assert!(matches!(pg(5), Err(Error::BadRank(5, _))));
        assert!(matches!(spike(3), Err(Error::BadRank(3, _))));
    }

    #[test]
    fn canon_names_prefer_primary_entries() {
        let c = cat();
        let names = c.canon_names();
        let k = iso::canonical_form(&c.get("Z4\\b4").unwrap()).unwrap();
        assert_eq!(names[&k], "S8");
        let k = iso::canonical_form(&c.get("E5-lemma").unwrap()).unwrap();
        assert_eq!(names[&k], "E5");
    }

    #[test]
    fn with_replaced_swaps_one_entry() {
        let c = cat();
        let corrupt = c
            .with_replaced("D1", c.get("D2").unwrap())
            .unwrap();
        assert!(isomorphic(&corrupt.get("D1").unwrap(), &c.get("D2").unwrap()));
        assert!(corrupt.with_replaced("nope", c.get("D2").unwrap()).is_err());
    }
}
