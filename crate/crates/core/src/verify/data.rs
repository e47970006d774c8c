//! Printed census-table data, transcribed bit for bit. Duplicated strings in
//! Table 4 are kept exactly as printed; the claim that consumes them reports
//! the anomalies.

/// Rank-4 extension groups: base matroid, then (class name, columns).
pub const TABLE_1A: &[(&str, &[(&str, &[&str])])] = &[
    (
        "P9",
        &[
            ("D1", &["1110"]),
            ("D2", &["1001", "0101", "0110", "1010"]),
            ("D3", &["0011"]),
        ],
    ),
    (
        "D1",
        &[
            ("X1", &["0101", "0110", "1001", "1010"]),
            ("X2", &["0011"]),
        ],
    ),
    (
        "D2",
        &[
            ("X1", &["1010", "1110"]),
            ("X3", &["0011", "0101", "0110"]),
        ],
    ),
    (
        "D3",
        &[
            ("X2", &["1110"]),
            ("X3", &["0101", "0110", "1001", "1010"]),
        ],
    ),
    (
        "X1",
        &[
            ("Y1", &["0011", "0101", "0110"]),
            ("Y2", &["1110"]),
        ],
    ),
    ("X2", &[("Y1", &["0101", "0110", "1001", "1010"])]),
    ("X3", &[("Y1", &["0101", "0110", "1010", "1110"])]),
];

/// Coextension rows of P9: (class name, rows).
pub const TABLE_1B: &[(&str, &[&str])] = &[
    ("E1", &["11000", "11111"]),
    ("E2", &["11011", "11100"]),
    ("E3", &["11001", "11101"]),
    (
        "E4",
        &["01001", "01010", "01101", "01110", "10001", "10010", "10101", "10110"],
    ),
    ("E5", &["01011", "01100", "10011", "10100"]),
    ("E6", &["00101", "00110"]),
    ("E6*", &["00111"]),
    ("E7", &["00011"]),
];

/// Extension columns of E5 (Lemma 2.2 coordinates): name, columns, E4-minor.
pub const TABLE_2A: &[(Option<&str>, &[&str], bool)] = &[
    (Some("A"), &["00101", "00110", "01011", "01100"], false),
    (Some("B"), &["10011"], false),
    (Some("C"), &["11001", "11101"], false),
    (None, &["00011", "00111", "01001", "01101"], true),
    (None, &["01010", "01110"], true),
    (None, &["10001", "10010", "11011", "11100"], true),
    (None, &["10101", "10110", "11000", "11111"], true),
];

/// Coextension rows of E5: name (dual of the Table 2a class), rows.
pub const TABLE_2B: &[(Option<&str>, &[&str])] = &[
    (Some("A*"), &["00111", "01001", "01010", "01100"]),
    (Some("B*"), &["10011"]),
    (Some("C*"), &["10101", "11101"]),
    (None, &["00011", "00101", "01011", "01101"]),
    (None, &["00110", "01110"]),
    (None, &["10001", "10010", "10111", "11100"]),
    (None, &["10100", "11001", "11010", "11111"]),
];

/// Coextension rows of A, B and C, grouped into the printed `coext k`
/// classes, in order.
pub const TABLE_3: &[(&str, &[&[&str]])] = &[
    (
        "A",
        &[
            &["000011", "000101", "001010", "011010", "101111", "111001"],
            &["000110", "110011", "110101"],
            &["000111", "101011", "111011"],
            &["001001", "010110", "011111"],
            &["001011", "011011", "100111"],
            &["001100", "011100", "110000"],
            &["001101", "010010", "010100", "011101", "101110", "111000"],
            &["001110", "011000", "101101", "110010", "110100", "111101"],
            &["001111", "011001", "100011", "100101", "101010", "111010"],
            &["010001", "100010", "100100"],
            &["010011", "010101", "100110"],
            &["010111"],
            &["100001", "101000", "111110"],
            &["101001", "110110", "111111"],
        ],
    ),
    (
        "B",
        &[
            &[
                "000011", "000101", "000110", "001001", "001010", "001111", "010010", "010100",
                "010111", "011000", "011011", "011110",
            ],
            &["000111", "001011", "010110", "011010"],
            &["001100", "010001", "011101"],
            &["001101", "001110", "010011", "010101", "011001", "011100"],
            &[
                "100001", "100010", "100100", "101000", "101101", "101110", "110000", "110011",
                "110101", "111001", "111100", "111111",
            ],
            &["100011", "100101", "101010", "101111", "111000", "111011"],
            &["100110", "101001", "110010", "110100", "110111", "111110"],
            &["100111", "101011", "111010"],
        ],
    ),
    (
        "C",
        &[
            &[
                "000011", "000101", "001001", "001111", "010010", "010100", "011000", "011110",
                "100010", "100100", "101000", "101110", "110011", "110101", "111001", "111111",
            ],
            &["000110", "010111"],
            &["000111", "010110", "100110", "110111"],
            &["001010", "011011"],
            &["001011", "011010", "101010", "111011"],
            &["001100", "011101"],
            &["001101", "011100", "101100", "111101"],
            &["001110", "010011", "010101", "011001"],
            &["010001"],
            &["100001", "110000"],
            &["100011", "100101", "101111", "111000"],
            &["100111"],
            &["101001", "110010", "110100", "111110"],
            &["101011", "111010"],
        ],
    ),
];

/// Coextension rows of D2 exactly as printed, including the duplicated
/// strings: (row label, catalog name, rows, relevant minors).
pub const TABLE_4: &[(&str, Option<&str>, &[&str], &[&str])] = &[
    (
        "A26",
        Some("A"),
        &["000011", "000101", "000110", "001111", "100111", "101000"],
        &["E5", "E6*", "E7"],
    ),
    ("A31", Some("Z"), &["000111"], &["E7", "R10"]),
    ("A23", None, &["001001", "010100", "011101"], &["E4", "E5"]),
    (
        "A20",
        None,
        &["001010", "001100", "010001", "010010", "011011", "011110"],
        &["E4", "E6"],
    ),
    (
        "A21",
        None,
        &["001011", "001101", "010101", "010110", "011001", "011100"],
        &["E4", "E5"],
    ),
    ("A24", None, &["001110", "010011", "011010"], &["E4"]),
    (
        "A15",
        None,
        &["100001", "101000", "101011", "101101", "110110", "111001"],
        &["E2", "E5"],
    ),
    (
        "A6",
        None,
        &["100010", "100100", "110000", "110101", "111100", "111111"],
        &["E1", "E4"],
    ),
    (
        "A16",
        None,
        &["100011", "100101", "110010", "110111", "111000", "111011"],
        &["E2", "E3", "E4", "E6*"],
    ),
    (
        "A7",
        None,
        &["100110", "101010", "101100", "101111", "110001", "111110"],
        &["E4", "E5"],
    ),
    (
        "A18",
        Some("C"),
        &["100111", "110011", "111010"],
        &["E3", "E5", "E6*", "E7"],
    ),
    ("A27", Some("B"), &["101001"], &["E5"]),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_row_counts_match_the_captions() {
        let t1a_p9: usize = TABLE_1A[0].1.iter().map(|(_, cols)| cols.len()).sum();
        assert_eq!(t1a_p9, 6);
        for (base, groups) in &TABLE_1A[1..4] {
            let total: usize = groups.iter().map(|(_, cols)| cols.len()).sum();
            assert_eq!(total, 5, "five columns per D-matroid ({base})");
        }
        for (base, groups) in &TABLE_1A[4..] {
            let total: usize = groups.iter().map(|(_, cols)| cols.len()).sum();
            assert_eq!(total, 4, "four columns per X-matroid ({base})");
        }
        let t1b: usize = TABLE_1B.iter().map(|(_, rows)| rows.len()).sum();
        assert_eq!(t1b, 22);
        let t2a: usize = TABLE_2A.iter().map(|(_, cols, _)| cols.len()).sum();
        assert_eq!(t2a, 21);
        let t2b: usize = TABLE_2B.iter().map(|(_, rows)| rows.len()).sum();
        assert_eq!(t2b, 21);
        for (base, classes) in TABLE_3 {
            let total: usize = classes.iter().map(|c| c.len()).sum();
            assert_eq!(total, 52, "52 candidate rows for {base}");
        }
        assert_eq!(TABLE_3[0].1.len(), 14);
        assert_eq!(TABLE_3[1].1.len(), 8);
        assert_eq!(TABLE_3[2].1.len(), 14);
        // Table 4 prints 53 slots but only 51 distinct strings.
        let printed: Vec<&str> = TABLE_4.iter().flat_map(|(_, _, rows, _)| rows.iter().copied()).collect();
        assert_eq!(printed.len(), 53);
        let distinct: std::collections::BTreeSet<&str> = printed.iter().copied().collect();
        assert_eq!(distinct.len(), 51);
    }
}
