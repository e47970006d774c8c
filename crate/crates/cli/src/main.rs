//! `matx`: binary matroid toolkit command line.
//!
//! Exit codes: 0 success (or all claims pass), 1 failed claims or a negative
//! predicate (`iso` on non-isomorphic inputs, `minor` when no minor exists,
//! `verify` with failures), 2 usage errors, 3 I/O or parse errors.

mod format;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use matx_core::catalog::Catalog;
use matx_core::generate::{self, CensusParams, Filters, Mode};
use matx_core::verify::{self, ClaimStatus, VerifyCtx};
use matx_core::{iso, BinaryMatroid};

#[derive(Parser)]
#[command(name = "matx", version, about = "binary matroid census and verification toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Catalog of named matroids.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Print a matroid in canonical emission.
    Show {
        /// Catalog name or .bm file path.
        matroid: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the dual matroid.
    Dual {
        matroid: String,
        #[arg(long)]
        json: bool,
    },
    /// Single-element extension candidates (columns).
    Ext(GrowArgs),
    /// Single-element coextension candidates (rows).
    Coext(GrowArgs),
    /// Isomorphism test; prints a bijection when one exists.
    Iso {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Minor test; prints a witness when the minor exists.
    Minor {
        /// The larger matroid.
        host: String,
        /// The candidate minor.
        minor: String,
        /// Print the full witness (contract set, delete set, bijection).
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Connectivity report: 3-connectivity, internal 4-connectivity, and
    /// exact 3-separations with both sides of size at least 4.
    Conn {
        matroid: String,
        #[arg(long)]
        json: bool,
    },
    /// Splitter-ordered census of the excluded-minor class above a seed.
    Census {
        #[arg(long)]
        seed: String,
        /// Comma-separated excluded minors (catalog names or files).
        #[arg(long, value_delimiter = ',')]
        exclude: Vec<String>,
        #[arg(long = "max-size")]
        max_size: usize,
        #[arg(long = "max-rank")]
        max_rank: Option<usize>,
        /// Run the exhaustive closure instead of the splitter-ordered walk.
        #[arg(long = "no-prune")]
        no_prune: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run registered claims against the catalog.
    Verify {
        /// Run a single claim by id.
        #[arg(long, conflicts_with = "all")]
        claim: Option<String>,
        /// Run every claim (the default when no claim is given).
        #[arg(long)]
        all: bool,
        /// Write the JSON report to a file.
        #[arg(long)]
        report: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// One line per entry: name rank size source.
    List {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GrowArgs {
    matroid: String,
    /// Group candidates by isomorphism class.
    #[arg(long)]
    classes: bool,
    /// Keep only candidates avoiding these minors (comma-separated).
    #[arg(long, value_delimiter = ',')]
    exclude: Vec<String>,
    #[arg(long)]
    json: bool,
}

/// I/O and parse failures exit with 3; everything else from the library is
/// reported the same way.
struct CmdError(String);

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError(e.to_string())
    }
}

impl From<matx_core::Error> for CmdError {
    fn from(e: matx_core::Error) -> Self {
        CmdError(e.to_string())
    }
}

fn resolve(catalog: &Catalog, arg: &str) -> Result<BinaryMatroid, CmdError> {
    if let Ok(m) = catalog.get(arg) {
        return Ok(m);
    }
    let text =
        std::fs::read_to_string(arg).map_err(|e| CmdError(format!("{arg}: {e}")))?;
    format::parse_matroid(&text).map_err(|e| CmdError(format!("{arg}: {e}")))
}

#[derive(Serialize)]
struct MatroidJson {
    name: Option<String>,
    rank: usize,
    size: usize,
    labels: Vec<u32>,
    d_rows: Vec<String>,
}

fn matroid_json(m: &BinaryMatroid) -> MatroidJson {
    MatroidJson {
        name: m.name().map(str::to_owned),
        rank: m.rank(),
        size: m.size(),
        labels: m.labels().to_vec(),
        d_rows: m.d().rows().map(|r| r.to_string()).collect(),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: Cli) -> Result<ExitCode, CmdError> {
    let catalog = Catalog::standard();
    match cli.cmd {
        Cmd::Catalog { action } => match action {
            CatalogCmd::List { json } => {
                if json {
                    #[derive(Serialize)]
                    struct Entry<'a> {
                        name: &'a str,
                        rank: usize,
                        size: usize,
                        source: matx_core::catalog::Source,
                        note: &'a str,
                    }
                    let rows: Vec<Entry> = catalog
                        .entries()
                        .iter()
                        .map(|e| Entry {
                            name: &e.name,
                            rank: e.matroid.rank(),
                            size: e.matroid.size(),
                            source: e.source,
                            note: &e.source_note,
                        })
                        .collect();
                    print_json(&rows);
                } else {
                    for e in catalog.entries() {
                        println!(
                            "{} {} {} {}",
                            e.name,
                            e.matroid.rank(),
                            e.matroid.size(),
                            e.source
                        );
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Cmd::Show { matroid, json } => {
            let m = resolve(&catalog, &matroid)?;
            if json {
                print_json(&matroid_json(&m));
            } else {
                print!("{}", format::emit_matroid(&m));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dual { matroid, json } => {
            let m = resolve(&catalog, &matroid)?.dual();
            if json {
                print_json(&matroid_json(&m));
            } else {
                print!("{}", format::emit_matroid(&m));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Ext(args) => grow(&catalog, args, Mode::Extend),
        Cmd::Coext(args) => grow(&catalog, args, Mode::Coextend),
        Cmd::Iso { a, b, json } => {
            let ma = resolve(&catalog, &a)?;
            let mb = resolve(&catalog, &b)?;
            match iso::are_isomorphic(&ma, &mb)? {
                Some(bijection) => {
                    if json {
                        print_json(&serde_json::json!({
                            "isomorphic": true,
                            "bijection": bijection,
                        }));
                    } else {
                        let map: Vec<String> =
                            bijection.iter().map(|(x, y)| format!("{x}->{y}")).collect();
                        println!("isomorphic: {}", map.join(" "));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    if json {
                        print_json(&serde_json::json!({ "isomorphic": false }));
                    } else {
                        println!("not isomorphic");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::Minor {
            host,
            minor,
            witness,
            json,
        } => {
            let m = resolve(&catalog, &host)?;
            let n = resolve(&catalog, &minor)?;
            match iso::has_minor(&m, &n)? {
                Some(w) => {
                    if json {
                        print_json(&serde_json::json!({ "minor": true, "witness": w }));
                    } else if witness {
                        let map: Vec<String> =
                            w.bijection.iter().map(|(x, y)| format!("{x}->{y}")).collect();
                        println!(
                            "minor found: contract {:?} delete {:?} bijection {}",
                            w.contract_set,
                            w.delete_set,
                            map.join(" ")
                        );
                    } else {
                        println!(
                            "minor found: contract {:?} delete {:?}",
                            w.contract_set, w.delete_set
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    if json {
                        print_json(&serde_json::json!({ "minor": false }));
                    } else {
                        println!("no minor");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::Conn { matroid, json } => {
            let m = resolve(&catalog, &matroid)?;
            let three = m.is_3connected()?;
            let four = m.is_internally_4connected()?;
            let seps = m.exact_3separations(4)?;
            if json {
                print_json(&serde_json::json!({
                    "threeConnected": three,
                    "internally4Connected": four,
                    "exact3Separations": seps,
                }));
            } else {
                println!("3-connected: {three}");
                println!("internally 4-connected: {four}");
                println!("exact 3-separations with both sides >= 4: {}", seps.len());
                for s in &seps {
                    let side: Vec<String> = s.side_a.iter().map(u32::to_string).collect();
                    println!("  {{{}}}", side.join(","));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Census {
            seed,
            exclude,
            max_size,
            max_rank,
            no_prune,
            jobs,
            json,
        } => {
            let seed_m = resolve(&catalog, &seed)?;
            let excluded: Vec<BinaryMatroid> = exclude
                .iter()
                .map(|n| resolve(&catalog, n))
                .collect::<Result<_, _>>()?;
            let params = CensusParams::new(max_size, max_rank.unwrap_or(max_size), !no_prune)
                .with_jobs(jobs);
            let census = generate::census(&seed_m, &seed, &excluded, params)?;
            let names = catalog.canon_names();
            if json {
                #[derive(Serialize)]
                struct MemberJson<'a> {
                    name: String,
                    size: usize,
                    rank: usize,
                    key: &'a matx_core::iso::CanonicalKey,
                    provenance: &'a generate::Provenance,
                }
                let members: Vec<MemberJson> = census
                    .members
                    .iter()
                    .map(|n| MemberJson {
                        name: names
                            .get(&n.key)
                            .cloned()
                            .unwrap_or_else(|| n.key.short_hash()),
                        size: n.size,
                        rank: n.rank,
                        key: &n.key,
                        provenance: &n.provenance,
                    })
                    .collect();
                print_json(&members);
            } else {
                for n in &census.members {
                    let name = names
                        .get(&n.key)
                        .cloned()
                        .unwrap_or_else(|| n.key.short_hash());
                    let steps: Vec<String> = n
                        .provenance
                        .steps
                        .iter()
                        .map(|s| match s {
                            generate::Step::Extend(v) => format!("+c{v}"),
                            generate::Step::Coextend(v) => format!("+r{v}"),
                        })
                        .collect();
                    println!(
                        "size {:2} rank {} {:12} {} {}",
                        n.size,
                        n.rank,
                        name,
                        n.provenance.seed,
                        steps.join(" ")
                    );
                }
                println!("members: {}", census.members.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            claim,
            all,
            report,
            jobs,
            json,
        } => {
            let cx = VerifyCtx::new(&catalog).with_jobs(jobs);
            let report_data = if let Some(id) = claim {
                let result = verify::verify_claim(&cx, &id)?;
                let mut summary = verify::Summary::default();
                match result.status {
                    ClaimStatus::Pass => summary.pass += 1,
                    ClaimStatus::Fail => summary.fail += 1,
                    ClaimStatus::Discrepancy => summary.discrepancy += 1,
                }
                verify::Report {
                    claims: vec![result],
                    summary,
                }
            } else {
                let _ = all; // --all is the default
                verify::run_all(&cx)
            };
            if let Some(path) = &report {
                let json_text =
                    serde_json::to_string_pretty(&report_data).expect("serializable report");
                std::fs::write(path, json_text)?;
            }
            if json {
                print_json(&report_data);
            } else {
                for c in &report_data.claims {
                    let tag = match c.status {
                        ClaimStatus::Pass => "PASS",
                        ClaimStatus::Fail => "FAIL",
                        ClaimStatus::Discrepancy => "DISCREPANCY",
                    };
                    println!("{tag:11} {:10} [{}] {}", c.id, c.paper_ref, c.detail);
                }
                println!(
                    "pass {} fail {} discrepancy {}",
                    report_data.summary.pass,
                    report_data.summary.fail,
                    report_data.summary.discrepancy
                );
            }
            if report_data.summary.fail > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn grow(catalog: &Catalog, args: GrowArgs, mode: Mode) -> Result<ExitCode, CmdError> {
    let m = resolve(catalog, &args.matroid)?;
    let excluded: Vec<BinaryMatroid> = args
        .exclude
        .iter()
        .map(|n| resolve(catalog, n))
        .collect::<Result<_, _>>()?;
    if args.classes || !excluded.is_empty() {
        let filters = Filters {
            three_connected: false,
            excluded,
        };
        let part = generate::classify(&m, mode, &filters, catalog.canon_names())?;
        if args.json {
            #[derive(Serialize)]
            struct ClassJson<'a> {
                name: String,
                key: &'a matx_core::iso::CanonicalKey,
                members: Vec<String>,
            }
            let classes: Vec<ClassJson> = part
                .classes
                .iter()
                .map(|c| ClassJson {
                    name: c.name.clone().unwrap_or_else(|| c.key.short_hash()),
                    key: &c.key,
                    members: c.members.iter().map(|v| v.to_string()).collect(),
                })
                .collect();
            print_json(&classes);
        } else if args.classes {
            for c in &part.classes {
                let members: Vec<String> = c.members.iter().map(|v| v.to_string()).collect();
                println!(
                    "{}: {}",
                    c.name.clone().unwrap_or_else(|| c.key.short_hash()),
                    members.join(" ")
                );
            }
        } else {
            for v in &part.candidates {
                println!("{v}");
            }
        }
    } else {
        let candidates = match mode {
            Mode::Extend => generate::extension_candidates(&m),
            Mode::Coextend => generate::coextension_candidates(&m),
        };
        if args.json {
            let list: Vec<String> = candidates.iter().map(|v| v.to_string()).collect();
            print_json(&list);
        } else {
            for v in &candidates {
                println!("{v}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CmdError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
