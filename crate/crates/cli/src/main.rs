//! Batch CLI emitting JSON/CSV tables for every computation and verification
//! suite. Every run is deterministic given its flags; verification
//! subcommands exit 0 when the check passes and 1 with a machine-readable
//! mismatch report otherwise (usage errors exit 2).

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sympferm_core::characters::{
    branching, branching_gl_closed, branching_sp_closed, charge_graded_character, decompose_check,
    Convention, FreenessOutcome,
};
use sympferm_core::classical::{classical_relation, Family};
use sympferm_core::fock::format_state;
use sympferm_core::invariants::{
    evaluate_decoupling, find_decoupling, flavored_sp_leading_coefficient, gl_h_identity,
    lambda_coefficient, sp_j_leading_coefficient,
};
use sympferm_core::lie::GroupSpec;
use sympferm_core::qseries::{full_character, QSeries};
use sympferm_core::remainder::{sorted_lists, RemainderTable};
use sympferm_core::rootsys::{
    build_root_system, denominator_identity_eval, sample_points, Kind, SuperRootSystem, Weight,
};
use sympferm_core::{rint, Rat};

#[derive(Parser)]
#[command(name = "sympferm", version, about = "exact symplectic fermion orbifold computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Spo,
    Gl,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Sp,
    Gl,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Corrected,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sp,
    Gl,
    SpSo,
    GlGl,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrongGenKind {
    SpJ,
    GlH,
    FlavoredSp,
}

#[derive(Args)]
struct SystemArgs {
    /// superalgebra family: spo(2m|r) or gl(m|r)
    #[arg(long, value_enum)]
    kind: KindArg,
    /// symplectic/general-linear rank m
    #[arg(long)]
    m: usize,
    /// orthogonal/second general-linear dimension r
    #[arg(long)]
    r: usize,
}

impl SystemArgs {
    fn build(&self) -> Result<SuperRootSystem, String> {
        let (kind, n) = match self.kind {
            KindArg::Gl => (Kind::Gl, self.r),
            KindArg::Spo => {
                if self.r.is_multiple_of(2) {
                    (Kind::SpoEven, self.r / 2)
                } else {
                    (Kind::SpoOdd, (self.r - 1) / 2)
                }
            }
        };
        build_root_system(kind, self.m, n).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Graded character of the rank-(m*r) symplectic fermion algebra
    Character {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 12)]
        order: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Branching function B_Lambda for a superalgebra system
    Branching {
        #[command(flatten)]
        sys: SystemArgs,
        /// comma-separated integer coordinates of Lambda (delta block first)
        #[arg(long, default_value = "0")]
        weight: String,
        #[arg(long, default_value_t = 12)]
        order: u32,
        #[arg(long, value_enum, default_value_t = ConventionArg::Corrected)]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Closed-form branching function (sp exact; gl literal transcription)
    BranchingClosed {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// rank (sp: n of Sp(2n); gl: m of GL(m))
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0")]
        weight: String,
        #[arg(long, default_value_t = 12)]
        order: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify the character decomposition against the full character
    DecomposeCheck {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
    /// Verify the denominator identity at seeded rational points
    DenominatorCheck {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 5)]
        points: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Exact remainder value R_n(I) or R_n(I,J)
    Remainder {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        /// comma-separated index list I
        #[arg(long)]
        list: String,
        /// second index list J (gl family)
        #[arg(long)]
        list2: Option<String>,
    },
    /// Search for a decoupling relation at the given weight
    Decouple {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u16,
        /// target weight (defaults to 2n+2, the minimal relation weight)
        #[arg(long)]
        weight: Option<u32>,
    },
    /// Strong-generation identity checks
    StrongGen {
        #[arg(long, value_enum)]
        kind: StrongGenKind,
        #[arg(long)]
        n: u16,
        #[arg(long, default_value_t = 2)]
        m: u16,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// Exact invariant-subspace dimensions by weight
    InvariantDims {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: u16,
        #[arg(long, default_value_t = 1)]
        m: u16,
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify the classical relations on all small index lists
    ClassicalCheck {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        max_entry: u32,
    },
    /// Compare the vacuum branching function against the free character
    Freeness {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        order: u32,
    },
    /// Closed-form lambda coefficient of the generator action
    Lambda {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        w: u32,
        #[arg(long)]
        c: u32,
    },
}

fn parse_weight(sys: &SuperRootSystem, s: &str) -> Result<Weight, String> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("bad weight coordinate `{t}`: {e}")))
        .collect::<Result<_, _>>()?;
    let total = sys.m + sys.n;
    if coords.len() > total {
        return Err(format!("weight has {} coordinates, system has {}", coords.len(), total));
    }
    let mut full = coords;
    full.resize(total, 0);
    Ok(Weight::from_ints(&full[..sys.m], &full[sys.m..]))
}

fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("bad index `{t}`: {e}")))
        .collect()
}

fn emit_series(s: &QSeries, format: Format) {
    match format {
        Format::Json => println!("{}", s.to_json()),
        Format::Csv => {
            for (e, c) in s.csv_rows() {
                println!("{e},{c}");
            }
        }
    }
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Character { m, r, order, format } => {
            let trunc = 2 * (m as i64) * (r as i64) + 24 * order as i64 + 1;
            emit_series(&full_character(m, r, trunc), format);
            Ok(0)
        }
        Command::Branching { sys, weight, order, convention, format } => {
            let system = sys.build()?;
            let lam = parse_weight(&system, &weight)?;
            let conv = match convention {
                ConventionArg::Corrected => Convention::ProofCorrected,
                ConventionArg::Literal => Convention::Literal,
            };
            let b = branching(&system, &lam, 24 * order as i64, conv).map_err(|e| e.to_string())?;
            emit_series(&b, format);
            Ok(0)
        }
        Command::BranchingClosed { family, n, weight, order, format } => {
            let series = match family {
                FamilyArg::Sp => {
                    let system = build_root_system(Kind::SpoOdd, n, 0).map_err(|e| e.to_string())?;
                    let lam = parse_weight(&system, &weight)?;
                    branching_sp_closed(n, &lam, 24 * order as i64).map_err(|e| e.to_string())?
                }
                FamilyArg::Gl => {
                    let coords: Vec<i64> = weight
                        .split(',')
                        .map(|t| t.trim().parse::<i64>().map_err(|e| e.to_string()))
                        .collect::<Result<_, _>>()?;
                    let mut full = coords;
                    full.resize(n, 0);
                    branching_gl_closed(n, &full, 24 * order as i64)
                }
            };
            emit_series(&series, format);
            Ok(0)
        }
        Command::DecomposeCheck { sys, order } => {
            let system = sys.build()?;
            let rep = decompose_check(&system, order).map_err(|e| e.to_string())?;
            let out = json!({
                "lhs": rep.lhs.to_json(),
                "rhs": rep.rhs.to_json(),
                "equal": rep.equal,
                "firstMismatch": rep.first_mismatch,
                "lambdaCount": rep.lambda_count,
            });
            println!("{out}");
            Ok(if rep.equal { 0 } else { 1 })
        }
        Command::DenominatorCheck { sys, points, seed } => {
            let system = sys.build()?;
            let pts = sample_points(&system, points, seed);
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            let mut first_mismatch: Option<usize> = None;
            for (i, p) in pts.iter().enumerate() {
                let (l, r) = denominator_identity_eval(&system, p).map_err(|e| e.to_string())?;
                if l != r && first_mismatch.is_none() {
                    first_mismatch = Some(i);
                }
                lhs.push(l.to_string());
                rhs.push(r.to_string());
            }
            let equal = first_mismatch.is_none();
            let out = json!({
                "lhs": lhs,
                "rhs": rhs,
                "equal": equal,
                "firstMismatch": first_mismatch,
                "points": pts.len(),
                "seed": seed,
            });
            println!("{out}");
            Ok(if equal { 0 } else { 1 })
        }
        Command::Remainder { family, n, list, list2 } => {
            let index = parse_list(&list)?;
            let mut table = RemainderTable::new();
            let value = match family {
                FamilyArg::Sp => table.sp(n, &index).map_err(|e| e.to_string())?,
                FamilyArg::Gl => {
                    let col = parse_list(&list2.ok_or("gl family needs --list2")?)?;
                    table.gl(n, &index, &col).map_err(|e| e.to_string())?
                }
            };
            println!("{}", json!({"value": value.to_string()}));
            Ok(0)
        }
        Command::Decouple { family, n, weight } => {
            if n > 3 {
                return Err("decoupling search supports ranks n <= 3".into());
            }
            let fam = match family {
                FamilyArg::Sp => Family::Sp,
                FamilyArg::Gl => Family::Gl,
            };
            let w = weight.unwrap_or(2 * n as u32 + 2);
            match find_decoupling(fam, n, w) {
                Some(d) => {
                    let rebuilt = evaluate_decoupling(fam, n, &d);
                    let target = match fam {
                        Family::Sp => sympferm_core::invariants::j_generator(n, d.target_label),
                        Family::Gl => sympferm_core::invariants::h_generator(n, d.target_label),
                    };
                    let verified = rebuilt == target;
                    let terms: Vec<Value> = d
                        .terms
                        .iter()
                        .map(|(word, c)| json!({"word": word, "coeff": c.to_string()}))
                        .collect();
                    let out = json!({
                        "target": d.target_label,
                        "weight": w,
                        "solution": terms,
                        "verified": verified,
                    });
                    println!("{out}");
                    Ok(if verified { 0 } else { 1 })
                }
                None => {
                    println!("{}", json!({"target": w - 2, "weight": w, "solution": Value::Null}));
                    Ok(0)
                }
            }
        }
        Command::StrongGen { kind, n, m, k, r } => {
            let out = match kind {
                StrongGenKind::SpJ => {
                    let got = sp_j_leading_coefficient(n, k).map_err(|e| e.to_string())?;
                    let want = rint(-(2 * k as i64 + 4));
                    json!({
                        "lhs": got.to_string(),
                        "rhs": want.to_string(),
                        "equal": got == want,
                        "firstMismatch": if got == want { Value::Null } else { json!("coefficient") },
                    })
                }
                StrongGenKind::GlH => {
                    let (ok, lhs, rhs) = gl_h_identity(n, k);
                    json!({
                        "lhs": format_state(&lhs),
                        "rhs": format_state(&rhs),
                        "equal": ok,
                        "firstMismatch": if ok { Value::Null } else { json!("state") },
                    })
                }
                StrongGenKind::FlavoredSp => {
                    let got = flavored_sp_leading_coefficient(n, m, r).map_err(|e| e.to_string())?;
                    let want = rint(-(r as i64 + 1));
                    json!({
                        "lhs": got.to_string(),
                        "rhs": want.to_string(),
                        "equal": got == want,
                        "firstMismatch": if got == want { Value::Null } else { json!("coefficient") },
                    })
                }
            };
            let equal = out["equal"].as_bool().unwrap_or(false);
            println!("{out}");
            Ok(if equal { 0 } else { 1 })
        }
        Command::InvariantDims { group, n, m, max_weight, format } => {
            let g = match group {
                GroupArg::Sp => GroupSpec::Sp,
                GroupArg::Gl => GroupSpec::Gl,
                GroupArg::SpSo => GroupSpec::SpTimesSo,
                GroupArg::GlGl => GroupSpec::GlTimesGl,
            };
            let table = charge_graded_character(g, n, m, max_weight);
            match format {
                Format::Json => {
                    let sectors: Vec<Value> = table
                        .sectors
                        .iter()
                        .map(|s| {
                            let m: serde_json::Map<String, Value> = s
                                .iter()
                                .map(|(k, v)| {
                                    let key = k
                                        .iter()
                                        .map(|c| c.to_string())
                                        .collect::<Vec<_>>()
                                        .join(",");
                                    (key, json!(v))
                                })
                                .collect();
                            Value::Object(m)
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({"invariant": table.invariant, "sectors": sectors})
                    );
                }
                Format::Csv => {
                    for (w, d) in table.invariant.iter().enumerate() {
                        println!("{w},{d}");
                    }
                }
            }
            Ok(0)
        }
        Command::ClassicalCheck { family, n, max_entry } => {
            let fam = match family {
                FamilyArg::Sp => Family::Sp,
                FamilyArg::Gl => Family::Gl,
            };
            let entries: Vec<u32> = (0..=max_entry).collect();
            let mut checked = 0usize;
            let mut failures: Vec<Value> = Vec::new();
            match fam {
                Family::Sp => {
                    for list in sorted_lists(&entries, (2 * n + 2) as usize) {
                        let (_, ok) = classical_relation(Family::Sp, &list, None, n);
                        checked += 1;
                        if !ok {
                            failures.push(json!(list));
                        }
                    }
                }
                Family::Gl => {
                    for row in sorted_lists(&entries, (n + 1) as usize) {
                        for col in sorted_lists(&entries, (n + 1) as usize) {
                            let (_, ok) = classical_relation(Family::Gl, &row, Some(&col), n);
                            checked += 1;
                            if !ok {
                                failures.push(json!([row.clone(), col]));
                            }
                        }
                    }
                }
            }
            let equal = failures.is_empty();
            let out = json!({
                "lhs": "exterior image of each relation",
                "rhs": "0",
                "checked": checked,
                "equal": equal,
                "firstMismatch": failures.first().cloned(),
            });
            println!("{out}");
            Ok(if equal { 0 } else { 1 })
        }
        Command::Freeness { family, n, order } => {
            let fam = match family {
                FamilyArg::Sp => Family::Sp,
                FamilyArg::Gl => Family::Gl,
            };
            let rep = sympferm_core::characters::freeness_check(fam, n, order)
                .map_err(|e| e.to_string())?;
            let (equal, mismatch) = match &rep.outcome {
                FreenessOutcome::Equal => (true, Value::Null),
                FreenessOutcome::FirstMismatch { exponent, free_count, true_count, deficit } => (
                    false,
                    json!({
                        "exponent": exponent,
                        "freeCount": free_count.to_string(),
                        "trueCount": true_count.to_string(),
                        "deficit": deficit.to_string(),
                    }),
                ),
            };
            let out = json!({
                "lhs": rep.vacuum_branching.to_json(),
                "rhs": rep.free_character.to_json(),
                "equal": equal,
                "firstMismatch": mismatch,
            });
            println!("{out}");
            Ok(if equal { 0 } else { 1 })
        }
        Command::Lambda { a, b, w, c } => {
            if a > b {
                return Err("lambda coefficient needs a <= b".into());
            }
            let v: Rat = lambda_coefficient(a, b, w, c);
            println!("{}", json!({"value": v.to_string()}));
            Ok(0)
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
