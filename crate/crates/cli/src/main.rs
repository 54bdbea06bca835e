//! Command-line front end for the type-B Specht module classifier.
//!
//! Exit codes: 0 success (verdict in output), 1 parse/validation error,
//! 2 unsupported regime, 3 oracle gap (Unknown verdict).

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use heckeb::{
    abacus_render, bipartitions_of, block_label, classify, is_inf_irreducible_all_parity_windowed,
    natural_window, partitions_of, residue_multiset, signature, simples_spechts_inf,
    specht_constituents_inf, Bipartition, CanonicalBasis, ChainEnd, ChainOutcome, CharTable,
    HeckeParams, OracleAnswer, Parity, Partition, Regime, ShapeReport, StandardOracle,
    TypeA2Oracle, Verdict, VerdictValue, Witness,
};

// ---------------------------------------------------------------------------
// Regime parsing
// ---------------------------------------------------------------------------

/// A requested parameter regime.  Orders 2 < e < infinity parse fine but are
/// not treated by the library, so they classify as Unsupported (exit 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RegimeSpec {
    Supported(Regime),
    UnsupportedOrder(u64),
}

impl RegimeSpec {
    fn describe(self) -> String {
        match self {
            RegimeSpec::Supported(r) => r.to_string(),
            RegimeSpec::UnsupportedOrder(e) => format!("e={e}"),
        }
    }
}

/// Accepted forms: `inf-generic`, `inf:r=R`, `two-generic`, `two:r=0|1`,
/// and the explicit-order forms `e=N-generic`, `e=N:r=R` (N = 2 maps onto
/// the `two` regimes; other finite N are unsupported).
fn parse_regime(text: &str) -> Result<RegimeSpec, String> {
    fn parse_r(text: &str) -> Result<i64, String> {
        let rest = text
            .strip_prefix("r=")
            .ok_or_else(|| format!("expected `r=INT`, found {text:?}"))?;
        rest.parse().map_err(|_| format!("bad integer in {text:?}"))
    }

    if let Some(rest) = text.strip_prefix("e=") {
        let (order, tail) = match rest.find([':', '-']) {
            Some(pos) => (&rest[..pos], &rest[pos..]),
            None => (rest, ""),
        };
        if order == "inf" {
            return parse_regime(&format!("inf{tail}"));
        }
        let e: u64 = order
            .parse()
            .map_err(|_| format!("bad order in regime {text:?}"))?;
        if e < 2 {
            return Err(format!("q has multiplicative order at least 2, got e={e}"));
        }
        if e == 2 {
            return parse_regime(&format!("two{tail}"));
        }
        return Ok(RegimeSpec::UnsupportedOrder(e));
    }
    match text {
        "inf-generic" => Ok(RegimeSpec::Supported(Regime::InfGeneric)),
        "two-generic" => Ok(RegimeSpec::Supported(Regime::TwoGeneric)),
        _ => {
            if let Some(rest) = text.strip_prefix("inf:") {
                return Ok(RegimeSpec::Supported(Regime::InfPower { r: parse_r(rest)? }));
            }
            if let Some(rest) = text.strip_prefix("two:") {
                let r = parse_r(rest)?;
                if r != 0 && r != 1 {
                    return Err(format!("two:r takes r in {{0,1}}, got {r}"));
                }
                return Ok(RegimeSpec::Supported(Regime::two_power(r as u8)));
            }
            Err(format!(
                "unrecognized regime {text:?}; expected inf-generic, inf:r=R, two-generic, two:r=0|1 or e=N:..."
            ))
        }
    }
}

/// The integer exponent r when the regime carries one.
fn regime_r(regime: Regime) -> Option<i64> {
    match regime {
        Regime::InfPower { r } => Some(r),
        Regime::TwoPower { r } => Some(r as i64),
        _ => None,
    }
}

/// Require a power regime of infinite order (signature-based commands).
fn require_inf_r(spec: RegimeSpec) -> Result<i64, CliError> {
    match spec {
        RegimeSpec::Supported(Regime::InfPower { r }) => Ok(r),
        other => Err(CliError::Usage(format!(
            "this command needs --regime inf:r=R, got {}",
            other.describe()
        ))),
    }
}

// ---------------------------------------------------------------------------
// CLI definition
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "heckeb",
    about = "Classify irreducible Specht modules for type-B Hecke algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Parameter regime: inf-generic | inf:r=R | two-generic | two:r=0|1 | e=N:...
    #[arg(long)]
    regime: String,

    /// Field characteristic (0 or a prime); consulted only by the type-A oracle.
    #[arg(long = "char", default_value_t = 0)]
    char_p: u32,

    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,

    /// Path to a characteristic-p answer table (`p;PARTITION;irr|red` lines).
    #[arg(long = "typea-table")]
    typea_table: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide irreducibility of one Specht module label.
    Classify {
        #[command(flatten)]
        common: CommonOpts,
        /// Attach the reduction chain / shape report to the output.
        #[arg(long)]
        witness: bool,
        /// Testing hook: half-width for the e=infinity parity sweep reported
        /// with the witness in two:r regimes.
        #[arg(long = "window-override", allow_hyphen_values = true)]
        window_override: Option<i64>,
        /// The bipartition, e.g. "4,3,3,1|2,1" ("-" is the empty partition).
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
    },
    /// Print the r-signature of a bipartition (needs --regime inf:r=R).
    Signature {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
    },
    /// List the composition factors of a Specht module at e = infinity.
    Constituents {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
    },
    /// List the Specht modules containing the given simple at e = infinity.
    #[command(name = "simples-in")]
    SimplesIn {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(allow_hyphen_values = true)]
        bipartition: String,
    },
    /// Render beta-sets as an abacus diagram.
    Abacus {
        /// Regime supplying the first-component charge (default r = 0).
        #[arg(long)]
        regime: Option<String>,
        /// Charge for a single-partition rendering.
        #[arg(long, default_value_t = 0)]
        charge: i64,
        /// Window of positions, e.g. "-5:7" (default: wide enough to show
        /// every bead).
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, default_value = "text", value_parser = ["text", "json"])]
        format: String,
        /// A bipartition ("4,4,2|1") for a two-runner diagram, or a single
        /// partition ("4,4,2") with --charge for one runner.
        #[arg(allow_hyphen_values = true)]
        argument: String,
    },
    /// Group all bipartitions of n into blocks by residue multiset.
    Blocks {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        n: u32,
    },
    /// Print the type-A canonical-basis decomposition matrix at degree n.
    Typea {
        #[arg(long)]
        n: u32,
        #[arg(long = "char", default_value_t = 0)]
        char_p: u32,
        #[arg(long = "typea-table")]
        typea_table: Option<String>,
        #[arg(long, default_value = "text", value_parser = ["text", "json"])]
        format: String,
    },
    /// Classify every bipartition of n, in lexicographic order.
    Batch {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        n: u32,
    },
}

// ---------------------------------------------------------------------------
// Error-to-exit-code plumbing
// ---------------------------------------------------------------------------

enum CliError {
    /// Parse/validation problems: exit 1.
    Usage(String),
    /// Unsupported regime: exit 2 (the verdict still goes to stdout).
    Unsupported,
    /// Oracle gap: exit 3 (the verdict still goes to stdout).
    Unknown,
}

impl From<heckeb::Error> for CliError {
    fn from(e: heckeb::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn exit_code(result: Result<(), CliError>) -> ExitCode {
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Unsupported) => ExitCode::from(2),
        Err(CliError::Unknown) => ExitCode::from(3),
    }
}

fn check_char(char_p: u32) -> Result<(), CliError> {
    let is_prime = |n: u32| n >= 2 && (2..=n.isqrt()).all(|d| n % d != 0);
    if char_p == 0 || is_prime(char_p) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--char takes 0 or a prime, got {char_p}"
        )))
    }
}

fn load_oracle(table: &Option<String>) -> Result<StandardOracle, CliError> {
    match table {
        None => Ok(StandardOracle::new()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
            Ok(StandardOracle::with_table(CharTable::parse(&text)?))
        }
    }
}

fn parse_bip(text: &str) -> Result<Bipartition, CliError> {
    Ok(text.parse::<Bipartition>()?)
}

// ---------------------------------------------------------------------------
// JSON builders
// ---------------------------------------------------------------------------

fn verdict_json(v: &VerdictValue) -> (Value, Option<String>) {
    match v {
        VerdictValue::Irreducible => (json!("irreducible"), None),
        VerdictValue::Reducible => (json!("reducible"), None),
        VerdictValue::Unknown(reason) => (json!("unknown"), Some(reason.clone())),
        VerdictValue::Unsupported(regime) => (json!("unsupported"), Some(regime.clone())),
    }
}

fn chain_json(chain: &ChainOutcome) -> Value {
    let steps: Vec<Value> = chain
        .steps
        .iter()
        .map(|s| json!({ "removed": format!("{}1", s.removed.as_char()), "result": s.result.to_string() }))
        .collect();
    let end = match &chain.end {
        ChainEnd::Terminal { partition, side } => json!({
            "kind": "terminal",
            "partition": partition.to_string(),
            "side": side.index(),
        }),
        ChainEnd::Stuck { at } => json!({ "kind": "stuck", "at": at.to_string() }),
    };
    json!({ "kind": "chain", "start": chain.start.to_string(), "steps": steps, "end": end })
}

fn shape_json(report: &ShapeReport) -> Value {
    match report.decomposition {
        Some(d) => json!({
            "kind": "shape",
            "matches": report.matches,
            "a": d.a,
            "b": d.b,
            "c": d.c,
            "orientation": match d.orientation {
                heckeb::Orientation::PlusMinusPlus => "plus-minus-plus",
                heckeb::Orientation::MinusPlusMinus => "minus-plus-minus",
            },
        }),
        None => json!({ "kind": "shape", "matches": report.matches }),
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Chain(chain) => chain_json(chain),
        Witness::Shape(report) => shape_json(report),
    }
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn verdict_exit(value: &VerdictValue) -> Result<(), CliError> {
    match value {
        VerdictValue::Unknown(_) => Err(CliError::Unknown),
        VerdictValue::Unsupported(_) => Err(CliError::Unsupported),
        _ => Ok(()),
    }
}

fn run_classify(
    common: &CommonOpts,
    witness: bool,
    window_override: Option<i64>,
    bipartition: &str,
) -> Result<(), CliError> {
    let spec = parse_regime(&common.regime).map_err(CliError::Usage)?;
    check_char(common.char_p)?;
    let b = parse_bip(bipartition)?;
    let oracle = load_oracle(&common.typea_table)?;

    let (verdict, regime_field, r_field): (Verdict, String, Option<i64>) = match spec {
        RegimeSpec::UnsupportedOrder(e) => (
            Verdict::unsupported(format!("e={e}")),
            format!("e={e}"),
            None,
        ),
        RegimeSpec::Supported(regime) => (
            classify(&b, &HeckeParams::new(regime, common.char_p), &oracle),
            regime.to_string(),
            regime_r(regime),
        ),
    };

    // Self-check reported alongside the chain witness: an irreducible at
    // q = -1 must be irreducible at e = infinity for every exponent of the
    // parity of r (the testing hook --window-override feeds this sweep).
    let necessity = match (witness, spec, verdict.is_irreducible()) {
        (true, RegimeSpec::Supported(Regime::TwoPower { r }), true) => {
            let parity = if r == 0 { Parity::Even } else { Parity::Odd };
            Some(is_inf_irreducible_all_parity_windowed(&b, parity, window_override))
        }
        _ => None,
    };

    if common.format == "json" {
        let (v, reason) = verdict_json(&verdict.value);
        let mut obj = json!({
            "subject": b.to_string(),
            "regime": regime_field,
            "r": r_field,
            "char": common.char_p,
            "verdict": v,
        });
        if let Some(reason) = reason {
            obj["reason"] = json!(reason);
        }
        if witness {
            let mut w = verdict.witness.as_ref().map(witness_json).unwrap_or(Value::Null);
            if let (Some(flag), Some(map)) = (necessity, w.as_object_mut()) {
                map.insert("inf_all_parity_necessary".into(), json!(flag));
            }
            obj["witness"] = w;
        }
        println!("{obj}");
    } else {
        println!("{}", verdict.value);
        if witness {
            match &verdict.witness {
                Some(Witness::Chain(chain)) => println!("witness: {chain}"),
                Some(Witness::Shape(report)) => match report.decomposition {
                    Some(d) => println!(
                        "witness: signature shape a={} b={} c={} ({})",
                        d.a,
                        d.b,
                        d.c,
                        match d.orientation {
                            heckeb::Orientation::PlusMinusPlus => "+^a -^b +^c",
                            heckeb::Orientation::MinusPlusMinus => "-^a +^b -^c",
                        }
                    ),
                    None => println!("witness: signature is not a -/+/- or +/-/+ run pattern"),
                },
                None => {}
            }
            if let Some(flag) = necessity {
                println!(
                    "inf-necessity: {}",
                    if flag { "holds" } else { "VIOLATED" }
                );
            }
        }
    }
    verdict_exit(&verdict.value)
}

fn run_signature(common: &CommonOpts, bipartition: &str) -> Result<(), CliError> {
    let spec = parse_regime(&common.regime).map_err(CliError::Usage)?;
    check_char(common.char_p)?;
    let r = require_inf_r(spec)?;
    let b = parse_bip(bipartition)?;
    let ctx = signature(&b, r);
    let regular = heckeb::is_dominant(ctx.signs());
    if common.format == "json" {
        // The canonical involution exists exactly for dominant signatures;
        // it is serialized both as a cycle list and as a 1-based index array.
        let (iota, iota_map) = if regular {
            let iota = heckeb::iota_s(ctx.signs()).expect("dominant");
            (json!(iota.to_string()), json!(iota.images()))
        } else {
            (serde_json::Value::Null, serde_json::Value::Null)
        };
        println!(
            "{}",
            json!({
                "subject": b.to_string(),
                "regime": spec.describe(),
                "r": r,
                "char": common.char_p,
                "signature": ctx.signs().to_string(),
                "points": ctx.points(),
                "regular": regular,
                "iota": iota,
                "iota_map": iota_map,
            })
        );
    } else {
        println!("{}", ctx.signs());
    }
    Ok(())
}

fn run_constituents(common: &CommonOpts, bipartition: &str) -> Result<(), CliError> {
    let spec = parse_regime(&common.regime).map_err(CliError::Usage)?;
    check_char(common.char_p)?;
    let r = require_inf_r(spec)?;
    let b = parse_bip(bipartition)?;
    let row = specht_constituents_inf(&b, r);
    if common.format == "json" {
        let factors: Vec<String> = row.factors.iter().map(|f| f.to_string()).collect();
        println!(
            "{}",
            json!({
                "subject": b.to_string(),
                "regime": spec.describe(),
                "r": r,
                "char": common.char_p,
                "factors": factors,
            })
        );
    } else {
        for f in &row.factors {
            println!("{f}");
        }
    }
    Ok(())
}

fn run_simples_in(common: &CommonOpts, bipartition: &str) -> Result<(), CliError> {
    let spec = parse_regime(&common.regime).map_err(CliError::Usage)?;
    check_char(common.char_p)?;
    let r = require_inf_r(spec)?;
    let b = parse_bip(bipartition)?;
    let spechts = simples_spechts_inf(&b, r)?;
    if common.format == "json" {
        let listed: Vec<String> = spechts.iter().map(|s| s.to_string()).collect();
        println!(
            "{}",
            json!({
                "subject": b.to_string(),
                "regime": spec.describe(),
                "r": r,
                "char": common.char_p,
                "spechts": listed,
            })
        );
    } else {
        for s in &spechts {
            println!("{s}");
        }
    }
    Ok(())
}

fn parse_window(text: &str) -> Result<(i64, i64), CliError> {
    let err = || CliError::Usage(format!("bad window {text:?}; expected LO:HI"));
    let (lo, hi) = text.split_once(':').ok_or_else(err)?;
    let lo: i64 = lo.parse().map_err(|_| err())?;
    let hi: i64 = hi.parse().map_err(|_| err())?;
    if lo > hi {
        return Err(err());
    }
    Ok((lo, hi))
}

fn run_abacus(
    regime: &Option<String>,
    charge: i64,
    window: &Option<String>,
    format: &str,
    argument: &str,
) -> Result<(), CliError> {
    let rows: Vec<heckeb::BetaSet> = if argument.contains('|') {
        let b = parse_bip(argument)?;
        let r = match regime {
            None => 0,
            Some(text) => match parse_regime(text).map_err(CliError::Usage)? {
                RegimeSpec::Supported(regime) => regime_r(regime).unwrap_or(0),
                RegimeSpec::UnsupportedOrder(_) => {
                    return Err(CliError::Usage(
                        "abacus charges need a supported regime".into(),
                    ))
                }
            },
        };
        vec![
            heckeb::BetaSet::new(b.first.clone(), r),
            heckeb::BetaSet::new(b.second.clone(), 0),
        ]
    } else {
        let p: Partition = argument.parse::<Partition>()?;
        vec![heckeb::BetaSet::new(p, charge)]
    };
    let window = match window {
        Some(text) => {
            let (lo, hi) = parse_window(text)?;
            lo..=hi
        }
        None => natural_window(&rows),
    };
    let rendered = abacus_render(&rows, window.clone());
    if format == "json" {
        let row_objs: Vec<Value> = rows
            .iter()
            .map(|b| {
                let glyphs: String = window
                    .clone()
                    .map(|p| if b.contains(p) { 'o' } else { '.' })
                    .collect();
                json!({
                    "charge": b.charge(),
                    "shape": b.shape().to_string(),
                    "beads": glyphs,
                })
            })
            .collect();
        println!(
            "{}",
            json!({ "window": [window.start(), window.end()], "rows": row_objs })
        );
    } else {
        print!("{rendered}");
    }
    Ok(())
}

fn run_blocks(common: &CommonOpts, n: u32) -> Result<(), CliError> {
    let spec = parse_regime(&common.regime).map_err(CliError::Usage)?;
    check_char(common.char_p)?;
    let regime = match spec {
        RegimeSpec::Supported(r) => r,
        RegimeSpec::UnsupportedOrder(_) => {
            println!("{}", VerdictValue::Unsupported(spec.describe()));
            return Err(CliError::Unsupported);
        }
    };
    let params = HeckeParams::new(regime, common.char_p);
    let mut blocks: Vec<(Vec<heckeb::Residue>, Vec<Bipartition>)> = Vec::new();
    for b in bipartitions_of(n) {
        let label = residue_multiset(&b, &params);
        match blocks.iter_mut().find(|(l, _)| *l == label) {
            Some((_, members)) => members.push(b),
            None => blocks.push((label, vec![b])),
        }
    }
    if common.format == "json" {
        let objs: Vec<Value> = blocks
            .iter()
            .map(|(label, members)| {
                json!({
                    "label": block_label(label),
                    "members": members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        println!(
            "{}",
            json!({ "n": n, "regime": spec.describe(), "char": common.char_p, "blocks": objs })
        );
    } else {
        for (label, members) in &blocks {
            let listed: Vec<String> = members.iter().map(|m| m.to_string()).collect();
            println!("{}: {}", block_label(label), listed.join("  "));
        }
    }
    Ok(())
}

fn typea_annotation(
    oracle: &StandardOracle,
    basis: &CanonicalBasis,
    lambda: &Partition,
    char_p: u32,
) -> &'static str {
    if char_p == 0 {
        if basis.composition_length(lambda) == 1 {
            "irreducible"
        } else {
            "reducible"
        }
    } else {
        match oracle.query(lambda, char_p) {
            OracleAnswer::Irreducible => "irreducible",
            OracleAnswer::Reducible => "reducible",
            OracleAnswer::Unknown => "unknown",
        }
    }
}

fn run_typea(
    n: u32,
    char_p: u32,
    typea_table: &Option<String>,
    format: &str,
) -> Result<(), CliError> {
    check_char(char_p)?;
    let oracle = load_oracle(typea_table)?;
    let basis = heckeb::canonical_basis_memoized(n);
    // Rows and columns largest label first, as decomposition matrices are
    // usually printed.
    let rows: Vec<Partition> = partitions_of(n).into_iter().rev().collect();
    let cols: Vec<Partition> = basis.labels().cloned().collect::<Vec<_>>().into_iter().rev().collect();

    if format == "json" {
        let row_objs: Vec<Value> = rows
            .iter()
            .map(|lambda| {
                let entries: Vec<Value> = cols
                    .iter()
                    .map(|mu| {
                        let d = basis.entry(lambda, mu);
                        json!({ "column": mu.to_string(), "d": d.to_string(), "d_at_1": d.eval_at_one() })
                    })
                    .filter(|e| e["d"] != "0")
                    .collect();
                json!({
                    "row": lambda.to_string(),
                    "entries": entries,
                    "status": typea_annotation(&oracle, &basis, lambda, char_p),
                })
            })
            .collect();
        println!(
            "{}",
            json!({ "n": n, "char": char_p, "columns": cols.iter().map(|c| c.to_string()).collect::<Vec<_>>(), "rows": row_objs })
        );
    } else {
        let header: Vec<String> = cols.iter().map(|c| format!("G({c})")).collect();
        println!("degree {n}, char {char_p}; columns: {}", header.join("  "));
        for lambda in &rows {
            let mut cells = Vec::new();
            let mut at_one = Vec::new();
            for mu in &cols {
                let d = basis.entry(lambda, mu);
                cells.push(d.to_string());
                at_one.push(d.eval_at_one().to_string());
            }
            println!(
                "{:<14} [{}]  v=1: [{}]  {}",
                lambda.to_string(),
                cells.join(", "),
                at_one.join(", "),
                typea_annotation(&oracle, &basis, lambda, char_p)
            );
        }
    }
    Ok(())
}

fn run_batch(common: &CommonOpts, n: u32) -> Result<(), CliError> {
    let spec = parse_regime(&common.regime).map_err(CliError::Usage)?;
    check_char(common.char_p)?;
    let regime = match spec {
        RegimeSpec::Supported(r) => r,
        RegimeSpec::UnsupportedOrder(_) => {
            println!("{}", VerdictValue::Unsupported(spec.describe()));
            return Err(CliError::Unsupported);
        }
    };
    let oracle = load_oracle(&common.typea_table)?;
    let params = HeckeParams::new(regime, common.char_p);
    let mut saw_unknown = false;
    for b in bipartitions_of(n) {
        let verdict = classify(&b, &params, &oracle);
        if matches!(verdict.value, VerdictValue::Unknown(_)) {
            saw_unknown = true;
        }
        if common.format == "json" {
            let (v, reason) = verdict_json(&verdict.value);
            let mut obj = json!({ "subject": b.to_string(), "verdict": v });
            if let Some(reason) = reason {
                obj["reason"] = json!(reason);
            }
            println!("{obj}");
        } else {
            println!("{b}\t{}", verdict.value);
        }
    }
    if saw_unknown {
        return Err(CliError::Unknown);
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Classify { common, witness, window_override, bipartition } => {
            run_classify(common, *witness, *window_override, bipartition)
        }
        Command::Signature { common, bipartition } => run_signature(common, bipartition),
        Command::Constituents { common, bipartition } => run_constituents(common, bipartition),
        Command::SimplesIn { common, bipartition } => run_simples_in(common, bipartition),
        Command::Abacus { regime, charge, window, format, argument } => {
            run_abacus(regime, *charge, window, format, argument)
        }
        Command::Blocks { common, n } => run_blocks(common, *n),
        Command::Typea { n, char_p, typea_table, format } => {
            run_typea(*n, *char_p, typea_table, format)
        }
        Command::Batch { common, n } => run_batch(common, *n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // Usage problems are validation errors: exit 1.
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    exit_code(dispatch(cli))
}
