//! `ainfty`: Hodge decomposition and transferred operations for
//! finite-dimensional commutative DGAs over the rationals.
//!
//! Inputs are JSON files in one of three shapes, detected by their top-level
//! keys: an explicit structure file (`degrees`), a simplicial complex
//! (`vertices`), or a Lie algebra given by structure constants (`dim`).
//! Anywhere a path is accepted, the name of a built-in corpus entry works
//! too; `ainfty corpus list` shows what is available.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails or a requested
//! product is undefined, 2 for unreadable or malformed input.

use ainfty_core::corpus;
use ainfty_core::dga::lie::LieStructure;
use ainfty_core::dga::simplicial::SimplicialComplex;
use ainfty_core::dga::{Dga, DgaError};
use ainfty_core::graded::{Element, GradedVectorSpace};
use ainfty_core::hodge::HodgeData;
use ainfty_core::rational::{format_rational, int, parse_rational, zero, Rational};
use ainfty_core::transfer::{
    harmonic_associativity_check, massey_triple, ring_isomorphism_check, stasheff_check,
    transfer_structure_with, MasseyError, TransferOptions,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ainfty", version, about = "Harmonic transfer engine for finite-dimensional DGAs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate algebra axioms, Hodge operator identities, and the
    /// harmonic-product comparison with cohomology
    Check {
        /// Input file or corpus entry name
        input: String,
    },
    /// Print the cohomology of the input: Betti numbers computed both from
    /// the quotient and from harmonic elements, representatives, and the
    /// nonzero ring structure constants
    Cohomology {
        /// Input file or corpus entry name
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Compute the transferred operations on harmonic elements
    Transfer {
        /// Input file or corpus entry name
        input: String,
        /// Largest operation arity to compute (at least 2)
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Evaluate tuples across threads (output is identical either way)
        #[arg(long)]
        parallel: bool,
    },
    /// Verify the Stasheff identities for the transferred operations
    Stasheff {
        /// Input file or corpus entry name
        input: String,
        /// Check identities up to this arity
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
    },
    /// Massey triple product of three harmonic cocycles
    Massey {
        /// Input file or corpus entry name
        input: String,
        /// First factor: terms like `x`, `-2*y`, `1/2*xz`, joined by + or -
        a: String,
        /// Second factor
        b: String,
        /// Third factor
        c: String,
    },
    /// Built-in example inputs
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// List the available entries
    List,
    /// Print an entry as a JSON input file, or write it to a path
    Emit {
        /// Entry name, as shown by `corpus list`
        name: String,
        /// Destination file; stdout when omitted
        path: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// A failed run: `Math` means the input was understood but a check or
/// computation failed (exit 1); `Input` means the input itself was unusable
/// (exit 2).
enum Failure {
    Math(String),
    Input(String),
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { input } => cmd_check(&input),
        Command::Cohomology { input, format } => cmd_cohomology(&input, format),
        Command::Transfer { input, max_arity, format, parallel } => {
            cmd_transfer(&input, max_arity, format, parallel)
        }
        Command::Stasheff { input, max_arity } => cmd_stasheff(&input, max_arity),
        Command::Massey { input, a, b, c } => cmd_massey(&input, &a, &b, &c),
        Command::Corpus(CorpusCommand::List) => cmd_corpus_list(),
        Command::Corpus(CorpusCommand::Emit { name, path }) => {
            cmd_corpus_emit(&name, path.as_deref())
        }
    }
}

/// Reads the input text: an existing file wins, otherwise the argument is
/// treated as a corpus entry name.
fn read_source(input: &str) -> Result<String, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        return fs::read_to_string(path).map_err(|e| Failure::Input(format!("{input}: {e}")));
    }
    if let Some(text) = corpus::emit(input) {
        return Ok(text);
    }
    Err(Failure::Input(format!(
        "`{input}` is neither a readable file nor a corpus entry (try `ainfty corpus list`)"
    )))
}

fn load_dga(input: &str) -> Result<Dga, Failure> {
    let text = read_source(input)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
    let keys = value
        .as_object()
        .ok_or_else(|| Failure::Input(format!("{input}: top level must be a JSON object")))?;
    if keys.contains_key("degrees") {
        Dga::from_structure_file(&text).map_err(|e| match e {
            DgaError::Parse(p) => Failure::Input(format!("{input}: {p}")),
            invalid => Failure::Math(format!("{input}: {invalid}")),
        })
    } else if keys.contains_key("vertices") {
        let complex = SimplicialComplex::from_json(&text)
            .map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        Ok(complex.cochain_dga())
    } else if keys.contains_key("dim") {
        let lie = LieStructure::from_json(&text)
            .map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        lie.chevalley_eilenberg_dga()
            .map_err(|e| Failure::Math(format!("{input}: {e}")))
    } else {
        Err(Failure::Input(format!(
            "{input}: unrecognized input, expected a top-level key `degrees`, `vertices`, or `dim`"
        )))
    }
}

fn cmd_check(input: &str) -> Result<(), Failure> {
    let dga = load_dga(input)?;
    let axioms = dga.validate();
    println!("{axioms}");

    let hodge = HodgeData::compute(&dga);
    let violations = hodge.verify();
    if violations.is_empty() {
        println!("hodge operator identities: pass");
    } else {
        for v in &violations {
            println!("hodge operator identity FAIL: {v}");
        }
    }

    let associativity = harmonic_associativity_check(&dga, &hodge);
    println!("{associativity}");
    let ring = ring_isomorphism_check(&dga, &hodge);
    println!("{ring}");

    if axioms.passed() && violations.is_empty() && associativity.passed() && ring.passed() {
        Ok(())
    } else {
        Err(Failure::Math(format!("{input}: verification failed")))
    }
}

fn cmd_cohomology(input: &str, format: Format) -> Result<(), Failure> {
    let dga = load_dga(input)?;
    let ring = dga.cohomology_ring();
    let hodge = HodgeData::compute(&dga);
    let space = dga.space();
    let betti = ring.betti_numbers();
    let harmonic = hodge.harmonic_dims();
    let euler: i64 = betti
        .iter()
        .enumerate()
        .map(|(n, b)| if n % 2 == 0 { *b as i64 } else { -(*b as i64) })
        .sum();

    match format {
        Format::Table => {
            for n in 0..=ring.top() {
                println!("degree {n}: betti {}, harmonic {}", betti[n], harmonic[n]);
                for (i, rep) in ring.representatives_in(n).iter().enumerate() {
                    println!("  H{n}[{i}] = {}", rep.display(space));
                }
            }
            println!("euler characteristic: {euler}");
            println!("nonzero products:");
            for (&((p, i), (q, j)), coords) in ring.product_constants() {
                println!("  H{p}[{i}] * H{q}[{j}] = {}", class_combo(coords, p + q));
            }
        }
        Format::Json => {
            let mut reps = serde_json::Map::new();
            for n in 0..=ring.top() {
                let classes: Vec<serde_json::Value> =
                    ring.representatives_in(n).iter().map(|e| element_json(space, e)).collect();
                reps.insert(n.to_string(), classes.into());
            }
            let products: Vec<serde_json::Value> = ring
                .product_constants()
                .map(|(&((p, i), (q, j)), coords)| {
                    let output: Vec<serde_json::Value> = coords
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| **c != zero())
                        .map(|(k, c)| {
                            serde_json::json!({
                                "class": format!("H{}[{k}]", p + q),
                                "coeff": format_rational(c),
                            })
                        })
                        .collect();
                    serde_json::json!({
                        "left": format!("H{p}[{i}]"),
                        "right": format!("H{q}[{j}]"),
                        "output": output,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "betti": betti,
                "harmonic": harmonic,
                "euler_characteristic": euler,
                "representatives": reps,
                "products": products,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }

    if betti != harmonic {
        return Err(Failure::Math(format!(
            "{input}: quotient Betti numbers {betti:?} disagree with harmonic dimensions {harmonic:?}"
        )));
    }
    Ok(())
}

/// Renders class coordinates as a signed combination of `H<degree>[k]` names.
fn class_combo(coords: &[Rational], degree: usize) -> String {
    let mut out = String::new();
    for (k, c) in coords.iter().enumerate() {
        if *c == zero() {
            continue;
        }
        let name = format!("H{degree}[{k}]");
        let piece = if *c == int(1) {
            name
        } else if *c == int(-1) {
            format!("-{name}")
        } else {
            format!("{}*{name}", format_rational(c))
        };
        if out.is_empty() {
            out = piece;
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn cmd_transfer(input: &str, max_arity: usize, format: Format, parallel: bool) -> Result<(), Failure> {
    if max_arity < 2 {
        return Err(Failure::Input("--max-arity must be at least 2".into()));
    }
    let dga = load_dga(input)?;
    let hodge = HodgeData::compute(&dga);
    let options = TransferOptions { max_arity, parallel, ..TransferOptions::default() };
    let structure = transfer_structure_with(&dga, &hodge, options);

    match format {
        Format::Json => print!("{}", structure.to_json()),
        Format::Table => {
            let names = structure.basis_names();
            let degrees = structure.basis_degrees();
            println!("harmonic dimensions: {:?}", hodge.harmonic_dims());
            println!("harmonic basis");
            for n in 0..=degrees.iter().copied().max().unwrap_or(0) {
                let here: Vec<&str> = names
                    .iter()
                    .zip(degrees)
                    .filter(|(_, d)| **d == n)
                    .map(|(s, _)| s.as_str())
                    .collect();
                if !here.is_empty() {
                    println!("  degree {n}: {}", here.join(", "));
                }
            }
            for k in 2..=max_arity {
                let table = structure.table(k).expect("table for every arity up to max");
                println!("m{k}: {} nonzero entries", table.len());
                for (tuple, value) in table {
                    let args: Vec<&str> = tuple.iter().map(|i| structure.name_of(*i)).collect();
                    println!("  m{k}({}) = {}", args.join(", "), value.display(dga.space()));
                }
            }
        }
    }
    Ok(())
}

fn cmd_stasheff(input: &str, max_arity: usize) -> Result<(), Failure> {
    if max_arity < 2 {
        return Err(Failure::Input("--max-arity must be at least 2".into()));
    }
    let dga = load_dga(input)?;
    let hodge = HodgeData::compute(&dga);
    let options = TransferOptions { max_arity, ..TransferOptions::default() };
    let structure = transfer_structure_with(&dga, &hodge, options);

    let mut failed = 0;
    for n in 1..=max_arity {
        let report = stasheff_check(&structure, n);
        if !report.passed() {
            failed += 1;
        }
        println!("{report}");
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Math(format!("{input}: {failed} of {max_arity} identity checks failed")))
    }
}

fn cmd_massey(input: &str, a: &str, b: &str, c: &str) -> Result<(), Failure> {
    let dga = load_dga(input)?;
    let hodge = HodgeData::compute(&dga);
    let space = dga.space();
    let parse = |text: &str| -> Result<Element, Failure> {
        parse_combination(space, text).map_err(|e| Failure::Input(format!("`{text}`: {e}")))
    };
    let (ea, eb, ec) = (parse(a)?, parse(b)?, parse(c)?);

    let product = massey_triple(&dga, &hodge, &ea, &eb, &ec).map_err(|e| match e {
        MasseyError::NotHomogeneous(_) => Failure::Input(format!("<{a}, {b}, {c}>: {e}")),
        defined_or_harmonic => Failure::Math(format!("<{a}, {b}, {c}>: {defined_or_harmonic}")),
    })?;

    println!("representative: {}", product.representative.display(space));
    println!("indeterminacy dimension: {}", product.indeterminacy.len());

    let structure = transfer_structure_with(
        &dga,
        &hodge,
        TransferOptions { max_arity: 3, ..TransferOptions::default() },
    );
    let m3 = structure
        .apply(&[ea, eb, ec])
        .expect("massey inputs were already checked to be harmonic");
    println!("m3: {}", m3.display(space));

    let signs = product.admissible_signs(space, &m3);
    if signs.is_empty() {
        println!("verdict: m3 does not match the triple product up to sign");
        Err(Failure::Math(format!("<{a}, {b}, {c}>: m3 disagrees with the triple product")))
    } else {
        let rendered: Vec<String> = signs.iter().map(|s| format!("{s:+}")).collect();
        println!("verdict: m3 matches massey with sign {}", rendered.join(","));
        Ok(())
    }
}

fn cmd_corpus_list() -> Result<(), Failure> {
    for entry in &corpus::ENTRIES {
        println!("{:<12}{:<12}{}", entry.name, entry.kind.as_str(), entry.description);
    }
    Ok(())
}

fn cmd_corpus_emit(name: &str, out: Option<&Path>) -> Result<(), Failure> {
    let text = corpus::emit(name).ok_or_else(|| {
        Failure::Math(format!(
            "unknown corpus entry `{name}` (available: {})",
            corpus::names().join(", ")
        ))
    })?;
    match out {
        None => print!("{text}"),
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
    }
    Ok(())
}

/// Parses a linear combination of basis labels: terms are `label` or
/// `coefficient*label` with a rational coefficient, joined by `+` or `-`;
/// a bare `0` stands for the zero element.
fn parse_combination(space: &GradedVectorSpace, text: &str) -> Result<Element, String> {
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut current = String::new();
    let mut sign = 1i64;
    for ch in text.chars() {
        match ch {
            '+' | '-' if current.trim().is_empty() => {
                if ch == '-' {
                    sign = -sign;
                }
            }
            '+' | '-' => {
                terms.push((sign, std::mem::take(&mut current)));
                sign = if ch == '-' { -1 } else { 1 };
            }
            _ => current.push(ch),
        }
    }
    if current.trim().is_empty() {
        return Err("trailing or missing term".into());
    }
    terms.push((sign, current));

    let mut out = Element::zero();
    for (sign, term) in terms {
        let term = term.trim();
        if term == "0" {
            continue;
        }
        let (coeff, label) = match term.split_once('*') {
            Some((c, l)) => (parse_rational(c.trim())?, l.trim()),
            None => (int(1), term),
        };
        let key = space.lookup(label).map_err(|e| e.to_string())?;
        out = out.add(&Element::basis(key).scale(&(coeff * int(sign))));
    }
    Ok(out)
}

fn element_json(space: &GradedVectorSpace, e: &Element) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = e
        .terms()
        .map(|(key, coeff)| {
            serde_json::json!({ "basis": space.label(key), "coeff": format_rational(coeff) })
        })
        .collect();
    terms.into()
}
