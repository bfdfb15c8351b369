//! The `fbc` command line: one subcommand per library operation, with an
//! aligned text table by default and a machine format behind `--json`.
//!
//! A JSON invocation emits a single top-level document with fields
//! `command`, `inputs`, `result`, `version`; all numbers are decimal
//! strings so unbounded integers survive serialization, and output is
//! byte-identical across runs. Exit codes: 0 computed, 1 usage or parse
//! error, 2 domain error (non-unimodular matrix, bad modulus, infinite
//! census family, unsupported catalog parameter). Errors go to the
//! diagnostic stream only; no partial JSON document is ever produced.
//!
//! Matrices use the text format `a11,a12;a21,a22`. Presentations use the
//! grammar documented in [`crate::fpgroups`]. The default catalog ceiling
//! for `quotients` and `compare` is 60; the `--max-order` flag overrides
//! it, as does the `PF_CATALOG_MAX` environment variable.

use crate::fpgroups::{
    self, compare_fingerprints, count_epimorphisms, default_catalog, exists_epimorphism,
    quotient_fingerprint, GroupFamily, Presentation,
};
use crate::gl2z::{
    self, classify, enumerate_classes, is_conjugate_z, local_conjugacy, nielsen_decompose, Mat2Z,
    MatClass, ParseMatrixError,
};
use crate::mapping_torus::{
    self, b1_profile, completion_compatible, fingerprint, identify_b1_one, presentation_of,
    CompatVerdict, PROFILE_DEPTH,
};
use crate::zlinalg::HomologySummary;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Write;

#[derive(Parser)]
#[command(
    name = "fbc",
    version,
    about = "Invariants of free-by-cyclic groups F2⋊Z: GL(2,Z) conjugacy, \
             mapping-torus homology, finite-quotient fingerprints",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit the machine-readable JSON document instead of a text table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a monodromy as elliptic, parabolic, or hyperbolic.
    Classify { matrix: String },
    /// First homology of the mapping torus of a monodromy.
    H1 { matrix: String },
    /// Betti numbers of the mapping tori of powers of a monodromy.
    Profile {
        matrix: String,
        #[arg(long)]
        depth: u32,
    },
    /// The full invariant fingerprint of a monodromy.
    Fingerprint { matrix: String },
    /// Test the implemented profinite-completion invariants on a pair.
    Compatible { left: String, right: String },
    /// Identify the homology-Z monodromies (figure-eight, trefoil, Gieseking).
    Identify { matrix: String },
    /// Decide GL(2,Z) conjugacy of two monodromies.
    Conj { left: String, right: String },
    /// Decide conjugacy in GL(2,Z/m) for every m from 2 to a bound.
    Localconj {
        left: String,
        right: String,
        #[arg(long)]
        bound: u64,
    },
    /// List the GL(2,Z) conjugacy classes with a given trace and determinant.
    Census {
        #[arg(long, allow_hyphen_values = true)]
        tr: i64,
        #[arg(long, allow_hyphen_values = true)]
        det: i64,
    },
    /// The mapping-torus presentation of a monodromy.
    Present { matrix: String },
    /// Abelianization of a finitely presented group.
    Abel { presentation: String },
    /// Epimorphisms from a presented group onto one finite group.
    Epi {
        presentation: String,
        /// Target group as family:parameter, e.g. dihedral:10.
        #[arg(long)]
        target: String,
        /// Count all epimorphisms instead of testing existence.
        #[arg(long)]
        count: bool,
    },
    /// The catalog quotients of a presented group.
    Quotients {
        presentation: String,
        #[arg(long = "max-order")]
        max_order: Option<u64>,
    },
    /// Compare the quotient fingerprints of two presented groups.
    Compare {
        left: String,
        right: String,
        #[arg(long = "max-order")]
        max_order: Option<u64>,
    },
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) => m,
            CliError::Domain(m) => m,
        }
    }
}

/// Parses argv (including the program name) and runs one command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e);
                    1
                }
            }
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(doc) => {
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc.envelope()).unwrap()
                );
            } else {
                let _ = write!(out, "{}", doc.text_table());
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

/// One finished command: the machine-format envelope pieces plus the rows
/// of the text table.
struct CommandResult {
    command: &'static str,
    inputs: Value,
    result: Value,
    catalog_version: String,
    rows: Vec<(String, String)>,
}

impl CommandResult {
    fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "version": {
                "tool": env!("CARGO_PKG_VERSION"),
                "catalog": self.catalog_version,
            },
        })
    }

    fn text_table(&self) -> String {
        let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut s = String::new();
        for (k, v) in &self.rows {
            s.push_str(&format!("{:width$}  {}\n", k, v, width = width));
        }
        s
    }
}

fn parse_matrix(text: &str) -> Result<Mat2Z, CliError> {
    text.parse::<Mat2Z>().map_err(|e| match e {
        ParseMatrixError::Syntax(_) => CliError::Usage(e.to_string()),
        ParseMatrixError::NotUnimodular(_) => CliError::Domain(e.to_string()),
    })
}

fn parse_presentation(text: &str) -> Result<Presentation, CliError> {
    Presentation::parse(text).map_err(|e| CliError::Usage(e.to_string()))
}

fn catalog_ceiling(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("PF_CATALOG_MAX") {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| CliError::Usage(format!("PF_CATALOG_MAX is not a number: '{}'", text))),
        Err(_) => Ok(fpgroups::DEFAULT_MAX_ORDER),
    }
}

fn homology_json(h: &HomologySummary) -> Value {
    json!({
        "b1": h.b1.to_string(),
        "torsion": h.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
}

fn class_json(class: &MatClass) -> Value {
    match class {
        MatClass::Elliptic { order } => json!({ "kind": "elliptic", "order": order.to_string() }),
        MatClass::Parabolic => json!({ "kind": "parabolic" }),
        MatClass::Hyperbolic => json!({ "kind": "hyperbolic" }),
    }
}

fn default_catalog_version() -> String {
    fpgroups::catalog_version(fpgroups::DEFAULT_MAX_ORDER)
}

fn execute(command: Command) -> Result<CommandResult, CliError> {
    match command {
        Command::Classify { matrix } => {
            let phi = parse_matrix(&matrix)?;
            let class = classify(&phi);
            Ok(CommandResult {
                command: "classify",
                inputs: json!({ "matrix": phi.to_string() }),
                result: json!({ "class": class_json(&class) }),
                catalog_version: default_catalog_version(),
                rows: vec![
                    ("matrix".into(), phi.to_string()),
                    ("class".into(), class.to_string()),
                ],
            })
        }
        Command::H1 { matrix } => {
            let phi = parse_matrix(&matrix)?;
            let h = mapping_torus::h1(&phi);
            Ok(CommandResult {
                command: "h1",
                inputs: json!({ "matrix": phi.to_string() }),
                result: homology_json(&h),
                catalog_version: default_catalog_version(),
                rows: vec![
                    ("matrix".into(), phi.to_string()),
                    ("h1".into(), h.to_string()),
                ],
            })
        }
        Command::Profile { matrix, depth } => {
            let phi = parse_matrix(&matrix)?;
            if depth < 1 {
                return Err(CliError::Usage("--depth must be at least 1".into()));
            }
            let profile = b1_profile(&phi, depth);
            Ok(CommandResult {
                command: "profile",
                inputs: json!({ "matrix": phi.to_string(), "depth": depth.to_string() }),
                result: json!({
                    "b1_profile": profile.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                }),
                catalog_version: default_catalog_version(),
                rows: vec![
                    ("matrix".into(), phi.to_string()),
                    ("depth".into(), depth.to_string()),
                    (
                        "b1_profile".into(),
                        profile
                            .iter()
                            .map(|b| b.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                    ),
                ],
            })
        }
        Command::Fingerprint { matrix } => {
            let phi = parse_matrix(&matrix)?;
            let f = fingerprint(&phi, PROFILE_DEPTH);
            Ok(CommandResult {
                command: "fingerprint",
                inputs: json!({ "matrix": phi.to_string() }),
                result: json!({
                    "det": f.det.to_string(),
                    "tr": f.tr.to_string(),
                    "h1": homology_json(&f.h1),
                    "class": class_json(&f.class),
                    "b1_profile": f.b1_profile.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                }),
                catalog_version: default_catalog_version(),
                rows: vec![
                    ("matrix".into(), phi.to_string()),
                    ("det".into(), f.det.to_string()),
                    ("tr".into(), f.tr.to_string()),
                    ("h1".into(), f.h1.to_string()),
                    ("class".into(), f.class.to_string()),
                    (
                        "b1_profile".into(),
                        f.b1_profile
                            .iter()
                            .map(|b| b.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                    ),
                ],
            })
        }
        Command::Compatible { left, right } => {
            let phi = parse_matrix(&left)?;
            let psi = parse_matrix(&right)?;
            let verdict = completion_compatible(&phi, &psi);
            let result = match verdict {
                CompatVerdict::Compatible => json!({ "verdict": "compatible" }),
                CompatVerdict::Distinguished(reason) => json!({
                    "verdict": "distinguished",
                    "reason": reason.to_string(),
                }),
            };
            Ok(CommandResult {
                command: "compatible",
                inputs: json!({ "left": phi.to_string(), "right": psi.to_string() }),
                result,
                catalog_version: default_catalog_version(),
                rows: vec![
                    ("left".into(), phi.to_string()),
                    ("right".into(), psi.to_string()),
                    ("verdict".into(), verdict.to_string()),
                ],
            })
        }
        Command::Identify { matrix } => {
            let phi = parse_matrix(&matrix)?;
            let identity = identify_b1_one(&phi);
            Ok(CommandResult {
                command: "identify",
                inputs: json!({ "matrix": phi.to_string() }),
                result: json!({ "identity": identity.to_string() }),
                catalog_version: default_catalog_version(),
                rows: vec![
                    ("matrix".into(), phi.to_string()),
                    ("identity".into(), identity.to_string()),
                ],
            })
        }
        Command::Conj { left, right } => {
            let phi = parse_matrix(&left)?;
            let psi = parse_matrix(&right)?;
            let verdict = is_conjugate_z(&phi, &psi);
            let mut result = json!({ "conjugate": verdict.conjugate });
            let mut rows = vec![
                ("left".into(), phi.to_string()),
                ("right".into(), psi.to_string()),
                ("conjugate".into(), verdict.conjugate.to_string()),
            ];
            if let Some(w) = &verdict.witness {
                result["witness"] = json!(w.to_string());
                rows.push(("witness".into(), w.to_string()));
            }
            Ok(CommandResult {
                command: "conj",
                inputs: json!({ "left": phi.to_string(), "right": psi.to_string() }),
                result,
                catalog_version: default_catalog_version(),
                rows,
            })
        }
        Command::Localconj { left, right, bound } => {
            let phi = parse_matrix(&left)?;
            let psi = parse_matrix(&right)?;
            let report =
                local_conjugacy(&phi, &psi, bound).map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(CommandResult {
                command: "localconj",
                inputs: json!({
                    "left": phi.to_string(),
                    "right": psi.to_string(),
                    "bound": bound.to_string(),
                }),
                result: json!({
                    "all_pass": report.all_pass,
                    "failures": report.failures.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                }),
                catalog_version: default_catalog_version(),
                rows: vec![
                    ("left".into(), phi.to_string()),
                    ("right".into(), psi.to_string()),
                    ("bound".into(), bound.to_string()),
                    ("all_pass".into(), report.all_pass.to_string()),
                    (
                        "failures".into(),
                        if report.failures.is_empty() {
                            "none".into()
                        } else {
                            report
                                .failures
                                .iter()
                                .map(|m| m.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        },
                    ),
                ],
            })
        }
        Command::Census { tr, det } => {
            let classes =
                enumerate_classes(tr, det).map_err(|e| CliError::Domain(e.to_string()))?;
            let reps: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
            let mut rows = vec![
                ("tr".into(), tr.to_string()),
                ("det".into(), det.to_string()),
                ("count".into(), classes.len().to_string()),
            ];
            for (i, rep) in reps.iter().enumerate() {
                rows.push((format!("class[{}]", i), rep.clone()));
            }
            Ok(CommandResult {
                command: "census",
                inputs: json!({ "tr": tr.to_string(), "det": det.to_string() }),
                result: json!({
                    "count": classes.len().to_string(),
                    "classes": reps,
                }),
                catalog_version: default_catalog_version(),
                rows,
            })
        }
        Command::Present { matrix } => {
            let phi = parse_matrix(&matrix)?;
            let p = presentation_of(&phi);
            let word = nielsen_decompose(&phi);
            let word_text = gl2z::word_to_string(&word);
            Ok(CommandResult {
                command: "present",
                inputs: json!({ "matrix": phi.to_string() }),
                result: json!({
                    "presentation": p.to_text(),
                    "nielsen_word": word_text,
                }),
                catalog_version: default_catalog_version(),
                rows: vec![
                    ("matrix".into(), phi.to_string()),
                    ("presentation".into(), p.to_text()),
                    ("nielsen_word".into(), word_text),
                ],
            })
        }
        Command::Abel { presentation } => {
            let p = parse_presentation(&presentation)?;
            let h = p.abelianization();
            Ok(CommandResult {
                command: "abel",
                inputs: json!({ "presentation": p.to_text() }),
                result: homology_json(&h),
                catalog_version: default_catalog_version(),
                rows: vec![
                    ("presentation".into(), p.to_text()),
                    ("abelianization".into(), h.to_string()),
                ],
            })
        }
        Command::Epi {
            presentation,
            target,
            count,
        } => {
            let p = parse_presentation(&presentation)?;
            let (family, parameter) = parse_target(&target)?;
            let table = fpgroups::build_catalog_group(family, parameter)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let target_id = format!("{}:{}", family.name(), parameter);
            let mut rows = vec![
                ("presentation".into(), p.to_text()),
                ("target".into(), target_id.clone()),
                ("order".into(), table.order().to_string()),
            ];
            let result = if count {
                let n = count_epimorphisms(&p, &table);
                rows.push(("count".into(), n.to_string()));
                json!({
                    "target": target_id,
                    "order": table.order().to_string(),
                    "count": n.to_string(),
                })
            } else {
                let exists = exists_epimorphism(&p, &table);
                rows.push(("exists".into(), exists.to_string()));
                json!({
                    "target": target_id,
                    "order": table.order().to_string(),
                    "exists": exists,
                })
            };
            Ok(CommandResult {
                command: "epi",
                inputs: json!({
                    "presentation": p.to_text(),
                    "target": target_id,
                    "count": count,
                }),
                result,
                catalog_version: default_catalog_version(),
                rows,
            })
        }
        Command::Quotients {
            presentation,
            max_order,
        } => {
            let p = parse_presentation(&presentation)?;
            let ceiling = catalog_ceiling(max_order)?;
            let catalog = default_catalog(ceiling);
            let fp = quotient_fingerprint(&p, &catalog);
            let ids: Vec<String> = fp.catalog_ids.iter().map(|id| id.to_string()).collect();
            Ok(CommandResult {
                command: "quotients",
                inputs: json!({
                    "presentation": p.to_text(),
                    "max_order": ceiling.to_string(),
                }),
                result: json!({
                    "quotients": ids,
                    "catalog_version": fp.catalog_version.clone(),
                }),
                catalog_version: catalog.version.clone(),
                rows: vec![
                    ("presentation".into(), p.to_text()),
                    ("max_order".into(), ceiling.to_string()),
                    ("quotients".into(), ids.join(" ")),
                ],
            })
        }
        Command::Compare {
            left,
            right,
            max_order,
        } => {
            let p1 = parse_presentation(&left)?;
            let p2 = parse_presentation(&right)?;
            let ceiling = catalog_ceiling(max_order)?;
            let catalog = default_catalog(ceiling);
            let f1 = quotient_fingerprint(&p1, &catalog);
            let f2 = quotient_fingerprint(&p2, &catalog);
            let diff = compare_fingerprints(&f1, &f2, &catalog)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let entries: Vec<Value> = diff
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "id": e.id.to_string(),
                        "order": e.order.to_string(),
                        "only_in": e.side.to_string(),
                    })
                })
                .collect();
            let mut rows = vec![
                ("left".into(), p1.to_text()),
                ("right".into(), p2.to_text()),
                ("max_order".into(), ceiling.to_string()),
                ("distinguished".into(), (!diff.is_empty()).to_string()),
            ];
            for e in &diff.entries {
                rows.push((
                    format!("only_in_{}", e.side),
                    format!("{} (order {})", e.id, e.order),
                ));
            }
            Ok(CommandResult {
                command: "compare",
                inputs: json!({
                    "left": p1.to_text(),
                    "right": p2.to_text(),
                    "max_order": ceiling.to_string(),
                }),
                result: json!({
                    "distinguished": !diff.is_empty(),
                    "diff": entries,
                    "catalog_version": diff.catalog_version.clone(),
                }),
                catalog_version: catalog.version.clone(),
                rows,
            })
        }
    }
}

fn parse_target(text: &str) -> Result<(GroupFamily, u32), CliError> {
    let (family_text, param_text) = text.split_once(':').ok_or_else(|| {
        CliError::Usage(format!(
            "target must be family:parameter (e.g. dihedral:10), got '{}'",
            text
        ))
    })?;
    let family = GroupFamily::from_name(family_text).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown family '{}': expected cyclic, dihedral, symmetric, alternating, or psl2",
            family_text
        ))
    })?;
    let parameter = param_text
        .parse::<u32>()
        .map_err(|_| CliError::Usage(format!("parameter '{}' is not a number", param_text)))?;
    Ok((family, parameter))
}
