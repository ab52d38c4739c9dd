//! Command-line front end for the `arthur-core` library.
//!
//! Every invocation is a pure function of its arguments: identical argument
//! vectors produce byte-identical output. [`run`] takes the argument vector
//! and two output sinks, and returns the process exit code:
//!
//! - `0` — success;
//! - `1` — text-syntax errors (the offending token and byte position are
//!   reported on stderr);
//! - `2` — domain errors (the violated precondition is named on stderr),
//!   oracle mismatches, and command-line usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use arthur_core::arthur::{
    arthur_witness, enumerate_apars, enumerate_lparams, ArthurTypeOutcome,
};
use arthur_core::error::DomainError;
use arthur_core::fibers::fiber_partitions;
use arthur_core::oracle;
use arthur_core::packets::{generalized_weak_packet, weak_packet, WeakPacketReport};
use arthur_core::parameters::{
    dll_data, ArthurParameter, GroupContext, InfinitesimalParameter, LParameter, ParamFlags,
};
use arthur_core::partitions::{ClassicalType, Partition};
use arthur_core::text::{
    parse_aparameter, parse_classical_type, parse_group, parse_label_spec, parse_lambda,
    parse_lparameter, parse_orbit, parse_partition, LabelRegistry, TextError,
};

#[derive(Parser)]
#[command(
    name = "arthur-calc",
    version,
    about = "Calculator for Barbasch-Vogan duality, L-parameters and Arthur parameters",
    max_term_width = 100
)]
struct Cli {
    /// Emit JSON instead of text (partitions as integer arrays, half-integers
    /// as {"twice": k}, parameters as arrays of summand objects, sets sorted).
    #[arg(long, global = true)]
    json: bool,

    /// Cap the number of elements printed from enumerated sets.
    #[arg(long, global = true, value_name = "N")]
    limit: Option<usize>,

    /// Re-verify fibers and enumerations against brute force before printing;
    /// a mismatch is a domain error (exit code 2).
    #[arg(long, global = true)]
    oracle: bool,

    /// Register a label before parsing: NAME:DIM:KIND[:ram], where KIND is
    /// O (orthogonal), S (symplectic) or N (non-self-dual, with dual NAME^),
    /// and a trailing :ram marks the label ramified. May be repeated.
    /// The one-dimensional orthogonal unramified label `1` is predeclared.
    #[arg(long, global = true, value_name = "SPEC")]
    label: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition arithmetic: transpose, collapse, duality, dominance.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Nilpotent orbits: duality with very-even labels, closure order.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// The duality preimage of a special partition, as typed partitions.
    Fiber {
        /// Classical type of the target partition: B, C or D.
        ctype: String,
        /// The target partition, e.g. "[5,3,1^3]".
        partition: String,
    },
    /// Operations on individual L-parameters and Arthur parameters.
    #[command(subcommand)]
    Param(ParamCmd),
    /// Enumerate all parameters with a given infinitesimal parameter.
    #[command(subcommand)]
    Enum(EnumCmd),
    /// The parameter-level weak local Arthur packet seeded by an
    /// anti-tempered Arthur parameter.
    WeakPacket {
        /// The group, e.g. SO11, Sp10 or SO10.
        group: String,
        /// The seed parameter, e.g. "1:S1:S4 + 1:S1:S2 + 1:S1:S2 + 1:S1:S2".
        psi: String,
    },
    /// The generalized weak packet attached to a dual-side orbit and an
    /// infinitesimal parameter.
    GeneralizedWeakPacket {
        /// The group, e.g. SO11, Sp10 or SO10.
        group: String,
        /// The dual-side orbit, e.g. "B:[5,3,1^3]".
        orbit: String,
        /// The infinitesimal parameter, e.g. "1[3/2] + 1[1/2] + 1[-1/2] + 1[-3/2]".
        lambda: String,
    },
}

#[derive(Subcommand)]
enum PartitionCmd {
    /// Transpose (conjugate) a partition.
    Transpose { partition: String },
    /// The largest partition of the given classical type below the input.
    Collapse { ctype: String, partition: String },
    /// Barbasch-Vogan duality; prints the typed image partition.
    Dbv { ctype: String, partition: String },
    /// Dominance comparison of two partitions of equal size.
    Dominance { left: String, right: String },
    /// Whether the partition is special (fixed by the double dual).
    Special { ctype: String, partition: String },
}

#[derive(Subcommand)]
enum OrbitCmd {
    /// Barbasch-Vogan duality at orbit level, tracking very-even labels.
    Dbv { orbit: String },
    /// Closure-order comparison of two orbits of the same group.
    Compare { left: String, right: String },
}

#[derive(Subcommand)]
enum ParamCmd {
    /// The L-parameter attached to an Arthur parameter.
    PhiOfPsi { psi: String },
    /// The infinitesimal parameter of an L- or Arthur parameter.
    Lambda { param: String },
    /// The underlying partition(s): p(phi) for an L-parameter, the
    /// Arthur-side and dual-side partitions for an Arthur parameter.
    Partitions { param: String },
    /// The dual Arthur parameter (S_a and S_b factors swapped).
    Hat { psi: String },
    /// Decide whether an L-parameter is of Arthur type for the group, and
    /// construct the witness when it is.
    ArthurType { group: String, phi: String },
    /// Classification flags of an L- or Arthur parameter.
    Classify { param: String },
    /// The semisimple/nilpotent data of an unramified L-parameter.
    Dll { group: String, phi: String },
}

#[derive(Subcommand)]
enum EnumCmd {
    /// All L-parameters of the group with the given infinitesimal parameter.
    Lparams { group: String, lambda: String },
    /// All Arthur parameters of the group with the given infinitesimal
    /// parameter.
    Apars { group: String, lambda: String },
}

/// Runs the command line. Output goes to `stdout`, diagnostics to `stderr`;
/// the return value is the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let _ = stdout.write_all(output.as_bytes());
            0
        }
        Err(TextError::Parse(err)) => {
            let _ = writeln!(stderr, "{err}");
            1
        }
        Err(TextError::Domain(err)) => {
            let _ = writeln!(stderr, "error: {err}");
            2
        }
    }
}

/// Dispatches a parsed invocation and renders its full output.
fn execute(cli: &Cli) -> Result<String, TextError> {
    let mut registry = LabelRegistry::default();
    for spec in &cli.label {
        let rho = parse_label_spec(spec)?;
        registry.register(&rho);
    }
    let out = Output {
        json: cli.json,
        limit: cli.limit,
    };
    match &cli.command {
        Command::Partition(cmd) => run_partition(cmd, cli.oracle, &out),
        Command::Orbit(cmd) => run_orbit(cmd, &out),
        Command::Fiber { ctype, partition } => run_fiber(ctype, partition, cli.oracle, &out),
        Command::Param(cmd) => run_param(cmd, &registry, &out),
        Command::Enum(cmd) => run_enum(cmd, &registry, cli.oracle, &out),
        Command::WeakPacket { group, psi } => {
            run_weak_packet(group, psi, &registry, cli.oracle, &out)
        }
        Command::GeneralizedWeakPacket {
            group,
            orbit,
            lambda,
        } => run_generalized(group, orbit, lambda, &registry, cli.oracle, &out),
    }
}

/// Output configuration: JSON versus text, and the enumeration cap.
struct Output {
    json: bool,
    limit: Option<usize>,
}

impl Output {
    /// Applies `--limit` to an enumerated set.
    fn cap<T>(&self, items: Vec<T>) -> Vec<T> {
        match self.limit {
            Some(n) if items.len() > n => items.into_iter().take(n).collect(),
            _ => items,
        }
    }

    /// Renders a single value: its display form, or the JSON value.
    fn scalar(&self, text: impl std::fmt::Display, value: Value) -> String {
        if self.json {
            format!("{value}\n")
        } else {
            format!("{text}\n")
        }
    }

    /// Renders a list, one display form per line, or a JSON array.
    fn list<T: std::fmt::Display>(&self, items: &[T], values: Vec<Value>) -> String {
        if self.json {
            format!("{}\n", Value::Array(values))
        } else {
            let mut buf = String::new();
            for item in items {
                let _ = writeln!(buf, "{item}");
            }
            buf
        }
    }
}

/// JSON form of a typed partition, e.g. the result of a duality map.
fn typed_partition_json(p: &Partition, x: ClassicalType) -> Value {
    json!({ "ctype": x.name(), "partition": p })
}

fn typed_partition_text(p: &Partition, x: ClassicalType) -> String {
    format!("{}:{}", x.name(), p)
}

fn serialize<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serialization of output values cannot fail")
}

fn run_partition(cmd: &PartitionCmd, oracle_on: bool, out: &Output) -> Result<String, TextError> {
    match cmd {
        PartitionCmd::Transpose { partition } => {
            let p = parse_partition(partition)?;
            let t = p.transpose();
            Ok(out.scalar(&t, serialize(&t)))
        }
        PartitionCmd::Collapse { ctype, partition } => {
            let x = parse_classical_type(ctype)?;
            let p = parse_partition(partition)?;
            let c = p.collapse(x)?;
            if oracle_on {
                let brute = oracle::max_type_minorant(&p, x);
                if brute.as_ref() != Some(&c) {
                    return Err(oracle_mismatch(
                        "collapse",
                        format!(
                            "computed {c} but the brute-force maximum type-{} minorant is {}",
                            x.name(),
                            brute.map_or_else(|| "absent".to_string(), |q| q.to_string()),
                        ),
                    ));
                }
            }
            Ok(out.scalar(&c, serialize(&c)))
        }
        PartitionCmd::Dbv { ctype, partition } => {
            let x = parse_classical_type(ctype)?;
            let p = parse_partition(partition)?;
            let (d, y) = p.dbv(x)?;
            Ok(out.scalar(typed_partition_text(&d, y), typed_partition_json(&d, y)))
        }
        PartitionCmd::Dominance { left, right } => {
            let p = parse_partition(left)?;
            let q = parse_partition(right)?;
            let rel = p.dominance(&q)?;
            Ok(out.scalar(rel, serialize(&rel)))
        }
        PartitionCmd::Special { ctype, partition } => {
            let x = parse_classical_type(ctype)?;
            let p = parse_partition(partition)?;
            let s = p.is_special(x)?;
            Ok(out.scalar(s, Value::Bool(s)))
        }
    }
}

fn run_orbit(cmd: &OrbitCmd, out: &Output) -> Result<String, TextError> {
    match cmd {
        OrbitCmd::Dbv { orbit } => {
            let o = parse_orbit(orbit)?;
            let d = arthur_core::orbits::dbv_orbit(&o)?;
            Ok(out.scalar(&d, serialize(&d)))
        }
        OrbitCmd::Compare { left, right } => {
            let a = parse_orbit(left)?;
            let b = parse_orbit(right)?;
            let rel = a.closure_compare(&b)?;
            Ok(out.scalar(rel, serialize(&rel)))
        }
    }
}

fn run_fiber(
    ctype: &str,
    partition: &str,
    oracle_on: bool,
    out: &Output,
) -> Result<String, TextError> {
    let x = parse_classical_type(ctype)?;
    let p = parse_partition(partition)?;
    let fiber = fiber_partitions(&p, x)?;
    if oracle_on {
        let brute = oracle::dbv_preimage(&p, x)?;
        if fiber != brute {
            return Err(oracle_mismatch(
                "fiber",
                format!(
                    "move-sequence fiber has {} members but brute-force preimage has {}",
                    fiber.len(),
                    brute.len()
                ),
            ));
        }
    }
    let fiber = out.cap(fiber);
    let texts: Vec<String> = fiber
        .iter()
        .map(|(q, y)| typed_partition_text(q, *y))
        .collect();
    let values: Vec<Value> = fiber
        .iter()
        .map(|(q, y)| typed_partition_json(q, *y))
        .collect();
    Ok(out.list(&texts, values))
}

/// Parses a string as an Arthur parameter when its syntax says so, and as
/// an L-parameter otherwise. The grammars are disjoint: Arthur summands
/// carry two block factors (`rho:Sa:Sb`), L-summands exactly one.
enum AnyParam {
    L(LParameter),
    A(ArthurParameter),
}

fn parse_any_param(text: &str, registry: &LabelRegistry) -> Result<AnyParam, TextError> {
    match parse_aparameter(text, registry) {
        Ok(psi) => Ok(AnyParam::A(psi)),
        Err(_) => Ok(AnyParam::L(parse_lparameter(text, registry)?)),
    }
}

fn flags_text(flags: &ParamFlags) -> String {
    format!(
        "tempered={}\nanti_tempered={}\nbasic={}\nunramified={}\nreal_infinitesimal={}\nself_dual={}",
        flags.tempered,
        flags.anti_tempered,
        flags.basic,
        flags.unramified,
        flags.real_infinitesimal,
        flags.self_dual
    )
}

fn run_param(cmd: &ParamCmd, registry: &LabelRegistry, out: &Output) -> Result<String, TextError> {
    match cmd {
        ParamCmd::PhiOfPsi { psi } => {
            let psi = parse_aparameter(psi, registry)?;
            let phi = psi.phi();
            Ok(out.scalar(&phi, serialize(&phi)))
        }
        ParamCmd::Lambda { param } => {
            let lambda = match parse_any_param(param, registry)? {
                AnyParam::A(psi) => psi.lambda(),
                AnyParam::L(phi) => phi.lambda(),
            };
            Ok(out.scalar(&lambda, serialize(&lambda)))
        }
        ParamCmd::Partitions { param } => match parse_any_param(param, registry)? {
            AnyParam::A(psi) => {
                let (pa, pd) = (psi.partition_a(), psi.partition_d());
                Ok(out.scalar(
                    format!("A: {pa}\nD: {pd}"),
                    json!({ "a": pa, "d": pd }),
                ))
            }
            AnyParam::L(phi) => {
                let p = phi.partition();
                Ok(out.scalar(&p, serialize(&p)))
            }
        },
        ParamCmd::Hat { psi } => {
            let psi = parse_aparameter(psi, registry)?;
            let hat = psi.hat();
            Ok(out.scalar(&hat, serialize(&hat)))
        }
        ParamCmd::ArthurType { group, phi } => {
            let g = parse_group(group)?;
            let phi = parse_lparameter(phi, registry)?;
            let outcome = arthur_witness(&phi, &g)?;
            let (status, witness) = match &outcome {
                ArthurTypeOutcome::Witness(psi) => ("witness", Some(psi)),
                ArthurTypeOutcome::GlOnly(psi) => ("gl-only", Some(psi)),
                ArthurTypeOutcome::NotArthurType => ("not-arthur-type", None),
            };
            let text = match witness {
                Some(psi) => format!("{status}: {psi}"),
                None => status.to_string(),
            };
            Ok(out.scalar(text, json!({ "status": status, "witness": witness })))
        }
        ParamCmd::Classify { param } => {
            let flags = match parse_any_param(param, registry)? {
                AnyParam::A(psi) => psi.classify(),
                AnyParam::L(phi) => phi.classify(),
            };
            Ok(out.scalar(flags_text(&flags), serialize(&flags)))
        }
        ParamCmd::Dll { group, phi } => {
            let g = parse_group(group)?;
            let phi = parse_lparameter(phi, registry)?;
            let (semisimple, nilpotent) = dll_data(&phi, &g)?;
            Ok(out.scalar(
                format!("semisimple: {semisimple}\nnilpotent: {nilpotent}"),
                json!({ "semisimple": semisimple, "nilpotent": nilpotent }),
            ))
        }
    }
}

fn oracle_mismatch(operation: &str, detail: String) -> TextError {
    TextError::Domain(DomainError::OracleMismatch {
        operation: operation.to_string(),
        detail,
    })
}

/// `--oracle` check for the L-parameter enumeration.
fn check_lparams(
    computed: &[LParameter],
    lambda: &InfinitesimalParameter,
    g: &GroupContext,
) -> Result<(), TextError> {
    let brute = oracle::lparams_direct(lambda, g);
    if computed != brute {
        return Err(oracle_mismatch(
            "enum lparams",
            format!(
                "segment enumeration has {} members but brute force has {}",
                computed.len(),
                brute.len()
            ),
        ));
    }
    Ok(())
}

/// `--oracle` check for the Arthur-parameter enumeration.
fn check_apars(
    computed: &[ArthurParameter],
    lambda: &InfinitesimalParameter,
    g: &GroupContext,
) -> Result<(), TextError> {
    let brute = oracle::apars_direct(lambda, g);
    if computed != brute {
        return Err(oracle_mismatch(
            "enum apars",
            format!(
                "witness enumeration has {} members but brute force has {}",
                computed.len(),
                brute.len()
            ),
        ));
    }
    Ok(())
}

fn run_enum(
    cmd: &EnumCmd,
    registry: &LabelRegistry,
    oracle_on: bool,
    out: &Output,
) -> Result<String, TextError> {
    match cmd {
        EnumCmd::Lparams { group, lambda } => {
            let g = parse_group(group)?;
            let lambda = parse_lambda(lambda, registry)?;
            let phis = enumerate_lparams(&lambda, &g)?;
            if oracle_on {
                check_lparams(&phis, &lambda, &g)?;
            }
            let phis = out.cap(phis);
            let values = phis.iter().map(serialize).collect();
            Ok(out.list(&phis, values))
        }
        EnumCmd::Apars { group, lambda } => {
            let g = parse_group(group)?;
            let lambda = parse_lambda(lambda, registry)?;
            let psis = enumerate_apars(&lambda, &g)?;
            if oracle_on {
                check_apars(&psis, &lambda, &g)?;
            }
            let psis = out.cap(psis);
            let values = psis.iter().map(serialize).collect();
            Ok(out.list(&psis, values))
        }
    }
}

/// Renders a weak-packet report: the shared fields in text form, or the
/// serialized report in JSON form.
fn render_report(report: &WeakPacketReport, out: &Output) -> String {
    let report = WeakPacketReport {
        lpar_fiber: out.cap(report.lpar_fiber.clone()),
        apar_fiber: out.cap(report.apar_fiber.clone()),
        leq_set: out.cap(report.leq_set.clone()),
        ..report.clone()
    };
    if out.json {
        return format!("{}\n", serialize(&report));
    }
    let mut buf = String::new();
    let _ = writeln!(buf, "lambda: {}", report.lambda);
    let _ = writeln!(buf, "orbit: {}", report.target_orbit);
    let _ = writeln!(buf, "lpar_fiber:");
    for phi in &report.lpar_fiber {
        let _ = writeln!(buf, "  {phi}");
    }
    let _ = writeln!(buf, "apar_fiber:");
    for psi in &report.apar_fiber {
        let _ = writeln!(buf, "  {psi}");
    }
    let _ = writeln!(buf, "leq_set:");
    for phi in &report.leq_set {
        let _ = writeln!(buf, "  {phi}");
    }
    let _ = writeln!(buf, "all_arthur: {}", report.all_arthur);
    buf
}

fn run_weak_packet(
    group: &str,
    psi: &str,
    registry: &LabelRegistry,
    oracle_on: bool,
    out: &Output,
) -> Result<String, TextError> {
    let g = parse_group(group)?;
    let psi = parse_aparameter(psi, registry)?;
    let report = weak_packet(&psi, &g)?;
    if oracle_on {
        let phis = enumerate_lparams(&report.lambda, &g)?;
        check_lparams(&phis, &report.lambda, &g)?;
        let psis = enumerate_apars(&report.lambda, &g)?;
        check_apars(&psis, &report.lambda, &g)?;
    }
    Ok(render_report(&report, out))
}

fn run_generalized(
    group: &str,
    orbit: &str,
    lambda: &str,
    registry: &LabelRegistry,
    oracle_on: bool,
    out: &Output,
) -> Result<String, TextError> {
    let g = parse_group(group)?;
    let orbit = parse_orbit(orbit)?;
    let lambda = parse_lambda(lambda, registry)?;
    let psis = generalized_weak_packet(&orbit, &lambda, &g)?;
    if oracle_on {
        let all = enumerate_apars(&lambda, &g)?;
        check_apars(&all, &lambda, &g)?;
    }
    let psis = out.cap(psis);
    let values = psis.iter().map(serialize).collect();
    Ok(out.list(&psis, values))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Runs the CLI against string arguments, capturing output and code.
    fn call(args: &[&str]) -> (i32, String, String) {
        let mut argv = vec!["arthur-calc"];
        argv.extend_from_slice(args);
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = run(argv, &mut stdout, &mut stderr);
        (
            code,
            String::from_utf8(stdout).unwrap(),
            String::from_utf8(stderr).unwrap(),
        )
    }

    #[test]
    fn duality_example() {
        let (code, out, _) = call(&["partition", "dbv", "C", "[4,2^3]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "B:[5,3,1^3]\n");
    }

    #[test]
    fn fiber_example() {
        let (code, out, _) = call(&["fiber", "B", "[5,3,1^3]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "C:[4,2^2,1^2]\nC:[4,2^3]\n");
        let (code, out, _) = call(&["--oracle", "fiber", "B", "[5,3,1^3]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "C:[4,2^2,1^2]\nC:[4,2^3]\n");
    }

    #[test]
    fn witness_example() {
        let (code, out, _) = call(&[
            "param",
            "arthur-type",
            "SO11",
            "1:S4 + 1[1]:S2 + 1[0]:S2 + 1[-1]:S2",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "witness: 1:S4:S1 + 1:S2:S3\n");
    }

    #[test]
    fn exit_codes() {
        // Parse error: bad token, position reported.
        let (code, _, err) = call(&["partition", "transpose", "[4;2]"]);
        assert_eq!(code, 1);
        assert!(err.contains("at byte 2"), "stderr was: {err}");
        assert!(err.contains("';'"), "stderr was: {err}");
        // Domain error: the violated precondition is named.
        let (code, _, err) = call(&["partition", "collapse", "B", "[2,2]"]);
        assert_eq!(code, 2);
        assert!(err.contains("size"), "stderr was: {err}");
        // Usage error.
        let (code, _, _) = call(&["no-such-command"]);
        assert_eq!(code, 2);
        // Help prints to stdout and succeeds.
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("weak-packet"));
    }

    #[test]
    fn json_shapes() {
        let (code, out, _) = call(&["--json", "partition", "dbv", "C", "[4,2^3]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"ctype\":\"B\",\"partition\":[5,3,1,1,1]}\n");
        let (code, out, _) = call(&["--json", "param", "phi-of-psi", "1:S2:S1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "[{\"a\":2,\"rho\":\"1\",\"twist\":{\"twice\":0}}]\n");
    }

    #[test]
    fn limit_caps_lists() {
        let (code, out, _) = call(&["--limit", "1", "fiber", "B", "[5,3,1^3]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "C:[4,2^2,1^2]\n");
    }

    #[test]
    fn labels_register() {
        let (code, out, _) = call(&[
            "--label",
            "tau:2:N",
            "param",
            "lambda",
            "tau:S1 + tau^:S1",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "tau[0] + tau^[0]\n");
        // Unregistered labels are parse errors.
        let (code, _, _) = call(&["param", "lambda", "sigma:S1"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn weak_packet_runs() {
        let (code, out, _) = call(&[
            "weak-packet",
            "SO11",
            "1:S1:S4 + 1:S1:S2 + 1:S1:S2 + 1:S1:S2",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("orbit: B:[5,3,1^3]"), "output was: {out}");
        assert!(out.contains("all_arthur: true"), "output was: {out}");
    }
}
