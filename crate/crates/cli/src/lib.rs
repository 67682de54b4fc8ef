//! Command-line front end: dimension tables, bases, membership and identity
//! checks, operators, the section pipeline and named mould dumps.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors
//! and malformed input.

mod input;

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use moulde::ari::identity::ad_invpal;
use moulde::ari::{
    ari, ari_bar, dari, fundamental_identity_check, fundamental_identity_direct, lu, mu, named_mould, preari,
    NamedMould,
};
use moulde::maps::{krv_section, lkv_to_krv_ell, w_krv_gate, xi, xi_gate, DEFAULT_DEPTH};
use moulde::mould::{ma, ma_inverse, ma_neg, pari, to_json, unary, Mould, UnaryOp};
use moulde::properties::{check_property_seeds, Property};
use moulde::spaces::{
    dimension_table, ds_ell_member, krv_ell_member, lkv_member, lkv_mould_member, ls_member, solve, vkrv_member,
    Membership, Space,
};
use moulde::words::{angle_bracket, nu_twist, partner, poisson_bracket, NCPoly};

pub use input::{parse_input, read_input, Input};

/// Environment variable capping the worker threads.
pub const THREADS_VAR: &str = "MOULDE_THREADS";

/// An error that ends a command, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

type CmdResult = Result<i32, Failure>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "moulde", version, about = "Exact mould calculus and Kashiwara-Vergne type spaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IdentityKind {
    /// Rearranged form on `N = pari(B)`.
    Fundamental,
    /// Direct form on a push-invariant mould.
    FundamentalDirect,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GateKind {
    WKrv,
    Xi,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Dimension table of a space over ranges of weights and depths.
    Dims {
        #[arg(long)]
        space: String,
        /// Weights, e.g. `3..10` (inclusive) or `5`.
        #[arg(long)]
        n: String,
        /// Depths; defaults to `1..n_max`.
        #[arg(long)]
        r: Option<String>,
    },
    /// Basis of one cell.
    Basis {
        #[arg(long)]
        space: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
    },
    /// Membership, gate, identity or property checks.
    #[command(group(ArgGroup::new("what").required(true).args(["space", "gate", "identity", "property"])))]
    Check {
        #[arg(long)]
        space: Option<String>,
        #[arg(long, value_enum)]
        gate: Option<GateKind>,
        #[arg(long, value_enum)]
        identity: Option<IdentityKind>,
        /// Property name, or `all`.
        #[arg(long)]
        property: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        /// First seed of the property runs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of seeds per property.
        #[arg(long, default_value_t = 100)]
        cases: u64,
    },
    /// Both sides of the fundamental identity.
    Identity {
        #[arg(value_enum, default_value_t = IdentityKind::Fundamental)]
        kind: IdentityKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Apply an operator to one or two inputs.
    Apply {
        #[arg(long)]
        op: String,
        #[arg(long)]
        input: PathBuf,
        /// Second argument of binary operators.
        #[arg(long)]
        with: Option<PathBuf>,
        /// Truncation depth of mould results.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// The section into krv_ell with its stage report.
    Section {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Values of a named mould.
    Dump {
        #[arg(long)]
        mould: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
}

/// Sizes the global thread pool from `MOULDE_THREADS`, once per process.
fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::usage(format!("{THREADS_VAR} must be a positive integer, got {v:?}")))?;
    // A second call in the same process finds the pool already built.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = configure_threads().and_then(|()| dispatch(&cli, out));
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure { code: 2, message: format!("write failed: {e}") }
}

fn exit(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

fn space_arg(s: &str) -> Result<Space, Failure> {
    Space::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Space::ALL.iter().map(|s| s.name()).collect();
        Failure::usage(format!("unknown space {s:?}; expected one of {}", names.join(", ")))
    })
}

/// `a..b`, `a..=b` (both inclusive) or a single value.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::usage(format!("bad range {s:?}; expected e.g. 3..10"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let fmt = cli.format;
    match &cli.cmd {
        Cmd::Dims { space, n, r } => dims(out, fmt, space_arg(space)?, n, r.as_deref()),
        Cmd::Basis { space, n, r } => basis(out, fmt, space_arg(space)?, *n, *r),
        Cmd::Check { space, gate, identity, property, input, depth, seed, cases } => {
            let need_input =
                || input.as_ref().ok_or_else(|| Failure::usage("this check needs --input")).and_then(|p| read_input(p));
            if let Some(s) = space {
                membership(out, fmt, space_arg(s)?, need_input()?)
            } else if let Some(g) = gate {
                gate_check(out, fmt, *g, need_input()?)
            } else if let Some(k) = identity {
                identity_check(out, fmt, *k, need_input()?, *depth)
            } else {
                properties(out, fmt, property.as_deref().unwrap_or("all"), *seed, *cases)
            }
        }
        Cmd::Identity { kind, input, depth } => identity_check(out, fmt, *kind, read_input(input)?, *depth),
        Cmd::Apply { op, input, with, depth } => {
            let second = with.as_ref().map(|p| read_input(p)).transpose()?;
            apply(out, fmt, op, read_input(input)?, second, *depth)
        }
        Cmd::Section { input, depth } => section(out, fmt, read_input(input)?.words("section")?, *depth),
        Cmd::Dump { mould, depth } => dump(out, fmt, mould, *depth),
    }
}

fn dims(out: &mut dyn Write, fmt: Format, space: Space, n: &str, r: Option<&str>) -> CmdResult {
    let ns = parse_range(n)?;
    let rs = match r {
        Some(r) => parse_range(r)?,
        None => 1..=ns.end().saturating_sub(1).max(1),
    };
    let table = dimension_table(space, ns, rs).map_err(|e| Failure::usage(e.to_string()))?;
    match fmt {
        Format::Text => write!(out, "{table}"),
        Format::Json => writeln!(out, "{}", table.to_json()),
    }
    .map_err(io)?;
    Ok(0)
}

fn basis(out: &mut dyn Write, fmt: Format, space: Space, n: usize, r: usize) -> CmdResult {
    let b = solve(space, n, r).map_err(|e| Failure::usage(e.to_string()))?;
    let words: Vec<String> = b.words.iter().map(NCPoly::to_text).collect();
    match fmt {
        Format::Text => {
            let cell = b.r.map(|r| format!(", r = {r}")).unwrap_or_default();
            writeln!(out, "{space}, n = {n}{cell}: dimension {}", b.dim()).map_err(io)?;
            if words.is_empty() {
                for (i, m) in b.moulds.iter().enumerate() {
                    write!(out, "#{}\n{m}", i + 1).map_err(io)?;
                }
            } else {
                for w in &words {
                    writeln!(out, "{w}").map_err(io)?;
                }
            }
        }
        Format::Json => {
            let v = json!({ "space": space, "n": n, "r": b.r, "dim": b.dim(), "words": words, "moulds": b.moulds });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("basis serializes")).map_err(io)?;
        }
    }
    Ok(0)
}

fn report_membership(out: &mut dyn Write, fmt: Format, what: &str, m: &Membership) -> CmdResult {
    let ok = m.holds();
    match fmt {
        Format::Text => write!(out, "{what}\n{m}result: {}\n", if ok { "OK" } else { "FAILED" }),
        Format::Json => {
            let v = json!({ "check": what, "holds": ok, "checks": m.checks });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("membership serializes"))
        }
    }
    .map_err(io)?;
    Ok(exit(ok))
}

fn membership(out: &mut dyn Write, fmt: Format, space: Space, input: Input) -> CmdResult {
    let m = match (space, input) {
        (Space::Lkv, Input::Words(b)) => lkv_member(&b),
        (Space::Lkv, Input::Mould(p)) => lkv_mould_member(&p),
        (Space::Vkrv, i) => vkrv_member(&i.words("vkrv membership")?),
        (Space::Ls, i) => ls_member(&i.mould()?),
        (Space::KrvEll, i) => krv_ell_member(&i.mould()?),
        (Space::DsEll, i) => ds_ell_member(&i.mould()?),
        (Space::GrKrv, _) => return Err(Failure::usage("gr_krv has no membership test; use basis or dims")),
    };
    report_membership(out, fmt, &format!("{space} membership"), &m)
}

fn gate_check(out: &mut dyn Write, fmt: Format, gate: GateKind, input: Input) -> CmdResult {
    match gate {
        GateKind::WKrv => report_membership(out, fmt, "w_krv gate", &w_krv_gate(&input.words("the w_krv gate")?)),
        GateKind::Xi => {
            let b = match input {
                Input::Words(b) => ma_neg(&b).map_err(|e| Failure::usage(e.to_string()))?,
                Input::Mould(m) => m,
            };
            report_membership(out, fmt, "xi gate", &xi_gate(&b))
        }
    }
}

fn identity_check(out: &mut dyn Write, fmt: Format, kind: IdentityKind, input: Input, d: usize) -> CmdResult {
    let bad = |e: moulde::mould::MouldError| Failure::usage(e.to_string());
    let rep = match kind {
        IdentityKind::Fundamental => {
            let n = match input {
                Input::Words(b) => pari(&ma_neg(&nu_twist(&b)).map_err(bad)?),
                Input::Mould(m) => m,
            };
            fundamental_identity_check(&n, d).map_err(bad)?
        }
        IdentityKind::FundamentalDirect => fundamental_identity_direct(&input.mould()?, d).map_err(bad)?,
    };
    let name = match kind {
        IdentityKind::Fundamental => "fundamental",
        IdentityKind::FundamentalDirect => "fundamental-direct",
    };
    match fmt {
        Format::Text => {
            writeln!(out, "{name} identity to depth {d}").map_err(io)?;
            writeln!(out, "push-invariant hypothesis: {}", if rep.hypothesis { "holds" } else { "fails" })
                .map_err(io)?;
            match rep.first_difference {
                None => writeln!(out, "OK"),
                Some(r) => writeln!(out, "FAILED: sides differ in depth {r}"),
            }
            .map_err(io)?;
        }
        Format::Json => {
            let v = json!({ "identity": name, "depth": d, "report": rep });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("report serializes")).map_err(io)?;
        }
    }
    Ok(exit(rep.holds))
}

fn properties(out: &mut dyn Write, fmt: Format, which: &str, seed: u64, cases: u64) -> CmdResult {
    let props: Vec<Property> = if which == "all" {
        Property::ALL.to_vec()
    } else {
        vec![Property::from_name(which).ok_or_else(|| {
            let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
            Failure::usage(format!("unknown property {which:?}; expected all or one of {}", names.join(", ")))
        })?]
    };
    let mut ok = true;
    let mut rows = Vec::new();
    for p in props {
        let res = check_property_seeds(p, seed, cases);
        ok &= res.is_ok();
        match fmt {
            Format::Text => match &res {
                Ok(n) => writeln!(out, "{p}: OK ({n} seeds from {seed})"),
                Err(o) => {
                    writeln!(out, "{p}: FAILED at seed {}: {}", o.seed, o.witness.as_deref().unwrap_or("no witness"))
                }
            }
            .map_err(io)?,
            Format::Json => rows.push(match res {
                Ok(n) => json!({ "property": p, "holds": true, "seeds": n, "first_seed": seed }),
                Err(o) => json!({ "property": p, "holds": false, "failure": o }),
            }),
        }
    }
    if fmt == Format::Json {
        writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialize")).map_err(io)?;
    }
    Ok(exit(ok))
}

/// Result of an operator: a polynomial or a mould.
enum Value {
    Words(NCPoly),
    Mould(Mould),
}

const WORD_OPS: [&str; 5] = ["nu", "partner", "bracket", "poisson", "angle"];
const MOULD_BINARY_OPS: [&str; 6] = ["ari", "ari_bar", "lu", "mu", "preari", "dari"];

fn apply(out: &mut dyn Write, fmt: Format, op: &str, a: Input, b: Option<Input>, depth: Option<usize>) -> CmdResult {
    let mould_err = |e: moulde::mould::MouldError| Failure::usage(format!("{op}: {e}"));
    let binary = ["bracket", "poisson", "angle"].contains(&op) || MOULD_BINARY_OPS.contains(&op);
    if binary != b.is_some() {
        return Err(Failure::usage(if binary {
            format!("{op} needs a second argument (--with)")
        } else {
            format!("{op} takes one argument")
        }));
    }
    let value = if let Some(u) = UnaryOp::from_name(op) {
        Value::Mould(unary(&a.mould()?, u).map_err(mould_err)?)
    } else if MOULD_BINARY_OPS.contains(&op) {
        let (x, y) = (a.mould()?, b.expect("checked above").mould()?);
        let f = match op {
            "ari" => ari,
            "ari_bar" => ari_bar,
            "lu" => lu,
            "mu" => mu,
            "preari" => preari,
            _ => dari,
        };
        Value::Mould(f(&x, &y).map_err(mould_err)?)
    } else if WORD_OPS.contains(&op) {
        let x = a.words(op)?;
        let words_err = |e: moulde::words::WordsError| Failure::usage(format!("{op}: {e}"));
        Value::Words(match op {
            "nu" => nu_twist(&x),
            "partner" => partner(&x).map_err(words_err)?,
            _ => {
                let y = b.expect("checked above").words(op)?;
                match op {
                    "bracket" => x.bracket(&y),
                    "poisson" => poisson_bracket(&x, &y),
                    _ => angle_bracket(&x, &y).map_err(words_err)?,
                }
            }
        })
    } else {
        match op {
            "ma" => Value::Mould(ma(&a.words(op)?).map_err(mould_err)?),
            "ma_neg" => Value::Mould(ma_neg(&a.words(op)?).map_err(mould_err)?),
            "ma_inverse" => Value::Words(ma_inverse(&a.mould()?).map_err(mould_err)?),
            "xi" => {
                let m = match a {
                    Input::Words(b) => ma_neg(&b).map_err(mould_err)?,
                    Input::Mould(m) => m,
                };
                let d = depth.unwrap_or(DEFAULT_DEPTH);
                match xi(&m, d) {
                    Ok(v) => Value::Mould(v),
                    Err(e) => {
                        writeln!(out, "{e}").map_err(io)?;
                        return Ok(1);
                    }
                }
            }
            "ad_invpal" => Value::Mould(ad_invpal(&a.mould()?, depth.unwrap_or(DEFAULT_DEPTH)).map_err(mould_err)?),
            "lkv_embed" => {
                let img = match lkv_to_krv_ell(&a.words(op)?) {
                    Ok(img) => img,
                    Err(e) => {
                        writeln!(out, "{e}").map_err(io)?;
                        return Ok(1);
                    }
                };
                match fmt {
                    Format::Text => write!(
                        out,
                        "word: {}\nmould:\n{}routes agree: {}\nkrv_ell:\n{}",
                        img.word.to_text(),
                        img.mould,
                        img.routes_agree,
                        img.krv_ell
                    ),
                    Format::Json => {
                        writeln!(out, "{}", serde_json::to_string_pretty(&img).expect("image serializes"))
                    }
                }
                .map_err(io)?;
                return Ok(exit(img.holds()));
            }
            _ => return Err(Failure::usage(format!("unknown operator {op:?}"))),
        }
    };
    match value {
        Value::Words(w) => match fmt {
            Format::Text => writeln!(out, "{}", w.to_text()),
            Format::Json => writeln!(out, "{}", json!({ "poly": w.to_text() })),
        },
        Value::Mould(m) => {
            let m = match depth {
                Some(d) => m.truncate(d),
                None => m,
            };
            match fmt {
                Format::Text => write!(out, "{m}"),
                Format::Json => writeln!(out, "{}", to_json(&m)),
            }
        }
    }
    .map_err(io)?;
    Ok(0)
}

fn section(out: &mut dyn Write, fmt: Format, b: NCPoly, d: usize) -> CmdResult {
    if b.is_zero() {
        return Err(Failure::usage("section of the zero polynomial"));
    }
    // The pipeline runs on homogeneous inputs; the output is summed.
    let reports: Vec<_> = b.weights().into_iter().map(|n| krv_section(&b.weight_part(n), d)).collect();
    let ok = reports.iter().all(|r| r.holds());
    let mut total: Option<Mould> = None;
    if ok {
        for r in &reports {
            let m = r.output().expect("a passing report has an output");
            total = Some(match total {
                Some(t) => t.add(m),
                None => m.clone(),
            });
        }
    }
    match fmt {
        Format::Text => {
            for r in &reports {
                write!(out, "{r}").map_err(io)?;
            }
            if let Some(t) = &total {
                write!(out, "section:\n{t}").map_err(io)?;
            }
        }
        Format::Json => {
            let v = json!({ "holds": ok, "reports": reports, "section": total });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("reports serialize")).map_err(io)?;
        }
    }
    Ok(exit(ok))
}

fn dump(out: &mut dyn Write, fmt: Format, name: &str, d: usize) -> CmdResult {
    let named = NamedMould::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = NamedMould::ALL.iter().map(|m| m.name()).collect();
        Failure::usage(format!("unknown mould {name:?}; expected one of {}", names.join(", ")))
    })?;
    if d == 0 {
        return Err(Failure::usage("--depth must be at least 1"));
    }
    let m = named_mould(named, d).map_err(|e| Failure::usage(e.to_string()))?;
    match fmt {
        Format::Text => write!(out, "{name} to depth {d}\n{m}"),
        Format::Json => writeln!(out, "{}", moulde::mould::to_json_pretty(&m)),
    }
    .map_err(io)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..10").unwrap(), 3..=10);
        assert_eq!(parse_range("3..=10").unwrap(), 3..=10);
        assert_eq!(parse_range("5").unwrap(), 5..=5);
        assert!(parse_range("7..3").is_err());
        assert!(parse_range("a..3").is_err());
    }
}
