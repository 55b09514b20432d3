//! Command-line front end: `verify`, `bijection`, `enumerate`, `list` and
//! `run-all`. Exit code 0 means every requested check passed, 1 means a
//! verification failed, 2 means the arguments were rejected.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bijection::{
    delta_profile, gks_phi, gks_phi_inverse, merged_delta, phi1, phi1_inverse, phi1_weight, phi2, phi2_inverse,
    phi2_weight, varphi, varphi_inverse, ChargeVector, PairVector,
};
use crate::family::{enumerate, Family, FamilySpec, Member};
use crate::identity::{registry, run_all, verify, IdentityId, Instance, Params, Profile, TRule, VerificationReport};
use crate::partition::Partition;
use crate::word::{littlewood, to_word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "etaforge", version, about = "Exact verification of hook-length expansions of eta powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify one identity
    Verify {
        identity: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Report 0 ms so output is byte-identical across runs
        #[arg(long)]
        stable: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Apply a bijection, or its inverse when --vector is given
    Bijection {
        #[arg(value_enum)]
        name: BijectionName,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        sc: Option<String>,
        #[arg(long)]
        dd: Option<String>,
        #[arg(long)]
        vector: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// List the members of a family
    Enumerate {
        family: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 10)]
        max_weight: usize,
        #[command(flatten)]
        common: Common,
    },
    /// List the registry
    List {
        #[command(flatten)]
        common: Common,
    },
    /// Run the whole registry
    RunAll {
        #[arg(long, default_value = "quick")]
        profile: String,
        /// Comma-separated identity names
        #[arg(long)]
        only: Option<String>,
        /// Worker threads; falls back to ETAFORGE_JOBS, then the core count
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        stable: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BijectionName {
    Gks,
    Phi1,
    Phi2,
    Varphi,
    Littlewood,
    Word,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult = Result<i32, UsageError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Verify { identity, order, t, n, m, stable, common } => {
            let id: IdentityId = identity.parse()?;
            let params = Params { t, n, m };
            let mut report = verify(id, &params, order.unwrap_or(id.default_order()))?;
            if stable {
                report.ms = 0;
            }
            emit_reports(out, &[report], common.format)
        }
        Command::Bijection { name, t, partition, sc, dd, vector, common } => {
            let v = bijection(name, t, partition, sc, dd, vector)?;
            emit_value(out, &v, common.format)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { family, t, max_weight, common } => {
            let family: Family = family.parse()?;
            let members = enumerate(&FamilySpec { family, t, max_weight })?;
            emit_members(out, &members, common.format)?;
            Ok(EXIT_OK)
        }
        Command::List { common } => {
            list(out, common.format)?;
            Ok(EXIT_OK)
        }
        Command::RunAll { profile, only, jobs, stable, common } => {
            let profile: Profile = profile.parse()?;
            let mut instances = registry(profile);
            if let Some(only) = only {
                let ids = only
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(str::parse)
                    .collect::<Result<Vec<IdentityId>, _>>()?;
                instances.retain(|i| ids.contains(&i.id));
            }
            if instances.is_empty() {
                return Err(UsageError("the filter selects no identities".into()));
            }
            let jobs = jobs.or_else(|| std::env::var("ETAFORGE_JOBS").ok().and_then(|s| s.parse().ok()));
            let mut reports = run_pool(&instances, jobs)?;
            if stable {
                reports.iter_mut().for_each(|r| r.ms = 0);
            }
            emit_reports(out, &reports, common.format)
        }
    }
}

fn run_pool(instances: &[Instance], jobs: Option<usize>) -> Result<Vec<VerificationReport>, UsageError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(UsageError("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build()?;
    Ok(pool.install(|| run_all(instances))?)
}

fn emit_reports(out: &mut dyn Write, reports: &[VerificationReport], format: Format) -> CliResult {
    match format {
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Table => {
            for r in reports {
                let params = serde_json::to_string(&r.params)?;
                let status = if r.passed() { "PASS" } else { "FAIL" };
                write!(out, "{status}  {:<11} {:<22} order {:<3} {:>7} ms", r.identity.name(), params, r.order, r.ms)?;
                if let Some(m) = &r.first_mismatch {
                    write!(out, "  first mismatch at {}: {} vs {}", m.exponent, m.lhs, m.rhs)?;
                }
                writeln!(out)?;
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(out, "{passed}/{} passed", reports.len())?;
        }
    }
    Ok(if reports.iter().all(VerificationReport::passed) { EXIT_OK } else { EXIT_FAIL })
}

fn emit_value(out: &mut dyn Write, v: &Value, format: Format) -> Result<(), UsageError> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(v)?)?,
        Format::Table => {
            let obj = v.as_object().expect("bijection output is an object");
            for (k, val) in obj {
                if k == "rows" {
                    continue;
                }
                writeln!(out, "{k:<10} {val}")?;
            }
            if let Some(rows) = obj.get("rows").and_then(Value::as_array) {
                writeln!(out, "{:>3} {:>6} {:>4} {:>5} {:>5}", "i", "Δ_i", "σ_i", "n_i", "v_i")?;
                for r in rows {
                    let c = |k: &str| r[k].to_string();
                    writeln!(out, "{:>3} {:>6} {:>4} {:>5} {:>5}", c("i"), c("delta_i"), c("sigma_i"), c("n_i"), c("v_i"))?;
                }
            }
        }
    }
    Ok(())
}

fn emit_members(out: &mut dyn Write, members: &[Member], format: Format) -> Result<(), UsageError> {
    for m in members {
        let v = match m {
            Member::Single(p) => json!({ "partition": p, "weight": p.weight(), "delta": p.delta() }),
            Member::Pair(a, b) => json!({
                "sc": a,
                "dd": b,
                "weight": a.weight() + b.weight(),
                "delta": a.delta() * b.delta(),
            }),
        };
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&v)?)?,
            Format::Table => match m {
                Member::Single(p) => writeln!(out, "{:>4} {:>3}  {p}", p.weight(), p.delta())?,
                Member::Pair(a, b) => writeln!(out, "{:>4} {:>3}  {a} {b}", m.weight(), a.delta() * b.delta())?,
            },
        }
    }
    if format == Format::Table {
        writeln!(out, "{} members", members.len())?;
    }
    Ok(())
}

fn list(out: &mut dyn Write, format: Format) -> Result<(), UsageError> {
    for &id in IdentityId::ALL {
        let t = match id.t_rule() {
            TRule::None => "-".to_string(),
            TRule::Odd => "odd".to_string(),
            TRule::OddAtLeast3 => "odd>=3".to_string(),
            TRule::AtLeast(k) => format!(">={k}"),
        };
        match format {
            Format::Json => writeln!(
                out,
                "{}",
                json!({ "identity": id, "t": t, "order": id.default_order(), "formula": id.formula() })
            )?,
            Format::Table => writeln!(out, "{:<11} t {:<7} order {:<3} {}", id.name(), t, id.default_order(), id.formula())?,
        }
    }
    Ok(())
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, UsageError> {
    v.ok_or_else(|| UsageError(format!("missing {flag}")))
}

fn parse_partition(s: Option<String>, flag: &str) -> Result<Partition, UsageError> {
    need(s, flag)?.parse::<Partition>().map_err(|e| UsageError(format!("{flag}: {e}")))
}

fn parse_vector(s: &str) -> Result<Vec<i64>, UsageError> {
    serde_json::from_str(s).map_err(|e| UsageError(format!("--vector: {e}")))
}

fn bijection(
    name: BijectionName,
    t: Option<usize>,
    partition: Option<String>,
    sc: Option<String>,
    dd: Option<String>,
    vector: Option<String>,
) -> Result<Value, UsageError> {
    Ok(match name {
        BijectionName::Gks => {
            let t = need(t, "--t")?;
            match vector {
                Some(v) => {
                    let cv = ChargeVector { n: parse_vector(&v)?, modulus: t };
                    let p = gks_phi_inverse(&cv)?;
                    json!({ "t": t, "vector": cv.n, "partition": p, "weight": p.weight() })
                }
                None => {
                    let p = parse_partition(partition, "--partition")?;
                    let cv = gks_phi(&p, t)?;
                    json!({ "t": t, "partition": p, "vector": cv.n, "weight": cv.weight() })
                }
            }
        }
        BijectionName::Phi1 | BijectionName::Phi2 => {
            let t = need(t, "--t")?;
            let one = name == BijectionName::Phi1;
            let (p, n) = match vector {
                Some(v) => {
                    let n = parse_vector(&v)?;
                    let p = if one { phi1_inverse(&n, t)? } else { phi2_inverse(&n, t)? };
                    (p, n)
                }
                None => {
                    let p = parse_partition(partition, "--partition")?;
                    let n = if one { phi1(&p, t)? } else { phi2(&p, t)? };
                    (p, n)
                }
            };
            let w = if one { phi1_weight(&n, t) } else { phi2_weight(&n, t) };
            json!({ "t": t, "partition": p, "vector": n, "weight": w })
        }
        BijectionName::Varphi => {
            let t = need(t, "--t")?;
            let (l, m, pv) = match vector {
                Some(v) => {
                    let pv = PairVector { n: parse_vector(&v)?, t };
                    let (l, m) = varphi_inverse(&pv)?;
                    (l, m, pv)
                }
                None => {
                    let l = parse_partition(sc, "--sc")?;
                    let m = parse_partition(dd, "--dd")?;
                    let pv = varphi(&l, &m, t)?;
                    (l, m, pv)
                }
            };
            let delta = merged_delta(&l, &m);
            let prof = delta_profile(&delta, t);
            let v = pv.macdonald_vector();
            let rows: Vec<Value> = (0..t)
                .map(|k| {
                    json!({
                        "i": k + 1,
                        "delta_i": prof.values[k],
                        "sigma_i": prof.signs[k],
                        "n_i": pv.n[k],
                        "v_i": v[k],
                    })
                })
                .collect();
            json!({
                "t": t,
                "sc": l,
                "dd": m,
                "vector": pv.n,
                "weight": pv.weight(),
                "delta": delta,
                "rows": rows,
            })
        }
        BijectionName::Littlewood => {
            let t = need(t, "--t")?;
            let p = parse_partition(partition, "--partition")?;
            let q = littlewood(&p, t)?;
            json!({ "t": t, "partition": p, "word": to_word(&p).to_string(), "core": q.core, "quotient": q.quotient })
        }
        BijectionName::Word => {
            let p = parse_partition(partition, "--partition")?;
            let w = to_word(&p);
            json!({ "partition": p, "word": w.to_string(), "form": w.form() })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("etaforge").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_json() {
        let (code, out, _) = call(&["verify", "NO", "--order", "6", "--format", "json", "--stable"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"identity":"NO","params":{},"order":6,"status":"pass","first_mismatch":null,"ms":0}"#);
    }

    #[test]
    fn varphi_table() {
        let (code, out, _) = call(&["bijection", "varphi", "--t", "2", "--sc", "[7,5,3,2,2,1,1]", "--dd", "[5,3,1,1]"]);
        assert_eq!(code, 0);
        assert!(out.contains("vector     [-2,-3]"), "{out}");
        assert!(out.contains("Δ_i"));
        assert!(out.contains("  1      8   -1    -2   -11"), "{out}");
        let (_, inv, _) = call(&["bijection", "varphi", "--t", "2", "--vector", "[-2,-3]", "--format", "json"]);
        assert!(inv.contains(r#""sc":[7,5,3,2,2,1,1]"#));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["verify", "NOPE"]).0, 2);
        assert_eq!(call(&["verify", "THM2", "--t", "2"]).0, 2);
        assert_eq!(call(&["run-all", "--only", ""]).0, 2);
        assert_eq!(call(&["run-all", "--jobs", "0", "--only", "NO"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        let (code, _, err) = call(&["bijection", "word", "--partition", "[1,2]"]);
        assert_eq!(code, 2);
        assert!(err.contains("index 1"), "{err}");
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn enumerate_and_list() {
        let (code, out, _) = call(&["enumerate", "DD_T_CORE", "--t", "3", "--max-weight", "10"]);
        assert_eq!(code, 0);
        assert!(out.contains("   2  -1  [2]"), "{out}");
        let (_, out, _) = call(&["list", "--format", "json"]);
        assert_eq!(out.lines().count(), 26);
        let (_, out, _) = call(&["bijection", "word", "--partition", "[4,2,1,1]", "--format", "json"]);
        assert!(out.contains("1001.0110"), "{out}");
    }
}
