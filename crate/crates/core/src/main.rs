use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopfcert::cosetcoalg::{check_block_closure, decompose};
use hopfcert::groupalg::TwoGroup;
use hopfcert::obstruct::{emit_report, pipeline_a5, pipeline_s4, pipeline_s8, replay, ObstructionCertificate};
use hopfcert::subgroup::SubgroupTable;
use hopfcert::twist::{builtin, Cocycle, TwistElt};
use hopfcert::{Error, Perm, Result, Scalar};

#[derive(Parser)]
#[command(name = "hopfcert", version, about = "Exact checks for twisted group algebras and their Hopf orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a pipeline; exit code 0 iff every identity holds.
    Verify {
        #[arg(value_enum)]
        which: Which,
    },
    /// Double coset blocks of (K G)_J as JSON.
    Decompose {
        /// `S<n>` or `A<n>`; defaults to the builtin's group.
        #[arg(long)]
        group: Option<String>,
        /// Generators of M in cycle notation, comma separated.
        #[arg(long)]
        subgroup: Option<String>,
        /// Builtin name or path to a cocycle table.
        #[arg(long)]
        cocycle: String,
        /// Also expand Delta_J of every group element and confirm it stays
        /// inside its block (slow for S8).
        #[arg(long)]
        check_closure: bool,
    },
    /// Twist axioms, radical and Wedderburn profile of a cocycle.
    TwistCheck {
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Write every certificate and the S4 report as JSON.
    Report {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    A5,
    S4,
    S8,
    All,
}

struct Setup {
    group: Option<SubgroupTable>,
    m: Option<TwoGroup>,
    cocycle: Cocycle,
}

fn load_cocycle(arg: &str) -> Result<Setup> {
    if builtin::NAMES.contains(&arg) {
        let s = builtin::load(arg)?;
        return Ok(Setup {
            group: Some(s.group),
            m: Some(s.m),
            cocycle: s.cocycle,
        });
    }
    let text = std::fs::read_to_string(arg)?;
    let name = Path::new(arg).file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
    Ok(Setup {
        group: None,
        m: None,
        cocycle: Cocycle::parse(name, &text)?,
    })
}

fn parse_gens(s: &str, degree: usize) -> Result<Vec<Perm>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| Perm::parse(t, degree)).collect()
}

/// Resolve G and M from the flags, falling back on the builtin's own, then
/// on `S_{2k}` with `M = <(12), ..., (2k-1 2k)>` for a rank `k` table.
fn resolve(setup: &mut Setup, group: Option<&str>, subgroup: Option<&str>) -> Result<(SubgroupTable, TwoGroup)> {
    let k = setup.cocycle.rank();
    let g = match group {
        Some(spec) => SubgroupTable::from_spec(spec)?,
        None => match setup.group.take() {
            Some(g) => g,
            None => SubgroupTable::symmetric(2 * k),
        },
    };
    let m = match subgroup {
        Some(gens) => TwoGroup::new(g.degree(), &parse_gens(gens, g.degree())?)?,
        None => match setup.m.take() {
            Some(m) if m.degree() == g.degree() => m,
            Some(m) => TwoGroup::new(g.degree(), m.generators())?,
            None => builtin::transposition_group(g.degree(), k)?,
        },
    };
    if !m.table().is_subgroup_of(&g) {
        return Err(Error::NotContained(format!("{:?}", m.generators().iter().map(Perm::to_string).collect::<Vec<_>>())));
    }
    if m.rank() != k {
        return Err(Error::RankMismatch(m.rank(), k));
    }
    Ok((g, m))
}

fn run_certificate(name: &str, f: fn() -> Result<ObstructionCertificate>) -> bool {
    match f() {
        Ok(c) => {
            let replayed = replay(&c).is_ok();
            let ok = c.checks.iter().all(|k| k.passed) && replayed;
            println!(
                "{name}: {} identities, witness {} (2-adic defect {}), replay {}",
                c.checks.len(),
                c.witness_text,
                c.defect,
                if replayed { "ok" } else { "FAILED" }
            );
            ok
        }
        Err(e) => {
            println!("{name}: FAILED\n{e}");
            false
        }
    }
}

fn verify(which: Which) -> bool {
    let mut ok = true;
    if matches!(which, Which::A5 | Which::All) {
        ok &= run_certificate("a5", pipeline_a5);
    }
    if matches!(which, Which::S4 | Which::All) {
        match pipeline_s4() {
            Ok(r) => {
                println!(
                    "s4: {} identities, closure under Delta {}, under Delta_T {}, J in XxX {}, pairing {}",
                    r.checks.len(),
                    r.closure_untwisted.passed(),
                    r.closure_t.passed(),
                    r.j_in_x_tensor_x,
                    r.pairing
                );
                ok &= r.passed();
            }
            Err(e) => {
                println!("s4: FAILED\n{e}");
                ok = false;
            }
        }
    }
    if matches!(which, Which::S8 | Which::All) {
        ok &= run_certificate("s8", pipeline_s8);
    }
    println!("{}", if ok { "all identities hold" } else { "verification failed" });
    ok
}

fn decompose_json(cocycle: &str, group: Option<&str>, subgroup: Option<&str>, closure: bool) -> Result<Value> {
    let mut setup = load_cocycle(cocycle)?;
    let (g, m) = resolve(&mut setup, group, subgroup)?;
    let twist: TwistElt<Scalar> = TwistElt::build(&m, &setup.cocycle)?;
    let blocks = decompose(&g, &twist)?;
    let mut out = Vec::new();
    let mut total = 0;
    for b in &blocks {
        total += b.size();
        let mut r = serde_json::to_value(b.report()?)?;
        if closure {
            r["closed"] = json!(check_block_closure(&twist, b));
        }
        out.push(r);
    }
    Ok(json!({
        "cocycle": setup.cocycle.name(),
        "group_order": g.order(),
        "subgroup": m.generators().iter().map(Perm::to_string).collect::<Vec<_>>(),
        "block_count": blocks.len(),
        "total_size": total,
        "blocks": out,
    }))
}

fn twist_check_json(cocycle: &str, group: Option<&str>, subgroup: Option<&str>) -> Result<(Value, bool)> {
    let mut setup = load_cocycle(cocycle)?;
    let (_, m) = resolve(&mut setup, group, subgroup)?;
    let c = &setup.cocycle;
    let twist: TwistElt<Scalar> = TwistElt::build(&m, c)?;
    let axioms = twist.axiom_report();
    let v = json!({
        "cocycle": c.name(),
        "subgroup": m.generators().iter().map(Perm::to_string).collect::<Vec<_>>(),
        "bicharacter": c.is_bicharacter(),
        "nondegenerate": c.is_nondegenerate(),
        "radical": c.radical().iter().map(|a| c.label(*a)).collect::<Vec<_>>(),
        "profile": c.wedderburn_profile()?,
        "axioms": axioms,
    });
    Ok((v, axioms.passed()))
}

fn report(out: &Path) -> Result<bool> {
    let mut certs = Vec::new();
    let mut errors = Vec::new();
    for (name, f) in [("a5", pipeline_a5 as fn() -> _), ("s8", pipeline_s8)] {
        match f() {
            Ok(c) => certs.push(c),
            Err(e) => errors.push(json!({"pipeline": name, "error": e.to_string()})),
        }
    }
    let s4 = match pipeline_s4() {
        Ok(r) => Some(r),
        Err(e) => {
            errors.push(json!({"pipeline": "s4", "error": e.to_string()}));
            None
        }
    };
    let mut v = emit_report(&certs, s4.as_ref());
    let ok = errors.is_empty() && v["all_passed"] == true;
    if !errors.is_empty() {
        v["errors"] = Value::Array(errors);
        v["all_passed"] = json!(false);
    }
    std::fs::write(out, serde_json::to_string_pretty(&v)?)?;
    Ok(ok)
}

/// Print JSON, tolerating a closed pipe.
fn emit(v: &Value) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{}", serde_json::to_string_pretty(v)?) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { which } => Ok(verify(which)),
        Command::Decompose {
            group,
            subgroup,
            cocycle,
            check_closure,
        } => decompose_json(&cocycle, group.as_deref(), subgroup.as_deref(), check_closure).and_then(|v| {
            emit(&v)?;
            Ok(v["blocks"].as_array().is_some_and(|b| b.iter().all(|r| r["closed"] != false)))
        }),
        Command::TwistCheck {
            cocycle,
            group,
            subgroup,
        } => twist_check_json(&cocycle, group.as_deref(), subgroup.as_deref()).and_then(|(v, ok)| {
            emit(&v)?;
            Ok(ok)
        }),
        Command::Report { out } => report(&out).inspect(|_| println!("wrote {}", out.display())),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
