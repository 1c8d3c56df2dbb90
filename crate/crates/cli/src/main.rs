//! Command-line front end: group analysis, module checks, catalog emission
//! and the batch verification suite.
//!
//! Exit codes: 0 success or open, 1 counterexample or internal inconsistency,
//! 2 input error, 3 resource cap exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use quadcheck::conjecture::{
    batch_suite, check_oliver, check_quadratic, commutator_quotient_suite, quadratic_pair_suite,
    replacement_suite, structure_suites, ModuleContext, NamedVerdict, ProfileJson, SuiteConfig,
    Verdict,
};
use quadcheck::error::Error;
use quadcheck::maxclass::{catalog, profile, Family};
use quadcheck::modrep::{is_faithful, Representation};
use quadcheck::offender::enumerate_ea;
use quadcheck::pcgroup::{central_series, Caps, PcGroup};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "quadcheck", version, about = "Exact p-group, module and offender analytics")]
struct Cli {
    /// Cap on cached element sets.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_elements: u64,
    /// Cap on elementary abelian rank enumeration.
    #[arg(long, global = true, default_value_t = 8)]
    max_rank: u32,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a .pcp file and print its structural profile.
    Analyze {
        group: PathBuf,
    },
    /// Run a named check of a module given by a .mat file over a .pcp group.
    Module {
        group: PathBuf,
        module: PathBuf,
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 48)]
        samples: u32,
    },
    /// Emit a catalog presentation (and its natural module, when defined).
    Catalog {
        #[arg(long)]
        family: String,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run the batch verification suite over the catalog plus included files.
    Suite {
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 48)]
        samples: u32,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Additional .pcp files to ingest.
        #[arg(long)]
        include: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Check {
    Faithful,
    Fmodule,
    Offenders,
    Quadratic,
    Oliver,
    Lemmas,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps { max_elements: cli.max_elements, max_rank: cli.max_rank };
    match run(&cli, &caps) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::InternalInconsistency(_) => 1,
        _ => 2,
    }
}

fn read_group(path: &Path) -> Result<PcGroup, Error> {
    let text = std::fs::read_to_string(path)?;
    Ok(PcGroup::parse_validate(&text)?.0)
}

fn run(cli: &Cli, caps: &Caps) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Analyze { group } => cmd_analyze(group, cli.format, caps),
        Command::Module { group, module, check, seed, samples } => {
            cmd_module(group, module, *check, *seed, *samples, cli.format, caps)
        }
        Command::Catalog { family, p, n, out } => cmd_catalog(family, *p, *n, out, caps),
        Command::Suite { p, max_n, seed, samples, out, include } => {
            cmd_suite(*p, *max_n, *seed, *samples, out.as_deref(), include, cli.format, caps)
        }
    }
}

fn cmd_analyze(path: &Path, format: Format, caps: &Caps) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(path)?;
    let (g, validation) = PcGroup::parse_validate(&text)?;
    // the maximal-class profile needs order at least p^3
    let prof = if g.n() >= 3 { Some(profile(&g, caps)?) } else { None };
    let series = match &prof {
        Some(p) => p.series.clone(),
        None => central_series(&g, caps)?,
    };
    match format {
        Format::Json => {
            let mut value = match &prof {
                Some(prof) => serde_json::to_value(ProfileJson::from_profile(&g, prof))
                    .expect("profile serializes"),
                None => serde_json::json!({
                    "order_log": g.n(),
                    "class": series.class,
                    "is_maximal_class": false,
                    "lower_orders": series.lower.iter().map(|h| h.order()).collect::<Vec<_>>(),
                    "upper_orders": series.upper.iter().map(|h| h.order()).collect::<Vec<_>>(),
                }),
            };
            value["order"] = serde_json::json!(g.order_u64());
            value["p"] = serde_json::json!(g.p());
            value["derived_orders"] =
                serde_json::json!(series.derived.iter().map(|h| h.order()).collect::<Vec<_>>());
            value["weights"] = serde_json::json!(validation.weights);
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        Format::Text => {
            println!("order: {}^{} = {}", g.p(), g.n(), g.order_u64());
            println!("class: {}", series.class);
            println!(
                "lower central orders: {:?}",
                series.lower.iter().map(|h| h.order()).collect::<Vec<_>>()
            );
            println!(
                "upper central orders: {:?}",
                series.upper.iter().map(|h| h.order()).collect::<Vec<_>>()
            );
            println!(
                "derived series orders: {:?}",
                series.derived.iter().map(|h| h.order()).collect::<Vec<_>>()
            );
            match &prof {
                None => println!("maximal class: not defined below order p^3"),
                Some(prof) => {
                    println!("maximal class: {}", prof.is_maximal_class);
                    println!(
                        "G1 = C_G(G2/G4): order {}^{}, abelian: {}",
                        g.p(),
                        prof.g1_centralizer.order_exponent(g.p()),
                        prof.g1_abelian
                    );
                    println!("exceptional: {}", prof.exceptional);
                    match prof.degree_of_commutativity {
                        Some(l) => println!("degree of commutativity: {l}"),
                        None => {
                            println!("degree of commutativity: undefined (not maximal class)")
                        }
                    }
                    println!(
                        "Omega_1(G1): order {}^{}",
                        g.p(),
                        prof.omega1_g1.order_exponent(g.p())
                    );
                    println!(
                        "proved scope: {} ({})",
                        prof.coverage.covered, prof.coverage.reason
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_module(
    group_path: &Path,
    module_path: &Path,
    check: Check,
    seed: u64,
    samples: u32,
    format: Format,
    caps: &Caps,
) -> Result<ExitCode, Error> {
    let g = read_group(group_path)?;
    let mat_text = std::fs::read_to_string(module_path)?;
    let rho = Representation::from_mat_text(&g, &mat_text, "file")?;
    let group_name = group_path.file_stem().and_then(|s| s.to_str()).unwrap_or("group");

    if check == Check::Faithful {
        let faithful = is_faithful(&g, &rho, caps)?;
        match format {
            Format::Json => println!("{}", serde_json::json!({ "faithful": faithful })),
            Format::Text => println!("faithful: {faithful}"),
        }
        return Ok(ExitCode::SUCCESS);
    }

    let series = central_series(&g, caps)?;
    let poset = enumerate_ea(&g, caps)?;
    let ctx = ModuleContext::analyze(&g, &rho, &poset, &series, group_name, "file", caps)?;

    let mut checks: Vec<NamedVerdict> = Vec::new();
    match check {
        Check::Faithful => unreachable!(),
        Check::Fmodule => {
            let verdict = match (ctx.faithful, ctx.fmodule()) {
                (false, _) => {
                    Verdict::NotApplicable { reason: "module is not faithful".into() }
                }
                (true, true) => Verdict::Witness {
                    witness: Vec::new(),
                    detail: format!("F-module with j0 exponent {}", ctx.j0().unwrap()),
                },
                (true, false) => Verdict::Witness {
                    witness: Vec::new(),
                    detail: "faithful but not an F-module".into(),
                },
            };
            checks.push(NamedVerdict { name: "fmodule".into(), verdict });
        }
        Check::Offenders => {
            checks.push(NamedVerdict {
                name: "replacement".into(),
                verdict: replacement_suite(&ctx, caps),
            });
        }
        Check::Quadratic => {
            checks.push(NamedVerdict { name: "quadratic".into(), verdict: check_quadratic(&ctx) });
        }
        Check::Oliver => {
            checks.push(NamedVerdict { name: "oliver".into(), verdict: check_oliver(&ctx) });
        }
        Check::Lemmas => {
            checks.push(NamedVerdict {
                name: "quadratic-pairs".into(),
                verdict: quadratic_pair_suite(&ctx, samples, seed),
            });
            checks.extend(structure_suites(&ctx, caps));
            checks.push(NamedVerdict {
                name: "commutator-quotient".into(),
                verdict: commutator_quotient_suite(&g, caps)?,
            });
        }
    }

    let offenders: Vec<serde_json::Value> = ctx
        .offenders
        .as_ref()
        .map(|r| {
            r.offenders
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "rank": e.rank,
                        "gens": poset.members[e.member].gens().iter().map(|x| x.0.clone()).collect::<Vec<_>>(),
                        "j_exponent": e.j.exponent,
                        "fixed_dim": e.j.fixed_dim,
                        "best": e.best,
                        "quadratic": e.quadratic,
                        "weakly_closed": e.weakly_closed,
                    })
                })
                .collect()
        })
        .unwrap_or_default();

    let failed = checks.iter().any(|c| c.verdict.is_failure());
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "group": group_name,
                "dimension": rho.dim(),
                "faithful": ctx.faithful,
                "fmodule": ctx.fmodule(),
                "j0_exponent": ctx.j0(),
                "offenders": offenders,
                "checks": checks,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        }
        Format::Text => {
            println!("dimension: {}", rho.dim());
            println!("faithful: {}", ctx.faithful);
            println!("fmodule: {}", ctx.fmodule());
            if let Some(j0) = ctx.j0() {
                println!("j0 exponent: {j0}");
            }
            if !offenders.is_empty() {
                println!("offenders: {}", offenders.len());
            }
            for c in &checks {
                println!("{}: {}", c.name, verdict_line(&c.verdict));
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::NotApplicable { reason } => format!("not applicable ({reason})"),
        Verdict::Witness { witness, detail } => {
            if witness.is_empty() {
                format!("pass ({detail})")
            } else {
                format!("witness {:?} ({detail})", witness[0])
            }
        }
        Verdict::Vacuous { detail } => format!("vacuous ({detail})"),
        Verdict::Counterexample { detail, .. } => format!("COUNTEREXAMPLE ({detail})"),
        Verdict::InternalInconsistency { detail } => format!("INTERNAL INCONSISTENCY ({detail})"),
    }
}

fn cmd_catalog(family: &str, p: u32, n: u32, out: &Path, caps: &Caps) -> Result<ExitCode, Error> {
    let family = Family::from_name(family)
        .ok_or_else(|| Error::Unsupported(format!("unknown family '{family}'")))?;
    let cg = catalog(family, p, n, caps)?;
    std::fs::create_dir_all(out)?;
    let base = format!("{}_{}_{}", family.name(), p, n);
    let pcp_path = out.join(format!("{base}.pcp"));
    std::fs::write(&pcp_path, cg.group.presentation().to_pcp_string())?;
    println!("{}", pcp_path.display());
    let natural = match family {
        Family::Heisenberg => Some(Representation::natural_unitriangular(&cg)?),
        Family::Wreath => Some(Representation::natural_affine(&cg)?),
        Family::Padic if n <= p => Some(Representation::natural_affine(&cg)?),
        Family::Padic => None,
    };
    if let Some(rho) = natural {
        let mat_path = out.join(format!("{base}_natural.mat"));
        std::fs::write(&mat_path, rho.to_mat_string())?;
        println!("{}", mat_path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_suite(
    p: u32,
    max_n: u32,
    seed: u64,
    samples: u32,
    out: Option<&Path>,
    include: &[PathBuf],
    format: Format,
    caps: &Caps,
) -> Result<ExitCode, Error> {
    let mut config = SuiteConfig::default_suite(p, max_n, seed);
    config.samples = samples;
    config.max_elements = caps.max_elements;
    config.max_rank = caps.max_rank;
    for path in include {
        let name = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("included")
            .to_string();
        config.include.push(name.clone());
        config.include_texts.push((name, std::fs::read_to_string(path)?));
    }
    let report = batch_suite(&config)?;
    let json = report.to_json_string();
    match out {
        Some(path) => std::fs::write(path, &json)?,
        None => {
            if format == Format::Json {
                print!("{json}");
            }
        }
    }
    if format == Format::Text {
        println!(
            "instances: {}  witnesses: {}  vacuous: {}  open: {}  failures: {}",
            report.instances.len(),
            report.summary.witnesses,
            report.summary.vacuous,
            report.summary.open,
            report.summary.failures
        );
        for inst in &report.instances {
            let module = inst.module.as_deref().unwrap_or("-");
            let status = inst.conjecture_status.as_deref().unwrap_or("-");
            println!("{:<14} {:<10} {}", inst.group, module, status);
        }
    }
    Ok(if report.has_failures() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
