//! Command-line front end: parses degree expressions, dispatches to the
//! computation modules, and prints text or JSON.

use clap::{Args, Parser, Subcommand};
use eqcoh::decomp::{self, CoeffMode, QueryAnswer};
use eqcoh::ringstr::{self, RelationKind, Ring};
use eqcoh::slice::{self, Family};
use eqcoh::{cohops, coeff, degree, Error};

#[derive(Parser)]
#[command(name = "eqcoh", about = "Exact RO(C_n)-graded cohomology calculator", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integral coefficient group in a twisted degree over C_n.
    Coeff(CoeffArgs),
    /// Mod-p Mackey functor of the coefficient spectrum over C_p.
    Mackey(MackeyArgs),
    /// Wedge decomposition of a projective-space family, with optional
    /// cohomology query.
    Decompose(DecomposeArgs),
    /// Slice certificate for a suspended projective summand.
    Slice(SliceArgs),
    /// Symbolic ring computations over C_{p^m}.
    Ring(RingArgs),
    /// Lift obstructions for mod-p cohomology operations.
    Ops(OpsArgs),
}

#[derive(Args)]
struct CoeffArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    degree: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MackeyArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    degree: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Family: cp (multiplicity list over C_p), regular, quat, conj.
    #[arg(long)]
    family: String,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// Comma-separated multiplicities of λ⁰, λ¹, … (family cp).
    #[arg(long)]
    mults: Option<String>,
    /// Number of cells (families regular, quat, conj).
    #[arg(long)]
    count: Option<u32>,
    /// Optional degree to query against the decomposition.
    #[arg(long)]
    query: Option<String>,
    /// Coefficients for the query: z or modp.
    #[arg(long, default_value = "z")]
    mode: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SliceArgs {
    /// Family: complex or quat.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RingArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    m: u32,
    /// Coefficients: z or modp.
    #[arg(long, default_value = "modp")]
    mode: String,
    /// Verify a relation family: rho, mu, lewis, lemma.
    #[arg(long)]
    verify: Option<String>,
    /// Relation level for --verify rho/mu.
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Restriction image of the degree-φ_d generator by both methods.
    #[arg(long)]
    q0: Option<u32>,
    /// Series data and factorization check at the given level.
    #[arg(long)]
    series: Option<u32>,
    /// Injectivity matrix summary at the given probe level.
    #[arg(long)]
    injectivity: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OpsArgs {
    #[arg(long)]
    p: u32,
    /// Even operation degree.
    #[arg(long)]
    r: i64,
    #[arg(long)]
    json: bool,
}

fn parse_mode(mode: &str) -> Result<bool, Error> {
    match mode {
        "z" => Ok(false),
        "modp" => Ok(true),
        other => Err(Error::Domain(format!("unknown mode {other:?} (use z or modp)"))),
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Coeff(args) => {
            let alpha = degree::parse(&args.degree, args.n)?;
            let group = coeff::pi_star_e(&alpha)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&group).unwrap());
            } else {
                println!("{group}");
            }
        }
        Command::Mackey(args) => {
            let alpha = degree::parse(&args.degree, args.p)?;
            let name = coeff::mackey_modp_table(args.p, &alpha)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&name).unwrap());
            } else {
                println!("{name}");
            }
        }
        Command::Decompose(args) => {
            let wedge = match args.family.as_str() {
                "cp" => {
                    let p = args.p.ok_or_else(|| Error::Domain("family cp needs --p".into()))?;
                    let mults_text = args
                        .mults
                        .ok_or_else(|| Error::Domain("family cp needs --mults".into()))?;
                    let mults: Vec<i64> = mults_text
                        .split(',')
                        .map(|t| t.trim().parse::<i64>())
                        .collect::<Result<_, _>>()
                        .map_err(|e| Error::Domain(format!("bad multiplicity list: {e}")))?;
                    let dec = decomp::decompose_cp(p, &mults)?;
                    if args.json && args.query.is_none() {
                        println!("{}", serde_json::to_string_pretty(&dec).unwrap());
                        return Ok(());
                    }
                    if args.query.is_none() {
                        println!("twist: {}", dec.twist);
                        for s in &dec.wedge.summands {
                            println!("{s}");
                        }
                        return Ok(());
                    }
                    dec.wedge
                }
                "regular" => {
                    let n = args.n.ok_or_else(|| Error::Domain("family regular needs --n".into()))?;
                    let count =
                        args.count.ok_or_else(|| Error::Domain("family regular needs --count".into()))?;
                    decomp::decompose_regular(n, count)
                }
                "quat" => {
                    let n = args.n.ok_or_else(|| Error::Domain("family quat needs --n".into()))?;
                    let count =
                        args.count.ok_or_else(|| Error::Domain("family quat needs --count".into()))?;
                    decomp::decompose_quat(n, count)
                }
                "conj" => {
                    let count =
                        args.count.ok_or_else(|| Error::Domain("family conj needs --count".into()))?;
                    decomp::decompose_conj(count)
                }
                other => {
                    return Err(Error::Domain(format!(
                        "unknown family {other:?} (use cp, regular, quat, conj)"
                    )))
                }
            };
            match args.query {
                None => {
                    if args.json {
                        println!("{}", serde_json::to_string_pretty(&wedge).unwrap());
                    } else {
                        for s in &wedge.summands {
                            println!("{s}");
                        }
                    }
                }
                Some(q) => {
                    let alpha = degree::parse(&q, wedge.n)?;
                    let mode = if parse_mode(&args.mode)? {
                        CoeffMode::ModP
                    } else {
                        CoeffMode::Integral
                    };
                    let answer = decomp::cohomology_query(&wedge, &alpha, mode)?;
                    if args.json {
                        println!("{}", serde_json::to_string_pretty(&answer).unwrap());
                    } else {
                        match answer {
                            QueryAnswer::Integral(parts) => {
                                if parts.is_empty() {
                                    println!("0");
                                }
                                for (i, g) in parts {
                                    println!("summand {i}: {g}");
                                }
                            }
                            QueryAnswer::ModP(parts) => {
                                if parts.is_empty() {
                                    println!("0");
                                }
                                for (name, count) in parts {
                                    println!("{name} x{count}");
                                }
                            }
                        }
                    }
                }
            }
        }
        Command::Slice(args) => {
            let family = match args.family.as_str() {
                "complex" => Family::Complex,
                "quat" => Family::Quaternionic,
                other => {
                    return Err(Error::Domain(format!(
                        "unknown family {other:?} (use complex or quat)"
                    )))
                }
            };
            let cert = slice::certify_slice(family, args.n, args.ell)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&cert).unwrap());
            } else {
                println!(
                    "summand {} is a {}-slice: {}",
                    cert.summand,
                    cert.slice_level,
                    if cert.valid { "certified" } else { "NOT certified" }
                );
            }
        }
        Command::Ring(args) => {
            let modp = parse_mode(&args.mode)?;
            if let Some(kind) = args.verify {
                let kind = match kind.as_str() {
                    "rho" => RelationKind::Rho,
                    "mu" => RelationKind::Mu,
                    "lewis" => RelationKind::Lewis,
                    "lemma" => RelationKind::Lemma,
                    other => {
                        return Err(Error::Domain(format!(
                            "unknown relation {other:?} (use rho, mu, lewis, lemma)"
                        )))
                    }
                };
                let check = ringstr::verify_relation(kind, args.p, args.m, args.r)?;
                if args.json {
                    println!("{}", serde_json::to_string_pretty(&check).unwrap());
                } else if check.ok {
                    println!("OK (residual 0)");
                } else {
                    println!("FAIL (residual {})", check.residual);
                }
            } else if let Some(d) = args.q0 {
                let ring = Ring::new(args.p, args.m, modp)?;
                let closed = ring.q0_closed(d)?;
                let tau = ring.q0_via_tau(d)?;
                if args.json {
                    let out = serde_json::json!({
                        "closed": ring.display(&closed),
                        "via_tau": ring.display(&tau),
                        "agree": closed == tau,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                } else {
                    println!("closed:  {}", ring.display(&closed));
                    println!("via tau: {}", ring.display(&tau));
                    println!("agree: {}", closed == tau);
                }
            } else if let Some(r) = args.series {
                let ring = Ring::new(args.p, args.m, true)?;
                let s = ringstr::series_terms(&ring, r)?;
                if args.json {
                    let out = serde_json::json!({
                        "b": ring.display(&s.b),
                        "images": s.ia.iter().map(|f| ring.display(f)).collect::<Vec<_>>(),
                        "factorization": true,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                } else {
                    println!("b = {}", ring.display(&s.b));
                    for (i, f) in s.ia.iter().enumerate() {
                        println!("image {i}: {}", ring.display(f));
                    }
                    println!("factorization holds");
                }
            } else if let Some(j) = args.injectivity {
                let prof = ringstr::injectivity_profile(args.p, args.m, j)?;
                if args.json {
                    println!("{}", serde_json::to_string_pretty(&prof).unwrap());
                } else {
                    println!(
                        "source: Z + (Z/{}^{})^{}",
                        prof.p, prof.source_torsion, prof.source_copies
                    );
                    println!("target exponents: {:?}", prof.target_exponents);
                    println!("diagonal exponents: {:?}", prof.diagonal_exponents);
                    println!("injective: {}", prof.injective);
                }
            } else {
                return Err(Error::Domain(
                    "choose one of --verify, --q0, --series, --injectivity".into(),
                ));
            }
        }
        Command::Ops(args) => {
            let report = if args.p == 2 {
                cohops::obstruction_check_c2(args.r)?
            } else {
                cohops::obstruction_check(args.p, args.r)?
            };
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                let fmt = |census: &[(coeff::MackeyName, usize)]| {
                    if census.is_empty() {
                        "0".to_string()
                    } else {
                        census
                            .iter()
                            .map(|(n, c)| format!("{n} x{c}"))
                            .collect::<Vec<_>>()
                            .join(" + ")
                    }
                };
                println!("source: {}", fmt(&report.source));
                println!("target: {}", fmt(&report.target));
                println!("verdict: {:?}", report.verdict);
            }
        }
    }
    Ok(())
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::ExitCode::from(e.exit_code() as u8)
        }
    }
}
