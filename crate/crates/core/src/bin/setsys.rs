use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use setsys::check::{CheckConfig, CheckReport, Suite};
use setsys::lang::{
    canonical_family, closure_bounded, elasticity_chain, half, shuffle_product, validate_chain, ChainBounds,
    ClosureKind, LanguageFragment,
};
use setsys::ops;
use setsys::ramsey::{
    check_image_bound, check_union_bound, check_wqo_intersection_bound, ram_exact, ram_upper, ram_verify,
    RamseyQuery,
};
use setsys::{dim, longest_production_sequence, qo_of, Atom, QuasiOrder, SetSystem, Trace};
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "setsys", version, about = "Order types of set systems and quasi-orders")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Random instances per property.
    #[arg(long, global = true, default_value_t = 500)]
    trials: usize,
    /// Overrides the exhaustive size bound of the check suites.
    #[arg(long, global = true)]
    max_size: Option<usize>,
    /// Reject quasi-order input that is not reflexive and transitive.
    #[arg(long, global = true)]
    strict: bool,
    /// Largest support `dim` accepts.
    #[arg(long, global = true, default_value_t = 16)]
    max_universe: usize,
    /// Include wall time in reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order type of a set system.
    Dim {
        file: PathBuf,
        /// Print a longest production sequence.
        #[arg(long)]
        witness: bool,
    },
    /// Order type of a quasi-order.
    Otp { file: PathBuf },
    /// Upper-closed subsets of a quasi-order.
    Ss { file: PathBuf },
    /// Quasi-order induced by a set system.
    Qo { file: PathBuf },
    /// Set-system constructions.
    Op {
        kind: OpKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    #[command(subcommand)]
    Trace(TraceCmd),
    #[command(subcommand)]
    Ramsey(RamseyCmd),
    Lang(LangArgs),
    /// Search a canonical family for an elasticity chain.
    Chain {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 8)]
        length: usize,
        #[arg(long, default_value_t = 64)]
        element_horizon: usize,
        #[arg(long, default_value_t = 64)]
        family_horizon: usize,
    },
    /// Property suites, or a single bound check on given inputs.
    Check {
        /// A suite name, `all`, or one of `union`, `image`, `wqo`.
        target: String,
        inputs: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Union,
    Intersect,
    Product,
    Disjoint,
    Tagged,
    Bang,
    Perp,
}

#[derive(Subcommand)]
enum TraceCmd {
    /// Apply a trace to a set of target-field atoms.
    Apply { trace: PathBuf, atoms: Vec<String> },
    /// Direct image of a set system.
    Image { trace: PathBuf, system: PathBuf },
    Compose { first: PathBuf, second: PathBuf },
    /// Branching degree, linearity, sequentiality.
    Classify { trace: PathBuf },
}

#[derive(Subcommand)]
enum RamseyCmd {
    /// Upper bound from the recurrence.
    Bound {
        #[arg(required = true)]
        sizes: Vec<u64>,
    },
    /// Tabulated value, if any.
    Exact {
        #[arg(required = true)]
        sizes: Vec<u64>,
    },
    /// Exhaustive search over 2-colorings of K_n.
    Verify { l1: usize, l2: usize, n: usize },
}

#[derive(Args)]
struct LangArgs {
    op: LangOp,
    fragment: PathBuf,
    /// Second operand of `shuffle`; defaults to the first.
    other: Option<PathBuf>,
    #[arg(long)]
    max_len: Option<usize>,
    /// `closure` without the empty word.
    #[arg(long)]
    diamond: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum LangOp {
    Star,
    Plus,
    Shuffle,
    Closure,
    Half,
}

/// Exit 2: the input was rejected.
struct InputError(String);

impl<E: Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Res<T> = Result<T, InputError>;

fn load<T: DeserializeOwned>(path: &Path) -> Res<T> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let at = e.path().to_string();
        InputError(format!("{}: at {at}: {}", path.display(), e.inner()))
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOrder {
    elements: Vec<Atom>,
    le: Vec<(Atom, Atom)>,
}

fn load_order(path: &Path, strict: bool) -> Res<QuasiOrder> {
    let raw: RawOrder = load(path)?;
    let q = if strict {
        QuasiOrder::new_strict(raw.elements, raw.le)
    } else {
        QuasiOrder::new(raw.elements, raw.le)
    };
    q.map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn parse_atom(s: &str) -> Atom {
    serde_json::from_str(s).unwrap_or_else(|_| Atom::leaf(s))
}

struct Out {
    json: bool,
}

impl Out {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string(value).expect("serializable"));
        } else {
            println!("{}", text());
        }
    }
}

fn show_set(atoms: &[Atom]) -> String {
    let parts: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn show_system(s: &SetSystem) -> String {
    s.members().map(|m| show_set(&m)).collect::<Vec<_>>().join("\n")
}

fn run(cli: Cli) -> Res<ExitCode> {
    let out = Out { json: cli.json };
    let cfg = cli_config(&cli);
    match cli.cmd {
        Cmd::Dim { file, witness } => {
            let l: SetSystem = load(&file)?;
            let support = l.support().len();
            if support > cli.max_universe {
                return Err(InputError(format!(
                    "support of size {support} exceeds --max-universe {}",
                    cli.max_universe
                )));
            }
            let d = dim(&l);
            let w = witness.then(|| longest_production_sequence(&l));
            out.emit(&json!({"dim": d, "witness": w}), || match &w {
                None => d.to_string(),
                Some(w) => {
                    let mut s = d.to_string();
                    for step in &w.steps {
                        s += &format!("\n{}  {}", step.example, show_set(&step.hypothesis));
                    }
                    s
                }
            });
        }
        Cmd::Otp { file } => {
            let q = load_order(&file, cli.strict)?;
            let o = q.otp();
            out.emit(&json!({"otp": o}), || o.to_string());
        }
        Cmd::Ss { file } => {
            let s = load_order(&file, cli.strict)?.ss()?;
            out.emit(&s, || show_system(&s));
        }
        Cmd::Qo { file } => {
            let q = qo_of(&load::<SetSystem>(&file)?);
            out.emit(&q, || {
                q.pairs()
                    .iter()
                    .filter(|(a, b)| a != b)
                    .map(|(a, b)| format!("{a} <= {b}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Cmd::Op { kind, files } => {
            let systems = files.iter().map(|f| load::<SetSystem>(f)).collect::<Res<Vec<_>>>()?;
            let refs: Vec<&SetSystem> = systems.iter().collect();
            let binary = || -> Res<(&SetSystem, &SetSystem)> {
                match refs.as_slice() {
                    [l, m] => Ok((l, m)),
                    _ => Err(InputError("this operation takes exactly two systems".into())),
                }
            };
            let unary = || -> Res<&SetSystem> {
                match refs.as_slice() {
                    [l] => Ok(l),
                    _ => Err(InputError("this operation takes exactly one system".into())),
                }
            };
            let s = match kind {
                OpKind::Union => binary().and_then(|(l, m)| Ok(ops::ew_union(l, m)?))?,
                OpKind::Intersect => binary().and_then(|(l, m)| Ok(ops::ew_intersect(l, m)?))?,
                OpKind::Product => binary().and_then(|(l, m)| Ok(ops::ew_product(l, m)?))?,
                OpKind::Disjoint => ops::ew_disjoint(&refs)?,
                OpKind::Tagged => ops::tagged_union(&refs)?,
                OpKind::Bang => ops::bang(unary()?)?,
                OpKind::Perp => ops::perp(unary()?)?,
            };
            out.emit(&s, || show_system(&s));
        }
        Cmd::Trace(t) => match t {
            TraceCmd::Apply { trace, atoms } => {
                let r: Trace = load(&trace)?;
                let g: Vec<Atom> = atoms.iter().map(|a| parse_atom(a)).collect();
                let x = r.apply(&g)?;
                out.emit(&x, || show_set(&x));
            }
            TraceCmd::Image { trace, system } => {
                let r: Trace = load(&trace)?;
                let s = r.direct_image(&load(&system)?)?;
                out.emit(&s, || show_system(&s));
            }
            TraceCmd::Compose { first, second } => {
                let r: Trace = load(&first)?;
                let c = r.compose(&load(&second)?)?;
                out.emit(&c, || {
                    c.pairs()
                        .iter()
                        .map(|(x, v)| format!("{x}  {}", show_set(v)))
                        .collect::<Vec<_>>()
                        .join("\n")
                });
            }
            TraceCmd::Classify { trace } => {
                let r: Trace = load(&trace)?;
                let (n, lin, seq) = (r.branching_degree(), r.is_linear(), r.is_sequential());
                out.emit(&json!({"branching_degree": n, "linear": lin, "sequential": seq}), || {
                    format!("branching degree {n}\nlinear {lin}\nsequential {seq}")
                });
            }
        },
        Cmd::Ramsey(r) => match r {
            RamseyCmd::Bound { sizes } => {
                let b = ram_upper(&RamseyQuery::new(sizes)?)?;
                out.emit(&json!({"bound": b}), || b.to_string());
            }
            RamseyCmd::Exact { sizes } => {
                let e = ram_exact(&RamseyQuery::new(sizes)?);
                out.emit(&e, || match &e {
                    Some(e) => format!("{} ({:?})", e.value, e.provenance).to_lowercase(),
                    None => "unknown".into(),
                });
            }
            RamseyCmd::Verify { l1, l2, n } => {
                let v = ram_verify(l1, l2, n)?;
                out.emit(&v, || match &v.witness {
                    None => "holds".into(),
                    Some(w) => {
                        let edges: Vec<String> = w.edges.iter().map(|(i, j, c)| format!("{i}-{j}:{c}")).collect();
                        format!("fails\n{}", edges.join(" "))
                    }
                });
            }
        },
        Cmd::Lang(a) => {
            let l: LanguageFragment = load(&a.fragment)?;
            let bound = a.max_len.unwrap_or(l.max_len());
            let result = match a.op {
                LangOp::Star => closure_bounded(&l, ClosureKind::Star, bound),
                LangOp::Plus => closure_bounded(&l, ClosureKind::Plus, bound),
                LangOp::Closure if a.diamond => closure_bounded(&l, ClosureKind::ShuffleDiamond, bound),
                LangOp::Closure => closure_bounded(&l, ClosureKind::ShuffleClosure, bound),
                LangOp::Shuffle => {
                    let m: LanguageFragment = match &a.other {
                        Some(p) => load(p)?,
                        None => l.clone(),
                    };
                    shuffle_product(&l, &m)?
                }
                LangOp::Half => half(&l),
            };
            out.emit(&result, || {
                let words: Vec<String> = result.words().iter().map(|w| w.to_string()).collect();
                let tag = if result.exact_up_to() { "exact" } else { "partial" };
                format!("{}\n({} words, length <= {}, {tag})", words.join(" "), words.len(), result.max_len())
            });
        }
        Cmd::Chain {
            family,
            length,
            element_horizon,
            family_horizon,
        } => {
            let f = canonical_family(&family)?;
            let bounds = ChainBounds {
                element_horizon,
                family_horizon,
            };
            let c = elasticity_chain(&f, length, bounds)?;
            if let Some(c) = &c {
                assert!(validate_chain(&f, c));
            }
            out.emit(&c, || match &c {
                None => "no chain within the horizons".into(),
                Some(c) => format!("elements {:?}\nfamilies {:?}", c.elements, c.families),
            });
        }
        Cmd::Check { target, inputs } => return check(&cfg, &out, cli.timing, cli.strict, &target, &inputs),
    }
    Ok(ExitCode::SUCCESS)
}

fn cli_config(cli: &Cli) -> CheckConfig {
    CheckConfig {
        seed: cli.seed,
        trials: cli.trials,
        max_size: cli.max_size,
    }
}

fn check(cfg: &CheckConfig, out: &Out, timing: bool, strict: bool, target: &str, inputs: &[PathBuf]) -> Res<ExitCode> {
    let verdict = |ok: bool| if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
    let single = |report: Value, holds: bool| {
        out.emit(&report, || {
            let s = serde_json::to_string_pretty(&report).expect("serializable");
            format!("{}\n{s}", if holds { "holds" } else { "VIOLATED" })
        });
        verdict(holds)
    };
    match target {
        "union" => {
            let systems = inputs.iter().map(|f| load::<SetSystem>(f)).collect::<Res<Vec<_>>>()?;
            let rep = check_union_bound(&systems.iter().collect::<Vec<_>>())?;
            return Ok(single(serde_json::to_value(&rep)?, rep.holds));
        }
        "image" => {
            let [t, m] = inputs else {
                return Err(InputError("check image takes a trace and a set system".into()));
            };
            let rep = check_image_bound(&load(t)?, &load(m)?, None)?;
            return Ok(single(serde_json::to_value(&rep)?, rep.holds));
        }
        "wqo" => {
            let [x, y] = inputs else {
                return Err(InputError("check wqo takes two quasi-orders".into()));
            };
            let rep = check_wqo_intersection_bound(&load_order(x, strict)?, &load_order(y, strict)?)?;
            return Ok(single(serde_json::to_value(&rep)?, rep.holds));
        }
        _ => {}
    }
    let suites: Vec<Suite> = if target == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![target.parse().map_err(InputError)?]
    };
    let mut reports: Vec<CheckReport> = Vec::new();
    for s in suites {
        let start = Instant::now();
        let mut r = s.run(cfg)?;
        r.ms = timing.then(|| start.elapsed().as_millis() as u64);
        reports.push(r);
    }
    let ok = reports.iter().all(CheckReport::passed);
    if out.json {
        if let [r] = reports.as_slice() {
            out.emit(r, String::new);
        } else {
            out.emit(&reports, String::new);
        }
    } else {
        for r in &reports {
            print!("{r}");
        }
    }
    Ok(verdict(ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
