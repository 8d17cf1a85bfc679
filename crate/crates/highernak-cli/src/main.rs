//! Command line surface over the computation engine. All reports are JSON
//! (DOT behind `--dot`); exit code 0 on success, 1 on a computation error,
//! 2 on a usage error.

use clap::{Args, Parser, Subcommand};
use highernak::algebra::{build, BasedAlgebra};
use highernak::exactla::DEFAULT_PRIME;
use highernak::homcalc::{self, DomDim, GlDim, ProjDim, Rep};
use highernak::oset::{KupischKind, KupischSeries, OSeq};
use highernak::{bridge, cycpoly, suite, tilting};
use serde_json::json;

#[derive(Parser)]
#[command(name = "highernak", version, about = "higher Nakayama algebras and cyclic polytope combinatorics")]
struct Cli {
    /// Field characteristic (prime); HIGHERNAK_PRIME overrides the default
    #[arg(long, global = true)]
    prime: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// Kupisch series kind: A or Atilde
    #[arg(long, value_parser = parse_kind)]
    kind: KupischKind,
    /// dimension parameter d >= 1
    #[arg(long)]
    d: usize,
    /// comma separated Kupisch entries, e.g. 1,2,2,3,3,4,3
    #[arg(long, value_parser = parse_u32s)]
    kupisch: std::vec::Vec<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// List the objects of the algebra
    Objects(AlgebraArgs),
    /// Report the algebra: objects, Hom dimension matrix, arrows
    Algebra {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// emit the Gabriel quiver in DOT instead of JSON
        #[arg(long)]
        dot: bool,
    },
    /// Minimal projective resolution of a module
    Resolve {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// module spec: simple:LABEL, projective:LABEL, injective:LABEL or interval:LABEL
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 16)]
        max_deg: usize,
    },
    /// dim Ext^i between two modules
    Ext {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        degree: usize,
    },
    /// Global dimension
    Gldim(AlgebraArgs),
    /// Dominant dimension
    Domdim(AlgebraArgs),
    /// Higher Auslander-Reiten translate of a module
    Tau {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        module: String,
        /// apply tau after (power-1) syzygies; defaults to the algebra's d
        #[arg(long)]
        power: Option<usize>,
    },
    /// Verify the canonical candidate as a d-cluster-tilting collection
    CtVerify(AlgebraArgs),
    /// Ext^d-quiver of the canonical candidate
    ExtQuiver {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        dot: bool,
    },
    /// Enumerate tilting collections inside the canonical candidate
    Tilting {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// report only the count
        #[arg(long)]
        count: bool,
    },
    /// Cyclic polytope combinatorics
    Polytope {
        #[command(subcommand)]
        cmd: PolytopeCmd,
    },
    /// The simplex/label dictionary and its validation
    Bridge {
        #[command(subcommand)]
        cmd: BridgeCmd,
    },
    /// Combinatorial model of the higher cluster category
    ClusterModel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Run the full regression suite; exits 0 iff every criterion passes
    PaperSuite,
}

#[derive(Subcommand)]
enum PolytopeCmd {
    /// Facets of C(p, delta) with lower/upper flags
    Facets {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Non-lower (or internal) d-simplices of C(p, 2d)
    Simplices {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        internal: bool,
    },
    /// All triangulations of C(p, 2d)
    Triangulations {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        count: bool,
        /// emit the flip graph in DOT
        #[arg(long)]
        dot: bool,
    },
    /// Flip one simplex of a triangulation
    Flip {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        d: usize,
        /// semicolon separated simplices, e.g. 0,2;0,3
        #[arg(long)]
        triangulation: String,
        #[arg(long)]
        simplex: String,
    },
}

#[derive(Subcommand)]
enum BridgeCmd {
    /// Ext-compatibility and flip/mutation commutation
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// The simplex-to-label dictionary tables
    Dict {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

fn parse_kind(s: &str) -> Result<KupischKind, String> {
    match s {
        "A" | "a" => Ok(KupischKind::A),
        "Atilde" | "atilde" | "At" | "tilde" => Ok(KupischKind::ATilde),
        _ => Err(format!("unknown kind {s:?}; expected A or Atilde")),
    }
}

fn parse_u32s(s: &str) -> Result<Vec<u32>, String> {
    s.split(',').map(|t| t.trim().parse::<u32>().map_err(|e| e.to_string())).collect()
}

fn parse_i64s(s: &str) -> Result<Vec<i64>, String> {
    s.split(',').map(|t| t.trim().parse::<i64>().map_err(|e| e.to_string())).collect()
}

fn effective_prime(cli: &Cli) -> u32 {
    if let Some(p) = cli.prime {
        return p;
    }
    if let Ok(v) = std::env::var("HIGHERNAK_PRIME") {
        if let Ok(p) = v.parse() {
            return p;
        }
    }
    DEFAULT_PRIME
}

fn build_algebra(args: &AlgebraArgs, prime: u32) -> highernak::Result<BasedAlgebra> {
    let series = KupischSeries::new(args.kind, args.kupisch.clone())?;
    build(args.d, &series, prime)
}

/// Parse `kind:entries`, e.g. `simple:6,6` or `interval:5,2,0`.
fn parse_module(alg: &BasedAlgebra, alg_op: &BasedAlgebra, spec: &str) -> highernak::Result<Rep> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| highernak::Error::Argument(format!("module spec {spec:?} needs kind:entries")))?;
    let entries = parse_i64s(rest).map_err(highernak::Error::Argument)?;
    let label = OSeq(entries);
    match kind {
        "simple" => Ok(homcalc::simple(alg, alg.obj_id(&label)?)),
        "projective" => Ok(homcalc::projective(alg, alg.obj_id(&label)?)),
        "injective" => Ok(homcalc::injective(alg, alg_op, alg.obj_id(&label)?)),
        "interval" => homcalc::interval_module(alg, &label),
        other => Err(highernak::Error::Argument(format!("unknown module kind {other:?}"))),
    }
}

fn report(prime: u32, body: serde_json::Value) -> serde_json::Value {
    json!({
        "engine_version": env!("CARGO_PKG_VERSION"),
        "prime": prime,
        "report": body,
    })
}

fn pd_json(pd: &ProjDim) -> serde_json::Value {
    match pd {
        ProjDim::Finite(k) => json!(k),
        ProjDim::Infinite { preperiod, period } => {
            json!({"infinite": true, "preperiod": preperiod, "period": period})
        }
    }
}

fn run(cli: Cli) -> highernak::Result<i32> {
    let prime = effective_prime(&cli);
    match &cli.command {
        Command::Objects(args) => {
            let alg = build_algebra(args, prime)?;
            let out = report(prime, json!({"count": alg.n_objects(), "objects": alg.objects}));
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Command::Algebra { alg, dot } => {
            let a = build_algebra(alg, prime)?;
            if *dot {
                print!("{}", a.to_dot());
            } else {
                let out = report(prime, a.to_json());
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            }
        }
        Command::Resolve { alg, module, max_deg } => {
            let a = build_algebra(alg, prime)?;
            let op = a.opposite();
            let m = parse_module(&a, &op, module)?;
            let res = homcalc::min_proj_resolution(&a, &m, *max_deg, true)?;
            let terms: Vec<Vec<&OSeq>> = res
                .terms
                .iter()
                .map(|t| t.labels.iter().map(|&x| a.label(x)).collect())
                .collect();
            let projdim = homcalc::dims::projdim_of_resolution(&res).ok().map(|pd| pd_json(&pd));
            let out = report(
                prime,
                json!({
                    "terms": terms,
                    "terminated": res.terminated,
                    "periodic": res.periodic.map(|(a, p)| json!({"preperiod": a, "period": p})),
                    "projdim": projdim,
                }),
            );
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Command::Ext { alg, from, to, degree } => {
            let a = build_algebra(alg, prime)?;
            let op = a.opposite();
            let m = parse_module(&a, &op, from)?;
            let n = parse_module(&a, &op, to)?;
            let dim = homcalc::ext_dim(&a, &m, &n, *degree)?;
            let out = report(prime, json!({"degree": degree, "dim": dim}));
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Command::Gldim(args) => {
            let a = build_algebra(args, prime)?;
            let g = homcalc::gldim(&a)?;
            let body = match g {
                GlDim::Finite(k) => json!({"gldim": k}),
                GlDim::Infinite => json!({"gldim": "infinite"}),
            };
            println!("{}", serde_json::to_string_pretty(&report(prime, body)).unwrap());
        }
        Command::Domdim(args) => {
            let a = build_algebra(args, prime)?;
            let op = a.opposite();
            let dd = homcalc::domdim(&a, &op)?;
            let body = match dd {
                DomDim::Finite(k) => json!({"domdim": k}),
                DomDim::Infinite => json!({"domdim": "infinite"}),
            };
            println!("{}", serde_json::to_string_pretty(&report(prime, body)).unwrap());
        }
        Command::Tau { alg, module, power } => {
            let a = build_algebra(alg, prime)?;
            let op = a.opposite();
            let m = parse_module(&a, &op, module)?;
            let t = homcalc::tau_d(&a, &op, &m, power.unwrap_or(a.d))?;
            let body = json!({
                "vanished": t.vanished,
                "result": homcalc::rep_to_json(&a, &t.rep),
            });
            println!("{}", serde_json::to_string_pretty(&report(prime, body)).unwrap());
        }
        Command::CtVerify(args) => {
            let a = build_algebra(args, prime)?;
            let op = a.opposite();
            let c = tilting::canonical_ct_candidate(&a)?;
            let v = tilting::verify_cluster_tilting(&a, &op, &c, a.d)?;
            let body = json!({
                "members": c.len(),
                "verified": v.verified,
                "witness": v.witness,
            });
            println!("{}", serde_json::to_string_pretty(&report(prime, body)).unwrap());
        }
        Command::ExtQuiver { alg, dot } => {
            let a = build_algebra(alg, prime)?;
            let c = tilting::canonical_ct_candidate(&a)?;
            let q = tilting::ext_d_quiver(&a, &c, a.d)?;
            if *dot {
                print!("{}", q.to_dot());
            } else {
                println!("{}", serde_json::to_string_pretty(&report(prime, q.to_json())).unwrap());
            }
        }
        Command::Tilting { alg, count } => {
            let a = build_algebra(alg, prime)?;
            let c = tilting::canonical_ct_candidate(&a)?;
            let ts = tilting::tilting_enumerate(&a, &c)?;
            let body = if *count {
                json!({"count": ts.len()})
            } else {
                json!({
                    "count": ts.len(),
                    "collections": ts
                        .iter()
                        .map(|t| t.iter().map(|&i| c.labels[i].clone()).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                })
            };
            println!("{}", serde_json::to_string_pretty(&report(prime, body)).unwrap());
        }
        Command::Polytope { cmd } => {
            run_polytope(cmd, prime)?;
        }
        Command::Bridge { cmd } => match cmd {
            BridgeCmd::Check { n, d } => {
                let ext = bridge::ext_compatibility_check(*n, *d, prime)?;
                let fm = bridge::flip_vs_mutation_check(*n, *d, prime)?;
                let body = json!({
                    "pairs_checked": ext.pairs_checked,
                    "ext_mismatches": ext.mismatches.len(),
                    "triangulations": fm.triangulation_count,
                    "tilting_collections": fm.tilting_count,
                    "bijective": fm.bijective,
                    "squares_checked": fm.squares_checked,
                    "squares_commute": fm.squares_commute,
                    "forced_agree": fm.forced_agree,
                });
                println!("{}", serde_json::to_string_pretty(&report(prime, body)).unwrap());
            }
            BridgeCmd::Dict { n, d } => {
                let dict = bridge::dictionary(*n, *d)?;
                println!("{}", serde_json::to_string_pretty(&report(prime, dict.to_json())).unwrap());
            }
        },
        Command::ClusterModel { n, d, dot } => {
            let cm = bridge::cluster_model(*n, *d)?;
            if *dot {
                print!("{}", cycpoly::graph_to_dot(cm.sets.len(), &cm.mutation_edges));
            } else {
                println!("{}", serde_json::to_string_pretty(&report(prime, cm.to_json())).unwrap());
            }
        }
        Command::PaperSuite => {
            let reports = suite::run_all(prime)?;
            let mut all = true;
            for r in &reports {
                println!("{}", r.summary_line());
                for f in r.failures() {
                    println!("    failed: {} ({})", f.label, f.info);
                }
                all = all && r.passed();
            }
            return Ok(if all { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn run_polytope(cmd: &PolytopeCmd, prime: u32) -> highernak::Result<i32> {
    match cmd {
        PolytopeCmd::Facets { p, delta } => {
            let fs = cycpoly::facets(*p, *delta)?;
            let body = json!({
                "count": fs.len(),
                "facets": fs
                    .iter()
                    .map(|(f, lower)| json!({"vertices": f.0.clone(), "lower": lower}))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&report(prime, body)).unwrap());
        }
        PolytopeCmd::Simplices { p, d, internal } => {
            let ss = if *internal {
                cycpoly::internal_simplices(*p, *d)?
            } else {
                cycpoly::nonlower_simplices(*p, *d)?
            };
            let body = json!({
                "count": ss.len(),
                "simplices": ss.iter().map(|s| s.0.clone()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&report(prime, body)).unwrap());
        }
        PolytopeCmd::Triangulations { p, d, count, dot } => {
            if *dot {
                let (ts, edges) = cycpoly::flip_graph(*p, *d)?;
                print!("{}", cycpoly::graph_to_dot(ts.len(), &edges));
                return Ok(0);
            }
            let ts = cycpoly::triangulations(*p, *d)?;
            let body = if *count {
                json!({"count": ts.len()})
            } else {
                json!({
                    "count": ts.len(),
                    "triangulations": ts.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
                })
            };
            println!("{}", serde_json::to_string_pretty(&report(prime, body)).unwrap());
        }
        PolytopeCmd::Flip { p, d, triangulation, simplex } => {
            let simplices = triangulation
                .split(';')
                .map(|s| parse_i64s(s).map_err(highernak::Error::Argument).and_then(cycpoly::Simplex::new))
                .collect::<highernak::Result<Vec<_>>>()?;
            let mut simplices = simplices;
            simplices.sort();
            let t = cycpoly::Triangulation { p: *p, d: *d, simplices };
            t.validate()?;
            let s = cycpoly::Simplex::new(parse_i64s(simplex).map_err(highernak::Error::Argument)?)?;
            let flipped = cycpoly::bistellar_flip(&t, &s)?;
            println!("{}", serde_json::to_string_pretty(&report(prime, flipped.to_json())).unwrap());
        }
    }
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            let msg = json!({"error": e.to_string()});
            eprintln!("{}", serde_json::to_string_pretty(&msg).unwrap());
            std::process::exit(1);
        }
    }
}
