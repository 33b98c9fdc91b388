use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use cohodist::complex::{barycentric_subdivision, product, Cover, SimplicialComplex, SimplicialMap};
use cohodist::distance::{bounds, verify, BoundOptions, DistanceQuery, Strategy};
use cohodist::exactalg::CoeffRing;
use cohodist::fixtures;
use cohodist::homology::Variance;
use cohodist::io;
use cohodist::report::{self, Body, ComplexInfo, QueryEcho, Report};

#[derive(Parser)]
#[command(name = "cohodist", version, about = "Exact simplicial (co)homology and cover certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// f-vector, Euler characteristic and connectivity.
    Info {
        complex: String,
    },
    Homology(GroupArgs),
    Cohomology(GroupArgs),
    /// Cup-length of the cohomology ring.
    Cuplength(GroupArgs),
    /// Zero-divisor cup-length (field coefficients).
    Zdcl(GroupArgs),
    /// Check a cover certificate.
    Verify(QueryArgs),
    /// Lower and upper bounds, with search.
    Bounds(BoundArgs),
    /// Iterated barycentric subdivision.
    Subdivide {
        complex: String,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
        /// Directory for `sd.complex` and `carrier.map`; stdout otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Staircase product of two complexes.
    Product {
        first: String,
        second: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// A complex file or a built-in name (see `info --help`).
    complex: String,
    #[arg(long, default_value = "z")]
    ring: CoeffRing,
}

#[derive(Args)]
struct QueryArgs {
    /// The complex `K` (for `--tc`, the factor of `K × K`).
    complex: String,
    #[arg(long, default_value = "z2")]
    ring: CoeffRing,
    #[arg(long, default_value = "cohomology")]
    variance: Variance,
    /// Compare the identity with a constant map.
    #[arg(long, conflicts_with_all = ["tc", "phi"])]
    scat: bool,
    /// Compare the two projections of `K × K`.
    #[arg(long, conflicts_with = "phi")]
    tc: bool,
    /// Map file for `φ: K -> L`.
    #[arg(long, requires_all = ["psi", "target"])]
    phi: Option<String>,
    /// Map file for `ψ`, or `const` for the constant map at the first vertex.
    #[arg(long)]
    psi: Option<String>,
    /// The target complex `L`.
    #[arg(long)]
    target: Option<String>,
    /// Cover file or built-in cover name.
    #[arg(long)]
    cover: Option<String>,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    query: QueryArgs,
    #[arg(long, default_value = "greedy")]
    strategy: Strategy,
    #[arg(long, default_value_t = 1 << 24)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Rule out covers of this many pieces by exhaustive search (repeatable).
    #[arg(long)]
    exhaustive: Vec<usize>,
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long, default_value_t = 64)]
    restarts: usize,
}

type Fallible<T> = Result<T, Box<dyn std::error::Error>>;

fn load_complex(arg: &str) -> Fallible<Arc<SimplicialComplex>> {
    if Path::new(arg).exists() {
        return Ok(Arc::new(io::read_complex(arg)?));
    }
    fixtures::complex(arg).ok_or_else(|| {
        format!("`{arg}` is neither a file nor a built-in complex ({})", fixtures::COMPLEXES.join(", ")).into()
    })
}

fn load_cover(arg: &str, parent: &Arc<SimplicialComplex>) -> Fallible<Cover> {
    if Path::new(arg).exists() {
        return Ok(io::read_cover(arg, parent)?);
    }
    match fixtures::cover_on(arg, parent) {
        Some(c) => Ok(c?),
        None => Err(format!("`{arg}` is neither a file nor a built-in cover").into()),
    }
}

fn load_query(a: &QueryArgs) -> Fallible<(DistanceQuery, QueryEcho)> {
    let k = load_complex(&a.complex)?;
    let mut echo = QueryEcho {
        complex: a.complex.clone(),
        ring: Some(a.ring),
        variance: Some(a.variance),
        ..QueryEcho::default()
    };
    let query = if a.tc {
        echo.maps = Some("tc".into());
        DistanceQuery::tc(&k, a.ring)
    } else if let Some(phi) = &a.phi {
        let (psi, target) = (a.psi.as_deref().unwrap_or("const"), a.target.as_deref().unwrap_or_default());
        let l = load_complex(target)?;
        let phi_map = io::read_map(phi, &k, &l)?;
        let psi_map = if psi == "const" {
            SimplicialMap::constant_first(k.clone(), l.clone())
        } else {
            io::read_map(psi, &k, &l)?
        };
        echo.maps = Some(format!("{phi} vs {psi} into {target}"));
        DistanceQuery::new(phi_map, psi_map, a.ring, a.variance)?
    } else {
        echo.maps = Some("scat".into());
        DistanceQuery::scat(&k, a.ring)
    };
    Ok((query.with_variance(a.variance), echo))
}

fn write_or_print(out: &Option<PathBuf>, name: &str, text: &str, quiet: bool, files: &mut Vec<String>) -> Fallible<()> {
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(name);
            std::fs::write(&path, text)?;
            files.push(path.display().to_string());
        }
        None if !quiet => print!("{text}"),
        None => {}
    }
    Ok(())
}

fn run(cli: &Cli) -> Fallible<Report> {
    let start = Instant::now();
    let report = match &cli.command {
        Command::Info { complex } => {
            let k = load_complex(complex)?;
            let echo = QueryEcho { complex: complex.clone(), ..QueryEcho::default() };
            Report::new("info", echo, Body::Info(ComplexInfo::of(&k)))
        }
        Command::Homology(g) | Command::Cohomology(g) => {
            let (name, variance) = match cli.command {
                Command::Homology(_) => ("homology", Variance::Homology),
                _ => ("cohomology", Variance::Cohomology),
            };
            let k = load_complex(&g.complex)?;
            let echo = QueryEcho {
                complex: g.complex.clone(),
                ring: Some(g.ring),
                variance: Some(variance),
                ..QueryEcho::default()
            };
            Report::new(name, echo, Body::Groups(report::groups(&k, g.ring, variance)))
        }
        Command::Cuplength(g) => {
            let k = load_complex(&g.complex)?;
            let echo = QueryEcho { complex: g.complex.clone(), ring: Some(g.ring), ..QueryEcho::default() };
            Report::new("cuplength", echo, Body::CupLength(report::cup_length_report(&k, g.ring)?))
        }
        Command::Zdcl(g) => {
            let k = load_complex(&g.complex)?;
            let echo = QueryEcho { complex: g.complex.clone(), ring: Some(g.ring), ..QueryEcho::default() };
            Report::new("zdcl", echo, Body::CupLength(report::zdcl_report(&k, g.ring)?))
        }
        Command::Verify(a) => {
            let (query, mut echo) = load_query(a)?;
            let arg = a.cover.as_deref().ok_or("verify needs --cover")?;
            let cover = load_cover(arg, query.source())?;
            echo.cover = Some(report::describe_cover(arg, &cover));
            Report::new("verify", echo, Body::Certificate(verify(&query, &cover)?))
        }
        Command::Bounds(b) => {
            let (query, mut echo) = load_query(&b.query)?;
            let cover = match &b.query.cover {
                Some(arg) => {
                    let c = load_cover(arg, query.source())?;
                    echo.cover = Some(report::describe_cover(arg, &c));
                    Some(c)
                }
                None => None,
            };
            let opts = BoundOptions {
                cover,
                strategy: b.strategy,
                budget: b.budget,
                seed: b.seed,
                exhaustive: b.exhaustive.clone(),
                max_size: b.max_size,
                restarts: b.restarts,
                warm_start: None,
            };
            Report::new("bounds", echo, Body::Bounds(bounds(&query, &opts)?))
        }
        Command::Subdivide { complex, iterations, out } => {
            let base = load_complex(complex)?;
            let mut k = base.clone();
            let mut carrier = SimplicialMap::identity(base.clone());
            for _ in 0..*iterations {
                let sd = barycentric_subdivision(&k);
                carrier = carrier.compose(sd.carrier())?;
                k = sd.complex().clone();
            }
            let mut files = Vec::new();
            write_or_print(out, "sd.complex", &io::write_complex(&k), cli.json, &mut files)?;
            if out.is_some() {
                write_or_print(out, "carrier.map", &io::write_map(&carrier), cli.json, &mut files)?;
            }
            let echo = QueryEcho { complex: complex.clone(), ..QueryEcho::default() };
            Report::new("subdivide", echo, Body::Written { info: ComplexInfo::of(&k), files })
        }
        Command::Product { first, second, out } => {
            let p = product(&load_complex(first)?, &load_complex(second)?);
            let mut files = Vec::new();
            write_or_print(out, "product.complex", &io::write_complex(&p.complex), cli.json, &mut files)?;
            if out.is_some() {
                write_or_print(out, "proj1.map", &io::write_map(&p.proj1), cli.json, &mut files)?;
                write_or_print(out, "proj2.map", &io::write_map(&p.proj2), cli.json, &mut files)?;
            }
            let echo = QueryEcho { complex: format!("{first} x {second}"), ..QueryEcho::default() };
            Report::new("product", echo, Body::Written { info: ComplexInfo::of(&p.complex), files })
        }
    };
    Ok(report.timed(start.elapsed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else if !matches!(&cli.command, Command::Subdivide { out: None, .. } | Command::Product { out: None, .. })
            {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
