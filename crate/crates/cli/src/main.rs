//! `molp`: analyze a planar multiobjective LP instance from the command
//! line. Reports print angles in degrees; `--json` emits the same data with
//! radians for scripting.
//!
//! Exit codes: 0 success, 2 unreadable or unparsable input, 3 geometric
//! refusal (empty/unbounded region, wide cone, ...), 4 verification
//! mismatch.

mod svg;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::Rng;
use serde_json::json;

use molp_core::classify::{classify, enumerate_ns, realize_label, Realization};
use molp_core::cone::{extreme_rays, GradientCone, ObjectiveBundle};
use molp_core::efficient_set::efficient_chain;
use molp_core::oracle::{bruteforce_efficient, face_vertex_ids, is_dominated};
use molp_core::polytope::Polygon;
use molp_core::problem::ProblemFile;
use molp_core::random::{random_bundle, random_polygon, seeded};
use molp_core::sensitivity::{is_equivalent, molp_sensitivity, sample_member};
use molp_core::Vec2;

#[derive(Parser)]
#[command(name = "molp", version, about = "Efficient sets and gradient tolerance for planar multiobjective LPs")]
struct Args {
    /// Absolute geometric tolerance.
    #[arg(long, global = true, default_value_t = molp_core::DEFAULT_EPSILON)]
    epsilon: f64,

    /// Machine-readable JSON output (angles in radians).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the feasible polygon's vertices counterclockwise
    Vertices { file: PathBuf },
    /// Show the gradient cone and its two extreme rays
    Cone { file: PathBuf },
    /// Compute the efficient chain and extreme points
    Efficient {
        file: PathBuf,
        /// Also write an SVG sketch here
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Tolerance interval of the whole bundle
    Sensitivity { file: PathBuf },
    /// Canonical class label of the instance
    Classify { file: PathBuf },
    /// Census of every candidate efficient set of the polygon
    Classes { file: PathBuf },
    /// Emit an equivalent instance with k objectives as a problem file
    Member {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Extra gradient angles in degrees, comma separated (k - 2 of them)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        angles: Vec<f64>,
    },
    /// Test whether two instances share one efficient set
    Equiv { file_a: PathBuf, file_b: PathBuf },
    /// Cross-check the chain against the brute-force oracle
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 500)]
        grid: usize,
        /// Additional random instances to cross-check
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Write an SVG sketch of polygon, cone, and chain
    Plot {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

enum CliError {
    Input(String),
    Geometry(molp_core::Error),
    Mismatch(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Geometry(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Mismatch(m) => f.write_str(m),
            CliError::Geometry(e) => write!(f, "{e}"),
        }
    }
}

impl From<molp_core::Error> for CliError {
    fn from(e: molp_core::Error) -> Self {
        CliError::Geometry(e)
    }
}

fn main() -> ExitCode {
    // Die quietly when the consumer of a long report closes the pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn read_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    ProblemFile::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn deg(rad: f64) -> String {
    format!("{:.3}\u{b0}", rad.to_degrees())
}

fn interval_text(i: &molp_core::angles::AngularInterval) -> String {
    format!("]{}, {}[", deg(i.lo), deg(i.hi))
}

fn json_interval(i: &molp_core::angles::AngularInterval) -> serde_json::Value {
    json!({ "lo": i.lo, "hi": i.hi, "lo_open": i.lo_open, "hi_open": i.hi_open })
}

fn json_vec(v: Vec2) -> serde_json::Value {
    json!([v.x, v.y])
}

fn chain_ids_text(polygon: &Polygon, chain: molp_core::polytope::Chain) -> String {
    polygon
        .chain_vertices(chain)
        .expect("chain from pipeline is valid")
        .iter()
        .map(|j| format!("v{j}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(args: &Args) -> Result<(), CliError> {
    let eps = args.epsilon;
    match &args.command {
        Command::Vertices { file } => {
            let polygon = read_problem(file)?.polygon(eps)?;
            if args.json {
                let vs: Vec<_> = polygon.vertices().iter().map(|&v| json_vec(v)).collect();
                println!("{}", json!({ "vertex_count": polygon.vertex_count(), "vertices": vs }));
            } else {
                println!("polygon with {} vertices, counterclockwise:", polygon.vertex_count());
                for j in 1..=polygon.vertex_count() {
                    println!("  v{j} = {}", polygon.vertex(j));
                }
            }
            Ok(())
        }
        Command::Cone { file } => {
            let bundle = read_problem(file)?.bundle()?;
            let cone = extreme_rays(&bundle)?;
            if args.json {
                println!(
                    "{}",
                    json!({
                        "k1": cone.k1, "k2": cone.k2,
                        "phi1": cone.phi1, "phi2": cone.phi2,
                        "width": cone.spread(),
                    })
                );
            } else {
                println!("gradient cone extreme rays:");
                println!("  k1 = {} at {}", cone.k1, deg(cone.phi1));
                println!("  k2 = {} at {}", cone.k2, deg(cone.phi2));
                println!("  width {}", deg(cone.spread()));
            }
            Ok(())
        }
        Command::Efficient { file, svg: svg_out } => {
            let pf = read_problem(file)?;
            let polygon = pf.polygon(eps)?;
            let bundle = pf.bundle()?;
            let es = efficient_chain(&polygon, &bundle)?;
            if let Some(path) = svg_out {
                let cone = extreme_rays(&bundle)?;
                write_svg(&polygon, &cone, es.chain, path)?;
            }
            if args.json {
                println!(
                    "{}",
                    json!({
                        "chain": { "start": es.chain.start, "count": es.chain.count },
                        "efficient_vertices": es.vs,
                    })
                );
            } else {
                println!(
                    "efficient extreme points: {}",
                    es.vs.iter().map(|j| format!("v{j}")).collect::<Vec<_>>().join(", ")
                );
                println!("chain: start v{}, {} vertices", es.chain.start, es.chain.count);
                let segs = polygon.boundary_curve(es.chain)?;
                if segs.is_empty() {
                    println!("segments: none (singleton v{})", es.chain.start);
                } else {
                    println!("segments:");
                    for s in segs {
                        println!("  v{} -> v{}   {} -> {}", s.from, s.to, s.a, s.b);
                    }
                }
                if let Some(path) = svg_out {
                    println!("sketch written to {}", path.display());
                }
            }
            Ok(())
        }
        Command::Sensitivity { file } => {
            let pf = read_problem(file)?;
            let polygon = pf.polygon(eps)?;
            let bundle = pf.bundle()?;
            let cone = extreme_rays(&bundle)?;
            let class = molp_sensitivity(&polygon, &bundle)?;
            if args.json {
                println!(
                    "{}",
                    json!({
                        "g1": json_vec(class.g1), "g2": json_vec(class.g2),
                        "k1": cone.k1, "k2": cone.k2,
                        "interval": json_interval(&class.tolerance),
                        "chain": { "start": class.chain.start, "count": class.chain.count },
                    })
                );
            } else {
                println!(
                    "generators: g1 = {} (objective {}), g2 = {} (objective {})",
                    class.g1, cone.k1, class.g2, cone.k2
                );
                println!("chain: {}", chain_ids_text(&polygon, class.chain));
                println!("tolerance interval: {}", interval_text(&class.tolerance));
                println!(
                    "equivalent bundles: (g1, g2, {:.3}*(cos w, sin w), ...) for any number of \
                     extra angles w strictly inside the interval",
                    class.g1.norm()
                );
            }
            Ok(())
        }
        Command::Classify { file } => {
            let pf = read_problem(file)?;
            let polygon = pf.polygon(eps)?;
            let bundle = pf.bundle()?;
            let label = classify(&polygon, &bundle)?;
            if args.json {
                println!("{}", json!({ "start": label.start, "count": label.count }));
            } else {
                println!("class label: ({}, {})", label.start, label.count);
                println!("chain: {}", chain_ids_text(&polygon, label.chain()));
            }
            Ok(())
        }
        Command::Classes { file } => {
            let polygon = read_problem(file)?.polygon(eps)?;
            let labels = enumerate_ns(&polygon);
            if args.json {
                let rows: Vec<_> = labels
                    .iter()
                    .map(|&l| match realize_label(&polygon, l) {
                        Realization::Realized(_) => {
                            json!({ "start": l.start, "count": l.count, "realizable": true })
                        }
                        Realization::Unrealizable { required_spread } => json!({
                            "start": l.start, "count": l.count,
                            "realizable": false, "required_spread": required_spread,
                        }),
                    })
                    .collect();
                println!("{}", json!({ "labels": rows }));
            } else {
                println!(
                    "efficient-set census: {} candidate labels on {} vertices",
                    labels.len(),
                    polygon.vertex_count()
                );
                for l in labels {
                    match realize_label(&polygon, l) {
                        Realization::Realized(_) => {
                            println!("  ({}, {})  realizable", l.start, l.count)
                        }
                        Realization::Unrealizable { required_spread } => println!(
                            "  ({}, {})  no pointed cone (needs {})",
                            l.start,
                            l.count,
                            deg(required_spread)
                        ),
                    }
                }
            }
            Ok(())
        }
        Command::Member { file, k, angles } => {
            let pf = read_problem(file)?;
            let polygon = pf.polygon(eps)?;
            let bundle = pf.bundle()?;
            let class = molp_sensitivity(&polygon, &bundle)?;
            let thetas: Vec<f64> = angles.iter().map(|a| a.to_radians()).collect();
            let member = sample_member(&class, *k, &thetas, eps)?;
            let out = pf.with_gradients(member.gradients().to_vec());
            if args.json {
                let gs: Vec<_> = member.gradients().iter().map(|&g| json_vec(g)).collect();
                println!("{}", json!({ "gradients": gs }));
            } else {
                print!("{out}");
            }
            Ok(())
        }
        Command::Equiv { file_a, file_b } => {
            let pa = read_problem(file_a)?;
            let pb = read_problem(file_b)?;
            let polygon = pa.polygon(eps)?;
            let other = pb.polygon(eps)?;
            if polygon.vertex_count() != other.vertex_count()
                || polygon
                    .vertices()
                    .iter()
                    .zip(other.vertices())
                    .any(|(a, b)| a.dist(*b) > eps)
            {
                return Err(CliError::Input(
                    "instances have different feasible regions; equivalence needs a shared polygon"
                        .into(),
                ));
            }
            let equivalent = is_equivalent(&polygon, &pa.bundle()?, &pb.bundle()?)?;
            if args.json {
                println!("{}", json!({ "equivalent": equivalent }));
            } else {
                println!("equivalent: {equivalent}");
            }
            Ok(())
        }
        Command::Verify {
            file,
            grid,
            trials,
            seed,
        } => {
            if *grid < 2 {
                return Err(CliError::Input("grid must be at least 2".into()));
            }
            let pf = read_problem(file)?;
            let polygon = pf.polygon(eps)?;
            let bundle = pf.bundle()?;
            verify_instance(&polygon, &bundle, *grid, "instance", args.json)?;
            let mut rng = seeded(*seed);
            for t in 0..*trials {
                let polygon = random_polygon(&mut rng);
                let k = rng.gen_range(2..=6);
                let width = rng.gen_range(1e-4..170f64.to_radians());
                let bundle = random_bundle(&mut rng, k, width);
                verify_instance(&polygon, &bundle, *grid, &format!("trial {t}"), args.json)?;
            }
            if !args.json {
                println!("verdict: match");
            }
            Ok(())
        }
        Command::Plot { file, out } => {
            let pf = read_problem(file)?;
            let polygon = pf.polygon(eps)?;
            let bundle = pf.bundle()?;
            let cone = extreme_rays(&bundle)?;
            let es = efficient_chain(&polygon, &bundle)?;
            write_svg(&polygon, &cone, es.chain, out)?;
            if args.json {
                println!("{}", json!({ "svg": out.display().to_string() }));
            } else {
                println!("sketch written to {}", out.display());
            }
            Ok(())
        }
    }
}

fn write_svg(
    polygon: &Polygon,
    cone: &GradientCone,
    chain: molp_core::polytope::Chain,
    path: &Path,
) -> Result<(), CliError> {
    let doc = svg::render(polygon, cone, chain);
    std::fs::write(path, doc)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

/// Compare the pipeline chain against the scalarization oracle, plus
/// dominance spot checks on edge midpoints.
fn verify_instance(
    polygon: &Polygon,
    bundle: &ObjectiveBundle,
    grid: usize,
    tag: &str,
    json_mode: bool,
) -> Result<(), CliError> {
    let es = efficient_chain(polygon, bundle)?;
    let chain_ids: std::collections::BTreeSet<usize> = es.vs.iter().copied().collect();
    let oracle_ids = face_vertex_ids(&bruteforce_efficient(polygon, bundle, grid));
    if chain_ids != oracle_ids {
        return Err(CliError::Mismatch(format!(
            "{tag}: chain vertices {chain_ids:?} but oracle found {oracle_ids:?} (grid {grid})"
        )));
    }
    // A generator that is exactly an edge normal makes that whole edge
    // optimal: the closed-cone convention keeps it in the chain even though
    // its interior is only weakly efficient. Skip those tie edges in the
    // dominance check.
    let cone = extreme_rays(bundle)?;
    let tie_edges: Vec<usize> = [cone.k1, cone.k2]
        .iter()
        .filter_map(
            |&k| match molp_core::solver::argmax_face(polygon, bundle.gradient(k)) {
                Ok(molp_core::solver::Face::Edge(a, _)) => Some(a),
                _ => None,
            },
        )
        .collect();
    for w in es.vs.windows(2) {
        if tie_edges.contains(&w[0]) {
            continue;
        }
        let mid = polygon.vertex(w[0]) + polygon.edge_vector(w[0]) * 0.5;
        if is_dominated(polygon, bundle, mid, 32)? {
            return Err(CliError::Mismatch(format!(
                "{tag}: chain edge v{}v{} has a dominated midpoint",
                w[0], w[1]
            )));
        }
    }
    for j in 1..=polygon.vertex_count() {
        if es.vs.windows(2).any(|w| w[0] == j) {
            continue;
        }
        // Skip edges adjacent to the chain endpoints when the bundle sits
        // exactly on an edge normal; dominance there is a boundary case the
        // closed-cone convention keeps weakly efficient.
        let mid = polygon.vertex(j) + polygon.edge_vector(j) * 0.5;
        let next = polygon.wrap(j + 1);
        let touches_chain = es.vs.contains(&j) || es.vs.contains(&next);
        if !touches_chain && !is_dominated(polygon, bundle, mid, 32)? {
            return Err(CliError::Mismatch(format!(
                "{tag}: off-chain edge v{j}v{next} has an undominated midpoint"
            )));
        }
    }
    if json_mode {
        println!(
            "{}",
            json!({
                "check": tag,
                "chain_vertices": chain_ids.iter().copied().collect::<Vec<_>>(),
                "oracle_vertices": oracle_ids.iter().copied().collect::<Vec<_>>(),
                "grid": grid,
                "match": true,
            })
        );
    } else {
        println!(
            "{tag}: chain {{{}}} matches oracle (grid {grid}), dominance spot checks ok",
            chain_ids.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(", ")
        );
    }
    Ok(())
}
