//! Command-line front end: validates instance files, prints cohomology and
//! total-complex layouts, runs the page engine, and renders reports.

use clap::{Parser, Subcommand};
use specseq::error::Error;
use specseq::filtration::{apply_filtration, canonical_filtrations, IndexSubsetFiltration};
use specseq::instance::{parse_instance, Instance, InstanceContent};
use specseq::render::{render_dim_table, render_report, PageReport, RenderFormat};
use specseq::spectral::{check_convergence, edge_morphisms, SpectralSequence};
use specseq::{generate, FieldSpec, FilteredComplex, Polycomplex};
use std::collections::BTreeSet;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "specseq", version, about = "Exact spectral sequences of filtered complexes and polycomplexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Field for generated instances: gf2, gf5, prime:<p>, rational
    #[arg(long, global = true, default_value = "gf2")]
    field: String,
    /// Generate a random instance from this seed instead of reading a file
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Grading directions for generated instances
    #[arg(long, global = true, default_value_t = 2)]
    k: usize,
    /// Output format for page lattices: table, csv or tikz
    #[arg(long, global = true, default_value = "table")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check the differential axioms of an instance file
    Validate { file: Option<PathBuf> },
    /// Cohomology of the total complex, as a degree-indexed dimension table
    Cohomology {
        file: Option<PathBuf>,
        /// Also print representative cocycles per degree
        #[arg(long)]
        reps: bool,
    },
    /// Summand layout of the total complex
    Total {
        file: Option<PathBuf>,
        /// Also print the assembled differential matrices
        #[arg(long)]
        show_matrices: bool,
    },
    /// Pages of the spectral sequence of a chosen filtration
    Pages {
        file: Option<PathBuf>,
        /// Comma-separated index subset, e.g. 1 or 1,2
        #[arg(long)]
        indices: Option<String>,
        /// Truncate the printed page list at this index
        #[arg(long)]
        max_page: Option<usize>,
    },
    /// Compare the stable page against the graded cohomology of the total complex
    Converge {
        file: Option<PathBuf>,
        #[arg(long)]
        indices: Option<String>,
    },
    /// Edge morphism matrices of a canonically bounded filtration
    Edge {
        file: Option<PathBuf>,
        #[arg(long)]
        indices: Option<String>,
    },
    /// Morphism of spectral sequences between nested index subsets
    Morphism {
        file: Option<PathBuf>,
        /// Source index subset, e.g. 1
        #[arg(long)]
        from: String,
        /// Target index subset, e.g. 1,2
        #[arg(long)]
        to: String,
        /// Print only this page's cell ranks
        #[arg(long)]
        page: Option<usize>,
    },
    /// Six-term kernel/cokernel extraction from a snake diagram
    Snake { file: Option<PathBuf> },
    /// List the canonical index-subset filtrations of an instance
    ListFiltrations { file: Option<PathBuf> },
}

fn parse_field_flag(text: &str) -> Result<FieldSpec, Error> {
    match text {
        "gf2" => Ok(FieldSpec::prime(2).expect("2 is prime")),
        "gf5" => Ok(FieldSpec::prime(5).expect("5 is prime")),
        "rational" | "q" => Ok(FieldSpec::rationals()),
        other => match other.strip_prefix("prime:") {
            Some(p) => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("cannot parse characteristic in {other:?}")))?;
                Ok(FieldSpec::prime(p)?)
            }
            None => Err(Error::Parse(format!(
                "unknown field {other:?}; expected gf2, gf5, prime:<p> or rational"
            ))),
        },
    }
}

fn parse_indices(k: usize, text: &str) -> Result<IndexSubsetFiltration, Error> {
    let mut indices = BTreeSet::new();
    for part in text.split(',') {
        let i: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("cannot parse index {part:?}")))?;
        indices.insert(i);
    }
    Ok(IndexSubsetFiltration::new(k, indices)?)
}

fn load_instance(cli: &Cli, file: &Option<PathBuf>, snake: bool) -> Result<Instance, Error> {
    match (file, cli.seed) {
        (Some(path), _) => parse_instance(path),
        (None, Some(seed)) => {
            let field = parse_field_flag(&cli.field)?;
            let mut rng = generate::seeded(seed);
            let content = if snake {
                InstanceContent::Snake(generate::random_snake_diagram(&mut rng, field, 4))
            } else {
                InstanceContent::Poly(generate::random_polycomplex(&mut rng, field, cli.k, 2, 2))
            };
            Ok(Instance {
                field,
                content,
                filtration_override: None,
            })
        }
        (None, None) => Err(Error::Parse(
            "provide an instance file or --seed for a generated one".into(),
        )),
    }
}

/// Picks the filtration: an explicit index subset beats the file's custom
/// filtration section.
fn pick_filtration(
    instance: &Instance,
    v: &Polycomplex,
    indices: &Option<String>,
) -> Result<FilteredComplex, Error> {
    let t = v.totalize();
    if let Some(text) = indices {
        let a = parse_indices(v.k(), text)?;
        return Ok(apply_filtration(&t, &a)?);
    }
    if let Some(fc) = instance.custom_filtration(&t)? {
        return Ok(fc);
    }
    Err(Error::Parse(
        "choose a filtration with --indices or add a \"filtration\" section to the instance".into(),
    ))
}

fn run(cli: &Cli) -> Result<(), Error> {
    let format: RenderFormat = cli.format.parse().map_err(Error::Parse)?;
    match &cli.command {
        Command::Validate { file } => {
            let instance = load_instance(cli, file, false)?;
            match &instance.content {
                InstanceContent::Poly(v) => {
                    v.validate()?;
                    println!(
                        "ok: {}-complex over {} with {} cells",
                        v.k(),
                        v.field(),
                        v.dims().len()
                    );
                }
                InstanceContent::Snake(s) => {
                    s.validate()?;
                    println!("ok: snake diagram over {} with dims {:?}", s.field(), s.dims());
                }
            }
        }
        Command::Cohomology { file, reps } => {
            let instance = load_instance(cli, file, false)?;
            let v = instance.polycomplex()?;
            let t = v.totalize();
            let h = t.underlying().cohomology();
            print!("{}", render_dim_table("cohomology of the total complex", &h.dims()));
            if *reps {
                for n in 0..=h.max_degree() {
                    let group = h.group(n).expect("inside window");
                    if group.dim() > 0 {
                        println!("representatives in degree {n}:\n{}", group.reps());
                    }
                }
            }
        }
        Command::Total { file, show_matrices } => {
            let instance = load_instance(cli, file, false)?;
            let v = instance.polycomplex()?;
            let t = v.totalize();
            for n in 0..=t.max_degree().max(-1) {
                let order = t.summand_order(n as usize);
                let parts: Vec<String> = order
                    .iter()
                    .map(|x| format!("{x}:{}", v.dim(x)))
                    .collect();
                println!(
                    "T^{n} (dim {}): {}",
                    t.underlying().dim(n),
                    if parts.is_empty() { "0".into() } else { parts.join(" + ") }
                );
            }
            if *show_matrices {
                for n in 0..t.max_degree().max(0) {
                    println!("d^{n} =\n{}", t.underlying().d(n));
                }
            }
        }
        Command::Pages { file, indices, max_page } => {
            let instance = load_instance(cli, file, false)?;
            let v = instance.polycomplex()?;
            let fc = pick_filtration(&instance, v, indices)?;
            fc.validate()?;
            let ss = SpectralSequence::compute(&fc, *max_page)?;
            let report = check_convergence(&ss, &fc)?;
            print!("{}", render_report(&PageReport::of(&ss, Some(&report)), format));
        }
        Command::Converge { file, indices } => {
            let instance = load_instance(cli, file, false)?;
            let v = instance.polycomplex()?;
            let fc = pick_filtration(&instance, v, indices)?;
            fc.validate()?;
            let ss = SpectralSequence::compute(&fc, None)?;
            let report = check_convergence(&ss, &fc)?;
            println!("stabilized at page {}", ss.r_stab());
            for (n, dim) in report.h_dims.iter().enumerate() {
                println!("H^{n}(total): dim {dim}");
            }
            for (&(p, q), &(e_inf, gr)) in &report.cells {
                if e_inf != 0 || gr != 0 {
                    println!("({p}, {q}): E_inf {e_inf}  graded H {gr}");
                }
            }
            println!(
                "verdict: {}",
                if report.converged() { "converged" } else { "MISMATCH" }
            );
        }
        Command::Edge { file, indices } => {
            let instance = load_instance(cli, file, false)?;
            let v = instance.polycomplex()?;
            let fc = pick_filtration(&instance, v, indices)?;
            fc.validate()?;
            let ss = SpectralSequence::compute(&fc, None)?;
            let edges = edge_morphisms(&ss, &fc)?;
            for (n, m) in edges.to_corner.iter().enumerate() {
                println!("H^{n} -> E_2^(0,{n})  rank {}\n{}", m.rank(), m);
            }
            for (n, m) in edges.from_corner.iter().enumerate() {
                println!("E_2^({n},0) -> H^{n}  rank {}\n{}", m.rank(), m);
            }
        }
        Command::Morphism { file, from, to, page } => {
            let instance = load_instance(cli, file, false)?;
            let v = instance.polycomplex()?;
            let a = parse_indices(v.k(), from)?;
            let b = parse_indices(v.k(), to)?;
            let morphism = specseq::morphism::inclusion_morphism(v, &a, &b)?;
            let pages: Vec<usize> = match page {
                Some(r) => vec![*r],
                None => (0..morphism.pages_computed()).collect(),
            };
            for r in pages {
                let Some(maps) = morphism.maps_at(r) else {
                    println!(
                        "page {r} was not computed (last is {})",
                        morphism.pages_computed() - 1
                    );
                    continue;
                };
                println!("f_{r} cell ranks:");
                for (&(p, q), m) in maps {
                    if m.rows() > 0 || m.cols() > 0 {
                        println!("  ({p}, {q}): rank {} of {}x{}", m.rank(), m.rows(), m.cols());
                    }
                }
            }
        }
        Command::Snake { file } => {
            let instance = load_instance(cli, file, true)?;
            let diagram = instance.snake_diagram()?;
            let result = specseq::snake::snake(diagram)?;
            let [ka, kb, kg, ca, cb, cg] = result.six_dims();
            println!("row-filtration first page vanishes: {}", result.row_e1_vanishes);
            println!("H(total) dims: {:?}", result.total_cohomology);
            println!(
                "0 -> ker a ({ka}) -> ker b ({kb}) -> ker g ({kg}) -> coker a ({ca}) -> coker b ({cb}) -> coker g ({cg}) -> 0"
            );
            println!("delta =\n{}", result.delta);
            println!("exact at all six spots: verified");
        }
        Command::ListFiltrations { file } => {
            let instance = load_instance(cli, file, false)?;
            let v = instance.polycomplex()?;
            let menu = canonical_filtrations(v);
            println!("{} canonical filtrations:", menu.len());
            for a in menu {
                println!("  --indices {a}");
            }
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
