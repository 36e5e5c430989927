use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use domset::io::{
    format_solution, generate, parse_dimacs_cnf, parse_graph, parse_label_set,
    sat_to_extension_instance, GraphFormat, ParsedGraph,
};
use domset::{
    enum_mds_diamond_free, enum_mds_general, enum_mds_kt_plus_k2, enum_mds_paw_free,
    enum_mds_triangle_free, find_diamond, find_paw, find_triangle, oracle_extension, oracle_mds,
    BicoloredGraph, Error, SolutionStream, VertexSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Auto,
    TriangleFree,
    PawFree,
    DiamondFree,
    General,
    Ktk2,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Edges,
    Dimacs,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Edges => GraphFormat::Edges,
            Format::Dimacs => GraphFormat::Dimacs,
        }
    }
}

/// Enumerate the minimal dominating sets of a graph, one per line.
#[derive(Debug, Parser)]
#[command(name = "domset-enum", version)]
struct Cli {
    /// Graph file; standard input when absent.
    input: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "auto")]
    algorithm: Algorithm,

    #[arg(long, value_enum, default_value = "edges")]
    format: Format,

    /// File listing the labels of the vertices that must be dominated.
    #[arg(long, value_name = "FILE")]
    bicolor: Option<PathBuf>,

    /// Print only the number of solutions.
    #[arg(long)]
    count_only: bool,

    /// Report the solution count and the largest delay on stderr.
    #[arg(long)]
    stats: bool,

    /// Seed for --generate.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Use a generated graph, e.g. `random_bipartite:8,0.5` or `star:10`.
    #[arg(long, value_name = "KIND:PARAMS")]
    generate: Option<String>,

    /// Build the extension instance of a DIMACS CNF formula.
    #[arg(long, value_name = "FILE")]
    sat: Option<PathBuf>,

    /// Decide whether the prescribed set extends to a minimal dominating set.
    #[arg(long)]
    check_extension: bool,
}

fn read_path(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Graph plus prescribed set. With `--sat` the prescribed set is the forced
/// set of the extension instance.
fn load(cli: &Cli) -> Result<(ParsedGraph, VertexSet), Error> {
    if let Some(path) = &cli.sat {
        let inst = sat_to_extension_instance(&parse_dimacs_cnf(&read_path(path)?)?);
        let pg = ParsedGraph {
            graph: inst.graph,
            labels: inst.labels,
        };
        return Ok((pg, inst.forced));
    }
    let pg = if let Some(recipe) = &cli.generate {
        ParsedGraph::unlabeled(generate(recipe, cli.seed)?)
    } else {
        let text = match &cli.input {
            Some(path) => read_path(path)?,
            None => {
                let mut buf = String::new();
                io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::Input(format!("stdin: {e}")))?;
                buf
            }
        };
        parse_graph(&text, cli.format.into())?
    };
    let a = match &cli.bicolor {
        Some(path) => parse_label_set(&read_path(path)?, &pg)?,
        None => pg.graph.vertices(),
    };
    Ok((pg, a))
}

fn pick_auto(bg: &BicoloredGraph) -> Algorithm {
    let g = bg.graph();
    if find_triangle(g, bg.prescribed()).is_none() {
        Algorithm::TriangleFree
    } else if find_paw(g).is_none() {
        Algorithm::PawFree
    } else if find_diamond(g).is_none() {
        Algorithm::DiamondFree
    } else {
        Algorithm::General
    }
}

fn stream_for(algorithm: Algorithm, bg: &BicoloredGraph) -> Result<SolutionStream, Error> {
    match algorithm {
        Algorithm::Auto => stream_for(pick_auto(bg), bg),
        Algorithm::TriangleFree => enum_mds_triangle_free(bg),
        Algorithm::PawFree => enum_mds_paw_free(bg),
        Algorithm::DiamondFree => enum_mds_diamond_free(bg),
        Algorithm::General => Ok(enum_mds_general(bg)),
        Algorithm::Ktk2 => {
            if bg.prescribed() != &bg.graph().vertices() {
                return Err(Error::Input(
                    "ktk2 enumerates D(G) only; drop --bicolor".into(),
                ));
            }
            Ok(enum_mds_kt_plus_k2(bg.graph()))
        }
        Algorithm::Oracle => Ok(SolutionStream::from_sets(oracle_mds(bg)?)),
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let (pg, a) = load(cli)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let write_err = |e: io::Error| Error::Input(format!("stdout: {e}"));
    if cli.check_extension {
        let verdict = oracle_extension(&pg.graph, &a)?;
        let text = if verdict {
            "extensible"
        } else {
            "not-extensible"
        };
        writeln!(out, "{text}").map_err(write_err)?;
        return Ok(());
    }
    let bg = BicoloredGraph::new(pg.graph.clone(), a)?;
    let stream = stream_for(cli.algorithm, &bg).inspect_err(|e| {
        if let Error::ClassViolation { witness, .. } = e {
            let names: Vec<&str> = witness.iter().map(|&v| pg.labels[v].as_str()).collect();
            eprintln!("witness: {}", names.join(" "));
        }
    })?;
    let mut count = 0usize;
    let mut max_delay = 0f64;
    let mut last = Instant::now();
    for item in stream.start() {
        let d = item?;
        let now = Instant::now();
        max_delay = max_delay.max(now.duration_since(last).as_secs_f64() * 1000.0);
        last = now;
        count += 1;
        if !cli.count_only {
            writeln!(out, "{}", format_solution(&d, &pg.labels)).map_err(write_err)?;
            out.flush().map_err(write_err)?;
        }
    }
    if cli.count_only {
        writeln!(out, "{count}").map_err(write_err)?;
    }
    if cli.stats {
        eprintln!("# solutions={count} max_delay_ms={max_delay:.3}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("domset-enum: {e}");
            match e {
                Error::ClassViolation { .. } => ExitCode::from(3),
                e if e.is_input_error() => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
