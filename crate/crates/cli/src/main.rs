use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use ncwitt::verify::{run_check, Check, VerificationReport};
use ncwitt::{
    eval_matrix, ghost_map, parse, witt_add_int, witt_mul_int, CoefficientRing, FreePoly,
    GeneratorSet, IntWittVector, NecklacePoly, Prime,
};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

mod matrix_file;

#[derive(Parser)]
#[command(name = "ncwitt", version, about = "Witt vector calculus over free associative algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ghost image ω̄(a) of Witt coordinates, as necklace polynomials.
    Ghost {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        trunc: usize,
        /// Coordinates separated by `;`, missing trailing coordinates are zero.
        #[arg(long)]
        coords: String,
        #[arg(long, default_value = "X,Y")]
        gens: String,
    },
    /// Canonical form of a polynomial in the commutator quotient.
    Necklace {
        #[arg(long = "mod")]
        modulus: Option<String>,
        #[arg(long, default_value = "X,Y")]
        gens: String,
        poly: String,
    },
    /// Sum of two integer Witt vectors.
    WittAdd(WittArgs),
    /// Product of two integer Witt vectors.
    WittMul(WittArgs),
    /// Run one verification check for one prime.
    Verify {
        #[arg(long)]
        theorem: Check,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 2)]
        trunc: usize,
    },
    /// Run every check for every prime up to a bound.
    VerifySweep {
        #[arg(long)]
        max_prime: u64,
        #[arg(long, default_value_t = 2)]
        trunc: usize,
    },
    /// Evaluate a polynomial at matrices read from a JSON file.
    Eval {
        #[arg(long)]
        matrices: PathBuf,
        /// Generator order; defaults to the names in the matrix file.
        #[arg(long)]
        gens: Option<String>,
        poly: String,
    },
}

#[derive(clap::Args)]
struct WittArgs {
    #[arg(long)]
    prime: u64,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
}

#[derive(Serialize)]
struct GhostOutput {
    ghost: ncwitt::GhostVector,
}

#[derive(Serialize)]
struct NecklaceOutput {
    canonical: String,
    terms: NecklacePoly,
}

#[derive(Serialize)]
struct MatrixOutput {
    dimension: usize,
    modulus: String,
    matrix: Vec<Vec<String>>,
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn int_coords(text: &str) -> Result<Vec<BigInt>> {
    text.split(',')
        .map(|c| c.trim().parse::<BigInt>().with_context(|| format!("`{c}` is not an integer")))
        .collect()
}

fn ring_from_flag(modulus: Option<&str>) -> Result<CoefficientRing> {
    Ok(match modulus {
        None => CoefficientRing::Integers,
        Some(m) => CoefficientRing::parse(m)?,
    })
}

fn sweep(max_prime: u64, trunc: usize) -> Result<Vec<VerificationReport>> {
    let jobs: Vec<(Prime, Check)> = Prime::up_to(max_prime)
        .into_iter()
        .flat_map(|p| Check::ALL.into_iter().map(move |c| (p, c)))
        .collect();
    // par_iter preserves input order in the collected Vec.
    jobs.par_iter()
        .map(|&(p, c)| run_check(c, p.get(), trunc).map_err(anyhow::Error::from))
        .collect()
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Ghost { prime, trunc, coords, gens } => {
            let p = Prime::new(prime)?;
            let gens = GeneratorSet::parse_list(&gens)?;
            let ring = CoefficientRing::Integers;
            let mut polys: Vec<FreePoly> = coords
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(|s| parse(s, &gens, &ring))
                .collect::<ncwitt::Result<_>>()?;
            if polys.len() > trunc {
                bail!("{} coordinates given for truncation {trunc}", polys.len());
            }
            polys.resize(trunc, FreePoly::zero(&gens, &ring));
            print_json(&GhostOutput { ghost: ghost_map(&polys, p)? })?;
        }
        Command::Necklace { modulus, gens, poly } => {
            let gens = GeneratorSet::parse_list(&gens)?;
            let ring = ring_from_flag(modulus.as_deref())?;
            let n = NecklacePoly::project(&parse(&poly, &gens, &ring)?);
            print_json(&NecklaceOutput { canonical: n.to_string(), terms: n })?;
        }
        Command::WittAdd(args) => print_json(&witt_op(&args, witt_add_int)?)?,
        Command::WittMul(args) => print_json(&witt_op(&args, witt_mul_int)?)?,
        Command::Verify { theorem, prime, trunc } => {
            let report = run_check(theorem, prime, trunc)?;
            print_json(&report)?;
            return Ok(report.holds());
        }
        Command::VerifySweep { max_prime, trunc } => {
            let reports = sweep(max_prime, trunc)?;
            print_json(&reports)?;
            return Ok(reports.iter().all(VerificationReport::holds));
        }
        Command::Eval { matrices, gens, poly } => {
            let text = fs::read_to_string(&matrices)
                .with_context(|| format!("reading {}", matrices.display()))?;
            let file: matrix_file::MatrixFile = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", matrices.display()))?;
            let asg = file.assignment()?;
            let gens = match gens {
                Some(g) => GeneratorSet::parse_list(&g)?,
                None => GeneratorSet::new(file.generator_names())?,
            };
            let f = parse(&poly, &gens, &CoefficientRing::Integers)?;
            let m = eval_matrix(&f, &asg)?;
            print_json(&MatrixOutput {
                dimension: m.dim(),
                modulus: asg.ring().modulus().map_or("int".to_owned(), ToString::to_string),
                matrix: m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
            })?;
        }
    }
    Ok(true)
}

fn witt_op(
    args: &WittArgs,
    op: fn(&IntWittVector, &IntWittVector) -> ncwitt::Result<IntWittVector>,
) -> Result<IntWittVector> {
    let p = Prime::new(args.prime)?;
    let a = IntWittVector::new(p, int_coords(&args.a)?);
    let b = IntWittVector::new(p, int_coords(&args.b)?);
    Ok(op(&a, &b)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
