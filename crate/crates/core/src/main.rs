use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use perfalg::cli::{commands, corpus, GlueCheck, IdempotentSpec, Report, Settings, TensorSpec};
use perfalg::exactla::Field;
use perfalg::Error;

#[derive(Parser)]
#[command(name = "perfalg", version, about = "Exact checks for perfect complexes, gluings and exceptional collections")]
struct Cli {
    /// Homological degree cutoff for resolutions.
    #[arg(long, global = true, default_value_t = 20)]
    cutoff: usize,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Verb {
    /// Radical, Cartan matrix and homological dimensions of an algebra.
    Analyze { file: PathBuf },
    /// The Auslander algebra of an algebra and its exceptional collection.
    Auslander { file: PathBuf },
    /// Glue A and B along a B-A-bimodule S.
    Glue {
        a: PathBuf,
        b: PathBuf,
        s: PathBuf,
        /// Comma separated: sod, k0, smooth, regular, round-trip.
        #[arg(long, value_delimiter = ',', default_value = "sod,k0,smooth,regular,round-trip")]
        verify: Vec<String>,
    },
    /// Split an algebra at an idempotent.
    Split {
        file: PathBuf,
        /// Quiver vertices whose sum is the idempotent.
        #[arg(long, value_delimiter = ',', conflicts_with = "idempotent")]
        vertex: Vec<String>,
        /// Coordinates of the idempotent in the algebra basis.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        idempotent: Vec<String>,
    },
    /// Indecomposable projectives as a semi-orthogonal collection.
    Sod {
        file: PathBuf,
        /// Order of the projective classes; found automatically when absent.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Quadratic three-vertex algebras and their point curves.
    Ncplane {
        #[arg(long, conflicts_with = "sklyanin")]
        commutative: bool,
        /// Parameters a,b,c.
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
        sklyanin: Option<Vec<String>>,
        /// Q or a prime p.
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// The whole shipped acceptance suite.
    Corpus,
}

fn read(path: &Path) -> Result<(String, String), Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
    Ok((name, text))
}

fn field(text: &str) -> Result<Field, Error> {
    match text {
        "Q" | "q" => Ok(Field::Rationals),
        p => {
            let p = p.trim_start_matches("F_").trim_start_matches('F');
            Field::prime(p.parse().map_err(|_| Error::InvalidField(text.into()))?)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let s = Settings { cutoff: cli.cutoff, seed: cli.seed };
    match &cli.verb {
        Verb::Analyze { file } => {
            let (n, t) = read(file)?;
            commands::analyze((&n, &t), &s)
        }
        Verb::Auslander { file } => {
            let (n, t) = read(file)?;
            commands::auslander((&n, &t), &s)
        }
        Verb::Glue { a, b, s: bim, verify } => {
            let which = verify
                .iter()
                .map(|w| GlueCheck::parse(w).ok_or_else(|| Error::Validation(format!("unknown check {w}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let (an, at) = read(a)?;
            let (bn, bt) = read(b)?;
            let (sn, st) = read(bim)?;
            commands::glue((&an, &at), (&bn, &bt), (&sn, &st), &which, &s)
        }
        Verb::Split { file, vertex, idempotent } => {
            let spec = match (vertex.is_empty(), idempotent.is_empty()) {
                (false, true) => IdempotentSpec::Vertices(vertex.clone()),
                (true, false) => IdempotentSpec::Coefficients(idempotent.clone()),
                _ => return Err(Error::Validation("give exactly one of --vertex and --idempotent".into())),
            };
            let (n, t) = read(file)?;
            commands::split((&n, &t), &spec, &s)
        }
        Verb::Sod { file, order } => {
            let (n, t) = read(file)?;
            commands::sod((&n, &t), order.as_deref(), &s)
        }
        Verb::Ncplane { commutative, sklyanin, field: f, samples } => {
            let spec = match (commutative, sklyanin) {
                (true, None) => TensorSpec::Commutative,
                (false, Some(p)) if p.len() == 3 => TensorSpec::Sklyanin([p[0].clone(), p[1].clone(), p[2].clone()]),
                _ => return Err(Error::Validation("give --commutative or --sklyanin a,b,c".into())),
            };
            commands::ncplane(&spec, field(f)?, *samples, &s)
        }
        Verb::Corpus => corpus(&s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            print!("{out}");
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("perfalg: {e}");
            ExitCode::from(2)
        }
    }
}
