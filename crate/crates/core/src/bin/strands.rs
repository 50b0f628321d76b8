//! `strands`: command-line front end.
//!
//! Exit status: 0 on success, 1 when the input is well formed but outside the
//! domain of the verb, 2 on parse errors, unreadable files, or bad usage.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use thompson_strands::config::{config_map, df_section, is_in_cf, is_in_df, Configuration};
use thompson_strands::format::{
    emit_configuration, emit_diagram, emit_generalized, parse_configuration, parse_diagram, parse_generalized,
    parse_moves, parse_word,
};
use thompson_strands::rational::{parse_rational, rat, Rational};
use thompson_strands::render::{render, Format, RenderSpec, Renderable};
use thompson_strands::stein::{
    ball, cubes_at, elementary_forests_at, holonomy, quotient_ball, splitting_forests_at, ComplexVertex,
    DEFAULT_BALL_CAP,
};
use thompson_strands::thompson::FElement;
use thompson_strands::Error;

#[derive(Parser)]
#[command(name = "strands", version, about = "Strand diagrams, Thompson's group F, Stein's complex and configuration spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Svg,
    Dot,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Svg => Format::Svg,
            OutputFormat::Dot => Format::Dot,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Diagram,
    Generalized,
    Config,
    Ball,
}

/// Inputs are file paths, or `-` for standard input.
#[derive(Subcommand)]
enum Command {
    /// Reduce a diagram.
    Reduce { file: String },
    /// Print whether two diagrams are equivalent.
    Eq { left: String, right: String },
    /// Stack the first diagram on top of the second and reduce.
    Mul { left: String, right: String },
    /// Reflect a diagram.
    Inv { file: String },
    /// Evaluate a word in a, A, b, B (x0, x0^-1, x1, x1^-1) as an element of F.
    Word {
        file: String,
        /// Print the PL homeomorphism instead of the diagram.
        #[arg(long, conflicts_with = "tree")]
        pl: bool,
        /// Print the reduced tree pair instead of the diagram.
        #[arg(long)]
        tree: bool,
    },
    /// Evaluate the PL map of a word at a point of [0, 1].
    PlEval { file: String, x: String },
    /// Configuration of a generalized diagram.
    Cmap {
        file: String,
        /// Collapse repeated entries.
        #[arg(long)]
        canonical: bool,
    },
    /// Print whether a tuple lies in CF.
    InCf { file: String },
    /// Print whether a tuple lies in DF.
    InDf { file: String },
    /// Collapse repeated entries of a CF tuple.
    CanonCf { file: String },
    /// Retract a CF tuple into DF.
    Retract { file: String },
    /// Sample the retraction homotopy.
    PathSample {
        file: String,
        /// Number of evenly spaced samples, endpoints included.
        #[arg(long, default_value_t = 32, conflicts_with = "at")]
        samples: usize,
        /// A single parameter in [0, 1].
        #[arg(long)]
        at: Option<String>,
    },
    /// A generalized diagram mapping onto a DF tuple.
    Section { file: String },
    /// A common splitting of two (1, n) diagrams.
    UpperBound { left: String, right: String },
    /// List the elementary forests on n strands.
    Forests {
        n: usize,
        /// Only forests without merges.
        #[arg(long)]
        splitting: bool,
    },
    /// List the cubes containing a vertex.
    Cubes {
        file: String,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Explore the 1-skeleton around a vertex.
    Ball {
        file: String,
        #[arg(long, default_value_t = 1)]
        radius: usize,
        /// Work in the quotient by F.
        #[arg(long)]
        quotient: bool,
        #[arg(long, default_value_t = DEFAULT_BALL_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// The element of F traced by a loop of elementary moves.
    Holonomy {
        file: String,
        #[arg(long)]
        pl: bool,
    },
    /// Draw an object.
    Render {
        #[arg(value_enum)]
        kind: Kind,
        file: String,
        #[arg(long, value_enum, default_value = "svg")]
        format: OutputFormat,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long)]
        no_labels: bool,
        /// Ball radius, for `ball`.
        #[arg(long, default_value_t = 1)]
        radius: usize,
        #[arg(long)]
        quotient: bool,
        #[arg(long, default_value_t = DEFAULT_BALL_CAP)]
        cap: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_parse() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    }
    Ok(text)
}

fn number(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).ok_or_else(|| usage(format!("`{text}` is not a rational number")))
}

fn vertex(path: &str) -> Result<ComplexVertex, Failure> {
    Ok(ComplexVertex::new(&parse_diagram(&read(path)?)?)?)
}

fn element(path: &str) -> Result<FElement, Failure> {
    Ok(FElement::from_word(&parse_word(&read(path)?)?))
}

fn configuration(path: &str) -> Result<Configuration, Failure> {
    Ok(Configuration::new(parse_configuration(&read(path)?)?)?)
}

fn boolean(b: bool) -> String {
    format!("{b}\n")
}

fn run(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Reduce { file } => emit_diagram(&parse_diagram(&read(&file)?)?.reduce()),
        Command::Eq { left, right } => {
            let (a, b) = (parse_diagram(&read(&left)?)?, parse_diagram(&read(&right)?)?);
            boolean(a.equivalent(&b))
        }
        Command::Mul { left, right } => {
            let (a, b) = (parse_diagram(&read(&left)?)?, parse_diagram(&read(&right)?)?);
            emit_diagram(&a.multiply(&b)?)
        }
        Command::Inv { file } => emit_diagram(&parse_diagram(&read(&file)?)?.invert()),
        Command::Word { file, pl, tree } => {
            let g = element(&file)?;
            if pl {
                g.to_pl().to_string()
            } else if tree {
                format!("{}\n", g.to_tree_pair()?)
            } else {
                emit_diagram(g.diagram())
            }
        }
        Command::PlEval { file, x } => {
            let g = element(&file)?;
            format!("{}\n", g.to_pl().eval(&number(&x)?)?)
        }
        Command::Cmap { file, canonical } => {
            let c = config_map(&parse_generalized(&read(&file)?)?);
            if canonical {
                emit_configuration(c.canonicalize().entries())
            } else {
                emit_configuration(c.entries())
            }
        }
        Command::InCf { file } => boolean(is_in_cf(&parse_configuration(&read(&file)?)?)?),
        Command::InDf { file } => {
            let t = parse_configuration(&read(&file)?)?;
            if t.is_empty() {
                return Err(Error::EmptyConfiguration.into());
            }
            boolean(is_in_df(&t))
        }
        Command::CanonCf { file } => emit_configuration(configuration(&file)?.canonicalize().entries()),
        Command::Retract { file } => emit_configuration(configuration(&file)?.retract().entries()),
        Command::PathSample { file, samples, at } => {
            let c = configuration(&file)?;
            let points: Vec<Rational> = match at {
                Some(s) => vec![number(&s)?],
                None if samples < 2 => return Err(usage("--samples needs at least 2")),
                None => (0..samples).map(|k| rat(k as i64, samples as i64 - 1)).collect(),
            };
            let mut out = String::new();
            for s in points {
                let p = c.retract_path(&s)?;
                writeln!(out, "{s}: {p}").expect("writing to a string");
            }
            out
        }
        Command::Section { file } => emit_generalized(&df_section(&parse_configuration(&read(&file)?)?)?),
        Command::UpperBound { left, right } => {
            let (x, y) = (vertex(&left)?, vertex(&right)?);
            emit_diagram(x.upper_bound(&y)?.diagram())
        }
        Command::Forests { n, splitting } => {
            if n == 0 {
                return Err(usage("n must be at least 1"));
            }
            let forests = if splitting {
                splitting_forests_at(n)
            } else {
                elementary_forests_at(n)
            };
            forests.iter().map(|f| format!("{f}\n")).collect()
        }
        Command::Cubes { file, max_dim } => {
            let v = vertex(&file)?;
            let cubes = cubes_at(&v, max_dim.unwrap_or(usize::MAX));
            cubes
                .iter()
                .map(|c| format!("dim {} top {} splits {}\n", c.dimension(), c.top(), c.splits()))
                .collect()
        }
        Command::Ball {
            file,
            radius,
            quotient,
            cap,
            format,
        } => draw_ball(&file, radius, quotient, cap, &RenderSpec { format: format.into(), ..Default::default() })?,
        Command::Holonomy { file, pl } => {
            let g = holonomy(&parse_moves(&read(&file)?)?)?;
            if pl {
                g.to_pl().to_string()
            } else {
                emit_diagram(g.diagram())
            }
        }
        Command::Render {
            kind,
            file,
            format,
            scale,
            no_labels,
            radius,
            quotient,
            cap,
        } => {
            if !(scale.is_finite() && scale > 0.0) {
                return Err(usage("--scale must be positive"));
            }
            let spec = RenderSpec {
                format: format.into(),
                scale,
                labels: !no_labels,
            };
            match kind {
                Kind::Diagram => render(Renderable::Diagram(&parse_diagram(&read(&file)?)?), &spec)?,
                Kind::Generalized => render(Renderable::Generalized(&parse_generalized(&read(&file)?)?), &spec)?,
                Kind::Config => render(Renderable::Configuration(configuration(&file)?.entries()), &spec)?,
                Kind::Ball => draw_ball(&file, radius, quotient, cap, &spec)?,
            }
        }
    })
}

fn draw_ball(file: &str, radius: usize, quotient: bool, cap: usize, spec: &RenderSpec) -> Result<String, Failure> {
    if spec.format == Format::Svg {
        return Err(Error::Unsupported("balls render as dot or text".into()).into());
    }
    let v = vertex(file)?;
    Ok(if quotient {
        render(Renderable::QuotientBall(&quotient_ball(v.sinks(), radius, cap)?), spec)?
    } else {
        render(Renderable::Ball(&ball(&v, radius, cap)?), spec)?
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("strands: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
