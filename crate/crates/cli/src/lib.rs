//! Command-line front end: germ files, the bundled corpus and the
//! `conormal` command dispatcher.

pub mod corpus;
pub mod germfile;
mod report;

use std::io::{self, Write};
use std::path::Path;

use clap::{ArgGroup, Args, Parser, Subcommand};

pub use germfile::{GermFile, GermFileError};

/// Exit code for a certified or confirmed claim.
pub const EXIT_CERTIFIED: i32 = 0;
/// Exit code for a refuted claim or a missing certificate.
pub const EXIT_NOT_CERTIFIED: i32 = 1;
/// Exit code for usage and input errors.
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "conormal", version, about = "Conormal differential forms on affine germs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a form is conormal to the germ.
    Check(FormArgs),
    /// Decide whether a vector field is tangent to the germ.
    Tangent {
        #[arg(long)]
        germ: String,
        /// Components, e.g. "0, -y, -z".
        #[arg(long)]
        field: String,
    },
    /// Decide whether a form lies in the differential ideal of the germ.
    Trivial(FormArgs),
    /// Jacobian ideal, dimension of the singular locus and regularity in codimension k.
    Singular {
        #[arg(long)]
        germ: String,
    },
    /// Check the hyperplane-section statement on random hyperplanes.
    Bertini {
        #[arg(long)]
        germ: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        bound: u32,
        /// Check a single hyperplane with this integer normal, e.g. "1, -1, 0".
        #[arg(long)]
        normal: Option<String>,
    },
    /// Radial potential of a closed 1-form and its membership in the ideal.
    Potential(FormArgs),
    /// Run the bundled examples end to end.
    VerifyExamples,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["form", "named"])))]
struct FormArgs {
    /// Germ file, or the name of a bundled one.
    #[arg(long)]
    germ: String,
    /// Form expression, e.g. "x*dy*dz + 3*z*dx*dy".
    #[arg(long)]
    form: Option<String>,
    /// Name of a form declared in the germ file.
    #[arg(long)]
    named: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] conormal_core::Error),
    #[error("{name}: {source}")]
    GermFile { name: String, source: GermFileError },
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{0}")]
    Input(String),
    #[error("write failed: {0}")]
    Output(#[from] io::Error),
}

/// Reads a germ file from disk, falling back to the bundled corpus.
pub fn load_germ_file(name: &str) -> Result<GermFile, CliError> {
    let text = if Path::new(name).is_file() {
        std::fs::read_to_string(name).map_err(|source| CliError::Read { path: name.to_string(), source })?
    } else if let Some(text) = corpus::bundled(name) {
        text.to_string()
    } else {
        return Err(CliError::Input(format!("no germ file or bundled example named `{name}`")));
    };
    GermFile::parse(&text).map_err(|source| CliError::GermFile { name: name.to_string(), source })
}

/// Runs one invocation. `args` includes the program name. The report goes
/// to `out`, usage and input errors to `err`.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_CERTIFIED,
                _ => EXIT_INPUT_ERROR,
            };
            let target: &mut dyn Write = if code == EXIT_CERTIFIED { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Check(a) => report::check(out, &load_germ_file(&a.germ)?, a.form.as_deref(), a.named.as_deref()),
        Command::Tangent { germ, field } => report::tangent(out, &load_germ_file(&germ)?, &field),
        Command::Trivial(a) => report::trivial(out, &load_germ_file(&a.germ)?, a.form.as_deref(), a.named.as_deref()),
        Command::Singular { germ } => report::singular(out, &load_germ_file(&germ)?),
        Command::Bertini { germ, trials, seed, bound, normal } => {
            report::bertini(out, &load_germ_file(&germ)?, trials, seed, bound, normal.as_deref())
        }
        Command::Potential(a) => {
            report::potential(out, &load_germ_file(&a.germ)?, a.form.as_deref(), a.named.as_deref())
        }
        Command::VerifyExamples => report::verify_examples(out),
    }
}
