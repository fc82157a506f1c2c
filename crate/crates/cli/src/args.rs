use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "projdiff", version, about = "Projective differential invariants of varieties at a point")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    DoublePlusTwo,
    Quadruple,
    TriplePlusOne,
    Squares,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fundamental forms, Fubini test, pencil and predicted class.
    Analyze {
        #[arg(required_unless_present = "batch")]
        input: Option<PathBuf>,
        /// Homogeneous coordinates, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long, default_value_t = 5)]
        order: u32,
        /// Analyze every `.json` file of a directory.
        #[arg(long, conflicts_with = "input")]
        batch: Option<PathBuf>,
    },
    /// Contact order at the first point of a line through two points.
    Contact {
        input: PathBuf,
        /// `p;q` with comma separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        line: String,
        #[arg(long, default_value_t = 5)]
        order: u32,
    },
    /// Classifies the pencil spanned by two symmetric matrices.
    Pencil {
        /// Rows separated by `;`, entries by `,`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Fubini test at a point.
    Fubini {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long, default_value_t = 3)]
        order: u32,
    },
    /// Splitting type of the normal bundle of a line on a hypersurface.
    Splitting {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        line: String,
    },
    /// Writes an example of one of the seven classes.
    Gen {
        class: u8,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<String>,
        #[arg(long, value_enum)]
        variant: Option<Variant>,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
}
