// SPDX-License-Identifier: Apache-2.0

use clap::{Args, ValueEnum};
use girthpath::io::{digest, to_arc_csv, to_dot, to_edge_list};

use crate::error::CliError;
use crate::manifest::RunManifest;
use crate::output::{emit, read_digraph, with_manifest};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Csv,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Edge list or JSON digraph.
    file: String,
    #[arg(long)]
    format: Format,
    /// Destination; stdout when absent.
    #[arg(long)]
    out: Option<String>,
}

pub fn run(args: ExportArgs) -> Result<(), CliError> {
    let d = read_digraph(&args.file)?;
    let text = match args.format {
        Format::Dot => to_dot(&d),
        Format::Csv => to_arc_csv(&d),
        Format::Edgelist => to_edge_list(&d),
        Format::Json => {
            let manifest = RunManifest::new("export", None)?
                .param("file", &args.file)
                .param("format", "json")
                .digest(digest(&d));
            with_manifest(&d, &manifest)
        }
    };
    emit(args.out.as_deref(), &text)
}
