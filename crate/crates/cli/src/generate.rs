// SPDX-License-Identifier: Apache-2.0

use clap::{Args, Subcommand};
use girthpath::constructions::{
    build_counterexample, generate, params_for_girth, CounterexampleParams, GenKind, GenSpec,
};
use girthpath::io::{digest, to_dot, to_edge_list};
use girthpath::Digraph;

use crate::error::CliError;
use crate::manifest::RunManifest;
use crate::output::{emit, with_manifest};

#[derive(Debug, Subcommand)]
pub enum GenerateCommand {
    /// Lift-family member, by girth or by `(a, b)`.
    Counterexample(CounterexampleArgs),
    /// Seeded random digraph.
    Random(RandomArgs),
}

#[derive(Debug, Args)]
pub struct CounterexampleArgs {
    #[arg(long)]
    delta: usize,
    /// Target girth; picks `a` and `b` automatically.
    #[arg(long, conflicts_with_all = ["a", "b"], required_unless_present_all = ["a", "b"])]
    g: Option<usize>,
    #[arg(long, requires = "b")]
    a: Option<usize>,
    #[arg(long, requires = "a")]
    b: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    /// out_regular, oriented_min_outdeg or cd_regular.
    #[arg(long)]
    kind: GenKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    /// In-degree factor for cd_regular.
    #[arg(long = "C", default_value_t = 1.0)]
    c: f64,
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Edge-list destination; stdout when absent.
    #[arg(long)]
    out: Option<String>,
    /// Also write DOT here.
    #[arg(long)]
    dot: Option<String>,
    /// Also write the run manifest as JSON here.
    #[arg(long)]
    manifest: Option<String>,
}

pub fn run(cmd: GenerateCommand) -> Result<(), CliError> {
    match cmd {
        GenerateCommand::Counterexample(args) => counterexample(args),
        GenerateCommand::Random(args) => random(args),
    }
}

fn counterexample(args: CounterexampleArgs) -> Result<(), CliError> {
    let usage = |e: girthpath::constructions::ConstructionError| CliError::Usage(e.to_string());
    let params = match (args.g, args.a, args.b) {
        (Some(g), _, _) => params_for_girth(g, args.delta).map_err(usage)?.0,
        (None, Some(a), Some(b)) => CounterexampleParams::new(args.delta, a, b).map_err(usage)?,
        _ => return Err(CliError::Usage("give --g or both --a and --b".into())),
    };
    let d = build_counterexample(params);
    let mut manifest = RunManifest::new("generate counterexample", None)?
        .param("delta", params.delta)
        .param("a", params.a)
        .param("b", params.b);
    if let Some(g) = args.g {
        manifest = manifest.param("g", g);
    }
    let prediction = format!(
        "girth={} ell={} exact_ell={} n={} m={}",
        params.predicted_girth(),
        params.claimed_longest_path(),
        params.exact_longest_path(),
        d.vertex_count(),
        d.arc_count()
    );
    write_instance(&d, manifest, &args.out, &prediction)
}

fn random(args: RandomArgs) -> Result<(), CliError> {
    let spec = GenSpec::new(args.kind, args.n, args.d, args.seed).with_c(args.c);
    let d = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let manifest = RunManifest::new("generate random", Some(args.seed))?
        .param("kind", args.kind)
        .param("n", args.n)
        .param("d", args.d)
        .param("C", args.c);
    let profile = d.degree_profile().ok();
    let summary = format!(
        "n={} m={} min_out={} max_in={}",
        d.vertex_count(),
        d.arc_count(),
        profile.map_or(0, |p| p.min_out),
        profile.map_or(0, |p| p.max_in)
    );
    write_instance(&d, manifest, &args.out, &summary)
}

/// Edge list to `--out` (or stdout), optional DOT and manifest files. The
/// summary line goes to stdout when the edge list went to a file and to
/// stderr otherwise, so stdout stays a clean edge list.
fn write_instance(
    d: &Digraph,
    manifest: RunManifest,
    out: &OutputArgs,
    summary: &str,
) -> Result<(), CliError> {
    emit(out.out.as_deref(), &to_edge_list(d))?;
    if let Some(path) = &out.dot {
        emit(Some(path), &to_dot(d))?;
    }
    if let Some(path) = &out.manifest {
        let manifest = manifest.digest(digest(d));
        emit(
            Some(path),
            &with_manifest(&serde_json::json!({}), &manifest),
        )?;
    }
    if out.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}
