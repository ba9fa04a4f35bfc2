use std::io::Write;

use anyhow::Result;
use clap::Args;
use rauzy::{build_graph, shape_of, ForkShape};
use words_core::factor_set;

use crate::common::{open_sink, write_header, OutputFormat, WordSource, EXIT_VERIFY_FAILED};

/// Factor graphs: tables with columns k,vertices,edges,l,r,s,
/// strongly_connected, DOT export, and the shape ancestry chain.
#[derive(Debug, Args)]
pub struct RauzyArgs {
    #[command(flatten)]
    pub source: WordSource,

    /// Single graph order (with --dot renders that graph).
    #[arg(long)]
    pub k: Option<usize>,

    /// Emit a table for k = 1..=k-max.
    #[arg(long, default_value_t = 20)]
    pub k_max: usize,

    /// Render the chosen k-graph as DOT instead of a table.
    #[arg(long)]
    pub dot: bool,

    /// Table output as csv; dot is the same as --dot.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,

    /// Print the predecessor chain of a shape "l,r,s" and exit.
    #[arg(long)]
    pub ancestry: Option<String>,

    /// Exit nonzero unless every listed graph is strongly connected with one
    /// in-fork and one out-fork and edges = vertices + 1.
    #[arg(long)]
    pub verify: bool,

    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

pub fn run(args: &RauzyArgs) -> Result<i32> {
    let mut out = open_sink(&args.output)?;

    if let Some(spec) = &args.ancestry {
        let shape = ForkShape::parse(spec)?;
        write_header(out.as_mut(), "rauzy", &format!("ancestry of {shape}"))?;
        writeln!(out, "l,r,s")?;
        for sh in shape.ancestry() {
            let (r, s) = sh.arcs();
            writeln!(out, "{},{},{}", sh.bridge(), r, s)?;
        }
        return Ok(0);
    }

    let word = args.source.load()?;
    if args.dot || args.format == OutputFormat::Dot {
        let k = args.k.unwrap_or(1);
        let fs = factor_set(&word, k + 1)?;
        let graph = build_graph(&fs, k)?;
        write!(out, "{}", graph.to_dot())?;
        return Ok(0);
    }

    let ks: Vec<usize> = match args.k {
        Some(k) => vec![k],
        None => (1..=args.k_max).collect(),
    };
    let max_k = *ks.iter().max().expect("at least one k");
    let fs = factor_set(&word, max_k + 1)?;
    let config = format!("{} | k up to {max_k}", args.source.describe());
    write_header(out.as_mut(), "rauzy", &config)?;
    writeln!(out, "k,vertices,edges,l,r,s,strongly_connected")?;
    let mut all_good = true;
    for k in ks {
        let graph = build_graph(&fs, k)?;
        let connected = graph.strongly_connected();
        let forks = graph.forks();
        let shape = shape_of(&graph);
        let (l, r, s) = match shape {
            Some(sh) => {
                let (r, s) = sh.arcs();
                (sh.bridge().to_string(), r.to_string(), s.to_string())
            }
            None => (String::new(), String::new(), String::new()),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            k,
            graph.vertex_count(),
            graph.edge_count(),
            l,
            r,
            s,
            connected
        )?;
        if !(connected
            && forks.in_forks.len() == 1
            && forks.out_forks.len() == 1
            && graph.edge_count() == graph.vertex_count() + 1)
        {
            all_good = false;
        }
    }
    if args.verify && !all_good {
        writeln!(out, "# verify: FAILED")?;
        return Ok(EXIT_VERIFY_FAILED);
    }
    if args.verify {
        writeln!(out, "# verify: ok")?;
    }
    Ok(0)
}
