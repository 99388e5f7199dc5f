//! Shared input handling: graphs from files or generator specs, partition
//! files, and configuration files.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use friendly_split::engine::Decomposition;
use friendly_split::graph::{self, Graph};
use friendly_split::{Rat, RatConfiguration, VertexSet};

/// Loads a graph from `--input PATH` (edge list or DIMACS, autodetected) or
/// `--gen SPEC`, returning it with a display name.
pub fn load_graph(
    input: &Option<PathBuf>,
    gen: &Option<String>,
    seed: u64,
) -> Result<(Graph, String)> {
    match (input, gen) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let g = parse_graph_text(&text)?;
            let name = path
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            Ok((g, name))
        }
        (None, Some(spec_text)) => {
            let spec: graph::GeneratorSpec = spec_text
                .parse()
                .map_err(|e| anyhow!("bad generator spec: {e}"))?;
            let g = graph::generate(&spec.clone().with_seed(seed))?;
            Ok((g, spec.to_string()))
        }
        _ => bail!("exactly one of --input or --gen is required"),
    }
}

/// DIMACS when a `p edge` problem line is present, edge list otherwise.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let is_dimacs = text
        .lines()
        .any(|l| l.trim_start().starts_with("p edge") || l.trim_start().starts_with("p "));
    let g = if is_dimacs {
        graph::parse_dimacs(text)?
    } else {
        graph::parse_edge_list(text)?
    };
    Ok(g)
}

/// Reads a partition file covering every vertex of a graph on `n` vertices.
///
/// Two shapes are accepted: the JSON object `{"A": [...], "B": [...],
/// "C": [...]}` that `decompose --format json` emits, or lines `vertex
/// class` with class in `{A, B, C}` and `#` comments.
pub fn load_partition(path: &Path, n: usize) -> Result<Decomposition> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let d = parse_partition_text(&text)?;
    if !d.is_partition_of(n) {
        bail!("partition does not cover the {n} vertices exactly");
    }
    Ok(d)
}

pub fn parse_partition_text(text: &str) -> Result<Decomposition> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text).context("parsing JSON")?;
        return Decomposition::from_json(&value).map_err(|e| anyhow!("bad partition JSON: {e}"));
    }
    let mut d = Decomposition {
        a: VertexSet::new(),
        b: VertexSet::new(),
        c: VertexSet::new(),
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (v, class) = match (parts.next(), parts.next(), parts.next()) {
            (Some(v), Some(c), None) => (v, c),
            _ => bail!("line {}: expected `vertex class`", idx + 1),
        };
        let v: usize = v
            .parse()
            .map_err(|_| anyhow!("line {}: bad vertex id `{v}`", idx + 1))?;
        match class {
            "A" | "a" => d.a.insert(v),
            "B" | "b" => d.b.insert(v),
            "C" | "c" => d.c.insert(v),
            other => bail!("line {}: class `{other}` is not one of A, B, C", idx + 1),
        }
    }
    Ok(d)
}

/// Reads a configuration file: a JSON array of `"num/den"` strings.
pub fn load_configuration(path: &Path, n: usize) -> Result<RatConfiguration> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let c = RatConfiguration::from_json_str(&text)?;
    if c.len() != n {
        bail!(
            "configuration has {} angles, graph has {n} vertices",
            c.len()
        );
    }
    Ok(c)
}

/// Parses `--init zero | cut:FILE | random` into an engine strategy.
pub fn parse_init(
    init: &str,
    n: usize,
    seed: u64,
) -> Result<friendly_split::engine::InitStrategy<Rat>> {
    use friendly_split::engine::InitStrategy;
    if init == "zero" {
        return Ok(InitStrategy::AllZero);
    }
    if init == "random" {
        return Ok(InitStrategy::RandomQuarterGrid { seed });
    }
    if let Some(path) = init.strip_prefix("cut:") {
        let d = load_partition(Path::new(path), n)?;
        if !d.c.is_empty() {
            bail!("--init cut expects a bipartition, but the file assigns vertices to C");
        }
        return Ok(InitStrategy::FromCut(d.a));
    }
    bail!("--init must be `zero`, `cut:FILE` or `random`, got `{init}`")
}

/// `FRIENDLY_SPLIT_THREADS` caps the comparison worker count.
pub fn thread_cap() -> Option<usize> {
    std::env::var("FRIENDLY_SPLIT_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map(|t| t.max(1))
}
