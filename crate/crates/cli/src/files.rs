use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use lapmotif::io::{parse_function, parse_graph_any, serialize_function, serialize_graph};
use lapmotif::synthesis::{Block, BlockMeta};
use lapmotif::{Graph, VertexFunction};

/// An input file that could not be read or parsed; reported with exit code 2.
#[derive(Debug)]
pub struct InputError(pub anyhow::Error);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for InputError {}

fn input<T>(r: anyhow::Result<T>) -> anyhow::Result<T> {
    r.map_err(|e| InputError(e).into())
}

fn read(path: &Path) -> anyhow::Result<String> {
    input(std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display())))
}

pub fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = read(path)?;
    input(parse_graph_any(&text).with_context(|| format!("parsing {}", path.display())))
}

pub fn read_function(path: &Path, n: usize) -> anyhow::Result<VertexFunction> {
    let text = read(path)?;
    input(parse_function(&text, n).with_context(|| format!("parsing {}", path.display())))
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    if !contents.ends_with('\n') {
        tmp.write_all(b"\n")?;
    }
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn write_graph(path: &Path, g: &Graph) -> anyhow::Result<()> {
    write_atomic(path, &serialize_graph(g))
}

pub fn write_function(path: &Path, f: &VertexFunction) -> anyhow::Result<()> {
    write_atomic(path, &serialize_function(f))
}

/// `FILE` holds the graph, `FILE.fn` the function and `FILE.block.json` the
/// distinguished vertex and pair.
pub fn block_paths(path: &Path) -> (PathBuf, PathBuf) {
    let with = |ext: &str| {
        let mut s = path.as_os_str().to_owned();
        s.push(ext);
        PathBuf::from(s)
    };
    (with(".fn"), with(".block.json"))
}

pub fn function_path(path: &Path) -> PathBuf {
    block_paths(path).0
}

pub fn write_block(path: &Path, b: &Block) -> anyhow::Result<()> {
    let (fn_path, meta_path) = block_paths(path);
    write_graph(path, &b.graph)?;
    write_function(&fn_path, &b.f)?;
    write_atomic(&meta_path, &serde_json::to_string(&b.meta())?)
}

pub fn read_block(path: &Path) -> anyhow::Result<Block> {
    let (fn_path, meta_path) = block_paths(path);
    let graph = read_graph(path)?;
    let f = read_function(&fn_path, graph.vertex_count())?;
    let meta: BlockMeta = input(
        serde_json::from_str(&read(&meta_path)?)
            .with_context(|| format!("parsing {}", meta_path.display())),
    )?;
    let block = Block::from_parts(graph, meta.p0, f)?;
    if block.pair != (meta.n, meta.m) {
        anyhow::bail!(
            "{} records the pair ({}, {}) but the block realizes {:?}",
            meta_path.display(),
            meta.n,
            meta.m,
            block.pair
        );
    }
    Ok(block)
}
