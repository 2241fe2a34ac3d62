//! Edge-list graphs: `src dst weight` per line, an optional
//! `# semiring: <name>` header, other `#` lines ignored.

use std::collections::HashMap;

use tropos::linalg::Matrix;
use tropos::semiring::{Semiring, SemiringId};

use crate::error::{detail, CliError, CliResult};

pub const MAX_NODES: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub weight: String,
    /// 1-based line of the definition that won.
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GraphSpec {
    pub semiring: SemiringId,
    /// Labels in order of first appearance.
    pub nodes: Vec<String>,
    pub edges: Vec<Edge>,
    /// Non-fatal findings such as repeated edges.
    pub warnings: Vec<String>,
}

pub fn parse_graph(text: &str) -> CliResult<GraphSpec> {
    let mut semiring = SemiringId::MinPlus;
    let mut nodes: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut warnings = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(name) = comment.trim().strip_prefix("semiring:") {
                semiring = name
                    .trim()
                    .parse()
                    .map_err(|e| CliError::Parse(format!("line {line}: {}", detail(&e))))?;
            }
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let [src, dst, weight] = fields[..] else {
            return Err(CliError::Parse(format!(
                "line {line}: expected `src dst weight`, found {} field(s)",
                fields.len()
            )));
        };
        let mut node = |label: &str| -> CliResult<usize> {
            if let Some(&k) = index.get(label) {
                return Ok(k);
            }
            if nodes.len() == MAX_NODES {
                return Err(CliError::Parse(format!("line {line}: more than {MAX_NODES} nodes")));
            }
            index.insert(label.to_string(), nodes.len());
            nodes.push(label.to_string());
            Ok(nodes.len() - 1)
        };
        let (s, d) = (node(src)?, node(dst)?);
        let edge = Edge {
            src: s,
            dst: d,
            weight: weight.to_string(),
            line,
        };
        match seen.get(&(s, d)) {
            Some(&k) => {
                warnings.push(format!(
                    "line {line}: edge {src} -> {dst} repeats line {}; the later weight wins",
                    edges[k].line
                ));
                edges[k] = edge;
            }
            None => {
                seen.insert((s, d), edges.len());
                edges.push(edge);
            }
        }
    }
    if edges.is_empty() {
        return Err(CliError::Parse("no edges".into()));
    }
    Ok(GraphSpec {
        semiring,
        nodes,
        edges,
        warnings,
    })
}

impl GraphSpec {
    /// Edge list in the input format; parsing it gives back `self` minus warnings.
    pub fn serialize(&self) -> String {
        let mut out = format!("# semiring: {}\n", self.semiring);
        for e in &self.edges {
            out.push_str(&format!("{}\t{}\t{}\n", self.nodes[e.src], self.nodes[e.dst], e.weight));
        }
        out
    }

    pub fn node_index(&self, label: &str) -> CliResult<usize> {
        self.nodes
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| CliError::Parse(format!("unknown node `{label}`")))
    }

    /// Dense adjacency matrix, `a[u][v]` = weight of `u → v`, zero-padded.
    pub fn adjacency<S: Semiring>(&self) -> CliResult<Matrix<S>> {
        let n = self.nodes.len();
        let mut a = Matrix::<S>::zeros(n, n);
        for e in &self.edges {
            let w = S::parse_elem(&e.weight).map_err(|err| CliError::Parse(format!("line {}: {}", e.line, detail(&err))))?;
            a.set(e.src, e.dst, w);
        }
        Ok(a)
    }
}
