//! Graph serialization: JSON (round-trippable), DOT, and plain edge lists.
//! Writers stream element by element.

use std::io::{self, Read, Write};

use ggadget_core::construction::vertex_of_id;
use ggadget_core::{EdgeKind, LabeledGraph, Role, Tree, TreeNode};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Edgelist,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub ell: Option<u32>,
    pub tree_depth: u32,
    pub num_vertices: usize,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: u32,
    pub node: u64,
    pub depth: u32,
    pub role: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub u: u32,
    pub v: u32,
    pub kind: String,
}

pub fn write_graph<W: Write>(g: &LabeledGraph, format: Format, out: W) -> io::Result<()> {
    match format {
        Format::Json => write_json(g, out),
        Format::Dot => write_dot(g, out),
        Format::Edgelist => write_edgelist(g, out),
    }
}

/// `u v kind` per line, sorted by `(u, v)` with `u < v`.
pub fn write_edgelist<W: Write>(g: &LabeledGraph, mut out: W) -> io::Result<()> {
    for (u, v, k) in g.edges() {
        writeln!(out, "{u} {v} {k}")?;
    }
    out.flush()
}

/// JSON document with `ell`, `tree_depth`, `num_vertices`, `vertices` and
/// `edges`; edges sorted by `(u, v)` with `u < v`.
pub fn write_json<W: Write>(g: &LabeledGraph, mut out: W) -> io::Result<()> {
    let depth = g
        .tree_depth()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "graph has no tree labeling"))?;
    let ell = g
        .ell()
        .map_or_else(|| "null".to_string(), |e| e.to_string());
    writeln!(out, "{{")?;
    writeln!(out, "  \"ell\": {ell},")?;
    writeln!(out, "  \"tree_depth\": {depth},")?;
    writeln!(out, "  \"num_vertices\": {},", g.num_vertices())?;
    writeln!(out, "  \"vertices\": [")?;
    let n = g.num_vertices();
    for id in g.vertex_ids() {
        let v = vertex_of_id(id);
        let sep = if (id as usize) + 1 < n { "," } else { "" };
        writeln!(
            out,
            "    {{\"id\": {}, \"node\": {}, \"depth\": {}, \"role\": \"{}\"}}{sep}",
            id,
            v.node.index(),
            v.depth(),
            v.role
        )?;
    }
    writeln!(out, "  ],")?;
    writeln!(out, "  \"edges\": [")?;
    let m = g.num_edges();
    for (i, (u, v, k)) in g.edges().enumerate() {
        let sep = if i + 1 < m { "," } else { "" };
        writeln!(
            out,
            "    {{\"u\": {u}, \"v\": {v}, \"kind\": \"{k}\"}}{sep}"
        )?;
    }
    writeln!(out, "  ]")?;
    writeln!(out, "}}")?;
    out.flush()
}

fn rank_color(rank: Option<u32>) -> &'static str {
    match rank {
        Some(1) => "green",
        Some(2) => "blue",
        Some(3) => "orange",
        _ => "gray40",
    }
}

/// DOT with clique edges solid, tree edges dashed, and ribs colored by the
/// rank of their interval.
pub fn write_dot<W: Write>(g: &LabeledGraph, mut out: W) -> io::Result<()> {
    let name = g
        .ell()
        .map_or_else(|| "blow_up".to_string(), |e| format!("G_{e}"));
    writeln!(out, "graph {name} {{")?;
    writeln!(out, "  node [shape=circle, fontsize=8];")?;
    for id in g.vertex_ids() {
        match g.vertex(id) {
            Some(v) => writeln!(out, "  {id} [label=\"{}.{}\"];", v.node.index(), v.role)?,
            None => writeln!(out, "  {id};")?,
        }
    }
    for (u, v, k) in g.edges() {
        match k {
            EdgeKind::Clique => writeln!(out, "  {u} -- {v} [kind=clique, style=solid];")?,
            EdgeKind::Tree => writeln!(out, "  {u} -- {v} [kind=tree, style=dashed];")?,
            EdgeKind::Rib => {
                let rank = g.rib_rank(u, v);
                let rank_attr = rank.map_or_else(String::new, |r| format!(", rank={r}"));
                writeln!(
                    out,
                    "  {u} -- {v} [kind=rib{rank_attr}, color={}];",
                    rank_color(rank)
                )?
            }
        }
    }
    writeln!(out, "}}")?;
    out.flush()
}

/// Parses a JSON export back into a graph, checking that the vertex table
/// agrees with the blow-up numbering.
pub fn read_json<R: Read>(input: R) -> Result<LabeledGraph, CliError> {
    let doc: GraphDoc = serde_json::from_reader(input)?;
    let tree = Tree::new(doc.tree_depth)?;
    for vd in &doc.vertices {
        let v = vertex_of_id(vd.id);
        let role: Role = vd.role.parse()?;
        if v.node != TreeNode(vd.node) || v.role != role || v.depth() != vd.depth {
            return Err(CliError::Format(format!(
                "vertex record {} disagrees with the id scheme",
                vd.id
            )));
        }
    }
    let edges = doc
        .edges
        .iter()
        .map(|e| Ok((e.u, e.v, e.kind.parse::<EdgeKind>()?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let g = LabeledGraph::from_labeled_edges(doc.ell, tree, edges)?;
    if g.num_vertices() != doc.num_vertices || doc.vertices.len() != doc.num_vertices {
        return Err(CliError::Format(format!(
            "num_vertices {} does not match a depth-{} blow-up",
            doc.num_vertices, doc.tree_depth
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ggadget_core::{blow_up, build_g};

    fn render(g: &LabeledGraph, f: Format) -> String {
        let mut buf = Vec::new();
        write_graph(g, f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn edgelist_lines() {
        let text = render(&build_g(1).unwrap(), Format::Edgelist);
        assert_eq!(text.lines().count(), 73);
        assert_eq!(text.lines().next(), Some("0 1 clique"));
    }

    #[test]
    fn json_round_trip() {
        for g in [build_g(1).unwrap(), blow_up(Tree::new(3).unwrap()).unwrap()] {
            let text = render(&g, Format::Json);
            let value: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert_eq!(value["num_vertices"], 45);
            let back = read_json(text.as_bytes()).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn json_rejects_inconsistent_records() {
        let text = render(&build_g(1).unwrap(), Format::Json).replacen(
            "\"role\": \"K0\"",
            "\"role\": \"K2\"",
            1,
        );
        assert!(matches!(
            read_json(text.as_bytes()),
            Err(CliError::Format(_))
        ));
        let text = render(&build_g(1).unwrap(), Format::Json).replacen(
            "\"kind\": \"clique\"",
            "\"kind\": \"spoke\"",
            1,
        );
        assert!(read_json(text.as_bytes()).is_err());
    }

    #[test]
    fn dot_styles() {
        let text = render(&build_g(2).unwrap(), Format::Dot);
        assert!(text.starts_with("graph G_2 {"));
        assert!(text.contains("[kind=tree, style=dashed]"));
        assert!(text.contains("rank=2, color=blue"));
        assert!(text.contains("rank=1, color=green"));
        assert_eq!(text.matches("kind=rib").count(), 800);
    }
}
