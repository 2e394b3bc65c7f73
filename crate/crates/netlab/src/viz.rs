//! Concentric-shell drawing of a graph's k-core structure. Nodes sit on
//! rings by coreness (highest coreness innermost), dot size grows with the
//! logarithm of degree and fill color sweeps blue to red with coreness.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::scalar::{from_usize, Scalar};

const BASE_DOT_RADIUS: f64 = 0.004;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodePlacement<T> {
    pub id: NodeId,
    /// Ring radius in unit-circle coordinates: (c_max - c + 1) / c_max.
    pub radius: T,
    /// Position on the ring, radians in [0, 2π).
    pub angle: T,
    pub dot_radius: T,
    /// c / c_max.
    pub color_index: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShellLayout<T> {
    /// Ascending NodeId, parallel to the graph's node order.
    pub nodes: Vec<NodePlacement<T>>,
    pub c_max: u32,
}

/// Places every node on the ring of its coreness shell, equal angular
/// spacing in ascending NodeId order within each shell.
pub fn layout<T: Scalar>(g: &Graph, coreness: &[u32]) -> Result<ShellLayout<T>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if coreness.len() != g.node_count() {
        return Err(Error::InvalidParameter(format!(
            "coreness covers {} nodes, graph has {}",
            coreness.len(),
            g.node_count()
        )));
    }
    let c_max = *coreness.iter().max().unwrap();
    if c_max == 0 {
        return Err(Error::InvalidParameter(
            "all nodes have coreness 0".into(),
        ));
    }
    let mut shell_sizes = vec![0usize; c_max as usize + 1];
    for &c in coreness {
        shell_sizes[c as usize] += 1;
    }
    let mut shell_pos = vec![0usize; c_max as usize + 1];
    let c_max_t = T::from_u32(c_max).unwrap();
    let nodes = g
        .nodes()
        .iter()
        .zip(coreness)
        .map(|(&id, &c)| {
            let pos = shell_pos[c as usize];
            shell_pos[c as usize] += 1;
            let k = g.degree(id).unwrap();
            NodePlacement {
                id,
                radius: T::from_u32(c_max - c + 1).unwrap() / c_max_t,
                angle: T::from_f64(TAU).unwrap() * from_usize::<T>(pos)
                    / from_usize(shell_sizes[c as usize]),
                dot_radius: T::from_f64(BASE_DOT_RADIUS).unwrap()
                    * (T::one() + (T::one() + from_usize::<T>(k)).log2()),
                color_index: T::from_u32(c).unwrap() / c_max_t,
            }
        })
        .collect();
    Ok(ShellLayout { nodes, c_max })
}

#[derive(Debug, Clone, Copy)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 1000,
            height: 1000,
        }
    }
}

/// Standalone SVG document: translucent edges underneath one circle per
/// node. Output bytes depend only on the inputs.
pub fn render_svg<T: Scalar>(
    layout: &ShellLayout<T>,
    g: &Graph,
    opts: &RenderOptions,
) -> Result<String> {
    if layout.nodes.len() != g.node_count() {
        return Err(Error::InvalidParameter(format!(
            "layout places {} nodes, graph has {}",
            layout.nodes.len(),
            g.node_count()
        )));
    }
    let (w, h) = (opts.width as f64, opts.height as f64);
    let r_out = layout
        .nodes
        .iter()
        .map(|p| p.radius.to_f64().unwrap())
        .fold(0.0, f64::max);
    let scale = 0.45 * w.min(h) / r_out;
    let center = |p: &NodePlacement<T>| {
        let r = p.radius.to_f64().unwrap() * scale;
        let a = p.angle.to_f64().unwrap();
        (w / 2.0 + r * a.cos(), h / 2.0 + r * a.sin())
    };
    let index_of = |id: NodeId| g.nodes().binary_search(&id).unwrap();

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        opts.width, opts.height, opts.width, opts.height
    )
    .unwrap();
    for (u, v) in g.edges() {
        let (x1, y1) = center(&layout.nodes[index_of(u)]);
        let (x2, y2) = center(&layout.nodes[index_of(v)]);
        writeln!(
            out,
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#555555\" stroke-width=\"0.4\" stroke-opacity=\"0.25\"/>",
        )
        .unwrap();
    }
    for p in &layout.nodes {
        let (x, y) = center(p);
        let r = p.dot_radius.to_f64().unwrap() * scale;
        // color_index 0 is blue (hue 240), 1 is red (hue 0)
        let hue = 240.0 * (1.0 - p.color_index.to_f64().unwrap());
        writeln!(
            out,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{r:.2}\" fill=\"hsl({hue:.1}, 90%, 50%)\" stroke=\"#222222\" stroke-width=\"0.3\"/>",
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
