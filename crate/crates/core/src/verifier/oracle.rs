use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;

pub const ORACLE_MAX_VERTICES: usize = 10;

/// Vertices whose colors are fixed before the search fans out.
const PREFIX_DEPTH: usize = 3;

/// Smallest palette admitting a proper coloring whose bicolored components
/// all have at most `m` edges.
pub fn brute_force_min_colors(g: &Graph, m: usize) -> Result<u32> {
    check_size(g)?;
    for s in 1.. {
        if exists_valid_coloring(g, m, s)?.is_some() {
            return Ok(s);
        }
    }
    unreachable!("n colors always suffice")
}

/// Some valid coloring from `[0, s)` if one exists, found by exhaustive
/// search. Colors are introduced in increasing order, and any partial
/// coloring that already contains a bicolored component with more than `m`
/// edges is abandoned (components only grow as vertices are added).
pub fn exists_valid_coloring(g: &Graph, m: usize, s: u32) -> Result<Option<Coloring>> {
    check_size(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Coloring::from_assignment(Vec::new())));
    }
    if s == 0 {
        return Ok(None);
    }
    let search = Search { g, m, s };
    let mut prefixes = Vec::new();
    search.prefixes(&mut vec![0; n], 0, 0, PREFIX_DEPTH.min(n), &mut prefixes);
    let found = par::map(&prefixes, |prefix| {
        let mut colors = vec![0; n];
        colors[..prefix.len()].copy_from_slice(prefix);
        let used = prefix.iter().max().map_or(0, |&c| c + 1);
        search.extend(&mut colors, prefix.len(), used).then_some(colors)
    });
    Ok(found
        .into_iter()
        .flatten()
        .next()
        .map(|colors| Coloring::new(s, colors).expect("search stays inside the palette")))
}

fn check_size(g: &Graph) -> Result<()> {
    if g.vertex_count() > ORACLE_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "oracle vertex count",
            limit: ORACLE_MAX_VERTICES,
            actual: g.vertex_count(),
        });
    }
    Ok(())
}

struct Search<'g> {
    g: &'g Graph,
    m: usize,
    s: u32,
}

impl Search<'_> {
    fn choices(&self, used: u32) -> std::ops::Range<u32> {
        0..(used + 1).min(self.s)
    }

    fn prefixes(&self, colors: &mut Vec<u32>, v: usize, used: u32, depth: usize, out: &mut Vec<Vec<u32>>) {
        if v == depth {
            out.push(colors[..depth].to_vec());
            return;
        }
        for c in self.choices(used) {
            colors[v] = c;
            if self.consistent(colors, v) {
                self.prefixes(colors, v + 1, used.max(c + 1), depth, out);
            }
        }
    }

    fn extend(&self, colors: &mut [u32], v: usize, used: u32) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in self.choices(used) {
            colors[v] = c;
            if self.consistent(colors, v) && self.extend(colors, v + 1, used.max(c + 1)) {
                return true;
            }
        }
        false
    }

    /// Checks the constraints touching `v` among vertices `0..=v`.
    fn consistent(&self, colors: &[u32], v: usize) -> bool {
        let c = colors[v];
        let earlier = |w: &&usize| **w < v;
        if self.g.neighbors(v).iter().filter(earlier).any(|&w| colors[w] == c) {
            return false;
        }
        let mut partners: Vec<u32> = self.g.neighbors(v).iter().filter(earlier).map(|&w| colors[w]).collect();
        partners.sort_unstable();
        partners.dedup();
        partners.into_iter().all(|b| self.component_edges(colors, v, c, b) <= self.m)
    }

    /// Edges in the `{a, b}` component of `v` among vertices `0..=v`.
    fn component_edges(&self, colors: &[u32], v: usize, a: u32, b: u32) -> usize {
        let inside = |w: usize| w <= v && (colors[w] == a || colors[w] == b);
        let mut seen = 1u64 << v;
        let mut stack = vec![v];
        let mut degree_sum = 0;
        while let Some(u) = stack.pop() {
            for &w in self.g.neighbors(u) {
                if inside(w) {
                    degree_sum += 1;
                    if seen >> w & 1 == 0 {
                        seen |= 1 << w;
                        stack.push(w);
                    }
                }
            }
        }
        degree_sum / 2
    }
}
