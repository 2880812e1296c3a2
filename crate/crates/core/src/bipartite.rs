//! Bipartite graphs, three-part link-graph systems and tripartite witnesses.

use alloc::vec::Vec;

use crate::combin::BitSet;
use crate::error::{Error, Result};
use crate::hypergraph::{TupleColouring, UniformHypergraph};
use crate::rational::Rational;

fn sorted_distinct(v: &[u32]) -> Result<Vec<u32>> {
    let mut s = v.to_vec();
    s.sort_unstable();
    for w in s.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateVertex(w[0] as u64));
        }
    }
    Ok(s)
}

fn check_disjoint(a: &[u32], b: &[u32]) -> Result<()> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return Err(Error::Overlap(a[i])),
        }
    }
    Ok(())
}

/// A bipartite graph between two disjoint sorted vertex lists `A` and `B`.
///
/// Adjacency is stored per `A` vertex as a bitset over local `B` indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    a: Vec<u32>,
    b: Vec<u32>,
    adj: Vec<BitSet>,
}

impl BipartiteGraph {
    /// `edges` are `(a, b)` pairs of global ids. Duplicates collapse.
    pub fn new(a: &[u32], b: &[u32], edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let a = sorted_distinct(a)?;
        let b = sorted_distinct(b)?;
        check_disjoint(&a, &b)?;
        let mut adj = alloc::vec![BitSet::new(b.len()); a.len()];
        for (x, y) in edges {
            let i = a.binary_search(&x).map_err(|_| Error::VertexOutOfRange {
                vertex: x as u64,
                n: a.len() as u64,
            })?;
            let j = b.binary_search(&y).map_err(|_| Error::VertexOutOfRange {
                vertex: y as u64,
                n: b.len() as u64,
            })?;
            adj[i].insert(j);
        }
        Ok(BipartiteGraph { a, b, adj })
    }

    /// Builds from local adjacency; `keep(i, j)` decides the pair
    /// `(a[i], b[j])`.
    pub fn from_fn(a: &[u32], b: &[u32], mut keep: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let a = sorted_distinct(a)?;
        let b = sorted_distinct(b)?;
        check_disjoint(&a, &b)?;
        let adj = (0..a.len())
            .map(|i| {
                let mut row = BitSet::new(b.len());
                for j in 0..b.len() {
                    if keep(i, j) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        Ok(BipartiteGraph { a, b, adj })
    }

    /// Parts `0..a_len` and `a_len..a_len + b_len`.
    pub fn with_ranges(a_len: u32, b_len: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let a: Vec<u32> = (0..a_len).collect();
        let b: Vec<u32> = (a_len..a_len + b_len).collect();
        Self::new(&a, &b, edges)
    }

    pub fn complete(a: &[u32], b: &[u32]) -> Result<Self> {
        Self::from_fn(a, b, |_, _| true)
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    /// Neighbourhood of the `i`-th `A` vertex over local `B` indices.
    pub fn row(&self, i: usize) -> &BitSet {
        &self.adj[i]
    }

    #[inline]
    pub fn has_local(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn a_index(&self, v: u32) -> Option<usize> {
        self.a.binary_search(&v).ok()
    }

    pub fn b_index(&self, v: u32) -> Option<usize> {
        self.b.binary_search(&v).ok()
    }

    pub fn has_edge(&self, x: u32, y: u32) -> bool {
        match (self.a_index(x), self.b_index(y)) {
            (Some(i), Some(j)) => self.adj[i].contains(j),
            _ => false,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum()
    }

    /// Edges as global `(a, b)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(move |(i, row)| row.iter().map(move |j| (self.a[i], self.b[j])))
    }

    /// Same edges with the parts swapped.
    pub fn transpose(&self) -> Self {
        let mut adj = alloc::vec![BitSet::new(self.a.len()); self.b.len()];
        for (i, row) in self.adj.iter().enumerate() {
            for j in row.iter() {
                adj[j].insert(i);
            }
        }
        BipartiteGraph {
            a: self.b.clone(),
            b: self.a.clone(),
            adj,
        }
    }

    /// Subgraph between `X ⊆ A` and `Y ⊆ B` (global ids).
    pub fn restrict(&self, x: &[u32], y: &[u32]) -> Result<Self> {
        let xs: Vec<usize> = x
            .iter()
            .map(|&v| {
                self.a_index(v).ok_or(Error::VertexOutOfRange {
                    vertex: v as u64,
                    n: self.a.len() as u64,
                })
            })
            .collect::<Result<_>>()?;
        let ys = self.local_b(y)?;
        let mut sx: Vec<(u32, usize)> = x.iter().copied().zip(xs).collect();
        let mut sy: Vec<(u32, usize)> = y.iter().copied().zip(ys).collect();
        sx.sort_unstable();
        sy.sort_unstable();
        let a: Vec<u32> = sx.iter().map(|p| p.0).collect();
        let b: Vec<u32> = sy.iter().map(|p| p.0).collect();
        Self::from_fn(&a, &b, |i, j| self.adj[sx[i].1].contains(sy[j].1))
    }

    /// Number of edges between `X ⊆ A` and `Y ⊆ B` (global ids).
    pub fn edges_between(&self, x: &[u32], y: &[u32]) -> Result<u64> {
        let ys = self.local_b(y)?;
        let mut count = 0u64;
        for &v in x {
            let i = self.a_index(v).ok_or(Error::VertexOutOfRange {
                vertex: v as u64,
                n: self.a.len() as u64,
            })?;
            count += ys.iter().filter(|&&j| self.adj[i].contains(j)).count() as u64;
        }
        Ok(count)
    }

    /// Exact `e(X, Y) / (|X| |Y|)`.
    pub fn density(&self, x: &[u32], y: &[u32]) -> Result<Rational> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::EmptySet);
        }
        let e = self.edges_between(x, y)?;
        Ok(crate::rational::ratio(e as i64, (x.len() * y.len()) as i64))
    }

    fn local_b(&self, y: &[u32]) -> Result<Vec<usize>> {
        y.iter()
            .map(|&v| {
                self.b_index(v).ok_or(Error::VertexOutOfRange {
                    vertex: v as u64,
                    n: self.b.len() as u64,
                })
            })
            .collect()
    }
}

/// Three disjoint parts with link graphs `G12 (V1-V2)`, `G23 (V2-V3)`,
/// `G31 (V3-V1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteSystem {
    g12: BipartiteGraph,
    g23: BipartiteGraph,
    g31: BipartiteGraph,
    /// `G31` transposed: rows over V1, bits over V3.
    g13: BipartiteGraph,
}

impl TripartiteSystem {
    pub fn new(g12: BipartiteGraph, g23: BipartiteGraph, g31: BipartiteGraph) -> Result<Self> {
        if g12.b() != g23.a() || g23.b() != g31.a() || g31.b() != g12.a() {
            return Err(Error::Param("link graph parts do not match V1, V2, V3".into()));
        }
        check_disjoint(g12.a(), g12.b())?;
        check_disjoint(g23.a(), g23.b())?;
        check_disjoint(g31.a(), g31.b())?;
        let g13 = g31.transpose();
        Ok(TripartiteSystem { g12, g23, g31, g13 })
    }

    /// All three link graphs complete.
    pub fn complete(v1: &[u32], v2: &[u32], v3: &[u32]) -> Result<Self> {
        Self::new(
            BipartiteGraph::complete(v1, v2)?,
            BipartiteGraph::complete(v2, v3)?,
            BipartiteGraph::complete(v3, v1)?,
        )
    }

    /// The system on `(V2, V3, V1)`: link graphs `(G23, G31, G12)`.
    pub fn rotate(&self) -> Self {
        Self::new(self.g23.clone(), self.g31.clone(), self.g12.clone()).expect("already validated")
    }

    /// Sub-system on `X1 ⊆ V1`, `X2 ⊆ V2`, `X3 ⊆ V3`.
    pub fn restrict(&self, x1: &[u32], x2: &[u32], x3: &[u32]) -> Result<Self> {
        Self::new(
            self.g12.restrict(x1, x2)?,
            self.g23.restrict(x2, x3)?,
            self.g31.restrict(x3, x1)?,
        )
    }

    pub fn part(&self, i: usize) -> &[u32] {
        match i {
            0 => self.g12.a(),
            1 => self.g23.a(),
            _ => self.g31.a(),
        }
    }

    pub fn parts(&self) -> [&[u32]; 3] {
        [self.part(0), self.part(1), self.part(2)]
    }

    pub fn g12(&self) -> &BipartiteGraph {
        &self.g12
    }
    pub fn g23(&self) -> &BipartiteGraph {
        &self.g23
    }
    pub fn g31(&self) -> &BipartiteGraph {
        &self.g31
    }
    /// `G31` viewed from V1.
    pub fn g13(&self) -> &BipartiteGraph {
        &self.g13
    }

    /// Largest part size.
    pub fn max_part(&self) -> usize {
        self.parts().iter().map(|p| p.len()).max().unwrap_or(0)
    }

    /// Triangles `(v1, v2, v3)` in lexicographic order, as local indices.
    pub fn triangles_local(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.part(0).len()).flat_map(move |i| {
            self.g12.row(i).iter().flat_map(move |j| {
                let r23 = self.g23.row(j);
                let r13 = self.g13.row(i);
                r23.iter().filter(move |&k| r13.contains(k)).map(move |k| (i, j, k))
            })
        })
    }

    /// Triangles as global ids, lexicographic in `(v1, v2, v3)`.
    pub fn triangles(&self) -> impl Iterator<Item = [u32; 3]> + '_ {
        let [p1, p2, p3] = self.parts();
        self.triangles_local().map(move |(i, j, k)| [p1[i], p2[j], p3[k]])
    }

    pub fn triangle_count(&self) -> u64 {
        (0..self.part(0).len())
            .map(|i| {
                let r13 = self.g13.row(i);
                self.g12
                    .row(i)
                    .iter()
                    .map(|j| self.g23.row(j).intersection_count(r13) as u64)
                    .sum::<u64>()
            })
            .sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripartiteKind {
    Complete,
    Empty,
}

/// Disjoint `S1, S2, S3` whose transversal triples are all edges
/// (`Complete`) or all non-edges (`Empty`) of a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteWitness {
    pub parts: [Vec<u32>; 3],
    pub kind: TripartiteKind,
}

impl TripartiteWitness {
    /// Smallest part size.
    pub fn size(&self) -> usize {
        self.parts.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Re-checks the witness against `host`.
    pub fn verify(&self, host: &UniformHypergraph) -> Result<bool> {
        let [a, b, c] = &self.parts;
        match self.kind {
            TripartiteKind::Complete => is_complete_tripartite(host, a, b, c),
            TripartiteKind::Empty => is_empty_tripartite(host, a, b, c),
        }
    }
}

/// True iff every transversal triple of `s1 × s2 × s3` has colour `colour`.
pub fn transversals_all<C: TupleColouring + ?Sized>(
    host: &C,
    s1: &[u32],
    s2: &[u32],
    s3: &[u32],
    colour: u8,
) -> Result<bool> {
    if host.uniformity() != 3 {
        return Err(Error::Uniformity {
            k: host.uniformity(),
            n: host.vertex_count() as u64,
        });
    }
    let (a, b, c) = (sorted_distinct(s1)?, sorted_distinct(s2)?, sorted_distinct(s3)?);
    check_disjoint(&a, &b)?;
    check_disjoint(&b, &c)?;
    check_disjoint(&a, &c)?;
    let n = host.vertex_count();
    for &v in a.iter().chain(&b).chain(&c) {
        if v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v as u64,
                n: n as u64,
            });
        }
    }
    for &x in &a {
        for &y in &b {
            for &z in &c {
                if host.colour_unsorted(&[x, y, z]) != colour {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn is_complete_tripartite(g: &UniformHypergraph, s1: &[u32], s2: &[u32], s3: &[u32]) -> Result<bool> {
    transversals_all(g, s1, s2, s3, 0)
}

pub fn is_empty_tripartite(g: &UniformHypergraph, s1: &[u32], s2: &[u32], s3: &[u32]) -> Result<bool> {
    transversals_all(g, s1, s2, s3, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn density_examples() {
        let k23 = BipartiteGraph::complete(&[0, 1], &[2, 3, 4]).unwrap();
        assert_eq!(k23.density(&[0, 1], &[2, 3, 4]).unwrap(), ratio(1, 1));
        let e = BipartiteGraph::with_ranges(2, 3, []).unwrap();
        assert_eq!(e.density(&[0, 1], &[2, 3, 4]).unwrap(), ratio(0, 1));
        let g = BipartiteGraph::with_ranges(2, 2, [(0, 2)]).unwrap();
        assert_eq!(g.density(&[0, 1], &[2, 3]).unwrap(), ratio(1, 4));
        assert_eq!(g.density(&[], &[2]), Err(Error::EmptySet));
    }

    #[test]
    fn rejects_overlapping_parts() {
        assert_eq!(BipartiteGraph::new(&[0, 1], &[1, 2], []), Err(Error::Overlap(1)));
        assert!(BipartiteGraph::new(&[0], &[1], [(1, 0)]).is_err());
    }

    #[test]
    fn triangle_examples() {
        let t = TripartiteSystem::complete(&[0, 1], &[2, 3], &[4, 5]).unwrap();
        assert_eq!(t.triangle_count(), 8);
        assert_eq!(t.triangles().count(), 8);
        let first: Vec<_> = t.triangles().take(2).collect();
        assert_eq!(first, vec![[0, 2, 4], [0, 2, 5]]);

        let g12 = BipartiteGraph::new(&[0, 1], &[2, 3], []).unwrap();
        let g23 = BipartiteGraph::complete(&[2, 3], &[4, 5]).unwrap();
        let g31 = BipartiteGraph::complete(&[4, 5], &[0, 1]).unwrap();
        let t = TripartiteSystem::new(g12, g23.clone(), g31.clone()).unwrap();
        assert_eq!(t.triangle_count(), 0);

        let g12 = BipartiteGraph::new(&[0, 1], &[2, 3], [(0, 2)]).unwrap();
        let t = TripartiteSystem::new(g12, g23, g31).unwrap();
        assert_eq!(t.triangles().collect::<Vec<_>>(), vec![[0, 2, 4], [0, 2, 5]]);
    }

    #[test]
    fn tripartite_examples() {
        let full = UniformHypergraph::complete(3, 6).unwrap();
        assert!(is_complete_tripartite(&full, &[0, 1], &[2, 3], &[4, 5]).unwrap());
        let empty = UniformHypergraph::empty(3, 6).unwrap();
        assert!(is_empty_tripartite(&empty, &[0], &[2, 3], &[4]).unwrap());
        let one = UniformHypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert!(!is_complete_tripartite(&one, &[0], &[1], &[2, 3]).unwrap());
        assert!(!is_empty_tripartite(&one, &[0], &[1], &[2, 3]).unwrap());
        assert_eq!(
            is_complete_tripartite(&one, &[0], &[0], &[2]),
            Err(Error::Overlap(0))
        );
    }

    proptest! {
        #[test]
        fn triangle_count_symmetric_under_rotation(seed in any::<u64>(), a in 1u32..5, b in 1u32..5, c in 1u32..5) {
            let v1: Vec<u32> = (0..a).collect();
            let v2: Vec<u32> = (a..a + b).collect();
            let v3: Vec<u32> = (a + b..a + b + c).collect();
            let bit = |x: u32, y: u32| (seed.rotate_left(x * 7 + y * 13) & 1) == 1;
            let g12 = BipartiteGraph::from_fn(&v1, &v2, |i, j| bit(v1[i], v2[j])).unwrap();
            let g23 = BipartiteGraph::from_fn(&v2, &v3, |i, j| bit(v2[i], v3[j])).unwrap();
            let g31 = BipartiteGraph::from_fn(&v3, &v1, |i, j| bit(v3[i], v1[j])).unwrap();
            let t = TripartiteSystem::new(g12.clone(), g23.clone(), g31.clone()).unwrap();
            let r = TripartiteSystem::new(g23, g31, g12).unwrap();
            prop_assert_eq!(t.triangle_count(), r.triangle_count());
            prop_assert_eq!(t.triangles().count() as u64, t.triangle_count());
        }
    }
}
