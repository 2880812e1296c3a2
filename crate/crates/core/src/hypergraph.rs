//! k-uniform hypergraphs on dense vertex ids and the tuple-colouring trait
//! shared by every search in the crate.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::combin::{binom, BinomTable, BitSet, Combinations};
use crate::error::{Error, Result};

/// Anything that assigns a colour to every strictly increasing
/// `uniformity()`-tuple of `0..vertex_count()`.
///
/// Implementations must be pure: the same tuple always gets the same colour.
pub trait TupleColouring {
    fn uniformity(&self) -> usize;
    fn vertex_count(&self) -> u32;
    fn colour_count(&self) -> u8;
    /// Colour of a strictly increasing tuple of length `uniformity()`.
    fn colour(&self, tuple: &[u32]) -> u8;

    /// Colour of a tuple given in any order.
    fn colour_unsorted(&self, tuple: &[u32]) -> u8 {
        let mut buf = [0u32; MAX_UNIFORMITY];
        let t = &mut buf[..tuple.len()];
        t.copy_from_slice(tuple);
        t.sort_unstable();
        self.colour(t)
    }
}

impl<T: TupleColouring + ?Sized> TupleColouring for &T {
    fn uniformity(&self) -> usize {
        (**self).uniformity()
    }
    fn vertex_count(&self) -> u32 {
        (**self).vertex_count()
    }
    fn colour_count(&self) -> u8 {
        (**self).colour_count()
    }
    fn colour(&self, tuple: &[u32]) -> u8 {
        (**self).colour(tuple)
    }
}

/// Largest supported uniformity.
pub const MAX_UNIFORMITY: usize = 16;

/// Above this many k-subsets, membership falls back to an ordered set.
const DENSE_MEMBERSHIP_CAP: u64 = 1 << 28;

#[derive(Clone, Debug)]
enum Membership {
    Dense(BitSet),
    Sparse(BTreeSet<u64>),
}

/// A k-uniform hypergraph on vertices `0..n`.
///
/// Edges are strictly increasing k-tuples kept in lexicographic order.
/// Membership is a bitset over colex ranks when `C(n, k)` is moderate.
#[derive(Clone, Debug)]
pub struct UniformHypergraph {
    k: usize,
    n: u32,
    edges: Vec<u32>,
    members: Membership,
    table: BinomTable,
}

impl PartialEq for UniformHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.n == other.n && self.edges == other.edges
    }
}
impl Eq for UniformHypergraph {}

pub(crate) fn check_tuple(tuple: &[u32], k: usize, n: u32) -> Result<()> {
    if tuple.len() != k {
        return Err(Error::BadTuple(format!("{tuple:?} has length {}, want {k}", tuple.len())));
    }
    for w in tuple.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::BadTuple(format!("{tuple:?}")));
        }
    }
    if let Some(&last) = tuple.last() {
        if last >= n {
            return Err(Error::VertexOutOfRange {
                vertex: last as u64,
                n: n as u64,
            });
        }
    }
    Ok(())
}

impl UniformHypergraph {
    /// Builds a hypergraph from strictly increasing tuples. Duplicates are
    /// collapsed.
    pub fn new<I, E>(k: usize, n: u32, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        if k < 2 || k > MAX_UNIFORMITY || (n as u64) < k as u64 {
            return Err(Error::Uniformity { k, n: n as u64 });
        }
        let mut list: Vec<Vec<u32>> = Vec::new();
        for e in edges {
            let e = e.as_ref();
            check_tuple(e, k, n)?;
            list.push(e.to_vec());
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(k, n, list.into_iter().flatten().collect()))
    }

    fn from_sorted(k: usize, n: u32, edges: Vec<u32>) -> Self {
        let table = BinomTable::new(n as usize, k);
        let total = binom(n as u64, k as u64);
        let members = if total <= DENSE_MEMBERSHIP_CAP {
            let mut b = BitSet::new(total as usize);
            for e in edges.chunks_exact(k) {
                b.insert(table.colex_rank(e) as usize);
            }
            Membership::Dense(b)
        } else {
            Membership::Sparse(edges.chunks_exact(k).map(|e| table.colex_rank(e)).collect())
        };
        UniformHypergraph {
            k,
            n,
            edges,
            members,
            table,
        }
    }

    /// Every k-subset satisfying `keep`, enumerated in lexicographic order.
    pub fn from_predicate(k: usize, n: u32, mut keep: impl FnMut(&[u32]) -> bool) -> Result<Self> {
        if k < 2 || k > MAX_UNIFORMITY || (n as u64) < k as u64 {
            return Err(Error::Uniformity { k, n: n as u64 });
        }
        let mut edges = Vec::new();
        let mut it = Combinations::new(n, k);
        while let Some(c) = it.next_ref() {
            if keep(c) {
                edges.extend_from_slice(c);
            }
        }
        Ok(Self::from_sorted(k, n, edges))
    }

    pub fn empty(k: usize, n: u32) -> Result<Self> {
        Self::new(k, n, core::iter::empty::<[u32; 0]>())
    }

    pub fn complete(k: usize, n: u32) -> Result<Self> {
        Self::from_predicate(k, n, |_| true)
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len() / self.k
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.edges.chunks_exact(self.k)
    }

    /// Membership of a strictly increasing k-tuple of in-range ids.
    #[inline]
    pub fn contains(&self, tuple: &[u32]) -> bool {
        debug_assert!(check_tuple(tuple, self.k, self.n).is_ok());
        let r = self.table.colex_rank(tuple);
        match &self.members {
            Membership::Dense(b) => b.contains(r as usize),
            Membership::Sparse(s) => s.contains(&r),
        }
    }

    /// Membership of a k-set given in any order.
    pub fn contains_unsorted(&self, tuple: &[u32]) -> bool {
        let mut buf = [0u32; MAX_UNIFORMITY];
        let t = &mut buf[..tuple.len()];
        t.copy_from_slice(tuple);
        t.sort_unstable();
        self.contains(t)
    }

    /// Same vertices, edge set replaced by all k-subsets not in `self`.
    pub fn complement(&self) -> Self {
        Self::from_predicate(self.k, self.n, |c| !self.contains(c))
            .expect("uniformity already validated")
    }

    /// Sub-hypergraph induced on `subset`, relabelled by rank in `subset`.
    pub fn induced(&self, subset: &[u32]) -> Result<Self> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        for w in s.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0] as u64));
            }
        }
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v as u64,
                n: self.n as u64,
            });
        }
        let m = s.len() as u32;
        if (m as usize) < self.k {
            return Err(Error::Uniformity {
                k: self.k,
                n: m as u64,
            });
        }
        let mut img = [0u32; MAX_UNIFORMITY];
        Self::from_predicate(self.k, m, |c| {
            for (slot, &i) in img.iter_mut().zip(c) {
                *slot = s[i as usize];
            }
            self.contains(&img[..c.len()])
        })
    }
}

/// Edges get colour 0, non-edges colour 1.
impl TupleColouring for UniformHypergraph {
    fn uniformity(&self) -> usize {
        self.k
    }
    fn vertex_count(&self) -> u32 {
        self.n
    }
    fn colour_count(&self) -> u8 {
        2
    }
    fn colour(&self, tuple: &[u32]) -> u8 {
        if self.contains(tuple) {
            0
        } else {
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn edges_of(h: &UniformHypergraph) -> Vec<Vec<u32>> {
        h.edges().map(|e| e.to_vec()).collect()
    }

    #[test]
    fn complement_examples() {
        let h = UniformHypergraph::empty(3, 3).unwrap();
        assert_eq!(edges_of(&h.complement()), vec![vec![0, 1, 2]]);
        let h = UniformHypergraph::complete(3, 4).unwrap();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.complement().edge_count(), 0);
        let h = UniformHypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert_eq!(
            edges_of(&h.complement()),
            vec![vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn induced_examples() {
        let h = UniformHypergraph::complete(3, 5).unwrap();
        let s = h.induced(&[0, 2, 4]).unwrap();
        assert_eq!(s, UniformHypergraph::complete(3, 3).unwrap());
        let h = UniformHypergraph::new(3, 4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        assert_eq!(edges_of(&h.induced(&[1, 2, 3]).unwrap()), vec![vec![0, 1, 2]]);
        let h = UniformHypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert_eq!(h.induced(&[0, 1, 3]).unwrap().edge_count(), 0);
        assert!(matches!(
            h.induced(&[0, 1, 7]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_bad_tuples() {
        assert!(UniformHypergraph::new(3, 4, [[0, 2, 1]]).is_err());
        assert!(UniformHypergraph::new(3, 4, [[0, 1, 4]]).is_err());
        assert!(UniformHypergraph::new(3, 2, core::iter::empty::<[u32; 3]>()).is_err());
        let h = UniformHypergraph::new(3, 4, [[0, 1, 2], [0, 1, 2]]).unwrap();
        assert_eq!(h.edge_count(), 1);
    }

    fn arb_hypergraph() -> impl Strategy<Value = UniformHypergraph> {
        (3u32..9, any::<u64>()).prop_map(|(n, mask)| {
            let mut i = 0;
            UniformHypergraph::from_predicate(3, n, |_| {
                i += 1;
                mask >> (i % 64) & 1 == 1
            })
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(h in arb_hypergraph()) {
            let c = h.complement();
            prop_assert_eq!(h.edge_count() + c.edge_count(),
                binom(h.vertex_count() as u64, 3) as usize);
            prop_assert_eq!(c.complement(), h);
        }

        #[test]
        fn induced_on_everything_is_identity(h in arb_hypergraph()) {
            let all: Vec<u32> = (0..h.vertex_count()).collect();
            prop_assert_eq!(h.induced(&all).unwrap(), h);
        }
    }
}
