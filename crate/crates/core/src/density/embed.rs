//! Vertex-by-vertex embedding of a coloured pattern into a coloured host.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{bidense_floors, BiDensity, DensityMode, DensityParams, TriDensityWitness};
use crate::bipartite::{BipartiteGraph, TripartiteSystem};
use crate::colouring::EdgeColouring;
use crate::combin::{binom, BitSet, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::TupleColouring;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbedOptions {
    /// Check the colour-consistency invariant after every placement.
    pub assert_invariants: bool,
    /// Seed for sampled bi-density tests.
    pub seed: u64,
    pub samples: u32,
    /// Grow each sparse pair `(Y_j, Y_k)` while its density stays below
    /// the threshold.
    pub expand: bool,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        EmbedOptions {
            assert_invariants: true,
            seed: 0,
            samples: 64,
            expand: true,
        }
    }
}

/// Exact bi-density inside the embedder up to this many adjacency probes;
/// sampled above it, with "unknown" read as dense.
pub const EMBED_EXACT_CAP: u64 = 2_000_000;

/// Pattern vertices `0..placed` have images; the rest keep survivor sets
/// and pairwise link graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingState {
    pub t: usize,
    pub images: Vec<u32>,
    /// `survivors[j]` for every pattern vertex `j`; emptied once placed.
    pub survivors: Vec<Vec<u32>>,
    /// Link graphs `G_jk` (rows over `U_j`) for unplaced `j < k`.
    pub links: BTreeMap<(usize, usize), BipartiteGraph>,
}

impl EmbeddingState {
    /// Equipartition `U_j = [j·⌊n/t⌋, (j+1)·⌊n/t⌋)`, complete links.
    pub fn initial(t: usize, n: u32) -> Result<Self> {
        let block = n / t as u32;
        let survivors: Vec<Vec<u32>> = (0..t as u32).map(|j| (j * block..(j + 1) * block).collect()).collect();
        let mut links = BTreeMap::new();
        for j in 0..t {
            for k in j + 1..t {
                links.insert((j, k), BipartiteGraph::complete(&survivors[j], &survivors[k])?);
            }
        }
        Ok(EmbeddingState {
            t,
            images: Vec::new(),
            survivors,
            links,
        })
    }

    pub fn placed(&self) -> usize {
        self.images.len()
    }

    /// Neighbourhood of `w` in `G_{p,j}` for every `j > p`, indexed by `j`.
    fn neighbourhoods(&self, p: usize, w: u32) -> Vec<Vec<u32>> {
        let mut out = alloc::vec![Vec::new(); self.t];
        for (j, slot) in out.iter_mut().enumerate().skip(p + 1) {
            let g = &self.links[&(p, j)];
            let i = g.a_index(w).expect("w in U_p");
            *slot = g.row(i).iter().map(|b| g.b()[b]).collect();
        }
        out
    }

    /// The colour-consistency invariant: each survivor of `U_j` forms the
    /// pattern colour with every placed pair, and each link edge of `G_jk`
    /// forms it with every placed vertex.
    pub fn consistent<H, G>(&self, h: &H, g: &G) -> bool
    where
        H: TupleColouring + ?Sized,
        G: TupleColouring + ?Sized,
    {
        let p = self.placed();
        let f = &self.images;
        for j in p..self.t {
            for &y in &self.survivors[j] {
                for h2 in 1..p {
                    for h1 in 0..h2 {
                        if g.colour_unsorted(&[f[h1], f[h2], y]) != h.colour(&[h1 as u32, h2 as u32, j as u32]) {
                            return false;
                        }
                    }
                }
            }
        }
        for (&(j, k), link) in &self.links {
            for (x, y) in link.edges() {
                for (hv, &fv) in f.iter().enumerate() {
                    if g.colour_unsorted(&[fv, x, y]) != h.colour(&[hv as u32, j as u32, k as u32]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Sizes after one placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub vertex: usize,
    pub image: u32,
    /// `|W|`: vertices of `U_p` with large neighbourhoods in every link.
    pub candidates: usize,
    /// Candidates rejected before `image` was accepted.
    pub rejected: usize,
    /// Survivor sizes of the unplaced vertices after the placement.
    pub survivor_sizes: Vec<usize>,
    /// Every survivor set has at least `c_{p+1}·n` vertices.
    pub size_condition: bool,
}

/// A candidate `w` whose restricted link `H_jk(w)` is sparse between
/// `Y_j ⊆ U_j(w)` and `Y_k ⊆ U_k(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseCandidate {
    pub w: u32,
    pub y_j: Vec<u32>,
    pub y_k: Vec<u32>,
    /// Edges of `H_jk(w)` between `Y_j` and `Y_k`.
    pub edges: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureKind {
    /// No vertex of `U_p` has large enough neighbourhoods.
    NoCandidates,
    /// Every candidate fails some pair; `(j, k)` fails most often.
    NotDense {
        j: usize,
        k: usize,
        /// `W_jk`, in id order.
        family: Vec<SparseCandidate>,
        /// `|W_jk|` for every pair, in pair order.
        pair_counts: Vec<((usize, usize), usize)>,
    },
}

/// Why vertex `vertex` could not be placed, with the state before the
/// attempt so that every count can be recomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureCertificate {
    pub vertex: usize,
    pub rho: Rational,
    pub state: EmbeddingState,
    /// `W`, in id order.
    pub candidates: Vec<u32>,
    pub kind: FailureKind,
}

impl FailureCertificate {
    /// `|W_jk| · 2t² >= |W|` for the reported pair.
    pub fn meets_pigeonhole(&self) -> bool {
        match &self.kind {
            FailureKind::NotDense { family, .. } => family.len() * 2 * self.state.t * self.state.t >= self.candidates.len(),
            FailureKind::NoCandidates => false,
        }
    }

    /// The tripartite system on `W_jk`, `U_j`, `U_k` with links `w` to `Y_j(w)`,
    /// `G_jk` and `Y_k(w)` to `w`, counted in the pattern colour of
    /// `(vertex, j, k)`.
    pub fn tri_density_witness<H, G>(&self, h: &H, g: &G) -> Result<Option<TriDensityWitness>>
    where
        H: TupleColouring + ?Sized,
        G: TupleColouring + ?Sized,
    {
        let FailureKind::NotDense { j, k, family, .. } = &self.kind else {
            return Ok(None);
        };
        let (j, k) = (*j, *k);
        let v1: Vec<u32> = family.iter().map(|c| c.w).collect();
        let uj = &self.state.survivors[j];
        let uk = &self.state.survivors[k];
        let g12 = BipartiteGraph::new(&v1, uj, family.iter().flat_map(|c| c.y_j.iter().map(move |&y| (c.w, y))))?;
        let g31 = BipartiteGraph::new(uk, &v1, family.iter().flat_map(|c| c.y_k.iter().map(move |&y| (y, c.w))))?;
        let system = TripartiteSystem::new(g12, self.state.links[&(j, k)].clone(), g31)?;
        let colour = h.colour(&[self.vertex as u32, j as u32, k as u32]);
        let (triangles, coloured) = super::count_coloured(&system, g, colour);
        Ok(Some(TriDensityWitness {
            system,
            colour,
            triangles,
            coloured,
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedOutcome {
    /// `images[v]` is the host vertex of pattern vertex `v`.
    Embedded(Vec<u32>),
    Failed(Box<FailureCertificate>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbedReport {
    pub params: DensityParams,
    pub n: u32,
    pub steps: Vec<StepRecord>,
    pub outcome: EmbedOutcome,
}

fn mix(mut x: u64) -> u64 {
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn check_inputs(h: &EdgeColouring, g: &EdgeColouring) -> Result<()> {
    if h.uniformity() != 3 || g.uniformity() != 3 {
        return Err(Error::Param("pattern and host must be 3-uniform".into()));
    }
    if h.colour_count() != g.colour_count() {
        return Err(Error::Param(alloc::format!(
            "pattern has {} colours, host has {}",
            h.colour_count(),
            g.colour_count()
        )));
    }
    if h.vertex_count() < 3 {
        return Err(Error::Param("pattern needs at least 3 vertices".into()));
    }
    if g.vertex_count() < h.vertex_count() {
        return Err(Error::Param(alloc::format!(
            "host has {} vertices, fewer than the pattern's {}",
            g.vertex_count(),
            h.vertex_count()
        )));
    }
    Ok(())
}

/// Screens one step: `W`, then for each candidate in id order the sparse
/// pairs. Stops at the first candidate good for every pair unless `all`.
struct Screen {
    candidates: Vec<u32>,
    /// First good candidate and its neighbourhoods.
    good: Option<(u32, Vec<Vec<u32>>)>,
    rejected: usize,
    /// Sparse witnesses per pair.
    sparse: BTreeMap<(usize, usize), Vec<SparseCandidate>>,
}

struct Stepper<'a> {
    h: &'a EdgeColouring,
    g: &'a EdgeColouring,
    params: &'a DensityParams,
    opts: EmbedOptions,
}

impl Stepper<'_> {
    fn restricted(&self, state: &EmbeddingState, p: usize, w: u32, j: usize, k: usize, nb: &[Vec<u32>]) -> Result<BipartiteGraph> {
        let link = &state.links[&(j, k)];
        let want = self.h.colour(&[p as u32, j as u32, k as u32]);
        let (xs, ys) = (&nb[j], &nb[k]);
        let rows: Vec<usize> = xs.iter().map(|&x| link.a_index(x).expect("survivor")).collect();
        let cols: Vec<usize> = ys.iter().map(|&y| link.b_index(y).expect("survivor")).collect();
        BipartiteGraph::from_fn(xs, ys, |a, b| {
            link.has_local(rows[a], cols[b]) && self.g.colour_unsorted(&[w, xs[a], ys[b]]) == want
        })
    }

    /// Sparse pair of `H_jk(w)` at the next step's thresholds, if any.
    fn test_pair(&self, hw: &BipartiteGraph, p: usize, w: u32, j: usize, k: usize) -> Result<Option<SparseCandidate>> {
        let eps_sq = self.params.eps_sq(p + 1);
        let rho = self.params.rho_pow(p + 1);
        let (a, b) = (hw.a().len(), hw.b().len());
        let m1 = (rational::ceil_sqrt_mul(&eps_sq, a as u64) as usize).max(1);
        let m2 = (rational::ceil_sqrt_mul(&eps_sq, b as u64) as usize).max(1);
        let cost = binom(a as u64, m1 as u64)
            .saturating_mul((m1 * b) as u64)
            .min(binom(b as u64, m2 as u64).saturating_mul((m2 * a) as u64));
        let mode = if cost <= EMBED_EXACT_CAP {
            DensityMode::Exact
        } else {
            let key = mix(self.opts.seed ^ mix(((p as u64) << 48) ^ ((w as u64) << 16) ^ ((j as u64) << 8) ^ k as u64));
            DensityMode::Sampled {
                seed: key,
                samples: self.opts.samples,
            }
        };
        Ok(match bidense_floors(hw, m1, m2, &rho, mode)? {
            BiDensity::Sparse(wit) => {
                let (y_j, y_k, edges) = if self.opts.expand {
                    expand_sparse(hw, &wit.x, &wit.y, wit.edges, &rho)
                } else {
                    (wit.x, wit.y, wit.edges)
                };
                Some(SparseCandidate { w, y_j, y_k, edges })
            }
            BiDensity::Dense | BiDensity::Unknown => None,
        })
    }

    fn candidates(&self, state: &EmbeddingState, p: usize) -> Vec<u32> {
        let t = state.t;
        let rho_p = self.params.rho_pow(p);
        state.survivors[p]
            .iter()
            .copied()
            .filter(|&w| {
                (p + 1..t).all(|j| {
                    let g = &state.links[&(p, j)];
                    let deg = g.row(g.a_index(w).expect("w in U_p")).count() as u64;
                    rational::at_least(deg, &rho_p, state.survivors[j].len() as u64)
                })
            })
            .collect()
    }

    fn screen(&self, state: &EmbeddingState, all: bool) -> Result<Screen> {
        let p = state.placed();
        let t = state.t;
        let candidates = self.candidates(state, p);
        let pairs: Vec<(usize, usize)> = (p + 1..t).flat_map(|j| (j + 1..t).map(move |k| (j, k))).collect();
        let mut sparse: BTreeMap<(usize, usize), Vec<SparseCandidate>> = pairs.iter().map(|&q| (q, Vec::new())).collect();
        let mut good = None;
        let mut rejected = 0;
        for &w in &candidates {
            let nb = state.neighbourhoods(p, w);
            let mut ok = true;
            for &(j, k) in &pairs {
                let hw = self.restricted(state, p, w, j, k, &nb)?;
                if let Some(c) = self.test_pair(&hw, p, w, j, k)? {
                    sparse.get_mut(&(j, k)).expect("pair").push(c);
                    ok = false;
                }
            }
            if ok {
                if good.is_none() {
                    good = Some((w, nb));
                }
                if !all {
                    break;
                }
            } else if good.is_none() {
                rejected += 1;
            }
        }
        Ok(Screen {
            candidates,
            good,
            rejected,
            sparse,
        })
    }

    fn place(&self, state: &mut EmbeddingState, w: u32, nb: Vec<Vec<u32>>) -> Result<()> {
        let p = state.placed();
        let t = state.t;
        let mut links = BTreeMap::new();
        for j in p + 1..t {
            for k in j + 1..t {
                links.insert((j, k), self.restricted(state, p, w, j, k, &nb)?);
            }
        }
        state.images.push(w);
        state.survivors[p].clear();
        for (j, set) in nb.into_iter().enumerate().skip(p + 1) {
            state.survivors[j] = set;
        }
        state.links = links;
        Ok(())
    }
}

/// Grows `(X, Y)` one vertex at a time, always the vertex adding fewest
/// edges, while the density stays below `rho`.
fn expand_sparse(hw: &BipartiteGraph, x: &[u32], y: &[u32], edges: u64, rho: &Rational) -> (Vec<u32>, Vec<u32>, u64) {
    let (na, nb) = (hw.a().len(), hw.b().len());
    let mut in_x = BitSet::new(na);
    let mut in_y = BitSet::new(nb);
    for &v in x {
        in_x.insert(hw.a_index(v).expect("in A"));
    }
    for &v in y {
        in_y.insert(hw.b_index(v).expect("in B"));
    }
    let mut e = edges;
    let (mut sx, mut sy) = (x.len() as u64, y.len() as u64);
    loop {
        let mut grew = false;
        let best_a = (0..na)
            .filter(|&i| !in_x.contains(i))
            .map(|i| (hw.row(i).intersection_count(&in_y) as u64, i))
            .min();
        if let Some((d, i)) = best_a {
            if rational::fraction_below(e + d, (sx + 1) * sy, rho) {
                in_x.insert(i);
                e += d;
                sx += 1;
                grew = true;
            }
        }
        let mut col = alloc::vec![0u64; nb];
        for i in in_x.iter() {
            for b in hw.row(i).iter() {
                col[b] += 1;
            }
        }
        let best_b = (0..nb).filter(|&b| !in_y.contains(b)).map(|b| (col[b], b)).min();
        if let Some((d, b)) = best_b {
            if rational::fraction_below(e + d, sx * (sy + 1), rho) {
                in_y.insert(b);
                e += d;
                sy += 1;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    (
        in_x.iter().map(|i| hw.a()[i]).collect(),
        in_y.iter().map(|b| hw.b()[b]).collect(),
        e,
    )
}

/// Embeds the pattern `h` (`t` vertices) into `g`, one vertex at a time.
///
/// At each step the candidates are the vertices of `U_p` whose
/// neighbourhood in every link `G_{p,j}` has at least `ρ^p |U_j|`
/// vertices. A candidate `w` is good when, for every later pair `j < k`,
/// the link `G_jk` cut down to the neighbourhoods of `w` and to edges
/// `xy` with `χ_G(w, x, y) = χ_H(p, j, k)` is bi-`(ε_{p+1}, ρ^{p+1})`-dense.
/// The lowest good candidate is placed. A finished embedding is re-checked
/// on every triple.
pub fn embed(h: &EdgeColouring, g: &EdgeColouring, rho: &Rational, opts: EmbedOptions) -> Result<EmbedReport> {
    check_inputs(h, g)?;
    let t = h.vertex_count() as usize;
    let n = g.vertex_count();
    let params = DensityParams::new(t, rho.clone())?;
    let stepper = Stepper {
        h,
        g,
        params: &params,
        opts,
    };
    let mut state = EmbeddingState::initial(t, n)?;
    let mut steps = Vec::new();
    for p in 0..t {
        let screen = stepper.screen(&state, false)?;
        let Some((w, nb)) = screen.good else {
            let certificate = certificate_from(p, rho, state, screen)?;
            return Ok(EmbedReport {
                params,
                n,
                steps,
                outcome: EmbedOutcome::Failed(Box::new(certificate)),
            });
        };
        stepper.place(&mut state, w, nb)?;
        if opts.assert_invariants && !state.consistent(h, g) {
            return Err(Error::Unverified(alloc::format!("invariant broken after placing vertex {p}")));
        }
        let c_sq = params.c_sq(p + 1);
        let survivor_sizes: Vec<usize> = state.survivors[p + 1..].iter().map(Vec::len).collect();
        steps.push(StepRecord {
            vertex: p,
            image: w,
            candidates: screen.candidates.len(),
            rejected: screen.rejected,
            size_condition: survivor_sizes
                .iter()
                .all(|&s| rational::at_least_sqrt(s as u64, &c_sq, n as u64)),
            survivor_sizes,
        });
    }
    let images = state.images;
    if !is_induced_copy(h, g, &images) {
        return Err(Error::Unverified("embedding disagrees with the pattern".into()));
    }
    Ok(EmbedReport {
        params,
        n,
        steps,
        outcome: EmbedOutcome::Embedded(images),
    })
}

/// `χ_G(f(x), f(y), f(z)) = χ_H(x, y, z)` on every triple.
pub fn is_induced_copy<H, G>(h: &H, g: &G, images: &[u32]) -> bool
where
    H: TupleColouring + ?Sized,
    G: TupleColouring + ?Sized,
{
    let t = h.vertex_count();
    images.len() == t as usize
        && Combinations::new(t, 3).all(|tr| {
            let img = [images[tr[0] as usize], images[tr[1] as usize], images[tr[2] as usize]];
            img[0] != img[1] && img[1] != img[2] && img[0] != img[2] && g.colour_unsorted(&img) == h.colour(&tr)
        })
}

fn certificate_from(p: usize, rho: &Rational, state: EmbeddingState, screen: Screen) -> Result<FailureCertificate> {
    let kind = if screen.candidates.is_empty() {
        FailureKind::NoCandidates
    } else {
        let pair_counts: Vec<((usize, usize), usize)> = screen.sparse.iter().map(|(&q, v)| (q, v.len())).collect();
        let (&(j, k), _) = screen
            .sparse
            .iter()
            .max_by_key(|(&q, v)| (v.len(), core::cmp::Reverse(q)))
            .ok_or_else(|| Error::Unverified("no pair left but no good candidate".into()))?;
        let family = screen.sparse.get(&(j, k)).cloned().unwrap_or_default();
        FailureKind::NotDense {
            j,
            k,
            family,
            pair_counts,
        }
    };
    Ok(FailureCertificate {
        vertex: p,
        rho: rho.clone(),
        state,
        candidates: screen.candidates,
        kind,
    })
}

/// Recomputes a certificate from its stored state: the candidate set, the
/// sparse family of every pair, that no candidate is good, and every
/// recorded `(Y_j, Y_k)` (containment, size floors, recounted edges and
/// density).
pub fn verify_certificate(
    cert: &FailureCertificate,
    h: &EdgeColouring,
    g: &EdgeColouring,
    opts: EmbedOptions,
) -> Result<bool> {
    check_inputs(h, g)?;
    let t = h.vertex_count() as usize;
    let p = cert.vertex;
    if cert.state.t != t || cert.state.placed() != p || p >= t {
        return Ok(false);
    }
    if !cert.state.consistent(h, g) {
        return Ok(false);
    }
    let params = DensityParams::new(t, cert.rho.clone())?;
    let stepper = Stepper {
        h,
        g,
        params: &params,
        opts,
    };
    let screen = stepper.screen(&cert.state, true)?;
    if screen.candidates != cert.candidates || screen.good.is_some() {
        return Ok(false);
    }
    match &cert.kind {
        FailureKind::NoCandidates => Ok(cert.candidates.is_empty()),
        FailureKind::NotDense {
            j,
            k,
            family,
            pair_counts,
        } => {
            let counts: Vec<((usize, usize), usize)> = screen.sparse.iter().map(|(&q, v)| (q, v.len())).collect();
            if &counts != pair_counts {
                return Ok(false);
            }
            let best = counts.iter().map(|&(_, c)| c).max().unwrap_or(0);
            let recorded: Vec<u32> = family.iter().map(|c| c.w).collect();
            let recomputed: Vec<u32> = screen.sparse.get(&(*j, *k)).map(|v| v.iter().map(|c| c.w).collect()).unwrap_or_default();
            if family.len() != best || recorded != recomputed {
                return Ok(false);
            }
            let eps_sq = params.eps_sq(p + 1);
            let rho = params.rho_pow(p + 1);
            let want = h.colour(&[p as u32, *j as u32, *k as u32]);
            let link = &cert.state.links[&(*j, *k)];
            for c in family {
                let nb = cert.state.neighbourhoods(p, c.w);
                let (uj, uk) = (&nb[*j], &nb[*k]);
                let inside = |ys: &[u32], us: &[u32]| ys.iter().all(|y| us.binary_search(y).is_ok());
                if c.y_j.is_empty() || c.y_k.is_empty() || !inside(&c.y_j, uj) || !inside(&c.y_k, uk) {
                    return Ok(false);
                }
                if !rational::at_least_sqrt(c.y_j.len() as u64, &eps_sq, uj.len() as u64)
                    || !rational::at_least_sqrt(c.y_k.len() as u64, &eps_sq, uk.len() as u64)
                {
                    return Ok(false);
                }
                let mut e = 0u64;
                for &x in &c.y_j {
                    for &y in &c.y_k {
                        if link.has_edge(x, y) && g.colour_unsorted(&[c.w, x, y]) == want {
                            e += 1;
                        }
                    }
                }
                let size = (c.y_j.len() * c.y_k.len()) as u64;
                if e != c.edges || !rational::fraction_below(e, size, &rho) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use alloc::vec;

    fn single_triple(colour: u8) -> EdgeColouring {
        EdgeColouring::constant(3, 3, 2, colour).unwrap()
    }

    #[test]
    fn constant_host_embeds_at_part_starts() {
        let g = EdgeColouring::constant(3, 9, 2, 0).unwrap();
        let r = embed(&single_triple(0), &g, &ratio(1, 2), EmbedOptions::default()).unwrap();
        assert_eq!(r.outcome, EmbedOutcome::Embedded(vec![0, 3, 6]));
        let k4 = EdgeColouring::constant(3, 4, 2, 0).unwrap();
        let g = EdgeColouring::constant(3, 12, 2, 0).unwrap();
        let r = embed(&k4, &g, &ratio(1, 3), EmbedOptions::default()).unwrap();
        assert_eq!(r.outcome, EmbedOutcome::Embedded(vec![0, 3, 6, 9]));
    }

    #[test]
    fn missing_colour_fails_at_first_step() {
        let g = EdgeColouring::constant(3, 9, 2, 0).unwrap();
        let h = single_triple(1);
        let r = embed(&h, &g, &ratio(1, 2), EmbedOptions::default()).unwrap();
        let EmbedOutcome::Failed(cert) = r.outcome else {
            panic!("embedded into a host without the colour");
        };
        assert_eq!(cert.vertex, 0);
        assert_eq!(cert.candidates, vec![0, 1, 2]);
        let FailureKind::NotDense { j, k, family, .. } = &cert.kind else {
            panic!("{:?}", cert.kind);
        };
        assert_eq!((*j, *k, family.len()), (1, 2, 3));
        // expansion takes the whole neighbourhoods, since H_jk(w) is empty
        assert_eq!(family[0].y_j, vec![3, 4, 5]);
        assert_eq!(family[0].edges, 0);
        assert!(cert.meets_pigeonhole());
        assert!(verify_certificate(&cert, &h, &g, EmbedOptions::default()).unwrap());
        let w = cert.tri_density_witness(&h, &g).unwrap().unwrap();
        assert_eq!((w.triangles, w.coloured), (27, 0));
        assert!(w.verify(&g, &ratio(1, 27), &ratio(1, 2)));
    }

    #[test]
    fn blow_up_of_pattern_embeds() {
        // host colours a transversal triple by the pattern on its parts
        let h = EdgeColouring::from_fn(3, 4, 2, 100, |t| u8::from(t == [0, 2, 3])).unwrap();
        let hc = h.clone();
        let g = EdgeColouring::from_fn(3, 20, 2, 10_000, move |t| {
            let parts = [t[0] / 5, t[1] / 5, t[2] / 5];
            if parts[0] < parts[1] && parts[1] < parts[2] {
                hc.colour(&parts)
            } else {
                (t[0] + t[1] + t[2]) as u8 % 2
            }
        })
        .unwrap();
        let r = embed(&h, &g, &ratio(3, 10), EmbedOptions::default()).unwrap();
        let EmbedOutcome::Embedded(f) = r.outcome else {
            panic!("blow-up must embed");
        };
        assert!(is_induced_copy(&h, &g, &f));
        assert_eq!(r.steps.len(), 4);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let g = EdgeColouring::constant(3, 12, 2, 0).unwrap();
        let h = EdgeColouring::from_fn(3, 4, 2, 100, |t| u8::from(t == [1, 2, 3])).unwrap();
        let r = embed(&h, &g, &ratio(1, 2), EmbedOptions::default()).unwrap();
        let EmbedOutcome::Failed(mut cert) = r.outcome else {
            panic!("expected failure");
        };
        assert!(verify_certificate(&cert, &h, &g, EmbedOptions::default()).unwrap());
        if let FailureKind::NotDense { family, .. } = &mut cert.kind {
            family[0].edges += 1;
        }
        assert!(!verify_certificate(&cert, &h, &g, EmbedOptions::default()).unwrap());
    }
}
