//! Embed a pattern, or turn the embedder's failure into a large
//! monochromatic tripartite subgraph.

use alloc::boxed::Box;
use alloc::vec::Vec;

use super::embed::{embed, is_induced_copy, EmbedOptions, EmbedOutcome, EmbedReport};
use super::{lemma_params, TriDensityWitness};
use crate::bipartite::{transversals_all, TripartiteKind, TripartiteWitness};
use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::extraction::{find_ksss, KsssOverrides, KsssReport, StageFailure};
use crate::hypergraph::{TupleColouring, UniformHypergraph};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomySettings {
    pub rho: Rational,
    /// Triangle density handed to the extraction; defaults to the lemma's
    /// `ε = (2t)^{-10} ρ^{3t²}`.
    pub eps: Option<Rational>,
    /// Fraction of triangles the extraction may miss; defaults to `ρ`,
    /// capped at `1/8`.
    pub eta: Option<Rational>,
    pub s: usize,
    pub overrides: KsssOverrides,
    pub embed: EmbedOptions,
}

impl DichotomySettings {
    pub fn new(rho: Rational, s: usize) -> Self {
        DichotomySettings {
            rho,
            eps: None,
            eta: None,
            s,
            overrides: KsssOverrides::default(),
            embed: EmbedOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DichotomyOutcome {
    /// `images[v]` hosts pattern vertex `v`; colours agree on every triple.
    InducedCopy(Vec<u32>),
    /// All transversal triples are edges (`Complete`) or non-edges (`Empty`).
    Tripartite(TripartiteWitness),
    /// Neither branch produced a witness.
    DoubleFailure {
        /// Pattern vertex the embedder could not place.
        vertex: usize,
        /// The extraction's stop, when it ran.
        extraction: Option<StageFailure>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct DichotomyReport {
    pub embed: EmbedReport,
    /// The embedder's certificate as a sparse link-graph system.
    pub tri_witness: Option<TriDensityWitness>,
    /// The triangles of that system carry the witness colour on less than
    /// a `ρ`-proportion.
    pub tri_sparse: bool,
    /// The colour handed to the extraction.
    pub dense_colour: Option<u8>,
    pub eps: Rational,
    pub eta: Rational,
    pub eta_capped: bool,
    pub ksss: Option<KsssReport>,
    pub outcome: DichotomyOutcome,
}

/// Runs the embedder on the 2-colouring `g` (colour 0 = edge). If it fails
/// with a sparse family, the family's link-graph system is sparse in one
/// colour, so the triangles of the other colour are searched for a
/// `K_{s,s,s}`. Every returned witness has been re-checked against `g`.
pub fn dichotomy(g: &EdgeColouring, h: &EdgeColouring, settings: &DichotomySettings) -> Result<DichotomyReport> {
    if g.colour_count() != 2 || h.colour_count() != 2 {
        return Err(Error::Param("the dichotomy needs 2-colourings".into()));
    }
    let t = h.vertex_count() as usize;
    let eps = match &settings.eps {
        Some(e) => e.clone(),
        None => lemma_params(t, &settings.rho)?.eps,
    };
    let eighth = rational::ratio(1, 8);
    let wanted = settings.eta.clone().unwrap_or_else(|| settings.rho.clone());
    let eta_capped = wanted > eighth;
    let eta = if eta_capped { eighth } else { wanted };

    let report = embed(h, g, &settings.rho, settings.embed)?;
    let mut out = DichotomyReport {
        embed: report,
        tri_witness: None,
        tri_sparse: false,
        dense_colour: None,
        eps,
        eta,
        eta_capped,
        ksss: None,
        outcome: DichotomyOutcome::DoubleFailure {
            vertex: 0,
            extraction: None,
        },
    };
    let cert = match &out.embed.outcome {
        EmbedOutcome::Embedded(f) => {
            if !is_induced_copy(h, g, f) {
                return Err(Error::Unverified("embedding disagrees with the pattern".into()));
            }
            out.outcome = DichotomyOutcome::InducedCopy(f.clone());
            return Ok(out);
        }
        EmbedOutcome::Failed(c) => Box::clone(c),
    };
    out.outcome = DichotomyOutcome::DoubleFailure {
        vertex: cert.vertex,
        extraction: None,
    };
    let Some(tri) = cert.tri_density_witness(h, g)? else {
        return Ok(out);
    };
    out.tri_sparse = tri.recount(g, &settings.rho).1;
    let dense = 1 - tri.colour;
    out.dense_colour = Some(dense);
    let mut edges: Vec<[u32; 3]> = tri
        .system
        .triangles()
        .filter(|x| g.colour_unsorted(x) == dense)
        .map(|mut x| {
            x.sort_unstable();
            x
        })
        .collect();
    edges.sort_unstable();
    let g3 = UniformHypergraph::new(3, g.vertex_count(), edges)?;
    let ks = find_ksss(&tri.system, &g3, &out.eps, &out.eta, settings.s, &settings.overrides)?;
    out.tri_witness = Some(tri);
    match &ks.outcome {
        Ok(w) => {
            let kind = if dense == 0 {
                TripartiteKind::Complete
            } else {
                TripartiteKind::Empty
            };
            let [a, b, c] = &w.parts;
            if !transversals_all(g, a, b, c, dense)? {
                return Err(Error::Unverified("tripartite witness has a wrong-coloured triple".into()));
            }
            out.outcome = DichotomyOutcome::Tripartite(TripartiteWitness {
                parts: w.parts.clone(),
                kind,
            });
        }
        Err(f) => {
            out.outcome = DichotomyOutcome::DoubleFailure {
                vertex: cert.vertex,
                extraction: Some(f.clone()),
            };
        }
    }
    out.ksss = Some(ks);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::rational::ratio;

    fn overrides() -> KsssOverrides {
        KsssOverrides {
            s1: Some(4),
            s2: Some(3),
            t2: Some(2),
            t3: Some(2),
        }
    }

    #[test]
    fn complete_host_gives_induced_copy() {
        let g = EdgeColouring::constant(3, 12, 2, 0).unwrap();
        let h = EdgeColouring::constant(3, 4, 2, 0).unwrap();
        let r = dichotomy(&g, &h, &DichotomySettings::new(ratio(1, 3), 2)).unwrap();
        assert_eq!(r.outcome, DichotomyOutcome::InducedCopy(alloc::vec![0, 3, 6, 9]));
    }

    #[test]
    fn empty_host_gives_empty_tripartite() {
        let g = EdgeColouring::constant(3, 30, 2, 1).unwrap();
        let h = EdgeColouring::constant(3, 3, 2, 0).unwrap();
        let mut st = DichotomySettings::new(ratio(1, 2), 2);
        st.overrides = overrides();
        let r = dichotomy(&g, &h, &st).unwrap();
        assert!(r.eta_capped && r.tri_sparse);
        match r.outcome {
            DichotomyOutcome::Tripartite(w) => {
                assert_eq!(w.kind, TripartiteKind::Empty);
                assert!(w.size() >= 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lift_of_complete_graph_never_yields_tight_cycle() {
        let base = UniformHypergraph::complete(2, 24).unwrap();
        let lifted = constructions::lift(&base, 24).unwrap();
        let g = EdgeColouring::from_hypergraph(&lifted.lifted);
        let h = EdgeColouring::from_hypergraph(&constructions::tight_cycle5());
        let mut st = DichotomySettings::new(ratio(1, 3), 2);
        st.overrides = overrides();
        let r = dichotomy(&g, &h, &st).unwrap();
        assert!(!matches!(r.outcome, DichotomyOutcome::InducedCopy(_)));
        if let DichotomyOutcome::Tripartite(w) = &r.outcome {
            assert!(w.verify(&lifted.lifted).unwrap());
        }
    }
}
