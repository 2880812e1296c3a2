//! Total colourings of the k-subsets of a vertex range.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::combin::{binom, BinomTable, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::{check_tuple, TupleColouring, UniformHypergraph, MAX_UNIFORMITY};

pub const RED: u8 = 0;
pub const BLUE: u8 = 1;

type Rule = Arc<dyn Fn(&[u32]) -> u8 + Send + Sync>;

#[derive(Clone)]
enum Backing {
    /// Colours indexed by colex rank.
    Explicit { table: BinomTable, colours: Vec<u8> },
    Implicit(Rule),
}

/// A total `ℓ`-colouring of all k-subsets of `0..n`.
#[derive(Clone)]
pub struct EdgeColouring {
    k: usize,
    n: u32,
    colour_count: u8,
    backing: Backing,
}

impl fmt::Debug for EdgeColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeColouring")
            .field("k", &self.k)
            .field("n", &self.n)
            .field("colour_count", &self.colour_count)
            .field("explicit", &self.is_explicit())
            .finish()
    }
}

fn validate(k: usize, n: u32, colour_count: u8) -> Result<()> {
    if k < 2 || k > MAX_UNIFORMITY || (n as u64) < k as u64 {
        return Err(Error::Uniformity { k, n: n as u64 });
    }
    if colour_count < 2 {
        return Err(Error::Param("colour count must be at least 2".into()));
    }
    Ok(())
}

impl EdgeColouring {
    /// Explicit table, `colours[i]` being the colour of the i-th k-subset
    /// in lexicographic order.
    pub fn from_lex_table(k: usize, n: u32, colour_count: u8, lex: &[u8]) -> Result<Self> {
        validate(k, n, colour_count)?;
        let total = binom(n as u64, k as u64);
        if lex.len() as u64 != total {
            return Err(Error::Param(alloc::format!(
                "expected {total} colours, got {}",
                lex.len()
            )));
        }
        let table = BinomTable::new(n as usize, k);
        let mut colours = alloc::vec![0u8; total as usize];
        for (c, &col) in Combinations::new(n, k).zip(lex) {
            if col >= colour_count {
                return Err(Error::ColourOutOfRange {
                    colour: col,
                    count: colour_count,
                });
            }
            colours[table.colex_rank(&c) as usize] = col;
        }
        Ok(EdgeColouring {
            k,
            n,
            colour_count,
            backing: Backing::Explicit { table, colours },
        })
    }

    /// Materializes `rule` into an explicit table, refusing when
    /// `C(n, k) > cap`.
    pub fn from_fn(
        k: usize,
        n: u32,
        colour_count: u8,
        cap: u64,
        mut rule: impl FnMut(&[u32]) -> u8,
    ) -> Result<Self> {
        validate(k, n, colour_count)?;
        let total = binom(n as u64, k as u64);
        if total > cap {
            return Err(Error::OverBudget { needed: total, cap });
        }
        let table = BinomTable::new(n as usize, k);
        let mut colours = alloc::vec![0u8; total as usize];
        let mut it = Combinations::new(n, k);
        while let Some(c) = it.next_ref() {
            let col = rule(c);
            if col >= colour_count {
                return Err(Error::ColourOutOfRange {
                    colour: col,
                    count: colour_count,
                });
            }
            colours[table.colex_rank(c) as usize] = col;
        }
        Ok(EdgeColouring {
            k,
            n,
            colour_count,
            backing: Backing::Explicit { table, colours },
        })
    }

    /// Lazily evaluated colouring. `rule` must be pure and return colours
    /// below `colour_count`.
    pub fn implicit(
        k: usize,
        n: u32,
        colour_count: u8,
        rule: impl Fn(&[u32]) -> u8 + Send + Sync + 'static,
    ) -> Result<Self> {
        validate(k, n, colour_count)?;
        Ok(EdgeColouring {
            k,
            n,
            colour_count,
            backing: Backing::Implicit(Arc::new(rule)),
        })
    }

    pub fn constant(k: usize, n: u32, colour_count: u8, colour: u8) -> Result<Self> {
        if colour >= colour_count {
            return Err(Error::ColourOutOfRange {
                colour,
                count: colour_count,
            });
        }
        Self::implicit(k, n, colour_count, move |_| colour)
    }

    /// Two-colouring with edges coloured 0 and non-edges coloured 1.
    pub fn from_hypergraph(h: &UniformHypergraph) -> Self {
        Self::from_fn(h.uniformity(), h.vertex_count(), 2, u64::MAX, |c| {
            if h.contains(c) {
                0
            } else {
                1
            }
        })
        .expect("hypergraph already validated")
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.backing, Backing::Explicit { .. })
    }

    /// Checked colour lookup.
    pub fn try_colour(&self, tuple: &[u32]) -> Result<u8> {
        check_tuple(tuple, self.k, self.n)?;
        Ok(self.colour(tuple))
    }

    /// Explicit copy of an implicit colouring, gated by `cap` tuples.
    pub fn materialize(&self, cap: u64) -> Result<Self> {
        if self.is_explicit() {
            return Ok(self.clone());
        }
        Self::from_fn(self.k, self.n, self.colour_count, cap, |c| self.colour(c))
    }

    /// The hypergraph of all k-tuples of colour `colour`.
    pub fn colour_class(&self, colour: u8, cap: u64) -> Result<UniformHypergraph> {
        if colour >= self.colour_count {
            return Err(Error::ColourOutOfRange {
                colour,
                count: self.colour_count,
            });
        }
        let total = binom(self.n as u64, self.k as u64);
        if total > cap {
            return Err(Error::OverBudget { needed: total, cap });
        }
        UniformHypergraph::from_predicate(self.k, self.n, |c| self.colour(c) == colour)
    }

    /// Colours of all k-subsets in lexicographic order.
    pub fn lex_colours(&self) -> impl Iterator<Item = (Vec<u32>, u8)> + '_ {
        Combinations::new(self.n, self.k).map(move |c| {
            let col = self.colour(&c);
            (c, col)
        })
    }
}

impl TupleColouring for EdgeColouring {
    fn uniformity(&self) -> usize {
        self.k
    }
    fn vertex_count(&self) -> u32 {
        self.n
    }
    fn colour_count(&self) -> u8 {
        self.colour_count
    }
    #[inline]
    fn colour(&self, tuple: &[u32]) -> u8 {
        match &self.backing {
            Backing::Explicit { table, colours } => colours[table.colex_rank(tuple) as usize],
            Backing::Implicit(rule) => rule(tuple),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn colour_class_examples() {
        let c = EdgeColouring::constant(3, 5, 2, RED).unwrap();
        assert_eq!(c.colour_class(RED, 1000).unwrap(), UniformHypergraph::complete(3, 5).unwrap());
        assert_eq!(c.colour_class(BLUE, 1000).unwrap().edge_count(), 0);
        let one_blue = EdgeColouring::from_fn(3, 4, 2, 100, |t| (t == [0, 1, 2]) as u8).unwrap();
        let blue = one_blue.colour_class(BLUE, 100).unwrap();
        assert_eq!(blue.edges().collect::<Vec<_>>(), [[0u32, 1, 2]]);
        assert!(matches!(c.colour_class(2, 100), Err(Error::ColourOutOfRange { .. })));
        assert!(matches!(c.colour_class(RED, 3), Err(Error::OverBudget { .. })));
    }

    #[test]
    fn lex_table_roundtrip() {
        let lex = [0u8, 1, 2, 0];
        let c = EdgeColouring::from_lex_table(3, 4, 3, &lex).unwrap();
        let back: Vec<u8> = c.lex_colours().map(|(_, col)| col).collect();
        assert_eq!(back, lex);
        assert!(EdgeColouring::from_lex_table(3, 4, 2, &lex).is_err());
    }

    proptest! {
        #[test]
        fn colour_classes_partition(n in 3u32..9, seed in any::<u64>()) {
            let c = EdgeColouring::from_fn(3, n, 3, u64::MAX, |t| {
                ((t[0] as u64 * 31 + t[1] as u64 * 7 + t[2] as u64).wrapping_mul(seed | 1) >> 7) as u8 % 3
            }).unwrap();
            let total: usize = (0..3).map(|col| c.colour_class(col, u64::MAX).unwrap().edge_count()).sum();
            prop_assert_eq!(total as u64, binom(n as u64, 3));
        }
    }
}
