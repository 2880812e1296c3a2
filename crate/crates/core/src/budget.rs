//! Node and wall-clock caps for exhaustive searches.

/// Wall-clock check supplied by the caller (the core has no clock).
pub trait Deadline: Sync {
    fn expired(&self) -> bool;
}

/// Limits for a search. Results carry an `exhausted` flag: `false` means
/// the result is exact, `true` means it is a lower bound (best found).
#[derive(Clone, Copy, Default)]
pub struct SearchBudget<'a> {
    pub node_cap: Option<u64>,
    pub deadline: Option<&'a dyn Deadline>,
}

impl<'a> SearchBudget<'a> {
    pub const fn unlimited() -> Self {
        SearchBudget {
            node_cap: None,
            deadline: None,
        }
    }

    pub const fn nodes(cap: u64) -> Self {
        SearchBudget {
            node_cap: Some(cap),
            deadline: None,
        }
    }

    pub fn with_deadline(mut self, d: &'a dyn Deadline) -> Self {
        self.deadline = Some(d);
        self
    }

    pub fn meter(&self) -> Meter<'a> {
        Meter {
            budget: *self,
            nodes: 0,
            exhausted: false,
        }
    }
}

impl core::fmt::Debug for SearchBudget<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SearchBudget")
            .field("node_cap", &self.node_cap)
            .field("deadline", &self.deadline.is_some())
            .finish()
    }
}

/// Running node counter for one search.
pub struct Meter<'a> {
    budget: SearchBudget<'a>,
    nodes: u64,
    exhausted: bool,
}

impl Meter<'_> {
    /// Counts one node; returns `false` once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if let Some(cap) = self.budget.node_cap {
            if self.nodes > cap {
                self.exhausted = true;
                return false;
            }
        }
        if self.nodes & 0xfff == 0 {
            if let Some(d) = self.budget.deadline {
                if d.expired() {
                    self.exhausted = true;
                    return false;
                }
            }
        }
        true
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }
}
