//! Configurable safety caps.
//!
//! Every potentially expensive computation is guarded by one of these
//! knobs and refuses explicitly instead of truncating.

/// Resource caps threaded through the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest group that may be expanded into an explicit element list.
    pub max_enumeration: usize,
    /// Safety cap on group order during stabilizer-chain construction.
    pub max_order: u128,
    /// Cap on conjugacy-class count for the normal-subgroup search.
    pub max_classes: usize,
    /// Coset limit for presentation enumeration.
    pub max_cosets: usize,
    /// Cap on lower-central-series length.
    pub nilpotency_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumeration: 200_000,
            max_order: 100_000_000,
            max_classes: 40,
            max_cosets: 100_000,
            nilpotency_cap: 10,
        }
    }
}

impl Limits {
    pub fn with_max_classes(mut self, cap: usize) -> Self {
        self.max_classes = cap;
        self
    }

    pub fn with_max_cosets(mut self, cap: usize) -> Self {
        self.max_cosets = cap;
        self
    }
}
