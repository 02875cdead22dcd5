use crate::group::{DEFAULT_HOM_BUDGET, DEFAULT_NORMAL_CAP, DEFAULT_ORDER_CAP};

/// Caps and budgets shared by the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub order_cap: usize,
    pub normal_cap: usize,
    /// Nodes visited by homomorphism backtracking.
    pub hom_budget: u64,
    /// Assignments evaluated by the equation solver.
    pub solve_budget: u64,
    /// Largest product of stalk orders for which sheaf sections are listed.
    pub section_cap: u64,
    /// Largest tuple size tried by the rank search.
    pub rank_cap: usize,
}

pub const DEFAULT_SOLVE_BUDGET: u64 = 100_000_000;
pub const DEFAULT_SECTION_CAP: u64 = 1_000_000;
pub const DEFAULT_RANK_CAP: usize = 3;

impl Default for Limits {
    fn default() -> Self {
        Self {
            order_cap: DEFAULT_ORDER_CAP,
            normal_cap: DEFAULT_NORMAL_CAP,
            hom_budget: DEFAULT_HOM_BUDGET,
            solve_budget: DEFAULT_SOLVE_BUDGET,
            section_cap: DEFAULT_SECTION_CAP,
            rank_cap: DEFAULT_RANK_CAP,
        }
    }
}

impl Limits {
    /// Overrides both search budgets with one node budget.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.hom_budget = budget;
        self.solve_budget = budget;
        self
    }
}
