//! Word equations over a G-group: words, the equation language, solution
//! sets and presentations.

mod parser;
mod presentation;
mod solve;
mod word;

pub use parser::{parse_system, EquationSystem};
pub use presentation::{
    diagonal_product, product_check, product_presentation, rebase_presentation, solution_hom_bijection, sum_check,
    Presentation, ProductReport, SolutionHomReport, SumReport,
};
pub use solve::{noetherian_reduce, solve, variable_symmetries, NoetherianReduction, SolutionSet, SolveOptions};
pub use word::{evaluate_raw, CompiledWord, GWord, Syllable};
