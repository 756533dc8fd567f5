//! Bounded exhaustive searches over structured Diophantine equations.
//!
//! Every bound is inclusive and applies to the absolute value of each
//! enumerated variable; quantities solved for (a root of a product, say)
//! are unbounded unless noted. Every search implements [`RangeSearch`], so
//! its outermost loop can be cut into slices that are run independently and
//! merged.

mod families;
mod pair;
mod record;
mod search;
mod sys3;

pub use families::{
    canonical_gaussian_pair, search_euler_product, search_fermat_triples, search_product_form,
    search_product_squares, search_quadratic_irreducibility, search_quadruple, QuadrupleMode,
    EulerProduct, FermatTriples, ProductForm, ProductSquares, QuadraticScan, Quadruple, Ring,
};
pub use pair::{parity_report, search_pair_system, Mod4Counts, PairSystem, PairSystemSearch, ParityReport};
pub use record::{Equation, SolutionRecord};
pub use search::{partition, run_partitioned, Partial, RangeSearch, SearchResult};
pub use sys3::{is_canonical_sys3, search_sys3, Sys3};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchBounds {
    pub per_var_max: u64,
    pub exponent: u32,
}

impl SearchBounds {
    pub fn new(per_var_max: u64, exponent: u32) -> Result<Self> {
        if per_var_max == 0 {
            return Err(Error::usage("bound must be at least 1"));
        }
        if exponent == 0 {
            return Err(Error::usage("exponent must be at least 1"));
        }
        Ok(SearchBounds { per_var_max, exponent })
    }
}
