//! Donaldson series on a tracked sublattice of `H_2`: products of surfaces,
//! fiber sums along a surface of square zero, finite-type bounds and the
//! congruence on basic classes.

mod fibersum;
mod product;
mod series;

pub use fibersum::{
    congruence_check, fiber_sum, finite_type_order, ClassVerdict, CongruenceReport, FiberSumInput,
    Pairing,
};
pub use product::{product_lattice, product_series};
pub use series::{evaluate, twisted_combination, w_sigma_combine, DonaldsonSeries};
