//! Partitions, LR tableaux, the three-row Horn cone and exact oracles for
//! Jack and Macdonald Littlewood-Richardson coefficients.

pub mod cache;
pub mod error;
pub mod horn;
pub mod jack;
pub mod macdonald;
pub mod monomial;
pub mod partition;
pub mod phi;
pub mod product;
pub mod stanley;
pub mod sweep;
pub mod tableau;

pub use error::{CoreError, Result};
pub use partition::{Cell, Partition};
