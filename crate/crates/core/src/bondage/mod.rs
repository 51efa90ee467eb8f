//! Double Roman bondage numbers: exact search, upper-bound catalog,
//! deletion certificates and family formulas.

pub mod bounds;
mod certificates;
mod closed_form;
mod exact;

pub use bounds::{bound_catalog, catalog_upper_bound, BoundEntry, BoundReport};
pub use certificates::{edge_deletion_set, path_deletion_set, two_path_deletion_set};
pub use closed_form::{closed_form_bondage, closed_form_gamma, dominating_vertex_bondage, multipartite_bondage};
pub use exact::{bondage_exact, bondage_exact_with, BondageOptions, BondageResult};
