//! Structure constants of the `S_k`-orbit algebra of `Z_N^k` and su(N)
//! level-k fusion coefficients, with exhaustive scans comparing the two.
//!
//! * [`orbit`]: orbit labels, standard forms, enumeration.
//! * [`product`]: the orbit product by three independent algorithms.
//! * [`weight`]: level-k weights of `A_{N-1}` and their orbits.
//! * [`fusion`]: Verlinde-formula fusion coefficients.
//! * [`verify`]: exhaustive scans and reports.

pub mod error;
pub mod fusion;
pub mod orbit;
pub mod product;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
pub use fusion::{
    enumerate_level_weights, fusion_coefficient, su2_fusion_closed_form, FusionQuery, FusionTable,
    FusionValue, FUSION_TOLERANCE,
};
pub use orbit::{
    enumerate_labels, enumerate_orbit, enumerate_orbit_capped, label_count, label_of_tuple,
    make_label, orbit_size, standard_form, OrbitLabel, Params, Tuple, DEFAULT_ENUM_CAP,
};
pub use product::{
    append_zero, product, product_capped, structure_constant, Method, ProductExpansion,
};
pub use verify::{run_scan, Report, ScanKind, ScanSpec, Tally, Violation};
pub use weight::{is_row_weight, lift_level, orbit_to_weight, weight_to_orbit, Weight};
