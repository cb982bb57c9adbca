//! Degree-sequence realisation, extremal families and random generators.

mod degree;
mod families;
mod random;

pub use degree::{
    erdos_gallai_failure, erdos_gallai_graphic, havel_hakimi_realize, lemma7_check, lemma7_sequence,
    GraphicFailure,
};
pub use families::{
    construct_apex, construct_stars_complement, construct_tight, select_k, TightParams,
};
pub use random::{random_gnp, random_ktree, random_partial_ktree};
