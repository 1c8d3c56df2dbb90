//! Finite p-groups presented by weighted power-commutator presentations.

mod group;
mod presentation;
mod subgroup;

pub use group::{Element, ElementIter, PcGroup, ValidationReport};
pub use presentation::{ExpVec, PcPresentation};
pub use subgroup::{
    center, central_series, commutator_subgroup, commutator_subgroup_pairs, frattini,
    maximal_subgroups, mho1, omega1, section_centralizer, Caps, CentralSeries, Subgroup,
};
