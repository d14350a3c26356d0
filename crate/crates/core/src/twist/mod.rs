//! 2-cocycles on character groups, the twists they define, twisted
//! coproducts and antipodes, and cohomologous transport.

pub mod builtin;
mod cocycle;
mod elt;

pub use cocycle::{Cocycle, WedderburnProfile};
pub use elt::{
    check_twist_axioms, cohomologous_v, is_group_like_direct, sandwich, sandwich3, transport_check, twist_tensor,
    TransportReport, TwistAxiomReport, TwistElt,
};
