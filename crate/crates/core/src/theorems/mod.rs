//! Executable checkers relating twisted homomorphisms, weighted initial forms
//! and invariants of additive-group actions.
//!
//! For `ψ: k[x1..xn] -> k[y1..ym]` and a weight `u` on the `y`, the twist
//! `ψ^u(x_i) = ψ(x_i)^u` and the pulled-back weight `u_ψ` satisfy
//! `ψ(f)^u = ψ^u(f^{u_ψ})` whenever the right side is nonzero. For a map
//! `φ` into `k[y][z]`, the weight `u = (v, -deg_v φ)` makes `u_φ = w`, which
//! reduces statements about `f^w` for `φ`-invariants to the twisted setting.
//!
//! Injectivity of a twisted map is certified by algebraic independence of
//! its images, which is equivalent for maps out of a polynomial ring over a
//! field. All checks are instance checks on finite data.

mod nondividing;
mod phi;
mod twist;

pub use nondividing::{
    check_coords_instance, check_no_intruder_stable, check_stable_coordinate, find_nondividing,
    find_nondividing_twist, independent_subset, NoIntruderReport, NondividingReport,
};
pub use phi::{build_u, check_star, phi_z_degree, PhiData, StarFailure, StarReport};
pub use twist::{
    build_twist, check_initial_compat, check_initial_membership, CompatReport, MembershipReport, TwistData,
};
