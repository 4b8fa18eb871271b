//! Exact combinatorics of generic planar curve singularities `x = t^{dn}`,
//! `y = t^{dm} + λ t^{dm+1} + …` with `gcd(n,m) = 1`, `m > n ≥ 2`, `d ≥ 1`.
//!
//! The library computes, with exact integer arithmetic throughout:
//!
//! * the value semigroup `Γ = ⟨dn, dm, dmn+1⟩` and its invariants ([`semigroup`]),
//! * admissible 0-normalized `Γ`-semimodules in c-matrix and generator form
//!   ([`semimodule`]),
//! * `(dn,dm)`-Dyck paths with arm/leg and dinv statistics ([`dyck`]),
//! * the inverse bijections `Ψ_d` / `Φ_d` between Dyck paths and admissible
//!   semimodules, the enhanced rank, the sweep map `ζ` and the
//!   generator–cogenerator statistic `𝒢` ([`bijection`]),
//! * cell dimensions of the affine pavings of the punctual Hilbert schemes and
//!   the compactified Jacobian ([`paving`]),
//! * the Hilbert L-function `L(q,t,0)` and the motivic superpolynomial
//!   `H^mot(q,t,0)` as sparse bivariate polynomials over big integers, plus the
//!   identity checker for `L = H^mot` ([`genfun`]),
//! * deliberately slow, definition-literal recomputations of all of the above
//!   used as ground truth in tests ([`oracle`]).

pub mod bijection;
pub mod dyck;
mod error;
pub mod genfun;
pub mod oracle;
pub mod paving;
pub mod semigroup;
pub mod semimodule;

pub use bijection::{enhanced_rank, enhanced_rank_inverse, gc_vector, phi, psi, sweep_zeta};
pub use bijection::{PhiData, PsiData};
pub use dyck::{enumerate_dyck, DyckPath};
pub use error::Error;
pub use genfun::{
    check_functional_equation, hmot, hmot_per_path, l_function, l_poly_per_path, verify_cdp,
    BivarPoly, CdpReport,
};
pub use paving::{cell_dim_via_dyck, eps, eps_hat, hilb_cell_dim, hilb_cells, CellRecord};
pub use semigroup::{bezout, Params};
pub use semimodule::{enumerate_admissible, CMatrix, Semimodule};

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
