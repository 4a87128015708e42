#![allow(clippy::needless_range_loop)]

//! Exact computations with Hodge classes on products `J x J` of abelian
//! varieties: the exterior algebra of `H^1`, the rings `B^1`, `B^2`, Cartan
//! subalgebras of `M_2(Q)` and their Weil classes, the cubic fourfold of
//! limit Weil classes, and the polarization invariants attached to them.
//!
//! All arithmetic is over Q or a quadratic algebra `Q[theta]/(theta^2 - delta)`;
//! nothing is ever rounded.

pub mod bivar;
pub mod cartan;
pub mod cycles;
pub mod error;
pub mod forms;
pub mod hermitian;
pub mod hilbert;
pub mod hodge;
pub mod linalg;
pub mod mpoly;
pub mod quad;
pub mod rat;
pub mod scalar;
pub mod smith;
pub mod weil;

pub use bivar::{perfect_square_root, BivarPoly};
pub use cartan::{cartan_discriminant, CartanForm, CartanKind};
pub use error::{Error, Result};
pub use forms::{LinearMap1, MultiForm};
pub use hilbert::{hilbert_symbol, is_norm, Prime};
pub use hodge::{B1Class, B2Class};
pub use quad::{quad_mul, QuadElem};
pub use rat::Rat;
pub use scalar::Scalar;
pub use smith::{smith_divisors, IntMatrix};
pub use cycles::{cycle_classes, elementary_divisors_symplectic, solve_membership_family, CycleClasses};
pub use hermitian::{discriminant, e4_discriminant, hermitian_matrix, Discriminant, HermitianMatrix};
pub use weil::{
    classify, cubic_g, eigenforms, find_k, intersect_planes, markman_class, membership, nu_prime,
    nu_prime_inverse, CayleyPencil, EigenData, FindK, StratumTag,
};
