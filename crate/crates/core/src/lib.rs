//! Exact computations with equivariant cobordism classes of Milnor manifolds
//! under `(Z_2)^n` actions.
//!
//! The pipeline: a [`milnor::MilnorAction`] produces its fixed-point data
//! η in the representation ring ([`repring`]); the tom Dieck map sends η to
//! power series whose individual coefficients are rational functions in
//! `y_1..y_r` over GF(2) ([`tomdieck`], [`linratfun`], [`gf2poly`]); nonzero
//! coefficients of `b_k` or `b_{k-1} b_1` with `k` above the degree certify
//! indecomposability ([`criteria`]).

pub mod cli;
pub mod criteria;
pub mod gf2poly;
pub mod linratfun;
pub mod milnor;
pub mod repring;
pub mod tomdieck;

pub use criteria::{Certificate, CoefficientKind, SearchPolicy, Verdict};
pub use gf2poly::{Gf2Polynomial, LinearForm, PolyContext};
pub use linratfun::{FactoredDenominator, RationalFunction};
pub use milnor::{FixedPoint, MilnorAction};
pub use repring::{Character, GroupHom, RepElement, RepMonomial};
pub use tomdieck::BMultiIndex;
