//! Exact decision procedures for units of `Z[X]/(X^n - a)` obtained by
//! evaluating an integer polynomial at an `n`-th root of `a`.
//!
//! For `a = 1` this is the question of when `f(g)` is a unit of the integral
//! group ring of a cyclic group of order `n`. The modules build on each other:
//! [`poly`] (exact arithmetic, resultants, determinants, Bezout certificates),
//! [`cyclo`] (Möbius, φ, cyclotomic polynomials, the `Φ_m(a) = ±1` table),
//! [`unitcheck`] (one `(f, n, a)` at a time), [`classify`] (all `n` at once),
//! and [`parse`] / [`cli`] for the command-line tool.

pub mod classify;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod parse;
pub mod poly;
pub mod unitcheck;

pub use classify::{
    classify_roots, compute_bound, enumerate_orders, factor_shape, is_generic, unit_residues,
    Classification, CycloShape, GenericVerdict, PeriodicSet,
};
pub use error::{Error, Limits, Result};
pub use parse::parse_poly;
pub use poly::{BezoutCertificate, IntPoly};
pub use unitcheck::{defines_unit_on_order, defines_units_on_roots, UnitVerdict};
