//! Exact-arithmetic machinery for tensor-product multiplicities of unipotent
//! characters of `GL_n(F_q)`.
//!
//! The central objects are three families of polynomials in `t` attached to a
//! multipartition `mu` and a genus `g`:
//!
//! * `V_mu(t)` — generic tensor multiplicities, extracted from the series
//!   `V = (t-1) Log Omega`,
//! * `U_mu(t)` — unipotent tensor multiplicities, extracted from `U = Exp V`,
//! * `A_mu(t)` — the complete-basis companion of `V_mu`,
//!
//! where `Omega` is the Cauchy kernel built from modified Hall-Littlewood
//! functions and unipotent centralizer orders. Everything is computed over
//! exact rationals; no floating point is used anywhere.
//!
//! Module layout mirrors the mathematical layers: [`combinatorics`] for
//! partitions, types and symmetric-group data, [`exactalg`] for polynomials
//! and rational functions in `t`, [`symfunc`] for the graded multi-set
//! symmetric function ring with plethystic `Log`/`Exp`, [`hall_littlewood`]
//! for Kostka-Foulkes data and the kernel `Omega`, [`kernel`] for the main
//! pipeline, [`quiver`] for comet-shaped root systems, [`sn_modules`] for the
//! symmetric-group module side, and [`oracle`] for a brute-force check over
//! small general linear groups.

pub mod combinatorics;
pub mod exactalg;
pub mod hall_littlewood;
pub mod kernel;
pub mod oracle;
pub mod quiver;
pub mod sn_modules;
pub mod suites;
pub mod symfunc;

pub use combinatorics::{MultiPartition, MultiType, Partition, SplitType};
pub use exactalg::{TPoly, TRat};
pub use kernel::KernelContext;
pub use quiver::{CometQuiver, DimVector, RootClass};
pub use symfunc::SymFunc;
