//! Exact symbolic computation of (iterated) local cohomology with support in
//! determinantal varieties of generic `m x n` matrices.
//!
//! The crate works with the classes and direct-sum decompositions of
//! GL-equivariant D-modules: the simples `D_0, ..., D_n` and, for square
//! matrices, the indecomposables `Q_0, ..., Q_n`. On top of that it computes
//! Lyubeznik numbers of determinantal rings two independent ways, and carries
//! the GL-character, Bott and quiver machinery used to cross-check them.
//!
//! | module | contents |
//! |---|---|
//! | [`exactpoly`] | Laurent polynomials in `q`, bivariate polynomials in `(q, w)` |
//! | [`shapes`] | partitions, weights, Gaussian binomials, Bott's algorithm |
//! | [`grothendieck`] | `Γ_D[q]`, basis change, pairing, Euler characteristics |
//! | [`loccoh`] | closed-form local cohomology classes and the iteration engine |
//! | [`lyubeznik`] | Lyubeznik generating functions and tables |
//! | [`characters`] | GL-character supports, rectangular syzygies, witness pairings |
//! | [`quiver`] | representations of the doubled `A_n` quiver with zero 2-cycles |
//! | [`verify`] | named property sweeps used by the `verify` CLI subcommand |

pub mod characters;
pub mod error;
pub mod exactpoly;
pub mod exec;
pub mod grothendieck;
mod linalg;
pub mod loccoh;
pub mod lyubeznik;
pub mod quiver;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};
pub use exactpoly::{BiPoly, LaurentPoly};
pub use exec::Execution;
pub use grothendieck::{Basis, GammaElem, ModuleExpr};
