//! Exact computations on the `SL_2` character rings and `t = -1` skein
//! algebras of two-bridge link complements.
//!
//! The pipeline is: [`linkparam`] builds the relator word of `b(2p, q)`,
//! [`traceengine`] turns words into trace polynomials, [`charvariety`]
//! assembles η and runs checks on it, and [`skeinreduce`] reduces
//! polynomials modulo η. [`oracle`] cross-checks the trace engine against
//! explicit integer matrices.

pub mod charvariety;
pub mod linkparam;
pub mod oracle;
pub mod polyring;
pub mod skeinreduce;
pub mod traceengine;

pub use charvariety::{eta, eta_ab, eta_nab, run_checks, CharacterRingReport};
pub use linkparam::{ParamError, TwoBridgeParam};
pub use polyring::{Monomial, PolyError, Polynomial, Var, VariableSet};
pub use skeinreduce::{basis_monomials, normal_form, SkeinQuotient};
pub use traceengine::{trace_of_word, AlgebraElement, Letter, Word};
