//! Vector-circulant matrices over finite fields and the additive codes over
//! GF(4) they generate.
//!
//! - [`gf`]: arithmetic in GF(p^m), q <= 256
//! - [`veccirc`]: the lambda-vector-cyclic shift, `cir_lambda`, `T_lambda`
//! - [`polyring`]: `F_q[x] / <x^n - lambda(x)>` and the isomorphism `phi`
//! - [`addcode`]: additive codes over F_4, distance, weight distribution
//! - [`search`]: code search and table verification
//! - [`properties`]: randomized checks of the ring structure
//! - [`cli`]: the `vcirc` command line

pub mod addcode;
pub mod cli;
pub mod error;
pub mod gf;
pub mod polyring;
pub mod properties;
pub mod search;
pub mod veccirc;

pub use error::{Error, Result};
