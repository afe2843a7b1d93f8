//! Minimal reverse-mode automatic differentiation engine.
//!
//! Everything trainable in this crate runs through the tape [`Graph`]: a
//! forward pass appends op records in topological order, [`Graph::backward`]
//! walks them in reverse and accumulates vector-Jacobian products into
//! per-node gradient buffers. Tensors are dense, row-major `f64` arrays of
//! rank one or two; that is all the models here need.
//!
//! ```
//! use selectproto::diffcore::{Graph, Tensor};
//!
//! let x = Tensor::vector(vec![3.0]).with_grad();
//! let mut g = Graph::new();
//! let xv = g.param(&x);
//! let sq = g.mul(xv, xv).unwrap();
//! let loss = g.sum_all(sq).unwrap();
//! g.backward(loss).unwrap();
//! assert_eq!(g.grad(xv).unwrap(), &[6.0]); // d(x^2)/dx = 2x
//! ```

mod adam;
mod check;
mod graph;
pub mod kernels;
mod tensor;

pub use adam::{adam_step, AdamConfig, AdamState};
pub use check::{finite_diff_check, FdReport};
pub use graph::{Graph, Var};
pub use tensor::Tensor;

/// Errors produced by tensor construction, graph ops, and optimizer steps.
#[derive(Debug, thiserror::Error)]
pub enum DiffError {
    /// Operand shapes are incompatible for the given op.
    #[error("shape mismatch in {op}: left {left:?} vs right {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// A structural precondition was violated (empty input, bad root, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// A NaN or infinity appeared during a forward or backward pass.
    #[error("non-finite value produced by op `{op}` (node {node})")]
    NonFinite { op: &'static str, node: usize },
}

pub type Result<T> = std::result::Result<T, DiffError>;
