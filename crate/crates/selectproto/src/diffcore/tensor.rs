use serde::{Deserialize, Serialize};

use super::{DiffError, Result};

/// Dense row-major array of rank one or two.
///
/// A tensor with `requires_grad` set carries a same-shape gradient
/// accumulator that optimizer steps read and the caller zeroes between
/// steps. Scalars are represented as shape `[1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tensor {
    shape: Vec<usize>,
    values: Vec<f64>,
    requires_grad: bool,
    grad: Option<Vec<f64>>,
}

impl Tensor {
    /// Build a tensor, validating that the shape matches the value count.
    pub fn new(shape: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        if shape.is_empty() || shape.len() > 2 || shape.iter().any(|&d| d == 0) {
            return Err(DiffError::Contract(format!(
                "tensor rank must be 1 or 2 with positive extents, got {shape:?}"
            )));
        }
        let expect: usize = shape.iter().product();
        if expect != values.len() {
            return Err(DiffError::Contract(format!(
                "shape {shape:?} implies {expect} values, got {}",
                values.len()
            )));
        }
        Ok(Self {
            shape,
            values,
            requires_grad: false,
            grad: None,
        })
    }

    pub fn scalar(v: f64) -> Self {
        Self::new(vec![1], vec![v]).expect("scalar shape is valid")
    }

    pub fn vector(values: Vec<f64>) -> Self {
        Self::new(vec![values.len()], values).expect("vector shape is valid")
    }

    pub fn matrix(rows: usize, cols: usize, values: Vec<f64>) -> Result<Self> {
        Self::new(vec![rows, cols], values)
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let len = shape.iter().product();
        Self::new(shape, vec![0.0; len]).expect("zeros shape is valid")
    }

    /// Mark as a learnable parameter and allocate the gradient accumulator.
    pub fn with_grad(mut self) -> Self {
        self.requires_grad = true;
        self.grad = Some(vec![0.0; self.values.len()]);
        self
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn requires_grad(&self) -> bool {
        self.requires_grad
    }

    pub fn grad(&self) -> Option<&[f64]> {
        self.grad.as_deref()
    }

    /// Add `delta` into the gradient accumulator.
    pub fn accumulate_grad(&mut self, delta: &[f64]) -> Result<()> {
        if delta.len() != self.values.len() {
            return Err(DiffError::ShapeMismatch {
                op: "accumulate_grad",
                left: self.shape.clone(),
                right: vec![delta.len()],
            });
        }
        let grad = self.grad.get_or_insert_with(|| vec![0.0; delta.len()]);
        for (g, d) in grad.iter_mut().zip(delta) {
            *g += d;
        }
        self.requires_grad = true;
        Ok(())
    }

    pub fn zero_grad(&mut self) {
        if let Some(g) = self.grad.as_mut() {
            g.fill(0.0);
        }
    }

    /// Error if values (or the gradient, when present) contain NaN/Inf.
    pub fn check_finite(&self, ctx: &'static str) -> Result<()> {
        let bad = self.values.iter().any(|v| !v.is_finite())
            || self
                .grad
                .as_ref()
                .is_some_and(|g| g.iter().any(|v| !v.is_finite()));
        if bad {
            Err(DiffError::NonFinite { op: ctx, node: 0 })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_must_match_value_count() {
        assert!(Tensor::new(vec![2, 2], vec![1.0, 2.0, 3.0]).is_err());
        assert!(Tensor::new(vec![2, 2], vec![0.0; 4]).is_ok());
        assert!(Tensor::new(vec![], vec![]).is_err());
        assert!(Tensor::new(vec![0], vec![]).is_err());
        assert!(Tensor::new(vec![1, 2, 3], vec![0.0; 6]).is_err());
    }

    #[test]
    fn grad_accumulates_and_zeroes() {
        let mut t = Tensor::vector(vec![1.0, 2.0]).with_grad();
        t.accumulate_grad(&[0.5, 0.5]).unwrap();
        t.accumulate_grad(&[0.5, 1.0]).unwrap();
        assert_eq!(t.grad().unwrap(), &[1.0, 1.5]);
        t.zero_grad();
        assert_eq!(t.grad().unwrap(), &[0.0, 0.0]);
    }

    #[test]
    fn finite_check_flags_nan() {
        let t = Tensor::vector(vec![1.0, f64::NAN]);
        assert!(t.check_finite("test").is_err());
        let ok = Tensor::vector(vec![1.0, 2.0]);
        assert!(ok.check_finite("test").is_ok());
    }
}
