//! Dense row-major tensors.
pub struct Tensor;
