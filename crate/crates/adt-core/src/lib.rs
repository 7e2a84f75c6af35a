//! Desk-scale laboratory for adversarially fine-tuned diffusion and flow models.
pub mod tensor;
