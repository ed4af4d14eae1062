//! Quantum exterior algebras `Lambda` (x's, parameter `r`) and `Lambda'`
//! (y's, parameter `s^-1`), and the mixed algebra with `A_{r,s}`.

mod mixed;
mod mono;
mod oracle;

pub use mixed::MixedPoly;
pub use mono::{wedge, x_wedge, y_wedge, ExtMono, XMono, YMono};
pub use oracle::{
    delta, det_oracle, hf_oracle, manin_check, manin_residual, minor_expansion, omega,
    omega_residuals, partial, pf_oracle, phi, phi_check, DetMode, FormFlavor,
};

#[cfg(test)]
mod tests;
