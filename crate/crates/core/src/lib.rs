//! Exact computer algebra for equivariant Poincaré series and cohomology
//! rings of GIT quotients, applied to the moduli of degree-2 and degree-3
//! stable maps to projective space.
//!
//! Layers, bottom up: [`ring`] and [`poly`] (exact polynomials over
//! weighted graded rings), [`groebner`] (Buchberger, Hilbert series),
//! [`series`] (rational generating functions), [`kirwan`] (quasimap series
//! and localization relations), [`blowup`] (blow-up formulas), and
//! [`pipeline`] (end-to-end checks).

pub mod blowup;
pub mod error;
pub mod groebner;
pub mod kirwan;
pub mod par;
pub mod pipeline;
pub mod poly;
pub mod ring;
pub mod series;
