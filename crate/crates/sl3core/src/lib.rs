//! Core data types for the sl3 web calculus: exact Laurent polynomials in v,
//! planar web/tangle diagrams in a marked disc (half-edge rotation systems),
//! linear combinations keyed by canonical form, JSON interchange, and
//! diagnostic renderers.

pub mod combo;
pub mod json;
pub mod laurent;
pub mod render;
pub mod web;

pub use combo::WebCombo;
pub use laurent::{rat, rat_int, LaurentPoly, Rat};
pub use web::{Color, Diagram, Face, FaceKind, HalfId, VKind, VertexId, WebError};
