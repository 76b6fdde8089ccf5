//! Exact arithmetic in Q[q, q^-1] and Q(q), with numeric specialization at
//! `q = exp(i 4 pi / kappa)`.

mod json;
mod laurent;
mod numeric;
mod ratq;
pub(crate) mod upoly;

pub use json::{laurent_from_json, laurent_to_json, ratq_from_json, ratq_to_json};
pub use laurent::{q_integer, LaurentPoly};
pub use numeric::{eval_at_kappa, QNumeric, POLE_TOLERANCE};
pub use ratq::{field_arith, FieldOp, RatQ};
pub(crate) use upoly::div_rem as upoly_div_rem;
