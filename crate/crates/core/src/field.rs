use std::fmt::Debug;
use std::ops::{Div, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::qfield::RatQ;

/// The exact fields the matrix and elimination code runs over: Q(q) and,
/// for the q = 1 degeneration, Q.
pub trait Field:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Div<Output = Self> + Send + Sync
{
}

impl Field for RatQ {}
impl Field for BigRational {}
