use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact ordered field elements used for lengths and positions.
pub trait Scalar: Clone + Ord + Hash + Debug + Display + FromStr + Signed + Send + Sync + 'static {
    fn from_u32(n: u32) -> Self;

    /// The value as a non-negative integer, if it is one.
    fn to_natural(&self) -> Option<u64>;
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + Hash + Debug + Display + FromStr + ToPrimitive + FromPrimitive + Send + Sync + 'static,
{
    fn from_u32(n: u32) -> Self {
        Ratio::from_integer(T::from_u32(n).expect("small integers are representable"))
    }

    fn to_natural(&self) -> Option<u64> {
        if self.is_integer() && !self.is_negative() {
            self.numer().to_u64()
        } else {
            None
        }
    }
}

/// Parses `"p/q"` or `"n"`.
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    text.trim().parse().ok()
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;

    #[test]
    fn parse_and_integrality() {
        let half: BigRational = parse_scalar("1/2").unwrap();
        assert_eq!(half.to_natural(), None);
        let three: Ratio<i64> = parse_scalar("6/2").unwrap();
        assert_eq!(three.to_natural(), Some(3));
        assert_eq!(three.to_string(), "3");
        assert!(parse_scalar::<Ratio<i128>>("x").is_none());
    }
}
