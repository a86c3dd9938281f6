//! Integers extended with +inf / -inf.
//!
//! Houses the degenerate-case conventions: `inf {} = +inf`, `sup {} = -inf`,
//! grade of a module with `aM = M` is `+inf`, its cohomological dimension `-inf`.

use core::cmp::Ordering;
use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ExtendedInt {
    NegInf,
    Finite(i64),
    PosInf,
}

use ExtendedInt::*;

impl ExtendedInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    /// Addition respecting infinities. `(+inf) + (-inf)` is indeterminate.
    pub fn checked_add(self, rhs: ExtendedInt) -> Result<ExtendedInt, IndeterminateSum> {
        match (self, rhs) {
            (PosInf, NegInf) | (NegInf, PosInf) => Err(IndeterminateSum),
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
            (Finite(a), Finite(b)) => Ok(Finite(a + b)),
        }
    }

    /// Panicking variant for contexts where the operands are known compatible.
    pub fn add(self, rhs: ExtendedInt) -> ExtendedInt {
        self.checked_add(rhs).expect("indeterminate +inf + -inf")
    }

    pub fn min(self, rhs: ExtendedInt) -> ExtendedInt {
        if self <= rhs {
            self
        } else {
            rhs
        }
    }

    pub fn max(self, rhs: ExtendedInt) -> ExtendedInt {
        if self >= rhs {
            self
        } else {
            rhs
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IndeterminateSum;

impl PartialOrd for ExtendedInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (PosInf, _) | (_, NegInf) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl From<i64> for ExtendedInt {
    fn from(n: i64) -> Self {
        Finite(n)
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInf => write!(f, "-inf"),
            PosInf => write!(f, "+inf"),
            Finite(n) => write!(f, "{}", n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_addition() {
        assert_eq!(Finite(2).add(Finite(3)), Finite(5));
    }

    #[test]
    fn infinity_absorbs() {
        assert_eq!(Finite(2).add(PosInf), PosInf);
        assert_eq!(NegInf.add(Finite(1)), NegInf);
    }

    #[test]
    fn indeterminate_sum_errors() {
        assert_eq!(PosInf.checked_add(NegInf), Err(IndeterminateSum));
    }

    #[test]
    fn ordering_with_infinities() {
        assert!(NegInf < Finite(-100));
        assert!(Finite(100) < PosInf);
        assert_eq!(PosInf.min(Finite(3)), Finite(3));
        assert_eq!(NegInf.max(Finite(3)), Finite(3));
    }
}
