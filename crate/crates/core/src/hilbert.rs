//! Hilbert series as rational functions over `(1 - t)^n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::extint::ExtendedInt;
use crate::presentation::ModulePresentation;
use crate::resolution::FreeResolution;

/// `numer(t) / (1 - t)^denom_pow`, with an integer Laurent numerator
/// (`coeffs[k]` is the coefficient of `t^(offset + k)`). Stored reduced:
/// the numerator is nonzero at `t = 1` unless it is identically zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertSeries {
    pub offset: i64,
    pub coeffs: Vec<i64>,
    pub denom_pow: usize,
}

impl HilbertSeries {
    pub fn zero() -> HilbertSeries {
        HilbertSeries {
            offset: 0,
            coeffs: Vec::new(),
            denom_pow: 0,
        }
    }

    pub fn from_numer(offset: i64, coeffs: Vec<i64>, denom_pow: usize) -> HilbertSeries {
        let mut h = HilbertSeries {
            offset,
            coeffs,
            denom_pow,
        };
        h.normalize();
        h
    }

    /// Alternating sum of twist monomials over a finite free resolution.
    pub fn from_resolution(res: &FreeResolution) -> HilbertSeries {
        let n = res.ring.num_vars();
        let mut terms: Vec<(i64, i64)> = Vec::new();
        for i in 0..=res.length() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &tw in res.twists(i) {
                terms.push((tw, sign));
            }
        }
        if terms.is_empty() {
            return HilbertSeries::zero();
        }
        let lo = terms.iter().map(|(d, _)| *d).min().unwrap();
        let hi = terms.iter().map(|(d, _)| *d).max().unwrap();
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (d, s) in terms {
            coeffs[(d - lo) as usize] += s;
        }
        HilbertSeries::from_numer(lo, coeffs, n)
    }

    pub fn of_module(m: &ModulePresentation) -> HilbertSeries {
        let res = FreeResolution::minimal(m).expect("homogeneous presentation");
        HilbertSeries::from_resolution(&res)
    }

    fn normalize(&mut self) {
        // strip zero fringes
        while let Some(&c) = self.coeffs.first() {
            if c != 0 {
                break;
            }
            self.coeffs.remove(0);
            self.offset += 1;
        }
        while let Some(&c) = self.coeffs.last() {
            if c != 0 {
                break;
            }
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
            self.denom_pow = 0;
            return;
        }
        // cancel (1 - t) factors: numer(1) == 0 means divisible
        while self.denom_pow > 0 && self.coeffs.iter().sum::<i64>() == 0 {
            // divide by (1 - t): q_k = sum_{j <= k} c_j
            let mut acc = 0i64;
            let mut q = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
            for &c in &self.coeffs[..self.coeffs.len() - 1] {
                acc += c;
                q.push(acc);
            }
            self.coeffs = q;
            self.denom_pow -= 1;
            while let Some(&c) = self.coeffs.last() {
                if c != 0 {
                    break;
                }
                self.coeffs.pop();
            }
            if self.coeffs.is_empty() {
                self.offset = 0;
                self.denom_pow = 0;
                return;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Pole order at `t = 1`; equals the Krull dimension for a module's
    /// series. `-inf` for the zero series.
    pub fn pole_order(&self) -> ExtendedInt {
        if self.is_zero() {
            ExtendedInt::NegInf
        } else {
            ExtendedInt::Finite(self.denom_pow as i64)
        }
    }

    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.is_zero() || other.is_zero() {
            return HilbertSeries::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HilbertSeries::from_numer(
            self.offset + other.offset,
            coeffs,
            self.denom_pow + other.denom_pow,
        )
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // bring to the common denominator (1 - t)^max
        let p = self.denom_pow.max(other.denom_pow);
        let a = self.with_denom(p);
        let b = other.with_denom(p);
        let lo = a.offset.min(b.offset);
        let hi = (a.offset + a.coeffs.len() as i64).max(b.offset + b.coeffs.len() as i64);
        let mut coeffs = vec![0i64; (hi - lo) as usize];
        for (i, c) in a.coeffs.iter().enumerate() {
            coeffs[(a.offset - lo) as usize + i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            coeffs[(b.offset - lo) as usize + i] += c;
        }
        HilbertSeries::from_numer(lo, coeffs, p)
    }

    /// Multiply numerator by `(1 - t)^(p - denom_pow)`.
    fn with_denom(&self, p: usize) -> HilbertSeries {
        let mut coeffs = self.coeffs.clone();
        for _ in self.denom_pow..p {
            let mut next = vec![0i64; coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c;
            }
            coeffs = next;
        }
        HilbertSeries {
            offset: self.offset,
            coeffs,
            denom_pow: p,
        }
    }

    /// Coefficient of `t^d` in the power-series expansion.
    pub fn coefficient(&self, d: i64) -> i64 {
        let mut total: i128 = 0;
        for (i, &c) in self.coeffs.iter().enumerate() {
            let k = self.offset + i as i64;
            if d < k {
                continue;
            }
            total += c as i128 * binom(d - k + self.denom_pow as i64 - 1, self.denom_pow as i64 - 1);
        }
        total as i64
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.offset + i as i64;
            let mono = match e {
                0 => String::from("1"),
                1 => String::from("t"),
                _ => format!("t^{}", e),
            };
            if c == 1 && e != 0 {
                parts.push(mono);
            } else if e == 0 {
                parts.push(format!("{}", c));
            } else {
                parts.push(format!("{}*{}", c, mono));
            }
        }
        let numer = parts.join(" + ");
        if self.denom_pow == 0 {
            numer
        } else if self.denom_pow == 1 {
            format!("({}) / (1-t)", numer)
        } else {
            format!("({}) / (1-t)^{}", numer, self.denom_pow)
        }
    }
}

fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        // with k = -1 (denominator power 0) the expansion is the numerator
        // itself; handled by the n == k == -1 case
        return if k == -1 && n == -1 { 1 } else { 0 };
    }
    let mut out: i128 = 1;
    for i in 0..k {
        out = out * (n - i) as i128 / (i + 1) as i128;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::monomial_ideal::MonomialIdeal;
    use crate::ring::{Field, PolyRing};
    use alloc::string::ToString;

    fn r2() -> PolyRing {
        PolyRing::new(Field::Rationals, vec!["x1".to_string(), "x2".to_string()])
    }

    #[test]
    fn series_of_polynomial_ring() {
        let r = r2();
        let h = HilbertSeries::of_module(&ModulePresentation::ring_module(&r));
        assert_eq!(h, HilbertSeries::from_numer(0, vec![1], 2));
        assert_eq!(h.pole_order(), ExtendedInt::Finite(2));
        assert_eq!(h.coefficient(3), 4);
    }

    #[test]
    fn series_of_lp() {
        let r = r2();
        let ideal = MonomialIdeal::new(2, vec![Monomial(vec![2, 0]), Monomial(vec![1, 1])]);
        let m = ModulePresentation::cyclic_monomial(&r, &ideal);
        let h = HilbertSeries::of_module(&m);
        // (1 + t - t^2) / (1 - t)
        assert_eq!(h, HilbertSeries::from_numer(0, vec![1, 1, -1], 1));
        assert_eq!(h.pole_order(), ExtendedInt::Finite(1));
    }

    #[test]
    fn series_of_residue_field() {
        let r = r2();
        let h = HilbertSeries::of_module(&ModulePresentation::residue_field(&r));
        assert_eq!(h, HilbertSeries::from_numer(0, vec![1], 0));
        assert_eq!(h.pole_order(), ExtendedInt::Finite(0));
    }

    #[test]
    fn coefficients_match_monomial_counting() {
        let r = r2();
        let ideal = MonomialIdeal::new(2, vec![Monomial(vec![2, 0]), Monomial(vec![1, 1])]);
        let m = ModulePresentation::cyclic_monomial(&r, &ideal);
        let h = HilbertSeries::of_module(&m);
        for d in 0..8 {
            assert_eq!(
                h.coefficient(d),
                m.graded_piece_dim(d) as i64,
                "degree {}",
                d
            );
        }
    }

    #[test]
    fn zero_series() {
        let r = r2();
        let h = HilbertSeries::of_module(&ModulePresentation::zero_module(&r));
        assert!(h.is_zero());
        assert_eq!(h.pole_order(), ExtendedInt::NegInf);
    }

    #[test]
    fn product_of_series() {
        // HS(R_2) * HS(R_2) = HS(R_4)
        let one_over = |n| HilbertSeries::from_numer(0, vec![1], n);
        assert_eq!(one_over(2).mul(&one_over(2)), one_over(4));
    }
}
