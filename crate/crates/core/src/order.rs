//! Monomial orders and their position-over-term extension to free modules.

use core::cmp::Ordering;

use crate::monomial::Monomial;

/// A multiplicative well-founded total order on monomials.
///
/// Default throughout the kernel is grevlex; minimality of resolutions is
/// order-independent after minimalization, so the choice only affects speed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex => {
                let da = a.total_degree();
                let db = b.total_degree();
                if da != db {
                    return da.cmp(&db);
                }
                // reverse lexicographic on the reversed exponent vector
                for (ea, eb) in a.0.iter().rev().zip(b.0.iter().rev()) {
                    if ea != eb {
                        return eb.cmp(ea);
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Position-over-term: lower component indices dominate, ties broken by
    /// the monomial order. This makes appended components an elimination
    /// block, which the syzygy computation relies on.
    pub fn cmp_term(&self, a: &(usize, Monomial), b: &(usize, Monomial)) -> Ordering {
        match b.0.cmp(&a.0) {
            Ordering::Equal => self.cmp_mono(&a.1, &b.1),
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::GrevLex;
        // degree dominates
        assert_eq!(o.cmp_mono(&m(&[2, 0]), &m(&[0, 1])), Ordering::Greater);
        // same degree: x1^2 > x1 x2 > x2^2
        assert_eq!(o.cmp_mono(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp_mono(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative() {
        let cases = [
            (m(&[1, 2, 0]), m(&[0, 3, 0])),
            (m(&[2, 0, 1]), m(&[1, 1, 1])),
            (m(&[0, 0, 3]), m(&[1, 1, 0])),
        ];
        let f = m(&[1, 0, 2]);
        for o in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            for (a, b) in &cases {
                let c = o.cmp_mono(a, b);
                assert_eq!(o.cmp_mono(&f.mul(a), &f.mul(b)), c);
            }
        }
    }

    #[test]
    fn pot_puts_lower_components_first() {
        let o = MonomialOrder::GrevLex;
        let big = (0usize, m(&[0, 0]));
        let small = (1usize, m(&[5, 5]));
        assert_eq!(o.cmp_term(&big, &small), Ordering::Greater);
    }

    #[test]
    fn one_is_least() {
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.cmp_mono(&m(&[0, 0]), &m(&[0, 1])), Ordering::Less);
        assert_eq!(
            MonomialOrder::Lex.cmp_mono(&m(&[0, 0]), &m(&[0, 1])),
            Ordering::Less
        );
    }
}
