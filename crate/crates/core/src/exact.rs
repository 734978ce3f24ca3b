//! Exact accumulation with a fixed-width fast path.

use num_bigint::BigUint;

/// Running sum of non-negative products.
///
/// Stays in `u128` while it can and moves to `BigUint` on the first
/// overflow; it never wraps.
#[derive(Debug, Clone)]
pub enum ExactSum {
    Small(u128),
    Big(BigUint),
}

impl Default for ExactSum {
    fn default() -> Self {
        ExactSum::Small(0)
    }
}

impl ExactSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: u128) {
        match self {
            ExactSum::Small(acc) => match acc.checked_add(x) {
                Some(s) => *acc = s,
                None => *self = ExactSum::Big(BigUint::from(*acc) + BigUint::from(x)),
            },
            ExactSum::Big(acc) => *acc += BigUint::from(x),
        }
    }

    /// Adds `a * b`, escalating if the product itself overflows.
    pub fn add_product(&mut self, a: u128, b: u128) {
        match a.checked_mul(b) {
            Some(p) => self.add(p),
            None => {
                let p = BigUint::from(a) * BigUint::from(b);
                let acc = std::mem::take(self).into_biguint();
                *self = ExactSum::Big(acc + p);
            }
        }
    }

    pub fn into_biguint(self) -> BigUint {
        match self {
            ExactSum::Small(v) => BigUint::from(v),
            ExactSum::Big(v) => v,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn escalates_instead_of_wrapping() {
        let mut s = ExactSum::new();
        s.add(u128::MAX);
        s.add(1);
        assert_eq!(s.into_biguint(), BigUint::from(u128::MAX) + 1u32);
    }

    #[test]
    fn product_overflow_escalates() {
        let mut s = ExactSum::new();
        s.add(5);
        s.add_product(u128::MAX, 2);
        assert_eq!(s.into_biguint(), BigUint::from(u128::MAX) * 2u32 + 5u32);
    }
}
