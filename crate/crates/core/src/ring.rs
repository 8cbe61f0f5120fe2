//! Minimal commutative-ring abstraction and a cofactor determinant over it.

use num_traits::{One, Zero};

use crate::exact::Rational;

/// Commutative ring with unit; enough structure for exact determinants.
pub trait Ring: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
}

impl Ring for Rational {
    fn ring_zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn ring_one() -> Self {
        <Rational as One>::one()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

/// Implements [`Ring`] by forwarding to inherent `zero/one/is_zero/add/sub/mul/neg`.
macro_rules! ring_via_inherent {
    ($t:ty) => {
        impl $crate::ring::Ring for $t {
            fn ring_zero() -> Self {
                <$t>::zero()
            }
            fn ring_one() -> Self {
                <$t>::one()
            }
            fn ring_is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn ring_add(&self, other: &Self) -> Self {
                <$t>::add(self, other)
            }
            fn ring_sub(&self, other: &Self) -> Self {
                <$t>::sub(self, other)
            }
            fn ring_mul(&self, other: &Self) -> Self {
                <$t>::mul(self, other)
            }
            fn ring_neg(&self) -> Self {
                <$t>::neg(self)
            }
        }
    };
}
pub(crate) use ring_via_inherent;

/// Determinant by Laplace expansion along the first row.
///
/// Zero entries are skipped, so sparse patterns cost far fewer than `n!` products.
/// Intended for `n <= 5`; the input must be square.
pub fn det<T: Ring>(m: &[Vec<T>]) -> T {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    let cols: Vec<usize> = (0..n).collect();
    det_minor(m, 0, &cols)
}

fn det_minor<T: Ring>(m: &[Vec<T>], row: usize, cols: &[usize]) -> T {
    match cols.len() {
        0 => T::ring_one(),
        1 => m[row][cols[0]].clone(),
        2 => m[row][cols[0]]
            .ring_mul(&m[row + 1][cols[1]])
            .ring_sub(&m[row][cols[1]].ring_mul(&m[row + 1][cols[0]])),
        _ => {
            let mut acc = T::ring_zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = &m[row][c];
                if entry.ring_is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry.ring_mul(&det_minor(m, row + 1, &rest));
                acc = if k % 2 == 0 { acc.ring_add(&term) } else { acc.ring_sub(&term) };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn small_determinants() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(det(&m), int(5));
        let m3 = vec![
            vec![int(1), int(2), int(3)],
            vec![int(4), int(5), int(6)],
            vec![int(7), int(8), int(10)],
        ];
        assert_eq!(det(&m3), int(-3));
        let m0: Vec<Vec<Rational>> = vec![];
        assert_eq!(det(&m0), int(1));
        assert_eq!(det(&[vec![rat(1, 2)]]), rat(1, 2));
    }
}
