//! Laplace development of a determinant whose columns split into two blocks,
//! the second block carrying alternating row signs.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::{det, IntMatrix};

/// `Σ det(c rows x) · det(d rows y)` over all splits of the rows into an
/// increasing `x` of size `m1` and its complement `y`. `c` is the first `m1`
/// columns of `m`, `d` the remaining `m2`.
pub fn laplace_split_sum(m: &IntMatrix, m1: usize, m2: usize) -> BigInt {
    assert_eq!((m.rows(), m.cols()), (m1 + m2, m1 + m2), "matrix must be (m1+m2)-square");
    let total = m1 + m2;
    let mut sum = BigInt::zero();
    for xs in subsets(total, m1) {
        let ys: Vec<usize> = (0..total).filter(|r| !xs.contains(r)).collect();
        let c = IntMatrix::from_fn(m1, m1, |i, j| m.get(xs[i], j).clone());
        let d = IntMatrix::from_fn(m2, m2, |i, j| m.get(ys[i], m1 + j).clone());
        sum += det(&c).unwrap() * det(&d).unwrap();
    }
    sum
}

/// The sign in front of the split sum, `(-1)^{⌊(m1+m2)/2⌋ - ⌊m1/2⌋}`.
pub fn laplace_sign(m1: usize, m2: usize) -> i32 {
    if ((m1 + m2) / 2 - m1 / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Builds `b` from `m` (second block multiplied by `(-1)^{i-1}`) and checks
/// `det b = sign · split sum`.
pub fn laplace_split_check(m: &IntMatrix, m1: usize, m2: usize) -> bool {
    let b = IntMatrix::from_fn(m1 + m2, m1 + m2, |i, j| {
        let e = m.get(i, j).clone();
        if j >= m1 && i % 2 == 1 {
            -e
        } else {
            e
        }
    });
    det(&b).unwrap() == laplace_split_sum(m, m1, m2) * laplace_sign(m1, m2)
}

/// All increasing `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in from..n {
            cur.push(x);
            go(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn empty_blocks() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![5, 3]]);
        assert!(laplace_split_check(&m, 2, 0));
        assert!(laplace_split_check(&m, 0, 2));
    }

    #[test]
    fn identity_case() {
        assert!(laplace_split_check(&IntMatrix::identity(4), 2, 2));
    }

    #[test]
    fn random_splits() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m1 = rng.gen_range(0..=4);
            let m2 = rng.gen_range(0..=4);
            let m = IntMatrix::from_fn(m1 + m2, m1 + m2, |_, _| BigInt::from(rng.gen_range(-5..=5)));
            assert!(laplace_split_check(&m, m1, m2), "m1={m1} m2={m2}");
        }
    }

    #[test]
    fn one_plus_one_sign() {
        // both blocks of odd width: the sign is -1
        assert_eq!(laplace_sign(1, 1), -1);
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
