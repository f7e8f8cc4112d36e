use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Table row `row[k]` for `k in 0..=n` of a triangle defined by
/// `T(n,k) = T(n-1,k-1) + w(n,k) T(n-1,k)`.
fn triangle(n: u32, weight: impl Fn(u32, u32) -> i64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m as usize + 1];
        for k in 1..=m as usize {
            let mut v = row[k - 1].clone();
            if k < row.len() {
                v += &row[k] * BigInt::from(weight(m, k as u32));
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// Stirling number of the second kind: partitions of `[n]` into `k` blocks.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    triangle(n, |_, k| k as i64)[k as usize].clone()
}

/// Unsigned Stirling number of the first kind: permutations of `[n]` with `k` cycles.
pub fn cycle_count(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    triangle(n, |m, _| m as i64 - 1)[k as usize].clone()
}

/// Signed Stirling number of the first kind, `s(n,k) = (-1)^(n-k) c(n,k)`.
pub fn stirling1_signed(n: u32, k: u32) -> BigInt {
    let c = cycle_count(n, k);
    if k <= n && (n - k) % 2 == 1 {
        -c
    } else {
        c
    }
}

pub fn bell(n: u32) -> BigInt {
    (0..=n).map(|k| stirling2(n, k)).sum()
}
