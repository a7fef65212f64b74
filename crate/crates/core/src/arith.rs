//! Exact binomial arithmetic.

/// `C(n, k)` with `C(n, k) = 0` for `k > n` and `C(n, 0) = 1`; `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(n, k)` for arguments where overflow is impossible by construction (`n ≤ 64`).
pub(crate) fn small_binomial(n: usize, k: usize) -> u64 {
    debug_assert!(n <= 64);
    binomial(n as u64, k as u64).expect("C(n, k) fits in u64 for n <= 64")
}

/// Largest `r` with `C(r, 2) ≤ x`.
pub(crate) fn max_r_choose2_le(x: u64) -> u64 {
    // isqrt start, then fix up
    let mut r = (((8.0 * x as f64 + 1.0).sqrt() + 1.0) / 2.0) as u64;
    while r > 0 && (r as u128) * (r as u128 - 1) / 2 > x as u128 {
        r -= 1;
    }
    while ((r + 1) as u128) * (r as u128) / 2 <= x as u128 {
        r += 1;
    }
    r
}
