use num_bigint::BigInt;

use super::hnf::HnfForm;
use crate::arith::int::divisors;
use crate::error::{Error, Result};
use crate::matrix::IntMat;

/// Ordered factorizations `m = d₁·d₂·…·dₙ`, lexicographic.
pub fn ordered_factorizations(n: usize, m: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return if m == 1 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for d in divisors(m) {
        for mut rest in ordered_factorizations(n - 1, m / d) {
            rest.insert(0, d);
            out.push(rest);
        }
    }
    out
}

/// Number of sublattices of Zⁿ of index m: Σ over diagonals of ∏ dᵢ^(i−1).
pub fn count_sublattices(n: usize, m: u64) -> u128 {
    ordered_factorizations(n, m)
        .iter()
        .map(|d| d.iter().enumerate().map(|(i, &x)| (x as u128).pow(i as u32)).product::<u128>())
        .sum()
}

/// Every sublattice of Zⁿ of index `m`, as Hermite forms ordered by
/// diagonal and then by the reduced entries. Fails if the count exceeds
/// `cap`.
pub fn enumerate_sublattices(n: usize, m: u64, cap: u64) -> Result<Vec<HnfForm>> {
    let total = count_sublattices(n, m);
    if total > cap as u128 {
        return Err(Error::CapExceeded { cap, resume: None });
    }
    let mut out = Vec::with_capacity(total as usize);
    for diag in ordered_factorizations(n, m) {
        // free entries: row i, columns j < i, each in [0, d_i)
        let slots: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
        let mut vals = vec![0u64; slots.len()];
        loop {
            let mut h = IntMat::zeros(n, n);
            for (i, &d) in diag.iter().enumerate() {
                h.set(i, i, BigInt::from(d));
            }
            for (k, &(i, j)) in slots.iter().enumerate() {
                h.set(i, j, BigInt::from(vals[k]));
            }
            out.push(HnfForm::from_matrix_unchecked(&h));
            // odometer, last slot fastest
            let mut k = slots.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                vals[k] += 1;
                if vals[k] < diag[slots[k].0] {
                    break;
                }
                vals[k] = 0;
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if k == usize::MAX || slots.is_empty() {
                break;
            }
        }
    }
    Ok(out)
}
