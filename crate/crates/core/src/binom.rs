//! Binomial coefficients in arbitrary precision via Pascal's rule.

use num_bigint::BigInt;
use num_traits::One;

/// Row `n` of Pascal's triangle: `[C(n,0), ..., C(n,n)]`.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        row = next_row(&row);
    }
    row
}

/// Rows `0..=max_n`, sharing the iterative construction.
pub fn binomial_rows(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::with_capacity(max_n + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=max_n {
        let next = next_row(&rows[n - 1]);
        rows.push(next);
    }
    rows
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    binomial_row(n).swap_remove(k)
}

fn next_row(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigInt::one());
    for w in row.windows(2) {
        next.push(&w[0] + &w[1]);
    }
    next.push(BigInt::one());
    next
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let row5: Vec<i64> = binomial_row(5).iter().map(|b| i64::try_from(b).unwrap()).collect();
        assert_eq!(row5, vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 7), BigInt::from(0));
    }

    #[test]
    fn rows_are_consistent() {
        let rows = binomial_rows(12);
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1);
            assert_eq!(row, &binomial_row(n));
        }
    }
}
