//! Exact Gauss–Jordan elimination over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

/// One solution of `A x = b`, with free variables set to zero, or `None`
/// when the system is inconsistent. `rows` holds `A` row by row.
pub fn solve(
    mut rows: Vec<Vec<BigRational>>,
    mut rhs: Vec<BigRational>,
    cols: usize,
) -> Option<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut().skip(c) {
            *v *= &inv;
        }
        rhs[r] *= &inv;
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let (pivot_row, row) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (v, p) in row.iter_mut().zip(pivot_row).skip(c) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            let t = &f * &rhs[r];
            rhs[i] -= t;
        }
        pivots.push(c);
        r += 1;
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rhs[i].clone();
    }
    Some(x)
}
