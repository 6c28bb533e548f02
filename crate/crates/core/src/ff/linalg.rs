//! Row reduction over F_q on coordinate vectors.

use super::{BaseField, FiniteField};

/// Reduced row echelon form in place. Zero rows are dropped; returns the
/// pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<u64>>, f: &BaseField) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = f.mul(v, &inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..cols {
                    let t = f.mul(&factor, &rows[r][j]);
                    rows[i][j] = f.sub(&rows[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Reduces `v` against an RREF basis; zero result iff `v` is in the span.
pub fn reduce(v: &[u64], basis: &[Vec<u64>], pivots: &[usize], f: &BaseField) -> Vec<u64> {
    let mut out = v.to_vec();
    for (row, &c) in basis.iter().zip(pivots) {
        let factor = out[c];
        if factor != 0 {
            for (o, b) in out.iter_mut().zip(row) {
                *o = f.sub(o, &f.mul(&factor, b));
            }
        }
    }
    out
}

/// Kernel of the linear map whose column `i` is the image of the `i`-th unit
/// vector. The basis is returned in RREF.
pub fn kernel(columns: &[Vec<u64>], f: &BaseField) -> Vec<Vec<u64>> {
    let n = columns.len();
    let m = columns.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<u64>> = (0..m).map(|r| (0..n).map(|c| columns[c][r]).collect()).collect();
    let pivots = rref(&mut rows, f);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            v[pc] = f.neg(&row[free]);
        }
        basis.push(v);
    }
    rref(&mut basis, f);
    basis
}
