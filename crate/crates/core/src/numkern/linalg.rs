use rug::Float;

use super::BigComplex;
use crate::{Error, Result};

/// Guard bits granted to the null-vector residual bound.
pub const NULL_VECTOR_GUARD_BITS: u32 = 64;

#[derive(Clone, Debug)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigComplex>,
}

/// Null vector plus the number of pivots that were treated as zero.
#[derive(Clone, Debug)]
pub struct NullVector {
    pub v: Vec<BigComplex>,
    pub defect: usize,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize, prec: u32) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![BigComplex::zero(prec); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigComplex>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        DenseMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigComplex {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigComplex) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigComplex] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[BigComplex]) -> Vec<BigComplex> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = BigComplex::zero(v.first().map_or(64, |x| x.prec()));
                for (a, x) in self.row(i).iter().zip(v) {
                    acc += &(a * x);
                }
                acc
            })
            .collect()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> Float {
        let prec = self.data.first().map_or(64, |x| x.prec());
        let mut s = Float::new(prec);
        for x in &self.data {
            s += x.norm_sqr();
        }
        s.sqrt()
    }
}

pub fn vec_norm(v: &[BigComplex]) -> Float {
    let prec = v.first().map_or(64, |x| x.prec());
    let mut s = Float::new(prec);
    for x in v {
        s += x.norm_sqr();
    }
    s.sqrt()
}

struct Elimination {
    a: Vec<Vec<BigComplex>>,
    col_perm: Vec<usize>,
    pivots_log2: Vec<f64>,
}

/// Gaussian elimination with complete pivoting on the first `steps` pivots.
fn eliminate(m: &DenseMatrix, steps: usize) -> Elimination {
    let mut a: Vec<Vec<BigComplex>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let mut col_perm: Vec<usize> = (0..m.cols).collect();
    let mut pivots_log2 = Vec::with_capacity(steps);
    for k in 0..steps {
        let (mut bi, mut bj, mut best) = (k, k, f64::NEG_INFINITY);
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                let g = x.mag_log2();
                if g > best {
                    best = g;
                    bi = i;
                    bj = j;
                }
            }
        }
        pivots_log2.push(best);
        a.swap(k, bi);
        if bj != k {
            for row in a.iter_mut() {
                row.swap(k, bj);
            }
            col_perm.swap(k, bj);
        }
        if best == f64::NEG_INFINITY {
            continue;
        }
        let inv = a[k][k].recip();
        let (top, bottom) = a.split_at_mut(k + 1);
        let prow = &top[k];
        for row in bottom.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let f = &row[k] * &inv;
            for j in k + 1..prow.len() {
                let t = &f * &prow[j];
                row[j] -= &t;
            }
            row[k] = BigComplex::zero(f.prec());
        }
    }
    Elimination { a, col_perm, pivots_log2 }
}

/// Count of pivots below 2^{-prec/2} relative to the largest.
fn count_defects(pivots_log2: &[f64], prec: u32) -> usize {
    let top = pivots_log2.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY {
        return pivots_log2.len();
    }
    let thresh = top - prec as f64 / 2.0;
    pivots_log2.iter().filter(|&&g| g < thresh).count()
}

/// Nonzero v with Mv ≈ 0 for an r × (r+1) matrix.
///
/// A single negligible pivot is tolerated and reported through `defect`;
/// two or more are a rank deficiency.
pub fn null_vector(m: &DenseMatrix) -> Result<NullVector> {
    if m.cols != m.rows + 1 {
        return Err(Error::Precondition(format!("null_vector needs cols = rows + 1, got {}x{}", m.rows, m.cols)));
    }
    let prec = m.data.first().map_or(64, |x| x.prec());
    let r = m.rows;
    let el = eliminate(m, r);
    let defect = count_defects(&el.pivots_log2, prec);
    if defect >= 2 {
        return Err(Error::NumericalRankDeficiency { defects: defect });
    }
    // Complete pivoting pushes negligible pivots to the end.
    let rank = r - defect;
    let n = m.cols;
    let mut x = vec![BigComplex::zero(prec); n];
    x[rank] = BigComplex::one(prec);
    for k in (0..rank).rev() {
        let mut s = BigComplex::zero(prec);
        for j in k + 1..n {
            if !x[j].is_zero() {
                s += &(&el.a[k][j] * &x[j]);
            }
        }
        x[k] = -(&s / &el.a[k][k]);
    }
    let mut v = vec![BigComplex::zero(prec); n];
    for (pos, &col) in el.col_perm.iter().enumerate() {
        v[col] = x[pos].clone();
    }
    Ok(NullVector { v, defect })
}

/// Solves the square system M x = b.
pub fn solve(m: &DenseMatrix, b: &[BigComplex]) -> Result<Vec<BigComplex>> {
    if m.rows != m.cols || b.len() != m.rows {
        return Err(Error::Precondition("solve needs a square system".into()));
    }
    let n = m.rows;
    let prec = m.data.first().map_or(64, |x| x.prec());
    let mut aug = DenseMatrix::zeros(n, n + 1, prec);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n, -&b[i]);
    }
    // Pivot only within the first n columns so the right-hand side stays last.
    let mut a: Vec<Vec<BigComplex>> = (0..n).map(|i| aug.row(i).to_vec()).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let (mut bi, mut bj, mut best) = (k, k, f64::NEG_INFINITY);
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().take(n).skip(k) {
                let g = x.mag_log2();
                if g > best {
                    best = g;
                    bi = i;
                    bj = j;
                }
            }
        }
        if best == f64::NEG_INFINITY {
            return Err(Error::SingularJacobian);
        }
        pivots.push(best);
        a.swap(k, bi);
        for row in a.iter_mut() {
            row.swap(k, bj);
        }
        perm.swap(k, bj);
        let inv = a[k][k].recip();
        let (top, bottom) = a.split_at_mut(k + 1);
        let prow = &top[k];
        for row in bottom.iter_mut() {
            let f = &row[k] * &inv;
            for j in k + 1..=n {
                let t = &f * &prow[j];
                row[j] -= &t;
            }
        }
    }
    if count_defects(&pivots, prec) > 0 {
        return Err(Error::SingularJacobian);
    }
    let mut x = vec![BigComplex::zero(prec); n];
    for k in (0..n).rev() {
        let mut s = a[k][n].clone();
        for j in k + 1..n {
            s += &(&a[k][j] * &x[j]);
        }
        x[k] = -(&s / &a[k][k]);
    }
    let mut out = vec![BigComplex::zero(prec); n];
    for (pos, &col) in perm.iter().enumerate() {
        out[col] = x[pos].clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    fn c(re: f64) -> BigComplex {
        BigComplex::from_f64(P, re, 0.0)
    }

    #[test]
    fn one_by_two() {
        let m = DenseMatrix::from_rows(vec![vec![c(1.0), c(-1.0)]]);
        let nv = null_vector(&m).unwrap();
        assert_eq!(nv.defect, 0);
        let ratio = &nv.v[0] / &nv.v[1];
        assert!((ratio.to_c64().re - 1.0).abs() < 1e-70);
    }

    #[test]
    fn identical_columns_flagged() {
        // Columns 0 and 1 equal, so rank 1 in a 2x3 matrix: one defect.
        let m = DenseMatrix::from_rows(vec![vec![c(1.0), c(1.0), c(2.0)], vec![c(3.0), c(3.0), c(6.0)]]);
        match null_vector(&m) {
            Ok(nv) => {
                assert_eq!(nv.defect, 1);
                let r = m.mul_vec(&nv.v);
                assert!(vec_norm(&r).to_f64() < 1e-60);
                assert!(vec_norm(&nv.v).to_f64() > 0.0);
            }
            Err(Error::NumericalRankDeficiency { .. }) => {}
            Err(e) => panic!("unexpected {e}"),
        }
        let z = DenseMatrix::from_rows(vec![vec![c(0.0), c(0.0), c(0.0)], vec![c(0.0), c(0.0), c(0.0)]]);
        assert!(matches!(null_vector(&z), Err(Error::NumericalRankDeficiency { .. })));
    }

    #[test]
    fn square_solve() {
        let m = DenseMatrix::from_rows(vec![vec![c(2.0), c(1.0)], vec![c(1.0), c(3.0)]]);
        let x = solve(&m, &[c(3.0), c(5.0)]).unwrap();
        assert!((x[0].to_c64().re - 0.8).abs() < 1e-15);
        assert!((x[1].to_c64().re - 1.4).abs() < 1e-15);
        let s = DenseMatrix::from_rows(vec![vec![c(1.0), c(2.0)], vec![c(2.0), c(4.0)]]);
        assert!(matches!(solve(&s, &[c(1.0), c(1.0)]), Err(Error::SingularJacobian)));
    }
}
