use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::poly::Poly;
use crate::rational::RestrictedRational;
use crate::ring::Ring;

/// Dense matrix of polynomials over one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in self.to_strings() {
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Matrix {
        Matrix { ring: ring.clone(), rows, cols, data: vec![Poly::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Matrix {
        Matrix::scalar(ring, n, &Poly::one(ring))
    }

    pub fn scalar(ring: &Arc<Ring>, n: usize, c: &Poly) -> Matrix {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn(ring: &Arc<Ring>, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Poly) -> Matrix {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { ring: ring.clone(), rows, cols, data }
    }

    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<Poly>>) -> Result<Matrix, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(AlgebraError::ShapeMismatch);
        }
        Ok(Matrix { ring: ring.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Parse a matrix given row-wise in the canonical text grammar.
    pub fn parse(ring: &Arc<Ring>, rows: &[&[&str]]) -> Result<Matrix, AlgebraError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| Poly::parse(ring, s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Poly) {
        self.data[i * self.cols + j] += v;
    }

    pub fn try_mul(&self, o: &Matrix) -> Result<Matrix, AlgebraError> {
        if self.cols != o.rows {
            return Err(AlgebraError::ShapeMismatch);
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        self.try_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) + o.get(i, j))
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) - o.get(i, j))
    }

    pub fn scale(&self, c: &Poly) -> Matrix {
        self.map(|p| p * c)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Matrix {
        let data: Vec<Poly> = self.data.iter().map(f).collect();
        let ring = data.first().map_or_else(|| self.ring.clone(), |p| p.ring().clone());
        Matrix { ring, rows: self.rows, cols: self.cols, data }
    }

    pub fn try_map(&self, f: impl Fn(&Poly) -> Result<Poly, AlgebraError>) -> Result<Matrix, AlgebraError> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        let ring = data.first().map_or_else(|| self.ring.clone(), |p| p.ring().clone());
        Ok(Matrix { ring, rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn trace(&self) -> Poly {
        let mut t = Poly::zero(&self.ring);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Cofactor expansion up to size 4, fraction-free elimination above.
    pub fn det(&self) -> Result<Poly, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NonSquare(self.rows, self.cols));
        }
        if self.rows <= 4 {
            let idx: Vec<usize> = (0..self.rows).collect();
            Ok(self.cofactor(&idx, 0))
        } else {
            Ok(self.bareiss())
        }
    }

    fn cofactor(&self, cols: &[usize], row: usize) -> Poly {
        if cols.is_empty() {
            return Poly::one(&self.ring);
        }
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = Poly::zero(&self.ring);
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = a * &self.cofactor(&rest, row + 1);
            if k % 2 == 0 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        acc
    }

    fn bareiss(&self) -> Poly {
        let n = self.rows;
        let mut a: Vec<Vec<Poly>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign = false;
        let mut prev = Poly::one(&self.ring);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return Poly::zero(&self.ring),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = t.div_exact(&prev).expect("Bareiss step must divide exactly");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect()
    }

    /// Inverse of a unitriangular (upper or lower) matrix.
    pub fn unitriangular_inverse(&self) -> Result<Matrix, AlgebraError> {
        let n = self.rows;
        if n != self.cols {
            return Err(AlgebraError::NonSquare(n, self.cols));
        }
        let upper = (0..n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()));
        let lower = (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j).is_zero()));
        if !(upper || lower) || (0..n).any(|i| !self.get(i, i).is_one()) {
            return Err(AlgebraError::ShapeMismatch);
        }
        let m = if upper { self.clone() } else { self.transpose() };
        // solve M X = I column by column, back substitution
        let mut x = Matrix::identity(&self.ring, n);
        for c in 0..n {
            for i in (0..n).rev() {
                let mut s = if i == c { Poly::one(&self.ring) } else { Poly::zero(&self.ring) };
                for k in i + 1..n {
                    let a = m.get(i, k);
                    if !a.is_zero() {
                        s -= &(a * x.get(k, c));
                    }
                }
                x.set(i, c, s);
            }
        }
        Ok(if upper { x } else { x.transpose() })
    }
}

/// Determinant of a matrix of restricted rational functions.
pub fn determinant_rr(m: &[Vec<RestrictedRational>]) -> Result<RestrictedRational, AlgebraError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::NonSquare(n, m.first().map_or(0, |r| r.len())));
    }
    if n == 0 {
        return Err(AlgebraError::ShapeMismatch);
    }
    let ring = m[0][0].ring().clone();
    if n <= 4 {
        return Ok(cofactor_rr(m, &(0..n).collect::<Vec<_>>(), 0, &ring));
    }
    // clear row denominators, eliminate fraction-free, divide back
    let mut rows = Vec::with_capacity(n);
    let mut scale = RestrictedRational::one(&ring);
    for r in m {
        let mut l = RestrictedRational::one(&ring);
        for e in r {
            for (f, mult) in e.denominator_factors() {
                let have = l.denominator_factors().find(|(g, _)| *g == f).map_or(0, |(_, k)| k);
                for _ in have..mult {
                    l = l.div_linear(&f.to_poly(&ring))?;
                }
            }
        }
        // l = 1 / D_row
        let d = l.denominator();
        let row: Vec<Poly> = r
            .iter()
            .map(|e| e.mul_poly(&d).to_poly().ok_or(AlgebraError::NotPolynomial))
            .collect::<Result<_, _>>()?;
        rows.push(row);
        scale = scale.mul(&l);
    }
    let pm = Matrix::from_rows(&ring, rows)?;
    Ok(RestrictedRational::from_poly(pm.det()?).mul(&scale))
}

fn cofactor_rr(m: &[Vec<RestrictedRational>], cols: &[usize], row: usize, ring: &Arc<Ring>) -> RestrictedRational {
    if cols.is_empty() {
        return RestrictedRational::one(ring);
    }
    let mut acc = RestrictedRational::zero(ring);
    for (k, &c) in cols.iter().enumerate() {
        let a = &m[row][c];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let t = a.mul(&cofactor_rr(m, &rest, row + 1, ring));
        acc = if k % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}
