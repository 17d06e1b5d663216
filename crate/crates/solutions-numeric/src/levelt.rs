use combinatorics::{binomial, enumerate_index_sets};
use exact_algebra::{q, Check, Matrix, Poly, Ring, Q};
use num_traits::{ToPrimitive, Zero};
use std::sync::Arc;
use weight_ops::{dynamical_operator_in, weight_ring};

use crate::{Cx, NumError};

type QMat = Vec<Vec<Q>>;

/// `Ψ•(z; s) = Σ_m Ψ_m s^m`, `s = p2/p1`, at a rational point `z` and
/// rational `κ`; `A = X_1(z; ⊘)` and `B` is the coefficient of `s` in `X_1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LeveltSeries {
    pub k: usize,
    pub n: usize,
    pub z: Vec<Q>,
    pub kappa: Q,
    pub a: QMat,
    pub b: QMat,
    pub coeffs: Vec<QMat>,
}

fn zero_mat(d: usize) -> QMat {
    vec![vec![Q::zero(); d]; d]
}

fn mat_mul(x: &QMat, y: &QMat) -> QMat {
    let d = x.len();
    let mut out = zero_mat(d);
    for i in 0..d {
        for l in 0..d {
            if x[i][l].is_zero() {
                continue;
            }
            for j in 0..d {
                out[i][j] += &x[i][l] * &y[l][j];
            }
        }
    }
    out
}

/// Gaussian elimination over `ℚ`; `None` when singular.
fn solve(mut m: QMat, mut rhs: Vec<Q>) -> Option<Vec<Q>> {
    let d = rhs.len();
    for col in 0..d {
        let piv = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        let inv = m[col][col].recip();
        for r in 0..d {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..d {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
            let t = &f * &rhs[col];
            rhs[r] -= t;
        }
    }
    Some((0..d).map(|i| &rhs[i] / &m[i][i]).collect())
}

fn x1_values(k: usize, n: usize, z: &[Q], kappa: &Q) -> Result<(QMat, QMat), NumError> {
    let ring = weight_ring(n);
    let x1 = dynamical_operator_in(&ring, n, k, 1);
    let ip2 = ring.index("p2").expect("p2");
    let at = |p2: Q, p: &Poly| {
        let mut vals: Vec<Q> = z.to_vec();
        vals.extend([kappa.clone(), q(1), p2]);
        p.eval(&vals).map_err(|e| NumError::Algebra(e.to_string()))
    };
    let d = x1.rows();
    let (mut a, mut b) = (zero_mat(d), zero_mat(d));
    for i in 0..d {
        for j in 0..d {
            let e = x1.get(i, j);
            a[i][j] = at(q(0), e)?;
            if let Some(c) = e.coefficients_in(ip2).get(&1) {
                b[i][j] = at(q(1), c)?;
            }
        }
    }
    Ok((a, b))
}

fn trace_x2(s: &LeveltSeries) -> Result<Q, NumError> {
    let ring = weight_ring(s.n);
    let x2 = dynamical_operator_in(&ring, s.n, s.k, 2);
    let mut vals: Vec<Q> = s.z.clone();
    vals.extend([s.kappa.clone(), q(1), q(0)]);
    (0..x2.rows()).map(|i| x2.get(i, i).eval(&vals).map_err(|e| NumError::Algebra(e.to_string()))).sum()
}

/// Solve `AΨ_m − Ψ_m A + mκ Ψ_m = −B Ψ_{m−1}` for `m = 1..=order`, `Ψ_0 = Id`.
pub fn levelt_series(k: usize, n: usize, order: usize, z: &[Q], kappa: &Q) -> Result<LeveltSeries, NumError> {
    if k > n || z.len() != n || order > 20 || kappa.is_zero() {
        return Err(NumError::BadRange(format!("(k,n,N)=({k},{n},{order})")));
    }
    let basis = enumerate_index_sets(k, n).map_err(|e| NumError::BadRange(e.to_string()))?;
    let energy: Vec<Q> = basis.iter().map(|i| i.i1.iter().map(|&a| z[a - 1].clone()).sum()).collect();
    for m in 1..=order {
        for (x, ex) in energy.iter().enumerate() {
            for (y, ey) in energy.iter().enumerate() {
                if (ex - ey + kappa * q(m as i64)).is_zero() {
                    return Err(NumError::ResonantZ(format!("E_{x} − E_{y} + {m}κ = 0")));
                }
            }
        }
    }
    let (a, b) = x1_values(k, n, z, kappa)?;
    let d = a.len();
    let mut id = zero_mat(d);
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = q(1);
    }
    let mut coeffs = vec![id];
    for m in 1..=order {
        let c = mat_mul(&b, &coeffs[m - 1]);
        let shift = kappa * q(m as i64);
        let mut sys = vec![vec![Q::zero(); d * d]; d * d];
        let mut rhs = vec![Q::zero(); d * d];
        for r in 0..d {
            for cc in 0..d {
                let row = r * d + cc;
                rhs[row] = -c[r][cc].clone();
                for l in 0..d {
                    sys[row][l * d + cc] += &a[r][l];
                    sys[row][r * d + l] -= &a[l][cc];
                }
                sys[row][row] += &shift;
            }
        }
        let v = solve(sys, rhs).ok_or_else(|| NumError::ResonantZ(format!("singular system at order {m}")))?;
        coeffs.push((0..d).map(|r| v[r * d..(r + 1) * d].to_vec()).collect());
    }
    Ok(LeveltSeries { k, n, z: z.to_vec(), kappa: kappa.clone(), a, b, coeffs })
}

impl LeveltSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn s_ring() -> Arc<Ring> {
        Ring::new(&[("s", false)])
    }

    /// Truncated `Ψ•(s)` as a matrix over `ℚ[s]`.
    pub fn truncated(&self) -> Matrix {
        let r = Self::s_ring();
        let s = Poly::var_idx(&r, 0);
        let d = self.a.len();
        Matrix::from_fn(&r, d, d, |i, j| {
            self.coeffs.iter().enumerate().fold(Poly::zero(&r), |acc, (m, c)| &acc + &s.pow(m as u32).scale(&c[i][j]))
        })
    }

    /// `−κ s ∂_s Ψ• + Ψ• X_1(z;⊘) − X_1(z;s) Ψ•` through order `N`, with
    /// `X_1(z;s)` taken straight from the symbolic dynamical operator.
    pub fn residual_check(&self) -> Check {
        let r = Self::s_ring();
        let wr = weight_ring(self.n);
        let x1 = dynamical_operator_in(&wr, self.n, self.k, 1);
        let mut images: Vec<Poly> = self.z.iter().map(|v| Poly::constant(&r, v.clone())).collect();
        images.extend([Poly::constant(&r, self.kappa.clone()), Poly::one(&r), Poly::var_idx(&r, 0)]);
        let xs = match x1.try_map(|p| p.subs(&images)) {
            Ok(m) => m,
            Err(e) => return Check::new(self.id("levelt-residual"), "thmlev", false, e.to_string()),
        };
        let a = Matrix::from_fn(&r, self.a.len(), self.a.len(), |i, j| Poly::constant(&r, self.a[i][j].clone()));
        let psi = self.truncated();
        let kp = Poly::constant(&r, self.kappa.clone());
        let res = psi.map(|p| -&(&p.euler(0) * &kp)).add(&psi.mul(&a)).sub(&xs.mul(&psi));
        let n = self.order() as i32;
        let bad = (0..res.rows())
            .flat_map(|i| (0..res.cols()).map(move |j| (i, j)))
            .find(|&(i, j)| !res.get(i, j).truncate_in(0, n).is_zero());
        let detail = match bad {
            None => format!("zero through s^{n}"),
            Some((i, j)) => format!("entry ({i},{j}) = {}", res.get(i, j).truncate_in(0, n)),
        };
        Check::new(self.id("levelt-residual"), "thmlev", bad.is_none(), detail)
    }

    /// `det Ψ• ≡ 1 mod s^{N+1}`, and `tr X_1(z;⊘) = d_1 Σz`, `tr X_2(z;⊘) = d_2 Σz`,
    /// which together give `det Ψ̂ = p1^{d1Σz/κ} p2^{d2Σz/κ}`.
    pub fn det_check(&self) -> Check {
        let n = self.order() as i32;
        let det = match self.truncated().det() {
            Ok(d) => d.truncate_in(0, n),
            Err(e) => return Check::new(self.id("levelt-det"), "thmlev", false, e.to_string()),
        };
        let unit = det.is_one();
        let sum_z: Q = self.z.iter().sum();
        let tr_a: Q = (0..self.a.len()).map(|i| self.a[i][i].clone()).sum();
        let total = q(binomial(self.n, self.k) as i64);
        let d1 = q(if self.k == 0 { 0 } else { binomial(self.n - 1, self.k - 1) as i64 });
        let d2 = &total - &d1;
        let tr_b = match trace_x2(self) {
            Ok(t) => t,
            Err(e) => return Check::new(self.id("levelt-det"), "thmlev", false, e.to_string()),
        };
        let tr_ok = tr_a == &d1 * &sum_z && tr_b == &d2 * &sum_z;
        Check::new(
            self.id("levelt-det"),
            "thmlev",
            unit && tr_ok,
            format!("det Ψ• mod s^{} = {det}; tr X1(⊘) = {tr_a}; tr X2(⊘) = {tr_b}", n + 1),
        )
    }

    /// Numeric value of the truncated series at `s`.
    pub fn eval(&self, s: Cx) -> Vec<Vec<Cx>> {
        let d = self.a.len();
        let mut out = vec![vec![Cx::new(0.0, 0.0); d]; d];
        let mut pw = Cx::new(1.0, 0.0);
        for c in &self.coeffs {
            for i in 0..d {
                for j in 0..d {
                    out[i][j] += pw * c[i][j].to_f64().unwrap_or(f64::NAN);
                }
            }
            pw *= s;
        }
        out
    }

    fn id(&self, what: &str) -> String {
        format!("{what} ({},{}) N={}", self.k, self.n, self.order())
    }
}
