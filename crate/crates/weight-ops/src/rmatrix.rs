use std::sync::Arc;

use exact_algebra::{Matrix, Poly, Ring};

/// `R(u) = P + u e11⊗e22` on `ℂ²⊗ℂ²`, basis `v1v1, v1v2, v2v1, v2v2`.
pub fn r_matrix(u: &Poly) -> Matrix {
    let r = u.ring().clone();
    let one = Poly::one(&r);
    let mut m = Matrix::zeros(&r, 4, 4);
    m.set(0, 0, one.clone());
    m.set(1, 1, u.clone());
    m.set(1, 2, one.clone());
    m.set(2, 1, one.clone());
    m.set(3, 3, one);
    m
}

/// `R(u)^{(i,j)}` on the full `2^n`-dimensional tensor space; words are
/// ordered lexicographically with `v1 < v2` (bit 0 of slot a = `v1`).
pub fn r_matrix_full(ring: &Arc<Ring>, n: usize, i: usize, j: usize, u: &Poly) -> Matrix {
    let dim = 1usize << n;
    let mut m = Matrix::zeros(ring, dim, dim);
    // word index: slot a (1-based) is the bit at position n-a, 0 = v1
    let bit = |w: usize, a: usize| (w >> (n - a)) & 1;
    for w in 0..dim {
        let (x, y) = (bit(w, i), bit(w, j));
        let swapped = w ^ (((x ^ y) << (n - i)) | ((x ^ y) << (n - j)));
        match (x, y) {
            (0, 1) => {
                m.add_at(w, w, u);
                m.add_at(swapped, w, &Poly::one(ring));
            }
            _ => m.add_at(swapped, w, &Poly::one(ring)),
        }
    }
    m
}
