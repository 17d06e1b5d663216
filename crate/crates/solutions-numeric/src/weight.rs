use combinatorics::IndexSet;

use crate::{Cx, NumError};

/// `U_I(t; z) = ∏_a (∏_{c<i_a}(t_a − z_c) ∏_{b>a} 1/(t_b − t_a))`.
pub fn u_function(idx: &IndexSet, t: &[Cx], z: &[Cx]) -> Result<Cx, NumError> {
    let k = idx.i1.len();
    if t.len() != k || z.len() != idx.n {
        return Err(NumError::BadRange(format!("{} t-values and {} z-values for {idx:?}", t.len(), z.len())));
    }
    let mut acc = Cx::new(1.0, 0.0);
    for a in 0..k {
        for zc in &z[..idx.i1[a] - 1] {
            acc *= t[a] - zc;
        }
        for b in a + 1..k {
            let d = t[b] - t[a];
            if d == Cx::new(0.0, 0.0) {
                return Err(NumError::CoincidingT);
            }
            acc /= d;
        }
    }
    Ok(acc)
}

/// `W_I = Σ_{σ∈S_k} U_I(t_σ)`, polynomial in `t` after symmetrization.
pub fn weight_function(idx: &IndexSet, t: &[Cx], z: &[Cx]) -> Result<Cx, NumError> {
    let mut perm: Vec<usize> = (0..t.len()).collect();
    let mut acc = Cx::new(0.0, 0.0);
    loop {
        let tp: Vec<Cx> = perm.iter().map(|&i| t[i]).collect();
        acc += u_function(idx, &tp, z)?;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(acc)
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
