//! Index sets, Grassmannian permutations and Young diagrams.
//!
//! All labels are 1-based. The basis vector `v_I` of the weight space
//! carries `v_1` in the tensor slots of `I_1`; sorting the words
//! lexicographically is the same as sorting `I_1` as a k-subset.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("inconsistent shape: {0}")]
    InconsistentShape(String),
}

/// `I = (I_1, I_2)` with `|I_1| = k`; `I_2` is the complement in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet {
    pub k: usize,
    pub n: usize,
    #[serde(rename = "I1")]
    pub i1: Vec<usize>,
}

impl IndexSet {
    pub fn new(n: usize, mut i1: Vec<usize>) -> Result<IndexSet, CombError> {
        i1.sort_unstable();
        i1.dedup();
        if i1.iter().any(|&a| a == 0 || a > n) {
            return Err(CombError::BadRange(format!("{i1:?} not inside 1..={n}")));
        }
        Ok(IndexSet { k: i1.len(), n, i1 })
    }

    pub fn i2(&self) -> Vec<usize> {
        (1..=self.n).filter(|a| !self.i1.contains(a)).collect()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.i1.binary_search(&a).is_ok()
    }

    /// Tensor word, `1` for slots in `I_1`.
    pub fn word(&self) -> Vec<u8> {
        (1..=self.n).map(|a| if self.contains(a) { 1 } else { 2 }).collect()
    }

    /// Position in `enumerate_index_sets(k, n)`.
    pub fn rank(&self) -> usize {
        // colex-free direct count: subsets lexicographically smaller
        let mut r = 0;
        let mut prev = 0;
        for (j, &a) in self.i1.iter().enumerate() {
            for b in prev + 1..a {
                r += binomial(self.n - b, self.k - j - 1);
            }
            prev = a;
        }
        r
    }

    pub fn grass_perm(&self) -> GrassPerm {
        let mut v = self.i1.clone();
        v.extend(self.i2());
        GrassPerm { k: self.k, values: v }
    }

    pub fn partition(&self) -> Partition {
        self.grass_perm().partition()
    }

    /// Index set with `a` and `b` exchanged between the two parts.
    pub fn swap(&self, a: usize, b: usize) -> IndexSet {
        let mut v: Vec<usize> = self.i1.iter().map(|&x| if x == a { b } else if x == b { a } else { x }).collect();
        v.sort_unstable();
        IndexSet { k: self.k, n: self.n, i1: v }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// All `C(n,k)` index sets in the canonical basis order.
pub fn enumerate_index_sets(k: usize, n: usize) -> Result<Vec<IndexSet>, CombError> {
    if k > n || n > 12 {
        return Err(CombError::BadRange(format!("(k,n)=({k},{n})")));
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(IndexSet { k, n, i1: cur.clone() });
        // next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i) {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Permutation of `1..=n`, increasing on `1..=k` and on `k+1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassPerm {
    pub k: usize,
    pub values: Vec<usize>,
}

impl GrassPerm {
    pub fn new(k: usize, values: Vec<usize>) -> Result<GrassPerm, CombError> {
        let n = values.len();
        if k > n || !is_permutation(&values) {
            return Err(CombError::BadRange(format!("{values:?} is not a permutation with k={k}")));
        }
        let inc = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
        if !inc(&values[..k]) || !inc(&values[k..]) {
            return Err(CombError::InconsistentShape(format!("{values:?} has a descent away from {k}")));
        }
        Ok(GrassPerm { k, values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn index_set(&self) -> IndexSet {
        IndexSet { k: self.k, n: self.n(), i1: self.values[..self.k].to_vec() }
    }

    /// `λ_j = σ(k−j+1) − k + j − 1`.
    pub fn partition(&self) -> Partition {
        let k = self.k;
        Partition::new((1..=k).map(|j| self.values[k - j] + j - k - 1).collect())
    }
}

pub fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x == 0 || x > v.len() || seen[x - 1] {
            return false;
        }
        seen[x - 1] = true;
    }
    true
}

/// Weakly decreasing parts; trailing zeros are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Partition {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing: {parts:?}");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_j` for `1 ≤ j`, zero past the stored length.
    pub fn part(&self, j: usize) -> usize {
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `k`.
    pub fn padded(&self, k: usize) -> Vec<usize> {
        (1..=k).map(|j| self.part(j)).collect()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn fits(&self, k: usize, n: usize) -> bool {
        self.parts.len() <= k && self.part(1) <= n - k
    }

    /// Complement in the `k × (n−k)` box.
    pub fn complement(&self, k: usize, n: usize) -> Partition {
        Partition::new((1..=k).map(|j| n - k - self.part(k + 1 - j)).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(1);
        Partition::new((1..=m).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// `σ^λ(j) = λ_{k−j+1} + j` on `1..=k`, complement increasing after.
    pub fn grass_perm(&self, k: usize, n: usize) -> Result<GrassPerm, CombError> {
        if !self.fits(k, n) {
            return Err(CombError::InconsistentShape(format!("{:?} not inside {k}x{}", self.parts, n - k)));
        }
        let first: Vec<usize> = (1..=k).map(|j| self.part(k - j + 1) + j).collect();
        let mut v = first.clone();
        v.extend((1..=n).filter(|a| !first.contains(a)));
        GrassPerm::new(k, v)
    }

    /// Same permutation read off the boundary path of the diagram,
    /// walking from the SW corner to the NE corner of the box.
    pub fn grass_perm_by_path(&self, k: usize, n: usize) -> Result<GrassPerm, CombError> {
        if !self.fits(k, n) {
            return Err(CombError::InconsistentShape(format!("{:?} not inside {k}x{}", self.parts, n - k)));
        }
        let mut north = Vec::new();
        let mut east = Vec::new();
        let (mut x, mut row) = (0usize, k);
        for step in 1..=n {
            // at height k-row, the boundary row above has length λ_row
            let can_north = row > 0 && x >= self.part(row);
            if can_north && north.len() < k {
                north.push(step);
                row -= 1;
            } else {
                east.push(step);
                x += 1;
            }
        }
        north.extend(east);
        GrassPerm::new(k, north)
    }

    pub fn index_set(&self, k: usize, n: usize) -> Result<IndexSet, CombError> {
        Ok(self.grass_perm(k, n)?.index_set())
    }
}

/// Any of the three labels of a basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Label {
    Index(IndexSet),
    Perm(GrassPerm),
    Diagram { partition: Partition, k: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelKind {
    Index,
    Perm,
    Diagram,
}

pub fn convert(label: &Label, target: LabelKind) -> Result<Label, CombError> {
    let idx = match label {
        Label::Index(i) => i.clone(),
        Label::Perm(p) => p.index_set(),
        Label::Diagram { partition, k, n } => partition.index_set(*k, *n)?,
    };
    Ok(match target {
        LabelKind::Index => Label::Index(idx),
        LabelKind::Perm => Label::Perm(idx.grass_perm()),
        LabelKind::Diagram => Label::Diagram { partition: idx.partition(), k: idx.k, n: idx.n },
    })
}

/// Longest element `σ_0 = (n, n−1, …, 1)`.
pub fn sigma0(n: usize) -> Vec<usize> {
    (1..=n).rev().collect()
}

/// Indices for `z ↦ z_σ`: slot `i` receives `z_{σ(i)}` (1-based values).
pub fn permute_tuple<T: Clone>(sigma: &[usize], vars: &[T]) -> Vec<T> {
    sigma.iter().map(|&s| vars[s - 1].clone()).collect()
}

pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x - 1]).collect()
}

pub fn inverse(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x - 1] = i + 1;
    }
    out
}

pub fn length(a: &[usize]) -> usize {
    let mut l = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] > a[j] {
                l += 1;
            }
        }
    }
    l
}

/// A reduced word `[i_1, …, i_l]` with `w = s_{i_1} ⋯ s_{i_l}`, where `s_i`
/// acting on the right swaps positions `i, i+1`.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut v = w.to_vec();
    let mut word = Vec::new();
    // bubble sort from the right: w s_i swaps positions
    loop {
        match (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) {
            Some(i) => {
                v.swap(i, i + 1);
                word.push(i + 1);
            }
            None => break,
        }
    }
    word.reverse();
    word
}
