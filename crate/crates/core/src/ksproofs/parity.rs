//! Parity proofs as odd-weight vectors in the left kernel of the
//! basis-ray incidence matrix over GF(2).

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bits::BitVec;
use crate::systems::BasisTable;

/// Rows are bases, columns are rays.
#[derive(Clone, Debug)]
pub struct IncidenceMatrixGF2 {
    pub n_rays: usize,
    pub rows: Vec<BitVec>,
}

impl IncidenceMatrixGF2 {
    pub fn new(n_rays: usize, bases: &BasisTable) -> Self {
        let rows = bases
            .bases
            .iter()
            .map(|b| BitVec::from_indices(n_rays, b.iter().copied()))
            .collect();
        IncidenceMatrixGF2 { n_rays, rows }
    }

    pub fn n_bases(&self) -> usize {
        self.rows.len()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows.iter().map(BitVec::count_ones).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.n_rays];
        for r in &self.rows {
            for j in r.iter_ones() {
                w[j] += 1;
            }
        }
        w
    }

    /// One row per ray, indexed by basis.
    fn transpose(&self) -> Vec<BitVec> {
        let mut t = vec![BitVec::zeros(self.n_bases()); self.n_rays];
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter_ones() {
                t[j].set(i);
            }
        }
        t
    }

    /// `xᵀ M` for a set of bases `x`.
    pub fn left_multiply(&self, x: &BitVec) -> BitVec {
        let mut acc = BitVec::zeros(self.n_rays);
        for i in x.iter_ones() {
            acc.xor_assign(&self.rows[i]);
        }
        acc
    }
}

#[derive(Clone, Debug)]
pub struct ParityAnalysis {
    pub n_bases: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub odd_weight_exists: bool,
    pub proof_count: BigUint,
    pub kernel_basis: Vec<BitVec>,
}

pub fn parity_analysis(m: &IncidenceMatrixGF2) -> ParityAnalysis {
    let n = m.n_bases();
    let mut rows = m.transpose();
    // Reduced row echelon form of Mᵀ; its null space is the left kernel of M.
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let rank = pivots.len();
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let kernel_basis: Vec<BitVec> = (0..n)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = BitVec::zeros(n);
            v.set(free);
            for (row, &pc) in pivots.iter().enumerate() {
                if rows[row].get(free) {
                    v.set(pc);
                }
            }
            v
        })
        .collect();
    let kernel_dim = kernel_basis.len();
    let odd_weight_exists = kernel_basis.iter().any(|v| v.count_ones() % 2 == 1);
    let proof_count = if odd_weight_exists {
        BigUint::from(1u8) << (kernel_dim - 1)
    } else {
        BigUint::from(0u8)
    };
    ParityAnalysis {
        n_bases: n,
        rank,
        kernel_dim,
        odd_weight_exists,
        proof_count,
        kernel_basis,
    }
}

/// An odd set of bases in which every ray occurs an even number of times.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ParityProofCertificate {
    pub basis_indices: Vec<usize>,
}

/// Largest kernel dimension enumerated exhaustively.
pub const EXHAUSTIVE_KERNEL_DIM: usize = 20;

/// Up to `limit` parity proofs of weight at most `max_weight`, lightest first.
///
/// Small kernels are enumerated completely. Larger ones are sampled from
/// single kernel-basis vectors and sums of two, which is plenty for
/// producing certificates; the total count comes from [`ParityAnalysis`].
pub fn enumerate_parity_proofs(
    analysis: &ParityAnalysis,
    limit: usize,
    max_weight: usize,
) -> Vec<ParityProofCertificate> {
    if limit == 0 || !analysis.odd_weight_exists {
        return Vec::new();
    }
    let mut best = Best::new(limit, max_weight);
    let kb = &analysis.kernel_basis;
    if analysis.kernel_dim <= EXHAUSTIVE_KERNEL_DIM {
        let mut v = BitVec::zeros(analysis.n_bases);
        for step in 1u64..(1u64 << analysis.kernel_dim) {
            v.xor_assign(&kb[step.trailing_zeros() as usize]);
            best.offer(&v);
        }
    } else {
        for (i, a) in kb.iter().enumerate() {
            best.offer(a);
            for b in &kb[i + 1..] {
                let mut s = a.clone();
                s.xor_assign(b);
                best.offer(&s);
            }
        }
    }
    best.into_sorted()
}

struct Best {
    limit: usize,
    max_weight: usize,
    kept: BTreeSet<(usize, Vec<usize>)>,
}

impl Best {
    fn new(limit: usize, max_weight: usize) -> Self {
        Best {
            limit,
            max_weight,
            kept: BTreeSet::new(),
        }
    }

    fn offer(&mut self, v: &BitVec) {
        let w = v.count_ones();
        if w.is_multiple_of(2) || w > self.max_weight {
            return;
        }
        if self.kept.len() == self.limit {
            let worst = self.kept.last().map(|(w, _)| *w).unwrap_or(usize::MAX);
            if w > worst {
                return;
            }
        }
        self.kept.insert((w, v.iter_ones().collect()));
        if self.kept.len() > self.limit {
            self.kept.pop_last();
        }
    }

    fn into_sorted(self) -> Vec<ParityProofCertificate> {
        self.kept
            .into_iter()
            .map(|(_, basis_indices)| ParityProofCertificate { basis_indices })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParityVerdict {
    Valid,
    Invalid(String),
}

impl ParityVerdict {
    pub fn is_valid(&self) -> bool {
        *self == ParityVerdict::Valid
    }
}

/// Checks a candidate parity proof by plain counting.
pub fn verify_parity_proof(bases: &BasisTable, n_rays: usize, subset: &[usize]) -> ParityVerdict {
    if let Some(&bad) = subset.iter().find(|&&i| i >= bases.len()) {
        return ParityVerdict::Invalid(format!("basis index {bad} out of range"));
    }
    let distinct: BTreeSet<_> = subset.iter().collect();
    if distinct.len() != subset.len() {
        return ParityVerdict::Invalid("repeated basis index".into());
    }
    if subset.len().is_multiple_of(2) {
        return ParityVerdict::Invalid(format!("{} bases is an even number", subset.len()));
    }
    let mut counts = vec![0usize; n_rays];
    for &b in subset {
        for &r in &bases.bases[b] {
            counts[r] += 1;
        }
    }
    match counts.iter().position(|c| c % 2 == 1) {
        Some(r) => ParityVerdict::Invalid(format!("ray {r} occurs {} times", counts[r])),
        None => ParityVerdict::Valid,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_basis_has_trivial_kernel() {
        let t = BasisTable::new(vec![vec![0, 1, 2, 3]]);
        let m = IncidenceMatrixGF2::new(4, &t);
        assert_eq!(m.row_weights(), vec![4]);
        let a = parity_analysis(&m);
        assert_eq!((a.rank, a.kernel_dim), (1, 0));
        assert_eq!(a.proof_count, BigUint::from(0u8));
        assert!(enumerate_parity_proofs(&a, 10, 10).is_empty());
    }

    #[test]
    fn three_bases_sharing_rays_pairwise() {
        // Each of six rays lies in exactly two of three "bases" of size 4.
        let t = BasisTable::new(vec![vec![0, 1, 2, 3], vec![0, 1, 4, 5], vec![2, 3, 4, 5]]);
        let m = IncidenceMatrixGF2::new(6, &t);
        let a = parity_analysis(&m);
        assert_eq!(a.kernel_dim, 1);
        assert!(a.odd_weight_exists);
        assert_eq!(a.proof_count, BigUint::from(1u8));
        let proofs = enumerate_parity_proofs(&a, 5, 3);
        assert_eq!(
            proofs,
            vec![ParityProofCertificate {
                basis_indices: vec![0, 1, 2]
            }]
        );
        assert!(verify_parity_proof(&t, 6, &[0, 1, 2]).is_valid());
        assert!(!verify_parity_proof(&t, 6, &[]).is_valid());
        assert!(!verify_parity_proof(&t, 6, &[0]).is_valid());
        assert!(!verify_parity_proof(&t, 6, &[0, 0, 1]).is_valid());
        assert!(!verify_parity_proof(&t, 6, &[7]).is_valid());
        assert!(enumerate_parity_proofs(&a, 5, 2).is_empty());
        assert!(enumerate_parity_proofs(&a, 0, 3).is_empty());
    }
}
