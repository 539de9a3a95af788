//! Basis enumeration as maximal-clique search in the orthogonality graph.

use rayon::prelude::*;

use super::{BasisTable, RaySystem, SystemsError};
use crate::bits::BitVec;

/// All orthogonal bases of the system.
///
/// Bron–Kerbosch with pivoting over bitsets. The top level runs in degeneracy
/// order and is split across threads; the result is sorted so it does not
/// depend on scheduling. Any clique larger than the dimension is an error.
pub fn enumerate_bases(system: &RaySystem) -> Result<BasisTable, SystemsError> {
    let n = system.len();
    let dim = system.dim;
    let order = degeneracy_order(system);
    let mut later = BitVec::ones(n);
    let mut tasks = Vec::with_capacity(n);
    for &v in &order {
        later.clear(v);
        let nb = system.neighbors(v);
        tasks.push((v, nb.and(&later), nb.and_not(&later)));
    }

    let per_root: Vec<Result<Vec<Vec<usize>>, SystemsError>> = tasks
        .into_par_iter()
        .map(|(v, p, x)| {
            let mut out = Vec::new();
            let mut r = vec![v];
            bron_kerbosch(system, dim, &mut r, p, x, &mut out)?;
            Ok(out)
        })
        .collect();

    let mut bases = Vec::new();
    for chunk in per_root {
        bases.extend(chunk?);
    }
    Ok(BasisTable::new(bases))
}

fn bron_kerbosch(
    sys: &RaySystem,
    dim: usize,
    r: &mut Vec<usize>,
    p: BitVec,
    mut x: BitVec,
    out: &mut Vec<Vec<usize>>,
) -> Result<(), SystemsError> {
    if r.len() > dim {
        return Err(SystemsError::CliqueTooLarge { size: r.len(), dim });
    }
    if p.is_empty() {
        if x.is_empty() && r.len() == dim {
            out.push(r.clone());
        }
        return Ok(());
    }
    // A clique of size > dim must still be detected, so only prune when
    // even a full extension cannot reach `dim`.
    if r.len() + p.count_ones() < dim {
        return Ok(());
    }
    let pivot = p
        .or(&x)
        .iter_ones()
        .max_by_key(|&u| (p.and_count(sys.neighbors(u)), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    let mut p = p;
    let candidates: Vec<usize> = p.and_not(sys.neighbors(pivot)).iter_ones().collect();
    for v in candidates {
        let nb = sys.neighbors(v);
        r.push(v);
        bron_kerbosch(sys, dim, r, p.and(nb), x.and(nb), out)?;
        r.pop();
        p.clear(v);
        x.set(v);
    }
    Ok(())
}

/// Repeatedly remove a minimum-degree vertex (lowest index on ties).
fn degeneracy_order(sys: &RaySystem) -> Vec<usize> {
    let n = sys.len();
    let mut alive = BitVec::ones(n);
    let mut deg: Vec<usize> = (0..n).map(|i| sys.degree(i)).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter_ones()
            .min_by_key(|&i| (deg[i], i))
            .expect("vertices remain");
        alive.clear(v);
        for u in sys.neighbors(v).and(&alive).iter_ones() {
            deg[u] -= 1;
        }
        order.push(v);
    }
    order
}

/// Reference enumeration over all `dim`-subsets. Only practical for small systems.
pub fn brute_force_bases(system: &RaySystem) -> BasisTable {
    let n = system.len();
    let dim = system.dim;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(dim);
    fn rec(
        sys: &RaySystem,
        n: usize,
        dim: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == dim {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if cur.iter().all(|&j| sys.adjacent(i, j)) {
                cur.push(i);
                rec(sys, n, dim, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(system, n, dim, 0, &mut cur, &mut out);
    BasisTable::new(out)
}
