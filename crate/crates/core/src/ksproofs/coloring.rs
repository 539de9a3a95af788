//! Exhaustive search for Kochen-Specker colorings: exactly one ray per basis
//! gets the value 1, and no two orthogonal rays are both 1.

use serde::Serialize;

use crate::systems::{BasisTable, RaySystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringOutcome {
    Colorable {
        assignment: Vec<u8>,
        nodes_explored: u64,
    },
    Noncolorable {
        nodes_explored: u64,
        propagations: u64,
        complete: bool,
    },
}

impl ColoringOutcome {
    pub fn is_colorable(&self) -> bool {
        matches!(self, ColoringOutcome::Colorable { .. })
    }
}

const UNSET: u8 = 2;

struct Search<'a> {
    system: &'a RaySystem,
    bases: &'a [Vec<usize>],
    /// bases containing each ray
    member_of: Vec<Vec<usize>>,
    order: Option<&'a [usize]>,
    nodes: u64,
    propagations: u64,
}

impl Search<'_> {
    /// Assigns and propagates; false on conflict.
    fn assign(&mut self, vals: &mut [u8], ray: usize, v: u8) -> bool {
        let mut queue = vec![(ray, v)];
        while let Some((r, v)) = queue.pop() {
            if vals[r] != UNSET {
                if vals[r] != v {
                    return false;
                }
                continue;
            }
            vals[r] = v;
            self.propagations += 1;
            if v == 1 {
                for u in self.system.neighbors(r).iter_ones() {
                    queue.push((u, 0));
                }
            } else {
                for &b in &self.member_of[r] {
                    let basis = &self.bases[b];
                    if basis.iter().any(|&x| vals[x] == 1) {
                        continue;
                    }
                    let mut open = basis.iter().filter(|&&x| vals[x] == UNSET);
                    match (open.next(), open.next()) {
                        (None, _) => return false,
                        (Some(&x), None) => queue.push((x, 1)),
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn solve(&mut self, vals: Vec<u8>) -> Option<Vec<u8>> {
        self.nodes += 1;
        match self.order {
            Some(order) => {
                let Some(&r) = order.iter().find(|&&r| vals[r] == UNSET) else {
                    return self.finish(vals);
                };
                for v in [1, 0] {
                    let mut next = vals.clone();
                    if self.assign(&mut next, r, v) {
                        if let Some(s) = self.solve(next) {
                            return Some(s);
                        }
                    }
                }
                None
            }
            None => {
                // Branch on the open basis with the fewest undecided rays.
                let target = self
                    .bases
                    .iter()
                    .filter(|b| b.iter().all(|&x| vals[x] != 1))
                    .min_by_key(|b| b.iter().filter(|&&x| vals[x] == UNSET).count());
                let Some(basis) = target else {
                    return self.finish(vals);
                };
                let open: Vec<usize> = basis.iter().copied().filter(|&x| vals[x] == UNSET).collect();
                for (i, &r) in open.iter().enumerate() {
                    let mut next = vals.clone();
                    let ok = open[..i].iter().all(|&z| self.assign(&mut next, z, 0))
                        && self.assign(&mut next, r, 1);
                    if ok {
                        if let Some(s) = self.solve(next) {
                            return Some(s);
                        }
                    }
                }
                None
            }
        }
    }

    /// Every basis has its 1; the remaining rays can all be 0.
    fn finish(&mut self, mut vals: Vec<u8>) -> Option<Vec<u8>> {
        for r in 0..vals.len() {
            if vals[r] == UNSET && !self.assign(&mut vals, r, 0) {
                return None;
            }
        }
        Some(vals)
    }
}

pub fn ks_colorable(system: &RaySystem, bases: &BasisTable) -> ColoringOutcome {
    search(system, bases, None)
}

/// As [`ks_colorable`], branching on rays in the given order instead.
pub fn ks_colorable_with_order(system: &RaySystem, bases: &BasisTable, order: &[usize]) -> ColoringOutcome {
    search(system, bases, Some(order))
}

fn search(system: &RaySystem, bases: &BasisTable, order: Option<&[usize]>) -> ColoringOutcome {
    let n = system.len();
    let mut member_of = vec![Vec::new(); n];
    for (i, b) in bases.bases.iter().enumerate() {
        for &r in b {
            member_of[r].push(i);
        }
    }
    let mut s = Search {
        system,
        bases: &bases.bases,
        member_of,
        order,
        nodes: 0,
        propagations: 0,
    };
    match s.solve(vec![UNSET; n]) {
        Some(assignment) => ColoringOutcome::Colorable {
            assignment,
            nodes_explored: s.nodes,
        },
        None => ColoringOutcome::Noncolorable {
            nodes_explored: s.nodes,
            propagations: s.propagations,
            complete: true,
        },
    }
}

/// Re-checks both coloring rules for a full assignment.
pub fn check_coloring(system: &RaySystem, bases: &BasisTable, assignment: &[u8]) -> Result<(), String> {
    if assignment.len() != system.len() || assignment.iter().any(|&v| v > 1) {
        return Err("assignment must give every ray the value 0 or 1".into());
    }
    for (i, b) in bases.bases.iter().enumerate() {
        let ones = b.iter().filter(|&&r| assignment[r] == 1).count();
        if ones != 1 {
            return Err(format!("basis {i} has {ones} rays valued 1"));
        }
    }
    for i in 0..system.len() {
        if assignment[i] == 1 {
            if let Some(j) = system.neighbors(i).iter_ones().find(|&j| assignment[j] == 1) {
                return Err(format!("orthogonal rays {i} and {j} are both valued 1"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{Eisenstein, ExactRay};
    use crate::systems::{enumerate_bases, exact_system};

    #[test]
    fn single_basis_is_colorable() {
        let rays = (0..4)
            .map(|k| {
                let mut c = vec![Eisenstein::ZERO; 4];
                c[k] = Eisenstein::ONE;
                (format!("e{k}"), ExactRay::new(c).unwrap())
            })
            .collect();
        let sys = exact_system(rays).unwrap();
        let bases = enumerate_bases(&sys).unwrap();
        for outcome in [
            ks_colorable(&sys, &bases),
            ks_colorable_with_order(&sys, &bases, &[3, 2, 1, 0]),
        ] {
            let ColoringOutcome::Colorable { assignment, .. } = outcome else {
                panic!("expected a coloring");
            };
            assert_eq!(assignment.iter().filter(|&&v| v == 1).count(), 1);
            check_coloring(&sys, &bases, &assignment).unwrap();
        }
        assert!(check_coloring(&sys, &bases, &[1, 1, 0, 0]).is_err());
        assert!(check_coloring(&sys, &bases, &[0, 0, 0, 0]).is_err());
    }
}
