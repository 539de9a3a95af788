//! The verifiable claims, each producing a pass/fail record with details.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::catalog::{build_system, CatalogError, SystemId};
use crate::golden::diff_ray_tables;
use crate::ksproofs::{
    enumerate_parity_proofs, ks_colorable, parity_analysis, verify_parity_proof, ColoringOutcome,
    IncidenceMatrixGF2,
};
use crate::numerics::{Eisenstein, ExactRay, HalfInteger};
use crate::penrose::{
    build_dodecahedron, canonical_penrose_system, max_published_gap, max_rotation_oracle_gap, RayLabel,
};
use crate::systems::{
    brute_force_bases, enumerate_bases, exact_system, maps_bases, match_penrose_labels,
    monomial_equivalences, signature, BasisTable, MonomialMap, RaySystem,
};
use crate::witting::{collapse_to_rays, e8_rays, f148_subsystem, generate_witting_vertices, realify};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            details: Vec::new(),
        }
    }

    /// Records a detail line and folds `ok` into the verdict.
    fn expect(&mut self, ok: bool, detail: impl Into<String>) {
        let d = detail.into();
        self.details.push(if ok { d } else { format!("FAILED: {d}") });
        self.passed &= ok;
    }
}

fn ray_set<'a>(rays: impl IntoIterator<Item = &'a ExactRay>) -> BTreeSet<ExactRay> {
    rays.into_iter().cloned().collect()
}

/// The Witting vertices collapse six to one onto exactly the reference rays.
pub fn check_witting_collapse(table1: &[(RayLabel, ExactRay)]) -> Result<Check, CatalogError> {
    let mut c = Check::new("witting-collapse");
    let vertices = generate_witting_vertices();
    c.expect(vertices.len() == 240, format!("{} vertices", vertices.len()));
    let rays = collapse_to_rays(&vertices)?;
    let fibers: BTreeSet<usize> = rays.iter().map(|r| r.fiber.len()).collect();
    c.expect(fibers == BTreeSet::from([6]), format!("fiber sizes {fibers:?}"));
    c.expect(rays.len() == 40, format!("{} rays", rays.len()));
    let got = ray_set(rays.iter().map(|r| &r.ray));
    let want = ray_set(table1.iter().map(|(_, r)| r));
    for (label, r) in table1 {
        if !got.contains(r) {
            c.expect(false, format!("reference ray {label} = {r} is not a Witting ray"));
        }
    }
    let extra = got.difference(&want).count();
    c.expect(
        got == want,
        format!("{extra} Witting rays absent from the reference"),
    );
    Ok(c)
}

/// Geometric construction against the rotation oracle, the published closed
/// forms, and the reference table.
pub fn check_pipeline(table1: &[(RayLabel, ExactRay)]) -> Result<Check, CatalogError> {
    let mut c = Check::new("geometric-pipeline");
    let model = build_dodecahedron();
    let g = max_rotation_oracle_gap(&model)?;
    c.expect(
        g < 1e-9,
        format!("explicit rays vs rotated states: max gap {g:.3e}"),
    );
    let g = max_published_gap(&model)?;
    c.expect(
        g < 1e-9,
        format!("explicit rays vs closed forms: max gap {g:.3e}"),
    );
    let canonical = canonical_penrose_system()?;
    let diffs = diff_ray_tables(table1, &canonical);
    c.expect(
        diffs.is_empty(),
        format!("{} labeled rays differ from the reference", diffs.len()),
    );
    for d in diffs {
        c.expect(false, d);
    }
    Ok(c)
}

/// Both halves of the equivalence claim.
pub fn check_equivalence(table1: &[(RayLabel, ExactRay)]) -> Result<Check, CatalogError> {
    let mut c = Check::new("equivalence");
    for sub in [check_witting_collapse(table1)?, check_pipeline(table1)?] {
        c.passed &= sub.passed;
        c.details
            .extend(sub.details.into_iter().map(|d| format!("{}: {d}", sub.name)));
    }
    Ok(c)
}

/// Penrose bases: count, degree, occurrence, brute-force agreement, reference labels.
pub fn check_tables(table3: &[Vec<RayLabel>]) -> Result<Check, CatalogError> {
    let mut c = Check::new("tables");
    let sys = build_system(SystemId::PenroseCanonical)?;
    let bases = enumerate_bases(&sys)?;
    c.expect(bases.len() == 40, format!("{} bases", bases.len()));
    let degrees = sys.degree_set();
    c.expect(degrees == [12], format!("degrees {degrees:?}"));
    let sig = signature(&sys, &bases);
    c.expect(sig.to_string() == "40_4-40_4", format!("signature {sig}"));
    c.expect(
        brute_force_bases(&sys) == bases,
        "clique search agrees with the all-subsets scan",
    );
    let report = match_penrose_labels(&sys, &bases, table3)?;
    c.expect(
        report.vertex_neighborhood == 20
            && report.antipodal == 10
            && report.tetrahedral == 10
            && report.other == 0,
        format!(
            "families: {} neighborhood, {} antipodal, {} tetrahedral, {} other",
            report.vertex_neighborhood, report.antipodal, report.tetrahedral, report.other
        ),
    );
    for m in &report.missing {
        c.expect(false, format!("reference basis {m} not found"));
    }
    for e in &report.extra {
        c.expect(false, format!("basis {e} not in the reference"));
    }
    Ok(c)
}

/// Realified vertices form a root system with the stated ray and basis counts.
pub fn check_gosset() -> Result<Check, CatalogError> {
    let mut c = Check::new("gosset");
    let roots = realify(&generate_witting_vertices());
    let norms: BTreeSet<HalfInteger> = roots.iter().map(|v| v.squared_length()).collect();
    c.expect(
        norms == BTreeSet::from([HalfInteger::from_int(3)]),
        format!("squared lengths {norms:?}"),
    );
    let set: HashSet<_> = roots.iter().copied().collect();
    let closed = roots.iter().all(|r| {
        roots
            .iter()
            .all(|v| v.reflect(r).is_some_and(|w| set.contains(&w)))
    });
    c.expect(closed, "closed under reflection in every root");
    c.expect(e8_rays().len() == 120, format!("{} rays", e8_rays().len()));
    let sys = build_system(SystemId::E8)?;
    let bases = enumerate_bases(&sys)?;
    let sig = signature(&sys, &bases);
    c.expect(
        bases.len() == 2025,
        format!("{} bases of size {}", bases.len(), sys.dim),
    );
    c.expect(sig.to_string() == "120_135-2025_8", format!("signature {sig}"));
    c.expect(
        sys.degree_set().len() == 1,
        format!("degrees {:?}", sys.degree_set()),
    );
    Ok(c)
}

pub const LINE1_TO_LINE6: MonomialMap = MonomialMap {
    perm: [1, 3, 0, 2],
    phases: [0, 6, 0, 6],
};

/// The extension family: counts, subsystem signatures, line 6 against the
/// reference, pairwise monomial equivalence and the line 1 → 6 map.
pub fn check_monomial(table1: &[(RayLabel, ExactRay)]) -> Result<Check, CatalogError> {
    let mut c = Check::new("monomial");
    let f = build_system(SystemId::F148)?;
    let fb = enumerate_bases(&f)?;
    let sig = signature(&f, &fb);
    c.expect(
        sig.to_string() == "4_13 144_7-265_4",
        format!("f148 signature {sig}"),
    );
    let mut subs: Vec<(RaySystem, BasisTable)> = Vec::new();
    for n in 1..=8u8 {
        let s = build_system(SystemId::F148Sub(n))?;
        let b = enumerate_bases(&s)?;
        let sig = signature(&s, &b);
        c.expect(
            sig.to_string() == "40_4-40_4",
            format!("line {n} signature {sig}"),
        );
        subs.push((s, b));
    }
    let line6 = ray_set(f148_subsystem(6)?.iter().map(|(_, r)| r));
    let want = ray_set(table1.iter().map(|(_, r)| r));
    c.expect(line6 == want, "line 6 equals the reference rays");
    let mut pairs = 0;
    for i in 0..8 {
        for j in i + 1..8 {
            let (a, ab) = &subs[i];
            let (b, bb) = &subs[j];
            let maps = monomial_equivalences(a, b)?;
            let ok = match maps.first() {
                Some(m) => maps_bases(m, a, ab, b, bb)?,
                None => false,
            };
            if ok {
                pairs += 1;
                c.details
                    .push(format!("line {} -> line {}: {}", i + 1, j + 1, maps[0]));
            } else {
                c.expect(
                    false,
                    format!("no monomial map from line {} to line {}", i + 1, j + 1),
                );
            }
        }
    }
    c.expect(pairs == 28, format!("{pairs} of 28 pairs equivalent"));
    let (a, ab) = &subs[0];
    let (b, bb) = &subs[5];
    c.expect(
        maps_bases(&LINE1_TO_LINE6, a, ab, b, bb)?,
        format!("{LINE1_TO_LINE6} sends line 1 onto line 6"),
    );
    Ok(c)
}

#[derive(Clone, Debug, Serialize)]
pub struct ParitySummary {
    pub system: String,
    pub rank: usize,
    pub kernel_dim: usize,
    pub proof_count: String,
    pub certificates: Vec<Vec<usize>>,
    pub certificates_verified: bool,
}

pub fn parity_summary(
    id: SystemId,
    limit: usize,
    max_weight: Option<usize>,
) -> Result<ParitySummary, CatalogError> {
    let sys = build_system(id)?;
    let bases = enumerate_bases(&sys)?;
    let a = parity_analysis(&IncidenceMatrixGF2::new(sys.len(), &bases));
    let certs = enumerate_parity_proofs(&a, limit, max_weight.unwrap_or(bases.len()));
    let verified = certs
        .iter()
        .all(|p| verify_parity_proof(&bases, sys.len(), &p.basis_indices).is_valid());
    Ok(ParitySummary {
        system: id.to_string(),
        rank: a.rank,
        kernel_dim: a.kernel_dim,
        proof_count: a.proof_count.to_string(),
        certificates: certs.into_iter().map(|p| p.basis_indices).collect(),
        certificates_verified: verified,
    })
}

/// No parity proofs in the Penrose system; over a billion in E8.
pub fn check_parity() -> Result<(Check, Vec<ParitySummary>), CatalogError> {
    let mut c = Check::new("parity");
    let p = parity_summary(SystemId::PenroseCanonical, 100, None)?;
    c.expect(
        p.proof_count == "0",
        format!("penrose proof_count {}", p.proof_count),
    );
    let e = parity_summary(SystemId::E8, 100, None)?;
    let big = e
        .proof_count
        .parse::<num_bigint::BigUint>()
        .map(|n| n > 1_000_000_000u64.into());
    c.expect(
        big == Ok(true),
        format!(
            "e8 rank {}, kernel {}, proof_count 2^{}",
            e.rank,
            e.kernel_dim,
            e.kernel_dim.saturating_sub(1)
        ),
    );
    c.expect(
        e.certificates.len() == 100 && e.certificates_verified,
        format!("{} e8 certificates pass the counting check", e.certificates.len()),
    );
    let sys = build_system(SystemId::E8)?;
    let bases = enumerate_bases(&sys)?;
    let all: Vec<usize> = (0..bases.len()).collect();
    c.expect(
        !verify_parity_proof(&bases, sys.len(), &all).is_valid(),
        "the set of all e8 bases is rejected",
    );
    Ok((c, vec![p, e]))
}

#[derive(Clone, Debug, Serialize)]
pub struct ColoringSummary {
    pub system: String,
    pub outcome: ColoringOutcome,
}

pub fn coloring_summary(id: SystemId) -> Result<ColoringSummary, CatalogError> {
    let sys = build_system(id)?;
    let bases = enumerate_bases(&sys)?;
    Ok(ColoringSummary {
        system: id.to_string(),
        outcome: ks_colorable(&sys, &bases),
    })
}

fn single_basis_system() -> Result<RaySystem, CatalogError> {
    let rays = (0..4)
        .map(|k| {
            let mut comps = vec![Eisenstein::ZERO; 4];
            comps[k] = Eisenstein::ONE;
            Ok((format!("e{}", k + 1), ExactRay::new(comps)?))
        })
        .collect::<Result<Vec<_>, CatalogError>>()?;
    Ok(exact_system(rays)?)
}

/// Penrose and f148 admit no coloring; a single basis does.
pub fn check_coloring() -> Result<(Check, Vec<ColoringSummary>), CatalogError> {
    let mut c = Check::new("coloring");
    let mut out = Vec::new();
    for id in [SystemId::PenroseCanonical, SystemId::F148] {
        let s = coloring_summary(id)?;
        c.expect(
            !s.outcome.is_colorable(),
            format!("{id}: {}", describe(&s.outcome)),
        );
        out.push(s);
    }
    let control = single_basis_system()?;
    let cb = enumerate_bases(&control)?;
    let outcome = ks_colorable(&control, &cb);
    c.expect(
        outcome.is_colorable(),
        format!("single basis: {}", describe(&outcome)),
    );
    Ok((c, out))
}

pub fn describe(o: &ColoringOutcome) -> String {
    match o {
        ColoringOutcome::Colorable { nodes_explored, .. } => {
            format!("colorable (nodes_explored: {nodes_explored})")
        }
        ColoringOutcome::Noncolorable {
            nodes_explored,
            propagations,
            complete,
        } => format!(
            "noncolorable (nodes_explored: {nodes_explored}, propagations: {propagations}, complete: {complete})"
        ),
    }
}

/// Claim checks together with the parity and coloring details behind them.
pub type ClaimResults = (Vec<Check>, Vec<ParitySummary>, Vec<ColoringSummary>);

/// All claims, in a fixed order, plus the raw parity and coloring results.
pub fn run_all(
    table1: &[(RayLabel, ExactRay)],
    table3: &[Vec<RayLabel>],
) -> Result<ClaimResults, CatalogError> {
    let (parity, ps) = check_parity()?;
    let (coloring, cs) = check_coloring()?;
    let checks = vec![
        check_witting_collapse(table1)?,
        check_pipeline(table1)?,
        check_tables(table3)?,
        check_gosset()?,
        parity,
        coloring,
        check_monomial(table1)?,
    ];
    Ok((checks, ps, cs))
}
