//! The dictionary between polytope combinatorics and module data: non-lower
//! simplices correspond to interval-module labels, triangulations to tilting
//! collections, bistellar flips to mutations, and internal simplices of one
//! more vertex model the combinatorics of the higher cluster category.
//!
//! The index shift `a_j -> a_j - 2j` below is a reconstruction; it is
//! accepted because the Ext-compatibility and counting checks pass, and any
//! mismatch fails loudly.

use crate::algebra::{build, BasedAlgebra};
use crate::cycpoly::{
    bistellar_flip, internal_simplices, intersects, nonlower_simplices, triangulations, Simplex,
    Triangulation,
};
use crate::error::{Error, Result};
use crate::homcalc::{self, ext_from_resolution, min_proj_resolution};
use crate::oset::{KupischKind, KupischSeries, OSeq};
use crate::tilting::{canonical_ct_candidate, rigidity_table, tilting_enumerate, tilting_mutate_with_table, ModuleCollection};
use std::collections::{BTreeMap, BTreeSet};

/// Vertex count of the polytope in the tilting model.
pub fn tilting_vertex_count(n: usize, d: usize) -> usize {
    n + 2 * d
}

/// `sigma = (a_0, ..., a_d)` maps to `(a_d - 2d, ..., a_1 - 2, a_0)`.
pub fn simplex_to_label(n: usize, d: usize, sigma: &Simplex) -> Result<OSeq> {
    if sigma.0.len() != d + 1 {
        return Err(Error::Argument(format!("simplex must have {} vertices", d + 1)));
    }
    if !sigma.gaps_ok() {
        return Err(Error::Argument(format!("{sigma} lies on a lower facet")));
    }
    let p = tilting_vertex_count(n, d) as i64;
    if sigma.0[0] < 0 || sigma.0[d] >= p {
        return Err(Error::Argument(format!("{sigma} outside the vertex range 0..{p}")));
    }
    let entries: Vec<i64> = (0..=d).map(|i| sigma.0[d - i] - 2 * (d - i) as i64).collect();
    OSeq::new(entries)
}

pub fn label_to_simplex(n: usize, d: usize, lambda: &OSeq) -> Result<Simplex> {
    if lambda.len() != d + 1 {
        return Err(Error::Argument(format!("label must have length {}", d + 1)));
    }
    let nn = n as i64;
    let e = lambda.entries();
    if e[0] > nn - 1 || e[d] < 0 {
        return Err(Error::Argument(format!("label {lambda} outside the index range")));
    }
    let verts: Vec<i64> = (0..=d).map(|j| e[d - j] + 2 * j as i64).collect();
    Simplex::new(verts)
}

/// Dictionary tables for one parameter pair.
pub struct Dictionary {
    pub n: usize,
    pub d: usize,
    pub p: usize,
    pub simplex_to_label: BTreeMap<Simplex, OSeq>,
    pub label_to_simplex: BTreeMap<OSeq, Simplex>,
}

pub fn dictionary(n: usize, d: usize) -> Result<Dictionary> {
    let p = tilting_vertex_count(n, d);
    let nonlower = nonlower_simplices(p, d)?;
    let mut s2l = BTreeMap::new();
    let mut l2s = BTreeMap::new();
    for s in &nonlower {
        let l = simplex_to_label(n, d, s)?;
        let back = label_to_simplex(n, d, &l)?;
        if back != *s {
            return Err(Error::Undetermined(format!("dictionary fails to invert on {s}")));
        }
        s2l.insert(s.clone(), l.clone());
        l2s.insert(l, s.clone());
    }
    if l2s.len() != nonlower.len() {
        return Err(Error::Undetermined("dictionary is not injective".into()));
    }
    Ok(Dictionary { n, d, p, simplex_to_label: s2l, label_to_simplex: l2s })
}

impl Dictionary {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "d": self.d,
            "vertex_count": self.p,
            "pairs": self
                .simplex_to_label
                .iter()
                .map(|(s, l)| serde_json::json!({"simplex": s.0.clone(), "label": l}))
                .collect::<Vec<_>>(),
        })
    }
}

/// The full type A algebra on `n` vertices (Kupisch entries `1, 2, ..., n`).
pub fn full_type_a(n: usize, d: usize, prime: u32) -> Result<BasedAlgebra> {
    let series = KupischSeries::new(KupischKind::A, (1..=n as u32).collect())?;
    build(d, &series, prime)
}

#[derive(Clone, Debug)]
pub struct ExtCompatibilityReport {
    pub pairs_checked: usize,
    pub mismatches: Vec<(Simplex, Simplex, bool, usize, usize)>,
}

/// Intersection of simplices must match nonvanishing of `Ext^d` in some
/// direction between the corresponding interval modules.
pub fn ext_compatibility_check(n: usize, d: usize, prime: u32) -> Result<ExtCompatibilityReport> {
    let alg = full_type_a(n, d, prime)?;
    let dict = dictionary(n, d)?;
    let candidate = canonical_ct_candidate(&alg)?;
    let index: BTreeMap<&OSeq, usize> =
        candidate.labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let simplices: Vec<&Simplex> = dict.simplex_to_label.keys().collect();
    let resolutions: Vec<_> = candidate
        .members
        .iter()
        .map(|m| min_proj_resolution(&alg, m, d + 1, false))
        .collect::<Result<Vec<_>>>()?;
    let mut mismatches = Vec::new();
    let mut pairs = 0usize;
    for (i, s) in simplices.iter().enumerate() {
        for t in simplices.iter().skip(i + 1) {
            pairs += 1;
            let li = index[&dict.simplex_to_label[*s]];
            let lj = index[&dict.simplex_to_label[*t]];
            let e_ij = ext_from_resolution(&alg, &resolutions[li], &candidate.members[lj], d)?;
            let e_ji = ext_from_resolution(&alg, &resolutions[lj], &candidate.members[li], d)?;
            let geometric = intersects(s, t);
            let homological = e_ij > 0 || e_ji > 0;
            if geometric != homological {
                mismatches.push(((*s).clone(), (*t).clone(), geometric, e_ij, e_ji));
            }
        }
    }
    Ok(ExtCompatibilityReport { pairs_checked: pairs, mismatches })
}

/// The tilting collection corresponding to a triangulation.
pub fn triangulation_to_tilting(
    candidate: &ModuleCollection,
    n: usize,
    d: usize,
    t: &Triangulation,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for s in &t.simplices {
        let l = simplex_to_label(n, d, s)?;
        let i = candidate
            .labels
            .iter()
            .position(|c| *c == l)
            .ok_or_else(|| Error::UnknownObject(format!("label {l} not in the candidate")))?;
        out.push(i);
    }
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct FlipMutationReport {
    pub triangulation_count: usize,
    pub tilting_count: usize,
    pub bijective: bool,
    pub squares_checked: usize,
    pub squares_commute: bool,
    pub forced_agree: bool,
}

/// Triangulations map bijectively onto tilting collections, flips commute
/// with mutations through the dictionary, and unflippable simplices are
/// exactly the forced members.
pub fn flip_vs_mutation_check(n: usize, d: usize, prime: u32) -> Result<FlipMutationReport> {
    let alg = full_type_a(n, d, prime)?;
    let alg_op = alg.opposite();
    let candidate = canonical_ct_candidate(&alg)?;
    let p = tilting_vertex_count(n, d);
    let ts = triangulations(p, d)?;
    let tiltings = tilting_enumerate(&alg, &candidate)?;
    let gldim_bound = match homcalc::gldim(&alg)? {
        homcalc::GlDim::Finite(g) => g.max(1),
        homcalc::GlDim::Infinite => return Err(Error::Undetermined("infinite global dimension".into())),
    };
    let compat = rigidity_table(&alg, &candidate, gldim_bound)?;
    let tilting_set: BTreeSet<Vec<usize>> = tiltings.iter().cloned().collect();
    let mut mapped = BTreeSet::new();
    for t in &ts {
        mapped.insert(triangulation_to_tilting(&candidate, n, d, t)?);
    }
    let bijective = mapped == tilting_set && mapped.len() == ts.len();
    let mut squares = 0usize;
    let mut squares_commute = true;
    let mut forced_agree = true;
    for t in &ts {
        let tilt = triangulation_to_tilting(&candidate, n, d, t)?;
        for s in &t.simplices {
            let l = simplex_to_label(n, d, s)?;
            let x = candidate.labels.iter().position(|c| *c == l).unwrap();
            match bistellar_flip(t, s) {
                Ok(t2) => {
                    squares += 1;
                    let expect = triangulation_to_tilting(&candidate, n, d, &t2)?;
                    match tilting_mutate_with_table(&alg, &alg_op, &candidate, &compat, &tilt, x) {
                        Ok((partner, seq)) => {
                            let mut got: Vec<usize> =
                                tilt.iter().copied().filter(|&i| i != x).collect();
                            got.push(partner);
                            got.sort_unstable();
                            if got != expect || !seq.verified_exact {
                                squares_commute = false;
                            }
                        }
                        Err(_) => squares_commute = false,
                    }
                }
                Err(Error::NotFlippable) => {
                    if tilting_mutate_with_table(&alg, &alg_op, &candidate, &compat, &tilt, x).is_ok() {
                        forced_agree = false;
                    }
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(FlipMutationReport {
        triangulation_count: ts.len(),
        tilting_count: tiltings.len(),
        bijective,
        squares_checked: squares,
        squares_commute,
        forced_agree,
    })
}

/// Upper-boundary (non-lower, non-internal) simplices must correspond to
/// projective-injective interval modules.
pub fn boundary_vs_projective_injective(n: usize, d: usize, prime: u32) -> Result<bool> {
    let alg = full_type_a(n, d, prime)?;
    let alg_op = alg.opposite();
    let candidate = canonical_ct_candidate(&alg)?;
    let p = tilting_vertex_count(n, d);
    let dict = dictionary(n, d)?;
    let internal: BTreeSet<Simplex> = internal_simplices(p, d)?.into_iter().collect();
    for (s, l) in &dict.simplex_to_label {
        let i = candidate.labels.iter().position(|c| c == l).unwrap();
        let m = &candidate.members[i];
        let proj_inj = homcalc::is_projective_rep(&alg, m)?
            && homcalc::is_injective_rep(&alg, &alg_op, m)?;
        let boundary = !internal.contains(s);
        if proj_inj != boundary {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Combinatorial model of the higher cluster category on one more vertex:
/// objects are internal simplices, cluster-tilting sets are triangulations
/// restricted to internal simplices, mutation is the bistellar flip.
#[derive(Clone, Debug)]
pub struct ClusterModel {
    pub n: usize,
    pub d: usize,
    pub p: usize,
    pub objects: Vec<Simplex>,
    pub sets: Vec<Vec<usize>>,
    pub mutation_edges: Vec<(usize, usize)>,
}

pub fn cluster_model(n: usize, d: usize) -> Result<ClusterModel> {
    let p = n + 2 * d + 1;
    let objects = internal_simplices(p, d)?;
    let obj_index: BTreeMap<&Simplex, usize> = objects.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let ts = triangulations(p, d)?;
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for t in &ts {
        let mut set: Vec<usize> = t
            .simplices
            .iter()
            .filter_map(|s| obj_index.get(s).copied())
            .collect();
        set.sort_unstable();
        sets.push(set);
    }
    // distinct triangulations restrict to distinct internal parts
    {
        let uniq: BTreeSet<&Vec<usize>> = sets.iter().collect();
        if uniq.len() != sets.len() {
            return Err(Error::Undetermined(
                "triangulations do not restrict injectively to internal simplices".into(),
            ));
        }
    }
    let mut edges = BTreeSet::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate().skip(i + 1) {
            let diff = a.iter().filter(|x| !b.contains(x)).count();
            if diff == 1 && a.len() == b.len() {
                edges.insert((i, j));
            }
        }
    }
    // every mutation edge comes from a flip at an internal simplex
    let mut confirmed = BTreeSet::new();
    for (i, t) in ts.iter().enumerate() {
        for s in &t.simplices {
            if !obj_index.contains_key(s) {
                continue;
            }
            if let Ok(t2) = bistellar_flip(t, s) {
                let j = ts.iter().position(|u| u.simplices == t2.simplices).unwrap();
                confirmed.insert((i.min(j), i.max(j)));
            }
        }
    }
    if confirmed != edges {
        return Err(Error::Undetermined("mutation edges disagree with flips".into()));
    }
    Ok(ClusterModel {
        n,
        d,
        p,
        objects,
        sets,
        mutation_edges: edges.into_iter().collect(),
    })
}

impl ClusterModel {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "d": self.d,
            "vertex_count": self.p,
            "objects": self.objects.iter().map(|s| s.0.clone()).collect::<Vec<_>>(),
            "cluster_tilting_sets": self.sets,
            "mutation_edges": self.mutation_edges,
        })
    }
}
