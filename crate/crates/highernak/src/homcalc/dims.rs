//! Projective, global and dominant dimension; injective coresolutions.

use super::rep::{dual, projective, Rep};
use super::resolve::{min_proj_resolution, Resolution};
use crate::algebra::{BasedAlgebra, ObjId};
use crate::error::{Error, Result};

pub const RESOLUTION_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjDim {
    Finite(usize),
    /// syzygies repeat: after `preperiod` steps with period `period`
    Infinite { preperiod: usize, period: usize },
}

impl ProjDim {
    pub fn is_finite(&self) -> bool {
        matches!(self, ProjDim::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            ProjDim::Finite(k) => Some(*k),
            ProjDim::Infinite { .. } => None,
        }
    }
}

pub fn projdim(alg: &BasedAlgebra, m: &Rep) -> Result<ProjDim> {
    if m.is_zero() {
        return Ok(ProjDim::Finite(0));
    }
    let res = min_proj_resolution(alg, m, RESOLUTION_CAP, true)?;
    projdim_of_resolution(&res)
}

pub fn projdim_of_resolution(res: &Resolution) -> Result<ProjDim> {
    if res.terminated {
        return Ok(ProjDim::Finite(res.terms.len().saturating_sub(1)));
    }
    if let Some((a, p)) = res.periodic {
        return Ok(ProjDim::Infinite { preperiod: a, period: p });
    }
    Err(Error::Undetermined(format!(
        "no termination or repetition within {} terms",
        res.terms.len()
    )))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlDim {
    Finite(usize),
    Infinite,
}

/// Projective dimension of every simple.
pub fn simple_projdims(alg: &BasedAlgebra) -> Result<Vec<(ObjId, ProjDim)>> {
    (0..alg.n_objects())
        .map(|x| {
            let s = super::rep::simple(alg, ObjId(x));
            Ok((ObjId(x), projdim(alg, &s)?))
        })
        .collect()
}

pub fn gldim(alg: &BasedAlgebra) -> Result<GlDim> {
    let mut max = 0usize;
    for (_, pd) in simple_projdims(alg)? {
        match pd {
            ProjDim::Finite(k) => max = max.max(k),
            ProjDim::Infinite { .. } => return Ok(GlDim::Infinite),
        }
    }
    Ok(GlDim::Finite(max))
}

/// Global dimension bounded search: `Some(g)` when the global dimension is
/// exactly `g <= bound`, `None` when it exceeds the bound. Cheaper than a
/// full computation when only a certificate is required.
pub fn gldim_at_most(alg: &BasedAlgebra, bound: usize) -> Result<Option<usize>> {
    let mut max = 0usize;
    for x in 0..alg.n_objects() {
        let s = super::rep::simple(alg, ObjId(x));
        let res = min_proj_resolution(alg, &s, bound + 1, false)?;
        if !res.terminated {
            return Ok(None);
        }
        let pd = res.terms.len().saturating_sub(1);
        if pd > bound {
            return Ok(None);
        }
        max = max.max(pd);
    }
    Ok(Some(max))
}

/// Minimal injective coresolution, computed as the dual of a minimal
/// projective resolution over the opposite algebra. Terms are recorded as
/// multisets of injective labels.
#[derive(Clone, Debug)]
pub struct Coresolution {
    pub terms: Vec<Vec<ObjId>>,
    pub terminated: bool,
    pub periodic: Option<(usize, usize)>,
}

pub fn injective_coresolution(
    alg: &BasedAlgebra,
    alg_op: &BasedAlgebra,
    m: &Rep,
    max_deg: usize,
) -> Result<Coresolution> {
    let dm = dual(alg, m); // module over the opposite algebra
    let res = min_proj_resolution(alg_op, &dm, max_deg, true)?;
    Ok(Coresolution {
        terms: res.terms.iter().map(|t| t.labels.clone()).collect(),
        terminated: res.terminated,
        periodic: res.periodic,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomDim {
    Finite(usize),
    Infinite,
}

/// Labels `x` whose injective `I_x` is isomorphic to some projective.
pub fn injective_is_projective(alg: &BasedAlgebra, alg_op: &BasedAlgebra) -> Result<Vec<bool>> {
    let projs: Vec<Rep> = (0..alg.n_objects()).map(|x| projective(alg, ObjId(x))).collect();
    let mut flags = Vec::with_capacity(alg.n_objects());
    for y in 0..alg.n_objects() {
        let iy = super::rep::injective(alg, alg_op, ObjId(y));
        let mut found = false;
        for px in &projs {
            if px.dims == iy.dims && super::hom::reps_isomorphic(alg, px, &iy)? {
                found = true;
                break;
            }
        }
        flags.push(found);
    }
    Ok(flags)
}

/// Pairs `(x, y)` with `P_x` isomorphic to `I_y`.
pub fn proj_injective_pairs(alg: &BasedAlgebra, alg_op: &BasedAlgebra) -> Result<Vec<(ObjId, ObjId)>> {
    let mut pairs = Vec::new();
    for x in 0..alg.n_objects() {
        let px = projective(alg, ObjId(x));
        for y in 0..alg.n_objects() {
            let iy = super::rep::injective(alg, alg_op, ObjId(y));
            if px.dims == iy.dims && super::hom::reps_isomorphic(alg, &px, &iy)? {
                pairs.push((ObjId(x), ObjId(y)));
                break;
            }
        }
    }
    Ok(pairs)
}

/// Dominant dimension: length of the initial run of projective terms in the
/// minimal injective coresolution of the regular module, computed branchwise
/// over the indecomposable projectives.
pub fn domdim(alg: &BasedAlgebra, alg_op: &BasedAlgebra) -> Result<DomDim> {
    domdim_bounded(alg, alg_op, RESOLUTION_CAP)
}

pub fn domdim_bounded(alg: &BasedAlgebra, alg_op: &BasedAlgebra, cap: usize) -> Result<DomDim> {
    let inj_proj = injective_is_projective(alg, alg_op)?;
    let mut best: Option<usize> = None;
    for x in 0..alg.n_objects() {
        let px = projective(alg, ObjId(x));
        let co = injective_coresolution(alg, alg_op, &px, cap)?;
        let mut run = 0usize;
        let mut broke = false;
        for term in &co.terms {
            if term.iter().all(|&y| inj_proj[y.0]) {
                run += 1;
            } else {
                broke = true;
                break;
            }
        }
        if !broke {
            if co.terminated || co.periodic.is_some() {
                // terminated: later terms vanish; periodic: the computed
                // window repeats forever. Either way every term is
                // projective and the branch contributes infinity.
                continue;
            }
            return Err(Error::Undetermined(format!(
                "projective run of P_{} exceeds the cap {}",
                alg.label(ObjId(x)),
                cap
            )));
        }
        best = Some(best.map_or(run, |b: usize| b.min(run)));
    }
    Ok(match best {
        None => DomDim::Infinite,
        Some(b) => DomDim::Finite(b),
    })
}

/// Bounded certificate: is domdim >= `bound`?
pub fn domdim_at_least(alg: &BasedAlgebra, alg_op: &BasedAlgebra, bound: usize) -> Result<bool> {
    let inj_proj = injective_is_projective(alg, alg_op)?;
    for x in 0..alg.n_objects() {
        let px = projective(alg, ObjId(x));
        let co = injective_coresolution(alg, alg_op, &px, bound)?;
        for (i, term) in co.terms.iter().enumerate() {
            if i >= bound {
                break;
            }
            if !term.iter().all(|&y| inj_proj[y.0]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
