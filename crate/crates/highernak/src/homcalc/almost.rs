//! Radicals of Hom spaces between indecomposables, minimal right
//! approximations, and higher almost split sequences inside a collection.

use super::hom::{hom_basis, reps_isomorphic};
use super::rep::{self, direct_sum, kernel_rep, Rep, RepHom};
use super::translate::tau_d;
use crate::algebra::BasedAlgebra;
use crate::error::{Error, Result};
use crate::exactla::SparseMat;

/// Flatten a morphism into one long coordinate vector (for rank bookkeeping).
fn vectorize(h: &RepHom) -> (Vec<(usize, u32)>, usize) {
    let mut entries = Vec::new();
    let mut off = 0usize;
    for m in h {
        for r in 0..m.rows {
            for &(c, v) in m.row(r) {
                entries.push((off + r * m.cols + c as usize, v));
            }
        }
        off += m.rows * m.cols;
    }
    (entries, off)
}

fn stack_as_columns(homs: &[RepHom], total: usize, p: u32) -> SparseMat {
    let mut trips = Vec::new();
    for (j, h) in homs.iter().enumerate() {
        let (entries, t) = vectorize(h);
        debug_assert_eq!(t, total);
        for (r, v) in entries {
            trips.push((r, j, v));
        }
    }
    SparseMat::from_triplets(total, homs.len(), p, &trips)
}

fn hom_space_len(m: &Rep, n: &Rep) -> usize {
    m.dims.iter().zip(&n.dims).map(|(&a, &b)| a * b).sum()
}

/// Block-diagonal total matrix of an endomorphism.
fn total_matrix(h: &RepHom, p: u32) -> SparseMat {
    let total: usize = h.iter().map(|m| m.rows).sum();
    let mut trips = Vec::new();
    let mut off = 0usize;
    for m in h {
        debug_assert_eq!(m.rows, m.cols);
        for r in 0..m.rows {
            for &(c, v) in m.row(r) {
                trips.push((off + r, off + c as usize, v));
            }
        }
        off += m.rows;
    }
    SparseMat::from_triplets(total, total, p, &trips)
}

fn is_nilpotent(b: &SparseMat) -> bool {
    let n = b.rows;
    if n == 0 {
        return true;
    }
    let mut acc = b.clone();
    let mut e = 1usize;
    while e < n {
        if acc.is_zero() {
            return true;
        }
        acc = acc.multiply(&acc).expect("square matrix");
        e *= 2;
    }
    acc.is_zero()
}

/// Radical of the endomorphism algebra of an indecomposable with split local
/// endomorphism ring: the nilpotent part, of codimension one. Errors when the
/// ring is not split local (no scalar makes a basis element nilpotent).
pub fn rad_end_basis(alg: &BasedAlgebra, m: &Rep, endos: &[RepHom]) -> Result<Vec<RepHom>> {
    let p = alg.p;
    if endos.len() <= 1 {
        return Ok(Vec::new());
    }
    let dim = m.total_dim();
    let mut rad: Vec<RepHom> = Vec::new();
    for phi in endos {
        let total = total_matrix(phi, p);
        // the unique eigenvalue; trace/dim works away from characteristic
        let mut found: Option<u32> = None;
        let tr = {
            let mut s = 0u64;
            for r in 0..total.rows {
                s = (s + total.get(r, r) as u64) % p as u64;
            }
            s as u32
        };
        if dim as u64 % p as u64 != 0 {
            let dinv = {
                let d = (dim as u64 % p as u64) as u32;
                let mut acc = 1u64;
                let mut base = d as u64;
                let mut e = p as u64 - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p as u64;
                    }
                    base = base * base % p as u64;
                    e >>= 1;
                }
                acc as u32
            };
            let c = (tr as u64 * dinv as u64 % p as u64) as u32;
            let shifted = total.sub(&SparseMat::identity(dim, p).scale(c));
            if is_nilpotent(&shifted) {
                found = Some(c);
            }
        }
        if found.is_none() {
            for c in 0..p {
                let shifted = total.sub(&SparseMat::identity(dim, p).scale(c));
                if is_nilpotent(&shifted) {
                    found = Some(c);
                    break;
                }
            }
        }
        let Some(c) = found else {
            return Err(Error::Undetermined(
                "endomorphism ring is not split local; cannot form its radical".into(),
            ));
        };
        let id = rep::identity_hom(alg, m);
        let r = rep::add_homs(phi, &rep::scale_hom(&id, (p - c) % p));
        if !rep::hom_is_zero(&r) {
            rad.push(r);
        }
    }
    // reduce to an independent subset
    let total = hom_space_len(m, m);
    let stacked = stack_as_columns(&rad, total, p);
    let keep = stacked.column_space_basis();
    Ok(keep.into_iter().map(|k| rad[k].clone()).collect())
}

/// Pairwise Hom and radical data over a fixed collection of modules.
pub struct CollectionHoms {
    pub homs: Vec<Vec<Vec<RepHom>>>,
    pub rads: Vec<Vec<Vec<RepHom>>>,
}

pub fn collection_homs(alg: &BasedAlgebra, members: &[Rep]) -> Result<CollectionHoms> {
    let n = members.len();
    let mut homs = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(hom_basis(alg, &members[i], &members[j]));
        }
        homs.push(row);
    }
    let mut rads = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            if i == j {
                row.push(rad_end_basis(alg, &members[i], &homs[i][i])?);
            } else {
                row.push(homs[i][j].clone());
            }
        }
        rads.push(row);
    }
    Ok(CollectionHoms { homs, rads })
}

/// Generators of `rad(-, X)` modulo `rad^2(-, X)` over the collection:
/// the minimal right almost split map into `X` inside the additive closure.
/// Returns the multiplicity and chosen morphisms per member.
fn almost_split_generators(
    alg: &BasedAlgebra,
    members: &[Rep],
    data: &CollectionHoms,
    x: usize,
) -> Vec<(usize, RepHom)> {
    let p = alg.p;
    let n = members.len();
    let mut out = Vec::new();
    for z in 0..n {
        let rad_zx = &data.rads[z][x];
        if rad_zx.is_empty() {
            continue;
        }
        // rad^2(z, x) = sum over w of rad(w, x) . rad(z, w)
        let mut rad2: Vec<RepHom> = Vec::new();
        for w in 0..n {
            for f in &data.rads[w][x] {
                for g in &data.rads[z][w] {
                    rad2.push(rep::compose_homs(f, g));
                }
            }
        }
        let total = hom_space_len(&members[z], &members[x]);
        let rad2_mat = stack_as_columns(&rad2, total, p);
        let rad_mat = stack_as_columns(rad_zx, total, p);
        // greedily add rad generators that leave the span of rad^2
        let mut span = rad2_mat;
        let base_rank = span.rank();
        let mut rank = base_rank;
        for (k, h) in rad_zx.iter().enumerate() {
            let cand = span.hstack(&rad_mat.select_cols(&[k]));
            let r = cand.rank();
            if r > rank {
                span = cand;
                rank = r;
                out.push((z, h.clone()));
            }
        }
    }
    out
}

/// Generators of `Hom(-, K)` modulo `rad . Hom(-, K)`: a minimal right
/// approximation of `K` by the collection.
fn approx_generators(
    alg: &BasedAlgebra,
    members: &[Rep],
    data: &CollectionHoms,
    k: &Rep,
) -> Vec<(usize, RepHom)> {
    let p = alg.p;
    let n = members.len();
    let homs_to_k: Vec<Vec<RepHom>> = members.iter().map(|m| hom_basis(alg, m, k)).collect();
    let mut out = Vec::new();
    for z in 0..n {
        if homs_to_k[z].is_empty() {
            continue;
        }
        let mut reducible: Vec<RepHom> = Vec::new();
        for w in 0..n {
            for f in &homs_to_k[w] {
                for g in &data.rads[z][w] {
                    reducible.push(rep::compose_homs(f, g));
                }
            }
        }
        let total = hom_space_len(&members[z], k);
        let red_mat = stack_as_columns(&reducible, total, p);
        let full_mat = stack_as_columns(&homs_to_k[z], total, p);
        let mut span = red_mat;
        let mut rank = span.rank();
        for (idx, h) in homs_to_k[z].iter().enumerate() {
            let cand = span.hstack(&full_mat.select_cols(&[idx]));
            let r = cand.rank();
            if r > rank {
                span = cand;
                rank = r;
                out.push((z, h.clone()));
            }
        }
    }
    out
}

/// Assemble the direct sum of chosen members with the combined map into `tgt`.
fn assemble(
    alg: &BasedAlgebra,
    members: &[Rep],
    chosen: &[(usize, RepHom)],
    tgt: &Rep,
) -> (Rep, Vec<usize>, RepHom) {
    let parts: Vec<&Rep> = chosen.iter().map(|&(z, _)| &members[z]).collect();
    let (sum, offsets) = direct_sum(alg, &parts);
    let mut phi: RepHom = (0..alg.n_objects())
        .map(|x| SparseMat::zero(tgt.dims[x], sum.dims[x], alg.p))
        .collect();
    for (s, (_, h)) in chosen.iter().enumerate() {
        for x in 0..alg.n_objects() {
            let mut trips = Vec::new();
            for r in 0..h[x].rows {
                for &(c, v) in h[x].row(r) {
                    trips.push((r, offsets[s][x] + c as usize, v));
                }
            }
            let add = SparseMat::from_triplets(tgt.dims[x], sum.dims[x], alg.p, &trips);
            phi[x] = phi[x].add(&add);
        }
    }
    let labels = chosen.iter().map(|&(z, _)| z).collect();
    (sum, labels, phi)
}

/// A d-almost split sequence `0 -> tau_d X -> C_1 -> ... -> C_d -> X -> 0`
/// with middle terms in the additive closure of the collection.
pub struct DAlmostSplit {
    /// member indices of each middle term, left to right (C_1 ... C_d)
    pub middle_members: Vec<Vec<usize>>,
    pub middle_reps: Vec<Rep>,
    /// maps C_i -> C_{i+1} (last one into X)
    pub maps: Vec<RepHom>,
    pub left_term: Rep,
    pub left_inclusion: RepHom,
    pub ends_at_translate: bool,
}

pub fn d_almost_split(
    alg: &BasedAlgebra,
    alg_op: &BasedAlgebra,
    members: &[Rep],
    x: usize,
    d: usize,
) -> Result<DAlmostSplit> {
    let target = &members[x];
    // X must be non-projective
    let res = super::resolve::min_proj_resolution(alg, target, 0, false)?;
    if res.terminated {
        return Err(Error::Argument("module is projective; no almost split sequence ends there".into()));
    }
    let data = collection_homs(alg, members)?;
    let mut middle_members = Vec::new();
    let mut middle_reps: Vec<Rep> = Vec::new();
    let mut maps_rl: Vec<RepHom> = Vec::new(); // maps toward the right end, built right to left

    let chosen = almost_split_generators(alg, members, &data, x);
    if chosen.is_empty() {
        return Err(Error::Undetermined("radical of the restricted Hom functor is zero".into()));
    }
    let (c_d, labels_d, g_d) = assemble(alg, members, &chosen, target);
    let (mut kernel, mut incl) = kernel_rep(alg, &g_d, &c_d);
    middle_members.push(labels_d);
    middle_reps.push(c_d);
    maps_rl.push(g_d);
    for _ in 1..d {
        let chosen = approx_generators(alg, members, &data, &kernel);
        if chosen.is_empty() {
            return Err(Error::Undetermined("right approximation vanished before the chain closed".into()));
        }
        let (c, labels, g) = assemble(alg, members, &chosen, &kernel);
        // surjectivity of the approximation
        let rank: usize = g.iter().map(|f| f.rank()).sum();
        if rank != kernel.total_dim() {
            return Err(Error::Undetermined("right approximation is not surjective".into()));
        }
        let lifted = rep::compose_homs(&incl, &g); // C -> kernel -> previous middle
        let (next_kernel, next_incl) = kernel_rep(alg, &g, &c);
        middle_members.push(labels);
        middle_reps.push(c);
        maps_rl.push(lifted);
        kernel = next_kernel;
        incl = next_incl;
    }
    middle_members.reverse();
    middle_reps.reverse();
    maps_rl.reverse();
    // verify the left end against the higher translate
    let expected = tau_d(alg, alg_op, target, d)?;
    let ends_ok = !kernel.is_zero()
        && kernel.dims == expected.rep.dims
        && reps_isomorphic(alg, &kernel, &expected.rep)?;
    Ok(DAlmostSplit {
        middle_members,
        middle_reps,
        maps: maps_rl,
        left_term: kernel,
        left_inclusion: incl,
        ends_at_translate: ends_ok,
    })
}

/// Exactness of the assembled sequence, checked degree by degree.
pub fn verify_almost_split(seq: &DAlmostSplit, target: &Rep) -> Result<()> {
    let d = seq.middle_reps.len();
    // composite of consecutive maps vanishes; homology vanishes by ranks
    let mut dims = vec![seq.left_term.total_dim()];
    for r in &seq.middle_reps {
        dims.push(r.total_dim());
    }
    dims.push(target.total_dim());
    let mut ranks = vec![seq.left_inclusion.iter().map(|f| f.rank()).sum::<usize>()];
    for m in &seq.maps {
        ranks.push(m.iter().map(|f| f.rank()).sum::<usize>());
    }
    // injective on the left, surjective on the right
    if ranks[0] != dims[0] {
        return Err(Error::Dim("left end not injective".into()));
    }
    if *ranks.last().unwrap() != *dims.last().unwrap() {
        return Err(Error::Dim("right end not surjective".into()));
    }
    // composites zero
    let first = rep::compose_homs(&seq.maps[0], &seq.left_inclusion);
    if !rep::hom_is_zero(&first) {
        return Err(Error::Dim("composite at the left end nonzero".into()));
    }
    for i in 0..d - 1 {
        let comp = rep::compose_homs(&seq.maps[i + 1], &seq.maps[i]);
        if !rep::hom_is_zero(&comp) {
            return Err(Error::Dim(format!("composite at position {i} nonzero")));
        }
    }
    // exactness at middle term i: rank(in) + rank(out) = dim
    for i in 0..d {
        let rank_in = ranks[i];
        let rank_out = ranks[i + 1];
        if rank_in + rank_out != dims[i + 1] {
            return Err(Error::Dim(format!("not exact at middle term {i}")));
        }
    }
    Ok(())
}
