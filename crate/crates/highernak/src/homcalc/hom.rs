//! Morphism spaces between representations and isomorphism testing.

use super::rep::{Rep, RepHom};
use crate::algebra::BasedAlgebra;
use crate::error::{Error, Result};
use crate::exactla::SparseMat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Basis of the space of representation morphisms `M -> N`, by solving the
/// intertwining equations `phi_src . M(a) = N(a) . phi_tgt` for every arrow.
/// Extra linear conditions on the matrices `phi_x` can be imposed through
/// `constraints`: pairs `(x, C)` demanding `C . phi_x = 0`, and
/// `right_kill`: pairs `(x, V)` demanding `phi_x . V = 0`.
pub fn hom_basis_constrained(
    alg: &BasedAlgebra,
    m: &Rep,
    n: &Rep,
    constraints: &[(usize, SparseMat)],
    right_kill: &[(usize, SparseMat)],
) -> Vec<RepHom> {
    let p = alg.p;
    let nobj = alg.n_objects();
    // variable layout: for each object x a block of n.dims[x] * m.dims[x]
    let mut offset = vec![0usize; nobj + 1];
    for x in 0..nobj {
        offset[x + 1] = offset[x] + n.dims[x] * m.dims[x];
    }
    let nvars = offset[nobj];
    let var = |x: usize, r: usize, c: usize, m: &Rep, _n: &Rep| offset[x] + r * m.dims[x] + c;

    let mut trips: Vec<(usize, usize, u32)> = Vec::new();
    let mut eq = 0usize;
    for (k, &a) in alg.arrows.iter().enumerate() {
        let mor = alg.mor(a);
        let (x, y) = (mor.src.0, mor.tgt.0);
        let ma = &m.maps[k]; // M(a) : M(y) -> M(x)
        let na = &n.maps[k]; // N(a) : N(y) -> N(x)
        // phi_x . M(a) = N(a) . phi_y, an (n.dims[x] x m.dims[y]) identity
        for r in 0..n.dims[x] {
            for j in 0..m.dims[y] {
                // sum_c phi_x[r,c] M(a)[c,j] - sum_s N(a)[r,s] phi_y[s,j] = 0
                for c in 0..m.dims[x] {
                    let v = ma.get(c, j);
                    if v != 0 {
                        trips.push((eq, var(x, r, c, m, n), v));
                    }
                }
                for s in 0..n.dims[y] {
                    let v = na.get(r, s);
                    if v != 0 {
                        trips.push((eq, var(y, s, j, m, n), p - v));
                    }
                }
                eq += 1;
            }
        }
    }
    for (x, cmat) in constraints {
        // C . phi_x = 0: for each row u of C and column c of phi_x
        for u in 0..cmat.rows {
            for c in 0..m.dims[*x] {
                for &(rr, v) in cmat.row(u) {
                    trips.push((eq, var(*x, rr as usize, c, m, n), v));
                }
                eq += 1;
            }
        }
    }
    for (x, vmat) in right_kill {
        // phi_x . V = 0
        for r in 0..n.dims[*x] {
            for j in 0..vmat.cols {
                for c in 0..m.dims[*x] {
                    let v = vmat.get(c, j);
                    if v != 0 {
                        trips.push((eq, var(*x, r, c, m, n), v));
                    }
                }
                eq += 1;
            }
        }
    }
    let system = SparseMat::from_triplets(eq, nvars, p, &trips);
    let kernel = system.kernel_basis();
    (0..kernel.cols)
        .map(|k| {
            let mut col = vec![0u32; nvars];
            for r in 0..nvars {
                let v = kernel.get(r, k);
                if v != 0 {
                    col[r] = v;
                }
            }
            (0..nobj)
                .map(|x| {
                    let mut t = Vec::new();
                    for r in 0..n.dims[x] {
                        for c in 0..m.dims[x] {
                            let v = col[var(x, r, c, m, n)];
                            if v != 0 {
                                t.push((r, c, v));
                            }
                        }
                    }
                    SparseMat::from_triplets(n.dims[x], m.dims[x], p, &t)
                })
                .collect()
        })
        .collect()
}

pub fn hom_basis(alg: &BasedAlgebra, m: &Rep, n: &Rep) -> Vec<RepHom> {
    hom_basis_constrained(alg, m, n, &[], &[])
}

pub fn hom_dim(alg: &BasedAlgebra, m: &Rep, n: &Rep) -> usize {
    hom_basis(alg, m, n).len()
}

fn hom_is_iso(h: &RepHom, m: &Rep, n: &Rep) -> bool {
    h.iter()
        .enumerate()
        .all(|(x, mat)| m.dims[x] == n.dims[x] && mat.rank() == m.dims[x])
}

fn combine(basis: &[RepHom], coeffs: &[u32], p: u32) -> RepHom {
    let mut acc = super::rep::scale_hom(&basis[0], coeffs[0]);
    for (b, &c) in basis.iter().zip(coeffs).skip(1) {
        if c % p != 0 {
            acc = super::rep::add_homs(&acc, &super::rep::scale_hom(b, c));
        }
    }
    acc
}

/// Search for an invertible morphism `M -> N`. Returns `Ok(None)` only when
/// non-existence is certain; if the search space is too large to decide, an
/// `Undetermined` error is raised rather than guessing.
pub fn find_iso(alg: &BasedAlgebra, m: &Rep, n: &Rep) -> Result<Option<RepHom>> {
    if m.dims != n.dims {
        return Ok(None);
    }
    if m.total_dim() == 0 {
        return Ok(Some(super::rep::identity_hom(alg, m)));
    }
    let basis = hom_basis(alg, m, n);
    if basis.is_empty() {
        return Ok(None);
    }
    let p = alg.p;
    // single basis elements first
    for b in &basis {
        if hom_is_iso(b, m, n) {
            return Ok(Some(b.clone()));
        }
    }
    let r = basis.len();
    // projective enumeration (first nonzero coefficient 1) when feasible
    let classes = {
        let mut c: u64 = 0;
        let mut pw: u64 = 1;
        for _ in 0..r {
            c += pw;
            pw = pw.saturating_mul(p as u64);
            if c > 400_000 {
                break;
            }
        }
        c
    };
    if classes <= 400_000 {
        let mut coeffs = vec![0u32; r];
        if enumerate_proj(alg, m, n, &basis, &mut coeffs, 0, true) {
            // re-run to fetch the witness (cheap relative to clarity)
            let mut coeffs = vec![0u32; r];
            let found = enumerate_proj_fetch(alg, m, n, &basis, &mut coeffs, 0, true);
            return Ok(found);
        }
        return Ok(None);
    }
    // randomized search: success gives a certain positive answer
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        let coeffs: Vec<u32> = (0..r).map(|_| rng.gen_range(0..p)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let h = combine(&basis, &coeffs, p);
        if hom_is_iso(&h, m, n) {
            return Ok(Some(h));
        }
    }
    Err(Error::Undetermined(format!(
        "isomorphism search space too large: {r} basis morphisms over F_{p}"
    )))
}

fn enumerate_proj(
    alg: &BasedAlgebra,
    m: &Rep,
    n: &Rep,
    basis: &[RepHom],
    coeffs: &mut Vec<u32>,
    i: usize,
    all_zero: bool,
) -> bool {
    if i == basis.len() {
        return !all_zero && hom_is_iso(&combine(basis, coeffs, alg.p), m, n);
    }
    if all_zero {
        // first nonzero coefficient normalized to 1
        coeffs[i] = 0;
        if enumerate_proj(alg, m, n, basis, coeffs, i + 1, true) {
            return true;
        }
        coeffs[i] = 1;
        if enumerate_proj(alg, m, n, basis, coeffs, i + 1, false) {
            return true;
        }
        coeffs[i] = 0;
        false
    } else {
        for v in 0..alg.p {
            coeffs[i] = v;
            if enumerate_proj(alg, m, n, basis, coeffs, i + 1, false) {
                return true;
            }
        }
        coeffs[i] = 0;
        false
    }
}

fn enumerate_proj_fetch(
    alg: &BasedAlgebra,
    m: &Rep,
    n: &Rep,
    basis: &[RepHom],
    coeffs: &mut Vec<u32>,
    i: usize,
    all_zero: bool,
) -> Option<RepHom> {
    if i == basis.len() {
        if all_zero {
            return None;
        }
        let h = combine(basis, coeffs, alg.p);
        return if hom_is_iso(&h, m, n) { Some(h) } else { None };
    }
    if all_zero {
        coeffs[i] = 0;
        if let Some(h) = enumerate_proj_fetch(alg, m, n, basis, coeffs, i + 1, true) {
            return Some(h);
        }
        coeffs[i] = 1;
        let r = enumerate_proj_fetch(alg, m, n, basis, coeffs, i + 1, false);
        if r.is_none() {
            coeffs[i] = 0;
        }
        r
    } else {
        for v in 0..alg.p {
            coeffs[i] = v;
            if let Some(h) = enumerate_proj_fetch(alg, m, n, basis, coeffs, i + 1, false) {
                return Some(h);
            }
        }
        coeffs[i] = 0;
        None
    }
}

pub fn reps_isomorphic(alg: &BasedAlgebra, m: &Rep, n: &Rep) -> Result<bool> {
    Ok(find_iso(alg, m, n)?.is_some())
}
