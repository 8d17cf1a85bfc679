//! Schur simplicity inside a collection: every nonzero incoming morphism is
//! an epimorphism, every nonzero outgoing one a monomorphism.

use super::hom::hom_basis_constrained;
use super::rep::{complement_projection, radical_fibers, socle_fibers, Rep};
use crate::algebra::BasedAlgebra;
use crate::error::{Error, Result};
use crate::exactla::SparseMat;

const ENUM_CAP: usize = 4;

/// Nonzero dual vectors up to scale on an f-dimensional space.
fn projective_vectors(f: usize, p: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut v = vec![0u32; f];
    // first nonzero coordinate equals 1
    fn rec(v: &mut Vec<u32>, i: usize, seen: bool, p: u32, out: &mut Vec<Vec<u32>>) {
        if i == v.len() {
            if seen {
                out.push(v.clone());
            }
            return;
        }
        if !seen {
            v[i] = 0;
            rec(v, i + 1, false, p, out);
            v[i] = 1;
            rec(v, i + 1, true, p, out);
            v[i] = 0;
        } else {
            for c in 0..p {
                v[i] = c;
                rec(v, i + 1, true, p, out);
            }
            v[i] = 0;
        }
    }
    rec(&mut v, 0, false, p, &mut out);
    out
}

/// True iff every nonzero morphism `X -> S` (X in the collection) is
/// surjective and every nonzero `S -> X` is injective.
///
/// A non-surjective morphism lands in a maximal submodule, which is the
/// preimage of a top hyperplane at one vertex; a non-injective one kills a
/// socle line. Both families are finite over F_p and each gives one
/// constrained Hom computation that must vanish.
pub fn schur_simple_test(alg: &BasedAlgebra, members: &[Rep], s_idx: usize) -> Result<bool> {
    let s = &members[s_idx];
    if s.is_zero() {
        return Ok(false);
    }
    let p = alg.p;
    let rad = radical_fibers(alg, s);
    let soc = socle_fibers(alg, s);

    // incoming: factorizations through maximal submodules
    for v in 0..alg.n_objects() {
        let (_, q) = complement_projection(&rad[v]); // top projection at v
        let t = q.rows;
        if t == 0 {
            continue;
        }
        if t > ENUM_CAP {
            return Err(Error::Undetermined(format!(
                "top fiber of dimension {t} too large to enumerate hyperplanes"
            )));
        }
        for xi in projective_vectors(t, p) {
            // constraint row: xi . Q
            let xi_row = SparseMat::from_triplets(
                1,
                t,
                p,
                &xi.iter().enumerate().map(|(j, &c)| (0, j, c)).collect::<Vec<_>>(),
            );
            let c_v = xi_row.multiply(&q)?;
            for x in members {
                let constrained = hom_basis_constrained(alg, x, s, &[(v, c_v.clone())], &[]);
                if !constrained.is_empty() {
                    return Ok(false);
                }
            }
        }
    }

    // outgoing: factorizations killing socle lines
    for v in 0..alg.n_objects() {
        let sv = &soc[v];
        if sv.cols == 0 {
            continue;
        }
        if sv.cols > ENUM_CAP {
            return Err(Error::Undetermined(format!(
                "socle fiber of dimension {} too large to enumerate lines",
                sv.cols
            )));
        }
        for coeffs in projective_vectors(sv.cols, p) {
            let col = SparseMat::from_triplets(
                sv.cols,
                1,
                p,
                &coeffs.iter().enumerate().map(|(j, &c)| (j, 0, c)).collect::<Vec<_>>(),
            );
            let vline = sv.multiply(&col)?;
            for x in members {
                let constrained = hom_basis_constrained(alg, s, x, &[], &[(v, vline.clone())]);
                if !constrained.is_empty() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Directly test whether a representation is simple.
pub fn is_simple(m: &Rep) -> bool {
    m.total_dim() == 1
}
