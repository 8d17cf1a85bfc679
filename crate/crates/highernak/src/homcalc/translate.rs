//! Higher Auslander-Reiten translates via transpose and duality.

use super::rep::{dual, image_fibers, quotient_rep, Rep};
use super::resolve::{min_proj_resolution, realize_alg_mat, AlgMat, ProjTerm};
use crate::algebra::BasedAlgebra;
use crate::error::Result;

pub struct TauOutput {
    pub rep: Rep,
    /// true when the translate vanished (projective input, possibly after
    /// dropping projective summands)
    pub vanished: bool,
}

/// Classical translate: transpose of a minimal projective presentation,
/// dualized back. Projective direct summands die in the transpose, so no
/// separate stripping is needed.
pub fn tau(alg: &BasedAlgebra, alg_op: &BasedAlgebra, m: &Rep) -> Result<TauOutput> {
    if m.is_zero() {
        return Ok(TauOutput { rep: super::rep::zero_rep(alg), vanished: true });
    }
    let res = min_proj_resolution(alg, m, 1, false)?;
    let p0 = &res.terms[0];
    if res.terms.len() < 2 || res.terms[1].is_empty() {
        // projective module: presentation 0 -> P -> M
        return Ok(TauOutput { rep: super::rep::zero_rep(alg), vanished: true });
    }
    let p1 = &res.terms[1];
    let d1 = &res.diffs_alg[0];
    // transpose over the opposite algebra: same labels, transposed matrix
    let q0 = ProjTerm::build(alg_op, p0.labels.clone());
    let q1 = ProjTerm::build(alg_op, p1.labels.clone());
    let mut tmat: AlgMat = vec![vec![Vec::new(); q0.labels.len()]; q1.labels.len()];
    for (a, row) in d1.iter().enumerate() {
        for (b, entry) in row.iter().enumerate() {
            // entry: morphisms x_b -> y_a over alg, reused as y_a -> x_b over op
            tmat[b][a] = entry.clone();
        }
    }
    let psi = realize_alg_mat(alg_op, &q0, &q1, &tmat);
    let (transpose, _) = quotient_rep(alg_op, &q1.rep, &image_fibers(&psi));
    let out = dual(alg_op, &transpose);
    let vanished = out.is_zero();
    Ok(TauOutput { rep: out, vanished })
}

/// Higher translate: the classical translate of the (d-1)-st syzygy.
pub fn tau_d(alg: &BasedAlgebra, alg_op: &BasedAlgebra, m: &Rep, d: usize) -> Result<TauOutput> {
    assert!(d >= 1);
    let omega = super::resolve::syzygy(alg, m, d - 1)?;
    tau(alg, alg_op, &omega)
}
