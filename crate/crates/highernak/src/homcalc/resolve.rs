//! Projective covers, minimal resolutions and Ext.

use super::hom::reps_isomorphic;
use super::rep::{
    self, act, act_comb, complement_projection, direct_sum, kernel_rep, projective, radical_fibers,
    Rep, RepHom,
};
use crate::algebra::{BasedAlgebra, MorId, ObjId};
use crate::error::{Error, Result};
use crate::exactla::SparseMat;

/// A finite direct sum of indecomposable projectives, with its realization.
#[derive(Clone, Debug)]
pub struct ProjTerm {
    pub labels: Vec<ObjId>,
    pub rep: Rep,
    /// `offsets[s][x]`: start of summand `s` inside the fiber at `x`
    pub offsets: Vec<Vec<usize>>,
}

impl ProjTerm {
    pub fn empty(alg: &BasedAlgebra) -> Self {
        ProjTerm { labels: Vec::new(), rep: rep::zero_rep(alg), offsets: Vec::new() }
    }

    pub fn build(alg: &BasedAlgebra, labels: Vec<ObjId>) -> Self {
        let parts: Vec<Rep> = labels.iter().map(|&x| projective(alg, x)).collect();
        let refs: Vec<&Rep> = parts.iter().collect();
        let (rep, offsets) = direct_sum(alg, &refs);
        ProjTerm { labels, rep, offsets }
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// A matrix of algebra elements: entry `(a, b)` is a combination of basis
/// morphisms `labels_src[b] -> labels_tgt[a]`.
pub type AlgEntry = Vec<(MorId, u32)>;
pub type AlgMat = Vec<Vec<AlgEntry>>;

/// Projective cover `P(top M) -> M`.
pub fn cover(alg: &BasedAlgebra, m: &Rep) -> (ProjTerm, RepHom) {
    let rad = radical_fibers(alg, m);
    let mut labels = Vec::new();
    let mut vectors: Vec<(usize, Vec<u32>)> = Vec::new(); // (object, top representative)
    for x in 0..alg.n_objects() {
        let (c, _q) = complement_projection(&rad[x]);
        for j in 0..c.cols {
            labels.push(ObjId(x));
            let col: Vec<u32> = (0..m.dims[x]).map(|r| c.get(r, j)).collect();
            vectors.push((x, col));
        }
    }
    let term = ProjTerm::build(alg, labels);
    // assemble the map fiberwise: summand (x, v) contributes at fiber y the
    // composite Hom(y, x) -> M(y), g |-> M(g) v
    let mut phi: RepHom = (0..alg.n_objects())
        .map(|y| SparseMat::zero(m.dims[y], term.rep.dims[y], alg.p))
        .collect();
    for (s, (x, v)) in vectors.iter().enumerate() {
        for y in 0..alg.n_objects() {
            let basis = alg.hom(ObjId(y), ObjId(*x));
            if basis.is_empty() {
                continue;
            }
            let mut trips = Vec::new();
            for (b, &g) in basis.iter().enumerate() {
                let mg = act(alg, m, g); // M(g) : M(x) -> M(y)
                let img = mg.apply(v);
                for (r, &val) in img.iter().enumerate() {
                    if val != 0 {
                        trips.push((r, term.offsets[s][y] + b, val));
                    }
                }
            }
            let add = SparseMat::from_triplets(m.dims[y], term.rep.dims[y], alg.p, &trips);
            phi[y] = phi[y].add(&add);
        }
    }
    (term, phi)
}

/// Express a morphism between projective terms as a matrix over the algebra,
/// reading coefficients off the identity basis vectors.
pub fn alg_entries(alg: &BasedAlgebra, src: &ProjTerm, tgt: &ProjTerm, phi: &RepHom) -> AlgMat {
    let mut out: AlgMat = vec![vec![Vec::new(); src.labels.len()]; tgt.labels.len()];
    for (b, &xb) in src.labels.iter().enumerate() {
        let x = xb.0;
        let basis = alg.hom(xb, xb);
        let id_pos = basis
            .iter()
            .position(|&f| alg.mor(f).is_id)
            .expect("identity in endomorphism basis");
        let col = src.offsets[b][x] + id_pos;
        // image of the identity generator inside the fiber of tgt at x
        for (a, &ya) in tgt.labels.iter().enumerate() {
            let tb = alg.hom(xb, ya);
            for (k, &f) in tb.iter().enumerate() {
                let v = phi[x].get(tgt.offsets[a][x] + k, col);
                if v != 0 {
                    out[a][b].push((f, v));
                }
            }
        }
    }
    out
}

/// Realize an algebra matrix as an explicit morphism `src.rep -> tgt.rep`.
pub fn realize_alg_mat(alg: &BasedAlgebra, src: &ProjTerm, tgt: &ProjTerm, mat: &AlgMat) -> RepHom {
    let mut phi: RepHom = (0..alg.n_objects())
        .map(|y| SparseMat::zero(tgt.rep.dims[y], src.rep.dims[y], alg.p))
        .collect();
    for (a, row) in mat.iter().enumerate() {
        let ya = tgt.labels[a];
        for (b, entry) in row.iter().enumerate() {
            if entry.is_empty() {
                continue;
            }
            let xb = src.labels[b];
            for y in 0..alg.n_objects() {
                let src_basis = alg.hom(ObjId(y), xb);
                let tgt_basis = alg.hom(ObjId(y), ya);
                if src_basis.is_empty() || tgt_basis.is_empty() {
                    continue;
                }
                // map Hom(y, xb) -> Hom(y, ya): g |-> entry . g
                let mut trips = Vec::new();
                for (c, &g) in src_basis.iter().enumerate() {
                    for &(f, coeff) in entry {
                        for (h, c2) in alg.compose(f, g).expect("composable") {
                            let r = tgt_basis.iter().position(|&u| u == h).unwrap();
                            trips.push((
                                tgt.offsets[a][y] + r,
                                src.offsets[b][y] + c,
                                (coeff as u64 * c2 as u64 % alg.p as u64) as u32,
                            ));
                        }
                    }
                }
                let add = SparseMat::from_triplets(tgt.rep.dims[y], src.rep.dims[y], alg.p, &trips);
                phi[y] = phi[y].add(&add);
            }
        }
    }
    phi
}

#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<ProjTerm>,
    /// `diffs[i] : terms[i+1].rep -> terms[i].rep`
    pub diffs: Vec<RepHom>,
    pub diffs_alg: Vec<AlgMat>,
    pub aug: RepHom,
    pub target: Rep,
    pub syzygies: Vec<Rep>,
    /// `Some((a, p))` when the syzygy after degree `a + p` repeats the one
    /// after degree `a`, witnessing infinite projective dimension
    pub periodic: Option<(usize, usize)>,
    /// resolution reached zero; projective dimension = terms.len() - 1
    pub terminated: bool,
}

/// Iterated projective covers. Stops at zero, at a repeated syzygy (when
/// `detect_period`), or at `max_deg` terms beyond degree zero.
pub fn min_proj_resolution(
    alg: &BasedAlgebra,
    m: &Rep,
    max_deg: usize,
    detect_period: bool,
) -> Result<Resolution> {
    let mut res = Resolution {
        terms: Vec::new(),
        diffs: Vec::new(),
        diffs_alg: Vec::new(),
        aug: Vec::new(),
        target: m.clone(),
        syzygies: Vec::new(),
        periodic: None,
        terminated: false,
    };
    if m.is_zero() {
        res.terminated = true;
        res.aug = rep::zero_hom(alg, &rep::zero_rep(alg), m);
        return Ok(res);
    }
    let (t0, aug) = cover(alg, m);
    res.aug = aug.clone();
    res.terms.push(t0);
    let (mut omega, mut incl) = kernel_rep(alg, &aug, &res.terms[0].rep);
    loop {
        if omega.is_zero() {
            res.terminated = true;
            return Ok(res);
        }
        if detect_period {
            for (j, old) in res.syzygies.iter().enumerate() {
                if old.dims == omega.dims && reps_isomorphic(alg, old, &omega)? {
                    res.periodic = Some((j, res.syzygies.len() - j));
                    return Ok(res);
                }
            }
        }
        res.syzygies.push(omega.clone());
        if res.terms.len() > max_deg {
            return Ok(res);
        }
        let (t, epi) = cover(alg, &omega);
        // differential: T -> omega -> previous term
        let diff = rep::compose_homs(&incl, &epi);
        let prev = res.terms.last().unwrap();
        res.diffs_alg.push(alg_entries(alg, &t, prev, &diff));
        res.diffs.push(diff);
        res.terms.push(t);
        let last = res.terms.last().unwrap();
        let (next, next_incl) = kernel_rep(alg, res.diffs.last().unwrap(), &last.rep);
        omega = next;
        incl = next_incl;
    }
}

/// The i-th syzygy (0-th is the module itself up to convention: here the
/// kernel after i covers). `None` when the resolution terminated earlier.
pub fn syzygy(alg: &BasedAlgebra, m: &Rep, i: usize) -> Result<Rep> {
    if i == 0 {
        return Ok(m.clone());
    }
    let res = min_proj_resolution(alg, m, i, false)?;
    if res.syzygies.len() >= i {
        Ok(res.syzygies[i - 1].clone())
    } else {
        Ok(rep::zero_rep(alg))
    }
}

/// Exactness, minimality and augmentation checks, degree by degree.
pub fn verify_resolution(alg: &BasedAlgebra, res: &Resolution) -> Result<()> {
    if res.terms.is_empty() {
        return Ok(());
    }
    // augmentation surjective with kernel = image of the first differential
    let aug_rank: usize = res.aug.iter().map(|f| f.rank()).sum();
    if aug_rank != res.target.total_dim() {
        return Err(Error::Dim("augmentation is not surjective".into()));
    }
    for i in 0..res.diffs.len() {
        let upper = &res.diffs[i];
        // composite with the previous map vanishes
        if i == 0 {
            let comp = rep::compose_homs(&res.aug, upper);
            if !rep::hom_is_zero(&comp) {
                return Err(Error::Dim("aug . d_1 nonzero".into()));
            }
        } else {
            let comp = rep::compose_homs(&res.diffs[i - 1], upper);
            if !rep::hom_is_zero(&comp) {
                return Err(Error::Dim(format!("d_{} . d_{} nonzero", i, i + 1)));
            }
        }
        // exactness by rank count
        let rank_upper: usize = upper.iter().map(|f| f.rank()).sum();
        let dim_mid = res.terms[i].rep.total_dim();
        let rank_lower: usize = if i == 0 {
            aug_rank
        } else {
            res.diffs[i - 1].iter().map(|f| f.rank()).sum()
        };
        if rank_upper + rank_lower != dim_mid {
            return Err(Error::Dim(format!("not exact at degree {i}")));
        }
        // minimality: no identity coefficients in the algebra entries
        for row in &res.diffs_alg[i] {
            for entry in row {
                for &(f, c) in entry {
                    if alg.mor(f).is_id && c % alg.p != 0 {
                        return Err(Error::Dim(format!("differential {} not minimal", i + 1)));
                    }
                }
            }
        }
    }
    // terminal exactness when the resolution stopped at zero
    if res.terminated && !res.diffs.is_empty() {
        let last = res.diffs.len() - 1;
        let rank_last: usize = res.diffs[last].iter().map(|f| f.rank()).sum();
        if rank_last != res.terms[last + 1].rep.total_dim() {
            return Err(Error::Dim("final differential not injective".into()));
        }
    }
    Ok(())
}

/// dim Ext^i(M, N) from a resolution of `M` that reaches degree `i + 1` (or
/// terminates earlier).
pub fn ext_from_resolution(alg: &BasedAlgebra, res: &Resolution, n: &Rep, i: usize) -> Result<usize> {
    let pd_known = res.terminated.then(|| res.terms.len().saturating_sub(1));
    if let Some(pd) = pd_known {
        if i > pd {
            return Ok(0);
        }
    } else if res.terms.len() < i + 2 {
        return Err(Error::NeedsLongerResolution(format!(
            "resolution has {} terms, Ext^{i} needs {}",
            res.terms.len(),
            i + 2
        )));
    }
    // Hom(T_k, N) = direct sum of N(label); differentials by precomposition
    let delta = |k: usize| -> Result<SparseMat> {
        // delta_k : Hom(T_k, N) -> Hom(T_{k+1}, N), induced by diffs[k]
        if k >= res.diffs.len() || res.terms.len() <= k + 1 {
            let rows = hom_term_dim(res, k + 1, n);
            let cols = hom_term_dim(res, k, n);
            return Ok(SparseMat::zero(rows, cols, alg.p));
        }
        let src_term = &res.terms[k];
        let tgt_term = &res.terms[k + 1];
        let mat = &res.diffs_alg[k];
        // block (b, a): sum over entries (f, c) of c * N(f) with
        // f : x_b -> y_a, N(f) : N(y_a) -> N(x_b)
        let mut row_off = vec![0usize; tgt_term.labels.len() + 1];
        for (b, &xb) in tgt_term.labels.iter().enumerate() {
            row_off[b + 1] = row_off[b] + n.dims[xb.0];
        }
        let mut col_off = vec![0usize; src_term.labels.len() + 1];
        for (a, &ya) in src_term.labels.iter().enumerate() {
            col_off[a + 1] = col_off[a] + n.dims[ya.0];
        }
        let mut trips = Vec::new();
        for (a, row) in mat.iter().enumerate() {
            for (b, entry) in row.iter().enumerate() {
                if entry.is_empty() {
                    continue;
                }
                let (xb, ya) = (tgt_term.labels[b], src_term.labels[a]);
                let block = act_comb(alg, n, entry, n.dims[xb.0], n.dims[ya.0]);
                for r in 0..block.rows {
                    for &(c, v) in block.row(r) {
                        trips.push((row_off[b] + r, col_off[a] + c as usize, v));
                    }
                }
            }
        }
        Ok(SparseMat::from_triplets(
            row_off[tgt_term.labels.len()],
            col_off[src_term.labels.len()],
            alg.p,
            &trips,
        ))
    };
    let d_i = delta(i)?;
    let ker = d_i.cols - d_i.rank();
    let im_prev = if i == 0 { 0 } else { delta(i - 1)?.rank() };
    Ok(ker - im_prev)
}

fn hom_term_dim(res: &Resolution, k: usize, n: &Rep) -> usize {
    if k >= res.terms.len() {
        return 0;
    }
    res.terms[k].labels.iter().map(|&x| n.dims[x.0]).sum()
}

/// dim Ext^i(M, N), resolving `M` as far as needed. Degree zero runs through
/// the Hom complex as well, so it double-checks the intertwiner route.
pub fn ext_dim(alg: &BasedAlgebra, m: &Rep, n: &Rep, i: usize) -> Result<usize> {
    let res = min_proj_resolution(alg, m, i + 1, false)?;
    ext_from_resolution(alg, &res, n, i)
}
