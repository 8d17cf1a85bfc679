//! Finite dimensional modules presented as representations.
//!
//! A module is a contravariant functor to vector spaces: the matrix stored
//! for an arrow `a : x -> y` maps the fiber at `y` to the fiber at `x`. This
//! is the convention under which the projective at `x` is supported on
//! `{ y : Hom(y, x) != 0 }` with top the simple at `x`, so the dimension of
//! `P_x` reproduces the Kupisch entry.

use crate::algebra::{AlgKind, BasedAlgebra, MorId, ObjId};
use crate::error::{Error, Result};
use crate::exactla::SparseMat;
use crate::oset::{KupischKind, OSeq};

#[derive(Clone, Debug, PartialEq)]
pub struct Rep {
    pub dims: Vec<usize>,
    /// indexed parallel to `alg.arrows`; entry for `a : x -> y` has shape
    /// `dims[x] x dims[y]`
    pub maps: Vec<SparseMat>,
}

impl Rep {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn dim_vector(&self) -> &[usize] {
        &self.dims
    }
}

pub fn zero_rep(alg: &BasedAlgebra) -> Rep {
    let dims = vec![0; alg.n_objects()];
    let maps = alg
        .arrows
        .iter()
        .map(|_| SparseMat::zero(0, 0, alg.p))
        .collect();
    Rep { dims, maps }
}

/// The matrix of a basis morphism acting on `m`, via the arrow factorization.
pub fn act(alg: &BasedAlgebra, m: &Rep, f: MorId) -> SparseMat {
    let mor = alg.mor(f);
    if mor.is_id {
        return SparseMat::identity(m.dims[mor.src.0], alg.p);
    }
    let path = alg.factorization(f);
    let mut acc: Option<SparseMat> = None;
    for &step in path {
        let k = alg.arrow_index(step).expect("factorization consists of arrows");
        let mat = &m.maps[k];
        acc = Some(match acc {
            None => mat.clone(),
            Some(prev) => prev.multiply(mat).expect("factorization shapes line up"),
        });
    }
    acc.expect("positive length morphism has a nonempty factorization")
}

/// Linear combination of basis morphisms acting on `m`.
pub fn act_comb(alg: &BasedAlgebra, m: &Rep, comb: &[(MorId, u32)], rows: usize, cols: usize) -> SparseMat {
    let mut acc = SparseMat::zero(rows, cols, alg.p);
    for &(f, c) in comb {
        acc = acc.add(&act(alg, m, f).scale(c));
    }
    acc
}

/// Validate shapes and the defining relations of the algebra.
///
/// For the combinatorial algebras this checks commutativity squares whose
/// four corners exist, two-step composites whose basis morphism vanishes,
/// and for d = 1 the minimal zero relation run out of every object. Table
/// categories are checked for functoriality on all composable pairs of
/// radical basis morphisms.
pub fn validate(alg: &BasedAlgebra, m: &Rep) -> Result<()> {
    if m.dims.len() != alg.n_objects() || m.maps.len() != alg.arrows.len() {
        return Err(Error::Dim("representation indexed against a different algebra".into()));
    }
    for (k, &a) in alg.arrows.iter().enumerate() {
        let mor = alg.mor(a);
        let mat = &m.maps[k];
        if mat.rows != m.dims[mor.src.0] || mat.cols != m.dims[mor.tgt.0] {
            return Err(Error::Dim(format!(
                "arrow {} has shape {}x{}, expected {}x{}",
                k, mat.rows, mat.cols, m.dims[mor.src.0], m.dims[mor.tgt.0]
            )));
        }
    }
    match &alg.kind {
        AlgKind::Table(_) => validate_table(alg, m),
        AlgKind::Nakayama(series) => {
            validate_squares(alg, m)?;
            if alg.d == 1 {
                validate_runs_d1(alg, m, series.kind == KupischKind::ATilde)?;
            }
            Ok(())
        }
    }
}

fn validate_table(alg: &BasedAlgebra, m: &Rep) -> Result<()> {
    for &f in &alg.arrows {
        for &g in &alg.arrows {
            let (mf, mg) = (alg.mor(f), alg.mor(g));
            if mf.src != mg.tgt {
                continue;
            }
            let comb = alg.compose(f, g)?;
            let expect = act_comb(alg, m, &comb, m.dims[mg.src.0], m.dims[mf.tgt.0]);
            let got = act(alg, m, g).multiply(&act(alg, m, f))?;
            if expect != got {
                return Err(Error::Dim("functoriality fails on a composable pair".into()));
            }
        }
    }
    Ok(())
}

fn validate_squares(alg: &BasedAlgebra, m: &Rep) -> Result<()> {
    let d = alg.d;
    // arrows keyed by source object and raised coordinate
    let mut arrow_at = vec![vec![None; d]; alg.n_objects()];
    for &a in &alg.arrows {
        let mor = alg.mor(a);
        let coord = raised_coordinate(alg, a);
        arrow_at[mor.src.0][coord] = Some(a);
    }
    for x in 0..alg.n_objects() {
        for i in 0..d {
            let Some(ai) = arrow_at[x][i] else { continue };
            let mid = alg.mor(ai).tgt;
            for j in 0..d {
                let Some(aj) = arrow_at[mid.0][j] else { continue };
                if i == j {
                    continue;
                }
                let end = alg.mor(aj).tgt;
                // path x -> x+e_i -> x+e_i+e_j
                let composite = alg.compose(aj, ai)?;
                let ki = alg.arrow_index(ai).unwrap();
                let kj = alg.arrow_index(aj).unwrap();
                let via_i = m.maps[ki].multiply(&m.maps[kj])?;
                if composite.is_empty() {
                    if !via_i.is_zero() {
                        return Err(Error::Dim(format!(
                            "zero composite acts nonzero out of object {}",
                            alg.label(ObjId(x))
                        )));
                    }
                    continue;
                }
                // the square partner, when it exists, must act identically
                if let Some(bj) = arrow_at[x][j] {
                    if let Some(bi) = arrow_at[alg.mor(bj).tgt.0][i] {
                        if alg.mor(bi).tgt == end {
                            let kjj = alg.arrow_index(bj).unwrap();
                            let kii = alg.arrow_index(bi).unwrap();
                            let via_j = m.maps[kjj].multiply(&m.maps[kii])?;
                            if via_i != via_j {
                                return Err(Error::Dim(format!(
                                    "commutativity square fails at object {}",
                                    alg.label(ObjId(x))
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Coordinate raised by an arrow, read off the lifted labels.
fn raised_coordinate(alg: &BasedAlgebra, a: MorId) -> usize {
    let mor = alg.mor(a);
    let src = alg.label(mor.src).entries();
    let n = match &alg.kind {
        AlgKind::Nakayama(k) => k.n() as i64,
        AlgKind::Table(_) => unreachable!(),
    };
    let tgt: Vec<i64> = alg
        .label(mor.tgt)
        .entries()
        .iter()
        .map(|&v| v + mor.winding as i64 * n)
        .collect();
    (0..src.len()).find(|&i| tgt[i] == src[i] + 1).expect("arrow raises one coordinate")
}

fn validate_runs_d1(alg: &BasedAlgebra, m: &Rep, cyclic: bool) -> Result<()> {
    let AlgKind::Nakayama(series) = &alg.kind else { unreachable!() };
    let max_ell = *series.entries.iter().max().unwrap() as i64;
    let mut arrow_from = vec![None; alg.n_objects()];
    for &a in &alg.arrows {
        arrow_from[alg.mor(a).src.0] = Some(a);
    }
    for x in 0..alg.n_objects() {
        let mut cur = ObjId(x);
        let mut acc: Option<SparseMat> = None;
        let start = alg.label(ObjId(x)).entries()[0];
        for step in 1..=(max_ell + 1) {
            let Some(a) = arrow_from[cur.0] else { break };
            let k = alg.arrow_index(a).unwrap();
            acc = Some(match acc {
                None => m.maps[k].clone(),
                Some(prev) => prev.multiply(&m.maps[k])?,
            });
            cur = alg.mor(a).tgt;
            // does a basis morphism of this length exist?
            let lift_top = start + step;
            let has_mor = if cyclic {
                (start..=lift_top).all(|t| t - start + 1 <= series.ell(t) as i64)
            } else {
                lift_top <= series.n() as i64 - 1
                    && (start..=lift_top).all(|t| t - start + 1 <= series.ell(t) as i64)
            };
            if !has_mor {
                if !acc.as_ref().unwrap().is_zero() {
                    return Err(Error::Dim(format!(
                        "relation path of length {} out of {} acts nonzero",
                        step,
                        alg.label(ObjId(x))
                    )));
                }
                break;
            }
        }
    }
    Ok(())
}

/// The simple at `x`.
pub fn simple(alg: &BasedAlgebra, x: ObjId) -> Rep {
    let mut dims = vec![0; alg.n_objects()];
    dims[x.0] = 1;
    let maps = alg
        .arrows
        .iter()
        .map(|&a| {
            let mor = alg.mor(a);
            SparseMat::zero(dims[mor.src.0], dims[mor.tgt.0], alg.p)
        })
        .collect();
    Rep { dims, maps }
}

/// The projective at `x`: fiber at `y` has basis the morphisms `y -> x`,
/// arrows act by precomposition.
pub fn projective(alg: &BasedAlgebra, x: ObjId) -> Rep {
    let dims: Vec<usize> = (0..alg.n_objects()).map(|y| alg.hom_dim(ObjId(y), x)).collect();
    let maps = alg
        .arrows
        .iter()
        .map(|&a| {
            let mor = alg.mor(a);
            let (src, tgt) = (mor.src, mor.tgt);
            let src_basis = alg.hom(src, x);
            let tgt_basis = alg.hom(tgt, x);
            let mut trips = Vec::new();
            for (c, &g) in tgt_basis.iter().enumerate() {
                for (h, coeff) in alg.compose(g, a).expect("composable by construction") {
                    let r = src_basis.iter().position(|&u| u == h).expect("composite lies in the Hom basis");
                    trips.push((r, c, coeff));
                }
            }
            SparseMat::from_triplets(src_basis.len(), tgt_basis.len(), alg.p, &trips)
        })
        .collect();
    Rep { dims, maps }
}

/// Dualize a module over `alg_from` into one over its opposite (or back).
/// Arrow positions agree between the two algebras; matrices transpose.
pub fn dual(_alg_from: &BasedAlgebra, m: &Rep) -> Rep {
    Rep { dims: m.dims.clone(), maps: m.maps.iter().map(|mat| mat.transpose()).collect() }
}

/// The injective at `x`: dual of the opposite projective.
pub fn injective(_alg: &BasedAlgebra, alg_op: &BasedAlgebra, x: ObjId) -> Rep {
    dual(alg_op, &projective(alg_op, x))
}

/// Interval module for `lambda` in `os^(d+1)`: one-dimensional fibers on the
/// support interval, identity maps inside. In the cyclic case fibers are
/// indexed by the lifted support points lying over each object.
pub fn interval_module(alg: &BasedAlgebra, lambda: &OSeq) -> Result<Rep> {
    let AlgKind::Nakayama(series) = &alg.kind else {
        return Err(Error::Argument("interval modules live over combinatorial algebras".into()));
    };
    if lambda.len() != alg.d + 1 {
        return Err(Error::Argument(format!(
            "interval label must have length {}, got {}",
            alg.d + 1,
            lambda.len()
        )));
    }
    let lambda = match series.kind {
        KupischKind::ATilde => crate::oset::canonicalize(lambda, series.n()),
        KupischKind::A => lambda.clone(),
    };
    if !series.admits(&lambda) {
        return Err(Error::Argument(format!("label {lambda} outside the admissible index set")));
    }
    let support = crate::oset::interval_support(&lambda)?;
    let n = series.n() as i64;
    // fiber bases: lifted support points grouped by canonical object
    let mut fiber: Vec<Vec<OSeq>> = vec![Vec::new(); alg.n_objects()];
    for kappa in &support {
        let obj = alg.obj_id(kappa).map_err(|_| {
            Error::Argument(format!("support point {kappa} is not an object; inadmissible label"))
        })?;
        fiber[obj.0].push(kappa.clone());
    }
    let dims: Vec<usize> = fiber.iter().map(|f| f.len()).collect();
    let maps = alg
        .arrows
        .iter()
        .map(|&a| {
            let mor = alg.mor(a);
            let coord = raised_coordinate(alg, a);
            let (src, tgt) = (mor.src, mor.tgt);
            let mut trips = Vec::new();
            for (r, kr) in fiber[src.0].iter().enumerate() {
                let mut up = kr.entries().to_vec();
                up[coord] += 1;
                let up = OSeq(up);
                if let Some(c) = fiber[tgt.0].iter().position(|kc| *kc == up) {
                    trips.push((r, c, 1));
                }
            }
            SparseMat::from_triplets(dims[src.0], dims[tgt.0], alg.p, &trips)
        })
        .collect();
    Ok(Rep { dims, maps })
}

/// Direct sum; the offsets give where each summand starts in every fiber.
pub fn direct_sum(alg: &BasedAlgebra, parts: &[&Rep]) -> (Rep, Vec<Vec<usize>>) {
    let n = alg.n_objects();
    let mut dims = vec![0usize; n];
    let mut offsets = vec![vec![0usize; n]; parts.len()];
    for (s, part) in parts.iter().enumerate() {
        for x in 0..n {
            offsets[s][x] = dims[x];
            dims[x] += part.dims[x];
        }
    }
    let maps = alg
        .arrows
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let mor = alg.mor(a);
            let (sx, tx) = (mor.src.0, mor.tgt.0);
            let mut trips = Vec::new();
            for (s, part) in parts.iter().enumerate() {
                for r in 0..part.dims[sx] {
                    for &(c, v) in part.maps[k].row(r) {
                        trips.push((offsets[s][sx] + r, offsets[s][tx] + c as usize, v));
                    }
                }
            }
            SparseMat::from_triplets(dims[sx], dims[tx], alg.p, &trips)
        })
        .collect();
    (Rep { dims, maps }, offsets)
}

/// Columns spanning the radical in every fiber: sums of images of arrows
/// into the fiber.
pub fn radical_fibers(alg: &BasedAlgebra, m: &Rep) -> Vec<SparseMat> {
    let n = alg.n_objects();
    let mut span: Vec<SparseMat> = (0..n).map(|x| SparseMat::zero(m.dims[x], 0, alg.p)).collect();
    for (k, &a) in alg.arrows.iter().enumerate() {
        let x = alg.mor(a).src.0;
        span[x] = span[x].hstack(&m.maps[k]);
    }
    span.into_iter()
        .map(|s| {
            let keep = s.column_space_basis();
            s.select_cols(&keep)
        })
        .collect()
}

/// Joint kernel of all arrows out of every fiber.
pub fn socle_fibers(alg: &BasedAlgebra, m: &Rep) -> Vec<SparseMat> {
    let n = alg.n_objects();
    let mut stacked: Vec<SparseMat> = (0..n).map(|y| SparseMat::zero(0, m.dims[y], alg.p)).collect();
    for (k, &a) in alg.arrows.iter().enumerate() {
        let y = alg.mor(a).tgt.0;
        stacked[y] = stacked[y].vstack(&m.maps[k]);
    }
    stacked.into_iter().map(|s| s.kernel_basis()).collect()
}

/// Dimension vector of the top.
pub fn top_dims(alg: &BasedAlgebra, m: &Rep) -> Vec<usize> {
    radical_fibers(alg, m)
        .iter()
        .enumerate()
        .map(|(x, r)| m.dims[x] - r.cols)
        .collect()
}

/// The radical as a subrepresentation with its inclusion.
pub fn radical_rep(alg: &BasedAlgebra, m: &Rep) -> (Rep, RepHom) {
    let fibers = radical_fibers(alg, m);
    sub_rep(alg, m, &fibers).expect("the radical is arrow-stable")
}

/// The top `M / rad M` with its quotient map.
pub fn top_rep(alg: &BasedAlgebra, m: &Rep) -> (Rep, RepHom) {
    let fibers = radical_fibers(alg, m);
    quotient_rep(alg, m, &fibers)
}

/// The socle as a subrepresentation with its inclusion.
pub fn socle_rep(alg: &BasedAlgebra, m: &Rep) -> (Rep, RepHom) {
    let fibers = socle_fibers(alg, m);
    sub_rep(alg, m, &fibers).expect("the socle is arrow-stable")
}

/// For a subspace basis `B` (independent columns in an ambient space of
/// dimension `v`), return complement columns `C` and the projection `Q` with
/// `Q B = 0`, `Q C = I`.
pub fn complement_projection(b: &SparseMat) -> (SparseMat, SparseMat) {
    let v = b.rows;
    let p = b.p;
    let pivot_rows: Vec<usize> = b.transpose().pivot_columns();
    let pivot_set: std::collections::HashSet<usize> = pivot_rows.iter().copied().collect();
    let free: Vec<usize> = (0..v).filter(|r| !pivot_set.contains(r)).collect();
    let mut trips = Vec::new();
    for (j, &r) in free.iter().enumerate() {
        trips.push((r, j, 1u32));
    }
    let c = SparseMat::from_triplets(v, free.len(), p, &trips);
    let f = b.hstack(&c);
    let finv = f
        .solve_mat(&SparseMat::identity(v, p))
        .expect("basis plus complement is invertible");
    // rows of F^{-1} below the B-block give coordinates along C
    let mut qtrips = Vec::new();
    for r in b.cols..v {
        for &(cc, vv) in finv.row(r) {
            qtrips.push((r - b.cols, cc as usize, vv));
        }
    }
    let q = SparseMat::from_triplets(free.len(), v, p, &qtrips);
    (c, q)
}

/// A morphism of representations: one matrix per object, `phi_x : M(x) -> N(x)`.
pub type RepHom = Vec<SparseMat>;

pub fn zero_hom(alg: &BasedAlgebra, m: &Rep, n: &Rep) -> RepHom {
    (0..alg.n_objects()).map(|x| SparseMat::zero(n.dims[x], m.dims[x], alg.p)).collect()
}

pub fn identity_hom(alg: &BasedAlgebra, m: &Rep) -> RepHom {
    (0..alg.n_objects()).map(|x| SparseMat::identity(m.dims[x], alg.p)).collect()
}

pub fn hom_is_zero(h: &RepHom) -> bool {
    h.iter().all(|m| m.is_zero())
}

pub fn compose_homs(g: &RepHom, f: &RepHom) -> RepHom {
    g.iter().zip(f.iter()).map(|(gm, fm)| gm.multiply(fm).expect("composable rep homs")).collect()
}

pub fn add_homs(a: &RepHom, b: &RepHom) -> RepHom {
    a.iter().zip(b.iter()).map(|(x, y)| x.add(y)).collect()
}

pub fn scale_hom(a: &RepHom, s: u32) -> RepHom {
    a.iter().map(|x| x.scale(s)).collect()
}

/// The subrepresentation spanned fiberwise by the given columns. The spans
/// must be arrow-stable; the induced maps are solved for exactly.
pub fn sub_rep(alg: &BasedAlgebra, m: &Rep, fibers: &[SparseMat]) -> Result<(Rep, RepHom)> {
    let dims: Vec<usize> = fibers.iter().map(|f| f.cols).collect();
    let mut maps = Vec::with_capacity(alg.arrows.len());
    for (k, &a) in alg.arrows.iter().enumerate() {
        let mor = alg.mor(a);
        let (x, y) = (mor.src.0, mor.tgt.0);
        let restricted = m.maps[k].multiply(&fibers[y])?;
        let induced = fibers[x]
            .solve_mat(&restricted)
            .ok_or_else(|| Error::Dim("fibers are not arrow-stable".into()))?;
        maps.push(induced);
    }
    let incl: RepHom = fibers.to_vec();
    Ok((Rep { dims, maps }, incl))
}

/// Quotient by an arrow-stable family of fiber subspaces.
pub fn quotient_rep(alg: &BasedAlgebra, m: &Rep, fibers: &[SparseMat]) -> (Rep, RepHom) {
    let mut comp = Vec::with_capacity(fibers.len());
    let mut proj = Vec::with_capacity(fibers.len());
    for f in fibers {
        let (c, q) = complement_projection(f);
        comp.push(c);
        proj.push(q);
    }
    let dims: Vec<usize> = comp.iter().map(|c| c.cols).collect();
    let maps = alg
        .arrows
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let mor = alg.mor(a);
            let (x, y) = (mor.src.0, mor.tgt.0);
            proj[x]
                .multiply(&m.maps[k])
                .and_then(|t| t.multiply(&comp[y]))
                .expect("quotient map shapes line up")
        })
        .collect();
    (Rep { dims, maps }, proj)
}

/// Kernel of a morphism, as a subrepresentation with its inclusion.
pub fn kernel_rep(alg: &BasedAlgebra, phi: &RepHom, m: &Rep) -> (Rep, RepHom) {
    let fibers: Vec<SparseMat> = phi.iter().map(|f| f.kernel_basis()).collect();
    sub_rep(alg, m, &fibers).expect("kernels are arrow-stable")
}

/// Image fibers of a morphism (column spaces), reduced to bases.
pub fn image_fibers(phi: &RepHom) -> Vec<SparseMat> {
    phi.iter()
        .map(|f| {
            let keep = f.column_space_basis();
            f.select_cols(&keep)
        })
        .collect()
}

/// JSON report for a representation: dimension vector plus arrow matrices.
pub fn rep_to_json(alg: &BasedAlgebra, m: &Rep) -> serde_json::Value {
    let dims: Vec<serde_json::Value> = (0..alg.n_objects())
        .map(|x| serde_json::json!({"object": alg.label(ObjId(x)), "dim": m.dims[x]}))
        .collect();
    let maps: Vec<serde_json::Value> = alg
        .arrows
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let mor = alg.mor(a);
            serde_json::json!({
                "src": alg.label(mor.src),
                "tgt": alg.label(mor.tgt),
                "matrix": m.maps[k].to_dense(),
            })
        })
        .collect();
    serde_json::json!({"dims": dims, "arrow_maps": maps, "total_dim": m.total_dim()})
}
