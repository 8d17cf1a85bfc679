//! Cyclic polytope and apeirotope combinatorics: Gale-evenness facets with an
//! exact lower/upper classification, internal simplices, intertwining,
//! triangulation enumeration and bistellar flips.
//!
//! Vertex `t` sits at the moment-curve point `(t, t^2, ..., t^delta)`; all
//! facet orientation tests use integer determinants, so there is no tolerance
//! parameter anywhere in this module.

use crate::error::{Error, Result};
use crate::oset::binomial;
use num_bigint::BigInt;
use std::collections::HashSet;

/// A simplex on moment-curve vertices: strictly increasing 0-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(pub Vec<i64>);

impl Simplex {
    pub fn new(mut v: Vec<i64>) -> Result<Self> {
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument("simplex vertices must be distinct".into()));
        }
        Ok(Simplex(v))
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The gap rule for non-lower status: consecutive vertices at distance
    /// at least two.
    pub fn gaps_ok(&self) -> bool {
        self.0.windows(2).all(|w| w[1] >= w[0] + 2)
    }

    pub fn shift(&self, k: i64) -> Simplex {
        Simplex(self.0.iter().map(|&v| v + k).collect())
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    // fraction-free Gaussian elimination (Bareiss)
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k] == BigInt::from(0) {
            let swap = (k + 1..n).find(|&i| m[i][k] != BigInt::from(0));
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::from(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::from(0);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn moment_point(t: i64, delta: usize) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(delta);
    let mut acc = BigInt::from(1);
    let tt = BigInt::from(t);
    for _ in 0..delta {
        acc *= &tt;
        v.push(acc.clone());
    }
    v
}

/// The affine hyperplane functional through the facet vertices, evaluated at
/// a point: the determinant of rows `[1, v]` for the facet vertices followed
/// by the query point.
fn facet_functional(facet: &[i64], delta: usize, q: &[BigInt]) -> BigInt {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(delta + 1);
    for &t in facet {
        let mut row = vec![BigInt::from(1)];
        row.extend(moment_point(t, delta));
        rows.push(row);
    }
    let mut row = vec![BigInt::from(1)];
    row.extend_from_slice(q);
    rows.push(row);
    det_bigint(rows)
}

/// Sign of the coefficient of the last coordinate in the facet functional.
fn upward_sign(facet: &[i64], delta: usize) -> i8 {
    // replace the query row by the direction (0, ..., 0, 1), i.e. drop the
    // affine column against it
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(delta + 1);
    for &t in facet {
        let mut row = vec![BigInt::from(1)];
        row.extend(moment_point(t, delta));
        rows.push(row);
    }
    let mut dir = vec![BigInt::from(0); delta + 1];
    dir[delta] = BigInt::from(1);
    rows.push(dir);
    sign_of(&det_bigint(rows))
}

fn sign_of(b: &BigInt) -> i8 {
    use num_bigint::Sign;
    match b.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Gale's evenness condition on the vertex set `0..p`.
pub fn gale_even(subset: &[i64], p: i64) -> bool {
    for i in 0..p {
        if subset.contains(&i) {
            continue;
        }
        for j in i + 1..p {
            if subset.contains(&j) {
                continue;
            }
            let between = subset.iter().filter(|&&s| i < s && s < j).count();
            if between % 2 == 1 {
                return false;
            }
        }
    }
    true
}

/// All facets of the cyclic polytope `C(p, delta)` with a lower/upper flag,
/// by Gale evenness; the flag comes from the exact orientation determinant
/// against the last coordinate direction.
pub fn facets(p: usize, delta: usize) -> Result<Vec<(Simplex, bool)>> {
    if p <= delta {
        return Err(Error::Argument(format!("need p > delta, got p={p} delta={delta}")));
    }
    let mut out = Vec::new();
    let mut subset: Vec<i64> = (0..delta as i64).collect();
    loop {
        if gale_even(&subset, p as i64) {
            // orientation: all remaining vertices must sit strictly on one
            // side; lower means the polytope lies in the upward direction
            let mut side = 0i8;
            let mut proper = true;
            for t in 0..p as i64 {
                if subset.contains(&t) {
                    continue;
                }
                let s = sign_of(&facet_functional(&subset, delta, &{
                    moment_point(t, delta)
                }));
                if s == 0 {
                    proper = false;
                    break;
                }
                if side == 0 {
                    side = s;
                } else if side != s {
                    proper = false;
                    break;
                }
            }
            debug_assert!(proper, "Gale facet must be a genuine facet");
            if proper {
                let lower = side == upward_sign(&subset, delta);
                out.push((Simplex(subset.clone()), lower));
            }
        }
        // next subset in lexicographic order
        let mut i = delta;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if subset[i] < (p - delta + i) as i64 {
                subset[i] += 1;
                for j in i + 1..delta {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All `(d+1)`-subsets of `0..p` contained in no lower facet.
pub fn nonlower_simplices(p: usize, d: usize) -> Result<Vec<Simplex>> {
    if p < 2 * d + 1 {
        return Err(Error::Argument(format!("need p >= 2d+1, got p={p} d={d}")));
    }
    let lower: Vec<HashSet<i64>> = facets(p, 2 * d)?
        .into_iter()
        .filter(|(_, low)| *low)
        .map(|(f, _)| f.0.into_iter().collect())
        .collect();
    let mut out = Vec::new();
    enumerate_subsets(p as i64, d + 1, &mut |subset| {
        let inside_lower = lower.iter().any(|f| subset.iter().all(|v| f.contains(v)));
        if !inside_lower {
            out.push(Simplex(subset.to_vec()));
        }
    });
    Ok(out)
}

/// Contained in no facet at all.
pub fn is_internal(p: usize, d: usize, sigma: &Simplex) -> Result<bool> {
    let fs = facets(p, 2 * d)?;
    Ok(!fs.iter().any(|(f, _)| {
        let set: HashSet<i64> = f.0.iter().copied().collect();
        sigma.0.iter().all(|v| set.contains(v))
    }))
}

pub fn internal_simplices(p: usize, d: usize) -> Result<Vec<Simplex>> {
    let fs = facets(p, 2 * d)?;
    let sets: Vec<HashSet<i64>> = fs.iter().map(|(f, _)| f.0.iter().copied().collect()).collect();
    let mut out = Vec::new();
    enumerate_subsets(p as i64, d + 1, &mut |subset| {
        if !sets.iter().any(|f| subset.iter().all(|v| f.contains(v))) {
            out.push(Simplex(subset.to_vec()));
        }
    });
    Ok(out)
}

fn enumerate_subsets(p: i64, k: usize, f: &mut impl FnMut(&[i64])) {
    let mut subset: Vec<i64> = (0..k as i64).collect();
    if (k as i64) > p {
        return;
    }
    loop {
        f(&subset);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if subset[i] < p - k as i64 + i as i64 {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Strict interleaving `a_0 < b_0 < a_1 < ... < a_d < b_d`.
pub fn intertwines(a: &Simplex, b: &Simplex) -> bool {
    debug_assert_eq!(a.0.len(), b.0.len());
    let d = a.0.len();
    (0..d).all(|i| a.0[i] < b.0[i]) && (0..d - 1).all(|i| b.0[i] < a.0[i + 1])
}

/// Symmetric intersection predicate used by the triangulation machinery.
pub fn intersects(a: &Simplex, b: &Simplex) -> bool {
    intertwines(a, b) || intertwines(b, a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub p: usize,
    pub d: usize,
    pub simplices: Vec<Simplex>,
}

impl Triangulation {
    pub fn expected_size(p: usize, d: usize) -> u64 {
        binomial((p - d - 1) as u64, d as u64)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p,
            "d": self.d,
            "simplices": self.simplices.iter().map(|s| s.0.clone()).collect::<Vec<_>>(),
        })
    }

    /// Check that the stored simplices really form a triangulation: the
    /// right number of pairwise non-intersecting non-lower simplices.
    pub fn validate(&self) -> Result<()> {
        if self.simplices.len() as u64 != Self::expected_size(self.p, self.d) {
            return Err(Error::Argument(format!(
                "{} simplices given, a triangulation of C({},{}) has {}",
                self.simplices.len(),
                self.p,
                2 * self.d,
                Self::expected_size(self.p, self.d)
            )));
        }
        let nonlower: std::collections::HashSet<Simplex> =
            nonlower_simplices(self.p, self.d)?.into_iter().collect();
        for s in &self.simplices {
            if !nonlower.contains(s) {
                return Err(Error::Argument(format!("{s} is not a non-lower simplex")));
            }
        }
        for (i, s) in self.simplices.iter().enumerate() {
            for t in self.simplices.iter().skip(i + 1) {
                if intersects(s, t) {
                    return Err(Error::Argument(format!("{s} and {t} intersect")));
                }
            }
        }
        Ok(())
    }
}

const TRIANGULATION_BOUNDS: [usize; 3] = [12, 10, 9]; // d = 1, 2, 3

/// Enumerate all triangulations of `C(p, 2d)` as maximal pairwise
/// non-intersecting collections of non-lower d-simplices. Every enumerated
/// collection is checked against the expected cardinality.
pub fn triangulations(p: usize, d: usize) -> Result<Vec<Triangulation>> {
    if d == 0 || d > TRIANGULATION_BOUNDS.len() {
        return Err(Error::BoundExceeded(format!("d={d} outside supported range")));
    }
    if p > TRIANGULATION_BOUNDS[d - 1] {
        return Err(Error::BoundExceeded(format!(
            "p={p} exceeds the enumeration bound {} for d={d}",
            TRIANGULATION_BOUNDS[d - 1]
        )));
    }
    let verts = nonlower_simplices(p, d)?;
    let n = verts.len();
    let mut compat = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            compat[i][j] = i != j && !intersects(&verts[i], &verts[j]);
        }
    }
    // maximal cliques by pivoting Bron-Kerbosch over u64 bitsets
    let words = n.div_ceil(64);
    let masks: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut m = vec![0u64; words];
            for (j, row) in compat[i].iter().enumerate() {
                if *row {
                    m[j / 64] |= 1 << (j % 64);
                }
            }
            m
        })
        .collect();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut r: Vec<usize> = Vec::new();
    let mut pset = vec![0u64; words];
    for i in 0..n {
        pset[i / 64] |= 1 << (i % 64);
    }
    let xset = vec![0u64; words];
    bron_kerbosch(&masks, &mut r, pset, xset, &mut cliques);
    let expected = Triangulation::expected_size(p, d);
    let mut out = Vec::new();
    for c in cliques {
        let mut simplices: Vec<Simplex> = c.into_iter().map(|i| verts[i].clone()).collect();
        simplices.sort();
        if simplices.len() as u64 != expected {
            return Err(Error::Undetermined(format!(
                "maximal collection of size {} differs from the expected {expected}",
                simplices.len()
            )));
        }
        out.push(Triangulation { p, d, simplices });
    }
    out.sort_by(|a, b| a.simplices.cmp(&b.simplices));
    Ok(out)
}

fn bron_kerbosch(
    masks: &[Vec<u64>],
    r: &mut Vec<usize>,
    pset: Vec<u64>,
    xset: Vec<u64>,
    out: &mut Vec<Vec<usize>>,
) {
    let words = pset.len();
    let empty_p = pset.iter().all(|&w| w == 0);
    if empty_p && xset.iter().all(|&w| w == 0) {
        out.push(r.clone());
        return;
    }
    if empty_p {
        return;
    }
    // pivot: vertex of P union X with the most neighbours in P
    let mut pivot = None;
    let mut best = usize::MAX;
    for w in 0..words {
        let mut bits = pset[w] | xset[w];
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let v = w * 64 + b;
            let outside = (0..words)
                .map(|k| (pset[k] & !masks[v][k]).count_ones() as usize)
                .sum::<usize>();
            if best == usize::MAX || outside < best {
                best = outside;
                pivot = Some(v);
            }
        }
    }
    let pivot = pivot.unwrap();
    // iterate over P \ N(pivot)
    let mut candidates = Vec::new();
    for w in 0..words {
        let mut bits = pset[w] & !masks[pivot][w];
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            candidates.push(w * 64 + b);
        }
    }
    let mut pset = pset;
    let mut xset = xset;
    for v in candidates {
        let mut p2 = vec![0u64; words];
        let mut x2 = vec![0u64; words];
        for w in 0..words {
            p2[w] = pset[w] & masks[v][w];
            x2[w] = xset[w] & masks[v][w];
        }
        r.push(v);
        bron_kerbosch(masks, r, p2, x2, out);
        r.pop();
        pset[v / 64] &= !(1 << (v % 64));
        xset[v / 64] |= 1 << (v % 64);
    }
}

/// Replace one simplex by the unique other one that again yields a
/// triangulation.
pub fn bistellar_flip(t: &Triangulation, sigma: &Simplex) -> Result<Triangulation> {
    if !t.simplices.contains(sigma) {
        return Err(Error::Argument(format!("{sigma} is not in the triangulation")));
    }
    let rest: Vec<&Simplex> = t.simplices.iter().filter(|s| *s != sigma).collect();
    let candidates = nonlower_simplices(t.p, t.d)?;
    let mut found = Vec::new();
    for c in candidates {
        if c == *sigma || t.simplices.contains(&c) {
            continue;
        }
        if rest.iter().all(|s| !intersects(s, &c)) {
            found.push(c);
        }
    }
    match found.as_slice() {
        [] => Err(Error::NotFlippable),
        [unique] => {
            let mut simplices: Vec<Simplex> = rest.into_iter().cloned().collect();
            simplices.push(unique.clone());
            simplices.sort();
            Ok(Triangulation { p: t.p, d: t.d, simplices })
        }
        many => Err(Error::Undetermined(format!(
            "{} replacement candidates; flips must be unique",
            many.len()
        ))),
    }
}

/// The flip graph on all triangulations: nodes in enumeration order, one
/// edge per flip.
pub fn flip_graph(p: usize, d: usize) -> Result<(Vec<Triangulation>, Vec<(usize, usize)>)> {
    let ts = triangulations(p, d)?;
    let index: std::collections::HashMap<Vec<Simplex>, usize> =
        ts.iter().enumerate().map(|(i, t)| (t.simplices.clone(), i)).collect();
    let mut edges = HashSet::new();
    for (i, t) in ts.iter().enumerate() {
        for s in &t.simplices {
            if let Ok(t2) = bistellar_flip(t, s) {
                let j = index[&t2.simplices];
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
    edges.sort_unstable();
    Ok((ts, edges))
}

pub fn graph_connected(nodes: usize, edges: &[(usize, usize)]) -> bool {
    if nodes == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; nodes];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == nodes
}

pub fn graph_to_dot(nodes: usize, edges: &[(usize, usize)]) -> String {
    let mut s = String::from("graph flips {\n");
    for i in 0..nodes {
        s.push_str(&format!("  t{i};\n"));
    }
    for &(a, b) in edges {
        s.push_str(&format!("  t{a} -- t{b};\n"));
    }
    s.push_str("}\n");
    s
}

/// Do the members of the collection supported in `[a, b]` form exactly the
/// non-lower simplices of a triangulation of the cyclic polytope on those
/// vertices?
pub fn window_triangulation_check(collection: &[Simplex], a: i64, b: i64, d: usize) -> bool {
    if b < a {
        return false;
    }
    let p = (b - a + 1) as usize;
    if p < 2 * d + 1 {
        return false;
    }
    let members: Vec<Simplex> = collection
        .iter()
        .filter(|s| s.0.iter().all(|&v| (a..=b).contains(&v)))
        .map(|s| s.shift(-a))
        .collect();
    if members.iter().any(|s| !s.gaps_ok()) {
        return false;
    }
    let expected = Triangulation::expected_size(p, d);
    if members.len() as u64 != expected {
        return false;
    }
    let Ok(nonlower) = nonlower_simplices(p, d) else { return false };
    let set: HashSet<&Simplex> = nonlower.iter().collect();
    if !members.iter().all(|s| set.contains(s)) {
        return false;
    }
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if intersects(&members[i], &members[j]) {
                return false;
            }
        }
    }
    true
}

/// Search for an interval `[a, b]` containing `interest` on which the
/// collection restricts to a triangulation; scans widths up to the bound.
pub fn ind_finite_probe(
    collection: &[Simplex],
    interest: &[i64],
    d: usize,
    search_bound: i64,
) -> Option<(i64, i64)> {
    let lo = interest.iter().copied().min()?;
    let hi = interest.iter().copied().max()?;
    for width in (hi - lo)..=search_bound {
        for a in (hi - width)..=lo {
            let b = a + width;
            if window_triangulation_check(collection, a, b, d) {
                return Some((a, b));
            }
        }
    }
    None
}
