//! Ordered sequences and Kupisch series: the combinatorial indexing layer.
//!
//! Objects of the algebras built later are weakly decreasing integer tuples,
//! truncated either by a box `0..n-1` or by a Kupisch series, and in the
//! cyclic case taken up to simultaneous shifts by `n`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A weakly decreasing integer tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OSeq(pub Vec<i64>);

impl std::fmt::Debug for OSeq {
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

impl std::fmt::Display for OSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// True iff the tuple is weakly decreasing. Empty tuples are rejected.
pub fn is_oseq(entries: &[i64]) -> Result<bool> {
    if entries.is_empty() {
        return Err(Error::Argument("empty tuple".into()));
    }
    Ok(entries.windows(2).all(|w| w[0] >= w[1]))
}

impl OSeq {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if !is_oseq(&entries)? {
            return Err(Error::Argument(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(OSeq(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `self - k*(1,...,1)`; the d-fold shift applied `k` times.
    pub fn shift(&self, k: i64) -> OSeq {
        OSeq(self.0.iter().map(|&v| v - k).collect())
    }
}

/// `phi(lambda, k) = lambda - k*(1,...,1)`.
pub fn phi(lambda: &OSeq, k: i64) -> OSeq {
    lambda.shift(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KupischKind {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "Atilde")]
    ATilde,
}

/// Admissibility violation report: the first offending index and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KupischViolation {
    pub index: usize,
    pub reason: String,
}

/// Check the admissibility constraints without constructing the series.
///
/// Type A: `l_0 = 1` and `l_i <= l_{i-1} + 1`. Type A-tilde: `l_i >= 2` and
/// `l_i <= l_{i-1 mod n} + 1` cyclically.
pub fn validate_kupisch(kind: KupischKind, entries: &[u32]) -> std::result::Result<(), KupischViolation> {
    if entries.is_empty() {
        return Err(KupischViolation { index: 0, reason: "empty series".into() });
    }
    let n = entries.len();
    for (i, &l) in entries.iter().enumerate() {
        if l < 1 {
            return Err(KupischViolation { index: i, reason: format!("entry {l} < 1") });
        }
    }
    match kind {
        KupischKind::A => {
            if entries[0] != 1 {
                return Err(KupischViolation { index: 0, reason: format!("l_0 = {} but must be 1 for type A", entries[0]) });
            }
            for i in 1..n {
                if entries[i] > entries[i - 1] + 1 {
                    return Err(KupischViolation {
                        index: i,
                        reason: format!("{} > {} + 1", entries[i], entries[i - 1]),
                    });
                }
            }
        }
        KupischKind::ATilde => {
            for (i, &l) in entries.iter().enumerate() {
                if l < 2 {
                    return Err(KupischViolation { index: i, reason: format!("entry {l} < 2 for type A-tilde") });
                }
            }
            for i in 0..n {
                let prev = entries[(i + n - 1) % n];
                if entries[i] > prev + 1 {
                    return Err(KupischViolation {
                        index: i,
                        reason: format!("{} > {} + 1 (cyclic)", entries[i], prev),
                    });
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KupischSeries {
    pub kind: KupischKind,
    pub entries: Vec<u32>,
}

impl KupischSeries {
    pub fn new(kind: KupischKind, entries: Vec<u32>) -> Result<Self> {
        validate_kupisch(kind, &entries)
            .map_err(|v| Error::Kupisch { index: v.index, reason: v.reason })?;
        Ok(KupischSeries { kind, entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// The (periodically extended, for type A-tilde) series at position `t`.
    /// For type A the position must lie in `0..n`.
    pub fn ell(&self, t: i64) -> u32 {
        let n = self.n() as i64;
        match self.kind {
            KupischKind::A => {
                debug_assert!((0..n).contains(&t), "type A series indexed out of range");
                self.entries[t as usize]
            }
            KupischKind::ATilde => self.entries[t.rem_euclid(n) as usize],
        }
    }

    /// Membership of a weakly decreasing tuple in the object index set.
    pub fn admits(&self, mu: &OSeq) -> bool {
        let n = self.n() as i64;
        let top = mu.0[0];
        let bot = *mu.0.last().unwrap();
        match self.kind {
            KupischKind::A => top <= n - 1 && bot >= 0 && top - bot + 1 <= self.ell(top) as i64,
            KupischKind::ATilde => top - bot + 1 <= self.ell(top) as i64,
        }
    }
}

/// Canonical label for a shift orbit: the representative with first entry in
/// `[0, n-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub rep: OSeq,
    pub modulus: usize,
}

impl OrbitLabel {
    pub fn new(lambda: &OSeq, modulus: usize) -> Self {
        OrbitLabel { rep: canonicalize(lambda, modulus), modulus }
    }
}

/// Shift `lambda` by a multiple of `n` so that its first entry lies in
/// `[0, n-1]`. Idempotent, constant on orbits.
pub fn canonicalize(lambda: &OSeq, n: usize) -> OSeq {
    let n = n as i64;
    let k = lambda.0[0].div_euclid(n);
    lambda.shift(k * n)
}

/// All of `os^(d)` inside the box `[lo, hi]^d`, lexicographically sorted.
fn enumerate_decreasing(d: usize, lo: i64, hi: i64, pred: &dyn Fn(&[i64]) -> bool) -> Vec<OSeq> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(d: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<OSeq>, pred: &dyn Fn(&[i64]) -> bool) {
        if cur.len() == d {
            if pred(cur) {
                out.push(OSeq(cur.clone()));
            }
            return;
        }
        let top = if cur.is_empty() { hi } else { *cur.last().unwrap() };
        for v in lo..=top {
            cur.push(v);
            rec(d, lo, hi, cur, out, pred);
            cur.pop();
        }
    }
    rec(d, lo, hi, &mut cur, &mut out, pred);
    out.sort();
    out
}

/// The full truncation `os^(d)_n`: weakly decreasing tuples valued in `[0, n-1]`.
pub fn enumerate_os_n(d: usize, n: usize) -> Vec<OSeq> {
    enumerate_decreasing(d, 0, n as i64 - 1, &|_| true)
}

/// Objects indexed by a Kupisch series: all of `os^(d)_l` for type A, and
/// canonical orbit representatives for type A-tilde. Sorted lexicographically.
pub fn enumerate_objects(d: usize, k: &KupischSeries) -> Result<Vec<OSeq>> {
    if d == 0 {
        return Err(Error::Argument("d must be >= 1".into()));
    }
    let n = k.n() as i64;
    let max_len = *k.entries.iter().max().unwrap() as i64;
    let lo = match k.kind {
        KupischKind::A => 0,
        // canonical top entry is in [0, n-1]; the tail can dip below 0 but no
        // further than the longest series entry allows
        KupischKind::ATilde => -(max_len - 1),
    };
    let kk = k.clone();
    Ok(enumerate_decreasing(d, lo, n - 1, &move |mu| {
        // canonical representatives keep their top entry in [0, n-1]
        mu[0] >= 0 && kk.admits(&OSeq(mu.to_vec()))
    }))
}

/// The support interval of `lambda` in `os^(d)`: all `kappa` with
/// `lambda_{i+1} <= kappa_i <= lambda_i` componentwise.
pub fn interval_support(lambda: &OSeq) -> Result<Vec<OSeq>> {
    let d = lambda.len();
    if d < 2 {
        return Err(Error::Argument("interval support needs a tuple of length >= 2".into()));
    }
    let d = d - 1;
    let mut out = vec![Vec::new()];
    for i in 0..d {
        let (lo, hi) = (lambda.0[i + 1], lambda.0[i]);
        let mut next = Vec::new();
        for pref in out {
            for v in lo..=hi {
                let mut q: Vec<i64> = pref.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    let mut seqs: Vec<OSeq> = out.into_iter().map(OSeq).collect();
    // every member is automatically weakly decreasing; assert in debug builds
    debug_assert!(seqs.iter().all(|s| is_oseq(&s.0).unwrap()));
    seqs.sort();
    Ok(seqs)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn os(v: &[i64]) -> OSeq {
        OSeq(v.to_vec())
    }

    #[test]
    fn is_oseq_examples() {
        assert!(is_oseq(&[2, 1, 1]).unwrap());
        assert!(!is_oseq(&[0, 1]).unwrap());
        assert!(is_oseq(&[5, 3, 0]).unwrap());
        assert!(is_oseq(&[]).is_err());
    }

    #[test]
    fn kupisch_validation_examples() {
        assert!(validate_kupisch(KupischKind::A, &[1, 2, 2, 3, 3, 4, 3]).is_ok());
        assert!(validate_kupisch(KupischKind::ATilde, &[3, 4, 4]).is_ok());
        let v = validate_kupisch(KupischKind::A, &[1, 3]).unwrap_err();
        assert_eq!(v.index, 1);
        assert!(validate_kupisch(KupischKind::ATilde, &[1, 2]).is_err());
        assert!(validate_kupisch(KupischKind::A, &[2, 2]).is_err());
        // cyclic wrap: l_0 too large compared to l_{n-1}
        assert!(validate_kupisch(KupischKind::ATilde, &[4, 4, 2]).is_err());
    }

    #[test]
    fn enumerate_objects_counts() {
        let ka = KupischSeries::new(KupischKind::A, vec![1, 2, 2, 3, 3, 4, 3]).unwrap();
        assert_eq!(enumerate_objects(2, &ka).unwrap().len(), 18);
        let kt = KupischSeries::new(KupischKind::ATilde, vec![3, 4, 4]).unwrap();
        assert_eq!(enumerate_objects(2, &kt).unwrap().len(), 11);
        for k in [&ka, &kt] {
            assert_eq!(enumerate_objects(1, k).unwrap().len(), k.n());
        }
    }

    #[test]
    fn enumerate_objects_sorted_and_admissible() {
        let kt = KupischSeries::new(KupischKind::ATilde, vec![3, 4, 4]).unwrap();
        let objs = enumerate_objects(2, &kt).unwrap();
        let mut sorted = objs.clone();
        sorted.sort();
        assert_eq!(objs, sorted);
        for o in &objs {
            assert!(kt.admits(o));
            assert!((0..3).contains(&o.0[0]));
        }
    }

    #[test]
    fn phi_examples_and_additivity() {
        assert_eq!(phi(&os(&[3, 1]), 1), os(&[2, 0]));
        assert_eq!(phi(&os(&[0, 0]), -2), os(&[2, 2]));
        for a in -3..3 {
            for b in -3..3 {
                let l = os(&[5, 2, 0]);
                assert_eq!(phi(&phi(&l, a), b), phi(&l, a + b));
            }
        }
    }

    #[test]
    fn interval_support_examples() {
        // oracle: direct box enumeration
        let mut expect = Vec::new();
        for k1 in 1..=2i64 {
            for k2 in 0..=1i64 {
                if k1 >= k2 {
                    expect.push(os(&[k1, k2]));
                }
            }
        }
        expect.sort();
        assert_eq!(interval_support(&os(&[2, 1, 0])).unwrap(), expect);
        assert_eq!(interval_support(&os(&[4, 4, 4])).unwrap(), vec![os(&[4, 4])]);
        assert_eq!(interval_support(&os(&[1, 0])).unwrap(), vec![os(&[0]), os(&[1])]);
    }

    #[test]
    fn os_n_counts_stars_and_bars() {
        for d in 1..=4u64 {
            for n in 1..=8u64 {
                let count = enumerate_os_n(d as usize, n as usize).len() as u64;
                assert_eq!(count, binomial(n + d - 1, d), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn interval_support_lands_in_objects() {
        // exactly the reason admissibility is imposed; exhaustive for d <= 2, n <= 7
        for d in 1..=2usize {
            for n in 1..=7usize {
                for series in sample_series(n) {
                    let Ok(k) = KupischSeries::new(KupischKind::A, series) else { continue };
                    let objs: std::collections::HashSet<OSeq> =
                        enumerate_objects(d, &k).unwrap().into_iter().collect();
                    for lam in enumerate_objects(d + 1, &k).unwrap() {
                        for kappa in interval_support(&lam).unwrap() {
                            assert!(objs.contains(&kappa), "support escapes objects: {lam:?} {kappa:?}");
                        }
                    }
                }
            }
        }
    }

    fn sample_series(n: usize) -> Vec<Vec<u32>> {
        // all admissible type A series of length n (l_0 = 1, l_i <= l_{i-1}+1)
        let mut out: Vec<Vec<u32>> = vec![vec![1]];
        for _ in 1..n {
            let mut next = Vec::new();
            for s in &out {
                let last = *s.last().unwrap();
                for v in 1..=last + 1 {
                    let mut t = s.clone();
                    t.push(v);
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn per_top_counts_match_series() {
        let k = KupischSeries::new(KupischKind::A, vec![1, 2, 2, 3, 3, 4, 3]).unwrap();
        let objs = enumerate_objects(2, &k).unwrap();
        for t in 0..7i64 {
            let cnt = objs.iter().filter(|o| o.0[0] == t).count() as i64;
            assert_eq!(cnt, (k.ell(t) as i64).min(t + 1));
        }
    }

    #[test]
    fn canonicalize_idempotent_and_orbit_constant() {
        let l = os(&[4, 2]);
        let c = canonicalize(&l, 3);
        assert_eq!(c, os(&[1, -1]));
        assert_eq!(canonicalize(&c, 3), c);
        for k in -2..3 {
            assert_eq!(canonicalize(&l.shift(3 * k), 3), c);
        }
        assert_eq!(OrbitLabel::new(&l, 3), OrbitLabel::new(&l.shift(-6), 3));
    }

    #[test]
    fn phi_preserves_weak_decrease() {
        let l = os(&[9, 4, 4, 1]);
        for k in -5..5 {
            assert!(is_oseq(phi(&l, k).entries()).unwrap());
        }
    }

    #[test]
    fn serde_formats() {
        let l = os(&[2, 1]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[2,1]");
        let k = KupischSeries::new(KupischKind::ATilde, vec![3, 4, 4]).unwrap();
        let j = serde_json::to_string(&k).unwrap();
        assert_eq!(j, r#"{"kind":"Atilde","entries":[3,4,4]}"#);
        let back: KupischSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(back, k);
    }
}
