//! Exact linear algebra over prime fields.
//!
//! Sparse row-major matrices over F_p with Gaussian elimination. All results
//! are exact; there is no tolerance parameter anywhere. The boundary maps
//! showing up in resolutions are extremely sparse 0/1 matrices, so rows are
//! kept as sorted `(col, val)` lists and elimination picks structurally
//! sparse pivots.

use crate::error::{Error, Result};

/// Field used when the caller does not override it.
pub const DEFAULT_PRIME: u32 = 101;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    let p = p as u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[inline]
fn addm(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
fn mulm(a: u32, b: u32, p: u32) -> u32 {
    (a as u64 * b as u64 % p as u64) as u32
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

#[inline]
fn invm(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    powm(a as u64, p as u64 - 2, p as u64) as u32
}

/// Sparse matrix over F_p. Zero entries are never stored; stored values lie
/// in `[1, p-1]` and each row is sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub p: u32,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Vec<(u32, u32)>>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize, p: u32) -> Self {
        SparseMat { p, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = SparseMat::zero(n, n, p);
        for i in 0..n {
            m.data[i].push((i as u32, 1));
        }
        m
    }

    pub fn from_triplets(rows: usize, cols: usize, p: u32, trips: &[(usize, usize, u32)]) -> Self {
        let mut m = SparseMat::zero(rows, cols, p);
        for &(r, c, v) in trips {
            assert!(r < rows && c < cols, "triplet out of bounds");
            let v = v % p;
            if v != 0 {
                m.data[r].push((c as u32, v));
            }
        }
        for row in &mut m.data {
            row.sort_unstable_by_key(|e| e.0);
            // merge duplicate columns
            let mut out: Vec<(u32, u32)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match out.last_mut() {
                    Some(last) if last.0 == c => last.1 = addm(last.1, v, p),
                    _ => out.push((c, v)),
                }
            }
            out.retain(|e| e.1 != 0);
            *row = out;
        }
        m
    }

    pub fn from_dense(d: &[Vec<u32>], p: u32) -> Self {
        let rows = d.len();
        let cols = d.first().map_or(0, |r| r.len());
        let mut trips = Vec::new();
        for (i, row) in d.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v % p != 0 {
                    trips.push((i, j, v % p));
                }
            }
        }
        SparseMat::from_triplets(rows, cols, p, &trips)
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut d = vec![vec![0u32; self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                d[i][c as usize] = v;
            }
        }
        d
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r]
            .binary_search_by_key(&(c as u32), |e| e.0)
            .map(|k| self.data[r][k].1)
            .unwrap_or(0)
    }

    pub fn row(&self, r: usize) -> &[(u32, u32)] {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> SparseMat {
        let mut m = SparseMat::zero(self.cols, self.rows, self.p);
        for (i, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                m.data[c as usize].push((i as u32, v));
            }
        }
        for row in &mut m.data {
            row.sort_unstable_by_key(|e| e.0);
        }
        m
    }

    pub fn scale(&self, s: u32) -> SparseMat {
        let s = s % self.p;
        let mut m = self.clone();
        if s == 0 {
            return SparseMat::zero(self.rows, self.cols, self.p);
        }
        for row in &mut m.data {
            for e in row.iter_mut() {
                e.1 = mulm(e.1, s, self.p);
            }
        }
        m
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        assert_eq!(self.p, other.p);
        let p = self.p;
        let mut m = SparseMat::zero(self.rows, self.cols, p);
        for i in 0..self.rows {
            let (a, b) = (&self.data[i], &other.data[i]);
            let mut out = Vec::with_capacity(a.len() + b.len());
            let (mut x, mut y) = (0, 0);
            while x < a.len() || y < b.len() {
                if y >= b.len() || (x < a.len() && a[x].0 < b[y].0) {
                    out.push(a[x]);
                    x += 1;
                } else if x >= a.len() || b[y].0 < a[x].0 {
                    out.push(b[y]);
                    y += 1;
                } else {
                    let v = addm(a[x].1, b[y].1, p);
                    if v != 0 {
                        out.push((a[x].0, v));
                    }
                    x += 1;
                    y += 1;
                }
            }
            m.data[i] = out;
        }
        m
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        self.add(&other.scale(self.p - 1))
    }

    /// Matrix product `self * other`.
    pub fn multiply(&self, other: &SparseMat) -> Result<SparseMat> {
        if self.cols != other.rows {
            return Err(Error::Dim(format!(
                "multiply: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        assert_eq!(self.p, other.p);
        let p = self.p;
        let mut m = SparseMat::zero(self.rows, other.cols, p);
        let mut acc: Vec<u32> = vec![0; other.cols];
        for i in 0..self.rows {
            if self.data[i].is_empty() {
                continue;
            }
            let mut touched: Vec<u32> = Vec::new();
            for &(k, v) in &self.data[i] {
                for &(j, w) in &other.data[k as usize] {
                    if acc[j as usize] == 0 {
                        touched.push(j);
                    }
                    acc[j as usize] = addm(acc[j as usize], mulm(v, w, p), p);
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                if acc[j as usize] != 0 {
                    out.push((j, acc[j as usize]));
                }
                acc[j as usize] = 0;
            }
            m.data[i] = out;
        }
        Ok(m)
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p;
        let mut out = vec![0u32; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            let mut s = 0u64;
            for &(c, w) in row {
                s += w as u64 * v[c as usize] as u64 % p as u64;
            }
            out[i] = (s % p as u64) as u32;
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.p, other.p);
        let mut m = SparseMat::zero(self.rows, self.cols + other.cols, self.p);
        for i in 0..self.rows {
            let mut row = self.data[i].clone();
            row.extend(other.data[i].iter().map(|&(c, v)| (c + self.cols as u32, v)));
            m.data[i] = row;
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        let mut m = SparseMat::zero(self.rows + other.rows, self.cols, self.p);
        m.data[..self.rows].clone_from_slice(&self.data);
        m.data[self.rows..].clone_from_slice(&other.data);
        m
    }

    /// Keep the given columns (in order), producing a narrower matrix.
    pub fn select_cols(&self, keep: &[usize]) -> SparseMat {
        let mut pos = vec![u32::MAX; self.cols];
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = new as u32;
        }
        let mut m = SparseMat::zero(self.rows, keep.len(), self.p);
        for i in 0..self.rows {
            let mut row: Vec<(u32, u32)> = self.data[i]
                .iter()
                .filter(|&&(c, _)| pos[c as usize] != u32::MAX)
                .map(|&(c, v)| (pos[c as usize], v))
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            m.data[i] = row;
        }
        m
    }

    /// Row echelon form data: reduced rows and their pivot columns, in order.
    /// Pivoting is structural: among candidate rows for the current column the
    /// sparsest one wins, ties broken by row index, so the reduction is
    /// deterministic.
    fn echelon(&self) -> (Vec<Vec<(u32, u32)>>, Vec<usize>) {
        let p = self.p;
        let mut work: Vec<Vec<(u32, u32)>> = self.data.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut done: Vec<Vec<(u32, u32)>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        loop {
            // find the smallest leading column among remaining rows
            let mut lead = u32::MAX;
            for r in &work {
                if let Some(&(c, _)) = r.first() {
                    lead = lead.min(c);
                }
            }
            if lead == u32::MAX {
                break;
            }
            // structural pivot: sparsest row with this leading column
            let mut best: Option<usize> = None;
            for (i, r) in work.iter().enumerate() {
                if r.first().map(|e| e.0) == Some(lead) {
                    best = match best {
                        None => Some(i),
                        Some(b) if work[i].len() < work[b].len() => Some(i),
                        keep => keep,
                    };
                }
            }
            let bi = best.unwrap();
            let mut piv = work.swap_remove(bi);
            let inv = invm(piv.first().unwrap().1, p);
            for e in piv.iter_mut() {
                e.1 = mulm(e.1, inv, p);
            }
            for r in work.iter_mut() {
                if r.first().map(|e| e.0) == Some(lead) {
                    let f = r.first().unwrap().1;
                    *r = row_axpy(r, &piv, p - f, p);
                }
            }
            work.retain(|r| !r.is_empty());
            pivots.push(lead as usize);
            done.push(piv);
        }
        // back-substitute to reduced form
        for i in (0..done.len()).rev() {
            for j in 0..i {
                let c = pivots[i] as u32;
                if let Ok(k) = done[j].binary_search_by_key(&c, |e| e.0) {
                    let f = done[j][k].1;
                    done[j] = row_axpy(&done[j], &done[i], p - f, p);
                }
            }
        }
        (done, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Pivot columns of the echelon form, in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon().1
    }

    /// Columns spanning the null space, one per free column of the echelon
    /// form. `multiply(self, kernel_basis(self))` is zero.
    pub fn kernel_basis(&self) -> SparseMat {
        let p = self.p;
        let (rows, pivots) = self.echelon();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut trips = Vec::new();
        for (k, &fc) in free.iter().enumerate() {
            trips.push((fc, k, 1u32));
            for (ri, row) in rows.iter().enumerate() {
                if let Ok(idx) = row.binary_search_by_key(&(fc as u32), |e| e.0) {
                    let v = row[idx].1;
                    trips.push((pivots[ri], k, p - v));
                }
            }
        }
        SparseMat::from_triplets(self.cols, free.len(), p, &trips)
    }

    /// Solve `self * x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let p = self.p;
        let mut btrips: Vec<(usize, usize, u32)> = Vec::new();
        for (i, &v) in b.iter().enumerate() {
            if v % p != 0 {
                btrips.push((i, 0, v % p));
            }
        }
        let bm = SparseMat::from_triplets(self.rows, 1, p, &btrips);
        let aug = self.hstack(&bm);
        let (rows, pivots) = aug.echelon();
        let mut x = vec![0u32; self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            if pc == self.cols {
                return None; // pivot in the augmented column
            }
            if let Ok(k) = rows[ri].binary_search_by_key(&(self.cols as u32), |e| e.0) {
                x[pc] = rows[ri][k].1;
            }
        }
        Some(x)
    }

    /// Solve `self * X = B` columnwise; `None` when any column is inconsistent.
    pub fn solve_mat(&self, bs: &SparseMat) -> Option<SparseMat> {
        assert_eq!(self.rows, bs.rows);
        let p = self.p;
        let aug = self.hstack(bs);
        let (rows, pivots) = aug.echelon();
        for &pc in &pivots {
            if pc >= self.cols {
                return None;
            }
        }
        let mut trips = Vec::new();
        for (ri, &pc) in pivots.iter().enumerate() {
            for &(c, v) in &rows[ri] {
                if (c as usize) >= self.cols {
                    trips.push((pc, c as usize - self.cols, v));
                }
            }
        }
        Some(SparseMat::from_triplets(self.cols, bs.cols, p, &trips))
    }

    /// Indices of a column subset spanning the column space (leftmost basis).
    pub fn column_space_basis(&self) -> Vec<usize> {
        self.transpose().row_space_pivot_rows()
    }

    fn row_space_pivot_rows(&self) -> Vec<usize> {
        // indices of rows forming a basis of the row space, chosen greedily
        let p = self.p;
        let mut kept: Vec<Vec<(u32, u32)>> = Vec::new();
        let mut idx = Vec::new();
        for (i, r) in self.data.iter().enumerate() {
            let mut cand = r.clone();
            for k in &kept {
                if cand.is_empty() {
                    break;
                }
                let lead = k.first().unwrap().0;
                if let Ok(j) = cand.binary_search_by_key(&lead, |e| e.0) {
                    let f = cand[j].1;
                    cand = row_axpy(&cand, k, p - f, p);
                }
            }
            if !cand.is_empty() {
                let inv = invm(cand.first().unwrap().1, p);
                for e in cand.iter_mut() {
                    e.1 = mulm(e.1, inv, p);
                }
                // keep `kept` in leading-column order for the reduction above
                let pos = kept
                    .binary_search_by_key(&cand.first().unwrap().0, |k| k.first().unwrap().0)
                    .unwrap_err();
                kept.insert(pos, cand);
                idx.push(i);
            }
        }
        idx
    }
}

fn row_axpy(r: &[(u32, u32)], s: &[(u32, u32)], f: u32, p: u32) -> Vec<(u32, u32)> {
    // r + f*s for sorted sparse rows
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut x, mut y) = (0, 0);
    while x < r.len() || y < s.len() {
        if y >= s.len() || (x < r.len() && r[x].0 < s[y].0) {
            out.push(r[x]);
            x += 1;
        } else if x >= r.len() || s[y].0 < r[x].0 {
            let v = mulm(s[y].1, f, p);
            if v != 0 {
                out.push((s[y].0, v));
            }
            y += 1;
        } else {
            let v = addm(r[x].1, mulm(s[y].1, f, p), p);
            if v != 0 {
                out.push((r[x].0, v));
            }
            x += 1;
            y += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Dense textbook elimination, used as the oracle.
    fn dense_rank(m: &[Vec<u32>], p: u32) -> usize {
        let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&v| v as u64 % p as u64).collect()).collect();
        let rows = a.len();
        let cols = if rows == 0 { 0 } else { a[0].len() };
        let (mut rank, mut row) = (0usize, 0usize);
        for col in 0..cols {
            if row >= rows {
                break;
            }
            let piv = (row..rows).find(|&i| a[i][col] != 0);
            let Some(piv) = piv else { continue };
            a.swap(row, piv);
            let inv = powm(a[row][col], p as u64 - 2, p as u64);
            for c in col..cols {
                a[row][c] = a[row][c] * inv % p as u64;
            }
            for i in 0..rows {
                if i != row && a[i][col] != 0 {
                    let f = a[i][col];
                    for c in col..cols {
                        a[i][c] = (a[i][c] + (p as u64 - f) * a[row][c]) % p as u64;
                    }
                }
            }
            row += 1;
            rank += 1;
        }
        rank
    }

    fn random_sparse(rng: &mut ChaCha8Rng, rows: usize, cols: usize, p: u32) -> SparseMat {
        let mut trips = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(0.3) {
                    trips.push((r, c, rng.gen_range(0..p)));
                }
            }
        }
        SparseMat::from_triplets(rows, cols, p, &trips)
    }

    #[test]
    fn rank_of_identity() {
        for k in 0..6 {
            assert_eq!(SparseMat::identity(k, 101).rank(), k);
        }
    }

    #[test]
    fn rank_nullity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [2u32, 3, 101] {
            for _ in 0..67 {
                let rows = rng.gen_range(1..10);
                let cols = rng.gen_range(1..10);
                let m = random_sparse(&mut rng, rows, cols, p);
                let ker = m.kernel_basis();
                assert_eq!(m.rank() + ker.cols, cols, "rank-nullity at p={p}");
                assert!(m.multiply(&ker).unwrap().is_zero());
                assert_eq!(ker.rank(), ker.cols, "kernel basis independent");
            }
        }
    }

    #[test]
    fn agrees_with_dense_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2u32, 3, 101] {
            for _ in 0..40 {
                let rows = rng.gen_range(1..=12);
                let cols = rng.gen_range(1..=12);
                let m = random_sparse(&mut rng, rows, cols, p);
                assert_eq!(m.rank(), dense_rank(&m.to_dense(), p));
            }
        }
    }

    #[test]
    fn solve_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for p in [2u32, 3, 101] {
            for _ in 0..30 {
                let rows = rng.gen_range(1..8);
                let cols = rng.gen_range(1..8);
                let m = random_sparse(&mut rng, rows, cols, p);
                let x: Vec<u32> = (0..cols).map(|_| rng.gen_range(0..p)).collect();
                let b = m.apply(&x);
                let y = m.solve(&b).expect("consistent system must solve");
                assert_eq!(m.apply(&y), b);
            }
        }
    }

    #[test]
    fn inconsistent_solve_detected() {
        // x = 0 and x = 1 simultaneously
        let m = SparseMat::from_triplets(2, 1, 101, &[(0, 0, 1), (1, 0, 1)]);
        assert!(m.solve(&[0, 1]).is_none());
    }

    #[test]
    fn multiply_matches_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let (a, b, c) = (rng.gen_range(1..7), rng.gen_range(1..7), rng.gen_range(1..7));
            let m = random_sparse(&mut rng, a, b, 101);
            let n = random_sparse(&mut rng, b, c, 101);
            let prod = m.multiply(&n).unwrap().to_dense();
            let (md, nd) = (m.to_dense(), n.to_dense());
            for i in 0..a {
                for j in 0..c {
                    let mut s = 0u64;
                    for k in 0..b {
                        s += md[i][k] as u64 * nd[k][j] as u64;
                    }
                    assert_eq!(prod[i][j], (s % 101) as u32);
                }
            }
        }
    }

    #[test]
    fn dimension_mismatch_is_error() {
        let m = SparseMat::identity(2, 101);
        let n = SparseMat::identity(3, 101);
        assert!(m.multiply(&n).is_err());
    }

    #[test]
    fn primality_check() {
        assert!(check_prime(2).is_ok());
        assert!(check_prime(101).is_ok());
        assert!(check_prime(1).is_err());
        assert!(check_prime(91).is_err());
    }
}
