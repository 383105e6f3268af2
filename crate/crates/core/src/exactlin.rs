//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision. Matrices are small (the geometry
//! lives in dimension at most five or six), so the routines favour clarity
//! over asymptotics.

use std::fmt;
use std::ops::{Add, Deref, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// A point of `Z^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVec(pub Vec<Int>);

#[macro_export]
macro_rules! ivec {
    ($($x:expr),* $(,)?) => {
        $crate::exactlin::IntVec::from_i64s(&[$($x as i64),*])
    };
}

impl IntVec {
    pub fn new(entries: Vec<Int>) -> Self {
        IntVec(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        IntVec(vec![Int::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Int::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVec) -> Int {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &Int) -> IntVec {
        IntVec(self.0.iter().map(|a| a * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, k: &Int, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn content(&self) -> Int {
        self.0.iter().fold(Int::zero(), |g, x| g.gcd(x))
    }

    pub fn to_rats(&self) -> Vec<Rat> {
        self.0.iter().map(rat_from_int).collect()
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| x.to_i64()).collect()
    }

    /// Integer vector proportional to a rational vector, with entry-gcd 1 and
    /// the same direction. `None` for the zero vector.
    pub fn primitive_from_rats(v: &[Rat]) -> Option<IntVec> {
        let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
        let iv = IntVec(v.iter().map(|x| (x * rat_from_int(&l)).to_integer()).collect());
        primitive_vector(&iv).ok()
    }

    pub fn push(&mut self, x: Int) {
        self.0.push(x);
    }

    /// Drops the last coordinate.
    pub fn truncated(&self) -> IntVec {
        IntVec(self.0[..self.0.len() - 1].to_vec())
    }

    pub fn extended(&self, x: Int) -> IntVec {
        let mut v = self.clone();
        v.0.push(x);
        v
    }
}

impl Deref for IntVec {
    type Target = [Int];
    fn deref(&self) -> &[Int] {
        &self.0
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<'a> Add for &'a IntVec {
    type Output = IntVec;
    fn add(self, rhs: &'a IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub for &'a IntVec {
    type Output = IntVec;
    fn sub(self, rhs: &'a IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVec {
    type Output = IntVec;
    fn neg(self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }
}

/// Divides by the gcd of the entries; the sign is preserved.
pub fn primitive_vector(v: &IntVec) -> Result<IntVec> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(IntVec(v.0.iter().map(|x| x / &g).collect()))
}

/// Dense integer matrix, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMat {
    rows: Vec<IntVec>,
    cols: usize,
}

impl IntMat {
    pub fn from_rows(rows: Vec<IntVec>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.dim() == cols), "ragged matrix");
        IntMat { rows, cols }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| IntVec::from_i64s(r)).collect(), cols)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_rows((0..n).map(|i| IntVec::unit(n, i)).collect(), n)
    }

    pub fn zeros(r: usize, c: usize) -> Self {
        Self::from_rows(vec![IntVec::zeros(c); r], c)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[IntVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<IntVec> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &IntVec {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> IntVec {
        IntVec(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_rows((0..self.cols).map(|j| self.column(j)).collect(), self.nrows())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.nrows());
        let ot = other.transpose();
        IntMat::from_rows(
            self.rows
                .iter()
                .map(|r| IntVec(ot.rows.iter().map(|c| r.dot(c)).collect()))
                .collect(),
            other.cols,
        )
    }

    /// `M x` for a column vector `x`.
    pub fn apply(&self, x: &IntVec) -> IntVec {
        IntVec(self.rows.iter().map(|r| r.dot(x)).collect())
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat::from_rows(self.rows.iter().map(|r| r.to_rats()).collect(), self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.cols
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Int {
        assert!(self.is_square());
        let n = self.cols;
        if n == 0 {
            return Int::one();
        }
        let mut a: Vec<Vec<Int>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = Int::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Rank over the rationals by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.rows.iter().map(|r| r.0.clone()).collect(), self.cols)
    }

    /// Inverse of a unimodular matrix.
    pub fn unimodular_inverse(&self) -> Option<IntMat> {
        if !self.is_square() || !self.det().abs().is_one() {
            return None;
        }
        let inv = self.to_rat().inverse()?;
        inv.to_int()
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.rows[i][j]
    }
}

fn bareiss_rank(mut a: Vec<Vec<Int>>, cols: usize) -> usize {
    let m = a.len();
    let mut rank = 0;
    let mut prev = Int::one();
    for c in 0..cols {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        for i in rank + 1..m {
            for j in c + 1..cols {
                let v = (&a[i][j] * &a[rank][c] - &a[i][c] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = Int::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Dense rational matrix; entries are kept in lowest terms by `BigRational`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMat {
    rows: Vec<Vec<Rat>>,
    cols: usize,
}

impl RatMat {
    pub fn from_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RatMat { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut a = self.rows.clone();
        let m = a.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in c..self.cols {
                        let v = &f * &a[r][j];
                        a[i][j] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (RatMat::from_rows(a, self.cols), pivots)
    }

    pub fn inverse(&self) -> Option<RatMat> {
        let n = self.cols;
        if self.nrows() != n {
            return None;
        }
        let aug: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        let (red, pivots) = RatMat::from_rows(aug, 2 * n).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(RatMat::from_rows(
            red.rows.into_iter().map(|r| r[n..].to_vec()).collect(),
            n,
        ))
    }

    pub fn to_int(&self) -> Option<IntMat> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.is_integer().then(|| x.to_integer()))
                    .collect::<Option<Vec<_>>>()
                    .map(IntVec)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(IntMat::from_rows(rows, self.cols))
    }
}

/// Rank and a canonical basis of the right kernel over the rationals.
///
/// The rank is computed by fraction-free elimination; the kernel basis comes
/// from the reduced row echelon form, one vector per free column, ordered by
/// free column.
pub fn kernel_and_rank(m: &RatMat) -> (usize, Vec<Vec<Rat>>) {
    let (red, pivots) = m.rref();
    let free: Vec<usize> = (0..m.ncols()).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); m.ncols()];
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.rows[r][f].clone();
            }
            v
        })
        .collect();
    let rank = rational_rank(m);
    debug_assert_eq!(rank, pivots.len());
    (rank, basis)
}

/// Fraction-free rank of a rational matrix: rows are cleared of denominators
/// first, which does not change the rank.
pub fn rational_rank(m: &RatMat) -> usize {
    let rows = m
        .rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
            r.iter().map(|x| (x * rat_from_int(&l)).to_integer()).collect()
        })
        .collect();
    bareiss_rank(rows, m.ncols())
}

/// Primitive integer vectors spanning the rational right kernel of `m`.
pub fn integer_kernel(m: &IntMat) -> Vec<IntVec> {
    let (_, basis) = kernel_and_rank(&m.to_rat());
    basis
        .iter()
        .map(|v| IntVec::primitive_from_rats(v).expect("kernel vector is nonzero"))
        .collect()
}

/// Some solution of `A x = b` over the rationals.
pub fn solve_rational(a: &RatMat, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.ncols();
    let aug: Vec<Vec<Rat>> = a
        .rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let (red, pivots) = RatMat::from_rows(aug, n + 1).rref();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = red.rows[r][n].clone();
    }
    Some(x)
}

/// A lattice automorphism `x -> M x + translation`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UnimodularMap {
    pub matrix: IntMat,
    pub translation: Option<IntVec>,
}

impl UnimodularMap {
    pub fn new(matrix: IntMat) -> Result<Self> {
        if !matrix.is_square() || !matrix.det().abs().is_one() {
            return Err(Error::InvalidInput("matrix is not unimodular".into()));
        }
        Ok(UnimodularMap { matrix, translation: None })
    }

    pub fn identity(d: usize) -> Self {
        UnimodularMap { matrix: IntMat::identity(d), translation: None }
    }

    pub fn dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn apply(&self, x: &IntVec) -> IntVec {
        let y = self.matrix.apply(x);
        match &self.translation {
            Some(t) => &y + t,
            None => y,
        }
    }

    /// `self ∘ other` for linear maps.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        UnimodularMap { matrix: self.matrix.mul(&other.matrix), translation: None }
    }

    pub fn inverse(&self) -> UnimodularMap {
        UnimodularMap {
            matrix: self.matrix.unimodular_inverse().expect("unimodular"),
            translation: None,
        }
    }

    pub fn det(&self) -> Int {
        self.matrix.det()
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U M = H`, `U`
/// unimodular, `H` in row echelon form with positive pivots and the entries
/// above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMat) -> (IntMat, UnimodularMap) {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut h: Vec<Vec<Int>> = m.rows.iter().map(|r| r.0.clone()).collect();
    let mut u: Vec<Vec<Int>> = IntMat::identity(rows).rows.into_iter().map(|r| r.0).collect();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..rows).filter(|&i| !h[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| h[i][c].abs()).unwrap();
            h.swap(p, r);
            u.swap(p, r);
            let mut done = true;
            for i in r + 1..rows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                sub_row(&mut h, i, r, &q);
                sub_row(&mut u, i, r, &q);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if !q.is_zero() {
                sub_row(&mut h, i, r, &q);
                sub_row(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    let hm = IntMat::from_rows(h.into_iter().map(IntVec).collect(), cols);
    let um = IntMat::from_rows(u.into_iter().map(IntVec).collect(), rows);
    (hm, UnimodularMap { matrix: um, translation: None })
}

fn sub_row(a: &mut [Vec<Int>], i: usize, r: usize, q: &Int) {
    let src = a[r].clone();
    for (x, s) in a[i].iter_mut().zip(&src) {
        *x -= q * s;
    }
}

/// gcd of the maximal minors of a `k x d` matrix of rank `k`; zero when the
/// rows are dependent. The rows extend to a basis of `Z^d` iff this is one.
pub fn maximal_minor_gcd(rows: &[IntVec]) -> Int {
    let k = rows.len();
    if k == 0 {
        return Int::one();
    }
    let d = rows[0].dim();
    let mut g = Int::zero();
    for cols in combinations(d, k) {
        let m = IntMat::from_rows(
            rows.iter().map(|r| IntVec(cols.iter().map(|&c| r[c].clone()).collect())).collect(),
            k,
        );
        g = g.gcd(&m.det());
        if g.is_one() {
            break;
        }
    }
    g
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Coordinates for the lattice `span(vectors) ∩ Z^d`.
///
/// `full` is a unimodular matrix whose first `rank` rows are a basis of the
/// saturated sublattice; `inverse` is its inverse. A point `x` of the span has
/// local coordinates `(x · inverse)[..rank]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeChart {
    pub rank: usize,
    pub full: IntMat,
    pub inverse: IntMat,
}

impl LatticeChart {
    pub fn new(vectors: &[IntVec], ambient: usize) -> LatticeChart {
        let a = IntMat::from_rows(vectors.to_vec(), ambient);
        let rank = a.rank();
        if rank == ambient {
            return LatticeChart {
                rank,
                full: IntMat::identity(ambient),
                inverse: IntMat::identity(ambient),
            };
        }
        // Rows spanning the orthogonal complement of the span.
        let perp = if vectors.is_empty() {
            IntMat::identity(ambient).into_rows()
        } else {
            integer_kernel(&a)
        };
        let nt = IntMat::from_rows(perp, ambient).transpose();
        let (h, u) = hermite_normal_form(&nt);
        // Rows of U with zero rows in H form a basis of the saturated span.
        let zero_rows: Vec<usize> = (0..ambient).filter(|&i| h.row(i).is_zero()).collect();
        let nonzero_rows: Vec<usize> = (0..ambient).filter(|&i| !h.row(i).is_zero()).collect();
        debug_assert_eq!(zero_rows.len(), rank);
        let rows: Vec<IntVec> = zero_rows
            .iter()
            .chain(&nonzero_rows)
            .map(|&i| u.matrix.row(i).clone())
            .collect();
        let full = IntMat::from_rows(rows, ambient);
        let inverse = full.unimodular_inverse().expect("HNF transform is unimodular");
        LatticeChart { rank, full, inverse }
    }

    pub fn ambient(&self) -> usize {
        self.full.ncols()
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.full.rows()[..self.rank]
    }

    /// Completion vectors (rows of `full` beyond the basis).
    pub fn complement(&self) -> &[IntVec] {
        &self.full.rows()[self.rank..]
    }

    /// All coordinates of `x` in the basis `full`.
    pub fn all_coords(&self, x: &IntVec) -> IntVec {
        self.inverse.transpose().apply(x)
    }

    pub fn contains(&self, x: &IntVec) -> bool {
        self.all_coords(x)[self.rank..].iter().all(Zero::is_zero)
    }

    /// Local coordinates of a point of the span.
    pub fn coords(&self, x: &IntVec) -> IntVec {
        let c = self.all_coords(x);
        IntVec(c.0[..self.rank].to_vec())
    }

    pub fn lift(&self, c: &IntVec) -> IntVec {
        let mut out = IntVec::zeros(self.ambient());
        for (ci, b) in c.iter().zip(self.basis()) {
            out = out.add_scaled(ci, b);
        }
        out
    }

    /// Ambient integer functional that agrees with the local functional `n`
    /// on the span and vanishes on the completion vectors.
    pub fn lift_functional(&self, n: &IntVec) -> IntVec {
        let mut ext = n.clone();
        ext.0.resize(self.ambient(), Int::zero());
        self.inverse.apply(&ext)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMat {
        IntMat::from_i64_rows(rows)
    }

    #[test]
    fn hnf_identity() {
        let id = IntMat::identity(3);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u.matrix, id);
    }

    #[test]
    fn hnf_already_reduced() {
        let a = m(&[&[2, 0], &[0, 2]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, a);
        assert_eq!(u.matrix, IntMat::identity(2));
    }

    #[test]
    fn hnf_gcd_pivot() {
        let a = m(&[&[2, 4], &[1, 3]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h[(0, 0)], int(1));
        assert_eq!(u.matrix.mul(&a), h);
        assert!(u.det().abs().is_one());
        // det(M) = 2, so H = [[1, *], [0, 2]]
        assert_eq!(h[(1, 1)], int(2));
        assert_eq!(h[(1, 0)], int(0));
    }

    #[test]
    fn kernel_zero_and_identity() {
        let z = IntMat::zeros(2, 3).to_rat();
        let (r, k) = kernel_and_rank(&z);
        assert_eq!((r, k.len()), (0, 3));
        let (r, k) = kernel_and_rank(&IntMat::identity(3).to_rat());
        assert_eq!((r, k.len()), (3, 0));
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_vector(&ivec![2, 4, 6]).unwrap(), ivec![1, 2, 3]);
        assert_eq!(primitive_vector(&ivec![0, 0, 5]).unwrap(), ivec![0, 0, 1]);
        assert_eq!(primitive_vector(&ivec![-3, 6]).unwrap(), ivec![-1, 2]);
        assert_eq!(primitive_vector(&ivec![0, 0]), Err(Error::ZeroVector));
    }

    #[test]
    fn det_and_rank() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(a.det(), int(-3));
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), int(-1));
    }

    #[test]
    fn chart_of_plane() {
        // the plane y = 0 in Z^3
        let chart = LatticeChart::new(&[ivec![-1, 0, 1], ivec![1, 0, 2]], 3);
        assert_eq!(chart.rank, 2);
        assert!(chart.contains(&ivec![0, 0, 1]));
        assert!(!chart.contains(&ivec![0, 1, 0]));
        let c = chart.coords(&ivec![5, 0, -7]);
        assert_eq!(chart.lift(&c), ivec![5, 0, -7]);
        // saturation: (0,0,1) is in the lattice even though the spanning
        // vectors only generate an index-3 sublattice
        let c = chart.coords(&ivec![0, 0, 1]);
        assert_eq!(chart.lift(&c), ivec![0, 0, 1]);
    }

    #[test]
    fn chart_functional_lift() {
        let chart = LatticeChart::new(&[ivec![1, 1, 0], ivec![0, 0, 1]], 3);
        let n = ivec![2, -1];
        let a = chart.lift_functional(&n);
        for x in [ivec![1, 1, 0], ivec![0, 0, 1], ivec![3, 3, 5]] {
            assert_eq!(a.dot(&x), n.dot(&chart.coords(&x)));
        }
    }

    #[test]
    fn minor_gcd() {
        assert_eq!(maximal_minor_gcd(&[ivec![2, 1]]), int(1));
        assert_eq!(maximal_minor_gcd(&[ivec![1, 1], ivec![1, -1]]), int(2));
        assert_eq!(maximal_minor_gcd(&[ivec![-1, 3, -1], ivec![-1, 1, 0]]), int(1));
    }

    #[test]
    fn solve_simple() {
        let a = m(&[&[1, 1], &[1, -1]]).to_rat();
        let x = solve_rational(&a, &[rat(3, 1), rat(1, 1)]).unwrap();
        assert_eq!(x, vec![rat(2, 1), rat(1, 1)]);
        let a = m(&[&[1, 1], &[2, 2]]).to_rat();
        assert!(solve_rational(&a, &[rat(1, 1), rat(3, 1)]).is_none());
    }
}
