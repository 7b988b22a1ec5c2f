//! Exact linear algebra over the rationals.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination on rows whose
//! denominators have been cleared, so every intermediate value is an integer
//! minor of the input. A modular path reduces the matrix modulo word-sized
//! primes; its rank can only be smaller than the rational one.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::rng::seeded;

/// Exact rational coefficient. `BigRational` keeps itself reduced with a
/// positive denominator.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued [`Scalar`].
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix data has {got} entries, expected {rows}x{cols}")]
    Shape { rows: usize, cols: usize, got: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} divides a denominator of the matrix")]
    BadPrime(u64),
    #[error("matrix is singular")]
    Singular,
}

/// Dense rational matrix, row-major. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape {
                rows,
                cols,
                got: data.len(),
            });
        }
        Ok(Mat { rows, cols, data })
    }

    /// Builds a matrix from rows of equal length. `cols` is only consulted
    /// when `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(cols, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::Shape {
                    rows: nrows,
                    cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Mat {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Scalar> = rows.iter().flat_map(|r| r.iter().map(|&v| int(v))).collect();
        Mat::new(rows.len(), cols, data).expect("ragged integer rows")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Scalar::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Scalar::one();
        }
        Mat {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Mat {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Mat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.row_iter().map(|row| dot(row, v)).collect()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                data.push(acc);
            }
        }
        Mat {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend(self.row(i).iter().cloned());
        }
        Mat {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for row in self.row_iter() {
            write!(f, "  ")?;
            for v in row {
                write!(f, "{} ", v)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Multiplies a rational row by the lcm of its denominators and divides out
/// the content, giving a primitive integer row with the same span.
pub fn primitive_integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = row
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.into_iter().map(|v| v / &content).collect()
    }
}

fn bits(v: &BigInt) -> u64 {
    v.bits()
}

/// Fraction-free forward elimination. Returns the rank and leaves the matrix
/// in echelon form with the pivot positions listed.
fn bareiss_echelon(a: &mut [Vec<BigInt>], cols: usize) -> Vec<(usize, usize)> {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        // Smallest nonzero candidate keeps the entries short.
        let pivot = (r..nrows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| bits(&a[i][c]));
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        let pv = &prow[c];
        for row in tail.iter_mut() {
            let lead = core::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut t = pv * &row[j];
                if !lead.is_zero() && !prow[j].is_zero() {
                    t -= &lead * &prow[j];
                }
                row[j] = if prev.is_one() { t } else { t / &prev };
            }
        }
        prev = a[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

fn integer_rows(m: &Mat) -> Vec<Vec<BigInt>> {
    m.row_iter()
        .map(primitive_integer_row)
        .filter(|row| row.iter().any(|v| !v.is_zero()))
        .collect()
}

const SHORTCUT_PRIME: u64 = (1 << 61) - 1;

/// Exact rank over the rationals.
pub fn rank(m: &Mat) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    // A modular rank never exceeds the rational one, so full rank mod p is a
    // certificate.
    let full = m.rows.min(m.cols);
    if rank_mod_p(m, SHORTCUT_PRIME) == Ok(full) {
        return full;
    }
    // Eliminate along the shorter side.
    let mut a = if m.rows <= m.cols {
        integer_rows(m)
    } else {
        integer_rows(&m.transpose())
    };
    let cols = m.rows.max(m.cols);
    bareiss_echelon(&mut a, cols).len()
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &Mat) -> Scalar {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Scalar::one();
    }
    // Track the scaling applied while clearing denominators.
    let mut scale = Scalar::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m.row_iter() {
        let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        scale *= Scalar::from_integer(lcm.clone());
        a.push(row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect());
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        let (head, tail) = a.split_at_mut(c + 1);
        let prow = &head[c];
        for row in tail.iter_mut() {
            let lead = core::mem::take(&mut row[c]);
            for j in c + 1..n {
                let t = &prow[c] * &row[j] - &lead * &prow[j];
                row[j] = t / &prev;
            }
        }
        prev = a[c][c].clone();
    }
    let det = Scalar::from_integer(if sign < 0 { -prev } else { prev });
    det / scale
}

/// Reduced row echelon form over the rationals. Returns the pivot columns.
fn rref(m: &Mat) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut a: Vec<Vec<Scalar>> = m
        .row_iter()
        .map(|row| {
            primitive_integer_row(row)
                .into_iter()
                .map(Scalar::from_integer)
                .collect()
        })
        .collect();
    let (nrows, ncols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].numer().bits() + a[i][c].denom().bits())
        else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut().skip(c) {
            *v *= &inv;
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..ncols {
                if !prow[j].is_zero() {
                    row[j] -= &f * &prow[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn normalize_integral(v: &[Scalar]) -> Vec<Scalar> {
    let mut ints = primitive_integer_row(v);
    if ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.sign() == Sign::Minus)
    {
        for x in ints.iter_mut() {
            *x = -core::mem::take(x);
        }
    }
    ints.into_iter().map(Scalar::from_integer).collect()
}

/// Basis of the right kernel `{v : m·v = 0}`, one vector per free column,
/// each scaled to a primitive integer vector.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<Scalar>> {
    let ncols = m.cols;
    let (red, pivots) = rref(m);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(normalize_integral(&v));
    }
    basis
}

/// Solves `a·x = b` for square invertible `a`.
pub fn solve(a: &Mat, b: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
    let n = a.rows;
    assert_eq!(a.cols, n, "solve needs a square matrix");
    assert_eq!(b.len(), n, "right-hand side length mismatch");
    let mut aug = Vec::with_capacity(n * (n + 1));
    for (i, row) in a.row_iter().enumerate() {
        aug.extend(row.iter().cloned());
        aug.push(b[i].clone());
    }
    let m = Mat::new(n, n + 1, aug)?;
    let (red, pivots) = rref(&m);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(LinalgError::Singular);
    }
    // rref normalises rows after clearing content; the last column holds x.
    Ok(red.iter().map(|row| row[n].clone()).collect())
}

pub fn inverse(a: &Mat) -> Result<Mat, LinalgError> {
    let n = a.rows;
    assert_eq!(a.cols, n, "inverse needs a square matrix");
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[j] = Scalar::one();
        cols.push(solve(a, &e)?);
    }
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for col in &cols {
            data.push(col[i].clone());
        }
    }
    Mat::new(n, n, data)
}

// ---------------------------------------------------------------------------
// modular path

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn scalar_mod(v: &Scalar, p: u64) -> Result<u64, LinalgError> {
    let den = reduce_mod(v.denom(), p);
    if den == 0 {
        return Err(LinalgError::BadPrime(p));
    }
    let num = reduce_mod(v.numer(), p);
    Ok(mul_mod(num, pow_mod(den, p - 2, p), p))
}

/// Rank of `m` reduced modulo the prime `p`. Never exceeds [`rank`].
pub fn rank_mod_p(m: &Mat, p: u64) -> Result<usize, LinalgError> {
    if !is_prime(p) {
        return Err(LinalgError::NotPrime(p));
    }
    let mut a: Vec<Vec<u64>> = m
        .row_iter()
        .map(|row| row.iter().map(|v| scalar_mod(v, p)).collect())
        .collect::<Result<_, _>>()?;
    let (nrows, ncols) = (m.rows, m.cols);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv, p);
            for j in c..ncols {
                if prow[j] != 0 {
                    row[j] = (row[j] + p - mul_mod(f, prow[j], p)) % p;
                }
            }
        }
        r += 1;
    }
    Ok(r)
}

/// Draws a random prime with exactly `bits` bits.
pub fn random_prime<R: Rng>(rng: &mut R, bits: u32) -> u64 {
    assert!((3..=62).contains(&bits), "unsupported prime size");
    let lo = 1u64 << (bits - 1);
    loop {
        let cand = rng.random_range(lo..lo << 1) | 1;
        if is_prime(cand) {
            return cand;
        }
    }
}

/// Outcome of the multi-prime modular rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularRank {
    /// Maximum rank observed; a lower bound for the rational rank.
    pub rank: usize,
    pub per_prime: Vec<(u64, usize)>,
    /// At least two primes reached the reported rank.
    pub confirmed: bool,
}

/// Rank modulo `k` random ~30-bit primes drawn from `seed`. Primes dividing
/// a denominator are skipped and redrawn.
pub fn rank_modular(m: &Mat, k: usize, seed: u64) -> ModularRank {
    let mut rng = seeded(seed);
    let mut per_prime = Vec::with_capacity(k);
    while per_prime.len() < k {
        let p = random_prime(&mut rng, 30);
        if per_prime.iter().any(|&(q, _)| q == p) {
            continue;
        }
        match rank_mod_p(m, p) {
            Ok(r) => per_prime.push((p, r)),
            Err(LinalgError::BadPrime(_)) => continue,
            Err(e) => unreachable!("random prime rejected: {e}"),
        }
    }
    let rank = per_prime.iter().map(|&(_, r)| r).max().unwrap_or(0);
    let hits = per_prime.iter().filter(|&&(_, r)| r == rank).count();
    ModularRank {
        rank,
        per_prime,
        confirmed: hits >= 2,
    }
}

/// Absolute value of the largest numerator or denominator, in bits.
pub fn height_bits(m: &Mat) -> u64 {
    m.data
        .iter()
        .map(|v| v.numer().abs().bits().max(v.denom().bits()))
        .max()
        .unwrap_or(0)
}
