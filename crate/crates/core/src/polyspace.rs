//! Forms of degree `d` in `n+1` variables, evaluated at points.
//!
//! Also hosts the small amount of univariate and binary-form algebra needed
//! to locate the ninth base point of a pencil of plane cubics.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::linalg::{determinant, int, Mat, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("all coordinates of the point are zero")]
    ZeroPoint,
    #[error("degree must be at least 1")]
    DegreeZero,
    #[error("point has {got} coordinates, basis expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("form is identically zero")]
    ZeroForm,
    #[error("({}:{}) is not a root of the binary form", .0.0, .0.1)]
    NotARoot(Box<(Scalar, Scalar)>),
    #[error("variable index {0} out of range")]
    BadVariable(usize),
}

/// Exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

/// Binomial coefficient; panics on overflow rather than wrapping.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// `h⁰(O_{Pⁿ}(d)) = C(n+d, n)`, the number of degree-`d` monomials in
/// `n+1` variables.
pub fn dim_forms(n: usize, d: u32) -> usize {
    binomial((n as u64) + d as u64, n as u64) as usize
}

/// Degree-`d` monomials in `x₀..xₙ`, in deg-lex order with
/// `x₀ > x₁ > … > xₙ` (so `x₀ᵈ` comes first and `xₙᵈ` last).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    n: usize,
    d: u32,
    order: Vec<MultiIndex>,
}

impl MonomialBasis {
    pub fn new(n: usize, d: u32) -> Self {
        let mut order = Vec::with_capacity(dim_forms(n, d));
        let mut cur = vec![0u32; n + 1];
        fill(&mut cur, 0, d, &mut order);
        MonomialBasis { n, d, order }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn monomials(&self) -> &[MultiIndex] {
        &self.order
    }

    pub fn index_of(&self, m: &MultiIndex) -> Option<usize> {
        // deg-lex with x₀ largest is reverse lexicographic order on exponents.
        self.order.binary_search_by(|probe| m.cmp(probe)).ok()
    }
}

fn fill(cur: &mut [u32], pos: usize, left: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(MultiIndex(cur.to_vec()));
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

fn check_point(b: &MonomialBasis, coords: &[Scalar]) -> Result<(), PolyError> {
    if coords.len() != b.n + 1 {
        return Err(PolyError::DimensionMismatch {
            expected: b.n + 1,
            got: coords.len(),
        });
    }
    if coords.iter().all(Zero::is_zero) {
        return Err(PolyError::ZeroPoint);
    }
    Ok(())
}

/// `powers[i][k] = coords[i]^k` for `k ≤ d`.
fn power_table(coords: &[Scalar], d: u32) -> Vec<Vec<Scalar>> {
    coords
        .iter()
        .map(|c| {
            let mut row = Vec::with_capacity(d as usize + 1);
            row.push(Scalar::one());
            for k in 1..=d as usize {
                let next = &row[k - 1] * c;
                row.push(next);
            }
            row
        })
        .collect()
}

fn monomial_value(powers: &[Vec<Scalar>], exps: &[u32]) -> Scalar {
    let mut acc = Scalar::one();
    for (p, &e) in powers.iter().zip(exps) {
        if e > 0 {
            let f = &p[e as usize];
            if f.is_zero() {
                return Scalar::zero();
            }
            acc *= f;
        }
    }
    acc
}

/// Values of the basis monomials at the point.
pub fn eval_row(b: &MonomialBasis, coords: &[Scalar]) -> Result<Vec<Scalar>, PolyError> {
    check_point(b, coords)?;
    let powers = power_table(coords, b.d);
    Ok(b.order
        .iter()
        .map(|m| monomial_value(&powers, &m.0))
        .collect())
}

/// The `n+1` rows `∂/∂xᵢ` of the basis evaluated at the point. Their span is
/// the space of linear conditions imposed by the double point.
pub fn partial_rows(b: &MonomialBasis, coords: &[Scalar]) -> Result<Vec<Vec<Scalar>>, PolyError> {
    if b.d == 0 {
        return Err(PolyError::DegreeZero);
    }
    check_point(b, coords)?;
    let powers = power_table(coords, b.d);
    let mut rows = Vec::with_capacity(b.n + 1);
    let mut exps = vec![0u32; b.n + 1];
    for i in 0..=b.n {
        let row = b
            .order
            .iter()
            .map(|m| {
                let e = m.0[i];
                if e == 0 {
                    return Scalar::zero();
                }
                exps.copy_from_slice(&m.0);
                exps[i] -= 1;
                monomial_value(&powers, &exps) * int(e as i64)
            })
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

/// A homogeneous form given by its coefficients over a monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    basis: MonomialBasis,
    coeffs: Vec<Scalar>,
}

impl Form {
    pub fn new(basis: MonomialBasis, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(basis.len(), coeffs.len(), "coefficient count mismatch");
        Form { basis, coeffs }
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> u32 {
        self.basis.d
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, coords: &[Scalar]) -> Scalar {
        assert_eq!(coords.len(), self.basis.n + 1, "point dimension mismatch");
        let powers = power_table(coords, self.basis.d);
        self.basis
            .order
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| monomial_value(&powers, &m.0) * c)
            .fold(Scalar::zero(), |acc, v| acc + v)
    }

    /// Coefficients of the form as a polynomial in variable `var`, with the
    /// other variables fixed to `rest` (listed in index order, `var` skipped).
    /// Entry `k` is the coefficient of `x_var^k`.
    pub fn specialize(&self, var: usize, rest: &[Scalar]) -> Vec<Scalar> {
        let n = self.basis.n;
        assert_eq!(rest.len(), n, "specialization needs n values");
        let mut full = Vec::with_capacity(n + 1);
        full.extend_from_slice(&rest[..var]);
        full.push(Scalar::one());
        full.extend_from_slice(&rest[var..]);
        let powers = power_table(&full, self.basis.d);
        let mut out = vec![Scalar::zero(); self.basis.d as usize + 1];
        let mut exps = vec![0u32; n + 1];
        for (m, c) in self.basis.order.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            exps.copy_from_slice(&m.0);
            let k = exps[var];
            exps[var] = 0;
            out[k as usize] += monomial_value(&powers, &exps) * c;
        }
        out
    }
}

/// Homogeneous form in two variables `x, y`; `coeffs[k]` multiplies
/// `x^(deg-k) y^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree+1 coefficients");
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let deg = self.degree();
        let mut acc = Scalar::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * pow(x, deg - k) * pow(y, k);
        }
        acc
    }

    /// Divides by the linear factor `b·x − a·y` vanishing at `(a:b)`.
    pub fn deflate(&self, a: &Scalar, b: &Scalar) -> Result<BinaryForm, PolyError> {
        let not_root = || PolyError::NotARoot(Box::new((a.clone(), b.clone())));
        if (a.is_zero() && b.is_zero()) || self.degree() == 0 || !self.eval(a, b).is_zero() {
            return Err(not_root());
        }
        let c = &self.coeffs;
        let deg = self.degree();
        let mut q = Vec::with_capacity(deg);
        if !b.is_zero() {
            q.push(&c[0] / b);
            for k in 1..deg {
                let next = (&c[k] + a * &q[k - 1]) / b;
                q.push(next);
            }
        } else {
            // (a:0): the factor is -a·y, so x^deg must be absent.
            for k in 0..deg {
                q.push(-(&c[k + 1] / a));
            }
        }
        Ok(BinaryForm { coeffs: q })
    }

    /// The root `(a:b)` of a nonzero linear form.
    pub fn linear_root(&self) -> Option<(Scalar, Scalar)> {
        if self.degree() != 1 || self.is_zero() {
            return None;
        }
        Some((-self.coeffs[1].clone(), self.coeffs[0].clone()))
    }
}

fn pow(v: &Scalar, e: usize) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..e {
        acc *= v;
    }
    acc
}

/// Divides out one linear factor per listed root.
pub fn deflate_roots(f: &BinaryForm, known: &[(Scalar, Scalar)]) -> Result<BinaryForm, PolyError> {
    known
        .iter()
        .try_fold(f.clone(), |acc, (a, b)| acc.deflate(a, b))
}

/// Sylvester determinant of two univariate polynomials with the given formal
/// degrees (coefficients ascending).
fn sylvester(f: &[Scalar], g: &[Scalar]) -> Scalar {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return Scalar::one();
    }
    let mut data = vec![Scalar::zero(); size * size];
    for i in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            data[i * size + i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            data[(n + i) * size + i + k] = c.clone();
        }
    }
    determinant(&Mat::new(size, size, data).expect("square Sylvester matrix"))
}

/// Resultant of two ternary forms with respect to variable `var`, as a binary
/// form of degree `deg f · deg g` in the two remaining variables (kept in
/// index order).
///
/// The resultant is sampled at `deg f · deg g + 1` points of the chart
/// `(1 : t)` and recovered by interpolation.
pub fn resultant(f: &Form, g: &Form, var: usize) -> Result<BinaryForm, PolyError> {
    if f.basis.n != 2 || g.basis.n != 2 {
        return Err(PolyError::DimensionMismatch {
            expected: 3,
            got: f.basis.n.max(g.basis.n) + 1,
        });
    }
    if var > 2 {
        return Err(PolyError::BadVariable(var));
    }
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroForm);
    }
    let total = (f.degree() * g.degree()) as usize;
    let samples: Vec<Scalar> = (0..=total as i64).map(int).collect();
    let values: Vec<Scalar> = samples
        .iter()
        .map(|t| {
            let rest = [Scalar::one(), t.clone()];
            sylvester(&f.specialize(var, &rest), &g.specialize(var, &rest))
        })
        .collect();
    let coeffs = interpolate(&samples, &values);
    Ok(BinaryForm::new(coeffs))
}

/// Newton interpolation; returns ascending coefficients of the unique
/// polynomial of degree `< xs.len()` through the samples.
pub fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> Vec<Scalar> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner expansion of the Newton form.
    let mut poly = vec![Scalar::zero(); n];
    for i in (0..n).rev() {
        // poly = poly * (t - xs[i]) + dd[i]
        let mut next = vec![Scalar::zero(); n];
        for k in 0..n {
            if poly[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &poly[k];
            }
            next[k] -= &poly[k] * &xs[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly
}

/// Drops trailing zero coefficients (ascending representation).
pub(crate) fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Monic gcd of two univariate polynomials over the rationals (ascending
/// coefficients). The gcd of two zero polynomials is zero (empty vector).
pub fn poly_gcd(a: Vec<Scalar>, b: Vec<Scalar>) -> Vec<Scalar> {
    let mut a = trim(a);
    let mut b = trim(b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c /= &lead;
        }
    }
    a
}

fn poly_rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db {
        let k = r.len() - 1;
        let f = &r[k] / lead;
        let shift = k - db;
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &f * c;
        }
        r = trim(r);
        if r.len() == k + 1 {
            // Leading term did not cancel; cannot happen over a field.
            r.pop();
        }
    }
    r
}
