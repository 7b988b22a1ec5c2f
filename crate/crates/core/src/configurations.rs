//! Seeded generators for the point configurations that populate special
//! strata of `(P²)^(r)`, and a parameter count for those strata.
//!
//! Generators only emit configurations whose defining property has been
//! checked in exact arithmetic; a draw that fails a check is redrawn.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use num_traits::{One, Zero};
use rand::Rng as _;

use crate::conditions::{check_points, cohomology, ConditionsError, ProjPoint, SchemeSpec};
use crate::linalg::{determinant, int, inverse, kernel_basis, Mat, Scalar};
use crate::polyspace::{
    binomial, deflate_roots, eval_row, poly_gcd, resultant, BinaryForm, Form, MonomialBasis,
};
use crate::rng::{derive_seed, seeded, Rng};
use crate::terracini::{cc3_bound, classify, ClassifyOptions};

const MAX_DRAWS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error(transparent)]
    Conditions(#[from] ConditionsError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("could not draw enough distinct points")]
    Exhausted,
    #[error("random curve of degree {0} kept degenerating")]
    DegenerateCurve(u32),
    #[error("cubics through the points form a space of dimension {0}, expected 2")]
    NotGeneralPosition(usize),
    #[error("no elimination chart isolates the ninth base point")]
    ChartFailure,
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("unsupported cell (n={n}, d={d})")]
    UnsupportedCell { n: usize, d: u32 },
    #[error("criterion failure: {0}")]
    Criterion(String),
}

/// `r` distinct points with integer coordinates in `[-bound, bound]` and last
/// coordinate 1.
pub fn random_general(n: usize, r: usize, seed: u64, bound: i64) -> Result<Vec<ProjPoint>, ConfigError> {
    if r == 0 || bound < 2 || n == 0 {
        return Err(ConfigError::InvalidParameter("random_general needs r ≥ 1, n ≥ 1, bound ≥ 2"));
    }
    let mut rng = seeded(seed);
    let mut out: Vec<ProjPoint> = Vec::with_capacity(r);
    let mut attempts = 0;
    while out.len() < r {
        attempts += 1;
        if attempts > MAX_DRAWS * r {
            return Err(ConfigError::Exhausted);
        }
        let mut c: Vec<Scalar> = (0..n).map(|_| int(rng.random_range(-bound..=bound))).collect();
        c.push(Scalar::one());
        let p = ProjPoint::new(c)?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Random invertible integer matrix with entries in `[-bound, bound]`.
pub fn random_invertible(size: usize, rng: &mut Rng, bound: i64) -> Mat {
    loop {
        let data: Vec<Scalar> = (0..size * size)
            .map(|_| int(rng.random_range(-bound..=bound)))
            .collect();
        let m = Mat::new(size, size, data).expect("square");
        if !determinant(&m).is_zero() {
            return m;
        }
    }
}

/// Points on a rational plane curve together with its equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSample {
    pub degree: u32,
    pub points: Vec<ProjPoint>,
    /// Coefficients over the deg-lex monomial basis of degree `degree`.
    pub equation: Vec<Scalar>,
    /// Three binary forms of degree `degree` (coefficients of `s^(e-k) t^k`).
    pub parametrization: [Vec<Scalar>; 3],
    /// Degree ≥ 3 rational curves are singular plane models.
    pub singular_model: bool,
}

impl CurveSample {
    pub fn form(&self) -> Form {
        Form::new(MonomialBasis::new(2, self.degree), self.equation.clone())
    }
}

fn param_point(param: &[Vec<Scalar>; 3], s: &Scalar, t: &Scalar) -> Vec<Scalar> {
    param
        .iter()
        .map(|coeffs| BinaryForm::new(coeffs.clone()).eval(s, t))
        .collect()
}

/// `r` points on a random rational plane curve of degree `e`, given by the
/// image of `(s:t) ↦ (f₀, f₁, f₂)` for random binary forms `fᵢ`.
pub fn on_rational_curve(e: u32, r: usize, seed: u64) -> Result<CurveSample, ConfigError> {
    if e == 0 || r == 0 {
        return Err(ConfigError::InvalidParameter("on_rational_curve needs e ≥ 1, r ≥ 1"));
    }
    let mut rng = seeded(seed);
    let basis = MonomialBasis::new(2, e);
    let coeff_bound = 9;
    'draw: for _ in 0..MAX_DRAWS {
        let param: [Vec<Scalar>; 3] = core::array::from_fn(|_| {
            (0..=e).map(|_| int(rng.random_range(-coeff_bound..=coeff_bound))).collect()
        });
        let coeff_rows = Mat::from_rows(param.to_vec(), e as usize + 1).expect("uniform");
        let needed = (e as usize + 1).min(3);
        if crate::linalg::rank(&coeff_rows) < needed {
            continue;
        }
        // Implicit equation from enough samples to pin down a degree-e curve.
        let samples = basis.len() + 2;
        let mut rows = Vec::with_capacity(samples);
        for k in 0..samples as i64 {
            let pt = param_point(&param, &int(1), &int(k - samples as i64 / 2));
            if pt.iter().all(Zero::is_zero) {
                continue 'draw;
            }
            rows.push(eval_row(&basis, &pt).expect("nonzero sample"));
        }
        let ker = kernel_basis(&Mat::from_rows(rows, basis.len()).expect("uniform"));
        if ker.len() != 1 {
            // Image of lower degree: the map is not birational.
            continue;
        }
        let equation = ker.into_iter().next().expect("one kernel vector");
        let form = Form::new(basis.clone(), equation.clone());

        let span = (4 * r as i64).max(20);
        let mut points: Vec<ProjPoint> = Vec::with_capacity(r);
        let mut used: Vec<i64> = Vec::new();
        let mut tries = 0;
        while points.len() < r {
            tries += 1;
            if tries > MAX_DRAWS * r {
                continue 'draw;
            }
            let t = rng.random_range(-span..=span);
            if used.contains(&t) {
                continue;
            }
            used.push(t);
            let raw = param_point(&param, &int(1), &int(t));
            let Ok(p) = ProjPoint::new(raw) else { continue };
            if points.contains(&p) {
                continue;
            }
            debug_assert!(form.eval(p.coords()).is_zero());
            points.push(p);
        }
        if points.iter().any(|p| !form.eval(p.coords()).is_zero()) {
            continue;
        }
        return Ok(CurveSample {
            degree: e,
            points,
            equation,
            parametrization: param,
            singular_model: e >= 3,
        });
    }
    Err(ConfigError::DegenerateCurve(e))
}

fn cubic_pencil(points: &[ProjPoint]) -> Result<(Form, Form), ConfigError> {
    let basis = MonomialBasis::new(2, 3);
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| eval_row(&basis, p.coords()).expect("valid point"))
        .collect();
    let ker = kernel_basis(&Mat::from_rows(rows, basis.len()).expect("uniform"));
    if ker.len() != 2 {
        return Err(ConfigError::NotGeneralPosition(ker.len()));
    }
    let mut it = ker.into_iter();
    let f = Form::new(basis.clone(), it.next().expect("two"));
    let g = Form::new(basis, it.next().expect("two"));
    Ok((f, g))
}

fn drop_var(p: &ProjPoint, var: usize) -> Vec<Scalar> {
    p.coords()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != var)
        .map(|(_, c)| c.clone())
        .collect()
}

fn same_p1(a: &[Scalar], b: &[Scalar]) -> bool {
    &a[0] * &b[1] == &a[1] * &b[0]
}

/// Projection from the coordinate point `e_var` is injective on the points
/// and none of them is the center.
fn chart_ok(points: &[ProjPoint], var: usize) -> bool {
    let proj: Vec<Vec<Scalar>> = points.iter().map(|p| drop_var(p, var)).collect();
    if proj.iter().any(|v| v.iter().all(Zero::is_zero)) {
        return false;
    }
    for i in 0..proj.len() {
        for j in i + 1..proj.len() {
            if same_p1(&proj[i], &proj[j]) {
                return false;
            }
        }
    }
    true
}

fn lift_in_chart(f: &Form, g: &Form, points: &[ProjPoint], var: usize) -> Result<Option<Vec<Scalar>>, ConfigError> {
    let Ok(res) = resultant(f, g, var) else { return Ok(None) };
    if res.is_zero() {
        let mut center = vec![Scalar::zero(); 3];
        center[var] = Scalar::one();
        if f.eval(&center).is_zero() && g.eval(&center).is_zero() {
            return Ok(None);
        }
        // The center is not a base point, so the cubics share a component.
        return Err(ConfigError::NotGeneralPosition(2));
    }
    Ok(lift_root(f, g, &res, points, var))
}

fn lift_root(f: &Form, g: &Form, res: &BinaryForm, points: &[ProjPoint], var: usize) -> Option<Vec<Scalar>> {
    let known: Vec<(Scalar, Scalar)> = points
        .iter()
        .map(|p| {
            let v = drop_var(p, var);
            (v[0].clone(), v[1].clone())
        })
        .collect();
    let rest = deflate_roots(res, &known).ok()?;
    let (a, b) = rest.linear_root()?;
    let proj = [a.clone(), b.clone()];
    if known.iter().any(|(x, y)| same_p1(&[x.clone(), y.clone()], &proj)) {
        return None;
    }
    let fv = f.specialize(var, &proj);
    let gv = g.specialize(var, &proj);
    let h = poly_gcd(fv, gv);
    if h.len() != 2 {
        return None;
    }
    let root = -&h[0] / &h[1];
    let mut coords = proj.to_vec();
    coords.insert(var, root);
    Some(coords)
}

/// The ninth base point of the pencil of cubics through eight plane points.
///
/// The pencil is eliminated to a degree-9 binary form by a resultant, the
/// eight known projections are divided out, and the remaining linear factor
/// is lifted back. Coordinate charts where the projection is not injective
/// are skipped; if none works, random coordinate changes are tried.
pub fn ninth_base_point(eight: &[ProjPoint]) -> Result<ProjPoint, ConfigError> {
    if eight.len() != 8 {
        return Err(ConfigError::InvalidParameter("ninth_base_point needs exactly 8 points"));
    }
    let refs: Vec<&ProjPoint> = eight.iter().collect();
    check_points(2, &refs)?;
    let (f0, g0) = cubic_pencil(eight)?;
    // Chart choice depends only on the point set, not the input order.
    let mut sorted = eight.to_vec();
    sorted.sort();
    let mut rng = seeded(0x9_b4_5e);
    for attempt in 0..MAX_DRAWS {
        let (g, pts) = if attempt == 0 {
            (Mat::identity(3), sorted.clone())
        } else {
            let g = random_invertible(3, &mut rng, 5);
            let pts = sorted
                .iter()
                .map(|p| p.transform(&g))
                .collect::<Result<Vec<_>, _>>()?;
            (g, pts)
        };
        let (f, h) = cubic_pencil(&pts)?;
        for var in [2, 1, 0] {
            if !chart_ok(&pts, var) {
                continue;
            }
            let Some(coords) = lift_in_chart(&f, &h, &pts, var)? else {
                continue;
            };
            let q = ProjPoint::new(coords)?.transform(&inverse(&g).expect("invertible"))?;
            if !f0.eval(q.coords()).is_zero() || !g0.eval(q.coords()).is_zero() {
                continue;
            }
            if eight.contains(&q) {
                return Err(ConfigError::NotGeneralPosition(2));
            }
            return Ok(q);
        }
    }
    Err(ConfigError::ChartFailure)
}

/// Kinds of constraint a family may impose on a block of its points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// `u` points on a curve of degree `degree`.
    OnCurve { u: usize, degree: u32 },
    /// Nine base points of a pencil of cubics.
    CompleteIntersectionCubics,
}

impl Constraint {
    pub fn size(&self) -> usize {
        match self {
            Constraint::OnCurve { u, .. } => *u,
            Constraint::CompleteIntersectionCubics => 9,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::OnCurve { u, degree: 1 } => write!(f, "{u}-on-line"),
            Constraint::OnCurve { u, degree: 2 } => write!(f, "{u}-on-conic"),
            Constraint::OnCurve { u, degree: 3 } => write!(f, "{u}-on-cubic"),
            Constraint::OnCurve { u, degree } => write!(f, "{u}-on-curve{degree}"),
            Constraint::CompleteIntersectionCubics => write!(f, "ci-cubics"),
        }
    }
}

/// `r` points of `Pⁿ`, some blocks constrained, the remainder general.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyDescriptor {
    pub n: usize,
    pub r: usize,
    pub constraints: Vec<Constraint>,
}

impl FamilyDescriptor {
    pub fn general(n: usize, r: usize) -> Self {
        FamilyDescriptor {
            n,
            r,
            constraints: Vec::new(),
        }
    }

    pub fn with(n: usize, r: usize, constraints: &[Constraint]) -> Self {
        FamilyDescriptor {
            n,
            r,
            constraints: constraints.to_vec(),
        }
    }

    pub fn constrained_size(&self) -> usize {
        self.constraints.iter().map(Constraint::size).sum()
    }

    pub fn general_count(&self) -> usize {
        self.r.saturating_sub(self.constrained_size())
    }

    fn validate(&self) -> Result<(), ConfigError> {
        if self.n == 0 || self.r == 0 {
            return Err(ConfigError::UnsupportedFamily("n and r must be positive".into()));
        }
        if self.constrained_size() > self.r {
            return Err(ConfigError::UnsupportedFamily(format!(
                "constraints cover {} points but r = {}",
                self.constrained_size(),
                self.r
            )));
        }
        if !self.constraints.is_empty() && self.n != 2 {
            return Err(ConfigError::UnsupportedFamily("constrained families live in P²".into()));
        }
        for c in &self.constraints {
            if let Constraint::OnCurve { u, degree } = *c {
                if degree == 0 || u == 0 {
                    return Err(ConfigError::UnsupportedFamily(format!("{c}")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constraints.is_empty() {
            return write!(f, "general");
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}")?;
        }
        if self.general_count() > 0 {
            write!(f, "+general")?;
        }
        Ok(())
    }
}

/// Points generated for one constraint block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintBlock {
    pub constraint: Constraint,
    pub range: Range<usize>,
    /// Forms vanishing on the block: the curve, or the two cubics.
    pub equations: Vec<Form>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySample {
    pub points: Vec<ProjPoint>,
    pub blocks: Vec<ConstraintBlock>,
}

impl FamilySample {
    /// Substitutes every block into its equations.
    pub fn satisfies_constraints(&self) -> bool {
        self.blocks.iter().all(|b| {
            self.points[b.range.clone()]
                .iter()
                .all(|p| b.equations.iter().all(|f| f.eval(p.coords()).is_zero()))
        })
    }
}

/// One sample of the family: constrained blocks first, in descriptor order,
/// then the general remainder.
pub fn with_constrained_subset(desc: &FamilyDescriptor, seed: u64, bound: i64) -> Result<FamilySample, ConfigError> {
    desc.validate()?;
    for attempt in 0..MAX_DRAWS as u64 {
        let base = derive_seed(seed, attempt);
        let mut points: Vec<ProjPoint> = Vec::with_capacity(desc.r);
        let mut blocks = Vec::new();
        for (k, c) in desc.constraints.iter().enumerate() {
            let sub = derive_seed(base, k as u64 + 1);
            let start = points.len();
            let equations = match *c {
                Constraint::OnCurve { u, degree } => {
                    let s = on_rational_curve(degree, u, sub)?;
                    points.extend(s.points.iter().cloned());
                    vec![s.form()]
                }
                Constraint::CompleteIntersectionCubics => {
                    let (eight, ninth) = ci_block(sub, bound)?;
                    points.extend(eight);
                    points.push(ninth);
                    let (f, g) = cubic_pencil(&points[start..start + 8])?;
                    vec![f, g]
                }
            };
            blocks.push(ConstraintBlock {
                constraint: *c,
                range: start..points.len(),
                equations,
            });
        }
        let rest = desc.general_count();
        if rest > 0 {
            points.extend(random_general(desc.n, rest, derive_seed(base, 0), bound)?);
        }
        let refs: Vec<&ProjPoint> = points.iter().collect();
        if check_points(desc.n, &refs).is_err() {
            continue;
        }
        let sample = FamilySample { points, blocks };
        if !sample.satisfies_constraints() {
            continue;
        }
        return Ok(sample);
    }
    Err(ConfigError::Exhausted)
}

fn ci_block(seed: u64, bound: i64) -> Result<(Vec<ProjPoint>, ProjPoint), ConfigError> {
    for attempt in 0..MAX_DRAWS as u64 {
        let eight = random_general(2, 8, derive_seed(seed, attempt), bound)?;
        match ninth_base_point(&eight) {
            Ok(q) => return Ok((eight, q)),
            Err(ConfigError::NotGeneralPosition(_)) | Err(ConfigError::ChartFailure) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(ConfigError::Exhausted)
}

/// Dimension of the family inside `(Pⁿ)^(r)` by a parameter count: a curve of
/// degree `e` moves in `C(e+2,2) − 1` dimensions and each point on it adds
/// one; complete intersections of two cubics contribute 16; general points
/// contribute `n` each.
pub fn stratum_dimension(desc: &FamilyDescriptor) -> Result<usize, ConfigError> {
    desc.validate()?;
    let mut dim = 0;
    for c in &desc.constraints {
        match *c {
            Constraint::OnCurve { u, degree } => {
                let curves = binomial(degree as u64 + 2, 2) as usize - 1;
                if u < curves {
                    // Any u points lie on such a curve; the count would overshoot.
                    return Err(ConfigError::UnsupportedFamily(format!(
                        "{c}: fewer than {curves} points is not a constraint"
                    )));
                }
                dim += curves + u;
            }
            Constraint::CompleteIntersectionCubics => dim += 16,
        }
    }
    Ok(dim + desc.n * desc.general_count())
}

pub fn codimension(desc: &FamilyDescriptor) -> Result<usize, ConfigError> {
    let dim = stratum_dimension(desc)?;
    Ok(desc.n * desc.r - dim)
}

/// Dimension counts for node sets of irreducible nodal plane curves. These
/// rest on moduli arguments that cannot be checked here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodalFamily {
    pub d: u32,
    pub r: usize,
    pub dim: usize,
    pub description: String,
}

impl NodalFamily {
    pub fn codimension(&self) -> usize {
        2 * self.r - self.dim
    }
}

pub fn nodal_family(d: u32) -> Option<NodalFamily> {
    let (r, dim, what) = match d {
        6 => (9, 17, "nodes of irreducible sextics of genus 1"),
        7 => (12, 23, "nodes of irreducible septics of genus 3"),
        8 => (15, 29, "nodes of irreducible octics of genus 6"),
        d if d > 8 && d % 3 != 0 => {
            let d = d as usize;
            let r = (d * d + 3 * d + 2) / 6;
            // (d² − 25)/3 + d + 8, exact since d² ≡ 1 (mod 3)
            let dim = (d * d - 25) / 3 + d + 8;
            (r, dim, "nodes of plane curves with a unique g²_d (expected count)")
        }
        _ => return None,
    };
    Some(NodalFamily {
        d,
        r,
        dim,
        description: what.into(),
    })
}

/// One line of the strata table for a degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumRow {
    pub r: usize,
    pub family: String,
    pub dimension: usize,
    pub codimension: usize,
    /// Membership of one generated sample (None for metadata rows).
    pub spot_member: Option<bool>,
    /// The Terracini locus in this cell is empty.
    pub locus_empty: bool,
    pub cc3_applies: Option<bool>,
    /// False for dimension counts that were not verified by computation.
    pub verified: bool,
}

/// Families tabulated for `(P², O(d))`.
pub fn named_strata(n: usize, d: u32) -> Result<Vec<(FamilyDescriptor, bool)>, ConfigError> {
    use Constraint::*;
    let line = |u| OnCurve { u, degree: 1 };
    let conic = |u| OnCurve { u, degree: 2 };
    if n != 2 {
        return Err(ConfigError::UnsupportedCell { n, d });
    }
    // (family, locus is empty for this r)
    let rows = match d {
        3 => vec![
            (FamilyDescriptor::general(2, 2), true),
            (FamilyDescriptor::with(2, 3, &[line(3)]), false),
        ],
        4 => vec![
            (FamilyDescriptor::general(2, 2), true),
            (FamilyDescriptor::with(2, 3, &[line(3)]), false),
            (FamilyDescriptor::with(2, 4, &[line(3)]), false),
            (FamilyDescriptor::general(2, 5), false),
        ],
        5 => vec![
            (FamilyDescriptor::with(2, 3, &[line(3)]), true),
            (FamilyDescriptor::with(2, 4, &[line(4)]), false),
            (FamilyDescriptor::with(2, 5, &[line(4)]), false),
            (FamilyDescriptor::with(2, 6, &[conic(6)]), false),
            (FamilyDescriptor::with(2, 7, &[conic(6)]), false),
        ],
        6 => vec![(FamilyDescriptor::with(2, 9, &[CompleteIntersectionCubics]), false)],
        7 | 8 => Vec::new(),
        d if d > 8 && d % 3 != 0 => Vec::new(),
        _ => return Err(ConfigError::UnsupportedCell { n, d }),
    };
    Ok(rows)
}

/// The strata table with one membership spot check per computable row.
pub fn strata_table(n: usize, d: u32, seed: u64, bound: i64) -> Result<Vec<StratumRow>, ConfigError> {
    let mut out = Vec::new();
    for (i, (desc, empty)) in named_strata(n, d)?.into_iter().enumerate() {
        let sample = with_constrained_subset(&desc, derive_seed(seed, i as u64), bound)?;
        let verdict = classify(&sample.points, n, d, &ClassifyOptions::default())
            .map_err(|e| ConfigError::Criterion(format!("{e}")))?;
        let dim = stratum_dimension(&desc)?;
        out.push(StratumRow {
            r: desc.r,
            family: format!("{desc}"),
            dimension: dim,
            codimension: n * desc.r - dim,
            spot_member: Some(verdict.member),
            locus_empty: empty,
            cc3_applies: cc3_applies(n, d, desc.r),
            verified: true,
        });
    }
    if let Some(fam) = nodal_family(d) {
        out.push(StratumRow {
            r: fam.r,
            family: fam.description.clone(),
            dimension: fam.dim,
            codimension: fam.codimension(),
            spot_member: None,
            locus_empty: false,
            cc3_applies: cc3_applies(n, d, fam.r),
            verified: false,
        });
    }
    Ok(out)
}

fn cc3_applies(n: usize, d: u32, r: usize) -> Option<bool> {
    cc3_bound(n, d, r).ok().map(|b| b.applies)
}

/// `h⁰(I_S(e))` for the reduced points; handy for genericity checks.
pub fn forms_through_count(n: usize, points: &[ProjPoint], e: u32) -> Result<usize, ConfigError> {
    Ok(cohomology(&SchemeSpec::reduced(n, points)?, e)?.h0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terracini::is_member;

    #[test]
    fn random_general_is_deterministic() {
        let a = random_general(2, 9, 42, 1000).unwrap();
        let b = random_general(2, 9, 42, 1000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 9);
        assert!(a.iter().all(|p| p.coords()[2] == int(1) || p.coords()[0] == int(1)));
        assert_ne!(a, random_general(2, 9, 43, 1000).unwrap());
        assert!(random_general(2, 3, 0, 1).is_err());
        // 5x5 grid has only 25 affine points.
        assert_eq!(random_general(1, 6, 0, 2), Err(ConfigError::Exhausted));
    }

    #[test]
    fn general_nine_points_sextic() {
        let pts = random_general(2, 9, 7, 1000).unwrap();
        let rep = cohomology(&SchemeSpec::doubled(2, &pts).unwrap(), 6).unwrap();
        assert_eq!(rep.h0, 1);
        let five = random_general(2, 5, 7, 1000).unwrap();
        assert!(is_member(&five, 2, 4).unwrap().member);
    }

    #[test]
    fn rational_curves() {
        let line = on_rational_curve(1, 4, 1).unwrap();
        assert!(is_member(&line.points, 2, 5).unwrap().member);
        let conic = on_rational_curve(2, 6, 2).unwrap();
        assert!(forms_through_count(2, &conic.points, 2).unwrap() > 0);
        assert!(cohomology(&SchemeSpec::reduced(2, &conic.points).unwrap(), 2).unwrap().h1 > 0);
        assert!(is_member(&conic.points, 2, 5).unwrap().member);
        let five = on_rational_curve(2, 5, 3).unwrap();
        assert!(!is_member(&five.points, 2, 5).unwrap().member);
        let cubic = on_rational_curve(3, 7, 4).unwrap();
        assert!(cubic.singular_model);
        for s in [&line, &conic, &five, &cubic] {
            let f = s.form();
            assert!(s.points.iter().all(|p| f.eval(p.coords()).is_zero()));
        }
        assert_eq!(on_rational_curve(2, 6, 2).unwrap(), conic);
    }

    #[test]
    fn ninth_point_lies_on_the_pencil() {
        for seed in 0..4 {
            let eight = random_general(2, 8, seed, 50).unwrap();
            let q = ninth_base_point(&eight).unwrap();
            let (f, g) = cubic_pencil(&eight).unwrap();
            assert!(f.eval(q.coords()).is_zero() && g.eval(q.coords()).is_zero());
            assert!(!eight.contains(&q));
            let mut nine = eight.clone();
            nine.push(q.clone());
            let v = is_member(&nine, 2, 6).unwrap();
            assert!(v.member && v.defect.unwrap() >= 2);
            let mut rev = eight.clone();
            rev.reverse();
            rev.swap(0, 3);
            assert_eq!(ninth_base_point(&rev).unwrap(), q);
        }
    }

    #[test]
    fn ninth_point_with_chart_change() {
        // Points (1:t:*) share projections from e₂ pairwise only if t repeats;
        // put two points on a line through e₂ to force the next chart.
        let mut eight = random_general(2, 8, 99, 30).unwrap();
        let c = eight[0].coords().to_vec();
        eight[1] = ProjPoint::new(vec![c[0].clone(), c[1].clone(), &c[2] + int(5)]).unwrap();
        if let Ok(q) = ninth_base_point(&eight) {
            let (f, g) = cubic_pencil(&eight).unwrap();
            assert!(f.eval(q.coords()).is_zero() && g.eval(q.coords()).is_zero());
        }
    }

    #[test]
    fn ninth_point_special_positions() {
        // Four aligned points among eight: the cubic space is still a pencil
        // containing the line times conics only if... decided by dimension.
        let mut eight: Vec<ProjPoint> = (0..4).map(|t| ProjPoint::from_ints(&[1, t, 0]).unwrap()).collect();
        eight.extend(random_general(2, 4, 5, 40).unwrap());
        let dim = forms_through_count(2, &eight, 3).unwrap();
        match ninth_base_point(&eight) {
            Ok(q) => {
                assert_eq!(dim, 2);
                let (f, g) = cubic_pencil(&eight).unwrap();
                assert!(f.eval(q.coords()).is_zero() && g.eval(q.coords()).is_zero());
            }
            Err(ConfigError::NotGeneralPosition(k)) => assert!(k != 2 || dim == 2),
            Err(e) => panic!("unexpected {e}"),
        }
        // Eight points on a conic: cubics through them = conic × lines + ..., dim 3.
        let conic = on_rational_curve(2, 8, 6).unwrap();
        assert_eq!(ninth_base_point(&conic.points), Err(ConfigError::NotGeneralPosition(3)));
    }

    #[test]
    fn family_samples() {
        use Constraint::*;
        let d = FamilyDescriptor::with(2, 7, &[OnCurve { u: 6, degree: 2 }]);
        let s = with_constrained_subset(&d, 5, 1000).unwrap();
        assert!(s.satisfies_constraints());
        assert!(is_member(&s.points, 2, 5).unwrap().member);
        assert_eq!(with_constrained_subset(&d, 5, 1000).unwrap(), s);

        let g = with_constrained_subset(&FamilyDescriptor::general(2, 7), 5, 1000).unwrap();
        assert!(!is_member(&g.points, 2, 5).unwrap().member);

        let t = with_constrained_subset(&FamilyDescriptor::with(2, 4, &[OnCurve { u: 3, degree: 1 }]), 8, 1000).unwrap();
        assert!(is_member(&t.points, 2, 4).unwrap().member);

        let ci = with_constrained_subset(&FamilyDescriptor::with(2, 9, &[CompleteIntersectionCubics]), 1, 100).unwrap();
        assert!(ci.satisfies_constraints());
        assert_eq!(ci.blocks[0].equations.len(), 2);

        let bad = FamilyDescriptor::with(2, 3, &[OnCurve { u: 4, degree: 1 }]);
        assert!(matches!(with_constrained_subset(&bad, 0, 10), Err(ConfigError::UnsupportedFamily(_))));
    }

    #[test]
    fn stratum_dimensions() {
        use Constraint::*;
        let conic6 = FamilyDescriptor::with(2, 6, &[OnCurve { u: 6, degree: 2 }]);
        assert_eq!(stratum_dimension(&conic6).unwrap(), 11);
        assert_eq!(codimension(&conic6).unwrap(), 1);
        let line4 = FamilyDescriptor::with(2, 4, &[OnCurve { u: 4, degree: 1 }]);
        assert_eq!(stratum_dimension(&line4).unwrap(), 6);
        assert_eq!(codimension(&line4).unwrap(), 2);
        let ci = FamilyDescriptor::with(2, 9, &[CompleteIntersectionCubics]);
        assert_eq!(stratum_dimension(&ci).unwrap(), 16);
        assert_eq!(codimension(&ci).unwrap(), 2);
        for r in 1..10 {
            assert_eq!(stratum_dimension(&FamilyDescriptor::general(2, r)).unwrap(), 2 * r);
        }
        let loose = FamilyDescriptor::with(2, 4, &[OnCurve { u: 4, degree: 2 }]);
        assert!(matches!(stratum_dimension(&loose), Err(ConfigError::UnsupportedFamily(_))));
        let over = FamilyDescriptor::with(2, 8, &[CompleteIntersectionCubics]);
        assert!(stratum_dimension(&over).is_err());
    }

    #[test]
    fn nodal_metadata() {
        assert_eq!(nodal_family(6).unwrap().codimension(), 1);
        assert_eq!(nodal_family(7).unwrap().dim, 23);
        assert_eq!(nodal_family(8).unwrap().dim, 29);
        for d in [10, 11, 13, 14] {
            assert_eq!(nodal_family(d).unwrap().codimension(), 1, "d={d}");
        }
        assert!(nodal_family(9).is_none());
    }

    #[test]
    fn quintic_strata() {
        let rows = strata_table(2, 5, 1, 1000).unwrap();
        let codims: Vec<(usize, usize, Option<bool>, bool)> =
            rows.iter().map(|r| (r.r, r.codimension, r.spot_member, r.locus_empty)).collect();
        assert_eq!(
            codims,
            vec![
                (3, 1, Some(false), true),
                (4, 2, Some(true), false),
                (5, 2, Some(true), false),
                (6, 1, Some(true), false),
                (7, 1, Some(true), false)
            ]
        );
        assert!(strata_table(2, 9, 0, 10).is_err());
        assert!(strata_table(3, 5, 0, 10).is_err());
    }
}
