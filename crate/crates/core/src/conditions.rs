//! Zero-dimensional schemes of reduced and double points in `Pⁿ` and the
//! linear conditions they impose on forms of degree `d`.
//!
//! For a scheme `Z` the report carries both sides of the bookkeeping
//! `ℓ(Z) − h⁰(O(d)) + h⁰(I_Z(d)) = h¹(I_Z(d))`, using `h¹(O_{Pⁿ}(d)) = 0`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::linalg::{int, rank, Mat, Scalar};
use crate::polyspace::{dim_forms, eval_row, partial_rows, MonomialBasis, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConditionsError {
    #[error("all coordinates of the point are zero")]
    ZeroPoint,
    #[error("degree 0 is not supported")]
    DegreeZero,
    #[error("point {index} has {got} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("point {first} and point {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("ambient dimension must be at least 1")]
    BadAmbient,
}

impl From<PolyError> for ConditionsError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::DegreeZero => ConditionsError::DegreeZero,
            PolyError::ZeroPoint => ConditionsError::ZeroPoint,
            PolyError::DimensionMismatch { expected, got } => ConditionsError::DimensionMismatch {
                index: 0,
                expected,
                got,
            },
            other => unreachable!("unexpected polynomial error: {other}"),
        }
    }
}

/// A point of `Pⁿ`, stored with its first nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
}

impl ProjPoint {
    pub fn new(mut coords: Vec<Scalar>) -> Result<Self, ConditionsError> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(ConditionsError::ZeroPoint)?;
        if !lead.is_one() {
            for c in coords.iter_mut() {
                *c /= &lead;
            }
        }
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, ConditionsError> {
        ProjPoint::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Ambient projective dimension `n`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Image under the linear map `g` (an invertible `(n+1)×(n+1)` matrix).
    pub fn transform(&self, g: &Mat) -> Result<ProjPoint, ConditionsError> {
        ProjPoint::new(g.mul_vec(&self.coords))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointKind {
    Reduced,
    Double,
}

/// `Z = S′ ∪ 2S″`: distinct points, each either reduced or doubled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeSpec {
    n: usize,
    items: Vec<(ProjPoint, PointKind)>,
}

/// Rejects points of the wrong dimension and repeated points.
pub fn check_points(n: usize, points: &[&ProjPoint]) -> Result<(), ConditionsError> {
    if n == 0 {
        return Err(ConditionsError::BadAmbient);
    }
    for (i, p) in points.iter().enumerate() {
        if p.dim() != n {
            return Err(ConditionsError::DimensionMismatch {
                index: i,
                expected: n + 1,
                got: p.dim() + 1,
            });
        }
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(points[b]));
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            let (first, second) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(ConditionsError::DuplicatePoint { first, second });
        }
    }
    Ok(())
}

impl SchemeSpec {
    pub fn new(n: usize, items: Vec<(ProjPoint, PointKind)>) -> Result<Self, ConditionsError> {
        let pts: Vec<&ProjPoint> = items.iter().map(|(p, _)| p).collect();
        check_points(n, &pts)?;
        Ok(SchemeSpec { n, items })
    }

    /// The reduced scheme `S`.
    pub fn reduced(n: usize, points: &[ProjPoint]) -> Result<Self, ConditionsError> {
        Self::uniform(n, points, PointKind::Reduced)
    }

    /// The double-point scheme `2S`.
    pub fn doubled(n: usize, points: &[ProjPoint]) -> Result<Self, ConditionsError> {
        Self::uniform(n, points, PointKind::Double)
    }

    /// `S ∪ 2p` where `p = points[index]`.
    pub fn with_double_at(n: usize, points: &[ProjPoint], index: usize) -> Result<Self, ConditionsError> {
        let items = points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let kind = if i == index {
                    PointKind::Double
                } else {
                    PointKind::Reduced
                };
                (p.clone(), kind)
            })
            .collect();
        Self::new(n, items)
    }

    fn uniform(n: usize, points: &[ProjPoint], kind: PointKind) -> Result<Self, ConditionsError> {
        Self::new(n, points.iter().map(|p| (p.clone(), kind)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn items(&self) -> &[(ProjPoint, PointKind)] {
        &self.items
    }

    pub fn points(&self) -> impl Iterator<Item = &ProjPoint> {
        self.items.iter().map(|(p, _)| p)
    }

    /// `ℓ(Z) = #reduced + (n+1)·#double`.
    pub fn length(&self) -> usize {
        self.items
            .iter()
            .map(|(_, k)| match k {
                PointKind::Reduced => 1,
                PointKind::Double => self.n + 1,
            })
            .sum()
    }

    /// Applies `g` to every point.
    pub fn transform(&self, g: &Mat) -> Result<SchemeSpec, ConditionsError> {
        let items = self
            .items
            .iter()
            .map(|(p, k)| Ok((p.transform(g)?, *k)))
            .collect::<Result<Vec<_>, ConditionsError>>()?;
        SchemeSpec::new(self.n, items)
    }
}

/// Cohomology of `I_Z(d)` computed from the rank of the conditions matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearSystemReport {
    pub n: usize,
    pub d: u32,
    pub length: usize,
    pub rank: usize,
    pub h0: usize,
    pub h1: usize,
    pub expected_h0: usize,
    pub defect: usize,
}

impl LinearSystemReport {
    pub fn from_rank(n: usize, d: u32, length: usize, rank: usize) -> Self {
        let forms = dim_forms(n, d);
        assert!(rank <= forms.min(length), "rank exceeds matrix size");
        LinearSystemReport {
            n,
            d,
            length,
            rank,
            h0: forms - rank,
            h1: length - rank,
            expected_h0: forms.saturating_sub(length),
            defect: length - rank,
        }
    }

    pub fn independent(&self) -> bool {
        self.defect == 0
    }
}

/// One evaluation row per reduced point and `n+1` derivative rows per double
/// point, over the deg-lex monomial basis of degree `d`.
pub fn conditions_matrix(z: &SchemeSpec, d: u32) -> Result<Mat, ConditionsError> {
    if d == 0 {
        return Err(ConditionsError::DegreeZero);
    }
    let basis = MonomialBasis::new(z.n, d);
    let mut rows = Vec::with_capacity(z.length());
    for (p, kind) in &z.items {
        match kind {
            PointKind::Reduced => rows.push(eval_row(&basis, p.coords())?),
            PointKind::Double => rows.extend(partial_rows(&basis, p.coords())?),
        }
    }
    Ok(Mat::from_rows(rows, basis.len()).expect("rows share the basis length"))
}

pub fn cohomology(z: &SchemeSpec, d: u32) -> Result<LinearSystemReport, ConditionsError> {
    let m = conditions_matrix(z, d)?;
    Ok(LinearSystemReport::from_rank(z.n, d, z.length(), rank(&m)))
}

pub fn imposes_independent(z: &SchemeSpec, d: u32) -> Result<bool, ConditionsError> {
    Ok(cohomology(z, d)?.independent())
}

/// `h¹(I_S(d))` for the reduced scheme on `points`.
pub fn h1_reduced(n: usize, points: &[ProjPoint], d: u32) -> Result<usize, ConditionsError> {
    Ok(cohomology(&SchemeSpec::reduced(n, points)?, d)?.h1)
}

/// Forms of degree `d` through every point, as coefficient vectors.
pub fn forms_through(n: usize, points: &[ProjPoint], d: u32) -> Result<Vec<Vec<Scalar>>, ConditionsError> {
    let m = conditions_matrix(&SchemeSpec::reduced(n, points)?, d)?;
    Ok(crate::linalg::kernel_basis(&m))
}

/// Whether the points lie on a common hyperplane.
pub fn lie_on_hyperplane(n: usize, points: &[ProjPoint]) -> Result<bool, ConditionsError> {
    let rows: Vec<Vec<Scalar>> = points.iter().map(|p| p.coords().to_vec()).collect();
    let m = Mat::from_rows(rows, n + 1).expect("uniform point dimension");
    Ok(rank(&m) <= n)
}
