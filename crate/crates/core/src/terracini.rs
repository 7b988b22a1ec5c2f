//! Terracini membership for `(Pⁿ, O(d))` and one-sided criteria that decide
//! it without a full rank computation.
//!
//! `S` (of cardinality `r`) is a member when `h⁰(I_{2S}(d)) > h⁰(O(d)) − (n+1)r`,
//! i.e. when the double points fail to impose independent conditions. Every
//! criterion returns either a certificate or nothing; nothing never means
//! the opposite verdict.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::conditions::{
    check_points, cohomology, h1_reduced, lie_on_hyperplane, ConditionsError, ProjPoint,
    SchemeSpec,
};
use crate::linalg::{dot, kernel_basis, Mat, Scalar};
use crate::polyspace::{binomial, dim_forms};

pub const DEFAULT_SUBSET_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TerraciniError {
    #[error(transparent)]
    Conditions(#[from] ConditionsError),
    #[error("the point set is empty")]
    EmptySet,
    #[error("degree {got} is too small, need at least {min}")]
    DegreeTooSmall { min: u32, got: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("subset search needs {count} subsets, cap is {cap}")]
    SubsetSearchTooLarge { count: u64, cap: u64 },
    #[error("augmentation point already belongs to the base set")]
    PointInBase,
    #[error("criterion {criterion} disagrees with the direct rank computation")]
    Inconsistent { criterion: &'static str },
}

/// How a verdict was reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Rank of the full conditions matrix of `2S`.
    Direct,
    /// `(n+1)r > h⁰(O(d))`: every set of this size is a member.
    Saturated,
    /// The cell is on the Alexander–Hirschowitz list of defective cases.
    AhTable,
    /// `u` points (indices in `witness`) lie on a hypersurface of degree
    /// `d − q` and `C(q+n, n) + n·u > C(d+n, n)`.
    Split {
        q: u32,
        u: usize,
        witness: Vec<usize>,
        lhs: u64,
        rhs: u64,
    },
    /// `h¹(I_S(q)) = 0` with `2q < d`.
    Meta { q: u32 },
    /// `S` satisfies † for `O(a)` and imposes independent conditions on `O(b)`.
    Additive { a: u32, b: u32 },
    /// `2·base` imposes independent conditions in degree `d − 2`; `added` is
    /// the index of the extra point.
    Augment { base: Vec<usize>, added: usize },
}

impl Evidence {
    /// Short identifier used in reports, e.g. `split(4,4)` or `meta(2)`.
    pub fn label(&self) -> String {
        use alloc::format;
        match self {
            Evidence::Direct => "direct".into(),
            Evidence::Saturated => "saturated".into(),
            Evidence::AhTable => "ah-table".into(),
            Evidence::Split { q, u, .. } => format!("split({q},{u})"),
            Evidence::Meta { q } => format!("meta({q})"),
            Evidence::Additive { a, b } => format!("i1({a},{b})"),
            Evidence::Augment { added, .. } => format!("augment({added})"),
        }
    }

    pub fn criterion(&self) -> &'static str {
        match self {
            Evidence::Direct => "direct",
            Evidence::Saturated => "saturated",
            Evidence::AhTable => "ah_defective",
            Evidence::Split { .. } => "criterion_45",
            Evidence::Meta { .. } => "criterion_meta",
            Evidence::Additive { .. } => "criterion_i1",
            Evidence::Augment { .. } => "criterion_a2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Certificate(Evidence),
    Silent,
    Skipped(&'static str),
}

/// One step of the criteria cascade in [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailEntry {
    pub criterion: &'static str,
    pub params: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerraciniVerdict {
    pub member: bool,
    /// `(n+1)r − rank`; `None` when a criterion decided without the full rank.
    pub defect: Option<usize>,
    pub evidence: Evidence,
    pub trail: Vec<TrailEntry>,
}

fn check_set(points: &[ProjPoint], n: usize) -> Result<(), TerraciniError> {
    if points.is_empty() {
        return Err(TerraciniError::EmptySet);
    }
    let refs: Vec<&ProjPoint> = points.iter().collect();
    check_points(n, &refs)?;
    Ok(())
}

/// Decides membership from the rank of the conditions matrix of `2S`.
pub fn is_member(points: &[ProjPoint], n: usize, d: u32) -> Result<TerraciniVerdict, TerraciniError> {
    check_set(points, n)?;
    let report = cohomology(&SchemeSpec::doubled(n, points)?, d)?;
    Ok(TerraciniVerdict {
        member: report.defect > 0,
        defect: Some(report.defect),
        evidence: Evidence::Direct,
        trail: Vec::new(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaggerEntry {
    pub point: ProjPoint,
    /// `h¹(I_{S∪2p}(d))`.
    pub h1: usize,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaggerReport {
    pub entries: Vec<DaggerEntry>,
    pub overall: bool,
}

/// Checks that `S ∪ 2p` imposes independent conditions on `O(d)` for every
/// `p ∈ S`.
pub fn dagger(points: &[ProjPoint], n: usize, d: u32) -> Result<DaggerReport, TerraciniError> {
    check_set(points, n)?;
    let mut entries = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        let z = SchemeSpec::with_double_at(n, points, i)?;
        let h1 = cohomology(&z, d)?.h1;
        entries.push(DaggerEntry {
            point: p.clone(),
            h1,
            passes: h1 == 0,
        });
    }
    let overall = entries.iter().all(|e| e.passes);
    Ok(DaggerReport { entries, overall })
}

fn dagger_holds(points: &[ProjPoint], n: usize, d: u32) -> Result<bool, TerraciniError> {
    // Short-circuit on the first failing point.
    for i in 0..points.len() {
        let z = SchemeSpec::with_double_at(n, points, i)?;
        if cohomology(&z, d)?.h1 > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Non-membership in degree `a + b` when `(Pⁿ, O(a), S)` satisfies † and `S`
/// imposes independent conditions on `O(b)`.
pub fn criterion_i1(points: &[ProjPoint], n: usize, a: u32, b: u32) -> Result<Option<Evidence>, TerraciniError> {
    if a == 0 || b == 0 {
        return Err(TerraciniError::InvalidParameter("criterion_i1 needs a ≥ 1 and b ≥ 1"));
    }
    check_set(points, n)?;
    if h1_reduced(n, points, b)? != 0 {
        return Ok(None);
    }
    if !dagger_holds(points, n, a)? {
        return Ok(None);
    }
    Ok(Some(Evidence::Additive { a, b }))
}

/// A hyperplane through `p` avoiding every point of `others`, as a linear
/// form. Always exists over the rationals for distinct points.
pub fn separating_hyperplane(p: &ProjPoint, others: &[ProjPoint]) -> Vec<Scalar> {
    let n = p.dim();
    let row = Mat::from_rows(vec![p.coords().to_vec()], n + 1).expect("one row");
    let perp = kernel_basis(&row);
    // h(c) = Σ cⁱ·perp[i]; each other point rules out at most n − 1 values.
    let tries = (n.max(1) - 1) * others.len() + 1;
    for c in 0..=tries as i64 {
        let mut h = vec![Scalar::zero(); n + 1];
        let mut weight = Scalar::from_integer(1.into());
        let cs = Scalar::from_integer(c.into());
        for v in &perp {
            for (hj, vj) in h.iter_mut().zip(v) {
                *hj += &weight * vj;
            }
            weight *= &cs;
        }
        if others.iter().all(|s| !dot(&h, s.coords()).is_zero()) {
            return h;
        }
    }
    unreachable!("a separating hyperplane always exists for distinct points")
}

/// Non-membership in degree `d` when `h¹(I_S(q)) = 0` for `2q < d`.
///
/// Hyperplanes through each point missing the others exist, so `S`
/// satisfies † for `O(q+1)`, hence for `O(d−q)`, and the additive criterion
/// applies with `O(d−q) ⊗ O(q)`.
pub fn criterion_meta(points: &[ProjPoint], n: usize, q: u32, d: u32) -> Result<Option<Evidence>, TerraciniError> {
    if q == 0 || 2 * q >= d {
        return Err(TerraciniError::InvalidParameter("criterion_meta needs 1 ≤ q and 2q < d"));
    }
    check_set(points, n)?;
    if h1_reduced(n, points, q)? != 0 {
        return Ok(None);
    }
    if points.len() >= 2 {
        for (i, p) in points.iter().enumerate() {
            let others: Vec<ProjPoint> = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, s)| s.clone())
                .collect();
            let h = separating_hyperplane(p, &others);
            debug_assert!(dot(&h, p.coords()).is_zero());
        }
    }
    Ok(Some(Evidence::Meta { q }))
}

/// Smallest `u` with `C(q+n, n) + n·u > C(d+n, n)`.
pub fn min_split_size(n: usize, q: u32, d: u32) -> u64 {
    let big = binomial(d as u64 + n as u64, n as u64);
    let small = binomial(q as u64 + n as u64, n as u64);
    (big - small) / n as u64 + 1
}

fn for_each_subset(r: usize, u: usize, mut f: impl FnMut(&[usize]) -> Result<bool, TerraciniError>) -> Result<bool, TerraciniError> {
    let mut idx: Vec<usize> = (0..u).collect();
    loop {
        if f(&idx)? {
            return Ok(true);
        }
        // Next combination in lexicographic order.
        let mut i = u;
        while i > 0 && idx[i - 1] == r - u + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(false);
        }
        idx[i - 1] += 1;
        for j in i..u {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Membership certificate from `u` points of `S` on a hypersurface of degree
/// `d − q`. Scans `q = 1, …, d−1`; for each `q` only the smallest admissible
/// `u` needs testing, since subsets of points on a hypersurface stay on it.
pub fn criterion_45(points: &[ProjPoint], n: usize, d: u32, cap: u64) -> Result<Option<Evidence>, TerraciniError> {
    if d < 2 {
        return Err(TerraciniError::DegreeTooSmall { min: 2, got: d });
    }
    check_set(points, n)?;
    let r = points.len();
    let rhs = binomial(d as u64 + n as u64, n as u64);
    for q in 1..d {
        let u = min_split_size(n, q, d);
        if u > r as u64 {
            continue;
        }
        let u = u as usize;
        let lhs = binomial(q as u64 + n as u64, n as u64) + (n * u) as u64;
        let e = d - q;
        if u < dim_forms(n, e) {
            // Any u points lie on a hypersurface of degree e.
            return Ok(Some(Evidence::Split {
                q,
                u,
                witness: (0..u).collect(),
                lhs,
                rhs,
            }));
        }
        let count = binomial(r as u64, u as u64);
        if count > cap {
            return Err(TerraciniError::SubsetSearchTooLarge { count, cap });
        }
        let mut found = None;
        for_each_subset(r, u, |idx| {
            let sub: Vec<ProjPoint> = idx.iter().map(|&i| points[i].clone()).collect();
            let on_hyp = if e == 1 {
                lie_on_hyperplane(n, &sub)?
            } else {
                cohomology(&SchemeSpec::reduced(n, &sub)?, e)?.h0 > 0
            };
            if on_hyp {
                found = Some(idx.to_vec());
            }
            Ok(on_hyp)
        })?;
        if let Some(witness) = found {
            return Ok(Some(Evidence::Split {
                q,
                u,
                witness,
                lhs,
                rhs,
            }));
        }
    }
    Ok(None)
}

/// Non-membership of `base ∪ {added}` in degree `d` when `2·base` imposes
/// independent conditions on `O(d−2)`.
pub fn criterion_a2(base: &[ProjPoint], added: &ProjPoint, n: usize, d: u32) -> Result<Option<Evidence>, TerraciniError> {
    if d < 3 {
        return Err(TerraciniError::DegreeTooSmall { min: 3, got: d });
    }
    check_set(base, n)?;
    if base.contains(added) {
        return Err(TerraciniError::PointInBase);
    }
    if added.dim() != n {
        return Err(ConditionsError::DimensionMismatch {
            index: base.len(),
            expected: n + 1,
            got: added.dim() + 1,
        }
        .into());
    }
    let report = cohomology(&SchemeSpec::doubled(n, base)?, d - 2)?;
    if report.h1 != 0 {
        return Ok(None);
    }
    Ok(Some(Evidence::Augment {
        base: (0..base.len()).collect(),
        added: base.len(),
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionBound {
    pub applies: bool,
    /// `rn − n`; meaningful only when `applies`.
    pub max_dim: usize,
}

/// Dimension bound for small `r`: if `r ≤ C(n + ⌈d/2⌉ − 1, n) − 1` the
/// Terracini locus has dimension at most `rn − n`.
pub fn cc3_bound(n: usize, d: u32, r: usize) -> Result<DimensionBound, TerraciniError> {
    if n < 2 || d < 3 || r < 1 {
        return Err(TerraciniError::InvalidParameter("cc3_bound needs n ≥ 2, d ≥ 3, r ≥ 1"));
    }
    let half_up = d.div_ceil(2);
    let limit = binomial(n as u64 + half_up as u64 - 1, n as u64) - 1;
    Ok(DimensionBound {
        applies: r as u64 <= limit,
        max_dim: r * n - n,
    })
}

/// Cells `(n, d, r)` where `r` general double points fail to impose
/// independent conditions on forms of degree `d`.
pub fn ah_defective(n: usize, d: u32, r: usize) -> bool {
    matches!(
        (d, n, r),
        (2, n, r) if n > 1 && r > 1
    ) || matches!((d, n, r), (3, 4, 7) | (4, 2, 5) | (4, 3, 9) | (4, 4, 14))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Consult the defective-cell table. Since `h⁰(I_{2S}(d))` is upper
    /// semicontinuous, a dense Terracini locus is the whole of `(Pⁿ)^(r)`.
    pub use_ah_table: bool,
    /// Try [`criterion_a2`] with the point at this index removed.
    pub augment_index: Option<usize>,
    /// Try [`criterion_a2`] for every choice of removed point.
    pub search_augment: bool,
    pub subset_cap: u64,
    /// Also run the direct rank and check it against the deciding criterion.
    pub confirm: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            use_ah_table: true,
            augment_index: None,
            search_augment: false,
            subset_cap: DEFAULT_SUBSET_CAP,
            confirm: false,
        }
    }
}

struct Cascade {
    trail: Vec<TrailEntry>,
}

impl Cascade {
    fn record(&mut self, criterion: &'static str, params: String, res: Result<Option<Evidence>, TerraciniError>) -> Result<Option<Evidence>, TerraciniError> {
        let outcome = match &res {
            Ok(Some(ev)) => Outcome::Certificate(ev.clone()),
            Ok(None) => Outcome::Silent,
            Err(TerraciniError::SubsetSearchTooLarge { .. }) => Outcome::Skipped("subset search cap"),
            Err(_) => Outcome::Skipped("error"),
        };
        self.trail.push(TrailEntry {
            criterion,
            params,
            outcome,
        });
        match res {
            Err(TerraciniError::SubsetSearchTooLarge { .. }) => Ok(None),
            other => other,
        }
    }
}

/// Runs the cheap criteria in a fixed order (inclusion before exclusion) and
/// falls back to the direct rank when all of them are silent.
pub fn classify(points: &[ProjPoint], n: usize, d: u32, opts: &ClassifyOptions) -> Result<TerraciniVerdict, TerraciniError> {
    use alloc::format;
    check_set(points, n)?;
    if d == 0 {
        return Err(ConditionsError::DegreeZero.into());
    }
    let r = points.len();
    let mut c = Cascade { trail: Vec::new() };
    let decided = 'cascade: {
        if (n + 1) * r > dim_forms(n, d) {
            let ev = Evidence::Saturated;
            c.trail.push(TrailEntry {
                criterion: "saturated",
                params: format!("(n+1)r={} > {}", (n + 1) * r, dim_forms(n, d)),
                outcome: Outcome::Certificate(ev.clone()),
            });
            break 'cascade Some((true, ev));
        }
        if opts.use_ah_table && r >= 2 && d >= 2 {
            let hit = ah_defective(n, d, r);
            c.trail.push(TrailEntry {
                criterion: "ah_defective",
                params: format!("n={n},d={d},r={r}"),
                outcome: if hit {
                    Outcome::Certificate(Evidence::AhTable)
                } else {
                    Outcome::Silent
                },
            });
            if hit {
                break 'cascade Some((true, Evidence::AhTable));
            }
        }
        if d >= 2 {
            let res = criterion_45(points, n, d, opts.subset_cap);
            if let Some(ev) = c.record("criterion_45", format!("d={d}"), res)? {
                break 'cascade Some((true, ev));
            }
        }
        let mut q = 1;
        while 2 * q < d {
            let res = criterion_meta(points, n, q, d);
            if let Some(ev) = c.record("criterion_meta", format!("q={q}"), res)? {
                break 'cascade Some((false, ev));
            }
            q += 1;
        }
        for b in 1..d {
            let a = d - b;
            // meta(b) fires whenever these would
            if 2 * b < d {
                continue;
            }
            let res = criterion_i1(points, n, a, b);
            if let Some(ev) = c.record("criterion_i1", format!("a={a},b={b}"), res)? {
                break 'cascade Some((false, ev));
            }
        }
        if d >= 3 && r >= 2 {
            let candidates: Vec<usize> = match (opts.augment_index, opts.search_augment) {
                (Some(i), _) if i < r => vec![i],
                (_, true) => (0..r).collect(),
                _ => Vec::new(),
            };
            for i in candidates {
                let base: Vec<ProjPoint> = points
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p.clone())
                    .collect();
                let res = criterion_a2(&base, &points[i], n, d).map(|o| {
                    o.map(|_| Evidence::Augment {
                        base: (0..r).filter(|&j| j != i).collect(),
                        added: i,
                    })
                });
                if let Some(ev) = c.record("criterion_a2", format!("added={i}"), res)? {
                    break 'cascade Some((false, ev));
                }
            }
        }
        None
    };

    match decided {
        Some((member, evidence)) => {
            let mut defect = None;
            if opts.confirm {
                let direct = is_member(points, n, d)?;
                if direct.member != member {
                    return Err(TerraciniError::Inconsistent {
                        criterion: evidence.criterion(),
                    });
                }
                defect = direct.defect;
            }
            Ok(TerraciniVerdict {
                member,
                defect,
                evidence,
                trail: c.trail,
            })
        }
        None => {
            let direct = is_member(points, n, d)?;
            c.trail.push(TrailEntry {
                criterion: "direct",
                params: format!("d={d}"),
                outcome: Outcome::Certificate(Evidence::Direct),
            });
            Ok(TerraciniVerdict {
                trail: c.trail,
                ..direct
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(c).unwrap()
    }

    fn on_x_axis(k: usize) -> Vec<ProjPoint> {
        (0..k as i64).map(|i| p(&[1, i, 0])).collect()
    }

    fn general(k: usize) -> Vec<ProjPoint> {
        // No three aligned, no six on a conic (see `general_points_are_general`).
        let pts = [[1, 0, 3], [1, 1, -2], [1, 2, 9], [1, -3, 5], [1, 5, 1], [1, -1, -7], [1, 4, -5], [1, 7, 2], [1, -6, 11]];
        pts[..k].iter().map(|c| p(c)).collect()
    }

    #[test]
    fn membership_examples() {
        let v = is_member(&on_x_axis(3), 2, 3).unwrap();
        assert!(v.member);
        assert_eq!(v.defect, Some(2));
        assert!(!is_member(&on_x_axis(3), 2, 5).unwrap().member);
        let mut four = on_x_axis(3);
        four.push(p(&[0, 0, 1]));
        assert!(is_member(&four, 2, 4).unwrap().member);
        assert!(!is_member(&general(3), 2, 3).unwrap().member);
        assert_eq!(is_member(&[], 2, 3), Err(TerraciniError::EmptySet));
        let dup = [p(&[1, 2, 3]), p(&[2, 4, 6])];
        assert!(matches!(
            is_member(&dup, 2, 3),
            Err(TerraciniError::Conditions(ConditionsError::DuplicatePoint { .. }))
        ));
    }

    #[test]
    fn saturation() {
        // 4 double points in P² against cubics: 12 > 10 conditions.
        let v = is_member(&general(4), 2, 3).unwrap();
        assert!(v.member);
        let c = classify(&general(4), 2, 3, &ClassifyOptions::default()).unwrap();
        assert_eq!(c.evidence, Evidence::Saturated);
    }

    #[test]
    fn dagger_examples() {
        assert!(dagger(&general(4), 2, 3).unwrap().overall);
        let rep = dagger(&on_x_axis(4), 2, 2).unwrap();
        assert!(!rep.overall);
        assert!(rep.entries.iter().all(|e| e.h1 > 0));
        assert!(dagger(&[p(&[1, 2, 3])], 2, 2).unwrap().overall);
    }

    #[test]
    fn i1_examples() {
        assert_eq!(criterion_i1(&general(4), 2, 3, 2).unwrap(), Some(Evidence::Additive { a: 3, b: 2 }));
        assert_eq!(criterion_i1(&general(6), 2, 3, 2).unwrap(), Some(Evidence::Additive { a: 3, b: 2 }));
        // Four aligned points already fail to impose independent conditions
        // on conics, so the criterion stays silent.
        assert_eq!(h1_reduced(2, &on_x_axis(4), 2).unwrap(), 1);
        let res = criterion_i1(&on_x_axis(4), 2, 3, 2).unwrap();
        assert!(is_member(&on_x_axis(4), 2, 5).unwrap().member);
        assert_eq!(res, None);
    }

    #[test]
    fn meta_examples() {
        assert_eq!(criterion_meta(&general(5), 2, 2, 5).unwrap(), Some(Evidence::Meta { q: 2 }));
        let conic: Vec<ProjPoint> = (0..6i64).map(|t| p(&[1, t, t * t])).collect();
        assert_eq!(criterion_meta(&conic, 2, 2, 5).unwrap(), None);
        assert_eq!(criterion_meta(&general(9), 2, 3, 7).unwrap(), Some(Evidence::Meta { q: 3 }));
        assert!(criterion_meta(&general(3), 2, 2, 4).is_err());
    }

    #[test]
    fn split_examples() {
        match criterion_45(&on_x_axis(4), 2, 5, DEFAULT_SUBSET_CAP).unwrap() {
            Some(Evidence::Split { q, u, lhs, rhs, witness }) => {
                assert_eq!((q, u, lhs, rhs), (4, 4, 23, 21));
                assert_eq!(witness, vec![0, 1, 2, 3]);
            }
            other => panic!("unexpected {other:?}"),
        }
        let mut seven: Vec<ProjPoint> = (0..6i64).map(|t| p(&[1, t, t * t])).collect();
        seven.insert(2, p(&[1, 3, -4]));
        match criterion_45(&seven, 2, 5, DEFAULT_SUBSET_CAP).unwrap() {
            Some(Evidence::Split { q, u, lhs, witness, .. }) => {
                assert_eq!((q, u, lhs), (3, 6, 22));
                assert!(!witness.contains(&2));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(criterion_45(&general(6), 2, 5, DEFAULT_SUBSET_CAP).unwrap(), None);
        assert!(!is_member(&general(6), 2, 5).unwrap().member);
        assert_eq!(
            criterion_45(&general(6), 2, 5, 3),
            Err(TerraciniError::SubsetSearchTooLarge { count: 15, cap: 3 })
        );
    }

    #[test]
    fn a2_examples() {
        let extra = p(&[1, 11, 13]);
        assert!(criterion_a2(&general(3), &extra, 2, 5).unwrap().is_some());
        assert_eq!(criterion_a2(&on_x_axis(3), &extra, 2, 5).unwrap(), None);
        assert_eq!(
            criterion_a2(&general(3), &extra, 2, 2),
            Err(TerraciniError::DegreeTooSmall { min: 3, got: 2 })
        );
        assert_eq!(criterion_a2(&general(3), &general(1)[0], 2, 5), Err(TerraciniError::PointInBase));
    }

    #[test]
    fn bounds_and_table() {
        assert_eq!(cc3_bound(2, 5, 4).unwrap(), DimensionBound { applies: true, max_dim: 6 });
        assert!(!cc3_bound(2, 5, 6).unwrap().applies);
        assert_eq!(cc3_bound(2, 9, 9).unwrap(), DimensionBound { applies: true, max_dim: 16 });
        assert!(cc3_bound(1, 5, 3).is_err());
        assert!(ah_defective(2, 4, 5));
        assert!(ah_defective(4, 3, 7));
        assert!(ah_defective(3, 4, 9) && ah_defective(4, 4, 14));
        assert!(ah_defective(5, 2, 2));
        assert!(!ah_defective(2, 5, 7));
        assert!(!ah_defective(1, 2, 2));
    }

    #[test]
    fn classify_examples() {
        let v = classify(&on_x_axis(4), 2, 5, &ClassifyOptions::default()).unwrap();
        assert!(v.member);
        assert_eq!(v.evidence.label(), "split(4,4)");
        let v = classify(&general(6), 2, 5, &ClassifyOptions { confirm: true, ..Default::default() }).unwrap();
        assert!(!v.member);
        assert_eq!(v.evidence, Evidence::Meta { q: 2 });
        assert_eq!(v.defect, Some(0));
        let opts = ClassifyOptions { search_augment: true, ..Default::default() };
        let v = classify(&general(7), 2, 5, &opts).unwrap();
        assert!(!v.member);
        assert_eq!(v.defect.unwrap_or(0), 0);
    }

    #[test]
    fn general_points_are_general() {
        let pts = general(9);
        for_each_subset(9, 3, |idx| {
            let sub: Vec<ProjPoint> = idx.iter().map(|&i| pts[i].clone()).collect();
            assert!(!lie_on_hyperplane(2, &sub).unwrap(), "{idx:?} aligned");
            Ok(false)
        })
        .unwrap();
        for_each_subset(9, 6, |idx| {
            let sub: Vec<ProjPoint> = idx.iter().map(|&i| pts[i].clone()).collect();
            assert_eq!(h1_reduced(2, &sub, 2).unwrap(), 0, "{idx:?} on a conic");
            Ok(false)
        })
        .unwrap();
    }

    #[test]
    fn separating_hyperplanes() {
        let pts = general(6);
        for (i, q) in pts.iter().enumerate() {
            let others: Vec<ProjPoint> = pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, s)| s.clone()).collect();
            let h = separating_hyperplane(q, &others);
            assert!(dot(&h, q.coords()).is_zero());
            assert!(others.iter().all(|s| !dot(&h, s.coords()).is_zero()));
        }
    }
}
