//! Tangent spans on Segre embeddings of products of projective spaces.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng as _;

use crate::conditions::{ConditionsError, ProjPoint};
use crate::configurations::random_invertible;
use crate::linalg::{int, rank, solve, Mat, Scalar};
use crate::rng::{derive_seed, seeded, Rng};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SegreError {
    #[error("point {point} has a zero factor {factor}")]
    ZeroFactor { point: usize, factor: usize },
    #[error("point {point} does not live on the product {expected:?}")]
    ShapeMismatch { point: usize, expected: Vec<usize> },
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("need at least {0} points")]
    TooFewPoints(usize),
}

/// A point of `P^{n_1} × ... × P^{n_k}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegrePoint {
    factors: Vec<ProjPoint>,
}

impl SegrePoint {
    pub fn new(factors: Vec<ProjPoint>) -> Self {
        assert!(!factors.is_empty(), "a Segre point needs a factor");
        SegrePoint { factors }
    }

    /// Builds from raw coordinates; a zero factor is reported by index.
    pub fn from_coords(factors: Vec<Vec<Scalar>>) -> Result<Self, SegreError> {
        if factors.is_empty() {
            return Err(SegreError::ShapeMismatch { point: 0, expected: Vec::new() });
        }
        let factors = factors
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                ProjPoint::new(c).map_err(|e| match e {
                    ConditionsError::ZeroPoint => SegreError::ZeroFactor { point: 0, factor: k },
                    _ => unreachable!("ProjPoint::new only rejects zero vectors"),
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(SegrePoint { factors })
    }

    pub fn from_ints(factors: &[&[i64]]) -> Result<Self, SegreError> {
        SegrePoint::from_coords(factors.iter().map(|f| f.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn factors(&self) -> &[ProjPoint] {
        &self.factors
    }

    /// Dimensions `n_i` of the factors.
    pub fn shape(&self) -> Vec<usize> {
        self.factors.iter().map(ProjPoint::dim).collect()
    }

    pub fn transform(&self, gs: &[Mat]) -> SegrePoint {
        SegrePoint {
            factors: self
                .factors
                .iter()
                .zip(gs)
                .map(|(p, g)| p.transform(g).expect("invertible factor map"))
                .collect(),
        }
    }
}

fn kron(vs: &[&[Scalar]]) -> Vec<Scalar> {
    let mut out = vec![Scalar::one()];
    for v in vs {
        let mut next = Vec::with_capacity(out.len() * v.len());
        for a in &out {
            for b in v.iter() {
                next.push(a * b);
            }
        }
        out = next;
    }
    out
}

/// Spanning rows of the affine cone over the tangent space at `p`: the point
/// itself and, for every factor, the tensors with that factor replaced by a
/// coordinate vector other than its pivot.
pub fn segre_tangent_rows(p: &SegrePoint) -> Vec<Vec<Scalar>> {
    let factors: Vec<&[Scalar]> = p.factors.iter().map(ProjPoint::coords).collect();
    let mut rows = vec![kron(&factors)];
    for (k, f) in factors.iter().enumerate() {
        let pivot = f.iter().position(|c| !c.is_zero()).expect("nonzero factor");
        for j in 0..f.len() {
            if j == pivot {
                continue;
            }
            let mut e = vec![Scalar::zero(); f.len()];
            e[j] = Scalar::one();
            let mut fs = factors.clone();
            fs[k] = &e;
            rows.push(kron(&fs));
        }
    }
    rows
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreVerdict {
    pub r: usize,
    /// `Π(nᵢ+1)`.
    pub ambient: usize,
    pub rank: usize,
    /// `r·(Σnᵢ + 1)`.
    pub expected: usize,
    pub member: bool,
    pub drop: usize,
}

/// Tangent matrix of the configuration, one block of rows per point.
pub fn segre_tangent_matrix(points: &[SegrePoint]) -> Result<Mat, SegreError> {
    let shape = validate(points, 1)?;
    let ambient: usize = shape.iter().map(|n| n + 1).product();
    let rows: Vec<Vec<Scalar>> = points.iter().flat_map(segre_tangent_rows).collect();
    Ok(Mat::from_rows(rows, ambient).expect("uniform rows"))
}

fn validate(points: &[SegrePoint], min: usize) -> Result<Vec<usize>, SegreError> {
    if points.len() < min {
        return Err(SegreError::TooFewPoints(min));
    }
    let shape = points[0].shape();
    for (i, p) in points.iter().enumerate() {
        if p.shape() != shape {
            return Err(SegreError::ShapeMismatch { point: i, expected: shape });
        }
        if let Some(j) = points[..i].iter().position(|q| q == p) {
            return Err(SegreError::DuplicatePoint { first: j, second: i });
        }
    }
    Ok(shape)
}

/// Decides whether the tangent spaces at the points span less than expected.
pub fn segre_terracini(points: &[SegrePoint]) -> Result<SegreVerdict, SegreError> {
    validate(points, 2)?;
    let m = segre_tangent_matrix(points)?;
    let rk = rank(&m);
    let expected = m.rows();
    let ambient = m.cols();
    Ok(SegreVerdict {
        r: points.len(),
        ambient,
        rank: rk,
        expected,
        member: rk < expected.min(ambient),
        drop: expected - rk,
    })
}

fn random_point(n: usize, rng: &mut Rng, bound: i64) -> ProjPoint {
    loop {
        let c: Vec<Scalar> = (0..=n).map(|_| int(rng.random_range(-bound..=bound))).collect();
        if let Ok(p) = ProjPoint::new(c) {
            return p;
        }
    }
}

/// Coordinates for random draws; small entries keep exact ranks cheap.
pub const SEGRE_BOUND: i64 = 9;

/// `r` random points on the product `Π P^{shape[i]}`.
pub fn random_segre_points(shape: &[usize], r: usize, seed: u64) -> Vec<SegrePoint> {
    let mut rng = seeded(seed);
    let mut out: Vec<SegrePoint> = Vec::with_capacity(r);
    while out.len() < r {
        let p = SegrePoint::new(shape.iter().map(|&n| random_point(n, &mut rng, SEGRE_BOUND)).collect());
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Which projections of a generated configuration are made equivalent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    /// All three projections are images of one set; identity maps.
    Diagonal,
    /// All three projections are random images of one set.
    AllThree,
    /// Only the first two projections are images of one set.
    FirstTwo,
}

/// Six points of `(P³)³` whose projections are images of one random set
/// `{q_i}` under random invertible maps, as selected by `kind`.
pub fn equiv_factor_config(seed: u64, kind: Equivalence) -> Vec<SegrePoint> {
    let mut rng = seeded(seed);
    let qs: Vec<ProjPoint> = loop {
        let qs: Vec<ProjPoint> = (0..6).map(|_| random_point(3, &mut rng, SEGRE_BOUND)).collect();
        if general_in_p3(&qs) {
            break qs;
        }
    };
    let maps: Vec<Mat> = match kind {
        Equivalence::Diagonal => vec![Mat::identity(4); 3],
        _ => (0..3).map(|_| random_invertible(4, &mut rng, 3)).collect(),
    };
    let third: Vec<ProjPoint> = match kind {
        Equivalence::FirstTwo => loop {
            let t: Vec<ProjPoint> = (0..6).map(|_| random_point(3, &mut rng, SEGRE_BOUND)).collect();
            if general_in_p3(&t) {
                break t;
            }
        },
        _ => qs.iter().map(|q| q.transform(&maps[2]).expect("invertible")).collect(),
    };
    qs.iter()
        .zip(third)
        .map(|(q, t)| {
            SegrePoint::new(vec![
                q.transform(&maps[0]).expect("invertible"),
                q.transform(&maps[1]).expect("invertible"),
                t,
            ])
        })
        .collect()
}

/// Replaces factor `factor` of point `index` with a random point.
pub fn perturb_factor(points: &[SegrePoint], index: usize, factor: usize, seed: u64) -> Vec<SegrePoint> {
    let mut rng = seeded(seed);
    let mut out = points.to_vec();
    let n = out[index].factors[factor].dim();
    loop {
        let fresh = random_point(n, &mut rng, SEGRE_BOUND);
        if fresh != points[index].factors[factor] {
            out[index].factors[factor] = fresh;
            return out;
        }
    }
}

/// Any `n+1` of the points are linearly independent.
fn general_in_pn(points: &[ProjPoint]) -> bool {
    let n = points[0].dim();
    let mut idx: Vec<usize> = (0..=n).collect();
    loop {
        let rows: Vec<Vec<Scalar>> = idx.iter().map(|&i| points[i].coords().to_vec()).collect();
        if rank(&Mat::from_rows(rows, n + 1).expect("uniform")) < n + 1 {
            return false;
        }
        // next combination
        let k = idx.len();
        let mut i = k;
        while i > 0 && idx[i - 1] == points.len() - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn general_in_p3(points: &[ProjPoint]) -> bool {
    points.len() >= 4 && general_in_pn(points)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalent {
    Yes,
    No,
    /// The first `n+2` source points are not a projective frame.
    Indeterminate,
}

/// The matrix sending `e_i ↦ λ_i f_i` with `Σ λ_i f_i = f_{n+1}`, or `None` if
/// the points are not a frame.
fn frame_matrix(frame: &[&ProjPoint]) -> Option<Mat> {
    let n = frame[0].dim();
    let cols = Mat::from_rows(frame[..=n].iter().map(|p| p.coords().to_vec()).collect(), n + 1)
        .expect("uniform")
        .transpose();
    let lambda = solve(&cols, frame[n + 1].coords()).ok()?;
    if lambda.iter().any(Zero::is_zero) {
        return None;
    }
    let mut data = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for (j, l) in lambda.iter().enumerate() {
            data.push(cols.get(i, j) * l);
        }
    }
    Some(Mat::new(n + 1, n + 1, data).expect("square"))
}

/// Is there `g ∈ PGL` with `g·a_i = b_i` for every `i`?
pub fn projectively_equivalent_labeled(a: &[ProjPoint], b: &[ProjPoint]) -> Equivalent {
    assert_eq!(a.len(), b.len(), "labeled sets of different sizes");
    let n = a[0].dim();
    if a.len() < n + 2 {
        return Equivalent::Indeterminate;
    }
    let fa: Vec<&ProjPoint> = a.iter().collect();
    let fb: Vec<&ProjPoint> = b.iter().collect();
    let Some(ma) = frame_matrix(&fa) else {
        return Equivalent::Indeterminate;
    };
    let Some(mb) = frame_matrix(&fb) else {
        return Equivalent::No;
    };
    let g = mb.mul(&crate::linalg::inverse(&ma).expect("frame matrix is invertible"));
    let ok = a[n + 2..]
        .iter()
        .zip(&b[n + 2..])
        .all(|(p, q)| p.transform(&g).as_ref() == Ok(q));
    if ok {
        Equivalent::Yes
    } else {
        Equivalent::No
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut perm, &mut out);
    out
}

fn heap_permute(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, perm, out);
        if k.is_multiple_of(2) {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, perm, out);
}

/// Is there `g ∈ PGL` mapping the set `a` onto the set `b` in some order?
/// Decided for sources in linear general position.
pub fn projectively_equivalent_sets(a: &[ProjPoint], b: &[ProjPoint]) -> Equivalent {
    if a.len() != b.len() {
        return Equivalent::No;
    }
    if a.is_empty() || !general_in_pn(a) {
        return Equivalent::Indeterminate;
    }
    if a.len() < a[0].dim() + 2 {
        return Equivalent::Indeterminate;
    }
    let found = permutations(b.len()).into_iter().any(|perm| {
        let bp: Vec<ProjPoint> = perm.iter().map(|&i| b[i].clone()).collect();
        projectively_equivalent_labeled(a, &bp) == Equivalent::Yes
    });
    if found {
        Equivalent::Yes
    } else {
        Equivalent::No
    }
}

pub fn projection(points: &[SegrePoint], factor: usize) -> Vec<ProjPoint> {
    points.iter().map(|p| p.factors[factor].clone()).collect()
}

/// Counts from a conjecture-evidence sweep over `(P³)³`, `r = 6`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EvidenceStats {
    pub sampled: usize,
    pub members: usize,
    /// Members with at least one pair of equivalent projections.
    pub members_pairwise: usize,
    /// Members with all three projections equivalent.
    pub members_all_three: usize,
    /// Members where the equivalence test was indeterminate.
    pub members_indeterminate: usize,
}

fn pair_status(points: &[SegrePoint]) -> [Equivalent; 3] {
    let pr: Vec<Vec<ProjPoint>> = (0..3).map(|k| projection(points, k)).collect();
    [(0, 1), (0, 2), (1, 2)].map(|(i, j)| projectively_equivalent_sets(&pr[i], &pr[j]))
}

/// Samples configurations by a short random walk that starts from an
/// equivalent-factor configuration and replaces one factor at each step.
/// Members of the Terracini locus met along the walk are classified by
/// which projections are projectively equivalent. The output is evidence,
/// never a verdict.
pub fn conjecture_evidence(walks: usize, steps: usize, seed: u64) -> EvidenceStats {
    let mut stats = EvidenceStats::default();
    for w in 0..walks as u64 {
        let ws = derive_seed(seed, w);
        let mut rng = seeded(ws);
        let mut cur = equiv_factor_config(derive_seed(ws, 0), Equivalence::AllThree);
        for s in 0..=steps as u64 {
            if s > 0 {
                let i = rng.random_range(0..6);
                let k = rng.random_range(0..3);
                cur = perturb_factor(&cur, i, k, derive_seed(ws, s));
            }
            let Ok(v) = segre_terracini(&cur) else { continue };
            stats.sampled += 1;
            if !v.member {
                continue;
            }
            stats.members += 1;
            let st = pair_status(&cur);
            if st.contains(&Equivalent::Indeterminate) {
                stats.members_indeterminate += 1;
            }
            if st.contains(&Equivalent::Yes) {
                stats.members_pairwise += 1;
            }
            if st.iter().all(|&e| e == Equivalent::Yes) {
                stats.members_all_three += 1;
            }
        }
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyspace::{partial_rows, MonomialBasis};

    #[test]
    fn tangent_row_shapes() {
        let p = SegrePoint::from_ints(&[&[1, 2, 3, 4], &[0, 1, -1, 2], &[3, 0, 0, 1]]).unwrap();
        let rows = segre_tangent_rows(&p);
        assert_eq!(rows.len(), 10);
        assert!(rows.iter().all(|r| r.len() == 64));
        assert_eq!(rank(&Mat::from_rows(rows, 64).unwrap()), 10);

        let q = SegrePoint::from_ints(&[&[1, 5], &[2, -1]]).unwrap();
        let rows = segre_tangent_rows(&q);
        assert_eq!((rows.len(), rank(&Mat::from_rows(rows, 4).unwrap())), (3, 3));
    }

    #[test]
    fn single_factor_matches_linear_partials() {
        let p = SegrePoint::from_ints(&[&[2, -1, 3]]).unwrap();
        let rows = Mat::from_rows(segre_tangent_rows(&p), 3).unwrap();
        let basis = MonomialBasis::new(2, 1);
        let partials = Mat::from_rows(partial_rows(&basis, p.factors()[0].coords()).unwrap(), 3).unwrap();
        assert_eq!(rank(&rows), 3);
        assert_eq!(rank(&rows.vstack(&partials)), 3);
    }

    #[test]
    fn errors() {
        assert_eq!(
            SegrePoint::from_ints(&[&[1, 2], &[0, 0]]),
            Err(SegreError::ZeroFactor { point: 0, factor: 1 })
        );
        let pts = random_segre_points(&[1, 1], 2, 3);
        assert_eq!(
            segre_terracini(&[pts[0].clone(), pts[1].clone(), pts[0].clone()]),
            Err(SegreError::DuplicatePoint { first: 0, second: 2 })
        );
        assert_eq!(segre_terracini(&pts[..1]), Err(SegreError::TooFewPoints(2)));
        let other = random_segre_points(&[1, 2], 1, 3);
        assert!(matches!(
            segre_terracini(&[pts[0].clone(), other[0].clone()]),
            Err(SegreError::ShapeMismatch { point: 1, .. })
        ));
    }

    #[test]
    fn two_points_on_p1_cubed() {
        for seed in 0..5 {
            let v = segre_terracini(&random_segre_points(&[1, 1, 1], 2, seed)).unwrap();
            assert_eq!((v.rank, v.expected, v.member), (8, 8, false));
        }
    }

    #[test]
    fn frame_equivalence() {
        let a: Vec<ProjPoint> = (0..6).map(|i| ProjPoint::from_ints(&[1, i, i * i, i * i * i]).unwrap()).collect();
        let g = random_invertible(4, &mut seeded(1), 4);
        let b: Vec<ProjPoint> = a.iter().map(|p| p.transform(&g).unwrap()).collect();
        assert_eq!(projectively_equivalent_labeled(&a, &b), Equivalent::Yes);
        let mut shuffled = b.clone();
        shuffled.swap(0, 5);
        shuffled.swap(2, 3);
        assert_eq!(projectively_equivalent_labeled(&a, &shuffled), Equivalent::No);
        assert_eq!(projectively_equivalent_sets(&a, &shuffled), Equivalent::Yes);
        let mut moved = b.clone();
        moved[5] = ProjPoint::from_ints(&[1, 7, -3, 2]).unwrap();
        assert_eq!(projectively_equivalent_sets(&a, &moved), Equivalent::No);
        let mut flat = a.clone();
        flat[4] = ProjPoint::from_ints(&[0, 1, 0, 0]).unwrap();
        flat[1] = ProjPoint::from_ints(&[0, 0, 1, 0]).unwrap();
        flat[2] = ProjPoint::from_ints(&[0, 1, 1, 0]).unwrap();
        assert_eq!(projectively_equivalent_sets(&flat, &b), Equivalent::Indeterminate);
    }

    #[test]
    fn equivalent_configs_are_equivalent() {
        let s = equiv_factor_config(4, Equivalence::AllThree);
        assert!(pair_status(&s).iter().all(|&e| e == Equivalent::Yes));
        let t = equiv_factor_config(4, Equivalence::FirstTwo);
        assert_eq!(pair_status(&t), [Equivalent::Yes, Equivalent::No, Equivalent::No]);
    }

    #[test]
    fn permutation_count() {
        let p = permutations(6);
        assert_eq!(p.len(), 720);
        let mut q = p.clone();
        q.sort();
        q.dedup();
        assert_eq!(q.len(), 720);
    }
}
