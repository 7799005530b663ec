//! Numerical certificate that the system
//!
//! ```text
//! g1 = c² + cd − τ²                              ≥ 0
//! g2 = a² + 2b² + 2c² + 2bd + 2cd − (½ + 7τ²/2)   ≥ 0
//! g3 = a² + b² + c² + d(a+b+c) − (½ + 3τ²/2)      > 0
//! ```
//!
//! has no solution with `a ≥ b ≥ c ≥ 0`, `d ≥ 0`, `a + b + c + d = 1`.
//!
//! The simplex is cut into boxes of side `1/R` in `(a, b, c)` with `d`
//! eliminated. On each box every slack is a quadratic, so its maximum is at
//! most the centre value plus `r·Σ|∂ᵢg(m)| + r²·Σ|Qᵢⱼ|` for half-width `r`.
//! A box is excluded when some bound is negative (`≤ 0` for `g3`).
//!
//! Boxes with `a > (1+2τ)/3` that no single slack excludes are settled by an
//! exact argument. Put `q = 2(c−τ)+d`, `s = 1−a−2τ`, `p = b−c`, `w = d` and
//! `β = 2−8τ`. Then `g1 = τq + (q²−w²)/4` and `g2 = −βs + 2s² + p² − w²`,
//! and `s = p + q`. On the constraint set `q ≥ −2τ`, so `g1 ≥ 0` forces
//! `q ≥ 0`, hence `0 ≤ p ≤ s`. If also `s < β/3` then `g2 ≥ 0` gives
//! `w² ≤ s(3s − β) ≤ 0`, so `s = w = 0` and the point is
//! `(1−2τ, τ, τ, 0)`, where `g3 = 0`. That region is exactly
//! `a > (1+2τ)/3`. The point itself lies on all three boundaries, which is
//! why box bounds alone can never close the boxes around it.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::Constants;

/// Tolerance for the τ identities and simplex-sum validation.
pub const TOLERANCE: f64 = 1e-12;

/// Added to every box bound to absorb floating-point rounding.
const ROUNDING_SLACK: f64 = 1e-12;

/// Number of least-margin excluded boxes kept in a certificate.
const TIGHTEST_KEPT: usize = 8;

#[derive(Debug, Error, PartialEq)]
pub enum CertifyError {
    #[error("coordinate {name} = {value} is negative or not finite")]
    BadCoordinate { name: char, value: f64 },
    #[error("coordinates sum to {0}, not 1")]
    SumMismatch(f64),
    #[error("ordering a ≥ b ≥ c violated: ({a}, {b}, {c})")]
    OrderViolation { a: f64, b: f64, c: f64 },
    #[error("resolution must be at least 1")]
    ZeroResolution,
}

#[derive(Clone, Debug, Serialize)]
pub struct TauReport {
    pub tau: f64,
    pub tau_squared: f64,
    pub residuals: BTreeMap<String, f64>,
    pub tolerance: f64,
    pub all_hold: bool,
}

pub fn check_tau_identities() -> TauReport {
    let k = Constants::new();
    let (t, t2) = (k.tau, k.tau_squared);
    let residuals: BTreeMap<String, f64> = [
        ("9t^2 - 8t + 1", 9.0 * t2 - 8.0 * t + 1.0),
        ("1/2 + 7t^2/2 - (1 - 4t + 8t^2)", 0.5 + 3.5 * t2 - (1.0 - 4.0 * t + 8.0 * t2)),
        ("1/2 + 9t^2/2 - 4t", 0.5 + 4.5 * t2 - 4.0 * t),
        ("2 - 8t + 10t^2 - (1 + t^2)", 2.0 - 8.0 * t + 10.0 * t2 - (1.0 + t2)),
        ("8t - 8t^2 - (1 + t^2)", 8.0 * t - 8.0 * t2 - (1.0 + t2)),
    ]
    .into_iter()
    .map(|(name, r)| (name.to_owned(), r))
    .collect();
    let all_hold = residuals.values().all(|r| r.abs() < TOLERANCE);
    TauReport { tau: t, tau_squared: t2, residuals, tolerance: TOLERANCE, all_hold }
}

/// A point `(a, b, c, d)` of the ordered simplex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimplexPoint {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl SimplexPoint {
    /// Validates nonnegativity, `|a+b+c+d − 1| ≤ 1e−12` and `a ≥ b ≥ c`.
    /// Points out of order are rejected, never reordered.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self, CertifyError> {
        for (name, value) in [('a', a), ('b', b), ('c', c), ('d', d)] {
            if !value.is_finite() || value < 0.0 {
                return Err(CertifyError::BadCoordinate { name, value });
            }
        }
        let sum = a + b + c + d;
        if (sum - 1.0).abs() > TOLERANCE {
            return Err(CertifyError::SumMismatch(sum));
        }
        if a < b || b < c {
            return Err(CertifyError::OrderViolation { a, b, c });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Slacks {
    pub g1: f64,
    pub g2: f64,
    pub g3: f64,
}

impl Slacks {
    /// `g1 ≥ 0`, `g2 ≥ 0` and `g3 > 0`.
    pub fn feasible(&self) -> bool {
        self.g1 >= 0.0 && self.g2 >= 0.0 && self.g3 > 0.0
    }
}

pub fn eval_constraints(p: &SimplexPoint) -> Slacks {
    let t2 = Constants::new().tau_squared;
    let SimplexPoint { a, b, c, d } = *p;
    Slacks {
        g1: c * c + c * d - t2,
        g2: a * a + 2.0 * b * b + 2.0 * c * c + 2.0 * b * d + 2.0 * c * d - (0.5 + 3.5 * t2),
        g3: a * a + b * b + c * c + d * (a + b + c) - (0.5 + 1.5 * t2),
    }
}

/// `c0 + lin·x + xᵀ·quad·x` in `x = (a, b, c)`, with `quad` symmetric.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadratic3 {
    pub c0: f64,
    pub lin: [f64; 3],
    pub quad: [[f64; 3]; 3],
}

impl Quadratic3 {
    /// Substitutes `d = 1 − a − b − c` into `k + l·y + yᵀMy`, `y = (a,b,c,d)`.
    fn from_simplex(k: f64, l: [f64; 4], m: [[f64; 4]; 4]) -> Self {
        // y = A·x + e₄ with A = [I; −1 −1 −1].
        let col = |i: usize, r: usize| -> f64 {
            if r == 3 {
                -1.0
            } else if r == i {
                1.0
            } else {
                0.0
            }
        };
        let lin = std::array::from_fn(|i| (0..4).map(|r| col(i, r) * (l[r] + 2.0 * m[r][3])).sum());
        let quad = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..4).flat_map(|r| (0..4).map(move |s| (r, s))).map(|(r, s)| col(i, r) * m[r][s] * col(j, s)).sum()
            })
        });
        Self { c0: k + l[3] + m[3][3], lin, quad }
    }

    pub fn eval(&self, x: [f64; 3]) -> f64 {
        let mut v = self.c0;
        for i in 0..3 {
            v += self.lin[i] * x[i];
            for j in 0..3 {
                v += self.quad[i][j] * x[i] * x[j];
            }
        }
        v
    }

    pub fn gradient(&self, x: [f64; 3]) -> [f64; 3] {
        std::array::from_fn(|i| self.lin[i] + 2.0 * (0..3).map(|j| self.quad[i][j] * x[j]).sum::<f64>())
    }

    /// Upper bound over the cube of half-width `r` centred at `m`:
    /// `g(m+δ) = g(m) + ∇g(m)·δ + δᵀQδ` with every `|δᵢ| ≤ r`.
    pub fn upper_bound(&self, m: [f64; 3], r: f64) -> f64 {
        let grad: f64 = self.gradient(m).iter().map(|g| g.abs()).sum();
        let curv: f64 = self.quad.iter().flatten().map(|q| q.abs()).sum();
        self.eval(m) + r * grad + r * r * curv + ROUNDING_SLACK
    }
}

/// The three slacks as quadratics in `(a, b, c)`.
pub fn slack_quadratics() -> [Quadratic3; 3] {
    let t2 = Constants::new().tau_squared;
    let m1 = [[0.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.5], [0.0, 0.0, 0.5, 0.0]];
    let m2 = [[1.0, 0.0, 0.0, 0.0], [0.0, 2.0, 0.0, 1.0], [0.0, 0.0, 2.0, 1.0], [0.0, 1.0, 1.0, 0.0]];
    let m3 = [[1.0, 0.0, 0.0, 0.5], [0.0, 1.0, 0.0, 0.5], [0.0, 0.0, 1.0, 0.5], [0.5, 0.5, 0.5, 0.0]];
    [
        Quadratic3::from_simplex(-t2, [0.0; 4], m1),
        Quadratic3::from_simplex(-(0.5 + 3.5 * t2), [0.0; 4], m2),
        Quadratic3::from_simplex(-(0.5 + 1.5 * t2), [0.0; 4], m3),
    ]
}

/// Lower edge of the region settled by the exact corner argument.
pub fn corner_threshold() -> f64 {
    (1.0 + 2.0 * Constants::new().tau) / 3.0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub resolution: usize,
    /// Fall back to the exact corner argument for boxes with `a > (1+2τ)/3`.
    pub corner_rule: bool,
}

impl CertifyOptions {
    pub fn new(resolution: usize) -> Self {
        Self { resolution, corner_rule: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExclusionCounts {
    pub g1: u64,
    pub g2: u64,
    pub g3: u64,
    pub corner: u64,
}

impl ExclusionCounts {
    fn add(&mut self, o: &Self) {
        self.g1 += o.g1;
        self.g2 += o.g2;
        self.g3 += o.g3;
        self.corner += o.corner;
    }

    pub fn total(&self) -> u64 {
        self.g1 + self.g2 + self.g3 + self.corner
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoxRecord {
    /// Grid indices `(i, j, k)`; the box is `[i, i+1]×[j, j+1]×[k, k+1]/R`.
    pub index: [usize; 3],
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub c: [f64; 2],
    pub d: [f64; 2],
    pub upper_bounds: [f64; 3],
    /// Largest amount by which some bound clears its exclusion test.
    pub margin: f64,
}

impl BoxRecord {
    fn new(index: [usize; 3], h: f64, upper_bounds: [f64; 3]) -> Self {
        let [i, j, k] = index.map(|x| x as f64);
        let lo = 1.0 - (i + j + k + 3.0) * h;
        let hi = 1.0 - (i + j + k) * h;
        let margin = upper_bounds.iter().map(|u| -u).fold(f64::NEG_INFINITY, f64::max);
        Self {
            index,
            a: [i * h, (i + 1.0) * h],
            b: [j * h, (j + 1.0) * h],
            c: [k * h, (k + 1.0) * h],
            d: [lo.max(0.0), hi],
            upper_bounds,
            margin,
        }
    }

    fn cmp_tightness(&self, other: &Self) -> Ordering {
        self.margin.total_cmp(&other.margin).then(self.index.cmp(&other.index))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub resolution: usize,
    pub boxes_total: u64,
    pub boxes_excluded_by: ExclusionCounts,
    pub undecided: Vec<BoxRecord>,
    pub identities: BTreeMap<String, f64>,
    pub tolerance: f64,
    /// Excluded boxes with the smallest margins.
    pub tightest: Vec<BoxRecord>,
    pub corner_rule: bool,
}

impl Certificate {
    pub fn complete(&self) -> bool {
        self.undecided.is_empty()
    }
}

#[derive(Default)]
struct Partial {
    total: u64,
    excluded: ExclusionCounts,
    undecided: Vec<BoxRecord>,
    tightest: Vec<BoxRecord>,
}

impl Partial {
    fn keep_tightest(&mut self) {
        self.tightest.sort_by(BoxRecord::cmp_tightness);
        self.tightest.truncate(TIGHTEST_KEPT);
    }

    fn merge(mut self, mut other: Partial) -> Partial {
        self.total += other.total;
        self.excluded.add(&other.excluded);
        self.undecided.append(&mut other.undecided);
        self.tightest.append(&mut other.tightest);
        self.keep_tightest();
        self
    }
}

fn certify_row(i: usize, r: usize, slacks: &[Quadratic3; 3], corner: Option<f64>) -> Partial {
    let h = 1.0 / r as f64;
    let half = h / 2.0;
    let mut out = Partial::default();
    for j in 0..=(i + 1).min(r - i) {
        for k in 0..=(j + 1).min(r - i - j) {
            out.total += 1;
            let m = [(i as f64 + 0.5) * h, (j as f64 + 0.5) * h, (k as f64 + 0.5) * h];
            let ub = slacks.each_ref().map(|q| q.upper_bound(m, half));
            let slot = if ub[0] < 0.0 {
                Some(&mut out.excluded.g1)
            } else if ub[1] < 0.0 {
                Some(&mut out.excluded.g2)
            } else if ub[2] <= 0.0 {
                Some(&mut out.excluded.g3)
            } else {
                None
            };
            let record = || BoxRecord::new([i, j, k], h, ub);
            match slot {
                Some(count) => {
                    *count += 1;
                    out.tightest.push(record());
                    if out.tightest.len() >= 4 * TIGHTEST_KEPT {
                        out.keep_tightest();
                    }
                }
                None if corner.is_some_and(|t| i as f64 * h > t) => out.excluded.corner += 1,
                None => out.undecided.push(record()),
            }
        }
    }
    out.keep_tightest();
    out
}

pub fn certify_infeasible(resolution: usize) -> Result<Certificate, CertifyError> {
    certify_with(&CertifyOptions::new(resolution))
}

/// Box certificate; rows of the grid are processed in parallel and merged in
/// index order, so the result does not depend on scheduling.
pub fn certify_with(options: &CertifyOptions) -> Result<Certificate, CertifyError> {
    let r = options.resolution;
    if r == 0 {
        return Err(CertifyError::ZeroResolution);
    }
    let slacks = slack_quadratics();
    let corner = options.corner_rule.then(|| corner_threshold() + TOLERANCE);
    let rows: Vec<Partial> = (0..r).into_par_iter().map(|i| certify_row(i, r, &slacks, corner)).collect();
    let merged = rows.into_iter().fold(Partial::default(), Partial::merge);
    let tau = check_tau_identities();
    Ok(Certificate {
        resolution: r,
        boxes_total: merged.total,
        boxes_excluded_by: merged.excluded,
        undecided: merged.undecided,
        identities: tau.residuals,
        tolerance: TOLERANCE,
        tightest: merged.tightest,
        corner_rule: options.corner_rule,
    })
}

/// Lower bound on `d` in closed form: the positive root of
/// `4d² − (1 − 2τ²)d − (1 − 23τ²) = 0`, about `0.48547`.
pub fn final_d_bound() -> f64 {
    let t2 = Constants::new().tau_squared;
    let p = 1.0 - 2.0 * t2;
    (p + (p * p + 16.0 * (1.0 - 23.0 * t2)).sqrt()) / 8.0
}

/// Both sides of `2(1−d)√(d²+4τ²) < 4τ + 2d² − d`.
pub fn d_inequality_sides(d: f64) -> (f64, f64) {
    let k = Constants::new();
    (2.0 * (1.0 - d) * (d * d + 4.0 * k.tau_squared).sqrt(), 4.0 * k.tau + 2.0 * d * d - d)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainCheck {
    pub name: String,
    pub tested: u64,
    pub failures: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub samples: u64,
    pub checks: Vec<ChainCheck>,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0 && c.tested > 0)
    }
}

/// A uniform point of the simplex with its first three coordinates sorted
/// descending.
fn random_ordered_point(rng: &mut impl Rng) -> SimplexPoint {
    let e: [f64; 4] = std::array::from_fn(|_| -(1.0 - rng.gen::<f64>()).ln());
    let s: f64 = e.iter().sum();
    let mut abc = [e[0] / s, e[1] / s, e[2] / s];
    abc.sort_by(|x, y| y.total_cmp(x));
    let d = 1.0 - abc.iter().sum::<f64>();
    SimplexPoint { a: abc[0], b: abc[1], c: abc[2], d: d.max(0.0) }
}

/// Tests each step of the chain that pins `d` above `1/3` on random points
/// satisfying that step's hypotheses.
pub fn derived_chain_checks(samples: u64, seed: u64) -> ChainReport {
    let k = Constants::new();
    let (t, t2) = (k.tau, k.tau_squared);
    let eps = 1e-12;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks: BTreeMap<&str, (u64, u64)> = BTreeMap::new();
    let mut record = |name: &'static str, ok: bool| {
        let e = checks.entry(name).or_default();
        e.0 += 1;
        e.1 += (!ok) as u64;
    };

    let a_floor = (1.0 / 12.0 + t2 / 2.0).sqrt();
    record("sqrt(1/12 + t^2/2) >= 2t", a_floor >= 2.0 * t);
    record("window 2t <= 1 - 2t", 2.0 * t <= 1.0 - 2.0 * t);
    let d_star = final_d_bound();
    record("final d bound > 1/3", d_star > 1.0 / 3.0);
    let (l, r) = d_inequality_sides(d_star);
    record("sides agree at the d bound", (l * l - r * r).abs() < 1e-9);

    for _ in 0..samples {
        let p = random_ordered_point(&mut rng);
        let g = eval_constraints(&p);
        let SimplexPoint { a, b, c, d } = p;
        let root = (d * d + 4.0 * t2).sqrt();
        if g.g1 >= 0.0 {
            record("g1 >= 0 => c >= (-d + sqrt(d^2 + 4t^2))/2", c >= (root - d) / 2.0 - eps);
            record("g1 >= 0 => a <= 1 - sqrt(d^2 + 4t^2) <= 1 - 2t", a <= 1.0 - root + eps && root >= 2.0 * t);
        }
        if g.g2 >= 0.0 && (2.0 * t..=1.0 - 2.0 * t).contains(&a) {
            record("g2 >= 0, 2t <= a <= 1 - 2t => b - c >= d", b - c >= d - eps);
        }
        if g.g3 > 0.0 {
            record("g3 > 0 => a >= sqrt(1/12 + t^2/2)", a >= a_floor - eps);
        }
        let x: f64 = rng.gen();
        let (l, r) = d_inequality_sides(x);
        if (x - d_star).abs() > 1e-9 {
            record("d-inequality holds iff d > bound", (l < r) == (x > d_star));
        }
        let y = x / 3.0;
        let (l, r) = d_inequality_sides(y);
        record("d-inequality fails on [0, 1/3]", l >= r - eps);
    }

    ChainReport {
        samples,
        checks: checks
            .into_iter()
            .map(|(name, (tested, failures))| ChainCheck { name: name.to_owned(), tested, failures })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: f64, b: f64, c: f64, d: f64) -> SimplexPoint {
        SimplexPoint::new(a, b, c, d).unwrap()
    }

    #[test]
    fn identities_hold() {
        let r = check_tau_identities();
        assert!(r.all_hold, "{r:?}");
        assert!((r.tau_squared - 0.0226).abs() < 5e-5);
        assert_eq!(r.residuals.len(), 5);
    }

    #[test]
    fn point_validation() {
        assert!(SimplexPoint::new(0.5, 0.25, 0.15, 0.1).is_ok());
        assert!(matches!(SimplexPoint::new(0.5, 0.15, 0.25, 0.1), Err(CertifyError::OrderViolation { .. })));
        assert!(matches!(SimplexPoint::new(0.5, 0.25, 0.15, 0.2), Err(CertifyError::SumMismatch(_))));
        assert!(matches!(SimplexPoint::new(1.1, 0.0, 0.0, -0.1), Err(CertifyError::BadCoordinate { name: 'd', .. })));
        assert!(SimplexPoint::new(f64::NAN, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn constraint_examples() {
        let t2 = Constants::new().tau_squared;
        let s = eval_constraints(&pt(0.5, 0.25, 0.15, 0.1));
        assert!((s.g1 - (0.0375 - t2)).abs() < 1e-15 && s.g1 > 0.0);
        assert!((s.g3 - (0.425 - 0.5 - 1.5 * t2)).abs() < 1e-15 && s.g3 < 0.0);
        assert!(!s.feasible());
        let s = eval_constraints(&pt(1.0, 0.0, 0.0, 0.0));
        assert_eq!(s.g1, -t2);
        let third = 1.0 / 3.0;
        let s = eval_constraints(&pt(third, third, third, 0.0));
        assert!(s.g1 > 0.0 && s.g3 < 0.0);
    }

    #[test]
    fn quadratics_match_direct_evaluation() {
        let q = slack_quadratics();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let p = random_ordered_point(&mut rng);
            let s = eval_constraints(&p);
            let [a, b, c, _] = p.coords();
            let via = q.map(|q| q.eval([a, b, c]));
            for (x, y) in via.iter().zip([s.g1, s.g2, s.g3]) {
                assert!((x - y).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn corner_substitution_is_exact() {
        let k = Constants::new();
        let (t, beta) = (k.tau, 2.0 - 8.0 * k.tau);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let p = random_ordered_point(&mut rng);
            let [a, b, c, d] = p.coords();
            let s = eval_constraints(&p);
            let q = 2.0 * (c - t) + d;
            let (sv, pv, w) = (1.0 - a - 2.0 * t, b - c, d);
            assert!((s.g1 - (t * q + (q * q - w * w) / 4.0)).abs() < 1e-13);
            assert!((s.g2 - (-beta * sv + 2.0 * sv * sv + pv * pv - w * w)).abs() < 1e-13);
            assert!((sv - pv - q).abs() < 1e-13);
        }
        let star = eval_constraints(&pt(1.0 - 2.0 * t, t, t, 0.0));
        assert!(star.g1.abs() < 1e-15 && star.g2.abs() < 1e-13 && star.g3.abs() < 1e-13);
        assert!(corner_threshold() < 1.0 - 2.0 * t);
    }

    #[test]
    fn box_bounds_are_sound() {
        let q = slack_quadratics();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20_000 {
            let r = rng.gen_range(1e-4..0.1);
            let m = [rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>()];
            let x = m.map(|v| v + rng.gen_range(-r..=r));
            for g in &q {
                assert!(g.eval(x) <= g.upper_bound(m, r));
            }
        }
    }

    #[test]
    fn straddling_box_is_excluded_by_g3() {
        let q = slack_quadratics();
        let h = 1.0 / 64.0;
        let m = [0.5, 0.25, 0.15];
        assert!(q[2].upper_bound(m, h / 2.0) <= 0.0);
    }

    #[test]
    fn single_slack_certificate_leaves_the_corner() {
        let cert = certify_with(&CertifyOptions { resolution: 64, corner_rule: false }).unwrap();
        assert!(!cert.complete());
        let t = corner_threshold();
        assert!(cert.undecided.iter().all(|b| b.a[0] > t));
        assert_eq!(cert.boxes_excluded_by.total() + cert.undecided.len() as u64, cert.boxes_total);
    }

    #[test]
    fn coarse_and_fine_certificates() {
        assert!(!certify_infeasible(4).unwrap().complete());
        let c = certify_infeasible(64).unwrap();
        assert!(c.complete());
        assert_eq!(c.boxes_excluded_by.total(), c.boxes_total);
        assert!(c.tightest.windows(2).all(|w| w[0].margin <= w[1].margin));
        assert!(matches!(certify_infeasible(0), Err(CertifyError::ZeroResolution)));
    }

    #[test]
    fn final_bound_value() {
        let d = final_d_bound();
        assert!((d - 0.485).abs() < 1e-3 && d > 1.0 / 3.0);
        let (l, r) = d_inequality_sides(d);
        assert!((l * l - r * r).abs() < 1e-9);
    }

    #[test]
    fn chain_checks_pass() {
        let report = derived_chain_checks(20_000, 1);
        assert!(report.passed(), "{report:#?}");
    }
}
