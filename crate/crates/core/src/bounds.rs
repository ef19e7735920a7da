//! Bounds on the largest value of (λ₁+λ_n)/n over graphs of odd girth at
//! least k: the odd-trace inequality, the polynomial-root bound, its
//! Lambert W relaxation, odd-cycle lower bounds and the odd-girth-7
//! quotient optimization.

use std::f64::consts::{E, PI};
use std::sync::OnceLock;

use nalgebra::{Matrix3, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{folded_cube_generators, OddGirth};
use crate::spectral::{cayley_f2_spectrum, srg_spectrum, SrgParams};

const SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Trivial bound 1 (odd girth 3).
    Trivial,
    /// 1 − (2ℓ/(2ℓ−1))·x₀ with x₀ the root of x^{2ℓ} + 2ℓx − 2ℓ + 1.
    RootUpper,
    /// W(1/e)/(k − 4).
    LambertUpper,
    /// Three-class weight-quotient optimization, odd girth ≥ 7.
    Girth7Upper,
    /// (λ₁+λ_k)/k of the odd cycle C_k.
    CycleLower,
    /// Folded 7-cube.
    FoldedCubeLower,
    /// Strongly regular graph from its parameters.
    SrgLower,
    /// Complete graphs K_n as n → ∞.
    CompleteLower,
}

impl BoundKind {
    pub fn is_upper(self) -> bool {
        matches!(
            self,
            BoundKind::Trivial
                | BoundKind::RootUpper
                | BoundKind::LambertUpper
                | BoundKind::Girth7Upper
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    None,
    Root {
        x0: f64,
    },
    Lambert {
        w: f64,
    },
    Girth7 {
        delta: f64,
        alpha: f64,
        grid_maximum: f64,
        refined_maximum: f64,
        cubic_roots: [f64; 3],
    },
    Graph {
        name: String,
        n: usize,
        lambda1: f64,
        lambdan: f64,
    },
    Family {
        name: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub kind: BoundKind,
    pub odd_girth: usize,
    pub ell: Option<usize>,
    pub value: f64,
    pub witness: Witness,
}

/// Whether λ₁ ≤ −λ_n^{2ℓ−1}·n / (λ₁^{2ℓ−1} − λ_n^{2ℓ−1}) holds (with 1e-9
/// slack). It must hold whenever the odd girth is at least 2ℓ+3, because
/// the trace of A^{2ℓ+1} then vanishes.
pub fn odd_trace_check(lambda1: f64, lambdan: f64, n: usize, ell: usize) -> Result<bool> {
    if ell < 1 {
        return Err(invalid("ell must be >= 1"));
    }
    if n < 1 {
        return Err(invalid("n must be >= 1"));
    }
    if lambdan >= 0.0 || lambda1 <= 0.0 {
        return Err(invalid(format!(
            "need λ₁ > 0 > λ_n, got λ₁ = {lambda1}, λ_n = {lambdan}"
        )));
    }
    Ok(lambda1 <= odd_trace_rhs(lambda1, lambdan, n, ell) + SLACK)
}

/// Right-hand side of the odd-trace inequality.
pub fn odd_trace_rhs(lambda1: f64, lambdan: f64, n: usize, ell: usize) -> f64 {
    let p = 2 * ell as i32 - 1;
    let neg = lambdan.powi(p);
    -neg * n as f64 / (lambda1.powi(p) - neg)
}

/// g(x) = x^{2ℓ} + 2ℓx − 2ℓ + 1, written as x^{2ℓ} + 2ℓ(x − 1) + 1 to keep
/// the cancellation near the root small.
pub fn root_polynomial(ell: usize, x: f64) -> f64 {
    let two_ell = 2.0 * ell as f64;
    x.powi(2 * ell as i32) + two_ell * (x - 1.0) + 1.0
}

fn root_polynomial_derivative(ell: usize, x: f64) -> f64 {
    let two_ell = 2.0 * ell as f64;
    two_ell * x.powi(2 * ell as i32 - 1) + two_ell
}

/// The unique root of g in (0, 1): bisection, then Newton polishing.
pub fn find_x0(ell: usize) -> Result<f64> {
    if ell < 1 {
        return Err(invalid("ell must be >= 1"));
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if root_polynomial(ell, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..8 {
        let step = root_polynomial(ell, x) / root_polynomial_derivative(ell, x);
        let next = (x - step).clamp(lo.min(x), hi.max(x));
        if next == x {
            break;
        }
        x = next;
    }
    Ok(x)
}

/// Upper bound 1 − (2ℓ/(2ℓ−1))·x₀ for odd girth k = 2ℓ + 3.
pub fn root_bound(ell: usize) -> Result<BoundResult> {
    let x0 = find_x0(ell)?;
    let l = ell as f64;
    Ok(BoundResult {
        kind: BoundKind::RootUpper,
        odd_girth: 2 * ell + 3,
        ell: Some(ell),
        value: 1.0 - (2.0 * l / (2.0 * l - 1.0)) * x0,
        witness: Witness::Root { x0 },
    })
}

/// Principal branch of the Lambert W function on [0, ∞), by Halley
/// iteration from log(1 + x).
pub fn lambert_w(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(invalid(format!("lambert_w needs finite x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut w = x.ln_1p();
    for _ in 0..100 {
        let ew = w.exp();
        let f = w * ew - x;
        let denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        let step = f / denom;
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            break;
        }
    }
    Ok(w)
}

/// W(1/e) ≈ 0.2785.
pub fn lambert_w_inv_e() -> f64 {
    static VALUE: OnceLock<f64> = OnceLock::new();
    *VALUE.get_or_init(|| lambert_w(1.0 / E).expect("1/e is in the domain"))
}

/// W(1/e)/(k − 4) for odd k ≥ 5.
pub fn lambert_upper_bound(k: usize) -> Result<BoundResult> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(invalid(format!("odd girth {k} must be odd and >= 5")));
    }
    let w = lambert_w_inv_e();
    Ok(BoundResult {
        kind: BoundKind::LambertUpper,
        odd_girth: k,
        ell: Some((k - 3) / 2),
        value: w / (k as f64 - 4.0),
        witness: Witness::Lambert { w },
    })
}

/// 2(1 − cos(π/k))/k, the ratio attained by C_k.
pub fn cycle_lower_bound(k: usize) -> Result<BoundResult> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(invalid(format!("cycle length {k} must be odd and >= 3")));
    }
    let kf = k as f64;
    let value = 2.0 * (1.0 - (PI / kf).cos()) / kf;
    Ok(BoundResult {
        kind: BoundKind::CycleLower,
        odd_girth: k,
        ell: None,
        value,
        witness: Witness::Graph {
            name: format!("{k}-cycle"),
            n: k,
            lambda1: 2.0,
            lambdan: 2.0 * (PI * (kf - 1.0) / kf).cos(),
        },
    })
}

/// The folded 7-cube's ratio, from its character spectrum.
pub fn folded_cube_lower_bound() -> Result<BoundResult> {
    let spectrum = cayley_f2_spectrum(6, &folded_cube_generators(7)?)?;
    let (l1, ln) = (spectrum.largest(), spectrum.smallest());
    Ok(BoundResult {
        kind: BoundKind::FoldedCubeLower,
        odd_girth: 7,
        ell: None,
        value: (l1 + ln) / 64.0,
        witness: Witness::Graph {
            name: "folded 7-cube".into(),
            n: 64,
            lambda1: l1,
            lambdan: ln,
        },
    })
}

/// Higman–Sims graph, reproduced from its parameters (100, 22, 0, 6).
pub fn higman_sims_lower_bound() -> Result<BoundResult> {
    let params = SrgParams::new(100, 22, 0, 6)?;
    let s = srg_spectrum(params)?;
    Ok(BoundResult {
        kind: BoundKind::SrgLower,
        odd_girth: 5,
        ell: None,
        value: s.ratio(params.n),
        witness: Witness::Graph {
            name: "Higman-Sims graph".into(),
            n: 100,
            lambda1: s.degree,
            lambdan: s.least(),
        },
    })
}

fn check_girth7_domain(delta: f64, alpha: f64) -> Result<()> {
    if !(delta > 0.0 && delta < alpha && alpha < 0.5) {
        return Err(invalid(format!(
            "need 0 < δ < α < 1/2, got δ = {delta}, α = {alpha}"
        )));
    }
    Ok(())
}

/// Radicand of the closed-form least quotient eigenvalue:
/// α⁴ + 6α³δ + 9α²δ² − 12α²δ − 4αδ² + 4αδ.
pub fn girth7_radicand(delta: f64, alpha: f64) -> f64 {
    let (a, d) = (alpha, delta);
    a.powi(4) + 6.0 * a.powi(3) * d + 9.0 * a * a * d * d - 12.0 * a * a * d - 4.0 * a * d * d
        + 4.0 * a * d
}

/// The radicand with the cancelling −4αδ + 4αδ pair in place of
/// −4αδ² + 4αδ; only used for diagnostics.
pub fn girth7_radicand_printed(delta: f64, alpha: f64) -> f64 {
    let (a, d) = (alpha, delta);
    a.powi(4) + 6.0 * a.powi(3) * d + 9.0 * a * a * d * d - 12.0 * a * a * d
}

fn objective_from_radicand(delta: f64, alpha: f64, radicand: f64) -> f64 {
    let ratio =
        (alpha * alpha - alpha * delta + radicand.sqrt()) / (2.0 * alpha * (1.0 - delta - alpha));
    delta * (1.0 - ratio)
}

/// Least eigenvalue of the three-class quotient divided by λ₁, in closed form.
pub fn girth7_least_eigenvalue(delta: f64, alpha: f64) -> Result<f64> {
    check_girth7_domain(delta, alpha)?;
    let r = girth7_radicand(delta, alpha);
    if r < 0.0 {
        return Err(Error::NumericalDomain(format!(
            "negative radicand {r:e} at δ = {delta}, α = {alpha}"
        )));
    }
    Ok(-(alpha * alpha - alpha * delta + r.sqrt()) / (2.0 * alpha * (1.0 - delta - alpha)))
}

/// δ·(1 + λ₃(M)/λ₁), the upper bound on (λ₁+λ_n)/n for a graph whose
/// heavy-vertex distance partition has weights δ = ‖ρV₁‖², α = ‖ρV₂‖².
pub fn girth7_objective(delta: f64, alpha: f64) -> Result<f64> {
    Ok(delta * (1.0 + girth7_least_eigenvalue(delta, alpha)?))
}

/// The weight-quotient matrix M of the three-class distance partition,
/// determined by λ₁, δ and α.
pub fn girth7_quotient(delta: f64, alpha: f64, lambda1: f64) -> [[f64; 3]; 3] {
    let gamma = 1.0 - delta - alpha;
    let back = (alpha - delta) / gamma;
    [
        [0.0, lambda1, 0.0],
        [
            lambda1 * delta / alpha,
            0.0,
            lambda1 * (1.0 - delta / alpha),
        ],
        [0.0, lambda1 * back, lambda1 * (1.0 - back)],
    ]
}

/// Least eigenvalue of [`girth7_quotient`] with λ₁ = 1, from the
/// symmetrized matrix D^{1/2} M D^{-1/2}.
pub fn girth7_quotient_least_eigenvalue(delta: f64, alpha: f64) -> f64 {
    let m = girth7_quotient(delta, alpha, 1.0);
    let w = [delta, alpha, 1.0 - delta - alpha];
    let b = Matrix3::from_fn(|i, j| m[i][j] * (w[i] / w[j]).sqrt());
    let b = (b + b.transpose()) * 0.5;
    SymmetricEigen::new(b)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Real roots of a·x³ + b·x² + c·x + d, ascending. Fails unless all three
/// roots are real.
pub fn cubic_real_roots(a: f64, b: f64, c: f64, d: f64) -> Result<[f64; 3]> {
    if a == 0.0 {
        return Err(invalid("leading coefficient is zero"));
    }
    let (b, c, d) = (b / a, c / a, d / a);
    // x = t − b/3 gives t³ + p t + q.
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = -(4.0 * p * p * p + 27.0 * q * q);
    if disc < 0.0 || p >= 0.0 {
        return Err(Error::NumericalDomain(
            "cubic does not have three real roots".into(),
        ));
    }
    let r = 2.0 * (-p / 3.0).sqrt();
    let phi = ((3.0 * q / (p * r)).clamp(-1.0, 1.0)).acos() / 3.0;
    let mut roots = [0.0; 3];
    for (k, root) in roots.iter_mut().enumerate() {
        let mut x = r * (phi - 2.0 * PI * k as f64 / 3.0).cos() - b / 3.0;
        for _ in 0..4 {
            let f = ((x + b) * x + c) * x + d;
            let df = (3.0 * x + 2.0 * b) * x + c;
            if df == 0.0 {
                break;
            }
            x -= f / df;
        }
        *root = x;
    }
    roots.sort_by(|a, b| a.total_cmp(b));
    Ok(roots)
}

/// Coefficients of the cubic whose second largest root is the odd-girth-7 bound.
pub const GIRTH7_CUBIC: [f64; 4] = [54.0, 423.0, -700.0, 27.0];

/// Default grid step for [`girth7_upper_bound`].
pub const GIRTH7_GRID_STEP: f64 = 1e-3;

const GIRTH7_AGREEMENT: f64 = 1e-6;
const EIGEN_CROSSCHECK: f64 = 1e-8;

fn grid_points(step: f64) -> impl Iterator<Item = (f64, f64)> {
    let top = (0.5 / step).ceil() as usize;
    (1..top).flat_map(move |i| {
        ((i + 1)..top).filter_map(move |j| {
            let (d, a) = (i as f64 * step, j as f64 * step);
            (a < 0.5).then_some((d, a))
        })
    })
}

fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

/// Maximizes the odd-girth-7 objective over 0 < δ < α < 1/2 by a grid of
/// the given step (cross-checking the closed-form quotient eigenvalue
/// against a numeric eigensolve at every point), then refines by
/// alternating golden-section searches. Returns `(δ*, α*, grid max, refined max)`.
pub fn maximize_girth7_objective(step: f64) -> Result<(f64, f64, f64, f64)> {
    if !(step > 0.0 && step <= 0.05) {
        return Err(invalid(format!("grid step {step} outside (0, 0.05]")));
    }
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    for (d, a) in grid_points(step) {
        let closed = girth7_least_eigenvalue(d, a)?;
        let numeric = girth7_quotient_least_eigenvalue(d, a);
        if (closed - numeric).abs() > EIGEN_CROSSCHECK {
            return Err(Error::InternalConsistency(format!(
                "closed-form quotient eigenvalue {closed} disagrees with eigensolve {numeric} at δ = {d}, α = {a}"
            )));
        }
        let value = d * (1.0 + closed);
        if value > best.0 {
            best = (value, d, a);
        }
    }
    let (grid_max, mut d, mut a) = best;
    if !grid_max.is_finite() {
        return Err(invalid("grid step leaves no interior points"));
    }

    let eps = 1e-12;
    let objective = |d: f64, a: f64| girth7_objective(d, a).unwrap_or(f64::NEG_INFINITY);
    for _ in 0..500 {
        let (d_prev, a_prev) = (d, a);
        d = golden_max(
            |x| objective(x, a),
            (d - 2.0 * step).max(eps),
            (d + 2.0 * step).min(a - eps),
            1e-13,
        );
        a = golden_max(
            |y| objective(d, y),
            (a - 2.0 * step).max(d + eps),
            (a + 2.0 * step).min(0.5 - eps),
            1e-13,
        );
        if (d - d_prev).abs() < 1e-12 && (a - a_prev).abs() < 1e-12 {
            break;
        }
    }
    let refined = girth7_objective(d, a)?.max(grid_max);
    Ok((d, a, grid_max, refined))
}

/// Upper bound for odd girth ≥ 7: the second largest root of
/// 54x³ + 423x² − 700x + 27, required to agree within 1e-6 with a direct
/// numerical maximization of the quotient objective.
pub fn girth7_upper_bound_with(step: f64) -> Result<BoundResult> {
    let [a, b, c, d] = GIRTH7_CUBIC;
    let roots = cubic_real_roots(a, b, c, d)?;
    let root = roots[1];
    let (delta, alpha, grid_max, refined) = maximize_girth7_objective(step)?;
    if (refined - root).abs() > GIRTH7_AGREEMENT {
        return Err(Error::InternalConsistency(format!(
            "cubic root {root} and numerical maximum {refined} differ by more than {GIRTH7_AGREEMENT:e}"
        )));
    }
    Ok(BoundResult {
        kind: BoundKind::Girth7Upper,
        odd_girth: 7,
        ell: None,
        value: root,
        witness: Witness::Girth7 {
            delta,
            alpha,
            grid_maximum: grid_max,
            refined_maximum: refined,
            cubic_roots: roots,
        },
    })
}

/// [`girth7_upper_bound_with`] at the default grid step, computed once.
pub fn girth7_upper_bound() -> Result<BoundResult> {
    static CACHE: OnceLock<Result<BoundResult>> = OnceLock::new();
    CACHE
        .get_or_init(|| girth7_upper_bound_with(GIRTH7_GRID_STEP))
        .clone()
}

/// Comparison of the two radicand variants over the grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadicandDiagnostic {
    pub grid_points: usize,
    pub matrix_variant_negative: usize,
    pub matrix_variant_maximum: f64,
    pub printed_variant_negative: usize,
    pub printed_variant_maximum: f64,
}

pub fn girth7_radicand_diagnostic(step: f64) -> Result<RadicandDiagnostic> {
    if !(step > 0.0 && step <= 0.05) {
        return Err(invalid(format!("grid step {step} outside (0, 0.05]")));
    }
    let mut diag = RadicandDiagnostic {
        grid_points: 0,
        matrix_variant_negative: 0,
        matrix_variant_maximum: f64::NEG_INFINITY,
        printed_variant_negative: 0,
        printed_variant_maximum: f64::NEG_INFINITY,
    };
    for (d, a) in grid_points(step) {
        diag.grid_points += 1;
        let r = girth7_radicand(d, a);
        if r < 0.0 {
            diag.matrix_variant_negative += 1;
        } else {
            diag.matrix_variant_maximum = diag
                .matrix_variant_maximum
                .max(objective_from_radicand(d, a, r));
        }
        let r = girth7_radicand_printed(d, a);
        if r < 0.0 {
            diag.printed_variant_negative += 1;
        } else {
            diag.printed_variant_maximum = diag
                .printed_variant_maximum
                .max(objective_from_radicand(d, a, r));
        }
    }
    Ok(diag)
}

/// Best known upper bound on (λ₁+λ_n)/n for graphs of the given odd girth.
pub fn best_upper_bound(odd_girth: OddGirth) -> Result<BoundResult> {
    match odd_girth {
        OddGirth::Infinite => Ok(BoundResult {
            kind: BoundKind::Trivial,
            odd_girth: 0,
            ell: None,
            value: 0.0,
            witness: Witness::None,
        }),
        OddGirth::Finite(k) => upper_candidates(k)?
            .into_iter()
            .min_by(|a, b| a.value.total_cmp(&b.value))
            .ok_or_else(|| invalid(format!("no upper bound for odd girth {k}"))),
    }
}

fn upper_candidates(k: usize) -> Result<Vec<BoundResult>> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(invalid(format!("odd girth {k} must be odd and >= 3")));
    }
    if k == 3 {
        return Ok(vec![BoundResult {
            kind: BoundKind::Trivial,
            odd_girth: 3,
            ell: None,
            value: 1.0,
            witness: Witness::None,
        }]);
    }
    let mut out = vec![root_bound((k - 3) / 2)?, lambert_upper_bound(k)?];
    if k >= 7 {
        let mut g7 = girth7_upper_bound()?;
        g7.odd_girth = k;
        out.push(g7);
    }
    Ok(out)
}

fn lower_candidates(k: usize) -> Result<Vec<BoundResult>> {
    let mut out = vec![cycle_lower_bound(k)?];
    match k {
        3 => out.push(BoundResult {
            kind: BoundKind::CompleteLower,
            odd_girth: 3,
            ell: None,
            value: 1.0,
            witness: Witness::Family {
                name: "K_n, n -> infinity".into(),
            },
        }),
        5 => out.push(higman_sims_lower_bound()?),
        7 => out.push(folded_cube_lower_bound()?),
        _ => {}
    }
    Ok(out)
}

/// Human-readable source of a bound, used in table annotations.
pub fn describe(bound: &BoundResult) -> String {
    match (&bound.kind, &bound.witness) {
        (_, Witness::Graph { name, .. }) | (_, Witness::Family { name }) => name.clone(),
        (BoundKind::Trivial, _) => "trivial".into(),
        (BoundKind::RootUpper, _) => format!("root bound, l={}", bound.ell.unwrap_or(0)),
        (BoundKind::LambertUpper, _) => "Lambert W bound".into(),
        (BoundKind::Girth7Upper, _) => "odd-girth-7 quotient bound".into(),
        (kind, _) => format!("{kind:?}"),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: usize,
    pub upper: BoundResult,
    pub lower: BoundResult,
}

impl TableRow {
    /// Upper bound rounded up to 4 decimals.
    pub fn upper_rounded(&self) -> f64 {
        round_up(self.upper.value, 4)
    }

    /// Lower bound rounded down to 4 decimals.
    pub fn lower_rounded(&self) -> f64 {
        round_down(self.lower.value, 4)
    }

    pub fn upper_display(&self) -> String {
        format_rounded(self.upper.value, self.upper_rounded(), 4)
    }

    pub fn lower_display(&self) -> String {
        format_rounded(self.lower.value, self.lower_rounded(), 4)
    }
}

/// Best known upper and lower bound for each odd k in 3..=k_max.
pub fn gamma_table(k_max: usize) -> Result<Vec<TableRow>> {
    if k_max < 3 || k_max.is_multiple_of(2) {
        return Err(invalid(format!("k_max = {k_max} must be odd and >= 3")));
    }
    (3..=k_max)
        .step_by(2)
        .map(|k| {
            let upper = best_upper_bound(OddGirth::Finite(k))?;
            let lower = lower_candidates(k)?
                .into_iter()
                .max_by(|a, b| a.value.total_cmp(&b.value))
                .expect("cycle bound always present");
            Ok(TableRow { k, upper, lower })
        })
        .collect()
}

// Outward rounding keeps the rounded interval a valid enclosure.
pub fn round_up(value: f64, digits: i32) -> f64 {
    let scale = 10f64.powi(digits);
    (value * scale - 1e-9).ceil() / scale
}

pub fn round_down(value: f64, digits: i32) -> f64 {
    let scale = 10f64.powi(digits);
    (value * scale + 1e-9).floor() / scale
}

/// Renders a directed-rounded value: exact short decimals keep their short
/// form (1 → "1", 0.14 → "0.14"), anything else prints all `digits` places
/// of the rounded value (0.02393 rounded up → "0.0240").
pub fn format_rounded(raw: f64, rounded: f64, digits: usize) -> String {
    for d in 0..digits {
        let scale = 10f64.powi(d as i32);
        if ((raw * scale).round() - raw * scale).abs() < 1e-9 {
            return format!("{raw:.d$}");
        }
    }
    format!("{rounded:.digits$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_trace_examples() {
        let ln = 2.0 * (4.0 * PI / 5.0).cos();
        assert!(odd_trace_check(2.0, ln, 5, 1).unwrap());
        assert!((odd_trace_rhs(2.0, ln, 5, 1) - 2.2360679775).abs() < 1e-9);

        assert!(odd_trace_check(7.0, -5.0, 64, 2).unwrap());
        assert!((odd_trace_rhs(7.0, -5.0, 64, 2) - 125.0 * 64.0 / 468.0).abs() < 1e-12);

        assert!(!odd_trace_check(2.0, -1.0, 3, 1).unwrap());
        assert!(odd_trace_check(2.0, 0.0, 3, 1).is_err());
        assert!(odd_trace_check(2.0, -1.0, 3, 0).is_err());
    }

    #[test]
    fn x0_values() {
        assert!((find_x0(1).unwrap() - (2f64.sqrt() - 1.0)).abs() < 1e-15);
        // bisection oracle: scipy brentq on x^8 + 8x - 7
        assert!((find_x0(4).unwrap() - 0.8430914260867702).abs() < 1e-12);
        for ell in 1..=50 {
            let x = find_x0(ell).unwrap();
            assert!(x > 0.0 && x < 1.0);
            assert!(root_polynomial(ell, x).abs() <= 1e-13, "ell={ell}");
        }
        assert!(find_x0(0).is_err());
    }

    #[test]
    fn root_bound_values() {
        let b = root_bound(1).unwrap();
        assert!((b.value - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-12);
        assert_eq!(b.odd_girth, 5);
        assert_eq!(round_up(root_bound(4).unwrap().value, 4), 0.0365);
        assert_eq!(round_up(root_bound(5).unwrap().value, 4), 0.0289);
        assert_eq!(round_up(root_bound(6).unwrap().value, 4), 0.0240);
    }

    #[test]
    fn lambert_values() {
        assert_eq!(lambert_w(0.0).unwrap(), 0.0);
        assert!((lambert_w(E).unwrap() - 1.0).abs() < 1e-15);
        let w = lambert_w(1.0 / E).unwrap();
        assert!((w * w.exp() - 1.0 / E).abs() <= 1e-13);
        assert_eq!((w * 1e4).round() / 1e4, 0.2785);
        assert!(lambert_w(-0.1).is_err());
        assert!(lambert_w(f64::NAN).is_err());
        for &x in &[1e-8, 0.5, 3.0, 10.0, 1e3, 1e8] {
            let w = lambert_w(x).unwrap();
            assert!(((w * w.exp() - x) / x).abs() < 1e-14, "x={x}");
        }
    }

    #[test]
    fn lambert_bound_values() {
        assert!((lambert_upper_bound(5).unwrap().value - 0.27846454276107).abs() < 1e-12);
        assert!((lambert_upper_bound(7).unwrap().value - 0.27846454276107 / 3.0).abs() < 1e-12);
        assert!(lambert_upper_bound(6).is_err());
        assert!(lambert_upper_bound(3).is_err());
    }

    #[test]
    fn cycle_bounds() {
        assert_eq!(round_down(cycle_lower_bound(9).unwrap().value, 4), 0.0134);
        assert!((cycle_lower_bound(3).unwrap().value - 1.0 / 3.0).abs() < 1e-15);
        assert!(cycle_lower_bound(4).is_err());
    }

    #[test]
    fn objective_point_values() {
        // scipy eigvals of [[0,7,0],[49/22,0,105/22],[0,3,4]]: -4.84052255, 1.84052255, 7
        let l3 = girth7_least_eigenvalue(7.0 / 64.0, 22.0 / 64.0).unwrap() * 7.0;
        assert!((l3 + 4.84052255).abs() < 1e-7);
        let v = girth7_objective(7.0 / 64.0, 22.0 / 64.0).unwrap();
        assert!((v - 0.0337418351514968).abs() < 1e-12);
        assert!(girth7_objective(1e-12, 0.3).unwrap().abs() < 1e-10);
        assert!(girth7_objective(0.3, 0.2).is_err());
        assert!(girth7_objective(0.1, 0.5).is_err());
        let q = girth7_quotient(7.0 / 64.0, 22.0 / 64.0, 7.0);
        let expected = [
            [0.0, 7.0, 0.0],
            [49.0 / 22.0, 0.0, 105.0 / 22.0],
            [0.0, 3.0, 4.0],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert!((q[i][j] - expected[i][j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cubic_roots() {
        let r = cubic_real_roots(54.0, 423.0, -700.0, 27.0).unwrap();
        assert!(r[0] < 0.0 && r[1] > 0.0 && r[1] < 0.04 && r[2] > 1.0 && r[2] < 2.0);
        assert!((r.iter().sum::<f64>() + 423.0 / 54.0).abs() < 1e-12);
        // numpy.roots reference
        assert!((r[1] - 0.03951998).abs() < 1e-8);
        let r = cubic_real_roots(1.0, -6.0, 11.0, -6.0).unwrap();
        for (x, y) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((x - y).abs() < 1e-12);
        }
        assert!(cubic_real_roots(1.0, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn girth7_bound_coarse_grid() {
        let b = girth7_upper_bound_with(5e-3).unwrap();
        assert!(b.value < 0.0396);
        let Witness::Girth7 {
            refined_maximum, ..
        } = b.witness
        else {
            panic!("wrong witness")
        };
        assert!((refined_maximum - b.value).abs() < 1e-9);
    }

    #[test]
    fn radicand_diagnostic_flags_printed_variant() {
        let diag = girth7_radicand_diagnostic(0.01).unwrap();
        assert_eq!(diag.matrix_variant_negative, 0);
        assert!(diag.printed_variant_negative > 0);
    }

    #[test]
    fn rounding_helpers() {
        assert_eq!(format_rounded(1.0, 1.0, 4), "1");
        assert_eq!(format_rounded(0.14, 0.14, 4), "0.14");
        assert_eq!(format_rounded(0.02393, 0.024, 4), "0.0240");
        assert_eq!(format_rounded(0.03125, 0.0312, 4), "0.0312");
        assert_eq!(round_down(1.0 / 32.0, 4), 0.0312);
        assert_eq!(round_up(0.0395199, 4), 0.0396);
        assert_eq!(round_down(0.14, 4), 0.14);
    }
}
