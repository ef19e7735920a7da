//! Perron-weighted quotient matrices and the certificates built on them.
//!
//! For a partition V = V₁ ⊔ … ⊔ V_t of a connected graph with Perron
//! vector ν, the weight-characteristic matrix S has `S[u][i] = ν_u` when
//! `u ∈ V_i`. With D = SᵀS (the class weights ‖ρV_i‖²), the symmetric
//! quotient B = D^{-1/2} SᵀAS D^{-1/2} and the weight-quotient matrix
//! M = D⁻¹SᵀAS are similar, and their eigenvalues interlace those of A.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::error::{invalid, Error, Result};
use crate::graph::{self, Graph, OddGirth};
use crate::spectral::{self, PerronVector, Spectrum};

/// Slack used for all certificate inequalities.
pub const CERT_TOL: f64 = 1e-8;
const WEIGHT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPartition {
    classes: Vec<Vec<usize>>,
    weights: PerronVector,
    class_norms: Vec<f64>,
}

impl WeightedPartition {
    /// Validates `classes` as a partition of a connected graph and weights
    /// it with the graph's Perron vector.
    pub fn new(g: &Graph, classes: Vec<Vec<usize>>) -> Result<Self> {
        validate_partition(g.n(), &classes)?;
        let weights = spectral::perron_vector(g)?;
        Ok(Self::from_parts(classes, weights))
    }

    /// As [`WeightedPartition::new`] with a precomputed Perron vector.
    pub fn with_weights(
        g: &Graph,
        classes: Vec<Vec<usize>>,
        weights: PerronVector,
    ) -> Result<Self> {
        if weights.entries().len() != g.n() {
            return Err(invalid("weight vector length differs from vertex count"));
        }
        validate_partition(g.n(), &classes)?;
        Ok(Self::from_parts(classes, weights))
    }

    fn from_parts(classes: Vec<Vec<usize>>, weights: PerronVector) -> Self {
        let class_norms = classes.iter().map(|c| weights.weight(c)).collect();
        WeightedPartition {
            classes,
            weights,
            class_norms,
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn weights(&self) -> &PerronVector {
        &self.weights
    }

    /// ‖ρV_i‖² for each class.
    pub fn class_norms(&self) -> &[f64] {
        &self.class_norms
    }
}

fn validate_partition(n: usize, classes: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; n];
    for (i, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(invalid(format!("partition class {i} is empty")));
        }
        for &v in class {
            if v >= n {
                return Err(invalid(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(invalid(format!("vertex {v} appears in two classes")));
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(invalid(format!(
            "vertex {v} is not covered by the partition"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrices {
    /// Weight-quotient matrix D⁻¹SᵀAS (not symmetric in general).
    pub m: DMatrix<f64>,
    /// Symmetric quotient D^{-1/2}SᵀAS D^{-1/2}.
    pub b: DMatrix<f64>,
    /// Eigenvalues of B, descending.
    pub mu: Vec<f64>,
    pub class_norms: Vec<f64>,
    pub lambda1: f64,
}

impl QuotientMatrices {
    pub fn size(&self) -> usize {
        self.mu.len()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.m.row_iter().map(|r| r.sum()).collect()
    }

    /// Real parts of the eigenvalues of M, descending, from a real Schur
    /// decomposition. Spectra symmetric about zero can stall the QR
    /// sweeps, so a failed attempt is retried on M + sI for a few shifts s.
    pub fn m_eigenvalues(&self) -> Result<Vec<f64>> {
        let t = self.m.nrows();
        let scale = self.m.amax().max(1.0);
        for shift in [0.0, 0.5371, -1.2913, 2.6931] {
            let s = shift * scale;
            let shifted = &self.m + DMatrix::<f64>::identity(t, t) * s;
            if let Some(schur) = nalgebra::Schur::try_new(shifted, f64::EPSILON, 10_000) {
                let mut values: Vec<f64> = schur
                    .complex_eigenvalues()
                    .iter()
                    .map(|z| z.re - s)
                    .collect();
                values.sort_by(|a, b| b.total_cmp(a));
                return Ok(values);
            }
        }
        Err(Error::InternalConsistency(
            "Schur iteration on M did not converge".into(),
        ))
    }

    pub fn m_rows(&self) -> Vec<Vec<f64>> {
        self.m
            .row_iter()
            .map(|r| r.iter().copied().collect())
            .collect()
    }
}

/// M and B of a partition of a connected graph.
pub fn build_quotient(g: &Graph, partition: Vec<Vec<usize>>) -> Result<QuotientMatrices> {
    if !graph::is_connected(g) {
        return Err(invalid("quotient matrices need a connected graph"));
    }
    let wp = WeightedPartition::new(g, partition)?;
    Ok(quotient_of(g, &wp))
}

pub fn quotient_of(g: &Graph, wp: &WeightedPartition) -> QuotientMatrices {
    let t = wp.classes.len();
    let mut class_of = vec![0; g.n()];
    for (i, class) in wp.classes.iter().enumerate() {
        for &v in class {
            class_of[v] = i;
        }
    }
    let nu = wp.weights.entries();
    // SᵀAS
    let mut w = DMatrix::<f64>::zeros(t, t);
    for (u, v) in g.edges() {
        let x = nu[u] * nu[v];
        w[(class_of[u], class_of[v])] += x;
        w[(class_of[v], class_of[u])] += x;
    }
    let d = &wp.class_norms;
    let m = DMatrix::from_fn(t, t, |i, j| w[(i, j)] / d[i]);
    let b = DMatrix::from_fn(t, t, |i, j| w[(i, j)] / (d[i] * d[j]).sqrt());
    let mu = spectral::symmetric_eigenvalues(b.clone())
        .eigenvalues()
        .to_vec();
    QuotientMatrices {
        m,
        b,
        mu,
        class_norms: d.clone(),
        lambda1: wp.weights.eigenvalue(),
    }
}

/// One named inequality with its slack; `holds` iff `slack >= -tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub slack: f64,
    pub holds: bool,
}

impl Check {
    fn new(name: impl Into<String>, slack: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            slack,
            holds: slack >= -tol,
        }
    }

    fn equal(name: impl Into<String>, a: f64, b: f64, tol: f64) -> Self {
        Check::new(name, -(a - b).abs(), tol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterlacingCertificate {
    pub n: usize,
    pub t: usize,
    pub lambda: Vec<f64>,
    pub mu: Vec<f64>,
    /// λ_i − μ_i for i = 1..t.
    pub upper_slacks: Vec<f64>,
    /// μ_{t+1−i} − λ_{n+1−i} for i = 1..t.
    pub lower_slacks: Vec<f64>,
    /// μ_t − λ_n.
    pub least_gap: f64,
    pub min_slack: f64,
    pub valid: bool,
}

/// Checks λ_i ≥ μ_i and λ_{n+1−i} ≤ μ_{t+1−i} for i = 1..t.
pub fn check_interlacing(g: &Graph, q: &QuotientMatrices) -> Result<InterlacingCertificate> {
    let spectrum = spectral::adjacency_spectrum(g)?;
    Ok(interlacing_against(&spectrum, q))
}

pub fn interlacing_against(spectrum: &Spectrum, q: &QuotientMatrices) -> InterlacingCertificate {
    let lambda = spectrum.eigenvalues().to_vec();
    let (n, t) = (lambda.len(), q.mu.len());
    let upper_slacks: Vec<f64> = (0..t).map(|i| lambda[i] - q.mu[i]).collect();
    let lower_slacks: Vec<f64> = (0..t)
        .map(|i| q.mu[t - 1 - i] - lambda[n - 1 - i])
        .collect();
    let min_slack = upper_slacks
        .iter()
        .chain(&lower_slacks)
        .copied()
        .fold(f64::INFINITY, f64::min);
    InterlacingCertificate {
        n,
        t,
        least_gap: q.mu[t - 1] - lambda[n - 1],
        valid: min_slack >= -CERT_TOL,
        lambda,
        mu: q.mu.clone(),
        upper_slacks,
        lower_slacks,
        min_slack,
    }
}

/// ‖ρN(u)‖² for every vertex.
pub fn neighborhood_weights(g: &Graph, weights: &PerronVector) -> Vec<f64> {
    (0..g.n()).map(|u| weights.weight(g.neighbors(u))).collect()
}

/// A vertex maximizing ‖ρN(u)‖² (smallest index among near-ties); such
/// a vertex always has ‖ρN(u)‖² ≥ λ₁/n.
pub fn heavy_vertex(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(invalid("heavy vertex needs at least 2 vertices"));
    }
    let weights = spectral::perron_vector(g)?;
    Ok(heavy_vertex_with(g, &weights))
}

pub fn heavy_vertex_with(g: &Graph, weights: &PerronVector) -> usize {
    let nw = neighborhood_weights(g, weights);
    let max = nw.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    nw.iter().position(|&w| w >= max - 1e-12).unwrap()
}

/// Outcome of comparing an independent set S with the set T of vertices
/// having a neighbor in S.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndependentSetCertificate {
    pub set: Vec<usize>,
    pub neighbors: Vec<usize>,
    /// ‖ρS‖²
    pub set_weight: f64,
    /// ‖ρT‖²
    pub neighbor_weight: f64,
    /// ‖ρS‖² ≤ ‖ρT‖²
    pub dominated: bool,
    /// ‖ρS‖² ≤ ½‖ν‖²
    pub at_most_half: bool,
    /// ‖ρS‖² = ‖ρT‖² within tolerance.
    pub equality: bool,
    /// {S, T} is a bipartition of the graph.
    pub is_bipartition: bool,
    pub valid: bool,
}

pub fn independent_weight_check(g: &Graph, set: &[usize]) -> Result<IndependentSetCertificate> {
    let weights = spectral::perron_vector(g)?;
    independent_weight_check_with(g, set, &weights)
}

pub fn independent_weight_check_with(
    g: &Graph,
    set: &[usize],
    weights: &PerronVector,
) -> Result<IndependentSetCertificate> {
    if !graph::is_independent_set(g, set)? {
        return Err(invalid("vertex set is not independent"));
    }
    let mut in_s = vec![false; g.n()];
    set.iter().for_each(|&v| in_s[v] = true);
    let mut set: Vec<usize> = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let neighbors: Vec<usize> = (0..g.n())
        .filter(|&v| g.neighbors(v).iter().any(|&w| in_s[w]))
        .collect();
    let mut in_t = vec![false; g.n()];
    neighbors.iter().for_each(|&v| in_t[v] = true);

    let set_weight = weights.weight(&set);
    let neighbor_weight = weights.weight(&neighbors);
    let total = weights.weight(&(0..g.n()).collect::<Vec<_>>());
    let covers = (0..g.n()).all(|v| in_s[v] || in_t[v]);
    let is_bipartition = covers
        && neighbors
            .iter()
            .all(|&v| g.neighbors(v).iter().all(|&w| in_s[w]));
    let dominated = set_weight <= neighbor_weight + WEIGHT_TOL;
    let at_most_half = set_weight <= 0.5 * total + WEIGHT_TOL;
    let equality = (set_weight - neighbor_weight).abs() <= WEIGHT_TOL;
    Ok(IndependentSetCertificate {
        valid: dominated && at_most_half && (equality == is_bipartition || set.is_empty()),
        set,
        neighbors,
        set_weight,
        neighbor_weight,
        dominated,
        at_most_half,
        equality,
        is_bipartition,
    })
}

/// Certificate that the three-class distance partition around a heavy
/// vertex bounds (λ₁+λ_n)/n by the odd-girth-7 bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Girth7Certificate {
    pub n: usize,
    pub odd_girth: OddGirth,
    pub vertex: usize,
    pub class_sizes: Vec<usize>,
    pub applicable: bool,
    pub reason: Option<String>,
    pub lambda1: f64,
    pub lambdan: f64,
    /// ‖ρV₁‖²
    pub delta: f64,
    /// ‖ρV₂‖²
    pub alpha: f64,
    pub quotient: Vec<Vec<f64>>,
    pub mu: Vec<f64>,
    /// Least quotient eigenvalue from the closed form in (δ, α, λ₁).
    pub closed_form_least: Option<f64>,
    /// (λ₁+λ_n)/n.
    pub ratio: f64,
    /// (λ₁ + μ_t)/n, which interlacing places above `ratio`.
    pub ratio_bound: f64,
    /// δ·(1 + μ_t/λ₁), which dominates `ratio_bound` since λ₁/n ≤ δ.
    pub objective: Option<f64>,
    pub global_bound: f64,
    pub checks: Vec<Check>,
    pub valid: bool,
}

/// The odd-girth-7 certificate: heavy vertex, distance partition
/// V₁ = N(u), V₂ = {u} ∪ (distance 2), V₃ = the rest, and its quotient.
pub fn girth7_certificate(g: &Graph) -> Result<Girth7Certificate> {
    if !graph::is_connected(g) {
        return Err(invalid("graph is not connected"));
    }
    let odd = graph::odd_girth(g);
    match odd {
        OddGirth::Infinite => return Err(invalid("graph is bipartite")),
        OddGirth::Finite(k) if k < 7 => {
            return Err(invalid(format!("odd girth {k} < 7")));
        }
        OddGirth::Finite(_) => {}
    }
    let weights = spectral::perron_vector(g)?;
    let u = heavy_vertex_with(g, &weights);
    certify_distance_partition(g, odd, weights, u)
}

/// Distance classes around `u`: `[V₁, V₂, V₃]`, or `[V₁, V₂]` when no
/// vertex lies at distance 3 or more.
pub fn distance_partition(g: &Graph, u: usize) -> Vec<Vec<usize>> {
    let dist = g.distances_from(u);
    let mut classes = vec![Vec::new(), Vec::new(), Vec::new()];
    for (v, d) in dist.iter().enumerate() {
        match d {
            Some(1) => classes[0].push(v),
            Some(0) | Some(2) => classes[1].push(v),
            _ => classes[2].push(v),
        }
    }
    if classes[2].is_empty() {
        classes.pop();
    }
    classes
}

pub(crate) fn certify_distance_partition(
    g: &Graph,
    odd_girth: OddGirth,
    weights: PerronVector,
    u: usize,
) -> Result<Girth7Certificate> {
    let n = g.n();
    let spectrum = spectral::adjacency_spectrum(g)?;
    let (lambda1, lambdan) = (spectrum.largest(), spectrum.smallest());
    let classes = distance_partition(g, u);
    let class_sizes = classes.iter().map(Vec::len).collect();
    let wp = WeightedPartition::with_weights(g, classes, weights)?;
    let q = quotient_of(g, &wp);
    let (delta, alpha) = (wp.class_norms[0], wp.class_norms[1]);
    let interlacing = interlacing_against(&spectrum, &q);
    let least = *q.mu.last().unwrap();
    let ratio = (lambda1 + lambdan) / n as f64;
    let ratio_bound = (lambda1 + least) / n as f64;
    let global_bound = bounds::girth7_upper_bound()?.value;

    let mut checks = vec![
        Check::new("interlacing", interlacing.min_slack, CERT_TOL),
        Check::new(
            "least quotient eigenvalue >= lambda_n",
            least - lambdan,
            CERT_TOL,
        ),
        Check::new("ratio <= ratio_bound", ratio_bound - ratio, CERT_TOL),
        Check::new(
            "heavy vertex: delta >= lambda1/n",
            delta - lambda1 / n as f64,
            WEIGHT_TOL,
        ),
    ];
    for (i, s) in q.row_sums().iter().enumerate() {
        checks.push(Check::equal(
            format!("row {} sums to lambda1", i + 1),
            *s,
            lambda1,
            CERT_TOL,
        ));
    }

    if q.size() < 3 {
        checks.retain(|c| c.name != "heavy vertex: delta >= lambda1/n" || c.holds);
        let valid = checks.iter().all(|c| c.holds);
        return Ok(Girth7Certificate {
            n,
            odd_girth,
            vertex: u,
            class_sizes,
            applicable: false,
            reason: Some("no vertex at distance >= 3 from the chosen vertex; three-class form not applicable".into()),
            lambda1,
            lambdan,
            delta,
            alpha,
            quotient: q.m_rows(),
            mu: q.mu.clone(),
            closed_form_least: None,
            ratio,
            ratio_bound,
            objective: None,
            global_bound,
            checks,
            valid,
        });
    }

    let m = &q.m;
    checks.push(Check::equal("M11 = 0", m[(0, 0)], 0.0, CERT_TOL));
    checks.push(Check::equal("M13 = 0", m[(0, 2)], 0.0, CERT_TOL));
    checks.push(Check::equal("M31 = 0", m[(2, 0)], 0.0, CERT_TOL));
    checks.push(Check::equal(
        "M21 = lambda1 * delta / alpha",
        m[(1, 0)],
        lambda1 * delta / alpha,
        CERT_TOL,
    ));
    let model = bounds::girth7_quotient(delta, alpha, lambda1);
    let model_gap = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| (m[(i, j)] - model[i][j]).abs())
        .fold(0.0, f64::max);
    checks.push(Check::new(
        "M matches the (lambda1, delta, alpha) form",
        -model_gap,
        CERT_TOL,
    ));
    checks.push(Check::new("delta < alpha", alpha - delta, 0.0));
    checks.push(Check::new("alpha < 1/2", 0.5 - alpha, 0.0));

    let (closed_form_least, objective) = match bounds::girth7_least_eigenvalue(delta, alpha) {
        Ok(l) => {
            let closed = l * lambda1;
            let objective = delta * (1.0 + l);
            checks.push(Check::equal(
                "closed-form least eigenvalue matches eigensolve",
                closed,
                least,
                CERT_TOL,
            ));
            checks.push(Check::new(
                "ratio_bound <= objective(delta, alpha)",
                objective - ratio_bound,
                CERT_TOL,
            ));
            checks.push(Check::new(
                "objective <= global bound",
                global_bound - objective,
                CERT_TOL,
            ));
            (Some(closed), Some(objective))
        }
        Err(e) => {
            checks.push(Check::new(format!("objective defined ({e})"), -1.0, 0.0));
            (None, None)
        }
    };
    checks.push(Check::new(
        "ratio_bound <= global bound",
        global_bound - ratio_bound,
        CERT_TOL,
    ));

    let valid = checks.iter().all(|c| c.holds);
    Ok(Girth7Certificate {
        n,
        odd_girth,
        vertex: u,
        class_sizes,
        applicable: true,
        reason: None,
        lambda1,
        lambdan,
        delta,
        alpha,
        quotient: q.m_rows(),
        mu: q.mu.clone(),
        closed_form_least,
        ratio,
        ratio_bound,
        objective,
        global_bound,
        checks,
        valid,
    })
}

/// Any of the certificates, tagged for serialization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "certificate", rename_all = "snake_case")]
pub enum Certificate {
    Interlacing(InterlacingCertificate),
    IndependentSet(IndependentSetCertificate),
    Girth7(Girth7Certificate),
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        match self {
            Certificate::Interlacing(c) => c.valid,
            Certificate::IndependentSet(c) => c.valid,
            Certificate::Girth7(c) => c.valid,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, folded_cube, path, star};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn single_class_is_lambda1() {
        let g = path(5).unwrap();
        let q = build_quotient(&g, vec![(0..5).collect()]).unwrap();
        assert!(close(q.m[(0, 0)], 3f64.sqrt(), 1e-10));
        assert!(close(q.mu[0], 3f64.sqrt(), 1e-10));
    }

    #[test]
    fn singleton_partition_is_adjacency() {
        let g = star(3).unwrap();
        let q = build_quotient(&g, (0..4).map(|v| vec![v]).collect()).unwrap();
        let a = spectral::adjacency_matrix(&g);
        assert!((&q.b - &a).abs().max() < 1e-12);
        let cert = check_interlacing(&g, &q).unwrap();
        assert!(cert.valid);
        assert!(cert.upper_slacks.iter().all(|s| s.abs() < 1e-10));
    }

    #[test]
    fn folded_cube_distance_quotient() {
        let g = folded_cube(7).unwrap();
        let q = build_quotient(&g, distance_partition(&g, 0)).unwrap();
        let expected = [
            [0.0, 7.0, 0.0],
            [49.0 / 22.0, 0.0, 105.0 / 22.0],
            [0.0, 3.0, 4.0],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert!(close(q.m[(i, j)], expected[i][j], 1e-10));
            }
        }
        assert!(close(q.mu[2], -4.84052255, 1e-7));
        let cert = check_interlacing(&g, &q).unwrap();
        assert!(cert.valid);
        assert!(close(cert.least_gap, -4.84052255 + 5.0, 1e-7));
        let m_eigs = q.m_eigenvalues().unwrap();
        for (a, b) in m_eigs.iter().zip(&q.mu) {
            assert!(close(*a, *b, 1e-8));
        }
    }

    #[test]
    fn partition_validation() {
        let g = cycle(5).unwrap();
        assert!(build_quotient(&g, vec![vec![0, 1], vec![1, 2, 3, 4]]).is_err());
        assert!(build_quotient(&g, vec![vec![0, 1], vec![2, 3]]).is_err());
        assert!(build_quotient(&g, vec![vec![0, 1, 2, 3, 4], vec![]]).is_err());
        let split = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap());
        assert!(build_quotient(&split, vec![(0..6).collect()]).is_err());
    }

    #[test]
    fn heavy_vertices() {
        assert_eq!(heavy_vertex(&cycle(7).unwrap()).unwrap(), 0);
        assert_eq!(heavy_vertex(&star(4).unwrap()).unwrap(), 0);
        let w = spectral::perron_vector(&star(4).unwrap()).unwrap();
        assert!(close(w.weight(&[1, 2, 3, 4]), 0.5, 1e-10));
        // P3: both an end and the middle have ‖ρN(u)‖² = 1/2; the tie goes to 0
        let p3 = path(3).unwrap();
        let w = spectral::perron_vector(&p3).unwrap();
        let nw = neighborhood_weights(&p3, &w);
        assert!(close(nw[0], 0.5, 1e-10) && close(nw[1], 0.5, 1e-10));
        assert_eq!(heavy_vertex(&p3).unwrap(), 0);
        assert!(nw[0] >= 2f64.sqrt() / 3.0);
        assert!(heavy_vertex(&complete(1).unwrap()).is_err());
    }

    #[test]
    fn independent_set_examples() {
        let c6 = independent_weight_check(&cycle(6).unwrap(), &[0, 2, 4]).unwrap();
        assert!(c6.equality && c6.is_bipartition && c6.valid);

        let c5 = independent_weight_check(&cycle(5).unwrap(), &[0, 2]).unwrap();
        assert!(!c5.equality && c5.valid);
        assert!(close(c5.set_weight, 0.4, 1e-12));

        let f7 = folded_cube(7).unwrap();
        let c = independent_weight_check(&f7, f7.neighbors(0)).unwrap();
        assert!(c.valid && !c.equality && c.set_weight < c.neighbor_weight);

        assert!(independent_weight_check(&cycle(5).unwrap(), &[0, 1]).is_err());
    }

    #[test]
    fn girth7_certificates() {
        let c = girth7_certificate(&folded_cube(7).unwrap()).unwrap();
        assert!(c.valid && c.applicable);
        assert!(close(c.delta, 7.0 / 64.0, 1e-10));
        assert!(close(c.alpha, 22.0 / 64.0, 1e-10));
        assert!(close(*c.mu.last().unwrap(), -4.84052255, 1e-7));
        assert!(close(c.ratio_bound, 0.0337418351514968, 1e-9));

        let c = girth7_certificate(&cycle(7).unwrap()).unwrap();
        assert!(c.valid);
        assert!(close(c.delta, 2.0 / 7.0, 1e-10));
        assert!(close(c.alpha, 3.0 / 7.0, 1e-10));

        assert!(girth7_certificate(&cycle(5).unwrap()).is_err());
        assert!(girth7_certificate(&cycle(8).unwrap()).is_err());
    }

    #[test]
    fn two_class_fallback() {
        let g = cycle(5).unwrap();
        let w = spectral::perron_vector(&g).unwrap();
        let c = certify_distance_partition(&g, OddGirth::Finite(5), w, 0).unwrap();
        assert!(!c.applicable);
        assert_eq!(c.class_sizes, vec![2, 3]);
        assert!(c.reason.is_some());
    }
}
