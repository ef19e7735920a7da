//! Adjacency and signless-Laplacian spectra, Perron vectors, and the
//! closed-form spectra of F_2 Cayley graphs and strongly regular graphs.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{self, normalize_generators, Graph};

/// Eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Sorts `values` in descending order.
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            eigenvalues: values,
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Largest eigenvalue.
    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Smallest eigenvalue.
    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// The i-th largest eigenvalue, 1-based.
    pub fn nth(&self, i: usize) -> f64 {
        self.eigenvalues[i - 1]
    }

    /// Sum of `λ^p` over the spectrum.
    pub fn power_sum(&self, p: i32) -> f64 {
        self.eigenvalues.iter().map(|x| x.powi(p)).sum()
    }

    /// Groups eigenvalues closer than `tol` into `(value, multiplicity)`.
    pub fn multiplicities(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((v, m)) if (*v - x).abs() <= tol => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }
}

/// Eigenvalues of a dense symmetric matrix, descending.
pub fn symmetric_eigenvalues(matrix: DMatrix<f64>) -> Spectrum {
    let eig = SymmetricEigen::new(matrix);
    Spectrum::from_unsorted(eig.eigenvalues.iter().copied().collect())
}

/// Eigenpair of the largest eigenvalue of a dense symmetric matrix.
pub fn top_eigenpair(matrix: DMatrix<f64>) -> (f64, DVector<f64>) {
    let eig = SymmetricEigen::new(matrix);
    let (idx, &val) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("nonempty matrix");
    (val, eig.eigenvectors.column(idx).into_owned())
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut a = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

pub fn signless_laplacian_matrix(g: &Graph) -> DMatrix<f64> {
    let mut q = adjacency_matrix(g);
    for u in 0..g.n() {
        q[(u, u)] = g.degree(u) as f64;
    }
    q
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    if g.n() == 0 {
        return Err(invalid("spectrum of the null graph"));
    }
    Ok(symmetric_eigenvalues(adjacency_matrix(g)))
}

/// Spectrum of Q = A + D.
pub fn signless_laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    if g.n() == 0 {
        return Err(invalid("spectrum of the null graph"));
    }
    Ok(symmetric_eigenvalues(signless_laplacian_matrix(g)))
}

/// Positive unit eigenvector of λ₁ for a connected graph, with λ₁ itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerronVector {
    entries: Vec<f64>,
    eigenvalue: f64,
}

impl PerronVector {
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn eigenvalue(&self) -> f64 {
        self.eigenvalue
    }

    pub fn get(&self, u: usize) -> f64 {
        self.entries[u]
    }

    /// ‖ρU‖², the squared weight of a vertex set.
    pub fn weight(&self, set: &[usize]) -> f64 {
        set.iter().map(|&u| self.entries[u] * self.entries[u]).sum()
    }

    /// ‖Aν − λ₁ν‖ (Euclidean).
    pub fn residual(&self, g: &Graph) -> f64 {
        (0..g.n())
            .map(|u| {
                let av: f64 = g.neighbors(u).iter().map(|&v| self.entries[v]).sum();
                (av - self.eigenvalue * self.entries[u]).powi(2)
            })
            .sum::<f64>()
            .sqrt()
    }
}

const POWER_TOL: f64 = 1e-12;
const POWER_MAX_ITERS: usize = 100_000;
const PERRON_RESIDUAL_TOL: f64 = 1e-8;

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
}

fn rayleigh(g: &Graph, v: &[f64]) -> f64 {
    (0..g.n())
        .map(|u| v[u] * g.neighbors(u).iter().map(|&w| v[w]).sum::<f64>())
        .sum()
}

/// Perron vector by power iteration on A + I (the shift removes the ±λ₁
/// oscillation on bipartite graphs), polished by one Rayleigh-quotient
/// inverse-iteration step.
pub fn perron_vector(g: &Graph) -> Result<PerronVector> {
    let n = g.n();
    if n == 0 {
        return Err(invalid("Perron vector of the null graph"));
    }
    if !graph::is_connected(g) {
        return Err(invalid(
            "Perron vector requires a connected graph; split into components first",
        ));
    }
    if n == 1 {
        return Ok(PerronVector {
            entries: vec![1.0],
            eigenvalue: 0.0,
        });
    }

    let mut v: Vec<f64> = (0..n).map(|u| 1.0 + g.degree(u) as f64).collect();
    if g.regular_degree().is_some() {
        v.iter_mut().for_each(|x| *x = 1.0);
    }
    normalize(&mut v);
    let mut next = vec![0.0; n];
    for _ in 0..POWER_MAX_ITERS {
        for u in 0..n {
            next[u] = v[u] + g.neighbors(u).iter().map(|&w| v[w]).sum::<f64>();
        }
        normalize(&mut next);
        let step = v
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt();
        std::mem::swap(&mut v, &mut next);
        if step < POWER_TOL {
            break;
        }
    }

    let candidate = polish(g, v);
    if candidate.is_valid(g) {
        return Ok(candidate);
    }
    let (_, vec) = top_eigenpair(adjacency_matrix(g));
    let fallback = build(g, vec.iter().copied().collect());
    if fallback.is_valid(g) {
        Ok(fallback)
    } else {
        Err(Error::InternalConsistency(format!(
            "Perron vector residual {:e} exceeds tolerance",
            fallback.residual(g)
        )))
    }
}

/// One step of inverse iteration shifted by the Rayleigh quotient; the
/// unrefined vector is kept when the step does not improve the residual.
fn polish(g: &Graph, v: Vec<f64>) -> PerronVector {
    let plain = build(g, v);
    let mut shifted = adjacency_matrix(g);
    for u in 0..g.n() {
        shifted[(u, u)] -= plain.eigenvalue;
    }
    let rhs = DVector::from_column_slice(&plain.entries);
    let Some(solved) = shifted.lu().solve(&rhs) else {
        return plain;
    };
    if solved.iter().any(|x| !x.is_finite()) || solved.norm() == 0.0 {
        return plain;
    }
    let refined = build(g, solved.iter().copied().collect());
    if refined.is_valid(g) && refined.residual(g) <= plain.residual(g) {
        refined
    } else {
        plain
    }
}

fn build(g: &Graph, mut v: Vec<f64>) -> PerronVector {
    if v.iter().sum::<f64>() < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    normalize(&mut v);
    let eigenvalue = rayleigh(g, &v);
    PerronVector {
        entries: v,
        eigenvalue,
    }
}

impl PerronVector {
    fn is_valid(&self, g: &Graph) -> bool {
        self.entries.iter().all(|&x| x > 0.0) && self.residual(g) <= PERRON_RESIDUAL_TOL
    }
}

/// Spectrum of the Cayley graph of F_2^m from its characters: the vertex
/// `x` contributes `Σ_s (−1)^{x·s}` over generators `s`.
pub fn cayley_f2_spectrum(m: u32, generators: &[u64]) -> Result<Spectrum> {
    if m < 1 {
        return Err(invalid("cayley graph needs m >= 1"));
    }
    if m > graph::CAYLEY_MAX_DIM {
        return Err(Error::CapacityExceeded {
            what: "F2 dimension",
            got: m as usize,
            limit: graph::CAYLEY_MAX_DIM as usize,
        });
    }
    let gens = normalize_generators(m, generators)?;
    let values = (0..1u64 << m)
        .map(|x| {
            gens.iter()
                .map(|&s| {
                    if (x & s).count_ones() % 2 == 0 {
                        1.0
                    } else {
                        -1.0
                    }
                })
                .sum()
        })
        .collect();
    Ok(Spectrum::from_unsorted(values))
}

/// Parameters (n, k, λ, μ) of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        let p = SrgParams { n, k, lambda, mu };
        if n == 0 || k >= n {
            return Err(invalid(format!("degree {k} must be below n = {n}")));
        }
        if (k > 0 && lambda >= k) || mu > k {
            return Err(invalid(format!("inconsistent parameters {p:?}")));
        }
        let lhs = k as i128 * (k as i128 - lambda as i128 - 1);
        let rhs = (n - k - 1) as i128 * mu as i128;
        if lhs != rhs {
            return Err(invalid(format!(
                "k(k-λ-1) = {lhs} differs from (n-k-1)μ = {rhs}"
            )));
        }
        Ok(p)
    }
}

/// Distinct eigenvalues of a strongly regular graph with multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SrgSpectrum {
    pub degree: f64,
    pub theta: f64,
    pub tau: f64,
    pub theta_multiplicity: f64,
    pub tau_multiplicity: f64,
}

impl SrgSpectrum {
    /// Least eigenvalue with nonzero multiplicity.
    pub fn least(&self) -> f64 {
        if self.tau_multiplicity > 0.5 {
            self.tau
        } else if self.theta_multiplicity > 0.5 {
            self.theta
        } else {
            self.degree
        }
    }

    /// (λ₁ + λ_n)/n.
    pub fn ratio(&self, n: u64) -> f64 {
        (self.degree + self.least()) / n as f64
    }

    /// The full spectrum, when both multiplicities are integers.
    pub fn to_spectrum(&self) -> Option<Spectrum> {
        let f = self.theta_multiplicity.round();
        let g = self.tau_multiplicity.round();
        if (f - self.theta_multiplicity).abs() > 1e-9 || (g - self.tau_multiplicity).abs() > 1e-9 {
            return None;
        }
        let mut values = vec![self.degree];
        values.extend(std::iter::repeat_n(self.theta, f as usize));
        values.extend(std::iter::repeat_n(self.tau, g as usize));
        Some(Spectrum::from_unsorted(values))
    }
}

pub fn srg_spectrum(p: SrgParams) -> Result<SrgSpectrum> {
    let p = SrgParams::new(p.n, p.k, p.lambda, p.mu)?;
    let (n, k) = (p.n as f64, p.k as f64);
    let diff = p.lambda as f64 - p.mu as f64;
    let disc = diff * diff + 4.0 * (k - p.mu as f64);
    let root = disc.sqrt();
    let theta = (diff + root) / 2.0;
    let tau = (diff - root) / 2.0;
    let skew = (2.0 * k + (n - 1.0) * diff) / root;
    Ok(SrgSpectrum {
        degree: k,
        theta,
        tau,
        theta_multiplicity: ((n - 1.0) - skew) / 2.0,
        tau_multiplicity: ((n - 1.0) + skew) / 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, folded_cube, hypercube, path, star};
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn cycle_five() {
        let s = adjacency_spectrum(&cycle(5).unwrap()).unwrap();
        let expected = [
            2.0,
            2.0 * (2.0 * PI / 5.0).cos(),
            2.0 * (2.0 * PI / 5.0).cos(),
            2.0 * (4.0 * PI / 5.0).cos(),
            2.0 * (4.0 * PI / 5.0).cos(),
        ];
        for (a, b) in s.eigenvalues().iter().zip(expected) {
            assert!(close(*a, b, 1e-12));
        }
        assert!(close(
            s.largest() + s.smallest(),
            2.0 * (1.0 - (PI / 5.0).cos()),
            1e-12
        ));
    }

    #[test]
    fn complete_spectra() {
        let s = adjacency_spectrum(&complete(4).unwrap()).unwrap();
        assert!(close(s.largest(), 3.0, 1e-12));
        assert!(s.eigenvalues()[1..].iter().all(|&x| close(x, -1.0, 1e-12)));

        let s = adjacency_spectrum(&complete(100).unwrap()).unwrap();
        assert!(close((s.largest() + s.smallest()) / 100.0, 0.98, 1e-10));
        assert!(adjacency_spectrum(&Graph::empty(0)).is_err());
    }

    #[test]
    fn folded_seven_cube_extremes() {
        let s = adjacency_spectrum(&folded_cube(7).unwrap()).unwrap();
        assert!(close(s.largest(), 7.0, 1e-9));
        assert!(close(s.smallest(), -5.0, 1e-9));
    }

    #[test]
    fn signless_laplacian() {
        let q = signless_laplacian_spectrum(&cycle(4).unwrap()).unwrap();
        assert!(q.smallest().abs() < 1e-12);

        let c5 = cycle(5).unwrap();
        let q = signless_laplacian_spectrum(&c5).unwrap();
        let a = adjacency_spectrum(&c5).unwrap();
        assert!(close(q.smallest(), a.largest() + a.smallest(), 1e-8));

        let q = signless_laplacian_spectrum(&complete(3).unwrap()).unwrap();
        for (x, y) in q.eigenvalues().iter().zip([4.0, 1.0, 1.0]) {
            assert!(close(*x, y, 1e-12));
        }
    }

    #[test]
    fn perron_examples() {
        let c7 = cycle(7).unwrap();
        let v = perron_vector(&c7).unwrap();
        assert!(v
            .entries()
            .iter()
            .all(|&x| close(x, 1.0 / 7f64.sqrt(), 1e-12)));

        let p3 = perron_vector(&path(3).unwrap()).unwrap();
        let s = 2f64.sqrt();
        let norm = 2.0;
        for (x, y) in p3.entries().iter().zip([1.0 / norm, s / norm, 1.0 / norm]) {
            assert!(close(*x, y, 1e-10));
        }
        assert!(close(p3.eigenvalue(), s, 1e-12));

        let k14 = perron_vector(&star(4).unwrap()).unwrap();
        assert!(close(k14.get(0), 0.5f64.sqrt(), 1e-10));
        for u in 1..5 {
            assert!(close(k14.get(u), 0.125f64.sqrt(), 1e-10));
        }
        assert!(close(k14.eigenvalue(), 2.0, 1e-12));
    }

    #[test]
    fn perron_bipartite_and_rejections() {
        let q4 = hypercube(4).unwrap();
        let v = perron_vector(&q4).unwrap();
        assert!(v.residual(&q4) < 1e-10);
        let long_path = path(60).unwrap();
        let v = perron_vector(&long_path).unwrap();
        assert!(v.entries().iter().all(|&x| x > 0.0));
        assert!(v.residual(&long_path) <= 1e-8);
        let split = cycle(3).unwrap().disjoint_union(&cycle(4).unwrap());
        assert!(matches!(
            perron_vector(&split),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn cayley_characters_match_dense() {
        let gens = crate::graph::folded_cube_generators(7).unwrap();
        let formula = cayley_f2_spectrum(6, &gens).unwrap();
        let dense = adjacency_spectrum(&folded_cube(7).unwrap()).unwrap();
        for (a, b) in formula.eigenvalues().iter().zip(dense.eigenvalues()) {
            assert!(close(*a, *b, 1e-8));
        }
        // weight-w character value is (6 - 2w) + (-1)^w
        let mult = formula.multiplicities(1e-9);
        assert_eq!(mult.last().copied(), Some((-5.0, 7)));

        let edge = cayley_f2_spectrum(1, &[1]).unwrap();
        assert_eq!(edge.eigenvalues(), &[1.0, -1.0]);
        assert!(cayley_f2_spectrum(3, &[0, 1]).is_err());
    }

    #[test]
    fn srg_examples() {
        let hs = srg_spectrum(SrgParams::new(100, 22, 0, 6).unwrap()).unwrap();
        assert_eq!((hs.degree, hs.theta, hs.tau), (22.0, 2.0, -8.0));
        assert_eq!((hs.theta_multiplicity, hs.tau_multiplicity), (77.0, 22.0));
        assert!(close(hs.ratio(100), 0.14, 1e-15));

        let c5 = srg_spectrum(SrgParams::new(5, 2, 0, 1).unwrap()).unwrap();
        assert!(close(c5.theta, (5f64.sqrt() - 1.0) / 2.0, 1e-15));
        assert!(close(c5.tau, (-(5f64.sqrt()) - 1.0) / 2.0, 1e-15));
        let dense = adjacency_spectrum(&cycle(5).unwrap()).unwrap();
        for (a, b) in c5
            .to_spectrum()
            .unwrap()
            .eigenvalues()
            .iter()
            .zip(dense.eigenvalues())
        {
            assert!(close(*a, *b, 1e-12));
        }

        let k4 = srg_spectrum(SrgParams::new(4, 3, 2, 0).unwrap()).unwrap();
        assert_eq!(k4.least(), -1.0);
        let dense = adjacency_spectrum(&complete(4).unwrap()).unwrap();
        for (a, b) in k4
            .to_spectrum()
            .unwrap()
            .eigenvalues()
            .iter()
            .zip(dense.eigenvalues())
        {
            assert!(close(*a, *b, 1e-12));
        }

        assert!(SrgParams::new(10, 3, 0, 2).is_err());
        assert!(SrgParams::new(5, 5, 0, 1).is_err());
    }
}
