mod common;

use common::*;
use oddgirth::graph::{self, Graph};
use oddgirth::interlacing::*;
use oddgirth::spectral::{adjacency_spectrum, perron_vector};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_partition<R: Rng>(rng: &mut R, n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut classes: Vec<Vec<usize>> = order[..t].iter().map(|&v| vec![v]).collect();
    for &v in &order[t..] {
        classes[rng.random_range(0..t)].push(v);
    }
    classes
}

#[test]
fn random_partitions_interlace() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for trial in 0..600 {
        let n = rng.random_range(2..=20);
        let p = rng.random_range(0.05..0.6);
        let g = random_connected(&mut rng, n, p);
        let t = rng.random_range(1..=5.min(n));
        let q = build_quotient(&g, random_partition(&mut rng, n, t)).unwrap();
        let cert = check_interlacing(&g, &q).unwrap();
        assert!(cert.valid, "trial {trial}: min slack {}", cert.min_slack);
        assert!(cert.min_slack >= -1e-8);
        // M = D^{-1/2} B D^{1/2}, so both carry the same spectrum
        for (a, b) in q.m_eigenvalues().unwrap().iter().zip(&q.mu) {
            assert!(close(*a, *b, 1e-7), "trial {trial}");
        }
        for s in q.row_sums() {
            assert!(close(s, q.lambda1, 1e-8), "trial {trial}");
        }
        assert!(close(q.mu[0], q.lambda1, 1e-8), "trial {trial}");
    }
}

#[test]
fn singleton_partition_reproduces_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..50 {
        let n = rng.random_range(1..=20);
        let g = random_connected(&mut rng, n, 0.3);
        let q = build_quotient(&g, (0..n).map(|v| vec![v]).collect()).unwrap();
        let s = adjacency_spectrum(&g).unwrap();
        for (a, b) in s.eigenvalues().iter().zip(&q.mu) {
            assert!(close(*a, *b, 1e-9));
        }
    }
    // P3 gives M with spectrum {√2, 0, −√2}, on which unshifted-start QR stalls
    let q = build_quotient(&graph::path(3).unwrap(), vec![vec![0], vec![1], vec![2]]).unwrap();
    let m = q.m_eigenvalues().unwrap();
    for (a, b) in m.iter().zip([2f64.sqrt(), 0.0, -(2f64.sqrt())]) {
        assert!(close(*a, b, 1e-12));
    }
}

#[test]
fn heavy_vertex_weight_at_least_average() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for trial in 0..300 {
        let n = rng.random_range(2..=16);
        let p = rng.random_range(0.0..0.6);
        let g = random_connected(&mut rng, n, p);
        let pv = perron_vector(&g).unwrap();
        let u = heavy_vertex(&g).unwrap();
        let nw = neighborhood_weights(&g, &pv);
        assert!(nw[u] >= pv.eigenvalue() / n as f64 - 1e-10, "trial {trial}");
        assert!(nw.iter().all(|&w| w <= nw[u] + 1e-12));
    }
}

fn is_bipartition_side(g: &Graph, mask: u32) -> bool {
    g.edges().all(|(u, v)| (mask >> u & 1) != (mask >> v & 1))
}

fn random_bipartite_connected<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let mut edges = Vec::new();
    for v in 1..n {
        let opposite: Vec<usize> = (0..v).filter(|&w| side[w] != side[v]).collect();
        if let Some(&w) = opposite.choose(rng) {
            edges.push((w, v));
        } else {
            // every earlier vertex is on v's side, vertex 0 included
            side[v] = !side[v];
            edges.push((0, v));
        }
    }
    for j in 1..n {
        for i in 0..j {
            if side[i] != side[j] && rng.random_bool(0.3) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn independent_sets_exhaustive_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let mut equality_cases = 0;
    for trial in 0..60 {
        let n = rng.random_range(2..=12);
        let g = if trial % 2 == 0 {
            random_connected(&mut rng, n, 0.25)
        } else {
            random_bipartite_connected(&mut rng, n)
        };
        let pv = perron_vector(&g).unwrap();
        for mask in 1u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !graph::is_independent_set(&g, &set).unwrap() {
                assert!(independent_weight_check_with(&g, &set, &pv).is_err());
                continue;
            }
            let c = independent_weight_check_with(&g, &set, &pv).unwrap();
            assert!(c.valid, "trial {trial}, set {set:?}");
            assert!(c.set_weight <= c.neighbor_weight + 1e-10);
            assert!(c.set_weight <= 0.5 + 1e-10);
            let half = (c.set_weight - 0.5).abs() <= 1e-10;
            assert_eq!(
                half,
                is_bipartition_side(&g, mask),
                "trial {trial}, set {set:?}"
            );
            assert_eq!(c.equality, c.is_bipartition);
            equality_cases += half as usize;
        }
    }
    assert!(equality_cases >= 30);
}

#[test]
fn girth7_certificates_on_families() {
    let mut graphs = vec![
        graph::folded_cube(7).unwrap(),
        graph::folded_cube(9).unwrap(),
    ];
    graphs.extend((7..=21).step_by(2).map(|k| graph::cycle(k).unwrap()));
    for g in graphs {
        let cert = girth7_certificate(&g).unwrap();
        assert!(
            cert.valid && cert.applicable,
            "{:?}",
            cert.checks.iter().find(|c| !c.holds)
        );
        assert!(cert.ratio <= cert.global_bound + 1e-12);
    }
    assert!(girth7_certificate(&graph::cycle(5).unwrap()).is_err());
    assert!(girth7_certificate(&graph::hypercube(3).unwrap()).is_err());
}

#[test]
fn girth7_certificates_on_random_graphs() {
    // sparse graphs with long odd cycles: cycles with random chords kept
    // only when the odd girth stays at least 7
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let mut done = 0;
    while done < 80 {
        let k = 2 * rng.random_range(3..=10) + 1;
        let n = k + rng.random_range(0..10);
        let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        for v in k..n {
            edges.push((rng.random_range(0..v), v));
        }
        let base = Graph::from_edges(n, edges.clone()).unwrap();
        let mut g = base;
        for _ in 0..rng.random_range(0..6) {
            let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
            if a == b {
                continue;
            }
            let mut trial = edges.clone();
            trial.push((a, b));
            let cand = Graph::from_edges(n, trial.clone()).unwrap();
            if graph::odd_girth(&cand).is_at_least(7) {
                edges = trial;
                g = cand;
            }
        }
        if !graph::odd_girth(&g).is_at_least(7) || graph::is_bipartite(&g) {
            continue;
        }
        let cert = girth7_certificate(&g).unwrap();
        assert!(
            cert.valid,
            "{g:?}: {:?}",
            cert.checks.iter().filter(|c| !c.holds).collect::<Vec<_>>()
        );
        done += 1;
    }
}
