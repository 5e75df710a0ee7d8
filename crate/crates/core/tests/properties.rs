use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use lafr_core::algebra::{
    char_poly, exact_div, integer_roots, kernel_basis, poly_gcd, project, IntMatrix, IntPolynomial,
};
use lafr_core::campaign::{CampaignOptions, CampaignRegistry};
use lafr_core::enumerate::connected_graphs;
use lafr_core::graph::{
    cartesian_product, complement, disjoint_union, is_connected, join, laplacian, parse_graph6, spanning_tree_count,
    to_graph6, Graph,
};
use lafr_core::oracle::{laplacian_spectrum, transition_matrix};
use lafr_core::revival::{all_lafr_pairs, RevivalStatus};
use lafr_core::spectral::SpectralContext;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, m)| {
        let bits = n * (n - 1) / 2;
        Graph::from_bitmask(n, if bits >= 64 { m } else { m & ((1u64 << bits) - 1) })
    })
}

/// Random graphs beyond the 11-vertex bitmask limit.
fn edge_sampled(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.05f64..0.6, any::<u64>()).prop_map(|(n, p, seed)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(p)).collect();
        Graph::new(n, edges).unwrap()
    })
}

fn kron_sum(x: &IntMatrix, y: &IntMatrix) -> Vec<BigInt> {
    let (m, k) = (x.rows(), y.rows());
    let mut out = vec![BigInt::zero(); m * m * k * k];
    let dim = m * k;
    for i in 0..m {
        for j in 0..k {
            for i2 in 0..m {
                for j2 in 0..k {
                    let mut v = BigInt::zero();
                    if j == j2 {
                        v += x.get(i, i2);
                    }
                    if i == i2 {
                        v += y.get(j, j2);
                    }
                    out[(i * k + j) * dim + i2 * k + j2] = v;
                }
            }
        }
    }
    out
}

#[test]
fn graph6_round_trips_on_connected_corpus() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn campaigns_are_worker_independent() {
    let r = CampaignRegistry::default();
    let opts = |w| CampaignOptions { workers: Some(w), tree_n_max: Some(9) };
    let one = r.run("trees", &opts(1)).unwrap();
    let four = r.run("trees", &opts(4)).unwrap();
    assert!(one.same_outcome(&four));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laplacian_basics(g in graph(9)) {
        let n = g.order();
        let l = g.laplacian_i64();
        for i in 0..n {
            prop_assert_eq!(l[i * n..(i + 1) * n].iter().sum::<i64>(), 0);
            for j in 0..n {
                prop_assert_eq!(l[i * n + j], l[j * n + i]);
            }
        }
        let spec = laplacian_spectrum(&g).unwrap();
        prop_assert!(spec.values().iter().all(|&x| x >= -1e-9));
    }

    #[test]
    fn join_is_complement_of_union_of_complements(x in graph(6), y in graph(6)) {
        let via = complement(&disjoint_union(&complement(&x), &complement(&y)));
        prop_assert_eq!(join(&x, &y), via);
    }

    #[test]
    fn cartesian_laplacian_is_kronecker_sum(x in graph(4), y in graph(4)) {
        let l = laplacian(&cartesian_product(&x, &y));
        prop_assert_eq!(l.entries().to_vec(), kron_sum(&laplacian(&x), &laplacian(&y)));
    }

    #[test]
    fn matrix_tree_and_char_poly(g in graph(8)) {
        let n = g.order();
        let q = spanning_tree_count(&g);
        let p = char_poly(&laplacian(&g)).unwrap();
        prop_assert!(p.coeff(0).is_zero());
        let (c1, nq) = (p.coeff(1), &q * BigInt::from(n));
        prop_assert_eq!(c1.magnitude(), nq.magnitude());
        let spec = laplacian_spectrum(&g).unwrap();
        let scale = (2.0 * n as f64).powi(n as i32);
        for &mu in spec.values() {
            prop_assert!(p.eval_f64(mu).abs() < 1e-6 * scale.max(1.0));
        }
        if is_connected(&g) {
            let prod: f64 = spec.values().iter().filter(|&&x| x > 1e-6).product();
            let qf: f64 = q.to_string().parse().unwrap();
            prop_assert!((prod / n as f64 - qf).abs() <= 1e-6 * qf);
        }
    }

    #[test]
    fn gcd_degree_identity(a in proptest::collection::vec(-4i64..=4, 1..6), b in proptest::collection::vec(-4i64..=4, 1..6)) {
        let (p, q) = (IntPolynomial::from_i64(&a), IntPolynomial::from_i64(&b));
        prop_assume!(!p.is_zero() && !q.is_zero());
        let g = poly_gcd(&p, &q).unwrap();
        let quotient = exact_div(&p, &g).unwrap();
        prop_assert_eq!(g.degree().unwrap() + quotient.degree().unwrap(), p.degree().unwrap());
    }

    #[test]
    fn kernel_dimensions_and_idempotent_sums(g in graph(7)) {
        let n = g.order();
        let l = laplacian(&g);
        let p = char_poly(&l).unwrap();
        let roots = integer_roots(&p, 0, n as i64).unwrap();
        let rat = l.to_rational();
        let mut bases = Vec::new();
        for (&mu, &mult) in &roots {
            let basis = kernel_basis(&rat.shifted(&BigRational::from_integer(mu.into())));
            prop_assert_eq!(basis.len(), mult);
            bases.push(basis);
        }
        if roots.values().sum::<usize>() == n {
            for a in 0..n {
                let mut e = vec![BigRational::zero(); n];
                e[a] = BigRational::from_integer(1.into());
                let mut sum = vec![BigRational::zero(); n];
                for basis in &bases {
                    for (s, x) in sum.iter_mut().zip(project(basis, &e).unwrap()) {
                        *s += x;
                    }
                }
                prop_assert_eq!(sum, e);
            }
        }
    }

    #[test]
    fn strong_cospectrality_is_symmetric(g in graph(7)) {
        let ctx = SpectralContext::new(&g);
        let n = g.order();
        for a in 0..n {
            for b in a + 1..n {
                let (ab, ba) = (ctx.strong_cospectral(a, b), ctx.strong_cospectral(b, a));
                match (ab, ba) {
                    (Ok(Some(x)), Ok(Some(y))) => prop_assert!(x.plus == y.plus && x.minus == y.minus),
                    (Ok(None), Ok(None)) | (Err(_), Err(_)) => {}
                    (x, y) => prop_assert!(false, "asymmetric: {:?} vs {:?}", x, y),
                }
            }
        }
    }

    #[test]
    fn decision_invariants(g in graph(8)) {
        for d in all_lafr_pairs(&g) {
            let gcd = d.g.unwrap();
            match d.status {
                RevivalStatus::Proper => {
                    let phase = d.phase.unwrap();
                    prop_assert!(gcd >= 2 && phase.k % gcd != 0);
                    prop_assert_eq!(d.earliest_time.unwrap(), lafr_core::time::PiMultiple::two_pi_over(gcd));
                    prop_assert_eq!(d.is_pst.unwrap(), 2 * phase.k == gcd);
                }
                RevivalStatus::PeriodicOnly => prop_assert!(d.partition.as_ref().unwrap().minus.iter().all(|&m| (m as u64).is_multiple_of(gcd))),
                other => prop_assert!(false, "unexpected status {:?}", other),
            }
        }
    }

    #[test]
    fn transition_matrices_are_unitary_and_symmetric(g in edge_sampled(50), t in 0.0f64..10.0) {
        let u = transition_matrix(&g, t).unwrap();
        prop_assert!(u.unitarity_defect() < 1e-9);
        prop_assert!(u.symmetry_defect() < 1e-9);
        let id = transition_matrix(&g, 0.0).unwrap();
        for i in 0..g.order() {
            for j in 0..g.order() {
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((id.get(i, j) - Complex64::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn group_property(g in graph(9), s in 0.0f64..5.0, t in 0.0f64..5.0) {
        let lhs = transition_matrix(&g, s).unwrap().mul(&transition_matrix(&g, t).unwrap());
        prop_assert!(lhs.distance(&transition_matrix(&g, s + t).unwrap()) < 1e-8);
    }

    #[test]
    fn product_walk_is_tensor_product(x in graph(4), y in graph(4), t in 0.0f64..5.0) {
        let u = transition_matrix(&cartesian_product(&x, &y), t).unwrap();
        let (ux, uy) = (transition_matrix(&x, t).unwrap(), transition_matrix(&y, t).unwrap());
        let k = y.order();
        for i in 0..x.order() * k {
            for j in 0..x.order() * k {
                let want = ux.get(i / k, j / k) * uy.get(i % k, j % k);
                prop_assert!((u.get(i, j) - want).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn numeric_spectrum_matches_integer_roots(g in graph(8)) {
        let ctx = SpectralContext::new(&g);
        prop_assume!(ctx.is_integral());
        let mut exact: Vec<f64> = Vec::new();
        for (&mu, &m) in ctx.integer_eigenvalues() {
            exact.extend(std::iter::repeat_n(mu as f64, m));
        }
        let spec = laplacian_spectrum(&g).unwrap();
        for (x, y) in spec.values().iter().zip(&exact) {
            prop_assert!((x - y).abs() < 1e-8);
        }
    }
}
