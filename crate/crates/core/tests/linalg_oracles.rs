//! Solvers checked against path and cycle enumeration on small digraphs.

use proptest::collection::vec;
use proptest::option;
use proptest::prelude::*;
use tropos::linalg::{
    closure, cycle_mean_eigenvalue, default_max_iter, eigenpair, jacobi_step, solve_gauss_seidel, solve_jacobi, Matrix,
};
use tropos::semiring::{Boolean, ExtReal, Idempotent, MaxPlus, MinPlus, Semiring};

/// Edge weights `w[u][v]` for `u → v`.
type Graph = Vec<Vec<Option<i32>>>;

fn graph(max_n: usize, weights: std::ops::Range<i32>) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        vec(option::weighted(0.4, weights.clone()), n * n).prop_map(move |w| w.chunks(n).map(<[_]>::to_vec).collect())
    })
}

fn adjacency<S: Semiring<Elem = ExtReal>>(g: &Graph) -> Matrix<S> {
    Matrix::from_rows(
        g.iter()
            .map(|row| row.iter().map(|w| w.map_or(S::zero(), |x| ExtReal::new(f64::from(x)))).collect())
            .collect(),
    )
    .unwrap()
}

/// Shortest weight from `s` to every node using at most `max_edges` edges,
/// enumerating simple paths (enough, since weights are nonnegative).
fn shortest_by_enumeration(g: &Graph, s: usize, max_edges: usize) -> Vec<Option<i32>> {
    fn walk(g: &Graph, at: usize, cost: i32, edges: usize, max_edges: usize, seen: &mut Vec<bool>, best: &mut [Option<i32>]) {
        if best[at].is_none_or(|b| cost < b) {
            best[at] = Some(cost);
        }
        if edges == max_edges {
            return;
        }
        for (next, w) in g[at].iter().enumerate() {
            if let (Some(w), false) = (w, seen[next]) {
                seen[next] = true;
                walk(g, next, cost + w, edges + 1, max_edges, seen, best);
                seen[next] = false;
            }
        }
    }
    let mut best = vec![None; g.len()];
    let mut seen = vec![false; g.len()];
    seen[s] = true;
    walk(g, s, 0, 0, max_edges, &mut seen, &mut best);
    best
}

/// Best mean over all simple cycles, as an exact fraction `(weight, length)`.
fn best_cycle_mean(g: &Graph, maximize: bool) -> Option<(i64, i64)> {
    let n = g.len();
    let mut best: Option<(i64, i64)> = None;
    let better = |a: (i64, i64), b: (i64, i64)| {
        let (l, r) = (a.0 * b.1, b.0 * a.1);
        if maximize {
            l > r
        } else {
            l < r
        }
    };
    // each simple cycle is enumerated from its smallest node
    fn extend(
        g: &Graph,
        start: usize,
        at: usize,
        weight: i64,
        len: i64,
        seen: &mut Vec<bool>,
        found: &mut dyn FnMut((i64, i64)),
    ) {
        for (next, w) in g[at].iter().enumerate() {
            let Some(w) = *w else { continue };
            if next == start {
                found((weight + i64::from(w), len + 1));
            } else if next > start && !seen[next] {
                seen[next] = true;
                extend(g, start, next, weight + i64::from(w), len + 1, seen, found);
                seen[next] = false;
            }
        }
    }
    for start in 0..n {
        let mut seen = vec![false; n];
        seen[start] = true;
        extend(g, start, start, 0, 0, &mut seen, &mut |c| {
            if best.is_none_or(|b| better(c, b)) {
                best = Some(c);
            }
        });
    }
    best
}

fn as_ext(x: Option<i32>) -> ExtReal {
    x.map_or(ExtReal::PosInf, |v| ExtReal::new(f64::from(v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn single_source_solvers_agree_with_path_enumeration(g in graph(6, 0..10), s in 0usize..6) {
        let n = g.len();
        let s = s % n;
        let h = adjacency::<MinPlus>(&g).transpose();
        let f = Matrix::<MinPlus>::unit_column(n, s);
        let jacobi = solve_jacobi(&h, &f, default_max_iter(n)).unwrap();
        let seidel = solve_gauss_seidel(&h, &f, default_max_iter(n)).unwrap();
        let star = closure(&h, default_max_iter(n)).unwrap().result;
        let expected: Vec<ExtReal> = shortest_by_enumeration(&g, s, n).into_iter().map(as_ext).collect();
        prop_assert_eq!(jacobi.result.as_slice(), &expected[..]);
        prop_assert_eq!(&seidel.result, &jacobi.result);
        prop_assert_eq!(star.mul(&f).unwrap(), jacobi.result.clone());
        prop_assert!(jacobi.iterations <= n + 1);
        // converged results are fixpoints
        prop_assert_eq!(jacobi_step(&h, &jacobi.result, &f).unwrap(), jacobi.result);
    }

    #[test]
    fn k_sweeps_reach_exactly_the_k_edge_paths(g in graph(6, 0..10), s in 0usize..6) {
        let n = g.len();
        let s = s % n;
        let h = adjacency::<MinPlus>(&g).transpose();
        let f = Matrix::<MinPlus>::unit_column(n, s);
        let mut x = f.clone();
        for k in 0..=n {
            let expected: Vec<ExtReal> = shortest_by_enumeration(&g, s, k).into_iter().map(as_ext).collect();
            prop_assert_eq!(x.as_slice(), &expected[..], "after {} sweeps", k);
            x = jacobi_step(&h, &x, &f).unwrap();
        }
    }

    #[test]
    fn closure_is_a_two_sided_fixpoint(g in graph(6, 0..10)) {
        let a = adjacency::<MinPlus>(&g);
        let n = a.rows();
        let star = closure(&a, default_max_iter(n)).unwrap().result;
        let id = Matrix::<MinPlus>::identity(n);
        prop_assert_eq!(id.add(&a.mul(&star).unwrap()).unwrap(), star.clone());
        prop_assert_eq!(id.add(&star.mul(&a).unwrap()).unwrap(), star.clone());
        for s in 0..n {
            let column: Vec<ExtReal> = shortest_by_enumeration(&g, s, n).into_iter().map(as_ext).collect();
            // row s of the closure holds the best paths leaving s
            prop_assert_eq!(star.row(s), &column[..]);
        }
    }

    #[test]
    fn jacobi_solution_is_least(g in graph(5, 0..10), slack in vec(1i32..20, 5)) {
        let n = g.len();
        let h = adjacency::<MinPlus>(&g).transpose();
        let f = Matrix::<MinPlus>::unit_column(n, 0);
        let x = solve_jacobi(&h, &f, default_max_iter(n)).unwrap().result;
        // restart from below x (numerically) and iterate to another fixpoint
        let mut y = Matrix::<MinPlus>::new(
            n,
            1,
            (0..n).map(|i| match x.get(i, 0) {
                ExtReal::Finite(v) => ExtReal::new(v - f64::from(slack[i])),
                _ => ExtReal::new(-f64::from(slack[i])),
            }).collect(),
        ).unwrap();
        let mut stable = false;
        for _ in 0..500 {
            let next = jacobi_step(&h, &y, &f).unwrap();
            if next == y {
                stable = true;
                break;
            }
            y = next;
        }
        if stable {
            for i in 0..n {
                prop_assert!(MinPlus::precedes(x.get(i, 0), y.get(i, 0)));
            }
        }
    }

    #[test]
    fn karp_matches_cycle_enumeration(g in graph(6, -9..10)) {
        for maximize in [true, false] {
            let karp = if maximize {
                cycle_mean_eigenvalue(&adjacency::<MaxPlus>(&g))
            } else {
                cycle_mean_eigenvalue(&adjacency::<MinPlus>(&g))
            };
            match best_cycle_mean(&g, maximize) {
                None => prop_assert!(karp.is_err()),
                Some((w, len)) => prop_assert_eq!(karp.unwrap(), w as f64 / len as f64),
            }
        }
    }

    #[test]
    fn eigenvectors_have_zero_residual_on_integer_means(g in graph(6, -9..10)) {
        // scaling by lcm(1..6) makes every cycle mean an integer
        let scaled: Graph = g.iter().map(|r| r.iter().map(|w| w.map(|x| 60 * x)).collect()).collect();
        let a = adjacency::<MaxPlus>(&scaled);
        if best_cycle_mean(&g, true).is_some() {
            let pair = eigenpair(&a).unwrap();
            prop_assert_eq!(pair.value.fract(), 0.0);
            prop_assert!(pair.vector.as_slice().iter().any(|v| *v != MaxPlus::zero()));
            let lhs = a.mul(&pair.vector).unwrap();
            let rhs = pair.vector.scale(ExtReal::new(pair.value));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn boolean_closure_is_reachability(g in graph(6, 0..1)) {
        let n = g.len();
        let a = Matrix::<Boolean>::from_rows(g.iter().map(|r| r.iter().map(Option::is_some).collect()).collect()).unwrap();
        let star = closure(&a, default_max_iter(n)).unwrap().result;
        for s in 0..n {
            let reach = shortest_by_enumeration(&g, s, n);
            for t in 0..n {
                prop_assert_eq!(star.get(s, t), reach[t].is_some());
            }
        }
    }
}
