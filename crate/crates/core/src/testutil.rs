//! Shared helpers for unit tests: independent little oracles that deliberately
//! avoid the production code paths they are used to check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::Graph;

/// Laplace-expansion determinant, exponential and obviously correct.
pub fn laplace_det(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return a[0][0];
    }
    let mut acc = 0;
    for (j, &lead) in a[0].iter().enumerate() {
        if lead == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc += sign * lead * laplace_det(&minor);
    }
    acc
}

/// Ascending coefficient vector from small literals.
pub fn poly(coeffs: &[i64]) -> Vec<BigInt> {
    coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

/// Erdos-Renyi style random graph.
pub fn random_graph<R: rand::Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Kernel of the adjacency matrix by rational Gauss-Jordan elimination:
/// `Some(normalised integer vector)` when the nullity is exactly one,
/// `None` otherwise.
pub fn kernel_oracle(g: &Graph) -> Option<Vec<BigInt>> {
    let n = g.order();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(BigInt::from(i64::from(g.has_edge(i, j)))))
                .collect()
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(r, row);
        let scale = a[row][col].recip();
        for j in 0..n {
            let x = a[row][j].clone() * &scale;
            a[row][j] = x;
        }
        for i in 0..n {
            if i == row || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                let x = a[i][j].clone() - &f * &a[row][j];
                a[i][j] = x;
            }
        }
        pivots.push((col, row));
        row += 1;
    }
    if n - row != 1 {
        return None;
    }
    let mut is_pivot = vec![false; n];
    for &(c, _) in &pivots {
        is_pivot[c] = true;
    }
    let free = (0..n).find(|&c| !is_pivot[c]).unwrap();
    let mut v = vec![BigRational::zero(); n];
    v[free] = BigRational::one();
    for &(c, r) in &pivots {
        v[c] = -a[r][free].clone();
    }
    // Clear denominators, then normalise content and leading sign.
    let mut denom_lcm = BigInt::one();
    for x in &v {
        denom_lcm = num_integer::lcm(denom_lcm, x.denom().clone());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * &denom_lcm / x.denom())
        .collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = num_integer::gcd(content, x.clone());
    }
    for x in &mut ints {
        *x = &*x / &content;
    }
    if ints.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
        for x in &mut ints {
            *x = -std::mem::take(x);
        }
    }
    Some(ints)
}

/// Nut test straight from the definition, on top of the rational oracle.
pub fn is_nut_oracle(g: &Graph) -> bool {
    g.order() >= 2
        && matches!(kernel_oracle(g), Some(v) if v.iter().all(|x| !x.is_zero()))
}

/// All permutations of `0..n`, for exhaustive isomorphism checks.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= 8, "factorial blowup");
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap(&mut items, n, &mut out);
    out
}

fn heap(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// True iff some vertex bijection carries `g` onto `h`.
pub fn brute_iso(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() {
        return false;
    }
    permutations(g.order())
        .into_iter()
        .any(|perm| &g.relabel(&perm) == h)
}

/// Automorphism orbits by brute force: `orbit[v]` is the least vertex in the
/// orbit of `v`.
pub fn brute_orbits(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut orbit: Vec<usize> = (0..n).collect();
    for perm in permutations(n) {
        if g.relabel(&perm) == *g {
            // perm is an automorphism; merge v with its image.
            for v in 0..n {
                let (mut a, mut b) = (v, perm[v]);
                while orbit[a] != a {
                    a = orbit[a];
                }
                while orbit[b] != b {
                    b = orbit[b];
                }
                if a != b {
                    let lo = a.min(b);
                    orbit[a.max(b)] = lo;
                }
            }
        }
    }
    for v in 0..n {
        let mut r = v;
        while orbit[r] != r {
            r = orbit[r];
        }
        orbit[v] = r;
    }
    orbit
}
