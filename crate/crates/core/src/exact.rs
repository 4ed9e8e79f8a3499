//! Fraction-free integer linear algebra on adjacency matrices: determinant,
//! rank, characteristic polynomial, adjugate, kernel vectors and inertia.
//!
//! Everything here is exact. Determinants and ranks come from Bareiss
//! elimination, whose intermediates are minors of the input and therefore
//! bounded; for 0/1 matrices up to order twenty they fit in `i64`, and a
//! machine-word path exploits that. The characteristic polynomial and the
//! adjugate come from one Faddeev-LeVerrier sweep, and the inertia is read
//! off the polynomial by Descartes' rule, which is exact for the real-rooted
//! polynomials symmetric matrices produce.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::Graph;

/// Errors from kernel extraction.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("matrix is nonsingular")]
    Nonsingular,
    #[error("kernel dimension exceeds one")]
    NullityAtLeastTwo,
}

/// Error from [`Inertia::nbo_offset`] when the spectrum has no simple zero.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
#[error("nullity is {0}, not one")]
pub struct NotNullityOne(pub usize);

/// Error from [`KernelVector::r_ratio`] on a vector with a zero entry.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
#[error("kernel vector has a zero entry")]
pub struct ZeroEntry;

/// A dense square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    a: Vec<BigInt>,
}

impl IntMatrix {
    /// The adjacency matrix of `g`.
    pub fn from_graph(g: &Graph) -> IntMatrix {
        let n = g.order();
        let mut a = vec![BigInt::zero(); n * n];
        for v in 0..n {
            for u in g.neighbors(v) {
                a[v * n + u] = BigInt::one();
            }
        }
        IntMatrix { n, a }
    }

    /// Builds a matrix from explicit rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            a.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { n, a }
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.n + j]
    }

    fn is_zero_one(&self) -> bool {
        self.a.iter().all(|x| x.is_zero() || x.is_one())
    }

    fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = vec![BigInt::zero(); n * n];
        let add_only = self.is_zero_one();
        for i in 0..n {
            for k in 0..n {
                let x = &self.a[i * n + k];
                if x.is_zero() {
                    continue;
                }
                let (dst, src) = (&mut out[i * n..(i + 1) * n], &rhs.a[k * n..(k + 1) * n]);
                if add_only {
                    for j in 0..n {
                        dst[j] += &src[j];
                    }
                } else {
                    for j in 0..n {
                        dst[j] += x * &src[j];
                    }
                }
            }
        }
        IntMatrix { n, a: out }
    }

    /// Exact determinant by Bareiss elimination. For 0/1 matrices of order
    /// at most twenty every intermediate is a minor bounded well inside
    /// `i64`, so those run entirely in machine words.
    pub fn det(&self) -> BigInt {
        if self.n <= 20 && self.is_zero_one() {
            let a: Vec<i64> = self.a.iter().map(|x| x.to_i64().unwrap()).collect();
            return BigInt::from(det_bareiss_i64(a, self.n));
        }
        self.det_general()
    }

    pub(crate) fn det_general(&self) -> BigInt {
        let n = self.n;
        let mut a = self.a.clone();
        let mut prev = BigInt::one();
        let mut sign = 1i64;
        for k in 0..n {
            let Some(r) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            if r != k {
                for j in 0..n {
                    a.swap(r * n + j, k * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free step must divide exactly");
                    a[i * n + j] = q;
                }
            }
            prev = a[k * n + k].clone();
        }
        sign * a[n * n - 1].clone()
    }

    /// Exact rank by fraction-free elimination with column skipping.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut a = self.a.clone();
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..n {
            let Some(r) = (row..n).find(|&r| !a[r * n + col].is_zero()) else {
                continue;
            };
            if r != row {
                for j in 0..n {
                    a.swap(r * n + j, row * n + j);
                }
            }
            for i in row + 1..n {
                for j in col + 1..n {
                    let num = &a[i * n + j] * &a[row * n + col] - &a[i * n + col] * &a[row * n + j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free step must divide exactly");
                    a[i * n + j] = q;
                }
                a[i * n + col] = BigInt::zero();
            }
            prev = a[row * n + col].clone();
            row += 1;
        }
        row
    }

    /// One Faddeev-LeVerrier sweep: the characteristic polynomial of the
    /// matrix, coefficients ascending (`c[k]` multiplies `x^k`, `c[n] = 1`),
    /// together with the adjugate.
    pub fn char_poly_adjugate(&self) -> (Vec<BigInt>, IntMatrix) {
        let n = self.n;
        assert!(n >= 1);
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        let mut m = IntMatrix {
            n,
            a: {
                let mut id = vec![BigInt::zero(); n * n];
                for i in 0..n {
                    id[i * n + i] = BigInt::one();
                }
                id
            },
        };
        c[n - 1] = -self.trace_with(&m);
        for k in 2..=n {
            let mut next = self.mul(&m);
            for i in 0..n {
                next.a[i * n + i] += &c[n - k + 1];
            }
            m = next;
            let t = self.trace_with(&m);
            let (q, rem) = (-t).div_rem(&BigInt::from(k));
            debug_assert!(rem.is_zero(), "trace must divide exactly");
            c[n - k] = q;
        }
        if n % 2 == 0 {
            for x in &mut m.a {
                *x = -std::mem::take(x);
            }
        }
        (c, m)
    }

    /// Coefficients of `det(xI - A)`, ascending.
    pub fn characteristic_polynomial(&self) -> Vec<BigInt> {
        self.char_poly_adjugate().0
    }

    /// The adjugate matrix, satisfying `A adj(A) = det(A) I`.
    pub fn adjugate(&self) -> IntMatrix {
        self.char_poly_adjugate().1
    }

    /// A kernel vector when the nullity is exactly one, taken from the first
    /// nonzero adjugate column and normalised.
    pub fn kernel_vector(&self) -> Result<KernelVector, KernelError> {
        let (c, adj) = self.char_poly_adjugate();
        if !c[0].is_zero() {
            return Err(KernelError::Nonsingular);
        }
        let n = self.n;
        let col = (0..n)
            .find(|&j| (0..n).any(|i| !adj.a[i * n + j].is_zero()))
            .ok_or(KernelError::NullityAtLeastTwo)?;
        let v: Vec<BigInt> = (0..n).map(|i| adj.a[i * n + col].clone()).collect();
        let kv = KernelVector::normalised(v);
        debug_assert!(self.annihilates(&kv), "adjugate column must lie in the kernel");
        Ok(kv)
    }

    /// `sum_ij a[i][j] m[j][i]`, the trace of the product.
    fn trace_with(&self, m: &IntMatrix) -> BigInt {
        let n = self.n;
        let mut t = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                let x = &self.a[i * n + j];
                if x.is_zero() {
                    continue;
                }
                if x.is_one() {
                    t += &m.a[j * n + i];
                } else {
                    t += x * &m.a[j * n + i];
                }
            }
        }
        t
    }

    fn annihilates(&self, v: &KernelVector) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            let mut acc = BigInt::zero();
            for j in 0..n {
                acc += &self.a[i * n + j] * &v.v[j];
            }
            acc.is_zero()
        })
    }
}

fn det_bareiss_i64(mut a: Vec<i64>, n: usize) -> i64 {
    let mut prev = 1i64;
    let mut sign = 1i64;
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| a[r * n + k] != 0) else {
            return 0;
        };
        if r != k {
            for j in 0..n {
                a.swap(r * n + j, k * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
        }
        prev = a[k * n + k];
    }
    sign * a[n * n - 1]
}

/// An exact integer kernel vector with content one and positive leading
/// nonzero entry. Interior zero entries are allowed; they are precisely what
/// the nut test looks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelVector {
    v: Vec<BigInt>,
}

impl KernelVector {
    /// Normalises a nonzero integer vector: divide by the gcd of the entries
    /// and flip signs so the first nonzero entry is positive.
    pub fn normalised(mut v: Vec<BigInt>) -> KernelVector {
        let mut content = BigInt::zero();
        for x in &v {
            content = content.gcd(x);
        }
        assert!(!content.is_zero(), "kernel vector must be nonzero");
        if !content.is_one() {
            for x in &mut v {
                *x = &*x / &content;
            }
        }
        if v.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
            for x in &mut v {
                *x = -std::mem::take(x);
            }
        }
        KernelVector { v }
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.v
    }

    pub fn has_zero_entry(&self) -> bool {
        self.v.iter().any(|x| x.is_zero())
    }

    /// The ratio of the largest to the smallest entry magnitude, reduced.
    pub fn r_ratio(&self) -> Result<BigRational, ZeroEntry> {
        if self.has_zero_entry() {
            return Err(ZeroEntry);
        }
        let mut max = self.v[0].abs();
        let mut min = self.v[0].abs();
        for x in &self.v[1..] {
            let m = x.abs();
            if m > max {
                max = m;
            } else if m < min {
                min = m;
            }
        }
        Ok(BigRational::new(max, min))
    }
}

/// Eigenvalue sign counts of a symmetric integer matrix.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn order(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    /// Position of the zero eigenvalue relative to the spectral middle: with
    /// eigenvalues descending and one-indexed, the zero sits at position
    /// `n_plus + 1`, and this returns that position minus `ceil(n / 2)`.
    pub fn nbo_offset(&self) -> Result<i64, NotNullityOne> {
        if self.n_zero != 1 {
            return Err(NotNullityOne(self.n_zero));
        }
        let n = self.order();
        Ok((self.n_plus + 1) as i64 - n.div_ceil(2) as i64)
    }

    /// Signed imbalance `n_plus - n_minus` of the nonzero spectrum.
    pub fn delta_q(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }
}

/// Inertia read from an ascending characteristic polynomial: the zero count
/// is the multiplicity of the root zero, and for a real-rooted polynomial
/// Descartes' rule counts the positive roots exactly.
pub fn inertia_from_charpoly(c: &[BigInt]) -> Inertia {
    let n = c.len() - 1;
    let n_zero = c
        .iter()
        .position(|x| !x.is_zero())
        .expect("leading coefficient is one");
    let mut n_plus = 0;
    let mut last_sign = 0i8;
    for x in &c[n_zero..] {
        if x.is_zero() {
            continue;
        }
        let s = if x.is_negative() { -1 } else { 1 };
        if last_sign != 0 && s != last_sign {
            n_plus += 1;
        }
        last_sign = s;
    }
    Inertia {
        n_plus,
        n_zero,
        n_minus: n - n_zero - n_plus,
    }
}

/// Eigenvalue sign counts of the adjacency matrix of `g`.
pub fn inertia(g: &Graph) -> Inertia {
    inertia_from_charpoly(&IntMatrix::from_graph(g).characteristic_polynomial())
}

/// Exact nut test straight from the definition of the adjugate: singular
/// adjacency matrix whose adjugate has no zero entry. For symmetric matrices
/// the adjugate of a singular matrix is a scaled outer product of the kernel
/// vector with itself, so a zero entry appears exactly when the nullity
/// exceeds one or the kernel vector has a zero coordinate.
pub fn is_nut_exact(g: &Graph) -> bool {
    if g.order() < 2 {
        return false;
    }
    let a = IntMatrix::from_graph(g);
    let (c, adj) = a.char_poly_adjugate();
    if !c[0].is_zero() {
        return false;
    }
    let n = g.order();
    (0..n * n).all(|i| !adj.a[i].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil;
    use proptest::prelude::*;

    fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(i + 5, 5 + (i + 2) % 5);
        }
        g
    }

    #[test]
    fn determinant_known_values() {
        let cases: Vec<(Graph, i64)> = vec![
            (Graph::complete(2), -1),
            (Graph::complete(3), 2),
            (Graph::complete(4), -3),
            (Graph::path(3), 0),
            (Graph::path(4), 1),
            (Graph::path(6), -1),
            (Graph::cycle(4), 0),
            (Graph::cycle(5), 2),
            (petersen(), 48),
        ];
        for (g, want) in cases {
            assert_eq!(IntMatrix::from_graph(&g).det(), BigInt::from(want), "{g:?}");
        }
    }

    #[test]
    fn determinant_paths_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=12usize {
            for _ in 0..40 {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(0.5) {
                            g.add_edge(u, v);
                        }
                    }
                }
                let m = IntMatrix::from_graph(&g);
                assert_eq!(m.det(), m.det_general());
            }
        }
    }

    #[test]
    fn determinant_matches_laplace_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=5usize {
            for _ in 0..200 {
                let rows: Vec<Vec<i64>> = (0..n)
                    .map(|_| (0..n).map(|_| rng.gen_range(-2i64..=2)).collect())
                    .collect();
                let m = IntMatrix::from_rows(&rows);
                assert_eq!(m.det(), BigInt::from(testutil::laplace_det(&rows)));
            }
        }
    }

    #[test]
    fn rank_known_values() {
        assert_eq!(IntMatrix::from_graph(&Graph::cycle(4)).rank(), 2);
        assert_eq!(IntMatrix::from_graph(&Graph::path(3)).rank(), 2);
        assert_eq!(IntMatrix::from_graph(&Graph::complete(4)).rank(), 4);
        assert_eq!(IntMatrix::from_graph(&Graph::empty(5)).rank(), 0);
        assert_eq!(IntMatrix::from_graph(&Graph::path(5)).rank(), 4);
    }

    #[test]
    fn charpoly_known_values() {
        let p3 = IntMatrix::from_graph(&Graph::path(3)).characteristic_polynomial();
        assert_eq!(p3, testutil::poly(&[0, -2, 0, 1]));
        let k3 = IntMatrix::from_graph(&Graph::complete(3)).characteristic_polynomial();
        assert_eq!(k3, testutil::poly(&[-2, -3, 0, 1]));
        let c4 = IntMatrix::from_graph(&Graph::cycle(4)).characteristic_polynomial();
        assert_eq!(c4, testutil::poly(&[0, 0, -4, 0, 1]));
        let c5 = IntMatrix::from_graph(&Graph::cycle(5)).characteristic_polynomial();
        assert_eq!(c5, testutil::poly(&[-2, 5, 0, -5, 0, 1]));
    }

    #[test]
    fn charpoly_evaluates_to_shifted_determinants() {
        // p(t) must equal det(tI - A) for every integer t; the right side
        // comes from the independent Bareiss path on a general matrix.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..60 {
            let n = rng.gen_range(1..9);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let c = IntMatrix::from_graph(&g).characteristic_polynomial();
            for t in -3i64..=3 {
                let rows: Vec<Vec<i64>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let diag = if i == j { t } else { 0 };
                                diag - i64::from(g.has_edge(i, j))
                            })
                            .collect()
                    })
                    .collect();
                let mut value = BigInt::zero();
                for k in (0..=n).rev() {
                    value = value * t + &c[k];
                }
                assert_eq!(value, IntMatrix::from_rows(&rows).det());
            }
        }
    }

    #[test]
    fn charpoly_counts_edges_and_triangles() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let n = rng.gen_range(3..10);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            let c = IntMatrix::from_graph(&g).characteristic_polynomial();
            assert_eq!(c[n], BigInt::one());
            assert_eq!(c[n - 1], BigInt::zero());
            assert_eq!(c[n - 2], -BigInt::from(g.edge_count()));
            let mut triangles = 0i64;
            for a in 0..n {
                for b in a + 1..n {
                    for d in b + 1..n {
                        if g.has_edge(a, b) && g.has_edge(b, d) && g.has_edge(a, d) {
                            triangles += 1;
                        }
                    }
                }
            }
            assert_eq!(c[n - 3], BigInt::from(-2 * triangles));
        }
    }

    #[test]
    fn adjugate_identity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        for _ in 0..40 {
            let n = rng.gen_range(1..8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let m = IntMatrix::from_graph(&g);
            let det = m.det();
            let adj = m.adjugate();
            let prod = m.mul(&adj);
            for i in 0..n {
                for j in 0..n {
                    let want = if i == j { det.clone() } else { BigInt::zero() };
                    assert_eq!(*prod.get(i, j), want);
                }
            }
        }
    }

    #[test]
    fn kernel_of_the_short_path() {
        let m = IntMatrix::from_graph(&Graph::path(3));
        let v = m.kernel_vector().unwrap();
        assert_eq!(
            v.entries(),
            &[BigInt::from(1), BigInt::from(0), BigInt::from(-1)]
        );
        assert!(v.has_zero_entry());
        assert_eq!(v.r_ratio(), Err(ZeroEntry));
    }

    #[test]
    fn kernel_error_cases() {
        assert_eq!(
            IntMatrix::from_graph(&Graph::complete(3)).kernel_vector(),
            Err(KernelError::Nonsingular)
        );
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(
            IntMatrix::from_graph(&star).kernel_vector(),
            Err(KernelError::NullityAtLeastTwo)
        );
    }

    #[test]
    fn kernel_matches_rational_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(61);
        let mut nullity_one_seen = 0;
        for _ in 0..400 {
            let n = rng.gen_range(2..9);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let m = IntMatrix::from_graph(&g);
            let oracle = testutil::kernel_oracle(&g);
            match m.kernel_vector() {
                Ok(v) => {
                    nullity_one_seen += 1;
                    let ov = oracle.expect("oracle must agree on nullity one");
                    assert_eq!(v.entries(), &ov[..]);
                }
                Err(KernelError::Nonsingular) => assert!(oracle.is_none()),
                Err(KernelError::NullityAtLeastTwo) => assert!(oracle.is_none()),
            }
        }
        assert!(nullity_one_seen > 20, "sampling must hit nullity one");
    }

    #[test]
    fn inertia_known_values() {
        let cases = vec![
            (
                Graph::path(3),
                Inertia {
                    n_plus: 1,
                    n_zero: 1,
                    n_minus: 1,
                },
            ),
            (
                Graph::complete(3),
                Inertia {
                    n_plus: 1,
                    n_zero: 0,
                    n_minus: 2,
                },
            ),
            (
                Graph::cycle(4),
                Inertia {
                    n_plus: 1,
                    n_zero: 2,
                    n_minus: 1,
                },
            ),
            (
                Graph::cycle(5),
                Inertia {
                    n_plus: 3,
                    n_zero: 0,
                    n_minus: 2,
                },
            ),
            (
                petersen(),
                Inertia {
                    n_plus: 6,
                    n_zero: 0,
                    n_minus: 4,
                },
            ),
            (
                Graph::empty(4),
                Inertia {
                    n_plus: 0,
                    n_zero: 4,
                    n_minus: 0,
                },
            ),
        ];
        for (g, want) in cases {
            assert_eq!(inertia(&g), want, "{g:?}");
        }
    }

    #[test]
    fn inertia_offsets() {
        let i = inertia(&Graph::path(3));
        assert_eq!(i.nbo_offset(), Ok(0));
        assert_eq!(i.delta_q(), 0);
        let c4 = inertia(&Graph::cycle(4));
        assert_eq!(c4.nbo_offset(), Err(NotNullityOne(2)));
        assert_eq!(c4.delta_q(), 0);
        assert_eq!(inertia(&Graph::complete(3)).delta_q(), -1);
    }

    #[test]
    fn normalisation_rules() {
        let v = KernelVector::normalised(vec![
            BigInt::from(-4),
            BigInt::from(6),
            BigInt::from(-2),
        ]);
        assert_eq!(
            v.entries(),
            &[BigInt::from(2), BigInt::from(-3), BigInt::from(1)]
        );
        let r = v.r_ratio().unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(3), BigInt::from(1)));
    }

    proptest! {
        #[test]
        fn inertia_nullity_matches_rank(seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..10);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let m = IntMatrix::from_graph(&g);
            let i = inertia(&g);
            prop_assert_eq!(i.order(), n);
            prop_assert_eq!(i.n_zero, n - m.rank());
        }
    }
}
