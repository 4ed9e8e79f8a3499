//! Dense linear algebra over prime fields F_p with `p < 2^31`.
//!
//! Entries live in `u64`, so a product of two reduced entries fits without
//! widening and a short row combination fits before the next reduction.
//! Elimination is plain Gauss-Jordan with first-nonzero pivot selection,
//! which keeps reduced forms, ranks and kernels deterministic for a given
//! matrix and modulus.

use crate::graph::Graph;

/// Errors for dimension-checked operations.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModPError {
    #[error("vector has {got} entries, matrix side is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    acc
}

/// A square matrix over F_p, row-major, entries always reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPMatrix {
    n: usize,
    p: u64,
    a: Vec<u64>,
}

impl ModPMatrix {
    /// The adjacency matrix of `g` reduced mod `p`.
    pub fn from_graph(g: &Graph, p: u64) -> ModPMatrix {
        assert!(p >= 2 && p < 1 << 31, "modulus out of range");
        let n = g.order();
        let mut a = vec![0u64; n * n];
        for v in 0..n {
            for u in g.neighbors(v) {
                a[v * n + u] = 1 % p;
            }
        }
        ModPMatrix { n, p, a }
    }

    /// Builds a matrix from explicit rows, reducing every entry.
    pub fn from_rows(rows: &[Vec<u64>], p: u64) -> ModPMatrix {
        assert!(p >= 2 && p < 1 << 31, "modulus out of range");
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            a.extend(row.iter().map(|&x| x % p));
        }
        ModPMatrix { n, p, a }
    }

    pub fn identity(n: usize, p: u64) -> ModPMatrix {
        let mut m = ModPMatrix {
            n,
            p,
            a: vec![0; n * n],
        };
        for i in 0..n {
            m.a[i * n + i] = 1 % p;
        }
        m
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.a[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, rhs: &ModPMatrix) -> ModPMatrix {
        assert_eq!(self.n, rhs.n);
        assert_eq!(self.p, rhs.p);
        let n = self.n;
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + x * rhs.a[k * n + j]) % self.p;
                }
            }
        }
        ModPMatrix {
            n,
            p: self.p,
            a: out,
        }
    }

    /// Matrix rank over F_p.
    pub fn rank(&self) -> usize {
        self.clone().reduce(None)
    }

    /// Rank, plus the kernel vector when the nullity is exactly one. The
    /// vector is scaled so its first nonzero entry is 1.
    pub fn rank_and_kernel(&self) -> (usize, Option<Vec<u64>>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let rank = m.reduce(Some(&mut pivots));
        if self.n - rank != 1 {
            return (rank, None);
        }
        let mut is_pivot = vec![false; self.n];
        for &(col, _) in &pivots {
            is_pivot[col] = true;
        }
        let free = (0..self.n).find(|&c| !is_pivot[c]).expect("nullity is one");
        let mut v = vec![0u64; self.n];
        v[free] = 1;
        for &(col, row) in &pivots {
            v[col] = (self.p - m.a[row * self.n + free]) % self.p;
        }
        let lead = v.iter().copied().find(|&x| x != 0).expect("kernel vector is nonzero");
        let scale = pow_mod(lead, self.p - 2, self.p);
        for x in &mut v {
            *x = *x * scale % self.p;
        }
        (rank, Some(v))
    }

    /// The inverse matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<ModPMatrix> {
        let n = self.n;
        let p = self.p;
        // Augment with the identity and run the same Jordan elimination.
        let mut a = self.a.clone();
        let mut inv = ModPMatrix::identity(n, p).a;
        let mut row = 0;
        for col in 0..n {
            let Some(r) = (row..n).find(|&r| a[r * n + col] != 0) else {
                return None;
            };
            if r != row {
                for j in 0..n {
                    a.swap(r * n + j, row * n + j);
                    inv.swap(r * n + j, row * n + j);
                }
            }
            let scale = pow_mod(a[row * n + col], p - 2, p);
            for j in 0..n {
                a[row * n + j] = a[row * n + j] * scale % p;
                inv[row * n + j] = inv[row * n + j] * scale % p;
            }
            for i in 0..n {
                if i == row {
                    continue;
                }
                let f = a[i * n + col];
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] = (a[i * n + j] + (p - f) * a[row * n + j]) % p;
                    inv[i * n + j] = (inv[i * n + j] + (p - f) * inv[row * n + j]) % p;
                }
            }
            row += 1;
        }
        Some(ModPMatrix { n, p, a: inv })
    }

    /// For a matrix `M` and a 0/1 vector `b`: the pair `(b M b^T, b M)`.
    /// Intended for `M` an inverse adjacency matrix, where the scalar and the
    /// entry pattern of `b M` decide bordered extensions.
    pub fn quadratic_form(&self, b: &[u64]) -> Result<(u64, Vec<u64>), ModPError> {
        if b.len() != self.n {
            return Err(ModPError::DimensionMismatch {
                expected: self.n,
                got: b.len(),
            });
        }
        let n = self.n;
        let mut w = vec![0u64; n];
        for (i, &bi) in b.iter().enumerate() {
            let bi = bi % self.p;
            if bi == 0 {
                continue;
            }
            for j in 0..n {
                w[j] = (w[j] + bi * self.a[i * n + j]) % self.p;
            }
        }
        let mut s = 0u64;
        for (j, &bj) in b.iter().enumerate() {
            s = (s + (bj % self.p) * w[j]) % self.p;
        }
        Ok((s, w))
    }

    /// In-place Gauss-Jordan. Returns the rank; records `(column, row)` pivot
    /// pairs when asked. Afterwards `self` is in reduced row echelon form.
    fn reduce(&mut self, mut pivots: Option<&mut Vec<(usize, usize)>>) -> usize {
        let n = self.n;
        let p = self.p;
        let a = &mut self.a;
        let mut row = 0;
        for col in 0..n {
            let Some(r) = (row..n).find(|&r| a[r * n + col] != 0) else {
                continue;
            };
            if r != row {
                for j in 0..n {
                    a.swap(r * n + j, row * n + j);
                }
            }
            let scale = pow_mod(a[row * n + col], p - 2, p);
            for j in 0..n {
                a[row * n + j] = a[row * n + j] * scale % p;
            }
            for i in 0..n {
                if i == row {
                    continue;
                }
                let f = a[i * n + col];
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] = (a[i * n + j] + (p - f) * a[row * n + j]) % p;
                }
            }
            if let Some(ps) = pivots.as_deref_mut() {
                ps.push((col, row));
            }
            row += 1;
        }
        row
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle_mod_two() {
        let g = Graph::complete(3);
        let m = ModPMatrix::from_graph(&g, 2);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, 2);
        assert_eq!(kernel.unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn path_kernel_mod_five() {
        let g = Graph::path(3);
        let m = ModPMatrix::from_graph(&g, 5);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, 2);
        assert_eq!(kernel.unwrap(), vec![1, 0, 4]);
    }

    #[test]
    fn four_cycle_has_nullity_two() {
        let g = Graph::cycle(4);
        let m = ModPMatrix::from_graph(&g, 2_147_483_647);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, 2);
        assert!(kernel.is_none());
        assert!(m.inverse().is_none());
    }

    #[test]
    fn full_rank_has_no_kernel() {
        let g = Graph::complete(2);
        let m = ModPMatrix::from_graph(&g, 7);
        let (rank, kernel) = m.rank_and_kernel();
        assert_eq!(rank, 2);
        assert!(kernel.is_none());
    }

    #[test]
    fn inverse_of_an_edge() {
        let g = Graph::complete(2);
        let m = ModPMatrix::from_graph(&g, 5);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, m, "the swap matrix is its own inverse");
        let (s, w) = inv.quadratic_form(&[1, 1]).unwrap();
        assert_eq!(s, 2);
        assert_eq!(w, vec![1, 1]);
    }

    #[test]
    fn quadratic_form_checks_dimensions() {
        let m = ModPMatrix::identity(3, 7);
        assert_eq!(
            m.quadratic_form(&[1, 0]).unwrap_err(),
            ModPError::DimensionMismatch {
                expected: 3,
                got: 2
            }
        );
    }

    proptest! {
        #[test]
        fn kernel_vectors_annihilate(seed in any::<u64>(), n in 2usize..9) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let p = 2_147_483_647u64;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let m = ModPMatrix::from_graph(&g, p);
            let (rank, kernel) = m.rank_and_kernel();
            prop_assert!(rank <= n);
            if let Some(v) = kernel {
                // First nonzero entry is one, and A v = 0.
                let lead = v.iter().copied().find(|&x| x != 0).unwrap();
                prop_assert_eq!(lead, 1);
                for i in 0..n {
                    let mut acc = 0u64;
                    for j in 0..n {
                        acc = (acc + m.get(i, j) * v[j]) % p;
                    }
                    prop_assert_eq!(acc, 0);
                }
            }
        }

        #[test]
        fn inverse_multiplies_to_identity(seed in any::<u64>(), n in 1usize..8) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let p = 1_000_000_007u64;
            let rows: Vec<Vec<u64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
                .collect();
            let m = ModPMatrix::from_rows(&rows, p);
            match m.inverse() {
                Some(inv) => {
                    prop_assert_eq!(m.mul(&inv), ModPMatrix::identity(n, p));
                    prop_assert_eq!(inv.mul(&m), ModPMatrix::identity(n, p));
                }
                None => prop_assert!(m.rank() < n),
            }
        }
    }
}
