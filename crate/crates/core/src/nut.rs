//! The certified nut-graph decision procedure.
//!
//! A nut graph has a singular adjacency matrix with one-dimensional kernel
//! whose eigenvector has no zero coordinate. The test works prime by prime,
//! entirely in residue arithmetic, and converts residues into integer facts
//! through a determinant budget: integer minors and normalised kernel
//! entries are bounded by the budget, so once the product of consulted
//! primes exceeds it, a residue that vanishes everywhere is an exact zero.
//!
//! Per prime there are three outcomes. Full rank settles the graph outright
//! (a nonzero residue determinant certifies a nonzero determinant). A rank
//! deficit of two or more discards the prime but accumulates towards the
//! bound on all nearly-full minors, certifying nullity at least two once the
//! discarded product clears the budget. Rank deficit exactly one records the
//! residue kernel vector; once the product of recording primes clears the
//! budget, the determinant is certifiably zero and every coordinate of the
//! exact kernel vector is nonzero precisely when some recorded vector is
//! nonzero there. For orders up to 22 the leading prime alone exceeds the
//! budget and a single residue decides everything.

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::Graph;
use crate::modp::{ModPError, ModPMatrix};
use crate::schedule::{determinant_budget, next_prime_below, FIRST_PRIME};

/// Why a graph failed the nut test.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum NotNutReason {
    /// Fewer than two vertices.
    OrderTooSmall,
    /// The adjacency matrix is nonsingular.
    FullRank,
    /// The kernel has dimension at least two.
    NullityAtLeastTwo,
    /// The kernel is one-dimensional but its vector vanishes somewhere.
    KernelHasZero,
}

impl std::fmt::Display for NotNutReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NotNutReason::OrderTooSmall => "fewer than two vertices",
            NotNutReason::FullRank => "nonsingular adjacency matrix",
            NotNutReason::NullityAtLeastTwo => "nullity at least two",
            NotNutReason::KernelHasZero => "kernel vector has a zero entry",
        })
    }
}

/// Outcome of the decision procedure.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Nut,
    NotNut(NotNutReason),
}

/// What one prime contributed: its residue rank, and the normalised residue
/// kernel vector when the rank deficit was exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeEvidence {
    pub prime: u64,
    pub rank: usize,
    pub kernel: Option<Vec<u64>>,
}

/// A replayable record of the decision: verdict, the budget the run measured
/// products against, and every prime consulted in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NutCertificate {
    pub verdict: Verdict,
    pub budget: BigUint,
    pub fast_path: bool,
    pub evidence: Vec<PrimeEvidence>,
}

impl NutCertificate {
    pub fn is_nut(&self) -> bool {
        self.verdict == Verdict::Nut
    }
}

/// Knobs for [`is_nut_with`].
#[derive(Copy, Clone, Debug, Default)]
pub struct NutTestOptions {
    /// Inflate the budget so no single prime can settle the graph, forcing
    /// the multi-prime accumulation logic. Verdicts are unchanged; only the
    /// amount of evidence grows.
    pub force_multi_prime: bool,
}

/// Decides whether `g` is a nut graph, with default options.
pub fn is_nut(g: &Graph) -> NutCertificate {
    is_nut_with(g, NutTestOptions::default())
}

/// Decides whether `g` is a nut graph and returns the full certificate.
pub fn is_nut_with(g: &Graph, opts: NutTestOptions) -> NutCertificate {
    let n = g.order();
    let mut budget = determinant_budget(n.max(1));
    if opts.force_multi_prime {
        budget = budget.max(BigUint::from(FIRST_PRIME));
    }
    let fast_path = BigUint::from(FIRST_PRIME) > budget;
    if n < 2 {
        return NutCertificate {
            verdict: Verdict::NotNut(NotNutReason::OrderTooSmall),
            budget,
            fast_path,
            evidence: Vec::new(),
        };
    }

    let mut evidence = Vec::new();
    let mut good: Vec<usize> = Vec::new();
    let mut good_product = BigUint::one();
    let mut discarded_product = BigUint::one();
    let mut p = FIRST_PRIME;
    loop {
        let m = ModPMatrix::from_graph(g, p);
        let (rank, kernel) = m.rank_and_kernel();
        evidence.push(PrimeEvidence {
            prime: p,
            rank,
            kernel,
        });
        let verdict = if rank == n {
            // A nonzero residue determinant is a nonzero determinant.
            Some(Verdict::NotNut(NotNutReason::FullRank))
        } else if rank <= n - 2 {
            // All minors of order n-1 vanish at this prime. Once the product
            // of such primes exceeds the budget that bounds those minors,
            // they are all exactly zero.
            discarded_product *= p;
            (discarded_product > budget)
                .then_some(Verdict::NotNut(NotNutReason::NullityAtLeastTwo))
        } else {
            good.push(evidence.len() - 1);
            good_product *= p;
            (good_product > budget).then(|| decide_from_kernels(n, &evidence, &good))
        };
        if let Some(v) = verdict {
            return NutCertificate {
                verdict: v,
                budget,
                fast_path,
                evidence,
            };
        }
        p = next_prime_below(p);
    }
}

/// Nullity is exactly one and the recording primes jointly exceed the
/// budget: a kernel coordinate is nonzero over the integers iff some
/// recorded residue vector is nonzero there.
fn decide_from_kernels(n: usize, evidence: &[PrimeEvidence], good: &[usize]) -> Verdict {
    let covered = (0..n).all(|i| {
        good.iter().any(|&e| {
            evidence[e]
                .kernel
                .as_ref()
                .is_some_and(|v| v[i] != 0)
        })
    });
    if covered {
        Verdict::Nut
    } else {
        Verdict::NotNut(NotNutReason::KernelHasZero)
    }
}

/// Bordered nut test in residue arithmetic. `parent_inverse` is the inverse
/// adjacency matrix of an order `n-1` graph mod some prime, and `b` is the
/// 0/1 neighbourhood row of a prospective vertex `n`. The extended matrix is
/// singular with fully supported kernel mod that prime iff `b M b^T = 0` and
/// `b M` has no zero entry, in which case `(b M | -1)` spans the kernel.
///
/// When the prime exceeds the determinant budget of the extended order this
/// residue verdict is the exact one.
pub fn child_is_nut_mod_p(parent_inverse: &ModPMatrix, b: &[u64]) -> Result<bool, ModPError> {
    let (s, w) = parent_inverse.quadratic_form(b)?;
    Ok(s == 0 && w.iter().all(|&x| x != 0))
}

/// Replays a certificate against a graph: recomputes every prime's rank and
/// kernel, then re-derives the verdict from the recorded evidence. Returns
/// false on any mismatch, on a budget below the one the order demands, or on
/// evidence that does not reach a verdict.
pub fn verify_certificate(g: &Graph, cert: &NutCertificate) -> bool {
    let n = g.order();
    if cert.budget < determinant_budget(n.max(1)) {
        return false;
    }
    if n < 2 {
        return cert.verdict == Verdict::NotNut(NotNutReason::OrderTooSmall)
            && cert.evidence.is_empty();
    }
    let mut good: Vec<usize> = Vec::new();
    let mut good_product = BigUint::one();
    let mut discarded_product = BigUint::one();
    let mut last = FIRST_PRIME + 1;
    for (idx, ev) in cert.evidence.iter().enumerate() {
        // Strictly descending keeps the primes distinct; compositeness would
        // wreck every product argument.
        if ev.prime >= last || !crate::schedule::is_prime(ev.prime) {
            return false;
        }
        last = ev.prime;
        let m = ModPMatrix::from_graph(g, ev.prime);
        let (rank, kernel) = m.rank_and_kernel();
        if rank != ev.rank || kernel != ev.kernel {
            return false;
        }
        let concluded = if rank == n {
            Some(Verdict::NotNut(NotNutReason::FullRank))
        } else if rank <= n - 2 {
            discarded_product *= ev.prime;
            (discarded_product > cert.budget)
                .then_some(Verdict::NotNut(NotNutReason::NullityAtLeastTwo))
        } else {
            good.push(idx);
            good_product *= ev.prime;
            (good_product > cert.budget)
                .then(|| decide_from_kernels(n, &cert.evidence, &good))
        };
        match concluded {
            // The verdict must land exactly on the final evidence entry.
            Some(v) => return idx == cert.evidence.len() - 1 && v == cert.verdict,
            None => continue,
        }
    }
    false
}

/// Renders a certificate as line-oriented text.
pub fn render_certificate(g: &Graph, cert: &NutCertificate) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "graph {}", crate::graph6::write_graph6(g)).unwrap();
    writeln!(out, "order {}", g.order()).unwrap();
    writeln!(out, "budget {}", cert.budget).unwrap();
    writeln!(out, "fast-path {}", cert.fast_path).unwrap();
    for ev in &cert.evidence {
        write!(out, "prime {} rank {}", ev.prime, ev.rank).unwrap();
        if let Some(v) = &ev.kernel {
            let joined: Vec<String> = v.iter().map(u64::to_string).collect();
            write!(out, " kernel {}", joined.join(",")).unwrap();
        }
        writeln!(out).unwrap();
    }
    let verdict = match cert.verdict {
        Verdict::Nut => "nut",
        Verdict::NotNut(NotNutReason::OrderTooSmall) => "not-nut order-too-small",
        Verdict::NotNut(NotNutReason::FullRank) => "not-nut full-rank",
        Verdict::NotNut(NotNutReason::NullityAtLeastTwo) => "not-nut nullity-at-least-two",
        Verdict::NotNut(NotNutReason::KernelHasZero) => "not-nut kernel-has-zero",
    };
    writeln!(out, "verdict {verdict}").unwrap();
    out
}
