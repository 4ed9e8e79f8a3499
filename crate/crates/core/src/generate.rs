//! Isomorph-free exhaustive generation of nut graphs of a given order.
//!
//! Graphs grow one vertex at a time: a graph of order k spawns children of
//! order k+1 by joining a new vertex to a subset of the old ones, the empty
//! subset included, since a vertex isolated now may pick up edges later.
//! Ancestors are allowed to be disconnected for the same reason; the targets
//! themselves come out connected because a graph with a fully nonzero kernel
//! vector of nullity one cannot have two components.
//!
//! Isomorph rejection offers two modes. The default accepts a child only
//! when its new vertex lies in the orbit of a canonical deletion vertex
//! (plus one subset per orbit of the parent's automorphism group, which is
//! what makes the representative unique). The dedup mode instead keeps a
//! per-level set of canonical codes; it is slower and memory-hungry but
//! involves none of the canonical-path reasoning, so it serves as a
//! correctness baseline the default mode is tested against.
//!
//! Pruning, all optional and none affecting the emitted set:
//! girth can only shrink when edges arrive, so a short cycle kills a
//! subtree; degrees only grow, so a vertex over the cap kills a subtree;
//! vertices still below degree two must be reachable by the remaining
//! additions, which bounds deficiency and component counts; at the last
//! level, parents whose adjacency matrix is certified singular are dropped,
//! because every vertex-deleted subgraph of a nut graph is nonsingular; and
//! each candidate subset is screened against the parent's cached modular
//! inverse before any full test runs. The screen rejects on a nonzero
//! bordered determinant at any prime; when the prime exceeds the
//! determinant budget of the child order the screen is exact in both
//! directions, which covers every order this module can practically reach.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::canon::{self, canonicalize, check_extension, Canon, Extension};
use crate::graph::Graph;
use crate::modp::ModPMatrix;
use crate::nut::{self, NutTestOptions};
use crate::schedule::{determinant_budget, PrimeSchedule};

/// Orders above this are rejected: neighbour subsets are machine words.
pub const MAX_GEN_ORDER: usize = 64;

/// Search-tree depth at which work is split across threads.
const PARTITION_ORDER: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenMode {
    /// Canonical construction path; the fast default.
    CanonicalPath,
    /// Per-level canonical-code deduplication; the simple baseline.
    Dedup,
}

#[derive(Clone, Debug)]
pub struct GenOptions {
    pub order: usize,
    /// Emit only graphs of girth at least this; values below 4 are vacuous.
    pub min_girth: Option<usize>,
    /// Emit only graphs with maximum degree at most this.
    pub max_degree: Option<usize>,
    /// Connected graphs of maximum degree 3; implies a degree cap of 3.
    pub chemical: bool,
    pub mode: GenMode,
    /// Passed through to the final nut test, for differential testing.
    pub force_multi_prime: bool,
    pub prune_girth: bool,
    pub prune_degree: bool,
    pub prune_singular: bool,
    pub prune_screen: bool,
    pub prune_reach: bool,
}

impl GenOptions {
    pub fn new(order: usize) -> Self {
        GenOptions {
            order,
            min_girth: None,
            max_degree: None,
            chemical: false,
            mode: GenMode::CanonicalPath,
            force_multi_prime: false,
            prune_girth: true,
            prune_degree: true,
            prune_singular: true,
            prune_screen: true,
            prune_reach: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("target order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("generation is limited to order {max}, got {got}")]
    OrderTooLarge { got: usize, max: usize },
}

struct Ctx {
    n: usize,
    /// Effective degree cap; `n` when no cap was asked for.
    d_cap: usize,
    degree_capped: bool,
    girth_min: Option<usize>,
    chemical: bool,
    opts: GenOptions,
    parent_schedule: PrimeSchedule,
    child_budget: BigUint,
    nut_opts: NutTestOptions,
}

impl Ctx {
    fn new(opts: &GenOptions) -> Result<Ctx, GenError> {
        let n = opts.order;
        if n < 2 {
            return Err(GenError::OrderTooSmall(n));
        }
        if n > MAX_GEN_ORDER {
            return Err(GenError::OrderTooLarge {
                got: n,
                max: MAX_GEN_ORDER,
            });
        }
        let degree_capped = opts.chemical || opts.max_degree.is_some();
        let d_cap = if opts.chemical {
            opts.max_degree.map_or(3, |d| d.min(3))
        } else {
            opts.max_degree.unwrap_or(n)
        };
        Ok(Ctx {
            n,
            d_cap,
            degree_capped,
            girth_min: opts.min_girth.filter(|&g| g >= 4),
            chemical: opts.chemical,
            opts: opts.clone(),
            parent_schedule: PrimeSchedule::for_order(n - 1),
            child_budget: determinant_budget(n),
            nut_opts: NutTestOptions {
                force_multi_prime: opts.force_multi_prime,
            },
        })
    }

    /// Constraint check on an emitted graph; independent of any pruning.
    fn final_ok(&self, g: &Graph) -> bool {
        if let Some(want) = self.girth_min {
            if g.girth().is_some_and(|c| c < want) {
                return false;
            }
        }
        if self.degree_capped && g.max_degree() > self.d_cap {
            return false;
        }
        if self.chemical && !g.is_chemical() {
            return false;
        }
        true
    }
}

/// Streams every nut graph matching `opts` into a fold. Workers own
/// disjoint subtrees; their accumulators are merged in a fixed order, so
/// the result does not depend on thread count or scheduling.
pub fn generate_fold<T, MK, ST, MG>(
    opts: &GenOptions,
    make: MK,
    step: ST,
    merge: MG,
) -> Result<T, GenError>
where
    T: Send,
    MK: Fn() -> T + Sync,
    ST: Fn(&mut T, &Graph) + Sync,
    MG: Fn(T, T) -> T,
{
    let ctx = Ctx::new(opts)?;
    if ctx.d_cap < 2 {
        // Minimum degree 2 is forced, so such a cap admits nothing.
        return Ok(make());
    }
    let root = Graph::empty(1);
    match ctx.opts.mode {
        GenMode::Dedup => {
            let mut acc = make();
            run_dedup(&ctx, &mut |g| step(&mut acc, g));
            Ok(acc)
        }
        GenMode::CanonicalPath => {
            if ctx.n <= PARTITION_ORDER + 1 {
                let mut acc = make();
                dfs(&ctx, &root, &canonicalize(&root), usize::MAX, &mut |g| {
                    step(&mut acc, g)
                });
                return Ok(acc);
            }
            let mut roots: Vec<Graph> = Vec::new();
            dfs(&ctx, &root, &canonicalize(&root), PARTITION_ORDER, &mut |g| {
                roots.push(g.clone())
            });
            let parts: Vec<T> = roots
                .par_iter()
                .map(|r| {
                    let mut acc = make();
                    dfs(&ctx, r, &canonicalize(r), usize::MAX, &mut |g| {
                        step(&mut acc, g)
                    });
                    acc
                })
                .collect();
            Ok(parts.into_iter().fold(make(), merge))
        }
    }
}

/// All nut graphs matching `opts`, one per isomorphism class.
pub fn generate(opts: &GenOptions) -> Result<Vec<Graph>, GenError> {
    generate_fold(
        opts,
        Vec::new,
        |acc, g| acc.push(g.clone()),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

/// One representative per isomorphism class of simple graphs of the given
/// order, connected or not; mainly a validation aid.
pub fn all_graphs(order: usize) -> Result<Vec<Graph>, GenError> {
    if order == 0 {
        return Err(GenError::OrderTooSmall(0));
    }
    if order > MAX_GEN_ORDER {
        return Err(GenError::OrderTooLarge {
            got: order,
            max: MAX_GEN_ORDER,
        });
    }
    fn rec(g: &Graph, canon: &Canon, target: usize, out: &mut Vec<Graph>) {
        if g.order() == target {
            out.push(g.clone());
            return;
        }
        let full: u64 = (1u64 << g.order()) - 1;
        for sub in 0..=full {
            if !canon::subset_is_orbit_min(sub, &canon.generators) {
                continue;
            }
            let child = g.with_appended_vertex(&[sub]);
            match check_extension(&child) {
                Extension::Reject => {}
                Extension::Accept => rec(&child, &canonicalize(&child), target, out),
                Extension::AcceptCanon(cc) => rec(&child, &cc, target, out),
            }
        }
    }
    let root = Graph::empty(1);
    let mut out = Vec::new();
    rec(&root, &canonicalize(&root), order, &mut out);
    Ok(out)
}

/// Depth-first canonical-path walk. `stop_order` truncates the walk for
/// work partitioning; final-level handling kicks in at order n-1.
fn dfs(ctx: &Ctx, g: &Graph, canon: &Canon, stop_order: usize, sink: &mut dyn FnMut(&Graph)) {
    if g.order() == stop_order {
        sink(g);
        return;
    }
    if g.order() == ctx.n - 1 {
        finish_parent(
            ctx,
            g,
            &canon.generators,
            &mut |child| !matches!(check_extension(child), Extension::Reject),
            sink,
        );
        return;
    }
    for_each_child(ctx, g, &canon.generators, &mut |child| {
        match check_extension(&child) {
            Extension::Reject => {}
            Extension::Accept => dfs(ctx, &child, &canonicalize(&child), stop_order, sink),
            Extension::AcceptCanon(cc) => dfs(ctx, &child, &cc, stop_order, sink),
        }
    });
}

/// Level-by-level walk deduplicating by canonical code.
fn run_dedup(ctx: &Ctx, sink: &mut dyn FnMut(&Graph)) {
    let mut level = vec![Graph::empty(1)];
    for cur in 1..ctx.n {
        let last = cur + 1 == ctx.n;
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next: Vec<Graph> = Vec::new();
        for g in &level {
            let canon = canonicalize(g);
            if last {
                finish_parent(
                    ctx,
                    g,
                    &canon.generators,
                    &mut |child| seen.insert(canon::canonical_code(child)),
                    sink,
                );
            } else {
                for_each_child(ctx, g, &canon.generators, &mut |child| {
                    if seen.insert(canon::canonical_code(&child)) {
                        next.push(child);
                    }
                });
            }
        }
        level = next;
    }
}

/// Enumerates the structurally viable children of an interior parent, one
/// neighbour subset per orbit of the parent's automorphisms, empty subset
/// included.
fn for_each_child(ctx: &Ctx, g: &Graph, gens: &[Vec<usize>], f: &mut dyn FnMut(Graph)) {
    let m = g.order();
    let full: u64 = (1u64 << m) - 1;
    let allowed: u64 = if ctx.degree_capped {
        (0..m)
            .filter(|&v| g.degree(v) < ctx.d_cap)
            .fold(0, |a, v| a | 1 << v)
    } else {
        full
    };
    for sub in 0..=full {
        if ctx.opts.prune_degree && ctx.degree_capped {
            if sub & !allowed != 0 {
                continue;
            }
            if (sub.count_ones() as usize) > ctx.d_cap {
                continue;
            }
        }
        if !canon::subset_is_orbit_min(sub, gens) {
            continue;
        }
        let child = g.with_appended_vertex(&[sub]);
        if ctx.opts.prune_girth {
            if let Some(want) = ctx.girth_min {
                if child.shortest_cycle_through(m).is_some_and(|c| c < want) {
                    continue;
                }
            }
        }
        if ctx.opts.prune_reach && !reach_ok(ctx, &child) {
            continue;
        }
        f(child);
    }
}

/// Whether vertices still under degree 2 and the component structure can
/// be repaired by the additions that remain. Edges between current
/// vertices are frozen from here on, which is what makes these bounds
/// valid: each of the `r` future vertices contributes at most `d_cap` edge
/// endpoints to the current graph and can merge at most `d_cap` pieces.
fn reach_ok(ctx: &Ctx, child: &Graph) -> bool {
    let r = ctx.n - child.order();
    let mut deficiency = 0usize;
    for v in 0..child.order() {
        let need = 2usize.saturating_sub(child.degree(v));
        if need > r {
            // A vertex needs that many distinct future neighbours.
            return false;
        }
        deficiency += need;
    }
    if deficiency > ctx.d_cap * r {
        return false;
    }
    child.component_count() <= r * (ctx.d_cap - 1) + 1
}

/// Handles a parent of order n-1: certify or refute singularity, screen
/// each neighbour subset against the cached inverse, and push survivors
/// through isomorph rejection, the full nut test and the constraint check.
fn finish_parent(
    ctx: &Ctx,
    parent: &Graph,
    gens: &[Vec<usize>],
    accept: &mut dyn FnMut(&Graph) -> bool,
    sink: &mut dyn FnMut(&Graph),
) {
    let m = parent.order();
    debug_assert_eq!(m + 1, ctx.n);
    if ctx.degree_capped && (0..m).any(|v| parent.degree(v) > ctx.d_cap) {
        return;
    }
    // The one remaining vertex must lift everything to degree 2: it cannot
    // help a degree-0 vertex (one edge at most), must join every degree-1
    // vertex, and may not exceed the cap itself.
    let mut forced: u64 = 0;
    for v in 0..m {
        match parent.degree(v) {
            0 => return,
            1 => forced |= 1 << v,
            _ => {}
        }
    }
    let allowed: u64 = (0..m)
        .filter(|&v| parent.degree(v) < ctx.d_cap)
        .fold(0, |a, v| a | 1 << v);
    if forced & !allowed != 0 || (forced.count_ones() as usize) > ctx.d_cap {
        return;
    }

    let mut cached: Option<(u64, ModPMatrix)> = None;
    let mut singular_product = BigUint::one();
    let mut certified_singular = false;
    for &p in ctx.parent_schedule.primes() {
        if let Some(inv) = ModPMatrix::from_graph(parent, p).inverse() {
            cached = Some((p, inv));
            break;
        }
        singular_product *= p;
        if &singular_product > ctx.parent_schedule.budget() {
            certified_singular = true;
            break;
        }
    }
    if certified_singular {
        if ctx.opts.prune_singular {
            return;
        }
        // No inverse exists at any accumulated prime; the nut test below
        // rejects every child of such a parent on its own.
        cached = None;
    }
    let screen_exact = cached
        .as_ref()
        .is_some_and(|(p, _)| BigUint::from(*p) > ctx.child_budget);

    let free = allowed & !forced;
    let mut wbuf = vec![0u64; m];
    let mut sub: u64 = 0;
    loop {
        let b = forced | sub;
        let k = b.count_ones() as usize;
        if k >= 2 && k <= ctx.d_cap {
            let mut screened = false;
            let mut pass = true;
            if ctx.opts.prune_screen {
                if let Some((_, inv)) = &cached {
                    let (s_zero, w_nonzero) = screen_subset(inv, b, &mut wbuf);
                    // Rejecting on a nonzero bordered determinant is sound
                    // at any prime; the kernel-entry check is sound only
                    // past the budget.
                    pass = s_zero && (!screen_exact || w_nonzero);
                    screened = screen_exact;
                }
            }
            if pass && canon::subset_is_orbit_min(b, gens) {
                let child = parent.with_appended_vertex(&[b]);
                if accept(&child) {
                    let cert = nut::is_nut_with(&child, ctx.nut_opts);
                    if screened {
                        assert!(
                            cert.is_nut(),
                            "exact screen and certified test disagree on {child:?}"
                        );
                    }
                    if cert.is_nut() && ctx.final_ok(&child) {
                        sink(&child);
                    }
                }
            }
        }
        sub = sub.wrapping_sub(free) & free;
        if sub == 0 {
            break;
        }
    }
}

/// The bordered screen against a cached inverse: with `w` the sum of the
/// inverse's rows picked by `b`, returns whether `b w` vanishes and whether
/// `w` is coordinate-wise nonzero. Raw sums stay far below overflow: at
/// most 63 addends under 2^31 each, reduced once.
pub(crate) fn screen_subset(inv: &ModPMatrix, b: u64, wbuf: &mut [u64]) -> (bool, bool) {
    let m = inv.side();
    let p = inv.modulus();
    let wbuf = &mut wbuf[..m];
    wbuf.fill(0);
    let mut bits = b;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        for (w, x) in wbuf.iter_mut().zip(inv.row(i)) {
            *w += x;
        }
    }
    let mut s = 0u64;
    let mut bits = b;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        s += wbuf[j];
    }
    (s % p == 0, wbuf.iter().all(|&w| w % p != 0))
}
