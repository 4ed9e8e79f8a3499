//! Canonical labelling, automorphism orbits and the canonical extension test
//! behind isomorph-free generation.
//!
//! The labelling search is the usual refine-and-individualise scheme. An
//! ordered partition of the vertices is refined to equitability (every cell
//! sees every splitter cell with uniform neighbour counts); while a
//! non-singleton cell remains, each of its vertices is individualised in
//! turn and the search recurses. Every discrete partition reached is a
//! candidate labelling, scored by the relabelled adjacency bit string; the
//! lexicographically greatest one is canonical.
//!
//! Two classic prunings keep the tree small. Leaves scoring equal to a
//! reference leaf yield automorphisms, and candidates lying in the orbit of
//! an already-explored sibling under the automorphisms that fix the current
//! individualisation prefix are skipped. On finding an automorphism the
//! search also jumps straight back to the deepest common ancestor of the
//! current leaf and the first leaf; the skipped region contains only images
//! of explored branches. Without that jump a highly symmetric graph (an
//! edgeless one, say) costs factorial time, with it the search stays
//! quadratic there.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Canon {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// `orbits[v]` is the least vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
    /// Generators of the automorphism group, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

/// Runs the labelling search on `g`.
pub fn canonicalize(g: &Graph) -> Canon {
    let n = g.order();
    let mut s = Searcher {
        g,
        n,
        key_words: n.div_ceil(64),
        pos_buf: vec![0; n],
        first: None,
        best: None,
        gens: Vec::new(),
        path: Vec::new(),
    };
    let cells = vec![(0..n).collect::<Vec<usize>>()];
    let mut queue = VecDeque::new();
    queue.push_back(s.mask_of(&cells[0]));
    s.descend(cells, queue);
    let best = s.best.expect("search visits at least one leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in best.order.iter().enumerate() {
        labeling[v] = i;
    }
    let orbits = orbits_from_generators(n, &s.gens);
    Canon {
        labeling,
        orbits,
        generators: s.gens,
    }
}

/// `g` relabelled into canonical position order.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonicalize(g).labeling)
}

/// A byte string equal for two graphs iff they are isomorphic: the graph6
/// encoding of the canonical form.
pub fn canonical_code(g: &Graph) -> Vec<u8> {
    crate::graph6::write_graph6(&canonical_form(g)).into_bytes()
}

/// Orbit partition (least orbit member per vertex) spanned by `gens`.
pub fn orbits_from_generators(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for g in gens {
        for v in 0..n {
            let (a, b) = (find(&mut uf, v), find(&mut uf, g[v]));
            if a != b {
                let lo = a.min(b);
                uf[a.max(b)] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut uf, v)).collect()
}

/// True iff `mask` is the numerically least subset in its orbit under the
/// vertex permutations `gens`. Masks are over vertices `0..=63`.
pub fn subset_is_orbit_min(mask: u64, gens: &[Vec<usize>]) -> bool {
    if gens.is_empty() || mask == 0 {
        return true;
    }
    let mut seen = vec![mask];
    let mut stack = vec![mask];
    while let Some(m) = stack.pop() {
        for g in gens {
            let mut img = 0u64;
            let mut bits = m;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                img |= 1 << g[b];
            }
            if img < mask {
                return false;
            }
            if !seen.contains(&img) {
                seen.push(img);
                stack.push(img);
            }
        }
    }
    true
}

/// Deciding vertex set of the deletion rule: vertices minimising the pair
/// (degree, sorted neighbour degrees).
fn deletion_candidates(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let inv = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).map(|u| degs[u]).collect();
        nd.sort_unstable();
        (degs[v], nd)
    };
    let mut best = inv(0);
    let mut out = vec![0];
    for v in 1..n {
        let iv = inv(v);
        match iv.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = iv;
                out.clear();
                out.push(v);
            }
            std::cmp::Ordering::Equal => out.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    out
}

/// Outcome of the extension rule. `AcceptCanon` hands back the labelling
/// run the decision needed, so an accepting caller can reuse it.
pub(crate) enum Extension {
    Reject,
    Accept,
    AcceptCanon(Canon),
}

/// The extension rule on `child` alone; see [`is_canonical_extension`].
pub(crate) fn check_extension(child: &Graph) -> Extension {
    let new = child.order() - 1;
    let cands = deletion_candidates(child);
    if !cands.contains(&new) {
        return Extension::Reject;
    }
    if cands.len() == 1 {
        return Extension::Accept;
    }
    let canon = canonicalize(child);
    let deleted = *cands
        .iter()
        .max_by_key(|&&v| canon.labeling[v])
        .expect("candidate set is nonempty");
    if canon.orbits[new] == canon.orbits[deleted] {
        Extension::AcceptCanon(canon)
    } else {
        Extension::Reject
    }
}

/// Decides whether `child` (which must be `parent` plus one vertex carrying
/// the highest label) is the canonical way to reach its isomorphism class.
///
/// The rule: the canonical deletion vertex of `child` is the member of
/// [`deletion_candidates`] holding the highest canonical position, and the
/// extension is accepted iff the new vertex shares its orbit. Membership of
/// the candidate set is checked first, which usually settles the question
/// without a labelling run: the candidate set is closed under automorphisms,
/// so a new vertex outside it can never share the deletion vertex's orbit,
/// and a candidate set equal to `{new}` leaves no other choice.
pub fn is_canonical_extension(parent: &Graph, child: &Graph) -> bool {
    debug_assert_eq!(child.order(), parent.order() + 1);
    debug_assert!(
        &child.delete_vertex(child.order() - 1) == parent,
        "child must extend parent by the last vertex"
    );
    !matches!(check_extension(child), Extension::Reject)
}

struct Leaf {
    key: Vec<u64>,
    order: Vec<usize>,
    path: Vec<usize>,
}

enum Flow {
    Continue,
    Jump(usize),
}

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    key_words: usize,
    pos_buf: Vec<usize>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn mask_of(&self, cell: &[usize]) -> Vec<u64> {
        let mut m = vec![0u64; self.g.row_words()];
        for &v in cell {
            m[v / 64] |= 1 << (v % 64);
        }
        m
    }

    /// Refines to equitability, consuming the splitter queue. Split cells
    /// are ordered by ascending neighbour count.
    fn refine(&self, cells: &mut Vec<Vec<usize>>, queue: &mut VecDeque<Vec<u64>>) {
        while let Some(splitter) = queue.pop_front() {
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut by_count: Vec<(usize, Vec<usize>)> = Vec::new();
                for &v in &cell {
                    let row = self.g.row(v);
                    let count: usize = row
                        .iter()
                        .zip(&splitter)
                        .map(|(r, s)| (r & s).count_ones() as usize)
                        .sum();
                    match by_count.binary_search_by_key(&count, |e| e.0) {
                        Ok(i) => by_count[i].1.push(v),
                        Err(i) => by_count.insert(i, (count, vec![v])),
                    }
                }
                if by_count.len() == 1 {
                    next.push(by_count.pop().unwrap().1);
                } else {
                    for (_, part) in by_count {
                        queue.push_back(self.mask_of(&part));
                        next.push(part);
                    }
                }
            }
            *cells = next;
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>, mut queue: VecDeque<Vec<u64>>) -> Flow {
        self.refine(&mut cells, &mut queue);
        let Some(tidx) = target_cell(&cells) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            return self.leaf(order);
        };
        let depth = self.path.len();
        let tcell = cells[tidx].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &tcell {
            if !tried.is_empty() && self.in_explored_orbit(v, &tried) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = tcell.iter().copied().filter(|&u| u != v).collect();
            child[tidx] = vec![v];
            child.insert(tidx + 1, rest);
            let mut child_queue = VecDeque::new();
            child_queue.push_back(self.mask_of(&[v]));
            self.path.push(v);
            let flow = self.descend(child, child_queue);
            self.path.pop();
            tried.push(v);
            if let Flow::Jump(d) = flow {
                if d < depth {
                    return Flow::Jump(d);
                }
            }
        }
        Flow::Continue
    }

    fn leaf(&mut self, order: Vec<usize>) -> Flow {
        let key = self.key_of(&order);
        let mut flow = Flow::Continue;
        let mut recorded = false;
        match &self.first {
            None => {
                self.first = Some(Leaf {
                    key: key.clone(),
                    order: order.clone(),
                    path: self.path.clone(),
                });
            }
            Some(first) if key == first.key => {
                let sigma = compose_aut(&order, &first.order, &mut self.pos_buf);
                let meet = common_prefix(&self.path, &first.path);
                self.gens.push(sigma);
                recorded = true;
                flow = Flow::Jump(meet);
            }
            Some(_) => {}
        }
        match &self.best {
            Some(best) if key == best.key => {
                if !recorded && order != best.order {
                    let sigma = compose_aut(&order, &best.order, &mut self.pos_buf);
                    self.gens.push(sigma);
                }
            }
            Some(best) if key > best.key => {
                self.best = Some(Leaf {
                    key,
                    order,
                    path: self.path.clone(),
                });
            }
            Some(_) => {}
            None => {
                self.best = Some(Leaf {
                    key,
                    order,
                    path: self.path.clone(),
                });
            }
        }
        flow
    }

    /// The adjacency bit string of the graph relabelled by `order`, row by
    /// row, most significant bit first within each word.
    fn key_of(&mut self, order: &[usize]) -> Vec<u64> {
        for (i, &v) in order.iter().enumerate() {
            self.pos_buf[v] = i;
        }
        let mut key = vec![0u64; self.n * self.key_words];
        for (i, &v) in order.iter().enumerate() {
            let row = &mut key[i * self.key_words..(i + 1) * self.key_words];
            for u in self.g.neighbors(v) {
                let j = self.pos_buf[u];
                row[j / 64] |= 1 << (63 - j % 64);
            }
        }
        key
    }

    fn in_explored_orbit(&self, v: usize, tried: &[usize]) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .gens
            .iter()
            .filter(|sigma| self.path.iter().all(|&x| sigma[x] == x))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut uf: Vec<usize> = (0..self.n).collect();
        fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for sigma in fixing {
            for u in 0..self.n {
                let (a, b) = (find(&mut uf, u), find(&mut uf, sigma[u]));
                if a != b {
                    uf[a] = b;
                }
            }
        }
        let rv = find(&mut uf, v);
        tried.iter().any(|&t| find(&mut uf, t) == rv)
    }
}

/// First cell of minimal size at least two, or `None` when discrete.
fn target_cell(cells: &[Vec<usize>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, c) in cells.iter().enumerate() {
        if c.len() >= 2 && best.is_none_or(|b| c.len() < cells[b].len()) {
            best = Some(i);
        }
    }
    best
}

/// The automorphism mapping leaf `cur` onto leaf `reference`: position by
/// position, the vertex at position `i` of `cur` goes to the vertex at
/// position `i` of `reference`.
fn compose_aut(cur: &[usize], reference: &[usize], pos_buf: &mut [usize]) -> Vec<usize> {
    let n = cur.len();
    for (i, &v) in cur.iter().enumerate() {
        pos_buf[v] = i;
    }
    (0..n).map(|v| reference[pos_buf[v]]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
