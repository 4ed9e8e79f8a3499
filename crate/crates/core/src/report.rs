//! Per-graph reports and frequency tables over the exact invariants.
//!
//! [`analyze`] runs the certified nut test and, on success, one exact
//! characteristic-polynomial pass that yields everything reported: the
//! kernel vector and its entry-ratio spread, the eigenvalue sign counts,
//! the position of the zero eigenvalue, and the charge at which it would be
//! half-filled. A disagreement between the modular verdict and the exact
//! arithmetic is never smoothed over; it surfaces as [`AnalyzeError::Internal`].
//!
//! [`StatsTable`] accumulates reports per order. Accumulators merge
//! associatively, so tables can be filled from parallel workers and still
//! come out identical to a sequential run.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::{inertia_from_charpoly, Inertia, IntMatrix};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::nut::{self, NotNutReason, NutTestOptions, Verdict};

/// Everything the analysis knows about one nut graph.
#[derive(Clone, Debug)]
pub struct NutReport {
    pub graph6: String,
    pub order: usize,
    /// Kernel vector, integer entries with content 1.
    pub kernel: Vec<BigInt>,
    /// max |v_i| / min |v_i| over the kernel entries, reduced.
    pub r: BigRational,
    pub inertia: Inertia,
    /// Position of the zero eigenvalue relative to the middle of the
    /// descending spectrum.
    pub nbo_offset: i64,
    /// n_plus - n_minus.
    pub delta_q: i64,
    pub girth: Option<usize>,
    pub chemical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalyzeError {
    #[error("not a nut graph: {0}")]
    NotNut(NotNutReason),
    #[error("internal verdict disagreement: {0}")]
    Internal(String),
}

/// Full report for `g`, or why it is not a nut graph.
pub fn analyze(g: &Graph) -> Result<NutReport, AnalyzeError> {
    analyze_with(g, NutTestOptions::default())
}

/// As [`analyze`], with the nut-test knobs exposed.
pub fn analyze_with(g: &Graph, opts: NutTestOptions) -> Result<NutReport, AnalyzeError> {
    let cert = nut::is_nut_with(g, opts);
    if let Verdict::NotNut(reason) = cert.verdict {
        return Err(AnalyzeError::NotNut(reason));
    }
    // One exact pass; everything below must agree with the verdict above.
    let m = IntMatrix::from_graph(g);
    let (charpoly, _) = m.char_poly_adjugate();
    let inertia = inertia_from_charpoly(&charpoly);
    if inertia.n_zero != 1 {
        return Err(AnalyzeError::Internal(format!(
            "certified nut but exact nullity is {}",
            inertia.n_zero
        )));
    }
    let kernel = m
        .kernel_vector()
        .map_err(|e| AnalyzeError::Internal(format!("certified nut but kernel failed: {e}")))?;
    if kernel.has_zero_entry() {
        return Err(AnalyzeError::Internal(
            "certified nut but exact kernel has a zero entry".into(),
        ));
    }
    let r = kernel
        .r_ratio()
        .map_err(|_| AnalyzeError::Internal("zero entry after the zero check".into()))?;
    let nbo_offset = inertia
        .nbo_offset()
        .map_err(|_| AnalyzeError::Internal("nullity changed between checks".into()))?;
    Ok(NutReport {
        graph6: write_graph6(g),
        order: g.order(),
        kernel: kernel.entries().to_vec(),
        r,
        inertia,
        nbo_offset,
        delta_q: inertia.delta_q(),
        girth: g.girth(),
        chemical: g.is_chemical(),
    })
}

/// Frequency data for one graph order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderStats {
    pub count: usize,
    /// Girth frequencies; key `usize::MAX` buckets acyclic graphs, which
    /// cannot occur for nut graphs but keeps the accumulator total.
    pub girth_hist: BTreeMap<usize, usize>,
    pub nbo_hist: BTreeMap<i64, usize>,
    pub min_r: Option<(BigRational, usize)>,
    pub max_r: Option<(BigRational, usize)>,
    /// Graphs with the zero eigenvalue exactly central and r = 2.
    pub central_r2: usize,
}

impl OrderStats {
    fn add(&mut self, rep: &NutReport) {
        self.count += 1;
        *self
            .girth_hist
            .entry(rep.girth.unwrap_or(usize::MAX))
            .or_insert(0) += 1;
        *self.nbo_hist.entry(rep.nbo_offset).or_insert(0) += 1;
        bump_extreme(&mut self.min_r, &rep.r, true);
        bump_extreme(&mut self.max_r, &rep.r, false);
        if rep.nbo_offset == 0 && rep.r == BigRational::from(BigInt::from(2)) {
            self.central_r2 += 1;
        }
    }

    fn merge(&mut self, other: OrderStats) {
        self.count += other.count;
        for (k, v) in other.girth_hist {
            *self.girth_hist.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.nbo_hist {
            *self.nbo_hist.entry(k).or_insert(0) += v;
        }
        merge_extreme(&mut self.min_r, other.min_r, true);
        merge_extreme(&mut self.max_r, other.max_r, false);
        self.central_r2 += other.central_r2;
    }
}

fn bump_extreme(slot: &mut Option<(BigRational, usize)>, r: &BigRational, take_min: bool) {
    match slot {
        None => *slot = Some((r.clone(), 1)),
        Some((cur, freq)) => {
            if *cur == *r {
                *freq += 1;
            } else if (r < cur) == take_min {
                *slot = Some((r.clone(), 1));
            }
        }
    }
}

fn merge_extreme(
    slot: &mut Option<(BigRational, usize)>,
    other: Option<(BigRational, usize)>,
    take_min: bool,
) {
    let Some((r, freq)) = other else { return };
    match slot {
        None => *slot = Some((r, freq)),
        Some((cur, cur_freq)) => {
            if *cur == r {
                *cur_freq += freq;
            } else if (r < *cur) == take_min {
                *slot = Some((r, freq));
            }
        }
    }
}

/// Frequency tables keyed by graph order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StatsTable {
    rows: BTreeMap<usize, OrderStats>,
}

impl StatsTable {
    pub fn new() -> StatsTable {
        StatsTable::default()
    }

    pub fn add(&mut self, rep: &NutReport) {
        self.rows.entry(rep.order).or_default().add(rep);
    }

    pub fn merge(&mut self, other: StatsTable) {
        for (order, stats) in other.rows {
            self.rows.entry(order).or_default().merge(stats);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn total(&self) -> usize {
        self.rows.values().map(|s| s.count).sum()
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, order: usize) -> Option<&OrderStats> {
        self.rows.get(&order)
    }

    /// Machine-readable table: one tab-separated line per order, histograms
    /// as comma-joined `key:count` pairs, rationals as reduced `p/q`.
    pub fn render_tsv(&self) -> String {
        let mut out = String::from(
            "order\tcount\tgirth\tnbo\tmin_r\tmin_r_count\tmax_r\tmax_r_count\tcentral_r2\n",
        );
        for (order, s) in &self.rows {
            let girth = join_hist(&s.girth_hist, |k| {
                if *k == usize::MAX {
                    "acyclic".to_string()
                } else {
                    k.to_string()
                }
            });
            let nbo = join_hist(&s.nbo_hist, |k| format!("{k:+}"));
            let (min_r, min_c) = extreme_fields(&s.min_r, false);
            let (max_r, max_c) = extreme_fields(&s.max_r, false);
            writeln!(
                out,
                "{order}\t{}\t{girth}\t{nbo}\t{min_r}\t{min_c}\t{max_r}\t{max_c}\t{}",
                s.count, s.central_r2
            )
            .unwrap();
        }
        out
    }

    /// Human-readable table with aligned columns.
    pub fn render_aligned(&self) -> String {
        if self.rows.is_empty() {
            return String::from("no graphs\n");
        }
        let header = [
            "order", "count", "girth", "nbo", "min r", "freq", "max r", "freq", "k=0,r=2",
        ];
        let mut grid: Vec<[String; 9]> = Vec::new();
        for (order, s) in &self.rows {
            let girth = join_hist(&s.girth_hist, |k| {
                if *k == usize::MAX {
                    "acyclic".to_string()
                } else {
                    k.to_string()
                }
            });
            let nbo = join_hist(&s.nbo_hist, |k| format!("{k:+}"));
            let (min_r, min_c) = extreme_fields(&s.min_r, true);
            let (max_r, max_c) = extreme_fields(&s.max_r, true);
            grid.push([
                order.to_string(),
                s.count.to_string(),
                girth,
                nbo,
                min_r,
                min_c,
                max_r,
                max_c,
                s.central_r2.to_string(),
            ]);
        }
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &grid {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let emit = |out: &mut String, cells: &[String]| {
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                out.push_str(cell);
                for _ in cell.len()..widths[i] {
                    out.push(' ');
                }
            }
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        };
        let head: Vec<String> = header.iter().map(|s| s.to_string()).collect();
        emit(&mut out, &head);
        for row in &grid {
            emit(&mut out, row);
        }
        out
    }
}

fn join_hist<K: Ord>(hist: &BTreeMap<K, usize>, key: impl Fn(&K) -> String) -> String {
    if hist.is_empty() {
        return "-".to_string();
    }
    hist.iter()
        .map(|(k, v)| format!("{}:{v}", key(k)))
        .collect::<Vec<_>>()
        .join(",")
}

fn extreme_fields(slot: &Option<(BigRational, usize)>, human: bool) -> (String, String) {
    match slot {
        None => ("-".to_string(), "0".to_string()),
        Some((r, freq)) => (rational_str(r, human), freq.to_string()),
    }
}

/// `p/q` reduced; in human form integers drop the `/1`.
pub fn rational_str(r: &BigRational, human: bool) -> String {
    if human && r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
