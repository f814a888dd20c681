//! Recognition and classification of Deza graphs, and the parameter
//! arithmetic that goes with them.
//!
//! Classification looks at the common-neighbour count of every vertex pair.
//! A regular graph where that count takes exactly two values b >= a is a
//! Deza graph; if the value is determined by adjacency it is strongly
//! regular instead. "Strictly Deza" additionally demands diameter 2 and not
//! strongly regular.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphKind {
    Complete,
    Empty,
    StronglyRegular,
    Deza,
    NotRegular,
    Other,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GraphKind::Complete => "Complete",
            GraphKind::Empty => "Empty",
            GraphKind::StronglyRegular => "StronglyRegular",
            GraphKind::Deza => "Deza",
            GraphKind::NotRegular => "NotRegular",
            GraphKind::Other => "Other",
        };
        f.write_str(s)
    }
}

/// One vertex pair realizing a common-neighbour value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub value: u32,
    pub pair: (usize, usize),
}

/// Everything `classify` learns about a graph. Serializes with a fixed field
/// order; absent quantities are null.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DezaReport {
    pub n: usize,
    pub k: Option<u32>,
    pub kind: GraphKind,
    pub b: Option<u32>,
    pub a: Option<u32>,
    pub alpha: Option<u32>,
    pub beta: Option<u32>,
    pub strictly_deza: bool,
    pub edge_regular: Option<u32>,
    pub coedge_regular: Option<u32>,
    pub diameter: Option<u32>,
    pub witnesses: Vec<Witness>,
}

impl DezaReport {
    /// The two common-neighbour values (b, a) with b > a, when the graph has
    /// them: kind Deza always, kind StronglyRegular when lambda != mu.
    pub fn two_values(&self) -> Option<(u32, u32)> {
        match self.kind {
            GraphKind::Deza => Some((self.b?, self.a?)),
            GraphKind::StronglyRegular => {
                let l = self.edge_regular?;
                let m = self.coedge_regular?;
                (l != m).then(|| (l.max(m), l.min(m)))
            }
            _ => None,
        }
    }
}

/// For a Deza graph (n, k, b, a) with b > a, every vertex sees exactly
/// `alpha` other vertices with common-neighbour value a and `beta` with
/// value b:
///
///   alpha = (b(n-1) - k(k-1)) / (b - a)
///   beta  = (k(k-1) - a(n-1)) / (b - a)
///
/// These always satisfy alpha + beta = n - 1 and a*alpha + b*beta = k(k-1).
pub fn alpha_beta(n: u64, k: u64, b: u64, a: u64) -> Result<(u64, u64), Error> {
    if !(a <= b && b <= k && k < n) {
        return Err(Error::InvalidFamilyParams(format!(
            "need a <= b <= k < n, got (n, k, b, a) = ({n}, {k}, {b}, {a})"
        )));
    }
    if a == b {
        return Err(Error::DegenerateParams(
            "a = b leaves the vertex split undetermined".into(),
        ));
    }
    let paths = k * (k - 1);
    let top_alpha = (b * (n - 1)) as i64 - paths as i64;
    let top_beta = paths as i64 - (a * (n - 1)) as i64;
    let d = (b - a) as i64;
    if top_alpha < 0 || top_beta < 0 || top_alpha % d != 0 || top_beta % d != 0 {
        return Err(Error::DegenerateParams(format!(
            "(n, k, b, a) = ({n}, {k}, {b}, {a}) admits no integer vertex split"
        )));
    }
    Ok(((top_alpha / d) as u64, (top_beta / d) as u64))
}

struct PairCensus {
    // value -> (witness pair, #edges with it, #non-edges with it)
    entries: BTreeMap<u32, ((usize, usize), usize, usize)>,
}

fn pair_census(g: &Graph) -> PairCensus {
    let mut entries: BTreeMap<u32, ((usize, usize), usize, usize)> = BTreeMap::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let c = g.common_neighbor_count(u, v) as u32;
            let e = entries.entry(c).or_insert(((u, v), 0, 0));
            if g.has_edge(u, v) {
                e.1 += 1;
            } else {
                e.2 += 1;
            }
        }
    }
    PairCensus { entries }
}

/// Classify a graph by its common-neighbour census. Needs at least two
/// vertices, since the census is over distinct pairs.
pub fn classify(g: &Graph) -> Result<DezaReport, Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let diameter = g.diameter().map(|d| d as u32);
    let census = pair_census(g);
    let witnesses: Vec<Witness> = census
        .entries
        .iter()
        .map(|(&value, &(pair, _, _))| Witness { value, pair })
        .collect();

    let mut report = DezaReport {
        n,
        k: None,
        kind: GraphKind::Other,
        b: None,
        a: None,
        alpha: None,
        beta: None,
        strictly_deza: false,
        edge_regular: None,
        coedge_regular: None,
        diameter,
        witnesses,
    };

    let Some(k) = g.regular_valency() else {
        report.kind = GraphKind::NotRegular;
        return Ok(report);
    };
    report.k = Some(k as u32);

    let edge_values: Vec<u32> = census
        .entries
        .iter()
        .filter(|(_, &(_, on_e, _))| on_e > 0)
        .map(|(&v, _)| v)
        .collect();
    let nonedge_values: Vec<u32> = census
        .entries
        .iter()
        .filter(|(_, &(_, _, on_ne))| on_ne > 0)
        .map(|(&v, _)| v)
        .collect();
    if edge_values.len() == 1 {
        report.edge_regular = Some(edge_values[0]);
    }
    if nonedge_values.len() == 1 {
        report.coedge_regular = Some(nonedge_values[0]);
    }

    report.kind = if g.is_complete() {
        GraphKind::Complete
    } else if g.has_no_edges() {
        GraphKind::Empty
    } else if report.edge_regular.is_some() && report.coedge_regular.is_some() {
        GraphKind::StronglyRegular
    } else if census.entries.len() == 2 {
        let mut vals = census.entries.keys();
        let a = *vals.next().expect("two values");
        let b = *vals.next().expect("two values");
        let (alpha, beta) = alpha_beta(n as u64, k as u64, b as u64, a as u64)?;
        report.b = Some(b);
        report.a = Some(a);
        report.alpha = Some(alpha as u32);
        report.beta = Some(beta as u32);
        GraphKind::Deza
    } else {
        GraphKind::Other
    };
    report.strictly_deza = report.kind == GraphKind::Deza && diameter == Some(2);
    Ok(report)
}

/// The two children of a graph with common-neighbour values b > a: child_a
/// joins the pairs with value a, child_b the pairs with value b. Together
/// with the identity they partition all pairs, and the adjacency matrix M of
/// the parent satisfies M^2 = a*A + b*B + k*I; both facts are re-verified
/// here before returning.
pub struct DezaChildren {
    pub child_a: Graph,
    pub child_b: Graph,
    pub a: u32,
    pub b: u32,
}

pub fn children(g: &Graph, report: &DezaReport) -> Result<DezaChildren, Error> {
    check_report_basics(g, report)?;
    let Some((b, a)) = report.two_values() else {
        return Err(Error::DegenerateParams(format!(
            "children need two distinct common-neighbour values, kind is {}",
            report.kind
        )));
    };
    let k = report.k.expect("two-valued graphs are regular");
    let n = g.n();
    let mut child_a = Graph::empty(n)?;
    let mut child_b = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbor_count(u, v) as u32;
            if c == a {
                child_a.add_edge(u, v)?;
            } else if c == b {
                child_b.add_edge(u, v)?;
            } else {
                return Err(Error::ReportMismatch(format!(
                    "pair ({u}, {v}) has common-neighbour value {c}, not in {{{a}, {b}}}"
                )));
            }
        }
    }
    // M^2 = a*A + b*B + k*I entrywise: off-diagonal entries are the
    // common-neighbour counts just partitioned, diagonal entries are degrees.
    for u in 0..n {
        if g.degree(u) != k as usize {
            return Err(Error::ReportMismatch(format!(
                "vertex {u} has degree {}, report says {k}",
                g.degree(u)
            )));
        }
        for v in u + 1..n {
            let lhs = g.common_neighbor_count(u, v) as u32;
            let rhs = a * child_a.has_edge(u, v) as u32 + b * child_b.has_edge(u, v) as u32;
            if lhs != rhs {
                return Err(Error::ReportMismatch(format!(
                    "adjacency identity fails at pair ({u}, {v})"
                )));
            }
            if child_a.has_edge(u, v) == child_b.has_edge(u, v) {
                return Err(Error::ReportMismatch(format!(
                    "pair ({u}, {v}) not in exactly one child"
                )));
            }
        }
    }
    Ok(DezaChildren { child_a, child_b, a, b })
}

/// Outcome of the complement test for a Deza graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementCheck {
    /// Whether the complement is again a Deza graph.
    pub predicted_deza: bool,
    /// Which of the four (adjacency, value) situations occur:
    /// [non-adjacent with a, adjacent with a, non-adjacent with b, adjacent with b].
    pub situations: [bool; 4],
    /// The complement's two common-neighbour values (larger first), when it
    /// is predicted to be Deza.
    pub complement_values: Option<(u32, u32)>,
}

/// Decide whether the complement of a Deza graph is itself Deza, without
/// building the complement.
///
/// A pair with value c keeps track of adjacency: in the complement it gets
/// value n - 2k + c if the pair was adjacent and n - 2k + c - 2 otherwise.
/// With b > a the four resulting values collapse to two exactly when
/// b = a + 2 and situations 1 and 4 do not both occur.
pub fn complement_is_deza(g: &Graph, report: &DezaReport) -> Result<ComplementCheck, Error> {
    check_report_basics(g, report)?;
    if report.kind != GraphKind::Deza {
        return Err(Error::WrongKind {
            expected: "Deza".into(),
            found: report.kind.to_string(),
        });
    }
    let (b, a) = (report.b.expect("Deza"), report.a.expect("Deza"));
    let k = report.k.expect("Deza graphs are regular") as i64;
    let n = g.n() as i64;
    let mut situations = [false; 4];
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let c = g.common_neighbor_count(u, v) as u32;
            let adj = g.has_edge(u, v);
            if c == a {
                situations[adj as usize] = true;
            } else if c == b {
                situations[2 + adj as usize] = true;
            } else {
                return Err(Error::ReportMismatch(format!(
                    "pair ({u}, {v}) has common-neighbour value {c}, not in {{{a}, {b}}}"
                )));
            }
        }
    }
    let predicted = b == a + 2 && !(situations[0] && situations[3]);
    let complement_values = predicted.then(|| {
        let mut vals: Vec<i64> = Vec::new();
        let plain = [a as i64 - 2, a as i64, b as i64 - 2, b as i64];
        for (i, &s) in situations.iter().enumerate() {
            if s {
                vals.push(n - 2 * k + plain[i]);
            }
        }
        vals.sort_unstable();
        vals.dedup();
        debug_assert_eq!(vals.len(), 2);
        (vals[1] as u32, vals[0] as u32)
    });
    Ok(ComplementCheck {
        predicted_deza: predicted,
        situations,
        complement_values,
    })
}

/// A divisible design structure carried by a two-valued graph: a partition
/// into m classes of equal size where same-class pairs have lambda1 common
/// neighbours and cross-class pairs lambda2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibleDesign {
    pub m: usize,
    pub class_size: usize,
    pub lambda1: u32,
    pub lambda2: u32,
    pub classes: Vec<Vec<usize>>,
}

/// Find every divisible-design partition of a graph whose common-neighbour
/// census has two values: for each value, test whether "has that value" is
/// an equivalence relation with equal class sizes.
pub fn divisible_design_partitions(
    g: &Graph,
    report: &DezaReport,
) -> Result<Vec<DivisibleDesign>, Error> {
    check_report_basics(g, report)?;
    let Some((b, a)) = report.two_values() else {
        return Err(Error::DegenerateParams(format!(
            "divisible design check needs two distinct common-neighbour values, kind is {}",
            report.kind
        )));
    };
    let n = g.n();
    let mut out = Vec::new();
    for (same, other) in [(a, b), (b, a)] {
        // class of u = {u} + all v with value `same`; this partitions the
        // vertex set iff membership rows agree within each class
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                let mut row: Vec<usize> = (0..n)
                    .filter(|&v| v != u && g.common_neighbor_count(u, v) as u32 == same)
                    .collect();
                row.push(u);
                row.sort_unstable();
                row
            })
            .collect();
        let consistent = (0..n).all(|u| rows[u].iter().all(|&v| rows[v] == rows[u]));
        if !consistent {
            continue;
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; n];
        for u in 0..n {
            if !seen[u] {
                for &v in &rows[u] {
                    seen[v] = true;
                }
                classes.push(rows[u].clone());
            }
        }
        let size = classes[0].len();
        if classes.iter().any(|c| c.len() != size) {
            continue;
        }
        out.push(DivisibleDesign {
            m: classes.len(),
            class_size: size,
            lambda1: same,
            lambda2: other,
            classes,
        });
    }
    Ok(out)
}

fn check_report_basics(g: &Graph, report: &DezaReport) -> Result<(), Error> {
    if report.n != g.n() {
        return Err(Error::ReportMismatch(format!(
            "report is for n = {}, graph has n = {}",
            report.n,
            g.n()
        )));
    }
    Ok(())
}
