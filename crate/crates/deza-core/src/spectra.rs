//! Adjacency spectra: a dense symmetric eigensolver (Householder reduction
//! to tridiagonal form followed by implicit QL with shifts, values only),
//! grouping of eigenvalues into a multiplicity list, the spectra of the two
//! children of a Deza graph, and the squared-spectrum check used for dual
//! Seidel switching.

use serde::{Deserialize, Serialize};

use crate::analysis::{alpha_beta, DezaReport};
use crate::error::Error;
use crate::graph::Graph;

/// Eigenvalues closer than this are treated as one spectral line.
pub const MERGE_TOL: f64 = 1e-8;
/// Tolerance for cross-checks between computed spectra and closed forms.
pub const CROSS_CHECK_TOL: f64 = 1e-6;
/// A merged eigenvalue within this distance of an integer is snapped to it.
pub const INTEGER_SNAP_TOL: f64 = 1e-8;

const MAX_QL_SWEEPS: usize = 50;

fn pythag(a: f64, b: f64) -> f64 {
    let (absa, absb) = (a.abs(), b.abs());
    if absa > absb {
        absa * (1.0 + (absb / absa).powi(2)).sqrt()
    } else if absb == 0.0 {
        0.0
    } else {
        absb * (1.0 + (absa / absb).powi(2)).sqrt()
    }
}

/// Householder reduction of a symmetric matrix to tridiagonal form, values
/// only: on return d holds the diagonal and e[1..] the subdiagonal.
#[allow(clippy::needless_range_loop)]
fn tridiagonalize(a: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = a[i][..i].iter().map(|x| x.abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..i {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                let mut f = 0.0;
                for j in 0..i {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j][k] * a[i][k];
                    }
                    for k in j + 1..i {
                        g += a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..i {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] -= f * e[k] + g * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for i in 0..n {
        d[i] = a[i][i];
    }
}

/// Implicit QL with Wilkinson shifts on a tridiagonal matrix; eigenvalues
/// land in d, unsorted.
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<(), Error> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_QL_SWEEPS {
                return Err(Error::Spectral(format!(
                    "QL failed to converge after {MAX_QL_SWEEPS} sweeps"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = pythag(g, 1.0);
            let sign_r = if g >= 0.0 { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut hit_zero = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = pythag(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    hit_zero = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if hit_zero && i > l {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// All adjacency eigenvalues of a graph, descending.
pub fn adjacency_eigenvalues(g: &Graph) -> Result<Vec<f64>, Error> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| if u != v && g.has_edge(u, v) { 1.0 } else { 0.0 })
                .collect()
        })
        .collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut a, &mut d, &mut e);
    ql_implicit(&mut d, &mut e)?;
    d.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
    Ok(d)
}

/// One merged eigenvalue with its multiplicity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralLine {
    pub value: f64,
    pub multiplicity: usize,
    pub is_integer: bool,
}

/// A full adjacency spectrum, as spectral lines in descending value order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Spectrum {
    pub lines: Vec<SpectralLine>,
}

impl Spectrum {
    /// Group a descending list of eigenvalues: a gap larger than MERGE_TOL
    /// starts a new line. Each line's value is the group mean, snapped to
    /// the nearest integer when within INTEGER_SNAP_TOL.
    pub fn from_eigenvalues(sorted_desc: &[f64]) -> Spectrum {
        let mut lines = Vec::new();
        let mut start = 0;
        while start < sorted_desc.len() {
            let mut end = start + 1;
            while end < sorted_desc.len()
                && (sorted_desc[end - 1] - sorted_desc[end]).abs() <= MERGE_TOL
            {
                end += 1;
            }
            let mean: f64 =
                sorted_desc[start..end].iter().sum::<f64>() / (end - start) as f64;
            let snapped = mean.round();
            let is_integer = (mean - snapped).abs() <= INTEGER_SNAP_TOL;
            lines.push(SpectralLine {
                value: if is_integer { snapped } else { mean },
                multiplicity: end - start,
                is_integer,
            });
            start = end;
        }
        Spectrum { lines }
    }

    pub fn total_multiplicity(&self) -> usize {
        self.lines.iter().map(|l| l.multiplicity).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.lines.len()
    }

    /// The largest eigenvalue.
    pub fn principal(&self) -> Option<f64> {
        self.lines.first().map(|l| l.value)
    }

    /// Eigenvalues repeated per multiplicity, descending.
    pub fn expanded(&self) -> Vec<f64> {
        self.lines
            .iter()
            .flat_map(|l| std::iter::repeat_n(l.value, l.multiplicity))
            .collect()
    }

    /// Multiset comparison of two spectra within a tolerance.
    pub fn multiset_close(&self, other: &Spectrum, tol: f64) -> bool {
        let (x, y) = (self.expanded(), other.expanded());
        x.len() == y.len()
            && x.iter().zip(&y).all(|(a, b)| (a - b).abs() <= tol)
    }
}

/// Eigendecompose the adjacency matrix and merge into spectral lines.
pub fn spectrum(g: &Graph) -> Result<Spectrum, Error> {
    Ok(Spectrum::from_eigenvalues(&adjacency_eigenvalues(g)?))
}

/// Predicted spectra (child_a, child_b) of the two children of a graph with
/// common-neighbour values b > a, from the parent's spectrum alone.
///
/// Squaring M = A_parent on the orthogonal complement of the all-ones vector
/// turns M^2 = a*A + b*B + k*I together with A + B + I = J into a formula per
/// non-principal eigenvalue theta of the parent:
///
///   child_a eigenvalue: (k - b - theta^2) / (b - a)
///   child_b eigenvalue: (k - a - theta^2) / (a - b)
///
/// plus the principal eigenvalues alpha and beta respectively.
pub fn children_spectra(
    report: &DezaReport,
    parent: &Spectrum,
) -> Result<(Spectrum, Spectrum), Error> {
    let Some((b, a)) = report.two_values() else {
        return Err(Error::DegenerateParams(format!(
            "child spectra need two distinct common-neighbour values, kind is {}",
            report.kind
        )));
    };
    let k = report.k.expect("two-valued graphs are regular") as f64;
    let n = report.n;
    if parent.total_multiplicity() != n {
        return Err(Error::ReportMismatch(format!(
            "spectrum has {} eigenvalues, graph has {} vertices",
            parent.total_multiplicity(),
            n
        )));
    }
    let (alpha, beta) = alpha_beta(n as u64, k as u64, b as u64, a as u64)?;
    let mut values = parent.expanded();
    let principal_at = values
        .iter()
        .position(|&v| (v - k).abs() <= CROSS_CHECK_TOL)
        .ok_or_else(|| {
            Error::ReportMismatch(format!("spectrum lacks the valency eigenvalue {k}"))
        })?;
    values.remove(principal_at);
    let (b, a) = (b as f64, a as f64);
    let mut a_values: Vec<f64> = vec![alpha as f64];
    let mut b_values: Vec<f64> = vec![beta as f64];
    for &theta in &values {
        a_values.push((k - b - theta * theta) / (b - a));
        b_values.push((k - a - theta * theta) / (a - b));
    }
    a_values.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    b_values.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    Ok((
        Spectrum::from_eigenvalues(&a_values),
        Spectrum::from_eigenvalues(&b_values),
    ))
}

/// Dual Seidel switching preserves the square of the adjacency matrix, so
/// the switched graph's eigenvalues must match the original's up to sign.
/// Compares the multisets of squared eigenvalues.
pub fn switching_spectrum_check(g: &Graph, switched: &Graph) -> Result<bool, Error> {
    if g.n() != switched.n() {
        return Err(Error::SizeMismatch(g.n(), switched.n()));
    }
    let mut sq1: Vec<f64> = adjacency_eigenvalues(g)?.iter().map(|t| t * t).collect();
    let mut sq2: Vec<f64> = adjacency_eigenvalues(switched)?
        .iter()
        .map(|t| t * t)
        .collect();
    sq1.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    sq2.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    Ok(sq1
        .iter()
        .zip(&sq2)
        .all(|(x, y)| (x - y).abs() <= CROSS_CHECK_TOL))
}
