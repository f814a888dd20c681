//! Exhaustive enumeration of circulant graphs with a two-valued
//! common-neighbour census, persistence of the resulting census files, and
//! the difference-multiset test for Cayley graphs over abelian groups.
//!
//! Circulants on Z_n are iterated through their "half-sets": an
//! inverse-closed connection set is determined by its intersection with
//! {1, …, ⌊n/2⌋}. Multiplier-equivalent sets u·S (u a unit mod n) give
//! isomorphic graphs and are pruned before classification; the remaining
//! survivors are deduplicated by a full isomorphism pass, since multiplier
//! equivalence does not capture every circulant isomorphism.

use crate::analysis::classify;
use crate::codec::{from_graph6, to_graph6};
use crate::constructions::{paley, two_clique_extension};
use crate::error::Error;
use crate::field::is_prime;
use crate::graph::{cayley_graph, Graph};
use crate::iso::is_isomorphic;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const MIN_ENUMERATION_N: usize = 4;
pub const MAX_ENUMERATION_N: usize = 40;

/// One isomorphism class of two-valued circulants on Z_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: usize,
    /// Lexicographically least multiplier-canonical connection set in the
    /// isomorphism class.
    pub connection: Vec<usize>,
    pub k: u32,
    pub b: u32,
    pub a: u32,
    pub strictly_deza: bool,
    pub graph6: String,
    /// Position in the sorted census for this n.
    pub class_id: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An inverse-closed set of nonzero residues mod n, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    n: usize,
    elements: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(n: usize, elements: &[usize]) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::BadConnectionSet(format!(
                "cyclic group order must be at least 2, got {n}"
            )));
        }
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if set.len() != elements.len() {
            return Err(Error::BadConnectionSet("duplicate element".into()));
        }
        for &d in &set {
            if d == 0 || d >= n {
                return Err(Error::BadConnectionSet(format!(
                    "element {d} out of range 1..{n}"
                )));
            }
            if !set.contains(&(n - d)) {
                return Err(Error::BadConnectionSet(format!(
                    "element {d} present but its inverse {} missing",
                    n - d
                )));
            }
        }
        Ok(ConnectionSet {
            n,
            elements: set.into_iter().collect(),
        })
    }

    /// The set {d, n−d : bit d−1 of mask set}, for masks over 1..=⌊n/2⌋.
    fn from_half_set(n: usize, mask: u32) -> Self {
        let mut set = BTreeSet::new();
        for i in 0..n / 2 {
            if mask >> i & 1 == 1 {
                set.insert(i + 1);
                set.insert(n - i - 1);
            }
        }
        ConnectionSet {
            n,
            elements: set.into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Connectivity of the circulant: the steps together with n must be
    /// coprime.
    pub fn spans(&self) -> bool {
        self.elements.iter().fold(self.n, |g, &d| gcd(g, d)) == 1
    }

    /// Least sorted image u·S over the units u mod n.
    pub fn multiplier_canonical(&self) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for u in 1..self.n {
            if gcd(u, self.n) != 1 {
                continue;
            }
            let mut image: Vec<usize> =
                self.elements.iter().map(|&d| d * u % self.n).collect();
            image.sort_unstable();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
        best.expect("n >= 2 has the unit 1")
    }

    pub fn graph(&self) -> Result<Graph, Error> {
        cayley_graph(&[self.n], &self.elements)
    }
}

/// All two-valued circulants on Z_n up to isomorphism, in a deterministic
/// order (sorted by valency, both census values, then connection set).
/// `strict_only` keeps only the strictly Deza classes.
pub fn enumerate_circulants(n: usize, strict_only: bool) -> Result<Vec<CensusRecord>, Error> {
    if !(MIN_ENUMERATION_N..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::Budget(
            n,
            format!(
                "circulant enumeration supports {MIN_ENUMERATION_N} <= n <= {MAX_ENUMERATION_N}"
            ),
        ));
    }
    let masks = 1u32 << (n / 2);
    let survivors: Vec<(Vec<usize>, Graph, u32, u32, u32, bool)> = (1..masks)
        .into_par_iter()
        .filter_map(|mask| {
            let s = ConnectionSet::from_half_set(n, mask);
            if !s.spans() || s.multiplier_canonical() != s.elements {
                return None;
            }
            let g = s.graph().expect("half-sets are valid connection sets");
            let report = classify(&g).expect("n >= 4");
            let (b, a) = report.two_values()?;
            if strict_only && !report.strictly_deza {
                return None;
            }
            let k = report.k.expect("circulants are regular");
            Some((s.elements, g, k, b, a, report.strictly_deza))
        })
        .collect();

    // multiplier pruning is incomplete; group the survivors by isomorphism
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (idx, surv) in survivors.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|class| is_isomorphic(&survivors[class[0]].1, &surv.1))
        {
            Some(class) => class.push(idx),
            None => classes.push(vec![idx]),
        }
    }
    let mut records: Vec<CensusRecord> = Vec::with_capacity(classes.len());
    for class in &classes {
        let &rep = class
            .iter()
            .min_by(|&&x, &&y| survivors[x].0.cmp(&survivors[y].0))
            .expect("classes are nonempty");
        let (connection, g, k, b, a, strict) = &survivors[rep];
        records.push(CensusRecord {
            n,
            connection: connection.clone(),
            k: *k,
            b: *b,
            a: *a,
            strictly_deza: *strict,
            graph6: to_graph6(g)?,
            class_id: 0,
        });
    }
    records.sort_by(|x, y| {
        (x.k, x.b, x.a, &x.connection).cmp(&(y.k, y.b, y.a, &y.connection))
    });
    for (i, r) in records.iter_mut().enumerate() {
        r.class_id = i;
    }
    Ok(records)
}

/// `enumerate_circulants` on a dedicated thread pool of the given size;
/// `jobs = 0` uses the default pool. The output does not depend on `jobs`.
pub fn enumerate_circulants_jobs(
    n: usize,
    strict_only: bool,
    jobs: usize,
) -> Result<Vec<CensusRecord>, Error> {
    if jobs == 0 {
        return enumerate_circulants(n, strict_only);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(std::io::Error::other)?;
    pool.install(|| enumerate_circulants(n, strict_only))
}

/// Where the census for a given n is stored: `results/census-n{N}.jsonl`,
/// with the directory overridable through DEZA_RESULTS_DIR.
pub fn census_file_path(n: usize) -> PathBuf {
    let dir = std::env::var_os("DEZA_RESULTS_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("results"));
    dir.join(format!("census-n{n}.jsonl"))
}

pub fn load_census(path: &Path) -> Result<Vec<CensusRecord>, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut records = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(line)?);
    }
    Ok(records)
}

/// Write the census as JSON lines, or — when the file already exists —
/// compare against it and report any divergence instead of overwriting.
pub fn persist_census_at(path: &Path, n: usize, records: &[CensusRecord]) -> Result<(), Error> {
    if path.exists() {
        let stored = load_census(path)?;
        if stored.len() != records.len() {
            return Err(Error::CensusMismatch {
                n,
                path: path.display().to_string(),
                detail: format!(
                    "stored census has {} classes, recomputed one has {}",
                    stored.len(),
                    records.len()
                ),
            });
        }
        for (i, (old, new)) in stored.iter().zip(records).enumerate() {
            if old != new {
                return Err(Error::CensusMismatch {
                    n,
                    path: path.display().to_string(),
                    detail: format!("class {i} differs: stored {old:?}, recomputed {new:?}"),
                });
            }
        }
        return Ok(());
    }
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let mut out = std::fs::File::create(path)?;
    for record in records {
        writeln!(out, "{}", serde_json::to_string(record)?)?;
    }
    Ok(())
}

/// Persist (or verify) under the standard census path for n.
pub fn persist_census(n: usize, records: &[CensusRecord]) -> Result<PathBuf, Error> {
    let path = census_file_path(n);
    persist_census_at(&path, n, records)?;
    Ok(path)
}

/// Outcome of checking the 2p-vertex classification for one odd prime.
#[derive(Clone, Debug, Serialize)]
pub struct TwoPrimeVerdict {
    pub p: u64,
    pub n: usize,
    pub residue_mod_4: u64,
    pub verified: bool,
    pub classes: usize,
    pub params: Option<[u64; 4]>,
}

/// Enumerate all strictly Deza circulants on 2p vertices and check the
/// dichotomy: none for p ≡ 3 (mod 4), and exactly one class — the
/// two-clique extension of the Paley graph, with parameters
/// (2p, p, p−1, (p−1)/2) — for p ≡ 1 (mod 4).
pub fn verify_2p(p: u64) -> Result<TwoPrimeVerdict, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::InvalidFamilyParams(
            "the two-prime classification needs an odd prime".into(),
        ));
    }
    let n = 2 * p as usize;
    if n > MAX_ENUMERATION_N {
        return Err(Error::Budget(
            n,
            format!("2p exceeds the enumeration budget of {MAX_ENUMERATION_N}"),
        ));
    }
    let census = enumerate_circulants(n, true)?;
    let classes = census.len();
    let residue = p % 4;
    if residue == 3 {
        return Ok(TwoPrimeVerdict {
            p,
            n,
            residue_mod_4: residue,
            verified: classes == 0,
            classes,
            params: None,
        });
    }
    let mut verified = classes == 1;
    let mut params = None;
    if let Some(record) = census.first() {
        params = Some([record.n as u64, record.k as u64, record.b as u64, record.a as u64]);
        verified = verified
            && (record.k as u64, record.b as u64, record.a as u64) == (p, p - 1, (p - 1) / 2);
        if verified {
            let found = from_graph6(&record.graph6)?;
            let model = two_clique_extension(&paley(p)?)?;
            verified = is_isomorphic(&found, &model);
        }
    }
    Ok(TwoPrimeVerdict {
        p,
        n,
        residue_mod_4: residue,
        verified,
        classes,
        params,
    })
}

/// Mixed-radix encoding of an abelian group given by cyclic factor orders,
/// with the last factor varying fastest (the same convention the Cayley
/// graph builder uses).
struct AbelianGroup {
    orders: Vec<usize>,
    size: usize,
}

impl AbelianGroup {
    fn new(orders: &[usize]) -> Result<Self, Error> {
        if orders.is_empty() {
            return Err(Error::BadConnectionSet("no group factors given".into()));
        }
        let mut size = 1usize;
        for &o in orders {
            if o < 2 {
                return Err(Error::BadConnectionSet(format!(
                    "cyclic factor order must be at least 2, got {o}"
                )));
            }
            size = size
                .checked_mul(o)
                .filter(|&s| s <= crate::graph::MAX_VERTICES)
                .ok_or(Error::TooManyVertices(usize::MAX, crate::graph::MAX_VERTICES))?;
        }
        Ok(AbelianGroup {
            orders: orders.to_vec(),
            size,
        })
    }

    fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut coords = vec![0; self.orders.len()];
        for (i, &o) in self.orders.iter().enumerate().rev() {
            coords[i] = x % o;
            x /= o;
        }
        coords
    }

    fn encode(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .fold(0, |acc, (&c, &o)| acc * o + c)
    }

    fn sub(&self, x: usize, y: usize) -> usize {
        let a = self.decode(x);
        let b = self.decode(y);
        let coords: Vec<usize> = a
            .iter()
            .zip(&b)
            .zip(&self.orders)
            .map(|((&ai, &bi), &o)| (ai + o - bi) % o)
            .collect();
        self.encode(&coords)
    }

    fn neg(&self, x: usize) -> usize {
        self.sub(0, x)
    }
}

/// Multiplicity of each group element in the difference multiset S·S⁻¹,
/// indexed by element encoding. Entry 0 (the identity) equals |S|.
pub fn difference_multiplicities(
    orders: &[usize],
    connection: &[usize],
) -> Result<Vec<usize>, Error> {
    let group = AbelianGroup::new(orders)?;
    let set: BTreeSet<usize> = connection.iter().copied().collect();
    if set.len() != connection.len() {
        return Err(Error::BadConnectionSet("duplicate element".into()));
    }
    for &s in &set {
        if s == 0 || s >= group.size {
            return Err(Error::BadConnectionSet(format!(
                "element {s} out of range 1..{}",
                group.size
            )));
        }
        if !set.contains(&group.neg(s)) {
            return Err(Error::BadConnectionSet(format!(
                "element {s} present but its inverse {} missing",
                group.neg(s)
            )));
        }
    }
    let mut mult = vec![0usize; group.size];
    for &s in &set {
        for &t in &set {
            mult[group.sub(s, t)] += 1;
        }
    }
    Ok(mult)
}

/// The distinct multiplicities over the non-identity elements, sorted.
/// Differences never realized count as 0, matching census semantics where
/// far-apart pairs have no common neighbours.
pub fn difference_value_set(orders: &[usize], connection: &[usize]) -> Result<Vec<usize>, Error> {
    let mult = difference_multiplicities(orders, connection)?;
    let values: BTreeSet<usize> = mult.iter().skip(1).copied().collect();
    Ok(values.into_iter().collect())
}

/// Difference-multiset test: the Cayley graph has a ≤2-valued
/// common-neighbour census exactly when the non-identity multiplicities in
/// S·S⁻¹ take at most two values. Computed without building the graph, so
/// it can serve as an independent oracle against `classify`.
pub fn cayley_deza_check(orders: &[usize], connection: &[usize]) -> Result<bool, Error> {
    Ok(difference_value_set(orders, connection)?.len() <= 2)
}
