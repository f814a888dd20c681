//! Named graph families, dual Seidel switching with involution validation
//! and search, and the lexicographical-product criterion for Deza graphs.
//!
//! Dual Seidel switching replaces the adjacency matrix M by PM where P
//! represents an order-2 automorphism interchanging only non-adjacent
//! vertices; applied to the right strongly regular graphs it produces
//! strictly Deza graphs with the same parameters.

use crate::cyclotomic::additive_cayley;
use crate::error::Error;
use crate::field::FiniteField;
use crate::graph::{cayley_graph, Graph, VertexPermutation};

/// A named family together with its integer parameters. `parse` accepts the
/// stable CLI-facing names (paley, lattice, triangular, lattice-c,
/// triangular-c, hypercube-c, quasi-lattice, quasi-triangular, 2ce, kx-ym).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Paley graph on GF(q), q ≡ 1 (mod 4).
    Paley(u64),
    /// Square lattice (rook's) graph L(n) on the n×n grid.
    Lattice(usize),
    /// Triangular graph T(n) on the 2-element subsets of an n-set.
    Triangular(usize),
    LatticeComplement(usize),
    TriangularComplement(usize),
    /// Complement of the d-dimensional binary hypercube.
    HypercubeComplement(usize),
    /// L(n) switched by the main-diagonal reflection.
    QuasiLattice(usize),
    /// T(n) switched by the diagonal reflection (even n only).
    QuasiTriangular(usize),
    /// Two-clique extension P(q)[K₂] of a Paley graph.
    TwoCliqueExtension(u64),
    /// K_x[yK₂]: complete graph blown up by a perfect matching.
    CompleteTimesMatchings(usize, usize),
}

impl FamilySpec {
    pub fn parse(name: &str, params: &[u64]) -> Result<Self, Error> {
        let want = |count: usize| -> Result<(), Error> {
            if params.len() == count {
                Ok(())
            } else {
                Err(Error::InvalidFamilyParams(format!(
                    "family {name} takes {count} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let one = || -> Result<u64, Error> {
            want(1)?;
            Ok(params[0])
        };
        match name {
            "paley" => Ok(FamilySpec::Paley(one()?)),
            "lattice" => Ok(FamilySpec::Lattice(one()? as usize)),
            "triangular" => Ok(FamilySpec::Triangular(one()? as usize)),
            "lattice-c" => Ok(FamilySpec::LatticeComplement(one()? as usize)),
            "triangular-c" => Ok(FamilySpec::TriangularComplement(one()? as usize)),
            "hypercube-c" => Ok(FamilySpec::HypercubeComplement(one()? as usize)),
            "quasi-lattice" => Ok(FamilySpec::QuasiLattice(one()? as usize)),
            "quasi-triangular" => Ok(FamilySpec::QuasiTriangular(one()? as usize)),
            "2ce" => Ok(FamilySpec::TwoCliqueExtension(one()?)),
            "kx-ym" => {
                want(2)?;
                Ok(FamilySpec::CompleteTimesMatchings(
                    params[0] as usize,
                    params[1] as usize,
                ))
            }
            _ => Err(Error::InvalidFamilyParams(format!(
                "unknown family {name:?}"
            ))),
        }
    }

    pub fn cli_name(&self) -> &'static str {
        match self {
            FamilySpec::Paley(_) => "paley",
            FamilySpec::Lattice(_) => "lattice",
            FamilySpec::Triangular(_) => "triangular",
            FamilySpec::LatticeComplement(_) => "lattice-c",
            FamilySpec::TriangularComplement(_) => "triangular-c",
            FamilySpec::HypercubeComplement(_) => "hypercube-c",
            FamilySpec::QuasiLattice(_) => "quasi-lattice",
            FamilySpec::QuasiTriangular(_) => "quasi-triangular",
            FamilySpec::TwoCliqueExtension(_) => "2ce",
            FamilySpec::CompleteTimesMatchings(..) => "kx-ym",
        }
    }

    pub fn build(&self) -> Result<Graph, Error> {
        match *self {
            FamilySpec::Paley(q) => paley(q),
            FamilySpec::Lattice(n) => lattice(n),
            FamilySpec::Triangular(n) => triangular(n),
            FamilySpec::LatticeComplement(n) => Ok(lattice(n)?.complement()),
            FamilySpec::TriangularComplement(n) => Ok(triangular(n)?.complement()),
            FamilySpec::HypercubeComplement(d) => hypercube_complement(d),
            FamilySpec::QuasiLattice(n) => quasi_lattice(n),
            FamilySpec::QuasiTriangular(n) => quasi_triangular(n),
            FamilySpec::TwoCliqueExtension(q) => Ok(two_clique_extension(&paley(q)?)?),
            FamilySpec::CompleteTimesMatchings(x, y) => complete_times_matchings(x, y),
        }
    }
}

pub fn complete_graph(n: usize) -> Result<Graph, Error> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// y disjoint edges (the 1-regular graph on 2y vertices).
pub fn matching_graph(y: usize) -> Result<Graph, Error> {
    let mut g = Graph::empty(2 * y)?;
    for i in 0..y {
        g.add_edge(2 * i, 2 * i + 1)?;
    }
    Ok(g)
}

/// Paley graph: vertices are GF(q), adjacency is "difference is a nonzero
/// square". Undirected needs −1 square, i.e. q ≡ 1 (mod 4).
pub fn paley(q: u64) -> Result<Graph, Error> {
    if q % 4 != 1 {
        return Err(Error::InvalidFamilyParams(format!(
            "Paley graph needs q ≡ 1 (mod 4), got {q}"
        )));
    }
    let f = FiniteField::of_order(q)?;
    let connection: Vec<u64> = (0..(q - 1) / 2).map(|e| f.generator_power(2 * e)).collect();
    additive_cayley(&f, &connection)
}

/// Square lattice graph: vertices (x, y) in row-major order x·n + y,
/// adjacent when they share a row or a column.
pub fn lattice(n: usize) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::InvalidFamilyParams(format!(
            "lattice graph needs n >= 3, got {n}"
        )));
    }
    let mut g = Graph::empty(n * n)?;
    for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                g.add_edge(x * n + y, x * n + z)?; // same row
                g.add_edge(y * n + x, z * n + x)?; // same column
            }
        }
    }
    Ok(g)
}

/// The 2-element subsets of an n-set in lexicographic order.
fn pair_vertices(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Triangular graph: vertices are 2-element subsets of {0, …, n−1} in
/// lexicographic order, adjacent when the subsets intersect.
pub fn triangular(n: usize) -> Result<Graph, Error> {
    if n < 5 {
        return Err(Error::InvalidFamilyParams(format!(
            "triangular graph needs n >= 5, got {n}"
        )));
    }
    let pairs = pair_vertices(n);
    let mut g = Graph::empty(pairs.len())?;
    for (u, &(a, b)) in pairs.iter().enumerate() {
        for (v, &(c, d)) in pairs.iter().enumerate().skip(u + 1) {
            if a == c || a == d || b == c || b == d {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Complement of the binary d-cube; vertices count in binary.
pub fn hypercube_complement(d: usize) -> Result<Graph, Error> {
    if d == 0 || d > 12 {
        return Err(Error::InvalidFamilyParams(format!(
            "hypercube dimension must be between 1 and 12, got {d}"
        )));
    }
    let connection: Vec<usize> = (0..d).map(|i| 1usize << i).collect();
    Ok(cayley_graph(&vec![2; d], &connection)?.complement())
}

/// L(n) switched by the main-diagonal reflection; strictly Deza
/// (n², 2(n−1), n−2, 2) for n ≥ 5.
pub fn quasi_lattice(n: usize) -> Result<Graph, Error> {
    if n == 4 {
        return Err(Error::DegenerateParams(
            "quasi-lattice with n = 4 has b = a = 2 and collapses to a strongly regular graph"
                .into(),
        ));
    }
    let g = lattice(n)?;
    let p = named_involution(&FamilySpec::Lattice(n), NamedInvolution::MainDiagonal)?;
    dual_seidel_switch(&g, &p)
}

/// T(n) switched by the diagonal reflection; strictly Deza
/// (n(n−1)/2, 2(n−2), n−2, 4) for even n ≥ 8.
pub fn quasi_triangular(n: usize) -> Result<Graph, Error> {
    if n == 6 {
        return Err(Error::DegenerateParams(
            "quasi-triangular with n = 6 has b = a = 4 and collapses to a strongly regular graph"
                .into(),
        ));
    }
    let g = triangular(n)?;
    let p = named_involution(&FamilySpec::Triangular(n), NamedInvolution::DiagonalReflection)?;
    dual_seidel_switch(&g, &p)
}

/// Lexicographic product with K₂: every vertex becomes an adjacent pair.
pub fn two_clique_extension(g: &Graph) -> Result<Graph, Error> {
    g.lexicographic_product(&complete_graph(2)?)
}

/// Lexicographic product with the empty graph on y vertices.
pub fn coclique_extension(g: &Graph, y: usize) -> Result<Graph, Error> {
    g.lexicographic_product(&Graph::empty(y)?)
}

/// K_x[yK₂]; for x, y ≥ 2 a coedge-regular strictly Deza graph with
/// parameters (2xy, 2y(x−1)+1, 2y(x−1), 2y(x−2)+2). For y = 1 it
/// degenerates to the complete graph on 2x vertices.
pub fn complete_times_matchings(x: usize, y: usize) -> Result<Graph, Error> {
    if x == 0 || y == 0 {
        return Err(Error::InvalidFamilyParams(format!(
            "kx-ym needs positive parameters, got x = {x}, y = {y}"
        )));
    }
    complete_graph(x)?.lexicographic_product(&matching_graph(y)?)
}

/// Which classical switching involution to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedInvolution {
    /// L(n): (x, y) ↦ (y, x); fixes the n diagonal vertices.
    MainDiagonal,
    /// L(n), even n: (x, y) ↦ (n−1−x, n−1−y); fixed-point free.
    PointReflection,
    /// T(n), even n: {x, y} ↦ {n−1−y, n−1−x}; fixes the n/2 "antipodal"
    /// pairs.
    DiagonalReflection,
    /// Complement of L(n): swap rows 2j and 2j+1 for j < i, 1 ≤ i ≤ ⌊n/2⌋.
    IAutomorphism(usize),
    /// Complement of T(n): swap {0, z} ↔ {1, z} for every z ≥ 2.
    OneTwo,
}

/// Build one of the classical involutions for (the complement of) a lattice
/// or triangular graph, then certify it as an order-2 automorphism of the
/// family graph whose 2-cycles are all non-adjacent pairs.
pub fn named_involution(
    family: &FamilySpec,
    which: NamedInvolution,
) -> Result<VertexPermutation, Error> {
    let unavailable = |detail: &str| -> Error {
        Error::InvalidFamilyParams(format!("no such named involution: {detail}"))
    };
    let image = match (family, which) {
        (&FamilySpec::Lattice(n), NamedInvolution::MainDiagonal) => {
            let mut image = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    image[x * n + y] = y * n + x;
                }
            }
            image
        }
        (&FamilySpec::Lattice(n), NamedInvolution::PointReflection) => {
            if n % 2 != 0 {
                return Err(unavailable(
                    "point reflection of an odd lattice moves same-column pairs",
                ));
            }
            let mut image = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    image[x * n + y] = (n - 1 - x) * n + (n - 1 - y);
                }
            }
            image
        }
        (&FamilySpec::Triangular(n), NamedInvolution::DiagonalReflection) => {
            if n % 2 != 0 {
                return Err(unavailable(
                    "an odd triangular graph has no order-2 automorphism moving only non-adjacent vertices",
                ));
            }
            let pairs = pair_vertices(n);
            let index = |a: usize, b: usize| {
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                pairs.binary_search(&(a, b)).expect("pair in range")
            };
            pairs
                .iter()
                .map(|&(a, b)| index(n - 1 - b, n - 1 - a))
                .collect()
        }
        (&FamilySpec::LatticeComplement(n), NamedInvolution::IAutomorphism(i)) => {
            if i == 0 || 2 * i > n {
                return Err(unavailable(&format!(
                    "i-automorphism needs 1 <= i <= n/2, got i = {i} for n = {n}"
                )));
            }
            let sigma = |x: usize| {
                if x < 2 * i {
                    x ^ 1
                } else {
                    x
                }
            };
            let mut image = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    image[x * n + y] = sigma(x) * n + y;
                }
            }
            image
        }
        (&FamilySpec::TriangularComplement(n), NamedInvolution::OneTwo) => {
            let pairs = pair_vertices(n);
            let index = |a: usize, b: usize| {
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                pairs.binary_search(&(a, b)).expect("pair in range")
            };
            let swap = |x: usize| match x {
                0 => 1,
                1 => 0,
                _ => x,
            };
            pairs.iter().map(|&(a, b)| index(swap(a), swap(b))).collect()
        }
        _ => {
            return Err(unavailable(&format!(
                "{which:?} is not defined for family {:?}",
                family.cli_name()
            )))
        }
    };
    let p = VertexPermutation::new(image)?;
    let g = family.build()?;
    if !p.is_involution() || p.is_identity() {
        return Err(Error::NotAnInvolution);
    }
    if !p.is_automorphism_of(&g) {
        return Err(Error::NotAnAutomorphism);
    }
    if !p.moves_only_nonadjacent(&g) {
        return Err(Error::NotAnInvolution);
    }
    Ok(p)
}

/// Dual Seidel switching: permute the rows of the adjacency matrix by an
/// order-(≤2) automorphism whose 2-cycles are non-adjacent pairs. The
/// neighbourhood of x in the result is the neighbourhood of p(x) in the
/// input; the identity returns the graph unchanged.
pub fn dual_seidel_switch(g: &Graph, p: &VertexPermutation) -> Result<Graph, Error> {
    let n = g.n();
    if p.len() != n {
        return Err(Error::PermutationSizeMismatch { perm: p.len(), n });
    }
    if !p.is_automorphism_of(g) {
        return Err(Error::NotAnAutomorphism);
    }
    if !p.is_involution() {
        return Err(Error::NotAnInvolution);
    }
    for (u, w) in p.swapped_pairs() {
        if g.has_edge(u, w) {
            return Err(Error::SwapsAdjacentPair(u, w));
        }
    }
    let mut out = Graph::empty(n)?;
    for x in 0..n {
        let px = p.apply(x);
        for y in x + 1..n {
            if g.has_edge(px, y) {
                out.add_edge(x, y)?;
            }
        }
    }
    Ok(out)
}

/// All involutions (identity included) that are automorphisms of `g` and
/// interchange only non-adjacent vertices, by backtracking over the choice
/// "fix v or pair v with a later undecided non-neighbour". Deterministic
/// output order; budgeted to n ≤ 64.
pub fn find_switching_involutions(g: &Graph) -> Result<Vec<VertexPermutation>, Error> {
    const BUDGET: usize = 64;
    let n = g.n();
    if n > BUDGET {
        return Err(Error::Budget(
            n,
            format!("switching involution search supports at most {BUDGET} vertices"),
        ));
    }
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut image = vec![usize::MAX; n];
    let mut out = Vec::new();
    fn extend(
        g: &Graph,
        degrees: &[usize],
        image: &mut Vec<usize>,
        out: &mut Vec<VertexPermutation>,
    ) {
        let v = match image.iter().position(|&x| x == usize::MAX) {
            Some(v) => v,
            None => {
                out.push(
                    VertexPermutation::new(image.clone()).expect("search builds bijections"),
                );
                return;
            }
        };
        // a new assignment must preserve adjacency against every decided vertex
        let consistent = |image: &[usize], a: usize| {
            (0..image.len()).all(|u| {
                image[u] == usize::MAX
                    || u == a
                    || g.has_edge(a, u) == g.has_edge(image[a], image[u])
            })
        };
        image[v] = v;
        if consistent(image, v) {
            extend(g, degrees, image, out);
        }
        image[v] = usize::MAX;
        for w in v + 1..image.len() {
            if image[w] != usize::MAX || degrees[w] != degrees[v] || g.has_edge(v, w) {
                continue;
            }
            image[v] = w;
            image[w] = v;
            if consistent(image, v) && consistent(image, w) {
                extend(g, degrees, image, out);
            }
            image[v] = usize::MAX;
            image[w] = usize::MAX;
        }
    }
    extend(g, &degrees, &mut image, &mut out);
    Ok(out)
}

/// Group permutations by conjugacy under the supplied automorphisms:
/// returns sorted index classes, where p and q land together when
/// q = σ p σ⁻¹ for some listed σ.
pub fn conjugacy_classes(
    permutations: &[VertexPermutation],
    automorphisms: &[VertexPermutation],
) -> Result<Vec<Vec<usize>>, Error> {
    let mut canon: Vec<Vec<usize>> = Vec::with_capacity(permutations.len());
    for p in permutations {
        let mut least = p.images().to_vec();
        for sigma in automorphisms {
            let conj = sigma.compose(p)?.compose(&sigma.inverse())?;
            if conj.images() < least.as_slice() {
                least = conj.images().to_vec();
            }
        }
        canon.push(least);
    }
    let mut order: Vec<usize> = (0..permutations.len()).collect();
    order.sort_by(|&a, &b| canon[a].cmp(&canon[b]));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for idx in order {
        match classes.last_mut() {
            Some(class) if canon[class[0]] == canon[idx] => class.push(idx),
            _ => classes.push(vec![idx]),
        }
    }
    Ok(classes)
}

/// Common-neighbour value set of the lexicographic product of a strongly
/// regular graph (n, k, λ, μ) with a Deza graph (n', k', b, a): the product
/// is Deza exactly when {a + kn', b + kn', μn', λn' + 2k'} has at most two
/// elements. Terms no vertex pair realizes are skipped (a complete first
/// factor has no non-adjacent pairs, so its μ term is vacuous).
pub fn deza_product_criterion(srg: (u64, u64, u64, u64), deza: (u64, u64, u64, u64)) -> bool {
    let (n1, k1, lambda, mu) = srg;
    let (n2, k2, b, a) = deza;
    let mut values = vec![a + k1 * n2, b + k1 * n2];
    if k1 + 1 < n1 {
        values.push(mu * n2);
    }
    if k1 > 0 {
        values.push(lambda * n2 + 2 * k2);
    }
    values.sort_unstable();
    values.dedup();
    values.len() <= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{classify, GraphKind};
    use crate::iso::automorphisms;
    use crate::spectra::switching_spectrum_check;

    fn params(g: &Graph) -> (usize, Option<u32>, Option<u32>, Option<u32>) {
        let r = classify(g).unwrap();
        (r.n, r.k, r.b, r.a)
    }

    #[test]
    fn strongly_regular_family_pins() {
        let r = classify(&lattice(4).unwrap()).unwrap();
        assert_eq!(r.kind, GraphKind::StronglyRegular);
        assert_eq!((r.n, r.k), (16, Some(6)));
        assert_eq!((r.edge_regular, r.coedge_regular), (Some(2), Some(2)));

        let r = classify(&triangular(6).unwrap()).unwrap();
        assert_eq!(r.kind, GraphKind::StronglyRegular);
        assert_eq!((r.n, r.k), (15, Some(8)));
        assert_eq!((r.edge_regular, r.coedge_regular), (Some(4), Some(4)));

        let r = classify(&paley(9).unwrap()).unwrap();
        assert_eq!(r.kind, GraphKind::StronglyRegular);
        assert_eq!((r.n, r.k), (9, Some(4)));
        assert_eq!((r.edge_regular, r.coedge_regular), (Some(1), Some(2)));

        let r = classify(&paley(13).unwrap()).unwrap();
        assert_eq!((r.n, r.k), (13, Some(6)));
        assert_eq!((r.edge_regular, r.coedge_regular), (Some(2), Some(3)));

        let r = classify(&hypercube_complement(3).unwrap()).unwrap();
        assert!(r.strictly_deza);
        assert_eq!(params(&hypercube_complement(3).unwrap()), (8, Some(4), Some(2), Some(0)));
    }

    #[test]
    fn family_rejections() {
        assert!(matches!(paley(7), Err(Error::InvalidFamilyParams(_))));
        assert!(matches!(paley(21), Err(Error::NotPrimePower(21))));
        assert!(lattice(2).is_err());
        assert!(triangular(4).is_err());
        assert!(hypercube_complement(0).is_err());
        assert!(hypercube_complement(13).is_err());
        assert!(complete_times_matchings(0, 2).is_err());
        assert!(matches!(
            FamilySpec::parse("lattice", &[4, 4]),
            Err(Error::InvalidFamilyParams(_))
        ));
        assert!(matches!(
            FamilySpec::parse("moebius", &[5]),
            Err(Error::InvalidFamilyParams(_))
        ));
    }

    #[test]
    fn cli_names_round_trip() {
        let specs = [
            FamilySpec::Paley(13),
            FamilySpec::Lattice(5),
            FamilySpec::Triangular(6),
            FamilySpec::LatticeComplement(5),
            FamilySpec::TriangularComplement(7),
            FamilySpec::HypercubeComplement(3),
            FamilySpec::QuasiLattice(5),
            FamilySpec::QuasiTriangular(8),
            FamilySpec::TwoCliqueExtension(5),
            FamilySpec::CompleteTimesMatchings(3, 2),
        ];
        for spec in specs {
            let params: Vec<u64> = match spec {
                FamilySpec::Paley(q) | FamilySpec::TwoCliqueExtension(q) => vec![q],
                FamilySpec::Lattice(n)
                | FamilySpec::Triangular(n)
                | FamilySpec::LatticeComplement(n)
                | FamilySpec::TriangularComplement(n)
                | FamilySpec::HypercubeComplement(n)
                | FamilySpec::QuasiLattice(n)
                | FamilySpec::QuasiTriangular(n) => vec![n as u64],
                FamilySpec::CompleteTimesMatchings(x, y) => vec![x as u64, y as u64],
            };
            assert_eq!(FamilySpec::parse(spec.cli_name(), &params).unwrap(), spec);
            spec.build().unwrap();
        }
    }

    #[test]
    fn named_involutions_have_documented_fixed_points() {
        let p = named_involution(&FamilySpec::Lattice(5), NamedInvolution::MainDiagonal).unwrap();
        assert_eq!(p.fixed_points().len(), 5);

        let p = named_involution(&FamilySpec::Lattice(6), NamedInvolution::PointReflection).unwrap();
        assert!(p.fixed_points().is_empty());

        let p =
            named_involution(&FamilySpec::Triangular(8), NamedInvolution::DiagonalReflection)
                .unwrap();
        assert_eq!(p.fixed_points().len(), 4);

        // swaps {0,z} with {1,z} for the n−2 choices of z
        let p = named_involution(&FamilySpec::TriangularComplement(7), NamedInvolution::OneTwo)
            .unwrap();
        assert_eq!(p.swapped_pairs().len(), 5);
        assert_eq!(p.fixed_points().len(), 21 - 10);

        let p =
            named_involution(&FamilySpec::LatticeComplement(6), NamedInvolution::IAutomorphism(2))
                .unwrap();
        assert_eq!(p.swapped_pairs().len(), 2 * 6);
    }

    #[test]
    fn named_involutions_valid_across_small_orders() {
        for n in 3..=12 {
            named_involution(&FamilySpec::Lattice(n), NamedInvolution::MainDiagonal).unwrap();
            for i in 1..=n / 2 {
                named_involution(
                    &FamilySpec::LatticeComplement(n),
                    NamedInvolution::IAutomorphism(i),
                )
                .unwrap();
            }
            if n % 2 == 0 {
                named_involution(&FamilySpec::Lattice(n), NamedInvolution::PointReflection)
                    .unwrap();
            }
        }
        for n in 5..=12 {
            named_involution(&FamilySpec::TriangularComplement(n), NamedInvolution::OneTwo)
                .unwrap();
            if n % 2 == 0 {
                named_involution(&FamilySpec::Triangular(n), NamedInvolution::DiagonalReflection)
                    .unwrap();
            }
        }
    }

    #[test]
    fn named_involution_rejections() {
        assert!(
            named_involution(&FamilySpec::Triangular(7), NamedInvolution::DiagonalReflection)
                .is_err()
        );
        assert!(
            named_involution(&FamilySpec::Lattice(5), NamedInvolution::PointReflection).is_err()
        );
        assert!(named_involution(
            &FamilySpec::LatticeComplement(6),
            NamedInvolution::IAutomorphism(4)
        )
        .is_err());
        assert!(named_involution(
            &FamilySpec::LatticeComplement(6),
            NamedInvolution::IAutomorphism(0)
        )
        .is_err());
        assert!(
            named_involution(&FamilySpec::Paley(13), NamedInvolution::MainDiagonal).is_err()
        );
        assert!(named_involution(&FamilySpec::Lattice(5), NamedInvolution::OneTwo).is_err());
    }

    #[test]
    fn switching_produces_the_classical_strictly_deza_graphs() {
        let ql = quasi_lattice(5).unwrap();
        let r = classify(&ql).unwrap();
        assert!(r.strictly_deza);
        assert_eq!((r.n, r.k, r.b, r.a), (25, Some(8), Some(3), Some(2)));

        let qt = quasi_triangular(8).unwrap();
        let r = classify(&qt).unwrap();
        assert!(r.strictly_deza);
        assert_eq!((r.n, r.k, r.b, r.a), (28, Some(12), Some(6), Some(4)));

        assert!(matches!(quasi_lattice(4), Err(Error::DegenerateParams(_))));
        assert!(matches!(quasi_triangular(6), Err(Error::DegenerateParams(_))));
        assert!(matches!(
            quasi_triangular(7),
            Err(Error::InvalidFamilyParams(_))
        ));
    }

    #[test]
    fn switching_is_an_involution_and_preserves_squared_spectrum() {
        let g = lattice(5).unwrap();
        let p = named_involution(&FamilySpec::Lattice(5), NamedInvolution::MainDiagonal).unwrap();
        let switched = dual_seidel_switch(&g, &p).unwrap();
        assert_ne!(switched, g);
        assert!(switching_spectrum_check(&g, &switched).unwrap());
        assert_eq!(dual_seidel_switch(&switched, &p).unwrap(), g);

        let id = VertexPermutation::identity(g.n());
        assert_eq!(dual_seidel_switch(&g, &id).unwrap(), g);
    }

    #[test]
    fn switch_rejects_bad_permutations() {
        let g = lattice(4).unwrap();
        // 3-cycle on pairwise non-adjacent vertices: (0,0),(1,1),(2,2)
        let mut image: Vec<usize> = (0..16).collect();
        image[0] = 5;
        image[5] = 10;
        image[10] = 0;
        let p = VertexPermutation::new(image).unwrap();
        assert!(matches!(
            dual_seidel_switch(&g, &p),
            Err(Error::NotAnAutomorphism) | Err(Error::NotAnInvolution)
        ));

        // automorphism of order 2 moving an adjacent pair: swap rows 0 and 1
        let p = named_involution(&FamilySpec::LatticeComplement(4), NamedInvolution::IAutomorphism(1))
            .unwrap();
        assert!(matches!(
            dual_seidel_switch(&g, &p),
            Err(Error::SwapsAdjacentPair(..))
        ));

        let small = VertexPermutation::identity(4);
        assert!(matches!(
            dual_seidel_switch(&g, &small),
            Err(Error::PermutationSizeMismatch { .. })
        ));
    }

    #[test]
    fn switched_lattice_complement_is_deza() {
        for (n, i) in [(4, 1), (5, 1), (5, 2)] {
            let g = lattice(n).unwrap().complement();
            let p = named_involution(
                &FamilySpec::LatticeComplement(n),
                NamedInvolution::IAutomorphism(i),
            )
            .unwrap();
            let switched = dual_seidel_switch(&g, &p).unwrap();
            let r = classify(&switched).unwrap();
            assert!(
                matches!(r.kind, GraphKind::Deza | GraphKind::StronglyRegular),
                "lattice-c n = {n}, i = {i} switched to {:?}",
                r.kind
            );
            assert!(switching_spectrum_check(&g, &switched).unwrap());
        }
    }

    #[test]
    fn involution_search_on_small_graphs() {
        // C4: identity, the two antipodal swaps, and the point reflection
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let found = find_switching_involutions(&c4).unwrap();
        let strings: Vec<String> = found.iter().map(|p| p.cycle_string()).collect();
        assert_eq!(strings, ["()", "(1 3)", "(0 2)", "(0 2)(1 3)"]);

        // odd triangular graphs admit only the identity
        let t7 = triangular(7).unwrap();
        let found = find_switching_involutions(&t7).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].is_identity());

        // the named lattice involutions are rediscovered
        let l4 = lattice(4).unwrap();
        let found = find_switching_involutions(&l4).unwrap();
        let main =
            named_involution(&FamilySpec::Lattice(4), NamedInvolution::MainDiagonal).unwrap();
        let point =
            named_involution(&FamilySpec::Lattice(4), NamedInvolution::PointReflection).unwrap();
        assert!(found.contains(&main));
        assert!(found.contains(&point));
        for p in &found {
            assert!(p.is_involution());
            assert!(p.is_automorphism_of(&l4));
            assert!(p.moves_only_nonadjacent(&l4));
        }

        assert!(matches!(
            find_switching_involutions(&Graph::empty(65).unwrap()),
            Err(Error::Budget(65, _))
        ));
    }

    #[test]
    fn conjugacy_grouping_on_c4() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let involutions = find_switching_involutions(&c4).unwrap();
        let auts = automorphisms(&c4);
        let classes = conjugacy_classes(&involutions, &auts).unwrap();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        // identity | point reflection | the two antipodal swaps fuse
        assert_eq!(sizes, [1, 1, 2]);
    }

    #[test]
    fn product_criterion_matches_direct_classification() {
        // conference graph times K2: λ − μ = −1 makes the 4-set collapse
        assert!(deza_product_criterion((5, 2, 0, 1), (2, 1, 0, 0)));
        // complete times matching: the μ term is vacuous
        assert!(deza_product_criterion((4, 3, 2, 0), (2, 1, 0, 0)));
        // C5 with itself stays 4-valued...
        assert!(!deza_product_criterion((5, 2, 0, 1), (5, 2, 1, 0)));
        // ...and the 25-vertex product indeed fails to be Deza
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let product = c5.lexicographic_product(&c5).unwrap();
        let r = classify(&product).unwrap();
        assert_eq!(r.kind, GraphKind::Other);
        assert_eq!(r.witnesses.len(), 4);
    }

    #[test]
    fn two_clique_extension_of_conference_graphs() {
        let g = two_clique_extension(&paley(5).unwrap()).unwrap();
        let r = classify(&g).unwrap();
        assert!(r.strictly_deza);
        assert_eq!((r.n, r.k, r.b, r.a), (10, Some(5), Some(4), Some(2)));
        assert!(r.coedge_regular.is_some());

        let g = two_clique_extension(&paley(13).unwrap()).unwrap();
        let r = classify(&g).unwrap();
        assert!(r.strictly_deza);
        assert_eq!((r.n, r.k, r.b, r.a), (26, Some(13), Some(12), Some(6)));

        let k1 = Graph::empty(1).unwrap();
        let k2 = two_clique_extension(&k1).unwrap();
        assert!(k2.is_complete());
        assert_eq!(k2.n(), 2);
    }

    #[test]
    fn blown_up_complete_graphs() {
        for x in 2..=4usize {
            for y in 2..=3usize {
                let g = complete_times_matchings(x, y).unwrap();
                let r = classify(&g).unwrap();
                assert!(r.strictly_deza, "K_{x}[{y}K2]");
                let (n, k) = (2 * x * y, (2 * y * (x - 1) + 1) as u32);
                let (b, a) = ((2 * y * (x - 1)) as u32, (2 * y * (x - 2) + 2) as u32);
                assert_eq!((r.n, r.k), (n, Some(k)));
                assert_eq!((r.b, r.a), (Some(b), Some(a)));
                assert!(r.coedge_regular.is_some());
            }
            // y = 1 degenerates to a complete graph
            let g = complete_times_matchings(x, 1).unwrap();
            assert_eq!(classify(&g).unwrap().kind, GraphKind::Complete);
        }
    }

    #[test]
    fn coclique_extension_of_a_lambda_equals_mu_graph() {
        for y in 2..=3usize {
            let g = coclique_extension(&triangular(6).unwrap(), y).unwrap();
            let r = classify(&g).unwrap();
            assert!(r.strictly_deza, "T(6)[{y}K1]");
            assert_eq!((r.n, r.k), (15 * y, Some(8 * y as u32)));
            assert_eq!((r.b, r.a), (Some(8 * y as u32), Some(4 * y as u32)));
            assert_eq!(r.edge_regular, Some(4 * y as u32));
            assert_eq!(r.coedge_regular, None);
        }
    }
}
