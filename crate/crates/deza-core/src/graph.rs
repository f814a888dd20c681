//! Simple undirected graphs with bit-packed adjacency rows, plus vertex
//! permutations in cycle notation and Cayley graphs of finite abelian groups.

use crate::error::Error;

/// Hard cap on the vertex count. Everything in this crate targets graphs far
/// below this size; the cap keeps adjacency storage at a few megabytes.
pub const MAX_VERTICES: usize = 4096;

/// Undirected simple graph. Row `v` of the adjacency matrix is stored as a
/// little slice of u64 words, so neighbourhood intersections are word-parallel
/// AND + popcount.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        let row_words = n.div_ceil(64).max(1);
        Ok(Graph {
            n,
            row_words,
            bits: vec![0; n * row_words],
        })
    }

    /// Build a graph from an edge list. Rejects out-of-range endpoints and
    /// self-loops; duplicate edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { index: v, n: self.n });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.bits[u * self.row_words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.row_words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.row_words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.row_words..(v + 1) * self.row_words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `Some(k)` when every vertex has degree k.
    pub fn regular_valency(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        for (i, &word) in self.row(v).iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(i * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    /// Number of common neighbours of a pair of distinct vertices.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The common neighbourhood itself, sorted ascending.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<Vec<usize>, Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut out = Vec::new();
        for (i, (&a, &b)) in self.row(u).iter().zip(self.row(v)).enumerate() {
            let mut w = a & b;
            while w != 0 {
                out.push(i * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        Ok(out)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    pub fn has_no_edges(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Breadth-first eccentricity of `source`; `None` if some vertex is
    /// unreachable. Uses word-parallel frontier expansion.
    fn eccentricity(&self, source: usize) -> Option<usize> {
        let mut visited = vec![0u64; self.row_words];
        let mut frontier = vec![0u64; self.row_words];
        visited[source / 64] |= 1 << (source % 64);
        frontier[source / 64] |= 1 << (source % 64);
        let mut seen = 1usize;
        let mut dist = 0usize;
        while seen < self.n {
            let mut next = vec![0u64; self.row_words];
            for (i, &word) in frontier.iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let v = i * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    for (nw, rw) in next.iter_mut().zip(self.row(v)) {
                        *nw |= rw;
                    }
                }
            }
            for (nw, vw) in next.iter_mut().zip(&visited) {
                *nw &= !vw;
            }
            let grew: usize = next.iter().map(|w| w.count_ones() as usize).sum();
            if grew == 0 {
                return None;
            }
            for (vw, nw) in visited.iter_mut().zip(&next) {
                *vw |= nw;
            }
            seen += grew;
            dist += 1;
            frontier = next;
        }
        Some(dist)
    }

    /// Diameter of the graph; `None` when disconnected. A one-vertex graph
    /// has diameter 0.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut diam = 0;
        for v in 0..self.n {
            diam = diam.max(self.eccentricity(v)?);
        }
        Some(diam)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.eccentricity(0).is_some()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("complement keeps the vertex count");
        for u in 0..self.n {
            for ((cw, &aw), i) in g.bits[u * self.row_words..(u + 1) * self.row_words]
                .iter_mut()
                .zip(self.row(u))
                .zip(0..)
            {
                *cw = !aw;
                // mask off the diagonal bit and the padding beyond vertex n-1
                if i == u / 64 {
                    *cw &= !(1 << (u % 64));
                }
                if i == self.row_words - 1 && !self.n.is_multiple_of(64) {
                    *cw &= (1u64 << (self.n % 64)) - 1;
                }
            }
        }
        g
    }

    /// Lexicographic product `self[other]`: vertex (u1, u2) is adjacent to
    /// (v1, v2) iff u1 ~ v1, or u1 = v1 and u2 ~ v2. Vertex (u1, u2) is
    /// encoded as u1 * other.n() + u2.
    pub fn lexicographic_product(&self, other: &Graph) -> Result<Graph, Error> {
        let n = self
            .n
            .checked_mul(other.n)
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or(Error::TooManyVertices(self.n.saturating_mul(other.n), MAX_VERTICES))?;
        let mut g = Graph::empty(n)?;
        for u1 in 0..self.n {
            for u2 in 0..other.n {
                let u = u1 * other.n + u2;
                for v1 in self.neighbors(u1) {
                    for v2 in 0..other.n {
                        let v = v1 * other.n + v2;
                        if v > u {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                for v2 in other.neighbors(u2) {
                    let v = u1 * other.n + v2;
                    if v > u {
                        g.add_edge(u, v)?;
                    }
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced on `vertices`, which must be distinct and in range;
    /// vertex i of the result is vertices[i].
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, Error> {
        let mut seen = vec![false; self.n];
        for &v in vertices {
            self.check_vertex(v)?;
            if seen[v] {
                return Err(Error::BadConnectionSet(format!(
                    "vertex {v} repeated in induced subgraph selection"
                )));
            }
            seen[v] = true;
        }
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Image of the graph under a relabelling: vertices phi(u), phi(v) are
    /// adjacent in the result iff u, v are adjacent here.
    pub fn relabelled(&self, phi: &VertexPermutation) -> Result<Graph, Error> {
        if phi.len() != self.n {
            return Err(Error::PermutationSizeMismatch {
                perm: phi.len(),
                n: self.n,
            });
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(phi.apply(u), phi.apply(v))?;
        }
        Ok(g)
    }
}

/// Cayley graph of the abelian group Z_{orders[0]} x ... x Z_{orders[last]}
/// with the given connection set. Group elements are encoded in mixed radix
/// with the last factor varying fastest, so for orders [2, 5] the element
/// (a, b) has index a * 5 + b. The connection set must exclude the identity
/// and be closed under inversion.
pub fn cayley_graph(orders: &[usize], connection: &[usize]) -> Result<Graph, Error> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(Error::InvalidFamilyParams(
            "group orders must be a nonempty list of positive integers".into(),
        ));
    }
    let mut n = 1usize;
    for &o in orders {
        n = n
            .checked_mul(o)
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or(Error::TooManyVertices(usize::MAX, MAX_VERTICES))?;
    }
    let decode = |x: usize| -> Vec<usize> {
        let mut digits = vec![0; orders.len()];
        let mut rest = x;
        for (i, &o) in orders.iter().enumerate().rev() {
            digits[i] = rest % o;
            rest /= o;
        }
        digits
    };
    let encode = |digits: &[usize]| -> usize {
        digits
            .iter()
            .zip(orders)
            .fold(0, |acc, (&d, &o)| acc * o + d)
    };
    let negate = |x: usize| -> usize {
        let digits: Vec<usize> = decode(x)
            .iter()
            .zip(orders)
            .map(|(&d, &o)| (o - d) % o)
            .collect();
        encode(&digits)
    };

    let mut in_set = vec![false; n];
    for &s in connection {
        if s >= n {
            return Err(Error::BadConnectionSet(format!(
                "element {s} out of range for a group of order {n}"
            )));
        }
        if s == 0 {
            return Err(Error::BadConnectionSet(
                "connection set contains the identity".into(),
            ));
        }
        in_set[s] = true;
    }
    for s in 0..n {
        if in_set[s] && !in_set[negate(s)] {
            return Err(Error::BadConnectionSet(format!(
                "element {s} present without its inverse {}",
                negate(s)
            )));
        }
    }

    let mut g = Graph::empty(n)?;
    for x in 0..n {
        let dx = decode(x);
        for (s, _) in in_set.iter().enumerate().filter(|&(_, &used)| used) {
            let ds = decode(s);
            let sum: Vec<usize> = dx
                .iter()
                .zip(&ds)
                .zip(orders)
                .map(|((&a, &b), &o)| (a + b) % o)
                .collect();
            let y = encode(&sum);
            if y > x {
                g.add_edge(x, y)?;
            }
        }
    }
    Ok(g)
}

/// Permutation of 0..n-1, printable and parsable in cycle notation like
/// "(0 3)(1 2)".
#[derive(Clone, PartialEq, Eq)]
pub struct VertexPermutation {
    image: Vec<usize>,
}

impl std::fmt::Debug for VertexPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "VertexPermutation({})", self.cycle_string())
    }
}

impl VertexPermutation {
    pub fn new(image: Vec<usize>) -> Result<Self, Error> {
        let n = image.len();
        let mut hit = vec![false; n];
        for &v in &image {
            if v >= n || hit[v] {
                return Err(Error::NotAPermutation(n));
            }
            hit[v] = true;
        }
        Ok(VertexPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_involution(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| self.image[v] == i)
    }

    /// self ∘ other: first apply `other`, then `self`.
    pub fn compose(&self, other: &VertexPermutation) -> Result<VertexPermutation, Error> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch(self.len(), other.len()));
        }
        Ok(VertexPermutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        })
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut image = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        VertexPermutation { image }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.image[v] == v).collect()
    }

    /// Points moved by the permutation, grouped into transpositions when the
    /// permutation is an involution.
    pub fn swapped_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            let w = self.image[v];
            if w > v && self.image[w] == v {
                out.push((v, w));
            }
        }
        out
    }

    /// True when the permutation preserves adjacency of `g`.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        if self.len() != g.n() {
            return false;
        }
        g.edges()
            .iter()
            .all(|&(u, v)| g.has_edge(self.apply(u), self.apply(v)))
    }

    /// True when every 2-cycle of the permutation joins two non-adjacent
    /// vertices of `g` — the admissibility condition for dual Seidel
    /// switching.
    pub fn moves_only_nonadjacent(&self, g: &Graph) -> bool {
        self.len() == g.n()
            && (0..self.len()).all(|v| {
                let w = self.image[v];
                w == v || !g.has_edge(v, w)
            })
    }

    /// Parse cycle notation. `n` fixes the ground set size; points absent
    /// from the string are fixed. "()" or an empty string is the identity.
    pub fn parse_cycles(n: usize, input: &str) -> Result<Self, Error> {
        let bad = |reason: &str| Error::BadCycleNotation {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut image: Vec<usize> = (0..n).collect();
        let mut placed = vec![false; n];
        let trimmed = input.trim();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| bad("expected '('"))?;
            if rest[..open].trim() != "" {
                return Err(bad("unexpected text between cycles"));
            }
            let close = rest.find(')').ok_or_else(|| bad("missing ')'"))?;
            if close < open {
                return Err(bad("')' before '('"));
            }
            let body = &rest[open + 1..close];
            rest = &rest[close + 1..];
            let points: Vec<usize> = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| bad(&format!("bad point {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            if points.is_empty() {
                continue; // "()" denotes the identity
            }
            for &p in &points {
                if p >= n {
                    return Err(bad(&format!("point {p} out of range for n = {n}")));
                }
                if placed[p] {
                    return Err(bad(&format!("point {p} appears twice")));
                }
                placed[p] = true;
            }
            for w in points.windows(2) {
                image[w[0]] = w[1];
            }
            image[points[points.len() - 1]] = points[0];
        }
        if rest.trim() != "" {
            return Err(bad("trailing text"));
        }
        VertexPermutation::new(image)
    }

    /// Cycle notation with fixed points omitted; the identity prints as "()".
    pub fn cycle_string(&self) -> String {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.image[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.image[v];
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}
