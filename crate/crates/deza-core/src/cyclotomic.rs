//! 3-class cyclotomic association schemes over GF(q) with q ≡ 1 (mod 3),
//! their intersection numbers, the L² + 27M² = 4q certificate, and the
//! Cayley graphs on the field's additive group whose connection sets are one
//! cyclotomic class or the union of two.
//!
//! With a fixed generator g of GF(q)*, the classes are the cosets
//! C_i = g^i <g³> for i = 1, 2, 3 (so C₃ is the cube subgroup itself).
//! The intersection number p^k_ij counts, for a fixed x in C_k, the elements
//! z in C_j with x − z in C_i. For the symmetric pseudocyclic scheme these
//! 27 numbers are generated by just three quantities t, r, s.

use crate::error::Error;
use crate::field::{factor_prime_power, is_prime, perfect_square_root, FiniteField};
use crate::graph::Graph;

/// A 3-class cyclotomic scheme with everything extracted from it.
#[derive(Clone, Debug)]
pub struct SchemeData {
    pub q: u64,
    /// Common class size, q = 3t + 1.
    pub t: u64,
    /// The classes C₁, C₂, C₃, each sorted by element encoding.
    pub classes: [Vec<u64>; 3],
    /// Class index 1..=3 per element; 0 for the zero element.
    pub class_of: Vec<u8>,
    /// p[i][j][k] = p^{k+1}_{i+1, j+1}.
    pub p: [[[u64; 3]; 3]; 3],
    /// r = p¹¹₃, s = p¹¹₂ (upper index = class of the fixed pair).
    pub r: u64,
    pub s: u64,
    /// l = 6t − 2 − 9(r + s) and m_sol = r − s satisfy l² + 27·m_sol² = 4q.
    pub l: i64,
    pub m_sol: i64,
}

/// Symmetry test for the e-class cyclotomic scheme on GF(q): the classes are
/// closed under negation iff q is even or (q − 1)/e is even.
pub fn scheme_is_symmetric(q: u64, e: u64) -> Result<bool, Error> {
    if e == 0 || !(q - 1).is_multiple_of(e) {
        return Err(Error::SchemeUndefined {
            q,
            reason: format!("{e} does not divide q - 1"),
        });
    }
    Ok(q.is_multiple_of(2) || ((q - 1) / e).is_multiple_of(2))
}

/// Class index 1..=3 of each nonzero element, from the discrete log mod 3.
fn assign_classes(field: &FiniteField) -> [Vec<u64>; 3] {
    let q = field.q();
    let mut classes: [Vec<u64>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for e in 0..q - 1 {
        let x = field.generator_power(e);
        let idx = match e % 3 {
            1 => 0,
            2 => 1,
            _ => 2, // exponent divisible by 3: the cube class C₃
        };
        classes[idx].push(x);
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    classes
}

/// The Lemma-14-style value of p^k_ij as a function of the multiset
/// {i, j, k} (1-based class labels), generated by (t, r, s).
fn pattern_value(t: i64, r: i64, s: i64, i: usize, j: usize, k: usize) -> i64 {
    let mut key = [i, j, k];
    key.sort_unstable();
    match key {
        [1, 1, 1] | [2, 2, 2] | [3, 3, 3] => t - r - s - 1,
        [1, 1, 2] | [2, 2, 3] | [1, 3, 3] => s,
        [1, 1, 3] | [1, 2, 2] | [2, 3, 3] => r,
        [1, 2, 3] => t - r - s,
        _ => unreachable!("labels are 1..=3"),
    }
}

/// Build the 3-class cyclotomic scheme on the field by brute force and
/// verify every structural invariant before returning.
pub fn scheme(field: &FiniteField) -> Result<SchemeData, Error> {
    let q = field.q();
    if !(q - 1).is_multiple_of(3) {
        return Err(Error::SchemeUndefined {
            q,
            reason: "3 does not divide q - 1".into(),
        });
    }
    if !scheme_is_symmetric(q, 3)? {
        return Err(Error::SchemeUndefined {
            q,
            reason: "classes are not closed under negation".into(),
        });
    }
    let t = (q - 1) / 3;
    let classes = assign_classes(field);
    let mut class_of = vec![0u8; q as usize];
    for (idx, class) in classes.iter().enumerate() {
        if class.len() != t as usize {
            return Err(Error::SchemeInvariant {
                q,
                detail: format!("class {} has size {}, expected {t}", idx + 1, class.len()),
            });
        }
        for &x in class {
            class_of[x as usize] = idx as u8 + 1;
        }
    }
    // the symmetry lemma promises closure under negation; certify it
    for x in 1..q {
        if class_of[field.neg(x) as usize] != class_of[x as usize] {
            return Err(Error::SchemeUndefined {
                q,
                reason: format!("element {x} and its negative lie in different classes"),
            });
        }
    }

    // intersection numbers from one representative pair (x, 0) per class
    let mut p = [[[0u64; 3]; 3]; 3];
    for (k, class) in classes.iter().enumerate() {
        let x = class[0];
        for z in 1..q {
            let j = class_of[z as usize] as usize;
            let d = field.sub(x, z);
            if d == 0 {
                continue;
            }
            let i = class_of[d as usize] as usize;
            p[i - 1][j - 1][k] += 1;
        }
    }
    let s = p[0][0][1];
    let r = p[0][0][2];

    // the whole table must match the three-parameter pattern
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                let expected = pattern_value(t as i64, r as i64, s as i64, i, j, k);
                if p[i - 1][j - 1][k - 1] as i64 != expected {
                    return Err(Error::SchemeInvariant {
                        q,
                        detail: format!(
                            "p^{k}_{i}{j} = {}, pattern demands {expected}",
                            p[i - 1][j - 1][k - 1]
                        ),
                    });
                }
            }
        }
    }

    // the quadratic identity in (t, r, s)
    let (ti, ri, si) = (t as i64, r as i64, s as i64);
    let lhs = 1 + 2 * (ri + si) - 3 * (ri - si) * (ri - si);
    let rhs = 1 + 3 * (ri + si) - 2 * ti;
    if lhs != rhs * rhs {
        return Err(Error::SchemeInvariant {
            q,
            detail: format!("quadratic identity fails: {lhs} != {rhs}^2"),
        });
    }
    let l = 6 * ti - 2 - 9 * (ri + si);
    let m_sol = ri - si;
    if l * l + 27 * m_sol * m_sol != 4 * q as i64 {
        return Err(Error::SchemeInvariant {
            q,
            detail: format!("l^2 + 27 m^2 = {} != 4q", l * l + 27 * m_sol * m_sol),
        });
    }

    Ok(SchemeData {
        q,
        t,
        classes,
        class_of,
        p,
        r,
        s,
        l,
        m_sol,
    })
}

/// All nonnegative solutions of L² + 27M² = 4q by exhaustive search over
/// |M| ≤ sqrt(4q/27).
pub fn lm_solutions(q: u64) -> Vec<(u64, u64)> {
    let mut found = Vec::new();
    let mut m = 0u64;
    while 27 * m * m <= 4 * q {
        if let Some(l) = perfect_square_root(4 * q - 27 * m * m) {
            found.push((l, m));
        }
        m += 1;
    }
    found
}

/// The unique (|L|, |M|) with L² + 27M² = 4q, when it is unique. Some prime
/// squares (49, 169, ...) admit two representations, in which case this
/// reports the failure instead of guessing.
pub fn solve_lm(q: u64) -> Result<(u64, u64), Error> {
    factor_prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if !(q - 1).is_multiple_of(3) {
        return Err(Error::SchemeUndefined {
            q,
            reason: "3 does not divide q - 1".into(),
        });
    }
    let found = lm_solutions(q);
    if found.len() == 1 {
        Ok(found[0])
    } else {
        Err(Error::DiophantineFailure(q))
    }
}

fn class_union_connection(field: &FiniteField, i: usize, complement: bool) -> Result<Vec<u64>, Error> {
    if !(1..=3).contains(&i) {
        return Err(Error::InvalidFamilyParams(format!(
            "class index must be 1, 2 or 3, got {i}"
        )));
    }
    let q = field.q();
    if !(q - 1).is_multiple_of(3) {
        return Err(Error::SchemeUndefined {
            q,
            reason: "3 does not divide q - 1".into(),
        });
    }
    let mut connection = Vec::new();
    for e in 0..q - 1 {
        let cls = match e % 3 {
            1 => 1,
            2 => 2,
            _ => 3,
        };
        if (cls == i) != complement {
            connection.push(field.generator_power(e));
        }
    }
    // undirected Cayley graphs need S = -S
    for &x in &connection {
        let n = field.neg(x);
        if !connection.contains(&n) {
            return Err(Error::SchemeUndefined {
                q,
                reason: format!("connection set not symmetric: {x} in, {n} out"),
            });
        }
    }
    Ok(connection)
}

pub(crate) fn additive_cayley(field: &FiniteField, connection: &[u64]) -> Result<Graph, Error> {
    let q = field.q() as usize;
    let mut g = Graph::empty(q)?;
    for x in 0..q as u64 {
        for &step in connection {
            let y = field.add(x, step);
            if y > x {
                g.add_edge(x as usize, y as usize)?;
            }
        }
    }
    Ok(g)
}

/// Cayley graph of the additive group with one cyclotomic class C_i as the
/// connection set. Vertex v is the field element encoded v.
pub fn class_graph(field: &FiniteField, i: usize) -> Result<Graph, Error> {
    let connection = class_union_connection(field, i, false)?;
    additive_cayley(field, &connection)
}

/// Cayley graph on the union of the other two classes, i.e. connection set
/// F_q* minus C_i.
pub fn class_complement_graph(field: &FiniteField, i: usize) -> Result<Graph, Error> {
    let connection = class_union_connection(field, i, true)?;
    additive_cayley(field, &connection)
}

/// Arithmetic condition for the one-class graph on GF(q) to be strictly
/// Deza: q prime and q − 3 a perfect square. The lone small case q = 7
/// passes this test but yields the 7-cycle, which has diameter 3; sweeps
/// treat it separately.
pub fn one_class_strictly_deza_condition(q: u64) -> bool {
    is_prime(q) && q >= 3 && perfect_square_root(q - 3).is_some()
}

/// Arithmetic condition for the two-class graph on GF(q) to be strictly
/// Deza: q prime and q − 12 a perfect square.
pub fn two_class_strictly_deza_condition(q: u64) -> bool {
    is_prime(q) && q >= 12 && perfect_square_root(q - 12).is_some()
}

/// The certificate x with x² = q − offset, sign-normalized to x ≡ 1 (mod 3).
pub fn condition_certificate(q: u64, offset: u64) -> Option<i64> {
    let x = perfect_square_root(q.checked_sub(offset)?)? as i64;
    if x.rem_euclid(3) == 1 {
        Some(x)
    } else if (-x).rem_euclid(3) == 1 {
        Some(-x)
    } else {
        None // x divisible by 3 never occurs for prime q
    }
}

/// For a union of classes F, the common-neighbour count of the fused Cayley
/// graph at a difference in class k is sum of p^k_fg over f, g in F. Returns
/// those three sums for k = 1, 2, 3.
pub fn fusion_values(sch: &SchemeData, subset: &[usize]) -> Result<[u64; 3], Error> {
    if subset.is_empty() || subset.len() >= 3 {
        return Err(Error::InvalidFamilyParams(
            "fusion subset must be a nonempty proper subset of {1, 2, 3}".into(),
        ));
    }
    let mut seen = [false; 3];
    for &f in subset {
        if !(1..=3).contains(&f) || seen[f - 1] {
            return Err(Error::InvalidFamilyParams(format!(
                "bad fusion subset element {f}"
            )));
        }
        seen[f - 1] = true;
    }
    let mut out = [0u64; 3];
    for (k, slot) in out.iter_mut().enumerate() {
        for &f in subset {
            for &g in subset {
                *slot += sch.p[f - 1][g - 1][k];
            }
        }
    }
    Ok(out)
}

/// Whether the fused graph's common-neighbour values collapse to at most
/// two, the precondition for it to be Deza.
pub fn fusion_is_two_valued(sch: &SchemeData, subset: &[usize]) -> Result<bool, Error> {
    let mut vals = fusion_values(sch, subset)?.to_vec();
    vals.sort_unstable();
    vals.dedup();
    Ok(vals.len() <= 2)
}
