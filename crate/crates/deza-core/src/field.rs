//! Small finite fields GF(p^h), q = p^h <= 65536, with log/exp tables for
//! fast multiplication.
//!
//! Elements are encoded as integers 0..q-1: the element with polynomial
//! coordinates (c_0, c_1, ..., c_{h-1}) over GF(p) is c_0 + c_1 p + ... +
//! c_{h-1} p^{h-1}. The modulus is the lexicographically smallest monic
//! irreducible polynomial of degree h over GF(p) (smallest by this same
//! integer encoding), and the chosen generator is the smallest element of
//! multiplicative order q - 1.

use crate::error::Error;

pub const MAX_FIELD_ORDER: u64 = 65536;

pub struct FiniteField {
    p: u64,
    h: u32,
    q: u64,
    /// Coefficients (constant term first) of the degree-h modulus, without
    /// the leading 1 for h > 1; for h = 1 this is empty and arithmetic is
    /// plain modular.
    modulus: Vec<u64>,
    primitive: u64,
    exp: Vec<u64>,  // exp[i] = g^i for 0 <= i < q-1
    log: Vec<u32>,  // log[x] for x != 0
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The square root when `n` is a perfect square.
pub fn perfect_square_root(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&c| c * c == n)
}

/// Write q as p^h with p prime, if possible.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut h = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                h += 1;
            }
            return (rest == 1).then_some((p, h));
        }
        p += 1;
    }
    Some((q, 1))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FiniteField {
    pub fn new(p: u64, h: u32) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if h == 0 {
            return Err(Error::InvalidFamilyParams("field degree must be positive".into()));
        }
        let mut q: u64 = 1;
        for _ in 0..h {
            q = q
                .checked_mul(p)
                .filter(|&q| q <= MAX_FIELD_ORDER)
                .ok_or(Error::FieldTooLarge(u64::MAX))?;
        }
        let modulus = if h == 1 {
            Vec::new()
        } else {
            smallest_irreducible(p, h)
        };
        let mut field = FiniteField {
            p,
            h,
            q,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.install_primitive()?;
        Ok(field)
    }

    /// Build GF(q) for a prime power q, factoring q automatically.
    pub fn of_order(q: u64) -> Result<Self, Error> {
        let (p, h) = factor_prime_power(q).ok_or(Error::NotPrimePower(q))?;
        FiniteField::new(p, h)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.h
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The fixed generator of the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        self.primitive
    }

    /// Modulus coefficients including the leading 1, constant term first;
    /// for prime fields just [p] as a marker of plain arithmetic.
    pub fn modulus_coefficients(&self) -> Vec<u64> {
        if self.h == 1 {
            vec![self.p]
        } else {
            let mut c = self.modulus.clone();
            c.push(1);
            c
        }
    }

    fn check(&self, x: u64) -> Result<(), Error> {
        if x >= self.q {
            return Err(Error::FieldElementOutOfRange {
                element: x,
                q: self.q,
            });
        }
        Ok(())
    }

    fn decode(&self, x: u64) -> Vec<u64> {
        let mut digits = vec![0; self.h as usize];
        let mut rest = x;
        for d in digits.iter_mut() {
            *d = rest % self.p;
            rest /= self.p;
        }
        digits
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.p + d % self.p)
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        debug_assert!(x < self.q && y < self.q);
        if self.h == 1 {
            return (x + y) % self.p;
        }
        let (dx, dy) = (self.decode(x), self.decode(y));
        let sum: Vec<u64> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, x: u64) -> u64 {
        debug_assert!(x < self.q);
        if self.h == 1 {
            return (self.p - x) % self.p;
        }
        let dx = self.decode(x);
        let neg: Vec<u64> = dx.iter().map(|&a| (self.p - a) % self.p).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        self.add(x, self.neg(y))
    }

    /// Polynomial multiplication mod the modulus, used to bootstrap the
    /// log/exp tables; `mul` is the fast table lookup.
    fn mul_slow(&self, x: u64, y: u64) -> u64 {
        if self.h == 1 {
            return x * y % self.p;
        }
        let (dx, dy) = (self.decode(x), self.decode(y));
        let h = self.h as usize;
        let mut prod = vec![0u64; 2 * h - 1];
        for (i, &a) in dx.iter().enumerate() {
            for (j, &b) in dy.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % self.p;
            }
        }
        // reduce by the monic modulus from the top down
        for i in (h..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                let idx = i - h + j;
                prod[idx] = (prod[idx] + c * (self.p - m)) % self.p;
            }
        }
        self.encode(&prod[..h])
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        debug_assert!(x < self.q && y < self.q);
        if x == 0 || y == 0 {
            return 0;
        }
        let e = (self.log[x as usize] as u64 + self.log[y as usize] as u64) % (self.q - 1);
        self.exp[e as usize]
    }

    pub fn inv(&self, x: u64) -> Option<u64> {
        (x != 0).then(|| {
            let e = (self.q - 1 - self.log[x as usize] as u64) % (self.q - 1);
            self.exp[e as usize]
        })
    }

    pub fn pow(&self, x: u64, e: u64) -> u64 {
        if x == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let e = (self.log[x as usize] as u64 * (e % (self.q - 1))) % (self.q - 1);
        self.exp[e as usize]
    }

    /// g^e for the fixed generator g.
    pub fn generator_power(&self, e: u64) -> u64 {
        self.exp[(e % (self.q - 1)) as usize]
    }

    /// Discrete log base the fixed generator; None for 0.
    pub fn discrete_log(&self, x: u64) -> Option<u64> {
        self.check(x).ok()?;
        (x != 0).then(|| self.log[x as usize] as u64)
    }

    pub fn element_order(&self, x: u64) -> Result<u64, Error> {
        self.check(x)?;
        if x == 0 {
            return Err(Error::InvalidFamilyParams("0 has no multiplicative order".into()));
        }
        let l = self.log[x as usize] as u64;
        let n = self.q - 1;
        Ok(n / gcd(n, l))
    }

    /// Find the smallest generator, fill exp/log, and verify the tables
    /// cover the whole multiplicative group.
    fn install_primitive(&mut self) -> Result<(), Error> {
        let q = self.q;
        if q == 2 {
            self.primitive = 1;
            self.exp = vec![1];
            self.log = vec![0, 0];
            return Ok(());
        }
        let factors = prime_factors(q - 1);
        let mut chosen = None;
        'candidates: for g in 2..q {
            for &f in &factors {
                if self.pow_slow(g, (q - 1) / f) == 1 {
                    continue 'candidates;
                }
            }
            chosen = Some(g);
            break;
        }
        let g = chosen.ok_or_else(|| Error::SchemeInvariant {
            q,
            detail: "no generator found".into(),
        })?;
        self.primitive = g;
        self.exp = vec![0; (q - 1) as usize];
        self.log = vec![0; q as usize];
        let mut acc = 1u64;
        let mut seen = vec![false; q as usize];
        for i in 0..(q - 1) as usize {
            self.exp[i] = acc;
            self.log[acc as usize] = i as u32;
            if seen[acc as usize] {
                return Err(Error::SchemeInvariant {
                    q,
                    detail: format!("generator {g} has order below q - 1"),
                });
            }
            seen[acc as usize] = true;
            acc = self.mul_slow(acc, g);
        }
        if acc != 1 {
            return Err(Error::SchemeInvariant {
                q,
                detail: "generator power cycle did not close".into(),
            });
        }
        Ok(())
    }

    fn pow_slow(&self, x: u64, mut e: u64) -> u64 {
        let mut base = x;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The lexicographically smallest monic irreducible polynomial of degree h
/// over GF(p), returned as its h low coefficients (constant term first).
fn smallest_irreducible(p: u64, h: u32) -> Vec<u64> {
    let h = h as usize;
    let mut low = vec![0u64; h];
    loop {
        if is_irreducible(p, &low) {
            return low;
        }
        // increment the low coefficients as a base-p counter, constant
        // term fastest... but lexicographic smallness by integer encoding
        // means the HIGH coefficients are most significant, so count with
        // the constant term as the least significant digit.
        let mut i = 0;
        loop {
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            i += 1;
            assert!(i < h, "no irreducible polynomial found, which cannot happen");
        }
    }
}

/// Irreducibility test by trial division: f (monic, degree h, low
/// coefficients given) is reducible iff some monic polynomial of degree
/// 1..=h/2 divides it.
fn is_irreducible(p: u64, low: &[u64]) -> bool {
    let h = low.len();
    // constant term 0 means x divides f
    if low[0] == 0 {
        return false;
    }
    for d in 1..=h / 2 {
        // iterate all monic divisor candidates of degree d
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut rest = enc;
            for _ in 0..d {
                div.push(rest % p);
                rest /= p;
            }
            div.push(1);
            if poly_divides(p, &div, low) {
                return false;
            }
        }
    }
    true
}

/// Whether `div` (monic) divides the monic polynomial with the given low
/// coefficients and an implicit leading 1.
fn poly_divides(p: u64, div: &[u64], low: &[u64]) -> bool {
    let mut rem: Vec<u64> = low.to_vec();
    rem.push(1);
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().expect("nonempty");
        let shift = rem.len() - 1 - d;
        if lead != 0 {
            for (j, &m) in div.iter().enumerate() {
                rem[shift + j] = (rem[shift + j] + lead * (p - m)) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_and_squares() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert_eq!(perfect_square_root(49), Some(7));
        assert_eq!(perfect_square_root(0), Some(0));
        assert_eq!(perfect_square_root(50), None);
        assert_eq!(factor_prime_power(121), Some((11, 2)));
        assert_eq!(factor_prime_power(64), Some((2, 6)));
        assert_eq!(factor_prime_power(12), None);
        assert_eq!(factor_prime_power(97), Some((97, 1)));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FiniteField::new(13, 1).unwrap();
        assert_eq!(f.q(), 13);
        assert_eq!(f.primitive_element(), 2); // 2 generates GF(13)*
        assert_eq!(f.add(9, 7), 3);
        assert_eq!(f.mul(9, 7), 63 % 13);
        assert_eq!(f.neg(5), 8);
        assert_eq!(f.inv(5), Some(8)); // 5 * 8 = 40 = 1 mod 13
        assert_eq!(f.inv(0), None);
        assert_eq!(f.pow(2, 12), 1);
        assert_eq!(f.element_order(2).unwrap(), 12);
        assert_eq!(f.element_order(12).unwrap(), 2); // 12 = -1
        assert_eq!(f.generator_power(3), 8);
        assert_eq!(f.discrete_log(8), Some(3));
    }

    #[test]
    fn gf4_structure() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.q(), 4);
        // modulus x^2 + x + 1, encoded low coefficients [1, 1]
        assert_eq!(f.modulus_coefficients(), vec![1, 1, 1]);
        // the generator is x (encoded 2): x^2 = x + 1 = 3, x^3 = 1
        assert_eq!(f.primitive_element(), 2);
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(2, 3), 1); // characteristic 2
        assert_eq!(f.neg(3), 3);
    }

    #[test]
    fn gf9_and_gf8_tables_are_consistent() {
        for (p, h) in [(3u64, 2u32), (2, 3), (5, 2), (2, 4)] {
            let f = FiniteField::new(p, h).unwrap();
            let q = f.q();
            // exp/log really are inverse maps
            for x in 1..q {
                assert_eq!(f.generator_power(f.discrete_log(x).unwrap()), x);
            }
            // multiplication distributes over addition on a sample
            for x in 0..q {
                for y in 0..q {
                    let lhs = f.mul(x, f.add(y, 1));
                    let rhs = f.add(f.mul(x, y), f.mul(x, 1));
                    assert_eq!(lhs, rhs, "distributivity at ({x}, {y}) in GF({q})");
                }
            }
            // every nonzero element has a working inverse
            for x in 1..q {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
            }
            // Frobenius: (x + y)^p = x^p + y^p
            for x in 0..q {
                for y in 0..q {
                    assert_eq!(f.pow(f.add(x, y), p), f.add(f.pow(x, p), f.pow(y, p)));
                }
            }
        }
    }

    #[test]
    fn field_construction_rejects_bad_orders() {
        assert!(matches!(FiniteField::new(6, 1), Err(Error::NotPrime(6))));
        assert!(matches!(FiniteField::new(2, 17), Err(Error::FieldTooLarge(_))));
        assert!(matches!(FiniteField::of_order(12), Err(Error::NotPrimePower(12))));
        assert!(FiniteField::new(2, 16).is_ok()); // 65536 is the cap
        assert!(FiniteField::of_order(49).is_ok());
    }

    #[test]
    fn squares_of_gf13_match_quadratic_residues() {
        let f = FiniteField::of_order(13).unwrap();
        let mut squares: Vec<u64> = (1..13).map(|x| f.mul(x, x)).collect();
        squares.sort_unstable();
        squares.dedup();
        assert_eq!(squares, vec![1, 3, 4, 9, 10, 12]);
    }
}
