//! Exact arithmetic in small finite fields GF(p^m) with q = p^m <= 256.
//!
//! Elements are stored as indices in the polynomial basis: the base-p digits
//! of an index are the coefficients of 1, x, x^2, ... of its representative
//! modulo the reduction polynomial. Addition is digitwise (plain XOR when
//! p = 2), multiplication goes through exponent/logarithm tables built from a
//! primitive element.
//!
//! ```
//! use vcirc_core::gf::{f4, Field};
//!
//! let f = Field::gf4();
//! assert_eq!(f.add(f4::ONE, f4::ALPHA), f4::ALPHA2);
//! assert_eq!(f.mul(f4::ALPHA, f4::ALPHA2), f4::ONE);
//! ```

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Shared handle to an immutable field.
pub type FieldRef = Arc<Field>;

/// A field element, identified by its index in the polynomial basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Elem(pub u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Named elements of F_4 = {0, 1, a, a^2 = 1 + a}.
pub mod f4 {
    use super::Elem;

    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);
    pub const ALPHA: Elem = Elem(2);
    pub const ALPHA2: Elem = Elem(3);
}

/// Largest supported field order.
pub const MAX_ORDER: u32 = 256;

/// Built-in primitive reduction polynomials, lowest coefficient first, for
/// every extension field of order at most 256. Prime fields use `x`.
fn default_modulus(p: u32, m: u32) -> Option<Vec<u8>> {
    let coeffs: &[u8] = match (p, m) {
        (_, 1) => &[0, 1],
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (2, 6) => &[1, 1, 0, 0, 0, 0, 1],
        (2, 7) => &[1, 1, 0, 0, 0, 0, 0, 1],
        (2, 8) => &[1, 0, 1, 1, 1, 0, 0, 0, 1],
        (3, 2) => &[2, 2, 1],
        (3, 3) => &[1, 2, 0, 1],
        (3, 4) => &[2, 0, 0, 2, 1],
        (3, 5) => &[1, 2, 0, 0, 0, 1],
        (5, 2) => &[2, 4, 1],
        (5, 3) => &[3, 3, 0, 1],
        (7, 2) => &[3, 6, 1],
        (11, 2) => &[2, 7, 1],
        (13, 2) => &[2, 12, 1],
        _ => return None,
    };
    Some(coeffs.to_vec())
}

fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// Dense polynomial helpers over GF(p), coefficients lowest first.
mod prime_poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    /// Remainder of `a` modulo the monic polynomial `b`.
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        while r.len() > db {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - db;
            if lead != 0 {
                for (i, &c) in b.iter().enumerate() {
                    r[shift + i] = (r[shift + i] + (p - lead) * c) % p;
                }
            }
            r.pop();
        }
        trim(r)
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    /// Monic polynomial of the given degree whose lower coefficients are the
    /// base-p digits of `index`.
    pub fn monic_from_index(mut index: u32, degree: usize, p: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            out.push(index % p);
            index /= p;
        }
        out.push(1);
        out
    }
}

/// Trial division of a monic polynomial against every monic polynomial of
/// degree 1..=deg/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let divisor = prime_poly::monic_from_index(idx, d, p);
            if prime_poly::rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// A finite field GF(p^m) with precomputed arithmetic tables.
pub struct Field {
    p: u32,
    m: u32,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<u8>,
    neg: Vec<u8>,
    exp: Vec<u8>,
    log: Vec<u8>,
    generator: Elem,
}

impl Field {
    /// Builds GF(p^m). Without an explicit `modulus` the built-in default
    /// reduction polynomial is used. `modulus` lists coefficients lowest
    /// degree first and must be monic of degree `m`.
    pub fn new(p: u32, m: u32, modulus: Option<&[u8]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q > MAX_ORDER as u64 {
            return Err(Error::FieldTooLarge(q));
        }
        let q = q as usize;
        let modulus = match modulus {
            Some(c) => c.to_vec(),
            None => default_modulus(p, m).ok_or_else(|| {
                Error::InvalidModulus(format!("no default reduction polynomial for GF({p}^{m})"))
            })?,
        };
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients for degree {m}, found {}",
                m + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c as u32 >= p) {
            return Err(Error::InvalidModulus(format!(
                "coefficient not reduced mod {p}"
            )));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus("polynomial is not monic".into()));
        }
        let wide: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
        if !is_irreducible(&wide, p) {
            return Err(Error::ReducibleModulus(p));
        }

        let digits = |mut x: usize| -> Vec<u32> {
            let mut d = Vec::with_capacity(m as usize);
            for _ in 0..m {
                d.push((x % p as usize) as u32);
                x /= p as usize;
            }
            d
        };
        let undigits = |d: &[u32]| -> usize {
            d.iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };

        let mut add = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&s) as u8;
            }
        }
        let neg: Vec<u8> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a).iter().map(|&c| (p - c) % p).collect();
                undigits(&d) as u8
            })
            .collect();

        let slow_mul = |a: usize, b: usize| -> usize {
            let prod = prime_poly::mul(
                &prime_poly::trim(digits(a)),
                &prime_poly::trim(digits(b)),
                p,
            );
            let mut r = prime_poly::rem(&prod, &wide, p);
            r.resize(m as usize, 0);
            undigits(&r)
        };

        let order_of = |g: usize| -> usize {
            let mut x = g;
            let mut k = 1;
            while x != 1 {
                x = slow_mul(x, g);
                k += 1;
            }
            k
        };
        let generator = (1..q)
            .find(|&g| order_of(g) == q - 1)
            .ok_or_else(|| Error::Internal("no primitive element found".into()))?;

        let mut exp = vec![0u8; 2 * (q - 1)];
        let mut log = vec![0u8; q];
        let mut x = 1usize;
        for i in 0..q - 1 {
            exp[i] = x as u8;
            exp[i + q - 1] = x as u8;
            log[x] = i as u8;
            x = slow_mul(x, generator);
        }

        Ok(Field {
            p,
            m,
            q,
            modulus,
            add,
            neg,
            exp,
            log,
            generator: Elem(generator as u8),
        })
    }

    /// GF(q) for a prime power q, using the default reduction polynomial.
    pub fn with_order(q: u32) -> Result<FieldRef> {
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q as u64));
        }
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Ok(Arc::new(Field::new(p, m, None)?))
    }

    /// The shared instance of F_4 with reduction polynomial x^2 + x + 1.
    pub fn gf4() -> FieldRef {
        static GF4: OnceLock<FieldRef> = OnceLock::new();
        GF4.get_or_init(|| Arc::new(Field::new(2, 2, None).expect("GF(4) tables")))
            .clone()
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Reduction polynomial coefficients, lowest degree first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// The primitive element the exp/log tables are built on.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn is_f4(&self) -> bool {
        self.p == 2 && self.m == 2
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.index() < self.q
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::ElementOutOfRange {
                index: a.index(),
                order: self.q,
            })
        }
    }

    /// Element from a raw index, validated.
    pub fn elem(&self, index: usize) -> Result<Elem> {
        if index < self.q {
            Ok(Elem(index as u8))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.q,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|i| Elem(i as u8))
    }

    // The unchecked operations below expect valid indices; every vector and
    // matrix constructor validates its entries, so they are safe to use on
    // anything built through this crate.

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            Elem(self.add[a.index() * self.q + b.index()])
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let s = self.log[a.index()] as usize + self.log[b.index()] as usize;
        Elem(self.exp[s])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let k = (self.log[a.index()] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
        Elem(self.exp[k as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let k = (self.q - 1 - self.log[a.index()] as usize) % (self.q - 1);
        Ok(Elem(self.exp[k]))
    }

    pub fn checked_add(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.add(self.check(a)?, self.check(b)?))
    }

    pub fn checked_mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }

    /// Parses an element: `0`, `1`, `a`, `a2` for F_4 (case-insensitive,
    /// `a^2` also accepted), decimal indices otherwise.
    pub fn parse_elem(&self, token: &str) -> Result<Elem> {
        let t = token.trim().to_ascii_lowercase();
        let bad = || Error::ParseElement(token.to_string());
        if self.is_f4() {
            return match t.as_str() {
                "0" => Ok(f4::ZERO),
                "1" => Ok(f4::ONE),
                "a" => Ok(f4::ALPHA),
                "a2" | "a^2" => Ok(f4::ALPHA2),
                _ => Err(bad()),
            };
        }
        let idx: usize = t.parse().map_err(|_| bad())?;
        if idx < self.q {
            Ok(Elem(idx as u8))
        } else {
            Err(bad())
        }
    }

    pub fn format_elem(&self, a: Elem) -> String {
        if self.is_f4() {
            match a.0 {
                0 => "0".into(),
                1 => "1".into(),
                2 => "a".into(),
                3 => "a2".into(),
                _ => a.0.to_string(),
            }
        } else {
            a.0.to_string()
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// True when both handles denote the same field.
#[inline]
pub fn same_field(a: &FieldRef, b: &FieldRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
