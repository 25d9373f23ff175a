//! Polynomials over a field and the quotient ring `F[x] / <x^n - lambda(x)>`.
//!
//! `phi` maps `cir_lambda(a_0, ..., a_{n-1})` to the residue
//! `a_0 + a_1 x + ... + a_{n-1} x^{n-1}`; it is an isomorphism of
//! commutative algebras, and `phi_inverse` undoes it.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{same_field, Elem, FieldRef};
use crate::veccirc::{is_vector_circulant, vec_circulant, FieldMatrix, FieldVector, ShiftVector};

/// A polynomial, lowest coefficient first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldRef,
    coeffs: Vec<Elem>,
}

impl Polynomial {
    pub fn new(field: FieldRef, coeffs: Vec<Elem>) -> Result<Self> {
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(Self::normalized(field, coeffs))
    }

    fn normalized(field: FieldRef, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: FieldRef) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldRef) -> Self {
        Self::monomial(field, Elem::ONE, 0)
    }

    /// `c * x^k`.
    pub fn monomial(field: FieldRef, c: Elem, k: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Self::normalized(field, coeffs)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// Coefficient vector zero-padded to length `n`; `None` if the degree
    /// does not fit.
    pub fn to_vector(&self, n: usize) -> Option<FieldVector> {
        if self.coeffs.len() > n {
            return None;
        }
        let mut c = self.coeffs.clone();
        c.resize(n, Elem::ZERO);
        FieldVector::new(self.field.clone(), c).ok()
    }

    fn same(&self, other: &Polynomial) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::normalized(f.clone(), coeffs))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::normalized(f.clone(), coeffs))
    }

    pub fn scale(&self, c: Elem) -> Result<Polynomial> {
        let f = &self.field;
        f.check(c)?;
        let coeffs = self.coeffs.iter().map(|&a| f.mul(c, a)).collect();
        Ok(Self::normalized(f.clone(), coeffs))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f.clone()));
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::normalized(f.clone(), out))
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.same(divisor)?;
        let f = &self.field;
        let db = match divisor.degree() {
            Some(d) if divisor.coeffs[d] == Elem::ONE => d,
            _ => return Err(Error::Parse("divisor must be monic".into())),
        };
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - db];
        while rem.len() > db {
            let top = rem.len() - 1;
            let lead = rem[top];
            let shift = top - db;
            quot[shift] = lead;
            if !lead.is_zero() {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] = f.sub(rem[shift + i], f.mul(lead, c));
                }
            }
            rem.pop();
        }
        Ok((
            Self::normalized(f.clone(), quot),
            Self::normalized(f.clone(), rem),
        ))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let cs = self.field.format_elem(c);
            match (i, c == Elem::ONE) {
                (0, _) => f.write_str(&cs)?,
                (_, true) => {}
                _ => write!(f, "{cs}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `sum v_i x^i`.
pub fn poly_from_vector(v: &FieldVector) -> Polynomial {
    Polynomial::normalized(v.field().clone(), v.coords().to_vec())
}

/// The monic modulus `x^n - lambda(x)`.
pub fn quotient_modulus(lambda: &ShiftVector) -> Polynomial {
    let f = lambda.field();
    let n = lambda.len();
    let mut coeffs: Vec<Elem> = lambda.coords().iter().map(|&c| f.neg(c)).collect();
    coeffs.push(Elem::ONE);
    debug_assert_eq!(coeffs.len(), n + 1);
    Polynomial::normalized(f.clone(), coeffs)
}

/// Residue of `f` modulo `x^n - lambda(x)`, `n = lambda.len()`.
pub fn poly_mod_reduce(f: &Polynomial, lambda: &ShiftVector) -> Result<Polynomial> {
    if !same_field(f.field(), lambda.field()) {
        return Err(Error::FieldMismatch);
    }
    let (_, r) = f.div_rem_monic(&quotient_modulus(lambda))?;
    Ok(r)
}

/// An element of `F[x] / <x^n - lambda(x)>`, held as its reduced residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientElement {
    lambda: ShiftVector,
    residue: Polynomial,
}

impl QuotientElement {
    /// Reduces `f` into the ring defined by `lambda`.
    pub fn new(lambda: ShiftVector, f: &Polynomial) -> Result<Self> {
        let residue = poly_mod_reduce(f, &lambda)?;
        Ok(QuotientElement { lambda, residue })
    }

    pub fn from_vector(lambda: ShiftVector, v: &FieldVector) -> Result<Self> {
        Self::new(lambda, &poly_from_vector(v))
    }

    pub fn zero(lambda: ShiftVector) -> Self {
        let residue = Polynomial::zero(lambda.field().clone());
        QuotientElement { lambda, residue }
    }

    pub fn one(lambda: ShiftVector) -> Self {
        let residue = Polynomial::one(lambda.field().clone());
        QuotientElement { lambda, residue }
    }

    /// The class of `x^k`.
    pub fn x_pow(lambda: ShiftVector, k: usize) -> Result<Self> {
        let f = Polynomial::monomial(lambda.field().clone(), Elem::ONE, k);
        Self::new(lambda, &f)
    }

    pub fn lambda(&self) -> &ShiftVector {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn residue(&self) -> &Polynomial {
        &self.residue
    }

    /// Residue coefficients padded to length `n`.
    pub fn to_vector(&self) -> FieldVector {
        self.residue
            .to_vector(self.n())
            .expect("residue degree is below n")
    }

    fn same_context(&self, other: &QuotientElement) -> Result<()> {
        if self.lambda == other.lambda {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.same_context(other)?;
        Ok(QuotientElement {
            lambda: self.lambda.clone(),
            residue: self.residue.add(&other.residue)?,
        })
    }

    pub fn scale(&self, c: Elem) -> Result<QuotientElement> {
        Ok(QuotientElement {
            lambda: self.lambda.clone(),
            residue: self.residue.scale(c)?,
        })
    }

    pub fn mul(&self, other: &QuotientElement) -> Result<QuotientElement> {
        quotient_mul(self, other)
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.residue.fmt(f)
    }
}

/// Product in the quotient ring: plain product, then reduction.
pub fn quotient_mul(f: &QuotientElement, g: &QuotientElement) -> Result<QuotientElement> {
    f.same_context(g)?;
    let prod = f.residue.mul(&g.residue)?;
    QuotientElement::new(f.lambda.clone(), &prod)
}

/// `cir_lambda(a) -> a_0 + a_1 x + ... + a_{n-1} x^{n-1}`.
pub fn phi(lambda: &ShiftVector, m: &FieldMatrix) -> Result<QuotientElement> {
    if !is_vector_circulant(lambda, m)? {
        return Err(Error::NotVectorCirculant);
    }
    Ok(QuotientElement {
        lambda: lambda.clone(),
        residue: poly_from_vector(&m.row_vector(0)),
    })
}

/// The vector-circulant matrix whose first row is the residue's
/// coefficient vector.
pub fn phi_inverse(q: &QuotientElement) -> FieldMatrix {
    vec_circulant(&q.lambda, &q.to_vector()).expect("residue and lambda share length and field")
}
