//! Randomized checks of the algebraic structure of `Cir_{n,lambda}(F_q)`:
//! linearity of the shift, its matrix realization by `T_lambda`, the power
//! and basis identities for `T_lambda`, closure and commutativity under the
//! matrix product, and the algebra isomorphism `phi` onto
//! `F_q[x] / <x^n - lambda(x)>`.
//!
//! Each property compares two independent computations; `ring-check` in the
//! CLI is a thin wrapper over [`check_ring_properties`].

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gf::{Elem, FieldRef};
use crate::polyring::{
    phi, phi_inverse, poly_mod_reduce, quotient_modulus, Polynomial, QuotientElement,
};
use crate::veccirc::{
    companion_matrix, is_companion_invertible, is_vector_circulant, shift_power, vec_circulant,
    vector_cyclic_shift, FieldMatrix, FieldVector, ShiftVector,
};

pub const PROPERTY_NAMES: [&str; 12] = [
    "shift-linearity",
    "shift-is-companion-product",
    "companion-power-is-circulant",
    "companion-power-is-basis-matrix",
    "basis-decomposition",
    "closure-and-commutativity",
    "subspace-laws",
    "phi-homomorphism",
    "phi-bijective",
    "reduction-correctness",
    "phi-power-compatibility",
    "invertibility-matches-rank",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    /// First failing instance, if any.
    pub example: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub q: usize,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub properties: Vec<PropertyOutcome>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }

    pub fn failures(&self) -> u64 {
        self.properties.iter().map(|p| p.failures).sum()
    }
}

struct Sampler {
    rng: ChaCha8Rng,
    field: FieldRef,
}

impl Sampler {
    fn elem(&mut self) -> Elem {
        Elem((self.rng.next_u64() % self.field.order() as u64) as u8)
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.rng.next_u64() % bound as u64) as usize
    }

    fn vector(&mut self, n: usize) -> FieldVector {
        let c = (0..n).map(|_| self.elem()).collect();
        FieldVector::new(self.field.clone(), c).expect("sampled elements are in range")
    }

    fn poly(&mut self, max_len: usize) -> Polynomial {
        let len = self.below(max_len + 1);
        let c = (0..len).map(|_| self.elem()).collect();
        Polynomial::new(self.field.clone(), c).expect("sampled elements are in range")
    }
}

/// Reduction by repeated substitution `x^{n+k} -> x^k lambda(x)`, kept apart
/// from the division-based reduction it is checked against.
fn reduce_by_substitution(f: &Polynomial, lambda: &ShiftVector) -> Vec<Elem> {
    let field = f.field();
    let n = lambda.len();
    let mut c = f.coeffs().to_vec();
    while c.len() > n {
        let top = c.len() - 1;
        let lead = c.pop().unwrap();
        let k = top - n;
        for (j, &l) in lambda.coords().iter().enumerate() {
            c[k + j] = field.add(c[k + j], field.mul(lead, l));
        }
    }
    c.resize(n, Elem::ZERO);
    c
}

/// Runs every property on `trials` random instances of length `n` over
/// `field`. Every fourth instance forces `lambda_0 = 0`.
pub fn check_ring_properties(
    field: FieldRef,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<PropertyReport> {
    let mut s = Sampler {
        rng: ChaCha8Rng::seed_from_u64(seed),
        field: field.clone(),
    };
    let mut outcomes: Vec<PropertyOutcome> = PROPERTY_NAMES
        .iter()
        .map(|&name| PropertyOutcome {
            name: name.to_string(),
            checked: 0,
            failures: 0,
            example: None,
        })
        .collect();

    for trial in 0..trials {
        let mut lambda_v = s.vector(n);
        if trial % 4 == 3 {
            let mut c = lambda_v.into_coords();
            c[0] = Elem::ZERO;
            lambda_v = FieldVector::new(field.clone(), c)?;
        }
        let lambda = ShiftVector::from_vector(lambda_v)?;
        let (a, b, u, v) = (s.vector(n), s.vector(n), s.vector(n), s.vector(n));
        let c = s.elem();
        let t = companion_matrix(&lambda);
        let ca = vec_circulant(&lambda, &a)?;
        let cb = vec_circulant(&lambda, &b)?;
        let identity = FieldMatrix::identity(field.clone(), n);
        let e1 = FieldVector::unit(field.clone(), n, 0);

        let mut results: Vec<bool> = Vec::with_capacity(PROPERTY_NAMES.len());

        // shift-linearity
        let rho = |x: &FieldVector| vector_cyclic_shift(&lambda, x);
        results.push(
            rho(&u.add(&v)?)? == rho(&u)?.add(&rho(&v)?)?
                && rho(&u.scale(c)?)? == rho(&u)?.scale(c)?,
        );

        // shift-is-companion-product
        results.push(rho(&v)? == v.mul_matrix(&t)?);

        // companion-power-is-circulant, m = 0..=3n
        let mut ok = true;
        let mut power = identity.clone();
        for m in 0..=3 * n {
            if m > 0 {
                power = power.mul(&t)?;
            }
            if power != vec_circulant(&lambda, &shift_power(&lambda, &e1, m)?)? {
                ok = false;
                break;
            }
        }
        results.push(ok);

        // companion-power-is-basis-matrix, i = 0..n
        let mut ok = true;
        let mut power = identity.clone();
        for i in 0..n {
            if i > 0 {
                power = power.mul(&t)?;
            }
            if power != vec_circulant(&lambda, &FieldVector::unit(field.clone(), n, i))? {
                ok = false;
                break;
            }
        }
        results.push(ok);

        // basis-decomposition: cir(a) = sum a_i cir(E_{i+1})
        let mut sum = FieldMatrix::zeros(field.clone(), n, n);
        for (i, &ai) in a.coords().iter().enumerate() {
            let basis = vec_circulant(&lambda, &FieldVector::unit(field.clone(), n, i))?;
            sum = sum.add(&basis.scale(ai)?)?;
        }
        results.push(sum == ca && crate::veccirc::basis_decomposition(&lambda, &ca)? == a);

        // closure-and-commutativity
        let ab = ca.mul(&cb)?;
        let ba = cb.mul(&ca)?;
        results.push(is_vector_circulant(&lambda, &ab)? && ab == ba);

        // subspace-laws
        results.push(
            ca.add(&cb)? == vec_circulant(&lambda, &a.add(&b)?)?
                && ca.scale(c)? == vec_circulant(&lambda, &a.scale(c)?)?,
        );

        // phi-homomorphism
        let pa = phi(&lambda, &ca)?;
        let pb = phi(&lambda, &cb)?;
        results.push(
            phi(&lambda, &ab)? == pa.mul(&pb)?
                && phi(&lambda, &ca.add(&cb)?)? == pa.add(&pb)?
                && phi(&lambda, &ca.scale(c)?)? == pa.scale(c)?,
        );

        // phi-bijective
        let f = s.poly(3 * n);
        let qf = QuotientElement::new(lambda.clone(), &f)?;
        results.push(phi_inverse(&pa) == ca && phi(&lambda, &phi_inverse(&qf))? == qf);

        // reduction-correctness
        let modulus = quotient_modulus(&lambda);
        let (quot, rem) = f.div_rem_monic(&modulus)?;
        let reduced = poly_mod_reduce(&f, &lambda)?;
        let substituted = reduce_by_substitution(&f, &lambda);
        results.push(
            quot.mul(&modulus)?.add(&rem)? == f
                && reduced == rem
                && reduced.degree().is_none_or(|d| d < n)
                && reduced.to_vector(n).map(FieldVector::into_coords) == Some(substituted),
        );

        // phi-power-compatibility
        let m = s.below(3 * n + 1);
        let tm = t.pow(m as u64)?;
        let xm = QuotientElement::x_pow(lambda.clone(), m)?;
        results.push(phi(&lambda, &tm)? == xm);

        // invertibility-matches-rank
        results.push(is_companion_invertible(&lambda) == (t.rank() == n));

        for (outcome, ok) in outcomes.iter_mut().zip(results) {
            outcome.checked += 1;
            if !ok {
                outcome.failures += 1;
                if outcome.example.is_none() {
                    outcome.example = Some(format!("lambda=({lambda}) a=({a}) b=({b})"));
                }
            }
        }
    }

    Ok(PropertyReport {
        q: field.order(),
        n,
        trials,
        seed,
        properties: outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn gf4_suite_passes() {
        for n in 1..=5 {
            let r = check_ring_properties(Field::gf4(), n, 200, 7).unwrap();
            assert!(r.all_pass(), "{r:?}");
            assert!(r.properties.iter().all(|p| p.checked == 200));
        }
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let r = check_ring_properties(Field::gf4(), 3, 0, 1).unwrap();
        assert!(r.all_pass());
        assert!(r.properties.iter().all(|p| p.checked == 0));
    }

    #[test]
    fn substitution_matches_worked_example() {
        // x^4 mod x^3 - (1 + x^2) = 1 + x + x^2
        let f = Polynomial::monomial(Field::gf4(), Elem::ONE, 4);
        let lambda = ShiftVector::from_indices(Field::gf4(), &[1, 0, 1]).unwrap();
        assert_eq!(
            reduce_by_substitution(&f, &lambda),
            vec![Elem(1), Elem(1), Elem(1)]
        );
    }
}
