//! Additive (GF(2)-linear) codes over F_4.
//!
//! A code is the GF(2)-span of the rows of a generator matrix. Words are
//! bit-packed: F_4 element `b0 + b1*a` (index `2*b1 + b0`) at coordinate `j`
//! sets bit `j` of the low plane to `b0` and bit `j` of the high plane to
//! `b1`. Addition is XOR of both planes and the Hamming weight is the
//! popcount of their union. The row basis is kept in reduced echelon form
//! over GF(2), and codewords are visited in binary-reflected Gray order, one
//! basis-row XOR per step.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::veccirc::{vec_circulant, FieldMatrix, FieldVector, ShiftVector};

/// Longest supported code length (one 64-bit word per plane).
pub const MAX_LENGTH: usize = 64;

/// Largest binary dimension that may be enumerated exhaustively.
pub const ENUMERATION_LIMIT: usize = 30;

/// A word of F_4^n, n <= 64, as two bit planes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PackedWord {
    pub lo: u64,
    pub hi: u64,
}

impl PackedWord {
    pub const ZERO: PackedWord = PackedWord { lo: 0, hi: 0 };

    /// Packs F_4 coordinates; panics above [`MAX_LENGTH`].
    pub fn from_coords(coords: &[Elem]) -> Self {
        Self::from_indices(coords.iter().map(|c| c.0))
    }

    /// Packs raw F_4 element indices; panics above [`MAX_LENGTH`].
    pub fn from_indices(indices: impl IntoIterator<Item = u8>) -> Self {
        let mut w = PackedWord::ZERO;
        for (j, c) in indices.into_iter().enumerate() {
            assert!(j < MAX_LENGTH);
            w.lo |= ((c & 1) as u64) << j;
            w.hi |= (((c >> 1) & 1) as u64) << j;
        }
        w
    }

    pub fn to_coords(self, n: usize) -> Vec<Elem> {
        (0..n).map(|j| self.get(j)).collect()
    }

    #[inline]
    pub fn get(self, j: usize) -> Elem {
        Elem((((self.lo >> j) & 1) | (((self.hi >> j) & 1) << 1)) as u8)
    }

    #[inline]
    pub fn weight(self) -> u32 {
        (self.lo | self.hi).count_ones()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        (self.lo | self.hi) == 0
    }

    /// Multiplies every coordinate by the F_4 scalar `c`.
    #[inline]
    pub fn scale(self, c: Elem) -> Self {
        let PackedWord { lo, hi } = self;
        match c.0 & 3 {
            0 => PackedWord::ZERO,
            1 => self,
            // a * (b0 + b1 a) = b1 + (b0 + b1) a
            2 => PackedWord {
                lo: hi,
                hi: lo ^ hi,
            },
            // a^2 * (b0 + b1 a) = (b0 + b1) + b0 a
            _ => PackedWord {
                lo: lo ^ hi,
                hi: lo,
            },
        }
    }

    /// Binary expansion in the fixed bit order `(b0, b1)` per coordinate.
    pub fn bits(self, n: usize) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 * n);
        for j in 0..n {
            out.push(((self.lo >> j) & 1) as u8);
            out.push(((self.hi >> j) & 1) as u8);
        }
        out
    }

    /// Highest set bit across both planes, high plane ranked above low.
    #[inline]
    fn pivot(self) -> Option<u32> {
        if self.hi != 0 {
            Some(64 + 63 - self.hi.leading_zeros())
        } else if self.lo != 0 {
            Some(63 - self.lo.leading_zeros())
        } else {
            None
        }
    }

    #[inline]
    fn has_bit(self, bit: u32) -> bool {
        if bit >= 64 {
            (self.hi >> (bit - 64)) & 1 == 1
        } else {
            (self.lo >> bit) & 1 == 1
        }
    }
}

impl std::ops::BitXor for PackedWord {
    type Output = PackedWord;

    #[inline]
    fn bitxor(self, rhs: PackedWord) -> PackedWord {
        PackedWord {
            lo: self.lo ^ rhs.lo,
            hi: self.hi ^ rhs.hi,
        }
    }
}

impl std::ops::BitXorAssign for PackedWord {
    #[inline]
    fn bitxor_assign(&mut self, rhs: PackedWord) {
        self.lo ^= rhs.lo;
        self.hi ^= rhs.hi;
    }
}

/// Binary expansion of an F_4 vector: each entry `b0 + b1*a` becomes the bit
/// pair `(b0, b1)`.
pub fn binary_expansion(v: &FieldVector) -> Result<Vec<u8>> {
    require_f4(v.field())?;
    require_length(v.len())?;
    Ok(PackedWord::from_coords(v.coords()).bits(v.len()))
}

fn require_f4(field: &Field) -> Result<()> {
    if field.is_f4() {
        Ok(())
    } else {
        Err(Error::NotF4)
    }
}

fn require_length(n: usize) -> Result<()> {
    if n <= MAX_LENGTH {
        Ok(())
    } else {
        Err(Error::CodeTooLong(n))
    }
}

/// Result of a threshold-limited distance computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceVerdict {
    /// The exact minimum distance.
    Exact(usize),
    /// Some nonzero codeword has weight `witness < threshold`, so `d < threshold`.
    Below { threshold: usize, witness: usize },
}

/// The GF(2) row space of a set of packed words, in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedCode {
    n: usize,
    basis: Vec<PackedWord>,
}

impl PackedCode {
    /// Row-reduces `rows` over GF(2). Zero and dependent rows drop out.
    pub fn from_rows(n: usize, rows: impl IntoIterator<Item = PackedWord>) -> Self {
        let mut basis: Vec<(u32, PackedWord)> = Vec::new();
        for mut r in rows {
            for &(p, b) in &basis {
                if r.has_bit(p) {
                    r ^= b;
                }
            }
            let Some(p) = r.pivot() else { continue };
            for (_, b) in basis.iter_mut() {
                if b.has_bit(p) {
                    *b ^= r;
                }
            }
            basis.push((p, r));
        }
        basis.sort_by_key(|b| std::cmp::Reverse(b.0));
        PackedCode {
            n,
            basis: basis.into_iter().map(|(_, b)| b).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Binary dimension k; the code has 2^k words.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PackedWord] {
        &self.basis
    }

    pub fn contains(&self, w: PackedWord) -> bool {
        let mut r = w;
        for b in &self.basis {
            if let Some(p) = b.pivot() {
                if r.has_bit(p) {
                    r ^= *b;
                }
            }
        }
        r.is_zero()
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.dimension() > ENUMERATION_LIMIT {
            Err(Error::EnumerationGuard {
                k: self.dimension(),
                limit: ENUMERATION_LIMIT,
            })
        } else {
            Ok(())
        }
    }

    pub fn codewords(&self) -> Result<CodewordIterator<'_>> {
        self.check_enumerable()?;
        Ok(CodewordIterator::new(&self.basis))
    }

    /// Minimum nonzero weight. With `threshold = Some(t)` the scan stops at
    /// the first nonzero word of weight below `t`.
    pub fn min_weight(&self, threshold: Option<usize>) -> Result<DistanceVerdict> {
        self.scan_min_weight(threshold).map(|(v, _)| v)
    }

    /// As [`min_weight`](Self::min_weight), also returning the number of
    /// nonzero codewords visited.
    pub fn scan_min_weight(&self, threshold: Option<usize>) -> Result<(DistanceVerdict, u64)> {
        self.check_enumerable()?;
        let k = self.dimension();
        if k == 0 {
            return Err(Error::TrivialCode);
        }
        let t = threshold.unwrap_or(0) as u32;
        let mut best = u32::MAX;
        let mut cur = PackedWord::ZERO;
        for i in 1u64..(1u64 << k) {
            cur ^= self.basis[i.trailing_zeros() as usize];
            let w = cur.weight();
            if w < best {
                best = w;
                if w < t {
                    let verdict = DistanceVerdict::Below {
                        threshold: t as usize,
                        witness: w as usize,
                    };
                    return Ok((verdict, i));
                }
                if w == 1 {
                    return Ok((DistanceVerdict::Exact(1), i));
                }
            }
        }
        Ok((DistanceVerdict::Exact(best as usize), (1u64 << k) - 1))
    }

    /// `W[w]` = number of codewords of weight `w`, for `w = 0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        self.check_enumerable()?;
        let mut dist = vec![0u64; self.n + 1];
        dist[0] = 1;
        let mut cur = PackedWord::ZERO;
        for i in 1u64..(1u64 << self.dimension()) {
            cur ^= self.basis[i.trailing_zeros() as usize];
            dist[cur.weight() as usize] += 1;
        }
        Ok(dist)
    }
}

/// Visits all 2^k codewords in Gray order, starting with zero.
pub struct CodewordIterator<'a> {
    basis: &'a [PackedWord],
    current: PackedWord,
    step: u64,
    total: u64,
}

impl<'a> CodewordIterator<'a> {
    fn new(basis: &'a [PackedWord]) -> Self {
        CodewordIterator {
            basis,
            current: PackedWord::ZERO,
            step: 0,
            total: 1u64 << basis.len(),
        }
    }
}

impl Iterator for CodewordIterator<'_> {
    type Item = PackedWord;

    fn next(&mut self) -> Option<PackedWord> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            self.current ^= self.basis[self.step.trailing_zeros() as usize];
        }
        self.step += 1;
        Some(self.current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CodewordIterator<'_> {}

/// An additive code over F_4 with its generator matrix and lazily computed
/// minimum distance and weight distribution.
#[derive(Debug)]
pub struct AdditiveCode {
    generator: FieldMatrix,
    packed: PackedCode,
    origin: Option<(ShiftVector, FieldVector)>,
    distance: OnceLock<usize>,
    weights: OnceLock<Vec<u64>>,
}

impl Clone for AdditiveCode {
    fn clone(&self) -> Self {
        AdditiveCode {
            generator: self.generator.clone(),
            packed: self.packed.clone(),
            origin: self.origin.clone(),
            distance: self.distance.clone(),
            weights: self.weights.clone(),
        }
    }
}

impl AdditiveCode {
    /// The additive span of the rows of `generator`. Rank-deficient
    /// generators are accepted; `dimension()` reports the true rank.
    pub fn from_generator(generator: FieldMatrix) -> Result<Self> {
        require_f4(generator.field())?;
        require_length(generator.cols())?;
        let rows = (0..generator.rows()).map(|i| PackedWord::from_coords(generator.row(i)));
        let packed = PackedCode::from_rows(generator.cols(), rows);
        Ok(AdditiveCode {
            generator,
            packed,
            origin: None,
            distance: OnceLock::new(),
            weights: OnceLock::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.packed.n
    }

    pub fn is_empty(&self) -> bool {
        self.packed.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.packed.dimension()
    }

    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    pub fn packed(&self) -> &PackedCode {
        &self.packed
    }

    /// `(lambda, v)` when the code was built by [`vc_code`].
    pub fn origin(&self) -> Option<(&ShiftVector, &FieldVector)> {
        self.origin.as_ref().map(|(l, v)| (l, v))
    }

    pub fn contains(&self, v: &FieldVector) -> bool {
        v.field().is_f4()
            && v.len() == self.len()
            && self.packed.contains(PackedWord::from_coords(v.coords()))
    }

    pub fn codewords(&self) -> Result<CodewordIterator<'_>> {
        self.packed.codewords()
    }

    /// Codewords as field vectors, in Gray order.
    pub fn codeword_vectors(&self) -> Result<impl Iterator<Item = FieldVector> + '_> {
        let field = self.generator.field().clone();
        let n = self.len();
        Ok(self.codewords()?.map(move |w| {
            FieldVector::new(field.clone(), w.to_coords(n)).expect("F_4 coordinates")
        }))
    }

    pub fn min_distance(&self) -> Result<usize> {
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        match self.packed.min_weight(None)? {
            DistanceVerdict::Exact(d) => Ok(*self.distance.get_or_init(|| d)),
            DistanceVerdict::Below { .. } => unreachable!("no threshold given"),
        }
    }

    /// Distance with early abort below `threshold`.
    pub fn min_distance_with_threshold(&self, threshold: usize) -> Result<DistanceVerdict> {
        if let Some(&d) = self.distance.get() {
            return Ok(if d < threshold {
                DistanceVerdict::Below {
                    threshold,
                    witness: d,
                }
            } else {
                DistanceVerdict::Exact(d)
            });
        }
        let verdict = self.packed.min_weight(Some(threshold))?;
        if let DistanceVerdict::Exact(d) = verdict {
            self.distance.get_or_init(|| d);
        }
        Ok(verdict)
    }

    pub fn weight_distribution(&self) -> Result<&[u64]> {
        if self.dimension() == 0 {
            return Err(Error::TrivialCode);
        }
        if let Some(w) = self.weights.get() {
            return Ok(w);
        }
        let dist = self.packed.weight_distribution()?;
        if let Some(d) = dist.iter().skip(1).position(|&c| c > 0) {
            self.distance.get_or_init(|| d + 1);
        }
        Ok(self.weights.get_or_init(|| dist))
    }

    pub fn classification(&self) -> Result<Classification> {
        Ok(classify(self.len(), self.dimension(), self.min_distance()?))
    }

    /// Full report: requires `k >= 1`.
    pub fn report(&self) -> Result<CodeReport> {
        let wd = self.weight_distribution()?.to_vec();
        let d = self.min_distance()?;
        let field = self.generator.field();
        let fmt = |v: &[Elem]| {
            v.iter()
                .map(|&e| field.format_elem(e))
                .collect::<Vec<_>>()
                .join(",")
        };
        Ok(CodeReport {
            n: self.len(),
            lambda: self.origin.as_ref().map(|(l, _)| fmt(l.coords())),
            v: self.origin.as_ref().map(|(_, v)| fmt(v.coords())),
            k: self.dimension(),
            d,
            classification: classify(self.len(), self.dimension(), d).class,
            weight_distribution: wd,
        })
    }
}

/// The lambda-vector-circulant based additive code generated by
/// `cir_lambda(v)`.
pub fn vc_code(lambda: &ShiftVector, v: &FieldVector) -> Result<AdditiveCode> {
    require_f4(lambda.field())?;
    let g = vec_circulant(lambda, v)?;
    let mut code = AdditiveCode::from_generator(g)?;
    code.origin = Some((lambda.clone(), v.clone()));
    Ok(code)
}

/// Hamming weight: number of nonzero coordinates.
pub fn hamming_weight(v: &FieldVector) -> usize {
    v.coords().iter().filter(|c| !c.is_zero()).count()
}

/// Position relative to the half-rate Singleton bound `d <= floor(n/2) + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeClass {
    Extremal,
    NearExtremal,
    Ordinary,
    BoundViolating,
}

impl CodeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CodeClass::Extremal => "extremal",
            CodeClass::NearExtremal => "near-extremal",
            CodeClass::Ordinary => "ordinary",
            CodeClass::BoundViolating => "bound-violating",
        }
    }
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: CodeClass,
    pub note: Option<&'static str>,
}

pub const HALF_RATE_ONLY: &str =
    "the Singleton classification applies to half-rate (k = n) codes only";

/// `floor(n/2) + 1`, the largest distance a half-rate code of length n can have.
pub fn singleton_bound(n: usize) -> usize {
    n / 2 + 1
}

pub fn classify(n: usize, k: usize, d: usize) -> Classification {
    if k != n {
        return Classification {
            class: CodeClass::Ordinary,
            note: Some(HALF_RATE_ONLY),
        };
    }
    let bound = singleton_bound(n);
    let class = if d > bound {
        CodeClass::BoundViolating
    } else if d == bound {
        CodeClass::Extremal
    } else if d == n / 2 {
        CodeClass::NearExtremal
    } else {
        CodeClass::Ordinary
    };
    Classification { class, note: None }
}

/// Machine-readable summary of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub n: usize,
    pub lambda: Option<String>,
    pub v: Option<String>,
    pub k: usize,
    pub d: usize,
    pub classification: CodeClass,
    pub weight_distribution: Vec<u64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::f4::{ALPHA as A, ALPHA2 as A2, ONE, ZERO};
    use crate::gf::FieldRef;
    use std::collections::HashSet;

    fn gf4() -> FieldRef {
        Field::gf4()
    }

    fn fv(c: &[Elem]) -> FieldVector {
        FieldVector::new(gf4(), c.to_vec()).unwrap()
    }

    fn code(lambda: &[Elem], v: &[Elem]) -> AdditiveCode {
        vc_code(&ShiftVector::new(gf4(), lambda.to_vec()).unwrap(), &fv(v)).unwrap()
    }

    fn generated(rows: &[&[Elem]]) -> AdditiveCode {
        let rows: Vec<FieldVector> = rows.iter().map(|r| fv(r)).collect();
        AdditiveCode::from_generator(FieldMatrix::from_rows(gf4(), &rows).unwrap()).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(hamming_weight(&fv(&[ZERO, A, ZERO, ONE])), 2);
        assert_eq!(hamming_weight(&fv(&[ZERO; 5])), 0);
        assert_eq!(hamming_weight(&fv(&[A, ONE])), 2);
    }

    #[test]
    fn scalar_packing_matches_field() {
        let f = gf4();
        let all: Vec<Elem> = f.elements().collect();
        let w = PackedWord::from_coords(&all);
        for c in f.elements() {
            let expect: Vec<Elem> = all.iter().map(|&x| f.mul(c, x)).collect();
            assert_eq!(w.scale(c).to_coords(4), expect);
        }
        assert_eq!(w.bits(4), vec![0, 0, 1, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn generator_rank_examples() {
        let n = 5;
        let id = AdditiveCode::from_generator(FieldMatrix::identity(gf4(), n)).unwrap();
        assert_eq!(id.dimension(), n);
        let c = generated(&[&[ONE, ZERO], &[A, ZERO], &[A2, ZERO]]);
        assert_eq!(c.dimension(), 2);
        let c = generated(&[&[ONE, A], &[ZERO, ZERO]]);
        assert_eq!(c.dimension(), 1);
    }

    #[test]
    fn enumeration_examples() {
        let zero = code(&[ONE, ZERO], &[ZERO, ZERO]);
        assert_eq!(zero.dimension(), 0);
        let words: Vec<_> = zero.codewords().unwrap().collect();
        assert_eq!(words, vec![PackedWord::ZERO]);

        let c = code(&[ONE, ONE], &[A, ONE]);
        let got: HashSet<Vec<Elem>> = c
            .codeword_vectors()
            .unwrap()
            .map(|v| v.into_coords())
            .collect();
        let want: HashSet<Vec<Elem>> = [vec![ZERO, ZERO], vec![A, ONE], vec![ONE, A2], vec![A2, A]]
            .into_iter()
            .collect();
        assert_eq!(got, want);
        assert_eq!(c.codewords().unwrap().next(), Some(PackedWord::ZERO));

        let e: Vec<FieldVector> = (0..13).map(|i| FieldVector::unit(gf4(), 13, i)).collect();
        let c13 = AdditiveCode::from_generator(FieldMatrix::from_rows(gf4(), &e).unwrap()).unwrap();
        assert_eq!(c13.codewords().unwrap().len(), 8192);
    }

    #[test]
    fn gray_steps_differ_by_one_basis_row() {
        let c = code(&[ONE, ZERO, ZERO, ONE], &[ONE, A, ONE, ONE]);
        let words: Vec<_> = c.codewords().unwrap().collect();
        for pair in words.windows(2) {
            assert!(c.packed().basis().contains(&(pair[0] ^ pair[1])));
        }
    }

    #[test]
    fn enumeration_guard() {
        // 31 independent rows over 16 coordinates: unit vectors and a-multiples
        let mut rows = Vec::new();
        for i in 0..16 {
            rows.push(FieldVector::unit(gf4(), 16, i));
            if i < 15 {
                rows.push(FieldVector::unit(gf4(), 16, i).scale(A).unwrap());
            }
        }
        let c =
            AdditiveCode::from_generator(FieldMatrix::from_rows(gf4(), &rows).unwrap()).unwrap();
        assert_eq!(c.dimension(), 31);
        assert_eq!(
            c.min_distance(),
            Err(Error::EnumerationGuard { k: 31, limit: 30 })
        );
        assert!(c.codewords().is_err());
    }

    #[test]
    fn distance_examples() {
        assert_eq!(code(&[ONE, ONE], &[A, ONE]).min_distance(), Ok(2));
        assert_eq!(
            code(
                &[ONE, ZERO, ZERO, ZERO, ZERO, ZERO],
                &[A, A2, A, ONE, ONE, ONE]
            )
            .min_distance(),
            Ok(4)
        );
        let id = AdditiveCode::from_generator(FieldMatrix::identity(gf4(), 4)).unwrap();
        assert_eq!(id.min_distance(), Ok(1));
        assert_eq!(
            code(&[ONE, ZERO], &[ZERO, ZERO]).min_distance(),
            Err(Error::TrivialCode)
        );
    }

    #[test]
    fn weight_distribution_examples() {
        let c = code(&[ONE, ONE], &[A, ONE]);
        assert_eq!(c.weight_distribution().unwrap(), &[1, 0, 3]);
        let one_row = generated(&[&[A, ONE, A2, ONE]]);
        assert_eq!(one_row.weight_distribution().unwrap(), &[1, 0, 0, 0, 1]);
        let i2 = AdditiveCode::from_generator(FieldMatrix::identity(gf4(), 2)).unwrap();
        assert_eq!(i2.weight_distribution().unwrap(), &[1, 2, 1]);
    }

    #[test]
    fn threshold_verdicts() {
        let c12 = code(
            &[
                ONE, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO,
            ],
            &[ZERO, ONE, A2, A2, ONE, A, ONE, ONE, ONE, ONE, ONE, ONE],
        );
        match c12.min_distance_with_threshold(7).unwrap() {
            DistanceVerdict::Below { threshold, witness } => {
                assert_eq!(threshold, 7);
                assert!(witness < 7);
            }
            other => panic!("expected below-threshold verdict, got {other:?}"),
        }
        assert_eq!(
            c12.min_distance_with_threshold(6),
            Ok(DistanceVerdict::Exact(6))
        );
        assert_eq!(c12.min_distance(), Ok(6));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(6, 6, 4).class, CodeClass::Extremal);
        assert_eq!(classify(13, 13, 6).class, CodeClass::NearExtremal);
        assert_eq!(classify(4, 4, 1).class, CodeClass::Ordinary);
        assert_eq!(classify(4, 4, 4).class, CodeClass::BoundViolating);
        let c = classify(4, 3, 3);
        assert_eq!(c.class, CodeClass::Ordinary);
        assert_eq!(c.note, Some(HALF_RATE_ONLY));
    }

    #[test]
    fn vc_code_examples() {
        let c = code(&[ONE, ZERO, ZERO, ONE], &[ONE, A, ONE, ONE]);
        assert_eq!(
            (c.len(), c.dimension(), c.min_distance().unwrap()),
            (4, 4, 3)
        );
        let mut l9 = vec![ZERO; 9];
        l9[0] = ONE;
        l9[8] = ONE;
        let mut v9 = vec![ONE; 9];
        v9[0] = A2;
        v9[1] = A;
        let c = code(&l9, &v9);
        assert_eq!((c.dimension(), c.min_distance().unwrap()), (9, 4));
        assert_eq!(code(&[A, ONE, ONE], &[ZERO; 3]).dimension(), 0);
        let lambda = ShiftVector::new(gf4(), vec![ONE, ZERO, ONE]).unwrap();
        assert!(vc_code(&lambda, &fv(&[ONE, A])).is_err());
        let g3 = Field::with_order(3).unwrap();
        let l3 = ShiftVector::from_indices(g3.clone(), &[1, 0]).unwrap();
        let v3 = FieldVector::from_indices(g3, &[1, 2]).unwrap();
        assert_eq!(vc_code(&l3, &v3).unwrap_err(), Error::NotF4);
    }

    #[test]
    fn report_record() {
        let c = code(&[ONE, ONE], &[A, ONE]);
        let r = c.report().unwrap();
        assert_eq!(r.lambda.as_deref(), Some("1,1"));
        assert_eq!(r.v.as_deref(), Some("a,1"));
        assert_eq!((r.n, r.k, r.d), (2, 2, 2));
        assert_eq!(r.classification, CodeClass::Extremal);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"classification\":\"extremal\""));
        let back: CodeReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
