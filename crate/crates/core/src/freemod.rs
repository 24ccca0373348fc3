//! Sparse linear combinations over tagged bases.
//!
//! A [`LinComb`] is a finite formal sum of basis elements with coefficients in
//! one of two exact domains: `i64` or [`QPoly`]. The basis is a type-level
//! tag ([`G`], [`F`], [`QsymF`], ...), so adding an FQSym element in the G
//! basis to one in the F basis does not compile. Integer combinations embed
//! into q-polynomial ones with [`LinComb::to_qpoly`].

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::qpoly::QPoly;
use crate::word::{Permutation, Word};
use crate::wqsym::PackedWord;

/// Exact coefficient domain.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn parse(s: &str) -> Result<Self>;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn to_qpoly(&self) -> QPoly;
    fn from_i64(c: i64) -> Self;
}

impl Coeff for i64 {
    fn parse(s: &str) -> Result<Self> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer '{s}'")))
    }
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn to_qpoly(&self) -> QPoly {
        QPoly::constant(*self)
    }
    fn from_i64(c: i64) -> Self {
        c
    }
}

impl Coeff for QPoly {
    fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn to_qpoly(&self) -> QPoly {
        self.clone()
    }
    fn from_i64(c: i64) -> Self {
        QPoly::constant(c)
    }
}

/// A basis tag: names the basis and fixes its index type.
pub trait Basis: 'static {
    type Key: Clone + Ord + Hash + fmt::Debug + fmt::Display + FromStr<Err = Error> + Send + Sync;
    const NAME: &'static str;
    /// Render terms by decreasing key.
    const DESCENDING: bool = false;

    fn label(key: &Self::Key) -> String;
}

fn letters_label(prefix: &str, s: String) -> String {
    if s.contains(',') {
        format!("{prefix}({s})")
    } else {
        format!("{prefix}{s}")
    }
}

/// FQSym, basis `G_sigma`.
pub enum G {}
/// FQSym, basis `F_sigma = G_{sigma^-1}`.
pub enum F {}
/// QSym, fundamental basis.
pub enum QsymF {}
/// QSym, monomial basis.
pub enum QsymM {}
/// WQSym, basis `M_u` indexed by packed words.
pub enum WqsymM {}
/// The P basis of FQSym indexed by set partitions (sums over Bell classes).
pub enum P {}
/// Noncommutative monomials `Y^I`.
pub enum Y {}
/// Free words, for formal sums of shuffles.
pub enum W {}

impl Basis for G {
    type Key = Permutation;
    const NAME: &'static str = "G";
    fn label(k: &Permutation) -> String {
        letters_label("G", k.to_string())
    }
}

impl Basis for F {
    type Key = Permutation;
    const NAME: &'static str = "F";
    fn label(k: &Permutation) -> String {
        letters_label("F", k.to_string())
    }
}

impl Basis for QsymF {
    type Key = Composition;
    const NAME: &'static str = "F_QSym";
    const DESCENDING: bool = true;
    fn label(k: &Composition) -> String {
        format!("F{k}")
    }
}

impl Basis for QsymM {
    type Key = Composition;
    const NAME: &'static str = "M_QSym";
    const DESCENDING: bool = true;
    fn label(k: &Composition) -> String {
        format!("M{k}")
    }
}

impl Basis for WqsymM {
    type Key = PackedWord;
    const NAME: &'static str = "M_WQSym";
    fn label(k: &PackedWord) -> String {
        letters_label("M", k.to_string())
    }
}

impl Basis for P {
    type Key = SetPartition;
    const NAME: &'static str = "P";
    fn label(k: &SetPartition) -> String {
        format!("P{{{k}}}")
    }
}

impl Basis for Y {
    type Key = Composition;
    const NAME: &'static str = "Y";
    const DESCENDING: bool = true;
    fn label(k: &Composition) -> String {
        format!("Y{}", k.compact())
    }
}

impl Basis for W {
    type Key = Word;
    const NAME: &'static str = "W";
    fn label(k: &Word) -> String {
        format!("[{k}]")
    }
}

/// A finite linear combination of basis elements of `B` with coefficients in `C`.
///
/// Zero coefficients are never stored.
pub struct LinComb<B: Basis, C: Coeff = i64> {
    terms: BTreeMap<B::Key, C>,
    basis: PhantomData<fn() -> B>,
}

impl<B: Basis, C: Coeff> Clone for LinComb<B, C> {
    fn clone(&self) -> Self {
        LinComb {
            terms: self.terms.clone(),
            basis: PhantomData,
        }
    }
}

impl<B: Basis, C: Coeff> PartialEq for LinComb<B, C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B: Basis, C: Coeff> Eq for LinComb<B, C> where C: Eq {}

impl<B: Basis, C: Coeff> fmt::Debug for LinComb<B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinComb<{}>({self})", B::NAME)
    }
}

impl<B: Basis, C: Coeff> Default for LinComb<B, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis, C: Coeff> LinComb<B, C> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    /// A single basis element with coefficient one.
    pub fn basis(key: B::Key) -> Self {
        Self::term(key, C::one())
    }

    pub fn term(key: B::Key, coeff: C) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    /// Adds `coeff * key` in place.
    pub fn add_term(&mut self, key: B::Key, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&coeff);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of `key` (zero when absent).
    pub fn coeff(&self, key: &B::Key) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn get(&self, key: &B::Key) -> Option<&C> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&B::Key, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &B::Key> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul_ref(c));
        }
        out
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, c: &C, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.mul_ref(c));
        }
    }

    /// Linear extension of a map defined on basis elements.
    pub fn map_linear<B2: Basis>(
        &self,
        mut f: impl FnMut(&B::Key) -> LinComb<B2, C>,
    ) -> LinComb<B2, C> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_map_linear<B2: Basis>(
        &self,
        mut f: impl FnMut(&B::Key) -> Result<LinComb<B2, C>>,
    ) -> Result<LinComb<B2, C>> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }

    /// Linear extension of a map sending basis elements to basis elements.
    pub fn map_keys<B2: Basis>(&self, mut f: impl FnMut(&B::Key) -> B2::Key) -> LinComb<B2, C> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Reinterprets the same keys in another basis with the same index set.
    pub fn retag<B2: Basis<Key = B::Key>>(&self) -> LinComb<B2, C> {
        LinComb {
            terms: self.terms.clone(),
            basis: PhantomData,
        }
    }

    /// Bilinear extension of a product defined on pairs of basis elements.
    pub fn bilinear<B2: Basis, B3: Basis>(
        &self,
        other: &LinComb<B2, C>,
        mut f: impl FnMut(&B::Key, &B2::Key) -> LinComb<B3, C>,
    ) -> LinComb<B3, C> {
        let mut out = LinComb::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_scaled(&c1.mul_ref(c2), &f(k1, k2));
            }
        }
        out
    }

    /// Fallible bilinear extension.
    pub fn try_bilinear<B2: Basis, B3: Basis>(
        &self,
        other: &LinComb<B2, C>,
        mut f: impl FnMut(&B::Key, &B2::Key) -> Result<LinComb<B3, C>>,
    ) -> Result<LinComb<B3, C>> {
        let mut out = LinComb::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_scaled(&c1.mul_ref(c2), &f(k1, k2)?);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<C2: Coeff>(&self, mut f: impl FnMut(&C) -> C2) -> LinComb<B, C2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Embeds coefficients into q-polynomials.
    pub fn to_qpoly(&self) -> LinComb<B, QPoly> {
        self.map_coeffs(C::to_qpoly)
    }

    /// Keys, each repeated according to its (positive) integer coefficient.
    pub fn from_keys(keys: impl IntoIterator<Item = B::Key>) -> Self {
        let mut out = Self::zero();
        for k in keys {
            out.add_term(k, C::one());
        }
        out
    }

    /// Parses the JSON form `{"basis": ..., "terms": [{"key": ..., "coeff": ...}]}`.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl<B: Basis> LinComb<B, i64> {
    /// True when every coefficient is 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&c| c == 1)
    }
}

impl<B: Basis, C: Coeff> FromIterator<(B::Key, C)> for LinComb<B, C> {
    fn from_iter<T: IntoIterator<Item = (B::Key, C)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<B: Basis, C: Coeff> Add<&LinComb<B, C>> for &LinComb<B, C> {
    type Output = LinComb<B, C>;
    fn add(self, rhs: &LinComb<B, C>) -> LinComb<B, C> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<B: Basis, C: Coeff> Add for LinComb<B, C> {
    type Output = LinComb<B, C>;
    fn add(mut self, rhs: LinComb<B, C>) -> LinComb<B, C> {
        self.add_assign_ref(&rhs);
        self
    }
}

impl<B: Basis, C: Coeff> Neg for &LinComb<B, C> {
    type Output = LinComb<B, C>;
    fn neg(self) -> LinComb<B, C> {
        self.map_coeffs(C::neg_ref)
    }
}

impl<B: Basis, C: Coeff> Neg for LinComb<B, C> {
    type Output = LinComb<B, C>;
    fn neg(self) -> LinComb<B, C> {
        -&self
    }
}

impl<B: Basis, C: Coeff> Sub<&LinComb<B, C>> for &LinComb<B, C> {
    type Output = LinComb<B, C>;
    fn sub(self, rhs: &LinComb<B, C>) -> LinComb<B, C> {
        let mut out = self.clone();
        out.add_scaled(&C::one().neg_ref(), rhs);
        out
    }
}

impl<B: Basis, C: Coeff> Sub for LinComb<B, C> {
    type Output = LinComb<B, C>;
    fn sub(self, rhs: LinComb<B, C>) -> LinComb<B, C> {
        &self - &rhs
    }
}

/// Renders `coeff * label` pieces as `a + 2 b - (q^2+q) c`.
pub(crate) fn render_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, String)>,
) -> fmt::Result {
    let mut first = true;
    for (coeff, label) in terms {
        let (neg, body) = match coeff.strip_prefix('-') {
            Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
            _ => (false, coeff),
        };
        let body = if body.contains(['+', '-']) {
            format!("({body})")
        } else {
            body
        };
        let piece = match (body.as_str(), label.as_str()) {
            (c, "") => c.to_string(),
            ("1", l) => l.to_string(),
            (c, l) => format!("{c} {l}"),
        };
        match (first, neg) {
            (true, true) => write!(f, "-{piece}")?,
            (true, false) => write!(f, "{piece}")?,
            (false, true) => write!(f, " - {piece}")?,
            (false, false) => write!(f, " + {piece}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn key_label<B: Basis>(k: &B::Key) -> String {
    if k.to_string().is_empty() || k.to_string() == "()" {
        String::new()
    } else {
        B::label(k)
    }
}

impl<B: Basis, C: Coeff> fmt::Display for LinComb<B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self
            .terms
            .iter()
            .map(|(k, c)| (c.to_string(), key_label::<B>(k)));
        if B::DESCENDING {
            render_terms(f, items.rev())
        } else {
            render_terms(f, items)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    key: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RawLinComb {
    basis: String,
    terms: Vec<RawTerm>,
}

impl<B: Basis, C: Coeff> Serialize for LinComb<B, C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawLinComb {
            basis: B::NAME.to_string(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| RawTerm {
                    key: k.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, B: Basis, C: Coeff> Deserialize<'de> for LinComb<B, C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawLinComb::deserialize(d)?;
        if raw.basis != B::NAME {
            return Err(D::Error::custom(Error::BasisMismatch {
                expected: B::NAME.into(),
                found: raw.basis,
            }));
        }
        let mut out = Self::zero();
        for t in raw.terms {
            let key = t.key.parse::<B::Key>().map_err(D::Error::custom)?;
            let coeff = C::parse(&t.coeff).map_err(D::Error::custom)?;
            out.add_term(key, coeff);
        }
        Ok(out)
    }
}

/// A finite sum of pure tensors `a (x) b` over two tagged bases.
pub struct Tensor2<B1: Basis, B2: Basis, C: Coeff = i64> {
    terms: BTreeMap<(B1::Key, B2::Key), C>,
    basis: PhantomData<fn() -> (B1, B2)>,
}

impl<B1: Basis, B2: Basis, C: Coeff> Clone for Tensor2<B1, B2, C> {
    fn clone(&self) -> Self {
        Tensor2 {
            terms: self.terms.clone(),
            basis: PhantomData,
        }
    }
}

impl<B1: Basis, B2: Basis, C: Coeff> PartialEq for Tensor2<B1, B2, C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B1: Basis, B2: Basis, C: Coeff> Default for Tensor2<B1, B2, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B1: Basis, B2: Basis, C: Coeff> fmt::Debug for Tensor2<B1, B2, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor2<{},{}>({self})", B1::NAME, B2::NAME)
    }
}

impl<B1: Basis, B2: Basis, C: Coeff> Tensor2<B1, B2, C> {
    pub fn zero() -> Self {
        Tensor2 {
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    pub fn add_term(&mut self, left: B1::Key, right: B2::Key, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key).or_insert_with(C::zero);
        entry.add_assign_ref(&coeff);
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, c)| c.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry present");
            self.terms.remove(&key);
        }
    }

    /// `a (x) b`, expanded bilinearly.
    pub fn from_product(a: &LinComb<B1, C>, b: &LinComb<B2, C>) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in a.iter() {
            for (k2, c2) in b.iter() {
                out.add_term(k1.clone(), k2.clone(), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn coeff(&self, left: &B1::Key, right: &B2::Key) -> C {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&B1::Key, &B2::Key, &C)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for ((a, b), c) in &other.terms {
            self.add_term(a.clone(), b.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for ((a, b), v) in &self.terms {
            out.add_term(a.clone(), b.clone(), v.mul_ref(c));
        }
        out
    }

    /// Applies linear maps to both legs.
    pub fn map_legs<B3: Basis, B4: Basis>(
        &self,
        mut f: impl FnMut(&B1::Key) -> LinComb<B3, C>,
        mut g: impl FnMut(&B2::Key) -> LinComb<B4, C>,
    ) -> Tensor2<B3, B4, C> {
        let mut out = Tensor2::zero();
        for ((a, b), c) in &self.terms {
            let t = Tensor2::from_product(&f(a), &g(b));
            out.add_assign_ref(&t.scale(c));
        }
        out
    }

    /// Multiplies the two legs together with `mul`, collapsing to one algebra.
    pub fn contract<B3: Basis>(
        &self,
        mut mul: impl FnMut(&B1::Key, &B2::Key) -> LinComb<B3, C>,
    ) -> LinComb<B3, C> {
        let mut out = LinComb::zero();
        for ((a, b), c) in &self.terms {
            out.add_scaled(c, &mul(a, b));
        }
        out
    }
}

impl<B1: Basis, B2: Basis, C: Coeff> fmt::Display for Tensor2<B1, B2, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.terms.iter().map(|((a, b), c)| {
            let la = key_label::<B1>(a);
            let lb = key_label::<B2>(b);
            let la = if la.is_empty() { "1".into() } else { la };
            let lb = if lb.is_empty() { "1".into() } else { lb };
            (c.to_string(), format!("{la}(x){lb}"))
        });
        render_terms(f, items)
    }
}

#[derive(Serialize, Deserialize)]
struct RawTensorTerm {
    left: String,
    right: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RawTensor {
    basis: [String; 2],
    terms: Vec<RawTensorTerm>,
}

impl<B1: Basis, B2: Basis, C: Coeff> Serialize for Tensor2<B1, B2, C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawTensor {
            basis: [B1::NAME.to_string(), B2::NAME.to_string()],
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| RawTensorTerm {
                    left: a.to_string(),
                    right: b.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, B1: Basis, B2: Basis, C: Coeff> Deserialize<'de> for Tensor2<B1, B2, C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawTensor::deserialize(d)?;
        if raw.basis[0] != B1::NAME || raw.basis[1] != B2::NAME {
            return Err(D::Error::custom(Error::BasisMismatch {
                expected: format!("[{}, {}]", B1::NAME, B2::NAME),
                found: format!("[{}, {}]", raw.basis[0], raw.basis[1]),
            }));
        }
        let mut out = Self::zero();
        for t in raw.terms {
            out.add_term(
                t.left.parse().map_err(D::Error::custom)?,
                t.right.parse().map_err(D::Error::custom)?,
                C::parse(&t.coeff).map_err(D::Error::custom)?,
            );
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn add_negation_is_zero() {
        let x: LinComb<F> = LinComb::from_keys([perm("132"), perm("231"), perm("132")]);
        assert_eq!(x.coeff(&perm("132")), 2);
        assert!((&x + &x.scale(&-1)).is_zero());
        assert!((&x - &x).is_zero());
        assert_eq!(x.coeff(&perm("321")), 0);
    }

    #[test]
    fn bilinear_on_singletons_is_the_basis_op() {
        let a: LinComb<W> = LinComb::basis("12".parse().unwrap());
        let b: LinComb<W> = LinComb::basis("3".parse().unwrap());
        let prod: LinComb<W> = a.bilinear(&b, |u, v| LinComb::basis(u.concat(v)));
        assert_eq!(prod, LinComb::basis("123".parse().unwrap()));
    }

    #[test]
    fn scaling_by_polynomial() {
        let x: LinComb<F> = LinComb::from_keys([perm("132"), perm("231")]);
        let s = x.to_qpoly().scale(&"1+q".parse().unwrap());
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|(_, c)| c.to_string() == "q+1"));
    }

    #[test]
    fn json_shape_and_roundtrip() {
        let mut x: LinComb<QsymF, QPoly> = LinComb::zero();
        x.add_term(comp("122"), "q^2+q".parse().unwrap());
        let json = x.to_json();
        assert_eq!(
            json,
            r#"{"basis":"F_QSym","terms":[{"key":"(1,2,2)","coeff":"q^2+q"}]}"#
        );
        assert_eq!(LinComb::<QsymF, QPoly>::from_json(&json).unwrap(), x);
        assert!(LinComb::<QsymM, QPoly>::from_json(&json).is_err());
        assert!(LinComb::<QsymF, i64>::from_json(&json).is_err());
    }

    #[test]
    fn display_forms() {
        let mut y: LinComb<Y> = LinComb::zero();
        for (k, c) in [("3", 1), ("21", 2), ("12", 1), ("111", 1)] {
            y.add_term(comp(k), c);
        }
        assert_eq!(y.to_string(), "Y3 + 2 Y21 + Y12 + Y111");
        let mut q: LinComb<Y, QPoly> = LinComb::zero();
        q.add_term(comp("12"), "q^2+q".parse().unwrap());
        q.add_term(comp("21"), "q^2".parse().unwrap());
        q.add_term(comp("3"), QPoly::constant(-1));
        assert_eq!(q.to_string(), "-Y3 + q^2 Y21 + (q^2+q) Y12");
        assert_eq!(LinComb::<F>::zero().to_string(), "0");
        let one: LinComb<QsymF> = LinComb::term(Composition::empty(), -3);
        assert_eq!(one.to_string(), "-3");
    }

    #[test]
    fn tensor_basics() {
        let a: LinComb<QsymF> = LinComb::basis(comp("1"));
        let b: LinComb<QsymF> = LinComb::from_keys([comp("2"), comp("11")]);
        let t = Tensor2::from_product(&a, &b);
        assert_eq!(t.len(), 2);
        let mut u = t.clone();
        u.add_assign_ref(&t.scale(&-1));
        assert!(u.is_zero());
        let json = serde_json::to_string(&t).unwrap();
        let back: Tensor2<QsymF, QsymF> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    fn arb_comb() -> impl Strategy<Value = LinComb<QsymF>> {
        proptest::collection::vec((proptest::collection::vec(1u32..3, 0..4), -3i64..4), 0..6)
            .prop_map(|v| {
                v.into_iter()
                    .map(|(p, c)| (Composition::new(p).unwrap(), c))
                    .collect()
            })
    }

    proptest! {
        #[test]
        fn module_axioms(a in arb_comb(), b in arb_comb(), c in arb_comb(), s in -3i64..4, t in -3i64..4) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!((&a + &b).scale(&s), &a.scale(&s) + &b.scale(&s));
            prop_assert_eq!(a.scale(&(s + t)), &a.scale(&s) + &a.scale(&t));
            prop_assert!(a.iter().all(|(_, c)| *c != 0));
        }
    }
}
