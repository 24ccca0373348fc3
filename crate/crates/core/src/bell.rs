//! Noncommutative Bell polynomials, their q-analogues and the free Bell
//! polynomials with coefficients in FQSym.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::json;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::fqsym::{self, Side};
use crate::freemod::{Coeff, LinComb, QsymF, G, Y};
use crate::partition::SetPartition;
use crate::qpoly::QPoly;
use crate::tree::right_comb;
use crate::word::Permutation;

/// A polynomial in the noncommuting `Y_1, Y_2, ...`, keyed by `Y^I`.
pub type YPoly<C = i64> = LinComb<Y, C>;

fn y(i: usize) -> Composition {
    Composition::from_parts_unchecked(vec![i as u32])
}

/// Product of noncommutative polynomials: concatenation of monomials.
pub fn y_mul<C: Coeff>(a: &YPoly<C>, b: &YPoly<C>) -> YPoly<C> {
    a.bilinear(b, |i, j| LinComb::basis(i.concat(j)))
}

/// The antiautomorphism fixing each `Y_i`.
pub fn reverse_monomials<C: Coeff>(a: &YPoly<C>) -> YPoly<C> {
    a.map_keys(Composition::mirror)
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

fn one<C: Coeff>() -> YPoly<C> {
    LinComb::basis(Composition::empty())
}

/// `B'_0 .. B'_n` from `B'_{m+1} = sum_k binom(m,k) B'_{m-k} Y_{k+1}`.
fn prime_table(n: usize) -> Vec<YPoly> {
    let mut table = vec![one()];
    for m in 0..n {
        let mut next = LinComb::zero();
        for k in 0..=m {
            let yk = LinComb::basis(y(k + 1));
            next.add_scaled(&binomial(m, k), &y_mul(&table[m - k], &yk));
        }
        table.push(next);
    }
    table
}

pub fn bell_prime(n: usize) -> YPoly {
    prime_table(n).pop().unwrap()
}

/// `B''_{m+1} = sum_k binom(m,k) Y_{k+1} B''_{m-k}`.
pub fn bell_double_prime(n: usize) -> YPoly {
    let mut table: Vec<YPoly> = vec![one()];
    for m in 0..n {
        let mut next = LinComb::zero();
        for k in 0..=m {
            let yk = LinComb::basis(y(k + 1));
            next.add_scaled(&binomial(m, k), &y_mul(&yk, &table[m - k]));
        }
        table.push(next);
    }
    table.pop().unwrap()
}

fn q_table(n: usize, left: bool) -> Vec<YPoly<QPoly>> {
    let mut table: Vec<YPoly<QPoly>> = vec![one()];
    for m in 1..=n {
        let mut next = LinComb::zero();
        for k in 0..m {
            let c = QPoly::q_binomial(m as i64 - 1, k as i64)
                .expect("in range")
                .shift(k);
            let yk = LinComb::basis(y(m - k));
            let term = if left {
                y_mul(&table[k], &yk)
            } else {
                y_mul(&yk, &table[k])
            };
            next.add_scaled(&c, &term);
        }
        table.push(next);
    }
    table
}

/// `B'_n(q) = sum_{k<n} q^k [n-1 choose k]_q B'_k(q) Y_{n-k}`.
pub fn bell_prime_q(n: usize) -> YPoly<QPoly> {
    q_table(n, true).pop().unwrap()
}

/// `B''_n(q) = sum_{k<n} q^k Y_{n-k} [n-1 choose k]_q B''_k(q)`.
pub fn bell_double_prime_q(n: usize) -> YPoly<QPoly> {
    q_table(n, false).pop().unwrap()
}

/// `B_n(q)`: all `Y_i` set to 1.
pub fn bell_triangle(n: usize) -> QPoly {
    let mut out = QPoly::zero();
    for (_, c) in bell_double_prime_q(n).iter() {
        out += c;
    }
    out
}

/// `prod_{k=2}^{l} [i_1+...+i_k-1 choose i_k-1]_q q^{i_1+...+i_{k-1}}`.
pub fn coefficient_formula_q(i: &Composition) -> QPoly {
    let parts = i.parts();
    let mut out = QPoly::one();
    let mut prefix = parts.first().copied().unwrap_or(0) as i64;
    for &p in parts.iter().skip(1) {
        let b = QPoly::q_binomial(prefix + p as i64 - 1, p as i64 - 1).expect("in range");
        out = &out * &b.shift(prefix as usize);
        prefix += p as i64;
    }
    out
}

/// The `(i, j)` entry `q^{i-1} [j-1 choose j-i]_q Y_{j-i+1}` for `i <= j`.
fn qdet_entry(i: usize, j: usize) -> (QPoly, usize) {
    let c = QPoly::q_binomial(j as i64 - 1, (j - i) as i64)
        .expect("in range")
        .shift(i - 1);
    (c, j - i + 1)
}

/// The `(1, n)` quasideterminant of the almost triangular matrix with `-1`
/// on the subdiagonal, expanded as a sum over `1 = i_1 < ... < i_k <= n` of
/// `a_{i_1, i_2 - 1} a_{i_2, i_3 - 1} ... a_{i_k, n}`.
pub fn quasideterminant_bell_q(n: usize) -> YPoly<QPoly> {
    let mut out = LinComb::zero();
    if n == 0 {
        return one();
    }
    for mask in 0u64..1 << (n - 1) {
        // bit t set: t + 2 is a breakpoint
        let mut starts = vec![1usize];
        starts.extend((0..n - 1).filter(|t| mask >> t & 1 == 1).map(|t| t + 2));
        let mut coeff = QPoly::one();
        let mut parts = Vec::with_capacity(starts.len());
        for (idx, &s) in starts.iter().enumerate() {
            let end = starts.get(idx + 1).map_or(n, |&next| next - 1);
            let (c, part) = qdet_entry(s, end);
            coeff = &coeff * &c;
            parts.push(part as u32);
        }
        out.add_term(Composition::from_parts_unchecked(parts), coeff);
    }
    out
}

/// Block statistics of a set partition of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// blocks by increasing minima
    pub sharp: Vec<Vec<u32>>,
    pub k_sharp: Composition,
    /// blocks by decreasing maxima
    pub flat: Vec<Vec<u32>>,
    pub flat_hat: Permutation,
    pub k_flat: Composition,
}

pub fn partition_stats(pi: &SetPartition) -> Result<PartitionStats> {
    Ok(PartitionStats {
        sharp: pi.sharp_order(),
        k_sharp: pi.k_sharp(),
        flat: pi.flat_order(),
        flat_hat: pi.flat_reading()?,
        k_flat: pi.k_flat(),
    })
}

/// An element of `K<Y> (x) FQSym`: a `G`-expansion for each monomial `Y^I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBell {
    n: usize,
    terms: BTreeMap<Composition, LinComb<G>>,
}

impl FreeBell {
    fn new(n: usize) -> Self {
        FreeBell {
            n,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, key: Composition, value: &LinComb<G>) {
        let entry = self.terms.entry(key.clone()).or_default();
        entry.add_assign_ref(value);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Composition, LinComb<G>> {
        &self.terms
    }

    /// The FQSym coefficient of `Y^I` (zero when absent).
    pub fn coeff(&self, i: &Composition) -> LinComb<G> {
        self.terms.get(i).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(i, c)| {
                json!({
                    "Y": i.to_string(),
                    "coeff_fqsym": c.keys().map(|p| p.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "n": self.n, "terms": terms })
    }
}

impl fmt::Display for FreeBell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (i, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "Y{}: {c}", i.compact())?;
        }
        Ok(())
    }
}

/// `S_{k+1} < B_m`, with `a < B_0 = a`, prefixed by `Y_{k+1}`.
fn bell_branch(k: usize, prev: &FreeBell) -> Vec<(Composition, LinComb<G>)> {
    let s = fqsym::s(k + 1);
    prev.terms
        .iter()
        .map(|(j, c)| {
            let key = y(k + 1).concat(j);
            let value = if j.is_empty() {
                s.clone()
            } else {
                fqsym::dendriform_g(&s, c, Side::Left).expect("positive degrees")
            };
            (key, value)
        })
        .collect()
}

/// `B_0 = 1`, `B_{m+1} = sum_{k=0}^{m} Y_{k+1} S_{k+1} < B_{m-k}`.
pub fn free_bell(n: usize) -> FreeBell {
    let mut table = vec![{
        let mut b0 = FreeBell::new(0);
        b0.terms.insert(
            Composition::empty(),
            LinComb::basis(Permutation::identity(0)),
        );
        b0
    }];
    for m in 0..n {
        let branches: Vec<_> = (0..=m)
            .into_par_iter()
            .map(|k| bell_branch(k, &table[m - k]))
            .collect();
        let mut next = FreeBell::new(m + 1);
        for (key, value) in branches.into_iter().flatten() {
            next.add(key, &value);
        }
        table.push(next);
    }
    table.pop().unwrap()
}

/// `sum over set partitions of Y^{K(pi)} G_{flat reading of pi}`.
pub fn free_bell_partition_sum(n: usize) -> FreeBell {
    let mut out = FreeBell::new(n);
    for pi in SetPartition::all(n) {
        let g = LinComb::basis(pi.flat_reading().expect("canonical"));
        out.add(pi.k_flat(), &g);
    }
    out
}

fn require_nonempty(i: &Composition) -> Result<()> {
    if i.is_empty() {
        Err(Error::InvalidComposition("empty composition".into()))
    } else {
        Ok(())
    }
}

/// `C_I(A) = S_{i_1} < (S_{i_2} < ( ... < S_{i_r}))`.
pub fn c_coefficient_fqsym(i: &Composition) -> Result<LinComb<G>> {
    require_nonempty(i)?;
    let parts = i.parts();
    let mut acc = fqsym::s(*parts.last().unwrap() as usize);
    for &p in parts.iter().rev().skip(1) {
        acc = fqsym::dendriform_g(&fqsym::s(p as usize), &acc, Side::Left)?;
    }
    Ok(acc)
}

/// `C_I(X)`: commutative image of `C_I(A)`.
pub fn c_coefficient_qsym(i: &Composition) -> Result<LinComb<QsymF>> {
    Ok(fqsym::project_to_qsym(&fqsym::g_to_f(
        &c_coefficient_fqsym(i)?,
    )))
}

/// `c_I(q) = (q)_n C_I(1/(1-q))`.
pub fn c_coefficient_qpoly(i: &Composition) -> Result<QPoly> {
    fqsym::principal_specialization_times_pochhammer(&c_coefficient_fqsym(i)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CForm {
    Fqsym,
    Qsym,
    Qpoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CCoefficient {
    Fqsym(LinComb<G>),
    Qsym(LinComb<QsymF>),
    Qpoly(QPoly),
}

impl fmt::Display for CCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CCoefficient::Fqsym(x) => write!(f, "{x}"),
            CCoefficient::Qsym(x) => write!(f, "{x}"),
            CCoefficient::Qpoly(x) => write!(f, "{x}"),
        }
    }
}

pub fn c_coefficient(i: &Composition, form: CForm) -> Result<CCoefficient> {
    Ok(match form {
        CForm::Fqsym => CCoefficient::Fqsym(c_coefficient_fqsym(i)?),
        CForm::Qsym => CCoefficient::Qsym(c_coefficient_qsym(i)?),
        CForm::Qpoly => CCoefficient::Qpoly(c_coefficient_qpoly(i)?),
    })
}

/// `[n]_q! prod_v q^{delta_v} / [h_v]_q` over the right comb of shape `I`.
pub fn hook_length_c(i: &Composition) -> Result<QPoly> {
    require_nonempty(i)?;
    let t = right_comb(i);
    let delta: usize = t.right_subtree_sizes().iter().sum();
    let denominator = t
        .hook_lengths()
        .into_iter()
        .fold(QPoly::one(), |acc, h| &acc * &QPoly::q_integer(h));
    QPoly::q_factorial(i.weight())
        .shift(delta)
        .div_exact(&denominator)
}

/// Replaces every FQSym coefficient of `B_n` by `(q)_n` times its principal
/// specialization.
pub fn specialize_free_bell(b: &FreeBell) -> Result<YPoly<QPoly>> {
    let mut out = LinComb::zero();
    for (i, c) in b.terms() {
        out.add_term(
            i.clone(),
            fqsym::principal_specialization_times_pochhammer(c)?,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::decreasing_tree;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn qp(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    fn g(terms: &[&str]) -> LinComb<G> {
        terms.iter().map(|t| (t.parse().unwrap(), 1)).collect()
    }

    #[test]
    fn first_bell_polynomials() {
        assert_eq!(bell_double_prime(3).to_string(), "Y3 + 2 Y21 + Y12 + Y111");
        assert_eq!(
            bell_double_prime(4).to_string(),
            "Y4 + 3 Y31 + 3 Y22 + 3 Y211 + Y13 + 2 Y121 + Y112 + Y1111"
        );
        let b5 = bell_double_prime(5);
        assert_eq!(b5.coeff(&c("23")), 4);
        assert_eq!(b5.coeff(&c("32")), 6);
        assert_eq!(b5.coeff(&c("221")), 8);
        assert_eq!(bell_double_prime(0), one());
    }

    #[test]
    fn prime_and_double_prime_are_mirror_images() {
        for n in 0..=7 {
            assert_eq!(bell_prime(n), reverse_monomials(&bell_double_prime(n)));
        }
    }

    #[test]
    fn coefficients_count_set_partitions() {
        for n in 1..=7 {
            let b = bell_double_prime(n);
            let mut counts: BTreeMap<Composition, i64> = BTreeMap::new();
            for pi in SetPartition::all(n) {
                *counts.entry(pi.k_sharp()).or_default() += 1;
            }
            let from_counts: YPoly = counts.into_iter().collect();
            assert_eq!(b, from_counts);
        }
    }

    #[test]
    fn q_analogues() {
        let b3 = bell_prime_q(3);
        assert_eq!(b3.coeff(&c("12")), qp("q^2+q"));
        assert_eq!(b3.coeff(&c("21")), qp("q^2"));
        let b4 = bell_double_prime_q(4);
        assert_eq!(b4.coeff(&c("31")), qp("q^3+q^2+q"));
        assert_eq!(b4.coeff(&c("13")), qp("q^3"));
        let dp3 = bell_double_prime_q(3);
        assert_eq!(dp3.coeff(&c("21")), qp("q^2+q"));
        assert_eq!(dp3.coeff(&c("12")), qp("q^2"));
        for n in 0..=7 {
            let at_one = bell_prime_q(n).map_coeffs(|p| p.eval(1));
            assert_eq!(at_one, bell_prime(n));
            let at_one = bell_double_prime_q(n).map_coeffs(|p| p.eval(1));
            assert_eq!(at_one, bell_double_prime(n));
        }
    }

    #[test]
    fn triangle() {
        assert_eq!(bell_triangle(3), qp("1+q+2q^2+q^3"));
        assert_eq!(bell_triangle(4), qp("1+q+2q^2+4q^3+3q^4+3q^5+q^6"));
        let bells = [1, 2, 5, 15, 52, 203, 877];
        for n in 1..=7 {
            assert_eq!(bell_triangle(n).eval(1), bells[n - 1]);
            let mut sum = QPoly::zero();
            for (_, p) in bell_prime_q(n).iter() {
                sum += p;
            }
            assert_eq!(sum, bell_triangle(n));
        }
    }

    #[test]
    fn closed_coefficient_formula() {
        assert_eq!(coefficient_formula_q(&c("12")), qp("q+q^2"));
        assert_eq!(coefficient_formula_q(&c("5")), QPoly::one());
        for n in 1..=8 {
            let b = bell_prime_q(n);
            for i in Composition::all(n) {
                assert_eq!(coefficient_formula_q(&i), b.coeff(&i), "{i}");
            }
        }
    }

    #[test]
    fn quasideterminant() {
        let q2 = quasideterminant_bell_q(2);
        assert_eq!(q2.coeff(&c("2")), QPoly::one());
        assert_eq!(q2.coeff(&c("11")), qp("q"));
        assert_eq!(quasideterminant_bell_q(4).coeff(&c("13")), qp("q+q^2+q^3"));
        for n in 1..=6 {
            assert_eq!(quasideterminant_bell_q(n), bell_prime_q(n));
        }
    }

    #[test]
    fn partition_statistics() {
        let pi: SetPartition = "347|28|1|56".parse().unwrap();
        let s = partition_stats(&pi).unwrap();
        assert_eq!(s.k_sharp, c("1232"));
        assert_eq!(s.flat, vec![vec![2, 8], vec![3, 4, 7], vec![5, 6], vec![1]]);
        assert_eq!(s.flat_hat.to_string(), "28347561");
        assert_eq!(s.k_flat, c("2321"));
        let whole: SetPartition = "1234".parse().unwrap();
        assert_eq!(
            partition_stats(&whole).unwrap().flat_hat,
            Permutation::identity(4)
        );
        let bad = SetPartition::new(vec![vec![2, 5]]).unwrap();
        assert!(partition_stats(&bad).is_err());
    }

    #[test]
    fn free_bell_small() {
        let b2 = free_bell(2);
        assert_eq!(b2.terms().len(), 2);
        assert_eq!(b2.coeff(&c("2")), g(&["12"]));
        assert_eq!(b2.coeff(&c("11")), g(&["21"]));
        let b3 = free_bell(3);
        assert_eq!(b3.coeff(&c("21")), g(&["132", "231"]));
        assert_eq!(b3.coeff(&c("12")), g(&["312"]));
        let b4 = free_bell(4);
        assert_eq!(b4.coeff(&c("22")), g(&["1423", "2413", "3412"]));
        assert_eq!(b4.coeff(&c("31")), g(&["1243", "1342", "2341"]));
        assert_eq!(b4.coeff(&c("121")), g(&["4132", "4231"]));
        assert_eq!(free_bell(1).coeff(&c("1")), g(&["1"]));
    }

    #[test]
    fn free_bell_matches_partition_sum() {
        for n in 0..=6 {
            let b = free_bell(n);
            assert_eq!(b, free_bell_partition_sum(n));
            assert!(b.terms().values().all(LinComb::is_multiplicity_free));
        }
    }

    #[test]
    fn c_coefficient_221() {
        let x = c_coefficient_fqsym(&c("221")).unwrap();
        assert_eq!(
            x,
            g(&["15243", "25143", "35142", "45132", "15342", "25341", "35241", "45231"])
        );
        assert_eq!(x, free_bell(5).coeff(&c("221")));
        let expected: LinComb<QsymF> = [
            ("1121", 1),
            ("1211", 1),
            ("122", 1),
            ("131", 1),
            ("212", 1),
            ("221", 2),
            ("311", 1),
        ]
        .iter()
        .map(|&(k, v)| (c(k), v))
        .collect();
        assert_eq!(c_coefficient_qsym(&c("221")).unwrap(), expected);
        assert_eq!(
            c_coefficient_qpoly(&c("221")).unwrap(),
            qp("q^4+2q^5+2q^6+2q^7+q^8")
        );
        assert_eq!(
            hook_length_c(&c("221")).unwrap(),
            qp("q^4+2q^5+2q^6+2q^7+q^8")
        );
        assert_eq!(c_coefficient_fqsym(&c("4")).unwrap(), fqsym::s(4));
        assert!(c_coefficient_fqsym(&Composition::empty()).is_err());
    }

    #[test]
    fn c_coefficient_is_a_right_comb_class() {
        for n in 1..=6 {
            let mut by_shape: BTreeMap<Composition, LinComb<G>> = BTreeMap::new();
            for i in Composition::all(n) {
                by_shape.insert(i, LinComb::zero());
            }
            for p in Permutation::all(n) {
                let shape = decreasing_tree(p.values()).shape();
                for (i, acc) in by_shape.iter_mut() {
                    if right_comb(i) == shape {
                        acc.add_term(p.clone(), 1);
                    }
                }
            }
            for (i, expected) in by_shape {
                assert_eq!(c_coefficient_fqsym(&i).unwrap(), expected, "{i}");
            }
        }
    }

    #[test]
    fn hook_formula_matches_specialization() {
        for n in 1..=7 {
            for i in Composition::all(n) {
                assert_eq!(
                    hook_length_c(&i).unwrap(),
                    c_coefficient_qpoly(&i).unwrap(),
                    "{i}"
                );
            }
        }
        assert_eq!(hook_length_c(&c("4")).unwrap(), QPoly::one());
    }

    #[test]
    fn specialization_gives_q_bell() {
        for n in 0..=6 {
            assert_eq!(
                specialize_free_bell(&free_bell(n)).unwrap(),
                bell_double_prime_q(n)
            );
        }
    }

    #[test]
    fn json_shape() {
        let v = free_bell(2).to_json();
        assert_eq!(v["n"], 2);
        assert_eq!(v["terms"][0]["Y"], "(2)");
        assert_eq!(v["terms"][1]["coeff_fqsym"][0], "21");
    }
}
