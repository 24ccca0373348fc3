//! FQSym on the G and F bases.
//!
//! Products are computed natively in each basis: the convolution for `G`
//! and the shifted shuffle for `F`. The dendriform half-products come in
//! two flavours: `<`/`>` split by the position of the maximum (`G`) or by
//! the last letter (`F`), and `<'`/`>'` split by the first letter.

use crate::error::{Error, Result};
use crate::freemod::{Basis, Coeff, LinComb, QsymF, Tensor2, F, G};
use crate::qpoly::QPoly;
use crate::word::{half_shuffle, shuffle, standardize, HalfShuffle, Permutation};

/// Left or right half of a split product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if (n - x + 1) as usize + cur.len() < k {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as u32, k, &mut Vec::new(), &mut out);
    out
}

/// The convolution `alpha * beta`: all `gamma = uv` with `Std(u) = alpha`
/// and `Std(v) = beta`. With `side`, only the terms where the maximum of
/// `gamma` lies in `u` (`Left`) or in `v` (`Right`).
fn convolution(alpha: &Permutation, beta: &Permutation, side: Option<Side>) -> Vec<Permutation> {
    let (k, l) = (alpha.len(), beta.len());
    let n = k + l;
    let mut out = Vec::with_capacity(combinations(n, k).len());
    for left in combinations(n, k) {
        let max_left = left.last().copied() == Some(n as u32);
        match side {
            Some(Side::Left) if !max_left => continue,
            Some(Side::Right) if max_left => continue,
            _ => {}
        }
        let mut in_left = vec![false; n + 1];
        for &x in &left {
            in_left[x as usize] = true;
        }
        let right: Vec<u32> = (1..=n as u32).filter(|&x| !in_left[x as usize]).collect();
        let mut gamma: Vec<u32> = alpha
            .values()
            .iter()
            .map(|&a| left[a as usize - 1])
            .collect();
        gamma.extend(beta.values().iter().map(|&b| right[b as usize - 1]));
        out.push(Permutation::from_vec_unchecked(gamma));
    }
    out
}

fn lift_keys<B: Basis<Key = Permutation>, C: Coeff>(keys: Vec<Vec<u32>>) -> LinComb<B, C> {
    keys.into_iter()
        .map(|w| (Permutation::from_vec_unchecked(w), C::one()))
        .collect()
}

fn require_positive_degree<B: Basis<Key = Permutation>, C: Coeff>(
    a: &LinComb<B, C>,
    b: &LinComb<B, C>,
) -> Result<()> {
    if a.keys().chain(b.keys()).any(Permutation::is_empty) {
        Err(Error::EmptyDendriform)
    } else {
        Ok(())
    }
}

/// `S_n = G_{12...n}`.
pub fn s(n: usize) -> LinComb<G> {
    LinComb::basis(Permutation::identity(n))
}

/// `G_alpha G_beta` on basis elements.
pub fn g_product_keys(alpha: &Permutation, beta: &Permutation) -> Vec<Permutation> {
    convolution(alpha, beta, None)
}

pub fn g_product<C: Coeff>(a: &LinComb<G, C>, b: &LinComb<G, C>) -> LinComb<G, C> {
    a.bilinear(b, |x, y| {
        g_product_keys(x, y)
            .into_iter()
            .map(|p| (p, C::one()))
            .collect()
    })
}

/// `G_a < G_b` (max of `gamma` in the first `|a|` positions) or `G_a > G_b`.
pub fn dendriform_g<C: Coeff>(
    a: &LinComb<G, C>,
    b: &LinComb<G, C>,
    side: Side,
) -> Result<LinComb<G, C>> {
    require_positive_degree(a, b)?;
    Ok(a.bilinear(b, |x, y| {
        convolution(x, y, Some(side))
            .into_iter()
            .map(|p| (p, C::one()))
            .collect()
    }))
}

/// `F_alpha F_beta = F_{alpha shuffle beta[k]}`.
pub fn f_product<C: Coeff>(a: &LinComb<F, C>, b: &LinComb<F, C>) -> LinComb<F, C> {
    a.bilinear(b, |x, y| {
        lift_keys(shuffle(x.values(), &y.shifted(x.len() as u32)))
    })
}

fn f_half<C: Coeff>(
    a: &LinComb<F, C>,
    b: &LinComb<F, C>,
    kind: HalfShuffle,
) -> Result<LinComb<F, C>> {
    require_positive_degree(a, b)?;
    a.try_bilinear(b, |x, y| {
        Ok(lift_keys(half_shuffle(
            x.values(),
            &y.shifted(x.len() as u32),
            kind,
        )?))
    })
}

/// `F_a < F_b` / `F_a > F_b`: split by the origin of the last letter.
pub fn dendriform_f<C: Coeff>(
    a: &LinComb<F, C>,
    b: &LinComb<F, C>,
    side: Side,
) -> Result<LinComb<F, C>> {
    let kind = match side {
        Side::Left => HalfShuffle::Prec,
        Side::Right => HalfShuffle::Succ,
    };
    f_half(a, b, kind)
}

/// `F_a <' F_b` / `F_a >' F_b`: split by the origin of the first letter.
pub fn dendriform_f_primed<C: Coeff>(
    a: &LinComb<F, C>,
    b: &LinComb<F, C>,
    side: Side,
) -> Result<LinComb<F, C>> {
    let kind = match side {
        Side::Left => HalfShuffle::PrecPrime,
        Side::Right => HalfShuffle::SuccPrime,
    };
    f_half(a, b, kind)
}

/// `F_sigma <_G F_tau = F_{sigma[l] <' tau}` with `l = |tau|`.
pub fn grinberg_prec<C: Coeff>(a: &LinComb<F, C>, b: &LinComb<F, C>) -> Result<LinComb<F, C>> {
    require_positive_degree(a, b)?;
    a.try_bilinear(b, |x, y| {
        Ok(lift_keys(half_shuffle(
            &x.shifted(y.len() as u32),
            y.values(),
            HalfShuffle::PrecPrime,
        )?))
    })
}

/// `Delta F_sigma = sum over sigma = uv of F_{Std u} (x) F_{Std v}`.
pub fn coproduct_f<C: Coeff>(a: &LinComb<F, C>) -> Tensor2<F, F, C> {
    let mut out = Tensor2::zero();
    for (sigma, c) in a.iter() {
        let v = sigma.values();
        for cut in 0..=v.len() {
            out.add_term(standardize(&v[..cut]), standardize(&v[cut..]), c.clone());
        }
    }
    out
}

/// `G_sigma = F_{sigma^-1}`.
pub fn g_to_f<C: Coeff>(a: &LinComb<G, C>) -> LinComb<F, C> {
    a.map_keys(Permutation::inverse)
}

pub fn f_to_g<C: Coeff>(a: &LinComb<F, C>) -> LinComb<G, C> {
    a.map_keys(Permutation::inverse)
}

/// `sigma -> omega sigma omega` on basis indices: the bar antiautomorphism on
/// the F basis, the Schützenberger map on the G basis.
pub fn omega_conjugate<B: Basis<Key = Permutation>, C: Coeff>(a: &LinComb<B, C>) -> LinComb<B, C> {
    a.map_keys(Permutation::schutzenberger)
}

pub fn bar<C: Coeff>(a: &LinComb<F, C>) -> LinComb<F, C> {
    omega_conjugate(a)
}

pub fn schutzenberger_g<C: Coeff>(a: &LinComb<G, C>) -> LinComb<G, C> {
    omega_conjugate(a)
}

/// `F_sigma -> F_{C(sigma)}`.
pub fn project_to_qsym<C: Coeff>(a: &LinComb<F, C>) -> LinComb<QsymF, C> {
    a.map_keys(Permutation::descent_composition)
}

/// `(q)_n a(1/(1-q))`: each `G_sigma` contributes `q^maj(C(sigma^-1))`.
pub fn principal_specialization_times_pochhammer<C: Coeff>(a: &LinComb<G, C>) -> Result<QPoly> {
    let mut degree = None;
    let mut out = QPoly::zero();
    for (sigma, c) in a.iter() {
        match degree {
            None => degree = Some(sigma.len()),
            Some(d) if d != sigma.len() => return Err(Error::Inhomogeneous),
            _ => {}
        }
        let maj = sigma.recoil_composition().maj();
        out += &(&c.to_qpoly() * &QPoly::monomial(1, maj));
    }
    Ok(out)
}

/// Standardization used to compare `<u <' v>` for words on disjoint
/// alphabets with a permutation half-product: returns `(sigma, tau)` with
/// `sigma = Std(u)`, `tau = Std(v)[k]` when `u_1 < v_1`, and
/// `sigma = Std(u)[l]`, `tau = Std(v)` otherwise.
pub fn deshalf_standardize(u: &[u32], v: &[u32]) -> Result<(Vec<u32>, Vec<u32>)> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyDendriform);
    }
    let (su, sv) = (standardize(u), standardize(v));
    Ok(if u[0] < v[0] {
        (su.values().to_vec(), sv.shifted(u.len() as u32))
    } else {
        (su.shifted(v.len() as u32), sv.values().to_vec())
    })
}

/// Descent compositions of a multiset of words, as a QSym element.
pub fn descent_image(words: &[Vec<u32>]) -> LinComb<QsymF> {
    words
        .iter()
        .map(|w| (crate::word::descent_composition_of(w), 1))
        .collect()
}

/// The common length of all indices, when there is one.
pub fn degree_of<B: Basis<Key = Permutation>, C: Coeff>(a: &LinComb<B, C>) -> Option<usize> {
    let mut it = a.keys().map(Permutation::len);
    let d = it.next()?;
    it.all(|e| e == d).then_some(d)
}
