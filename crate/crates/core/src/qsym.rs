//! Quasi-symmetric functions on the fundamental and monomial bases.
//!
//! The product is computed by lifting to FQSym and projecting back. The
//! half-products use closed formulas in terms of the coproduct, the
//! antipode and the two concatenation-like products `F_I . F_J = F_{IJ}`
//! and `F_I |> F_J = F_{I |> J}`.

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::fqsym::{self, Side};
use crate::freemod::{Coeff, LinComb, QsymF, QsymM, Tensor2, WqsymM, F};
use crate::word::Permutation;
use crate::wqsym::{self, PackedWord};

/// A permutation with descent composition `I`: runs of consecutive values,
/// the last run holding the smallest ones. `(1,2,2) -> 53412`.
pub fn lift(i: &Composition) -> Permutation {
    let mut top = i.weight() as u32;
    let mut out = Vec::with_capacity(i.weight());
    for &part in i.parts() {
        let start = top - part + 1;
        out.extend(start..=top);
        top -= part;
    }
    Permutation::new(out).expect("runs cover 1..n")
}

fn lift_basis(i: &Composition) -> LinComb<F> {
    LinComb::basis(lift(i))
}

fn from_i64<C: Coeff>(x: LinComb<QsymF>) -> LinComb<QsymF, C> {
    x.map_coeffs(|&c| C::from_i64(c))
}

/// `F_I F_J`, computed as `pi(F_sigma F_tau)` for lifts `sigma`, `tau`.
pub fn product_keys(i: &Composition, j: &Composition) -> LinComb<QsymF> {
    fqsym::project_to_qsym(&fqsym::f_product(&lift_basis(i), &lift_basis(j)))
}

pub fn product<C: Coeff>(a: &LinComb<QsymF, C>, b: &LinComb<QsymF, C>) -> LinComb<QsymF, C> {
    a.bilinear(b, |i, j| from_i64(product_keys(i, j)))
}

/// `Delta F_J = sum over J = HK or J = H |> K of F_H (x) F_K`.
pub fn coproduct<C: Coeff>(a: &LinComb<QsymF, C>) -> Tensor2<QsymF, QsymF, C> {
    let mut out = Tensor2::zero();
    for (j, c) in a.iter() {
        for (h, k, _) in j.decompositions() {
            out.add_term(h, k, c.clone());
        }
    }
    out
}

fn sign<C: Coeff>(n: usize) -> C {
    if n.is_multiple_of(2) {
        C::one()
    } else {
        C::one().neg_ref()
    }
}

/// `S(F_H) = (-1)^|H| F_{H~}`.
pub fn antipode<C: Coeff>(a: &LinComb<QsymF, C>) -> LinComb<QsymF, C> {
    let mut out = LinComb::zero();
    for (h, c) in a.iter() {
        out.add_term(h.conjugate(), c.mul_ref(&sign::<C>(h.weight())));
    }
    out
}

/// `F_I -> F_{mirror I}`.
pub fn bar<C: Coeff>(a: &LinComb<QsymF, C>) -> LinComb<QsymF, C> {
    a.map_keys(Composition::mirror)
}

/// `F_I . F_J = F_{I J}`.
pub fn concat_product<C: Coeff>(a: &LinComb<QsymF, C>, b: &LinComb<QsymF, C>) -> LinComb<QsymF, C> {
    a.bilinear(b, |i, j| LinComb::basis(i.concat(j)))
}

/// `F_I |> F_J = F_{I |> J}`; both compositions must be nonempty.
pub fn near_concat_product<C: Coeff>(
    a: &LinComb<QsymF, C>,
    b: &LinComb<QsymF, C>,
) -> Result<LinComb<QsymF, C>> {
    a.try_bilinear(b, |i, j| Ok(LinComb::basis(i.near_concat(j)?)))
}

/// `|>` with the empty composition acting as a unit.
fn near_concat_unital<C: Coeff>(a: &LinComb<QsymF, C>, b: &LinComb<QsymF, C>) -> LinComb<QsymF, C> {
    a.bilinear(b, |i, j| LinComb::basis(i.near_concat_unital(j)))
}

/// The five half-products on QSym.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HalfProduct {
    /// first letter from the left factor
    PrecPrime,
    /// first letter from the right factor
    SuccPrime,
    /// last letter from the left factor
    Prec,
    /// last letter from the right factor
    Succ,
    /// Grinberg's left product
    PrecG,
}

impl HalfProduct {
    pub const ALL: [HalfProduct; 5] = [
        HalfProduct::PrecPrime,
        HalfProduct::SuccPrime,
        HalfProduct::Prec,
        HalfProduct::Succ,
        HalfProduct::PrecG,
    ];
}

fn require_positive_degree<C: Coeff>(a: &LinComb<QsymF, C>, b: &LinComb<QsymF, C>) -> Result<()> {
    if a.keys().chain(b.keys()).any(Composition::is_empty) {
        Err(Error::EmptyDendriform)
    } else {
        Ok(())
    }
}

/// Half-products by their closed formulas:
///
/// ```text
/// f <'  g = sum (S(g1) . f) g2
/// f >'  g = sum (S(f1) |> g) f2
/// f <   g = sum g1 (f |> S(g2))
/// f >   g = sum f1 (g . S(f2))
/// f <_G g = sum g2 (S(g1) |> f)
/// ```
pub fn half_product<C: Coeff>(
    a: &LinComb<QsymF, C>,
    b: &LinComb<QsymF, C>,
    kind: HalfProduct,
) -> Result<LinComb<QsymF, C>> {
    require_positive_degree(a, b)?;
    let mut out = LinComb::zero();
    let basis = |k: &Composition| LinComb::<QsymF, C>::basis(k.clone());
    match kind {
        HalfProduct::PrecPrime | HalfProduct::Prec | HalfProduct::PrecG => {
            for (g1, g2, c) in coproduct(b).iter() {
                let (g1, g2) = (basis(g1), basis(g2));
                let term = match kind {
                    HalfProduct::PrecPrime => product(&concat_product(&antipode(&g1), a), &g2),
                    HalfProduct::Prec => product(&g1, &near_concat_unital(a, &antipode(&g2))),
                    _ => product(&g2, &near_concat_unital(&antipode(&g1), a)),
                };
                out.add_scaled(c, &term);
            }
        }
        HalfProduct::SuccPrime | HalfProduct::Succ => {
            for (f1, f2, c) in coproduct(a).iter() {
                let (f1, f2) = (basis(f1), basis(f2));
                let term = match kind {
                    HalfProduct::SuccPrime => product(&near_concat_unital(&antipode(&f1), b), &f2),
                    _ => product(&f1, &concat_product(b, &antipode(&f2))),
                };
                out.add_scaled(c, &term);
            }
        }
    }
    Ok(out)
}

/// The same half-product computed on lifts in FQSym and projected back.
pub fn half_product_via_lift<C: Coeff>(
    a: &LinComb<QsymF, C>,
    b: &LinComb<QsymF, C>,
    kind: HalfProduct,
) -> Result<LinComb<QsymF, C>> {
    require_positive_degree(a, b)?;
    a.try_bilinear(b, |i, j| {
        let (x, y) = (lift_basis(i), lift_basis(j));
        let r = match kind {
            HalfProduct::PrecPrime => fqsym::dendriform_f_primed(&x, &y, Side::Left)?,
            HalfProduct::SuccPrime => fqsym::dendriform_f_primed(&x, &y, Side::Right)?,
            HalfProduct::Prec => fqsym::dendriform_f(&x, &y, Side::Left)?,
            HalfProduct::Succ => fqsym::dendriform_f(&x, &y, Side::Right)?,
            HalfProduct::PrecG => fqsym::grinberg_prec(&x, &y)?,
        };
        Ok(from_i64(fqsym::project_to_qsym(&r)))
    })
}

/// `F_I <_G F_J` through WQSym: expand both in the M basis, apply the
/// min-convention left product to packed words of those evaluations,
/// project and convert back.
pub fn grinberg_prec_via_wqsym<C: Coeff>(
    a: &LinComb<QsymF, C>,
    b: &LinComb<QsymF, C>,
) -> Result<LinComb<QsymF, C>> {
    require_positive_degree(a, b)?;
    let (am, bm) = (f_to_m(a), f_to_m(b));
    let prod = am.try_bilinear(&bm, |i, j| {
        let x: LinComb<WqsymM, C> = LinComb::basis(PackedWord::canonical(i));
        let y: LinComb<WqsymM, C> = LinComb::basis(PackedWord::canonical(j));
        Ok(wqsym::project_wqsym_to_qsym(&wqsym::prec_prime(&x, &y)?))
    })?;
    Ok(m_to_f(&prod))
}

/// `R_J^perp f = sum <F_J, f1> f2`.
pub fn quasi_diff<C: Coeff>(j: &Composition, f: &LinComb<QsymF, C>) -> LinComb<QsymF, C> {
    let mut out = LinComb::zero();
    for (f1, f2, c) in coproduct(f).iter() {
        if f1 == j {
            out.add_term(f2.clone(), c.clone());
        }
    }
    out
}

/// `f(X - Y) = sum_J S(F_J)(Y) R_J^perp f(X)`; the left leg is the `Y` alphabet.
pub fn expand_x_minus_y<C: Coeff>(f: &LinComb<QsymF, C>) -> Tensor2<QsymF, QsymF, C> {
    let mut js: Vec<Composition> = coproduct(f).iter().map(|(j, _, _)| j.clone()).collect();
    js.sort();
    js.dedup();
    let mut out = Tensor2::zero();
    for j in js {
        let y = antipode(&LinComb::<QsymF, C>::basis(j.clone()));
        let x = quasi_diff(&j, f);
        out.add_assign_ref(&Tensor2::from_product(&y, &x));
    }
    out
}

/// `f <' g = [g(X - Y) ._Y f(Y)]_{Y = X}`.
pub fn prec_prime_via_xy<C: Coeff>(
    f: &LinComb<QsymF, C>,
    g: &LinComb<QsymF, C>,
) -> LinComb<QsymF, C> {
    let mut out = LinComb::zero();
    for (y, x, c) in expand_x_minus_y(g).iter() {
        let y_leg = concat_product(&LinComb::basis(y.clone()), f);
        out.add_scaled(c, &product(&y_leg, &LinComb::basis(x.clone())));
    }
    out
}

/// `F_I = sum over refinements J of I of M_J`.
pub fn f_to_m<C: Coeff>(a: &LinComb<QsymF, C>) -> LinComb<QsymM, C> {
    a.map_linear(|i| i.refinements().into_iter().map(|j| (j, C::one())).collect())
}

/// Inverse of [`f_to_m`]: `M_I = sum over refinements J of (-1)^(l(J)-l(I)) F_J`.
pub fn m_to_f<C: Coeff>(a: &LinComb<QsymM, C>) -> LinComb<QsymF, C> {
    a.map_linear(|i| {
        i.refinements()
            .into_iter()
            .map(|j| {
                let s = sign::<C>(j.len() - i.len());
                (j, s)
            })
            .collect()
    })
}

/// How to compute the dual immaculate function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualImmaculateRoute {
    /// mirror image of the commutative image of `C_I`
    BarCI,
    /// `(...(F_{i_r} >' F_{i_{r-1}}) >' ...) >' F_{i_1}`
    GrinbergIterated,
    /// sum of `F_{D(T)}` over standard immaculate tableaux
    Tableaux,
}

impl DualImmaculateRoute {
    pub const ALL: [DualImmaculateRoute; 3] = [
        DualImmaculateRoute::BarCI,
        DualImmaculateRoute::GrinbergIterated,
        DualImmaculateRoute::Tableaux,
    ];
}

/// Standard immaculate tableaux of shape `I`: rows of sizes `i_1, ..., i_r`
/// filled with `1..n`, increasing along rows and down the first column.
pub fn immaculate_tableaux(i: &Composition) -> Vec<Vec<Vec<u32>>> {
    fn go(
        parts: &[u32],
        remaining: &[u32],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        let Some((&size, rest)) = parts.split_first() else {
            out.push(rows.clone());
            return;
        };
        let (&first, pool) = remaining.split_first().expect("enough letters");
        for chosen in choose(pool, size as usize - 1) {
            let mut row = vec![first];
            row.extend(&chosen);
            let left: Vec<u32> = pool
                .iter()
                .copied()
                .filter(|x| !chosen.contains(x))
                .collect();
            rows.push(row);
            go(rest, &left, rows, out);
            rows.pop();
        }
    }
    fn choose(pool: &[u32], k: usize) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        if pool.len() < k {
            return Vec::new();
        }
        let mut out: Vec<Vec<u32>> = choose(&pool[1..], k - 1)
            .into_iter()
            .map(|mut c| {
                c.insert(0, pool[0]);
                c
            })
            .collect();
        out.extend(choose(&pool[1..], k));
        out
    }
    let letters: Vec<u32> = (1..=i.weight() as u32).collect();
    let mut out = Vec::new();
    go(i.parts(), &letters, &mut Vec::new(), &mut out);
    out
}

/// Reading word of a tableau: rows bottom to top, each left to right.
pub fn tableau_reading(t: &[Vec<u32>]) -> Permutation {
    Permutation::new(t.iter().rev().flatten().copied().collect()).expect("tableau is standard")
}

/// Descent composition of a tableau: recoils of its reading word.
pub fn tableau_descent(t: &[Vec<u32>]) -> Composition {
    tableau_reading(t).recoil_composition()
}

/// The dual immaculate function of shape `I` (1 for the empty composition).
pub fn dual_immaculate(i: &Composition, route: DualImmaculateRoute) -> Result<LinComb<QsymF>> {
    if i.is_empty() {
        return Ok(LinComb::basis(Composition::empty()));
    }
    match route {
        DualImmaculateRoute::BarCI => Ok(bar(&crate::bell::c_coefficient_qsym(i)?)),
        DualImmaculateRoute::GrinbergIterated => {
            let parts = i.parts();
            let single =
                |p: u32| LinComb::<QsymF>::basis(Composition::from_parts_unchecked(vec![p]));
            let mut acc = single(*parts.last().unwrap());
            for &p in parts.iter().rev().skip(1) {
                acc = half_product(&acc, &single(p), HalfProduct::SuccPrime)?;
            }
            Ok(acc)
        }
        DualImmaculateRoute::Tableaux => Ok(immaculate_tableaux(i)
            .iter()
            .map(|t| (tableau_descent(t), 1))
            .collect()),
    }
}
