//! Invariant suites: each check recomputes a quantity by two routes and
//! compares them exactly.

use std::fmt;

use serde::Serialize;

use crate::bell;
use crate::bellhopf;
use crate::composition::Composition;
use crate::fqsym::{self, Side};
use crate::freemod::{LinComb, F, G};
use crate::partition::SetPartition;
use crate::qpoly::QPoly;
use crate::qsym::{self, DualImmaculateRoute, HalfProduct};
use crate::word::Permutation;
use crate::wqsym::{self, PackedWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Bell,
    Dendriform,
    Dualimm,
    Hopf,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Bell => "bell",
            Suite::Dendriform => "dendriform",
            Suite::Dualimm => "dualimm",
            Suite::Hopf => "hopf",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    /// first counterexample when failed
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, suite: &'static str, name: impl Into<String>, result: Result<(), String>) {
        self.checks.push(Check {
            suite,
            name: name.into(),
            passed: result.is_ok(),
            detail: result.err(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} [{}] {}", c.suite, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, ": {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Degree bounds for the exhaustive loops.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_degree: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_degree: 6 }
    }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn all_of<T>(
    items: impl IntoIterator<Item = T>,
    mut f: impl FnMut(T) -> Result<(), String>,
) -> Result<(), String> {
    for x in items {
        f(x)?;
    }
    Ok(())
}

pub fn run(suite: Suite, bounds: Bounds) -> Report {
    let mut report = Report::default();
    if matches!(suite, Suite::All | Suite::Bell) {
        bell_suite(&mut report, bounds);
    }
    if matches!(suite, Suite::All | Suite::Dendriform) {
        dendriform_suite(&mut report, bounds);
    }
    if matches!(suite, Suite::All | Suite::Dualimm) {
        dualimm_suite(&mut report, bounds);
    }
    if matches!(suite, Suite::All | Suite::Hopf) {
        hopf_suite(&mut report, bounds);
    }
    report
}

fn bell_suite(r: &mut Report, b: Bounds) {
    let n = b.max_degree;
    r.push(
        "bell",
        format!("B'_n = mirror of B''_n, n <= {n}"),
        all_of(0..=n, |k| {
            ensure(
                bell::bell_prime(k) == bell::reverse_monomials(&bell::bell_double_prime(k)),
                || format!("n = {k}"),
            )
        }),
    );
    r.push(
        "bell",
        format!("B''_n counts set partitions by block sizes, n <= {n}"),
        all_of(1..=n, |k| {
            let mut counts = LinComb::zero();
            for pi in SetPartition::all(k) {
                counts.add_term(pi.k_sharp(), 1);
            }
            ensure(counts == bell::bell_double_prime(k), || format!("n = {k}"))
        }),
    );
    r.push(
        "bell",
        format!("q = 1 recovers the classical polynomials, n <= {n}"),
        all_of(0..=n, |k| {
            ensure(
                bell::bell_prime_q(k).map_coeffs(|p| p.eval(1)) == bell::bell_prime(k)
                    && bell::bell_double_prime_q(k).map_coeffs(|p| p.eval(1))
                        == bell::bell_double_prime(k),
                || format!("n = {k}"),
            )
        }),
    );
    r.push(
        "bell",
        format!("quasideterminant = recursion, n <= {n}"),
        all_of(1..=n, |k| {
            ensure(
                bell::quasideterminant_bell_q(k) == bell::bell_prime_q(k),
                || format!("n = {k}"),
            )
        }),
    );
    r.push(
        "bell",
        format!("coefficient product formula, |I| <= {}", n + 2),
        all_of(1..=n + 2, |k| {
            let bq = bell::bell_prime_q(k);
            all_of(Composition::all(k), |i| {
                ensure(bell::coefficient_formula_q(&i) == bq.coeff(&i), || {
                    format!("I = {i}")
                })
            })
        }),
    );
    r.push(
        "bell",
        format!("free Bell recursion = set-partition sum, n <= {n}"),
        all_of(0..=n, |k| {
            ensure(
                bell::free_bell(k) == bell::free_bell_partition_sum(k),
                || format!("n = {k}"),
            )
        }),
    );
    r.push(
        "bell",
        format!("(q)_n B_n(1/(1-q)) = B''_n(q), n <= {n}"),
        all_of(0..=n, |k| {
            let spec =
                bell::specialize_free_bell(&bell::free_bell(k)).map_err(|e| e.to_string())?;
            ensure(spec == bell::bell_double_prime_q(k), || format!("n = {k}"))
        }),
    );
    r.push(
        "bell",
        format!("hook length formula = specialization, |I| <= {n}"),
        all_of(1..=n, |k| {
            all_of(Composition::all(k), |i| {
                let hook = bell::hook_length_c(&i).map_err(|e| e.to_string())?;
                let spec = bell::c_coefficient_qpoly(&i).map_err(|e| e.to_string())?;
                ensure(hook == spec, || format!("I = {i}: {hook} vs {spec}"))
            })
        }),
    );
    r.push(
        "bell",
        format!("C_I(X) are linearly independent, n <= {n}"),
        all_of(1..=n, |k| {
            let comps = Composition::all(k);
            let rows: Vec<Vec<i64>> = comps
                .iter()
                .map(|i| {
                    let x = bell::c_coefficient_qsym(i).expect("nonempty");
                    comps.iter().map(|j| x.coeff(j)).collect()
                })
                .collect();
            ensure(integer_rank(rows) == comps.len(), || format!("n = {k}"))
        }),
    );
}

/// Rank over the rationals by fraction-free elimination.
pub fn integer_rank(mut m: Vec<Vec<i64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            let (a, b) = (m[rank][c] as i128, m[i][c] as i128);
            if b == 0 {
                continue;
            }
            for j in c..cols {
                let v = a * m[i][j] as i128 - b * m[rank][j] as i128;
                m[i][j] = v as i64;
            }
            let g = m[i].iter().fold(0i64, |g, &x| gcd(g, x.abs()));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn perms_up_to(n: usize) -> Vec<Permutation> {
    (1..=n).flat_map(Permutation::all).collect()
}

fn dendriform_suite(r: &mut Report, b: Bounds) {
    let n = b.max_degree;
    let perms = perms_up_to(n);
    let basis_g = |p: &Permutation| LinComb::<G>::basis(p.clone());
    let basis_f = |p: &Permutation| LinComb::<F>::basis(p.clone());

    r.push(
        "dendriform",
        format!("splitting identities, total degree <= {n}"),
        all_of(
            perms
                .iter()
                .flat_map(|x| perms.iter().map(move |y| (x, y)))
                .filter(|(x, y)| x.len() + y.len() <= n),
            |(x, y)| {
                let (gx, gy) = (basis_g(x), basis_g(y));
                let g_ok = &fqsym::dendriform_g(&gx, &gy, Side::Left).unwrap()
                    + &fqsym::dendriform_g(&gx, &gy, Side::Right).unwrap()
                    == fqsym::g_product(&gx, &gy);
                let (fx, fy) = (basis_f(x), basis_f(y));
                let prod = fqsym::f_product(&fx, &fy);
                let f_ok = &fqsym::dendriform_f(&fx, &fy, Side::Left).unwrap()
                    + &fqsym::dendriform_f(&fx, &fy, Side::Right).unwrap()
                    == prod;
                let fp_ok = &fqsym::dendriform_f_primed(&fx, &fy, Side::Left).unwrap()
                    + &fqsym::dendriform_f_primed(&fx, &fy, Side::Right).unwrap()
                    == prod;
                let (u, v) = (PackedWord::pack(x.values()), PackedWord::pack(y.values()));
                let w_ok = &wqsym::tridendriform_left_min(&u, &v).unwrap()
                    + &wqsym::tridendriform_right_min(&u, &v).unwrap()
                    == wqsym::m_convolution(&u, &v);
                ensure(g_ok && f_ok && fp_ok && w_ok, || format!("{x}, {y}"))
            },
        ),
    );

    let triples: Vec<(&Permutation, &Permutation, &Permutation)> = perms
        .iter()
        .flat_map(|x| perms.iter().map(move |y| (x, y)))
        .flat_map(|(x, y)| perms.iter().map(move |z| (x, y, z)))
        .filter(|(x, y, z)| x.len() + y.len() + z.len() <= n)
        .collect();
    r.push(
        "dendriform",
        format!("dendriform axioms on G, total degree <= {n}"),
        all_of(triples, |(x, y, z)| {
            let (x, y, z) = (basis_g(x), basis_g(y), basis_g(z));
            let prec =
                |a: &LinComb<G>, b: &LinComb<G>| fqsym::dendriform_g(a, b, Side::Left).unwrap();
            let succ =
                |a: &LinComb<G>, b: &LinComb<G>| fqsym::dendriform_g(a, b, Side::Right).unwrap();
            let ok1 = prec(&prec(&x, &y), &z) == prec(&x, &fqsym::g_product(&y, &z));
            let ok2 = prec(&succ(&x, &y), &z) == succ(&x, &prec(&y, &z));
            let ok3 = succ(&fqsym::g_product(&x, &y), &z) == succ(&x, &succ(&y, &z));
            ensure(ok1 && ok2 && ok3, || format!("{x}, {y}, {z}"))
        }),
    );

    let comps: Vec<Composition> = (1..=n).flat_map(Composition::all).collect();
    let pairs: Vec<(&Composition, &Composition)> = comps
        .iter()
        .flat_map(|i| comps.iter().map(move |j| (i, j)))
        .filter(|(i, j)| i.weight() + j.weight() <= n)
        .collect();
    for kind in HalfProduct::ALL {
        r.push(
            "dendriform",
            format!("QSym {kind:?}: closed formula = lift, weight <= {n}"),
            all_of(&pairs, |&(i, j)| {
                let (a, bb) = (LinComb::basis(i.clone()), LinComb::basis(j.clone()));
                let closed = qsym::half_product::<i64>(&a, &bb, kind).map_err(|e| e.to_string())?;
                let lifted =
                    qsym::half_product_via_lift(&a, &bb, kind).map_err(|e| e.to_string())?;
                ensure(closed == lifted, || format!("{i}, {j}"))
            }),
        );
    }
    r.push(
        "dendriform",
        format!("Grinberg product through WQSym, weight <= {n}"),
        all_of(&pairs, |&(i, j)| {
            let (a, bb) = (LinComb::basis(i.clone()), LinComb::basis(j.clone()));
            let via = qsym::grinberg_prec_via_wqsym::<i64>(&a, &bb).map_err(|e| e.to_string())?;
            let closed =
                qsym::half_product(&a, &bb, HalfProduct::PrecG).map_err(|e| e.to_string())?;
            ensure(via == closed, || format!("{i}, {j}"))
        }),
    );
    r.push(
        "dendriform",
        format!("f <' g through f(X - Y), weight <= {n}"),
        all_of(&pairs, |&(i, j)| {
            let (a, bb) = (
                LinComb::<_, i64>::basis(i.clone()),
                LinComb::basis(j.clone()),
            );
            let closed =
                qsym::half_product(&a, &bb, HalfProduct::PrecPrime).map_err(|e| e.to_string())?;
            ensure(qsym::prec_prime_via_xy(&a, &bb) == closed, || {
                format!("{i}, {j}")
            })
        }),
    );
}

fn dualimm_suite(r: &mut Report, b: Bounds) {
    let n = b.max_degree + 1;
    r.push(
        "dualimm",
        format!("three dual immaculate routes agree, |I| <= {n}"),
        all_of(1..=n, |k| {
            all_of(Composition::all(k), |i| {
                let results: Vec<_> = DualImmaculateRoute::ALL
                    .iter()
                    .map(|&route| qsym::dual_immaculate(&i, route).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?;
                ensure(results.windows(2).all(|w| w[0] == w[1]), || {
                    format!("I = {i}")
                })
            })
        }),
    );
    r.push(
        "dualimm",
        format!("bar of the dual immaculate is C_I(X), |I| <= {n}"),
        all_of(1..=n, |k| {
            all_of(Composition::all(k), |i| {
                let d = qsym::dual_immaculate(&i, DualImmaculateRoute::Tableaux)
                    .map_err(|e| e.to_string())?;
                let c = bell::c_coefficient_qsym(&i).map_err(|e| e.to_string())?;
                ensure(qsym::bar(&d) == c, || format!("I = {i}"))
            })
        }),
    );
}

fn hopf_suite(r: &mut Report, b: Bounds) {
    let n = b.max_degree;
    let all_classes: Vec<Vec<bellhopf::BellClass>> =
        (0..=n.min(7)).map(bellhopf::bell_classes).collect();
    r.push(
        "hopf",
        format!("class counts are Bell numbers, n <= {}", n.min(7)),
        all_of(1..all_classes.len(), |k| {
            ensure(all_classes[k].len() == SetPartition::all(k).len(), || {
                format!("n = {k}")
            })
        }),
    );
    r.push(
        "hopf",
        "classes are weak order intervals",
        all_of(1..all_classes.len(), |k| {
            ensure(bellhopf::classes_are_intervals(k, &all_classes[k]), || {
                format!("n = {k}")
            })
        }),
    );
    r.push(
        "hopf",
        "class maxima are the 21-3 avoiders",
        all_of(1..all_classes.len(), |k| {
            let mut maxima: Vec<Permutation> =
                all_classes[k].iter().map(|c| c.max.clone()).collect();
            maxima.sort();
            let avoiders: Vec<Permutation> =
                Permutation::all(k).filter(bellhopf::avoids_21_3).collect();
            ensure(maxima == avoiders, || format!("n = {k}"))
        }),
    );
    r.push(
        "hopf",
        "classes are linear extensions of regular posets",
        all_of(1..all_classes.len(), |k| {
            all_of(&all_classes[k], |c| {
                let p = bellhopf::bell_poset(&c.columns);
                ensure(
                    bellhopf::linear_extensions(&p) == c.members && bellhopf::regularity_check(&p),
                    || format!("class {}", c.partition),
                )
            })
        }),
    );
    let parts: Vec<SetPartition> = (0..=n).flat_map(SetPartition::all).collect();
    r.push(
        "hopf",
        format!("P basis product closure, total size <= {n}"),
        all_of(
            parts
                .iter()
                .flat_map(|x| parts.iter().map(move |y| (x, y)))
                .filter(|(x, y)| x.size() + y.size() <= n),
            |(x, y)| {
                bellhopf::p_basis_product(x, y)
                    .map(|_| ())
                    .map_err(|e| e.to_string())
            },
        ),
    );
    let m = n.saturating_sub(1);
    r.push(
        "hopf",
        format!("P basis coproduct closure, n <= {m}"),
        all_of(parts.iter().filter(|x| x.size() <= m), |x| {
            bellhopf::p_basis_coproduct(x)
                .map(|_| ())
                .map_err(|e| e.to_string())
        }),
    );
}

/// Sum of `q^inv` over a set of permutations.
pub fn inversion_polynomial<'a>(perms: impl IntoIterator<Item = &'a Permutation>) -> QPoly {
    let mut out = QPoly::zero();
    for p in perms {
        out += &QPoly::monomial(1, p.inv());
    }
    out
}
