//! The Bell congruence on permutations, its insertion algorithm and posets,
//! and the basis `P_pi` of the Hopf subalgebra it spans in FQSym.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fqsym;
use crate::freemod::{LinComb, Tensor2, F, P};
use crate::partition::SetPartition;
use crate::word::{parse_letters, DashedPattern, Permutation};

/// A set partition laid out as columns: each column increasing, column
/// maxima decreasing from left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColumnPartition {
    columns: Vec<Vec<u32>>,
}

impl ColumnPartition {
    pub fn new(columns: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidColumnPartition(format!("{columns:?}: {why}")));
        let mut seen = BTreeSet::new();
        for col in &columns {
            if col.is_empty() {
                return bad("empty column");
            }
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return bad("column not increasing");
            }
            for &x in col {
                if x == 0 || !seen.insert(x) {
                    return bad("zero or repeated element");
                }
            }
        }
        if columns.windows(2).any(|w| w[0].last() <= w[1].last()) {
            return bad("maxima not decreasing");
        }
        Ok(ColumnPartition { columns })
    }

    /// The column layout of a set partition.
    pub fn from_set_partition(pi: &SetPartition) -> Self {
        ColumnPartition {
            columns: pi.flat_order(),
        }
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_set_partition(&self) -> SetPartition {
        SetPartition::new(self.columns.clone()).expect("columns are disjoint")
    }
}

impl fmt::Display for ColumnPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.columns.iter().flatten().any(|&x| x > 9);
        for (i, col) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in col.iter().enumerate() {
                if wide && j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ColumnPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ColumnPartition::default());
        }
        ColumnPartition::new(s.split('|').map(parse_letters).collect::<Result<_>>()?)
    }
}

/// Modified patience sorting: each letter goes to the bottom of the column
/// with the largest maximum below it, or starts a new column on the right.
pub fn psa_insert(w: &[u32]) -> Result<ColumnPartition> {
    let mut columns: Vec<Vec<u32>> = Vec::new();
    let mut seen = BTreeSet::new();
    for &x in w {
        if !seen.insert(x) {
            return Err(Error::RepeatedLetter(x));
        }
        // maxima decrease, so the first column with a smaller maximum wins
        match columns.iter_mut().find(|c| *c.last().unwrap() < x) {
            Some(col) => col.push(x),
            None => columns.push(vec![x]),
        }
    }
    Ok(ColumnPartition { columns })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    /// consecutive elements of a column
    Column,
    /// from the column immediately to the left
    Cross,
}

/// The poset `P(S)` on the elements of a column partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellPoset {
    elements: Vec<u32>,
    /// `less[i][j]`: `elements[i] <_P elements[j]`
    less: Vec<Vec<bool>>,
    hasse: Vec<(u32, u32, EdgeKind)>,
}

impl BellPoset {
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    fn index(&self, x: u32) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// `x <_P y`.
    pub fn less(&self, x: u32, y: u32) -> bool {
        match (self.index(x), self.index(y)) {
            (Some(i), Some(j)) => self.less[i][j],
            _ => false,
        }
    }

    /// Covering relations `(lower, upper, kind)`, lower meaning smaller in `P`.
    pub fn hasse(&self) -> &[(u32, u32, EdgeKind)] {
        &self.hasse
    }

    pub fn minimal_elements(&self) -> Vec<u32> {
        let n = self.elements.len();
        (0..n)
            .filter(|&j| (0..n).all(|i| !self.less[i][j]))
            .map(|j| self.elements[j])
            .collect()
    }

    /// Graphviz rendering with minimal elements on top, column edges solid
    /// and cross edges dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from(
            "digraph P {\n  rankdir=TB;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n",
        );
        for x in &self.elements {
            out.push_str(&format!("  {x};\n"));
        }
        for &(a, b, kind) in &self.hasse {
            match kind {
                EdgeKind::Column => out.push_str(&format!("  {a} -> {b};\n")),
                EdgeKind::Cross => out.push_str(&format!("  {a} -> {b} [style=dashed];\n")),
            }
        }
        out.push_str("}\n");
        out
    }
}

/// `x >_P x'` for the element `x'` just above `x` in its column, and
/// `x >_P x''` for the smallest `x'' > x` in the column to the left.
pub fn bell_poset(s: &ColumnPartition) -> BellPoset {
    let mut elements: Vec<u32> = s.columns.iter().flatten().copied().collect();
    elements.sort_unstable();
    let n = elements.len();
    let idx = |x: u32| elements.binary_search(&x).unwrap();
    let mut generators: BTreeMap<(usize, usize), EdgeKind> = BTreeMap::new();
    for (c, col) in s.columns.iter().enumerate() {
        for (r, &x) in col.iter().enumerate() {
            if r > 0 {
                generators.insert((idx(col[r - 1]), idx(x)), EdgeKind::Column);
            }
            if c > 0 {
                if let Some(&above) = s.columns[c - 1].iter().find(|&&y| y > x) {
                    generators
                        .entry((idx(above), idx(x)))
                        .or_insert(EdgeKind::Cross);
                }
            }
        }
    }
    let mut less = vec![vec![false; n]; n];
    for &(i, j) in generators.keys() {
        less[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if less[i][k] {
                for j in 0..n {
                    if less[k][j] {
                        less[i][j] = true;
                    }
                }
            }
        }
    }
    let hasse = generators
        .iter()
        .filter(|&(&(i, j), _)| !(0..n).any(|k| less[i][k] && less[k][j]))
        .map(|(&(i, j), &kind)| (elements[i], elements[j], kind))
        .collect();
    BellPoset {
        elements,
        less,
        hasse,
    }
}

/// All linear extensions, each read from the minimal elements down.
pub fn linear_extensions(p: &BellPoset) -> Vec<Permutation> {
    fn go(p: &BellPoset, placed: &mut Vec<bool>, word: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        let n = p.elements.len();
        if word.len() == n {
            out.push(Permutation::from_vec_unchecked(word.clone()));
            return;
        }
        for j in 0..n {
            if !placed[j] && (0..n).all(|i| placed[i] || !p.less[i][j]) {
                placed[j] = true;
                word.push(p.elements[j]);
                go(p, placed, word, out);
                word.pop();
                placed[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        p,
        &mut vec![false; p.elements.len()],
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    out
}

/// The linear extension choosing the largest available value at each step.
pub fn greedy_max_extension(p: &BellPoset) -> Permutation {
    let n = p.elements.len();
    let mut placed = vec![false; n];
    let mut word = Vec::with_capacity(n);
    for _ in 0..n {
        let j = (0..n)
            .rev()
            .find(|&j| !placed[j] && (0..n).all(|i| placed[i] || !p.less[i][j]))
            .expect("acyclic");
        placed[j] = true;
        word.push(p.elements[j]);
    }
    Permutation::from_vec_unchecked(word)
}

/// For every `x <_P z` and every `y` strictly between `x` and `z` in value,
/// `x <_P y` or `y <_P z`.
pub fn regularity_check(p: &BellPoset) -> bool {
    let e = &p.elements;
    let n = e.len();
    for i in 0..n {
        for k in 0..n {
            if !p.less[i][k] {
                continue;
            }
            let (lo, hi) = (e[i].min(e[k]), e[i].max(e[k]));
            for j in 0..n {
                if e[j] > lo && e[j] < hi && !p.less[i][j] && !p.less[j][k] {
                    return false;
                }
            }
        }
    }
    true
}

/// Words reachable by one application of `b u c a = b u a c`
/// (`a < b < c`, all letters of `u` below `b`), in either direction.
pub fn bell_rewrite_neighbors(w: &Permutation) -> BTreeSet<Permutation> {
    let v = w.values();
    let mut out = BTreeSet::new();
    for j in 0..v.len().saturating_sub(1) {
        let (lo, hi) = (v[j].min(v[j + 1]), v[j].max(v[j + 1]));
        // look left for a letter b with lo < b < hi, passing only smaller letters
        let mut top = 0;
        for i in (0..j).rev() {
            let b = v[i];
            if b > lo && b < hi && top < b {
                let mut x = v.to_vec();
                x.swap(j, j + 1);
                out.insert(Permutation::from_vec_unchecked(x));
                break;
            }
            top = top.max(b);
        }
    }
    out
}

/// Words reachable by one application of `b c u = b u c` (`b < c`, all
/// letters of `u` below `b`, `u` nonempty), in either direction.
pub fn alternative_rewrite_neighbors(w: &Permutation) -> BTreeSet<Permutation> {
    let v = w.values();
    let n = v.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        let b = v[i];
        // b c u -> b u c
        if i + 1 < n && v[i + 1] > b {
            for end in i + 2..n {
                if v[end] > b {
                    break;
                }
                let mut x = v[..=i].to_vec();
                x.extend(&v[i + 2..=end]);
                x.push(v[i + 1]);
                x.extend(&v[end + 1..]);
                out.insert(Permutation::from_vec_unchecked(x));
            }
        }
        // b u c -> b c u
        for end in i + 1..n {
            if v[end] > b {
                if end > i + 1 {
                    let mut x = v[..=i].to_vec();
                    x.push(v[end]);
                    x.extend(&v[i + 1..end]);
                    x.extend(&v[end + 1..]);
                    out.insert(Permutation::from_vec_unchecked(x));
                }
                break;
            }
        }
    }
    out
}

/// Equivalence class of `w` under the closure of `step`.
pub fn rewriting_closure(
    w: &Permutation,
    step: impl Fn(&Permutation) -> BTreeSet<Permutation>,
) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in step(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// One Bell class of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellClass {
    pub partition: SetPartition,
    pub columns: ColumnPartition,
    /// sorted
    pub members: Vec<Permutation>,
    pub min: Permutation,
    pub max: Permutation,
}

impl BellClass {
    fn from_members(columns: ColumnPartition, mut members: Vec<Permutation>) -> Self {
        members.sort();
        let min = members.iter().min_by_key(|p| p.inv()).unwrap().clone();
        let max = members.iter().max_by_key(|p| p.inv()).unwrap().clone();
        BellClass {
            partition: columns.to_set_partition(),
            columns,
            members,
            min,
            max,
        }
    }
}

/// The members of the class indexed by `pi`: linear extensions of its poset.
pub fn class_of(pi: &SetPartition) -> Result<Vec<Permutation>> {
    pi.require_canonical()?;
    Ok(linear_extensions(&bell_poset(
        &ColumnPartition::from_set_partition(pi),
    )))
}

/// Classes of `S_n`, grouped by insertion and ordered by partition string.
pub fn bell_classes(n: usize) -> Vec<BellClass> {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let tagged: Vec<(ColumnPartition, Permutation)> = perms
        .into_par_iter()
        .map(|p| (psa_insert(p.values()).expect("distinct letters"), p))
        .collect();
    let mut groups: BTreeMap<ColumnPartition, Vec<Permutation>> = BTreeMap::new();
    for (s, p) in tagged {
        groups.entry(s).or_default().push(p);
    }
    let mut out: Vec<BellClass> = groups
        .into_iter()
        .map(|(s, members)| BellClass::from_members(s, members))
        .collect();
    out.sort_by_key(|c| c.partition.to_string());
    out
}

/// Value-pair inversions `(a, b)`, `a < b`, `b` before `a`, as a bitmask.
pub fn inversion_mask(p: &Permutation) -> u64 {
    let v = p.values();
    let n = v.len();
    assert!(n <= 11, "inversion masks hold at most 55 pairs");
    let mut pos = vec![0usize; n + 1];
    for (i, &x) in v.iter().enumerate() {
        pos[x as usize] = i;
    }
    let mut mask = 0u64;
    let mut bit = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            if pos[b] < pos[a] {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// True when every class equals the right weak order interval `[min, max]`.
pub fn classes_are_intervals(n: usize, classes: &[BellClass]) -> bool {
    let bounds: Vec<(u64, u64)> = classes
        .iter()
        .map(|c| (inversion_mask(&c.min), inversion_mask(&c.max)))
        .collect();
    let members: Vec<BTreeSet<&Permutation>> =
        classes.iter().map(|c| c.members.iter().collect()).collect();
    Permutation::all(n).collect::<Vec<_>>().par_iter().all(|p| {
        let m = inversion_mask(p);
        bounds.iter().zip(&members).all(|(&(lo, hi), set)| {
            let inside = lo & m == lo && m & hi == m;
            inside == set.contains(p)
        })
    })
}

/// `P_pi = sum of F_sigma over the class of pi`.
pub fn p_basis(pi: &SetPartition) -> Result<LinComb<F>> {
    Ok(LinComb::from_keys(class_of(pi)?))
}

fn class_key(sigma: &Permutation) -> SetPartition {
    psa_insert(sigma.values())
        .expect("permutation")
        .to_set_partition()
}

/// Rewrites an F-expansion on the P basis, failing unless its support is
/// a union of complete classes with constant coefficients.
pub fn regroup(a: &LinComb<F>) -> Result<LinComb<P>> {
    let mut rest = a.clone();
    let mut out = LinComb::zero();
    loop {
        let Some((sigma, c)) = rest.iter().next().map(|(k, &c)| (k.clone(), c)) else {
            break;
        };
        let pi = class_key(&sigma);
        for member in class_of(&pi)? {
            if rest.coeff(&member) != c {
                return Err(Error::ClosureViolated(format!(
                    "{member} has coefficient {} in class {pi} where {sigma} has {c}",
                    rest.coeff(&member)
                )));
            }
            rest.add_term(member, -c);
        }
        out.add_term(pi, c);
    }
    Ok(out)
}

fn expand(a: &LinComb<P>) -> Result<LinComb<F>> {
    a.try_map_linear(p_basis)
}

/// `P_pi P_tau`, regrouped on the P basis.
pub fn p_basis_product(pi: &SetPartition, tau: &SetPartition) -> Result<LinComb<P>> {
    regroup(&fqsym::f_product(&p_basis(pi)?, &p_basis(tau)?))
}

/// Coproduct of `P_pi`, each tensor leg regrouped on the P basis.
pub fn p_basis_coproduct(pi: &SetPartition) -> Result<Tensor2<P, P>> {
    let mut rest = fqsym::coproduct_f(&p_basis(pi)?);
    let mut out = Tensor2::zero();
    loop {
        let Some((l, r, c)) = rest
            .iter()
            .next()
            .map(|(l, r, &c)| (l.clone(), r.clone(), c))
        else {
            break;
        };
        let (lp, rp) = (class_key(&l), class_key(&r));
        let (lclass, rclass) = (class_of(&lp)?, class_of(&rp)?);
        for x in &lclass {
            for y in &rclass {
                if rest.coeff(x, y) != c {
                    return Err(Error::ClosureViolated(format!(
                        "{x} (x) {y} breaks the class pair {lp} (x) {rp}"
                    )));
                }
                rest.add_term(x.clone(), y.clone(), -c);
            }
        }
        out.add_term(lp, rp, c);
    }
    Ok(out)
}

/// Expands a P-basis element back to the F basis.
pub fn p_to_f(a: &LinComb<P>) -> Result<LinComb<F>> {
    expand(a)
}

/// True when `sigma` avoids the dashed pattern 21-3.
pub fn avoids_21_3(sigma: &Permutation) -> bool {
    sigma.avoids(DashedPattern::TwoOneDashThree)
}
