//! Integer compositions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u32>);

/// How a composition `J` splits as `H K` or `H |> K` (see [`Composition::decompositions`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Split {
    Concat,
    NearConcat,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parts in reverse order.
    pub fn mirror(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Descent set `{i_1, i_1+i_2, ...}` (all partial sums but the last).
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// The composition of `n` with the given (strictly increasing) descent set.
    pub fn from_descent_set(n: usize, set: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &d in set {
            if d <= prev || d >= n {
                return Err(Error::InvalidComposition(format!(
                    "descent set {set:?} is not a subset of 1..{n}"
                )));
            }
            parts.push((d - prev) as u32);
            prev = d;
        }
        if n > 0 {
            parts.push((n - prev) as u32);
        }
        Ok(Composition(parts))
    }

    /// Ribbon conjugate: complement of the descent set, then mirror.
    ///
    /// This is the descent composition of the mirror image of any word with
    /// descent composition `self`.
    pub fn conjugate(&self) -> Composition {
        let n = self.weight();
        if n == 0 {
            return Composition::empty();
        }
        let d = self.descent_set();
        let comp: Vec<usize> = (1..n).filter(|i| !d.contains(i)).collect();
        let mirrored: Vec<usize> = comp.iter().rev().map(|&i| n - i).collect();
        Composition::from_descent_set(n, &mirrored).expect("valid descent set")
    }

    /// Sum of the descent positions.
    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Concatenation `I . J`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// Near-concatenation `I |> J`: the last part of `I` merged with the first of `J`.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyNearConcat);
        }
        let mut v = self.0.clone();
        *v.last_mut().unwrap() += other.0[0];
        v.extend_from_slice(&other.0[1..]);
        Ok(Composition(v))
    }

    /// Near-concatenation where an empty side acts as the identity.
    pub(crate) fn near_concat_unital(&self, other: &Composition) -> Composition {
        if self.is_empty() {
            other.clone()
        } else if other.is_empty() {
            self.clone()
        } else {
            self.near_concat(other).expect("both nonempty")
        }
    }

    /// All `(H, K, split)` with `self = H K` (`H`, `K` possibly empty) or
    /// `self = H |> K` (`H`, `K` nonempty).
    pub fn decompositions(&self) -> Vec<(Composition, Composition, Split)> {
        let r = self.0.len();
        let mut out = Vec::new();
        for cut in 0..=r {
            out.push((
                Composition(self.0[..cut].to_vec()),
                Composition(self.0[cut..].to_vec()),
                Split::Concat,
            ));
        }
        for (idx, &p) in self.0.iter().enumerate() {
            for left in 1..p {
                let mut h = self.0[..idx].to_vec();
                h.push(left);
                let mut k = vec![p - left];
                k.extend_from_slice(&self.0[idx + 1..]);
                out.push((Composition(h), Composition(k), Split::NearConcat));
            }
        }
        out
    }

    /// All compositions `J` refining `self` (including `self`).
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &p in &self.0 {
            let pieces = Composition::all(p as usize);
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    pieces.iter().map(move |c| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(&c.0);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Composition).collect()
    }

    /// All compositions of `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out = Vec::with_capacity(1 << (n - 1));
        for mask in 0..(1usize << (n - 1)) {
            let set: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            out.push(Composition::from_descent_set(n, &set).unwrap());
        }
        out.sort();
        out
    }

    /// Compact label used in monomials: `221` when all parts are digits,
    /// `(10,2)` otherwise.
    pub fn compact(&self) -> String {
        if self.0.iter().all(|&p| p <= 9) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `(2,2,1)`, `2,2,1` and the digit string `221`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = crate::word::parse_letters(s)
            .map_err(|_| Error::InvalidComposition(format!("cannot parse '{s}'")))?;
        Composition::new(parts)
    }
}
