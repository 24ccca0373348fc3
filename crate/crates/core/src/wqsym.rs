//! Packed words and the M basis of WQSym.

use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::freemod::{Coeff, LinComb, QsymM, WqsymM};
use crate::word::{parse_letters, write_letters};

/// A word whose set of letters is exactly `{1..m}` for some `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PackedWord(Vec<u32>);

impl PackedWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let m = letters.iter().copied().max().unwrap_or(0) as usize;
        let mut seen = vec![false; m + 1];
        for &x in &letters {
            if x == 0 {
                return Err(Error::InvalidPackedWord(format!("{letters:?} contains 0")));
            }
            seen[x as usize] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidPackedWord(format!(
                "{letters:?} skips a value"
            )));
        }
        Ok(PackedWord(letters))
    }

    /// Order-preserving relabeling of the letters onto `{1..m}`.
    pub fn pack(w: &[u32]) -> PackedWord {
        let mut values: Vec<u32> = w.to_vec();
        values.sort_unstable();
        values.dedup();
        PackedWord(
            w.iter()
                .map(|x| values.binary_search(x).unwrap() as u32 + 1)
                .collect(),
        )
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The largest letter (0 for the empty word).
    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Multiplicities of `1, 2, ..., m`.
    pub fn evaluation(&self) -> Composition {
        let mut counts = vec![0u32; self.max_letter() as usize];
        for &x in &self.0 {
            counts[x as usize - 1] += 1;
        }
        Composition::from_parts_unchecked(counts)
    }

    /// The nondecreasing packed word of evaluation `ev`.
    pub fn canonical(ev: &Composition) -> PackedWord {
        PackedWord(
            ev.parts()
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| std::iter::repeat_n(i as u32 + 1, p as usize))
                .collect(),
        )
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl FromStr for PackedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PackedWord::new(parse_letters(s)?)
    }
}

/// Which part of the convolution to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    All,
    /// letter 1 only in the prefix
    MinLeft,
    /// letter 1 in the suffix
    MinRight,
}

fn bits(mask: u64) -> Vec<u32> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

fn convolution(u: &PackedWord, v: &PackedWord, part: Part) -> Vec<PackedWord> {
    let (a, b) = (u.max_letter() as usize, v.max_letter() as usize);
    let mut out = Vec::new();
    for m in a.max(b)..=a + b {
        let full: u64 = (1u64 << m) - 1;
        for amask in 0..=full {
            if amask.count_ones() as usize != a {
                continue;
            }
            let rest = full & !amask;
            // B is the complement of A plus some letters of A
            let shared_needed = b - rest.count_ones() as usize;
            let shared_pool = bits(amask);
            for shared in subsets_of_size(&shared_pool, shared_needed) {
                let bmask = shared.iter().fold(rest, |acc, &x| acc | 1 << (x - 1));
                let keep = match part {
                    Part::All => true,
                    Part::MinLeft => amask & 1 == 1 && bmask & 1 == 0,
                    Part::MinRight => bmask & 1 == 1,
                };
                if !keep {
                    continue;
                }
                let av = bits(amask);
                let bv = bits(bmask);
                let mut w: Vec<u32> = u.0.iter().map(|&x| av[x as usize - 1]).collect();
                w.extend(v.0.iter().map(|&x| bv[x as usize - 1]));
                out.push(PackedWord(w));
            }
        }
    }
    out
}

fn subsets_of_size(pool: &[u32], k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if pool.len() < k {
        return Vec::new();
    }
    let mut out = subsets_of_size(&pool[1..], k);
    for mut s in subsets_of_size(&pool[1..], k - 1) {
        s.insert(0, pool[0]);
        out.push(s);
    }
    out
}

fn require_nonempty(u: &PackedWord, v: &PackedWord) -> Result<()> {
    if u.is_empty() || v.is_empty() {
        Err(Error::EmptyDendriform)
    } else {
        Ok(())
    }
}

/// `M_u M_v`: packed words whose prefix packs to `u` and suffix packs to `v`.
pub fn m_convolution(u: &PackedWord, v: &PackedWord) -> LinComb<WqsymM> {
    LinComb::from_keys(convolution(u, v, Part::All))
}

/// `M_u <' M_v`: the terms where the letter 1 occurs in the prefix only.
pub fn tridendriform_left_min(u: &PackedWord, v: &PackedWord) -> Result<LinComb<WqsymM>> {
    require_nonempty(u, v)?;
    Ok(LinComb::from_keys(convolution(u, v, Part::MinLeft)))
}

/// `M_u >' M_v`: the terms where the letter 1 occurs in the suffix.
pub fn tridendriform_right_min(u: &PackedWord, v: &PackedWord) -> Result<LinComb<WqsymM>> {
    require_nonempty(u, v)?;
    Ok(LinComb::from_keys(convolution(u, v, Part::MinRight)))
}

/// Bilinear extension of [`tridendriform_left_min`].
pub fn prec_prime<C: Coeff>(
    a: &LinComb<WqsymM, C>,
    b: &LinComb<WqsymM, C>,
) -> Result<LinComb<WqsymM, C>> {
    a.try_bilinear(b, |u, v| {
        Ok(tridendriform_left_min(u, v)?.map_coeffs(|&c| C::from_i64(c)))
    })
}

/// `M_u -> M_{ev(u)}`.
pub fn project_wqsym_to_qsym<C: Coeff>(a: &LinComb<WqsymM, C>) -> LinComb<QsymM, C> {
    a.map_keys(PackedWord::evaluation)
}
