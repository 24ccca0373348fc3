//! Words and permutations over the alphabet of positive integers.

use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};

/// A word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidWord(format!(
                "{letters:?} contains the letter 0"
            )));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The mirror image (letters read right to left).
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn standardize(&self) -> Permutation {
        standardize(&self.0)
    }

    pub fn descent_composition(&self) -> Composition {
        descent_composition_of(&self.0)
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Self {
        Word(p.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s)?)
    }
}

/// Digit strings when every letter is a single digit, comma separated otherwise.
pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    if letters.iter().all(|&x| x <= 9) {
        for x in letters {
            write!(f, "{x}")?;
        }
    } else {
        for (i, x) in letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
    }
    Ok(())
}

pub(crate) fn parse_letters(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s);
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') || s.contains(' ') {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad letter '{t}' in '{s}'")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad letter '{c}' in '{s}'")))
            })
            .collect()
    }
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// The longest element `n n-1 ... 1`.
    pub fn reversal(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    /// Values shifted up by `k`, as a word.
    pub fn shifted(&self, k: u32) -> Vec<u32> {
        self.0.iter().map(|&v| v + k).collect()
    }

    pub fn descent_composition(&self) -> Composition {
        descent_composition_of(&self.0)
    }

    /// Descent composition of the inverse.
    pub fn recoil_composition(&self) -> Composition {
        self.inverse().descent_composition()
    }

    /// Number of inversions.
    pub fn inv(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Inversions as value pairs `(smaller, larger)` with the larger value
    /// occurring first.
    pub fn inversion_set(&self) -> Vec<(u32, u32)> {
        let v = &self.0;
        let mut out = Vec::new();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    out.push((v[j], v[i]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Schützenberger involution `w p w`: complement the values, then reverse.
    pub fn schutzenberger(&self) -> Permutation {
        let n = self.0.len() as u32;
        Permutation(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }

    pub fn avoids(&self, pattern: DashedPattern) -> bool {
        avoids_dashed(&self.0, pattern)
    }

    /// Lexicographic successor, or `None` for the last permutation.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut v = self.0.clone();
        let i = (1..v.len()).rev().find(|&i| v[i - 1] < v[i])?;
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1])?;
        v.swap(i - 1, j);
        v[i..].reverse();
        Some(Permutation(v))
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        std::iter::successors(Some(Permutation::identity(n)), |p| p.next_lex())
    }
}

impl AsRef<[u32]> for Permutation {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_letters(s)?)
    }
}

/// The unique permutation with the same inversions as `w`; equal letters are
/// numbered left to right.
pub fn standardize(w: &[u32]) -> Permutation {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation(out)
}

/// Composition of `n = |w|` whose partial sums are the descents `w_i > w_{i+1}`.
pub fn descent_composition_of(w: &[u32]) -> Composition {
    let mut parts = Vec::new();
    let mut run = 0;
    for i in 0..w.len() {
        run += 1;
        if i + 1 == w.len() || w[i] > w[i + 1] {
            parts.push(run);
            run = 0;
        }
    }
    Composition::from_parts_unchecked(parts)
}

/// All interleavings of `u` and `v`, with multiplicity.
pub fn shuffle(u: &[u32], v: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    shuffle_into(u, v, &mut buf, &mut out);
    out
}

fn shuffle_into(u: &[u32], v: &[u32], buf: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if u.is_empty() || v.is_empty() {
        let mut w = buf.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        out.push(w);
        return;
    }
    buf.push(u[0]);
    shuffle_into(&u[1..], v, buf, out);
    buf.pop();
    buf.push(v[0]);
    shuffle_into(u, &v[1..], buf, out);
    buf.pop();
}

/// The four half-shuffles.
///
/// `Prec`/`Succ` split the shuffle by the origin of the last letter,
/// `PrecPrime`/`SuccPrime` by the origin of the first letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HalfShuffle {
    /// `ua < vb = (u sh vb) a`
    Prec,
    /// `ua > vb = (ua sh v) b`
    Succ,
    /// `au <' bv = a (u sh bv)`
    PrecPrime,
    /// `au >' bv = b (au sh v)`
    SuccPrime,
}

impl HalfShuffle {
    pub const ALL: [HalfShuffle; 4] = [
        HalfShuffle::Prec,
        HalfShuffle::Succ,
        HalfShuffle::PrecPrime,
        HalfShuffle::SuccPrime,
    ];
}

pub fn half_shuffle(u: &[u32], v: &[u32], kind: HalfShuffle) -> Result<Vec<Vec<u32>>> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyDendriform);
    }
    let (m, k) = (u.len(), v.len());
    Ok(match kind {
        HalfShuffle::Prec => shuffle(&u[..m - 1], v)
            .into_iter()
            .map(|mut w| {
                w.push(u[m - 1]);
                w
            })
            .collect(),
        HalfShuffle::Succ => shuffle(u, &v[..k - 1])
            .into_iter()
            .map(|mut w| {
                w.push(v[k - 1]);
                w
            })
            .collect(),
        HalfShuffle::PrecPrime => shuffle(&u[1..], v)
            .into_iter()
            .map(|w| prepend(u[0], w))
            .collect(),
        HalfShuffle::SuccPrime => shuffle(u, &v[1..])
            .into_iter()
            .map(|w| prepend(v[0], w))
            .collect(),
    })
}

fn prepend(a: u32, w: Vec<u32>) -> Vec<u32> {
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(a);
    out.extend(w);
    out
}

/// Dashed patterns; the adjacent pair is the undashed part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DashedPattern {
    /// `21-3`: `p_i > p_{i+1}` adjacent, then some later `p_j > p_i`.
    TwoOneDashThree,
    /// `1-32`: some `p_i`, then adjacent `p_j > p_{j+1}` with `p_{j+1} > p_i`.
    OneDashThreeTwo,
}

pub fn avoids_dashed(p: &[u32], pattern: DashedPattern) -> bool {
    let n = p.len();
    match pattern {
        DashedPattern::TwoOneDashThree => {
            for i in 0..n.saturating_sub(1) {
                if p[i] > p[i + 1] && p[i + 2..].iter().any(|&x| x > p[i]) {
                    return false;
                }
            }
            true
        }
        DashedPattern::OneDashThreeTwo => {
            for j in 1..n.saturating_sub(1) {
                if p[j] > p[j + 1] && p[..j].iter().any(|&x| x < p[j + 1]) {
                    return false;
                }
            }
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    /// Last-letter recursion `ua sh vb = (ua sh v) b + (u sh vb) a`.
    fn shuffle_by_last_letter(u: &[u32], v: &[u32]) -> Vec<Vec<u32>> {
        if u.is_empty() {
            return vec![v.to_vec()];
        }
        if v.is_empty() {
            return vec![u.to_vec()];
        }
        let (a, b) = (u[u.len() - 1], v[v.len() - 1]);
        let mut out = Vec::new();
        for mut w in shuffle_by_last_letter(u, &v[..v.len() - 1]) {
            w.push(b);
            out.push(w);
        }
        for mut w in shuffle_by_last_letter(&u[..u.len() - 1], v) {
            w.push(a);
            out.push(w);
        }
        out
    }

    fn sorted(mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
        v.sort();
        v
    }

    /// Brute force: the permutation whose inversion pairs of positions match those of `w`.
    fn brute_standardize(w: &[u32]) -> Permutation {
        let inv_pos = |x: &[u32]| {
            let mut s = Vec::new();
            for i in 0..x.len() {
                for j in i + 1..x.len() {
                    if x[i] > x[j] {
                        s.push((i, j));
                    }
                }
            }
            s
        };
        let target = inv_pos(w);
        let hits: Vec<_> = Permutation::all(w.len())
            .filter(|p| inv_pos(p.values()) == target)
            .collect();
        assert_eq!(hits.len(), 1);
        hits.into_iter().next().unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[3, 1, 2, 6, 4, 5, 7]), perm("3126457"));
        assert_eq!(standardize(&[]), Permutation::identity(0));
        assert_eq!(standardize(&[2, 1, 2]), perm("213"));
        assert_eq!(brute_standardize(&[2, 1, 2]), perm("213"));
    }

    #[test]
    fn descent_composition_examples() {
        assert_eq!(perm("32415").descent_composition(), comp(&[1, 2, 2]));
        assert_eq!(Permutation::identity(5).descent_composition(), comp(&[5]));
        assert_eq!(perm("28347561").descent_composition(), comp(&[2, 3, 2, 1]));
        assert_eq!(Permutation::identity(0).descent_composition(), comp(&[]));
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(
            sorted(shuffle(&[1, 2], &[3])),
            vec![vec![1, 2, 3], vec![1, 3, 2], vec![3, 1, 2]]
        );
        assert_eq!(shuffle(&[4, 2], &[]), vec![vec![4, 2]]);
        let s = shuffle(&[2, 1], &[4, 5, 3]);
        assert_eq!(s.len(), 10);
        assert_eq!(
            sorted(s),
            sorted(shuffle_by_last_letter(&[2, 1], &[4, 5, 3]))
        );
    }

    #[test]
    fn half_shuffle_examples() {
        let w = half_shuffle(&[1, 4], &[2, 3], HalfShuffle::PrecPrime).unwrap();
        assert_eq!(
            sorted(w),
            vec![vec![1, 2, 3, 4], vec![1, 2, 4, 3], vec![1, 4, 2, 3]]
        );
        assert_eq!(
            half_shuffle(&[], &[1], HalfShuffle::Prec),
            Err(Error::EmptyDendriform)
        );
        assert_eq!(
            half_shuffle(&[1], &[], HalfShuffle::SuccPrime),
            Err(Error::EmptyDendriform)
        );
        let mut split = half_shuffle(&[2, 1], &[4, 3], HalfShuffle::Prec).unwrap();
        split.extend(half_shuffle(&[2, 1], &[4, 3], HalfShuffle::Succ).unwrap());
        assert_eq!(sorted(split), sorted(shuffle(&[2, 1], &[4, 3])));
    }

    #[test]
    fn schutzenberger_examples() {
        assert_eq!(perm("32415").schutzenberger(), perm("15243"));
        assert_eq!(perm("123").schutzenberger(), perm("123"));
        for p in Permutation::all(5) {
            assert_eq!(p.schutzenberger().schutzenberger(), p);
        }
    }

    #[test]
    fn schutzenberger_mirrors_descents() {
        for n in 0..=6 {
            for p in Permutation::all(n) {
                let nu = p.schutzenberger();
                assert_eq!(nu.descent_composition(), p.descent_composition().mirror());
                assert_eq!(
                    nu.inverse().descent_composition(),
                    p.inverse().descent_composition().mirror()
                );
            }
        }
    }

    #[test]
    fn dashed_pattern_examples() {
        let count = Permutation::all(4)
            .filter(|p| p.avoids(DashedPattern::TwoOneDashThree))
            .count();
        assert_eq!(count, 15);
        assert!(perm("28347561").avoids(DashedPattern::TwoOneDashThree));
        assert!(!perm("213").avoids(DashedPattern::TwoOneDashThree));
        assert!(!perm("132").avoids(DashedPattern::OneDashThreeTwo));
        assert!(perm("321").avoids(DashedPattern::OneDashThreeTwo));
    }

    #[test]
    fn dashed_avoiders_share_inversion_distribution() {
        for n in 0..=7 {
            let dist = |pat| {
                let mut v: Vec<usize> = Permutation::all(n)
                    .filter(|p| p.avoids(pat))
                    .map(|p| p.inv())
                    .collect();
                v.sort_unstable();
                v
            };
            assert_eq!(
                dist(DashedPattern::OneDashThreeTwo),
                dist(DashedPattern::TwoOneDashThree),
                "n={n}"
            );
        }
    }

    #[test]
    fn inversions() {
        assert_eq!(Permutation::identity(6).inv(), 0);
        assert_eq!(perm("15243").inv(), 4);
        assert_eq!(perm("312").inversion_set(), vec![(1, 3), (2, 3)]);
    }

    #[test]
    fn permutation_text_forms() {
        assert_eq!(
            perm("3,12,4,1,2,5,6,7,8,9,10,11").to_string(),
            "3,12,4,1,2,5,6,7,8,9,10,11"
        );
        assert_eq!(perm("3126457").to_string(), "3126457");
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("13".parse::<Permutation>().is_err());
        assert!("0".parse::<Word>().is_err());
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(5).count(), 120);
    }

    fn distinct_word(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
        (0..=max_len)
            .prop_flat_map(|n| Just((1..=n as u32 * 2).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(move |mut v| {
                v.truncate(v.len() / 2);
                v
            })
    }

    proptest! {
        #[test]
        fn standardize_is_idempotent(w in proptest::collection::vec(1u32..6, 0..8)) {
            let s = standardize(&w);
            prop_assert_eq!(standardize(s.values()), s.clone());
            prop_assert_eq!(s.inversion_set().len(), {
                let mut c = 0;
                for i in 0..w.len() { for j in i+1..w.len() { if w[i] > w[j] { c += 1; } } }
                c
            });
        }

        #[test]
        fn half_shuffles_split_the_shuffle(u in distinct_word(4), v in distinct_word(3)) {
            prop_assume!(!u.is_empty() && !v.is_empty());
            let v: Vec<u32> = v.iter().map(|x| x + 100).collect();
            let full = sorted(shuffle(&u, &v));
            let mut last = half_shuffle(&u, &v, HalfShuffle::Prec).unwrap();
            last.extend(half_shuffle(&u, &v, HalfShuffle::Succ).unwrap());
            let mut first = half_shuffle(&u, &v, HalfShuffle::PrecPrime).unwrap();
            first.extend(half_shuffle(&u, &v, HalfShuffle::SuccPrime).unwrap());
            prop_assert_eq!(sorted(last), full.clone());
            prop_assert_eq!(sorted(first), full.clone());
            prop_assert_eq!(full, sorted(shuffle_by_last_letter(&u, &v)));
        }
    }
}
