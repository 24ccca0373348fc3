//! Set partitions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::word::Permutation;

/// A set partition of a finite set of positive integers.
///
/// Stored normalized: every block sorted ascending, blocks ordered by their
/// minima. Two partitions with the same blocks compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || !seen.insert(x) {
                    return Err(Error::InvalidSetPartition(format!(
                        "element {x} is zero or repeated"
                    )));
                }
            }
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    /// The partition of `{1..n}` whose block labels are given by a restricted
    /// growth string.
    fn from_growth_string(rgs: &[usize]) -> Self {
        let k = rgs.iter().max().map_or(0, |&m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i as u32 + 1);
        }
        SetPartition { blocks }
    }

    /// Blocks sorted by their minima, each ascending.
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Number of elements of the ground set.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// True when the ground set is `{1..n}`.
    pub fn is_canonical(&self) -> bool {
        let n = self.size() as u32;
        self.blocks.iter().flatten().all(|&x| x >= 1 && x <= n)
    }

    pub(crate) fn require_canonical(&self) -> Result<()> {
        if self.is_canonical() {
            Ok(())
        } else {
            Err(Error::InvalidSetPartition(format!(
                "{self} is not a partition of 1..{}",
                self.size()
            )))
        }
    }

    /// Blocks ordered by increasing minima.
    pub fn sharp_order(&self) -> Vec<Vec<u32>> {
        self.blocks.clone()
    }

    /// Blocks ordered by decreasing maxima.
    pub fn flat_order(&self) -> Vec<Vec<u32>> {
        let mut b = self.blocks.clone();
        b.sort_by(|x, y| y.last().cmp(&x.last()));
        b
    }

    /// Block sizes in increasing-minimum order.
    pub fn k_sharp(&self) -> Composition {
        Composition::from_parts_unchecked(self.blocks.iter().map(|b| b.len() as u32).collect())
    }

    /// Block sizes in decreasing-maximum order.
    pub fn k_flat(&self) -> Composition {
        Composition::from_parts_unchecked(
            self.flat_order().iter().map(|b| b.len() as u32).collect(),
        )
    }

    /// The blocks in decreasing-maximum order, each read increasingly.
    /// Only meaningful for canonical partitions.
    pub fn flat_reading(&self) -> Result<Permutation> {
        self.require_canonical()?;
        Ok(Permutation::from_vec_unchecked(
            self.flat_order().into_iter().flatten().collect(),
        ))
    }

    /// All set partitions of `{1..n}`, enumerated by restricted growth strings.
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        if n == 0 {
            return vec![SetPartition::default()];
        }
        loop {
            out.push(SetPartition::from_growth_string(&rgs));
            // next restricted growth string
            let mut i = n - 1;
            loop {
                let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
                if i > 0 && rgs[i] <= max_prefix {
                    rgs[i] += 1;
                    for x in rgs[i + 1..].iter_mut() {
                        *x = 0;
                    }
                    break;
                }
                if i <= 1 {
                    out.sort();
                    return out;
                }
                i -= 1;
            }
        }
    }
}

/// `1|28|347|56` for digit-sized elements, `6,10,11|2,4,8,9` otherwise.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.blocks.iter().flatten().any(|&x| x > 9);
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in b.iter().enumerate() {
                if wide && j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SetPartition::default());
        }
        let blocks = s
            .split('|')
            .map(crate::word::parse_letters)
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(blocks)
    }
}
