use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Multiset of matrix-block sizes: `counts[j]` copies of `M_j` over ℂ.
///
/// Zero counts are never stored, so equality is isomorphism of the
/// corresponding semisimple ℂ-algebras.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<u32, u32>", into = "BTreeMap<u32, u32>")]
pub struct BlockProfile {
    counts: BTreeMap<u32, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProfileParseError {
    #[error("malformed profile entry {0:?}; expected `size^count`")]
    Entry(String),
    #[error("block size must be at least 1")]
    ZeroBlock,
    #[error("block size {0} listed twice")]
    Repeated(u32),
}

impl BlockProfile {
    pub fn from_counts(counts: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (j, c) in counts {
            assert!(j >= 1, "block size must be at least 1");
            if c > 0 {
                *map.entry(j).or_insert(0) += c;
            }
        }
        BlockProfile { counts: map }
    }

    /// Profile of `M_{n_1} ⊕ … ⊕ M_{n_k}`.
    pub fn from_blocks(blocks: &[usize]) -> Self {
        Self::from_counts(blocks.iter().map(|&b| (b as u32, 1)))
    }

    pub fn counts(&self) -> &BTreeMap<u32, u32> {
        &self.counts
    }

    pub fn count(&self, j: u32) -> u32 {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    /// `Σ counts[j]·j²`
    pub fn dim(&self) -> usize {
        self.counts.iter().map(|(&j, &c)| c as usize * (j as usize).pow(2)).sum()
    }

    pub fn max_block(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    pub fn num_blocks(&self) -> usize {
        self.counts.values().map(|&c| c as usize).sum()
    }

    /// Block sizes with multiplicity, largest first.
    pub fn blocks(&self) -> Vec<usize> {
        self.counts.iter().rev().flat_map(|(&j, &c)| std::iter::repeat_n(j as usize, c as usize)).collect()
    }
}

impl From<BlockProfile> for BTreeMap<u32, u32> {
    fn from(p: BlockProfile) -> Self {
        p.counts
    }
}

impl TryFrom<BTreeMap<u32, u32>> for BlockProfile {
    type Error = ProfileParseError;

    fn try_from(map: BTreeMap<u32, u32>) -> Result<Self, Self::Error> {
        if map.contains_key(&0) {
            return Err(ProfileParseError::ZeroBlock);
        }
        Ok(Self::from_counts(map))
    }
}

impl fmt::Display for BlockProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.counts.iter().map(|(j, c)| format!("{j}^{c}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for BlockProfile {
    type Err = ProfileParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut map = BTreeMap::new();
        if s.trim() == "0" {
            return Ok(BlockProfile::default());
        }
        for entry in s.split_whitespace() {
            let bad = || ProfileParseError::Entry(entry.to_string());
            let (j, c) = entry.split_once('^').ok_or_else(bad)?;
            let j: u32 = j.parse().map_err(|_| bad())?;
            let c: u32 = c.parse().map_err(|_| bad())?;
            if j == 0 {
                return Err(ProfileParseError::ZeroBlock);
            }
            if map.insert(j, c).is_some() {
                return Err(ProfileParseError::Repeated(j));
            }
        }
        Ok(Self::from_counts(map))
    }
}

/// Orders by the block list read largest first, compared lexicographically.
impl Ord for BlockProfile {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.blocks().cmp(&other.blocks())
    }
}

impl PartialOrd for BlockProfile {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All profiles with `Σ counts[j]·j² = n` and every block at most
/// `max_block`, in [`BlockProfile`] order.
pub fn enumerate_semisimple_types(n: usize, max_block: Option<usize>) -> Vec<BlockProfile> {
    fn go(rest: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<BlockProfile>) {
        if rest == 0 {
            out.push(BlockProfile::from_blocks(acc));
            return;
        }
        for b in (1..=cap.min(rest.isqrt())).rev() {
            acc.push(b);
            go(rest - b * b, b, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let cap = max_block.unwrap_or(usize::MAX).min(n.isqrt());
    go(n, cap, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BlockProfile {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_semisimple_types(1, None), [p("1^1")]);
        assert_eq!(enumerate_semisimple_types(4, None), [p("1^4"), p("2^1")]);
        let twelve: Vec<String> = enumerate_semisimple_types(12, None).iter().map(ToString::to_string).collect();
        assert_eq!(twelve, ["1^12", "1^8 2^1", "1^4 2^2", "2^3", "1^3 3^1"]);
        assert_eq!(enumerate_semisimple_types(12, Some(2)).len(), 4);
    }

    #[test]
    fn enumeration_matches_brute_force_counts() {
        // number of multisets of squares summing to n, by direct DP over part sizes
        for n in 1..=40usize {
            let mut ways = vec![0usize; n + 1];
            ways[0] = 1;
            for b in 1..=n.isqrt() {
                for s in b * b..=n {
                    ways[s] += ways[s - b * b];
                }
            }
            let got = enumerate_semisimple_types(n, None);
            assert_eq!(got.len(), ways[n], "n = {n}");
            assert!(got.iter().all(|q| q.dim() == n));
            assert!(got.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn text_and_json_forms() {
        let q = BlockProfile::from_blocks(&[2, 1, 2]);
        assert_eq!(q.to_string(), "1^1 2^2");
        assert_eq!(q.dim(), 9);
        assert_eq!(q.blocks(), [2, 2, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"1":1,"2":2}"#);
        let back: BlockProfile = serde_json::from_str(r#"{"2":2,"1":1,"3":0}"#).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<BlockProfile>(r#"{"0":1}"#).is_err());
        assert_eq!(p("2^3").to_string(), "2^3");
        for bad in ["2", "x^1", "0^1", "1^1 1^2"] {
            assert!(bad.parse::<BlockProfile>().is_err(), "{bad}");
        }
    }
}
