//! Fixed-magnetization sectors of the spin-1/2 Hilbert space and sublattice masks.
//!
//! A configuration is a bit word where bit `i` holds the spin at site `i`
//! (1 = up). A sector collects all configurations with a fixed number of up
//! spins, in ascending integer order, so a state's index is reproducible.

use std::fmt;

use crate::error::{param, Result};

pub const MAX_SITES: usize = 32;

/// Sectors with at most this many sites get an O(1) dense index table.
const DENSE_LOOKUP_MAX_SITES: usize = 20;

pub(crate) fn full_mask(sites: usize) -> u32 {
    if sites >= 32 {
        u32::MAX
    } else {
        (1u32 << sites) - 1
    }
}

/// One computational basis state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinConfiguration {
    bits: u32,
    site_count: usize,
}

impl SpinConfiguration {
    pub fn new(bits: u32, site_count: usize) -> Result<Self> {
        if !(2..=MAX_SITES).contains(&site_count) {
            return param(format!("site count {site_count} outside [2, {MAX_SITES}]"));
        }
        if bits & !full_mask(site_count) != 0 {
            return param(format!("configuration {bits:#b} has bits above site {}", site_count - 1));
        }
        Ok(Self { bits, site_count })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn site_count(&self) -> usize {
        self.site_count
    }

    pub fn up_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_up(&self, site: usize) -> bool {
        self.bits >> site & 1 == 1
    }
}

impl fmt::Display for SpinConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for site in 0..self.site_count {
            f.write_str(if self.is_up(site) { "↑" } else { "↓" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
enum Lookup {
    Dense(Vec<u32>),
    Search,
}

/// All configurations of `site_count` spins with exactly `up_count` up spins.
#[derive(Debug, Clone)]
pub struct SectorBasis {
    site_count: usize,
    up_count: usize,
    states: Vec<u32>,
    lookup: Lookup,
}

/// Iterates all `width`-bit words with `ones` set bits in ascending order.
pub(crate) fn fixed_weight_words(width: usize, ones: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << width;
    let first: u64 = (1u64 << ones) - 1;
    let mut next = if ones <= width { Some(first) } else { None };
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            // Gosper's hack: smallest larger word with the same popcount.
            let lowest = current & current.wrapping_neg();
            let ripple = current + lowest;
            let candidate = (((ripple ^ current) >> 2) / lowest) | ripple;
            (candidate < limit).then_some(candidate)
        };
        Some(current as u32)
    })
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl SectorBasis {
    pub fn new(site_count: usize, up_count: usize) -> Result<Self> {
        enumerate_sector(site_count, up_count)
    }

    /// The Sz = 0 sector (or Sz = -1/2 for odd `site_count`).
    pub fn zero_magnetization(site_count: usize) -> Result<Self> {
        enumerate_sector(site_count, site_count / 2)
    }

    pub fn site_count(&self) -> usize {
        self.site_count
    }

    pub fn up_count(&self) -> usize {
        self.up_count
    }

    /// Total Sz in units of ħ.
    pub fn magnetization(&self) -> f64 {
        self.up_count as f64 - self.site_count as f64 / 2.0
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[u32] {
        &self.states
    }

    pub fn state(&self, index: usize) -> SpinConfiguration {
        SpinConfiguration {
            bits: self.states[index],
            site_count: self.site_count,
        }
    }

    /// Index of a raw bit word, `None` if it is not in this sector.
    #[inline]
    pub fn index_of_bits(&self, bits: u32) -> Option<usize> {
        match &self.lookup {
            Lookup::Dense(table) => match table.get(bits as usize) {
                Some(&k) if k != u32::MAX => Some(k as usize),
                _ => None,
            },
            Lookup::Search => self.states.binary_search(&bits).ok(),
        }
    }

    pub fn index_of(&self, config: SpinConfiguration) -> Option<usize> {
        index_of(self, config)
    }

    /// Direct-mapped index table over all 2^N words (`u32::MAX` = absent),
    /// available for small site counts.
    pub fn dense_table(&self) -> Option<&[u32]> {
        match &self.lookup {
            Lookup::Dense(table) => Some(table),
            Lookup::Search => None,
        }
    }
}

pub fn enumerate_sector(site_count: usize, up_count: usize) -> Result<SectorBasis> {
    if !(2..=MAX_SITES).contains(&site_count) {
        return param(format!("site count {site_count} outside [2, {MAX_SITES}]"));
    }
    if up_count > site_count {
        return param(format!("up count {up_count} exceeds site count {site_count}"));
    }
    let states: Vec<u32> = fixed_weight_words(site_count, up_count).collect();
    debug_assert_eq!(states.len(), binomial(site_count, up_count));

    let lookup = if site_count <= DENSE_LOOKUP_MAX_SITES {
        let mut table = vec![u32::MAX; 1usize << site_count];
        for (k, &s) in states.iter().enumerate() {
            table[s as usize] = k as u32;
        }
        Lookup::Dense(table)
    } else {
        Lookup::Search
    };

    Ok(SectorBasis {
        site_count,
        up_count,
        states,
        lookup,
    })
}

pub fn index_of(basis: &SectorBasis, config: SpinConfiguration) -> Option<usize> {
    if config.site_count != basis.site_count {
        return None;
    }
    basis.index_of_bits(config.bits)
}

/// Lattice family a bipartition is being built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    Chain,
    Dimer,
    Ladder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartitionScheme {
    /// Even-indexed sites 0, 2, 4, ...
    OddEven,
    /// Ladder sites with even `leg + rung`.
    Checkerboard,
    /// Every site of leg 0.
    Leg,
    /// Contiguous sites `0..L`.
    Block(usize),
    Custom(u32),
}

impl std::str::FromStr for BipartitionScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse_num = |v: &str| -> std::result::Result<u64, String> {
            let parsed = if let Some(bin) = v.strip_prefix("0b") {
                u64::from_str_radix(bin, 2)
            } else if let Some(hex) = v.strip_prefix("0x") {
                u64::from_str_radix(hex, 16)
            } else {
                v.parse()
            };
            parsed.map_err(|e| format!("bad number '{v}': {e}"))
        };
        match s {
            "odd_even" => Ok(Self::OddEven),
            "checkerboard" => Ok(Self::Checkerboard),
            "leg" => Ok(Self::Leg),
            _ => {
                if let Some(l) = s.strip_prefix("block:") {
                    Ok(Self::Block(parse_num(l)? as usize))
                } else if let Some(m) = s.strip_prefix("custom:") {
                    let mask = parse_num(m)?;
                    u32::try_from(mask)
                        .map(Self::Custom)
                        .map_err(|_| format!("mask {m} wider than 32 bits"))
                } else {
                    Err(format!(
                        "unknown bipartition '{s}' (expected odd_even, checkerboard, leg, block:L, custom:MASK)"
                    ))
                }
            }
        }
    }
}

/// Kept sublattice B of a bipartition; the complement R is traced out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartitionMask {
    kept: u32,
    site_count: usize,
}

impl BipartitionMask {
    pub fn new(kept: u32, site_count: usize) -> Result<Self> {
        if !(2..=MAX_SITES).contains(&site_count) {
            return param(format!("site count {site_count} outside [2, {MAX_SITES}]"));
        }
        let full = full_mask(site_count);
        if kept & !full != 0 {
            return param(format!("mask {kept:#b} has bits at or above site {site_count}"));
        }
        if kept == 0 || kept == full {
            return param("bipartition must leave both sides non-empty");
        }
        Ok(Self { kept, site_count })
    }

    pub fn kept_mask(&self) -> u32 {
        self.kept
    }

    pub fn traced_mask(&self) -> u32 {
        !self.kept & full_mask(self.site_count)
    }

    pub fn site_count(&self) -> usize {
        self.site_count
    }

    /// L_B, the number of kept sites.
    pub fn kept_len(&self) -> usize {
        self.kept.count_ones() as usize
    }

    pub fn traced_len(&self) -> usize {
        self.site_count - self.kept_len()
    }

    pub fn keeps(&self, site: usize) -> bool {
        self.kept >> site & 1 == 1
    }

    /// Swaps kept and traced sides.
    pub fn complement(&self) -> Self {
        Self {
            kept: self.traced_mask(),
            site_count: self.site_count,
        }
    }

    pub fn crosses(&self, a: usize, b: usize) -> bool {
        self.keeps(a) != self.keeps(b)
    }
}

/// Ladder site index for (leg, rung).
pub fn ladder_site(leg: usize, rung: usize, rungs: usize) -> usize {
    leg * rungs + rung
}

pub fn standard_bipartition(
    kind: LatticeKind,
    site_count: usize,
    scheme: BipartitionScheme,
) -> Result<BipartitionMask> {
    if !(2..=MAX_SITES).contains(&site_count) {
        return param(format!("site count {site_count} outside [2, {MAX_SITES}]"));
    }
    let ladder_rungs = || -> Result<usize> {
        if kind != LatticeKind::Ladder {
            return param(format!("{scheme:?} bipartition requires the ladder model"));
        }
        if site_count % 2 != 0 {
            return param(format!("ladder needs an even site count, got {site_count}"));
        }
        Ok(site_count / 2)
    };
    let kept = match scheme {
        BipartitionScheme::OddEven => (0..site_count).step_by(2).fold(0u32, |m, s| m | 1 << s),
        BipartitionScheme::Checkerboard => {
            let rungs = ladder_rungs()?;
            let mut m = 0u32;
            for leg in 0..2 {
                for rung in 0..rungs {
                    if (leg + rung) % 2 == 0 {
                        m |= 1 << ladder_site(leg, rung, rungs);
                    }
                }
            }
            m
        }
        BipartitionScheme::Leg => full_mask(ladder_rungs()?),
        BipartitionScheme::Block(len) => {
            if len == 0 || len >= site_count {
                return param(format!("block length {len} outside [1, {}]", site_count - 1));
            }
            full_mask(len)
        }
        BipartitionScheme::Custom(mask) => mask,
    };
    BipartitionMask::new(kept, site_count)
}

/// Gathers the bits of `word` selected by `mask` into the low bits, preserving order.
#[inline]
pub fn extract_bits(word: u32, mut mask: u32) -> u32 {
    let mut out = 0u32;
    let mut pos = 0;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        if word & low != 0 {
            out |= 1 << pos;
        }
        pos += 1;
        mask ^= low;
    }
    out
}

/// Inverse of [`extract_bits`]: spreads the low bits of `compact` over `mask`.
#[inline]
pub fn deposit_bits(compact: u32, mut mask: u32) -> u32 {
    let mut out = 0u32;
    let mut pos = 0;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        if compact >> pos & 1 == 1 {
            out |= low;
        }
        pos += 1;
        mask ^= low;
    }
    out
}
