//! Table decoding, finite-alphabet codebooks and a channel simulator.
//!
//! A codebook is a coset `X + L` of the kernel lattice intersected with the
//! cube `[0, sigma)^n`. Errors only raise cell levels and never past
//! `sigma - 1`; there is no wraparound.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sequences::{verify_bh, weighted_sum, BhSequence, GroupElement, Injectivity};
use crate::sphere::{enumerate_sphere, ErrorVector};

/// Default limit on words scanned by [`extract_codebook`].
pub const CODEBOOK_SCAN_CAP: u128 = 1 << 24;

/// Identifier of the generator behind [`simulate_channel`]: ChaCha8 seeded
/// with `seed_from_u64(seed)`, trial `i` drawing from stream `i`.
pub const RNG_ALGORITHM: &str = "chacha8/seed_from_u64/stream-per-trial";

/// Syndrome to error-vector lookup for a verified sequence.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    seq: BhSequence,
    table: HashMap<GroupElement, ErrorVector>,
}

impl SyndromeTable {
    pub fn sequence(&self) -> &BhSequence {
        &self.seq
    }

    pub fn get(&self, syndrome: &GroupElement) -> Option<&ErrorVector> {
        self.table.get(syndrome)
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Every group element is a syndrome; true exactly for perfect codes.
    pub fn is_complete(&self) -> bool {
        self.table.len() as u128 == self.seq.group().order()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, &ErrorVector)> {
        self.table.iter()
    }
}

pub fn build_syndrome_table(seq: &BhSequence) -> Result<SyndromeTable> {
    if let Injectivity::Collides(c) = verify_bh(seq)? {
        return Err(Error::NotBh(c));
    }
    let mut table = HashMap::new();
    for e in enumerate_sphere(&seq.params())? {
        table.insert(weighted_sum(seq, e.entries())?, e);
    }
    Ok(SyndromeTable { seq: seq.clone(), table })
}

/// `(X + L) ∩ [0, sigma)^n` for the kernel lattice `L` of `seq`.
#[derive(Debug, Clone)]
pub struct Codebook {
    sigma: u64,
    offset: Vec<u64>,
    coset: GroupElement,
    words: Vec<Vec<u64>>,
    seq: BhSequence,
}

impl Codebook {
    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    pub fn offset(&self) -> &[u64] {
        &self.offset
    }

    /// Common syndrome of every codeword.
    pub fn coset_syndrome(&self) -> &GroupElement {
        &self.coset
    }

    pub fn words(&self) -> &[Vec<u64>] {
        &self.words
    }

    pub fn sequence(&self) -> &BhSequence {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn check_word(y: &[u64], n: usize, sigma: u64) -> Result<()> {
    if y.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: y.len() });
    }
    if let Some(&bad) = y.iter().find(|&&v| v >= sigma) {
        return Err(Error::InvalidParams(format!("symbol {bad} outside the alphabet [0, {sigma})")));
    }
    Ok(())
}

/// Full scan of `[0, sigma)^n`, keeping words in the coset of `offset`.
/// Words come out in lexicographic order.
pub fn extract_codebook(seq: &BhSequence, offset: &[u64], sigma: u64, scan_cap: u128) -> Result<Codebook> {
    if sigma == 0 {
        return Err(Error::InvalidParams("alphabet size must be at least 1".into()));
    }
    let n = seq.n();
    check_word(offset, n, sigma)?;
    let scan = (sigma as u128).checked_pow(n as u32).filter(|&s| s <= scan_cap);
    if scan.is_none() {
        return Err(Error::EnumerationCap { needed: (sigma as u128).saturating_pow(n as u32), cap: scan_cap });
    }
    let coset = weighted_sum(seq, offset)?;
    let mut words = Vec::new();
    let mut w = vec![0u64; n];
    loop {
        if weighted_sum(seq, &w)? == coset {
            words.push(w.clone());
        }
        // Odometer, last position fastest.
        let Some(i) = (0..n).rev().find(|&i| w[i] + 1 < sigma) else { break };
        w[i] += 1;
        w[i + 1..].iter_mut().for_each(|x| *x = 0);
    }
    Ok(Codebook { sigma, offset: offset.to_vec(), coset, words, seq: seq.clone() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decoded {
    Corrected {
        codeword: Vec<u64>,
        error: ErrorVector,
    },
    /// The syndrome has no admissible error in the table.
    Uncorrectable {
        syndrome: GroupElement,
    },
}

/// Table decoding of a received word against the coset with syndrome
/// `coset`.
pub fn decode(y: &[u64], table: &SyndromeTable, coset: &GroupElement, sigma: u64) -> Result<Decoded> {
    let seq = table.sequence();
    check_word(y, seq.n(), sigma)?;
    if !seq.group().contains(coset) {
        return Err(Error::InvalidElement(format!("{coset:?} is not in {}", seq.group())));
    }
    let s = seq.group().sub(&weighted_sum(seq, y)?, coset);
    let Some(e) = table.get(&s) else {
        return Ok(Decoded::Uncorrectable { syndrome: s });
    };
    if y.iter().zip(e.entries()).any(|(&yi, &ei)| ei > yi) {
        return Ok(Decoded::Uncorrectable { syndrome: s });
    }
    let codeword = y.iter().zip(e.entries()).map(|(&yi, &ei)| yi - ei).collect();
    Ok(Decoded::Corrected { codeword, error: e.clone() })
}

impl Codebook {
    pub fn decode(&self, y: &[u64], table: &SyndromeTable) -> Result<Decoded> {
        decode(y, table, &self.coset, self.sigma)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelReport {
    pub trials: u64,
    pub decode_successes: u64,
    pub failures: u64,
    pub seed: u64,
    pub rng: &'static str,
}

/// Monte Carlo run of the limited-magnitude channel.
///
/// Each trial draws a uniform codeword `x` and a uniform error from the
/// sphere vectors `e` with `x + e` still in the alphabet (by rejection from
/// the whole sphere), decodes, and compares with `(x, e)`.
pub fn simulate_channel(book: &Codebook, table: &SyndromeTable, trials: u64, seed: u64) -> Result<ChannelReport> {
    if book.is_empty() {
        return Err(Error::InvalidParams("codebook is empty".into()));
    }
    if book.sequence() != table.sequence() {
        return Err(Error::InvalidParams("codebook and syndrome table use different sequences".into()));
    }
    let sphere: Vec<ErrorVector> = enumerate_sphere(&table.sequence().params())?.collect();
    let sigma = book.sigma();
    let mut successes = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let x = &book.words()[rng.random_range(0..book.len())];
        let e = loop {
            let e = &sphere[rng.random_range(0..sphere.len())];
            if x.iter().zip(e.entries()).all(|(&xi, &ei)| xi + ei < sigma) {
                break e;
            }
        };
        let y: Vec<u64> = x.iter().zip(e.entries()).map(|(&xi, &ei)| xi + ei).collect();
        if let Decoded::Corrected { codeword, error } = book.decode(&y, table)? {
            if &codeword == x && &error == e {
                successes += 1;
            }
        }
    }
    Ok(ChannelReport { trials, decode_successes: successes, failures: trials - successes, seed, rng: RNG_ALGORITHM })
}
