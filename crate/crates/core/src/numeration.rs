//! Tribonacci numbers and the Tribonacci numeration system.
//!
//! Every natural number `N` has a unique canonical digit word over {0,1},
//! most significant digit first, with digit weights `T_2, T_3, ...`
//! (least significant digit has weight `T_2 = 1`), no leading zero and
//! no factor `111`. Zero is the empty word. A canonical word preceded by
//! any number of zeros is a *padded* form of the same number.

use std::sync::{LazyLock, Mutex};

use crate::error::{Error, Result};

/// Growing table of Tribonacci numbers `T_0 = 0, T_1 = 1, T_2 = 1`,
/// `T_n = T_{n-1} + T_{n-2} + T_{n-3}`.
///
/// Append-only: indices never change once computed.
#[derive(Debug)]
pub struct TribTable {
    values: Vec<u64>,
}

impl TribTable {
    pub fn new() -> Self {
        TribTable {
            values: vec![0, 1, 1],
        }
    }

    /// `T_i`, extending the table on demand. Panics on u64 overflow
    /// (around `i = 74`) rather than wrapping.
    pub fn get(&mut self, i: usize) -> u64 {
        while self.values.len() <= i {
            let n = self.values.len();
            let next = self.values[n - 1]
                .checked_add(self.values[n - 2])
                .and_then(|s| s.checked_add(self.values[n - 3]))
                .unwrap_or_else(|| panic!("Tribonacci number T_{n} overflows u64"));
            self.values.push(next);
        }
        self.values[i]
    }

    /// Largest index `i >= 2` with `T_i <= n`, for `n >= 1`.
    fn greedy_index(&mut self, n: u64) -> usize {
        debug_assert!(n >= 1);
        let mut i = 2;
        while self.get(i + 1) <= n {
            i += 1;
        }
        i
    }
}

impl Default for TribTable {
    fn default() -> Self {
        Self::new()
    }
}

static TABLE: LazyLock<Mutex<TribTable>> = LazyLock::new(|| Mutex::new(TribTable::new()));

/// `T_i` from the shared memoized table.
pub fn tribonacci(i: usize) -> u64 {
    TABLE.lock().unwrap().get(i)
}

/// Canonical Tribonacci representation of `n`, msd first. Empty for 0.
pub fn to_rep(n: u64) -> Vec<u8> {
    if n == 0 {
        return Vec::new();
    }
    let mut table = TABLE.lock().unwrap();
    let top = table.greedy_index(n);
    let mut rest = n;
    let mut digits = Vec::with_capacity(top - 1);
    for i in (2..=top).rev() {
        let t = table.get(i);
        if t <= rest {
            digits.push(1);
            rest -= t;
        } else {
            digits.push(0);
        }
    }
    debug_assert_eq!(rest, 0);
    digits
}

/// Value of a binary digit word, msd first, lsd weight `T_2 = 1`.
/// The word need not be canonical; leading zeros are allowed.
pub fn from_rep(digits: &[u8]) -> u64 {
    let mut table = TABLE.lock().unwrap();
    let t = digits.len();
    let mut sum: u64 = 0;
    for (i, &d) in digits.iter().enumerate() {
        if d != 0 {
            sum = sum
                .checked_add(table.get(t + 1 - i))
                .expect("from_rep overflows u64");
        }
    }
    sum
}

/// True iff the word is empty, or starts with 1 and has no factor 111.
pub fn is_canonical(digits: &[u8]) -> bool {
    if digits.is_empty() {
        return true;
    }
    if digits[0] != 1 {
        return false;
    }
    !has_triple_ones(digits)
}

/// True iff the word contains three consecutive 1s.
pub fn has_triple_ones(digits: &[u8]) -> bool {
    digits.windows(3).any(|w| w == [1, 1, 1])
}

/// Render a digit word as an ASCII string of '0'/'1', msd first.
pub fn rep_string(digits: &[u8]) -> String {
    digits.iter().map(|&d| if d == 0 { '0' } else { '1' }).collect()
}

/// Parse an ASCII '0'/'1' string into a digit word.
pub fn parse_rep(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::Format(format!(
                "invalid digit {other:?} in representation"
            ))),
        })
        .collect()
}

/// Left-pad a digit word with zeros to the given length.
pub fn pad_to(digits: &[u8], len: usize) -> Vec<u8> {
    assert!(len >= digits.len(), "pad_to cannot shorten a word");
    let mut out = vec![0; len - digits.len()];
    out.extend_from_slice(digits);
    out
}

/// Number of trailing 1s of the canonical representation of `n`.
/// This is the infinite Tribonacci word evaluated at `n`.
pub fn trailing_ones(n: u64) -> u8 {
    let rep = to_rep(n);
    rep.iter().rev().take_while(|&&d| d == 1).count() as u8
}
