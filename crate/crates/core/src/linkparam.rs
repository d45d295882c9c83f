//! Two-bridge link parameters `b(2p, q)` and the associated link group data.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::traceengine::{Generator, Letter, Sign, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("NotEven: 2p = {twop} must be even")]
    NotEven { twop: i64 },
    #[error("OutOfRange: need 2p >= 2 and 1 <= q < 2p, got 2p = {twop}, q = {q}")]
    OutOfRange { twop: i64, q: i64 },
    #[error("NotCoprime: gcd(q, 2p) = {gcd} must be 1 (2p = {twop}, q = {q})")]
    NotCoprime { twop: i64, q: i64, gcd: i64 },
}

/// Validated parameters of the two-bridge link `b(2p, q)`:
/// `2p` even and positive, `1 <= q < 2p`, `gcd(q, 2p) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeParam {
    twop: u32,
    q: u32,
}

impl TwoBridgeParam {
    pub fn new(twop: i64, q: i64) -> Result<TwoBridgeParam, ParamError> {
        if twop < 2 || twop > i64::from(u32::MAX) {
            return Err(ParamError::OutOfRange { twop, q });
        }
        if twop % 2 != 0 {
            return Err(ParamError::NotEven { twop });
        }
        if q < 1 || q >= twop {
            return Err(ParamError::OutOfRange { twop, q });
        }
        let gcd = q.gcd(&twop);
        if gcd != 1 {
            return Err(ParamError::NotCoprime { twop, q, gcd });
        }
        Ok(TwoBridgeParam {
            twop: twop as u32,
            q: q as u32,
        })
    }

    pub fn twop(&self) -> u32 {
        self.twop
    }

    pub fn p(&self) -> u32 {
        self.twop / 2
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `q^{-1} mod 2p`, in `[1, 2p)`.
    pub fn q_inverse(&self) -> u32 {
        let m = i64::from(self.twop);
        let e = i64::from(self.q).extended_gcd(&m);
        e.x.mod_floor(&m) as u32
    }

    /// The representative with the smaller of `q` and `q^{-1} mod 2p`.
    pub fn canonical(&self) -> TwoBridgeParam {
        TwoBridgeParam {
            twop: self.twop,
            q: self.q.min(self.q_inverse()),
        }
    }

    /// Same `2p` and `q' ≡ q^{±1} (mod 2p)`.
    pub fn is_equivalent(&self, other: &TwoBridgeParam) -> bool {
        self.twop == other.twop && (other.q == self.q || other.q == self.q_inverse())
    }

    /// `ε_k = (-1)^{floor(kq / 2p)}` for `k = 1..2p-1`.
    pub fn epsilon_sequence(&self) -> Vec<Sign> {
        let (twop, q) = (u64::from(self.twop), u64::from(self.q));
        (1..twop)
            .map(|k| Sign::from_parity((k * q / twop) % 2 == 1))
            .collect()
    }

    /// `w = x~'^{ε_1} x~^{ε_2} ... x~^{ε_{2p-2}} x~'^{ε_{2p-1}}`.
    pub fn relator_word(&self) -> Word {
        let letters = self
            .epsilon_sequence()
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                // i is 0-based, so odd positions k = i + 1 are the second generator
                let g = if i % 2 == 0 {
                    Generator::Second
                } else {
                    Generator::First
                };
                Letter::new(g, s)
            })
            .collect();
        Word::new(letters)
    }

    pub fn presentation(&self) -> Presentation {
        let w = self.relator_word();
        let x = Word::new(vec![Letter::X]);
        Presentation {
            lhs: x.concat(&w),
            rhs: w.concat(&x),
            relator_word: w,
        }
    }

    /// Every valid parameter with `1 <= p <= max_p`, ordered by `(2p, q)`.
    pub fn all_up_to(max_p: u32) -> Vec<TwoBridgeParam> {
        (1..=i64::from(max_p))
            .flat_map(|p| (1..2 * p).map(move |q| (2 * p, q)))
            .filter_map(|(twop, q)| TwoBridgeParam::new(twop, q).ok())
            .collect()
    }
}

impl fmt::Display for TwoBridgeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.twop, self.q)
    }
}

/// `π_1 = < x~, x~' | x~ w = w x~ >`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub relator_word: Word,
    pub lhs: Word,
    pub rhs: Word,
}

impl Presentation {
    pub fn generators(&self) -> [&'static str; 2] {
        ["x", "x'"]
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<x, x' | {} = {}>", self.lhs, self.rhs)
    }
}
