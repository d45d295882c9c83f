//! Traces of words in two generic `SL_2` matrices.
//!
//! A word in `X = x~` and `Y = x~'` is mapped into the algebra spanned by
//! `{1, X, Y, XY}` with coefficients in `Z[u, v, w]`, where `u = tr X`,
//! `v = tr Y`, `w = tr XY`. Cayley–Hamilton (`A^2 = tr(A) A - 1`) closes the
//! span under multiplication, which gives the table in [`basis_product`].

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::polyring::{Polynomial, Var, VariableSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// The two meridian generators of a two-bridge link group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `x~`
    First,
    /// `x~'`
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub sign: Sign,
}

impl Letter {
    pub const X: Letter = Letter::new(Generator::First, Sign::Plus);
    pub const X_INV: Letter = Letter::new(Generator::First, Sign::Minus);
    pub const XP: Letter = Letter::new(Generator::Second, Sign::Plus);
    pub const XP_INV: Letter = Letter::new(Generator::Second, Sign::Minus);

    pub const fn new(generator: Generator, sign: Sign) -> Letter {
        Letter { generator, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.generator, self.sign.flip())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.generator {
            Generator::First => "x",
            Generator::Second => "x'",
        };
        match self.sign {
            Sign::Plus => f.write_str(g),
            Sign::Minus => write!(f, "{g}^-1"),
        }
    }
}

/// A word in the free group on `x~`, `x~'`. Not necessarily freely reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid word letter `{0}`")]
pub struct WordParseError(pub String);

/// Parses words written as in `Display`: letters `x`, `x'`, `x^-1`, `x'^-1`
/// separated by `*` or whitespace; `1` or the empty string is the identity.
impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c == '*' || c.is_whitespace()) {
            let letter = match tok {
                "" | "1" => continue,
                "x" => Letter::X,
                "x^-1" => Letter::X_INV,
                "x'" => Letter::XP,
                "x'^-1" => Letter::XP_INV,
                other => return Err(WordParseError(other.to_string())),
            };
            letters.push(letter);
        }
        Ok(Word(letters))
    }
}

/// Basis of the algebra: `1, X, Y, XY` at indices `0..4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    One = 0,
    X = 1,
    Y = 2,
    XY = 3,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::One, Basis::X, Basis::Y, Basis::XY];
}

/// `c_one * 1 + c_x * X + c_y * Y + c_xy * XY` with trace-variable coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: [Polynomial; 4],
}

fn tp(s: &str) -> Polynomial {
    Polynomial::parse(s, VariableSet::Trace).expect("table entry")
}

fn row(one: &str, x: &str, y: &str, xy: &str) -> [Polynomial; 4] {
    [tp(one), tp(x), tp(y), tp(xy)]
}

type Table = [[[Polynomial; 4]; 3]; 3];

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        [
            // X * {X, Y, XY}
            [
                row("-1", "u", "0", "0"),
                row("0", "0", "0", "1"),
                row("0", "0", "-1", "u"),
            ],
            // Y * {X, Y, XY}
            [
                row("w - u*v", "v", "u", "-1"),
                row("-1", "0", "v", "0"),
                row("-u", "1", "w", "0"),
            ],
            // XY * {X, Y, XY}
            [
                row("-v", "w", "1", "0"),
                row("0", "-1", "0", "v"),
                row("-1", "0", "0", "w"),
            ],
        ]
    })
}

/// Product of two basis elements, expressed in the basis.
pub fn basis_product(lhs: Basis, rhs: Basis) -> AlgebraElement {
    match (lhs, rhs) {
        (Basis::One, b) | (b, Basis::One) => AlgebraElement::basis(b),
        (l, r) => AlgebraElement {
            coeffs: table()[l as usize - 1][r as usize - 1].clone(),
        },
    }
}

impl AlgebraElement {
    pub fn from_coeffs(coeffs: [Polynomial; 4]) -> AlgebraElement {
        assert!(
            coeffs
                .iter()
                .all(|c| c.variable_set() == VariableSet::Trace),
            "algebra coefficients live over the trace variables"
        );
        AlgebraElement { coeffs }
    }

    pub fn zero() -> AlgebraElement {
        AlgebraElement {
            coeffs: std::array::from_fn(|_| Polynomial::zero(VariableSet::Trace)),
        }
    }

    pub fn one() -> AlgebraElement {
        AlgebraElement::basis(Basis::One)
    }

    pub fn basis(b: Basis) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        e.coeffs[b as usize] = Polynomial::one(VariableSet::Trace);
        e
    }

    pub fn coeffs(&self) -> &[Polynomial; 4] {
        &self.coeffs
    }

    pub fn coeff(&self, b: Basis) -> &Polynomial {
        &self.coeffs[b as usize]
    }

    pub fn is_one(&self) -> bool {
        *self == AlgebraElement::one()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]),
        }
    }

    pub fn scale(&self, c: &Polynomial) -> AlgebraElement {
        AlgebraElement {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * c),
        }
    }

    /// Full product in the algebra.
    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for l in Basis::ALL {
            if self.coeffs[l as usize].is_zero() {
                continue;
            }
            for r in Basis::ALL {
                if other.coeffs[r as usize].is_zero() {
                    continue;
                }
                let c = &self.coeffs[l as usize] * &other.coeffs[r as usize];
                out = out.add(&basis_product(l, r).scale(&c));
            }
        }
        out
    }

    /// Right multiplication by `X^{±1}` or `Y^{±1}`.
    ///
    /// Inverse letters use `X^-1 = u - X` and `Y^-1 = v - Y`.
    pub fn multiply_by_letter(&self, l: Letter) -> AlgebraElement {
        let (b, tr) = match l.generator {
            Generator::First => (Basis::X, Var::U),
            Generator::Second => (Basis::Y, Var::V),
        };
        let mut out = AlgebraElement::zero();
        for lhs in Basis::ALL {
            let c = &self.coeffs[lhs as usize];
            if !c.is_zero() {
                out = out.add(&basis_product(lhs, b).scale(c));
            }
        }
        match l.sign {
            Sign::Plus => out,
            Sign::Minus => self
                .scale(&Polynomial::var(VariableSet::Trace, tr))
                .sub(&out),
        }
    }

    /// `2 c_one + u c_x + v c_y + w c_xy`.
    pub fn trace(&self) -> Polynomial {
        let t = VariableSet::Trace;
        let [one, x, y, xy] = &self.coeffs;
        let mut out = one.scale(&2.into());
        out += &(x * &Polynomial::var(t, Var::U));
        out += &(y * &Polynomial::var(t, Var::V));
        out += &(xy * &Polynomial::var(t, Var::W));
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [one, x, y, xy] = &self.coeffs;
        write!(f, "({one}) + ({x})*X + ({y})*Y + ({xy})*XY")
    }
}

/// Image of a word in the algebra, folding letters left to right.
pub fn evaluate_word(w: &Word) -> AlgebraElement {
    w.letters()
        .iter()
        .fold(AlgebraElement::one(), |acc, l| acc.multiply_by_letter(*l))
}

pub fn trace_of_word(w: &Word) -> Polynomial {
    evaluate_word(w).trace()
}

/// Rewrites a trace-coordinate polynomial in the barred coordinates via
/// `u = -x`, `v = -xp`, `w = -y`.
pub fn to_barred(f: &Polynomial) -> Polynomial {
    let b = VariableSet::Barred;
    let neg = |v| Some(-Polynomial::var(b, v));
    f.substitute(b, &[neg(Var::X), neg(Var::Xp), neg(Var::Y)])
        .expect("replacements are barred")
}
