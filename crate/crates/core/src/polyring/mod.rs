//! Sparse polynomials in three variables over arbitrary-precision integers.
//!
//! Every [`Polynomial`] lives over a fixed [`VariableSet`]: either the trace
//! coordinates `(u, v, w) = (tr X, tr X', tr XX')` or the barred coordinates
//! `(x, xp, y)`, which are their negatives. Terms are kept in a `BTreeMap`
//! keyed by [`Monomial`] under graded lexicographic order with `x > xp > y`,
//! so structural equality is equality of polynomials.

mod json;
mod parse;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use json::{PolyJson, TermJson};
pub use parse::ParseError;

/// The ordered triple of variable names a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VariableSet {
    /// `(u, v, w)` for `(tr x~, tr x~', tr x~x~')`.
    Trace,
    /// `(x, xp, y)` for the negated traces.
    Barred,
}

impl VariableSet {
    pub const fn names(self) -> [&'static str; 3] {
        match self {
            VariableSet::Trace => ["u", "v", "w"],
            VariableSet::Barred => ["x", "xp", "y"],
        }
    }

    pub fn index_of(self, name: &str) -> Option<Var> {
        self.names()
            .iter()
            .position(|n| *n == name)
            .map(|i| Var::ALL[i])
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Option<VariableSet> {
        [VariableSet::Trace, VariableSet::Barred]
            .into_iter()
            .find(|set| {
                names.len() == 3 && set.names().iter().zip(names).all(|(a, b)| *a == b.as_ref())
            })
    }
}

/// Position of a variable inside a [`VariableSet`].
///
/// Over the trace set the three positions are `u`, `v`, `w`; the aliases
/// [`Var::U`], [`Var::V`], [`Var::W`] name them that way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Xp = 1,
    Y = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Xp, Var::Y];
    pub const U: Var = Var::X;
    pub const V: Var = Var::Xp;
    pub const W: Var = Var::Y;

    pub const fn index(self) -> usize {
        self as usize
    }
}

/// Exponent triple `(a, b, c)` of `x^a xp^b y^c`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x`, then `xp`, then `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(v: Var) -> Monomial {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; 3];
        for ((out, a), b) in e.iter_mut().zip(self.0).zip(other.0) {
            *out = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable-set mismatch: {0:?} vs {1:?}")]
    VariableSetMismatch(VariableSet, VariableSet),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("no exact quotient exists")]
    NotDivisible,
    #[error("leading coefficient in the third variable is not a unit constant")]
    LeadingCoefficientNotUnit,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial involves variables other than `{0}`")]
    NotUnivariate(&'static str),
}

/// A sparse polynomial in three variables with `BigInt` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PolyJson", try_from = "PolyJson")]
pub struct Polynomial {
    vars: VariableSet,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(vars: VariableSet) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: VariableSet) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: VariableSet, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, Monomial::ONE, c)
    }

    pub fn var(vars: VariableSet, v: Var) -> Self {
        Self::monomial(vars, Monomial::var(v), 1)
    }

    pub fn monomial(vars: VariableSet, m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { vars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I, C>(vars: VariableSet, terms: I) -> Self
    where
        I: IntoIterator<Item = ([u32; 3], C)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::zero(vars);
        for (e, c) in terms {
            p.add_term(Monomial(e), c.into());
        }
        p
    }

    /// Univariate polynomial in the third variable from ascending coefficients.
    pub fn univariate<C: Into<BigInt>>(
        vars: VariableSet,
        ascending: impl IntoIterator<Item = C>,
    ) -> Self {
        Self::from_terms(
            vars,
            ascending
                .into_iter()
                .enumerate()
                .map(|(k, c)| ([0, 0, k as u32], c)),
        )
    }

    pub fn variable_set(&self) -> VariableSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::ONE)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in `v`; `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// Coefficient of `y^k` as a polynomial in the first two variables.
    pub fn coeff_in_y(&self, k: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[2] == k)
            .map(|(m, c)| (Monomial([m.0[0], m.0[1], 0]), c.clone()))
            .collect();
        Polynomial {
            vars: self.vars,
            terms,
        }
    }

    /// Coefficient of the highest power of `y`; zero for the zero polynomial.
    pub fn leading_coeff_in_y(&self) -> Polynomial {
        match self.degree_in(Var::Y) {
            Some(d) => self.coeff_in_y(d),
            None => Polynomial::zero(self.vars),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VariableSetMismatch(self.vars, other.vars))
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut out = Polynomial::zero(self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_term(&self, m: Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars);
        }
        let terms = self.terms.iter().map(|(k, v)| (*k * m, v * c)).collect();
        Polynomial {
            vars: self.vars,
            terms,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        self.mul_term(Monomial::ONE, c)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Image under the ring homomorphism sending each variable to the given
    /// replacement, or to the same-position variable of `target` when the
    /// replacement is `None`.
    pub fn substitute(
        &self,
        target: VariableSet,
        assignments: &[Option<Polynomial>; 3],
    ) -> Result<Polynomial, PolyError> {
        for r in assignments.iter().flatten() {
            if r.vars != target {
                return Err(PolyError::VariableSetMismatch(target, r.vars));
            }
        }
        let images: Vec<Polynomial> = Var::ALL
            .iter()
            .zip(assignments)
            .map(|(v, a)| a.clone().unwrap_or_else(|| Polynomial::var(target, *v)))
            .collect();
        // powers[i][k] = images[i]^k, grown on demand
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|_| vec![Polynomial::one(target)])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for i in 0..3 {
                let k = m.0[i] as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k];
                }
            }
            out += &t;
        }
        Ok(out)
    }

    /// Substitutes integer values for some variables, keeping the rest.
    pub fn specialize(&self, values: [Option<i64>; 3]) -> Polynomial {
        let assignments = values.map(|v| v.map(|c| Polynomial::constant(self.vars, c)));
        self.substitute(self.vars, &assignments)
            .expect("replacements share the variable set")
    }

    pub fn evaluate(&self, point: &[BigInt; 3]) -> BigInt {
        let mut sum = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&m.0) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            sum += t;
        }
        sum
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let i = v.index();
        let mut out = Polynomial::zero(self.vars);
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut e = m.0;
                e[i] -= 1;
                out.add_term(Monomial(e), c * BigInt::from(m.0[i]));
            }
        }
        out
    }

    /// Exact quotient `f / g` over the integers.
    pub fn divide_exact(&self, g: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(g)?;
        let (lm_g, lc_g) = g.leading_term().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.vars);
        // If g | f, every intermediate remainder is a multiple of g, so its
        // leading term is divisible by lt(g).
        while let Some((lm, lc)) = rem.leading_term() {
            let m = lm.checked_div(lm_g).ok_or(PolyError::NotDivisible)?;
            let (c, r) = lc.div_rem(lc_g);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            rem -= &g.mul_term(m, &c);
            quot.add_term(m, c);
        }
        Ok(quot)
    }

    /// Division with remainder with respect to the third variable, for a
    /// divisor whose leading coefficient in that variable is `+1` or `-1`.
    pub fn div_rem_in_y(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        self.check_same(g)?;
        let d = g.degree_in(Var::Y).ok_or(PolyError::DivisionByZero)?;
        let lc = g.coeff_in_y(d);
        let unit = if lc.is_constant() && lc.constant_term().abs().is_one() {
            lc.constant_term()
        } else {
            return Err(PolyError::LeadingCoefficientNotUnit);
        };
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.vars);
        while let Some(k) = rem.degree_in(Var::Y).filter(|&k| k >= d) {
            let shift = Monomial([0, 0, k - d]);
            let t = rem.coeff_in_y(k).mul_term(shift, &unit);
            rem -= &(&t * g);
            quot += &t;
        }
        Ok((quot, rem))
    }

    /// Whether a polynomial in the third variable alone has no repeated
    /// factors over the rationals.
    pub fn is_squarefree_univariate(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let dense = self.to_dense_in_y()?;
        Ok(univariate::is_squarefree(&dense))
    }

    /// Ascending coefficient vector of a polynomial in the third variable alone.
    pub fn to_dense_in_y(&self) -> Result<Vec<BigInt>, PolyError> {
        if self.terms.keys().any(|m| m.0[0] != 0 || m.0[1] != 0) {
            return Err(PolyError::NotUnivariate(self.vars.names()[2]));
        }
        let len = self.degree_in(Var::Y).map_or(0, |d| d as usize + 1);
        let mut dense = vec![BigInt::zero(); len];
        for (m, c) in &self.terms {
            dense[m.0[2] as usize] = c.clone();
        }
        Ok(dense)
    }

    /// Same coefficients, reinterpreted over another variable set.
    pub fn relabel(&self, vars: VariableSet) -> Polynomial {
        Polynomial {
            vars,
            terms: self.terms.clone(),
        }
    }

    /// Swaps the first two variables.
    pub fn swap_first_two(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial([m.0[1], m.0[0], m.0[2]]), c.clone()))
            .collect();
        Polynomial {
            vars: self.vars,
            terms,
        }
    }

    pub fn parse(text: &str, vars: VariableSet) -> Result<Polynomial, ParseError> {
        parse::parse(text, vars)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = self.vars.names();
        for (i, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (k, name) in names.iter().enumerate() {
                match m.0[k] {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{:?}]({})", self.vars, self)
    }
}

impl std::str::FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s, VariableSet::Barred)
    }
}

// Operator forms panic on a variable-set mismatch; use the `try_*` methods
// when mixing sets is possible.
impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.check_same(rhs).expect("polynomial addition");
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.check_same(rhs).expect("polynomial subtraction");
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn eta_ab() -> Polynomial {
        p("y^2 + x^2 + xp^2 + x*xp*y - 4")
    }

    #[test]
    fn add_examples() {
        assert!((p("y^2") + p("-y^2")).is_zero());
        assert_eq!(p("x + 1") + p("x - 1"), p("2*x"));
        assert_eq!(
            eta_ab() + Polynomial::constant(VariableSet::Barred, 4),
            Polynomial::from_terms(
                VariableSet::Barred,
                [
                    ([0, 0, 2], 1),
                    ([2, 0, 0], 1),
                    ([0, 2, 0], 1),
                    ([1, 1, 1], 1)
                ]
            )
        );
    }

    #[test]
    fn mismatched_sets_are_rejected() {
        let a = Polynomial::var(VariableSet::Trace, Var::U);
        let b = Polynomial::var(VariableSet::Barred, Var::X);
        assert_eq!(
            a.try_add(&b),
            Err(PolyError::VariableSetMismatch(
                VariableSet::Trace,
                VariableSet::Barred
            ))
        );
        assert!(a.try_mul(&b).is_err());
        assert!(a.divide_exact(&b).is_err());
    }

    #[test]
    fn mul_examples() {
        let f = eta_ab();
        assert_eq!(&f * &Polynomial::one(VariableSet::Barred), f);
        assert_eq!(p("y - 2") * p("y + 2"), p("y^2 - 4"));
        // S_2 = y^2 - 1
        assert_eq!(p("y^2 - 4") * p("y^2 - 1"), p("y^4 - 5*y^2 + 4"));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let f = p("x - y + 2");
        assert_eq!(f.pow(3), &(&f * &f) * &f);
        assert_eq!(f.pow(0), Polynomial::one(VariableSet::Barred));
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(eta_ab().specialize([Some(0), Some(0), None]), p("y^2 - 4"));
        assert_eq!(
            eta_ab()
                .substitute(VariableSet::Barred, &[None, None, None])
                .unwrap(),
            eta_ab()
        );
        let uvw = Polynomial::from_terms(VariableSet::Trace, [([1, 1, 1], 1)]);
        let bar = |v| Some(-Polynomial::var(VariableSet::Barred, v));
        let img = uvw
            .substitute(
                VariableSet::Barred,
                &[bar(Var::X), bar(Var::Xp), bar(Var::Y)],
            )
            .unwrap();
        assert_eq!(img, p("-x*xp*y"));
    }

    #[test]
    fn substitute_rejects_foreign_replacement() {
        let r = Some(Polynomial::var(VariableSet::Trace, Var::U));
        assert!(eta_ab()
            .substitute(VariableSet::Barred, &[r, None, None])
            .is_err());
    }

    #[test]
    fn divide_exact_examples() {
        assert_eq!(p("y^2 - 4").divide_exact(&p("y - 2")).unwrap(), p("y + 2"));
        assert_eq!(
            p("y^2 - 4").divide_exact(&p("y - 1")),
            Err(PolyError::NotDivisible)
        );
        assert_eq!(
            p("y").divide_exact(&Polynomial::zero(VariableSet::Barred)),
            Err(PolyError::DivisionByZero)
        );
        assert_eq!(
            p("3*x + 1").divide_exact(&p("2")),
            Err(PolyError::NotDivisible)
        );
        assert!(Polynomial::zero(VariableSet::Barred)
            .divide_exact(&p("x"))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn div_rem_in_y_examples() {
        let g = p("y^2 - 4");
        let (q, r) = p("x*y + 1").div_rem_in_y(&g).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p("x*y + 1"));
        assert_eq!(p("y^3").div_rem_in_y(&g).unwrap(), (p("y"), p("4*y")));
        let e = eta_ab();
        assert_eq!(
            e.div_rem_in_y(&e).unwrap(),
            (
                Polynomial::one(VariableSet::Barred),
                Polynomial::zero(VariableSet::Barred)
            )
        );
        assert_eq!(
            p("y^3").div_rem_in_y(&p("2*y^2 + 1")),
            Err(PolyError::LeadingCoefficientNotUnit)
        );
        assert_eq!(
            p("y^3").div_rem_in_y(&p("x*y^2 + 1")),
            Err(PolyError::LeadingCoefficientNotUnit)
        );
        let (q, r) = p("y^3").div_rem_in_y(&p("-y + x")).unwrap();
        assert_eq!(&(&p("-y + x") * &q) + &r, p("y^3"));
        assert_eq!(r, p("x^3"));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("y^2 - 4").derivative(Var::Y), p("2*y"));
        assert!(p("x*xp").derivative(Var::Y).is_zero());
        assert_eq!(p("y^3 - 4*y").derivative(Var::Y), p("3*y^2 - 4"));
        assert_eq!(p("x^2*xp^3").derivative(Var::Xp), p("3*x^2*xp^2"));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(p("y^3 - 4*y").is_squarefree_univariate(), Ok(true));
        assert_eq!(p("y^2 - 4*y + 4").is_squarefree_univariate(), Ok(false));
        assert_eq!(p("y^4 - 5*y^2 + 4").is_squarefree_univariate(), Ok(true));
        assert_eq!(p("7").is_squarefree_univariate(), Ok(true));
        assert_eq!(
            Polynomial::zero(VariableSet::Barred).is_squarefree_univariate(),
            Err(PolyError::ZeroPolynomial)
        );
        assert_eq!(
            p("x*y").is_squarefree_univariate(),
            Err(PolyError::NotUnivariate("y"))
        );
        // (2y+1)^2 (y-3): repeated factor with non-monic content
        let f = &p("2*y + 1").pow(2) * &p("y - 3");
        assert_eq!(f.is_squarefree_univariate(), Ok(false));
    }

    #[test]
    fn canonical_text_order() {
        assert_eq!(eta_ab().to_text(), "x*xp*y + x^2 + xp^2 + y^2 - 4");
        assert_eq!(p("-4 + 2*y^3*x").to_text(), "2*x*y^3 - 4");
        assert_eq!(Polynomial::zero(VariableSet::Barred).to_text(), "0");
        assert_eq!(
            Polynomial::from_terms(VariableSet::Trace, [([1, 1, 1], -1), ([0, 0, 0], 2)]).to_text(),
            "-u*v*w + 2"
        );
    }

    #[test]
    fn evaluate_at_point() {
        let pt = [BigInt::from(1), BigInt::from(-2), BigInt::from(3)];
        // 9 + 1 + 4 + (1)(-2)(3) - 4
        assert_eq!(eta_ab().evaluate(&pt), BigInt::from(4));
    }

    #[test]
    fn big_coefficients_survive() {
        let big = p("123456789012345678901234567890*x + 1");
        let sq = &big * &big;
        assert_eq!(
            sq.coeff(&Monomial([2, 0, 0])).to_string(),
            "15241578753238836750495351562536198787501905199875019052100"
        );
        assert_eq!(sq.divide_exact(&big).unwrap(), big);
    }
}
