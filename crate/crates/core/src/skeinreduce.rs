//! Normal forms in the `t = -1` skein algebra of a two-bridge link complement.
//!
//! The skein module is free with basis `x^a xp^b y^c`, `c <= p`. At `t = -1`
//! it is the character ring `Z[x, xp, y] / (η)`, and since η has leading
//! coefficient `+1` in `y`, division with remainder in `y` gives the unique
//! representative of `y`-degree at most `p`.

use crate::charvariety::eta;
use crate::linkparam::TwoBridgeParam;
use crate::polyring::{Monomial, PolyError, Polynomial, Var};

/// The monomial basis `{x^a xp^b y^c : c <= p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisDescriptor {
    pub param: TwoBridgeParam,
    pub y_degree_bound: u32,
}

impl BasisDescriptor {
    pub fn new(param: TwoBridgeParam) -> BasisDescriptor {
        BasisDescriptor {
            param,
            y_degree_bound: param.p(),
        }
    }

    /// Basis monomials of total degree at most `max_total_degree`, by
    /// ascending degree and, within a degree, descending in `x` then `xp`.
    pub fn monomials(&self, max_total_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=max_total_degree {
            for a in (0..=d).rev() {
                for b in (0..=d - a).rev() {
                    let c = d - a - b;
                    if c <= self.y_degree_bound {
                        out.push(Monomial([a, b, c]));
                    }
                }
            }
        }
        out
    }
}

pub fn basis_monomials(param: &TwoBridgeParam, max_total_degree: u32) -> Vec<Monomial> {
    BasisDescriptor::new(*param).monomials(max_total_degree)
}

/// The quotient `Z[x, xp, y] / (η)` for one link, with η computed once.
#[derive(Clone, Debug)]
pub struct SkeinQuotient {
    param: TwoBridgeParam,
    eta: Polynomial,
}

impl SkeinQuotient {
    pub fn new(param: TwoBridgeParam) -> SkeinQuotient {
        SkeinQuotient {
            eta: eta(&param),
            param,
        }
    }

    pub fn param(&self) -> &TwoBridgeParam {
        &self.param
    }

    pub fn eta(&self) -> &Polynomial {
        &self.eta
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        Ok(f.div_rem_in_y(&self.eta)?.1)
    }

    pub fn is_zero(&self, f: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether `f` is already a combination of basis monomials.
    pub fn is_reduced(&self, f: &Polynomial) -> bool {
        f.degree_in(Var::Y).is_none_or(|d| d <= self.param.p())
    }
}

pub fn normal_form(param: &TwoBridgeParam, f: &Polynomial) -> Result<Polynomial, PolyError> {
    SkeinQuotient::new(*param).normal_form(f)
}

pub fn is_zero_in_character_ring(
    param: &TwoBridgeParam,
    f: &Polynomial,
) -> Result<bool, PolyError> {
    SkeinQuotient::new(*param).is_zero(f)
}
