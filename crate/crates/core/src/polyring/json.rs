//! JSON form: `{ "vars": [..3 names..], "terms": [{ "coeff": "<decimal>", "exp": [a,b,c] }] }`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Monomial, Polynomial, VariableSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exp: [u32; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<Polynomial> for PolyJson {
    fn from(p: Polynomial) -> Self {
        PolyJson::from(&p)
    }
}

impl From<&Polynomial> for PolyJson {
    fn from(p: &Polynomial) -> Self {
        PolyJson {
            vars: p.vars.names().iter().map(|s| s.to_string()).collect(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    exp: m.0,
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for Polynomial {
    type Error = String;

    fn try_from(j: PolyJson) -> Result<Self, String> {
        let vars = VariableSet::from_names(&j.vars)
            .ok_or_else(|| format!("unknown variable list {:?}", j.vars))?;
        let mut terms = BTreeMap::new();
        for t in j.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| format!("invalid coefficient {:?}", t.coeff))?;
            if c.is_zero() {
                return Err(format!("zero coefficient for exponent {:?}", t.exp));
            }
            if terms.insert(Monomial(t.exp), c).is_some() {
                return Err(format!("duplicate exponent {:?}", t.exp));
            }
        }
        Ok(Polynomial { vars, terms })
    }
}

impl Polynomial {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Polynomial, String> {
        let j: PolyJson = serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
        Polynomial::try_from(j)
    }
}
