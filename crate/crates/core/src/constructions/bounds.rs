//! Closed-form bounds on the largest pebbling number among strongly
//! connected digraphs of order `n` and strong diameter `d`. All arithmetic
//! is exact.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::digraph::{strong_diameter, Digraph};
use crate::error::{Error, Result};
use crate::pebbling::PebblingNumberResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    /// `(2^(d-1) - 1) floor((n-1)/2) + 2^((n-2) mod d) - 1`.
    Statement,
    /// `k (2^d - 1) + 1` with `k = (n-1)/d`.
    ConstructionCertified,
    /// `n (2^d / d - 1) + 2^(4d+1) (1 - 1/d)`.
    UpperBound,
}

/// An exact rational bound with its floor and ceiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue {
    pub formula: FormulaId,
    pub value: BigRational,
    pub floor: BigInt,
    pub ceil: BigInt,
}

impl BoundValue {
    fn new(formula: FormulaId, value: BigRational) -> Self {
        BoundValue {
            formula,
            floor: value.floor().to_integer(),
            ceil: value.ceil().to_integer(),
            value,
        }
    }

    fn integer(formula: FormulaId, value: BigInt) -> Self {
        BoundValue::new(formula, BigRational::from_integer(value))
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_integer() {
            write!(f, "{}", self.value)
        } else {
            write!(
                f,
                "{} (floor {}, ceil {})",
                self.value, self.floor, self.ceil
            )
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("BoundValue", 4)?;
        s.serialize_field("formula", &self.formula)?;
        s.serialize_field("value", &self.value.to_string())?;
        s.serialize_field("floor", &self.floor.to_string())?;
        s.serialize_field("ceil", &self.ceil.to_string())?;
        s.end()
    }
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Lower-bound expression as stated for general `(n, d)`.
pub fn bound_dboundsharp_statement(n: usize, d: usize) -> Result<BoundValue> {
    if n < 2 || d < 1 {
        return Err(Error::InvalidParameter(
            "statement bound needs n >= 2, d >= 1".into(),
        ));
    }
    let value = (pow2(d - 1) - 1) * BigInt::from((n - 1) / 2) + pow2((n - 2) % d) - 1;
    Ok(BoundValue::integer(FormulaId::Statement, value))
}

/// The lower bound certified by the uniform layered construction with
/// `k = (n-1)/d` vertices per layer.
pub fn bound_construction_certified(n: usize, d: usize) -> Result<BoundValue> {
    if d < 2 || n < 2 || !(n - 1).is_multiple_of(d) {
        return Err(Error::InvalidParameter(format!(
            "certified bound needs d >= 2 dividing n - 1 (n = {n}, d = {d})"
        )));
    }
    let k = BigInt::from((n - 1) / d);
    Ok(BoundValue::integer(
        FormulaId::ConstructionCertified,
        k * (pow2(d) - 1) + 1,
    ))
}

/// The general upper bound `n (2^d/d - 1) + 2^(4d+1) (1 - 1/d)`.
pub fn bound_dboundupper(n: usize, d: usize) -> Result<BoundValue> {
    if n < 1 || d < 1 {
        return Err(Error::InvalidParameter(
            "upper bound needs n >= 1, d >= 1".into(),
        ));
    }
    let one = BigRational::one();
    let dr = BigRational::from_integer(BigInt::from(d));
    let per_vertex = BigRational::from_integer(pow2(d)) / &dr - &one;
    let constant = BigRational::from_integer(pow2(4 * d + 1)) * (&one - &one / &dr);
    let value = BigRational::from_integer(BigInt::from(n)) * per_vertex + constant;
    Ok(BoundValue::new(FormulaId::UpperBound, value))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub diameter: u32,
    pub pi: u32,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    /// Every applicable check passed.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| !c.applicable || c.pass)
    }
}

/// Checks a computed pebbling number against the inequalities that apply to
/// the graph: `pi <= n + 1` (oriented, diameter 2), `pi < 3n/2` (diameter
/// 2) and `pi <= ceil(upper bound)` (diameter at least 1).
pub fn verify_bounds(graph: &Digraph, result: &PebblingNumberResult) -> Result<BoundsReport> {
    let d = strong_diameter(graph).ok_or(Error::NotStronglyConnected)?;
    let n = graph.n();
    let pi = result.pi;
    let mut checks = Vec::new();

    let oriented_d2 = graph.is_oriented() && d == 2;
    checks.push(BoundCheck {
        name: "thm_noBiN+1",
        applicable: oriented_d2,
        pass: !oriented_d2 || (pi as usize) <= n + 1,
        detail: format!("pi = {pi} <= n + 1 = {}", n + 1),
    });

    checks.push(BoundCheck {
        name: "thm_mixed2_bound",
        applicable: d == 2,
        pass: d != 2 || 2 * (pi as usize) < 3 * n,
        detail: format!(
            "pi = {pi} < 3n/2 = {}",
            BigRational::new(BigInt::from(3 * n), BigInt::from(2))
        ),
    });

    if d >= 1 {
        let bound = bound_dboundupper(n, d as usize)?;
        let ok = BigInt::from(pi) <= bound.ceil;
        checks.push(BoundCheck {
            name: "thm_dboundupper",
            applicable: true,
            pass: ok,
            detail: format!("pi = {pi} <= ceil({}) = {}", bound.value, bound.ceil),
        });
    } else {
        checks.push(BoundCheck {
            name: "thm_dboundupper",
            applicable: false,
            pass: true,
            detail: "single vertex".into(),
        });
    }
    Ok(BoundsReport {
        n,
        diameter: d,
        pi,
        checks,
    })
}
