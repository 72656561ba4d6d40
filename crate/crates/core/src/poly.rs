//! Sparse polynomials with exact big-integer coefficients.
//!
//! Exponents are stored in half-units so that `λ^{3/2}` is the key `3`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// `Σ c_e x^{e/2}` with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfIntPolynomial {
    coeffs: BTreeMap<u64, BigInt>,
}

impl HalfIntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · x^{half_units/2}`.
    pub fn monomial(half_units: u64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(half_units, c);
        p
    }

    /// `c · x^e` for an integer exponent.
    pub fn integer_monomial(e: u64, c: impl Into<BigInt>) -> Self {
        Self::monomial(2 * e, c)
    }

    /// Builds a polynomial with integer exponents from ascending coefficients.
    pub fn from_integer_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(2 * e as u64, c);
        }
        p
    }

    pub fn add_term(&mut self, half_units: u64, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(half_units).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&half_units);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^{half_units/2}`.
    pub fn coeff(&self, half_units: u64) -> BigInt {
        self.coeffs.get(&half_units).cloned().unwrap_or_default()
    }

    /// `(half_units, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Highest exponent in half-units.
    pub fn degree_half_units(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn lowest_half_units(&self) -> Option<u64> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Coefficients read the same from both ends: `c_e = c_{d-e}` where `d`
    /// is the degree and the lowest exponent is zero.
    pub fn is_palindromic(&self) -> bool {
        let Some(d) = self.degree_half_units() else {
            return true;
        };
        if self.lowest_half_units() != Some(0) {
            return false;
        }
        self.coeffs
            .iter()
            .all(|(&e, c)| self.coeffs.get(&(d - e)) == Some(c))
    }

    pub fn has_only_integer_exponents(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// Value at `x = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Canonical text form in variable `var`, e.g. `1 + 2*λ + λ^{3/2}`
    /// rendered as `1 + 2*λ + λ^3/2`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (&e, c)) in self.coeffs.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let power = power_text(var, e);
            match (power, magnitude.is_one()) {
                (None, _) => out.push_str(&magnitude.to_string()),
                (Some(p), true) => out.push_str(&p),
                (Some(p), false) => {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                    out.push_str(&p);
                }
            }
        }
        out
    }

    /// `{"var": var, "half_units": true, "terms": [[2e, c], …]}`.
    pub fn to_json(&self, var: &str) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&e, c)| json!([e, big_to_json(c)]))
            .collect();
        json!({"var": var, "half_units": true, "terms": terms})
    }
}

fn power_text(var: &str, half_units: u64) -> Option<String> {
    match half_units {
        0 => None,
        2 => Some(var.to_string()),
        e if e % 2 == 0 => Some(format!("{var}^{}", e / 2)),
        e => Some(format!("{var}^{e}/2")),
    }
}

fn big_to_json(c: &BigInt) -> Value {
    // arbitrary_precision keeps the digits exact.
    Value::Number(c.to_string().parse().expect("integer literal"))
}

impl fmt::Display for HalfIntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("λ"))
    }
}

impl AddAssign<&HalfIntPolynomial> for HalfIntPolynomial {
    fn add_assign(&mut self, rhs: &HalfIntPolynomial) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl Add for HalfIntPolynomial {
    type Output = HalfIntPolynomial;

    fn add(mut self, rhs: HalfIntPolynomial) -> HalfIntPolynomial {
        self += &rhs;
        self
    }
}

impl Neg for HalfIntPolynomial {
    type Output = HalfIntPolynomial;

    fn neg(self) -> HalfIntPolynomial {
        HalfIntPolynomial {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for HalfIntPolynomial {
    type Output = HalfIntPolynomial;

    fn sub(self, rhs: HalfIntPolynomial) -> HalfIntPolynomial {
        self + (-rhs)
    }
}

impl Mul for &HalfIntPolynomial {
    type Output = HalfIntPolynomial;

    fn mul(self, rhs: &HalfIntPolynomial) -> HalfIntPolynomial {
        let mut out = HalfIntPolynomial::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for HalfIntPolynomial {
    type Output = HalfIntPolynomial;

    fn mul(self, rhs: HalfIntPolynomial) -> HalfIntPolynomial {
        &self * &rhs
    }
}

/// `Σ c λ^{a/2} q^b`, keyed by `(a, b)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(u64, u64), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, lambda_half_units: u64, q_exp: u64, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let key = (lambda_half_units, q_exp);
        let slot = self.coeffs.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn merge(&mut self, other: &BivariatePolynomial) {
        for (&(a, b), c) in &other.coeffs {
            self.add_term(a, b, c.clone());
        }
    }

    pub fn coeff(&self, lambda_half_units: u64, q_exp: u64) -> BigInt {
        self.coeffs
            .get(&(lambda_half_units, q_exp))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Substitutes `λ = value`, giving a polynomial in `q`. Only defined
    /// when every `λ` exponent is an integer (or `value` is zero or one).
    pub fn specialize_lambda(&self, value: i64) -> Option<HalfIntPolynomial> {
        let mut out = HalfIntPolynomial::zero();
        for (&(a, b), c) in &self.coeffs {
            if a % 2 == 1 && value != 0 && value != 1 {
                return None;
            }
            let factor = if a == 0 {
                BigInt::one()
            } else if a % 2 == 1 {
                BigInt::from(value)
            } else {
                num_traits::pow(BigInt::from(value), (a / 2) as usize)
            };
            out.add_term(2 * b, c * factor);
        }
        Some(out)
    }

    /// Substitutes `q = 1`, giving a polynomial in `λ`.
    pub fn specialize_q_at_one(&self) -> HalfIntPolynomial {
        let mut out = HalfIntPolynomial::zero();
        for (&(a, _), c) in &self.coeffs {
            out.add_term(a, c.clone());
        }
        out
    }

    /// Terms in ascending `(λ, q)` exponent order, e.g. `1 + λ*q`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (&(a, b), c)) in self.coeffs.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if let Some(p) = power_text("λ", a) {
                factors.push(p);
            }
            if let Some(p) = power_text("q", 2 * b) {
                factors.push(p);
            }
            if factors.is_empty() || !magnitude.is_one() {
                factors.insert(0, magnitude.to_string());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// `{"vars": ["lambda","q"], "half_units": true, "terms": [[2a, b, c], …]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&(a, b), c)| json!([a, b, big_to_json(c)]))
            .collect();
        json!({"vars": ["lambda", "q"], "half_units": true, "terms": terms})
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
