//! Sparse exact-rational linear combinations of permutations, and
//! polynomials in one variable u with such coefficients.
//!
//! Coefficients are arbitrary-precision rationals throughout: hook products
//! and n!-scale denominators overflow fixed-width integers already at n = 6.
//! Zero coefficients are purged eagerly at every operation so that equality
//! is coefficient-wise.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Exact rational scalar; always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational p/q.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    Rational::from_str(text.trim()).map_err(|e| Error::Parse(format!("bad rational {text:?}: {e}")))
}

/// An element of the rational group algebra of S_n: a sparse map from
/// permutations of degree n to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The identity of the algebra (the identity permutation with coefficient 1).
    pub fn one(degree: usize) -> Self {
        Self::from_perm(Permutation::identity(degree))
    }

    pub fn from_perm(p: Permutation) -> Self {
        let mut terms = BTreeMap::new();
        let degree = p.degree();
        terms.insert(p, Rational::one());
        GroupAlgebraElement { degree, terms }
    }

    /// r times the identity permutation.
    pub fn scalar(degree: usize, r: Rational) -> Self {
        let mut out = Self::zero(degree);
        out.add_term(Permutation::identity(degree), r);
        out
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, Rational)>,
    {
        let mut out = Self::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a permutation (zero if absent).
    pub fn coeff(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical (one-line lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * r)).collect(),
        }
    }

    /// Ring product, distributing over the sparse terms of both factors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.degree);
        for (p, cp) in &self.terms {
            for (q, cq) in &other.terms {
                let r = p.compose(q)?;
                out.add_term(r, cp * cq);
            }
        }
        Ok(out)
    }

    /// Embeds into the group algebra of S_m, m ≥ n, fixing new points.
    pub fn embed(&self, m: usize) -> Result<Self> {
        let mut out = Self::zero(m);
        for (p, c) in &self.terms {
            out.add_term(p.embed(m)?, c.clone());
        }
        Ok(out)
    }

    /// JSON form: {"n": n, "terms": [{"perm": "<cycles>", "coeff": "p/q"}, …]}
    /// with terms in canonical permutation order.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.degree,
            "terms": self
                .terms
                .iter()
                .map(|(p, c)| json!({"perm": p.to_string(), "coeff": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing \"n\"".into()))? as usize;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"terms\"".into()))?;
        let mut out = Self::zero(n);
        for t in terms {
            let perm = t
                .get("perm")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("term missing \"perm\"".into()))?;
            let coeff = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("term missing \"coeff\"".into()))?;
            out.add_term(Permutation::parse_cycles(perm, n)?, parse_rational(coeff)?);
        }
        Ok(out)
    }
}

// Display as e.g. "e + (1 2) - 1/2 (1 3)".
impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{mag} {p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial in one variable u with group-algebra coefficients, dense in
/// powers of u with trailing zero coefficients trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GAPolynomial {
    degree: usize,
    coeffs: Vec<GroupAlgebraElement>,
}

impl GAPolynomial {
    pub fn zero(degree: usize) -> Self {
        GAPolynomial {
            degree,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(elem: GroupAlgebraElement) -> Self {
        let degree = elem.degree();
        let mut p = GAPolynomial {
            degree,
            coeffs: vec![elem],
        };
        p.trim();
        p
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<GroupAlgebraElement>) -> Result<Self> {
        for c in &coeffs {
            if c.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: c.degree(),
                });
            }
        }
        let mut p = GAPolynomial { degree, coeffs };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(GroupAlgebraElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in u, None for the zero polynomial.
    pub fn deg_u(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of u^k.
    pub fn coeff_u(&self, k: usize) -> GroupAlgebraElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| GroupAlgebraElement::zero(self.degree))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coeff_u(k).add(&other.coeff_u(k)))
            .collect::<Result<_>>()?;
        GAPolynomial::from_coeffs(self.degree, coeffs)
    }

    /// Product of polynomials; coefficient order is left·right.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(GAPolynomial::zero(self.degree));
        }
        let mut coeffs =
            vec![GroupAlgebraElement::zero(self.degree); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        GAPolynomial::from_coeffs(self.degree, coeffs)
    }

    /// Right-multiplies by the linear polynomial c0 + c1·u.
    pub fn mul_linear(
        &self,
        c0: &GroupAlgebraElement,
        c1: &GroupAlgebraElement,
    ) -> Result<Self> {
        let lin = GAPolynomial::from_coeffs(self.degree, vec![c0.clone(), c1.clone()])?;
        self.mul(&lin)
    }

    /// Horner evaluation at a rational point; exact.
    pub fn eval(&self, u0: &Rational) -> GroupAlgebraElement {
        let mut acc = GroupAlgebraElement::zero(self.degree);
        for c in self.coeffs.iter().rev() {
            acc = acc
                .scale(u0)
                .add(c)
                .expect("coefficients share the polynomial's degree");
        }
        acc
    }

    /// Synthetic division by (u − c): returns (Q, R) with
    /// self = (u − c)·Q + R and R constant in u. Exact; a nonzero R reports
    /// the divisibility failure to the caller.
    pub fn divide_linear(&self, c: &Rational) -> (GAPolynomial, GroupAlgebraElement) {
        if self.coeffs.is_empty() {
            return (
                GAPolynomial::zero(self.degree),
                GroupAlgebraElement::zero(self.degree),
            );
        }
        let mut quotient = vec![GroupAlgebraElement::zero(self.degree); self.coeffs.len() - 1];
        let mut acc = GroupAlgebraElement::zero(self.degree);
        for k in (0..self.coeffs.len()).rev() {
            acc = self.coeffs[k]
                .add(&acc.scale(c))
                .expect("coefficients share the polynomial's degree");
            if k == 0 {
                return (
                    GAPolynomial::from_coeffs(self.degree, quotient)
                        .expect("quotient coefficients share degree"),
                    acc,
                );
            }
            quotient[k - 1] = acc.clone();
        }
        unreachable!()
    }
}
