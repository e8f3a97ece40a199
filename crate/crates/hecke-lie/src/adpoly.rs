//! Polynomial identities `Ad(g) = P(ad(g), …, ad(g^{n−1}))` for `g` of
//! order `n`.
//!
//! Everything reduces to the algebra `C = ℚ[X,Y]/(Xⁿ−1, Yⁿ−1)`, where `X` and
//! `Y` stand for left and right multiplication by `g`: `ad(gᵏ)` becomes
//! `D_k = Xᵏ − Yᵏ` and `Ad(g)` becomes `Z = XY^{n−1}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::exactnum::{Cyclotomic, Rational};
use crate::groupkit::FiniteMatrixGroup;
use crate::matlin::{Matrix, TrackedSpan};
use crate::{Error, Result};

/// An element of `ℚ[X,Y]/(Xⁿ−1, Yⁿ−1)`, coefficient of `XᵃYᵇ` at `a·n + b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientElement {
    pub n: usize,
    pub coeffs: Vec<Rational>,
}

impl QuotientElement {
    pub fn zero(n: usize) -> Self {
        QuotientElement { n, coeffs: vec![Rational::zero(); n * n] }
    }

    pub fn monomial(n: usize, a: usize, b: usize) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[(a % n) * n + b % n] = Rational::one();
        z
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, 0)
    }

    /// `Z = XY^{n−1}`.
    pub fn z(n: usize) -> Self {
        Self::monomial(n, 1, n - 1)
    }

    pub fn coeff(&self, a: usize, b: usize) -> &Rational {
        &self.coeffs[a * self.n + b]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        QuotientElement { n: self.n, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuotientElement { n: self.n, coeffs: self.coeffs.iter().map(|a| a * r).collect() }
    }

    /// Exchanges `X` and `Y`.
    pub fn swap(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for a in 0..n {
            for b in 0..n {
                out.coeffs[b * n + a] = self.coeff(a, b).clone();
            }
        }
        out
    }

    fn as_vector(&self) -> Vec<Cyclotomic> {
        self.coeffs.iter().map(|c| Cyclotomic::rational(c.clone())).collect()
    }

    fn from_vector(n: usize, v: &[Cyclotomic]) -> Self {
        QuotientElement { n, coeffs: v.iter().map(|c| c.as_rational().cloned().expect("rational entries")).collect() }
    }
}

pub fn q_mul(a: &QuotientElement, b: &QuotientElement) -> QuotientElement {
    let n = a.n;
    let mut out = QuotientElement::zero(n);
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (a1, b1) = (i / n, i % n);
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let (a2, b2) = (j / n, j % n);
            let k = ((a1 + a2) % n) * n + (b1 + b2) % n;
            out.coeffs[k] = out.coeffs[k].add_mul(x, y);
        }
    }
    out
}

/// `D_k = Xᵏ − Yᵏ`.
pub fn difference_gen(n: usize, k: usize) -> QuotientElement {
    let mut d = QuotientElement::monomial(n, k, 0);
    let i = k % n;
    d.coeffs[i] = &d.coeffs[i] - &Rational::one();
    d
}

/// A rational polynomial in `X₁, …, X_{n−1}`, `X_k` standing for `ad(gᵏ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdPolynomial {
    pub n: usize,
    /// Exponent vector of length `n − 1` to coefficient.
    #[serde(with = "term_list")]
    pub terms: BTreeMap<Vec<u32>, Rational>,
    pub single_variable: bool,
}

impl AdPolynomial {
    /// Builds from `(numerator, [(variable, exponent), …])` terms over a
    /// common denominator.
    pub fn from_scaled(n: usize, denominator: i64, terms: &[(i64, &[(usize, u32)])]) -> Self {
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (c, mono) in terms {
            let mut e = vec![0u32; n.saturating_sub(1)];
            for &(var, exp) in mono.iter() {
                e[var - 1] += exp;
            }
            let entry = map.entry(e).or_insert_with(Rational::zero);
            *entry = &*entry + &Rational::new(*c, denominator);
        }
        map.retain(|_, c| !c.is_zero());
        let single = map.keys().all(|e| e.iter().skip(1).all(|&x| x == 0));
        AdPolynomial { n, terms: map, single_variable: single }
    }

    /// `P = 1`, the empty-product identity for `n = 1`.
    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; n.saturating_sub(1)], Rational::one());
        AdPolynomial { n, terms, single_variable: true }
    }

    pub fn common_denominator(&self) -> num_bigint::BigInt {
        self.terms.values().fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(&c.denom()))
    }

    /// `P` evaluated at `X_k ↦ D_k`.
    pub fn evaluate(&self) -> QuotientElement {
        let n = self.n;
        let d: Vec<QuotientElement> = (1..n).map(|k| difference_gen(n, k)).collect();
        let mut out = QuotientElement::zero(n);
        for (e, c) in &self.terms {
            let mut m = QuotientElement::one(n);
            for (k, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    m = q_mul(&m, &d[k]);
                }
            }
            out = out.add(&m.scale(c));
        }
        out
    }
}

mod term_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::exactnum::Rational;

    #[derive(Serialize, Deserialize)]
    struct Term {
        exponents: Vec<u32>,
        coeff: Rational,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Vec<u32>, Rational>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Term> = m.iter().map(|(e, c)| Term { exponents: e.clone(), coeff: c.clone() }).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vec<u32>, Rational>, D::Error> {
        Ok(Vec::<Term>::deserialize(d)?.into_iter().map(|t| (t.exponents, t.coeff)).collect())
    }
}

fn monomial_text(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(k, &p)| if p == 1 { format!("X{}", k + 1) } else { format!("X{}^{p}", k + 1) })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for AdPolynomial {
    /// `D*Ad = c0 + c1*X1^a*X2^b + …` with integer coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.common_denominator();
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.iter().map(|&x| x as usize).sum::<usize>(), std::cmp::Reverse((*e).clone())));
        let mut out = String::new();
        for (i, e) in keys.iter().enumerate() {
            let c = self.terms[*e].to_big() * num_rational::BigRational::from_integer(den.clone());
            let c = c.to_integer();
            let mono = monomial_text(e);
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c) };
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mag}*{mono}"),
            };
            if i == 0 {
                out.push_str(if sign == "-" { "-" } else { "" });
            } else {
                out.push_str(&format!(" {sign} "));
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        if den.is_one() {
            write!(f, "Ad = {out}")
        } else {
            write!(f, "{den}*Ad = {out}")
        }
    }
}

pub fn verify_identity(p: &AdPolynomial) -> bool {
    if p.n < 2 {
        return p == &AdPolynomial::one(p.n);
    }
    p.evaluate() == QuotientElement::z(p.n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Multi,
    Single,
}

/// Evidence that `Z` is not in the subalgebra generated by `D₁`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ImpossibilityCertificate {
    pub n: usize,
    /// Monomials in `X₁` whose values span the subalgebra.
    pub basis: Vec<Vec<u32>>,
    pub span_dim: usize,
    /// Reduction of `Z` against the span; nonzero.
    pub residue: QuotientElement,
    /// Whether the span is stable under `X ↔ Y`.
    pub span_symmetric: bool,
    /// Whether `Z` equals its image under `X ↔ Y`.
    pub z_symmetric: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum Expression {
    Polynomial(AdPolynomial),
    Impossible(ImpossibilityCertificate),
}

struct Subalgebra {
    n: usize,
    span: TrackedSpan,
    tags: Vec<Vec<u32>>,
}

fn generated_subalgebra(n: usize, vars: &[usize]) -> Result<Subalgebra> {
    let dk: Vec<QuotientElement> =
        (0..n).map(|k| if k == 0 { QuotientElement::one(n) } else { difference_gen(n, k) }).collect();
    let mut span = TrackedSpan::new(n * n);
    let mut tags: Vec<Vec<u32>> = Vec::new();
    let mut values: Vec<QuotientElement> = Vec::new();
    let one = QuotientElement::one(n);
    span.insert(one.as_vector())?;
    tags.push(vec![0; n - 1]);
    values.push(one);
    let mut frontier: Vec<usize> = vec![0];
    while !frontier.is_empty() {
        let mut cands: BTreeSet<std::cmp::Reverse<Vec<u32>>> = BTreeSet::new();
        let mut origin: BTreeMap<Vec<u32>, (usize, usize)> = BTreeMap::new();
        for &i in &frontier {
            for &k in vars {
                let mut e = tags[i].clone();
                e[k - 1] += 1;
                origin.entry(e.clone()).or_insert((i, k));
                cands.insert(std::cmp::Reverse(e));
            }
        }
        let mut next = Vec::new();
        for std::cmp::Reverse(e) in cands {
            let (i, k) = origin[&e];
            let val = q_mul(&values[i], &dk[k]);
            if span.insert(val.as_vector())?.is_some() {
                tags.push(e);
                values.push(val);
                next.push(tags.len() - 1);
            }
        }
        frontier = next;
    }
    Ok(Subalgebra { n, span, tags })
}

/// Writes `Z` as a polynomial in the `D_k` (all of them, or only `D₁`).
pub fn express_z(n: usize, mode: Mode) -> Result<Expression> {
    if n < 2 {
        return Err(Error::Domain("express_z needs n ≥ 2".into()));
    }
    let vars: Vec<usize> = match mode {
        Mode::Multi => (1..n).collect(),
        Mode::Single => vec![1],
    };
    let sub = generated_subalgebra(n, &vars)?;
    let z = QuotientElement::z(n);
    match sub.span.express(&z.as_vector()) {
        Some(coeffs) => {
            let mut terms = BTreeMap::new();
            for (c, tag) in coeffs.iter().zip(&sub.tags) {
                let r = c.as_rational().cloned().expect("rational span");
                if !r.is_zero() {
                    terms.insert(tag.clone(), r);
                }
            }
            let p = AdPolynomial { n, terms, single_variable: mode == Mode::Single };
            if !verify_identity(&p) {
                return Err(Error::Consistency(format!("expression for n = {n} does not verify")));
            }
            Ok(Expression::Polynomial(p))
        }
        None if mode == Mode::Single => {
            let residue = QuotientElement::from_vector(sub.n, &sub.span.residue(&z.as_vector()));
            let basis = sub.span.basis();
            let span_symmetric =
                basis.vectors().iter().all(|v| basis.contains(&QuotientElement::from_vector(n, v).swap().as_vector()));
            Ok(Expression::Impossible(ImpossibilityCertificate {
                n,
                span_dim: sub.tags.len(),
                basis: sub.tags,
                residue,
                span_symmetric,
                z_symmetric: z.swap() == z,
            }))
        }
        None => Err(Error::Consistency(format!("Z is not generated by the D_k for n = {n}"))),
    }
}

fn group_algebra_operator(g: &FiniteMatrixGroup, f: impl Fn(usize) -> Vec<(usize, i64)>) -> Matrix {
    let n = g.order();
    let mut m = Matrix::zeros(n, n);
    for b in 0..n {
        for (row, c) in f(b) {
            m[(row, b)] = &m[(row, b)] + &Cyclotomic::from_int(c);
        }
    }
    m
}

/// Checks `Ad(x) = P(ad(x), …, ad(x^{n−1}))` on the group algebra of `g`.
pub fn verify_on_group(p: &AdPolynomial, g: &FiniteMatrixGroup, x: usize) -> Result<bool> {
    let n = g.element_order(x) as usize;
    if n != p.n {
        return Err(Error::Precondition(format!("element of order {n} for a polynomial of order {}", p.n)));
    }
    let xi = g.inv(x);
    let ad_big = group_algebra_operator(g, |b| vec![(g.mul(g.mul(x, b), xi), 1)]);
    let ads: Vec<Matrix> = (1..n)
        .map(|k| {
            let y = g.power(x, k as u32);
            group_algebra_operator(g, |b| vec![(g.mul(y, b), 1), (g.mul(b, y), -1)])
        })
        .collect();
    let size = g.order();
    let mut total = Matrix::zeros(size, size);
    let mut cache: BTreeMap<(usize, u32), Matrix> = BTreeMap::new();
    for (e, c) in &p.terms {
        let mut m = Matrix::identity(size);
        for (k, &pw) in e.iter().enumerate() {
            if pw == 0 {
                continue;
            }
            let f = cache.entry((k, pw)).or_insert_with(|| ads[k].pow(pw)).clone();
            m = &m * &f;
        }
        total = &total + &m.scale(&Cyclotomic::rational(c.clone()));
    }
    Ok(total == ad_big)
}

/// The published table of identities, as `(n, polynomial)`.
pub fn printed_table() -> Vec<(usize, AdPolynomial)> {
    vec![
        (2, AdPolynomial::from_scaled(2, 1, &[(2, &[]), (-1, &[(1, 2)])])),
        (3, AdPolynomial::from_scaled(3, 18, &[(18, &[]), (3, &[(1, 3)]), (1, &[(1, 6)])])),
        (4, AdPolynomial::from_scaled(4, 8, &[(8, &[]), (-3, &[(2, 2)]), (-1, &[(1, 4)]), (2, &[(1, 2), (2, 1)])])),
        (
            5,
            AdPolynomial::from_scaled(
                5,
                13750,
                &[(13750, &[]), (-5875, &[(1, 5)]), (1900, &[(1, 10)]), (-10, &[(1, 15)]), (3, &[(1, 20)])],
            ),
        ),
        (
            6,
            AdPolynomial::from_scaled(
                6,
                183456,
                &[
                    (183456, &[]),
                    (-89573, &[(1, 6)]),
                    (-2210, &[(1, 12)]),
                    (55, &[(1, 18)]),
                    (-30576, &[(2, 3)]),
                    (15288, &[(2, 3), (3, 2)]),
                ],
            ),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_arithmetic() {
        let n = 5;
        let x = QuotientElement::monomial(n, 1, 0);
        let y4 = QuotientElement::monomial(n, 0, 4);
        assert_eq!(q_mul(&x, &y4), QuotientElement::z(n));
        assert_eq!(q_mul(&QuotientElement::one(n), &x), x);
        let d = difference_gen(2, 1);
        let mut want = QuotientElement::zero(2);
        want.coeffs[0] = Rational::from_int(2);
        want.coeffs[3] = Rational::from_int(-2);
        assert_eq!(q_mul(&d, &d).coeffs[0], Rational::from_int(2));
        assert_eq!(q_mul(&d, &d), {
            // X² − 2XY + Y² with X² = Y² = 1
            let mut w = QuotientElement::zero(2);
            w.coeffs[0] = Rational::from_int(2);
            w.coeffs[3] = Rational::from_int(-2);
            w
        });
        assert_eq!(want.coeff(1, 1), &Rational::from_int(-2));
    }

    #[test]
    fn zero_polynomial_fails() {
        let p = AdPolynomial { n: 3, terms: BTreeMap::new(), single_variable: true };
        assert!(!verify_identity(&p));
    }

    #[test]
    fn display_uses_common_denominator() {
        let p = &printed_table()[1].1;
        assert_eq!(p.to_string(), "18*Ad = 18 + 3*X1^3 + X1^6");
    }

    #[test]
    fn small_expressions() {
        for n in 2..=5 {
            match express_z(n, Mode::Multi).unwrap() {
                Expression::Polynomial(p) => assert!(verify_identity(&p)),
                Expression::Impossible(_) => panic!("multi mode must succeed"),
            }
        }
        assert!(matches!(express_z(4, Mode::Single).unwrap(), Expression::Impossible(_)));
    }
}
