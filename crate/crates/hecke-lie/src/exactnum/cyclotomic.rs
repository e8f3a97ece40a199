use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::rational::{gcd, Rational};
use super::NumError;

/// Largest conductor the field tables are built for.
pub const MAX_CONDUCTOR: u32 = 1024;

type Coeffs = SmallVec<[Rational; 4]>;

struct Table {
    phi: usize,
    /// `pow[m]` holds ζ^m reduced mod Φ_N, for 0 ≤ m < N.
    pow: Vec<Vec<i64>>,
}

static TABLES: [OnceLock<Table>; MAX_CONDUCTOR as usize + 1] = [const { OnceLock::new() }; MAX_CONDUCTOR as usize + 1];
static POLYS: [OnceLock<Vec<i64>>; MAX_CONDUCTOR as usize + 1] =
    [const { OnceLock::new() }; MAX_CONDUCTOR as usize + 1];

/// Coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Result<&'static [i64], NumError> {
    if n == 0 || n > MAX_CONDUCTOR {
        return Err(NumError::ConductorCap(n as u64));
    }
    Ok(POLYS[n as usize].get_or_init(|| {
        // x^n - 1 divided by Φ_d for every proper divisor d
        let mut num = vec![0i64; n as usize + 1];
        num[0] = -1;
        num[n as usize] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                let den = cyclotomic_polynomial(d).expect("divisor below cap");
                num = exact_div(&num, den);
            }
        }
        num
    }))
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

fn table(n: u32) -> &'static Table {
    TABLES[n as usize].get_or_init(|| {
        let poly = cyclotomic_polynomial(n).expect("conductor below cap");
        let phi = poly.len() - 1;
        let mut pow = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            pow.push(cur.clone());
            // multiply by x and reduce with the monic Φ_n
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            if top != 0 {
                for j in 0..phi {
                    next[j] -= top * poly[j];
                }
            }
            cur = next;
        }
        Table { phi, pow }
    })
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn lcm(a: u32, b: u32) -> u64 {
    let g = gcd(a as i64, b as i64) as u64;
    a as u64 / g * b as u64
}

/// Conductors ≡ 2 mod 4 describe the same field as half their value.
fn normal_conductor(n: u64) -> u64 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// Checked lcm of two conductors, normalized.
pub fn merge_conductors(a: u32, b: u32) -> Result<u32, NumError> {
    let m = normal_conductor(lcm(a, b));
    if m > MAX_CONDUCTOR as u64 {
        return Err(NumError::ConductorCap(m));
    }
    Ok(m as u32)
}

/// An exact element of ℚ(ζ_N), stored in the power basis reduced mod Φ_N.
///
/// The conductor is never ≡ 2 mod 4, and rational values always carry
/// conductor 1.
#[derive(Clone)]
pub struct Cyclotomic {
    n: u32,
    c: Coeffs,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn from_int(k: i64) -> Self {
        Self::rational(Rational::from_int(k))
    }

    pub fn rational(r: Rational) -> Self {
        let mut c = Coeffs::new();
        c.push(r);
        Cyclotomic { n: 1, c }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.c[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.n == 1 {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Builds Σ coeffs[i] ζ_n^i from a power-basis vector of length φ(n).
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Result<Self, NumError> {
        if n == 0 || n > MAX_CONDUCTOR {
            return Err(NumError::ConductorCap(n as u64));
        }
        if coeffs.len() != euler_phi(n) {
            return Err(NumError::Shape(format!(
                "conductor {n} needs {} coefficients, got {}",
                euler_phi(n),
                coeffs.len()
            )));
        }
        let terms: Vec<(u64, Rational)> = coeffs.into_iter().enumerate().map(|(i, r)| (i as u64, r)).collect();
        Ok(Self::from_terms(n as u64, &terms))
    }

    /// Σ r·ζ_n^e over the given terms, for any n up to the cap.
    fn from_terms(n: u64, terms: &[(u64, Rational)]) -> Self {
        let target = normal_conductor(n) as u32;
        let t = table(target);
        let mut acc: Coeffs = SmallVec::from_elem(Rational::zero(), t.phi);
        for (e, r) in terms {
            if r.is_zero() {
                continue;
            }
            let (sign, exp) = exponent_in(n, *e);
            add_scaled_row(&mut acc, &t.pow[exp as usize], r, sign);
        }
        Self::finish(target, acc)
    }

    fn finish(n: u32, c: Coeffs) -> Self {
        if n != 1 && c[1..].iter().all(Rational::is_zero) {
            let mut c = c;
            c.truncate(1);
            return Cyclotomic { n: 1, c };
        }
        Cyclotomic { n, c }
    }

    /// This element rewritten with conductor `m`, which must be a multiple
    /// of the current conductor.
    pub fn embed(&self, m: u32) -> Self {
        assert!(m.is_multiple_of(self.n), "cannot embed conductor {} into {m}", self.n);
        if m == self.n {
            return self.clone();
        }
        if self.n == 1 {
            let mut c: Coeffs = SmallVec::from_elem(Rational::zero(), euler_phi(m));
            c[0] = self.c[0].clone();
            return Cyclotomic { n: m, c };
        }
        let step = (m / self.n) as u64;
        let terms: Vec<(u64, Rational)> =
            self.c.iter().enumerate().map(|(i, r)| (i as u64 * step, r.clone())).collect();
        let t = table(m);
        let mut acc: Coeffs = SmallVec::from_elem(Rational::zero(), t.phi);
        for (e, r) in &terms {
            if !r.is_zero() {
                add_scaled_row(&mut acc, &t.pow[*e as usize], r, 1);
            }
        }
        Cyclotomic { n: m, c: acc }
    }

    /// Power-basis coefficients after embedding into conductor `m`.
    pub fn coeffs_in(&self, m: u32) -> Vec<Rational> {
        if self.n == 1 {
            let mut v = vec![Rational::zero(); euler_phi(m)];
            v[0] = self.c[0].clone();
            return v;
        }
        self.embed(m).c.into_vec()
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self, u32) {
        if a.n == b.n {
            return (a.clone(), b.clone(), a.n);
        }
        let m = merge_conductors(a.n, b.n).expect("conductor cap exceeded");
        (a.embed(m), b.embed(m), m)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic { n: self.n, c: self.c.iter().map(|x| x * r).collect() }
    }

    pub fn inv(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::rational(r.recip()?));
        }
        // product of all nontrivial conjugates over the norm
        let mut y = Self::one();
        for k in 2..self.n as i64 {
            if gcd(k, self.n as i64) == 1 {
                y = &y * &self.galois(k)?;
            }
        }
        let norm = (self * &y).as_rational().cloned().expect("norm is rational");
        Ok(y.scale(&norm.recip()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, NumError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// The automorphism ζ_N ↦ ζ_N^k.
    pub fn galois(&self, k: i64) -> Result<Self, NumError> {
        if self.n == 1 {
            return Ok(self.clone());
        }
        let n = self.n as i64;
        if gcd(k.rem_euclid(n), n) != 1 {
            return Err(NumError::NotCoprime { k, conductor: self.n });
        }
        let k = k.rem_euclid(n) as u64;
        let terms: Vec<(u64, Rational)> =
            self.c.iter().enumerate().map(|(i, r)| (i as u64 * k % n as u64, r.clone())).collect();
        Ok(Self::from_terms(self.n as u64, &terms))
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// If this is a root of unity, the minimal `(n, k)` with value ζ_n^k.
    pub fn root_of_unity_log(&self) -> Option<(u32, u32)> {
        if self.is_zero() {
            return None;
        }
        let m = lcm(2, self.n) as u32;
        for k in 0..m {
            if cyclo_root(m as u64, k as i64).ok()? == *self {
                let g = gcd(k as i64, m as i64) as u32;
                return Some((m / g, k / g));
            }
        }
        None
    }

    /// Same value written over the smallest conductor containing it.
    pub fn minimal_form(&self) -> Self {
        let mut cur = self.clone();
        'outer: loop {
            if cur.n == 1 {
                return cur;
            }
            for p in prime_factors(cur.n) {
                let d = normal_conductor((cur.n / p) as u64) as u32;
                if let Some(sub) = cur.descend(d) {
                    cur = sub;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Rewrites `self` over conductor `d | n` when it lies in that subfield.
    fn descend(&self, d: u32) -> Option<Self> {
        let n = self.n as i64;
        let d64 = d as i64;
        for k in 1..n {
            if k % d64 == 1 % d64 && gcd(k, n) == 1 && k != 1 && self.galois(k).ok()? != *self {
                return None;
            }
        }
        // solve Σ y_i embed(ζ_d^i) = self over ℚ
        let phid = euler_phi(d);
        let cols: Vec<Vec<Rational>> = (0..phid)
            .map(|i| {
                let mut v = vec![Rational::zero(); phid];
                v[i] = Rational::one();
                Cyclotomic::from_coeffs(d, v).ok().map(|x| x.coeffs_in(self.n)).unwrap()
            })
            .collect();
        let rows = self.c.len();
        let mut aug: Vec<Vec<Rational>> =
            (0..rows).map(|r| (0..phid).map(|j| cols[j][r].clone()).chain([self.c[r].clone()]).collect()).collect();
        let sol = solve_dense(&mut aug, phid)?;
        let y = Cyclotomic::from_coeffs(d, sol).ok()?;
        if y.embed_checked(self.n) == *self {
            Some(y)
        } else {
            None
        }
    }

    fn embed_checked(&self, m: u32) -> Self {
        if self.n == 1 {
            self.clone()
        } else {
            self.embed(m)
        }
    }

    /// Number of bytes-ish needed to write the coefficients; a pivot weight.
    pub fn size(&self) -> usize {
        self.c.iter().map(Rational::size).sum()
    }

    /// `self + a*b`.
    pub fn add_mul(&self, a: &Self, b: &Self) -> Self {
        if self.n == 1 && a.n == 1 && b.n == 1 {
            return Self::rational(self.c[0].add_mul(&a.c[0], &b.c[0]));
        }
        if a.is_zero() || b.is_zero() {
            return self.clone();
        }
        self + &(a * b)
    }
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Gauss-Jordan over ℚ on an augmented system with `unknowns` columns.
fn solve_dense(aug: &mut [Vec<Rational>], unknowns: usize) -> Option<Vec<Rational>> {
    let rows = aug.len();
    let mut piv_row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(r) = (piv_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(piv_row, r);
        let inv = aug[piv_row][col].recip().ok()?;
        for x in aug[piv_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r2 in 0..rows {
            if r2 != piv_row && !aug[r2][col].is_zero() {
                let f = aug[r2][col].clone();
                let pivot = aug[piv_row].clone();
                for (x, p) in aug[r2].iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        piv_row += 1;
    }
    if aug[piv_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = aug[i][unknowns].clone();
    }
    Some(sol)
}

/// Maps ζ_n^e onto the normalized conductor: returns (sign, exponent).
fn exponent_in(n: u64, e: u64) -> (i64, u64) {
    let e = e % n;
    if n % 4 == 2 {
        // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
        let m = n / 2;
        let sign = if e % 2 == 1 { -1 } else { 1 };
        (sign, e * m.div_ceil(2) % m)
    } else {
        (1, e)
    }
}

fn add_scaled_row(acc: &mut Coeffs, row: &[i64], r: &Rational, sign: i64) {
    for (a, &k) in acc.iter_mut().zip(row) {
        if k != 0 {
            *a = &*a + &r.mul_int(k * sign);
        }
    }
}

/// ζ_n^k.
pub fn cyclo_root(n: u64, k: i64) -> Result<Cyclotomic, NumError> {
    if n == 0 {
        return Err(NumError::Domain("root of unity of order 0".into()));
    }
    let k = k.rem_euclid(n as i64) as u64;
    let g = gcd(k as i64, n as i64).max(1) as u64;
    let (n, k) = (n / g, k / g);
    if normal_conductor(n) > MAX_CONDUCTOR as u64 {
        return Err(NumError::ConductorCap(n));
    }
    Ok(Cyclotomic::from_terms(n, &[(k, Rational::one())]))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        if self.n == 1 || other.n == 1 {
            // a non-rational value never equals a rational one
            return false;
        }
        let (a, b, _) = Cyclotomic::aligned(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let m = self.minimal_form();
        m.n.hash(state);
        for r in &m.c {
            r.hash(state);
        }
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        if self.n == 1 && o.n == 1 {
            return Cyclotomic::rational(&self.c[0] + &o.c[0]);
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let (a, b, m) = Cyclotomic::aligned(self, o);
        let c: Coeffs = a.c.iter().zip(b.c.iter()).map(|(x, y)| x + y).collect();
        Cyclotomic::finish(m, c)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        if o.n == 1 {
            return self.scale(&o.c[0]);
        }
        if self.n == 1 {
            return o.scale(&self.c[0]);
        }
        let (a, b, m) = Cyclotomic::aligned(self, o);
        let t = table(m);
        let phi = t.phi;
        let mut raw: SmallVec<[Rational; 8]> = SmallVec::from_elem(Rational::zero(), 2 * phi - 1);
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] = raw[i + j].add_mul(x, y);
                }
            }
        }
        let mut c: Coeffs = raw[..phi].iter().cloned().collect();
        for (e, r) in raw.iter().enumerate().skip(phi) {
            if !r.is_zero() {
                add_scaled_row(&mut c, &t.pow[e % m as usize], r, 1);
            }
        }
        Cyclotomic::finish(m, c)
    }
}

impl<'a> Div<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &Cyclotomic) -> Cyclotomic {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: Cyclotomic) -> Cyclotomic {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: &Cyclotomic) -> Cyclotomic {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl From<i64> for Cyclotomic {
    fn from(k: i64) -> Self {
        Cyclotomic::from_int(k)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::rational(r)
    }
}

/// Text form: a sum of terms `r`, `r*zN^k`, `zN`, e.g. `2 - 1/2*z3^2`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return write!(f, "{}", self.c[0]);
        }
        let mut first = true;
        for (i, r) in self.c.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let neg = r.signum() < 0;
            let a = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "z{}", self.n)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyclotomic {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(NumError::Parse("empty scalar".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'*' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut acc = Cyclotomic::zero();
        for t in terms {
            acc = &acc + &parse_term(t)?;
        }
        Ok(acc)
    }
}

fn parse_term(t: &str) -> Result<Cyclotomic, NumError> {
    let (sign, body) = match t.as_bytes().first() {
        Some(b'-') => (-1, &t[1..]),
        Some(b'+') => (1, &t[1..]),
        _ => (1, t),
    };
    let bad = || NumError::Parse(format!("bad scalar term {t:?}"));
    let (coef, root) = match body.find('z') {
        None => (body, None),
        Some(p) => {
            let c = body[..p].trim_end_matches('*');
            (if c.is_empty() { "1" } else { c }, Some(&body[p + 1..]))
        }
    };
    let r: Rational = coef.parse()?;
    let r = r.mul_int(sign);
    let Some(root) = root else {
        return Ok(Cyclotomic::rational(r));
    };
    let (n, k) = match root.split_once('^') {
        Some((n, k)) => (n, k.parse::<i64>().map_err(|_| bad())?),
        None => (root, 1),
    };
    let n: u64 = n.parse().map_err(|_| bad())?;
    Ok(cyclo_root(n, k)?.scale(&r))
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.n == 1 {
            return s.serialize_str(&self.c[0].to_string());
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("conductor", &self.n)?;
        let coeffs: Vec<String> = self.c.iter().map(|r| r.to_string()).collect();
        m.serialize_entry("coeffs", &coeffs)?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Cyclotomic;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a rational string or {{\"conductor\", \"coeffs\"}} object")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Cyclotomic, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Cyclotomic, E> {
                Ok(Cyclotomic::from_int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Cyclotomic, E> {
                i64::try_from(v).map(Cyclotomic::from_int).map_err(E::custom)
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Cyclotomic, A::Error> {
                let mut n: Option<u32> = None;
                let mut coeffs: Option<Vec<String>> = None;
                while let Some(k) = map.next_key::<String>()? {
                    match k.as_str() {
                        "conductor" => n = Some(map.next_value()?),
                        "coeffs" => coeffs = Some(map.next_value()?),
                        other => return Err(de::Error::unknown_field(other, &["conductor", "coeffs"])),
                    }
                }
                let n = n.ok_or_else(|| de::Error::missing_field("conductor"))?;
                let coeffs = coeffs.ok_or_else(|| de::Error::missing_field("coeffs"))?;
                let coeffs = coeffs
                    .iter()
                    .map(|c| c.parse::<Rational>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(de::Error::custom)?;
                Cyclotomic::from_coeffs(n, coeffs).map_err(de::Error::custom)
            }
        }
        d.deserialize_any(V)
    }
}
