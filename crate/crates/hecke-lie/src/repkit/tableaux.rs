//! Multipartitions, standard multitableaux and the seminormal models of
//! G(d,1,r).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactnum::{cyclo_root, Cyclotomic, Rational};
use crate::matlin::Matrix;
use crate::{Error, Result};

use super::Representation;

/// A `d`-tuple of partitions, each stored as weakly decreasing row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multipartition(pub Vec<Vec<usize>>);

impl Multipartition {
    pub fn new(parts: Vec<Vec<usize>>) -> Result<Self> {
        for p in &parts {
            if p.windows(2).any(|w| w[0] < w[1]) || p.contains(&0) {
                return Err(Error::Domain(format!("{p:?} is not a partition")));
            }
        }
        if parts.is_empty() {
            return Err(Error::Domain("multipartition with no components".into()));
        }
        Ok(Multipartition(parts))
    }

    pub fn components(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().flatten().sum()
    }

    /// Components rotated so that component `i` of the result is `i + k` here.
    pub fn shift(&self, k: usize) -> Self {
        let d = self.0.len();
        Multipartition((0..d).map(|i| self.0[(i + k) % d].clone()).collect())
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|p| {
                if p.is_empty() {
                    "[]".to_string()
                } else {
                    format!("[{}]", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Parses `([2],[1],[],[])`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("multipartition {s:?} must be parenthesized")))?;
        let mut parts = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('[').ok_or_else(|| Error::Parse(format!("expected '[' in {s:?}")))?;
            let end = body.find(']').ok_or_else(|| Error::Parse(format!("unclosed '[' in {s:?}")))?;
            let nums = &body[..end];
            let p: Vec<usize> = if nums.is_empty() {
                Vec::new()
            } else {
                nums.split(',')
                    .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad row length {x:?}"))))
                    .collect::<Result<_>>()?
            };
            parts.push(p);
            rest = body[end + 1..].strip_prefix(',').unwrap_or(&body[end + 1..]);
        }
        Multipartition::new(parts)
    }
}

/// All multipartitions of `r` with `d` components, in a fixed order.
pub fn multipartitions(d: usize, r: usize) -> Vec<Multipartition> {
    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    fn go(d: usize, r: usize) -> Vec<Vec<Vec<usize>>> {
        if d == 0 {
            return if r == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for k in (0..=r).rev() {
            for p in partitions(k, k) {
                for mut tail in go(d - 1, r - k) {
                    tail.insert(0, p.clone());
                    out.push(tail);
                }
            }
        }
        out
    }
    go(d, r).into_iter().map(Multipartition).collect()
}

/// A filling of a multipartition by `1..=r`; `pos[i]` is the
/// `(component, row, column)` of the number `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardMultiTableau {
    pub pos: Vec<(usize, usize, usize)>,
}

impl StandardMultiTableau {
    pub fn component_of(&self, number: usize) -> usize {
        self.pos[number - 1].0
    }

    fn content(&self, idx: usize) -> i64 {
        let (_, r, c) = self.pos[idx];
        c as i64 - r as i64
    }
}

pub fn standard_multitableaux(shape: &Multipartition) -> Vec<StandardMultiTableau> {
    let r = shape.size();
    let mut filled: Vec<Vec<usize>> = shape.0.iter().map(|p| vec![0; p.len()]).collect();
    let mut cur = Vec::with_capacity(r);
    let mut out = Vec::new();
    fn go(
        shape: &Multipartition,
        filled: &mut Vec<Vec<usize>>,
        cur: &mut Vec<(usize, usize, usize)>,
        r: usize,
        out: &mut Vec<StandardMultiTableau>,
    ) {
        if cur.len() == r {
            out.push(StandardMultiTableau { pos: cur.clone() });
            return;
        }
        for c in 0..shape.0.len() {
            for row in 0..shape.0[c].len() {
                let len = filled[c][row];
                if len < shape.0[c][row] && (row == 0 || filled[c][row - 1] > len) {
                    filled[c][row] += 1;
                    cur.push((c, row, len));
                    go(shape, filled, cur, r, out);
                    cur.pop();
                    filled[c][row] -= 1;
                }
            }
        }
    }
    go(shape, &mut filled, &mut cur, r, &mut out);
    out
}

/// The irreducible representation of G(d,1,r) labelled by `shape`, on the
/// basis of standard multitableaux, with generators ordered as in
/// [`imprimitive`](crate::groupkit::imprimitive)`(d, 1, r)`.
///
/// `t₁` acts on `T` by `ζ_d^c` with `c` the component holding 1. For
/// `σ_i = (i, i+1)` and `T' = σ_i·T`: if `i` and `i+1` lie in different
/// components `σ_i·T = T'`; otherwise, with axial distance
/// `a = content(i+1) − content(i)`, `σ_i·T = a·T` when `|a| = 1`, and
/// `σ_i·T = (1/a)·T + c·T'` with `c = 1` for `a < 0` and `c = 1 − 1/a²`
/// for `a > 0`.
pub fn ariki_koike_rep(d: usize, shape: &Multipartition) -> Result<Representation> {
    if d == 0 || shape.components() != d {
        return Err(Error::Domain(format!("{shape} does not have {d} components")));
    }
    let r = shape.size();
    if r == 0 {
        return Err(Error::Domain("empty multipartition".into()));
    }
    let basis = standard_multitableaux(shape);
    let n = basis.len();
    let index = |t: &StandardMultiTableau| basis.iter().position(|b| b == t);
    let mut gens = Vec::new();
    if d > 1 {
        let diag = basis
            .iter()
            .map(|t| cyclo_root(d as u64, t.component_of(1) as i64))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        gens.push(Matrix::diag(diag));
    }
    for i in 0..r.saturating_sub(1) {
        let mut m = Matrix::zeros(n, n);
        for (col, t) in basis.iter().enumerate() {
            let mut swapped = t.clone();
            swapped.pos.swap(i, i + 1);
            let (p, q) = (t.pos[i], t.pos[i + 1]);
            if p.0 != q.0 {
                let j = index(&swapped).expect("swapping across components stays standard");
                m[(j, col)] = Cyclotomic::one();
                continue;
            }
            let a = t.content(i + 1) - t.content(i);
            if a.abs() == 1 {
                m[(col, col)] = Cyclotomic::from_int(a);
                continue;
            }
            let j = index(&swapped).expect("axial distance at least 2 keeps the tableau standard");
            m[(col, col)] = Cyclotomic::rational(Rational::new(1, a));
            m[(j, col)] = if a < 0 { Cyclotomic::one() } else { Cyclotomic::rational(Rational::new(a * a - 1, a * a)) };
        }
        gens.push(m);
    }
    if gens.is_empty() {
        gens.push(Matrix::identity(n));
    }
    Representation::new(shape.to_string(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::FiniteMatrixGroup;

    #[test]
    fn parse_and_display() {
        let m: Multipartition = "([2],[1],[],[])".parse().unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(m.to_string(), "([2],[1],[],[])");
        assert!("([1,2])".parse::<Multipartition>().is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(multipartitions(1, 4).len(), 5);
        assert_eq!(multipartitions(3, 2).len(), 9);
        let m: Multipartition = "([2],[1],[],[])".parse().unwrap();
        assert_eq!(standard_multitableaux(&m).len(), 3);
        let m: Multipartition = "([2,1])".parse().unwrap();
        assert_eq!(standard_multitableaux(&m).len(), 2);
    }

    #[test]
    fn seminormal_models_are_representations() {
        for (d, r) in [(1, 4), (2, 3), (3, 2), (3, 3), (4, 3)] {
            let g = FiniteMatrixGroup::builtin(&format!("g({d},1,{r})")).unwrap();
            let mut total = 0;
            for shape in multipartitions(d, r) {
                let rho = ariki_koike_rep(d, &shape).unwrap();
                rho.check_homomorphism(&g).unwrap_or_else(|e| panic!("{shape}: {e}"));
                total += rho.dim() * rho.dim();
            }
            assert_eq!(total, g.order(), "G({d},1,{r})");
        }
    }
}
