//! Hecke parameter space: the arrangements L₁, L₂, L₃, genericity, and the
//! τ ↔ λ transform.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactnum::{Cyclotomic, Rational};
use crate::heckelie::{Context, ParameterPoint};
use crate::matlin::Matrix;
use crate::repkit::Representation;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Arrangement {
    L1,
    L2,
    L3,
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementHyperplane {
    pub kind: Arrangement,
    /// Hyperplane class of the group.
    pub class: usize,
    /// Normal vector over the `λ^c` coordinates, first nonzero entry 1.
    pub normal: Vec<Cyclotomic>,
    /// `(r, s)` for L₁, `(i, j, k, l)` otherwise.
    pub indices: Vec<usize>,
}

/// `v_i = (ζ^i, ζ^{2i}, …, ζ^{(e−1)i})`.
pub fn v(e: usize, zeta: &Cyclotomic, i: usize) -> Vec<Cyclotomic> {
    let base = zeta.pow(i as i64).expect("root of unity");
    let mut out = Vec::with_capacity(e - 1);
    let mut p = base.clone();
    for _ in 1..e {
        out.push(p.clone());
        p = &p * &base;
    }
    out
}

fn combine(terms: &[(i64, &Vec<Cyclotomic>)]) -> Vec<Cyclotomic> {
    let n = terms[0].1.len();
    (0..n)
        .map(|m| terms.iter().fold(Cyclotomic::zero(), |acc, (c, v)| acc + v[m].scale(&Rational::from_int(*c))))
        .collect()
}

fn normalized(v: Vec<Cyclotomic>) -> Option<Vec<Cyclotomic>> {
    let lead = v.iter().find(|x| !x.is_zero())?.inv().ok()?;
    Some(v.iter().map(|x| x * &lead).collect())
}

/// The three arrangements for one class with fixer order `e` and chosen
/// primitive root `zeta`.
pub fn class_arrangements(class: usize, e: usize, zeta: &Cyclotomic) -> Vec<ArrangementHyperplane> {
    let vs: Vec<Vec<Cyclotomic>> = (0..e).map(|i| v(e, zeta, i)).collect();
    let roots: Vec<Cyclotomic> = (0..e).map(|i| zeta.pow(i as i64).expect("root")).collect();
    let mut out: Vec<ArrangementHyperplane> = Vec::new();
    let mut push = |kind: Arrangement, normal: Vec<Cyclotomic>, indices: Vec<usize>| {
        if let Some(n) = normalized(normal) {
            if !out.iter().any(|h| h.kind == kind && h.normal == n) {
                out.push(ArrangementHyperplane { kind, class, normal: n, indices });
            }
        }
    };
    for r in 0..e {
        for s in r + 1..e {
            push(Arrangement::L1, combine(&[(1, &vs[r]), (-1, &vs[s])]), vec![r, s]);
        }
    }
    for i in 0..e {
        for j in 0..e {
            for k in 0..e {
                for l in 0..e {
                    if &roots[i] + &roots[j] != &roots[k] + &roots[l] {
                        push(
                            Arrangement::L2,
                            combine(&[(1, &vs[i]), (1, &vs[j]), (-1, &vs[k]), (-1, &vs[l])]),
                            vec![i, j, k, l],
                        );
                    }
                    if (i, j) != (k, l) && (i != j || k != l) {
                        push(
                            Arrangement::L3,
                            combine(&[(1, &vs[i]), (-1, &vs[j]), (-1, &vs[k]), (1, &vs[l])]),
                            vec![i, j, k, l],
                        );
                    }
                }
            }
        }
    }
    out
}

/// Arrangements over every class in C₊, using `ζ_c` from the catalog.
pub fn build_arrangements(ctx: &Context) -> Vec<ArrangementHyperplane> {
    ctx.catalog
        .c_plus()
        .into_iter()
        .flat_map(|c| {
            let class = &ctx.catalog.classes[c];
            class_arrangements(c, class.e as usize, &class.zeta)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GenericityReport {
    pub containing: Vec<ArrangementHyperplane>,
    pub in_l1: bool,
    pub in_l2: bool,
    pub in_l3: bool,
    pub generic: bool,
}

fn pairing(a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
    a.iter().zip(b).fold(Cyclotomic::zero(), |acc, (x, y)| acc + x * y)
}

/// Which arrangement hyperplanes contain `λ`.
pub fn membership_in(
    lambda: &ParameterPoint,
    ctx: &Context,
    arrangements: &[ArrangementHyperplane],
) -> Result<GenericityReport> {
    lambda.check_shape(ctx)?;
    let containing: Vec<ArrangementHyperplane> = arrangements
        .iter()
        .filter(|h| {
            let coords = lambda.for_class(ctx, h.class).expect("class in C₊");
            pairing(&h.normal, coords).is_zero()
        })
        .cloned()
        .collect();
    let has = |k: Arrangement| containing.iter().any(|h| h.kind == k);
    let (in_l1, in_l2, in_l3) = (has(Arrangement::L1), has(Arrangement::L2), has(Arrangement::L3));
    Ok(GenericityReport { in_l1, in_l2, in_l3, generic: !(in_l2 || in_l3), containing })
}

pub fn membership(ctx: &Context, lambda: &ParameterPoint) -> Result<GenericityReport> {
    membership_in(lambda, ctx, &build_arrangements(ctx))
}

/// `P_λ(x) = Σ_k λ_k x^k` for one class.
pub fn p_lambda(coords: &[Cyclotomic], x: &Cyclotomic) -> Cyclotomic {
    let mut acc = Cyclotomic::zero();
    let mut p = x.clone();
    for c in coords {
        acc = acc + c * &p;
        p = &p * x;
    }
    acc
}

/// `τ_{c,j}` for `j = 0..e_c`, one vector per class of C₊.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauParameters {
    pub values: Vec<Vec<Cyclotomic>>,
}

fn zetas(ctx: &Context) -> Vec<(usize, Cyclotomic)> {
    ctx.catalog
        .c_plus()
        .into_iter()
        .map(|c| (ctx.catalog.classes[c].e as usize, ctx.catalog.classes[c].zeta.clone()))
        .collect()
}

/// `λ_k^c = Σ_j (ζ_c^{−k})^j τ_{c,j}` for `k = 0..e_c`; returns the point
/// (`k ≥ 1`) and the `λ₀^c` separately.
pub fn tau_to_lambda(ctx: &Context, tau: &TauParameters) -> Result<(ParameterPoint, Vec<Cyclotomic>)> {
    let z = zetas(ctx);
    if z.len() != tau.values.len() {
        return Err(Error::shape("τ has the wrong number of classes"));
    }
    let mut point = Vec::new();
    let mut lambda0 = Vec::new();
    for ((e, zeta), t) in z.iter().zip(&tau.values) {
        if t.len() != *e {
            return Err(Error::shape(format!("τ needs {e} values per class")));
        }
        let full: Vec<Cyclotomic> = (0..*e)
            .map(|k| {
                let w = zeta.pow(-(k as i64)).expect("root");
                p_lambda_from_zero(t, &w)
            })
            .collect();
        lambda0.push(full[0].clone());
        point.push(full[1..].to_vec());
    }
    Ok((ParameterPoint::new(point), lambda0))
}

fn p_lambda_from_zero(coords: &[Cyclotomic], x: &Cyclotomic) -> Cyclotomic {
    let mut acc = Cyclotomic::zero();
    let mut p = Cyclotomic::one();
    for c in coords {
        acc = acc + c * &p;
        p = &p * x;
    }
    acc
}

/// Inverse of [`tau_to_lambda`].
pub fn lambda_to_tau(ctx: &Context, lambda: &ParameterPoint, lambda0: &[Cyclotomic]) -> Result<TauParameters> {
    lambda.check_shape(ctx)?;
    let z = zetas(ctx);
    if lambda0.len() != z.len() {
        return Err(Error::shape("λ₀ has the wrong number of classes"));
    }
    let mut values = Vec::new();
    for (((e, zeta), l), l0) in z.iter().zip(&lambda.values).zip(lambda0) {
        let mut full = vec![l0.clone()];
        full.extend(l.iter().cloned());
        let inv_e = Rational::new(1, *e as i64);
        let tau: Vec<Cyclotomic> = (0..*e)
            .map(|j| {
                let w = zeta.pow(j as i64).expect("root");
                p_lambda_from_zero(&full, &w).scale(&inv_e)
            })
            .collect();
        values.push(tau);
    }
    Ok(TauParameters { values })
}

/// Drops `λ₀` from full per-class vectors `(λ₀, …, λ_{e−1})`.
pub fn normalize(full: &[Vec<Cyclotomic>]) -> (ParameterPoint, Vec<Cyclotomic>) {
    let lambda0 = full.iter().map(|v| v[0].clone()).collect();
    (ParameterPoint::new(full.iter().map(|v| v[1..].to_vec()).collect()), lambda0)
}

/// `φ(t_H) = (1/e_c) Σ_{k=0}^{e_c−1} λ_k^c ρ(s_H)^k`.
pub fn phi_t_h(
    ctx: &Context,
    rho: &Representation,
    lambda: &ParameterPoint,
    lambda0: &[Cyclotomic],
    hyperplane: usize,
) -> Result<Matrix> {
    lambda.check_shape(ctx)?;
    let s = *ctx
        .catalog
        .hyperplane_distinguished
        .get(hyperplane)
        .ok_or_else(|| Error::Domain(format!("no hyperplane {hyperplane}")))?;
    let c = ctx.catalog.hyperplane_class[hyperplane];
    let pos = ctx
        .catalog
        .c_plus()
        .iter()
        .position(|&x| x == c)
        .ok_or_else(|| Error::Precondition(format!("hyperplane {hyperplane} has e_c = 2")))?;
    let e = ctx.catalog.classes[c].e as usize;
    let m = rho.eval(&ctx.group, s);
    let mut acc = Matrix::scalar(rho.dim(), lambda0[pos].clone());
    let mut p = m.clone();
    for k in 1..e {
        acc = &acc + &p.scale(&lambda.values[pos][k - 1]);
        p = &p * m;
    }
    Ok(acc.scale(&Cyclotomic::rational(Rational::new(1, e as i64))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::cyclo_root;

    #[test]
    fn cubic_counts() {
        let z = cyclo_root(3, 1).unwrap();
        let a = class_arrangements(0, 3, &z);
        let count = |k| a.iter().filter(|h| h.kind == k).count();
        assert_eq!(count(Arrangement::L1), 3);
        assert_eq!(count(Arrangement::L2), 6);
        let l2: Vec<_> = a.iter().filter(|h| h.kind == Arrangement::L2).map(|h| &h.normal).collect();
        for h in a.iter().filter(|h| h.kind != Arrangement::L2) {
            assert!(l2.contains(&&h.normal), "{:?} not in L2", h.indices);
        }
    }

    #[test]
    fn independent_of_root_choice() {
        let set = |z: &Cyclotomic| {
            let mut v: Vec<(Arrangement, Vec<Cyclotomic>)> =
                class_arrangements(0, 5, z).into_iter().map(|h| (h.kind, h.normal)).collect();
            v.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
            v
        };
        let z = cyclo_root(5, 1).unwrap();
        for k in 2..5 {
            assert_eq!(set(&z), set(&cyclo_root(5, k).unwrap()));
        }
    }
}
