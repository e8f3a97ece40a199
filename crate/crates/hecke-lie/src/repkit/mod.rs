//! Representations of finite matrix groups.
//!
//! A [`Representation`] stores one matrix per group generator. Matrices of
//! arbitrary elements are obtained along the BFS parent chain of the group and
//! memoized on first use.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::exactnum::{Cyclotomic, Rational};
use crate::groupkit::{FiniteMatrixGroup, LinearCharacter};
use crate::matlin::{intertwiners, left_inverse, Matrix};
use crate::{Error, Result};

mod inventory;
mod tableaux;

pub use inventory::{
    build_inventory, exceptional_label, inventory_for, rebuild_exceptional, shift_split, Inventory, InventoryFile,
    BUNDLED_INVENTORIES,
};
pub use tableaux::{ariki_koike_rep, multipartitions, standard_multitableaux, Multipartition, StandardMultiTableau};

/// On-disk representation: one matrix per group generator.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepFile {
    pub group: String,
    pub label: String,
    pub matrices: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct Representation {
    label: String,
    dim: usize,
    gens: Vec<Matrix>,
    elements: OnceLock<Vec<Matrix>>,
}

impl Representation {
    pub fn new(label: impl Into<String>, gens: Vec<Matrix>) -> Result<Self> {
        let dim = gens.first().map(Matrix::rows).ok_or_else(|| Error::shape("representation without generators"))?;
        if gens.iter().any(|m| !m.is_square() || m.rows() != dim) {
            return Err(Error::shape("representation matrices must be square of one size"));
        }
        Ok(Representation { label: label.into(), dim, gens, elements: OnceLock::new() })
    }

    /// Loads a file and checks it against the group.
    pub fn from_file(file: &RepFile, g: &FiniteMatrixGroup) -> Result<Self> {
        if file.matrices.len() != g.generators().len() {
            return Err(Error::shape(format!(
                "{} matrices for {} generators",
                file.matrices.len(),
                g.generators().len()
            )));
        }
        let r = Self::new(file.label.clone(), file.matrices.clone())?;
        r.check_homomorphism(g)?;
        Ok(r)
    }

    pub fn to_file(&self, g: &FiniteMatrixGroup) -> RepFile {
        RepFile { group: g.name().to_string(), label: self.label.clone(), matrices: self.gens.clone() }
    }

    pub fn trivial(g: &FiniteMatrixGroup) -> Self {
        Self::new("trivial", vec![Matrix::identity(1); g.generators().len()]).expect("1x1 matrices")
    }

    /// The defining representation of a matrix group.
    pub fn natural(g: &FiniteMatrixGroup) -> Self {
        Self::new("natural", g.generators().to_vec()).expect("group generators are square")
    }

    pub fn from_linear_character(g: &FiniteMatrixGroup, eta: &LinearCharacter, label: impl Into<String>) -> Self {
        let gens =
            (0..g.generators().len()).map(|k| Matrix::scalar(1, eta.value(g.generator_element(k)).clone())).collect();
        Self::new(label, gens).expect("1x1 matrices")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    /// Matrices of every group element, indexed like `g.elements()`.
    pub fn matrices(&self, g: &FiniteMatrixGroup) -> &[Matrix] {
        self.elements.get_or_init(|| {
            let mut out: Vec<Matrix> = Vec::with_capacity(g.order());
            out.push(Matrix::identity(self.dim));
            for i in 1..g.order() {
                let (p, k) = g.parent(i).expect("non-identity has a parent");
                out.push(&out[p] * &self.gens[k]);
            }
            out
        })
    }

    pub fn eval(&self, g: &FiniteMatrixGroup, i: usize) -> &Matrix {
        &self.matrices(g)[i]
    }

    /// Evaluates a word in the generators.
    pub fn eval_word(&self, word: &[usize]) -> Matrix {
        word.iter().fold(Matrix::identity(self.dim), |acc, &k| &acc * &self.gens[k])
    }

    /// Checks `ρ(x)ρ(s) = ρ(xs)` along every edge of the Cayley graph.
    pub fn check_homomorphism(&self, g: &FiniteMatrixGroup) -> Result<()> {
        let ms = self.matrices(g);
        for i in 0..g.order() {
            for (k, s) in self.gens.iter().enumerate() {
                if &ms[i] * s != ms[g.mul_gen(i, k)] {
                    return Err(Error::Consistency(format!(
                        "{}: relation violated at element {i}, generator {k}",
                        self.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Trace on each conjugacy class.
    pub fn character(&self, g: &FiniteMatrixGroup) -> Vec<Cyclotomic> {
        let ms = self.matrices(g);
        g.classes().iter().map(|c| ms[c[0]].trace()).collect()
    }

    /// Multiplies every `ρ(g)` by `η(g)`.
    pub fn twist(&self, g: &FiniteMatrixGroup, eta: &LinearCharacter) -> Self {
        let gens = self.gens.iter().enumerate().map(|(k, m)| m.scale(eta.value(g.generator_element(k)))).collect();
        Self::new(format!("{}*eta", self.label), gens).expect("same shapes")
    }

    /// `g ↦ ρ(g)^{-T}`.
    pub fn dual(&self) -> Self {
        let gens = self.gens.iter().map(|m| m.inverse().expect("invertible").transpose()).collect();
        Self::new(format!("{}^*", self.label), gens).expect("same shapes")
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.kron(b)).collect();
        Self::new(format!("{}(x){}", self.label, other.label), gens).expect("same count")
    }

    /// Tensor product whose element table is assembled from both factors.
    pub fn tensor_in(&self, other: &Self, g: &FiniteMatrixGroup) -> Self {
        let r = self.tensor(other);
        let a = self.matrices(g);
        let b = other.matrices(g);
        let _ = r.elements.set(a.iter().zip(b).map(|(x, y)| x.kron(y)).collect());
        r
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.direct_sum(b)).collect();
        Self::new(format!("{}(+){}", self.label, other.label), gens).expect("same count")
    }

    /// `Λᵏρ` on the basis `e_I`, `I` running over sorted `k`-subsets in
    /// lexicographic order.
    pub fn exterior_power(&self, k: usize) -> Result<Self> {
        if k > self.dim {
            return Err(Error::Domain(format!("exterior power {k} of a {}-dimensional representation", self.dim)));
        }
        let subsets = k_subsets(self.dim, k);
        let gens = self
            .gens
            .iter()
            .map(|m| {
                let n = subsets.len();
                let mut out = Matrix::zeros(n, n);
                for (a, rows) in subsets.iter().enumerate() {
                    for (b, cols) in subsets.iter().enumerate() {
                        out[(a, b)] = minor(m, rows, cols);
                    }
                }
                out
            })
            .collect();
        Self::new(format!("L{k}({})", self.label), gens)
    }

    /// Restriction to a subgroup whose generators are given as words.
    pub fn restrict(&self, words: &[Vec<usize>]) -> Self {
        let gens = words.iter().map(|w| self.eval_word(w)).collect();
        Self::new(self.label.clone(), gens).expect("non-empty word list")
    }

    /// The subrepresentation on the column span of `basis`, which must be
    /// invariant.
    pub fn subrepresentation(&self, basis: &Matrix, label: impl Into<String>) -> Result<Self> {
        let l = left_inverse(basis)?;
        let gens = self
            .gens
            .iter()
            .map(|m| {
                let image = m * basis;
                let sub = &l * &image;
                if (basis * &sub) != image {
                    return Err(Error::Domain("subspace is not invariant".into()));
                }
                Ok(sub)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(label, gens)
    }

    /// Conjugates by `P`: `g ↦ P ρ(g) P⁻¹`.
    pub fn conjugate_by(&self, p: &Matrix) -> Result<Self> {
        let pinv = p.inverse()?;
        let gens = self.gens.iter().map(|m| &(p * m) * &pinv).collect();
        Self::new(self.label.clone(), gens)
    }

    /// Irreducible iff the self-intertwiner space is one-dimensional.
    pub fn is_irreducible(&self) -> bool {
        intertwiners(&self.gens, &self.gens).map(|v| v.len() == 1).unwrap_or(false)
    }
}

pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn minor(m: &Matrix, rows: &[usize], cols: &[usize]) -> Cyclotomic {
    if rows.is_empty() {
        return Cyclotomic::one();
    }
    let sub = Matrix::from_rows(rows.iter().map(|&i| cols.iter().map(|&j| m[(i, j)].clone()).collect()).collect())
        .expect("square minor");
    sub.determinant()
}

/// `⟨a, b⟩ = (1/|W|) Σ_c |c| a(c) conj(b(c))`.
pub fn character_inner(g: &FiniteMatrixGroup, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
    let mut s = Cyclotomic::zero();
    for (c, (x, y)) in g.classes().iter().zip(a.iter().zip(b)) {
        s = s + (x * &y.conj()).scale(&Rational::from_int(c.len() as i64));
    }
    s.scale(&Rational::new(1, g.order() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::{linear_characters, ReflectionCatalog};

    #[test]
    fn exterior_powers_of_natural() {
        let g = FiniteMatrixGroup::builtin("g4").unwrap();
        let r = Representation::natural(&g);
        assert_eq!(r.exterior_power(0).unwrap().generators()[0], Matrix::identity(1));
        let top = r.exterior_power(2).unwrap();
        assert_eq!(top.dim(), 1);
        assert_eq!(top.generators()[0][(0, 0)], r.generators()[0].determinant());
        assert!(r.exterior_power(3).is_err());
        top.check_homomorphism(&g).unwrap();
    }

    #[test]
    fn twist_scales_character() {
        let g = FiniteMatrixGroup::builtin("g4").unwrap();
        let cat = ReflectionCatalog::new(&g).unwrap();
        let etas = linear_characters(&g, &cat).unwrap();
        let r = Representation::natural(&g);
        let chi = r.character(&g);
        for eta in &etas {
            let t = r.twist(&g, eta);
            t.check_homomorphism(&g).unwrap();
            for (c, cls) in g.classes().iter().enumerate() {
                assert_eq!(t.character(&g)[c], &chi[c] * eta.value(cls[0]));
            }
        }
    }

    #[test]
    fn irreducibility_and_orthogonality() {
        let g = FiniteMatrixGroup::builtin("g4").unwrap();
        let r = Representation::natural(&g);
        assert!(r.is_irreducible());
        let t = Representation::trivial(&g);
        assert!(!t.direct_sum(&t).is_irreducible());
        let chi = r.character(&g);
        assert!(character_inner(&g, &chi, &chi).is_one());
        assert!(character_inner(&g, &chi, &t.character(&g)).is_zero());
        assert!(character_inner(&g, &chi, &r.dual().character(&g)).is_zero());
    }
}
