//! Lie subalgebras generated by matrices.
//!
//! [`LieClosure`] spans the smallest bracket-closed subspace containing a
//! generator list. On top of it sit the derived and central parts, invariant
//! forms of the derived image, and the isomorphism and shared-ideal tests used
//! to split an image in a sum of representations into simple ideals.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactnum::{Cyclotomic, Rational};
use crate::matlin::{
    flatten, form_symmetry, intertwiners, invariant_bilinear_forms, nullspace, FormSymmetry, Matrix, SpanBasis, Vector,
};
use crate::{Error, Result};

/// Span closure of `gens` under `bracket(generator, element)`.
///
/// Returns the span and the vectors inserted along the way, which together
/// span the same space.
pub fn closure_by<F>(ambient: usize, gens: &[Vector], bracket: F) -> Result<(SpanBasis, Vec<Vector>)>
where
    F: Fn(usize, &Vector) -> Vector,
{
    let mut span = SpanBasis::new(ambient);
    let mut kept = Vec::new();
    let mut queue = VecDeque::new();
    for g in gens {
        if let Some(v) = span.insert_residue(g.clone())? {
            kept.push(v.clone());
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if span.is_full() {
            break;
        }
        for k in 0..gens.len() {
            if let Some(w) = span.insert_residue(bracket(k, &v))? {
                kept.push(w.clone());
                queue.push_back(w.clone());
            }
        }
    }
    Ok((span, kept))
}

fn unflatten(n: usize, v: &[Cyclotomic]) -> Matrix {
    Matrix::from_vec(n, n, v.to_vec()).expect("n² entries")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualityClass {
    None,
    Orthogonal,
    Symplectic,
}

impl fmt::Display for DualityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualityClass::None => "none",
            DualityClass::Orthogonal => "orthogonal",
            DualityClass::Symplectic => "symplectic",
        })
    }
}

/// The bracket-closed span of some square matrices.
#[derive(Clone, Debug)]
pub struct LieClosure {
    n: usize,
    gens: Vec<Matrix>,
    span: SpanBasis,
    elements: Vec<Matrix>,
}

impl LieClosure {
    pub fn new(gens: &[Matrix]) -> Result<Self> {
        let n = gens.first().map(Matrix::rows).ok_or_else(|| Error::shape("closure of an empty generator list"))?;
        if gens.iter().any(|g| !g.is_square() || g.rows() != n) {
            return Err(Error::shape("closure generators must be square of one size"));
        }
        let flat: Vec<Vector> = gens.iter().map(flatten).collect();
        let (span, kept) = closure_by(n * n, &flat, |k, v| flatten(&gens[k].bracket(&unflatten(n, v))))?;
        let elements = kept.iter().map(|v| unflatten(n, v)).collect();
        Ok(LieClosure { n, gens: gens.to_vec(), span, elements })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    /// Matrices spanning the closure.
    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.span.contains(&flatten(m))
    }

    pub fn has_traceful(&self) -> bool {
        self.elements.iter().any(|m| !m.trace().is_zero())
    }

    /// Matrices spanning `[C, C]`, which equals the span of the brackets of
    /// the generators with the closure.
    pub fn derived_elements(&self) -> Result<Vec<Matrix>> {
        let mut span = SpanBasis::new(self.n * self.n);
        let mut out = Vec::new();
        for g in &self.gens {
            for e in &self.elements {
                let b = g.bracket(e);
                if let Some(v) = span.insert_residue(flatten(&b))? {
                    out.push(unflatten(self.n, v));
                }
            }
        }
        Ok(out)
    }

    pub fn derived_dim(&self) -> Result<usize> {
        Ok(self.derived_elements()?.len())
    }

    /// Dimension of `{x ∈ C : [x, g] = 0 for every generator g}`.
    pub fn center_dim(&self) -> usize {
        let d = self.elements.len();
        if d == 0 {
            return 0;
        }
        let nn = self.n * self.n;
        let mut sys = Matrix::zeros(nn * self.gens.len(), d);
        for (j, e) in self.elements.iter().enumerate() {
            for (k, g) in self.gens.iter().enumerate() {
                let b = e.bracket(g);
                for (i, x) in b.entries().iter().enumerate() {
                    sys[(k * nn + i, j)] = x.clone();
                }
            }
        }
        nullspace(&sys).len()
    }

    /// Type of the invariant bilinear form of the derived part, which must act
    /// irreducibly.
    pub fn duality_class(&self) -> Result<DualityClass> {
        let derived = self.derived_elements()?;
        duality_class_of(&derived)
    }
}

/// Invariant-form type of the Lie algebra spanned by `xs`.
pub fn duality_class_of(xs: &[Matrix]) -> Result<DualityClass> {
    if xs.is_empty() {
        return Err(Error::Precondition("zero Lie algebra has no distinguished form".into()));
    }
    let forms = invariant_bilinear_forms(xs)?;
    match forms.len() {
        0 => Ok(DualityClass::None),
        1 => {
            let b = &forms[0];
            if b.rank() != b.rows() {
                return Err(Error::Consistency("invariant form is degenerate".into()));
            }
            match form_symmetry(b) {
                FormSymmetry::Symmetric => Ok(DualityClass::Orthogonal),
                FormSymmetry::Skew => Ok(DualityClass::Symplectic),
                FormSymmetry::Neither => Err(Error::Consistency("invariant form is neither symmetric nor skew".into())),
            }
        }
        k => Err(Error::Precondition(format!("{k} independent invariant forms: the action is reducible"))),
    }
}

/// `x − (tr x / n)·1`.
pub fn traceless(x: &Matrix) -> Matrix {
    let n = x.rows();
    let t = x.trace().scale(&Rational::new(1, n as i64));
    x - &Matrix::scalar(n, t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoMode {
    Straight,
    Dual,
}

/// Whether some invertible `P` satisfies `P·B_i = A_i·P` (straight) or
/// `P·B_i = −A_iᵀ·P` (dual) for every `i`.
pub fn restriction_iso(a: &[Matrix], b: &[Matrix], mode: IsoMode) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::shape("restriction_iso needs equal generator counts"));
    }
    if a.is_empty() || a[0].rows() != b[0].rows() {
        return Ok(false);
    }
    let lhs: Vec<Matrix> = match mode {
        IsoMode::Straight => a.to_vec(),
        IsoMode::Dual => a.iter().map(|m| -&m.transpose()).collect(),
    };
    let sols = intertwiners(&lhs, b)?;
    Ok(invertible_combination(&sols).is_some())
}

/// An invertible member of the span of `ms`, trying small integer
/// combinations.
pub fn invertible_combination(ms: &[Matrix]) -> Option<Matrix> {
    let n = ms.first()?.rows();
    for attempt in 0..8i64 {
        let mut p = Matrix::zeros(n, n);
        for (i, m) in ms.iter().enumerate() {
            let c = Cyclotomic::from_int(1 + (attempt * (i as i64 + 1)) % 7 + i as i64 * attempt);
            p = &p + &m.scale(&c);
        }
        if p.rank() == n {
            return Some(p);
        }
    }
    None
}

/// Block-diagonal generators `A_i ⊕ B_i`.
pub fn direct_sum_gens(a: &[Matrix], b: &[Matrix]) -> Result<Vec<Matrix>> {
    if a.len() != b.len() {
        return Err(Error::shape("generator lists of different lengths"));
    }
    Ok(a.iter().zip(b).map(|(x, y)| x.direct_sum(y)).collect())
}

/// Dimension of the derived image of the generator list acting on both
/// spaces at once.
pub fn pair_derived_dim(a: &[Matrix], b: &[Matrix]) -> Result<usize> {
    LieClosure::new(&direct_sum_gens(a, b)?)?.derived_dim()
}

/// Whether the derived images of the same abstract generators in two
/// representations share a simple ideal.
pub fn shared_ideal(a: &[Matrix], b: &[Matrix]) -> Result<bool> {
    let da = LieClosure::new(a)?.derived_dim()?;
    let db = LieClosure::new(b)?.derived_dim()?;
    Ok(pair_derived_dim(a, b)? < da + db)
}

/// A simple Lie algebra named from its dimension and a faithful module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "lowercase")]
pub enum SimpleType {
    Sl(usize),
    So(usize),
    Sp(usize),
    Other(usize),
}

impl SimpleType {
    pub fn dim(&self) -> usize {
        match *self {
            SimpleType::Sl(n) => n * n - 1,
            SimpleType::So(n) => n * (n - 1) / 2,
            SimpleType::Sp(n) => n * (n + 1) / 2,
            SimpleType::Other(d) => d,
        }
    }

    /// Identifies a simple ideal of dimension `d` acting faithfully and
    /// irreducibly on a module of dimension `module` with the given form.
    pub fn identify(d: usize, module: usize, duality: Option<&DualityClass>) -> Self {
        if d + 1 == module * module {
            return SimpleType::Sl(module);
        }
        match duality {
            Some(DualityClass::Orthogonal) if d == module * (module.saturating_sub(1)) / 2 && module != 3 => {
                return SimpleType::So(module)
            }
            Some(DualityClass::Symplectic) if d == module * (module + 1) / 2 && module != 2 => {
                return SimpleType::Sp(module)
            }
            _ => {}
        }
        let n = (1..=64usize).find(|n| n * n > d).unwrap_or(0);
        if n * n - 1 == d {
            SimpleType::Sl(n)
        } else {
            SimpleType::Other(d)
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::Sl(n) => write!(f, "sl{n}"),
            SimpleType::So(n) => write!(f, "so{n}"),
            SimpleType::Sp(n) => write!(f, "sp{n}"),
            SimpleType::Other(d) => write!(f, "other({d})"),
        }
    }
}

/// One representation's contribution to an ideal decomposition.
#[derive(Clone, Debug)]
pub struct ImageSummary {
    pub image_dim: usize,
    pub derived_dim: usize,
    pub derived: Vec<Matrix>,
    pub full_sl: bool,
}

impl ImageSummary {
    pub fn of(gens: &[Matrix]) -> Result<Self> {
        let c = LieClosure::new(gens)?;
        let derived = c.derived_elements()?;
        let n = c.ambient_dim();
        Ok(ImageSummary {
            image_dim: c.dim(),
            derived_dim: derived.len(),
            full_sl: derived.len() + 1 == n * n,
            derived,
        })
    }
}

/// A simple (or, failing separation, semisimple) ideal found by
/// [`split_ideals`], with the index of a representation realizing it.
#[derive(Clone, Debug)]
pub struct FoundIdeal {
    pub dim: usize,
    pub witness: usize,
    pub members: Vec<usize>,
}

/// Splits the derived image of one generator list acting on several modules
/// into ideals, recording which modules each ideal acts on.
///
/// Modules are visited by increasing derived dimension. Each is compared with
/// the witness of every known ideal; the part of its derived image not
/// accounted for opens a new ideal.
pub fn split_ideals(gens: &[Vec<Matrix>], summaries: &[ImageSummary]) -> Result<(Vec<FoundIdeal>, Vec<Vec<usize>>)> {
    let mut order: Vec<usize> = (0..gens.len()).filter(|&i| summaries[i].derived_dim > 0).collect();
    order.sort_by_key(|&i| (summaries[i].derived_dim, i));
    let traceless_gens: Vec<Vec<Matrix>> = gens.iter().map(|g| g.iter().map(traceless).collect()).collect();
    let mut ideals: Vec<FoundIdeal> = Vec::new();
    // ideals acting nontrivially on each module
    let mut contains: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
    for &i in &order {
        let si = &summaries[i];
        let mut accounted = 0usize;
        for k in 0..ideals.len() {
            let w = ideals[k].witness;
            let sw = &summaries[w];
            let shared = if si.full_sl && sw.full_sl {
                if gens[i][0].rows() == gens[w][0].rows()
                    && (restriction_iso(&traceless_gens[w], &traceless_gens[i], IsoMode::Straight)?
                        || restriction_iso(&traceless_gens[w], &traceless_gens[i], IsoMode::Dual)?)
                {
                    si.derived_dim
                } else {
                    0
                }
            } else if si.full_sl && ideals[k].dim != si.derived_dim {
                0
            } else {
                let pair = pair_derived_dim(&gens[i], &gens[w])?;
                let overlap = si.derived_dim + sw.derived_dim - pair;
                // subtract the earlier ideals that both already share
                let earlier: usize =
                    contains[w].iter().filter(|&&j| j < k && contains[i].contains(&j)).map(|&j| ideals[j].dim).sum();
                overlap.checked_sub(earlier).ok_or_else(|| {
                    Error::Consistency(format!("ideal bookkeeping went negative for module {i} against ideal {k}"))
                })?
            };
            if shared > 0 {
                if shared != ideals[k].dim {
                    return Err(Error::Consistency(format!(
                        "module {i} meets ideal {k} in dimension {shared} of {}",
                        ideals[k].dim
                    )));
                }
                contains[i].push(k);
                ideals[k].members.push(i);
                accounted += shared;
            }
        }
        if accounted > si.derived_dim {
            return Err(Error::Consistency(format!("module {i} over-accounted")));
        }
        if accounted < si.derived_dim {
            let k = ideals.len();
            ideals.push(FoundIdeal { dim: si.derived_dim - accounted, witness: i, members: vec![i] });
            contains[i].push(k);
        }
    }
    Ok((ideals, contains))
}
