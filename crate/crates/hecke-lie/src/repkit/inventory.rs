//! Complete lists of irreducible representations.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::exactnum::{cyclo_root, Cyclotomic, Rational};
use crate::groupkit::{imprimitive_subgroup_words, linear_characters, FiniteMatrixGroup, ReflectionCatalog};
use crate::matlin::{nullspace, Matrix, SpanBasis, TrackedSpan, Vector};
use crate::{Error, Result};

use super::tableaux::{ariki_koike_rep, multipartitions, standard_multitableaux, Multipartition};
use super::{character_inner, RepFile, Representation};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InventoryFile {
    pub group: String,
    pub representations: Vec<RepFile>,
}

/// Shipped inventories of the exceptional groups, by builtin name.
pub const BUNDLED_INVENTORIES: [(&str, &str); 3] = [
    ("g4", include_str!("../../data/inventory_g4.json")),
    ("g25", include_str!("../../data/inventory_g25.json")),
    ("g26", include_str!("../../data/inventory_g26.json")),
];

/// Irreducible representations of a group, one per isomorphism class.
#[derive(Clone, Debug)]
pub struct Inventory {
    pub reps: Vec<Representation>,
}

impl Inventory {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&Representation> {
        self.reps.iter().find(|r| r.label() == label)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.reps.iter().position(|r| r.label() == label)
    }

    pub fn sum_of_squares(&self) -> usize {
        self.reps.iter().map(|r| r.dim() * r.dim()).sum()
    }

    /// Checks `Σ dim² = |W|`, irreducibility and pairwise distinct characters.
    pub fn certify(&self, g: &FiniteMatrixGroup) -> Result<()> {
        if self.sum_of_squares() != g.order() {
            return Err(Error::Consistency(format!(
                "inventory has sum of squares {} for a group of order {}",
                self.sum_of_squares(),
                g.order()
            )));
        }
        let chars: Vec<Vec<Cyclotomic>> = self.reps.iter().map(|r| r.character(g)).collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let ip = character_inner(g, a, b);
                let want = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if ip != want {
                    return Err(Error::Consistency(format!(
                        "characters of {} and {} are not orthonormal",
                        self.reps[i].label(),
                        self.reps[j].label()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_file(&self, g: &FiniteMatrixGroup) -> InventoryFile {
        InventoryFile { group: g.name().to_string(), representations: self.reps.iter().map(|r| r.to_file(g)).collect() }
    }

    pub fn from_file(file: &InventoryFile, g: &FiniteMatrixGroup) -> Result<Self> {
        let reps = file.representations.iter().map(|r| Representation::from_file(r, g)).collect::<Result<_>>()?;
        Ok(Inventory { reps })
    }

    /// Seminormal models of G(de,1,r), restricted to G(de,e,r) and split.
    pub fn imprimitive(g: &FiniteMatrixGroup, d: usize, e: usize, r: usize) -> Result<Self> {
        let m = d * e;
        let words = imprimitive_subgroup_words(d as u32, e as u32, r as u32);
        let mut reps = Vec::new();
        let mut seen = BTreeSet::new();
        for shape in multipartitions(m, r) {
            if seen.contains(&shape) {
                continue;
            }
            let orbit: Vec<Multipartition> = (0..e).map(|j| shape.shift(d * j)).collect();
            let period = (1..=e).find(|&j| shape.shift(d * j) == shape).expect("shift by de is trivial");
            seen.extend(orbit);
            let rho = ariki_koike_rep(m, &shape)?;
            let res = rho.restrict(&words);
            if period == e {
                reps.push(res.with_label(shape.to_string()));
            } else {
                reps.extend(shift_split(&res, &shape, d * period, e / period)?);
            }
        }
        let inv = Inventory { reps };
        for r in &inv.reps {
            r.check_homomorphism(g)?;
        }
        Ok(inv)
    }
}

/// Splits the restriction of the seminormal model of `shape` along the
/// eigenspaces of the component shift by `step`, which has order `q`.
pub fn shift_split(res: &Representation, shape: &Multipartition, step: usize, q: usize) -> Result<Vec<Representation>> {
    let basis = standard_multitableaux(shape);
    let n = basis.len();
    let comps = shape.components();
    let mut s = Matrix::zeros(n, n);
    for (col, t) in basis.iter().enumerate() {
        let mut moved = t.clone();
        for p in moved.pos.iter_mut() {
            p.0 = (p.0 + comps - step) % comps;
        }
        let row = basis
            .iter()
            .position(|b| b == &moved)
            .ok_or_else(|| Error::Consistency(format!("{shape} is not invariant under a shift by {step}")))?;
        s[(row, col)] = Cyclotomic::one();
    }
    let powers: Vec<Matrix> = (0..q).map(|j| s.pow(j as u32)).collect();
    let mut out = Vec::new();
    for k in 0..q {
        let mut p = Matrix::zeros(n, n);
        for (j, sj) in powers.iter().enumerate() {
            let z = cyclo_root(q as u64, -((j * k) as i64))?;
            p = &p + &sj.scale(&z);
        }
        let mut span = SpanBasis::new(n);
        let mut cols = Vec::new();
        for j in 0..n {
            let c = p.column(j);
            if span.insert(c.clone())? {
                cols.push(c);
            }
        }
        let b = Matrix::from_columns(n, &cols);
        out.push(res.subrepresentation(&b, format!("{shape}#{k}"))?);
    }
    Ok(out)
}

/// The inventory of a group, dispatched on its name: bundled data for the
/// exceptional groups, seminormal models for `G(de,e,r)`.
pub fn inventory_for(g: &FiniteMatrixGroup) -> Result<Inventory> {
    let key = g.name().to_lowercase();
    if let Some((_, text)) = BUNDLED_INVENTORIES.iter().find(|(n, _)| *n == key) {
        let file: InventoryFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("inventory: {e}")))?;
        return Inventory::from_file(&file, g);
    }
    let inner = key
        .strip_prefix("g(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Domain(format!("no inventory available for {}", g.name())))?;
    let nums: Vec<usize> = inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("group name {}", g.name()))))
        .collect::<Result<_>>()?;
    let [m, e, r] = nums[..] else {
        return Err(Error::Parse(format!("group name {}", g.name())));
    };
    Inventory::imprimitive(g, m / e, e, r)
}

fn minimal_polynomial(a: &Matrix) -> Vec<Cyclotomic> {
    let n = a.rows();
    let mut span = TrackedSpan::new(n * n);
    let mut p = Matrix::identity(n);
    loop {
        let v = p.entries().to_vec();
        if span.insert(v.clone()).expect("square powers").is_none() {
            let c = span.express(&v).expect("dependent power lies in span");
            let mut poly: Vec<Cyclotomic> = c.into_iter().map(|x| -x).collect();
            poly.push(Cyclotomic::one());
            return poly;
        }
        p = &p * a;
    }
}

fn eval_poly(p: &[Cyclotomic], x: &Cyclotomic) -> Cyclotomic {
    p.iter().rev().fold(Cyclotomic::zero(), |acc, c| &acc * x + c.clone())
}

/// Roots of a polynomial that are algebraic integers of modulus at most
/// `radius` in `ℤ[ζ_N]`, for `N` with `φ(N) ≤ 2`.
fn integral_roots(p: &[Cyclotomic], radius: usize, conductor: u32) -> Result<Vec<Cyclotomic>> {
    let deg = p.len() - 1;
    let bound = (radius as i64) * 2 + 1;
    let mut roots = Vec::new();
    let unit = match conductor {
        1 | 2 => None,
        3 | 6 => Some((cyclo_root(3, 1)?, 1)),
        4 => Some((cyclo_root(4, 1)?, 0)),
        _ => return Err(Error::Domain(format!("root search unsupported for conductor {conductor}"))),
    };
    let r2 = (radius * radius) as i64;
    for a in -bound..=bound {
        let bs: Vec<i64> = if unit.is_some() { (-bound..=bound).collect() } else { vec![0] };
        for b in bs {
            // norm of a + b·u: a² − ab + b² for u = ω, a² + b² for u = i
            let norm = match unit {
                Some((_, 1)) => a * a - a * b + b * b,
                Some(_) => a * a + b * b,
                None => a * a,
            };
            if norm > r2 {
                continue;
            }
            let x = match &unit {
                Some((u, _)) => Cyclotomic::from_int(a) + u.scale(&Rational::from_int(b)),
                None => Cyclotomic::from_int(a),
            };
            if eval_poly(p, &x).is_zero() {
                roots.push(x);
                if roots.len() == deg {
                    return Ok(roots);
                }
            }
        }
    }
    Err(Error::Consistency(format!("found {} of {deg} central eigenvalues", roots.len())))
}

struct Piece {
    basis: Matrix,
    left: Matrix,
}

impl Piece {
    fn new(basis: Matrix) -> Result<Self> {
        let left = crate::matlin::left_inverse(&basis)?;
        Ok(Piece { basis, left })
    }

    fn restrict(&self, a: &Matrix) -> Matrix {
        &self.left * &(a * &self.basis)
    }
}

fn spin(gens: &[Matrix], v: Vector) -> Vec<Vector> {
    let n = v.len();
    let mut span = SpanBasis::new(n);
    let mut kept = Vec::new();
    let mut queue = vec![v];
    while let Some(w) = queue.pop() {
        if span.insert(w.clone()).expect("same length") {
            for g in gens {
                queue.push(g.mul_vec(&w));
            }
            kept.push(w);
        }
    }
    kept
}

/// One irreducible constituent of an isotypic representation.
fn isotypic_constituent(g: &FiniteMatrixGroup, q: &Representation, conductor: u32) -> Result<Representation> {
    if q.is_irreducible() {
        return Ok(q.clone());
    }
    let field_order = if conductor.is_multiple_of(2) { conductor } else { 2 * conductor };
    let mut candidates: Vec<(usize, Vec<Vector>)> = Vec::new();
    for cls in g.classes() {
        let x = cls[0];
        let ord = g.element_order(x);
        if field_order % ord != 0 || ord == 1 {
            continue;
        }
        let m = q.eval(g, x);
        for k in 0..ord {
            let z = cyclo_root(ord as u64, k as i64)?;
            let k_space = nullspace(&(m - &Matrix::scalar(q.dim(), z)));
            if !k_space.is_empty() {
                candidates.push((k_space.len(), k_space));
            }
        }
    }
    candidates.sort_by_key(|c| c.0);
    for (_, space) in candidates {
        for v in space {
            let cols = spin(q.generators(), v);
            if cols.len() < q.dim() {
                let sub = q.subrepresentation(&Matrix::from_columns(q.dim(), &cols), q.label())?;
                return isotypic_constituent(g, &sub, conductor);
            }
        }
    }
    Err(Error::Consistency(format!("could not split an isotypic piece of {}", q.label())))
}

/// Irreducible constituents of `m`, one per isomorphism type, skipping those
/// whose characters are already in `known`.
fn constituents(
    g: &FiniteMatrixGroup,
    m: &Representation,
    known: &[Vec<Cyclotomic>],
    conductor: u32,
) -> Result<Vec<Representation>> {
    let n = m.dim();
    let ms = m.matrices(g);
    let mut pieces = vec![Piece::new(Matrix::identity(n))?];
    let mut order: Vec<usize> = (0..g.classes().len()).filter(|&c| g.classes()[c][0] != 0).collect();
    order.sort_by_key(|&c| g.classes()[c].len());
    let class_char =
        |p: &Piece| -> Vec<Cyclotomic> { g.classes().iter().map(|c| p.restrict(&ms[c[0]]).trace()).collect() };
    for c in order {
        let mut sum = Matrix::zeros(n, n);
        for &x in &g.classes()[c] {
            sum = &sum + &ms[x];
        }
        let mut next = Vec::new();
        for p in pieces {
            let a = p.restrict(&sum);
            if a.as_scalar().is_some() {
                next.push(p);
                continue;
            }
            let poly = minimal_polynomial(&a);
            for x in integral_roots(&poly, g.classes()[c].len(), conductor)? {
                let k = nullspace(&(&a - &Matrix::scalar(a.rows(), x)));
                let sub = &p.basis * &Matrix::from_columns(a.rows(), &k);
                next.push(Piece::new(sub)?);
            }
        }
        pieces = next;
    }
    let mut out = Vec::new();
    for p in pieces {
        let chi = class_char(&p);
        let mult2 = character_inner(g, &chi, &chi);
        let mult = (1..=p.basis.cols())
            .find(|&k| Cyclotomic::from_int((k * k) as i64) == mult2)
            .ok_or_else(|| Error::Consistency("piece is not isotypic".into()))?;
        let irr_chi: Vec<Cyclotomic> = chi.iter().map(|x| x.scale(&Rational::new(1, mult as i64))).collect();
        if known.contains(&irr_chi) {
            continue;
        }
        let sub = m.subrepresentation(&p.basis, m.label())?;
        out.push(isotypic_constituent(g, &sub, conductor)?);
    }
    Ok(out)
}

/// Finds every irreducible representation by decomposing the seeds and then
/// tensor products and duals of what has been found, up to `max_dim`.
pub fn build_inventory(g: &FiniteMatrixGroup, seeds: &[Representation], max_dim: usize) -> Result<Inventory> {
    let conductor = g.conductor();
    let mut found: Vec<Representation> = Vec::new();
    let mut chars: Vec<Vec<Cyclotomic>> = Vec::new();
    let absorb =
        |m: &Representation, found: &mut Vec<Representation>, chars: &mut Vec<Vec<Cyclotomic>>| -> Result<()> {
            for irr in constituents(g, m, chars, conductor)? {
                chars.push(irr.character(g));
                found.push(irr);
            }
            Ok(())
        };
    for s in seeds {
        absorb(s, &mut found, &mut chars)?;
    }
    let mut tried = BTreeSet::new();
    while found.iter().map(|r| r.dim() * r.dim()).sum::<usize>() < g.order() {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in 0..found.len() {
            if !tried.contains(&(i, usize::MAX)) && found[i].dim() > 1 {
                let cand = (found[i].dim(), i, usize::MAX);
                best = best.min(Some(cand)).or(Some(cand));
            }
            for j in i..found.len() {
                let d = found[i].dim() * found[j].dim();
                if d <= max_dim && found[i].dim() > 1 && found[j].dim() > 1 && !tried.contains(&(i, j)) {
                    let cand = (d, i, j);
                    best = Some(best.map_or(cand, |b| b.min(cand)));
                }
            }
        }
        let Some((_, i, j)) = best else {
            return Err(Error::Resource(format!("inventory incomplete within dimension {max_dim}")));
        };
        tried.insert((i, j));
        let m = if j == usize::MAX { found[i].dual() } else { found[i].tensor_in(&found[j], g) };
        absorb(&m, &mut found, &mut chars)?;
    }
    let mut reps: Vec<Representation> = found;
    reps.sort_by_key(|r| r.dim());
    let inv = Inventory { reps };
    inv.certify(g)?;
    Ok(inv)
}

/// Eigenvalue multiplicities of `m` at `1, ω, ω²`.
fn cubic_spectrum(m: &Matrix) -> Result<[usize; 3]> {
    let mut out = [0; 3];
    for (k, slot) in out.iter_mut().enumerate() {
        let z = cyclo_root(3, k as i64)?;
        *slot = nullspace(&(m - &Matrix::scalar(m.rows(), z))).len();
    }
    if out.iter().sum::<usize>() != m.rows() {
        return Err(Error::Domain("matrix is not diagonalizable over cube roots of unity".into()));
    }
    Ok(out)
}

const ROOT_NAMES: [&str; 3] = ["1", "j", "j^2"];

/// Names irreducibles of G4 and G25 by the spectrum of a distinguished
/// reflection, and those of G26 by dimension and discovery order.
///
/// For G25 the two 9-dimensional representations are told apart by the
/// scalar through which the central element `ωI` acts: `X` gets `ω`.
pub fn exceptional_label(group: &str, g: &FiniteMatrixGroup, rho: &Representation, ordinal: usize) -> Result<String> {
    let group = group.to_lowercase();
    if group == "g26" {
        return Ok(format!("phi{}_{}", rho.dim(), ordinal));
    }
    let cat = ReflectionCatalog::new(g)?;
    let s = cat.s()[0];
    let sp = cubic_spectrum(rho.eval(g, s))?;
    let with = |k: usize| (0..3).filter(|&i| sp[i] == k).collect::<Vec<_>>();
    let name = |i: usize| ROOT_NAMES[i];
    let label = match (group.as_str(), rho.dim()) {
        (_, 1) => format!("S_{}", name(with(1)[0])),
        ("g4", 2) => format!("U_{}", name(with(0)[0])),
        ("g4", 3) => "Vbar".to_string(),
        ("g25", 2) => {
            let v = with(1);
            format!("U_{{{},{}}}", name(v[0]), name(v[1]))
        }
        ("g25", 3) if with(1).len() == 3 => "V".to_string(),
        ("g25", 3) => format!("U'_{{{},{}}}", name(with(2)[0]), name(with(1)[0])),
        ("g25", 6) => format!("V_{{{},{}}}", name(with(3)[0]), name(with(2)[0])),
        ("g25", 8) => format!("W_{}", name(with(4)[0])),
        ("g25", 9) => {
            let n = g.degree();
            let z = Matrix::scalar(n, cyclo_root(3, 1)?);
            let zi = g.index_of(&z).ok_or_else(|| Error::Consistency("ωI is not in the group".into()))?;
            let scalar =
                rho.eval(g, zi).as_scalar().ok_or_else(|| Error::Consistency("central element not scalar".into()))?;
            if scalar == cyclo_root(3, 1)? {
                "X".to_string()
            } else {
                "X*".to_string()
            }
        }
        _ => return Err(Error::Domain(format!("no naming scheme for dimension {} in {group}", rho.dim()))),
    };
    Ok(label)
}

/// Builds and labels the inventory of a bundled exceptional group from its
/// natural representation and linear characters.
pub fn rebuild_exceptional(name: &str, g: &FiniteMatrixGroup, max_dim: usize) -> Result<Inventory> {
    let cat = ReflectionCatalog::new(g)?;
    let mut seeds: Vec<Representation> =
        linear_characters(g, &cat)?.iter().map(|eta| Representation::from_linear_character(g, eta, "linear")).collect();
    seeds.push(Representation::natural(g));
    let inv = build_inventory(g, &seeds, max_dim)?;
    let mut reps = Vec::new();
    let mut counts = std::collections::BTreeMap::new();
    for r in inv.reps {
        let k = counts.entry(r.dim()).or_insert(0usize);
        *k += 1;
        let label = exceptional_label(name, g, &r, *k)?;
        reps.push(r.with_label(label));
    }
    let labels: BTreeSet<&str> = reps.iter().map(|r| r.label()).collect();
    if labels.len() != reps.len() {
        return Err(Error::Consistency("labels are not unique".into()));
    }
    Ok(Inventory { reps })
}
