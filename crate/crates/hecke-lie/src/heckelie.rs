//! Infinitesimal Hecke algebras: generator sets, the classification of
//! irreducibles, and decomposition reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactnum::{cyclo_root, Cyclotomic, Rational};
use crate::groupkit::{linear_characters, FiniteMatrixGroup, GroupAlgebraElement, LinearCharacter, ReflectionCatalog};
use crate::liecore::{
    closure_by, duality_class_of, restriction_iso, split_ideals, traceless, DualityClass, ImageSummary, IsoMode,
    SimpleType,
};
use crate::matlin::{intertwiners, nullspace, Matrix, SpanBasis, Vector};
use crate::repkit::{character_inner, inventory_for, Inventory, Representation};
use crate::{Error, Result};

/// Largest group whose algebra is closed directly to cross-check centers.
pub const GROUP_ALGEBRA_CHECK_LIMIT: usize = 100;

/// A group together with its reflections, linear characters and irreducibles.
pub struct Context {
    pub group: FiniteMatrixGroup,
    pub catalog: ReflectionCatalog,
    pub characters: Vec<LinearCharacter>,
    pub inventory: Inventory,
    irr_chars: Vec<Vec<Cyclotomic>>,
}

impl Context {
    pub fn new(group: FiniteMatrixGroup) -> Result<Self> {
        let inventory = inventory_for(&group)?;
        Self::with_inventory(group, inventory)
    }

    pub fn builtin(name: &str) -> Result<Self> {
        Self::new(FiniteMatrixGroup::builtin(name)?)
    }

    pub fn with_inventory(group: FiniteMatrixGroup, inventory: Inventory) -> Result<Self> {
        inventory.certify(&group)?;
        let catalog = ReflectionCatalog::new(&group)?;
        let characters = linear_characters(&group, &catalog)?;
        let irr_chars = inventory.reps.iter().map(|r| r.character(&group)).collect();
        Ok(Context { group, catalog, characters, inventory, irr_chars })
    }

    pub fn irreducibles(&self) -> &[Representation] {
        &self.inventory.reps
    }

    pub fn rep(&self, label: &str) -> Result<&Representation> {
        self.inventory.get(label).ok_or_else(|| Error::Domain(format!("no irreducible labelled {label:?}")))
    }

    /// Index in the inventory of the irreducible with character `chi`.
    pub fn identify(&self, chi: &[Cyclotomic]) -> Option<usize> {
        self.irr_chars.iter().position(|c| c.as_slice() == chi)
    }

    pub fn irr_character(&self, i: usize) -> &[Cyclotomic] {
        &self.irr_chars[i]
    }

    /// `Σ c_g ρ(g)`.
    pub fn image(&self, rho: &Representation, x: &GroupAlgebraElement) -> Matrix {
        let ms = rho.matrices(&self.group);
        let mut out = Matrix::zeros(rho.dim(), rho.dim());
        for (&g, c) in &x.terms {
            out = &out + &ms[g].scale(c);
        }
        out
    }

    pub fn images(&self, rho: &Representation, xs: &[GroupAlgebraElement]) -> Vec<Matrix> {
        xs.iter().map(|x| self.image(rho, x)).collect()
    }

    fn power_element(&self, s: usize, k: u32) -> usize {
        self.group.power(s, k)
    }

    /// Hyperplane class of a reflection.
    pub fn class_of_reflection(&self, s: usize) -> Result<usize> {
        self.catalog
            .get(s)
            .map(|r| r.hyperplane_class_id)
            .ok_or_else(|| Error::Domain(format!("element {s} is not a reflection")))
    }
}

/// `λ = (λ^c)_{c ∈ C₊}`, one vector of length `e_c − 1` per hyperplane class
/// with `e_c > 2`, in catalog order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterPoint {
    pub values: Vec<Vec<Cyclotomic>>,
}

impl ParameterPoint {
    pub fn new(values: Vec<Vec<Cyclotomic>>) -> Self {
        ParameterPoint { values }
    }

    pub fn check_shape(&self, ctx: &Context) -> Result<()> {
        let cp = ctx.catalog.c_plus();
        if cp.len() != self.values.len() {
            return Err(Error::shape(format!("λ has {} classes, the group has {}", self.values.len(), cp.len())));
        }
        for (v, &c) in self.values.iter().zip(&cp) {
            let e = ctx.catalog.classes[c].e as usize;
            if v.len() != e - 1 {
                return Err(Error::shape(format!("class {c} needs {} coordinates, got {}", e - 1, v.len())));
            }
        }
        Ok(())
    }

    /// The coordinates attached to hyperplane class `c`.
    pub fn for_class(&self, ctx: &Context, c: usize) -> Option<&[Cyclotomic]> {
        ctx.catalog.c_plus().iter().position(|&x| x == c).map(|i| self.values[i].as_slice())
    }
}

impl FromStr for ParameterPoint {
    type Err = Error;

    /// Classes separated by `;`, coordinates by `,`: `1,-1` or `1,z3;2`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(';')
            .map(|class| class.split(',').map(|x| x.trim().parse::<Cyclotomic>().map_err(Error::from)).collect())
            .collect::<Result<_>>()?;
        Ok(ParameterPoint { values })
    }
}

impl fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.values.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        f.write_str(&parts.join(";"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GenTag {
    H,
    Hs,
    Hlambda(ParameterPoint),
    HU(Vec<usize>),
    HUtilde(Vec<usize>),
    Hst,
}

impl fmt::Display for GenTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenTag::H => f.write_str("H"),
            GenTag::Hs => f.write_str("Hs"),
            GenTag::Hlambda(l) => write!(f, "Hlambda({l})"),
            GenTag::HU(u) => write!(f, "HU{u:?}"),
            GenTag::HUtilde(u) => write!(f, "HUtilde{u:?}"),
            GenTag::Hst => f.write_str("Hst"),
        }
    }
}

fn check_generating(ctx: &Context, u: &[usize]) -> Result<()> {
    let s = ctx.catalog.s();
    if let Some(x) = u.iter().find(|x| !s.contains(x)) {
        return Err(Error::Precondition(format!("element {x} is not a distinguished reflection")));
    }
    if ctx.group.subgroup(u).len() != ctx.group.order() {
        return Err(Error::Precondition("U does not generate the group".into()));
    }
    Ok(())
}

/// The generators of the Lie algebra named by `tag`, as group-algebra
/// elements.
pub fn gen_elements(ctx: &Context, tag: &GenTag) -> Result<Vec<GroupAlgebraElement>> {
    let cat = &ctx.catalog;
    let basis = |xs: Vec<usize>| xs.into_iter().map(GroupAlgebraElement::basis).collect::<Vec<_>>();
    let weighted = |s: usize, w: &[Cyclotomic]| -> GroupAlgebraElement {
        let mut x = GroupAlgebraElement::zero();
        for (k, c) in w.iter().enumerate() {
            x.add_term(ctx.power_element(s, k as u32 + 1), c);
        }
        x
    };
    Ok(match tag {
        GenTag::H => basis(cat.r()),
        GenTag::Hs => basis(cat.s()),
        GenTag::Hlambda(l) => {
            l.check_shape(ctx)?;
            let mut out = basis(cat.s0());
            for s in cat.s_plus() {
                let c = ctx.class_of_reflection(s)?;
                out.push(weighted(s, l.for_class(ctx, c).expect("shape checked")));
            }
            out
        }
        GenTag::HU(u) => {
            check_generating(ctx, u)?;
            basis(u.clone())
        }
        GenTag::HUtilde(u) => {
            check_generating(ctx, u)?;
            let mut all = Vec::new();
            for &s in u {
                let e = ctx.group.element_order(s);
                for k in 1..e {
                    let p = ctx.power_element(s, k);
                    if !all.contains(&p) {
                        all.push(p);
                    }
                }
            }
            basis(all)
        }
        GenTag::Hst => {
            let mut out = basis(cat.s0());
            for s in cat.s_plus() {
                let e = cat.classes[ctx.class_of_reflection(s)?].e as usize;
                out.push(weighted(s, &vec![Cyclotomic::one(); e - 1]));
            }
            out
        }
    })
}

/// Generator images in `ρ`.
pub fn gen_set(ctx: &Context, rho: &Representation, tag: &GenTag) -> Result<Vec<Matrix>> {
    Ok(ctx.images(rho, &gen_elements(ctx, tag)?))
}

/// `T_c(λ)` for a hyperplane class `c`; the plain class sum when `e_c = 2`.
pub fn central_element(ctx: &Context, c: usize, lambda: Option<&ParameterPoint>) -> Result<GroupAlgebraElement> {
    let class = ctx.catalog.classes.get(c).ok_or_else(|| Error::Domain(format!("no hyperplane class {c}")))?;
    let mut x = GroupAlgebraElement::zero();
    if class.e == 2 {
        for &s in &class.distinguished {
            x.add_term(s, &Cyclotomic::one());
        }
        return Ok(x);
    }
    let lambda = lambda.ok_or_else(|| Error::Precondition("λ is required for a class with e_c > 2".into()))?;
    lambda.check_shape(ctx)?;
    let w = lambda.for_class(ctx, c).expect("class in C₊");
    for &s in &class.distinguished {
        for (k, coef) in w.iter().enumerate() {
            x.add_term(ctx.power_element(s, k as u32 + 1), coef);
        }
    }
    Ok(x)
}

/// Which reflections define the primed generators `s′` in the ≈ tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReflectionSet {
    Distinguished,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `ρ ∈ ΛRef`.
    LambdaRef,
    /// Not in ΛRef and not selfdual on `H′`.
    E,
    /// Not in ΛRef and selfdual on `H′`.
    F,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IrrInfo {
    pub label: String,
    pub dim: usize,
    pub is_ref: bool,
    pub is_qref: bool,
    pub is_lambda_ref: bool,
    /// Indices into the context's linear characters.
    pub x: Vec<usize>,
    pub family: Family,
    pub duality: Option<DualityClass>,
    /// Index of the ≈-class.
    pub approx_class: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PredictedFactor {
    pub representative: String,
    pub simple_type: SimpleType,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IrrClassification {
    pub irreps: Vec<IrrInfo>,
    /// Members of each ≈-class, by inventory index.
    pub approx_classes: Vec<Vec<usize>>,
    pub predicted: Vec<PredictedFactor>,
}

impl IrrClassification {
    pub fn labels_where(&self, f: impl Fn(&IrrInfo) -> bool) -> Vec<String> {
        self.irreps.iter().filter(|i| f(i)).map(|i| i.label.clone()).collect()
    }

    pub fn predicted_dim(&self) -> usize {
        self.predicted.iter().map(|p| p.dim).sum()
    }

    /// The ≈-classes with more than one member, as labels.
    pub fn nontrivial_identifications(&self) -> Vec<Vec<String>> {
        self.approx_classes
            .iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.iter().map(|&i| self.irreps[i].label.clone()).collect())
            .collect()
    }
}

fn is_reflection_or_one(m: &Matrix) -> bool {
    (m - &Matrix::identity(m.rows())).rank() <= 1
}

/// Traceless parts `ρ(s′)` of the chosen reflections.
pub fn primed_images(ctx: &Context, rho: &Representation, set: ReflectionSet) -> Vec<Matrix> {
    let elems = match set {
        ReflectionSet::Distinguished => ctx.catalog.s(),
        ReflectionSet::All => ctx.catalog.r(),
    };
    elems.iter().map(|&s| traceless(rho.eval(&ctx.group, s))).collect()
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

/// Ref, QRef, ΛRef, `X(ρ)`, the relation ≈ and the split into E and F.
pub fn classify_irreps(ctx: &Context, set: ReflectionSet) -> Result<IrrClassification> {
    let g = &ctx.group;
    let reps = ctx.irreducibles();
    let s_elems = ctx.catalog.s();
    let n = reps.len();

    let is_ref: Vec<bool> =
        reps.iter().map(|r| r.dim() >= 2 && s_elems.iter().all(|&s| is_reflection_or_one(r.eval(g, s)))).collect();

    let mut qref = vec![false; n];
    let mut lref = vec![false; n];
    for (i, r) in reps.iter().enumerate() {
        if !is_ref[i] {
            continue;
        }
        for k in 0..=r.dim() {
            let base = r.exterior_power(k)?;
            let chi = base.character(g);
            for eta in &ctx.characters {
                let twisted: Vec<Cyclotomic> = g.classes().iter().zip(&chi).map(|(c, x)| x * eta.value(c[0])).collect();
                let j = ctx.identify(&twisted).ok_or_else(|| {
                    Error::Consistency(format!("a twisted exterior power of {} is not irreducible", r.label()))
                })?;
                lref[j] = true;
                if k == 1 {
                    qref[j] = true;
                }
            }
        }
    }

    let x: Vec<Vec<usize>> = reps
        .iter()
        .map(|r| {
            (0..ctx.characters.len())
                .filter(|&e| {
                    s_elems.iter().all(|&s| ctx.characters[e].value(s).is_one() || r.eval(g, s).as_scalar().is_some())
                })
                .collect()
        })
        .collect();

    let primed: Vec<Vec<Matrix>> = reps.iter().map(|r| primed_images(ctx, r, set)).collect();
    let live: Vec<bool> = primed.iter().map(|p| p.iter().any(|m| !m.is_zero())).collect();

    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if !live[i] || !live[j] || reps[i].dim() != reps[j].dim() || find(&mut parent, i) == find(&mut parent, j) {
                continue;
            }
            if restriction_iso(&primed[i], &primed[j], IsoMode::Straight)?
                || restriction_iso(&primed[i], &primed[j], IsoMode::Dual)?
            {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[b.max(a)] = a.min(b);
            }
        }
    }
    let mut approx_classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if root == i {
            class_of[i] = approx_classes.len();
            approx_classes.push(vec![i]);
        } else {
            class_of[i] = class_of[root];
            approx_classes[class_of[root]].push(i);
        }
    }

    let mut irreps = Vec::with_capacity(n);
    for (i, r) in reps.iter().enumerate() {
        let selfdual = live[i] && restriction_iso(&primed[i], &primed[i], IsoMode::Dual)?;
        let family = if lref[i] {
            Family::LambdaRef
        } else if selfdual {
            Family::F
        } else {
            Family::E
        };
        let duality = if selfdual { Some(duality_class_of(&primed[i])?) } else { None };
        irreps.push(IrrInfo {
            label: r.label().to_string(),
            dim: r.dim(),
            is_ref: is_ref[i],
            is_qref: qref[i],
            is_lambda_ref: lref[i],
            x: x[i].clone(),
            family,
            duality,
            approx_class: class_of[i],
        });
    }

    let mut predicted = Vec::new();
    for class in &approx_classes {
        let rep = class[0];
        let info = &irreps[rep];
        let n = info.dim;
        let ty = if class.iter().any(|&i| irreps[i].is_qref) {
            SimpleType::Sl(n)
        } else {
            match (&info.family, &info.duality) {
                (Family::LambdaRef, _) => continue,
                (Family::E, _) => SimpleType::Sl(n),
                (Family::F, Some(DualityClass::Orthogonal)) => SimpleType::So(n),
                (Family::F, Some(DualityClass::Symplectic)) => SimpleType::Sp(n),
                (Family::F, _) => return Err(Error::Consistency(format!("{} selfdual without a form", info.label))),
            }
        };
        if n < 2 {
            continue;
        }
        predicted.push(PredictedFactor { representative: info.label.clone(), dim: ty.dim(), simple_type: ty });
    }
    Ok(IrrClassification { irreps, approx_classes, predicted })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepImage {
    pub label: String,
    pub dim: usize,
    pub image_dim: usize,
    pub derived_dim: usize,
    /// Invariant-form type of the derived image, when it acts irreducibly.
    pub duality: Option<DualityClass>,
    /// Whether every generator acts by a scalar.
    pub scalar: bool,
    /// Indices of the blocks acting on this representation.
    pub blocks: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Block {
    pub simple_type: SimpleType,
    pub dim: usize,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupAlgebraCheck {
    pub dim: usize,
    pub center_dim: usize,
    pub derived_dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub group: String,
    pub tag: String,
    pub dim: Option<usize>,
    pub center_dim: Option<usize>,
    pub derived_dim: usize,
    pub reps: Vec<RepImage>,
    pub blocks: Vec<Block>,
    pub group_algebra: Option<GroupAlgebraCheck>,
    pub predicted: Option<Vec<PredictedFactor>>,
    pub checks: Vec<Check>,
}

impl DecompositionReport {
    pub fn block_dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.blocks.iter().map(|b| b.dim).collect();
        d.sort_unstable();
        d
    }

    pub fn rep(&self, label: &str) -> Option<&RepImage> {
        self.reps.iter().find(|r| r.label == label)
    }

    /// The block containing a representation, if its derived image is simple.
    pub fn block_of(&self, label: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.members.iter().any(|m| m == label))
    }

    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Semisimple type as a product, e.g. `sl2^3 x sl3`.
    pub fn structure(&self) -> String {
        let mut counts: Vec<(SimpleType, usize)> = Vec::new();
        for b in &self.blocks {
            match counts.iter_mut().find(|(t, _)| *t == b.simple_type) {
                Some((_, k)) => *k += 1,
                None => counts.push((b.simple_type.clone(), 1)),
            }
        }
        counts.sort_by_key(|(t, _)| t.dim());
        if counts.is_empty() {
            return "0".into();
        }
        counts
            .iter()
            .map(|(t, k)| if *k == 1 { t.to_string() } else { format!("{t}^{k}") })
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Closure of the generators inside the group algebra, with its center and
/// derived dimensions.
pub fn group_algebra_closure(ctx: &Context, gens: &[GroupAlgebraElement]) -> Result<GroupAlgebraCheck> {
    let g = &ctx.group;
    let n = g.order();
    let dense: Vec<Vector> = gens.iter().map(|x| x.to_dense(n)).collect();
    let bracket = |x: &GroupAlgebraElement, v: &[Cyclotomic]| -> Vector {
        let mut out = vec![Cyclotomic::zero(); n];
        for (&a, c) in &x.terms {
            for (b, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = c * y;
                let l = g.mul(a, b);
                let r = g.mul(b, a);
                out[l] = &out[l] + &p;
                out[r] = &out[r] - &p;
            }
        }
        out
    };
    let (span, kept) = closure_by(n, &dense, |k, v| bracket(&gens[k], v))?;
    let mut derived = SpanBasis::new(n);
    for x in gens {
        for v in &kept {
            derived.insert(bracket(x, v))?;
        }
    }
    let d = kept.len();
    let mut sys = Matrix::zeros(n * gens.len(), d.max(1));
    for (j, v) in kept.iter().enumerate() {
        for (k, x) in gens.iter().enumerate() {
            for (i, y) in bracket(x, v).into_iter().enumerate() {
                sys[(k * n + i, j)] = y;
            }
        }
    }
    let center = if d == 0 { 0 } else { nullspace(&sys).len() };
    Ok(GroupAlgebraCheck { dim: span.dim(), center_dim: center, derived_dim: derived.dim() })
}

fn acts_irreducibly_or_by_scalars(gens: &[Matrix]) -> Result<bool> {
    if gens.iter().all(|m| m.as_scalar().is_some()) {
        return Ok(true);
    }
    Ok(intertwiners(gens, gens)?.len() == 1)
}

/// Decomposes the image of the Lie algebra named by `tag` in every
/// irreducible representation into simple ideals.
pub fn decompose(ctx: &Context, tag: &GenTag) -> Result<DecompositionReport> {
    let gens = gen_elements(ctx, tag)?;
    let reps = ctx.irreducibles();
    let images: Vec<Vec<Matrix>> = reps.iter().map(|r| ctx.images(r, &gens)).collect();
    let summaries: Vec<ImageSummary> = images.iter().map(|im| ImageSummary::of(im)).collect::<Result<_>>()?;
    let (ideals, contains) = split_ideals(&images, &summaries)?;

    let mut rep_reports = Vec::with_capacity(reps.len());
    let mut all_irreducible = true;
    for (i, r) in reps.iter().enumerate() {
        let s = &summaries[i];
        let irreducible = acts_irreducibly_or_by_scalars(&images[i])?;
        all_irreducible &= irreducible;
        let duality = if s.derived_dim > 0 && irreducible { duality_class_of(&s.derived).ok() } else { None };
        rep_reports.push(RepImage {
            label: r.label().to_string(),
            dim: r.dim(),
            image_dim: s.image_dim,
            derived_dim: s.derived_dim,
            duality,
            scalar: images[i].iter().all(|m| m.as_scalar().is_some()),
            blocks: contains[i].clone(),
        });
    }

    let blocks: Vec<Block> = ideals
        .iter()
        .map(|id| {
            let w = &rep_reports[id.witness];
            let module = if w.blocks.len() == 1 { Some((w.dim, w.duality.as_ref())) } else { None };
            let simple_type = match module {
                Some((m, d)) => SimpleType::identify(id.dim, m, d),
                None => SimpleType::identify(id.dim, 0, None),
            };
            Block {
                simple_type,
                dim: id.dim,
                members: id.members.iter().map(|&m| reps[m].label().to_string()).collect(),
            }
        })
        .collect();
    let derived_dim: usize = blocks.iter().map(|b| b.dim).sum();

    // the center acts by scalars, so its dimension is the rank of the scalar parts
    let center_dim = if all_irreducible {
        let rows: Vec<Vec<Cyclotomic>> = images
            .iter()
            .zip(reps)
            .map(|(im, r)| im.iter().map(|m| m.trace().scale(&Rational::new(1, r.dim() as i64))).collect())
            .collect();
        let m = Matrix::from_rows(rows).map_err(|_| Error::shape("scalar table"))?;
        Some(m.rank())
    } else {
        None
    };
    let dim = center_dim.map(|c| c + derived_dim);

    let mut checks = Vec::new();
    let group_algebra = if ctx.group.order() <= GROUP_ALGEBRA_CHECK_LIMIT {
        let ga = group_algebra_closure(ctx, &gens)?;
        checks.push(Check {
            name: "group algebra dimensions".into(),
            passed: Some(ga.dim) == dim && Some(ga.center_dim) == center_dim && ga.derived_dim == derived_dim,
            detail: format!(
                "kW closure: dim {}, center {}, derived {}; per-representation: dim {}, center {}, derived {}",
                ga.dim,
                ga.center_dim,
                ga.derived_dim,
                dim.map_or("?".into(), |d| d.to_string()),
                center_dim.map_or("?".into(), |c| c.to_string()),
                derived_dim
            ),
        });
        Some(ga)
    } else {
        None
    };

    let expected_center = match tag {
        GenTag::H => Some(ctx.catalog.reflection_classes.len()),
        GenTag::Hs => Some(ctx.catalog.classes.len()),
        GenTag::Hlambda(l) if crate::generic::membership(ctx, l)?.generic => Some(ctx.catalog.classes.len()),
        _ => None,
    };
    if let (Some(want), Some(got)) = (expected_center, center_dim) {
        checks.push(Check {
            name: "center dimension".into(),
            passed: want == got,
            detail: format!("expected {want} from the reflection classes, computed {got}"),
        });
    }

    let predicted = match tag {
        GenTag::H | GenTag::Hs | GenTag::HUtilde(_) => {
            Some(classify_irreps(ctx, ReflectionSet::Distinguished)?.predicted)
        }
        GenTag::Hlambda(l) if crate::generic::membership(ctx, l)?.generic => {
            Some(classify_irreps(ctx, ReflectionSet::Distinguished)?.predicted)
        }
        _ => None,
    };
    if let Some(p) = &predicted {
        let mut want: Vec<usize> = p.iter().map(|f| f.dim).collect();
        want.sort_unstable();
        let mut got: Vec<usize> = blocks.iter().map(|b| b.dim).collect();
        got.sort_unstable();
        checks.push(Check {
            name: "predicted semisimple part".into(),
            passed: want == got,
            detail: format!("predicted block dims {want:?}, computed {got:?}"),
        });
    }

    Ok(DecompositionReport {
        group: ctx.group.name().to_string(),
        tag: tag.to_string(),
        dim,
        center_dim,
        derived_dim,
        reps: rep_reports,
        blocks,
        group_algebra,
        predicted,
        checks,
    })
}

/// Checks that `H(λ)` has a compact real form: `λ` must be conjugation
/// symmetric, and then every `i·x`, `x` a generator, must be skew-adjoint in
/// the regular representation with orthonormal group-element basis.
pub fn compact_form_check(ctx: &Context, lambda: &ParameterPoint) -> Result<bool> {
    lambda.check_shape(ctx)?;
    for (c, v) in lambda.values.iter().enumerate() {
        let e = v.len() + 1;
        for k in 1..e {
            if v[k - 1] != v[e - k - 1].conj() {
                return Err(Error::Precondition(format!("λ_{k} of class {c} is not the conjugate of λ_{}", e - k)));
            }
        }
    }
    let g = &ctx.group;
    let n = g.order();
    let i = cyclo_root(4, 1)?;
    for x in gen_elements(ctx, &GenTag::Hlambda(lambda.clone()))? {
        let mut m = Matrix::zeros(n, n);
        for (&a, c) in &x.terms {
            for b in 0..n {
                let row = g.mul(a, b);
                m[(row, b)] = &m[(row, b)] + &(c * &i);
            }
        }
        if m.conj_transpose() != -&m {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `ρ¹` and `ρ²` restricted to the derived algebra generated by the
/// primed reflections are isomorphic, directly or up to duality.
pub fn approx(ctx: &Context, a: &Representation, b: &Representation, set: ReflectionSet) -> Result<bool> {
    let pa = primed_images(ctx, a, set);
    let pb = primed_images(ctx, b, set);
    Ok(restriction_iso(&pa, &pb, IsoMode::Straight)? || restriction_iso(&pa, &pb, IsoMode::Dual)?)
}

/// `⟨χ_a, χ_b⟩` for two representations of the context's group.
pub fn multiplicity(ctx: &Context, a: &Representation, b: &Representation) -> Cyclotomic {
    character_inner(&ctx.group, &a.character(&ctx.group), &b.character(&ctx.group))
}
