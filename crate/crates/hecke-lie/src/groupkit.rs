//! Finite matrix groups generated by pseudo-reflections.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::exactnum::{cyclo_root, Cyclotomic, Rational};
use crate::matlin::{nullspace, Matrix, Vector};
use crate::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 20_000;

/// On-disk group description.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub conductor: u32,
    pub generators: Vec<Matrix>,
}

const G4_JSON: &str = include_str!("../data/g4.json");
const G25_JSON: &str = include_str!("../data/g25.json");
const G26_JSON: &str = include_str!("../data/g26.json");

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("group file, line {} column {}: {e}", e.line(), e.column())))
    }

    /// A bundled exceptional group (`g4`, `g25`, `g26`) or `g(de,e,r)`.
    pub fn builtin(name: &str) -> Result<Self> {
        let key: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
        match key.as_str() {
            "g4" => Self::parse(G4_JSON),
            "g25" => Self::parse(G25_JSON),
            "g26" => Self::parse(G26_JSON),
            _ => {
                let inner = key
                    .strip_prefix("g(")
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("unknown builtin group {name:?}")))?;
                let nums: Vec<u32> = inner
                    .split(',')
                    .map(|t| t.parse::<u32>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse(format!("bad parameters in {name:?}")))?;
                let [m, e, r] = nums[..] else {
                    return Err(Error::Parse(format!("expected g(de,e,r), got {name:?}")));
                };
                if m == 0 || e == 0 || r == 0 || m % e != 0 {
                    return Err(Error::Parse(format!("g(de,e,r) needs e | de and positive entries: {name:?}")));
                }
                imprimitive(m / e, e, r)
            }
        }
    }
}

/// Generators of G(de,e,r): `t^e` (when d > 1), `t⁻¹σ₁t` (when e > 1) and the
/// adjacent transpositions, with `t = diag(ζ_{de},1,…,1)`.
pub fn imprimitive(d: u32, e: u32, r: u32) -> Result<GroupFile> {
    let m = d * e;
    let r = r as usize;
    let z = cyclo_root(m as u64, 1)?;
    let mut gens = Vec::new();
    let diag_t = |k: i64| -> Result<Matrix> {
        let mut v = vec![Cyclotomic::one(); r];
        v[0] = cyclo_root(m as u64, k)?;
        Ok(Matrix::diag(v))
    };
    let sigma = |i: usize| {
        let mut p = Matrix::identity(r);
        p[(i, i)] = Cyclotomic::zero();
        p[(i + 1, i + 1)] = Cyclotomic::zero();
        p[(i, i + 1)] = Cyclotomic::one();
        p[(i + 1, i)] = Cyclotomic::one();
        p
    };
    if d > 1 {
        gens.push(diag_t(e as i64)?);
    }
    if e > 1 && r >= 2 {
        let t = diag_t(1)?;
        let tinv = diag_t(-1)?;
        gens.push(&(&tinv * &sigma(0)) * &t);
    }
    for i in 0..r.saturating_sub(1) {
        gens.push(sigma(i));
    }
    if gens.is_empty() {
        gens.push(Matrix::identity(r));
    }
    Ok(GroupFile { name: format!("G({m},{e},{r})"), conductor: z.conductor(), generators: gens })
}

/// Words in the generators of G(de,1,r) giving the generators of G(de,e,r),
/// in the order produced by [`imprimitive`].
pub fn imprimitive_subgroup_words(d: u32, e: u32, r: u32) -> Vec<Vec<usize>> {
    let m = (d * e) as usize;
    let mut words = Vec::new();
    if d > 1 {
        words.push(vec![0; e as usize]);
    }
    if e > 1 && r >= 2 {
        let mut w = vec![0; m - 1];
        w.extend([1, 0]);
        words.push(w);
    }
    for i in 1..r as usize {
        words.push(vec![i]);
    }
    if words.is_empty() {
        words.push(Vec::new());
    }
    words
}

/// A finite matrix group with its full element table.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    name: String,
    conductor: u32,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
    parent: Vec<Option<(usize, usize)>>,
    words: Vec<Vec<usize>>,
    index: HashMap<Matrix, usize>,
    mul_gen: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    orders: Vec<u32>,
}

impl FiniteMatrixGroup {
    pub fn from_file(file: &GroupFile, cap: usize) -> Result<Self> {
        let mut g = Self::generate(&file.generators, cap)?;
        g.name = file.name.clone();
        Ok(g)
    }

    pub fn builtin(name: &str) -> Result<Self> {
        Self::from_file(&GroupFile::builtin(name)?, DEFAULT_ELEMENT_CAP)
    }

    /// Breadth-first closure of `gens` under right multiplication.
    pub fn generate(gens: &[Matrix], cap: usize) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Err(Error::Domain("no generators".into()));
        };
        let n = first.rows();
        let mut conductor = 1;
        for g in gens {
            if !g.is_square() || g.rows() != n {
                return Err(Error::shape("generators must be square of equal size"));
            }
            if g.determinant().is_zero() {
                return Err(Error::Domain("non-invertible generator".into()));
            }
            conductor = crate::exactnum::merge_conductors(conductor, g.conductor())?;
        }
        let id = Matrix::identity(n);
        let mut elements = vec![id.clone()];
        let mut parent = vec![None];
        let mut words = vec![Vec::new()];
        let mut index = HashMap::new();
        index.insert(id, 0);
        let mut mul_gen: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            let mut row = Vec::with_capacity(gens.len());
            for (k, s) in gens.iter().enumerate() {
                let h = &elements[i] * s;
                let j = match index.get(&h) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        if j >= cap {
                            return Err(Error::Resource(format!("group too large (cap {cap})")));
                        }
                        let mut w = words[i].clone();
                        w.push(k);
                        words.push(w);
                        parent.push(Some((i, k)));
                        index.insert(h.clone(), j);
                        elements.push(h);
                        j
                    }
                };
                row.push(j);
            }
            mul_gen.push(row);
            i += 1;
        }
        let mut g = FiniteMatrixGroup {
            name: String::new(),
            conductor,
            generators: gens.to_vec(),
            elements,
            parent,
            words,
            index,
            mul_gen,
            inverse: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
            orders: Vec::new(),
        };
        g.inverse = (0..g.order())
            .map(|i| {
                let inv = g.elements[i].inverse().expect("group elements are invertible");
                g.index[&inv]
            })
            .collect();
        g.orders = (0..g.order()).map(|i| g.element_order_slow(i)).collect();
        g.build_classes();
        Ok(g)
    }

    fn element_order_slow(&self, i: usize) -> u32 {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    fn build_classes(&mut self) {
        let n = self.order();
        let gen_elems: Vec<usize> = (0..self.generators.len()).map(|k| self.mul_gen[0][k]).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut q = VecDeque::from([start]);
            while let Some(x) = q.pop_front() {
                for &s in &gen_elems {
                    let y = self.mul(self.mul(self.inverse[s], x), s);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                        q.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// Lcm of the generator-entry conductors.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.generators[0].rows()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// `(parent, generator)` with `element(i) = element(parent)·gen`.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Element index of generator `k`.
    pub fn generator_element(&self, k: usize) -> usize {
        self.mul_gen[0][k]
    }

    pub fn mul_gen(&self, i: usize, k: usize) -> usize {
        self.mul_gen[i][k]
    }

    /// Product of two elements, following the word of the right factor.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.words[j].iter().fold(i, |x, &k| self.mul_gen[x][k])
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn element_order(&self, i: usize) -> u32 {
        self.orders[i]
    }

    pub fn power(&self, i: usize, e: u32) -> usize {
        (0..e).fold(0, |x, _| self.mul(x, i))
    }

    pub fn conjugate(&self, h: usize, x: usize) -> usize {
        self.mul(self.mul(h, x), self.inverse[h])
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Subgroup generated by the given elements, as a sorted index list.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut q = VecDeque::from([0]);
        while let Some(x) = q.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    q.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The commutator subgroup, as the normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let ng = self.generators.len();
        let gens: Vec<usize> = (0..ng).map(|k| self.generator_element(k)).collect();
        let mut kgens = Vec::new();
        for &a in &gens {
            for &b in &gens {
                let c = self.mul(self.mul(self.inverse[a], self.inverse[b]), self.mul(a, b));
                if c != 0 && !kgens.contains(&c) {
                    kgens.push(c);
                }
            }
        }
        loop {
            let k = self.subgroup(&kgens);
            let mut member = vec![false; self.order()];
            for &x in &k {
                member[x] = true;
            }
            let mut grew = false;
            for x in kgens.clone() {
                for &g in &gens {
                    let y = self.conjugate(g, x);
                    if !member[y] {
                        kgens.push(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                return k;
            }
        }
    }
}

/// One pseudo-reflection of the group.
#[derive(Clone, Debug)]
pub struct ReflectionData {
    pub element: usize,
    pub hyperplane: Vec<Vector>,
    pub hyperplane_id: usize,
    pub order: u32,
    pub nontrivial_eigenvalue: Cyclotomic,
    pub is_distinguished: bool,
    pub reflection_class_id: usize,
    pub hyperplane_class_id: usize,
}

/// A W-orbit of reflecting hyperplanes.
#[derive(Clone, Debug)]
pub struct HyperplaneClass {
    pub hyperplanes: Vec<usize>,
    /// Order of the pointwise fixer of each member hyperplane.
    pub e: u32,
    /// The distinguished reflections over this class; a conjugacy class of W.
    pub distinguished: Vec<usize>,
    /// The primitive root ζ_c = det of a distinguished reflection.
    pub zeta: Cyclotomic,
}

#[derive(Clone, Debug)]
pub struct ReflectionCatalog {
    pub reflections: Vec<ReflectionData>,
    /// Per hyperplane: its distinguished reflection.
    pub hyperplane_distinguished: Vec<usize>,
    /// Per hyperplane: fixer order.
    pub hyperplane_e: Vec<u32>,
    pub hyperplane_class: Vec<usize>,
    pub classes: Vec<HyperplaneClass>,
    /// Conjugacy-class ids of W contained in R, in increasing order.
    pub reflection_classes: Vec<usize>,
    by_element: HashMap<usize, usize>,
}

impl ReflectionCatalog {
    pub fn new(g: &FiniteMatrixGroup) -> Result<Self> {
        let n = g.degree();
        let id = Matrix::identity(n);
        let mut hyperplane_keys: HashMap<Vector, usize> = HashMap::new();
        let mut hyper_members: Vec<Vec<usize>> = Vec::new();
        let mut refl: Vec<(usize, usize, Vec<Vector>)> = Vec::new();
        for i in 1..g.order() {
            let d = g.element(i) - &id;
            if d.rank() != 1 {
                continue;
            }
            let row = (0..n).map(|r| d.row(r).to_vec()).find(|r| r.iter().any(|x| !x.is_zero())).expect("rank one");
            let lead = row.iter().find(|x| !x.is_zero()).expect("nonzero row").inv()?;
            let key: Vector = row.iter().map(|x| x * &lead).collect();
            let next = hyperplane_keys.len();
            let h = *hyperplane_keys.entry(key).or_insert(next);
            if h == hyper_members.len() {
                hyper_members.push(Vec::new());
            }
            hyper_members[h].push(i);
            refl.push((i, h, nullspace(&d)));
        }
        let hyperplane_e: Vec<u32> = hyper_members.iter().map(|m| m.len() as u32 + 1).collect();
        let det = |i: usize| &g.element(i).trace() - &Cyclotomic::from_int(n as i64 - 1);
        let mut hyperplane_distinguished = Vec::with_capacity(hyper_members.len());
        for (h, members) in hyper_members.iter().enumerate() {
            let e = hyperplane_e[h];
            if !members.iter().any(|&s| g.element_order(s) == e) {
                return Err(Error::Consistency(format!("fixer of hyperplane {h} is not cyclic")));
            }
            let zeta = cyclo_root(e as u64, 1)?;
            let ds: Vec<usize> = members.iter().copied().filter(|&s| det(s) == zeta).collect();
            if ds.len() != 1 {
                return Err(Error::Consistency(format!("hyperplane {h} has {} distinguished reflections", ds.len())));
            }
            hyperplane_distinguished.push(ds[0]);
        }
        // hyperplane classes follow the conjugacy classes of distinguished reflections
        let mut class_ids: BTreeMap<usize, usize> = BTreeMap::new();
        for &s in &hyperplane_distinguished {
            let c = g.class_of(s);
            let next = class_ids.len();
            class_ids.entry(c).or_insert(next);
        }
        // renumber by the minimal element of each class
        let order: Vec<usize> = class_ids.keys().copied().collect();
        let class_index: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let hyperplane_class: Vec<usize> =
            hyperplane_distinguished.iter().map(|&s| class_index[&g.class_of(s)]).collect();
        let mut classes: Vec<HyperplaneClass> = order
            .iter()
            .map(|&c| {
                let distinguished = g.classes()[c].clone();
                let s = distinguished[0];
                HyperplaneClass { hyperplanes: Vec::new(), e: 0, distinguished, zeta: det(s) }
            })
            .collect();
        for (h, &c) in hyperplane_class.iter().enumerate() {
            classes[c].hyperplanes.push(h);
            classes[c].e = hyperplane_e[h];
        }
        for c in &classes {
            for &s in &c.distinguished {
                let h = refl.iter().find(|r| r.0 == s).map(|r| r.1);
                if h.map(|h| hyperplane_distinguished[h]) != Some(s) {
                    return Err(Error::Consistency("distinguished set is not conjugation-stable".into()));
                }
            }
        }
        let mut reflection_classes: Vec<usize> = refl.iter().map(|r| g.class_of(r.0)).collect();
        reflection_classes.sort_unstable();
        reflection_classes.dedup();
        let mut by_element = HashMap::new();
        let reflections: Vec<ReflectionData> = refl
            .into_iter()
            .enumerate()
            .map(|(idx, (i, h, hyperplane))| {
                by_element.insert(i, idx);
                let ev = det(i);
                ReflectionData {
                    element: i,
                    hyperplane,
                    hyperplane_id: h,
                    order: g.element_order(i),
                    is_distinguished: hyperplane_distinguished[h] == i,
                    nontrivial_eigenvalue: ev,
                    reflection_class_id: g.class_of(i),
                    hyperplane_class_id: hyperplane_class[h],
                }
            })
            .collect();
        Ok(ReflectionCatalog {
            reflections,
            hyperplane_distinguished,
            hyperplane_e,
            hyperplane_class,
            classes,
            reflection_classes,
            by_element,
        })
    }

    pub fn get(&self, element: usize) -> Option<&ReflectionData> {
        self.by_element.get(&element).map(|&i| &self.reflections[i])
    }

    /// All pseudo-reflections R.
    pub fn r(&self) -> Vec<usize> {
        self.reflections.iter().map(|r| r.element).collect()
    }

    /// The distinguished reflections S.
    pub fn s(&self) -> Vec<usize> {
        self.reflections.iter().filter(|r| r.is_distinguished).map(|r| r.element).collect()
    }

    /// Distinguished reflections of order 2.
    pub fn s0(&self) -> Vec<usize> {
        self.s_filtered(|e| e == 2)
    }

    /// Distinguished reflections of order greater than 2.
    pub fn s_plus(&self) -> Vec<usize> {
        self.s_filtered(|e| e > 2)
    }

    fn s_filtered(&self, f: impl Fn(u32) -> bool) -> Vec<usize> {
        self.reflections
            .iter()
            .filter(|r| r.is_distinguished && f(self.classes[r.hyperplane_class_id].e))
            .map(|r| r.element)
            .collect()
    }

    /// Indices of the hyperplane classes with e_c > 2.
    pub fn c_plus(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&c| self.classes[c].e > 2).collect()
    }

    pub fn hyperplane_count(&self) -> usize {
        self.hyperplane_e.len()
    }

    /// Writes `s ∈ R` as `s₀^k` with `s₀` distinguished on the same hyperplane.
    pub fn as_power_of_distinguished(&self, g: &FiniteMatrixGroup, s: usize) -> Option<(usize, u32)> {
        let r = self.get(s)?;
        let s0 = self.hyperplane_distinguished[r.hyperplane_id];
        let e = self.hyperplane_e[r.hyperplane_id];
        (1..e).find(|&k| g.power(s0, k) == s).map(|k| (s0, k))
    }
}

/// A one-dimensional character, stored by its value on every element.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearCharacter {
    /// Exponent `m_C` per hyperplane class.
    pub exponents: Vec<u32>,
    pub values: Vec<Cyclotomic>,
}

impl LinearCharacter {
    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&m| m == 0)
    }

    pub fn value(&self, i: usize) -> &Cyclotomic {
        &self.values[i]
    }
}

/// One character per tuple in ∏_C ℤ/e_C.
pub fn linear_characters(g: &FiniteMatrixGroup, cat: &ReflectionCatalog) -> Result<Vec<LinearCharacter>> {
    let ng = g.generators().len();
    let mut gen_info = Vec::with_capacity(ng);
    for k in 0..ng {
        let s = g.generator_element(k);
        if s == 0 {
            gen_info.push(None);
            continue;
        }
        let (s0, pow) = cat
            .as_power_of_distinguished(g, s)
            .ok_or_else(|| Error::Domain(format!("generator {k} is not a pseudo-reflection")))?;
        let c = cat.get(s0).expect("distinguished is a reflection").hyperplane_class_id;
        gen_info.push(Some((c, pow)));
    }
    let es: Vec<u32> = cat.classes.iter().map(|c| c.e).collect();
    let mut out = Vec::new();
    let mut tuple = vec![0u32; es.len()];
    loop {
        let gen_vals: Vec<Cyclotomic> = gen_info
            .iter()
            .map(|info| match info {
                None => Ok(Cyclotomic::one()),
                Some((c, pow)) => cyclo_root(es[*c] as u64, (tuple[*c] * pow) as i64),
            })
            .collect::<std::result::Result<_, _>>()?;
        let mut values = vec![Cyclotomic::one(); g.order()];
        for i in 1..g.order() {
            let (p, k) = g.parent(i).expect("non-identity has a parent");
            values[i] = &values[p] * &gen_vals[k];
        }
        for i in 0..g.order() {
            for k in 0..ng {
                if values[g.mul_gen(i, k)] != &values[i] * &gen_vals[k] {
                    return Err(Error::Consistency("linear character is not multiplicative".into()));
                }
            }
        }
        out.push(LinearCharacter { exponents: tuple.clone(), values });
        // advance the mixed-radix counter, last class fastest
        let mut pos = es.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < es[pos] {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// A sparse element of the group algebra kW.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GroupAlgebraElement {
    pub terms: BTreeMap<usize, Cyclotomic>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, Cyclotomic::one())
    }

    pub fn term(i: usize, c: Cyclotomic) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(i, c);
        }
        GroupAlgebraElement { terms: t }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Cyclotomic {
        self.terms.get(&i).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn add_term(&mut self, i: usize, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let v = &self.coeff(i) + c;
        if v.is_zero() {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&i, c) in &o.terms {
            r.add_term(i, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Cyclotomic::from_int(-1)))
    }

    pub fn scale(&self, x: &Cyclotomic) -> Self {
        if x.is_zero() {
            return Self::zero();
        }
        GroupAlgebraElement { terms: self.terms.iter().map(|(&i, c)| (i, c * x)).collect() }
    }

    pub fn mul(&self, o: &Self, g: &FiniteMatrixGroup) -> Self {
        let mut r = Self::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &o.terms {
                r.add_term(g.mul(i, j), &(a * b));
            }
        }
        r
    }

    /// Dense coefficient vector indexed by element.
    pub fn to_dense(&self, order: usize) -> Vector {
        let mut v = vec![Cyclotomic::zero(); order];
        for (&i, c) in &self.terms {
            v[i] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[Cyclotomic]) -> Self {
        GroupAlgebraElement {
            terms: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }
}

/// `T_c = Σ_{w∈c} w`.
pub fn class_sum(g: &FiniteMatrixGroup, class: usize) -> GroupAlgebraElement {
    GroupAlgebraElement { terms: g.classes()[class].iter().map(|&i| (i, Cyclotomic::one())).collect() }
}

/// `xy − yx`.
pub fn ga_bracket(g: &FiniteMatrixGroup, x: &GroupAlgebraElement, y: &GroupAlgebraElement) -> GroupAlgebraElement {
    x.mul(y, g).sub(&y.mul(x, g))
}

/// The central projection `p(x) = (1/|W|) Σ_h h x h⁻¹`, computed through class
/// sums: `p(w) = T_c / |c|` for `w ∈ c`.
pub fn class_projection(g: &FiniteMatrixGroup, x: &GroupAlgebraElement) -> GroupAlgebraElement {
    let mut r = GroupAlgebraElement::zero();
    for (&i, c) in &x.terms {
        let cls = g.class_of(i);
        let size = g.classes()[cls].len() as i64;
        let f = c.scale(&Rational::new(1, size));
        for &j in &g.classes()[cls] {
            r.add_term(j, &f);
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_group() {
        let g = FiniteMatrixGroup::generate(&[Matrix::from_ints(&[&[-1, 0], &[0, 1]])], 100).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.classes().len(), 2);
    }

    #[test]
    fn rejects_singular_and_caps() {
        assert!(FiniteMatrixGroup::generate(&[Matrix::from_ints(&[&[1, 0], &[0, 0]])], 100).is_err());
        let shear = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert!(matches!(FiniteMatrixGroup::generate(&[shear], 50), Err(Error::Resource(_))));
    }

    #[test]
    fn a2_catalog() {
        let g = FiniteMatrixGroup::builtin("g(1,1,3)").unwrap();
        assert_eq!(g.order(), 6);
        let cat = ReflectionCatalog::new(&g).unwrap();
        assert_eq!(cat.r().len(), 3);
        assert_eq!(cat.s0().len(), 3);
        assert_eq!(cat.classes.len(), 1);
        assert_eq!(cat.classes[0].e, 2);
        assert_eq!(linear_characters(&g, &cat).unwrap().len(), 2);
    }

    #[test]
    fn words_evaluate() {
        let g = FiniteMatrixGroup::builtin("g4").unwrap();
        for i in 0..g.order() {
            let m = g.word(i).iter().fold(Matrix::identity(2), |acc, &k| &acc * &g.generators()[k]);
            assert_eq!(&m, g.element(i));
            assert_eq!(g.mul(i, g.inv(i)), 0);
        }
    }

    #[test]
    fn central_projection_properties() {
        let g = FiniteMatrixGroup::builtin("g4").unwrap();
        let s = g.generator_element(0);
        let p = class_projection(&g, &GroupAlgebraElement::basis(s));
        let c = g.class_of(s);
        let t = class_sum(&g, c);
        assert_eq!(p.scale(&Cyclotomic::from_int(g.classes()[c].len() as i64)), t);
        for h in 0..g.order() {
            assert!(ga_bracket(&g, &t, &GroupAlgebraElement::basis(h)).is_zero());
            assert!(ga_bracket(&g, &p, &GroupAlgebraElement::basis(h)).is_zero());
        }
        let x = GroupAlgebraElement::basis(3).add(&GroupAlgebraElement::basis(5));
        assert!(ga_bracket(&g, &x, &x).is_zero());
    }

    #[test]
    fn imprimitive_words_match() {
        for (d, e, r) in [(1, 3, 3), (2, 2, 2), (3, 1, 2), (2, 3, 2)] {
            let big = FiniteMatrixGroup::builtin(&format!("g({},1,{r})", d * e)).unwrap();
            let small = imprimitive(d, e, r).unwrap();
            for (w, m) in imprimitive_subgroup_words(d, e, r).iter().zip(&small.generators) {
                let x = w.iter().fold(Matrix::identity(r as usize), |acc, &k| &acc * &big.generators()[k]);
                assert_eq!(&x, m);
            }
        }
    }
}
