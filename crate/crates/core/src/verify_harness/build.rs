//! Concrete permutation groups and the actions the catalog runs on.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::gf_linear::{
    build_element, Automorphism, ElementSpec, Field, FormKind, Geometry, Matrix, PointKind, PointSet, Semilinear, Sign,
    DEFAULT_POINT_BUDGET,
};
use crate::perm_core::{coset_action, group_closure, CosetAction, PermGroup, Permutation};

/// Stabilizer of the point 0 in the affine group V:H, as a matrix group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineH {
    /// GL_d(p).
    General,
    /// Multiplication by an element of the given order in GF(p^d).
    Mult(u64),
    /// ΓL_1(p^d).
    SemilinearOne,
}

#[derive(Clone, Debug)]
pub enum GroupBuild {
    SymAlt { n: usize, alt: bool },
    /// Generated by the form's transvections (reflections for quadratic forms)
    /// together with `extras`; `base` is the faithful action used for closure.
    Classical { kind: FormKind, n: usize, q: u64, eps: Option<Sign>, extras: Vec<ElementSpec>, base: PointKind },
    Affine { p: u64, d: usize, h: AffineH },
    /// (T × T).2 with T = A5 on the 60 cosets of the diagonal.
    DiagonalA5,
    /// Component group wreath S_k in product action on Γ^k.
    Wreath { component: Box<GroupDef>, omega: OmegaBuild, k: usize },
    File { text: &'static str },
}

/// A named group construction; `order` is the known order used to pick a
/// small generating set and to check the closure.
#[derive(Clone, Debug)]
pub struct GroupDef {
    pub key: String,
    pub build: GroupBuild,
    pub order: Option<u64>,
    pub closable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaBuild {
    Natural,
    Subsets(usize),
    Partitions,
    /// Right cosets of the subgroup generated by the given cycle strings.
    Cosets(Vec<&'static str>),
    Points(PointKind),
}

impl OmegaBuild {
    pub fn key(&self) -> String {
        match self {
            OmegaBuild::Natural => "natural".into(),
            OmegaBuild::Subsets(l) => format!("subsets:{l}"),
            OmegaBuild::Partitions => "partitions".into(),
            OmegaBuild::Cosets(g) => format!("cosets:{}", g.join(",")),
            OmegaBuild::Points(k) => format!("points:{k:?}"),
        }
    }
}

/// An element in whichever form the construction acts on.
#[derive(Clone, Debug)]
pub enum Elem {
    Perm(Permutation),
    Semi(Semilinear),
}

/// How an element of the catalog is named.
#[derive(Clone, Debug)]
pub enum ElementRef {
    /// Cycle notation on the base points.
    Cycles(String),
    Identity,
    Spec(ElementSpec),
    /// (a, b)·swap^s on the diagonal-type group, a and b in cycle notation on 5 points.
    Diagonal { left: String, right: String, swap: bool },
    /// (x_1, ..., x_k)·π in the product action.
    Wreath { comps: Vec<ElementRef>, perm: Vec<usize> },
    /// The class of elements of this order with this many fixed points on Ω.
    Class { order: u64, fixed: usize },
}

enum Ctx {
    Perm,
    Classical { geo: Geometry },
    Affine { big: Field, prime: Field, d: usize },
    Diagonal { t: PermGroup },
    Wreath { comp: Box<Realized>, comp_omega: Box<Omega>, m: usize, k: usize },
}

/// A realized group: the base permutation group (when generators are
/// needed) plus whatever is required to build named elements.
pub struct Realized {
    pub def: GroupDef,
    pub group: Option<PermGroup>,
    pub gen_elems: Vec<Elem>,
    ctx: Ctx,
}

pub struct Omega {
    pub degree: usize,
    kind: OmegaKind,
}

enum OmegaKind {
    Identity,
    Sets { objects: Vec<Vec<u32>>, index: HashMap<Vec<u32>, usize>, halves: Option<usize> },
    Coset(CosetAction),
    Points(PointSet),
}

fn cycles(degree: usize, s: &str) -> Result<Permutation> {
    Permutation::parse_cycles(degree, s)
}

fn sym_alt_gens(n: usize, alt: bool) -> Result<Vec<Permutation>> {
    let long: Vec<u32> = (0..n as u32).collect();
    if !alt {
        return Ok(vec![Permutation::from_cycles(n, &[vec![0, 1]])?, Permutation::from_cycles(n, &[long])?]);
    }
    let c3 = Permutation::from_cycles(n, &[vec![0, 1, 2]])?;
    let other = if n % 2 == 1 { long } else { (1..n as u32).collect() };
    Ok(vec![c3, Permutation::from_cycles(n, &[other])?])
}

fn field_basis(f: &Field) -> Vec<u32> {
    (0..f.f()).map(|k| f.pow(f.generator(), k as u64)).collect()
}

fn projective_reps(f: &Field, n: usize) -> Vec<Vec<u32>> {
    let q = f.q() as u64;
    let total = q.pow(n as u32);
    let mut out = Vec::new();
    for idx in 1..total {
        let mut v = vec![0u32; n];
        let mut x = idx;
        for c in v.iter_mut() {
            *c = (x % q) as u32;
            x /= q;
        }
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// Transvections of the form (elementary ones in the linear case), or
/// reflections for quadratic forms.
pub fn classical_generators(geo: &Geometry) -> Result<Vec<Semilinear>> {
    let f = &geo.field;
    let n = geo.n();
    let mut out: Vec<Semilinear> = Vec::new();
    match geo.kind() {
        FormKind::Linear => {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    for &lam in &field_basis(f) {
                        let mut m = Matrix::identity(n);
                        m.set(i, j, lam);
                        out.push(Semilinear::linear(m));
                    }
                }
            }
        }
        FormKind::Symplectic | FormKind::Unitary | FormKind::Quadratic => {
            let basis = geo.standard_basis();
            for a in projective_reps(f, n) {
                let coeffs: Vec<u32> = match geo.kind() {
                    FormKind::Quadratic => {
                        let qa = geo.quad(&a);
                        if qa == 0 {
                            continue;
                        }
                        vec![f.neg(f.inv(qa)?)]
                    }
                    _ => f.elements().filter(|&x| x != 0).collect(),
                };
                for lam in coeffs {
                    let mut m = Matrix::identity(n);
                    for (i, e) in basis.iter().enumerate() {
                        let b = f.mul(lam, geo.bil(e, &a));
                        if b == 0 {
                            continue;
                        }
                        for j in 0..n {
                            m.set(i, j, f.add(m.get(i, j), f.mul(b, a[j])));
                        }
                    }
                    let x = Semilinear::linear(m);
                    if !x.is_identity() && geo.check_form_preservation(&x) && !out.contains(&x) {
                        out.push(x);
                    }
                }
            }
        }
    }
    if out.is_empty() {
        return Err(invalid("no generators for this geometry"));
    }
    Ok(out)
}

fn word_product<T: Clone>(word: &[usize], items: &[T], id: T, mul: impl Fn(&T, &T) -> T) -> T {
    word.iter().fold(id, |acc, &i| mul(&acc, &items[i]))
}

/// Two random words in `perms` that generate a group of order `order`.
fn generating_pair(perms: &[Permutation], order: u64, seed: u64) -> Result<Vec<Vec<usize>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let idx: Vec<usize> = (0..perms.len()).collect();
    let degree = perms[0].degree();
    let id = Permutation::identity(degree);
    for _ in 0..40 {
        let words: Vec<Vec<usize>> =
            (0..2).map(|_| (0..12).map(|_| *idx.choose(&mut rng).unwrap()).collect()).collect();
        let gens: Vec<Permutation> = words.iter().map(|w| word_product(w, perms, id.clone(), |a, b| a.then(b))).collect();
        match group_closure(degree, &gens, order as usize) {
            Ok(store) if store.len() as u64 == order => return Ok(words),
            Ok(_) => continue,
            Err(Error::CapExceeded(_)) => return Err(invalid(format!("generated group exceeds the expected order {order}"))),
            Err(e) => return Err(e),
        }
    }
    Err(invalid(format!("no generating pair found for order {order}")))
}

fn seed_of(key: &str) -> u64 {
    key.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn closed_group(degree: usize, gens: Vec<Permutation>, def: &GroupDef) -> Result<PermGroup> {
    let g = PermGroup::new(degree, gens)?;
    if !def.closable {
        return Ok(g);
    }
    let cap = def.order.map_or(crate::perm_core::DEFAULT_CLOSURE_CAP, |o| o as usize);
    g.closed(cap)
}

fn affine_perm(big: &Field, f: impl Fn(u32) -> u32) -> Permutation {
    Permutation::from_images(big.elements().map(f).collect()).expect("affine map is a bijection")
}

fn affine_linear(big: &Field, prime: &Field, m: &Matrix) -> Result<Permutation> {
    let d = m.rows();
    let imgs = big
        .elements()
        .map(|x| {
            let mut c = big.to_coeffs(x);
            c.resize(d, 0);
            big.from_coeffs(&prime.vec_mat(&c, m))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(imgs)
}

pub fn realize(def: &GroupDef) -> Result<Realized> {
    let (group, gen_elems, ctx) = match &def.build {
        GroupBuild::SymAlt { n, alt } => {
            let gens = sym_alt_gens(*n, *alt)?;
            let g = closed_group(*n, gens.clone(), def)?;
            (Some(g), gens.into_iter().map(Elem::Perm).collect(), Ctx::Perm)
        }
        GroupBuild::File { text } => {
            let g = PermGroup::from_json(text)?;
            let gens = g.generators().to_vec();
            let g = closed_group(g.degree(), gens.clone(), def)?;
            (Some(g), gens.into_iter().map(Elem::Perm).collect(), Ctx::Perm)
        }
        GroupBuild::Classical { kind, n, q, eps, extras, base } => {
            let geo = Geometry::standard(*kind, *n, Field::of_order(*q)?, *eps)?;
            if !def.closable {
                (None, Vec::new(), Ctx::Classical { geo })
            } else {
                let mut semis = classical_generators(&geo)?;
                for s in extras {
                    semis.push(build_element(s, &geo)?);
                }
                let pts = PointSet::enumerate(geo.clone(), *base, DEFAULT_POINT_BUDGET)?;
                let perms = semis.iter().map(|s| pts.induced_permutation(s)).collect::<Result<Vec<_>>>()?;
                let order = def.order.ok_or_else(|| invalid("classical groups need a known order"))?;
                let words = generating_pair(&perms, order, seed_of(&def.key))?;
                let f = &geo.field;
                let id = Semilinear::linear(Matrix::identity(*n));
                let chosen: Vec<Semilinear> = words.iter().map(|w| word_product(w, &semis, id.clone(), |a, b| f.compose(a, b))).collect();
                let gens = chosen.iter().map(|s| pts.induced_permutation(s)).collect::<Result<Vec<_>>>()?;
                let g = closed_group(pts.len(), gens, def)?;
                (Some(g), chosen.into_iter().map(Elem::Semi).collect(), Ctx::Classical { geo })
            }
        }
        GroupBuild::Affine { p, d, h } => {
            let big = Field::of_order(p.pow(*d as u32))?;
            let prime = Field::of_order(*p)?;
            let mut gens = Vec::new();
            for i in 0..*d {
                let mut e = vec![0u32; *d];
                e[i] = 1;
                let b = big.from_coeffs(&e)?;
                gens.push(affine_perm(&big, |x| big.add(x, b)));
            }
            match h {
                AffineH::General => {
                    let geo = Geometry::standard(FormKind::Linear, *d, prime.clone(), None)?;
                    let mut ms: Vec<Matrix> = classical_generators(&geo)?.into_iter().map(|s| s.matrix).collect();
                    let mut diag = Matrix::identity(*d);
                    diag.set(0, 0, prime.generator());
                    ms.push(diag);
                    for m in &ms {
                        gens.push(affine_linear(&big, &prime, m)?);
                    }
                }
                AffineH::Mult(r) => {
                    let lam = big.root_of_unity(*r).ok_or_else(|| invalid(format!("no element of order {r}")))?;
                    gens.push(affine_perm(&big, |x| big.mul(lam, x)));
                }
                AffineH::SemilinearOne => {
                    let w = big.generator();
                    gens.push(affine_perm(&big, |x| big.mul(w, x)));
                    gens.push(affine_perm(&big, |x| big.frobenius(x)));
                }
            }
            let g = closed_group(big.q() as usize, gens.clone(), def)?;
            (Some(g), gens.into_iter().map(Elem::Perm).collect(), Ctx::Affine { big, prime, d: *d })
        }
        GroupBuild::DiagonalA5 => {
            let t = PermGroup::new(5, sym_alt_gens(5, true)?)?.closed(60)?;
            let mut gens = Vec::new();
            for a in t.generators() {
                gens.push(diagonal_perm(&t, Some(a), None, false)?);
                gens.push(diagonal_perm(&t, None, Some(a), false)?);
            }
            gens.push(diagonal_perm(&t, None, None, true)?);
            let g = closed_group(60, gens.clone(), def)?;
            (Some(g), gens.into_iter().map(Elem::Perm).collect(), Ctx::Diagonal { t })
        }
        GroupBuild::Wreath { component, omega, k } => {
            let comp = realize(component)?;
            let comp_omega = build_omega(&comp, omega)?;
            let m = comp_omega.degree;
            let mut gens = Vec::new();
            for e in &comp.gen_elems {
                let x = comp_omega.image(&comp, e)?;
                let mut parts = vec![Permutation::identity(m); *k];
                parts[0] = x;
                gens.push(product_perm(&parts, &(0..*k).collect::<Vec<_>>(), m)?);
            }
            let ids = vec![Permutation::identity(m); *k];
            let mut swap: Vec<usize> = (0..*k).collect();
            swap.swap(0, 1);
            gens.push(product_perm(&ids, &swap, m)?);
            if *k > 2 {
                let cyc: Vec<usize> = (0..*k).map(|i| (i + 1) % k).collect();
                gens.push(product_perm(&ids, &cyc, m)?);
            }
            let degree = m.pow(*k as u32);
            let g = closed_group(degree, gens.clone(), def)?;
            let ctx = Ctx::Wreath { comp: Box::new(comp), comp_omega: Box::new(comp_omega), m, k: *k };
            (Some(g), gens.into_iter().map(Elem::Perm).collect(), ctx)
        }
    };
    if let (Some(g), Some(order)) = (&group, def.order) {
        if def.closable && g.order()? != order.into() {
            return Err(invalid(format!("{} closed to order {} instead of {order}", def.key, g.order()?)));
        }
    }
    Ok(Realized { def: def.clone(), group, gen_elems, ctx })
}

/// t ↦ a⁻¹·t·b, then t ↦ t⁻¹ when `swap` is set.
fn diagonal_perm(t: &PermGroup, a: Option<&Permutation>, b: Option<&Permutation>, swap: bool) -> Result<Permutation> {
    let store = t.elements()?;
    let ainv = a.map(|a| a.inverse());
    let imgs = store
        .iter()
        .map(|x| {
            let mut y = x;
            if let Some(ai) = &ainv {
                y = ai.compose(&y)?;
            }
            if let Some(b) = b {
                y = y.compose(b)?;
            }
            if swap {
                y = y.inverse();
            }
            store.index_of(y.images()).map(|i| i as u32).ok_or_else(|| invalid("not in A5"))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(imgs)
}

/// (x_1, ..., x_k)·π on Γ^k with m = |Γ|; coordinate i moves to π(i).
fn product_perm(parts: &[Permutation], perm: &[usize], m: usize) -> Result<Permutation> {
    let k = parts.len();
    let total = m.pow(k as u32);
    let mut imgs = vec![0u32; total];
    let mut coords = vec![0usize; k];
    let mut out = vec![0usize; k];
    for (idx, img) in imgs.iter_mut().enumerate() {
        let mut x = idx;
        for c in coords.iter_mut() {
            *c = x % m;
            x /= m;
        }
        for i in 0..k {
            out[perm[i]] = parts[i].image(coords[i] as u32) as usize;
        }
        *img = out.iter().rev().fold(0usize, |acc, &c| acc * m + c) as u32;
    }
    Permutation::from_images(imgs)
}

fn combinations(n: u32, l: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l);
    fn go(start: u32, n: u32, l: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, l, cur, out);
            cur.pop();
        }
    }
    go(0, n, l, &mut cur, &mut out);
    out
}

pub fn build_omega(real: &Realized, omega: &OmegaBuild) -> Result<Omega> {
    let base_degree = || real.group.as_ref().map(|g| g.degree()).ok_or_else(|| invalid("construction has no base action"));
    let kind = match omega {
        OmegaBuild::Natural => OmegaKind::Identity,
        OmegaBuild::Subsets(_) | OmegaBuild::Partitions if !matches!(real.ctx, Ctx::Perm) => {
            return Err(invalid(format!("{} needs a permutation construction", omega.key())));
        }
        OmegaBuild::Subsets(l) => {
            let objects = combinations(base_degree()? as u32, *l);
            let index = objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
            OmegaKind::Sets { objects, index, halves: None }
        }
        OmegaBuild::Partitions => {
            let n = base_degree()?;
            if n % 2 != 0 {
                return Err(invalid("partitions need an even degree"));
            }
            let objects: Vec<Vec<u32>> = combinations(n as u32, n / 2).into_iter().filter(|s| s[0] == 0).collect();
            let index = objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
            OmegaKind::Sets { objects, index, halves: Some(n) }
        }
        OmegaBuild::Cosets(h) => {
            let g = real.group.as_ref().ok_or_else(|| invalid("coset actions need a base group"))?;
            let gens = h.iter().map(|s| cycles(g.degree(), s)).collect::<Result<Vec<_>>>()?;
            let sub = PermGroup::new(g.degree(), gens)?.closed(g.elements()?.len())?;
            OmegaKind::Coset(coset_action(g, &sub)?)
        }
        OmegaBuild::Points(k) => match &real.ctx {
            Ctx::Classical { geo } => OmegaKind::Points(PointSet::enumerate(geo.clone(), *k, DEFAULT_POINT_BUDGET)?),
            _ => return Err(invalid("point actions need a classical construction")),
        },
    };
    let degree = match &kind {
        OmegaKind::Identity => base_degree()?,
        OmegaKind::Sets { objects, .. } => objects.len(),
        OmegaKind::Coset(c) => c.degree(),
        OmegaKind::Points(p) => p.len(),
    };
    Ok(Omega { degree, kind })
}

impl Omega {
    pub fn image(&self, real: &Realized, e: &Elem) -> Result<Permutation> {
        match (&self.kind, e) {
            (OmegaKind::Identity, Elem::Perm(x)) => Ok(x.clone()),
            (OmegaKind::Sets { objects, index, halves }, Elem::Perm(x)) => {
                let imgs = objects
                    .iter()
                    .map(|o| {
                        let mut s: Vec<u32> = o.iter().map(|&p| x.image(p)).collect();
                        s.sort_unstable();
                        if let Some(n) = halves {
                            if s[0] != 0 {
                                s = (0..*n as u32).filter(|p| s.binary_search(p).is_err()).collect();
                            }
                        }
                        index.get(&s).map(|&i| i as u32).ok_or_else(|| invalid("set image outside the action"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Permutation::from_images(imgs)
            }
            (OmegaKind::Coset(c), Elem::Perm(x)) => c.image_of(x),
            (OmegaKind::Points(p), Elem::Semi(x)) => p.induced_permutation(x),
            (OmegaKind::Identity, Elem::Semi(x)) => match (&real.ctx, &real.def.build) {
                (Ctx::Classical { geo }, GroupBuild::Classical { base, .. }) => {
                    PointSet::enumerate(geo.clone(), *base, DEFAULT_POINT_BUDGET)?.induced_permutation(x)
                }
                _ => Err(invalid("semilinear element on a permutation construction")),
            },
            _ => Err(invalid("element does not act on this set")),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.kind, OmegaKind::Identity)
    }
}

impl Realized {
    pub fn base_degree(&self) -> Option<usize> {
        self.group.as_ref().map(|g| g.degree())
    }

    /// The named element in construction form; `Class` refs are resolved by the caller.
    pub fn element(&self, r: &ElementRef) -> Result<Elem> {
        match (r, &self.ctx) {
            (ElementRef::Cycles(s), _) => {
                let d = self.base_degree().ok_or_else(|| invalid("no base points"))?;
                Ok(Elem::Perm(cycles(d, s)?))
            }
            (ElementRef::Identity, Ctx::Classical { geo }) => Ok(Elem::Semi(Semilinear::linear(Matrix::identity(geo.n())))),
            (ElementRef::Identity, _) => {
                let d = self.base_degree().ok_or_else(|| invalid("no base points"))?;
                Ok(Elem::Perm(Permutation::identity(d)))
            }
            (ElementRef::Spec(spec), Ctx::Classical { geo }) => Ok(Elem::Semi(build_element(spec, geo)?)),
            (ElementRef::Spec(spec), Ctx::Affine { big, prime, d }) => {
                let geo = Geometry::standard(FormKind::Linear, *d, prime.clone(), None)?;
                let x = build_element(spec, &geo)?;
                if x.frob != 0 || matches!(spec.automorphism, Some(Automorphism::Field | Automorphism::Graph)) {
                    return Err(invalid("affine elements must be linear"));
                }
                Ok(Elem::Perm(affine_linear(big, prime, &x.matrix)?))
            }
            (ElementRef::Diagonal { left, right, swap }, Ctx::Diagonal { t }) => {
                let a = cycles(5, left)?;
                let b = cycles(5, right)?;
                Ok(Elem::Perm(diagonal_perm(t, Some(&a), Some(&b), *swap)?))
            }
            (ElementRef::Wreath { comps, perm }, Ctx::Wreath { comp, comp_omega, m, k }) => {
                if comps.len() != *k || perm.len() != *k {
                    return Err(invalid("wreath element needs k components"));
                }
                let parts = comps
                    .iter()
                    .map(|c| comp_omega.image(comp, &comp.element(c)?))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Elem::Perm(product_perm(&parts, perm, *m)?))
            }
            (ElementRef::Class { .. }, _) => Err(invalid("class references are resolved against a class scan")),
            _ => Err(invalid("element kind does not fit this construction")),
        }
    }

    /// The element as a permutation of the base points, when there is one.
    pub fn base_image(&self, e: &Elem) -> Result<Permutation> {
        match (e, &self.ctx, &self.def.build) {
            (Elem::Perm(x), _, _) => Ok(x.clone()),
            (Elem::Semi(x), Ctx::Classical { geo }, GroupBuild::Classical { base, .. }) => {
                PointSet::enumerate(geo.clone(), *base, DEFAULT_POINT_BUDGET)?.induced_permutation(x)
            }
            _ => Err(invalid("no base image")),
        }
    }

    pub fn geometry(&self) -> Option<&Geometry> {
        match &self.ctx {
            Ctx::Classical { geo } => Some(geo),
            _ => None,
        }
    }

    /// Whether a permutation of Γ^k (k = 2) moves coordinates.
    pub fn moves_coordinates(&self, x: &Permutation) -> Option<bool> {
        let Ctx::Wreath { m, k: 2, .. } = &self.ctx else { return None };
        let m = *m as u32;
        let row = |p: u32| p / m;
        let fixed_rows = (0..m).all(|r| (1..m).all(|c| row(x.image(r * m + c)) == row(x.image(r * m))));
        Some(!fixed_rows)
    }

}

#[cfg(test)]
mod tests {
    use super::*;

    fn def(key: &str, build: GroupBuild, order: u64) -> GroupDef {
        GroupDef { key: key.into(), build, order: Some(order), closable: true }
    }

    #[test]
    fn small_classical_groups_close() {
        let l32 = def("L3(2)", GroupBuild::Classical { kind: FormKind::Linear, n: 3, q: 2, eps: None, extras: vec![], base: PointKind::Subspaces(1) }, 168);
        let r = realize(&l32).unwrap();
        assert_eq!(r.group.as_ref().unwrap().degree(), 7);
        let u42 = def("U4(2)", GroupBuild::Classical { kind: FormKind::Unitary, n: 4, q: 4, eps: None, extras: vec![], base: PointKind::TotallySingular(2) }, 25920);
        assert!(realize(&u42).is_ok());
    }

    #[test]
    fn subset_and_partition_actions() {
        let s6 = realize(&def("S6", GroupBuild::SymAlt { n: 6, alt: false }, 720)).unwrap();
        let om = build_omega(&s6, &OmegaBuild::Subsets(2)).unwrap();
        assert_eq!(om.degree, 15);
        let t = om.image(&s6, &s6.element(&ElementRef::Cycles("(0 1)".into())).unwrap()).unwrap();
        assert_eq!(t.fixed_point_count(), 7);
        let pa = build_omega(&s6, &OmegaBuild::Partitions).unwrap();
        assert_eq!(pa.degree, 10);
        let t = pa.image(&s6, &s6.element(&ElementRef::Cycles("(0 1)".into())).unwrap()).unwrap();
        assert_eq!(t.fixed_point_count(), 4);
    }

    #[test]
    fn diagonal_and_wreath() {
        let d = realize(&def("diag", GroupBuild::DiagonalA5, 7200)).unwrap();
        let swap = d.element(&ElementRef::Diagonal { left: String::new(), right: String::new(), swap: true }).unwrap();
        let Elem::Perm(x) = swap else { panic!() };
        assert_eq!(x.fixed_point_count(), 16);
        let s5 = def("S5", GroupBuild::SymAlt { n: 5, alt: false }, 120);
        let w = def("S5wrS2", GroupBuild::Wreath { component: Box::new(s5), omega: OmegaBuild::Natural, k: 2 }, 28800);
        let w = realize(&w).unwrap();
        let e = w.element(&ElementRef::Wreath { comps: vec![ElementRef::Cycles("(0 1)".into()), ElementRef::Identity], perm: vec![0, 1] }).unwrap();
        let Elem::Perm(x) = e else { panic!() };
        assert_eq!(x.fixed_point_count(), 15);
        assert_eq!(w.moves_coordinates(&x), Some(false));
    }

    #[test]
    fn affine_groups() {
        let a = realize(&def("3^2:GL2(3)", GroupBuild::Affine { p: 3, d: 2, h: AffineH::General }, 432)).unwrap();
        let Elem::Perm(t) = a.element(&ElementRef::Spec(ElementSpec::transvection(2, 3))).unwrap() else { panic!() };
        assert_eq!(t.fixed_point_count(), 3);
        assert!(a.group.as_ref().unwrap().contains(&t).unwrap());
        assert!(realize(&def("7:3", GroupBuild::Affine { p: 7, d: 1, h: AffineH::Mult(3) }, 21)).is_ok());
        assert!(realize(&def("2^4:GammaL1(16)", GroupBuild::Affine { p: 2, d: 4, h: AffineH::SemilinearOne }, 960)).is_ok());
    }
}
