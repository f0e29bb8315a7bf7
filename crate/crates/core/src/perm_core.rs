//! Permutations on {0,…,m−1} and groups generated by them: the brute-force oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use hashbrown::HashTable;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_math::{is_prime, lcm_u64, Rational};

/// Default ceiling on the number of elements a closure may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 5_000_000;
/// Largest supported degree.
pub const MAX_DEGREE: usize = 1 << 24;

/// Image-array permutation: `images[j]` is the image of point `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let m = images.len();
        if m > MAX_DEGREE {
            return Err(Error::NotAPermutation(format!("degree {m} exceeds 2^24")));
        }
        let mut seen = vec![false; m];
        for &i in &images {
            let i = i as usize;
            if i >= m || seen[i] {
                return Err(Error::NotAPermutation(format!("image {i} repeated or out of range")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let a = a as usize;
                if a >= degree || used[a] {
                    return Err(Error::NotAPermutation(format!("point {a} repeated or out of range")));
                }
                used[a] = true;
                images[a] = c[(k + 1) % c.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 0-based cycle notation such as `(0 1)(2 3 4)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("bad cycle notation `{s}`")))?;
            let pts = body
                .0
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad point `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = body.1.trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, pt: u32) -> u32 {
        self.images[pt as usize]
    }

    /// `self` followed by `other`: the point `j` goes to `other[self[j]]`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹·self·g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        g.inverse().compose(self)?.compose(g)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &j)| *i as u32 == j).count()
    }

    pub fn moved_points(&self) -> usize {
        self.degree() - self.fixed_point_count()
    }

    /// Cycle lengths including fixed points, longest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn orbit_count(&self) -> usize {
        self.cycle_type().len()
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] || self.images[s] as usize == s {
                seen[s] = true;
                continue;
            }
            let mut c = Vec::new();
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                c.push(j as u32);
                j = self.images[j] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Order as u64, or `None` if the lcm overflows.
    pub fn order_u64(&self) -> Option<u64> {
        let mut acc = 1u64;
        for len in self.cycle_type() {
            let l = len as u64;
            acc = acc.checked_mul(l / num_integer::gcd(acc, l))?;
        }
        Some(acc)
    }

    pub fn element_order(&self) -> BigUint {
        self.cycle_type()
            .into_iter()
            .fold(BigUint::from(1u32), |a, l| num_integer::lcm(a, BigUint::from(l)))
    }

    pub fn to_cycle_string(&self) -> String {
        let cs = self.cycles();
        if cs.is_empty() {
            return "()".into();
        }
        cs.iter()
            .map(|c| format!("({})", c.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")))
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

pub fn brute_index(x: &Permutation) -> usize {
    x.degree() - x.orbit_count()
}

#[inline]
fn hash_points(points: impl Iterator<Item = u32>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for p in points {
        h = (h ^ p as u64).wrapping_mul(0x0000_0100_0000_01b3);
        h ^= h >> 29;
    }
    h.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Packed element list with an exact hash index.
///
/// Points are stored in 1, 2 or 4 bytes depending on the degree, which is what
/// lets Sp₆(2) fit comfortably in memory.
pub struct ElementStore {
    degree: usize,
    width: usize,
    data: Vec<u8>,
    len: usize,
    table: HashTable<u32>,
    parent: Vec<u32>,
    via: Vec<u16>,
}

const NO_PARENT: u32 = u32::MAX;

impl ElementStore {
    fn new(degree: usize) -> Self {
        let width = if degree <= 256 {
            1
        } else if degree <= 1 << 16 {
            2
        } else {
            4
        };
        ElementStore {
            degree,
            width,
            data: Vec::new(),
            len: 0,
            table: HashTable::new(),
            parent: Vec::new(),
            via: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    fn point(&self, i: usize, j: usize) -> u32 {
        let off = (i * self.degree + j) * self.width;
        match self.width {
            1 => self.data[off] as u32,
            2 => u16::from_le_bytes([self.data[off], self.data[off + 1]]) as u32,
            _ => u32::from_le_bytes(self.data[off..off + 4].try_into().unwrap()),
        }
    }

    fn equals(&self, i: usize, imgs: &[u32]) -> bool {
        imgs.iter().enumerate().all(|(j, &p)| self.point(i, j) == p)
    }

    pub fn load(&self, i: usize, buf: &mut [u32]) {
        for (j, b) in buf.iter_mut().enumerate() {
            *b = self.point(i, j);
        }
    }

    pub fn get(&self, i: usize) -> Permutation {
        let mut v = vec![0; self.degree];
        self.load(i, &mut v);
        Permutation { images: v }
    }

    pub fn index_of(&self, imgs: &[u32]) -> Option<usize> {
        if imgs.len() != self.degree {
            return None;
        }
        let h = hash_points(imgs.iter().copied());
        self.table.find(h, |&i| self.equals(i as usize, imgs)).map(|&i| i as usize)
    }

    /// Inserts when absent; returns `(index, inserted)`.
    fn insert(&mut self, imgs: &[u32], parent: u32, via: u16) -> (usize, bool) {
        let h = hash_points(imgs.iter().copied());
        if let Some(&i) = self.table.find(h, |&i| self.equals(i as usize, imgs)) {
            return (i as usize, false);
        }
        let idx = self.len;
        for &p in imgs {
            match self.width {
                1 => self.data.push(p as u8),
                2 => self.data.extend_from_slice(&(p as u16).to_le_bytes()),
                _ => self.data.extend_from_slice(&p.to_le_bytes()),
            }
        }
        self.len += 1;
        self.parent.push(parent);
        self.via.push(via);
        let (data, degree, width) = (&self.data, self.degree, self.width);
        let rehash = |&i: &u32| {
            let i = i as usize;
            hash_points((0..degree).map(|j| {
                let off = (i * degree + j) * width;
                match width {
                    1 => data[off] as u32,
                    2 => u16::from_le_bytes([data[off], data[off + 1]]) as u32,
                    _ => u32::from_le_bytes(data[off..off + 4].try_into().unwrap()),
                }
            }))
        };
        self.table.insert_unique(h, idx as u32, rehash);
        (idx, true)
    }

    /// Generator indices whose product (left to right) is element `i`.
    pub fn word(&self, i: usize) -> Option<Vec<u16>> {
        let mut w = Vec::new();
        let mut cur = i;
        while cur != 0 {
            let p = self.parent[cur];
            if p == NO_PARENT {
                return None;
            }
            w.push(self.via[cur]);
            cur = p as usize;
        }
        w.reverse();
        Some(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.len).map(|i| self.get(i))
    }
}

/// Breadth-first closure of `gens`; element 0 is the identity.
pub fn group_closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<ElementStore> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    if gens.len() > u16::MAX as usize {
        return Err(Error::InvalidParameter("too many generators".into()));
    }
    let mut store = ElementStore::new(degree);
    store.insert(&Permutation::identity(degree).images, NO_PARENT, 0);
    let mut cur = vec![0u32; degree];
    let mut next = vec![0u32; degree];
    let mut head = 0;
    while head < store.len {
        store.load(head, &mut cur);
        for (gi, g) in gens.iter().enumerate() {
            for (n, &c) in next.iter_mut().zip(cur.iter()) {
                *n = g.images[c as usize];
            }
            let (_, fresh) = store.insert(&next, head as u32, gi as u16);
            if fresh && store.len > cap {
                return Err(Error::CapExceeded(cap));
            }
        }
        head += 1;
    }
    Ok(store)
}

/// One conjugacy class, represented by its first element in closure order.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub rep_index: usize,
    pub size: u64,
    pub order: u64,
}

struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

/// A class representative pushed into some action of the group.
#[derive(Clone, Debug)]
pub struct ClassImage {
    pub image: Permutation,
    pub size: u64,
    pub order: u64,
}

/// Finitely generated permutation group with an optional cached closure.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    name: Option<String>,
    store: Option<Arc<ElementStore>>,
    classes: Arc<OnceLock<ClassData>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("generators", &self.generators.len())
            .field("order", &self.store.as_ref().map(|s| s.len()))
            .finish()
    }
}

/// The documented JSON group format.
#[derive(Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidParameter(format!("degree {degree} out of range")));
        }
        if generators.is_empty() {
            return Err(Error::InvalidParameter("at least one generator required".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermGroup { degree, generators, name: None, store: None, classes: Arc::default() })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let gens = f.generators.into_iter().map(Permutation::from_images).collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::new(f.degree, gens)?.with_name(f.name))
    }

    pub fn with_name(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Runs the closure once; later calls are free.
    pub fn close(&mut self, cap: usize) -> Result<&ElementStore> {
        if self.store.is_none() {
            let store = group_closure(self.degree, &self.generators, cap)?;
            self.store = Some(Arc::new(store));
        }
        Ok(self.store.as_ref().unwrap())
    }

    pub fn closed(mut self, cap: usize) -> Result<Self> {
        self.close(cap)?;
        Ok(self)
    }

    pub fn elements(&self) -> Result<&ElementStore> {
        self.store.as_deref().ok_or(Error::NotClosed)
    }

    pub fn order(&self) -> Result<BigUint> {
        Ok(BigUint::from(self.elements()?.len()))
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        Ok(x.degree() == self.degree && self.elements()?.index_of(&x.images).is_some())
    }

    /// Orbits on points, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for s in 0..self.degree {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orb = vec![s as u32];
            let mut k = 0;
            while k < orb.len() {
                let p = orb[k];
                for g in &self.generators {
                    let q = g.image(p);
                    if !seen[q as usize] {
                        seen[q as usize] = true;
                        orb.push(q);
                    }
                }
                k += 1;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Builds a group from a set of elements known to be closed, choosing a
    /// small generating subset greedily.
    pub fn from_element_set(degree: usize, elements: &[Permutation], cap: usize) -> Result<Self> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut store = group_closure(degree, &[Permutation::identity(degree)], cap)?;
        for e in elements {
            if store.index_of(&e.images).is_none() {
                gens.push(e.clone());
                store = group_closure(degree, &gens, cap)?;
            }
        }
        if store.len() != elements.len() {
            return Err(Error::NotASubgroup(format!(
                "{} elements generate a group of order {}",
                elements.len(),
                store.len()
            )));
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(degree));
        }
        let mut g = PermGroup::new(degree, gens)?;
        g.store = Some(Arc::new(store));
        Ok(g)
    }

    pub fn point_stabilizer(&self, pt: u32) -> Result<PermGroup> {
        let store = self.elements()?;
        if pt as usize >= self.degree {
            return Err(Error::InvalidParameter(format!("point {pt} out of range")));
        }
        let stab: Vec<Permutation> = store.iter().filter(|e| e.image(pt) == pt).collect();
        let orbit_len = self.orbits().into_iter().find(|o| o.contains(&pt)).map_or(0, |o| o.len());
        assert_eq!(orbit_len * stab.len(), store.len(), "orbit-stabilizer");
        PermGroup::from_element_set(self.degree, &stab, store.len())
    }

    fn class_data(&self) -> Result<&ClassData> {
        let store = self.elements()?;
        if let Some(c) = self.classes.get() {
            return Ok(c);
        }
        let n = store.len();
        let inv: Vec<Permutation> = self.generators.iter().map(|g| g.inverse()).collect();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        let mut buf = vec![0u32; self.degree];
        let mut conj = vec![0u32; self.degree];
        let mut queue: Vec<usize> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            class_of[start] = cid;
            queue.clear();
            queue.push(start);
            let mut k = 0;
            while k < queue.len() {
                store.load(queue[k], &mut buf);
                for (g, gi) in self.generators.iter().zip(&inv) {
                    // point j ↦ g(y(g⁻¹(j)))
                    for j in 0..self.degree {
                        conj[j] = g.images[buf[gi.images[j] as usize] as usize];
                    }
                    let idx = store.index_of(&conj).expect("closed under conjugation");
                    if class_of[idx] == u32::MAX {
                        class_of[idx] = cid;
                        queue.push(idx);
                    }
                }
                k += 1;
            }
            let rep = store.get(start);
            let order = rep.order_u64().ok_or_else(|| Error::Unsupported("element order overflows u64".into()))?;
            classes.push(ConjugacyClass { representative: rep, rep_index: start, size: queue.len() as u64, order });
        }
        let _ = self.classes.set(ClassData { classes, class_of });
        Ok(self.classes.get().unwrap())
    }

    pub fn conjugacy_classes(&self) -> Result<&[ConjugacyClass]> {
        Ok(&self.class_data()?.classes)
    }

    pub fn class_index_of(&self, x: &Permutation) -> Result<usize> {
        let idx = self
            .elements()?
            .index_of(&x.images)
            .ok_or_else(|| Error::NotASubgroup("element not in group".into()))?;
        Ok(self.class_data()?.class_of[idx] as usize)
    }

    /// Evaluates the closure word of element `index` on `images` (one per generator).
    pub fn evaluate_word(&self, index: usize, images: &[Permutation]) -> Result<Permutation> {
        if images.len() != self.generators.len() {
            return Err(Error::InvalidParameter("one image per generator required".into()));
        }
        let word = self
            .elements()?
            .word(index)
            .ok_or_else(|| Error::Unsupported("element words unavailable for this group".into()))?;
        let deg = images.first().map_or(self.degree, |p| p.degree());
        let mut acc = Permutation::identity(deg);
        for w in word {
            acc = acc.compose(&images[w as usize])?;
        }
        Ok(acc)
    }

    /// Class representatives in this action, or in the action given by
    /// `target` (generator images defining a homomorphism).
    pub fn class_images(&self, target: Option<&[Permutation]>) -> Result<Vec<ClassImage>> {
        self.conjugacy_classes()?
            .iter()
            .map(|c| {
                let image = match target {
                    None => c.representative.clone(),
                    Some(t) => self.evaluate_word(c.rep_index, t)?,
                };
                Ok(ClassImage { image, size: c.size, order: c.order })
            })
            .collect()
    }

    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> Result<Permutation> {
        let store = self.elements()?;
        Ok(store.get(rng.gen_range(0..store.len())))
    }
}

pub fn brute_fpr(g: &PermGroup, x: &Permutation) -> Result<Rational> {
    if x.degree() != g.degree() {
        return Err(Error::DegreeMismatch(g.degree(), x.degree()));
    }
    if !g.is_transitive() {
        return Err(Error::Intransitive);
    }
    Ok(fpr_of(x))
}

/// Fixed points over degree, without any transitivity check.
pub fn fpr_of(x: &Permutation) -> Rational {
    Rational::new(x.fixed_point_count() as u64, x.degree() as u64).expect("positive degree")
}

/// `|x^G ∩ H| / |x^G|` by scanning H against the class of x.
pub fn brute_fpr_via_classes(g: &PermGroup, h: &PermGroup, x: &Permutation) -> Result<Rational> {
    let gs = g.elements()?;
    let hs = h.elements()?;
    for e in hs.iter() {
        if gs.index_of(&e.images).is_none() {
            return Err(Error::NotASubgroup("H has an element outside G".into()));
        }
    }
    let cls = g.class_index_of(x)?;
    let data = g.class_data()?;
    let hits = hs
        .iter()
        .filter(|e| data.class_of[gs.index_of(&e.images).unwrap()] as usize == cls)
        .count();
    Rational::new(hits as u64, data.classes[cls].size)
}

/// Action of G on the right cosets of H.
pub struct CosetAction {
    pub group: PermGroup,
    coset_of: Vec<u32>,
    reps: Vec<u32>,
    source: PermGroup,
}

impl CosetAction {
    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    /// Image of an element of G acting on the cosets.
    pub fn image_of(&self, x: &Permutation) -> Result<Permutation> {
        let store = self.source.elements()?;
        let mut buf = vec![0u32; self.source.degree()];
        let mut images = Vec::with_capacity(self.reps.len());
        for &r in &self.reps {
            store.load(r as usize, &mut buf);
            let prod: Vec<u32> = buf.iter().map(|&p| x.images[p as usize]).collect();
            let idx = store.index_of(&prod).ok_or_else(|| Error::NotASubgroup("element not in G".into()))?;
            images.push(self.coset_of[idx]);
        }
        Permutation::from_images(images)
    }
}

pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<CosetAction> {
    let gs = g.elements()?;
    let hs = h.elements()?;
    let hel: Vec<Permutation> = hs.iter().collect();
    let mut coset_of = vec![u32::MAX; gs.len()];
    let mut reps = Vec::new();
    let mut buf = vec![0u32; g.degree()];
    for e in 0..gs.len() {
        if coset_of[e] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(e as u32);
        gs.load(e, &mut buf);
        for hh in &hel {
            // h·e
            let prod: Vec<u32> = hh.images.iter().map(|&p| buf[p as usize]).collect();
            let idx = gs.index_of(&prod).ok_or_else(|| Error::NotASubgroup("H ⊄ G".into()))?;
            coset_of[idx] = c;
        }
    }
    if reps.len() * hel.len() != gs.len() {
        return Err(Error::NotASubgroup("coset sizes disagree with Lagrange".into()));
    }
    let mut act = CosetAction {
        group: PermGroup::new(1, vec![Permutation::identity(1)])?,
        coset_of,
        reps,
        source: g.clone(),
    };
    let gens = g.generators().iter().map(|x| act.image_of(x)).collect::<Result<Vec<_>>>()?;
    act.group = PermGroup::new(act.degree(), gens)?;
    Ok(act)
}

fn nontrivial(classes: &[ClassImage]) -> impl Iterator<Item = &ClassImage> {
    classes.iter().filter(|c| c.order > 1)
}

/// Minimal index over nontrivial classes, with the distinct orders attaining it.
pub fn min_index_of(classes: &[ClassImage]) -> Result<(usize, Vec<u64>)> {
    let best = nontrivial(classes)
        .map(|c| brute_index(&c.image))
        .min()
        .ok_or_else(|| Error::InvalidParameter("trivial group".into()))?;
    let witnesses: BTreeSet<u64> =
        nontrivial(classes).filter(|c| brute_index(&c.image) == best).map(|c| c.order).collect();
    Ok((best, witnesses.into_iter().collect()))
}

pub fn minimal_degree_of(classes: &[ClassImage]) -> Result<usize> {
    nontrivial(classes)
        .map(|c| c.image.moved_points())
        .min()
        .ok_or_else(|| Error::InvalidParameter("trivial group".into()))
}

pub fn max_fpr_by_prime_of(classes: &[ClassImage]) -> BTreeMap<u64, (Rational, Permutation)> {
    let mut out: BTreeMap<u64, (Rational, Permutation)> = BTreeMap::new();
    for c in classes.iter().filter(|c| is_prime(c.order)) {
        let v = fpr_of(&c.image);
        match out.get(&c.order) {
            Some((best, _)) if *best >= v => {}
            _ => {
                out.insert(c.order, (v, c.image.clone()));
            }
        }
    }
    out
}

/// All distinct fpr values of prime-order elements, per prime.
pub fn fpr_values_by_prime(classes: &[ClassImage]) -> BTreeMap<u64, BTreeSet<Rational>> {
    let mut out: BTreeMap<u64, BTreeSet<Rational>> = BTreeMap::new();
    for c in classes.iter().filter(|c| is_prime(c.order)) {
        out.entry(c.order).or_default().insert(fpr_of(&c.image));
    }
    out
}

/// Σ over the group of the number of fixed points.
pub fn burnside_sum(classes: &[ClassImage]) -> BigUint {
    classes
        .iter()
        .map(|c| BigUint::from(c.size) * BigUint::from(c.image.fixed_point_count()))
        .sum()
}

pub fn brute_min_index(g: &PermGroup) -> Result<(usize, Vec<u64>)> {
    min_index_of(&g.class_images(None)?)
}

pub fn brute_minimal_degree(g: &PermGroup) -> Result<usize> {
    minimal_degree_of(&g.class_images(None)?)
}

pub fn brute_max_fpr_by_prime(g: &PermGroup) -> Result<BTreeMap<u64, (Rational, Permutation)>> {
    if !g.is_transitive() {
        return Err(Error::Intransitive);
    }
    Ok(max_fpr_by_prime_of(&g.class_images(None)?))
}

/// Element orders are lcms of cycle lengths; exposed for callers holding raw images.
pub fn order_of_cycle_type(ct: &[usize]) -> u64 {
    ct.iter().fold(1u64, |a, &l| lcm_u64(a, l as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let full: Vec<u32> = (0..n as u32).collect();
        PermGroup::new(n, vec![cyc(n, "(0 1)"), Permutation::from_cycles(n, &[full]).unwrap()]).unwrap()
    }

    #[test]
    fn basic_ops() {
        let a = cyc(5, "(0 1 2)");
        assert_eq!(a.inverse(), cyc(5, "(0 2 1)"));
        assert_eq!(Permutation::identity(5).compose(&a).unwrap(), a);
        assert_eq!(cyc(5, "(0 1)(2 3 4)").order_u64(), Some(6));
        assert_eq!(Permutation::identity(4).orbit_count(), 4);
        assert_eq!(cyc(5, "(0 1 2 3 4)").fixed_point_count(), 0);
        assert_eq!(cyc(5, "(0 1 2 3 4)").orbit_count(), 1);
        assert_eq!(cyc(4, "(0 1)").orbit_count(), 3);
        assert!(a.compose(&Permutation::identity(3)).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn closure_counts() {
        let mut s5 = sym(5);
        assert_eq!(s5.close(DEFAULT_CLOSURE_CAP).unwrap().len(), 120);
        let mut c3 = PermGroup::new(3, vec![cyc(3, "(0 1 2)")]).unwrap();
        assert_eq!(c3.close(10).unwrap().len(), 3);
        assert_eq!(c3.conjugacy_classes().unwrap().len(), 3);
        let mut s6 = sym(6);
        assert!(matches!(s6.close(100), Err(Error::CapExceeded(100))));
    }

    #[test]
    fn classes_of_s4_and_a5() {
        let s4 = sym(4).closed(1000).unwrap();
        let mut sizes: Vec<u64> = s4.conjugacy_classes().unwrap().iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        let a5 = PermGroup::new(5, vec![cyc(5, "(0 1 2)"), cyc(5, "(0 1 2 3 4)")]).unwrap().closed(1000).unwrap();
        assert_eq!(a5.order().unwrap(), BigUint::from(60u32));
        assert_eq!(a5.conjugacy_classes().unwrap().len(), 5);
        let (ind, wit) = brute_min_index(&a5).unwrap();
        assert_eq!((ind, wit), (2, vec![2, 3]));
        assert_eq!(brute_max_fpr_by_prime(&a5).unwrap()[&5].0, Rational::zero());
    }

    #[test]
    fn stabilizer_and_orbits() {
        let s5 = sym(5).closed(1000).unwrap();
        assert!(s5.is_transitive());
        assert_eq!(s5.point_stabilizer(0).unwrap().order().unwrap(), BigUint::from(24u32));
        let g = PermGroup::new(3, vec![cyc(3, "(0 1)")]).unwrap();
        assert_eq!(g.orbits(), vec![vec![0, 1], vec![2]]);
        assert_eq!(brute_fpr(&g, &cyc(3, "(0 1)")), Err(Error::Intransitive));
    }

    #[test]
    fn fpr_via_classes_matches_coset_action() {
        let s4 = sym(4).closed(1000).unwrap();
        let h = s4.point_stabilizer(0).unwrap();
        let t = cyc(4, "(0 1)");
        assert_eq!(brute_fpr_via_classes(&s4, &h, &t).unwrap(), Rational::ratio(1, 2));
        assert_eq!(brute_fpr_via_classes(&s4, &h, &Permutation::identity(4)).unwrap(), Rational::one());
        let act = coset_action(&s4, &h).unwrap();
        assert_eq!(act.degree(), 4);
        for c in s4.conjugacy_classes().unwrap() {
            let img = act.image_of(&c.representative).unwrap();
            assert_eq!(fpr_of(&img), brute_fpr_via_classes(&s4, &h, &c.representative).unwrap());
        }
    }

    #[test]
    fn words_reproduce_elements() {
        let s5 = sym(5).closed(1000).unwrap();
        let gens = s5.generators().to_vec();
        for i in [0usize, 1, 17, 119] {
            assert_eq!(s5.evaluate_word(i, &gens).unwrap(), s5.elements().unwrap().get(i));
        }
    }

    #[test]
    fn small_min_index() {
        let g = PermGroup::new(2, vec![cyc(2, "(0 1)")]).unwrap().closed(10).unwrap();
        assert_eq!(brute_min_index(&g).unwrap().0, 1);
        assert_eq!(brute_minimal_degree(&sym(5).closed(1000).unwrap()).unwrap(), 2);
    }
}
