//! Quivers, valued quivers of both flavors, automorphisms, and paths.
//!
//! Vertex and arrow ids are strings; the canonical ordering everywhere is
//! lexicographic, which makes orbit labels and enumeration order
//! deterministic.

mod fold;
mod morphism;

pub use fold::{crush_abs, crush_rel, fold, functor_f, lift_relative, strip_unfold_labels, unfold};
pub use morphism::{
    abs_isomorphic, check_abs_morphism, check_rel_morphism, enumerate_abs_morphisms,
    enumerate_rel_morphisms, ValuedMorphism,
};

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

pub type Id = String;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub id: Id,
    pub tail: Id,
    pub head: Id,
}

/// A finite directed graph. Vertices and arrows are kept sorted by id.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    pub vertices: Vec<Id>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(mut vertices: Vec<Id>, mut arrows: Vec<Arrow>) -> Quiver {
        vertices.sort();
        arrows.sort_by(|a, b| a.id.cmp(&b.id));
        Quiver { vertices, arrows }
    }

    pub fn vertex_index(&self, v: &str) -> Option<usize> {
        self.vertices.binary_search_by(|x| x.as_str().cmp(v)).ok()
    }

    pub fn arrow_index(&self, a: &str) -> Option<usize> {
        self.arrows.binary_search_by(|x| x.id.as_str().cmp(a)).ok()
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.arrow_index(id).map(|i| &self.arrows[i])
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = vec![];
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(v.clone()) {
                out.push(format!("duplicate vertex id {v:?}"));
            }
        }
        let mut seen_a = BTreeSet::new();
        for a in &self.arrows {
            if !seen_a.insert(a.id.clone()) {
                out.push(format!("duplicate arrow id {:?}", a.id));
            }
            if self.vertex_index(&a.tail).is_none() {
                out.push(format!(
                    "arrow {:?} has unknown endpoint {:?}",
                    a.id, a.tail
                ));
            }
            if self.vertex_index(&a.head).is_none() {
                out.push(format!(
                    "arrow {:?} has unknown endpoint {:?}",
                    a.id, a.head
                ));
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj: HashMap<&str, Vec<&str>> = HashMap::new();
        for a in &self.arrows {
            adj.entry(a.tail.as_str())
                .or_default()
                .push(a.head.as_str());
            adj.entry(a.head.as_str())
                .or_default()
                .push(a.tail.as_str());
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([self.vertices[0].as_str()]);
        seen.insert(self.vertices[0].as_str());
        while let Some(v) = queue.pop_front() {
            for &w in adj.get(v).into_iter().flatten() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm; a loop or oriented cycle leaves vertices behind.
        let mut indeg: BTreeMap<&str, usize> =
            self.vertices.iter().map(|v| (v.as_str(), 0)).collect();
        // arrows with unknown endpoints are a validation error, not a cycle
        let arrows: Vec<&Arrow> = self
            .arrows
            .iter()
            .filter(|a| indeg.contains_key(a.tail.as_str()) && indeg.contains_key(a.head.as_str()))
            .collect();
        for a in &arrows {
            *indeg.get_mut(a.head.as_str()).unwrap() += 1;
        }
        let mut queue: VecDeque<&str> = indeg
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| v)
            .collect();
        let mut removed = 0;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for a in &arrows {
                if a.tail == v {
                    let d = indeg.get_mut(a.head.as_str()).unwrap();
                    *d -= 1;
                    if *d == 0 {
                        queue.push_back(a.head.as_str());
                    }
                }
            }
        }
        removed == self.vertices.len()
    }

    pub fn has_loop(&self) -> bool {
        self.arrows.iter().any(|a| a.tail == a.head)
    }
}

/// Outcome of structural validation, with connectivity and acyclicity flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverReport {
    pub violations: Vec<String>,
    pub connected: bool,
    pub acyclic: bool,
}

pub fn validate_quiver(q: &Quiver) -> QuiverReport {
    QuiverReport {
        violations: q.violations(),
        connected: q.is_connected(),
        acyclic: q.is_acyclic(),
    }
}

/// A quiver with a positive integer on each vertex and each arrow, the arrow
/// value a common multiple of its endpoint values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbsValuedQuiver {
    pub quiver: Quiver,
    /// d-value per vertex, aligned with `quiver.vertices`.
    pub d: Vec<u64>,
    /// m-value per arrow, aligned with `quiver.arrows`.
    pub m: Vec<u64>,
}

impl AbsValuedQuiver {
    pub fn new(quiver: Quiver, d: Vec<u64>, m: Vec<u64>) -> AbsValuedQuiver {
        assert_eq!(d.len(), quiver.vertices.len());
        assert_eq!(m.len(), quiver.arrows.len());
        AbsValuedQuiver { quiver, d, m }
    }

    /// Trivial valuation: a plain quiver seen as a valued one.
    pub fn trivial(quiver: Quiver) -> AbsValuedQuiver {
        let d = vec![1; quiver.vertices.len()];
        let m = vec![1; quiver.arrows.len()];
        AbsValuedQuiver { quiver, d, m }
    }

    pub fn d_of(&self, v: &str) -> u64 {
        self.d[self.quiver.vertex_index(v).expect("unknown vertex")]
    }

    pub fn m_of(&self, a: &str) -> u64 {
        self.m[self.quiver.arrow_index(a).expect("unknown arrow")]
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = self.quiver.violations();
        for (v, &d) in self.quiver.vertices.iter().zip(&self.d) {
            if d == 0 {
                out.push(format!("vertex {v:?} has value 0"));
            }
        }
        for (a, &m) in self.quiver.arrows.iter().zip(&self.m) {
            if m == 0 {
                out.push(format!("arrow {:?} has value 0", a.id));
                continue;
            }
            if self.quiver.vertex_index(&a.tail).is_none()
                || self.quiver.vertex_index(&a.head).is_none()
            {
                continue;
            }
            let (dt, dh) = (self.d_of(&a.tail), self.d_of(&a.head));
            if dt == 0 || dh == 0 || m % dt != 0 || m % dh != 0 {
                out.push(format!(
                    "arrow {:?}: value {m} is not a common multiple of {dt} and {dh}",
                    a.id
                ));
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }
}

/// A quiver with a pair of positive integers on each arrow, admitting
/// positive weights f_i with d_ij f_j = d_ji f_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelValuedQuiver {
    pub quiver: Quiver,
    /// (d_ij, d_ji) for each arrow ρ: i → j, aligned with `quiver.arrows`.
    pub dval: Vec<(u64, u64)>,
}

impl RelValuedQuiver {
    pub fn new(quiver: Quiver, dval: Vec<(u64, u64)>) -> RelValuedQuiver {
        assert_eq!(dval.len(), quiver.arrows.len());
        RelValuedQuiver { quiver, dval }
    }

    pub fn dval_of(&self, a: &str) -> (u64, u64) {
        self.dval[self.quiver.arrow_index(a).expect("unknown arrow")]
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = self.quiver.violations();
        for (a, &(dij, dji)) in self.quiver.arrows.iter().zip(&self.dval) {
            if dij == 0 || dji == 0 {
                out.push(format!("arrow {:?} has a zero value", a.id));
            }
        }
        if out.is_empty() {
            if let Err(Error::InconsistentValuation(msg)) = fold::solve_weights(self) {
                out.push(format!("no positive weight system: {msg}"));
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }
}

/// A pair of bijections on vertices and arrows respecting tails and heads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuiverAutomorphism {
    pub vertex_map: BTreeMap<Id, Id>,
    pub arrow_map: BTreeMap<Id, Id>,
}

impl QuiverAutomorphism {
    pub fn identity(q: &Quiver) -> QuiverAutomorphism {
        QuiverAutomorphism {
            vertex_map: q.vertices.iter().map(|v| (v.clone(), v.clone())).collect(),
            arrow_map: q
                .arrows
                .iter()
                .map(|a| (a.id.clone(), a.id.clone()))
                .collect(),
        }
    }

    pub fn validate(&self, q: &Quiver) -> Result<()> {
        let err = |m: String| Err(Error::InvalidAutomorphism(m));
        if self.vertex_map.len() != q.vertices.len()
            || !q.vertices.iter().all(|v| self.vertex_map.contains_key(v))
        {
            return err("vertex map is not defined on exactly the vertex set".into());
        }
        if self.arrow_map.len() != q.arrows.len()
            || !q.arrows.iter().all(|a| self.arrow_map.contains_key(&a.id))
        {
            return err("arrow map is not defined on exactly the arrow set".into());
        }
        let vimg: BTreeSet<_> = self.vertex_map.values().collect();
        if vimg.len() != q.vertices.len() || !q.vertices.iter().all(|v| vimg.contains(v)) {
            return err("vertex map is not a bijection".into());
        }
        let aimg: BTreeSet<_> = self.arrow_map.values().collect();
        if aimg.len() != q.arrows.len() {
            return err("arrow map is not a bijection".into());
        }
        for a in &q.arrows {
            let img = q
                .arrow(&self.arrow_map[&a.id])
                .ok_or_else(|| Error::InvalidAutomorphism("arrow image unknown".into()))?;
            if img.tail != self.vertex_map[&a.tail] || img.head != self.vertex_map[&a.head] {
                return err(format!("arrow {:?} image does not respect endpoints", a.id));
            }
        }
        Ok(())
    }

    pub fn vertex_image(&self, v: &str) -> &Id {
        &self.vertex_map[v]
    }

    pub fn arrow_image(&self, a: &str) -> &Id {
        &self.arrow_map[a]
    }

    /// Orbits of the vertex set as cyclic lists starting at the least member.
    pub fn vertex_orbits(&self, q: &Quiver) -> Vec<Vec<Id>> {
        orbits(&q.vertices, &self.vertex_map)
    }

    pub fn arrow_orbits(&self, q: &Quiver) -> Vec<Vec<Id>> {
        let ids: Vec<Id> = q.arrows.iter().map(|a| a.id.clone()).collect();
        orbits(&ids, &self.arrow_map)
    }
}

fn orbits(ids: &[Id], map: &BTreeMap<Id, Id>) -> Vec<Vec<Id>> {
    let mut seen = BTreeSet::new();
    let mut out = vec![];
    let mut sorted: Vec<&Id> = ids.iter().collect();
    sorted.sort();
    for start in sorted {
        if seen.contains(start) {
            continue;
        }
        let mut orbit = vec![start.clone()];
        seen.insert(start.clone());
        let mut cur = &map[start];
        while cur != start {
            orbit.push(cur.clone());
            seen.insert(cur.clone());
            cur = &map[cur];
        }
        out.push(orbit);
    }
    out
}

/// A path ρ_n ⋯ ρ_1 stored in traversal order (ρ_1 first), or the trivial
/// path at `start` when `arrows` is empty. Composition reads right to left.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Path {
    pub start: Id,
    pub arrows: Vec<Id>,
}

impl Path {
    pub fn trivial(v: &str) -> Path {
        Path {
            start: v.to_string(),
            arrows: vec![],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> Id {
        self.arrows
            .last()
            .map(|a| q.arrow(a).expect("unknown arrow").head.clone())
            .unwrap_or_else(|| self.start.clone())
    }

    /// The composite `self ∘ earlier` (earlier traversed first), when the
    /// endpoints match.
    pub fn compose_after(&self, earlier: &Path, q: &Quiver) -> Option<Path> {
        if earlier.end(q) != self.start {
            return None;
        }
        let mut arrows = earlier.arrows.clone();
        arrows.extend(self.arrows.iter().cloned());
        Some(Path {
            start: earlier.start.clone(),
            arrows,
        })
    }
}

/// All paths of length 0..=l, grouped by length, each group sorted.
pub fn paths_up_to(q: &Quiver, l: usize) -> Vec<Vec<Path>> {
    let mut by_len: Vec<Vec<Path>> = vec![q.vertices.iter().map(|v| Path::trivial(v)).collect()];
    for n in 1..=l {
        let mut next = vec![];
        for p in &by_len[n - 1] {
            let at = p.end(q);
            for a in &q.arrows {
                if a.tail == at {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a.id.clone());
                    next.push(Path {
                        start: p.start.clone(),
                        arrows,
                    });
                }
            }
        }
        next.sort();
        by_len.push(next);
    }
    by_len
}

/// Image of a path under an automorphism.
pub fn path_image(p: &Path, s: &QuiverAutomorphism) -> Path {
    Path {
        start: s.vertex_image(&p.start).clone(),
        arrows: p.arrows.iter().map(|a| s.arrow_image(a).clone()).collect(),
    }
}

/// Per-length orbit counts of the automorphism action on paths. Each count
/// equals the degree-wise dimension of the σ-fixed subalgebra of the path
/// algebra, since σ permutes the path basis.
pub fn sigma_orbit_count(q: &Quiver, s: &QuiverAutomorphism, l: usize) -> Result<Vec<usize>> {
    s.validate(q)?;
    let groups = paths_up_to(q, l);
    Ok(groups
        .iter()
        .map(|paths| {
            let mut seen: BTreeSet<Path> = BTreeSet::new();
            let mut count = 0;
            for p in paths {
                if seen.contains(p) {
                    continue;
                }
                count += 1;
                let mut cur = p.clone();
                loop {
                    seen.insert(cur.clone());
                    cur = path_image(&cur, s);
                    if cur == *p {
                        break;
                    }
                }
            }
            count
        })
        .collect())
}
