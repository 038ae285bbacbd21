//! Exhaustive enumeration of representations at a fixed dimension vector,
//! partitioned into isomorphism classes by the base-change group action,
//! plus subspace/submodule enumeration and Hall numbers.
//!
//! Classes are canonically labelled by the lexicographically least matrix
//! tuple in the orbit. Orbits are explored breadth-first from each seed with
//! a generating set of Π GL_{n_i}(K_i): elementary transvections with entry
//! one plus a primitive-scalar dilation (and their inverses).

use super::{direct_sum, RepCtx, Representation};
use crate::error::{Error, Result};
use crate::gf::Gf;
use crate::linalg::Mat;
use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

/// One isomorphism class: the canonical representative and its label.
#[derive(Clone, Debug)]
pub struct RepClass {
    pub rep: Representation,
    pub label: String,
}

/// All classes at a fixed dimension vector, with a lookup from any matrix
/// tuple to its class index.
pub struct DimClasses {
    pub dims: Vec<u64>,
    pub classes: Vec<RepClass>,
    lookup: HashMap<Vec<u16>, u32>,
}

impl DimClasses {
    pub fn class_index(&self, ctx: &RepCtx, rep: &Representation) -> usize {
        let key = encode(ctx, rep);
        self.lookup[&key] as usize
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub(crate) fn encode(ctx: &RepCtx, rep: &Representation) -> Vec<u16> {
    let mut out = vec![];
    for (idx, m) in rep.matrices.iter().enumerate() {
        let gf = &ctx.arrows[idx].head_field;
        for e in &m.data {
            let i = gf.index_of(e);
            assert!(i < 65536, "entry field too large for enumeration");
            out.push(i as u16);
        }
    }
    out
}

fn decode(ctx: &RepCtx, dims: &[u64], key: &[u16]) -> Representation {
    let mut rep = Representation::zero(ctx, dims.to_vec());
    let mut pos = 0;
    for (idx, m) in rep.matrices.iter_mut().enumerate() {
        let gf = &ctx.arrows[idx].head_field;
        for e in m.data.iter_mut() {
            *e = gf.elem_of(key[pos] as u128);
            pos += 1;
        }
    }
    rep
}

fn label_of(dims: &[u64], key: &[u16], entry_counts: &[usize]) -> String {
    let dims_part = dims
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let mut parts = vec![dims_part];
    let mut pos = 0;
    for &count in entry_counts {
        let block = key[pos..pos + count]
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",");
        parts.push(block);
        pos += count;
    }
    parts.join("|")
}

/// A generator action on matrix tuples: left factors for arrows with head
/// at the vertex, right factors for arrows with tail there.
struct GenAction {
    /// (arrow index, g as an index matrix over the head field)
    left: Vec<(usize, Vec<u16>)>,
    /// (arrow index, lift(g^{-1}) as an index matrix over the head field)
    right: Vec<(usize, Vec<u16>)>,
}

fn to_index_mat(gf: &Gf, m: &Mat) -> Vec<u16> {
    m.data
        .iter()
        .map(|e| {
            let i = gf.index_of(e);
            assert!(i < 65536);
            i as u16
        })
        .collect()
}

/// Base-change generators at one vertex: transvections E_ab(±1) and the
/// primitive dilation diag(g, 1, ..., 1) with its inverse. Conjugating the
/// transvections by dilations reaches every transvection entry, so these
/// generate the full GL.
fn vertex_generators(gf: &Gf, n: usize) -> Vec<Mat> {
    let mut gens = vec![];
    if n == 0 {
        return gens;
    }
    let prim = gf.primitive();
    for scalar in [prim.clone(), gf.inv(&prim).unwrap()] {
        let mut d = Mat::identity(gf, n);
        *d.at_mut(0, 0) = scalar;
        gens.push(d);
    }
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for val in [gf.one(), gf.neg(&gf.one())] {
                let mut e = Mat::identity(gf, n);
                *e.at_mut(a, b) = val;
                gens.push(e);
            }
        }
    }
    gens.dedup();
    gens
}

fn index_mat_mul(
    table: &crate::gf::SmallField,
    a: &[u16],
    (ar, ac): (usize, usize),
    b: &[u16],
    (br, bc): (usize, usize),
) -> Vec<u16> {
    assert_eq!(ac, br);
    let mut out = vec![0u16; ar * bc];
    for i in 0..ar {
        for k in 0..ac {
            let x = a[i * ac + k] as u64;
            if x == 0 {
                continue;
            }
            for j in 0..bc {
                let y = b[k * bc + j] as u64;
                if y == 0 {
                    continue;
                }
                let prod = table.mul(x, y);
                out[i * bc + j] = table.add(out[i * bc + j] as u64, prod) as u16;
            }
        }
    }
    out
}

/// Enumerate all representations at the dimension vector and partition them
/// into base-change orbits. The total tuple count must stay within the cap.
pub fn enumerate_reps(ctx: &RepCtx, dims: &[u64], cap: u64) -> Result<Arc<DimClasses>> {
    if let Some(hit) = ctx.classes_cache.lock().unwrap().get(dims) {
        return Ok(hit.clone());
    }
    let computed = Arc::new(compute_classes(ctx, dims, cap)?);
    ctx.classes_cache
        .lock()
        .unwrap()
        .insert(dims.to_vec(), computed.clone());
    Ok(computed)
}

fn compute_classes(ctx: &RepCtx, dims: &[u64], cap: u64) -> Result<DimClasses> {
    assert_eq!(dims.len(), ctx.vertex_count());
    let shapes: Vec<(usize, usize)> = (0..ctx.arrows.len())
        .map(|a| ctx.matrix_shape(a, dims))
        .collect();
    let entry_counts: Vec<usize> = shapes.iter().map(|&(r, c)| r * c).collect();
    let orders: Vec<u128> = ctx.arrows.iter().map(|a| a.head_field.order()).collect();
    let mut total: u128 = 1;
    for (idx, &count) in entry_counts.iter().enumerate() {
        for _ in 0..count {
            total = total.saturating_mul(orders[idx]);
            if total > cap as u128 {
                return Err(Error::SizeLimitExceeded { needed: total, cap });
            }
        }
    }
    // per-position base for the odometer
    let mut bases = vec![];
    for (idx, &count) in entry_counts.iter().enumerate() {
        bases.extend(std::iter::repeat_n(orders[idx] as u16, count));
    }
    let width = bases.len();

    // generator actions
    let mut actions: Vec<GenAction> = vec![];
    for v in 0..ctx.vertex_count() {
        let n = dims[v] as usize;
        if n == 0 {
            continue;
        }
        let touched: Vec<usize> = (0..ctx.arrows.len())
            .filter(|&a| {
                entry_counts[a] > 0 && (ctx.arrows[a].head == v || ctx.arrows[a].tail == v)
            })
            .collect();
        if touched.is_empty() {
            continue;
        }
        let gf = &ctx.vertex_fields[v];
        for g in vertex_generators(gf, n) {
            let ginv = g.inverse(gf).expect("generator is invertible");
            let mut action = GenAction {
                left: vec![],
                right: vec![],
            };
            for &a in &touched {
                let model = &ctx.arrows[a];
                if model.head == v {
                    action.left.push((a, to_index_mat(&model.head_field, &g)));
                }
                if model.tail == v {
                    let lifted = ctx.lift_tensor(a, &ginv);
                    action
                        .right
                        .push((a, to_index_mat(&model.head_field, &lifted)));
                }
            }
            actions.push(action);
        }
    }
    // entry offset of each arrow in the flat key
    let mut offsets = vec![0usize];
    for &c in &entry_counts {
        offsets.push(offsets.last().unwrap() + c);
    }
    let apply = |key: &[u16]| -> Vec<Vec<u16>> {
        actions
            .iter()
            .map(|action| {
                let mut out = key.to_vec();
                for &(a, ref g) in &action.left {
                    let (r, c) = shapes[a];
                    let table = ctx.arrows[a].head_table();
                    let block = &out[offsets[a]..offsets[a] + entry_counts[a]];
                    let prod = index_mat_mul(table, g, (r, r), block, (r, c));
                    out[offsets[a]..offsets[a] + entry_counts[a]].copy_from_slice(&prod);
                }
                for &(a, ref lifted) in &action.right {
                    let (r, c) = shapes[a];
                    let table = ctx.arrows[a].head_table();
                    let block = out[offsets[a]..offsets[a] + entry_counts[a]].to_vec();
                    let prod = index_mat_mul(table, &block, (r, c), lifted, (c, c));
                    out[offsets[a]..offsets[a] + entry_counts[a]].copy_from_slice(&prod);
                }
                out
            })
            .collect()
    };

    let mut lookup: HashMap<Vec<u16>, u32> = HashMap::new();
    let mut classes: Vec<RepClass> = vec![];
    let mut key = vec![0u16; width];
    loop {
        if !lookup.contains_key(&key) {
            // new orbit: the seed is lexicographically least by construction
            let class_idx = classes.len() as u32;
            classes.push(RepClass {
                rep: decode(ctx, dims, &key),
                label: label_of(dims, &key, &entry_counts),
            });
            let mut queue = VecDeque::from([key.clone()]);
            lookup.insert(key.clone(), class_idx);
            while let Some(cur) = queue.pop_front() {
                for img in apply(&cur) {
                    if !lookup.contains_key(&img) {
                        lookup.insert(img.clone(), class_idx);
                        queue.push_back(img);
                    }
                }
            }
        }
        // lexicographic successor: last position fastest
        let mut i = width;
        loop {
            if i == 0 {
                return Ok(DimClasses {
                    dims: dims.to_vec(),
                    classes,
                    lookup,
                });
            }
            i -= 1;
            key[i] += 1;
            if key[i] < bases[i] {
                break;
            }
            key[i] = 0;
        }
    }
}

/// The class of an arbitrary representation, resolved through the full
/// enumeration at its dimension vector.
pub fn class_of(ctx: &RepCtx, rep: &Representation, cap: u64) -> Result<(Arc<DimClasses>, usize)> {
    let classes = enumerate_reps(ctx, &rep.dims, cap)?;
    let idx = classes.class_index(ctx, rep);
    Ok((classes, idx))
}

/// Indices of the indecomposable classes at a dimension vector, decided by
/// the Krull-Schmidt sieve: a class is decomposable exactly when it is the
/// direct sum of two nonzero classes of smaller dimension vectors.
pub fn enumerate_indecomposables(ctx: &RepCtx, dims: &[u64], cap: u64) -> Result<Vec<usize>> {
    let all = enumerate_reps(ctx, dims, cap)?;
    if dims.iter().all(|&d| d == 0) {
        return Ok(vec![]);
    }
    let mut decomposable = vec![false; all.len()];
    let mut beta = vec![0u64; dims.len()];
    loop {
        // advance beta through all componentwise sub-vectors
        let mut i = 0;
        loop {
            if i == dims.len() {
                return Ok((0..all.len()).filter(|&i| !decomposable[i]).collect());
            }
            beta[i] += 1;
            if beta[i] <= dims[i] {
                break;
            }
            beta[i] = 0;
            i += 1;
        }
        if beta.iter().all(|&b| b == 0) || beta == dims {
            continue;
        }
        let gamma: Vec<u64> = dims.iter().zip(&beta).map(|(d, b)| d - b).collect();
        if gamma.iter().all(|&g| g == 0) {
            continue;
        }
        let left = enumerate_reps(ctx, &beta, cap)?;
        let right = enumerate_reps(ctx, &gamma, cap)?;
        for lc in &left.classes {
            for rc in &right.classes {
                let sum = direct_sum(ctx, &lc.rep, &rc.rep);
                decomposable[all.class_index(ctx, &sum)] = true;
            }
        }
    }
}

/// All subspaces of K^n as column-basis matrices (n × r), enumerated through
/// reduced row echelon forms.
pub fn subspaces(gf: &Gf, n: usize) -> Vec<Mat> {
    let mut out = vec![];
    for r in 0..=n {
        for pivots in combinations(n, r) {
            // free positions: (row i, col j) with j > pivots[i], j not a pivot
            let mut free = vec![];
            for (i, &p) in pivots.iter().enumerate() {
                for j in p + 1..n {
                    if !pivots.contains(&j) {
                        free.push((i, j));
                    }
                }
            }
            let order = gf.order();
            let mut digits = vec![0u128; free.len()];
            loop {
                let mut rows = Mat::zero(gf, r, n);
                for (i, &p) in pivots.iter().enumerate() {
                    *rows.at_mut(i, p) = gf.one();
                }
                for (&(i, j), &d) in free.iter().zip(&digits) {
                    *rows.at_mut(i, j) = gf.elem_of(d);
                }
                out.push(rows.transpose(gf));
                let mut k = 0;
                loop {
                    if k == digits.len() {
                        digits.clear();
                        break;
                    }
                    digits[k] += 1;
                    if digits[k] < order {
                        break;
                    }
                    digits[k] = 0;
                    k += 1;
                }
                if digits.is_empty() {
                    break;
                }
            }
        }
    }
    out
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - left {
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut vec![], &mut out);
    out
}

/// A submodule of a representation: the subspace tuple, the induced
/// sub-representation, and the induced quotient.
pub struct SubmoduleData {
    pub bases: Vec<Mat>,
    pub sub: Representation,
    pub quotient: Representation,
}

/// All subrepresentations: tuples of vertex subspaces closed under the arrow
/// maps, each with its induced sub and quotient representations.
pub fn submodules(ctx: &RepCtx, c: &Representation, cap: u64) -> Result<Vec<SubmoduleData>> {
    let per_vertex: Vec<Vec<Mat>> = (0..ctx.vertex_count())
        .map(|v| subspaces(&ctx.vertex_fields[v], c.dims[v] as usize))
        .collect();
    let mut total: u128 = 1;
    for s in &per_vertex {
        total = total.saturating_mul(s.len() as u128);
    }
    if total > cap as u128 {
        return Err(Error::SizeLimitExceeded { needed: total, cap });
    }
    let mut out = vec![];
    let mut choice = vec![0usize; ctx.vertex_count()];
    loop {
        let bases: Vec<&Mat> = choice
            .iter()
            .enumerate()
            .map(|(v, &i)| &per_vertex[v][i])
            .collect();
        if let Some(data) = try_submodule(ctx, c, &bases) {
            out.push(data);
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < per_vertex[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn try_submodule(ctx: &RepCtx, c: &Representation, bases: &[&Mat]) -> Option<SubmoduleData> {
    // closure check and induced sub-matrices
    let mut sub_mats = vec![];
    for (idx, model) in ctx.arrows.iter().enumerate() {
        let gf = &model.head_field;
        let u_h = bases[model.head];
        let image = c.matrices[idx].mul(gf, &ctx.lift_tensor(idx, bases[model.tail]));
        // image columns must lie in col(u_h)
        let rank_u = u_h.rank(gf);
        if u_h.hcat(gf, &image).rank(gf) != rank_u {
            return None;
        }
        // solve u_h · x = image column by column
        let mut x = Mat::zero(gf, u_h.cols, image.cols);
        for j in 0..image.cols {
            let col = image.col(j);
            let sol = u_h.solve(gf, &col)?;
            for (i, v) in sol.into_iter().enumerate() {
                *x.at_mut(i, j) = v;
            }
        }
        sub_mats.push(x);
    }
    let sub = Representation {
        dims: bases.iter().map(|b| b.cols as u64).collect(),
        matrices: sub_mats,
    };
    // quotient: complete each basis to a full frame and project
    let mut frames = vec![];
    let mut inverses = vec![];
    for (v, b) in bases.iter().enumerate() {
        let gf = &ctx.vertex_fields[v];
        let n = c.dims[v] as usize;
        let mut frame = (*b).clone();
        for j in 0..n {
            if frame.cols == n {
                break;
            }
            let mut unit = Mat::zero(gf, n, 1);
            *unit.at_mut(j, 0) = gf.one();
            let cand = frame.hcat(gf, &unit);
            if cand.rank(gf) == cand.cols {
                frame = cand;
            }
        }
        assert_eq!(frame.cols, n, "basis completion filled the space");
        let inv = if n > 0 {
            frame.inverse(gf).expect("frame is invertible")
        } else {
            Mat::zero(gf, 0, 0)
        };
        frames.push(frame);
        inverses.push(inv);
    }
    let mut quot_mats = vec![];
    for (idx, model) in ctx.arrows.iter().enumerate() {
        let gf = &model.head_field;
        let r_t = bases[model.tail].cols;
        let n_t = c.dims[model.tail] as usize;
        let r_h = bases[model.head].cols;
        let n_h = c.dims[model.head] as usize;
        // complement columns of the tail frame
        let mut comp_t = Mat::zero(&ctx.vertex_fields[model.tail], n_t, n_t - r_t);
        for j in 0..n_t - r_t {
            for i in 0..n_t {
                *comp_t.at_mut(i, j) = frames[model.tail].at(i, r_t + j).clone();
            }
        }
        let image = c.matrices[idx].mul(gf, &ctx.lift_tensor(idx, &comp_t));
        let coords = inverses[model.head].mul(gf, &image);
        let mut q = Mat::zero(gf, n_h - r_h, image.cols);
        for i in 0..n_h - r_h {
            for j in 0..image.cols {
                *q.at_mut(i, j) = coords.at(r_h + i, j).clone();
            }
        }
        quot_mats.push(q);
    }
    let quotient = Representation {
        dims: bases
            .iter()
            .enumerate()
            .map(|(v, b)| c.dims[v] - b.cols as u64)
            .collect(),
        matrices: quot_mats,
    };
    Some(SubmoduleData {
        bases: bases.iter().map(|b| (*b).clone()).collect(),
        sub,
        quotient,
    })
}

/// The Hall number g_{AB}^C: submodules X ⊆ C with X ≅ B and C/X ≅ A.
pub fn hall_number(
    ctx: &RepCtx,
    a: &Representation,
    b: &Representation,
    c: &Representation,
    cap: u64,
) -> Result<u64> {
    let sum_ok = a
        .dims
        .iter()
        .zip(&b.dims)
        .zip(&c.dims)
        .all(|((x, y), z)| x + y == *z);
    if !sum_ok {
        return Ok(0);
    }
    let (b_classes, b_idx) = class_of(ctx, b, cap)?;
    let (a_classes, a_idx) = class_of(ctx, a, cap)?;
    let mut count = 0;
    for data in submodules(ctx, c, cap)? {
        if data.sub.dims != b.dims {
            continue;
        }
        if b_classes.class_index(ctx, &data.sub) == b_idx
            && a_classes.class_index(ctx, &data.quotient) == a_idx
        {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rep::{is_indecomposable, is_isomorphic};
    use crate::species::Base;

    const CAP: u64 = 1_000_000;

    fn ctx_of(shape: crate::quiver::AbsValuedQuiver) -> RepCtx {
        RepCtx::new(&catalog::untwisted(Base::new(2, 1), shape)).unwrap()
    }

    #[test]
    fn subspace_counts_over_f2() {
        let f2 = Gf::make(2, 1).unwrap();
        assert_eq!(subspaces(&f2, 2).len(), 5);
        assert_eq!(subspaces(&f2, 3).len(), 16);
        let f4 = Gf::make(2, 2).unwrap();
        assert_eq!(subspaces(&f4, 2).len(), 7);
    }

    #[test]
    fn a2_classes_at_one_one() {
        let ctx = ctx_of(catalog::a2());
        let classes = enumerate_reps(&ctx, &[1, 1], CAP).unwrap();
        assert_eq!(classes.len(), 2);
        let ind = enumerate_indecomposables(&ctx, &[1, 1], CAP).unwrap();
        assert_eq!(ind.len(), 1);
        // the indecomposable one is the class with nonzero matrix
        let rep = &classes.classes[ind[0]].rep;
        assert!(rep.matrices[0].data.iter().any(|e| e.coeffs[0] != 0));
        assert!(is_indecomposable(&ctx, rep, CAP).unwrap());
    }

    #[test]
    fn kronecker_classes_at_one_one() {
        let ctx = ctx_of(catalog::kronecker());
        let classes = enumerate_reps(&ctx, &[1, 1], CAP).unwrap();
        assert_eq!(classes.len(), 4);
        let ind = enumerate_indecomposables(&ctx, &[1, 1], CAP).unwrap();
        assert_eq!(ind.len(), 3);
    }

    #[test]
    fn simple_dimension_has_one_class() {
        for shape in [catalog::a2(), catalog::b2_shape(), catalog::kronecker()] {
            let ctx = ctx_of(shape);
            let classes = enumerate_reps(&ctx, &[1, 0], CAP).unwrap();
            assert_eq!(classes.len(), 1);
            let ind = enumerate_indecomposables(&ctx, &[1, 0], CAP).unwrap();
            assert_eq!(ind.len(), 1);
        }
    }

    #[test]
    fn classes_partition_respects_isomorphism() {
        // two representations land in the same class exactly when isomorphic
        let ctx = ctx_of(catalog::a2());
        let classes = enumerate_reps(&ctx, &[2, 1], CAP).unwrap();
        for (i, ci) in classes.classes.iter().enumerate() {
            for (j, cj) in classes.classes.iter().enumerate() {
                assert_eq!(is_isomorphic(&ctx, &ci.rep, &cj.rep, CAP).unwrap(), i == j);
            }
        }
    }

    #[test]
    fn canonical_label_is_least_in_orbit() {
        let ctx = ctx_of(catalog::a2());
        let classes = enumerate_reps(&ctx, &[1, 1], CAP).unwrap();
        // labels are dims plus entry indices; the zero class comes first
        assert_eq!(classes.classes[0].label, "1,1|0");
        assert_eq!(classes.classes[1].label, "1,1|1");
    }

    #[test]
    fn submodules_of_projective() {
        let ctx = ctx_of(catalog::a2());
        let classes = enumerate_reps(&ctx, &[1, 1], CAP).unwrap();
        let proj = classes.classes[1].rep.clone();
        let subs = submodules(&ctx, &proj, CAP).unwrap();
        // 0, the socle (0, K), and the whole thing
        assert_eq!(subs.len(), 3);
        let dims: Vec<Vec<u64>> = subs.iter().map(|s| s.sub.dims.clone()).collect();
        assert!(dims.contains(&vec![0, 0]));
        assert!(dims.contains(&vec![0, 1]));
        assert!(dims.contains(&vec![1, 1]));
        assert!(!dims.contains(&vec![1, 0]));
    }

    #[test]
    fn submodules_of_double_simple() {
        let ctx = ctx_of(catalog::a2());
        let s1 = Representation::simple(&ctx, 0);
        let double = direct_sum(&ctx, &s1, &s1);
        let subs = submodules(&ctx, &double, CAP).unwrap();
        assert_eq!(subs.len(), 5);
    }

    #[test]
    fn zero_representation_has_one_submodule() {
        let ctx = ctx_of(catalog::a2());
        let zero = Representation::zero(&ctx, vec![0, 0]);
        assert_eq!(submodules(&ctx, &zero, CAP).unwrap().len(), 1);
    }

    #[test]
    fn hall_numbers_on_a2() {
        let ctx = ctx_of(catalog::a2());
        let s1 = Representation::simple(&ctx, 0);
        let s2 = Representation::simple(&ctx, 1);
        let classes = enumerate_reps(&ctx, &[1, 1], CAP).unwrap();
        let proj = classes.classes[1].rep.clone();
        assert_eq!(hall_number(&ctx, &s1, &s2, &proj, CAP).unwrap(), 1);
        assert_eq!(hall_number(&ctx, &s2, &s1, &proj, CAP).unwrap(), 0);
        let double = direct_sum(&ctx, &s1, &s1);
        assert_eq!(hall_number(&ctx, &s1, &s1, &double, CAP).unwrap(), 3);
    }

    #[test]
    fn hall_number_zero_on_dimension_mismatch() {
        let ctx = ctx_of(catalog::a2());
        let s1 = Representation::simple(&ctx, 0);
        let s2 = Representation::simple(&ctx, 1);
        assert_eq!(
            hall_number(&ctx, &s1, &s1, &direct_sum(&ctx, &s1, &s2), CAP).unwrap(),
            0
        );
    }

    #[test]
    fn split_extension_always_counts() {
        let ctx = ctx_of(catalog::a2());
        let s1 = Representation::simple(&ctx, 0);
        let s2 = Representation::simple(&ctx, 1);
        let split = direct_sum(&ctx, &s1, &s2);
        assert!(hall_number(&ctx, &s1, &s2, &split, CAP).unwrap() >= 1);
    }

    #[test]
    fn kronecker_regular_census() {
        // multiples of the stable element (1,1) carry one indecomposable per
        // closed point of the projective line of the right degree: over
        // GF(2) that is 3 + 1 = 4 classes at (2,2) and 3 + 2 = 5 at (3,3)
        let ctx = ctx_of(catalog::kronecker());
        assert_eq!(
            enumerate_indecomposables(&ctx, &[2, 2], 1 << 20)
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            enumerate_indecomposables(&ctx, &[3, 3], 1 << 20)
                .unwrap()
                .len(),
            5
        );
    }

    #[test]
    fn cap_guard_fires() {
        let ctx = ctx_of(catalog::kronecker());
        assert!(matches!(
            enumerate_reps(&ctx, &[4, 4], 100),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
