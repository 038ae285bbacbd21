//! Finite-dimensional representations of finite-field species: morphism
//! spaces, endomorphism rings, indecomposability and isomorphism testing,
//! exhaustive enumeration, submodule lattices, and Hall numbers.
//!
//! A representation assigns to each vertex i a K_i-vector space of dimension
//! n_i and to each arrow ρ a K_h-linear map M_ρ ⊗_{K_t} V_t → V_h, stored as
//! a matrix on the canonical tensor basis (bimodule generator powers major,
//! vector basis minor). All solving happens over GF(p) after flattening the
//! vertex field structures through the fixed embeddings.

mod enumerate;
mod twist;

pub use enumerate::{
    class_of, enumerate_indecomposables, enumerate_reps, hall_number, submodules, DimClasses,
    RepClass, SubmoduleData,
};
pub use twist::{
    decompose, fold_dim_vector, invariant_decompose, is_invariant, sigma_twist, TwistOrbit,
};

use crate::error::{Error, Result};
use crate::forms::DimVec;
use crate::gf::{Embedding, FieldElem, Gf, RelView, SmallField};
use crate::linalg::Mat;
use crate::species::FqSpecies;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// One summand of an arrow bimodule, with everything needed to move between
/// the summand field and the vertex fields.
pub(crate) struct SummandModel {
    pub field: Gf,
    /// Left K_h-basis size: m_s / d_h.
    pub k: usize,
    /// Coordinates over the head field along the twisted left action.
    pub head_view: RelView,
    pub tail_embed: Embedding,
    /// p-Frobenius exponent of the right twist: e · rtwist.
    pub rtwist_p: usize,
}

pub(crate) struct ArrowModel {
    pub tail: usize,
    pub head: usize,
    pub head_field: Gf,
    pub tail_field: Gf,
    /// Total tensor-basis size per unit of tail dimension: m_ρ / d_h.
    pub k: usize,
    pub summands: Vec<SummandModel>,
    head_table: OnceLock<SmallField>,
}

impl ArrowModel {
    pub fn head_table(&self) -> &SmallField {
        self.head_table
            .get_or_init(|| SmallField::build(&self.head_field))
    }
}

/// Context for representation computations over a fixed species: vertex
/// fields, arrow models, and per-dimension enumeration caches.
pub struct RepCtx {
    pub species: FqSpecies,
    pub(crate) vertex_fields: Vec<Gf>,
    pub(crate) arrows: Vec<ArrowModel>,
    pub(crate) classes_cache: Mutex<HashMap<Vec<u64>, Arc<DimClasses>>>,
}

impl RepCtx {
    pub fn new(species: &FqSpecies) -> Result<RepCtx> {
        species.validate()?;
        let base = species.base;
        let vertex_fields: Vec<Gf> = species
            .shape
            .quiver
            .vertices
            .iter()
            .map(|v| species.vertex_field(v))
            .collect::<Result<_>>()?;
        let mut arrows = vec![];
        for (a, summands) in species.shape.quiver.arrows.iter().zip(&species.bimodules) {
            let tail = species.shape.quiver.vertex_index(&a.tail).unwrap();
            let head = species.shape.quiver.vertex_index(&a.head).unwrap();
            let head_field = vertex_fields[head].clone();
            let tail_field = vertex_fields[tail].clone();
            let dh = species.shape.d_of(&a.head);
            let mut models = vec![];
            for s in summands {
                let field = species.summand_field(s)?;
                let head_view = RelView::new(&field, &head_field, base.e * s.ltwist as usize)?;
                let tail_embed = Embedding::new(&tail_field, &field)?;
                models.push(SummandModel {
                    field,
                    k: (s.m / dh) as usize,
                    head_view,
                    tail_embed,
                    rtwist_p: base.e * s.rtwist as usize,
                });
            }
            arrows.push(ArrowModel {
                tail,
                head,
                head_field,
                tail_field,
                k: (species.shape.m_of(&a.id) / species.shape.d_of(&a.head)) as usize,
                summands: models,
                head_table: OnceLock::new(),
            });
        }
        Ok(RepCtx {
            species: species.clone(),
            vertex_fields,
            arrows,
            classes_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_fields.len()
    }

    /// Expected matrix shape of an arrow at the given dimensions.
    pub(crate) fn matrix_shape(&self, arrow: usize, dims: &[u64]) -> (usize, usize) {
        let a = &self.arrows[arrow];
        (dims[a.head] as usize, a.k * dims[a.tail] as usize)
    }

    /// The image of a tail-field matrix under id_M ⊗ (−) on the canonical
    /// tensor bases: block-diagonal over summands, each block assembled from
    /// right-multiplication structure maps.
    pub(crate) fn lift_tensor(&self, arrow: usize, p: &Mat) -> Mat {
        let a = &self.arrows[arrow];
        let hf = &a.head_field;
        let (rows_in, cols_in) = (p.rows, p.cols);
        let mut out = Mat::zero(hf, a.k * rows_in, a.k * cols_in);
        let mut row_off = 0;
        let mut col_off = 0;
        for s in &a.summands {
            // structure coordinates of G^t · (twisted image of λ)
            let gen = s.field.gen();
            for (coord, entry) in p.data.iter().enumerate() {
                let (gi, gj) = (coord / cols_in, coord % cols_in);
                if a.tail_field.is_zero(entry) {
                    continue;
                }
                let lam = s.field.frobenius(&s.tail_embed.apply(entry), s.rtwist_p);
                let mut gpow = s.field.one();
                for t in 0..s.k {
                    let coords = s.head_view.to_coords(&s.field.mul(&gpow, &lam));
                    for (tp, c) in coords.iter().enumerate() {
                        let r = row_off + tp * rows_in + gi;
                        let cidx = col_off + t * cols_in + gj;
                        *out.at_mut(r, cidx) = hf.add(out.at(r, cidx), c);
                    }
                    gpow = s.field.mul(&gpow, &gen);
                }
            }
            row_off += s.k * rows_in;
            col_off += s.k * cols_in;
        }
        out
    }
}

/// A representation of a fixed species: dimensions per vertex and one matrix
/// per arrow over the head vertex field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    pub dims: Vec<u64>,
    pub matrices: Vec<Mat>,
}

impl Representation {
    /// The zero representation at the given dimension vector.
    pub fn zero(ctx: &RepCtx, dims: Vec<u64>) -> Representation {
        let matrices = (0..ctx.arrows.len())
            .map(|a| {
                let (r, c) = ctx.matrix_shape(a, &dims);
                Mat::zero(&ctx.arrows[a].head_field, r, c)
            })
            .collect();
        Representation { dims, matrices }
    }

    /// The simple representation at a vertex.
    pub fn simple(ctx: &RepCtx, vertex: usize) -> Representation {
        let mut dims = vec![0; ctx.vertex_count()];
        dims[vertex] = 1;
        Representation::zero(ctx, dims)
    }

    pub fn is_zero_rep(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn dim_vector(&self) -> DimVec {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    fn check_shapes(&self, ctx: &RepCtx) -> Result<()> {
        if self.dims.len() != ctx.vertex_count() {
            return Err(Error::SpeciesMismatch(
                "dimension vector length differs from vertex count".into(),
            ));
        }
        for (i, m) in self.matrices.iter().enumerate() {
            let (r, c) = ctx.matrix_shape(i, &self.dims);
            if m.rows != r || m.cols != c {
                return Err(Error::SpeciesMismatch(format!(
                    "arrow {i}: matrix is {}×{}, canonical shape is {r}×{c}",
                    m.rows, m.cols
                )));
            }
        }
        Ok(())
    }
}

/// Direct sum: dimensions add and the arrow maps act blockwise. On the
/// canonical tensor basis the tail blocks interleave inside each bimodule
/// basis slot.
pub fn direct_sum(ctx: &RepCtx, a: &Representation, b: &Representation) -> Representation {
    let dims: Vec<u64> = a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect();
    let matrices = (0..ctx.arrows.len())
        .map(|idx| {
            let model = &ctx.arrows[idx];
            let hf = &model.head_field;
            let (rows, _) = ctx.matrix_shape(idx, &dims);
            let (na_t, nb_t) = (a.dims[model.tail] as usize, b.dims[model.tail] as usize);
            let (na_h, _nb_h) = (a.dims[model.head] as usize, b.dims[model.head] as usize);
            let n_t = na_t + nb_t;
            let mut out = Mat::zero(hf, rows, model.k * n_t);
            for t in 0..model.k {
                for (src, row_base, col_dims, col_shift) in
                    [(a, 0usize, na_t, 0usize), (b, na_h, nb_t, na_t)]
                {
                    let m = &src.matrices[idx];
                    for r in 0..src.dims[model.head] as usize {
                        for c in 0..col_dims {
                            let val = m.at(r, t * col_dims + c).clone();
                            *out.at_mut(row_base + r, t * n_t + col_shift + c) = val;
                        }
                    }
                }
            }
            out
        })
        .collect();
    Representation { dims, matrices }
}

/// A morphism of representations: one K_i-matrix per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    pub maps: Vec<Mat>,
}

impl Morphism {
    pub fn compose(&self, ctx: &RepCtx, inner: &Morphism) -> Morphism {
        Morphism {
            maps: self
                .maps
                .iter()
                .zip(&inner.maps)
                .zip(&ctx.vertex_fields)
                .map(|((outer, inner), gf)| outer.mul(gf, inner))
                .collect(),
        }
    }

    pub fn is_zero(&self, ctx: &RepCtx) -> bool {
        self.maps
            .iter()
            .zip(&ctx.vertex_fields)
            .all(|(m, gf)| m.data.iter().all(|e| gf.is_zero(e)))
    }

    pub fn is_identity(&self, ctx: &RepCtx) -> bool {
        self.maps
            .iter()
            .zip(&ctx.vertex_fields)
            .all(|(m, gf)| m.rows == m.cols && *m == Mat::identity(gf, m.rows))
    }

    pub fn is_invertible(&self, ctx: &RepCtx) -> bool {
        self.maps
            .iter()
            .zip(&ctx.vertex_fields)
            .all(|(m, gf)| m.is_invertible(gf))
    }
}

/// The space of morphisms V → W as a GF(p)-basis of vertex-matrix tuples;
/// the span is a GF(q)-vector space of dimension `basis_p.len() / e`.
pub struct HomSpace {
    pub basis_p: Vec<Morphism>,
    pub e: usize,
}

impl HomSpace {
    pub fn dim_q(&self) -> usize {
        debug_assert!(self.basis_p.len().is_multiple_of(self.e));
        self.basis_p.len() / self.e
    }

    /// Number of elements in the span.
    pub fn element_count(&self, p: u64) -> u128 {
        (p as u128).saturating_pow(self.basis_p.len() as u32)
    }
}

/// Solve the commuting-square conditions φ_h ∘ f_ρ = g_ρ ∘ (id ⊗ φ_t) for
/// all arrows, over GF(p).
pub fn hom_space(ctx: &RepCtx, v: &Representation, w: &Representation) -> Result<HomSpace> {
    v.check_shapes(ctx)?;
    w.check_shapes(ctx)?;
    let fp = Gf::make(ctx.species.base.p, 1)?;
    // unknown layout: per vertex, per (row, col) entry, per GF(p) coordinate
    let mut offsets = vec![0usize];
    for (i, gf) in ctx.vertex_fields.iter().enumerate() {
        let count = (w.dims[i] * v.dims[i]) as usize * gf.degree();
        offsets.push(offsets[i] + count);
    }
    let total = *offsets.last().unwrap();
    if total == 0 {
        return Ok(HomSpace {
            basis_p: vec![],
            e: ctx.species.base.e,
        });
    }
    let unflatten = |coords: &[FieldElem]| -> Morphism {
        let maps = ctx
            .vertex_fields
            .iter()
            .enumerate()
            .map(|(i, gf)| {
                let deg = gf.degree();
                let (rows, cols) = (w.dims[i] as usize, v.dims[i] as usize);
                let mut m = Mat::zero(gf, rows, cols);
                for r in 0..rows {
                    for c in 0..cols {
                        let base = offsets[i] + (r * cols + c) * deg;
                        let digits: Vec<u64> =
                            (0..deg).map(|k| coords[base + k].coeffs[0]).collect();
                        *m.at_mut(r, c) = gf.elem(&digits);
                    }
                }
                m
            })
            .collect();
        Morphism { maps }
    };
    // residual of the commuting squares, flattened over GF(p)
    let residual = |phi: &Morphism| -> Vec<FieldElem> {
        let mut out = vec![];
        for (idx, model) in ctx.arrows.iter().enumerate() {
            let hf = &model.head_field;
            let lhs = phi.maps[model.head].mul(hf, &v.matrices[idx]);
            let rhs = w.matrices[idx].mul(hf, &ctx.lift_tensor(idx, &phi.maps[model.tail]));
            let diff = lhs.sub(hf, &rhs);
            for e in &diff.data {
                for &c in &e.coeffs {
                    out.push(fp.elem(&[c]));
                }
            }
        }
        out
    };
    let rows = {
        let zero = unflatten(&vec![fp.zero(); total]);
        residual(&zero).len()
    };
    let mut system = Mat::zero(&fp, rows, total);
    for u in 0..total {
        let mut coords = vec![fp.zero(); total];
        coords[u] = fp.one();
        let phi = unflatten(&coords);
        for (r, val) in residual(&phi).into_iter().enumerate() {
            *system.at_mut(r, u) = val;
        }
    }
    let null = system.null_space(&fp);
    Ok(HomSpace {
        basis_p: null.iter().map(|v| unflatten(v)).collect(),
        e: ctx.species.base.e,
    })
}

/// Iterate over every element of a hom space (all GF(p)-combinations of the
/// basis), with a cap.
pub fn hom_elements(
    ctx: &RepCtx,
    v: &Representation,
    w: &Representation,
    cap: u64,
) -> Result<Vec<Morphism>> {
    let space = hom_space(ctx, v, w)?;
    let p = ctx.species.base.p;
    let count = space.element_count(p);
    if count > cap as u128 {
        return Err(Error::SizeLimitExceeded { needed: count, cap });
    }
    let fp = Gf::make(p, 1)?;
    let n = space.basis_p.len();
    let mut out = vec![];
    let mut digits = vec![0u64; n];
    loop {
        // assemble Σ digit_i · basis_i
        let mut maps: Vec<Mat> = ctx
            .vertex_fields
            .iter()
            .enumerate()
            .map(|(i, gf)| Mat::zero(gf, w.dims[i] as usize, v.dims[i] as usize))
            .collect();
        for (digit, basis) in digits.iter().zip(&space.basis_p) {
            if *digit == 0 {
                continue;
            }
            for (i, gf) in ctx.vertex_fields.iter().enumerate() {
                let scalar = gf.from_int(*digit);
                for (slot, add) in maps[i].data.iter_mut().zip(&basis.maps[i].data) {
                    *slot = gf.add(slot, &gf.mul(&scalar, add));
                }
            }
        }
        out.push(Morphism { maps });
        let mut i = 0;
        loop {
            if i == n {
                let _ = fp;
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// A representation is indecomposable when its endomorphism ring contains no
/// idempotent besides 0 and the identity; checked by exhausting End.
pub fn is_indecomposable(ctx: &RepCtx, v: &Representation, cap: u64) -> Result<bool> {
    if v.is_zero_rep() {
        return Ok(false);
    }
    for e in hom_elements(ctx, v, v, cap)? {
        if e.is_zero(ctx) || e.is_identity(ctx) {
            continue;
        }
        if e.compose(ctx, &e) == e {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Order of the automorphism group: invertible elements of End(V).
pub fn aut_order(ctx: &RepCtx, v: &Representation, cap: u64) -> Result<u64> {
    Ok(hom_elements(ctx, v, v, cap)?
        .iter()
        .filter(|e| e.is_invertible(ctx))
        .count() as u64)
}

/// Exhaustive isomorphism test: some morphism V → W is invertible at every
/// vertex.
pub fn is_isomorphic(
    ctx: &RepCtx,
    v: &Representation,
    w: &Representation,
    cap: u64,
) -> Result<bool> {
    if v.dims != w.dims {
        return Ok(false);
    }
    Ok(hom_elements(ctx, v, w, cap)?
        .iter()
        .any(|m| m.is_invertible(ctx)))
}
