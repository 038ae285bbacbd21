//! The twisted Ringel-Hall algebra of a finite-field species: a free module
//! on isomorphism-class labels over `Z[v]/(v² − q)` with rational coefficients,
//! with the v-twisted convolution product
//!
//!   `[A][B] = v^{⟨dim A, dim B⟩} Σ_C g_AB^C [C]`,
//!
//! Green's comultiplication and bilinear form, quantum binomials, Serre
//! relations, and the bialgebra compatibility conditions.

mod qbinom;
mod scalar;

pub use qbinom::{quantum_binomial, quantum_binomial_eval, quantum_int, Laurent};
pub use scalar::HallScalar;

use crate::error::{Error, Result};
use crate::forms::{cartan_matrix, euler_form, symmetric_form};
use crate::rational::Rational;
use crate::rep::{aut_order, class_of, enumerate_reps, submodules, RepCtx, Representation};
use crate::species::FqSpecies;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

/// A finite formal sum of iso-class labels with scalars in `Z[v]/(v² − q)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HallElement {
    pub terms: BTreeMap<String, HallScalar>,
}

impl HallElement {
    pub fn zero() -> HallElement {
        HallElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn single(label: String, coeff: HallScalar) -> HallElement {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(label, coeff);
        }
        HallElement { terms }
    }

    pub fn add(&self, other: &HallElement) -> HallElement {
        let mut terms = self.terms.clone();
        for (l, c) in &other.terms {
            match terms.get_mut(l) {
                Some(slot) => {
                    *slot = slot.add(c);
                    if slot.is_zero() {
                        terms.remove(l);
                    }
                }
                None => {
                    terms.insert(l.clone(), *c);
                }
            }
        }
        HallElement { terms }
    }

    pub fn scale(&self, s: &HallScalar) -> HallElement {
        if s.is_zero() {
            return HallElement::zero();
        }
        HallElement {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c.mul(s)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &HallElement) -> HallElement {
        let minus: HallElement = HallElement {
            terms: other
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c.neg()))
                .collect(),
        };
        self.add(&minus)
    }
}

/// A finite formal sum in the twisted tensor square.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HallTensor {
    pub terms: BTreeMap<(String, String), HallScalar>,
}

impl HallTensor {
    pub fn zero() -> HallTensor {
        HallTensor {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, key: (String, String), coeff: HallScalar) {
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot = slot.add(&coeff);
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                if !coeff.is_zero() {
                    self.terms.insert(key, coeff);
                }
            }
        }
    }

    pub fn add(&self, other: &HallTensor) -> HallTensor {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), *c);
        }
        out
    }
}

/// Dimension vector encoded in a canonical class label.
pub fn dims_of_label(label: &str) -> Vec<u64> {
    label
        .split('|')
        .next()
        .unwrap()
        .split(',')
        .map(|x| x.parse().expect("malformed label"))
        .collect()
}

/// Structure constants for one pair of dimension vectors: counts of
/// (quotient class, sub class, ambient class) triples.
struct StructureTable {
    counts: HashMap<(u32, u32, u32), u64>,
}

type StructureCache = Mutex<HashMap<(Vec<u64>, Vec<u64>), Arc<StructureTable>>>;

/// The Hall algebra of a fixed species, with memoized enumeration, Aut
/// orders, and structure constants.
pub struct HallCtx {
    pub rep: RepCtx,
    pub q: u64,
    structure_cache: StructureCache,
    aut_cache: Mutex<HashMap<String, u64>>,
}

impl HallCtx {
    pub fn new(species: &FqSpecies) -> Result<HallCtx> {
        let rep = RepCtx::new(species)?;
        let q = species.base.q();
        Ok(HallCtx {
            rep,
            q,
            structure_cache: Mutex::new(HashMap::new()),
            aut_cache: Mutex::new(HashMap::new()),
        })
    }

    fn scalar_one(&self) -> HallScalar {
        HallScalar::one(self.q)
    }

    /// The identity: the class of the zero representation.
    pub fn one(&self, cap: u64) -> Result<HallElement> {
        let zero = Representation::zero(&self.rep, vec![0; self.rep.vertex_count()]);
        let (classes, idx) = class_of(&self.rep, &zero, cap)?;
        Ok(HallElement::single(
            classes.classes[idx].label.clone(),
            self.scalar_one(),
        ))
    }

    /// The class of the simple at a vertex index.
    pub fn simple(&self, vertex: usize, cap: u64) -> Result<HallElement> {
        let s = Representation::simple(&self.rep, vertex);
        let (classes, idx) = class_of(&self.rep, &s, cap)?;
        Ok(HallElement::single(
            classes.classes[idx].label.clone(),
            self.scalar_one(),
        ))
    }

    /// Recover the canonical representative from a label.
    pub fn rep_of_label(&self, label: &str) -> Result<Representation> {
        let dims = dims_of_label(label);
        if dims.len() != self.rep.vertex_count() {
            return Err(Error::IndexMismatch("label has wrong vertex count".into()));
        }
        let mut rep = Representation::zero(&self.rep, dims);
        let blocks: Vec<&str> = label.split('|').skip(1).collect();
        if blocks.len() != rep.matrices.len() {
            return Err(Error::IndexMismatch("label has wrong arrow count".into()));
        }
        for (idx, block) in blocks.iter().enumerate() {
            let entries: Vec<u128> = if block.is_empty() {
                vec![]
            } else {
                block
                    .split(',')
                    .map(|x| {
                        x.parse()
                            .map_err(|_| Error::IndexMismatch("bad label".into()))
                    })
                    .collect::<Result<_>>()?
            };
            if entries.len() != rep.matrices[idx].data.len() {
                return Err(Error::IndexMismatch("label entry count mismatch".into()));
            }
            let field = self.rep_field(idx).clone();
            for (slot, &e) in rep.matrices[idx].data.iter_mut().zip(entries.iter()) {
                if e >= field.order() {
                    return Err(Error::IndexMismatch("label entry out of field".into()));
                }
                *slot = field.elem_of(e);
            }
        }
        Ok(rep)
    }

    fn rep_field(&self, arrow: usize) -> &crate::gf::Gf {
        &self.rep.arrows[arrow].head_field
    }

    /// Memoized automorphism-group order of a class.
    pub fn aut_of(&self, label: &str, cap: u64) -> Result<u64> {
        if let Some(&hit) = self.aut_cache.lock().unwrap().get(label) {
            return Ok(hit);
        }
        let rep = self.rep_of_label(label)?;
        let aut = aut_order(&self.rep, &rep, cap)?;
        self.aut_cache
            .lock()
            .unwrap()
            .insert(label.to_string(), aut);
        Ok(aut)
    }

    fn structure_table(
        &self,
        a_dims: &[u64],
        b_dims: &[u64],
        cap: u64,
    ) -> Result<Arc<StructureTable>> {
        let key = (a_dims.to_vec(), b_dims.to_vec());
        if let Some(hit) = self.structure_cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let c_dims: Vec<u64> = a_dims.iter().zip(b_dims).map(|(a, b)| a + b).collect();
        let a_classes = enumerate_reps(&self.rep, a_dims, cap)?;
        let b_classes = enumerate_reps(&self.rep, b_dims, cap)?;
        let c_classes = enumerate_reps(&self.rep, &c_dims, cap)?;
        let mut counts: HashMap<(u32, u32, u32), u64> = HashMap::new();
        for (c_idx, c_class) in c_classes.classes.iter().enumerate() {
            for data in submodules(&self.rep, &c_class.rep, cap)? {
                if data.sub.dims != b_dims {
                    continue;
                }
                let sub_idx = b_classes.class_index(&self.rep, &data.sub) as u32;
                let quot_idx = a_classes.class_index(&self.rep, &data.quotient) as u32;
                *counts.entry((quot_idx, sub_idx, c_idx as u32)).or_insert(0) += 1;
            }
        }
        let table = Arc::new(StructureTable { counts });
        self.structure_cache
            .lock()
            .unwrap()
            .insert(key, table.clone());
        Ok(table)
    }

    /// Product of two basis classes:
    /// `[A][B] = v^{⟨dim A, dim B⟩} Σ_C g_AB^C [C]`.
    fn basis_product(&self, a_label: &str, b_label: &str, cap: u64) -> Result<HallElement> {
        let a_dims = dims_of_label(a_label);
        let b_dims = dims_of_label(b_label);
        let c_dims: Vec<u64> = a_dims.iter().zip(&b_dims).map(|(a, b)| a + b).collect();
        let a_classes = enumerate_reps(&self.rep, &a_dims, cap)?;
        let b_classes = enumerate_reps(&self.rep, &b_dims, cap)?;
        let c_classes = enumerate_reps(&self.rep, &c_dims, cap)?;
        let a_idx = a_classes.class_index(&self.rep, &self.rep_of_label(a_label)?) as u32;
        let b_idx = b_classes.class_index(&self.rep, &self.rep_of_label(b_label)?) as u32;
        let table = self.structure_table(&a_dims, &b_dims, cap)?;
        let av: Vec<i64> = a_dims.iter().map(|&x| x as i64).collect();
        let bv: Vec<i64> = b_dims.iter().map(|&x| x as i64).collect();
        let twist = HallScalar::v_pow(euler_form(&self.rep.species.shape, &av, &bv)?, self.q);
        let mut out = HallElement::zero();
        for (&(qa, sb, c), &g) in &table.counts {
            if qa != a_idx || sb != b_idx {
                continue;
            }
            let coeff = twist.mul(&HallScalar::from_int(g as i128, self.q));
            out = out.add(&HallElement::single(
                c_classes.classes[c as usize].label.clone(),
                coeff,
            ));
        }
        Ok(out)
    }

    /// Bilinear extension of the basis product. Every nonzero term of the
    /// result sits in the dimension vector sum of its factors.
    pub fn product(&self, x: &HallElement, y: &HallElement, cap: u64) -> Result<HallElement> {
        let mut out = HallElement::zero();
        for (la, ca) in &x.terms {
            for (lb, cb) in &y.terms {
                let base = self.basis_product(la, lb, cap)?;
                out = out.add(&base.scale(&ca.mul(cb)));
            }
        }
        Ok(out)
    }

    /// Product of simple generators, left to right: `[S_w1][S_w2]⋯`.
    pub fn word_product(&self, word: &[usize], cap: u64) -> Result<HallElement> {
        let mut acc = self.one(cap)?;
        for &v in word {
            let s = self.simple(v, cap)?;
            acc = self.product(&acc, &s, cap)?;
        }
        Ok(acc)
    }

    /// Power of an element.
    pub fn power(&self, x: &HallElement, n: u64, cap: u64) -> Result<HallElement> {
        let mut acc = self.one(cap)?;
        for _ in 0..n {
            acc = self.product(&acc, x, cap)?;
        }
        Ok(acc)
    }

    /// Green's comultiplication:
    /// `δ([A]) = Σ v^{⟨dim B, dim C⟩} g_BC^A (|Aut B||Aut C|/|Aut A|) [B]⊗[C]`.
    pub fn comult(&self, x: &HallElement, cap: u64) -> Result<HallTensor> {
        let mut out = HallTensor::zero();
        for (la, ca) in &x.terms {
            let a_dims = dims_of_label(la);
            let a_classes = enumerate_reps(&self.rep, &a_dims, cap)?;
            let a_idx = a_classes.class_index(&self.rep, &self.rep_of_label(la)?) as u32;
            let aut_a = self.aut_of(la, cap)?;
            // iterate every componentwise split a = β + γ
            let mut beta = vec![0u64; a_dims.len()];
            loop {
                let gamma: Vec<u64> = a_dims.iter().zip(&beta).map(|(d, b)| d - b).collect();
                let b_classes = enumerate_reps(&self.rep, &beta, cap)?;
                let c_classes = enumerate_reps(&self.rep, &gamma, cap)?;
                let table = self.structure_table(&beta, &gamma, cap)?;
                let bv: Vec<i64> = beta.iter().map(|&x| x as i64).collect();
                let cv: Vec<i64> = gamma.iter().map(|&x| x as i64).collect();
                let twist =
                    HallScalar::v_pow(euler_form(&self.rep.species.shape, &bv, &cv)?, self.q);
                for (&(qb, sc, amb), &g) in &table.counts {
                    if amb != a_idx {
                        continue;
                    }
                    let lb = b_classes.classes[qb as usize].label.clone();
                    let lc = c_classes.classes[sc as usize].label.clone();
                    let aut_b = self.aut_of(&lb, cap)?;
                    let aut_c = self.aut_of(&lc, cap)?;
                    let ratio = Rational::new(
                        (aut_b as i128) * (aut_c as i128) * (g as i128),
                        aut_a as i128,
                    );
                    let coeff = ca
                        .mul(&twist)
                        .mul(&HallScalar::from_rational(ratio, self.q));
                    out.add_term((lb, lc), coeff);
                }
                // next split
                let mut i = 0;
                loop {
                    if i == beta.len() {
                        beta.clear();
                        break;
                    }
                    beta[i] += 1;
                    if beta[i] <= a_dims[i] {
                        break;
                    }
                    beta[i] = 0;
                    i += 1;
                }
                if beta.is_empty() {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Green's bilinear form: `([A],[B]) = δ_[A],[B] / |Aut A|`, extended
    /// bilinearly.
    pub fn green_form(&self, x: &HallElement, y: &HallElement, cap: u64) -> Result<HallScalar> {
        let mut acc = HallScalar::zero(self.q);
        for (l, cx) in &x.terms {
            if let Some(cy) = y.terms.get(l) {
                let aut = self.aut_of(l, cap)?;
                let w = HallScalar::from_rational(Rational::new(1, aut as i128), self.q);
                acc = acc.add(&cx.mul(cy).mul(&w));
            }
        }
        Ok(acc)
    }

    /// Form on the tensor square: `[a⊗b, c⊗d] = [a,c][b,d]`.
    pub fn green_form_tensor(
        &self,
        x: &HallTensor,
        y: &HallTensor,
        cap: u64,
    ) -> Result<HallScalar> {
        let mut acc = HallScalar::zero(self.q);
        for ((l1, l2), cx) in &x.terms {
            for ((m1, m2), cy) in &y.terms {
                if l1 != m1 || l2 != m2 {
                    continue;
                }
                let w1 = self.aut_of(l1, cap)?;
                let w2 = self.aut_of(l2, cap)?;
                let w = HallScalar::from_rational(
                    Rational::new(1, (w1 as i128) * (w2 as i128)),
                    self.q,
                );
                acc = acc.add(&cx.mul(cy).mul(&w));
            }
        }
        Ok(acc)
    }

    /// Twisted multiplication on the tensor square:
    /// `(a⊗b)(c⊗d) = v^{(deg b, deg c)} (ac ⊗ bd)`.
    pub fn tensor_product(&self, x: &HallTensor, y: &HallTensor, cap: u64) -> Result<HallTensor> {
        let mut out = HallTensor::zero();
        for ((a, b), s) in &x.terms {
            for ((c, d), t) in &y.terms {
                let bdims: Vec<i64> = dims_of_label(b).iter().map(|&x| x as i64).collect();
                let cdims: Vec<i64> = dims_of_label(c).iter().map(|&x| x as i64).collect();
                let twist = HallScalar::v_pow(
                    symmetric_form(&self.rep.species.shape, &bdims, &cdims)?,
                    self.q,
                );
                let ac = self.basis_product(a, c, cap)?;
                let bd = self.basis_product(b, d, cap)?;
                let coeff = s.mul(t).mul(&twist);
                for (lac, cac) in &ac.terms {
                    for (lbd, cbd) in &bd.terms {
                        out.add_term((lac.clone(), lbd.clone()), coeff.mul(cac).mul(cbd));
                    }
                }
            }
        }
        Ok(out)
    }

    /// The quantum Serre relation between two vertices:
    /// `Σ_p (−1)^p [1−c_ij choose p]_(d_i) [S_i]^p [S_j] [S_i]^(1−c_ij−p) = 0`.
    pub fn serre_check(&self, i: usize, j: usize, cap: u64) -> Result<bool> {
        assert!(i != j, "Serre relation needs distinct vertices");
        let cartan = cartan_matrix(&self.rep.species.shape)?;
        let n = (1 - cartan.entries[i][j]) as u64;
        let d_i = self.rep.species.shape.d[i];
        let si = self.simple(i, cap)?;
        let sj = self.simple(j, cap)?;
        let mut acc = HallElement::zero();
        for p in 0..=n {
            let binom = quantum_binomial_eval(n, p, d_i, self.q);
            let sign = if p % 2 == 0 {
                HallScalar::one(self.q)
            } else {
                HallScalar::one(self.q).neg()
            };
            let left = self.power(&si, p, cap)?;
            let right = self.power(&si, n - p, cap)?;
            let term = self.product(&self.product(&left, &sj, cap)?, &right, cap)?;
            acc = acc.add(&term.scale(&sign.mul(&binom)));
        }
        Ok(acc.is_zero())
    }

    /// Verify the bialgebra compatibility conditions on a sample:
    /// associativity, δ multiplicative for the twisted tensor product,
    /// adjointness of δ and multiplication under the Green form, and the
    /// grading conditions.
    pub fn bialgebra_checks(&self, sample: &[HallElement], cap: u64) -> Result<BialgebraReport> {
        let mut report = BialgebraReport {
            associativity: true,
            comult_multiplicative: true,
            adjoint: true,
            grading: true,
        };
        // grading: one class at dimension zero, a class at every unit vector,
        // and products supported in the dimension-vector sum
        let zero_dims = vec![0u64; self.rep.vertex_count()];
        report.grading &= enumerate_reps(&self.rep, &zero_dims, cap)?.len() == 1;
        for v in 0..self.rep.vertex_count() {
            let mut e = vec![0u64; self.rep.vertex_count()];
            e[v] = 1;
            report.grading &= !enumerate_reps(&self.rep, &e, cap)?.is_empty();
        }
        for x in sample {
            for la in x.terms.keys() {
                for y in sample {
                    for lb in y.terms.keys() {
                        let prod = self.basis_product(la, lb, cap)?;
                        let want: Vec<u64> = dims_of_label(la)
                            .iter()
                            .zip(&dims_of_label(lb))
                            .map(|(a, b)| a + b)
                            .collect();
                        report.grading &= prod.terms.keys().all(|l| dims_of_label(l) == want);
                    }
                }
            }
        }
        for x in sample {
            for y in sample {
                let xy = self.product(x, y, cap)?;
                // δ(xy) = δ(x)δ(y)
                let lhs = self.comult(&xy, cap)?;
                let rhs = self.tensor_product(&self.comult(x, cap)?, &self.comult(y, cap)?, cap)?;
                report.comult_multiplicative &= lhs == rhs;
                for z in sample {
                    let assoc_l = self.product(&xy, z, cap)?;
                    let assoc_r = self.product(x, &self.product(y, z, cap)?, cap)?;
                    report.associativity &= assoc_l == assoc_r;
                    // [δ(x), y⊗z] = [x, yz]
                    let mut yz_tensor = HallTensor::zero();
                    for (ly, cy) in &y.terms {
                        for (lz, cz) in &z.terms {
                            yz_tensor.add_term((ly.clone(), lz.clone()), cy.mul(cz));
                        }
                    }
                    let lhs = self.green_form_tensor(&self.comult(x, cap)?, &yz_tensor, cap)?;
                    let rhs = self.green_form(x, &self.product(y, z, cap)?, cap)?;
                    report.adjoint &= lhs == rhs;
                }
            }
        }
        Ok(report)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BialgebraReport {
    pub associativity: bool,
    pub comult_multiplicative: bool,
    pub adjoint: bool,
    pub grading: bool,
}

impl BialgebraReport {
    pub fn pass(&self) -> bool {
        self.associativity && self.comult_multiplicative && self.adjoint && self.grading
    }
}
