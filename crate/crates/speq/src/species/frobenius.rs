//! The Frobenius fixed-point algebra of a path algebra over the algebraic
//! closure, computed at finite level, and the species attached to a quiver
//! with automorphism.
//!
//! The Frobenius morphism sends Σ λ_p p to Σ λ_p^q σ(p). Each σ-orbit of
//! size r on paths contributes r to the dimension of the fixed space over
//! GF(q), realized by vectors Σ_j λ^(q^j) σ^j(p) with λ ∈ GF(q^r).

use super::{tensor_graded_dim, Base, BimodSummand, FqSpecies};
use crate::error::{Error, Result};
use crate::gf::{Embedding, FieldElem, Gf};
use crate::linalg::Mat;
use crate::quiver::{fold, path_image, paths_up_to, Path, Quiver, QuiverAutomorphism};
use std::collections::HashMap;

/// The finite-field species attached to a folding: the shape is the fold,
/// vertex fields are GF(q^{d_i}), and each arrow orbit carries GF(q^{m_ρ})
/// with twists read off from how the orbit base points sit inside their
/// vertex orbits.
pub fn species_from_folding(q: &Quiver, s: &QuiverAutomorphism, base: Base) -> Result<FqSpecies> {
    let shape = fold(q, s)?;
    if shape.quiver.has_loop() {
        let l = shape
            .quiver
            .arrows
            .iter()
            .find(|a| a.tail == a.head)
            .unwrap();
        return Err(Error::LoopInOrbit(l.id.clone()));
    }
    let vorbits = s.vertex_orbits(q);
    let position = |v: &str| -> u64 {
        let orbit = vorbits.iter().find(|o| o.iter().any(|x| x == v)).unwrap();
        orbit.iter().position(|x| x == v).unwrap() as u64
    };
    let aorbits = s.arrow_orbits(q);
    let bimodules = shape
        .quiver
        .arrows
        .iter()
        .map(|fa| {
            let orbit = aorbits.iter().find(|o| o[0] == fa.id).unwrap();
            let rep = q.arrow(&orbit[0]).unwrap();
            vec![BimodSummand {
                m: orbit.len() as u64,
                ltwist: position(&rep.head),
                rtwist: position(&rep.tail),
            }]
        })
        .collect();
    Ok(FqSpecies::new(base, shape, bimodules))
}

/// σ-orbits on a path set, as index lists.
fn path_orbits(paths: &[Path], s: &QuiverAutomorphism) -> Vec<Vec<usize>> {
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen = vec![false; paths.len()];
    let mut out = vec![];
    for start in 0..paths.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut cur = path_image(&paths[start], s);
        while cur != paths[start] {
            let i = index[&cur];
            orbit.push(i);
            seen[i] = true;
            cur = path_image(&cur, s);
        }
        out.push(orbit);
    }
    out
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    if a == 0 || b == 0 {
        return a.max(b).max(1);
    }
    a / gcd(a, b) * b
}

/// One graded piece of the concrete fixed-space computation.
struct FixedSpace {
    /// The working field GF(q^N).
    field: Gf,
    paths: Vec<Path>,
    /// An F_p-basis of the fixed space, as vectors over the working field.
    basis: Vec<Vec<FieldElem>>,
}

/// Solve the semilinear fixed-point equations F(x) = x on the degree-n
/// component over GF(q^N), N = lcm of the orbit sizes in that degree.
fn fixed_space(
    paths: &[Path],
    s: &QuiverAutomorphism,
    base: Base,
    min_ext: u64,
) -> Result<FixedSpace> {
    let orbits = path_orbits(paths, s);
    let n_ext = orbits
        .iter()
        .fold(min_ext.max(1), |acc, o| lcm(acc, o.len() as u64));
    let field = Gf::make(base.p, base.e * n_ext as usize)?;
    let fp = Gf::make(base.p, 1)?;
    let t = paths.len();
    let w = field.degree();
    if t == 0 {
        return Ok(FixedSpace {
            field,
            paths: vec![],
            basis: vec![],
        });
    }
    // the q-power map on the working field, flattened over GF(p)
    let mut qpow = Mat::zero(&fp, w, w);
    for u in 0..w {
        let mut unit = vec![0u64; w];
        unit[u] = 1;
        let img = field.frobenius(&field.elem(&unit), base.e);
        for (i, &c) in img.coeffs.iter().enumerate() {
            *qpow.at_mut(i, u) = fp.elem(&[c]);
        }
    }
    // F - I as a block matrix: block row σ(p), block column p carries qpow
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut m = Mat::zero(&fp, t * w, t * w);
    for (a, p) in paths.iter().enumerate() {
        let b = index[&path_image(p, s)];
        for i in 0..w {
            for j in 0..w {
                *m.at_mut(b * w + i, a * w + j) = qpow.at(i, j).clone();
            }
        }
        for i in 0..w {
            let cur = m.at(a * w + i, a * w + i).clone();
            *m.at_mut(a * w + i, a * w + i) = fp.sub(&cur, &fp.one());
        }
    }
    let null = m.null_space(&fp);
    assert_eq!(
        null.len(),
        base.e * t,
        "fixed space dimension must equal e times the path count"
    );
    let basis = null
        .into_iter()
        .map(|flat| {
            (0..t)
                .map(|a| {
                    let digits: Vec<u64> = (0..w).map(|i| flat[a * w + i].coeffs[0]).collect();
                    field.elem(&digits)
                })
                .collect()
        })
        .collect();
    Ok(FixedSpace {
        field,
        paths: paths.to_vec(),
        basis,
    })
}

/// Graded dimensions over GF(q) of the Frobenius fixed-point algebra of the
/// path algebra, for degrees 0..=l. Each equals the number of paths of that
/// length; the equality is confirmed by solving the fixed-point equations
/// concretely over GF(q^N).
pub fn frobenius_fixed_dims(
    q: &Quiver,
    s: &QuiverAutomorphism,
    base: Base,
    l: usize,
) -> Result<Vec<u64>> {
    s.validate(q)?;
    let groups = paths_up_to(q, l);
    let mut dims = vec![];
    for paths in &groups {
        let space = fixed_space(paths, s, base, 1)?;
        assert_eq!(space.basis.len(), base.e * paths.len());
        dims.push(paths.len() as u64);
    }
    Ok(dims)
}

/// Verification report: graded dimensions on both sides and whether the
/// fixed space is closed under multiplication with GF(q)-structure
/// constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub fixed_dims: Vec<u64>,
    pub tensor_dims: Vec<u64>,
    pub closure_ok: bool,
    pub pass: bool,
}

/// Check that the fixed-point algebra of (Q, σ) matches the tensor algebra
/// of the folded species: graded dimensions agree degree by degree up to l,
/// and the concrete fixed spaces are closed under multiplication with
/// structure constants in GF(q).
pub fn verify_frobenius_iso(
    q: &Quiver,
    s: &QuiverAutomorphism,
    base: Base,
    l: usize,
) -> Result<FrobeniusReport> {
    let species = species_from_folding(q, s, base)?;
    let tensor_dims = tensor_graded_dim(&species, l)?;
    let fixed_dims = frobenius_fixed_dims(q, s, base, l)?;

    // one working field for all degrees so products stay in one place
    let groups = paths_up_to(q, l);
    let mut n_ext = 1u64;
    for paths in &groups {
        for orbit in path_orbits(paths, s) {
            n_ext = lcm(n_ext, orbit.len() as u64);
        }
    }
    let spaces: Vec<FixedSpace> = groups
        .iter()
        .map(|paths| fixed_space(paths, s, base, n_ext))
        .collect::<Result<_>>()?;
    let closure_ok = closure_with_base_constants(q, base, &spaces)?;

    let pass = fixed_dims == tensor_dims && closure_ok;
    Ok(FrobeniusReport {
        fixed_dims,
        tensor_dims,
        closure_ok,
        pass,
    })
}

/// Multiply two graded fixed vectors and express the product in the fixed
/// basis of the target degree with coefficients in GF(q) ⊆ GF(q^N).
fn closure_with_base_constants(q: &Quiver, base: Base, spaces: &[FixedSpace]) -> Result<bool> {
    let l = spaces.len() - 1;
    let fp = Gf::make(base.p, 1)?;
    let fq = base.field()?;
    for a in 0..=l {
        for b in 0..=l - a {
            let target = &spaces[a + b];
            let field = &target.field;
            if spaces[a].paths.is_empty() || spaces[b].paths.is_empty() {
                continue;
            }
            assert_eq!(field, &spaces[a].field);
            let embed_q = Embedding::new(&fq, field)?;
            // span matrix of { g^j · basis_i } over GF(p), g running over an
            // F_p-basis of GF(q): solving in it yields GF(q) coefficients
            let w = field.degree();
            let t = target.paths.len();
            let mut cols: Vec<Vec<FieldElem>> = vec![];
            for vec in &target.basis {
                for j in 0..base.e {
                    let mut gq = vec![0u64; base.e];
                    gq[j] = 1;
                    let scalar = embed_q.apply(&fq.elem(&gq));
                    cols.push(vec.iter().map(|x| field.mul(&scalar, x)).collect());
                }
            }
            let mut span = Mat::zero(&fp, t * w, cols.len());
            for (cidx, col) in cols.iter().enumerate() {
                for (pidx, x) in col.iter().enumerate() {
                    for (i, &c) in x.coeffs.iter().enumerate() {
                        *span.at_mut(pidx * w + i, cidx) = fp.elem(&[c]);
                    }
                }
            }
            let index: HashMap<&Path, usize> = target
                .paths
                .iter()
                .enumerate()
                .map(|(i, p)| (p, i))
                .collect();
            for u in &spaces[a].basis {
                for v in &spaces[b].basis {
                    // product u·v in the path algebra: (p)(r) concatenates r then p
                    let mut prod = vec![field.zero(); t];
                    for (pi, p) in spaces[a].paths.iter().enumerate() {
                        if field.is_zero(&u[pi]) {
                            continue;
                        }
                        for (ri, r) in spaces[b].paths.iter().enumerate() {
                            if field.is_zero(&v[ri]) {
                                continue;
                            }
                            if let Some(pr) = p.compose_after(r, q) {
                                let k = index[&pr];
                                let term = field.mul(&u[pi], &v[ri]);
                                prod[k] = field.add(&prod[k], &term);
                            }
                        }
                    }
                    // the product of fixed vectors must be fixed: solvable in
                    // the GF(q)-span of the fixed basis
                    let mut rhs = vec![fp.zero(); t * w];
                    for (pidx, x) in prod.iter().enumerate() {
                        for (i, &c) in x.coeffs.iter().enumerate() {
                            rhs[pidx * w + i] = fp.elem(&[c]);
                        }
                    }
                    if span.solve(&fp, &rhs).is_none() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
