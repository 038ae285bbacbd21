//! JSON schemas for quivers, automorphisms, species, representations, and
//! Hall elements. All fields are required and unknown fields are rejected;
//! output goes through `serde_json::Value` so object keys always serialize
//! sorted and identical inputs give byte-identical outputs.

use crate::error::{Error, Result};
use crate::hall::{HallElement, HallScalar};
use crate::quiver::{AbsValuedQuiver, Arrow, Quiver, QuiverAutomorphism, RelValuedQuiver};
use crate::rational::Rational;
use crate::rep::{RepCtx, Representation};
use crate::species::{Base, BimodSummand, FqSpecies};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

fn bad(msg: impl Into<String>) -> Error {
    Error::Invalid(vec![msg.into()])
}

/// Serialize any value with sorted object keys.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string(&v).expect("value prints")
}

// ---- valued quivers ----

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct VertexJson {
    pub id: String,
    pub d: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ArrowJson {
    pub id: String,
    pub tail: String,
    pub head: String,
    pub m: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct QuiverJson {
    pub vertices: Vec<VertexJson>,
    pub arrows: Vec<ArrowJson>,
}

impl QuiverJson {
    pub fn from_valued(g: &AbsValuedQuiver) -> QuiverJson {
        QuiverJson {
            vertices: g
                .quiver
                .vertices
                .iter()
                .zip(&g.d)
                .map(|(v, &d)| VertexJson { id: v.clone(), d })
                .collect(),
            arrows: g
                .quiver
                .arrows
                .iter()
                .zip(&g.m)
                .map(|(a, &m)| ArrowJson {
                    id: a.id.clone(),
                    tail: a.tail.clone(),
                    head: a.head.clone(),
                    m,
                })
                .collect(),
        }
    }

    pub fn to_valued(&self) -> Result<AbsValuedQuiver> {
        let quiver = Quiver::new(
            self.vertices.iter().map(|v| v.id.clone()).collect(),
            self.arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    tail: a.tail.clone(),
                    head: a.head.clone(),
                })
                .collect(),
        );
        let d = quiver
            .vertices
            .iter()
            .map(|v| {
                self.vertices
                    .iter()
                    .find(|x| &x.id == v)
                    .map(|x| x.d)
                    .ok_or_else(|| bad("vertex lookup"))
            })
            .collect::<Result<_>>()?;
        let m = quiver
            .arrows
            .iter()
            .map(|a| {
                self.arrows
                    .iter()
                    .find(|x| x.id == a.id)
                    .map(|x| x.m)
                    .ok_or_else(|| bad("arrow lookup"))
            })
            .collect::<Result<_>>()?;
        let g = AbsValuedQuiver::new(quiver, d, m);
        g.validate()?;
        Ok(g)
    }

    /// Read a plain quiver: the valuation must be trivial.
    pub fn to_plain(&self) -> Result<Quiver> {
        let g = self.to_valued()?;
        if g.d.iter().any(|&d| d != 1) || g.m.iter().any(|&m| m != 1) {
            return Err(bad(
                "expected a plain quiver: all d and m values must equal 1",
            ));
        }
        Ok(g.quiver)
    }
}

// ---- relative valued quivers ----

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct RelArrowJson {
    pub id: String,
    pub tail: String,
    pub head: String,
    pub dij: u64,
    pub dji: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct RelVertexJson {
    pub id: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct RelQuiverJson {
    pub vertices: Vec<RelVertexJson>,
    pub arrows: Vec<RelArrowJson>,
}

impl RelQuiverJson {
    pub fn from_valued(d: &RelValuedQuiver) -> RelQuiverJson {
        RelQuiverJson {
            vertices: d
                .quiver
                .vertices
                .iter()
                .map(|v| RelVertexJson { id: v.clone() })
                .collect(),
            arrows: d
                .quiver
                .arrows
                .iter()
                .zip(&d.dval)
                .map(|(a, &(dij, dji))| RelArrowJson {
                    id: a.id.clone(),
                    tail: a.tail.clone(),
                    head: a.head.clone(),
                    dij,
                    dji,
                })
                .collect(),
        }
    }

    pub fn to_valued(&self) -> Result<RelValuedQuiver> {
        let quiver = Quiver::new(
            self.vertices.iter().map(|v| v.id.clone()).collect(),
            self.arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    tail: a.tail.clone(),
                    head: a.head.clone(),
                })
                .collect(),
        );
        let dval = quiver
            .arrows
            .iter()
            .map(|a| {
                self.arrows
                    .iter()
                    .find(|x| x.id == a.id)
                    .map(|x| (x.dij, x.dji))
                    .ok_or_else(|| bad("arrow lookup"))
            })
            .collect::<Result<_>>()?;
        let d = RelValuedQuiver::new(quiver, dval);
        d.validate()?;
        Ok(d)
    }
}

// ---- automorphisms ----

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismJson {
    pub vertex_map: BTreeMap<String, String>,
    pub arrow_map: BTreeMap<String, String>,
}

impl AutomorphismJson {
    pub fn from_automorphism(s: &QuiverAutomorphism) -> AutomorphismJson {
        AutomorphismJson {
            vertex_map: s.vertex_map.clone(),
            arrow_map: s.arrow_map.clone(),
        }
    }

    pub fn to_automorphism(&self) -> QuiverAutomorphism {
        QuiverAutomorphism {
            vertex_map: self.vertex_map.clone(),
            arrow_map: self.arrow_map.clone(),
        }
    }
}

// ---- species ----

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct BaseJson {
    pub p: u64,
    pub e: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct SummandJson {
    pub m: u64,
    pub ltwist: u64,
    pub rtwist: u64,
}

/// An arrow of a species: twists for a single summand, or a summand list
/// for a crushed bimodule.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields, untagged)]
pub enum SpeciesArrowJson {
    Crushed {
        id: String,
        tail: String,
        head: String,
        m: u64,
        summands: Vec<SummandJson>,
    },
    Single {
        id: String,
        tail: String,
        head: String,
        m: u64,
        ltwist: u64,
        rtwist: u64,
    },
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct SpeciesJson {
    pub base: BaseJson,
    pub vertices: Vec<VertexJson>,
    pub arrows: Vec<SpeciesArrowJson>,
}

impl SpeciesJson {
    pub fn from_species(s: &FqSpecies) -> SpeciesJson {
        let arrows = s
            .shape
            .quiver
            .arrows
            .iter()
            .zip(&s.shape.m)
            .zip(&s.bimodules)
            .map(|((a, &m), summands)| {
                if summands.len() == 1 {
                    SpeciesArrowJson::Single {
                        id: a.id.clone(),
                        tail: a.tail.clone(),
                        head: a.head.clone(),
                        m,
                        ltwist: summands[0].ltwist,
                        rtwist: summands[0].rtwist,
                    }
                } else {
                    SpeciesArrowJson::Crushed {
                        id: a.id.clone(),
                        tail: a.tail.clone(),
                        head: a.head.clone(),
                        m,
                        summands: summands
                            .iter()
                            .map(|x| SummandJson {
                                m: x.m,
                                ltwist: x.ltwist,
                                rtwist: x.rtwist,
                            })
                            .collect(),
                    }
                }
            })
            .collect();
        SpeciesJson {
            base: BaseJson {
                p: s.base.p,
                e: s.base.e,
            },
            vertices: s
                .shape
                .quiver
                .vertices
                .iter()
                .zip(&s.shape.d)
                .map(|(v, &d)| VertexJson { id: v.clone(), d })
                .collect(),
            arrows,
        }
    }

    pub fn to_species(&self) -> Result<FqSpecies> {
        let mut arrows = vec![];
        let mut mvals = BTreeMap::new();
        let mut summand_map = BTreeMap::new();
        for a in &self.arrows {
            let (id, tail, head, m, summands) = match a {
                SpeciesArrowJson::Single {
                    id,
                    tail,
                    head,
                    m,
                    ltwist,
                    rtwist,
                } => (
                    id,
                    tail,
                    head,
                    *m,
                    vec![BimodSummand {
                        m: *m,
                        ltwist: *ltwist,
                        rtwist: *rtwist,
                    }],
                ),
                SpeciesArrowJson::Crushed {
                    id,
                    tail,
                    head,
                    m,
                    summands,
                } => (
                    id,
                    tail,
                    head,
                    *m,
                    summands
                        .iter()
                        .map(|s| BimodSummand {
                            m: s.m,
                            ltwist: s.ltwist,
                            rtwist: s.rtwist,
                        })
                        .collect(),
                ),
            };
            arrows.push(Arrow {
                id: id.clone(),
                tail: tail.clone(),
                head: head.clone(),
            });
            mvals.insert(id.clone(), m);
            summand_map.insert(id.clone(), summands);
        }
        let quiver = Quiver::new(self.vertices.iter().map(|v| v.id.clone()).collect(), arrows);
        let d = quiver
            .vertices
            .iter()
            .map(|v| {
                self.vertices
                    .iter()
                    .find(|x| &x.id == v)
                    .map(|x| x.d)
                    .ok_or_else(|| bad("vertex lookup"))
            })
            .collect::<Result<Vec<_>>>()?;
        let m = quiver
            .arrows
            .iter()
            .map(|a| mvals[&a.id])
            .collect::<Vec<_>>();
        let bimodules = quiver
            .arrows
            .iter()
            .map(|a| summand_map[&a.id].clone())
            .collect();
        let shape = AbsValuedQuiver::new(quiver, d, m);
        let species = FqSpecies::new(Base::new(self.base.p, self.base.e), shape, bimodules);
        species.validate()?;
        Ok(species)
    }
}

// ---- representations ----

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct RepresentationJson {
    pub dims: BTreeMap<String, u64>,
    /// arrow id → rows of field elements, each a coefficient array over
    /// GF(p), low degree first.
    pub matrices: BTreeMap<String, Vec<Vec<Vec<u64>>>>,
}

impl RepresentationJson {
    pub fn from_representation(ctx: &RepCtx, rep: &Representation) -> RepresentationJson {
        let shape = &ctx.species.shape;
        let dims = shape
            .quiver
            .vertices
            .iter()
            .zip(&rep.dims)
            .map(|(v, &n)| (v.clone(), n))
            .collect();
        let matrices = shape
            .quiver
            .arrows
            .iter()
            .zip(&rep.matrices)
            .map(|(a, m)| {
                let rows = (0..m.rows)
                    .map(|i| (0..m.cols).map(|j| m.at(i, j).coeffs.clone()).collect())
                    .collect();
                (a.id.clone(), rows)
            })
            .collect();
        RepresentationJson { dims, matrices }
    }

    pub fn to_representation(&self, ctx: &RepCtx) -> Result<Representation> {
        let shape = &ctx.species.shape;
        let dims: Vec<u64> = shape
            .quiver
            .vertices
            .iter()
            .map(|v| {
                self.dims
                    .get(v)
                    .copied()
                    .ok_or_else(|| bad(format!("missing dimension for vertex {v:?}")))
            })
            .collect::<Result<_>>()?;
        let mut rep = Representation::zero(ctx, dims);
        for (idx, a) in shape.quiver.arrows.iter().enumerate() {
            let rows = self
                .matrices
                .get(&a.id)
                .ok_or_else(|| bad(format!("missing matrix for arrow {:?}", a.id)))?;
            let m = &mut rep.matrices[idx];
            if rows.len() != m.rows {
                return Err(bad(format!(
                    "arrow {:?}: expected {} rows, found {}",
                    a.id,
                    m.rows,
                    rows.len()
                )));
            }
            let gf = ctx.species.vertex_field(&a.head)?;
            for (i, row) in rows.iter().enumerate() {
                if row.len() != m.cols {
                    return Err(bad(format!(
                        "arrow {:?}: expected {} columns, found {}",
                        a.id,
                        m.cols,
                        row.len()
                    )));
                }
                for (j, coeffs) in row.iter().enumerate() {
                    if coeffs.len() > gf.degree() {
                        return Err(bad("field element has too many coefficients"));
                    }
                    *m.at_mut(i, j) = gf.elem(coeffs);
                }
            }
        }
        Ok(rep)
    }
}

// ---- Hall elements ----

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct HallTermJson {
    pub class: String,
    /// Rational part, as an exact "num/den" string.
    pub a: String,
    /// Coefficient of v, as an exact "num/den" string.
    pub b: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct HallElementJson {
    pub terms: Vec<HallTermJson>,
}

impl HallElementJson {
    pub fn from_element(x: &HallElement) -> HallElementJson {
        HallElementJson {
            terms: x
                .terms
                .iter()
                .map(|(label, c)| HallTermJson {
                    class: label.clone(),
                    a: c.a.to_string(),
                    b: c.b.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_element(&self, q: u64) -> Result<HallElement> {
        let mut out = HallElement::zero();
        for t in &self.terms {
            let a: Rational = t.a.parse().map_err(|e: String| bad(e))?;
            let b: Rational = t.b.parse().map_err(|e: String| bad(e))?;
            out = out.add(&HallElement::single(
                t.class.clone(),
                HallScalar { a, b, q },
            ));
        }
        Ok(out)
    }
}
