//! Command-line front end: one verb per operation family, JSON in, canonical
//! JSON (or a text summary) out.
//!
//! Exit codes: 0 success, 2 validation error, 3 size-limit exceeded,
//! 4 parse error.

use serde_json::json;
use speq::error::Error;
use speq::forms;
use speq::hall::HallCtx;
use speq::json::*;
use speq::quiver;
use speq::rep;
use speq::species;
use std::collections::BTreeMap;
use std::io::Read;

const DEFAULT_CAP: u64 = 1_000_000;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&args));
}

struct Cli {
    verb: String,
    flags: BTreeMap<String, String>,
    format: String,
    cap: u64,
}

enum Failure {
    Usage(String),
    Validation(String),
    SizeLimit(String),
    Parse(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::SizeLimitExceeded { .. } => Failure::SizeLimit(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Parse(e.to_string())
    }
}

fn run(args: &[String]) -> i32 {
    let cli = match parse_cli(args) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            return 2;
        }
    };
    match dispatch(&cli) {
        Ok(output) => {
            println!("{output}");
            0
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            eprintln!("{USAGE}");
            2
        }
        Err(Failure::Validation(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::SizeLimit(m)) => {
            eprintln!("error: {m}");
            3
        }
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            4
        }
    }
}

const USAGE: &str = "usage: speq <verb> [flags]
verbs:
  fold --quiver Q --auto S                 fold a quiver with automorphism
  unfold --quiver G                        unfold a valued quiver
  crush --quiver G | --relative D          merge parallel arrows
  functor-f --quiver G                     absolute to relative valuation
  lift --relative D                        gcd-normalized absolute lift
  morphisms --src A --dst B [--flavor abs|rel]   count valued morphisms
  cartan --quiver G                        generalized Cartan matrix
  forms --quiver G --x V [--y W]           Euler/symmetric/Tits forms
  roots --quiver G --max-coord B           bounded real/imaginary roots
  classify --quiver G                      Finite | Affine | Indefinite
  stable --quiver G                        radical of the symmetric form
  species-validate --species S [--q N]     structural checks
  tensor-dims --species S --length L       graded dimensions of T(Q)
  crush-species --species S                crushed species
  iso-check --species S --other T          species / tensor-ring isomorphism
  frobenius-verify --quiver Q --auto S --q N --length L
  unfold-closure --species S               scalar-extension quiver
  reps-enumerate --species S --dim V       isomorphism classes at a dimension
  indecomposables --species S --dim V      indecomposable classes
  hall-product --species S --word W | --left X --right Y
  hall-delta --species S --class C | --word W
  hall-form --species S --class-a A --class-b B
  serre-check --species S --i I --j J      quantum Serre relation
  bialgebra-check --species S [--degree D] bialgebra compatibility
flags: --format json|text, --cap N (or WORKBENCH_CAP), file '-' reads stdin";

fn parse_cli(args: &[String]) -> Result<Cli, String> {
    if args.is_empty() {
        return Err("missing verb".into());
    }
    let verb = args[0].clone();
    let mut flags = BTreeMap::new();
    let mut i = 1;
    while i < args.len() {
        let key = args[i]
            .strip_prefix("--")
            .ok_or_else(|| format!("expected a --flag, found {:?}", args[i]))?;
        let value = args
            .get(i + 1)
            .ok_or_else(|| format!("flag --{key} needs a value"))?;
        flags.insert(key.to_string(), value.clone());
        i += 2;
    }
    let format = flags
        .get("format")
        .cloned()
        .unwrap_or_else(|| "json".into());
    if format != "json" && format != "text" {
        return Err(format!("unknown format {format:?}"));
    }
    let cap = match flags.get("cap") {
        Some(v) => v.parse().map_err(|_| "bad --cap value".to_string())?,
        None => match std::env::var("WORKBENCH_CAP") {
            Ok(v) => v.parse().map_err(|_| "bad WORKBENCH_CAP".to_string())?,
            Err(_) => DEFAULT_CAP,
        },
    };
    Ok(Cli {
        verb,
        flags,
        format,
        cap,
    })
}

impl Cli {
    fn flag(&self, name: &str) -> Result<&str, Failure> {
        self.flags
            .get(name)
            .map(|s| s.as_str())
            .ok_or_else(|| Failure::Usage(format!("missing --{name}")))
    }

    fn read(&self, name: &str) -> Result<String, Failure> {
        let path = self.flag(name)?;
        if path == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        } else {
            Ok(std::fs::read_to_string(path)?)
        }
    }

    fn quiver_arg(&self, name: &str) -> Result<quiver::AbsValuedQuiver, Failure> {
        let text = self.read(name)?;
        let parsed: QuiverJson = serde_json::from_str(&text)?;
        Ok(parsed.to_valued()?)
    }

    fn plain_quiver_arg(&self, name: &str) -> Result<quiver::Quiver, Failure> {
        let text = self.read(name)?;
        let parsed: QuiverJson = serde_json::from_str(&text)?;
        Ok(parsed.to_plain()?)
    }

    fn relative_arg(&self, name: &str) -> Result<quiver::RelValuedQuiver, Failure> {
        let text = self.read(name)?;
        let parsed: RelQuiverJson = serde_json::from_str(&text)?;
        Ok(parsed.to_valued()?)
    }

    fn auto_arg(&self, name: &str) -> Result<quiver::QuiverAutomorphism, Failure> {
        let text = self.read(name)?;
        let parsed: AutomorphismJson = serde_json::from_str(&text)?;
        Ok(parsed.to_automorphism())
    }

    /// A species file, or a valued-quiver file together with --q for the
    /// untwisted modulation.
    fn species_arg(&self, name: &str) -> Result<species::FqSpecies, Failure> {
        let text = self.read(name)?;
        if let Ok(parsed) = serde_json::from_str::<SpeciesJson>(&text) {
            let species = parsed.to_species()?;
            if let Some(q) = self.flags.get("q") {
                if q.parse() != Ok(species.base.q()) {
                    return Err(Failure::Validation(format!(
                        "--q {q} conflicts with the base field GF({}) in the species file",
                        species.base.q()
                    )));
                }
            }
            return Ok(species);
        }
        let shape: QuiverJson = serde_json::from_str(&text)?;
        let q: u64 = self
            .flag("q")
            .map_err(|_| {
                Failure::Usage("file is a plain valued quiver: pass --q for the base field".into())
            })?
            .parse()
            .map_err(|_| Failure::Usage("bad --q value".into()))?;
        let (p, e) = prime_power(q)
            .ok_or_else(|| Failure::Validation(format!("{q} is not a prime power")))?;
        Ok(species::FqSpecies::untwisted(
            species::Base::new(p, e),
            shape.to_valued()?,
        ))
    }

    fn base_arg(&self) -> Result<species::Base, Failure> {
        let q: u64 = self
            .flag("q")?
            .parse()
            .map_err(|_| Failure::Usage("bad --q value".into()))?;
        let (p, e) = prime_power(q)
            .ok_or_else(|| Failure::Validation(format!("{q} is not a prime power")))?;
        Ok(species::Base::new(p, e))
    }

    fn dim_arg(&self, name: &str, len: usize) -> Result<Vec<i64>, Failure> {
        let raw = self.flag(name)?;
        let v: Vec<i64> = raw
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("bad vector {raw:?}")))
            })
            .collect::<Result<_, _>>()?;
        if v.len() != len {
            return Err(Failure::Validation(format!(
                "vector {raw:?} has {} entries, quiver has {len} vertices",
                v.len()
            )));
        }
        Ok(v)
    }
}

fn prime_power(q: u64) -> Option<(u64, usize)> {
    let p = (2..=q).find(|&d| q.is_multiple_of(d))?;
    if !speq::gf::is_prime(p) {
        return None;
    }
    let mut e = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn render(cli: &Cli, value: serde_json::Value, text: String) -> String {
    if cli.format == "text" {
        text
    } else {
        serde_json::to_string(&value).expect("canonical json")
    }
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    match cli.verb.as_str() {
        "fold" => {
            let q = cli.plain_quiver_arg("quiver")?;
            let s = cli.auto_arg("auto")?;
            let folded = quiver::fold(&q, &s)?;
            let value = serde_json::to_value(QuiverJson::from_valued(&folded))?;
            let text = format!(
                "folded: {} vertices, {} arrows; d = {:?}, m = {:?}",
                folded.quiver.vertices.len(),
                folded.quiver.arrows.len(),
                folded.d,
                folded.m
            );
            Ok(render(cli, value, text))
        }
        "unfold" => {
            let g = cli.quiver_arg("quiver")?;
            let (q, s) = quiver::unfold(&g)?;
            let value = json!({
                "quiver": QuiverJson::from_valued(&quiver::AbsValuedQuiver::trivial(q.clone())),
                "auto": AutomorphismJson::from_automorphism(&s),
            });
            let text = format!(
                "unfolded: {} vertices, {} arrows",
                q.vertices.len(),
                q.arrows.len()
            );
            Ok(render(cli, value, text))
        }
        "crush" => {
            if cli.flags.contains_key("relative") {
                let d = cli.relative_arg("relative")?;
                let c = quiver::crush_rel(&d);
                let value = serde_json::to_value(RelQuiverJson::from_valued(&c))?;
                let text = format!("crushed: {} arrows", c.quiver.arrows.len());
                Ok(render(cli, value, text))
            } else {
                let g = cli.quiver_arg("quiver")?;
                let c = quiver::crush_abs(&g);
                let value = serde_json::to_value(QuiverJson::from_valued(&c))?;
                let text = format!("crushed: {} arrows, m = {:?}", c.quiver.arrows.len(), c.m);
                Ok(render(cli, value, text))
            }
        }
        "functor-f" => {
            let g = cli.quiver_arg("quiver")?;
            let d = quiver::functor_f(&g);
            let value = serde_json::to_value(RelQuiverJson::from_valued(&d))?;
            let text = format!("relative values: {:?}", d.dval);
            Ok(render(cli, value, text))
        }
        "lift" => {
            let d = cli.relative_arg("relative")?;
            let g = quiver::lift_relative(&d)?;
            let value = serde_json::to_value(QuiverJson::from_valued(&g))?;
            let text = format!("lift: d = {:?}, m = {:?}", g.d, g.m);
            Ok(render(cli, value, text))
        }
        "morphisms" => {
            let flavor = cli.flags.get("flavor").map(|s| s.as_str()).unwrap_or("abs");
            let count = match flavor {
                "abs" => {
                    let a = cli.quiver_arg("src")?;
                    let b = cli.quiver_arg("dst")?;
                    quiver::enumerate_abs_morphisms(&a, &b, cli.cap)?
                }
                "rel" => {
                    let a = cli.relative_arg("src")?;
                    let b = cli.relative_arg("dst")?;
                    quiver::enumerate_rel_morphisms(&a, &b, cli.cap)?
                }
                other => return Err(Failure::Usage(format!("unknown flavor {other:?}"))),
            };
            Ok(render(
                cli,
                json!({ "count": count }),
                format!("{count} morphisms"),
            ))
        }
        "cartan" => {
            let g = cli.quiver_arg("quiver")?;
            let c = forms::cartan_matrix(&g)?;
            let value = json!({ "matrix": c.entries, "symmetrizer": c.symmetrizer });
            let text = c
                .entries
                .iter()
                .map(|row| format!("{row:?}"))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(render(cli, value, text))
        }
        "forms" => {
            let g = cli.quiver_arg("quiver")?;
            let n = g.quiver.vertices.len();
            let x = cli.dim_arg("x", n)?;
            let y = match cli.flags.get("y") {
                Some(_) => cli.dim_arg("y", n)?,
                None => x.clone(),
            };
            let value = json!({
                "euler": forms::euler_form(&g, &x, &y)?,
                "symmetric": forms::symmetric_form(&g, &x, &y)?,
                "tits_x": forms::tits_form(&g, &x)?,
                "tits_y": forms::tits_form(&g, &y)?,
            });
            let text = format!(
                "euler {} symmetric {} tits(x) {}",
                forms::euler_form(&g, &x, &y)?,
                forms::symmetric_form(&g, &x, &y)?,
                forms::tits_form(&g, &x)?
            );
            Ok(render(cli, value, text))
        }
        "roots" => {
            let g = cli.quiver_arg("quiver")?;
            let bound: i64 = cli
                .flag("max-coord")?
                .parse()
                .map_err(|_| Failure::Usage("bad --max-coord".into()))?;
            let real = forms::real_roots_up_to(&g, bound)?;
            let positive = forms::positive_real_roots_up_to(&g, bound)?;
            let imaginary = forms::imaginary_roots_up_to(&g, bound)?;
            let text = format!(
                "{} real roots ({} positive), {} imaginary within bound {bound}",
                real.len(),
                positive.len(),
                imaginary.len()
            );
            let value = json!({
                "real": real,
                "positive_real": positive,
                "imaginary": imaginary,
            });
            Ok(render(cli, value, text))
        }
        "classify" => {
            let g = cli.quiver_arg("quiver")?;
            let t = forms::classify_type(&g)?;
            Ok(render(cli, json!({ "type": t.to_string() }), t.to_string()))
        }
        "stable" => {
            let g = cli.quiver_arg("quiver")?;
            let basis = forms::stable_lattice(&g);
            let text = format!("stable lattice rank {}: {:?}", basis.len(), basis);
            Ok(render(cli, json!({ "basis": basis }), text))
        }
        "species-validate" => {
            let s = cli.species_arg("species")?;
            let report = species::validate_species(&s);
            let value = json!({
                "violations": report.violations,
                "arrow_dims": report
                    .arrow_dims
                    .iter()
                    .map(|(id, dt, dh)| {
                        json!({"arrow": id, "dim_over_tail": dt, "dim_over_head": dh})
                    })
                    .collect::<Vec<_>>(),
                "duality": report.duality,
            });
            let text = if report.violations.is_empty() {
                "valid".to_string()
            } else {
                format!("violations: {}", report.violations.join("; "))
            };
            Ok(render(cli, value, text))
        }
        "tensor-dims" => {
            let s = cli.species_arg("species")?;
            let l: usize = cli
                .flag("length")?
                .parse()
                .map_err(|_| Failure::Usage("bad --length".into()))?;
            let dims = species::tensor_graded_dim(&s, l)?;
            let total: u64 = dims.iter().sum();
            Ok(render(
                cli,
                json!({ "dims": dims, "total": total }),
                format!("graded dims {dims:?}, total {total}"),
            ))
        }
        "crush-species" => {
            let s = cli.species_arg("species")?;
            let c = species::crush_species(&s);
            let value = serde_json::to_value(SpeciesJson::from_species(&c))?;
            let text = format!(
                "crushed species with {} arrows",
                c.shape.quiver.arrows.len()
            );
            Ok(render(cli, value, text))
        }
        "iso-check" => {
            let s1 = cli.species_arg("species")?;
            let s2 = cli.species_arg("other")?;
            let iso = species::species_iso_check(&s1, &s2, cli.cap)?;
            let acyclic = s1.shape.quiver.is_acyclic() && s2.shape.quiver.is_acyclic();
            let value = if acyclic {
                let tensor = species::tensor_ring_iso_check(&s1, &s2, cli.cap)?;
                json!({
                    "species_isomorphic": iso.is_some(),
                    "tensor_rings_isomorphic": tensor
                })
            } else {
                json!({ "species_isomorphic": iso.is_some() })
            };
            let text = format!("species isomorphic: {}", iso.is_some());
            Ok(render(cli, value, text))
        }
        "frobenius-verify" => {
            let q = cli.plain_quiver_arg("quiver")?;
            let s = cli.auto_arg("auto")?;
            let base = cli.base_arg()?;
            let l: usize = cli
                .flag("length")?
                .parse()
                .map_err(|_| Failure::Usage("bad --length".into()))?;
            let report = species::verify_frobenius_iso(&q, &s, base, l)?;
            let value = json!({
                "fixed_dims": report.fixed_dims,
                "tensor_dims": report.tensor_dims,
                "closure_ok": report.closure_ok,
                "pass": report.pass,
            });
            let text = format!(
                "fixed {:?} vs tensor {:?}: {}",
                report.fixed_dims,
                report.tensor_dims,
                if report.pass { "pass" } else { "FAIL" }
            );
            Ok(render(cli, value, text))
        }
        "unfold-closure" => {
            let s = cli.species_arg("species")?;
            let q = species::scalar_extension_quiver(&s)?;
            let value = serde_json::to_value(QuiverJson::from_valued(
                &quiver::AbsValuedQuiver::trivial(q.clone()),
            ))?;
            let text = format!(
                "scalar extension quiver: {} vertices, {} arrows",
                q.vertices.len(),
                q.arrows.len()
            );
            Ok(render(cli, value, text))
        }
        "reps-enumerate" | "indecomposables" => {
            let s = cli.species_arg("species")?;
            let ctx = rep::RepCtx::new(&s)?;
            let dim = cli.dim_arg("dim", ctx.vertex_count())?;
            if dim.iter().any(|&x| x < 0) {
                return Err(Failure::Validation("dimensions must be nonnegative".into()));
            }
            let dims: Vec<u64> = dim.iter().map(|&x| x as u64).collect();
            let classes = rep::enumerate_reps(&ctx, &dims, cli.cap)?;
            let labels: Vec<String> = if cli.verb == "indecomposables" {
                rep::enumerate_indecomposables(&ctx, &dims, cli.cap)?
                    .into_iter()
                    .map(|i| classes.classes[i].label.clone())
                    .collect()
            } else {
                classes.classes.iter().map(|c| c.label.clone()).collect()
            };
            let value = json!({ "classes": labels, "count": labels.len() });
            Ok(render(cli, value, format!("{} classes", labels.len())))
        }
        "hall-product" => {
            let s = cli.species_arg("species")?;
            let h = HallCtx::new(&s)?;
            let result = if cli.flags.contains_key("word") {
                let word = parse_word(&h, cli.flag("word")?)?;
                h.word_product(&word, cli.cap)?
            } else {
                let left = read_element(cli, &h, "left")?;
                let right = read_element(cli, &h, "right")?;
                h.product(&left, &right, cli.cap)?
            };
            let value = serde_json::to_value(HallElementJson::from_element(&result))?;
            let text = format!("{} terms", result.terms.len());
            Ok(render(cli, value, text))
        }
        "hall-delta" => {
            let s = cli.species_arg("species")?;
            let h = HallCtx::new(&s)?;
            let x = if cli.flags.contains_key("class") {
                speq::hall::HallElement::single(
                    cli.flag("class")?.to_string(),
                    speq::hall::HallScalar::one(h.q),
                )
            } else {
                let word = parse_word(&h, cli.flag("word")?)?;
                h.word_product(&word, cli.cap)?
            };
            let delta = h.comult(&x, cli.cap)?;
            let terms: Vec<serde_json::Value> = delta
                .terms
                .iter()
                .map(|((l, r), c)| {
                    json!({
                        "left": l,
                        "right": r,
                        "a": c.a.to_string(),
                        "b": c.b.to_string()
                    })
                })
                .collect();
            let value = json!({ "terms": terms });
            let text = format!("{} tensor terms", delta.terms.len());
            Ok(render(cli, value, text))
        }
        "hall-form" => {
            let s = cli.species_arg("species")?;
            let h = HallCtx::new(&s)?;
            let a = speq::hall::HallElement::single(
                cli.flag("class-a")?.to_string(),
                speq::hall::HallScalar::one(h.q),
            );
            let b = speq::hall::HallElement::single(
                cli.flag("class-b")?.to_string(),
                speq::hall::HallScalar::one(h.q),
            );
            let v = h.green_form(&a, &b, cli.cap)?;
            let value = json!({ "a": v.a.to_string(), "b": v.b.to_string() });
            Ok(render(cli, value, format!("{v}")))
        }
        "serre-check" => {
            let s = cli.species_arg("species")?;
            let h = HallCtx::new(&s)?;
            let i = vertex_index(&h, cli.flag("i")?)?;
            let j = vertex_index(&h, cli.flag("j")?)?;
            if i == j {
                return Err(Failure::Validation("--i and --j must differ".into()));
            }
            let holds = h.serre_check(i, j, cli.cap)?;
            Ok(render(
                cli,
                json!({ "holds": holds }),
                format!("holds: {holds}"),
            ))
        }
        "bialgebra-check" => {
            let s = cli.species_arg("species")?;
            let h = HallCtx::new(&s)?;
            let degree: usize = match cli.flags.get("degree") {
                Some(v) => v
                    .parse()
                    .map_err(|_| Failure::Usage("bad --degree".into()))?,
                None => 2,
            };
            let mut sample = vec![h.one(cli.cap)?];
            let n = h.rep.vertex_count();
            let mut words: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..degree {
                let mut next = vec![];
                for w in &words {
                    for v in 0..n {
                        let mut w2 = w.clone();
                        w2.push(v);
                        next.push(w2);
                    }
                }
                for w in &next {
                    sample.push(h.word_product(w, cli.cap)?);
                }
                words = next;
            }
            let report = h.bialgebra_checks(&sample, cli.cap)?;
            let value = json!({
                "associativity": report.associativity,
                "comult_multiplicative": report.comult_multiplicative,
                "adjoint": report.adjoint,
                "grading": report.grading,
                "pass": report.pass(),
            });
            Ok(render(cli, value, format!("pass: {}", report.pass())))
        }
        other => Err(Failure::Usage(format!("unknown verb {other:?}"))),
    }
}

fn parse_word(h: &HallCtx, raw: &str) -> Result<Vec<usize>, Failure> {
    raw.split(',')
        .map(|id| vertex_index(h, id.trim()))
        .collect()
}

fn vertex_index(h: &HallCtx, id: &str) -> Result<usize, Failure> {
    h.rep
        .species
        .shape
        .quiver
        .vertex_index(id)
        .ok_or_else(|| Failure::Validation(format!("unknown vertex {id:?}")))
}

fn read_element(cli: &Cli, h: &HallCtx, name: &str) -> Result<speq::hall::HallElement, Failure> {
    let text = cli.read(name)?;
    let parsed: HallElementJson = serde_json::from_str(&text)?;
    Ok(parsed.to_element(h.q)?)
}
