//! JSON wire formats.
//!
//! Rationals travel as strings `"p/q"` (integers are accepted on input),
//! scalars as `{"re": "p/q", "im": "r/s"}` (a bare rational is accepted as a
//! real scalar), structure constants as `[j, k, l, "re", "im"]`, and weights
//! as flat integer tuples with the torus entries first.
//!
//! Parsing happens in two steps. [`parse`] checks the JSON shape and reports
//! the JSON path of the first offending field. The `into_*` methods then
//! check sizes against the surrounding data and name the field they reject.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, DeserializeOwned, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::band::{BandModule, BandOp, TypeWeight};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::gk::FiniteModule;
use crate::hcomplex::HComplex;
use crate::lie::{Character, CharacterRestriction, DiagGroup, LieAlgebra, Pair, SubpairEmbedding};
use crate::linalg::SparseMatrix;
use crate::poly::Poly;
use crate::report::{DegreeData, HomologyReport, Stabilization};
use crate::scalar::{format_rational, parse_rational, ExactScalar};
use crate::Q;

fn schema(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        location: location.into(),
        message: message.into(),
    }
}

/// Deserializes `text`, reporting failures as [`Error::Schema`] located at
/// `origin` plus the JSON path.
pub fn parse<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let location = if path == "." { origin.to_string() } else { format!("{origin}:{path}") };
        schema(location, e.inner().to_string())
    })?;
    de.end().map_err(|e| schema(origin, e.to_string()))?;
    Ok(value)
}

/// Pretty JSON with a trailing newline. Map keys are ordered, so equal
/// values print identically.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("wire types always serialize");
    s.push('\n');
    s
}

/// Exact rational as `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat(pub Q);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

struct RatVisitor;

impl Visitor<'_> for RatVisitor {
    type Value = Rat;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational as \"p/q\" or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rat, E> {
        parse_rational(v)
            .map(Rat)
            .ok_or_else(|| E::custom(format!("{v:?} is not a rational \"p/q\"")))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rat, E> {
        Ok(Rat(Q::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rat, E> {
        Ok(Rat(Q::from_integer(v.into())))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

/// Gaussian rational `{"re": "p/q", "im": "r/s"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalarWire {
    pub re: Rat,
    pub im: Rat,
}

impl ScalarWire {
    pub fn from_scalar<F: ExactScalar>(x: &F) -> Self {
        let (re, im) = x.parts();
        Self { re: Rat(re), im: Rat(im) }
    }

    pub fn to_scalar<F: ExactScalar>(&self, location: &str) -> Result<F> {
        F::from_parts(self.re.0.clone(), self.im.0.clone())
            .ok_or_else(|| schema(location, "imaginary part is not representable in this field"))
    }
}

struct ScalarVisitor;

impl<'de> Visitor<'de> for ScalarVisitor {
    type Value = ScalarWire;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a scalar {\"re\": \"p/q\", \"im\": \"r/s\"} or a rational")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ScalarWire, E> {
        let re = RatVisitor.visit_str(v)?;
        Ok(ScalarWire { re, im: Rat(Q::default()) })
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ScalarWire, E> {
        Ok(ScalarWire { re: RatVisitor.visit_i64(v)?, im: Rat(Q::default()) })
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ScalarWire, E> {
        Ok(ScalarWire { re: RatVisitor.visit_u64(v)?, im: Rat(Q::default()) })
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<ScalarWire, A::Error> {
        let (mut re, mut im) = (None, None);
        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "re" if re.is_none() => re = Some(map.next_value::<Rat>()?),
                "im" if im.is_none() => im = Some(map.next_value::<Rat>()?),
                "re" | "im" => return Err(de::Error::duplicate_field("re/im")),
                other => return Err(de::Error::unknown_field(other, &["re", "im"])),
            }
        }
        Ok(ScalarWire {
            re: re.ok_or_else(|| de::Error::missing_field("re"))?,
            im: im.unwrap_or(Rat(Q::default())),
        })
    }
}

impl<'de> Deserialize<'de> for ScalarWire {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(ScalarVisitor)
    }
}

fn vector_wire<F: ExactScalar>(v: &[F]) -> Vec<ScalarWire> {
    v.iter().map(ScalarWire::from_scalar).collect()
}

fn vector_from_wire<F: ExactScalar>(v: &[ScalarWire], len: usize, location: &str) -> Result<Vec<F>> {
    if v.len() != len {
        return Err(schema(location, format!("expected {len} entries, found {}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(i, x)| x.to_scalar(&format!("{location}[{i}]")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixWire {
    pub rows: usize,
    pub cols: usize,
    /// `[row, col, value]` for each nonzero entry, column-major.
    pub entries: Vec<(usize, usize, ScalarWire)>,
}

impl MatrixWire {
    pub fn from_matrix<F: ExactScalar>(m: &SparseMatrix<F>) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().map(|(i, j, x)| (i, j, ScalarWire::from_scalar(x))).collect(),
        }
    }

    pub fn into_matrix<F: ExactScalar>(&self, shape: Option<(usize, usize)>, location: &str) -> Result<SparseMatrix<F>> {
        if let Some((r, c)) = shape {
            if (self.rows, self.cols) != (r, c) {
                return Err(schema(location, format!("expected a {r}×{c} matrix, found {}×{}", self.rows, self.cols)));
            }
        }
        let mut triplets = Vec::with_capacity(self.entries.len());
        let mut seen = std::collections::BTreeSet::new();
        for (n, (i, j, x)) in self.entries.iter().enumerate() {
            let loc = format!("{location}.entries[{n}]");
            if *i >= self.rows || *j >= self.cols {
                return Err(schema(loc, format!("entry ({i}, {j}) outside a {}×{} matrix", self.rows, self.cols)));
            }
            if !seen.insert((*i, *j)) {
                return Err(schema(loc, format!("entry ({i}, {j}) given twice")));
            }
            triplets.push((*i, *j, x.to_scalar(&loc)?));
        }
        Ok(SparseMatrix::from_triplets(self.rows, self.cols, triplets))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieAlgebraWire {
    pub labels: Vec<String>,
    /// `[j, k, l, re, im]`: `[x_j, x_k]` has coefficient `re + i·im` on `x_l`.
    pub brackets: Vec<(usize, usize, usize, Rat, Rat)>,
}

impl LieAlgebraWire {
    pub fn from_algebra<F: ExactScalar>(g: &LieAlgebra<F>) -> Self {
        let brackets = g
            .nonzero_constants()
            .into_iter()
            .map(|(j, k, l, c)| {
                let (re, im) = c.parts();
                (j, k, l, Rat(re), Rat(im))
            })
            .collect();
        Self {
            labels: g.labels().to_vec(),
            brackets,
        }
    }

    pub fn into_algebra<F: ExactScalar>(&self, location: &str) -> Result<LieAlgebra<F>> {
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (n, (j, k, l, re, im)) in self.brackets.iter().enumerate() {
            let c = ScalarWire { re: re.clone(), im: im.clone() }.to_scalar(&format!("{location}.brackets[{n}]"))?;
            brackets.push((*j, *k, *l, c));
        }
        LieAlgebra::new(self.labels.clone(), brackets).map_err(|e| schema(format!("{location}.brackets"), e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagGroupWire {
    pub torus_rank: usize,
    #[serde(default)]
    pub finite_invariants: Vec<u32>,
}

impl DiagGroupWire {
    pub fn from_group(k: &DiagGroup) -> Self {
        Self {
            torus_rank: k.torus_rank(),
            finite_invariants: k.finite_orders().to_vec(),
        }
    }

    pub fn into_group(&self, location: &str) -> Result<DiagGroup> {
        DiagGroup::new(self.torus_rank, self.finite_invariants.clone())
            .map_err(|e| schema(format!("{location}.finite_invariants"), e.to_string()))
    }
}

fn character_from_wire(k: &DiagGroup, flat: &[i64], location: &str) -> Result<Character> {
    k.character_from_flat(flat).map_err(|_| {
        schema(
            location,
            format!(
                "weight {flat:?} needs {} entries ({} torus, then {} finite)",
                k.torus_rank() + k.finite_orders().len(),
                k.torus_rank(),
                k.finite_orders().len()
            ),
        )
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairWire {
    pub g: LieAlgebraWire,
    pub k: DiagGroupWire,
    /// Weight of each basis vector of `g`.
    pub grading: Vec<Vec<i64>>,
    /// Image of each torus generator in `g`.
    pub iota: Vec<Vec<ScalarWire>>,
}

impl PairWire {
    pub fn from_pair<F: ExactScalar>(p: &Pair<F>) -> Self {
        Self {
            g: LieAlgebraWire::from_algebra(&p.g),
            k: DiagGroupWire::from_group(&p.k),
            grading: p.grading.iter().map(Character::flat).collect(),
            iota: p.iota.iter().map(|v| vector_wire(v)).collect(),
        }
    }

    pub fn into_pair<F: ExactScalar>(&self, location: &str) -> Result<Pair<F>> {
        let g = self.g.into_algebra(&format!("{location}.g"))?;
        let k = self.k.into_group(&format!("{location}.k"))?;
        if self.grading.len() != g.dim() {
            return Err(schema(
                format!("{location}.grading"),
                format!("expected one weight per basis vector ({}), found {}", g.dim(), self.grading.len()),
            ));
        }
        let grading = self
            .grading
            .iter()
            .enumerate()
            .map(|(j, w)| character_from_wire(&k, w, &format!("{location}.grading[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        if self.iota.len() != k.torus_rank() {
            return Err(schema(
                format!("{location}.iota"),
                format!("expected one column per torus generator ({}), found {}", k.torus_rank(), self.iota.len()),
            ));
        }
        let iota = self
            .iota
            .iter()
            .enumerate()
            .map(|(t, col)| vector_from_wire(col, g.dim(), &format!("{location}.iota[{t}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Pair::new(g, k, grading, iota))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RestrictionWire {
    pub torus: Vec<Vec<i64>>,
    pub from_torus: Vec<Vec<i64>>,
    pub from_finite: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubpairWire {
    pub small: PairWire,
    pub big: PairWire,
    /// Image in `g` of each basis vector of `h`.
    pub alg_embed: Vec<Vec<ScalarWire>>,
    pub grp_embed: RestrictionWire,
}

impl SubpairWire {
    pub fn from_subpair<F: ExactScalar>(e: &SubpairEmbedding<F>) -> Self {
        let r = &e.grp_embed;
        Self {
            small: PairWire::from_pair(&e.small),
            big: PairWire::from_pair(&e.big),
            alg_embed: e.alg_embed.iter().map(|v| vector_wire(v)).collect(),
            grp_embed: RestrictionWire {
                torus: r.torus.clone(),
                from_torus: r.from_torus.clone(),
                from_finite: r.from_finite.clone(),
            },
        }
    }

    pub fn into_subpair<F: ExactScalar>(&self, location: &str) -> Result<SubpairEmbedding<F>> {
        let small: Pair<F> = self.small.into_pair(&format!("{location}.small"))?;
        let big: Pair<F> = self.big.into_pair(&format!("{location}.big"))?;
        if self.alg_embed.len() != small.g.dim() {
            return Err(schema(
                format!("{location}.alg_embed"),
                format!("expected one column per basis vector of h ({}), found {}", small.g.dim(), self.alg_embed.len()),
            ));
        }
        let alg_embed = self
            .alg_embed
            .iter()
            .enumerate()
            .map(|(a, col)| vector_from_wire(col, big.g.dim(), &format!("{location}.alg_embed[{a}]")))
            .collect::<Result<Vec<_>>>()?;
        let r = &self.grp_embed;
        let rows = |name: &str, m: &[Vec<i64>], n_rows: usize, n_cols: usize| -> Result<()> {
            let loc = format!("{location}.grp_embed.{name}");
            if m.len() != n_rows {
                return Err(schema(loc, format!("expected {n_rows} rows, found {}", m.len())));
            }
            match m.iter().position(|row| row.len() != n_cols) {
                Some(i) => Err(schema(format!("{loc}[{i}]"), format!("expected {n_cols} entries"))),
                None => Ok(()),
            }
        };
        let (kh, k) = (&small.k, &big.k);
        rows("torus", &r.torus, kh.torus_rank(), k.torus_rank())?;
        rows("from_torus", &r.from_torus, kh.finite_orders().len(), k.torus_rank())?;
        rows("from_finite", &r.from_finite, kh.finite_orders().len(), k.finite_orders().len())?;
        Ok(SubpairEmbedding {
            small,
            big,
            alg_embed,
            grp_embed: CharacterRestriction {
                torus: r.torus.clone(),
                from_torus: r.from_torus.clone(),
                from_finite: r.from_finite.clone(),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteModuleWire {
    pub weights: Vec<Vec<i64>>,
    /// One matrix per basis vector of the Lie algebra.
    pub action: Vec<MatrixWire>,
}

impl FiniteModuleWire {
    pub fn from_module<F: ExactScalar>(m: &FiniteModule<F>) -> Self {
        Self {
            weights: m.weights.iter().map(Character::flat).collect(),
            action: m.action.iter().map(MatrixWire::from_matrix).collect(),
        }
    }

    pub fn into_module<F: ExactScalar>(&self, pair: &Pair<F>, location: &str) -> Result<FiniteModule<F>> {
        let dim = self.weights.len();
        let weights = self
            .weights
            .iter()
            .enumerate()
            .map(|(j, w)| character_from_wire(&pair.k, w, &format!("{location}.weights[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        if self.action.len() != pair.g.dim() {
            return Err(schema(
                format!("{location}.action"),
                format!("expected one matrix per basis vector ({}), found {}", pair.g.dim(), self.action.len()),
            ));
        }
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(j, m)| m.into_matrix(Some((dim, dim)), &format!("{location}.action[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteModule::new(weights, action))
    }
}

/// Coefficient polynomial as `[exponents, value]` terms.
pub type PolyWire = Vec<(Vec<u32>, ScalarWire)>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandOpWire {
    /// Shift `s` maps to the coefficient `c_s(n, params)` of `f_n ↦ c_s f_{n+s}`.
    pub terms: BTreeMap<i64, PolyWire>,
}

fn poly_wire<F: ExactScalar>(p: &Poly<F>) -> PolyWire {
    p.terms().map(|(e, c)| (e.clone(), ScalarWire::from_scalar(c))).collect()
}

fn poly_from_wire<F: ExactScalar>(w: &PolyWire, nvars: usize, location: &str) -> Result<Poly<F>> {
    let mut p = Poly::zero(nvars);
    for (n, (e, c)) in w.iter().enumerate() {
        let loc = format!("{location}[{n}]");
        if e.len() != nvars {
            return Err(schema(loc, format!("expected {nvars} exponents (n, then the parameters), found {}", e.len())));
        }
        p.add_term(e.clone(), c.to_scalar(&loc)?);
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypeWeightWire {
    /// `[a, b]`: the torus component of type `n` is `a·n + b`.
    pub torus: Vec<(i64, i64)>,
    #[serde(default)]
    pub finite: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandModuleWire {
    pub parity: u8,
    pub param_names: Vec<String>,
    pub params: Vec<Rat>,
    pub weight: TypeWeightWire,
    pub ops: Vec<BandOpWire>,
}

impl BandModuleWire {
    pub fn from_module<F: ExactScalar>(m: &BandModule<F>) -> Self {
        Self {
            parity: m.parity,
            param_names: m.param_names.clone(),
            params: m.params.iter().cloned().map(Rat).collect(),
            weight: TypeWeightWire {
                torus: m.weight.torus.clone(),
                finite: m.weight.finite.clone(),
            },
            ops: m
                .ops
                .iter()
                .map(|op| BandOpWire {
                    terms: op.terms().map(|(s, p)| (s, poly_wire(p))).collect(),
                })
                .collect(),
        }
    }

    pub fn into_module<F: ExactScalar>(&self, pair: &Pair<F>, location: &str) -> Result<BandModule<F>> {
        if self.parity > 1 {
            return Err(schema(format!("{location}.parity"), "parity must be 0 or 1"));
        }
        if self.params.len() != self.param_names.len() {
            return Err(schema(format!("{location}.params"), "one value per parameter name is required"));
        }
        if self.weight.torus.len() != pair.k.torus_rank() || self.weight.finite.len() != pair.k.finite_orders().len() {
            return Err(schema(format!("{location}.weight"), "weight does not match the group of the pair"));
        }
        if self.ops.len() != pair.g.dim() {
            return Err(schema(
                format!("{location}.ops"),
                format!("expected one operator per basis vector ({}), found {}", pair.g.dim(), self.ops.len()),
            ));
        }
        let nvars = 1 + self.params.len();
        let mut ops = Vec::with_capacity(self.ops.len());
        for (j, op) in self.ops.iter().enumerate() {
            let mut terms = Vec::new();
            for (s, p) in &op.terms {
                let loc = format!("{location}.ops[{j}].terms.{s}");
                if s.rem_euclid(2) != 0 {
                    return Err(schema(loc, "shifts must be even"));
                }
                terms.push((*s, poly_from_wire(p, nvars, &loc)?));
            }
            ops.push(BandOp::from_terms(nvars, terms));
        }
        Ok(BandModule {
            parity: self.parity,
            param_names: self.param_names.clone(),
            params: self.params.iter().map(|r| r.0.clone()).collect(),
            ops,
            weight: TypeWeight {
                torus: self.weight.torus.clone(),
                finite: self.weight.finite.clone(),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexWire {
    pub lo: i64,
    pub dims: Vec<usize>,
    /// `d[k]` maps term `k` to term `k + 1`.
    pub d: Vec<MatrixWire>,
}

impl ComplexWire {
    pub fn from_complex<F: ExactScalar>(c: &Complex<F>) -> Self {
        Self {
            lo: c.lo,
            dims: c.dims.clone(),
            d: c.d.iter().map(MatrixWire::from_matrix).collect(),
        }
    }

    pub fn into_complex<F: ExactScalar>(&self, location: &str) -> Result<Complex<F>> {
        let d = self
            .d
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let shape = (self.dims.get(k + 1).copied().unwrap_or(0), self.dims.get(k).copied().unwrap_or(0));
                m.into_matrix(Some(shape), &format!("{location}.d[{k}]"))
            })
            .collect::<Result<Vec<_>>>()?;
        Complex::new(self.lo, self.dims.clone(), d).map_err(|e| schema(location, e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HComplexWire {
    pub complex: ComplexWire,
    pub modules: Vec<FiniteModuleWire>,
    /// `i[t][k]` maps term `k` to term `k − 1`.
    pub i: Vec<Vec<MatrixWire>>,
    pub headroom: Vec<Vec<u32>>,
}

impl HComplexWire {
    pub fn from_hcomplex<F: ExactScalar>(h: &HComplex<F>) -> Self {
        Self {
            complex: ComplexWire::from_complex(&h.complex),
            modules: h.modules.iter().map(FiniteModuleWire::from_module).collect(),
            i: h.i.iter().map(|it| it.iter().map(MatrixWire::from_matrix).collect()).collect(),
            headroom: h.headroom.clone(),
        }
    }

    pub fn into_hcomplex<F: ExactScalar>(&self, pair: &Pair<F>, location: &str) -> Result<HComplex<F>> {
        let complex = self.complex.into_complex(&format!("{location}.complex"))?;
        let modules = self
            .modules
            .iter()
            .enumerate()
            .map(|(k, m)| m.into_module(pair, &format!("{location}.modules[{k}]")))
            .collect::<Result<Vec<_>>>()?;
        if self.i.len() != pair.torus_rank() {
            return Err(schema(format!("{location}.i"), "expected one contraction per torus generator"));
        }
        let dims = &complex.dims;
        let i = self
            .i
            .iter()
            .enumerate()
            .map(|(t, it)| {
                it.iter()
                    .enumerate()
                    .map(|(k, m)| {
                        let below = if k == 0 { 0 } else { dims.get(k - 1).copied().unwrap_or(0) };
                        let shape = (below, dims.get(k).copied().unwrap_or(0));
                        m.into_matrix(Some(shape), &format!("{location}.i[{t}][{k}]"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        HComplex::new(complex, modules, i, self.headroom.clone()).map_err(|e| schema(location, e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeWire {
    pub dim: usize,
    pub representatives: Vec<Vec<ScalarWire>>,
    pub stabilization: Option<Stabilization>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportWire {
    pub degrees: BTreeMap<i64, DegreeWire>,
}

impl ReportWire {
    pub fn from_report<F: ExactScalar>(r: &HomologyReport<F>) -> Self {
        Self {
            degrees: r
                .degrees
                .iter()
                .map(|(n, d)| {
                    let wire = DegreeWire {
                        dim: d.dim,
                        representatives: d.representatives.iter().map(|v| vector_wire(v)).collect(),
                        stabilization: d.stabilization.clone(),
                    };
                    (*n, wire)
                })
                .collect(),
        }
    }

    pub fn into_report<F: ExactScalar>(&self, location: &str) -> Result<HomologyReport<F>> {
        let mut r = HomologyReport::default();
        for (n, d) in &self.degrees {
            let representatives = d
                .representatives
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let len = v.len();
                    vector_from_wire(v, len, &format!("{location}.degrees.{n}.representatives[{k}]"))
                })
                .collect::<Result<Vec<_>>>()?;
            r.insert(
                *n,
                DegreeData {
                    dim: d.dim,
                    representatives,
                    stabilization: d.stabilization.clone(),
                },
            );
        }
        Ok(r)
    }
}
