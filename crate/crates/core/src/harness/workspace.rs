//! Workspace documents: algebras, coalgebras, measurings, caps and tasks as
//! JSON, with every rational written as a `"p/q"` string.

use super::compute::TableKind;
use super::suites::{select_suites, DEFAULT_CAP};
use crate::algebra::{validate_algebra, validate_coalgebra, validate_measuring, AlgebraSpec, CoalgebraSpec, Measuring};
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Matrix, SparseVec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

/// A vector as `label → "p/q"`; absent labels are zero.
pub type VecDoc = BTreeMap<String, String>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub basis: Vec<String>,
    pub unit: VecDoc,
    #[serde(default)]
    pub commutative: bool,
    /// `"a*b" → a·b`; absent products are zero.
    pub products: BTreeMap<String, VecDoc>,
    /// `a → â`, when the algebra is involutive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<BTreeMap<String, VecDoc>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CoalgebraDoc {
    pub name: String,
    pub basis: Vec<String>,
    /// `x → {"y|z": c}` for `Δx = Σ c·y ⊗ z`.
    pub coproduct: BTreeMap<String, VecDoc>,
    pub counit: VecDoc,
    #[serde(default)]
    pub cocommutative: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct MeasuringDoc {
    pub name: String,
    pub coalgebra: String,
    pub source: String,
    pub target: String,
    /// `x → a → Φ(x)(a)`; absent entries are zero.
    pub phi: BTreeMap<String, BTreeMap<String, VecDoc>>,
    #[serde(default)]
    pub involutive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CapsDoc {
    /// Overrides the per-suite default top degree when set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default = "default_cap")]
    pub max_dim: usize,
}

fn default_cap() -> usize {
    DEFAULT_CAP
}

impl Default for CapsDoc {
    fn default() -> Self {
        Self { max_degree: None, max_dim: DEFAULT_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", deny_unknown_fields)]
pub enum TaskDoc {
    #[serde(rename_all = "camelCase")]
    Compute {
        table: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        algebra: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        measuring: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_degree: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        r: Option<usize>,
    },
    #[serde(rename_all = "camelCase")]
    Verify {
        suite: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        measuring: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_degree: Option<usize>,
    },
}

/// The document as written on disk.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct WorkspaceDoc {
    #[serde(default)]
    pub algebras: Vec<AlgebraDoc>,
    #[serde(default)]
    pub coalgebras: Vec<CoalgebraDoc>,
    #[serde(default)]
    pub measurings: Vec<MeasuringDoc>,
    /// Alternative measuring names.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub aliases: BTreeMap<String, String>,
    #[serde(default)]
    pub caps: CapsDoc,
    #[serde(default)]
    pub tasks: Vec<TaskDoc>,
}

/// A loaded and fully validated workspace.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub corpus: Corpus,
    pub aliases: BTreeMap<String, String>,
    pub caps: CapsDoc,
    pub tasks: Vec<TaskDoc>,
}

const BUNDLED: &str = include_str!("../../corpus/bundled.json");

impl Workspace {
    /// The bundled corpus file.
    pub fn bundled() -> Self {
        parse_workspace(BUNDLED).expect("bundled corpus is valid")
    }

    pub fn algebra(&self, name: &str) -> Result<&Arc<AlgebraSpec>> {
        self.corpus.algebra(name).ok_or_else(|| Error::UnknownName(format!("algebra {name}")))
    }

    /// A measuring by name or alias.
    pub fn measuring(&self, name: &str) -> Result<&Arc<Measuring>> {
        let real = self.aliases.get(name).map(String::as_str).unwrap_or(name);
        self.corpus.measuring(real).ok_or_else(|| Error::UnknownName(format!("measuring {name}")))
    }
}

pub fn load_workspace(path: impl AsRef<Path>) -> Result<Workspace> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_workspace(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn parse_workspace(text: &str) -> Result<Workspace> {
    let doc: WorkspaceDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    build(&doc)
}

fn invalid(at: &str, msg: impl std::fmt::Display) -> Error {
    Error::Validation(format!("{at}: {msg}"))
}

fn index_of(basis: &[String], label: &str, at: &str) -> Result<usize> {
    basis.iter().position(|b| b == label).ok_or_else(|| invalid(at, format!("unknown basis element {label:?}")))
}

fn vector(doc: &VecDoc, basis: &[String], at: &str) -> Result<SparseVec> {
    let mut entries = Vec::new();
    for (label, c) in doc {
        let c = parse_rational(c).map_err(|e| invalid(&format!("{at}[{label}]"), e))?;
        entries.push((index_of(basis, label, at)?, c));
    }
    Ok(SparseVec::from_entries(entries))
}

/// Columns of a linear map given as `label → image`; absent labels map to zero.
fn columns(doc: &BTreeMap<String, VecDoc>, src: &[String], dst: &[String], at: &str) -> Result<Matrix> {
    let mut cols = vec![SparseVec::new(); src.len()];
    for (label, v) in doc {
        cols[index_of(src, label, at)?] = vector(v, dst, &format!("{at}[{label}]"))?;
    }
    Ok(Matrix::from_columns(dst.len(), cols))
}

fn check_basis(basis: &[String], at: &str) -> Result<()> {
    for (i, b) in basis.iter().enumerate() {
        if b.is_empty() || b.contains(['*', '|']) {
            return Err(invalid(at, format!("basis label {b:?} is empty or contains '*' or '|'")));
        }
        if basis[..i].contains(b) {
            return Err(invalid(at, format!("basis label {b:?} repeats")));
        }
    }
    if basis.is_empty() {
        return Err(invalid(at, "empty basis"));
    }
    Ok(())
}

fn pair<'a>(key: &'a str, sep: char, at: &str) -> Result<(&'a str, &'a str)> {
    key.split_once(sep).ok_or_else(|| invalid(at, format!("key {key:?} is not of the form a{sep}b")))
}

fn algebra(doc: &AlgebraDoc, at: &str) -> Result<AlgebraSpec> {
    check_basis(&doc.basis, at)?;
    let d = doc.basis.len();
    let mut mult = vec![SparseVec::new(); d * d];
    for (key, v) in &doc.products {
        let (a, b) = pair(key, '*', at)?;
        let (i, j) = (index_of(&doc.basis, a, at)?, index_of(&doc.basis, b, at)?);
        mult[i * d + j] = vector(v, &doc.basis, &format!("{at}.products[{key}]"))?;
    }
    let unit = vector(&doc.unit, &doc.basis, &format!("{at}.unit"))?;
    let a = AlgebraSpec::new(&doc.name, doc.basis.clone(), mult, unit, doc.commutative).map_err(|e| invalid(at, e))?;
    match &doc.involution {
        None => Ok(a),
        Some(inv) => {
            let m = columns(inv, &doc.basis, &doc.basis, &format!("{at}.involution"))?;
            a.with_involution(m).map_err(|e| invalid(at, e))
        }
    }
}

fn coalgebra(doc: &CoalgebraDoc, at: &str) -> Result<CoalgebraSpec> {
    check_basis(&doc.basis, at)?;
    let n = doc.basis.len();
    let mut comult = vec![SparseVec::new(); n];
    for (x, terms) in &doc.coproduct {
        let mut entries = Vec::new();
        for (key, c) in terms {
            let here = format!("{at}.coproduct[{x}]");
            let (y, z) = pair(key, '|', &here)?;
            let c = parse_rational(c).map_err(|e| invalid(&here, e))?;
            entries.push((index_of(&doc.basis, y, &here)? * n + index_of(&doc.basis, z, &here)?, c));
        }
        comult[index_of(&doc.basis, x, at)?] = SparseVec::from_entries(entries);
    }
    let counit = vector(&doc.counit, &doc.basis, &format!("{at}.counit"))?;
    CoalgebraSpec::new(&doc.name, doc.basis.clone(), comult, counit, doc.cocommutative).map_err(|e| invalid(at, e))
}

fn unique<'a>(names: impl Iterator<Item = &'a str>, what: &str) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(invalid(what, format!("name {n:?} repeats")));
        }
    }
    Ok(())
}

fn first_violation(rep: crate::algebra::ValidationReport, at: &str) -> Result<()> {
    match rep.violations.first() {
        None => Ok(()),
        Some(v) => Err(invalid(at, format!("{} fails: {}", v.check, v.witness))),
    }
}

/// Builds every object, checks every axiom and resolves every reference.
pub fn build(doc: &WorkspaceDoc) -> Result<Workspace> {
    unique(doc.algebras.iter().map(|a| a.name.as_str()), "algebras")?;
    unique(doc.coalgebras.iter().map(|a| a.name.as_str()), "coalgebras")?;
    unique(doc.measurings.iter().map(|a| a.name.as_str()).chain(doc.aliases.keys().map(String::as_str)), "measurings")?;
    let mut corpus = Corpus::default();
    for (i, a) in doc.algebras.iter().enumerate() {
        let at = format!("algebras[{i}] ({})", a.name);
        let spec = algebra(a, &at)?;
        first_violation(validate_algebra(&spec), &at)?;
        corpus.algebras.push(Arc::new(spec));
    }
    for (i, c) in doc.coalgebras.iter().enumerate() {
        let at = format!("coalgebras[{i}] ({})", c.name);
        let spec = coalgebra(c, &at)?;
        first_violation(validate_coalgebra(&spec), &at)?;
        corpus.coalgebras.push(Arc::new(spec));
    }
    for (i, m) in doc.measurings.iter().enumerate() {
        let at = format!("measurings[{i}] ({})", m.name);
        let find_alg = |n: &str| corpus.algebra(n).cloned().ok_or_else(|| invalid(&at, format!("unknown algebra {n:?}")));
        let (src, dst) = (find_alg(&m.source)?, find_alg(&m.target)?);
        let c = corpus.coalgebra(&m.coalgebra).cloned().ok_or_else(|| invalid(&at, format!("unknown coalgebra {:?}", m.coalgebra)))?;
        let mut phi = vec![Matrix::zeros(dst.dim(), src.dim()); c.dim()];
        for (x, map) in &m.phi {
            phi[index_of(&c.basis, x, &at)?] = columns(map, &src.basis, &dst.basis, &format!("{at}.phi[{x}]"))?;
        }
        let mut spec = Measuring::new(&m.name, c, src, dst, phi).map_err(|e| invalid(&at, e))?;
        spec.involutive = m.involutive;
        first_violation(validate_measuring(&spec), &at)?;
        corpus.measurings.push(Arc::new(spec));
    }
    for (alias, real) in &doc.aliases {
        if corpus.measuring(real).is_none() {
            return Err(invalid(&format!("aliases[{alias}]"), format!("unknown measuring {real:?}")));
        }
    }
    if doc.caps.max_dim == 0 || doc.caps.max_degree == Some(0) {
        return Err(invalid("caps", "caps must be positive"));
    }
    let ws = Workspace { corpus, aliases: doc.aliases.clone(), caps: doc.caps.clone(), tasks: doc.tasks.clone() };
    for (i, t) in doc.tasks.iter().enumerate() {
        check_task(&ws, t).map_err(|e| invalid(&format!("tasks[{i}]"), e))?;
    }
    Ok(ws)
}

fn check_task(ws: &Workspace, t: &TaskDoc) -> Result<()> {
    match t {
        TaskDoc::Compute { table, algebra, measuring, .. } => {
            table.parse::<TableKind>()?;
            if algebra.is_none() && measuring.is_none() {
                return Err(Error::InvalidInput("compute task needs an algebra or a measuring".into()));
            }
            if let Some(a) = algebra {
                ws.algebra(a)?;
            }
            if let Some(m) = measuring {
                ws.measuring(m)?;
            }
        }
        TaskDoc::Verify { suite, measuring, .. } => {
            select_suites(suite)?;
            if let Some(m) = measuring {
                ws.measuring(m)?;
            }
        }
    }
    Ok(())
}

fn vec_doc(v: &SparseVec, basis: &[String]) -> VecDoc {
    v.iter().map(|(i, c)| (basis[i].clone(), format_rational(c))).collect()
}

fn map_doc(m: &Matrix, src: &[String], dst: &[String]) -> BTreeMap<String, VecDoc> {
    (0..m.cols()).filter(|&j| !m.column(j).is_zero()).map(|j| (src[j].clone(), vec_doc(m.column(j), dst))).collect()
}

/// The document describing `corpus`.
pub fn corpus_doc(corpus: &Corpus) -> WorkspaceDoc {
    let algebras = corpus
        .algebras
        .iter()
        .map(|a| {
            let d = a.dim();
            let mut products = BTreeMap::new();
            for i in 0..d {
                for j in 0..d {
                    let v = a.mul_basis(i, j);
                    if !v.is_zero() {
                        products.insert(format!("{}*{}", a.basis[i], a.basis[j]), vec_doc(v, &a.basis));
                    }
                }
            }
            AlgebraDoc {
                name: a.name.clone(),
                basis: a.basis.clone(),
                unit: vec_doc(&a.unit, &a.basis),
                commutative: a.commutative,
                products,
                involution: a.involution.as_ref().map(|m| map_doc(m, &a.basis, &a.basis)),
            }
        })
        .collect();
    let coalgebras = corpus
        .coalgebras
        .iter()
        .map(|c| {
            let n = c.dim();
            let coproduct = (0..n)
                .map(|x| {
                    let terms = c.comult_basis(x).iter().map(|(yz, v)| (format!("{}|{}", c.basis[yz / n], c.basis[yz % n]), format_rational(v))).collect();
                    (c.basis[x].clone(), terms)
                })
                .collect();
            CoalgebraDoc {
                name: c.name.clone(),
                basis: c.basis.clone(),
                coproduct,
                counit: vec_doc(&c.counit, &c.basis),
                cocommutative: c.cocommutative,
            }
        })
        .collect();
    let measurings = corpus
        .measurings
        .iter()
        .map(|m| MeasuringDoc {
            name: m.name.clone(),
            coalgebra: m.coalgebra.name.clone(),
            source: m.source.name.clone(),
            target: m.target.name.clone(),
            phi: m
                .phi
                .iter()
                .enumerate()
                .map(|(k, p)| (m.coalgebra.basis[k].clone(), map_doc(p, &m.source.basis, &m.target.basis)))
                .collect(),
            involutive: m.involutive,
        })
        .collect();
    WorkspaceDoc { algebras, coalgebras, measurings, ..Default::default() }
}
