//! Homology tables: HH, HC, HD, λ-summands, CE/CL and differential forms.

use super::suites::{HOCHSCHILD_TOP, LIE_TOP};
use super::workspace::Workspace;
use crate::algebra::{AlgebraSpec, Measuring};
use crate::complex::{induced_maps, ChainComplex};
use crate::cyclic::{cyclic_maps, hochschild_complex, tot_maps, CyclicData, CyclicModule};
use crate::dihedral::{DihedralComplex, DihedralMaps};
use crate::error::{Error, Result};
use crate::forms::Forms;
use crate::lambda::{summand_dims, Lambda};
use crate::linalg::{rank, Matrix, SparseVec, Subquotient};
use crate::lie::lie_homology_dims;
use serde::Serialize;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Hh,
    Hc,
    Hd,
    Lambda,
    Lie,
    Leibniz,
    Forms,
}

impl TableKind {
    pub const ALL: [TableKind; 7] =
        [TableKind::Hh, TableKind::Hc, TableKind::Hd, TableKind::Lambda, TableKind::Lie, TableKind::Leibniz, TableKind::Forms];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Hh => "hh",
            TableKind::Hc => "hc",
            TableKind::Hd => "hd",
            TableKind::Lambda => "lambda",
            TableKind::Lie => "lie",
            TableKind::Leibniz => "leibniz",
            TableKind::Forms => "forms",
        }
    }

    pub fn default_top(self) -> usize {
        match self {
            TableKind::Lie | TableKind::Leibniz => LIE_TOP,
            _ => HOCHSCHILD_TOP,
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::UnknownName(format!("table {s}")))
    }
}

#[derive(Clone, Debug, Default)]
pub struct ComputeRequest {
    pub algebra: Option<String>,
    pub measuring: Option<String>,
    pub max_degree: Option<usize>,
    pub r: Option<usize>,
}

/// A rendered table; `certified` says which degrees are exact homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub certified: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(title: String, certified: String, columns: &[&str]) -> Self {
        Self { title, certified, columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    /// The column `name` parsed as integers, for tests and summaries.
    pub fn column_usize(&self, name: &str) -> Vec<usize> {
        let k = self.columns.iter().position(|c| c == name).expect("known column");
        self.rows.iter().filter_map(|r| r[k].parse().ok()).collect()
    }
}

fn dims(h: &[Subquotient]) -> Vec<usize> {
    h.iter().map(Subquotient::dim).collect()
}

fn upto(c: &ChainComplex, last: usize) -> Result<Vec<Subquotient>> {
    (0..=last).map(|n| c.homology(n)).collect()
}

pub fn run_compute(ws: &Workspace, kind: TableKind, req: &ComputeRequest) -> Result<Table> {
    let cap = ws.caps.max_dim;
    let top = req.max_degree.or(ws.caps.max_degree).unwrap_or(kind.default_top());
    if top == 0 {
        return Err(Error::InvalidInput("max degree must be positive".into()));
    }
    let m = req.measuring.as_deref().map(|n| ws.measuring(n)).transpose()?;
    let a = match (&req.algebra, m) {
        (Some(n), _) => ws.algebra(n)?.clone(),
        (None, Some(m)) => m.source.clone(),
        (None, None) => return Err(Error::InvalidInput("compute needs --algebra or --measuring".into())),
    };
    if let Some(m) = m {
        if m.source.name != a.name {
            return Err(Error::InvalidInput(format!("measuring {} starts at {}, not {}", m.name, m.source.name, a.name)));
        }
        return match kind {
            TableKind::Hh | TableKind::Hc | TableKind::Hd => induced(kind, m, top, cap),
            _ => Err(Error::InvalidInput(format!("--measuring is supported for hh, hc and hd, not {}", kind.name()))),
        };
    }
    match kind {
        TableKind::Hh => {
            let h = hochschild_complex(&CyclicModule::new(a.clone(), top, cap)?)?;
            let mut t = Table::new(format!("HH_n({})", a.name), format!("n≤{}", top - 1), &["n", "dim C_n", "dim HH_n"]);
            for (n, d) in dims(&h.homologies()?).into_iter().enumerate() {
                t.push(vec![n.to_string(), h.dim(n).to_string(), d.to_string()]);
            }
            Ok(t)
        }
        TableKind::Hc => hc_table(&a, top, cap),
        TableKind::Hd => {
            let d = DihedralComplex::new(a.clone(), top, cap)?;
            let mut t = Table::new(format!("HD_n({})", a.name), format!("n≤{}", top - 1), &["n", "dim D_n", "dim HD_n"]);
            for (n, h) in dims(&d.homology()?).into_iter().enumerate() {
                t.push(vec![n.to_string(), d.dim(n).to_string(), h.to_string()]);
            }
            Ok(t)
        }
        TableKind::Lambda => lambda_table(&a, top, cap),
        TableKind::Lie | TableKind::Leibniz => {
            let r = req.r.unwrap_or(1);
            let leibniz = kind == TableKind::Leibniz;
            let h = lie_homology_dims(&a, r, top, cap, leibniz)?;
            let name = if leibniz { "HL" } else { "H^CE" };
            let mut t = Table::new(format!("{name}_n(gl{r}({}))", a.name), format!("n≤{}", top - 1), &["n", "dim"]);
            for (n, d) in h.into_iter().enumerate() {
                t.push(vec![n.to_string(), d.to_string()]);
            }
            Ok(t)
        }
        TableKind::Forms => {
            let f = Forms::new(a.clone(), top, cap)?;
            let mut t = Table::new(format!("Ω^p({})", a.name), format!("p≤{top}, de Rham p≤{}", top - 1), &["p", "dim Ω^p", "dim HDR^p"]);
            for p in 0..=top {
                let dr = if p < top { f.de_rham(p)?.dim().to_string() } else { "-".into() };
                t.push(vec![p.to_string(), f.dim(p).to_string(), dr]);
            }
            Ok(t)
        }
    }
}

/// HC by three routes: the cyclic bicomplex, the normalized mixed complex and `C̃`.
fn hc_table(a: &Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Table> {
    let c = CyclicData::new(a.clone(), top, cap)?;
    let cert = top.saturating_sub(2);
    let routes = [dims(&upto(&c.tot.complex, cert)?), dims(&upto(&c.mixed_tot.complex, cert)?), dims(&upto(&c.connes, cert)?)];
    let mut t = Table::new(format!("HC_n({})", a.name), format!("n≤{cert}"), &["n", "Tot(CC)", "Tot(C̄,b,B)", "C̃", "agree"]);
    for n in 0..=cert {
        let v = [routes[0][n], routes[1][n], routes[2][n]];
        let agree = v.iter().all(|&x| x == v[0]);
        t.push(vec![n.to_string(), v[0].to_string(), v[1].to_string(), v[2].to_string(), agree.to_string()]);
    }
    Ok(t)
}

/// `HH^(i)_n` and `HC^(i)_n` with row sums against the totals.
fn lambda_table(a: &Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Table> {
    let l = Lambda::new(a.clone(), top, cap)?;
    let cert = top.saturating_sub(2);
    let hh = l.hh(top - 1)?;
    let hc = l.hc(cert)?;
    let mut cols = vec!["group".to_string(), "n".into(), "total".into()];
    cols.extend((0..top).map(|i| format!("({i})")));
    cols.extend(["sum".into(), "matches".into()]);
    let mut t = Table { title: format!("λ-decomposition of {}", a.name), certified: format!("HH n≤{}, HC n≤{cert}", top - 1), columns: cols, rows: Vec::new() };
    for (group, h, idems) in [("HH", &hh, l.hh_idempotents(&hh)?), ("HC", &hc, l.hc_idempotents(&hc)?)] {
        for (n, row) in summand_dims(&idems).into_iter().enumerate() {
            let sum: usize = row.iter().sum();
            let mut r = vec![group.to_string(), n.to_string(), h[n].dim().to_string()];
            r.extend((0..top).map(|i| row.get(i).map_or("-".into(), |d| d.to_string())));
            r.extend([sum.to_string(), (sum == h[n].dim()).to_string()]);
            t.push(r);
        }
    }
    Ok(t)
}

/// Ranks of the maps induced by each coalgebra basis element.
fn induced(kind: TableKind, m: &Measuring, top: usize, cap: usize) -> Result<Table> {
    let k = m.coalgebra.dim();
    let (groups, cert, maps): (String, usize, Vec<(Vec<usize>, Vec<usize>, Vec<Matrix>)>) = match kind {
        TableKind::Hh => {
            let s = hochschild_complex(&CyclicModule::new(m.source.clone(), top, cap)?)?;
            let d = hochschild_complex(&CyclicModule::new(m.target.clone(), top, cap)?)?;
            let (hs, hd) = (s.homologies()?, d.homologies()?);
            let maps = (0..k)
                .map(|y| Ok((dims(&hs), dims(&hd), induced_maps(&cyclic_maps(m, &SparseVec::unit(y), top, cap)?[..top], &hs, &hd)?)))
                .collect::<Result<_>>()?;
            ("HH".into(), top - 1, maps)
        }
        TableKind::Hc => {
            let cert = top.saturating_sub(2);
            let s = CyclicData::new(m.source.clone(), top, cap)?;
            let d = CyclicData::new(m.target.clone(), top, cap)?;
            let (hs, hd) = (upto(&s.tot.complex, cert)?, upto(&d.tot.complex, cert)?);
            let maps = (0..k)
                .map(|y| {
                    let f = tot_maps(&s.tot, &d.tot, &cyclic_maps(m, &SparseVec::unit(y), top, cap)?);
                    Ok((dims(&hs), dims(&hd), induced_maps(&f[..=cert], &hs, &hd)?))
                })
                .collect::<Result<_>>()?;
            ("HC".into(), cert, maps)
        }
        _ => {
            let s = DihedralComplex::new(m.source.clone(), top, cap)?;
            let d = DihedralComplex::new(m.target.clone(), top, cap)?;
            let (hs, hd) = (s.homology()?, d.homology()?);
            let maps = (0..k)
                .map(|y| {
                    let f = DihedralMaps::new(m, &SparseVec::unit(y), &s, &d, cap)?;
                    Ok((dims(&hs), dims(&hd), induced_maps(&f.bar[..top], &hs, &hd)?))
                })
                .collect::<Result<_>>()?;
            ("HD".into(), top - 1, maps)
        }
    };
    let mut cols = vec!["n".to_string(), format!("dim {groups}({})", m.source.name), format!("dim {groups}({})", m.target.name)];
    cols.extend(m.coalgebra.basis.iter().map(|x| format!("rank {x}")));
    let mut t = Table { title: format!("{groups}^Φ(x) for {}", m.name), certified: format!("n≤{cert}"), columns: cols, rows: Vec::new() };
    for n in 0..=cert {
        let mut row = vec![n.to_string(), maps[0].0[n].to_string(), maps[0].1[n].to_string()];
        row.extend(maps.iter().map(|(_, _, f)| rank(&f[n]).to_string()));
        t.push(row);
    }
    Ok(t)
}
