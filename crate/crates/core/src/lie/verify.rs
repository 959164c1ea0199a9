//! Verification suites for the Lie and Leibniz side.

use super::algebra::{scalar_matrices, validate_leibniz, validate_lie, validate_lie_measuring, LieAlgebra, LieMeasuring};
use super::coinvariants::{adjoint_matrices, Coinvariants};
use super::complexes::{CeComplex, ClComplex};
use super::trace::ThetaTrace;
use super::vcomplex::VComplex;
use crate::algebra::words::{word_index, word_of};
use crate::algebra::{mat_index, matrix_measuring, AlgebraSpec, Measuring};
use crate::complex::{chain_map_defect, induced_maps, ChainComplex};
use crate::cyclic::{cyclic_maps, hochschild_complex, quotient_maps};
use crate::error::Result;
use crate::forms::Wedges;
use crate::linalg::{inverse, Matrix, Rational, SparseVec, Subquotient};
use crate::report::{measuring_subject, Checks};
use std::sync::Arc;

/// Matrix sizes checked by the `gl_r` suites.
pub const MATRIX_SIZES: [usize; 2] = [1, 2];

fn defect_text(d: Option<(usize, crate::linalg::Difference)>) -> Option<String> {
    d.map(|(n, e)| format!("degree {n}: {e}"))
}

/// `Δx_y = Σ c · x_a ⊗ x_b` as index triples.
fn coproduct_terms(m: &Measuring, y: usize) -> Vec<(usize, usize, Rational)> {
    let n = m.coalgebra.dim();
    m.coalgebra.comult_basis(y).iter().map(|(ab, c)| (ab / n, ab % n, c.clone())).collect()
}

/// `Σ c · f_a[p] ⊗ f_b[q]` over `Δx_y = Σ c · x_a ⊗ x_b`.
fn kron_sum(m: &Measuring, y: usize, maps: &[Vec<Matrix>], p: usize, q: usize) -> Matrix {
    let (f, g) = (&maps[y][p], &maps[y][q]);
    let mut acc = Matrix::zeros(f.rows() * g.rows(), f.cols() * g.cols());
    for (a, b, c) in coproduct_terms(m, y) {
        acc = acc.add(&maps[a][p].kron(&maps[b][q]).scaled(&c));
    }
    acc
}

fn homologies(c: &ChainComplex, upto: usize) -> Result<Vec<Subquotient>> {
    (0..=upto).map(|n| c.homology(n)).collect()
}

/// Reports `gl_r(Φ)` as a Lie measuring and returns it, or `None` after a failure record.
fn gl_measuring(ch: &mut Checks, m: &Measuring, r: usize) -> Option<LieMeasuring> {
    let lm = LieMeasuring::gl(m, r);
    if let Err(e) = m.require_cocommutative() {
        ch.fail(&format!("gl{r}: cocommutative"), "", e.to_string());
        return None;
    }
    let rep = validate_lie_measuring(&lm);
    ch.expect_none(&format!("gl{r}: bracket rule"), "basis pairs", rep.violations.first().map(|v| v.witness.clone()));
    rep.is_ok().then_some(lm)
}

pub fn verify_ce_coproduct(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "ce-coproduct",
        "Λ(δ) then Künneth splitting intertwines CE^Ψ(x) with CE^Ψ(x₍₁₎) ⊗ CE^Ψ(x₍₂₎)",
        measuring_subject(m),
    );
    for r in MATRIX_SIZES {
        let Some(lm) = gl_measuring(&mut ch, m, r) else { continue };
        let Some((t, (s, d))) = ch.fit(&format!("gl{r}: CE complexes"), top, |t| {
            Ok((CeComplex::new(lm.source.clone(), t, cap)?, CeComplex::new(lm.target.clone(), t, cap)?))
        }) else {
            continue;
        };
        for (tag, c) in [("source", &s), ("target", &d)] {
            ch.expect_none(&format!("gl{r}: {tag} d² = 0"), format!("n≤{t}"), defect_text(c.complex.square_zero_defect()));
        }
        let maps: Vec<Vec<Matrix>> = match (0..m.coalgebra.dim())
            .map(|y| CeComplex::measuring_maps(&lm, &SparseVec::unit(y), &s, &d))
            .collect::<Result<_>>()
        {
            Ok(v) => v,
            Err(e) => {
                ch.fail(&format!("gl{r}: measuring maps"), "", e.to_string());
                continue;
            }
        };
        for (y, f) in maps.iter().enumerate() {
            ch.expect_none(&format!("gl{r}: chain map, x{y}"), format!("n≤{t}"), defect_text(chain_map_defect(f, &s.complex, &d.complex)));
            for n in 0..=t {
                for p in 0..=n {
                    let lhs = d.coproduct(n, p).mul(&f[n]);
                    let rhs = kron_sum(m, y, &maps, p, n - p).mul(&s.coproduct(n, p));
                    ch.matrices_equal(&format!("gl{r}: coproduct square, x{y}"), format!("n={n}, (p,q)=({p},{})", n - p), &lhs, &rhs);
                }
            }
        }
    }
    ch
}

pub fn verify_leibniz_coproduct(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "leibniz-coproduct",
        "CL^Ψ(x) is a chain map and every tensor split of (g ⊕ g)^{⊗n} intertwines CL^Ψ(x) with CL^Ψ(x₍₁₎) ⊗ CL^Ψ(x₍₂₎)",
        measuring_subject(m),
    );
    for r in MATRIX_SIZES {
        let Some(lm) = gl_measuring(&mut ch, m, r) else { continue };
        for (tag, g) in [("source", &lm.source), ("target", &lm.target)] {
            let rep = validate_leibniz(g);
            ch.expect_none(&format!("gl{r}: {tag} Leibniz identity"), "basis triples", rep.violations.first().map(|v| v.witness.clone()));
        }
        let Some((t, (s, d))) = ch.fit(&format!("gl{r}: CL complexes"), top, |t| {
            Ok((ClComplex::new(lm.source.clone(), t, cap)?, ClComplex::new(lm.target.clone(), t, cap)?))
        }) else {
            continue;
        };
        for (tag, c) in [("source", &s), ("target", &d)] {
            ch.expect_none(&format!("gl{r}: {tag} d² = 0"), format!("n≤{t}"), defect_text(c.complex.square_zero_defect()));
        }
        let maps: Vec<Vec<Matrix>> = match (0..m.coalgebra.dim())
            .map(|y| ClComplex::measuring_maps(&lm, &SparseVec::unit(y), &s, &d))
            .collect::<Result<_>>()
        {
            Ok(v) => v,
            Err(e) => {
                ch.fail(&format!("gl{r}: measuring maps"), "", e.to_string());
                continue;
            }
        };
        for (y, f) in maps.iter().enumerate() {
            ch.expect_none(&format!("gl{r}: chain map, x{y}"), format!("n≤{t}"), defect_text(chain_map_defect(f, &s.complex, &d.complex)));
            for n in 0..=t {
                let mut ok = None;
                'subsets: for p in 0..=n {
                    for sub in Wedges::new(n, p).combos {
                        let lhs = d.split(n, &sub).mul(&f[n]);
                        let rhs = kron_sum(m, y, &maps, p, n - p).mul(&s.split(n, &sub));
                        if let Some(e) = lhs.first_difference(&rhs) {
                            ok = Some(format!("slots {sub:?}: {e}"));
                            break 'subsets;
                        }
                    }
                }
                ch.expect_none(&format!("gl{r}: tensor split squares, x{y}"), format!("n={n}, all {} splits", 1usize << n), ok);
            }
        }
    }
    ch
}

pub fn verify_theta_trace(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "theta-trace",
        "C̃^{M_r(Φ)}(x)∘θ = θ∘CE^{gl_r(Φ)}(x) and C̃^Φ(x)∘tr = tr∘C̃^{M_r(Φ)}(x)",
        measuring_subject(m),
    );
    for r in MATRIX_SIZES {
        let Some(lm) = gl_measuring(&mut ch, m, r) else { continue };
        let Some((t, (s, d))) = ch.fit(&format!("r={r}: θ and trace"), top, |t| {
            Ok((ThetaTrace::new(m.source.clone(), r, t, cap)?, ThetaTrace::new(m.target.clone(), r, t, cap)?))
        }) else {
            continue;
        };
        for (tag, tt) in [("source", &s), ("target", &d)] {
            theta_trace_structure(&mut ch, &format!("r={r}: {tag}"), tt);
        }
        let mm = matrix_measuring(m, r);
        for y in 0..m.coalgebra.dim() {
            let x = SparseVec::unit(y);
            let maps = (|| -> Result<_> {
                let ce = CeComplex::measuring_maps(&lm, &x, &s.ce, &d.ce)?;
                let cm = quotient_maps(&cyclic_maps(&mm, &x, t, cap)?, &s.matrices.quots, &d.matrices.quots)?;
                let cb = quotient_maps(&cyclic_maps(m, &x, t, cap)?, &s.base.quots, &d.base.quots)?;
                Ok((ce, cm, cb))
            })();
            let Some((ce, cm, cb)) = ch.result(&format!("r={r}: measuring maps, x{y}"), format!("n≤{t}"), maps) else { continue };
            for n in 0..=t {
                let deg = format!("n={n}");
                ch.matrices_equal(&format!("r={r}: θ square, x{y}"), deg.clone(), &cm[n].mul(&s.theta[n]), &d.theta[n].mul(&ce[n + 1]));
                ch.matrices_equal(&format!("r={r}: trace square, x{y}"), deg.clone(), &cb[n].mul(&s.trace[n]), &d.trace[n].mul(&cm[n]));
                ch.matrices_equal(
                    &format!("r={r}: tr∘θ square, x{y}"),
                    deg,
                    &cb[n].mul(&s.trace[n]).mul(&s.theta[n]),
                    &d.trace[n].mul(&d.theta[n]).mul(&ce[n + 1]),
                );
            }
        }
    }
    ch
}

/// Alternation and chain-map properties of θ and tr, and the trace isomorphism on homology.
fn theta_trace_structure(ch: &mut Checks, tag: &str, tt: &ThetaTrace) {
    let t = tt.top;
    // Swapping α₀ and α₁ changes the sign.
    let mut alt = None;
    'outer: for n in 1..=t {
        for c in &tt.ce.wedges[n + 1].combos {
            let mut w = c.clone();
            w.swap(0, 1);
            let s = tt.theta_on_word(&w).add(&tt.theta_on_word(c));
            if !s.is_zero() {
                alt = Some(format!("θ{c:?} + θ(swapped) ≠ 0 in degree {n}"));
                break 'outer;
            }
        }
    }
    ch.expect_none(&format!("{tag} θ alternating"), format!("n≤{t}"), alt);
    let conn_m = &tt.matrices.complex;
    let conn_b = &tt.base.complex;
    for n in 1..=t {
        ch.matrices_equal(
            &format!("{tag} θ chain map"),
            format!("n={n}"),
            &tt.theta[n - 1].mul(tt.ce.complex.d(n + 1)),
            &conn_m.d(n).mul(&tt.theta[n]),
        );
        ch.matrices_equal(
            &format!("{tag} trace chain map"),
            format!("n={n}"),
            &tt.trace[n - 1].mul(conn_m.d(n)),
            &conn_b.d(n).mul(&tt.trace[n]),
        );
    }
    if t == 0 {
        ch.skip(&format!("{tag} trace iso on HC"), "n=0", "needs degree 1");
        return;
    }
    let iso = (|| -> Result<Option<String>> {
        let hm = homologies(conn_m, t - 1)?;
        let hb = homologies(conn_b, t - 1)?;
        let f = induced_maps(&tt.trace[..t], &hm, &hb)?;
        for (n, g) in f.iter().enumerate() {
            if g.rows() != g.cols() || inverse(g).is_err() {
                return Ok(Some(format!("degree {n}: {}×{} map of rank below full", g.rows(), g.cols())));
            }
        }
        Ok(None)
    })();
    match iso {
        Ok(w) => ch.expect_none(&format!("{tag} trace iso on HC"), format!("n≤{}", t - 1), w),
        Err(e) => ch.fail(&format!("{tag} trace iso on HC"), format!("n≤{}", t - 1), e.to_string()),
    }
}

pub fn verify_v_complex(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "v-complex",
        "V^Φ(x) is presimplicial, V^Φ(x)∘ι = ι∘C^Φ(x) and C^Φ(x)∘ζ = ζ∘V^Φ(x)",
        measuring_subject(m),
    );
    if let Err(e) = m.require_cocommutative() {
        ch.fail("cocommutative", "", e.to_string());
        return ch;
    }
    let Some((t, (s, d))) = ch.fit("V complexes", top, |t| {
        Ok((VComplex::new(m.source.clone(), t, cap)?, VComplex::new(m.target.clone(), t, cap)?))
    }) else {
        return ch;
    };
    for n in 0..=t {
        ch.expect_none("ω(σ) table", format!("n={n}"), s.words[n].defect());
    }
    for (tag, v) in [("source", &s), ("target", &d)] {
        v_structure(&mut ch, tag, v);
    }
    for y in 0..m.coalgebra.dim() {
        let x = SparseVec::unit(y);
        let maps = (|| -> Result<_> { Ok((VComplex::measuring_maps(m, &x, &s, &d, cap)?, cyclic_maps(m, &x, t, cap)?)) })();
        let Some((fv, fc)) = ch.result(&format!("measuring maps, x{y}"), format!("n≤{t}"), maps) else { continue };
        let mut face = None;
        'faces: for n in 1..=t {
            for i in 0..=n {
                if let Some(e) = d.face(n, i).mul(&fv[n]).first_difference(&fv[n - 1].mul(&s.face(n, i))) {
                    face = Some(format!("d_{i} in degree {n}: {e}"));
                    break 'faces;
                }
            }
        }
        ch.expect_none(&format!("V^Φ presimplicial, x{y}"), format!("n≤{t}"), face);
        for n in 0..=t {
            ch.matrices_equal(&format!("ι square, x{y}"), format!("n={n}"), &fv[n].mul(&s.iota(n)), &d.iota(n).mul(&fc[n]));
            ch.matrices_equal(&format!("ζ square, x{y}"), format!("n={n}"), &fc[n].mul(&s.zeta(n)), &d.zeta(n).mul(&fv[n]));
        }
    }
    ch
}

fn v_structure(ch: &mut Checks, tag: &str, v: &VComplex) {
    let t = v.top();
    let mut ident = None;
    'id: for n in 2..=t {
        for j in 1..=n {
            for i in 0..j {
                let lhs = v.face(n - 1, i).mul(&v.face(n, j));
                let rhs = v.face(n - 1, j - 1).mul(&v.face(n, i));
                if let Some(e) = lhs.first_difference(&rhs) {
                    ident = Some(format!("d_{i} d_{j} ≠ d_{} d_{i} in degree {n}: {e}", j - 1));
                    break 'id;
                }
            }
        }
    }
    ch.expect_none(&format!("{tag} presimplicial identities"), format!("n≤{t}"), ident);
    let mut faces = None;
    'f: for n in 1..=t {
        for i in 0..=n {
            let c = v.cm.face(n, i);
            if let Some(e) = v.face(n, i).mul(&v.iota(n)).first_difference(&v.iota(n - 1).mul(&c)) {
                faces = Some(format!("ι against d_{i} in degree {n}: {e}"));
                break 'f;
            }
            if let Some(e) = c.mul(&v.zeta(n)).first_difference(&v.zeta(n - 1).mul(&v.face(n, i))) {
                faces = Some(format!("ζ against d_{i} in degree {n}: {e}"));
                break 'f;
            }
        }
    }
    ch.expect_none(&format!("{tag} ι and ζ presimplicial"), format!("n≤{t}"), faces);
    for n in 0..=t {
        ch.matrices_equal(&format!("{tag} ζ∘ι = id"), format!("n={n}"), &v.zeta(n).mul(&v.iota(n)), &Matrix::identity(v.cm.dim(n)));
    }
    if t == 0 {
        return;
    }
    let iso = (|| -> Result<Option<String>> {
        let vc = v.complex()?;
        let hc = hochschild_complex(&v.cm)?;
        let hv = homologies(&vc, t - 1)?;
        let hh = homologies(&hc, t - 1)?;
        let iotas: Vec<Matrix> = (0..t).map(|n| v.iota(n)).collect();
        for (n, g) in induced_maps(&iotas, &hh, &hv)?.iter().enumerate() {
            if g.rows() != g.cols() || inverse(g).is_err() {
                return Ok(Some(format!("degree {n}: HH has dim {} but H(V) has dim {}", g.cols(), g.rows())));
            }
        }
        Ok(None)
    })();
    match iso {
        Ok(w) => ch.expect_none(&format!("{tag} ι is a quasi-isomorphism"), format!("n≤{}", t - 1), w),
        Err(e) => ch.fail(&format!("{tag} ι is a quasi-isomorphism"), format!("n≤{}", t - 1), e.to_string()),
    }
}

/// CE or CL side of the coinvariant suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Ce,
    Cl,
}

/// A complex of `gl_r(A)` together with its coinvariants.
struct Reduced {
    complex: ChainComplex,
    coinv: Coinvariants,
    ce: Option<CeComplex>,
    cl: Option<ClComplex>,
}

impl Reduced {
    fn new(side: Side, a: &AlgebraSpec, g: Arc<LieAlgebra>, top: usize, cap: usize) -> Result<Self> {
        let r = match g.kind {
            super::LieKind::Gl { r } => r,
            _ => 1,
        };
        let ads = adjoint_matrices(&g, &scalar_matrices(a, r));
        match side {
            Side::Ce => {
                let ce = CeComplex::new(g, top, cap)?;
                let coinv = Coinvariants::of_ce(&ce, &ads)?;
                Ok(Self { complex: ce.complex.clone(), coinv, ce: Some(ce), cl: None })
            }
            Side::Cl => {
                let cl = ClComplex::new(g, top, cap)?;
                let coinv = Coinvariants::of_cl(&cl, &ads)?;
                Ok(Self { complex: cl.complex.clone(), coinv, ce: None, cl: Some(cl) })
            }
        }
    }

    fn top(&self) -> usize {
        self.complex.top()
    }

    fn maps(&self, lm: &LieMeasuring, x: &SparseVec, dst: &Self) -> Result<Vec<Matrix>> {
        match (&self.ce, &dst.ce, &self.cl, &dst.cl) {
            (Some(s), Some(d), _, _) => CeComplex::measuring_maps(lm, x, s, d),
            (_, _, Some(s), Some(d)) => ClComplex::measuring_maps(lm, x, s, d),
            _ => unreachable!("both sides are built the same way"),
        }
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Ce => "CE",
        Side::Cl => "CL",
    }
}

pub fn verify_coinvariants(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "coinvariants",
        "gl_r(K)-coinvariants: differentials and CE^Ψ(x), CL^Ψ(x) descend, and the projections commute with them",
        measuring_subject(m),
    );
    for r in MATRIX_SIZES {
        let Some(lm) = gl_measuring(&mut ch, m, r) else { continue };
        for side in [Side::Ce, Side::Cl] {
            let tag = format!("{}, r={r}", side_name(side));
            let Some((t, (s, d))) = ch.fit(&format!("{tag}: coinvariant complexes"), top, |t| {
                Ok((
                    Reduced::new(side, &m.source, lm.source.clone(), t, cap)?,
                    Reduced::new(side, &m.target, lm.target.clone(), t, cap)?,
                ))
            }) else {
                continue;
            };
            for (which, c) in [("source", &s), ("target", &d)] {
                ch.expect_none(&format!("{tag}: {which} coinvariant d² = 0"), format!("n≤{t}"), defect_text(c.coinv.complex.square_zero_defect()));
                if t >= 1 {
                    let q = (|| -> Result<Option<String>> {
                        let h = homologies(&c.complex, t - 1)?;
                        let hb = homologies(&c.coinv.complex, t - 1)?;
                        let p: Vec<Matrix> = (0..t).map(|n| c.coinv.quotients[n].proj().clone()).collect();
                        for (n, g) in induced_maps(&p, &h, &hb)?.iter().enumerate() {
                            if g.rows() != g.cols() || inverse(g).is_err() {
                                return Ok(Some(format!("degree {n}: {} → {}", g.cols(), g.rows())));
                            }
                        }
                        Ok(None)
                    })();
                    match q {
                        Ok(w) => ch.expect_none(&format!("{tag}: {which} projection is a quasi-isomorphism"), format!("n≤{}", t - 1), w),
                        Err(e) => ch.fail(&format!("{tag}: {which} projection is a quasi-isomorphism"), format!("n≤{}", t - 1), e.to_string()),
                    }
                }
            }
            for y in 0..m.coalgebra.dim() {
                let x = SparseVec::unit(y);
                let Some(f) = ch.result(&format!("{tag}: measuring maps, x{y}"), format!("n≤{t}"), s.maps(&lm, &x, &d)) else {
                    continue;
                };
                let Some(fb) = ch.result(
                    &format!("{tag}: maps descend to coinvariants, x{y}"),
                    format!("n≤{t}"),
                    quotient_maps(&f, &s.coinv.quotients, &d.coinv.quotients),
                ) else {
                    continue;
                };
                ch.expect_none(
                    &format!("{tag}: descended chain map, x{y}"),
                    format!("n≤{t}"),
                    defect_text(chain_map_defect(&fb, &s.coinv.complex, &d.coinv.complex)),
                );
                for n in 0..=t.min(s.top()) {
                    ch.matrices_equal(
                        &format!("{tag}: projection square, x{y}"),
                        format!("n={n}"),
                        &d.coinv.quotients[n].proj().mul(&f[n]),
                        &fb[n].mul(s.coinv.quotients[n].proj()),
                    );
                }
            }
        }
    }
    ch
}

/// `gl_1(A) ⊕ gl_1(A) → gl_2(A)` on basis indices: block `(0,0)` or `(1,1)`.
fn block_index(d: usize, which: usize, k: usize) -> usize {
    mat_index(2, d, which, which, k)
}

/// The product `(p, q) → p + q` on coinvariant bases, from `gl_1` to `gl_2`.
fn coinvariant_product(side: Side, d: usize, src: &Reduced, dst: &Reduced, p: usize, q: usize) -> Result<Matrix> {
    let (qs, qd) = (&src.coinv.quotients, &dst.coinv.quotients);
    let chain = |u: usize, v: usize| -> SparseVec {
        match side {
            Side::Ce => {
                let (ce1, ce2) = (src.ce.as_ref().expect("CE"), dst.ce.as_ref().expect("CE"));
                let mut w: Vec<usize> = ce1.wedges[p].combos[u].iter().map(|&k| block_index(d, 0, k)).collect();
                w.extend(ce1.wedges[q].combos[v].iter().map(|&k| block_index(d, 1, k)));
                ce2.normalize_words(p + q, [(w, Rational::from_integer(1.into()))])
            }
            Side::Cl => {
                let g2 = dst.cl.as_ref().expect("CL").algebra.dim();
                let mut w: Vec<usize> = word_of(u, d, p).into_iter().map(|k| block_index(d, 0, k)).collect();
                w.extend(word_of(v, d, q).into_iter().map(|k| block_index(d, 1, k)));
                SparseVec::unit(word_index(&w, g2))
            }
        }
    };
    let (dp, dq) = (src.complex.dim(p), src.complex.dim(q));
    // Chain level on the full tensor product of the sources.
    let full = Matrix::from_fn(dst.complex.dim(p + q), dp * dq, |j| chain(j / dq, j % dq));
    let proj_src = qs[p].proj().kron(qs[q].proj());
    let lift_src = qs[p].lift().kron(&qs[q].lift());
    let bar = qd[p + q].proj().mul(&full).mul(&lift_src);
    let lhs = qd[p + q].proj().mul(&full);
    match lhs.first_difference(&bar.mul(&proj_src)) {
        None => Ok(bar),
        Some(e) => Err(crate::Error::RelationNotPreserved(format!("product ({p},{q}) on coinvariants: {e}"))),
    }
}

fn verify_products(side: Side, m: &Measuring, top: usize, cap: usize) -> Checks {
    let (suite, anchor) = match side {
        Side::Ce => ("ce-coinvariant-products", "x(u·v) = x₍₁₎(u)·x₍₂₎(v) for the ⊕ product on (Λ gl(A))_{gl(K)}"),
        Side::Cl => ("cl-coinvariant-products", "x(u·v) = x₍₁₎(u)·x₍₂₎(v) for the ⊕ product on (gl(A)^{⊗•})_{gl(K)}"),
    };
    let mut ch = Checks::new(suite, anchor, measuring_subject(m));
    let (Some(l1), Some(l2)) = (gl_measuring(&mut ch, m, 1), gl_measuring(&mut ch, m, 2)) else { return ch };
    let Some((t, (s1, d1, s2, d2))) = ch.fit("coinvariant complexes", top, |t| {
        Ok((
            Reduced::new(side, &m.source, l1.source.clone(), t, cap)?,
            Reduced::new(side, &m.target, l1.target.clone(), t, cap)?,
            Reduced::new(side, &m.source, l2.source.clone(), t, cap)?,
            Reduced::new(side, &m.target, l2.target.clone(), t, cap)?,
        ))
    }) else {
        return ch;
    };
    let (ds, dt) = (m.source.dim(), m.target.dim());
    let mut prods = Vec::new();
    for n in 0..=t {
        for p in 0..=n {
            let r = (|| -> Result<_> {
                Ok((coinvariant_product(side, ds, &s1, &s2, p, n - p)?, coinvariant_product(side, dt, &d1, &d2, p, n - p)?))
            })();
            if let Some(pr) = ch.result("product descends", format!("(p,q)=({p},{})", n - p), r) {
                ch.pass("product descends", format!("(p,q)=({p},{})", n - p));
                prods.push((p, n - p, pr));
            }
        }
    }
    let bars = |lm: &LieMeasuring, s: &Reduced, d: &Reduced, y: usize| -> Result<Vec<Matrix>> {
        quotient_maps(&s.maps(lm, &SparseVec::unit(y), d)?, &s.coinv.quotients, &d.coinv.quotients)
    };
    let ny = m.coalgebra.dim();
    let small = (0..ny).map(|y| bars(&l1, &s1, &d1, y)).collect::<Result<Vec<_>>>();
    let big = (0..ny).map(|y| bars(&l2, &s2, &d2, y)).collect::<Result<Vec<_>>>();
    let (Some(small), Some(big)) = (ch.result("descended measuring maps", format!("n≤{t}"), small), ch.result("descended measuring maps", format!("n≤{t}"), big))
    else {
        return ch;
    };
    for y in 0..ny {
        for (p, q, (ps, pd)) in &prods {
            let lhs = big[y][p + q].mul(ps);
            let rhs = pd.mul(&kron_sum(m, y, &small, *p, *q));
            ch.matrices_equal(&format!("product measuring, x{y}"), format!("(p,q)=({p},{q})"), &lhs, &rhs);
        }
    }
    ch
}

pub fn verify_ce_coinvariant_products(m: &Measuring, top: usize, cap: usize) -> Checks {
    verify_products(Side::Ce, m, top, cap)
}

pub fn verify_cl_coinvariant_products(m: &Measuring, top: usize, cap: usize) -> Checks {
    verify_products(Side::Cl, m, top, cap)
}

/// CE or CL homology dimensions of `gl_r(A)` in degrees `0..top`.
pub fn lie_homology_dims(a: &Arc<AlgebraSpec>, r: usize, top: usize, cap: usize, leibniz: bool) -> Result<Vec<usize>> {
    let g = Arc::new(LieAlgebra::gl(a, r));
    let c = if leibniz { ClComplex::new(g, top, cap)?.complex } else { CeComplex::new(g, top, cap)?.complex };
    Ok(c.homologies()?.iter().map(Subquotient::dim).collect())
}

/// Validates the bracket of `gl_r(A)`.
pub fn validate_gl(a: &AlgebraSpec, r: usize) -> crate::algebra::ValidationReport {
    validate_lie(&LieAlgebra::gl(a, r))
}
