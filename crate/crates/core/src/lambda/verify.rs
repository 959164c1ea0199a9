//! Measuring compatibility of the products and of the λ-decomposition.

use super::decomp::Lambda;
use super::products::{star, star_action};
use super::shuffle::{shuffle_product, tensor_shuffle};
use crate::algebra::{iterated_coproduct, tensor_power_map, Measuring};
use crate::cyclic::{cyclic_maps, normalized_maps, tot_maps};
use crate::error::Result;
use crate::linalg::{induced_on_subquotient, Matrix, Rational, Span, SparseAcc, SparseVec, Subquotient};
use crate::report::{measuring_subject, Checks};

/// Both λ-data and the induced maps of every coalgebra basis element.
pub struct MeasuredLambda<'a> {
    pub m: &'a Measuring,
    pub src: Lambda,
    pub dst: Lambda,
    /// `chain[y][n]` on `C_n`.
    pub chain: Vec<Vec<Matrix>>,
    pub bar: Vec<Vec<Matrix>>,
    pub tot: Vec<Vec<Matrix>>,
}

impl<'a> MeasuredLambda<'a> {
    pub fn new(m: &'a Measuring, top: usize, cap: usize) -> Result<Self> {
        m.require_cocommutative()?;
        let src = Lambda::new(m.source.clone(), top, cap)?;
        let dst = Lambda::new(m.target.clone(), top, cap)?;
        let mut chain = Vec::new();
        let mut bar = Vec::new();
        let mut tot = Vec::new();
        for y in 0..m.coalgebra.dim() {
            let f = cyclic_maps(m, &SparseVec::unit(y), top, cap)?;
            let fb = normalized_maps(&f, &src.norm, &dst.norm)?;
            tot.push(tot_maps(&src.tot, &dst.tot, &fb));
            bar.push(fb);
            chain.push(f);
        }
        Ok(Self { m, src, dst, chain, bar, tot })
    }

    pub fn basis(&self) -> usize {
        self.m.coalgebra.dim()
    }

    /// Terms `(y1, y2, c)` of `Δ(x_y)`.
    pub fn coproduct(&self, y: usize) -> Vec<(usize, usize, Rational)> {
        iterated_coproduct(&self.m.coalgebra, &SparseVec::unit(y), 2).into_iter().map(|(w, c)| (w[0], w[1], c)).collect()
    }
}

fn run<'a>(checks: &mut Checks, m: &'a Measuring, top: usize, cap: usize) -> Option<MeasuredLambda<'a>> {
    checks.result("setup", format!("n≤{top}"), MeasuredLambda::new(m, top, cap))
}

/// Shuffle and `∗` products are carried to products by the measuring.
pub fn verify_star_measuring(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new("star-product-measuring", "x(ã ∗ b̃) = x₍₁₎(ã) ∗ x₍₂₎(b̃) on normalized total complexes", measuring_subject(m));
    let Some(ml) = run(&mut ch, m, top, cap) else { return ch };
    let (a, a2) = (&ml.src.cm.algebra, &ml.dst.cm.algebra);
    // Chain-level shuffle identity on unnormalized chains.
    for y in 0..ml.basis() {
        let cop = ml.coproduct(y);
        let mut witness = None;
        'outer: for p in 0..=top {
            for q in 0..=top - p {
                for i in 0..ml.src.cm.dim(p) {
                    for j in 0..ml.src.cm.dim(q) {
                        let (u, v) = (SparseVec::unit(i), SparseVec::unit(j));
                        let lhs = ml.chain[y][p + q].apply(&shuffle_product(a, p, &u, q, &v));
                        let mut rhs = SparseAcc::new();
                        for (y1, y2, c) in &cop {
                            let fu = ml.chain[*y1][p].apply(&u);
                            let fv = ml.chain[*y2][q].apply(&v);
                            rhs.add_vec(&shuffle_product(a2, p, &fu, q, &fv), c);
                        }
                        if lhs != rhs.finish() {
                            witness = Some(format!("x{y} on basis pair ({i}, {j}) in degrees ({p}, {q})"));
                            break 'outer;
                        }
                    }
                }
            }
        }
        ch.expect_none(&format!("shuffle product, x{y}"), format!("p+q≤{top}"), witness);
    }
    // Chain-level ∗ identity on the normalized total complex.
    for y in 0..ml.basis() {
        let cop = ml.coproduct(y);
        let mut witness = None;
        'outer2: for p in 0..top {
            for q in 0..top - p {
                for i in 0..ml.src.tot.complex.dim(p) {
                    for j in 0..ml.src.tot.complex.dim(q) {
                        let (u, v) = (SparseVec::unit(i), SparseVec::unit(j));
                        let s = star(a, &ml.src.norm, &ml.src.mixed, &ml.src.tot, p, &u, q, &v);
                        let lhs = ml.tot[y][p + q + 1].apply(&s);
                        let mut rhs = SparseAcc::new();
                        for (y1, y2, c) in &cop {
                            let fu = ml.tot[*y1][p].apply(&u);
                            let fv = ml.tot[*y2][q].apply(&v);
                            rhs.add_vec(&star(a2, &ml.dst.norm, &ml.dst.mixed, &ml.dst.tot, p, &fu, q, &fv), c);
                        }
                        if lhs != rhs.finish() {
                            witness = Some(format!("x{y} on Tot basis pair ({i}, {j}) in degrees ({p}, {q})"));
                            break 'outer2;
                        }
                    }
                }
            }
        }
        ch.expect_none(&format!("star product, x{y}"), format!("p+q+1≤{top}"), witness);
    }
    // Homology level: classes of products of representatives.
    let cert = top.saturating_sub(2);
    let (Some(hs), Some(hd)) = (ch.result("HC", format!("n≤{cert}"), ml.src.hc(cert)), ch.result("HC", format!("n≤{cert}"), ml.dst.hc(cert)))
    else {
        return ch;
    };
    for y in 0..ml.basis() {
        let cop = ml.coproduct(y);
        let r = star_on_classes(&ml, &hs, &hd, y, &cop, cert);
        match r {
            Ok(None) => ch.pass(&format!("star product on classes, x{y}"), format!("p+q+1≤{cert}")),
            Ok(Some(w)) => ch.fail(&format!("star product on classes, x{y}"), format!("p+q+1≤{cert}"), w),
            Err(e) => ch.fail(&format!("star product on classes, x{y}"), format!("p+q+1≤{cert}"), e.to_string()),
        }
    }
    ch
}

fn star_on_classes(
    ml: &MeasuredLambda,
    hs: &[Subquotient],
    hd: &[Subquotient],
    y: usize,
    cop: &[(usize, usize, Rational)],
    cert: usize,
) -> Result<Option<String>> {
    let (a, a2) = (&ml.src.cm.algebra, &ml.dst.cm.algebra);
    for p in 0..cert {
        for q in 0..cert - p {
            let n = p + q + 1;
            let fx = induced_on_subquotient(&ml.tot[y][n], &hs[n], &hd[n])?;
            for (ia, ra) in hs[p].reps().columns().iter().enumerate() {
                for (ib, rb) in hs[q].reps().columns().iter().enumerate() {
                    let s = star(a, &ml.src.norm, &ml.src.mixed, &ml.src.tot, p, ra, q, rb);
                    let lhs = fx.apply(&hs[n].classify(&s)?);
                    let mut rhs = SparseAcc::new();
                    for (y1, y2, c) in cop {
                        let fu = ml.tot[*y1][p].apply(ra);
                        let fv = ml.tot[*y2][q].apply(rb);
                        let t = star(a2, &ml.dst.norm, &ml.dst.mixed, &ml.dst.tot, p, &fu, q, &fv);
                        rhs.add_vec(&hd[n].classify(&t)?, c);
                    }
                    if lhs != rhs.finish() {
                        return Ok(Some(format!("classes {ia} ∗ {ib} in degrees ({p}, {q})")));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `HH` is a comodule measuring over the `∗`-algebra `HC'`, and `ã ↦ Bã_top`
/// intertwines the induced maps.
pub fn verify_comodule_measuring(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new("comodule-measuring", "x(ã ∗ b̃_q) = x₍₁₎(ã) ∗ x₍₂₎(b̃_q) for the action of HC' on HH", measuring_subject(m));
    let Some(ml) = run(&mut ch, m, top, cap) else { return ch };
    let (a, a2) = (&ml.src.cm.algebra, &ml.dst.cm.algebra);
    for y in 0..ml.basis() {
        let cop = ml.coproduct(y);
        let mut witness = None;
        'outer: for pm1 in 0..top {
            for q in 0..top - pm1 {
                for i in 0..ml.src.tot.complex.dim(pm1) {
                    for j in 0..ml.src.mixed.dim(q) {
                        let (u, v) = (SparseVec::unit(i), SparseVec::unit(j));
                        let lhs = ml.bar[y][pm1 + 1 + q].apply(&star_action(a, &ml.src.norm, &ml.src.mixed, &ml.src.tot, pm1, &u, q, &v));
                        let mut rhs = SparseAcc::new();
                        for (y1, y2, c) in &cop {
                            let fu = ml.tot[*y1][pm1].apply(&u);
                            let fv = ml.bar[*y2][q].apply(&v);
                            rhs.add_vec(&star_action(a2, &ml.dst.norm, &ml.dst.mixed, &ml.dst.tot, pm1, &fu, q, &fv), c);
                        }
                        if lhs != rhs.finish() {
                            witness = Some(format!("x{y} on pair ({i}, {j}) in degrees ({}, {q})", pm1 + 1));
                            break 'outer;
                        }
                    }
                }
            }
        }
        ch.expect_none(&format!("module action, x{y}"), format!("p+q≤{top}"), witness);
    }
    // B: Tot_{p-1} → C̄_p as a chain map, intertwining the measuring.
    let cert = top.saturating_sub(2);
    for y in 0..ml.basis() {
        for p in 1..=cert {
            let bs = top_b(&ml.src, p - 1);
            let bd = top_b(&ml.dst, p - 1);
            ch.matrices_equal(&format!("B intertwines, x{y}"), format!("n={p}"), &ml.bar[y][p].mul(&bs), &bd.mul(&ml.tot[y][p - 1]));
        }
    }
    let hh_s = ml.src.hh_bar(cert);
    let hh_d = ml.dst.hh_bar(cert);
    let hc_s = ml.src.hc(cert);
    let hc_d = ml.dst.hc(cert);
    if let (Some(hhs), Some(hhd), Some(hcs), Some(hcd)) = (
        ch.result("homology", format!("n≤{cert}"), hh_s),
        ch.result("homology", format!("n≤{cert}"), hh_d),
        ch.result("homology", format!("n≤{cert}"), hc_s),
        ch.result("homology", format!("n≤{cert}"), hc_d),
    ) {
        for y in 0..ml.basis() {
            for p in 1..=cert {
                let r = (|| -> Result<(Matrix, Matrix)> {
                    let bs = induced_on_subquotient(&top_b(&ml.src, p - 1), &hcs[p - 1], &hhs[p])?;
                    let bd = induced_on_subquotient(&top_b(&ml.dst, p - 1), &hcd[p - 1], &hhd[p])?;
                    let fh = induced_on_subquotient(&ml.bar[y][p], &hhs[p], &hhd[p])?;
                    let fc = induced_on_subquotient(&ml.tot[y][p - 1], &hcs[p - 1], &hcd[p - 1])?;
                    Ok((fh.mul(&bs), bd.mul(&fc)))
                })();
                if let Some((l, r)) = ch.result(&format!("B on homology, x{y}"), format!("n={p}"), r) {
                    ch.matrices_equal(&format!("B on homology, x{y}"), format!("n={p}"), &l, &r);
                }
            }
        }
    }
    ch
}

/// `ã ↦ Bã_{top}` from `Tot_n` to `C̄_{n+1}`.
fn top_b(l: &Lambda, n: usize) -> Matrix {
    let blk = l.tot.block(n, 0).expect("block 0");
    let cols = (0..l.tot.complex.dim(n))
        .map(|j| if j < blk.offset + blk.dim && j >= blk.offset { l.mixed.big_b[n].column(j - blk.offset).clone() } else { SparseVec::new() })
        .collect();
    Matrix::from_columns(l.mixed.dim(n + 1), cols)
}

/// The Eulerian idempotents commute with the measuring on `T(A)` and on chains.
pub fn verify_eulerian_commute(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new("eulerian-commute", "e′⁽ⁱ⁾ ∘ C^Φ(x) = C^Φ(x) ∘ e⁽ⁱ⁾ and T(Φ) is a measuring for the shuffle product", measuring_subject(m));
    let Some(ml) = run(&mut ch, m, top, cap) else { return ch };
    let (d, d2) = (m.source.dim(), m.target.dim());
    for y in 0..ml.basis() {
        let cop = ml.coproduct(y);
        for n in 1..=top {
            let Some(t) = ch.result("T(Φ)", format!("n={n}"), tensor_power_map(m, &SparseVec::unit(y), n, cap)) else { continue };
            for i in 1..=n {
                let lhs = ml.dst.eulerian.get(n, i).mul(&t);
                let rhs = t.mul(&ml.src.eulerian.get(n, i));
                ch.matrices_equal(&format!("e^({i}) on T(A), x{y}"), format!("n={n}"), &lhs, &rhs);
                ch.matrices_equal(
                    &format!("A⊗e^({i}) on C, x{y}"),
                    format!("n={n}"),
                    &ml.dst.chain_idem(n, i).mul(&ml.chain[y][n]),
                    &ml.chain[y][n].mul(&ml.src.chain_idem(n, i)),
                );
            }
            // T(x)(μ(u ⊗ v)) = Σ μ(T(x₍₁₎)u ⊗ T(x₍₂₎)v)
            for p in 1..n {
                let lhs = t.mul(&tensor_shuffle(d, p, n - p));
                let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                for (y1, y2, c) in &cop {
                    let t1 = tensor_power_map(m, &SparseVec::unit(*y1), p, cap);
                    let t2 = tensor_power_map(m, &SparseVec::unit(*y2), n - p, cap);
                    if let (Ok(t1), Ok(t2)) = (t1, t2) {
                        rhs = rhs.add(&tensor_shuffle(d2, p, n - p).mul(&t1.kron(&t2)).scaled(c));
                    }
                }
                ch.matrices_equal(&format!("T(Φ) shuffle measuring, x{y}"), format!("({p},{})", n - p), &lhs, &rhs);
            }
        }
    }
    ch
}

fn summand_spans(idems: &[Vec<Matrix>]) -> Vec<Vec<Span>> {
    idems.iter().map(|row| row.iter().map(Span::new).collect()).collect()
}

/// Induced maps on `HH` preserve the λ-summands, compatibly with shuffles.
pub fn verify_hh_summands(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new("hh-lambda-summands", "HH^Φ(x) maps HH⁽ⁱ⁾(A) into HH⁽ⁱ⁾(A′)", measuring_subject(m));
    let Some(ml) = run(&mut ch, m, top, cap) else { return ch };
    let cert = top - 1;
    let r = (|| -> Result<_> {
        let hs = ml.src.hh(cert)?;
        let hd = ml.dst.hh(cert)?;
        let ps = ml.src.hh_idempotents(&hs)?;
        let pd = ml.dst.hh_idempotents(&hd)?;
        Ok((hs, hd, ps, pd))
    })();
    let Some((hs, hd, ps, pd)) = ch.result("λ-decomposition", format!("n≤{cert}"), r) else { return ch };
    for y in 0..ml.basis() {
        for n in 0..=cert {
            let Some(f) = ch.result(&format!("HH map, x{y}"), format!("n={n}"), induced_on_subquotient(&ml.chain[y][n], &hs[n], &hd[n]))
            else {
                continue;
            };
            for i in 0..=n {
                ch.matrices_equal(&format!("summand {i}, x{y}"), format!("n={n}"), &f.mul(&ps[n][i]), &pd[n][i].mul(&f));
            }
        }
    }
    // Shuffles of summands land in the expected summand: e^{(i+j)}(u × v) = u × v.
    let a = &ml.src.cm.algebra;
    let spans = summand_spans(&ps);
    let mut witness = None;
    'outer: for p in 1..cert {
        for q in 1..=cert - p {
            for i in 1..=p {
                for j in 1..=q {
                    for u in spans[p][i].basis().columns() {
                        for v in spans[q][j].basis().columns() {
                            let uu = hs[p].reps().apply(u);
                            let vv = hs[q].reps().apply(v);
                            let s = shuffle_product(a, p, &uu, q, &vv);
                            let e = ml.src.chain_idem(p + q, i + j).apply(&s);
                            if !hs[p + q].is_boundary(&e.sub(&s)) {
                                witness = Some(format!("HH^({i})_{p} × HH^({j})_{q}"));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    ch.expect_none("shuffle respects summands", format!("p+q≤{cert}"), witness);
    ch
}

/// Induced maps on `HC` preserve the λ-summands.
pub fn verify_hc_summands(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new("hc-lambda-summands", "HC^Φ(x) maps HC⁽ⁱ⁾(A) into HC⁽ⁱ⁾(A′)", measuring_subject(m));
    let Some(ml) = run(&mut ch, m, top, cap) else { return ch };
    let cert = top.saturating_sub(2);
    ch.expect_none("idempotents split the normalized mixed complex", format!("n≤{top}"), ml.src.mixed_splitting_defect());
    for y in 0..ml.basis() {
        for n in 0..=top {
            for i in 0..=n {
                ch.matrices_equal(
                    &format!("ē^({i}) commutes, x{y}"),
                    format!("n={n}"),
                    &ml.dst.bar_idem(n, i).mul(&ml.bar[y][n]),
                    &ml.bar[y][n].mul(&ml.src.bar_idem(n, i)),
                );
            }
        }
    }
    let r = (|| -> Result<_> {
        let hs = ml.src.hc(cert)?;
        let hd = ml.dst.hc(cert)?;
        let ps = ml.src.hc_idempotents(&hs)?;
        let pd = ml.dst.hc_idempotents(&hd)?;
        Ok((hs, hd, ps, pd))
    })();
    let Some((hs, hd, ps, pd)) = ch.result("λ-decomposition", format!("n≤{cert}"), r) else { return ch };
    for y in 0..ml.basis() {
        for n in 0..=cert {
            let Some(f) = ch.result(&format!("HC map, x{y}"), format!("n={n}"), induced_on_subquotient(&ml.tot[y][n], &hs[n], &hd[n]))
            else {
                continue;
            };
            for i in 0..=n {
                ch.matrices_equal(&format!("summand {i}, x{y}"), format!("n={n}"), &f.mul(&ps[n][i]), &pd[n][i].mul(&f));
            }
        }
    }
    ch
}

/// The λ-refined periodicity sequences and the ladder between them.
pub fn verify_lambda_ladder(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "lambda-sbi-ladder",
        "HH⁽ⁱ⁾_n → HC⁽ⁱ⁾_n → HC⁽ⁱ⁻¹⁾_{n-2} → HH⁽ⁱ⁾_{n-1} is exact and commutes with the measuring",
        measuring_subject(m),
    );
    let Some(ml) = run(&mut ch, m, top, cap) else { return ch };
    let cert = top.saturating_sub(2);
    let row = |l: &Lambda| -> Result<LambdaRow> { LambdaRow::new(l, cert) };
    let (Some(rs), Some(rd)) = (ch.result("row", format!("n≤{cert}"), row(&ml.src)), ch.result("row", format!("n≤{cert}"), row(&ml.dst)))
    else {
        return ch;
    };
    for (tag, r) in [("source", &rs), ("target", &rd)] {
        for n in 2..=cert {
            for i in 1..=n {
                if i >= n {
                    ch.skip(
                        &format!("{tag} row exactness, i={i}"),
                        format!("n={n}"),
                        "summand indices of HC_{n-2}^(i-1) and HH_{n-1}^(i) fall outside the displayed range",
                    );
                    continue;
                }
                match r.exactness(n, i) {
                    Ok(None) => ch.pass(&format!("{tag} row exactness, i={i}"), format!("n={n}")),
                    Ok(Some(w)) => ch.fail(&format!("{tag} row exactness, i={i}"), format!("n={n}"), w),
                    Err(e) => ch.fail(&format!("{tag} row exactness, i={i}"), format!("n={n}"), e.to_string()),
                }
            }
        }
    }
    for y in 0..ml.basis() {
        let r = (|| -> Result<Vec<(String, String, Matrix, Matrix)>> {
            let mut out = Vec::new();
            let fh: Vec<Matrix> =
                (0..=cert).map(|n| induced_on_subquotient(&ml.bar[y][n], &rs.hh[n], &rd.hh[n])).collect::<Result<_>>()?;
            let fc: Vec<Matrix> =
                (0..=cert).map(|n| induced_on_subquotient(&ml.tot[y][n], &rs.hc[n], &rd.hc[n])).collect::<Result<_>>()?;
            for n in 0..=cert {
                for i in 0..=n {
                    let hh_s = Span::new(&rs.ph[n][i]);
                    let hh_d = Span::new(&rd.ph[n][i]);
                    let hc_s = Span::new(&rs.pc[n][i]);
                    let hc_d = Span::new(&rd.pc[n][i]);
                    let fhr = Span::restrict(&fh[n], &hh_s, &hh_d)?;
                    let fcr = Span::restrict(&fc[n], &hc_s, &hc_d)?;
                    let is = Span::restrict(&rs.i[n], &hh_s, &hc_s)?;
                    let id = Span::restrict(&rd.i[n], &hh_d, &hc_d)?;
                    out.push((format!("I square, i={i}"), format!("n={n}"), fcr.mul(&is), id.mul(&fhr)));
                    if n >= 2 && i >= 1 && i - 1 <= n - 2 {
                        let lo_s = Span::new(&rs.pc[n - 2][i - 1]);
                        let lo_d = Span::new(&rd.pc[n - 2][i - 1]);
                        let flo = Span::restrict(&fc[n - 2], &lo_s, &lo_d)?;
                        let ss = Span::restrict(&rs.s[n], &hc_s, &lo_s)?;
                        let sd = Span::restrict(&rd.s[n], &hc_d, &lo_d)?;
                        out.push((format!("S square, i={i}"), format!("n={n}"), flo.mul(&ss), sd.mul(&fcr)));
                        if i <= n - 1 {
                            let hm_s = Span::new(&rs.ph[n - 1][i]);
                            let hm_d = Span::new(&rd.ph[n - 1][i]);
                            let fhm = Span::restrict(&fh[n - 1], &hm_s, &hm_d)?;
                            let bs = Span::restrict(&rs.b[n], &lo_s, &hm_s)?;
                            let bd = Span::restrict(&rd.b[n], &lo_d, &hm_d)?;
                            out.push((format!("B square, i={i}"), format!("n={n}"), fhm.mul(&bs), bd.mul(&flo)));
                        }
                    }
                }
            }
            Ok(out)
        })();
        if let Some(sq) = ch.result(&format!("ladder, x{y}"), format!("n≤{cert}"), r) {
            for (name, deg, l, r) in sq {
                ch.matrices_equal(&format!("{name}, x{y}"), deg, &l, &r);
            }
        }
    }
    ch
}

/// Homology-level `I`, `S`, `B` of the normalized mixed complex, with the
/// induced λ-idempotents on each group.
struct LambdaRow {
    hh: Vec<Subquotient>,
    hc: Vec<Subquotient>,
    ph: Vec<Vec<Matrix>>,
    pc: Vec<Vec<Matrix>>,
    i: Vec<Matrix>,
    s: Vec<Matrix>,
    /// `b[n]: HC_{n-2} → HH_{n-1}`.
    b: Vec<Matrix>,
}

impl LambdaRow {
    fn new(l: &Lambda, cert: usize) -> Result<Self> {
        let hh = l.hh_bar(cert)?;
        let hc = l.hc(cert)?;
        let ph = l.hh_bar_idempotents(&hh)?;
        let pc = l.hc_idempotents(&hc)?;
        let mut i = Vec::new();
        let mut s = Vec::new();
        let mut b = Vec::new();
        for n in 0..=cert {
            let incl = Matrix::from_columns(l.tot.complex.dim(n), (0..l.mixed.dim(n)).map(|j| l.tot.embed(n, 0, &SparseVec::unit(j))).collect());
            i.push(induced_on_subquotient(&incl, &hh[n], &hc[n])?);
            if n < 2 {
                s.push(Matrix::zeros(0, hc[n].dim()));
                b.push(Matrix::zeros(0, 0));
                continue;
            }
            let mut cols = Vec::new();
            for blk in &l.tot.blocks[n] {
                for j in 0..blk.dim {
                    cols.push(if blk.index >= 1 { l.tot.embed(n - 2, blk.index - 1, &SparseVec::unit(j)) } else { SparseVec::new() });
                }
            }
            let shift = Matrix::from_columns(l.tot.complex.dim(n - 2), cols);
            s.push(induced_on_subquotient(&shift, &hc[n], &hc[n - 2])?);
            b.push(induced_on_subquotient(&top_b(l, n - 2), &hc[n - 2], &hh[n - 1])?);
        }
        Ok(Self { hh, hc, ph, pc, i, s, b })
    }

    /// Exactness of the `i`-th row at `HC⁽ⁱ⁾_n`, `HC⁽ⁱ⁻¹⁾_{n-2}` and `HH⁽ⁱ⁾_{n-1}`.
    fn exactness(&self, n: usize, i: usize) -> Result<Option<String>> {
        use crate::cyclic::exact_at;
        let hh_n = Span::new(&self.ph[n][i]);
        let hc_n = Span::new(&self.pc[n][i]);
        let hc_lo = Span::new(&self.pc[n - 2][i - 1]);
        let hh_m = Span::new(&self.ph[n - 1][i]);
        let i_r = Span::restrict(&self.i[n], &hh_n, &hc_n)?;
        let s_r = Span::restrict(&self.s[n], &hc_n, &hc_lo)?;
        let b_r = Span::restrict(&self.b[n], &hc_lo, &hh_m)?;
        let i_m = Span::restrict(&self.i[n - 1], &hh_m, &Span::new(&self.pc[n - 1][i]))?;
        if !exact_at(&i_r, &s_r, hc_n.dim()) {
            return Ok(Some(format!("at HC_{n}^({i})")));
        }
        if !exact_at(&s_r, &b_r, hc_lo.dim()) {
            return Ok(Some(format!("at HC_{}^({})", n - 2, i - 1)));
        }
        if !exact_at(&b_r, &i_m, hh_m.dim()) {
            return Ok(Some(format!("at HH_{}^({i})", n - 1)));
        }
        Ok(None)
    }
}
