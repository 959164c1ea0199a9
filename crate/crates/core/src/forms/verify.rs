//! Measuring compatibility of the antisymmetrization, `ε`, `π` and `π̄` maps.

use super::{antisymmetrizer, Forms, LieTypeComplex};
use crate::algebra::{tensor_power_map, Measuring};
use crate::complex::{chain_map_defect, induced_maps, MixedComplex, TotComplex};
use crate::cyclic::{hochschild_complex, tot_maps, unnormalized_mixed, CyclicModule};
use crate::error::Result;
use crate::linalg::{induced_on_subquotient, Matrix, Rational, SparseVec, Subquotient};
use crate::report::{measuring_subject, Checks};
use num_traits::One;

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()))
}

/// `E^Φ(x)` commutes with `δ` and with `ε`, on chains and on homology.
pub fn verify_antisymmetrization(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new("antisymmetrization", "E^Φ(x) commutes with δ and ε_n: E_n → C_n", measuring_subject(m));
    let cert = top.saturating_sub(1);
    let setup = (|| -> Result<_> {
        m.require_cocommutative()?;
        let es = LieTypeComplex::new(m.source.clone(), top, cap)?;
        let ed = LieTypeComplex::new(m.target.clone(), top, cap)?;
        let hs = hochschild_complex(&CyclicModule::new(m.source.clone(), top, cap)?)?;
        let hd = hochschild_complex(&CyclicModule::new(m.target.clone(), top, cap)?)?;
        Ok((es, ed, hs, hd))
    })();
    let Some((es, ed, hs, hd)) = ch.result("setup", format!("n≤{top}"), setup) else { return ch };
    for (tag, e, h) in [("source", &es, &hs), ("target", &ed, &hd)] {
        ch.expect_none(&format!("{tag} δ∘δ = 0"), format!("n≤{top}"), e.complex.square_zero_defect().map(|(n, d)| format!("degree {n}: {d}")));
        ch.expect_none(&format!("{tag} ε is a chain map"), format!("n≤{top}"), chain_map_defect(&e.eps, &e.complex, h).map(|(n, d)| format!("degree {n}: {d}")));
    }
    let homology = (|| -> Result<_> {
        let g = |c: &crate::complex::ChainComplex| -> Result<Vec<Subquotient>> { (0..=cert).map(|n| c.homology(n)).collect() };
        Ok((g(&es.complex)?, g(&ed.complex)?, g(&hs)?, g(&hd)?))
    })();
    let Some((hes, hed, hhs, hhd)) = ch.result("homology", format!("n≤{cert}"), homology) else { return ch };
    for y in 0..m.coalgebra.dim() {
        let x = SparseVec::unit(y);
        let maps = (|| -> Result<_> {
            let fe = LieTypeComplex::measuring_maps(m, &x, &es, &ed, cap)?;
            let fc: Vec<Matrix> = (0..=top).map(|n| tensor_power_map(m, &x, n + 1, cap)).collect::<Result<_>>()?;
            Ok((fe, fc))
        })();
        let Some((fe, fc)) = ch.result(&format!("E^Φ well defined, x{y}"), format!("n≤{top}"), maps) else { continue };
        ch.pass(&format!("E^Φ well defined, x{y}"), format!("n≤{top}"));
        for n in 1..=top {
            ch.matrices_equal(&format!("δ square, x{y}"), format!("n={n}"), &ed.complex.d(n).mul(&fe[n]), &fe[n - 1].mul(es.complex.d(n)));
        }
        for n in 0..=top {
            ch.matrices_equal(&format!("ε square, x{y}"), format!("n={n}"), &fc[n].mul(&es.eps[n]), &ed.eps[n].mul(&fe[n]));
        }
        let squares = (|| -> Result<Vec<(Matrix, Matrix)>> {
            let he = induced_maps(&fe[..=cert], &hes, &hed)?;
            let hh = induced_maps(&fc[..=cert], &hhs, &hhd)?;
            (0..=cert)
                .map(|n| {
                    let es_h = induced_on_subquotient(&es.eps[n], &hes[n], &hhs[n])?;
                    let ed_h = induced_on_subquotient(&ed.eps[n], &hed[n], &hhd[n])?;
                    Ok((hh[n].mul(&es_h), ed_h.mul(&he[n])))
                })
                .collect()
        })();
        if let Some(sq) = ch.result(&format!("HE → HH square, x{y}"), format!("n≤{cert}"), squares) {
            for (n, (l, r)) in sq.iter().enumerate() {
                ch.matrices_equal(&format!("HE → HH square, x{y}"), format!("n={n}"), l, r);
            }
        }
    }
    ch
}

/// Forms, the Hochschild complex and the maps between them for one algebra.
struct FormSide {
    forms: Forms,
    cm: CyclicModule,
    hh: Vec<Subquotient>,
    /// `ε_p: Ω^p → HH_p`.
    eps: Vec<Matrix>,
    /// `π_p: HH_p → Ω^p`.
    pi: Vec<Matrix>,
}

impl FormSide {
    fn new(a: std::sync::Arc<crate::algebra::AlgebraSpec>, top: usize, form_top: usize, cap: usize) -> Result<Self> {
        let forms = Forms::new(a.clone(), form_top, cap)?;
        let cm = CyclicModule::new(a, top, cap)?;
        let h = hochschild_complex(&cm)?;
        let hh: Vec<Subquotient> = (0..=form_top).map(|n| h.homology(n)).collect::<Result<_>>()?;
        let mut eps = Vec::new();
        let mut pi = Vec::new();
        for p in 0..=form_top {
            let chain = antisymmetrizer(cm.d(), p).mul(&forms.section[p]);
            eps.push(Matrix::from_columns(hh[p].dim(), chain.columns().iter().map(|c| hh[p].classify(c)).collect::<Result<_>>()?));
            pi.push(forms.pi[p].mul(hh[p].reps()));
        }
        Ok(Self { forms, cm, hh, eps, pi })
    }

    /// First kernel vector of `π_p` whose antisymmetrization is not a boundary.
    fn eps_defect(&self, p: usize) -> Option<String> {
        let ker = crate::linalg::kernel_basis(&self.forms.pi[p]);
        let anti = antisymmetrizer(self.cm.d(), p);
        ker.columns().iter().position(|k| !self.hh[p].is_boundary(&anti.apply(k))).map(|j| format!("kernel vector {j} of π_{p}"))
    }
}

/// `ε` and `π` relate `Ω^Φ(x)` and `HH^Φ(x)`.
pub fn verify_eps_pi(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new("forms-eps-pi", "HH^Φ(x) ∘ ε = ε ∘ Ω^Φ(x) and Ω^Φ(x) ∘ π = π ∘ HH^Φ(x)", measuring_subject(m));
    let ft = top.saturating_sub(1);
    let setup = (|| -> Result<_> {
        m.require_cocommutative()?;
        Ok((FormSide::new(m.source.clone(), top, ft, cap)?, FormSide::new(m.target.clone(), top, ft, cap)?))
    })();
    let Some((s, d)) = ch.result("setup", format!("p≤{ft}"), setup) else { return ch };
    for (tag, side) in [("source", &s), ("target", &d)] {
        let h = hochschild_complex(&side.cm).expect("built above");
        for p in 0..=ft {
            ch.expect_none(&format!("{tag} ε well defined on Ω"), format!("p={p}"), side.eps_defect(p));
            if p >= 1 {
                let pb = side.forms.pi[p - 1].mul(h.d(p));
                ch.matrices_equal(&format!("{tag} π ∘ b = 0"), format!("p={p}"), &pb, &Matrix::zeros(pb.rows(), pb.cols()));
            }
            let lhs = side.forms.pi[p].mul(&antisymmetrizer(side.cm.d(), p)).mul(&side.forms.section[p]);
            ch.matrices_equal(&format!("{tag} π ∘ ε = p!"), format!("p={p}"), &lhs, &Matrix::scalar(side.forms.dim(p), factorial(p)));
        }
    }
    for y in 0..m.coalgebra.dim() {
        let x = SparseVec::unit(y);
        let maps = (|| -> Result<_> {
            let fc: Vec<Matrix> = (0..=ft).map(|p| tensor_power_map(m, &x, p + 1, cap)).collect::<Result<_>>()?;
            let fo: Vec<Matrix> = (0..=ft).map(|p| super::descend_between(&fc[p], &s.forms.pi[p], &s.forms.section[p], &d.forms.pi[p])).collect::<Result<_>>()?;
            let fh = induced_maps(&fc, &s.hh, &d.hh)?;
            Ok((fc, fo, fh))
        })();
        let Some((fc, fo, fh)) = ch.result(&format!("Ω^Φ well defined, x{y}"), format!("p≤{ft}"), maps) else { continue };
        ch.pass(&format!("Ω^Φ well defined, x{y}"), format!("p≤{ft}"));
        for p in 0..=ft {
            let anti_s = antisymmetrizer(s.cm.d(), p);
            let anti_d = antisymmetrizer(d.cm.d(), p);
            ch.matrices_equal(&format!("ε on chains, x{y}"), format!("p={p}"), &fc[p].mul(&anti_s), &anti_d.mul(&fc[p]));
            ch.matrices_equal(&format!("π on chains, x{y}"), format!("p={p}"), &d.forms.pi[p].mul(&fc[p]), &fo[p].mul(&s.forms.pi[p]));
            ch.matrices_equal(&format!("ε square, x{y}"), format!("p={p}"), &fh[p].mul(&s.eps[p]), &d.eps[p].mul(&fo[p]));
            ch.matrices_equal(&format!("π square, x{y}"), format!("p={p}"), &fo[p].mul(&s.pi[p]), &d.pi[p].mul(&fh[p]));
            if p < ft {
                ch.matrices_equal(&format!("commutes with d, x{y}"), format!("p={p}"), &d.forms.d[p].mul(&fo[p]), &fo[p + 1].mul(&s.forms.d[p]));
            }
        }
    }
    ch
}

/// `(Ω^•, 0, d)` as a mixed complex.
pub fn de_rham_mixed(forms: &Forms) -> MixedComplex {
    MixedComplex {
        b: (0..=forms.top).map(|p| Matrix::zeros(if p == 0 { 0 } else { forms.dim(p - 1) }, forms.dim(p))).collect(),
        big_b: forms.d.clone(),
    }
}

/// `π̄ = π/n!` is a map of mixed complexes whose effect on `HC` commutes with
/// the measuring.
pub fn verify_pibar(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "forms-pibar",
        "π̄: HC_n → Ω^n/dΩ^{n-1} ⊕ HDR^{n-2} ⊕ ... commutes with HC^Φ(x) and Ω^Φ(x)",
        measuring_subject(m),
    );
    let form_top = top.saturating_sub(1);
    let cert = top.saturating_sub(2);
    struct Side {
        forms: Forms,
        raw: MixedComplex,
        raw_tot: TotComplex,
        omega_tot: TotComplex,
        pibar: Vec<Matrix>,
        hc: Vec<Subquotient>,
        ho: Vec<Subquotient>,
    }
    let side = |a: std::sync::Arc<crate::algebra::AlgebraSpec>| -> Result<Side> {
        let forms = Forms::new(a.clone(), form_top, cap)?;
        let cm = CyclicModule::new(a, top, cap)?;
        let raw = unnormalized_mixed(&cm);
        let raw_tot = raw.tot()?;
        let omega_tot = de_rham_mixed(&forms).tot()?;
        let pibar = (0..=form_top).map(|p| forms.pi[p].scaled(&(Rational::one() / factorial(p)))).collect();
        let hc = (0..=cert).map(|n| raw_tot.complex.homology(n)).collect::<Result<_>>()?;
        let ho = (0..=cert.min(form_top.saturating_sub(1))).map(|n| omega_tot.complex.homology(n)).collect::<Result<_>>()?;
        Ok(Side { forms, raw, raw_tot, omega_tot, pibar, hc, ho })
    };
    let setup = (|| -> Result<_> {
        m.require_cocommutative()?;
        Ok((side(m.source.clone())?, side(m.target.clone())?))
    })();
    let Some((s, d)) = ch.result("setup", format!("n≤{top}"), setup) else { return ch };
    for (tag, sd) in [("source", &s), ("target", &d)] {
        for n in 1..=form_top {
            let pb = sd.pibar[n - 1].mul(&sd.raw.b[n]);
            ch.matrices_equal(&format!("{tag} π̄ ∘ b = 0"), format!("n={n}"), &pb, &Matrix::zeros(pb.rows(), pb.cols()));
            ch.matrices_equal(&format!("{tag} π̄ ∘ B = d ∘ π̄"), format!("n={}", n - 1), &sd.pibar[n].mul(&sd.raw.big_b[n - 1]), &sd.forms.d[n - 1].mul(&sd.pibar[n - 1]));
        }
        for n in 0..sd.ho.len() {
            let mut expected = sd.forms.coboundary_quotient_dim(n);
            let mut k = n;
            while k >= 2 {
                k -= 2;
                match sd.forms.de_rham(k) {
                    Ok(h) => expected += h.dim(),
                    Err(e) => ch.fail(&format!("{tag} HDR"), format!("p={k}"), e.to_string()),
                }
            }
            let got = sd.ho[n].dim();
            ch.expect_none(
                &format!("{tag} target splits as Ω^n/dΩ^(n-1) ⊕ HDR^(n-2) ⊕ ..."),
                format!("n={n}"),
                (got != expected).then(|| format!("homology of dimension {got}, summands of total dimension {expected}")),
            );
        }
    }
    let certified = s.ho.len().min(d.ho.len());
    for y in 0..m.coalgebra.dim() {
        let x = SparseVec::unit(y);
        let maps = (|| -> Result<_> {
            let fc: Vec<Matrix> = (0..=top).map(|p| tensor_power_map(m, &x, p + 1, cap)).collect::<Result<_>>()?;
            let fo: Vec<Matrix> =
                (0..=form_top).map(|p| super::descend_between(&fc[p], &s.forms.pi[p], &s.forms.section[p], &d.forms.pi[p])).collect::<Result<_>>()?;
            Ok((fc, fo))
        })();
        let Some((fc, fo)) = ch.result(&format!("maps, x{y}"), format!("n≤{top}"), maps) else { continue };
        for p in 0..=form_top {
            ch.matrices_equal(&format!("π̄ ∘ C^Φ = Ω^Φ ∘ π̄, x{y}"), format!("n={p}"), &d.pibar[p].mul(&fc[p]), &fo[p].mul(&s.pibar[p]));
        }
        let ft = tot_maps(&s.raw_tot, &d.raw_tot, &fc);
        let fot = tot_maps(&s.omega_tot, &d.omega_tot, &fo);
        for n in 0..=cert {
            if n >= certified {
                ch.skip(&format!("HC square, x{y}"), format!("n={n}"), format!("forms computed to degree {form_top} only"));
                continue;
            }
            let pt_s = s.raw_tot.block_diagonal(&s.omega_tot, n, |b| s.pibar[b.degree].clone());
            let pt_d = d.raw_tot.block_diagonal(&d.omega_tot, n, |b| d.pibar[b.degree].clone());
            let sq = (|| -> Result<(Matrix, Matrix)> {
                let l = induced_on_subquotient(&fot[n], &s.ho[n], &d.ho[n])?.mul(&induced_on_subquotient(&pt_s, &s.hc[n], &s.ho[n])?);
                let r = induced_on_subquotient(&pt_d, &d.hc[n], &d.ho[n])?.mul(&induced_on_subquotient(&ft[n], &s.hc[n], &d.hc[n])?);
                Ok((l, r))
            })();
            if let Some((l, r)) = ch.result(&format!("HC square, x{y}"), format!("n={n}"), sq) {
                ch.matrices_equal(&format!("HC square, x{y}"), format!("n={n}"), &l, &r);
            }
        }
    }
    ch
}
