//! Compatibility of measurings with the periodicity sequence and with the
//! normalized and quotient complexes.

use super::{
    connes_complex, connes_quotients, cyclic_bicomplex, cyclic_maps, hochschild_complex, normalized_maps, normalized_mixed,
    quotient_maps, sbi_sequence, tot_maps, unnormalized_mixed, CyclicModule, Normalization, Sbi,
};
use crate::algebra::{AlgebraSpec, Measuring};
use crate::complex::{chain_map_defect, induced_maps, ChainComplex, MixedComplex, TotComplex};
use crate::error::Result;
use crate::linalg::{rank, Matrix, Quotient, SparseVec, Subquotient};
use crate::report::{measuring_subject, Checks};
use std::sync::Arc;

/// Every complex computing `HH` and `HC` of one algebra.
pub struct CyclicData {
    pub cm: CyclicModule,
    pub hoch: ChainComplex,
    pub tot: TotComplex,
    pub two: TotComplex,
    pub norm: Normalization,
    pub mixed: MixedComplex,
    pub mixed_tot: TotComplex,
    pub raw_mixed_tot: TotComplex,
    pub quots: Vec<Quotient>,
    pub connes: ChainComplex,
}

impl CyclicData {
    pub fn new(a: Arc<AlgebraSpec>, top: usize, cap: usize) -> Result<Self> {
        let cm = CyclicModule::new(a, top, cap)?;
        let hoch = hochschild_complex(&cm)?;
        let tot = cyclic_bicomplex(&cm, None)?;
        let two = cyclic_bicomplex(&cm, Some(2))?;
        let norm = Normalization::new(&cm);
        let mixed = normalized_mixed(&cm, &norm);
        let mixed_tot = mixed.tot()?;
        let raw_mixed_tot = unnormalized_mixed(&cm).tot()?;
        let quots = connes_quotients(&cm);
        let connes = connes_complex(&cm, &quots)?;
        Ok(Self { cm, hoch, tot, two, norm, mixed, mixed_tot, raw_mixed_tot, quots, connes })
    }

    pub fn sbi(&self, cert: usize) -> Result<Sbi> {
        sbi_sequence(&self.hoch, &self.tot, &self.two, cert)
    }

    /// Degree-0 component followed by the projection to `C̃`.
    fn to_connes(&self, tot: &TotComplex, n: usize) -> Matrix {
        let q = &self.quots[n];
        Matrix::from_columns(q.dim(), (0..tot.complex.dim(n)).map(|j| q.project(&tot.component(n, 0, &SparseVec::unit(j)))).collect())
    }

    /// Blockwise normalization `Tot(C, b, B) → Tot(C̄, b, B)`.
    fn normalize_tot(&self, n: usize) -> Matrix {
        self.raw_mixed_tot.block_diagonal(&self.mixed_tot, n, |b| self.norm.proj[b.degree].clone())
    }
}

fn homologies(c: &ChainComplex, upto: usize) -> Result<Vec<Subquotient>> {
    (0..=upto).map(|n| c.homology(n)).collect()
}

/// The ladder between the periodicity sequences of `A` and `A′`.
pub fn verify_sbi_compatibility(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new("sbi-ladder", "HH^Φ(x), HC^Φ(x) form a map of Connes periodicity sequences", measuring_subject(m));
    let cert = top.saturating_sub(2);
    let setup = (|| -> Result<_> {
        m.require_cocommutative()?;
        let s = CyclicData::new(m.source.clone(), top, cap)?;
        let d = CyclicData::new(m.target.clone(), top, cap)?;
        let (ss, sd) = (s.sbi(cert)?, d.sbi(cert)?);
        Ok((s, d, ss, sd))
    })();
    let Some((s, d, ss, sd)) = ch.result("setup", format!("n≤{top}"), setup) else { return ch };
    for (tag, sbi) in [("source", &ss), ("target", &sd)] {
        let defects = sbi.exactness_defects();
        ch.expect_none(&format!("{tag} row exact"), format!("n≤{cert}"), (!defects.is_empty()).then(|| defects.join(", ")));
    }
    for y in 0..m.coalgebra.dim() {
        let r = (|| -> Result<_> {
            let f = cyclic_maps(m, &SparseVec::unit(y), top, cap)?;
            let ft = tot_maps(&s.tot, &d.tot, &f);
            let fh = induced_maps(&f[..=cert], &ss.hh, &sd.hh)?;
            let fc = induced_maps(&ft[..=cert], &ss.hc, &sd.hc)?;
            Ok((f, ft, fh, fc))
        })();
        let Some((f, ft, fh, fc)) = ch.result(&format!("induced maps, x{y}"), format!("n≤{cert}"), r) else { continue };
        ch.expect_none(&format!("Hochschild chain map, x{y}"), format!("n≤{top}"), chain_map_defect(&f, &s.hoch, &d.hoch).map(|(n, e)| format!("degree {n}: {e}")));
        ch.expect_none(&format!("Tot chain map, x{y}"), format!("n≤{top}"), chain_map_defect(&ft, &s.tot.complex, &d.tot.complex).map(|(n, e)| format!("degree {n}: {e}")));
        for n in 0..=cert {
            ch.matrices_equal(&format!("I square, x{y}"), format!("n={n}"), &fc[n].mul(&ss.i[n]), &sd.i[n].mul(&fh[n]));
            if n >= 2 {
                ch.matrices_equal(&format!("S square, x{y}"), format!("n={n}"), &fc[n - 2].mul(&ss.s[n]), &sd.s[n].mul(&fc[n]));
                ch.matrices_equal(&format!("B square, x{y}"), format!("n={n}"), &fh[n - 1].mul(&ss.b[n]), &sd.b[n].mul(&fc[n - 2]));
            }
        }
    }
    ch
}

/// The maps descend to normalized chains and to `C̃`, and induce the same maps
/// on homology as the unnormalized ones.
pub fn verify_normalized_quotient(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "normalized-quotient",
        "C̄^Φ(x) is a map of normalized mixed complexes inducing HH^Φ(x) and HC^Φ(x)",
        measuring_subject(m),
    );
    let cert = top.saturating_sub(2);
    let setup = (|| -> Result<_> {
        m.require_cocommutative()?;
        Ok((CyclicData::new(m.source.clone(), top, cap)?, CyclicData::new(m.target.clone(), top, cap)?))
    })();
    let Some((s, d)) = ch.result("setup", format!("n≤{top}"), setup) else { return ch };
    for (tag, c) in [("source", &s), ("target", &d)] {
        ch.expect_none(&format!("{tag} normalized mixed identities"), format!("n≤{top}"), c.mixed.identity_defect().map(|(w, n, e)| format!("{w} in degree {n}: {e}")));
    }
    let groups = (|| -> Result<_> {
        let g = |c: &CyclicData| -> Result<_> {
            Ok((
                homologies(&c.hoch, cert)?,
                homologies(&c.mixed.hochschild()?, cert)?,
                homologies(&c.tot.complex, cert)?,
                homologies(&c.mixed_tot.complex, cert)?,
                homologies(&c.raw_mixed_tot.complex, cert)?,
                homologies(&c.connes, cert)?,
            ))
        };
        Ok((g(&s)?, g(&d)?))
    })();
    let Some((gs, gd)) = ch.result("homology", format!("n≤{cert}"), groups) else { return ch };
    // The comparison maps are isomorphisms on homology.
    for (tag, c, g) in [("source", &s, &gs), ("target", &d, &gd)] {
        for n in 0..=cert {
            let cmp = (|| -> Result<[(String, Matrix, usize); 4]> {
                Ok([
                    ("C → C̄ on HH".into(), crate::linalg::induced_on_subquotient(&c.norm.proj[n], &g.0[n], &g.1[n])?, g.1[n].dim()),
                    ("Tot(CC) → C̃".into(), crate::linalg::induced_on_subquotient(&c.to_connes(&c.tot, n), &g.2[n], &g.5[n])?, g.5[n].dim()),
                    ("Tot(C,b,B) → C̃".into(), crate::linalg::induced_on_subquotient(&c.to_connes(&c.raw_mixed_tot, n), &g.4[n], &g.5[n])?, g.5[n].dim()),
                    ("Tot(C,b,B) → Tot(C̄,b,B)".into(), crate::linalg::induced_on_subquotient(&c.normalize_tot(n), &g.4[n], &g.3[n])?, g.3[n].dim()),
                ])
            })();
            let Some(cmp) = ch.result(&format!("{tag} comparison maps"), format!("n={n}"), cmp) else { continue };
            for (name, mat, dim) in cmp {
                let ok = mat.rows() == mat.cols() && rank(&mat) == dim;
                ch.expect_none(&format!("{tag} {name} is an isomorphism"), format!("n={n}"), (!ok).then(|| format!("{}×{} of rank {}", mat.rows(), mat.cols(), rank(&mat))));
            }
        }
    }
    for y in 0..m.coalgebra.dim() {
        let x = SparseVec::unit(y);
        let r = (|| -> Result<_> {
            let f = cyclic_maps(m, &x, top, cap)?;
            let fb = normalized_maps(&f, &s.norm, &d.norm)?;
            let fq = quotient_maps(&f, &s.quots, &d.quots)?;
            Ok((f, fb, fq))
        })();
        let Some((f, fb, fq)) = ch.result(&format!("descends to C̄ and C̃, x{y}"), format!("n≤{top}"), r) else { continue };
        ch.pass(&format!("descends to C̄ and C̃, x{y}"), format!("n≤{top}"));
        for n in 1..=top {
            ch.matrices_equal(&format!("b̄ commutes, x{y}"), format!("n={n}"), &d.mixed.b[n].mul(&fb[n]), &fb[n - 1].mul(&s.mixed.b[n]));
            ch.matrices_equal(&format!("B̄ commutes, x{y}"), format!("n={}", n - 1), &d.mixed.big_b[n - 1].mul(&fb[n - 1]), &fb[n].mul(&s.mixed.big_b[n - 1]));
            ch.matrices_equal(&format!("b̃ commutes, x{y}"), format!("n={n}"), &d.connes.d(n).mul(&fq[n]), &fq[n - 1].mul(s.connes.d(n)));
        }
        let ft = tot_maps(&s.tot, &d.tot, &f);
        let fraw = tot_maps(&s.raw_mixed_tot, &d.raw_mixed_tot, &f);
        let fbt = tot_maps(&s.mixed_tot, &d.mixed_tot, &fb);
        for n in 0..=cert {
            let squares = (|| -> Result<Vec<(&'static str, Matrix, Matrix)>> {
                let ind = crate::linalg::induced_on_subquotient;
                Ok(vec![
                    (
                        "HH via C̄",
                        ind(&fb[n], &gs.1[n], &gd.1[n])?.mul(&ind(&s.norm.proj[n], &gs.0[n], &gs.1[n])?),
                        ind(&d.norm.proj[n], &gd.0[n], &gd.1[n])?.mul(&ind(&f[n], &gs.0[n], &gd.0[n])?),
                    ),
                    (
                        "HC via C̃",
                        ind(&fq[n], &gs.5[n], &gd.5[n])?.mul(&ind(&s.to_connes(&s.tot, n), &gs.2[n], &gs.5[n])?),
                        ind(&d.to_connes(&d.tot, n), &gd.2[n], &gd.5[n])?.mul(&ind(&ft[n], &gs.2[n], &gd.2[n])?),
                    ),
                    (
                        "HC via Tot(C̄,b,B)",
                        ind(&fbt[n], &gs.3[n], &gd.3[n])?.mul(&ind(&s.normalize_tot(n), &gs.4[n], &gs.3[n])?),
                        ind(&d.normalize_tot(n), &gd.4[n], &gd.3[n])?.mul(&ind(&fraw[n], &gs.4[n], &gd.4[n])?),
                    ),
                    (
                        "Tot(C,b,B) and C̃ agree",
                        ind(&fq[n], &gs.5[n], &gd.5[n])?.mul(&ind(&s.to_connes(&s.raw_mixed_tot, n), &gs.4[n], &gs.5[n])?),
                        ind(&d.to_connes(&d.raw_mixed_tot, n), &gd.4[n], &gd.5[n])?.mul(&ind(&fraw[n], &gs.4[n], &gd.4[n])?),
                    ),
                ])
            })();
            if let Some(sq) = ch.result(&format!("homology squares, x{y}"), format!("n={n}"), squares) {
                for (name, l, r) in sq {
                    ch.matrices_equal(&format!("{name}, x{y}"), format!("n={n}"), &l, &r);
                }
            }
        }
    }
    ch
}
