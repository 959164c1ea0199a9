//! Verification suites for dihedral homology and the `sk`/`sp` ladders.

use super::complex::{involution_of, intertwining_defect, require_involutive, DihedralComplex, DihedralMaps};
use super::skew::{restrict_measuring, Classical, Family};
use crate::algebra::{matrix_measuring, Measuring};
use crate::complex::{chain_map_defect, induced_maps};
use crate::cyclic::{cyclic_maps, quotient_maps};
use crate::error::Result;
use crate::lie::{validate_lie, validate_lie_measuring, CeComplex, LieMeasuring, ThetaTrace};
use crate::linalg::{Matrix, SparseVec};
use crate::report::{measuring_subject, Checks};

/// Classical families and sizes checked by the ladder suites.
pub const LADDER_CASES: [(Family, usize); 3] = [(Family::Skew, 1), (Family::Skew, 2), (Family::Symplectic, 1)];

/// Highest degree used by the ladder suites.
pub const LADDER_TOP: usize = 3;

/// Both algebras carry involutions and `Φ` respects them; otherwise a failure record.
fn involutive(ch: &mut Checks, m: &Measuring) -> bool {
    let r = involution_of(&m.source).and(involution_of(&m.target)).map(|_| ()).and_then(|_| require_involutive(m));
    let ok = r.is_ok();
    ch.result("compatible with conjugation", "", r);
    if ok {
        ch.pass("compatible with conjugation", "");
    }
    ok
}

pub fn verify_dihedral_maps(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "dihedral-maps",
        "x(r₀,...,r_n) = (x₍₁₎r₀, ..., x₍ₙ₊₁₎r_n) commutes with u_n and v_n and descends to a chain map D_•(R) → D_•(R′)",
        measuring_subject(m),
    );
    if let Err(e) = m.require_cocommutative() {
        ch.fail("cocommutative", "", e.to_string());
        return ch;
    }
    if !involutive(&mut ch, m) {
        return ch;
    }
    let Some((t, (s, d))) = ch.fit("dihedral complexes", top, |t| {
        Ok((DihedralComplex::new(m.source.clone(), t, cap)?, DihedralComplex::new(m.target.clone(), t, cap)?))
    }) else {
        return ch;
    };
    for (tag, c) in [("source", &s), ("target", &d)] {
        for n in 0..=t {
            ch.expect_none(&format!("{tag} dihedral relations"), format!("n={n}"), c.actions[n].relation_defect(n));
        }
        ch.expect_none(&format!("{tag} b̄² = 0"), format!("n≤{t}"), c.complex.square_zero_defect().map(|(n, e)| format!("degree {n}: {e}")));
    }
    for y in 0..m.coalgebra.dim() {
        let x = SparseVec::unit(y);
        let chain = (0..=t).map(|n| crate::algebra::tensor_power_map(m, &x, n + 1, cap)).collect::<Result<Vec<_>>>();
        let Some(chain) = ch.result(&format!("chain maps, x{y}"), format!("n≤{t}"), chain) else { continue };
        ch.expect_none(&format!("intertwines u and v, x{y}"), format!("n≤{t}"), intertwining_defect(&chain, &s, &d));
        let Some(f) = ch.result(&format!("descends to D, x{y}"), format!("n≤{t}"), DihedralMaps::new(m, &x, &s, &d, cap)) else {
            continue;
        };
        ch.pass(&format!("descends to D, x{y}"), format!("n≤{t}"));
        ch.expect_none(
            &format!("D^Φ(x) chain map, x{y}"),
            format!("n≤{t}"),
            chain_map_defect(&f.bar, &s.complex, &d.complex).map(|(n, e)| format!("degree {n}: {e}")),
        );
        for n in 0..=t {
            ch.matrices_equal(
                &format!("projection square, x{y}"),
                format!("n={n}"),
                &d.quots[n].proj().mul(&f.chain[n]),
                &f.bar[n].mul(s.quots[n].proj()),
            );
        }
        if t > 0 {
            let hd = (|| -> Result<_> { induced_maps(&f.bar[..t], &s.homology()?, &d.homology()?) })();
            if ch.result(&format!("HD^Φ(x), x{y}"), format!("n≤{}", t - 1), hd).is_some() {
                ch.pass(&format!("HD^Φ(x), x{y}"), format!("n≤{}", t - 1));
            }
        }
    }
    ch
}

pub fn verify_sk_sp_restriction(m: &Measuring, _top: usize, _cap: usize) -> Checks {
    let mut ch = Checks::new(
        "sk-sp-restriction",
        "ᵗΨ(x)(α) = Ψ(x)(ᵗα), ᵀΨ(x)(β) = Ψ(x)(ᵀβ), and gl(Φ) restricts to Lie measurings sk_r(Φ), sp_2r(Φ)",
        measuring_subject(m),
    );
    if !involutive(&mut ch, m) {
        return ch;
    }
    for (fam, r) in LADDER_CASES {
        let tag = format!("{}, r={r}", fam.name());
        let built = (|| -> Result<_> { Ok((fam.build(&m.source, r)?, fam.build(&m.target, r)?)) })();
        let Some((s, d)) = ch.result(&format!("{tag}: closed under bracket"), "", built) else { continue };
        ch.pass(&format!("{tag}: closed under bracket"), format!("dims {} → {}", s.algebra.dim(), d.algebra.dim()));
        for (which, c) in [("source", &s), ("target", &d)] {
            let id = Matrix::identity(c.gl.dim());
            ch.matrices_equal(&format!("{tag}: {which} τ² = id"), "", &c.tau.mul(&c.tau), &id);
            let rep = validate_lie(&c.algebra);
            ch.expect_none(&format!("{tag}: {which} Jacobi"), "", rep.violations.first().map(|v| v.witness.clone()));
        }
        let glm = LieMeasuring::gl(m, s.size());
        for (y, p) in glm.phi.iter().enumerate() {
            ch.matrices_equal(&format!("{tag}: Ψ(x)∘τ = τ′∘Ψ(x), x{y}"), "", &p.mul(&s.tau), &d.tau.mul(p));
        }
        let Some(lm) = ch.result(&format!("{tag}: restriction lands in target"), "", restrict_measuring(m, &s, &d)) else {
            continue;
        };
        ch.pass(&format!("{tag}: restriction lands in target"), "");
        let rep = validate_lie_measuring(&lm);
        ch.expect_none(&format!("{tag}: restriction is a Lie measuring"), "", rep.violations.first().map(|v| v.witness.clone()));
    }
    ch
}

/// The ladder `Λ^{n+1} c(R) → Λ^{n+1} gl(R) → C̃_n(M(R)) → C̃_n(R) → D_n(R)` for one algebra.
struct Ladder {
    classical: Classical,
    ce: CeComplex,
    tt: ThetaTrace,
    dihedral: DihedralComplex,
    incl: Vec<Matrix>,
    proj: Vec<Matrix>,
}

impl Ladder {
    fn new(a: &std::sync::Arc<crate::algebra::AlgebraSpec>, fam: Family, r: usize, t: usize, cap: usize) -> Result<Self> {
        let classical = fam.build(a, r)?;
        let ce = CeComplex::new(classical.algebra.clone(), t + 1, cap)?;
        let tt = ThetaTrace::new(a.clone(), classical.size(), t, cap)?;
        let dihedral = DihedralComplex::new(a.clone(), t, cap)?;
        let incl = (0..=t + 1).map(|n| classical.wedge_inclusion(&ce, &tt.ce, n)).collect();
        let proj = (0..=t).map(|n| dihedral.from_connes(n, &tt.base.quots[n])).collect::<Result<_>>()?;
        Ok(Self { classical, ce, tt, dihedral, incl, proj })
    }

    /// The composite `Λ^{n+1} c(R) → D_n(R)`.
    fn composite(&self, n: usize) -> Matrix {
        self.proj[n].mul(&self.tt.trace[n]).mul(&self.tt.theta[n]).mul(&self.incl[n + 1])
    }
}

pub fn verify_sk_sp_ladder(m: &Measuring, top: usize, cap: usize) -> Checks {
    let mut ch = Checks::new(
        "sk-sp-ladder",
        "CE(sk_r) → CE(gl_r) →θ C̃(M_r) →tr C̃ → D commutes with the maps induced by x, square by square",
        measuring_subject(m),
    );
    if let Err(e) = m.require_cocommutative() {
        ch.fail("cocommutative", "", e.to_string());
        return ch;
    }
    if !involutive(&mut ch, m) {
        return ch;
    }
    let top = top.min(LADDER_TOP);
    if top < LADDER_TOP {
        ch.skip("ladder", format!("{}..={LADDER_TOP}", top + 1), "requested degree");
    }
    let mm = |r: usize| matrix_measuring(m, r);
    for (fam, r) in LADDER_CASES {
        let tag = format!("{}, r={r}", fam.name());
        let Some((t, (s, d))) = ch.fit(&format!("{tag}: ladder"), top, |t| {
            Ok((Ladder::new(&m.source, fam, r, t, cap)?, Ladder::new(&m.target, fam, r, t, cap)?))
        }) else {
            continue;
        };
        for (which, l) in [("source", &s), ("target", &d)] {
            let mut defect = None;
            for n in 1..=t {
                let lhs = l.dihedral.complex.d(n).mul(&l.composite(n));
                let rhs = l.composite(n - 1).mul(l.ce.complex.d(n + 1));
                if let Some(e) = lhs.first_difference(&rhs) {
                    defect = Some(format!("degree {n}: {e}"));
                    break;
                }
            }
            ch.expect_none(&format!("{tag}: {which} ladder composite is a chain map"), format!("n≤{t}"), defect);
        }
        let Some(lm) = ch.result(&format!("{tag}: restricted measuring"), "", restrict_measuring(m, &s.classical, &d.classical)) else {
            continue;
        };
        let glm = LieMeasuring::gl(m, s.classical.size());
        let size = s.classical.size();
        for y in 0..m.coalgebra.dim() {
            let x = SparseVec::unit(y);
            let maps = (|| -> Result<_> {
                let sub = CeComplex::measuring_maps(&lm, &x, &s.ce, &d.ce)?;
                let gl = CeComplex::measuring_maps(&glm, &x, &s.tt.ce, &d.tt.ce)?;
                let cm = quotient_maps(&cyclic_maps(&mm(size), &x, t, cap)?, &s.tt.matrices.quots, &d.tt.matrices.quots)?;
                let cb = quotient_maps(&cyclic_maps(m, &x, t, cap)?, &s.tt.base.quots, &d.tt.base.quots)?;
                let dm = DihedralMaps::new(m, &x, &s.dihedral, &d.dihedral, cap)?.bar;
                Ok((sub, gl, cm, cb, dm))
            })();
            let Some((sub, gl, cm, cb, dm)) = ch.result(&format!("{tag}: maps, x{y}"), format!("n≤{t}"), maps) else { continue };
            for n in 0..=t {
                let deg = format!("n={n}");
                let sq = |name: &str| format!("{tag}: {name} square, x{y}");
                ch.matrices_equal(&sq("inclusion"), deg.clone(), &gl[n + 1].mul(&s.incl[n + 1]), &d.incl[n + 1].mul(&sub[n + 1]));
                ch.matrices_equal(&sq("θ"), deg.clone(), &cm[n].mul(&s.tt.theta[n]), &d.tt.theta[n].mul(&gl[n + 1]));
                ch.matrices_equal(&sq("trace"), deg.clone(), &cb[n].mul(&s.tt.trace[n]), &d.tt.trace[n].mul(&cm[n]));
                ch.matrices_equal(&sq("projection"), deg.clone(), &dm[n].mul(&s.proj[n]), &d.proj[n].mul(&cb[n]));
                ch.matrices_equal(&sq("outer"), deg, &dm[n].mul(&s.composite(n)), &d.composite(n).mul(&sub[n + 1]));
            }
        }
    }
    ch
}

/// `HD_n(R)` dimensions for `n < top`.
pub fn dihedral_homology_dims(a: &std::sync::Arc<crate::algebra::AlgebraSpec>, top: usize, cap: usize) -> Result<Vec<usize>> {
    Ok(DihedralComplex::new(a.clone(), top, cap)?.homology()?.iter().map(|h| h.dim()).collect())
}
