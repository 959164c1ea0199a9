//! Acceptance criteria, one line each. Every comparison is exact.

use hhc_core::algebra::Measuring;
use hhc_core::complex::induced_maps;
use hhc_core::corpus::bundled;
use hhc_core::cyclic::{hochschild_complex, normalized_mixed, unnormalized_mixed, CyclicModule, Normalization};
use hhc_core::dihedral::{verify_dihedral_maps, DihedralAction, LADDER_CASES};
use hhc_core::forms::Kahler;
use hhc_core::harness::{load_workspace, run_compute, run_verify, ComputeRequest, Format, TableKind, VerificationReport, Workspace};
use hhc_core::lambda::{eulerian_idempotents, verify_star_measuring};
use hhc_core::lie::{CeComplex, ClComplex, LieAlgebra, ThetaTrace};
use hhc_core::linalg::{q, rank, Matrix, SparseVec};
use hhc_core::report::Status;
use hhc_core::Error;
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn none<T: std::fmt::Display>(what: &str, d: Option<T>) -> Result<(), String> {
    match d {
        None => Ok(()),
        Some(x) => Err(format!("{what}: {x}")),
    }
}

fn structural_identities() -> Outcome {
    let c = bundled();
    let mut checked = 0;
    for a in &c.algebras {
        let cm = CyclicModule::new(a.clone(), 4, 5000).map_err(|e| e.to_string())?;
        for n in 1..=4 {
            for j in 1..=n {
                for i in 0..j {
                    if n >= 2 {
                        let lhs = cm.face(n - 1, i).mul(&cm.face(n, j));
                        let rhs = cm.face(n - 1, j - 1).mul(&cm.face(n, i));
                        none(&format!("{} d_{i}d_{j}, n={n}", a.name), lhs.first_difference(&rhs))?;
                    }
                }
            }
            let t = cm.cyclic_op(n);
            for i in 1..=n {
                let rhs = cm.cyclic_op(n - 1).mul(&cm.face(n, i - 1)).neg();
                none(&format!("{} d_{i}t, n={n}", a.name), cm.face(n, i).mul(&t).first_difference(&rhs))?;
            }
        }
        for n in 0..=4 {
            let t = cm.cyclic_op(n);
            let tn = (0..=n).fold(Matrix::identity(cm.dim(n)), |p, _| t.mul(&p));
            none(&format!("{} t^(n+1), n={n}", a.name), tn.first_difference(&Matrix::identity(cm.dim(n))))?;
        }
        let h = hochschild_complex(&cm).map_err(|e| e.to_string())?;
        none(&format!("{} b²", a.name), h.square_zero_defect().map(|(n, e)| format!("degree {n}: {e}")))?;
        let norm = Normalization::new(&cm);
        for (tag, mixed) in [("normalized", normalized_mixed(&cm, &norm)), ("unnormalized", unnormalized_mixed(&cm))] {
            none(&format!("{} {tag} mixed", a.name), mixed.identity_defect().map(|(w, n, e)| format!("{w} in degree {n}: {e}")))?;
        }
        for r in 1..=2 {
            let g = Arc::new(LieAlgebra::gl(a, r));
            for leibniz in [false, true] {
                let built = if leibniz { ClComplex::new(g.clone(), 3, 5000).map(|c| c.complex) } else { CeComplex::new(g.clone(), 3, 5000).map(|c| c.complex) };
                match built {
                    Ok(cx) => none(&format!("{} gl{r} d² (leibniz={leibniz})", a.name), cx.square_zero_defect().map(|(n, e)| format!("degree {n}: {e}")))?,
                    Err(Error::TruncationTooLarge { .. }) => continue,
                    Err(e) => return Err(e.to_string()),
                }
                checked += 1;
            }
        }
        if let Some(inv) = &a.involution {
            for n in 0..=4 {
                none(&format!("{} dihedral relations, n={n}", a.name), DihedralAction::new(&cm, inv, n).relation_defect(n))?;
            }
        }
    }
    Ok(format!("{} algebras, n≤4; {checked} CE/CL complexes at n≤3", c.algebras.len()))
}

fn dims(t: &hhc_core::harness::Table, col: &str) -> Vec<usize> {
    t.column_usize(col)
}

fn oracle_regressions(ws: &Workspace) -> Outcome {
    let req = |a: &str, top| ComputeRequest { algebra: Some(a.into()), max_degree: Some(top), ..Default::default() };
    let hh = run_compute(ws, TableKind::Hh, &req("dualnum", 4)).map_err(|e| e.to_string())?;
    ensure(dims(&hh, "dim HH_n") == [2, 1, 1, 1], || format!("HH(dualnum) = {:?}", dims(&hh, "dim HH_n")))?;
    let hc = run_compute(ws, TableKind::Hc, &req("Q", 5)).map_err(|e| e.to_string())?;
    ensure(dims(&hc, "Tot(CC)") == [1, 0, 1, 0], || format!("HC(Q) = {:?}", dims(&hc, "Tot(CC)")))?;
    for (name, want) in [("dualnum", 1), ("trunc3", 2)] {
        let k = Kahler::new(ws.algebra(name).unwrap().clone()).map_err(|e| e.to_string())?;
        ensure(k.dim() == want, || format!("Ω¹({name}) = {}", k.dim()))?;
    }
    let qq = ws.algebra("Q").unwrap().clone();
    let tt = ThetaTrace::new(qq, 2, 1, 5000).map_err(|e| e.to_string())?;
    let (hm, hq) = (tt.matrices.complex.homology(0).map_err(|e| e.to_string())?, tt.base.complex.homology(0).map_err(|e| e.to_string())?);
    let tr = induced_maps(&tt.trace[..1], &[hm.clone()], &[hq.clone()]).map_err(|e| e.to_string())?;
    ensure(hm.dim() == 1 && hq.dim() == 1 && rank(&tr[0]) == 1, || format!("HC_0(M_2(Q)) {} → HC_0(Q) {} of rank {}", hm.dim(), hq.dim(), rank(&tr[0])))?;
    Ok("HH(dualnum)=2,1,1,1; HC(Q)=1,0,1,0; Ω¹=1,2; trace on HC_0(M_2(Q)) has rank 1".into())
}

fn three_routes(ws: &Workspace) -> Outcome {
    let mut degrees = 0;
    for a in &ws.corpus.algebras {
        let req = ComputeRequest { algebra: Some(a.name.clone()), max_degree: Some(4), ..Default::default() };
        let t = run_compute(ws, TableKind::Hc, &req).map_err(|e| e.to_string())?;
        for r in &t.rows {
            ensure(r[4] == "true", || format!("{}: n={} gives {}, {}, {}", a.name, r[0], r[1], r[2], r[3]))?;
            degrees += 1;
        }
    }
    Ok(format!("{degrees} (algebra, degree) pairs, n≤2"))
}

fn suite_clean(rep: &VerificationReport, ids: &[&str]) -> Result<usize, String> {
    let mut passes = 0;
    for id in ids {
        let s = rep.summary.iter().find(|s| s.suite == *id).ok_or_else(|| format!("{id} did not run"))?;
        ensure(s.fail == 0 && s.pass > 0, || format!("{id}: {} pass, {} fail", s.pass, s.fail))?;
        passes += s.pass;
    }
    Ok(passes)
}

fn eulerian(ws: &Workspace, rep: &VerificationReport) -> Outcome {
    for d in 1..=3 {
        let e = eulerian_idempotents(d, 4, 5000).map_err(|e| e.to_string())?;
        none(&format!("d={d}"), e.defect())?;
    }
    for a in ws.corpus.algebras.iter().filter(|a| a.commutative) {
        let req = ComputeRequest { algebra: Some(a.name.clone()), ..Default::default() };
        let t = run_compute(ws, TableKind::Lambda, &req).map_err(|e| e.to_string())?;
        for r in &t.rows {
            ensure(r.last().unwrap() == "true", || format!("{} {} n={}: summands sum to {} not {}", a.name, r[0], r[1], r[r.len() - 2], r[2]))?;
        }
    }
    let passes = suite_clean(rep, &["eulerian-commute", "hh-lambda-summands", "hc-lambda-summands", "lambda-sbi-ladder"])?;
    Ok(format!("idempotents exact for n≤4; summands sum to totals; {passes} measuring checks"))
}

fn diagram_ledger(rep: &VerificationReport) -> Outcome {
    let ids: Vec<&str> = hhc_core::harness::SUITES.iter().map(|s| s.id).collect();
    let passes = suite_clean(rep, &ids)?;
    ensure(rep.failures() == 0, || format!("{} failing checks", rep.failures()))?;
    // The ladder must reach degree 3 in every classical family for some measuring.
    for (fam, r) in LADDER_CASES {
        let tag = format!("{}, r={r}: outer square", fam.name());
        let top = rep.records.iter().any(|c| c.suite == "sk-sp-ladder" && c.check.starts_with(&tag) && c.degrees == "n=3" && c.status == Status::Pass);
        ensure(top, || format!("sk/sp ladder never reaches n=3 for {tag}"))?;
    }
    let skipped = rep.records.iter().filter(|r| r.status == Status::SkippedByTruncation).count();
    Ok(format!("{} suites, {passes} checks pass, {skipped} skipped by the dimension cap", ids.len()))
}

fn fixture(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn rejected(name: &str, must: &[&str]) -> Result<(), String> {
    match load_workspace(fixture(name)) {
        Err(Error::Validation(m)) if must.iter().all(|s| m.contains(s)) => Ok(()),
        other => Err(format!("{name}: {other:?}")),
    }
}

fn negative_controls(ws: &Workspace) -> Outcome {
    rejected("broken_associativity.json", &["associativity", "(xx)x^2 = 1*x^2", "x(xx^2) = 0"])?;
    rejected("false_cocommutative.json", &["cocommutativity", "x12"])?;
    rejected("conjugation_violation.json", &["involution compatibility", "hat g"])?;
    // Undeclared, the same measuring loads and fails its suite instead.
    let loose = load_workspace(fixture("conjugation_undeclared.json")).map_err(|e| e.to_string())?;
    let rep = verify_dihedral_maps(loose.measuring("undeclared").unwrap(), 3, 5000);
    let witnessed = rep.records.iter().any(|r| r.status == Status::Fail && r.witness.as_deref().is_some_and(|w| w.contains("hat g")));
    ensure(witnessed, || format!("dihedral suite on the undeclared measuring: {:?}", rep.records))?;
    // One perturbed entry of the identity on dual numbers: x ↦ 1 + x.
    let id = ws.measuring("idOnDualnum").unwrap();
    let mut phi = id.phi[0].clone();
    phi = phi.add(&Matrix::from_fn(2, 2, |j| if j == 1 { SparseVec::single(0, q(1)) } else { SparseVec::new() }));
    let bad = Measuring::new("perturbed", id.coalgebra.clone(), id.source.clone(), id.target.clone(), vec![phi]).unwrap();
    let rep = verify_star_measuring(&bad, 4, 5000);
    let fail = rep.records.iter().find(|r| r.status == Status::Fail).ok_or("perturbed measuring passes the star-product suite")?;
    ensure(fail.witness.as_deref().is_some_and(|w| !w.is_empty()), || "failure without witness".into())?;
    Ok(format!("3 fixtures rejected at validation; undeclared conjugation and perturbed identity fail with witnesses ({})", fail.check))
}

fn determinism(in_process: &VerificationReport) -> Outcome {
    let dir = std::env::temp_dir().join(format!("hhc-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for threads in ["1", "3"] {
        let out = dir.join(format!("report-{threads}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_hhc"))
            .args(["report", "--format", "json", "--suite", "all", "--out"])
            .arg(&out)
            .env("HHC_THREADS", threads)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.code() == Some(0), || format!("hhc exited with {status}"))?;
        outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    ensure(outputs[0] == outputs[1], || "reports differ between 1 and 3 threads".into())?;
    ensure(outputs[0] == in_process.render(Format::Json).into_bytes(), || "CLI report differs from the in-process report".into())?;
    Ok(format!("{} bytes identical across HHC_THREADS=1, 3 and in-process", outputs[0].len()))
}

fn main() {
    let start = Instant::now();
    let ws = Workspace::bundled();
    let report = run_verify(&ws, "all", None, None);
    let mut results: Vec<(&str, Outcome)> = vec![("structural identities", structural_identities())];
    results.push(("oracle regressions", oracle_regressions(&ws)));
    results.push(("three-route HC agreement", three_routes(&ws)));
    match &report {
        Ok(rep) => {
            results.push(("Eulerian suite", eulerian(&ws, rep)));
            results.push(("diagram ledger", diagram_ledger(rep)));
        }
        Err(e) => {
            results.push(("Eulerian suite", Err(e.to_string())));
            results.push(("diagram ledger", Err(e.to_string())));
        }
    }
    results.push(("negative controls", negative_controls(&ws)));
    let secs = start.elapsed().as_secs_f64();
    // The structural criterion carries the runtime bound for the whole in-process run.
    results[0].1 = match results[0].1.clone() {
        Ok(d) if secs < 300.0 => Ok(format!("{d}; in-process criteria took {secs:.1}s")),
        Ok(_) => Err(format!("in-process criteria took {secs:.1}s, over 5 minutes")),
        e => e,
    };
    results.push(("determinism", report.as_ref().map_err(|e| e.to_string()).and_then(determinism)));
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
