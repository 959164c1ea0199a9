use super::*;
use crate::corpus::bundled;
use crate::error::Error;
use crate::report::Status;

fn bundled_doc() -> WorkspaceDoc {
    let mut doc = corpus_doc(&bundled());
    doc.aliases.insert("idOnDualnum".into(), "id-dualnum".into());
    doc.tasks = vec![
        TaskDoc::Compute { table: "hh".into(), algebra: Some("dualnum".into()), measuring: None, max_degree: Some(4), r: None },
        TaskDoc::Compute { table: "hc".into(), algebra: Some("Q".into()), measuring: None, max_degree: Some(5), r: None },
        TaskDoc::Compute { table: "lambda".into(), algebra: Some("dualnum".into()), measuring: None, max_degree: None, r: None },
        TaskDoc::Verify { suite: "all".into(), measuring: None, max_degree: None },
    ];
    doc
}

/// Regenerates `corpus/bundled.json` from the corpus built in code.
#[test]
#[ignore]
fn write_bundled_file() {
    let text = serde_json::to_string_pretty(&bundled_doc()).unwrap() + "\n";
    std::fs::write(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/bundled.json"), text).unwrap();
}

#[test]
fn bundled_file_matches_code() {
    let text = include_str!("../../corpus/bundled.json");
    let doc: WorkspaceDoc = serde_json::from_str(text).unwrap();
    assert_eq!(doc, bundled_doc());
    let ws = Workspace::bundled();
    let code = bundled();
    assert_eq!(ws.corpus.algebras, code.algebras);
    assert_eq!(ws.corpus.coalgebras, code.coalgebras);
    assert_eq!(ws.corpus.measurings, code.measurings);
}

fn with_algebra_edit(edit: impl FnOnce(&mut WorkspaceDoc)) -> Result<Workspace> {
    let mut doc = bundled_doc();
    edit(&mut doc);
    build(&doc)
}

#[test]
fn broken_associativity_names_the_triple() {
    let err = with_algebra_edit(|d| {
        let t3 = d.algebras.iter_mut().find(|a| a.name == "trunc3").unwrap();
        t3.products.insert("x*x".into(), [("1".to_string(), "1".to_string())].into());
    })
    .unwrap_err();
    let Error::Validation(msg) = err else { panic!("{err:?}") };
    assert!(msg.contains("trunc3") && msg.contains("associativity") && msg.contains("(xx)"), "{msg}");
}

#[test]
fn dangling_references_are_rejected() {
    let err = with_algebra_edit(|d| d.measurings[0].target = "nowhere".into()).unwrap_err();
    assert!(matches!(&err, Error::Validation(m) if m.contains("nowhere")), "{err:?}");
    let err = with_algebra_edit(|d| {
        d.tasks.push(TaskDoc::Verify { suite: "all".into(), measuring: Some("ghost".into()), max_degree: None })
    })
    .unwrap_err();
    assert!(matches!(&err, Error::Validation(m) if m.contains("tasks[4]") && m.contains("ghost")), "{err:?}");
    let err = with_algebra_edit(|d| {
        d.aliases.insert("x".into(), "ghost".into());
    })
    .unwrap_err();
    assert!(matches!(err, Error::Validation(_)));
}

#[test]
fn malformed_documents_are_parse_errors() {
    assert!(matches!(parse_workspace("{"), Err(Error::Parse(_))));
    assert!(matches!(parse_workspace(r#"{"algebra": []}"#), Err(Error::Parse(_))));
    let err = with_algebra_edit(|d| {
        d.algebras[0].unit.insert("1".into(), "1/0".into());
    })
    .unwrap_err();
    assert!(matches!(&err, Error::Validation(m) if m.contains("algebras[0] (Q).unit")), "{err:?}");
}

#[test]
fn nonpositive_caps_are_rejected() {
    assert!(with_algebra_edit(|d| d.caps.max_dim = 0).is_err());
    assert!(with_algebra_edit(|d| d.caps.max_degree = Some(0)).is_err());
}

#[test]
fn computed_tables() {
    let ws = Workspace::bundled();
    let req = |a: &str, top| ComputeRequest { algebra: Some(a.into()), max_degree: top, ..Default::default() };
    let hh = run_compute(&ws, TableKind::Hh, &req("dualnum", Some(4))).unwrap();
    assert_eq!(hh.column_usize("dim HH_n"), vec![2, 1, 1, 1]);
    let hc = run_compute(&ws, TableKind::Hc, &req("Q", Some(5))).unwrap();
    assert_eq!(hc.column_usize("Tot(CC)"), vec![1, 0, 1, 0]);
    assert_eq!(hc.certified, "n≤3");
    assert!(hc.rows.iter().all(|r| r[4] == "true"));
    let lam = run_compute(&ws, TableKind::Lambda, &req("dualnum", None)).unwrap();
    assert!(lam.rows.iter().all(|r| r.last().unwrap() == "true"));
    let hd = run_compute(&ws, TableKind::Hd, &req("Q", Some(6))).unwrap();
    assert_eq!(hd.column_usize("dim HD_n"), vec![1, 0, 0, 0, 1, 0]);
    let forms = run_compute(&ws, TableKind::Forms, &req("trunc3", Some(2))).unwrap();
    assert_eq!(forms.column_usize("dim Ω^p"), vec![3, 2, 0]);
    let hl = run_compute(&ws, TableKind::Leibniz, &ComputeRequest { algebra: Some("dualnum".into()), max_degree: Some(4), ..Default::default() }).unwrap();
    assert_eq!(hl.column_usize("dim"), vec![1, 2, 4, 8]);
}

#[test]
fn induced_rank_tables() {
    let ws = Workspace::bundled();
    let req = ComputeRequest { measuring: Some("idOnDualnum".into()), max_degree: Some(3), ..Default::default() };
    let t = run_compute(&ws, TableKind::Hh, &req).unwrap();
    assert_eq!(t.column_usize("rank 1"), t.column_usize("dim HH(dualnum)"));
    let req = ComputeRequest { measuring: Some("aug-z2".into()), max_degree: Some(3), ..Default::default() };
    assert_eq!(run_compute(&ws, TableKind::Hd, &req).unwrap().column_usize("rank 1"), vec![1, 0, 0]);
    assert!(run_compute(&ws, TableKind::Lie, &req).is_err());
}

#[test]
fn truncation_is_surfaced() {
    let ws = Workspace::bundled();
    let req = ComputeRequest { algebra: Some("m2".into()), max_degree: Some(9), ..Default::default() };
    assert!(matches!(run_compute(&ws, TableKind::Hh, &req), Err(Error::TruncationTooLarge { .. })));
}

#[test]
fn suite_ids_and_aliases() {
    assert_eq!(SUITES.len(), 21);
    for s in SUITES {
        assert_eq!(find_suite(s.id).unwrap().id, s.id);
        assert_eq!(find_suite(s.alias).unwrap().id, s.id);
    }
    assert!(matches!(select_suites("prop9.9"), Err(Error::UnknownName(_))));
    assert_eq!(select_suites("all").unwrap().len(), 21);
}

#[test]
fn star_product_on_the_identity() {
    let ws = Workspace::bundled();
    let rep = run_verify(&ws, "thm3.2", Some("idOnDualnum"), None).unwrap();
    assert_eq!(rep.failures(), 0);
    assert!(rep.records.iter().all(|r| r.suite == "star-product-measuring" && r.status == Status::Pass));
    assert_eq!(rep.render(Format::Md), run_verify(&ws, "thm3.2", Some("idOnDualnum"), None).unwrap().render(Format::Md));
}

#[test]
fn explicit_measuring_reports_unmet_preconditions() {
    let ws = Workspace::bundled();
    let rep = run_verify(&ws, "thm4.4", Some("id-ut2"), None).unwrap();
    assert!(rep.failures() > 0);
    assert!(rep.failing().all(|r| r.witness.is_some()));
}
