//! Workspace files, the suite registry, compute tables and report rendering.

mod compute;
mod render;
mod suites;
mod workspace;

pub use compute::{run_compute, ComputeRequest, Table, TableKind};
pub use render::{Format, SuiteSummary, VerificationReport};
pub use suites::{find_suite, plan, run_jobs, select_suites, Job, Needs, Suite, SuiteFn, DEFAULT_CAP, HOCHSCHILD_TOP, LIE_TOP, SUITES};
pub use workspace::{
    build, corpus_doc, load_workspace, parse_workspace, AlgebraDoc, CapsDoc, CoalgebraDoc, MeasuringDoc, TaskDoc, VecDoc,
    Workspace, WorkspaceDoc,
};

use crate::error::Result;

/// Runs `suite` (an id, an alias or `all`) on one measuring or on every applicable one.
pub fn run_verify(ws: &Workspace, suite: &str, measuring: Option<&str>, max_degree: Option<usize>) -> Result<VerificationReport> {
    let suites = select_suites(suite)?;
    let (ms, explicit) = match measuring {
        Some(n) => (vec![ws.measuring(n)?.clone()], true),
        None => (ws.corpus.measurings.clone(), false),
    };
    let jobs = plan(&suites, &ms, explicit, max_degree.or(ws.caps.max_degree));
    Ok(VerificationReport::new(run_jobs(&jobs, ws.caps.max_dim)))
}

/// Outcome of one workspace task.
#[derive(Clone, Debug)]
pub enum TaskOutput {
    Table(Table),
    Report(VerificationReport),
}

pub fn run_task(ws: &Workspace, task: &TaskDoc) -> Result<TaskOutput> {
    match task {
        TaskDoc::Compute { table, algebra, measuring, max_degree, r } => {
            let req = ComputeRequest { algebra: algebra.clone(), measuring: measuring.clone(), max_degree: *max_degree, r: *r };
            Ok(TaskOutput::Table(run_compute(ws, table.parse()?, &req)?))
        }
        TaskDoc::Verify { suite, measuring, max_degree } => Ok(TaskOutput::Report(run_verify(ws, suite, measuring.as_deref(), *max_degree)?)),
    }
}

#[cfg(test)]
mod tests;
