use std::path::PathBuf;

use clap::ValueEnum;

use modcycle::graph::Graph;
use modcycle::residue::ResidueSet;
use modcycle::search::{
    enumerate_modfree, lemma_audit, max_edges, prop_max_order, prop_tight_gadget, verify_prop_gadget,
    GraphClass, SearchReport, Task, PROP_MIN_ORDER,
};

use crate::input::read_graphs;
use crate::{emit, CliError, Verified};

#[derive(Clone, Copy, ValueEnum)]
pub enum VerifyTask {
    MaxEdges,
    PropTable,
    LemmaAudit,
}

/// `03`, `0,3` or `{0,3}`.
fn parse_pair(text: &str) -> Result<ResidueSet, CliError> {
    let digits: Vec<usize> = text
        .chars()
        .filter(|c| !matches!(c, ',' | '{' | '}' | ' '))
        .map(|c| c.to_digit(10).map(|d| d as usize).filter(|&d| d < 4))
        .collect::<Option<_>>()
        .ok_or_else(|| CliError::Usage(format!("bad --L {text:?}; expected two residues mod 4 such as 03")))?;
    let set = ResidueSet::from_residues(4, digits.iter().copied());
    if digits.len() != 2 || prop_max_order(&set).is_none() {
        return Err(CliError::Usage(format!("--L must be one of 01, 12, 23, 03, got {text:?}")));
    }
    Ok(set)
}

fn prop_ok(r: &SearchReport) -> bool {
    let l = r.root_type.expect("rooted report");
    let mut ok = r.within_bound() && r.revalidate().is_ok();
    if Some(r.order) == prop_max_order(&l) {
        ok &= r.max_edges == r.bound
            && r.reversing_classes == Some(1)
            && r.tight_example == prop_tight_gadget(&l).map(|g| g.to_string());
    }
    ok
}

fn audit_report(graphs: &[Graph], order: usize) -> Result<SearchReport, CliError> {
    let mut r = SearchReport::new(Task::LemmaAudit, order, GraphClass::Biconnected);
    r.examined = graphs.len();
    for g in graphs {
        let v = lemma_audit(g).map_err(|e| CliError::Input(format!("{g}: {e}")))?;
        r.violations.extend(v);
    }
    Ok(r)
}

pub fn run(
    task: VerifyTask,
    n: Option<usize>,
    class: &str,
    pair: Option<&str>,
    workers: Option<usize>,
    input: Option<&str>,
    out: &Option<PathBuf>,
) -> Result<Verified, CliError> {
    let usage = |m: &str| CliError::Usage(m.to_string());
    let search = |e: modcycle::search::SearchError| CliError::Usage(e.to_string());
    if workers == Some(0) {
        return Err(usage("--workers must be positive"));
    }
    if input.is_some() && !matches!(task, VerifyTask::LemmaAudit) {
        return Err(usage("only lemma-audit reads input graphs"));
    }
    let class: GraphClass = class.parse().map_err(search)?;
    let (reports, ok): (Vec<SearchReport>, bool) = match task {
        VerifyTask::MaxEdges => {
            let n = n.ok_or_else(|| usage("max-edges needs --n"))?;
            let r = max_edges(n, class, workers).map_err(search)?;
            let ok = r.within_bound() && r.revalidate().is_ok();
            (vec![r], ok)
        }
        VerifyTask::PropTable => {
            let sets = match pair {
                Some(p) => vec![parse_pair(p)?],
                None => [3, 0, 1, 2].map(ResidueSet::consecutive_pair).to_vec(),
            };
            let mut reports = Vec::new();
            for l in sets {
                let max = prop_max_order(&l).expect("named pair");
                let orders = match n {
                    Some(n) => vec![n],
                    None => (PROP_MIN_ORDER..=max).collect(),
                };
                for n in orders {
                    reports.push(verify_prop_gadget(&l, n, workers).map_err(search)?);
                }
            }
            let ok = reports.iter().all(prop_ok);
            (reports, ok)
        }
        VerifyTask::LemmaAudit => {
            let r = match (n, input) {
                (Some(_), Some(_)) => return Err(usage("give either --n or input graphs")),
                (Some(n), None) => {
                    let graphs = enumerate_modfree(n, GraphClass::Biconnected, workers).map_err(search)?;
                    audit_report(&graphs, n)?
                }
                (None, Some(src)) => {
                    let graphs = read_graphs(src)?;
                    let order = graphs.iter().map(Graph::order).max().unwrap_or(0);
                    audit_report(&graphs, order)?
                }
                (None, None) => return Err(usage("lemma-audit needs --n or input graphs")),
            };
            let ok = r.violations.is_empty();
            (vec![r], ok)
        }
    };
    let json = if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(&reports)
    }
    .expect("report serialises");
    emit(&None, &(json + "\n"))?;
    if out.is_some() {
        let mut lines: Vec<String> = reports.iter().flat_map(|r| r.extremal.iter()).map(|e| match e.roots {
            Some((x, y)) => format!("{} {x} {y}", e.graph6),
            None => e.graph6.clone(),
        }).collect();
        lines.sort();
        emit(out, &lines.iter().map(|l| format!("{l}\n")).collect::<String>())?;
    }
    Ok(ok)
}
