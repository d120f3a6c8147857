use serde::Serialize;

use modcycle::constructor::{extremal_family_g, extremal_family_h, extremal_for_n, FamilyGraph, TraceEntry};
use modcycle::dsl::{eval, parse};
use modcycle::gadgets::{gap, reversal_closure, RootedGraph};

use crate::{emit, CliError, FamilyArg, OutputArgs, Verified};

#[derive(Serialize)]
struct Report {
    graph6: String,
    roots: (usize, usize),
    order: usize,
    edges: usize,
    gap: i64,
    trace: Vec<TraceEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reversal_closure: Option<Vec<String>>,
}

fn family_member(family: Option<FamilyArg>, k: Option<usize>, n: Option<usize>) -> Result<FamilyGraph, CliError> {
    let usage = |m: String| CliError::Usage(m);
    let built = match (family, k, n) {
        (_, Some(_), Some(_)) => return Err(usage("give either --k or --n, not both".into())),
        (None, Some(_), None) => return Err(usage("--k needs --family".into())),
        (None, None, Some(n)) => extremal_for_n(n),
        (Some(FamilyArg::G), Some(k), None) => extremal_family_g(k),
        (Some(FamilyArg::H), Some(k), None) => extremal_family_h(k),
        (Some(f), None, Some(n)) => {
            let (base, name) = match f {
                FamilyArg::G => (8, "G"),
                FamilyArg::H => (13, "H"),
            };
            if n < base || (n - base) % 2 != 0 {
                return Err(usage(format!("family {name} has orders {base}, {}, {}, ...", base + 2, base + 4)));
            }
            match f {
                FamilyArg::G => extremal_family_g((n - base) / 2),
                FamilyArg::H => extremal_family_h((n - base) / 2),
            }
        }
        (Some(_), None, None) => return Err(usage("--family needs --k or --n".into())),
        (None, None, None) => return Err(usage("give an expression, --family or --n".into())),
    };
    built.map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(
    expr: Option<&str>,
    family: Option<FamilyArg>,
    k: Option<usize>,
    n: Option<usize>,
    reverse: bool,
    output: &OutputArgs,
) -> Result<Verified, CliError> {
    let (rooted, trace) = match expr {
        Some(text) => {
            if family.is_some() || k.is_some() || n.is_some() {
                return Err(CliError::Usage("an expression cannot be combined with --family, --k or --n".into()));
            }
            let e = parse(text).map_err(|e| CliError::Input(e.to_string()))?;
            let v = eval(&e, text).map_err(|e| CliError::Input(e.to_string()))?;
            (v.rooted, v.trace)
        }
        None => {
            let f = family_member(family, k, n)?;
            let (x, y) = f.attach;
            let trace = f.construction.trace.clone();
            (RootedGraph::new(f.construction.graph, x, y).expect("attach points are vertices"), trace)
        }
    };
    let closure = if reverse {
        let c = reversal_closure(&rooted.graph).map_err(|e| CliError::Usage(e.to_string()))?;
        Some(c.into_iter().map(|g| g.to_string()).collect::<Vec<_>>())
    } else {
        None
    };
    let g = &rooted.graph;
    let text = if output.json {
        let r = Report {
            graph6: g.to_string(),
            roots: rooted.roots,
            order: g.order(),
            edges: g.size(),
            gap: gap(g),
            trace,
            reversal_closure: closure,
        };
        serde_json::to_string(&r).expect("report serialises") + "\n"
    } else {
        let mut s = format!("{g}\n");
        for h in closure.iter().flatten() {
            s.push_str(h);
            s.push('\n');
        }
        s
    };
    emit(&output.out, &text)?;
    Ok(true)
}
