use serde::Serialize;

use modcycle::gadgets::gap;
use modcycle::graph::{is_biconnected, is_bipartite, is_connected, is_planar, two_cuts, Graph};
use modcycle::residue::{cycle_residues, has_mod_cycle, CycleWitness, ResidueSet, MAX_MODULUS};

use crate::input::read_graphs;
use crate::{emit, CliError, OutputArgs, Verified};

#[derive(Serialize)]
struct Report {
    graph6: String,
    order: usize,
    edges: usize,
    gap: i64,
    connected: bool,
    biconnected: bool,
    planar: bool,
    bipartite: bool,
    modulus: usize,
    residue: usize,
    cycle_residues: ResidueSet,
    /// A cycle of length `residue (mod modulus)`.
    mod_cycle: Option<CycleWitness>,
    /// A cycle of length divisible by 4.
    mod4_cycle: Option<CycleWitness>,
    /// Vertex pairs whose removal disconnects a 2-connected graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    two_cuts: Option<Vec<Vec<usize>>>,
}

fn report(g: &Graph, k: usize, l: usize) -> Report {
    let biconnected = is_biconnected(g).unwrap_or(false);
    Report {
        graph6: g.to_string(),
        order: g.order(),
        edges: g.size(),
        gap: gap(g),
        connected: is_connected(g).unwrap_or(false),
        biconnected,
        planar: is_planar(g),
        bipartite: is_bipartite(g),
        modulus: k,
        residue: l,
        cycle_residues: cycle_residues(g, k),
        mod_cycle: has_mod_cycle(g, l, k),
        mod4_cycle: has_mod_cycle(g, 0, 4),
        two_cuts: biconnected
            .then(|| two_cuts(g).map(|cuts| cuts.into_iter().map(|c| c.vertices).collect()).ok())
            .flatten(),
    }
}

fn text(r: &Report) -> String {
    let cycle = |c: &Option<CycleWitness>| match c {
        Some(c) => format!("{:?}", c.open()),
        None => "none".into(),
    };
    let mut s = format!(
        "graph6: {}\norder: {}\nedges: {}\ngap: {}\nconnected: {}\nbiconnected: {}\nplanar: {}\nbipartite: {}\n\
         cycle residues mod {}: {}\ncycle of length {} mod {}: {}\ncycle of length 0 mod 4: {}\n",
        r.graph6,
        r.order,
        r.edges,
        r.gap,
        r.connected,
        r.biconnected,
        r.planar,
        r.bipartite,
        r.modulus,
        r.cycle_residues,
        r.residue,
        r.modulus,
        cycle(&r.mod_cycle),
        cycle(&r.mod4_cycle),
    );
    if let Some(cuts) = &r.two_cuts {
        s.push_str(&format!("2-cuts: {cuts:?}\n"));
    }
    s
}

pub fn run(source: &str, k: usize, l: usize, output: &OutputArgs) -> Result<Verified, CliError> {
    if !(2..=MAX_MODULUS).contains(&k) {
        return Err(CliError::Usage(format!("--k must be in 2..={MAX_MODULUS}, got {k}")));
    }
    if l >= k {
        return Err(CliError::Usage(format!("--l must be below --k, got {l}")));
    }
    let graphs = read_graphs(source)?;
    let reports: Vec<Report> = graphs.iter().map(|g| report(g, k, l)).collect();
    let out = if output.json {
        reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("report serialises") + "\n")
            .collect::<String>()
    } else {
        reports.iter().map(text).collect::<Vec<_>>().join("\n")
    };
    emit(&output.out, &out)?;
    Ok(true)
}
