use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use dirburn::bounds::upper_bound;
use dirburn::burning::{
    assignment_coverage, check_sequence, simulate_sequence, BurningAssignment, BurningInstance,
    BurningSequence, SequenceCheck,
};
use dirburn::generators::{self, Seed};
use dirburn::reductions::{
    brute_force_3partition, brute_force_dominating_set, brute_force_set_cover, dag_to_set_cover,
    set_cover_to_dag, symmetrize, three_partition_to_tree, EdgeList, SetCoverInstance,
    ThreePartitionInstance,
};
use dirburn::solvers::{min_burning_number_with, SolveOptions, SolverRegistry, Witness};
use dirburn::{parse_digraph, serialize_digraph, Digraph, NodeId, NodeSet};
use serde::Serialize;

use super::{
    Command, CommandResult, OracleCommand, ReduceCommand, SolveArgs, VerifyArgs, EXIT_NO, EXIT_YES,
};

type Outcome = Result<CommandResult, String>;

pub(crate) fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Simulate { graph, sequence } => simulate(&graph, &sequence),
        Command::Bound { graph, json } => bound(&graph, json),
        Command::Generate {
            family,
            params,
            seed,
            output,
        } => generate(&family, &params, Seed(seed), output.as_deref()),
        Command::Reduce(r) => reduce(r),
        Command::Oracle(o) => oracle(o),
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Digraph, String> {
    parse_digraph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn answer(yes: bool, stdout: String) -> Outcome {
    Ok(CommandResult {
        exit_code: if yes { EXIT_YES } else { EXIT_NO },
        stdout,
        stderr: String::new(),
    })
}

/// Writes `text` to `output` if given, else returns it as stdout.
fn emit(text: String, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            answer(true, String::new())
        }
        None => answer(true, text),
    }
}

fn json_line(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn parse_target(graph: &Digraph, target: Option<&str>) -> Result<NodeSet, String> {
    let n = graph.node_count();
    let Some(text) = target else {
        return Ok(NodeSet::full(n));
    };
    let mut set = NodeSet::empty(n);
    for label in text.split(',').map(str::trim).filter(|l| !l.is_empty()) {
        set.insert(graph.require_node(label).map_err(|e| e.to_string())?);
    }
    Ok(set)
}

fn parse_ranges(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad range `{t}`")))
        .collect()
}

fn labels(graph: &Digraph, set: &NodeSet) -> Vec<String> {
    set.iter().map(|v| graph.label(v).to_string()).collect()
}

#[derive(Serialize)]
struct WitnessJson {
    kind: &'static str,
    text: String,
}

#[derive(Serialize)]
struct SolveJson {
    mode: &'static str,
    answer: &'static str,
    burning_number: Option<usize>,
    ranges: Option<Vec<usize>>,
    target: Option<Vec<String>>,
    witness: Option<WitnessJson>,
    solver: &'static str,
    nodes_explored: u64,
}

fn solve(args: SolveArgs) -> Outcome {
    let graph = load_graph(&args.graph)?;
    let target = parse_target(&graph, args.target.as_deref())?;
    let registry = SolverRegistry::builtin();
    let options = SolveOptions {
        parallel: args.parallel,
    };
    let ranges = match (&args.ranges, args.budget) {
        (Some(text), _) => Some(parse_ranges(text)?),
        (None, Some(b)) => Some((1..=b).rev().collect()),
        (None, None) => None,
    };
    let target_json = args.target.as_ref().map(|_| labels(&graph, &target));
    let witness_json = |w: &Witness| WitnessJson {
        kind: w.kind(),
        text: w.to_text(&graph),
    };
    let mut out = String::new();

    let Some(ranges) = ranges else {
        let best = min_burning_number_with(&registry, &args.algorithm, &graph, &target, options)
            .map_err(|e| e.to_string())?;
        let check = BurningInstance::with_target(&graph, target.clone(), best.value)
            .map_err(|e| e.to_string())?;
        self_check(&best.witness, &check)?;
        if args.json {
            out = json_line(&SolveJson {
                mode: "minimum",
                answer: "yes",
                burning_number: Some(best.value),
                ranges: None,
                target: target_json,
                witness: Some(witness_json(&best.witness)),
                solver: best.solver,
                nodes_explored: best.nodes_explored,
            });
        } else {
            writeln!(out, "burning number: {}", best.value).unwrap();
            write_witness(&mut out, &best.witness, &graph);
            writeln!(
                out,
                "solver: {} ({} nodes explored)",
                best.solver, best.nodes_explored
            )
            .unwrap();
        }
        return answer(true, out);
    };

    let instance =
        BurningInstance::new(&graph, target.clone(), ranges).map_err(|e| e.to_string())?;
    let solver = registry
        .resolve(&args.algorithm, &instance)
        .map_err(|e| e.to_string())?;
    solver.check(&instance).map_err(|e| e.to_string())?;
    let result = solver
        .solve(&instance, options)
        .map_err(|e| e.to_string())?;
    if let Some(w) = &result.witness {
        self_check(w, &instance)?;
    }
    if args.json {
        out = json_line(&SolveJson {
            mode: "decision",
            answer: if result.is_yes() { "yes" } else { "no" },
            burning_number: None,
            ranges: Some(instance.ranges().to_vec()),
            target: target_json,
            witness: result.witness.as_ref().map(witness_json),
            solver: solver.name(),
            nodes_explored: result.nodes_explored,
        });
    } else {
        match &result.witness {
            Some(w) => {
                writeln!(out, "YES").unwrap();
                write_witness(&mut out, w, &graph);
            }
            None => writeln!(out, "NO").unwrap(),
        }
        writeln!(
            out,
            "solver: {} ({} nodes explored)",
            solver.name(),
            result.nodes_explored
        )
        .unwrap();
    }
    answer(result.is_yes(), out)
}

fn self_check(witness: &Witness, instance: &BurningInstance<'_>) -> Result<(), String> {
    if witness.verifies(instance) {
        Ok(())
    } else {
        Err(format!(
            "internal error: solver witness `{}` failed verification",
            witness.to_text(instance.graph())
        ))
    }
}

fn write_witness(out: &mut String, w: &Witness, graph: &Digraph) {
    writeln!(out, "{}: {}", w.kind(), w.to_text(graph)).unwrap();
}

#[derive(Serialize)]
struct VerifyJson {
    valid: bool,
    kind: &'static str,
    /// `already_burning` or `unburned` when invalid.
    reason: Option<&'static str>,
    step: Option<usize>,
    node: Option<String>,
    unburned: Vec<String>,
}

fn verify(args: VerifyArgs) -> Outcome {
    let graph = load_graph(&args.graph)?;
    let target = parse_target(&graph, args.target.as_deref())?;
    let mut report = VerifyJson {
        valid: true,
        kind: "sequence",
        reason: None,
        step: None,
        node: None,
        unburned: Vec::new(),
    };
    let unburned_set = |report: &mut VerifyJson, missing: &NodeSet| {
        if !missing.is_empty() {
            report.valid = false;
            report.reason = Some("unburned");
            report.unburned = labels(&graph, missing);
        }
    };
    if let Some(text) = &args.sequence {
        let seq = BurningSequence::parse(text, &graph).map_err(|e| e.to_string())?;
        match check_sequence(&graph, &seq, &target, !args.lenient) {
            SequenceCheck::Valid => {}
            SequenceCheck::AlreadyBurning { step, node } => {
                report.valid = false;
                report.reason = Some("already_burning");
                report.step = Some(step);
                report.node = Some(graph.label(node).to_string());
            }
            SequenceCheck::Unburned(missing) => unburned_set(&mut report, &missing),
        }
    } else if let Some(text) = &args.assignment {
        report.kind = "assignment";
        let phi = BurningAssignment::parse(text, &graph).map_err(|e| e.to_string())?;
        let mut missing = target.clone();
        missing.difference_with(&assignment_coverage(&graph, &phi));
        unburned_set(&mut report, &missing);
    }
    let out = if args.json {
        json_line(&report)
    } else {
        match report.reason {
            None => "VALID\n".to_string(),
            Some("already_burning") => format!(
                "INVALID: {} already burning at step {}\n",
                report.node.as_deref().unwrap(),
                report.step.unwrap()
            ),
            Some(_) => format!("INVALID: unburned {}\n", report.unburned.join(",")),
        }
    };
    answer(report.valid, out)
}

fn simulate(path: &Path, sequence: &str) -> Outcome {
    let graph = load_graph(path)?;
    let seq = BurningSequence::parse(sequence, &graph).map_err(|e| e.to_string())?;
    let trace = simulate_sequence(&graph, &seq);
    let mut out = String::new();
    for (i, burned) in trace.burned_after_step.iter().enumerate() {
        let note = if trace.already_burning[i] {
            " (already burning)"
        } else {
            ""
        };
        writeln!(
            out,
            "step {}: light {}{note}; burning {}",
            i + 1,
            graph.label(seq.steps()[i]),
            labels(&graph, burned).join(",")
        )
        .unwrap();
    }
    let n = graph.node_count();
    writeln!(out, "burned {}/{} nodes", trace.final_burned(n).len(), n).unwrap();
    answer(true, out)
}

#[derive(Serialize)]
struct BoundJson {
    nodes: usize,
    arcs: usize,
    weakly_connected: bool,
    strongly_connected: bool,
    dag: bool,
    arborescence: bool,
    single_source_dag: bool,
    sources: usize,
    reticulation_number: usize,
    upper_bound: UpperBoundJson,
}

#[derive(Serialize)]
struct UpperBoundJson {
    value: usize,
    rule: &'static str,
    sharp: bool,
}

fn bound(path: &Path, json: bool) -> Outcome {
    let graph = load_graph(path)?;
    let c = graph.classify();
    let b = upper_bound(&graph);
    let report = BoundJson {
        nodes: c.n,
        arcs: c.m,
        weakly_connected: c.weakly_connected,
        strongly_connected: c.strongly_connected,
        dag: c.is_dag,
        arborescence: c.is_arborescence,
        single_source_dag: c.single_source_dag,
        sources: c.source_count,
        reticulation_number: graph.reticulation_number(),
        upper_bound: UpperBoundJson {
            value: b.value,
            rule: b.rule.name(),
            sharp: b.sharp,
        },
    };
    if json {
        return answer(true, json_line(&report));
    }
    let yn = |x: bool| if x { "yes" } else { "no" };
    let mut out = String::new();
    writeln!(out, "nodes: {}", report.nodes).unwrap();
    writeln!(out, "arcs: {}", report.arcs).unwrap();
    writeln!(out, "weakly connected: {}", yn(report.weakly_connected)).unwrap();
    writeln!(out, "strongly connected: {}", yn(report.strongly_connected)).unwrap();
    writeln!(out, "dag: {}", yn(report.dag)).unwrap();
    writeln!(out, "arborescence: {}", yn(report.arborescence)).unwrap();
    writeln!(out, "single-source dag: {}", yn(report.single_source_dag)).unwrap();
    writeln!(out, "sources: {}", report.sources).unwrap();
    writeln!(out, "reticulation number: {}", report.reticulation_number).unwrap();
    writeln!(
        out,
        "upper bound: {} ({}{})",
        b.value,
        b.rule,
        if b.sharp { ", sharp" } else { "" }
    )
    .unwrap();
    answer(true, out)
}

fn generate(family: &str, params: &[usize], seed: Seed, output: Option<&Path>) -> Outcome {
    let arity = match family {
        "single-source-dag" | "strongly-connected" | "digraph" => 2,
        _ => 1,
    };
    if params.len() != arity {
        return Err(format!(
            "family `{family}` takes {arity} parameter(s), got {}",
            params.len()
        ));
    }
    let n = params[0];
    let m = params.get(1).copied().unwrap_or(0);
    let graph = match family {
        "path" => Ok(generators::path(n)),
        "cycle" => generators::cycle(n),
        "spider" => generators::spider(n),
        "source-star" => generators::source_star(n),
        "isolated-plus-arc" => generators::isolated_plus_arc(n),
        "empty" => Ok(generators::empty_graph(n)),
        "arborescence" => generators::random_arborescence(n, seed),
        "single-source-dag" => generators::random_single_source_dag(n, m, seed),
        "strongly-connected" => generators::random_strongly_connected(n, m, seed),
        "digraph" => generators::random_digraph(n, m, seed),
        _ => return Err(format!("unknown family `{family}`")),
    }
    .map_err(|e| e.to_string())?;
    emit(serialize_digraph(&graph), output)
}

fn reduce(command: ReduceCommand) -> Outcome {
    let (text, output): (String, Option<PathBuf>) = match command {
        ReduceCommand::SetCoverToDag { input, output } => {
            let sc = SetCoverInstance::parse(&read(&input)?).map_err(|e| e.to_string())?;
            (set_cover_to_dag(&sc).to_text(), output)
        }
        ReduceCommand::DagToSetCover {
            graph,
            budget,
            output,
        } => {
            if budget == 0 {
                return Err("--budget must be at least 1".into());
            }
            (
                dag_to_set_cover(&load_graph(&graph)?, budget).to_text(),
                output,
            )
        }
        ReduceCommand::ThreePartitionToTree { input, output } => {
            let tp = ThreePartitionInstance::parse(&read(&input)?).map_err(|e| e.to_string())?;
            (three_partition_to_tree(&tp).gadget.to_text(), output)
        }
        ReduceCommand::Symmetrize { input, output } => {
            let edges = EdgeList::parse(&read(&input)?).map_err(|e| e.to_string())?;
            let d = symmetrize(&edges).map_err(|e| e.to_string())?;
            (serialize_digraph(&d), output)
        }
    };
    emit(text, output.as_deref())
}

fn oracle(command: OracleCommand) -> Outcome {
    match command {
        OracleCommand::SetCover { input } => {
            let sc = SetCoverInstance::parse(&read(&input)?).map_err(|e| e.to_string())?;
            match brute_force_set_cover(&sc) {
                Some(cover) => {
                    let sets: Vec<String> = cover.iter().map(|i| (i + 1).to_string()).collect();
                    answer(true, format!("YES: sets {}\n", sets.join(",")))
                }
                None => answer(false, "NO\n".into()),
            }
        }
        OracleCommand::ThreePartition { input } => {
            let tp = ThreePartitionInstance::parse(&read(&input)?).map_err(|e| e.to_string())?;
            match brute_force_3partition(&tp) {
                Some(triples) => {
                    let parts: Vec<String> = triples
                        .iter()
                        .map(|[a, b, c]| format!("{{{a},{b},{c}}}"))
                        .collect();
                    answer(true, format!("YES: {}\n", parts.join(" ")))
                }
                None => answer(false, "NO\n".into()),
            }
        }
        OracleCommand::DominatingSet { graph, k } => {
            let g = load_graph(&graph)?;
            match brute_force_dominating_set(&g, k) {
                Some(set) => {
                    let names: Vec<&str> = set.iter().map(|&v: &NodeId| g.label(v)).collect();
                    answer(true, format!("YES: {}\n", names.join(",")))
                }
                None => answer(false, "NO\n".into()),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_lists() {
        assert_eq!(parse_ranges("3, 2,2,").unwrap(), [3, 2, 2]);
        assert!(parse_ranges("3,x").is_err());
        assert!(parse_ranges("").unwrap().is_empty());
    }

    #[test]
    fn target_lists() {
        let g = parse_digraph("a -> b\nb -> c").unwrap();
        assert_eq!(parse_target(&g, None).unwrap().len(), 3);
        let t = parse_target(&g, Some("c, a")).unwrap();
        assert_eq!(labels(&g, &t), ["a", "c"]);
        assert!(parse_target(&g, Some("a,q")).is_err());
    }
}
