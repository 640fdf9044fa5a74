//! Exact solvers for partial burning with ranges.
//!
//! Every algorithm implements [`Solver`] and is looked up by name in a
//! [`SolverRegistry`]. The built-in registry holds:
//!
//! | name              | algorithm                                              |
//! |-------------------|--------------------------------------------------------|
//! | `brute`           | enumeration of strict burning sequences                 |
//! | `tree`            | furthest-sink branching on arborescences                |
//! | `branching`       | in-neighbourhood branching, min-neighbourhood pivot     |
//! | `branching-plain` | in-neighbourhood branching, smallest-index pivot        |
//!
//! `auto` resolves to `tree` on arborescences and `branching` elsewhere.

mod branching;
mod brute;
mod tree;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

pub use branching::{digraph_burning, digraph_burning_with, BranchingSolver};
pub use brute::{brute_force_burn, brute_force_burn_with, BruteForceSolver};
pub use tree::{tree_burning, TreeSolver};

use crate::bounds::upper_bound;
use crate::burning::{
    verify_assignment, verify_sequence, BurningAssignment, BurningInstance, BurningSequence,
};
use crate::error::{Error, Result};
use crate::graph::{Digraph, NodeId, NodeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    Sequence(BurningSequence),
    Assignment(BurningAssignment),
}

impl Witness {
    /// Checks the witness against the instance it claims to solve.
    /// Assignments may leave ranges unused but never use a range more
    /// often than the instance provides it.
    pub fn verifies(&self, instance: &BurningInstance<'_>) -> bool {
        let graph = instance.graph();
        match self {
            Witness::Sequence(seq) => {
                instance
                    .consecutive_budget()
                    .is_some_and(|b| seq.len() <= b)
                    && verify_sequence(graph, seq, instance.target(), true)
            }
            Witness::Assignment(phi) => {
                is_sub_multiset(&phi.ranges(), instance.ranges())
                    && verify_assignment(graph, phi, instance.target())
            }
        }
    }

    pub fn to_text(&self, graph: &Digraph) -> String {
        match self {
            Witness::Sequence(s) => s.to_text(graph),
            Witness::Assignment(a) => a.to_text(graph),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Sequence(_) => "sequence",
            Witness::Assignment(_) => "assignment",
        }
    }

    pub fn to_assignment(&self) -> BurningAssignment {
        match self {
            Witness::Sequence(s) => BurningAssignment::from_sequence(s),
            Witness::Assignment(a) => a.clone(),
        }
    }
}

fn is_sub_multiset(used_ascending: &[usize], available_descending: &[usize]) -> bool {
    let mut avail: Vec<usize> = available_descending.iter().rev().copied().collect();
    used_ascending.iter().all(|r| match avail.binary_search(r) {
        Ok(i) => {
            avail.remove(i);
            true
        }
        Err(_) => false,
    })
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub answer: Answer,
    pub witness: Option<Witness>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SolveResult {
    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    pub(crate) fn new(witness: Option<Witness>, nodes_explored: u64, elapsed: Duration) -> Self {
        SolveResult {
            answer: if witness.is_some() {
                Answer::Yes
            } else {
                Answer::No
            },
            witness,
            nodes_explored,
            elapsed,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Explore sibling branches of the search root concurrently.
    pub parallel: bool,
}

pub trait Solver: Send + Sync {
    fn name(&self) -> &'static str;

    /// `Err` when the instance is outside what this solver handles.
    fn check(&self, instance: &BurningInstance<'_>) -> Result<()>;

    fn solve(&self, instance: &BurningInstance<'_>, options: SolveOptions) -> Result<SolveResult>;
}

/// Named solver strategies, kept in registration order.
pub struct SolverRegistry {
    solvers: Vec<Box<dyn Solver>>,
}

impl Default for SolverRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl SolverRegistry {
    pub const AUTO: &'static str = "auto";

    pub fn empty() -> Self {
        SolverRegistry {
            solvers: Vec::new(),
        }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(BruteForceSolver));
        r.register(Box::new(TreeSolver));
        r.register(Box::new(BranchingSolver { heuristic: true }));
        r.register(Box::new(BranchingSolver { heuristic: false }));
        r
    }

    /// Adds a solver, replacing any solver registered under the same name.
    pub fn register(&mut self, solver: Box<dyn Solver>) {
        match self.solvers.iter().position(|s| s.name() == solver.name()) {
            Some(i) => self.solvers[i] = solver,
            None => self.solvers.push(solver),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn Solver> {
        self.solvers
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.solvers.iter().map(|s| s.name())
    }

    /// Looks up `name`. `auto` picks `tree` when it accepts the instance
    /// and `branching` otherwise.
    pub fn resolve(&self, name: &str, instance: &BurningInstance<'_>) -> Result<&dyn Solver> {
        let key = if name == Self::AUTO {
            match self.get(Algorithm::Tree.name()) {
                Some(tree) if tree.check(instance).is_ok() => Algorithm::Tree.name(),
                _ => Algorithm::Branching.name(),
            }
        } else {
            name
        };
        self.get(key)
            .ok_or_else(|| Error::UnknownSolver(name.to_string()))
    }

    pub fn solve(
        &self,
        name: &str,
        instance: &BurningInstance<'_>,
        options: SolveOptions,
    ) -> Result<SolveResult> {
        let solver = self.resolve(name, instance)?;
        solver.check(instance)?;
        solver.solve(instance, options)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Auto,
    Brute,
    Tree,
    Branching,
    BranchingPlain,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => SolverRegistry::AUTO,
            Algorithm::Brute => "brute",
            Algorithm::Tree => "tree",
            Algorithm::Branching => "branching",
            Algorithm::BranchingPlain => "branching-plain",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Algorithm::Auto,
            "brute" => Algorithm::Brute,
            "tree" => Algorithm::Tree,
            "branching" => Algorithm::Branching,
            "branching-plain" => Algorithm::BranchingPlain,
            _ => return Err(Error::UnknownSolver(s.to_string())),
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct BurningNumber {
    pub value: usize,
    pub witness: Witness,
    pub solver: &'static str,
    /// Summed over every budget tried.
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Smallest `b` such that ranges `{1, ..., b}` burn all of `graph`.
pub fn min_burning_number(graph: &Digraph, algorithm: Algorithm) -> Result<BurningNumber> {
    min_burning_number_with(
        &SolverRegistry::builtin(),
        algorithm.name(),
        graph,
        &NodeSet::full(graph.node_count()),
        SolveOptions::default(),
    )
}

/// Increments the budget from 1 until the named solver answers yes.
/// For the whole graph the search stops at the closed-form upper bound;
/// for a partial target at `n`.
pub fn min_burning_number_with(
    registry: &SolverRegistry,
    name: &str,
    graph: &Digraph,
    target: &NodeSet,
    options: SolveOptions,
) -> Result<BurningNumber> {
    let solver = registry.resolve(
        name,
        &BurningInstance::with_target(graph, target.clone(), 1)?,
    )?;
    let empty = Witness::Assignment(BurningAssignment::default());
    if target.is_empty() {
        return Ok(BurningNumber {
            value: 0,
            witness: empty,
            solver: solver.name(),
            nodes_explored: 0,
            elapsed: Duration::ZERO,
        });
    }
    let n = graph.node_count();
    let cutoff = if target.len() == n {
        upper_bound(graph).value
    } else {
        n
    };
    let mut explored = 0;
    let mut elapsed = Duration::ZERO;
    for b in 1..=cutoff {
        let instance = BurningInstance::with_target(graph, target.clone(), b)?;
        solver.check(&instance)?;
        let result = solver.solve(&instance, options)?;
        explored += result.nodes_explored;
        elapsed += result.elapsed;
        if let Some(witness) = result.witness {
            return Ok(BurningNumber {
                value: b,
                witness,
                solver: solver.name(),
                nodes_explored: explored,
                elapsed,
            });
        }
    }
    Err(Error::precondition(format!(
        "solver `{}` found no burning with {cutoff} ranges, above the proven bound",
        solver.name()
    )))
}

/// Directed dominating set of size at most `k`: nodes whose closed
/// out-neighbourhoods cover the graph, found as partial burning with `k`
/// copies of range 2.
pub fn dominating_set(graph: &Digraph, k: usize) -> Result<Option<Vec<NodeId>>> {
    let n = graph.node_count();
    if k == 0 {
        return Ok((n == 0).then(Vec::new));
    }
    let instance = BurningInstance::new(graph, NodeSet::full(n), vec![2; k])?;
    let result = digraph_burning(&instance, true);
    Ok(result.witness.map(|w| {
        let mut nodes: Vec<NodeId> = w.to_assignment().pairs().iter().map(|&(_, v)| v).collect();
        nodes.sort_unstable();
        nodes.dedup();
        nodes
    }))
}
