//! Propositional encoding of a puzzle instance and a small DPLL solver.
//!
//! One variable per calisson that fits in the region, numbered from 1 in
//! calisson order. Clauses: every triangle is covered; no triangle is covered
//! twice; calissons across constrained edges are false; and whichever
//! calisson covers one side of a constrained edge forces the calisson of the
//! other color on the opposite side.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::{Axis, Calisson, GridEdge, Triangle};
use crate::region::Region;
use crate::tiling::Tiling;

pub type Lit = i32;

/// Default variable guard for [`dpll_solve`].
pub const DPLL_GUARD: usize = 120;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Lit>>,
    /// `vars[i]` is the calisson of variable `i + 1`.
    pub vars: Vec<Calisson>,
}

impl Cnf {
    pub fn var_of(&self, c: Calisson) -> Option<Lit> {
        self.vars.binary_search(&c).ok().map(|i| i as Lit + 1)
    }

    /// DIMACS text with a comment block naming each variable.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.vars.iter().enumerate() {
            let [x, y, z] = c.cube;
            writeln!(out, "c {} {} {} {} {}", i + 1, c.normal, x, y, z).unwrap();
        }
        writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len()).unwrap();
        for clause in &self.clauses {
            for l in clause {
                write!(out, "{l} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }

    /// The tiling selected by a satisfying assignment (`assignment[i]` is variable `i + 1`).
    pub fn decode(&self, assignment: &[bool]) -> Tiling {
        self.vars.iter().zip(assignment).filter(|(_, &on)| on).map(|(c, _)| *c).collect()
    }
}

/// Calissons covering `t` whose two triangles are glued in the region.
fn covering(region: &Region, t: Triangle) -> Vec<(GridEdge, Calisson)> {
    t.edges()
        .into_iter()
        .filter(|e| region.is_interior_edge(*e))
        .map(|e| (e, Calisson::across(e)))
        .collect()
}

pub fn sat_encode(region: &Region, x: &BTreeSet<GridEdge>) -> Cnf {
    let vars: Vec<Calisson> = region
        .triangles()
        .iter()
        .flat_map(|&t| covering(region, t))
        .map(|(_, c)| c)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<Calisson, Lit> = vars.iter().enumerate().map(|(i, c)| (*c, i as Lit + 1)).collect();
    let mut clauses = Vec::new();

    for &t in region.triangles() {
        let lits: Vec<Lit> = covering(region, t).iter().map(|(_, c)| index[c]).collect();
        clauses.push(lits.clone());
        for i in 0..lits.len() {
            for j in i + 1..lits.len() {
                clauses.push(vec![-lits[i], -lits[j]]);
            }
        }
    }
    for e in x {
        if let Some(&v) = index.get(&Calisson::across(*e)) {
            clauses.push(vec![-v]);
        }
    }
    for e in x {
        let sides = e.triangles();
        // calisson of the given color covering side `s`, other than the one across `e`
        let colored = |s: usize, axis: Axis| -> Option<Lit> {
            covering(region, sides[s])
                .into_iter()
                .find(|(f, c)| f != e && c.normal == axis)
                .map(|(_, c)| index[&c])
        };
        let (b, c) = e.axis.others();
        for (s, o) in [(0, 1), (1, 0)] {
            for (mine, theirs) in [(b, c), (c, b)] {
                let Some(p) = colored(s, mine) else { continue };
                match colored(o, theirs) {
                    Some(q) => clauses.push(vec![-p, q]),
                    None => clauses.push(vec![-p]),
                }
            }
        }
    }
    Cnf { num_vars: vars.len(), clauses, vars }
}

/// Complete search with unit propagation, refusing formulas with more than
/// [`DPLL_GUARD`] variables.
pub fn dpll_solve(f: &Cnf) -> Result<Option<Vec<bool>>> {
    dpll_solve_guarded(f, DPLL_GUARD)
}

pub fn dpll_solve_guarded(f: &Cnf, guard: usize) -> Result<Option<Vec<bool>>> {
    if f.num_vars > guard {
        return Err(Error::GuardExceeded { vars: f.num_vars, guard });
    }
    let mut assign: Vec<Option<bool>> = vec![None; f.num_vars + 1];
    if dpll(&f.clauses, &mut assign) {
        Ok(Some(assign[1..].iter().map(|a| a.unwrap_or(false)).collect()))
    } else {
        Ok(None)
    }
}

fn value(assign: &[Option<bool>], l: Lit) -> Option<bool> {
    assign[l.unsigned_abs() as usize].map(|b| b == (l > 0))
}

enum Status {
    Conflict,
    /// First unassigned literal of some open clause.
    Open(Lit),
    Done,
}

/// Propagate units to a fixpoint; record every assignment made in `trail`.
fn propagate(clauses: &[Vec<Lit>], assign: &mut [Option<bool>], trail: &mut Vec<usize>) -> Status {
    loop {
        let mut changed = false;
        let mut branch = None;
        for clause in clauses {
            let mut free = None;
            let mut free_count = 0;
            let mut sat = false;
            for &l in clause {
                match value(assign, l) {
                    Some(true) => {
                        sat = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        free_count += 1;
                        free.get_or_insert(l);
                    }
                }
            }
            if sat {
                continue;
            }
            match (free_count, free) {
                (0, _) => return Status::Conflict,
                (1, Some(l)) => {
                    let v = l.unsigned_abs() as usize;
                    assign[v] = Some(l > 0);
                    trail.push(v);
                    changed = true;
                }
                (_, Some(l)) => {
                    branch.get_or_insert(l);
                }
                _ => unreachable!(),
            }
        }
        if !changed {
            return branch.map_or(Status::Done, Status::Open);
        }
    }
}

fn dpll(clauses: &[Vec<Lit>], assign: &mut [Option<bool>]) -> bool {
    let mut trail = Vec::new();
    let status = propagate(clauses, assign, &mut trail);
    let undo = |assign: &mut [Option<bool>], trail: &[usize]| {
        for &v in trail {
            assign[v] = None;
        }
    };
    match status {
        Status::Conflict => {
            undo(assign, &trail);
            false
        }
        Status::Done => true,
        Status::Open(l) => {
            let v = l.unsigned_abs() as usize;
            for choice in [l > 0, l <= 0] {
                assign[v] = Some(choice);
                if dpll(clauses, assign) {
                    return true;
                }
                assign[v] = None;
            }
            undo(assign, &trail);
            false
        }
    }
}
