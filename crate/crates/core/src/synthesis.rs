//! Minimum-cost certificates for a fixed basis via the auxiliary graph and a
//! weighted bipartite vertex cover.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::certificate::{cut_pairs, first_violation};
use crate::error::{Error, Result};
use crate::matroid::{ElementId, ElementSet, IndependenceOracle};
use crate::rational::Rational;
use crate::selection::run_algorithm1;
use crate::uncertainty::{QuerySet, UncertainInstance};

/// How the fundamental circuit of a non-basis element constrains certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitClassification {
    pub element: ElementId,
    pub case_id: u8,
    pub circuit: ElementSet,
    /// `{f ∈ C_e − e : U_f > L_e}`.
    pub f: ElementSet,
    /// `{f ∈ C_e − e : U_f > w_e}`.
    pub f_hat: ElementSet,
}

pub fn classify_circuit(
    inst: &UncertainInstance,
    b: &ElementSet,
    e: ElementId,
) -> Result<CircuitClassification> {
    inst.require_mwb(b)?;
    let circuit = inst.matroid().fundamental_circuit(b, e)?;
    Ok(classify_unchecked(inst, circuit, e))
}

fn classify_unchecked(
    inst: &UncertainInstance,
    circuit: ElementSet,
    e: ElementId,
) -> CircuitClassification {
    let w_e = inst.weight(e);
    let l_e = inst.lower(e);
    let rest = || circuit.iter().copied().filter(move |&f| f != e);
    let dominates = rest().all(|f| w_e >= inst.upper(f));
    let exceeded = rest().any(|f| inst.weight(f) > l_e);
    let case_id = match (dominates, exceeded) {
        (true, true) => 1,
        (true, false) => 2,
        (false, true) => 3,
        (false, false) => 4,
    };
    let f = rest().filter(|&f| inst.upper(f) > l_e).collect();
    let f_hat = rest().filter(|&f| inst.upper(f) > w_e).collect();
    CircuitClassification {
        element: e,
        case_id,
        circuit,
        f,
        f_hat,
    }
}

/// Graph on the elements whose vertex covers are exactly the certificates
/// of `basis`. Every edge other than a self-loop joins a basis element to a
/// non-basis element; edges are stored as ordered pairs `(u, v)` with `u ≤ v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    pub basis: ElementSet,
    pub vertices: ElementSet,
    pub edges: BTreeSet<(ElementId, ElementId)>,
    pub vertex_weight: BTreeMap<ElementId, Rational>,
}

impl AuxiliaryGraph {
    fn add(&mut self, u: ElementId, v: ElementId) {
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn loops(&self) -> ElementSet {
        self.edges
            .iter()
            .filter(|(u, v)| u == v)
            .map(|&(u, _)| u)
            .collect()
    }

    pub fn is_cover(&self, q: &ElementSet) -> bool {
        self.edges
            .iter()
            .all(|(u, v)| q.contains(u) || q.contains(v))
    }

    pub fn cover_weight(&self, q: &ElementSet) -> Rational {
        q.iter().map(|e| self.vertex_weight[e]).sum()
    }

    /// Edge list, one `u v` pair per line by element name.
    pub fn dump(&self, inst: &UncertainInstance) -> Vec<String> {
        self.edges
            .iter()
            .map(|&(u, v)| format!("{} {}", inst.name(u), inst.name(v)))
            .collect()
    }
}

pub fn build_auxiliary_graph(inst: &UncertainInstance, b: &ElementSet) -> Result<AuxiliaryGraph> {
    inst.require_mwb(b)?;
    Ok(build_unchecked(inst, b))
}

fn build_unchecked(inst: &UncertainInstance, b: &ElementSet) -> AuxiliaryGraph {
    let m = inst.matroid();
    let mut g = AuxiliaryGraph {
        basis: b.clone(),
        vertices: inst.ground().clone(),
        edges: BTreeSet::new(),
        vertex_weight: inst.ground().iter().map(|&e| (e, inst.cost(e))).collect(),
    };
    for &e in inst.ground().difference(b) {
        let c = classify_unchecked(inst, m.circuit_unchecked(b, e), e);
        match c.case_id {
            1 => g.add(e, e),
            2 => c.f.iter().for_each(|&f| g.add(e, f)),
            3 => {
                g.add(e, e);
                c.f_hat.iter().for_each(|&f| g.add(f, f));
            }
            _ => {
                c.f.difference(&c.f_hat).for_each(|&f| g.add(e, f));
                c.f_hat.iter().for_each(|&f| g.add(f, f));
            }
        }
    }
    g
}

/// A minimum-weight vertex cover and the max-flow value that certifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    pub cover: ElementSet,
    pub forced: ElementSet,
    /// Max-flow value on the bipartite part left after removing forced vertices.
    pub flow_value: Rational,
}

pub fn min_weight_vertex_cover(g: &AuxiliaryGraph) -> Result<VertexCover> {
    let forced = g.loops();
    let cross: Vec<(ElementId, ElementId)> = g
        .edges
        .iter()
        .filter(|(u, v)| !forced.contains(u) && !forced.contains(v))
        .map(|&(u, v)| if g.basis.contains(&u) { (u, v) } else { (v, u) })
        .collect();
    if let Some(&(u, v)) = cross
        .iter()
        .find(|(u, v)| !g.basis.contains(u) || g.basis.contains(v))
    {
        return Err(Error::contract(format!(
            "edge {u}-{v} does not cross the basis partition"
        )));
    }
    let involved: ElementSet = cross.iter().flat_map(|&(u, v)| [u, v]).collect();
    let index: BTreeMap<ElementId, usize> = involved
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i + 2))
        .collect();
    let infinite = g.vertex_weight.values().copied().sum::<Rational>() + Rational::from_integer(1);
    let mut net = FlowNetwork::new(involved.len() + 2);
    for &e in &involved {
        let cap = g.vertex_weight[&e];
        if g.basis.contains(&e) {
            net.add_arc(SOURCE, index[&e], cap);
        } else {
            net.add_arc(index[&e], SINK, cap);
        }
    }
    for &(u, v) in &cross {
        net.add_arc(index[&u], index[&v], infinite);
    }
    let flow_value = net.max_flow();
    let reach = net.residual_reachable();
    let mut cover = forced.clone();
    for &e in &involved {
        let r = reach[index[&e]];
        if g.basis.contains(&e) != r {
            cover.insert(e);
        }
    }
    Ok(VertexCover {
        cover,
        forced,
        flow_value,
    })
}

const SOURCE: usize = 0;
const SINK: usize = 1;

struct Arc {
    to: usize,
    residual: Rational,
}

/// Edmonds–Karp over exact rational capacities. Arcs are explored in
/// insertion order, which callers make follow element ids.
struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); n],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: Rational) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, residual: cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            residual: Rational::from_integer(0),
        });
    }

    fn max_flow(&mut self) -> Rational {
        let zero = Rational::from_integer(0);
        let mut total = zero;
        loop {
            let mut via: Vec<Option<usize>> = vec![None; self.out.len()];
            let mut seen = vec![false; self.out.len()];
            seen[SOURCE] = true;
            let mut queue = VecDeque::from([SOURCE]);
            while let Some(x) = queue.pop_front() {
                if x == SINK {
                    break;
                }
                for &a in &self.out[x] {
                    let arc = &self.arcs[a];
                    if arc.residual > zero && !seen[arc.to] {
                        seen[arc.to] = true;
                        via[arc.to] = Some(a);
                        queue.push_back(arc.to);
                    }
                }
            }
            if !seen[SINK] {
                return total;
            }
            let mut path = Vec::new();
            let mut x = SINK;
            while let Some(a) = via[x] {
                path.push(a);
                x = self.arcs[a ^ 1].to;
            }
            let push = path
                .iter()
                .map(|&a| self.arcs[a].residual)
                .min()
                .expect("augmenting paths are non-empty");
            for a in path {
                self.arcs[a].residual -= push;
                self.arcs[a ^ 1].residual += push;
            }
            total += push;
        }
    }

    fn residual_reachable(&self) -> Vec<bool> {
        let zero = Rational::from_integer(0);
        let mut seen = vec![false; self.out.len()];
        seen[SOURCE] = true;
        let mut stack = vec![SOURCE];
        while let Some(x) = stack.pop() {
            for &a in &self.out[x] {
                let arc = &self.arcs[a];
                if arc.residual > zero && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}

/// A query set together with the basis it verifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub basis: ElementSet,
    pub query: QuerySet,
}

/// Minimum-cost certificate for the given minimum-weight basis.
pub fn certify_given_basis(inst: &UncertainInstance, b: &ElementSet) -> Result<Certificate> {
    inst.require_mwb(b)?;
    certify_unchecked(inst, b)
}

fn certify_unchecked(inst: &UncertainInstance, b: &ElementSet) -> Result<Certificate> {
    let g = build_unchecked(inst, b);
    let vc = min_weight_vertex_cover(&g)?;
    let pairs = cut_pairs(inst.matroid(), b);
    if let Some((e, f)) = first_violation(inst, &vc.cover, &pairs) {
        return Err(Error::Invariant(format!(
            "vertex cover does not verify the basis: pair ({}, {}) violated",
            inst.name(e),
            inst.name(f)
        )));
    }
    Ok(Certificate {
        basis: b.clone(),
        query: inst.query_set(vc.cover),
    })
}

/// Selects a basis with the rule engine and certifies it at minimum cost.
pub fn algorithm2(inst: &UncertainInstance) -> Result<Certificate> {
    let (b, _) = run_algorithm1(inst)?;
    inst.require_mwb(&b)
        .map_err(|e| Error::Invariant(format!("rule engine returned a non-minimal basis: {e}")))?;
    certify_unchecked(inst, &b)
}
