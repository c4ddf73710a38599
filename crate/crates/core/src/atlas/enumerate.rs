//! Tautologies by substitution: take a formula shape with `k` binary slots,
//! label its leaves with up to three variables, fill each slot with each of
//! the sixteen connectives, and keep what is valid.
//!
//! Everything runs on 8-bit truth masks over three variables (bit `r` is
//! canonical row `r`), so a tautology is a formula whose mask is `0xFF`.
//! Counts come from a dynamic program over masks and never enumerate the
//! formulas; emission walks the slots depth-first, pruning any connective
//! choice from which `0xFF` is no longer reachable.
//!
//! Emission order: slot count ascending, then shape (see
//! [`Shape::all_trees`]), then leaf labelling in lexicographic order of
//! variable index, then connectives in lexicographic order of catalog
//! column, slots read in pre-order (root first).
//!
//! Two counts are reported per slot count. `tautologies` counts every
//! substitution instance. `distinct` counts them up to renaming of
//! variables (`p→q` and `q→p` are one), computed with Burnside's lemma
//! over the permutations of the variable names.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::connective::Connective;
use crate::error::Error;
use crate::formula::Formula;

pub const VARIABLE_NAMES: [&str; 3] = ["p", "q", "r"];
pub const MAX_VARIABLES: usize = 3;
pub const MAX_SLOTS: usize = 5;

const ALL_TRUE: u8 = 0xFF;

/// Mask of variable `i` over the eight rows of a three-variable table.
fn variable_mask(i: usize) -> u8 {
    [0x0F, 0x33, 0x55][i]
}

fn combine(c: Connective, a: u8, b: u8) -> u8 {
    let v = c.vector();
    let sel = |i: usize| if v[i].is_true() { 0xFF } else { 0 };
    (sel(0) & a & b) | (sel(1) & a & !b) | (sel(2) & !a & b) | (sel(3) & !a & !b)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct MaskSet([u64; 4]);

impl MaskSet {
    fn has(&self, m: u8) -> bool {
        self.0[usize::from(m >> 6)] >> (m & 63) & 1 == 1
    }

    fn insert(&mut self, m: u8) {
        self.0[usize::from(m >> 6)] |= 1 << (m & 63);
    }

    fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..=255u8).filter(|m| self.has(*m))
    }

    fn single(m: u8) -> MaskSet {
        let mut s = MaskSet::default();
        s.insert(m);
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn node(left: Shape, right: Shape) -> Shape {
        Shape::Node(Box::new(left), Box::new(right))
    }

    pub fn slots(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Node(l, r) => 1 + l.slots() + r.slots(),
        }
    }

    pub fn leaves(&self) -> usize {
        self.slots() + 1
    }

    /// `c(x, c(x, … c(x, x)))` with `k` slots.
    pub fn right_comb(k: usize) -> Shape {
        (0..k).fold(Shape::Leaf, |acc, _| Shape::node(Shape::Leaf, acc))
    }

    /// Every binary tree with `k` internal nodes, ordered by the size of
    /// the left subtree, then recursively.
    pub fn all_trees(k: usize) -> Vec<Shape> {
        if k == 0 {
            return vec![Shape::Leaf];
        }
        let mut out = Vec::new();
        for i in 0..k {
            for l in Shape::all_trees(i) {
                for r in Shape::all_trees(k - 1 - i) {
                    out.push(Shape::node(l.clone(), r));
                }
            }
        }
        out
    }

    /// Fills leaves left to right and slots in pre-order.
    pub fn to_formula(&self, leaves: &[usize], slots: &[Connective]) -> Formula {
        let (mut li, mut si) = (0, 0);
        self.fill(leaves, slots, &mut li, &mut si)
    }

    fn fill(&self, leaves: &[usize], slots: &[Connective], li: &mut usize, si: &mut usize) -> Formula {
        match self {
            Shape::Leaf => {
                *li += 1;
                Formula::var(VARIABLE_NAMES[leaves[*li - 1]])
            }
            Shape::Node(l, r) => {
                let c = slots[*si];
                *si += 1;
                let left = l.fill(leaves, slots, li, si);
                let right = r.fill(leaves, slots, li, si);
                Formula::binary(c, left, right)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapePolicy {
    #[default]
    RightCombs,
    AllTrees,
}

impl ShapePolicy {
    pub fn shapes(self, k: usize) -> Vec<Shape> {
        match self {
            ShapePolicy::RightCombs => vec![Shape::right_comb(k)],
            ShapePolicy::AllTrees => Shape::all_trees(k),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationSpec {
    pub max_variables: usize,
    pub max_connective_slots: usize,
    pub shape_policy: ShapePolicy,
    pub emit_limit: usize,
}

impl Default for EnumerationSpec {
    fn default() -> Self {
        EnumerationSpec { max_variables: 3, max_connective_slots: 3, shape_policy: ShapePolicy::RightCombs, emit_limit: 1000 }
    }
}

impl EnumerationSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if !(1..=MAX_VARIABLES).contains(&self.max_variables) {
            return Err(Error::EnumerationBounds(format!(
                "max_variables must be between 1 and {MAX_VARIABLES}, got {}",
                self.max_variables
            )));
        }
        if self.max_connective_slots > MAX_SLOTS {
            return Err(Error::EnumerationBounds(format!(
                "max_connective_slots must be at most {MAX_SLOTS}, got {}",
                self.max_connective_slots
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Emitted {
    pub slots: usize,
    pub formula: Formula,
    /// Slot fillers in pre-order.
    pub connectives: Vec<Connective>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SlotSummary {
    pub slots: usize,
    pub shapes: u64,
    /// Formulas examined: shapes × labellings × 16^slots.
    pub formulas: u64,
    /// Tautologous substitution instances.
    pub tautologies: u64,
    /// Tautologies up to renaming of variables.
    pub distinct: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub spec: EnumerationSpec,
    pub emitted: Vec<Emitted>,
    /// True when `emit_limit` stopped emission before the end.
    pub truncated: bool,
    pub summary: Vec<SlotSummary>,
}

impl Enumeration {
    pub fn total_tautologies(&self) -> u64 {
        self.summary.iter().map(|s| s.tautologies).sum()
    }

    pub fn total_distinct(&self) -> u64 {
        self.summary.iter().map(|s| s.distinct).sum()
    }
}

/// A shape with fixed leaf labels, flattened, with the masks each node
/// can reach.
struct Labelled {
    nodes: Vec<LNode>,
    reach: Vec<MaskSet>,
    root: usize,
}

enum LNode {
    Leaf(u8),
    Bin(usize, usize),
}

impl Labelled {
    fn new(shape: &Shape, leaves: &[usize]) -> Labelled {
        let mut t = Labelled { nodes: Vec::new(), reach: Vec::new(), root: 0 };
        let mut li = 0;
        t.root = t.add(shape, leaves, &mut li);
        t
    }

    fn add(&mut self, shape: &Shape, leaves: &[usize], li: &mut usize) -> usize {
        let (node, reach) = match shape {
            Shape::Leaf => {
                let m = variable_mask(leaves[*li]);
                *li += 1;
                (LNode::Leaf(m), MaskSet::single(m))
            }
            Shape::Node(l, r) => {
                let l = self.add(l, leaves, li);
                let r = self.add(r, leaves, li);
                let mut reach = MaskSet::default();
                for a in self.reach[l].iter() {
                    for b in self.reach[r].iter() {
                        for c in Connective::all() {
                            reach.insert(combine(c, a, b));
                        }
                    }
                }
                (LNode::Bin(l, r), reach)
            }
        };
        self.nodes.push(node);
        self.reach.push(reach);
        self.nodes.len() - 1
    }

    /// Calls `k` for every slot assignment of node `i` whose mask is in
    /// `want`, in lexicographic pre-order.
    fn generate(
        &self,
        i: usize,
        want: &MaskSet,
        slots: &mut Vec<Connective>,
        k: &mut dyn FnMut(&mut Vec<Connective>, u8) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        match self.nodes[i] {
            LNode::Leaf(m) => {
                if want.has(m) {
                    k(slots, m)
                } else {
                    ControlFlow::Continue(())
                }
            }
            LNode::Bin(l, r) => {
                let reach_r = &self.reach[r];
                for c in Connective::all() {
                    let mut want_l = MaskSet::default();
                    for a in self.reach[l].iter() {
                        if reach_r.iter().any(|b| want.has(combine(c, a, b))) {
                            want_l.insert(a);
                        }
                    }
                    if want_l.is_empty() {
                        continue;
                    }
                    slots.push(c);
                    let flow = self.generate(l, &want_l, slots, &mut |slots, a| {
                        let mut want_r = MaskSet::default();
                        for b in reach_r.iter() {
                            if want.has(combine(c, a, b)) {
                                want_r.insert(b);
                            }
                        }
                        self.generate(r, &want_r, slots, &mut |slots, b| k(slots, combine(c, a, b)))
                    });
                    slots.pop();
                    flow?;
                }
                ControlFlow::Continue(())
            }
        }
    }
}

/// Leaf labellings over `n` variables, lexicographic.
fn labellings(leaves: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(leaves as u32);
    (0..total).map(move |mut x| {
        let mut v = vec![0; leaves];
        for slot in v.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        v
    })
}

/// Streams tautologies in emission order until `visit` breaks; ignores
/// `emit_limit`.
pub fn for_each_tautology(
    spec: &EnumerationSpec,
    mut visit: impl FnMut(Emitted) -> ControlFlow<()>,
) -> Result<ControlFlow<()>, Error> {
    spec.validate()?;
    let target = MaskSet::single(ALL_TRUE);
    for k in 0..=spec.max_connective_slots {
        for shape in spec.shape_policy.shapes(k) {
            for leaves in labellings(shape.leaves(), spec.max_variables) {
                let tree = Labelled::new(&shape, &leaves);
                if !tree.reach[tree.root].has(ALL_TRUE) {
                    continue;
                }
                let mut slots = Vec::with_capacity(k);
                let flow = tree.generate(tree.root, &target, &mut slots, &mut |slots, _| {
                    visit(Emitted { slots: k, formula: shape.to_formula(&leaves, slots), connectives: slots.clone() })
                });
                if flow.is_break() {
                    return Ok(flow);
                }
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

pub fn enumerate_tautologies(spec: &EnumerationSpec) -> Result<Enumeration, Error> {
    let summary = summarize(spec)?;
    let mut emitted = Vec::new();
    let mut truncated = false;
    if spec.emit_limit > 0 {
        let _ = for_each_tautology(spec, |e| {
            if emitted.len() == spec.emit_limit {
                truncated = true;
                return ControlFlow::Break(());
            }
            emitted.push(e);
            ControlFlow::Continue(())
        })?;
    } else {
        truncated = summary.iter().any(|s| s.tautologies > 0);
    }
    Ok(Enumeration { spec: *spec, emitted, truncated, summary })
}

type Counts = Vec<u64>;

fn convolve(a: &Counts, b: &Counts, out: &mut Counts) {
    let nz = |v: &Counts| v.iter().enumerate().filter(|(_, n)| **n > 0).map(|(m, n)| (m as u8, *n)).collect::<Vec<_>>();
    let (a, b) = (nz(a), nz(b));
    for c in Connective::all() {
        for &(x, nx) in &a {
            for &(y, ny) in &b {
                out[usize::from(combine(c, x, y))] += nx * ny;
            }
        }
    }
}

/// Mask histograms for 0..=max_slots slots, leaves drawn from the first `j`
/// variables.
fn histograms(policy: ShapePolicy, j: usize, max_slots: usize) -> Vec<Counts> {
    let mut leaf = vec![0u64; 256];
    for i in 0..j {
        leaf[usize::from(variable_mask(i))] += 1;
    }
    let mut h: Vec<Counts> = vec![leaf.clone()];
    for k in 1..=max_slots {
        let mut out = vec![0u64; 256];
        match policy {
            ShapePolicy::RightCombs => convolve(&leaf, &h[k - 1], &mut out),
            ShapePolicy::AllTrees => {
                for i in 0..k {
                    convolve(&h[i], &h[k - 1 - i], &mut out);
                }
            }
        }
        h.push(out);
    }
    h
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

/// Per-slot counts, computed without enumerating formulas.
pub fn summarize(spec: &EnumerationSpec) -> Result<Vec<SlotSummary>, Error> {
    spec.validate()?;
    let n = spec.max_variables;
    let k_max = spec.max_connective_slots;
    let by_vars: Vec<Vec<Counts>> = (0..=n).map(|j| histograms(spec.shape_policy, j, k_max)).collect();
    let perms = permutations(n);
    let fixed_points: Vec<usize> = perms.iter().map(|p| p.iter().enumerate().filter(|(i, x)| *i == **x).count()).collect();
    let mut out = Vec::new();
    for k in 0..=k_max {
        let shapes = spec.shape_policy.shapes(k).len() as u64;
        let formulas = shapes * (n as u64).pow(k as u32 + 1) * 16u64.pow(k as u32);
        let tautologies = by_vars[n][k][usize::from(ALL_TRUE)];
        // Burnside: a labelling is fixed by a renaming iff it only uses
        // variables the renaming fixes.
        let fixed: u64 = fixed_points.iter().map(|&j| by_vars[j][k][usize::from(ALL_TRUE)]).sum();
        debug_assert_eq!(fixed % perms.len() as u64, 0);
        out.push(SlotSummary { slots: k, shapes, formulas, tautologies, distinct: fixed / perms.len() as u64 });
    }
    Ok(out)
}

/// Tautologous connective fillings of one shape with fixed leaf labels.
pub fn tautology_count(shape: &Shape, leaves: &[usize]) -> u64 {
    fn hist(shape: &Shape, leaves: &[usize], li: &mut usize) -> Counts {
        match shape {
            Shape::Leaf => {
                let mut h = vec![0u64; 256];
                h[usize::from(variable_mask(leaves[*li]))] = 1;
                *li += 1;
                h
            }
            Shape::Node(l, r) => {
                let a = hist(l, leaves, li);
                let b = hist(r, leaves, li);
                let mut out = vec![0u64; 256];
                convolve(&a, &b, &mut out);
                out
            }
        }
    }
    let mut li = 0;
    hist(shape, leaves, &mut li)[usize::from(ALL_TRUE)]
}
