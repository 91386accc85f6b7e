//! Finite n-branched coverings: a map h: X -> Y together with a transfer
//! t: Y -> Sym^n(X) such that
//!   (i)  x is a point of t(h(x)) for every x, and
//!   (ii) Sym^n(h)(t(y)) = n*y for every y.
//!
//! Includes group and subgroup quotient constructions, pullbacks,
//! composition, interval coverings built from adjacent partition sequences,
//! resolution by the symmetric group, and the dictionary between coverings
//! and Frobenius n-homomorphisms of function algebras.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::algebra::{CommutativeAlgebra, LinearMap};
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::partitions::{partition_adjacent, partition_join, SetPartition};
use crate::scalar::{Backend, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteCovering {
    x: Vec<String>,
    y: Vec<String>,
    /// h[i] = index into `y` of the image of x[i].
    h: Vec<usize>,
    /// t[j] = multiset of x labels over y[j].
    t: Vec<Multiset>,
    n: usize,
}

impl FiniteCovering {
    pub fn new(
        x: Vec<String>,
        y: Vec<String>,
        h: Vec<usize>,
        t: Vec<Multiset>,
        n: usize,
    ) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::EmptySpace);
        }
        if x.iter().unique().count() != x.len() || y.iter().unique().count() != y.len() {
            return Err(Error::Invalid("duplicate labels".into()));
        }
        if h.len() != x.len() {
            return Err(Error::DimensionMismatch { expected: x.len(), got: h.len() });
        }
        if t.len() != y.len() {
            return Err(Error::DimensionMismatch { expected: y.len(), got: t.len() });
        }
        if let Some(&bad) = h.iter().find(|&&j| j >= y.len()) {
            return Err(Error::Invalid(format!("h hits index {bad} outside Y")));
        }
        let known: BTreeSet<&str> = x.iter().map(String::as_str).collect();
        for (j, ms) in t.iter().enumerate() {
            for label in ms.support() {
                if !known.contains(label) {
                    return Err(Error::Invalid(format!(
                        "t({}) mentions unknown sheet `{label}`",
                        y[j]
                    )));
                }
            }
        }
        if n == 0 {
            return Err(Error::Invalid("covering degree must be >= 1".into()));
        }
        Ok(FiniteCovering { x, y, h, t, n })
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y
    }

    pub fn h(&self) -> &[usize] {
        &self.h
    }

    pub fn t(&self) -> &[Multiset] {
        &self.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_index(&self, label: &str) -> Option<usize> {
        self.x.iter().position(|l| l == label)
    }

    pub fn y_index(&self, label: &str) -> Option<usize> {
        self.y.iter().position(|l| l == label)
    }

    /// Multiplicity of the sheet `x` in the fiber over its own image.
    pub fn sheet_multiplicity(&self, xi: usize) -> usize {
        self.t[self.h[xi]].multiplicity(&self.x[xi])
    }

    /// Bipartite incidence graph in DOT format: fibers as edges y -- x,
    /// labeled with multiplicities.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph covering {\n  rankdir=LR;\n");
        for y in &self.y {
            out.push_str(&format!("  \"{y}\" [shape=box];\n"));
        }
        for x in &self.x {
            out.push_str(&format!("  \"{x}\" [shape=ellipse];\n"));
        }
        for (j, ms) in self.t.iter().enumerate() {
            for (label, m) in ms.iter() {
                out.push_str(&format!("  \"{}\" -- \"{label}\" [label=\"{m}\"];\n", self.y[j]));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CoveringReport {
    /// First fiber whose total is not n, if any.
    pub degree_witness: Option<String>,
    /// First sheet missing from the fiber over its own image, if any.
    pub axiom_i_witness: Option<String>,
    /// First base point y with Sym^n(h)(t(y)) != n*y, if any.
    pub axiom_ii_witness: Option<String>,
}

impl CoveringReport {
    pub fn pass(&self) -> bool {
        self.degree_witness.is_none()
            && self.axiom_i_witness.is_none()
            && self.axiom_ii_witness.is_none()
    }
}

pub fn check_covering(c: &FiniteCovering) -> CoveringReport {
    let degree_witness = c
        .y
        .iter()
        .zip(&c.t)
        .find(|(_, ms)| ms.total() != c.n)
        .map(|(y, _)| y.clone());
    let axiom_i_witness = (0..c.x.len())
        .find(|&i| c.sheet_multiplicity(i) == 0)
        .map(|i| c.x[i].clone());
    let axiom_ii_witness = (0..c.y.len())
        .find(|&j| {
            let pushed = c.t[j].map_labels(|label| {
                let xi = c.x_index(label).expect("validated support");
                c.y[c.h[xi]].clone()
            });
            pushed != Multiset::from_pairs([(c.y[j].clone(), c.n)])
        })
        .map(|j| c.y[j].clone());
    CoveringReport { degree_witness, axiom_i_witness, axiom_ii_witness }
}

/// A finite permutation group acting on a labeled point set, stored as the
/// full element list (closure of the generators).
#[derive(Debug, Clone)]
pub struct PermutationAction {
    points: Vec<String>,
    elements: Vec<Vec<usize>>,
}

const GROUP_ORDER_CAP: usize = 10_000;

impl PermutationAction {
    pub fn from_generators(points: Vec<String>, generators: Vec<Vec<usize>>) -> Result<Self> {
        let d = points.len();
        if d == 0 {
            return Err(Error::EmptySpace);
        }
        for g in &generators {
            if g.len() != d || g.iter().unique().count() != d || g.iter().any(|&v| v >= d) {
                return Err(Error::Invalid(format!("not a permutation of {d} points: {g:?}")));
            }
        }
        let identity: Vec<usize> = (0..d).collect();
        let mut elements = vec![identity];
        let mut frontier = elements.clone();
        while let Some(g) = frontier.pop() {
            for gen in &generators {
                let composed: Vec<usize> = (0..d).map(|i| gen[g[i]]).collect();
                if !elements.contains(&composed) {
                    if elements.len() >= GROUP_ORDER_CAP {
                        return Err(Error::CapExceeded {
                            what: "group order",
                            size: elements.len() + 1,
                            cap: GROUP_ORDER_CAP,
                        });
                    }
                    elements.push(composed.clone());
                    frontier.push(composed);
                }
            }
        }
        elements.sort();
        Ok(PermutationAction { points, elements })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn contains(&self, perm: &[usize]) -> bool {
        self.elements.iter().any(|e| e == perm)
    }

    /// Orbits as sorted index lists, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let d = self.points.len();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut orbit: BTreeSet<usize> = BTreeSet::new();
            for e in &self.elements {
                orbit.insert(e[start]);
            }
            for &i in &orbit {
                seen[i] = true;
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }
}

fn orbit_label(points: &[String], orbit: &[usize]) -> String {
    format!("[{}]", points[orbit[0]])
}

/// X -> X/G with t(Gx) = sum over g in G of g*x, an |G|-branched covering.
/// Multiplicities are the stabilizer orders |G|/|orbit|.
pub fn group_quotient_covering(action: &PermutationAction) -> Result<FiniteCovering> {
    let orbits = action.orbits();
    let x = action.points.to_vec();
    let y: Vec<String> = orbits.iter().map(|o| orbit_label(&action.points, o)).collect();
    let mut h = vec![0usize; x.len()];
    let mut t = Vec::with_capacity(orbits.len());
    for (j, orbit) in orbits.iter().enumerate() {
        let stab = action.order() / orbit.len();
        for &i in orbit {
            h[i] = j;
        }
        t.push(Multiset::from_pairs(
            orbit.iter().map(|&i| (x[i].clone(), stab)),
        ));
    }
    FiniteCovering::new(x, y, h, t, action.order())
}

/// X/H -> X/G for H a subgroup of G, an [G:H]-branched covering with
/// t(Gx) = sum over coset representatives g of H g x. The fiber is checked
/// to be independent of the representative x.
pub fn subgroup_quotient_covering(
    action: &PermutationAction,
    subgroup: &[Vec<usize>],
) -> Result<FiniteCovering> {
    for s in subgroup {
        if !action.contains(s) {
            return Err(Error::NotSubgroup(format!("{s:?} is not in the group")));
        }
    }
    let sub = PermutationAction::from_generators(action.points.to_vec(), subgroup.to_vec())?;
    for e in sub.elements() {
        if !action.contains(e) {
            return Err(Error::NotSubgroup(format!("closure escapes the group at {e:?}")));
        }
    }
    if action.order() % sub.order() != 0 {
        return Err(Error::NotSubgroup("order does not divide the group order".into()));
    }
    let n = action.order() / sub.order();

    let h_orbits = sub.orbits();
    let g_orbits = action.orbits();
    let d = action.points.len();
    let mut h_orbit_of = vec![0usize; d];
    for (j, o) in h_orbits.iter().enumerate() {
        for &i in o {
            h_orbit_of[i] = j;
        }
    }
    let x: Vec<String> = h_orbits.iter().map(|o| orbit_label(&action.points, o)).collect();
    let y: Vec<String> = g_orbits.iter().map(|o| orbit_label(&action.points, o)).collect();
    let h: Vec<usize> = h_orbits
        .iter()
        .map(|o| g_orbits.iter().position(|go| go.contains(&o[0])).unwrap())
        .collect();

    // right coset representatives: g1, g2 in the same coset iff they move
    // every point the same way after quotienting by H, detected via Hg sets
    let mut coset_reps: Vec<&Vec<usize>> = Vec::new();
    'next: for g in action.elements() {
        for rep in &coset_reps {
            // same coset Hg iff g o rep^{-1} in H
            let mut inv = vec![0usize; d];
            for (i, &v) in rep.iter().enumerate() {
                inv[v] = i;
            }
            let quotient: Vec<usize> = (0..d).map(|i| g[inv[i]]).collect();
            if sub.contains(&quotient) {
                continue 'next;
            }
        }
        coset_reps.push(g);
    }
    debug_assert_eq!(coset_reps.len(), n);

    let mut t = Vec::with_capacity(g_orbits.len());
    for orbit in &g_orbits {
        let fiber_from = |p: usize| -> Multiset {
            Multiset::from_elements(coset_reps.iter().map(|g| x[h_orbit_of[g[p]]].clone()))
        };
        let fiber = fiber_from(orbit[0]);
        for &p in orbit.iter().skip(1) {
            if fiber_from(p) != fiber {
                return Err(Error::Invalid(format!(
                    "fiber over [{}] depends on the representative",
                    action.points[orbit[0]]
                )));
            }
        }
        t.push(fiber);
    }
    FiniteCovering::new(x, y, h, t, n)
}

/// Pullback along g: Z -> Y. Sheets are pairs (z, x) with x in the fiber
/// over g(z); the degree is unchanged.
pub fn pullback_covering(c: &FiniteCovering, z: &[String], g: &[usize]) -> Result<FiniteCovering> {
    if g.len() != z.len() {
        return Err(Error::DimensionMismatch { expected: z.len(), got: g.len() });
    }
    if let Some(&bad) = g.iter().find(|&&j| j >= c.y.len()) {
        return Err(Error::Invalid(format!("g hits index {bad} outside Y")));
    }
    let mut x = Vec::new();
    let mut h = Vec::new();
    let mut t = Vec::with_capacity(z.len());
    for (zi, zl) in z.iter().enumerate() {
        let fiber = &c.t[g[zi]];
        let mut ms = Multiset::new();
        for (label, m) in fiber.iter() {
            let pair = format!("({zl},{label})");
            x.push(pair.clone());
            h.push(zi);
            ms.insert(pair, m);
        }
        t.push(ms);
    }
    FiniteCovering::new(x, z.to_vec(), h, t, c.n)
}

/// Composition of an n-covering X -> Y with an m-covering Y -> Z into an
/// nm-covering X -> Z: u(z) = sum over y of mult_{s(z)}(y) * t(y).
pub fn compose_coverings(inner: &FiniteCovering, outer: &FiniteCovering) -> Result<FiniteCovering> {
    if inner.y != outer.x {
        return Err(Error::Invalid("middle spaces do not match".into()));
    }
    let h: Vec<usize> = inner.h.iter().map(|&j| outer.h[j]).collect();
    let t: Vec<Multiset> = outer
        .t
        .iter()
        .map(|s| {
            let mut u = Multiset::new();
            for (label, m) in s.iter() {
                let yj = inner.y_index(label).expect("validated support");
                for (xl, xm) in inner.t[yj].iter() {
                    u.insert(xl.to_string(), xm * m);
                }
            }
            u
        })
        .collect();
    FiniteCovering::new(inner.x.clone(), outer.y.clone(), h, t, inner.n * outer.n)
}

/// Dictionary direction covering -> algebra: f: C(X) -> C(Y) with
/// f(delta_x)(y) = multiplicity of x in t(y). This is a Frobenius
/// n-homomorphism when the covering axioms hold.
pub fn covering_to_frobenius(c: &FiniteCovering, backend: Backend, eps: f64) -> Result<LinearMap> {
    let cx = CommutativeAlgebra::function_algebra(c.x.clone(), backend, eps)?;
    let cy = CommutativeAlgebra::function_algebra(c.y.clone(), backend, eps)?;
    let matrix: Vec<Vec<Scalar>> = (0..c.y.len())
        .map(|j| {
            c.x
                .iter()
                .map(|xl| Scalar::int(backend, eps, c.t[j].multiplicity(xl) as i64))
                .collect()
        })
        .collect();
    LinearMap::new(cx, cy, matrix)
}

/// Dictionary direction algebra -> covering: read multiplicities off
/// f(delta_x)(y). Requires nonnegative integer entries, fiber totals n, and
/// a unique base point under every sheet.
pub fn frobenius_to_covering(f: &LinearMap, n: usize) -> Result<FiniteCovering> {
    let x = f.domain().labels().to_vec();
    let y = f.codomain().labels().to_vec();
    let eps = f.domain().eps();
    let mut mult = vec![vec![0usize; x.len()]; y.len()];
    for (j, row) in f.matrix().iter().enumerate() {
        for (i, entry) in row.iter().enumerate() {
            let int = entry
                .to_integer(eps * 10.0)
                .ok_or_else(|| Error::NonIntegralMultiplicity(format!(
                    "f(delta_{})({}) = {entry}",
                    x[i], y[j]
                )))?;
            use num_traits::{Signed, ToPrimitive};
            if int.is_negative() {
                return Err(Error::NonIntegralMultiplicity(format!(
                    "negative multiplicity {int} at ({}, {})",
                    x[i], y[j]
                )));
            }
            mult[j][i] = int.to_usize().unwrap();
        }
    }
    let mut h = Vec::with_capacity(x.len());
    for i in 0..x.len() {
        let over: Vec<usize> = (0..y.len()).filter(|&j| mult[j][i] > 0).collect();
        if over.len() != 1 {
            return Err(Error::Invalid(format!(
                "sheet {} lies over {} base points",
                x[i],
                over.len()
            )));
        }
        h.push(over[0]);
    }
    let t: Vec<Multiset> = (0..y.len())
        .map(|j| {
            Multiset::from_pairs(
                (0..x.len())
                    .filter(|&i| mult[j][i] > 0)
                    .map(|i| (x[i].clone(), mult[j][i])),
            )
        })
        .collect();
    FiniteCovering::new(x, y, h, t, n)
}

/// An n-branched covering of an interval from a sequence of pairwise
/// adjacent partitions of the n sheets, one per segment.
#[derive(Debug, Clone, serde::Deserialize)]
pub struct IntervalCoveringSpec {
    pub n: usize,
    /// partitions[r] groups the sheets over segment r+1 into components.
    pub partitions: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone)]
pub struct IntervalCovering {
    pub covering: FiniteCovering,
    /// Component counts per segment.
    pub segment_components: Vec<usize>,
    /// Component counts per branch point.
    pub branch_components: Vec<usize>,
    /// incidence[r][b] = (segment-r component indices inside branch block b,
    /// segment-(r+1) component indices inside it).
    pub incidence: Vec<Vec<(Vec<usize>, Vec<usize>)>>,
}

/// Segment sheets are labeled x{r}{j} and branch sheets w{r}{j}, both
/// 1-based, blocks ordered by smallest sheet name. The base is
/// y1, v1, y2, v2, ..., ym.
pub fn build_interval_covering(spec: &IntervalCoveringSpec) -> Result<IntervalCovering> {
    if spec.partitions.is_empty() {
        return Err(Error::Invalid("need at least one segment".into()));
    }
    let parts: Vec<SetPartition> = spec
        .partitions
        .iter()
        .map(|blocks| SetPartition::new(blocks.clone()))
        .collect::<Result<_>>()?;
    for p in &parts {
        if p.ground_size() != spec.n {
            return Err(Error::DimensionMismatch { expected: spec.n, got: p.ground_size() });
        }
        if p.ground() != parts[0].ground() {
            return Err(Error::GroundSetMismatch);
        }
    }
    let m = parts.len();
    let mut joins = Vec::with_capacity(m.saturating_sub(1));
    for r in 0..m - 1 {
        if !partition_adjacent(&parts[r], &parts[r + 1])? {
            return Err(Error::IncompatiblePartitions(r + 1, r + 2));
        }
        joins.push(partition_join(&parts[r], &parts[r + 1])?);
    }

    let mut x = Vec::new();
    let mut y = Vec::new();
    let mut h = Vec::new();
    let mut t = Vec::new();
    for r in 0..m {
        y.push(format!("y{}", r + 1));
        let yj = y.len() - 1;
        let mut ms = Multiset::new();
        for (j, block) in parts[r].blocks().iter().enumerate() {
            let label = format!("x{}{}", r + 1, j + 1);
            x.push(label.clone());
            h.push(yj);
            ms.insert(label, block.len());
        }
        t.push(ms);
        if r < m - 1 {
            y.push(format!("v{}", r + 1));
            let vj = y.len() - 1;
            let mut ms = Multiset::new();
            for (j, block) in joins[r].blocks().iter().enumerate() {
                let label = format!("w{}{}", r + 1, j + 1);
                x.push(label.clone());
                h.push(vj);
                ms.insert(label, block.len());
            }
            t.push(ms);
        }
    }
    let covering = FiniteCovering::new(x, y, h, t, spec.n)?;

    let segment_components: Vec<usize> = parts.iter().map(SetPartition::n_parts).collect();
    let branch_components: Vec<usize> = joins.iter().map(SetPartition::n_parts).collect();
    let incidence: Vec<Vec<(Vec<usize>, Vec<usize>)>> = joins
        .iter()
        .enumerate()
        .map(|(r, join)| {
            join.blocks()
                .iter()
                .map(|b| {
                    let left = parts[r]
                        .blocks()
                        .iter()
                        .positions(|a| a.is_subset(b))
                        .collect();
                    let right = parts[r + 1]
                        .blocks()
                        .iter()
                        .positions(|a| a.is_subset(b))
                        .collect();
                    (left, right)
                })
                .collect()
        })
        .collect();
    Ok(IntervalCovering { covering, segment_components, branch_components, incidence })
}

impl IntervalCovering {
    /// Smallest degree realizing the same component incidence pattern with
    /// positive sheet multiplicities balanced at every branch point, up to
    /// `max`. The paper's three-segment example needs 5.
    pub fn minimal_degree(&self, max: usize) -> Option<usize> {
        let lower = *self.segment_components.iter().max().unwrap_or(&1);
        (lower..=max).find(|&n| self.admits_degree(n))
    }

    fn admits_degree(&self, n: usize) -> bool {
        fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
            if parts == 1 {
                return if n >= 1 { vec![vec![n]] } else { vec![] };
            }
            let mut out = Vec::new();
            for first in 1..=n.saturating_sub(parts - 1) {
                for rest in compositions(n - first, parts - 1) {
                    let mut c = vec![first];
                    c.extend(rest);
                    out.push(c);
                }
            }
            out
        }
        let balanced = |r: usize, left: &[usize], right: &[usize]| {
            self.incidence[r].iter().all(|(ls, rs)| {
                let lsum: usize = ls.iter().map(|&j| left[j]).sum();
                let rsum: usize = rs.iter().map(|&j| right[j]).sum();
                lsum == rsum
            })
        };
        fn extend(
            cov: &IntervalCovering,
            n: usize,
            prev: &[usize],
            r: usize,
            balanced: &dyn Fn(usize, &[usize], &[usize]) -> bool,
            compositions: &dyn Fn(usize, usize) -> Vec<Vec<usize>>,
        ) -> bool {
            if r == cov.segment_components.len() {
                return true;
            }
            compositions(n, cov.segment_components[r])
                .into_iter()
                .any(|next| {
                    balanced(r - 1, prev, &next)
                        && extend(cov, n, &next, r + 1, balanced, compositions)
                })
        }
        compositions(n, self.segment_components[0]).into_iter().any(|first| {
            if self.segment_components.len() == 1 {
                return true;
            }
            extend(self, n, &first, 1, &balanced, &compositions)
        })
    }
}

/// The resolution of an n-covering: points are pairs (y, arrangement of
/// t(y)), carrying the natural symmetric group action.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub covering: FiniteCovering,
    /// (base index, sequence of sheet indices whose multiset is the fiber).
    pub elements: Vec<(usize, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ResolutionReport {
    /// Every fiber of E -> Y has size n! / prod(mult!)?
    pub fiber_sizes_ok: bool,
    /// Orbit count of Sigma_n on E; must equal |Y|.
    pub orbits_on_e: usize,
    /// Orbit count on E x [n]; must equal |X|.
    pub orbits_on_pairs: usize,
    /// Evaluation (e, i) -> e.seq[i] is constant on orbits and hits every
    /// sheet exactly once.
    pub evaluation_bijective: bool,
    pub base_points: usize,
    pub sheets: usize,
}

impl ResolutionReport {
    pub fn pass(&self) -> bool {
        self.fiber_sizes_ok
            && self.orbits_on_e == self.base_points
            && self.orbits_on_pairs == self.sheets
            && self.evaluation_bijective
    }
}

const RESOLUTION_CAP: usize = 100_000;

pub fn resolve_covering(c: &FiniteCovering) -> Result<Resolution> {
    let mut elements = Vec::new();
    for (j, ms) in c.t.iter().enumerate() {
        let sheet_indices: Vec<usize> = ms
            .elements()
            .iter()
            .map(|l| c.x_index(l).expect("validated support"))
            .collect();
        let arrangements: Vec<Vec<usize>> = sheet_indices
            .iter()
            .copied()
            .permutations(sheet_indices.len())
            .unique()
            .collect();
        if elements.len() + arrangements.len() > RESOLUTION_CAP {
            return Err(Error::CapExceeded {
                what: "resolution size",
                size: elements.len() + arrangements.len(),
                cap: RESOLUTION_CAP,
            });
        }
        elements.extend(arrangements.into_iter().map(|seq| (j, seq)));
    }
    Ok(Resolution { covering: c.clone(), elements })
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let root = self.find(self.0[i]);
            self.0[i] = root;
        }
        self.0[i]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
    fn count(&mut self, n: usize) -> usize {
        (0..n).map(|i| self.find(i)).unique().count()
    }
}

impl Resolution {
    pub fn check(&self) -> ResolutionReport {
        let c = &self.covering;
        let n = c.n;

        let fiber_sizes_ok = (0..c.y.len()).all(|j| {
            let expected: usize = {
                let mut size = (1..=n).product::<usize>();
                for (_, m) in c.t[j].iter() {
                    size /= (1..=m).product::<usize>();
                }
                size
            };
            self.elements.iter().filter(|(y, _)| *y == j).count() == expected
        });

        // index of (y, seq) in elements
        let position = |j: usize, seq: &[usize]| -> usize {
            self.elements
                .iter()
                .position(|(y, s)| *y == j && s == seq)
                .expect("action must close on E")
        };

        // adjacent transpositions generate Sigma_n
        let mut uf_e = UnionFind::new(self.elements.len());
        let mut uf_pairs = UnionFind::new(self.elements.len() * n);
        for (ei, (j, seq)) in self.elements.iter().enumerate() {
            for k in 0..n.saturating_sub(1) {
                let mut swapped = seq.clone();
                swapped.swap(k, k + 1);
                let ei2 = position(*j, &swapped);
                uf_e.union(ei, ei2);
                for i in 0..n {
                    let i2 = if i == k { k + 1 } else if i == k + 1 { k } else { i };
                    uf_pairs.union(ei * n + i, ei2 * n + i2);
                }
            }
        }
        let orbits_on_e = uf_e.count(self.elements.len());
        let orbits_on_pairs = uf_pairs.count(self.elements.len() * n);

        // evaluation must be constant on pair orbits and surject onto X
        let mut value_of_root: std::collections::BTreeMap<usize, usize> = Default::default();
        let mut evaluation_bijective = true;
        for (ei, (_, seq)) in self.elements.iter().enumerate() {
            for i in 0..n {
                let root = uf_pairs.find(ei * n + i);
                let value = seq[i];
                match value_of_root.get(&root) {
                    Some(&v) if v != value => evaluation_bijective = false,
                    _ => {
                        value_of_root.insert(root, value);
                    }
                }
            }
        }
        let values: BTreeSet<usize> = value_of_root.values().copied().collect();
        if values.len() != c.x.len() || value_of_root.len() != values.len() {
            evaluation_bijective = false;
        }

        ResolutionReport {
            fiber_sizes_ok,
            orbits_on_e,
            orbits_on_pairs,
            evaluation_bijective,
            base_points: c.y.len(),
            sheets: c.x.len(),
        }
    }
}
