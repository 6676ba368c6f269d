//! Mayer-Vietoris trees of monomial ideals.
//!
//! A node `J` with at least two generators is split along a pivot
//! generator `m`: the left child is generated by the `lcm(m_i, m)`, the right
//! child by the remaining generators. The root has position 1 and dimension
//! 0; a node at position `p` and dimension `i` has its left child at `2p`,
//! dimension `i + 1`, and its right child at `2p + 1`, dimension `i`. Nodes at
//! position 1 or at an even position are *relevant*.
//!
//! Generators of relevant nodes bound the multigraded Betti numbers from
//! both sides. Restricting the search to dimension `n - 1` with two pruning
//! rules yields the candidates for `B_{n-1}(I)`, the maximal corners.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::koszul::is_maximal_corner;
use crate::monomial::{divides_slice, Exponent, MonomialIdeal, Multidegree};
use crate::text::format_monomial;

/// How the distinguished generator of a node is chosen.
///
/// Strategies see generators in canonical order (lexicographically
/// descending) and are deterministic.
#[derive(Clone, Copy, Debug, Default)]
pub enum PivotStrategy {
    /// The last generator in canonical order (the lexicographically smallest).
    LastGenerator,
    /// The first generator in canonical order (the lexicographically
    /// largest), which has the highest exponent in the first variable.
    #[default]
    LexFirst,
    /// The first generator when sorted by the comparator; ties go to the
    /// lexicographically larger one.
    MinBy(fn(&[Exponent], &[Exponent]) -> Ordering),
}

impl PivotStrategy {
    fn pick<'a>(&self, gens: impl Iterator<Item = &'a [Exponent]>) -> usize {
        let mut best: Option<(usize, &[Exponent])> = None;
        for (k, g) in gens.enumerate() {
            let better = match best {
                None => true,
                Some((_, b)) => match self {
                    PivotStrategy::LastGenerator => g < b,
                    PivotStrategy::LexFirst => g > b,
                    PivotStrategy::MinBy(cmp) => match cmp(g, b) {
                        Ordering::Less => true,
                        Ordering::Equal => g > b,
                        Ordering::Greater => false,
                    },
                },
            };
            if better {
                best = Some((k, g));
            }
        }
        best.expect("pivot of an empty node").0
    }
}

/// Split `J` along the pivot chosen by `strategy`.
pub fn mvt_children(
    ideal: &MonomialIdeal,
    strategy: PivotStrategy,
) -> Result<(MonomialIdeal, MonomialIdeal)> {
    if ideal.num_generators() < 2 {
        return Err(Error::Leaf);
    }
    let gens = ideal.generators();
    let p = strategy.pick(gens.iter().map(Multidegree::as_slice));
    let pivot = &gens[p];
    let left = MonomialIdeal::minimalize(
        gens.iter()
            .enumerate()
            .filter(|&(k, _)| k != p)
            .map(|(_, g)| g.lcm(pivot).expect("same ring")),
        ideal.nvars(),
    )?;
    let right = MonomialIdeal::minimalize(
        gens.iter().enumerate().filter(|&(k, _)| k != p).map(|(_, g)| g.clone()),
        ideal.nvars(),
    )?;
    Ok((left, right))
}

/// Why a subtree was not explored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PruneReason {
    /// Fewer than `n - i` generators at dimension `i`.
    Generators,
    /// Some variable occurs in no generator.
    Indeterminates,
}

#[derive(Clone, Debug)]
pub struct MvtNode {
    pub ideal: MonomialIdeal,
    /// Root-to-node path, `false` for a left step.
    pub path: Vec<bool>,
    pub dimension: usize,
    pub relevant: bool,
    /// Set when the node was cut; its subtree is absent.
    pub pruned: Option<PruneReason>,
}

impl MvtNode {
    /// Position in the tree: 1 for the root, `2p` and `2p + 1` for children.
    pub fn position(&self) -> BigUint {
        let mut p = BigUint::one();
        for &right in &self.path {
            p <<= 1u32;
            if right {
                p += 1u32;
            }
        }
        p
    }
}

/// Nodes in pre-order (node, left subtree, right subtree).
#[derive(Clone, Debug)]
pub struct MvtTree {
    nvars: usize,
    pruned: bool,
    nodes: Vec<MvtNode>,
}

impl MvtTree {
    pub fn nodes(&self) -> &[MvtNode] {
        &self.nodes
    }

    pub fn root(&self) -> &MvtNode {
        &self.nodes[0]
    }

    pub fn is_pruned(&self) -> bool {
        self.pruned
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// One line per node in pre-order: `position dimension relevant [generators]`,
    /// followed by `pruned:<rule>` for cut nodes.
    pub fn dump(&self, names: &[String]) -> String {
        let mut out = String::new();
        for node in &self.nodes {
            let gens: Vec<String> =
                node.ideal.generators().iter().map(|g| format_monomial(g, names)).collect();
            let _ = write!(
                out,
                "{} {} {} [{}]",
                node.position(),
                node.dimension,
                if node.relevant { "yes" } else { "no" },
                gens.join(", ")
            );
            match node.pruned {
                Some(PruneReason::Generators) => out.push_str(" pruned:generators"),
                Some(PruneReason::Indeterminates) => out.push_str(" pruned:indeterminates"),
                None => {}
            }
            out.push('\n');
        }
        out
    }
}

fn prune_reason(ideal: &MonomialIdeal, dimension: usize, rules: PruneRules) -> Option<PruneReason> {
    let n = ideal.nvars();
    if rules.indeterminates && !ideal.support_union().iter().all(|&s| s) {
        return Some(PruneReason::Indeterminates);
    }
    if rules.generators && ideal.num_generators() + dimension < n {
        return Some(PruneReason::Generators);
    }
    None
}

/// Which pruning rules apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PruneRules {
    pub generators: bool,
    pub indeterminates: bool,
}

impl PruneRules {
    pub const ALL: PruneRules = PruneRules { generators: true, indeterminates: true };
    pub const NONE: PruneRules = PruneRules { generators: false, indeterminates: false };
}

/// Materialize the tree. With `prune`, subtrees are cut by both rules and
/// the cut node is kept, marked, as a leaf.
pub fn build_mvt(ideal: &MonomialIdeal, strategy: PivotStrategy, prune: bool) -> Result<MvtTree> {
    let rules = if prune { PruneRules::ALL } else { PruneRules::NONE };
    build_mvt_with(ideal, strategy, rules)
}

pub fn build_mvt_with(
    ideal: &MonomialIdeal,
    strategy: PivotStrategy,
    rules: PruneRules,
) -> Result<MvtTree> {
    ideal.ensure_proper_nonzero()?;
    let mut nodes = Vec::new();
    let mut stack = vec![(ideal.clone(), Vec::new(), 0usize)];
    while let Some((ideal, path, dimension)) = stack.pop() {
        let relevant = !path.last().copied().unwrap_or(false);
        let pruned = prune_reason(&ideal, dimension, rules);
        let children = if pruned.is_none() && ideal.num_generators() >= 2 {
            Some(mvt_children(&ideal, strategy)?)
        } else {
            None
        };
        if let Some((left, right)) = children {
            let mut rp = path.clone();
            rp.push(true);
            let mut lp = path.clone();
            lp.push(false);
            stack.push((right, rp, dimension));
            stack.push((left, lp, dimension + 1));
        }
        nodes.push(MvtNode { ideal, path, dimension, relevant, pruned });
    }
    Ok(MvtTree { nvars: ideal.nvars(), pruned: rules != PruneRules::NONE, nodes })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BettiBound {
    pub lower: u8,
    pub upper: usize,
}

/// Bounds `β̄_{i,μ} ≤ β_{i,μ} ≤ β̂_{i,μ}` keyed by `(i, μ)`; pairs without an
/// entry have both bounds zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiBounds {
    pub entries: BTreeMap<(usize, Multidegree), BettiBound>,
}

impl BettiBounds {
    pub fn get(&self, i: usize, mu: &Multidegree) -> BettiBound {
        self.entries
            .get(&(i, mu.clone()))
            .copied()
            .unwrap_or(BettiBound { lower: 0, upper: 0 })
    }
}

/// Betti bounds from an unpruned tree.
///
/// The upper bound counts occurrences of `μ` among generators of relevant
/// nodes of dimension `i`. The lower bound is 1 when `μ` occurs exactly once
/// among the generators of all relevant nodes, at a node of dimension `i`.
pub fn betti_bounds(tree: &MvtTree) -> Result<BettiBounds> {
    if tree.pruned {
        return Err(Error::InvalidInput("Betti bounds need an unpruned tree".into()));
    }
    let mut per_degree: BTreeMap<(usize, Multidegree), usize> = BTreeMap::new();
    let mut overall: BTreeMap<&Multidegree, usize> = BTreeMap::new();
    for node in tree.nodes.iter().filter(|n| n.relevant) {
        for g in node.ideal.generators() {
            per_degree.entry((node.dimension, g.clone())).or_default().add_assign(1);
            overall.entry(g).or_default().add_assign(1);
        }
    }
    let entries = per_degree
        .into_iter()
        .map(|((i, mu), upper)| {
            let lower = u8::from(upper == 1 && overall[&mu] == 1);
            ((i, mu), BettiBound { lower, upper })
        })
        .collect();
    Ok(BettiBounds { entries })
}

/// Settings for the `B_{n-1}` search.
#[derive(Clone, Copy, Debug)]
pub struct MvtOptions {
    pub strategy: PivotStrategy,
    pub prune: PruneRules,
    /// Drop the first variable in left children, whose generators all share
    /// the pivot's exponent there, and finish in two variables directly.
    /// Only used with [`PivotStrategy::LexFirst`].
    pub eliminate_variables: bool,
    /// Worker threads; `None` uses the ambient rayon pool, `Some(1)` runs
    /// sequentially.
    pub threads: Option<usize>,
}

impl Default for MvtOptions {
    fn default() -> Self {
        MvtOptions {
            strategy: PivotStrategy::LexFirst,
            prune: PruneRules::ALL,
            eliminate_variables: false,
            threads: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Nodes whose children were formed.
    pub splits: u64,
    pub pruned_generators: u64,
    pub pruned_indeterminates: u64,
    /// Candidate multidegrees checked against the corner criterion,
    /// counted with repetition.
    pub candidates: u64,
}

impl AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.splits += o.splits;
        self.pruned_generators += o.pruned_generators;
        self.pruned_indeterminates += o.pruned_indeterminates;
        self.candidates += o.candidates;
    }
}

#[derive(Clone, Debug)]
pub struct CornerSearch {
    /// `B_{n-1}(I)` in canonical order.
    pub corners: Vec<Multidegree>,
    pub stats: SearchStats,
}

/// `B_{n-1}(I)` with the default options and the given pivot strategy.
pub fn compute_b_n_minus_1(ideal: &MonomialIdeal, strategy: PivotStrategy) -> Result<Vec<Multidegree>> {
    let opts = MvtOptions { strategy, ..MvtOptions::default() };
    Ok(compute_b_n_minus_1_with(ideal, &opts)?.corners)
}

pub fn compute_b_n_minus_1_with(ideal: &MonomialIdeal, opts: &MvtOptions) -> Result<CornerSearch> {
    ideal.ensure_proper_nonzero()?;
    match opts.threads {
        Some(1) => Ok(run_search(ideal, opts, false)),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
            Ok(pool.install(|| run_search(ideal, opts, true)))
        }
        None => Ok(run_search(ideal, opts, true)),
    }
}

// Nodes with fewer generators than this are searched sequentially.
const PAR_MIN_GENS: usize = 10;

struct Search<'a> {
    ideal: &'a MonomialIdeal,
    n: usize,
    opts: MvtOptions,
    parallel: bool,
}

#[derive(Default)]
struct Found {
    corners: Vec<Multidegree>,
    stats: SearchStats,
}

impl Found {
    fn merge(mut self, other: Found) -> Found {
        self.corners.extend(other.corners);
        self.stats += other.stats;
        self
    }
}

fn run_search(ideal: &MonomialIdeal, opts: &MvtOptions, parallel: bool) -> CornerSearch {
    let n = ideal.nvars();
    let search = Search { ideal, n, opts: *opts, parallel };
    let flat: Vec<Exponent> =
        ideal.generators().iter().flat_map(|g| g.as_slice().iter().copied()).collect();
    let found = if opts.eliminate_variables && matches!(opts.strategy, PivotStrategy::LexFirst) {
        let active: Vec<usize> = (0..n).collect();
        search.reduced(flat, &active, vec![0; n])
    } else {
        search.full(flat, 0)
    };
    let mut corners = found.corners;
    corners.sort_by(|a, b| b.cmp(a));
    corners.dedup();
    CornerSearch { corners, stats: found.stats }
}

impl Search<'_> {
    fn check(&self, mu: Vec<Exponent>, found: &mut Found) {
        found.stats.candidates += 1;
        let mu = Multidegree::new(mu);
        if is_maximal_corner(self.ideal, &mu).expect("same ring") {
            found.corners.push(mu);
        }
    }

    fn both<A, B>(&self, wide: bool, a: A, b: B) -> (Found, Found)
    where
        A: FnOnce() -> Found + Send,
        B: FnOnce() -> Found + Send,
    {
        if self.parallel && wide {
            rayon::join(a, b)
        } else {
            (a(), b())
        }
    }

    fn pruned(&self, gens: &[Exponent], stride: usize, needed: usize, found: &mut Found) -> bool {
        if self.opts.prune.generators && gens.len() / stride < needed {
            found.stats.pruned_generators += 1;
            return true;
        }
        if self.opts.prune.indeterminates && !full_union(gens, stride) {
            found.stats.pruned_indeterminates += 1;
            return true;
        }
        false
    }

    /// Node of the tree at `dimension`; generators flat with stride `n`.
    fn full(&self, gens: Vec<Exponent>, dimension: usize) -> Found {
        let n = self.n;
        let mut found = Found::default();
        if self.pruned(&gens, n, n - dimension, &mut found) {
            return found;
        }
        let g = gens.len() / n;
        if dimension == n - 1 {
            // right descendants only drop generators; left ones leave dimension n-1
            for m in gens.chunks_exact(n) {
                self.check(m.to_vec(), &mut found);
            }
            return found;
        }
        if g < 2 {
            return found;
        }
        found.stats.splits += 1;
        let p = self.opts.strategy.pick(gens.chunks_exact(n));
        let left = left_child(&gens, n, p);
        let right = without(gens, n, p);
        let (a, b) = self.both(g >= PAR_MIN_GENS, || self.full(left, dimension + 1), || self.full(right, dimension));
        found.merge(a).merge(b)
    }

    /// Node over the variables `active` (stride `active.len()`), as an ideal
    /// multiplied by `x^fixed`; its top homology sits in degree
    /// `active.len() - 1`.
    fn reduced(&self, gens: Vec<Exponent>, active: &[usize], fixed: Vec<Exponent>) -> Found {
        let k = active.len();
        let mut found = Found::default();
        if self.pruned(&gens, k, k, &mut found) {
            return found;
        }
        let g = gens.len() / k;
        let lift = |local: &[Exponent]| {
            let mut mu = fixed.clone();
            for (&v, &e) in active.iter().zip(local) {
                mu[v] = e;
            }
            mu
        };
        match k {
            1 => {
                if let Some(&e) = gens.iter().min() {
                    self.check(lift(&[e]), &mut found);
                }
                return found;
            }
            2 => {
                // syzygies of a two-variable ideal sit at lcms of neighbours
                let mut pts: Vec<(Exponent, Exponent)> = gens.chunks_exact(2).map(|c| (c[0], c[1])).collect();
                pts.sort_unstable_by(|a, b| b.cmp(a));
                for w in pts.windows(2) {
                    self.check(lift(&[w[0].0, w[1].1]), &mut found);
                }
                return found;
            }
            _ => {}
        }
        if g < 2 {
            return found;
        }
        found.stats.splits += 1;
        let p = PivotStrategy::LexFirst.pick(gens.chunks_exact(k));
        let c = gens[p * k];
        if c == 0 {
            // no generator involves the first active variable
            return found;
        }
        let left_full = left_child(&gens, k, p);
        let left: Vec<Exponent> = left_full.chunks_exact(k).flat_map(|m| m[1..].iter().copied()).collect();
        let mut left_fixed = fixed.clone();
        left_fixed[active[0]] = c;
        let right = without(gens, k, p);
        let (a, b) = self.both(
            g >= PAR_MIN_GENS,
            || self.reduced(left, &active[1..], left_fixed),
            || self.reduced(right, active, fixed.clone()),
        );
        found.merge(a).merge(b)
    }
}

fn full_union(gens: &[Exponent], stride: usize) -> bool {
    (0..stride).all(|v| gens.chunks_exact(stride).any(|m| m[v] > 0))
}

fn without(mut gens: Vec<Exponent>, stride: usize, p: usize) -> Vec<Exponent> {
    gens.drain(p * stride..(p + 1) * stride);
    gens
}

fn left_child(gens: &[Exponent], stride: usize, p: usize) -> Vec<Exponent> {
    let pivot = &gens[p * stride..(p + 1) * stride];
    let mut lcms: Vec<(u64, Vec<Exponent>)> = gens
        .chunks_exact(stride)
        .enumerate()
        .filter(|&(k, _)| k != p)
        .map(|(_, m)| {
            let l: Vec<Exponent> = m.iter().zip(pivot).map(|(&a, &b)| a.max(b)).collect();
            (l.iter().map(|&e| e as u64).sum(), l)
        })
        .collect();
    lcms.sort_unstable();
    let mut kept: Vec<Exponent> = Vec::with_capacity(lcms.len() * stride);
    for (_, l) in lcms {
        if !kept.chunks_exact(stride).any(|k| divides_slice(k, &l)) {
            kept.extend_from_slice(&l);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::tests::{staircase, ideal, md};

    fn four_vars() -> MonomialIdeal {
        ideal(4, &[&[2, 3, 0, 0], &[0, 3, 1, 1], &[0, 1, 0, 2], &[0, 0, 3, 2]])
    }

    #[test]
    fn children_examples() {
        let (l, r) = mvt_children(&four_vars(), PivotStrategy::LexFirst).unwrap();
        assert_eq!(l, ideal(4, &[&[2, 3, 1, 1], &[2, 3, 0, 2]]));
        assert_eq!(r, ideal(4, &[&[0, 3, 1, 1], &[0, 1, 0, 2], &[0, 0, 3, 2]]));

        let xy_yz = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let (l, r) = mvt_children(&xy_yz, PivotStrategy::LastGenerator).unwrap();
        assert_eq!(l, ideal(3, &[&[1, 1, 1]]));
        assert_eq!(r, ideal(3, &[&[1, 1, 0]]));

        let (l, r) = mvt_children(&ideal(2, &[&[1, 0], &[0, 1]]), PivotStrategy::LastGenerator).unwrap();
        assert_eq!(l, ideal(2, &[&[1, 1]]));
        assert_eq!(r, ideal(2, &[&[1, 0]]));

        assert_eq!(mvt_children(&ideal(2, &[&[1, 0]]), PivotStrategy::LexFirst), Err(Error::Leaf));
    }

    #[test]
    fn pruned_tree_of_four_vars() {
        let t = build_mvt(&four_vars(), PivotStrategy::LexFirst, true).unwrap();
        assert_eq!(t.nodes().len(), 3);
        assert_eq!(t.nodes()[1].pruned, Some(PruneReason::Generators));
        assert_eq!(t.nodes()[1].position(), BigUint::from(2u32));
        assert_eq!(t.nodes()[2].pruned, Some(PruneReason::Indeterminates));
        assert_eq!(t.nodes()[2].position(), BigUint::from(3u32));
    }

    #[test]
    fn unpruned_small_trees() {
        let t = build_mvt(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]]), PivotStrategy::LastGenerator, false).unwrap();
        let summary: Vec<(u32, usize, bool)> = t
            .nodes()
            .iter()
            .map(|n| (n.position().try_into().unwrap(), n.dimension, n.relevant))
            .collect();
        assert_eq!(summary, vec![(1, 0, true), (2, 1, true), (3, 0, false)]);
        assert_eq!(t.nodes()[1].ideal, ideal(3, &[&[1, 1, 1]]));

        let t = build_mvt(&ideal(1, &[&[1]]), PivotStrategy::LexFirst, false).unwrap();
        assert_eq!(t.nodes().len(), 1);

        assert_eq!(build_mvt(&MonomialIdeal::zero(2), PivotStrategy::LexFirst, false).unwrap_err(), Error::ZeroIdeal);
        assert_eq!(build_mvt(&MonomialIdeal::unit(2), PivotStrategy::LexFirst, false).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn bounds_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let b = betti_bounds(&build_mvt(&i, PivotStrategy::LexFirst, false).unwrap()).unwrap();
        assert_eq!(b.entries.len(), 3);
        for (key, bound) in [((0, md(&[1, 1, 0])), 1), ((0, md(&[0, 1, 1])), 1), ((1, md(&[1, 1, 1])), 1)] {
            assert_eq!(b.entries[&key], BettiBound { lower: 1, upper: bound });
        }
        let b = betti_bounds(&build_mvt(&ideal(1, &[&[1]]), PivotStrategy::LexFirst, false).unwrap()).unwrap();
        assert_eq!(b.entries.len(), 1);
        assert_eq!(b.get(0, &md(&[1])).upper, 1);

        let pruned = build_mvt(&staircase(), PivotStrategy::LexFirst, true).unwrap();
        assert!(betti_bounds(&pruned).is_err());
    }

    #[test]
    fn corners_examples() {
        let c = compute_b_n_minus_1(&staircase(), PivotStrategy::LexFirst).unwrap();
        assert_eq!(c, vec![md(&[3, 1, 1]), md(&[2, 3, 1]), md(&[1, 3, 3])]);
        assert!(compute_b_n_minus_1(&four_vars(), PivotStrategy::LexFirst).unwrap().is_empty());
        assert!(compute_b_n_minus_1(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]]), PivotStrategy::LexFirst)
            .unwrap()
            .is_empty());
        assert_eq!(compute_b_n_minus_1(&ideal(1, &[&[2]]), PivotStrategy::LastGenerator).unwrap(), vec![md(&[2])]);
    }

    #[test]
    fn variable_elimination_agrees_on_examples() {
        for i in [staircase(), four_vars(), ideal(2, &[&[3, 0], &[1, 1], &[0, 2]])] {
            let plain = compute_b_n_minus_1_with(&i, &MvtOptions::default()).unwrap();
            let elim = compute_b_n_minus_1_with(&i, &MvtOptions { eliminate_variables: true, ..Default::default() })
                .unwrap();
            assert_eq!(plain.corners, elim.corners);
        }
    }

    #[test]
    fn custom_comparator_strategy() {
        fn by_degree(a: &[Exponent], b: &[Exponent]) -> Ordering {
            a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>())
        }
        let opts = MvtOptions { strategy: PivotStrategy::MinBy(by_degree), ..Default::default() };
        let c = compute_b_n_minus_1_with(&staircase(), &opts).unwrap().corners;
        assert_eq!(c, vec![md(&[3, 1, 1]), md(&[2, 3, 1]), md(&[1, 3, 3])]);
    }

    #[test]
    fn dump_format() {
        let names: Vec<String> = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
        let t = build_mvt(&four_vars(), PivotStrategy::LexFirst, true).unwrap();
        assert_eq!(
            t.dump(&names),
            "1 0 yes [x^2*y^3, y^3*z*t, y*t^2, z^3*t^2]\n\
             2 1 yes [x^2*y^3*z*t, x^2*y^3*t^2] pruned:generators\n\
             3 0 no [y^3*z*t, y*t^2, z^3*t^2] pruned:indeterminates\n"
        );
    }
}
