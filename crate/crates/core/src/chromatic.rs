//! Coloring counts and chromatic polynomials of gain graphs.
//!
//! The counting functions enumerate colorations directly and serve as ground
//! truth. The total chromatic polynomial is the signed sum over edge subsets
//! `S` of `q^b(S) z^(c(S) - b(S))`, where `c` counts components of `(V, S)`
//! and `b` the balanced ones.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::combinatorics::Multigraph;
use crate::error::{Error, Result};
use crate::gain_graph::{components_stats, Edge, GainGraph, IntegralGainGraph, ModularGainGraph};
use crate::poly::{Poly1, Poly2};

/// Default limit on the number of edges accepted by the subset expansion.
pub const DEFAULT_EDGE_BOUND: usize = 26;

/// For each vertex `v`, the constraints `color(v) != color(u) + offset` with
/// `u < v`. `None` when a neutral loop makes every coloring improper.
fn constraints<G: GainGraph + ?Sized>(g: &G) -> Option<Vec<Vec<(usize, i64)>>> {
    let mut out = vec![Vec::new(); g.order()];
    for e in g.edge_list() {
        if e.is_loop() {
            if g.is_neutral_gain(e.gain) {
                return None;
            }
            continue;
        }
        // color(head) != color(tail) + gain
        let (later, earlier, offset) =
            if e.head > e.tail { (e.head, e.tail, e.gain) } else { (e.tail, e.head, -e.gain) };
        out[later].push((earlier, offset));
    }
    Some(out)
}

/// Counts colorings `colors[v] in 0..q` by backtracking; `reduce` maps a
/// forbidden value into the color range or rejects it.
fn count_colorings(n: usize, q: u64, cons: &[Vec<(usize, i64)>], reduce: &dyn Fn(i64) -> Option<u64>) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    if q == 0 {
        return BigInt::from(0);
    }
    fn go(
        v: usize,
        colors: &mut Vec<u64>,
        q: u64,
        cons: &[Vec<(usize, i64)>],
        reduce: &dyn Fn(i64) -> Option<u64>,
        forbidden: &mut Vec<u64>,
    ) -> u128 {
        let n = cons.len();
        let start = forbidden.len();
        for &(u, off) in &cons[v] {
            if let Some(c) = reduce(colors[u] as i64 + off) {
                forbidden.push(c);
            }
        }
        let total = if v + 1 == n {
            let mut bad = forbidden[start..].to_vec();
            bad.sort_unstable();
            bad.dedup();
            (q - bad.len() as u64) as u128
        } else {
            let mut sum = 0u128;
            for c in 0..q {
                if !forbidden[start..].contains(&c) {
                    colors[v] = c;
                    sum += go(v + 1, colors, q, cons, reduce, forbidden);
                }
            }
            sum
        };
        forbidden.truncate(start);
        total
    }
    let mut colors = vec![0; n];
    BigInt::from(go(0, &mut colors, q, cons, reduce, &mut Vec::new()))
}

/// Number of colorings `k: V -> {1..q}` with `k(head) != k(tail) + gain` on
/// every edge.
pub fn chi_integral(g: &IntegralGainGraph, q: u64) -> BigInt {
    match constraints(g) {
        None => BigInt::from(0),
        Some(cons) => {
            let limit = q as i64;
            count_colorings(g.n(), q, &cons, &|c| (0..limit).contains(&c).then_some(c as u64))
        }
    }
}

/// Every proper coloring `k: V -> {1..q}`, in lexicographic order.
pub fn integral_colorings(g: &IntegralGainGraph, q: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let Some(cons) = constraints(g) else {
        return out;
    };
    fn go(v: usize, colors: &mut Vec<u64>, q: u64, cons: &[Vec<(usize, i64)>], out: &mut Vec<Vec<u64>>) {
        if v == cons.len() {
            out.push(colors.clone());
            return;
        }
        for c in 1..=q {
            if cons[v].iter().all(|&(u, off)| c as i64 != colors[u] as i64 + off) {
                colors[v] = c;
                go(v + 1, colors, q, cons, out);
            }
        }
    }
    go(0, &mut vec![0; g.n()], q, &cons, &mut out);
    out
}

/// Number of colorings `k: V -> Z_q` with `k(head) != k(tail) + gain (mod q)`.
pub fn chi_modular<G: GainGraph + ?Sized>(g: &G, q: u64) -> BigInt {
    assert!(q >= 1, "modular colorings need q >= 1");
    let m = q as i64;
    let reduced: Vec<Edge> = g.edge_list().iter().map(|e| Edge::new(e.tail, e.head, e.gain.rem_euclid(m))).collect();
    let mut cons = vec![Vec::new(); g.order()];
    for e in &reduced {
        if e.is_loop() {
            if e.gain == 0 {
                return BigInt::from(0);
            }
            continue;
        }
        let (later, earlier, offset) =
            if e.head > e.tail { (e.head, e.tail, e.gain) } else { (e.tail, e.head, -e.gain) };
        cons[later].push((earlier, offset));
    }
    count_colorings(g.order(), q, &cons, &|c| Some(c.rem_euclid(m) as u64))
}

/// A color in `(Z_m x [k]) ∪ [z]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MultiZeroColor {
    /// One of the `z` zero colors.
    Null(u64),
    /// Gain `g` in copy `t` of the group.
    Pair { t: u64, g: i64 },
}

impl MultiZeroColor {
    /// Decodes `c in 0..k*m+z`: the first `z` indices are zero colors.
    pub fn from_index(c: u64, m: u64, z: u64) -> Self {
        if c < z {
            Self::Null(c)
        } else {
            let r = c - z;
            Self::Pair { t: r / m, g: (r % m) as i64 }
        }
    }

    /// Whether an edge of gain `phi` from a vertex colored `self` to one
    /// colored `head` is improperly colored.
    pub fn conflicts(self, head: Self, phi: i64, m: i64) -> bool {
        match (self, head) {
            (Self::Null(a), Self::Null(b)) => a == b,
            (Self::Pair { t: s, g: a }, Self::Pair { t, g: b }) => s == t && (a + phi - b).rem_euclid(m) == 0,
            _ => false,
        }
    }
}

/// Number of proper colorations `V -> (Z_m x [k]) ∪ [z]`.
pub fn count_multizero(g: &ModularGainGraph, k: u64, z: u64) -> BigInt {
    let m = g.modulus().expect("modular graph") as u64;
    let q = k * m + z;
    let n = g.n();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut incident: Vec<Vec<Edge>> = vec![Vec::new(); n];
    for e in g.edges() {
        incident[e.tail.max(e.head)].push(*e);
    }
    fn go(v: usize, colors: &mut Vec<MultiZeroColor>, q: u64, m: u64, z: u64, incident: &[Vec<Edge>]) -> u128 {
        if v == incident.len() {
            return 1;
        }
        let mut sum = 0;
        for c in 0..q {
            colors[v] = MultiZeroColor::from_index(c, m, z);
            let proper = incident[v].iter().all(|e| !colors[e.tail].conflicts(colors[e.head], e.gain, m as i64));
            if proper {
                sum += go(v + 1, colors, q, m, z, incident);
            }
        }
        sum
    }
    let mut colors = vec![MultiZeroColor::Null(0); n];
    BigInt::from(go(0, &mut colors, q, m, z, &incident))
}

/// Connectivity, potentials and balance of a spanning subgraph, canonical so
/// that equal states can be merged.
///
/// `root[v]` is the least vertex of the component of `v`; `eta[v]` is the
/// potential of `v` relative to its root (zero throughout an unbalanced
/// component); `unbalanced[r]` is meaningful at roots only.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct State {
    root: Vec<usize>,
    eta: Vec<i64>,
    unbalanced: Vec<bool>,
}

impl State {
    fn discrete(n: usize) -> Self {
        Self { root: (0..n).collect(), eta: vec![0; n], unbalanced: vec![false; n] }
    }

    fn mark_unbalanced(&mut self, r: usize) {
        self.unbalanced[r] = true;
        for v in 0..self.root.len() {
            if self.root[v] == r {
                self.eta[v] = 0;
            }
        }
    }

    /// The state after adding edge `e`, with potentials obeying
    /// `eta(tail) = gain + eta(head)` inside balanced components.
    fn with_edge<G: GainGraph + ?Sized>(&self, g: &G, e: &Edge) -> Self {
        let mut s = self.clone();
        let (rt, rh) = (s.root[e.tail], s.root[e.head]);
        if rt == rh {
            if !s.unbalanced[rt] && !g.is_neutral_gain(s.eta[e.tail] - e.gain - s.eta[e.head]) {
                s.mark_unbalanced(rt);
            }
            return s;
        }
        let (keep, gone) = (rt.min(rh), rt.max(rh));
        let unbalanced = s.unbalanced[rt] || s.unbalanced[rh];
        // shift the head side so the edge is satisfied, then re-anchor at `keep`
        let shift = s.eta[e.tail] - e.gain - s.eta[e.head];
        for v in 0..s.root.len() {
            if s.root[v] == rh {
                s.eta[v] += shift;
            }
        }
        for v in 0..s.root.len() {
            if s.root[v] == gone {
                s.root[v] = keep;
            }
        }
        s.unbalanced[gone] = false;
        if unbalanced {
            s.mark_unbalanced(keep);
        } else {
            let base = s.eta[keep];
            for v in 0..s.root.len() {
                if s.root[v] == keep {
                    s.eta[v] = g.reduce(s.eta[v] - base);
                }
            }
        }
        s
    }

    fn monomial(&self) -> (u32, u32) {
        let mut b = 0;
        let mut c = 0;
        for (v, &r) in self.root.iter().enumerate() {
            if r == v {
                c += 1;
                b += !self.unbalanced[v] as u32;
            }
        }
        (b, c - b)
    }
}

/// The total chromatic polynomial, refusing graphs with more than
/// [`DEFAULT_EDGE_BOUND`] edges.
pub fn total_chromatic_poly<G: GainGraph + ?Sized>(g: &G) -> Result<Poly2> {
    total_chromatic_poly_with_bound(g, DEFAULT_EDGE_BOUND)
}

/// The total chromatic polynomial of a graph with at most `bound` edges.
///
/// Subsets are processed one edge at a time; those leading to the same
/// connectivity, potentials and balance are merged with their signed counts,
/// so the work depends on the number of distinct states rather than `2^|E|`.
pub fn total_chromatic_poly_with_bound<G: GainGraph + ?Sized>(g: &G, bound: usize) -> Result<Poly2> {
    let edges = g.edge_list();
    if edges.len() > bound {
        return Err(Error::TooManyEdges { edges: edges.len(), bound });
    }
    let mut states: BTreeMap<State, BigInt> = BTreeMap::new();
    states.insert(State::discrete(g.order()), BigInt::from(1));
    for e in edges {
        let mut next: BTreeMap<State, BigInt> = BTreeMap::new();
        for (s, w) in states {
            let added = s.with_edge(g, e);
            *next.entry(added).or_default() -= &w;
            *next.entry(s).or_default() += w;
        }
        next.retain(|_, w| *w != BigInt::from(0));
        states = next;
    }
    Ok(Poly2::from_terms(states.into_iter().map(|(s, w)| {
        let (b, free) = s.monomial();
        (b, free, w)
    })))
}

/// The same polynomial by summing over all `2^|E|` edge subsets.
pub fn total_chromatic_poly_by_subsets<G: GainGraph + ?Sized>(g: &G, bound: usize) -> Result<Poly2> {
    let m = g.edge_list().len();
    if m > bound || m >= 64 {
        return Err(Error::TooManyEdges { edges: m, bound: bound.min(63) });
    }
    let mut counts: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    let mut s = Vec::with_capacity(m);
    for mask in 0u64..(1u64 << m) {
        s.clear();
        s.extend((0..m).filter(|i| mask >> i & 1 == 1));
        let (c, b) = components_stats(g, &s);
        let sign = if s.len() % 2 == 0 { 1 } else { -1 };
        *counts.entry((b as u32, (c - b) as u32)).or_default() += sign;
    }
    Ok(Poly2::from_terms(counts.into_iter().map(|((b, f), w)| (b, f, w))))
}

/// The zero-free chromatic polynomial: the total polynomial at `z = 0`.
pub fn zero_free_poly<G: GainGraph + ?Sized>(g: &G) -> Result<Poly1> {
    Ok(total_chromatic_poly(g)?.at_z(0))
}

/// The chromatic polynomial: the total polynomial at `z = 1`.
pub fn chromatic_poly<G: GainGraph + ?Sized>(g: &G) -> Result<Poly1> {
    Ok(total_chromatic_poly(g)?.at_z(1))
}

/// Chromatic polynomial of an ordinary multigraph,
/// `sum over S of (-1)^|S| q^c(S)`; zero when there is a loop.
///
/// Computed as the total polynomial of the graph with every gain neutral,
/// where only connectivity states occur, so no edge bound is imposed.
pub fn ordinary_chromatic_poly(g: &Multigraph) -> Poly1 {
    if g.has_loop() {
        return Poly1::zero();
    }
    let simple = g.simplify();
    let neutral =
        ModularGainGraph::new(g.n(), 1, simple.edges().iter().map(|&(u, v)| (u, v, 0))).expect("edges are in range");
    total_chromatic_poly_with_bound(&neutral, usize::MAX).expect("unbounded").at_z(1)
}

/// Number of regions of the hyperplane arrangement of an integral gain
/// graph: `(-1)^n` times the zero-free polynomial at `-1`.
pub fn regions(g: &IntegralGainGraph) -> Result<BigInt> {
    let value = zero_free_poly(g)?.eval_i64(-1, 0);
    Ok(if g.n().is_multiple_of(2) { value } else { -value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain_graph::SwitchingFunction;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize, i64)]) -> IntegralGainGraph {
        IntegralGainGraph::new(n, edges.iter().map(|&(t, h, g)| (t - 1, h - 1, g))).unwrap()
    }

    fn shi(n: usize) -> IntegralGainGraph {
        let mut e = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                e.push((i, j, 0));
                e.push((i, j, 1));
            }
        }
        graph(n, &e)
    }

    fn catalan(n: usize) -> IntegralGainGraph {
        let mut e = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                e.extend([(i, j, -1), (i, j, 0), (i, j, 1)]);
            }
        }
        graph(n, &e)
    }

    /// Colorings counted with no pruning at all: every map `V -> colors`.
    fn brute_integral(g: &IntegralGainGraph, q: u64) -> BigInt {
        let n = g.n() as u32;
        let mut count = 0u64;
        for code in 0..q.pow(n) {
            let colors: Vec<i64> = (0..n).map(|v| (code / q.pow(v) % q) as i64 + 1).collect();
            if g.edges().iter().all(|e| colors[e.head] != colors[e.tail] + e.gain) {
                count += 1;
            }
        }
        BigInt::from(count)
    }

    #[test]
    fn integral_examples() {
        for q in 0..6u64 {
            for gain in 0..=q as i64 {
                let g = graph(2, &[(1, 2, gain)]);
                assert_eq!(chi_integral(&g, q), BigInt::from(q * (q.saturating_sub(1)) + gain as u64));
            }
        }
        assert_eq!(chi_integral(&shi(2), 3), BigInt::from(4));
        assert_eq!(chi_integral(&catalan(2), 0), BigInt::from(0));
        assert_eq!(chi_integral(&IntegralGainGraph::edgeless(0), 0), BigInt::from(1));
        assert_eq!(chi_integral(&graph(1, &[(1, 1, 0)]), 4), BigInt::from(0));
        assert_eq!(chi_integral(&graph(1, &[(1, 1, 2)]), 4), BigInt::from(4));
    }

    #[test]
    fn enumerated_colorings_match_count() {
        for g in [shi(3), catalan(2), graph(2, &[(1, 2, 2)]), graph(1, &[(1, 1, 0)])] {
            for q in 0..6 {
                let all = integral_colorings(&g, q);
                assert_eq!(BigInt::from(all.len()), chi_integral(&g, q));
                assert!(all.iter().all(|k| k.iter().all(|&c| (1..=q).contains(&c))));
            }
        }
        assert_eq!(integral_colorings(&graph(2, &[(1, 2, 1)]), 2), vec![vec![1, 1], vec![2, 1], vec![2, 2]]);
    }

    #[test]
    fn modular_examples() {
        assert_eq!(chi_modular(&catalan(2), 5), BigInt::from(10));
        assert_eq!(chi_modular(&shi(2), 4), BigInt::from(8));
        assert_eq!(chi_modular(&graph(1, &[(1, 1, 6)]), 3), BigInt::from(0));
        assert_eq!(chi_modular(&graph(1, &[(1, 1, 5)]), 3), BigInt::from(3));
    }

    #[test]
    fn total_examples() {
        assert_eq!(total_chromatic_poly(&catalan(2)).unwrap().to_string(), "q^2 - 3*q + 2*z");
        assert!(total_chromatic_poly(&graph(1, &[(1, 1, 0)])).unwrap().is_zero());
        assert_eq!(total_chromatic_poly(&graph(1, &[(1, 1, 1)])).unwrap().to_string(), "q - z");
        assert_eq!(total_chromatic_poly(&IntegralGainGraph::edgeless(0)).unwrap(), Poly2::one());
    }

    #[test]
    fn edge_bound_is_enforced() {
        let big = catalan(4); // 18 edges
        assert_eq!(total_chromatic_poly_with_bound(&big, 17), Err(Error::TooManyEdges { edges: 18, bound: 17 }));
        assert!(total_chromatic_poly_with_bound(&big, 18).is_ok());
        assert!(matches!(total_chromatic_poly(&catalan(5)), Err(Error::TooManyEdges { edges: 30, .. })));
    }

    #[test]
    fn multizero_examples() {
        let single = ModularGainGraph::new(1, 2, []).unwrap();
        assert_eq!(count_multizero(&single, 1, 1), BigInt::from(3));
        let c2 = catalan(2).reduce_mod(5).unwrap();
        assert_eq!(count_multizero(&c2, 1, 0), BigInt::from(10));
        assert_eq!(count_multizero(&c2, 1, 1), BigInt::from(20));
        assert_eq!(total_chromatic_poly(&c2).unwrap().eval_i64(6, 1), BigInt::from(20));
    }

    #[test]
    fn null_colored_loop_is_improper() {
        let looped = ModularGainGraph::new(1, 3, [(0, 0, 1)]).unwrap();
        // only the three pair colors survive, the gain-1 loop never binds them
        assert_eq!(count_multizero(&looped, 1, 2), BigInt::from(3));
        assert_eq!(total_chromatic_poly(&looped).unwrap().eval_i64(5, 2), BigInt::from(3));
    }

    #[test]
    fn ordinary_examples() {
        let k3 = Multigraph::complete(3);
        let expected = &(&Poly1::q() * &Poly1::q_minus(1)) * &Poly1::q_minus(2);
        assert_eq!(ordinary_chromatic_poly(&k3), expected);
        assert!(ordinary_chromatic_poly(&Multigraph::new(2, vec![(0, 1), (1, 1)]).unwrap()).is_zero());
        let triple = Multigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(ordinary_chromatic_poly(&triple).to_string(), "q^2 - q");
        assert_eq!(ordinary_chromatic_poly(&Multigraph::new(0, vec![]).unwrap()), Poly1::one());
    }

    /// Colorings of a simple graph counted by enumeration.
    fn brute_ordinary(g: &Multigraph, q: u64) -> BigInt {
        let n = g.n() as u32;
        let ok = (0..q.pow(n))
            .filter(|code| {
                let c = |v: usize| code / q.pow(v as u32) % q;
                g.edges().iter().all(|&(u, v)| c(u) != c(v))
            })
            .count();
        BigInt::from(ok)
    }

    #[test]
    fn ordinary_matches_enumeration() {
        let graphs = [
            Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            Multigraph::new(5, vec![(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap(),
            Multigraph::complete(4),
        ];
        for g in &graphs {
            let p = ordinary_chromatic_poly(g);
            for q in 0..5 {
                assert_eq!(p.eval_i64(q, 0), brute_ordinary(g, q as u64));
            }
        }
    }

    #[test]
    fn region_examples() {
        assert_eq!(regions(&shi(2)).unwrap(), BigInt::from(3));
        assert_eq!(regions(&catalan(2)).unwrap(), BigInt::from(4));
        for n in 0..4 {
            assert_eq!(regions(&IntegralGainGraph::edgeless(n)).unwrap(), BigInt::from(1));
        }
    }

    fn arb_graph(max_n: usize, max_e: usize) -> impl Strategy<Value = IntegralGainGraph> {
        (0usize..=max_n).prop_flat_map(move |n| {
            let edges = if n == 0 {
                Just(Vec::new()).boxed()
            } else {
                proptest::collection::vec((0..n, 0..n, -2i64..3), 0..=max_e).boxed()
            };
            edges.prop_map(move |e| IntegralGainGraph::new(n, e).unwrap())
        })
    }

    fn arb_graph_and_eta() -> impl Strategy<Value = (IntegralGainGraph, SwitchingFunction)> {
        arb_graph(4, 6).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), proptest::collection::vec(-4i64..5, n).prop_map(SwitchingFunction))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn state_expansion_matches_subset_expansion(g in arb_graph(5, 9)) {
            prop_assert_eq!(
                total_chromatic_poly(&g).unwrap(),
                total_chromatic_poly_by_subsets(&g, 26).unwrap()
            );
        }

        #[test]
        fn modular_state_expansion_matches_subset_expansion(g in arb_graph(4, 8), m in 1i64..5) {
            let r = g.reduce_mod(m).unwrap();
            prop_assert_eq!(
                total_chromatic_poly(&r).unwrap(),
                total_chromatic_poly_by_subsets(&r, 26).unwrap()
            );
        }

        #[test]
        fn integral_backtracking_matches_enumeration(g in arb_graph(4, 6), q in 0u64..5) {
            prop_assert_eq!(chi_integral(&g, q), brute_integral(&g, q));
        }

        #[test]
        fn modular_count_is_count_of_reduction(g in arb_graph(4, 6), q in 1u64..6) {
            let r = g.reduce_mod(q as i64).unwrap();
            prop_assert_eq!(chi_modular(&g, q), chi_modular(&r, q));
            prop_assert_eq!(chi_modular(&g, q), count_multizero(&r, 1, 0));
        }

        #[test]
        fn multizero_count_is_total_polynomial(g in arb_graph(3, 4), m in 1i64..4, k in 0u64..3, z in 0u64..3) {
            let r = g.reduce_mod(m).unwrap();
            let q = k * m as u64 + z;
            prop_assert_eq!(
                count_multizero(&r, k, z),
                total_chromatic_poly(&r).unwrap().eval_i64(q as i64, z as i64)
            );
        }

        #[test]
        fn neutral_loop_nullity(g in arb_graph(3, 4), q in 1u64..5) {
            prop_assume!(g.n() > 0);
            let looped = IntegralGainGraph::new(
                g.n(),
                g.edges().iter().map(|e| (e.tail, e.head, e.gain)).chain([(0, 0, 0)]),
            ).unwrap();
            prop_assert_eq!(chi_integral(&looped, q), BigInt::from(0));
            prop_assert_eq!(chi_modular(&looped, q), BigInt::from(0));
            prop_assert!(total_chromatic_poly(&looped).unwrap().is_zero());
        }

        #[test]
        fn neutral_deletion_contraction(g in arb_graph(4, 6), q in 1u64..6) {
            let links: Vec<usize> = g.neutral_edges().into_iter().filter(|&i| !g.edges()[i].is_loop()).collect();
            prop_assume!(!links.is_empty());
            let e = links[0];
            let deleted = g.delete_edges(&[e]);
            let contracted = g.contract_neutral_set(&[e]).unwrap();
            prop_assert_eq!(chi_integral(&g, q), chi_integral(&deleted, q) - chi_integral(&contracted, q));
            prop_assert_eq!(chi_modular(&g, q), chi_modular(&deleted, q) - chi_modular(&contracted, q));
            prop_assert_eq!(
                total_chromatic_poly(&g).unwrap(),
                total_chromatic_poly(&deleted).unwrap() - total_chromatic_poly(&contracted).unwrap()
            );
        }

        #[test]
        fn switching_invariance((g, eta) in arb_graph_and_eta(), q in 1u64..6) {
            let s = g.switch(&eta);
            prop_assert_eq!(chi_modular(&g, q), chi_modular(&s, q));
            prop_assert_eq!(total_chromatic_poly(&g).unwrap(), total_chromatic_poly(&s).unwrap());
        }

        #[test]
        fn simplification_and_loop_independence(g in arb_graph(4, 6), q in 0u64..6) {
            let simple = g.simplify();
            let unlooped = g.without_nonneutral_loops();
            prop_assert_eq!(chi_integral(&g, q), chi_integral(&simple, q));
            prop_assert_eq!(chi_integral(&g, q), chi_integral(&unlooped, q));
            if q > 0 {
                prop_assert_eq!(chi_modular(&g, q), chi_modular(&simple, q));
                // a loop stays harmless mod q only while its gain is nonzero mod q
                if g.edges().iter().all(|e| !e.is_loop() || e.gain % q as i64 != 0) {
                    prop_assert_eq!(chi_modular(&g, q), chi_modular(&unlooped, q));
                }
            }
            prop_assert_eq!(total_chromatic_poly(&g).unwrap(), total_chromatic_poly(&simple).unwrap());
            prop_assert_eq!(zero_free_poly(&g).unwrap(), zero_free_poly(&unlooped).unwrap());
        }

        #[test]
        fn total_is_multiplicative(a in arb_graph(3, 4), b in arb_graph(3, 4)) {
            let product = &total_chromatic_poly(&a).unwrap() * &total_chromatic_poly(&b).unwrap();
            prop_assert_eq!(total_chromatic_poly(&a.disjoint_union(&b)).unwrap(), product);
        }

        #[test]
        fn modular_count_is_zero_free_above_threshold(g in arb_graph(4, 6)) {
            let p = zero_free_poly(&g).unwrap();
            let start = g.max_circle_gain().map_or(1, |t| t + 1).max(1);
            for q in start..start + 4 {
                prop_assert_eq!(chi_modular(&g, q as u64), p.eval_i64(q, 0));
            }
        }
    }
}
