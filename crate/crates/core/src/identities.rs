//! Verification of the reduction identities for chromatic functions.
//!
//! Each check evaluates both sides of an identity with one chromatic
//! function: a coloring count at a finite list of `q` values, or the zero-free
//! or total polynomial compared coefficientwise. Sample lists default to
//! `0..=2n+3`, more points than the degree of any polynomial involved, so
//! equality at the samples implies equality of polynomials.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chromatic::{
    chi_integral, chi_modular, count_multizero, ordinary_chromatic_poly, total_chromatic_poly_with_bound,
};
use crate::combinatorics::{
    closed_sets, components, mobius_flats, mobius_flats_by_lattice, mobius_partition, set_partitions,
    stable_partitions, stirling1_signed, stirling2, Multigraph,
};
use crate::error::{Error, Result};
use crate::families::{catalan, hollow_catalan, linial, sc_partition, FamilyKind};
use crate::gain_graph::{Edge, IntegralGainGraph, SwitchingFunction};
use crate::poly::{falling_factorial, falling_factorial_of, substitute_shift, Poly1, Poly2};

/// Edge bound used by the checks when they need a chromatic polynomial.
pub const CHECK_EDGE_BOUND: usize = 40;

/// Which chromatic function evaluates the two sides of an identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    /// Colorings with colors `1..=q`.
    Integral,
    /// Colorings with colors in `Z_q`; samples with `q = 0` are skipped.
    Modular,
    /// The zero-free chromatic polynomial.
    ZeroFreePoly,
    /// The total chromatic polynomial in `q` and `z`.
    TotalPoly,
}

impl Selector {
    pub const ALL: [Self; 4] = [Self::Integral, Self::Modular, Self::ZeroFreePoly, Self::TotalPoly];

    pub fn name(self) -> &'static str {
        match self {
            Self::Integral => "integral",
            Self::Modular => "modular",
            Self::ZeroFreePoly => "zero-free",
            Self::TotalPoly => "total",
        }
    }

    pub fn is_counting(self) -> bool {
        matches!(self, Self::Integral | Self::Modular)
    }
}

/// One side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    /// `(q, value)` pairs.
    Samples(Vec<(u64, BigInt)>),
    Poly(Poly2),
}

impl Value {
    fn zero_like(&self) -> Self {
        match self {
            Self::Samples(s) => Self::Samples(s.iter().map(|(q, _)| (*q, BigInt::zero())).collect()),
            Self::Poly(_) => Self::Poly(Poly2::zero()),
        }
    }

    fn add_scaled(&mut self, c: &BigInt, other: &Self) {
        match (self, other) {
            (Self::Samples(a), Self::Samples(b)) => {
                for ((qa, va), (qb, vb)) in a.iter_mut().zip(b) {
                    debug_assert_eq!(qa, qb);
                    *va += c * vb;
                }
            }
            (Self::Poly(a), Self::Poly(b)) => *a += &(b * c),
            _ => panic!("cannot combine samples with a polynomial"),
        }
    }

    /// Where two values differ, if anywhere.
    fn first_difference(&self, other: &Self) -> Option<String> {
        match (self, other) {
            (Self::Samples(a), Self::Samples(b)) => {
                a.iter().zip(b).find(|(x, y)| x != y).map(|((q, _), _)| format!("q={}", q))
            }
            (Self::Poly(a), Self::Poly(b)) => {
                let diff = a - b;
                diff.terms().first().map(|&(dq, dz, _)| format!("coefficient of q^{} z^{}", dq, dz))
            }
            _ => Some("incomparable values".to_string()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Samples(s) => {
                for (i, (q, v)) in s.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{}:{}", q, v)?;
                }
                Ok(())
            }
            Self::Poly(p) => write!(f, "{}", p),
        }
    }
}

/// Outcome of checking one identity on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: String,
    pub instance: String,
    pub lhs: Value,
    pub rhs: Value,
    pub pass: bool,
    /// A sample or coefficient where the sides differ.
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn compare(identity: &str, instance: String, lhs: Value, rhs: Value) -> Self {
        let witness = lhs.first_difference(&rhs);
        Self { identity: identity.to_string(), instance, pass: witness.is_none(), lhs, rhs, witness }
    }
}

/// A chromatic function together with its sample points and edge bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluator {
    pub selector: Selector,
    pub samples: Vec<u64>,
    pub edge_bound: usize,
}

impl Evaluator {
    pub fn new(selector: Selector, samples: Vec<u64>) -> Self {
        let samples = match selector {
            Selector::Modular => samples.into_iter().filter(|&q| q >= 1).collect(),
            _ => samples,
        };
        Self { selector, samples, edge_bound: CHECK_EDGE_BOUND }
    }

    /// Samples `0..=2n+3`.
    pub fn for_order(selector: Selector, n: usize) -> Self {
        Self::new(selector, default_samples(n))
    }

    pub fn with_edge_bound(mut self, bound: usize) -> Self {
        self.edge_bound = bound;
        self
    }

    pub fn eval(&self, g: &IntegralGainGraph) -> Result<Value> {
        Ok(match self.selector {
            Selector::Integral => Value::Samples(self.samples.iter().map(|&q| (q, chi_integral(g, q))).collect()),
            Selector::Modular => Value::Samples(self.samples.iter().map(|&q| (q, chi_modular(g, q))).collect()),
            Selector::ZeroFreePoly => Value::Poly(total_chromatic_poly_with_bound(g, self.edge_bound)?.at_z(0)),
            Selector::TotalPoly => Value::Poly(total_chromatic_poly_with_bound(g, self.edge_bound)?),
        })
    }

    fn zero(&self) -> Value {
        match self.selector {
            Selector::Integral | Selector::Modular => {
                Value::Samples(self.samples.iter().map(|&q| (q, BigInt::zero())).collect())
            }
            _ => Value::Poly(Poly2::zero()),
        }
    }

    /// `sum c_i F(g_i)`.
    pub fn combination<'a>(&self, terms: impl IntoIterator<Item = (BigInt, &'a IntegralGainGraph)>) -> Result<Value> {
        let mut total = self.zero();
        for (c, g) in terms {
            if !c.is_zero() {
                total.add_scaled(&c, &self.eval(g)?);
            }
        }
        Ok(total)
    }

    fn label(&self) -> &'static str {
        self.selector.name()
    }
}

pub fn default_samples(n: usize) -> Vec<u64> {
    (0..=2 * n as u64 + 3).collect()
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn instance(g: &IntegralGainGraph, f: &Evaluator) -> String {
    format!("{} ({})", g, f.label())
}

/// Both chromatic-polynomial expansions of an ordinary multigraph: the
/// signed subset sum `sum_S (-1)^|S| q^c(S)` and the stable-partition sum
/// `sum_pi (q)_|pi|`, each compared with [`ordinary_chromatic_poly`].
pub fn check_graph_expansions(g: &Multigraph) -> Vec<CheckReport> {
    let m = g.edges().len();
    assert!(m < 32, "subset expansion needs fewer than 32 edges");
    let direct = ordinary_chromatic_poly(g);
    let mut whitney = Poly1::zero();
    for mask in 0u32..(1 << m) {
        let chosen = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| g.edges()[i]);
        let labels = components(g.n(), chosen);
        let c = (0..g.n()).filter(|&v| labels[v] == v).count() as u32;
        whitney += Poly1::monomial(sign(mask.count_ones() as usize), c, 0);
    }
    let simple = g.simplify();
    let stable = stable_partitions(&simple).map(|p| falling_factorial(p.len() as u32)).sum();
    let name = format!("n={} edges={:?}", g.n(), g.edges());
    vec![
        CheckReport::compare("graph-subset-expansion", name.clone(), Value::Poly(direct.clone()), Value::Poly(whitney)),
        CheckReport::compare("graph-stable-partition-expansion", name, Value::Poly(direct), Value::Poly(stable)),
    ]
}

/// Indices of `s` after the edges in `deleted` are removed.
fn reindex(s: &[usize], deleted: &[usize]) -> Vec<usize> {
    s.iter().map(|&i| i - deleted.iter().filter(|&&d| d < i).count()).collect()
}

/// `(g / S) \ E_0`: delete the neutral edges outside `s`, contract `s`.
fn neutral_minor(g: &IntegralGainGraph, neutral: &[usize], s: &[usize]) -> IntegralGainGraph {
    let keep: BTreeSet<usize> = s.iter().copied().collect();
    let deleted: Vec<usize> = neutral.iter().copied().filter(|i| !keep.contains(i)).collect();
    let h = g.delete_edges(&deleted);
    h.contract_neutral_set(&reindex(s, &deleted)).expect("contracted edges are neutral")
}

/// Expansion over subsets of the neutral edges:
/// `F(g) = sum_{S ⊆ E_0} (-1)^|S| F((g/S) \ E_0)`, the same sum grouped by
/// flats of the neutral subgraph and weighted by the Möbius function, and the
/// agreement of that Möbius function with the signed count of subsets
/// spanning each flat.
pub fn check_neutral_subset_expansion(g: &IntegralGainGraph, f: &Evaluator) -> Result<Vec<CheckReport>> {
    let neutral = g.neutral_edges();
    assert!(neutral.len() < 32, "too many neutral edges for subset expansion");
    let lhs = f.eval(g)?;
    let mut minors = Vec::new();
    for mask in 0u32..(1 << neutral.len()) {
        let s: Vec<usize> = (0..neutral.len()).filter(|i| mask >> i & 1 == 1).map(|i| neutral[i]).collect();
        minors.push((sign(s.len()), neutral_minor(g, &neutral, &s)));
    }
    let alternating = f.combination(minors.iter().map(|(c, h)| (c.clone(), h)))?;

    let gamma0 = g.neutral_subgraph();
    let mut weighted = Vec::new();
    let mut agreement = Vec::new();
    for flat in closed_sets(&gamma0) {
        let by_lattice = mobius_flats_by_lattice(&gamma0, &[], &flat);
        agreement.push((mobius_flats(&gamma0, &[], &flat), by_lattice.clone()));
        let s: Vec<usize> = flat.iter().map(|&i| neutral[i]).collect();
        weighted.push((by_lattice, neutral_minor(g, &neutral, &s)));
    }
    let mobius = f.combination(weighted.iter().map(|(c, h)| (c.clone(), h)))?;
    let (subset_mu, lattice_mu): (Vec<_>, Vec<_>) = agreement.into_iter().unzip();
    let name = instance(g, f);
    Ok(vec![
        CheckReport::compare("neutral-subset-expansion", name.clone(), lhs.clone(), alternating),
        CheckReport::compare("neutral-flat-expansion", name.clone(), lhs, mobius),
        CheckReport::compare(
            "flat-mobius-agreement",
            name,
            Value::Samples(subset_mu.into_iter().enumerate().map(|(i, v)| (i as u64, v)).collect()),
            Value::Samples(lattice_mu.into_iter().enumerate().map(|(i, v)| (i as u64, v)).collect()),
        ),
    ])
}

/// Expansion over stable partitions of the neutral subgraph:
/// `F(g) = sum_pi F((g/pi) ∪ neutral K_pi)`.
pub fn check_stable_partition_expansion(g: &IntegralGainGraph, f: &Evaluator) -> Result<Vec<CheckReport>> {
    let lhs = f.eval(g)?;
    let gamma0 = g.neutral_subgraph();
    let terms: Vec<IntegralGainGraph> = stable_partitions(&gamma0)
        .map(|p| g.contract_partition(&p).map(|h| h.add_neutral_complete()))
        .collect::<Result<_>>()?;
    let rhs = f.combination(terms.iter().map(|h| (BigInt::one(), h)))?;
    Ok(vec![CheckReport::compare("stable-partition-expansion", instance(g, f), lhs, rhs)])
}

/// For a graph with no neutral edge, both expansions over all partitions:
/// `F(g ∪ neutral K_n) = sum_pi mu(0, pi) F(g/pi)` and
/// `F(g) = sum_pi F((g/pi) ∪ neutral K_pi)`.
pub fn check_complete_expansions(g: &IntegralGainGraph, f: &Evaluator) -> Result<Vec<CheckReport>> {
    if !g.neutral_edges().is_empty() {
        return Err(Error::NeutralEdgePresent);
    }
    let mut weighted = Vec::new();
    let mut completed = Vec::new();
    for p in set_partitions(g.n()) {
        let h = g.contract_partition(&p)?;
        completed.push(h.add_neutral_complete());
        weighted.push((mobius_partition(&p), h));
    }
    let name = instance(g, f);
    let lhs_mobius = f.eval(&g.add_neutral_complete())?;
    let rhs_mobius = f.combination(weighted.iter().map(|(c, h)| (c.clone(), h)))?;
    let lhs_sum = f.eval(g)?;
    let rhs_sum = f.combination(completed.iter().map(|h| (BigInt::one(), h)))?;
    Ok(vec![
        CheckReport::compare("complete-mobius-expansion", name.clone(), lhs_mobius, rhs_mobius),
        CheckReport::compare("complete-partition-expansion", name, lhs_sum, rhs_sum),
    ])
}

/// The evaluator restricted to samples where removing loops of gain `±1`
/// leaves the value unchanged: a modular count needs `q >= 2`, since modulo 1
/// such loops are neutral.
fn loop_independent(f: &Evaluator) -> Evaluator {
    let mut f = f.clone();
    if f.selector == Selector::Modular {
        f.samples.retain(|&q| q >= 2);
    }
    f
}

/// `F(C'_n) = sum_j S(n,j) F(C_j)` and `F(C_n) = sum_j s(n,j) F(C'_j)`.
///
/// Both rest on discarding gain-`±1` loops, so modular samples start at 2.
pub fn check_catalan_relations(n: usize, f: &Evaluator) -> Result<Vec<CheckReport>> {
    let f = &loop_independent(f);
    let full: Vec<IntegralGainGraph> = (1..=n).map(catalan).collect();
    let hollow: Vec<IntegralGainGraph> = (1..=n).map(hollow_catalan).collect();
    let (n32, name) = (n as u32, format!("n={} ({})", n, f.label()));
    let lhs_hollow = f.eval(&hollow_catalan(n))?;
    let rhs_hollow = f.combination((1..=n).map(|j| (stirling2(n32, j as u32), &full[j - 1])))?;
    let lhs_full = f.eval(&catalan(n))?;
    let rhs_full = f.combination((1..=n).map(|j| (stirling1_signed(n32, j as u32), &hollow[j - 1])))?;
    Ok(vec![
        CheckReport::compare("hollow-catalan-from-catalan", name.clone(), lhs_hollow, rhs_hollow),
        CheckReport::compare("catalan-from-hollow-catalan", name, lhs_full, rhs_full),
    ])
}

/// `F(L_n) = sum_pi F(SC(pi))` over all partitions of `[n]`; modular samples
/// start at 2 as in [`check_catalan_relations`].
pub fn check_linial_expansion(n: usize, f: &Evaluator) -> Result<Vec<CheckReport>> {
    let f = &loop_independent(f);
    let lhs = f.eval(&linial(n))?;
    let parts: Vec<IntegralGainGraph> = set_partitions(n).map(|p| sc_partition(&p)).collect();
    let rhs = f.combination(parts.iter().map(|h| (BigInt::one(), h)))?;
    Ok(vec![CheckReport::compare("linial-expansion", format!("n={} ({})", n, f.label()), lhs, rhs)])
}

fn zero_free_shifted(g: &IntegralGainGraph, bound: usize) -> Result<Poly2> {
    let p = total_chromatic_poly_with_bound(g, bound)?.at_z(0);
    Ok(substitute_shift(&p, &(&Poly2::q() - &Poly2::z())))
}

fn vertex_subsets(n: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    assert!(n < 32, "too many vertices for subset expansion");
    (0u32..(1 << n)).map(move |mask| (0..n).partition(|v| mask >> v & 1 == 1))
}

/// The total polynomial as a sum over vertex sets `W`: the ordinary chromatic
/// polynomial of the underlying graph off `W`, in `z`, times the zero-free
/// polynomial of the graph on `W`, at `q - z`.
pub fn check_total_expansion(g: &IntegralGainGraph, bound: usize) -> Result<Vec<CheckReport>> {
    let lhs = total_chromatic_poly_with_bound(g, bound)?;
    let underlying = g.underlying();
    let mut rhs = Poly2::zero();
    for (w, rest) in vertex_subsets(g.n()) {
        let outside = ordinary_chromatic_poly(&underlying.induced(&rest)).in_z();
        rhs += &outside * &zero_free_shifted(&g.induced(&w), bound)?;
    }
    Ok(vec![CheckReport::compare("total-expansion", g.to_string(), Value::Poly(lhs), Value::Poly(rhs))])
}

/// For a family member of order `n`, the total polynomial against
/// `sum_j binom(n,j) (z)_(n-j) F*_j(q - z)` using the members of every order
/// `j`, and against `sum_W (z)_(n-|W|) F*(g|W)(q - z)` using induced
/// subgraphs.
pub fn check_total_uniform(kind: FamilyKind, n: usize, bound: usize) -> Result<Vec<CheckReport>> {
    let g = kind.graph(n);
    let lhs = total_chromatic_poly_with_bound(&g, bound)?;
    let z = Poly2::z();
    let mut uniform = Poly2::zero();
    for j in 0..=n {
        let c = Poly2::constant(crate::combinatorics::binomial(n as u32, j as u32));
        let term = &(&c * &falling_factorial_of(&z, (n - j) as u32)) * &zero_free_shifted(&kind.graph(j), bound)?;
        uniform += term;
    }
    let mut complete = Poly2::zero();
    for (w, _) in vertex_subsets(n) {
        let term = &falling_factorial_of(&z, (n - w.len()) as u32) * &zero_free_shifted(&g.induced(&w), bound)?;
        complete += term;
    }
    let name = format!("{} n={}", kind.name(), n);
    Ok(vec![
        CheckReport::compare("total-uniform", name.clone(), Value::Poly(lhs.clone()), Value::Poly(uniform)),
        CheckReport::compare("total-complete", name, Value::Poly(lhs), Value::Poly(complete)),
    ])
}

/// Modular count equals the zero-free polynomial for
/// `max_circle_gain < q <= max_circle_gain + 4` (or `1..=5` without circles).
pub fn check_modular_threshold(g: &IntegralGainGraph, bound: usize) -> Result<Vec<CheckReport>> {
    let start = g.max_circle_gain().map_or(1, |m| m + 1).max(1) as u64;
    let f = Evaluator::new(Selector::Modular, (start..start + 5).collect());
    let lhs = f.eval(g)?;
    let p = total_chromatic_poly_with_bound(g, bound)?.at_z(0);
    let rhs = Value::Samples(f.samples.iter().map(|&q| (q, p.eval_i64(q as i64, 0))).collect());
    Ok(vec![CheckReport::compare("modular-threshold", g.to_string(), lhs, rhs)])
}

/// Values of the modular count and the zero-free polynomial at
/// `q = max_circle_gain`; recorded for inspection, not compared.
pub fn modular_boundary_values(g: &IntegralGainGraph, bound: usize) -> Result<Option<(u64, BigInt, BigInt)>> {
    match g.max_circle_gain() {
        Some(m) if m >= 1 => {
            let q = m as u64;
            let p = total_chromatic_poly_with_bound(g, bound)?.at_z(0);
            Ok(Some((q, chi_modular(g, q), p.eval_i64(m, 0))))
        }
        _ => Ok(None),
    }
}

/// Multi-zero colorings of the reduction mod `m` against the total
/// polynomial at `(k m + z, z)`, for every `k` and `z` given.
pub fn check_multizero(
    g: &IntegralGainGraph,
    m: i64,
    ks: &[u64],
    zs: &[u64],
    bound: usize,
) -> Result<Vec<CheckReport>> {
    let r = g.reduce_mod(m)?;
    let p = total_chromatic_poly_with_bound(&r, bound)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for &k in ks {
        for &z in zs {
            let q = k * m as u64 + z;
            let index = lhs.len() as u64;
            lhs.push((index, count_multizero(&r, k, z)));
            rhs.push((index, p.eval_i64(q as i64, z as i64)));
        }
    }
    Ok(vec![CheckReport::compare(
        "multizero-count",
        format!("{} mod {} k={:?} z={:?}", g, m, ks, zs),
        Value::Samples(lhs),
        Value::Samples(rhs),
    )])
}

/// Every gain graph on at most three vertices with at most four distinct
/// edges, links `i -> j` (`i < j`) with gain in `{-1, 0, 1}` and loops with
/// gain `0` or `1`, one representative per isomorphism class.
pub fn fixture_corpus() -> Vec<IntegralGainGraph> {
    let mut out = Vec::new();
    for n in 0..=3usize {
        let mut kinds = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                kinds.extend([0, 1, -1].map(|g| Edge::new(i, j, g)));
            }
            kinds.extend([0, 1].map(|g| Edge::new(i, i, g)));
        }
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for size in 0..=4usize.min(kinds.len()) {
            for chosen in combinations(kinds.len(), size) {
                let edges: Vec<Edge> = chosen.iter().map(|&i| kinds[i]).collect();
                let key =
                    perms.iter().map(|p| relabelled(n, &edges, p)).min().expect("at least the identity permutation");
                if seen.insert(key) {
                    out.push(
                        IntegralGainGraph::new(n, edges.iter().map(|e| (e.tail, e.head, e.gain))).expect("in range"),
                    );
                }
            }
        }
    }
    out
}

fn relabelled(n: usize, edges: &[Edge], p: &[usize]) -> Vec<Edge> {
    let g = IntegralGainGraph::new(n, edges.iter().map(|e| (p[e.tail], p[e.head], e.gain))).expect("in range");
    g.edges().to_vec()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Random switchings tried per graph by the invariance suite.
pub const SWITCHINGS_PER_GRAPH: usize = 100;
/// Random disjoint unions tried by the invariance suite.
pub const RANDOM_UNIONS: usize = 50;

fn random_switching(rng: &mut ChaCha8Rng, n: usize) -> SwitchingFunction {
    SwitchingFunction((0..n).map(|_| rng.gen_range(-3..=3)).collect())
}

fn doubled(g: &IntegralGainGraph) -> IntegralGainGraph {
    let edges = g.edges().iter().flat_map(|e| [*e, *e]).map(|e| (e.tail, e.head, e.gain));
    IntegralGainGraph::new(g.n(), edges).expect("same vertices")
}

/// Structural invariants of the chromatic functions over a corpus:
/// switching invariance of the modular count and both polynomials, a
/// witness that the integral count is not switching invariant, neutral-loop
/// nullity, invariance under simplification and under removal of nonneutral
/// loops, deletion-contraction of neutral links, multiplicativity of the
/// total polynomial, the modular threshold and multi-zero counting.
pub fn run_invariance_suite(corpus: &[IntegralGainGraph], seed: u64) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    let mut integral_witness: Option<CheckReport> = None;
    for g in corpus {
        let n = g.n();
        let integral = Evaluator::for_order(Selector::Integral, n);
        let modular = Evaluator::for_order(Selector::Modular, n);
        let zero_free = Evaluator::for_order(Selector::ZeroFreePoly, n);
        let total = Evaluator::for_order(Selector::TotalPoly, n);
        let invariant = [&modular, &zero_free, &total];
        let base: Vec<Value> = invariant.iter().map(|f| f.eval(g)).collect::<Result<_>>()?;
        let base_integral = integral.eval(g)?;
        let mut failures: Vec<Option<CheckReport>> = vec![None; invariant.len()];
        for _ in 0..SWITCHINGS_PER_GRAPH {
            let eta = random_switching(&mut rng, n);
            let switched = g.switch(&eta);
            for (i, f) in invariant.iter().enumerate() {
                let value = f.eval(&switched)?;
                if failures[i].is_none() && value != base[i] {
                    let name = format!("{} switched by {:?} ({})", g, eta.0, f.label());
                    failures[i] = Some(CheckReport::compare("switching-invariance", name, base[i].clone(), value));
                }
            }
            if integral_witness.is_none() {
                let value = integral.eval(&switched)?;
                if value != base_integral {
                    let name = format!("{} switched by {:?} (integral)", g, eta.0);
                    let mut report =
                        CheckReport::compare("integral-switching-witness", name, base_integral.clone(), value);
                    // the witness is the difference itself
                    report.pass = true;
                    integral_witness = Some(report);
                }
            }
        }
        for (i, failure) in failures.into_iter().enumerate() {
            reports.push(failure.unwrap_or_else(|| {
                let name = format!("{} under {} switchings ({})", g, SWITCHINGS_PER_GRAPH, invariant[i].label());
                CheckReport::compare("switching-invariance", name, base[i].clone(), base[i].clone())
            }));
        }

        if g.has_neutral_loop() {
            for f in [&integral, &modular, &total] {
                let value = f.eval(g)?;
                reports.push(CheckReport::compare("neutral-loop-nullity", instance(g, f), value.zero_like(), value));
            }
        }

        let twice = doubled(g);
        let unlooped = g.without_nonneutral_loops();
        let loop_safe: Vec<u64> = modular
            .samples
            .iter()
            .copied()
            .filter(|&q| g.edges().iter().all(|e| !e.is_loop() || e.gain % q as i64 != 0))
            .collect();
        let modular_loop_safe = Evaluator::new(Selector::Modular, loop_safe);
        for f in [&integral, &modular, &total] {
            reports.push(CheckReport::compare(
                "simplification-invariance",
                instance(g, f),
                f.eval(g)?,
                f.eval(&twice)?,
            ));
            reports.push(CheckReport::compare(
                "simplification",
                instance(g, f),
                f.eval(g)?,
                f.eval(&twice.simplify())?,
            ));
        }
        for f in [&integral, &modular_loop_safe, &zero_free] {
            reports.push(CheckReport::compare("loop-independence", instance(g, f), f.eval(g)?, f.eval(&unlooped)?));
        }

        for e in g.neutral_edges().into_iter().filter(|&i| !g.edges()[i].is_loop()) {
            let deleted = g.delete_edges(&[e]);
            let contracted = g.contract_neutral_set(&[e])?;
            for f in [&integral, &modular, &total] {
                let rhs = f.combination([(BigInt::one(), &deleted), (-BigInt::one(), &contracted)])?;
                reports.push(CheckReport::compare("neutral-deletion-contraction", instance(g, f), f.eval(g)?, rhs));
            }
        }

        reports.extend(check_modular_threshold(g, total.edge_bound)?);
        for m in [2, 3, 5] {
            reports.extend(check_multizero(g, m, &[0, 1, 2], &[0, 1, 2], total.edge_bound)?);
        }
    }

    reports.push(integral_witness.unwrap_or_else(|| CheckReport {
        identity: "integral-switching-witness".to_string(),
        instance: "no pair with different integral counts in the corpus".to_string(),
        lhs: Value::Samples(Vec::new()),
        rhs: Value::Samples(Vec::new()),
        pass: false,
        witness: None,
    }));

    if !corpus.is_empty() {
        for _ in 0..RANDOM_UNIONS {
            let a = &corpus[rng.gen_range(0..corpus.len())];
            let b = &corpus[rng.gen_range(0..corpus.len())];
            let union = a.disjoint_union(b);
            let lhs = total_chromatic_poly_with_bound(&union, CHECK_EDGE_BOUND)?;
            let rhs = &total_chromatic_poly_with_bound(a, CHECK_EDGE_BOUND)?
                * &total_chromatic_poly_with_bound(b, CHECK_EDGE_BOUND)?;
            reports.push(CheckReport::compare(
                "total-multiplicativity",
                union.to_string(),
                Value::Poly(lhs),
                Value::Poly(rhs),
            ));
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::shi;

    fn graph(n: usize, edges: &[(usize, usize, i64)]) -> IntegralGainGraph {
        IntegralGainGraph::new(n, edges.iter().map(|&(t, h, g)| (t - 1, h - 1, g))).unwrap()
    }

    fn all_pass(reports: &[CheckReport]) {
        for r in reports {
            assert!(r.pass, "{} failed on {}: {} vs {} at {:?}", r.identity, r.instance, r.lhs, r.rhs, r.witness);
        }
    }

    #[test]
    fn graph_expansion_examples() {
        let k3 = check_graph_expansions(&Multigraph::complete(3));
        all_pass(&k3);
        assert_eq!(k3[0].lhs.to_string(), "q^3 - 3*q^2 + 2*q");
        let path = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let r = check_graph_expansions(&path);
        all_pass(&r);
        assert_eq!(r[1].rhs.to_string(), "q^3 - 2*q^2 + q");
        let looped = check_graph_expansions(&Multigraph::new(2, vec![(0, 1), (1, 1)]).unwrap());
        all_pass(&looped);
        assert_eq!(looped[0].lhs, Value::Poly(Poly2::zero()));
    }

    #[test]
    fn neutral_subset_examples() {
        let f = Evaluator::new(Selector::Integral, vec![5]);
        let r = check_neutral_subset_expansion(&shi(2), &f).unwrap();
        all_pass(&r);
        // S_2 = L_2 minus a vertex carrying a gain-1 loop: 21 - 5 = 16
        assert_eq!(r[0].lhs, Value::Samples(vec![(5, BigInt::from(16))]));
        let no_neutral = graph(2, &[(1, 2, 1)]);
        all_pass(&check_neutral_subset_expansion(&no_neutral, &f).unwrap());
        let zf = Evaluator::for_order(Selector::ZeroFreePoly, 3);
        all_pass(&check_neutral_subset_expansion(&catalan(3), &zf).unwrap());
    }

    #[test]
    fn stable_partition_examples() {
        let modular = Evaluator::new(Selector::Modular, vec![5]);
        all_pass(&check_stable_partition_expansion(&shi(2), &modular).unwrap());
        let total = Evaluator::for_order(Selector::TotalPoly, 3);
        all_pass(&check_stable_partition_expansion(&catalan(3), &total).unwrap());
        for n in 1..=3 {
            let f = Evaluator::for_order(Selector::Integral, n);
            all_pass(&check_stable_partition_expansion(&linial(n), &f).unwrap());
        }
    }

    #[test]
    fn complete_expansion_examples() {
        let f = Evaluator::new(Selector::Integral, vec![4, 5, 6]);
        all_pass(&check_complete_expansions(&hollow_catalan(2), &f).unwrap());
        all_pass(&check_complete_expansions(&linial(3), &f).unwrap());
        for n in 0..=4 {
            let zf = Evaluator::for_order(Selector::ZeroFreePoly, n);
            all_pass(&check_complete_expansions(&IntegralGainGraph::edgeless(n), &zf).unwrap());
        }
        assert_eq!(check_complete_expansions(&shi(2), &f), Err(Error::NeutralEdgePresent));
    }

    #[test]
    fn catalan_relation_examples() {
        let f = Evaluator::new(Selector::Integral, vec![3]);
        let r = check_catalan_relations(2, &f).unwrap();
        all_pass(&r);
        assert_eq!(r[0].lhs, Value::Samples(vec![(3, BigInt::from(5))]));
        for n in 1..=3 {
            for selector in [Selector::Integral, Selector::Modular, Selector::ZeroFreePoly] {
                all_pass(&check_catalan_relations(n, &Evaluator::for_order(selector, n)).unwrap());
            }
        }
    }

    #[test]
    fn linial_expansion_examples() {
        let f = Evaluator::new(Selector::Integral, vec![3]);
        let r = check_linial_expansion(2, &f).unwrap();
        all_pass(&r);
        assert_eq!(r[0].lhs, Value::Samples(vec![(3, BigInt::from(7))]));
        all_pass(&check_linial_expansion(3, &Evaluator::for_order(Selector::ZeroFreePoly, 3)).unwrap());
        all_pass(&check_linial_expansion(1, &Evaluator::for_order(Selector::TotalPoly, 1)).unwrap());
    }

    #[test]
    fn total_expansion_examples() {
        let r = check_total_expansion(&catalan(2), CHECK_EDGE_BOUND).unwrap();
        all_pass(&r);
        assert_eq!(r[0].lhs.to_string(), "q^2 - 3*q + 2*z");
        all_pass(&check_total_expansion(&IntegralGainGraph::edgeless(1), CHECK_EDGE_BOUND).unwrap());
        all_pass(&check_total_expansion(&shi(2), CHECK_EDGE_BOUND).unwrap());
        all_pass(&check_total_expansion(&graph(2, &[(1, 1, 1), (1, 2, 2)]), CHECK_EDGE_BOUND).unwrap());
    }

    #[test]
    fn total_uniform_examples() {
        for kind in FamilyKind::ALL {
            for n in 1..=3 {
                all_pass(&check_total_uniform(kind, n, CHECK_EDGE_BOUND).unwrap());
            }
        }
    }

    #[test]
    fn corpus_shape() {
        let corpus = fixture_corpus();
        assert!((200..1000).contains(&corpus.len()), "{}", corpus.len());
        assert!(corpus.iter().all(|g| g.n() <= 3 && g.num_edges() <= 4));
        let distinct: BTreeSet<String> = corpus.iter().map(|g| g.to_string()).collect();
        assert_eq!(distinct.len(), corpus.len());
        assert!(corpus.contains(&graph(2, &[(1, 2, 1)])));
        assert!(corpus.contains(&graph(2, &[(1, 2, 0)])));
    }

    #[test]
    fn corpus_counts_by_order() {
        // n = 0: the empty graph; n = 1: subsets of two loop types.
        let corpus = fixture_corpus();
        assert_eq!(corpus.iter().filter(|g| g.n() == 0).count(), 1);
        assert_eq!(corpus.iter().filter(|g| g.n() == 1).count(), 4);
        // n = 2: 7 edge kinds; swapping the vertices negates link gains and
        // swaps the two vertices' loops. Orbits on kinds: {-1,1}, {0} and two
        // loop pairs. Burnside over the 2-element group, sizes <= 4.
        let fixed_by_swap = 1 + 1 + 3 + 3 + 3;
        let all: usize = (0..=4).map(|k| binomial_usize(7, k)).sum();
        assert_eq!(corpus.iter().filter(|g| g.n() == 2).count(), (all + fixed_by_swap) / 2);
    }

    fn binomial_usize(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn invariance_suite_on_small_sample() {
        let corpus: Vec<IntegralGainGraph> = fixture_corpus().into_iter().filter(|g| g.n() <= 2).collect();
        let reports = run_invariance_suite(&corpus, 7).unwrap();
        all_pass(&reports);
        assert!(reports.iter().any(|r| r.identity == "integral-switching-witness"));
    }

    #[test]
    fn failing_identity_is_reported() {
        let r = CheckReport::compare(
            "demo",
            "x".to_string(),
            Value::Samples(vec![(1, BigInt::from(2)), (2, BigInt::from(3))]),
            Value::Samples(vec![(1, BigInt::from(2)), (2, BigInt::from(4))]),
        );
        assert!(!r.pass);
        assert_eq!(r.witness.as_deref(), Some("q=2"));
        let p = CheckReport::compare("demo", "x".to_string(), Value::Poly(Poly2::q()), Value::Poly(Poly2::z()));
        assert_eq!(p.witness.as_deref(), Some("coefficient of q^1 z^0"));
    }
}
