//! The Catalan, hollow Catalan, Shi, Linial and in-between gain graphs, with
//! closed forms for their chromatic functions.
//!
//! Every family has gains on the links `i -> j`, `i < j`:
//!
//! | family          | gains                                   |
//! |-----------------|-----------------------------------------|
//! | Catalan `C_n`   | `-1, 0, 1`                              |
//! | hollow `C'_n`   | `-1, 1`                                 |
//! | Shi `S_n`       | `0, 1`                                  |
//! | Linial `L_n`    | `1`                                     |
//! | `SC(G)`         | `0, 1`, plus `-1` on the edges of `G`   |
//!
//! `SC(π)` is `SC(G)` on one vertex per block of `π`, where `G` joins blocks
//! whose spans `[min, max]` overlap.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chromatic::regions;
use crate::combinatorics::{
    binomial, cycle_count, descending_path_partitions, lower_degrees, overlap_graph, set_partitions, stirling2,
    SetPartition, SimpleGraph,
};
use crate::error::{Error, Result};
use crate::gain_graph::IntegralGainGraph;
use crate::poly::{falling_factorial_of, Poly1};

/// Which family member to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Catalan(usize),
    HollowCatalan(usize),
    Shi(usize),
    Linial(usize),
    /// Shi graph plus `-1` edges on the edges of the given graph.
    ScGraph(SimpleGraph),
    /// `SC` of the overlap graph of the partition's blocks.
    ScPartition(SetPartition),
}

impl FamilySpec {
    /// Number of vertices of the built graph.
    pub fn order(&self) -> usize {
        match self {
            Self::Catalan(n) | Self::HollowCatalan(n) | Self::Shi(n) | Self::Linial(n) => *n,
            Self::ScGraph(g) => g.n(),
            Self::ScPartition(p) => p.len(),
        }
    }
}

/// The four families defined for every order by gains on all pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Catalan,
    HollowCatalan,
    Shi,
    Linial,
}

impl FamilyKind {
    pub const ALL: [Self; 4] = [Self::Catalan, Self::HollowCatalan, Self::Shi, Self::Linial];

    pub fn name(self) -> &'static str {
        match self {
            Self::Catalan => "catalan",
            Self::HollowCatalan => "hollow-catalan",
            Self::Shi => "shi",
            Self::Linial => "linial",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn spec(self, n: usize) -> FamilySpec {
        match self {
            Self::Catalan => FamilySpec::Catalan(n),
            Self::HollowCatalan => FamilySpec::HollowCatalan(n),
            Self::Shi => FamilySpec::Shi(n),
            Self::Linial => FamilySpec::Linial(n),
        }
    }

    /// The member of order `n`; order 0 gives the empty graph.
    pub fn graph(self, n: usize) -> IntegralGainGraph {
        build(&self.spec(n))
    }

    pub fn closed_forms(self, n: usize) -> Result<ClosedForms> {
        match self {
            Self::Catalan => catalan_closed_forms(n),
            Self::HollowCatalan => hollow_catalan_closed_forms(n),
            Self::Shi => shi_closed_forms(n),
            Self::Linial => linial_closed_forms(n),
        }
    }
}

fn on_pairs(n: usize, gains: &[i64]) -> IntegralGainGraph {
    let edges = (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| gains.iter().map(move |&g| (i, j, g))));
    IntegralGainGraph::new(n, edges).expect("vertices are in range")
}

pub fn catalan(n: usize) -> IntegralGainGraph {
    on_pairs(n, &[-1, 0, 1])
}

pub fn hollow_catalan(n: usize) -> IntegralGainGraph {
    on_pairs(n, &[-1, 1])
}

pub fn shi(n: usize) -> IntegralGainGraph {
    on_pairs(n, &[0, 1])
}

pub fn linial(n: usize) -> IntegralGainGraph {
    on_pairs(n, &[1])
}

pub fn sc_graph(g: &SimpleGraph) -> IntegralGainGraph {
    let n = g.n();
    let shi_edges = (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| [(i, j, 0), (i, j, 1)]));
    let minus = g.edges().map(|(i, j)| (i, j, -1));
    IntegralGainGraph::new(n, shi_edges.chain(minus)).expect("vertices are in range")
}

pub fn sc_partition(p: &SetPartition) -> IntegralGainGraph {
    sc_graph(&overlap_graph(p).graph)
}

pub fn build(spec: &FamilySpec) -> IntegralGainGraph {
    match spec {
        FamilySpec::Catalan(n) => catalan(*n),
        FamilySpec::HollowCatalan(n) => hollow_catalan(*n),
        FamilySpec::Shi(n) => shi(*n),
        FamilySpec::Linial(n) => linial(*n),
        FamilySpec::ScGraph(g) => sc_graph(g),
        FamilySpec::ScPartition(p) => sc_partition(p),
    }
}

/// Closed forms for the integral and modular chromatic functions and the
/// zero-free chromatic polynomial. Each counting form is exact for
/// `q >= *_from`; below that it is only a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub integral: Poly1,
    pub modular: Poly1,
    pub zero_free: Poly1,
    pub integral_from: u64,
    pub modular_from: u64,
}

impl ClosedForms {
    /// Whether the closed form for a counting function is known to be
    /// exact at `q`.
    pub fn integral_valid(&self, q: u64) -> bool {
        q >= self.integral_from
    }

    pub fn modular_valid(&self, q: u64) -> bool {
        q >= self.modular_from
    }
}

fn q_minus(c: i64) -> Poly1 {
    Poly1::q_minus(c)
}

fn falling(c: i64, m: usize) -> Poly1 {
    falling_factorial_of(&q_minus(c), m as u32)
}

fn nonzero(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("family order must be at least 1, got {}", n)));
    }
    Ok(())
}

pub fn shi_closed_forms(n: usize) -> Result<ClosedForms> {
    nonzero(n)?;
    let n_ = n as i64;
    let zero_free = &Poly1::q() * &q_minus(n_).pow(n as u32 - 1);
    Ok(ClosedForms {
        integral: q_minus(n_ - 1).pow(n as u32),
        modular: zero_free.clone(),
        zero_free,
        integral_from: n as u64 - 1,
        modular_from: n as u64 + 1,
    })
}

pub fn catalan_closed_forms(n: usize) -> Result<ClosedForms> {
    nonzero(n)?;
    let n_ = n as i64;
    let zero_free = &Poly1::q() * &falling(n_ + 1, n - 1);
    Ok(ClosedForms {
        integral: falling(n_ - 1, n),
        modular: zero_free.clone(),
        zero_free,
        integral_from: n as u64 - 1,
        modular_from: n as u64 + 1,
    })
}

pub fn hollow_catalan_closed_forms(n: usize) -> Result<ClosedForms> {
    nonzero(n)?;
    let mut integral = Poly1::zero();
    let mut inner = Poly1::zero();
    for j in 1..=n {
        let s = Poly1::constant(stirling2(n as u32, j as u32));
        integral += &s * &falling(j as i64 - 1, j);
        inner += &s * &falling(j as i64 + 1, j - 1);
    }
    let zero_free = &Poly1::q() * &inner;
    Ok(ClosedForms {
        integral,
        modular: zero_free.clone(),
        zero_free,
        integral_from: n as u64 - 1,
        modular_from: n as u64 + 1,
    })
}

/// Closed forms of `SC(G)` from the descending-path partitions of the
/// complement of `G`.
pub fn sc_path_closed_forms(g: &SimpleGraph) -> Result<ClosedForms> {
    let n = g.n();
    nonzero(n)?;
    let p = descending_path_partitions(&g.complement());
    let n_ = n as i64;
    let mut integral = Poly1::zero();
    let mut inner = Poly1::zero();
    for (r, count) in p.iter().enumerate().skip(1) {
        let c = Poly1::constant(count.clone());
        integral += &c * &falling(n_ - 1, r);
        inner += &c * &falling(n_ + 1, r - 1);
    }
    let zero_free = &Poly1::q() * &inner;
    Ok(ClosedForms {
        integral,
        modular: zero_free.clone(),
        zero_free,
        integral_from: n as u64 - 1,
        modular_from: n as u64 + 1,
    })
}

/// Closed forms of `SC(π)` as products over the lower-degree sequence of the
/// blocks' overlap graph.
pub fn sc_partition_closed_forms(p: &SetPartition) -> Result<ClosedForms> {
    let k = p.len();
    nonzero(k)?;
    let d = lower_degrees(p);
    let k_ = k as i64;
    let integral = d.0.iter().fold(Poly1::one(), |acc, &di| &acc * &q_minus(k_ - 1 + di as i64));
    let zero_free = d.0[1..].iter().fold(Poly1::q(), |acc, &di| &acc * &q_minus(k_ + di as i64));
    Ok(ClosedForms {
        integral,
        modular: zero_free.clone(),
        zero_free,
        integral_from: (k - 1 + d.max_degree()) as u64,
        modular_from: (k + d.max_degree()) as u64,
    })
}

/// Closed forms of `L_n`, summed over all set partitions of `[n]`.
pub fn linial_closed_forms(n: usize) -> Result<ClosedForms> {
    nonzero(n)?;
    let mut integral = Poly1::zero();
    let mut zero_free = Poly1::zero();
    for p in set_partitions(n) {
        let f = sc_partition_closed_forms(&p)?;
        integral += f.integral;
        zero_free += f.zero_free;
    }
    Ok(ClosedForms {
        integral,
        modular: zero_free.clone(),
        zero_free,
        integral_from: n as u64 - 1,
        modular_from: n as u64,
    })
}

/// Dense polynomial in `q` with rational coefficients, lowest degree first.
#[derive(Clone, Debug)]
struct RationalPoly(Vec<BigRational>);

impl RationalPoly {
    fn constant(c: BigRational) -> Self {
        Self(vec![c])
    }

    /// `(q - c) / 2`
    fn half_q_minus(c: i64) -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Self(vec![-BigRational::from_integer(BigInt::from(c)) * &half, half])
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self(out)
    }

    fn add(&mut self, other: &Self) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigRational::zero());
        }
        for (i, b) in other.0.iter().enumerate() {
            self.0[i] += b;
        }
    }

    fn into_integral(self) -> Result<Poly1> {
        let mut terms = Vec::new();
        for (d, c) in self.0.into_iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::NonIntegerResult);
            }
            terms.push((d as u32, 0, c.to_integer()));
        }
        Ok(Poly1::from_terms(terms))
    }
}

/// The zero-free polynomial of `L_n` from the binomial-sum formula
/// `(q/2) sum_j binom(n, j) ((q - j)/2)^(n-1)`, evaluated with exact
/// rationals. Used as an independent check of [`linial_closed_forms`].
pub fn linial_athanasiadis(n: usize) -> Result<Poly1> {
    nonzero(n)?;
    let mut sum = RationalPoly::constant(BigRational::zero());
    for j in 0..=n {
        let base = RationalPoly::half_q_minus(j as i64);
        let mut power = RationalPoly::constant(BigRational::one());
        for _ in 0..n - 1 {
            power = power.mul(&base);
        }
        let c = RationalPoly::constant(BigRational::from_integer(binomial(n as u32, j as u32)));
        sum.add(&c.mul(&power));
    }
    sum.mul(&RationalPoly::half_q_minus(0)).into_integral()
}

/// Region counts of the Catalan arrangement computed two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanRegions {
    /// Regions of `C_n` from its own zero-free polynomial.
    pub direct: BigInt,
    /// `sum_j c(n, j) r'_j` with unsigned Stirling numbers of the first kind.
    pub by_recurrence: BigInt,
    /// `r'_j` for `j = 1..=n`: regions of the hollow Catalan arrangements.
    pub hollow: Vec<BigInt>,
}

pub fn catalan_regions(n: usize) -> Result<CatalanRegions> {
    nonzero(n)?;
    let hollow = (1..=n).map(|j| regions(&hollow_catalan(j))).collect::<Result<Vec<_>>>()?;
    let by_recurrence =
        (1..=n).map(|j| cycle_count(n as u32, j as u32) * &hollow[j - 1]).fold(BigInt::zero(), |a, b| a + b);
    let direct = regions(&catalan(n))?;
    Ok(CatalanRegions { direct, by_recurrence, hollow })
}
