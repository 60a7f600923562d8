//! Realization procedures: prescribing the Hopf invariant or signature of a
//! Seifert surface, solving the compression system, and searching Euler
//! classes on a given unimodular form.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{CharVector, IntegralLattice, Polarity};
use crate::surface::SeifertSurfaceModel;

/// Solution `(A, B)` of
///
/// ```text
/// -(A - B) / 8 = Omega
/// (3A + B) / 2 = omega
/// ```
///
/// `A` is the signature and `B = e.e = -H` of a Seifert surface whose
/// compressed boundary projects to an immersion with Smale invariant `omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressionData {
    pub a: BigInt,
    pub b: BigInt,
}

impl CompressionData {
    /// `-(A - B) / 8`, or `None` if not an integer.
    pub fn haefliger(&self) -> Option<BigInt> {
        let (q, r) = (&self.b - &self.a).div_rem(&BigInt::from(8));
        r.is_zero().then_some(q)
    }

    /// `(3A + B) / 2`, or `None` if not an integer.
    pub fn smale(&self) -> Option<BigInt> {
        let total: BigInt = &self.a * 3 + &self.b;
        let (q, r) = total.div_rem(&BigInt::from(2));
        r.is_zero().then_some(q)
    }
}

/// `result = base ♮ P^p_count ♮ Q^q_count`, materialized.
#[derive(Clone, Debug)]
pub struct RealizationPlan {
    pub base: SeifertSurfaceModel,
    pub p_count: usize,
    pub q_count: usize,
    pub result: SeifertSurfaceModel,
}

impl RealizationPlan {
    fn new(base: &SeifertSurfaceModel, p_count: usize, q_count: usize) -> Self {
        let plus = IntegralLattice::one(Polarity::Positive);
        let minus = IntegralLattice::one(Polarity::Negative);
        let form = IntegralLattice::direct_sum_all(
            core::iter::once(base.form())
                .chain(core::iter::repeat_n(&plus, p_count))
                .chain(core::iter::repeat_n(&minus, q_count)),
        );
        let mut euler = base.euler().coords().to_vec();
        euler.extend(core::iter::repeat_n(BigInt::from(1), p_count + q_count));
        let mut label = base.label().into();
        if p_count > 0 {
            label = format!("{label}♮P^{p_count}");
        }
        if q_count > 0 {
            label = format!("{label}♮Q^{q_count}");
        }
        let result =
            SeifertSurfaceModel::from_char_vector(CharVector::from_parts_unchecked(Arc::new(form), euler), label);
        RealizationPlan {
            base: base.clone(),
            p_count,
            q_count,
            result,
        }
    }
}

fn count(x: BigInt) -> Result<usize> {
    x.to_usize().ok_or(Error::PlanTooLarge)
}

/// A Seifert surface for the same knot with Hopf invariant `target`.
///
/// Each `Q` summand raises `H` by one and each `P` summand lowers it by one;
/// neither changes the boundary knot.
pub fn realize_hopf(base: &SeifertSurfaceModel, target: &BigInt) -> Result<RealizationPlan> {
    let diff = target - base.hopf_invariant();
    let (p, q) = if diff.is_positive() {
        (0, count(diff)?)
    } else {
        (count(-diff)?, 0)
    };
    Ok(RealizationPlan::new(base, p, q))
}

/// A Seifert surface for the same knot with signature `target`.
///
/// Each `P` summand raises the signature by one and each `Q` lowers it by one.
pub fn realize_signature(base: &SeifertSurfaceModel, target: &BigInt) -> Result<RealizationPlan> {
    let diff = target - BigInt::from(base.signature());
    let (p, q) = if diff.is_positive() {
        (count(diff)?, 0)
    } else {
        (0, count(-diff)?)
    };
    Ok(RealizationPlan::new(base, p, q))
}

/// Solves for `(A, B)` given the Haefliger invariant and a target Smale
/// invariant. Solvable in integers exactly when `smale` is even.
pub fn solve_compression(omega: &BigInt, smale: &BigInt) -> Result<CompressionData> {
    if smale.is_odd() {
        return Err(Error::OddSmaleInvariant);
    }
    let a = (smale - omega * 4) / 2;
    let b = &a + omega * 8;
    Ok(CompressionData { a, b })
}

/// A Seifert surface with `sigma = A`, `H = -B`, bounding a knot with
/// Haefliger invariant `omega` and whose compressed projection has Smale
/// invariant `smale`.
///
/// Starts from `s2xs2(omega, 1)`, then adjusts the signature and the Hopf
/// invariant by `P`/`Q` summands.
pub fn realize_compression(omega: &BigInt, smale: &BigInt) -> Result<SeifertSurfaceModel> {
    let data = solve_compression(omega, smale)?;
    let base = SeifertSurfaceModel::s2xs2(omega.clone(), 1);
    let step = realize_signature(&base, &data.a)?;
    let plan = realize_hopf(&step.result, &-data.b)?;
    Ok(plan.result)
}

/// Searches for a characteristic vector `e` on `form` with
/// `-(sigma - e.e) / 8 = omega`, i.e. `e.e = sigma + 8 omega`, among vectors
/// with sup-norm at most `bound`.
///
/// Candidates are ordered by sup-norm, then lexicographically with each
/// coordinate ranked `0, 1, -1, 2, -2, ...`; the first match is returned.
/// `Ok(None)` means the bounded search found nothing.
pub fn realize_form(form: &IntegralLattice, omega: &BigInt, bound: u32) -> Result<Option<CharVector>> {
    let form = Arc::new(form.clone());
    let basis = form.characteristic_basis()?;
    debug_assert!(basis.kernel.is_empty(), "unimodular forms have a trivial mod-2 kernel");
    let sigma = form.signature()?;
    let target: BigInt = BigInt::from(sigma) + omega * 8;

    let n = form.rank();
    if n > 1 << 12 || bound > 1 << 16 {
        return Err(Error::SearchSpaceTooLarge);
    }
    let gram = form.gram();
    let mut g = Vec::with_capacity(n * n);
    for x in gram.iter().flatten() {
        g.push(x.to_i32().ok_or(Error::SearchSpaceTooLarge)? as i128);
    }
    // |e^T G e| <= n^2 * max|G| * bound^2 < 2^87, so any target outside
    // i128 is unreachable.
    let Some(target) = target.to_i128() else {
        return Ok(None);
    };
    let parity: Vec<bool> = basis.particular.coords().iter().map(|c| c.is_odd()).collect();

    for sup in 0..=bound as i128 {
        let domains: Vec<Vec<i128>> = parity
            .iter()
            .map(|&odd| {
                let mut d: Vec<i128> = (-sup..=sup).filter(|v| (v.rem_euclid(2) == 1) == odd).collect();
                d.sort_by_key(|&v| (v.abs(), v < 0));
                d
            })
            .collect();
        if domains.iter().any(Vec::is_empty) {
            continue;
        }
        let mut search = BoxSearch::new(n, &g, domains, target);
        if search.run() {
            let coords = search.x.into_iter().map(BigInt::from).collect();
            return Ok(Some(CharVector::from_parts_unchecked(form, coords)));
        }
    }
    Ok(None)
}

/// Depth-first search over a box in lexicographic order, pruned by interval
/// bounds on the remaining quadratic form.
struct BoxSearch<'a> {
    n: usize,
    g: &'a [i128],
    domains: Vec<Vec<i128>>,
    /// `cross[k] = sum over k <= j < l of 2 |G_jl| s_j s_l`.
    cross: Vec<i128>,
    target: i128,
    x: Vec<i128>,
    /// `lin[j] = sum over fixed i of G_ij x_i`.
    lin: Vec<i128>,
}

impl<'a> BoxSearch<'a> {
    fn new(n: usize, g: &'a [i128], domains: Vec<Vec<i128>>, target: i128) -> Self {
        let reach: Vec<i128> = domains
            .iter()
            .map(|d| d.iter().map(|v| v.abs()).max().unwrap_or(0))
            .collect();
        let mut cross = vec![0i128; n + 1];
        for k in (0..n).rev() {
            let row: i128 = (k + 1..n).map(|l| 2 * g[k * n + l].abs() * reach[k] * reach[l]).sum();
            cross[k] = cross[k + 1] + row;
        }
        BoxSearch {
            n,
            g,
            domains,
            cross,
            target,
            x: vec![0; n],
            lin: vec![0; n],
        }
    }

    fn run(&mut self) -> bool {
        self.descend(0, 0)
    }

    fn descend(&mut self, k: usize, value: i128) -> bool {
        let n = self.n;
        if k == n {
            return value == self.target;
        }
        let (mut lo, mut hi) = (value - self.cross[k], value + self.cross[k]);
        for j in k..n {
            let (a, l) = (self.g[j * n + j], self.lin[j]);
            let terms = self.domains[j].iter().map(|&v| a * v * v + 2 * l * v);
            lo += terms.clone().min().unwrap_or(0);
            hi += terms.max().unwrap_or(0);
        }
        if self.target < lo || self.target > hi {
            return false;
        }
        for vi in 0..self.domains[k].len() {
            let v = self.domains[k][vi];
            let next = value + self.g[k * n + k] * v * v + 2 * self.lin[k] * v;
            self.x[k] = v;
            for j in 0..n {
                self.lin[j] += self.g[k * n + j] * v;
            }
            if self.descend(k + 1, next) {
                return true;
            }
            for j in 0..n {
                self.lin[j] -= self.g[k * n + j] * v;
            }
        }
        false
    }
}
