#![allow(dead_code)]

use rand::Rng;
use seifert_core::{BigInt, IntegralLattice, Polarity};

pub fn lat(rows: &[Vec<i64>]) -> IntegralLattice {
    IntegralLattice::from_gram(rows.iter().map(|r| r.iter().copied())).unwrap()
}

pub fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().copied().map(BigInt::from).collect()
}

pub fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).unwrap()
}

/// A random direct sum of `<1>`, `<-1>`, `H`, `E8(+)`, `E8(-)` of rank in `1..=max_rank`.
pub fn random_block_sum(rng: &mut impl Rng, max_rank: usize) -> IntegralLattice {
    let target = rng.gen_range(1..=max_rank);
    let mut out = IntegralLattice::empty();
    while out.rank() < target {
        let room = target - out.rank();
        let block = match rng.gen_range(0..5) {
            0 => IntegralLattice::one(Polarity::Positive),
            1 => IntegralLattice::one(Polarity::Negative),
            2 if room >= 2 => IntegralLattice::hyperbolic(),
            3 if room >= 8 => IntegralLattice::e8(Polarity::Positive),
            4 if room >= 8 => IntegralLattice::e8(Polarity::Negative),
            _ => continue,
        };
        out = out.direct_sum(&block);
    }
    out
}

/// `U^T G U` for a random unimodular `U` built from a few elementary
/// row operations with multipliers in `{-1, 1}`. Keeps the lattice's
/// isometry class while destroying its block structure.
pub fn random_conjugate(rng: &mut impl Rng, lattice: &IntegralLattice, steps: usize) -> IntegralLattice {
    let n = lattice.rank();
    let mut g: Vec<Vec<i64>> = lattice.gram().iter().map(|r| r.iter().map(to_i64).collect()).collect();
    if n < 2 {
        return lattice.clone();
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        // basis change b_i <- b_i + c b_j
        for k in 0..n {
            g[i][k] += c * g[j][k];
        }
        for k in 0..n {
            g[k][i] += c * g[k][j];
        }
    }
    lat(&g)
}

/// Float signature from nalgebra's symmetric eigendecomposition.
///
/// For unimodular `G` every eigenvalue has magnitude at least
/// `1 / ||G||^(n-1)`. Returns `None` if that guard is not comfortably above
/// the rounding error, since then the float signs prove nothing.
pub fn float_signature(lattice: &IntegralLattice) -> Option<i64> {
    let n = lattice.rank();
    let g = lattice.gram();
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| to_i64(&g[i][j]) as f64);
    let norm = m.norm().max(1.0);
    let guard = 1.0 / norm.powi(n as i32 - 1);
    if guard < 1e-9 * norm {
        return None;
    }
    let eig = nalgebra::SymmetricEigen::new(m);
    let mut sig = 0;
    for &l in eig.eigenvalues.iter() {
        assert!(
            l.abs() >= guard * 0.5,
            "eigenvalue {l} inside the unimodular gap {guard}"
        );
        sig += if l > 0.0 { 1 } else { -1 };
    }
    Some(sig)
}
