//! Brute-force verifiers, independent of the fast paths in [`crate::lattice`].
//!
//! These ship with the library so derived values can be re-checked by
//! anyone: exhaustive enumeration of small symmetric matrices, a signature
//! computed by rational congruence diagonalization, and a box scan for
//! characteristic vectors.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::IntegralLattice;

/// Largest rank accepted by [`enumerate_lattices`].
pub const MAX_ENUM_RANK: usize = 4;
/// Largest entry bound accepted by [`enumerate_lattices`].
pub const MAX_ENUM_ENTRY: u32 = 2;
/// Largest number of candidates [`characteristic_exhaustive`] will scan.
pub const MAX_BOX_SIZE: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub rank: usize,
    pub entry_bound: u32,
    pub unimodular_only: bool,
}

/// Every symmetric matrix of the given rank with entries in
/// `[-entry_bound, entry_bound]`, optionally filtered to `|det| = 1`.
///
/// The upper triangle is read row-major and advanced like an odometer with
/// the last entry fastest, so the order is lexicographic and reproducible.
pub fn enumerate_lattices(spec: EnumerationSpec) -> Result<LatticeEnumeration> {
    if spec.rank > MAX_ENUM_RANK || spec.entry_bound > MAX_ENUM_ENTRY {
        return Err(Error::SearchSpaceTooLarge);
    }
    let slots = spec.rank * (spec.rank + 1) / 2;
    let lo = -(spec.entry_bound as i64);
    Ok(LatticeEnumeration {
        spec,
        upper: vec![lo; slots],
        done: false,
    })
}

#[derive(Clone, Debug)]
pub struct LatticeEnumeration {
    spec: EnumerationSpec,
    upper: Vec<i64>,
    done: bool,
}

impl LatticeEnumeration {
    fn current(&self) -> IntegralLattice {
        let n = self.spec.rank;
        let mut g = vec![vec![0i64; n]; n];
        let mut slot = 0;
        for i in 0..n {
            for j in i..n {
                g[i][j] = self.upper[slot];
                g[j][i] = self.upper[slot];
                slot += 1;
            }
        }
        IntegralLattice::from_gram(g).expect("symmetric by construction")
    }

    fn advance(&mut self) {
        let b = self.spec.entry_bound as i64;
        for x in self.upper.iter_mut().rev() {
            if *x < b {
                *x += 1;
                return;
            }
            *x = -b;
        }
        self.done = true;
    }
}

impl Iterator for LatticeEnumeration {
    type Item = IntegralLattice;

    fn next(&mut self) -> Option<IntegralLattice> {
        while !self.done {
            let lattice = self.current();
            self.advance();
            if !self.spec.unimodular_only || lattice.is_unimodular() {
                return Some(lattice);
            }
        }
        None
    }
}

/// Signature by symmetric Gaussian elimination over `Q`.
///
/// A nonzero diagonal entry is used as a 1x1 pivot. When the remaining
/// diagonal is all zero but some off-diagonal `b` is not, the 2x2 block
/// `[[0, b], [b, 0]]` is a pivot of signature zero.
pub fn signature_by_diagonalization(lattice: &IntegralLattice) -> Result<i64> {
    let mut a: Vec<Vec<BigRational>> = lattice
        .gram()
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mut sig = 0i64;
    while !a.is_empty() {
        let n = a.len();
        if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
            if a[p][p].is_positive() {
                sig += 1;
            } else {
                sig -= 1;
            }
            a = schur_1x1(&a, p);
        } else if let Some((p, q)) = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        {
            a = schur_2x2(&a, p, q);
        } else {
            return Err(Error::SingularForm);
        }
    }
    Ok(sig)
}

fn schur_1x1(a: &[Vec<BigRational>], p: usize) -> Vec<Vec<BigRational>> {
    let keep: Vec<usize> = (0..a.len()).filter(|&i| i != p).collect();
    let inv = BigRational::one() / &a[p][p];
    keep.iter()
        .map(|&i| keep.iter().map(|&j| &a[i][j] - &a[i][p] * &a[p][j] * &inv).collect())
        .collect()
}

/// Schur complement of the block on rows/columns `{p, q}` where both
/// diagonal entries vanish: the block inverse is `[[0, 1/b], [1/b, 0]]`.
fn schur_2x2(a: &[Vec<BigRational>], p: usize, q: usize) -> Vec<Vec<BigRational>> {
    let keep: Vec<usize> = (0..a.len()).filter(|&i| i != p && i != q).collect();
    let inv = BigRational::one() / &a[p][q];
    keep.iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| {
                    let correction = (&a[i][p] * &a[q][j] + &a[i][q] * &a[p][j]) * &inv;
                    &a[i][j] - correction
                })
                .collect()
        })
        .collect()
}

/// Every vector in `[-bound, bound]^rank` that is characteristic for
/// `lattice`, in lexicographic order (first coordinate slowest).
pub fn characteristic_exhaustive(lattice: &IntegralLattice, bound: u32) -> Result<Vec<Vec<BigInt>>> {
    let n = lattice.rank();
    let side = 2 * bound as u64 + 1;
    let size = u32::try_from(n)
        .ok()
        .and_then(|n| side.checked_pow(n))
        .filter(|&s| s <= MAX_BOX_SIZE)
        .ok_or(Error::SearchSpaceTooLarge)?;
    let lo = -(bound as i64);
    let mut x = vec![lo; n];
    let mut out = Vec::new();
    for _ in 0..size {
        let v: Vec<BigInt> = x.iter().copied().map(BigInt::from).collect();
        if lattice.is_characteristic(&v)? {
            out.push(v);
        }
        for c in x.iter_mut().rev() {
            if *c < bound as i64 {
                *c += 1;
                break;
            }
            *c = lo;
        }
    }
    Ok(out)
}
