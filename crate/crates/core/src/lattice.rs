//! Integral symmetric bilinear forms and their characteristic vectors.
//!
//! An [`IntegralLattice`] is stored as a block-diagonal sum of dense
//! symmetric blocks. Forms built by [`IntegralLattice::from_gram`] are a
//! single block; [`IntegralLattice::direct_sum`] concatenates blocks, so
//! signature and determinant of large sums (the rank-22 Kummer form, long
//! realization plans) are computed block by block. The block structure is
//! an implementation detail: equality and [`IntegralLattice::gram`] see only
//! the assembled matrix.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Global sign applied to a standard form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    fn apply(self, x: i64) -> BigInt {
        match self {
            Polarity::Positive => BigInt::from(x),
            Polarity::Negative => BigInt::from(-x),
        }
    }
}

#[derive(Clone, Debug)]
struct Block {
    dim: usize,
    /// Row-major, `dim * dim` entries.
    entries: Vec<BigInt>,
}

impl Block {
    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    fn negated(&self) -> Block {
        Block {
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    /// Coefficients `c[0..=n]` of `det(xI - A)`, lowest degree first.
    ///
    /// Faddeev-LeVerrier: `M_k = A M_{k-1} + c_{n-k+1} I`,
    /// `c_{n-k} = -tr(A M_k) / k`. Every division is exact over the integers.
    fn charpoly(&self) -> Vec<BigInt> {
        let n = self.dim;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = vec![BigInt::zero(); n * n];
        for k in 1..=n {
            // M <- A*M + c_{n-k+1} I
            let mut next = mat_mul(&self.entries, &m, n);
            for i in 0..n {
                next[i * n + i] += &coeffs[n - k + 1];
            }
            m = next;
            let am = mat_mul(&self.entries, &m, n);
            let trace: BigInt = (0..n).map(|i| &am[i * n + i]).sum();
            let (q, r) = trace.div_rem(&BigInt::from(k));
            assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
            coeffs[n - k] = -q;
        }
        coeffs
    }

    /// Bareiss fraction-free elimination with row pivoting.
    fn determinant(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = num / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        let det = a[n * n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Signature via the characteristic polynomial and Descartes' rule.
    /// Exact because a real symmetric matrix has only real eigenvalues.
    fn signature(&self) -> Result<i64> {
        let p = self.charpoly();
        if p[0].is_zero() {
            return Err(Error::SingularForm);
        }
        let positive = sign_changes(p.iter().map(|c| c.signum()));
        let negative =
            sign_changes(
                p.iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { -c.signum() } else { c.signum() }),
            );
        Ok(positive as i64 - negative as i64)
    }

    fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            let row: BigInt = (0..self.dim).map(|j| self.at(i, j) * &y[j]).sum();
            acc += &x[i] * row;
        }
        acc
    }
}

fn mat_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let bkj = &b[k * n + j];
                if !bkj.is_zero() {
                    out[i * n + j] += aik * bkj;
                }
            }
        }
    }
    out
}

fn sign_changes(signs: impl Iterator<Item = BigInt>) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for s in signs {
        if s.is_zero() {
            continue;
        }
        let positive = s.is_positive();
        if last.is_some_and(|l| l != positive) {
            changes += 1;
        }
        last = Some(positive);
    }
    changes
}

/// A rank-`n` integral symmetric bilinear form, given by its Gram matrix.
#[derive(Clone, Debug)]
pub struct IntegralLattice {
    blocks: Vec<Block>,
    rank: usize,
}

impl IntegralLattice {
    /// Builds a lattice from the rows of a Gram matrix.
    pub fn from_gram<R, T>(rows: R) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        if n == 0 {
            return Ok(Self::empty());
        }
        Ok(IntegralLattice {
            blocks: vec![Block {
                dim: n,
                entries: rows.into_iter().flatten().collect(),
            }],
            rank: n,
        })
    }

    /// The rank-0 lattice, identity for [`direct_sum`](Self::direct_sum).
    pub fn empty() -> Self {
        IntegralLattice {
            blocks: Vec::new(),
            rank: 0,
        }
    }

    /// `<1>` or `<-1>`.
    pub fn one(polarity: Polarity) -> Self {
        Self::single_block(1, vec![polarity.apply(1)])
    }

    /// The hyperbolic plane `[[0, 1], [1, 0]]`.
    pub fn hyperbolic() -> Self {
        Self::single_block(2, [0, 1, 1, 0].into_iter().map(BigInt::from).collect())
    }

    /// The E8 form in the Dynkin-diagram convention: 2 on the diagonal, -1
    /// for adjacent nodes. Nodes 0..=6 form a chain and node 7 hangs off
    /// node 4. `Negative` gives the negative-definite form.
    pub fn e8(polarity: Polarity) -> Self {
        const EDGES: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
        let mut g = [[0i64; 8]; 8];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in EDGES {
            g[a][b] = -1;
            g[b][a] = -1;
        }
        let entries = g.iter().flatten().map(|&x| polarity.apply(x)).collect();
        Self::single_block(8, entries)
    }

    fn single_block(dim: usize, entries: Vec<BigInt>) -> Self {
        IntegralLattice {
            blocks: vec![Block { dim, entries }],
            rank: dim,
        }
    }

    /// Orthogonal direct sum (block-diagonal Gram matrix).
    pub fn direct_sum(&self, other: &IntegralLattice) -> IntegralLattice {
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        IntegralLattice {
            blocks,
            rank: self.rank + other.rank,
        }
    }

    /// Direct sum of a sequence of lattices, in order.
    pub fn direct_sum_all<'a>(parts: impl IntoIterator<Item = &'a IntegralLattice>) -> IntegralLattice {
        let mut out = IntegralLattice::empty();
        for p in parts {
            out.blocks.extend(p.blocks.iter().cloned());
            out.rank += p.rank;
        }
        out
    }

    /// The same group with the form negated (orientation reversal).
    pub fn negated(&self) -> IntegralLattice {
        IntegralLattice {
            blocks: self.blocks.iter().map(Block::negated).collect(),
            rank: self.rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Gram entry `<g_i, g_j>`.
    ///
    /// # Panics
    /// If `i` or `j` is out of range.
    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        assert!(i < self.rank && j < self.rank, "index out of range");
        let mut offset = 0;
        for b in &self.blocks {
            let end = offset + b.dim;
            if (offset..end).contains(&i) {
                return if (offset..end).contains(&j) {
                    b.at(i - offset, j - offset).clone()
                } else {
                    BigInt::zero()
                };
            }
            offset = end;
        }
        unreachable!()
    }

    /// The assembled Gram matrix.
    pub fn gram(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.rank]; self.rank];
        for (offset, b) in self.block_offsets() {
            for i in 0..b.dim {
                for j in 0..b.dim {
                    out[offset + i][offset + j] = b.at(i, j).clone();
                }
            }
        }
        out
    }

    fn block_offsets(&self) -> impl Iterator<Item = (usize, &Block)> {
        self.blocks.iter().scan(0usize, |offset, b| {
            let start = *offset;
            *offset += b.dim;
            Some((start, b))
        })
    }

    /// Characteristic polynomial `det(xI - G)`, coefficients lowest degree first.
    pub fn characteristic_polynomial(&self) -> Vec<BigInt> {
        let mut acc = vec![BigInt::one()];
        for b in &self.blocks {
            let p = b.charpoly();
            let mut prod = vec![BigInt::zero(); acc.len() + p.len() - 1];
            for (i, x) in acc.iter().enumerate() {
                for (j, y) in p.iter().enumerate() {
                    prod[i + j] += x * y;
                }
            }
            acc = prod;
        }
        acc
    }

    /// Number of positive minus number of negative eigenvalues.
    pub fn signature(&self) -> Result<i64> {
        self.blocks.iter().map(Block::signature).sum()
    }

    pub fn determinant(&self) -> BigInt {
        self.blocks.iter().map(Block::determinant).product()
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    /// Even iff every self-pairing `<g_i, g_i>` is even.
    pub fn is_even(&self) -> bool {
        self.blocks.iter().all(|b| (0..b.dim).all(|i| b.at(i, i).is_even()))
    }

    /// `x^T G y`.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self
            .block_offsets()
            .map(|(o, b)| b.pair(&x[o..o + b.dim], &y[o..o + b.dim]))
            .sum())
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found,
            });
        }
        Ok(())
    }

    /// First basis index at which `x` fails `<x, g_i> = <g_i, g_i> (mod 2)`.
    fn first_non_characteristic(&self, x: &[BigInt]) -> Result<Option<usize>> {
        self.check_len(x.len())?;
        for (o, b) in self.block_offsets() {
            for i in 0..b.dim {
                let row: BigInt = (0..b.dim).map(|j| b.at(i, j) * &x[o + j]).sum();
                if row.is_even() != b.at(i, i).is_even() {
                    return Ok(Some(o + i));
                }
            }
        }
        Ok(None)
    }

    /// Whether `x` satisfies `<x, g_i> = <g_i, g_i> (mod 2)` for every basis vector.
    pub fn is_characteristic(&self, x: &[BigInt]) -> Result<bool> {
        Ok(self.first_non_characteristic(x)?.is_none())
    }

    /// Solves `G x = diag(G) (mod 2)`.
    ///
    /// The characteristic vectors are exactly `particular + kernel lifts + 2 Z^n`.
    /// For a unimodular form `G mod 2` is invertible, so the kernel is empty and
    /// the characteristic set is a single coset of `2 Z^n`.
    pub fn characteristic_basis(self: &Arc<Self>) -> Result<CharacteristicBasis> {
        if !self.is_unimodular() {
            return Err(Error::NonUnimodular);
        }
        let mut particular = vec![false; self.rank];
        let mut kernel = Vec::new();
        for (o, b) in self.block_offsets() {
            let (p, k) = solve_mod2(b).ok_or(Error::NonUnimodular)?;
            particular[o..o + b.dim].copy_from_slice(&p);
            for v in k {
                let mut full = vec![false; self.rank];
                full[o..o + b.dim].copy_from_slice(&v);
                kernel.push(full);
            }
        }
        let coords = particular.iter().map(|&bit| BigInt::from(bit as u8)).collect();
        Ok(CharacteristicBasis {
            particular: CharVector::new(Arc::clone(self), coords)?,
            kernel,
        })
    }
}

/// Gaussian elimination over GF(2) on `[G | diag(G)]`. Returns a particular
/// solution and a kernel basis, or `None` if the system is inconsistent.
fn solve_mod2(b: &Block) -> Option<(Vec<bool>, Vec<Vec<bool>>)> {
    let n = b.dim;
    let mut rows: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            let mut r: Vec<bool> = (0..n).map(|j| b.at(i, j).is_odd()).collect();
            r.push(b.at(i, i).is_odd());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..n {
            if i != r && rows[i][c] {
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[n]) {
        return None;
    }
    let mut particular = vec![false; n];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = rows[i][n];
    }
    let kernel = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![false; n];
            v[free] = true;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = rows[i][free];
            }
            v
        })
        .collect();
    Some((particular, kernel))
}

impl PartialEq for IntegralLattice {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.gram() == other.gram()
    }
}

impl Eq for IntegralLattice {}

/// Output of [`IntegralLattice::characteristic_basis`].
#[derive(Clone, Debug)]
pub struct CharacteristicBasis {
    /// Solution with coordinates in `{0, 1}`.
    pub particular: CharVector,
    /// Basis of the mod-2 solution kernel.
    pub kernel: Vec<Vec<bool>>,
}

/// A characteristic vector of a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVector {
    lattice: Arc<IntegralLattice>,
    coords: Vec<BigInt>,
}

impl CharVector {
    pub fn new(lattice: Arc<IntegralLattice>, coords: Vec<BigInt>) -> Result<Self> {
        if let Some(index) = lattice.first_non_characteristic(&coords)? {
            return Err(Error::NotCharacteristic { index });
        }
        Ok(CharVector { lattice, coords })
    }

    pub fn lattice(&self) -> &Arc<IntegralLattice> {
        &self.lattice
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// `e.e = e^T G e`.
    pub fn cup_square(&self) -> BigInt {
        self.lattice
            .pairing(&self.coords, &self.coords)
            .expect("length checked at construction")
    }

    pub(crate) fn from_parts_unchecked(lattice: Arc<IntegralLattice>, coords: Vec<BigInt>) -> Self {
        debug_assert!(lattice.is_characteristic(&coords).unwrap_or(false));
        CharVector { lattice, coords }
    }
}
