//! Seifert surface models and the invariants of their boundary knots.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{CharVector, IntegralLattice, Polarity};

/// The algebraic shadow of an embedding of a punctured closed 4-manifold in
/// `S^6`: its intersection form and the normal Euler class.
///
/// The form is unimodular and the Euler class is characteristic; together
/// these make the Haefliger invariant an integer.
#[derive(Clone, Debug)]
pub struct SeifertSurfaceModel {
    euler: CharVector,
    label: String,
}

impl SeifertSurfaceModel {
    /// Validates and builds a model.
    pub fn new(form: IntegralLattice, euler: Vec<BigInt>, label: impl Into<String>) -> Result<Self> {
        if !form.is_unimodular() {
            return Err(Error::NonUnimodular);
        }
        let euler = CharVector::new(Arc::new(form), euler)?;
        Ok(SeifertSurfaceModel {
            euler,
            label: label.into(),
        })
    }

    pub(crate) fn from_char_vector(euler: CharVector, label: String) -> Self {
        debug_assert!(euler.lattice().is_unimodular());
        SeifertSurfaceModel { euler, label }
    }

    pub fn form(&self) -> &IntegralLattice {
        self.euler.lattice()
    }

    pub fn euler(&self) -> &CharVector {
        &self.euler
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.form().rank()
    }

    /// Signature of the intersection form.
    pub fn signature(&self) -> i64 {
        self.form().signature().expect("unimodular forms are nonsingular")
    }

    pub fn cup_square(&self) -> BigInt {
        self.euler.cup_square()
    }

    /// Hopf invariant along the boundary: `H = -e.e`.
    pub fn hopf_invariant(&self) -> BigInt {
        -self.cup_square()
    }

    /// Haefliger invariant of the boundary knot: `-(sigma + H) / 8`.
    ///
    /// # Panics
    /// If `sigma + H` is not divisible by 8. By van der Blij's congruence
    /// this cannot happen for a characteristic Euler class on a unimodular
    /// form, so a panic here is an internal congruence violation.
    pub fn haefliger_invariant(&self) -> BigInt {
        let total = BigInt::from(self.signature()) + self.hopf_invariant();
        let (q, r) = total.div_rem(&BigInt::from(8));
        assert!(
            r.is_zero(),
            "InternalCongruenceViolation: sigma + H = {total} is not divisible by 8"
        );
        -q
    }

    /// Boundary connected sum: forms add, Euler classes concatenate.
    pub fn boundary_connected_sum(&self, other: &SeifertSurfaceModel) -> SeifertSurfaceModel {
        let form = self.form().direct_sum(other.form());
        let coords = self
            .euler
            .coords()
            .iter()
            .chain(other.euler.coords())
            .cloned()
            .collect();
        SeifertSurfaceModel::from_char_vector(
            CharVector::from_parts_unchecked(Arc::new(form), coords),
            format!("{}♮{}", self.label, other.label),
        )
    }

    /// The same surface with reversed orientation: the form is negated and
    /// the Euler class kept, so `sigma`, `e.e` and `Omega` all change sign.
    pub fn reversed(&self) -> SeifertSurfaceModel {
        let form = self.form().negated();
        SeifertSurfaceModel::from_char_vector(
            CharVector::from_parts_unchecked(Arc::new(form), self.euler.coords().to_vec()),
            format!("-({})", self.label),
        )
    }

    /// The rank-0 surface (a 4-disk), identity for boundary connected sum.
    pub fn disk() -> SeifertSurfaceModel {
        SeifertSurfaceModel::from_char_vector(
            CharVector::from_parts_unchecked(Arc::new(IntegralLattice::empty()), Vec::new()),
            String::from("D4"),
        )
    }

    /// Punctured `S^2 x S^2` with Euler class `(2a, 2b)`; bounds `Omega = ab`.
    pub fn s2xs2(a: impl Into<BigInt>, b: impl Into<BigInt>) -> SeifertSurfaceModel {
        let (a, b) = (a.into(), b.into());
        let label = format!("s2xs2({a},{b})");
        Self::new(IntegralLattice::hyperbolic(), vec![a * 2, b * 2], label).expect("(2a, 2b) is characteristic on H")
    }

    /// Punctured `CP^2` with Euler class `2k+1`; bounds `Omega = k(k+1)/2`.
    pub fn cp2(k: impl Into<BigInt>) -> SeifertSurfaceModel {
        let k = k.into();
        let label = format!("cp2({k})");
        Self::new(IntegralLattice::one(Polarity::Positive), vec![k * 2 + 1], label)
            .expect("odd classes are characteristic on <1>")
    }

    /// Punctured `CP^2` with reversed orientation and Euler class `2k+1`;
    /// bounds `Omega = -k(k+1)/2`.
    pub fn cp2bar(k: impl Into<BigInt>) -> SeifertSurfaceModel {
        let k = k.into();
        let label = format!("cp2bar({k})");
        Self::new(IntegralLattice::one(Polarity::Negative), vec![k * 2 + 1], label)
            .expect("odd classes are characteristic on <-1>")
    }

    /// Punctured Kummer surface, form `E8(-) + E8(-) + 3H`, Euler class zero
    /// except `(2a, 2b)` on the last hyperbolic block; bounds `Omega = 2 + ab`.
    pub fn kummer(a: impl Into<BigInt>, b: impl Into<BigInt>) -> SeifertSurfaceModel {
        let (a, b) = (a.into(), b.into());
        let label = format!("kummer({a},{b})");
        let e8 = IntegralLattice::e8(Polarity::Negative);
        let h = IntegralLattice::hyperbolic();
        let form = e8.direct_sum(&e8).direct_sum(&h).direct_sum(&h).direct_sum(&h);
        let mut euler = vec![BigInt::zero(); 20];
        euler.push(a * 2);
        euler.push(b * 2);
        Self::new(form, euler, label).expect("even vectors are characteristic on an even form")
    }

    /// The block `P`: `CP^2` with Euler class 1 (`sigma = 1`, `H = -1`),
    /// bounding the trivial knot.
    pub fn p_block() -> SeifertSurfaceModel {
        let mut s = Self::cp2(0);
        s.label = String::from("P");
        s
    }

    /// The block `Q`: reversed `CP^2` with Euler class 1 (`sigma = -1`,
    /// `H = 1`), bounding the trivial knot.
    pub fn q_block() -> SeifertSurfaceModel {
        let mut s = Self::cp2bar(0);
        s.label = String::from("Q");
        s
    }
}
