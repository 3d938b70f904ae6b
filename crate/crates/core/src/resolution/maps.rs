use std::fmt;

use super::{rank, KGMatrix, PeriodicComplex};
use crate::field::Gf4;
use crate::tate_ring::{class_frame, RingElement, Variant};

/// A degree-n family f_j: P_{j+n} → P_j that repeats with period 4 or 8.
#[derive(Clone, Debug)]
pub struct PeriodicMap {
    t: u32,
    degree: i64,
    components: Vec<KGMatrix>,
}

fn lcm(a: usize, b: usize) -> usize {
    if a.is_multiple_of(b) {
        a
    } else if b.is_multiple_of(a) {
        b
    } else {
        a * b
    }
}

impl PeriodicMap {
    pub fn zero(t: u32, degree: i64) -> PeriodicMap {
        PeriodicMap::from_fn(t, degree, 4, |j| KGMatrix::zeros(t, rank(j), rank(j + degree)))
    }

    /// Builds a map from its components f_0, …, f_{period−1}.
    pub fn from_fn(t: u32, degree: i64, period: usize, mut f: impl FnMut(i64) -> KGMatrix) -> PeriodicMap {
        assert!(period == 4 || period == 8, "period must be 4 or 8");
        let components: Vec<KGMatrix> = (0..period as i64)
            .map(|j| {
                let m = f(j);
                assert_eq!(
                    (m.rows(), m.cols()),
                    (rank(j), rank(j + degree)),
                    "component {j} of a degree-{degree} map has the wrong shape"
                );
                m
            })
            .collect();
        PeriodicMap { t, degree, components }
    }

    /// The identity P → P[4n] (the n-th power of the shift).
    pub fn shift(t: u32, n: i64) -> PeriodicMap {
        PeriodicMap::from_fn(t, 4 * n, 4, |j| KGMatrix::identity(t, rank(j)))
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn period(&self) -> usize {
        self.components.len()
    }

    /// f_j: P_{j+n} → P_j.
    pub fn component(&self, j: i64) -> &KGMatrix {
        &self.components[j.rem_euclid(self.period() as i64) as usize]
    }

    /// Same map, stored with period 8.
    pub fn with_period(&self, period: usize) -> PeriodicMap {
        assert!(period.is_multiple_of(self.period()));
        PeriodicMap::from_fn(self.t, self.degree, period, |j| self.component(j).clone())
    }

    /// Collapses to period 4 when the two halves agree.
    fn normalized(mut self) -> PeriodicMap {
        if self.components.len() == 8 && self.components[..4] == self.components[4..] {
            self.components.truncate(4);
        }
        self
    }

    pub fn add(&self, other: &PeriodicMap) -> PeriodicMap {
        assert_eq!(self.degree, other.degree, "adding maps of different degrees");
        let period = lcm(self.period(), other.period());
        PeriodicMap::from_fn(self.t, self.degree, period, |j| self.component(j).add(other.component(j)))
            .normalized()
    }

    pub fn scale(&self, k: Gf4) -> PeriodicMap {
        PeriodicMap { t: self.t, degree: self.degree, components: self.components.iter().map(|c| c.scale(k)).collect() }
    }

    /// (f∘g)_j = f_j ∘ g_{j + deg f}.
    pub fn compose(&self, g: &PeriodicMap) -> PeriodicMap {
        let period = lcm(self.period(), g.period());
        let n = self.degree;
        PeriodicMap::from_fn(self.t, n + g.degree, period, |j| self.component(j).mul(g.component(j + n)))
            .normalized()
    }

    /// (df)_j = ∂_{j+1} f_{j+1} + f_j ∂_{j+n+1}; the sign is invisible in
    /// characteristic 2.
    pub fn differential(&self, p: &PeriodicComplex) -> PeriodicMap {
        let n = self.degree;
        PeriodicMap::from_fn(self.t, n + 1, self.period(), |j| {
            let left = p.boundary(j + 1).mul(self.component(j + 1));
            let right = self.component(j).mul(p.boundary(j + n + 1));
            left.add(&right)
        })
        .normalized()
    }

    /// s̄ f s̄⁻¹, whose j-th component is f_{j+4}.
    pub fn conjugate_by_shift(&self) -> PeriodicMap {
        PeriodicMap::from_fn(self.t, self.degree, self.period(), |j| self.component(j + 4).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(KGMatrix::is_zero)
    }

    /// The functional ε∘f₀ on P_n.
    pub fn augmented_row(&self) -> Vec<Gf4> {
        self.component(0).augmentation()
    }

    /// The class of ε∘f₀ in Λ_n under the fixed identification of
    /// Hom(P_n, k) with Λ_n.
    pub fn class_map(&self) -> RingElement {
        let variant = Variant::for_t(self.t);
        let frame = class_frame(self.degree as i32, variant);
        let mut out = RingElement::zero(variant);
        for (k, e) in self.augmented_row().into_iter().zip(&frame) {
            out += &e.scale(k);
        }
        out
    }

    /// First index j in 0..8 where the maps differ.
    pub fn first_difference(&self, other: &PeriodicMap) -> Option<i64> {
        if self.degree != other.degree {
            return Some(0);
        }
        (0..8).find(|&j| self.component(j) != other.component(j))
    }
}

impl PartialEq for PeriodicMap {
    fn eq(&self, other: &PeriodicMap) -> bool {
        self.t == other.t && self.first_difference(other).is_none()
    }
}

impl Eq for PeriodicMap {}

impl fmt::Display for PeriodicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree {} map, period {}", self.degree, self.period())?;
        for (j, c) in self.components.iter().enumerate() {
            writeln!(f, "  P{} -> P{}: {}", j as i64 + self.degree, j, c)?;
        }
        Ok(())
    }
}
