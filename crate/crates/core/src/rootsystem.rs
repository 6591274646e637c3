//! Root and weight data of the Lie algebra D4.
//!
//! Weights are written in the fundamental-weight basis (`WeightVector`),
//! root-lattice elements in the simple-root basis (`RootVector`). All inner
//! products go through the inverse Cartan matrix, so every quantity here is
//! an exact integer or rational.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Exact rational with small integer parts, used for Cartan data.
pub type SmallRational = Ratio<i64>;

/// The Cartan matrix of D4 with node 2 as the central (trivalent) node.
pub const CARTAN: [[i64; 4]; 4] = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]];

/// Twice the inverse Cartan matrix; entry (j, k) is 2 (λ_j, λ_k).
const TWICE_INVERSE_CARTAN: [[i64; 4]; 4] = [[2, 2, 1, 1], [2, 4, 2, 2], [1, 2, 2, 1], [1, 2, 1, 2]];

/// Coefficients of a weight in the basis of fundamental weights λ1..λ4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub [i64; 4]);

/// Coefficients of a root-lattice element in the basis of simple roots α1..α4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub [i64; 4]);

impl WeightVector {
    pub const ZERO: WeightVector = WeightVector([0; 4]);

    pub fn new(m1: i64, m2: i64, m3: i64, m4: i64) -> Self {
        WeightVector([m1, m2, m3, m4])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn ensure_dominant(&self) -> Result<(), Error> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(*self))
        }
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Converts to a monomial exponent, or `None` when a coordinate is negative.
    pub fn to_exponent(&self) -> Option<[u32; 4]> {
        let mut out = [0u32; 4];
        for (o, &c) in out.iter_mut().zip(self.0.iter()) {
            *o = u32::try_from(c).ok()?;
        }
        Some(out)
    }

    pub fn from_exponent(e: [u32; 4]) -> Self {
        WeightVector(e.map(i64::from))
    }
}

impl RootVector {
    pub const ZERO: RootVector = RootVector([0; 4]);

    pub fn new(n1: i64, n2: i64, n3: i64, n4: i64) -> Self {
        RootVector([n1, n2, n3, n4])
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// True when every coordinate is nonnegative, i.e. the element lies in Q^+.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Simple root α_{i+1} (0-based slot).
    pub fn simple(i: usize) -> Self {
        let mut c = [0; 4];
        c[i] = 1;
        RootVector(c)
    }
}

macro_rules! lattice_ops {
    ($t:ident) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $t(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $t(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.map(|c| -c))
            }
        }
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let [a, b, c, d] = self.0;
                write!(f, "({a},{b},{c},{d})")
            }
        }
    };
}
lattice_ops!(WeightVector);
lattice_ops!(RootVector);

/// Weight-basis image of a root-lattice element: α_i = Σ_j A_ji λ_j.
pub fn root_to_weight(r: RootVector) -> WeightVector {
    WeightVector(std::array::from_fn(|j| (0..4).map(|i| CARTAN[j][i] * r.0[i]).sum()))
}

/// Inverse of [`root_to_weight`]; `None` when the weight is not in the root lattice.
pub fn weight_to_root(w: WeightVector) -> Option<RootVector> {
    // A^{-1} = TWICE_INVERSE_CARTAN / 2
    let mut out = [0i64; 4];
    for (i, o) in out.iter_mut().enumerate() {
        let twice: i64 = (0..4).map(|j| TWICE_INVERSE_CARTAN[i][j] * w.0[j]).sum();
        if twice % 2 != 0 {
            return None;
        }
        *o = twice / 2;
    }
    Some(RootVector(out))
}

/// Inner product (w1, w2) of two weights given in the fundamental-weight basis.
pub fn weight_inner(a: WeightVector, b: WeightVector) -> SmallRational {
    let twice: i64 = (0..4)
        .flat_map(|j| (0..4).map(move |k| (j, k)))
        .map(|(j, k)| TWICE_INVERSE_CARTAN[j][k] * a.0[j] * b.0[k])
        .sum();
    SmallRational::new(twice, 2)
}

/// The Weyl vector ρ = λ1 + λ2 + λ3 + λ4.
pub const WEYL_VECTOR: WeightVector = WeightVector([1, 1, 1, 1]);

/// Pairing (ρ, w), always an integer or half-integer; for root-lattice
/// elements it equals the height.
pub fn rho_pairing(w: WeightVector) -> SmallRational {
    weight_inner(WEYL_VECTOR, w)
}

/// The pairing with ρ on exponents, `3e1 + 5e2 + 3e3 + 3e4`, used as the
/// grading in which every eigenpolynomial is unitriangular.
pub fn rho_grade(e: [u32; 4]) -> i64 {
    3 * i64::from(e[0]) + 5 * i64::from(e[1]) + 3 * i64::from(e[2]) + 3 * i64::from(e[3])
}

/// Immutable bundle of the Cartan matrix, its inverse and the Weyl vector.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanData {
    pub cartan: [[i64; 4]; 4],
    pub inverse_cartan: [[SmallRational; 4]; 4],
    pub weyl_vector: WeightVector,
}

impl CartanData {
    pub fn d4() -> Self {
        CartanData {
            cartan: CARTAN,
            inverse_cartan: std::array::from_fn(|j| {
                std::array::from_fn(|k| SmallRational::new(TWICE_INVERSE_CARTAN[j][k], 2))
            }),
            weyl_vector: WEYL_VECTOR,
        }
    }
}

/// The 12 positive roots in the simple-root basis, sorted by height and then
/// lexicographically.
pub fn positive_roots() -> Vec<RootVector> {
    let mut roots = vec![
        RootVector::new(1, 0, 0, 0),
        RootVector::new(0, 1, 0, 0),
        RootVector::new(0, 0, 1, 0),
        RootVector::new(0, 0, 0, 1),
        RootVector::new(1, 1, 0, 0),
        RootVector::new(0, 1, 1, 0),
        RootVector::new(0, 1, 0, 1),
        RootVector::new(1, 1, 1, 0),
        RootVector::new(1, 1, 0, 1),
        RootVector::new(0, 1, 1, 1),
        RootVector::new(1, 1, 1, 1),
        RootVector::new(1, 2, 1, 1),
    ];
    roots.sort_by_key(|r| (r.height(), r.0));
    roots
}

/// Dimension of the irreducible representation with highest weight `m`,
/// as the product over positive roots of (m + ρ, α) / (ρ, α).
pub fn weyl_dimension(m: WeightVector) -> Result<u64, Error> {
    m.ensure_dominant()?;
    let shifted = m + WEYL_VECTOR;
    let mut dim = SmallRational::from_integer(1);
    for alpha in positive_roots() {
        let aw = root_to_weight(alpha);
        dim *= weight_inner(shifted, aw) / weight_inner(WEYL_VECTOR, aw);
    }
    if !dim.is_integer() {
        return Err(Error::InternalInconsistency(format!("non-integral Weyl dimension {dim} for {m}")));
    }
    Ok(*dim.numer() as u64)
}

/// A permutation of the outer nodes {1, 3, 4} of the Dynkin diagram.
///
/// Stored as a map on 0-based coordinate slots; slot 1 (node 2) is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triality([usize; 4]);

impl Triality {
    /// Builds a triality from the images of the 1-based nodes 1..4.
    pub fn from_images(images: [usize; 4]) -> Result<Self, Error> {
        if images[1] != 2 {
            return Err(Error::InvalidPermutation(images));
        }
        let mut seen = [false; 5];
        for &i in &images {
            if !(1..=4).contains(&i) || seen[i] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Triality(images.map(|i| i - 1)))
    }

    pub fn identity() -> Self {
        Triality([0, 1, 2, 3])
    }

    /// All six permutations of {1, 3, 4}.
    pub fn all() -> [Triality; 6] {
        [
            Triality([0, 1, 2, 3]),
            Triality([2, 1, 0, 3]),
            Triality([3, 1, 2, 0]),
            Triality([0, 1, 3, 2]),
            Triality([2, 1, 3, 0]),
            Triality([3, 1, 0, 2]),
        ]
    }

    /// Image of a 0-based slot.
    pub fn slot(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Moves coordinate i to position σ(i).
    pub fn apply<T: Copy + Default>(&self, v: [T; 4]) -> [T; 4] {
        let mut out = [T::default(); 4];
        for (i, &x) in v.iter().enumerate() {
            out[self.0[i]] = x;
        }
        out
    }

    pub fn permute(&self, m: WeightVector) -> WeightVector {
        WeightVector(self.apply(m.0))
    }
}

/// Permutes coordinates 1, 3, 4 of `m` by `sigma`, fixing coordinate 2.
pub fn triality_permute(m: WeightVector, sigma: Triality) -> WeightVector {
    sigma.permute(m)
}
