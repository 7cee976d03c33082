//! Torsion cocharacters and their combinatorics: centralizer subsystems
//! (single and Galois-intersected), the regular/cyclic/Levi-regular
//! classification flags, alcove normal forms, and facet index sets.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::GaloisAction;
use crate::linalg::{dot_rat, to_rat_vec, Int, Rat};
use crate::rootdata::{
    cartan_type_of, is_levi_subsystem, BaseData, CartanType, RootDatum, Subsystem,
};

/// An element of `X_* ⊗ Q/Z`, stored as the unique lift with all
/// coordinates in `[0, 1)`; `denominator` is the least common denominator
/// (1 exactly when the element is zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsionCocharacter {
    coordinates: Vec<Rat>,
    denominator: Int,
}

impl TorsionCocharacter {
    /// Reduce an arbitrary rational cocharacter mod `X_*`.
    pub fn new(coords: &[Rat]) -> Self {
        let coordinates: Vec<Rat> = coords.iter().map(fract).collect();
        let denominator = coordinates
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        TorsionCocharacter {
            coordinates,
            denominator,
        }
    }

    /// The class of `numerator / n`.
    pub fn from_numerator(numerator: &[Int], n: &Int) -> Self {
        assert!(!n.is_zero(), "denominator must be nonzero");
        let coords: Vec<Rat> = numerator
            .iter()
            .map(|c| Rat::new(c.clone(), n.clone()))
            .collect();
        TorsionCocharacter::new(&coords)
    }

    pub fn zero(rank: usize) -> Self {
        TorsionCocharacter {
            coordinates: vec![Rat::zero(); rank],
            denominator: Int::one(),
        }
    }

    pub fn coordinates(&self) -> &[Rat] {
        &self.coordinates
    }

    pub fn denominator(&self) -> &Int {
        &self.denominator
    }

    pub fn rank(&self) -> usize {
        self.coordinates.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|c| c.is_zero())
    }

    /// Apply a lattice automorphism and re-reduce mod `X_*`.
    pub fn transformed(&self, g: &crate::linalg::IntMatrix) -> Self {
        TorsionCocharacter::new(&g.mul_rat_vec(&self.coordinates))
    }

    /// Pairing against a root, as a rational number of the `[0,1)` lift.
    pub fn pair(&self, root: &[Int]) -> Rat {
        dot_rat(&self.coordinates, root)
    }

    /// Whether the pairing with `root` vanishes in `Q/Z`.
    pub fn pairs_integrally(&self, root: &[Int]) -> bool {
        self.pair(root).is_integer()
    }
}

impl std::fmt::Display for TorsionCocharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coordinates.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn fract(x: &Rat) -> Rat {
    let f = x - x.floor();
    debug_assert!(f >= Rat::zero() && f < Rat::one());
    f
}

/// Centralizer data of a torsion cocharacter: the subsystem pairing
/// integrally with the cocharacter alone, the intersection over the whole
/// Galois orbit, their Cartan types, and the classification flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerReport {
    pub single_centralizer: Subsystem,
    pub gamma_centralizer: Subsystem,
    pub type_single: CartanType,
    pub type_gamma: CartanType,
    /// True when the single and intersected centralizers coincide.
    pub is_cyclic_witness: bool,
    /// True when the intersected centralizer is a Levi subsystem.
    pub is_levi_regular: bool,
}

/// Roots pairing integrally with `nu`: always closed and symmetric.
pub fn centralizer_roots(datum: &RootDatum, nu: &TorsionCocharacter) -> Subsystem {
    Subsystem::new(
        (0..datum.num_roots())
            .filter(|&i| nu.pairs_integrally(datum.root(i)))
            .collect(),
    )
}

/// Intersection over the Galois orbit: roots pairing integrally with every
/// translate of `nu`, with types and classification flags.
pub fn gamma_centralizer(
    datum: &RootDatum,
    nu: &TorsionCocharacter,
    action: &GaloisAction,
) -> Result<CentralizerReport> {
    let single = centralizer_roots(datum, nu);
    let translates: Vec<TorsionCocharacter> =
        action.elements.iter().map(|g| nu.transformed(g)).collect();
    let gamma = Subsystem::new(
        (0..datum.num_roots())
            .filter(|&i| translates.iter().all(|t| t.pairs_integrally(datum.root(i))))
            .collect(),
    );
    debug_assert!(action.stabilizes(&gamma));
    let type_single = cartan_type_of(datum, &single)?;
    let type_gamma = cartan_type_of(datum, &gamma)?;
    let is_cyclic_witness = gamma == single;
    let is_levi_regular = is_levi_subsystem(datum, &gamma)?;
    Ok(CentralizerReport {
        single_centralizer: single,
        gamma_centralizer: gamma,
        type_single,
        type_gamma,
        is_cyclic_witness,
        is_levi_regular,
    })
}

/// One affine reflection step `y -> y - (<y, root> - level) coroot`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineStep {
    pub root: usize,
    pub level: i64,
}

/// A vertex of the facet index set: a simple root, or the negative of the
/// highest root of a component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FacetVertex {
    Simple { root: usize },
    NegHighest { component: usize, root: usize },
}

/// Alcove normal form: the normalized point, the affine word mapping the
/// input to it, and the facet index set of the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcoveForm {
    pub point: Vec<Rat>,
    pub affine_word: Vec<AffineStep>,
    pub facet_indices: Vec<FacetVertex>,
}

impl AlcoveForm {
    /// Re-apply the recorded word to an arbitrary point.
    pub fn apply_word(&self, datum: &RootDatum, start: &[Rat]) -> Vec<Rat> {
        let mut y = start.to_vec();
        for step in &self.affine_word {
            y = affine_reflect(datum, step, &y);
        }
        y
    }
}

fn affine_reflect(datum: &RootDatum, step: &AffineStep, y: &[Rat]) -> Vec<Rat> {
    let excess = dot_rat(y, datum.root(step.root)) - Rat::from_integer(Int::from(step.level));
    let coroot = to_rat_vec(datum.coroot(step.root));
    y.iter()
        .zip(&coroot)
        .map(|(a, c)| a - &excess * c)
        .collect()
}

/// Walk a rational cocharacter into the closed fundamental alcove of every
/// simple component: `<y, alpha_i> >= 0` for simple roots and
/// `<y, alpha_0> <= 1` for component highest roots. Central directions are
/// untouched (every step moves `y` along coroots only).
pub fn alcove_normalize(datum: &RootDatum, base: &BaseData, lift: &[Rat]) -> Result<AlcoveForm> {
    if lift.len() != datum.rank() {
        return Err(Error::InvalidInput("lift has wrong length".into()));
    }
    let mut y = lift.to_vec();
    let mut word = Vec::new();
    // Each applied reflection strictly decreases the number of affine walls
    // separating y from the fundamental alcove of its component, so the
    // walk terminates.
    'walk: loop {
        for &i in &base.simple_roots {
            if dot_rat(&y, datum.root(i)) < Rat::zero() {
                let step = AffineStep { root: i, level: 0 };
                y = affine_reflect(datum, &step, &y);
                word.push(step);
                continue 'walk;
            }
        }
        for &h in &base.highest_roots {
            if dot_rat(&y, datum.root(h)) > Rat::one() {
                let step = AffineStep { root: h, level: 1 };
                y = affine_reflect(datum, &step, &y);
                word.push(step);
                continue 'walk;
            }
        }
        break;
    }
    let facet = facet_indices(datum, base, &y)?;
    Ok(AlcoveForm {
        point: y,
        affine_word: word,
        facet_indices: facet,
    })
}

/// Facet index set of an alcove-normalized point: the members of
/// `Delta ∪ {-alpha_0 per component}` pairing integrally with the point.
/// Fails with `NotNormalized` when the closed-alcove inequalities do not
/// hold.
pub fn facet_indices(
    datum: &RootDatum,
    base: &BaseData,
    point: &[Rat],
) -> Result<Vec<FacetVertex>> {
    for &i in &base.simple_roots {
        if dot_rat(point, datum.root(i)) < Rat::zero() {
            return Err(Error::NotNormalized(format!("<y, simple root #{i}> < 0")));
        }
    }
    for &h in &base.highest_roots {
        if dot_rat(point, datum.root(h)) > Rat::one() {
            return Err(Error::NotNormalized(format!("<y, highest root #{h}> > 1")));
        }
    }
    let mut out = Vec::new();
    for &i in &base.simple_roots {
        if dot_rat(point, datum.root(i)).is_integer() {
            out.push(FacetVertex::Simple { root: i });
        }
    }
    for (comp, &h) in base.highest_roots.iter().enumerate() {
        if dot_rat(point, datum.root(h)).is_integer() {
            out.push(FacetVertex::NegHighest {
                component: comp,
                root: datum.negative_of(h),
            });
        }
    }
    Ok(out)
}

/// The alcove normal form of the canonical `[0,1)` lift of `nu` together
/// with its Galois-intersected centralizer report.
pub fn newton_invariant(
    datum: &RootDatum,
    base: &BaseData,
    nu: &TorsionCocharacter,
    action: &GaloisAction,
) -> Result<(AlcoveForm, CentralizerReport)> {
    let alcove = alcove_normalize(datum, base, nu.coordinates())?;
    let report = gamma_centralizer(datum, nu, action)?;
    Ok((alcove, report))
}

/// Large-denominator stabilization bound: `1 + max |<lambda, alpha>|` over
/// the roots, for integer `lambda`. A torsion class `lambda/n` with
/// `n >= this` has centralizer exactly `{alpha : <lambda, alpha> = 0}`.
pub fn stabilization_level(datum: &RootDatum, lambda: &[Int]) -> Int {
    let mut max = Int::zero();
    for i in 0..datum.num_roots() {
        let p = crate::linalg::dot(lambda, datum.root(i)).abs();
        if p > max {
            max = p;
        }
    }
    max + Int::one()
}
