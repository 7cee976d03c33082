//! Finite Galois actions on cocharacter lattices preserving a root datum:
//! group closure, norms and augmentation sublattices, ellipticity, and
//! rational relative Weyl groups.
//!
//! The field extension itself is never materialized: a Galois group enters
//! only through its image in `Aut(X_*)`, which determines every
//! computation in this crate.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{dot, kernel_basis, Int, IntMatrix};
use crate::rootdata::{is_levi_subsystem, weyl_group, RootDatum, Subsystem};

/// A finite group of root-datum automorphisms of `X_*`, closed under
/// product, with the identity first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisAction {
    pub elements: Vec<IntMatrix>,
    pub generator_indices: Vec<usize>,
    /// Root-index permutation of each element, aligned with `elements`.
    root_permutations: Vec<Vec<usize>>,
}

const GROUP_LIMIT: usize = 10_000;

/// Close the generators into a finite automorphism group of the datum.
///
/// Each generator must be unimodular and permute the coroot set (dually,
/// its inverse-transpose must permute the root set).
pub fn build_action(datum: &RootDatum, generators: &[IntMatrix]) -> Result<GaloisAction> {
    let rank = datum.rank();
    for g in generators {
        if g.rows() != rank || g.cols() != rank {
            return Err(Error::InvalidInput("generator has wrong dimensions".into()));
        }
        if !g.is_unimodular() {
            return Err(Error::InvalidInput("generator is not unimodular".into()));
        }
        if let Err(root) = datum.root_permutation(g) {
            return Err(Error::NotAutomorphism { root });
        }
    }
    let id = IntMatrix::identity(rank);
    let mut elements = vec![id.clone()];
    let mut seen: HashSet<IntMatrix> = HashSet::from([id]);
    let mut queue: VecDeque<usize> = VecDeque::from([0usize]);
    while let Some(pos) = queue.pop_front() {
        let w = elements[pos].clone();
        for g in generators {
            let next = g.mul(&w);
            if seen.insert(next.clone()) {
                if elements.len() >= GROUP_LIMIT {
                    return Err(Error::NotFinite { limit: GROUP_LIMIT });
                }
                elements.push(next);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    let generator_indices = generators
        .iter()
        .map(|g| {
            elements
                .iter()
                .position(|e| e == g)
                .expect("generator is in the closure")
        })
        .collect();
    let root_permutations = elements
        .iter()
        .map(|e| datum.root_permutation(e).expect("closure of automorphisms"))
        .collect();
    Ok(GaloisAction {
        elements,
        generator_indices,
        root_permutations,
    })
}

impl GaloisAction {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn generators(&self) -> Vec<&IntMatrix> {
        self.generator_indices
            .iter()
            .map(|&i| &self.elements[i])
            .collect()
    }

    /// Root-index permutation of element `i` (the coroot action; the dual
    /// root action agrees on aligned indices).
    pub fn root_permutation(&self, i: usize) -> &[usize] {
        &self.root_permutations[i]
    }

    /// Whether a root index set is carried to itself by every element.
    pub fn stabilizes(&self, sub: &Subsystem) -> bool {
        self.root_permutations
            .iter()
            .all(|perm| sub.root_indices.iter().all(|&i| sub.contains(perm[i])))
    }
}

/// The norm `N = sum_gamma gamma` and generators of the augmentation
/// sublattice `I*X_*`, whose columns are `(gamma - 1) e_i` over the
/// generators `gamma` and the basis vectors `e_i`.
pub fn norm_and_augmentation(action: &GaloisAction) -> (IntMatrix, IntMatrix) {
    let rank = action.rank();
    let mut norm = IntMatrix::zero(rank, rank);
    for e in &action.elements {
        norm = norm.add(e);
    }
    let id = IntMatrix::identity(rank);
    let gens = action.generators();
    let mut cols: Vec<Vec<Int>> = Vec::new();
    for g in &gens {
        let diff = g.sub(&id);
        for j in 0..rank {
            cols.push(diff.col(j));
        }
    }
    let augmentation = if cols.is_empty() {
        IntMatrix::zero(rank, 0)
    } else {
        IntMatrix::from_cols(cols)
    };
    (norm, augmentation)
}

/// Saturated basis of the fixed sublattice `X_*^Gamma` (kernel of the
/// stacked `gamma - 1` over the generators).
pub fn fixed_sublattice(action: &GaloisAction) -> Vec<Vec<Int>> {
    let rank = action.rank();
    let gens = action.generators();
    if gens.is_empty() {
        let id = IntMatrix::identity(rank);
        return (0..rank).map(|j| id.col(j)).collect();
    }
    let id = IntMatrix::identity(rank);
    let mut stacked_rows: Vec<Vec<Int>> = Vec::new();
    for g in gens {
        let diff = g.sub(&id);
        for i in 0..rank {
            stacked_rows.push(diff.row(i));
        }
    }
    kernel_basis(&IntMatrix::from_rows(stacked_rows))
}

/// Ellipticity: every rational cocharacter fixed by the whole group pairs
/// to zero with every root.
pub fn is_elliptic(datum: &RootDatum, action: &GaloisAction) -> bool {
    let fixed = fixed_sublattice(action);
    fixed
        .iter()
        .all(|v| (0..datum.num_roots()).all(|i| dot(v, datum.root(i)).is_zero()))
}

/// Report on `N_W(sub)/W(sub)` and its Galois-fixed cosets.
#[derive(Clone, Debug)]
pub struct RelativeWeylReport {
    pub ambient_weyl_order: usize,
    pub stabilizer_order: usize,
    /// One representative matrix per Galois-fixed coset of `W(sub)` in its
    /// stabilizer; closed under product modulo `W(sub)`.
    pub f_rational_elements: Vec<IntMatrix>,
}

/// Galois-fixed part of the relative Weyl group of a stable Levi
/// subsystem: cosets `w W(sub)` inside the stabilizer of `sub` in `W`,
/// fixed by conjugation under every Galois element.
pub fn relative_weyl_f(
    datum: &RootDatum,
    sub: &Subsystem,
    action: &GaloisAction,
) -> Result<RelativeWeylReport> {
    if !action.stabilizes(sub) {
        return Err(Error::NotStable);
    }
    if !is_levi_subsystem(datum, sub)? {
        return Err(Error::NotLevi);
    }
    let w = weyl_group(datum)?;
    let index: HashMap<IntMatrix, usize> =
        w.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();

    // W(sub): subgroup generated by the reflections of the subsystem
    let mut in_sub = vec![false; w.len()];
    {
        let id = IntMatrix::identity(datum.rank());
        let gens: Vec<IntMatrix> = sub
            .root_indices
            .iter()
            .map(|&i| datum.reflection_matrix(i))
            .collect();
        let start = index[&id];
        in_sub[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(pos) = queue.pop_front() {
            for g in &gens {
                let next = g.mul(&w[pos]);
                let ni = index[&next];
                if !in_sub[ni] {
                    in_sub[ni] = true;
                    queue.push_back(ni);
                }
            }
        }
    }
    let w_sub: Vec<usize> = (0..w.len()).filter(|&i| in_sub[i]).collect();

    // stabilizer of the subsystem in W
    let stab: Vec<usize> = (0..w.len())
        .filter(|&i| {
            let perm = datum
                .root_permutation(&w[i])
                .expect("Weyl elements are automorphisms");
            sub.root_indices.iter().all(|&r| sub.contains(perm[r]))
        })
        .collect();

    // cosets w * W(sub) inside the stabilizer
    let mut coset_of: HashMap<usize, usize> = HashMap::new();
    let mut coset_reps: Vec<usize> = Vec::new();
    for &s in &stab {
        if coset_of.contains_key(&s) {
            continue;
        }
        let id = coset_reps.len();
        for &h in &w_sub {
            let prod = w[s].mul(&w[h]);
            coset_of.insert(index[&prod], id);
        }
        coset_reps.push(s);
    }

    // Galois action on cosets: [w] -> [gamma w gamma^{-1}]
    let mut fixed = Vec::new();
    'coset: for (id, &rep) in coset_reps.iter().enumerate() {
        for g in action.generators() {
            let conj = g.mul(&w[rep]).mul(&g.inverse_unimodular());
            let Some(&ci) = index.get(&conj) else {
                return Err(Error::InvalidInput(
                    "Galois conjugation left the Weyl group".into(),
                ));
            };
            if coset_of.get(&ci) != Some(&id) {
                continue 'coset;
            }
        }
        fixed.push(w[rep].clone());
    }

    Ok(RelativeWeylReport {
        ambient_weyl_order: w.len(),
        stabilizer_order: stab.len(),
        f_rational_elements: fixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::rootdata::{build_root_datum, Family, Isogeny};

    fn inversion(rank: usize) -> IntMatrix {
        IntMatrix::identity(rank).neg()
    }

    #[test]
    fn sl2_inversion_group() {
        let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&sl2, &[inversion(1)]).unwrap();
        assert_eq!(action.order(), 2);
    }

    #[test]
    fn trivial_group() {
        let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&sl2, &[]).unwrap();
        assert_eq!(action.order(), 1);
        let (norm, aug) = norm_and_augmentation(&action);
        assert_eq!(norm, IntMatrix::identity(1));
        assert_eq!(aug.cols(), 0);
    }

    #[test]
    fn g2_inversion_group() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&g2, &[inversion(2)]).unwrap();
        assert_eq!(action.order(), 2);
    }

    #[test]
    fn rejects_non_automorphism() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert!(matches!(
            build_action(&g2, &[swap]),
            Err(Error::NotAutomorphism { .. })
        ));
    }

    #[test]
    fn infinite_order_generator_rejected() {
        // every unimodular matrix is an automorphism of a torus, including
        // this infinite-order shear; the closure guard must trip
        let t2 = crate::rootdata::torus(2);
        let shear = IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        assert!(matches!(
            build_action(&t2, &[shear]),
            Err(Error::NotFinite { .. })
        ));
    }

    #[test]
    fn norm_and_augmentation_examples() {
        let t1 = crate::rootdata::torus(1);
        let action = build_action(&t1, &[inversion(1)]).unwrap();
        let (norm, aug) = norm_and_augmentation(&action);
        assert!(norm.is_zero());
        assert_eq!(aug, IntMatrix::from_i64(1, 1, &[-2]));

        let t2 = crate::rootdata::torus(2);
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let action = build_action(&t2, &[swap]).unwrap();
        let (norm, aug) = norm_and_augmentation(&action);
        assert_eq!(norm, IntMatrix::from_i64(2, 2, &[1, 1, 1, 1]));
        // augmentation spans Z*(1,-1)
        let sat = crate::linalg::saturate(&aug);
        assert_eq!(sat.cols(), 1);
        let col = sat.col(0);
        assert!(col == vec![int(1), int(-1)] || col == vec![int(-1), int(1)]);
    }

    #[test]
    fn norm_kills_augmentation() {
        let t2 = crate::rootdata::torus(2);
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let action = build_action(&t2, &[swap]).unwrap();
        let (norm, aug) = norm_and_augmentation(&action);
        for g in &action.elements {
            let diff = g.sub(&IntMatrix::identity(2));
            assert!(norm.mul(&diff).is_zero());
        }
        for j in 0..aug.cols() {
            assert!(norm.mul_vec(&aug.col(j)).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn ellipticity() {
        let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let inv = build_action(&sl2, &[inversion(1)]).unwrap();
        assert!(is_elliptic(&sl2, &inv));
        let triv = build_action(&sl2, &[]).unwrap();
        assert!(!is_elliptic(&sl2, &triv));

        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let inv = build_action(&g2, &[inversion(2)]).unwrap();
        assert!(is_elliptic(&g2, &inv));
    }

    #[test]
    fn relative_weyl_sl2_torus() {
        let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&sl2, &[inversion(1)]).unwrap();
        let report = relative_weyl_f(&sl2, &Subsystem::empty(), &action).unwrap();
        assert_eq!(report.ambient_weyl_order, 2);
        assert_eq!(report.stabilizer_order, 2);
        assert_eq!(report.f_rational_elements.len(), 2);
    }

    #[test]
    fn relative_weyl_full_subsystem_is_trivial() {
        let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&a2, &[]).unwrap();
        let report = relative_weyl_f(&a2, &Subsystem::full(&a2), &action).unwrap();
        assert_eq!(report.f_rational_elements.len(), 1);
    }

    #[test]
    fn relative_weyl_a2_outer_involution() {
        // Galois acts by -w0: the diagram involution composed with -1
        let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected).unwrap();
        let w = weyl_group(&a2).unwrap();
        // longest element: the unique w sending all positives to negatives
        let positives = a2.lex_positive_roots();
        let w0 = w
            .iter()
            .find(|m| {
                let perm = a2.root_permutation(m).unwrap();
                positives.iter().all(|&p| !positives.contains(&perm[p]))
            })
            .unwrap();
        let minus_w0 = w0.neg();
        let action = build_action(&a2, &[minus_w0]).unwrap();
        assert_eq!(action.order(), 2);
        let report = relative_weyl_f(&a2, &Subsystem::empty(), &action).unwrap();
        assert_eq!(report.ambient_weyl_order, 6);
        // centralizer of the involution in S3 has order 2
        assert_eq!(report.f_rational_elements.len(), 2);
    }

    #[test]
    fn relative_weyl_a3_block_levi() {
        // the A1xA1 Levi of A3 spanned by two orthogonal roots: its
        // stabilizer contains the block swap, so the relative Weyl group
        // has order 2
        let a3 = build_root_datum(Family::A, 3, Isogeny::SimplyConnected).unwrap();
        let levis = crate::rootdata::all_levi_subsystems(&a3);
        let block = levis
            .iter()
            .find(|s| {
                s.len() == 4
                    && crate::rootdata::cartan_type_of(&a3, s)
                        .unwrap()
                        .same_components(&crate::rootdata::parse_cartan_type("A1xA1").unwrap())
            })
            .expect("A3 has an A1xA1 Levi");
        let trivial = build_action(&a3, &[]).unwrap();
        let report = relative_weyl_f(&a3, block, &trivial).unwrap();
        assert_eq!(report.ambient_weyl_order, 24);
        assert_eq!(report.f_rational_elements.len(), 2);
    }

    #[test]
    fn relative_weyl_rejects_non_levi() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&g2, &[inversion(2)]).unwrap();
        // the A1xA1 subsystem of the worked example is closed but not Levi
        let b = g2.index_of_root(&[int(0), int(1)]).unwrap();
        let t = g2.index_of_root(&[int(2), int(1)]).unwrap();
        let sub = Subsystem::new(vec![b, t, g2.negative_of(b), g2.negative_of(t)]);
        assert!(matches!(
            relative_weyl_f(&g2, &sub, &action),
            Err(Error::NotLevi)
        ));
    }

    #[test]
    fn relative_weyl_rejects_unstable() {
        // swap of two orthogonal A1 blocks does not stabilize one block
        let a1 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let sum = crate::rootdata::direct_sum(&[a1.clone(), a1], 0);
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let action = build_action(&sum, &[swap]).unwrap();
        let i = sum.index_of_root(&[int(2), int(0)]).unwrap();
        let sub = Subsystem::new(vec![i, sum.negative_of(i)]);
        assert!(matches!(
            relative_weyl_f(&sum, &sub, &action),
            Err(Error::NotStable)
        ));
    }
}
