//! Finite-level Tate-Nakayama groups of tori, the band-image membership
//! criterion, the twisted-Levi realization construction, and Levi-suitable
//! character enumeration.
//!
//! The finite central subgroup is always `Z = T[n]`: the group at level `n`
//! is `ker(N) / I*(n X_*)` on the cocharacter lattice, a torsion point
//! `lambda/n` lies in the band image iff `lambda` can be corrected to a
//! norm-killed lift, and the realization construction averages an integer
//! cocharacter against the Galois group at a level high enough that
//! divisibility forces vanishing.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::galois::{norm_and_augmentation, GaloisAction};
use crate::linalg::{
    cokernel_invariants, dot, kernel_basis, solve_in_lattice, FiniteAbelianGroup, Int, IntMatrix,
    Rat,
};
use crate::newton::{gamma_centralizer, CentralizerReport, TorsionCocharacter};
use crate::rootdata::{is_levi_subsystem, RootDatum, Subsystem};

/// Tate-Nakayama group of a torus at level `n`, with the lattice data it
/// was computed from.
#[derive(Clone, Debug)]
pub struct TNGroupResult {
    pub group: FiniteAbelianGroup,
    pub level: Int,
    /// Saturated basis of the norm-killed sublattice `X_*^N`.
    pub kernel_basis: Vec<Vec<Int>>,
    /// Columns generate the relation sublattice `I*(n X_*)` in ambient
    /// coordinates.
    pub relation_generators: IntMatrix,
}

/// `ker(N) / I*(n X_*)` on `Z^rank`, in invariant-factor form with
/// generator lifts. `NonFiniteQuotient` signals an action for which the
/// relation lattice does not have finite index in the norm kernel, which
/// cannot happen for a genuinely finite action and therefore flags a
/// modelling mistake.
pub fn tn_group_torus(datum_rank: usize, action: &GaloisAction, n: &Int) -> Result<TNGroupResult> {
    if action.rank() != datum_rank {
        return Err(Error::InvalidInput("action rank mismatch".into()));
    }
    if n < &Int::one() {
        return Err(Error::InvalidInput("level must be >= 1".into()));
    }
    let (norm, aug) = norm_and_augmentation(action);
    let kernel = kernel_basis(&norm);
    let relations = aug.scale(n);
    if kernel.is_empty() {
        return Ok(TNGroupResult {
            group: FiniteAbelianGroup::trivial(),
            level: n.clone(),
            kernel_basis: kernel,
            relation_generators: relations,
        });
    }
    let kernel_matrix = IntMatrix::from_cols(kernel.clone());
    let mut rel_cols_in_kernel: Vec<Vec<Int>> = Vec::new();
    for j in 0..relations.cols() {
        let col = relations.col(j);
        let coords = solve_in_lattice(&kernel_matrix, &col)
            .expect("relation lattice lies inside the norm kernel");
        rel_cols_in_kernel.push(coords);
    }
    let k = kernel.len();
    let rel_matrix = if rel_cols_in_kernel.is_empty() {
        IntMatrix::zero(k, 0)
    } else {
        IntMatrix::from_cols(rel_cols_in_kernel)
    };
    let mut group = cokernel_invariants(k, &rel_matrix)?;
    // lift the cyclic generators from kernel coordinates to X_*
    if let Some(gens) = group.generators.take() {
        let lifted = gens
            .into_iter()
            .map(|g| {
                (0..datum_rank)
                    .map(|i| {
                        kernel
                            .iter()
                            .zip(&g)
                            .map(|(b, c)| Rat::from_integer(b[i].clone()) * c)
                            .sum()
                    })
                    .collect()
            })
            .collect();
        group.generators = Some(lifted);
    }
    Ok(TNGroupResult {
        group,
        level: n.clone(),
        kernel_basis: kernel,
        relation_generators: relations,
    })
}

/// Band-image membership: `nu = c/n` is in the image iff some lift
/// `lambda ≡ c (mod n X_*)` is killed by the norm, decided by the lattice
/// criterion `N(c) ∈ n N(X_*)` with the witness recovered exactly.
pub fn band_image_contains(
    datum: &RootDatum,
    action: &GaloisAction,
    nu: &TorsionCocharacter,
) -> (bool, Option<Vec<Int>>) {
    assert_eq!(datum.rank(), action.rank(), "datum/action rank mismatch");
    assert_eq!(nu.rank(), datum.rank(), "nu rank mismatch");
    let n = nu.denominator().clone();
    let numerator: Vec<Int> = nu
        .coordinates()
        .iter()
        .map(|c| {
            let scaled = c * Rat::from_integer(n.clone());
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    let (norm, _) = norm_and_augmentation(action);
    let rhs = norm.mul_vec(&numerator);
    match solve_in_lattice(&norm.scale(&n), &rhs) {
        Some(x) => {
            let witness: Vec<Int> = numerator
                .iter()
                .zip(&x)
                .map(|(c, xi)| c - &n * xi)
                .collect();
            debug_assert!(norm.mul_vec(&witness).iter().all(|v| v.is_zero()));
            debug_assert_eq!(&TorsionCocharacter::from_numerator(&witness, &n), nu);
            (true, Some(witness))
        }
        None => (false, None),
    }
}

/// Realize the Levi subsystem `L = {alpha : <lambda, alpha> = 0}` as the
/// Galois-intersected centralizer of a torsion cocharacter.
///
/// The construction averages: `mu = |Gamma| lambda - N(lambda)` is always
/// norm-killed, and the level `n = 1 + max |<gamma mu, alpha>|` makes
/// integrality of pairings with `mu/n` equivalent to vanishing. It needs
/// `N(lambda)` to annihilate every root, which holds whenever the action
/// is elliptic and also whenever `lambda` itself is norm-killed; the
/// returned report is asserted to recover `L` exactly.
pub fn realize_twisted_levi(
    datum: &RootDatum,
    action: &GaloisAction,
    lambda: &[Int],
) -> Result<(Int, TorsionCocharacter, CentralizerReport)> {
    if lambda.len() != datum.rank() {
        return Err(Error::InvalidInput("lambda has wrong length".into()));
    }
    let levi = Subsystem::new(
        (0..datum.num_roots())
            .filter(|&i| dot(lambda, datum.root(i)).is_zero())
            .collect(),
    );
    if !action.stabilizes(&levi) {
        return Err(Error::NotStable);
    }
    let (norm, _) = norm_and_augmentation(action);
    let n_lambda = norm.mul_vec(lambda);
    for i in 0..datum.num_roots() {
        if !dot(&n_lambda, datum.root(i)).is_zero() {
            return Err(Error::NotElliptic { root: i });
        }
    }
    let order = Int::from(action.order());
    let mu: Vec<Int> = lambda
        .iter()
        .zip(&n_lambda)
        .map(|(l, nl)| &order * l - nl)
        .collect();
    if mu.iter().all(|x| x.is_zero()) {
        if levi.len() == datum.num_roots() {
            let nu = TorsionCocharacter::zero(datum.rank());
            let report = gamma_centralizer(datum, &nu, action)?;
            return Ok((Int::one(), nu, report));
        }
        return Err(Error::DegenerateMu);
    }
    let mut bound = Int::zero();
    for g in &action.elements {
        let gmu = g.mul_vec(&mu);
        for i in 0..datum.num_roots() {
            let p = dot(&gmu, datum.root(i)).abs();
            if p > bound {
                bound = p;
            }
        }
    }
    let n = bound + Int::one();
    let nu = TorsionCocharacter::from_numerator(&mu, &n);
    let report = gamma_centralizer(datum, &nu, action)?;
    assert_eq!(
        report.gamma_centralizer, levi,
        "realization postcondition failed: centralizer of the averaged \
         cocharacter must equal the zero set of lambda"
    );
    Ok((n, nu, report))
}

/// One enumerated character at level `n`: a torsion cocharacter pairing
/// integrally with every root of the Levi, its centralizer report, and the
/// Levi-suitability verdict.
#[derive(Clone, Debug)]
pub struct LeviSuitableEntry {
    pub nu: TorsionCocharacter,
    pub report: CentralizerReport,
    pub levi_suitable: bool,
}

const ENUMERATION_LIMIT: u64 = 1_000_000;

/// Enumerate `Hom(mu_n, Z(M))` for a stable Levi subsystem `m_sub`: all
/// `nu in (1/n) X_* / X_*` pairing integrally with every root of `m_sub`,
/// in lexicographic numerator order, each with its Galois-intersected
/// centralizer report (always containing `m_sub`).
pub fn levi_suitable_characters(
    datum: &RootDatum,
    m_sub: &Subsystem,
    action: &GaloisAction,
    n: u64,
) -> Result<Vec<LeviSuitableEntry>> {
    if n == 0 {
        return Err(Error::InvalidInput("level must be >= 1".into()));
    }
    if !action.stabilizes(m_sub) {
        return Err(Error::NotStable);
    }
    if !is_levi_subsystem(datum, m_sub)? {
        return Err(Error::NotLevi);
    }
    let rank = datum.rank() as u32;
    if n.checked_pow(rank)
        .is_none_or(|total| total > ENUMERATION_LIMIT)
    {
        return Err(Error::TooLarge(format!(
            "n^rank = {n}^{rank} exceeds {ENUMERATION_LIMIT}"
        )));
    }
    let n_int = Int::from(n);
    let mut out = Vec::new();
    let mut numerator = vec![0u64; datum.rank()];
    loop {
        let numerator_int: Vec<Int> = numerator.iter().map(|&x| Int::from(x)).collect();
        let nu = TorsionCocharacter::from_numerator(&numerator_int, &n_int);
        let in_center = m_sub
            .root_indices
            .iter()
            .all(|&i| nu.pairs_integrally(datum.root(i)));
        if in_center {
            let report = gamma_centralizer(datum, &nu, action)?;
            debug_assert!(m_sub
                .root_indices
                .iter()
                .all(|&i| report.gamma_centralizer.contains(i)));
            let levi_suitable = report.is_levi_regular;
            out.push(LeviSuitableEntry {
                nu,
                report,
                levi_suitable,
            });
        }
        // lexicographic increment over [0, n)^rank
        let mut pos = datum.rank();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            numerator[pos] += 1;
            if numerator[pos] < n {
                break;
            }
            numerator[pos] = 0;
        }
    }
}

/// Group enumerated characters into orbits of the rational relative Weyl
/// group of the Levi, returned as index sets into `entries` in first-seen
/// order. This is the post-processing quotient applied to the full
/// codomain; the underlying group comes from
/// [`crate::galois::relative_weyl_f`].
pub fn group_by_relative_weyl(
    datum: &RootDatum,
    m_sub: &Subsystem,
    action: &crate::galois::GaloisAction,
    entries: &[LeviSuitableEntry],
) -> Result<Vec<Vec<usize>>> {
    let report = crate::galois::relative_weyl_f(datum, m_sub, action)?;
    let mut orbit_of = vec![usize::MAX; entries.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..entries.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![i];
        orbit_of[i] = id;
        for w in &report.f_rational_elements {
            let image = entries[i].nu.transformed(w);
            for (j, other) in entries.iter().enumerate() {
                if orbit_of[j] == usize::MAX && other.nu == image {
                    orbit_of[j] = id;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_action;
    use crate::linalg::{int, rat};
    use crate::rootdata::{build_root_datum, torus, Family, Isogeny, RootDatum};

    fn inversion(rank: usize) -> IntMatrix {
        IntMatrix::identity(rank).neg()
    }

    #[test]
    fn tn_norm_one_quadratic() {
        let t1 = torus(1);
        let action = build_action(&t1, &[inversion(1)]).unwrap();
        let r = tn_group_torus(1, &action, &int(2)).unwrap();
        assert_eq!(r.group.invariant_factors, vec![int(4)]);
        assert_eq!(r.kernel_basis, vec![vec![int(1)]]);
    }

    #[test]
    fn tn_trivial_action() {
        let t2 = torus(2);
        let action = build_action(&t2, &[]).unwrap();
        let r = tn_group_torus(2, &action, &int(5)).unwrap();
        assert!(r.group.is_trivial());
    }

    #[test]
    fn tn_swap_res_torus() {
        let t2 = torus(2);
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let action = build_action(&t2, &[swap]).unwrap();
        let r = tn_group_torus(2, &action, &int(2)).unwrap();
        assert_eq!(r.group.invariant_factors, vec![int(2)]);
    }

    #[test]
    fn band_image_basics() {
        let t1 = torus(1);
        let inv = build_action(&t1, &[inversion(1)]).unwrap();
        // zero is always in the image
        let (ok, w) = band_image_contains(&t1, &inv, &TorsionCocharacter::zero(1));
        assert!(ok);
        assert_eq!(w, Some(vec![int(0)]));
        // norm vanishes identically: everything is in the image
        let nu = TorsionCocharacter::new(&[rat(3, 4)]);
        let (ok, w) = band_image_contains(&t1, &inv, &nu);
        assert!(ok);
        assert_eq!(w, Some(vec![int(3)]));
        // trivial action: norm is the identity, 1/2 has no norm-killed lift
        let triv = build_action(&t1, &[]).unwrap();
        let (ok, w) = band_image_contains(&t1, &triv, &TorsionCocharacter::new(&[rat(1, 2)]));
        assert!(!ok);
        assert!(w.is_none());
    }

    #[test]
    fn realize_zero_lambda() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&g2, &[inversion(2)]).unwrap();
        let (n, nu, report) = realize_twisted_levi(&g2, &action, &[int(0), int(0)]).unwrap();
        assert_eq!(n, int(1));
        assert!(nu.is_zero());
        assert_eq!(report.gamma_centralizer, Subsystem::full(&g2));
    }

    #[test]
    fn realize_g2_a1_levi() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&g2, &[inversion(2)]).unwrap();
        // lambda = coweight with <lambda, a> = 0, <lambda, b> = 1
        let (n, nu, report) = realize_twisted_levi(&g2, &action, &[int(0), int(1)]).unwrap();
        assert_eq!(n, int(5)); // mu = 2*lambda, max pairing 4
        assert_eq!(nu.denominator(), &int(5));
        let a = g2.index_of_root(&[int(1), int(0)]).unwrap();
        let expected = Subsystem::new(vec![a, g2.negative_of(a)]);
        assert_eq!(report.gamma_centralizer, expected);
        assert!(report.is_levi_regular);
    }

    /// Rank-2 torus of SL3 spanned by the first two diagonal coordinates,
    /// with the quadratic action swapping them.
    fn sl3_res_datum() -> RootDatum {
        RootDatum::new(
            2,
            vec![
                vec![int(1), int(-1)],
                vec![int(-1), int(1)],
                vec![int(1), int(2)],
                vec![int(-1), int(-2)],
                vec![int(2), int(1)],
                vec![int(-2), int(-1)],
            ],
            vec![
                vec![int(1), int(-1)],
                vec![int(-1), int(1)],
                vec![int(0), int(1)],
                vec![int(0), int(-1)],
                vec![int(1), int(0)],
                vec![int(-1), int(0)],
            ],
            "sl3-res",
        )
        .unwrap()
    }

    #[test]
    fn realize_sl3_res_torus() {
        // non-elliptic action, but lambda is norm-killed, so the
        // construction applies and lands on the torus
        let d = sl3_res_datum();
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let action = build_action(&d, &[swap]).unwrap();
        assert!(!crate::galois::is_elliptic(&d, &action));
        let lambda = vec![int(1), int(-1)];
        let (_, nu, report) = realize_twisted_levi(&d, &action, &lambda).unwrap();
        assert!(report.gamma_centralizer.is_empty());
        let (ok, witness) = band_image_contains(&d, &action, &nu);
        assert!(ok && witness.is_some());
    }

    #[test]
    fn realize_rejects_non_elliptic_bad_lambda() {
        // trivial action on SL2: norm = id, N(lambda) pairs nonzero
        let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&sl2, &[]).unwrap();
        assert!(matches!(
            realize_twisted_levi(&sl2, &action, &[int(1)]),
            Err(Error::NotElliptic { .. })
        ));
    }

    #[test]
    fn levi_suitable_sl2_quarters() {
        let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&sl2, &[inversion(1)]).unwrap();
        let entries = levi_suitable_characters(&sl2, &Subsystem::empty(), &action, 4).unwrap();
        assert_eq!(entries.len(), 4);
        let full: Vec<bool> = entries
            .iter()
            .map(|e| e.report.gamma_centralizer == Subsystem::full(&sl2))
            .collect();
        assert_eq!(full, vec![true, false, true, false]);
        assert!(entries.iter().all(|e| e.levi_suitable));
    }

    #[test]
    fn levi_suitable_full_subsystem_lists_central() {
        let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&sl2, &[inversion(1)]).unwrap();
        let entries = levi_suitable_characters(&sl2, &Subsystem::full(&sl2), &action, 2).unwrap();
        // both classes k/2 pair integrally with the root (2)
        assert_eq!(entries.len(), 2);
        assert!(entries
            .iter()
            .all(|e| e.report.gamma_centralizer == Subsystem::full(&sl2) && e.levi_suitable));
    }

    #[test]
    fn levi_suitable_g2_includes_non_levi_class() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&g2, &[inversion(2)]).unwrap();
        let entries = levi_suitable_characters(&g2, &Subsystem::empty(), &action, 2).unwrap();
        assert_eq!(entries.len(), 4);
        let half = TorsionCocharacter::new(&[rat(1, 2), rat(0, 1)]);
        let hit = entries.iter().find(|e| e.nu == half).unwrap();
        assert!(!hit.levi_suitable);
    }

    #[test]
    fn relative_weyl_orbits_of_characters() {
        // SL2, anisotropic torus, level 4: the Weyl group acts by
        // inversion on the classes k/4, giving orbits {0}, {1/4, 3/4},
        // {1/2}
        let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&sl2, &[inversion(1)]).unwrap();
        let entries = levi_suitable_characters(&sl2, &Subsystem::empty(), &action, 4).unwrap();
        let orbits = group_by_relative_weyl(&sl2, &Subsystem::empty(), &action, &entries).unwrap();
        assert_eq!(orbits, vec![vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn levi_suitable_guards() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let action = build_action(&g2, &[inversion(2)]).unwrap();
        assert!(matches!(
            levi_suitable_characters(&g2, &Subsystem::empty(), &action, 1001),
            Err(Error::TooLarge(_))
        ));
        let b = g2.index_of_root(&[int(0), int(1)]).unwrap();
        let non_levi = Subsystem::new(vec![
            b,
            g2.negative_of(b),
            g2.index_of_root(&[int(2), int(1)]).unwrap(),
            g2.negative_of(g2.index_of_root(&[int(2), int(1)]).unwrap()),
        ]);
        assert!(matches!(
            levi_suitable_characters(&g2, &non_levi, &action, 2),
            Err(Error::NotLevi)
        ));
    }
}
