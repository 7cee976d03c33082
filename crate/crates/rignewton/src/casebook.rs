//! Executable casebook: each case recomputes a worked example from scratch
//! through the public operations of the other modules and reports every
//! claim with its expected and computed values.
//!
//! Claims are labeled `[full]` when the checked statement is the entire
//! assertion and `[shadow]` when only a computable fragment of a larger
//! structural statement is checked. Discrepancies between a source's
//! printed value and the value forced by its own derivation are reported
//! as explicit claims instead of being silently repaired.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::build_action;
use crate::linalg::{int, rat, IntMatrix};
use crate::newton::{gamma_centralizer, TorsionCocharacter};
use crate::rootdata::{
    build_root_datum, closed_subsystems_of_type, parse_cartan_type, torus, weyl_group, Family,
    Isogeny, RootDatum, Subsystem,
};
use crate::tate::{band_image_contains, realize_twisted_levi, tn_group_torus};

/// One checked statement: passes iff the expected and computed renderings
/// agree exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn claim(
    description: impl Into<String>,
    expected: impl ToString,
    computed: impl ToString,
) -> Claim {
    let expected = expected.to_string();
    let computed = computed.to_string();
    let pass = expected == computed;
    Claim {
        description: description.into(),
        expected,
        computed,
        pass,
    }
}

/// Structured report for one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case_id: String,
    pub claims: Vec<Claim>,
    pub paper_anchor: String,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

/// Case inventory, in report order.
pub const CASE_IDS: [&str; 9] = [
    "g2-nonadm",
    "sp8-no-embedding",
    "sl3-res-torus",
    "sl2-quaternion-newton",
    "pgl2-coinvariants",
    "pgl2-mobius",
    "g2-appendix-arithmetic",
    "weyl-orders",
    "tn-norm-one",
];

pub fn run_case(case_id: &str) -> Result<CaseReport> {
    match case_id {
        "g2-nonadm" => Ok(g2_nonadm()),
        "sp8-no-embedding" => sp8_no_embedding(),
        "sl3-res-torus" => sl3_res_torus(),
        "sl2-quaternion-newton" => sl2_quaternion_newton(),
        "pgl2-coinvariants" => Ok(pgl2_coinvariants()),
        "pgl2-mobius" => Ok(pgl2_mobius()),
        "g2-appendix-arithmetic" => g2_appendix_arithmetic(),
        "weyl-orders" => weyl_orders(),
        "tn-norm-one" => tn_norm_one(),
        other => Err(Error::UnknownCase(other.to_string())),
    }
}

/// Run every case in inventory order.
pub fn run_all() -> Vec<CaseReport> {
    CASE_IDS
        .iter()
        .map(|id| run_case(id).expect("inventory ids are valid"))
        .collect()
}

fn inversion(rank: usize) -> IntMatrix {
    IntMatrix::identity(rank).neg()
}

/// Positive members of a subsystem rendered by simple-root coefficients.
fn positive_coefficients(datum: &RootDatum, sub: &Subsystem) -> String {
    let mut parts: Vec<String> = sub
        .root_indices
        .iter()
        .filter(|&&i| crate::rootdata::lex_positive(datum.root(i)))
        .map(|&i| {
            let coords: Vec<String> = datum.root(i).iter().map(|x| x.to_string()).collect();
            format!("({})", coords.join(","))
        })
        .collect();
    parts.sort();
    parts.join(" ")
}

fn g2_nonadm() -> CaseReport {
    let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
    let action = build_action(&g2, &[inversion(2)]).unwrap();
    // the order-2 class pairing 1/2 with the short simple root a and 0
    // with the long simple root b
    let nu = TorsionCocharacter::new(&[rat(1, 2), rat(0, 1)]);
    let report = gamma_centralizer(&g2, &nu, &action).unwrap();
    let claims = vec![
        claim(
            "[full] Cartan type of the intersected centralizer",
            "A1xA1",
            &report.type_gamma,
        ),
        claim(
            "[full] positive centralizer roots by (a,b)-coefficients",
            "(0,1) (2,1)",
            positive_coefficients(&g2, &report.gamma_centralizer),
        ),
        claim(
            "[full] centralizer is a Levi subsystem",
            false,
            report.is_levi_regular,
        ),
        claim(
            "[full] single and intersected centralizers agree (cyclic witness)",
            true,
            report.is_cyclic_witness,
        ),
    ];
    CaseReport {
        case_id: "g2-nonadm".into(),
        claims,
        paper_anchor: "G2, anisotropic torus split by a quadratic extension with inversion \
                       action: the 2-torsion class v(-1) has centralizer of type A1xA1 \
                       (an SO4) spanned by b and 2a+b, and that subsystem is not a twisted \
                       Levi subgroup"
            .into(),
    }
}

fn sp8_no_embedding() -> Result<CaseReport> {
    let c4 = build_root_datum(Family::C, 4, Isogeny::SimplyConnected)?;
    let b4 = build_root_datum(Family::B, 4, Isogeny::Adjoint)?;
    let a3 = build_root_datum(Family::A, 3, Isogeny::SimplyConnected)?;
    let target = parse_cartan_type("C2xC2")?;
    let in_b4 = closed_subsystems_of_type(&b4, &target)?;
    let in_c4 = closed_subsystems_of_type(&c4, &target)?;
    let a1a1 = parse_cartan_type("A1xA1")?;
    let in_a3 = closed_subsystems_of_type(&a3, &a1a1)?;
    let claims = vec![
        claim(
            "[full] closed subsystems of type C2xC2 in B4 = R(SO9), the dual side where \
             the embedding obstruction lives",
            0,
            in_b4.len(),
        ),
        claim(
            "[full] positive control: A3 contains a closed A1xA1",
            true,
            !in_a3.is_empty(),
        ),
        claim(
            "[discrepancy noted] the C-side system C4 itself does contain closed C2xC2 \
             subsystems (the centralizer of an order-2 element, one per coordinate pairing), \
             so the stated C-side reading is falsified by enumeration; the obstruction is \
             the B4 count above",
            3,
            in_c4.len(),
        ),
    ];
    Ok(CaseReport {
        case_id: "sp8-no-embedding".into(),
        claims,
        paper_anchor: "Sp8 contains H = Sp4 x Sp4 as the centralizer of an order-2 element, \
                       yet dual(H) = SO5 x SO5 does not embed into dual(Sp8) = SO9: the dual \
                       root system B4 has no closed subsystem of type B2xB2 = C2xC2"
            .into(),
    })
}

/// Rank-2 maximal torus of SL3 inside the standard GL2 Levi, coordinates
/// (m, n) -> diag(t^m, t^n, t^(-m-n)); the quadratic Galois action swaps
/// the two coordinates.
pub fn sl3_res_datum() -> RootDatum {
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
    .expect("fixed datum is valid")
}

fn sl3_res_torus() -> Result<CaseReport> {
    let d = sl3_res_datum();
    let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
    let action = build_action(&d, &[swap])?;
    let lambda = vec![int(1), int(-1)];
    let (norm, _) = crate::galois::norm_and_augmentation(&action);
    let killed = norm.mul_vec(&lambda).iter().all(|x| x.is_zero());
    let (level, nu, report) = realize_twisted_levi(&d, &action, &lambda)?;
    let (in_image, witness) = band_image_contains(&d, &action, &nu);
    let claims = vec![
        claim("[full] lambda = (1,-1) is killed by the norm", true, killed),
        claim(
            "[full] the torsion class lambda-average/level lies in the band image",
            true,
            in_image,
        ),
        claim(
            "[full] the recovered witness is norm-killed",
            true,
            witness
                .map(|w| norm.mul_vec(&w).iter().all(|x| x.is_zero()))
                .unwrap_or(false),
        ),
        claim(
            "[full] intersected centralizer at the computed level is the torus",
            "T2",
            &report.type_gamma,
        ),
        claim(
            "[full] the centralizer is a (twisted) Levi subsystem",
            true,
            report.is_levi_regular,
        ),
        claim(
            "[full] computed level exceeds every pairing of the orbit",
            "5",
            level,
        ),
    ];
    Ok(CaseReport {
        case_id: "sl3-res-torus".into(),
        claims,
        paper_anchor: "SL3 with the rank-2 torus of the standard GL2 Levi twisted by a \
                       quadratic swap: a norm-killed cocharacter with full-torus centralizer \
                       realizes the non-elliptic maximal torus as a Newton centralizer"
            .into(),
    })
}

fn sl2_quaternion_newton() -> Result<CaseReport> {
    let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected)?;
    let action = build_action(&sl2, &[inversion(1)])?;
    let pattern: Vec<&str> = (0..4)
        .map(|k| {
            let nu = TorsionCocharacter::new(&[rat(k, 4)]);
            let report = gamma_centralizer(&sl2, &nu, &action).unwrap();
            if report.gamma_centralizer == Subsystem::full(&sl2) {
                "SL2"
            } else {
                "T"
            }
        })
        .collect();
    // the attached component groups, computed from the standard models of
    // the two named groups: V4 generated in PGL2 by diag(1,-1) and the
    // antidiagonal flip, Q8 generated in SL2 by diag(i,-i) and the
    // rotation [[0,-1],[1,0]]
    let i = qi::Gaussian::i();
    let one = qi::Gaussian::one();
    let zero = qi::Gaussian::zero();
    let identity = qi::M2::new(one.clone(), zero.clone(), zero.clone(), one.clone());
    let q8_gens = vec![
        qi::M2::new(i.clone(), zero.clone(), zero.clone(), i.neg()),
        qi::M2::new(zero.clone(), one.neg(), one.clone(), zero.clone()),
    ];
    let q8 = qi::group_closure(&q8_gens);
    let involutions = q8
        .iter()
        .filter(|m| **m != identity && m.mul(m) == identity)
        .count();
    let v4_gens = vec![
        qi::M2::new(one.clone(), zero.clone(), zero.clone(), one.neg()),
        qi::M2::new(zero.clone(), one.clone(), one.clone(), zero.clone()),
    ];
    let v4 = qi::projective_closure(&v4_gens);
    let klein = v4.iter().all(|c| qi::scalar_multiple(&c.mul(c), &identity));
    let claims = vec![
        claim(
            "[full] centralizers of the classes k/4 of the coroot under inversion",
            "SL2,T,SL2,T",
            pattern.join(","),
        ),
        claim(
            "[shadow] order of the component group (Klein four V4)",
            4,
            v4.len(),
        ),
        claim(
            "[shadow] every V4 class squares to the identity class",
            true,
            klein,
        ),
        claim(
            "[shadow] order of its double cover (quaternion group)",
            8,
            q8.len(),
        ),
        claim(
            "[shadow] the double cover has a unique involution",
            1,
            involutions,
        ),
    ];
    Ok(CaseReport {
        case_id: "sl2-quaternion-newton".into(),
        claims,
        paper_anchor: "SL2 with the norm-one torus of a quadratic extension: torsion classes \
                       zeta with zeta^2 = 1 centralize all of SL2 and all others centralize \
                       the torus; the attached component groups are the Klein four group with \
                       quaternion double cover"
            .into(),
    })
}

fn pgl2_coinvariants() -> CaseReport {
    // Frobenius of the unramified cubic extension acting on the
    // augmentation-zero part of F2[C3] in the basis {g-1, g^2-1}:
    // g*(g-1) = (g^2-1) - (g-1), g*(g^2-1) = -(g-1).
    let derived = f2::M2([[1, 1], [1, 0]]);
    let printed = f2::M2([[1, 1], [0, 1]]);
    let image_size = f2::image_size(&derived.add(&f2::M2::identity()));
    let coinvariant_order = 4 / image_size;
    let claims = vec![
        claim(
            "[full] derived Frobenius matrix has order 3",
            3,
            derived.order(),
        ),
        claim(
            "[full] Frobenius - 1 is invertible over F2 (image is everything)",
            4,
            image_size,
        ),
        claim(
            "[full] Galois coinvariants are trivial",
            1,
            coinvariant_order,
        ),
        claim(
            "[discrepancy noted] the printed generator [[1,1],[0,1]] has order 2 over F2, \
             while the cubic extension forces order 3; the derived matrix is used",
            2,
            printed.order(),
        ),
    ];
    CaseReport {
        case_id: "pgl2-coinvariants".into(),
        claims,
        paper_anchor: "PGL2 over a field with sqrt(-1): the form of mu_2^2 split by the \
                       unramified cubic extension has character module F2^2 with trivial \
                       Galois coinvariants, so the projection from the band extends to a \
                       cocycle with non-toral image"
            .into(),
    }
}

fn pgl2_mobius() -> CaseReport {
    use qi::{Gaussian, ProjPoint};
    let zero = ProjPoint::affine(Gaussian::zero());
    let infinity = ProjPoint::infinity();
    let plus_one = ProjPoint::affine(Gaussian::one());
    let minus_one = ProjPoint::affine(Gaussian::one().neg());
    let plus_i = ProjPoint::affine(Gaussian::i());
    let minus_i = ProjPoint::affine(Gaussian::i().neg());

    let candidates = [
        ("{0,inf}", [zero.clone(), infinity.clone()]),
        ("{1,-1}", [plus_one.clone(), minus_one.clone()]),
        ("{i,-i}", [plus_i.clone(), minus_i.clone()]),
    ];
    let all_fixed = candidates.iter().all(|(_, set)| {
        let s_im: Vec<ProjPoint> = set.iter().map(qi::moebius_inverse).collect();
        let t_im: Vec<ProjPoint> = set.iter().map(qi::moebius_negate).collect();
        same_two_set(set, &s_im) && same_two_set(set, &t_im)
    });

    // exhaustiveness by case analysis: a fixed 2-set containing infinity
    // must contain s(inf) = 0; a finite one is {p,-p} (p = 0 is excluded
    // because s(0) = inf) with 1/p in {p,-p}, i.e. p^2 = 1 or p^2 = -1
    let s_of_infinity = qi::moebius_inverse(&infinity);
    let sols_plus = qi::sqrt_in_qi(&Gaussian::one());
    let sols_minus = qi::sqrt_in_qi(&Gaussian::i().mul(&Gaussian::i()));
    let finite_sets = sols_plus.len() / 2 + sols_minus.len() / 2;
    let claims = vec![
        claim(
            "[full] {0,inf}, {1,-1}, {i,-i} are each setwise fixed by z -> 1/z and z -> -z",
            true,
            all_fixed,
        ),
        claim(
            "[full] a fixed 2-set containing inf also contains",
            "0",
            render_point(&s_of_infinity),
        ),
        claim(
            "[full] solutions of p^2 = 1 in Q(i)",
            "-1, 1",
            render_gaussians(&sols_plus),
        ),
        claim(
            "[full] solutions of p^2 = -1 in Q(i)",
            "-i, i",
            render_gaussians(&sols_minus),
        ),
        claim("[full] total number of fixed 2-sets", 3, 1 + finite_sets),
    ];
    CaseReport {
        case_id: "pgl2-mobius".into(),
        claims,
        paper_anchor: "the Klein four subgroup of PGL2 generated by z -> 1/z and z -> -z \
                       normalizes exactly three maximal tori, the ones attached to the \
                       unordered pairs {0,inf}, {1,-1}, {sqrt(-1),-sqrt(-1)} on the \
                       projective line"
            .into(),
    }
}

fn same_two_set(a: &[qi::ProjPoint; 2], b: &[qi::ProjPoint]) -> bool {
    (b[0] == a[0] && b[1] == a[1]) || (b[0] == a[1] && b[1] == a[0])
}

fn render_point(p: &qi::ProjPoint) -> String {
    p.to_string()
}

fn render_gaussians(xs: &[qi::Gaussian]) -> String {
    let mut parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    parts.sort();
    parts.join(", ")
}

fn g2_appendix_arithmetic() -> Result<CaseReport> {
    let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected)?;
    let weyl_order = weyl_group(&g2)?.len();
    let claims = vec![
        claim(
            "[shadow] 7 does not divide 12 (Sylow step)",
            false,
            12 % 7 == 0,
        ),
        claim(
            "[shadow] 8 does not divide 12 (Sylow step)",
            false,
            12 % 8 == 0,
        ),
        claim(
            "[shadow] order of GL3(F2) by enumeration",
            168,
            f2::gl3_count(),
        ),
        claim("[shadow] order of W(G2)", 12, weyl_order),
        claim(
            "[shadow] F8* acts simply transitively on F8 minus 0",
            true,
            f8::simply_transitive(),
        ),
    ];
    Ok(CaseReport {
        case_id: "g2-appendix-arithmetic".into(),
        claims,
        paper_anchor: "G2 over an algebraically closed field: N(A)/A = GL3(F2) of order 168 \
                       for the mu_2^3 subgroup A; a subgroup of order 168 cannot normalize a \
                       maximal torus because 7 and 8 exceed the divisors of |W(G2)| = 12 and \
                       F8* is simply transitive on the nonzero vectors"
            .into(),
    })
}

fn weyl_orders() -> Result<CaseReport> {
    let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected)?;
    let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected)?;
    let c4 = build_root_datum(Family::C, 4, Isogeny::SimplyConnected)?;
    let claims = vec![
        claim(
            "[full] |W(G2)| (dihedral of order 12)",
            12,
            weyl_group(&g2)?.len(),
        ),
        claim("[full] |W(A2)| = 3!", 6, weyl_group(&a2)?.len()),
        claim("[full] |W(C4)| = 2^4 * 4!", 384, weyl_group(&c4)?.len()),
    ];
    Ok(CaseReport {
        case_id: "weyl-orders".into(),
        claims,
        paper_anchor: "Weyl group orders used across the worked examples: the dihedral group \
                       of order 12 for G2, S3 for A2, and the hyperoctahedral group for C4"
            .into(),
    })
}

fn tn_norm_one() -> Result<CaseReport> {
    let t1 = torus(1);
    let action = build_action(&t1, &[inversion(1)])?;
    let result = tn_group_torus(1, &action, &int(2))?;
    // brute force: the kernel of the norm is all of Z, the relations are
    // (sigma - 1)(2k) = -4k, so count residues of Z / 4Z directly
    let mut classes: Vec<i64> = Vec::new();
    for x in -8i64..=8 {
        if !classes.iter().any(|&c| (x - c) % 4 == 0) {
            classes.push(x);
        }
    }
    let claims = vec![
        claim(
            "[full] invariant factors of ker(N)/I*(2 X)",
            "Z/4",
            &result.group,
        ),
        claim("[full] brute-force coset count", 4, classes.len()),
    ];
    Ok(CaseReport {
        case_id: "tn-norm-one".into(),
        claims,
        paper_anchor: "norm-one torus of a quadratic extension at level 2: the finite \
                       Tate-Nakayama group ker(N)/I*(2X) is cyclic of order 4"
            .into(),
    })
}

/// Exact arithmetic in Q(i) and on the projective line over it.
pub mod qi {
    use num_traits::{One, Signed, Zero};

    use crate::linalg::{Int, Rat};

    /// An element of Q(i) as an exact pair (re, im) with i^2 = -1.
    #[derive(Clone, Debug, PartialEq, Eq, Hash)]
    pub struct Gaussian {
        pub re: Rat,
        pub im: Rat,
    }

    impl Gaussian {
        pub fn new(re: Rat, im: Rat) -> Self {
            Gaussian { re, im }
        }

        pub fn zero() -> Self {
            Gaussian::new(Rat::zero(), Rat::zero())
        }

        pub fn one() -> Self {
            Gaussian::new(Rat::one(), Rat::zero())
        }

        pub fn i() -> Self {
            Gaussian::new(Rat::zero(), Rat::one())
        }

        pub fn is_zero(&self) -> bool {
            self.re.is_zero() && self.im.is_zero()
        }

        pub fn add(&self, other: &Gaussian) -> Gaussian {
            Gaussian::new(&self.re + &other.re, &self.im + &other.im)
        }

        pub fn mul(&self, other: &Gaussian) -> Gaussian {
            Gaussian::new(
                &self.re * &other.re - &self.im * &other.im,
                &self.re * &other.im + &self.im * &other.re,
            )
        }

        pub fn neg(&self) -> Gaussian {
            Gaussian::new(-self.re.clone(), -self.im.clone())
        }

        pub fn inverse(&self) -> Gaussian {
            assert!(!self.is_zero(), "inverse of zero");
            let norm = &self.re * &self.re + &self.im * &self.im;
            Gaussian::new(&self.re / &norm, -(&self.im / &norm))
        }
    }

    impl std::fmt::Display for Gaussian {
        fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            if self.im.is_zero() {
                write!(f, "{}", self.re)
            } else if self.re.is_zero() {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-self.im.clone()).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}i", self.im)
                }
            } else {
                write!(
                    f,
                    "{}{}{}i",
                    self.re,
                    if self.im.is_negative() { "" } else { "+" },
                    self.im
                )
            }
        }
    }

    /// Exact square root of a non-negative rational, if it is a square.
    pub fn rational_sqrt(x: &Rat) -> Option<Rat> {
        if x.is_negative() {
            return None;
        }
        let num = x.numer();
        let den = x.denom();
        let sn = num.sqrt();
        let sd = den.sqrt();
        if &(&sn * &sn) == num && &(&sd * &sd) == den {
            Some(Rat::new(sn, sd))
        } else {
            None
        }
    }

    /// All square roots of `c` inside Q(i), exactly.
    pub fn sqrt_in_qi(c: &Gaussian) -> Vec<Gaussian> {
        if c.is_zero() {
            return vec![Gaussian::zero()];
        }
        let mut out: Vec<Gaussian> = Vec::new();
        let mut push = |g: Gaussian| {
            debug_assert_eq!(g.mul(&g), *c);
            if !out.contains(&g) {
                let neg = g.neg();
                out.push(g);
                if !out.contains(&neg) {
                    out.push(neg);
                }
            }
        };
        if c.im.is_zero() {
            if let Some(s) = rational_sqrt(&c.re) {
                push(Gaussian::new(s, Rat::zero()));
            }
            if let Some(s) = rational_sqrt(&-c.re.clone()) {
                push(Gaussian::new(Rat::zero(), s));
            }
            return out;
        }
        // (a+bi)^2 = c with im != 0: 4a^4 - 4 re a^2 - im^2 = 0
        let norm = &c.re * &c.re + &c.im * &c.im;
        let Some(d) = rational_sqrt(&norm) else {
            return out;
        };
        let two = Rat::from_integer(Int::from(2));
        for t in [(&c.re + &d) / &two, (&c.re - &d) / &two] {
            if t.is_positive() {
                if let Some(a) = rational_sqrt(&t) {
                    let b = &c.im / (&two * &a);
                    let cand = Gaussian::new(a, b);
                    if cand.mul(&cand) == *c {
                        push(cand);
                    }
                }
            }
        }
        out
    }

    /// A point of P^1 over Q(i), stored in the normal form `z/1` or `1/0`.
    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct ProjPoint {
        num: Gaussian,
        den: Gaussian,
    }

    impl ProjPoint {
        pub fn new(num: Gaussian, den: Gaussian) -> Self {
            assert!(!(num.is_zero() && den.is_zero()), "not a projective point");
            if den.is_zero() {
                ProjPoint {
                    num: Gaussian::one(),
                    den: Gaussian::zero(),
                }
            } else {
                ProjPoint {
                    num: num.mul(&den.inverse()),
                    den: Gaussian::one(),
                }
            }
        }

        pub fn affine(z: Gaussian) -> Self {
            ProjPoint {
                num: z,
                den: Gaussian::one(),
            }
        }

        pub fn infinity() -> Self {
            ProjPoint {
                num: Gaussian::one(),
                den: Gaussian::zero(),
            }
        }

        pub fn is_infinity(&self) -> bool {
            self.den.is_zero()
        }
    }

    impl std::fmt::Display for ProjPoint {
        fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            if self.is_infinity() {
                write!(f, "inf")
            } else {
                write!(f, "{}", self.num)
            }
        }
    }

    /// z -> 1/z as [x : y] -> [y : x].
    pub fn moebius_inverse(p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(p.den.clone(), p.num.clone())
    }

    /// z -> -z as [x : y] -> [-x : y].
    pub fn moebius_negate(p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(p.num.neg(), p.den.clone())
    }

    /// 2x2 matrix over Q(i).
    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct M2 {
        pub a: Gaussian,
        pub b: Gaussian,
        pub c: Gaussian,
        pub d: Gaussian,
    }

    impl M2 {
        pub fn new(a: Gaussian, b: Gaussian, c: Gaussian, d: Gaussian) -> Self {
            M2 { a, b, c, d }
        }

        pub fn mul(&self, o: &M2) -> M2 {
            M2 {
                a: self.a.mul(&o.a).add(&self.b.mul(&o.c)),
                b: self.a.mul(&o.b).add(&self.b.mul(&o.d)),
                c: self.c.mul(&o.a).add(&self.d.mul(&o.c)),
                d: self.c.mul(&o.b).add(&self.d.mul(&o.d)),
            }
        }

        pub fn neg(&self) -> M2 {
            M2 {
                a: self.a.neg(),
                b: self.b.neg(),
                c: self.c.neg(),
                d: self.d.neg(),
            }
        }
    }

    /// Closure of a finite list of matrices under multiplication.
    pub fn group_closure(elements: &[M2]) -> Vec<M2> {
        let mut out: Vec<M2> = Vec::new();
        for e in elements {
            if !out.contains(e) {
                out.push(e.clone());
            }
        }
        loop {
            let mut grew = false;
            let snapshot = out.clone();
            for x in &snapshot {
                for y in &snapshot {
                    let p = x.mul(y);
                    if !out.contains(&p) {
                        out.push(p);
                        grew = true;
                    }
                }
            }
            if !grew {
                return out;
            }
        }
    }

    /// Whether `a = lambda * b` for some nonzero scalar lambda in Q(i).
    pub fn scalar_multiple(a: &M2, b: &M2) -> bool {
        let ae = [&a.a, &a.b, &a.c, &a.d];
        let be = [&b.a, &b.b, &b.c, &b.d];
        let Some(pivot) = (0..4).find(|&k| !be[k].is_zero()) else {
            return ae.iter().all(|x| x.is_zero());
        };
        if ae[pivot].is_zero() {
            return false;
        }
        let lambda = ae[pivot].mul(&be[pivot].inverse());
        (0..4).all(|k| *ae[k] == lambda.mul(be[k]))
    }

    /// Closure under multiplication of classes modulo scalars.
    pub fn projective_closure(elements: &[M2]) -> Vec<M2> {
        let mut out: Vec<M2> = vec![M2::new(
            Gaussian::one(),
            Gaussian::zero(),
            Gaussian::zero(),
            Gaussian::one(),
        )];
        for e in elements {
            if !out.iter().any(|c| scalar_multiple(e, c)) {
                out.push(e.clone());
            }
        }
        loop {
            let mut grew = false;
            let snapshot = out.clone();
            for x in &snapshot {
                for y in &snapshot {
                    let p = x.mul(y);
                    if !out.iter().any(|c| scalar_multiple(&p, c)) {
                        out.push(p);
                        grew = true;
                    }
                }
            }
            if !grew {
                return out;
            }
        }
    }
}

/// Tiny F2 matrix arithmetic for the coinvariants and GL3(F2) counts.
mod f2 {
    /// 2x2 matrix over F2.
    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct M2(pub [[u8; 2]; 2]);

    impl M2 {
        pub fn identity() -> Self {
            M2([[1, 0], [0, 1]])
        }

        pub fn mul(&self, o: &M2) -> M2 {
            let mut out = [[0u8; 2]; 2];
            for (i, row) in out.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = (0..2)
                        .map(|k| self.0[i][k] & o.0[k][j])
                        .fold(0, |a, b| a ^ b);
                }
            }
            M2(out)
        }

        pub fn add(&self, o: &M2) -> M2 {
            let mut out = [[0u8; 2]; 2];
            for (i, row) in out.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = self.0[i][j] ^ o.0[i][j];
                }
            }
            M2(out)
        }

        pub fn apply(&self, v: [u8; 2]) -> [u8; 2] {
            [
                (self.0[0][0] & v[0]) ^ (self.0[0][1] & v[1]),
                (self.0[1][0] & v[0]) ^ (self.0[1][1] & v[1]),
            ]
        }

        /// Multiplicative order (panics above 8: not a unit in context).
        pub fn order(&self) -> usize {
            let mut p = self.clone();
            for k in 1..=8 {
                if p == M2::identity() {
                    return k - 1 + 1;
                }
                p = p.mul(self);
            }
            panic!("order exceeds 8");
        }
    }

    /// Number of distinct images of F2^2 under the matrix.
    pub fn image_size(m: &M2) -> usize {
        let mut seen = Vec::new();
        for v in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let w = m.apply(v);
            if !seen.contains(&w) {
                seen.push(w);
            }
        }
        seen.len()
    }

    /// |GL3(F2)| by enumerating all 512 bit-matrices.
    pub fn gl3_count() -> usize {
        let mut count = 0;
        for bits in 0u16..512 {
            let mut m = [[0u8; 3]; 3];
            for (idx, cell) in m.iter_mut().flatten().enumerate() {
                *cell = ((bits >> idx) & 1) as u8;
            }
            // rank by Gaussian elimination over F2
            let mut r = m;
            let mut rank = 0;
            for col in 0..3 {
                if let Some(p) = (rank..3).find(|&i| r[i][col] == 1) {
                    r.swap(rank, p);
                    for i in 0..3 {
                        if i != rank && r[i][col] == 1 {
                            for j in 0..3 {
                                r[i][j] ^= r[rank][j];
                            }
                        }
                    }
                    rank += 1;
                }
            }
            if rank == 3 {
                count += 1;
            }
        }
        count
    }
}

/// F8 = F2[x]/(x^3 + x + 1) as 3-bit words.
mod f8 {
    fn mul(a: u8, b: u8) -> u8 {
        let mut prod: u8 = 0;
        for k in 0..3 {
            if (b >> k) & 1 == 1 {
                prod ^= a << k;
            }
        }
        // reduce: x^3 = x + 1, x^4 = x^2 + x
        if (prod >> 4) & 1 == 1 {
            prod ^= 0b10110;
        }
        if (prod >> 3) & 1 == 1 {
            prod ^= 0b1011;
        }
        prod & 0b111
    }

    /// For every pair of nonzero elements u, v there is exactly one c with
    /// c*u = v.
    pub fn simply_transitive() -> bool {
        for u in 1u8..8 {
            for v in 1u8..8 {
                let count = (1u8..8).filter(|&c| mul(c, u) == v).count();
                if count != 1 {
                    return false;
                }
            }
        }
        true
    }
}
