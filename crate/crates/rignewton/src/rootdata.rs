//! Based root data, Weyl groups, closed-subsystem search, Cartan-type
//! identification, and the Levi test.
//!
//! Coordinates. Data built by [`build_root_datum`] realize `X_*` as
//! `Z^rank` with basis the simple coroots (`simply_connected`) or, dually,
//! `X^*` with basis the simple roots (`adjoint`); for `G2` the two lattices
//! coincide and the coweight-basis (adjoint-style) coordinates are used for
//! either flag, so that pairing a cocharacter against a root reads off the
//! simple-root coefficients of the root. Classical `e_i`-style descriptions
//! in the documentation are glossaries; all computations address roots by
//! index and by their coefficients over a base.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    dot, dot_rat, int, rank_of_vectors, rat_solve, saturate, solve_in_lattice, to_rat_vec, Int,
    IntMatrix, Rat,
};

/// Simple-family letter. `BC` is the single label used for the rank-2
/// type where the B and C conventions name the same abstract system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
            Family::E => write!(f, "E"),
            Family::F => write!(f, "F"),
            Family::G => write!(f, "G"),
            Family::BC => write!(f, "B=C"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
}

/// A reduced root datum in fixed integer coordinates: roots live in the
/// character lattice, coroots in the cocharacter lattice, aligned by index,
/// paired by the standard dot product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Vec<Int>>,
    coroots: Vec<Vec<Int>>,
    pub label: String,
}

impl RootDatum {
    /// Validates the root-datum axioms: index-aligned pairs with
    /// `<alpha_i, alpha_i^vee> = 2`, a reduced root set closed under its own
    /// reflections, and roots in plus/minus pairs.
    pub fn new(
        rank: usize,
        roots: Vec<Vec<Int>>,
        coroots: Vec<Vec<Int>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let label = label.into();
        if roots.len() != coroots.len() {
            return Err(Error::InvalidInput(
                "roots/coroots must be index-aligned".into(),
            ));
        }
        for v in roots.iter().chain(coroots.iter()) {
            if v.len() != rank {
                return Err(Error::InvalidInput("vector length must equal rank".into()));
            }
        }
        let datum = RootDatum {
            rank,
            roots,
            coroots,
            label,
        };
        datum.validate()?;
        Ok(datum)
    }

    fn validate(&self) -> Result<()> {
        let two = int(2);
        for i in 0..self.roots.len() {
            if dot(&self.roots[i], &self.coroots[i]) != two {
                return Err(Error::InvalidInput(format!(
                    "<root #{i}, coroot #{i}> != 2"
                )));
            }
        }
        let index = self.root_index_map();
        if index.len() != self.roots.len() {
            return Err(Error::InvalidInput("duplicate roots".into()));
        }
        for (i, r) in self.roots.iter().enumerate() {
            let neg: Vec<Int> = r.iter().map(|x| -x).collect();
            if !index.contains_key(&neg) {
                return Err(Error::InvalidInput(format!("root #{i} has no negative")));
            }
        }
        // reduced: proportional roots only in +/- pairs
        for i in 0..self.roots.len() {
            for j in i + 1..self.roots.len() {
                if proportional(&self.roots[i], &self.roots[j]) {
                    let neg: Vec<Int> = self.roots[j].iter().map(|x| -x).collect();
                    if self.roots[i] != neg {
                        return Err(Error::InvalidInput(format!(
                            "roots #{i} and #{j} are proportional"
                        )));
                    }
                }
            }
        }
        // reflections permute roots and coroots
        let coroot_set: HashSet<&Vec<Int>> = self.coroots.iter().collect();
        for i in 0..self.roots.len() {
            for j in 0..self.roots.len() {
                let refl_root = self.reflect_root(i, j);
                if !index.contains_key(&refl_root) {
                    return Err(Error::InvalidInput(format!(
                        "reflection in root #{i} does not permute the roots"
                    )));
                }
            }
            for c in &self.coroots {
                let image = self.reflect_cochar_vec(i, c);
                if !coroot_set.contains(&image) {
                    return Err(Error::InvalidInput(format!(
                        "reflection in root #{i} does not permute the coroots"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &[Int] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[Int] {
        &self.coroots[i]
    }

    pub fn roots(&self) -> &[Vec<Int>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<Int>] {
        &self.coroots
    }

    pub fn root_index_map(&self) -> HashMap<Vec<Int>, usize> {
        self.roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect()
    }

    pub fn index_of_root(&self, v: &[Int]) -> Option<usize> {
        self.roots.iter().position(|r| r == v)
    }

    /// Index of `-root_i`.
    pub fn negative_of(&self, i: usize) -> usize {
        let neg: Vec<Int> = self.roots[i].iter().map(|x| -x).collect();
        self.index_of_root(&neg)
            .expect("validated datum has +/- pairs")
    }

    /// s_{alpha_i} applied to a character-lattice vector:
    /// `x - <coroot_i, x> root_i`.
    fn reflect_char_vec(&self, i: usize, x: &[Int]) -> Vec<Int> {
        let k = dot(x, &self.coroots[i]);
        x.iter()
            .zip(&self.roots[i])
            .map(|(a, r)| a - &k * r)
            .collect()
    }

    /// s_{alpha_i} applied to a cocharacter-lattice vector:
    /// `x - <x, root_i> coroot_i`.
    pub fn reflect_cochar_vec(&self, i: usize, x: &[Int]) -> Vec<Int> {
        let k = dot(x, &self.roots[i]);
        x.iter()
            .zip(&self.coroots[i])
            .map(|(a, c)| a - &k * c)
            .collect()
    }

    /// Image of root `j` under the reflection in root `i` (action on `X^*`).
    pub fn reflect_root(&self, i: usize, j: usize) -> Vec<Int> {
        self.reflect_char_vec(i, &self.roots[j])
    }

    /// Reflection in root `i` as a matrix on `X_*`.
    pub fn reflection_matrix(&self, i: usize) -> IntMatrix {
        let mut m = IntMatrix::identity(self.rank);
        // column j: e_j - <e_j, root_i> coroot_i
        for j in 0..self.rank {
            for k in 0..self.rank {
                let v = m.at(k, j) - &self.coroots[i][k] * &self.roots[i][j];
                m.set(k, j, v);
            }
        }
        m
    }

    /// Root-index permutation induced by a lattice automorphism `g` of
    /// `X_*`: `g` sends `coroot_i` to `coroot_{pi(i)}` while its
    /// inverse-transpose sends `root_i` to `root_{pi(i)}`. `None` when `g`
    /// is not an automorphism of the datum; the payload of the error case
    /// is the first root index where it fails.
    pub fn root_permutation(&self, g: &IntMatrix) -> std::result::Result<Vec<usize>, usize> {
        let index: HashMap<Vec<Int>, usize> = self
            .coroots
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let gt = g.transpose();
        let mut perm = vec![0usize; self.roots.len()];
        for i in 0..self.roots.len() {
            let image = g.mul_vec(&self.coroots[i]);
            let Some(&pi) = index.get(&image) else {
                return Err(i);
            };
            // the dual action must match on the aligned root
            if gt.mul_vec(&self.roots[pi]) != self.roots[i] {
                return Err(i);
            }
            perm[i] = pi;
        }
        Ok(perm)
    }

    /// Indices of the lexicographically positive roots (first nonzero
    /// coordinate positive); this is the frozen default positivity.
    pub fn lex_positive_roots(&self) -> Vec<usize> {
        (0..self.roots.len())
            .filter(|&i| lex_positive(&self.roots[i]))
            .collect()
    }

    /// `(i, j) -> Some(k)` whenever `root_i + root_j = root_k`.
    pub fn sum_table(&self) -> Vec<Vec<Option<usize>>> {
        let index = self.root_index_map();
        let n = self.roots.len();
        let mut table = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                let sum: Vec<Int> = self.roots[i]
                    .iter()
                    .zip(&self.roots[j])
                    .map(|(a, b)| a + b)
                    .collect();
                table[i][j] = index.get(&sum).copied();
            }
        }
        table
    }
}

fn proportional(a: &[Int], b: &[Int]) -> bool {
    for i in 0..a.len() {
        for j in 0..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

pub fn lex_positive(v: &[Int]) -> bool {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) => x.is_positive(),
        None => false,
    }
}

/// Cartan matrix `C[i][j] = <alpha_i^vee, alpha_j>` for the supported
/// families, with the minimal integral symmetrizer `d` making
/// `d_i C[i][j]` symmetric.
fn cartan_matrix(family: Family, rank: usize) -> Result<(Vec<Vec<i64>>, Vec<i64>)> {
    let chain = |n: usize| -> Vec<Vec<i64>> {
        let mut c = vec![vec![0; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c
    };
    match (family, rank) {
        (Family::A, n) if n >= 1 => Ok((chain(n), vec![1; n])),
        (Family::B, n) if n >= 2 => {
            let mut c = chain(n);
            c[n - 1][n - 2] = -2; // short last root
            let mut d = vec![2; n];
            d[n - 1] = 1;
            Ok((c, d))
        }
        (Family::C, n) if n >= 2 => {
            let mut c = chain(n);
            c[n - 2][n - 1] = -2; // long last root
            let mut d = vec![1; n];
            d[n - 1] = 2;
            Ok((c, d))
        }
        (Family::D, n) if n >= 3 => {
            let mut c = chain(n);
            // fork: the last two nodes both attach to node n-3
            c[n - 1][n - 2] = 0;
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 3] = -1;
            c[n - 3][n - 1] = -1;
            Ok((c, vec![1; n]))
        }
        (Family::G, 2) => Ok((vec![vec![2, -3], vec![-1, 2]], vec![1, 3])),
        (Family::F, 4) => {
            let mut c = chain(4);
            c[1][2] = -2;
            Ok((c, vec![1, 1, 2, 2]))
        }
        (Family::E, n) if (6..=8).contains(&n) => {
            // chain on nodes 0..n-2 with node n-1 attached to node 2
            let mut c = chain(n - 1);
            for row in c.iter_mut() {
                row.push(0);
            }
            c.push(vec![0; n]);
            c[n - 1][n - 1] = 2;
            c[n - 1][2] = -1;
            c[2][n - 1] = -1;
            Ok((c, vec![1; n]))
        }
        _ => Err(Error::UnsupportedType(format!("{family}{rank}"))),
    }
}

/// All roots as coefficient vectors over the simple roots, generated by
/// closing the simple roots under the simple reflections.
fn roots_by_coefficients(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(m) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| c[i][j] * m[j]).sum();
            let mut next = m.clone();
            next[i] -= pairing;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Based root datum for one family. `simply_connected` makes the coroots
/// span `X_*`, `adjoint` makes the roots span `X^*`.
pub fn build_root_datum(family: Family, rank: usize, isogeny: Isogeny) -> Result<RootDatum> {
    if matches!(family, Family::E | Family::F | Family::BC) {
        // E/F Cartan data exist for type recognition only
        return Err(Error::UnsupportedType(format!("{family}{rank}")));
    }
    let (c, d) = cartan_matrix(family, rank)?;
    let coeffs = roots_by_coefficients(&c);
    let n = rank;
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let effective = if family == Family::G {
        Isogeny::Adjoint
    } else {
        isogeny
    };
    for m in &coeffs {
        let half: i64 = (0..n)
            .map(|i| (0..n).map(|j| m[i] * m[j] * d[i] * c[i][j]).sum::<i64>())
            .sum::<i64>()
            / 2;
        let coroot_coeff: Vec<i64> = (0..n).map(|i| m[i] * d[i] / half).collect();
        let (root_vec, coroot_vec): (Vec<i64>, Vec<i64>) = match effective {
            Isogeny::SimplyConnected => {
                // root = C*m against the simple-coroot basis
                let r = (0..n)
                    .map(|i| (0..n).map(|j| c[i][j] * m[j]).sum())
                    .collect();
                (r, coroot_coeff)
            }
            Isogeny::Adjoint => {
                // root = m against the simple-root basis, coroot = C^T*c
                let cr = (0..n)
                    .map(|i| (0..n).map(|j| c[j][i] * coroot_coeff[j]).sum())
                    .collect();
                (m.clone(), cr)
            }
        };
        roots.push(root_vec.iter().map(|&x| int(x)).collect());
        coroots.push(coroot_vec.iter().map(|&x| int(x)).collect());
    }
    // sort by root vector: the frozen construction order
    let mut paired: Vec<(Vec<Int>, Vec<Int>)> = roots.into_iter().zip(coroots).collect();
    paired.sort();
    let (roots, coroots) = paired.into_iter().unzip();
    let iso = match isogeny {
        Isogeny::SimplyConnected => "sc",
        Isogeny::Adjoint => "ad",
    };
    RootDatum::new(rank, roots, coroots, format!("{family}{rank}:{iso}"))
}

/// Split torus of the given rank: no roots.
pub fn torus(rank: usize) -> RootDatum {
    RootDatum {
        rank,
        roots: Vec::new(),
        coroots: Vec::new(),
        label: format!("torus:{rank}"),
    }
}

/// Block-diagonal sum of the factors plus an extra central torus; central
/// coordinates are appended after all factor coordinates.
pub fn direct_sum(factors: &[RootDatum], extra_central_rank: usize) -> RootDatum {
    let rank: usize = factors.iter().map(|f| f.rank).sum::<usize>() + extra_central_rank;
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut offset = 0;
    for f in factors {
        for (r, c) in f.roots.iter().zip(&f.coroots) {
            let mut rv = vec![Int::zero(); rank];
            let mut cv = vec![Int::zero(); rank];
            rv[offset..offset + f.rank].clone_from_slice(r);
            cv[offset..offset + f.rank].clone_from_slice(c);
            roots.push(rv);
            coroots.push(cv);
        }
        offset += f.rank;
    }
    let mut label: Vec<String> = factors.iter().map(|f| f.label.clone()).collect();
    if extra_central_rank > 0 {
        label.push(format!("torus:{extra_central_rank}"));
    }
    RootDatum {
        rank,
        roots,
        coroots,
        label: if label.is_empty() {
            format!("torus:{rank}")
        } else {
            label.join("+")
        },
    }
}

/// A base: simple roots, positive roots, and one highest root per simple
/// component, all as indices into the ambient root list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseData {
    pub simple_roots: Vec<usize>,
    pub positive_roots: Vec<usize>,
    pub highest_roots: Vec<usize>,
}

impl BaseData {
    /// Partition of the simple roots into connected components, aligned
    /// with `highest_roots`.
    pub fn components(&self, datum: &RootDatum) -> Vec<Vec<usize>> {
        connected_components(datum, &self.simple_roots)
    }
}

fn connected_components(datum: &RootDatum, simples: &[usize]) -> Vec<Vec<usize>> {
    let k = simples.len();
    let mut seen = vec![false; k];
    let mut comps = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if !seen[j] && !dot(datum.coroot(simples[i]), datum.root(simples[j])).is_zero() {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort();
        comps.push(comp.into_iter().map(|p| simples[p]).collect());
    }
    comps
}

/// Base and highest roots for the positivity determined by
/// `regular_vector`, or by the frozen default (lexicographic positivity of
/// the root vectors) when absent.
pub fn base_and_highest(datum: &RootDatum, regular_vector: Option<&[Rat]>) -> Result<BaseData> {
    let positive: Vec<usize> = match regular_vector {
        Some(v) => {
            if v.len() != datum.rank() {
                return Err(Error::InvalidInput(
                    "regular vector has wrong length".into(),
                ));
            }
            let mut pos = Vec::new();
            for i in 0..datum.num_roots() {
                let p = dot_rat(v, datum.root(i));
                if p.is_zero() {
                    return Err(Error::NotRegular { root: i });
                }
                if p > Rat::zero() {
                    pos.push(i);
                }
            }
            pos
        }
        None => datum.lex_positive_roots(),
    };
    let index = datum.root_index_map();
    let pos_set: HashSet<usize> = positive.iter().copied().collect();
    let mut simple = Vec::new();
    for &i in &positive {
        let decomposable = positive.iter().any(|&j| {
            if i == j {
                return false;
            }
            let diff: Vec<Int> = datum
                .root(i)
                .iter()
                .zip(datum.root(j))
                .map(|(a, b)| a - b)
                .collect();
            match index.get(&diff) {
                Some(&k) => pos_set.contains(&k),
                None => false,
            }
        });
        if !decomposable {
            simple.push(i);
        }
    }
    // highest root per component: maximal height over the positives
    // supported on the component
    let comps = connected_components(datum, &simple);
    let simple_vecs: Vec<Vec<Rat>> = simple.iter().map(|&i| to_rat_vec(datum.root(i))).collect();
    let mut highest = Vec::new();
    for comp in &comps {
        let comp_positions: Vec<usize> = comp
            .iter()
            .map(|ci| simple.iter().position(|s| s == ci).unwrap())
            .collect();
        let mut best: Option<(Rat, usize)> = None;
        for &p in &positive {
            let coeffs = rat_solve(&simple_vecs, &to_rat_vec(datum.root(p)))
                .expect("positive root must lie in the span of the simples");
            let in_comp = coeffs
                .iter()
                .enumerate()
                .all(|(k, c)| c.is_zero() || comp_positions.contains(&k));
            if !in_comp {
                continue;
            }
            let height: Rat = coeffs.iter().cloned().sum();
            match &best {
                Some((h, _)) if *h >= height => {}
                _ => best = Some((height, p)),
            }
        }
        highest.push(best.expect("component has a positive root").1);
    }
    Ok(BaseData {
        simple_roots: simple,
        positive_roots: positive,
        highest_roots: highest,
    })
}

/// The full Weyl group as matrices on `X_*`, generated by the coroot
/// reflections, in breadth-first discovery order from the identity.
pub fn weyl_group(datum: &RootDatum) -> Result<Vec<IntMatrix>> {
    if datum.rank() > 8 {
        return Err(Error::TooLarge(format!("rank {} > 8", datum.rank())));
    }
    const LIMIT: usize = 1_000_000;
    let gens: Vec<IntMatrix> = (0..datum.num_roots())
        .map(|i| datum.reflection_matrix(i))
        .collect();
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let id = IntMatrix::identity(datum.rank());
    seen.insert(id.clone());
    order.push(id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next = g.mul(&w);
            if seen.insert(next.clone()) {
                if order.len() >= LIMIT {
                    return Err(Error::TooLarge(format!("Weyl group exceeds {LIMIT}")));
                }
                order.push(next.clone());
                queue.push_back(next.clone());
            }
        }
    }
    Ok(order)
}

/// A symmetric closed subset of the ambient root list, canonically a
/// sorted index set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Subsystem {
    pub root_indices: Vec<usize>,
}

impl Subsystem {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Subsystem {
            root_indices: indices,
        }
    }

    pub fn empty() -> Self {
        Subsystem {
            root_indices: Vec::new(),
        }
    }

    pub fn full(datum: &RootDatum) -> Self {
        Subsystem {
            root_indices: (0..datum.num_roots()).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.root_indices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.root_indices.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.root_indices.binary_search(&i).is_ok()
    }

    /// Checks symmetry and closure inside `datum`.
    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        for &i in &self.root_indices {
            if i >= datum.num_roots() {
                return Err(Error::InvalidSubsystem(format!("index {i} out of range")));
            }
            if !self.contains(datum.negative_of(i)) {
                return Err(Error::InvalidSubsystem(format!(
                    "not symmetric: missing negative of root #{i}"
                )));
            }
        }
        let index = datum.root_index_map();
        for &i in &self.root_indices {
            for &j in &self.root_indices {
                let sum: Vec<Int> = datum
                    .root(i)
                    .iter()
                    .zip(datum.root(j))
                    .map(|(a, b)| a + b)
                    .collect();
                if let Some(&k) = index.get(&sum) {
                    if !self.contains(k) {
                        return Err(Error::InvalidSubsystem(format!(
                            "not closed: root #{i} + root #{j} = root #{k} is missing"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Cartan type: simple components plus the rank of the central torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub components: Vec<(Family, usize)>,
    pub central_torus_rank: usize,
}

impl CartanType {
    /// Normalizes: rank-2 B/C components become the `BC` label, components
    /// are sorted.
    pub fn new(components: Vec<(Family, usize)>, central_torus_rank: usize) -> Self {
        let mut components: Vec<(Family, usize)> = components
            .into_iter()
            .map(|(f, r)| match (f, r) {
                (Family::B, 2) | (Family::C, 2) => (Family::BC, 2),
                other => other,
            })
            .collect();
        components.sort();
        CartanType {
            components,
            central_torus_rank,
        }
    }

    /// Component-wise equality, ignoring the central torus.
    pub fn same_components(&self, other: &CartanType) -> bool {
        self.components == other.components
    }

    pub fn semisimple_rank(&self) -> usize {
        self.components.iter().map(|&(_, r)| r).sum()
    }
}

impl std::fmt::Display for CartanType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.components.is_empty() {
            write!(f, "T{}", self.central_torus_rank)
        } else {
            let parts: Vec<String> = self
                .components
                .iter()
                .map(|(fam, r)| format!("{fam}{r}"))
                .collect();
            write!(f, "{}", parts.join("x"))?;
            if self.central_torus_rank > 0 {
                write!(f, "xT{}", self.central_torus_rank)?;
            }
            Ok(())
        }
    }
}

/// Parse "C2xC2", "A1xA1", "G2", "T2", "0" into a Cartan type.
pub fn parse_cartan_type(s: &str) -> Result<CartanType> {
    let s = s.trim();
    if s.is_empty() || s == "0" || s == "1" {
        return Ok(CartanType::new(Vec::new(), 0));
    }
    let mut components = Vec::new();
    let mut central = 0usize;
    for token in s.split(['x', '*']) {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let (head, tail) = token.split_at(1);
        let rank: usize = tail
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad rank in type token '{token}'")))?;
        match head {
            "A" => components.push((Family::A, rank)),
            "B" => components.push((Family::B, rank)),
            "C" => components.push((Family::C, rank)),
            "D" => components.push((Family::D, rank)),
            "E" => components.push((Family::E, rank)),
            "F" => components.push((Family::F, rank)),
            "G" => components.push((Family::G, rank)),
            "T" => central += rank,
            _ => {
                return Err(Error::InvalidInput(format!(
                    "bad family in type token '{token}'"
                )))
            }
        }
    }
    Ok(CartanType::new(components, central))
}

/// Cartan type of a closed symmetric subsystem, identified by matching the
/// Cartan matrix of a base of the subsystem against the family templates.
pub fn cartan_type_of(datum: &RootDatum, sub: &Subsystem) -> Result<CartanType> {
    sub.validate(datum)?;
    let span_rank = rank_of_vectors(
        &sub.root_indices
            .iter()
            .map(|&i| datum.root(i).to_vec())
            .collect::<Vec<_>>(),
    );
    let central = datum.rank() - span_rank;
    if sub.is_empty() {
        return Ok(CartanType::new(Vec::new(), central));
    }
    let base = subsystem_base(datum, sub);
    let comps = connected_components(datum, &base);
    let mut components = Vec::new();
    for comp in comps {
        let k = comp.len();
        let mut cm = vec![vec![0i64; k]; k];
        for (i, &bi) in comp.iter().enumerate() {
            for (j, &bj) in comp.iter().enumerate() {
                let p = dot(datum.coroot(bi), datum.root(bj));
                cm[i][j] = i64::try_from(&p).expect("Cartan entries are small");
            }
        }
        components.push(identify_component(&cm)?);
    }
    Ok(CartanType::new(components, central))
}

/// Base of a closed symmetric subsystem: indecomposable elements of its
/// lexicographically positive half.
fn subsystem_base(datum: &RootDatum, sub: &Subsystem) -> Vec<usize> {
    let pos: Vec<usize> = sub
        .root_indices
        .iter()
        .copied()
        .filter(|&i| lex_positive(datum.root(i)))
        .collect();
    let index = datum.root_index_map();
    let pos_set: HashSet<usize> = pos.iter().copied().collect();
    pos.iter()
        .copied()
        .filter(|&i| {
            !pos.iter().any(|&j| {
                if i == j {
                    return false;
                }
                let diff: Vec<Int> = datum
                    .root(i)
                    .iter()
                    .zip(datum.root(j))
                    .map(|(a, b)| a - b)
                    .collect();
                match index.get(&diff) {
                    Some(&k) => pos_set.contains(&k),
                    None => false,
                }
            })
        })
        .collect()
}

fn identify_component(cm: &[Vec<i64>]) -> Result<(Family, usize)> {
    let k = cm.len();
    let candidates: &[Family] = &[
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::G,
        Family::F,
        Family::E,
    ];
    for &family in candidates {
        if let Ok((template, _)) = cartan_matrix(family, k) {
            if cartan_isomorphic(cm, &template) {
                return Ok((family, k));
            }
        }
    }
    Err(Error::InvalidSubsystem(format!(
        "connected Cartan matrix of rank {k} matches no known family"
    )))
}

fn cartan_isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let k = a.len();
    if b.len() != k {
        return false;
    }
    let mut perm: Vec<usize> = (0..k).collect();
    permute_match(&mut perm, 0, a, b)
}

fn permute_match(perm: &mut Vec<usize>, depth: usize, a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let k = a.len();
    if depth == k {
        return true;
    }
    for swap in depth..k {
        perm.swap(depth, swap);
        let ok = (0..=depth).all(|i| {
            a[perm[i]][perm[depth]] == b[i][depth] && a[perm[depth]][perm[i]] == b[depth][i]
        });
        if ok && permute_match(perm, depth + 1, a, b) {
            return true;
        }
        perm.swap(depth, swap);
    }
    false
}

/// Levi test: true iff `sub` equals the set of ambient roots lying in its
/// own rational span, i.e. iff `sub` is the root system of the centralizer
/// of some rational cocharacter.
pub fn is_levi_subsystem(datum: &RootDatum, sub: &Subsystem) -> Result<bool> {
    sub.validate(datum)?;
    if sub.is_empty() {
        return Ok(true);
    }
    let cols: Vec<Vec<Int>> = sub
        .root_indices
        .iter()
        .map(|&i| datum.root(i).to_vec())
        .collect();
    let basis = saturate(&IntMatrix::from_cols(cols));
    for i in 0..datum.num_roots() {
        if !sub.contains(i) && solve_in_lattice(&basis, datum.root(i)).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All closed symmetric subsystems generated by closing root subsets of
/// size up to `max_base_size`, deduplicated and sorted. Exhaustive for
/// subsystems of semisimple rank at most `max_base_size`.
pub fn all_closed_subsystems(datum: &RootDatum, max_base_size: usize) -> Result<Vec<Subsystem>> {
    if datum.num_roots() > 60 {
        return Err(Error::TooLarge(format!("{} roots > 60", datum.num_roots())));
    }
    let table = datum.sum_table();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(Vec::new());
    // seeds from the positive half suffice: closures are symmetric
    let positives = datum.lex_positive_roots();
    let mut seed = Vec::new();
    enumerate_subsets(&positives, 0, max_base_size, &mut seed, &mut |subset| {
        let vectors: Vec<Vec<Int>> = subset.iter().map(|&i| datum.root(i).to_vec()).collect();
        if rank_of_vectors(&vectors) < subset.len() {
            return; // a dependent seed closes to the closure of a smaller one
        }
        found.insert(close_subset(datum, &table, subset));
    });
    Ok(found.into_iter().map(Subsystem::new).collect())
}

fn enumerate_subsets(
    pool: &[usize],
    start: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if !current.is_empty() {
        visit(current);
    }
    if remaining == 0 {
        return;
    }
    for p in start..pool.len() {
        current.push(pool[p]);
        enumerate_subsets(pool, p + 1, remaining - 1, current, visit);
        current.pop();
    }
}

/// Symmetric additive closure of a set of root indices.
fn close_subset(datum: &RootDatum, table: &[Vec<Option<usize>>], seed: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::new();
    for &i in seed {
        set.insert(i);
        set.insert(datum.negative_of(i));
    }
    loop {
        let members: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for &i in &members {
            for &j in &members {
                if let Some(k) = table[i][j] {
                    if set.insert(k) {
                        set.insert(datum.negative_of(k));
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    set.into_iter().collect()
}

/// Every closed symmetric subsystem whose Cartan type has the same
/// components as `target` (central rank ignored), deduplicated, in a
/// deterministic order.
pub fn closed_subsystems_of_type(datum: &RootDatum, target: &CartanType) -> Result<Vec<Subsystem>> {
    let k = target.semisimple_rank();
    if k > datum.rank() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for sub in all_closed_subsystems(datum, k)? {
        let ty = cartan_type_of(datum, &sub)?;
        if ty.same_components(target) {
            out.push(sub);
        }
    }
    Ok(out)
}

/// All Levi subsystems: intersections of the ambient root set with
/// rational subspaces spanned by root subsets. Exhaustive because the span
/// of any Levi subsystem is spanned by at most `rank` of its roots.
pub fn all_levi_subsystems(datum: &RootDatum) -> Vec<Subsystem> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(Vec::new());
    let positives = datum.lex_positive_roots();
    let mut seed = Vec::new();
    enumerate_subsets(&positives, 0, datum.rank(), &mut seed, &mut |subset| {
        let span: Vec<Vec<Rat>> = subset.iter().map(|&i| to_rat_vec(datum.root(i))).collect();
        let members: Vec<usize> = (0..datum.num_roots())
            .filter(|&i| rat_solve(&span, &to_rat_vec(datum.root(i))).is_some())
            .collect();
        found.insert(members);
    });
    found.into_iter().map(Subsystem::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn sl2_datum() {
        let d = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        assert_eq!(d.rank(), 1);
        assert_eq!(d.num_roots(), 2);
        let i = d.index_of_root(&[int(2)]).unwrap();
        assert_eq!(d.coroot(i), &[int(1)]);
    }

    #[test]
    fn g2_has_12_roots_in_coweight_basis() {
        let d = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        assert_eq!(d.num_roots(), 12);
        assert!(d.index_of_root(&[int(1), int(0)]).is_some());
        assert!(d.index_of_root(&[int(0), int(1)]).is_some());
        assert!(d.index_of_root(&[int(3), int(2)]).is_some());
        // short simple coroot pairs 2 with a and -3 with b
        let a = d.index_of_root(&[int(1), int(0)]).unwrap();
        assert_eq!(d.coroot(a), &[int(2), int(-3)]);
    }

    #[test]
    fn c4_has_32_roots() {
        let d = build_root_datum(Family::C, 4, Isogeny::SimplyConnected).unwrap();
        assert_eq!(d.num_roots(), 32);
    }

    #[test]
    fn unsupported_families() {
        assert!(matches!(
            build_root_datum(Family::E, 6, Isogeny::Adjoint),
            Err(Error::UnsupportedType(_))
        ));
        assert!(matches!(
            build_root_datum(Family::G, 3, Isogeny::Adjoint),
            Err(Error::UnsupportedType(_))
        ));
    }

    #[test]
    fn default_base_sl2_and_g2() {
        let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let b = base_and_highest(&sl2, None).unwrap();
        assert_eq!(b.simple_roots.len(), 1);
        assert_eq!(sl2.root(b.simple_roots[0]), &[int(2)]);
        assert_eq!(b.highest_roots, b.simple_roots);

        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let b = base_and_highest(&g2, None).unwrap();
        let simples: Vec<&[Int]> = b.simple_roots.iter().map(|&i| g2.root(i)).collect();
        assert!(simples.contains(&&[int(1), int(0)][..]));
        assert!(simples.contains(&&[int(0), int(1)][..]));
        assert_eq!(g2.root(b.highest_roots[0]), &[int(3), int(2)]);
        assert_eq!(b.positive_roots.len(), 6);
    }

    #[test]
    fn explicit_regular_vector_a2() {
        let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected).unwrap();
        // sum of fundamental coweights pairs 1 with each standard simple root
        let rho = vec![rat(1, 1), rat(1, 1)];
        let b = base_and_highest(&a2, Some(&rho)).unwrap();
        assert_eq!(b.simple_roots.len(), 2);
        let simples: Vec<&[Int]> = b.simple_roots.iter().map(|&i| a2.root(i)).collect();
        assert!(simples.contains(&&[int(2), int(-1)][..]));
        assert!(simples.contains(&&[int(-1), int(2)][..]));
    }

    #[test]
    fn not_regular_vector() {
        let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected).unwrap();
        let v = vec![rat(1, 1), rat(-1, 1)];
        assert!(matches!(
            base_and_highest(&a2, Some(&v)),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn weyl_orders() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        assert_eq!(weyl_group(&g2).unwrap().len(), 12);
        let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected).unwrap();
        assert_eq!(weyl_group(&a2).unwrap().len(), 6);
        let c4 = build_root_datum(Family::C, 4, Isogeny::SimplyConnected).unwrap();
        assert_eq!(weyl_group(&c4).unwrap().len(), 384);
    }

    #[test]
    fn g2_a1a1_subsystem_type_and_levi() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let b = g2.index_of_root(&[int(0), int(1)]).unwrap();
        let twoab = g2.index_of_root(&[int(2), int(1)]).unwrap();
        let sub = Subsystem::new(vec![b, twoab, g2.negative_of(b), g2.negative_of(twoab)]);
        sub.validate(&g2).unwrap();
        let ty = cartan_type_of(&g2, &sub).unwrap();
        assert_eq!(ty, CartanType::new(vec![(Family::A, 1), (Family::A, 1)], 0));
        assert!(!is_levi_subsystem(&g2, &sub).unwrap());
        let full = Subsystem::full(&g2);
        assert_eq!(
            cartan_type_of(&g2, &full).unwrap().components,
            vec![(Family::G, 2)]
        );
        assert!(is_levi_subsystem(&g2, &full).unwrap());
        let ty = cartan_type_of(&g2, &Subsystem::empty()).unwrap();
        assert!(ty.components.is_empty());
        assert_eq!(ty.central_torus_rank, 2);
    }

    #[test]
    fn a2_line_is_levi() {
        let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected).unwrap();
        let i = a2.index_of_root(&[int(2), int(-1)]).unwrap();
        let sub = Subsystem::new(vec![i, a2.negative_of(i)]);
        assert!(is_levi_subsystem(&a2, &sub).unwrap());
    }

    #[test]
    fn invalid_subsystem_is_rejected() {
        let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected).unwrap();
        let i = a2.index_of_root(&[int(2), int(-1)]).unwrap();
        // not symmetric
        let bad = Subsystem::new(vec![i]);
        assert!(matches!(bad.validate(&a2), Err(Error::InvalidSubsystem(_))));
        // symmetric but not closed: two simples without their sum
        let j = a2.index_of_root(&[int(-1), int(2)]).unwrap();
        let bad = Subsystem::new(vec![i, j, a2.negative_of(i), a2.negative_of(j)]);
        assert!(matches!(bad.validate(&a2), Err(Error::InvalidSubsystem(_))));
    }

    #[test]
    fn closed_search_g2_full() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        let target = parse_cartan_type("G2").unwrap();
        let hits = closed_subsystems_of_type(&g2, &target).unwrap();
        assert_eq!(hits, vec![Subsystem::full(&g2)]);
    }

    #[test]
    fn closed_search_a3_contains_a1a1() {
        let a3 = build_root_datum(Family::A, 3, Isogeny::SimplyConnected).unwrap();
        let target = parse_cartan_type("A1xA1").unwrap();
        let hits = closed_subsystems_of_type(&a3, &target).unwrap();
        assert!(!hits.is_empty());
        for sub in &hits {
            sub.validate(&a3).unwrap();
        }
    }

    #[test]
    fn cartan_type_parse_and_display() {
        let t = parse_cartan_type("C2xC2").unwrap();
        assert_eq!(t.components, vec![(Family::BC, 2), (Family::BC, 2)]);
        assert!(t.same_components(&parse_cartan_type("B2xC2").unwrap()));
        assert_eq!(parse_cartan_type("A1xA1").unwrap().to_string(), "A1xA1");
    }

    #[test]
    fn direct_sum_and_torus() {
        let a1 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let sum = direct_sum(&[a1.clone(), a1.clone()], 1);
        assert_eq!(sum.rank(), 3);
        assert_eq!(sum.num_roots(), 4);
        sum.validate().unwrap();
        let t = torus(2);
        assert_eq!(t.num_roots(), 0);
        let b = base_and_highest(&t, None).unwrap();
        assert!(b.simple_roots.is_empty() && b.highest_roots.is_empty());
    }

    #[test]
    fn levi_enumeration_counts() {
        let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
        assert_eq!(all_levi_subsystems(&g2).len(), 8); // empty, six lines, full
        let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected).unwrap();
        assert_eq!(all_levi_subsystems(&a2).len(), 5);
    }

    #[test]
    fn enumeration_guards() {
        let a1 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
        let nine = direct_sum(&vec![a1; 9], 0);
        assert!(matches!(weyl_group(&nine), Err(Error::TooLarge(_))));
        let c4 = build_root_datum(Family::C, 4, Isogeny::SimplyConnected).unwrap();
        let big = direct_sum(&[c4.clone(), c4], 0); // 64 roots
        assert!(matches!(
            all_closed_subsystems(&big, 2),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn b3_c3_d4_recognition() {
        // orientation matters from rank 3 on
        let b3 = build_root_datum(Family::B, 3, Isogeny::SimplyConnected).unwrap();
        let tb = cartan_type_of(&b3, &Subsystem::full(&b3)).unwrap();
        assert_eq!(tb.components, vec![(Family::B, 3)]);
        let c3 = build_root_datum(Family::C, 3, Isogeny::SimplyConnected).unwrap();
        let tc = cartan_type_of(&c3, &Subsystem::full(&c3)).unwrap();
        assert_eq!(tc.components, vec![(Family::C, 3)]);
        assert!(!tb.same_components(&tc));
        let d4 = build_root_datum(Family::D, 4, Isogeny::SimplyConnected).unwrap();
        assert_eq!(d4.num_roots(), 24);
        let td = cartan_type_of(&d4, &Subsystem::full(&d4)).unwrap();
        assert_eq!(td.components, vec![(Family::D, 4)]);
        // D3 = A3: the A label wins
        let d3 = build_root_datum(Family::D, 3, Isogeny::SimplyConnected).unwrap();
        let t3 = cartan_type_of(&d3, &Subsystem::full(&d3)).unwrap();
        assert_eq!(t3.components, vec![(Family::A, 3)]);
    }

    #[test]
    fn b2_and_c2_agree_up_to_label() {
        let b2 = build_root_datum(Family::B, 2, Isogeny::Adjoint).unwrap();
        let c2 = build_root_datum(Family::C, 2, Isogeny::SimplyConnected).unwrap();
        assert_eq!(b2.num_roots(), 8);
        assert_eq!(c2.num_roots(), 8);
        let tb = cartan_type_of(&b2, &Subsystem::full(&b2)).unwrap();
        let tc = cartan_type_of(&c2, &Subsystem::full(&c2)).unwrap();
        assert!(tb.same_components(&tc));
    }
}
