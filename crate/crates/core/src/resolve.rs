//! Minimal free resolutions of F₂ over F₂G for 2-groups, comparison chain
//! maps and the cohomology matrices they induce.
//!
//! An element of the free module F₂G^b is a [`BitVector`] of length `b·|G|`;
//! coordinate `j·|G| + g` is the coefficient of `g·e_j`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::f2la::{BitMatrix, BitVector, Echelon};
use crate::fixtures;
use crate::grp::{GroupError, GroupTable, Subgroup};

pub const MAX_RESOLUTION_ORDER: usize = 512;
pub const MAX_RESOLUTION_DEGREE: usize = 12;
pub const MAX_ELEMENTARY_RANK: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolveError {
    #[error("group order {0} is not a power of 2")]
    NotTwoGroup(usize),
    #[error("group order {order} exceeds the resolution cap {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("degree {degree} exceeds the cap {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("elementary rank {0} exceeds the cap")]
    RankTooLarge(usize),
    #[error("resolution is not exact in degree {degree}: image {image}, kernel {kernel}")]
    NotExact { degree: usize, image: usize, kernel: usize },
    #[error("boundary in degree {0} is not minimal")]
    NotMinimal(usize),
    #[error("composite of boundaries {0} and {0}-1 is nonzero")]
    BoundarySquare(usize),
    #[error("chain map cannot be lifted in degree {degree}, generator {generator}")]
    LiftFailed { degree: usize, generator: usize },
    #[error("chain map does not commute with boundaries in degree {0}")]
    NotCommuting(usize),
    #[error("class has length {got}, expected {expected}")]
    ClassLength { expected: usize, got: usize },
    #[error("subgroup is not central")]
    NotCentral,
    #[error("induced cohomology matrices depend on the lift in degree {0}")]
    LiftDependent(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// `g·x` for `x ∈ F₂G^rank`.
pub fn act(group: &GroupTable, g: usize, x: &BitVector) -> BitVector {
    let n = group.order();
    let mut out = BitVector::zeros(x.len());
    for p in x.iter_ones() {
        let (block, h) = (p / n, p % n);
        out.set(block * n + group.mul(g, h), true);
    }
    out
}

/// All translates `g·x`, indexed by `g`.
fn translates(group: &GroupTable, x: &BitVector) -> Vec<BitVector> {
    (0..group.order()).map(|g| act(group, g, x)).collect()
}

/// An element of F₂G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GAElement<'a> {
    group: &'a GroupTable,
    coeffs: BitVector,
}

impl<'a> GAElement<'a> {
    pub fn new(group: &'a GroupTable, coeffs: BitVector) -> Self {
        assert_eq!(coeffs.len(), group.order(), "group algebra element length");
        GAElement { group, coeffs }
    }

    pub fn coeffs(&self) -> &BitVector {
        &self.coeffs
    }

    pub fn augmentation(&self) -> bool {
        self.coeffs.parity()
    }

    pub fn in_augmentation_ideal(&self) -> bool {
        !self.augmentation()
    }

    pub fn add(&self, other: &GAElement<'a>) -> GAElement<'a> {
        let mut c = self.coeffs.clone();
        c.xor_assign(&other.coeffs);
        GAElement { group: self.group, coeffs: c }
    }

    pub fn mul(&self, other: &GAElement<'a>) -> GAElement<'a> {
        let mut c = BitVector::zeros(self.group.order());
        for a in self.coeffs.iter_ones() {
            for b in other.coeffs.iter_ones() {
                c.flip(self.group.mul(a, b));
            }
        }
        GAElement { group: self.group, coeffs: c }
    }
}

/// A homomorphism F₂G^src_rank → F₂G^dst_rank given by the images of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMap {
    pub src_rank: usize,
    pub dst_rank: usize,
    pub images: Vec<BitVector>,
}

impl FreeMap {
    pub fn entry<'a>(&self, group: &'a GroupTable, j: usize, m: usize) -> GAElement<'a> {
        let n = group.order();
        GAElement::new(group, self.images[j].slice(m * n, n))
    }

    /// Every entry lies in the augmentation ideal.
    pub fn is_minimal(&self, order: usize) -> bool {
        self.images.iter().all(|w| (0..self.dst_rank).all(|m| !w.range_parity(m * order, order)))
    }

    pub fn apply(&self, group: &GroupTable, x: &BitVector) -> BitVector {
        let n = group.order();
        let mut out = BitVector::zeros(self.dst_rank * n);
        for p in x.iter_ones() {
            out.xor_assign(&act(group, p % n, &self.images[p / n]));
        }
        out
    }
}

/// A free resolution `… → F_1 → F_0 → F₂` truncated at `max_degree`.
#[derive(Clone, Debug)]
pub struct Resolution {
    group: GroupTable,
    max_degree: usize,
    ranks: Vec<usize>,
    /// `boundaries[i]` is ∂_i for i ≥ 1; index 0 holds an empty map.
    boundaries: Vec<FreeMap>,
    /// `translates[i][j·|G| + g] = ∂_i(g·e_j)`.
    translates: Vec<Vec<BitVector>>,
    /// Tagged elimination of `translates[i]`; solves ∂_i x = y.
    solvers: Vec<Echelon>,
    /// Reduced row echelon basis of ker ∂_i (ker ε for i = 0).
    kernels: Vec<Vec<BitVector>>,
    labels: Vec<Vec<String>>,
}

fn check_caps(order: usize, max_degree: usize) -> Result<(), ResolveError> {
    if !order.is_power_of_two() {
        return Err(ResolveError::NotTwoGroup(order));
    }
    if order > MAX_RESOLUTION_ORDER {
        return Err(ResolveError::OrderTooLarge { order, max: MAX_RESOLUTION_ORDER });
    }
    if max_degree > MAX_RESOLUTION_DEGREE {
        return Err(ResolveError::DegreeTooLarge { degree: max_degree, max: MAX_RESOLUTION_DEGREE });
    }
    Ok(())
}

fn rref_rows(width: usize, rows: Vec<BitVector>) -> Vec<BitVector> {
    let m = BitMatrix::from_rows(width, rows).expect("rows have the stated width");
    let (r, pivots) = m.rref();
    r.into_rows().into_iter().take(pivots.len()).collect()
}

impl Resolution {
    fn start(group: &GroupTable, max_degree: usize) -> Self {
        let n = group.order();
        let id = group.identity();
        let aug: Vec<BitVector> =
            (0..n).filter(|&g| g != id).map(|g| BitVector::from_indices(n, [id, g])).collect();
        Resolution {
            group: group.clone(),
            max_degree,
            ranks: vec![1],
            boundaries: vec![FreeMap { src_rank: 1, dst_rank: 0, images: Vec::new() }],
            translates: vec![Vec::new()],
            solvers: vec![Echelon::new(0)],
            kernels: vec![rref_rows(n, aug)],
            labels: vec![vec!["1".to_string()]],
        }
    }

    /// Appends degree `i = self.ranks.len()` with boundary images `gens`,
    /// eliminating their translates to obtain the solver and the kernel.
    fn push_degree(&mut self, gens: Vec<BitVector>, labels: Vec<String>) -> Result<(), ResolveError> {
        let i = self.ranks.len();
        let n = self.group.order();
        let b = gens.len();
        let width = self.ranks[i - 1] * n;
        let mut trans = Vec::with_capacity(b * n);
        for w in &gens {
            trans.extend(translates(&self.group, w));
        }
        let mut solver = Echelon::with_tags(width, b * n);
        let mut kernel = Vec::new();
        for (t, v) in trans.iter().enumerate() {
            if let Some(dep) = solver.insert_tagged(v.clone(), BitVector::unit(b * n, t)) {
                kernel.push(dep);
            }
        }
        let expected = self.kernels[i - 1].len();
        if solver.rank() != expected {
            return Err(ResolveError::NotExact { degree: i, image: solver.rank(), kernel: expected });
        }
        let map = FreeMap { src_rank: b, dst_rank: self.ranks[i - 1], images: gens };
        if !map.is_minimal(n) {
            return Err(ResolveError::NotMinimal(i));
        }
        self.ranks.push(b);
        self.boundaries.push(map);
        self.translates.push(trans);
        self.solvers.push(solver);
        self.kernels.push(rref_rows(b * n, kernel));
        self.labels.push(labels);
        self.check_square(i)
    }

    fn check_square(&self, i: usize) -> Result<(), ResolveError> {
        let ok = if i == 1 {
            self.boundaries[1].images.iter().all(|w| !w.parity())
        } else {
            let prev = &self.boundaries[i - 1];
            self.boundaries[i].images.iter().all(|w| prev.apply(&self.group, w).is_zero())
        };
        if ok {
            Ok(())
        } else {
            Err(ResolveError::BoundarySquare(i))
        }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn boundary(&self, i: usize) -> &FreeMap {
        &self.boundaries[i]
    }

    pub fn labels(&self, i: usize) -> &[String] {
        &self.labels[i]
    }

    pub fn kernel_dim(&self, i: usize) -> usize {
        self.kernels[i].len()
    }

    /// `∂_i(x)` for `x ∈ F_i`, using the stored translates.
    pub fn apply_boundary(&self, i: usize, x: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.ranks[i - 1] * self.group.order());
        for p in x.iter_ones() {
            out.xor_assign(&self.translates[i][p]);
        }
        out
    }

    /// Some `x ∈ F_i` with `∂_i x = y`.
    pub fn solve(&self, i: usize, y: &BitVector) -> Option<BitVector> {
        self.solvers[i].preimage(y)
    }

    /// Random element of ker ∂_i.
    fn random_cycle<R: Rng>(&self, i: usize, rng: &mut R) -> BitVector {
        let mut v = BitVector::zeros(self.ranks[i] * self.group.order());
        for k in &self.kernels[i] {
            if rng.gen::<bool>() {
                v.xor_assign(k);
            }
        }
        v
    }
}

/// The minimal resolution of F₂ over F₂G up to degree `max_degree`.
pub fn minimal_resolution(g: &GroupTable, max_degree: usize) -> Result<Resolution, ResolveError> {
    check_caps(g.order(), max_degree)?;
    let n = g.order();
    let gens = g.generating_set();
    let mut res = Resolution::start(g, max_degree);
    for i in 1..=max_degree {
        let width = res.ranks[i - 1] * n;
        let kernel = &res.kernels[i - 1];
        // Radical of the kernel: the span of (s + 1)·v over generators s.
        let mut span = Echelon::new(width);
        for &s in &gens {
            for v in kernel {
                let mut w = act(g, s, v);
                w.xor_assign(v);
                span.insert(w);
            }
        }
        let chosen: Vec<BitVector> = kernel.iter().filter(|v| span.insert((*v).clone())).cloned().collect();
        let labels = (0..chosen.len()).map(|j| format!("b{i}.{j}")).collect();
        res.push_degree(chosen, labels)?;
    }
    Ok(res)
}

pub fn betti(g: &GroupTable, max_degree: usize) -> Result<Vec<usize>, ResolveError> {
    Ok(minimal_resolution(g, max_degree)?.ranks)
}

/// Exponent vectors of degree `d` in `r` variables, lexicographically
/// descending (`x1²` before `x1·x2` before `x2²`).
pub fn monomials(r: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(r: usize, d: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(r - 1, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        rec(r, d, &mut Vec::new(), &mut out);
    } else if d == 0 {
        out.push(Vec::new());
    }
    out
}

pub fn monomial_index(alpha: &[usize]) -> usize {
    let d: usize = alpha.iter().sum();
    monomials(alpha.len(), d).iter().position(|m| m == alpha).expect("monomial of matching degree")
}

pub fn monomial_label(alpha: &[usize]) -> String {
    let parts: Vec<String> = alpha
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(k, &a)| {
            let var = if alpha.len() == 1 { "x".to_string() } else { format!("x{}", k + 1) };
            if a == 1 {
                var
            } else {
                format!("{var}^{a}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Product of two polynomials over F₂ in the monomial bases of their degrees.
pub fn poly_mul(r: usize, p: usize, a: &BitVector, q: usize, b: &BitVector) -> BitVector {
    let (ma, mb) = (monomials(r, p), monomials(r, q));
    let target = monomials(r, p + q);
    let mut out = BitVector::zeros(target.len());
    for i in a.iter_ones() {
        for j in b.iter_ones() {
            let prod: Vec<usize> = ma[i].iter().zip(&mb[j]).map(|(x, y)| x + y).collect();
            out.flip(target.iter().position(|m| *m == prod).expect("product monomial"));
        }
    }
    out
}

/// Tensor product of `r` copies of the period-one resolution of Z/2, over
/// the group of bit masks of `(Z/2)^r`; generators are labelled by monomials.
pub fn elementary_resolution(r: usize, max_degree: usize) -> Result<Resolution, ResolveError> {
    if r > MAX_ELEMENTARY_RANK {
        return Err(ResolveError::RankTooLarge(r));
    }
    check_caps(1 << r, max_degree)?;
    let g = fixtures::elementary_abelian(r as u32);
    let n = g.order();
    let mut res = Resolution::start(&g, max_degree);
    for d in 1..=max_degree {
        let prev = monomials(r, d - 1);
        let mut gens = Vec::new();
        let mut labels = Vec::new();
        for alpha in monomials(r, d) {
            let mut w = BitVector::zeros(prev.len() * n);
            for k in (0..r).filter(|&k| alpha[k] > 0) {
                let mut beta = alpha.clone();
                beta[k] -= 1;
                let m = prev.iter().position(|x| *x == beta).expect("face monomial");
                w.flip(m * n);
                w.flip(m * n + (1 << k));
            }
            gens.push(w);
            labels.push(monomial_label(&alpha));
        }
        res.push_degree(gens, labels)?;
    }
    Ok(res)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftChoice {
    /// The solution produced by the stored elimination.
    First,
    /// The first solution plus a seeded random cycle in every degree.
    Perturbed(u64),
}

/// A chain map `φ_k: S_{d+k} → T_k` over a group homomorphism `S-group → T-group`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub shift: usize,
    target_order: usize,
    target_ranks: Vec<usize>,
    /// `images[k]` has one row per source generator in degree `d + k`.
    pub images: Vec<BitMatrix>,
}

impl ChainMap {
    pub fn top(&self) -> usize {
        self.images.len() - 1
    }

    /// The induced map H^k(T) → H^{k+d}(S); rows are source generators,
    /// columns target generators.
    pub fn cohomology_matrix(&self, k: usize) -> BitMatrix {
        let n = self.target_order;
        let b = self.target_ranks[k];
        let rows: Vec<Vec<bool>> = self.images[k]
            .row_vectors()
            .iter()
            .map(|x| (0..b).map(|m| x.range_parity(m * n, n)).collect())
            .collect();
        if rows.is_empty() {
            BitMatrix::zeros(0, b)
        } else {
            BitMatrix::from_bools(&rows)
        }
    }
}

/// Lifts `φ_0` (given on the source generators of degree `shift`) to a chain
/// map up to target degree `top`. `hom[s]` is the image in the target group
/// of source element `s`.
pub fn lift_chain_map(
    source: &Resolution,
    target: &Resolution,
    hom: &[usize],
    shift: usize,
    phi0: Vec<BitVector>,
    top: usize,
    choice: LiftChoice,
) -> Result<ChainMap, ResolveError> {
    assert!(shift + top <= source.max_degree && top <= target.max_degree);
    let (ns, nt) = (source.group.order(), target.group.order());
    let tg = &target.group;
    let mut rng = match choice {
        LiftChoice::First => None,
        LiftChoice::Perturbed(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut images = vec![BitMatrix::from_rows(nt * target.ranks[0], phi0).expect("phi0 width")];
    for k in 1..=top {
        let prev = &images[k - 1];
        // Translates of φ_{k−1}(e_m) by every source element, through `hom`.
        let moved: Vec<Vec<BitVector>> = prev
            .row_vectors()
            .iter()
            .map(|v| (0..ns).map(|s| act(tg, hom[s], v)).collect())
            .collect();
        let mut rows = Vec::with_capacity(source.ranks[shift + k]);
        for (j, w) in source.boundaries[shift + k].images.iter().enumerate() {
            let mut y = BitVector::zeros(nt * target.ranks[k - 1]);
            for p in w.iter_ones() {
                y.xor_assign(&moved[p / ns][p % ns]);
            }
            let mut x = target.solve(k, &y).ok_or(ResolveError::LiftFailed { degree: k, generator: j })?;
            if let Some(rng) = rng.as_mut() {
                x.xor_assign(&target.random_cycle(k, rng));
            }
            rows.push(x);
        }
        images.push(BitMatrix::from_rows(nt * target.ranks[k], rows).expect("lift width"));
    }
    let map = ChainMap { shift, target_order: nt, target_ranks: target.ranks.clone(), images };
    verify_chain_map(source, target, hom, &map)?;
    Ok(map)
}

/// `∂^T φ_k = φ_{k−1} ∂^S` on every source generator, evaluated directly.
pub fn verify_chain_map(
    source: &Resolution,
    target: &Resolution,
    hom: &[usize],
    map: &ChainMap,
) -> Result<(), ResolveError> {
    let (ns, nt) = (source.group.order(), target.group.order());
    for k in 1..=map.top() {
        let prev = map.images[k - 1].row_vectors();
        for (j, x) in map.images[k].row_vectors().iter().enumerate() {
            let lhs = target.apply_boundary(k, x);
            let mut rhs = BitVector::zeros(nt * target.ranks[k - 1]);
            for p in source.boundaries[map.shift + k].images[j].iter_ones() {
                rhs.xor_assign(&act(&target.group, hom[p % ns], &prev[p / ns]));
            }
            if lhs != rhs {
                return Err(ResolveError::NotCommuting(k));
            }
        }
    }
    Ok(())
}

fn identity_hom(g: &GroupTable) -> Vec<usize> {
    (0..g.order()).collect()
}

/// The chain self-map of degree `d` covering the cocycle `class`, up to target degree `top`.
pub fn cup_chain_map(
    res: &Resolution,
    class: &BitVector,
    d: usize,
    top: usize,
    choice: LiftChoice,
) -> Result<ChainMap, ResolveError> {
    if d + top > res.max_degree {
        return Err(ResolveError::DegreeTooLarge { degree: d + top, max: res.max_degree });
    }
    if class.len() != res.ranks[d] {
        return Err(ResolveError::ClassLength { expected: res.ranks[d], got: class.len() });
    }
    let n = res.group.order();
    let id = res.group.identity();
    let phi0 = (0..res.ranks[d]).map(|j| if class.get(j) { BitVector::unit(n, id) } else { BitVector::zeros(n) }).collect();
    lift_chain_map(res, res, &identity_hom(&res.group), d, phi0, top, choice)
}

/// Multiplication by `class ∈ H^d` as a matrix H^k → H^{k+d}.
pub fn cup_action(res: &Resolution, class: &BitVector, d: usize, k: usize) -> Result<BitMatrix, ResolveError> {
    Ok(cup_chain_map(res, class, d, k, LiftChoice::First)?.cohomology_matrix(k))
}

/// Restriction from G to a central elementary abelian subgroup.
#[derive(Clone, Debug)]
pub struct Restriction {
    /// Images in G of the basis `z_1, …, z_r` of the subgroup.
    pub basis: Vec<usize>,
    pub elementary: Resolution,
    pub chain_map: ChainMap,
    /// `matrices[k]`: H^k(G) → H^k(Z), rows monomials, columns generators of G.
    pub matrices: Vec<BitMatrix>,
}

impl Restriction {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

pub fn restriction_matrices(res: &Resolution, z: &Subgroup, max_degree: usize) -> Result<Restriction, ResolveError> {
    restriction_with(res, z, max_degree, LiftChoice::First)
}

pub fn restriction_with(
    res: &Resolution,
    z: &Subgroup,
    max_degree: usize,
    choice: LiftChoice,
) -> Result<Restriction, ResolveError> {
    let g = &res.group;
    if !g.is_central(z) {
        return Err(ResolveError::NotCentral);
    }
    let basis = g.elementary_basis(z)?;
    let r = basis.len();
    let elementary = elementary_resolution(r, max_degree)?;
    // Bit mask m of (Z/2)^r maps to the product of the z_k with bit k set.
    let hom: Vec<usize> = (0..1usize << r)
        .map(|m| (0..r).filter(|k| m >> k & 1 == 1).fold(g.identity(), |acc, k| g.mul(acc, basis[k])))
        .collect();
    let phi0 = vec![BitVector::unit(g.order(), g.identity())];
    let chain_map = lift_chain_map(&elementary, res, &hom, 0, phi0, max_degree, choice)?;
    let matrices = (0..=max_degree).map(|k| chain_map.cohomology_matrix(k)).collect();
    Ok(Restriction { basis, elementary, chain_map, matrices })
}

/// Checks that two lifts give the same cohomology matrices in degrees `0..=top`.
pub fn assert_lift_independent(a: &ChainMap, b: &ChainMap) -> Result<(), ResolveError> {
    for k in 0..=a.top().min(b.top()) {
        if a.cohomology_matrix(k) != b.cohomology_matrix(k) {
            return Err(ResolveError::LiftDependent(k));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn small_betti_numbers() {
        assert_eq!(betti(&cyclic(2), 6).unwrap(), vec![1; 7]);
        assert_eq!(betti(&cyclic(4), 6).unwrap(), vec![1; 7]);
        assert_eq!(betti(&elementary_abelian(3), 6).unwrap(), vec![1, 3, 6, 10, 15, 21, 28]);
        assert_eq!(betti(&quaternion8(), 7).unwrap(), vec![1, 2, 2, 1, 1, 2, 2, 1]);
        assert_eq!(betti(&dihedral8(), 5).unwrap(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(betti(&cyclic(1), 3).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn caps() {
        assert_eq!(betti(&cyclic(3), 2), Err(ResolveError::NotTwoGroup(3)));
        assert!(matches!(betti(&cyclic(2), 13), Err(ResolveError::DegreeTooLarge { .. })));
        assert!(matches!(betti(&cyclic(1024), 1), Err(ResolveError::OrderTooLarge { .. })));
    }

    #[test]
    fn monomial_order_and_labels() {
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials(3, 4).len(), 15);
        let r1 = elementary_resolution(1, 3).unwrap();
        assert_eq!(r1.labels(2), ["x^2"]);
        assert_eq!(r1.labels(0), ["1"]);
        let r2 = elementary_resolution(2, 2).unwrap();
        assert_eq!(r2.labels(2), ["x1^2", "x1*x2", "x2^2"]);
        assert_eq!(elementary_resolution(3, 4).unwrap().ranks(), &[1, 3, 6, 10, 15]);
        assert_eq!(monomial_index(&[0, 2]), 2);
    }

    #[test]
    fn minimality_and_entries() {
        let r = minimal_resolution(&quaternion8(), 4).unwrap();
        for i in 1..=4 {
            let map = r.boundary(i);
            for j in 0..map.src_rank {
                for m in 0..map.dst_rank {
                    assert!(map.entry(r.group(), j, m).in_augmentation_ideal());
                }
            }
        }
    }

    #[test]
    fn group_algebra_arithmetic() {
        let g = cyclic(4);
        let x = GAElement::new(&g, BitVector::from_indices(4, [0, 1]));
        // (1 + a)^4 = 1 + a^4 = 0 over F₂.
        let x2 = x.mul(&x);
        assert_eq!(x2.coeffs(), &BitVector::from_indices(4, [0, 2]));
        assert!(x2.mul(&x2).coeffs().is_zero());
        assert!(x.in_augmentation_ideal());
        assert_eq!(x.add(&x).coeffs().count_ones(), 0);
    }

    #[test]
    fn restriction_to_self_is_invertible() {
        for r in 1..=3 {
            let g = elementary_abelian(r);
            let res = minimal_resolution(&g, 4).unwrap();
            let rest = restriction_matrices(&res, &g.whole(), 4).unwrap();
            for (k, m) in rest.matrices.iter().enumerate() {
                assert_eq!(m.rows(), m.cols());
                assert_eq!(m.rank(), m.rows(), "r={r} k={k}");
            }
        }
    }

    #[test]
    fn quaternion_restriction_to_center() {
        let g = quaternion8();
        let res = minimal_resolution(&g, 8).unwrap();
        let z = crate::grp::center(&g);
        let rest = restriction_matrices(&res, &z, 8).unwrap();
        assert!(rest.matrices[1].is_zero());
        assert!(rest.matrices[2].is_zero());
        assert!(rest.matrices[3].is_zero());
        assert_eq!(rest.matrices[4].rank(), 1);
        assert_eq!(rest.matrices[4].rows(), 1);
        assert_eq!(rest.matrices[8].rank(), 1);
    }

    #[test]
    fn cup_identity_and_periodicity() {
        let g = quaternion8();
        let res = minimal_resolution(&g, 8).unwrap();
        let one = BitVector::from_bools(&[true]);
        for k in 0..=4 {
            assert_eq!(cup_action(&res, &one, 0, k).unwrap(), BitMatrix::identity(res.rank(k)));
        }
        let e = BitVector::from_bools(&[true]);
        for k in 0..=4 {
            let m = cup_action(&res, &e, 4, k).unwrap();
            assert_eq!(m.rank(), res.rank(k), "degree {k}");
        }
    }

    #[test]
    fn lift_independence() {
        let g = dihedral8();
        let res = minimal_resolution(&g, 6).unwrap();
        for d in 1..=2 {
            for c in 1..(1u32 << res.rank(d)) {
                let class = BitVector::from_bools(&(0..res.rank(d)).map(|i| c >> i & 1 == 1).collect::<Vec<_>>());
                let a = cup_chain_map(&res, &class, d, 6 - d, LiftChoice::First).unwrap();
                let b = cup_chain_map(&res, &class, d, 6 - d, LiftChoice::Perturbed(c as u64)).unwrap();
                assert_ne!(a.images, b.images);
                assert_lift_independent(&a, &b).unwrap();
            }
        }
    }

    #[test]
    fn not_central_rejected() {
        let g = dihedral8();
        let res = minimal_resolution(&g, 2).unwrap();
        let b = g.index_of_label("b").unwrap();
        let sub = g.subgroup([0, b]).unwrap();
        assert_eq!(restriction_matrices(&res, &sub, 2).unwrap_err(), ResolveError::NotCentral);
    }
}
