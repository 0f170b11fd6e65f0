//! The matrix groups: Syl₂(PSU₃(F_{2ⁿ})) as the group K of matrices
//! `G(θ, γ)` over F_{2^{2n}}, and Syl₂(Sz(2^{2n+1})) as lower unitriangular
//! matrices over F_{2^{2n+1}}, together with exhaustive checks of their
//! extension data.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::gfield::{build_tower_with, make_field, FieldElement, FieldError, FieldSpec, TowerSpec};
use crate::grp::{close_generators, GroupError, GroupTable, Subgroup};

pub const PSU3_MAX_N: u32 = 3;
pub const PSU3_MAX_N_LARGE: u32 = 4;
pub const SZ_MAX_N: u32 = 1;
pub const SZ_MAX_N_LARGE: u32 = 2;
const MATRIX_SAMPLE_PAIRS: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SylowError {
    #[error("n = {n} is outside the supported range 1..={max}{hint}")]
    OutOfRange { n: u32, max: u32, hint: &'static str },
    #[error("group order {got}, expected {expected}")]
    OrderMismatch { expected: usize, got: usize },
    #[error("closed-form law disagrees with matrix multiplication at {0}")]
    LawMismatch(String),
    #[error("matrix {0} is not unitary for the Hermitian form")]
    NotUnitary(String),
    #[error("congruence 2^(2s) = 2 mod 2^(2n+1) - 1 fails for n = {0}")]
    Congruence(u32),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A 3×3 matrix over a finite field of characteristic 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat3 {
    entries: [[FieldElement; 3]; 3],
}

impl Mat3 {
    pub fn new(entries: [[FieldElement; 3]; 3]) -> Self {
        let f = entries[0][0].field();
        assert!(entries.iter().flatten().all(|e| e.field() == f), "Mat3 entries must share a field");
        Mat3 { entries }
    }

    pub fn identity(field: FieldSpec) -> Self {
        let (z, o) = (field.zero(), field.one());
        Mat3 { entries: [[o, z, z], [z, o, z], [z, z, o]] }
    }

    pub fn field(&self) -> FieldSpec {
        self.entries[0][0].field()
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i][j]
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let z = self.field().zero();
        let mut out = [[z; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).fold(z, |acc, k| acc + self.entries[i][k] * other.entries[k][j]);
            }
        }
        Mat3 { entries: out }
    }

    pub fn add(&self, other: &Mat3) -> Mat3 {
        let mut out = self.entries;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = *cell + other.entries[i][j];
            }
        }
        Mat3 { entries: out }
    }

    /// `(Ā^t)_{ij} = conj(A_{ji})`.
    pub fn conj_transpose(&self, tower: &TowerSpec) -> Mat3 {
        let mut out = self.entries;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = tower.conj(self.entries[j][i]);
            }
        }
        Mat3 { entries: out }
    }

    pub fn det(&self) -> FieldElement {
        let e = &self.entries;
        e[0][0] * (e[1][1] * e[2][2] + e[1][2] * e[2][1])
            + e[0][1] * (e[1][0] * e[2][2] + e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] + e[1][1] * e[2][0])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(FieldElement::is_zero)
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{} {} {}", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

/// The Hermitian form `[[0,1,0],[1,0,0],[0,0,1]]`.
pub fn hermitian_form(field: FieldSpec) -> Mat3 {
    let (z, o) = (field.zero(), field.one());
    Mat3 { entries: [[z, o, z], [o, z, z], [z, z, o]] }
}

/// `A H Āᵗ + H`; zero exactly when `A` preserves the form.
pub fn hermitian_defect(a: &Mat3, tower: &TowerSpec) -> Mat3 {
    let h = hermitian_form(tower.big());
    a.mul(&h).mul(&a.conj_transpose(tower)).add(&h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PsuParams {
    pub theta: FieldElement,
    pub gamma: FieldElement,
}

impl PsuParams {
    pub fn label(&self) -> String {
        format!("({},{})", self.theta.bits(), self.gamma.bits())
    }
}

/// Rows `(1, γ, θ̄)`, `(0, 1, 0)`, `(0, θ, 1)`.
pub fn g_matrix(p: PsuParams, tower: &TowerSpec) -> Mat3 {
    let f = tower.big();
    let (z, o) = (f.zero(), f.one());
    Mat3::new([[o, p.gamma, tower.conj(p.theta)], [z, o, z], [z, p.theta, o]])
}

/// `γ + γ̄ + θθ̄ = 0`, i.e. `trace(γ) = norm(θ)`.
pub fn k_membership(p: PsuParams, tower: &TowerSpec) -> bool {
    tower.trace_big(p.gamma) == tower.norm_big(p.theta)
}

/// `G(θ,γ)·G(μ,τ) = G(θ+μ, γ+τ+θ̄μ)`.
pub fn psu3_compose(p: PsuParams, q: PsuParams, tower: &TowerSpec) -> PsuParams {
    PsuParams { theta: p.theta + q.theta, gamma: p.gamma + q.gamma + tower.conj(p.theta) * q.theta }
}

pub fn psu3_law_check(p: PsuParams, q: PsuParams, tower: &TowerSpec) -> bool {
    g_matrix(p, tower).mul(&g_matrix(q, tower)) == g_matrix(psu3_compose(p, q, tower), tower)
}

/// Result of an exhaustive identity check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtensionReport {
    pub squares_checked: usize,
    pub commutators_checked: usize,
    pub basis_relations_checked: usize,
    pub counterexamples: Vec<String>,
}

impl ExtensionReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// K = Syl₂(PSU₃(F_{2ⁿ})) with its defining data.
#[derive(Clone, Debug)]
pub struct Psu3Sylow {
    pub tower: TowerSpec,
    pub params: Vec<PsuParams>,
    pub table: GroupTable,
    /// `Z = {G(0, γ) : γ ∈ F_{2ⁿ}}`.
    pub z: Subgroup,
    /// Number of element pairs whose table entry was compared with matrix multiplication.
    pub matrix_pairs_checked: usize,
}

pub fn psu3_sylow(n: u32) -> Result<Psu3Sylow, SylowError> {
    psu3_sylow_with(n, false, None)
}

/// `large` unlocks `n = 4`; `big_poly` overrides the polynomial of F_{2^{2n}}.
pub fn psu3_sylow_with(n: u32, large: bool, big_poly: Option<u32>) -> Result<Psu3Sylow, SylowError> {
    let max = if large { PSU3_MAX_N_LARGE } else { PSU3_MAX_N };
    if n == 0 || n > max {
        let hint = if large { "" } else { " (larger n needs the large-computation flag)" };
        return Err(SylowError::OutOfRange { n, max, hint });
    }
    let tower = build_tower_with(n, big_poly)?;
    let big = tower.big();
    let mut params = Vec::new();
    for theta in big.elements() {
        for gamma in big.elements() {
            let p = PsuParams { theta, gamma };
            if k_membership(p, &tower) {
                params.push(p);
            }
        }
    }
    let expected = 1usize << (3 * n);
    if params.len() != expected {
        return Err(SylowError::OrderMismatch { expected, got: params.len() });
    }
    let size = big.size();
    let key = |p: &PsuParams| p.theta.bits() as usize * size + p.gamma.bits() as usize;
    let mut index = vec![usize::MAX; size * size];
    for (i, p) in params.iter().enumerate() {
        index[key(p)] = i;
    }
    let order = params.len();
    let mut table = vec![0usize; order * order];
    for (i, &p) in params.iter().enumerate() {
        for (j, &q) in params.iter().enumerate() {
            let r = psu3_compose(p, q, &tower);
            let idx = index[key(&r)];
            if idx == usize::MAX {
                return Err(SylowError::LawMismatch(format!("{} * {} leaves K", p.label(), q.label())));
            }
            table[i * order + j] = idx;
        }
    }

    for p in &params {
        let m = g_matrix(*p, &tower);
        if !hermitian_defect(&m, &tower).is_zero() || m.det() != big.one() {
            return Err(SylowError::NotUnitary(p.label()));
        }
    }
    let pairs: Vec<(usize, usize)> = if n <= 2 {
        (0..order).flat_map(|i| (0..order).map(move |j| (i, j))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5053_5533 + n as u64);
        (0..MATRIX_SAMPLE_PAIRS).map(|_| (rng.gen_range(0..order), rng.gen_range(0..order))).collect()
    };
    for &(i, j) in &pairs {
        let product = g_matrix(params[i], &tower).mul(&g_matrix(params[j], &tower));
        if product != g_matrix(params[table[i * order + j]], &tower) {
            return Err(SylowError::LawMismatch(format!("{} * {}", params[i].label(), params[j].label())));
        }
    }

    let labels = params.iter().map(PsuParams::label).collect();
    let table = GroupTable::from_table(order, table, labels)?;
    let z = table.subgroup(
        tower.small().elements().map(|c| index[key(&PsuParams { theta: big.zero(), gamma: tower.embed(c) })]),
    )?;
    Ok(Psu3Sylow { tower, params, table, z, matrix_pairs_checked: pairs.len() })
}

impl Psu3Sylow {
    pub fn index_of(&self, p: PsuParams) -> Option<usize> {
        self.params.iter().position(|q| *q == p)
    }

    fn gammas_for(&self, theta: FieldElement) -> Vec<usize> {
        (0..self.params.len()).filter(|&i| self.params[i].theta == theta).collect()
    }
}

/// Squaring and commutator identities over all of K, and the specialised
/// relations on the λ/ρ basis, where `−` ranges over every admissible γ.
pub fn psu3_extension_check(k: &Psu3Sylow) -> ExtensionReport {
    let t = &k.tower;
    let g = &k.table;
    let zero = t.big().zero();
    let central = |gamma: FieldElement| PsuParams { theta: zero, gamma };
    let mut rep = ExtensionReport::default();
    let expect = |rep: &mut ExtensionReport, got: usize, want: PsuParams, what: String| match k.index_of(want) {
        Some(w) if w == got => {}
        _ => rep.counterexamples.push(format!("{what}: got {}, expected {}", k.params[got].label(), want.label())),
    };

    for (x, p) in k.params.iter().enumerate() {
        rep.squares_checked += 1;
        expect(&mut rep, g.mul(x, x), central(t.norm_big(p.theta)), format!("{}^2", p.label()));
    }
    for (x, p) in k.params.iter().enumerate() {
        for (y, q) in k.params.iter().enumerate() {
            rep.commutators_checked += 1;
            let want = central(t.conj(q.theta) * p.theta + q.theta * t.conj(p.theta));
            expect(&mut rep, g.commutator(x, y), want, format!("[{}, {}]", p.label(), q.label()));
        }
    }

    let n = t.n() as u64;
    let (rho, lambda) = (t.rho(), t.lambda());
    let one = t.big().one();
    for i in 0..n {
        let li = lambda.pow(i);
        for j in 0..n {
            let lj = lambda.pow(j);
            let families = [
                (li * rho, lj, central(lambda.pow(i + j + 1)), "rho-lambda"),
                (li * rho, lj * rho, central(zero), "rho-rho"),
                (li, lj, central(zero), "lambda-lambda"),
            ];
            for (a, b, want, name) in families {
                for x in k.gammas_for(a) {
                    for y in k.gammas_for(b) {
                        rep.basis_relations_checked += 1;
                        expect(&mut rep, g.commutator(x, y), want, format!("{name} commutator i={i} j={j}"));
                    }
                }
            }
        }
        for (a, name) in [(li * rho, "rho"), (li, "lambda")] {
            for x in k.gammas_for(a) {
                rep.basis_relations_checked += 1;
                expect(&mut rep, g.mul(x, x), central(lambda.pow(2 * i)), format!("{name} square i={i}"));
            }
        }
    }
    debug_assert_eq!(one, lambda.pow(0));
    rep
}

/// θ = 2^{n+1}, after checking `2^{2(n+1)} ≡ 2 (mod 2^{2n+1} − 1)`.
pub fn sz_theta(n: u32) -> Result<u64, SylowError> {
    if n == 0 || n > SZ_MAX_N_LARGE {
        return Err(SylowError::OutOfRange { n, max: SZ_MAX_N_LARGE, hint: "" });
    }
    let modulus = (1u64 << (2 * n + 1)) - 1;
    if (1u64 << (2 * (n + 1))) % modulus != 2 % modulus {
        return Err(SylowError::Congruence(n));
    }
    Ok(1u64 << (n + 1))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `gcd(2^{2n+1} − 1, 1 + 2^{n+1})`, which is 1: squaring `a ↦ a^{1+θ}` is
/// then injective on the multiplicative group.
pub fn sz_gcd_check(n: u32) -> Result<u64, SylowError> {
    if n == 0 || n > 8 {
        return Err(SylowError::OutOfRange { n, max: 8, hint: "" });
    }
    Ok(gcd((1u64 << (2 * n + 1)) - 1, 1 + (1u64 << (n + 1))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SzParams {
    pub a: FieldElement,
    pub b: FieldElement,
    pub theta_exp: u64,
}

impl SzParams {
    pub fn label(&self) -> String {
        format!("({},{})", self.a.bits(), self.b.bits())
    }

    /// `[[1,0,0],[a^θ,1,0],[b,a,1]]`.
    pub fn matrix(&self) -> Mat3 {
        let f = self.a.field();
        let (z, o) = (f.zero(), f.one());
        Mat3::new([[o, z, z], [self.a.pow(self.theta_exp), o, z], [self.b, self.a, o]])
    }
}

/// Syl₂(Sz(2^{2n+1})) with elements indexed canonically by `(a, b)`.
#[derive(Clone, Debug)]
pub struct SzSylow {
    pub n: u32,
    pub field: FieldSpec,
    pub theta: u64,
    pub params: Vec<SzParams>,
    pub table: GroupTable,
    /// `{(0, b)}`.
    pub z: Subgroup,
}

pub fn sz_sylow(n: u32) -> Result<SzSylow, SylowError> {
    sz_sylow_with(n, false, None)
}

pub fn sz_sylow_with(n: u32, large: bool, poly: Option<u32>) -> Result<SzSylow, SylowError> {
    let max = if large { SZ_MAX_N_LARGE } else { SZ_MAX_N };
    if n == 0 || n > max {
        let hint = if large { "" } else { " (larger n needs the large-computation flag)" };
        return Err(SylowError::OutOfRange { n, max, hint });
    }
    let theta = sz_theta(n)?;
    let field = match poly {
        Some(p) => FieldSpec::new(2 * n + 1, p)?,
        None => make_field(2 * n + 1)?,
    };
    let q = field.size();
    let expected = q * q;
    let elem = |a: u32, b: u32| SzParams { a: field.elem(a).unwrap(), b: field.elem(b).unwrap(), theta_exp: theta };

    // Generators: {a} for a in the power basis, and the central b-type matrices.
    let mut gens: Vec<Mat3> = (0..2 * n + 1).map(|i| elem(1 << i, 0).matrix()).collect();
    gens.extend((0..2 * n + 1).map(|i| elem(0, 1 << i).matrix()));
    let (_, closure) =
        close_generators(&gens, |x, y| x.mul(y), |x, y| x == y, expected, |m| format!("{m:?}"))?;
    if closure.len() != expected {
        return Err(SylowError::OrderMismatch { expected, got: closure.len() });
    }

    let params: Vec<SzParams> =
        (0..q as u32).flat_map(|a| (0..q as u32).map(move |b| (a, b))).map(|(a, b)| elem(a, b)).collect();
    let index_of = |m: &Mat3| -> Option<usize> {
        // Read (a, b) off the bottom row and check the rest of the shape.
        let (a, b) = (m.entry(2, 1), m.entry(2, 0));
        let idx = a.bits() as usize * q + b.bits() as usize;
        (params[idx].matrix() == *m).then_some(idx)
    };
    for m in &closure {
        if index_of(m).is_none() {
            return Err(SylowError::LawMismatch(format!("closure produced {m:?}")));
        }
    }
    let order = params.len();
    let mats: Vec<Mat3> = params.iter().map(SzParams::matrix).collect();
    let mut table = vec![0usize; order * order];
    for i in 0..order {
        for j in 0..order {
            let prod = mats[i].mul(&mats[j]);
            let idx = index_of(&prod).ok_or_else(|| SylowError::LawMismatch(format!("{prod:?}")))?;
            // Closed form: (a,b)(c,d) = (a+c, b+d+a·c^θ).
            let (p, r) = (params[i], params[j]);
            let want = elem((p.a + r.a).bits(), (p.b + r.b + p.a * r.a.pow(theta)).bits());
            if params[idx] != want {
                return Err(SylowError::LawMismatch(format!("{} * {}", p.label(), r.label())));
            }
            table[i * order + j] = idx;
        }
    }
    let labels = params.iter().map(SzParams::label).collect();
    let table = GroupTable::from_table(order, table, labels)?;
    let z = table.subgroup(0..q)?;
    Ok(SzSylow { n, field, theta, params, table, z })
}

impl SzSylow {
    fn index(&self, a: FieldElement, b: FieldElement) -> usize {
        a.bits() as usize * self.field.size() + b.bits() as usize
    }
}

/// `(a,b)² = (0, a^{1+θ})` and `[(a,b), (c,d)] = (0, a^θ c + a c^θ)` over all elements and pairs.
pub fn sz_extension_check(s: &SzSylow) -> ExtensionReport {
    let f = s.field;
    let g = &s.table;
    let th = s.theta;
    let mut rep = ExtensionReport::default();
    for (x, p) in s.params.iter().enumerate() {
        rep.squares_checked += 1;
        let want = s.index(f.zero(), p.a.pow(1 + th));
        if g.mul(x, x) != want {
            rep.counterexamples.push(format!("{}^2 = {}", p.label(), g.label(g.mul(x, x))));
        }
        for (y, q) in s.params.iter().enumerate() {
            rep.commutators_checked += 1;
            let want = s.index(f.zero(), p.a.pow(th) * q.a + p.a * q.a.pow(th));
            if g.commutator(x, y) != want {
                rep.counterexamples.push(format!("[{}, {}] = {}", p.label(), q.label(), g.label(g.commutator(x, y))));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::build_tower;
    use crate::grp::{center, involutions};

    #[test]
    fn defect_examples() {
        let t = build_tower(1).unwrap();
        let f = t.big();
        assert!(hermitian_defect(&Mat3::identity(f), &t).is_zero());
        let u = f.generator();
        let d = hermitian_defect(&g_matrix(PsuParams { theta: u, gamma: f.zero() }, &t), &t);
        for i in 0..3 {
            for j in 0..3 {
                let want = if (i, j) == (0, 0) { f.one() } else { f.zero() };
                assert_eq!(d.entry(i, j), want);
            }
        }
        // Only entry (1,1) can be nonzero, and it is γ + γ̄ + θθ̄.
        let t2 = build_tower(2).unwrap();
        for theta in t2.big().elements() {
            for gamma in t2.big().elements() {
                let d = hermitian_defect(&g_matrix(PsuParams { theta, gamma }, &t2), &t2);
                let want = t2.trace_big(gamma) + t2.norm_big(theta);
                for i in 0..3 {
                    for j in 0..3 {
                        let expect = if (i, j) == (0, 0) { want } else { t2.big().zero() };
                        assert_eq!(d.entry(i, j), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn g_matrix_examples() {
        let t = build_tower(1).unwrap();
        let f = t.big();
        let (z, o, u) = (f.zero(), f.one(), f.generator());
        assert_eq!(g_matrix(PsuParams { theta: z, gamma: z }, &t), Mat3::identity(f));
        let m = g_matrix(PsuParams { theta: u, gamma: u }, &t);
        assert_eq!(m, Mat3::new([[o, u, u + o], [z, o, z], [z, u, o]]));
        for theta in f.elements() {
            for gamma in f.elements() {
                assert_eq!(g_matrix(PsuParams { theta, gamma }, &t).det(), o);
            }
        }
    }

    #[test]
    fn membership_examples() {
        let t = build_tower(1).unwrap();
        let f = t.big();
        let u = f.generator();
        assert!(k_membership(PsuParams { theta: f.zero(), gamma: f.zero() }, &t));
        assert!(k_membership(PsuParams { theta: u, gamma: u }, &t));
        for theta in f.elements() {
            let count = f.elements().filter(|&gamma| k_membership(PsuParams { theta, gamma }, &t)).count();
            assert_eq!(count, 2);
        }
    }

    #[test]
    fn law_exhaustive_small() {
        for n in 1..=2 {
            let k = psu3_sylow(n).unwrap();
            for &p in &k.params {
                for &q in &k.params {
                    assert!(psu3_law_check(p, q, &k.tower));
                }
            }
            assert_eq!(k.matrix_pairs_checked, k.params.len().pow(2));
        }
    }

    #[test]
    fn psu3_n1_is_quaternion() {
        let k = psu3_sylow(1).unwrap();
        assert_eq!(k.table.order(), 8);
        assert_eq!(involutions(&k.table).len(), 1);
        let order4 = (0..8).filter(|&x| k.table.element_order(x) == 4).count();
        assert_eq!(order4, 6);
        let ext = psu3_extension_check(&k);
        assert!(ext.ok(), "{:?}", ext.counterexamples);
        assert_eq!(ext.squares_checked, 8);
        assert_eq!(ext.commutators_checked, 64);
        let zero = PsuParams { theta: k.tower.big().zero(), gamma: k.tower.big().zero() };
        assert_eq!(k.index_of(zero), Some(0));
    }

    #[test]
    fn psu3_structure_n2() {
        let k = psu3_sylow(2).unwrap();
        assert_eq!(k.table.order(), 64);
        assert_eq!(k.z.order(), 4);
        assert_eq!(center(&k.table), k.z);
        assert!(k.table.is_elementary_abelian(&k.z));
        assert!(k.table.quotient_is_elementary_abelian(&k.z));
        assert!(psu3_extension_check(&k).ok());
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(psu3_sylow(0), Err(SylowError::OutOfRange { .. })));
        assert!(matches!(psu3_sylow(4), Err(SylowError::OutOfRange { .. })));
        assert!(matches!(sz_sylow(2), Err(SylowError::OutOfRange { .. })));
    }

    #[test]
    fn theta_and_gcd() {
        assert_eq!(sz_theta(1).unwrap(), 4);
        assert_eq!(16 % 7, 2);
        assert_eq!(sz_theta(2).unwrap(), 8);
        assert_eq!(64 % 31, 2);
        assert_eq!(sz_gcd_check(1).unwrap(), 1);
        assert_eq!(sz_gcd_check(2).unwrap(), 1);
        assert_eq!(sz_gcd_check(3).unwrap(), 1);
        for n in 1..=8 {
            assert_eq!(sz_gcd_check(n).unwrap(), 1);
        }
    }

    #[test]
    fn suzuki_n1() {
        let s = sz_sylow(1).unwrap();
        assert_eq!(s.table.order(), 64);
        assert_eq!(s.table.identity(), 0);
        assert_eq!(s.table.label(0), "(0,0)");
        let inv = involutions(&s.table);
        assert_eq!(inv.len(), 7);
        assert!(inv.iter().all(|&x| s.params[x].a.is_zero()));
        assert_eq!(center(&s.table), s.z);
        assert_eq!(s.z.order(), 8);
        let rep = sz_extension_check(&s);
        assert!(rep.ok(), "{:?}", rep.counterexamples);
        assert_eq!((rep.squares_checked, rep.commutators_checked), (64, 4096));
        // a ↦ a^5 is injective on GF(8)*, so nonzero a square to nontrivial central elements.
        for a in s.field.elements().filter(|a| !a.is_zero()) {
            let x = s.index(a, s.field.zero());
            let sq = s.table.mul(x, x);
            assert_ne!(sq, 0);
            assert!(s.z.contains(sq));
        }
    }
}
