//! Finite groups as multiplication tables.
//!
//! A [`GroupTable`] is validated on construction (Latin square, identity,
//! inverses, associativity) and immutable afterwards. Subgroup queries used
//! by the structural lemmas live here: centers, involutions, maximal
//! elementary abelian subgroups and the 2-rank.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const MAX_ORDER: usize = 4096;
pub const MAX_ELEMENTARY_SEARCH_ORDER: usize = 1024;
const EXHAUSTIVE_ASSOCIATIVITY_ORDER: usize = 128;
const SAMPLED_TRIPLES: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order {0} exceeds the cap {MAX_ORDER}")]
    TooLarge(usize),
    #[error("empty group")]
    Empty,
    #[error("multiplication table is not a Latin square (row {row})")]
    NotLatin { row: usize },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("closure exceeded the cap of {0} elements")]
    ClosureCap(usize),
    #[error("no generators given")]
    NoGenerators,
    #[error("elements {members:?} do not form a subgroup")]
    NotSubgroup { members: Vec<usize> },
    #[error("subgroup is not central")]
    NotCentral,
    #[error("subgroup is not elementary abelian")]
    NotElementaryAbelian,
    #[error("order {0} is above the elementary abelian search cap {MAX_ELEMENTARY_SEARCH_ORDER}")]
    SearchTooLarge(usize),
    #[error("group file line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("splitting check failed at element {0}")]
    Splitting(usize),
}

/// A finite group presented by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    id: usize,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates and wraps a row-major table (`table[i * order + j] = i·j`).
    pub fn from_table(order: usize, table: Vec<usize>, labels: Vec<String>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        assert_eq!(table.len(), order * order, "table size");
        assert_eq!(labels.len(), order, "label count");
        let mut seen = vec![usize::MAX; order];
        for row in 0..order {
            for j in 0..order {
                let v = table[row * order + j];
                if v >= order || seen[v] == row {
                    return Err(GroupError::NotLatin { row });
                }
                seen[v] = row;
            }
        }
        for col in 0..order {
            let mut hit = vec![false; order];
            for row in 0..order {
                let v = table[row * order + col];
                if std::mem::replace(&mut hit[v], true) {
                    return Err(GroupError::NotLatin { row });
                }
            }
        }
        let id = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let mul: Vec<u16> = table.iter().map(|&v| v as u16).collect();
        let inv = (0..order)
            .map(|x| (0..order).find(|&y| table[x * order + y] == id).expect("Latin rows contain id") as u16)
            .collect();
        let g = GroupTable { order, mul, inv, id, labels };
        g.check_associative()?;
        Ok(g)
    }

    fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order;
        if n <= EXHAUSTIVE_ASSOCIATIVITY_ORDER {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.id
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Row `a` of the table: `b ↦ a·b`.
    pub fn row(&self, a: usize) -> &[u16] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.id {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.commutes(a, b)))
    }

    /// Whether the order is a power of two.
    pub fn is_two_group(&self) -> bool {
        self.order.is_power_of_two()
    }

    /// Smallest subgroup containing `elements`.
    pub fn generated_by(&self, elements: &[usize]) -> Subgroup {
        let mut members = BTreeSet::from([self.id]);
        let mut queue: VecDeque<usize> = VecDeque::from([self.id]);
        while let Some(x) = queue.pop_front() {
            for &s in elements {
                let y = self.mul(x, s);
                if members.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup { members: members.into_iter().collect() }
    }

    /// A generating set chosen greedily in index order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.generated_by(&[]);
        for x in 0..self.order {
            if !span.contains(x) {
                gens.push(x);
                span = self.generated_by(&gens);
            }
        }
        gens
    }

    /// Checks closure and wraps the members as a [`Subgroup`].
    pub fn subgroup(&self, members: impl IntoIterator<Item = usize>) -> Result<Subgroup, GroupError> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        let members: Vec<usize> = set.iter().copied().collect();
        let closed = set.contains(&self.id)
            && members.iter().all(|&a| set.contains(&self.inv(a)))
            && members.iter().all(|&a| members.iter().all(|&b| set.contains(&self.mul(a, b))));
        if !closed {
            return Err(GroupError::NotSubgroup { members });
        }
        Ok(Subgroup { members })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: (0..self.order).collect() }
    }

    pub fn is_central(&self, sub: &Subgroup) -> bool {
        sub.members.iter().all(|&z| (0..self.order).all(|x| self.commutes(z, x)))
    }

    pub fn is_elementary_abelian(&self, sub: &Subgroup) -> bool {
        sub.members.iter().all(|&a| self.mul(a, a) == self.id)
            && sub.members.iter().all(|&a| sub.members.iter().all(|&b| self.commutes(a, b)))
    }

    /// A basis `z_1, …, z_r` of an elementary abelian subgroup, chosen greedily in index order.
    pub fn elementary_basis(&self, sub: &Subgroup) -> Result<Vec<usize>, GroupError> {
        if !self.is_elementary_abelian(sub) {
            return Err(GroupError::NotElementaryAbelian);
        }
        let mut basis = Vec::new();
        let mut span = self.generated_by(&[]);
        for &x in &sub.members {
            if !span.contains(x) {
                basis.push(x);
                span = self.generated_by(&basis);
            }
        }
        Ok(basis)
    }

    /// Whether `G/Z` is elementary abelian for a normal subgroup `Z`.
    pub fn quotient_is_elementary_abelian(&self, z: &Subgroup) -> bool {
        (0..self.order).all(|x| z.contains(self.mul(x, x)))
            && (0..self.order).all(|x| (0..x).all(|y| z.contains(self.commutator(x, y))))
    }

    /// Serialises in the `gtab v1` text format.
    pub fn to_gtab(&self) -> String {
        let mut out = String::with_capacity(self.order * self.order * 4);
        let _ = writeln!(out, "gtab v1 {}", self.order);
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "{i} {l}");
        }
        for a in 0..self.order {
            let row: Vec<String> = self.row(a).iter().map(u16::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn from_gtab(text: &str) -> Result<Self, GroupError> {
        let err = |line: usize, msg: &str| GroupError::Parse { line, msg: msg.to_string() };
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("gtab") || parts.next() != Some("v1") {
            return Err(err(1, "expected `gtab v1 <order>`"));
        }
        let order: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| err(1, "bad order"))?;
        if parts.next().is_some() {
            return Err(err(1, "trailing tokens in header"));
        }
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge(order));
        }
        let mut labels = Vec::with_capacity(order);
        for i in 0..order {
            let lineno = i + 2;
            let line = lines.next().ok_or_else(|| err(lineno, "missing label line"))?;
            let (idx, label) = line.split_once(' ').ok_or_else(|| err(lineno, "expected `index label`"))?;
            if idx.parse::<usize>().ok() != Some(i) {
                return Err(err(lineno, "label index out of sequence"));
            }
            if label.is_empty() {
                return Err(err(lineno, "empty label"));
            }
            labels.push(label.to_string());
        }
        let mut table = Vec::with_capacity(order * order);
        for r in 0..order {
            let lineno = order + 2 + r;
            let line = lines.next().ok_or_else(|| err(lineno, "missing table row"))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| err(lineno, "non-numeric entry"))?;
            if row.len() != order {
                return Err(err(lineno, "row has the wrong length"));
            }
            if row.iter().any(|&v| v >= order) {
                return Err(err(lineno, "entry out of range"));
            }
            table.extend(row);
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(err(2 * order + 2, "trailing content"));
        }
        Self::from_table(order, table, labels)
    }
}

/// A subgroup, as a sorted list of element indices of its parent table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// `log₂` of the order; the rank when the subgroup is elementary abelian.
    pub fn rank(&self) -> usize {
        self.members.len().trailing_zeros() as usize
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}

/// Breadth-first closure of `gens` under `multiply`.
///
/// Element 0 of the result is the identity; the rest are numbered in
/// discovery order (right multiplication by the generators in the order
/// given). Returns the table together with the element values.
pub fn close_generators<T: Clone>(
    gens: &[T],
    multiply: impl Fn(&T, &T) -> T,
    equal: impl Fn(&T, &T) -> bool,
    cap: usize,
    label: impl Fn(&T) -> String,
) -> Result<(GroupTable, Vec<T>), GroupError> {
    let first = gens.first().ok_or(GroupError::NoGenerators)?;
    // The identity is the power of the first generator just before it recurs.
    let mut prev = first.clone();
    let mut cur = multiply(first, first);
    let mut steps = 1;
    while !equal(&cur, first) {
        prev = cur.clone();
        cur = multiply(&cur, first);
        steps += 1;
        if steps > cap {
            return Err(GroupError::ClosureCap(cap));
        }
    }
    let identity = if steps == 1 { first.clone() } else { prev };
    let find = |elems: &[T], x: &T| elems.iter().position(|e| equal(e, x));

    let mut elems = vec![identity];
    // parent[y] = (x, s) with y = x·gens[s]
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < elems.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (s, g) in gens.iter().enumerate() {
            let y = multiply(&elems[i], g);
            let idx = match find(&elems, &y) {
                Some(idx) => idx,
                None => {
                    if elems.len() == cap {
                        return Err(GroupError::ClosureCap(cap));
                    }
                    elems.push(y);
                    parent.push(Some((i, s)));
                    elems.len() - 1
                }
            };
            row.push(idx);
        }
        right.push(row);
        i += 1;
    }
    let n = elems.len();
    if n > MAX_ORDER {
        return Err(GroupError::TooLarge(n));
    }
    // x·y via the word for y: y = parent(y)·s ⇒ x·y = (x·parent(y))·s.
    let mut table = vec![0usize; n * n];
    for x in 0..n {
        table[x * n] = x;
        for y in 1..n {
            let (p, s) = parent[y].expect("non-identity elements have parents");
            table[x * n + y] = right[table[x * n + p]][s];
        }
    }
    let labels = elems.iter().map(&label).collect();
    let g = GroupTable::from_table(n, table, labels)?;
    Ok((g, elems))
}

pub fn center(g: &GroupTable) -> Subgroup {
    Subgroup { members: (0..g.order()).filter(|&z| (0..g.order()).all(|x| g.commutes(z, x))).collect() }
}

pub fn involutions(g: &GroupTable) -> Vec<usize> {
    (0..g.order()).filter(|&x| x != g.identity() && g.mul(x, x) == g.identity()).collect()
}

/// Every involution is central and the center is elementary abelian.
pub fn central_involution_property(g: &GroupTable) -> bool {
    let z = center(g);
    g.is_elementary_abelian(&z) && involutions(g).iter().all(|&x| z.contains(x))
}

/// All maximal elementary abelian 2-subgroups, sorted by rank and then by members.
///
/// Depth-first search over subgroups generated by pairwise commuting
/// involutions. When the involutions commuting with the current subgroup
/// already commute with each other, the unique maximal subgroup above it is
/// taken directly.
pub fn maximal_elementary_abelians(g: &GroupTable) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > MAX_ELEMENTARY_SEARCH_ORDER {
        return Err(GroupError::SearchTooLarge(g.order()));
    }
    let invs = involutions(g);
    let id = g.identity();
    let extend = |members: &[usize], x: usize| -> Vec<usize> {
        let mut out: BTreeSet<usize> = members.iter().copied().collect();
        for &m in members {
            out.insert(g.mul(m, x));
        }
        out.into_iter().collect()
    };

    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![id]];
    while let Some(members) = stack.pop() {
        if !visited.insert(members.clone()) {
            continue;
        }
        let set: HashSet<usize> = members.iter().copied().collect();
        let cands: Vec<usize> = invs
            .iter()
            .copied()
            .filter(|x| !set.contains(x) && members.iter().all(|&m| g.commutes(m, *x)))
            .collect();
        if cands.is_empty() {
            found.insert(Subgroup { members });
            continue;
        }
        let pairwise = cands.iter().all(|&a| cands.iter().all(|&b| g.commutes(a, b)));
        if pairwise {
            let top = cands.iter().fold(members, |acc, &c| if acc.contains(&c) { acc } else { extend(&acc, c) });
            found.insert(Subgroup { members: top });
            continue;
        }
        for &c in &cands {
            let next = extend(&members, c);
            if !visited.contains(&next) {
                stack.push(next);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| (a.rank(), &a.members).cmp(&(b.rank(), &b.members)));
    Ok(out)
}

pub fn two_rank(g: &GroupTable) -> Result<usize, GroupError> {
    Ok(maximal_elementary_abelians(g)?.iter().map(Subgroup::rank).max().unwrap_or(0))
}

/// Componentwise product; element `(a, b)` has index `a · |B| + b`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > MAX_ORDER {
        return Err(GroupError::TooLarge(n));
    }
    let mut table = vec![0usize; n * n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            table[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
        }
    }
    let labels = (0..n).map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb))).collect();
    GroupTable::from_table(n, table, labels)
}

/// Builds `Z × G` for a central subgroup `Z` and checks that
/// `G → Z × G → G`, second-factor injection followed by multiplication,
/// is the identity. Multiplication `Z × G → G` is also checked to be a
/// homomorphism, which is exactly where centrality is needed.
pub fn splitting_check(g: &GroupTable, z: &Subgroup) -> Result<GroupTable, GroupError> {
    if !g.is_central(z) {
        return Err(GroupError::NotCentral);
    }
    let zm = z.members();
    let nz = zm.len();
    let mut ztable = vec![0usize; nz * nz];
    for (i, &a) in zm.iter().enumerate() {
        for (j, &b) in zm.iter().enumerate() {
            ztable[i * nz + j] = zm.binary_search(&g.mul(a, b)).expect("closed subgroup");
        }
    }
    let zlabels = zm.iter().map(|&a| g.label(a).to_string()).collect();
    let zg = GroupTable::from_table(nz, ztable, zlabels)?;
    let prod = direct_product(&zg, g)?;
    let n = g.order();
    let zid = zg.identity();
    let mu = |p: usize| g.mul(zm[p / n], p % n);
    for x in 0..n {
        if mu(zid * n + x) != x {
            return Err(GroupError::Splitting(x));
        }
    }
    for p in 0..prod.order() {
        for q in 0..prod.order() {
            if mu(prod.mul(p, q)) != g.mul(mu(p), mu(q)) {
                return Err(GroupError::Splitting(p));
            }
        }
    }
    Ok(prod)
}
