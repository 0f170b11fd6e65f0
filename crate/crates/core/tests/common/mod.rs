//! Independent oracles for cohomology dimensions.
//!
//! `bar_dim` counts H^n(G; F₂) with normalized bar cochains. For larger
//! groups it first shifts dimension through cosyzygies,
//! H^n(G; F₂) ≅ H^{n−s}(G; Ω^{−s}F₂) for n − s ≥ 1, with Ω^{−1}M the cokernel
//! of a minimal injective hull M ↪ F₂G^t built from the fixed points of M.
#![allow(dead_code)]

use sylowcm_core::f2la::{BitMatrix, BitVector, Echelon};
use sylowcm_core::grp::GroupTable;

/// A finite-dimensional F₂G-module: `action[g] · v = g·v`.
pub struct Module {
    pub dim: usize,
    pub action: Vec<BitMatrix>,
}

pub fn trivial(g: &GroupTable) -> Module {
    Module { dim: 1, action: (0..g.order()).map(|_| BitMatrix::identity(1)).collect() }
}

fn fixed_points(g: &GroupTable, m: &Module) -> BitMatrix {
    let mut rows = Vec::new();
    for x in 0..g.order() {
        for r in 0..m.dim {
            let mut row = m.action[x].row(r).clone();
            row.flip(r);
            rows.push(row);
        }
    }
    BitMatrix::from_rows(m.dim, rows).unwrap().kernel_basis()
}

/// Ω^{−1}M via `m ↦ Σ_i Σ_g f_i(g⁻¹m)·(i, g)`, with `f_i` coordinate
/// functionals that separate the fixed points.
pub fn cosyzygy(g: &GroupTable, m: &Module) -> Module {
    let n = g.order();
    let fixed = fixed_points(g, m);
    let (_, pivots) = fixed.rref();
    let t = pivots.len();
    let width = t * n;
    let image: Vec<BitVector> = (0..m.dim)
        .map(|c| {
            let mut v = BitVector::zeros(width);
            for (i, &p) in pivots.iter().enumerate() {
                for x in 0..n {
                    if m.action[g.inv(x)].get(p, c) {
                        v.set(i * n + x, true);
                    }
                }
            }
            v
        })
        .collect();
    let w = BitMatrix::from_rows(width, image).unwrap();
    assert_eq!(w.rank(), m.dim, "hull map must be injective");
    let (rref, wp) = w.rref();
    let reduce = |mut v: BitVector| {
        for (i, &p) in wp.iter().enumerate() {
            if v.get(p) {
                v.xor_assign(rref.row(i));
            }
        }
        v
    };
    let free: Vec<usize> = (0..width).filter(|c| !wp.contains(c)).collect();
    let action = (0..n)
        .map(|h| {
            let mut a = BitMatrix::zeros(free.len(), free.len());
            for (j, &c) in free.iter().enumerate() {
                let (block, x) = (c / n, c % n);
                let v = reduce(BitVector::unit(width, block * n + g.mul(h, x)));
                for (i, &f) in free.iter().enumerate() {
                    if v.get(f) {
                        a.set(i, j, true);
                    }
                }
            }
            a
        })
        .collect();
    Module { dim: free.len(), action }
}

/// Rank of δ: C^k(G; M) → C^{k+1}(G; M) on normalized cochains.
fn coboundary_rank(g: &GroupTable, m: &Module, k: usize) -> usize {
    let id = g.identity();
    let nonid: Vec<usize> = (0..g.order()).filter(|&x| x != id).collect();
    let q = nonid.len();
    let pos: Vec<Option<usize>> =
        (0..g.order()).map(|x| nonid.iter().position(|&y| y == x)).collect();
    let tuples_k = q.pow(k as u32);
    let width = tuples_k * m.dim;
    let mut ech = Echelon::new(width);
    // Index of a k-tuple in base q, first entry most significant.
    let encode = |t: &[usize]| -> Option<usize> {
        t.iter().try_fold(0usize, |acc, &x| pos[x].map(|p| acc * q + p))
    };
    let mut tuple = vec![0usize; k + 1];
    for code in 0..q.pow(k as u32 + 1) {
        let mut c = code;
        for slot in tuple.iter_mut().rev() {
            *slot = nonid[c % q];
            c /= q;
        }
        for a in 0..m.dim {
            let mut row = BitVector::zeros(width);
            // g1 · f(g2, …, g_{k+1})
            let tail = encode(&tuple[1..]).unwrap();
            for c in 0..m.dim {
                if m.action[tuple[0]].get(a, c) {
                    row.flip(tail * m.dim + c);
                }
            }
            for i in 0..k {
                let mut merged = tuple[..i].to_vec();
                merged.push(g.mul(tuple[i], tuple[i + 1]));
                merged.extend_from_slice(&tuple[i + 2..]);
                if let Some(idx) = encode(&merged) {
                    row.flip(idx * m.dim + a);
                }
            }
            let head = encode(&tuple[..k]).unwrap();
            row.flip(head * m.dim + a);
            ech.insert(row);
        }
    }
    ech.rank()
}

/// dim H^k(G; M) from normalized bar cochains.
pub fn bar_cohomology_dim(g: &GroupTable, m: &Module, k: usize) -> usize {
    let q = g.order() - 1;
    let ck = q.pow(k as u32) * m.dim;
    let kernel = ck - coboundary_rank(g, m, k);
    let image = if k == 0 { 0 } else { coboundary_rank(g, m, k - 1) };
    kernel - image
}

/// dim H^n(G; F₂) after `s` dimension shifts; requires `s == 0` or `n − s ≥ 1`.
pub fn bar_dim_shifted(g: &GroupTable, n: usize, s: usize) -> usize {
    assert!(s == 0 || n > s);
    let mut m = trivial(g);
    for _ in 0..s {
        m = cosyzygy(g, &m);
    }
    bar_cohomology_dim(g, &m, n - s)
}

/// The shift keeps cochain spaces small: none for order ≤ 8, down to H^1 above.
pub fn bar_dim(g: &GroupTable, n: usize) -> usize {
    let s = if g.order() <= 8 || n <= 1 { 0 } else { n - 1 };
    bar_dim_shifted(g, n, s)
}

/// log₂ |Hom(G, Z/2)|, by checking every assignment on a generating set.
pub fn hom_to_z2_dim(g: &GroupTable) -> (usize, Vec<Vec<bool>>) {
    let gens = g.generating_set();
    let mut homs = Vec::new();
    for mask in 0u32..(1 << gens.len()) {
        // Extend along words in the generators by breadth-first search.
        let mut value: Vec<Option<bool>> = vec![None; g.order()];
        value[g.identity()] = Some(false);
        let mut queue = vec![g.identity()];
        let mut ok = true;
        while let Some(x) = queue.pop() {
            for (i, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let v = value[x].unwrap() ^ (mask >> i & 1 == 1);
                match value[y] {
                    None => {
                        value[y] = Some(v);
                        queue.push(y);
                    }
                    Some(w) if w != v => ok = false,
                    _ => {}
                }
            }
        }
        if ok {
            homs.push(value.into_iter().map(Option::unwrap).collect());
        }
    }
    (homs.len().trailing_zeros() as usize, homs)
}
