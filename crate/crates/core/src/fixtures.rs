//! Small reference groups: the oracle and negative-control fixtures.

use crate::grp::GroupTable;

/// Fixture names in the order they are listed by the CLI.
pub const FIXTURE_NAMES: [&str; 7] = ["z2", "z4", "z2xz2", "z2xz2xz2", "d8", "q8", "sd16"];

pub fn by_name(name: &str) -> Option<GroupTable> {
    Some(match name {
        "z2" => cyclic(2),
        "z4" => cyclic(4),
        "z2xz2" => elementary_abelian(2),
        "z2xz2xz2" => elementary_abelian(3),
        "d8" => dihedral8(),
        "q8" => quaternion8(),
        "sd16" => semidihedral16(),
        _ => return None,
    })
}

pub fn description(name: &str) -> Option<&'static str> {
    Some(match name {
        "z2" => "cyclic group of order 2",
        "z4" => "cyclic group of order 4",
        "z2xz2" => "Klein four group",
        "z2xz2xz2" => "elementary abelian group of order 8",
        "d8" => "dihedral group of order 8",
        "q8" => "quaternion group of order 8",
        "sd16" => "semidihedral group of order 16",
        _ => return None,
    })
}

pub fn cyclic(n: usize) -> GroupTable {
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    GroupTable::from_table(n, table, labels).expect("cyclic group table")
}

/// `(Z/2)^r` with elements as bit masks.
pub fn elementary_abelian(r: u32) -> GroupTable {
    let n = 1usize << r;
    let table = (0..n * n).map(|k| (k / n) ^ (k % n)).collect();
    let labels = (0..n).map(|i| format!("{i:0width$b}", width = r.max(1) as usize)).collect();
    GroupTable::from_table(n, table, labels).expect("elementary abelian table")
}

/// Groups `⟨a, b⟩` of order `2m` with `|a| = m`, `b a b⁻¹ = a^twist` and `b² = a^square`.
/// Element `a^i b^j` has index `i + m·j`.
fn metacyclic(m: usize, twist: usize, square: usize) -> GroupTable {
    let n = 2 * m;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (i, j) = (x % m, x / m);
        for y in 0..n {
            let (k, l) = (y % m, y / m);
            let conj = if j == 1 { twist * k } else { k };
            let carry = if j == 1 && l == 1 { square } else { 0 };
            table[x * n + y] = (i + conj + carry) % m + m * ((j + l) % 2);
        }
    }
    let labels = (0..n)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            let a = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a{i}"),
            };
            match (a.is_empty(), j) {
                (true, 0) => "1".to_string(),
                (_, 0) => a,
                (_, _) => format!("{a}b"),
            }
        })
        .collect();
    GroupTable::from_table(n, table, labels).expect("metacyclic table")
}

pub fn dihedral8() -> GroupTable {
    metacyclic(4, 3, 0)
}

pub fn quaternion8() -> GroupTable {
    metacyclic(4, 3, 2)
}

pub fn semidihedral16() -> GroupTable {
    metacyclic(8, 3, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{center, involutions};

    fn order_census(g: &GroupTable) -> Vec<usize> {
        let mut c = vec![0; g.order() + 1];
        for x in 0..g.order() {
            c[g.element_order(x)] += 1;
        }
        c
    }

    #[test]
    fn fixture_orders() {
        let orders: Vec<usize> = FIXTURE_NAMES.iter().map(|n| by_name(n).unwrap().order()).collect();
        assert_eq!(orders, vec![2, 4, 4, 8, 8, 8, 16]);
        assert!(by_name("m11").is_none());
        assert!(FIXTURE_NAMES.iter().all(|n| description(n).is_some()));
    }

    #[test]
    fn order_censuses() {
        // Q8: one involution, six elements of order 4.
        assert_eq!(order_census(&quaternion8())[1..5], [1, 1, 0, 6]);
        // D8: five involutions, two elements of order 4.
        assert_eq!(order_census(&dihedral8())[1..5], [1, 5, 0, 2]);
        // SD16: 5 involutions, 6 of order 4, 4 of order 8.
        assert_eq!(order_census(&semidihedral16())[1..9], [1, 5, 0, 6, 0, 0, 0, 4]);
        assert!(!semidihedral16().is_abelian());
        assert_eq!(center(&semidihedral16()).order(), 2);
        assert_eq!(involutions(&cyclic(4)), vec![2]);
    }
}
