//! Finite groups by multiplication table, plus a small builtin library of
//! permutation groups with named subgroups.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group given by its multiplication table; `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
    /// Permutation realization (degree, image of each element), when known.
    perms: Option<(usize, Vec<Vec<usize>>)>,
}

/// On-disk group format: `{"order": n, "table": [[...]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates a multiplication table exhaustively (closure, associativity,
    /// identity, inverses).
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table is not an n x n array of indices < n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut g = FiniteGroup { name: name.into(), table, inverse, identity, generators: Vec::new(), perms: None };
        g.generators = g.greedy_generators();
        Ok(g)
    }

    pub fn from_file(name: impl Into<String>, file: &GroupFile) -> Result<Self> {
        if file.table.len() != file.order {
            return Err(Error::InvalidGroup(format!("order {} but table has {} rows", file.order, file.table.len())));
        }
        Self::from_table(name, file.table.clone())
    }

    /// Closes a set of permutations of `0..degree` under composition.
    /// Element 0 is the identity; the rest appear in breadth-first order.
    pub fn from_permutations(name: impl Into<String>, degree: usize, gens: &[Vec<usize>]) -> Result<Self> {
        for g in gens {
            let set: BTreeSet<_> = g.iter().copied().collect();
            if g.len() != degree || set.len() != degree || g.iter().any(|&x| x >= degree) {
                return Err(Error::InvalidGroup(format!("{g:?} is not a permutation of 0..{degree}")));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for g in gens {
                let p = compose(&elems[e], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let table: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| index[&compose(&elems[a], &elems[b])]).collect()).collect();
        let mut g = Self::from_table(name, table)?;
        g.generators = gens.iter().map(|p| index[p]).filter(|&i| i != 0).collect::<BTreeSet<_>>().into_iter().collect();
        g.perms = Some((degree, elems));
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn order(&self) -> usize {
        self.table.len()
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
    pub fn inverse_table(&self) -> &[usize] {
        &self.inverse
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn permutation_degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|(d, _)| *d)
    }
    /// Image of element `a` as a permutation, when the group was built from
    /// permutations.
    pub fn as_permutation(&self, a: usize) -> Option<&[usize]> {
        self.perms.as_ref().map(|(_, p)| p[a].as_slice())
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Replaces the stored generating set; identity entries and duplicates are
    /// dropped, and an empty list keeps the computed one.
    pub fn with_generators(mut self, gens: Vec<usize>) -> Self {
        let gens: Vec<usize> =
            gens.into_iter().filter(|&g| g != self.identity).collect::<BTreeSet<_>>().into_iter().collect();
        if !gens.is_empty() && self.closure(&gens).len() == self.order() {
            self.generators = gens;
        }
        self
    }

    /// Subgroup generated by `gens`, identity first, breadth-first order.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut elems = vec![self.identity];
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(e) = queue.pop_front() {
            for &g in gens {
                let p = self.mul(e, g);
                if !seen[p] {
                    seen[p] = true;
                    elems.push(p);
                    queue.push_back(p);
                }
            }
        }
        elems
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: BTreeSet<usize> = BTreeSet::from([self.identity]);
        for a in 0..self.order() {
            if !span.contains(&a) {
                gens.push(a);
                span = self.closure(&gens).into_iter().collect();
            }
        }
        gens
    }

    /// The subgroup on `elems` (closed under the table) as a group in its own
    /// right, indexed by position in `elems`.
    pub fn subgroup(&self, name: impl Into<String>, elems: &[usize]) -> Result<FiniteGroup> {
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut table = Vec::with_capacity(elems.len());
        for &a in elems {
            let mut row = Vec::with_capacity(elems.len());
            for &b in elems {
                row.push(*pos.get(&self.mul(a, b)).ok_or_else(|| Error::InvalidGroup("subset not closed".into()))?);
            }
            table.push(row);
        }
        let mut sub = FiniteGroup::from_table(name, table)?;
        if let Some((d, p)) = &self.perms {
            sub.perms = Some((*d, elems.iter().map(|&e| p[e].clone()).collect()));
        }
        Ok(sub)
    }

    /// Cyclic subgroups plus the trivial and whole group, deduplicated; used
    /// to produce permutation modules on cosets.
    pub fn some_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut push = |elems: Vec<usize>| {
            let key: Vec<usize> = elems.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
            if found.insert(key) {
                out.push(elems);
            }
        };
        push(vec![self.identity]);
        for a in 0..self.order() {
            push(self.closure(&[a]));
        }
        push(self.closure(&self.generators));
        out
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a·b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn cycle(degree: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for w in 0..points.len() {
        p[points[w]] = points[(w + 1) % points.len()];
    }
    p
}

fn product(degree: usize, cycles: &[&[usize]]) -> Vec<usize> {
    cycles.iter().fold((0..degree).collect(), |acc, c| compose(&acc, &cycle(degree, c)))
}

fn quaternion_left_mult(left: usize) -> Vec<usize> {
    // Elements: 0..4 = 1, i, j, k and 4..8 their negatives.
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    (0..8)
        .map(|x| {
            let (sa, ua) = (left >= 4, left % 4);
            let (sb, ub) = (x >= 4, x % 4);
            let (s, u) = UNIT[ua][ub];
            if s ^ sa ^ sb {
                u + 4
            } else {
                u
            }
        })
        .collect()
}

struct Builtin {
    degree: usize,
    gens: Vec<Vec<usize>>,
    subgroups: Vec<(String, Vec<Vec<usize>>)>,
}

fn builtin_data(name: &str) -> Option<Builtin> {
    let b = |degree, gens: Vec<Vec<usize>>, subs: Vec<(&str, Vec<Vec<usize>>)>| Builtin {
        degree,
        gens,
        subgroups: subs.into_iter().map(|(n, g)| (n.to_string(), g)).collect(),
    };
    match name {
        "S3" => Some(b(
            3,
            vec![cycle(3, &[0, 1]), cycle(3, &[0, 1, 2])],
            vec![("C3", vec![cycle(3, &[0, 1, 2])]), ("C2", vec![cycle(3, &[0, 1])]), ("1", vec![])],
        )),
        "S4" => Some(b(
            4,
            vec![cycle(4, &[0, 1]), cycle(4, &[0, 1, 2, 3])],
            vec![
                ("A4", vec![cycle(4, &[0, 1, 2]), cycle(4, &[1, 2, 3])]),
                ("D4", vec![cycle(4, &[0, 1, 2, 3]), cycle(4, &[0, 2])]),
                ("S3", vec![cycle(4, &[0, 1]), cycle(4, &[0, 1, 2])]),
                ("V4", vec![product(4, &[&[0, 1], &[2, 3]]), product(4, &[&[0, 2], &[1, 3]])]),
                ("C4", vec![cycle(4, &[0, 1, 2, 3])]),
                ("C3", vec![cycle(4, &[0, 1, 2])]),
                ("C2", vec![cycle(4, &[0, 1])]),
                ("1", vec![]),
            ],
        )),
        "D4" => Some(b(
            4,
            vec![cycle(4, &[0, 1, 2, 3]), cycle(4, &[1, 3])],
            vec![
                ("C4", vec![cycle(4, &[0, 1, 2, 3])]),
                ("C2", vec![cycle(4, &[1, 3])]),
                ("Z2", vec![product(4, &[&[0, 2], &[1, 3]])]),
                ("V4", vec![product(4, &[&[0, 2], &[1, 3]]), cycle(4, &[1, 3])]),
                ("1", vec![]),
            ],
        )),
        "V4" | "K4" => Some(b(
            4,
            vec![product(4, &[&[0, 1], &[2, 3]]), product(4, &[&[0, 2], &[1, 3]])],
            vec![("C2", vec![product(4, &[&[0, 1], &[2, 3]])]), ("1", vec![])],
        )),
        "Q8" => Some(b(
            8,
            vec![quaternion_left_mult(1), quaternion_left_mult(2)],
            vec![
                ("C4", vec![quaternion_left_mult(1)]),
                ("C4j", vec![quaternion_left_mult(2)]),
                ("C4k", vec![quaternion_left_mult(3)]),
                ("C2", vec![quaternion_left_mult(4)]),
                ("1", vec![]),
            ],
        )),
        _ => {
            let n: usize = name.strip_prefix('C')?.parse().ok()?;
            if !(1..=12).contains(&n) {
                return None;
            }
            let gen: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let subs = (1..=n)
                .filter(|d| n.is_multiple_of(*d))
                .map(|d| {
                    let k = n / d;
                    let g: Vec<usize> = (0..n).map(|i| (i + k) % n).collect();
                    (format!("C{d}"), if d == 1 { vec![] } else { vec![g] })
                })
                .collect();
            Some(Builtin { degree: n, gens: vec![gen], subgroups: subs })
        }
    }
}

/// Names of all builtin groups.
pub fn builtin_group_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=12).map(|n| format!("C{n}")).collect();
    names.extend(["V4", "S3", "S4", "D4", "Q8"].iter().map(|s| s.to_string()));
    names
}

pub fn builtin_group(name: &str) -> Result<FiniteGroup> {
    let data = builtin_data(name).ok_or_else(|| Error::Config(format!("unknown builtin group '{name}'")))?;
    FiniteGroup::from_permutations(name, data.degree, &data.gens)
}

/// Named subgroups of a builtin group, with their generator element indices.
pub fn builtin_subgroups(group: &FiniteGroup) -> Result<Vec<(String, Vec<usize>)>> {
    let data = builtin_data(group.name())
        .ok_or_else(|| Error::Config(format!("'{}' is not a builtin group", group.name())))?;
    let (degree, elems) = group.perms.as_ref().ok_or_else(|| Error::Config("no permutation data".into()))?;
    // a subgroup may carry a builtin name but act on more points
    let foreign = || Error::Config(format!("'{}' is not the builtin group of that name", group.name()));
    if *degree != data.degree {
        return Err(foreign());
    }
    let mut out = Vec::new();
    for (sub, gens) in data.subgroups {
        let idx = gens.iter().map(|p| elems.iter().position(|e| e == p).ok_or_else(foreign)).collect::<Result<_>>()?;
        out.push((sub, idx));
    }
    if !out.iter().any(|(n, _)| n == group.name()) {
        out.push((group.name().to_string(), group.generators().to_vec()));
    }
    Ok(out)
}

/// Resolves a subgroup of a builtin group by its name, e.g. `"C3"` in `S3`.
pub fn builtin_subgroup(group: &FiniteGroup, sub: &str) -> Result<Vec<usize>> {
    builtin_subgroups(group)?
        .into_iter()
        .find(|(n, _)| n == sub)
        .map(|(_, g)| g)
        .ok_or_else(|| Error::Config(format!("group {} has no builtin subgroup '{sub}'", group.name())))
}

/// Parses `"C3<S3"` into `("C3", "S3")`.
pub fn parse_pair(s: &str) -> Option<(&str, &str)> {
    let (sub, g) = s.split_once('<')?;
    Some((sub.trim(), g.trim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_orders() {
        let expect = [("S3", 6), ("S4", 24), ("D4", 8), ("Q8", 8), ("V4", 4), ("C12", 12), ("C1", 1)];
        for (n, o) in expect {
            assert_eq!(builtin_group(n).unwrap().order(), o, "{n}");
        }
        assert!(builtin_group("C13").is_err());
    }

    #[test]
    fn subgroup_orders() {
        let cases = [
            ("S3", "C3", 3),
            ("S3", "C2", 2),
            ("S4", "A4", 12),
            ("S4", "D4", 8),
            ("S4", "V4", 4),
            ("D4", "C2", 2),
            ("D4", "V4", 4),
            ("Q8", "C4", 4),
            ("Q8", "C2", 2),
            ("C12", "C4", 4),
            ("C4", "C2", 2),
        ];
        for (g, h, o) in cases {
            let grp = builtin_group(g).unwrap();
            let gens = builtin_subgroup(&grp, h).unwrap();
            assert_eq!(grp.closure(&gens).len(), o, "{h}<{g}");
        }
    }

    #[test]
    fn quaternion_relations() {
        let q = builtin_group("Q8").unwrap();
        let i = builtin_subgroup(&q, "C4").unwrap()[0];
        let m1 = builtin_subgroup(&q, "C2").unwrap()[0];
        assert_eq!(q.element_order(i), 4);
        assert_eq!(q.mul(i, i), m1);
        // only one element of order two
        assert_eq!((0..8).filter(|&a| q.element_order(a) == 2).count(), 1);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::from_table("x", vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table("x", vec![vec![0, 2], vec![1, 0]]).is_err());
        let file: GroupFile = serde_json::from_str(r#"{"order": 2, "table": [[0,1],[1,0]]}"#).unwrap();
        let g = FiniteGroup::from_file("c2", &file).unwrap();
        assert_eq!(g.generators(), &[1]);
    }

    #[test]
    fn pair_syntax() {
        assert_eq!(parse_pair("C3<S3"), Some(("C3", "S3")));
        assert_eq!(parse_pair("S3"), None);
    }
}
