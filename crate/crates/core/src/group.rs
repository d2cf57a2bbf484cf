//! Finite groups as Cayley tables: subgroups, conjugacy classes,
//! centralizers, cosets, and actions on finite sets.
//!
//! Groups stay small here (the subgroup enumeration cap is 64), so the
//! representation is the full multiplication table with elements named by
//! index. Built-in constructors cover the groups the homology engines need:
//! cyclic, dihedral, symmetric (n <= 5) and direct products.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::GroupError;

/// Hard cap for subgroup enumeration and orbit category construction.
pub const SUBGROUP_ENUMERATION_CAP: usize = 64;

/// A finite group given by its Cayley table; `table[a][b]` is the index of
/// the product `a * b`. The table is verified at construction: two-sided
/// identity, inverses, associativity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<FiniteGroup, GroupError> {
        let order = table.len();
        if order == 0 || table.iter().any(|row| row.len() != order) {
            return Err(GroupError::BadTableShape(order));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange(i, j));
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = vec![usize::MAX; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverses[a] = inv;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let names = match names {
            Some(n) if n.len() == order => n,
            _ => (0..order).map(|i| format!("x{i}")).collect(),
        };
        Ok(FiniteGroup {
            order,
            table,
            identity,
            inverses,
            names,
        })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_table(vec![vec![0]], Some(vec!["e".into()])).unwrap()
    }

    /// Cyclic group of order `n`, elements named `e, g, g2, ...`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        FiniteGroup::from_table(table, Some(names)).unwrap()
    }

    /// Dihedral group of order `2n`: rotations `r0..r(n-1)` then reflections
    /// `s0..s(n-1)`, with `si = s0 * ri` and `s ri s = r(-i)`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let order = 2 * n;
        // Element i < n is rotation by i; element n + i is reflection s*r^i.
        let mul = |a: usize, b: usize| -> usize {
            match (a < n, b < n) {
                (true, true) => (a + b) % n,
                (true, false) => n + (b - n + n - a % n) % n,
                (false, true) => n + ((a - n) + b) % n,
                (false, false) => (n + (b - n) - (a - n) % n) % n,
            }
        };
        let table = (0..order).map(|a| (0..order).map(|b| mul(a, b)).collect()).collect();
        let names = (0..order)
            .map(|i| if i < n { format!("r{i}") } else { format!("s{}", i - n) })
            .collect();
        FiniteGroup::from_table(table, Some(names)).unwrap()
    }

    /// Symmetric group on `n <= 5` letters; elements are permutations in
    /// lexicographic one-line order, composition `(pq)(x) = p(q(x))`.
    pub fn symmetric(n: usize) -> FiniteGroup {
        assert!((1..=5).contains(&n), "symmetric groups supported for n <= 5");
        let perms = permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                        index_of(&composed)
                    })
                    .collect()
            })
            .collect();
        let names = perms
            .iter()
            .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>())
            .collect();
        FiniteGroup::from_table(table, Some(names)).unwrap()
    }

    /// Direct product; elements ordered with the first factor major, named `a|b`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let order = a.order * b.order;
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut table = vec![vec![0; order]; order];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        table[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
                    }
                }
            }
        }
        let names = (0..a.order)
            .flat_map(|x| {
                let b_names = &b.names;
                let an = a.names[x].clone();
                b_names.iter().map(move |bn| format!("{an}|{bn}"))
            })
            .collect();
        FiniteGroup::from_table(table, Some(names)).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `gens` (closure under multiplication).
    pub fn generated_subgroup(&self, gens: &[usize]) -> Subgroup {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        seen.insert(self.identity);
        let mut queue: VecDeque<usize> = gens.iter().copied().collect();
        while let Some(g) = queue.pop_front() {
            if seen.insert(g) {
                for &h in seen.clone().iter() {
                    queue.push_back(self.mul(g, h));
                    queue.push_back(self.mul(h, g));
                }
                queue.push_back(self.inv(g));
            }
        }
        Subgroup {
            elements: seen.into_iter().collect(),
        }
    }

    /// Every subgroup exactly once, sorted by order then lexicographically by
    /// element set. Enumerates by closing known subgroups under one extra
    /// generator, which scales with the number of subgroups rather than 2^|G|.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        if self.order > SUBGROUP_ENUMERATION_CAP {
            return Err(GroupError::LimitExceeded(self.order, SUBGROUP_ENUMERATION_CAP));
        }
        let mut found: HashSet<Vec<usize>> = HashSet::new();
        let trivial = self.generated_subgroup(&[]);
        let mut queue = VecDeque::new();
        found.insert(trivial.elements.clone());
        queue.push_back(trivial);
        while let Some(h) = queue.pop_front() {
            for g in 0..self.order {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.elements.clone();
                gens.push(g);
                let bigger = self.generated_subgroup(&gens);
                if found.insert(bigger.elements.clone()) {
                    queue.push_back(bigger);
                }
            }
        }
        let mut list: Vec<Subgroup> = found
            .into_iter()
            .map(|elements| Subgroup { elements })
            .collect();
        list.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements.cmp(&b.elements))
        });
        Ok(list)
    }

    /// Conjugacy classes as sorted element sets, ordered by minimal element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class: BTreeSet<usize> = BTreeSet::new();
            for g in 0..self.order {
                class.insert(self.conjugate(g, x));
            }
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// The centralizer `{ h : hx = xh }` of `x`.
    pub fn centralizer(&self, x: usize) -> Result<Subgroup, GroupError> {
        if x >= self.order {
            return Err(GroupError::NoSuchElement(x, self.order));
        }
        let elements = (0..self.order)
            .filter(|&h| self.mul(h, x) == self.mul(x, h))
            .collect();
        Ok(Subgroup { elements })
    }

    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup, GroupError> {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if set.iter().any(|&x| x >= self.order) {
            return Err(GroupError::NotASubgroup("element out of range".into()));
        }
        if !set.contains(&self.identity) {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        for &a in &set {
            if !set.contains(&self.inv(a)) {
                return Err(GroupError::NotASubgroup(format!(
                    "not closed under inverse of {}",
                    self.names[a]
                )));
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup(format!(
                        "not closed under {} * {}",
                        self.names[a], self.names[b]
                    )));
                }
            }
        }
        Ok(Subgroup {
            elements: set.into_iter().collect(),
        })
    }

    /// Left cosets `gH`, each sorted, ordered by minimal representative.
    pub fn left_cosets(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut cosets = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            let coset: Vec<usize> = {
                let set: BTreeSet<usize> = h.elements.iter().map(|&x| self.mul(g, x)).collect();
                set.into_iter().collect()
            };
            for &y in &coset {
                seen[y] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// The left-translation action of the group on the cosets of `i`,
    /// cosets labeled canonically by minimal representative.
    pub fn coset_action(&self, i: &Subgroup) -> Result<GroupAction, GroupError> {
        self.subgroup_from_elements(&i.elements)?; // re-verifies membership
        let cosets = self.left_cosets(i);
        let coset_of = |x: usize| cosets.iter().position(|c| c.contains(&x)).unwrap();
        let table = (0..self.order)
            .map(|g| cosets.iter().map(|c| coset_of(self.mul(g, c[0]))).collect())
            .collect();
        GroupAction::new(self.clone(), cosets.len(), table)
    }

    /// Reindexes a subgroup as a standalone group; returns the group together
    /// with the map from new indices back to parent elements.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let elems = h.elements.clone();
        let pos = |x: usize| elems.iter().position(|&y| y == x).unwrap();
        let table = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let names = elems.iter().map(|&x| self.names[x].clone()).collect();
        let g = FiniteGroup::from_table(table, Some(names)).unwrap();
        (g, elems)
    }
}

/// A subgroup of some ambient group, stored as a sorted element index set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let set: BTreeSet<usize> = self.elements.iter().map(|&x| group.conjugate(g, x)).collect();
        Subgroup {
            elements: set.into_iter().collect(),
        }
    }
}

/// A finite group acting on `{0, .., set_size-1}`; verified at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub group: FiniteGroup,
    pub set_size: usize,
    table: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(
        group: FiniteGroup,
        set_size: usize,
        table: Vec<Vec<usize>>,
    ) -> Result<GroupAction, GroupError> {
        if table.len() != group.order() || table.iter().any(|r| r.len() != set_size) {
            return Err(GroupError::InvalidAction("table shape mismatch".into()));
        }
        if table
            .iter()
            .any(|r| r.iter().any(|&x| x >= set_size))
        {
            return Err(GroupError::InvalidAction("point out of range".into()));
        }
        let e = group.identity();
        if (0..set_size).any(|x| table[e][x] != x) {
            return Err(GroupError::InvalidAction("identity does not act trivially".into()));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                for x in 0..set_size {
                    if table[gh][x] != table[g][table[h][x]] {
                        return Err(GroupError::InvalidAction(format!(
                            "action({}, action({}, {x})) != action({}{}, {x})",
                            group.element_name(g),
                            group.element_name(h),
                            group.element_name(g),
                            group.element_name(h),
                        )));
                    }
                }
            }
        }
        Ok(GroupAction {
            group,
            set_size,
            table,
        })
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.table[g][x]
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = (0..self.group.order()).map(|g| self.apply(g, x)).collect();
        set.into_iter().collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.set_size > 0 && self.orbit(0).len() == self.set_size
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        Subgroup {
            elements: (0..self.group.order()).filter(|&g| self.apply(g, x) == x).collect(),
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, &mut out, n);
    out.sort();
    out
}

fn heap_permute(items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, k: usize) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, out, k - 1);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
