//! Full subgroup lattices of capped-order groups.
//!
//! Enumeration seeds with the cyclic subgroups and closes under joins to a
//! fixpoint. Only one representative per conjugacy class is ever joined:
//! if `K = ⟨H, x⟩` then every conjugate of `K` is the join of a conjugate of
//! `H` with a cyclic subgroup, so joining class representatives with all
//! cyclic subgroups reaches every class, and each new class is expanded to
//! its full conjugation orbit.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::permcore::{gcd, PermGroup};

pub const DEFAULT_SUBGROUP_LIMIT: usize = 20000;

#[derive(Clone, Debug)]
pub struct SubgroupRecord {
    pub elems: BitSet,
    pub order: usize,
    /// Small generating set (element indices of the ambient group).
    pub gens: Vec<usize>,
    pub normal: bool,
    pub subnormal: bool,
    pub abelian: bool,
    pub class_id: usize,
}

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Record index of the representative (the smallest in canonical order).
    pub rep: usize,
    /// Record indices of all members, ascending.
    pub members: Vec<usize>,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// All subgroups, sorted by order and then lexicographically by element set.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    records: Vec<SubgroupRecord>,
    classes: Vec<SubgroupClass>,
    index: HashMap<BitSet, usize>,
}

impl SubgroupLattice {
    pub fn records(&self) -> &[SubgroupRecord] {
        &self.records
    }

    pub fn record(&self, i: usize) -> &SubgroupRecord {
        &self.records[i]
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &SubgroupClass {
        &self.classes[id]
    }

    /// Representative record of a class.
    pub fn class_rep(&self, id: usize) -> &SubgroupRecord {
        &self.records[self.classes[id].rep]
    }

    /// Record index of a subgroup given by its element set.
    pub fn find(&self, elems: &BitSet) -> Option<usize> {
        self.index.get(elems).copied()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

fn conjugate_set(g: &PermGroup, set: &BitSet, by: usize) -> BitSet {
    BitSet::from_indices(g.order(), set.iter().map(|x| g.conj(x, by)))
}

struct Enumerator<'a> {
    group: &'a PermGroup,
    group_gens: Vec<usize>,
    limit: usize,
    /// Element set -> orbit id.
    known: HashMap<BitSet, usize>,
    /// One (set, generators) per orbit, in discovery order.
    reps: Vec<(BitSet, Vec<usize>)>,
}

impl Enumerator<'_> {
    fn add_class(&mut self, set: BitSet, gens: Vec<usize>) -> Result<()> {
        if self.known.contains_key(&set) {
            return Ok(());
        }
        let orbit_id = self.reps.len();
        let mut orbit = vec![set.clone()];
        self.known.insert(set.clone(), orbit_id);
        let mut i = 0;
        while i < orbit.len() {
            for &c in &self.group_gens {
                let conj = conjugate_set(self.group, &orbit[i], c);
                if !self.known.contains_key(&conj) {
                    self.known.insert(conj.clone(), orbit_id);
                    orbit.push(conj);
                }
            }
            i += 1;
            if self.known.len() > self.limit {
                return Err(Error::SubgroupLimit {
                    count: self.known.len(),
                    limit: self.limit,
                });
            }
        }
        self.reps.push((set, gens));
        Ok(())
    }
}

pub fn enumerate(g: &PermGroup) -> Result<SubgroupLattice> {
    enumerate_with_limit(g, DEFAULT_SUBGROUP_LIMIT)
}

pub fn enumerate_with_limit(g: &PermGroup, limit: usize) -> Result<SubgroupLattice> {
    let mut cyclics: Vec<(BitSet, usize)> = Vec::new();
    let mut seen_cyclic: HashMap<BitSet, ()> = HashMap::new();
    for x in 0..g.order() {
        let set = g.closure(&[x]);
        if seen_cyclic.insert(set.clone(), ()).is_none() {
            cyclics.push((set, x));
        }
    }

    let mut en = Enumerator {
        group: g,
        group_gens: g.generator_indices(),
        limit,
        known: HashMap::new(),
        reps: Vec::new(),
    };
    for (set, x) in &cyclics {
        let gens = if *x == g.identity() { vec![] } else { vec![*x] };
        en.add_class(set.clone(), gens)?;
    }
    let mut next = 0;
    while next < en.reps.len() {
        let (set, gens) = en.reps[next].clone();
        for (cset, x) in &cyclics {
            if cset.is_subset(&set) {
                continue;
            }
            let mut join_gens = gens.clone();
            join_gens.push(*x);
            let join = g.closure(&join_gens);
            en.add_class(join, join_gens)?;
        }
        next += 1;
    }

    build_lattice(g, en.known, en.reps.len())
}

fn build_lattice(
    g: &PermGroup,
    known: HashMap<BitSet, usize>,
    orbit_count: usize,
) -> Result<SubgroupLattice> {
    let mut entries: Vec<(BitSet, usize)> = known.into_iter().collect();
    entries.sort_by(|(a, _), (b, _)| a.count().cmp(&b.count()).then_with(|| a.lex_cmp(b)));

    // Number orbits by their first record in canonical order.
    let mut orbit_to_class = vec![usize::MAX; orbit_count];
    let mut classes: Vec<SubgroupClass> = Vec::new();
    for (i, (_, orbit)) in entries.iter().enumerate() {
        if orbit_to_class[*orbit] == usize::MAX {
            orbit_to_class[*orbit] = classes.len();
            classes.push(SubgroupClass {
                rep: i,
                members: Vec::new(),
            });
        }
        classes[orbit_to_class[*orbit]].members.push(i);
    }

    let mut subnormal = vec![false; classes.len()];
    for (cid, class) in classes.iter().enumerate() {
        subnormal[cid] = g.is_subnormal_set(&entries[class.rep].0);
    }

    let mut index = HashMap::with_capacity(entries.len());
    let records = entries
        .into_iter()
        .enumerate()
        .map(|(i, (elems, orbit))| {
            let class_id = orbit_to_class[orbit];
            let gens = g.small_generators(&elems);
            let abelian = gens
                .iter()
                .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
            index.insert(elems.clone(), i);
            SubgroupRecord {
                order: elems.count(),
                elems,
                gens,
                normal: classes[class_id].size() == 1,
                subnormal: subnormal[class_id],
                abelian,
                class_id,
            }
        })
        .collect();
    Ok(SubgroupLattice {
        records,
        classes,
        index,
    })
}

/// Representative record indices, one per class, in class-id order.
pub fn classes_of_subgroups(lattice: &SubgroupLattice) -> Vec<usize> {
    lattice.classes.iter().map(|c| c.rep).collect()
}

/// Class ids whose representatives contain the normal subgroup `n`.
pub fn overgroups_of(g: &PermGroup, lattice: &SubgroupLattice, n: &BitSet) -> Result<Vec<usize>> {
    if !g.is_closed(n) {
        return Err(Error::NotSubgroup);
    }
    if !g.is_normal_set(n) {
        return Err(Error::NotNormal);
    }
    Ok((0..lattice.classes.len())
        .filter(|&c| n.is_subset(&lattice.class_rep(c).elems))
        .collect())
}

/// `gcd(|N|, [G:N]) = 1`.
pub fn is_hall(group_order: usize, sub_order: usize) -> bool {
    gcd(sub_order as u64, (group_order / sub_order) as u64) == 1
}

/// Record indices of the Sylow `p`-subgroups.
pub fn sylow(g: &PermGroup, lattice: &SubgroupLattice, p: usize) -> Vec<usize> {
    let mut n = g.order();
    let mut pa = 1;
    while n % p == 0 {
        n /= p;
        pa *= p;
    }
    if pa == 1 {
        return Vec::new();
    }
    (0..lattice.len())
        .filter(|&i| lattice.records[i].order == pa)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::permcore::DEFAULT_MAX_ORDER as CAP;
    use std::collections::HashSet;

    // Independent oracle: all subgroups generated by at most three elements.
    fn three_generated(g: &PermGroup) -> HashSet<BitSet> {
        let n = g.order();
        let mut out = HashSet::new();
        let mut two = HashSet::new();
        for a in 0..n {
            for b in a..n {
                two.insert(g.closure(&[a, b]));
            }
        }
        for s in &two {
            let gens = g.small_generators(s);
            for c in 0..n {
                if !s.contains(c) {
                    let mut gg = gens.clone();
                    gg.push(c);
                    out.insert(g.closure(&gg));
                }
            }
        }
        out.extend(two);
        out
    }

    #[test]
    fn cyclic_six_has_divisor_lattice() {
        let g = cyclic(6, CAP).unwrap();
        let l = enumerate(&g).unwrap();
        let orders: Vec<usize> = l.records().iter().map(|r| r.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert!(l.records().iter().all(|r| r.normal && r.subnormal && r.abelian));
    }

    #[test]
    fn s4_lattice_matches_oracle() {
        let g = symmetric(4, CAP).unwrap();
        let l = enumerate(&g).unwrap();
        assert_eq!(l.len(), 30);
        assert_eq!(l.classes().len(), 11);
        let ours: HashSet<BitSet> = l.records().iter().map(|r| r.elems.clone()).collect();
        assert_eq!(ours, three_generated(&g));
        assert_eq!(classes_of_subgroups(&l).len(), 11);
    }

    #[test]
    fn lattice_invariants() {
        for g in [symmetric(4, CAP).unwrap(), sl2_3(), dihedral(8, CAP).unwrap()] {
            let l = enumerate(&g).unwrap();
            assert_eq!(l.record(0).order, 1);
            assert_eq!(l.records().last().unwrap().order, g.order());
            let total: usize = l.classes().iter().map(|c| c.size()).sum();
            assert_eq!(total, l.len());
            for (cid, class) in l.classes().iter().enumerate() {
                let rep = &l.record(class.rep).elems;
                let norm = g.normalizer_set(rep).count();
                assert_eq!(class.size(), g.order() / norm);
                assert!(class.members.iter().all(|&m| l.record(m).class_id == cid));
            }
            for r in l.records() {
                assert_eq!(g.order() % r.order, 0);
                assert!(g.is_closed(&r.elems));
                assert_eq!(r.normal, g.is_normal_set(&r.elems));
                for c in g.generator_indices() {
                    assert!(l.find(&conjugate_set(&g, &r.elems, c)).is_some());
                }
            }
            // Pairwise joins add nothing.
            for a in l.records() {
                for b in l.records() {
                    let mut gens = a.gens.clone();
                    gens.extend(&b.gens);
                    assert!(l.find(&g.closure(&gens)).is_some());
                }
            }
        }
    }

    #[test]
    fn overgroups_and_sylow() {
        let g = symmetric(4, CAP).unwrap();
        let l = enumerate(&g).unwrap();
        let trivial = BitSet::from_indices(24, [0]);
        assert_eq!(overgroups_of(&g, &l, &trivial).unwrap().len(), 11);
        assert_eq!(overgroups_of(&g, &l, &g.all_elements()).unwrap(), vec![10]);
        let v4 = g.derived_set(&g.derived_set(&g.all_elements()));
        let mut orders: Vec<usize> = overgroups_of(&g, &l, &v4)
            .unwrap()
            .into_iter()
            .map(|c| l.class_rep(c).order)
            .collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![4, 8, 12, 24]);
        let not_normal = g.closure(&[1]);
        assert!(matches!(overgroups_of(&g, &l, &not_normal), Err(Error::NotNormal)));
        assert_eq!(sylow(&g, &l, 2).len(), 3);
        assert_eq!(sylow(&g, &l, 3).len(), 4);
        assert!(!is_hall(24, 12));
        assert!(is_hall(24, 24));
        assert!(is_hall(24, 3) && is_hall(24, 8));
        assert!(!is_hall(24, 6));
        assert!(is_hall(12, 4));
    }

    #[test]
    fn subnormal_flags() {
        let g = symmetric(4, CAP).unwrap();
        let l = enumerate(&g).unwrap();
        for r in l.records() {
            match r.order {
                1 | 4 if r.normal => assert!(r.subnormal),
                8 => assert!(!r.subnormal && !r.normal),
                _ => {}
            }
        }
    }

    #[test]
    fn limit_is_enforced() {
        let g = symmetric(4, CAP).unwrap();
        assert!(matches!(
            enumerate_with_limit(&g, 10),
            Err(Error::SubgroupLimit { limit: 10, .. })
        ));
    }
}
