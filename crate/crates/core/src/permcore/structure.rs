//! Derived series, normal closures, normalizers and subnormality, on element
//! sets of a fixed ambient group.

use super::group::PermGroup;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

impl PermGroup {
    /// Commutator `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// Normal closure of the subgroup `h` inside the subgroup `k` (h ≤ k).
    pub fn normal_closure_set(&self, k: &BitSet, h: &BitSet) -> BitSet {
        let k_gens = self.small_generators(k);
        let mut gens = self.small_generators(h);
        let mut set = self.closure(&gens);
        let mut i = 0;
        while i < gens.len() {
            let x = gens[i];
            for &c in &k_gens {
                let y = self.conj(x, c);
                if !set.contains(y) {
                    gens.push(y);
                    set = self.closure(&gens);
                }
            }
            i += 1;
        }
        set
    }

    /// Derived subgroup of the subgroup `k`.
    pub fn derived_set(&self, k: &BitSet) -> BitSet {
        let gens = self.small_generators(k);
        let comms: Vec<usize> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        let seed = self.closure(&comms);
        self.normal_closure_set(k, &seed)
    }

    pub fn normalizes(&self, g: usize, h: &BitSet) -> bool {
        self.small_generators(h)
            .into_iter()
            .all(|x| h.contains(self.conj(x, g)))
    }

    pub fn normalizer_set(&self, h: &BitSet) -> BitSet {
        let hg = self.small_generators(h);
        BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&g| hg.iter().all(|&x| h.contains(self.conj(x, g)))),
        )
    }

    pub fn is_normal_set(&self, h: &BitSet) -> bool {
        self.generator_indices()
            .into_iter()
            .all(|g| self.normalizes(g, h))
    }

    /// Descending chain of normal closures `K₀ = G`, `K_{i+1} = H^{K_i}`;
    /// `h` is subnormal iff the chain reaches `h`.
    pub fn is_subnormal_set(&self, h: &BitSet) -> bool {
        let mut k = self.all_elements();
        loop {
            if k == *h {
                return true;
            }
            let next = self.normal_closure_set(&k, h);
            if next == k {
                return false;
            }
            k = next;
        }
    }

    pub fn derived_series_sets(&self) -> Vec<BitSet> {
        let mut series = vec![self.all_elements()];
        loop {
            let last = series.last().unwrap();
            let next = self.derived_set(last);
            if next == *last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series_sets().last().unwrap().count() == 1
    }

    /// Element set of the product `HK` (a subgroup whenever one factor is normal).
    pub fn product_set(&self, h: &BitSet, k: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.order());
        for a in h.iter() {
            for b in k.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    fn require_subgroup(&self, h: &PermGroup) -> Result<BitSet> {
        let set = self.subgroup_set(h)?;
        if !self.is_closed(&set) {
            return Err(Error::NotSubgroup);
        }
        Ok(set)
    }
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    g.subgroup_from_elements(&g.derived_set(&g.all_elements()))
        .expect("derived subgroup is closed")
}

pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    g.derived_series_sets()
        .iter()
        .map(|s| g.subgroup_from_elements(s).expect("closed"))
        .collect()
}

pub fn is_solvable(g: &PermGroup) -> bool {
    g.is_solvable()
}

pub fn normal_closure(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let hs = g.require_subgroup(h)?;
    g.subgroup_from_elements(&g.normal_closure_set(&g.all_elements(), &hs))
}

pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let hs = g.require_subgroup(h)?;
    g.subgroup_from_elements(&g.normalizer_set(&hs))
}

pub fn is_normal(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    Ok(g.is_normal_set(&g.require_subgroup(h)?))
}

pub fn is_subnormal(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    Ok(g.is_subnormal_set(&g.require_subgroup(h)?))
}

pub fn subgroup_from_elements(g: &PermGroup, elems: &BitSet) -> Result<PermGroup> {
    g.subgroup_from_elements(elems)
}
