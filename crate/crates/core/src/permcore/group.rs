use std::cmp::Ordering;
use std::fmt;

use super::chain::StabChain;
use super::perm::Permutation;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Default refusal threshold for group orders.
pub const DEFAULT_MAX_ORDER: usize = 20160;

/// Groups up to this order get a precomputed multiplication table.
const MULT_TABLE_LIMIT: usize = 2048;

/// A finite permutation group with every element enumerated.
///
/// Elements are indexed `0..order` in lexicographic order of their image
/// tuples, so the identity is always index 0. All element-level algorithms
/// in the crate work on these indices.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: usize,
    /// Flat `order * degree` image table, rows sorted lexicographically.
    elements: Vec<u32>,
    inverses: Vec<u32>,
    mult: Option<Vec<u16>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_cap(degree, generators, DEFAULT_MAX_ORDER)
    }

    pub fn with_cap(degree: usize, generators: Vec<Permutation>, max_order: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain.order();
        if order > max_order as u128 {
            return Err(Error::OrderCap { order, cap: max_order });
        }
        let mut perms = chain.elements();
        perms.sort_unstable();
        Ok(Self::from_sorted(degree, generators, chain, &perms))
    }

    fn from_sorted(
        degree: usize,
        generators: Vec<Permutation>,
        chain: StabChain,
        perms: &[Permutation],
    ) -> Self {
        let order = perms.len();
        let mut elements = Vec::with_capacity(order * degree);
        for p in perms {
            elements.extend_from_slice(p.images());
        }
        let mut group = PermGroup {
            degree,
            generators,
            chain,
            order,
            elements,
            inverses: Vec::new(),
            mult: None,
        };
        group.inverses = (0..order)
            .map(|i| group.lookup(&group.element(i).inverse()) as u32)
            .collect();
        if order <= MULT_TABLE_LIMIT {
            let mut table = Vec::with_capacity(order * order);
            for i in 0..order {
                for j in 0..order {
                    table.push(group.mul_slow(i, j) as u16);
                }
            }
            group.mult = Some(table);
        }
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn images(&self, i: usize) -> &[u32] {
        &self.elements[i * self.degree..(i + 1) * self.degree]
    }

    pub fn element(&self, i: usize) -> Permutation {
        Permutation::from_images_unchecked(self.images(i).to_vec())
    }

    pub fn elements(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    /// Canonical index of an image tuple, if it is an element.
    pub fn index_of_images(&self, images: &[u32]) -> Option<usize> {
        if images.len() != self.degree {
            return None;
        }
        let (mut lo, mut hi) = (0, self.order);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.images(mid).cmp(images) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index_of_images(p.images())
    }

    fn lookup(&self, p: &Permutation) -> usize {
        self.index_of(p).expect("group is closed")
    }

    /// Membership via the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let ia = self.images(a);
        let ib = self.images(b);
        let prod: Vec<u32> = ia.iter().map(|&x| ib[x as usize]).collect();
        self.index_of_images(&prod).expect("group is closed")
    }

    /// Index of the product "apply `a`, then `b`".
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mult {
            Some(t) => t[a * self.order + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = self.identity();
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut n = 1;
        let mut y = x;
        while y != self.identity() {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1, |acc, x| lcm(acc, self.element_order(x)))
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.lookup(g)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn all_elements(&self) -> BitSet {
        BitSet::full(self.order)
    }

    /// The subgroup generated by the given elements, as an element set.
    pub fn closure(&self, gens: &[usize]) -> BitSet {
        let mut set = BitSet::new(self.order);
        set.insert(self.identity());
        let mut queue = vec![self.identity()];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
            i += 1;
        }
        set
    }

    /// Checks closure under products (finite sets closed under products are
    /// subgroups).
    pub fn is_closed(&self, set: &BitSet) -> bool {
        if set.universe() != self.order || !set.contains(self.identity()) {
            return false;
        }
        let members: Vec<usize> = set.iter().collect();
        members
            .iter()
            .all(|&a| members.iter().all(|&b| set.contains(self.mul(a, b))))
    }

    /// A small generating set of a subgroup, chosen greedily in index order.
    pub fn small_generators(&self, set: &BitSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = BitSet::new(self.order);
        span.insert(self.identity());
        for x in set.iter() {
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Rebuilds the group on the given closed element set. Element indices of
    /// the result are the ranks of the members inside `set`, so the canonical
    /// orders agree.
    pub fn subgroup_from_elements(&self, set: &BitSet) -> Result<PermGroup> {
        if !self.is_closed(set) {
            return Err(Error::NotClosed);
        }
        let gens: Vec<Permutation> = self
            .small_generators(set)
            .into_iter()
            .map(|i| self.element(i))
            .collect();
        let chain = StabChain::new(self.degree, &gens);
        let perms: Vec<Permutation> = set.iter().map(|i| self.element(i)).collect();
        Ok(Self::from_sorted(self.degree, gens, chain, &perms))
    }

    /// Maps each element index of `sub` to its index here.
    pub fn embedding_of(&self, sub: &PermGroup) -> Result<Vec<usize>> {
        if sub.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, sub.degree));
        }
        (0..sub.order)
            .map(|i| self.index_of_images(sub.images(i)).ok_or(Error::NotSubgroup))
            .collect()
    }

    /// Element set of `sub` inside this group.
    pub fn subgroup_set(&self, sub: &PermGroup) -> Result<BitSet> {
        Ok(BitSet::from_indices(self.order, self.embedding_of(sub)?))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
