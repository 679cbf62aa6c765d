use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

/// `G₁ × G₂` acting on the disjoint union of the two point sets.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: PermGroup,
    left_degree: usize,
    right_degree: usize,
}

impl DirectProduct {
    pub fn left_degree(&self) -> usize {
        self.left_degree
    }

    pub fn right_degree(&self) -> usize {
        self.right_degree
    }

    /// Element of the product whose components are the given elements.
    pub fn pair(&self, left: &PermGroup, a: usize, right: &PermGroup, b: usize) -> usize {
        let mut images: Vec<u32> = left.images(a).to_vec();
        images.extend(right.images(b).iter().map(|&x| x + self.left_degree as u32));
        self.group
            .index_of_images(&images)
            .expect("component elements lie in the factors")
    }

    pub fn embed_left(&self, left: &PermGroup, right: &PermGroup, a: usize) -> usize {
        self.pair(left, a, right, right.identity())
    }

    pub fn embed_right(&self, left: &PermGroup, right: &PermGroup, b: usize) -> usize {
        self.pair(left, left.identity(), right, b)
    }

    pub fn project_left(&self, left: &PermGroup, x: usize) -> usize {
        left.index_of_images(&self.group.images(x)[..self.left_degree])
            .expect("projection lies in the factor")
    }

    pub fn project_right(&self, right: &PermGroup, x: usize) -> usize {
        let shifted: Vec<u32> = self.group.images(x)[self.left_degree..]
            .iter()
            .map(|&y| y - self.left_degree as u32)
            .collect();
        right
            .index_of_images(&shifted)
            .expect("projection lies in the factor")
    }

    /// `N₁ × N₂` as an element set of the product.
    pub fn product_set(
        &self,
        left: &PermGroup,
        n1: &BitSet,
        right: &PermGroup,
        n2: &BitSet,
    ) -> BitSet {
        let mut out = BitSet::new(self.group.order());
        for a in n1.iter() {
            for b in n2.iter() {
                out.insert(self.pair(left, a, right, b));
            }
        }
        out
    }
}

pub fn direct_product(g1: &PermGroup, g2: &PermGroup, cap: usize) -> Result<DirectProduct> {
    let (n1, n2) = (g1.degree(), g2.degree());
    let deg = n1 + n2;
    let mut gens: Vec<Permutation> = g1.generators().iter().map(|g| g.shifted(0, deg)).collect();
    gens.extend(g2.generators().iter().map(|g| g.shifted(n1, deg)));
    Ok(DirectProduct {
        group: PermGroup::with_cap(deg, gens, cap)?,
        left_degree: n1,
        right_degree: n2,
    })
}

/// `base ≀ top` in its imprimitive action on `m·k` points, where `base`
/// acts on `m` points and `top` permutes `k` blocks.
pub fn wreath(base: &PermGroup, top: &PermGroup, cap: usize) -> Result<PermGroup> {
    let (m, k) = (base.degree(), top.degree());
    let deg = m * k;
    let mut gens = Vec::new();
    for block in 0..k {
        gens.extend(base.generators().iter().map(|g| g.shifted(block * m, deg)));
    }
    for t in top.generators() {
        let images = (0..deg)
            .map(|p| (t.apply(p / m) * m + p % m) as u32)
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::with_cap(deg, gens, cap)
}

/// `G/N` realized as the permutation action of `G` on the cosets of `N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: PermGroup,
    map: Vec<usize>,
    coset_of: Vec<usize>,
}

impl Quotient {
    /// Image of an element of `G` in the quotient.
    pub fn map(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    /// Coset (point of the action) containing `x`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// Image of a subgroup of `G` as an element set of the quotient.
    pub fn image_set(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(self.group.order(), set.iter().map(|x| self.map[x]))
    }
}

pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<Quotient> {
    quotient_by_set(g, &g.subgroup_set(n)?)
}

pub fn quotient_by_set(g: &PermGroup, n: &BitSet) -> Result<Quotient> {
    if !g.is_closed(n) {
        return Err(Error::NotSubgroup);
    }
    if !g.is_normal_set(n) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for y in n.iter() {
            coset_of[g.mul(y, x)] = id;
        }
    }
    let index = reps.len();
    let action = |x: usize| -> Vec<u32> {
        reps.iter()
            .map(|&r| coset_of[g.mul(r, x)] as u32)
            .collect()
    };
    let gens = g
        .generator_indices()
        .into_iter()
        .map(|x| Permutation::from_images(action(x)))
        .collect::<Result<Vec<_>>>()?;
    let group = PermGroup::with_cap(index, gens, order.max(1))?;
    let map = (0..order)
        .map(|x| {
            group
                .index_of_images(&action(x))
                .expect("coset action lies in the quotient")
        })
        .collect();
    Ok(Quotient {
        group,
        map,
        coset_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named::*;
    use crate::permcore::{ConjugacyData, DEFAULT_MAX_ORDER as CAP};

    #[test]
    fn product_orders_and_classes() {
        let c2 = cyclic(2, CAP).unwrap();
        let v = direct_product(&c2, &c2, CAP).unwrap();
        assert_eq!(v.group.order(), 4);
        assert_eq!(v.group.exponent(), 2);
        let s3 = symmetric(3, CAP).unwrap();
        let c4 = cyclic(4, CAP).unwrap();
        assert_eq!(direct_product(&s3, &c4, CAP).unwrap().group.order(), 24);
        let s3s3 = direct_product(&s3, &s3, CAP).unwrap();
        assert_eq!(ConjugacyData::new(&s3s3.group).len(), 9);
    }

    #[test]
    fn embeddings_and_projections() {
        let s3 = symmetric(3, CAP).unwrap();
        let c4 = cyclic(4, CAP).unwrap();
        let p = direct_product(&s3, &c4, CAP).unwrap();
        for a in 0..s3.order() {
            for b in 0..c4.order() {
                let x = p.pair(&s3, a, &c4, b);
                assert_eq!(p.project_left(&s3, x), a);
                assert_eq!(p.project_right(&c4, x), b);
            }
        }
        let x = p.embed_left(&s3, &c4, 3);
        assert_eq!(p.project_right(&c4, x), 0);
    }

    #[test]
    fn wreath_orders() {
        let s3 = symmetric(3, CAP).unwrap();
        let c2 = cyclic(2, CAP).unwrap();
        assert_eq!(wreath(&s3, &c2, CAP).unwrap().order(), 72);
        let s2 = symmetric(2, CAP).unwrap();
        assert_eq!(wreath(&c2, &s2, CAP).unwrap().order(), weyl_b(2, CAP).unwrap().order());
        for n in 2..=4 {
            let w = wreath(&c2, &symmetric(n, CAP).unwrap(), CAP).unwrap();
            let b = weyl_b(n, CAP).unwrap();
            assert_eq!(w.order(), b.order());
            assert_eq!(ConjugacyData::new(&w).len(), ConjugacyData::new(&b).len());
        }
    }

    #[test]
    fn quotients() {
        let s4 = symmetric(4, CAP).unwrap();
        let a4 = alternating(4, CAP).unwrap();
        let q = quotient(&s4, &a4).unwrap();
        assert_eq!(q.group.order(), 2);
        let q = quotient(&s4, &s4).unwrap();
        assert_eq!(q.group.order(), 1);
        let gl = gl2_3();
        let q = quotient(&gl, &sl2_3()).unwrap();
        assert_eq!(q.group.order(), 2);
        // Homomorphism on all pairs.
        let v4 = s4.derived_set(&s4.derived_set(&s4.all_elements()));
        let q = quotient_by_set(&s4, &v4).unwrap();
        assert_eq!(q.group.order() * 4, 24);
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(q.map(s4.mul(a, b)), q.group.mul(q.map(a), q.map(b)));
            }
        }
        for x in v4.iter() {
            assert_eq!(q.map(x), q.group.identity());
        }
    }

    #[test]
    fn quotient_requires_normality() {
        let s4 = symmetric(4, CAP).unwrap();
        let h = s4.closure(&[1]);
        assert!(matches!(quotient_by_set(&s4, &h), Err(Error::NotNormal)));
    }
}
