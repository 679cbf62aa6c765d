use super::group::{lcm, PermGroup};

/// Conjugacy classes of a group, ordered by their smallest element index.
///
/// Class 0 is always the identity class.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    order: usize,
    reps: Vec<usize>,
    sizes: Vec<usize>,
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    inverse_class: Vec<usize>,
    rep_orders: Vec<u64>,
    exponent: u64,
}

impl ConjugacyData {
    pub fn new(group: &PermGroup) -> Self {
        let n = group.order();
        let gens = group.generator_indices();
        let mut class_of = vec![u32::MAX; n];
        let mut members: Vec<Vec<u32>> = Vec::new();
        for x in 0..n {
            if class_of[x] != u32::MAX {
                continue;
            }
            let id = members.len() as u32;
            class_of[x] = id;
            let mut orbit = vec![x as u32];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i] as usize;
                for &g in &gens {
                    let z = group.conj(y, g);
                    if class_of[z] == u32::MAX {
                        class_of[z] = id;
                        orbit.push(z as u32);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let reps: Vec<usize> = members.iter().map(|m| m[0] as usize).collect();
        let sizes = members.iter().map(Vec::len).collect();
        let inverse_class = reps
            .iter()
            .map(|&r| class_of[group.inv(r)] as usize)
            .collect();
        let rep_orders: Vec<u64> = reps.iter().map(|&r| group.element_order(r)).collect();
        let exponent = rep_orders.iter().fold(1, |a, &b| lcm(a, b));
        ConjugacyData {
            order: n,
            reps,
            sizes,
            class_of,
            members,
            inverse_class,
            rep_orders,
            exponent,
        }
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, class: usize) -> usize {
        self.sizes[class]
    }

    pub fn centralizer_order(&self, class: usize) -> usize {
        self.order / self.sizes[class]
    }

    #[inline]
    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        self.members[class].iter().map(|&x| x as usize)
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    pub fn inverse_classes(&self) -> &[usize] {
        &self.inverse_class
    }

    /// Order of the elements in a class.
    pub fn element_order(&self, class: usize) -> u64 {
        self.rep_orders[class]
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Class of `g^k` for `g` in each class.
    pub fn power_map(&self, group: &PermGroup, k: u64) -> Vec<usize> {
        self.reps
            .iter()
            .map(|&r| self.class_of(group.pow(r, k)))
            .collect()
    }
}
