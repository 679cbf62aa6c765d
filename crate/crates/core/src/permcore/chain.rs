//! Deterministic Schreier–Sims.

use super::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// A base and strong generating set with one transversal per base point.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    /// Strong generators tagged with the index of the first base point they move.
    strong: Vec<(Permutation, usize)>,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in gens {
            let residue = chain.sift(g.clone());
            if !residue.is_identity() {
                chain.add_strong(residue);
            }
        }
        while let Some(residue) = chain.find_failing_schreier_generator() {
            chain.add_strong(residue);
        }
        chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Group order as the product of transversal sizes.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone()).is_identity()
    }

    /// Every element, each exactly once, in no particular order.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        // g = u_{m-1} * ... * u_0, so extend on the right level by level.
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for prefix in &acc {
                for &p in &level.orbit {
                    let u = level.transversal[p].as_ref().expect("orbit point has transversal");
                    next.push(prefix.compose_unchecked(u));
                }
            }
            acc = next;
        }
        acc
    }

    fn sift(&self, mut g: Permutation) -> Permutation {
        for level in &self.levels {
            let q = g.apply(level.base_point);
            match &level.transversal[q] {
                Some(u) => g = g.compose_unchecked(&u.inverse()),
                None => return g,
            }
        }
        g
    }

    fn add_strong(&mut self, g: Permutation) {
        let level = match self
            .levels
            .iter()
            .position(|l| g.apply(l.base_point) != l.base_point)
        {
            Some(i) => i,
            None => {
                let moved = (0..self.degree)
                    .find(|&x| g.apply(x) != x)
                    .expect("identity is never added");
                self.levels.push(Level {
                    base_point: moved,
                    transversal: Vec::new(),
                    orbit: Vec::new(),
                });
                self.levels.len() - 1
            }
        };
        self.strong.push((g, level));
        for k in 0..=level {
            self.rebuild_level(k);
        }
    }

    fn rebuild_level(&mut self, k: usize) {
        let base = self.levels[k].base_point;
        let gens: Vec<&Permutation> = self
            .strong
            .iter()
            .filter(|(_, lvl)| *lvl >= k)
            .map(|(g, _)| g)
            .collect();
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[base] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![base];
        let mut i = 0;
        while i < orbit.len() {
            let p = orbit[i];
            for s in &gens {
                let q = s.apply(p);
                if transversal[q].is_none() {
                    let u = transversal[p].as_ref().unwrap().compose_unchecked(s);
                    transversal[q] = Some(u);
                    orbit.push(q);
                }
            }
            i += 1;
        }
        let level = &mut self.levels[k];
        level.transversal = transversal;
        level.orbit = orbit;
    }

    fn find_failing_schreier_generator(&self) -> Option<Permutation> {
        for (k, level) in self.levels.iter().enumerate() {
            let gens = self.strong.iter().filter(|(_, lvl)| *lvl >= k).map(|(g, _)| g);
            for s in gens {
                for &p in &level.orbit {
                    let u_p = level.transversal[p].as_ref().unwrap();
                    let q = s.apply(p);
                    let u_q = level.transversal[q].as_ref().unwrap();
                    let h = u_p.compose_unchecked(s).compose_unchecked(&u_q.inverse());
                    let residue = self.sift(h);
                    if !residue.is_identity() {
                        return Some(residue);
                    }
                }
            }
        }
        None
    }
}
