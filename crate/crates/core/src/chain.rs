// Copyright 2026 The chromgroup Authors
// SPDX-License-Identifier: Apache-2.0

//! Deterministic Schreier–Sims stabilizer chains.

use crate::{Error, Permutation, Result};

#[derive(Debug, Clone)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        transversal[base as usize] = Some(Permutation::identity(degree));
        inverse[base as usize] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            inverse,
        }
    }

    fn add_gen(&mut self, g: Permutation) {
        self.gens.push(g);
        // Extend the orbit: every old point under the new generator, then
        // every new point under all generators.
        let new_gen = self.gens.len() - 1;
        let mut queue: Vec<u32> = Vec::new();
        let old = self.orbit.clone();
        for &x in &old {
            self.visit(x, new_gen, &mut queue);
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for k in 0..self.gens.len() {
                self.visit(x, k, &mut queue);
            }
        }
    }

    fn visit(&mut self, x: u32, gen: usize, queue: &mut Vec<u32>) {
        let y = self.gens[gen].apply(x);
        if self.transversal[y as usize].is_none() {
            let u = self.transversal[x as usize]
                .as_ref()
                .expect("orbit point has a transversal")
                .mul(&self.gens[gen]);
            self.inverse[y as usize] = Some(u.inverse());
            self.transversal[y as usize] = Some(u);
            self.orbit.push(y);
            queue.push(y);
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    order: u128,
}

impl StabilizerChain {
    /// Runs Schreier–Sims on `gens`. Base points are chosen as the smallest
    /// point moved by the element that forces a new level, so the result only
    /// depends on the generator list.
    pub fn new(degree: usize, gens: &[Permutation]) -> Result<Self> {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
            order: 1,
        };
        let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.smallest_moved_point().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in &gens {
            for l in 0..chain.levels.len() {
                chain.levels[l].add_gen((*g).clone());
                if g.apply(chain.levels[l].base) != chain.levels[l].base {
                    break;
                }
            }
        }
        chain.complete();
        chain.order = chain
            .levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
            .ok_or(Error::OrderOverflow)?;
        Ok(chain)
    }

    fn complete(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.find_missing(i) {
                Some((y, j)) => {
                    if j == self.levels.len() {
                        let b = y.smallest_moved_point().expect("non-identity residue");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in i + 1..=j {
                        self.levels[l].add_gen(y.clone());
                    }
                    i = j;
                }
                None if i == 0 => break,
                None => i -= 1,
            }
        }
    }

    /// First Schreier generator of level `i` that fails to sift through the
    /// levels below it, with the residue and the level it must be added to.
    fn find_missing(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &beta in &level.orbit {
            let u = level.transversal[beta as usize].as_ref().unwrap();
            for x in &level.gens {
                let image = x.apply(beta);
                let h = u
                    .mul(x)
                    .mul(level.inverse[image as usize].as_ref().unwrap());
                if h.is_identity() {
                    continue;
                }
                let (y, j) = self.sift_from(h, i + 1);
                if j < self.levels.len() || !y.is_identity() {
                    return Some((y, j));
                }
            }
        }
        None
    }

    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (k, level) in self.levels.iter().enumerate().skip(start) {
            let x = g.apply(level.base);
            match &level.inverse[x as usize] {
                Some(v) => g = g.mul(v),
                None => return (g, k),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }

    /// Membership by sifting; the caller guarantees equal degree.
    pub fn contains(&self, g: &Permutation) -> bool {
        let (residue, level) = self.sift_from(g.clone(), 0);
        level == self.levels.len() && residue.is_identity()
    }

    /// Every element, as products of transversal elements (unsorted).
    pub fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for h in &acc {
                for &x in &level.orbit {
                    next.push(h.mul(level.transversal[x as usize].as_ref().unwrap()));
                }
            }
            acc = next;
        }
        acc
    }
}
