//! Finite groups realized by permutation generators, with a full
//! multiplication table.

use std::collections::HashMap;
use std::fmt;

/// A permutation of {0, .., n-1} in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u8).collect())
    }

    pub fn new(images: Vec<u8>) -> Perm {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!((i as usize) < n && !seen[i as usize], "not a permutation");
            seen[i as usize] = true;
        }
        Perm(images)
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u8]]) -> Perm {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                images[cycle[k] as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, point: u8) -> u8 {
        self.0[point as usize]
    }

    /// Function composition: `self.compose(other)` applies `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&p| self.0[p as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.degree()];
        for (i, &p) in self.0.iter().enumerate() {
            images[p as usize] = i as u8;
        }
        Perm(images)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i as u8 == p)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A finite group given by its full element list (sorted permutations,
/// identity first) and multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroupTable {
    elements: Vec<Perm>,
    product: Vec<u16>,
    inverse: Vec<u16>,
    identity: usize,
    generator_indices: Vec<usize>,
}

impl FiniteGroupTable {
    /// Closes the generators under multiplication and tabulates the result.
    /// Panics if the closure exceeds `u16` indexing (65535 elements); the
    /// catalog stays far below that.
    pub fn from_generators(generators: Vec<Perm>) -> FiniteGroupTable {
        assert!(!generators.is_empty(), "need at least one generator");
        let degree = generators[0].degree();
        assert!(generators.iter().all(|g| g.degree() == degree));

        let mut elements = vec![Perm::identity(degree)];
        let mut seen: HashMap<Perm, usize> = HashMap::new();
        seen.insert(elements[0].clone(), 0);
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            for g in &generators {
                let next = current.compose(g);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            frontier += 1;
        }
        let order = elements.len();
        assert!(order <= u16::MAX as usize, "group too large to tabulate");

        elements.sort();
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut product = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                let p = elements[i].compose(&elements[j]);
                product[i * order + j] = index[&p] as u16;
            }
        }
        let inverse: Vec<u16> = elements
            .iter()
            .map(|p| index[&p.inverse()] as u16)
            .collect();
        let identity = index[&Perm::identity(degree)];
        let generator_indices: Vec<usize> = generators.iter().map(|g| index[g]).collect();

        let table = FiniteGroupTable {
            elements,
            product,
            inverse,
            identity,
            generator_indices,
        };
        table.check_group_axioms();
        table
    }

    fn check_group_axioms(&self) {
        let n = self.order();
        assert!(self.elements[self.identity].is_identity());
        for i in 0..n {
            let inv = self.inverse[i] as usize;
            assert_eq!(self.mul(i, inv), self.identity, "missing inverse");
        }
        assert_eq!(
            self.subgroup_closure(&self.generator_indices),
            n,
            "generators do not generate the table"
        );
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.product[i * self.elements.len() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Size of the subgroup generated by the given elements.
    pub fn subgroup_closure(&self, seeds: &[usize]) -> usize {
        let n = self.order();
        let mut in_set = vec![false; n];
        let mut stack = vec![self.identity];
        in_set[self.identity] = true;
        let mut count = 1;
        while let Some(e) = stack.pop() {
            for &s in seeds {
                let next = self.mul(e, s);
                if !in_set[next] {
                    in_set[next] = true;
                    count += 1;
                    stack.push(next);
                }
            }
        }
        count
    }

    /// One representative per conjugacy class, in element order.
    pub fn conjugacy_class_reps(&self) -> Vec<usize> {
        let n = self.order();
        let mut visited = vec![false; n];
        let mut reps = Vec::new();
        for e in 0..n {
            if visited[e] {
                continue;
            }
            reps.push(e);
            for g in 0..n {
                let conj = self.mul(self.mul(g, e), self.inv(g));
                visited[conj] = true;
            }
        }
        reps
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_indices;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}
