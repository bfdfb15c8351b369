//! Counting and finding epimorphisms from a presentation onto a finite
//! group, by backtracking over generator-image tuples.
//!
//! A relator is checked as soon as every generator it mentions has been
//! assigned; surjectivity is checked at the leaves by closing the images
//! under multiplication. For existence queries the image of the first
//! generator ranges over one representative per conjugacy class of the
//! target, since post-composing with an inner automorphism changes neither
//! the homomorphism property nor surjectivity. Counts always enumerate the
//! full image space: they are raw map counts, not counts up to automorphism.

use super::table::FiniteGroupTable;
use super::{Presentation, Word};

struct Search<'a> {
    presentation: &'a Presentation,
    group: &'a FiniteGroupTable,
    /// relators to check once the generator with this index is assigned
    check_at: Vec<Vec<&'a Word>>,
    images: Vec<usize>,
    witnesses: Option<Vec<Vec<usize>>>,
    count: usize,
    stop_at_first: bool,
    found: bool,
}

impl<'a> Search<'a> {
    fn new(
        presentation: &'a Presentation,
        group: &'a FiniteGroupTable,
        collect: bool,
        stop_at_first: bool,
    ) -> Self {
        let n = presentation.generators().len();
        let mut check_at: Vec<Vec<&Word>> = vec![Vec::new(); n];
        for rel in presentation.relators() {
            if let Some(max) = rel.max_generator() {
                check_at[max].push(rel);
            }
        }
        Search {
            presentation,
            group,
            check_at,
            images: vec![0; n],
            witnesses: if collect { Some(Vec::new()) } else { None },
            count: 0,
            stop_at_first,
            found: false,
        }
    }

    fn eval(&self, word: &Word) -> usize {
        let mut acc = self.group.identity();
        for &letter in word.letters() {
            let img = self.images[(letter.unsigned_abs() as usize) - 1];
            let factor = if letter > 0 { img } else { self.group.inv(img) };
            acc = self.group.mul(acc, factor);
        }
        acc
    }

    fn descend(&mut self, depth: usize, first_candidates: &[usize]) {
        if self.found && self.stop_at_first {
            return;
        }
        let n = self.presentation.generators().len();
        if depth == n {
            if self.group.subgroup_closure(&self.images) == self.group.order() {
                self.count += 1;
                self.found = true;
                if let Some(w) = &mut self.witnesses {
                    w.push(self.images.clone());
                }
            }
            return;
        }
        let candidates: Vec<usize> = if depth == 0 {
            first_candidates.to_vec()
        } else {
            (0..self.group.order()).collect()
        };
        for image in candidates {
            self.images[depth] = image;
            if self.check_at[depth]
                .iter()
                .all(|rel| self.eval(rel) == self.group.identity())
            {
                self.descend(depth + 1, first_candidates);
                if self.found && self.stop_at_first {
                    return;
                }
            }
        }
    }
}

/// Number of surjective homomorphisms from the presented group onto the
/// table, counted as raw maps.
pub fn count_epimorphisms(p: &Presentation, g: &FiniteGroupTable) -> usize {
    let all: Vec<usize> = (0..g.order()).collect();
    let mut search = Search::new(p, g, false, false);
    search.descend(0, &all);
    search.count
}

/// All epimorphisms, as generator-image tuples of element indices.
pub fn epimorphisms(p: &Presentation, g: &FiniteGroupTable) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..g.order()).collect();
    let mut search = Search::new(p, g, true, false);
    search.descend(0, &all);
    search.witnesses.unwrap()
}

/// Whether at least one epimorphism exists; the first generator image is
/// restricted to conjugacy class representatives.
pub fn exists_epimorphism(p: &Presentation, g: &FiniteGroupTable) -> bool {
    let reps = g.conjugacy_class_reps();
    let mut search = Search::new(p, g, false, true);
    search.descend(0, &reps);
    search.found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::catalog::{build_catalog_group, GroupFamily};
    use crate::fpgroups::{figure_eight_presentation, trefoil_presentation};

    #[test]
    fn free_generator_onto_cyclic_three() {
        let p = Presentation::parse("a").unwrap();
        let z3 = build_catalog_group(GroupFamily::Cyclic, 3).unwrap();
        assert_eq!(count_epimorphisms(&p, &z3), 2);
        assert!(exists_epimorphism(&p, &z3));
    }

    #[test]
    fn cyclic_relator_blocks_wrong_targets() {
        let p = Presentation::parse("a | a a").unwrap();
        let z3 = build_catalog_group(GroupFamily::Cyclic, 3).unwrap();
        assert_eq!(count_epimorphisms(&p, &z3), 0);
        assert!(!exists_epimorphism(&p, &z3));
        let z2 = build_catalog_group(GroupFamily::Cyclic, 2).unwrap();
        assert_eq!(count_epimorphisms(&p, &z2), 1);
    }

    #[test]
    fn figure_eight_maps_onto_d10_trefoil_does_not() {
        let d10 = build_catalog_group(GroupFamily::Dihedral, 10).unwrap();
        assert!(count_epimorphisms(&figure_eight_presentation(), &d10) > 0);
        assert_eq!(count_epimorphisms(&trefoil_presentation(), &d10), 0);
        assert!(exists_epimorphism(&figure_eight_presentation(), &d10));
        assert!(!exists_epimorphism(&trefoil_presentation(), &d10));
    }

    #[test]
    fn witnesses_verify() {
        let p = trefoil_presentation();
        let s3 = build_catalog_group(GroupFamily::Symmetric, 3).unwrap();
        let homs = epimorphisms(&p, &s3);
        assert_eq!(homs.len(), count_epimorphisms(&p, &s3));
        assert!(!homs.is_empty());
        for images in &homs {
            // relators map to the identity
            for rel in p.relators() {
                let mut acc = s3.identity();
                for &l in rel.letters() {
                    let img = images[(l.unsigned_abs() as usize) - 1];
                    acc = s3.mul(acc, if l > 0 { img } else { s3.inv(img) });
                }
                assert_eq!(acc, s3.identity());
            }
            // images generate
            assert_eq!(s3.subgroup_closure(images), s3.order());
        }
    }

    #[test]
    fn existence_agrees_with_count_on_a_sample() {
        let presentations = [
            figure_eight_presentation(),
            trefoil_presentation(),
            Presentation::parse("a | a a a a a").unwrap(),
            Presentation::parse("a b | a a, b b").unwrap(),
            Presentation::parse("a b | a b A B").unwrap(),
        ];
        let targets = [
            build_catalog_group(GroupFamily::Cyclic, 5).unwrap(),
            build_catalog_group(GroupFamily::Dihedral, 10).unwrap(),
            build_catalog_group(GroupFamily::Symmetric, 3).unwrap(),
            build_catalog_group(GroupFamily::Dihedral, 4).unwrap(),
            build_catalog_group(GroupFamily::Alternating, 4).unwrap(),
        ];
        for p in &presentations {
            for g in &targets {
                assert_eq!(
                    exists_epimorphism(p, g),
                    count_epimorphisms(p, g) > 0,
                    "{} -> order {}",
                    p,
                    g.order()
                );
            }
        }
    }
}
