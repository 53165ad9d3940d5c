//! Ideal generation, enumeration and arithmetic over finite rings.

use crate::error::{CoreError, Result};
use crate::ring::{Elem, FiniteRing};
use crate::ENUMERATION_CAP;
use std::collections::HashSet;

/// An ideal of a finite ring, stored with generators and the full element
/// set. Equality is element-set equality; generators are not canonical.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring_tag: u64,
    ring_label: String,
    generators: Vec<Elem>,
    elements: Vec<Elem>, // sorted, deduplicated, contains zero
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring_tag == other.ring_tag && self.elements == other.elements
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    /// Sorted element set.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an ideal always contains zero
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_full(&self, r: &FiniteRing) -> bool {
        self.elements.len() == r.order()
    }

    pub fn check_ring(&self, r: &FiniteRing) -> Result<()> {
        if self.ring_tag == r.tag() {
            Ok(())
        } else {
            Err(CoreError::RingMismatch {
                expected: r.label().to_string(),
                found: format!("ideal over {}", self.ring_label),
            })
        }
    }

    /// Membership mask over the carrier.
    pub fn mask(&self, r: &FiniteRing) -> Vec<bool> {
        let mut m = vec![false; r.order()];
        for &x in &self.elements {
            m[x as usize] = true;
        }
        m
    }

    /// "(g1,g2,..)" with generator names from the ring.
    pub fn display(&self, r: &FiniteRing) -> String {
        let gens = minimal_generators(r, &self.elements);
        let names: Vec<&str> = gens.iter().map(|&g| r.name(g)).collect();
        format!("({})", names.join(","))
    }

    fn from_parts(r: &FiniteRing, generators: Vec<Elem>, mut elements: Vec<Elem>) -> Ideal {
        elements.sort_unstable();
        elements.dedup();
        debug_assert!(is_ideal_set(r, &elements));
        Ideal {
            ring_tag: r.tag(),
            ring_label: r.label().to_string(),
            generators,
            elements,
        }
    }
}

pub(crate) fn is_ideal_set(r: &FiniteRing, sorted: &[Elem]) -> bool {
    if sorted.binary_search(&r.zero()).is_err() {
        return false;
    }
    for &x in sorted {
        for &y in sorted {
            if sorted.binary_search(&r.add(x, y)).is_err() {
                return false;
            }
        }
        for s in r.elements() {
            if sorted.binary_search(&r.mul(s, x)).is_err() {
                return false;
            }
        }
    }
    true
}

/// Smallest ideal containing `gens`: the additive closure of all ring
/// multiples of the generators.
pub fn ideal_closure(r: &FiniteRing, gens: &[Elem]) -> Result<Ideal> {
    for &g in gens {
        r.check_element(g)?;
    }
    let mut mask = vec![false; r.order()];
    let mut queue: Vec<Elem> = Vec::new();
    let push = |mask: &mut Vec<bool>, queue: &mut Vec<Elem>, x: Elem| {
        if !mask[x as usize] {
            mask[x as usize] = true;
            queue.push(x);
        }
    };
    push(&mut mask, &mut queue, r.zero());
    for &g in gens {
        for s in r.elements() {
            push(&mut mask, &mut queue, r.mul(s, g));
        }
    }
    // sums of multiples of generators are closed under further ring
    // multiples, so only additive closure remains
    let mut members: Vec<Elem> = Vec::new();
    while let Some(x) = queue.pop() {
        for &y in members.iter() {
            let s = r.add(x, y);
            if !mask[s as usize] {
                mask[s as usize] = true;
                queue.push(s);
            }
        }
        members.push(x);
    }
    members.sort_unstable();
    Ok(Ideal::from_parts(r, gens.to_vec(), members))
}

/// The principal ideal xR. The set of multiples is already an ideal, so no
/// closure pass is needed.
pub fn principal_ideal(r: &FiniteRing, x: Elem) -> Ideal {
    let mut elems: Vec<Elem> = r.elements().map(|s| r.mul(s, x)).collect();
    elems.sort_unstable();
    elems.dedup();
    Ideal::from_parts(r, vec![x], elems)
}

pub fn zero_ideal(r: &FiniteRing) -> Ideal {
    Ideal::from_parts(r, vec![], vec![r.zero()])
}

pub fn full_ideal(r: &FiniteRing) -> Ideal {
    Ideal::from_parts(r, vec![r.one()], r.elements().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealCombine {
    Sum,
    Product,
    Intersection,
}

pub fn ideal_combine(r: &FiniteRing, kind: IdealCombine, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_ring(r)?;
    j.check_ring(r)?;
    Ok(match kind {
        IdealCombine::Sum => ideal_sum(r, i, j),
        IdealCombine::Product => ideal_product(r, i, j),
        IdealCombine::Intersection => ideal_intersection(r, i, j),
    })
}

/// I + J. The pointwise sum of two ideals is already an ideal.
pub fn ideal_sum(r: &FiniteRing, i: &Ideal, j: &Ideal) -> Ideal {
    let elems = pointwise_sum(r, i.elements(), j.elements());
    let mut gens = i.generators().to_vec();
    gens.extend_from_slice(j.generators());
    gens.dedup();
    Ideal::from_parts(r, gens, elems)
}

/// I·J: the closure of the pairwise generator products.
pub fn ideal_product(r: &FiniteRing, i: &Ideal, j: &Ideal) -> Ideal {
    let mut prods = Vec::new();
    for &a in i.generators() {
        for &b in j.generators() {
            prods.push(r.mul(a, b));
        }
    }
    prods.sort_unstable();
    prods.dedup();
    ideal_closure(r, &prods).expect("generator products are in range")
}

/// I ∩ J as a set intersection (verified to be an ideal in debug builds).
pub fn ideal_intersection(r: &FiniteRing, i: &Ideal, j: &Ideal) -> Ideal {
    let jm = j.mask(r);
    let elems: Vec<Elem> = i
        .elements()
        .iter()
        .copied()
        .filter(|&x| jm[x as usize])
        .collect();
    let gens = elems.clone();
    Ideal::from_parts(r, gens, elems)
}

pub(crate) fn pointwise_sum(r: &FiniteRing, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut mask = vec![false; r.order()];
    for &x in a {
        for &y in b {
            mask[r.add(x, y) as usize] = true;
        }
    }
    mask_to_vec(&mask)
}

pub(crate) fn mask_to_vec(mask: &[bool]) -> Vec<Elem> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as Elem))
        .collect()
}

/// Greedy canonical generating set: walk elements in carrier order, keep
/// those not generated by the ones already kept.
pub fn minimal_generators(r: &FiniteRing, sorted_elements: &[Elem]) -> Vec<Elem> {
    if sorted_elements.len() <= 1 {
        return vec![];
    }
    let mut gens: Vec<Elem> = Vec::new();
    let mut span = vec![r.zero()];
    for &x in sorted_elements {
        if span.binary_search(&x).is_ok() {
            continue;
        }
        gens.push(x);
        span = ideal_closure(r, &gens)
            .expect("elements are in range")
            .elements()
            .to_vec();
        if span.len() == sorted_elements.len() {
            break;
        }
    }
    gens
}

/// Every ideal of R, obtained by closing the set of principal ideals under
/// pairwise sums, sorted canonically by element set.
pub fn all_ideals(r: &FiniteRing) -> Result<Vec<Ideal>> {
    all_ideals_capped(r, ENUMERATION_CAP)
}

pub fn all_ideals_capped(r: &FiniteRing, cap: usize) -> Result<Vec<Ideal>> {
    if r.order() > cap {
        return Err(CoreError::CapExceeded {
            ring: r.label().to_string(),
            order: r.order(),
            cap,
        });
    }
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut pool: Vec<Vec<Elem>> = Vec::new();
    for x in r.elements() {
        let p = principal_ideal(r, x).elements().to_vec();
        if seen.insert(p.clone()) {
            pool.push(p);
        }
    }
    let mut i = 0;
    while i < pool.len() {
        for j in 0..=i {
            let s = pointwise_sum(r, &pool[i], &pool[j]);
            if !seen.contains(&s) {
                seen.insert(s.clone());
                pool.push(s);
            }
        }
        i += 1;
    }
    pool.sort_unstable();
    Ok(pool
        .into_iter()
        .map(|elems| {
            let gens = minimal_generators(r, &elems);
            Ideal::from_parts(r, gens, elems)
        })
        .collect())
}

/// The colon ideal (I : J) = { x in R : xJ ⊆ I }.
pub fn colon_ideal(r: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_ring(r)?;
    j.check_ring(r)?;
    let im = i.mask(r);
    let elems: Vec<Elem> = r
        .elements()
        .filter(|&x| j.elements().iter().all(|&e| im[r.mul(x, e) as usize]))
        .collect();
    let gens = elems.clone();
    Ok(Ideal::from_parts(r, gens, elems))
}

/// Invertibility over the total quotient ring, which for a finite ring is the
/// ring itself: true iff (R : I)·I = R.
///
/// Both the colon-ideal route and the contains-a-unit shortcut are computed
/// and must agree; the redundancy is an implementation cross-check.
pub fn is_invertible(r: &FiniteRing, i: &Ideal) -> Result<bool> {
    i.check_ring(r)?;
    let full = full_ideal(r);
    let inverse_candidate = colon_ideal(r, &full, i)?;
    let via_colon = ideal_product(r, &inverse_candidate, i).is_full(r);
    let via_unit = i.elements().iter().any(|&x| r.is_unit(x));
    assert_eq!(
        via_colon, via_unit,
        "invertibility routes disagree on {} in {}",
        i.display(r),
        r.label()
    );
    Ok(via_colon)
}

/// Content ideal of a coefficient list.
pub fn content(r: &FiniteRing, coeffs: &[Elem]) -> Result<Ideal> {
    ideal_closure(r, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    #[test]
    fn closure_in_zmod12() {
        let r = make_zmod(12).unwrap();
        let i = ideal_closure(&r, &[8]).unwrap();
        assert_eq!(i.elements(), &[0, 4, 8]);
    }

    #[test]
    fn empty_generators_give_zero_ideal() {
        let r = make_zmod(9).unwrap();
        let i = ideal_closure(&r, &[]).unwrap();
        assert_eq!(i.elements(), &[0]);
    }

    #[test]
    fn unit_generator_gives_full_ideal() {
        // 3·3 = 1 mod 8, so 3 is a unit
        let r = make_zmod(8).unwrap();
        let i = ideal_closure(&r, &[3]).unwrap();
        assert!(i.is_full(&r));
    }

    #[test]
    fn combine_in_zmod8_and_zmod12() {
        let r8 = make_zmod(8).unwrap();
        let two = ideal_closure(&r8, &[2]).unwrap();
        let four = ideal_combine(&r8, IdealCombine::Product, &two, &two).unwrap();
        assert_eq!(four, ideal_closure(&r8, &[4]).unwrap());

        let zero = zero_ideal(&r8);
        assert_eq!(ideal_sum(&r8, &two, &zero), two);

        let r12 = make_zmod(12).unwrap();
        let i4 = ideal_closure(&r12, &[4]).unwrap();
        let i6 = ideal_closure(&r12, &[6]).unwrap();
        let meet = ideal_intersection(&r12, &i4, &i6);
        assert_eq!(meet.elements(), &[0]);
    }

    #[test]
    fn ring_mismatch_is_detected() {
        let r8 = make_zmod(8).unwrap();
        let r12 = make_zmod(12).unwrap();
        let i = ideal_closure(&r8, &[2]).unwrap();
        let j = ideal_closure(&r12, &[2]).unwrap();
        assert!(ideal_combine(&r8, IdealCombine::Sum, &i, &j).is_err());
    }

    #[test]
    fn all_ideals_of_chain_and_non_chain_rings() {
        let r8 = make_zmod(8).unwrap();
        let ideals = all_ideals(&r8).unwrap();
        assert_eq!(ideals.len(), 4);
        // totally ordered
        for w in ideals.windows(2) {
            let small = &w[0];
            let large = &w[1];
            assert!(
                small.elements().iter().all(|&x| large.contains(x))
                    || large.elements().iter().all(|&x| small.contains(x))
            );
        }

        let r12 = make_zmod(12).unwrap();
        assert_eq!(all_ideals(&r12).unwrap().len(), 6);

        let r5 = make_zmod(5).unwrap();
        let f = all_ideals(&r5).unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn lattice_is_closed_under_combinations() {
        let r = make_zmod(12).unwrap();
        let ideals = all_ideals(&r).unwrap();
        for i in &ideals {
            for j in &ideals {
                for kind in [IdealCombine::Sum, IdealCombine::Product, IdealCombine::Intersection] {
                    let combined = ideal_combine(&r, kind, i, j).unwrap();
                    assert!(ideals.contains(&combined));
                }
            }
        }
    }

    #[test]
    fn colon_examples() {
        let r = make_zmod(8).unwrap();
        let four = ideal_closure(&r, &[4]).unwrap();
        let two = ideal_closure(&r, &[2]).unwrap();
        let q = colon_ideal(&r, &four, &two).unwrap();
        assert_eq!(q, two);

        // (I : R) = I and (R : J) = R
        let full = full_ideal(&r);
        assert_eq!(colon_ideal(&r, &four, &full).unwrap(), four);
        assert_eq!(colon_ideal(&r, &full, &two).unwrap(), full);
    }

    #[test]
    fn colon_product_is_contained() {
        let r = make_zmod(12).unwrap();
        let ideals = all_ideals(&r).unwrap();
        for i in &ideals {
            for j in &ideals {
                let c = colon_ideal(&r, i, j).unwrap();
                let p = ideal_product(&r, &c, j);
                assert!(p.elements().iter().all(|&x| i.contains(x)));
            }
        }
    }

    #[test]
    fn invertibility_matches_unit_content() {
        let r = make_zmod(8).unwrap();
        assert!(is_invertible(&r, &full_ideal(&r)).unwrap());
        let two = ideal_closure(&r, &[2]).unwrap();
        assert!(!is_invertible(&r, &two).unwrap());
        let with_unit = ideal_closure(&r, &[3]).unwrap();
        assert!(is_invertible(&r, &with_unit).unwrap());
    }

    #[test]
    fn content_examples() {
        let r = make_zmod(8).unwrap();
        assert_eq!(
            content(&r, &[2, 4]).unwrap(),
            ideal_closure(&r, &[2]).unwrap()
        );
        assert_eq!(content(&r, &[]).unwrap(), zero_ideal(&r));
        assert_eq!(content(&r, &[0, 0]).unwrap(), zero_ideal(&r));
        assert!(content(&r, &[3, 2]).unwrap().is_full(&r));
    }

    #[test]
    fn minimal_generators_are_small() {
        let r = make_zmod(12).unwrap();
        let i = ideal_closure(&r, &[8, 4]).unwrap();
        assert_eq!(minimal_generators(&r, i.elements()), vec![4]);
        assert_eq!(i.display(&r), "(4)");
    }
}
