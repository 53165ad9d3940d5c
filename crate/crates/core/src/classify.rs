//! Element classification, locality, maximal ideals and the decomposition of
//! a finite ring into local factors.

use crate::error::{CoreError, Result};
use crate::hom::{make_hom, RingHom};
use crate::ideal::{all_ideals, ideal_intersection, Ideal};
use crate::ring::{Elem, FiniteRing};
use crate::ENUMERATION_CAP;
use std::collections::HashSet;

/// The decided element sets and ideal-theoretic structure of a finite ring.
///
/// By convention 0 is a zero divisor, so zero divisors and regular elements
/// partition the carrier; on a finite ring the regular elements are exactly
/// the units (multiplication by a regular element is injective, hence
/// surjective).
#[derive(Debug, Clone)]
pub struct ClassifiedRing {
    pub ring_label: String,
    pub zero_divisors: Vec<Elem>,
    pub units: Vec<Elem>,
    pub regulars: Vec<Elem>,
    pub maximal_ideals: Vec<Ideal>,
    pub radical: Ideal,
    pub is_local: bool,
}

/// Zero-divisor mask, scanning all pairs. `mask[x]` is true when some
/// nonzero y kills x (or x = 0).
pub(crate) fn zero_divisor_mask(r: &FiniteRing) -> Vec<bool> {
    let mut mask = vec![false; r.order()];
    mask[r.zero() as usize] = true;
    for x in r.elements() {
        if mask[x as usize] {
            continue;
        }
        for y in r.elements() {
            if y != r.zero() && r.mul(x, y) == r.zero() {
                mask[x as usize] = true;
                break;
            }
        }
    }
    mask
}

pub(crate) fn unit_mask(r: &FiniteRing) -> Vec<bool> {
    let mut mask = vec![false; r.order()];
    for x in r.elements() {
        for y in r.elements() {
            if r.mul(x, y) == r.one() {
                mask[x as usize] = true;
                break;
            }
        }
    }
    mask
}

pub fn classify(r: &FiniteRing) -> Result<ClassifiedRing> {
    let lattice = all_ideals(r)?;
    Ok(classify_with_lattice(r, &lattice))
}

/// Classification against a precomputed ideal lattice (used by callers that
/// cache lattices).
pub fn classify_with_lattice(r: &FiniteRing, lattice: &[Ideal]) -> ClassifiedRing {
    let zd = zero_divisor_mask(r);
    let um = unit_mask(r);
    let zero_divisors: Vec<Elem> = r.elements().filter(|&x| zd[x as usize]).collect();
    let regulars: Vec<Elem> = r.elements().filter(|&x| !zd[x as usize]).collect();
    let units: Vec<Elem> = r.elements().filter(|&x| um[x as usize]).collect();
    assert_eq!(
        units, regulars,
        "finite ring {}: regular elements must coincide with units",
        r.label()
    );

    let proper: Vec<&Ideal> = lattice.iter().filter(|i| !i.is_full(r)).collect();
    let maximal_ideals: Vec<Ideal> = proper
        .iter()
        .filter(|i| {
            !proper.iter().any(|j| {
                j.len() > i.len() && i.elements().iter().all(|&x| j.contains(x))
            })
        })
        .map(|i| (*i).clone())
        .collect();
    assert!(
        !maximal_ideals.is_empty(),
        "a ring with 0 != 1 has a maximal ideal"
    );
    let radical = maximal_ideals
        .iter()
        .skip(1)
        .fold(maximal_ideals[0].clone(), |acc, m| {
            ideal_intersection(r, &acc, m)
        });

    // locality, decided two ways that must agree
    let local_by_max = maximal_ideals.len() == 1;
    let non_units: Vec<Elem> = r.elements().filter(|&x| !um[x as usize]).collect();
    let local_by_closure = non_units
        .iter()
        .all(|&x| non_units.iter().all(|&y| !um[r.add(x, y) as usize]));
    assert_eq!(
        local_by_max,
        local_by_closure,
        "locality criteria disagree on {}",
        r.label()
    );

    ClassifiedRing {
        ring_label: r.label().to_string(),
        zero_divisors,
        units,
        regulars,
        maximal_ideals,
        radical,
        is_local: local_by_max,
    }
}

/// Splits a finite ring into its local factors along the primitive
/// idempotents, returning each factor with its projection. The canonical map
/// into the product of the factors is verified to be bijective.
pub fn local_decomposition(r: &FiniteRing) -> Result<Vec<(FiniteRing, RingHom)>> {
    if r.order() > ENUMERATION_CAP {
        return Err(CoreError::CapExceeded {
            ring: r.label().to_string(),
            order: r.order(),
            cap: ENUMERATION_CAP,
        });
    }
    let idempotents: Vec<Elem> = r.elements().filter(|&x| r.mul(x, x) == x).collect();
    let primitive: Vec<Elem> = idempotents
        .iter()
        .copied()
        .filter(|&e| {
            e != r.zero()
                && !idempotents
                    .iter()
                    .any(|&f| f != r.zero() && f != e && r.mul(e, f) == f)
        })
        .collect();

    // orthogonality and completeness of the primitive system
    let mut total = r.zero();
    for (k, &e) in primitive.iter().enumerate() {
        total = r.add(total, e);
        for &f in &primitive[k + 1..] {
            assert_eq!(
                r.mul(e, f),
                r.zero(),
                "primitive idempotents must be orthogonal in {}",
                r.label()
            );
        }
    }
    assert_eq!(total, r.one(), "primitive idempotents must sum to 1");

    let mut factors = Vec::with_capacity(primitive.len());
    for &e in &primitive {
        let mut carrier: Vec<Elem> = r.elements().map(|x| r.mul(x, e)).collect();
        carrier.sort_unstable();
        carrier.dedup();
        let pos = |x: Elem| carrier.binary_search(&x).unwrap() as Elem;
        let k = carrier.len();
        let mut add = Vec::with_capacity(k * k);
        let mut mul = Vec::with_capacity(k * k);
        for &x in &carrier {
            for &y in &carrier {
                add.push(pos(r.add(x, y)));
                mul.push(pos(r.mul(x, y)));
            }
        }
        let neg = carrier.iter().map(|&x| pos(r.neg(x))).collect();
        let names = carrier.iter().map(|&x| r.name(x).to_string()).collect();
        let label = if primitive.len() == 1 {
            r.label().to_string()
        } else {
            format!("{}·e{}", r.label(), r.name(e))
        };
        let factor =
            FiniteRing::from_tables(label, names, add, mul, neg, pos(r.zero()), pos(e))?;
        let table: Vec<Elem> = r.elements().map(|x| pos(r.mul(x, e))).collect();
        let proj = make_hom(r, &factor, table)?;
        factors.push((factor, proj));
    }

    // the tuple map into the product of the factors must be a bijection
    let mut seen: HashSet<Vec<Elem>> = HashSet::with_capacity(r.order());
    for x in r.elements() {
        let tuple: Vec<Elem> = factors.iter().map(|(_, p)| p.apply(x)).collect();
        assert!(seen.insert(tuple), "local factors do not separate {}", x);
    }
    let product_order: usize = factors.iter().map(|(f, _)| f.order()).product();
    assert_eq!(product_order, r.order(), "factor orders must multiply to |R|");

    Ok(factors)
}

/// Whether every element of J is annihilated by the image of some regular
/// element of A. On a finite A the regulars are units, so this reduces to
/// J = 0; the scan is still run so finite and exact callers share one
/// semantics.
pub fn is_torsion_module(
    a: &FiniteRing,
    b: &FiniteRing,
    f: &RingHom,
    j: &Ideal,
) -> Result<bool> {
    f.check_source(a)?;
    f.check_target(b)?;
    j.check_ring(b)?;
    let zd = zero_divisor_mask(a);
    let regulars: Vec<Elem> = a.elements().filter(|&x| !zd[x as usize]).collect();
    Ok(j.elements().iter().all(|&e| {
        regulars
            .iter()
            .any(|&s| b.mul(f.apply(s), e) == b.zero())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::identity_hom;
    use crate::ideal::{ideal_closure, zero_ideal};
    use crate::ring::{make_product, make_zmod};

    #[test]
    fn classify_zmod8() {
        let r = make_zmod(8).unwrap();
        let c = classify(&r).unwrap();
        assert_eq!(c.zero_divisors, vec![0, 2, 4, 6]);
        assert_eq!(c.units, vec![1, 3, 5, 7]);
        assert!(c.is_local);
        assert_eq!(c.maximal_ideals.len(), 1);
        assert_eq!(c.maximal_ideals[0].elements(), &[0, 2, 4, 6]);
        assert_eq!(c.radical.elements(), &[0, 2, 4, 6]);
    }

    #[test]
    fn classify_zmod12() {
        let r = make_zmod(12).unwrap();
        let c = classify(&r).unwrap();
        assert!(!c.is_local);
        assert_eq!(c.maximal_ideals.len(), 2);
        let sizes: Vec<usize> = c.maximal_ideals.iter().map(|m| m.len()).collect();
        assert!(sizes.contains(&6) && sizes.contains(&4)); // (2) and (3)
        assert_eq!(c.radical.elements(), &[0, 6]);
    }

    #[test]
    fn classify_field() {
        let r = make_zmod(5).unwrap();
        let c = classify(&r).unwrap();
        assert_eq!(c.zero_divisors, vec![0]);
        assert_eq!(c.units, vec![1, 2, 3, 4]);
        assert!(c.is_local);
        assert!(c.radical.is_zero_ideal());
    }

    #[test]
    fn radical_contains_nilpotents() {
        for n in [4u64, 8, 9, 12, 18, 24] {
            let r = make_zmod(n).unwrap();
            let c = classify(&r).unwrap();
            for x in r.elements() {
                let mut p = x;
                let mut nilpotent = false;
                for _ in 0..r.order() {
                    p = r.mul(p, x);
                    if p == r.zero() {
                        nilpotent = true;
                        break;
                    }
                }
                if nilpotent {
                    assert!(c.radical.contains(x), "nilpotent {x} outside Rad(Z/{n})");
                }
            }
        }
    }

    #[test]
    fn decomposition_of_zmod12() {
        let r = make_zmod(12).unwrap();
        let factors = local_decomposition(&r).unwrap();
        let mut orders: Vec<usize> = factors.iter().map(|(f, _)| f.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![3, 4]);
        for (f, _) in &factors {
            assert!(classify(f).unwrap().is_local);
        }
    }

    #[test]
    fn decomposition_of_local_ring_is_itself() {
        let r = make_zmod(8).unwrap();
        let factors = local_decomposition(&r).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0.order(), 8);
    }

    #[test]
    fn decomposition_of_square_product() {
        let z2 = make_zmod(2).unwrap();
        let r = make_product(&z2, &z2).unwrap();
        let factors = local_decomposition(&r).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(f, _)| f.order() == 2));
    }

    #[test]
    fn torsion_reduces_to_zero_ideal_over_finite_base() {
        let r = make_zmod(8).unwrap();
        let id = identity_hom(&r);
        let zero = zero_ideal(&r);
        assert!(is_torsion_module(&r, &r, &id, &zero).unwrap());
        let two = ideal_closure(&r, &[2]).unwrap();
        assert!(!is_torsion_module(&r, &r, &id, &two).unwrap());
    }
}
