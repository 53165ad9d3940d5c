//! Verified ring homomorphisms.
//!
//! Maps are checked eagerly at construction and never trusted: every
//! downstream checker assumes a genuine unital homomorphism.

use crate::error::{CoreError, HomViolation, HomViolationKind, Result};
use crate::ring::{Elem, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    source_tag: u64,
    target_tag: u64,
    source_label: String,
    target_label: String,
    map: Vec<Elem>,
}

impl RingHom {
    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x as usize]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn target_label(&self) -> &str {
        &self.target_label
    }

    pub fn check_source(&self, r: &FiniteRing) -> Result<()> {
        if self.source_tag == r.tag() {
            Ok(())
        } else {
            Err(CoreError::RingMismatch {
                expected: r.label().to_string(),
                found: format!("hom source {}", self.source_label),
            })
        }
    }

    pub fn check_target(&self, r: &FiniteRing) -> Result<()> {
        if self.target_tag == r.tag() {
            Ok(())
        } else {
            Err(CoreError::RingMismatch {
                expected: r.label().to_string(),
                found: format!("hom target {}", self.target_label),
            })
        }
    }

    pub fn is_surjective(&self, target: &FiniteRing) -> bool {
        let mut hit = vec![false; target.order()];
        for &y in &self.map {
            hit[y as usize] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn kernel_elements(&self, target: &FiniteRing) -> Vec<Elem> {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(x, &y)| (y == target.zero()).then_some(x as Elem))
            .collect()
    }

    /// Image of the map as a sorted element set of the target.
    pub fn image(&self) -> Vec<Elem> {
        let mut im = self.map.clone();
        im.sort_unstable();
        im.dedup();
        im
    }
}

/// Builds a hom from an explicit element table, rejecting it with the
/// violating pair if any axiom fails. The check is exhaustive over the
/// source carrier.
pub fn make_hom(source: &FiniteRing, target: &FiniteRing, map: Vec<Elem>) -> Result<RingHom> {
    if map.len() != source.order() {
        return Err(CoreError::MalformedRing {
            label: source.label().to_string(),
            reason: format!(
                "hom table has {} entries for a ring of order {}",
                map.len(),
                source.order()
            ),
        });
    }
    for &y in &map {
        target.check_element(y)?;
    }
    let reject = |violation: HomViolation| CoreError::NotAHomomorphism {
        from: source.label().to_string(),
        to: target.label().to_string(),
        violation,
    };
    let one = map[source.one() as usize];
    if one != target.one() {
        return Err(reject(HomViolation {
            kind: HomViolationKind::Unital,
            x: source.one(),
            y: source.one(),
            got: one,
            expected: target.one(),
        }));
    }
    for x in source.elements() {
        for y in source.elements() {
            let add_img = map[source.add(x, y) as usize];
            let add_exp = target.add(map[x as usize], map[y as usize]);
            if add_img != add_exp {
                return Err(reject(HomViolation {
                    kind: HomViolationKind::Additive,
                    x,
                    y,
                    got: add_img,
                    expected: add_exp,
                }));
            }
            let mul_img = map[source.mul(x, y) as usize];
            let mul_exp = target.mul(map[x as usize], map[y as usize]);
            if mul_img != mul_exp {
                return Err(reject(HomViolation {
                    kind: HomViolationKind::Multiplicative,
                    x,
                    y,
                    got: mul_img,
                    expected: mul_exp,
                }));
            }
        }
    }
    Ok(RingHom {
        source_tag: source.tag(),
        target_tag: target.tag(),
        source_label: source.label().to_string(),
        target_label: target.label().to_string(),
        map,
    })
}

pub fn identity_hom(r: &FiniteRing) -> RingHom {
    make_hom(r, r, r.elements().collect()).expect("identity is a homomorphism")
}

/// Builds and verifies the hom given by a pointwise rule.
pub fn hom_by(
    source: &FiniteRing,
    target: &FiniteRing,
    f: impl Fn(Elem) -> Elem,
) -> Result<RingHom> {
    make_hom(source, target, source.elements().map(f).collect())
}

/// The reduction x mod m between Z/n and Z/m; a homomorphism exactly
/// when m divides n (verified like any other table).
pub fn canonical_zmod_hom(source: &FiniteRing, target: &FiniteRing) -> Result<RingHom> {
    let m = target.order() as Elem;
    hom_by(source, target, |x| x % m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    #[test]
    fn canonical_mod_reduction_accepted() {
        let z8 = make_zmod(8).unwrap();
        let z4 = make_zmod(4).unwrap();
        let f = canonical_zmod_hom(&z8, &z4).unwrap();
        assert!(f.is_surjective(&z4));
        assert_eq!(f.kernel_elements(&z4), vec![0, 4]);
    }

    #[test]
    fn non_hom_rejected_with_witness() {
        let z4 = make_zmod(4).unwrap();
        let z6 = make_zmod(6).unwrap();
        // x -> x sends 1 to 1 but is not additive: 3+1 wraps in Z/4, not Z/6
        let err = make_hom(&z4, &z6, vec![0, 1, 2, 3]).unwrap_err();
        match err {
            CoreError::NotAHomomorphism { violation, .. } => {
                assert_eq!(violation.kind, HomViolationKind::Additive);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn identity_accepted() {
        let r = make_zmod(12).unwrap();
        let id = identity_hom(&r);
        assert!(id.is_surjective(&r));
        assert_eq!(id.kernel_elements(&r), vec![0]);
    }

    #[test]
    fn non_unital_rejected() {
        let z4 = make_zmod(4).unwrap();
        let err = make_hom(&z4, &z4, vec![0, 0, 0, 0]).unwrap_err();
        match err {
            CoreError::NotAHomomorphism { violation, .. } => {
                assert_eq!(violation.kind, HomViolationKind::Unital);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
