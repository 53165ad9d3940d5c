//! The amalgamation A ⋈^f J: the subring {(a, f(a)+j) | a ∈ A, j ∈ J} of
//! A × B, for a verified hom f : A → B and a proper ideal J of B, together
//! with the checkers for its zero-divisor set, locality, maximal spectrum
//! and quotient structure.

use crate::classify::{classify, is_torsion_module, zero_divisor_mask};
use crate::error::{CoreError, Result};
use crate::hom::{identity_hom, make_hom, RingHom};
use crate::ideal::{ideal_closure, minimal_generators, Ideal};
use crate::ring::{make_quotient, wrap_label, Elem, FiniteRing};
use std::collections::HashMap;

/// An amalgamated algebra, keeping both views of its elements: the subring
/// pairs (a, b) with b = f(a)+j, and the (a, j) parameterization used by the
/// zero-divisor formula.
#[derive(Debug, Clone)]
pub struct AmalgamRing {
    pub base: FiniteRing,   // A
    pub target: FiniteRing, // B
    pub hom: RingHom,       // f : A -> B
    pub j: Ideal,           // ideal of B
    /// The amalgamation itself as a finite ring.
    pub ring: FiniteRing,
    a_of: Vec<Elem>,
    b_of: Vec<Elem>,
    j_of: Vec<Elem>,
    pair_index: HashMap<(Elem, Elem), Elem>,
}

impl AmalgamRing {
    /// Pair view (a, b) of an amalgam element.
    pub fn pair_of(&self, x: Elem) -> (Elem, Elem) {
        (self.a_of[x as usize], self.b_of[x as usize])
    }

    /// Parameter view (a, j) with b = f(a)+j.
    pub fn aj_of(&self, x: Elem) -> (Elem, Elem) {
        (self.a_of[x as usize], self.j_of[x as usize])
    }

    pub fn index_of_pair(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.pair_index.get(&(a, b)).copied()
    }

    fn index_of_aj(&self, a: Elem, j: Elem) -> Elem {
        let b = self.target.add(self.hom.apply(a), j);
        self.pair_index[&(a, b)]
    }

    /// The projection (a, f(a)+j) -> a, a surjective hom onto A.
    pub fn first_projection(&self) -> RingHom {
        make_hom(&self.ring, &self.base, self.a_of.clone())
            .expect("first projection is a homomorphism")
    }

    /// The projection (a, f(a)+j) -> f(a)+j, a hom into B (surjective for
    /// duplications and more generally when f(A)+J = B).
    pub fn second_projection(&self) -> RingHom {
        make_hom(&self.ring, &self.target, self.b_of.clone())
            .expect("second projection is a homomorphism")
    }

    /// The ideal {0} x J of the amalgam.
    pub fn zero_cross_j(&self) -> Ideal {
        let gens: Vec<Elem> = self
            .j
            .elements()
            .iter()
            .map(|&jx| self.index_of_aj(self.base.zero(), jx))
            .collect();
        let ideal = ideal_closure(&self.ring, &gens).expect("indices are in range");
        debug_assert_eq!(ideal.elements().len(), self.j.elements().len());
        ideal
    }
}

/// Builds A ⋈^f J and verifies it is a subring of A × B: closed under the
/// componentwise operations and containing (0,0) and (1,1).
pub fn make_amalgamation(
    a: &FiniteRing,
    b: &FiniteRing,
    f: &RingHom,
    j: &Ideal,
) -> Result<AmalgamRing> {
    f.check_source(a)?;
    f.check_target(b)?;
    j.check_ring(b)?;
    if j.is_full(b) {
        return Err(CoreError::ImproperIdeal(b.label().to_string()));
    }
    let jn = j.elements().len();
    let order = a.order() * jn;
    let mut a_of = Vec::with_capacity(order);
    let mut b_of = Vec::with_capacity(order);
    let mut j_of = Vec::with_capacity(order);
    let mut pair_index = HashMap::with_capacity(order);
    for ax in a.elements() {
        for &jx in j.elements() {
            let bx = b.add(f.apply(ax), jx);
            let idx = a_of.len() as Elem;
            a_of.push(ax);
            b_of.push(bx);
            j_of.push(jx);
            let clash = pair_index.insert((ax, bx), idx);
            assert!(clash.is_none(), "(a, j) -> (a, f(a)+j) must be injective");
        }
    }

    let lookup = |pa: Elem, pb: Elem, op: &str| -> Result<Elem> {
        pair_index.get(&(pa, pb)).copied().ok_or_else(|| {
            CoreError::MalformedRing {
                label: format!("{} ⋈^f J", a.label()),
                reason: format!("carrier not closed under {op} at ({pa},{pb})"),
            }
        })
    };
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order {
        let (xa, xb) = (a_of[x], b_of[x]);
        for y in 0..order {
            let (ya, yb) = (a_of[y], b_of[y]);
            add.push(lookup(a.add(xa, ya), b.add(xb, yb), "addition")?);
            mul.push(lookup(a.mul(xa, ya), b.mul(xb, yb), "multiplication")?);
        }
    }
    let mut neg = Vec::with_capacity(order);
    for x in 0..order {
        neg.push(lookup(a.neg(a_of[x]), b.neg(b_of[x]), "negation")?);
    }
    let zero = lookup(a.zero(), b.zero(), "zero")?;
    let one = lookup(a.one(), b.one(), "one")?;
    let names: Vec<String> = (0..order)
        .map(|x| format!("({},{})", a.name(a_of[x]), b.name(b_of[x])))
        .collect();
    let gen_names: Vec<&str> = minimal_generators(b, j.elements())
        .iter()
        .map(|&g| b.name(g))
        .collect();
    let label = if f.map() == identity_hom(a).map() && a.tag() == b.tag() {
        format!("{} ⋈ ({})", wrap_label(a.label()), gen_names.join(","))
    } else {
        format!(
            "{} ⋈^f ({})",
            wrap_label(a.label()),
            gen_names.join(",")
        )
    };
    let ring = FiniteRing::from_tables(label, names, add, mul, neg, zero, one)?;
    Ok(AmalgamRing {
        base: a.clone(),
        target: b.clone(),
        hom: f.clone(),
        j: j.clone(),
        ring,
        a_of,
        b_of,
        j_of,
        pair_index,
    })
}

/// Amalgamated duplication A ⋈ I: the amalgamation of A with itself along I
/// with respect to the identity.
pub fn make_duplication(a: &FiniteRing, i: &Ideal) -> Result<AmalgamRing> {
    make_amalgamation(a, a, &identity_hom(a), i)
}

// ---------------------------------------------------------------------------
// zero-divisor formula

/// The four sets whose union the zero-divisor formula predicts, as sorted
/// element sets of the amalgam:
/// S1 = {(a, f(a)+j) : a ∈ Z(A), j ∈ J},
/// S2 = {(a, 0) : f(a) ∈ J},
/// S3 = {(0, x) : x ∈ J},
/// S4 = {(a, f(a)+i) : a regular, (f(a)+i)·j = 0 for some 0 ≠ j ∈ J}.
#[derive(Debug, Clone)]
pub struct FormulaSets {
    pub s1: Vec<Elem>,
    pub s2: Vec<Elem>,
    pub s3: Vec<Elem>,
    pub s4: Vec<Elem>,
    pub union: Vec<Elem>,
}

pub fn zero_divisor_formula_rhs(am: &AmalgamRing) -> FormulaSets {
    let a = &am.base;
    let b = &am.target;
    let zd_a = zero_divisor_mask(a);

    let mut s1 = Vec::new();
    let mut s4 = Vec::new();
    for ax in a.elements() {
        if zd_a[ax as usize] {
            for &jx in am.j.elements() {
                s1.push(am.index_of_aj(ax, jx));
            }
        } else {
            for &jx in am.j.elements() {
                let c = b.add(am.hom.apply(ax), jx);
                let annihilated = am
                    .j
                    .elements()
                    .iter()
                    .any(|&k| k != b.zero() && b.mul(c, k) == b.zero());
                if annihilated {
                    s4.push(am.index_of_aj(ax, jx));
                }
            }
        }
    }
    // (a, f(a)+j) has second coordinate 0 iff f(a) = -j, i.e. f(a) ∈ J
    let s2: Vec<Elem> = a
        .elements()
        .filter(|&ax| am.j.contains(am.hom.apply(ax)))
        .map(|ax| am.pair_index[&(ax, b.zero())])
        .collect();
    let s3: Vec<Elem> = am
        .j
        .elements()
        .iter()
        .map(|&jx| am.index_of_aj(a.zero(), jx))
        .collect();

    let mut union: Vec<Elem> = s1.iter().chain(&s2).chain(&s3).chain(&s4).copied().collect();
    union.sort_unstable();
    union.dedup();
    let mut sets = FormulaSets { s1, s2, s3, s4, union };
    for s in [&mut sets.s1, &mut sets.s2, &mut sets.s3, &mut sets.s4] {
        s.sort_unstable();
        s.dedup();
    }
    sets
}

/// Outcome of comparing the exhaustive zero-divisor set of the amalgam with
/// the formula's union, under the three sufficient hypotheses:
/// (a) J ⊆ f(A), (b) J a torsion A-module, (c) J² = 0.
///
/// When at least one hypothesis holds, equality is the asserted claim; with
/// none, the equality status is informational only. Hypothesis flags are
/// always computed, never supplied by the caller.
#[derive(Debug, Clone)]
pub struct ZeroDivisorFormulaVerdict {
    pub hyp_a: bool,
    pub hyp_b: bool,
    pub hyp_c: bool,
    pub zero_divisors: Vec<Elem>,
    pub sets: FormulaSets,
    /// Z(A ⋈^f J) = union?
    pub equal: bool,
    /// Z(A ⋈^f J) ⊆ union (holds on every instance seen; tracked separately).
    pub zd_subset_of_rhs: bool,
    pub missing_from_rhs: Vec<Elem>,
    pub extra_in_rhs: Vec<Elem>,
    /// Whether some hypothesis applies, making `equal` a real claim.
    pub applicable: bool,
}

impl ZeroDivisorFormulaVerdict {
    pub fn pass(&self) -> bool {
        !self.applicable || self.equal
    }
}

pub fn zero_divisor_formula_check(am: &AmalgamRing) -> Result<ZeroDivisorFormulaVerdict> {
    let b = &am.target;
    let hyp_a = {
        let image = am.hom.image();
        am.j
            .elements()
            .iter()
            .all(|&jx| image.binary_search(&jx).is_ok())
    };
    let hyp_b = is_torsion_module(&am.base, b, &am.hom, &am.j)?;
    let hyp_c = am
        .j
        .elements()
        .iter()
        .all(|&x| am.j.elements().iter().all(|&y| b.mul(x, y) == b.zero()));

    let zd_mask = zero_divisor_mask(&am.ring);
    let zero_divisors: Vec<Elem> = am.ring.elements().filter(|&x| zd_mask[x as usize]).collect();
    let sets = zero_divisor_formula_rhs(am);

    let missing_from_rhs: Vec<Elem> = zero_divisors
        .iter()
        .copied()
        .filter(|x| sets.union.binary_search(x).is_err())
        .collect();
    let extra_in_rhs: Vec<Elem> = sets
        .union
        .iter()
        .copied()
        .filter(|&x| !zd_mask[x as usize])
        .collect();
    let equal = missing_from_rhs.is_empty() && extra_in_rhs.is_empty();
    Ok(ZeroDivisorFormulaVerdict {
        hyp_a,
        hyp_b,
        hyp_c,
        zero_divisors,
        zd_subset_of_rhs: missing_from_rhs.is_empty(),
        missing_from_rhs,
        extra_in_rhs,
        equal,
        applicable: hyp_a || hyp_b || hyp_c,
        sets,
    })
}

// ---------------------------------------------------------------------------
// locality transfer

/// Two independently computed sides of "the amalgam is local iff A is local
/// and J ⊆ Rad(B)".
#[derive(Debug, Clone)]
pub struct LocalityTransferVerdict {
    pub amalgam_local: bool,
    pub base_local: bool,
    pub j_in_radical: bool,
    pub holds: bool,
    pub witness: Option<String>,
}

pub fn locality_transfer_check(am: &AmalgamRing) -> Result<LocalityTransferVerdict> {
    let amalgam_class = classify(&am.ring)?;
    let base_class = classify(&am.base)?;
    let target_class = classify(&am.target)?;
    let j_in_radical = am
        .j
        .elements()
        .iter()
        .all(|&jx| target_class.radical.contains(jx));
    let rhs = base_class.is_local && j_in_radical;
    let holds = amalgam_class.is_local == rhs;
    let witness = if holds {
        None
    } else {
        Some(format!(
            "amalgam has {} maximal ideals while A local = {}, J ⊆ Rad(B) = {}",
            amalgam_class.maximal_ideals.len(),
            base_class.is_local,
            j_in_radical
        ))
    };
    Ok(LocalityTransferVerdict {
        amalgam_local: amalgam_class.is_local,
        base_local: base_class.is_local,
        j_in_radical,
        holds,
        witness,
    })
}

// ---------------------------------------------------------------------------
// maximal spectrum pattern

/// Classification of Max(A ⋈^f J) against the two predicted families:
/// m ⋈^f J for m maximal in A, and Q̄^f = {(a, f(a)+j) : f(a)+j ∈ Q} for
/// Q maximal in B with Q ⊉ J.
#[derive(Debug, Clone)]
pub struct MaxSpectrumVerdict {
    /// Element sets of the amalgam's maximal ideals, each tagged with the
    /// family member it matched.
    pub matched: Vec<(Vec<Elem>, String)>,
    /// Maximal ideals matching neither family.
    pub unmatched: Vec<Vec<Elem>>,
    /// Family members that are not maximal ideals of the amalgam.
    pub unrealized: Vec<String>,
    pub holds: bool,
}

pub fn max_spectrum_pattern(am: &AmalgamRing) -> Result<MaxSpectrumVerdict> {
    let a = &am.base;
    let b = &am.target;
    let amalgam_class = classify(&am.ring)?;
    let base_class = classify(a)?;
    let target_class = classify(b)?;

    let mut families: Vec<(Vec<Elem>, String)> = Vec::new();
    for m in &base_class.maximal_ideals {
        let mut set = Vec::new();
        for &ax in m.elements() {
            for &jx in am.j.elements() {
                set.push(am.index_of_aj(ax, jx));
            }
        }
        set.sort_unstable();
        families.push((set, format!("{} ⋈^f J", m.display(a))));
    }
    for q in &target_class.maximal_ideals {
        let contains_j = am.j.elements().iter().all(|&jx| q.contains(jx));
        if contains_j {
            continue;
        }
        let set: Vec<Elem> = am
            .ring
            .elements()
            .filter(|&x| q.contains(am.pair_of(x).1))
            .collect();
        families.push((set, format!("{}^f-bar", q.display(b))));
    }

    let max_sets: Vec<Vec<Elem>> = amalgam_class
        .maximal_ideals
        .iter()
        .map(|m| m.elements().to_vec())
        .collect();
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    for set in &max_sets {
        match families.iter().find(|(f, _)| f == set) {
            Some((_, name)) => matched.push((set.clone(), name.clone())),
            None => unmatched.push(set.clone()),
        }
    }
    let unrealized: Vec<String> = families
        .iter()
        .filter(|(f, _)| !max_sets.contains(f))
        .map(|(_, name)| name.clone())
        .collect();
    let holds = unmatched.is_empty() && unrealized.is_empty();
    Ok(MaxSpectrumVerdict {
        matched,
        unmatched,
        unrealized,
        holds,
    })
}

// ---------------------------------------------------------------------------
// quotient isomorphism

/// Verifies A ≅ (A ⋈^f J)/({0} × J) via the candidate map
/// (a, f(a)+j) + ({0} × J) -> a: well-definedness, the hom equations and
/// bijectivity are all checked explicitly.
#[derive(Debug, Clone)]
pub struct QuotientIsoVerdict {
    pub holds: bool,
    pub reason: Option<String>,
}

pub fn quotient_iso_check(am: &AmalgamRing) -> Result<QuotientIsoVerdict> {
    let kernel = am.zero_cross_j();
    let (quot, proj) = make_quotient(&am.ring, &kernel)?;
    let fail = |reason: String| {
        Ok(QuotientIsoVerdict {
            holds: false,
            reason: Some(reason),
        })
    };

    // well-defined: every member of a coset must share its base component
    let mut image_of_coset = vec![Elem::MAX; quot.order()];
    for x in am.ring.elements() {
        let c = proj.apply(x) as usize;
        let (ax, _) = am.pair_of(x);
        if image_of_coset[c] == Elem::MAX {
            image_of_coset[c] = ax;
        } else if image_of_coset[c] != ax {
            return fail(format!(
                "coset {} mixes base components {} and {}",
                quot.name(c as Elem),
                am.base.name(image_of_coset[c]),
                am.base.name(ax)
            ));
        }
    }

    // bijective
    let mut hit = vec![false; am.base.order()];
    for &ax in &image_of_coset {
        if hit[ax as usize] {
            return fail("candidate map is not injective".to_string());
        }
        hit[ax as usize] = true;
    }
    if quot.order() != am.base.order() {
        return fail(format!(
            "quotient has order {}, base has order {}",
            quot.order(),
            am.base.order()
        ));
    }

    // ring homomorphism
    let a = &am.base;
    for x in quot.elements() {
        for y in quot.elements() {
            let lhs_add = image_of_coset[quot.add(x, y) as usize];
            let rhs_add = a.add(image_of_coset[x as usize], image_of_coset[y as usize]);
            if lhs_add != rhs_add {
                return fail(format!("additivity fails at cosets ({x},{y})"));
            }
            let lhs_mul = image_of_coset[quot.mul(x, y) as usize];
            let rhs_mul = a.mul(image_of_coset[x as usize], image_of_coset[y as usize]);
            if lhs_mul != rhs_mul {
                return fail(format!("multiplicativity fails at cosets ({x},{y})"));
            }
        }
    }
    if image_of_coset[quot.one() as usize] != a.one() {
        return fail("candidate map does not send 1 to 1".to_string());
    }
    Ok(QuotientIsoVerdict {
        holds: true,
        reason: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::canonical_zmod_hom;
    use crate::ring::{find_ring_isomorphism, make_zmod, verify_ring_axioms};

    fn z4_dup_two() -> AmalgamRing {
        let a = make_zmod(4).unwrap();
        let i = ideal_closure(&a, &[2]).unwrap();
        make_duplication(&a, &i).unwrap()
    }

    #[test]
    fn duplication_of_z4_along_two() {
        let am = z4_dup_two();
        assert_eq!(am.ring.order(), 8);
        assert!(verify_ring_axioms(&am.ring).all_pass());
        // carrier is {(a, a+j) : j in {0,2}}
        for x in am.ring.elements() {
            let (a, b) = am.pair_of(x);
            let diff = am.target.sub(b, a);
            assert!(am.j.contains(diff));
        }
    }

    #[test]
    fn duplication_of_paper_base_ring_has_order_32() {
        let b = make_zmod(8).unwrap();
        let i = ideal_closure(&b, &[2]).unwrap();
        let am = make_duplication(&b, &i).unwrap();
        assert_eq!(am.ring.order(), 32);
    }

    #[test]
    fn amalgam_along_zero_is_base() {
        let a = make_zmod(6).unwrap();
        let zero = ideal_closure(&a, &[]).unwrap();
        let am = make_duplication(&a, &zero).unwrap();
        assert_eq!(am.ring.order(), 6);
        assert!(find_ring_isomorphism(&am.ring, &a).is_some());
    }

    #[test]
    fn improper_ideal_rejected() {
        let a = make_zmod(4).unwrap();
        let full = ideal_closure(&a, &[1]).unwrap();
        assert!(matches!(
            make_duplication(&a, &full),
            Err(CoreError::ImproperIdeal(_))
        ));
    }

    #[test]
    fn formula_sets_on_z4_duplication() {
        let am = z4_dup_two();
        let sets = zero_divisor_formula_rhs(&am);
        let names: Vec<&str> = sets.union.iter().map(|&x| am.ring.name(x)).collect();
        // indices sort by (a, j): (2,2) has j = 0 and precedes (2,0) = (2, 2+2)
        assert_eq!(names, vec!["(0,0)", "(0,2)", "(2,2)", "(2,0)"]);
        // S4 is empty here: odd elements annihilate nothing in J
        assert!(sets.s4.is_empty());
    }

    #[test]
    fn formula_check_on_z4_duplication() {
        let am = z4_dup_two();
        let v = zero_divisor_formula_check(&am).unwrap();
        assert!(v.hyp_a, "identity map is surjective");
        assert!(v.hyp_c, "2·2 = 0 mod 4");
        assert!(!v.hyp_b);
        assert!(v.applicable && v.equal && v.pass());
    }

    #[test]
    fn formula_check_along_zero_ideal() {
        let a = make_zmod(6).unwrap();
        let zero = ideal_closure(&a, &[]).unwrap();
        let am = make_duplication(&a, &zero).unwrap();
        let v = zero_divisor_formula_check(&am).unwrap();
        assert!(v.hyp_a && v.hyp_b && v.hyp_c);
        assert!(v.equal);
        // with J = 0 the union degenerates to a copy of Z(A)
        assert_eq!(v.sets.union.len(), 4); // Z(Z/6) = {0,2,3,4}
    }

    #[test]
    fn locality_transfer_positive_and_negative() {
        // local: A = Z/8, B = Z/4, f canonical, J = (2) ⊆ Rad(Z/4)
        let a = make_zmod(8).unwrap();
        let b = make_zmod(4).unwrap();
        let f = canonical_zmod_hom(&a, &b).unwrap();
        let j = ideal_closure(&b, &[2]).unwrap();
        let am = make_amalgamation(&a, &b, &f, &j).unwrap();
        let v = locality_transfer_check(&am).unwrap();
        assert!(v.holds && v.amalgam_local && v.base_local && v.j_in_radical);

        // non-local: A = Z/12 is not local
        let a12 = make_zmod(12).unwrap();
        let j6 = ideal_closure(&a12, &[6]).unwrap();
        let am2 = make_duplication(&a12, &j6).unwrap();
        let v2 = locality_transfer_check(&am2).unwrap();
        assert!(v2.holds && !v2.amalgam_local && !v2.base_local);
    }

    #[test]
    fn max_spectrum_on_local_instance() {
        let a = make_zmod(8).unwrap();
        let b = make_zmod(4).unwrap();
        let f = canonical_zmod_hom(&a, &b).unwrap();
        let j = ideal_closure(&b, &[2]).unwrap();
        let am = make_amalgamation(&a, &b, &f, &j).unwrap();
        let v = max_spectrum_pattern(&am).unwrap();
        assert!(v.holds);
        assert_eq!(v.matched.len(), 1);
        assert!(v.matched[0].1.contains("⋈^f J"));
    }

    #[test]
    fn quotient_iso_on_small_instances() {
        assert!(quotient_iso_check(&z4_dup_two()).unwrap().holds);
        let a = make_zmod(6).unwrap();
        let zero = ideal_closure(&a, &[]).unwrap();
        let am = make_duplication(&a, &zero).unwrap();
        assert!(quotient_iso_check(&am).unwrap().holds);
    }
}
