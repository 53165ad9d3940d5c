//! Deciders for the Prüfer-condition ladder on finite rings:
//! arithmetical (distributive ideal lattice), Gaussian (content equation)
//! and Prüfer (invertibility of regular two-generated ideals), plus the
//! content-lifting consistency check for amalgamations.
//!
//! Gaussianness is decided by the local pair criterion: a local ring is
//! Gaussian iff for all a, b the ideal ⟨a,b⟩² equals ⟨a²⟩ or ⟨b²⟩, and when
//! ab = 0 the equality forces the other square to vanish. The bounded
//! polynomial-content search is an oracle cross-check, not the decider: a
//! negative search can be inconclusive at fixed degree.

use crate::amalgam::AmalgamRing;
use crate::classify::{local_decomposition, zero_divisor_mask};
use crate::error::{CoreError, Result};
use crate::ideal::{
    all_ideals, content, ideal_closure, ideal_intersection, ideal_product, ideal_sum,
    is_invertible, pointwise_sum, principal_ideal, Ideal,
};
use crate::ring::{Elem, FiniteRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

// ---------------------------------------------------------------------------
// principal-ideal table

/// Distinct principal ideals of a ring, with per-element class lookup and
/// membership masks. Shared by the pair scans and the content machinery.
pub(crate) struct PrincipalTable {
    class_of: Vec<u32>,
    class_elems: Vec<Vec<Elem>>,
    class_mask: Vec<Vec<bool>>,
    class_rep: Vec<Elem>,
}

impl PrincipalTable {
    pub(crate) fn new(r: &FiniteRing) -> Self {
        let mut keyed: HashMap<Vec<Elem>, u32> = HashMap::new();
        let mut class_of = vec![0u32; r.order()];
        let mut class_elems: Vec<Vec<Elem>> = Vec::new();
        let mut class_rep: Vec<Elem> = Vec::new();
        for x in r.elements() {
            let mut elems: Vec<Elem> = r.elements().map(|s| r.mul(s, x)).collect();
            elems.sort_unstable();
            elems.dedup();
            let next = class_elems.len() as u32;
            let id = *keyed.entry(elems.clone()).or_insert(next);
            if id == next {
                class_elems.push(elems);
                class_rep.push(x);
            }
            class_of[x as usize] = id;
        }
        let class_mask = class_elems
            .iter()
            .map(|elems| {
                let mut m = vec![false; r.order()];
                for &e in elems {
                    m[e as usize] = true;
                }
                m
            })
            .collect();
        PrincipalTable {
            class_of,
            class_elems,
            class_mask,
            class_rep,
        }
    }

    #[inline]
    fn mask_of(&self, x: Elem) -> &[bool] {
        &self.class_mask[self.class_of[x as usize] as usize]
    }

    fn classes(&self) -> usize {
        self.class_elems.len()
    }
}

// ---------------------------------------------------------------------------
// Gaussian pair criterion

#[derive(Debug, Clone)]
pub struct GaussianPairVerdict {
    pub holds: bool,
    /// ⟨a,b⟩² computed as an ideal product.
    pub square_pair: Ideal,
    pub square_a: Ideal,
    pub square_b: Ideal,
    pub ab_zero: bool,
    pub equals_square_a: bool,
    pub equals_square_b: bool,
}

/// Evaluates the local pair criterion at (a, b) with full ideal computations.
pub fn gaussian_pair_verdict(r: &FiniteRing, a: Elem, b: Elem) -> Result<GaussianPairVerdict> {
    r.check_element(a)?;
    r.check_element(b)?;
    let pair = ideal_closure(r, &[a, b])?;
    let square_pair = ideal_product(r, &pair, &pair);
    let square_a = principal_ideal(r, r.mul(a, a));
    let square_b = principal_ideal(r, r.mul(b, b));
    let equals_square_a = square_pair == square_a;
    let equals_square_b = square_pair == square_b;
    let ab_zero = r.mul(a, b) == r.zero();
    let holds = (equals_square_a || equals_square_b)
        && (!(ab_zero && equals_square_a) || r.mul(b, b) == r.zero())
        && (!(ab_zero && equals_square_b) || r.mul(a, a) == r.zero());
    Ok(GaussianPairVerdict {
        holds,
        square_pair,
        square_a,
        square_b,
        ab_zero,
        equals_square_a,
        equals_square_b,
    })
}

/// Fast form of the pair criterion. ⟨a,b⟩² = ⟨a², ab, b²⟩, and that ideal
/// equals ⟨a²⟩ exactly when ab and b² are multiples of a², so the test is
/// two membership lookups per side.
fn pair_passes_fast(r: &FiniteRing, pt: &PrincipalTable, a: Elem, b: Elem) -> bool {
    let aa = r.mul(a, a);
    let ab = r.mul(a, b);
    let bb = r.mul(b, b);
    let ma = pt.mask_of(aa);
    let eq_a = ma[ab as usize] && ma[bb as usize];
    let mb = pt.mask_of(bb);
    let eq_b = mb[ab as usize] && mb[aa as usize];
    let z = r.zero();
    let ab_zero = ab == z;
    let pass = (eq_a || eq_b)
        && (!(ab_zero && eq_a) || bb == z)
        && (!(ab_zero && eq_b) || aa == z);
    debug_assert!(
        r.order() > 32 || pass == gaussian_pair_verdict(r, a, b).unwrap().holds,
        "fast pair criterion diverged from the ideal computation at ({a},{b})"
    );
    pass
}

#[derive(Debug, Clone)]
pub struct GaussianWitness {
    pub factor_label: String,
    pub a: Elem,
    pub b: Elem,
    pub a_name: String,
    pub b_name: String,
}

impl GaussianWitness {
    pub fn describe(&self) -> String {
        format!(
            "pair ({} [#{}], {} [#{}]) in {}",
            self.a_name, self.a, self.b_name, self.b, self.factor_label
        )
    }
}

#[derive(Debug, Clone)]
pub struct GaussianDecision {
    pub gaussian: bool,
    pub witness: Option<GaussianWitness>,
}

/// Decides Gaussianness by decomposing into local factors and scanning all
/// element pairs of each factor. The witness is the first failing
/// (factor, a, b) in canonical carrier order.
pub fn is_gaussian(r: &FiniteRing) -> Result<GaussianDecision> {
    for (factor, _) in local_decomposition(r)? {
        let pt = PrincipalTable::new(&factor);
        for a in factor.elements() {
            for b in factor.elements() {
                if !pair_passes_fast(&factor, &pt, a, b) {
                    return Ok(GaussianDecision {
                        gaussian: false,
                        witness: Some(GaussianWitness {
                            factor_label: factor.label().to_string(),
                            a,
                            b,
                            a_name: factor.name(a).to_string(),
                            b_name: factor.name(b).to_string(),
                        }),
                    });
                }
            }
        }
    }
    Ok(GaussianDecision {
        gaussian: true,
        witness: None,
    })
}

// ---------------------------------------------------------------------------
// content machinery

/// Memoized content-ideal computations over one ring. Content ideals depend
/// only on the multiset of principal-ideal classes of the coefficients, so
/// polynomial scans hit the memo almost always.
pub(crate) struct ContentCtx<'r> {
    r: &'r FiniteRing,
    pt: PrincipalTable,
    memo: HashMap<Vec<u32>, usize>,
    /// Canonical id per distinct element set; different generator keys can
    /// produce the same ideal and must share an id.
    set_index: HashMap<Vec<Elem>, usize>,
    distinct: usize,
}

impl<'r> ContentCtx<'r> {
    pub(crate) fn new(r: &'r FiniteRing) -> Self {
        ContentCtx {
            r,
            pt: PrincipalTable::new(r),
            memo: HashMap::new(),
            set_index: HashMap::new(),
            distinct: 0,
        }
    }

    /// Identifier of the ideal generated by `coeffs`; ids are equal exactly
    /// when the generated ideals are equal as element sets.
    pub(crate) fn content_id(&mut self, coeffs: &[Elem]) -> usize {
        let mut key: Vec<u32> = coeffs
            .iter()
            .map(|&c| self.pt.class_of[c as usize])
            .collect();
        key.sort_unstable();
        key.dedup();
        if let Some(&id) = self.memo.get(&key) {
            return id;
        }
        let mut acc: Vec<Elem> = vec![self.r.zero()];
        for &cls in &key {
            acc = pointwise_sum(self.r, &acc, &self.pt.class_elems[cls as usize]);
        }
        let next = self.distinct;
        let id = *self.set_index.entry(acc).or_insert(next);
        if id == next {
            self.distinct += 1;
        }
        self.memo.insert(key, id);
        id
    }
}

pub(crate) fn poly_mul(r: &FiniteRing, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    if f.is_empty() || g.is_empty() {
        return vec![r.zero()];
    }
    let mut out = vec![r.zero(); f.len() + g.len() - 1];
    for (i, &fi) in f.iter().enumerate() {
        for (j, &gj) in g.iter().enumerate() {
            out[i + j] = r.add(out[i + j], r.mul(fi, gj));
        }
    }
    out
}

fn coeff_products(r: &FiniteRing, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    let mut out = Vec::with_capacity(f.len() * g.len());
    for &fi in f {
        for &gj in g {
            out.push(r.mul(fi, gj));
        }
    }
    out
}

/// Whether c(fg) = c(f)c(g) for one pair, via the memoized content table.
fn content_equation_holds(ctx: &mut ContentCtx<'_>, f: &[Elem], g: &[Elem]) -> bool {
    let fg = poly_mul(ctx.r, f, g);
    let lhs = ctx.content_id(&fg);
    let rhs = ctx.content_id(&coeff_products(ctx.r, f, g));
    lhs == rhs
}

#[derive(Debug, Clone)]
pub struct ContentViolation {
    pub f: Vec<Elem>,
    pub g: Vec<Elem>,
}

/// Searches coefficient lists of degree ≤ `degree_bound` for a pair with
/// c(fg) ≠ c(f)c(g). Exhaustive when |R|^(2(degree_bound+1)) ≤ budget,
/// otherwise `budget` seeded pseudo-random pairs. Returns the first
/// violating pair in search order, or None (which is inconclusive in the
/// negative direction).
pub fn gaussian_content_oracle(
    r: &FiniteRing,
    degree_bound: usize,
    budget: u64,
    seed: u64,
) -> Option<ContentViolation> {
    let len = degree_bound + 1;
    let m = r.order() as u64;
    let mut ctx = ContentCtx::new(r);
    let total = (m as u128).checked_pow(2 * len as u32);
    let exhaustive = matches!(total, Some(t) if t <= budget as u128);
    if exhaustive {
        let mut digits = vec![0u64; 2 * len];
        loop {
            let f: Vec<Elem> = digits[..len].iter().map(|&d| d as Elem).collect();
            let g: Vec<Elem> = digits[len..].iter().map(|&d| d as Elem).collect();
            if !content_equation_holds(&mut ctx, &f, &g) {
                return Some(ContentViolation { f, g });
            }
            // odometer
            let mut pos = 2 * len;
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < m {
                    break;
                }
                digits[pos] = 0;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..budget {
            let f: Vec<Elem> = (0..len).map(|_| rng.gen_range(0..m) as Elem).collect();
            let g: Vec<Elem> = (0..len).map(|_| rng.gen_range(0..m) as Elem).collect();
            if !content_equation_holds(&mut ctx, &f, &g) {
                return Some(ContentViolation { f, g });
            }
        }
        None
    }
}

#[derive(Debug, Clone)]
pub struct ContentPairCheck {
    pub c_fg: Ideal,
    pub c_f: Ideal,
    pub c_g: Ideal,
    pub c_f_times_c_g: Ideal,
    pub equal: bool,
}

/// Re-verifies a content-equation pair by direct ideal computation,
/// independently of the memoized search path.
pub fn verify_content_pair(r: &FiniteRing, f: &[Elem], g: &[Elem]) -> Result<ContentPairCheck> {
    let c_fg = content(r, &poly_mul(r, f, g))?;
    let c_f = content(r, f)?;
    let c_g = content(r, g)?;
    let c_f_times_c_g = ideal_product(r, &c_f, &c_g);
    let equal = c_fg == c_f_times_c_g;
    Ok(ContentPairCheck {
        c_fg,
        c_f,
        c_g,
        c_f_times_c_g,
        equal,
    })
}

// ---------------------------------------------------------------------------
// arithmetical

#[derive(Debug, Clone)]
pub struct DistributivityWitness {
    pub i: Ideal,
    pub j: Ideal,
    pub k: Ideal,
}

#[derive(Debug, Clone)]
pub struct ArithmeticalDecision {
    pub arithmetical: bool,
    pub witness: Option<DistributivityWitness>,
}

pub fn is_arithmetical(r: &FiniteRing) -> Result<ArithmeticalDecision> {
    let lattice = all_ideals(r)?;
    is_arithmetical_with_lattice(r, &lattice)
}

/// Primary path: I ∩ (J + K) = (I ∩ J) + (I ∩ K) over all lattice triples.
/// Cross-check path: every local factor has totally ordered principal
/// ideals. The two must agree.
pub fn is_arithmetical_with_lattice(
    r: &FiniteRing,
    lattice: &[Ideal],
) -> Result<ArithmeticalDecision> {
    let k = lattice.len();
    let id_of: HashMap<&[Elem], usize> = lattice
        .iter()
        .enumerate()
        .map(|(i, ideal)| (ideal.elements(), i))
        .collect();
    let lookup = |elems: &Ideal| -> usize {
        *id_of
            .get(elems.elements())
            .expect("lattice is closed under sums and intersections")
    };
    let mut sums = vec![0usize; k * k];
    let mut meets = vec![0usize; k * k];
    for i in 0..k {
        for j in 0..=i {
            let s = lookup(&ideal_sum(r, &lattice[i], &lattice[j]));
            let m = lookup(&ideal_intersection(r, &lattice[i], &lattice[j]));
            sums[i * k + j] = s;
            sums[j * k + i] = s;
            meets[i * k + j] = m;
            meets[j * k + i] = m;
        }
    }

    let mut witness = None;
    'outer: for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let lhs = meets[i * k + sums[j * k + l]];
                let rhs = sums[meets[i * k + j] * k + meets[i * k + l]];
                if lhs != rhs {
                    witness = Some(DistributivityWitness {
                        i: lattice[i].clone(),
                        j: lattice[j].clone(),
                        k: lattice[l].clone(),
                    });
                    break 'outer;
                }
            }
        }
    }
    let distributive = witness.is_none();

    let mut chain_locally = true;
    for (factor, _) in local_decomposition(r)? {
        let pt = PrincipalTable::new(&factor);
        let n = pt.classes();
        'pairs: for a in 0..n {
            for b in (a + 1)..n {
                let (sa, sb) = (&pt.class_elems[a], &pt.class_elems[b]);
                let mb = &pt.class_mask[b];
                let ma = &pt.class_mask[a];
                let a_in_b = sa.iter().all(|&x| mb[x as usize]);
                let b_in_a = sb.iter().all(|&x| ma[x as usize]);
                if !a_in_b && !b_in_a {
                    chain_locally = false;
                    break 'pairs;
                }
            }
        }
        if !chain_locally {
            break;
        }
    }
    if distributive != chain_locally {
        return Err(CoreError::ArithmeticalPathsDisagree(r.label().to_string()));
    }
    Ok(ArithmeticalDecision {
        arithmetical: distributive,
        witness,
    })
}

// ---------------------------------------------------------------------------
// Prüfer (finite certificate)

#[derive(Debug, Clone)]
pub struct PrueferDecision {
    pub pruefer: bool,
    /// Number of distinct two-generated ideals containing a regular element.
    pub regular_two_generated: usize,
    /// On a finite ring every regular ideal is the whole ring; recorded so
    /// callers can assert it rather than assume it.
    pub all_regular_equal_ring: bool,
    pub witness: Option<Ideal>,
}

/// Certifies the Prüfer property by enumerating all two-generated ideals
/// (via distinct principal classes) and checking invertibility of the
/// regular ones.
pub fn is_pruefer_finite(r: &FiniteRing) -> Result<PrueferDecision> {
    if r.order() > crate::ENUMERATION_CAP {
        return Err(CoreError::CapExceeded {
            ring: r.label().to_string(),
            order: r.order(),
            cap: crate::ENUMERATION_CAP,
        });
    }
    let zd = zero_divisor_mask(r);
    let pt = PrincipalTable::new(r);
    let n = pt.classes();
    let mut seen: HashMap<Vec<Elem>, ()> = HashMap::new();
    let mut regular_two_generated = 0usize;
    let mut all_regular_equal_ring = true;
    let mut witness = None;
    for a in 0..n {
        for b in a..n {
            let elems = pointwise_sum(r, &pt.class_elems[a], &pt.class_elems[b]);
            if seen.contains_key(&elems) {
                continue;
            }
            seen.insert(elems.clone(), ());
            let regular = elems.iter().any(|&x| !zd[x as usize]);
            if !regular {
                continue;
            }
            regular_two_generated += 1;
            let ideal = ideal_closure(r, &[pt.class_rep[a], pt.class_rep[b]])?;
            debug_assert_eq!(ideal.elements(), elems.as_slice());
            if !ideal.is_full(r) {
                all_regular_equal_ring = false;
            }
            if !is_invertible(r, &ideal)? && witness.is_none() {
                witness = Some(ideal);
            }
        }
    }
    Ok(PrueferDecision {
        pruefer: witness.is_none(),
        regular_two_generated,
        all_regular_equal_ring,
        witness,
    })
}

// ---------------------------------------------------------------------------
// content lifting over an amalgamation

#[derive(Debug, Clone)]
pub struct GaussianLiftVerdict {
    /// The lifted polynomial F = Σ (a_i, f(a_i)) x^i passed the content
    /// equation against every test polynomial over the amalgam.
    pub lifted_bounded_gaussian: bool,
    /// The base polynomial passed likewise over A.
    pub base_bounded_gaussian: bool,
    pub implication_holds: bool,
    pub lifted_counterexample: Option<Vec<Elem>>,
    pub base_counterexample: Option<Vec<Elem>>,
    pub amalgam_tests: usize,
    pub base_tests: usize,
}

fn test_polys(order: usize, len: usize, budget: u64, seed: u64) -> Vec<Vec<Elem>> {
    let total = (order as u128).checked_pow(len as u32);
    if matches!(total, Some(t) if t <= budget as u128) {
        let mut out = Vec::new();
        let mut digits = vec![0usize; len];
        loop {
            out.push(digits.iter().map(|&d| d as Elem).collect());
            let mut pos = len;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < order {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..budget)
        .map(|_| (0..len).map(|_| rng.gen_range(0..order) as Elem).collect())
        .collect()
}

/// Tests "lifted F bounded-Gaussian implies base f bounded-Gaussian" for one
/// coefficient list over A.
///
/// Bounded-Gaussian means the content equation holds against all test
/// polynomials up to the degree bound; this under-approximates true
/// Gaussianness of a single polynomial, so the verdict is a consistency
/// check rather than a proof. The amalgam test set always includes the lifts
/// of the base test set, so a base failure is guaranteed to surface on the
/// lifted side as well.
pub fn gaussian_lift_check(
    am: &AmalgamRing,
    coeffs: &[Elem],
    degree_bound: usize,
    budget: u64,
    seed: u64,
) -> Result<GaussianLiftVerdict> {
    let a = &am.base;
    for &c in coeffs {
        a.check_element(c)?;
    }
    let lift = |list: &[Elem]| -> Vec<Elem> {
        list.iter()
            .map(|&x| {
                am.index_of_pair(x, am.hom.apply(x))
                    .expect("(x, f(x)) lies in the amalgam")
            })
            .collect()
    };
    let base_coeffs: Vec<Elem> = if coeffs.is_empty() {
        vec![a.zero()]
    } else {
        coeffs.to_vec()
    };
    let lifted_coeffs = lift(&base_coeffs);

    let len = degree_bound + 1;
    let base_tests = test_polys(a.order(), len, budget, seed);
    let mut amalgam_tests = test_polys(am.ring.order(), len, budget, seed);
    amalgam_tests.extend(base_tests.iter().map(|h| lift(h)));

    let mut base_ctx = ContentCtx::new(a);
    let mut base_counterexample = None;
    for h in &base_tests {
        if !content_equation_holds(&mut base_ctx, &base_coeffs, h) {
            base_counterexample = Some(h.clone());
            break;
        }
    }
    let mut am_ctx = ContentCtx::new(&am.ring);
    let mut lifted_counterexample = None;
    for h in &amalgam_tests {
        if !content_equation_holds(&mut am_ctx, &lifted_coeffs, h) {
            lifted_counterexample = Some(h.clone());
            break;
        }
    }
    let lifted_ok = lifted_counterexample.is_none();
    let base_ok = base_counterexample.is_none();
    Ok(GaussianLiftVerdict {
        lifted_bounded_gaussian: lifted_ok,
        base_bounded_gaussian: base_ok,
        implication_holds: !lifted_ok || base_ok,
        lifted_counterexample,
        base_counterexample,
        amalgam_tests: amalgam_tests.len(),
        base_tests: base_tests.len(),
    })
}

// ---------------------------------------------------------------------------
// hierarchy report

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingProperty {
    Arithmetical,
    Gaussian,
    Pruefer,
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub ring_label: String,
    pub is_local: bool,
    pub is_arithmetical: bool,
    pub is_gaussian: bool,
    pub is_pruefer: bool,
    /// One witness per failed property.
    pub witnesses: Vec<(RingProperty, String)>,
}

/// Runs the three deciders and asserts the implication chain
/// arithmetical ⇒ Gaussian ⇒ Prüfer between their outputs; a violation is
/// a decider bug, reported as an error rather than a report.
pub fn check_hierarchy(r: &FiniteRing) -> Result<PropertyReport> {
    let lattice = all_ideals(r)?;
    check_hierarchy_with_lattice(r, &lattice)
}

/// Same as [`check_hierarchy`] against a precomputed (possibly cached)
/// ideal lattice.
pub fn check_hierarchy_with_lattice(r: &FiniteRing, lattice: &[Ideal]) -> Result<PropertyReport> {
    let arith = is_arithmetical_with_lattice(r, lattice)?;
    let gauss = is_gaussian(r)?;
    let pruefer = is_pruefer_finite(r)?;
    if arith.arithmetical && !gauss.gaussian {
        return Err(CoreError::HierarchyViolation {
            ring: r.label().to_string(),
            details: "arithmetical but not Gaussian".to_string(),
        });
    }
    if gauss.gaussian && !pruefer.pruefer {
        return Err(CoreError::HierarchyViolation {
            ring: r.label().to_string(),
            details: "Gaussian but not Prüfer".to_string(),
        });
    }
    let mut witnesses = Vec::new();
    if !arith.arithmetical {
        let w = arith.witness.as_ref().expect("failed property has witness");
        witnesses.push((
            RingProperty::Arithmetical,
            format!(
                "I ∩ (J+K) ≠ (I∩J)+(I∩K) at I={}, J={}, K={}",
                w.i.display(r),
                w.j.display(r),
                w.k.display(r)
            ),
        ));
    }
    if !gauss.gaussian {
        let w = gauss.witness.as_ref().expect("failed property has witness");
        witnesses.push((RingProperty::Gaussian, w.describe()));
    }
    if !pruefer.pruefer {
        let w = pruefer.witness.as_ref().expect("failed property has witness");
        witnesses.push((
            RingProperty::Pruefer,
            format!("non-invertible regular ideal {}", w.display(r)),
        ));
    }
    let local = crate::classify::classify_with_lattice(r, lattice).is_local;
    Ok(PropertyReport {
        ring_label: r.label().to_string(),
        is_local: local,
        is_arithmetical: arith.arithmetical,
        is_gaussian: gauss.gaussian,
        is_pruefer: pruefer.pruefer,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::make_duplication;
    use crate::ring::{make_product, make_zmod};

    fn dup_z8_two() -> crate::amalgam::AmalgamRing {
        let b = make_zmod(8).unwrap();
        let i = ideal_closure(&b, &[2]).unwrap();
        make_duplication(&b, &i).unwrap()
    }

    #[test]
    fn pair_criterion_on_zmod8() {
        let r = make_zmod(8).unwrap();
        let v = gaussian_pair_verdict(&r, 2, 4).unwrap();
        // ⟨2,4⟩² = (4) = ⟨2²⟩, and 2·4 = 0 with 4² = 0
        assert!(v.holds && v.equals_square_a && v.ab_zero);
        assert_eq!(v.square_pair, ideal_closure(&r, &[4]).unwrap());
        assert!(gaussian_pair_verdict(&r, 0, 0).unwrap().holds);
    }

    #[test]
    fn pair_criterion_fails_on_duplication() {
        let am = dup_z8_two();
        let r = &am.ring;
        let a = am.index_of_pair(2, 0).unwrap();
        let b = am.index_of_pair(0, 2).unwrap();
        let v = gaussian_pair_verdict(r, a, b).unwrap();
        assert!(!v.holds);
        assert!(!v.equals_square_a && !v.equals_square_b);
        // ⟨a,b⟩² = ⟨(4,0),(0,4)⟩
        let sq = ideal_closure(
            r,
            &[am.index_of_pair(4, 0).unwrap(), am.index_of_pair(0, 4).unwrap()],
        )
        .unwrap();
        assert_eq!(v.square_pair, sq);
    }

    #[test]
    fn gaussian_decider_examples() {
        assert!(is_gaussian(&make_zmod(8).unwrap()).unwrap().gaussian);
        assert!(is_gaussian(&make_zmod(7).unwrap()).unwrap().gaussian);
        let am = dup_z8_two();
        let d = is_gaussian(&am.ring).unwrap();
        assert!(!d.gaussian);
        let w = d.witness.unwrap();
        // reported witness is the first failing pair in carrier order; the
        // canonical pair ((2,0),(0,2)) must fail as well
        assert!(!pair_passes_fast(
            &am.ring,
            &PrincipalTable::new(&am.ring),
            am.index_of_pair(2, 0).unwrap(),
            am.index_of_pair(0, 2).unwrap()
        ));
        assert!(!gaussian_pair_verdict(&am.ring, w.a, w.b).unwrap().holds);
    }

    #[test]
    fn oracle_finds_degree_one_violation_on_duplication() {
        let am = dup_z8_two();
        // 32^4 pairs of linear polynomials is within an exhaustive budget
        let hit = gaussian_content_oracle(&am.ring, 1, 1_100_000, 0);
        let hit = hit.expect("a degree-1 content violation exists");
        let check = verify_content_pair(&am.ring, &hit.f, &hit.g).unwrap();
        assert!(!check.equal);
    }

    #[test]
    fn oracle_finds_nothing_on_zmod8() {
        assert!(gaussian_content_oracle(&make_zmod(8).unwrap(), 2, 262_144, 0).is_none());
    }

    #[test]
    fn zero_polynomial_is_never_a_witness() {
        let r = make_zmod(8).unwrap();
        let mut ctx = ContentCtx::new(&r);
        for g in [vec![0, 0, 0], vec![1, 2, 3], vec![7, 0, 4]] {
            assert!(content_equation_holds(&mut ctx, &[0, 0, 0], &g));
        }
    }

    #[test]
    fn content_submultiplicativity() {
        // c(fg) ⊆ c(f)c(g) always
        let r = make_zmod(12).unwrap();
        let polys = [vec![2, 3], vec![4, 6, 9], vec![0, 8], vec![5, 1, 7]];
        for f in &polys {
            for g in &polys {
                let check = verify_content_pair(&r, f, g).unwrap();
                assert!(check
                    .c_fg
                    .elements()
                    .iter()
                    .all(|&x| check.c_f_times_c_g.contains(x)));
            }
        }
    }

    #[test]
    fn arithmetical_examples() {
        assert!(is_arithmetical(&make_zmod(8).unwrap()).unwrap().arithmetical);
        assert!(is_arithmetical(&make_zmod(5).unwrap()).unwrap().arithmetical);
        assert!(is_arithmetical(&make_zmod(12).unwrap()).unwrap().arithmetical);
        let am = dup_z8_two();
        let d = is_arithmetical(&am.ring).unwrap();
        assert!(!d.arithmetical);
        assert!(d.witness.is_some());
    }

    #[test]
    fn pruefer_certificate_on_small_rings() {
        for r in [
            make_zmod(8).unwrap(),
            make_zmod(5).unwrap(),
            dup_z8_two().ring,
        ] {
            let d = is_pruefer_finite(&r).unwrap();
            assert!(d.pruefer, "{} must certify as Prüfer", r.label());
            assert!(d.all_regular_equal_ring);
            assert!(d.regular_two_generated >= 1);
        }
    }

    #[test]
    fn hierarchy_reports() {
        let r8 = check_hierarchy(&make_zmod(8).unwrap()).unwrap();
        assert!(r8.is_arithmetical && r8.is_gaussian && r8.is_pruefer && r8.is_local);
        assert!(r8.witnesses.is_empty());

        let dup = check_hierarchy(&dup_z8_two().ring).unwrap();
        assert!(!dup.is_arithmetical && !dup.is_gaussian && dup.is_pruefer);
        assert_eq!(dup.witnesses.len(), 2);

        let z2 = make_zmod(2).unwrap();
        let sq = check_hierarchy(&make_product(&z2, &z2).unwrap()).unwrap();
        assert!(sq.is_arithmetical && sq.is_gaussian && sq.is_pruefer && !sq.is_local);
    }

    #[test]
    fn lift_check_on_z4_duplication() {
        let a = make_zmod(4).unwrap();
        let i = ideal_closure(&a, &[2]).unwrap();
        let am = make_duplication(&a, &i).unwrap();
        // unit content: both sides bounded-Gaussian
        let v = gaussian_lift_check(&am, &[1, 0], 2, 4096, 0).unwrap();
        assert!(v.lifted_bounded_gaussian && v.base_bounded_gaussian && v.implication_holds);
        let v2 = gaussian_lift_check(&am, &[2, 2], 2, 4096, 0).unwrap();
        assert!(v2.implication_holds);
        let v3 = gaussian_lift_check(&am, &[0], 2, 4096, 0).unwrap();
        assert!(v3.lifted_bounded_gaussian && v3.base_bounded_gaussian);
    }
}
