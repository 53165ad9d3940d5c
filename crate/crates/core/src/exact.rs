//! Exact instances over Z and Z_(p): witness-based Prüfer analysis of the
//! duplications Z_(p) ⋈ p^k Z_(p), the sampled zero-divisor formula on
//! Z → Z/nZ, and the structural claims of the idealization instance.

use crate::error::{CoreError, Result};
use crate::plocal::{is_prime, PLocalRational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// Exponent of the duplication ideal I = p^k Z_(p); `ZeroIdeal` is the
/// k = ∞ sentinel for I = (0), the one exact case where the scaling
/// condition holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealExp {
    Pow(u64),
    ZeroIdeal,
}

impl std::fmt::Display for IdealExp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IdealExp::Pow(k) => write!(f, "p^{k}"),
            IdealExp::ZeroIdeal => write!(f, "0"),
        }
    }
}

impl IdealExp {
    fn contains(&self, x: &PLocalRational) -> bool {
        match *self {
            IdealExp::Pow(k) => x.in_power_ideal(k),
            IdealExp::ZeroIdeal => x.is_zero(),
        }
    }
}

/// An element (a, second) of Z_(p) ⋈ p^k Z_(p): second − a lies in the
/// ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicationElement {
    prime: u64,
    exp: IdealExp,
    a: PLocalRational,
    second: PLocalRational,
}

impl DuplicationElement {
    pub fn new(
        prime: u64,
        exp: IdealExp,
        a: PLocalRational,
        second: PLocalRational,
    ) -> Result<DuplicationElement> {
        if !is_prime(prime) {
            return Err(CoreError::NotPrime(prime));
        }
        if a.prime() != prime || second.prime() != prime {
            return Err(CoreError::PrimeMismatch(prime, a.prime().max(second.prime())));
        }
        let diff = second.sub(&a)?;
        if !exp.contains(&diff) {
            return Err(CoreError::InvalidSample(format!(
                "({a}, {second}) is not in the duplication along {exp}"
            )));
        }
        Ok(DuplicationElement {
            prime,
            exp,
            a,
            second,
        })
    }

    pub fn from_integers(prime: u64, exp: IdealExp, a: i64, second: i64) -> Result<Self> {
        Self::new(
            prime,
            exp,
            PLocalRational::from_integer(prime, a)?,
            PLocalRational::from_integer(prime, second)?,
        )
    }

    pub fn first(&self) -> &PLocalRational {
        &self.a
    }

    pub fn second(&self) -> &PLocalRational {
        &self.second
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.second.is_zero()
    }

    /// In a subring of Z_(p) × Z_(p) the zero divisors are exactly the
    /// elements with a vanishing component.
    pub fn is_regular(&self) -> bool {
        !self.a.is_zero() && !self.second.is_zero()
    }

    /// Units have both components of valuation zero; the inverse pair
    /// (1/a, 1/second) then lies back in the duplication.
    pub fn is_unit(&self) -> bool {
        self.a.is_unit() && self.second.is_unit()
    }

    fn check_compatible(&self, other: &DuplicationElement) -> Result<()> {
        if self.prime != other.prime || self.exp != other.exp {
            Err(CoreError::DuplicationMismatch)
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, other: &DuplicationElement) -> Result<DuplicationElement> {
        self.check_compatible(other)?;
        DuplicationElement::new(
            self.prime,
            self.exp,
            self.a.mul(&other.a)?,
            self.second.mul(&other.second)?,
        )
    }
}

impl std::fmt::Display for DuplicationElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.a, self.second)
    }
}

// ---------------------------------------------------------------------------
// scaling condition

#[derive(Debug, Clone)]
pub struct ScalingConditionVerdict {
    pub holds: bool,
    pub witness: Option<PLocalRational>,
}

/// Evaluates I = aI for I = p^k Z_(p) over a sample of nonzero non-units a,
/// symbolically: aI = p^(k + v(a)) Z_(p), so equality would need v(a) = 0.
/// True only for the zero ideal or an empty (vacuous) sample.
pub fn ideal_scaling_condition(
    prime: u64,
    exp: IdealExp,
    sample: &[PLocalRational],
) -> Result<ScalingConditionVerdict> {
    if !is_prime(prime) {
        return Err(CoreError::NotPrime(prime));
    }
    for a in sample {
        if a.prime() != prime {
            return Err(CoreError::PrimeMismatch(prime, a.prime()));
        }
        if a.is_zero() || a.is_unit() {
            return Err(CoreError::InvalidSample(a.to_string()));
        }
    }
    if exp == IdealExp::ZeroIdeal {
        // 0 = a·0 regardless of the sample
        return Ok(ScalingConditionVerdict {
            holds: true,
            witness: None,
        });
    }
    for a in sample {
        let v = a.valuation().expect("sample elements are nonzero");
        if v != 0 {
            return Ok(ScalingConditionVerdict {
                holds: false,
                witness: Some(a.clone()),
            });
        }
    }
    Ok(ScalingConditionVerdict {
        holds: true,
        witness: None,
    })
}

// ---------------------------------------------------------------------------
// divisibility in the duplication

/// Decides whether y = x·q for some q in the duplication, componentwise:
/// solve each coordinate in the fraction field, check both quotients lie in
/// Z_(p) and their difference lies in the ideal. Zero components divide only
/// zero, with the free coordinate of q chosen diagonally.
pub fn divides_in_duplication(
    x: &DuplicationElement,
    y: &DuplicationElement,
) -> Result<Option<DuplicationElement>> {
    x.check_compatible(y)?;
    let (p, exp) = (x.prime, x.exp);
    let quotient = |q1: PLocalRational, q2: PLocalRational| -> Option<DuplicationElement> {
        DuplicationElement::new(p, exp, q1, q2).ok()
    };
    let result = match (x.a.is_zero(), x.second.is_zero()) {
        (true, true) => {
            if y.is_zero() {
                quotient(PLocalRational::zero(p)?, PLocalRational::zero(p)?)
            } else {
                None
            }
        }
        (true, false) => {
            // first coordinate forces y.a = 0; the first slot of q is free,
            // so take it equal to the forced second slot
            if !y.a.is_zero() {
                None
            } else {
                match y.second.try_div(&x.second)? {
                    Some(q2) => quotient(q2.clone(), q2),
                    None => None,
                }
            }
        }
        (false, true) => {
            if !y.second.is_zero() {
                None
            } else {
                match y.a.try_div(&x.a)? {
                    Some(q1) => quotient(q1.clone(), q1),
                    None => None,
                }
            }
        }
        (false, false) => {
            let q1 = y.a.try_div(&x.a)?;
            let q2 = y.second.try_div(&x.second)?;
            match (q1, q2) {
                (Some(q1), Some(q2)) => {
                    let diff = q2.sub(&q1)?;
                    if exp.contains(&diff) {
                        quotient(q1, q2)
                    } else {
                        None
                    }
                }
                _ => None,
            }
        }
    };
    if let Some(q) = &result {
        debug_assert_eq!(&x.mul(q)?, y);
    }
    Ok(result)
}

// ---------------------------------------------------------------------------
// witness search

/// Reduced fractions n/d with |n|, d ≤ bound and p ∤ d, in canonical order:
/// increasing max(|n|, d), then |n|, then sign, then d.
fn fraction_pool(prime: u64, bound: u64) -> Vec<PLocalRational> {
    let mut keyed: Vec<((u64, u64, u8, u64), PLocalRational)> = Vec::new();
    for d in 1..=bound {
        if d % prime == 0 {
            continue;
        }
        for n in -(bound as i64)..=(bound as i64) {
            let na = n.unsigned_abs();
            if na.gcd(&d) != 1 && !(n == 0 && d == 1) {
                continue;
            }
            if n == 0 && d != 1 {
                continue;
            }
            let level = na.max(d);
            let frac = PLocalRational::new(prime, n, d as i64).expect("denominator is p-free");
            keyed.push(((level, na, u8::from(n < 0), d), frac));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, f)| f).collect()
}

fn fraction_level(x: &PLocalRational) -> u64 {
    let n = x.numerator().abs().to_u64().unwrap_or(u64::MAX);
    let d = x.denominator().to_u64().unwrap_or(u64::MAX);
    n.max(d)
}

fn element_level(e: &DuplicationElement) -> u64 {
    fraction_level(e.first()).max(fraction_level(e.second()))
}

/// All duplication elements whose two fractions come from the bounded pool,
/// in canonical order: increasing level, then both fractions in pool order.
fn element_pool(prime: u64, exp: IdealExp, bound: u64) -> Vec<DuplicationElement> {
    let fracs = fraction_pool(prime, bound);
    let mut out: Vec<(u64, usize, usize, DuplicationElement)> = Vec::new();
    for (i, a) in fracs.iter().enumerate() {
        for (j, s) in fracs.iter().enumerate() {
            let diff = s.sub(a).expect("same prime");
            if !exp.contains(&diff) {
                continue;
            }
            let e = DuplicationElement::new(prime, exp, a.clone(), s.clone())
                .expect("membership was just checked");
            out.push((element_level(&e), i, j, e));
        }
    }
    out.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    out.into_iter().map(|(_, _, _, e)| e).collect()
}

/// Searches for a pair (x, y) certifying that the duplication (a local
/// ring) is not Prüfer: the ideal (x, y) is regular because x is, and
/// neither generator divides the other, so the two principal ideals are
/// incomparable. Returns the first witness in canonical search order.
pub fn pruefer_witness_search(
    prime: u64,
    exp: IdealExp,
    search_bound: u64,
) -> Result<Option<(DuplicationElement, DuplicationElement)>> {
    if !is_prime(prime) {
        return Err(CoreError::NotPrime(prime));
    }
    let elems = element_pool(prime, exp, search_bound);
    let levels: Vec<u64> = elems.iter().map(element_level).collect();
    for pair_level in 1..=search_bound {
        for (xi, x) in elems.iter().enumerate() {
            if levels[xi] > pair_level {
                continue;
            }
            // units divide everything; non-regular x cannot anchor a
            // regular pair from the x side
            if !x.is_regular() || x.is_unit() {
                continue;
            }
            for (yi, y) in elems.iter().enumerate() {
                if levels[yi] > pair_level || levels[xi].max(levels[yi]) != pair_level {
                    continue;
                }
                if divides_in_duplication(x, y)?.is_none()
                    && divides_in_duplication(y, x)?.is_none()
                {
                    return Ok(Some((x.clone(), y.clone())));
                }
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// combined duplication verdict

pub const DEFAULT_WITNESS_SEARCH_BOUND: u64 = 20;

#[derive(Debug, Clone)]
pub struct DuplicationPrueferVerdict {
    /// Z_(p) is a valuation domain, hence Prüfer; recorded, not computed.
    pub base_pruefer: bool,
    pub condition: ScalingConditionVerdict,
    pub witness: Option<(DuplicationElement, DuplicationElement)>,
    /// The observed biconditional: the scaling condition fails exactly when
    /// a non-comparability witness exists.
    pub consistent: bool,
}

/// Evaluates both sides of the Prüfer transfer on Z_(p) ⋈ p^k Z_(p): the
/// right-hand side via the scaling condition on the canonical sample
/// {p, p², p³}, the left-hand side via the witness search.
pub fn duplication_pruefer_check(
    prime: u64,
    exp: IdealExp,
    search_bound: u64,
) -> Result<DuplicationPrueferVerdict> {
    let sample = [
        PLocalRational::from_integer(prime, prime as i64)?,
        PLocalRational::from_integer(prime, (prime * prime) as i64)?,
        PLocalRational::from_integer(prime, (prime * prime * prime) as i64)?,
    ];
    let condition = ideal_scaling_condition(prime, exp, &sample)?;
    let witness = pruefer_witness_search(prime, exp, search_bound)?;
    let consistent = condition.holds == witness.is_none();
    Ok(DuplicationPrueferVerdict {
        base_pruefer: true,
        condition,
        witness,
        consistent,
    })
}

// ---------------------------------------------------------------------------
// sampled zero-divisor formula on Z -> Z/nZ

#[derive(Debug, Clone)]
pub struct ExactFormulaVerdict {
    pub checked: usize,
    /// (a, j) samples where exact zero-divisor status and formula membership
    /// disagree. Expected empty.
    pub disagreements: Vec<(i64, u64)>,
    /// J is a torsion Z-module via the regular annihilator n.
    pub torsion_hypothesis: bool,
}

impl ExactFormulaVerdict {
    pub fn pass(&self) -> bool {
        self.disagreements.is_empty() && self.torsion_hypothesis
    }
}

/// Pointwise comparison of zero-divisor status and formula membership on the
/// amalgamation of Z with Z/nZ along J = (j_gen), for all |a| ≤ bound and
/// j ∈ J. The base ring is infinite, so every element is decided exactly:
/// (a, c) with a ≠ 0 is a zero divisor iff some nonzero k ∈ J kills c, and
/// every (0, c) is killed by (n, 0).
pub fn integer_amalgam_zero_divisor_check(
    n: u64,
    j_gen: u64,
    bound: i64,
) -> Result<ExactFormulaVerdict> {
    if n < 2 {
        return Err(CoreError::InvalidOrder(n));
    }
    // spot-check the canonical projection on the sampled range; the exact
    // source makes an exhaustive pass impossible
    for a in -bound..=bound {
        for b in [-bound, 0, 1, bound] {
            let red = |t: i64| t.rem_euclid(n as i64) as u64;
            assert_eq!(red(a + b), (red(a) + red(b)) % n);
            assert_eq!(red(a * b), (red(a) * red(b)) % n);
        }
    }

    let g = j_gen.gcd(&n);
    let ideal: Vec<u64> = (0..n).step_by(g as usize).collect();
    let torsion_hypothesis = ideal.iter().all(|&j| (n * j) % n == 0);

    let mut checked = 0usize;
    let mut disagreements = Vec::new();
    for a in -bound..=bound {
        let fa = a.rem_euclid(n as i64) as u64;
        for &j in &ideal {
            let c = (fa + j) % n;
            checked += 1;
            let zero_divisor = if a == 0 {
                true
            } else {
                ideal.iter().any(|&k| k != 0 && (c * k) % n == 0)
            };
            let s2 = c == 0 && ideal.contains(&fa);
            let s3 = a == 0;
            let s1 = a == 0; // Z(Z) = {0}
            let s4 = a != 0 && ideal.iter().any(|&k| k != 0 && (c * k) % n == 0);
            let in_formula = s1 || s2 || s3 || s4;
            if zero_divisor != in_formula {
                disagreements.push((a, j));
            }
        }
    }
    Ok(ExactFormulaVerdict {
        checked,
        disagreements,
        torsion_hypothesis,
    })
}

// ---------------------------------------------------------------------------
// idealization instance (trivial extension of Z_(p) by its residue field)

#[derive(Debug, Clone)]
pub struct IdealizationVerdict {
    /// f(A) meets 0 × E only at zero (checked on the documented sample and
    /// forced by the representation: f(a) = (a, 0) lies there only if a = 0).
    pub image_meets_ideal_only_at_zero: bool,
    /// f(p)·(0,1) = (0,0) although p is regular in the domain A.
    pub regular_element_maps_to_zero_divisor: bool,
    /// f(1) = (1,0) is its own inverse.
    pub unit_image_confirmed: bool,
}

impl IdealizationVerdict {
    pub fn pass(&self) -> bool {
        self.image_meets_ideal_only_at_zero
            && self.regular_element_maps_to_zero_divisor
            && self.unit_image_confirmed
    }
}

/// Residue of a p-local rational mod p: numerator times the inverse of the
/// denominator.
fn residue(x: &PLocalRational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let num = x.numerator().mod_floor(&pb).to_u64().unwrap();
    let den = x.denominator().mod_floor(&pb).to_u64().unwrap();
    let mut inv = 1u64;
    let mut base = den % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    num * inv % p
}

/// Verifies the structural claims on B = Z_(p) ⋉ Z_(p)/m with
/// f(a) = (a, 0) and J = 0 × E: the image misses J, and f sends the regular
/// element p to a zero divisor of B.
pub fn idealization_instance_check(p: u64) -> Result<IdealizationVerdict> {
    if !is_prime(p) {
        return Err(CoreError::NotPrime(p));
    }
    let pi = p as i64;
    let sample: Vec<PLocalRational> = vec![
        PLocalRational::from_integer(p, 1)?,
        PLocalRational::from_integer(p, -1)?,
        PLocalRational::from_integer(p, pi)?,
        PLocalRational::from_integer(p, -pi)?,
        PLocalRational::from_integer(p, pi * pi)?,
        PLocalRational::from_integer(p, pi + 1)?,
        PLocalRational::new(p, 1, pi + 1)?,
    ];
    // f(a) = (a, 0) belongs to 0 × E exactly when a = 0
    let f_in_j = |a: &PLocalRational| a.is_zero();
    let image_meets_ideal_only_at_zero =
        sample.iter().all(|a| !f_in_j(a)) && f_in_j(&PLocalRational::zero(p)?);

    // idealization product: (a, e)(a', e') = (aa', a·e' + a'·e) with the
    // action through the residue field
    let p_elem = PLocalRational::from_integer(p, pi)?;
    let prod_first = p_elem.mul(&PLocalRational::zero(p)?)?;
    let prod_second = residue(&p_elem, p) * 1 % p;
    let kills = prod_first.is_zero() && prod_second == 0;
    let p_regular_in_a = !p_elem.is_zero();
    let regular_element_maps_to_zero_divisor = kills && p_regular_in_a;

    // f(1) = (1, 0) squares to itself and is the identity of B
    let one = PLocalRational::one(p)?;
    let sq_first = one.mul(&one)?;
    let sq_second = (residue(&one, p) * 0 + residue(&one, p) * 0) % p;
    let unit_image_confirmed = sq_first == one && sq_second == 0;

    Ok(IdealizationVerdict {
        image_meets_ideal_only_at_zero,
        regular_element_maps_to_zero_divisor,
        unit_image_confirmed,
    })
}
