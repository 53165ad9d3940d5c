//! Finite commutative rings with explicit operation tables.
//!
//! Elements are opaque indices `0..order` into a canonical carrier
//! enumeration. Composite constructors enumerate lexicographically over
//! component indices, so the same construction inputs always yield the
//! same indexing; witnesses and cached lattices stay reproducible.

use crate::error::{CoreError, Result};
use crate::hom::{make_hom, RingHom};
use crate::ideal::{minimal_generators, Ideal};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Index of a ring element in its carrier enumeration.
pub type Elem = u32;

/// Largest order for which operation tables are materialized.
pub const MAX_TABLE_ORDER: usize = 1024;

/// Orders up to this bound get exhaustive axiom verification.
pub const EXHAUSTIVE_AXIOM_CAP: usize = 256;

/// Triples sampled when a ring is above [`EXHAUSTIVE_AXIOM_CAP`].
pub const AXIOM_SAMPLE_COUNT: usize = 10_000;

/// Seed for sampled axiom verification, fixed so reports are reproducible.
pub const AXIOM_SAMPLE_SEED: u64 = 0xa11ce;

/// A finite commutative ring with identity, given by total operation tables
/// over the carrier `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    label: String,
    order: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    zero: Elem,
    one: Elem,
    names: Vec<String>,
    tag: u64,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.label, self.order)
    }
}

impl std::fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label)
    }
}

/// FNV-1a over the operation tables; identifies the ring *structure*
/// (labels and element names are excluded on purpose).
fn content_tag(order: usize, zero: Elem, one: Elem, add: &[Elem], mul: &[Elem]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |v: u64| {
        for byte in v.to_le_bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(order as u64);
    eat(u64::from(zero));
    eat(u64::from(one));
    for &x in add {
        eat(u64::from(x));
    }
    for &x in mul {
        eat(u64::from(x));
    }
    h
}

impl FiniteRing {
    /// Builds a ring from raw tables. Validates shape (sizes, index ranges,
    /// `zero != one`) but not the ring axioms; see [`verify_ring_axioms`].
    pub fn from_tables(
        label: impl Into<String>,
        names: Vec<String>,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        neg: Vec<Elem>,
        zero: Elem,
        one: Elem,
    ) -> Result<FiniteRing> {
        let label = label.into();
        let order = names.len();
        if order < 2 {
            return Err(CoreError::InvalidOrder(order as u64));
        }
        if order > MAX_TABLE_ORDER {
            return Err(CoreError::CapExceeded {
                ring: label,
                order,
                cap: MAX_TABLE_ORDER,
            });
        }
        let malformed = |reason: &str| CoreError::MalformedRing {
            label: label.clone(),
            reason: reason.to_string(),
        };
        if add.len() != order * order || mul.len() != order * order {
            return Err(malformed("operation table has the wrong size"));
        }
        if neg.len() != order {
            return Err(malformed("negation table has the wrong size"));
        }
        let in_range = |x: &Elem| (*x as usize) < order;
        if !add.iter().all(in_range) || !mul.iter().all(in_range) || !neg.iter().all(in_range) {
            return Err(malformed("table entry out of range"));
        }
        if !in_range(&zero) || !in_range(&one) {
            return Err(malformed("zero or one out of range"));
        }
        if zero == one {
            return Err(malformed("zero and one coincide"));
        }
        let tag = content_tag(order, zero, one, &add, &mul);
        Ok(FiniteRing {
            label,
            order,
            add,
            mul,
            neg,
            zero,
            one,
            names,
            tag,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Structural fingerprint of the operation tables.
    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x as usize]
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    /// Human-readable name of an element, following the construction trace.
    pub fn name(&self, x: Elem) -> &str {
        &self.names[x as usize]
    }

    /// "`name` [#index]" form used in witness output.
    pub fn describe(&self, x: Elem) -> String {
        format!("{} [#{}]", self.name(x), x)
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.elements().any(|y| self.mul(x, y) == self.one)
    }

    pub fn check_element(&self, x: Elem) -> Result<()> {
        if (x as usize) < self.order {
            Ok(())
        } else {
            Err(CoreError::ElementOutOfRange {
                ring: self.label.clone(),
                index: x,
                order: self.order,
            })
        }
    }

    /// Raw tables in canonical byte order, for content-addressed caches.
    pub fn table_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 * (2 + 2 * self.order * self.order + self.order));
        out.extend_from_slice(&(self.order as u64).to_le_bytes());
        out.extend_from_slice(&self.zero.to_le_bytes());
        out.extend_from_slice(&self.one.to_le_bytes());
        for table in [&self.add, &self.mul, &self.neg] {
            for &x in table.iter() {
                out.extend_from_slice(&x.to_le_bytes());
            }
        }
        out
    }
}

/// Parenthesizes composite labels so nested construction traces stay readable.
pub(crate) fn wrap_label(label: &str) -> String {
    if label.contains(' ') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

/// Z/nZ with carrier `{0, .., n-1}` and modular arithmetic.
pub fn make_zmod(n: u64) -> Result<FiniteRing> {
    if n < 2 {
        return Err(CoreError::InvalidOrder(n));
    }
    if n as usize > MAX_TABLE_ORDER {
        return Err(CoreError::CapExceeded {
            ring: format!("Z/{n}"),
            order: n as usize,
            cap: MAX_TABLE_ORDER,
        });
    }
    let n = n as usize;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            add.push(((x + y) % n) as Elem);
            mul.push(((x * y) % n) as Elem);
        }
    }
    let neg = (0..n).map(|x| ((n - x) % n) as Elem).collect();
    let names = (0..n).map(|x| x.to_string()).collect();
    FiniteRing::from_tables(format!("Z/{n}"), names, add, mul, neg, 0, 1)
}

/// Componentwise product ring on the carrier `R x S`, enumerated
/// lexicographically: index = r * |S| + s.
pub fn make_product(r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing> {
    let (m, k) = (r.order(), s.order());
    let order = m * k;
    if order > MAX_TABLE_ORDER {
        return Err(CoreError::CapExceeded {
            ring: format!("{} × {}", r.label(), s.label()),
            order,
            cap: MAX_TABLE_ORDER,
        });
    }
    let ix = |a: Elem, b: Elem| a * k as Elem + b;
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order as Elem {
        let (xa, xb) = (x / k as Elem, x % k as Elem);
        for y in 0..order as Elem {
            let (ya, yb) = (y / k as Elem, y % k as Elem);
            add.push(ix(r.add(xa, ya), s.add(xb, yb)));
            mul.push(ix(r.mul(xa, ya), s.mul(xb, yb)));
        }
    }
    let neg = (0..order as Elem)
        .map(|x| ix(r.neg(x / k as Elem), s.neg(x % k as Elem)))
        .collect();
    let names = (0..order as Elem)
        .map(|x| format!("({},{})", r.name(x / k as Elem), s.name(x % k as Elem)))
        .collect();
    let label = format!("{} × {}", wrap_label(r.label()), wrap_label(s.label()));
    FiniteRing::from_tables(label, names, add, mul, neg, ix(r.zero(), s.zero()), ix(r.one(), s.one()))
}

/// Coset ring R/I together with the canonical projection.
///
/// Cosets are indexed by their minimal member, in increasing order of that
/// representative.
pub fn make_quotient(r: &FiniteRing, i: &Ideal) -> Result<(FiniteRing, RingHom)> {
    i.check_ring(r)?;
    if i.elements().len() == r.order() {
        return Err(CoreError::ImproperIdeal(r.label().to_string()));
    }
    // coset_of[x] = minimal element of x + I
    let mut coset_of = vec![Elem::MAX; r.order()];
    let mut reps = Vec::new();
    for x in r.elements() {
        if coset_of[x as usize] != Elem::MAX {
            continue;
        }
        let rep = i
            .elements()
            .iter()
            .map(|&e| r.add(x, e))
            .min()
            .expect("ideal contains zero");
        reps.push(rep);
        for &e in i.elements() {
            coset_of[r.add(x, e) as usize] = rep;
        }
    }
    reps.sort_unstable();
    debug_assert_eq!(reps.len() * i.elements().len(), r.order());
    let index_of: HashMap<Elem, Elem> = reps
        .iter()
        .enumerate()
        .map(|(k, &rep)| (rep, k as Elem))
        .collect();
    let class = |x: Elem| index_of[&coset_of[x as usize]];

    let order = reps.len();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for &x in &reps {
        for &y in &reps {
            add.push(class(r.add(x, y)));
            mul.push(class(r.mul(x, y)));
        }
    }
    let neg = reps.iter().map(|&x| class(r.neg(x))).collect();
    let names = reps.iter().map(|&x| format!("[{}]", r.name(x))).collect();
    let gen_names: Vec<&str> = minimal_generators(r, i.elements())
        .iter()
        .map(|&g| r.name(g))
        .collect();
    let label = format!("{}/({})", wrap_label(r.label()), gen_names.join(","));
    let quot = FiniteRing::from_tables(label, names, add, mul, neg, class(r.zero()), class(r.one()))?;
    let table: Vec<Elem> = r.elements().map(class).collect();
    let proj = make_hom(r, &quot, table)?;
    Ok((quot, proj))
}

// ---------------------------------------------------------------------------
// axiom verification

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    MulCommutative,
    MulIdentity,
    DistributiveLeft,
    DistributiveRight,
    ZeroOneDistinct,
}

impl Axiom {
    pub fn all() -> [Axiom; 10] {
        use Axiom::*;
        [
            AddAssociative,
            AddCommutative,
            AddIdentity,
            AddInverse,
            MulAssociative,
            MulCommutative,
            MulIdentity,
            DistributiveLeft,
            DistributiveRight,
            ZeroOneDistinct,
        ]
    }

    fn holds_at(self, r: &FiniteRing, x: Elem, y: Elem, z: Elem) -> bool {
        match self {
            Axiom::AddAssociative => r.add(r.add(x, y), z) == r.add(x, r.add(y, z)),
            Axiom::AddCommutative => r.add(x, y) == r.add(y, x),
            Axiom::AddIdentity => r.add(x, r.zero()) == x,
            Axiom::AddInverse => r.add(x, r.neg(x)) == r.zero(),
            Axiom::MulAssociative => r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)),
            Axiom::MulCommutative => r.mul(x, y) == r.mul(y, x),
            Axiom::MulIdentity => r.mul(x, r.one()) == x,
            Axiom::DistributiveLeft => r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)),
            Axiom::DistributiveRight => r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z)),
            Axiom::ZeroOneDistinct => r.zero() != r.one(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub ring: String,
    /// Per-axiom outcome; a failing axiom carries the witness triple.
    pub entries: Vec<(Axiom, Option<[Elem; 3]>)>,
    /// Whether the scan covered every triple or a fixed-seed sample.
    pub exhaustive: bool,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, w)| w.is_none())
    }

    pub fn failure(&self, axiom: Axiom) -> Option<[Elem; 3]> {
        self.entries
            .iter()
            .find(|(a, w)| *a == axiom && w.is_some())
            .and_then(|(_, w)| *w)
    }
}

/// Checks every ring axiom, exhaustively up to [`EXHAUSTIVE_AXIOM_CAP`] and
/// on [`AXIOM_SAMPLE_COUNT`] triples seeded with [`AXIOM_SAMPLE_SEED`] above.
pub fn verify_ring_axioms(r: &FiniteRing) -> AxiomReport {
    let m = r.order() as Elem;
    let exhaustive = r.order() <= EXHAUSTIVE_AXIOM_CAP;
    let mut entries = Vec::new();
    for axiom in Axiom::all() {
        let mut witness = None;
        if exhaustive {
            'scan: for x in 0..m {
                for y in 0..m {
                    for z in 0..m {
                        if !axiom.holds_at(r, x, y, z) {
                            witness = Some([x, y, z]);
                            break 'scan;
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(AXIOM_SAMPLE_SEED);
            for _ in 0..AXIOM_SAMPLE_COUNT {
                let (x, y, z) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..m));
                if !axiom.holds_at(r, x, y, z) {
                    witness = Some([x, y, z]);
                    break;
                }
            }
        }
        entries.push((axiom, witness));
    }
    AxiomReport {
        ring: r.label().to_string(),
        entries,
        exhaustive,
    }
}

// ---------------------------------------------------------------------------
// isomorphism search (desk-scale brute force)

fn additive_order(r: &FiniteRing, x: Elem) -> usize {
    let mut acc = x;
    let mut n = 1;
    while acc != r.zero() {
        acc = r.add(acc, x);
        n += 1;
    }
    n
}

fn element_profile(r: &FiniteRing, x: Elem) -> (usize, bool, bool) {
    (
        additive_order(r, x),
        r.mul(x, x) == x,
        r.is_unit(x),
    )
}

/// Brute-force search for a ring isomorphism, as a mapping table `a -> b`.
///
/// Backtracking with per-element invariant pruning; intended for the small
/// orders that appear in tests and structural cross-checks.
pub fn find_ring_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<Elem>> {
    if a.order() != b.order() {
        return None;
    }
    let m = a.order();
    let profiles_a: Vec<_> = a.elements().map(|x| element_profile(a, x)).collect();
    let profiles_b: Vec<_> = b.elements().map(|x| element_profile(b, x)).collect();
    {
        let mut pa = profiles_a.clone();
        let mut pb = profiles_b.clone();
        pa.sort_unstable();
        pb.sort_unstable();
        if pa != pb {
            return None;
        }
    }

    let mut image = vec![Elem::MAX; m];
    let mut used = vec![false; m];
    image[a.zero() as usize] = b.zero();
    used[b.zero() as usize] = true;
    if a.one() != a.zero() {
        if profiles_a[a.one() as usize] != profiles_b[b.one() as usize] {
            return None;
        }
        image[a.one() as usize] = b.one();
        used[b.one() as usize] = true;
    }

    fn consistent(a: &FiniteRing, b: &FiniteRing, image: &[Elem], x: Elem) -> bool {
        let ix = image[x as usize];
        for y in a.elements() {
            let iy = image[y as usize];
            if iy == Elem::MAX {
                continue;
            }
            let s = a.add(x, y);
            let is = image[s as usize];
            if is != Elem::MAX && b.add(ix, iy) != is {
                return false;
            }
            let p = a.mul(x, y);
            let ip = image[p as usize];
            if ip != Elem::MAX && b.mul(ix, iy) != ip {
                return false;
            }
        }
        true
    }

    fn search(
        a: &FiniteRing,
        b: &FiniteRing,
        profiles_a: &[(usize, bool, bool)],
        profiles_b: &[(usize, bool, bool)],
        image: &mut Vec<Elem>,
        used: &mut Vec<bool>,
    ) -> bool {
        let next = match image.iter().position(|&v| v == Elem::MAX) {
            Some(i) => i as Elem,
            None => return true,
        };
        for cand in b.elements() {
            if used[cand as usize] || profiles_a[next as usize] != profiles_b[cand as usize] {
                continue;
            }
            image[next as usize] = cand;
            used[cand as usize] = true;
            if consistent(a, b, image, next)
                && search(a, b, profiles_a, profiles_b, image, used)
            {
                return true;
            }
            image[next as usize] = Elem::MAX;
            used[cand as usize] = false;
        }
        false
    }

    if search(a, b, &profiles_a, &profiles_b, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_closure;

    #[test]
    fn zmod_basics() {
        let r = make_zmod(8).unwrap();
        assert_eq!(r.order(), 8);
        // characteristic 8: adding 1 to itself cycles through all of Z/8
        assert_eq!(additive_order(&r, r.one()), 8);
        let two = make_zmod(2).unwrap();
        assert_eq!(two.add(1, 1), 0);
        assert!(make_zmod(1).is_err());
        assert!(make_zmod(0).is_err());
    }

    #[test]
    fn zmod12_idempotents() {
        let r = make_zmod(12).unwrap();
        let idem: Vec<Elem> = r.elements().filter(|&x| r.mul(x, x) == x).collect();
        assert_eq!(idem, vec![0, 1, 4, 9]);
    }

    #[test]
    fn product_is_crt_compatible() {
        let r = make_product(&make_zmod(2).unwrap(), &make_zmod(3).unwrap()).unwrap();
        assert_eq!(r.order(), 6);
        let iso = find_ring_isomorphism(&make_zmod(6).unwrap(), &r);
        assert!(iso.is_some(), "Z/6 must be isomorphic to Z/2 × Z/3");
    }

    #[test]
    fn product_of_non_coprime_is_not_cyclic() {
        let r = make_product(&make_zmod(2).unwrap(), &make_zmod(2).unwrap()).unwrap();
        assert_eq!(r.order(), 4);
        assert!(find_ring_isomorphism(&make_zmod(4).unwrap(), &r).is_none());
    }

    #[test]
    fn quotient_of_zmod8_by_four() {
        let r = make_zmod(8).unwrap();
        let i = ideal_closure(&r, &[4]).unwrap();
        let (q, proj) = make_quotient(&r, &i).unwrap();
        assert_eq!(q.order(), 4);
        assert!(find_ring_isomorphism(&q, &make_zmod(4).unwrap()).is_some());
        // projection has kernel exactly I
        let kernel: Vec<Elem> = r.elements().filter(|&x| proj.apply(x) == q.zero()).collect();
        assert_eq!(kernel.as_slice(), i.elements());
    }

    #[test]
    fn quotient_by_zero_is_identity_shaped() {
        let r = make_zmod(6).unwrap();
        let i = ideal_closure(&r, &[]).unwrap();
        let (q, _) = make_quotient(&r, &i).unwrap();
        assert_eq!(q.order(), 6);
        assert!(find_ring_isomorphism(&q, &r).is_some());
    }

    #[test]
    fn quotient_of_zmod12_by_six_has_order_six() {
        let r = make_zmod(12).unwrap();
        let i = ideal_closure(&r, &[6]).unwrap();
        let (q, _) = make_quotient(&r, &i).unwrap();
        assert_eq!(q.order(), 6);
    }

    #[test]
    fn improper_quotient_rejected() {
        let r = make_zmod(8).unwrap();
        let i = ideal_closure(&r, &[1]).unwrap();
        assert!(matches!(
            make_quotient(&r, &i),
            Err(CoreError::ImproperIdeal(_))
        ));
    }

    #[test]
    fn axioms_pass_on_constructions() {
        for r in [
            make_zmod(8).unwrap(),
            make_zmod(5).unwrap(),
            make_product(&make_zmod(4).unwrap(), &make_zmod(9).unwrap()).unwrap(),
        ] {
            let report = verify_ring_axioms(&r);
            assert!(report.all_pass(), "axioms failed on {}", r.label());
            assert!(report.exhaustive);
        }
    }

    #[test]
    fn corrupted_multiplication_is_caught() {
        let r = make_zmod(4).unwrap();
        let mut mul: Vec<Elem> = (0..16).map(|i| r.mul(i / 4, i % 4)).collect();
        mul[2 * 4 + 3] = 1; // break 2*3
        let names = (0..4).map(|x| x.to_string()).collect();
        let add: Vec<Elem> = (0..16).map(|i| r.add(i / 4, i % 4)).collect();
        let neg: Vec<Elem> = (0..4).map(|x| r.neg(x)).collect();
        let bad = FiniteRing::from_tables("broken", names, add, mul, neg, 0, 1).unwrap();
        let report = verify_ring_axioms(&bad);
        assert!(!report.all_pass());
        assert!(
            report.failure(Axiom::MulAssociative).is_some()
                || report.failure(Axiom::MulCommutative).is_some()
        );
    }

    #[test]
    fn tag_ignores_labels() {
        let a = make_zmod(8).unwrap();
        let mut names = Vec::new();
        for x in 0..8 {
            names.push(format!("e{x}"));
        }
        let b = FiniteRing::from_tables(
            "other",
            names,
            a.add.clone(),
            a.mul.clone(),
            a.neg.clone(),
            0,
            1,
        )
        .unwrap();
        assert_eq!(a.tag(), b.tag());
    }
}
