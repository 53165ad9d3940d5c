//! Finite modules over a finite ring, and the trivial ring extension
//! (idealization) they induce.

use crate::error::{CoreError, Result};
use crate::ideal::{ideal_closure, minimal_generators};
use crate::ring::{wrap_label, Elem, FiniteRing, MAX_TABLE_ORDER};

/// A finite module: an abelian group with a verified ring action.
#[derive(Debug, Clone)]
pub struct ModuleOverRing {
    ring_tag: u64,
    ring_label: String,
    label: String,
    size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    zero: u32,
    /// Row-major `ring.order x size` action table.
    action: Vec<u32>,
    names: Vec<String>,
}

impl ModuleOverRing {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn zero(&self) -> u32 {
        self.zero
    }

    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.add[x as usize * self.size + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        self.neg[x as usize]
    }

    #[inline]
    pub fn act(&self, scalar: Elem, x: u32) -> u32 {
        self.action[scalar as usize * self.size + x as usize]
    }

    pub fn name(&self, x: u32) -> &str {
        &self.names[x as usize]
    }

    pub fn check_ring(&self, r: &FiniteRing) -> Result<()> {
        if self.ring_tag == r.tag() {
            Ok(())
        } else {
            Err(CoreError::ModuleRingMismatch {
                module_ring: self.ring_label.clone(),
                base: r.label().to_string(),
            })
        }
    }

    fn verify(&self, r: &FiniteRing) -> Result<()> {
        let bad = |reason: String| CoreError::MalformedRing {
            label: self.label.clone(),
            reason,
        };
        let k = self.size as u32;
        for x in 0..k {
            if self.add(x, self.zero) != x {
                return Err(bad(format!("{} + 0 != {}", x, x)));
            }
            if self.add(x, self.neg(x)) != self.zero {
                return Err(bad(format!("{} has no inverse", x)));
            }
            if self.act(r.one(), x) != x {
                return Err(bad(format!("1·{} != {}", x, x)));
            }
            for y in 0..k {
                if self.add(x, y) != self.add(y, x) {
                    return Err(bad("addition not commutative".into()));
                }
                for z in 0..k {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return Err(bad("addition not associative".into()));
                    }
                }
            }
        }
        for s in r.elements() {
            for x in 0..k {
                for y in 0..k {
                    if self.act(s, self.add(x, y)) != self.add(self.act(s, x), self.act(s, y)) {
                        return Err(bad("action not additive in the module".into()));
                    }
                }
            }
            for t in r.elements() {
                for x in 0..k {
                    if self.act(r.add(s, t), x) != self.add(self.act(s, x), self.act(t, x)) {
                        return Err(bad("action not additive in the ring".into()));
                    }
                    if self.act(r.mul(s, t), x) != self.act(s, self.act(t, x)) {
                        return Err(bad("action not multiplicative".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The ring as a module over itself.
pub fn module_self(r: &FiniteRing) -> ModuleOverRing {
    let size = r.order();
    let mut add = Vec::with_capacity(size * size);
    let mut action = Vec::with_capacity(size * size);
    for x in r.elements() {
        for y in r.elements() {
            add.push(r.add(x, y));
            action.push(r.mul(x, y));
        }
    }
    let m = ModuleOverRing {
        ring_tag: r.tag(),
        ring_label: r.label().to_string(),
        label: r.label().to_string(),
        size,
        add,
        neg: r.elements().map(|x| r.neg(x)).collect(),
        zero: r.zero(),
        action,
        names: r.elements().map(|x| r.name(x).to_string()).collect(),
    };
    m.verify(r).expect("the ring acts on itself");
    m
}

/// The quotient module R/I with the action inherited from multiplication.
pub fn module_quotient(r: &FiniteRing, modulus_gens: &[Elem]) -> Result<ModuleOverRing> {
    let i = ideal_closure(r, modulus_gens)?;
    // cosets keyed by minimal member, enumerated in increasing order
    let mut coset_of = vec![Elem::MAX; r.order()];
    let mut reps = Vec::new();
    for x in r.elements() {
        if coset_of[x as usize] != Elem::MAX {
            continue;
        }
        let rep = i.elements().iter().map(|&e| r.add(x, e)).min().unwrap();
        reps.push(rep);
        for &e in i.elements() {
            coset_of[r.add(x, e) as usize] = rep;
        }
    }
    reps.sort_unstable();
    let index_of = |rep: Elem| reps.binary_search(&rep).unwrap() as u32;
    let class = |x: Elem| index_of(coset_of[x as usize]);
    let size = reps.len();
    let mut add = Vec::with_capacity(size * size);
    for &x in &reps {
        for &y in &reps {
            add.push(class(r.add(x, y)));
        }
    }
    let mut action = Vec::with_capacity(r.order() * size);
    for s in r.elements() {
        for &x in &reps {
            action.push(class(r.mul(s, x)));
        }
    }
    let gen_names: Vec<&str> = minimal_generators(r, i.elements())
        .iter()
        .map(|&g| r.name(g))
        .collect();
    let m = ModuleOverRing {
        ring_tag: r.tag(),
        ring_label: r.label().to_string(),
        label: format!("{}/({})", wrap_label(r.label()), gen_names.join(",")),
        size,
        add,
        neg: reps.iter().map(|&x| class(r.neg(x))).collect(),
        zero: class(r.zero()),
        action,
        names: reps.iter().map(|&x| format!("[{}]", r.name(x))).collect(),
    };
    m.verify(r)?;
    Ok(m)
}

/// The trivial ring extension (idealization) of A by M: carrier A x M with
/// (a,e)(a',e') = (aa', ae' + a'e). The copy 0 x M of the module squares
/// to zero.
pub fn make_trivial_extension(a: &FiniteRing, m: &ModuleOverRing) -> Result<FiniteRing> {
    m.check_ring(a)?;
    let k = m.size();
    let order = a.order() * k;
    if order > MAX_TABLE_ORDER {
        return Err(CoreError::CapExceeded {
            ring: format!("{} ⋉ {}", a.label(), m.label()),
            order,
            cap: MAX_TABLE_ORDER,
        });
    }
    let ix = |x: Elem, e: u32| x * k as Elem + e;
    let split = |v: Elem| (v / k as Elem, v % k as Elem);
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for v in 0..order as Elem {
        let (xa, xe) = split(v);
        for w in 0..order as Elem {
            let (ya, ye) = split(w);
            add.push(ix(a.add(xa, ya), m.add(xe, ye)));
            mul.push(ix(a.mul(xa, ya), m.add(m.act(xa, ye), m.act(ya, xe))));
        }
    }
    let neg = (0..order as Elem)
        .map(|v| {
            let (xa, xe) = split(v);
            ix(a.neg(xa), m.neg(xe))
        })
        .collect();
    let names = (0..order as Elem)
        .map(|v| {
            let (xa, xe) = split(v);
            format!("({},{})", a.name(xa), m.name(xe))
        })
        .collect();
    let label = format!("{} ⋉ {}", wrap_label(a.label()), wrap_label(m.label()));
    FiniteRing::from_tables(
        label,
        names,
        add,
        mul,
        neg,
        ix(a.zero(), m.zero()),
        ix(a.one(), m.zero()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_zmod, verify_ring_axioms};

    #[test]
    fn idealization_of_z2_by_itself() {
        let a = make_zmod(2).unwrap();
        let m = module_self(&a);
        let t = make_trivial_extension(&a, &m).unwrap();
        assert_eq!(t.order(), 4);
        assert!(verify_ring_axioms(&t).all_pass());
        // (1,1)^2 = (1,0)
        let x = 1 * 2 + 1;
        assert_eq!(t.mul(x, x), 2);
        assert_eq!(t.name(t.mul(x, x)), "(1,0)");
    }

    #[test]
    fn module_copy_squares_to_zero() {
        let a = make_zmod(4).unwrap();
        let m = module_self(&a);
        let t = make_trivial_extension(&a, &m).unwrap();
        for e in 0..4u32 {
            for e2 in 0..4u32 {
                assert_eq!(t.mul(e, e2), t.zero(), "(0,e)(0,e') must vanish");
            }
        }
    }

    #[test]
    fn z4_by_z2_reduction_action() {
        let a = make_zmod(4).unwrap();
        let m = module_quotient(&a, &[2]).unwrap();
        assert_eq!(m.size(), 2);
        let t = make_trivial_extension(&a, &m).unwrap();
        assert_eq!(t.order(), 8);
        assert!(verify_ring_axioms(&t).all_pass());
        // units are exactly the pairs with a unit first component
        let units: Vec<Elem> = t.elements().filter(|&x| t.is_unit(x)).collect();
        let expected: Vec<Elem> = t
            .elements()
            .filter(|&x| {
                let a_part = x / 2;
                a_part == 1 || a_part == 3
            })
            .collect();
        assert_eq!(units, expected);
    }

    #[test]
    fn module_over_wrong_ring_rejected() {
        let a = make_zmod(4).unwrap();
        let b = make_zmod(8).unwrap();
        let m = module_self(&b);
        assert!(matches!(
            make_trivial_extension(&a, &m),
            Err(CoreError::ModuleRingMismatch { .. })
        ));
    }
}
