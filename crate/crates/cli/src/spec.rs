//! The ring-definition format: one JSON document per file describing a tree
//! of construction nodes. Element references are carrier indices of the ring
//! they point into and are validated on load.

use amalg_core::{
    canonical_zmod_hom, hom_by, identity_hom, make_amalgamation, make_duplication, make_hom,
    make_product, make_quotient, make_trivial_extension, make_zmod, module_quotient, module_self,
    AmalgamRing, Elem, FiniteRing, RingHom,
};
use amalg_core::ideal::ideal_closure;
use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    Zmod {
        n: u64,
    },
    Product {
        left: Box<RingSpec>,
        right: Box<RingSpec>,
    },
    TrivialExtension {
        base: Box<RingSpec>,
        module: ModuleSpec,
    },
    Quotient {
        base: Box<RingSpec>,
        ideal_gens: Vec<Elem>,
    },
    Duplication {
        base: Box<RingSpec>,
        ideal_gens: Vec<Elem>,
    },
    Amalgamation {
        a: Box<RingSpec>,
        b: Box<RingSpec>,
        hom: HomSpec,
        j_gens: Vec<Elem>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    /// The base ring acting on itself.
    #[serde(rename = "self")]
    SelfModule,
    /// The quotient module base/(gens) with the reduction action.
    Quotient { gens: Vec<Elem> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum HomSpec {
    /// x -> x between structurally identical rings.
    Identity,
    /// Reduction Z/n -> Z/m, or the projection onto a quotient of the
    /// source.
    Canonical,
    /// Coordinate projection out of a pair-structured source (product,
    /// duplication or amalgamation); `component` is 1 or 2.
    Projection { component: u8 },
    /// Explicit element table as (source index, target index) pairs; must
    /// be total on the source.
    Table { pairs: Vec<(Elem, Elem)> },
}

/// A constructed ring; amalgamation-shaped specs also carry the structured
/// amalgam view the checkers need.
pub struct BuiltRing {
    pub ring: FiniteRing,
    pub amalgam: Option<AmalgamRing>,
}

/// Parses a ring-definition document, reporting the position of the first
/// syntax or typing error.
pub fn parse_spec(text: &str) -> Result<RingSpec> {
    serde_json::from_str(text)
        .map_err(|e| anyhow!("parse error at line {}, column {}: {}", e.line(), e.column(), e))
}

pub fn render_spec(spec: &RingSpec) -> String {
    serde_json::to_string_pretty(spec).expect("spec serialization is infallible")
}

pub fn build(spec: &RingSpec) -> Result<BuiltRing> {
    Ok(match spec {
        RingSpec::Zmod { n } => BuiltRing {
            ring: make_zmod(*n)?,
            amalgam: None,
        },
        RingSpec::Product { left, right } => {
            let l = build(left)?;
            let r = build(right)?;
            BuiltRing {
                ring: make_product(&l.ring, &r.ring)?,
                amalgam: None,
            }
        }
        RingSpec::TrivialExtension { base, module } => {
            let b = build(base)?;
            let m = match module {
                ModuleSpec::SelfModule => module_self(&b.ring),
                ModuleSpec::Quotient { gens } => module_quotient(&b.ring, gens)
                    .context("module generators must be elements of the base ring")?,
            };
            BuiltRing {
                ring: make_trivial_extension(&b.ring, &m)?,
                amalgam: None,
            }
        }
        RingSpec::Quotient { base, ideal_gens } => {
            let b = build(base)?;
            let i = ideal_closure(&b.ring, ideal_gens)
                .context("ideal generators must be elements of the base ring")?;
            let (q, _) = make_quotient(&b.ring, &i)?;
            BuiltRing {
                ring: q,
                amalgam: None,
            }
        }
        RingSpec::Duplication { base, ideal_gens } => {
            let b = build(base)?;
            let i = ideal_closure(&b.ring, ideal_gens)
                .context("ideal generators must be elements of the base ring")?;
            let am = make_duplication(&b.ring, &i)?;
            BuiltRing {
                ring: am.ring.clone(),
                amalgam: Some(am),
            }
        }
        RingSpec::Amalgamation { a, b, hom, j_gens } => {
            let built_a = build(a)?;
            let built_b = build(b)?;
            let f = build_hom(a, &built_a, b, &built_b, hom)?;
            let j = ideal_closure(&built_b.ring, j_gens)
                .context("ideal generators must be elements of B")?;
            let am = make_amalgamation(&built_a.ring, &built_b.ring, &f, &j)?;
            BuiltRing {
                ring: am.ring.clone(),
                amalgam: Some(am),
            }
        }
    })
}

fn build_hom(
    a_spec: &RingSpec,
    a: &BuiltRing,
    b_spec: &RingSpec,
    b: &BuiltRing,
    hom: &HomSpec,
) -> Result<RingHom> {
    match hom {
        HomSpec::Identity => {
            if a.ring.tag() != b.ring.tag() {
                bail!(
                    "identity hom needs structurally identical rings, got {} and {}",
                    a.ring.label(),
                    b.ring.label()
                );
            }
            Ok(identity_hom(&a.ring))
        }
        HomSpec::Canonical => {
            if let (RingSpec::Zmod { .. }, RingSpec::Zmod { .. }) = (a_spec, b_spec) {
                return Ok(canonical_zmod_hom(&a.ring, &b.ring)?);
            }
            if let RingSpec::Quotient { base, ideal_gens } = b_spec {
                if **base == *a_spec {
                    let i = ideal_closure(&a.ring, ideal_gens)?;
                    let (_, proj) = make_quotient(&a.ring, &i)?;
                    return Ok(proj);
                }
            }
            bail!("canonical hom needs Z/n -> Z/m targets or b = quotient of a")
        }
        HomSpec::Projection { component } => {
            if *component != 1 && *component != 2 {
                bail!("projection component must be 1 or 2");
            }
            match (a_spec, &a.amalgam) {
                (RingSpec::Product { right, .. }, _) => {
                    let right_order = build(right)?.ring.order() as Elem;
                    let f = if *component == 1 {
                        hom_by(&a.ring, &b.ring, |x| x / right_order)?
                    } else {
                        hom_by(&a.ring, &b.ring, |x| x % right_order)?
                    };
                    Ok(f)
                }
                (_, Some(am)) => {
                    let proj = if *component == 1 {
                        am.first_projection()
                    } else {
                        am.second_projection()
                    };
                    proj.check_target(&b.ring).map_err(|_| {
                        anyhow!(
                            "projection target {} does not match the source's component",
                            b.ring.label()
                        )
                    })?;
                    Ok(proj)
                }
                _ => bail!("projection needs a product, duplication or amalgamation source"),
            }
        }
        HomSpec::Table { pairs } => {
            let mut table = vec![Elem::MAX; a.ring.order()];
            for &(src, dst) in pairs {
                a.ring.check_element(src)?;
                b.ring.check_element(dst)?;
                if table[src as usize] != Elem::MAX {
                    bail!("hom table assigns element {src} twice");
                }
                table[src as usize] = dst;
            }
            if let Some(missing) = table.iter().position(|&v| v == Elem::MAX) {
                bail!("hom table is not total: element {missing} unassigned");
            }
            Ok(make_hom(&a.ring, &b.ring, table)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_build_zmod() {
        let spec = parse_spec(r#"{"kind":"zmod","n":8}"#).unwrap();
        let built = build(&spec).unwrap();
        assert_eq!(built.ring.order(), 8);
        assert!(built.amalgam.is_none());
    }

    #[test]
    fn parse_and_build_duplication() {
        let spec = parse_spec(
            r#"{"kind":"duplication","base":{"kind":"zmod","n":8},"ideal_gens":[2]}"#,
        )
        .unwrap();
        let built = build(&spec).unwrap();
        assert_eq!(built.ring.order(), 32);
        assert!(built.amalgam.is_some());
    }

    #[test]
    fn invalid_order_is_rejected() {
        let spec = parse_spec(r#"{"kind":"zmod","n":1}"#).unwrap();
        assert!(build(&spec).is_err());
    }

    #[test]
    fn parse_error_carries_position() {
        let err = parse_spec(r#"{"kind":"zmod""#).unwrap_err();
        assert!(err.to_string().contains("line 1"));
    }

    #[test]
    fn unknown_kind_is_rejected() {
        assert!(parse_spec(r#"{"kind":"field","n":8}"#).is_err());
    }

    #[test]
    fn generator_out_of_range_is_rejected() {
        let spec = parse_spec(
            r#"{"kind":"duplication","base":{"kind":"zmod","n":4},"ideal_gens":[9]}"#,
        )
        .unwrap();
        assert!(build(&spec).is_err());
    }

    #[test]
    fn canonical_hom_between_zmods() {
        let spec = parse_spec(
            r#"{"kind":"amalgamation","a":{"kind":"zmod","n":8},"b":{"kind":"zmod","n":4},"hom":{"kind":"canonical"},"j_gens":[2]}"#,
        )
        .unwrap();
        let built = build(&spec).unwrap();
        assert_eq!(built.ring.order(), 16);
    }

    #[test]
    fn trivial_extension_specs() {
        let spec = parse_spec(
            r#"{"kind":"trivial_extension","base":{"kind":"zmod","n":4},"module":{"kind":"quotient","gens":[2]}}"#,
        )
        .unwrap();
        assert_eq!(build(&spec).unwrap().ring.order(), 8);
        let spec2 = parse_spec(
            r#"{"kind":"trivial_extension","base":{"kind":"zmod","n":2},"module":{"kind":"self"}}"#,
        )
        .unwrap();
        assert_eq!(build(&spec2).unwrap().ring.order(), 4);
    }

    #[test]
    fn rejected_table_hom_reports_witness() {
        let spec = parse_spec(
            r#"{"kind":"amalgamation","a":{"kind":"zmod","n":4},"b":{"kind":"zmod","n":6},
                "hom":{"kind":"table","pairs":[[0,0],[1,1],[2,2],[3,3]]},"j_gens":[]}"#,
        )
        .unwrap();
        let err = build(&spec).unwrap_err().to_string();
        assert!(err.contains("homomorphism"), "got: {err}");
    }
}
