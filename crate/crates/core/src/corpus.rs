//! Fixed families of small groups used by the property suites and
//! `selftest`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructors::{alt, cyclic, dihedral, direct_product, sym, wreath_product};
use crate::gfield::{FieldError, FieldSpec};
use crate::permcore::{GroupError, Perm, PermGroup};
use crate::ssearch::{solvable_subgroups, Dedup, DEFAULT_SEARCH_BUDGET};

/// A group with a short human-readable name.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: PermGroup,
}

fn named(name: impl Into<String>, group: PermGroup) -> NamedGroup {
    NamedGroup {
        name: name.into(),
        group,
    }
}

fn field_map(field: &FieldSpec, map: impl Fn(&crate::gfield::FieldElem) -> crate::gfield::FieldElem) -> Perm {
    let images = field.elements().map(|x| field.index(&map(&x))).collect();
    Perm::from_images(images).expect("field map is a bijection")
}

/// Affine maps `x ↦ a·x + b` on GF(q), with the Frobenius when `semilinear`.
pub fn affine_group(q: u64, semilinear: bool) -> Result<PermGroup, FieldError> {
    let field = FieldSpec::of_order(q)?;
    let one = field.one();
    let omega = field.primitive_element();
    let mut gens = vec![
        field_map(&field, |x| field.add(x, &one)),
        field_map(&field, |x| field.mul(x, &omega)),
    ];
    if semilinear && field.degree() > 1 {
        gens.push(field_map(&field, |x| field.frobenius(x)));
    }
    Ok(PermGroup::new(q as usize, gens).expect("generators share the degree"))
}

/// Sylow 2-subgroup of Sym(2^k) as an iterated wreath product of C₂.
pub fn iterated_c2_wreath(levels: u32) -> PermGroup {
    let c2 = cyclic(2);
    (1..levels).fold(c2.clone(), |acc, _| wreath_product(&acc, &c2))
}

/// Solvable groups of degree at most 12, orders from 1 to 13824.
pub fn solvable_corpus() -> Vec<NamedGroup> {
    let mut out = Vec::new();
    for n in 1..=12 {
        out.push(named(format!("C{n}"), cyclic(n)));
    }
    for n in 3..=12 {
        out.push(named(format!("D{}", 2 * n), dihedral(n)));
    }
    out.push(named("Sym(3)", sym(3)));
    out.push(named("Sym(4)", sym(4)));
    out.push(named("Alt(4)", alt(4)));
    for (q, semi) in [(3, false), (5, false), (7, false), (11, false), (8, false), (9, false), (4, true), (8, true), (9, true)] {
        let label = if semi { "AGammaL" } else { "AGL" };
        out.push(named(format!("{label}(1,{q})"), affine_group(q, semi).expect("small field")));
    }
    let (c2, c3, s3, s4, a4, d8) = (cyclic(2), cyclic(3), sym(3), sym(4), alt(4), dihedral(4));
    let agl5 = affine_group(5, false).expect("small field");
    let products = [
        ("Sym(3)xSym(3)", direct_product(&s3, &s3)),
        ("Sym(4)xSym(3)", direct_product(&s4, &s3)),
        ("Sym(4)xSym(4)", direct_product(&s4, &s4)),
        ("Sym(4)^3", direct_product(&direct_product(&s4, &s4), &s4)),
        ("C3xSym(4)", direct_product(&c3, &s4)),
        ("D8xD8", direct_product(&d8, &d8)),
        ("Alt(4)xAlt(4)", direct_product(&a4, &a4)),
        ("Sym(3)^3", direct_product(&direct_product(&s3, &s3), &s3)),
        ("Sym(4)xSym(3)xSym(3)", direct_product(&direct_product(&s4, &s3), &s3)),
        ("Sym(4)xAGL(1,5)", direct_product(&s4, &agl5)),
    ];
    out.extend(products.into_iter().map(|(n, g)| named(n, g)));
    let wreaths = [
        ("C2wrSym(3)", wreath_product(&c2, &s3)),
        ("Sym(3)wrC2", wreath_product(&s3, &c2)),
        ("C2wrSym(4)", wreath_product(&c2, &s4)),
        ("Sym(4)wrC2", wreath_product(&s4, &c2)),
        ("Sym(3)wrSym(3)", wreath_product(&s3, &s3)),
        ("C3wrC3", wreath_product(&c3, &c3)),
        ("C2wrAlt(4)", wreath_product(&c2, &a4)),
        ("Sym(3)wrC4", wreath_product(&s3, &cyclic(4))),
        ("Alt(4)wrC3", wreath_product(&a4, &c3)),
        ("C2wrC2wrC2", iterated_c2_wreath(3)),
        ("C4wrC3", wreath_product(&cyclic(4), &c3)),
    ];
    out.extend(wreaths.into_iter().map(|(n, g)| named(n, g)));
    out
}

/// Transitive subgroups of a Sylow 2-subgroup of Sym(n). Every transitive
/// 2-subgroup of Sym(n) is conjugate to one of these.
pub fn transitive_two_subgroups(n: usize) -> Result<Vec<PermGroup>, GroupError> {
    let sylow = sym(n).sylow2()?;
    let catalog = solvable_subgroups(&sylow, Dedup::Exact, DEFAULT_SEARCH_BUDGET)?;
    if catalog.budget_hit {
        return Err(GroupError::BudgetExceeded {
            budget: DEFAULT_SEARCH_BUDGET,
        });
    }
    Ok(catalog.subgroups.into_iter().filter(PermGroup::is_transitive).collect())
}

/// `count` transitive subgroups of the Sylow 2-subgroup of Sym(2^levels),
/// each generated by two or three random elements; deterministic in `seed`.
pub fn random_transitive_two_subgroups(levels: u32, count: usize, seed: u64) -> Result<Vec<PermGroup>, GroupError> {
    let sylow = iterated_c2_wreath(levels);
    let elems = sylow.elements()?.as_slice();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.random_range(2..=3);
        let gens = (0..k).map(|_| elems[rng.random_range(0..elems.len())].clone()).collect();
        let g = PermGroup::new(sylow.degree(), gens)?;
        if g.is_transitive() {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_solvable_and_large_enough() {
        let corpus = solvable_corpus();
        assert!(corpus.len() >= 50);
        for g in &corpus {
            assert!(g.group.degree() <= 12, "{}", g.name);
            assert!(g.group.is_solvable().unwrap(), "{}", g.name);
        }
        let order = |name: &str| corpus.iter().find(|g| g.name == name).unwrap().group.order().unwrap();
        assert_eq!(order("AGammaL(1,8)"), 168);
        assert_eq!(order("AGammaL(1,4)"), 24);
        assert_eq!(order("Sym(4)^3"), 13824);
    }

    #[test]
    fn sylow_of_sym8_is_the_wreath() {
        assert_eq!(iterated_c2_wreath(3).order().unwrap(), 128);
        assert_eq!(iterated_c2_wreath(4).order().unwrap(), 1 << 15);
        let t4 = transitive_two_subgroups(4).unwrap();
        let mut orders: Vec<u64> = t4.iter().map(|g| g.order().unwrap()).collect();
        orders.sort_unstable();
        assert_eq!(orders, [4, 4, 8]);
    }
}
