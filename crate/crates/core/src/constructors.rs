//! Concrete permutation groups: the projective-line groups PSL₂(q) ≤ PGL₂(q)
//! ≤ PΓL₂(q), symmetric and alternating groups, and direct and wreath
//! products.
//!
//! Projective points are labelled with the affine points first, in field
//! index order, and `∞ = (1:0)` last (label `q`).

use std::path::Path;

use thiserror::Error;

use crate::gfield::{FieldError, FieldElem, FieldSpec};
use crate::permcore::{parse_generators, GroupError, Perm, PermGroup};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group spec {0:?}: {1}")]
    Spec(String, String),
    #[error("reading {0}: {1}")]
    Io(String, String),
}

/// A point of the projective line, normalized to `(x:1)` or `(1:0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Affine(FieldElem),
    Infinity,
}

impl ProjPoint {
    pub fn label(&self, field: &FieldSpec) -> u32 {
        match self {
            ProjPoint::Affine(x) => field.index(x),
            ProjPoint::Infinity => field.order(),
        }
    }

    pub fn from_label(field: &FieldSpec, label: u32) -> ProjPoint {
        if label == field.order() {
            ProjPoint::Infinity
        } else {
            ProjPoint::Affine(field.from_index(label))
        }
    }
}

/// `x ↦ (a x + b) / (c x + d)` for an invertible matrix `[[a, b], [c, d]]`.
fn mobius(field: &FieldSpec, m: [&FieldElem; 4], pt: &ProjPoint) -> ProjPoint {
    let [a, b, c, d] = m;
    match pt {
        ProjPoint::Infinity => {
            if c.is_zero() {
                ProjPoint::Infinity
            } else {
                ProjPoint::Affine(field.mul(a, &field.inv(c).expect("nonzero")))
            }
        }
        ProjPoint::Affine(x) => {
            let num = field.add(&field.mul(a, x), b);
            let den = field.add(&field.mul(c, x), d);
            if den.is_zero() {
                ProjPoint::Infinity
            } else {
                ProjPoint::Affine(field.mul(&num, &field.inv(&den).expect("nonzero")))
            }
        }
    }
}

fn point_perm(field: &FieldSpec, map: impl Fn(&ProjPoint) -> ProjPoint) -> Perm {
    let n = field.order() + 1;
    let images = (0..n)
        .map(|i| map(&ProjPoint::from_label(field, i)).label(field))
        .collect();
    Perm::from_images(images).expect("projective maps are bijective")
}

fn matrix_perm(field: &FieldSpec, m: [&FieldElem; 4]) -> Perm {
    point_perm(field, |pt| mobius(field, m, pt))
}

fn frobenius_perm(field: &FieldSpec) -> Perm {
    point_perm(field, |pt| match pt {
        ProjPoint::Infinity => ProjPoint::Infinity,
        ProjPoint::Affine(x) => ProjPoint::Affine(field.frobenius(x)),
    })
}

fn projective_generators(q: u64, squares_only: bool) -> Result<(FieldSpec, Vec<Perm>), ConstructError> {
    let field = FieldSpec::of_order(q)?;
    let (zero, one) = (field.zero(), field.one());
    let minus_one = field.neg(&one);
    let mut omega = field.primitive_element();
    if squares_only && field.characteristic() != 2 {
        omega = field.mul(&omega, &omega);
    }
    let gens = vec![
        matrix_perm(&field, [&one, &one, &zero, &one]),
        matrix_perm(&field, [&omega, &zero, &zero, &one]),
        matrix_perm(&field, [&zero, &minus_one, &one, &zero]),
    ];
    Ok((field, gens))
}

/// PSL₂(q) on the `q + 1` projective points.
pub fn psl2(q: u64) -> Result<PermGroup, ConstructError> {
    let (field, gens) = projective_generators(q, true)?;
    Ok(PermGroup::new(field.order() as usize + 1, gens)?)
}

/// PGL₂(q) on the `q + 1` projective points.
pub fn pgl2(q: u64) -> Result<PermGroup, ConstructError> {
    let (field, gens) = projective_generators(q, false)?;
    Ok(PermGroup::new(field.order() as usize + 1, gens)?)
}

/// PΓL₂(q): PGL₂(q) extended by `(x:y) ↦ (x^p : y^p)`.
pub fn pgammal2(q: u64) -> Result<PermGroup, ConstructError> {
    let (field, mut gens) = projective_generators(q, false)?;
    gens.push(frobenius_perm(&field));
    Ok(PermGroup::new(field.order() as usize + 1, gens)?)
}

/// Field automorphism as a permutation of the projective line.
pub fn projective_frobenius(q: u64) -> Result<Perm, ConstructError> {
    Ok(frobenius_perm(&FieldSpec::of_order(q)?))
}

/// `q(q² − 1) / gcd(2, q − 1)`.
pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / if q % 2 == 1 { 2 } else { 1 }
}

pub fn sym(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let all: Vec<u32> = (0..n as u32).collect();
    let gens = vec![
        Perm::from_cycles(n, &[&[0, 1]]).unwrap(),
        Perm::from_cycles(n, &[&all]).unwrap(),
    ];
    PermGroup::new(n, gens).unwrap()
}

/// Alt(n) from `(0 1 2)` and an even long cycle.
pub fn alt(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n);
    }
    let long: Vec<u32> = if n % 2 == 1 {
        (0..n as u32).collect()
    } else {
        (1..n as u32).collect()
    };
    let gens = vec![
        Perm::from_cycles(n, &[&[0, 1, 2]]).unwrap(),
        Perm::from_cycles(n, &[&long]).unwrap(),
    ];
    PermGroup::new(n, gens).unwrap()
}

pub fn cyclic(n: usize) -> PermGroup {
    let all: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(n, vec![Perm::from_cycles(n, &[&all]).unwrap()]).unwrap()
}

/// Dihedral group of order `2n` acting on the vertices of an n-gon.
pub fn dihedral(n: usize) -> PermGroup {
    let rot: Vec<u32> = (0..n as u32).collect();
    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    PermGroup::new(
        n,
        vec![
            Perm::from_cycles(n, &[&rot]).unwrap(),
            Perm::from_images(refl).unwrap(),
        ],
    )
    .unwrap()
}

fn shift(g: &Perm, offset: u32, degree: usize) -> Perm {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &x) in g.images().iter().enumerate() {
        images[i + offset as usize] = x + offset;
    }
    Perm::from_images(images).expect("shifted bijection")
}

/// `A × B` acting on the disjoint union, `A` on the first `deg A` points.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let n = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|g| shift(g, 0, n))
        .chain(b.generators().iter().map(|g| shift(g, a.degree() as u32, n)))
        .collect();
    PermGroup::new(n, gens).unwrap()
}

/// `A ≀ B` in its imprimitive action on `deg A · deg B` points: block `i`
/// is `{i·deg A, .., (i+1)·deg A − 1}` and `B` permutes the blocks.
pub fn wreath_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (m, k) = (a.degree(), b.degree());
    let n = m * k;
    let mut gens: Vec<Perm> = a.generators().iter().map(|g| shift(g, 0, n)).collect();
    for g in b.generators() {
        let images = (0..n as u32)
            .map(|x| g.apply(x / m as u32) * m as u32 + x % m as u32)
            .collect();
        gens.push(Perm::from_images(images).unwrap());
    }
    PermGroup::new(n, gens).unwrap()
}

/// Parses the group-spec mini-language:
/// `psl2:q`, `pgl2:q`, `pgammal2:q`, `sym:n`, `alt:n`, `prod(<spec>,<spec>)`,
/// `file:<path>`, plus `cyclic:n`, `dihedral:n` and `wreath(<spec>,<spec>)`.
pub fn parse_group_spec(spec: &str) -> Result<PermGroup, ConstructError> {
    let s = spec.trim();
    let err = |msg: &str| ConstructError::Spec(spec.to_string(), msg.to_string());
    for (head, build) in [
        ("prod(", direct_product as fn(&PermGroup, &PermGroup) -> PermGroup),
        ("wreath(", wreath_product),
    ] {
        if let Some(inner) = s.strip_prefix(head) {
            let inner = inner.strip_suffix(')').ok_or_else(|| err("missing ')'"))?;
            let (left, right) = split_top_level(inner).ok_or_else(|| err("expected two comma-separated specs"))?;
            return Ok(build(&parse_group_spec(left)?, &parse_group_spec(right)?));
        }
    }
    if let Some(path) = s.strip_prefix("file:") {
        let text = std::fs::read_to_string(Path::new(path))
            .map_err(|e| ConstructError::Io(path.to_string(), e.to_string()))?;
        return Ok(parse_generators(&text)?);
    }
    let (name, arg) = s.split_once(':').ok_or_else(|| err("expected name:arg"))?;
    let n: u64 = arg.trim().parse().map_err(|_| err("argument is not an integer"))?;
    match name.trim() {
        "psl2" => psl2(n),
        "pgl2" => pgl2(n),
        "pgammal2" => pgammal2(n),
        "sym" | "alt" | "cyclic" | "dihedral" if n == 0 || n > 4096 => Err(err("degree out of range")),
        "sym" => Ok(sym(n as usize)),
        "alt" => Ok(alt(n as usize)),
        "cyclic" => Ok(cyclic(n as usize)),
        "dihedral" => Ok(dihedral(n as usize)),
        other => Err(err(&format!("unknown group {other:?}"))),
    }
}

fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_orders() {
        assert_eq!(psl2(8).unwrap().order().unwrap(), 504);
        assert_eq!(psl2(5).unwrap().order().unwrap(), 60);
        assert_eq!(psl2(4).unwrap().order().unwrap(), 60);
        assert_eq!(pgl2(9).unwrap().order().unwrap(), 720);
        assert_eq!(pgammal2(8).unwrap().order().unwrap(), 1512);
        assert_eq!(pgammal2(5).unwrap().order().unwrap(), 120);
        assert_eq!(pgammal2(9).unwrap().order().unwrap(), 1440);
    }

    #[test]
    fn psl2_4_is_perfect_and_nonabelian() {
        let g = psl2(4).unwrap();
        assert!(!g.is_abelian());
        assert!(g.is_perfect().unwrap());
        assert!(!g.is_solvable().unwrap());
    }

    #[test]
    fn small_degree_constructors() {
        assert_eq!(alt(5).order().unwrap(), 60);
        assert_eq!(direct_product(&sym(4), &sym(3)).order().unwrap(), 144);
        assert!(alt(4).is_solvable().unwrap());
        assert!(!alt(5).is_solvable().unwrap());
        for n in 1..=8usize {
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(sym(n).order().unwrap(), fact);
            assert_eq!(alt(n).order().unwrap(), if n < 2 { 1 } else { fact / 2 });
        }
        assert_eq!(wreath_product(&sym(2), &sym(3)).order().unwrap(), 48);
        assert_eq!(wreath_product(&sym(3), &sym(2)).order().unwrap(), 72);
        assert_eq!(dihedral(5).order().unwrap(), 10);
    }

    #[test]
    fn frobenius_fixes_infinity_and_prime_field() {
        let f = projective_frobenius(9).unwrap();
        let fixed: Vec<u32> = (0..10).filter(|&x| f.apply(x) == x).collect();
        assert_eq!(fixed, vec![0, 1, 2, 9]);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_group_spec("sym:4").unwrap().order().unwrap(), 24);
        let g = parse_group_spec("prod(sym:3,prod(alt:4,sym:2))").unwrap();
        assert_eq!(g.degree(), 9);
        assert_eq!(g.order().unwrap(), 144);
        assert_eq!(parse_group_spec(" wreath(sym:2, sym:2) ").unwrap().order().unwrap(), 8);
        assert!(matches!(parse_group_spec("psl2:6"), Err(ConstructError::Field(_))));
        assert!(matches!(parse_group_spec("foo:3"), Err(ConstructError::Spec(..))));
        assert!(matches!(parse_group_spec("prod(sym:3)"), Err(ConstructError::Spec(..))));
        assert!(matches!(parse_group_spec("file:/nonexistent/x"), Err(ConstructError::Io(..))));
    }
}
