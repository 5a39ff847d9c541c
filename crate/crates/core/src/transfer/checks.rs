//! Verification of the transferred structure: the quadratic operation
//! identities, associativity of the harmonic product, and the ring
//! isomorphism onto quotient cohomology.

use super::{AInfinityStructure, TransferError};
use crate::dga::Dga;
use crate::graded::Element;
use crate::hodge::HodgeData;
use crate::matrix::Mat;
use crate::rational::Rational;
use crate::report::CheckReport;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Checks the Stasheff identity with `n` inputs over every tuple of flat
/// harmonic basis vectors:
///
/// ```text
/// sum over r + s + t = n, s >= 1 of
///   (-1)^(r + st + s(|a_1|+..+|a_r|))
///   m_(r+1+t)(a_1..a_r, m_s(a_(r+1)..a_(r+s)), a_(r+s+1)..a_n)  =  0
/// ```
///
/// Terms with `s = 1` or `r + t = 0, s = n` vanish because `m_1 = 0`.
pub fn stasheff_check(structure: &AInfinityStructure, n: usize) -> CheckReport {
    assert!(
        n >= 1 && n <= structure.max_arity(),
        "identity with {n} inputs needs operations up to that arity"
    );
    let mut report = CheckReport::new(format!("stasheff identity with {n} inputs"));
    report.note("sign_variant", structure.variant().as_str());

    let degrees = structure.basis_degrees();
    let top = structure.space().top() as i64;

    // Flat coordinates of every table value, extracted once.
    let mut coords: BTreeMap<usize, BTreeMap<Vec<u32>, Vec<(u32, Rational)>>> = BTreeMap::new();
    for s in 2..=n {
        let mut per_tuple = BTreeMap::new();
        if let Some(table) = structure.table(s) {
            for (tuple, value) in table {
                let flat = structure
                    .flat_coords(value)
                    .expect("table values are harmonic projections");
                per_tuple.insert(
                    tuple.clone(),
                    flat.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (i as u32, c))
                        .collect(),
                );
            }
        }
        coords.insert(s, per_tuple);
    }

    let mut checked = 0usize;
    for tuple in super::index_tuples(structure.basis().len(), n) {
        // Every term of the identity lands in one output degree.
        let total: i64 = tuple.iter().map(|&i| degrees[i as usize] as i64).sum();
        if !(0..=top).contains(&(total + 3 - n as i64)) {
            continue;
        }
        checked += 1;

        let mut residue = Element::zero();
        for s in 2..=n {
            let outer_arity = n - s + 1;
            if outer_arity < 2 {
                continue;
            }
            for r in 0..=n - s {
                let t = n - s - r;
                let Some(inner) = coords[&s].get(&tuple[r..r + s]) else { continue };
                let prefix: usize = tuple[..r].iter().map(|&i| degrees[i as usize]).sum();
                let negative = (r + s * t + s * prefix) % 2 == 1;
                for (j, c) in inner {
                    let mut outer = Vec::with_capacity(outer_arity);
                    outer.extend_from_slice(&tuple[..r]);
                    outer.push(*j);
                    outer.extend_from_slice(&tuple[r + s..]);
                    if let Some(value) = structure.table_value(outer_arity, &outer) {
                        let signed = if negative { value.scale(c).neg() } else { value.scale(c) };
                        residue = residue.add(&signed);
                    }
                }
            }
        }

        if !residue.is_zero() {
            let names: Vec<String> =
                tuple.iter().map(|&i| structure.name_of(i).to_string()).collect();
            report.add_witness(names, format!("residue {}", residue.display(structure.space())));
        }
    }
    report.note("tuples_checked", checked.to_string());
    report
}

/// The binary operation `a . b = p(ab)` is associative on the harmonic
/// space, and absorbing the projection changes nothing:
/// `p(p(ab) c) = p(abc) = p(a p(bc))` for all basis triples.
pub fn harmonic_associativity_check(dga: &Dga, hodge: &HodgeData) -> CheckReport {
    let mut report = CheckReport::new("harmonic product associativity");
    let space = dga.space();
    let basis = hodge.flat_harmonic_basis();

    for a in &basis {
        for b in &basis {
            let ab = hodge.harmonic_part(&dga.multiply(a, b));
            for c in &basis {
                let bc = hodge.harmonic_part(&dga.multiply(b, c));
                let left = hodge.harmonic_part(&dga.multiply(&ab, c));
                let right = hodge.harmonic_part(&dga.multiply(a, &bc));
                let flat = hodge.harmonic_part(&dga.multiply(&dga.multiply(a, b), c));
                if left != right || left != flat {
                    report.add_witness(
                        vec![a.display(space), b.display(space), c.display(space)],
                        format!(
                            "p(p(ab)c) = {}, p(a p(bc)) = {}, p(abc) = {}",
                            left.display(space),
                            right.display(space),
                            flat.display(space)
                        ),
                    );
                }
            }
        }
    }
    report.note("triples_checked", (basis.len().pow(3)).to_string());
    report
}

/// The harmonic space with the product `p(ab)` maps isomorphically onto the
/// quotient cohomology ring: every harmonic vector is closed, taking classes
/// is bijective in each degree, and classes multiply compatibly.
pub fn ring_isomorphism_check(dga: &Dga, hodge: &HodgeData) -> CheckReport {
    let mut report = CheckReport::new("harmonic ring is the cohomology ring");
    let space = dga.space();
    let ring = dga.cohomology_ring();

    for n in 0..=space.top() {
        let basis = hodge.harmonic_basis(n);
        if basis.len() != ring.betti(n) {
            report.add_witness(
                vec![format!("degree {n}")],
                format!("{} harmonic vectors vs betti {}", basis.len(), ring.betti(n)),
            );
            continue;
        }
        if basis.is_empty() {
            continue;
        }
        let mut columns = Vec::new();
        let mut closed = true;
        for h in basis {
            match ring.class_of(n, h) {
                Ok(class) => columns.push(class.coords),
                Err(e) => {
                    closed = false;
                    report.add_witness(vec![h.display(space)], e.to_string());
                }
            }
        }
        if closed {
            let phi = Mat::from_cols(ring.betti(n), &columns);
            if phi.rank() != ring.betti(n) {
                report.add_witness(
                    vec![format!("degree {n}")],
                    format!("classes of harmonic vectors span rank {}", phi.rank()),
                );
            }
        }
    }

    let basis = hodge.flat_harmonic_basis();
    for a in &basis {
        let na = a.homogeneous_degree().expect("harmonic basis vectors are homogeneous");
        let ca = ring.class_of(na, a);
        for b in &basis {
            let nb = b.homogeneous_degree().expect("harmonic basis vectors are homogeneous");
            let (Ok(ca), Ok(cb)) = (&ca, ring.class_of(nb, b)) else { continue };
            let product = hodge.harmonic_part(&dga.multiply(a, b));
            if na + nb > space.top() {
                if !product.is_zero() {
                    report.add_witness(
                        vec![a.display(space), b.display(space)],
                        "product above the top degree",
                    );
                }
                continue;
            }
            let via_harmonic = ring
                .class_of(na + nb, &product)
                .expect("harmonic projections are closed");
            let via_classes = ring.class_product(ca, &cb);
            if via_harmonic != via_classes {
                report.add_witness(
                    vec![a.display(space), b.display(space)],
                    format!(
                        "class of p(ab) is {:?}, product of classes is {:?}",
                        via_harmonic.coords, via_classes.coords
                    ),
                );
            }
        }
    }
    report.note("pairs_checked", basis.len().pow(2).to_string());
    report
}

impl AInfinityStructure {
    /// `m_2` of two harmonic elements, the transferred product.
    pub fn harmonic_product(&self, a: &Element, b: &Element) -> Result<Element, TransferError> {
        self.apply(&[a.clone(), b.clone()])
    }
}
