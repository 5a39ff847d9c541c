//! Triple Massey products computed from the Hodge data, and the comparison
//! of `m_3` against them.

use super::AInfinityStructure;
use crate::dga::Dga;
use crate::graded::{Element, GradedVectorSpace};
use crate::hodge::HodgeData;
use crate::matrix::Mat;
use crate::report::CheckReport;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MasseyError {
    NotHarmonic(String),
    NotHomogeneous(String),
    /// One of the two pairwise products is nonzero in cohomology.
    NotDefined(String),
}

impl fmt::Display for MasseyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MasseyError::NotHarmonic(w) => write!(f, "input is not harmonic: {w}"),
            MasseyError::NotHomogeneous(w) => {
                write!(f, "input is not homogeneous and nonzero: {w}")
            }
            MasseyError::NotDefined(w) => write!(f, "triple product is not defined: {w}"),
        }
    }
}

impl std::error::Error for MasseyError {}

#[derive(Debug, Clone)]
pub struct MasseyProduct {
    /// Harmonic representative of the chosen cocycle
    /// `(-1)^|a| a w - u c` with `du = ab`, `dw = bc`.
    pub representative: Element,
    /// Canonical basis of `p(a H) + p(H c)` in the target degree; the class
    /// of the product is well defined modulo this span.
    pub indeterminacy: Vec<Element>,
}

impl MasseyProduct {
    /// The signs `e` in `{+1, -1}` with `value = e * representative` modulo
    /// the indeterminacy span.
    pub fn admissible_signs(&self, space: &GradedVectorSpace, value: &Element) -> Vec<i32> {
        [1, -1]
            .into_iter()
            .filter(|&sign| {
                let scaled = if sign == 1 {
                    self.representative.clone()
                } else {
                    self.representative.neg()
                };
                in_span(space, &self.indeterminacy, &value.sub(&scaled))
            })
            .collect()
    }
}

/// The triple product `<a, b, c>` of harmonic elements whose pairwise
/// products vanish in cohomology. With `u = Q(ab)` and `w = Q(bc)`, both
/// `du = ab` and `dw = bc` hold, the combination `(-1)^|a| a w - u c` is
/// closed, and its harmonic part represents the product.
pub fn massey_triple(
    dga: &Dga,
    hodge: &HodgeData,
    a: &Element,
    b: &Element,
    c: &Element,
) -> Result<MasseyProduct, MasseyError> {
    let space = dga.space();
    let degree = |e: &Element| -> Result<usize, MasseyError> {
        e.homogeneous_degree().ok_or_else(|| MasseyError::NotHomogeneous(e.display(space)))
    };
    for e in [a, b, c] {
        if !hodge.is_harmonic(e) {
            return Err(MasseyError::NotHarmonic(e.display(space)));
        }
    }
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Ok(MasseyProduct { representative: Element::zero(), indeterminacy: Vec::new() });
    }
    let (da, db, dc) = (degree(a)?, degree(b)?, degree(c)?);

    let ab = dga.multiply(a, b);
    let bc = dga.multiply(b, c);
    if !hodge.harmonic_part(&ab).is_zero() {
        return Err(MasseyError::NotDefined(format!(
            "the product of the first two inputs is {} in cohomology",
            hodge.harmonic_part(&ab).display(space)
        )));
    }
    if !hodge.harmonic_part(&bc).is_zero() {
        return Err(MasseyError::NotDefined(format!(
            "the product of the last two inputs is {} in cohomology",
            hodge.harmonic_part(&bc).display(space)
        )));
    }

    let u = hodge.homotopy().apply(&ab);
    let w = hodge.homotopy().apply(&bc);
    let aw = dga.multiply(a, &w);
    let uc = dga.multiply(&u, c);
    let cocycle = if da % 2 == 0 { aw.sub(&uc) } else { aw.neg().sub(&uc) };
    let representative = hodge.harmonic_part(&cocycle);

    // Indeterminacy: harmonic projections of a times degree |b|+|c|-1
    // harmonics and degree |a|+|b|-1 harmonics times c.
    let target = da as i64 + db as i64 + dc as i64 - 1;
    if !(0..=space.top() as i64).contains(&target) {
        return Ok(MasseyProduct { representative, indeterminacy: Vec::new() });
    }
    let target = target as usize;
    let mut spanning: Vec<Vec<crate::rational::Rational>> = Vec::new();
    let mut push = |e: Element| {
        if !e.is_zero() {
            spanning.push(e.coords_in(space, target));
        }
    };
    if db + dc >= 1 && db + dc - 1 <= space.top() {
        for h in hodge.harmonic_basis(db + dc - 1) {
            push(hodge.harmonic_part(&dga.multiply(a, h)));
        }
    }
    if da + db >= 1 && da + db - 1 <= space.top() {
        for h in hodge.harmonic_basis(da + db - 1) {
            push(hodge.harmonic_part(&dga.multiply(h, c)));
        }
    }
    let indeterminacy = Mat::from_cols(space.dim(target as i64), &spanning)
        .column_space_basis()
        .into_iter()
        .map(|v| Element::from_coords(target, &v))
        .collect();

    Ok(MasseyProduct { representative, indeterminacy })
}

/// Compares `m_3` with the triple products over every flat basis triple on
/// which the product is defined: some global sign `e` must satisfy
/// `m_3(a,b,c) = e <a,b,c>` modulo indeterminacy, uniformly in the triple.
pub fn compare_m3_massey(
    dga: &Dga,
    hodge: &HodgeData,
    structure: &AInfinityStructure,
) -> CheckReport {
    assert!(structure.max_arity() >= 3, "comparison needs the ternary operation");
    let mut report = CheckReport::new("m_3 represents the triple product");
    report.note("sign_variant", structure.variant().as_str());
    let space = dga.space();
    let basis = structure.basis();

    let mut global: BTreeSet<i32> = [1, -1].into();
    let mut defined = 0usize;
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            for (k, c) in basis.iter().enumerate() {
                let product = match massey_triple(dga, hodge, a, b, c) {
                    Ok(p) => p,
                    Err(MasseyError::NotDefined(_)) => continue,
                    Err(e) => panic!("basis vectors are harmonic and homogeneous: {e}"),
                };
                defined += 1;

                let tuple = [i as u32, j as u32, k as u32];
                let m3 = structure
                    .table_value(3, &tuple)
                    .cloned()
                    .unwrap_or_else(Element::zero);

                let admissible: BTreeSet<i32> =
                    product.admissible_signs(space, &m3).into_iter().collect();
                if admissible.is_empty() {
                    report.add_witness(
                        tuple.iter().map(|&t| structure.name_of(t).to_string()).collect(),
                        format!(
                            "m_3 = {}, representative = {}, indeterminacy rank {}",
                            m3.display(space),
                            product.representative.display(space),
                            product.indeterminacy.len()
                        ),
                    );
                }
                global = global.intersection(&admissible).copied().collect();
            }
        }
    }

    if global.is_empty() {
        report.add_witness(
            vec!["all defined triples".into()],
            "no single sign works for every defined triple",
        );
    } else {
        let signs: Vec<String> = global.iter().map(|s| format!("{s:+}")).collect();
        report.note("global_sign", signs.join(","));
    }
    report.note("defined_triples", defined.to_string());
    report
}

fn in_span(space: &GradedVectorSpace, span: &[Element], e: &Element) -> bool {
    if e.is_zero() {
        return true;
    }
    let Some(degree) = e.homogeneous_degree() else { return false };
    if span.is_empty() {
        return false;
    }
    if span[0].homogeneous_degree() != Some(degree) {
        return false;
    }
    let dim = space.dim(degree as i64);
    let m = Mat::from_cols(
        dim,
        &span.iter().map(|v| v.coords_in(space, degree)).collect::<Vec<_>>(),
    );
    m.solve(&e.coords_in(space, degree)).is_some()
}
