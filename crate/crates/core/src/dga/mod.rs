//! Differential graded algebras with an inner product.
//!
//! A [`Dga`] is assembled from a graded space, a degree `+1` differential,
//! a basis-pair product table, an optional two-sided unit, and a
//! positive-definite graded bilinear form. Assembly is unchecked; the axioms
//! (`d^2 = 0`, degree additivity, associativity, the graded Leibniz rule,
//! unit laws, definiteness of the form) are verified by [`Dga::validate`],
//! which reports every axiom separately with a witness basis tuple on
//! failure. Loaders treat a failed report as data, not as a panic.

mod cohomology;
mod file;
pub mod lie;
pub mod simplicial;

pub use cohomology::CohomologyRing;
pub use file::ParseError;

use crate::graded::{compose, BasisKey, Element, GradedBilinearForm, GradedMap, GradedVectorSpace};
use crate::report::{AxiomCheck, ValidationReport};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Dga {
    space: Arc<GradedVectorSpace>,
    differential: GradedMap,
    product: HashMap<(BasisKey, BasisKey), Element>,
    unit: Option<Element>,
    form: GradedBilinearForm,
}

#[derive(Debug)]
pub enum DgaError {
    Parse(ParseError),
    Invalid(Box<ValidationReport>),
}

impl fmt::Display for DgaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DgaError::Parse(e) => write!(f, "{e}"),
            DgaError::Invalid(report) => {
                write!(f, "structure violates DGA axioms:")?;
                for a in report.failures() {
                    write!(f, "\n  {}", a.axiom)?;
                    if let Some(w) = &a.witness {
                        write!(f, ": {w}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for DgaError {}

impl From<ParseError> for DgaError {
    fn from(e: ParseError) -> Self {
        DgaError::Parse(e)
    }
}

impl Dga {
    pub fn new(
        space: Arc<GradedVectorSpace>,
        differential: GradedMap,
        product: HashMap<(BasisKey, BasisKey), Element>,
        unit: Option<Element>,
        form: GradedBilinearForm,
    ) -> Self {
        assert_eq!(differential.shift(), 1, "differential must raise degree by one");
        Dga { space, differential, product, unit, form }
    }

    /// Parses and validates an explicit structure file (JSON). Malformed
    /// input is a [`DgaError::Parse`]; a well-formed structure that breaks an
    /// axiom is a [`DgaError::Invalid`] carrying the full report.
    pub fn from_structure_file(text: &str) -> Result<Dga, DgaError> {
        let dga = file::parse(text)?;
        let report = dga.validate();
        if report.passed() {
            Ok(dga)
        } else {
            Err(DgaError::Invalid(Box::new(report)))
        }
    }

    /// Serializes back to the structure-file format, in basis order, with
    /// zero entries omitted. Stable output: re-emitting a parsed file is
    /// byte-identical.
    pub fn to_structure_file(&self) -> String {
        file::emit(self)
    }

    pub fn space(&self) -> &Arc<GradedVectorSpace> {
        &self.space
    }

    pub fn differential(&self) -> &GradedMap {
        &self.differential
    }

    pub fn form(&self) -> &GradedBilinearForm {
        &self.form
    }

    pub fn unit_element(&self) -> Option<&Element> {
        self.unit.as_ref()
    }

    pub fn basis_product(&self, a: BasisKey, b: BasisKey) -> Element {
        self.product.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn product_table(&self) -> &HashMap<(BasisKey, BasisKey), Element> {
        &self.product
    }

    /// Bilinear extension of the basis product table.
    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                if let Some(p) = self.product.get(&(ka, kb)) {
                    let c = ca * cb;
                    for (kp, cp) in p.terms() {
                        out.add_term(kp, cp * &c);
                    }
                }
            }
        }
        out
    }

    /// Full axiom suite. Each axiom reports independently; the first failing
    /// basis tuple per axiom is recorded as the witness.
    pub fn validate(&self) -> ValidationReport {
        let mut axioms = Vec::new();

        axioms.push(self.check_d_squared());
        axioms.push(self.check_degree_additivity());
        axioms.push(self.check_associativity());
        axioms.push(self.check_leibniz());
        axioms.push(self.check_unit());
        axioms.push(self.check_form());

        ValidationReport { axioms }
    }

    fn check_d_squared(&self) -> AxiomCheck {
        let dd = compose(&self.differential, &self.differential);
        let witness = (!dd.is_zero()).then(|| {
            let key = self
                .space
                .basis_keys()
                .find(|&k| !dd.apply(&Element::basis(k)).is_zero())
                .expect("nonzero map moves some basis vector");
            format!(
                "d(d({})) = {}",
                self.space.label(key),
                dd.apply(&Element::basis(key)).display(&self.space)
            )
        });
        AxiomCheck { axiom: "differential squares to zero".into(), passed: witness.is_none(), witness }
    }

    fn check_degree_additivity(&self) -> AxiomCheck {
        for a in self.space.basis_keys() {
            for b in self.space.basis_keys() {
                let p = self.basis_product(a, b);
                if p.is_zero() {
                    continue;
                }
                if p.homogeneous_degree() != Some(a.0 + b.0) {
                    return AxiomCheck {
                        axiom: "product adds degrees".into(),
                        passed: false,
                        witness: Some(format!(
                            "{} * {} = {} is not homogeneous of degree {}",
                            self.space.label(a),
                            self.space.label(b),
                            p.display(&self.space),
                            a.0 + b.0
                        )),
                    };
                }
            }
        }
        AxiomCheck { axiom: "product adds degrees".into(), passed: true, witness: None }
    }

    fn check_associativity(&self) -> AxiomCheck {
        let keys: Vec<BasisKey> = self.space.basis_keys().collect();
        for &a in &keys {
            let ea = Element::basis(a);
            for &b in &keys {
                let ab = self.basis_product(a, b);
                let eb = Element::basis(b);
                for &c in &keys {
                    let left = self.multiply(&ab, &Element::basis(c));
                    let right = self.multiply(&ea, &self.multiply(&eb, &Element::basis(c)));
                    if left != right {
                        return AxiomCheck {
                            axiom: "product is associative".into(),
                            passed: false,
                            witness: Some(format!(
                                "({0}*{1})*{2} = {3} but {0}*({1}*{2}) = {4}",
                                self.space.label(a),
                                self.space.label(b),
                                self.space.label(c),
                                left.display(&self.space),
                                right.display(&self.space)
                            )),
                        };
                    }
                }
            }
        }
        AxiomCheck { axiom: "product is associative".into(), passed: true, witness: None }
    }

    fn check_leibniz(&self) -> AxiomCheck {
        let keys: Vec<BasisKey> = self.space.basis_keys().collect();
        for &a in &keys {
            let ea = Element::basis(a);
            let da = self.differential.apply(&ea);
            for &b in &keys {
                let eb = Element::basis(b);
                let lhs = self.differential.apply(&self.basis_product(a, b));
                // d(ab) = (da)b + (-1)^{|a|} a(db)
                let mut rhs = self.multiply(&da, &eb);
                let adb = self.multiply(&ea, &self.differential.apply(&eb));
                rhs = if a.0 % 2 == 0 { rhs.add(&adb) } else { rhs.sub(&adb) };
                if lhs != rhs {
                    return AxiomCheck {
                        axiom: "differential satisfies the graded Leibniz rule".into(),
                        passed: false,
                        witness: Some(format!(
                            "d({0}*{1}) = {2} but (d{0})*{1} + (-1)^{3} {0}*(d{1}) = {4}",
                            self.space.label(a),
                            self.space.label(b),
                            lhs.display(&self.space),
                            a.0,
                            rhs.display(&self.space)
                        )),
                    };
                }
            }
        }
        AxiomCheck {
            axiom: "differential satisfies the graded Leibniz rule".into(),
            passed: true,
            witness: None,
        }
    }

    fn check_unit(&self) -> AxiomCheck {
        let axiom = "unit is a closed two-sided identity".to_string();
        let Some(unit) = &self.unit else {
            return AxiomCheck { axiom, passed: true, witness: Some("no unit declared".into()) };
        };
        if unit.homogeneous_degree() != Some(0) {
            return AxiomCheck {
                axiom,
                passed: false,
                witness: Some(format!("unit {} is not of degree 0", unit.display(&self.space))),
            };
        }
        let du = self.differential.apply(unit);
        if !du.is_zero() {
            return AxiomCheck {
                axiom,
                passed: false,
                witness: Some(format!("d(unit) = {}", du.display(&self.space))),
            };
        }
        for key in self.space.basis_keys() {
            let e = Element::basis(key);
            let left = self.multiply(unit, &e);
            let right = self.multiply(&e, unit);
            if left != e || right != e {
                return AxiomCheck {
                    axiom,
                    passed: false,
                    witness: Some(format!(
                        "unit*{0} = {1}, {0}*unit = {2}",
                        self.space.label(key),
                        left.display(&self.space),
                        right.display(&self.space)
                    )),
                };
            }
        }
        AxiomCheck { axiom, passed: true, witness: None }
    }

    fn check_form(&self) -> AxiomCheck {
        // The form type re-validates cheaply; a Dga can only be built with a
        // validated form, so this records the fact in the report.
        let ok = GradedBilinearForm::new(
            &self.space,
            (0..=self.space.top()).map(|n| self.form.gram(n).clone()).collect(),
        )
        .is_ok();
        AxiomCheck {
            axiom: "inner product is symmetric positive definite".into(),
            passed: ok,
            witness: None,
        }
    }

    /// Quotient cohomology ring `ker d / im d`, computed without any use of
    /// the inner product. See [`CohomologyRing`].
    pub fn cohomology_ring(&self) -> CohomologyRing {
        CohomologyRing::compute(self)
    }
}
