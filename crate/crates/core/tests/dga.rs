//! Algebra-layer tests over the built-in corpus: the three loaders, the
//! axiom suite, structure-file round trips, and quotient cohomology.

use ainfty_core::corpus;
use ainfty_core::dga::lie::LieStructure;
use ainfty_core::dga::simplicial::{ComplexError, SimplicialComplex};
use ainfty_core::dga::{Dga, DgaError};
use ainfty_core::graded::Element;
use ainfty_core::rational::int;

#[test]
fn corpus_entries_build_and_validate() {
    for entry in corpus::ENTRIES {
        let dga = corpus::build(entry.name).unwrap();
        let report = dga.validate();
        assert!(report.passed(), "{} failed validation:\n{report}", entry.name);
    }
}

#[test]
fn corpus_betti_numbers() {
    let expected: [(&str, &[usize]); 6] = [
        ("interval", &[1, 0]),
        ("circle", &[1, 1]),
        ("sphere2", &[1, 0, 1]),
        ("torus", &[1, 2, 1]),
        ("heisenberg", &[1, 2, 2, 1]),
        ("abelian3", &[1, 3, 3, 1]),
    ];
    for (name, betti) in expected {
        let ring = corpus::build(name).unwrap().cohomology_ring();
        assert_eq!(ring.betti_numbers(), betti, "betti numbers of {name}");
    }
}

#[test]
fn corpus_complex_counts() {
    let complex = |name: &str| SimplicialComplex::from_json(&corpus::emit(name).unwrap()).unwrap();

    let torus = complex("torus");
    assert_eq!((torus.count(0), torus.count(1), torus.count(2)), (9, 27, 18));
    assert_eq!(torus.euler_characteristic(), 0);

    let sphere = complex("sphere2");
    assert_eq!((sphere.count(0), sphere.count(1), sphere.count(2)), (4, 6, 4));
    assert_eq!(sphere.euler_characteristic(), 2);

    assert_eq!(complex("interval").euler_characteristic(), 1);
    assert_eq!(complex("circle").euler_characteristic(), 0);
}

#[test]
fn structure_file_round_trip() {
    for entry in corpus::ENTRIES {
        let dga = corpus::build(entry.name).unwrap();
        let text = dga.to_structure_file();
        let reparsed = Dga::from_structure_file(&text)
            .unwrap_or_else(|e| panic!("{} round trip failed: {e}", entry.name));
        assert_eq!(
            reparsed.to_structure_file(),
            text,
            "{} structure file is not a fixed point of emit/parse",
            entry.name
        );
        assert_eq!(
            reparsed.cohomology_ring().betti_numbers(),
            dga.cohomology_ring().betti_numbers(),
            "{} betti numbers changed across round trip",
            entry.name
        );
    }
}

#[test]
fn heisenberg_products_and_differential() {
    let dga = corpus::build("heisenberg").unwrap();
    let space = dga.space();
    let el = |label: &str| Element::basis(space.lookup(label).unwrap());

    let xy = dga.multiply(&el("x"), &el("y"));
    assert_eq!(xy, el("xy"));
    assert_eq!(dga.multiply(&el("y"), &el("x")), el("xy").neg());
    assert!(dga.multiply(&el("z"), &el("z")).is_zero());
    assert_eq!(dga.multiply(&el("x"), &el("yz")), el("xyz"));

    assert_eq!(dga.differential().apply(&el("z")), el("xy"));
    assert!(dga.differential().apply(&el("xz")).is_zero());
    assert!(dga.differential().apply(&el("yz")).is_zero());

    let unit = dga.unit_element().unwrap();
    assert_eq!(dga.multiply(unit, &el("xyz")), el("xyz"));
}

#[test]
fn heisenberg_cohomology_classes() {
    let dga = corpus::build("heisenberg").unwrap();
    let space = dga.space();
    let ring = dga.cohomology_ring();
    let el = |label: &str| Element::basis(space.lookup(label).unwrap());

    // z is not closed, so it has no class.
    assert!(ring.class_of(1, &el("z")).is_err());

    // [x][y] vanishes because xy = dz is exact; [x][yz] spans the top degree.
    let x = ring.class_of(1, &el("x")).unwrap();
    let y = ring.class_of(1, &el("y")).unwrap();
    let yz = ring.class_of(2, &el("yz")).unwrap();
    assert!(ring.class_product(&x, &y).is_zero());
    assert!(!ring.class_product(&x, &yz).is_zero());
}

#[test]
fn circle_cohomology_reduction() {
    let ring = corpus::build("circle").unwrap().cohomology_ring();
    assert_eq!(ring.betti(1), 1);
    // Three vertices, one component: the coboundary image is 2-dimensional.
    assert_eq!(ring.exact_basis_in(1).len(), 2);
    // Reducing the chosen representative gives the unit coordinate vector.
    let rep = ring.representative(1, 0).clone();
    let class = ring.class_of(1, &rep).unwrap();
    assert_eq!(class.coords, vec![int(1)]);
    // Shifting the representative by an exact element does not move the class.
    let shifted = rep.add(&ring.exact_basis_in(1)[0]);
    assert_eq!(ring.class_of(1, &shifted).unwrap().coords, vec![int(1)]);
}

#[test]
fn jacobi_holds_iff_differential_squares_to_zero() {
    // The Heisenberg Lie algebra satisfies Jacobi and its Chevalley-Eilenberg
    // algebra passes every axiom.
    let heis = LieStructure::new(3, &[(1, 2, 3, int(1))]).unwrap();
    assert!(heis.jacobi_check().is_ok());
    let dga = heis.chevalley_eilenberg_dga().unwrap();
    assert!(dga.validate().passed());

    // [e1,e2]=e3, [e1,e3]=e1 violates Jacobi on (1,2,3); the same structure
    // constants give a non-squaring differential.
    let bad = LieStructure::new(3, &[(1, 2, 3, int(1)), (1, 3, 1, int(1))]).unwrap();
    let failure = bad.jacobi_check().unwrap_err();
    assert_eq!((failure.i, failure.j, failure.k), (1, 2, 3));
    assert!(bad.chevalley_eilenberg_dga().is_err());

    let report = bad.chevalley_eilenberg_dga_unchecked().validate();
    let dd = report
        .failures()
        .find(|a| a.axiom == "differential squares to zero")
        .expect("d^2 = 0 must fail when Jacobi fails");
    assert!(dd.witness.is_some());
}

#[test]
fn lie_structure_input_validation() {
    assert!(LieStructure::new(3, &[(2, 1, 3, int(1))]).is_err(), "indices must satisfy i < j");
    assert!(LieStructure::new(3, &[(1, 4, 2, int(1))]).is_err(), "index out of range");
    assert!(
        LieStructure::new(3, &[(1, 2, 3, int(1)), (1, 2, 3, int(2))]).is_err(),
        "duplicate bracket"
    );
}

#[test]
fn simplicial_input_validation() {
    let v = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<Vec<_>>();

    let err = SimplicialComplex::new(
        v(&["v0", "v1", "v2"]),
        &[v(&["v0", "v1", "v2"]), v(&["v0", "v1"])],
    )
    .unwrap_err();
    assert!(matches!(err, ComplexError::MissingFace { .. }), "closure violation: {err}");

    let err = SimplicialComplex::from_maximal(v(&["v0", "v1"]), &[v(&["v0", "v0"])]).unwrap_err();
    assert!(matches!(err, ComplexError::DegenerateSimplex(_)));

    let err = SimplicialComplex::from_maximal(v(&["v0"]), &[v(&["v0", "v9"])]).unwrap_err();
    assert!(matches!(err, ComplexError::UnknownVertex(_)));
}

#[test]
fn structure_file_errors() {
    let parse_err = |text: &str| match Dga::from_structure_file(text) {
        Err(DgaError::Parse(e)) => e,
        other => panic!("expected parse error, got {other:?}"),
    };

    assert!(parse_err("not json").line.is_some());
    parse_err(r#"{"degrees": {"0": ["a", "a"]}}"#);
    parse_err(r#"{"degrees": {"0": ["a"], "1": ["b"]}, "differential": [{"from": "a", "to": [{"basis": "a", "coeff": "1"}]}]}"#);
    parse_err(r#"{"degrees": {"0": ["a"]}, "product": [{"left": "a", "right": "ghost", "result": []}]}"#);
    parse_err(r#"{"degrees": {"0": ["a"], "1": ["b"]}, "unit": "b"}"#);
    parse_err(r#"{"degrees": {"0": ["a"]}, "differential": [{"from": "a", "to": [{"basis": "a", "coeff": "1/0"}]}]}"#);

    // A well-formed file whose gram matrix is not positive definite is a
    // validation failure, not a parse failure.
    let text = r#"{"degrees": {"0": ["a"]}, "gram": {"0": [["-1"]]}}"#;
    match Dga::from_structure_file(text) {
        Err(DgaError::Invalid(report)) => assert!(!report.passed()),
        other => panic!("expected validation failure, got {other:?}"),
    }
}

#[test]
fn emitted_corpus_files_parse_by_kind() {
    for entry in corpus::ENTRIES {
        let text = corpus::emit(entry.name).unwrap();
        match entry.kind {
            corpus::FileKind::Simplicial => {
                SimplicialComplex::from_json(&text).unwrap();
            }
            corpus::FileKind::Lie => {
                LieStructure::from_json(&text).unwrap();
            }
            corpus::FileKind::Dga => {
                Dga::from_structure_file(&text).unwrap();
            }
        }
    }
}
