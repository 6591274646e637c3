use std::path::PathBuf;

use cs_d4::fixture::{
    cs_polynomial_from_json_str, cs_polynomial_to_json, reference_corpus, render, solved_fixture_name, ReferenceKind,
};
use cs_d4::solver::{solve, specialize, CSPolynomial};
use num_rational::BigRational;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[test]
fn symbolic_entries_match_solver() {
    for e in reference_corpus().unwrap().into_iter().filter(|e| e.kind == ReferenceKind::Symbolic) {
        assert_eq!(solve(e.m).unwrap().polynomial, e.polynomial, "P{}", e.m);
    }
}

#[test]
fn specialized_entries_match_solver() {
    for e in reference_corpus().unwrap() {
        let Some(k) = e.kind.kappa() else { continue };
        let got = specialize(&solve(e.m).unwrap(), &BigRational::from_integer(k.into())).unwrap();
        assert_eq!(got, e.polynomial, "{} P{}", e.kind, e.m);
    }
}

#[test]
fn specialized_entries_agree_with_symbolic_ones() {
    let corpus = reference_corpus().unwrap();
    for e in corpus.iter().filter(|e| e.kind == ReferenceKind::Symbolic) {
        for kind in [ReferenceKind::Character, ReferenceKind::Monomial] {
            let k = BigRational::from_integer(kind.kappa().unwrap().into());
            let special = corpus.iter().find(|s| s.kind == kind && s.m == e.m).expect("entry in every section");
            assert_eq!(e.polynomial.substitute(&k).unwrap(), special.polynomial, "{kind} P{}", e.m);
        }
    }
}

/// Set CS_D4_REGENERATE=1 to rewrite the solved fixtures from the corpus text.
#[test]
fn solved_fixtures_match_corpus_and_solver() {
    let regenerate = std::env::var_os("CS_D4_REGENERATE").is_some();
    for e in reference_corpus().unwrap().into_iter().filter(|e| e.kind == ReferenceKind::Symbolic) {
        let from_corpus = CSPolynomial::from_polynomial(e.m, &e.polynomial).unwrap();
        let path = fixtures().join(solved_fixture_name(e.m));
        if regenerate {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, render(&cs_polynomial_to_json(&from_corpus))).unwrap();
        }
        let text = std::fs::read_to_string(&path).unwrap_or_else(|err| panic!("{}: {err}", path.display()));
        let stored = cs_polynomial_from_json_str(&text).unwrap();
        assert_eq!(stored, from_corpus, "{}", path.display());
        assert_eq!(stored, solve(e.m).unwrap(), "{}", path.display());
        assert_eq!(render(&cs_polynomial_to_json(&stored)), text, "{} is not in canonical form", path.display());
    }
}
