use keller::format::{
    parse_map, parse_matrix, parse_polynomial, parse_spec, print_map, print_matrix,
    print_polynomial, print_spec,
};
use keller_core::druzkowski::{gen_random_druzkowski, gen_triangular_keller};
use keller_core::{PolyMap, Polynomial, Rational, RationalMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), 1i64..=1_000_000, 0u32..3).prop_map(|(p, q, k)| {
        Rational::new(BigInt::from(p) * BigInt::from(10).pow(9 * k), q.into())
    })
}

fn poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..=12, nvars), rational()), 0..=6)
        .prop_map(move |terms| Polynomial::from_terms(nvars, terms).unwrap())
}

fn poly_map() -> impl Strategy<Value = PolyMap> {
    (1usize..=5)
        .prop_flat_map(|n| prop::collection::vec(poly(n), n))
        .prop_map(|c| PolyMap::new(c).unwrap())
}

proptest! {
    #[test]
    fn polynomial_round_trip((n, p) in (1usize..=6).prop_flat_map(|n| (Just(n), poly(n)))) {
        let text = print_polynomial(&p);
        prop_assert_eq!(parse_polynomial(&text, n).unwrap(), p);
    }

    #[test]
    fn printing_is_canonical((n, p) in (1usize..=4).prop_flat_map(|n| (Just(n), poly(n)))) {
        // spacing and term order must not matter to the parser
        let text = print_polynomial(&p);
        let loose = text.replace(" + ", "+").replace(" - ", "  -  ").replace('*', " * ");
        prop_assert_eq!(print_polynomial(&parse_polynomial(&loose, n).unwrap()), text);
    }

    #[test]
    fn map_round_trip(f in poly_map()) {
        prop_assert_eq!(parse_map(&print_map(&f)).unwrap(), f);
    }

    #[test]
    fn matrix_round_trip(v in prop::collection::vec(rational(), 12)) {
        let m = RationalMatrix::new(3, 4, v).unwrap();
        prop_assert_eq!(parse_matrix(&print_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn generated_files_round_trip(n in 1usize..=4, d in 2u32..=3, seed in any::<u64>()) {
        let f = gen_triangular_keller(n, d, seed, 3).unwrap();
        prop_assert_eq!(parse_map(&print_map(&f)).unwrap(), f);
        let spec = gen_random_druzkowski(n, d, seed, 3).unwrap();
        let back = parse_spec(&print_spec(&spec)).unwrap();
        prop_assert_eq!(back.expand(), spec.expand());
        prop_assert_eq!(back, spec);
    }
}

#[test]
fn canonical_example_text() {
    let p = parse_polynomial("x1 - 3/2*x2^2*x3 + 1", 3).unwrap();
    // descending graded order puts the cubic term first
    assert_eq!(print_polynomial(&p), "-3/2*x2^2*x3 + x1 + 1");
    assert_eq!(parse_polynomial(&print_polynomial(&p), 3).unwrap(), p);
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let f = parse_map("# classic pair\nnvars: 2\n\nF1: x1 + x2^3\n  F2 : x2  \n").unwrap();
    assert_eq!(print_map(&f), "nvars: 2\nF1: x2^3 + x1\nF2: x2\n");
}
