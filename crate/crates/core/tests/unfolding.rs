use igq_core::algebra::{parse_polynomial, rat, Monomial, Polynomial, Ring, TermOrder};
use igq_core::unfolding::{classify_corank1, match_quantum_factor, milnor_data};
use igq_core::Error;
use proptest::prelude::*;

fn ring(names: &[&str]) -> Ring {
    Ring::new(names, TermOrder::Grevlex).unwrap()
}

#[test]
fn pure_powers() {
    let r = ring(&["x"]);
    for m in 2..=9u32 {
        let g = milnor_data(&r.var(0).pow(m)).unwrap();
        assert_eq!(g.milnor_number, m as usize - 1);
        assert_eq!(g.monomial_basis, (0..m - 1).map(|e| Monomial::var(0, e)).collect::<Vec<_>>());
        assert_eq!(g.corank, usize::from(m > 2));
    }
}

#[test]
fn two_variable_germs() {
    let r = ring(&["x", "y"]);
    let g = |s: &str| milnor_data(&parse_polynomial(&r, s).unwrap());
    // A_3 in two variables: corank one after the Morse direction splits off
    let a3 = g("x^4 + y^2").unwrap();
    assert_eq!((a3.corank, a3.milnor_number), (1, 3));
    assert_eq!(classify_corank1(a3.corank, a3.milnor_number).unwrap(), "A_3");
    // D_4 has corank two and is refused by the corank-one classifier
    let d4 = g("x^2*y - y^3").unwrap();
    assert_eq!((d4.corank, d4.milnor_number), (2, 4));
    assert_eq!(classify_corank1(d4.corank, d4.milnor_number), Err(Error::NotCorankOne(2)));
    assert_eq!(g("x^2").unwrap_err(), Error::NonIsolated);
}

#[test]
fn quantum_factor_is_a_type_a_milnor_algebra() {
    for n in 3..=5 {
        let m = match_quantum_factor(n).unwrap();
        assert!(m.matches());
        assert_eq!(m.quantum, (1, n - 1));
        assert_eq!(m.label, format!("A_{}", n - 1));
        assert_eq!(m.spectrum.local_length_origin, n - 1);
    }
}

fn germ(r: &Ring, terms: &[((u32, u32), i64)]) -> Polynomial {
    let mut t: Vec<(Monomial, _)> = terms.iter().map(|&((a, b), c)| (Monomial::from_exponents(&[a, b]), rat(c))).collect();
    t.push((Monomial::from_exponents(&[6, 0]), rat(1)));
    t.push((Monomial::from_exponents(&[0, 6]), rat(1)));
    // degree-5 parts 6x^5, 6y^5 keep the Jacobian zero-dimensional
    Polynomial::from_terms(r, t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Corank and Milnor number are invariant under integer unimodular
    /// changes of coordinates.
    #[test]
    fn invariance_under_unimodular_change(
        terms in prop::collection::vec(((0u32..=4, 0u32..=4), -2i64..=2), 0..6),
        shear in -2i64..=2,
        swap in any::<bool>(),
    ) {
        let r = ring(&["x", "y"]);
        let terms: Vec<_> = terms.into_iter().filter(|((a, b), _)| a + b >= 2).collect();
        let f = germ(&r, &terms);
        let before = match milnor_data(&f) {
            Ok(g) => g,
            Err(Error::NonIsolated) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        // x -> x + shear*y, then optionally swap
        let (x, y) = (r.var(0), r.var(1));
        let sx = &x + &y.scale(&rat(shear));
        let images = if swap { [y.clone(), sx] } else { [sx, y.clone()] };
        let g = f.substitute(&r, &images).unwrap();
        let after = milnor_data(&g).unwrap();
        prop_assert_eq!(before.corank, after.corank);
        prop_assert_eq!(before.milnor_number, after.milnor_number);
    }
}
