use igq_core::algebra::{parse_polynomial, Ideal, Monomial, Polynomial, Ring, TermOrder};
use igq_core::presentations::{
    build_presentation, count_offorigin_by_substitution, decompose_spectrum, is_weighted_homogeneous, linear_form,
    presentation_dimension, saturate_at_origin, sigma_in_ab, verify_homomorphism, PresentationSpec, QMode, Variant,
};

fn spec(n: usize, v: Variant) -> PresentationSpec {
    PresentationSpec::new(n, v, QMode::Specialize1).unwrap()
}

fn dim(i: &Ideal) -> usize {
    i.quotient_dimension().finite().unwrap()
}

#[test]
fn quantum_two_small_cases() {
    for (n, expected) in [
        (2, vec!["2*a2 - a1^2", "a2^2 + a1"]),
        (3, vec!["2*a2 - a1^2 + b1", "a2^2 + 2*b1*a2 - b1*a1^2", "b1*a2^2 + a1"]),
    ] {
        let s = spec(n, Variant::QuantumII);
        let ring = s.ring();
        let got = build_presentation(&s).unwrap();
        let want: Vec<Polynomial> = expected.iter().map(|t| parse_polynomial(&ring, t).unwrap()).collect();
        assert_eq!(got.generators(), &want[..], "n = {n}");
    }
}

/// `Δ_r = Σ_{i=1}^{r} (-1)^{i+1} σ_i Δ_{r-i}`, the row expansion of the
/// Toeplitz determinant, with `σ_i = 0` past the top degree.
fn delta_by_recursion(ring: &Ring, top: usize, r: usize) -> Polynomial {
    let mut d = vec![ring.one()];
    for m in 1..=r {
        let mut acc = ring.zero();
        for i in 1..=m.min(top) {
            let t = &ring.var(i - 1) * &d[m - i];
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        d.push(acc);
    }
    d.pop().unwrap()
}

#[test]
fn determinants_match_recursion() {
    for n in 2..=5 {
        let s = spec(n, Variant::ClassicalI);
        let ring = s.ring();
        let gens = build_presentation(&s).unwrap().generators().to_vec();
        assert_eq!(gens.len(), 2 * n - 2);
        for r in 3..=2 * n - 2 {
            assert_eq!(gens[r - 3], delta_by_recursion(&ring, 2 * n - 2, r), "n = {n}, r = {r}");
        }
    }
}

#[test]
fn sigma_images_follow_chern_product() {
    // c(V/U) = c(U^⊥/U) c(U*) with c(U*) = 1 - a1 + a2, read in degree k
    let n = 4;
    let spec = spec(n, Variant::ClassicalII);
    let ring = spec.ring();
    let b = |i: usize| if i == 0 { ring.one() } else if i <= n - 2 { ring.var(1 + i) } else { ring.zero() };
    for k in 1..=2 * n - 2 {
        let mut want = ring.zero();
        for i in 0..=k / 2 {
            let e = match k - 2 * i {
                0 => ring.one(),
                1 => -ring.var(0),
                2 => ring.var(1),
                _ => ring.zero(),
            };
            want = &want + &(&b(i) * &e);
        }
        assert_eq!(sigma_in_ab(n, k).unwrap(), want, "k = {k}");
    }
    assert_eq!(sigma_in_ab(n, 2 * n - 2).unwrap(), &ring.var(1) * &ring.var(n - 1));
}

#[test]
fn dimensions_all_variants() {
    for n in 2..=5 {
        for v in Variant::ALL {
            assert_eq!(presentation_dimension(&spec(n, v)).unwrap(), 2 * n * (n - 1), "n = {n}, {v:?}");
        }
    }
}

#[test]
fn homomorphisms() {
    for n in 2..=5 {
        for quantum in [false, true] {
            let r = verify_homomorphism(n, quantum).unwrap();
            assert_eq!(r.lambda, 1);
            assert!(r.images.iter().all(Polynomial::is_zero));
        }
    }
}

#[test]
fn symbolic_generators_are_weighted_homogeneous() {
    for n in 2..=5 {
        for v in Variant::ALL {
            let s = PresentationSpec::new(n, v, QMode::Symbolic).unwrap();
            assert!(is_weighted_homogeneous(&s, &build_presentation(&s).unwrap()), "n = {n}, {v:?}");
        }
    }
}

#[test]
fn spectrum_small() {
    for (n, want) in [(2, (4, 0, 1, 3, 3)), (3, (12, 1, 2, 10, 10)), (4, (24, 1, 3, 21, 21))] {
        let s = decompose_spectrum(n).unwrap();
        assert_eq!(s.as_tuple(), want);
        assert_eq!(s.total_dim, s.local_length_origin + s.offorigin_dim);
        assert_eq!(count_offorigin_by_substitution(n).unwrap(), s.offorigin_distinct_points);
    }
    assert_eq!(count_offorigin_by_substitution(5).unwrap(), 36);
}

/// `dim R/(I + m^N)` is non-decreasing in `N` and stabilizes at the length
/// of the local factor at the origin; `N = 2` gives `1 + tangent dim`.
#[test]
fn local_length_by_powers_of_the_maximal_ideal() {
    for n in 2..=4 {
        let ideal = build_presentation(&spec(n, Variant::QuantumII)).unwrap();
        let ring = ideal.ring().clone();
        let power = |d: u32| -> Vec<Polynomial> {
            let k = ring.nvars();
            let mut out = Vec::new();
            let total = (d as usize + 1).pow(k as u32);
            for code in 0..total {
                let mut c = code;
                let mut e = vec![0u32; k];
                for slot in e.iter_mut() {
                    *slot = (c % (d as usize + 1)) as u32;
                    c /= d as usize + 1;
                }
                if e.iter().sum::<u32>() == d {
                    out.push(Polynomial::monomial(&ring, Monomial::from_exponents(&e), igq_core::algebra::rat(1)));
                }
            }
            out
        };
        let lengths: Vec<usize> = (1..=n as u32 + 2).map(|d| dim(&ideal.with_generators(&power(d)).unwrap())).collect();
        let s = decompose_spectrum(n).unwrap();
        assert_eq!(*lengths.last().unwrap(), s.local_length_origin, "n = {n}: {lengths:?}");
        assert_eq!(lengths[1], 1 + s.tangent_dim_origin);
        assert!(lengths.windows(2).all(|w| w[0] <= w[1]));
    }
}

/// The minimal polynomial of `ℓ` on the off-origin algebra is the monic
/// generator of `(J + (w - ℓ)) ∩ Q[w]` computed by block elimination.
#[test]
fn eliminant_agrees_with_block_elimination() {
    let off = saturate_at_origin(&build_presentation(&spec(3, Variant::QuantumII)).unwrap()).unwrap();
    let ring = off.ring();
    let uni = Ring::new(&["w"], TermOrder::Grevlex).unwrap();
    let form = linear_form(ring, 0);
    let minpoly = off.groebner().minimal_polynomial(&form, &uni).unwrap();

    let mut names: Vec<String> = ring.names().to_vec();
    names.push("w".into());
    let big = Ring::new(&names, TermOrder::Grevlex).unwrap();
    let k = ring.nvars();
    let lift: Vec<usize> = (0..k).collect();
    let mut gens: Vec<Polynomial> = off.groebner().elements().iter().map(|g| g.map_variables(&big, &lift)).collect();
    gens.push(&big.var(k) - &form.map_variables(&big, &lift));
    let elim = Ideal::new(&big, gens).unwrap().eliminate(&[k]).unwrap();
    let basis = elim.groebner().elements().to_vec();
    assert_eq!(basis.len(), 1);
    // only w survives elimination
    let down = vec![0usize; k + 1];
    assert_eq!(basis[0].map_variables(&uni, &down), minpoly);
    assert_eq!(minpoly.degree_in(0), 10);
}
