use jw_core::cyclic::QuotientMode;
use jw_core::exactlin::{IncrementalSpan, Int};
use jw_core::freelie::*;
use jw_core::tangent::*;
use proptest::prelude::*;

fn tau1_all(n: usize, sign: i64) -> Vec<Derivation> {
    let mut out = Vec::new();
    for i in 1..=n as u8 {
        for j in 1..=n as u8 {
            if i != j {
                out.push(tau1_generator(n, i, j).unwrap().scale(&Int::from(sign)));
            }
        }
    }
    out
}

/// Bases of the degree-1-generated subalgebra by degree, from the given generators.
fn generated_levels(n: usize, gens: &[Derivation], kmax: usize) -> Vec<Vec<Derivation>> {
    let mut levels = vec![gens.to_vec()];
    for k in 2..=kmax {
        let index = DerIndex::new(n, k);
        let mut span = IncrementalSpan::new(index.dim());
        let mut basis = Vec::new();
        for f in levels.last().unwrap() {
            for g in gens {
                let b = der_bracket(f, g);
                if span.insert(b.hall_coords(&index)) {
                    basis.push(b);
                }
            }
        }
        levels.push(basis);
    }
    levels
}

#[test]
fn tau1_generators_are_independent() {
    for n in 2..=5 {
        let index = DerIndex::new(n, 1);
        let mut span = IncrementalSpan::new(index.dim());
        let gens = tau1_all(n, 1);
        for g in &gens {
            assert!(span.insert(g.hall_coords(&index)));
        }
        assert_eq!(span.dim(), n * (n - 1));
        assert_eq!(p_basis(n, 1).len(), n * (n - 1));
    }
    let f = tau1_generator(2, 1, 2).unwrap();
    assert_eq!(apply(&f, &LieElement::generator(1)), normalize(&LieExpr::left_normed(&[2, 1])).unwrap());
}

#[test]
fn p_basis_is_certified() {
    for n in 2..=4 {
        for k in 1..=4 {
            assert!(certify_p_basis(n, k), "n={n} k={k}");
            if k >= 2 {
                assert_eq!(p_basis(n, k).len(), n * witt_rank_usize(n, k));
            }
        }
    }
}

#[test]
fn traces_vanish_on_generated_subalgebra() {
    let levels = generated_levels(3, &tau1_all(3, 1), 5);
    // Degree one is excluded: Tr_1(x_i*⊗[x_j,x_i]) = -x_j.
    for (k, basis) in levels.iter().enumerate().skip(1) {
        for f in basis {
            assert!(trace(f, QuotientMode::Full).is_zero(), "degree {}", k + 1);
        }
    }
}

#[test]
fn generated_dims_are_sign_invariant() {
    let plus = generated_levels(3, &tau1_all(3, 1), 4);
    let minus = generated_levels(3, &tau1_all(3, -1), 4);
    let dims = |ls: &Vec<Vec<Derivation>>| ls.iter().map(Vec::len).collect::<Vec<_>>();
    assert_eq!(dims(&plus), vec![6, 6, 16, 36]);
    assert_eq!(dims(&plus), dims(&minus));
}

fn generator(n: u8, max_len: usize) -> impl Strategy<Value = TangentialGenerator> {
    (1..=n, prop::collection::vec(1..=n, 1..=max_len)).prop_map(|(i, word)| TangentialGenerator { i, word })
}

fn tangent_element(n: u8, k: usize) -> impl Strategy<Value = Derivation> {
    prop::collection::vec((prop::collection::vec(1..=n, k), 1..=n, -2i64..=2), 1..4).prop_map(move |terms| {
        terms.into_iter().fold(Derivation::zero(n as usize, k), |acc, (word, i, c)| {
            acc.add(&tangential(n as usize, &TangentialGenerator { i, word }).unwrap().scale(&Int::from(c)))
        })
    })
}

fn is_power_word(w: &Word) -> bool {
    w.letters().all(|a| a == w.first())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn bracket_antisymmetry_and_jacobi(a in generator(3, 3), b in generator(3, 3), c in generator(3, 3)) {
        let (f, g, h) = (tangential(3, &a).unwrap(), tangential(3, &b).unwrap(), tangential(3, &c).unwrap());
        prop_assert_eq!(der_bracket(&f, &g), der_bracket(&g, &f).neg());
        prop_assert!(der_bracket(&f, &f).is_zero());
        let j = der_bracket(&f, &der_bracket(&g, &h))
            .add(&der_bracket(&g, &der_bracket(&h, &f)))
            .add(&der_bracket(&h, &der_bracket(&f, &g)));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn tangential_closure((f, g) in (1usize..=3, 1usize..=3).prop_flat_map(|(ka, kb)| (tangent_element(3, ka), tangent_element(3, kb)))) {
        let (ka, kb) = (f.degree(), g.degree());
        let b = der_bracket(&f, &g);
        let coords = p_coordinates(&b);
        prop_assert!(coords.is_some());
        let mut rebuilt = Derivation::zero(3, ka + kb);
        for (idx, c) in coords.unwrap() {
            prop_assert!(c.is_integer());
            rebuilt = rebuilt.add(&p_element(3, &idx).scale(&Int::from(c.to_integer())));
        }
        prop_assert_eq!(rebuilt, b);
    }

    #[test]
    fn power_necklaces_never_appear(f in (2usize..=5).prop_flat_map(|k| tangent_element(3, k))) {
        let t = trace(&f, QuotientMode::Full);
        for (w, _) in t.terms() {
            prop_assert!(!is_power_word(w), "power necklace {} in trace", w);
        }
    }

    #[test]
    fn contraction_identity(i in 1u8..=3, tail in prop::collection::vec(1u8..=3, 1..=5)) {
        prop_assume!(tail[0] != i);
        let mut letters = vec![i];
        letters.extend_from_slice(&tail);
        let f = Derivation::single(3, i, normalize(&LieExpr::left_normed(&letters)).unwrap()).unwrap();
        prop_assert_eq!(contract(&f), contraction_identity_rhs(i, &tail));
    }
}
