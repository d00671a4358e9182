use jw_core::exactlin::{Int, QuotientStructure};
use jw_core::grouppres::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KINDS: [GroupKind; 4] = [GroupKind::McCool, GroupKind::BraidPermutation, GroupKind::Braid, GroupKind::Symmetric];
const REPS: [Representation; 3] = [Representation::Standard, Representation::Trivial, Representation::Permutation];

/// Same group: relators shuffled, some inverted, some cyclically rotated.
fn tietze_scramble(p: &Presentation, seed: u64) -> Presentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut relators: Vec<GroupWord> = p.relators().to_vec();
    relators.shuffle(&mut rng);
    let mut q = Presentation::new(p.generators().to_vec());
    for mut r in relators {
        if rng.gen_bool(0.5) {
            r = invert_word(&r);
        }
        if !r.is_empty() {
            let k = rng.gen_range(0..r.len());
            r.rotate_left(k);
        }
        q.add_relator("", r);
    }
    q
}

#[test]
fn relators_act_trivially() {
    for kind in KINDS {
        for n in 3..=6 {
            let p = builtin(kind, n).unwrap();
            for rep in REPS {
                let a = LatticeAction::symmetric(&p, n, rep).unwrap();
                assert!(a.check(&p).is_ok(), "{kind:?} n={n} {rep:?}");
            }
        }
    }
}

#[test]
fn presentation_sizes() {
    for n in 3..=7 {
        assert_eq!(mccool(n).relators().len(), n * n * (n - 1) * (n - 2) / 2);
        assert_eq!(mccool(n).generators().len(), n * (n - 1));
        assert_eq!(braid_permutation(n).generators().len(), 2 * (n - 1));
        assert_eq!(braid(n).generators().len(), n - 1);
    }
    assert_eq!(mccool(3).relators().len(), 9);
}

#[test]
fn bp_cocycles_have_rank_n_plus_one() {
    for n in 3..=8 {
        let p = braid_permutation(n);
        let a = LatticeAction::symmetric(&p, n, Representation::Standard).unwrap();
        assert_eq!(cocycle_lattice(&p, &a).nrows(), n + 1, "n={n}");
        let rep = h1_report(&p, &a).unwrap();
        assert_eq!(rep.cocycle_rank, n + 1);
        assert_eq!(rep.coboundary_rank, n - 1);
        assert_eq!(rep.structure.free_rank, 2);
    }
}

#[test]
fn cocycle_basis_satisfies_relators() {
    for kind in KINDS {
        let n = 4;
        let p = builtin(kind, n).unwrap();
        let a = LatticeAction::symmetric(&p, n, Representation::Standard).unwrap();
        for f in cocycle_basis(&p, &a) {
            for r in p.relators() {
                assert!(evaluate_cocycle(&f, &a, r).unwrap().iter().all(|x| x.is_zero()), "{kind:?}");
            }
        }
    }
}

/// With trivial coefficients `H^1(G; Z) = Hom(G, Z)`, whose rank is the free
/// rank of the abelianization.
#[test]
fn trivial_coefficients_match_abelianization() {
    for kind in KINDS {
        for n in 3..=6 {
            let p = builtin(kind, n).unwrap();
            let a = LatticeAction::trivial(&p, 1);
            let h = h1_twisted(&p, &a).unwrap();
            assert_eq!(h, QuotientStructure::free(abelianization(&p).free_rank), "{kind:?} n={n}");
        }
    }
}

/// `0 -> V -> Z^n -> Z -> 0` gives `Z/n -> H^1(S_n; V) -> H^1(S_{n-1}; Z) = 0`,
/// with the first map injective because `H^0(S_n; Z^n) -> H^0(S_n; Z)` is
/// multiplication by `n`. The permutation module itself has no `H^1`.
#[test]
fn symmetric_group_long_exact_sequence() {
    for n in 3..=8 {
        let p = symmetric(n);
        let perm = LatticeAction::symmetric(&p, n, Representation::Permutation).unwrap();
        assert_eq!(h1_twisted(&p, &perm).unwrap(), QuotientStructure::free(0), "n={n}");
        let v = LatticeAction::symmetric(&p, n, Representation::Standard).unwrap();
        let h = h1_twisted(&p, &v).unwrap();
        assert_eq!((h.free_rank, h.torsion_i64()), (0, vec![n as i64]), "n={n}");
    }
}

#[test]
fn h1_invariant_under_tietze_moves() {
    for kind in [GroupKind::BraidPermutation, GroupKind::Braid, GroupKind::Symmetric, GroupKind::McCool] {
        for n in 3..=5 {
            let p = builtin(kind, n).unwrap();
            let a = LatticeAction::symmetric(&p, n, Representation::Standard).unwrap();
            let base = h1_twisted(&p, &a).unwrap();
            for seed in 0..3 {
                let q = tietze_scramble(&p, seed);
                let b = LatticeAction::symmetric(&q, n, Representation::Standard).unwrap();
                assert_eq!(h1_twisted(&q, &b).unwrap(), base, "{kind:?} n={n} seed={seed}");
            }
        }
    }
}

#[test]
fn h2_expressions_agree() {
    for n in 3..=8 {
        let r = h2_report(n).unwrap();
        assert!(r.consistent(), "{r:?}");
    }
    assert_eq!(h2_psigma_rank(3).unwrap(), 9);
    assert_eq!(h2_psigma_rank(4).unwrap(), 48);
    assert_eq!(h2_psigma_rank(5).unwrap(), 150);
    assert!(matches!(h2_psigma_rank(2), Err(GroupError::BadRank { .. })));
}

#[test]
fn abelianization_examples() {
    for n in 3..=6 {
        let bp = abelianization(&braid_permutation(n));
        assert_eq!((bp.free_rank, bp.torsion_i64()), (1, vec![2]), "n={n}");
        assert_eq!(abelianization(&mccool(n)), QuotientStructure::free(n * (n - 1)));
        assert_eq!(abelianization(&braid(n)), QuotientStructure::free(1));
    }
}

#[test]
fn parse_errors() {
    let bad = |s: &str| s.parse::<Presentation>().unwrap_err();
    assert!(matches!(bad(""), GroupError::Parse { line: 1, .. }));
    assert!(matches!(bad("a b\na c"), GroupError::Parse { line: 2, .. }));
    assert!(matches!(bad("a b\n\n# note\na^x"), GroupError::Parse { line: 4, .. }));
    assert!(matches!(bad("a a"), GroupError::Parse { line: 1, .. }));
    assert!(matches!("mystery".parse::<GroupKind>(), Err(GroupError::Parse { .. })));
    assert!(matches!("sign".parse::<Representation>(), Err(GroupError::Parse { .. })));
    let p: Presentation = "x y\nx y x^-1 y^-1".parse().unwrap();
    assert!(matches!(LatticeAction::symmetric(&p, 3, Representation::Standard), Err(GroupError::NoPermutation(_))));
}

#[test]
fn text_roundtrip_all_builtins() {
    for kind in KINDS {
        let p = builtin(kind, 4).unwrap();
        let q: Presentation = p.to_text().parse().unwrap();
        assert_eq!((q.generators(), q.relators()), (p.generators(), p.relators()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn principal_cocycles_are_cocycles(kind in 0usize..4, n in 3usize..=6, v in prop::collection::vec(-5i64..=5, 6)) {
        let p = builtin(KINDS[kind], n).unwrap();
        let a = LatticeAction::symmetric(&p, n, Representation::Standard).unwrap();
        let v: Vec<Int> = v[..n - 1].iter().map(|&x| Int::from(x)).collect();
        let f = CrossedHom::principal(&a, &v);
        for r in p.relators() {
            prop_assert!(evaluate_cocycle(&f, &a, r).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn cocycle_rule_on_products(n in 3usize..=5, seed in any::<u64>()) {
        let p = braid_permutation(n);
        let a = LatticeAction::symmetric(&p, n, Representation::Standard).unwrap();
        let basis = cocycle_basis(&p, &a);
        let f = &basis[(seed as usize) % basis.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut word = |len: usize| -> GroupWord {
            (0..len).map(|_| {
                let l = Letter::new(rng.gen_range(0..p.generators().len()));
                if rng.gen_bool(0.5) { l.inv() } else { l }
            }).collect()
        };
        let (u, w) = (word(4), word(3));
        let uw: GroupWord = u.iter().chain(&w).copied().collect();
        let fu = evaluate_cocycle(f, &a, &u).unwrap();
        let fw = evaluate_cocycle(f, &a, &w).unwrap();
        let m = a.word_matrix(&u);
        let expect: Vec<Int> = (0..a.rank())
            .map(|r| &fu[r] + &(0..a.rank()).map(|c| m.get(r, c) * &fw[c]).sum::<Int>())
            .collect();
        prop_assert_eq!(evaluate_cocycle(f, &a, &uw).unwrap(), expect);
        let inv = invert_word(&u);
        let mut back = u.clone();
        back.extend(inv);
        prop_assert!(evaluate_cocycle(f, &a, &back).unwrap().iter().all(|x| x.is_zero()));
    }
}
