use jw_core::combinat::{binomial, compositions, multinomial, partitions};
use jw_core::cyclic::{cyclic_rank, CyclicElement, QuotientMode};
use jw_core::exactlin::{rank_int, Int, IntVector, QuotientStructure};
use jw_core::freelie::*;
use jw_core::johnson::*;
use jw_core::tangent::*;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rustc_hash::FxHashMap;

fn cyclic_rank_of(elems: &[CyclicElement]) -> usize {
    let mut index: FxHashMap<Word, usize> = FxHashMap::default();
    let rows: Vec<IntVector> = elems
        .iter()
        .map(|e| {
            IntVector::from_pairs(e.terms().iter().map(|(w, c)| {
                let next = index.len();
                (*index.entry(*w).or_insert(next), c.clone())
            }))
        })
        .collect();
    rank_int(index.len(), rows.into_iter())
}

/// All arrangements of a multiset of letters.
fn arrangements(content: &[usize]) -> Vec<Vec<u8>> {
    fn rec(left: &mut Vec<usize>, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for a in 0..left.len() {
            if left[a] > 0 {
                left[a] -= 1;
                cur.push(a as u8 + 1);
                rec(left, cur, out);
                cur.pop();
                left[a] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut content.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// `c_alpha` from bar-traces of `x_i^* ⊗ [x_{j_1}, ..., x_{j_k}, x_i]` over
/// every arrangement of the content, through generic derivations.
fn c_alpha_oracle(alpha: &[usize]) -> usize {
    let n = alpha.len();
    let mut traces = Vec::new();
    for word in arrangements(alpha) {
        for i in 1..=n as u8 {
            let f = tangential(n, &TangentialGenerator { i, word: word.clone() }).unwrap();
            traces.push(trace(&f, QuotientMode::Bar));
        }
    }
    cyclic_rank_of(&traces)
}

#[test]
fn image_inside_kernel() {
    for (n, kmax) in [(2, 7), (3, 7), (4, 5)] {
        let dims = johnson_image_dims(n, kmax);
        for k in 2..=kmax {
            assert!(dims[k - 1] <= trace_kernel_dim(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn n3_image_equals_kernel_through_six() {
    let dims = johnson_image_dims(3, 6);
    for k in 2..=6 {
        assert_eq!(dims[k - 1], trace_kernel_dim(3, k), "k={k}");
    }
    assert_eq!(trace_kernel_dim(3, 2), 6);
    assert_eq!(dims[4], 96);
}

#[test]
fn n3_gap_at_seven_and_eight() {
    let rows = gap_table(3, 8);
    assert_eq!((rows[6].image_dim, rows[6].kernel_dim), (618, 624));
    assert_eq!((rows[7].image_dim, rows[7].kernel_dim), (1596, 1635));
    assert!(rows[..6].iter().all(|r| r.gap_blocks.is_empty()));
    let gap: usize = rows[6].gap_blocks.iter().map(|g| g.1).sum();
    assert_eq!(gap, 6);
}

#[test]
fn degree_one_image() {
    for n in 2..=6 {
        assert_eq!(johnson_image(n, 1).dim(), n * (n - 1));
    }
}

#[test]
fn trace_routes_agree_through_six() {
    for n in 2..=4 {
        for k in 2..=6 {
            assert_eq!(trace_image_dim(n, k), trace_image_dim_direct(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn kernel_closed_forms() {
    for n in 3..=6 {
        assert_eq!(trace_kernel_dim(n, 2), n * (n - 1) * (n - 1) / 2, "n={n}");
    }
    for n in 3..=5 {
        let r = witt_rank_usize(n, 6) as i64;
        let expect = r + binomial(n, 3).to_i64().unwrap();
        assert_eq!(trace_image_dim(n, 6) as i64, expect, "n={n}");
    }
}

#[test]
fn c_alpha_with_a_unit_part_is_lie_rank() {
    for k in 2..=8 {
        for p in partitions(k, k) {
            if p.len() >= 2 && p.contains(&1) {
                let rep = c_alpha(&p);
                assert_eq!(rep.c_alpha, multidegree_rank_usize(&p), "{p:?}");
                assert_eq!(rep.r_alpha, 0);
            }
        }
    }
}

#[test]
fn c_alpha_matches_generic_oracle() {
    for k in 2..=7 {
        for p in partitions(k, k) {
            if p.len() >= 2 && multinomial(&p) <= BigInt::from(700) {
                assert_eq!(c_alpha(&p).c_alpha, c_alpha_oracle(&p), "{p:?}");
            }
        }
    }
}

#[test]
fn c_alpha_examples() {
    let rep = c_alpha(&[2, 2, 2]);
    assert_eq!((rep.c_alpha, rep.r_alpha), (15, 1));
    let rep = c_alpha(&[6, 2]);
    assert_eq!((rep.c_alpha, rep.r_alpha), (2, -1));
    let rows: Vec<String> = alpha_table(7).iter().map(|r| r.to_string()).collect();
    assert_eq!(rows, vec!["(5,2): c=3 r=0", "(4,3): c=5 r=0", "(3,2,2): c=30 r=0"]);
}

#[test]
fn tangential_generators_avoiding_index_are_in_image() {
    let n = 3;
    let mut ex = Expander::new();
    for k in 1..=5 {
        let image = johnson_image(n, k);
        for i in 1..=n as u8 {
            let others: Vec<u8> = (1..=n as u8).filter(|&a| a != i).collect();
            for code in 0..(1usize << k) {
                let word: Vec<u8> = (0..k).map(|b| others[(code >> b) & 1]).collect();
                let f = tangential(n, &TangentialGenerator { i, word: word.clone() }).unwrap();
                assert!(image.contains(&f.to_tensor(&mut ex)), "i={i} w={word:?}");
            }
        }
    }
}

#[test]
fn tilde_trace_is_surjective() {
    for n in 2..=4 {
        for k in 2..=6 {
            let rank = cyclic_rank(n, k, QuotientMode::Tilde).to_i64().unwrap() as usize;
            assert_eq!(tilde_trace_rank(n, k), rank, "n={n} k={k}");
        }
    }
}

#[test]
fn strict_inclusion_witness_detected_only_by_bar() {
    for k in 4..=6 {
        let f = strict_inclusion_witness(3, 1, 2, k);
        assert!(p_coordinates(&f).is_some());
        assert!(!trace(&f, QuotientMode::Bar).is_zero(), "k={k}");
        assert!(trace(&f, QuotientMode::Tilde).is_zero(), "k={k}");
    }
}

#[test]
fn cokernels_low_degree() {
    for n in 3..=5 {
        assert_eq!(coker_structure(n, 2), QuotientStructure::free(0));
        assert_eq!(coker_structure(n, 3), QuotientStructure::free(0));
        assert_eq!(coker_structure(n, 4), QuotientStructure::free(n * (n - 1) / 2));
    }
}

#[test]
fn section7_table_n3() {
    let rows = rank_table(3);
    assert!(rows.iter().all(|r| r.matches()));
    let gr: Vec<usize> = rows.iter().map(|r| r.gr_computed).collect();
    let p: Vec<usize> = rows.iter().map(|r| r.p_computed).collect();
    let coker: Vec<usize> = rows.iter().map(|r| r.coker_computed.free_rank).collect();
    assert_eq!(gr, vec![6, 6, 16, 36]);
    assert_eq!(p, vec![6, 9, 24, 54]);
    assert_eq!(coker, vec![0, 0, 0, 3]);
}

#[test]
fn kernel_inclusion_for_unit_parts() {
    for k in [3, 4, 5] {
        let rep = check_t0530(3, k);
        assert_eq!(rep.violations(), 0, "k={k}");
        assert!(rep.skipped.iter().all(|a| !a.contains(&1)));
        assert_eq!(rep.checked.len() + rep.skipped.len(), compositions(k, 3).len());
    }
}

#[test]
fn e_generators() {
    for (n, count) in [(3, 16), (4, 60), (5, 160)] {
        let rep = verify_e_generators(n);
        assert_eq!(rep.count, count);
        assert_eq!(rep.expected_count, count);
        assert_eq!(rep.span_dim, count);
        assert!(rep.spans_image());
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let image = johnson_image(3, 6);
            let blocks: Vec<(Vec<usize>, usize)> = image.blocks().iter().map(|b| (b.alpha().to_vec(), b.dim())).collect();
            let reduced: Vec<Vec<IntVector>> = image.blocks().iter().map(|b| b.span().reduced_rows()).collect();
            (blocks, reduced, gap_table(3, 6), coker_structure(3, 4), trace_image_dim_direct(4, 5))
        })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn split_by_content_recombines() {
    let f = TensorDerivation::tau1(3, 1, 2).bracket(&TensorDerivation::tau1(3, 2, 3));
    let parts = split_by_content(&f);
    for i in 1..=3u8 {
        let mut sum = TensorElement::zero(3);
        for p in parts.values() {
            sum.add_scaled(p.value(i), &Int::from(1));
        }
        assert_eq!(&sum, f.value(i));
    }
}
