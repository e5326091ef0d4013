use ggs_core::rmatrix::{build_c, build_rs, conjugate_by_q_r0, construct};
use ggs_core::verify::dense::{dense_conjugate, dense_mul};
use ggs_core::verify::{check_hecke, check_qybe, dense_oracle, inject_fault, WalkMode};
use ggs_core::{BandedOperator, Error, TripleCatalog};

fn banded(r: &BandedOperator) -> (bool, bool) {
    (check_qybe(r, WalkMode::Sparse, false).ok(), check_hecke(r, false).ok())
}

#[test]
fn banded_and_dense_agree_on_catalog() {
    for n in 2..=4 {
        for t in TripleCatalog::enumerate(n).unwrap().triples() {
            let r = construct(t).unwrap().r;
            let d = dense_oracle(&r).unwrap();
            assert_eq!(banded(&r), d, "{t}");
            assert_eq!(d, (true, true), "{t}");
        }
    }
}

#[test]
fn banded_and_dense_agree_on_faults() {
    let mut variants = 0;
    for n in 2..=3 {
        for t in TripleCatalog::enumerate(n).unwrap().triples() {
            let r = construct(t).unwrap().r;
            for idx in 0..r.len() {
                let bad = inject_fault(&r, idx);
                let d = dense_oracle(&bad).unwrap();
                assert_eq!(banded(&bad), d, "{t} entry {idx}");
                assert_ne!(d, (true, true), "{t} entry {idx}");
                variants += 1;
            }
        }
    }
    assert!(variants >= 10);
}

#[test]
fn sparse_and_full_walks_agree() {
    for n in 2..=4 {
        for t in TripleCatalog::enumerate(n).unwrap().triples() {
            let r = construct(t).unwrap().r;
            for bad in [r.clone(), inject_fault(&r, 1), inject_fault(&r, r.len() / 2)] {
                let s = check_qybe(&bad, WalkMode::Sparse, true);
                let f = check_qybe(&bad, WalkMode::Full, true);
                assert_eq!(s, f, "{t}");
            }
        }
    }
}

#[test]
fn banded_product_matches_dense() {
    for n in 2..=4 {
        let rs = build_rs(n);
        let c = build_c(n);
        for t in TripleCatalog::enumerate(n).unwrap().triples() {
            let cons = construct(t).unwrap();
            for (x, y) in [(&cons.r, &rs), (&rs, &cons.r), (&cons.r, &c), (&cons.r, &cons.r)] {
                assert_eq!(x.mul(y).unwrap(), dense_mul(x, y).unwrap());
            }
            assert_eq!(
                conjugate_by_q_r0(&rs, &cons.r0).unwrap(),
                dense_conjugate(&rs, &cons.r0).unwrap()
            );
        }
    }
}

#[test]
fn dense_refuses_large_n() {
    assert!(matches!(dense_oracle(&build_rs(5)), Err(Error::TooLarge { .. })));
    assert!(dense_mul(&build_rs(5), &build_rs(5)).is_err());
}
