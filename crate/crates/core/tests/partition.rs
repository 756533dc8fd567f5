//! Cutting the outer loop into slices must not change anything.

use flt_lab_core::claims::{ClaimId, ClaimParams, ClaimRun, Profile};
use flt_lab_core::diophantine::{
    run_partitioned, EulerProduct, FermatTriples, PairSystemSearch, ProductForm, ProductSquares, QuadraticScan,
    Quadruple, QuadrupleMode, RangeSearch, Ring, SearchBounds, Sys3,
};
use flt_lab_core::powersum::{CoprimeMode, EqualSumsSearch};

fn invariant(label: &str, s: &dyn RangeSearch) {
    let whole = s.run().unwrap();
    for parts in [1, 2, 7] {
        assert_eq!(run_partitioned(s, parts).unwrap(), whole, "{label} P={parts}");
    }
}

#[test]
fn every_search_is_partition_invariant() {
    let b = |m, n| SearchBounds::new(m, n).unwrap();
    for n in 1..=3 {
        invariant("fermat", &FermatTriples { bounds: b(30, n), primitive_only: true });
        invariant("pair", &PairSystemSearch { bounds: b(30, n) });
        for mode in [QuadrupleMode::PairsXyZu, QuadrupleMode::FullyPairwise] {
            invariant("quadruple", &Quadruple { bounds: b(30, n), mode, require_xy_eq_zu: false });
            invariant("quadruple xy=zu", &Quadruple { bounds: b(30, n), mode, require_xy_eq_zu: true });
        }
        invariant("sys3", &Sys3 { bounds: b(15, n + 1) });
        invariant("product_form", &ProductForm { bounds: b(30, n) });
        invariant("euler", &EulerProduct { bounds: b(30, n) });
    }
    invariant("squares Z", &ProductSquares::new(30, Ring::Z).unwrap());
    invariant("squares Z[i]", &ProductSquares::new(30, Ring::GaussianZ).unwrap());
    invariant("quadratic", &QuadraticScan::new(30, 5).unwrap());
    invariant("equal sums", &EqualSumsSearch::new(3, 1, 3, 30, CoprimeMode::Pairwise).unwrap());
    invariant("equal sums", &EqualSumsSearch::new(2, 2, 2, 30, CoprimeMode::None).unwrap());
    invariant("equal sums chunked", &EqualSumsSearch::with_memory_cap(3, 2, 3, 20, CoprimeMode::None, 50).unwrap());
}

#[test]
fn claim_units_merge_in_any_split() {
    for &id in ClaimId::ALL {
        let params = ClaimParams::defaults(id, Profile::Smoke);
        let run = ClaimRun::prepare(&params).unwrap();
        let units = run.unit_count();
        let whole = run.finish(run.run_units(0..units).unwrap()).unwrap();
        for parts in [2, 7] {
            let mut merged = run.run_units(0..0).unwrap();
            for r in flt_lab_core::diophantine::partition(units, parts) {
                merged.merge(run.run_units(r).unwrap());
            }
            assert_eq!(run.finish(merged).unwrap(), whole, "{id} P={parts}");
        }
    }
}
