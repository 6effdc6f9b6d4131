use std::collections::BTreeMap;

use num_bigint::BigUint;
use tritcodes::spectrum::{
    class_weight, enumerator_from_spectrum, fhat_table_direct, spectral_class, EisensteinInt,
};
use tritcodes::{
    direct_enumerator, fhat, fhat_table, make_field, spectral_enumerator,
    weight_value_set, Gf3Element, WeightEnumerator,
};

fn counts(e: &WeightEnumerator) -> BTreeMap<usize, u64> {
    e.iter().map(|(w, c)| (w, u64::try_from(c).unwrap())).collect()
}

#[test]
fn m3_enumerator_matches_definitional_oracle() {
    // frozen from an independent evaluation of every c(a,b) over GF(27)
    // built from x^3 + 2x + 1
    let ctx = make_field(3, None).unwrap();
    let expected: BTreeMap<usize, u64> = [(0, 1), (15, 312), (18, 260), (21, 156)].into();
    let direct = direct_enumerator(&ctx).unwrap();
    assert_eq!(counts(&direct), expected);
    assert_eq!(direct, spectral_enumerator(&ctx).unwrap());
    for w in direct.support() {
        assert!(weight_value_set(3).contains(&(w as u64)));
    }
}

#[test]
fn m5_both_paths_reproduce_published_enumerator() {
    let ctx = make_field(5, None).unwrap();
    let expected: BTreeMap<usize, u64> =
        [(0, 1), (144, 2420), (153, 12100), (162, 34364), (171, 7744), (180, 2420)].into();
    let direct = direct_enumerator(&ctx).unwrap();
    let spectral = spectral_enumerator(&ctx).unwrap();
    assert_eq!(counts(&direct), expected);
    assert_eq!(direct, spectral);
    assert_eq!(direct.first_moment(), BigUint::from(9_526_572u64));
}

#[test]
fn m5_class_counts() {
    let ctx = make_field(5, None).unwrap();
    let table = fhat_table(&ctx);
    let mut classes = BTreeMap::new();
    for k in 0..ctx.order() {
        *classes.entry(class_weight(ctx.exp(k), &table, &ctx).unwrap()).or_insert(0u64) += 1;
    }
    let expected: BTreeMap<u64, u64> =
        [(144, 10), (153, 50), (162, 140), (171, 32), (180, 10)].into();
    assert_eq!(classes, expected);
}

#[test]
fn fourier_values_and_parseval() {
    // value distributions over nonzero lambda, frozen from the same oracle
    let frozen: [(u32, [(i64, usize); 3]); 2] =
        [(3, [(-9, 3), (0, 17), (9, 6)]), (5, [(-27, 36), (0, 161), (27, 45)])];
    for (m, dist) in frozen {
        let ctx = make_field(m, None).unwrap();
        let table = fhat_table(&ctx);
        let mut seen = BTreeMap::new();
        for k in 0..ctx.order() {
            let z = table.at(ctx.exp(k), &ctx);
            assert!(z.is_real());
            *seen.entry(z.p).or_insert(0usize) += 1;
        }
        assert_eq!(seen, dist.into_iter().collect::<BTreeMap<_, _>>());
        assert_eq!(table.parseval_sum(), 3i128.pow(2 * m));
        assert_eq!(table.at(Gf3Element::ZERO, &ctx), EisensteinInt::ZERO);
    }
}

#[test]
fn walsh_table_matches_direct_table() {
    for m in [3, 5, 7] {
        let ctx = make_field(m, None).unwrap();
        assert_eq!(fhat_table(&ctx), fhat_table_direct(&ctx), "m={m}");
    }
}

#[test]
fn spectrum_direct_table_gives_same_enumerator() {
    let ctx = make_field(7, None).unwrap();
    let a = enumerator_from_spectrum(&fhat_table_direct(&ctx), &ctx).unwrap();
    assert_eq!(a, spectral_enumerator(&ctx).unwrap());
}

#[test]
fn exact_substitution_matches_every_codeword_m5() {
    let ctx = make_field(5, None).unwrap();
    let table = fhat_table(&ctx);
    for a in ctx.elements().skip(1).step_by(3) {
        for b in ctx.elements().skip(1).step_by(5) {
            let lambda = spectral_class(a, b, &ctx).unwrap();
            assert_eq!(
                class_weight(lambda, &table, &ctx).unwrap() as usize,
                tritcodes::spectrum::dual_codeword_weight(a, b, &ctx)
            );
        }
    }
}

#[test]
fn shorthand_ratio_does_not_index_the_classes() {
    // lambda = a/b is not the class of c(a,b): with c^v = 1/b the class is
    // a * b^(-1/v), which differs from a/b unless b^(1 - 1/v) = 1
    let ctx = make_field(5, None).unwrap();
    let table = fhat_table(&ctx);
    let mut mismatches = 0;
    for a in ctx.elements().skip(1) {
        for b in ctx.elements().skip(1).step_by(11) {
            let ratio = ctx.mul(a, ctx.inv(b).unwrap());
            let w = class_weight(ratio, &table, &ctx).unwrap() as usize;
            if w != tritcodes::spectrum::dual_codeword_weight(a, b, &ctx) {
                mismatches += 1;
            }
        }
    }
    assert!(mismatches > 0);
}

#[test]
fn pointwise_fhat_agrees_with_table_m7_sample() {
    let ctx = make_field(7, None).unwrap();
    let table = fhat_table(&ctx);
    for k in (0..ctx.order()).step_by(97) {
        let lambda = ctx.exp(k);
        assert_eq!(fhat(lambda, &ctx), table.at(lambda, &ctx));
    }
}

#[test]
fn spectral_enumerator_structure_all_degrees() {
    for m in [3, 5, 7, 9, 11, 13] {
        let ctx = make_field(m, None).unwrap();
        let e = spectral_enumerator(&ctx).unwrap();
        let n = ctx.order();
        assert_eq!(e.total(), &BigUint::from(3u64).pow(2 * m));
        assert_eq!(e.count(0), BigUint::from(1u32));
        let moment = BigUint::from(n) * BigUint::from(2u32) * BigUint::from(3u32).pow(2 * m - 1);
        assert_eq!(e.first_moment(), moment);
        for w in e.support() {
            assert!(weight_value_set(m).contains(&(w as u64)), "m={m} w={w}");
        }
    }
}
