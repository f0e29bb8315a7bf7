use criterion::{black_box, criterion_group, criterion_main, Criterion};
use fpr_core::fpr_formulas::{evaluate, fpr_subset_rcycle, Params};
use fpr_core::perm_core::{group_closure, max_fpr_by_prime_of, Permutation};
use fpr_core::verify_harness::construct;

fn closure(c: &mut Criterion) {
    let gens = [
        Permutation::parse_cycles(8, "(0 1 2 3 4 5 6 7)").unwrap(),
        Permutation::parse_cycles(8, "(0 1)").unwrap(),
    ];
    c.bench_function("closure S8", |b| b.iter(|| group_closure(8, black_box(&gens), 1 << 20).unwrap().len()));
}

fn class_scan(c: &mut Criterion) {
    c.bench_function("class scan L3(2) on points", |b| {
        b.iter(|| {
            let g = construct("l3(2)-natural").unwrap();
            max_fpr_by_prime_of(&g.class_images().unwrap()).len()
        })
    });
}

fn formulas(c: &mut Criterion) {
    c.bench_function("subset rcycle n <= 40", |b| {
        b.iter(|| {
            for n in 5..=40i64 {
                for l in 1..(n + 1) / 2 {
                    black_box(fpr_subset_rcycle(n, l, 3).unwrap());
                }
            }
        })
    });
    let p = Params { n: Some(20), l: Some(4), r: Some(5), ..Default::default() };
    c.bench_function("evaluate subset-rcycle", |b| b.iter(|| evaluate("subset-rcycle", black_box(&p)).unwrap()));
}

criterion_group!(benches, closure, class_scan, formulas);
criterion_main!(benches);
