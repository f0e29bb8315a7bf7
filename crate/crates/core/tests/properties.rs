use fpr_core::exact_math::{binomial, gaussian_binomial, is_prime, Rational};
use fpr_core::fpr_formulas::{fpr_subset_double_transposition, fpr_subset_rcycle};
use fpr_core::gf_linear::{
    fixed_mspaces_semisimple, irreducible_block, Field, FormKind, Geometry, Matrix, PointKind, PointSet, Semilinear,
};
use fpr_core::perm_core::{brute_fpr, fpr_of, PermGroup, Permutation};
use num_bigint::BigUint;
use proptest::prelude::*;

fn subsets_fixed(n: usize, l: usize, x: &Permutation) -> usize {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == l)
        .filter(|&s| (0..n).all(|i| s >> i & 1 == s >> x.image(i as u32) & 1))
        .count()
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn matrix_strategy(q: u32, n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..q, n * n)
}

fn invertible(field: &Field, n: usize, entries: Vec<u32>) -> Option<Matrix> {
    let m = Matrix::new(n, n, entries).unwrap();
    (field.rank(&m) == n).then_some(m)
}

proptest! {
    #[test]
    fn gaussian_symmetry(n in 0u64..9, k in 0u64..9, qi in 0usize..4) {
        let q = [2u64, 3, 4, 5][qi];
        prop_assume!(k <= n);
        prop_assert_eq!(gaussian_binomial(n, k, q).unwrap(), gaussian_binomial(n, n - k, q).unwrap());
    }

    #[test]
    fn gaussian_pascal(n in 1u64..10, k in 1u64..10, qi in 0usize..4) {
        let q = [2u64, 3, 4, 7][qi];
        prop_assume!(k < n);
        let lhs = gaussian_binomial(n, k, q).unwrap();
        let rhs = gaussian_binomial(n - 1, k - 1, q).unwrap()
            + BigUint::from(q).pow(k as u32) * gaussian_binomial(n - 1, k, q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subset_rcycle_counts(n in 5i64..=20, l in 1i64..10, r in prop::sample::select(vec![2i64, 3, 5, 7, 11, 13, 17, 19])) {
        prop_assume!(2 * l < n && r <= n);
        let v = fpr_subset_rcycle(n, l, r).unwrap();
        let fixed = binomial(n - r, l) + binomial(n - r, l - r);
        prop_assert_eq!(v.clone(), Rational::from(fixed) / Rational::from(binomial(n, l)));
        prop_assert!(v >= Rational::zero() && v < Rational::one());
    }

    #[test]
    fn subset_rcycle_decreases_in_r(n in 5i64..=20, l in 1i64..10) {
        prop_assume!(2 * l < n);
        let vals: Vec<Rational> = (2..=n)
            .filter(|&r| is_prime(r as u64))
            .map(|r| fpr_subset_rcycle(n, l, r).unwrap())
            .collect();
        prop_assert!(vals.windows(2).all(|w| w[0] >= w[1]));
        let dt = fpr_subset_double_transposition(n, l).unwrap();
        prop_assert!(dt <= vals[0]);
    }

    #[test]
    fn subset_formulas_match_brute(n in 5usize..=10, l in 1usize..5, x in perm_strategy(10)) {
        prop_assume!(2 * l < n);
        let moved: Vec<u32> = (0..n as u32).collect();
        let restricted: Vec<u32> = moved.iter().map(|&i| {
            let mut j = x.image(i);
            while j as usize >= n { j = x.image(j); }
            j
        }).collect();
        let y = Permutation::from_images(restricted).unwrap();
        let ct = y.cycle_type();
        let count = subsets_fixed(n, l, &y);
        if let [r] = ct.iter().copied().filter(|&c| c > 1).collect::<Vec<_>>()[..] {
            if is_prime(r as u64) {
                let f = fpr_subset_rcycle(n as i64, l as i64, r as i64).unwrap();
                prop_assert_eq!(f, Rational::new(count as i64, binomial(n as i64, l as i64)).unwrap());
            }
        }
    }

    #[test]
    fn induced_action_is_homomorphism(qi in 0usize..3, a in matrix_strategy(4, 3), b in matrix_strategy(4, 3), fa in 0u32..2, fb in 0u32..2) {
        let (q, n) = [(2u64, 3usize), (3, 3), (4, 3)][qi];
        let field = Field::of_order(q).unwrap();
        let a: Vec<u32> = a.into_iter().map(|v| v % q as u32).collect();
        let b: Vec<u32> = b.into_iter().map(|v| v % q as u32).collect();
        let (Some(ma), Some(mb)) = (invertible(&field, n, a), invertible(&field, n, b)) else { return Ok(()) };
        let f = field.f();
        let xa = Semilinear { matrix: ma, frob: fa % f };
        let xb = Semilinear { matrix: mb, frob: fb % f };
        let geo = Geometry::standard(FormKind::Linear, n, field.clone(), None).unwrap();
        for m in 1..n {
            let pts = PointSet::enumerate(geo.clone(), PointKind::Subspaces(m), 1 << 16).unwrap();
            let pa = pts.induced_permutation(&xa).unwrap();
            let pb = pts.induced_permutation(&xb).unwrap();
            let pab = pts.induced_permutation(&field.compose(&xa, &xb)).unwrap();
            prop_assert_eq!(pab, pa.compose(&pb).unwrap());
        }
    }

    #[test]
    fn fixed_counts_conjugation_invariant(a in matrix_strategy(3, 3), g in matrix_strategy(3, 3)) {
        let field = Field::of_order(3).unwrap();
        let (Some(ma), Some(mg)) = (invertible(&field, 3, a), invertible(&field, 3, g)) else { return Ok(()) };
        let x = Semilinear::linear(ma);
        let g = Semilinear::linear(mg);
        let conj = field.compose(&field.compose(&field.invert(&g).unwrap(), &x), &g);
        let geo = Geometry::standard(FormKind::Linear, 3, field.clone(), None).unwrap();
        let pts = PointSet::enumerate(geo, PointKind::Subspaces(1), 1 << 16).unwrap();
        prop_assert_eq!(pts.fixed_point_count(&x).unwrap(), pts.fixed_point_count(&conj).unwrap());
    }

    #[test]
    fn fpr_conjugation_invariant(x in perm_strategy(7), g in perm_strategy(7)) {
        prop_assert_eq!(fpr_of(&x), fpr_of(&x.conjugate_by(&g).unwrap()));
    }
}

#[test]
fn fixed_mspaces_match_enumeration() {
    for (q, i, r) in [(2u64, 2usize, 3u64), (2, 3, 7), (5, 2, 3), (4, 3, 7)] {
        let field = Field::of_order(q).unwrap();
        let block = irreducible_block(&field, i, r).unwrap();
        for a in 1..=2usize {
            for e in 0..=2usize {
                let n = i * a + e;
                if n > if q == 2 { 6 } else { 4 } {
                    continue;
                }
                let mut blocks = vec![block.clone(); a];
                blocks.push(Matrix::identity(e));
                let x = Semilinear::linear(Matrix::direct_sum(&blocks));
                let geo = Geometry::standard(FormKind::Linear, n, field.clone(), None).unwrap();
                for m in i..(2 * i).min(n) {
                    let pts = PointSet::enumerate(geo.clone(), PointKind::Subspaces(m), 1 << 20).unwrap();
                    let brute = pts.fixed_point_count(&x).unwrap();
                    let formula = fixed_mspaces_semisimple(e as u64, a as u64, i as u64, m as u64, q).unwrap();
                    assert_eq!(formula, BigUint::from(brute), "q={q} i={i} a={a} e={e} m={m}");
                }
            }
        }
    }
}

#[test]
fn group_fpr_is_class_function() {
    let gens = [Permutation::parse_cycles(6, "(0 1 2 3 4 5)").unwrap(), Permutation::parse_cycles(6, "(0 1)").unwrap()];
    let g = PermGroup::new(6, gens.to_vec()).unwrap().closed(1000).unwrap();
    let x = Permutation::parse_cycles(6, "(0 1 2)(3 4)").unwrap();
    let base = brute_fpr(&g, &x).unwrap();
    for h in g.elements().unwrap().iter().step_by(37) {
        assert_eq!(brute_fpr(&g, &x.conjugate_by(&h).unwrap()).unwrap(), base);
    }
}
