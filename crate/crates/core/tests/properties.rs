use cliffan::classify::{check_even_odd_split, is_biharmonic, Class};
use cliffan::rational::{int, Rational};
use cliffan::random::{field, rational_set, seeded, signed_permutation};
use cliffan::solver::{class_basis, class_dimensions, operator_matrix, CoefficientSpace, DiffOperator};
use cliffan::verdict::all_hold;
use cliffan::{classify, Blade, Multivector, PolyField, PsiKind, PsiPair};
use proptest::prelude::*;

fn mv_strategy(m: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 1 << m).prop_map(move |c| {
        let dense: Vec<Rational> = c.into_iter().map(|(p, q)| Rational::new(p.into(), q.into())).collect();
        Multivector::from_dense(m, &dense)
    })
}

fn dims_and_mvs(n: usize) -> impl Strategy<Value = (usize, Vec<Multivector>)> {
    (1usize..=5).prop_flat_map(move |m| (Just(m), prop::collection::vec(mv_strategy(m), n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative((_, v) in dims_and_mvs(3)) {
        prop_assert_eq!(&(&v[0] * &v[1]) * &v[2], &v[0] * &(&v[1] * &v[2]));
    }

    #[test]
    fn involutions((_, v) in dims_and_mvs(2)) {
        let (a, b) = (&v[0], &v[1]);
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.reverse().reverse(), a.clone());
        prop_assert_eq!((a * b).conjugate(), &b.conjugate() * &a.conjugate());
        prop_assert_eq!((a * b).reverse(), &b.reverse() * &a.reverse());
        prop_assert_eq!(&a.even_part() + &a.odd_part(), a.clone());
    }

    #[test]
    fn display_parse_roundtrip((m, v) in dims_and_mvs(1)) {
        let text = v[0].to_string();
        prop_assert_eq!(Multivector::parse(&text, m).unwrap(), v[0].clone());
    }

    #[test]
    fn psi_operators_are_linear(seed in any::<u64>(), (m, v) in dims_and_mvs(2), k in 0usize..=5) {
        let mut rng = seeded(seed);
        let pair = PsiPair::new(&signed_permutation(&mut rng, m), &rational_set(&mut rng, m)).unwrap();
        let k = k.min(m);
        let c = int(3);
        let lhs = pair.level(k, &(&v[0] + &v[1].scale(&c))).unwrap();
        let rhs = &pair.level(k, &v[0]).unwrap() + &pair.level(k, &v[1]).unwrap().scale(&c);
        prop_assert_eq!(lhs, rhs);
        let total = (0..=m).fold(Multivector::zero(m), |acc, j| &acc + &pair.level(j, &v[0]).unwrap());
        prop_assert_eq!(total, &pair.plus(&v[0]).unwrap() + &pair.minus(&v[0]).unwrap());
    }

    #[test]
    fn psi_matrix_matches_action(seed in any::<u64>(), (m, v) in dims_and_mvs(1)) {
        let mut rng = seeded(seed);
        let pair = PsiPair::new(&rational_set(&mut rng, m), &signed_permutation(&mut rng, m)).unwrap();
        let mat = pair.matrix(&PsiKind::Plus).unwrap();
        let blades = Blade::all(m);
        let coords: Vec<Rational> = blades.iter().map(|&b| v[0].coefficient(b)).collect();
        let image = mat.mul_vec(&coords).unwrap();
        let got = Multivector::from_terms(m, blades.into_iter().zip(image));
        prop_assert_eq!(got, pair.plus(&v[0]).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dirac_squares_to_minus_laplacian(seed in any::<u64>(), m in 1usize..=4) {
        let mut rng = seeded(seed);
        let psi = rational_set(&mut rng, m);
        let f = field(&mut rng, m, 4, 4);
        let twice = f.dirac_left(&psi).unwrap().dirac_left(&psi).unwrap();
        prop_assert_eq!(twice, f.laplacian().neg());
        let right = f.dirac_right(&psi).unwrap().dirac_right(&psi).unwrap();
        prop_assert_eq!(right, f.laplacian().neg());
    }

    #[test]
    fn field_display_parse_roundtrip(seed in any::<u64>(), m in 1usize..=5) {
        let mut rng = seeded(seed);
        let f = field(&mut rng, m, 4, 5);
        prop_assert_eq!(PolyField::parse(&f.to_string(), m).unwrap(), f);
    }

    #[test]
    fn even_odd_split_holds(seed in any::<u64>(), m in 2usize..=4) {
        let mut rng = seeded(seed);
        let phi = signed_permutation(&mut rng, m);
        let psi = rational_set(&mut rng, m);
        let f = field(&mut rng, m, 3, 4);
        prop_assert!(all_hold(&check_even_odd_split(&phi, &psi, &f).unwrap()));
    }

    #[test]
    fn operator_matrix_agrees_with_operator(seed in any::<u64>(), d in 0usize..=3) {
        let mut rng = seeded(seed);
        let phi = signed_permutation(&mut rng, 3);
        let psi = rational_set(&mut rng, 3);
        let space = CoefficientSpace::homogeneous(3, d).unwrap();
        let f = field(&mut rng, 3, d, 4).homogeneous_part(d);
        for op in [DiffOperator::Laplacian, DiffOperator::Sandwich { phi: phi.clone(), psi: psi.clone() }, DiffOperator::DiracLeft(psi.clone())] {
            let report = operator_matrix(&op, &space).unwrap();
            let image = op.apply(&f).unwrap();
            match report.target {
                Some(target) => {
                    let got = report.matrix.mul_vec(&space.vector(&f).unwrap()).unwrap();
                    prop_assert_eq!(got, target.vector(&image).unwrap());
                }
                None => {
                    prop_assert!(report.degenerate);
                    prop_assert!(image.is_zero());
                }
            }
        }
    }
}

#[test]
fn class_members_are_biharmonic_and_classified() {
    let mut rng = seeded(11);
    for d in 2..=3 {
        let phi = signed_permutation(&mut rng, 3);
        let psi = rational_set(&mut rng, 3);
        for class in [Class::Harmonic, Class::PhiPsiHarmonic, Class::Inframonogenic] {
            let basis = class_basis(&[class], &phi, &psi, d).unwrap();
            let fields = basis.fields();
            for f in &fields {
                assert!(is_biharmonic(f));
                assert!(class.contains(&phi, &psi, f).unwrap());
            }
            // Closed under sums.
            if fields.len() >= 2 {
                let sum = fields[0].try_add(&fields[1].scale(&int(-7))).unwrap();
                assert!(class.contains(&phi, &psi, &sum).unwrap());
            }
        }
    }
}

#[test]
fn dimension_structure_is_monotone() {
    let mut rng = seeded(5);
    for d in 0..=3 {
        let phi = signed_permutation(&mut rng, 3);
        let psi = rational_set(&mut rng, 3);
        let dims = class_dimensions(&phi, &psi, 3, d).unwrap();
        assert!(dims.total >= dims.h.max(dims.hpp).max(dims.i));
        assert!(dims.h_hpp <= dims.h.min(dims.hpp));
        assert!(dims.h_i <= dims.h.min(dims.i));
        assert!(dims.hpp_i <= dims.hpp.min(dims.i));
        assert!(dims.triple <= dims.h_hpp.min(dims.h_i).min(dims.hpp_i));
        // Inclusion-exclusion lower bound for pairwise intersections.
        assert!(dims.h_i + dims.total >= dims.h + dims.i);
        if d <= 1 {
            assert_eq!(dims.triple, dims.total);
        }
    }
}

#[test]
fn linear_fields_lie_in_every_class() {
    let mut rng = seeded(9);
    let phi = signed_permutation(&mut rng, 4);
    let psi = rational_set(&mut rng, 4);
    let f = field(&mut rng, 4, 1, 6);
    let c = classify(&phi, &psi, &f).unwrap();
    assert!(c.harmonic && c.phi_psi_harmonic && c.inframonogenic);
}
