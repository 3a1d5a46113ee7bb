//! Worked examples with hand-checkable answers.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::binomial;

use dopekit::counting::*;
use dopekit::enumerate::{self, EnumOptions};
use dopekit::input::{parse_lambda, parse_poly};
use dopekit::linalg::{self, ExactMatrix};
use dopekit::matroid::MatroidView;
use dopekit::*;

fn q() -> FieldDescriptor {
    FieldDescriptor::Rational
}

fn ints(v: &[i64]) -> Poly {
    Poly::new(q(), v.iter().map(|&c| Scalar::int(c)).collect()).unwrap()
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn pos(g: Grid, cells: &[(usize, usize)]) -> PositionSet {
    PositionSet::from_positions(g, cells.iter().map(|&(i, j)| Position::new(i, j))).unwrap()
}

#[test]
fn scalar_examples() {
    assert_eq!(&Scalar::rational(1, 2) + &Scalar::rational(1, 3), Scalar::rational(5, 6));
    let r2 = FieldDescriptor::Quadratic(2).sqrt().unwrap();
    assert_eq!(&r2 * &r2, FieldDescriptor::Quadratic(2).from_int(2));
    let one_minus = &FieldDescriptor::Quadratic(2).one() - &r2;
    assert_eq!(one_minus.sign().unwrap(), -1);
    let t = FieldDescriptor::Generic(1).indeterminate(1).unwrap();
    assert!((&t / &t).is_one());
    assert_eq!(Scalar::rational(3, 4).sign().unwrap(), 1);
    assert_eq!(Scalar::int(0).sign().unwrap(), 0);
}

#[test]
fn polynomial_examples() {
    assert_eq!(ints(&[0, 0, 0, 1]).derivative(1), ints(&[0, 0, 3]));
    assert!(ints(&[0, 0, 0, 1]).derivative(4).is_zero());
    assert_eq!(ints(&[0, 0, 1]).taylor_shift(&Scalar::int(1)), ints(&[1, 2, 1]));
    assert_eq!(ints(&[0, -1, 0, 1]).taylor_shift(&Scalar::int(1)), ints(&[0, 2, 3, 1]));
    let p = ints(&[4, -1, 7]);
    assert_eq!(p.taylor_shift(&Scalar::int(0)), p);
}

#[test]
fn crt_examples() {
    let res = |root: i64, power: usize, r: &[i64]| CrtResidue { root: Scalar::int(root), power, residue: ints(r) };
    let p = crt_interpolate(&[res(0, 2, &[]), res(1, 2, &[1])]).unwrap();
    assert_eq!(p, ints(&[0, 0, 3, -2]));
    // hand oracle: P(0) = P'(0) = 0, P(1) = 1, P'(1) = 0
    assert!(p.eval(&Scalar::int(0)).is_zero());
    assert!(p.derivative(1).eval(&Scalar::int(1)).is_zero());
    assert_eq!(crt_interpolate(&[res(0, 3, &[1, 1])]).unwrap(), ints(&[1, 1]));
    assert_eq!(crt_interpolate(&[res(0, 1, &[1]), res(1, 1, &[])]).unwrap(), ints(&[1, -1]));
    assert!(crt_interpolate(&[]).is_err());
}

#[test]
fn linalg_examples() {
    assert_eq!(linalg::rank(&ExactMatrix::identity(q(), 3)), 3);
    assert_eq!(linalg::rank(&ExactMatrix::zeros(q(), 2, 4)), 0);
    let g = FieldDescriptor::Generic(1);
    let l = g.indeterminate(1).unwrap();
    let m = ExactMatrix::from_rows(
        g,
        vec![vec![g.one(), l.clone(), &l * &l], vec![g.one(), &l + &l, &g.from_int(3) * &(&l * &l)]],
    )
    .unwrap();
    assert_eq!(linalg::rank(&m), 2);
    assert!(linalg::nullspace(&ExactMatrix::identity(q(), 4)).is_empty());
    let ns = linalg::nullspace(&ExactMatrix::from_rows(q(), vec![vec![Scalar::int(1), Scalar::int(1)]]).unwrap());
    assert_eq!(ns.len(), 1);
    assert_eq!(&ns[0][0] + &ns[0][1], Scalar::int(0));
    assert!(linalg::in_span(&vec![Scalar::int(0); 3], &[]));
    let e = |k: usize| (0..3).map(|i| Scalar::int((i == k) as i64)).collect::<Vec<_>>();
    assert!(!linalg::in_span(&e(2), &[e(0), e(1)]));
}

#[test]
fn form_examples() {
    let forms = build_forms(&NodeTuple::rationals(&[0, 1]).unwrap(), 2).unwrap();
    for j in 0..=2 {
        let e: Vec<Scalar> = (0..=2).map(|k| Scalar::int((k == j) as i64)).collect();
        assert_eq!(forms.form(Position::new(0, j)), e.as_slice());
    }
    assert_eq!(forms.form(Position::new(1, 0)), &[Scalar::int(1), Scalar::int(1), Scalar::int(1)]);

    let single = build_forms(&NodeTuple::rationals(&[0]).unwrap(), 3).unwrap();
    let s = pos(single.grid(), &[(0, 0)]);
    assert_eq!(single.closure(&s), s);

    let two = build_forms(&NodeTuple::rationals(&[0, 1]).unwrap(), 1).unwrap();
    let c = two.closure(&pos(two.grid(), &[(0, 0), (1, 0)]));
    assert_eq!(c, two.grid().full());
}

#[test]
fn v0_avoids_every_dope_span() {
    let lambda = NodeTuple::rationals(&[0, 1, 2]).unwrap();
    for n in 0..=4 {
        let forms = build_forms(&lambda, n).unwrap();
        for d in enumerate::enumerate_dope(&lambda, n).unwrap() {
            assert!(!forms.v0_in_span(&d.one_positions().unwrap()));
        }
    }
}

#[test]
fn dope_examples() {
    let p = parse_poly("x^5").unwrap();
    let d = dope_matrix_of(&p, &NodeTuple::rationals(&[0]).unwrap()).unwrap();
    assert_eq!(d.row_strings(), ["111110"]);
    let mu = multiplicity_from_dope(&DopeMatrix::parse("1100/0000/0110").unwrap());
    assert_eq!(mu.rows(), &[vec![2, 1, 0, 0], vec![0, 0, 0, 0], vec![0, 2, 1, 0]]);
    assert!(!check_conditions(&MultiplicityMatrix::new(vec![vec![0, 1]]).unwrap()).r);
    let rep = check_dope_conditions(&DopeMatrix::parse("010/010").unwrap());
    assert!(!rep.t);
    assert_eq!(rep.t_violation, Some(1));
}

#[test]
fn two_row_membership() {
    assert!(is_dope_two_row(&DopeMatrix::zeros(2, 4)).unwrap());
    assert!(!is_dope_two_row(&DopeMatrix::parse("0001/0000").unwrap()).unwrap());
    assert!(is_dope_two_row(&DopeMatrix::zeros(3, 1)).is_err());
    let count = DopeMatrix::all(2, 3).unwrap().filter(|d| is_dope_two_row(d).unwrap()).count();
    assert_eq!(count, 35);
}

#[test]
fn two_row_witnesses() {
    let lambda = NodeTuple::rationals(&[0, 1]).unwrap();
    let d = DopeMatrix::parse("10/00").unwrap();
    let p = witness_two_row(&d, &lambda).unwrap();
    assert_eq!(p.degree(), Some(1));
    assert_eq!(dope_matrix_of(&p, &lambda).unwrap(), d);
    assert_eq!(dope_matrix_of(&ints(&[0, 1]), &lambda).unwrap(), d);

    let z = DopeMatrix::zeros(2, 1);
    let p = witness_two_row(&z, &lambda).unwrap();
    for c in [0, 1] {
        assert!(!p.eval(&Scalar::int(c)).is_zero());
        assert!(!p.derivative(1).eval(&Scalar::int(c)).is_zero());
    }

    let all: Vec<_> = DopeMatrix::all(2, 4).unwrap().filter(satisfies_condition_t).collect();
    assert_eq!(all.len(), 126);
    for d in all {
        let p = witness_two_row(&d, &lambda).unwrap();
        assert_eq!(p.degree(), Some(4));
        assert_eq!(dope_matrix_of(&p, &lambda).unwrap(), d);
    }
}

#[test]
fn general_witness_examples() {
    let lambda = NodeTuple::rationals(&[0, 1, 2]).unwrap();
    let g = Grid::new(3, 2).unwrap();
    let p = witness_general(&g.empty(), &lambda, 2).unwrap();
    let p = p.poly().unwrap();
    assert!(dope_matrix_of(p, &lambda).unwrap().one_positions().unwrap().is_empty());
    assert_eq!(witness_general(&pos(g, &[(0, 2)]), &lambda, 2).unwrap(), Realization::NotRealizable);
    assert_eq!(witness_general(&pos(g, &[(0, 1), (1, 1), (2, 1)]), &lambda, 2).unwrap(), Realization::NotRealizable);
}

#[test]
fn extension_examples() {
    let l = NodeTuple::rationals(&[0]).unwrap();
    let p = extend(&DopeMatrix::parse("1").unwrap(), &l).unwrap();
    assert_eq!(p, ints(&[0, 0, 1]));

    let lambda = NodeTuple::rationals(&[0, 1, 3]).unwrap();
    let ones = DopeMatrix::new(vec![vec![true; 3]; 3]).unwrap();
    let p = extend(&ones, &lambda).unwrap();
    assert!(p.degree().unwrap() >= 9);
    assert_eq!(dope_matrix_of(&p, &lambda).unwrap().prefix(3), ones);

    let lambda = parse_lambda("0,sqrt(2)").unwrap();
    let d = DopeMatrix::parse("10/01").unwrap();
    let p = extend(&d, &lambda).unwrap();
    assert_eq!(p.field(), FieldDescriptor::Quadratic(2));
    assert_eq!(dope_matrix_of(&p, &lambda).unwrap().prefix(2), d);
}

#[test]
fn birkhoff_examples() {
    assert!(polya_poised(&DopeMatrix::parse("10/10").unwrap()).unwrap());
    assert!(!polya_poised(&DopeMatrix::zeros(2, 1)).unwrap());
    let r = gv_nonsingular(&[0, 1, 2], &[0, 1, 2]).unwrap();
    assert!(r.condition_holds && r.det_nonzero);
    let r = gv_nonsingular(&[2], &[0]).unwrap();
    assert!(r.condition_holds && r.det_nonzero);
}

#[test]
fn signed_examples() {
    let l = NodeTuple::rationals(&[0]).unwrap();
    assert_eq!(signed_dope_matrix_of(&ints(&[0, 1]), &l).unwrap().rows(), &[vec![0, 1]]);
    let (p, l) = dopekit::input::parse_poly_and_lambda("x^2-2", "sqrt(2)").unwrap();
    assert_eq!(signed_dope_matrix_of(&p, &l).unwrap().get(0, 0), 0);
}

#[test]
fn enumeration_counts() {
    for n in 0..=5 {
        let got = enumerate::enumerate_dope(&NodeTuple::rationals(&[7]).unwrap(), n).unwrap().len();
        assert_eq!(got, 1 << n);
    }
    assert_eq!(enumerate::enumerate_dope(&parse_lambda("0,1,2").unwrap(), 2).unwrap().len(), 17);
    assert_eq!(enumerate::enumerate_dope(&parse_lambda("0,1,sqrt(2)").unwrap(), 3).unwrap().len(), 98);
    assert_eq!(enumerate::enumerate_generic(3, 4).unwrap().len(), 531);
    assert_eq!(enumerate::enumerate_generic(1, 0).unwrap(), vec![DopeMatrix::zeros(1, 0)]);

    let gen2 = enumerate::enumerate_generic(2, 3).unwrap();
    let t: BTreeSet<_> = enumerate::condition_t_matrices(2, 3).unwrap().into_iter().collect();
    assert_eq!(gen2.len(), 35);
    assert_eq!(gen2.into_iter().collect::<BTreeSet<_>>(), t);
}

#[test]
fn brute_force_agrees_with_generic() {
    let lambda = NodeTuple::rationals(&[0, 1, 5]).unwrap();
    for n in 0..=3 {
        let a: BTreeSet<_> = enumerate::brute_force_dope(&lambda, n).unwrap().into_iter().collect();
        let b: BTreeSet<_> = enumerate::enumerate_dope(&lambda, n).unwrap().into_iter().collect();
        assert_eq!(a, b);
    }
    for n in 0..=4 {
        assert_eq!(
            enumerate::brute_force_dope(&NodeTuple::rationals(&[3]).unwrap(), n).unwrap().len(),
            1 << n
        );
    }
}

#[test]
fn condition_t_counts() {
    assert_eq!(enumerate::count_condition_t(2, 5), big(462));
    assert_eq!(enumerate::count_condition_t(3, 6), big(17060));
    for m in 1..5 {
        assert_eq!(enumerate::count_condition_t(m, 0), big(1));
    }
    let rows = enumerate::check_conjecture_8_1(2, 4, &EnumOptions::default()).unwrap();
    assert!(rows.iter().all(|r| r.equal));
}

#[test]
fn generic_comparisons() {
    let opts = EnumOptions::default();
    let c = enumerate::compare_to_generic(&parse_lambda("0,1,2").unwrap(), 4, &opts).unwrap();
    assert_eq!((c.size, c.generic_size, c.equal), (446, 531, false));
    let c = enumerate::compare_to_generic(&parse_lambda("0,1,4").unwrap(), 3, &opts).unwrap();
    assert_eq!((c.size, c.generic_size), (98, 98));
    assert!(c.equal);
}

#[test]
fn closed_form_counts() {
    for n in 0..8 {
        assert_eq!(count_c(n, 0), big(1));
        assert_eq!(count_b(n, 0), big(1));
    }
    for s in 1..4 {
        assert_eq!(count_b(0, s), big(0));
    }
    assert_eq!(count_b(4, 2), big(2));
    // identical-row two-row dope matrices of width 5 with four ones
    let same = DopeMatrix::all(1, 4)
        .unwrap()
        .filter(|r| r.ones() == 2)
        .map(|r| DopeMatrix::new(vec![r.rows()[0].clone(), r.rows()[0].clone()]).unwrap())
        .filter(satisfies_condition_t)
        .count();
    assert_eq!(same, 2);

    assert_eq!(count_two_row_up_to_swap(1), big(2));
    assert_eq!(count_two_row_up_to_swap(2), big(6));
    for n in 0..=12u64 {
        let total: BigUint = (0..=n as i64 + 1).map(|t| count_c(n as i64, t)).sum();
        assert_eq!(total, binomial(big(2 * n + 1), big(n)));
        assert_eq!(two_row_total(n), total);
        assert_eq!(count_c(n as i64, n as i64), catalan(n + 1));
    }
}

#[test]
fn bound_examples() {
    for n in 1..6 {
        assert_eq!(bound_pairwise(2, n).unwrap().exact, two_row_total(n));
    }
    // 1716^3 = 5053029696 lies strictly between 71084^2 and 71085^2
    assert_eq!(bound_pairwise(3, 6).unwrap().exact, big(71085));
    assert!(big(71084).pow(2) < big(1716).pow(3) && big(1716).pow(3) <= big(71085).pow(2));
    assert_eq!(bound_pairwise(4, 1).unwrap().exact, big(9));
    assert_eq!(bound_zero_patterns(3, 2).unwrap().exact, big(120));
    let oracle: BigUint = (0..=6u64).map(|i| binomial(big(18), big(i))).sum();
    assert_eq!(bound_fixed_tuple(3, 6).unwrap().exact, oracle);
    assert_eq!(oracle, big(31180));
    assert_eq!(bound_fixed_tuple(3, 0).unwrap().exact, big(1));
    assert_eq!(erc_lower_bound_construction(2).unwrap().exact, big(4));
    assert!(erc_lower_bound_construction(4).unwrap().exact > big(0));
}

#[test]
fn matroid_examples() {
    let opts = EnumOptions::default();
    let view = MatroidView::new(&NodeTuple::rationals(&[0, 1]).unwrap(), 1).unwrap();
    let g = view.grid();
    assert!(view.is_independent(&g.empty()).unwrap());
    assert!(!view.is_independent(&pos(g, &[(0, 1), (1, 1)])).unwrap());
    assert!(view.is_independent(&pos(g, &[(0, 0), (1, 0)])).unwrap());

    for n in 0..=4 {
        let view = MatroidView::new(&NodeTuple::rationals(&[2]).unwrap(), n).unwrap();
        assert_eq!(view.all_flats(false, &opts).unwrap().len(), 1 << (n + 1));
        assert_eq!(view.flats_avoiding_top(&opts).unwrap().len(), 1 << n);
    }

    let lambda = NodeTuple::rationals(&[0, 1, 3]).unwrap();
    for n in 0..=3 {
        let view = MatroidView::new(&lambda, n).unwrap();
        let flats = view.flats_avoiding_top(&opts).unwrap();
        assert_eq!(flats.len(), enumerate::enumerate_dope(&lambda, n).unwrap().len());
        assert!(flats.iter().all(|f| view.is_flat(&f.positions).unwrap()));
    }
}
