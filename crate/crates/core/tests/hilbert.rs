use num_bigint::BigInt;
use wflag::hilbert::{
    canonical_weight, check_closed_form_g2, check_closed_form_gr26, default_order, hilbert,
    hilbert_by_oracle, hilbert_closed_form, hilbert_closed_form_along, hilbert_oracle,
    numerator_from_oracle, Method, PairRange, Q6Range,
};
use wflag::lie::{CocharVec, LieType, WeightVec};
use wflag::model::{check_positivity, embedding_weights, WeightedFlagInput};
use wflag::poly::IntPolynomial;
use wflag::Error;

fn coeffs(p: &IntPolynomial, range: std::ops::RangeInclusive<usize>) -> Vec<i64> {
    range.map(|i| i64::try_from(p.coeff(i)).unwrap()).collect()
}

fn sparse(p: &IntPolynomial) -> Vec<(usize, i64)> {
    p.terms()
        .map(|(e, c)| (e, i64::try_from(c).unwrap()))
        .collect()
}

#[test]
fn g2_example_with_u3() {
    let r = hilbert(&WeightedFlagInput::g2_adjoint([-1, 1], 3)).unwrap();
    assert_eq!(r.method, Method::ClosedForm);
    assert_eq!(
        coeffs(&r.numerator, 0..=8),
        vec![1, 0, 0, 0, -3, -6, -8, 6, 21]
    );
    assert_eq!(
        coeffs(&r.numerator, 26..=33),
        vec![6, -8, -6, -3, 0, 0, 0, 1]
    );
    assert_eq!((r.q, r.k), (33, -9));
    assert!(r.palindromic);
}

#[test]
fn g2_cone_shifts_k() {
    let base = WeightedFlagInput::g2_adjoint([-1, 1], 3);
    let coned = base.clone().with_cones(&[1]).unwrap();
    let a = hilbert(&base).unwrap();
    let b = hilbert(&coned).unwrap();
    assert_eq!(a.numerator, b.numerator);
    assert_eq!(b.k, -10);
}

#[test]
fn g2_central_mu_falls_back_to_oracle() {
    let input = WeightedFlagInput::g2_adjoint([0, 0], 2);
    let r = hilbert(&input).unwrap();
    assert_eq!(r.method, Method::OracleReconstruction);
    assert_eq!(
        sparse(&r.numerator),
        vec![
            (0, 1),
            (4, -28),
            (6, 105),
            (8, -162),
            (10, 84),
            (12, 84),
            (14, -162),
            (16, 105),
            (18, -28),
            (22, 1)
        ]
    );
    assert_eq!((r.q, r.k), (22, -6));
    assert!(r.palindromic);
    let cw = canonical_weight(&r);
    assert!(cw.advisory);
    let coned = hilbert(&input.with_cones(&[1, 1]).unwrap()).unwrap();
    assert_eq!(coned.k, -8);
    assert!(!canonical_weight(&coned).advisory);
}

#[test]
fn deformed_closed_form_matches_oracle_for_central_mu() {
    let input = WeightedFlagInput::g2_adjoint([0, 0], 2);
    let datum = input.datum().unwrap();
    let forced = hilbert_closed_form_along(&input, &datum.regular_cochar).unwrap();
    let oracle = hilbert_by_oracle(&input).unwrap();
    assert_eq!(forced.numerator, oracle.numerator);
}

#[test]
fn straight_g2_top_sign_is_positive() {
    let r = hilbert(&WeightedFlagInput::g2_adjoint([0, 0], 1)).unwrap();
    assert_eq!(r.q, 11);
    assert_eq!(r.numerator.coeff(11), BigInt::from(1));
    assert_eq!(coeffs(&r.numerator, 0..=4), vec![1, 0, -28, 105, -162]);
    let series = hilbert_oracle(&WeightedFlagInput::g2_adjoint([0, 0], 1), 3).unwrap();
    assert_eq!(
        series.coeffs(),
        &[BigInt::from(1), BigInt::from(14), BigInt::from(77)]
    );
}

#[test]
fn g2_series_with_u2_lives_in_even_degrees() {
    let s = hilbert_oracle(&WeightedFlagInput::g2_adjoint([0, 0], 2), 12).unwrap();
    for e in (1..12).step_by(2) {
        assert_eq!(s.coeff(e), &BigInt::from(0));
    }
    assert_eq!(s.coeff(2), &BigInt::from(14));
}

#[test]
fn g2_example_with_u5() {
    let input = WeightedFlagInput::g2_adjoint([-1, 1], 5);
    let r = hilbert_closed_form(&input).unwrap();
    assert_eq!(
        coeffs(&r.numerator, 0..=13),
        vec![1, 0, 0, 0, 0, 0, 0, 0, -3, -6, -10, -6, -1, 12]
    );
    assert_eq!((r.q, r.k), (55, -15));
    let coned = hilbert(&input.with_cones(&[1]).unwrap()).unwrap();
    assert_eq!(coned.k, -16);
}

#[test]
fn gr26_examples() {
    let r = hilbert_closed_form(&WeightedFlagInput::gr26([2, 1, 0, 0, -1, -2], 4)).unwrap();
    assert_eq!(
        coeffs(&r.numerator, 0..=9),
        vec![1, 0, 0, 0, 0, -1, -2, -3, -2, -1]
    );
    assert_eq!((r.q, r.k), (36, -24));
    assert!(r.palindromic);

    let r = hilbert_closed_form(&WeightedFlagInput::gr26([2, 1, 1, 1, 1, 0], 0)).unwrap();
    assert_eq!(coeffs(&r.numerator, 0..=5), vec![1, 0, 0, -4, -6, 4]);
    assert_eq!((r.q, r.k), (18, -12));
}

#[test]
fn gr26_specialized_formula() {
    for (a, u) in [
        ([2, 1, 0, 0, -1, -2], 4),
        ([2, 1, 1, 1, 1, 0], 0),
        ([0; 6], 1),
    ] {
        let check = check_closed_form_gr26(a, u).unwrap();
        assert!(check.ok, "{a:?} {u}: {check:?}");
        let reading = check.reading.unwrap();
        assert_eq!(reading.q2_q5, PairRange::AllOrdered);
        assert_eq!(reading.q6, Q6Range::Strict);
        assert!(check.attempts[0].mismatch.is_some());
    }
}

#[test]
fn g2_specialized_checks() {
    for (mu, u) in [([-1, 1], 3), ([0, 0], 2), ([-1, 1], 5)] {
        let check = check_closed_form_g2(&WeightedFlagInput::g2_adjoint(mu, u)).unwrap();
        assert!(check.ok, "{check:?}");
    }
}

#[test]
fn oracle_reconstruction_roundtrip() {
    let input = WeightedFlagInput::g2_adjoint([-1, 1], 3);
    let ew = embedding_weights(&input).unwrap();
    let order = default_order(&ew.weights);
    let series = hilbert_oracle(&input, order).unwrap();
    let from_oracle = numerator_from_oracle(&input, &series).unwrap();
    let closed = hilbert_closed_form(&input).unwrap();
    assert_eq!(from_oracle.numerator, closed.numerator);
    let short = hilbert_oracle(&input, 20).unwrap();
    assert!(matches!(
        numerator_from_oracle(&input, &short),
        Err(Error::TruncationInsufficient(20))
    ));
}

#[test]
fn nonpositive_input_is_rejected() {
    let input = WeightedFlagInput::g2_adjoint([-1, 1], 1);
    assert!(!check_positivity(&input).unwrap().ok);
    assert!(matches!(
        hilbert(&input),
        Err(Error::NonPositiveWeight { .. })
    ));
}

fn dual_path_inputs() -> Vec<WeightedFlagInput> {
    let mut v = Vec::new();
    for (mu, u) in [
        ([-1, 1], 3),
        ([-1, 1], 4),
        ([-1, 1], 5),
        ([0, 1], 3),
        ([1, 0], 4),
        ([1, 1], 6),
        ([2, -1], 4),
        ([0, 1], 4),
    ] {
        v.push(WeightedFlagInput::g2_adjoint(mu, u));
    }
    v.push(
        WeightedFlagInput::g2_adjoint([-1, 1], 3)
            .with_cones(&[1])
            .unwrap(),
    );
    v.push(
        WeightedFlagInput::g2_adjoint([0, 1], 2)
            .with_cones(&[2])
            .unwrap(),
    );
    v.push(
        WeightedFlagInput::g2_adjoint([-1, 1], 5)
            .with_cones(&[1])
            .unwrap(),
    );
    let g2_short = WeightVec(vec![2, 1]);
    for (mu, u) in [([0, 1], 2), ([1, -1], 3), ([1, 1], 4)] {
        v.push(
            WeightedFlagInput::new(LieType::g2(), g2_short.clone(), CocharVec(mu.to_vec()), u)
                .unwrap(),
        );
    }
    for (mu, u) in [
        ([1, 0, 0, 0, 0, 0], 1),
        ([1, 1, 0, 0, 0, 0], 1),
        ([2, 1, 1, 1, 1, 0], 0),
        ([1, 0, 0, 0, 0, -1], 2),
        ([2, 1, 0, 0, -1, -2], 4),
    ] {
        v.push(WeightedFlagInput::gr26(mu, u));
    }
    let a3 = LieType::a(3).unwrap();
    for (mu, u) in [([1, 0, 0, 0], 1), ([1, 2, 0, 0], 1), ([0, 0, 1, -1], 2)] {
        v.push(
            WeightedFlagInput::new(a3, WeightVec(vec![1, 1, 0, 0]), CocharVec(mu.to_vec()), u)
                .unwrap(),
        );
    }
    let a2 = LieType::a(2).unwrap();
    for (lam, mu, u) in [
        ([1, 0, 0], [1, 0, 0], 1),
        ([2, 1, 0], [1, 0, -1], 3),
        ([2, 0, 0], [0, 1, 0], 1),
    ] {
        v.push(
            WeightedFlagInput::new(a2, WeightVec(lam.to_vec()), CocharVec(mu.to_vec()), u).unwrap(),
        );
    }
    let c2 = LieType::c(2).unwrap();
    for (lam, mu, u) in [
        ([1, 1], [1, 0], 2),
        ([1, 0], [1, 0], 2),
        ([2, 0], [0, 1], 3),
    ] {
        v.push(
            WeightedFlagInput::new(c2, WeightVec(lam.to_vec()), CocharVec(mu.to_vec()), u).unwrap(),
        );
    }
    let c3 = LieType::c(3).unwrap();
    v.push(
        WeightedFlagInput::new(c3, WeightVec(vec![1, 1, 1]), CocharVec(vec![1, 0, 0]), 4).unwrap(),
    );
    v.retain(|input| check_positivity(input).unwrap().ok);
    v
}

#[test]
fn closed_form_equals_oracle() {
    let inputs = dual_path_inputs();
    assert!(inputs.len() >= 25);
    for input in &inputs {
        let closed = hilbert_closed_form(input).unwrap_or_else(|e| panic!("{input:?}: {e}"));
        let ew = embedding_weights(input).unwrap();
        let order = (ew.sum() + ew.max()) as usize;
        let oracle = hilbert_oracle(input, order).unwrap();
        assert_eq!(closed.series(order), oracle, "{input:?}");
    }
}

#[test]
fn canonical_weight_identities_on_grids() {
    let mut g2_points = 0;
    for a in -2..=2 {
        for b in -2..=2 {
            for u in 1..=8 {
                let input = WeightedFlagInput::g2_adjoint([a, b], u);
                if !check_positivity(&input).unwrap().ok {
                    continue;
                }
                let check = check_closed_form_g2(&input).unwrap();
                assert!(check.ok, "G2 {a} {b} {u}: {check:?}");
                g2_points += 1;
                if g2_points >= 24 {
                    break;
                }
            }
        }
    }
    assert!(g2_points >= 20);

    let grid: [[i64; 6]; 5] = [
        [0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, -1],
        [2, 1, 1, 1, 1, 0],
        [1, 0, 0, 0, 0, -1],
    ];
    let mut count = 0;
    for a in grid {
        for u in 1..=5 {
            if !check_positivity(&WeightedFlagInput::gr26(a, u)).unwrap().ok {
                continue;
            }
            let check = check_closed_form_gr26(a, u).unwrap();
            assert_eq!(check.k, check.expected_k, "{a:?} {u}");
            assert!(check.ok, "{a:?} {u}: {check:?}");
            count += 1;
        }
    }
    assert!(count >= 20);
}
