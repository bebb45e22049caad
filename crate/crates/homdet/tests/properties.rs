//! Randomized properties: exact algebra laws that must hold identically.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use homdet::matrix::ExactMatrix;
use homdet::poly::IntPoly;
use homdet::qspaces::{reconstruct_rational, Reconstruction};
use homdet::rat::{qfact, qint, rat, rat_int, rat_pow, Rat};

fn entries(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(-5i64..=5, rows * cols).prop_map(move |vals| {
        ExactMatrix::from_entries(
            rows,
            cols,
            vals.iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(|(i, v)| (i / cols, i % cols, rat_int(*v))),
        )
    })
}

/// Triple of composable matrices with random small dimensions.
fn composable_triple() -> impl Strategy<Value = (ExactMatrix, ExactMatrix, ExactMatrix)> {
    (1usize..4, 1usize..4, 1usize..4, 1usize..4)
        .prop_flat_map(|(a, b, c, d)| (entries(a, b), entries(b, c), entries(c, d)))
}

/// Expands numer/denom as a power series, when the constant term allows it.
fn expand_series(numer: &IntPoly, denom: &IntPoly, terms: usize) -> Option<Vec<Rat>> {
    let d0 = denom.coeff(0);
    if d0.is_zero() {
        return None;
    }
    let d0 = Rat::from(d0);
    let deg_d = denom.degree().unwrap_or(0);
    let mut series: Vec<Rat> = Vec::with_capacity(terms);
    for t in 0..terms {
        let mut acc = Rat::from(numer.coeff(t));
        for i in 1..=deg_d.min(t) {
            acc -= Rat::from(denom.coeff(i)) * &series[t - i];
        }
        series.push(acc / &d0);
    }
    Some(series)
}

proptest! {
    #[test]
    fn matrix_product_transposes_contravariantly(
        (a, b, _) in composable_triple()
    ) {
        let lhs = a.mul(&b).unwrap().transpose();
        let rhs = b.transpose().mul(&a.transpose()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrix_product_is_associative(
        (a, b, c) in composable_triple()
    ) {
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrix_product_distributes(
        (a, b, c) in (1usize..4, 1usize..4, 1usize..4)
            .prop_flat_map(|(r, m, c)| (entries(r, m), entries(m, c), entries(m, c)))
    ) {
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_mixed_product(
        (a, b, c, d) in (1usize..3, 1usize..3, 1usize..3, 1usize..3)
            .prop_flat_map(|(p, q, r, s)| {
                (entries(p, q), entries(r, s), entries(q, p), entries(s, r))
            })
    ) {
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_kernel_accounting(
        m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| entries(r, c))
    ) {
        let (rank, kernel) = m.rank_and_kernel();
        prop_assert_eq!(rank + kernel.len(), m.cols());
        for v in &kernel {
            let sparse: Vec<(usize, Rat)> = v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect();
            prop_assert!(!sparse.is_empty(), "kernel vectors are nonzero");
            prop_assert!(m.apply(&sparse).is_empty(), "kernel vector not annihilated");
        }
    }

    #[test]
    fn inverse_and_determinant_agree(
        m in (1usize..4).prop_flat_map(|n| entries(n, n))
    ) {
        let det = m.det().unwrap();
        match m.inverse() {
            Some(inv) => {
                prop_assert!(!det.is_zero());
                prop_assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(m.rows()));
            }
            None => prop_assert!(det.is_zero()),
        }
    }

    #[test]
    fn determinant_is_multiplicative(
        (a, b) in (1usize..4).prop_flat_map(|n| (entries(n, n), entries(n, n)))
    ) {
        let lhs = a.mul(&b).unwrap().det().unwrap();
        prop_assert_eq!(lhs, a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn solve_recovers_constructed_solutions(
        (m, x) in (1usize..4, 1usize..4)
            .prop_flat_map(|(r, c)| (entries(r, c), proptest::collection::vec(-5i64..=5, c)))
    ) {
        let sparse: Vec<(usize, Rat)> = x
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(i, v)| (i, rat_int(*v)))
            .collect();
        let b = m.apply(&sparse);
        let sol = m.solve(&b).expect("constructed system is solvable");
        let sol_sparse: Vec<(usize, Rat)> = sol
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        prop_assert_eq!(m.apply(&sol_sparse), b);
    }

    #[test]
    fn qint_addition_law(m in 0i64..8, n in 0i64..8, num in 1i64..6, den in 1i64..4) {
        let q = rat(num, den);
        let lhs = qint(m + n, &q);
        let rhs = qint(m, &q) + rat_pow(&q, m) * qint(n, &q);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn qfact_recursion(n in 1usize..7, num in 1i64..6, den in 1i64..4) {
        let q = rat(num, den);
        let lhs = qfact(n, &q).unwrap();
        let rhs = qfact(n - 1, &q).unwrap() * qint(n as i64, &q);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reconstruction_is_sound(
        seq in proptest::collection::vec(-9i64..=9, 6..=12)
    ) {
        if let Reconstruction::Determined { numer, denom } = reconstruct_rational(&seq) {
            let series = expand_series(&numer, &denom, seq.len())
                .expect("reconstructed denominator has a unit constant term");
            for (t, s) in series.iter().enumerate() {
                prop_assert_eq!(s.clone(), rat_int(seq[t]), "series mismatch at degree {}", t);
            }
        }
    }

    #[test]
    fn reconstruction_finds_planted_fractions(
        ncoeffs in proptest::collection::vec(-3i64..=3, 1..=3),
        dtail in proptest::collection::vec(-2i64..=2, 0..=2)
    ) {
        let numer = IntPoly::from_i64(&ncoeffs);
        let mut dcoeffs = vec![1i64];
        dcoeffs.extend(&dtail);
        let denom = IntPoly::from_i64(&dcoeffs);
        let terms = 2 * (ncoeffs.len() + dcoeffs.len()) + 4;
        let series = expand_series(&numer, &denom, terms).unwrap();
        let ints: Vec<i64> = series
            .iter()
            .map(|x| {
                assert!(x.denom().is_one(), "unit denominator keeps the series integral");
                let n: BigInt = x.numer().clone();
                i64::try_from(n).expect("series stays in range")
            })
            .collect();
        match reconstruct_rational(&ints) {
            Reconstruction::Determined { numer: rn, denom: rd } => {
                // minimality: the detected orders never exceed the planted ones
                prop_assert!(rd.degree().unwrap_or(0) <= dcoeffs.len() - 1);
                // exactness: cross products agree as polynomials
                prop_assert_eq!(rn.mul(&denom), numer.mul(&rd));
            }
            Reconstruction::Undetermined => {
                prop_assert!(false, "planted fraction with margin was not detected");
            }
        }
    }
}
