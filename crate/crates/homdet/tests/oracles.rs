//! Independent oracles: recompute library results by a different route.

use std::io::Write;

use homdet::matrix::ExactMatrix;
use homdet::qspaces::{lambda_dim, sym_dim};
use homdet::rat::{qfact, rat, rat_int, Rat};
use homdet::zoo::{drinfeld_jimbo, hecke_sum, load_rmatrix, odd_point, super_flip};
use homdet::{HeckeSym, Limits};

fn sum_dj1_odd(q: &Rat) -> HeckeSym {
    hecke_sum(&drinfeld_jimbo(1, q).unwrap(), &odd_point(q).unwrap()).unwrap()
}

/// All permutations of 0..n as arrays.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..=p.len() {
            let mut next = p.clone();
            next.insert(slot, n - 1);
            out.push(next);
        }
    }
    out
}

/// A reduced word for `perm` from adjacent-transposition sorting.
fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut w = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let mut moved = false;
        for i in 0..w.len().saturating_sub(1) {
            if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                word.push(i + 1);
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    // sorting applies transpositions right to left
    word.reverse();
    word
}

/// `T_w = R_{i1} ... R_ik` along one reduced word of w.
fn t_w(hs: &HeckeSym, perm: &[usize]) -> ExactMatrix {
    let n = perm.len();
    let dim = hs.dim().pow(n as u32);
    let mut acc = ExactMatrix::identity(dim);
    for i in reduced_word(perm) {
        acc = acc.mul(&hs.r_op(i, n).unwrap()).unwrap();
    }
    acc
}

/// Word-sum oracle: the symmetrizers as literal sums over the group.
fn word_sum_check(hs: &HeckeSym, n: usize) {
    let limits = Limits::default();
    let dim = hs.dim().pow(n as u32);
    let mut sym_sum = ExactMatrix::zeros(dim, dim);
    let mut alt_sum = ExactMatrix::zeros(dim, dim);
    for perm in permutations(n) {
        let t = t_w(hs, &perm);
        let len = reduced_word(&perm).len() as i64;
        let weight = homdet::rat::rat_pow(&(-hs.q().clone()), -len);
        alt_sum = alt_sum.add(&t.scale(&weight)).unwrap();
        sym_sum = sym_sum.add(&t).unwrap();
    }
    let x = hs.symmetrizer(n, &limits).unwrap().matrix;
    let y = hs.antisymmetrizer(n, &limits).unwrap().matrix;
    assert_eq!(
        sym_sum,
        x.scale(&qfact(n, hs.q()).unwrap()),
        "symmetric word sum differs at level {n}"
    );
    assert_eq!(
        alt_sum,
        y.scale(&qfact(n, &hs.q().recip()).unwrap()),
        "antisymmetric word sum differs at level {n}"
    );
}

#[test]
fn word_sum_oracle_dj2() {
    let hs = drinfeld_jimbo(2, &rat_int(2)).unwrap();
    for n in 0..=4 {
        word_sum_check(&hs, n);
    }
}

#[test]
fn word_sum_oracle_dj3_fractional_q() {
    let hs = drinfeld_jimbo(3, &rat(7, 3)).unwrap();
    for n in 0..=3 {
        word_sum_check(&hs, n);
    }
}

#[test]
fn word_sum_oracle_super_flip() {
    let hs = super_flip(1, 1).unwrap();
    for n in 0..=4 {
        word_sum_check(&hs, n);
    }
}

#[test]
fn word_sum_oracle_sum_family() {
    let hs = sum_dj1_odd(&rat_int(3));
    for n in 0..=4 {
        word_sum_check(&hs, n);
    }
}

#[test]
fn graded_dimensions_match_closed_forms() {
    let limits = Limits::default();
    // classical binomial / multiset numbers survive the deformation
    let dj3 = drinfeld_jimbo(3, &rat_int(2)).unwrap();
    let lam: Vec<usize> = (0..=5).map(|k| lambda_dim(&dj3, k, &limits).unwrap()).collect();
    assert_eq!(lam, vec![1, 3, 3, 1, 0, 0]);
    let sym: Vec<usize> = (0..=5).map(|l| sym_dim(&dj3, l, &limits).unwrap()).collect();
    assert_eq!(sym, vec![1, 3, 6, 10, 15, 21]);

    // the (1|1) flip has constant dimension 2 on both sides
    let sf = super_flip(1, 1).unwrap();
    for n in 1..=4 {
        assert_eq!(lambda_dim(&sf, n, &limits).unwrap(), 2);
        assert_eq!(sym_dim(&sf, n, &limits).unwrap(), 2);
    }

    // birank (2,1): lambda saturates at 4, sym grows by 2
    let sf21 = super_flip(2, 1).unwrap();
    let lam: Vec<usize> = (0..=4).map(|k| lambda_dim(&sf21, k, &limits).unwrap()).collect();
    assert_eq!(lam, vec![1, 3, 4, 4, 4]);
    let sym: Vec<usize> = (0..=4).map(|l| sym_dim(&sf21, l, &limits).unwrap()).collect();
    assert_eq!(sym, vec![1, 3, 5, 7, 9]);
}

#[test]
fn trace_rank_cross_check() {
    // dimensions from idempotent traces equal ranks of the projectors
    let limits = Limits::default();
    for hs in [
        drinfeld_jimbo(2, &rat(1, 2)).unwrap(),
        super_flip(2, 1).unwrap(),
        sum_dj1_odd(&rat_int(5)),
    ] {
        for n in 0..=3 {
            let x = hs.symmetrizer(n, &limits).unwrap();
            let y = hs.antisymmetrizer(n, &limits).unwrap();
            assert_eq!(sym_dim(&hs, n, &limits).unwrap(), x.rank());
            assert_eq!(lambda_dim(&hs, n, &limits).unwrap(), y.rank());
        }
    }
}

#[test]
fn dimensions_do_not_depend_on_q() {
    let limits = Limits::default();
    let qs = [rat_int(2), rat_int(7), rat(1, 2), rat(7, 3)];
    for n in 2..=3 {
        let profiles: Vec<Vec<usize>> = qs
            .iter()
            .map(|q| {
                let hs = drinfeld_jimbo(n, q).unwrap();
                (0..=4)
                    .flat_map(|k| {
                        [
                            lambda_dim(&hs, k, &limits).unwrap(),
                            sym_dim(&hs, k, &limits).unwrap(),
                        ]
                    })
                    .collect()
            })
            .collect();
        assert!(profiles.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn load_rmatrix_round_trip_from_disk() {
    let text = r#"
dim = 2
q_excluded = ["0", "-1"]

[[entries]]
out = [1, 1]
in = [1, 1]
value = "q"

[[entries]]
out = [2, 2]
in = [2, 2]
value = "q"

[[entries]]
out = [2, 1]
in = [1, 2]
value = "1"

[[entries]]
out = [1, 2]
in = [2, 1]
value = "q"

[[entries]]
out = [2, 1]
in = [2, 1]
value = "q-1"
"#;
    let mut file = tempfile::Builder::new().suffix(".rm").tempfile().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    let q = rat(7, 3);
    let loaded = load_rmatrix(file.path(), &q).unwrap();
    let builtin = drinfeld_jimbo(2, &q).unwrap();
    assert_eq!(loaded.matrix(), builtin.matrix());

    let missing = load_rmatrix(std::path::Path::new("/nonexistent/x.rm"), &q);
    assert!(matches!(missing, Err(homdet::Error::Parse(_))));
}
