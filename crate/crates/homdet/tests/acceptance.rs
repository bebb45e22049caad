//! Acceptance suite: one test per release criterion, all exact.
//!
//! Each test prints a single PASS/FAIL line for its criterion and then
//! asserts, so `--nocapture` yields a ten-line scoreboard.

use std::time::{Duration, Instant};

use homdet::koszul::{KoszulComplex, KoszulTable, SuperMatrixPoint};
use homdet::partitions::{pieri_col, pieri_row, verify_theorem1_homs, Partition};
use homdet::qspaces::{birank, poincare_profiles};
use homdet::rat::{qint, rat, rat_int, Rat};
use homdet::zoo::{drinfeld_jimbo, hecke_sum, odd_point, super_flip};
use homdet::{check_hecke, HeckeSym, Limits};

fn report(criterion: usize, desc: &str, ok: bool) {
    println!(
        "criterion {criterion:2} [{}]: {desc}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {desc}");
}

fn sampled_qs() -> Vec<Rat> {
    vec![rat_int(2), rat_int(3), rat_int(5), rat(1, 2), rat(7, 3)]
}

fn sum_dj_odd(n: usize, q: &Rat) -> HeckeSym {
    let dj = drinfeld_jimbo(n, q).expect("dj component");
    let odd = odd_point(q).expect("odd component");
    hecke_sum(&dj, &odd).expect("hecke sum")
}

/// Every zoo member at one evaluation point; flips always sit at q = 1.
fn all_members(q: &Rat) -> Vec<(String, HeckeSym)> {
    let mut out = vec![];
    for n in 2..=4 {
        out.push((format!("dj{n}"), drinfeld_jimbo(n, q).expect("dj")));
    }
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        out.push((
            format!("superflip({m}|{n})"),
            super_flip(m, n).expect("super flip"),
        ));
    }
    out.push(("odd".into(), odd_point(q).expect("odd point")));
    out.push(("sum:dj1+odd".into(), sum_dj_odd(1, q)));
    out.push(("sum:dj2+odd".into(), sum_dj_odd(2, q)));
    out
}

#[test]
fn criterion_01_axiom_suite() {
    let t0 = Instant::now();
    let mut ok = true;
    for q in sampled_qs() {
        for name in ["dj2", "dj3", "dj4", "odd", "sum:dj1+odd", "sum:dj2+odd"] {
            let hs = match name {
                "dj2" => drinfeld_jimbo(2, &q),
                "dj3" => drinfeld_jimbo(3, &q),
                "dj4" => drinfeld_jimbo(4, &q),
                "odd" => odd_point(&q),
                "sum:dj1+odd" => Ok(sum_dj_odd(1, &q)),
                _ => Ok(sum_dj_odd(2, &q)),
            }
            .expect("construction");
            let rep = check_hecke(hs.matrix(), &q).expect("axiom check runs");
            ok &= rep.all_pass();
        }
    }
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let hs = super_flip(m, n).expect("super flip");
        let rep = check_hecke(hs.matrix(), &rat_int(1)).expect("axiom check runs");
        ok &= rep.all_pass();
    }
    let within = t0.elapsed() < Duration::from_secs(30);
    report(1, "Hecke axioms across the zoo at five rationals", ok && within);
}

#[test]
fn criterion_02_idempotent_suite() {
    let limits = Limits::default();
    let mut ok = true;
    for (_, hs) in all_members(&rat_int(2)) {
        let d = hs.dim();
        for n in 0..=5usize {
            if d.pow(n as u32) > 50_000 {
                break;
            }
            let x = hs.symmetrizer(n, &limits).expect("symmetrizer").matrix;
            let y = hs.antisymmetrizer(n, &limits).expect("antisymmetrizer").matrix;
            ok &= x.mul(&x).unwrap() == x;
            ok &= y.mul(&y).unwrap() == y;
            for i in 1..n {
                let ri = hs.r_op(i, n).unwrap();
                ok &= ri.mul(&x).unwrap() == x.scale(hs.q());
                ok &= ri.mul(&y).unwrap() == y.scale(&rat_int(-1));
            }
        }
    }
    report(2, "projector idempotency and R eigenvalue relations to level 5", ok);
}

#[test]
fn criterion_03_gurevich_identity() {
    let t0 = Instant::now();
    let limits = Limits::default();
    let members = [
        super_flip(2, 1).expect("super flip"),
        drinfeld_jimbo(3, &rat_int(2)).expect("dj3"),
        sum_dj_odd(1, &rat_int(3)),
    ];
    let mut ok = true;
    for hs in &members {
        let mut complex = KoszulComplex::new(hs, limits.clone());
        for k in 0..=4 {
            for l in 0..=4 {
                let rep = complex.gurevich_identity(k, l).expect("identity");
                ok &= rep.matches;
            }
        }
    }
    let within = t0.elapsed() < Duration::from_secs(300);
    report(3, "scalar identity q dd' + d'd at all (k,l) <= (4,4)", ok && within);
}

/// The five birank-bearing members with series windows that stabilize.
fn birank_members(q: &Rat) -> Vec<(String, HeckeSym, usize, (usize, usize))> {
    vec![
        ("dj2".into(), drinfeld_jimbo(2, q).unwrap(), 7, (2, 0)),
        ("dj3".into(), drinfeld_jimbo(3, q).unwrap(), 9, (3, 0)),
        ("superflip(1|1)".into(), super_flip(1, 1).unwrap(), 6, (1, 1)),
        ("superflip(2|1)".into(), super_flip(2, 1).unwrap(), 7, (2, 1)),
        ("sum:dj1+odd".into(), sum_dj_odd(1, q), 6, (1, 1)),
    ]
}

#[test]
fn criterion_04_rank_relation() {
    let limits = Limits::default();
    let mut ok = true;
    for q in sampled_qs() {
        for (name, hs, kmax, _) in birank_members(&q) {
            let qq = hs.q().clone();
            let (m, n) = birank(&hs, kmax, &limits).unwrap_or_else(|e| {
                panic!("birank detection failed for {name}: {e}");
            });
            ok &= hs.rank_q() == -qint(n as i64 - m as i64, &qq);
        }
    }
    report(4, "rank_q R = -[n-m]_q at each detected birank", ok);
}

#[test]
fn criterion_05_homology_concentration() {
    let t0 = Instant::now();
    let limits = Limits::default();
    let q2 = rat_int(2);
    let mut cases: Vec<(HeckeSym, (usize, usize))> = vec![
        (drinfeld_jimbo(2, &q2).unwrap(), (2, 0)),
        (drinfeld_jimbo(3, &q2).unwrap(), (3, 0)),
        (super_flip(1, 1).unwrap(), (1, 1)),
        (super_flip(2, 1).unwrap(), (2, 1)),
    ];
    for q in [rat_int(2), rat_int(3), rat(1, 2)] {
        cases.push((sum_dj_odd(1, &q), (1, 1)));
    }
    let mut ok = true;
    for (hs, expected) in &cases {
        let mut complex = KoszulComplex::new(hs, limits.clone());
        let table = complex.homology_table(5, 5).expect("table");
        ok &= table.concentrated_at() == Some(*expected);
    }
    let within = t0.elapsed() < Duration::from_secs(600);
    report(5, "single one-dimensional homology class at (m,n)", ok && within);
}

#[test]
fn criterion_06_birank_detection_and_duality() {
    let limits = Limits::default();
    let mut ok = true;
    for (name, hs, kmax, expected) in birank_members(&rat_int(2)) {
        let detected = birank(&hs, kmax, &limits)
            .unwrap_or_else(|e| panic!("birank failed for {name}: {e}"));
        ok &= detected == expected;
        let profile = poincare_profiles(&hs, kmax, 6, &limits).expect("profiles");
        ok &= profile.duality_ok && profile.duality_degree >= 5;
    }
    report(6, "birank pairs and Poincare duality to the computed degree", ok);
}

#[test]
fn criterion_07_berezinian() {
    let limits = Limits::default();
    let mut ok = true;
    for (m, n) in [(1, 1), (2, 1)] {
        let hs = super_flip(m, n).expect("super flip");
        let mut complex = KoszulComplex::new(&hs, limits.clone());
        for seed in 0..20u64 {
            let point = SuperMatrixPoint::random(m, n, seed);
            // the check also verifies exact commutation with d and d'
            let rep = complex
                .berezinian_check(m, n, &point)
                .expect("action commutes and the class survives");
            ok &= rep.equal;
        }
    }
    report(7, "generator action equals det(A)/det(D) on 20 points per flip", ok);
}

/// All partitions of total size `n`, each with weakly decreasing parts.
fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(stack.clone()).expect("sorted parts"));
            return;
        }
        for next in (1..=rest.min(max)).rev() {
            stack.push(next);
            rec(rest - next, next, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Horizontal strip: containment with at most one new cell per column.
fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    let rows = outer.len();
    inner.len() <= rows
        && (0..rows).all(|i| outer.get(i) >= inner.get(i))
        && (1..rows).all(|i| outer.get(i) <= inner.get(i - 1))
}

/// Vertical strip: containment with at most one new cell per row.
fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len()
        && (0..outer.len()).all(|i| {
            let diff = outer.get(i) as i64 - inner.get(i) as i64;
            diff == 0 || diff == 1
        })
}

fn sorted_parts(list: &[Partition]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = list.iter().map(|p| p.parts().to_vec()).collect();
    v.sort();
    v
}

#[test]
fn criterion_08_hom_combinatorics_and_pieri_oracle() {
    let mut ok = true;
    for m in 1..=3 {
        for n in 1..=3 {
            ok &= verify_theorem1_homs(m, n) == (1, 0, 0);
        }
    }
    // brute-force tableau oracle for both Pieri rules
    for total in 1..=8usize {
        for base in 0..total {
            let strip = total - base;
            for lambda in partitions_of(base) {
                let all_bigger = partitions_of(total);
                let oracle_h: Vec<Partition> = all_bigger
                    .iter()
                    .filter(|mu| is_horizontal_strip(&lambda, mu))
                    .cloned()
                    .collect();
                let oracle_v: Vec<Partition> = all_bigger
                    .iter()
                    .filter(|mu| is_vertical_strip(&lambda, mu))
                    .cloned()
                    .collect();
                ok &= sorted_parts(&pieri_row(&lambda, strip)) == sorted_parts(&oracle_h);
                ok &= sorted_parts(&pieri_col(&lambda, strip)) == sorted_parts(&oracle_v);
            }
        }
    }
    report(8, "hom triples (1,0,0) and Pieri rules against the tableau oracle", ok);
}

#[test]
fn criterion_09_generic_q_stability() {
    let limits = Limits::default();
    let qs = [
        rat_int(2),
        rat_int(3),
        rat_int(5),
        rat_int(7),
        rat_int(11),
        rat_int(13),
        rat(1, 2),
        rat(3, 2),
        rat(5, 2),
        rat(7, 3),
    ];
    let tables: Vec<KoszulTable> = qs
        .iter()
        .map(|q| {
            let hs = sum_dj_odd(1, q);
            KoszulComplex::new(&hs, limits.clone())
                .homology_table(4, 4)
                .expect("table")
        })
        .collect();
    let ok = tables.windows(2).all(|w| w[0] == w[1]);
    report(9, "identical homology tables across ten rational q values", ok);
}

#[test]
fn criterion_10_differentials_square_to_zero() {
    let limits = Limits::default();
    let mut ok = true;
    let mut suites: Vec<(String, HeckeSym)> = all_members(&rat_int(2));
    suites.push(("dj2@1/2".into(), drinfeld_jimbo(2, &rat(1, 2)).unwrap()));
    suites.push(("sum:dj1+odd@1/2".into(), sum_dj_odd(1, &rat(1, 2))));
    for (name, hs) in &suites {
        let mut complex = KoszulComplex::new(hs, limits.clone());
        for k in 0..=3usize {
            for l in 0..=3usize {
                let d1 = complex.differential_d(k, l).expect("d");
                let d2 = complex.differential_d(k + 1, l + 1).expect("d");
                let dd = d2.mul(&d1).expect("compose");
                ok &= dd.is_zero();
                let dp1 = complex.codifferential_dprime(k + 1, l + 1).expect("d'");
                if k + 1 >= 1 && l + 1 >= 1 && k.min(l) >= 1 {
                    let dp2 = complex.codifferential_dprime(k, l).expect("d'");
                    let comp = dp2.mul(&dp1);
                    ok &= comp.expect("compose").is_zero();
                }
                assert!(ok, "square check failed for {name} at ({k},{l})");
            }
        }
    }
    report(10, "d^2 = 0 and d'^2 = 0 at every computed bidegree", ok);
}
