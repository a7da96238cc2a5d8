//! End-to-end acceptance gate. Nine criteria, one pass/fail line each; the
//! test fails if any criterion fails. Run with --nocapture to see the lines
//! on success.

use num_bigint::BigInt;
use num_integer::Integer;
use psl52_verify::algebra::factor::is_irreducible;
use psl52_verify::algebra::field::{rat, rat_int, FieldCtx, Rational, QQ};
use psl52_verify::algebra::poly::Poly;
use psl52_verify::algebra::profile::Profile;
use psl52_verify::algebra::resultant::resultant_qq;
use psl52_verify::algebra::sqfree::yun;
use psl52_verify::covers::{
    dedekind_scan, family, lambda_function, newton_roundtrip, profiles, specialization_match,
    split_1516, verify_degenerate,
};
use psl52_verify::lattice::rational_reconstruct;
use psl52_verify::nielsen::{
    braid_orbit, cusp_analysis, cusp_pairwise, genus_rh, ramification_braids, reduce_symmetrize,
    search_tuples, BraidConfig, GroupData, RamificationData,
};
use psl52_verify::permgrp::census::{compute_census, Census};
use psl52_verify::permgrp::conjugacy::ConjugacyVerdict;
use psl52_verify::permgrp::{psl52_action, ActionKind, GROUP_ORDER};
use psl52_verify::report::VerificationReport;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};
use std::time::{Duration, Instant};

struct Gate {
    lines: Vec<(String, bool)>,
}

impl Gate {
    fn new() -> Self {
        Gate { lines: Vec::new() }
    }

    fn record(&mut self, name: &str, pass: bool) {
        println!("criterion {name}: {}", if pass { "PASS" } else { "FAIL" });
        self.lines.push((name.to_string(), pass));
    }

    fn finish(self) {
        let failed: Vec<&str> = self
            .lines
            .iter()
            .filter(|(_, p)| !p)
            .map(|(n, _)| n.as_str())
            .collect();
        assert!(failed.is_empty(), "failed criteria: {failed:?}");
    }
}

/// Sylvester-matrix resultant by rational Gaussian elimination; independent
/// of the subresultant route used by the library.
fn sylvester_resultant(f: &Poly<QQ>, g: &Poly<QQ>) -> Rational {
    let (m, n) = (f.deg(), g.deg());
    let size = m + n;
    let mut a = vec![vec![QQ.zero(); size]; size];
    for i in 0..n {
        for j in 0..=m {
            a[i][i + j] = f.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            a[n + i][i + j] = g.coeff(n - j);
        }
    }
    let mut det = QQ.one();
    for col in 0..size {
        let pivot = match (col..size).find(|&r| !a[r][col].eq(&QQ.zero())) {
            Some(p) => p,
            None => return QQ.zero(),
        };
        if pivot != col {
            a.swap(pivot, col);
            det = QQ.neg(&det);
        }
        det = QQ.mul(&det, &a[col][col]);
        let inv = QQ.inv(&a[col][col]).unwrap();
        for r in col + 1..size {
            let factor = QQ.mul(&a[r][col], &inv);
            for c in col..size {
                let s = QQ.mul(&factor, &a[col][c]);
                a[r][c] = QQ.sub(&a[r][c], &s);
            }
        }
    }
    det
}

fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> Poly<QQ> {
    loop {
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9i64..=9)).collect();
        let p = Poly::from_i64(QQ, &coeffs);
        if p.deg() == deg {
            return p;
        }
    }
}

#[test]
fn acceptance() {
    let mut gate = Gate::new();

    // 1: censuses of both degree-31 actions
    let started = Instant::now();
    let points = compute_census(&psl52_action(ActionKind::Points), 31);
    let hyper = compute_census(&psl52_action(ActionKind::Hyperplanes), 31);
    let census_time = started.elapsed();
    gate.record(
        "1 group order and censuses",
        points.total() == GROUP_ORDER
            && hyper.total() == GROUP_ORDER
            && points.counts == hyper.counts
            && points.count(&Profile::parse("2^8.1^15").unwrap()) == 465
            && census_time <= Duration::from_secs(300),
    );

    // 2: braid orbit, 24 points, blocks, structures, genus
    let config = BraidConfig::calibrated();
    let gd = GroupData::new();
    let orbit = braid_orbit(&search_tuples(&gd), &gd);
    let reduced = reduce_symmetrize(&orbit, &config).unwrap();
    let ram = ramification_braids(&orbit, &reduced, &config).unwrap();
    let blocks_ok = ram.block_systems.len() == 1
        && ram.block_systems[0].len() == 12
        && ram.block_systems[0].iter().all(|b| b.len() == 2);
    let point_types: Vec<String> = ram
        .braids
        .iter()
        .map(|b| b.perm.cycle_type().to_string())
        .collect();
    let block_types: Vec<String> = if blocks_ok {
        ram.braids
            .iter()
            .map(|b| {
                RamificationData::block_action(&ram.block_systems[0], &b.perm)
                    .cycle_type()
                    .to_string()
            })
            .collect()
    } else {
        Vec::new()
    };
    let product = ram.braids[0]
        .perm
        .compose(&ram.braids[1].perm)
        .compose(&ram.braids[2].perm);
    let g24 = genus_rh(
        24,
        &point_types
            .iter()
            .map(|s| Profile::parse(s).unwrap())
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let g12 = if blocks_ok {
        genus_rh(
            12,
            &block_types
                .iter()
                .map(|s| Profile::parse(s).unwrap())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    } else {
        -1
    };
    gate.record(
        "2 reduced orbit geometry",
        reduced.len() == 24
            && blocks_ok
            && point_types == ["4^4.3^2.1^2", "7^2.3^2.2^2", "2^12"]
            && block_types == ["4^2.3.1", "7.3.2", "2^5.1^2"]
            && product.is_identity()
            && g24 == 0
            && g12 == 0,
    );

    // 3: cusp subgroups of the coalescing braid
    let merge_braid = ram
        .braids
        .iter()
        .find(|b| b.coalesce.is_some() && b.perm.cycle_type().to_string() == "7^2.3^2.2^2")
        .unwrap();
    let cusps = cusp_analysis(&orbit, &reduced, merge_braid);
    let pairs = cusp_pairwise(&cusps, &gd);
    let sevens_full = cusps.iter().filter(|c| c.cycle_len == 7).count() == 2
        && cusps
            .iter()
            .filter(|c| c.cycle_len == 7)
            .all(|c| c.subgroup_order == GROUP_ORDER);
    let non_conjugate_pair = |len: usize| -> bool {
        let idx: Vec<usize> = cusps
            .iter()
            .enumerate()
            .filter(|(_, c)| c.cycle_len == len)
            .map(|(i, _)| i)
            .collect();
        idx.len() == 2
            && pairs
                .iter()
                .find(|p| p.i == idx[0] && p.j == idx[1])
                .map(|p| matches!(p.verdict, ConjugacyVerdict::NonConjugate(_)))
                .unwrap_or(false)
    };
    gate.record(
        "3 cusp subgroup conjugacy",
        sevens_full && non_conjugate_pair(3) && non_conjugate_pair(2),
    );

    // 4: fiber profiles across the parameter sweep, degenerate rejection
    let sweep = [rat(0, 1), rat(1, 2), rat_int(1), rat_int(5), rat_int(7), rat_int(-2)];
    let profiles_ok = sweep.iter().all(|a| {
        let c = family(a).unwrap();
        let (p0, pinf) = profiles(&c);
        p0.to_string() == "3^10.1" && pinf.to_string() == "8^2.4^3.2.1"
    });
    let degenerate_rejected = [2i64, -1, -4]
        .iter()
        .all(|&d| family(&rat_int(d)).is_err());
    gate.record(
        "4 family profiles and rejection",
        profiles_ok && degenerate_rejected && specialization_match().is_ok(),
    );

    // 5: the branch-point invariant as a function of the parameter
    let lambda_ok = match lambda_function() {
        Ok(lf) => {
            let l0 = lf.eval(&rat(0, 1));
            lf.degree() == 24 && l0.is_some() && l0 == lf.eval(&rat(1, 2))
        }
        Err(_) => false,
    };
    gate.record("5 invariant degree and coincidence", lambda_ok);

    // 6: degenerate three-point cover certificate
    let degen_ok = match verify_degenerate() {
        Ok(cert) => {
            cert.profile_zero.to_string() == "21.7.3"
                && cert.profile_infinity.to_string() == "8^2.4^3.2.1"
                && cert.profile_t0.to_string() == "2^8.1^15"
        }
        Err(_) => false,
    };
    gate.record("6 three-point cover", degen_ok);

    // 7: p-adic Newton / lattice reconstruction roundtrip
    let started = Instant::now();
    let roundtrip_ok = match newton_roundtrip(11, 64) {
        Ok(rt) => {
            let a1: Vec<BigInt> = [8, -11, 4].iter().map(|&c| BigInt::from(c)).collect();
            rt.minpolys == rt.expected && rt.minpolys[0] == a1
        }
        Err(_) => false,
    };
    let roundtrip_time = started.elapsed();
    gate.record(
        "7 reconstruction roundtrip",
        roundtrip_ok && roundtrip_time <= Duration::from_secs(60),
    );

    // 8: Frobenius scan against the census, split witness, planted control
    let cover = family(&rat(0, 1)).unwrap();
    let fiber = cover.a.sub(&cover.b.mul_scalar(&rat_int(403)));
    let scan = dedekind_scan(&fiber, &points, 10_000, 100).unwrap();
    let planted = Poly::from_i64(
        QQ,
        &{
            let mut c = vec![0i64; 32];
            c[0] = -1;
            c[1] = -1;
            c[31] = 1;
            c
        },
    );
    let planted_scan = dedekind_scan(&planted, &points, 10_000, 100).unwrap();
    let split_ok = match split_1516(1, 5) {
        Ok(s) => s.samples.len() == 5 && s.samples.iter().all(|(_, d)| d == &[15, 16]),
        Err(_) => false,
    };
    gate.record(
        "8 scan, split and control",
        is_irreducible(&fiber)
            && scan.verdict()
            && scan.patterns.contains_key("31")
            && scan.patterns.contains_key("21.7.3")
            && !planted_scan.verdict()
            && !planted_scan.strangers.is_empty()
            && split_ok,
    );

    // 9: property suites
    gate.record("9 property suites", property_suites(&points));

    gate.finish();
}

fn property_suites(census: &Census) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(9);

    // resultant agrees with the Sylvester determinant
    for _ in 0..40 {
        let df = rng.gen_range(1..=5);
        let dg = rng.gen_range(1..=5);
        let f = random_poly(&mut rng, df);
        let g = random_poly(&mut rng, dg);
        if resultant_qq(&f, &g) != sylvester_resultant(&f, &g) {
            return false;
        }
    }

    // squarefree decomposition recomposes to the input
    for _ in 0..20 {
        let da = rng.gen_range(1..=3);
        let db = rng.gen_range(1..=2);
        let a = random_poly(&mut rng, da);
        let b = random_poly(&mut rng, db);
        let f = a.mul(&b.pow(rng.gen_range(2..=3)));
        let (c, parts) = yun(&f);
        let mut recomposed = Poly::constant(QQ, c);
        for (g, m) in &parts {
            recomposed = recomposed.mul(&g.pow(*m as u64));
        }
        if recomposed != f {
            return false;
        }
    }

    // rational reconstruction inverts a*b^-1 mod m for every reduced a/b
    // inside the Farey bound of m = 10007
    let m = 10007i64;
    let mb = BigInt::from(m);
    for b in 1i64..=70 {
        let mut binv = 1i64;
        let mut base = b % m;
        let mut e = m - 2;
        while e > 0 {
            if e & 1 == 1 {
                binv = binv * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        for a in -70i64..=70 {
            if a.gcd(&b) != 1 {
                continue;
            }
            let residue = BigInt::from((a.rem_euclid(m) * binv) % m);
            if rational_reconstruct(&residue, &mb) != Some(rat(a, b)) {
                return false;
            }
        }
    }

    // the braid relation holds on the orbit graph
    let gd = GroupData::new();
    let orbit = braid_orbit(&search_tuples(&gd), &gd);
    let word = |w: &[&str]| -> Vec<String> { w.iter().map(|s| s.to_string()).collect() };
    if orbit.word_image(&word(&["q1", "q2", "q1"])) != orbit.word_image(&word(&["q2", "q1", "q2"]))
    {
        return false;
    }

    // reports serialize byte-identically across reruns
    let build = || -> String {
        let cover = family(&rat_int(5)).unwrap();
        let fiber = cover.a.sub(&cover.b.mul_scalar(&rat_int(11)));
        let scan = dedekind_scan(&fiber, census, 2000, 50).unwrap();
        let mut rep = VerificationReport::default();
        rep.push(
            "acceptance.scan",
            "factor-degree patterns at good primes are census cycle types",
            &[("bound", "2000".into())],
            scan.verdict(),
            &[("good_primes", scan.good_primes.to_string())],
        );
        rep.to_json()
    };
    build() == build()
}
