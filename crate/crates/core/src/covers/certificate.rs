//! The bundled certificate for one parameter value: fiber profiles, branch
//! locus, involution fibers, specialization check at alpha = 0, Frobenius
//! sampling at a random t, and a fiber irreducibility spot check. The
//! subgroup classification fact for primitive degree-31 groups is an
//! external citation, not re-proven here; what the bundle establishes is
//! census-consistency with order-31 and 21.7.3 witnesses, which is the
//! group-theoretic half of the argument. The 15/16 split that excludes the
//! alternating and symmetric overgroups is a separate cross-parameter check
//! (see split_1516) and is reported by the caller alongside this bundle.

use super::branch::{branch_locus, verify_2a_fibers};
use super::dedekind::dedekind_scan;
use super::family::{family, profiles, specialization_match};
use super::CoversError;
use crate::algebra::factor::is_irreducible;
use crate::algebra::field::{rat, Rational};
use crate::permgrp::census::Census;
use crate::report::VerificationReport;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

pub struct CertificateConfig {
    pub prime_bound: u64,
    pub min_good_primes: usize,
    pub seed: u64,
}

impl Default for CertificateConfig {
    fn default() -> Self {
        CertificateConfig {
            prime_bound: 10_000,
            min_good_primes: 100,
            seed: 1,
        }
    }
}

/// Certificate for one admissible alpha. Degenerate alpha errors out before
/// any entry is produced; everything else lands in the report with a
/// per-claim verdict.
pub fn galois_certificate(
    alpha: &Rational,
    census: &Census,
    cfg: &CertificateConfig,
) -> Result<VerificationReport, CoversError> {
    let cover = family(alpha)?;
    let astr = alpha.to_string();
    let mut rep = VerificationReport::default();

    let (p0, pinf) = profiles(&cover);
    rep.push(
        "family.profiles",
        "fiber multiplicity profiles at t=0 and t=infinity are 3^10.1 and 8^2.4^3.2.1",
        &[("alpha", astr.clone())],
        p0.to_string() == "3^10.1" && pinf.to_string() == "8^2.4^3.2.1",
        &[("t0", p0.to_string()), ("tinf", pinf.to_string())],
    );

    if alpha.is_zero() {
        rep.push(
            "family.specialization",
            "the alpha=0 member equals its recorded expanded form coefficient for coefficient",
            &[("alpha", astr.clone())],
            specialization_match().is_ok(),
            &[],
        );
    }

    match branch_locus(&cover) {
        Ok(locus) => {
            rep.push(
                "branch.locus",
                "disc in t is a unit times t^20 times the 8th power of a squarefree quadratic",
                &[("alpha", astr.clone())],
                locus.t_exponent == 20,
                &[
                    ("t_exponent", locus.t_exponent.to_string()),
                    ("quadratic_b", locus.b.to_string()),
                    ("quadratic_c", locus.c.to_string()),
                    ("lambda", locus.lambda.to_string()),
                ],
            );
            let fibers = verify_2a_fibers(&cover, &locus);
            rep.push(
                "branch.fibers",
                "both roots of the branch quadratic give fibers with profile 2^8.1^15",
                &[("alpha", astr.clone())],
                fibers.is_ok(),
                &match fibers {
                    Ok(()) => vec![],
                    Err(e) => vec![("error", e.to_string())],
                },
            );
        }
        Err(e) => {
            rep.push(
                "branch.locus",
                "disc in t is a unit times t^20 times the 8th power of a squarefree quadratic",
                &[("alpha", astr.clone())],
                false,
                &[("error", e.to_string())],
            );
        }
    }

    // Frobenius sampling at a random unramified t
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (t, fiber) = loop {
        let t = rat(rng.gen_range(1i64..=1000), 1);
        let f = cover.a.sub(&cover.b.mul_scalar(&t));
        if f.deg() == 31 {
            break (t, f);
        }
    };
    rep.push(
        "fiber.irreducible",
        "a random specialized fiber is irreducible of degree 31",
        &[("alpha", astr.clone()), ("t", t.to_string())],
        is_irreducible(&fiber),
        &[],
    );
    match dedekind_scan(&fiber, census, cfg.prime_bound, cfg.min_good_primes) {
        Ok(scan) => {
            rep.push(
                "dedekind.scan",
                "every factor-degree pattern mod a good prime is a census cycle type, \
                 and patterns 31 and 21.7.3 both occur",
                &[
                    ("alpha", astr.clone()),
                    ("t", t.to_string()),
                    ("prime_bound", cfg.prime_bound.to_string()),
                ],
                scan.verdict(),
                &[
                    ("good_primes", scan.good_primes.to_string()),
                    ("distinct_patterns", scan.patterns.len().to_string()),
                    ("strangers", format!("{:?}", scan.strangers)),
                    ("has_31", scan.has_31.to_string()),
                    ("has_21_7_3", scan.has_21_7_3.to_string()),
                ],
            );
        }
        Err(e) => {
            rep.push(
                "dedekind.scan",
                "every factor-degree pattern mod a good prime is a census cycle type, \
                 and patterns 31 and 21.7.3 both occur",
                &[("alpha", astr.clone()), ("t", t.to_string())],
                false,
                &[("error", e.to_string())],
            );
        }
    }

    Ok(rep)
}
