//! Command-line front end: census management, braid-orbit verification,
//! family certificates and the degenerate-cover reconstruction roundtrip.
//!
//! Exit codes: 0 all claims pass, 2 at least one claim fails, 3 a
//! configuration or calibration problem prevented the claims from being
//! evaluated at all.

use clap::{Args, Parser, Subcommand};
use psl52_verify::algebra::field::{parse_rational, rat, Rational};
use psl52_verify::algebra::profile::Profile;
use psl52_verify::covers::{
    self, galois_certificate, lambda_function, newton_roundtrip, split_1516, verify_degenerate,
    CertificateConfig,
};
use psl52_verify::nielsen::{
    braid_orbit, cusp_analysis, cusp_pairwise, genus_rh, ramification_braids, reduce_symmetrize,
    search_tuples, BraidConfig, GroupData,
};
use psl52_verify::permgrp::census::{cached_census, Census};
use psl52_verify::permgrp::conjugacy::ConjugacyVerdict;
use psl52_verify::permgrp::{psl52_action, ActionKind, GROUP_ORDER};
use psl52_verify::report::VerificationReport;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "psl52-verify", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    /// write the report to this path as well as stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// emit JSON instead of text
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// emit text (default)
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build the cycle-type censuses of both degree-31 actions
    Census {
        /// cache directory for census files
        #[arg(long, default_value = "cache")]
        cache: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Braid orbit of the Nielsen class: 24 points, blocks, genus, cusps
    Orbit {
        /// braid-word configuration file (defaults to the built-in one)
        #[arg(long)]
        braid_config: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Certificates for family members
    Verify {
        /// parameter value, e.g. 5 or 1/2
        #[arg(long, conflicts_with = "sweep", allow_hyphen_values = true)]
        alpha: Option<String>,
        /// run the default parameter sweep plus the cross-parameter checks
        #[arg(long)]
        sweep: bool,
        /// Frobenius sampling prime bound
        #[arg(long, default_value_t = 10_000)]
        primes: u64,
        /// random seed for sampled specializations
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// cache directory for census files
        #[arg(long, default_value = "cache")]
        cache: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Degenerate three-point cover and its p-adic reconstruction roundtrip
    Degenerate {
        /// p-adic precision exponent k (modulus 11^k)
        #[arg(long, default_value_t = 64)]
        precision: u32,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Census { cache, out } => cmd_census(&cache).map(|r| (r, out)),
        Command::Orbit { braid_config, out } => cmd_orbit(braid_config.as_deref()).map(|r| (r, out)),
        Command::Verify {
            alpha,
            sweep,
            primes,
            seed,
            cache,
            out,
        } => cmd_verify(alpha.as_deref(), sweep, primes, seed, &cache).map(|r| (r, out)),
        Command::Degenerate { precision, out } => cmd_degenerate(precision).map(|r| (r, out)),
    };
    let (report, out) = match result {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    if let Err(e) = report.validate() {
        eprintln!("internal error: malformed report: {e}");
        return ExitCode::from(3);
    }
    let rendered = if out.json {
        report.to_json()
    } else {
        report.to_text()
    };
    println!("{rendered}");
    if let Some(path) = &out.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error writing {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    // calibration claims failing means the configuration cannot reproduce
    // the reference structures; everything else is an ordinary claim failure
    if report
        .entries
        .iter()
        .any(|e| !e.verdict && e.claim_id.starts_with("calibration."))
    {
        ExitCode::from(3)
    } else if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn load_censuses(cache: &std::path::Path) -> Result<(Census, Census), String> {
    let points = cached_census(
        &psl52_action(ActionKind::Points),
        31,
        &cache.join("census_points.json"),
    )
    .map_err(|e| e.to_string())?;
    let hyper = cached_census(
        &psl52_action(ActionKind::Hyperplanes),
        31,
        &cache.join("census_hyperplanes.json"),
    )
    .map_err(|e| e.to_string())?;
    Ok((points, hyper))
}

fn cmd_census(cache: &std::path::Path) -> Result<VerificationReport, String> {
    let (points, hyper) = load_censuses(cache)?;
    let mut rep = VerificationReport::default();
    rep.push(
        "census.total",
        "the group order, summed over cycle types, is 9999360",
        &[],
        points.total() == GROUP_ORDER && hyper.total() == GROUP_ORDER,
        &[
            ("points_total", points.total().to_string()),
            ("hyperplanes_total", hyper.total().to_string()),
        ],
    );
    rep.push(
        "census.actions_match",
        "the point and hyperplane actions have identical cycle-type statistics",
        &[],
        points.counts == hyper.counts,
        &[("distinct_types", points.counts.len().to_string())],
    );
    rep.push(
        "census.involutions",
        "there are 465 elements of cycle type 2^8.1^15",
        &[],
        points.count(&Profile::parse("2^8.1^15").unwrap()) == 465,
        &[(
            "count",
            points
                .count(&Profile::parse("2^8.1^15").unwrap())
                .to_string(),
        )],
    );
    Ok(rep)
}

fn cmd_orbit(config_path: Option<&std::path::Path>) -> Result<VerificationReport, String> {
    let config = match config_path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| e.to_string())?;
            BraidConfig::from_json(&text).map_err(|e| e.to_string())?
        }
        None => BraidConfig::calibrated(),
    };
    let gd = GroupData::new();
    let seeds = search_tuples(&gd);
    let orbit = braid_orbit(&seeds, &gd);
    let reduced = reduce_symmetrize(&orbit, &config).map_err(|e| e.to_string())?;
    let mut rep = VerificationReport::default();
    rep.push(
        "calibration.reduced_size",
        "the symmetrized reduced set has exactly 24 points",
        &[],
        reduced.len() == 24,
        &[
            ("orbit_nodes", orbit.len().to_string()),
            ("reduced_points", reduced.len().to_string()),
        ],
    );
    let ram = ramification_braids(&orbit, &reduced, &config).map_err(|e| e.to_string())?;
    let expected_point = ["4^4.3^2.1^2", "7^2.3^2.2^2", "2^12"];
    let expected_block = ["4^2.3.1", "7.3.2", "2^5.1^2"];
    let blocks_ok = ram.block_systems.len() == 1
        && ram.block_systems[0].len() == 12
        && ram.block_systems[0].iter().all(|b| b.len() == 2);
    rep.push(
        "calibration.blocks",
        "the braid group action on the 24 points has a unique minimal block system, \
         12 blocks of size 2",
        &[],
        blocks_ok,
        &[(
            "systems",
            format!(
                "{:?}",
                ram.block_systems
                    .iter()
                    .map(|s| (s.len(), s.first().map_or(0, |b| b.len())))
                    .collect::<Vec<_>>()
            ),
        )],
    );
    let mut point_types = Vec::new();
    let mut block_types = Vec::new();
    for b in &ram.braids {
        point_types.push(b.perm.cycle_type().to_string());
        if blocks_ok {
            let act = psl52_verify::nielsen::RamificationData::block_action(
                &ram.block_systems[0],
                &b.perm,
            );
            block_types.push(act.cycle_type().to_string());
        }
    }
    rep.push(
        "calibration.structures",
        "the three ramification braids act with cycle structures 4^4.3^2.1^2, \
         7^2.3^2.2^2 and 2^12 on the 24 points, and 4^2.3.1, 7.3.2 and 2^5.1^2 on the blocks",
        &[],
        point_types == expected_point && block_types == expected_block,
        &[
            ("points", format!("{point_types:?}")),
            ("blocks", format!("{block_types:?}")),
        ],
    );
    let product = ram.braids[0]
        .perm
        .compose(&ram.braids[1].perm)
        .compose(&ram.braids[2].perm);
    rep.push(
        "orbit.braid_product",
        "the three ramification braids multiply to the identity",
        &[],
        product.is_identity(),
        &[],
    );
    let genus_points = point_types
        .iter()
        .map(|s| Profile::parse(s).unwrap())
        .collect::<Vec<_>>();
    let g24 = genus_rh(24, &genus_points).map_err(|e| e.to_string())?;
    let g12 = if blocks_ok {
        let bt = block_types
            .iter()
            .map(|s| Profile::parse(s).unwrap())
            .collect::<Vec<_>>();
        genus_rh(12, &bt).map_err(|e| e.to_string())?
    } else {
        -1
    };
    rep.push(
        "orbit.genus",
        "the covers defined by the braid structures have genus 0 on the 24 points \
         and on the 12 blocks",
        &[],
        g24 == 0 && g12 == 0,
        &[("genus_24", g24.to_string()), ("genus_12", g12.to_string())],
    );

    // cusps of the braid with cycle structure 7^2.3^2.2^2
    let merge_braid = ram
        .braids
        .iter()
        .find(|b| b.coalesce.is_some() && b.perm.cycle_type().to_string() == "7^2.3^2.2^2")
        .ok_or("no coalescing braid with structure 7^2.3^2.2^2 in the configuration")?;
    let cusps = cusp_analysis(&orbit, &reduced, merge_braid);
    let pairs = cusp_pairwise(&cusps, &gd);
    let mut sevens_full = true;
    for c in cusps.iter().filter(|c| c.cycle_len == 7) {
        sevens_full &= c.subgroup_order == GROUP_ORDER;
    }
    let pair_verdict = |len: usize| -> Option<bool> {
        let idx: Vec<usize> = cusps
            .iter()
            .enumerate()
            .filter(|(_, c)| c.cycle_len == len)
            .map(|(i, _)| i)
            .collect();
        if idx.len() != 2 {
            return None;
        }
        let p = pairs.iter().find(|p| p.i == idx[0] && p.j == idx[1])?;
        Some(matches!(p.verdict, ConjugacyVerdict::NonConjugate(_)))
    };
    let three_nc = pair_verdict(3);
    let two_nc = pair_verdict(2);
    rep.push(
        "cusp.seven_cycles",
        "the two length-7 cusp cycles generate the full group",
        &[],
        sevens_full && cusps.iter().filter(|c| c.cycle_len == 7).count() == 2,
        &[(
            "orders",
            format!(
                "{:?}",
                cusps
                    .iter()
                    .map(|c| (c.cycle_len, c.subgroup_order))
                    .collect::<Vec<_>>()
            ),
        )],
    );
    rep.push(
        "cusp.three_cycles",
        "the subgroups at the two length-3 cusp cycles are isomorphic in size \
         but not conjugate",
        &[],
        three_nc == Some(true),
        &[("verdict", format!("{three_nc:?}"))],
    );
    rep.push(
        "cusp.two_cycles",
        "the subgroups at the two length-2 cusp cycles are isomorphic in size \
         but not conjugate",
        &[],
        two_nc == Some(true),
        &[("verdict", format!("{two_nc:?}"))],
    );
    Ok(rep)
}

fn cmd_verify(
    alpha: Option<&str>,
    sweep: bool,
    primes: u64,
    seed: u64,
    cache: &std::path::Path,
) -> Result<VerificationReport, String> {
    let (census, _) = load_censuses(cache)?;
    let cfg = CertificateConfig {
        prime_bound: primes,
        min_good_primes: 100,
        seed,
    };
    let mut rep = VerificationReport::default();
    let alphas: Vec<Rational> = if sweep {
        vec![
            rat(0, 1),
            rat(1, 2),
            rat(1, 1),
            rat(5, 1),
            rat(7, 1),
            rat(-2, 1),
        ]
    } else {
        let s = alpha.ok_or("pass --alpha <rational> or --sweep")?;
        let a = parse_rational(s).ok_or_else(|| format!("cannot parse alpha {s:?}"))?;
        vec![a]
    };
    for a in &alphas {
        match galois_certificate(a, &census, &cfg) {
            Ok(mut sub) => {
                for e in &mut sub.entries {
                    e.claim_id = format!("{}[alpha={}]", e.claim_id, a);
                }
                rep.merge(sub);
            }
            Err(covers::CoversError::DegenerateAlpha(v)) => {
                return Err(format!("alpha = {v} is a degenerate parameter value"));
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    if sweep {
        for d in covers::family::DEGENERATE_ALPHAS {
            rep.push(
                &format!("family.degenerate_rejected[alpha={d}]"),
                "the degenerate parameter value is rejected before certification",
                &[("alpha", d.to_string())],
                covers::family::family(&rat(d, 1)).is_err(),
                &[],
            );
        }
        match split_1516(seed, 5) {
            Ok(split) => rep.push(
                "split.1516",
                "pulling the second member back along the normalized first one factors \
                 into degrees 15 and 16 at sampled base points",
                &[("samples", split.samples.len().to_string())],
                true,
                &[(
                    "base_points",
                    format!(
                        "{:?}",
                        split
                            .samples
                            .iter()
                            .map(|(s, _)| s.to_string())
                            .collect::<Vec<_>>()
                    ),
                )],
            ),
            Err(e) => rep.push(
                "split.1516",
                "pulling the second member back along the normalized first one factors \
                 into degrees 15 and 16 at sampled base points",
                &[],
                false,
                &[("error", e.to_string())],
            ),
        }
        match lambda_function() {
            Ok(lf) => {
                let l0 = lf.eval(&rat(0, 1));
                let lh = lf.eval(&rat(1, 2));
                rep.push(
                    "lambda.function",
                    "the branch-point invariant is a rational function of the parameter \
                     of degree 24, taking equal values at 0 and 1/2",
                    &[],
                    lf.degree() == 24 && l0.is_some() && l0 == lh,
                    &[
                        ("deg_num", lf.num.deg().to_string()),
                        ("deg_den", lf.den.deg().to_string()),
                        ("value_at_0", format!("{l0:?}")),
                    ],
                );
            }
            Err(e) => rep.push(
                "lambda.function",
                "the branch-point invariant is a rational function of the parameter \
                 of degree 24, taking equal values at 0 and 1/2",
                &[],
                false,
                &[("error", e.to_string())],
            ),
        }
    }
    Ok(rep)
}

fn cmd_degenerate(precision: u32) -> Result<VerificationReport, String> {
    let mut rep = VerificationReport::default();
    let cert = match verify_degenerate() {
        Ok(c) => c,
        Err(e) => {
            rep.push(
                "degenerate.certificate",
                "the special member is a three-point cover: fibers 21.7.3, 8^2.4^3.2.1 \
                 and 2^8.1^15 over a quadratic field",
                &[],
                false,
                &[("error", e.to_string())],
            );
            return Ok(rep);
        }
    };
    rep.push(
        "degenerate.certificate",
        "the special member is a three-point cover: fibers 21.7.3, 8^2.4^3.2.1 \
         and 2^8.1^15 over a quadratic field",
        &[],
        true,
        &[
            ("profile_zero", cert.profile_zero.to_string()),
            ("profile_infinity", cert.profile_infinity.to_string()),
            ("profile_t0", cert.profile_t0.to_string()),
            (
                "t0",
                format!("{} + {} * sqrt(-7)", cert.t0.a, cert.t0.b),
            ),
        ],
    );
    let dc = covers::degenerate_cover();
    for (i, a) in dc.a.iter().enumerate() {
        rep.push(
            &format!("degenerate.a{}", i + 1),
            "recorded coefficient value over the quadratic field",
            &[],
            true,
            &[("value", format!("{} + {} * sqrt(-7)", a.a, a.b))],
        );
    }
    match newton_roundtrip(11, precision) {
        Ok(rt) => {
            let pairs: Vec<String> = rt
                .minpolys
                .iter()
                .zip(&rt.expected)
                .map(|(m, e)| format!("{m:?} vs {e:?}"))
                .collect();
            rep.push(
                "degenerate.roundtrip",
                "Newton lifting from the mod-11 seed followed by lattice reconstruction \
                 returns the exact minimal polynomial of every unknown",
                &[("p", "11".into()), ("k", precision.to_string())],
                rt.minpolys == rt.expected,
                &[("minpolys", format!("[{}]", pairs.join(", ")))],
            );
        }
        Err(e) => rep.push(
            "degenerate.roundtrip",
            "Newton lifting from the mod-11 seed followed by lattice reconstruction \
             returns the exact minimal polynomial of every unknown",
            &[("p", "11".into()), ("k", precision.to_string())],
            false,
            &[("error", e.to_string())],
        ),
    }
    Ok(rep)
}
