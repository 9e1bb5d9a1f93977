//! Named verification suites, each producing claim reports in a fixed order.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{
    counting_replays, pillar41_enumerate, pillar41_feasible, pillar41_gram_psd, pillar41_tuples,
    star_overlap_condition, PillarCounts, STAR_OVERLAP_LEAVES,
};
use crate::catalog::{
    default_catalog, edge_neighbour_exact, edge_neighbour_threshold, padded_threshold_exact,
    padded_threshold_predicate, star_det_identities, star_padding_predicate, verify_entries,
    CatalogEntry, Claim, PaddedCore,
};
use crate::error::{Error, Result};
use crate::exactspec::{
    adjacency_char_poly, is_minimal_rho_above2, lambda_min_cmp_padded, smith_classify,
    smith_labels, Relation, SmithClass, SmithFamily, MINIMAL_ABOVE2,
};
use crate::graphs::{build_family, parse_graph_expr, petersen, Family, FamilySpec};
use crate::quotient::{srg_char_poly, srg_eigen_data, SrgParams};
use crate::rational::{format_rational, int};
use crate::report::{timed, ClaimReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Minimal isolated-vertex paddings of the 18 minimal graphs.
    Padding,
    /// Closed form for padded stars.
    Star,
    /// Closed forms for padded cores, edge neighbourhoods and star overlaps.
    Thresholds,
    Pillar41,
    Srg,
    Smith,
    /// Every catalog entry.
    Catalog,
    Counting,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "padding",
        "star",
        "thresholds",
        "pillar41",
        "srg",
        "smith",
        "catalog",
        "counting",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Padding => "padding",
            Suite::Star => "star",
            Suite::Thresholds => "thresholds",
            Suite::Pillar41 => "pillar41",
            Suite::Srg => "srg",
            Suite::Smith => "smith",
            Suite::Catalog => "catalog",
            Suite::Counting => "counting",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "padding" => Suite::Padding,
            "star" => Suite::Star,
            "thresholds" => Suite::Thresholds,
            "pillar41" => Suite::Pillar41,
            "srg" => Suite::Srg,
            "smith" => Suite::Smith,
            "catalog" => Suite::Catalog,
            "counting" => Suite::Counting,
            "all" => Suite::All,
            _ => {
                return Err(Error::Domain(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub catalog: Vec<CatalogEntry>,
    pub timings: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            catalog: default_catalog(),
            timings: false,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Vec<ClaimReport> {
    let t = opts.timings;
    match suite {
        Suite::Padding => {
            let entries: Vec<CatalogEntry> = opts
                .catalog
                .iter()
                .filter(|e| matches!(e.claim, Claim::MinPadding(_)))
                .cloned()
                .collect();
            verify_entries(&entries, t)
        }
        Suite::Catalog => verify_entries(&opts.catalog, t),
        Suite::Star => star_reports(t),
        Suite::Thresholds => threshold_reports(t),
        Suite::Pillar41 => pillar_reports(t),
        Suite::Srg => srg_reports(t),
        Suite::Smith => smith_reports(t),
        Suite::Counting => counting_replays(),
        Suite::All => [
            Suite::Catalog,
            Suite::Star,
            Suite::Thresholds,
            Suite::Pillar41,
            Suite::Srg,
            Suite::Smith,
            Suite::Counting,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, opts))
        .collect(),
    }
}

/// Claim that every point of a sweep agrees, with the first disagreement as
/// the witness.
fn agreement(
    claim: &str,
    timings: bool,
    points: impl Iterator<Item = Result<Option<String>>>,
) -> ClaimReport {
    timed(timings, || {
        let mut total = 0usize;
        let mut bad = 0usize;
        let mut first = None;
        for p in points {
            total += 1;
            match p {
                Ok(None) => {}
                Ok(Some(w)) => {
                    bad += 1;
                    first.get_or_insert(w);
                }
                Err(e) => return ClaimReport::error(claim, &e),
            }
        }
        ClaimReport::compare(
            claim,
            format!("{total}/{total}"),
            format!("{}/{total}", total - bad),
            first,
        )
    })
}

/// Grid for the padded-star sweep.
pub fn star_grid() -> impl Iterator<Item = (i64, i64, i64)> {
    (2..=12i64).flat_map(|r| {
        (0..=20i64)
            .chain(37..=45)
            .flat_map(move |s| (0..=6i64).map(move |t| (r, s, t)))
    })
}

fn star_reports(timings: bool) -> Vec<ClaimReport> {
    let closed_form = agreement(
        "star.closed_form",
        timings,
        star_grid().map(|(r, s, t)| {
            let star = build_family(&FamilySpec::new(
                Family::CompleteMultipartite,
                vec![1, r as usize],
            )?)?;
            let exact = lambda_min_cmp_padded(&star, s as usize, t as usize, 0, &int(-5))?
                .relation
                .is_at_least();
            let closed = star_padding_predicate(r, s, t)?;
            Ok((exact != closed).then(|| format!("r={r} s={s} t={t}: exact {exact}")))
        }),
    );
    let dets = agreement(
        "star.det_identities",
        timings,
        star_grid().map(|(r, s, t)| star_det_identities(r, s, t).map(|_| None)),
    );
    vec![closed_form, dets]
}

fn threshold_reports(timings: bool) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    for core in PaddedCore::ALL {
        let points = (0..=20usize).flat_map(|t1| {
            (0..=5usize).flat_map(move |t2| (0..=3usize).map(move |t3| (t1, t2, t3)))
        });
        out.push(agreement(
            &format!("thresholds.{core}"),
            timings,
            points.map(move |(t1, t2, t3)| {
                let exact = padded_threshold_exact(core, t1, t2, t3)?;
                let closed = padded_threshold_predicate(core, t1, t2, t3);
                Ok((exact != closed).then(|| format!("t=({t1},{t2},{t3}): exact {exact}")))
            }),
        ));
    }
    let points = (0..=14usize)
        .flat_map(|s1| (0..=14usize).flat_map(move |s2| (0..=10usize).map(move |t| (s1, s2, t))));
    out.push(agreement(
        "thresholds.edge_neighbour",
        timings,
        points.map(|(s1, s2, t)| {
            let exact = edge_neighbour_exact(s1, s2, t)?;
            let closed = edge_neighbour_threshold(s1, s2, t);
            Ok((exact != closed).then(|| format!("s=({s1},{s2}) t={t}: exact {exact}")))
        }),
    ));
    out.push(timed(timings, || {
        let mut at_least = Vec::new();
        for t in 0..=STAR_OVERLAP_LEAVES {
            match star_overlap_condition(t) {
                Ok(v) if v.relation != Relation::Below => at_least.push(t.to_string()),
                Ok(_) => {}
                Err(e) => return ClaimReport::error("thresholds.star_overlap", &e),
            }
        }
        ClaimReport::compare(
            "thresholds.star_overlap",
            "t=3",
            format!("t={}", at_least.join(",")),
            Some("det(S+5I) >= 0".into()),
        )
    }));
    out
}

/// Largest total used for the Gram cross-check.
pub const GRAM_ORACLE_CAP: u32 = 21;

fn pillar_reports(timings: bool) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    let (max_p, argmax) = pillar41_enumerate();
    out.push(ClaimReport::compare("pillar41.max", 19, max_p, None));
    let list: Vec<String> = argmax.iter().map(PillarCounts::to_string).collect();
    out.push(ClaimReport::compare(
        "pillar41.argmax",
        "(9,5,5,0)",
        list.join(" "),
        None,
    ));
    out.push(agreement(
        "pillar41.gram_oracle",
        timings,
        pillar41_tuples(GRAM_ORACLE_CAP).map(|c| {
            let (q, gram) = (pillar41_feasible(c), pillar41_gram_psd(c));
            Ok((q != gram).then(|| format!("{c}: quotient {q}, gram {gram}")))
        }),
    ));
    out
}

fn srg_reports(timings: bool) -> Vec<ClaimReport> {
    let mut out = Vec::new();
    out.push(timed(timings, || {
        let claim = "srg.66_13_0_3";
        let d = SrgParams::new(66, 13, 0, 3).and_then(srg_eigen_data);
        match d {
            Ok(d) => ClaimReport::compare(
                claim,
                "theta=2 tau=-5 m_theta=312/7 infeasible",
                format!(
                    "theta={} tau={} m_theta={} {}",
                    d.theta,
                    d.tau,
                    d.m_theta
                        .as_ref()
                        .map_or("irrational".into(), format_rational),
                    if d.feasible { "feasible" } else { "infeasible" }
                ),
                None,
            ),
            Err(e) => ClaimReport::error(claim, &e),
        }
    }));
    let controls = [
        ("srg.petersen", (10, 3, 0, 1), petersen()),
        (
            "srg.pentagon",
            (5, 2, 0, 1),
            build_family(&FamilySpec::new(Family::Cycle, vec![5]).expect("valid")).expect("valid"),
        ),
    ];
    for (claim, (n, k, l, m), g) in controls {
        out.push(timed(timings, || {
            let poly = SrgParams::new(n, k, l, m).and_then(srg_char_poly);
            match poly {
                Ok(p) => {
                    let built = adjacency_char_poly(&g).to_int_poly();
                    let actual = match p {
                        Some(p) if p == built => "feasible, spectrum matches",
                        Some(_) => "feasible, spectrum differs",
                        None => "infeasible",
                    };
                    ClaimReport::compare(claim, "feasible, spectrum matches", actual, None)
                }
                Err(e) => ClaimReport::error(claim, &e),
            }
        }));
    }
    out
}

/// Every family instance on at most `max_n` vertices with its expected class.
pub fn smith_instances(max_n: usize) -> Vec<(FamilySpec, SmithClass)> {
    let mut out = Vec::new();
    let mut push = |f: Family, n: usize, class: SmithClass| {
        let spec = FamilySpec::new(f, vec![n]).expect("valid");
        if spec.order() <= max_n {
            out.push((spec, class));
        }
    };
    for n in 2..max_n {
        push(
            Family::ATilde,
            n,
            SmithClass::RhoEqual2(SmithFamily::ATilde(n)),
        );
        push(Family::ATildePlus, n, SmithClass::RhoAbove2);
    }
    for n in 4..max_n {
        push(
            Family::DTilde,
            n,
            SmithClass::RhoEqual2(SmithFamily::DTilde(n)),
        );
        push(Family::DTildePlus, n, SmithClass::RhoAbove2);
    }
    for n in 6..=8 {
        push(
            Family::ETilde,
            n,
            SmithClass::RhoEqual2(SmithFamily::ETilde(n)),
        );
        push(Family::ETildePlus, n, SmithClass::RhoAbove2);
    }
    for n in 1..=max_n {
        push(Family::Path, n, SmithClass::RhoBelow2);
    }
    out
}

fn smith_reports(timings: bool) -> Vec<ClaimReport> {
    let families = agreement(
        "smith.families",
        timings,
        smith_instances(13).into_iter().map(|(spec, want)| {
            let got = smith_classify(&build_family(&spec)?)?;
            Ok((got != want).then(|| format!("{spec:?}: {got}")))
        }),
    );
    let minimal = agreement(
        "smith.minimal_above2",
        timings,
        MINIMAL_ABOVE2.iter().map(|e| {
            let g = parse_graph_expr(e)?;
            let class = smith_classify(&g)?;
            let ok = class == SmithClass::RhoAbove2 && is_minimal_rho_above2(&g);
            Ok((!ok).then(|| format!("{e}: {class}")))
        }),
    );
    let mut fams = vec![
        SmithFamily::ETilde(6),
        SmithFamily::ETilde(7),
        SmithFamily::ETilde(8),
    ];
    fams.extend((2..=12).map(SmithFamily::ATilde));
    fams.extend((4..=12).map(SmithFamily::DTilde));
    let labels = agreement(
        "smith.eigenvector_labels",
        timings,
        fams.into_iter().map(|f| {
            let g = build_family(&f.spec())?;
            let v = smith_labels(f);
            let ok =
                (0..g.n()).all(|u| g.neighbours(u).iter().map(|&w| v[w]).sum::<i64>() == 2 * v[u]);
            Ok((!ok).then(|| f.to_string()))
        }),
    );
    vec![families, minimal, labels]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("table".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_verify() {
        let opts = SuiteOptions::default();
        for s in [Suite::Srg, Suite::Smith, Suite::Counting] {
            for r in run_suite(s, &opts) {
                assert!(r.is_verified(), "{}", r.to_line());
            }
        }
    }

    #[test]
    fn smith_instance_count() {
        let all = smith_instances(13);
        assert!(all.iter().any(|(s, _)| s.family() == Family::ETildePlus));
        assert!(all.iter().all(|(s, _)| s.order() <= 13));
    }
}
