//! Command-line driver.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::catalog::parse_catalog;
use crate::error::{Error, Result};
use crate::exactspec::{
    lambda_min_cmp_graph, seidel_char_poly, smith_classify, Relation, MAX_CHARPOLY_ORDER,
};
use crate::factor::factor_monic;
use crate::graphs::{parse_graph_expr, DEFAULT_SEARCH_LIMIT};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::report::ClaimReport;
use crate::seidel::{class_alpha_omega_with_limit, rank_shifted_graph};
use crate::suites::{run_suite, Suite, SuiteOptions};

#[derive(Debug, Parser)]
#[command(
    name = "seidelcert",
    version,
    about = "Exact Seidel spectra and claim verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare the smallest Seidel eigenvalue with a threshold and factor the
    /// characteristic polynomial of small graphs.
    Eig {
        expr: String,
        #[arg(long, default_value = "-5", allow_hyphen_values = true, value_parser = rational_arg)]
        threshold: Rational,
    },
    /// Exact rank of S + shift * I.
    Rank {
        expr: String,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        shift: Rational,
    },
    /// Position of the adjacency spectral radius relative to 2.
    Classify { expr: String },
    /// Independence and clique numbers of the switching class.
    AlphaOmega {
        expr: String,
        /// Largest switching graph searched exactly.
        #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT)]
        max_n: usize,
    },
    /// Run a verification suite and emit one report line per claim.
    Verify {
        #[arg(value_parser = suite_arg)]
        suite: Suite,
        /// Write the report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Alternate catalog data file.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Record wall time per claim.
        #[arg(long)]
        timings: bool,
    },
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn suite_arg(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs a command; `Ok(false)` means the command ran but some claim did not
/// verify.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Eig { expr, threshold } => {
            let g = parse_graph_expr(&expr)?;
            let v = lambda_min_cmp_graph(&g, &threshold);
            let rel = match v.relation {
                Relation::Below => "<",
                Relation::Equal => "=",
                Relation::Above => ">=",
            };
            writeln!(out, "lambda_min {rel} {}", format_rational(&threshold))?;
            if g.n() <= MAX_CHARPOLY_ORDER {
                let f = factor_monic(&seidel_char_poly(&g).to_int_poly())?;
                let note = if f.certified {
                    ""
                } else {
                    " (last factor not certified irreducible)"
                };
                writeln!(out, "charpoly = {f}{note}")?;
            }
            Ok(true)
        }
        Command::Rank { expr, shift } => {
            let g = parse_graph_expr(&expr)?;
            writeln!(out, "{}", rank_shifted_graph(&g, &shift))?;
            Ok(true)
        }
        Command::Classify { expr } => {
            let g = parse_graph_expr(&expr)?;
            writeln!(out, "{}", smith_classify(&g)?)?;
            Ok(true)
        }
        Command::AlphaOmega { expr, max_n } => {
            let g = parse_graph_expr(&expr)?;
            let (a, w) = class_alpha_omega_with_limit(&g, max_n)?;
            writeln!(out, "alpha = {a}\nomega = {w}")?;
            Ok(true)
        }
        Command::Verify {
            suite,
            report,
            catalog,
            timings,
        } => {
            let mut opts = SuiteOptions {
                timings,
                ..SuiteOptions::default()
            };
            if let Some(path) = catalog {
                opts.catalog = parse_catalog(&std::fs::read_to_string(path)?)?;
            }
            let reports = run_suite(suite, &opts);
            let text: String = reports.iter().map(|r| r.to_line() + "\n").collect();
            match report {
                Some(path) => std::fs::write(path, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(reports.iter().all(ClaimReport::is_verified))
        }
    }
}
