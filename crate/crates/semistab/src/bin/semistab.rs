use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use semistab::arith::primes_up_to;
use semistab::certify::{parse_certificate, verify, Tables};
use semistab::discbounds::OdlyzkoTable;
use semistab::extcrit::{ext_dimension, ext_dimension_congruence, local_kernel_dimension};
use semistab::groups::GroupCatalog;

#[derive(Parser)]
#[command(name = "semistab", version, about = "Re-verify proof certificates for semi-stable abelian varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify certificate files and print one report per file.
    Verify {
        #[arg(required = true)]
        certificates: Vec<PathBuf>,
        /// Root-discriminant lower-bound table to use instead of the bundled one.
        #[arg(long, value_name = "PATH")]
        odlyzko_table: Option<PathBuf>,
        /// Group catalog to use instead of the bundled one.
        #[arg(long, value_name = "PATH")]
        catalog: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Exit nonzero unless every claim passes outright.
        #[arg(long)]
        strict_heuristics: bool,
    },
    /// Tabulate dim Ext¹(μ_p, Z/p) over Z[1/l] for primes l below a bound.
    ExtTable {
        #[arg(long, value_name = "N")]
        max_l: u64,
        #[arg(long, value_name = "P")]
        p: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize)]
struct ExtRow {
    l: u64,
    dimension: u8,
    congruence: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    local_kernel: Option<u8>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Verify { certificates, odlyzko_table, catalog, json, strict_heuristics } => {
            let mut tables = Tables::bundled();
            if let Some(path) = odlyzko_table {
                tables.odlyzko = OdlyzkoTable::load(&path)?;
            }
            if let Some(path) = catalog {
                tables.catalog = GroupCatalog::load(&path)?;
            }
            let mut reports = Vec::with_capacity(certificates.len());
            for path in &certificates {
                let cert = parse_certificate(path).map_err(|e| format!("{}: {e}", path.display()))?;
                reports.push(verify(&cert, &tables));
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    print!("{}", r.to_text());
                }
            }
            Ok(reports.iter().all(|r| r.accepted(strict_heuristics)))
        }
        Command::ExtTable { max_l, p, json } => {
            let mut rows = Vec::new();
            for l in primes_up_to(max_l.saturating_sub(1)) {
                if l == p {
                    continue;
                }
                let local_kernel = if p == 2 || p == 3 { Some(local_kernel_dimension(l, p)?.dimension) } else { None };
                rows.push(ExtRow {
                    l,
                    dimension: ext_dimension(l, p)?.dimension,
                    congruence: ext_dimension_congruence(l, p)?.dimension,
                    local_kernel,
                });
            }
            let consistent =
                rows.iter().all(|r| r.dimension == r.congruence && r.local_kernel.is_none_or(|k| k == r.dimension));
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                println!("{:>6} {:>4} {:>11} {:>13}", "l", "dim", "congruence", "local-kernel");
                for r in &rows {
                    let lk = r.local_kernel.map_or("-".to_string(), |k| k.to_string());
                    println!("{:>6} {:>4} {:>11} {:>13}", r.l, r.dimension, r.congruence, lk);
                }
            }
            Ok(consistent)
        }
    }
}
