use clap::Subcommand;
use serde_json::{json, Value};
use verbalis::group::gcd;
use verbalis::towers::{
    compare_fingerprints, decomposition_check, fingerprint, prime_support_check, product_tower, ProductFactor, Tower,
};
use verbalis::Caps;

use crate::input::{self, Outcome};
use crate::output;

/// Largest index examined by `decomp-check` without `--n`.
const DECOMP_MAX_N: usize = 6;

#[derive(Subcommand, Debug)]
pub enum TowerCmd {
    /// Materialize a tower from a tower file, family or group.
    Build {
        #[arg(long, value_name = "TOWER")]
        tower: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Isomorphism classes of quotients of bounded order.
    Fingerprint {
        #[arg(long, value_name = "TOWER")]
        tower: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        bound: usize,
    },
    /// Whether two towers have the same bounded fingerprint.
    Compare {
        #[arg(long = "a", value_name = "TOWER")]
        a: String,
        #[arg(long = "b", value_name = "TOWER")]
        b: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        bound: usize,
    },
    /// Levelwise direct product of towers and fixed groups.
    Product {
        /// A tower, family or group; repeat for each factor.
        #[arg(long = "factor", value_name = "TOWER", required = true)]
        factors: Vec<String>,
        #[arg(long)]
        depth: usize,
    },
    /// Which primes divide infinitely many factors of a product.
    SupportCheck {
        /// JSON array of factor descriptions.
        #[arg(long, value_name = "FACTORS")]
        factors: String,
        #[arg(long, default_value_t = 50)]
        prime_bound: u64,
    },
    /// Subgroups of index n in K0 × Kn contain K0 when gcd(n, |K0|) = 1.
    DecompCheck {
        #[arg(long, value_name = "GROUP")]
        k0: String,
        #[arg(long, value_name = "GROUP")]
        kn: String,
        /// A single index; by default every admissible n up to 6.
        #[arg(long = "n")]
        n: Option<usize>,
    },
}

fn tower_report(t: &Tower) -> Value {
    json!({
        "label": t.label(),
        "depth": t.depth(),
        "orders": t.levels().iter().map(|g| g.order()).collect::<Vec<_>>(),
        "tower": serde_json::to_value(t.to_file()).expect("tower files serialize"),
    })
}

pub fn run(cmd: &TowerCmd, caps: &Caps) -> Outcome<Value> {
    match cmd {
        TowerCmd::Build { tower, depth } => Ok(tower_report(&input::tower("tower", tower, *depth, caps)?)),
        TowerCmd::Fingerprint { tower, depth, bound } => {
            let t = input::tower("tower", tower, *depth, caps)?;
            let fp = fingerprint(&t, *bound, caps)?;
            let entries: Vec<Value> = fp
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "order": e.order(),
                        "abelian": e.group.is_abelian(),
                        "signature": e.signature,
                        "group": output::group_spec(&e.group),
                    })
                })
                .collect();
            Ok(json!({ "index_bound": bound, "orders": fp.orders(), "entries": entries }))
        }
        TowerCmd::Compare { a, b, depth, bound } => {
            let a = input::tower("a", a, *depth, caps)?;
            let b = input::tower("b", b, *depth, caps)?;
            Ok(json!({ "index_bound": bound, "equal": compare_fingerprints(&a, &b, *bound, caps)? }))
        }
        TowerCmd::Product { factors, depth } => {
            let fs = factors
                .iter()
                .map(|f| input::tower("factor", f, Some(*depth), caps).map(ProductFactor::Tower))
                .collect::<Outcome<Vec<_>>>()?;
            Ok(tower_report(&product_tower(&fs, *depth, caps)?))
        }
        TowerCmd::SupportCheck { factors, prime_bound } => {
            let fs = input::support_factors("factors", factors)?;
            let report = prime_support_check(&fs, *prime_bound, caps)?;
            Ok(serde_json::to_value(report).expect("reports serialize"))
        }
        TowerCmd::DecompCheck { k0, kn, n } => {
            let k0 = input::group("k0", k0, caps)?;
            let kn = input::group("kn", kn, caps)?;
            let ns: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (1..=DECOMP_MAX_N).filter(|&n| gcd(n, k0.order()) == 1).collect(),
            };
            let reports = ns.iter().map(|&n| decomposition_check(&k0, &kn, n, caps)).collect::<Result<Vec<_>, _>>()?;
            let holds = reports.iter().all(|r| r.holds);
            Ok(json!({ "holds": holds, "reports": serde_json::to_value(reports).expect("reports serialize") }))
        }
    }
}
