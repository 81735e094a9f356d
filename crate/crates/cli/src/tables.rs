//! Tables printed by `specfun table`.

use specfun_core::consts::EULER_GAMMA;
use specfun_core::special::{
    ball_volume, big_h, detemple_excess, karatsuba_gamma_estimate, ramanujan_theta, sphere_area,
};
use specfun_verify::{find as find_suite, THETA_TABLE, THETA_TOLERANCE};

use crate::error::{CliError, Result};
use crate::params::Params;

pub const NAMES: [&str; 4] = ["theta", "detemple", "alzer-ball", "karatsuba-gamma"];

/// Large argument standing in for x = ∞ in the θ table.
const THETA_INFINITY: f64 = 1e8;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Real(f64),
    /// A real shown with a fixed number of decimals in human output only.
    Fixed(f64, usize),
    Bool(bool),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

pub fn build(name: &str, params: &Params) -> Result<Table> {
    match name {
        "theta" => {
            params.restrict(name, &[])?;
            theta()
        }
        "detemple" => {
            params.restrict(name, &["n"])?;
            detemple(params.range("n", 1..=10)?)
        }
        "alzer-ball" => {
            params.restrict(name, &["n"])?;
            alzer_ball(params.range("n", 1..=10)?)
        }
        "karatsuba-gamma" => {
            params.restrict(name, &["k"])?;
            let ks = params.range("k", 1..=20)?;
            if *ks.end() > u32::MAX as u64 {
                return Err(CliError::usage("k out of range"));
            }
            karatsuba(ks)
        }
        other => Err(CliError::usage(format!(
            "unknown table `{other}` (expected one of: {})",
            NAMES.join(", ")
        ))),
    }
}

fn twelfth_label(k: usize) -> String {
    match k {
        0 => "0".into(),
        12 => "1".into(),
        _ => format!("{k}/12"),
    }
}

fn theta() -> Result<Table> {
    let mut rows = Vec::with_capacity(THETA_TABLE.len() + 1);
    let mut push = |label: String, computed: f64, record: f64| {
        let diff = computed - record;
        rows.push(vec![
            Cell::Text(label),
            Cell::Fixed(computed, 4),
            Cell::Fixed(record, 4),
            Cell::Real(diff),
            Cell::Bool(diff.abs() <= THETA_TOLERANCE),
        ]);
    };
    for (k, &record) in THETA_TABLE.iter().enumerate() {
        push(twelfth_label(k), ramanujan_theta(k as f64 / 12.0)?, record);
    }
    push("inf".into(), ramanujan_theta(THETA_INFINITY)?, 1.0);
    Ok(Table {
        name: "theta",
        columns: vec!["x", "theta", "record", "difference", "within_5e-5"],
        rows,
    })
}

fn detemple(ns: std::ops::RangeInclusive<u64>) -> Result<Table> {
    let mut rows = Vec::new();
    for n in ns {
        let excess = detemple_excess(n)?;
        let nf = n as f64;
        let lower = 1.0 / (24.0 * (nf + 1.0) * (nf + 1.0));
        let upper = 1.0 / (24.0 * nf * nf);
        rows.push(vec![
            Cell::Int(n),
            Cell::Real(lower),
            Cell::Real(excess),
            Cell::Real(upper),
            Cell::Bool(lower < excess && excess < upper),
            Cell::Real(big_h(n)?),
        ]);
    }
    Ok(Table {
        name: "detemple",
        columns: vec!["n", "lower", "R_n-gamma", "upper", "bracketed", "H(n)"],
        rows,
    })
}

fn alzer_ball(ns: std::ops::RangeInclusive<u64>) -> Result<Table> {
    let ids = ["alzer-ball(1)", "alzer-ball(2)", "alzer-ball(3)"];
    let suites = ids.map(|id| find_suite(id).expect("registered suite"));
    let mut rows = Vec::new();
    for n in ns {
        let dim = u32::try_from(n).map_err(|_| CliError::usage("n out of range"))?;
        let mut row = vec![
            Cell::Int(n),
            Cell::Real(ball_volume(dim)?),
            Cell::Real(sphere_area(dim)?),
        ];
        for s in &suites {
            row.push(Cell::Real(s.evaluate(n as f64)?.margin));
        }
        rows.push(row);
    }
    Ok(Table {
        name: "alzer-ball",
        columns: vec!["n", "volume", "area", "margin(1)", "margin(2)", "margin(3)"],
        rows,
    })
}

fn karatsuba(ks: std::ops::RangeInclusive<u64>) -> Result<Table> {
    let mut rows = Vec::new();
    for k in ks {
        let est = karatsuba_gamma_estimate(k as u32)?;
        let err = (est.estimate - EULER_GAMMA).abs();
        rows.push(vec![
            Cell::Int(k),
            Cell::Real(est.estimate),
            Cell::Real(err),
            Cell::Real(est.error_bound),
            Cell::Bool(err <= est.error_bound),
        ]);
    }
    Ok(Table {
        name: "karatsuba-gamma",
        columns: vec!["k", "estimate", "error", "bound", "within_bound"],
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(name: &str, items: &[&str]) -> Result<Table> {
        let owned: Vec<String> = items.iter().map(|s| s.to_string()).collect();
        build(name, &Params::parse(&owned)?)
    }

    #[test]
    fn theta_rows() {
        let t = table("theta", &[]).unwrap();
        assert_eq!(t.rows.len(), 14);
        assert_eq!(t.rows[7][0], Cell::Text("7/12".into()));
        let Cell::Fixed(v, 4) = t.rows[0][1] else { panic!() };
        assert_eq!(format!("{v:.4}"), "0.9675");
    }

    #[test]
    fn detemple_bracketed() {
        let t = table("detemple", &["n=1..10"]).unwrap();
        assert_eq!(t.rows.len(), 10);
        assert!(t.rows.iter().all(|r| r[4] == Cell::Bool(true)));
    }

    #[test]
    fn alzer_margins_nonnegative() {
        let t = table("alzer-ball", &["n=1..30"]).unwrap();
        for row in &t.rows {
            for cell in &row[3..] {
                let Cell::Real(m) = cell else { panic!() };
                assert!(*m >= -1e-14, "{row:?}");
            }
        }
    }

    #[test]
    fn karatsuba_within_bound() {
        let t = table("karatsuba-gamma", &[]).unwrap();
        assert_eq!(t.rows.len(), 20);
        assert!(t.rows.iter().all(|r| r[4] == Cell::Bool(true)));
    }

    #[test]
    fn unknown_table_and_params() {
        assert!(matches!(table("zeta", &[]), Err(CliError::Usage(_))));
        assert!(matches!(table("theta", &["n=3"]), Err(CliError::Usage(_))));
    }
}
