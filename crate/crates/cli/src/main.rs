use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use jlk_algebra::BigRational;
use jlk_core::horn::{
    all_triples, classify_cases, classify_filling, enumerate_minimal, horn_facets,
};
use jlk_core::jack::product_coeffs;
use jlk_core::macdonald::{product_coeffs_qt, verify_triple_qt_with};
use jlk_core::stanley::{
    division_numbers, evaluate_d, fixture_874, verify_triple_with, HookAssignment,
};
use jlk_core::sweep::{run_sweep, run_sweep_qt, SweepConfig};
use jlk_core::tableau::lr_count;
use jlk_core::{cache, Partition};
use serde_json::{json, Value};

mod config;
mod report;

use config::{Format, Overrides, RunConfig};
use report::{JsonAlternative, JsonClassify, JsonReport};

#[derive(Parser, Debug)]
#[command(
    name = "jlk",
    version,
    about = "Jack and Macdonald Littlewood-Richardson coefficients"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Global {
    /// key=value configuration file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    cache_dir: Option<String>,
    #[arg(long, global = true)]
    workers: Option<String>,
    /// json or text
    #[arg(long, global = true)]
    format: Option<String>,
    /// Reading of the 𝔡 symbols: minus or plus
    #[arg(long, global = true)]
    d_convention: Option<String>,
    /// Division-number table: printed or corrected
    #[arg(long, global = true)]
    table: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Expand P_μ P_ν in the P basis
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long, allow_hyphen_values = true)]
        nu: Partition,
        /// Number of variables (default: enough for every term)
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long)]
        qt: bool,
        /// Specialize α to this rational value
        #[arg(long, conflicts_with = "qt")]
        alpha: Option<BigRational>,
    },
    /// Check the division-number formula on one triple
    Verify {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        qt: bool,
    },
    /// Check every minimal triple up to a weight
    Sweep {
        #[arg(long)]
        max_weight: Option<String>,
        #[arg(long)]
        qt: bool,
    },
    /// Facets, cases, filling profile, division numbers and hook grids
    Classify {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// List triples with at most three parts up to a weight
    Enumerate {
        #[arg(long)]
        max_weight: u32,
        /// Only minimal triples
        #[arg(long)]
        minimal: bool,
    },
}

struct Outcome {
    value: Value,
    text: String,
    code: u8,
}

fn emit(o: Outcome, format: Format) -> ExitCode {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&o.value).expect("serializable") + "\n",
        Format::Text => o.text,
    };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    ExitCode::from(o.code)
}

fn cmd_expand(
    mu: &Partition,
    nu: &Partition,
    vars: Option<usize>,
    qt: bool,
    alpha: Option<BigRational>,
) -> Result<Outcome> {
    let n = vars.unwrap_or_else(|| (mu.len() + nu.len()).max(1));
    let mut text = String::new();
    let mut terms = Vec::new();
    if qt {
        let e = product_coeffs_qt(mu, nu, n)?;
        for (l, c) in e.iter().rev() {
            text.push_str(&format!("{l} : {c}\n"));
            terms.push(json!({"lambda": l.parts(), "c": report::rat2(c)}));
        }
    } else {
        let e = product_coeffs(mu, nu, n)?;
        for (l, c) in e.iter().rev() {
            match &alpha {
                Some(a) => {
                    let v = c.eval(a)?;
                    if v == BigRational::from_integer(0.into()) {
                        continue;
                    }
                    text.push_str(&format!("{l} : {v}\n"));
                    terms.push(json!({"lambda": l.parts(), "c": v.to_string()}));
                }
                None => {
                    text.push_str(&format!("{l} : {}\n", c));
                    terms.push(json!({"lambda": l.parts(), "c": report::rat1(c)}));
                }
            }
        }
    }
    let value = json!({
        "mu": mu.parts(),
        "nu": nu.parts(),
        "vars": n,
        "flavor": if qt { "qt" } else { "jack" },
        "alpha": alpha.map(|a| a.to_string()),
        "terms": terms,
    });
    Ok(Outcome {
        value,
        text,
        code: 0,
    })
}

fn cmd_verify(
    cfg: &RunConfig,
    l: &Partition,
    m: &Partition,
    n: &Partition,
    qt: bool,
) -> Result<Outcome> {
    let j = if qt {
        let r = verify_triple_qt_with(l, m, n, cfg.reading(), true)?;
        JsonReport::qt(&r, horn_facets(l, m, n)?.equalities, lr_count(l, m, n))
    } else {
        JsonReport::jack(&verify_triple_with(l, m, n, cfg.reading())?)
    };
    let code = if !j.minimal {
        3
    } else if j.match_c && (qt || j.match_g) {
        0
    } else {
        1
    };
    Ok(Outcome {
        text: j.text(),
        value: serde_json::to_value(&j)?,
        code,
    })
}

fn cmd_sweep(cfg: &RunConfig, qt: bool) -> Result<Outcome> {
    let sc = SweepConfig {
        max_weight: if qt {
            cfg.max_weight_qt
        } else {
            cfg.max_weight
        },
        workers: cfg.workers,
        convention: cfg.convention,
        table: cfg.table,
    };
    if qt {
        let s = run_sweep_qt(&sc)?;
        eprintln!("wall time {:.2}s", s.elapsed.as_secs_f64());
        Ok(Outcome {
            value: report::sweep_qt_json(&s),
            text: report::sweep_qt_text(&s),
            code: u8::from(!s.mismatches.is_empty()),
        })
    } else {
        let s = run_sweep(&sc)?;
        eprintln!("wall time {:.2}s", s.elapsed.as_secs_f64());
        Ok(Outcome {
            value: report::sweep_json(&s),
            text: report::sweep_text(&s),
            code: u8::from(!s.passed()),
        })
    }
}

fn cmd_classify(cfg: &RunConfig, l: &Partition, m: &Partition, n: &Partition) -> Result<Outcome> {
    let facets = horn_facets(l, m, n)?;
    let count = lr_count(l, m, n);
    let mut j = JsonClassify {
        lambda: l.parts().to_vec(),
        mu: m.parts().to_vec(),
        nu: n.parts().to_vec(),
        horn_feasible: facets.satisfied,
        facets: facets.equalities,
        minimal: count == 1,
        lr_count: count,
        cases: vec![],
        case: None,
        filling: None,
        division_numbers: None,
        grids: None,
        alternative: None,
        error: None,
    };
    if j.minimal {
        j.cases = classify_cases(l, m, n)?;
        j.case = j.cases.first().copied();
        j.filling = classify_filling(l, m, n).ok().as_ref().map(Into::into);
        let case = j.case.expect("minimal triples lie on a facet");
        match division_numbers(l, m, n, case, cfg.reading()) {
            Ok(dn) => {
                let a = HookAssignment::from_division_numbers(l, m, n, &dn)?;
                j.division_numbers = Some((&dn).into());
                j.grids = Some((&a).into());
                let (p, q, r) = ("8,7,4".parse()?, "6,3".parse()?, "5,5".parse()?);
                if (l, m, n) == (&p, &q, &r) {
                    let (alt, grids) = fixture_874();
                    let b = HookAssignment::parse(l, m, n, grids)?;
                    j.alternative = Some(JsonAlternative {
                        division_numbers: (&alt).into(),
                        grids: (&b).into(),
                        same_value: evaluate_d(l, m, n, &alt)? == evaluate_d(l, m, n, &dn)?,
                    });
                }
            }
            Err(e) => j.error = Some(e.to_string()),
        }
    }
    Ok(Outcome {
        text: j.text(),
        value: serde_json::to_value(&j)?,
        code: 0,
    })
}

fn cmd_enumerate(max_weight: u32, minimal: bool) -> Result<Outcome> {
    let ts = if minimal {
        enumerate_minimal(max_weight)
    } else {
        all_triples(max_weight)
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for (l, m, n) in &ts {
        text.push_str(&format!("{l} | {m} | {n}\n"));
        rows.push(json!([l.parts(), m.parts(), n.parts()]));
    }
    Ok(Outcome {
        value: json!({"max_weight": max_weight, "minimal": minimal, "count": ts.len(), "triples": rows}),
        text,
        code: 0,
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let vars: BTreeMap<String, String> = std::env::vars().collect();
    let g = cli.global;
    let (max_weight, max_weight_qt) = match &cli.cmd {
        Cmd::Sweep {
            max_weight,
            qt: false,
        } => (max_weight.clone(), None),
        Cmd::Sweep {
            max_weight,
            qt: true,
        } => (None, max_weight.clone()),
        _ => (None, None),
    };
    let flags = Overrides {
        max_weight,
        max_weight_qt,
        cache_dir: g.cache_dir,
        workers: g.workers,
        format: g.format,
        d_convention: g.d_convention,
        table: g.table,
    };
    let cfg = config::resolve(flags, g.config.as_deref(), &vars)?;
    cache::set_cache_dir(cfg.cache_dir.clone());
    let (out, default_format) = match &cli.cmd {
        Cmd::Expand {
            mu,
            nu,
            vars,
            qt,
            alpha,
        } => (cmd_expand(mu, nu, *vars, *qt, alpha.clone())?, Format::Text),
        Cmd::Verify { lambda, mu, nu, qt } => {
            (cmd_verify(&cfg, lambda, mu, nu, *qt)?, Format::Json)
        }
        Cmd::Sweep { qt, .. } => (cmd_sweep(&cfg, *qt)?, Format::Json),
        Cmd::Classify { lambda, mu, nu } => (cmd_classify(&cfg, lambda, mu, nu)?, Format::Text),
        Cmd::Enumerate {
            max_weight,
            minimal,
        } => (cmd_enumerate(*max_weight, *minimal)?, Format::Text),
    };
    Ok(emit(out, cfg.format.unwrap_or(default_format)))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
