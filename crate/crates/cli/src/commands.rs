use std::fs;
use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};

use ramseylab::arrowing::validate::{validate_neither, validate_witness};
use ramseylab::arrowing::{check_pair, TwoColoring};
use ramseylab::constructions::{burr_coloring, ramsey_witness_fan, star_witness_fan};
use ramseylab::formulas::{
    burr_lower, fan_upper_complete, hao_lin_lower, known_result, predict_r_fan, predict_rstar_fan, KnownParams,
};
use ramseylab::graph::{complete, FanSpec};
use ramseylab::graph6::emit_graph6;
use ramseylab::invariants::report;
use ramseylab::search::{
    arrows, ramsey_number, star_critical_number, SearchConfig, SearchOutcome, SymmetryMode, Unresolved,
    DEFAULT_MAX_HOST_ORDER,
};
use ramseylab::stability::{claims_report, core_sets, optimize_partition};
use ramseylab::{Error, Result};

use crate::spec::{parse_blue, parse_graph, parse_host};
use crate::{Cli, Command, Construction, Global, Symmetry};

pub struct Output {
    pub value: Value,
    pub code: u8,
}

impl From<Value> for Output {
    fn from(value: Value) -> Self {
        Output { value, code: 0 }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidParameter(e.to_string())
}

fn write(path: &Path, value: &Value) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(value).expect("serializable") + "\n").map_err(io)
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required")))
}

fn config(g: &Global) -> SearchConfig {
    SearchConfig {
        workers: g.workers,
        node_budget: g.budget,
        symmetry: match g.symmetry {
            Symmetry::Auto => SymmetryMode::Auto,
            Symmetry::None => SymmetryMode::None,
            Symmetry::VertexOrbit => SymmetryMode::VertexOrbit,
            Symmetry::CanonicalAugmentation => SymmetryMode::CanonicalAugmentation,
        },
        ..SearchConfig::default()
    }
}

/// Settings echoed into reports; the worker count is left out because it
/// never changes results.
fn config_echo(g: &Global) -> Value {
    json!({ "seed": g.seed, "budget": g.budget, "symmetry": format!("{:?}", g.symmetry) })
}

fn outcome_code(o: &SearchOutcome) -> u8 {
    match o {
        SearchOutcome::Unresolved {
            reason: Unresolved::BudgetExhausted { .. },
        } => 2,
        _ => 0,
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Invariants { graph } => invariants(graph.as_deref()),
        Command::Construct {
            kind,
            k,
            t,
            n,
            chi,
            s,
            h,
            output,
        } => {
            let c = match kind {
                Construction::Burr => burr_coloring(need(*chi, "chi")?, need(*s, "s")?, need(*h, "h")?)?,
                Construction::RamseyWitness => ramsey_witness_fan(need(*k, "k")?, need(*t, "t")?, need(*n, "n")?)?,
                Construction::StarWitness => star_witness_fan(need(*k, "k")?, need(*t, "t")?, need(*n, "n")?)?,
            };
            let file = to_json(&c.to_file());
            match output {
                Some(path) => {
                    write(path, &file)?;
                    Ok(json!({ "written": path.display().to_string(), "host": to_json(&c.host()) }).into())
                }
                None => Ok(file.into()),
            }
        }
        Command::Verify {
            red,
            blue,
            coloring,
            host,
        } => {
            let red = parse_graph(red)?;
            let blue = parse_blue(blue)?;
            if let Some(path) = coloring {
                let c = TwoColoring::from_json(&fs::read_to_string(path).map_err(io)?)?;
                let w = check_pair(&c, &red, &blue)?;
                if w.is_neither() {
                    validate_neither(&c, &red, &blue)?;
                } else {
                    validate_witness(&c, &w, &red, &blue)?;
                }
                return Ok(json!({
                    "host": to_json(&c.host()),
                    "neither": w.is_neither(),
                    "witness": to_json(&w),
                })
                .into());
            }
            let host = parse_host(host.as_deref().expect("clap enforces host or coloring"))?;
            match arrows(host, &red, &blue, &config(g)) {
                Ok(r) => {
                    if let Some(path) = &g.certificate {
                        write(path, &to_json(&r.certificate))?;
                    }
                    Ok(json!({
                        "status": "decided",
                        "arrows": r.arrows,
                        "config": config_echo(g),
                        "certificate": to_json(&r.certificate),
                    })
                    .into())
                }
                Err(Error::BudgetExhausted { nodes }) => Ok(Output {
                    value: json!({ "status": "budget_exhausted", "nodes": nodes, "config": config_echo(g) }),
                    code: 2,
                }),
                Err(e) => Err(e),
            }
        }
        Command::Ramsey { red, blue, lo, hi } => {
            let o = ramsey_number(&parse_graph(red)?, &parse_blue(blue)?, *lo, *hi, &config(g))?;
            searched(g, o)
        }
        Command::StarRamsey { red, blue, r } => {
            let (red, blue) = (parse_graph(red)?, parse_blue(blue)?);
            let cfg = config(g);
            let r = match r {
                Some(r) => *r,
                None => {
                    let o = ramsey_number(&red, &blue, 1, cfg.max_host_order, &cfg)?;
                    match o.value() {
                        Some(v) => v,
                        None => return searched(g, o),
                    }
                }
            };
            let mut out = searched(g, star_critical_number(&red, &blue, r, &cfg)?)?;
            out.value["ramsey_number"] = json!(r);
            Ok(out)
        }
        Command::Predict {
            k,
            t,
            n,
            tag,
            h,
            r,
            delta,
        } => {
            let as64 = |v: Option<usize>| v.map(|x| x as u64);
            if let Some(tag) = tag {
                let params = KnownParams {
                    k: as64(*k),
                    t: as64(*t),
                    n: as64(*n),
                    h: as64(*h),
                    r: as64(*r),
                    delta: as64(*delta),
                };
                return Ok(json!({ "tag": tag.to_string(), "result": to_json(&known_result(*tag, &params)?) }).into());
            }
            let (k, t, n) = (need(*k, "k")? as u64, need(*t, "t")? as u64, need(*n, "n")? as u64);
            Ok(json!({
                "k": k, "t": t, "n": n,
                "predict_R": to_json(&predict_r_fan(k, t, n)?),
                "predict_rstar": to_json(&predict_rstar_fan(k, t, n)?),
                "burr_lower": to_json(&burr_lower(k + 1, 1, n * t + 1)?),
                "hao_lin_lower": to_json(&hao_lin_lower(k + 1, 1, 1, n * t + 1, t, false)?),
                "upper_bound": fan_upper_complete(k, t, n).ok().map(|f| to_json(&f)),
            })
            .into())
        }
        Command::Diagnose {
            coloring,
            k,
            t,
            n,
            xi,
            restarts,
        } => {
            let c = match coloring {
                Some(path) => TwoColoring::from_json(&fs::read_to_string(path).map_err(io)?)?,
                None => star_witness_fan(*k, *t, *n)?,
            };
            // The structure lives on the clique part of the host.
            let c = c.restrict_to_clique();
            let spec = FanSpec::new(*n, *t)?;
            let p = optimize_partition(&c, *k, *restarts, g.seed, *xi)?;
            let cores = core_sets(&c, &p);
            let rep = claims_report(&c, &p, &cores, spec);
            Ok(json!({
                "config": config_echo(g),
                "host": to_json(&c.host()),
                "partition": to_json(&p),
                "core_sets": to_json(&cores),
                "report": to_json(&rep),
            })
            .into())
        }
        Command::Table { k, t, n, no_search } => table(g, k, t, n, !*no_search),
    }
}

fn invariants(graph: Option<&str>) -> Result<Output> {
    let text = match graph {
        Some(s) => s.to_string(),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(io)?;
            buf.lines().next().unwrap_or("").to_string()
        }
    };
    let graph = parse_graph(&text)?;
    let mut v = to_json(&report(&graph)?);
    v["graph6"] = json!(emit_graph6(&graph));
    Ok(v.into())
}

fn searched(g: &Global, o: SearchOutcome) -> Result<Output> {
    if let Some(path) = &g.certificate {
        write(path, &to_json(&o))?;
    }
    let code = outcome_code(&o);
    let mut v = to_json(&o);
    v["config"] = config_echo(g);
    Ok(Output { value: v, code })
}

fn range(text: &str) -> Result<std::ops::RangeInclusive<u64>> {
    let bad = || Error::Parse(format!("bad range {text:?}"));
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    match text.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.trim_start_matches('='))?),
        None => {
            let v = num(text)?;
            Ok(v..=v)
        }
    }
}

fn table(g: &Global, k: &str, t: &str, n: &str, search: bool) -> Result<Output> {
    let (ks, ts, ns) = (range(k)?, range(t)?, range(n)?);
    let cfg = config(g);
    let mut rows = Vec::new();
    for k in ks {
        for t in ts.clone() {
            for n in ns.clone() {
                rows.push(table_row(&cfg, k, t, n, search)?);
            }
        }
    }
    Ok(json!({ "config": config_echo(g), "rows": rows }).into())
}

fn table_row(cfg: &SearchConfig, k: u64, t: u64, n: u64, search: bool) -> Result<Value> {
    let pr = predict_r_fan(k, t, n)?.expect_value();
    let ps = predict_rstar_fan(k, t, n)?.expect_value();
    let burr = burr_lower(k + 1, 1, n * t + 1)?.expect_value();
    let hao = hao_lin_lower(k + 1, 1, 1, n * t + 1, t, false)?.expect_value();
    let upper = fan_upper_complete(k, t, n).ok().and_then(|f| f.value);
    let (mut exact_r, mut exact_rs) = (json!("not searched"), json!("not searched"));
    let mut note = String::new();
    if search {
        let (r, rs) = exact_cell(cfg, k as usize, t as usize, n as usize, burr as usize, upper)?;
        if let (Some(v), _) = &r {
            if *v as u64 != pr {
                note = "asymptotic threshold not reached".into();
            }
        }
        exact_r = r.1.map_or_else(|| json!(r.0), |s| json!(s));
        exact_rs = rs.1.map_or_else(|| json!(rs.0), |s| json!(s));
    }
    Ok(json!({
        "k": k, "t": t, "n": n,
        "formula_R": pr,
        "burr_lower": burr,
        "upper_bound": upper,
        "search_R": exact_r,
        "formula_rstar": ps,
        "hao_lin_lower": hao,
        "search_rstar": exact_rs,
        "validity": "asymptotic_only",
        "note": note,
    }))
}

type Cell = (Option<usize>, Option<String>);

fn unresolved(reason: &Unresolved) -> String {
    match reason {
        Unresolved::BudgetExhausted { .. } => "unsolved (budget)".into(),
        other => format!("unresolved ({})", to_json(other)["kind"].as_str().unwrap_or("?")),
    }
}

fn exact_cell(cfg: &SearchConfig, k: usize, t: usize, n: usize, lo: usize, upper: Option<u64>) -> Result<(Cell, Cell)> {
    let limit = DEFAULT_MAX_HOST_ORDER.min(cfg.max_host_order);
    let size = || (None, Some("unsolved (size limit)".to_string()));
    if lo > limit {
        return Ok((size(), size()));
    }
    let hi = upper.map_or(limit, |u| (u as usize).min(limit));
    let g = complete(k + 1);
    let blue = ramseylab::arrowing::BlueTarget::Fan(FanSpec::new(n, t)?);
    let r = match ramsey_number(&g, &blue, lo, hi, cfg)? {
        SearchOutcome::Resolved { value, .. } => value,
        SearchOutcome::Unresolved {
            reason: Unresolved::AboveBracket { .. },
        } if hi == limit => return Ok((size(), size())),
        SearchOutcome::Unresolved { reason } => {
            return Ok(((None, Some(unresolved(&reason))), (None, Some("needs R".into()))))
        }
    };
    let rs = match star_critical_number(&g, &blue, r, cfg)? {
        SearchOutcome::Resolved { value, .. } => (Some(value), None),
        SearchOutcome::Unresolved { reason } => (None, Some(unresolved(&reason))),
    };
    Ok(((Some(r), None), rs))
}

