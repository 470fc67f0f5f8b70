use std::path::Path;

use num_rational::Ratio;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use intmetric::constructions::{
    amalgamate_cr, amalgamate_mr_with, check_amalgam_mr, empirical_mu, find_extension_failure, gadget_h, inject_f,
    preimage_analysis, ExtensionAxiom, Family, MrRule, MuCurve,
};
use intmetric::enumeration::{
    count_cr_with, count_metric_with, count_report, enumerate_cr_with, enumerate_metric, matching_family_count,
    sample_uniform, structure_stats, CountReport, SearchConfig, StatsConfig, StatsMode,
};
use intmetric::structure::{component_decomposition, cr_membership, nearest_cr_distance_with, NearestConfig};
use intmetric::weights::{check_importantcor, check_size_lemma, check_triangle_classification, check_weight_bound};
use intmetric::{Exec, LemmaVerdict, MetricColoring};

use crate::args::{AmalgamKind, Cli, Command, FamilyArg, RuleArg, Verify};
use crate::output::{to_value, Failure, Output};

type Run = Result<Output, Failure>;

pub fn params(cmd: &Command) -> Value {
    match cmd {
        Command::Count(a) | Command::Preimages(a) | Command::MatchingBound(a) => to_value(a),
        Command::Enumerate(a) => to_value(a),
        Command::Sample(a) => to_value(a),
        Command::Stats(a) => to_value(a),
        Command::Membership(a) | Command::Nearest(a) | Command::Components(a) | Command::Inject(a) => to_value(a),
        Command::Verify(v) => match v {
            Verify::SizeLemma(a) | Verify::TriangleClass(a) | Verify::Importantcor(a) => to_value(a),
            Verify::WeightBound(a) => to_value(a),
            Verify::AmalgamMr(a) => to_value(a),
        },
        Command::GadgetH(a) => to_value(a),
        Command::Amalgamate(a) => to_value(a),
        Command::AxiomEval(a) => to_value(a),
        Command::AxiomCurve(a) => to_value(a),
    }
}

fn search(cli: &Cli) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Some(b) = cli.global.budget {
        cfg.node_budget = b;
    }
    cfg
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::from(intmetric::Error::Domain(format!("{}: {e}", path.display()))))
}

fn d_string(g: &MetricColoring) -> String {
    g.dist().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn listing(colorings: &[MetricColoring]) -> Vec<[String; 2]> {
    colorings.iter().enumerate().map(|(i, g)| [(i + 1).to_string(), d_string(g)]).collect()
}

fn verdicts(list: Vec<LemmaVerdict>) -> Output {
    let holds = list.iter().all(LemmaVerdict::holds);
    let rows = list
        .iter()
        .map(|v| [v.lemma.clone(), v.domain.clone(), v.checked.to_string(), v.holds().to_string()])
        .collect();
    let items = list.iter().map(to_value).collect();
    Output::new(&json!({ "holds": holds, "verdicts": list }))
        .code(if holds { 0 } else { 4 })
        .items(items)
        .table(["lemma", "domain", "checked", "holds"], rows)
}

fn per_r(r_max: u32, check: impl Fn(u32) -> intmetric::Result<LemmaVerdict>) -> Result<Vec<LemmaVerdict>, Failure> {
    if r_max < 3 {
        return Err(intmetric::Error::Domain(format!("--r-max must be at least 3, got {r_max}")).into());
    }
    (3..=r_max).map(|r| check(r).map_err(Failure::from)).collect()
}

#[derive(Deserialize)]
struct AmalgamInput {
    a: MetricColoring,
    b: MetricColoring,
    /// 1-based `(a_vertex, b_vertex)` pairs.
    shared: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct AxiomVerdict {
    satisfied: bool,
    /// First ordered copy of the base with no extension, 1-based.
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<Vec<usize>>,
}

fn load_axiom(path: Option<&Path>) -> Result<ExtensionAxiom, Failure> {
    match path {
        Some(p) => read_json(p),
        None => Ok(ExtensionAxiom::three_to_two_two()),
    }
}

fn curve_output(curve: MuCurve) -> Output {
    let rows = curve.csv_rows();
    let items = curve.points.iter().map(to_value).collect();
    Output::new(&curve).items(items).table(MuCurve::CSV_HEADER, rows)
}

pub fn run(cli: &Cli) -> Run {
    let exec = Exec::default();
    let cfg = search(cli);
    match &cli.command {
        Command::Count(a) => {
            let mut rep = count_report(a.r, a.n, &cfg)?;
            if cli.global.no_timing {
                rep.elapsed_ms = None;
            }
            let row = rep.csv_row();
            Ok(Output::new(&rep).table(CountReport::CSV_HEADER, vec![row]))
        }
        Command::Enumerate(a) => {
            let (r, n) = (a.rn.r, a.rn.n);
            let total = if a.cr { count_cr_with(r, n, &cfg)? } else { count_metric_with(r, n, &cfg)? };
            if total > a.max_items.into() {
                return Err(intmetric::Error::Capacity(format!(
                    "{total} colorings exceed --max-items {}; use `count` instead",
                    a.max_items
                ))
                .into());
            }
            let list: Vec<MetricColoring> = if a.cr {
                enumerate_cr_with(r, n, &cfg)?
            } else {
                enumerate_metric(r, n)?.collect()
            };
            let items = list.iter().map(to_value).collect();
            let rows = listing(&list);
            let payload = json!({
                "r": r,
                "n": n,
                "class": if a.cr { "cr" } else { "metric" },
                "count": list.len(),
                "colorings": list,
            });
            Ok(Output::new(&payload).items(items).table(["index", "d"], rows))
        }
        Command::Sample(a) => {
            let batch = sample_uniform(a.rn.r, a.rn.n, a.samples, a.seed)?;
            let items = batch.samples.iter().map(to_value).collect();
            let rows = listing(&batch.samples);
            Ok(Output::new(&batch).items(items).table(["index", "d"], rows))
        }
        Command::Stats(a) => {
            let epsilon: Ratio<u64> = a
                .epsilon
                .parse()
                .map_err(|_| Failure::usage(format!("--epsilon expects p/q, got {:?}", a.epsilon)))?;
            let mode = match a.samples {
                Some(samples) => StatsMode::Sampled { samples, seed: a.seed },
                None => StatsMode::Exact,
            };
            let stats = structure_stats(a.rn.r, a.rn.n, &StatsConfig { mode, epsilon, search: cfg, ..StatsConfig::default() })?;
            Ok(Output::new(&stats))
        }
        Command::Membership(a) => {
            let g: MetricColoring = read_json(&a.input)?;
            Ok(Output::new(&cr_membership(&g)))
        }
        Command::Nearest(a) => {
            let g: MetricColoring = read_json(&a.input)?;
            let near = nearest_cr_distance_with(&g, &NearestConfig { exec, ..NearestConfig::default() })?;
            Ok(Output::new(&near))
        }
        Command::Components(a) => {
            let g: MetricColoring = read_json(&a.input)?;
            let d = component_decomposition(&g);
            let ml = d.minimal_large_index().map(|i| i + 1);
            Ok(Output::new(&json!({ "decomposition": d, "minimal_large_index": ml })))
        }
        Command::Verify(v) => {
            let list = match v {
                Verify::SizeLemma(a) => per_r(a.r_max, check_size_lemma)?,
                Verify::TriangleClass(a) => per_r(a.r_max, check_triangle_classification)?,
                Verify::Importantcor(a) => per_r(a.r_max, check_importantcor)?,
                Verify::WeightBound(a) => vec![check_weight_bound(a.r, a.t)?],
                Verify::AmalgamMr(a) => {
                    let rule = match a.rule {
                        RuleArg::Min => MrRule::Min,
                        RuleArg::Max => MrRule::Max,
                    };
                    vec![check_amalgam_mr(a.r, a.max_factor, rule, exec)?]
                }
            };
            Ok(verdicts(list))
        }
        Command::Inject(a) => {
            let g: MetricColoring = read_json(&a.input)?;
            Ok(Output::new(&inject_f(&g)?))
        }
        Command::Preimages(a) => {
            let rep = preimage_analysis(a.r, a.n, &cfg)?;
            let code = if rep.postcondition_failures > 0 { 4 } else { 0 };
            Ok(Output::new(&rep).code(code))
        }
        Command::GadgetH(a) => Ok(Output::new(&gadget_h(a.r)?)),
        Command::Amalgamate(a) => {
            let input: AmalgamInput = read_json(&a.input)?;
            let mut shared = Vec::with_capacity(input.shared.len());
            for &(x, y) in &input.shared {
                if x == 0 || y == 0 {
                    return Err(intmetric::Error::Domain("shared vertices are 1-based".into()).into());
                }
                shared.push((x - 1, y - 1));
            }
            let out = match a.kind {
                AmalgamKind::Cr => amalgamate_cr(&input.a, &input.b, &shared)?,
                AmalgamKind::Mr => {
                    let rule = match a.rule {
                        RuleArg::Min => MrRule::Min,
                        RuleArg::Max => MrRule::Max,
                    };
                    amalgamate_mr_with(&input.a, &input.b, &shared, rule)?
                }
            };
            let metric = out.result.is_metric();
            let code = if metric { 0 } else { 4 };
            Ok(Output::new(&json!({ "amalgam": out, "is_metric": metric })).code(code))
        }
        Command::AxiomEval(a) => {
            let ax = load_axiom(a.axiom.as_deref())?;
            let g: MetricColoring = read_json(&a.input)?;
            if g.r() != ax.base().r() {
                return Err(intmetric::Error::Domain(format!("axiom has r = {}, coloring has r = {}", ax.r(), g.r())).into());
            }
            let failure = find_extension_failure(&ax, &g).map(|t| t.into_iter().map(|v| v + 1).collect());
            Ok(Output::new(&AxiomVerdict { satisfied: failure.is_none(), failure }))
        }
        Command::AxiomCurve(a) => {
            let ax = load_axiom(a.axiom.as_deref())?;
            if a.n_min > a.n_max {
                return Err(Failure::usage(format!("--n-min {} exceeds --n-max {}", a.n_min, a.n_max)));
            }
            let family = match a.family {
                FamilyArg::Metric => Family::Metric,
                FamilyArg::Cr => Family::Cr,
            };
            let ns: Vec<usize> = (a.n_min..=a.n_max).collect();
            Ok(curve_output(empirical_mu(&ax, family, &ns, a.samples, a.seed, exec)?))
        }
        Command::MatchingBound(a) => {
            let c = matching_family_count(a.r, a.n)?;
            Ok(Output::new(&json!({ "r": a.r, "n": a.n, "matchings": c.matchings.to_string(), "total": c.total.to_string() })))
        }
    }
}
