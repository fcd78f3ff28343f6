use std::fmt::Write as _;
use std::path::Path;

use anyhow::anyhow;
use clap::ValueEnum;
use fanramsey_core::bigraphic::{
    is_bigraphic, realize_bigraphic, realize_interval, BipartiteRealization, DegreePairSpec,
    IntervalParams,
};
use fanramsey_core::constructions::{
    chromatic_lower, dirac_threshold, star_fan_lower, star_fan_lower_special, turan_lower,
    ConstructionParams,
};
use fanramsey_core::fans::{find_fan, high_degree_fan, HighDegreeOutcome};
use fanramsey_core::gallai::{edmonds_gallai, eg_neighborhood_structure, NeighborhoodOutcome};
use fanramsey_core::io::{read_graph, render, write_graph, Format};
use fanramsey_core::ramsey::{
    brute_force_ramsey, fan_ramsey_bounds, star_fan_formula, verify_fan_fan_witness,
    verify_star_fan_witness, RamseyTarget, SearchOutcome, Target, WitnessReport,
};
use fanramsey_core::{Color, Error, Graph, TwoColoring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::*;

/// What a command prints, and whether its claims held.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            ok: true,
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    /// A construction failed its own verification.
    Claims(anyhow::Error),
    Usage(anyhow::Error),
    Io(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Claims(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    pub fn error(&self) -> &anyhow::Error {
        match self {
            Failure::Claims(e) | Failure::Usage(e) | Failure::Io(e) => e,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Claims(e.into()),
            _ => Failure::Usage(e.into()),
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(anyhow!(msg.into()))
}

fn format_for(path: &Path, format: Option<FormatArg>) -> Format {
    match format {
        Some(FormatArg::Edgelist) => Format::EdgeList,
        Some(FormatArg::Graph6) => Format::Graph6,
        None => Format::from_path(path),
    }
}

fn load(path: &Path, format: Option<FormatArg>) -> Result<Graph> {
    read_graph(path, format_for(path, format))
        .map_err(|e| Failure::Io(anyhow!("{}: {e}", path.display())))?
        .map_err(|e| Failure::Io(anyhow!("{}: {e}", path.display())))
}

fn save(path: &Path, g: &Graph, format: Option<FormatArg>) -> Result<()> {
    write_graph(path, g, format_for(path, format))
        .map_err(|e| Failure::Io(anyhow!("{}: {e}", path.display())))
}

fn color_of(c: ColorArg) -> Color {
    match c {
        ColorArg::Red => Color::Red,
        ColorArg::Blue => Color::Blue,
    }
}

fn edges_json(g: &Graph) -> Value {
    json!(g.edges().collect::<Vec<_>>())
}

fn witness_text(out: &mut String, report: &WitnessReport) {
    let _ = writeln!(out, "order: {}", report.order);
    for c in &report.claims {
        let verdict = if c.holds { "holds" } else { "FAILS" };
        let _ = writeln!(out, "claim {}: {verdict}", c.property);
        if let Some(cert) = &c.certificate {
            let _ = writeln!(
                out,
                "  certificate: {}",
                serde_json::to_string(cert).unwrap()
            );
        }
    }
    match &report.bound_implied {
        Some(b) => {
            let _ = writeln!(out, "implied: {}", b.statement);
        }
        None => {
            let _ = writeln!(out, "implied: none");
        }
    }
}

fn emit_graph(
    out: &mut String,
    json: &mut Value,
    (label, g): (&str, &Graph),
    path: Option<&Path>,
    format: Option<FormatArg>,
) -> Result<()> {
    match path {
        Some(p) => {
            save(p, g, format)?;
            let _ = writeln!(out, "written: {}", p.display());
            json["written"] = json!(p.display().to_string());
        }
        None => {
            let _ = writeln!(out, "{label}:");
            out.push_str(&render(g, format_for(Path::new(""), format)));
        }
    }
    json["order"] = json!(g.n());
    json["edges"] = edges_json(g);
    Ok(())
}

fn params_block(out: &mut String, p: &ConstructionParams) -> Value {
    let _ = writeln!(
        out,
        "m: {}\nn: {}\na: {}\nb: {}\nsigma: {}\nN: {}",
        p.m, p.n, p.a, p.b, p.sigma, p.order
    );
    let _ = writeln!(out, "claimed bound: {:.6}", p.claimed_bound());
    json!({
        "m": p.m, "n": p.n, "a": p.a, "b": p.b, "sigma": p.sigma,
        "order": p.order, "claimed_bound": p.claimed_bound(),
    })
}

pub fn construct(args: &ConstructArgs, format: Option<FormatArg>) -> Result<Report> {
    let mut text = String::new();
    let kind = args.kind.to_possible_value().expect("no skipped variants");
    let _ = writeln!(text, "kind: {}", kind.get_name());
    let out = args.out.as_deref();
    match args.kind {
        ConstructKind::StarFan | ConstructKind::StarFanSpecial => {
            let c = match args.kind {
                ConstructKind::StarFan => {
                    let m = args.m.ok_or_else(|| usage("star-fan needs --m"))?;
                    star_fan_lower(m, args.n)?
                }
                _ => star_fan_lower_special(args.n)?,
            };
            let params = params_block(&mut text, &c.params);
            let report = verify_star_fan_witness(&c.coloring, c.params.m, c.params.n);
            witness_text(&mut text, &report);
            let ok = report.all_hold();
            let mut json = json!({ "kind": "star_fan", "params": params, "verification": report });
            emit_graph(
                &mut text,
                &mut json,
                ("red edges", c.coloring.red()),
                out,
                format,
            )?;
            Ok(Report { json, text, ok })
        }
        ConstructKind::Chromatic => {
            if args.n == 0 {
                return Err(usage("n must be positive"));
            }
            let coloring = chromatic_lower(args.n);
            let report = verify_fan_fan_witness(&coloring, args.n);
            witness_text(&mut text, &report);
            let ok = report.all_hold();
            let mut json = json!({ "kind": "chromatic", "n": args.n, "verification": report });
            emit_graph(
                &mut text,
                &mut json,
                ("red edges", coloring.red()),
                out,
                format,
            )?;
            Ok(Report { json, text, ok })
        }
        ConstructKind::Turan => {
            let k = args.k.ok_or_else(|| usage("turan needs --k"))?;
            let t = turan_lower(args.n, k)?;
            let _ = writeln!(
                text,
                "n: {}\nk: {k}\nregime: {:?}\nedges: {}",
                args.n,
                t.regime,
                t.graph.edge_count()
            );
            let _ = writeln!(text, "claim no F_{k}: holds");
            let mut json = json!({
                "kind": "turan", "n": args.n, "k": k, "regime": t.regime,
                "edge_count": t.graph.edge_count(), "fan_free": true,
            });
            emit_graph(&mut text, &mut json, ("edges", &t.graph), out, format)?;
            Ok(Report::ok(json, text))
        }
    }
}

pub fn verify(args: &VerifyArgs, format: Option<FormatArg>) -> Result<Report> {
    let red = load(&args.input, format)?;
    let coloring = TwoColoring::from_red(red);
    let (mode, report) = match args.m {
        Some(m) => ("star_fan", verify_star_fan_witness(&coloring, m, args.n)),
        None => ("fan_fan", verify_fan_fan_witness(&coloring, args.n)),
    };
    let mut text = format!("mode: {mode}\n");
    witness_text(&mut text, &report);
    let ok = report.all_hold();
    Ok(Report {
        json: json!({ "mode": mode, "report": report }),
        text,
        ok,
    })
}

fn list(v: &[usize]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn decompose(args: &DecomposeArgs, format: Option<FormatArg>) -> Result<Report> {
    let g = load(&args.input, format)?;
    let mut text = String::new();
    if let (Some(v), Some(color), Some(n)) = (args.vertex, args.color, args.n) {
        if v >= g.n() {
            return Err(usage(format!(
                "vertex {v} out of range for {} vertices",
                g.n()
            )));
        }
        let coloring = TwoColoring::from_red(g);
        let outcome = eg_neighborhood_structure(&coloring, v, color_of(color), n)?;
        let ok = match &outcome {
            NeighborhoodOutcome::Inapplicable { nu, n } => {
                let _ = writeln!(text, "inapplicable: neighbourhood matching {nu} >= n = {n}");
                true
            }
            NeighborhoodOutcome::Applicable(r) => {
                let _ = writeln!(
                    text,
                    "vertex: {}\ncolor: {}\nneighbourhood: {}",
                    r.vertex,
                    r.color,
                    list(&r.neighborhood)
                );
                partition_text(&mut text, &r.partition);
                let _ = writeln!(text, "size in [2n, 3n): {}", r.size_in_range);
                let _ = writeln!(text, "matching identity: {}", r.matching_identity);
                let _ = writeln!(text, "odd component bound: {}", r.odd_component_bound);
                let _ = writeln!(
                    text,
                    "cross pairs in other colour: {}",
                    r.cross_pairs_other_color
                );
                if let Some((a, b)) = r.cross_pair_violation {
                    let _ = writeln!(text, "  violation: {a}-{b}");
                }
                r.all_facts_hold()
            }
        };
        return Ok(Report {
            json: serde_json::to_value(&outcome).unwrap(),
            text,
            ok,
        });
    }
    let eg = edmonds_gallai(&g);
    partition_text(&mut text, &eg);
    Ok(Report::ok(serde_json::to_value(&eg).unwrap(), text))
}

fn partition_text(text: &mut String, eg: &fanramsey_core::gallai::EgPartition) {
    let _ = writeln!(text, "A: {}", list(&eg.a));
    let _ = writeln!(text, "C: {}", list(&eg.c));
    for (i, d) in eg.d.iter().enumerate() {
        let _ = writeln!(text, "D{}: {}", i + 1, list(d));
    }
    let _ = writeln!(
        text,
        "p: {}\ndeficiency: {}\nnu: {}",
        eg.p, eg.deficiency, eg.nu
    );
}

fn realization_text(text: &mut String, r: &BipartiteRealization) {
    let _ = writeln!(text, "x degrees: {}", list(&r.x_degrees()));
    let _ = writeln!(text, "y degrees: {}", list(&r.y_degrees()));
    let _ = writeln!(text, "edges:");
    for (x, y) in r.graph.edges() {
        let _ = writeln!(text, "x{x} y{}", y - r.a);
    }
}

fn realization_json(r: &BipartiteRealization) -> Value {
    let edges: Vec<_> = r.graph.edges().map(|(x, y)| (x, y - r.a)).collect();
    json!({ "a": r.a, "b": r.b, "x_degrees": r.x_degrees(), "y_degrees": r.y_degrees(), "edges": edges })
}

pub fn realize(args: &RealizeArgs, format: Option<FormatArg>) -> Result<Report> {
    let mut text = String::new();
    let (json, realization) = if let Some(p) = &args.interval {
        let [a, b, c, d, sigma] = p[..] else {
            return Err(usage("--interval takes five values a,b,c,d,sigma"));
        };
        let params = IntervalParams { a, b, c, d, sigma };
        let r = realize_interval(&params)?;
        let _ = writeln!(
            text,
            "imbalance: {}\nq: {}\nr: {}\nlowered side: {}",
            params.imbalance(),
            r.q,
            r.r,
            if r.lowered_x { "x" } else { "y" }
        );
        realization_text(&mut text, &r.realization);
        let json = json!({
            "params": params, "imbalance": params.imbalance(), "q": r.q, "r": r.r,
            "lowered_x": r.lowered_x, "realization": realization_json(&r.realization),
        });
        (json, r.realization)
    } else {
        let spec = DegreePairSpec::new(
            args.xs.clone().unwrap_or_default(),
            args.ys.clone().unwrap_or_default(),
        );
        let verdict = is_bigraphic(&spec);
        let _ = writeln!(text, "bigraphic: {}", verdict.holds());
        if !verdict.holds() {
            let _ = writeln!(
                text,
                "certificate: {}",
                serde_json::to_string(&verdict).unwrap()
            );
            return Ok(Report {
                json: json!({ "verdict": verdict }),
                text,
                ok: false,
            });
        }
        let r = realize_bigraphic(&spec)?;
        realization_text(&mut text, &r);
        (
            json!({ "verdict": verdict, "realization": realization_json(&r) }),
            r,
        )
    };
    if let Some(out) = &args.out {
        save(out, &realization.graph, format)?;
        let _ = writeln!(text, "written: {}", out.display());
    }
    Ok(Report::ok(json, text))
}

pub fn fan_find(args: &FanFindArgs, format: Option<FormatArg>) -> Result<Report> {
    if let Some(trials) = args.trials {
        return high_degree_trials(trials, args.n.expect("clap requires n"), args.seed);
    }
    let input = args
        .input
        .as_deref()
        .expect("clap requires input or trials");
    let k = args.k.ok_or_else(|| usage("fan search needs --k"))?;
    let g = load(input, format)?;
    let g = match args.color {
        Some(ColorArg::Blue) => g.complement(),
        _ => g,
    };
    let found = find_fan(&g, k);
    let text = match &found {
        Some(w) => {
            let spokes: Vec<String> = w.spokes.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            format!(
                "found: F_{k}\ncenter: {}\nspokes: {}\n",
                w.center,
                spokes.join(" ")
            )
        }
        None => format!("found: none (no F_{k})\n"),
    };
    Ok(Report::ok(json!({ "k": k, "witness": found }), text))
}

fn high_degree_trials(trials: usize, n: usize, seed: u64) -> Result<Report> {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut found, mut centred) = (0, 0);
    let mut misses = Vec::new();
    for trial in 0..trials {
        let order = 3 * n + 1 + rng.gen_range(0..=2);
        let p = rng.gen_range(0.2..0.8);
        let mut red = Graph::from_fn(order, |_, _| rng.gen_bool(p));
        let high = (0..order).any(|v| {
            let d = red.degree(v);
            d >= 3 * n || order - 1 - d >= 3 * n
        });
        if !high {
            let v = rng.gen_range(0..order);
            let all_red = rng.gen_bool(0.5);
            let base = red;
            red = Graph::from_fn(order, |a, b| {
                if a == v || b == v {
                    all_red
                } else {
                    base.has_edge(a, b)
                }
            });
        }
        let coloring = TwoColoring::from_red(red);
        match high_degree_fan(&coloring, n) {
            HighDegreeOutcome::Found {
                color,
                witness,
                source,
            } => {
                if witness.validate(&coloring.graph(color)).is_ok() {
                    found += 1;
                    centred += source.is_some() as usize;
                } else {
                    misses.push(trial);
                }
            }
            _ => misses.push(trial),
        }
    }
    let text = format!(
        "trials: {trials}\nn: {n}\nseed: {seed}\nfound: {found}\nvia high-degree vertex: {centred}\nmisses: {}\n",
        list(&misses)
    );
    let json = json!({
        "trials": trials, "n": n, "seed": seed, "found": found,
        "via_high_degree_vertex": centred, "misses": misses,
    });
    Ok(Report {
        json,
        text,
        ok: misses.is_empty(),
    })
}

fn parse_target(kind: &str, size: &str) -> Result<Target> {
    format!("{kind}:{size}")
        .parse::<Target>()
        .map_err(|e| Failure::Usage(e.into()))
}

pub fn search(args: &SearchArgs) -> Result<Report> {
    let blue = parse_target(&args.targets[0], &args.targets[1])?;
    let red = parse_target(&args.targets[2], &args.targets[3])?;
    let workers = match args.workers {
        Some(0) => return Err(usage("workers must be positive")),
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, |p| p.get()),
    };
    let target = RamseyTarget { blue, red };
    let outcome = brute_force_ramsey(target, args.cap, workers)?;
    let statement = match &outcome {
        SearchOutcome::Exact { value } => format!("R({blue}, {red}) = {value}"),
        SearchOutcome::AtLeast { value, .. } => format!("R({blue}, {red}) >= {value}"),
    };
    let mut json = json!({ "blue": blue, "red": red, "cap": args.cap, "statement": statement });
    match &outcome {
        SearchOutcome::Exact { value } => {
            json["result"] = json!("exact");
            json["value"] = json!(value);
        }
        SearchOutcome::AtLeast { value, witness } => {
            json["result"] = json!("at_least");
            json["value"] = json!(value);
            json["witness_red_edges"] = edges_json(witness.red());
        }
    }
    Ok(Report::ok(json, format!("{outcome}\n{statement}\n")))
}

pub fn formula(args: &FormulaArgs) -> Result<Report> {
    match args.which {
        FormulaKind::StarFan { m, n } => {
            let r = star_fan_formula(m, n)?;
            let (lo, hi) = r.integer_range();
            let text = format!(
                "regime: {}\nexactness: {:?}\nlower: {:.6}\nupper: {:.6}\nintegers: {lo}..={hi}\n",
                r.regime, r.exactness, r.lower, r.upper
            );
            Ok(Report::ok(serde_json::to_value(&r).unwrap(), text))
        }
        FormulaKind::Fan { n, epsilon } => {
            let b = fan_ramsey_bounds(n, epsilon)?;
            let text = format!(
                "lower (strict): {:.6}\nupper: {:.6}\ngate n >= {:.6}: {}\n",
                b.lower,
                b.upper,
                b.gate,
                if b.upper_valid {
                    "met"
                } else {
                    "not met, upper bound not established"
                }
            );
            Ok(Report::ok(serde_json::to_value(&b).unwrap(), text))
        }
        FormulaKind::Dirac { n, k } => {
            let d = dirac_threshold(n, k)?;
            let text = format!(
                "alpha: {:.6}\ncase: {}\nthreshold: {:.6}\nadditive constant unresolved: {}\n",
                d.alpha, d.case, d.value, d.additive_constant_unresolved
            );
            Ok(Report::ok(serde_json::to_value(&d).unwrap(), text))
        }
    }
}
