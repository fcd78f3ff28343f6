//! Acceptance suite. Runs as a plain binary so that the per-criterion
//! PASS/FAIL lines are always shown; exits non-zero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use fanramsey_core::bigraphic::{is_bigraphic, realize_interval, DegreePairSpec, IntervalParams};
use fanramsey_core::constructions::{
    chromatic_lower, star_fan_lower, star_fan_lower_special, star_fan_params,
    star_fan_special_params,
};
use fanramsey_core::error::Error;
use fanramsey_core::fans::{
    cycle_oracle, extension_matching, fan_extend, high_degree_fan, multipartite_matching_bound,
    ExtensionCase, ExtensionRoute, FanExtensionInstance, HighDegreeOutcome,
};
use fanramsey_core::gallai::edmonds_gallai;
use fanramsey_core::graph::build_complete_multipartite;
use fanramsey_core::matching::{all_maximum_matchings, max_matching};
use fanramsey_core::ramsey::{
    brute_force_ramsey, star_fan_core, verify_fan_fan_witness, verify_star_fan_witness,
    RamseyTarget, SearchOutcome,
};
use fanramsey_core::{Graph, MultipartiteSpec, TwoColoring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("construction sweep", construction_sweep),
        ("m = 2n construction sweep", special_sweep),
        ("exact small Ramsey numbers", small_ramsey),
        ("Gale-Ryser and interval realisation", bigraphic_suite),
        ("Edmonds-Gallai structure", gallai_suite),
        (
            "complete multipartite matchings and cycles",
            multipartite_suite,
        ),
        ("fan extension soundness", extension_suite),
        ("fans at high monochromatic degree", high_degree_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({detail}; {secs:.1}s)", i + 1)
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

fn construction_sweep() -> Outcome {
    let mut checked = 0;
    let mut skipped = 0;
    for n in 2..=25usize {
        for m in n + 1..=2 * n + 5 {
            if m >= n * (n - 1) {
                continue;
            }
            match star_fan_params(m, n) {
                Err(Error::UnsupportedRange(_)) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(format!("(m, n) = ({m}, {n}): {e}")),
                Ok(p) if p.b < 1 => return Err(format!("({m}, {n}) accepted with b = 0")),
                Ok(_) => {}
            }
            let c = star_fan_lower(m, n).map_err(|e| format!("({m}, {n}): {e}"))?;
            let report = verify_star_fan_witness(&c.coloring, m, n);
            if !report.all_hold() {
                return Err(format!("({m}, {n}): {:?}", report.claims));
            }
            let order = c.coloring.n() as f64;
            if order + 1.0 <= star_fan_core(m, n) - 8.0 {
                return Err(format!(
                    "({m}, {n}): N + 1 = {} not above the bound",
                    order + 1.0
                ));
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Err("nothing checked".into());
    }
    Ok(format!(
        "{checked} pairs verified, {skipped} outside b >= 1"
    ))
}

fn special_sweep() -> Outcome {
    let mut checked = 0;
    for n in 2..=60usize {
        match star_fan_special_params(n) {
            Err(Error::UnsupportedRange(_)) => continue,
            Err(e) => return Err(format!("n = {n}: {e}")),
            Ok(_) => {}
        }
        let c = star_fan_lower_special(n).map_err(|e| format!("n = {n}: {e}"))?;
        let report = verify_star_fan_witness(&c.coloring, 2 * n, n);
        if !report.all_hold() {
            return Err(format!("n = {n}: {:?}", report.claims));
        }
        let nf = n as f64;
        let expected = 2 * (3f64.sqrt() * nf).floor() as usize
            + 2 * ((3.0 - 3f64.sqrt()) * nf / 2.0).floor() as usize
            - 4;
        if c.coloring.n() != expected {
            return Err(format!(
                "n = {n}: N = {}, expected {expected}",
                c.coloring.n()
            ));
        }
        checked += 1;
    }
    Ok(format!("{checked} values of n verified"))
}

fn small_ramsey() -> Outcome {
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get());
    let cases = [
        ("R(K_{1,2}, F_2)", RamseyTarget::star_fan(2, 2), 9, 5),
        ("R(K_{1,1}, F_2)", RamseyTarget::star_fan(1, 2), 9, 5),
        ("R(F_1, F_1)", RamseyTarget::fan_fan(1), 8, 6),
    ];
    let mut found = Vec::new();
    for (name, target, cap, expected) in cases {
        match brute_force_ramsey(target, cap, workers).map_err(|e| e.to_string())? {
            SearchOutcome::Exact { value } if value == expected => {
                found.push(format!("{name} = {value}"))
            }
            other => return Err(format!("{name}: got {other}, expected {expected}")),
        }
    }
    let witness = chromatic_lower(2);
    let report = verify_fan_fan_witness(&witness, 2);
    match (&report.bound_implied, witness.n()) {
        (Some(b), 8) if b.value == 9 && report.all_hold() => found.push("R(F_2) >= 9".into()),
        _ => return Err(format!("chromatic witness: {report:?}")),
    }
    Ok(found.join(", "))
}

fn bigraphic_suite() -> Outcome {
    // Every degree pair realised by some bipartite graph with sides a, b.
    let mut realisable: HashSet<(Vec<usize>, Vec<usize>)> = HashSet::new();
    for a in 1..=4usize {
        for b in 1..=4usize {
            for mask in 0u32..1 << (a * b) {
                let bit = |i: usize, j: usize| mask >> (i * b + j) & 1 == 1;
                let xs = (0..a)
                    .map(|i| (0..b).filter(|&j| bit(i, j)).count())
                    .collect();
                let ys = (0..b)
                    .map(|j| (0..a).filter(|&i| bit(i, j)).count())
                    .collect();
                realisable.insert((xs, ys));
            }
        }
    }
    let sequences = |len: usize| -> Vec<Vec<usize>> {
        (0..5usize.pow(len as u32))
            .map(|code| (0..len).map(|i| code / 5usize.pow(i as u32) % 5).collect())
            .collect()
    };
    let mut specs = 0;
    for a in 1..=4 {
        for b in 1..=4 {
            let ys_all = sequences(b);
            for xs in sequences(a) {
                for ys in &ys_all {
                    let verdict = is_bigraphic(&DegreePairSpec::new(xs.clone(), ys.clone()));
                    let key = (xs.clone(), ys.clone());
                    if verdict.holds() != realisable.contains(&key) {
                        return Err(format!("{xs:?} / {ys:?}: test says {verdict:?}"));
                    }
                    specs += 1;
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x6a1e);
    let mut tuples = 0;
    while tuples < 10_000 {
        let a = rng.gen_range(1..=12);
        let b = rng.gen_range(1..=12);
        let p = IntervalParams {
            a,
            b,
            c: rng.gen_range(0..=b),
            d: rng.gen_range(0..=a),
            sigma: rng.gen_range(1..=4),
        };
        if !p.feasible() {
            continue;
        }
        let r = realize_interval(&p).map_err(|e| format!("{p:?}: {e}"))?;
        let g = &r.realization.graph;
        if g.n() != a + b || g.edges().any(|(u, v)| (u < a) == (v < a)) {
            return Err(format!("{p:?}: realisation is not bipartite on the sides"));
        }
        let within =
            |degs: Vec<usize>, top: usize| degs.iter().all(|&d| d <= top && d + p.sigma >= top);
        if !within(r.realization.x_degrees(), p.c) || !within(r.realization.y_degrees(), p.d) {
            return Err(format!("{p:?}: degrees outside the intervals"));
        }
        tuples += 1;
    }
    Ok(format!(
        "{specs} degree specs exact, {tuples} interval tuples"
    ))
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).expect("simple")
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

fn check_gallai(g: &Graph) -> Result<(), String> {
    let eg = edmonds_gallai(g);
    let all = all_maximum_matchings(g).map_err(|e| e.to_string())?;
    for m in &all {
        eg.check(g, m).map_err(|e| format!("{g:?}: {e}"))?;
    }
    // D is exactly the set of vertices missed by some maximum matching.
    let mut missed = vec![false; g.n()];
    for m in &all {
        let mates = m.mates(g.n());
        for v in 0..g.n() {
            missed[v] |= mates[v].is_none();
        }
    }
    let mut in_d = vec![false; g.n()];
    for &v in eg.d.iter().flatten() {
        in_d[v] = true;
    }
    if missed != in_d {
        return Err(format!("{g:?}: D differs from the inessential vertices"));
    }
    Ok(())
}

fn gallai_suite() -> Outcome {
    let mut graphs = 0;
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0u64..1 << pairs {
            check_gallai(&graph_from_mask(n, mask))?;
            graphs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xe6);
    let mut sampled = 0;
    for n in 7..=12usize {
        for _ in 0..300 {
            let p = rng.gen_range(0.1..0.8);
            check_gallai(&random_graph(&mut rng, n, p))?;
            sampled += 1;
        }
    }
    Ok(format!(
        "{graphs} graphs exhaustively, {sampled} sampled on 7-12 vertices"
    ))
}

fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(total)).rev() {
        for mut rest in partitions(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn multipartite_suite() -> Outcome {
    let mut specs = 0;
    let mut cycle_checks = 0;
    for total in 2..=10usize {
        for parts in partitions(total, total) {
            if parts.len() < 2 {
                continue;
            }
            let spec = MultipartiteSpec::new(parts.clone()).map_err(|e| e.to_string())?;
            let g = build_complete_multipartite(&spec);
            let bound = multipartite_matching_bound(&spec).map_err(|e| e.to_string())?;
            let nu = max_matching(&g).size();
            if bound != 2 * nu {
                return Err(format!("{parts:?}: bound {bound}, 2ν = {}", 2 * nu));
            }
            specs += 1;
            if spec.parts() < 3 {
                continue;
            }
            let largest = spec.largest();
            let longest = if 2 * largest <= total {
                total
            } else {
                2 * (total - largest)
            };
            for len in 3..=longest {
                if !cycle_oracle(&g, len).map_err(|e| e.to_string())? {
                    return Err(format!("{parts:?}: no cycle of length {len}"));
                }
                cycle_checks += 1;
            }
            if longest < total && cycle_oracle(&g, longest + 1).map_err(|e| e.to_string())? {
                return Err(format!("{parts:?}: cycle longer than 2(N - |V_t|)"));
            }
        }
    }
    Ok(format!(
        "{specs} partitions exact, {cycle_checks} cycle lengths confirmed"
    ))
}

struct Layout {
    x_sizes: Vec<usize>,
    y: usize,
    z: usize,
}

/// Complete multipartite `X ∪ Y` plus random edges at `Z`, with vertex
/// labels shuffled. Returns the instance and the centre.
fn build_instance(
    rng: &mut ChaCha8Rng,
    layout: &Layout,
    lambda: f64,
    n: usize,
) -> Option<(FanExtensionInstance, usize)> {
    let total = layout.x_sizes.iter().sum::<usize>() + layout.y + layout.z;
    let mut label: Vec<usize> = (0..total).collect();
    label.shuffle(rng);
    let mut next = 0;
    let mut take = |k: usize| -> Vec<usize> {
        let out = label[next..next + k].to_vec();
        next += k;
        out
    };
    let x_parts: Vec<Vec<usize>> = layout.x_sizes.iter().map(|&k| take(k)).collect();
    let y = take(layout.y);
    let z = take(layout.z);
    let mut part = vec![usize::MAX; total];
    for (i, p) in x_parts.iter().chain(std::iter::once(&y)).enumerate() {
        for &v in p {
            part[v] = i;
        }
    }
    let centre_part = rng.gen_range(0..x_parts.len());
    let v = x_parts[centre_part][0];
    let p_hood = rng.gen_range(0.6..1.0);
    let p_inner = rng.gen_range(0.2..0.9);
    let p_cross = rng.gen_range(0.0..0.6);
    let g = Graph::from_fn(total, |a, b| {
        let (za, zb) = (part[a] == usize::MAX, part[b] == usize::MAX);
        match (za, zb) {
            (false, false) => part[a] != part[b],
            (true, true) => rng.gen_bool(p_inner),
            _ => {
                let other = if za { b } else { a };
                rng.gen_bool(if other == v { p_hood } else { p_cross })
            }
        }
    });
    let inst = FanExtensionInstance::new(g, x_parts, y, z, lambda, n).ok()?;
    Some((inst, v))
}

fn random_layout(rng: &mut ChaCha8Rng, case: ExtensionCase, n: usize, lambda: usize) -> Layout {
    let parts_for = |rng: &mut ChaCha8Rng, at_least: usize| -> Vec<usize> {
        let mut sizes = Vec::new();
        let mut sum = 0;
        while sum < at_least || sizes.is_empty() {
            let s = rng.gen_range(1..=lambda);
            sizes.push(s);
            sum += s;
        }
        sizes
    };
    match case {
        ExtensionCase::I => {
            let extra = rng.gen_range(0..=n);
            let x_sizes = parts_for(rng, n + lambda + 1 + extra);
            let x: usize = x_sizes.iter().sum();
            let y = rng.gen_range(0..=n);
            let q = 2 * n as i64 - (x + y) as i64;
            let z = (q + 2 * lambda as i64 + 1).max(0) as usize + rng.gen_range(0..=4);
            Layout { x_sizes, y, z }
        }
        ExtensionCase::II => {
            let y = rng.gen_range(1..=n);
            let extra = rng.gen_range(0..=n);
            let x_sizes = parts_for(rng, (n + 1).saturating_sub(y).max(1) + extra);
            let x: usize = x_sizes.iter().sum();
            let q = 2 * n as i64 - (x + y) as i64;
            let z = 2 * (q + lambda as i64 + 1).max(0) as usize + rng.gen_range(0..=4);
            Layout { x_sizes, y, z }
        }
        ExtensionCase::III => {
            let y = n + rng.gen_range(0..=3);
            let at_least = rng.gen_range(1..=n);
            let x_sizes = parts_for(rng, at_least);
            let x: usize = x_sizes.iter().sum();
            let need = (n as i64 - x as i64 + lambda as i64).max(0) as usize;
            let z = 2 * need + rng.gen_range(0..=4);
            Layout { x_sizes, y, z }
        }
    }
}

fn extension_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfa4);
    let mut summary = Vec::new();
    for case in [ExtensionCase::I, ExtensionCase::II, ExtensionCase::III] {
        let (mut ok, mut attempts) = (0, 0);
        let mut routes = [0usize; 3];
        while ok < 200 {
            attempts += 1;
            if attempts > 200_000 {
                return Err(format!(
                    "case {case:?}: only {ok} qualifying instances generated"
                ));
            }
            let n = rng.gen_range(2..=15);
            let lambda = rng.gen_range(1..=3);
            let layout = random_layout(&mut rng, case, n, lambda);
            let Some((inst, v)) = build_instance(&mut rng, &layout, lambda as f64, n) else {
                continue;
            };
            let m = extension_matching(&inst, case, v).map_err(|e| e.to_string())?;
            if !inst.audit(case, v, &m).is_empty() {
                continue;
            }
            let ext = fan_extend(&inst, case, v, &m)
                .map_err(|e| {
                    format!(
                        "case {case:?}, n = {n}, λ = {lambda}, |X_i| = {:?}, |Y| = {}, |Z| = {}, q = {}, |M| = {}: {e}",
                        inst.x_parts.iter().map(Vec::len).collect::<Vec<_>>(),
                        inst.y.len(),
                        inst.z.len(),
                        inst.q(),
                        m.size()
                    )
                })?;
            let w = &ext.witness;
            let centred = ext.route != ExtensionRoute::GlobalSearch;
            if w.size() != n || (centred && w.center != v) {
                return Err(format!("case {case:?}: wrong fan shape {w:?}"));
            }
            w.validate(&inst.graph)
                .map_err(|e| format!("case {case:?}: {e}"))?;
            routes[ext.route as usize] += 1;
            ok += 1;
        }
        summary.push(format!(
            "case {case:?}: {ok} of {attempts} generated qualified, routes construction/centre/global = {}/{}/{}",
            routes[0], routes[1], routes[2]
        ));
    }
    Ok(summary.join(", "))
}

fn high_degree_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3);
    let mut centred = 0;
    for trial in 0..500 {
        let n = rng.gen_range(1..=5);
        let order = 3 * n + 1 + rng.gen_range(0..=3);
        let p = rng.gen_range(0.2..0.8);
        let mut red = random_graph(&mut rng, order, p);
        let coloring = TwoColoring::from_red(red.clone());
        let applicable = (0..order).any(|v| {
            let r = coloring.red().degree(v);
            r >= 3 * n || order - 1 - r >= 3 * n
        });
        if !applicable {
            // Condition on a monochromatic degree of at least 3n.
            let v = rng.gen_range(0..order);
            let make_red = rng.gen_bool(0.5);
            red = Graph::from_fn(order, |a, b| {
                if a == v || b == v {
                    make_red
                } else {
                    red.has_edge(a, b)
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
                if witness.size() != n {
                    return Err(format!("trial {trial}: fan of size {}", witness.size()));
                }
                witness
                    .validate(&coloring.graph(color))
                    .map_err(|e| format!("trial {trial}: {e}"))?;
                centred += source.is_some() as usize;
            }
            other => return Err(format!("trial {trial} (n = {n}, N = {order}): {other:?}")),
        }
    }
    Ok(format!(
        "500/500 trials found a fan, {centred} via a high-degree vertex"
    ))
}
