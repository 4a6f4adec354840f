use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use anyhow::Result;
use serde::{Deserialize, Serialize};
use serde_json::json;

use madness_core::arrangement::{enumerate_arrangements, interior_matching_count, PlacementRecord};
use madness_core::enumeration::{
    distribution_buildable, distribution_for_target, five_target_records, RuleOrientation,
};
use madness_core::solver::solve_checked;
use madness_core::universal::{
    buildable_count, census as census_all, conjecture_sets, draw_samples, exhaustive_search,
    orbit_and_stabilizer, per_target_analysis, subset_build_distribution, summarize, SearchOptions,
};
use madness_core::{Collection, CubeId, CubeName, CubeSet, Tableau};

use crate::cache::{cached, Cache};
use crate::expected;
use crate::output::{to_csv, Report, Status};
use crate::{Budget, CliError, Command, GlobalOpts, SolveArgs};

struct Ctx<'a> {
    cache: Option<&'a Cache>,
    check: bool,
}

pub fn execute(command: &Command, opts: &GlobalOpts) -> Result<Vec<Report>> {
    let cache = opts.cache_dir.as_ref().map(Cache::new);
    let ctx = Ctx {
        cache: cache.as_ref(),
        check: opts.check,
    };
    let one = |r: Result<Report>| r.map(|r| vec![r]);
    match command {
        Command::Cubes => one(timed(|| cubes(&ctx))),
        Command::Solve(args) => one(timed(|| solve(&ctx, args))),
        Command::Table1 { target } => one(timed(|| table1(&ctx, target))),
        Command::Table2 => one(timed(|| table2(&ctx))),
        Command::FiveTargets { verify } => one(timed(|| five_targets(&ctx, *verify))),
        Command::Universal => one(timed(|| universal(&ctx))),
        Command::Figure7 { k, set } => one(timed(|| figure7(&ctx, *k, *set))),
        Command::Sample { k, n, seed } => one(timed(|| sample(&ctx, *k, *n, *seed))),
        Command::Census { k } => one(timed(|| census(&ctx, *k))),
        Command::Search { budget, checkpoint } => {
            one(timed(|| search(&ctx, *budget, checkpoint.clone())))
        }
        Command::Reproduce => Ok(vec![
            timed(|| cubes(&ctx))?,
            timed(|| table1(&ctx, "Ba"))?,
            timed(|| table2(&ctx))?,
            timed(|| five_targets(&ctx, true))?,
            timed(|| universal(&ctx))?,
            timed(|| figure7(&ctx, None, 0))?,
            timed(|| sample(&ctx, None, 20_000, 2024))?,
        ]),
    }
}

fn timed(f: impl FnOnce() -> Result<Report>) -> Result<Report> {
    let start = Instant::now();
    let mut r = f()?;
    r.elapsed = start.elapsed();
    Ok(r)
}

fn base_report(
    command: &'static str,
    params: serde_json::Value,
    payload: &impl Serialize,
) -> Result<Report> {
    Ok(Report {
        command,
        params,
        payload: serde_json::to_value(payload)?,
        text: String::new(),
        csv: String::new(),
        files: Vec::new(),
        json_file: format!("{}.json", command.replace('-', "_")),
        status: Status::Ok,
        checked: false,
        elapsed: Duration::ZERO,
    })
}

fn validation(msg: impl Into<String>) -> anyhow::Error {
    CliError::Validation(msg.into()).into()
}

fn parse_target(s: &str) -> Result<CubeId> {
    Ok(s.trim().parse::<CubeName>()?.id())
}

fn names(set: CubeSet) -> String {
    set.iter()
        .map(|id| id.name().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

// ---- cubes ----

#[derive(Debug, Serialize)]
struct CubeCsvRow {
    name: String,
    up: u8,
    down: u8,
    north: u8,
    east: u8,
    south: u8,
    west: u8,
    corners: String,
}

#[derive(Debug, Serialize)]
struct CubeJson {
    name: String,
    faces: [u8; 6],
    corners: Vec<u16>,
}

fn cubes(ctx: &Ctx) -> Result<Report> {
    let t = Tableau::global();
    let json_rows: Vec<CubeJson> = t
        .cubes()
        .iter()
        .map(|c| CubeJson {
            name: c.name.to_string(),
            faces: c.coloring.colors(),
            corners: c.corners.iter().map(|k| k.value()).collect(),
        })
        .collect();
    let csv_rows: Vec<CubeCsvRow> = json_rows
        .iter()
        .map(|c| {
            let [up, down, north, east, south, west] = c.faces;
            CubeCsvRow {
                name: c.name.clone(),
                up,
                down,
                north,
                east,
                south,
                west,
                corners: c
                    .corners
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            }
        })
        .collect();

    let mut r = base_report(
        "cubes",
        json!({}),
        &json!({ "faces": "U D N E S W", "cubes": json_rows }),
    )?;
    let mut text = String::from("cube  U D N E S W  corners\n");
    for c in &json_rows {
        let faces: Vec<String> = c.faces.iter().map(|f| f.to_string()).collect();
        let corners: Vec<String> = c.corners.iter().map(|v| v.to_string()).collect();
        writeln!(
            text,
            "{:<4}  {}  {}",
            c.name,
            faces.join(" "),
            corners.join(" ")
        )?;
    }
    r.text = text;
    r.csv = to_csv(&csv_rows)?;
    r.files.push(("cubes.csv".into(), r.csv.clone()));
    if ctx.check {
        r.checked = true;
        let problems = if json_rows.len() == 30 {
            Vec::new()
        } else {
            vec![format!("{} cubes, expected 30", json_rows.len())]
        };
        r.status = Status::from_problems(problems);
    }
    Ok(r)
}

// ---- solve ----

#[derive(Debug, Serialize)]
struct SolvePayload {
    target: CubeName,
    cubes: Vec<CubeName>,
    solution_number: u32,
    permanent: u64,
    prime_scan: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    interior_matching_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    arrangements: Option<Vec<Vec<PlacementRecord>>>,
}

#[derive(Debug, Serialize)]
struct SolveCsvRow {
    target: String,
    cubes: String,
    solution_number: u32,
    permanent: u64,
    prime_scan: u64,
    interior_matching_count: Option<usize>,
}

#[derive(Debug, Serialize)]
struct ArrangementCsvRow {
    arrangement: usize,
    corner: u16,
    x: i8,
    y: i8,
    z: i8,
    cube: String,
    up: u8,
    down: u8,
    north: u8,
    east: u8,
    south: u8,
    west: u8,
}

fn solve(_ctx: &Ctx, args: &SolveArgs) -> Result<Report> {
    let target = parse_target(&args.target)?;
    let collection = Collection::parse_list(&args.cubes)?;
    let methods = solve_checked(collection, target)?;
    let interior = args
        .interior
        .then(|| interior_matching_count(collection, target));
    let arrangements: Option<Vec<Vec<PlacementRecord>>> = args.arrangements.then(|| {
        enumerate_arrangements(collection, target)
            .iter()
            .map(|a| a.records())
            .collect()
    });

    let payload = SolvePayload {
        target: target.name(),
        cubes: collection.set().names(),
        solution_number: methods.formula,
        permanent: methods.permanent,
        prime_scan: methods.prime_scan,
        interior_matching_count: interior,
        arrangements: arrangements.clone(),
    };
    let params = json!({
        "target": target.name(),
        "cubes": collection.set().names(),
        "interior": args.interior,
        "arrangements": args.arrangements,
    });
    let mut r = base_report("solve", params, &payload)?;

    let mut text = format!(
        "target {}, collection {}\nsolution number {} (graph {}, permanent {}, prime scan {})\n",
        target.name(),
        collection,
        methods.formula,
        methods.formula,
        methods.permanent,
        methods.prime_scan
    );
    if let Some(i) = interior {
        writeln!(text, "interior matchings {i}")?;
    }
    let mut arrangement_rows = Vec::new();
    for (n, records) in arrangements.iter().flatten().enumerate() {
        let cells: Vec<String> = records
            .iter()
            .map(|p| format!("{}:{}", p.corner, p.cube))
            .collect();
        writeln!(text, "arrangement {}: {}", n + 1, cells.join(" "))?;
        for p in records {
            let sign = |b: u8| if b == 1 { 1 } else { -1 };
            arrangement_rows.push(ArrangementCsvRow {
                arrangement: n + 1,
                corner: p.corner.value(),
                x: sign(p.position[0]),
                y: sign(p.position[1]),
                z: sign(p.position[2]),
                cube: p.cube.to_string(),
                up: p.faces.U,
                down: p.faces.D,
                north: p.faces.N,
                east: p.faces.E,
                south: p.faces.S,
                west: p.faces.W,
            });
        }
    }
    r.text = text;
    r.csv = to_csv(&[SolveCsvRow {
        target: target.name().to_string(),
        cubes: names(collection.set()),
        solution_number: methods.formula,
        permanent: methods.permanent,
        prime_scan: methods.prime_scan,
        interior_matching_count: interior,
    }])?;
    r.files.push(("solve.csv".into(), r.csv.clone()));
    if args.arrangements {
        r.files
            .push(("arrangements.csv".into(), to_csv(&arrangement_rows)?));
    }
    Ok(r)
}

// ---- table 1 ----

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
struct Table1Row {
    solution_number: u32,
    collections: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
struct Table1Payload {
    target: CubeName,
    total: u64,
    rows: Vec<Table1Row>,
}

fn table1(ctx: &Ctx, target: &str) -> Result<Report> {
    let target = parse_target(target)?;
    let name = target.name().to_string();
    let (payload, _) = cached(ctx.cache, "table1", &name, || {
        let d = distribution_for_target(target);
        Ok(Table1Payload {
            target: target.name(),
            total: d.total,
            rows: d
                .counts
                .iter()
                .map(|(&s, &n)| Table1Row {
                    solution_number: s,
                    collections: n,
                })
                .collect(),
        })
    })?;

    let mut r = base_report("table1", json!({ "target": name }), &payload)?;
    let mut head = String::from("Solution Number    ");
    let mut body = String::from("Num. of Collections");
    for row in &payload.rows {
        let w = row.collections.to_string().len().max(2) + 2;
        write!(head, "{:>w$}", row.solution_number)?;
        write!(body, "{:>w$}", row.collections)?;
    }
    r.text = format!(
        "Target {}: {} collections of eight cubes can build it\n{head}\n{body}\n",
        payload.target, payload.total
    );
    r.csv = to_csv(&payload.rows)?;
    r.files.push(("table1.csv".into(), r.csv.clone()));
    if ctx.check {
        r.checked = true;
        let got: Vec<(u32, u64)> = payload
            .rows
            .iter()
            .map(|r| (r.solution_number, r.collections))
            .collect();
        let mut problems = expected::diff_histogram("table 1", &got, &expected::TABLE1);
        if payload.total != expected::TABLE1_TOTAL {
            problems.push(format!(
                "table 1: total {}, expected {}",
                payload.total,
                expected::TABLE1_TOTAL
            ));
        }
        let max = got.iter().find(|r| r.0 == 16).map_or(0, |r| r.1);
        if max != expected::MAX_COLLECTIONS {
            problems.push(format!(
                "{max} collections with 16 solutions, expected {}",
                expected::MAX_COLLECTIONS
            ));
        }
        r.status = Status::from_problems(problems);
    }
    Ok(r)
}

// ---- table 2 and the five-target sweep ----

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SweepCache {
    counts: Vec<(u32, u64)>,
    five_target_masks: Vec<u32>,
}

fn buildable_sweep(ctx: &Ctx) -> Result<SweepCache> {
    cached(ctx.cache, "buildable-sweep", "", || {
        let sweep = distribution_buildable()?;
        Ok(SweepCache {
            counts: sweep.distribution.counts.into_iter().collect(),
            five_target_masks: sweep
                .five_target_collections
                .iter()
                .map(|c| c.mask())
                .collect(),
        })
    })
    .map(|(v, _)| v)
}

#[derive(Debug, Serialize)]
struct Table2Row {
    buildable_targets: u32,
    collections: u64,
    proportion: String,
}

fn table2(ctx: &Ctx) -> Result<Report> {
    let sweep = buildable_sweep(ctx)?;
    let total: u64 = sweep.counts.iter().map(|r| r.1).sum();
    let rows: Vec<Table2Row> = sweep
        .counts
        .iter()
        .map(|&(k, n)| Table2Row {
            buildable_targets: k,
            collections: n,
            proportion: format!("{:.4}", n as f64 / total as f64),
        })
        .collect();
    let max = sweep.counts.iter().map(|r| r.0).max().unwrap_or(0);
    let mut r = base_report(
        "table2",
        json!({}),
        &json!({ "total": total, "max": max, "rows": rows }),
    )?;

    let mut text =
        format!("{total} collections of eight cubes\nbuildable  collections  proportion\n");
    for row in &rows {
        writeln!(
            text,
            "{:>9}  {:>11}  {:>10}",
            row.buildable_targets, row.collections, row.proportion
        )?;
    }
    r.text = text;
    r.csv = to_csv(&rows)?;
    r.files.push(("table2.csv".into(), r.csv.clone()));
    if ctx.check {
        r.checked = true;
        r.status = Status::from_problems(expected::diff_histogram(
            "table 2",
            &sweep.counts,
            &expected::TABLE2,
        ));
    }
    Ok(r)
}

#[derive(Debug, Serialize)]
struct FiveTargetRow {
    orientation: &'static str,
    first: String,
    second: String,
    collection: String,
    targets: String,
    solution_numbers: String,
}

fn line_letters(lines: &[u8], upper: bool) -> String {
    lines
        .iter()
        .map(|&l| {
            let c = (b'a' + l) as char;
            if upper {
                c.to_ascii_uppercase()
            } else {
                c
            }
        })
        .collect()
}

fn five_targets(ctx: &Ctx, verify: bool) -> Result<Report> {
    let records = five_target_records()?;
    let rows: Vec<FiveTargetRow> = records
        .iter()
        .map(|rec| {
            let (orientation, first_upper) = match rec.rule.orientation {
                RuleOrientation::ColumnsFirst => ("columns-first", false),
                RuleOrientation::RowsFirst => ("rows-first", true),
            };
            FiveTargetRow {
                orientation,
                first: line_letters(&rec.rule.first, first_upper),
                second: line_letters(&rec.rule.second, !first_upper),
                collection: names(rec.collection.set()),
                targets: rec
                    .targets
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                solution_numbers: rec
                    .solution_numbers
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            }
        })
        .collect();

    let mut problems = Vec::new();
    if verify {
        let sweep = buildable_sweep(ctx)?;
        let from_sweep: BTreeSet<u32> = sweep.five_target_masks.iter().copied().collect();
        let from_rules: BTreeSet<u32> = records.iter().map(|r| r.collection.mask()).collect();
        if from_rules != from_sweep {
            problems.push(format!(
                "rules give {} collections, the sweep {}; {} in common",
                from_rules.len(),
                from_sweep.len(),
                from_rules.intersection(&from_sweep).count()
            ));
        }
    }
    if ctx.check {
        let distinct: BTreeSet<u32> = records.iter().map(|r| r.collection.mask()).collect();
        if distinct.len() != expected::FIVE_TARGET_COLLECTIONS {
            problems.push(format!(
                "{} distinct collections, expected {}",
                distinct.len(),
                expected::FIVE_TARGET_COLLECTIONS
            ));
        }
    }

    let mut r = base_report("five-targets", json!({ "verify": verify }), &rows)?;
    let mut text = format!("{} collections build five targets\n", rows.len());
    if verify {
        writeln!(
            text,
            "verified against the full sweep: {}",
            if problems.is_empty() { "yes" } else { "no" }
        )?;
    }
    for row in &rows {
        writeln!(
            text,
            "{:<13} {} {}  {}  ->  {}  [{}]",
            row.orientation,
            row.first,
            row.second,
            row.collection,
            row.targets,
            row.solution_numbers
        )?;
    }
    r.text = text;
    r.csv = to_csv(&rows)?;
    r.files.push(("five_targets.csv".into(), r.csv.clone()));
    r.checked = ctx.check || verify;
    r.status = Status::from_problems(problems);
    Ok(r)
}

// ---- universal sets ----

#[derive(Debug, Serialize)]
struct TargetReport {
    target: CubeName,
    target_in_set: bool,
    unusable: Vec<CubeName>,
    collections: Vec<(String, u32)>,
}

#[derive(Debug, Serialize)]
struct UniversalSetReport {
    index: usize,
    generator: [CubeName; 2],
    cubes: Vec<CubeName>,
    buildable_count: usize,
    stabilizer_order: usize,
    stabilizer_cycle_types: BTreeMap<String, usize>,
    targets: Vec<TargetReport>,
}

#[derive(Debug, Serialize)]
struct UniversalCsvRow {
    index: usize,
    generator: String,
    cubes: String,
    buildable_count: usize,
    stabilizer_order: usize,
}

fn universal(ctx: &Ctx) -> Result<Report> {
    let candidates = conjecture_sets();
    let sets: Vec<CubeSet> = candidates.iter().map(|c| c.set).collect();
    let orbit = orbit_and_stabilizer(&sets);
    let mut reports = Vec::new();
    let mut problems = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let count = buildable_count(c.set)?;
        let analysis = per_target_analysis(c.set);
        for a in &analysis {
            let hist: Vec<(u32, usize)> = a.solution_histogram().into_iter().collect();
            let want: &[(u32, usize)] = if a.target_in_set {
                &[(2, 7), (8, 2)]
            } else {
                &[(4, 1)]
            };
            if hist != want {
                problems.push(format!(
                    "set {i}, target {}: solution numbers {hist:?}",
                    a.target
                ));
            }
        }
        if count != 30 {
            problems.push(format!("set {i} builds {count} targets"));
        }
        let (x, y) = c.generator_names();
        reports.push(UniversalSetReport {
            index: i,
            generator: [x, y],
            cubes: c.set.names(),
            buildable_count: count,
            stabilizer_order: orbit.stabilizers[i].order,
            stabilizer_cycle_types: orbit.stabilizers[i].cycle_types.clone(),
            targets: analysis
                .into_iter()
                .map(|a| TargetReport {
                    target: a.target,
                    target_in_set: a.target_in_set,
                    unusable: a.unusable,
                    collections: a
                        .collections
                        .iter()
                        .map(|s| (names(s.collection.set()), s.solution_number))
                        .collect(),
                })
                .collect(),
        });
    }
    if sets.len() != expected::UNIVERSAL_SETS {
        problems.push(format!(
            "{} sets, expected {}",
            sets.len(),
            expected::UNIVERSAL_SETS
        ));
    }
    if orbit.orbits.len() != 1 {
        problems.push(format!(
            "{} recoloring orbits, expected one",
            orbit.orbits.len()
        ));
    }

    let rows: Vec<UniversalCsvRow> = reports
        .iter()
        .map(|s| UniversalCsvRow {
            index: s.index,
            generator: format!("{} {}", s.generator[0], s.generator[1]),
            cubes: s
                .cubes
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            buildable_count: s.buildable_count,
            stabilizer_order: s.stabilizer_order,
        })
        .collect();
    let payload = json!({ "orbits": orbit.orbits, "sets": reports });
    let mut r = base_report("universal", json!({}), &payload)?;
    let mut text = format!(
        "{} candidate universal 12-sets, {} recoloring orbit(s)\n",
        rows.len(),
        orbit.orbits.len()
    );
    for row in &rows {
        writeln!(
            text,
            "{}  from {}: {}  builds {}  stabilizer order {}",
            row.index, row.generator, row.cubes, row.buildable_count, row.stabilizer_order
        )?;
    }
    r.text = text;
    r.csv = to_csv(&rows)?;
    if ctx.check {
        r.checked = true;
        r.status = Status::from_problems(problems);
    }
    Ok(r)
}

// ---- Figure 7 ----

#[derive(Debug, Serialize)]
struct Figure7Row {
    buildable_count: u32,
    subsets: u64,
}

#[derive(Debug, Serialize)]
struct Figure7CsvRow {
    k: usize,
    buildable_count: u32,
    subsets: u64,
}

fn figure7(ctx: &Ctx, k: Option<usize>, set_index: usize) -> Result<Report> {
    let candidates = conjecture_sets();
    let candidate = candidates
        .get(set_index)
        .ok_or_else(|| validation(format!("--set must be 0..={}", candidates.len() - 1)))?;
    let ks: Vec<usize> = match k {
        Some(k) if (8..=11).contains(&k) => vec![k],
        Some(k) => {
            return Err(validation(format!(
                "--k must be 8..=11 for a 12-set, got {k}"
            )))
        }
        None => (8..=11).collect(),
    };

    let mut tables = Vec::new();
    let mut problems = Vec::new();
    for &k in &ks {
        let d = subset_build_distribution(candidate.set, k)?;
        let rows: Vec<Figure7Row> = d
            .counts
            .iter()
            .map(|(&b, &n)| Figure7Row {
                buildable_count: b,
                subsets: n,
            })
            .collect();
        if let Some(want) = expected::figure7(k) {
            let got: Vec<(u32, u64)> = d.counts.iter().map(|(&a, &b)| (a, b)).collect();
            problems.extend(expected::diff_histogram(
                &format!("figure 7, k={k}"),
                &got,
                want,
            ));
        }
        tables.push((k, d.total, rows));
    }

    let payload = json!({
        "set": candidate.set.names(),
        "tables": tables.iter().map(|(k, total, rows)| json!({ "k": k, "subsets": total, "rows": rows })).collect::<Vec<_>>(),
    });
    let mut r = base_report("figure7", json!({ "k": k, "set": set_index }), &payload)?;
    let mut text = format!("subsets of {}\n", candidate.set);
    let mut all_rows = Vec::new();
    for (k, total, rows) in &tables {
        writeln!(text, "k={k} ({total} subsets)")?;
        for row in rows {
            writeln!(
                text,
                "  {:>2} targets: {}",
                row.buildable_count, row.subsets
            )?;
            all_rows.push(Figure7CsvRow {
                k: *k,
                buildable_count: row.buildable_count,
                subsets: row.subsets,
            });
        }
        r.files.push((format!("figure7_k{k}.csv"), to_csv(rows)?));
    }
    r.text = text;
    r.csv = to_csv(&all_rows)?;
    if ctx.check {
        r.checked = true;
        r.status = Status::from_problems(problems);
    }
    Ok(r)
}

// ---- Figure 6 sampling ----

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SampleStatsOut {
    k: usize,
    n: usize,
    seed: u64,
    mean: f64,
    std_dev: f64,
    min: usize,
    max: usize,
    histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SampleRow {
    index: u64,
    buildable: usize,
    set: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SampleRun {
    stats: SampleStatsOut,
    samples: Vec<SampleRow>,
}

#[derive(Debug, Serialize)]
struct SampleCsvRow {
    k: usize,
    n: usize,
    seed: u64,
    mean: String,
    std_dev: String,
    min: usize,
    max: usize,
}

fn sample(ctx: &Ctx, k: Option<usize>, n: usize, seed: u64) -> Result<Report> {
    if n == 0 {
        return Err(validation("--n must be at least 1"));
    }
    let ks: Vec<usize> = match k {
        Some(k) if (8..=30).contains(&k) => vec![k],
        Some(k) => return Err(validation(format!("--k must be 8..=30, got {k}"))),
        None => (9..=12).collect(),
    };
    let mut runs = Vec::new();
    for &k in &ks {
        let params = format!("k{k}-n{n}-seed{seed}");
        let (run, _) = cached(ctx.cache, "sample", &params, || {
            let samples = draw_samples(k, n, seed)?;
            let stats = summarize(k, seed, &samples);
            Ok(SampleRun {
                stats: SampleStatsOut {
                    k,
                    n,
                    seed,
                    mean: stats.mean,
                    std_dev: stats.std_dev,
                    min: stats.min,
                    max: stats.max,
                    histogram: stats.histogram,
                },
                samples: samples
                    .iter()
                    .map(|s| SampleRow {
                        index: s.index,
                        buildable: s.buildable,
                        set: names(s.set),
                    })
                    .collect(),
            })
        })?;
        runs.push(run);
    }

    let mut problems = Vec::new();
    for run in &runs {
        let s = &run.stats;
        if let Some((mean, std)) = expected::figure6(s.k) {
            let tol = expected::FIGURE6_TOLERANCE;
            if (s.mean - mean).abs() > tol || (s.std_dev - std).abs() > tol {
                problems.push(format!(
                    "figure 6, k={}: mean {:.3} std {:.3}, expected {mean} and {std} within {tol}",
                    s.k, s.mean, s.std_dev
                ));
            }
        }
        if s.k == 10 && s.min < 1 {
            problems.push("a 10-cube sample builds no target".into());
        }
    }

    let stats: Vec<&SampleStatsOut> = runs.iter().map(|r| &r.stats).collect();
    let mut r = base_report("sample", json!({ "k": k, "n": n, "seed": seed }), &stats)?;
    let mut text = format!("{n} random k-subsets, seed {seed}\n   k     mean    std  min  max\n");
    let mut rows = Vec::new();
    for run in &runs {
        let s = &run.stats;
        writeln!(
            text,
            "{:>4}  {:>7.3}  {:>5.3}  {:>3}  {:>3}",
            s.k, s.mean, s.std_dev, s.min, s.max
        )?;
        rows.push(SampleCsvRow {
            k: s.k,
            n: s.n,
            seed: s.seed,
            mean: format!("{:.4}", s.mean),
            std_dev: format!("{:.4}", s.std_dev),
            min: s.min,
            max: s.max,
        });
        let header = format!(
            "# k={},n={},seed={},mean={:.4},std_dev={:.4},min={},max={}\n",
            s.k, s.n, s.seed, s.mean, s.std_dev, s.min, s.max
        );
        r.files.push((
            format!("sample_k{}.csv", s.k),
            header + &to_csv(&run.samples)?,
        ));
    }
    r.text = text;
    r.csv = to_csv(&rows)?;
    if ctx.check {
        r.checked = true;
        r.status = Status::from_problems(problems);
    }
    Ok(r)
}

// ---- exact census over all k-subsets ----

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CensusRow {
    buildable_count: u32,
    sets: u64,
}

fn census(ctx: &Ctx, k: usize) -> Result<Report> {
    if !(8..=30).contains(&k) {
        return Err(validation(format!("--k must be 8..=30, got {k}")));
    }
    let (rows, _) = cached(ctx.cache, "census", &format!("k{k}"), || {
        Ok(census_all(k)?
            .counts
            .into_iter()
            .map(|(b, n)| CensusRow {
                buildable_count: b,
                sets: n,
            })
            .collect::<Vec<_>>())
    })?;
    let total: u64 = rows.iter().map(|r| r.sets).sum();
    let mean = rows
        .iter()
        .map(|r| r.buildable_count as f64 * r.sets as f64)
        .sum::<f64>()
        / total as f64;
    let var = rows
        .iter()
        .map(|r| (r.buildable_count as f64 - mean).powi(2) * r.sets as f64)
        .sum::<f64>()
        / total as f64;
    let min = rows.first().map_or(0, |r| r.buildable_count);
    let max = rows.last().map_or(0, |r| r.buildable_count);
    let payload = json!({
        "k": k,
        "sets": total,
        "mean": mean,
        "std_dev": var.sqrt(),
        "min": min,
        "max": max,
        "rows": rows,
    });
    let mut r = base_report("census", json!({ "k": k }), &payload)?;
    let mut text = format!(
        "all {total} {k}-subsets: mean {mean:.4}, std {:.4} (population), min {min}, max {max}\n",
        var.sqrt()
    );
    for row in &rows {
        writeln!(text, "  {:>2} targets: {}", row.buildable_count, row.sets)?;
    }
    r.text = text;
    r.csv = to_csv(&rows)?;
    r.files.push((format!("census_k{k}.csv"), r.csv.clone()));
    r.json_file = format!("census_k{k}.json");
    if ctx.check && k == 8 {
        r.checked = true;
        let got: Vec<(u32, u64)> = rows.iter().map(|r| (r.buildable_count, r.sets)).collect();
        r.status = Status::from_problems(expected::diff_histogram(
            "census k=8",
            &got,
            &expected::TABLE2,
        ));
    }
    Ok(r)
}

// ---- exhaustive search ----

#[derive(Debug, Serialize)]
struct FoundRow {
    set: String,
}

fn search(ctx: &Ctx, budget: Option<Budget>, checkpoint: Option<PathBuf>) -> Result<Report> {
    let checkpoint = checkpoint.or_else(|| ctx.cache.map(|c| c.dir().join("search.ckpt")));
    if let Some(dir) = checkpoint
        .as_ref()
        .and_then(|p| p.parent())
        .filter(|d| !d.as_os_str().is_empty())
    {
        std::fs::create_dir_all(dir)?;
    }
    let options = SearchOptions {
        budget: match budget {
            Some(Budget::Sets(n)) => Some(n),
            _ => None,
        },
        time_limit: match budget {
            Some(Budget::Time(d)) => Some(d),
            _ => None,
        },
        checkpoint: checkpoint.clone(),
        block: None,
    };
    let outcome = exhaustive_search(&options)?;
    let found: Vec<Vec<CubeName>> = outcome.state.found.iter().map(|s| s.names()).collect();
    let payload = json!({
        "next_rank": outcome.state.next_rank,
        "total": outcome.total,
        "scanned_this_run": outcome.scanned_this_run,
        "complete": outcome.complete,
        "checkpoint": checkpoint,
        "found": found,
    });
    let params = json!({
        "budget": budget.map(|b| match b {
            Budget::Sets(n) => n.to_string(),
            Budget::Time(d) => format!("{}s", d.as_secs()),
        }),
        "checkpoint": checkpoint,
    });
    let mut r = base_report("search", params, &payload)?;
    let mut text = format!(
        "scanned {} sets this run; {} of {} done\n{} universal set(s) found so far\n",
        outcome.scanned_this_run,
        outcome.state.next_rank,
        outcome.total,
        found.len()
    );
    for s in &outcome.state.found {
        writeln!(text, "  {s}")?;
    }
    r.text = text;
    let rows: Vec<FoundRow> = outcome
        .state
        .found
        .iter()
        .map(|s| FoundRow { set: names(*s) })
        .collect();
    r.csv = to_csv(&rows)?;
    if !outcome.complete {
        r.status = Status::Incomplete(match &checkpoint {
            Some(p) => format!(
                "budget exhausted; rerun with --checkpoint {} to continue",
                p.display()
            ),
            None => "budget exhausted; pass --checkpoint to make the scan resumable".into(),
        });
    } else if ctx.check {
        r.checked = true;
        let mut want: Vec<CubeSet> = conjecture_sets().iter().map(|c| c.set).collect();
        want.sort();
        let mut got = outcome.state.found.clone();
        got.sort();
        if got != want {
            r.status = Status::Mismatch(vec![format!(
                "found {} universal sets, expected the ten conjectured",
                got.len()
            )]);
        }
    }
    Ok(r)
}
