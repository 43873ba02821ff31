use std::collections::BTreeMap;

use polycover::covers;
use polycover::dot::{self, DotKind};
use polycover::extend::{self, LiftingMode, Path};
use polycover::io::{IndexDoc, MetricMorphismDoc, MorphismDoc, PointDoc, PosetDoc};
use polycover::metric::{self, Point};
use polycover::subdivision::{self, Face, SimplicialComplex};
use polycover::{fixtures, generate, IndexMap, Limits, PosetMorphism, Rational, Result, UpSet};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::*;
use crate::input;
use crate::report::{to_value, RunReport};

fn limits(oracle_limit: Option<usize>) -> Limits {
    let base = Limits::default();
    match oracle_limit {
        Some(n) => base.with_oracle_elements(n),
        None => base,
    }
}

fn values<T: serde::Serialize>(items: &[T]) -> Vec<Value> {
    items.iter().map(to_value).collect()
}

pub fn name(command: &Command) -> &'static str {
    match command {
        Command::Poset(PosetCmd::Validate(_)) => "poset validate",
        Command::Poset(PosetCmd::Stats(_)) => "poset stats",
        Command::Poset(PosetCmd::Upsets { .. }) => "poset upsets",
        Command::Morphism(MorphismCmd::Check(_)) => "morphism check",
        Command::Cover(CoverCmd::Balanced(_)) => "cover balanced",
        Command::Cover(CoverCmd::Ibc(_)) => "cover ibc",
        Command::Cover(CoverCmd::IbcOracle { .. }) => "cover ibc-oracle",
        Command::Cover(CoverCmd::Degree(_)) => "cover degree",
        Command::Cover(CoverCmd::Search { .. }) => "cover search",
        Command::Extend(_) => "extend",
        Command::Lift(LiftCmd::Up(_)) => "lift up",
        Command::Lift(LiftCmd::Path(_)) => "lift path",
        Command::Connect(ConnectCmd::Codimk { .. }) => "connect codimk",
        Command::Connect(ConnectCmd::Strong(_)) => "connect strong",
        Command::Connect(ConnectCmd::Lifting { .. }) => "connect lifting",
        Command::Subdivide(SubdivideCmd::Bcs { .. }) => "subdivide bcs",
        Command::Subdivide(SubdivideCmd::Stellar { .. }) => "subdivide stellar",
        Command::Graph(GraphCmd::Refine(_)) => "graph refine",
        Command::Graph(GraphCmd::Sample { .. }) => "graph sample",
        Command::Graph(GraphCmd::Poset(_)) => "graph poset",
        Command::Export(ExportCmd::Dot { .. }) => "export dot",
        Command::Fixtures(FixturesCmd::List) => "fixtures list",
        Command::Fixtures(FixturesCmd::Run) => "fixtures run",
    }
}

pub fn run(command: Command) -> Result<RunReport> {
    match command {
        Command::Poset(cmd) => poset(cmd),
        Command::Morphism(MorphismCmd::Check(m)) => morphism_check(&m.morphism),
        Command::Cover(cmd) => cover(cmd),
        Command::Extend(args) => extend_cmd(args),
        Command::Lift(cmd) => lift(cmd),
        Command::Connect(cmd) => connect(cmd),
        Command::Subdivide(cmd) => subdivide(cmd),
        Command::Graph(cmd) => graph(cmd),
        Command::Export(ExportCmd::Dot { poset, morphism, kind }) => export_dot(poset, morphism, kind),
        Command::Fixtures(cmd) => fixtures_cmd(cmd),
    }
}

fn poset(cmd: PosetCmd) -> Result<RunReport> {
    match cmd {
        PosetCmd::Validate(input) => {
            let p = input::poset(&input.poset)?;
            let output = json!({
                "elements": p.len(),
                "covers": p.cover_count(),
                "graded": p.is_graded(),
            });
            Ok(RunReport::new("poset validate", output))
        }
        PosetCmd::Stats(input) => {
            let p = input::poset(&input.poset)?;
            let mut output = json!({
                "elements": p.len(),
                "covers": p.cover_count(),
                "minimal": p.names_of(&p.minimal()),
                "maximal": p.names_of(&p.maximal()),
                "connected": p.is_connected(),
                "graded": p.is_graded(),
            });
            if let Ok(rank) = p.rank_function() {
                let ranks: BTreeMap<&str, usize> = p.elements().map(|a| (p.name(a), rank.rank(a))).collect();
                output["dimension"] = json!(rank.dim());
                output["pure"] = json!(rank.is_pure());
                output["rank"] = to_value(&ranks);
            }
            Ok(RunReport::new("poset stats", output))
        }
        PosetCmd::Upsets { input, connected, oracle_limit } => {
            let p = input::poset(&input.poset)?;
            let ups = p.up_sets(connected, limits(oracle_limit).oracle_elements)?;
            let listed: Vec<Vec<String>> = ups.iter().map(|u| p.names_of(u.iter())).collect();
            let output = json!({ "count": ups.len(), "up_sets": listed });
            Ok(RunReport::new("poset upsets", output))
        }
    }
}

fn morphism_check(reference: &str) -> Result<RunReport> {
    let phi = input::morphism(reference)?;
    let comb = phi.combinatorial_check();
    let open = phi.openness_check();
    let output = json!({
        "monotone": true,
        "combinatorial": comb.combinatorial,
        "open": open.open,
    });
    let mut witnesses = values(&comb.witnesses);
    witnesses.extend(values(&open.witnesses));
    Ok(RunReport::new("morphism check", output).verdict(comb.combinatorial && open.open, witnesses))
}

fn load_cover(input: &CoverInput) -> Result<(PosetMorphism, IndexMap)> {
    let phi = input::morphism(&input.morphism.morphism)?;
    let m = input::index(&input.index, &phi)?;
    Ok((phi, m))
}

fn ibc_report(command: &str, report: covers::IbcReport) -> RunReport {
    let mut witnesses: Vec<Value> = report
        .branch_locus
        .offending
        .iter()
        .map(|(target, source)| json!({ "maximal_target": target, "non_maximal_source": source }))
        .collect();
    witnesses.extend(values(&report.violations));
    let output = json!({
        "ibc": report.ibc,
        "branch_locus": report.branch_locus.branch_locus,
        "open_sets": report.open_sets,
    });
    RunReport::new(command, output).verdict(report.ibc, witnesses)
}

fn cover(cmd: CoverCmd) -> Result<RunReport> {
    match cmd {
        CoverCmd::Balanced(input) => {
            let (phi, m) = load_cover(&input)?;
            let report = covers::balance_check(&phi, &m);
            let output = json!({ "balanced": report.balanced });
            Ok(RunReport::new("cover balanced", output).verdict(report.balanced, values(&report.violations)))
        }
        CoverCmd::Ibc(input) => {
            let (phi, m) = load_cover(&input)?;
            Ok(ibc_report("cover ibc", covers::ibc_check(&phi, &m)?))
        }
        CoverCmd::IbcOracle { input, oracle_limit } => {
            let (phi, m) = load_cover(&input)?;
            let report = covers::ibc_oracle(&phi, &m, limits(oracle_limit).oracle_elements)?;
            Ok(ibc_report("cover ibc-oracle", report))
        }
        CoverCmd::Degree(input) => {
            let (phi, m) = load_cover(&input)?;
            let report = covers::global_degree(&phi, &m)?;
            let witnesses = if report.constant {
                Vec::new()
            } else {
                vec![to_value(&report.per_target_value)]
            };
            let output = json!({ "degree": report.degree, "per_target_value": report.per_target_value });
            Ok(RunReport::new("cover degree", output).verdict(report.constant, witnesses))
        }
        CoverCmd::Search { morphism, bound, oracle_limit } => {
            let phi = input::morphism(&morphism.morphism)?;
            let found = covers::search_balanced(&phi, bound, &limits(oracle_limit))?;
            let output = json!({
                "bound": bound,
                "found": found.as_ref().map(|m| IndexDoc::of(m, phi.source())),
            });
            let witness = json!({ "bound": bound, "reason": "no balanced index map within the bound" });
            Ok(RunReport::new("cover search", output).verdict(found.is_some(), vec![witness]))
        }
    }
}

fn extend_cmd(args: ExtendArgs) -> Result<RunReport> {
    let (phi, m) = load_cover(&args.input)?;
    let src = phi.source();
    let w = match &args.upset {
        Some(list) => src.up_set(src.ids(input::names(list))?.iter()),
        None => UpSet::full(src),
    };
    let report = extend::extend_balanced(&phi, &m, &w)?;
    let mut witnesses = values(&report.conflicts);
    witnesses.extend(report.unconstrained.iter().map(|e| json!({ "unconstrained": e })));
    witnesses.extend(values(&report.blocked));
    let output = json!({
        "mode": report.mode.to_string(),
        "complete": report.is_complete(),
        "values": report.extended.named(src),
        "steps": values(&report.steps),
    });
    Ok(RunReport::new("extend", output).verdict(report.is_complete(), witnesses))
}

fn lift(cmd: LiftCmd) -> Result<RunReport> {
    let (name, args) = match cmd {
        LiftCmd::Up(args) => ("lift up", args),
        LiftCmd::Path(args) => ("lift path", args),
    };
    let (phi, m) = load_cover(&args.input)?;
    let alpha = phi.source().id(&args.from)?;
    let lifted = if name == "lift up" {
        let steps: Vec<usize> = input::names(&args.path).iter().map(|n| phi.target().id(n)).collect::<Result<_>>()?;
        extend::lift_upward_path(&phi, &m, alpha, &steps)?
    } else {
        let path = Path::parse(phi.target(), &args.path)?;
        extend::lift_path(&phi, &m, alpha, &path)?
    };
    let output = json!({ "path": input::names(&args.path), "lift": lifted.names(phi.source()) });
    Ok(RunReport::new(name, output))
}

fn connect(cmd: ConnectCmd) -> Result<RunReport> {
    match cmd {
        ConnectCmd::Codimk { input, k } => {
            let p = input::poset(&input.poset)?;
            let report = p.codim_connectivity(k)?;
            let witnesses = vec![json!({ "components": report.components })];
            Ok(RunReport::new("connect codimk", to_value(&report)).verdict(report.connected, witnesses))
        }
        ConnectCmd::Strong(input) => {
            let p = input::poset(&input.poset)?;
            let report = p.strong_connectivity()?;
            let witnesses = match &report.witness {
                Some(w) => vec![to_value(w)],
                None => {
                    let parts: Vec<Vec<String>> = p.components().iter().map(|c| p.names_of(c)).collect();
                    vec![json!({ "components": parts })]
                }
            };
            let output = json!({ "connected": report.connected, "strongly_connected": report.strongly_connected });
            Ok(RunReport::new("connect strong", output).verdict(report.strongly_connected, witnesses))
        }
        ConnectCmd::Lifting { input, k } => {
            let (phi, m) = load_cover(&input)?;
            let mode = k.map_or(LiftingMode::OneFibre, LiftingMode::Codim);
            let report = extend::connectivity_lifting(&phi, &m, mode)?;
            let witnesses = vec![json!({ "components": report.components })];
            let holds = report.conclusion_holds;
            Ok(RunReport::new("connect lifting", to_value(&report)).verdict(holds, witnesses))
        }
    }
}

fn face(list: &str) -> Face {
    input::names(list).into_iter().collect()
}

fn subdivide(cmd: SubdivideCmd) -> Result<RunReport> {
    match cmd {
        SubdivideCmd::Bcs { poset, morphism, limit } => {
            let limit = limit.unwrap_or(Limits::default().chains);
            if let Some(reference) = morphism {
                let phi = input::morphism(&reference)?;
                let bcs = subdivision::bcs_morphism(&phi, limit)?;
                let comb = bcs.morphism.combinatorial_check();
                let output = json!({
                    "source_chains": bcs.source.len(),
                    "target_chains": bcs.target.len(),
                    "combinatorial": comb.combinatorial,
                    "morphism": MorphismDoc::of(&bcs.morphism),
                });
                Ok(RunReport::new("subdivide bcs", output).verdict(comb.combinatorial, values(&comb.witnesses)))
            } else {
                let p = input::poset(poset.as_deref().expect("clap requires an object"))?;
                let chains = subdivision::chain_poset(&p, limit)?;
                let output = json!({
                    "chains": chains.len(),
                    "graded": chains.poset().is_graded(),
                    "poset": PosetDoc::of(chains.poset()),
                });
                Ok(RunReport::new("subdivide bcs", output))
            }
        }
        SubdivideCmd::Stellar { complex, simplex, face: sigma, vertex } => {
            let k = match (complex, simplex) {
                (Some(path), _) => input::complex(&path)?,
                (None, Some(list)) => SimplicialComplex::simplex(input::names(&list))?,
                (None, None) => unreachable!("clap requires an object"),
            };
            let result = k.stellar_subdivide(&face(&sigma), &vertex)?;
            let names = |faces: &[Face]| faces.iter().map(subdivision::face_name).collect::<Vec<_>>();
            let output = json!({
                "faces_before": k.len(),
                "faces_after": result.complex.len(),
                "added_by_dim": result.added_by_dim(),
                "removed": names(&result.removed),
                "added": names(&result.added),
                "f_vector": result.complex.f_vector(),
            });
            Ok(RunReport::new("subdivide stellar", output))
        }
    }
}

fn graph(cmd: GraphCmd) -> Result<RunReport> {
    match cmd {
        GraphCmd::Refine(input) => {
            let phi = input::metric(&input.morphism)?;
            let refined = metric::refine_to_combinatorial(&phi)?;
            let output = json!({
                "new_target_vertices": refined.new_target_vertices,
                "new_source_vertices": refined.new_source_vertices,
                "combinatorial": true,
                "morphism": MetricMorphismDoc::of(&refined.morphism),
            });
            Ok(RunReport::new("graph refine", output))
        }
        GraphCmd::Sample { input, point, refine, samples, seed } => {
            let mut phi = input::metric(&input.morphism)?;
            if refine {
                phi = metric::refine_to_combinatorial(&phi)?.morphism;
            }
            let points: Vec<Point<Rational>> = match &point {
                Some(text) => vec![PointDoc::parse(text).build()?],
                None => {
                    let mut rng = generate::rng(seed);
                    (0..samples).map(|_| metric::random_point(phi.target(), 12, &mut rng)).collect()
                }
            };
            let results = points.iter().map(|y| metric::sample_fibre(&phi, y)).collect::<Result<Vec<_>>>()?;
            let mismatches: Vec<Value> = results.iter().filter(|s| !s.matches).map(to_value).collect();
            let output = json!({
                "refined": refine,
                "samples": results.len(),
                "mismatches": mismatches.len(),
                "results": values(&results),
            });
            Ok(RunReport::new("graph sample", output).verdict(mismatches.is_empty(), mismatches))
        }
        GraphCmd::Poset(input) => {
            let phi = input::metric(&input.morphism)?.face_poset_morphism();
            let comb = phi.combinatorial_check();
            let output = json!({ "combinatorial": comb.combinatorial, "morphism": MorphismDoc::of(&phi) });
            Ok(RunReport::new("graph poset", output).verdict(comb.combinatorial, values(&comb.witnesses)))
        }
    }
}

fn export_dot(poset: Option<String>, morphism: Option<String>, kind: DotKindArg) -> Result<RunReport> {
    let kind = match kind {
        DotKindArg::Comparability => DotKind::Comparability,
        DotKindArg::Covering => DotKind::Covering,
        DotKindArg::Hasse => DotKind::Hasse,
    };
    let text = match (morphism, poset) {
        (Some(m), _) => dot::morphism_dot(&input::morphism(&m)?, kind),
        (None, Some(p)) => dot::poset_dot(&input::poset(&p)?, kind),
        (None, None) => unreachable!("clap requires an object"),
    };
    Ok(RunReport::new("export dot", json!({ "dot": text })).with_text(text))
}

/// Property summary of one bundled morphism and its index map, if any.
fn summarize(name: &str) -> Result<Value> {
    let phi = fixtures::morphism(name).expect("catalog name");
    let mut out = json!({
        "source": phi.source().len(),
        "target": phi.target().len(),
        "combinatorial": phi.is_combinatorial(),
        "open": phi.is_open(),
    });
    if let Some(m) = fixtures::index_map(&format!("{name}-M")) {
        out["balanced"] = json!(covers::is_balanced(&phi, &m));
        if m.is_total(phi.source()) {
            out["ibc"] = json!(covers::ibc_check(&phi, &m)?.ibc);
            out["degree"] = json!(covers::global_degree(&phi, &m)?.degree);
        } else if let Ok(report) = extend::extend_balanced(&phi, &m, &UpSet::full(phi.source())) {
            out["extension_conflicts"] = json!(report.conflicts.len());
        }
    }
    Ok(out)
}

fn fixtures_cmd(cmd: FixturesCmd) -> Result<RunReport> {
    match cmd {
        FixturesCmd::List => {
            let output = json!({
                "morphisms": fixtures::MORPHISMS,
                "index_maps": fixtures::INDEX_MAPS,
                "metric_morphisms": input::METRIC_FIXTURES,
            });
            Ok(RunReport::new("fixtures list", output))
        }
        FixturesCmd::Run => {
            let rows: Vec<(String, Value)> = fixtures::MORPHISMS
                .par_iter()
                .map(|&name| summarize(name).map(|v| (name.to_string(), v)))
                .collect::<Result<_>>()?;
            let output: BTreeMap<String, Value> = rows.into_iter().collect();
            Ok(RunReport::new("fixtures run", to_value(&output)))
        }
    }
}
