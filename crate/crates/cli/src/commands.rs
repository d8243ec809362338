use kspectra::datasets::bundled_dataset;
use kspectra::metrics::{
    correlation_report, coreness_centrality, cycle_counts, degree_centrality, eigenvector_centrality,
    Measure,
};
use kspectra::spectra::SUPPORT_THRESHOLD;
use kspectra::{
    connected_components, peel, read_graph, spectral_radius_k, spectral_support, DropCounts, Graph,
    GraphFormat, SpectralConfig, SpectralMode, SpectralResult,
};
use serde_json::Value;

use crate::config::{Command, FormatArg, InputArgs, RunConfig, SpectralArgs};
use crate::report::{
    correlation_matrix, label_map, AnalysisReport, CentralityPayload, CentralityRow, ComparePayload, ComponentReport,
    ConfigEcho, CorePayload, CyclesPayload, GraphSummary, Payload, SpectralPayload, NO_CORE_MESSAGE,
    SCHEMA_VERSION,
};
use crate::{selfcheck, CliError};

struct Loaded {
    graph: Graph,
    drops: DropCounts,
    source: String,
}

fn load(input: &InputArgs) -> Result<Loaded, CliError> {
    let bundled = |name: &str| -> Result<Loaded, CliError> {
        Ok(Loaded {
            graph: bundled_dataset(name)?,
            drops: DropCounts::default(),
            source: name.to_string(),
        })
    };
    if let Some(name) = &input.dataset {
        return bundled(name);
    }
    let path = input.input.as_deref().expect("clap requires --input or --dataset");
    if !path.exists() {
        if let Some(name) = path.to_str().filter(|s| bundled_dataset(s).is_ok()) {
            return bundled(name);
        }
    }
    let format = match input.format {
        FormatArg::Auto => None,
        FormatArg::Edgelist => Some(GraphFormat::EdgeList),
        FormatArg::Mtx => Some(GraphFormat::MatrixMarket),
    };
    let parsed = read_graph(path, format, input.indexing.into())?;
    Ok(Loaded {
        graph: parsed.graph,
        drops: parsed.drops,
        source: path.display().to_string(),
    })
}

fn summarize(l: &Loaded, warnings: &mut Vec<String>) -> GraphSummary {
    if !l.drops.is_clean() {
        warnings.push(format!(
            "dropped {} self-loop(s) and {} duplicate edge(s) while reading {}",
            l.drops.self_loops, l.drops.duplicates, l.source
        ));
    }
    GraphSummary {
        source: l.source.clone(),
        n: l.graph.n(),
        m: l.graph.m(),
        components: connected_components(&l.graph).len(),
        dropped_self_loops: l.drops.self_loops,
        dropped_duplicates: l.drops.duplicates,
    }
}

fn echo_input(input: &InputArgs) -> ConfigEcho {
    ConfigEcho {
        input: input
            .dataset
            .clone()
            .or_else(|| input.input.as_deref().map(|p| p.display().to_string())),
        format: match input.format {
            FormatArg::Auto => None,
            FormatArg::Edgelist => Some("edgelist".into()),
            FormatArg::Mtx => Some("mtx".into()),
        },
        ..ConfigEcho::default()
    }
}

fn echo_spectral(echo: &mut ConfigEcho, cfg: &SpectralConfig) {
    echo.k = Some(cfg.k);
    echo.mode = Some(cfg.mode);
    echo.tol = Some(cfg.tol);
    echo.max_iters = Some(cfg.max_iters);
    echo.norm = Some(cfg.norm);
}

fn spectral_config(args: &SpectralArgs, k: u32) -> Result<SpectralConfig, CliError> {
    let cfg = args.config(k as usize);
    cfg.validate()?;
    Ok(cfg)
}

/// Runs the spectral iteration and appends convergence and consistency
/// warnings.
fn spectral_checked(g: &Graph, cfg: &SpectralConfig, warnings: &mut Vec<String>) -> Result<SpectralResult, CliError> {
    let res = spectral_radius_k(g, cfg)?;
    if !res.converged {
        let (lo, hi) = res.rho_bracket();
        warnings.push(format!(
            "power iteration stopped after {} iteration(s) without converging; rho_{} lies in [{lo}, {hi}]",
            res.iterations, cfg.k
        ));
    }
    let core = peel(g, cfg.k)?;
    let exists = res.rho >= 1.0 - kspectra::spectra::EXISTENCE_EPS;
    if exists != core.core_exists() {
        warnings.push(format!(
            "spectral test says the {}-core is {} but peeling finds {} vertices",
            cfg.k,
            if exists { "nonempty" } else { "empty" },
            core.core.len()
        ));
    }
    if cfg.mode == SpectralMode::NaiveWholeGraph {
        let reference = spectral_radius_k(g, &cfg.clone().with_mode(SpectralMode::PerComponent))?;
        if (reference.rho - res.rho).abs() > 1e-6 * reference.rho.max(1.0) {
            warnings.push(format!(
                "naive whole-graph iteration gives rho_{} = {} but the per-component value is {}",
                cfg.k, res.rho, reference.rho
            ));
        }
    }
    Ok(res)
}

pub fn run(cfg: &RunConfig) -> Result<AnalysisReport, CliError> {
    let mut warnings = Vec::new();
    let (config, graph, result) = match &cfg.command {
        Command::Core { input, k } => {
            let loaded = load(input)?;
            let summary = summarize(&loaded, &mut warnings);
            let mut echo = echo_input(input);
            echo.k = Some(*k as usize);
            (echo, Some(summary), Payload::Core(core(&loaded.graph, *k as usize)?))
        }
        Command::Spectral { input, k, spectral: args } => {
            let sc = spectral_config(args, *k)?;
            let loaded = load(input)?;
            let summary = summarize(&loaded, &mut warnings);
            let mut echo = echo_input(input);
            echo_spectral(&mut echo, &sc);
            let payload = spectral(&loaded.graph, &sc, &mut warnings)?;
            (echo, Some(summary), Payload::Spectral(payload))
        }
        Command::Centrality { input, k, spectral: args } => {
            let sc = spectral_config(args, *k)?;
            let loaded = load(input)?;
            let summary = summarize(&loaded, &mut warnings);
            let mut echo = echo_input(input);
            echo_spectral(&mut echo, &sc);
            let payload = centrality(&loaded.graph, &sc, &mut warnings)?;
            (echo, Some(summary), Payload::Centrality(payload))
        }
        Command::Cycles { input, max_len } => {
            let loaded = load(input)?;
            let summary = summarize(&loaded, &mut warnings);
            let mut echo = echo_input(input);
            echo.max_len = Some(*max_len as usize);
            (echo, Some(summary), Payload::Cycles(cycles(&loaded.graph, *max_len as usize)?))
        }
        Command::Compare { input, k, measures, spectral: args } => {
            let sc = spectral_config(args, *k)?;
            let measures = parse_measures(measures, sc.k)?;
            let loaded = load(input)?;
            let summary = summarize(&loaded, &mut warnings);
            let mut echo = echo_input(input);
            echo_spectral(&mut echo, &sc);
            echo.measures = Some(measures.iter().map(Measure::to_string).collect());
            let payload = compare(&loaded.graph, &sc, &measures, &mut warnings)?;
            (echo, Some(summary), Payload::Compare(payload))
        }
        Command::SelfCheck { seed, graphs } => {
            let echo = ConfigEcho {
                seed: Some(*seed),
                ..ConfigEcho::default()
            };
            (echo, None, Payload::SelfCheck(selfcheck::run_checks(*seed, *graphs)?))
        }
    };
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        tool: "kspectra",
        version: env!("CARGO_PKG_VERSION"),
        command: cfg.command.name(),
        config,
        graph,
        warnings,
        result,
    })
}

fn labels_of(g: &Graph, ids: impl IntoIterator<Item = usize>) -> Vec<u64> {
    ids.into_iter().map(|v| g.label(v)).collect()
}

fn core(g: &Graph, k: usize) -> Result<CorePayload, CliError> {
    let res = peel(g, k)?;
    let wave_of = res.wave_of(g.n());
    Ok(CorePayload {
        k,
        core_exists: res.core_exists(),
        message: (!res.core_exists()).then_some(NO_CORE_MESSAGE),
        core_size: res.core.len(),
        core_is_connected: res.core_is_connected,
        wave_sizes: res.waves.iter().map(|w| w.len()).collect(),
        core: labels_of(g, res.core.iter()),
        waves: res.waves.iter().map(|w| labels_of(g, w.iter())).collect(),
        membership: (0..g.n()).map(|v| (g.label(v), wave_of[v])).collect(),
    })
}

fn spectral(g: &Graph, cfg: &SpectralConfig, warnings: &mut Vec<String>) -> Result<SpectralPayload, CliError> {
    let res = spectral_checked(g, cfg, warnings)?;
    let support = spectral_support(&res, SUPPORT_THRESHOLD)?;
    let core_exists = res.rho >= 1.0 - kspectra::spectra::EXISTENCE_EPS;
    let components = res
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| ComponentReport {
            vertices: labels_of(g, c.vertices.iter()),
            rho: c.rho,
            lower: c.lower,
            upper: c.upper,
            iterations: c.iterations,
            converged: c.converged,
            winner: res.winners.contains(&i),
            vector: label_map(labels_of(g, c.vertices.iter()), c.vector.iter().copied()),
        })
        .collect();
    Ok(SpectralPayload {
        k: cfg.k,
        rho: res.rho,
        core_exists,
        message: (!core_exists).then_some(NO_CORE_MESSAGE),
        converged: res.converged,
        iterations: res.iterations,
        lower: res.lower,
        upper: res.upper,
        support: labels_of(g, support.iter()),
        components,
        vector: label_map(g.labels().iter().copied(), res.vector.iter().copied()),
        rows: g.labels().iter().copied().zip(res.vector.iter().copied()).collect(),
    })
}

fn eigenvector(g: &Graph, cfg: &SpectralConfig, warnings: &mut Vec<String>) -> Result<Vec<f64>, CliError> {
    let ec = eigenvector_centrality(g, cfg.tol, cfg.max_iters, cfg.norm)?;
    if !ec.converged {
        warnings.push(format!(
            "eigenvector centrality did not converge within {} iteration(s)",
            cfg.max_iters
        ));
    }
    Ok(ec.scores)
}

fn centrality(g: &Graph, cfg: &SpectralConfig, warnings: &mut Vec<String>) -> Result<CentralityPayload, CliError> {
    let dc = g.degrees();
    let cc = kspectra::coreness(g);
    let ec = eigenvector(g, cfg, warnings)?;
    let kec = spectral_checked(g, cfg, warnings)?;
    let no_core = !kec.has_core();
    let rows = (0..g.n())
        .map(|v| CentralityRow {
            vertex: g.label(v),
            dc: dc[v],
            cc: cc.get(v),
            ec: ec[v],
            kec: kec.vector[v],
        })
        .collect();
    Ok(CentralityPayload {
        k: cfg.k,
        rho: kec.rho,
        no_core,
        message: no_core.then_some(NO_CORE_MESSAGE),
        rows,
    })
}

fn cycles(g: &Graph, max_len: usize) -> Result<CyclesPayload, CliError> {
    let counts = cycle_counts(g, max_len)?;
    let lens = 3..=max_len;
    let cumulative: Vec<Vec<u64>> = lens.clone().map(|l| counts.cumulative(l)).collect();
    Ok(CyclesPayload {
        max_len,
        totals: lens
            .clone()
            .map(|l| (format!("c{l}"), Value::from(counts.total(l))))
            .collect(),
        columns: lens.map(|l| format!("c{l}")).collect(),
        rows: (0..g.n())
            .map(|v| (g.label(v), cumulative.iter().map(|col| col[v]).collect()))
            .collect(),
    })
}

/// `kec` without an order means the order given by `--k`.
fn parse_measures(list: &str, k: usize) -> Result<Vec<Measure>, CliError> {
    let mut out: Vec<Measure> = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let m = if item.eq_ignore_ascii_case("kec") {
            Measure::KOrder(k)
        } else {
            item.parse()?
        };
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.len() < 2 {
        return Err(kspectra::Error::Contract(format!("need at least two distinct measures, got `{list}`")).into());
    }
    Ok(out)
}

fn compare(
    g: &Graph,
    cfg: &SpectralConfig,
    measures: &[Measure],
    warnings: &mut Vec<String>,
) -> Result<ComparePayload, CliError> {
    let max_cycle = measures
        .iter()
        .filter_map(|m| match m {
            Measure::Cycles(l) => Some(*l),
            _ => None,
        })
        .max();
    let cycles = max_cycle.map(|l| cycle_counts(g, l)).transpose()?;
    let mut columns = Vec::with_capacity(measures.len());
    for &m in measures {
        let scores = match m {
            Measure::Degree => degree_centrality(g).scores,
            Measure::Coreness => coreness_centrality(g).scores,
            Measure::Eigenvector => eigenvector(g, cfg, warnings)?,
            Measure::KOrder(k) => {
                let kc = SpectralConfig { k, ..cfg.clone() };
                let res = spectral_checked(g, &kc, warnings)?;
                if !res.has_core() {
                    warnings.push(format!("{NO_CORE_MESSAGE} for k = {k}; kec{k} is identically zero"));
                }
                res.vector
            }
            Measure::Cycles(l) => cycles
                .as_ref()
                .expect("cycle counts computed")
                .cumulative(l)
                .into_iter()
                .map(|c| c as f64)
                .collect(),
        };
        columns.push((m.to_string(), scores));
    }
    let report = correlation_report(&columns)?;
    for p in report.pairs.iter().filter(|p| p.r_s.is_none()) {
        warnings.push(format!("r_s({}, {}) is undefined because one side is constant", p.a, p.b));
    }
    let names: Vec<String> = measures.iter().map(Measure::to_string).collect();
    Ok(ComparePayload {
        k: cfg.k,
        matrix: correlation_matrix(&names, &report.pairs),
        measures: names,
        pairs: report.pairs,
        vertices: g.labels().to_vec(),
        scores: columns
            .into_iter()
            .map(|(name, s)| (name, Value::from(s)))
            .collect(),
    })
}
