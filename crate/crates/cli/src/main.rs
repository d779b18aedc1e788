//! `symcap`: exact symplectic capacity computations from the command line.
//!
//! Exit status is 0 on success, 1 on input errors and 2 when a building has
//! violations or a capacity chain fails its internal checks.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::json;

use render::{strings, table, Rendered};
use symcap_core::building::{self, HolomorphicBuilding};
use symcap_core::capacity::{self, CapacityKind, CapacityReport};
use symcap_core::index::{self, CurveSetup};
use symcap_core::lch;
use symcap_core::reeb::{self, ReebOrbit, SpectrumQuery};
use symcap_core::{Ellipsoid, Error, ExtRational, Rational, ToricDomain};

const DEFAULT_MAX_ENUM: u128 = 1_000_000;

const SUPPORT_MATRIX: &str = "supported: spectrum/lch need an ellipsoid (ball or any 1-dimensional shape also works); \
capacity/chain need a convex or concave domain; see the README support matrix";

#[derive(Parser)]
#[command(name = "symcap", version, about = "Exact symplectic capacities of toric domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Reeb orbits of an ellipsoid boundary, sorted by action.
    Spectrum {
        domain_file: PathBuf,
        #[arg(long, conflicts_with = "max_count", required_unless_present = "max_count")]
        max_action: Option<Rational>,
        #[arg(long)]
        max_count: Option<usize>,
        /// Upper bound on the number of orbits enumerated.
        #[arg(long, env = "SYMCAP_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUM)]
        max_enum: u128,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// One capacity of a toric domain.
    Capacity {
        domain_file: PathBuf,
        #[arg(long)]
        kind: CapacityKind,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// The chain delta <= c_P <= c_L <= gtilde_k/k <= cgh_k/k <= delta(k+n-1)/k.
    Chain {
        domain_file: PathBuf,
        #[arg(long)]
        k_max: usize,
        #[arg(long, env = "SYMCAP_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUM)]
        max_enum: u128,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Fredholm index, virtual dimension and transversality verdicts.
    Index {
        setup_file: PathBuf,
        /// Overrides `tangency_k` from the file.
        #[arg(long)]
        tangency_k: Option<u32>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Linearized contact homology of an ellipsoid below an action cap.
    Lch {
        domain_file: PathBuf,
        #[arg(long)]
        action_cap: Rational,
        /// Also report the augmentation and g_k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, env = "SYMCAP_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUM)]
        max_enum: u128,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Holomorphic building checks.
    Building {
        #[command(subcommand)]
        action: BuildingAction,
    },
    /// Constants of the Lagrangian capacity estimate.
    Constants {
        #[arg(long)]
        a: Rational,
        #[arg(long)]
        eps: Rational,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Subcommand)]
enum BuildingAction {
    /// Validate a building file.
    Validate {
        building_file: PathBuf,
        /// Overrides the energy budget from the file.
        #[arg(long)]
        budget: Option<Rational>,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match &e {
            Error::UnsupportedDomain(_) | Error::Undecidable(_) => {
                format!("{e} ({SUPPORT_MATRIX})")
            }
            _ => e.to_string(),
        };
        let code = match e {
            Error::Inconsistent(_) | Error::AssertionFailure(_) => 2,
            _ => 1,
        };
        Failure { code, message }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type CmdResult = Result<(Rendered, u8), Failure>;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_ellipsoid(path: &Path) -> Result<Ellipsoid, Failure> {
    let domain: ToricDomain = read_json(path)?;
    domain.to_ellipsoid().ok_or_else(|| {
        input_error(format!(
            "{}: {} is not an ellipsoid ({SUPPORT_MATRIX})",
            path.display(),
            domain.kind_name()
        ))
    })
}

fn check_enum_limit(count: u128, limit: u128) -> Result<(), Failure> {
    if count > limit {
        return Err(input_error(format!(
            "request would enumerate {count} orbits, above the limit {limit} (raise SYMCAP_MAX_ENUM)"
        )));
    }
    Ok(())
}

fn ext(x: &ExtRational) -> String {
    x.to_string()
}

fn orbit_cells(o: &ReebOrbit) -> Vec<String> {
    vec![
        o.axis.to_string(),
        o.multiplicity.to_string(),
        o.action.to_string(),
        o.cz.to_string(),
        o.degenerate.to_string(),
        o.good.to_string(),
    ]
}

const ORBIT_HEADERS: [&str; 6] = ["axis", "multiplicity", "action", "cz", "degenerate", "good"];

fn spectrum(path: &Path, max_action: Option<Rational>, max_count: Option<usize>, limit: u128) -> CmdResult {
    let e = read_ellipsoid(path)?;
    let query = match (max_action, max_count) {
        (Some(cap), None) => {
            let q = SpectrumQuery::max_action(cap.clone())?;
            check_enum_limit(reeb::count_below(&e, &cap), limit)?;
            q
        }
        (None, Some(count)) => {
            check_enum_limit(count as u128, limit)?;
            SpectrumQuery::max_count(count)?
        }
        _ => return Err(input_error("give exactly one of --max-action and --max-count")),
    };
    let orbits = reeb::enumerate(&e, &query);
    let rows: Vec<Vec<String>> = orbits.iter().map(orbit_cells).collect();
    Ok((
        Rendered {
            table: table(&ORBIT_HEADERS, &rows),
            csv_headers: strings(&ORBIT_HEADERS),
            csv_rows: rows,
            json: json!({ "ellipsoid": e, "orbits": orbits }),
        },
        0,
    ))
}

fn report_value(r: &CapacityReport) -> String {
    let name = match r.k {
        Some(k) if r.kind.is_graded() => format!("{}_{k}", r.kind),
        _ => r.kind.to_string(),
    };
    if r.exact {
        format!("{name} = {} (exact)", ext(&r.lower))
    } else {
        format!("{name} in [{}, {}]", ext(&r.lower), ext(&r.upper))
    }
}

fn capacity_cmd(path: &Path, kind: CapacityKind, k: usize) -> CmdResult {
    let domain: ToricDomain = read_json(path)?;
    let r = capacity::capacity(&domain, kind, k)?;
    let mut text = format!("{}\n", report_value(&r));
    for h in &r.hypotheses {
        text.push_str(&format!("  hypothesis: {h}\n"));
    }
    if let Some(w) = &r.witness_orbit {
        text.push_str(&format!("  witness: {} (action {}, cz {})\n", w.label(), w.action, w.cz));
    }
    let row = vec![
        r.kind.to_string(),
        r.k.filter(|_| kind.is_graded()).map(|k| k.to_string()).unwrap_or_default(),
        ext(&r.lower),
        ext(&r.upper),
        r.exact.to_string(),
        r.hypotheses.join("; "),
        r.witness_orbit.as_ref().map(ReebOrbit::label).unwrap_or_default(),
    ];
    Ok((
        Rendered {
            table: text,
            csv_headers: strings(&["kind", "k", "lower", "upper", "exact", "hypotheses", "witness"]),
            csv_rows: vec![row],
            json: serde_json::to_value(&r).expect("report serializes"),
        },
        0,
    ))
}

fn chain(path: &Path, k_max: usize, limit: u128) -> CmdResult {
    let domain: ToricDomain = read_json(path)?;
    if domain.to_ellipsoid().is_some() {
        check_enum_limit(k_max as u128, limit)?;
    }
    let rep = match capacity::verify_squeeze(&domain, k_max) {
        Ok(rep) => rep,
        Err(Error::Inconsistent(msg)) => {
            return Ok((
                Rendered {
                    table: format!("CHAIN VIOLATED: {msg}\n"),
                    csv_headers: strings(&["status", "message"]),
                    csv_rows: vec![vec!["violated".into(), msg.clone()]],
                    json: json!({ "status": "violated", "message": msg }),
                },
                2,
            ))
        }
        Err(e) => return Err(e.into()),
    };
    let headers = ["k", "gtilde_k/k >=", "cgh_k/k low", "cgh_k/k high", "delta(k+n-1)/k", "gap"];
    let rows: Vec<Vec<String>> = rep
        .rows
        .iter()
        .map(|r| {
            vec![
                r.k.to_string(),
                r.gtilde_lower_over_k.to_string(),
                r.cgh_lower_over_k.to_string(),
                r.cgh_upper_over_k.to_string(),
                r.ncyl_over_k.to_string(),
                r.gap.to_string(),
            ]
        })
        .collect();
    let mut text = format!(
        "delta = {}\nc_P = {}\nc_L = {} ({})\n\n",
        rep.delta,
        rep.c_p,
        rep.c_l,
        rep.hypotheses.join("; ")
    );
    text.push_str(&table(&headers, &rows));
    text.push('\n');
    if rep.closed {
        text.push_str(&format!("c_L = {} (attained k={})\n", rep.c_l, rep.attained_k));
    } else {
        text.push_str(&format!(
            "c_L = {} (not attained for k <= {k_max}; best upper bound {} at k={})\n",
            rep.c_l, rep.infimum, rep.attained_k
        ));
    }
    Ok((
        Rendered {
            table: text,
            csv_headers: strings(&["k", "gtilde_lower_over_k", "cgh_lower_over_k", "cgh_upper_over_k", "ncyl_over_k", "gap"]),
            csv_rows: rows,
            json: serde_json::to_value(&rep).expect("report serializes"),
        },
        0,
    ))
}

fn verdict_str(v: &index::TransversalityVerdict) -> String {
    match (v.injective, v.surjective) {
        (true, true) => "injective and surjective".into(),
        (true, false) => "injective".into(),
        (false, true) => "surjective".into(),
        (false, false) => "inconclusive".into(),
    }
}

fn index_cmd(path: &Path, tangency_k: Option<u32>) -> CmdResult {
    let mut s: CurveSetup = read_json(path)?;
    if let Some(k) = tangency_k {
        s = s.with_tangency(k);
    }
    let ind = index::fredholm_index(&s);
    let vdim = index::virtual_dim_tangency(&s, s.tangency_k());
    let mut fields: Vec<(&str, String)> = vec![
        ("euler_characteristic", s.euler_characteristic().to_string()),
        ("fredholm_index", ind.to_string()),
        ("tangency_k", s.tangency_k().to_string()),
        ("virtual_dimension", vdim.to_string()),
    ];
    let mut extra = serde_json::Map::new();
    if s.n() == 1 {
        match index::adjusted_chern_rank1(ind, s.genus(), s.even_punctures()) {
            Ok(c1) => {
                let c1i = c1.to_i64().expect("adjusted Chern number is an integer");
                let v = index::wendl_criterion(ind, c1i);
                fields.push(("adjusted_c1", c1.to_string()));
                fields.push(("wendl", verdict_str(&v)));
                extra.insert("adjusted_c1".into(), json!(c1));
                extra.insert("wendl".into(), json!(v));
            }
            Err(e) => {
                fields.push(("adjusted_c1", format!("undefined: {e}")));
            }
        }
        if s.genus() == 0 && s.even_punctures() == 0 {
            let v = index::genus0_odd_criterion(ind);
            fields.push(("genus0_odd", verdict_str(&v)));
            extra.insert("genus0_odd".into(), json!(v));
        }
    }
    let rows: Vec<Vec<String>> =
        fields.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
    let mut j = json!({
        "setup": s,
        "euler_characteristic": s.euler_characteristic(),
        "fredholm_index": ind,
        "tangency_k": s.tangency_k(),
        "virtual_dimension": vdim,
    });
    j.as_object_mut().expect("object").extend(extra);
    Ok((
        Rendered {
            table: table(&["quantity", "value"], &rows),
            csv_headers: strings(&["quantity", "value"]),
            csv_rows: rows,
            json: j,
        },
        0,
    ))
}

fn lch_cmd(path: &Path, cap: Rational, k: Option<usize>, limit: u128) -> CmdResult {
    let e = read_ellipsoid(path)?;
    check_enum_limit(reeb::count_below(&e, &cap), limit)?;
    let t = lch::lch_table(&e, &cap);
    let mut rows = Vec::new();
    for (deg, orbits) in &t.generators_by_degree {
        for o in orbits {
            let mut row = vec![deg.to_string()];
            row.extend([o.label(), o.action.to_string(), o.good.to_string()]);
            rows.push(row);
        }
    }
    let headers = ["degree", "generator", "action", "good"];
    let mut text = format!("CC^{cap}({})\n", display_ellipsoid(&e));
    text.push_str(&table(&headers, &rows));
    text.push_str(&format!(
        "differential vanishes: {} (all degrees = {} mod 2, all orbits good: {})\n",
        t.certificate.differential_vanishes, t.certificate.parity, t.certificate.all_good
    ));
    let mut j = json!({
        "action_cap": cap,
        "ellipsoid": e,
        "generators_by_degree": t.generators_by_degree,
        "certificate": t.certificate,
    });
    if let Some(k) = k {
        let aug = lch::augmentation(&e, k)?;
        let g = lch::g_k_from_lch(&e, k)?;
        let count = aug.curve_count.map_or("unknown".into(), |c| c.to_string());
        let weighted = aug
            .marker_weighted_count
            .as_ref()
            .map_or("unknown".into(), ToString::to_string);
        text.push_str(&format!(
            "augmentation eps_{k}: witness {} (action {}), curve count {count}, with markers {weighted}, nonzero {}, hypothesis met {}\n  {}\n",
            aug.witness_orbit.label(),
            aug.witness_orbit.action,
            aug.value_nonzero,
            aug.hypothesis_met,
            aug.provenance
        ));
        text.push_str(&format!("g_{k} = {g}\n"));
        j["augmentation"] = json!(aug);
        j["g_k"] = json!(g);
    }
    Ok((
        Rendered {
            table: text,
            csv_headers: strings(&headers),
            csv_rows: rows,
            json: j,
        },
        0,
    ))
}

fn display_ellipsoid(e: &Ellipsoid) -> String {
    let axes: Vec<String> = e.axes().iter().map(ToString::to_string).collect();
    format!("E({})", axes.join(", "))
}

fn building_validate(path: &Path, budget: Option<Rational>) -> CmdResult {
    let mut f: HolomorphicBuilding = read_json(path)?;
    if let Some(b) = budget {
        f.energy_budget = Some(b);
    }
    let rep = building::validate_all(&f);
    let rows: Vec<Vec<String>> = rep
        .violations
        .iter()
        .map(|v| vec![v.code.to_string(), v.location.clone(), v.message.clone()])
        .collect();
    let mut text = format!(
        "levels {}, components {}, matched orbits {}, tree {}\nenergy total {} / budget {}",
        rep.num_levels,
        rep.num_components,
        rep.num_edges,
        rep.is_tree.map_or("unchecked".into(), |t| t.to_string()),
        rep.energy.total,
        rep.energy.budget
    );
    if let Some(t) = &rep.energy.telescoped {
        text.push_str(&format!(", A(top) - A(bottom) = {t}"));
    }
    text.push('\n');
    if rep.is_valid() {
        text.push_str("VALID\n");
    } else {
        text.push_str(&format!("{} violation(s)\n", rep.violations.len()));
        text.push_str(&table(&["code", "location", "message"], &rows));
    }
    let code = if rep.is_valid() { 0 } else { 2 };
    Ok((
        Rendered {
            table: text,
            csv_headers: strings(&["code", "location", "message"]),
            csv_rows: rows,
            json: serde_json::to_value(&rep).expect("report serializes"),
        },
        code,
    ))
}

fn constants_cmd(a: Rational, eps: Rational, k: u64) -> CmdResult {
    let c = capacity::cm_constants(&a, &eps, k)?;
    let verdict = if c.equality { "HOLDS (equality)" } else { "HOLDS (strict)" };
    let fields: Vec<(&str, String)> = vec![
        ("a", c.a.to_string()),
        ("eps", c.eps.to_string()),
        ("k", c.k.to_string()),
        ("s1", c.s1.to_string()),
        ("s2", c.s2.to_string()),
        ("s", c.s.to_string()),
        ("delta", c.delta.to_string()),
        ("ell0", c.ell0.to_string()),
        ("lhs", c.lhs.to_string()),
        ("rhs", c.rhs.to_string()),
    ];
    let mut text = String::new();
    for (name, v) in &fields {
        text.push_str(&format!("{name:<6} = {v}\n"));
    }
    text.push_str(&format!("(s/(s-1))(a/k) <= a/k + eps: {verdict}\n"));
    let mut rows: Vec<Vec<String>> =
        fields.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
    rows.push(vec!["inequality".into(), verdict.into()]);
    let mut j = serde_json::to_value(&c).expect("constants serialize");
    j["inequality"] = json!(verdict);
    Ok((
        Rendered {
            table: text,
            csv_headers: strings(&["quantity", "value"]),
            csv_rows: rows,
            json: j,
        },
        0,
    ))
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let (rendered, code, format) = match cli.command {
        Command::Spectrum { domain_file, max_action, max_count, max_enum, fmt } => {
            let (r, c) = spectrum(&domain_file, max_action, max_count, max_enum)?;
            (r, c, fmt.format)
        }
        Command::Capacity { domain_file, kind, k, fmt } => {
            let (r, c) = capacity_cmd(&domain_file, kind, k)?;
            (r, c, fmt.format)
        }
        Command::Chain { domain_file, k_max, max_enum, fmt } => {
            let (r, c) = chain(&domain_file, k_max, max_enum)?;
            (r, c, fmt.format)
        }
        Command::Index { setup_file, tangency_k, fmt } => {
            let (r, c) = index_cmd(&setup_file, tangency_k)?;
            (r, c, fmt.format)
        }
        Command::Lch { domain_file, action_cap, k, max_enum, fmt } => {
            let (r, c) = lch_cmd(&domain_file, action_cap, k, max_enum)?;
            (r, c, fmt.format)
        }
        Command::Building { action: BuildingAction::Validate { building_file, budget, fmt } } => {
            let (r, c) = building_validate(&building_file, budget)?;
            (r, c, fmt.format)
        }
        Command::Constants { a, eps, k, fmt } => {
            let (r, c) = constants_cmd(a, eps, k)?;
            (r, c, fmt.format)
        }
    };
    let text = match format {
        Format::Table => rendered.table,
        Format::Csv => rendered.csv(),
        Format::Json => rendered.json(),
    };
    Ok((text, code))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
