mod svg;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use vertex_maximal::io::{
    configuration_to_json, curve_from_json, polytope_from_json, search_result_to_json,
    PolytopeJson, SearchRecord,
};
use vertex_maximal::saturated::{asymptotic_ratio, build_qk, n_formula, polytope_of, s_leq};
use vertex_maximal::tropical::ray_bound_check_exact;
use vertex_maximal::{
    a_bounds, canonicalize_maximal, d_map, max_vertices_branch_and_bound, ray_bound_check, ABound, Error,
    Polygon, SearchLimits, SearchResult,
};

#[derive(Parser)]
#[command(name = "vmax", version, about = "Vertex-maximal lattice polygons in dilated unimodular triangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    /// Draw SVG figures in the sheared frame.
    #[arg(long, global = true)]
    skew: bool,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct LimitArgs {
    /// Worker threads for searches (0 = all cores).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[arg(long, global = true)]
    max_nodes: Option<u64>,
    #[arg(long, global = true)]
    max_seconds: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds on A(n), or its exact value.
    An {
        n: u64,
        /// Settle A(n) by exhaustive search.
        #[arg(long)]
        search: bool,
    },
    /// A(n) for n = 1..=max_n.
    Table {
        max_n: u64,
        #[arg(long)]
        search: bool,
    },
    /// The balanced saturated polygon Q_k, or P for all vectors of norm <= q.
    Construct {
        #[arg(long, conflicts_with = "q", required_unless_present = "q")]
        k: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Simplicial diameter of a polygon file.
    Diameter { file: PathBuf },
    /// Vector configuration of a polygon file.
    Dmap { file: PathBuf },
    /// Minkowski sum of two polygon files.
    Minkowski { a: PathBuf, b: PathBuf },
    /// Unit contact edges and boundary stripping inside n * simplex.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        n: Option<i64>,
    },
    /// Degree and ray bound of a tropical curve file.
    Tropical {
        file: PathBuf,
        #[arg(long)]
        search: bool,
    },
    /// f0^3 / n^2 for the saturated polygons up to q_max.
    Asymptotic { q_max: u64 },
    /// Exhaustive search for A(n).
    Search { n: u64 },
}

enum Failure {
    Validation(String),
    Inconclusive(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 2,
            Failure::Inconclusive(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn report(&self) -> Value {
        let (kind, message) = match self {
            Failure::Validation(m) => ("validation", m),
            Failure::Inconclusive(m) => ("inconclusive", m),
            Failure::Io(m) => ("io", m),
        };
        json!({ "error": kind, "message": message })
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconclusive { .. } => Failure::Inconclusive(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

type Outcome = Result<Output, Failure>;

/// Rendered output, plus a failure to report after writing it.
struct Output {
    text: String,
    then: Option<Failure>,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, then: None }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_polygon(path: &Path) -> Result<Polygon, Failure> {
    Ok(polytope_from_json(&read(path)?)?)
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn bounds_text(b: &ABound) -> String {
    if b.exact {
        format!("exact {}", b.lower)
    } else {
        format!("{} ≤ A({}) ≤ {}", b.lower, b.n, b.upper)
    }
}

fn unsupported(cmd: &str, f: Format) -> Failure {
    let name = match f {
        Format::Json => "json",
        Format::Svg => "svg",
        Format::Table => "table",
    };
    Failure::Validation(format!("{cmd} does not support --format {name}"))
}

struct Runner {
    format: Option<Format>,
    skew: bool,
    limits: SearchLimits,
}

impl Runner {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn search(&self, n: u64) -> Result<SearchResult, Failure> {
        Ok(max_vertices_branch_and_bound(n, self.limits)?)
    }

    fn polygon_output(&self, cmd: &str, p: &Polygon, extra: Value) -> Outcome {
        match self.format_or(Format::Json) {
            Format::Json => {
                let mut v = serde_json::to_value(PolytopeJson::from(p)).expect("serializable");
                if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
                    m.extend(e);
                }
                Ok(Output::ok(v.to_string() + "\n"))
            }
            Format::Svg => Ok(Output::ok(svg::render(p, p.simplicial_diameter(), self.skew))),
            f => Err(unsupported(cmd, f)),
        }
    }

    fn run(&self, command: Command) -> Outcome {
        match command {
            Command::An { n, search } => self.an(n, search),
            Command::Table { max_n, search } => self.table(max_n, search),
            Command::Construct { k, q } => self.construct(k, q),
            Command::Diameter { file } => self.diameter(&file),
            Command::Dmap { file } => self.dmap(&file),
            Command::Minkowski { a, b } => {
                let sum = load_polygon(&a)?.minkowski_sum(&load_polygon(&b)?);
                self.polygon_output("minkowski", &sum, json!({}))
            }
            Command::Normalize { file, n } => self.normalize(&file, n),
            Command::Tropical { file, search } => self.tropical(&file, search),
            Command::Asymptotic { q_max } => self.asymptotic(q_max),
            Command::Search { n } => self.search_cmd(n),
        }
    }

    fn an(&self, n: u64, search: bool) -> Outcome {
        let bound = a_bounds(n)?;
        let result = if search { Some(self.search(n)?) } else { None };
        let then = result
            .as_ref()
            .filter(|r| !r.is_exact())
            .map(|r| Failure::Inconclusive(format!("search for A({n}) hit its limits after {} nodes", r.node_count)));
        let text = match self.format_or(Format::Table) {
            Format::Table => {
                let mut s = bounds_text(&bound) + "\n";
                if let Some(r) = &result {
                    if r.is_exact() {
                        s += &format!("exact {} (search)\n", r.a_of_n);
                    } else {
                        s += &format!("at least {} (search inconclusive)\n", r.a_of_n);
                    }
                    s += &format!("witness {}\n", configuration_to_json(&r.witness));
                }
                s
            }
            Format::Json => {
                let search = result.as_ref().map(SearchRecord::from);
                pretty(&json!({ "n": n, "bound": bound, "search": search }))
            }
            f => return Err(unsupported("an", f)),
        };
        Ok(Output { text, then })
    }

    fn table(&self, max_n: u64, search: bool) -> Outcome {
        if max_n == 0 {
            return Err(Failure::Validation("max_n must be at least 1".into()));
        }
        let mut rows = Vec::new();
        let mut then = None;
        for n in 1..=max_n {
            let b = a_bounds(n)?;
            let row = if b.exact {
                json!({ "n": n, "A": b.lower, "source": "formula" })
            } else if search {
                let r = self.search(n)?;
                if r.is_exact() {
                    json!({ "n": n, "A": r.a_of_n, "source": "search" })
                } else {
                    then = Some(Failure::Inconclusive(format!("search for A({n}) hit its limits")));
                    json!({ "n": n, "lower": r.a_of_n.max(b.lower), "upper": b.upper, "source": "bounds" })
                }
            } else {
                json!({ "n": n, "lower": b.lower, "upper": b.upper, "source": "bounds" })
            };
            rows.push(row);
        }
        let text = match self.format_or(Format::Table) {
            Format::Json => pretty(&rows),
            Format::Table => {
                let width = max_n.to_string().len();
                rows.iter()
                    .map(|r| match &r["A"] {
                        Value::Number(a) => format!("{:>width$}: {a} ({})\n", r["n"].as_u64().unwrap(), r["source"].as_str().unwrap()),
                        _ => format!("{:>width$}: {}..{} (bounds)\n", r["n"].as_u64().unwrap(), r["lower"], r["upper"]),
                    })
                    .collect()
            }
            f => return Err(unsupported("table", f)),
        };
        Ok(Output { text, then })
    }

    fn construct(&self, k: Option<u64>, q: Option<u64>) -> Outcome {
        let set = match (k, q) {
            (Some(k), _) => build_qk(k)?,
            (None, Some(q)) if q >= 1 => s_leq(q),
            _ => return Err(Failure::Validation("q must be at least 1".into())),
        };
        let p = polytope_of(&set)?;
        let n = n_formula(&set);
        self.polygon_output(
            "construct",
            &p,
            json!({ "q": set.q(), "f0": p.f0(), "n": n.to_integer() }),
        )
    }

    fn diameter(&self, file: &Path) -> Outcome {
        let p = load_polygon(file)?;
        let (d, shift) = p.simplicial_diameter_maxsum();
        match self.format_or(Format::Table) {
            Format::Table => Ok(Output::ok(format!("{d}\n"))),
            Format::Json => Ok(Output::ok(pretty(&json!({ "diameter": d, "translation": [shift.x, shift.y] })))),
            Format::Svg => Ok(Output::ok(svg::render(&p, d, self.skew))),
        }
    }

    fn dmap(&self, file: &Path) -> Outcome {
        let c = d_map(&load_polygon(file)?);
        match self.format_or(Format::Json) {
            Format::Json => Ok(Output::ok(configuration_to_json(&c) + "\n")),
            Format::Table => Ok(Output::ok(
                c.vectors().iter().map(|v| format!("{v}  norm {}\n", v.norm())).collect(),
            )),
            f => Err(unsupported("dmap", f)),
        }
    }

    fn normalize(&self, file: &Path, n: Option<i64>) -> Outcome {
        let p = load_polygon(file)?;
        let n = n.unwrap_or_else(|| p.simplicial_diameter()).max(1);
        let report = canonicalize_maximal(&p, n)?;
        match self.format_or(Format::Json) {
            Format::Svg => Ok(Output::ok(svg::render(&report.polytope, n, self.skew))),
            Format::Json => {
                let mut v = serde_json::to_value(PolytopeJson::from(&report.polytope)).expect("serializable");
                v["report"] = serde_json::to_value(&report).expect("serializable");
                Ok(Output::ok(v.to_string() + "\n"))
            }
            Format::Table => Ok(Output::ok(format!(
                "f0 {} -> {}, unit contacts: {}, boundary points are vertices: {}, arcs >= 3: {}\n",
                report.f0_before,
                report.f0_after,
                report.unit_contacts,
                report.boundary_points_are_vertices,
                report.arcs_ok
            ))),
        }
    }

    fn tropical(&self, file: &Path, search: bool) -> Outcome {
        let curve = curve_from_json(&read(file)?)?;
        let report = if search {
            ray_bound_check_exact(&curve, self.limits)?
        } else {
            ray_bound_check(&curve)?
        };
        match self.format_or(Format::Table) {
            Format::Json => Ok(Output::ok(pretty(&report))),
            Format::Table => {
                let head = format!("degree {}, rays {}", report.degree, report.ray_count);
                let tail = match (&report.bound, report.a_of_degree, report.within_bound) {
                    (None, _, _) => format!("ambient dimension {}, no plane bound applies", report.ambient_dim),
                    (Some(_), Some(a), Some(true)) if a == report.ray_count as u64 => {
                        format!("bound A({})={a}: tight", report.degree)
                    }
                    (Some(_), Some(a), Some(true)) => format!("bound A({})={a}: within", report.degree),
                    (Some(b), None, Some(true)) => {
                        format!("bound A({}) >= {}: within", report.degree, b.lower)
                    }
                    (Some(b), _, Some(false)) => {
                        format!("bound A({}) <= {}: exceeded", report.degree, b.upper)
                    }
                    (Some(b), _, _) => format!(
                        "bound {} ≤ A({}) ≤ {}: undecided",
                        b.lower, report.degree, b.upper
                    ),
                };
                Ok(Output::ok(format!("{head}, {tail}\n")))
            }
            f => Err(unsupported("tropical", f)),
        }
    }

    fn asymptotic(&self, q_max: u64) -> Outcome {
        let rows = (1..=q_max).map(asymptotic_ratio).collect::<Result<Vec<_>, _>>()?;
        match self.format_or(Format::Table) {
            Format::Json => Ok(Output::ok(pretty(&rows))),
            Format::Table => {
                let mut s = String::from("q\tf0\tn\tratio\tdeviation\n");
                for r in &rows {
                    s += &format!(
                        "{}\t{}\t{}\t{}\t{:.6}\n",
                        r.q, r.f0, r.n, r.ratio, r.relative_deviation
                    );
                }
                Ok(Output::ok(s))
            }
            f => Err(unsupported("asymptotic", f)),
        }
    }

    fn search_cmd(&self, n: u64) -> Outcome {
        let r = self.search(n)?;
        let then = (!r.is_exact())
            .then(|| Failure::Inconclusive(format!("search for A({n}) hit its limits after {} nodes", r.node_count)));
        let text = match self.format_or(Format::Json) {
            Format::Json => search_result_to_json(&r) + "\n",
            Format::Table => format!(
                "A({n}) = {} ({}), {} nodes, {} ms, primitive witness: {}\nwitness {}\n",
                r.a_of_n,
                if r.is_exact() { "exact" } else { "inconclusive" },
                r.node_count,
                r.elapsed.as_millis(),
                match r.primitive_witness {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "unknown",
                },
                configuration_to_json(&r.witness)
            ),
            Format::Svg => {
                let p = vertex_maximal::reconstruct(&r.witness)?;
                svg::render(&p, n as i64, self.skew)
            }
        };
        Ok(Output { text, then })
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let max_time = match cli.limits.max_seconds {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            let f = Failure::Validation(format!("--max-seconds must be a non-negative number, got {s}"));
            eprintln!("{}", f.report());
            return ExitCode::from(f.code());
        }
        s => s.map(Duration::from_secs_f64),
    };
    let runner = Runner {
        format: cli.format,
        skew: cli.skew,
        limits: SearchLimits {
            max_nodes: cli.limits.max_nodes,
            max_time,
            threads: cli.limits.threads,
        },
    };
    let result = runner
        .run(cli.command)
        .and_then(|out| emit(cli.output.as_deref(), &out.text).map(|_| out.then));
    match result {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(f)) | Err(f) => {
            eprintln!("{}", f.report());
            ExitCode::from(f.code())
        }
    }
}
