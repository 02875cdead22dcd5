//! The `gspec` command line.

use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::corpus::{default_corpus, load, Tags};
use crate::dimension::{dimension, g_points, g_rank, Generation};
use crate::equations::{noetherian_reduce, parse_system, solve, SolveOptions};
use crate::error::{Error, Result};
use crate::galois::{extension_report, galois_group};
use crate::ggroup::{GGroup, ZeroDivisorMode};
use crate::limits::Limits;
use crate::sheaf::StructureSheaf;
use crate::spectrum::SpecSpace;
use crate::verify::{parse_filter, verify_suite, Status};

pub const REPORT_FORMAT: &str = "gspec-report-v1";

#[derive(Parser, Debug)]
#[command(name = "gspec", version, about = "Prime spectra, structure sheaves and word equations for finite G-groups")]
struct Cli {
    /// Print a JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Print the specialization order as a DOT graph (spec, topology).
    #[arg(long, global = true)]
    dot: bool,
    /// Node budget for homomorphism search and equation solving.
    #[arg(long, global = true, env = "GSPEC_BUDGET")]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orders, tags and counts.
    Info { source: String },
    /// The prime ideals.
    Spec { source: String },
    /// Radical, Nil and Com subgroups.
    Radical { source: String },
    /// Closed sets, irreducible components and the structural presheaf.
    Topology { source: String },
    /// G-rank and dimension.
    Dimension {
        source: String,
        /// `plain` or `normal`; both when omitted.
        #[arg(long)]
        generation: Option<Generation>,
    },
    /// Zero divisors.
    ZeroDivisors {
        source: String,
        /// Use the pairwise oracle instead of the orbit test.
        #[arg(long)]
        oracle: bool,
    },
    /// Solutions of an equation system.
    Solve {
        source: String,
        /// A file, or the system text itself.
        #[arg(long)]
        system: String,
        /// Also report a smallest equivalent subset of the equalities.
        #[arg(long)]
        noetherian: bool,
    },
    /// G-homomorphisms from SOURCE to TARGET.
    Homs { source: String, target: String },
    /// Galois group, orbit count and algebraic witnesses.
    Galois { source: String },
    /// Checks every statement over the builtin corpus.
    Verify {
        /// Comma-separated identifiers; all when omitted.
        #[arg(long)]
        props: Option<String>,
    },
}

/// Text lines and the JSON body of a command.
struct Output {
    text: String,
    json: Value,
    exit: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, exit: 0 }
    }
}

fn list(xs: &[usize]) -> String {
    let body: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", body.join(", "))
}

fn header(gg: &GGroup) -> String {
    format!("{}: |H| = {}, |G| = {}\n", gg.label(), gg.ambient().order(), gg.gsub().len())
}

fn info(gg: &Arc<GGroup>) -> Result<Output> {
    let tags = Tags::derive(gg);
    let normals = gg.normal_subgroups()?.len();
    let ideals = gg.ideals()?.len();
    let spec = gg.spec()?.len();
    let rad = gg.radical()?.len();
    let json = json!({
        "ggroup": gg.label(),
        "ambient": gg.ambient().name(),
        "ambient_order": gg.ambient().order(),
        "g_order": gg.gsub().len(),
        "g_normal": gg.gsub_is_normal(),
        "tags": tags,
        "normal_subgroups": normals,
        "ideals": ideals,
        "g_simple": ideals == 1,
        "spec_points": spec,
        "radical_order": rad,
        "nil_order": gg.nil_subgroup().len(),
        "com_order": gg.com_subgroup().len(),
    });
    let text = format!(
        "{}G normal: {}\nG solvable: {}, simple: {}, trivial: {}\nG-domain: {}\nnormal subgroups: {normals}\nideals: {ideals} (G-simple: {})\nprimes: {spec}\n|Rad| = {rad}, |Nil| = {}, |Com| = {}\n",
        header(gg),
        gg.gsub_is_normal(),
        tags.solvable,
        tags.simple,
        tags.trivial_g,
        tags.domain,
        ideals == 1,
        gg.nil_subgroup().len(),
        gg.com_subgroup().len(),
    );
    Ok(Output::ok(text, json))
}

fn spec(gg: &Arc<GGroup>) -> Result<Output> {
    let primes: Vec<Vec<usize>> = gg.spec()?.iter().map(|p| p.carrier.elements()).collect();
    let mut text = header(gg);
    text += &format!("{} prime(s)\n", primes.len());
    for (i, p) in primes.iter().enumerate() {
        text += &format!("P{i} (order {}): {}\n", p.len(), list(p));
    }
    Ok(Output::ok(text, json!({ "ggroup": gg.label(), "primes": primes })))
}

fn radical(gg: &Arc<GGroup>) -> Result<Output> {
    let rad = gg.radical()?.elements();
    let nil = gg.nil_subgroup().elements();
    let com = gg.com_subgroup().elements();
    let text = format!(
        "{}Rad (order {}): {}\nNil (order {}): {}\nCom (order {}): {}\n",
        header(gg),
        rad.len(),
        list(&rad),
        nil.len(),
        list(&nil),
        com.len(),
        list(&com)
    );
    Ok(Output::ok(text, json!({ "ggroup": gg.label(), "radical": rad, "nil": nil, "com": com })))
}

fn point_list(s: &crate::spectrum::PointSet) -> Vec<usize> {
    s.ones().collect()
}

fn topology(gg: &Arc<GGroup>) -> Result<Output> {
    let space = Arc::new(SpecSpace::new(gg.clone())?);
    let closed: Vec<Vec<usize>> = space.closed_sets().iter().map(|c| c.points()).collect();
    let open: Vec<Vec<usize>> = space.open_sets().iter().map(point_list).collect();
    let components: Vec<Value> = space
        .irreducible_components()
        .iter()
        .map(|c| json!({ "points": point_list(c), "generic": space.generic_points(c) }))
        .collect();
    let presheaf = if space.is_empty() { None } else { Some(StructureSheaf::new(space.clone())?.to_json()) };
    let mut text = header(gg);
    text += &format!("points: {}\n", space.len());
    let sets = |v: &[Vec<usize>]| v.iter().map(|s| list(s)).collect::<Vec<_>>().join(" ");
    text += &format!("closed: {}\nopen: {}\n", sets(&closed), sets(&open));
    for c in space.irreducible_components() {
        text += &format!("component {} generic {}\n", list(&point_list(&c)), list(&space.generic_points(&c)));
    }
    text += &format!("irreducible: {}\n", space.is_irreducible_space());
    if let Some(p) = &presheaf {
        for o in &p.opens {
            text += &format!("O({}) has order {}\n", list(&o.points), o.order);
        }
    }
    let json = json!({
        "ggroup": gg.label(),
        "spectrum": space.to_json(),
        "open_sets": open,
        "components": components,
        "irreducible": space.is_irreducible_space(),
        "presheaf": presheaf,
    });
    Ok(Output::ok(text, json))
}

fn dimension_cmd(gg: &Arc<GGroup>, generation: Option<Generation>) -> Result<Output> {
    let modes = match generation {
        Some(g) => vec![g],
        None => vec![Generation::Plain, Generation::Normal],
    };
    let cap = gg.limits().rank_cap;
    let mut text = header(gg);
    let mut per_mode = Vec::new();
    for mode in modes {
        let rank = g_rank(gg, mode, cap)?;
        let dim = dimension(gg, mode, cap)?;
        text += &format!("{mode}: G-rank {} (witness {}), dimension {dim}\n", rank.rank, list(&rank.witness));
        per_mode.push(json!({ "generation": mode, "rank": rank.rank, "witness": rank.witness, "dimension": dim }));
    }
    let points = g_points(gg)?;
    text += &format!("G-points: {}\n", list(&points));
    Ok(Output::ok(text, json!({ "ggroup": gg.label(), "modes": per_mode, "g_points": points })))
}

fn zero_divisors(gg: &Arc<GGroup>, oracle: bool) -> Result<Output> {
    let mode = if oracle { ZeroDivisorMode::Oracle } else { ZeroDivisorMode::Fast };
    let zd = gg.zero_divisors(mode).elements();
    let text = format!("{}{} zero divisor(s): {}\n", header(gg), zd.len(), list(&zd));
    Ok(Output::ok(text, json!({ "ggroup": gg.label(), "zero_divisors": zd, "domain": zd.is_empty() })))
}

fn solve_cmd(gg: &Arc<GGroup>, system: &str, noetherian: bool) -> Result<Output> {
    let text_in = if Path::new(system).is_file() {
        std::fs::read_to_string(system).map_err(|e| Error::Input(format!("{system}: {e}")))?
    } else {
        system.to_string()
    };
    let sys = parse_system(&text_in, gg)?;
    let sol = solve(&sys, gg, SolveOptions::for_target(gg))?;
    let mut text = header(gg);
    text += &format!("{} solution(s) in {} variable(s)\n", sol.count, sol.nvars);
    for t in &sol.tuples {
        text += &format!("{}\n", list(t));
    }
    let mut json = json!({ "ggroup": gg.label(), "system": sys.to_dsl(gg), "solutions": sol });
    if noetherian {
        let r = noetherian_reduce(&sys, gg, gg.limits().solve_budget)?;
        text += &format!("equalities kept: {}\n", list(&r.kept));
        json["noetherian"] = serde_json::to_value(&r).expect("serializable");
    }
    Ok(Output::ok(text, json))
}

fn homs(source: &Arc<GGroup>, target: &Arc<GGroup>) -> Result<Output> {
    let maps: Vec<Vec<usize>> = source.hom_g_set(target)?.iter().map(|u| u.map().to_vec()).collect();
    let text = format!("{} G-homomorphism(s) {} → {}\n", maps.len(), source.label(), target.label());
    Ok(Output::ok(
        text,
        json!({ "source": source.label(), "target": target.label(), "count": maps.len(), "maps": maps }),
    ))
}

fn galois(gg: &Arc<GGroup>) -> Result<Output> {
    let gal = galois_group(gg)?;
    let ext = extension_report(gg)?;
    let autos: Vec<&[usize]> = gal.automorphisms.iter().map(|a| a.map()).collect();
    let text = format!(
        "{}|Gal| = {}\norbits of G on H: {}\nalgebraic: {}, finite: {}\n",
        header(gg),
        gal.group.order(),
        ext.orbit_count,
        ext.algebraic,
        ext.finite
    );
    let json = json!({
        "ggroup": gg.label(),
        "galois_order": gal.group.order(),
        "automorphisms": autos,
        "extension": ext,
    });
    Ok(Output::ok(text, json))
}

fn verify(props: Option<&str>) -> Result<Output> {
    let filter = props.map(parse_filter).transpose()?;
    let corpus = default_corpus()?;
    let report = verify_suite(&corpus, filter.as_deref())?;
    let status = |s: Status| serde_json::to_value(s).expect("serializable").as_str().unwrap_or_default().to_string();
    let mut text = String::new();
    for r in &report.results {
        text += &format!("{:7} {:22} {}\n", r.id, status(r.status), r.instances);
        if let Some(w) = &r.witness {
            text += &format!("        witness: {w}\n");
        }
    }
    if !report.disputed.is_empty() {
        text += "disputed claims:\n";
        for d in &report.disputed {
            text += &format!("{:7} {:22} {}\n", d.id, status(d.status), d.claim);
            if let Some(w) = &d.witness {
                text += &format!("        witness: {w}\n");
            }
        }
    }
    text += &format!("{}\n", if report.passed { "PASS" } else { "FAIL" });
    let exit = if report.passed { 0 } else { 1 };
    Ok(Output { text, json: serde_json::to_value(&report).expect("serializable"), exit })
}

fn limits_from(budget: Option<u64>) -> Limits {
    match budget {
        Some(b) => Limits::default().with_budget(b),
        None => Limits::default(),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::Spec { .. } => "spec",
        Command::Radical { .. } => "radical",
        Command::Topology { .. } => "topology",
        Command::Dimension { .. } => "dimension",
        Command::ZeroDivisors { .. } => "zero-divisors",
        Command::Solve { .. } => "solve",
        Command::Homs { .. } => "homs",
        Command::Galois { .. } => "galois",
        Command::Verify { .. } => "verify",
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let limits = limits_from(cli.budget);
    let get = |s: &str| load(s, &limits);
    if cli.dot {
        let source = match &cli.command {
            Command::Spec { source } | Command::Topology { source } => source,
            _ => return Err(Error::Input("--dot is supported by `spec` and `topology` only".into())),
        };
        let space = SpecSpace::new(get(source)?)?;
        return Ok(Output::ok(space.to_dot(), Value::Null));
    }
    match &cli.command {
        Command::Info { source } => info(&get(source)?),
        Command::Spec { source } => spec(&get(source)?),
        Command::Radical { source } => radical(&get(source)?),
        Command::Topology { source } => topology(&get(source)?),
        Command::Dimension { source, generation } => dimension_cmd(&get(source)?, *generation),
        Command::ZeroDivisors { source, oracle } => zero_divisors(&get(source)?, *oracle),
        Command::Solve { source, system, noetherian } => solve_cmd(&get(source)?, system, *noetherian),
        Command::Homs { source, target } => homs(&get(source)?, &get(target)?),
        Command::Galois { source } => galois(&get(source)?),
        Command::Verify { props } => verify(props.as_deref()),
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("GSPEC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second configuration attempt in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Runs one invocation; returns the exit code (0 success, 1 verification
/// failure, 2 input error).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    configure_threads();
    let start = std::time::Instant::now();
    match execute(&cli) {
        Ok(output) => {
            if cli.json && !cli.dot {
                let mut body = json!({ "format": REPORT_FORMAT, "command": command_name(&cli.command) });
                if let Value::Object(fields) = output.json {
                    body.as_object_mut().expect("object").extend(fields);
                }
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("serializable"));
            } else {
                let _ = write!(out, "{}", output.text);
            }
            if matches!(cli.command, Command::Verify { .. }) {
                let _ = writeln!(err, "verify finished in {:.2?}", start.elapsed());
            }
            output.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
