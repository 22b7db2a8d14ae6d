use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bmw_core::blocks::{block_check, block_partition_with, is_semisimple, verify_block_theorem};
use bmw_core::center::{
    adaptive_rank, evaluation_matrix, separating_family, separation_classes_with, theorem1_predicate, verify_family,
    RankMethod,
};
use bmw_core::contentfn::{drunk_contents, pairing_diagram, pairing_set, signature, signature_equal};
use bmw_core::idempotents::{all_paths, spectral_idempotent_on};
use bmw_core::partitions::Partition;
use bmw_core::scalars::Regime;
use bmw_core::tableaux::{branching_graph, defect_of, enumerate_lambda, enumerate_paths, LabeledPartition};
use bmw_core::wheelpoly::{elementary_wheels, is_wheel, newton_check, power_sum, DegreeCap};

mod json;
mod selfcheck;

use json::{labeled_json, labeled_pairs_json, signature_json};

#[derive(Parser, Debug)]
#[command(name = "bmw", version, about = "Jucys-Murphy spectra, wheel signatures and blocks of BMW algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Level n.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Parameter regime: generic, q^N or -q^N.
    #[arg(long, global = true, default_value = "generic", allow_hyphen_values = true)]
    t: Regime,
    /// Partition as comma-separated parts, e.g. 4,2,2; 0 is the empty partition.
    #[arg(long, global = true)]
    shape: Option<Partition>,
    /// Second partition, for pairwise comparisons.
    #[arg(long, global = true)]
    shape2: Option<Partition>,
    /// Number of excursions f; with --shape it fixes n = |shape| + 2f.
    #[arg(long, global = true)]
    defect: Option<usize>,
    /// Truncation order K.
    #[arg(long, global = true)]
    order: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Evaluate shapes in parallel.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Enumerate Λ_n.
    Lambda,
    /// Enumerate the updown tableaux of length n ending at a shape.
    Paths,
    /// Content multiset of the drunk path.
    Contents,
    /// Elementary wheel polynomials, power sums and the Newton check.
    Wheel,
    /// Reduced signature W(λ,t).
    Signature,
    /// Paired diagonals for t = ±q^(2a), with a labelled diagram.
    Pairs,
    /// Split Λ_n into classes of equal signature.
    Separate,
    /// Evaluation matrix of the center on Λ_n and its rank.
    Matrix,
    /// Unitriangular separating family.
    Family,
    /// Semisimplicity of B_n(q,t).
    Semisimple,
    /// Block partition of Λ_n, or a block test for two shapes.
    Blocks,
    /// Check that blocks and signature classes coincide.
    VerifyBlocks,
    /// Spectral idempotent of a shape on all paths.
    Idempotent,
    /// Branching graph with content-labelled edges.
    Graph,
    /// Run the invariant checks at level n.
    Selfcheck,
}

enum Failure {
    Usage(String),
    Domain(bmw_core::Error),
}

impl From<bmw_core::Error> for Failure {
    fn from(e: bmw_core::Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

impl Cli {
    fn shape(&self) -> Result<&Partition, Failure> {
        self.shape.as_ref().ok_or_else(|| Failure::Usage("--shape is required".into()))
    }

    fn shape2(&self) -> Result<&Partition, Failure> {
        self.shape2.as_ref().ok_or_else(|| Failure::Usage("--shape2 is required".into()))
    }

    fn level(&self) -> Result<usize, Failure> {
        match (self.n, &self.shape, self.defect) {
            (Some(n), Some(shape), Some(f)) if shape.size() + 2 * f != n => Err(Failure::Domain(
                bmw_core::Error::ShapeLevelMismatch { shape: format!("{shape} with defect {f}"), level: n },
            )),
            (Some(n), _, _) => Ok(n),
            (None, Some(shape), Some(f)) => Ok(shape.size() + 2 * f),
            _ => Err(Failure::Usage("--n is required (or --shape with --defect)".into())),
        }
    }

    fn labeled(&self) -> Result<LabeledPartition, Failure> {
        Ok(LabeledPartition::at_level(self.shape()?.clone(), self.level()?)?)
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

fn render(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn lambda(cli: &Cli) -> Outcome {
    let list = enumerate_lambda(cli.level()?);
    if cli.json() {
        return Ok(render(Value::Array(list.iter().map(labeled_json).collect())));
    }
    Ok(list.iter().map(|l| format!("{l}\n")).collect())
}

fn paths(cli: &Cli) -> Outcome {
    let n = cli.level()?;
    let paths = enumerate_paths(n, cli.shape()?)?;
    if cli.json() {
        let rows = paths
            .iter()
            .map(|t| Value::Array(t.shapes().iter().map(|p| json!(p.to_text())).collect()))
            .collect();
        return Ok(render(Value::Array(rows)));
    }
    let mut out: String = paths.iter().map(|t| format!("{t}\n")).collect();
    writeln!(out, "{} paths", paths.len()).unwrap();
    Ok(out)
}

fn contents(cli: &Cli) -> Outcome {
    let n = cli.level()?;
    let contents = drunk_contents(n, cli.shape()?)?;
    if cli.json() {
        let items = contents
            .iter()
            .map(|c| json!({"content": c.to_string(), "value": c.value(cli.t).to_text()}))
            .collect();
        return Ok(render(Value::Array(items)));
    }
    Ok(contents.iter().map(|c| format!("{c}\t{}\n", c.value(cli.t).pretty())).collect())
}

fn wheel(cli: &Cli) -> Outcome {
    let n = cli.level()?;
    let order = cli.order.unwrap_or(n.max(1));
    let cap = DegreeCap(order.max(DegreeCap::default_for(n).0));
    let wheels = elementary_wheels(n, order, cap)?;
    let sums: Vec<String> = (1..=order).map(|k| power_sum(n, k).to_text()).collect();
    let newton = newton_check(n, order, cap)?;
    let wheel_ok: Vec<bool> = wheels.iter().map(is_wheel).collect();
    if cli.json() {
        return Ok(render(json!({
            "n": n,
            "order": order,
            "w": wheels.iter().map(|w| w.to_text()).collect::<Vec<_>>(),
            "p": sums,
            "newton": newton,
            "is_wheel": wheel_ok,
        })));
    }
    let mut out = String::new();
    for (k, w) in wheels.iter().enumerate() {
        writeln!(out, "w{k} = {}", w.to_text()).unwrap();
    }
    for (k, p) in sums.iter().enumerate() {
        writeln!(out, "p{}- = {p}", k + 1).unwrap();
    }
    writeln!(out, "newton identity: {}", if newton { "holds" } else { "FAILS" }).unwrap();
    writeln!(out, "wheel condition: {}", if wheel_ok.iter().all(|&b| b) { "holds" } else { "FAILS" }).unwrap();
    Ok(out)
}

fn signature_cmd(cli: &Cli) -> Outcome {
    let l = cli.labeled()?;
    let sig = signature(l.level, &l.shape, cli.t)?;
    let other = match &cli.shape2 {
        Some(s) => {
            let m = LabeledPartition::at_level(s.clone(), l.level)?;
            let sig2 = signature(m.level, &m.shape, cli.t)?;
            Some((m, sig2))
        }
        None => None,
    };
    if cli.json() {
        let mut obj = json!({
            "regime": cli.t.to_string(),
            "n": l.level,
            "lambda": labeled_json(&l),
            "signature": signature_json(&sig),
            "display": sig.pretty(),
        });
        if let Some((m, sig2)) = &other {
            obj["mu"] = labeled_json(m);
            obj["signature2"] = signature_json(sig2);
            obj["equal"] = json!(signature_equal(&sig, sig2)?);
        }
        return Ok(render(obj));
    }
    let mut out = format!("{}\n", sig.pretty());
    if let Some((m, sig2)) = other {
        writeln!(out, "{}\n{l} and {m}: {}", sig2.pretty(), if sig == sig2 { "equal" } else { "different" }).unwrap();
    }
    Ok(out)
}

fn pairs(cli: &Cli) -> Outcome {
    let shape = cli.shape()?;
    let paired = pairing_set(shape, cli.t)?;
    let diagram = pairing_diagram(shape, cli.t)?;
    let sig = signature(shape.size(), shape, cli.t)?;
    if cli.json() {
        return Ok(render(json!({
            "regime": cli.t.to_string(),
            "shape": shape.to_text(),
            "paired": paired.iter().collect::<Vec<_>>(),
            "diagram": diagram,
            "signature": signature_json(&sig),
        })));
    }
    let list: Vec<String> = paired.iter().map(|i| i.to_string()).collect();
    Ok(format!("P({shape}) = {{{}}}\n{diagram}W = {}\n", list.join(","), sig.pretty()))
}

fn conjecture_note(n: usize, r: Regime) -> Option<&'static str> {
    (!is_semisimple(n, r)).then_some("not semisimple: whether the center equals the wheel subalgebra is an open conjecture")
}

fn separate(cli: &Cli) -> Outcome {
    let n = cli.level()?;
    let rep = separation_classes_with(n, cli.t, cli.parallel);
    if cli.json() {
        let classes: Vec<Value> = rep.classes.iter().map(|c| Value::Array(c.iter().map(labeled_json).collect())).collect();
        return Ok(render(json!({
            "regime": rep.regime.to_string(),
            "n": n,
            "classes": classes,
            "separates": rep.separates,
            "witnesses": labeled_pairs_json(&rep.witnesses),
        })));
    }
    let mut out = format!(
        "n={n} t={}: {} classes over {} shapes, {}\n",
        rep.regime,
        rep.classes.len(),
        rep.classes.iter().map(Vec::len).sum::<usize>(),
        if rep.separates { "separates" } else { "does not separate" }
    );
    for (i, class) in rep.classes.iter().enumerate() {
        let members: Vec<String> = class.iter().map(|l| l.to_string()).collect();
        writeln!(out, "class {}: {}", i + 1, members.join(" ")).unwrap();
    }
    for (a, b) in &rep.witnesses {
        writeln!(out, "witness: {a}~{b}").unwrap();
    }
    if let Some(note) = conjecture_note(n, cli.t) {
        writeln!(out, "{note}").unwrap();
    }
    Ok(out)
}

fn method_name(m: RankMethod) -> &'static str {
    match m {
        RankMethod::Specialization => "specialization",
        RankMethod::Symbolic => "symbolic",
    }
}

fn matrix(cli: &Cli) -> Outcome {
    let n = cli.level()?;
    let order = match cli.order {
        Some(k) => k,
        None => adaptive_rank(n, cli.t).order,
    };
    let cap = DegreeCap(4 * enumerate_lambda(n).len());
    let m = evaluation_matrix(n, cli.t, order, cap)?;
    if cli.json() {
        let entries: Vec<Vec<String>> = m.entries.iter().map(|r| r.iter().map(|e| e.to_text()).collect()).collect();
        return Ok(render(json!({
            "regime": m.regime.to_string(),
            "n": n,
            "order": order,
            "columns": m.columns.iter().map(labeled_json).collect::<Vec<_>>(),
            "rows": m.row_labels,
            "entries": entries,
            "rank": m.rank,
            "method": method_name(m.method),
        })));
    }
    let mut out = String::new();
    let cols: Vec<String> = m.columns.iter().map(|l| l.to_string()).collect();
    writeln!(out, "columns: {}", cols.join(" ")).unwrap();
    for (label, row) in m.row_labels.iter().zip(&m.entries) {
        let cells: Vec<String> = row.iter().map(|e| e.to_text()).collect();
        writeln!(out, "{label}: {}", cells.join(" | ")).unwrap();
    }
    writeln!(out, "rank {} of {} columns at K={order} ({})", m.rank, m.columns.len(), method_name(m.method)).unwrap();
    Ok(out)
}

fn family(cli: &Cli) -> Outcome {
    let n = cli.level()?;
    let fam = separating_family(n, cli.t)?;
    let verified = verify_family(&fam)?;
    if cli.json() {
        let members: Vec<Value> = fam
            .members
            .iter()
            .map(|m| {
                json!({
                    "numerators": m.numerators.iter().map(|c| c.to_text()).collect::<Vec<_>>(),
                    "denominator": m.denominator.to_text(),
                })
            })
            .collect();
        return Ok(render(json!({
            "regime": fam.regime.to_string(),
            "n": n,
            "order": fam.order,
            "columns": fam.columns.iter().map(labeled_json).collect::<Vec<_>>(),
            "rows": fam.row_labels,
            "members": members,
            "verified": verified,
        })));
    }
    let mut out = String::new();
    for (i, (member, col)) in fam.members.iter().zip(&fam.columns).enumerate() {
        let terms: Vec<String> = member
            .numerators
            .iter()
            .zip(&fam.row_labels)
            .filter(|(c, _)| !c.is_empty())
            .map(|(c, label)| format!("({c})*{label}"))
            .collect();
        writeln!(out, "p{} [{col}] = ({}) / ({})", i + 1, terms.join(" + "), member.denominator).unwrap();
    }
    writeln!(out, "unitriangular on representatives: {}", if verified { "yes" } else { "NO" }).unwrap();
    Ok(out)
}

fn semisimple(cli: &Cli) -> Outcome {
    let n = cli.level()?;
    let ss = is_semisimple(n, cli.t);
    let predicate = theorem1_predicate(n, cli.t);
    if cli.json() {
        return Ok(render(json!({
            "regime": cli.t.to_string(),
            "n": n,
            "semisimple": ss,
            "center_is_wheel_predicate": ss.then_some(predicate),
        })));
    }
    let mut out = format!("B_{n} at t={}: {}\n", cli.t, if ss { "semisimple" } else { "not semisimple" });
    match conjecture_note(n, cli.t) {
        Some(note) => writeln!(out, "{note}").unwrap(),
        None => writeln!(out, "center equals the wheel subalgebra (classification): {predicate}").unwrap(),
    }
    Ok(out)
}

fn blocks(cli: &Cli) -> Outcome {
    if cli.shape.is_some() {
        let a = cli.labeled()?;
        let b = LabeledPartition::at_level(cli.shape2()?.clone(), a.level)?;
        let check = block_check(&a, &b, cli.t)?;
        if cli.json() {
            return Ok(render(json!({
                "regime": cli.t.to_string(),
                "lambda": labeled_json(&a),
                "mu": labeled_json(&b),
                "equivalent": check.equivalent,
                "reason": check.reason,
            })));
        }
        let mut out = format!("{a} and {b}: {}\n", if check.equivalent { "same block" } else { "different blocks" });
        if let Some(reason) = check.reason {
            writeln!(out, "{reason}").unwrap();
        }
        return Ok(out);
    }
    let n = cli.level()?;
    let report = block_partition_with(n, cli.t, cli.parallel);
    if cli.json() {
        let blocks: Vec<Value> = report.blocks.iter().map(|c| Value::Array(c.iter().map(labeled_json).collect())).collect();
        return Ok(render(json!({
            "regime": report.regime.to_string(),
            "n": n,
            "semisimple": report.semisimple,
            "blocks": blocks,
            "agrees_with_W": report.agrees_with_w,
            "closure_added": labeled_pairs_json(&report.closure_added),
        })));
    }
    let mut out = format!(
        "n={n} t={}: {} blocks ({})\n",
        report.regime,
        report.blocks.len(),
        if report.semisimple { "semisimple" } else { "not semisimple" }
    );
    for (i, block) in report.blocks.iter().enumerate() {
        let members: Vec<String> = block.iter().map(|l| l.to_string()).collect();
        writeln!(out, "block {}: {}", i + 1, members.join(" ")).unwrap();
    }
    writeln!(out, "agrees with signature classes: {}", report.agrees_with_w).unwrap();
    for (a, b) in &report.closure_added {
        writeln!(out, "joined by transitivity only: {a} {b}").unwrap();
    }
    Ok(out)
}

fn verify_blocks(cli: &Cli) -> Outcome {
    let n = cli.level()?;
    let holds = verify_block_theorem(n, cli.t)?;
    if cli.json() {
        return Ok(render(json!({"regime": cli.t.to_string(), "n": n, "holds": holds})));
    }
    Ok(format!(
        "n={n} t={}: blocks {} signature classes\n",
        cli.t,
        if holds { "coincide with" } else { "DIFFER from" }
    ))
}

fn idempotent(cli: &Cli) -> Outcome {
    let l = cli.labeled()?;
    let paths = all_paths(l.level);
    let diag = spectral_idempotent_on(l.level, &l.shape, cli.t, &paths, cli.parallel)?;
    let selected = diag.selected();
    if cli.json() {
        let path = selected.first().map(|t| t.shapes().iter().map(|p| json!(p.to_text())).collect::<Vec<_>>());
        return Ok(render(json!({
            "n": l.level,
            "lambda": l.shape.to_text(),
            "selected_path": path,
            "all_zero_elsewhere": selected.len() == 1,
        })));
    }
    let mut out = format!("e({l}) over {} paths\n", paths.len());
    for t in &selected {
        writeln!(out, "selected: {t}").unwrap();
    }
    writeln!(out, "zero on the other {} paths", paths.len() - selected.len()).unwrap();
    Ok(out)
}

fn graph(cli: &Cli) -> Outcome {
    let n = cli.level()?;
    let g = branching_graph(n, cli.t);
    if cli.json() {
        let edges: Vec<Value> = g
            .edges
            .iter()
            .map(|e| json!({"level": e.level, "from": e.from.to_text(), "to": e.to.to_text(), "value": e.value.to_text()}))
            .collect();
        let levels: Vec<Vec<String>> = g.levels.iter().map(|l| l.iter().map(|p| p.to_text()).collect()).collect();
        return Ok(render(json!({"regime": cli.t.to_string(), "levels": levels, "edges": edges})));
    }
    Ok(g.to_dot())
}

fn run(cli: &Cli) -> Outcome {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Graph) {
        return Err(Failure::Usage("--format dot is only available for graph".into()));
    }
    if let (Some(shape), Some(n)) = (&cli.shape, cli.n) {
        if !matches!(cli.command, Command::Pairs) {
            defect_of(shape, n)?;
        }
    }
    match cli.command {
        Command::Lambda => lambda(cli),
        Command::Paths => paths(cli),
        Command::Contents => contents(cli),
        Command::Wheel => wheel(cli),
        Command::Signature => signature_cmd(cli),
        Command::Pairs => pairs(cli),
        Command::Separate => separate(cli),
        Command::Matrix => matrix(cli),
        Command::Family => family(cli),
        Command::Semisimple => semisimple(cli),
        Command::Blocks => blocks(cli),
        Command::VerifyBlocks => verify_blocks(cli),
        Command::Idempotent => idempotent(cli),
        Command::Graph => graph(cli),
        Command::Selfcheck => selfcheck::run(cli.level()?, cli.json()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            let mut cmd = Cli::command();
            cmd.error(clap::error::ErrorKind::MissingRequiredArgument, msg).exit()
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.kind());
            ExitCode::from(1)
        }
    }
}
