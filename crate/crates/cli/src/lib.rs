//! Command-line front end: argument parsing, commands and report rendering.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use wmin_core::verify::{self, Check, Status, CHECK_GROUPS};
use wmin_core::wdata::{central_charge, classical_series, WData};
use wmin_core::{build_algebra, parse_spec, root_system, AlgebraSpec, Error, Rational};

#[derive(Parser, Debug)]
#[command(name = "wmin", version, about = "Exact unitarity data for minimal W-algebras")]
pub struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the structure constants of the algebra to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub dump_algebra: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Component data, dual Coxeter number and central charge.
    Info { spec: String },
    /// Verdict at one level.
    Classify {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// The first unitary levels.
    Unitary {
        spec: String,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Roots of the collapsing polynomial and their verdicts.
    Collapsing { spec: String },
    /// c(k) at one level.
    CentralCharge {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// The other level with the same central charge.
    PartnerLevel {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// Unitary discrete series: Virasoro (n=0), Neveu-Schwarz (n=1), N=2 (n=2).
    Series {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: i64,
    },
    /// Run check groups on one algebra.
    Verify {
        spec: String,
        /// Comma separated subset of table2,involution,halfform,jacobi,k14,goodchoice,partner.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
    },
    /// Every family at the default parameter samples.
    VerifyAll,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: Vec<String>,
    pub spec: Option<String>,
    pub results: Value,
    pub checks: Vec<Check>,
    pub exit_code: i32,
    /// Set for `--help` and `--version`, printed verbatim.
    pub text: Option<String>,
    pub json: bool,
}

impl Report {
    fn new(argv: &[String]) -> Self {
        Report { command: argv.to_vec(), spec: None, results: json!({}), checks: Vec::new(), exit_code: 0, text: None, json: false }
    }

    fn finish(mut self) -> Self {
        if self.exit_code == 0 && self.checks.iter().any(|c| c.status == Status::Fail) {
            self.exit_code = 1;
        }
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "spec": self.spec,
            "results": self.results,
            "checks": self.checks.iter().map(|c| serde_json::to_value(c).expect("serializable")).collect::<Vec<_>>(),
            "exit_code": self.exit_code,
        })
    }

    /// Text or JSON as selected on the command line.
    pub fn render(&self) -> String {
        if let Some(t) = &self.text {
            return t.clone();
        }
        if self.json {
            return serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n";
        }
        let mut out = format!("command: {}\n", self.command.join(" "));
        if let Some(s) = &self.spec {
            out += &format!("spec: {s}\n");
        }
        if let Value::Object(map) = &self.results {
            let w = map.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in map {
                let v = match v {
                    Value::String(s) => s.clone(),
                    v => v.to_string(),
                };
                out += &format!("  {k:<w$}  {v}\n");
            }
        }
        if !self.checks.is_empty() {
            let w = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
            for c in &self.checks {
                let st = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Flagged => "flag",
                };
                let pad = w - c.name.chars().count();
                out += &format!("{st}  {}{}  {}\n", c.name, " ".repeat(pad), c.witness);
            }
        }
        out
    }
}

fn fail(name: &str, witness: impl ToString) -> Check {
    Check { name: name.into(), status: Status::Fail, witness: witness.to_string() }
}

fn pass(name: &str, witness: impl ToString) -> Check {
    Check { name: name.into(), status: Status::Pass, witness: witness.to_string() }
}

fn parse_level(s: &str) -> Result<Rational, Error> {
    // exact rationals only
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!("level must be an exact rational, got {s:?}")));
    }
    s.trim().parse()
}

fn z_pairs(wd: &WData) -> Value {
    json!(wd.components.iter().map(|c| json!([c.z.coeff(1), c.z.coeff(0)])).collect::<Vec<_>>())
}

fn info(spec: &AlgebraSpec) -> Result<Value, Error> {
    let datum = root_system(spec)?;
    let h = wmin_core::catalog::dual_coxeter(&datum)?;
    let mut m = Map::new();
    m.insert("family".into(), json!(format!("{:?}", spec.family)));
    m.insert("dim".into(), json!(datum.dim()));
    m.insert("sdim".into(), json!(datum.superdimension()));
    m.insert("rank".into(), json!(datum.rank()));
    m.insert("h_dual".into(), json!(h));
    m.insert("central_charge".into(), json!(central_charge(spec)?));
    match WData::new(spec) {
        Ok(wd) => {
            m.insert("z".into(), z_pairs(&wd));
            m.insert("u".into(), json!(wd.components.iter().map(|c| &c.u).collect::<Vec<_>>()));
            m.insert("hbar".into(), json!(wd.components.iter().map(|c| &c.hbar).collect::<Vec<_>>()));
            m.insert("chi".into(), json!(wd.components.iter().map(|c| &c.chi).collect::<Vec<_>>()));
            m.insert("natural".into(), json!(wd.components.iter().map(|c| c.name()).collect::<Vec<_>>()));
            m.insert("collapsing_poly".into(), json!(wd.collapsing_poly()?));
            m.insert("collapsing_levels".into(), json!(wd.collapsing_levels()?));
        }
        Err(Error::AbelianGNatural(_)) => {
            m.insert("natural".into(), json!("abelian"));
        }
        Err(e) => return Err(e),
    }
    Ok(Value::Object(m))
}

fn classify(spec: &AlgebraSpec, k: &Rational) -> Result<Value, Error> {
    let cl = WData::new(spec)?.classify(k)?;
    let target = match &cl.verdict {
        wmin_core::wdata::UnitarityVerdict::CollapsingUnitary(t) | wmin_core::wdata::UnitarityVerdict::CollapsingNonUnitary(t) => {
            json!(t)
        }
        _ => Value::Null,
    };
    Ok(json!({"level": cl.level, "verdict": cl.verdict.name(), "target": target, "c": cl.c}))
}

fn unitary(spec: &AlgebraSpec, count: usize) -> Result<Value, Error> {
    let wd = WData::new(spec)?;
    let levels = match wd.unitary_levels(count) {
        Ok(l) => l,
        Err(Error::EmptySet(_)) => Vec::new(),
        Err(e) => return Err(e),
    };
    let list: Vec<Value> = levels.iter().map(|(k, c)| json!({"k": k, "c": c})).collect();
    Ok(json!({"empty": list.is_empty(), "levels": list}))
}

fn collapsing(spec: &AlgebraSpec) -> Result<Value, Error> {
    let wd = WData::new(spec)?;
    let mut list = Vec::new();
    for k in wd.collapsing_levels()? {
        let cl = classify(spec, &k)?;
        list.push(cl);
    }
    Ok(json!({"p": wd.collapsing_poly()?, "levels": list}))
}

fn series(n: u32, p: i64, checks: &mut Vec<Check>) -> Result<Value, Error> {
    let closed = classical_series(n, p)?;
    let spec = AlgebraSpec::spo(n)?;
    let k = &Rational::new(1, p) - &Rational::one();
    let c = central_charge(&spec)?.eval(&k)?;
    checks.push(if c == closed {
        pass("series/closed-form", format!("c({k}) for {spec} equals the closed form"))
    } else {
        fail("series/closed-form", format!("c({k}) = {c}, closed form {closed}"))
    });
    Ok(json!({"n": n, "p": p, "level": k, "c": closed, "algebra": spec}))
}

fn verify_groups(sel: &Option<Vec<String>>) -> Vec<String> {
    match sel {
        Some(v) => v.iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => CHECK_GROUPS.iter().map(|s| s.to_string()).collect(),
    }
}

fn summary(checks: &[Check]) -> Value {
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    json!({"pass": count(Status::Pass), "fail": count(Status::Fail), "flagged": count(Status::Flagged)})
}

fn verify_all() -> (Value, Vec<Check>) {
    let samples = verify::default_samples();
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(samples.len());
    let mut results: Vec<Option<Vec<Check>>> = vec![None; samples.len()];
    let next = std::sync::atomic::AtomicUsize::new(0);
    let done = std::sync::Mutex::new(&mut results);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= samples.len() {
                    break;
                }
                let checks = verify::run_sample(&samples[i]);
                done.lock().expect("no poisoned lock")[i] = Some(checks);
            });
        }
    });
    let mut all = Vec::new();
    let mut rows = Vec::new();
    for (s, checks) in samples.iter().zip(results) {
        let checks = checks.expect("every sample ran");
        let mut row = summary(&checks);
        row["sample"] = json!(s.to_string());
        rows.push(row);
        all.extend(checks.into_iter().map(|c| Check { name: format!("{s}: {}", c.name), ..c }));
    }
    (json!({"samples": rows, "total": summary(&all)}), all)
}

fn dump(spec: &AlgebraSpec, path: &PathBuf) -> Check {
    let r = build_algebra(spec).and_then(|a| {
        let text = serde_json::to_string_pretty(&a.alg.to_json()).expect("serializable");
        std::fs::write(path, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    });
    match r {
        Ok(()) => pass("dump-algebra", path.display()),
        Err(e) => fail("dump-algebra", e),
    }
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run(argv: &[String]) -> Report {
    let mut report = Report::new(argv);
    let cli = match Cli::try_parse_from(std::iter::once("wmin".to_string()).chain(argv.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            report.json = argv.iter().any(|a| a == "--json");
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                report.text = Some(e.render().to_string());
                return report;
            }
            report.checks.push(fail("usage", e.render().to_string().trim_end()));
            report.exit_code = 2;
            return report;
        }
    };
    report.json = cli.json;
    let spec_text = match &cli.command {
        Command::Info { spec }
        | Command::Classify { spec, .. }
        | Command::Unitary { spec, .. }
        | Command::Collapsing { spec }
        | Command::CentralCharge { spec, .. }
        | Command::PartnerLevel { spec, .. }
        | Command::Verify { spec, .. } => Some(spec.clone()),
        _ => None,
    };
    let spec = match spec_text.as_deref().map(parse_spec) {
        Some(Ok(s)) => {
            report.spec = Some(s.to_string());
            Some(s)
        }
        Some(Err(e)) => {
            report.checks.push(fail("usage", e));
            report.exit_code = 2;
            return report;
        }
        None => None,
    };
    let level = match &cli.command {
        Command::Classify { level, .. } | Command::CentralCharge { level, .. } | Command::PartnerLevel { level, .. } => {
            match parse_level(level) {
                Ok(k) => Some(k),
                Err(e) => {
                    report.checks.push(fail("usage", e));
                    report.exit_code = 2;
                    return report;
                }
            }
        }
        _ => None,
    };
    let s = || spec.as_ref().expect("command takes a spec");
    let k = || level.as_ref().expect("command takes a level");
    let result: Result<Value, Error> = match &cli.command {
        Command::Info { .. } => info(s()),
        Command::Classify { .. } => classify(s(), k()),
        Command::Unitary { count, .. } => unitary(s(), *count),
        Command::Collapsing { .. } => collapsing(s()),
        Command::CentralCharge { .. } => central_charge(s()).and_then(|c| {
            if *k() == -&wmin_core::catalog::dual_coxeter(&root_system(s())?)? {
                return Err(Error::PoleAtLevel(k().to_string()));
            }
            Ok(json!({"level": k(), "c": c.eval(k())?, "function": c}))
        }),
        Command::PartnerLevel { .. } => WData::new(s()).and_then(|wd| {
            let kp = wd.partner_level(k())?;
            Ok(json!({"level": k(), "partner": kp, "c": wd.central_charge_at(k())?}))
        }),
        Command::Series { n, p } => series(*n, *p, &mut report.checks),
        Command::Verify { checks, .. } => {
            let groups = verify_groups(checks);
            let refs: Vec<&str> = groups.iter().map(String::as_str).collect();
            report.checks.extend(verify::run_checks(s(), &refs));
            Ok(json!({"groups": groups, "summary": summary(&report.checks)}))
        }
        Command::VerifyAll => {
            let (v, checks) = verify_all();
            report.checks.extend(checks);
            Ok(v)
        }
    };
    match result {
        Ok(v) => report.results = v,
        Err(e) => report.checks.push(fail("error", e)),
    }
    if let (Some(path), Some(spec)) = (&cli.dump_algebra, &spec) {
        report.checks.push(dump(spec, path));
    }
    report.finish()
}
