use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use amgroups_core::amcheck::{certify, Analysis, Limits, Property, PropertyReport};
use amgroups_core::chartab::lift_value;
use amgroups_core::construct::{build_str, parse_group_text};
use amgroups_core::corpus::{self, Tier};
use amgroups_core::{BitSet, Error, PermGroup, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Decide monomiality properties of finite permutation groups.
///
/// Groups are written as expressions: S<n>, A<n>, C<n>, D<order>, SL2_3,
/// GL2_3, WB<n>, products `GxH`, wreath products `GwrH`, parentheses, and
/// `file:<path>` for a generator file.
#[derive(Parser, Debug)]
#[command(name = "amgroups", version)]
pub struct Cli {
    /// Refuse groups with more elements than this.
    #[arg(long, global = true, default_value_t = amgroups_core::DEFAULT_MAX_ORDER)]
    pub max_order: usize,

    /// Refuse groups with more subgroups than this.
    #[arg(long, global = true, default_value_t = amgroups_core::subgroups::DEFAULT_SUBGROUP_LIMIT)]
    pub subgroup_limit: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check monomiality properties.
    Props {
        group: String,
        /// Comma-separated: monomial, quasi_monomial, am, nam, sam.
        #[arg(long, value_delimiter = ',', value_parser = parse_property,
              default_value = "monomial,quasi_monomial,am,nam,sam")]
        properties: Vec<Property>,
        #[command(flatten)]
        output: Output,
    },
    /// Print the character table.
    Chartab {
        group: String,
        /// Render values as cyclotomic integers.
        #[arg(long)]
        lift: bool,
    },
    /// List conjugacy classes of subgroups.
    Subgroups { group: String },
    /// Print the constituent-set profile of sums of monomial characters.
    Lt { group: String },
    /// Check relative almost monomiality with respect to a normal subgroup.
    Relative {
        group: String,
        #[command(flatten)]
        normal: NormalSelector,
        #[command(flatten)]
        output: Output,
    },
    /// Re-validate a JSON report produced by `props` or `relative`.
    Certify { group: String, report: PathBuf },
    /// Run the built-in catalog.
    Corpus {
        tier: TierArg,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Args, Debug)]
pub struct Output {
    /// Write the report(s) as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct NormalSelector {
    /// Subgroup class id as listed by `subgroups`.
    #[arg(long)]
    pub normal_index: Option<usize>,
    /// Generator file for the normal subgroup, in the group file format.
    #[arg(long)]
    pub normal_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TierArg {
    Fast,
    Slow,
}

fn parse_property(s: &str) -> std::result::Result<Property, String> {
    s.trim().parse().map_err(|e: Error| e.to_string())
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    let limits = Limits {
        max_order: cli.max_order,
        subgroup_limit: cli.subgroup_limit,
    };
    match cli.command {
        Command::Props {
            group,
            properties,
            output,
        } => {
            let a = Analysis::from_spec(&group, limits)?.with_threads(output.threads)?;
            header(out, &a)?;
            let mut reports = Vec::new();
            for p in properties {
                let rep = a.check(p)?;
                verdict_line(out, &rep)?;
                reports.push(rep);
            }
            write_reports(output.json.as_deref(), &reports)?;
            Ok(0)
        }
        Command::Chartab { group, lift } => {
            let a = Analysis::from_spec(&group, limits)?;
            chartab(out, &a, lift)?;
            Ok(0)
        }
        Command::Subgroups { group } => {
            let a = Analysis::from_spec(&group, limits)?;
            subgroups(out, &a)?;
            Ok(0)
        }
        Command::Lt { group } => {
            let a = Analysis::from_spec(&group, limits)?;
            lt(out, &a)?;
            Ok(0)
        }
        Command::Relative {
            group,
            normal,
            output,
        } => {
            let a = Analysis::from_spec(&group, limits)?.with_threads(output.threads)?;
            let n = match (normal.normal_index, normal.normal_file) {
                (Some(id), _) => a.normal_subgroup_by_class(id)?,
                (None, Some(path)) => subgroup_from_file(a.group(), &path)?,
                (None, None) => unreachable!("clap requires a selector"),
            };
            header(out, &a)?;
            let rep = a.is_relative_am(&n)?;
            if let Some(ns) = &rep.normal_subgroup {
                writeln!(out, "normal subgroup: class {} order {}", ns.class_id, ns.order)?;
            }
            verdict_line(out, &rep)?;
            write_reports(output.json.as_deref(), std::slice::from_ref(&rep))?;
            Ok(0)
        }
        Command::Certify { group, report } => {
            let g = build_str(&group, limits.max_order)?;
            let text = fs::read_to_string(&report)?;
            let reports = read_reports(&text)?;
            let mut all = true;
            for rep in &reports {
                let outcome = certify(&g, rep, limits)?;
                all &= outcome.valid;
                let status = if outcome.valid { "valid" } else { "invalid" };
                writeln!(out, "{}: {status}", rep.property)?;
                for p in &outcome.problems {
                    writeln!(out, "  {p}")?;
                }
            }
            writeln!(out, "certificate: {}", if all { "valid" } else { "invalid" })?;
            Ok(0)
        }
        Command::Corpus { tier, threads } => {
            let tier = match tier {
                TierArg::Fast => Tier::Fast,
                TierArg::Slow => Tier::Slow,
            };
            corpus_run(out, tier, limits, threads)
        }
    }
}

fn header(out: &mut dyn Write, a: &Analysis) -> Result<()> {
    let info = a.group_info();
    writeln!(
        out,
        "group {}: order {}, degree {}, {} irreducibles",
        info.spec, info.order, info.degree, info.num_irreducibles
    )?;
    Ok(())
}

fn verdict_line(out: &mut dyn Write, rep: &PropertyReport) -> Result<()> {
    match rep.uncovered_pair {
        Some([j, k]) if !rep.verdict => {
            writeln!(out, "{}: false (uncovered pair [{j},{k}])", rep.property)?
        }
        _ => writeln!(out, "{}: {}", rep.property, rep.verdict)?,
    }
    Ok(())
}

fn write_reports(path: Option<&Path>, reports: &[PropertyReport]) -> Result<()> {
    let Some(path) = path else { return Ok(()) };
    let text = if let [single] = reports {
        serde_json::to_string_pretty(single)?
    } else {
        serde_json::to_string_pretty(reports)?
    };
    fs::write(path, text + "\n")?;
    Ok(())
}

fn read_reports(text: &str) -> Result<Vec<PropertyReport>> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    Ok(if value.is_array() {
        serde_json::from_value(value)?
    } else {
        vec![serde_json::from_value(value)?]
    })
}

fn subgroup_from_file(g: &PermGroup, path: &Path) -> Result<BitSet> {
    let text = fs::read_to_string(path)?;
    let (degree, gens) = parse_group_text(path, &text)?;
    if degree != g.degree() {
        return Err(Error::DegreeMismatch(degree, g.degree()));
    }
    let idx = gens
        .iter()
        .map(|p| g.index_of(p).ok_or(Error::NotSubgroup))
        .collect::<Result<Vec<_>>>()?;
    Ok(g.closure(&idx))
}

fn chartab(out: &mut dyn Write, a: &Analysis, lift: bool) -> Result<()> {
    let ctx = a.context();
    let t = a.table();
    let cd = t.classes();
    writeln!(
        out,
        "|G| = {}  r = {}  p = {}  e = {}",
        a.group().order(),
        t.len(),
        ctx.prime(),
        ctx.exponent()
    )?;
    let sizes: Vec<String> = cd.sizes().iter().map(|s| s.to_string()).collect();
    let orders: Vec<String> = (0..cd.len()).map(|c| cd.element_order(c).to_string()).collect();
    writeln!(out, "class sizes:  {}", sizes.join(" "))?;
    writeln!(out, "class orders: {}", orders.join(" "))?;
    for i in 0..t.len() {
        let cells: Vec<String> = if lift {
            (0..t.len())
                .map(|j| lift_value(ctx, a.group(), t, i, j).map(|v| v.to_string()))
                .collect::<Result<_>>()?
        } else {
            t.row(i).iter().map(|v| v.to_string()).collect()
        };
        let sep = if lift { " | " } else { " " };
        writeln!(out, "X{i} (degree {}): {}", t.degree(i), cells.join(sep))?;
    }
    Ok(())
}

fn subgroups(out: &mut dyn Write, a: &Analysis) -> Result<()> {
    let l = a.lattice();
    writeln!(out, "{} subgroups in {} classes", l.len(), l.classes().len())?;
    for (id, class) in l.classes().iter().enumerate() {
        let rec = l.record(class.rep);
        let mut flags = Vec::new();
        for (set, name) in [
            (rec.normal, "normal"),
            (rec.subnormal, "subnormal"),
            (rec.abelian, "abelian"),
        ] {
            if set {
                flags.push(name);
            }
        }
        let flags = if flags.is_empty() {
            "-".to_string()
        } else {
            flags.join(",")
        };
        let gens = a.subgroup_ref(id).generators;
        let gens = if gens.is_empty() {
            "()".to_string()
        } else {
            gens.join(" ")
        };
        writeln!(
            out,
            "{id:>4}  order {:>5}  size {:>4}  {flags:<24} {gens}",
            rec.order,
            class.size()
        )?;
    }
    Ok(())
}

fn lt(out: &mut dyn Write, a: &Analysis) -> Result<()> {
    let p = a.lt_profile()?;
    let check = a.lt_crosscheck()?;
    writeln!(out, "r = {}  basic sets = {}  closure = {}", p.r, p.basic_sets.len(), p.closure.len())?;
    writeln!(out, "{:>3} {:>8} {:>8}", "t", "L[t]", "N(r,t)")?;
    for t in 1..=p.r {
        writeln!(out, "{t:>3} {:>8} {:>8}", p.l[t], p.n_rt[t])?;
    }
    writeln!(
        out,
        "am: {}  L[r-1] = r: {}  some L[t] >= N(r,t): {}  {}",
        check.am,
        check.all_but_one,
        check.threshold,
        if check.consistent() { "consistent" } else { "INCONSISTENT" }
    )?;
    Ok(())
}

fn corpus_run(out: &mut dyn Write, tier: Tier, limits: Limits, threads: usize) -> Result<u8> {
    let mut failures = 0;
    for entry in corpus::entries(tier) {
        let res = corpus::run_entry(entry, limits, threads)?;
        let verdicts: Vec<String> = res
            .verdicts
            .iter()
            .map(|(p, v)| format!("{p}={}", u8::from(*v)))
            .collect();
        let status = if !res.passed() {
            failures += 1;
            "FAIL"
        } else if res.observation {
            "observed"
        } else {
            "ok"
        };
        writeln!(
            out,
            "{:<8} order {:>4}  r {:>2}  {}  {status}",
            res.spec,
            res.order,
            res.irreducibles,
            verdicts.join(" ")
        )?;
        if !entry.note.is_empty() {
            writeln!(out, "         note: {}", entry.note)?;
        }
        for (p, v) in &res.mismatches {
            writeln!(out, "         expected {p}={v}")?;
        }
        if res.lt_consistent == Some(false) {
            writeln!(out, "         profile cross-check disagrees with coverage")?;
        }
    }
    writeln!(out, "{failures} failures")?;
    Ok(if failures == 0 { 0 } else { 1 })
}
