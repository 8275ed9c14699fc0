use std::io::Write;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use super::{CheckArgs, Command, EnumerateArgs, Format, PolyArgs, SampleArgs, ScanArgs, StatsArgs};
use crate::canon::canonical_code;
use crate::enumerate::enumerate_rooted_trees;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::poly::{
    compute, descent_poly, log_concavity_violation, symmetry_violation, unimodality_violation, Algorithm,
    DescentPolynomial,
};
use crate::stats::{
    clt_scan, closed_form_moments, exact_pmf, fmt_sig, moments_from_poly, rational_to_f64, sample_descents,
    variance_lower_bound, MomentSummary, ScanConfig, GENERATOR,
};

pub(super) fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Poly(args) => cmd_poly(&args, out),
        Command::Check(args) => cmd_check(&args, out),
        Command::Stats(args) => cmd_stats(&args, out),
        Command::CltScan(args) => cmd_clt_scan(&args, out),
        Command::Enumerate(args) => cmd_enumerate(&args, out),
        Command::Sample(args) => cmd_sample(&args, out),
    }
}

fn coeff_strings(p: &DescentPolynomial) -> Vec<String> {
    p.coeffs().iter().map(BigUint::to_string).collect()
}

#[derive(Serialize)]
struct PolyOutput {
    n: usize,
    edges: usize,
    coeffs: Vec<String>,
    algorithm: &'static str,
}

fn cmd_poly(args: &PolyArgs, out: &mut dyn Write) -> Result<()> {
    let sources = args.input.load()?;
    let algorithm: Algorithm = args.algorithm.into();
    if args.format == Format::Csv {
        let multi = sources.len() > 1;
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: &[&str] = if multi { &["forest", "k", "coeff"] } else { &["k", "coeff"] };
        w.write_record(header).map_err(csv_err)?;
        for (i, src) in sources.iter().enumerate() {
            let p = compute(&src.forest, algorithm, args.brute_cap)?;
            for (k, c) in p.coeffs().iter().enumerate() {
                let mut row = Vec::with_capacity(3);
                if multi {
                    row.push((i + 1).to_string());
                }
                row.push(k.to_string());
                row.push(c.to_string());
                w.write_record(&row).map_err(csv_err)?;
            }
        }
        out.write_all(&w.into_inner().map_err(|e| Error::Io(e.into_error()))?)?;
        return Ok(());
    }
    for src in &sources {
        let p = compute(&src.forest, algorithm, args.brute_cap)?;
        match args.format {
            Format::Json => {
                let body = PolyOutput {
                    n: src.forest.size(),
                    edges: p.edges(),
                    coeffs: coeff_strings(&p),
                    algorithm: algorithm.name(),
                };
                writeln!(out, "{}", serde_json::to_string(&body).expect("serializable"))?;
            }
            _ => {
                writeln!(out, "n: {}", src.forest.size())?;
                writeln!(out, "edges: {}", p.edges())?;
                writeln!(out, "algorithm: {algorithm}")?;
                writeln!(out, "coeffs: {p}")?;
            }
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

#[derive(Serialize)]
struct CheckOutput {
    coeffs: Vec<String>,
    symmetric: bool,
    symmetric_violation: Option<usize>,
    unimodal: bool,
    unimodal_violation: Option<usize>,
    log_concave: bool,
    log_concave_violation: Option<usize>,
}

impl CheckOutput {
    fn of(p: &DescentPolynomial) -> Self {
        let s = symmetry_violation(p.coeffs());
        let u = unimodality_violation(p.coeffs());
        let l = log_concavity_violation(p.coeffs());
        CheckOutput {
            coeffs: coeff_strings(p),
            symmetric: s.is_none(),
            symmetric_violation: s,
            unimodal: u.is_none(),
            unimodal_violation: u,
            log_concave: l.is_none(),
            log_concave_violation: l,
        }
    }

    fn all_hold(&self) -> bool {
        self.symmetric && self.unimodal && self.log_concave
    }
}

fn verdict(holds: bool, at: Option<usize>) -> String {
    match (holds, at) {
        (true, _) => "true".to_string(),
        (false, Some(k)) => format!("false (index {k})"),
        (false, None) => "false".to_string(),
    }
}

fn write_check(out: &mut dyn Write, label: Option<&str>, c: &CheckOutput, format: Format) -> Result<()> {
    if format == Format::Json {
        let mut value = serde_json::to_value(c).expect("serializable");
        if let Some(label) = label {
            value["input"] = json!(label);
        }
        writeln!(out, "{value}")?;
        return Ok(());
    }
    if let Some(label) = label {
        writeln!(out, "input: {label}")?;
    }
    writeln!(out, "coeffs: {}", c.coeffs.join(" "))?;
    writeln!(out, "symmetric: {}", verdict(c.symmetric, c.symmetric_violation))?;
    writeln!(out, "unimodal: {}", verdict(c.unimodal, c.unimodal_violation))?;
    writeln!(out, "log_concave: {}", verdict(c.log_concave, c.log_concave_violation))?;
    Ok(())
}

fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> Result<()> {
    let chosen = [!args.input.is_empty(), args.coeffs.is_some(), args.enumerate.is_some()]
        .iter()
        .filter(|&&b| b)
        .count();
    if chosen != 1 {
        return Err(Error::InvalidParameter(
            "give exactly one of a forest input, --coeffs or --enumerate".into(),
        ));
    }
    if let Some(text) = &args.coeffs {
        let p = DescentPolynomial::parse(text)?;
        return write_check(out, None, &CheckOutput::of(&p), args.format);
    }
    if let Some(n) = args.enumerate {
        let mut counts = [0usize; 4];
        let mut violators = Vec::new();
        for tree in enumerate_rooted_trees(n, args.enum_cap)? {
            let c = CheckOutput::of(&descent_poly(&tree)?);
            counts[0] += 1;
            counts[1] += c.symmetric as usize;
            counts[2] += c.unimodal as usize;
            counts[3] += c.log_concave as usize;
            if !c.all_hold() {
                violators.push((tree.to_parent_array(), c));
            }
        }
        if args.format == Format::Json {
            let v: Vec<_> = violators
                .iter()
                .map(|(parents, c)| {
                    let mut value = serde_json::to_value(c).expect("serializable");
                    value["parent"] = json!(parents);
                    value
                })
                .collect();
            let summary = json!({
                "n": n, "trees": counts[0], "symmetric": counts[1], "unimodal": counts[2],
                "log_concave": counts[3], "violations": v,
            });
            writeln!(out, "{summary}")?;
        } else {
            writeln!(
                out,
                "n: {n}\ntrees: {}\nsymmetric: {}/{0}\nunimodal: {}/{0}\nlog_concave: {}/{0}",
                counts[0], counts[1], counts[2], counts[3]
            )?;
            for (parents, c) in &violators {
                write_check(out, Some(&format!("parent:{parents}")), c, Format::Plain)?;
            }
        }
        return Ok(());
    }
    let sources = args.input.load()?;
    let multi = sources.len() > 1;
    for src in &sources {
        let c = CheckOutput::of(&descent_poly(&src.forest)?);
        write_check(out, multi.then_some(src.label.as_str()), &c, args.format)?;
    }
    Ok(())
}

fn decimal(x: &BigRational) -> String {
    fmt_sig(rational_to_f64(x))
}

fn moments_json(m: &MomentSummary) -> serde_json::Value {
    json!({
        "mean": m.mean.to_string(),
        "variance": m.variance.to_string(),
        "mean_decimal": decimal(&m.mean),
        "variance_decimal": decimal(&m.variance),
    })
}

fn cmd_stats(args: &StatsArgs, out: &mut dyn Write) -> Result<()> {
    let sources = args.input.load()?;
    for src in &sources {
        let f = &src.forest;
        let closed = closed_form_moments(f);
        let from_poly = moments_from_poly(&descent_poly(f)?, f.size())?;
        let bound = if f.is_tree() && f.size() >= 2 {
            Some(variance_lower_bound(f.size(), f.max_down_degree())?)
        } else {
            None
        };
        if args.format == Format::Json {
            let value = json!({
                "n": f.size(),
                "edges": f.edge_count(),
                "max_down_degree": f.max_down_degree(),
                "closed_form": moments_json(&closed),
                "polynomial": moments_json(&from_poly),
                "agree": closed.same_moments(&from_poly),
                "variance_lower_bound": bound.as_ref().map(|b| b.to_string()),
            });
            writeln!(out, "{value}")?;
            continue;
        }
        writeln!(out, "n: {}", f.size())?;
        writeln!(out, "edges: {}", f.edge_count())?;
        writeln!(out, "max_down_degree: {}", f.max_down_degree())?;
        for m in [&closed, &from_poly] {
            writeln!(out, "mean ({}): {} ~ {}", m.source, m.mean, decimal(&m.mean))?;
            writeln!(out, "variance ({}): {} ~ {}", m.source, m.variance, decimal(&m.variance))?;
        }
        writeln!(out, "agree: {}", closed.same_moments(&from_poly))?;
        match &bound {
            Some(b) => writeln!(out, "variance_lower_bound: {b} ~ {}", decimal(b))?,
            None => writeln!(out, "variance_lower_bound: n/a")?,
        }
    }
    Ok(())
}

fn cmd_clt_scan(args: &ScanArgs, out: &mut dyn Write) -> Result<()> {
    let family: Family = args.family.parse()?;
    let cfg = ScanConfig {
        sizes: args.sizes.clone(),
        mode: args.mode.into(),
        janson_m: args.m,
        c: args.c,
        epsilon: args.epsilon,
        seed: args.seed,
        trials: args.trials,
        exact_cap: args.exact_cap,
        ..ScanConfig::default()
    };
    let report = clt_scan(family, &cfg)?;
    let text = match args.format {
        Format::Csv => report.to_csv(),
        _ => report.to_json() + "\n",
    };
    match &args.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<()> {
    let mut classes = 0usize;
    let mut bad = [0usize; 3];
    for tree in enumerate_rooted_trees(args.n, args.enum_cap)? {
        let p = descent_poly(&tree)?;
        let c = CheckOutput::of(&p);
        classes += 1;
        bad[0] += !c.symmetric as usize;
        bad[1] += !c.unimodal as usize;
        bad[2] += !c.log_concave as usize;
        let code = canonical_code(&tree);
        if args.format == Format::Json {
            let line = json!({
                "code": code.as_str(), "parent": tree.to_parent_array(), "coeffs": c.coeffs,
                "symmetric": c.symmetric, "unimodal": c.unimodal, "log_concave": c.log_concave,
            });
            writeln!(out, "{line}")?;
        } else {
            writeln!(
                out,
                "{code}\t{p}\tsymmetric={} unimodal={} log_concave={}",
                c.symmetric, c.unimodal, c.log_concave
            )?;
        }
        out.flush()?;
    }
    if args.format == Format::Json {
        let summary = json!({"summary": {
            "n": args.n, "classes": classes, "symmetric_violations": bad[0],
            "unimodal_violations": bad[1], "log_concave_violations": bad[2],
        }});
        writeln!(out, "{summary}")?;
    } else {
        writeln!(
            out,
            "# n={} classes={classes} symmetric_violations={} unimodal_violations={} log_concave_violations={}",
            args.n, bad[0], bad[1], bad[2]
        )?;
    }
    Ok(())
}

fn cmd_sample(args: &SampleArgs, out: &mut dyn Write) -> Result<()> {
    let sources = args.input.load()?;
    for src in &sources {
        let f = &src.forest;
        let run = sample_descents(f, args.trials, args.seed)?;
        let tv = if f.size() <= args.exact_cap {
            Some(run.tv_to(&exact_pmf(&descent_poly(f)?, f.size())?))
        } else {
            None
        };
        if args.format == Format::Json {
            let value = json!({
                "n": f.size(), "edges": f.edge_count(), "seed": run.seed, "trials": run.trials,
                "generator": GENERATOR, "histogram": run.histogram,
                "tv_to_exact": tv.map(fmt_sig),
            });
            writeln!(out, "{value}")?;
            continue;
        }
        let hist: Vec<String> = run.histogram.iter().map(u64::to_string).collect();
        writeln!(out, "n: {}", f.size())?;
        writeln!(out, "edges: {}", f.edge_count())?;
        writeln!(out, "seed: {}", run.seed)?;
        writeln!(out, "trials: {}", run.trials)?;
        writeln!(out, "generator: {GENERATOR}")?;
        writeln!(out, "histogram: {}", hist.join(" "))?;
        match tv {
            Some(tv) => writeln!(out, "tv_to_exact: {}", fmt_sig(tv))?,
            None => writeln!(out, "tv_to_exact: n/a")?,
        }
    }
    Ok(())
}
