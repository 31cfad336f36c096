use std::fmt::Write as _;

use miquel_core::verify::{Check, ClaimReport, SuiteRun, Unit, VerifyReport, Witness};

fn unit_suffix(u: Unit) -> &'static str {
    match u {
        Unit::Angle => " rad",
        Unit::Circumradius => " R",
        Unit::Relative | Unit::Count => "",
    }
}

fn witness(w: &Witness) -> String {
    let [a, b, c] = w.triangle;
    let mut s = format!("trial {}: A=({:?}, {:?}) B=({:?}, {:?}) C=({:?}, {:?})", w.trial, a.x, a.y, b.x, b.y, c.x, c.y);
    if let Some(p) = w.point {
        write!(s, " P=({:?}, {:?})", p.x, p.y).unwrap();
    }
    s
}

fn claim_line(c: &ClaimReport) -> String {
    let status = if c.passed { "pass" } else { "FAIL" };
    let u = unit_suffix(c.unit);
    let detail = match c.check {
        Check::Below(limit) => format!("max {:.3e}{u} < {limit:.0e}{u}", c.worst),
        Check::Above(limit) => format!("min {:.3e}{u} > {limit:.0e}{u}", c.worst),
        Check::Zero => format!("{} failing", c.worst),
    };
    format!("  {status}  {:<28} n={:<6} {detail}", c.name, c.checked)
}

pub fn render_report(r: &VerifyReport) -> String {
    let mut out = String::new();
    let status = if r.passed { "PASS" } else { "FAIL" };
    writeln!(out, "suite {}  seed {}  trials {}  {status}", r.suite, r.seed, r.trials).unwrap();
    for c in &r.claims {
        writeln!(out, "{}", claim_line(c)).unwrap();
        if !c.passed {
            if let Some(w) = &c.witness {
                writeln!(out, "        worst instance {}", witness(w)).unwrap();
            }
        }
    }
    for (name, count) in &r.observations {
        writeln!(out, "  note  {name}: {count}").unwrap();
    }
    for f in &r.failures {
        writeln!(out, "  error trial {} {}: {}", f.trial, f.error, f.message).unwrap();
        if let Some(w) = &f.witness {
            writeln!(out, "        instance {}", witness(w)).unwrap();
        }
    }
    out
}

pub fn render_run(run: &SuiteRun) -> String {
    let mut out = String::new();
    for r in &run.reports {
        out.push_str(&render_report(r));
        out.push('\n');
    }
    let failed: Vec<&str> = run.reports.iter().filter(|r| !r.passed).map(|r| r.suite.as_str()).collect();
    if failed.is_empty() {
        writeln!(out, "{} suite(s) passed with seed {}", run.reports.len(), run.seed).unwrap();
    } else {
        writeln!(out, "{} of {} suite(s) failed with seed {}: {}", failed.len(), run.reports.len(), run.seed, failed.join(", "))
            .unwrap();
    }
    out
}
