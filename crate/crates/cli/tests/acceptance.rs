//! Acceptance gate. Each criterion prints one `PASS`/`FAIL` line; the test
//! fails if any line is `FAIL`. Tolerances, trial counts and time limits are
//! pinned here and compared against what the suites actually enforce, so a
//! loosened suite fails the gate instead of passing silently.

use std::time::{Duration, Instant};

use miquel_core::verify::{self, Check, VerifyReport, DEFAULT_SEED};

enum Pin {
    Below(f64),
    NoneFail,
}

struct ClaimPin {
    suite: &'static str,
    claim: &'static str,
    pin: Pin,
}

const fn below(suite: &'static str, claim: &'static str, tol: f64) -> ClaimPin {
    ClaimPin { suite, claim, pin: Pin::Below(tol) }
}

const fn none_fail(suite: &'static str, claim: &'static str) -> ClaimPin {
    ClaimPin { suite, claim, pin: Pin::NoneFail }
}

struct Criterion {
    id: u32,
    title: &'static str,
    suites: &'static [(&'static str, usize)],
    pins: &'static [ClaimPin],
    time_limit: Option<Duration>,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "Miquel circles concur",
        suites: &[("concurrency", 1000)],
        pins: &[below("concurrency", "miquel-residual", 1e-8)],
        time_limit: Some(Duration::from_secs(1)),
    },
    Criterion {
        id: 2,
        title: "angle equations and angle sextet",
        suites: &[("angle-equations", 500), ("sextet", 500)],
        pins: &[
            below("angle-equations", "equation-at-a", 1e-9),
            below("angle-equations", "equation-at-b", 1e-9),
            below("angle-equations", "equation-at-c", 1e-9),
            below("sextet", "predicted-vs-measured", 1e-8),
        ],
        time_limit: Some(Duration::from_secs(1)),
    },
    Criterion {
        id: 3,
        title: "eleven points with Miquel triangle similar to the host",
        suites: &[("eleven-points", 50)],
        pins: &[below("eleven-points", "interior-similarity", 1e-7), below("eleven-points", "exterior-similarity", 1e-7)],
        time_limit: Some(Duration::from_secs(5)),
    },
    Criterion {
        id: 4,
        title: "role transformations of O, H, incenter/excenters and Brocard points",
        suites: &[("circumcenter-role", 100), ("orthocenter-role", 100), ("in-excenter-role", 100), ("brocard-role", 100)],
        pins: &[
            below("circumcenter-role", "orthocenter-match", 1e-8),
            below("orthocenter-role", "in-excenter-match", 1e-8),
            below("in-excenter-role", "circumcenter-match", 1e-8),
            below("brocard-role", "angle-condition", 1e-8),
            below("brocard-role", "position", 1e-8),
        ],
        time_limit: Some(Duration::from_secs(2)),
    },
    Criterion {
        id: 5,
        title: "S-point median, M-point isosceles and arc conditions",
        suites: &[("s-point-median", 100), ("m-point-isosceles", 100), ("isosceles-arc", 100)],
        pins: &[
            below("s-point-median", "on-median", 1e-7),
            below("s-point-median", "acute-reflection", 1e-7),
            below("s-point-median", "obtuse-circle", 1e-7),
            below("s-point-median", "m-point-match", 1e-7),
            below("m-point-isosceles", "on-base-incenter-circle", 1e-7),
            below("isosceles-arc", "s-point-match", 1e-7),
        ],
        time_limit: None,
    },
    Criterion {
        id: 6,
        title: "isogonal conjugacy of S and M points, reflected pairs",
        suites: &[("isogonal-s-m", 200), ("reflected-pairs", 100)],
        pins: &[below("isogonal-s-m", "conjugate-match", 1e-8), below("reflected-pairs", "isogonal-angles", 1e-8)],
        time_limit: None,
    },
    Criterion {
        id: 7,
        title: "Miquel chains: mod-3 similarity, role cycles, fixed Brocard points",
        suites: &[("mod3", 50), ("seed-similarity", 50), ("role-cycles", 50)],
        pins: &[
            below("mod3", "pedal-chain", 1e-6),
            below("mod3", "rotated-chain", 1e-6),
            below("mod3", "rotation-invariance", 1e-6),
            below("seed-similarity", "circumcenter-and-s-points", 1e-6),
            below("seed-similarity", "orthocenter-and-m-points", 1e-6),
            below("seed-similarity", "brocard-points", 1e-6),
            none_fail("role-cycles", "o-h-l-cycle"),
            none_fail("role-cycles", "s-m-q-cycle"),
        ],
        time_limit: Some(Duration::from_secs(5)),
    },
    Criterion {
        id: 8,
        title: "Simson line collinearity",
        suites: &[("simson", 200)],
        pins: &[below("simson", "collinearity", 1e-9)],
        time_limit: None,
    },
    Criterion {
        id: 9,
        title: "interior/exterior containment parity",
        suites: &[("parity", 400)],
        pins: &[none_fail("parity", "parity-agrees")],
        time_limit: None,
    },
];

const FULL_SUITE_LIMIT: Duration = Duration::from_secs(30);

fn evaluate(c: &Criterion, reports: &[VerifyReport], elapsed: Duration) -> Vec<String> {
    let mut problems = Vec::new();
    for &(name, trials) in c.suites {
        let Some(r) = reports.iter().find(|r| r.suite == name) else {
            problems.push(format!("suite {name} missing"));
            continue;
        };
        if r.trials < trials {
            problems.push(format!("{name} ran {} trials, need {trials}", r.trials));
        }
        if !r.failures.is_empty() {
            problems.push(format!("{name}: {} trial(s) errored", r.failures.len()));
        }
        for claim in r.claims.iter().filter(|cl| !cl.passed) {
            problems.push(format!("{name}/{} failed (worst {:.3e})", claim.name, claim.worst));
        }
    }
    for pin in c.pins {
        let found = reports
            .iter()
            .find(|r| r.suite == pin.suite)
            .and_then(|r| r.claims.iter().find(|cl| cl.name == pin.claim));
        let Some(claim) = found else {
            problems.push(format!("{}/{} missing", pin.suite, pin.claim));
            continue;
        };
        let matches = match (&pin.pin, claim.check) {
            (Pin::Below(tol), Check::Below(limit)) => limit <= *tol,
            (Pin::NoneFail, Check::Zero) => true,
            _ => false,
        };
        if !matches {
            problems.push(format!("{}/{} checks {:?}, not the pinned tolerance", pin.suite, pin.claim, claim.check));
        }
    }
    if let Some(limit) = c.time_limit {
        if elapsed > limit {
            problems.push(format!("took {:.3} s, limit {:.0} s", elapsed.as_secs_f64(), limit.as_secs_f64()));
        }
    }
    problems
}

fn summary(c: &Criterion, reports: &[VerifyReport]) -> String {
    c.pins
        .iter()
        .filter_map(|pin| {
            let r = reports.iter().find(|r| r.suite == pin.suite)?;
            let cl = r.claims.iter().find(|cl| cl.name == pin.claim)?;
            Some(match pin.pin {
                Pin::Below(tol) => format!("{} {:.1e}<{tol:.0e}", pin.claim, cl.worst),
                Pin::NoneFail => format!("{} {}/{} ok", pin.claim, cl.checked - cl.worst as usize, cl.checked),
            })
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn determinism() -> Vec<String> {
    let argv = ["miquel", "verify", "--suite", "all", "--seed", "7"];
    let start = Instant::now();
    let first = miquel_cli::run(argv);
    let elapsed = start.elapsed();
    let second = miquel_cli::run(argv);
    let mut problems = Vec::new();
    if first.code != 0 {
        problems.push(format!("exit code {}", first.code));
    }
    if first.stdout != second.stdout {
        problems.push("reports differ between runs".into());
    }
    let json = ["miquel", "verify", "--json", "--seed", "7"];
    if miquel_cli::run(json).stdout != miquel_cli::run(json).stdout {
        problems.push("JSON reports differ between runs".into());
    }
    if elapsed > FULL_SUITE_LIMIT {
        problems.push(format!("full suite took {:.1} s", elapsed.as_secs_f64()));
    }
    problems
}

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    let mut report = |id: u32, title: &str, problems: Vec<String>, detail: String| {
        if problems.is_empty() {
            println!("PASS {id:>2} {title}: {detail}");
        } else {
            println!("FAIL {id:>2} {title}: {}", problems.join("; "));
            failed.push(id);
        }
    };
    for c in CRITERIA {
        let start = Instant::now();
        let reports: Vec<VerifyReport> = c
            .suites
            .iter()
            .map(|&(name, _)| verify::find_suite(name).map(|s| s.run(DEFAULT_SEED, None)))
            .collect::<Result<_, _>>()
            .expect("suite registered");
        let elapsed = start.elapsed();
        let problems = evaluate(c, &reports, elapsed);
        let detail = format!("{} [{:.3} s]", summary(c, &reports), elapsed.as_secs_f64());
        report(c.id, c.title, problems, detail);
    }
    report(10, "verify --suite all is byte-identical across runs", determinism(), "seed 7".into());
    assert!(failed.is_empty(), "acceptance criteria failed: {failed:?}");
}

#[test]
fn suite_passes_for_several_seeds() {
    for seed in [1, 2, 3, 42, 1234] {
        let run = verify::run_suite("all", seed, None).unwrap();
        let failed: Vec<&str> = run.reports.iter().filter(|r| !r.passed).map(|r| r.suite.as_str()).collect();
        println!("{} seed {seed}", if failed.is_empty() { "PASS" } else { "FAIL" });
        assert!(failed.is_empty(), "seed {seed}: {failed:?}");
    }
}
