//! Acceptance gate: one line per criterion, exit status 1 if an expected outcome changes.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use enriques_core::cli::{run_suite, Check, Context};
use enriques_core::config;
use enriques_core::mrep::{classify_mathieu_groups, solve_order6_eigencounts, wild_order_solutions};

struct Gate {
    checks: Vec<Check>,
    times: Vec<(String, Duration)>,
    problems: Vec<String>,
}

impl Gate {
    fn new() -> Self {
        let ctx = Context::bundled();
        let mut checks = Vec::new();
        let mut times = Vec::new();
        for suite in [
            "classify",
            "characters",
            "lefschetz",
            "gonality",
            "appendix-a",
            "s5-config",
            "hesse-config",
            "steiner",
            "exact-surfaces",
            "char-p",
        ] {
            let start = Instant::now();
            let r = run_suite(suite, None, &ctx, &mut |_| {}).expect("known suite");
            times.push((suite.to_string(), start.elapsed()));
            checks.extend(r.checks);
        }
        Gate { checks, times, problems: Vec::new() }
    }

    fn time(&self, suite: &str) -> Duration {
        self.times.iter().find(|(s, _)| s == suite).map(|(_, t)| *t).unwrap_or_default()
    }

    /// Ids of checks with the prefix, failing ones listed separately.
    fn prefix(&self, prefix: &str) -> (usize, Vec<String>) {
        let hits: Vec<_> = self.checks.iter().filter(|c| c.id.starts_with(prefix)).collect();
        let failed = hits.iter().filter(|c| !c.verdict.passed()).map(|c| c.id.clone()).collect();
        (hits.len(), failed)
    }

    /// Every listed check exists and passes.
    fn all_pass(&self, ids: &[&str], failures: &mut Vec<String>) {
        for id in ids {
            match self.checks.iter().find(|c| c.id == *id) {
                Some(c) if c.verdict.passed() => {}
                Some(_) => failures.push(id.to_string()),
                None => failures.push(format!("{id} missing")),
            }
        }
    }

    fn prefixes_pass(&self, prefixes: &[(&str, usize)], failures: &mut Vec<String>) {
        for (p, n) in prefixes {
            let (count, failed) = self.prefix(p);
            if count != *n {
                failures.push(format!("{p}* has {count} checks, expected {n}"));
            }
            failures.extend(failed);
        }
    }

    /// Prints the criterion line; `expected` is the outcome the gate requires.
    fn report(&mut self, n: u32, title: &str, failures: Vec<String>, expected: bool) {
        let pass = failures.is_empty();
        let v = if pass { "PASS" } else { "FAIL" };
        let note = if failures.is_empty() { String::new() } else { format!("  ({})", failures.join("; ")) };
        println!("criterion {n:>2}  {v}  {title}{note}");
        if pass != expected {
            self.problems.push(format!("criterion {n}: expected {}", if expected { "PASS" } else { "FAIL" }));
        }
    }
}

fn main() -> ExitCode {
    let mut g = Gate::new();

    let mut f = Vec::new();
    g.prefixes_pass(&[("classify.", 25)], &mut f);
    match classify_mathieu_groups() {
        Ok(c) => {
            if c.records.len() != 25 {
                f.push(format!("{} classes", c.records.len()));
            }
            let names: BTreeSet<&str> = c.records.iter().map(|r| r.name.as_str()).collect();
            for q in ["Q8", "Q12"] {
                if names.contains(q) {
                    f.push(format!("{q} included"));
                }
            }
        }
        Err(e) => f.push(e.to_string()),
    }
    if g.time("classify") > Duration::from_secs(300) {
        f.push(format!("runtime {:?}", g.time("classify")));
    }
    g.report(1, "classification gives 25 classes, Q8 and Q12 excluded", f, true);

    let mut f = Vec::new();
    g.all_pass(
        &[
            "characters.mu.A5",
            "characters.mu.C2xC3^2",
            "characters.no-order16.C8-case",
            "characters.no-order16.C4xC2-case",
            "characters.no-order16.C2cubed-case",
            "characters.decomposition.C16",
            "characters.decomposition.C2^2xC3",
            "characters.decomposition.C2^4",
            "characters.decomposition.C4xC2^2",
            "characters.decomposition.C4xC4",
            "characters.decomposition.C8xC2",
            "characters.decomposition.Q12",
        ],
        &mut f,
    );
    g.report(2, "character obstructions and decompositions", f, true);

    let mut f = Vec::new();
    g.prefixes_pass(&[("lefschetz.order-", 6)], &mut f);
    g.all_pass(&["lefschetz.order6-eigencounts"], &mut f);
    let sols = solve_order6_eigencounts();
    if sols.len() != 1 || sols.iter().any(|s| s.a != [4, 1, 2, 2, 2, 1] || s.lefschetz != 1) {
        f.push(format!("order-6 solutions {sols:?}"));
    }
    g.report(3, "order-6 eigencounts (4,1,2,2,2,1) with L = 1; Lefschetz values for orders 1..6", f, true);

    let mut f = Vec::new();
    g.all_pass(&["gonality.degree-10", "gonality.degree-18", "gonality.degree-30"], &mut f);
    if g.time("gonality") > Duration::from_secs(180) {
        f.push(format!("runtime {:?}", g.time("gonality")));
    }
    g.report(4, "gonality 3, 4, 5 with 10, 9, 6 half-pencils in T237", f, true);

    let mut f = Vec::new();
    g.all_pass(
        &[
            "s5-config.petersen",
            "s5-config.pentagon-pairs",
            "s5-config.ns-lattice",
            "s5-config.relation",
            "s5-config.complement",
        ],
        &mut f,
    );
    g.report(
        5,
        "S5 configuration: Petersen line graph, 6 pentagon pairs, (1,9) unimodular, A4+A5 with 50 roots",
        f,
        true,
    );

    let mut truth = Vec::new();
    g.all_pass(
        &[
            "hesse-config.f-infinity",
            "hesse-config.n72.degree",
            "hesse-config.a6.degree",
            "hesse-config.a6.complement",
            "hesse-config.n72.half-pencils",
            "hesse-config.n72.complement",
        ],
        &mut truth,
    );
    let mut f = truth.clone();
    g.all_pass(&["hesse-config.n72.complement-printed"], &mut f);
    g.report(6, "Hesse configuration: degrees 18 and 10, complements A1+A9 and A9, nine half-pencils", f, false);
    if !truth.is_empty() {
        g.problems.push(format!("criterion 6 measured facts: {}", truth.join("; ")));
    }

    let mut truth = Vec::new();
    g.all_pass(
        &["steiner.st-2-3-9", "steiner.st-3-4-10", "steiner.arc-blocks", "steiner.arc-completions-equivalent"],
        &mut truth,
    );
    match config::build_steiner_systems() {
        Ok(s) if s.completions == 3 && s.completion_orbits == vec![3] => {}
        Ok(s) => truth.push(format!("{} completions in orbits {:?}", s.completions, s.completion_orbits)),
        Err(e) => truth.push(e.to_string()),
    }
    let mut f = truth.clone();
    g.all_pass(&["steiner.arc-completion-unique"], &mut f);
    g.report(7, "Steiner systems valid and the 18 arc blocks the unique completion", f, false);
    if !truth.is_empty() {
        g.problems.push(format!("criterion 7 measured facts: {}", truth.join("; ")));
    }

    let mut f = Vec::new();
    g.all_pass(
        &[
            "appendix-a.dodecad-discriminant",
            "appendix-a.odd.hull",
            "appendix-a.odd.complement",
            "appendix-a.anti-enriques",
        ],
        &mut f,
    );
    for name in ["S5", "N72", "A6"] {
        let ids: Vec<String> = ["l-plus", "l-minus", "f2-isometry", "leech-type"]
            .iter()
            .map(|k| format!("appendix-a.{name}.{k}"))
            .collect();
        g.all_pass(&ids.iter().map(String::as_str).collect::<Vec<_>>(), &mut f);
    }
    if g.time("appendix-a") > Duration::from_secs(600) {
        f.push(format!("runtime {:?}", g.time("appendix-a")));
    }
    g.report(
        8,
        "discriminant 2^10, coinvariant roots, F2 isometries, Leech-type gluing, anti-Enriques lattice",
        f,
        true,
    );

    let mut f = Vec::new();
    g.prefixes_pass(
        &[
            ("exact-surfaces.line.", 3),
            ("exact-surfaces.parameters.", 5),
            ("exact-surfaces.adjoint.", 7),
            ("exact-surfaces.h192.", 7),
            ("char-p.", 8),
        ],
        &mut f,
    );
    g.report(9, "exact polynomial identities and reductions mod 2, 3, 5", f, true);

    let mut f = Vec::new();
    g.prefixes_pass(&[("lefschetz.euler.", 4)], &mut f);
    let got: BTreeSet<(u64, u64, i64, bool)> =
        wild_order_solutions(24).into_iter().map(|s| (s.q, s.r, s.c2, s.rank_ok)).collect();
    if got != BTreeSet::from([(3, 3, 12, true), (5, 2, 12, true), (11, 1, 12, false)]) {
        f.push(format!("solutions {got:?}"));
    }
    g.report(
        10,
        "prime-order solutions (3,3,12), (5,2,12), (11,1,12) with the rank flag; orders 9, 15, 25 excluded",
        f,
        true,
    );

    for (suite, t) in &g.times {
        println!("  {suite}: {:.2}s", t.as_secs_f64());
    }
    if g.problems.is_empty() {
        println!("acceptance: outcomes as expected (criteria 6 and 7 are known FAIL)");
        ExitCode::SUCCESS
    } else {
        for p in &g.problems {
            println!("unexpected: {p}");
        }
        ExitCode::FAILURE
    }
}
