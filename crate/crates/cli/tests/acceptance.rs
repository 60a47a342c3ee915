//! End-to-end acceptance checks. Each criterion runs under its time bound and
//! prints one `PASS` or `FAIL` line; the process fails if any criterion does.
//!
//! Set `BLESS=1` to rewrite the survey golden files.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use diperfect_cli::{emit_digraph, parse_digraph, run_args, Format};
use diperfect_core::constructive::{redei_hamilton_path, run_builder, st_hamilton_path};
use diperfect_core::forbidden::{
    find_induced_blocking_odd_cycle, find_induced_transitive_triangle, WitnessKind,
};
use diperfect_core::harness::{
    check_property, enumerate_digraphs, random_digraph, validate_theorem, TheoremClass,
    ValidationReport,
};
use diperfect_core::oracles::{
    exists_s_path_partition, hamilton_search, max_stable_sets, path_partition_number,
    stability_number, HamiltonConstraint,
};
use diperfect_core::{instances, Builder, Digraph, Mode};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: diperfect_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Every assignment of {forward, backward, digon} to the edges of an odd cycle
/// that the blocking-cycle builder does not force.
fn blocking_choices(k: usize) -> Vec<Vec<u8>> {
    let n = 2 * k + 1;
    let free = n - 3;
    (0..3usize.pow(free as u32))
        .map(|mut code| {
            let mut choices = vec![0u8; n - 1];
            for c in choices.iter_mut().skip(1).take(free) {
                *c = (code % 3) as u8;
                code /= 3;
            }
            choices
        })
        .collect()
}

fn blocking_fails(d: &Digraph) -> Result<(), String> {
    let w = core(find_induced_blocking_odd_cycle(d))?
        .ok_or_else(|| format!("no blocking cycle in {d:?}"))?;
    ensure(
        w.kind == WitnessKind::BlockingOddCycle && w.vertices.len() == d.order(),
        || format!("witness {w:?} does not span {d:?}"),
    )?;
    let report = core(check_property(d, Mode::Be))?;
    ensure(!report.holds, || format!("BE-property holds on {d:?}"))?;
    let s: Vec<usize> = w.vertices.iter().skip(2).step_by(2).copied().collect();
    ensure(
        core(exists_s_path_partition(d, &s, Mode::Be))?.is_none(),
        || format!("{s:?} has a BE partition in {d:?}"),
    )
}

fn criterion_1() -> Check {
    let mut checked = 0;
    for k in [1, 2] {
        for choices in blocking_choices(k) {
            blocking_fails(&instances::blocking_cycle(k, &choices))?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in [3, 4] {
        for _ in 0..1000 {
            let choices: Vec<u8> = (0..2 * k).map(|_| rng.gen_range(0..3)).collect();
            blocking_fails(&instances::blocking_cycle(k, &choices))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} blocking cycles on 3, 5, 7, 9 vertices"))
}

fn is_source_or_sink(d: &Digraph, v: usize) -> bool {
    d.in_neighbors(v).is_empty() || d.out_neighbors(v).is_empty()
}

fn criterion_2() -> Check {
    for d in [
        instances::anti_directed_nine(),
        instances::anti_directed_nine_alternating(),
    ] {
        ensure(!core(check_property(&d, Mode::Alpha))?.holds, || {
            format!("α-property holds on {d:?}")
        })?;
    }
    let mut checked = 0;
    // Orient or double every edge of the 5-cycle; keep those with four
    // consecutive vertices that are sources or sinks.
    for code in 0..3usize.pow(5) {
        let mut arcs = Vec::new();
        let mut c = code;
        for i in 0..5 {
            let (u, v) = (i, (i + 1) % 5);
            match c % 3 {
                0 => arcs.push((u, v)),
                1 => arcs.push((v, u)),
                _ => arcs.extend([(u, v), (v, u)]),
            }
            c /= 3;
        }
        let d = Digraph::from_arcs(5, arcs).map_err(|e| e.to_string())?;
        let anti = (0..5).any(|start| (0..4).all(|j| is_source_or_sink(&d, (start + j) % 5)));
        if anti {
            ensure(!core(check_property(&d, Mode::Alpha))?.holds, || {
                format!("α-property holds on {d:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "both nine-vertex types and {checked} labelled five-vertex cycles"
    ))
}

fn criterion_3() -> Check {
    let mut count = 0;
    for d in core(enumerate_digraphs(4, false, None))? {
        let pi = core(path_partition_number(&d))?;
        let alpha = core(stability_number(&d))?;
        ensure(pi <= alpha, || format!("π = {pi} > α = {alpha} on {d:?}"))?;
        count += 1;
    }
    ensure(count == 4096, || format!("enumerated {count} digraphs"))?;
    Ok("4096 labelled digraphs on 4 vertices".into())
}

fn tournaments_up_to_iso(n: usize) -> Result<Vec<Digraph>, String> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for code in 0u64..1 << pairs.len() {
        let arcs = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if code >> i & 1 == 1 { (v, u) } else { (u, v) });
        let t = Digraph::from_arcs(n, arcs).map_err(|e| e.to_string())?;
        if seen.insert(core(t.canonical_form())?) {
            out.push(t);
        }
    }
    Ok(out)
}

fn criterion_4() -> Check {
    let mut tournaments = 0;
    for n in 1..=6 {
        for t in tournaments_up_to_iso(n)? {
            let p = core(redei_hamilton_path(&t))?;
            ensure(p.len() == n && p.is_path_in(&t), || {
                format!("{p} is not a Hamilton path of {t:?}")
            })?;
            tournaments += 1;
        }
    }
    let e4 = instances::exceptional()
        .canonical_form()
        .map_err(|e| e.to_string())?;
    let qualifies = |d: &Digraph| {
        d.is_semicomplete() && d.is_strong() && find_induced_transitive_triangle(d).is_none()
    };
    let mut exceptional = Vec::new();
    let mut pairs = 0;
    for n in 2..=5 {
        for d in core(enumerate_digraphs(n, true, Some(&qualifies)))? {
            let is_e4 = n == 4 && core(d.canonical_form())? == e4;
            let mut blocked = false;
            for s in 0..n {
                for t in s + 1..n {
                    let exists =
                        core(hamilton_search(&d, HamiltonConstraint::Ends(s, t)))?.is_some();
                    blocked |= !exists;
                    if !is_e4 {
                        let p = core(st_hamilton_path(&d, s, t))?;
                        let ends = [p.first(), p.last()];
                        ensure(
                            p.len() == n
                                && p.is_path_in(&d)
                                && (ends == [Some(s), Some(t)] || ends == [Some(t), Some(s)]),
                            || format!("{p} is not a Hamilton {{{s},{t}}}-path of {d:?}"),
                        )?;
                        pairs += 1;
                    }
                }
            }
            if blocked {
                exceptional.push(d);
            }
        }
    }
    ensure(exceptional.len() == 1, || {
        format!("{} exceptional types: {exceptional:?}", exceptional.len())
    })?;
    ensure(core(exceptional[0].canonical_form())? == e4, || {
        format!("exceptional type {:?} is not E4", exceptional[0])
    })?;
    Ok(format!(
        "{tournaments} tournament types; E4 unique; {pairs} vertex pairs joined"
    ))
}

fn no_failures(r: &ValidationReport) -> Result<(), String> {
    ensure(r.failures.is_empty(), || {
        format!(
            "{} {} n={}: {} failures, first {:?}",
            r.class,
            r.mode,
            r.n,
            r.failures.len(),
            r.failures[0]
        )
    })
}

fn criterion_5() -> Check {
    let mut members = 0;
    for mode in [Mode::Be, Mode::Alpha] {
        let r = core(validate_theorem(
            TheoremClass::Perfect,
            6,
            mode,
            Some(300),
            5,
        ))?;
        no_failures(&r)?;
        ensure(
            r.members == 300 && r.clique_cover_checks == r.members,
            || {
                format!(
                    "{} members, {} clique-cover checks",
                    r.members, r.clique_cover_checks
                )
            },
        )?;
        members += r.members;
    }
    Ok(format!(
        "{members} perfect members, Lovász equality on each"
    ))
}

fn criterion_6() -> Check {
    let mut sets = 0;
    for mode in [Mode::Alpha, Mode::Be] {
        let r = core(validate_theorem(
            TheoremClass::SeriesParallel,
            7,
            mode,
            Some(300),
            6,
        ))?;
        no_failures(&r)?;
        sets += r.stable_sets;
    }
    Ok(format!("600 series-parallel members, {sets} stable sets"))
}

fn criterion_7() -> Check {
    let mut cycles = 0;
    for mode in [Mode::Alpha, Mode::Be] {
        let r = core(validate_theorem(
            TheoremClass::InSemicomplete,
            4,
            mode,
            None,
            0,
        ))?;
        no_failures(&r)?;
        if mode == Mode::Alpha {
            let strong = |d: &Digraph| d.is_in_semicomplete() && d.is_strong();
            let expected = core(enumerate_digraphs(4, true, Some(&strong)))?.count();
            ensure(r.hamilton_cycles == expected, || {
                format!(
                    "{} Hamilton cycles for {expected} strong members",
                    r.hamilton_cycles
                )
            })?;
        }
        cycles += r.hamilton_cycles;
        let r = core(validate_theorem(
            TheoremClass::InSemicomplete,
            6,
            mode,
            Some(500),
            7,
        ))?;
        no_failures(&r)?;
        cycles += r.hamilton_cycles;
    }
    Ok(format!("{cycles} Hamilton cycles on strong members"))
}

fn criterion_8() -> Check {
    let mut members = 0;
    for mode in [Mode::Alpha, Mode::Be] {
        for n in 1..=5 {
            let r = core(validate_theorem(TheoremClass::Symmetric, n, mode, None, 0))?;
            no_failures(&r)?;
            members += r.members;
        }
    }
    for class in [TheoremClass::SemiSymmetric2, TheoremClass::SemiSymmetric3] {
        let r = core(validate_theorem(class, 6, Mode::Be, Some(300), 8))?;
        no_failures(&r)?;
        members += r.members;
    }
    Ok(format!("{members} semi-symmetric members"))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

fn criterion_9() -> Check {
    let bless = std::env::var_os("BLESS").is_some();
    let mut totals = Vec::new();
    for mode in ["alpha", "be"] {
        let out = run_args(
            [
                "diperfect",
                "survey",
                "--n",
                "4",
                "--mode",
                mode,
                "--up-to-iso",
            ],
            &mut std::io::empty(),
        );
        ensure(out.code == 0, || {
            format!("survey {mode} exited {}: {}", out.code, out.stderr)
        })?;
        let doc: serde_json::Value =
            serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
        let data = &doc["data"];
        ensure(
            data["counterexamples"]
                .as_array()
                .is_some_and(Vec::is_empty),
            || format!("{mode} survey has counterexamples"),
        )?;
        let n4 = &data["orders"][3];
        ensure(n4["digraphs"] == 218, || {
            format!("{mode}: {} classes on 4 vertices", n4["digraphs"])
        })?;
        let path = golden_dir().join(format!("survey_n4_{mode}.json"));
        if bless {
            std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
        } else {
            let golden =
                std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            ensure(golden == out.stdout, || {
                format!("{} differs from the survey output", path.display())
            })?;
        }
        totals.push(format!(
            "{mode} in/out-of-class diperfect {}/{}, not {}/{}",
            n4["in_class_diperfect"],
            n4["out_of_class_diperfect"],
            n4["in_class_not_diperfect"],
            n4["out_of_class_not_diperfect"]
        ));
    }
    Ok(totals.join("; "))
}

const CLASS_BUILDERS: [Builder; 6] = [
    Builder::Perfect,
    Builder::Semicomplete,
    Builder::SeriesParallel,
    Builder::Cycle,
    Builder::InSemicomplete,
    Builder::SemiSymmetric,
];

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut successes = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8);
        let d = core(random_digraph(n, rng.gen_range(0.2..0.9), &mut rng))?;
        let sets = core(max_stable_sets(&d))?.sets;
        let s = sets
            .choose(&mut rng)
            .expect("a maximum stable set exists")
            .clone();
        let mode = if rng.gen() { Mode::Alpha } else { Mode::Be };
        let oracle = core(exists_s_path_partition(&d, &s, mode))?;
        for b in CLASS_BUILDERS {
            if let Ok(Some(built)) = run_builder(b, &d, &s, mode) {
                ensure(
                    built.partition.validate(&d).is_ok() && oracle.is_some(),
                    || format!("{b} succeeded on {d:?}, {s:?}, {mode} but the oracle disagrees"),
                )?;
                successes += 1;
            }
        }
    }
    let mut absent = 0;
    let mut tried = 0;
    while absent < 1000 {
        tried += 1;
        ensure(tried < 5_000_000, || {
            format!("only {absent} absent cases found")
        })?;
        let n = rng.gen_range(3..=8);
        let d = core(random_digraph(n, rng.gen_range(0.2..0.9), &mut rng))?;
        let sets = core(max_stable_sets(&d))?.sets;
        let s = sets
            .choose(&mut rng)
            .expect("a maximum stable set exists")
            .clone();
        let mode = if rng.gen() { Mode::Alpha } else { Mode::Be };
        if core(exists_s_path_partition(&d, &s, mode))?.is_some() {
            continue;
        }
        absent += 1;
        for b in CLASS_BUILDERS.into_iter().chain([Builder::Auto]) {
            ensure(!matches!(run_builder(b, &d, &s, mode), Ok(Some(_))), || {
                format!("{b} claims a partition of {d:?}, {s:?}, {mode} that the oracle rules out")
            })?;
        }
    }
    Ok(format!(
        "{successes} builder successes confirmed; {absent} absent cases refused"
    ))
}

fn criterion_11() -> Check {
    let mut count = 0;
    for n in 1..=4 {
        for d in core(enumerate_digraphs(n, false, None))? {
            for format in [Format::EdgeList, Format::Digraph6, Format::Json] {
                let text = emit_digraph(&d, format);
                let back = parse_digraph(&text, format).map_err(|e| e.to_string())?;
                ensure(back == d && emit_digraph(&back, format) == text, || {
                    format!("{format} round trip changed {d:?}")
                })?;
            }
            count += 1;
        }
    }
    let tt = "3\n0 1\n0 2\n2 1\n";
    let commands: [&[&str]; 5] = [
        &[
            "survey",
            "--n",
            "6",
            "--mode",
            "be",
            "--exhaustive-max",
            "3",
            "--samples",
            "30",
            "--seed",
            "9",
        ],
        &[
            "validate",
            "--class",
            "series_parallel",
            "--n",
            "6",
            "--mode",
            "be",
            "--samples",
            "30",
            "--seed",
            "9",
        ],
        &["partition", "-", "--set", "2", "--mode", "alpha"],
        &["check", "-", "--property", "be", "--diperfect"],
        &["classify", "-"],
    ];
    for args in commands {
        let runs: Vec<_> = (0..2)
            .map(|_| {
                run_args(
                    std::iter::once("diperfect").chain(args.iter().copied()),
                    &mut tt.as_bytes(),
                )
            })
            .collect();
        ensure(runs[0] == runs[1], || {
            format!("`{}` is not deterministic", args.join(" "))
        })?;
        ensure(runs[0].code <= 1, || {
            format!(
                "`{}` exited {}: {}",
                args.join(" "),
                runs[0].code,
                runs[0].stderr
            )
        })?;
    }
    Ok(format!(
        "{count} digraphs round-tripped in 3 formats; {} commands repeatable",
        commands.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "blocking odd cycles fail the BE-property",
            Duration::from_secs(120),
            criterion_1,
        ),
        (
            "anti-directed odd cycles fail the α-property",
            Duration::from_secs(10),
            criterion_2,
        ),
        (
            "path partition number at most α",
            Duration::from_secs(60),
            criterion_3,
        ),
        (
            "Rédei paths and the unique exception",
            Duration::from_secs(300),
            criterion_4,
        ),
        (
            "perfect underlying graphs",
            Duration::from_secs(300),
            criterion_5,
        ),
        (
            "series-parallel digraphs",
            Duration::from_secs(600),
            criterion_6,
        ),
        (
            "in-semicomplete digraphs",
            Duration::from_secs(600),
            criterion_7,
        ),
        (
            "semi-symmetric digraphs",
            Duration::from_secs(600),
            criterion_8,
        ),
        (
            "conjecture survey on 4 vertices",
            Duration::from_secs(1800),
            criterion_9,
        ),
        (
            "builders agree with the oracle",
            Duration::from_secs(600),
            criterion_10,
        ),
        (
            "round trips and determinism",
            Duration::from_secs(60),
            criterion_11,
        ),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, bound, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(detail) if elapsed <= bound => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  exceeded {bound:?} ({detail})"),
            Err(e) => format!("FAIL  {e}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{:>8.2?} / {:>6.0?}] {name}: {verdict}",
            i + 1,
            elapsed,
            bound
        );
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
