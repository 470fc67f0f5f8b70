//! The acceptance suite. Every criterion runs, prints one PASS/FAIL line, and
//! the test fails if any criterion fails.

mod common;

use std::time::Instant;

use intmetric::constructions::{
    amalgamate_cr, amalgamate_mr, empirical_mu, gadget_h, inject_f, ExtensionAxiom, Family,
};
use intmetric::enumeration::{
    a_s_members, count_cr, count_metric, enumerate_cr, enumerate_metric, lower_bound,
    matching_family_count, matchings, sample_uniform,
};
use intmetric::structure::cr_membership;
use intmetric::weights::{
    check_importantcor, check_size_lemma, check_triangle_classification, check_weight_bound,
};
use intmetric::{Error, Exec, MetricColoring};
use num_bigint::BigUint;
use num_rational::Ratio;
use statrs::distribution::{ChiSquared, ContinuousCDF};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn big(v: usize) -> BigUint {
    BigUint::from(v)
}

fn exact_counts() -> Outcome {
    for (r, n, want) in [(3u8, 3usize, 24usize), (4, 3, 52)] {
        let brute = common::brute_metric(r, n).len();
        let got = count_metric(r as u32, n).map_err(e2s)?;
        ensure(brute == want && got == big(want), format!("r={r} n={n}: search {got}, brute {brute}, expected {want}"))?;
    }
    Ok("|M_3(3)| = 24, |M_4(3)| = 52".into())
}

fn oracle_equivalence() -> Outcome {
    let mut cases = vec![(5u8, 3usize)];
    for r in [3, 4] {
        for n in [3, 4] {
            cases.push((r, n));
        }
    }
    for &(r, n) in &cases {
        let brute = common::brute_metric(r, n).len();
        let got = count_metric(r as u32, n).map_err(e2s)?;
        ensure(got == big(brute), format!("r={r} n={n}: search {got}, brute {brute}"))?;
    }
    Ok(format!("{} parameter pairs agree", cases.len()))
}

fn chain() -> Outcome {
    let mut checked = 0;
    for (r, n_max) in [(3u32, 6usize), (4, 5)] {
        for n in 2..=n_max {
            let m = count_metric(r, n).map_err(e2s)?;
            let c = count_cr(r, n).map_err(e2s)?;
            let low = lower_bound(r, n).map_err(e2s)?;
            ensure(m >= c && c >= low, format!("r={r} n={n}: M={m} C={c} m(r)^C(n,2)={low}"))?;
            checked += 1;
        }
    }
    Ok(format!("|M| >= |C| >= m(r)^C(n,2) on {checked} pairs"))
}

fn even_trend() -> Outcome {
    let ratios: Vec<Ratio<BigUint>> = (3..=5)
        .map(|n| Ok(Ratio::new(count_cr(4, n)?, count_metric(4, n)?)))
        .collect::<intmetric::Result<_>>()
        .map_err(e2s)?;
    let shown: Vec<String> = ratios.iter().map(|q| q.to_string()).collect();
    ensure(ratios.windows(2).all(|w| w[0] < w[1]), format!("|C_4(n)|/|M_4(n)| for n=3,4,5 is {} (not strictly increasing)", shown.join(", ")))?;
    Ok(shown.join(" < "))
}

fn lemma_oracles() -> Outcome {
    let mut total = 0;
    let mut run = |name: &str, v: intmetric::Result<intmetric::LemmaVerdict>| -> Result<(), String> {
        let v = v.map_err(e2s)?;
        ensure(v.holds(), format!("{name}: counterexample {:?}", v.counterexample))?;
        total += v.checked;
        Ok(())
    };
    for r in 3..=8 {
        run("size-lemma", check_size_lemma(r))?;
        run("triangle-class", check_triangle_classification(r))?;
    }
    for (r, t) in [(3, 3), (4, 3), (3, 4)] {
        run("weight-bound", check_weight_bound(r, t))?;
    }
    for r in 3..=5 {
        run("importantcor", check_importantcor(r))?;
    }
    Ok(format!("{total} instances, zero counterexamples"))
}

fn injection() -> Outcome {
    for r in [3, 5, 7] {
        let h = gadget_h(r).map_err(e2s)?;
        ensure(h.is_metric() && !cr_membership(&h).member, format!("gadget H fails for r={r}"))?;
    }
    let (mut applied, mut skipped) = (0, 0);
    for n in [4, 5] {
        for g in enumerate_cr(3, n).map_err(e2s)? {
            match inject_f(&g) {
                Ok(t) => {
                    ensure(t.output.is_metric() && !cr_membership(&t.output).member, format!("bad output for {:?}", g.dist()))?;
                    applied += 1;
                }
                Err(Error::Unsupported(_)) => skipped += 1,
                Err(e) => return Err(format!("{:?}: {e}", g.dist())),
            }
        }
    }
    Ok(format!("{applied} classifiable inputs mapped outside C_3, {skipped} unclassifiable skipped"))
}

/// Every injective partial map from `0..a` to `0..b`, as `(a_vertex, b_vertex)` pairs.
fn correspondences(a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(x: usize, a: usize, b: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if x == a {
            out.push(cur.clone());
            return;
        }
        rec(x + 1, a, b, used, cur, out);
        for y in 0..b {
            if !used[y] {
                used[y] = true;
                cur.push((x, y));
                rec(x + 1, a, b, used, cur, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(0, a, b, &mut vec![false; b], &mut Vec::new(), &mut out);
    out
}

fn agree(a: &MetricColoring, b: &MetricColoring, s: &[(usize, usize)]) -> bool {
    s.iter().all(|&(x1, y1)| s.iter().all(|&(x2, y2)| x1 == x2 || a.get(x1, x2) == b.get(y1, y2)))
}

fn amalgamation() -> Outcome {
    let family = |r: u32, cr_only: bool| -> intmetric::Result<Vec<MetricColoring>> {
        let mut all = Vec::new();
        for n in 1..=3 {
            if cr_only {
                all.extend(enumerate_cr(r, n)?);
            } else {
                all.extend(enumerate_metric(r, n)?);
            }
        }
        Ok(all)
    };
    let mut mr = 0;
    let ms = family(3, false).map_err(e2s)?;
    for a in &ms {
        for b in &ms {
            for s in correspondences(a.n(), b.n()) {
                if s.is_empty() || !agree(a, b, &s) {
                    continue;
                }
                let out = amalgamate_mr(a, b, &s).map_err(e2s)?;
                ensure(out.result.is_metric(), format!("M_r amalgam of {:?} and {:?} over {s:?} is not metric", a.dist(), b.dist()))?;
                ensure(out.embeddings_are_isometric(a, b), "M_r amalgam does not embed its factors")?;
                mr += 1;
            }
        }
    }
    let mut cr = 0;
    let cs = family(4, true).map_err(e2s)?;
    for a in &cs {
        for b in &cs {
            for s in correspondences(a.n(), b.n()) {
                if !agree(a, b, &s) {
                    continue;
                }
                let out = amalgamate_cr(a, b, &s).map_err(e2s)?;
                ensure(cr_membership(&out.result).member && out.embeddings_are_isometric(a, b), "C_r amalgam left C_4")?;
                cr += 1;
            }
        }
    }
    Ok(format!("{mr} M_3 amalgams metric, {cr} C_4 amalgams in C_4"))
}

fn odd_strictness() -> Outcome {
    for n in [4, 5] {
        let (c, m) = (count_cr(3, n).map_err(e2s)?, count_metric(3, n).map_err(e2s)?);
        ensure(c < m, format!("n={n}: |C_3| = {c}, |M_3| = {m}"))?;
    }
    let (c, m) = (count_cr(3, 3).map_err(e2s)?, count_metric(3, 3).map_err(e2s)?);
    ensure(c == big(24) && m == big(24), format!("n=3: |C_3| = {c}, |M_3| = {m}"))?;
    Ok("|C_3(n)| < |M_3(n)| for n=4,5 and both equal 24 at n=3".into())
}

fn sampler() -> Outcome {
    const SAMPLES: usize = 10_000;
    let seed = 20_240_601;
    let batch = sample_uniform(3, 3, SAMPLES, seed).map_err(e2s)?;
    let support: Vec<Vec<u8>> = enumerate_metric(3, 3).map_err(e2s)?.map(|g| g.dist().to_vec()).collect();
    let mut counts = vec![0usize; support.len()];
    for g in &batch.samples {
        let i = support.binary_search(&g.dist().to_vec()).map_err(|_| "sample outside M_3(3)".to_string())?;
        counts[i] += 1;
    }
    let expected = SAMPLES as f64 / support.len() as f64;
    let stat: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
    let critical = ChiSquared::new((support.len() - 1) as f64).map_err(|e| e.to_string())?.inverse_cdf(0.999);
    ensure(stat < critical, format!("chi-square {stat:.2} >= critical {critical:.2}"))?;
    let first = serde_json::to_string(&batch).map_err(|e| e.to_string())?;
    let again = serde_json::to_string(&sample_uniform(3, 3, SAMPLES, seed).map_err(e2s)?).map_err(|e| e.to_string())?;
    ensure(first == again, "seeded rerun differs")?;
    Ok(format!("chi-square {stat:.2} < {critical:.2} (df 23), rerun identical"))
}

fn matching_bound() -> Outcome {
    let (r, n) = (3, 4);
    let mut seen = std::collections::BTreeSet::new();
    let mut total = 0usize;
    let all = matchings(n);
    for s in &all {
        let members: Vec<MetricColoring> = a_s_members(r, n, s).map_err(e2s)?.collect();
        let want = 2usize.pow((6 - s.len()) as u32);
        ensure(members.len() == want, format!("|A({s:?})| = {}, expected {want}", members.len()))?;
        for g in members {
            ensure(g.is_metric(), format!("{:?} in A({s:?}) is not metric", g.dist()))?;
            ensure(seen.insert(g.dist().to_vec()), format!("{:?} lies in two families", g.dist()))?;
            total += 1;
        }
    }
    let formula = matching_family_count(r, n).map_err(e2s)?;
    ensure(formula.total == big(total) && formula.matchings == big(all.len()), "closed form disagrees with the listed families")?;
    Ok(format!("{} matchings, {total} distinct colorings", all.len()))
}

fn axiom_curve() -> Outcome {
    let ax = ExtensionAxiom::three_to_two_two();
    let ns: Vec<usize> = (4..=10).collect();
    let curve = empirical_mu(&ax, Family::Cr, &ns, 2000, 7, Exec::default()).map_err(e2s)?;
    let shown: Vec<String> = curve.points.iter().map(|p| format!("n={}:{:.3}", p.n, p.estimate)).collect();
    let monotone = curve.points.windows(2).all(|w| w[1].ci_high >= w[0].ci_low);
    let last = curve.points.last().map(|p| p.estimate).unwrap_or(0.0);
    ensure(monotone && last > 0.9, format!("mu_n = [{}]: nondecreasing within bands = {monotone}, mu_10 > 0.9 = {}", shown.join(" "), last > 0.9))?;
    Ok(shown.join(" "))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("exact counts", exact_counts),
        ("oracle equivalence", oracle_equivalence),
        ("counting chain", chain),
        ("even-r structure trend", even_trend),
        ("lemma oracles", lemma_oracles),
        ("gadget and injection", injection),
        ("amalgamation soundness", amalgamation),
        ("odd-r strictness", odd_strictness),
        ("sampler statistics", sampler),
        ("matching bound", matching_bound),
        ("extension-axiom curve", axiom_curve),
    ];
    let mut lines = Vec::new();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let line = match outcome {
            Ok(detail) => format!("criterion {:>2} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                format!("criterion {:>2} FAIL {name} ({secs:.1}s): {why}", i + 1)
            }
        };
        println!("{line}");
        lines.push(line);
    }
    assert!(failed == 0, "{failed} of 11 criteria failed:\n{}", lines.join("\n"));
}
