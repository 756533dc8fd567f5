//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use flt_lab_core::claims::{run_claim, ClaimId, ClaimParams, ClaimStatus};
use flt_lab_core::diophantine::{
    run_partitioned, search_fermat_triples, search_pair_system, search_product_form,
    search_quadratic_irreducibility, EulerProduct, FermatTriples, PairSystemSearch, ProductForm, ProductSquares,
    QuadraticScan, Quadruple, QuadrupleMode, RangeSearch, Ring, SearchBounds, SolutionRecord, Sys3,
};
use flt_lab_core::polysplit::{build_cubic, classify_cubic, extract_fermat_witness, CubicClass, Extraction, FermatWitness};
use flt_lab_core::powersum::{search_equal_sums, CoprimeMode, EqualSumsSearch};
use flt_lab_core::ExactInt;
use flt_lab_oracles as oracle;
use serde_json::Value;

type Check = Result<String, String>;
type DeskCase = (ClaimId, &'static [(&'static str, u64)], u64);
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg.into()) }
}

fn within(t: Duration, limit: Duration) -> Result<(), String> {
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))
}

fn e(v: i128) -> ExactInt {
    ExactInt::from(v)
}

fn vals(r: &SolutionRecord) -> Vec<i128> {
    r.values().map(|v| v.as_i128().unwrap()).collect()
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_flt-lab"));
    c.env_remove("FLT_LAB_JOBS").arg("--quiet");
    c
}

fn appendix_forensics() -> Check {
    let start = Instant::now();
    let out = bin().args(["--json", "verify-appendix"]).output().map_err(|e| e.to_string())?;
    let t = start.elapsed();
    ensure(out.status.code() == Some(0), "verify-appendix did not exit 0")?;
    let lines: Vec<Value> =
        String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    ensure(lines.len() == 6, format!("{} lines classified", lines.len()))?;
    let find = |who: &str| lines.iter().find(|l| l["attribution"].as_str().unwrap().starts_with(who)).unwrap();
    let recovered = |l: &Value, slot: &str| -> Option<String> {
        l["recoveries"]
            .as_array()?
            .iter()
            .find(|r| r["slot"] == slot && r["outcome"] == "recovered")
            .map(|r| r["value"].as_str().unwrap().to_string())
    };
    ensure(find("R. Frye")["verdict"] == "Balanced", "Frye 1988 quartic not balanced")?;
    let lp = find("Lander");
    ensure(lp["verdict"] == "Unbalanced", "Lander-Parkin line balanced as printed")?;
    ensure(recovered(lp, "x3").as_deref() == Some("110"), "Lander-Parkin slot recovery")?;
    let el = find("Elkies");
    ensure(el["verdict"] == "Unbalanced", "Elkies line balanced as printed")?;
    ensure(recovered(el, "x2").as_deref() == Some("15365639"), "Elkies slot recovery")?;
    let mut balanced = 0;
    for l in lines.iter().filter(|l| l["verdict"] == "Balanced") {
        balanced += 1;
        let w = l["coprimality_witness"].as_array().ok_or("balanced line without witness")?;
        let (a, b): (i128, i128) = (w[0].as_str().unwrap().parse().unwrap(), w[1].as_str().unwrap().parse().unwrap());
        ensure(oracle::gcd(a, b) > 1, format!("witness ({a}, {b}) is coprime"))?;
    }
    within(t, Duration::from_secs(1))?;
    Ok(format!("6 lines, {balanced} balanced and all not pairwise coprime, 110 and 15365639 recovered, {t:.2?}"))
}

fn theorem1_roundtrip() -> Check {
    let start = Instant::now();
    let w = FermatWitness::new(e(3), e(4), e(5), 2).map_err(|x| x.to_string())?;
    let c = build_cubic(&w).map_err(|x| x.to_string())?;
    let coeffs: Vec<i128> = c.poly.coeffs().iter().map(|v| v.as_i128().unwrap()).collect();
    ensure(coeffs == [1, 0, -481, 3600], format!("cubic {}", c.poly))?;
    ensure(c.a == e(60) && c.b == e(-481) && c.gcd_ab_is_one, "a, b or gcd")?;
    let back = extract_fermat_witness(&c.poly, 2).map_err(|x| x.to_string())?;
    ensure(back == Extraction::Found(w), format!("extracted {back:?}"))?;
    let t = start.elapsed();
    within(t, Duration::from_secs(1))?;
    Ok(format!("x^3 - 481*x + 3600 <-> (3, 4, 5), {t:.2?}"))
}

fn corollary1_sweep() -> Check {
    let start = Instant::now();
    let mut tested = 0u64;
    for n in 3..=5 {
        for a in 1i128..=30 {
            for b in -200i128..=200 {
                if b == 0 || oracle::gcd(a, b) != 1 {
                    continue;
                }
                tested += 1;
                let class = classify_cubic(&e(b), &e(a), n).map_err(|x| x.to_string())?;
                ensure(class != CubicClass::ThreeLinear, format!("a={a} b={b} n={n} splits"))?;
            }
        }
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(60))?;
    Ok(format!("{tested} coprime cubics, none with three linear factors, {t:.2?}"))
}

fn lander_parkin() -> Check {
    let start = Instant::now();
    let all = search_equal_sums(4, 1, 5, 150, CoprimeMode::None).map_err(|x| x.to_string())?;
    let got: Vec<Vec<i128>> = all.iter().map(vals).collect();
    ensure(got == [vec![27, 84, 110, 133, 144]], format!("found {got:?}"))?;
    let s = EqualSumsSearch::new(4, 1, 5, 150, CoprimeMode::Pairwise).map_err(|x| x.to_string())?;
    ensure(!s.uses_fallback(), "not meet-in-the-middle")?;
    let r = s.run().map_err(|x| x.to_string())?;
    ensure(r.records.is_empty() && r.filtered == 1, format!("coprime run: {} records, filtered {}", r.records.len(), r.filtered))?;
    let t = start.elapsed();
    within(t, Duration::from_secs(10))?;
    Ok(format!("{{27, 84, 110, 133 | 144}}; coprime filter leaves none, filtered 1, {t:.2?}"))
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut runs = 0;
    for (h, l) in [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2)] {
        for k in 1..=5u32 {
            let full = oracle::equal_sums(h, l, k, 40, false);
            for max in 1..=40i128 {
                let want: Vec<&Vec<i128>> = full.solutions.iter().filter(|v| v.iter().all(|&x| x <= max)).collect();
                let s = EqualSumsSearch::new(h as u32, l as u32, k, max as u64, CoprimeMode::None).unwrap();
                let got = s.run().unwrap();
                let got_v: Vec<Vec<i128>> = got.records.iter().map(vals).collect();
                ensure(got_v.iter().collect::<Vec<_>>() == want, format!("h={h} l={l} k={k} max={max}"))?;
                runs += 1;
            }
            let want = oracle::equal_sums(h, l, k, 40, true);
            let got = EqualSumsSearch::new(h as u32, l as u32, k, 40, CoprimeMode::Pairwise).unwrap().run().unwrap();
            let got_v: Vec<Vec<i128>> = got.records.iter().map(vals).collect();
            ensure(got_v == want.solutions && got.filtered == want.rejected as u64, format!("coprime h={h} l={l} k={k}"))?;
        }
    }
    let b = |n| SearchBounds::new(30, n).unwrap();
    let mut searches: Vec<(String, Box<dyn RangeSearch>)> = Vec::new();
    for n in 1..=4 {
        searches.push((format!("fermat n={n}"), Box::new(FermatTriples { bounds: b(n), primitive_only: true })));
        searches.push((format!("pair_system n={n}"), Box::new(PairSystemSearch { bounds: b(n) })));
        for mode in [QuadrupleMode::PairsXyZu, QuadrupleMode::FullyPairwise] {
            for xy in [false, true] {
                let q = Quadruple { bounds: b(n), mode, require_xy_eq_zu: xy };
                searches.push((format!("quadruple n={n} {mode:?} xy={xy}"), Box::new(q)));
            }
        }
        searches.push((format!("sys3 n={n}"), Box::new(Sys3 { bounds: b(n) })));
        searches.push((format!("product_form n={n}"), Box::new(ProductForm { bounds: b(n) })));
        searches.push((format!("euler_product n={n}"), Box::new(EulerProduct { bounds: b(n) })));
    }
    searches.push(("product_squares Z".into(), Box::new(ProductSquares::new(30, Ring::Z).unwrap())));
    searches.push(("product_squares Z[i]".into(), Box::new(ProductSquares::new(30, Ring::GaussianZ).unwrap())));
    searches.push(("quadratic".into(), Box::new(QuadraticScan::new(30, 6).unwrap())));
    searches.push(("equal_sums".into(), Box::new(EqualSumsSearch::new(3, 2, 3, 30, CoprimeMode::Pairwise).unwrap())));
    for (name, s) in &searches {
        let one = run_partitioned(s.as_ref(), 1).map_err(|x| x.to_string())?;
        for p in [2, 7] {
            ensure(run_partitioned(s.as_ref(), p).unwrap() == one, format!("{name} differs at P={p}"))?;
        }
    }
    Ok(format!(
        "{runs} meet-in-the-middle runs equal the nested loops; {} searches identical for P in {{1, 2, 7}}, {:.2?}",
        searches.len(),
        start.elapsed()
    ))
}

fn binom(n: u64, r: u64) -> u64 {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn desk_claims() -> Check {
    // lattice points with re > 0, im >= 0 and norm <= 50, counted directly
    let quadrant = (1i64..=7).flat_map(|a| (0i64..=7).map(move |b| (a, b))).filter(|(a, b)| a * a + b * b <= 50).count()
        as u64;
    let cases: [DeskCase; 8] = [
        (ClaimId::LEM1_PAIR_SYSTEM, &[("n_min", 2), ("n_max", 3), ("max", 50)], 2 * binom(51, 2)),
        (ClaimId::THM3_XYZU, &[("n_min", 2), ("n_max", 3), ("max", 50)], 2 * 50 * binom(51, 2)),
        (ClaimId::THM4_SYS3, &[("n_min", 3), ("n_max", 4), ("max", 30)], 2 * 60 * 60 * 60),
        (ClaimId::FLT_PRODUCT_FORM, &[("n_min", 3), ("n_max", 3), ("max", 200)], binom(200, 2)),
        (ClaimId::PRODUCT_QUARTIC, &[("max", 200)], binom(200, 2)),
        (ClaimId::PRODUCT_SQUARES_Z, &[("max", 300)], binom(300, 2)),
        (ClaimId::PRODUCT_SQUARES_ZI, &[("norm_max", 50)], quadrant * 2 * quadrant),
        (ClaimId::EULER_PRODUCT, &[("n_min", 4), ("n_max", 4), ("max", 60)], binom(60, 3)),
    ];
    let start = Instant::now();
    for (id, params, expected) in cases {
        let p = ClaimParams::with(id, params).map_err(|x| x.to_string())?;
        let o = run_claim(&p).map_err(|x| format!("{id}: {x}"))?;
        ensure(o.status == ClaimStatus::HoldsUpToBound, format!("{id}: {}", o.status.name()))?;
        ensure(
            o.stats.candidates_tested == expected,
            format!("{id}: {} candidates, closed form {expected}", o.stats.candidates_tested),
        )?;
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(600))?;
    Ok(format!("8 claims hold with closed-form candidate counts, single job, {t:.2?}"))
}

fn positive_controls() -> Check {
    let pf: Vec<Vec<i128>> = search_product_form(2, 20).unwrap().iter().map(vals).collect();
    ensure(pf.contains(&vec![9, 16, 60]), "product form (9, 16, 60) missing")?;
    let ps: Vec<Vec<i128>> = search_pair_system(SearchBounds::new(10, 1).unwrap()).unwrap().iter().map(vals).collect();
    ensure(ps.contains(&vec![2, 3, 6, 1]), "pair system (2, 3, 6, 1) missing")?;
    let py = search_fermat_triples(SearchBounds::new(30, 2).unwrap(), true).unwrap();
    let want = oracle::fermat(2, 30, true).solutions.len();
    ensure(want == 5 && py.len() == want, format!("{} primitive triples, oracle {want}", py.len()))?;
    let p = ClaimParams::defaults(ClaimId::COR_QUADRATIC, flt_lab_core::claims::Profile::Desk);
    let quad = search_quadratic_irreducibility(p.get("a_max"), p.get("n_max") as u32).unwrap();
    let qv: Vec<Vec<i128>> = quad.iter().map(vals).collect();
    ensure(qv.iter().any(|v| v[..3] == [2, 3, 1]), "(2, 3, n=1) not reducible")?;
    ensure(qv.iter().all(|v| v[2] == 1), "a reducible case with n >= 2")?;
    let o = run_claim(&p).unwrap();
    let ClaimStatus::CounterexampleFound(r) = &o.status else { return Err("COR_QUADRATIC found nothing".into()) };
    ensure(vals(r)[..3] == [2, 3, 1], "first COR_QUADRATIC record")?;
    Ok(format!(
        "(9, 16, 60), (2, 3, 6, 1), 5 Pythagorean triples, (2, 3, 1) reducible; {} reducible cases all n = 1",
        qv.len()
    ))
}

fn determinism() -> Check {
    let suite = || bin().args(["--json", "claim", "suite", "--profile", "smoke"]).output().unwrap();
    let (a, b) = (suite(), suite());
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, "smoke suite output differs between runs")?;
    let args = ["--json", "claim", "run", "EULER_EKL", "--param", "h=2", "--param", "l=1", "--param", "k=4"];
    let args: Vec<&str> = args.into_iter().chain(["--param", "max=120"]).collect();
    let full = bin().args(&args).output().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let mut resumed = 0;
    for cut in [1u64, 13, 60, 119] {
        let cp = dir.path().join(format!("cp{cut}.json"));
        let cp = cp.to_str().unwrap();
        let first = bin()
            .args(&args)
            .args(["--checkpoint", cp, "--checkpoint-interval-ms", "0", "--max-units", &cut.to_string(), "--jobs", "3"])
            .output()
            .unwrap();
        ensure(first.status.code() == Some(2) && first.stdout.is_empty(), format!("cut {cut} did not stop early"))?;
        let second = bin().args(&args).args(["--checkpoint", cp]).output().unwrap();
        ensure(second.stdout == full.stdout, format!("resume after {cut} units differs"))?;
        resumed += 1;
    }
    Ok(format!("smoke suite byte-identical ({} bytes); {resumed} interrupted runs resume exactly", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("appendix forensics", appendix_forensics),
        ("cubic witness roundtrip", theorem1_roundtrip),
        ("no split cubic for 3 <= n <= 5", corollary1_sweep),
        ("Lander-Parkin rediscovery", lander_parkin),
        ("oracle equivalence and partition invariance", oracle_equivalence),
        ("desk claim suite", desk_claims),
        ("positive controls", positive_controls),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
