//! Acceptance suite: ten criteria, one PASS/FAIL line each. Runs as a
//! plain binary so the lines always reach the test log.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rayleigh::arith::{int, rat, rat_to_string};
use rayleigh::bounds::{euler_rayleigh_sequence, RealZeros};
use rayleigh::chf::s4_closed_form;
use rayleigh::mercer::verify_ode_with;
use rayleigh::oracle::{chf_sums_from_series, sigma_oracle_table, tau_oracle_table};
use rayleigh::zeros::{find_zeros, partial_sum_enclosure, ZeroFunction};
use rayleigh::{
    derive_pqr, s_table, sigma_table, tau_table, verify_ode, BigRat, ChfParams, MercerParams,
    NuMode, PolyNu, RatFuncNu, SumsTable, Value,
};
use rayleigh_cli::record::OutputRecord;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn secs(d: Duration) -> String {
    format!("{:.1} s", d.as_secs_f64())
}

fn pow10(k: u32) -> BigRat {
    BigRat::from_integer(num_traits::pow(int(10).to_integer(), k as usize))
}

fn eps(k: u32) -> BigRat {
    pow10(k).recip()
}

/// Deterministic samples shared by criteria 4, 6 and 10.
struct Samples {
    fixed_triples: Vec<MercerParams>,
    symbolic_triples: Vec<MercerParams>,
    ode_triples: Vec<MercerParams>,
    chf: Vec<ChfParams>,
}

fn small_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> BigRat {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

fn mercer_triple(rng: &mut ChaCha8Rng, mode: NuMode) -> MercerParams {
    loop {
        let (a, b, c) = (small_rat(rng, 9, 6), small_rat(rng, 9, 6), small_rat(rng, 9, 6));
        let p = derive_pqr(a, b, c, mode.clone());
        if p.check_nondegenerate().is_ok() {
            return p;
        }
    }
}

fn nu_in_open_range(rng: &mut ChaCha8Rng) -> BigRat {
    // (−1, 5)
    let den = rng.gen_range(1..=12);
    rat(rng.gen_range(-den + 1..5 * den), den)
}

impl Samples {
    fn new() -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
        let fixed_triples = (0..10)
            .map(|_| {
                let nu = nu_in_open_range(&mut rng);
                mercer_triple(&mut rng, NuMode::Fixed(nu))
            })
            .collect();
        let symbolic_triples = (0..3)
            .map(|_| mercer_triple(&mut rng, NuMode::Symbolic))
            .collect();
        let ode_triples = (0..5)
            .map(|_| mercer_triple(&mut rng, NuMode::Symbolic))
            .collect();
        let chf = (0..20)
            .map(|_| loop {
                let a = small_rat(&mut rng, 12, 6);
                let b = small_rat(&mut rng, 20, 6);
                if let Ok(p) = ChfParams::new(a, b) {
                    break p;
                }
            })
            .collect();
        Samples {
            fixed_triples,
            symbolic_triples,
            ode_triples,
            chf,
        }
    }
}

fn rf(num: PolyNu, den: PolyNu) -> RatFuncNu {
    RatFuncNu::normalize(num, den).expect("nonzero denominator")
}

fn poly(c: &[i64]) -> PolyNu {
    PolyNu::from_ints(c)
}

fn product(factors: &[PolyNu]) -> PolyNu {
    factors.iter().fold(PolyNu::one(), |acc, f| &acc * f)
}

fn power(p: &PolyNu, e: usize) -> PolyNu {
    product(&vec![p.clone(); e])
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let riccati = ok(sigma_table(20, &NuMode::Symbolic))?;
    let oracle = ok(sigma_oracle_table(20, &NuMode::Symbolic))?;
    let elapsed = start.elapsed();
    let (matched, total) = riccati.agreement(&oracle);
    ensure!(matched == 20 && total == 20, "only {matched}/{total} entries agree");
    let sigma1 = rf(poly(&[1]), poly(&[4, 4]));
    ensure!(riccati.entries[0] == Value::Symbolic(sigma1), "σ₁ = {}", riccati.entries[0]);
    ensure!(riccati.entries[0].to_string() == "1/(4ν + 4)", "σ₁ renders as {}", riccati.entries[0]);
    ensure!(elapsed < Duration::from_secs(60), "took {}", secs(elapsed));
    Ok(format!("20/20 entries equal, σ₁ = 1/(4(ν+1)), {}", secs(elapsed)))
}

fn criterion_2() -> Check {
    let params = derive_pqr(int(0), int(1), int(0), NuMode::Symbolic);
    let table = ok(tau_table(&params, 3))?;
    let nu = poly(&[0, 1]);
    let (n1, n2, n3) = (poly(&[1, 1]), poly(&[2, 1]), poly(&[3, 1]));
    let want = [
        rf(poly(&[2, 1]), product(&[poly(&[4]), nu.clone(), n1.clone()])),
        rf(
            poly(&[8, 8, 1]),
            product(&[poly(&[16]), power(&nu, 2), power(&n1, 2), n2.clone()]),
        ),
        rf(
            poly(&[24, 38, 16, 1]),
            product(&[poly(&[32]), power(&nu, 3), power(&n1, 3), n2, n3]),
        ),
    ];
    for (i, w) in want.iter().enumerate() {
        ensure!(
            table.entries[i] == Value::Symbolic(w.clone()),
            "τ{} = {}, expected {}",
            i + 1,
            table.entries[i],
            w
        );
    }
    Ok("τ₁, τ₂, τ₃ equal the closed forms".into())
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let params = derive_pqr(int(0), int(0), int(1), NuMode::Symbolic);
    let tau = ok(tau_table(&params, 20))?;
    let sigma = ok(sigma_table(20, &NuMode::Symbolic))?;
    ensure!(tau.entries == sigma.entries, "τ and σ tables differ");
    Ok(format!("τ = σ for all 20 entries, {}", secs(start.elapsed())))
}

fn compare(riccati: &SumsTable, oracle: &SumsTable, what: &str) -> Result<(), String> {
    let (matched, total) = riccati.agreement(oracle);
    ensure!(
        matched == total && total == riccati.entries.len(),
        "{what}: {matched}/{total} entries agree"
    );
    Ok(())
}

fn describe(p: &MercerParams) -> String {
    format!("(a, b, c) = ({}, {}, {}), ν = {}", p.a, p.b, p.c, p.mode)
}

fn criterion_4(s: &Samples) -> Check {
    let start = Instant::now();
    for p in &s.fixed_triples {
        compare(&ok(tau_table(p, 15))?, &ok(tau_oracle_table(p, 15))?, &describe(p))?;
    }
    let fixed_time = start.elapsed();
    for p in &s.symbolic_triples {
        compare(&ok(tau_table(p, 10))?, &ok(tau_oracle_table(p, 10))?, &describe(p))?;
    }
    Ok(format!(
        "10 fixed triples at N = 15 ({}), 3 symbolic at N = 10 ({})",
        secs(fixed_time),
        secs(start.elapsed() - fixed_time)
    ))
}

fn criterion_5(s: &Samples) -> Check {
    let start = Instant::now();
    let mut cases = vec![
        derive_pqr(int(0), int(0), int(1), NuMode::Symbolic),
        derive_pqr(int(0), int(1), int(0), NuMode::Symbolic),
        derive_pqr(int(0), int(1), int(1), NuMode::Symbolic),
    ];
    cases.extend(s.ode_triples.iter().cloned());
    for p in &cases {
        let report = ok(verify_ode(p, 20))?;
        ensure!(report.coefficients.len() == 21, "expected 21 coefficients");
        ensure!(report.vanishes(), "{}: residual nonzero at t^{:?}", describe(p), report.first_nonzero());
    }
    for p in &cases {
        let mut ode = p.ode_coefficients();
        ode.b_numerator[0] = &ode.b_numerator[0] + &PolyNu::one();
        let report = ok(verify_ode_with(p, &ode, 20))?;
        ensure!(!report.vanishes(), "{}: perturbed ODE still satisfied", describe(p));
    }
    Ok(format!(
        "{} parameter sets vanish through t^20, perturbed controls all nonzero, {}",
        cases.len(),
        secs(start.elapsed())
    ))
}

/// Power sums of reciprocal roots from the coefficients of a polynomial with
/// constant term 1, by Newton's identities.
fn newton_power_sums(coeffs: &[BigRat], max_power: usize) -> Vec<BigRat> {
    let e = |k: usize| -> BigRat {
        let c = coeffs.get(k).cloned().unwrap_or_else(|| int(0));
        if k.is_multiple_of(2) { c } else { -c }
    };
    let mut p = vec![int(0)];
    for m in 1..=max_power {
        let mut acc = e(m) * int(m as i64);
        if m % 2 == 0 {
            acc = -acc;
        }
        for i in 1..m {
            let term = e(i) * &p[m - i];
            acc += if i % 2 == 1 { term } else { -term };
        }
        p.push(acc);
    }
    p
}

fn chf_polynomial(n: i64, b: &BigRat) -> Vec<BigRat> {
    let mut c = vec![int(1)];
    for k in 0..n {
        let next = &c[k as usize] * (int(-n) + int(k)) / ((b + int(k)) * int(k + 1));
        c.push(next);
    }
    c
}

fn criterion_6(s: &Samples) -> Check {
    for p in &s.chf {
        let riccati = ok(s_table(p, 15))?;
        compare(&riccati, &ok(chf_sums_from_series(p, 15))?, &format!("(a, b) = ({}, {})", p.a(), p.b()))?;
        let v = riccati.fixed_values().expect("fixed");
        let (a, b) = (p.a(), p.b());
        let s2 = a * (a - b) / (b * b * (b + int(1)));
        let s3 = a * (a - b) * (b - int(2) * a) / (b * b * b * (b + int(1)) * (b + int(2)));
        ensure!(v[0] == s2 && v[1] == s3, "seeds fail at ({a}, {b})");
        ensure!(v[2] == s4_closed_form(p), "S₄ closed form fails at ({a}, {b})");
    }
    let mut polys = 0;
    for n in 1..=5i64 {
        for b in [int(1), rat(1, 2), int(3), rat(7, 3), rat(-5, 2)] {
            let p = ok(ChfParams::new(int(-n), b.clone()))?;
            let got = ok(s_table(&p, 8))?.fixed_values().expect("fixed");
            let want = newton_power_sums(&chf_polynomial(n, &b), 8);
            ensure!(got[..] == want[2..], "a = {}, b = {b}: {got:?} vs {:?}", -n, &want[2..]);
            if n == 1 {
                // single explicit root z = b
                let explicit: Vec<BigRat> = (2..=8).map(|k| b.recip().pow(k)).collect();
                ensure!(got == explicit, "a = −1, b = {b}: not b^(−p)");
            }
            polys += 1;
        }
    }
    let unit = ok(s_table(&ok(ChfParams::new(int(-1), int(1)))?, 4))?;
    ensure!(unit.fixed_values() == Some(vec![int(1); 3]), "(−1, 1) gives {:?}", unit.fixed_values());
    Ok(format!("20 random pairs at P = 15, {polys} polynomial cases, seeds and S₄ hold, (−1,1) → 1,1,1"))
}

fn bernoulli(max: usize) -> Vec<BigRat> {
    // Σ_{k=0}^{m} C(m+1, k) B_k = 0
    let mut b = vec![int(1)];
    for m in 1..=max {
        let mut binom = int(1);
        let mut acc = int(0);
        for (k, bk) in b.iter().enumerate() {
            acc += &binom * bk;
            binom = binom * int((m + 1 - k) as i64) / int(k as i64 + 1);
        }
        b.push(-acc / int(m as i64 + 1));
    }
    b
}

fn criterion_7() -> Check {
    let sigma = ok(sigma_table(10, &NuMode::Fixed(rat(1, 2))))?.fixed_values().expect("fixed");
    let b = bernoulli(20);
    let mut factorial = int(1);
    for n in 1..=10usize {
        factorial = factorial * int(2 * n as i64 - 1) * int(2 * n as i64);
        let two_pow = int(2).pow(2 * n as i32 - 1);
        let b2n = b[2 * n].abs();
        let identity = &sigma[n - 1] * &factorial / (&two_pow * &b2n);
        ensure!(identity == int(1), "n = {n}: σₙ(1/2)(2n)!/(2^(2n−1)|B₂ₙ|) = {identity}");
        let as_printed = &sigma[n - 1] * &factorial * &two_pow / &b2n;
        ensure!(as_printed == int(2).pow(4 * n as i32 - 2), "n = {n}: unexpected {as_printed}");
    }
    // π ∈ (3.14159265358979323846, 3.14159265358979323847)
    let pi_lo = BigRat::new(314159265358979323846u128.into(), 100000000000000000000u128.into());
    let pi_hi = &pi_lo + eps(20);
    let zeros = ok(find_zeros(&ZeroFunction::Bessel { nu: rat(1, 2) }, 5, &eps(10), RealZeros::Unasserted))?;
    for z in &zeros {
        let k = int(z.index as i64);
        let (lo, hi) = (&k * &k * &pi_lo * &pi_lo, &k * &k * &pi_hi * &pi_hi);
        ensure!(z.lo <= lo && hi <= z.hi, "zero {} does not contain (kπ)²", z.index);
    }
    Ok(
        "σₙ(1/2)·(2n)!/(2^(2n−1)|B₂ₙ|) = 1 for n ≤ 10 (the printed arrangement equals 2^(4n−2)); \
         (kπ)² bracketed for k ≤ 5"
            .into(),
    )
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let zeros = ok(find_zeros(&ZeroFunction::Bessel { nu: int(0) }, 50, &eps(15), RealZeros::Unasserted))?;
    let riccati = ok(sigma_table(4, &NuMode::Fixed(int(0))))?.fixed_values().expect("fixed");
    let oracle = ok(sigma_oracle_table(4, &NuMode::Fixed(int(0))))?.fixed_values().expect("fixed");
    ensure!(riccati == oracle, "recurrence and series oracle differ");
    ensure!(riccati[0] == rat(1, 4) && riccati[1] == rat(1, 32), "unexpected σ₁, σ₂");
    let mut widths = Vec::new();
    for n in 1..=4 {
        let e = ok(partial_sum_enclosure(&zeros, n))?;
        ensure!(e.contains(&riccati[n - 1]), "n = {n}: σ not in [{}, {}]", e.lower, e.upper);
        widths.push(rayleigh::arith::to_decimal(&e.width(), 10));
    }
    Ok(format!("M = 50, σ₁..σ₄ inside every enclosure, widths {}, {}", widths.join(" / "), secs(start.elapsed())))
}

fn criterion_9() -> Check {
    let table = ok(sigma_table(11, &NuMode::Fixed(int(0))))?;
    let brackets = ok(euler_rayleigh_sequence(&table, 10, RealZeros::Unasserted, &eps(30)))?;
    let zero = ok(find_zeros(&ZeroFunction::Bessel { nu: int(0) }, 1, &eps(12), RealZeros::Unasserted))?
        .remove(0);
    ensure!(
        brackets[0].lower_enclosure == (int(4), int(4)) && brackets[0].exact_upper == int(8),
        "n = 1 bracket is not (4, 8)"
    );
    for w in brackets[..8].windows(2) {
        ensure!(w[0].lower_enclosure.1 <= w[1].lower_enclosure.0, "lower bound decreases at n = {}", w[1].n);
        ensure!(w[1].exact_upper <= w[0].exact_upper, "upper bound increases at n = {}", w[1].n);
    }
    for b in &brackets[..8] {
        ensure!(b.contains_interval(&zero.lo, &zero.hi), "n = {}: bracket misses j₀,₁²", b.n);
    }
    let gap10 = &brackets[9].exact_upper - brackets[9].lower();
    Ok(format!(
        "monotone for n = 1..8, all contain j₀,₁² ∈ [{}, {}]; gap at n = 10 is {}",
        rayleigh::arith::to_decimal(&zero.lo, 9),
        rayleigh::arith::to_decimal(&zero.hi, 9),
        rayleigh::arith::to_decimal(&gap10, 12)
    ))
}

fn cli(args: &[String]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rayleigh".to_string()).chain(args.iter().cloned());
    let code = rayleigh_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into(), String::from_utf8_lossy(&err).into())
}

fn args(s: &[&str]) -> Vec<String> {
    s.iter().map(|x| x.to_string()).collect()
}

fn tau_verify_args(p: &MercerParams, order: usize) -> Vec<String> {
    let mut v = args(&["verify", "--family", "tau"]);
    for (flag, x) in [("--a", &p.a), ("--b", &p.b), ("--c", &p.c)] {
        v.push(flag.into());
        v.push(rat_to_string(x));
    }
    v.push("--nu".into());
    v.push(match &p.mode {
        NuMode::Symbolic => "symbolic".into(),
        NuMode::Fixed(x) => rat_to_string(x),
    });
    v.push("--order".into());
    v.push(order.to_string());
    v
}

fn criterion_10(s: &Samples) -> Check {
    let mut runs = vec![
        args(&["verify", "--family", "sigma", "--nu", "symbolic", "--order", "20"]),
        args(&["verify", "--family", "tau", "--a", "0", "--b", "0", "--c", "1", "--nu", "symbolic", "--order", "20"]),
    ];
    runs.extend(s.fixed_triples.iter().map(|p| tau_verify_args(p, 15)));
    runs.extend(s.symbolic_triples.iter().map(|p| tau_verify_args(p, 10)));
    for p in &s.chf {
        let mut v = args(&["verify", "--family", "chf", "--a"]);
        v.extend([rat_to_string(p.a()), "--b".into(), rat_to_string(p.b()), "--order".into(), "15".into()]);
        runs.push(v);
    }
    for r in &runs {
        let (code, out, err) = cli(r);
        ensure!(code == 0 && out.contains(": PASS ("), "{} exited {code}: {out}{err}", r.join(" "));
    }

    let (code, out, err) = cli(&args(&["sums", "sigma", "--nu", "symbolic", "--order", "20", "--format", "json"]));
    ensure!(code == 0, "sums json failed: {err}");
    let record: OutputRecord = ok(serde_json::from_str(&out))?;
    let again = ok(serde_json::to_string_pretty(&record))?;
    ensure!(again + "\n" == out, "JSON text does not round-trip");
    ensure!(ok(record.to_table())? == ok(sigma_table(20, &NuMode::Symbolic))?, "JSON does not rebuild the table");

    let (code, _, err) = cli(&args(&["sums", "sigma", "--nu", "-1", "--order", "5"]));
    ensure!(code == 3 && err.contains("pole at index 1"), "ν = −1 gave exit {code}: {err}");
    Ok(format!("{} verify runs exit 0, JSON round-trips, ν₀ = −1 exits 3 naming the pole", runs.len()))
}

fn main() {
    let samples = Samples::new();
    let criteria: Vec<Criterion> = vec![
        ("sigma recurrence reproduction", Box::new(criterion_1)),
        ("J′ closed forms", Box::new(criterion_2)),
        ("Bessel reduction", Box::new(criterion_3)),
        ("Mercer oracle equivalence", Box::new(|| criterion_4(&samples))),
        ("ODE verification", Box::new(|| criterion_5(&samples))),
        ("confluent sums", Box::new(|| criterion_6(&samples))),
        ("half-integer case", Box::new(criterion_7)),
        ("three-way numeric agreement", Box::new(criterion_8)),
        ("Euler–Rayleigh behavior", Box::new(criterion_9)),
        ("CLI contract", Box::new(|| criterion_10(&samples))),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut passed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            });
        match result {
            Ok(detail) => {
                passed += 1;
                println!("criterion {:>2} [{name}]: PASS ({detail})", i + 1);
            }
            Err(reason) => println!("criterion {:>2} [{name}]: FAIL ({reason})", i + 1),
        }
    }
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
