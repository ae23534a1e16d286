//! The ten acceptance criteria, each reported as one PASS/FAIL line.
//!
//! Runs without the libtest harness so the lines are always printed; exits
//! nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use octoweak::{run_suite, SuiteConfig, SuiteReport};
use octoweak_core::fields::{
    dexp_at, dirac_scalar, exp_field_at, lorentz_invariance_residual, monomials_up_to,
};
use octoweak_core::grading::{sample_with, SubspaceTag};
use octoweak_core::lorentz::{lambda_s, lambda_v, Theta};
use octoweak_core::{CplxOcton, Point, PolyField, STRUCTURE_TABLE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

struct Check {
    ok: bool,
    detail: String,
}

impl Check {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Check {
            ok,
            detail: detail.into(),
        }
    }

    fn and(self, other: Check) -> Check {
        Check::new(
            self.ok && other.ok,
            format!("{}; {}", self.detail, other.detail),
        )
    }
}

fn suite(id: &str, samples: usize, tol: f64) -> Check {
    let cfg = SuiteConfig::default();
    match run_suite(id, &cfg) {
        Ok(r) => suite_check(&r, samples, tol),
        Err(e) => Check::new(false, format!("{id}: {e}")),
    }
}

fn suite_check(r: &SuiteReport, samples: usize, tol: f64) -> Check {
    let mut detail = format!(
        "{} n={} max={:.2e} < {:.0e}",
        r.suite_id, r.samples, r.max_residual, tol
    );
    let mut ok = r.passed && r.samples == samples && r.max_residual < tol;
    if let Some(w) = r.witness_residual {
        detail.push_str(&format!(" witness={w:.2e} > 1e-3"));
        ok &= w > 1e-3;
    }
    Check::new(ok, detail)
}

fn all(checks: impl IntoIterator<Item = Check>) -> Check {
    checks
        .into_iter()
        .reduce(Check::and)
        .unwrap_or_else(|| Check::new(false, "no checks"))
}

fn gamma5() -> Check {
    suite("gamma5", 1, 1e-14)
}

fn lorentz_algebra() -> Check {
    suite("lorentz-algebra", 256, 1e-12)
}

fn infinitesimal_double_cover() -> Check {
    suite("infinitesimal-dc", 64, 1e-12)
}

fn finite_double_cover() -> Check {
    all([
        suite("double-cover", 500, 1e-9),
        suite("rotation-unitarity", 500, 1e-10),
        suite("boost-selfconj", 500, 1e-10),
    ])
}

fn algebra_identities() -> Check {
    all([
        "ip-moves",
        "zvengrowski",
        "ab-identities",
        "grading-closure",
        "composition-law",
        "alternativity",
    ]
    .map(|id| suite(id, 1000, 1e-12)))
}

/// Moving β with Λ_S from the left, as for α, must not preserve the bilinear.
fn beta_law_is_needed() -> Check {
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    let f = PolyField::random(&mut rng, 2, SubspaceTag::B, 1.0);
    let theta = Theta::single(0, 1, 0.7).with(1, 2, 0.4);
    let p = Point::new([0.2, -0.5, 0.3, 0.9]);
    let ls = lambda_s(&theta);
    let inverse = lambda_v(&theta.negated()).real_part();
    let wrong = f
        .pullback_linear(&inverse)
        .map_coefficients(|c| ls * *c)
        .with_tag(SubspaceTag::B)
        .expect("left multiplication by C⊗A keeps C⊗B");
    let moved = Point::new(lambda_v(&theta).apply(p.x));
    let broken = (dirac_scalar(&wrong, &moved).unwrap() - dirac_scalar(&f, &p).unwrap()).norm();
    let kept = lorentz_invariance_residual(&f, &theta, &p).unwrap();
    Check::new(
        broken > 1e-3 && kept < 1e-9,
        format!("β' = Λ̄*β residual {kept:.2e}, β' = Λβ residual {broken:.2e}"),
    )
}

fn lorentz_invariance() -> Check {
    all([
        suite("prop1-A", 200, 1e-9),
        suite("prop1-B", 200, 1e-9),
        beta_law_is_needed(),
    ])
}

fn gauge() -> Check {
    all(["prop2", "prop3", "prop5", "lemma3", "lemma4"].map(|id| suite(id, 300, 1e-8)))
}

fn coupling_dichotomy() -> Check {
    suite("prop4-dichotomy", 100, 1e-10)
}

type Quat = [f64; 4];

fn hamilton(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn qconj(a: Quat) -> Quat {
    [a[0], -a[1], -a[2], -a[3]]
}

/// `(a, b)(c, d) = (ac − d̄b, da + bc̄)`
fn cayley_dickson(x: [f64; 8], y: [f64; 8]) -> [f64; 8] {
    let split =
        |v: [f64; 8]| -> (Quat, Quat) { (v[..4].try_into().unwrap(), v[4..].try_into().unwrap()) };
    let ((a, b), (c, d)) = (split(x), split(y));
    let (ac, db) = (hamilton(a, c), hamilton(qconj(d), b));
    let (da, bc) = (hamilton(d, a), hamilton(b, qconj(c)));
    let mut out = [0.0; 8];
    for k in 0..4 {
        out[k] = ac[k] - db[k];
        out[k + 4] = da[k] + bc[k];
    }
    out
}

fn table_oracle() -> Check {
    let unit = |k: usize| {
        let mut v = [0.0; 8];
        v[k] = 1.0;
        v
    };
    let mut mismatches = 0;
    for a in 0..8 {
        for b in 0..8 {
            let oracle = cayley_dickson(unit(a), unit(b));
            let expected = (0..8)
                .find(|&k| oracle[k] != 0.0)
                .map(|k| (oracle[k] as i8, k));
            let single = oracle.iter().filter(|v| **v != 0.0).count() == 1;
            if !single || expected != Some(STRUCTURE_TABLE.product(a, b)) {
                mismatches += 1;
            }
        }
    }
    Check::new(
        mismatches == 0,
        format!("table vs Cayley–Dickson: {mismatches}/64 mismatches"),
    )
}

fn exp_oracle() -> Check {
    let mut rng = ChaCha20Rng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let mut u = sample_with(&mut rng, SubspaceTag::A, 1.0);
        let n = u.magnitude();
        if n > 1.0 {
            u = u / n * rng.gen_range(0.0..1.0);
        }
        let mut series = CplxOcton::ONE;
        let mut term = CplxOcton::ONE;
        for k in 1..20 {
            term = term * u / k as f64;
            series += term;
        }
        worst = worst.max((u.exp_assoc().unwrap() - series).magnitude());
    }
    Check::new(
        worst < 1e-12,
        format!("exp vs Taylor max={worst:.2e} < 1e-12"),
    )
}

fn dexp_oracle() -> Check {
    let h = 1e-5;
    let mut rng = ChaCha20Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let terms = monomials_up_to(2).into_iter().map(|m| {
            (
                m,
                sample_with(&mut rng, SubspaceTag::A, 0.5 / 2.0f64.sqrt()),
            )
        });
        let u = PolyField::from_terms(terms)
            .with_tag(SubspaceTag::A)
            .unwrap();
        let p = Point::random(&mut rng, 1.0);
        for mu in 0..4 {
            let shifted = |s: f64| {
                let mut q = p;
                q.x[mu] += s;
                exp_field_at(&u, &q).unwrap()
            };
            let fd = (shifted(h) - shifted(-h)) / (2.0 * h);
            worst = worst.max((fd - dexp_at(&u, mu, &p).unwrap()).magnitude());
        }
    }
    Check::new(
        worst < 1e-7,
        format!("dexp vs central difference max={worst:.2e} < 1e-7"),
    )
}

fn oracles() -> Check {
    all([exp_oracle(), dexp_oracle(), table_oracle()])
}

fn full_run() -> Check {
    let dir = tempfile::tempdir().expect("temp dir");
    let limit = Duration::from_secs(60);
    let mut outputs = Vec::new();
    let mut detail = Vec::new();
    let mut ok = true;
    for k in 0..2 {
        let path = dir.path().join(format!("run{k}.json"));
        let start = Instant::now();
        let status = Command::new(env!("CARGO_BIN_EXE_octoweak"))
            .args(["--report", "json", "--out"])
            .arg(&path)
            .env_remove("OCTOWEAK_SEED")
            .status()
            .expect("spawn octoweak");
        let elapsed = start.elapsed();
        ok &= status.code() == Some(0) && elapsed < limit;
        detail.push(format!(
            "run {k}: exit {:?} in {:.1}s",
            status.code(),
            elapsed.as_secs_f64()
        ));
        outputs.push(std::fs::read(&path).unwrap_or_default());
    }
    let identical = !outputs[0].is_empty() && outputs[0] == outputs[1];
    detail.push(format!("JSON byte-identical: {identical}"));
    Check::new(ok && identical, detail.join("; "))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Check);
    let criteria: [Criterion; 10] = [
        ("gamma5 triviality", gamma5),
        ("Lorentz algebra, exhaustive", lorentz_algebra),
        (
            "infinitesimal double cover, exhaustive",
            infinitesimal_double_cover,
        ),
        (
            "finite double cover and rotation/boost checks",
            finite_double_cover,
        ),
        ("algebra identities", algebra_identities),
        ("Lorentz invariance of the bilinears", lorentz_invariance),
        ("gauge invariance and covariance", gauge),
        ("coupling dichotomy", coupling_dichotomy),
        ("oracle equivalence", oracles),
        ("full default run", full_run),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let c = check();
        failed += usize::from(!c.ok);
        println!(
            "criterion {:>2} {} {name}: {}",
            n + 1,
            if c.ok { "PASS" } else { "FAIL" },
            c.detail
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
