// Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
// harness so the lines always reach the output.

use std::time::{Duration, Instant};

use lgorbit::cli::{canonical_json, run_command, strip_timing, Check};
use lgorbit::exact::GaussianRational;
use lgorbit::lgfib::{critical_points, rational_potential_symbolic};
use lgorbit::liecore::FormSpec;
use lgorbit::orbit::OrbitSpec;
use lgorbit::polyideal::{PolyMatrix, Polynomial};
use serde_json::Value;

type Outcome = Result<(), String>;

fn verify(args: &str) -> Result<Value, String> {
    let argv: Vec<&str> = args.split_whitespace().collect();
    let (code, out) = run_command(&argv);
    let v: Value = serde_json::from_str(&out).map_err(|e| format!("{args}: bad json {e}"))?;
    if code != 0 || v["passed"] != true {
        return Err(format!("{args}: exit {code}, witnesses {}", v["witnesses"]));
    }
    Ok(v)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn adjugate() -> Outcome {
    // 50 matrices in each dimension 2..=5
    for n in 1..=4 {
        verify(&format!("verify adjugate --n {n} --samples 50 --seed 101"))?;
    }
    Ok(())
}

fn trace_one() -> Outcome {
    for n in 1..=4 {
        verify(&format!("verify trace-one --n {n} --samples 100 --seed 102"))?;
    }
    Ok(())
}

fn sl2_suite() -> Outcome {
    let v = verify("verify fiber-sl2 --samples 30 --seed 103")?;
    let d = &v["details"];
    ensure(d["critical_values"] == serde_json::json!(["-2", "2"]), "critical values")?;
    ensure(d["boundary"] == serde_json::json!(["[0:1:0:0]", "[0:0:1:0]"]), "boundary points")
}

fn census() -> Outcome {
    for n in 1..=6 {
        let spec = OrbitSpec::minimal_default(n);
        let pts = critical_points(&spec, &FormSpec::trace()).map_err(|e| e.to_string())?;
        ensure(pts.len() == n + 1, format!("n = {n}: {} critical points", pts.len()))?;
        for (p, lambda) in pts.iter().zip(spec.lambdas()) {
            let l = GaussianRational::from_real(lambda);
            ensure(p.r_value == l, format!("n = {n}: R value {}", p.r_value))?;
            ensure(
                p.f_value == &l * &GaussianRational::from_i64(n as i64 + 1),
                format!("n = {n}: f value {}", p.f_value),
            )?;
        }
    }
    Ok(())
}

fn ratmap() -> Outcome {
    for n in 1..=4 {
        let v = verify(&format!("verify ratmap --n {n} --samples 100 --seed 105"))?;
        ensure(v["details"]["indeterminate_on_sigma"] == 100, "indeterminacy on Σ")?;
    }
    verify("verify ratmap --n 2 --h 3,-2,-1 --samples 100 --seed 7")?;
    Ok(())
}

fn sl3_formula() -> Outcome {
    let spec = OrbitSpec::minimal_i64(2, &[3, -2, -1]).map_err(|e| e.to_string())?;
    let sym = rational_potential_symbolic(&spec).map_err(|e| e.to_string())?;
    let parse = |s: &str| Polynomial::parse(s, &sym.variables).map_err(|e| e.to_string());
    let num = parse("3*a11*a33*a22 - 3*a11*a23*a32 - 2*a21*a13*a32 + 2*a21*a33*a12 - a31*a23*a12 + a31*a13*a22")?;
    let den = parse("a11*a33*a22 - a11*a23*a32 + a21*a13*a32 - a21*a33*a12 + a31*a23*a12 - a31*a13*a22")?;
    ensure(sym.numerator == num, "numerator")?;
    ensure(sym.denominator == den, "denominator")?;
    ensure(sym.denominator == PolyMatrix::generic(3).det(), "denominator is det")
}

fn lefschetz() -> Outcome {
    for n in 1..=4 {
        let v = verify(&format!("verify hessian --n {n}"))?;
        if n == 1 {
            let h = &v["details"]["hessians"][0];
            ensure(*h == serde_json::json!([["0", "4"], ["4", "0"]]), format!("sl2 Hessian {h}"))?;
        }
    }
    verify("verify hessian --n 3 --h 5,1,-2,-4")?;
    Ok(())
}

fn symplectic() -> Outcome {
    for n in 1..=3 {
        verify(&format!("verify symplectic --n {n} --samples 50 --seed 108"))?;
        verify(&format!("verify lagrangian --n {n}"))?;
    }
    Ok(())
}

fn charts() -> Outcome {
    for n in 1..=3 {
        verify(&format!("verify charts --n {n} --samples 200 --seed 109"))?;
    }
    Ok(())
}

fn segre() -> Outcome {
    for n in 1..=2 {
        let v = verify(&format!("verify segre --n {n} --samples 20 --seed 110"))?;
        ensure(v["details"]["ideal_equal"] == true, format!("n = {n}: ideals differ"))?;
    }
    for n in 3..=4 {
        verify(&format!("verify segre --n {n} --samples 100 --seed 110"))?;
    }
    Ok(())
}

fn determinism() -> Outcome {
    for check in Check::ALL {
        let args = format!("verify {} --n 2 --samples 8 --seed 111", check.name());
        let argv: Vec<&str> = args.split_whitespace().collect();
        let once = |_: ()| -> Result<String, String> {
            let (_, out) = run_command(&argv);
            let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
            Ok(canonical_json(&strip_timing(&v)))
        };
        ensure(once(())? == once(())?, format!("{} is not reproducible", check.name()))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        ("1 adjugate identities", adjugate, Duration::from_secs(5)),
        ("2 trace one and eigenstructure", trace_one, Duration::from_secs(10)),
        ("3 sl2 fibers and critical values", sl2_suite, Duration::from_secs(1)),
        ("4 critical census", census, Duration::from_secs(5)),
        ("5 rational map agreement", ratmap, Duration::from_secs(10)),
        ("6 sl3 rational map formula", sl3_formula, Duration::from_secs(1)),
        ("7 Lefschetz nondegeneracy", lefschetz, Duration::from_secs(30)),
        ("8 symplectic and Lagrangian", symplectic, Duration::from_secs(30)),
        ("9 Bruhat charts", charts, Duration::from_secs(30)),
        ("10 Segre compactification", segre, Duration::from_secs(60)),
        ("11 determinism", determinism, Duration::ZERO),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Err(e) => Err(e),
            Ok(()) if !limit.is_zero() && elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            Ok(()) => Ok(()),
        };
        match verdict {
            Ok(()) => println!("PASS criterion {name} ({elapsed:.2?})"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name}: {e}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
