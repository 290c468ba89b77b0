//! Acceptance criteria 1-13. Each test prints one line
//! `criterion N ...: PASS|FAIL (elapsed / budget) details` to stderr and
//! fails if the check fails or the time budget is exceeded. Criteria run one
//! at a time so that timings are not distorted by each other.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use quasimap::asymptotics::{
    closed_form_l_local, extended_laurent_fit, g_ring_basis, laurent_powers, ring_fit_adaptive, solve_leading, solve_r,
    twisted_denominator,
};
use quasimap::cyclo::rat;
use quasimap::generators::{
    eisenstein_and_delta, elliptic_generators, genus1_rhs, k3_generators, local_generators, mirror_map,
    mirror_transport, ASYZ, QEF_RELATIONS, QKF_RELATIONS,
};
use quasimap::ifunction::small_i_function;
use quasimap::picard_fuchs::verify_annihilation;
use quasimap::relations::{
    verify_fg2, verify_k3_quadratic, verify_prop_mg, verify_relation_re, verify_root_symmetry, verify_table,
    verify_unitriangular, verify_vanishing_jkm, RelationResult, Status,
};
use quasimap::{Axis, BiSeries, ClassRing, Cyclo, Preset, UniSeries};

static SERIAL: Mutex<()> = Mutex::new(());

type Check = Result<String, String>;

fn criterion(n: u32, title: &str, budget: Duration, f: impl FnOnce() -> Check) {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let r = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(p) => Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())),
    };
    let el = t.elapsed();
    let (ok, detail) = match &r {
        Ok(d) if el <= budget => (true, d.clone()),
        Ok(d) => (false, format!("{d}; over time budget")),
        Err(e) => (false, e.clone()),
    };
    let line = format!(
        "criterion {n:>2} {title}: {} ({:.2}s / {}s) {detail}\n",
        if ok { "PASS" } else { "FAIL" },
        el.as_secs_f64(),
        budget.as_secs()
    );
    // written past the test harness capture so every line shows up in the log
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(ok, "{}", line.trim_end());
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn failures(rs: &[RelationResult]) -> Vec<String> {
    rs.iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| match r.first_mismatch {
            Some(m) => format!("{} at q^({},{})", r.id, m[0], m[1]),
            None => r.id.clone(),
        })
        .collect()
}

fn all_pass(rs: &[RelationResult]) -> Check {
    let bad = failures(rs);
    if bad.is_empty() {
        Ok(format!("{} relations", rs.len()))
    } else {
        Err(format!("{}/{} failing: {}", bad.len(), rs.len(), bad.join(", ")))
    }
}

fn ints(s: &UniSeries, k: usize) -> Vec<String> {
    (0..=k).map(|i| s.coeff(i)).map(|c| c.as_rational().map_or_else(|| c.to_string(), |r| r.to_string())).collect()
}

#[test]
fn criterion_01_generator_expansions() {
    criterion(1, "generator expansions", secs(1), || {
        let l = elliptic_generators(2).map_err(|e| e.to_string())?;
        let x = local_generators(3).map_err(|e| e.to_string())?;
        let want_l: Vec<Cyclo> = [1, 9, 162].iter().map(|&v| Cyclo::from_int(v, 1)).collect();
        let want_x: Vec<Cyclo> = [1, 4, 24, 160].iter().map(|&v| Cyclo::from_int(v, 1)).collect();
        let got_l = l.get("L").unwrap().coeffs();
        let got_x = x.get("X").unwrap().coeffs();
        if got_l == want_l && got_x == want_x {
            Ok("L = 1+9q+162q^2, X = 1+4q+24q^2+160q^3".into())
        } else {
            Err(format!("L {:?}, X {:?}", ints(l.get("L").unwrap(), 2), ints(x.get("X").unwrap(), 3)))
        }
    });
}

#[test]
fn criterion_02_picard_fuchs_annihilation() {
    criterion(2, "Picard-Fuchs annihilation (8,4)", secs(240), || {
        let mut times = Vec::new();
        for p in Preset::ALL {
            let t = Instant::now();
            let ring = ClassRing::preset(p);
            let i = small_i_function(&ring, (8, 4), (-6, 4)).map_err(|e| e.to_string())?;
            for a in verify_annihilation(&ring.geometry, &i).map_err(|e| e.to_string())? {
                if let Some((d, m)) = a.first_nonzero {
                    return Err(format!("{p} op{} nonzero at q^{d:?} z^{m}", a.operator));
                }
            }
            let el = t.elapsed();
            if el > secs(60) {
                return Err(format!("{p} took {el:.1?} (budget 60s per preset)"));
            }
            times.push(format!("{}={:.1}s", p.name(), el.as_secs_f64()));
        }
        Ok(times.join(" "))
    });
}

#[test]
fn criterion_03_quasimodularity() {
    criterion(3, "quasimodular E2/E4/E6 through Q^8", secs(30), || {
        let n = 8;
        let g = elliptic_generators(n).map_err(|e| e.to_string())?;
        let m = eisenstein_and_delta(n).map_err(|e| e.to_string())?;
        let mirror = mirror_map(g.get("T").unwrap()).map_err(|e| e.to_string())?;
        let mut bad = Vec::new();
        for (k, src) in ASYZ {
            let t = mirror_transport(&g.eval(src).map_err(|e| e.to_string())?, &mirror).map_err(|e| e.to_string())?;
            for i in 0..=n {
                if t.coeff(i) != m.named[k].coeff(i) {
                    bad.push(format!("{k} Q^{i}: got {} want {}", t.coeff(i), m.named[k].coeff(i)));
                }
            }
        }
        if bad.is_empty() {
            Ok("3 identities, 27 coefficients".into())
        } else {
            Err(bad.join("; "))
        }
    });
}

#[test]
fn criterion_04_d_closure() {
    criterion(4, "D-closure QEF/QKF through q^12", secs(5), || {
        let e = elliptic_generators(12).map_err(|e| e.to_string())?;
        let k = k3_generators(12).map_err(|e| e.to_string())?;
        let mut bad = Vec::new();
        for (g, rels) in [(&e, &QEF_RELATIONS), (&k, &QKF_RELATIONS)] {
            for (id, src) in rels.iter() {
                let s = g.eval(src).map_err(|e| e.to_string())?;
                if let Some(i) = (0..=12).find(|&i| !s.coeff(i).is_zero()) {
                    bad.push(format!("{id} at q^{i}"));
                }
            }
        }
        if bad.is_empty() {
            Ok("4 relations".into())
        } else {
            Err(bad.join(", "))
        }
    });
}

#[test]
fn criterion_05_local_leading_data() {
    criterion(5, "local leading data and root symmetry through q1^12", secs(30), || {
        let g = Preset::LocalP1P1.spec();
        for pt in g.fixed_points() {
            let (a, _) = solve_leading(&g, pt, (12, 0)).map_err(|e| e.to_string())?;
            let cf = closed_form_l_local(&g, pt, 12).map_err(|e| e.to_string())?;
            if let Some(d) = a.big_l.first_difference(cf.as_bi()) {
                return Err(format!("L{}{} differs at {d:?}", pt.0, pt.1));
            }
        }
        all_pass(&verify_root_symmetry(12).map_err(|e| e.to_string())?).map(|d| format!("4 fixed points; {d}"))
    });
}

#[test]
fn criterion_06_jkm_identities() {
    criterion(6, "twelve J/K/M identities at (5,3), two fixed points", secs(120), || {
        let rs = verify_prop_mg((5, 3), &[(0, 0), (1, 1)]).map_err(|e| e.to_string())?;
        if rs.len() != 24 {
            return Err(format!("expected 24 checks, got {}", rs.len()));
        }
        all_pass(&rs)
    });
}

#[test]
fn criterion_07_relation_re() {
    criterion(7, "relation Re through (5,3)", secs(60), || {
        all_pass(&verify_relation_re((5, 3), &[(0, 0)]).map_err(|e| e.to_string())?)
    });
}

#[test]
fn criterion_08_tables() {
    criterion(8, "table identities and K3 quadratic through q1^8", secs(120), || {
        let mut counts = Vec::new();
        let mut bad = Vec::new();
        for p in [Preset::ESurface32, Preset::E3fold33, Preset::K3Fib42] {
            let rs = verify_table(p, 8).map_err(|e| e.to_string())?;
            counts.push(format!("{}={}", p.name(), rs.len()));
            bad.extend(failures(&rs));
        }
        let q = verify_k3_quadratic(8).map_err(|e| e.to_string())?;
        bad.extend(failures(&q));
        if bad.is_empty() {
            Ok(format!("{} identities, quadratic j=0,1", counts.join(" ")))
        } else {
            Err(bad.join(", "))
        }
    });
}

#[test]
fn criterion_09_vanishing() {
    criterion(9, "JJ12=JJ13=KK12=KK13=MM11=MM12=0 through (6,3)", secs(30), || {
        all_pass(&verify_vanishing_jkm((6, 3)).map_err(|e| e.to_string())?)
    });
}

fn fit_line(
    name: String,
    r: quasimap::Result<(usize, quasimap::asymptotics::FitResult)>,
    bad: &mut Vec<String>,
) -> String {
    match r {
        Ok((b, f)) if f.validated_order >= f.fit_order + 5 => format!("{name}:ok(b={b})"),
        Ok(_) => {
            bad.push(format!("{name}: validation margin < 5"));
            format!("{name}:margin")
        }
        Err(e) => {
            bad.push(format!("{name}: {e}"));
            format!("{name}:fail")
        }
    }
}

#[test]
fn criterion_10_ring_membership() {
    criterion(10, "ring-membership fits", secs(120), || {
        let mut bad = Vec::new();
        let mut done = Vec::new();

        // G00 membership of R0, R1 slices (local, fixed point (0,0))
        let n = 32;
        let g = Preset::LocalP1P1.spec();
        let d = solve_r(&g, (0, 0), 1, (n, 1)).map_err(|e| e.to_string())?;
        let l = closed_form_l_local(&g, (0, 0), n).map_err(|e| e.to_string())?;
        let beta = g.weights2[0].clone();
        for (r, s) in d.ansatz.r.iter().enumerate() {
            for k in 0..=1 {
                let t = s.slice(k).map_err(|e| e.to_string())?;
                let res = ring_fit_adaptive(&t, 6, |b| g_ring_basis(&l, &beta, b));
                done.push(fit_line(format!("R{r}_{k}"), res, &mut bad));
            }
        }
        let r0 = d.ansatz.r[0].slice(1).map_err(|e| e.to_string())?;
        let bumped = UniSeries::from_bi(Axis::Q1, r0.as_bi().add(&BiSeries::monomial(Cyclo::one(4), (20, 0), (n, 0))));
        if ring_fit_adaptive(&bumped, 6, |b| g_ring_basis(&l, &beta, b)).is_ok() {
            bad.push("control R0_1+q1^20 fitted".into());
        }

        // a1, a2 in the r-basis, with the a1+q1^7 control
        for r in verify_fg2(n, 2).map_err(|e| e.to_string())? {
            done.push(format!(
                "{}:{}",
                r.id.trim_start_matches("fg2/"),
                if r.status == Status::Pass { "ok" } else { "fail" }
            ));
            if r.status == Status::Fail {
                bad.push(r.id);
            }
        }

        // L, UD, R0 slices in Laurent polynomials of L (twisted presets)
        let n = 20;
        for p in [Preset::ESurface32, Preset::E3fold33, Preset::K3Fib42] {
            let g = p.spec();
            let d = solve_r(&g, (0, 0), 1, (n, 1)).map_err(|e| e.to_string())?;
            let l = d.ansatz.big_l.slice(0).map_err(|e| e.to_string())?;
            for (name, s) in [("L", &d.ansatz.big_l), ("UD", &d.ansatz.ud), ("R0", &d.ansatz.r[0])] {
                for k in 0..=1 {
                    let t = s.slice(k).map_err(|e| e.to_string())?;
                    let res = ring_fit_adaptive(&t, 6, |b| laurent_powers(&l, -(b as i64), b as i64));
                    done.push(fit_line(format!("{}/{name}_{k}", p.name()), res, &mut bad));
                }
            }
        }
        if bad.is_empty() {
            Ok(done.join(" "))
        } else {
            Err(format!("{} of {} failing: {}", bad.len(), done.len(), bad.join("; ")))
        }
    });
}

#[test]
fn criterion_11_birkhoff_unitriangularity() {
    criterion(11, "Birkhoff unitriangularity at (6,3)", secs(60), || {
        all_pass(&verify_unitriangular((6, 3)).map_err(|e| e.to_string())?)
    });
}

#[test]
fn criterion_12_genus_one_sides() {
    criterion(12, "genus-1 right-hand sides through q1^10", secs(10), || {
        let n = 10;
        let e = elliptic_generators(n).map_err(|e| e.to_string())?;
        let k = k3_generators(n).map_err(|e| e.to_string())?;
        let (lx, x) = (e.get("L").unwrap().as_bi(), e.get("X").unwrap().as_bi());
        let (lk, xk) = (k.get("L").unwrap().as_bi(), k.get("X").unwrap().as_bi());
        let one = Cyclo::one(1);
        // built with series operations, independent of the formula parser
        let want = [
            (Preset::ESurface32, x.neg()),
            (
                Preset::E3fold33,
                lx.pow(3).add_constant(&-one.clone()).scale_rational(&rat(-1, 4)).sub(&x.scale_rational(&rat(3, 2))),
            ),
            (
                Preset::K3Fib42,
                lk.pow(4).neg().add_constant(&one).scale_rational(&rat(13, 12)).add(&xk.scale_rational(&rat(2, 1))),
            ),
        ];
        let mut heads = Vec::new();
        for (p, w) in want {
            let s = genus1_rhs(p, n).map_err(|e| e.to_string())?;
            if !s.coeff(0).is_zero() {
                return Err(format!("{p}: constant term {}", s.coeff(0)));
            }
            if s.as_bi() != &w {
                return Err(format!("{p}: expression mismatch"));
            }
            heads.push(format!("{}: {}", p.name(), ints(&s, 2).join(", ")));
        }
        Ok(heads.join("; "))
    });
}

#[test]
fn criterion_13_determinism() {
    criterion(13, "deterministic `verify all --profile quick`", secs(600), || {
        let dir = std::env::temp_dir().join(format!("quasimap-accept-{}", std::process::id()));
        std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
        let mut reports = Vec::new();
        let mut codes = Vec::new();
        for run in 0..2 {
            let out = dir.join(format!("report{run}.json"));
            let status = Command::new(env!("CARGO_BIN_EXE_quasimap"))
                .args(["verify", "all", "--profile", "quick", "--out"])
                .arg(&out)
                .stderr(std::process::Stdio::null())
                .status()
                .map_err(|e| e.to_string())?;
            codes.push(status.code().unwrap_or(-1));
            reports.push(std::fs::read(&out).map_err(|e| e.to_string())?);
        }
        if codes.iter().any(|c| !(0..=1).contains(c)) {
            return Err(format!("exit codes {codes:?}"));
        }
        if reports[0] != reports[1] {
            return Err("reports differ".into());
        }
        let v: serde_json::Value = serde_json::from_slice(&reports[0]).map_err(|e| e.to_string())?;
        let n = v["suites"].as_array().map_or(0, |a| a.len());
        Ok(format!("{} bytes identical, {n} suites, exit {}", reports[0].len(), codes[0]))
    });
}

/// Not a criterion: the twisted slices that leave C[L^{±1}] lie in the ring
/// extended by `W^{-1}` and the square root carried by `R0`'s leading slice.
#[test]
fn diagnostic_10_extended_ring() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let n = 20;
    let mut found = Vec::new();
    let mut missing = Vec::new();
    for p in [Preset::ESurface32, Preset::E3fold33, Preset::K3Fib42] {
        let g = p.spec();
        let d = solve_r(&g, (0, 0), 1, (n, 1)).unwrap();
        let l = d.ansatz.big_l.slice(0).unwrap();
        let w = twisted_denominator(&g, (0, 0), &l).unwrap();
        let h = d.ansatz.r[0].slice(0).unwrap();
        for (name, s) in [("L", &d.ansatz.big_l), ("UD", &d.ansatz.ud), ("R0", &d.ansatz.r[0])] {
            for k in 0..=1 {
                let id = format!("{}/{name}_{k}", p.name());
                match extended_laurent_fit(&s.slice(k).unwrap(), &l, &w, &h, 3, 7) {
                    Ok(((pp, e), _, _)) => found.push(format!("{id}:h^{pp}W^{e}")),
                    Err(_) => missing.push(id),
                }
            }
        }
    }
    let line = format!(
        "diagnostic 10 extended ring: {} of {} slices fit ({:.2}s) {} missing: {missing:?}\n",
        found.len(),
        found.len() + missing.len(),
        t.elapsed().as_secs_f64(),
        found.join(" ")
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    // the K3 R0 q2^1 slice needs more than 20 orders
    assert!(missing.iter().all(|m| m == "K3_FIB_42/R0_1"), "{line}");
}
