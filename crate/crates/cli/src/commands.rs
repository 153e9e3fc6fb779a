use crate::output::{self, complex, complexes, matrix, nodes, rational, rationals, roots, SCHEMA_VERSION};
use crate::{svg, Failure, RunConfig};
use coxstokes::chevalley::ChevalleyAlgebra;
use coxstokes::coxeter::{bipartition, coxeter_plane, kostant_chain, singular_directions, Bipartition};
use coxstokes::oracle::{build_system, numerical_monodromy};
use coxstokes::rep::Representation;
use coxstokes::spectrum::{ad_spectrum, build_e_plus, default_coeffs, match_plane, pi2_anchor};
use coxstokes::steinberg::characters::DIMENSION_CAP;
use coxstokes::steinberg::{alcove_map, semisimple_spectrum_check, AsymptoticData, StokesContext};
use coxstokes::{AlgebraType, Error, Family, RootSystem};
use num_rational::Rational64;
use serde_json::{json, Value};

#[derive(Debug)]
pub enum Data {
    M(Vec<Rational64>),
    K(Vec<Rational64>),
}

#[derive(Debug)]
pub enum Job {
    Describe { ty: String },
    Plane { ty: String },
    Verify { types: Vec<String>, pi2: Option<Vec<usize>>, max_dim: usize },
    Stokes { ty: String, data: Data, rep: String },
    Monodromy { ty: String, k: Vec<Rational64>, z: f64, c: Option<Vec<f64>>, radius: f64 },
}

/// Run the job; `Ok(false)` means a check failed.
pub fn run(cfg: &RunConfig) -> Result<bool, Failure> {
    let (report, passed) = match &cfg.command {
        Job::Describe { ty } => (describe(ty)?, true),
        Job::Plane { ty } => (plane(ty, cfg)?, true),
        Job::Verify { types, pi2, max_dim } => verify(types, pi2.as_deref(), *max_dim, cfg)?,
        Job::Stokes { ty, data, rep } => stokes(ty, data, rep, cfg)?,
        Job::Monodromy { ty, k, z, c, radius } => monodromy(ty, k, *z, c.as_deref(), *radius, cfg)?,
    };
    output::emit(&report, cfg.json_out.as_deref()).map_err(|e| Failure::Domain(format!("writing JSON: {e}")))?;
    Ok(passed)
}

fn describe(ty: &str) -> Result<Value, Failure> {
    let rs = RootSystem::from_str_type(ty)?;
    let bip = bipartition(&rs);
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "describe",
        "type": rs.ty.to_string(),
        "rank": rs.rank,
        "dimension": rs.ty.dimension(),
        "coxeter_number": rs.coxeter_number,
        "exponents": rs.exponents,
        "marks": rs.marks,
        "highest_root": rs.psi.coords,
        "num_roots": rs.num_roots(),
        "num_positive_roots": rs.positive_roots().count(),
        "cartan": rs.cartan,
        "bipartition": { "i1": nodes(&bip.i1), "i2": nodes(&bip.i2) },
    }))
}

fn plane(ty: &str, cfg: &RunConfig) -> Result<Value, Failure> {
    let rs = RootSystem::from_str_type(ty)?;
    let bip = bipartition(&rs);
    let p = coxeter_plane(&rs, &bip, cfg.tol_ray)?;
    if let Some(path) = &cfg.svg_out {
        std::fs::write(path, svg::render(&rs, &p))
            .map_err(|e| Failure::Domain(format!("writing {}: {e}", path.display())))?;
    }
    let rays: Vec<Value> = p
        .assignment
        .iter()
        .zip(&p.ray_angles)
        .enumerate()
        .map(|(i, (ray, &angle))| {
            let rts: Vec<Vec<i64>> = ray.iter().map(|&k| rs.roots[k].coords.clone()).collect();
            json!({ "label": format!("d{}", i + 1), "angle": output::round15(angle), "roots": rts })
        })
        .collect();
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "plane",
        "type": rs.ty.to_string(),
        "coxeter_number": rs.coxeter_number,
        "spokes": p.num_rays(),
        "wheels": p.wheels.len(),
        "wheel_radii": p.wheels.iter().map(|&w| output::round15(w)).collect::<Vec<_>>(),
        "max_angle_residual": p.max_angle_residual,
        "pi2": roots(&bip.pi2(&rs)),
        "rays": rays,
        "svg": cfg.svg_out.as_ref().map(|p| p.display().to_string()),
    }))
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Value {
    json!({ "name": name, "passed": passed, "skipped": false, "detail": detail.into() })
}

fn verify_type(ty: &str, pi2: Option<&[usize]>, max_dim: usize, cfg: &RunConfig) -> Result<Value, Failure> {
    let alg = ChevalleyAlgebra::new(RootSystem::from_str_type(ty)?)?;
    let rs = &alg.rs;
    let bip = match pi2 {
        None => bipartition(rs),
        Some(nodes) => {
            if nodes.iter().any(|&n| n == 0 || n > rs.rank) {
                return Err(Failure::Domain(format!("--pi2 nodes must lie in 1..={}", rs.rank)));
            }
            let i2: Vec<usize> = nodes.iter().map(|n| n - 1).collect();
            Bipartition { i1: (0..rs.rank).filter(|i| !i2.contains(i)).collect(), i2 }
        }
    };
    let s = rs.coxeter_number;
    let mut checks = vec![check("bipartition", bip.is_valid(rs), format!("Π₁ {:?}, Π₂ {:?}", nodes(&bip.i1), nodes(&bip.i2)))];

    let plane = coxeter_plane(rs, &bip, cfg.tol_ray);
    match &plane {
        Ok(p) => {
            let ok = p.num_rays() == 2 * s;
            checks.push(check("ray_count", ok, format!("{} rays, expected {}", p.num_rays(), 2 * s)));
            let sd = singular_directions(rs, &bip, p);
            checks.push(check("singular_directions", sd.passed(), sd.failures.join("; ")));
        }
        Err(e) => checks.push(check("ray_count", false, e.to_string())),
    }

    let chain_failures: Vec<String> =
        (1..=s).filter_map(|n| kostant_chain(rs, &bip, n).err().map(|e| format!("n = {n}: {e}"))).collect();
    checks.push(check("kostant_chain", chain_failures.is_empty(), chain_failures.join("; ")));

    if alg.dim() > max_dim {
        checks.push(json!({
            "name": "spectrum", "passed": true, "skipped": true,
            "detail": format!("dimension {} above --max-dim {max_dim}", alg.dim()),
        }));
    } else if let Ok(p) = &plane {
        let outcome = build_e_plus(&alg, &default_coeffs(&alg)).and_then(|ep| {
            let sr = ad_spectrum(&ep, s, cfg.tol_spec);
            match_plane(&sr, p, pi2_anchor(&alg, &bip), cfg.tol_spec).map(|m| (sr.clustered, m))
        });
        checks.push(match outcome {
            Ok((clustered, m)) => check(
                "spectrum",
                clustered && m.ray_counts_match,
                format!("max residual {:.3e}", m.max_residual),
            ),
            Err(e) => check("spectrum", false, e.to_string()),
        });
    }
    let passed = checks.iter().all(|c| c["passed"] == json!(true));
    Ok(json!({ "type": rs.ty.to_string(), "passed": passed, "checks": checks }))
}

fn verify(types: &[String], pi2: Option<&[usize]>, max_dim: usize, cfg: &RunConfig) -> Result<(Value, bool), Failure> {
    let results: Vec<Result<Value, Failure>> = std::thread::scope(|scope| {
        let handles: Vec<_> =
            types.iter().map(|t| scope.spawn(move || verify_type(t, pi2, max_dim, cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    });
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        let r = r?;
        eprintln!("{:<4} {}", r["type"].as_str().unwrap_or("?"), if r["passed"] == json!(true) { "PASS" } else { "FAIL" });
        reports.push(r);
    }
    let passed = reports.iter().all(|r| r["passed"] == json!(true));
    Ok((json!({ "schema_version": SCHEMA_VERSION, "command": "verify", "passed": passed, "results": reports }), passed))
}

fn stokes(ty: &str, data: &Data, rep_name: &str, cfg: &RunConfig) -> Result<(Value, bool), Failure> {
    let alg = ChevalleyAlgebra::new(RootSystem::from_str_type(ty)?)?;
    let rs = &alg.rs;
    let (asym, n_big) = match data {
        Data::M(m) => {
            if m.len() != rs.rank {
                return Err(Error::InvalidArgument(format!("--m needs {} entries, got {}", rs.rank, m.len())).into());
            }
            (AsymptoticData::from_m(rs, m.clone()), None)
        }
        Data::K(k) => {
            let (a, n) = AsymptoticData::from_k(rs, k)?;
            (a, Some(n))
        }
    };
    let point = alcove_map(rs, &asym.m);
    if !point.admissible {
        let vals: Vec<String> = asym.affine_values.iter().map(|v| v.to_string()).collect();
        eprintln!("α_i(m) for i = 0..{}: [{}]; each must be at least -1", rs.rank, vals.join(", "));
    }
    let rep = Representation::by_name(&alg, rep_name)?;
    let ctx = StokesContext::new(&alg, DIMENSION_CAP)?;
    let sd = ctx.stokes_from_asymptotics(&rep, &asym.m)?;
    let ss = semisimple_spectrum_check(&sd, &rep, rs, cfg.tol_spec);
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "stokes",
        "type": rs.ty.to_string(),
        "rep": sd.rep_name,
        "rep_dim": rep.dim,
        "gamma": nodes(&sd.gamma),
        "pi2_count": sd.k,
        "N": n_big.map(rational),
        "m": rationals(&asym.m),
        "alpha_m": rationals(&asym.affine_values),
        "alcove": {
            "y": rationals(&point.y),
            "slacks": rationals(&point.slacks),
            "in_alcove": point.in_alcove,
            "sigma_fixed": point.sigma_fixed,
        },
        "characters": complexes(&sd.characters),
        "t": complexes(&sd.solve.t),
        "solve": { "iterations": sd.solve.iterations, "residual": sd.solve.residual },
        "m0": matrix(&sd.m0),
        "k1": matrix(&sd.k1),
        "k2": matrix(&sd.k2),
        "coxeter_rep": matrix(&sd.coxeter_rep),
        "factorization_residual": sd.factorization_residual,
        "coxeter_p0_distance": sd.coxeter_p0_distance,
        "k1_support": roots(&sd.k1_support),
        "k2_support": roots(&sd.k2_support),
        "k2_allowed": roots(&sd.k2_allowed),
        "support_leak": sd.support_leak,
        "semisimple": {
            "regular": ss.regular,
            "eigenvalue_distance": ss.eigenvalue_distance,
            "charpoly_residual": ss.charpoly_residual,
            "tol": ss.tol,
            "passed": ss.passed,
        },
        "passed": ss.passed,
    });
    Ok((report, ss.passed))
}

fn monodromy(
    ty: &str,
    k: &[Rational64],
    z: f64,
    c: Option<&[f64]>,
    radius: f64,
    cfg: &RunConfig,
) -> Result<(Value, bool), Failure> {
    let at: AlgebraType = ty.parse()?;
    if at.family != Family::A {
        return Err(Error::UnsupportedType(format!("{at}: the monodromy oracle covers type A only")).into());
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidArgument(format!("--radius must be positive, got {radius}")).into());
    }
    let l = at.rank;
    let ones = vec![1.0; l + 1];
    let sys = build_system(l, c.unwrap_or(&ones), k, z)?;
    let rep = numerical_monodromy(&sys, radius, cfg.tol_spec)?;
    if !rep.passed {
        eprintln!("char-poly residual {:e} exceeds tolerance {:e}", rep.residual, rep.tol);
    }
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "monodromy",
        "type": at.to_string(),
        "k": rationals(&sys.k),
        "N": rational(sys.n_big),
        "z": z,
        "c": sys.c,
        "radius": radius,
        "central_factor": complex(rep.central_factor),
        "numerical_charpoly": complexes(&rep.numerical_charpoly),
        "predicted_charpoly": complexes(&rep.predicted_charpoly),
        "residual": rep.residual,
        "tol": rep.tol,
        "passed": rep.passed,
        "stats": {
            "accepted": rep.stats.accepted,
            "rejected": rep.stats.rejected,
            "evaluations": rep.stats.evaluations,
        },
    });
    Ok((report, rep.passed))
}
