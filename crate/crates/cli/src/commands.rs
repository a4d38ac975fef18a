use std::fmt::Write as _;

use heightlab::auxiliary::{choose_params, construct_ab, AuxParams};
use heightlab::diffop::vanishing_order;
use heightlab::factor::factor_over_q;
use heightlab::heights::{
    bracket, c_constant, default_x_pool, proj_height, quasi_threshold, sample_curve_points, seeded_xs,
    singular_bound, singular_checks, verify_quasi,
};
use heightlab::rational::{fmt_rat, parse_rat};
use heightlab::runge::{certify, integral_points, runge_bound, runge_condition};
use heightlab::{
    count_absolute_factors, parse_algebraic, parse_bipoly, parse_univariate, BiPoly, BigRat, Error, Result,
    Verdict,
};
use serde::Serialize;
use serde_json::json;

use crate::{limits_from_env, Cli, Command, RungeCommand, EXIT_OK, EXIT_VIOLATED};

/// Output of one command in both formats.
pub struct Report {
    pub text: String,
    pub json: String,
    /// Diagnostics for stderr.
    pub notes: String,
    pub code: i32,
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn report(text: String, json: String) -> Report {
    Report {
        text,
        json,
        notes: String::new(),
        code: EXIT_OK,
    }
}

fn code_for(verdicts: impl IntoIterator<Item = Verdict>) -> i32 {
    if verdicts.into_iter().any(|v| v == Verdict::Violated) {
        EXIT_VIOLATED
    } else {
        EXIT_OK
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Violated => "VIOLATED",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn usage(msg: &str) -> Error {
    Error::Parse {
        pos: 0,
        msg: msg.into(),
    }
}

fn rational_arg(s: &str) -> Result<BigRat> {
    parse_rat(s).ok_or_else(|| usage(&format!("expected a rational number, got {s:?}")))
}

fn point_arg(s: &str) -> Result<(BigRat, BigRat)> {
    let (x, y) = s.split_once(',').ok_or_else(|| usage("expected a point as x,y"))?;
    Ok((rational_arg(x)?, rational_arg(y)?))
}

/// Rejects input with more than one absolutely irreducible factor.
fn require_irreducible(p: &BiPoly, cli: &Cli) -> Result<()> {
    if cli.global.assume_irreducible {
        return Ok(());
    }
    match count_absolute_factors(p) {
        Ok(1) => Ok(()),
        Ok(k) => Err(Error::Hypothesis(format!(
            "P has {k} absolutely irreducible factors; pass --assume-irreducible to skip this check"
        ))),
        Err(e) => Err(Error::Hypothesis(format!("irreducibility check failed: {e}"))),
    }
}

pub fn dispatch(cli: &Cli) -> Result<Report> {
    let tol = cli.global.tol;
    if !(tol > 0.0 && tol < 1.0) {
        return Err(usage("--tol must lie in (0, 1)"));
    }
    match &cli.command {
        Command::Height { number } => {
            let a = parse_algebraic(number, cli.global.assume_irreducible)?;
            let h = a.weil_height(tol)?;
            Ok(report(
                format!("{:.6} ± {:.1e}\n", h.value, h.err),
                to_json(&json!({ "number": a.to_text(), "height": h.value, "err": h.err })),
            ))
        }
        Command::Hp { poly } => {
            let p = parse_bipoly(poly)?;
            let v = proj_height(&p)?;
            Ok(report(
                format!("{v:.6}\n"),
                to_json(&json!({ "poly": p.to_text(), "hp": v })),
            ))
        }
        Command::Cp { poly } => {
            let p = parse_bipoly(poly)?;
            let (b, c) = (bracket(&p)?, c_constant(&p)?);
            Ok(report(
                format!("{c:.6}\n"),
                to_json(&json!({
                    "poly": p.to_text(), "p": p.deg_x(), "q": p.deg_y(), "bracket": b, "cP": c
                })),
            ))
        }
        Command::Threshold { poly } => {
            let p = parse_bipoly(poly)?;
            let t = quasi_threshold(&p)?;
            Ok(report(
                format!("{t:.6}\n"),
                to_json(&json!({ "poly": p.to_text(), "threshold": t })),
            ))
        }
        Command::VerifyQuasi(a) => {
            let p = parse_bipoly(&a.poly)?;
            require_irreducible(&p, cli)?;
            let xs = match &a.x_values {
                Some(v) => v.iter().map(|s| rational_arg(s)).collect::<Result<Vec<_>>>()?,
                None => seeded_xs(&default_x_pool(a.pool_height, a.max_k), a.samples, a.seed),
            };
            let (points, skipped) = sample_curve_points(&p, &xs)?;
            let reports = verify_quasi(&p, &points, tol)?;
            let mut text = String::new();
            let mut tally = [0usize; 3];
            for (pt, r) in points.iter().zip(&reports) {
                tally[r.verdict as usize] += 1;
                writeln!(
                    text,
                    "x = {}  y = {}  h(x) = {:.6}  h(y) = {:.6}  lhs = {:.6}  rhs = {:.6}  {}",
                    fmt_rat(&pt.x),
                    pt.y,
                    r.hx,
                    r.hy,
                    r.lhs,
                    r.rhs,
                    verdict_word(r.verdict)
                )
                .unwrap();
            }
            writeln!(
                text,
                "{} points: {} hold, {} violated, {} inconclusive",
                reports.len(),
                tally[0],
                tally[1],
                tally[2]
            )
            .unwrap();
            Ok(Report {
                text,
                json: to_json(&reports),
                notes: skipped.iter().map(|s| format!("note: {s}\n")).collect(),
                code: code_for(reports.iter().map(|r| r.verdict)),
            })
        }
        Command::ConstructAux(a) => {
            let p = parse_bipoly(&a.poly)?;
            let params = if a.auto {
                choose_params(&p, a.k.expect("clap requires --k"), a.kappa, a.lambda)?
            } else {
                match (a.m, a.n) {
                    (Some(m), Some(n)) => AuxParams::new(&p, m, n)?,
                    _ => return Err(usage("give --m and --n, or --auto with --k")),
                }
            };
            let c = construct_ab(&p, &params, &limits_from_env())?;
            let text = format!(
                "m = {}  n = {}  t = {}\nA = {}\nB = {}\nQ = {}\nh_p(A, B) = {:.6}  bound = {:.6}  within bound: {}\n",
                c.m,
                c.n,
                c.t,
                c.a,
                c.b,
                c.q,
                c.hp_ab,
                c.height_bound,
                if c.within_bound { "yes" } else { "no" }
            );
            Ok(report(text, to_json(&c)))
        }
        Command::VanishOrder(a) => {
            let p = parse_bipoly(&a.poly)?;
            let aux = parse_bipoly(&a.aux)?;
            let (x, y) = point_arg(&a.point)?;
            let params = match (a.m, a.n) {
                (Some(m), Some(n)) => Some(AuxParams::new(&p, m, n)?),
                _ => None,
            };
            let v = vanishing_order(&p, &aux, &x, &y, params.as_ref(), &limits_from_env())?;
            let mut text = format!("s = {}  (branch series order {})\n", v.s, v.series_order);
            if let (Some(b), Some(ok)) = (v.bound, v.within_bound) {
                writeln!(text, "bound t + pq − p − q = {b}: {}", if ok { "holds" } else { "VIOLATED" }).unwrap();
            }
            let code = if v.within_bound == Some(false) { EXIT_VIOLATED } else { EXIT_OK };
            Ok(Report {
                code,
                ..report(text, to_json(&v))
            })
        }
        Command::Singular { poly } => {
            let p = parse_bipoly(poly)?;
            let bound = singular_bound(&p)?;
            let checks = singular_checks(&p, tol)?;
            let mut text = format!("bound {bound:.6}\n");
            for c in &checks {
                writeln!(text, "y = {}  h(y) = {:.6}  {}", c.y, c.hy, verdict_word(c.verdict)).unwrap();
            }
            Ok(Report {
                code: code_for(checks.iter().map(|c| c.verdict)),
                ..report(
                    text,
                    to_json(&json!({ "poly": p.to_text(), "bound": bound, "checks": checks })),
                )
            })
        }
        Command::Transform { poly, xi } => {
            let p = parse_bipoly(poly)?;
            let xi = rational_arg(xi)?;
            let r = p.shift_inverse_substitute(&xi);
            let text = format!(
                "{}\ntotal degree {} (p + q = {})\n",
                r,
                r.total_degree(),
                p.deg_x() + p.deg_y()
            );
            Ok(report(
                text,
                to_json(&json!({
                    "poly": p.to_text(),
                    "xi": fmt_rat(&xi),
                    "result": r.to_text(),
                    "p": p.deg_x(),
                    "q": p.deg_y(),
                    "total_degree": r.total_degree(),
                })),
            ))
        }
        Command::Runge(rc) => runge(rc, tol),
        Command::Factor { poly } => {
            let f = parse_univariate(poly)?;
            let fac = factor_over_q(&f)?;
            let mut text = format!("unit {}\n", fmt_rat(&fac.unit));
            for (g, m) in &fac.factors {
                writeln!(text, "({})^{m}", g.to_string_in("x")).unwrap();
            }
            Ok(report(text, to_json(&json!({ "poly": f.to_string_in("x"), "factorization": fac }))))
        }
    }
}

fn points_text(points: &[(num_bigint::BigInt, num_bigint::BigInt)]) -> String {
    points.iter().map(|(x, y)| format!("({x}, {y})\n")).collect()
}

fn runge(rc: &RungeCommand, tol: f64) -> Result<Report> {
    match rc {
        RungeCommand::Check { poly } => {
            let p = parse_bipoly(poly)?;
            let c = runge_condition(&p)?;
            let mut text = format!("condition {}\n", if c.holds { "holds" } else { "fails" });
            if let Some(r) = &c.reason {
                writeln!(text, "reason: {r}").unwrap();
            }
            if let Some(f) = &c.factors {
                for e in f.factor_list() {
                    writeln!(text, "P_d(x, 1) factor ({})^{}", e.poly, e.mult).unwrap();
                }
            }
            Ok(report(text, to_json(&c)))
        }
        RungeCommand::Bound { poly } => {
            let p = parse_bipoly(poly)?;
            let b = runge_bound(&p)?;
            Ok(report(format!("{b:.6}\n"), to_json(&json!({ "poly": p.to_text(), "bound_log": b }))))
        }
        RungeCommand::Solve { poly, limit } => {
            let p = parse_bipoly(poly)?;
            let c = runge_condition(&p)?;
            let b = heightlab::runge::bound_formula(&p)?;
            let pts = integral_points(&p, *limit)?;
            let text = format!(
                "condition {}  bound_log {:.6}  limit {}\n{}",
                if c.holds { "holds" } else { "fails" },
                b,
                limit,
                points_text(&pts)
            );
            let json_pts: Vec<[serde_json::Value; 2]> = pts.iter().map(|(x, y)| [int_json(x), int_json(y)]).collect();
            Ok(report(
                text,
                to_json(&json!({
                    "d": c.d,
                    "condition": c.holds,
                    "bound_log": b,
                    "limit": limit,
                    "points": json_pts,
                })),
            ))
        }
        RungeCommand::Certify { poly, limit } => {
            let p = parse_bipoly(poly)?;
            let r = certify(&p, *limit, tol)?;
            let mut text = format!(
                "d = {}  condition {}  bound_log {:.6}\n{}\n",
                r.d,
                if r.condition_holds { "holds" } else { "fails" },
                r.bound_log,
                r.certificate
            );
            text += &points_text(&r.points);
            for s in &r.slope_checks {
                writeln!(text, "slope {}  h = {:.6} ≤ {:.6}  {}", s.t, s.h, s.bound, verdict_word(s.verdict)).unwrap();
            }
            for s in &r.sigma_checks {
                writeln!(text, "point ({}, {})  {:.6} ≤ {:.6}  {}", s.x, s.y, s.lhs, s.rhs, verdict_word(s.verdict))
                    .unwrap();
            }
            let code = code_for(
                r.slope_checks
                    .iter()
                    .map(|s| s.verdict)
                    .chain(r.sigma_checks.iter().map(|s| s.verdict)),
            );
            Ok(Report {
                code,
                ..report(text, to_json(&r))
            })
        }
    }
}

fn int_json(x: &num_bigint::BigInt) -> serde_json::Value {
    match i64::try_from(x) {
        Ok(v) => v.into(),
        Err(_) => x.to_string().into(),
    }
}
