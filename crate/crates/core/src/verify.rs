//! The verification suites.
//!
//! Every check compares two independently computed objects with exact
//! equality and ends up as a [`CheckReport`]; determinant identities are
//! reported as [`HankelReport`]s. Reports are sorted by key, so a run is a
//! pure function of the suite and the seed.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::catalan;
use crate::hankel::{
    expansion_identity, random_points, shifted_specs, verify_identity, verify_shifted_relation, HankelReport,
    IdentityId, Level, Mode, Rendering, Status, Vars, VerifyError,
};
use crate::orthogonal::{
    aerate_maps, named, named_jacobi, stieltjes_extract, triangle_from_jacobi, JacobiData, JacobiRendering,
    MomentSource, NamedJacobi,
};
use crate::paths;
use crate::sequences::{
    b_family_s_numerator, h_coefficient, h_series, pair_b, q_schroder_s_numerator, schroder_like_equation,
    y_to_qy, Generator,
};
use crate::series::{expand_checked, expand_continued_fraction, j_fraction, s_fraction, CfLevel};
use crate::{Point, Poly, RatFun, RatSeries, Rational, Registry, Series, Substitution, Var};

/// Which checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    /// Everything without `q`.
    Classical,
    /// Everything with `q`.
    Q,
}

impl Suite {
    pub fn includes(self, level: Level) -> bool {
        match self {
            Suite::All => true,
            Suite::Classical => level != Level::Q,
            Suite::Q => level == Level::Q,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "classical" => Ok(Suite::Classical),
            "q" => Ok(Suite::Q),
            other => Err(format!("unknown suite `{other}` (expected all, classical or q)")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Classical => "classical",
            Suite::Q => "q",
        })
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub group: String,
    pub check: String,
    pub level: Level,
    pub status: Status,
    pub detail: String,
}

/// Knobs of a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Points per identity in specialized determinant checks.
    pub points: usize,
    /// Points per family in specialized route checks.
    pub route_points: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: 42, points: 20, route_points: 10 }
    }
}

/// Everything one `verify` run produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
    pub hankel: Vec<HankelReport>,
}

impl FullReport {
    /// Whether no check and no identity ended in a mismatch.
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.status.is_ok()) && self.hankel.iter().all(|h| h.status.is_ok())
    }

    /// The same report restricted to the failures.
    pub fn failures(&self) -> FullReport {
        FullReport {
            suite: self.suite,
            seed: self.seed,
            checks: self.checks.iter().filter(|c| !c.status.is_ok()).cloned().collect(),
            hankel: self.hankel.iter().filter(|h| !h.status.is_ok()).cloned().collect(),
        }
    }

    /// Count of each status over checks and identities.
    pub fn tally(&self) -> Vec<(Status, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for s in self.checks.iter().map(|c| c.status).chain(self.hankel.iter().map(|h| h.status)) {
            *counts.entry(s).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }
}

type Outcome = Result<(Status, String), VerifyError>;

fn run(group: &str, check: impl Into<String>, level: Level, body: impl FnOnce() -> Outcome) -> CheckReport {
    let (status, detail) = body().unwrap_or_else(|e| (Status::Mismatch, format!("error: {e}")));
    CheckReport { group: group.to_string(), check: check.into(), level, status, detail }
}

fn verdict(ok: bool, detail: impl Into<String>) -> (Status, String) {
    (if ok { Status::Match } else { Status::Mismatch }, detail.into())
}

/// Compares two sequences term by term.
fn same_terms<C: PartialEq + fmt::Display>(got: &[C], want: &[C]) -> (Status, String) {
    if got.len() != want.len() {
        return verdict(false, format!("lengths differ: {} vs {}", got.len(), want.len()));
    }
    match got.iter().zip(want).position(|(a, b)| a != b) {
        None => verdict(true, format!("equal through n = {}", got.len().saturating_sub(1))),
        Some(i) => verdict(false, format!("differ at n = {i}: {} vs {}", got[i], want[i])),
    }
}

fn same_series<C: PartialEq + fmt::Display + Clone>(got: &crate::PowerSeries<C>, want: &crate::PowerSeries<C>) -> (Status, String) {
    same_terms(got.coeffs(), want.coeffs())
}

fn level_of_vars(vars: &[Var]) -> Level {
    if vars.contains(&Var::Q) {
        Level::Q
    } else if vars.is_empty() {
        Level::Numeric
    } else {
        Level::TwoVariable
    }
}

/// The level a family's checks are filed under.
pub fn family_level(reg: &Registry, family: &str) -> Level {
    reg.get(family).map_or(Level::Q, |f| level_of_vars(f.free_vars))
}

fn source_family(src: MomentSource) -> &'static str {
    match src {
        MomentSource::Family(f) | MomentSource::Aerated(f) => f,
    }
}

fn constant(p: &Poly) -> Rational {
    p.constant_value().unwrap_or_else(|| p.eval(&Point::new(Rational::zero(), Rational::zero(), Rational::one())))
}

fn int_polys(v: &[i64]) -> Vec<Poly> {
    v.iter().map(|&n| Poly::from_int(n)).collect()
}

fn q_poly(coeffs: &[i64]) -> Poly {
    coeffs.iter().enumerate().map(|(i, &c)| Poly::from_int(c) * Poly::q().pow(i as u32)).sum()
}

fn at_xy(x: i64, y: i64) -> Substitution<Rational> {
    Substitution::identity().with(Var::X, Poly::from_int(x)).with(Var::Y, Poly::from_int(y))
}

fn q_to_one() -> Substitution<Rational> {
    Substitution::identity().with(Var::Q, Poly::one())
}

fn series(terms: Vec<Poly>) -> Series {
    Series::new(terms)
}

/// Printed opening terms of the large, little and q-Schröder numbers.
pub fn printed_sequences(reg: &Registry) -> Vec<CheckReport> {
    let q_schroder = vec![
        Poly::one(),
        q_poly(&[1, 1]),
        q_poly(&[1, 1]) * q_poly(&[1, 1, 1]),
        q_poly(&[1, 1]) * q_poly(&[1, 2, 3, 3, 1, 1]),
    ];
    let cases = [
        ("schroder-large", int_polys(&[1, 2, 6, 22, 90])),
        ("little-schroder", int_polys(&[1, 1, 3, 11, 45, 197])),
        ("q-schroder", q_schroder),
    ];
    let mut out = Vec::new();
    for (family, want) in cases {
        let level = family_level(reg, family);
        let routes = reg.get(family).map(|f| f.routes.clone()).unwrap_or_default();
        for (i, route) in routes.iter().enumerate() {
            out.push(run("sequences", format!("{family} printed terms via {}", route.label), level, || {
                Ok(same_terms(&reg.generate_route(family, i, want.len() - 1)?, &want))
            }));
        }
    }
    out
}

/// The three printed triangles, rebuilt from their Jacobi data.
pub fn printed_triangles() -> Vec<CheckReport> {
    let data = |key: &str| named(key).expect("named datum").printed.data(5);
    let cases: [(&str, JacobiData, &[&[i64]]); 3] = [
        ("schroder triangle", data("schroder-large"), &[&[1], &[2, 1], &[6, 5, 1], &[22, 23, 8, 1], &[90, 107, 49, 11, 1]]),
        ("little schroder triangle", data("little-schroder"), &[&[1], &[1, 1], &[3, 4, 1], &[11, 17, 7, 1], &[45, 76, 40, 10, 1]]),
        (
            "shifted little schroder triangle",
            data("schroder-like-shift").subst(&at_xy(1, 1)),
            &[&[1], &[3, 1], &[11, 6, 1], &[45, 31, 9, 1], &[197, 156, 60, 12, 1]],
        ),
    ];
    cases
        .into_iter()
        .map(|(name, j, rows)| {
            run("triangles", name, Level::Numeric, || {
                let tri = triangle_from_jacobi(&j, rows.len() - 1)?;
                for (n, row) in rows.iter().enumerate() {
                    let want = int_polys(row);
                    if tri.rows[n] != want {
                        let got: Vec<String> = tri.rows[n].iter().map(|p| p.to_string()).collect();
                        return Ok(verdict(false, format!("row {n} is {}", got.join(" "))));
                    }
                }
                Ok(verdict(true, format!("{} rows", rows.len())))
            })
        })
        .collect()
}

fn describe_difference(got: &JacobiData, want: &JacobiData) -> String {
    for (which, g, w) in [("s", &got.s, &want.s), ("t", &got.t, &want.t)] {
        if let Some(i) = g.iter().zip(w).position(|(a, b)| a != b) {
            return format!("printed {which}({i}) = {}, actual {}", w[i], g[i]);
        }
    }
    "lengths differ".into()
}

fn judge_jacobi(got: &JacobiData, nj: &NamedJacobi, len: usize) -> (Status, String) {
    let printed = nj.printed.data(len);
    if *got == printed {
        return verdict(true, format!("{len} terms of s and t"));
    }
    let detail = describe_difference(got, &printed);
    match nj.corrected {
        Some(c) if c.data(len) == *got => (Status::PrintedFormFalsified, detail),
        _ => (Status::Mismatch, detail),
    }
}

/// Stieltjes extraction against every named Jacobi datum, and the
/// aeration maps against the data they should produce.
pub fn jacobi_checks(reg: &Registry, terms: usize) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = named_jacobi()
        .par_iter()
        .map(|nj| {
            let level = family_level(reg, source_family(nj.source));
            run("jacobi", format!("{} extracted from {}", nj.key, nj.source), level, || {
                let moments = nj.source.moments(reg, 2 * terms + 1)?;
                let got = stieltjes_extract(&moments, terms - 1)?;
                Ok(judge_jacobi(&got, nj, terms))
            })
        })
        .collect();
    let aerations = [
        ("aerated/schroder-large", "schroder-large", None),
        ("aerated/schroder-like", "schroder-like", Some("schroder-like-shift")),
        ("aerated/q-schroder-like", "q-schroder-like", Some("q-schroder-like-shift")),
        ("aerated/q-little-schroder-like", "q-little-schroder-like", None),
    ];
    for (from, even, odd) in aerations {
        let level = family_level(reg, even);
        let source = named(from).expect("named datum").printed.data(2 * terms + 1);
        let (j0, j1) = aerate_maps(&source.t);
        let j0 = j0.truncated(terms, terms);
        let j1 = j1.truncated(terms, terms);
        out.push(run("jacobi", format!("aeration maps {from} to {even}"), level, || {
            Ok(judge_jacobi(&j0, &named(even).expect("named datum"), terms))
        }));
        if let Some(odd) = odd {
            out.push(run("jacobi", format!("aeration maps {from} to {odd}"), level, || {
                Ok(judge_jacobi(&j1, &named(odd).expect("named datum"), terms))
            }));
        }
    }
    out
}

/// S- and J-fractions against the functional equations and triangles.
pub fn continued_fraction_checks(reg: &Registry) -> Vec<CheckReport> {
    let g = "continued-fractions";
    let mut out = Vec::new();
    let x = Poly::x;
    let y = Poly::y;

    out.push(run(g, "S-fraction (x+y), qy, q(x+qy), ... = q-schroder-like", Level::Q, || {
        let cf = s_fraction(q_schroder_s_numerator, 11, 10)?;
        Ok(same_series(&cf, &series(reg.generate("q-schroder-like", 10)?)))
    }));
    out.push(run(g, "S-fraction x, y, qx, qy, ... = b-family", Level::Q, || {
        let cf = s_fraction(b_family_s_numerator, 11, 10)?;
        Ok(same_series(&cf, &series(reg.generate("b-family", 10)?)))
    }));
    out.push(run(g, "S-fraction of q-schroder-like at q = 1 = schroder-like", Level::Q, || {
        let cf = s_fraction(|k| q_schroder_s_numerator(k).subst(&q_to_one()), 13, 12)?;
        Ok(same_series(&cf, &series(reg.generate("schroder-like", 12)?)))
    }));
    for (family, numerator) in [
        ("q-schroder-like", q_schroder_s_numerator as fn(usize) -> Poly),
        ("b-family", b_family_s_numerator as fn(usize) -> Poly),
    ] {
        out.push(run(g, format!("{family} S-fraction cut after 10 and 13 numerators agrees through order 10"), Level::Q, || {
            // the bottom level's numerator multiplies an empty tail, so
            // d + 1 levels carry d numerators
            let levels = |d: usize| -> Vec<CfLevel<Poly>> {
                (0..=d).map(|k| CfLevel { linear: Poly::zero(), numerator: numerator(k), power: 1 }).collect()
            };
            let shallow = expand_continued_fraction(&levels(10), 10);
            let deep = expand_continued_fraction(&levels(13), 10);
            Ok(same_series(&shallow, &deep))
        }));
    }

    let schroder_like = || -> Result<Series, VerifyError> { Ok(series(reg.generate("schroder-like", 12)?)) };
    out.push(run(g, "1/(1 - xz - yz/(1 - xz - ...)) = schroder-like", Level::TwoVariable, || {
        let cf = expand_checked(|_| CfLevel { linear: x(), numerator: y(), power: 1 }, 13, 12)?;
        Ok(same_series(&cf, &schroder_like()?))
    }));
    out.push(run(g, "J-fraction s = x+2y, t = y(x+y) = schroder-like", Level::TwoVariable, || {
        let j = named("schroder-like").expect("named datum").truth().data(7);
        Ok(same_series(&j_fraction(&j.s, &j.t, 12)?, &schroder_like()?))
    }));
    out.push(run(g, "schroder-like equation solved twice", Level::TwoVariable, || {
        Ok(same_series(&schroder_like_equation().solve(12), &schroder_like()?))
    }));
    out.push(run(g, "J-fraction s(0) = 2, s = 3, t = 2 = schroder-large", Level::Numeric, || {
        let j = named("schroder-large").expect("named datum").printed.data(6);
        Ok(same_series(&j_fraction(&j.s, &j.t, 10)?, &series(reg.generate("schroder-large", 10)?)))
    }));

    let mut per_datum: Vec<CheckReport> = named_jacobi()
        .par_iter()
        .flat_map_iter(|nj| {
            let level = family_level(reg, source_family(nj.source));
            let j = nj.truth().data(11);
            let fraction = run(g, format!("J-fraction of {} = moments", nj.key), level, || {
                let moments = nj.source.moments(reg, 11)?;
                Ok(same_terms(j_fraction(&j.s, &j.t, 10)?.coeffs(), &moments))
            });
            let column = run(g, format!("J-fraction of {} = triangle column 0", nj.key), level, || {
                let tri = triangle_from_jacobi(&j, 10)?;
                Ok(same_terms(j_fraction(&j.s, &j.t, 10)?.coeffs(), &tri.column(0)))
            });
            [fraction, column]
        })
        .collect();
    out.append(&mut per_datum);
    out
}

/// The series `h` with `F = h(qz)/h(z)`, and the relations tying it to the
/// q-families, as identities of rational-function series.
pub fn h_function_checks(reg: &Registry, order: usize) -> Vec<CheckReport> {
    let g = "h-function";
    let (x, y, q) = (Poly::x(), Poly::y(), Poly::q());
    let h = h_series(order);
    let hq = h.q_shift(&q);
    let hqq = hq.q_shift(&q);
    let h_qy = h.subst(&y_to_qy());
    let hq_qy = h_qy.q_shift(&q);
    let lift = |family: &str| -> Result<RatSeries, VerifyError> {
        Ok(series(reg.generate(family, order)?).map(|p| RatFun::from_poly(p.clone())))
    };
    let mut out = Vec::new();

    out.push(run(g, "(q^n - 1) h_n = q^(n-1) (x + q^(n-1) y) h_(n-1)", Level::Q, || {
        for n in 1..=order {
            let lhs = h_coefficient(n).scale_poly(&(q.pow(n as u32) - Poly::one()));
            let rhs = h_coefficient(n - 1).scale_poly(&(q.pow(n as u32 - 1) * (&x + &(q.pow(n as u32 - 1) * &y))));
            if lhs != rhs {
                return Ok(verdict(false, format!("fails at n = {n}")));
            }
        }
        Ok(verdict(true, format!("n = 1..{order}")))
    }));
    out.push(run(g, "h(qz) = h(z) + xz h(qz) + yz h(q^2 z)", Level::Q, || {
        let rhs = h.add(&hq.shift_up(1).scale_poly(&x))?.add(&hqq.shift_up(1).scale_poly(&y))?;
        Ok(same_series(&hq, &rhs))
    }));
    out.push(run(g, "F(z) h(z) = h(qz)", Level::Q, || Ok(same_series(&lift("q-schroder-like")?.mul(&h)?, &hq))));
    out.push(run(g, "(x+y) h(z,qy) = x h(z,y) + y h(qz,y)", Level::Q, || {
        let lhs = h_qy.scale_poly(&(&x + &y));
        let rhs = h.scale_poly(&x).add(&hq.scale_poly(&y))?;
        Ok(same_series(&lhs, &rhs))
    }));
    out.push(run(g, "f(z) h(z,y) = h(z,qy)", Level::Q, || {
        Ok(same_series(&lift("q-little-schroder-like")?.mul(&h)?, &h_qy))
    }));
    out.push(run(g, "F(z) h(z,y) = h(z,y) + (x+y) z h(qz,qy)", Level::Q, || {
        let rhs = h.add(&hq_qy.shift_up(1).scale_poly(&(&x + &y)))?;
        Ok(same_series(&lift("q-schroder-like")?.mul(&h)?, &rhs))
    }));
    out.push(run(g, "g(z,y) h(z,y) = h(qz,qy)", Level::Q, || {
        Ok(same_series(&lift("q-schroder-like-shift")?.mul(&h)?, &hq_qy))
    }));
    out
}

/// Generated terms against every functional equation of their family,
/// plus the coupled systems that are not single equations.
pub fn residual_checks(reg: &Registry, order: usize) -> Vec<CheckReport> {
    let g = "residuals";
    let mut out: Vec<CheckReport> = reg
        .families()
        .par_iter()
        .flat_map_iter(|fam| {
            let level = level_of_vars(fam.free_vars);
            fam.routes
                .iter()
                .filter_map(|r| match &r.generator {
                    Generator::Equation(eq) => Some((r.label, eq)),
                    _ => None,
                })
                .map(|(label, eq)| {
                    run(g, format!("{}: {} residual", fam.name, label), level, || {
                        let s = series(reg.generate(fam.name, order)?);
                        let res = eq.residual(&s);
                        Ok(match res.coeffs().iter().position(|c| !c.is_zero()) {
                            None => verdict(true, format!("zero through z^{order}")),
                            Some(i) => verdict(false, format!("nonzero at z^{i}: {}", res.coeff(i))),
                        })
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();

    let (x, y, q) = (Poly::x(), Poly::y(), Poly::q());
    let xpy = &x + &y;
    let big = || -> Result<Series, VerifyError> { Ok(series(reg.generate("q-schroder-like", order)?)) };
    let little = || -> Result<Series, VerifyError> { Ok(series(reg.generate("q-little-schroder-like", order)?)) };
    let one = Series::one(order);

    out.push(run(g, "F = 1 + (x+y) z F(z) f(qz)", Level::Q, || {
        let (f_big, f_little) = (big()?, little()?);
        let rhs = one.add(&f_big.mul(&f_little.q_shift(&q))?.shift_up(1).scale_poly(&xpy))?;
        Ok(same_series(&f_big, &rhs))
    }));
    out.push(run(g, "f = 1 + y z F(z) f(qz)", Level::Q, || {
        let (f_big, f_little) = (big()?, little()?);
        let rhs = one.add(&f_big.mul(&f_little.q_shift(&q))?.shift_up(1).scale_poly(&y))?;
        Ok(same_series(&f_little, &rhs))
    }));
    out.push(run(g, "f(z,y) = 1 + y z f(z,y) F(z,qy)", Level::Q, || {
        let (f_big, f_little) = (big()?, little()?);
        let rhs = one.add(&f_little.mul(&f_big.subst(&y_to_qy()))?.shift_up(1).scale_poly(&y))?;
        Ok(same_series(&f_little, &rhs))
    }));
    out.push(run(g, "F = 1 + (x+y) z g", Level::Q, || {
        let shift = series(reg.generate("q-schroder-like-shift", order)?);
        Ok(same_series(&big()?, &one.add(&shift.shift_up(1).scale_poly(&xpy))?))
    }));

    let swap = Substitution::identity().with(Var::X, y.clone()).with(Var::Y, &q * &x);
    out.push(run(g, "b-family: f = 1 + xz f(z,x,y,q) f(z,y,qx,q)", Level::Q, || {
        let f = series(reg.generate("b-family", order)?);
        let rhs = one.add(&f.mul(&f.subst(&swap))?.shift_up(1).scale_poly(&x))?;
        Ok(same_series(&f, &rhs))
    }));
    out.push(run(g, "b-family: f = 1 + xz f + xy z^2 f g(z,y,qx,q) with g the q-classical series", Level::Q, || {
        let f = series(reg.generate("b-family", order)?);
        let gq = series(reg.generate("q-classical", order)?).subst(&swap);
        let rhs = one.add(&f.shift_up(1).scale_poly(&x))?.add(&f.mul(&gq)?.shift_up(2).scale_poly(&(&x * &y)))?;
        Ok(same_series(&f, &rhs))
    }));
    out
}

fn route_pairs(reg: &Registry) -> Vec<(&'static str, usize)> {
    reg.families()
        .iter()
        .flat_map(|f| (1..f.routes.len()).map(move |r| (f.name, r)))
        .collect()
}

fn symbolic_route_order(level: Level) -> usize {
    match level {
        Level::Q => 12,
        _ => 20,
    }
}

/// Agreement of all generation routes, special values, and the B-family
/// specializations.
pub fn route_checks(reg: &Registry, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let g = "routes";
    let mut out: Vec<CheckReport> = route_pairs(reg)
        .par_iter()
        .map(|&(family, r)| {
            let level = family_level(reg, family);
            let label = reg.get(family).expect("listed").routes[r].label;
            let first = reg.get(family).expect("listed").routes[0].label;
            run(g, format!("{family}: {label} = {first}"), level, || {
                let order = symbolic_route_order(level);
                Ok(same_terms(&reg.generate_route(family, r, order)?, &reg.generate(family, order)?))
            })
        })
        .collect();

    let fams = reg.families();
    let mut specialized: Vec<CheckReport> = route_pairs(reg)
        .par_iter()
        .filter(|(family, _)| family_level(reg, family) != Level::Numeric)
        .map(|&(family, r)| {
            let level = family_level(reg, family);
            let label = reg.get(family).expect("listed").routes[r].label;
            let stream = 1000 + fams.iter().position(|f| f.name == family).expect("listed") as u64;
            let n = cfg.route_points;
            run(g, format!("{family}: {label} at {n} points"), level, || {
                for pt in random_points(cfg.seed, stream, n, 22)? {
                    let got = reg.generate_route_at(family, r, &pt, 20)?;
                    let want = reg.generate_at(family, &pt, 20)?;
                    let (status, detail) = same_terms(&got, &want);
                    if status != Status::Match {
                        return Ok((status, format!("at {pt}: {detail}")));
                    }
                }
                Ok(verdict(true, "equal through n = 20"))
            })
        })
        .collect();
    out.append(&mut specialized);

    out.push(run(g, "A(n,0,y) = C_n y^n", Level::TwoVariable, || {
        let at0 = Substitution::identity().with(Var::X, Poly::zero());
        let got: Vec<Poly> = reg.generate("schroder-like", 20)?.iter().map(|p| p.subst(&at0)).collect();
        let want: Vec<Poly> = (0..=20u64)
            .map(|n| Poly::constant(Rational::from_integer(catalan(n))) * Poly::y().pow(n as u32))
            .collect();
        Ok(same_terms(&got, &want))
    }));
    out.push(run(g, "A(2n+1,2,-1) = (-1)^n C_n and A(2n+2,2,-1) = 0", Level::TwoVariable, || {
        let pt = Point::new(Rational::from_integer(2.into()), Rational::from_integer((-1).into()), Rational::one());
        let got = reg.generate_at("schroder-like", &pt, 14)?;
        let want: Vec<Rational> = (0..=14u64)
            .map(|m| match m {
                0 => Rational::one(),
                m if m % 2 == 1 => {
                    let n = (m - 1) / 2;
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    Rational::from_integer(catalan(n) * sign)
                }
                _ => Rational::zero(),
            })
            .collect();
        Ok(same_terms(&got, &want))
    }));

    let rational_terms = |v: &[i64]| v.iter().map(|&n| Rational::from_integer(n.into())).collect::<Vec<_>>();
    let specialize = |family: &str, x: i64, y: i64, order: usize| -> Result<Vec<Rational>, VerifyError> {
        let pt = Point::new(Rational::from_integer(x.into()), Rational::from_integer(y.into()), Rational::one());
        Ok(reg.generate_at(family, &pt, order)?)
    };
    out.push(run(g, "pair A at (x,y) = (2,1) is schroder-large", Level::TwoVariable, || {
        let want: Vec<Rational> = reg.generate("schroder-large", 12)?.iter().map(constant).collect();
        Ok(same_terms(&specialize("schroder-pair-a", 2, 1, 12)?, &want))
    }));
    out.push(run(g, "pair B at (x,y) = (2,1) is 1, 3, 11, 45, ...", Level::TwoVariable, || {
        let want: Vec<Rational> =
            reg.generate("little-schroder-shift", 12)?.iter().map(constant).collect();
        let got = specialize("schroder-pair-b", 2, 1, 12)?;
        let direct: Vec<Rational> =
            pair_b(12, &Poly::from_int(3), &Poly::from_int(2)).iter().map(constant).collect();
        if got[..4] != rational_terms(&[1, 3, 11, 45])[..] || direct != want {
            return Ok(verdict(false, "opening terms or e1 = 3, e2 = 2 differ"));
        }
        Ok(same_terms(&got, &want))
    }));
    out.push(run(g, "pair A at (1,1) is C_n and pair B is C_(n+1)", Level::TwoVariable, || {
        let cat: Vec<Rational> = (0..=13u64).map(|n| Rational::from_integer(catalan(n))).collect();
        let (s_a, d_a) = same_terms(&specialize("schroder-pair-a", 1, 1, 12)?, &cat[..13]);
        if s_a != Status::Match {
            return Ok((s_a, format!("pair A: {d_a}")));
        }
        Ok(same_terms(&specialize("schroder-pair-b", 1, 1, 12)?, &cat[1..]))
    }));
    out.push(run(g, "e1 = e2 = 1 gives Motzkin numbers, counted as paths", Level::Numeric, || {
        let ones = vec![Rational::one(); 13];
        let walked = (0..=12)
            .map(|n| paths::motzkin_weight_sum(&ones, &ones, n, 0))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| VerifyError::Family(crate::FamilyError::NotExact { family: "motzkin".into(), n: e.requested, detail: e.to_string() }))?;
        let direct: Vec<Rational> =
            pair_b(12, &Poly::one(), &Poly::one()).iter().map(constant).collect();
        let (s, d) = same_terms(&direct, &walked);
        if s != Status::Match {
            return Ok((s, d));
        }
        let gen: Vec<Rational> = reg.generate("motzkin", 12)?.iter().map(constant).collect();
        Ok(same_terms(&gen, &walked))
    }));
    out.push(run(g, "pair A(n) = x B(n-1)", Level::TwoVariable, || {
        let a = reg.generate("schroder-pair-a", 15)?;
        let b = reg.generate("schroder-pair-b", 14)?;
        let shifted: Vec<Poly> =
            std::iter::once(Poly::one()).chain(b.iter().map(|p| &Poly::x() * p)).collect();
        Ok(same_terms(&a, &shifted))
    }));

    for (q_family, classical) in [
        ("q-schroder-like", "schroder-like"),
        ("q-little-schroder-like", "little-schroder-like"),
        ("q-schroder-like-shift", "schroder-like-shift"),
        ("q-schroder", "schroder-large"),
        ("q-catalan", "catalan"),
        ("q-classical", "schroder-pair-b"),
        ("b-family", "schroder-pair-a"),
    ] {
        out.push(run(g, format!("{q_family} at q = 1 is {classical}"), Level::Q, || {
            let got: Vec<Poly> = reg.generate(q_family, 10)?.iter().map(|p| p.subst(&q_to_one())).collect();
            Ok(same_terms(&got, &reg.generate(classical, 10)?))
        }));
    }
    for (q_key, classical) in [
        ("q-schroder-like", "schroder-like"),
        ("q-little-schroder-like", "little-schroder-like"),
        ("q-schroder-like-shift", "schroder-like-shift"),
        ("aerated/q-schroder-like", "aerated/schroder-like"),
    ] {
        out.push(run(g, format!("Jacobi data {q_key} at q = 1 is {classical}"), Level::Q, || {
            let got = named(q_key).expect("named datum").truth().data(8).subst(&q_to_one());
            let want = named(classical).expect("named datum").truth().data(8);
            let (status, detail) = same_terms(&got.s, &want.s);
            if status != Status::Match {
                return Ok((status, format!("s: {detail}")));
            }
            Ok(same_terms(&got.t, &want.t))
        }));
    }
    out
}

fn path_error(e: crate::SizeLimit) -> VerifyError {
    VerifyError::Family(crate::FamilyError::NotExact { family: "paths".into(), n: e.requested, detail: e.to_string() })
}

/// A point with small integer coordinates outside `{-1, 0, 1}`. Path sums
/// and triangle entries are polynomial in the weights, so no genericity is
/// needed, and integers keep the enumeration cheap.
fn integer_point(seed: u64, stream: u64) -> Point<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut draw = || {
        let v: i64 = rng.gen_range(2..=9);
        Rational::from_integer(if rng.gen_bool(0.5) { v.into() } else { (-v).into() })
    };
    Point::new(draw(), draw(), draw())
}

/// Brute-force path enumeration against the triangles and the sums.
pub fn oracle_checks(reg: &Registry, cfg: &VerifyConfig) -> Vec<CheckReport> {
    let g = "oracles";
    let data = named_jacobi();
    let mut out: Vec<CheckReport> = data
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, nj)| {
            let level = family_level(reg, source_family(nj.source));
            let symbolic = run(g, format!("Motzkin paths = triangle of {}, n <= 8", nj.key), level, || {
                let j = nj.truth().data(9);
                let tri = triangle_from_jacobi(&j, 8)?;
                for n in 0..=8 {
                    for k in 0..=n {
                        let walked = paths::motzkin_weight_sum(&j.s, &j.t, n, k).map_err(path_error)?;
                        if walked != tri.entry(n, k) {
                            return Ok(verdict(false, format!("a({n},{k}): paths {walked}, triangle {}", tri.entry(n, k))));
                        }
                    }
                }
                Ok(verdict(true, "all entries n <= 8"))
            });
            let specialized = run(g, format!("Motzkin paths = triangle of {}, n <= 12 at a point", nj.key), level, || {
                let pt = integer_point(cfg.seed, 2000 + i as u64);
                let j = nj.truth().data(13).eval(&pt).map(|v| v.to_integer());
                let tri = triangle_from_jacobi(&j, 12)?;
                for n in 0..=12 {
                    for k in 0..=n {
                        let walked = paths::motzkin_weight_sum(&j.s, &j.t, n, k).map_err(path_error)?;
                        if walked != tri.entry(n, k) {
                            return Ok(verdict(false, format!("a({n},{k}) at {pt}: paths {walked}, triangle {}", tri.entry(n, k))));
                        }
                    }
                }
                Ok(verdict(true, format!("all entries n <= 12 at {pt}")))
            });
            [symbolic, specialized]
        })
        .collect();

    out.push(run(g, "Schröder paths = schroder-like, n <= 8", Level::TwoVariable, || {
        let walked =
            (0..=paths::SCHRODER_LIMIT).map(paths::schroder_path_sum).collect::<Result<Vec<_>, _>>().map_err(path_error)?;
        Ok(same_terms(&walked, &reg.generate("schroder-like", paths::SCHRODER_LIMIT)?))
    }));
    out.push(run(g, "both binomial-Catalan sums agree, n <= 10", Level::TwoVariable, || {
        let a: Vec<Poly> = (0..=10).map(paths::binomial_catalan_sum).collect();
        let b: Vec<Poly> = (0..=10).map(paths::binomial_catalan_sum_alt).collect();
        Ok(same_terms(&a, &b))
    }));
    out.push(run(g, "Dyck paths are counted by C_n, n <= 7", Level::Numeric, || {
        let walked = (0..=7).map(paths::dyck_count).collect::<Result<Vec<_>, _>>().map_err(path_error)?;
        let want: Vec<Rational> = (0..=7u64).map(|n| Rational::from_integer(catalan(n))).collect();
        Ok(same_terms(&walked, &want))
    }));
    out
}

/// The Jacobi data of `C_n(q)` and of `b(n,1,q,q^2)` coincide.
pub fn polya_gessel_checks(reg: &Registry, terms: usize) -> Vec<CheckReport> {
    let g = "polya-gessel";
    vec![
        run(g, "C_n(q) = b(n,1,q,q^2)", Level::Q, || {
            Ok(same_terms(&reg.generate("q-catalan", 12)?, &reg.generate("polya-gessel", 12)?))
        }),
        run(g, format!("Jacobi data of C_n(q) = Jacobi data of b(n,1,q,q^2), {terms} terms"), Level::Q, || {
            let a = stieltjes_extract(&reg.generate("q-catalan", 2 * terms)?, terms - 1)?;
            let b = stieltjes_extract(&reg.generate("polya-gessel", 2 * terms)?, terms - 1)?;
            let shown = JacobiRendering::from(&a);
            Ok(verdict(a == b, format!("s = [{}], t = [{}]", shown.s.join(", "), shown.t.join(", "))))
        }),
    ]
}

/// Shifted relations `d(n,1) = r(n) d(n,0)`, the product formula, the
/// expansion identity and the agreement of the two renderings of `D(n,2)`.
pub fn relation_checks(reg: &Registry) -> Vec<CheckReport> {
    let g = "relations";
    let mut out: Vec<CheckReport> = shifted_specs()
        .par_iter()
        .flat_map_iter(|spec| {
            let level = family_level(reg, spec.family);
            let n_max = match level {
                Level::Numeric => 8,
                Level::TwoVariable => 6,
                Level::Q => 5,
            };
            match verify_shifted_relation(reg, spec, n_max) {
                Ok(reports) => reports
                    .into_iter()
                    .map(|r| {
                        let structural = r.product_formula && r.shifted_relation;
                        let status = match (structural, r.r_status) {
                            (false, _) => Status::Mismatch,
                            (true, Some(s)) => s,
                            (true, None) => Status::Match,
                        };
                        let detail = format!(
                            "product formula {}, d(n,1) = r(n) d(n,0) {}, r(n) = {}",
                            r.product_formula, r.shifted_relation, r.r
                        );
                        CheckReport {
                            group: g.into(),
                            check: format!("{} shifted relation, n = {}", spec.family, r.n),
                            level,
                            status,
                            detail,
                        }
                    })
                    .collect(),
                Err(e) => vec![CheckReport {
                    group: g.into(),
                    check: format!("{} shifted relation", spec.family),
                    level,
                    status: Status::Mismatch,
                    detail: format!("error: {e}"),
                }],
            }
        })
        .collect();
    out.push(run(g, "(x+y)^n d(n,0) - y^n D(n,0) = x y^(n-1) D(n-1,2), n <= 5", Level::Q, || {
        for n in 1..=5 {
            if !expansion_identity(reg, n)? {
                return Ok(verdict(false, format!("fails at n = {n}")));
            }
        }
        Ok(verdict(true, "n = 1..5"))
    }));
    out.push(run(g, "both closed forms of D(n,2) agree, n <= 5", Level::Q, || {
        let v = Vars::formal();
        for n in 1..=5 {
            for rendering in [Rendering::Printed, Rendering::Corrected] {
                let a = IdentityId::QSchroderLikeD2.closed_form(&v, n, rendering);
                let b = IdentityId::QSchroderLikeD2Expansion.closed_form(&v, n, rendering);
                let same = match (a, b) {
                    (Some(Ok(a)), Some(Ok(b))) => a == b,
                    (None, None) => true,
                    _ => false,
                };
                if !same {
                    return Ok(verdict(false, format!("{rendering:?} renderings differ at n = {n}")));
                }
            }
        }
        Ok(verdict(true, "printed and corrected renderings, n = 1..5"))
    }));
    out
}

/// Every determinant identity of the suite, symbolic and at seeded points.
pub fn hankel_reports(reg: &Registry, suite: Suite, cfg: &VerifyConfig) -> Result<Vec<HankelReport>, VerifyError> {
    let ids: Vec<IdentityId> = IdentityId::ALL.into_iter().filter(|id| suite.includes(id.level())).collect();
    let per_id: Vec<Vec<HankelReport>> = ids
        .par_iter()
        .map(|&id| {
            let mut reports = verify_identity(reg, id, id.symbolic_max(), &Mode::Symbolic)?;
            if id.level() != Level::Numeric {
                let mode = Mode::Specialized { seed: cfg.seed, points: cfg.points };
                reports.extend(verify_identity(reg, id, id.specialized_max(), &mode)?);
            }
            Ok(reports)
        })
        .collect::<Result<_, VerifyError>>()?;
    Ok(per_id.into_iter().flatten().collect())
}

/// Runs a whole suite.
pub fn run_suite(reg: &Registry, suite: Suite, cfg: &VerifyConfig) -> Result<FullReport, VerifyError> {
    let groups: Vec<Box<dyn Fn() -> Vec<CheckReport> + Sync>> = vec![
        Box::new(|| printed_sequences(reg)),
        Box::new(printed_triangles),
        Box::new(|| jacobi_checks(reg, 6)),
        Box::new(|| continued_fraction_checks(reg)),
        Box::new(|| h_function_checks(reg, 10)),
        Box::new(|| residual_checks(reg, 12)),
        Box::new(|| route_checks(reg, cfg)),
        Box::new(|| oracle_checks(reg, cfg)),
        Box::new(|| polya_gessel_checks(reg, 6)),
        Box::new(|| relation_checks(reg)),
    ];
    let mut checks: Vec<CheckReport> = groups
        .par_iter()
        .flat_map_iter(|group| group().into_iter().filter(|c| suite.includes(c.level)))
        .collect();
    checks.sort_by(|a, b| (&a.group, &a.check).cmp(&(&b.group, &b.check)));
    let mut hankel = hankel_reports(reg, suite, cfg)?;
    hankel.sort_by(|a, b| {
        (&a.identity, &a.mode, a.n, &a.point).cmp(&(&b.identity, &b.mode, b.n, &b.point))
    });
    Ok(FullReport { suite, seed: cfg.seed, checks, hankel })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all_match(reports: &[CheckReport]) {
        for r in reports {
            assert_eq!(r.status, Status::Match, "{} / {}: {}", r.group, r.check, r.detail);
        }
    }

    #[test]
    fn suite_parsing_and_filtering() {
        assert_eq!("q".parse::<Suite>().unwrap(), Suite::Q);
        assert!("quantum".parse::<Suite>().is_err());
        assert!(Suite::Classical.includes(Level::TwoVariable));
        assert!(!Suite::Classical.includes(Level::Q));
        assert!(Suite::All.includes(Level::Q));
    }

    #[test]
    fn sequences_and_triangles() {
        let reg = Registry::standard();
        assert_all_match(&printed_sequences(&reg));
        assert_all_match(&printed_triangles());
    }

    #[test]
    fn h_function_low_order() {
        assert_all_match(&h_function_checks(&Registry::standard(), 6));
    }

    #[test]
    fn residuals_low_order() {
        assert_all_match(&residual_checks(&Registry::standard(), 7));
    }

    #[test]
    fn jacobi_statuses() {
        let reg = Registry::standard();
        let reports = jacobi_checks(&reg, 4);
        let falsified: Vec<&str> = reports
            .iter()
            .filter(|r| r.status == Status::PrintedFormFalsified)
            .map(|r| r.check.as_str())
            .collect();
        assert!(reports.iter().all(|r| r.status.is_ok()), "{reports:#?}");
        assert!(falsified.iter().any(|c| c.starts_with("b-family")));
        assert!(falsified.iter().any(|c| c.contains("to q-little-schroder-like")));
    }

    #[test]
    fn failure_filter() {
        let report = FullReport {
            suite: Suite::All,
            seed: 1,
            checks: vec![
                CheckReport { group: "g".into(), check: "a".into(), level: Level::Numeric, status: Status::Match, detail: String::new() },
                CheckReport { group: "g".into(), check: "b".into(), level: Level::Numeric, status: Status::Mismatch, detail: String::new() },
            ],
            hankel: Vec::new(),
        };
        assert!(!report.all_ok());
        assert_eq!(report.failures().checks.len(), 1);
        assert_eq!(report.tally(), vec![(Status::Match, 1), (Status::Mismatch, 1)]);
    }
}
