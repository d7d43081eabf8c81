//! One method per subcommand. Each returns the text for standard output.

use std::collections::BTreeMap;

use serde::Serialize;

use qschroder::hankel::{hankel_det, verify_identity, HankelReport, IdentityId, Mode, Status};
use qschroder::orthogonal::{
    aerate, named, stieltjes_extract, triangle_from_jacobi, JacobiData, JacobiRendering,
    MomentSource, NamedJacobi,
};
use qschroder::paths::{motzkin_weight_sum, schroder_path_sum};
use qschroder::sequences::Generator;
use qschroder::series::{j_fraction, s_fraction};
use qschroder::verify::{run_suite, FullReport, Suite, VerifyConfig};
use qschroder::{Poly, Registry};

use crate::bindings::Bindings;
use crate::config::Limits;
use crate::error::CliError;
use crate::render::{self, Format};
use crate::Output;

pub struct Context {
    reg: Registry,
    limits: Limits,
    bindings: Bindings,
    format: Format,
}

#[derive(Serialize)]
struct SeqOut<'a> {
    family: &'a str,
    route: &'a str,
    bindings: BTreeMap<String, String>,
    terms: Vec<String>,
}

#[derive(Serialize)]
struct TriangleOut<'a> {
    family: &'a str,
    bindings: BTreeMap<String, String>,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct StieltjesOut<'a> {
    family: &'a str,
    bindings: BTreeMap<String, String>,
    #[serde(flatten)]
    data: JacobiRendering,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<Status>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct CfOut<'a> {
    family: &'a str,
    kind: &'a str,
    bindings: BTreeMap<String, String>,
    expansion: Vec<String>,
    agrees: bool,
}

#[derive(Serialize)]
struct DetOut<'a> {
    family: &'a str,
    offset: usize,
    n: usize,
    computed: String,
}

#[derive(Serialize)]
struct PathsOut<'a> {
    model: &'a str,
    family: &'a str,
    n: usize,
    k: usize,
    bindings: BTreeMap<String, String>,
    paths: String,
    expected: String,
    agrees: bool,
}

#[derive(Serialize)]
struct FamilyOut<'a> {
    name: &'a str,
    about: &'a str,
    equations: &'a str,
    index: &'a str,
    routes: Vec<&'a str>,
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Space-separated if every entry is a number, one entry per line otherwise.
fn sequence_table(label: &str, terms: &[Poly]) -> String {
    if terms.iter().all(Poly::is_constant) {
        let mut line = strings(terms).join(" ");
        line.push('\n');
        line
    } else {
        terms.iter().enumerate().map(|(n, p)| format!("{label}({n}) = {p}\n")).collect()
    }
}

fn verdict_text(agrees: bool) -> &'static str {
    if agrees {
        "agrees"
    } else {
        "DISAGREES"
    }
}

impl Context {
    pub fn new(limits: Limits, bindings: Bindings, format: Format) -> Self {
        Self { reg: Registry::standard(), limits, bindings, format }
    }

    fn bindings_map(&self) -> BTreeMap<String, String> {
        self.bindings.describe().into_iter().collect()
    }

    /// Terms `0..=order` of a family by a route, with the bindings applied.
    /// Fully bound families are evaluated numerically; a point the numeric
    /// route cannot handle falls back to substituting into formal terms.
    fn terms(&self, family: &str, route: usize, order: usize) -> Result<Vec<Poly>, CliError> {
        let spec = self.reg.get(family)?;
        if spec.routes.get(route).is_none() {
            return Err(CliError::Usage(format!("family {family} has no route {route}")));
        }
        if !self.bindings.is_formal() {
            if let Some(pt) = self.bindings.point_for(spec.free_vars) {
                if let Ok(v) = self.reg.generate_route_at(family, route, &pt, order) {
                    return Ok(v.into_iter().map(Poly::constant).collect());
                }
            }
        }
        let formal = if route == 0 {
            self.reg.generate(family, order)?
        } else {
            self.reg.generate_route(family, route, order)?
        };
        Ok(formal.iter().map(|p| self.bindings.apply(p)).collect())
    }

    fn moments(&self, source: MomentSource, count: usize) -> Result<Vec<Poly>, CliError> {
        Ok(match source {
            MomentSource::Family(f) => self.terms(f, 0, count.saturating_sub(1))?,
            MomentSource::Aerated(f) => {
                let mut v = aerate(&self.terms(f, 0, count / 2)?);
                v.truncate(count);
                v
            }
        })
    }

    /// A named Jacobi datum or a family, and where its moments come from.
    fn resolve(&self, name: &str) -> Result<(Option<NamedJacobi>, MomentSource), CliError> {
        if let Some(nj) = named(name) {
            return Ok((Some(nj.clone()), nj.source));
        }
        let spec = self.reg.get(name).map_err(|_| {
            let known: Vec<&str> = self.reg.names().collect();
            CliError::Usage(format!("unknown family `{name}` (known: {})", known.join(", ")))
        })?;
        Ok((None, MomentSource::Family(spec.name)))
    }

    /// `s(0..=depth)`, `t(0..=depth)`: the closed form for a named datum,
    /// else extracted from the moments.
    fn jacobi(&self, name: &str, depth: usize) -> Result<JacobiData, CliError> {
        match self.resolve(name)? {
            (Some(nj), _) => Ok(nj.truth().data(depth + 1).subst(&self.bindings.substitution())),
            (None, source) => {
                let moments = self.moments(source, 2 * depth + 3)?;
                Ok(stieltjes_extract(&moments, depth)?.truncated(depth + 1, depth + 1))
            }
        }
    }

    fn unknown_family(&self, e: qschroder::FamilyError) -> CliError {
        match e {
            qschroder::FamilyError::Unknown(name) => {
                let known: Vec<&str> = self.reg.names().collect();
                CliError::Usage(format!("unknown family `{name}` (known: {})", known.join(", ")))
            }
            other => other.into(),
        }
    }

    pub fn list_families(&self) -> Result<Output, CliError> {
        let fams: Vec<FamilyOut> = self
            .reg
            .families()
            .iter()
            .map(|f| FamilyOut {
                name: f.name,
                about: f.about,
                equations: f.equations,
                index: f.offset_meaning,
                routes: f.routes.iter().map(|r| r.label).collect(),
            })
            .collect();
        let text = match self.format {
            Format::Json => render::json(&fams)?,
            Format::Csv => render::csv(
                &["name", "about", "routes"],
                fams.iter().map(|f| vec![f.name.into(), f.about.into(), f.routes.join("; ")]),
            )?,
            Format::Table => {
                let mut out = String::new();
                for f in &fams {
                    out.push_str(&format!("{}\n    {}\n    {}\n    n counts {}\n", f.name, f.about, f.equations, f.index));
                    for (i, r) in f.routes.iter().enumerate() {
                        out.push_str(&format!("    route {i}: {r}\n"));
                    }
                }
                out
            }
        };
        Ok(Output::ok(text))
    }

    pub fn seq(&self, family: &str, n: usize, route: usize) -> Result<Output, CliError> {
        if n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        self.limits.check("term index", n - 1, self.limits.max_order)?;
        let spec = self.reg.get(family).map_err(|e| self.unknown_family(e))?;
        let terms = self.terms(family, route, n - 1)?;
        let text = match self.format {
            Format::Json => render::json(&SeqOut {
                family: spec.name,
                route: spec.routes[route].label,
                bindings: self.bindings_map(),
                terms: strings(&terms),
            })?,
            Format::Csv => render::csv(&["n", "value"], terms.iter().enumerate().map(|(i, p)| vec![i.to_string(), p.to_string()]))?,
            Format::Table => sequence_table("a", &terms),
        };
        Ok(Output::ok(text))
    }

    pub fn triangle(&self, family: &str, rows: usize) -> Result<Output, CliError> {
        if rows == 0 {
            return Err(CliError::Usage("--rows must be at least 1".into()));
        }
        self.limits.check("triangle rows", rows, self.limits.max_depth)?;
        let j = self.jacobi(family, rows)?;
        let tri = triangle_from_jacobi(&j, rows - 1)?;
        let text = match self.format {
            Format::Json => render::json(&TriangleOut {
                family,
                bindings: self.bindings_map(),
                rows: tri.rows.iter().map(|r| strings(r)).collect(),
            })?,
            Format::Csv => render::csv(
                &["n", "k", "value"],
                tri.rows.iter().enumerate().flat_map(|(n, r)| {
                    r.iter().enumerate().map(move |(k, p)| vec![n.to_string(), k.to_string(), p.to_string()])
                }),
            )?,
            Format::Table if tri.rows.iter().flatten().all(Poly::is_constant) => {
                render::columns(&tri.rows.iter().map(|r| strings(r)).collect::<Vec<_>>())
            }
            Format::Table => tri
                .rows
                .iter()
                .enumerate()
                .flat_map(|(n, r)| r.iter().enumerate().map(move |(k, p)| format!("a({n},{k}) = {p}\n")))
                .collect(),
        };
        Ok(Output::ok(text))
    }

    pub fn stieltjes(&self, family: &str, depth: usize) -> Result<Output, CliError> {
        self.limits.check("extraction depth", depth, self.limits.max_depth)?;
        let (nj, source) = self.resolve(family)?;
        let moments = self.moments(source, 2 * depth + 3)?;
        let got = stieltjes_extract(&moments, depth)?.truncated(depth + 1, depth + 1);
        let judged = nj.map(|nj| {
            let sub = self.bindings.substitution();
            let printed = nj.printed.data(depth + 1).subst(&sub);
            if got == printed {
                (Status::Match, "printed closed form".to_string())
            } else if nj.corrected.is_some_and(|c| c.data(depth + 1).subst(&sub) == got) {
                (Status::PrintedFormFalsified, format!("printed form is wrong; corrected form holds ({})", nj.about))
            } else {
                (Status::Mismatch, format!("neither closed form holds ({})", nj.about))
            }
        });
        let ok = judged.as_ref().is_none_or(|(s, _)| s.is_ok());
        let data = JacobiRendering::from(&got);
        let text = match self.format {
            Format::Json => render::json(&StieltjesOut {
                family,
                bindings: self.bindings_map(),
                data,
                status: judged.as_ref().map(|j| j.0),
                detail: judged.map(|j| j.1),
            })?,
            Format::Csv => render::csv(
                &["n", "s", "t"],
                (0..=depth).map(|n| vec![n.to_string(), data.s[n].clone(), data.t[n].clone()]),
            )?,
            Format::Table => {
                let mut rows = vec![vec!["n".to_string(), "s(n)".into(), "t(n)".into()]];
                rows.extend((0..=depth).map(|n| vec![n.to_string(), data.s[n].clone(), data.t[n].clone()]));
                let mut out = render::columns(&rows);
                if let Some((status, detail)) = judged {
                    out.push_str(&format!("status: {status} ({detail})\n"));
                }
                out
            }
        };
        Ok(Output { text, ok })
    }

    pub fn cf(&self, family: &str, order: usize, s_kind: bool) -> Result<Output, CliError> {
        self.limits.check("expansion order", order, self.limits.max_order)?;
        let (expansion, want) = if s_kind {
            let spec = self.reg.get(family).map_err(|e| self.unknown_family(e))?;
            let num = spec
                .routes
                .iter()
                .find_map(|r| match r.generator {
                    Generator::SFraction(num) => Some(num),
                    _ => None,
                })
                .ok_or_else(|| CliError::Usage(format!("family {family} has no S-fraction")))?;
            let sub = self.bindings.substitution();
            let series = s_fraction(|k| num(k).subst(&sub), order + 1, order)?;
            let other = spec.routes.iter().position(|r| !matches!(r.generator, Generator::SFraction(_))).unwrap_or(0);
            (series.into_coeffs(), self.terms(family, other, order)?)
        } else {
            let (_, source) = self.resolve(family)?;
            let j = self.jacobi(family, order / 2 + 1)?;
            let series = j_fraction(&j.s, &j.t, order)?;
            (series.into_coeffs(), self.moments(source, order + 1)?)
        };
        let agrees = expansion == want;
        let text = match self.format {
            Format::Json => render::json(&CfOut {
                family,
                kind: if s_kind { "s" } else { "j" },
                bindings: self.bindings_map(),
                expansion: strings(&expansion),
                agrees,
            })?,
            Format::Csv => render::csv(
                &["n", "coefficient", "family"],
                expansion.iter().zip(&want).enumerate().map(|(n, (e, w))| vec![n.to_string(), e.to_string(), w.to_string()]),
            )?,
            Format::Table => {
                let mut out = sequence_table("c", &expansion);
                out.push_str(&format!("{} with the family's terms through z^{order}\n", verdict_text(agrees)));
                out
            }
        };
        Ok(Output { text, ok: agrees })
    }

    pub fn list_identities(&self) -> Result<Output, CliError> {
        let rows: Vec<Vec<String>> = IdentityId::ALL
            .iter()
            .map(|id| vec![id.key().into(), id.offset().to_string(), id.symbolic_max().to_string(), id.formula().into()])
            .collect();
        let header = ["identity", "offset", "symbolic-max-n", "closed-form"];
        let text = match self.format {
            Format::Json => {
                let objs: Vec<BTreeMap<&str, &String>> =
                    rows.iter().map(|r| header.iter().copied().zip(r.iter()).collect()).collect();
                render::json(&objs)?
            }
            Format::Csv => render::csv(&header, rows)?,
            Format::Table => {
                let mut all = vec![header.iter().map(|s| s.to_string()).collect()];
                all.extend(rows);
                render::columns(&all)
            }
        };
        Ok(Output::ok(text))
    }

    pub fn hankel(
        &self,
        family: Option<&str>,
        identity: Option<&str>,
        offset: usize,
        max_n: usize,
        random: Option<(u64, usize)>,
    ) -> Result<Output, CliError> {
        let (cap_what, cap) = match random {
            None => ("symbolic matrix size", self.limits.max_symbolic_n),
            Some(_) => ("specialized matrix size", self.limits.max_specialized_n),
        };
        self.limits.check(cap_what, max_n, cap)?;
        if let Some((_, points)) = random {
            self.limits.check("random points", points, self.limits.max_points)?;
        }
        let id = match identity {
            Some(key) => Some(IdentityId::from_key(key).ok_or_else(|| {
                CliError::Usage(format!("unknown identity `{key}` (see `hankel --list`)"))
            })?),
            None => {
                let family = family.expect("clap requires --family or --identity");
                self.reg.get(family).map_err(|e| self.unknown_family(e))?;
                IdentityId::ALL.into_iter().find(|id| id.family() == family && id.offset() == offset)
            }
        };
        match id {
            Some(id) => {
                if !self.bindings.is_formal() {
                    return Err(CliError::Usage(
                        "identity checks run on formal x, y, q; use --mode random for numeric points".into(),
                    ));
                }
                let mode = match random {
                    None => Mode::Symbolic,
                    Some((seed, points)) => Mode::Specialized { seed, points },
                };
                let reports = verify_identity(&self.reg, id, max_n, &mode)?;
                self.identity_output(&reports)
            }
            None => {
                let family = family.expect("no identity without a family");
                if random.is_some() {
                    return Err(CliError::Usage(format!(
                        "no identity for {family} at offset {offset}; random mode needs one"
                    )));
                }
                let seq = self.terms(family, 0, (2 * max_n + offset).saturating_sub(2))?;
                let dets = (1..=max_n)
                    .map(|n| {
                        let det = hankel_det(&seq, n, offset).map_err(qschroder::hankel::VerifyError::from)?;
                        Ok(DetOut { family, offset, n, computed: det.to_string() })
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                let text = match self.format {
                    Format::Json => render::json(&dets)?,
                    Format::Csv => render::csv(
                        &["family", "offset", "n", "computed"],
                        dets.iter().map(|d| vec![d.family.into(), d.offset.to_string(), d.n.to_string(), d.computed.clone()]),
                    )?,
                    Format::Table => dets.iter().map(|d| format!("D({},{}) = {}\n", d.n, d.offset, d.computed)).collect(),
                };
                Ok(Output::ok(text))
            }
        }
    }

    fn identity_output(&self, reports: &[HankelReport]) -> Result<Output, CliError> {
        let ok = reports.iter().all(|r| r.status.is_ok());
        if !ok {
            let failures: Vec<&HankelReport> = reports.iter().filter(|r| !r.status.is_ok()).collect();
            return Ok(Output { text: render::json(&failures)?, ok });
        }
        let text = match self.format {
            Format::Json => render::json(&reports)?,
            Format::Csv => render::csv(&["identity", "n", "mode", "match"], aggregate(reports))?,
            Format::Table => {
                let mut rows = vec![vec!["identity".to_string(), "n".into(), "mode".into(), "status".into(), "point".into()]];
                rows.extend(reports.iter().map(|r| {
                    vec![
                        r.identity.clone(),
                        r.n.to_string(),
                        r.mode.clone(),
                        r.status.to_string(),
                        r.point.clone().unwrap_or_default(),
                    ]
                }));
                render::columns(&rows)
            }
        };
        Ok(Output { text, ok })
    }

    pub fn motzkin_paths(&self, family: &str, n: usize, k: usize) -> Result<Output, CliError> {
        self.limits.check("path length", n, self.limits.max_path_n)?;
        let j = self.jacobi(family, (n + k) / 2 + 1)?;
        let paths = motzkin_weight_sum(&j.s, &j.t, n, k)?;
        let expected = triangle_from_jacobi(&j, n)?.entry(n, k);
        self.paths_output("motzkin", family, n, k, paths, expected)
    }

    pub fn schroder_paths(&self, n: usize) -> Result<Output, CliError> {
        self.limits.check("path size", n, self.limits.max_path_n)?;
        let paths = self.bindings.apply(&schroder_path_sum(n)?);
        let expected = self.terms("schroder-like", 0, n)?.swap_remove(n);
        self.paths_output("schroder", "schroder-like", n, 0, paths, expected)
    }

    fn paths_output(&self, model: &str, family: &str, n: usize, k: usize, paths: Poly, expected: Poly) -> Result<Output, CliError> {
        let agrees = paths == expected;
        let out = PathsOut {
            model,
            family,
            n,
            k,
            bindings: self.bindings_map(),
            paths: paths.to_string(),
            expected: expected.to_string(),
            agrees,
        };
        let text = match self.format {
            Format::Json => render::json(&out)?,
            Format::Csv => render::csv(
                &["model", "family", "n", "k", "paths", "expected", "agrees"],
                [vec![
                    model.into(),
                    family.into(),
                    n.to_string(),
                    k.to_string(),
                    out.paths.clone(),
                    out.expected.clone(),
                    agrees.to_string(),
                ]],
            )?,
            Format::Table => format!(
                "path sum:  {}\nformula:   {}\n{}\n",
                out.paths,
                out.expected,
                verdict_text(agrees)
            ),
        };
        Ok(Output { text, ok: agrees })
    }

    pub fn verify(&self, suite: Suite, seed: u64, points: usize) -> Result<Output, CliError> {
        self.limits.check("random points", points, self.limits.max_points)?;
        let cfg = VerifyConfig { seed, points, ..VerifyConfig::default() };
        let report = run_suite(&self.reg, suite, &cfg)?;
        if !report.all_ok() {
            return Ok(Output { text: render::json(&report.failures())?, ok: false });
        }
        let text = match self.format {
            Format::Json => render::json(&report)?,
            Format::Csv => render::csv(&["identity", "n", "mode", "match"], verify_csv_rows(&report))?,
            Format::Table => verify_table(&report),
        };
        Ok(Output::ok(text))
    }
}

/// One CSV row per `(identity, n, mode)`; specialized rows match only if
/// every point does.
fn aggregate(reports: &[HankelReport]) -> Vec<Vec<String>> {
    let mut rows: BTreeMap<(String, String, usize), bool> = BTreeMap::new();
    for r in reports {
        *rows.entry((r.identity.clone(), r.mode.clone(), r.n)).or_insert(true) &= r.matches;
    }
    rows.into_iter().map(|((id, mode, n), m)| vec![id, n.to_string(), mode, m.to_string()]).collect()
}

fn verify_csv_rows(report: &FullReport) -> Vec<Vec<String>> {
    let checks = report.checks.iter().map(|c| {
        vec![format!("{}/{}", c.group, c.check), String::new(), "check".into(), (c.status == Status::Match).to_string()]
    });
    checks.chain(aggregate(&report.hankel)).collect()
}

fn verify_table(report: &FullReport) -> String {
    let mut rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| vec![c.status.to_string(), c.group.clone(), c.check.clone(), c.detail.clone()])
        .collect();
    let mut summary: BTreeMap<(&str, &str), (usize, usize, Status)> = BTreeMap::new();
    for h in &report.hankel {
        let e = summary.entry((&h.identity, &h.mode)).or_insert((usize::MAX, 0, Status::Match));
        e.0 = e.0.min(h.n);
        e.1 = e.1.max(h.n);
        e.2 = e.2.max(h.status);
    }
    rows.extend(summary.into_iter().map(|((id, mode), (lo, hi, status))| {
        vec![status.to_string(), "hankel".into(), format!("{id} {mode}"), format!("n = {lo}..{hi}")]
    }));
    let mut out = render::columns(&rows);
    let tally: Vec<String> = report.tally().iter().map(|(s, c)| format!("{s}: {c}")).collect();
    out.push_str(&format!("suite {} seed {}: {}\n", report.suite, report.seed, tally.join(", ")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qschroder::orthogonal::named_jacobi;

    fn ctx() -> Context {
        Context::new(Limits::default(), Bindings::default(), Format::Table)
    }

    #[test]
    fn seq_prints_numbers_on_one_line() {
        assert_eq!(ctx().seq("schroder-large", 5, 0).unwrap().text, "1 2 6 22 90\n");
    }

    #[test]
    fn q_one_gives_classical_terms() {
        let b = Bindings { x: "1".parse().unwrap(), y: "1".parse().unwrap(), q: "1".parse().unwrap() };
        let c = Context::new(Limits::default(), b, Format::Table);
        assert_eq!(c.seq("q-schroder-like", 5, 0).unwrap().text, "1 2 6 22 90\n");
    }

    #[test]
    fn triangle_rows_count_from_one() {
        let out = ctx().triangle("little-schroder", 4).unwrap().text;
        assert_eq!(out.lines().last().unwrap().split_whitespace().collect::<Vec<_>>(), ["11", "17", "7", "1"]);
    }

    #[test]
    fn extracted_and_named_triangles_agree() {
        let c = ctx();
        let named = c.jacobi("little-schroder", 4).unwrap();
        let moments = c.moments(MomentSource::Family("little-schroder"), 11).unwrap();
        assert_eq!(stieltjes_extract(&moments, 4).unwrap(), named);
    }

    #[test]
    fn stieltjes_reports_falsified_printed_form() {
        let out = ctx().stieltjes("q-little-schroder-like", 3).unwrap();
        assert!(out.ok);
        assert!(out.text.contains("printed-form-falsified"), "{}", out.text);
    }

    #[test]
    fn continued_fractions_agree() {
        assert!(ctx().cf("schroder-like", 8, false).unwrap().ok);
        assert!(ctx().cf("q-schroder-like", 6, true).unwrap().ok);
        assert!(ctx().cf("aerated/schroder-large", 8, false).unwrap().ok);
    }

    #[test]
    fn path_oracles_agree() {
        assert!(ctx().motzkin_paths("schroder-like", 6, 2).unwrap().ok);
        assert!(ctx().schroder_paths(4).unwrap().ok);
    }

    #[test]
    fn hankel_identity_and_plain_determinants() {
        let out = ctx().hankel(Some("schroder-large"), None, 0, 4, None).unwrap();
        assert!(out.ok && out.text.contains("schroder-large/d0"));
        let plain = ctx().hankel(Some("motzkin"), None, 3, 2, None).unwrap();
        assert!(plain.text.starts_with("D(1,3) = "), "{}", plain.text);
    }

    #[test]
    fn caps_are_enforced() {
        let limits = Limits { max_path_n: 3, ..Limits::default() };
        let c = Context::new(limits, Bindings::default(), Format::Table);
        assert!(matches!(c.schroder_paths(4), Err(CliError::Limit(_))));
    }

    #[test]
    fn unknown_family_is_a_usage_error() {
        assert!(matches!(ctx().seq("nope", 3, 0), Err(CliError::Usage(_))));
        assert!(matches!(ctx().triangle("nope", 3), Err(CliError::Usage(_))));
    }

    #[test]
    fn csv_aggregates_points() {
        let reports = verify_identity(
            &Registry::standard(),
            IdentityId::SchroderLikeD0,
            2,
            &Mode::Specialized { seed: 1, points: 3 },
        )
        .unwrap();
        assert_eq!(reports.len(), 6);
        assert_eq!(aggregate(&reports).len(), 2);
    }

    #[test]
    fn named_data_cover_their_sources() {
        for nj in named_jacobi() {
            assert!(ctx().resolve(nj.key).is_ok());
        }
    }
}
