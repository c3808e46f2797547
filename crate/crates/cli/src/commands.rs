use serde::{Deserialize, Serialize};

use lsb_core::basegraph::{all_bases, distinguished_bases, pi_ni};
use lsb_core::characters::{typical_character, FormalCharacter};
use lsb_core::classifier::{self, probe_schedule, Bounded, ComponentInfo, GridRow, Verdict};
use lsb_core::oracle::{self, ProbeReport, ShapovalovReport};
use lsb_core::rootdata::{format_rational, parse_rational, AlgebraSpec};
use lsb_core::{Algebra, Base, Error, FormConvention, Result, Weight, Q, SCHEMA};

use crate::{AlgebraArgs, Cli, Command, Failure, Schedule, WeightArgs, WeightIs};

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct BasesReport {
    pub schema: String,
    pub algebra: String,
    pub distinguished_only: bool,
    pub bases: Vec<String>,
    pub components: Vec<ComponentInfo>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct CharacterReport {
    pub schema: String,
    pub algebra: String,
    pub base: String,
    pub method: String,
    pub character: FormalCharacter,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct GridReport {
    pub schema: String,
    pub algebra: String,
    pub base: String,
    pub depths: Vec<usize>,
    pub rows: Vec<GridRow>,
    pub disagreements: usize,
}

fn algebra(a: &AlgebraArgs) -> Result<Algebra> {
    Algebra::new(
        AlgebraSpec::parse(&a.algebra)?,
        FormConvention::parse(&a.form_convention)?,
    )
}

fn base(alg: &Algebra, text: &str) -> Result<Base> {
    let text = text.trim();
    if text == "default" {
        return Ok(alg.default_base().clone());
    }
    if let Some(i) = text.strip_prefix("distinguished:") {
        let i: usize = i
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad base index {i:?}")))?;
        let d = distinguished_bases(alg);
        let count = d.len();
        return d.into_iter().nth(i).ok_or_else(|| {
            Error::Parse(format!(
                "{} has {count} distinguished bases, index {i} is out of range",
                alg.spec()
            ))
        });
    }
    alg.parse_base(text)
}

fn shift(alg: &Algebra, base: &Base, w: Weight, is: WeightIs) -> Weight {
    match is {
        WeightIs::Lambda => w,
        WeightIs::LambdaPlusRho => &w - &alg.rho(base),
    }
}

fn highest_weight(alg: &Algebra, w: &WeightArgs) -> Result<(Base, Weight)> {
    let b = base(alg, &w.base)?;
    let lam = shift(alg, &b, alg.parse_weight(&w.weight)?, w.weight_is);
    Ok((b, lam))
}

fn depths(s: &Schedule) -> Result<Vec<usize>> {
    match &s.depths {
        Some(d) => Ok(d.clone()),
        None => probe_schedule(s.depth),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{}", text());
    }
    Ok(())
}

fn join(xs: &[impl ToString]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn bounded_word(b: Bounded) -> &'static str {
    match b {
        Bounded::Yes => "yes",
        Bounded::No => "no",
        Bounded::Unknown => "unknown",
    }
}

fn verdict_text(alg: &Algebra, base: &Base, v: &Verdict) -> String {
    let mut s = format!("{} on {}\nλ = {}\n", v.algebra, alg.fmt_base(base), v.lam);
    s += &format!(
        "bounded: {} (decided by {})\n",
        bounded_word(v.bounded),
        serde_json::to_value(v.decided_by)
            .expect("enum")
            .as_str()
            .unwrap_or("")
    );
    s += &format!(
        "strongly typical: {}\n",
        if v.strongly_typical { "yes" } else { "no" }
    );
    match v.degree_bound {
        Some(d) => s += &format!("degree bound: {d}\n"),
        None => s += "degree bound: none\n",
    }
    for c in &v.components {
        let status = serde_json::to_value(c.status).expect("enum");
        s += &format!(
            "  {} {{{}}} on {}: {}\n    {}\n",
            c.component.name,
            c.component.simples.join(", "),
            c.component.host_base,
            status.as_str().unwrap_or(""),
            c.witness
        );
    }
    s
}

fn character_text(alg: &Algebra, base: &Base, r: &CharacterReport) -> String {
    let mut s = format!(
        "{} on {}, λ = {}, depth {} ({})\n",
        r.algebra, r.base, r.character.origin, r.character.depth, r.method
    );
    for (o, m) in &r.character.terms {
        s += &format!(
            "  {m:>4}  λ - ({})  [{}]\n",
            alg.fmt(&alg.offset_weight(base, o)),
            join(o)
        );
    }
    s
}

fn grid_points(from: &Q, to: &Q, step: &Q, dim: usize) -> Vec<Weight> {
    let mut values = Vec::new();
    let mut x = from.clone();
    while &x <= to {
        values.push(x.clone());
        x = &x + step;
    }
    let mut points = vec![Vec::new()];
    for _ in 0..dim {
        points = points
            .into_iter()
            .flat_map(|p: Vec<Q>| {
                values.iter().map(move |v| {
                    let mut p = p.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    points.into_iter().map(Weight).collect()
}

pub fn run(cli: Cli) -> std::result::Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Classify {
            alg,
            weight,
            depth,
            strict,
        } => {
            let a = algebra(&alg)?;
            let (b, lam) = highest_weight(&a, &weight)?;
            let v = classifier::classify(&a, &b, &lam, depth)?;
            emit(json, &v, || verdict_text(&a, &b, &v))?;
            if strict && v.bounded == Bounded::Unknown {
                return Err(Failure::Unknown);
            }
        }
        Command::Bases { alg, distinguished } => {
            let a = algebra(&alg)?;
            let bases = if distinguished {
                distinguished_bases(&a)
            } else {
                all_bases(&a).to_vec()
            };
            let report = BasesReport {
                schema: SCHEMA.into(),
                algebra: a.spec().to_string(),
                distinguished_only: distinguished,
                bases: bases.iter().map(|b| a.fmt_base(b)).collect(),
                components: pi_ni(&a)
                    .components
                    .iter()
                    .map(|c| ComponentInfo::new(&a, c))
                    .collect(),
            };
            emit(json, &report, || {
                let kind = if distinguished {
                    "distinguished bases"
                } else {
                    "bases"
                };
                let mut s = format!("{}: {} {kind}\n", report.algebra, report.bases.len());
                for (i, b) in report.bases.iter().enumerate() {
                    s += &format!(
                        "  [{i}] {b}{}\n",
                        if !distinguished && bases[i].is_distinguished() {
                            "  distinguished"
                        } else {
                            ""
                        }
                    );
                }
                s += "components of Π_ni:\n";
                for c in &report.components {
                    s += &format!(
                        "  {}: Π = {{{}}}, Σ = {}\n",
                        c.name,
                        c.simples.join(", "),
                        c.host_base
                    );
                }
                s
            })?;
        }
        Command::Character {
            alg,
            weight,
            depth,
            typical,
        } => {
            let a = algebra(&alg)?;
            let (b, lam) = highest_weight(&a, &weight)?;
            let character = if typical {
                typical_character(&a, &b, &lam, depth)?
            } else {
                oracle::truncated_character(&a, &b, &lam, depth)?
            };
            let report = CharacterReport {
                schema: SCHEMA.into(),
                algebra: a.spec().to_string(),
                base: a.fmt_base(&b),
                method: if typical { "typical" } else { "oracle" }.into(),
                character,
            };
            emit(json, &report, || character_text(&a, &b, &report))?;
        }
        Command::OracleMult { alg, weight, mu } => {
            let a = algebra(&alg)?;
            let (b, lam) = highest_weight(&a, &weight)?;
            let mu = a.parse_weight(&mu)?;
            let r: ShapovalovReport = oracle::shapovalov_rank(&a, &b, &lam, &mu)?;
            emit(json, &r, || {
                format!(
                    "{}: λ = {}, μ = {}\ndim M(λ)_(λ-μ) = {}\ndim L(λ)_(λ-μ) = {}\nmatrix sha256 {}\n",
                    r.algebra,
                    r.lam,
                    a.fmt(&r.mu),
                    r.dimension,
                    r.rank,
                    r.matrix_hash
                )
            })?;
        }
        Command::OracleProbe {
            alg,
            weight,
            schedule,
        } => {
            let a = algebra(&alg)?;
            let (b, lam) = highest_weight(&a, &weight)?;
            let r: ProbeReport = oracle::boundedness_probe(&a, &b, &lam, &depths(&schedule)?)?;
            emit(json, &r, || {
                let status = serde_json::to_value(r.status).expect("enum");
                format!(
                    "{} on {}, λ = {}\ndepths: {}\nmax multiplicity: {}\nstatus: {}\n",
                    r.algebra,
                    r.base,
                    r.lam,
                    join(&r.depths),
                    join(&r.max_mult),
                    status.as_str().unwrap_or("")
                )
            })?;
        }
        Command::ValidateGrid {
            alg,
            weight_is,
            base: base_text,
            from,
            to,
            step,
            schedule,
            jobs,
        } => {
            let a = algebra(&alg)?;
            let b = base(&a, &base_text)?;
            let (from, to, step) = (
                parse_rational(&from)?,
                parse_rational(&to)?,
                parse_rational(&step)?,
            );
            if step <= Q::from_integer(0.into()) {
                return Err(Error::Parse("--step must be positive".into()).into());
            }
            let ds = depths(&schedule)?;
            oracle::verma::check_caps(&a, &b, *ds.last().unwrap_or(&0))?;
            let points = grid_points(&from, &to, &step, a.dim());
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| {
                    Error::InvalidParameter(format!("cannot start {jobs:?} workers: {e}"))
                })?;
            let rows: Vec<GridRow> = pool.install(|| {
                use rayon::prelude::*;
                points
                    .into_par_iter()
                    .map(|p| classifier::validate_point(&a, &b, &shift(&a, &b, p, weight_is), &ds))
                    .collect::<Result<_>>()
            })?;
            let disagreements = rows.iter().filter(|r| !r.agree).count();
            let report = GridReport {
                schema: SCHEMA.into(),
                algebra: a.spec().to_string(),
                base: a.fmt_base(&b),
                depths: ds,
                rows,
                disagreements,
            };
            emit(json, &report, || {
                let rho = a.rho(&b);
                let mut s = format!(
                    "{} on {}, depths {}\n",
                    report.algebra,
                    report.base,
                    join(&report.depths)
                );
                s += &format!(
                    "{:<24} {:<8} {:<16} {:<24} result\n",
                    "λ+ρ", "bounded", "max mult", "probe"
                );
                for r in &report.rows {
                    let status = serde_json::to_value(r.probe.status).expect("enum");
                    let lr: Vec<String> = (&r.lam + &rho).iter().map(format_rational).collect();
                    s += &format!(
                        "{:<24} {:<8} {:<16} {:<24} {}\n",
                        lr.join(","),
                        bounded_word(r.bounded),
                        join(&r.probe.max_mult),
                        status.as_str().unwrap_or(""),
                        if r.agree { "PASS" } else { "FAIL" }
                    );
                }
                s += &format!(
                    "{} points, {} disagreements\n",
                    report.rows.len(),
                    report.disagreements
                );
                s
            })?;
            if disagreements > 0 {
                return Err(Failure::Disagreement(disagreements));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use lsb_core::q;

    #[test]
    fn grid_enumerates_the_box() {
        let pts = grid_points(&q(-1, 1), &q(1, 1), &q(1, 2), 2);
        assert_eq!(pts.len(), 25);
        assert_eq!(pts[0], Weight(vec![q(-1, 1), q(-1, 1)]));
        assert_eq!(pts[24], Weight(vec![q(1, 1), q(1, 1)]));
    }

    fn round_trips<T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug>(x: &T) {
        let text = serde_json::to_string(x).unwrap();
        assert_eq!(&serde_json::from_str::<T>(&text).unwrap(), x);
    }

    #[test]
    fn reports_round_trip() {
        let a = lsb_core::parse_algebra("osp(3|2)").unwrap();
        let b = a.default_base();
        round_trips(&BasesReport {
            schema: SCHEMA.into(),
            algebra: a.spec().to_string(),
            distinguished_only: false,
            bases: all_bases(&a).iter().map(|x| a.fmt_base(x)).collect(),
            components: pi_ni(&a)
                .components
                .iter()
                .map(|c| ComponentInfo::new(&a, c))
                .collect(),
        });
        let lam = Weight(vec![q(1, 3), q(-2, 5)]);
        round_trips(&CharacterReport {
            schema: SCHEMA.into(),
            algebra: a.spec().to_string(),
            base: a.fmt_base(b),
            method: "oracle".into(),
            character: oracle::truncated_character(&a, b, &lam, 4).unwrap(),
        });
        let row = classifier::validate_point(&a, b, &lam, &[4, 6, 8]).unwrap();
        round_trips(&GridReport {
            schema: SCHEMA.into(),
            algebra: a.spec().to_string(),
            base: a.fmt_base(b),
            depths: vec![4, 6, 8],
            rows: vec![row],
            disagreements: 0,
        });
    }

    #[test]
    fn base_selection() {
        let a = lsb_core::parse_algebra("osp(5|4)").unwrap();
        assert_eq!(&base(&a, "default").unwrap(), a.default_base());
        let d = distinguished_bases(&a);
        assert_eq!(base(&a, "distinguished:1").unwrap(), d[1]);
        assert_eq!(base(&a, &a.fmt_base(&d[0])).unwrap(), d[0]);
        assert!(matches!(base(&a, "distinguished:2"), Err(Error::Parse(_))));
    }
}
