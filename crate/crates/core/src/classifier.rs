//! Boundedness of simple highest weight modules, component by component.
//!
//! For each component `𝔱` of `𝔤_ni` the highest weight is moved to a
//! distinguished base `Σ_𝔱` containing `Π(𝔱)` and the `𝔱`-module it generates
//! is tested. Every test only needs the pairings `(λ^𝔱 + ρ, α^∨)` with the
//! simple roots `α ∈ Π(𝔱)`, which do not depend on the sign of the form.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::basegraph::{pi_ni, transport_weight, ComponentKind, NiComponent};
use crate::oracle::{self, ProbeStatus};
use crate::rootdata::format_rational;
use crate::rootdata::{Algebra, AlgebraSpec, Base, Family, FormConvention, Root, Weight};
use crate::{q, Error, Result, Q};

/// Depth used when a caller does not choose one.
pub const DEFAULT_DEPTH: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ComponentStatus {
    FiniteDim,
    BoundedInfinite,
    Unbounded,
    OracleBounded,
    OracleUnboundedEvidence,
    Unknown,
}

impl ComponentStatus {
    pub fn is_bounded(self) -> bool {
        matches!(
            self,
            Self::FiniteDim | Self::BoundedInfinite | Self::OracleBounded
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bounded {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecidedBy {
    #[serde(rename = "cor1_i")]
    Cor1I,
    #[serde(rename = "cor1_ii")]
    Cor1Ii,
    #[serde(rename = "cor1_iii")]
    Cor1Iii,
    #[serde(rename = "thmbound")]
    ThmBound,
    #[serde(rename = "thms2_reduction")]
    Thms2Reduction,
}

/// Serializable description of a component of `𝔤_ni`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentInfo {
    pub name: String,
    pub kind: ComponentKind,
    pub simples: Vec<String>,
    pub host_base: String,
}

impl ComponentInfo {
    pub fn new(alg: &Algebra, c: &NiComponent) -> Self {
        ComponentInfo {
            name: c.name(alg),
            kind: c.kind,
            simples: c.simples.iter().map(|r| alg.fmt(&r.weight)).collect(),
            host_base: alg.fmt_base(&c.host_base),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentVerdict {
    pub component: ComponentInfo,
    pub status: ComponentStatus,
    pub witness: String,
    /// `λ^𝔱` with the coordinates outside the support of `Π(𝔱)` dropped.
    pub transported_weight: Weight,
    /// `(λ^𝔱 + ρ, α^∨)` for `α ∈ Π(𝔱)` in chain order.
    pub pairings: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub schema: String,
    pub algebra: String,
    pub lam: Weight,
    pub bounded: Bounded,
    pub decided_by: DecidedBy,
    pub components: Vec<ComponentVerdict>,
    pub strongly_typical: bool,
    pub degree_bound: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpFamily {
    /// `sp(2n)`, last simple root `2δ_n`.
    Sp,
    /// `osp(1|2n)`, last simple root `δ_n`.
    Osp1,
}

fn pos_int(x: &Q) -> bool {
    x.is_integer() && x.is_positive()
}

fn half_odd(x: &Q) -> bool {
    !x.is_integer() && (x * q(2, 1)).is_integer()
}

fn list(xs: &[Q]) -> String {
    xs.iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Status of `L(λ)` over `sp(2n)` or `osp(1|2n)` from `y = λ + ρ` in the
/// coordinates of the base `{δ_1-δ_2, …, δ_{n-1}-δ_n, 2δ_n or δ_n}`.
pub fn is_bounded_sp_family(kind: SpFamily, n: usize, y: &[Q]) -> Result<ComponentStatus> {
    Ok(sp_family(kind, n, y)?.0)
}

fn sp_family(kind: SpFamily, n: usize, y: &[Q]) -> Result<(ComponentStatus, String)> {
    if y.len() != n || n == 0 {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: y.len(),
            layout: format!("n={n}"),
        });
    }
    let last = &y[n - 1];
    let finite = match kind {
        SpFamily::Sp => pos_int(last),
        SpFamily::Osp1 => half_odd(last) && last.is_positive(),
    };
    let infinite_ok = match kind {
        SpFamily::Sp => half_odd(last),
        SpFamily::Osp1 => last.is_integer(),
    };
    let head = format!("y = ({})", list(y));
    if n == 1 {
        let status = if finite {
            ComponentStatus::FiniteDim
        } else {
            ComponentStatus::BoundedInfinite
        };
        return Ok((
            status,
            format!("{head}: rank one, every module in O is bounded"),
        ));
    }
    let mut diffs: Vec<(String, Q)> = (0..n - 1)
        .map(|i| (format!("y{}-y{}", i + 1, i + 2), &y[i] - &y[i + 1]))
        .collect();
    diffs.push((format!("y{}+y{}", n - 1, n), &y[n - 2] + last));
    if let Some((name, v)) = diffs.iter().find(|(_, v)| !pos_int(v)) {
        return Ok((
            ComponentStatus::Unbounded,
            format!("{head}: {name} = {} ∉ Z>0", format_rational(v)),
        ));
    }
    let ok = "differences and y_{n-1}+y_n in Z>0";
    Ok(if finite {
        (
            ComponentStatus::FiniteDim,
            format!(
                "{head}: {ok}, y{n} = {} gives a finite-dimensional module",
                format_rational(last)
            ),
        )
    } else if infinite_ok {
        (
            ComponentStatus::BoundedInfinite,
            format!("{head}: {ok}, y{n} = {}", format_rational(last)),
        )
    } else {
        (
            ComponentStatus::Unbounded,
            format!(
                "{head}: {ok} but y{n} = {} has the wrong parity",
                format_rational(last)
            ),
        )
    })
}

/// The `o_5` rule on `x = λ + ρ` with simple roots `ε_1-ε_2, ε_2`.
fn o5_rule(x: &[Q]) -> (ComponentStatus, String) {
    let (d, t) = (&x[0] - &x[1], &x[1] * q(2, 1));
    let head = format!("x = ({})", list(x));
    if pos_int(&d) && pos_int(&t) {
        (
            ComponentStatus::FiniteDim,
            format!(
                "{head}: x1-x2 = {}, 2x2 = {} ∈ Z>0",
                format_rational(&d),
                format_rational(&t)
            ),
        )
    } else if pos_int(&(&x[0] * q(2, 1))) && pos_int(&t) && !d.is_integer() {
        (
            ComponentStatus::BoundedInfinite,
            format!("{head}: 2x1, 2x2 ∈ Z>0 and x1-x2 ∉ Z"),
        )
    } else {
        (
            ComponentStatus::Unbounded,
            format!("{head}: neither x1-x2, 2x2 ∈ Z>0 nor 2x1, 2x2 ∈ Z>0 with x1-x2 ∉ Z"),
        )
    }
}

fn adjacent(alg: &Algebra, a: &Root, b: &Root) -> bool {
    !alg.form(&a.weight, &b.weight)
        .expect("same dimension")
        .is_zero()
}

fn norm(alg: &Algebra, r: &Root) -> Q {
    alg.form(&r.weight, &r.weight)
        .expect("same dimension")
        .abs()
}

/// Simple roots of a path-shaped component from one end to the other; for
/// `B`, `C` and `BC` the root of different length or parity comes last.
fn chain(alg: &Algebra, c: &NiComponent) -> Vec<Root> {
    let s = &c.simples;
    if s.len() == 1 {
        return s.clone();
    }
    let degree = |r: &Root| s.iter().filter(|t| *t != r && adjacent(alg, r, t)).count();
    let leaves: Vec<&Root> = s.iter().filter(|r| degree(r) == 1).collect();
    let special = match c.kind {
        ComponentKind::B => s.iter().min_by_key(|r| norm(alg, r)),
        ComponentKind::C => s.iter().max_by_key(|r| norm(alg, r)),
        ComponentKind::BcSuper => s.iter().find(|r| r.is_odd()),
        _ => None,
    };
    let start = leaves
        .iter()
        .find(|r| Some(**r) != special)
        .copied()
        .unwrap_or(&s[0]);
    let mut out = vec![start.clone()];
    while out.len() < s.len() {
        let last = out.last().expect("non-empty");
        let next = s
            .iter()
            .find(|t| !out.contains(t) && adjacent(alg, last, t))
            .unwrap_or_else(|| {
                s.iter()
                    .find(|t| !out.contains(t))
                    .expect("remaining simple root")
            });
        out.push(next.clone());
    }
    out
}

/// `(λ + ρ, α^∨)` for simple `α` of a base containing `α`: `ρ` pairs to `1`
/// with every non-isotropic simple root.
fn shifted_pairing(alg: &Algebra, lam: &Weight, alpha: &Root) -> Result<Q> {
    Ok(alg.coroot_pair(lam, &alpha.weight)? + Q::one())
}

/// `λ` restricted to the coordinates the component touches.
fn restrict(lam: &Weight, c: &NiComponent) -> Weight {
    Weight(
        lam.iter()
            .enumerate()
            .map(|(i, x)| {
                if c.simples.iter().any(|r| !r.weight[i].is_zero()) {
                    x.clone()
                } else {
                    Q::zero()
                }
            })
            .collect(),
    )
}

/// Positive roots of the component, from its host base.
fn component_positive_roots(alg: &Algebra, c: &NiComponent) -> Vec<Root> {
    let own = Base::new(c.simples.clone());
    alg.positive_roots(&c.host_base)
        .into_iter()
        .filter(|r| {
            alg.base_coefficients(&own, &r.weight)
                .is_some_and(|k| k.iter().all(|x| x.is_integer()))
        })
        .collect()
}

/// Weyl dimension formula for a finite-dimensional Lie component.
fn weyl_dimension(alg: &Algebra, c: &NiComponent, lam_t: &Weight) -> Result<Q> {
    let pos = component_positive_roots(alg, c);
    let mut rho = Weight::zero(alg.dim());
    for r in &pos {
        let w = r.weight.scale(&q(1, 2));
        if r.is_odd() {
            rho -= &w;
        } else {
            rho += &w;
        }
    }
    let lr = lam_t + &rho;
    let mut d = Q::one();
    for r in pos.iter().filter(|r| !r.is_odd()) {
        d *= alg.form(&lr, &r.weight)? / alg.form(&rho, &r.weight)?;
    }
    Ok(d)
}

/// A standalone copy of a path-shaped component and the highest weight with
/// the given shifted pairings.
fn standalone(kind: ComponentKind, p: &[Q]) -> Option<(Algebra, Weight)> {
    let r = p.len();
    let new = |spec| Algebra::new(spec, FormConvention::default()).ok();
    let (alg, shifted) = match kind {
        ComponentKind::A | ComponentKind::Rank1 => {
            // gl(r+1) with the last coordinate 0
            let alg = new(AlgebraSpec::Gl { m: r + 1, n: 0 })?;
            let mut x = vec![Q::zero(); r + 1];
            for i in (0..r).rev() {
                x[i] = &x[i + 1] + &p[i];
            }
            (alg, x)
        }
        ComponentKind::C | ComponentKind::BcSuper => {
            let (alg, y) = (
                new(AlgebraSpec::Osp {
                    m: usize::from(kind == ComponentKind::BcSuper),
                    n: r,
                })?,
                sp_coordinates(kind, p),
            );
            (alg, y)
        }
        ComponentKind::B => (
            new(AlgebraSpec::Osp { m: 2 * r + 1, n: 0 })?,
            b_coordinates(p),
        ),
        _ => return None,
    };
    let lam = &Weight(shifted) - &alg.rho(alg.default_base());
    Some((alg, lam))
}

fn sp_coordinates(kind: ComponentKind, p: &[Q]) -> Vec<Q> {
    let n = p.len();
    let mut y = vec![Q::zero(); n];
    y[n - 1] = if kind == ComponentKind::BcSuper {
        &p[n - 1] / q(2, 1)
    } else {
        p[n - 1].clone()
    };
    for i in (0..n - 1).rev() {
        y[i] = &y[i + 1] + &p[i];
    }
    y
}

fn b_coordinates(p: &[Q]) -> Vec<Q> {
    let r = p.len();
    let mut x = vec![Q::zero(); r];
    x[r - 1] = &p[r - 1] / q(2, 1);
    for i in (0..r - 1).rev() {
        x[i] = &x[i + 1] + &p[i];
    }
    x
}

/// Probe depths ending at `depth`.
pub fn probe_schedule(depth: usize) -> Result<Vec<usize>> {
    match depth {
        0..=2 => Err(Error::InvalidParameter(format!(
            "oracle-backed components need depth ≥ 3, got {depth}"
        ))),
        3 | 4 => Ok(vec![depth - 2, depth - 1, depth]),
        _ => Ok(vec![depth - 4, depth - 2, depth]),
    }
}

/// Verdict for one component given `λ^𝔱`, the highest weight with respect to
/// the component's host base.
pub fn component_verdict(
    alg: &Algebra,
    comp: &NiComponent,
    lam_t: &Weight,
    depth: usize,
) -> Result<ComponentVerdict> {
    alg.check_dim(lam_t)?;
    let simples = chain(alg, comp);
    let p: Vec<Q> = simples
        .iter()
        .map(|a| shifted_pairing(alg, lam_t, a))
        .collect::<Result<_>>()?;
    let r = p.len();
    let all_pos = p.iter().all(pos_int);
    let dominance = || {
        if all_pos {
            (
                ComponentStatus::FiniteDim,
                format!("(λ+ρ, α^∨) = ({}) all in Z>0", list(&p)),
            )
        } else {
            (
                ComponentStatus::Unbounded,
                format!(
                    "(λ+ρ, α^∨) = ({}) not all in Z>0; only finite-dimensional modules are bounded",
                    list(&p)
                ),
            )
        }
    };
    let (status, witness) = match comp.kind {
        ComponentKind::Rank1 => {
            let finite = if simples[0].is_odd() {
                pos_int(&p[0]) && !(&p[0] / q(2, 1)).is_integer()
            } else {
                pos_int(&p[0])
            };
            let status = if finite {
                ComponentStatus::FiniteDim
            } else {
                ComponentStatus::BoundedInfinite
            };
            (
                status,
                format!(
                    "(λ+ρ, α^∨) = {}; rank one, every module in O is bounded",
                    format_rational(&p[0])
                ),
            )
        }
        ComponentKind::C => sp_family(SpFamily::Sp, r, &sp_coordinates(comp.kind, &p))?,
        ComponentKind::BcSuper => sp_family(SpFamily::Osp1, r, &sp_coordinates(comp.kind, &p))?,
        ComponentKind::B if r == 2 => o5_rule(&b_coordinates(&p)),
        ComponentKind::B | ComponentKind::D | ComponentKind::G2 => dominance(),
        ComponentKind::A => {
            let (sub, lam) = standalone(comp.kind, &p).expect("gl realization");
            let schedule = probe_schedule(depth)?;
            let report = oracle::boundedness_probe(&sub, sub.default_base(), &lam, &schedule)?;
            let status = match report.status {
                ProbeStatus::OracleBounded if all_pos => ComponentStatus::FiniteDim,
                ProbeStatus::OracleBounded => ComponentStatus::OracleBounded,
                ProbeStatus::OracleUnboundedEvidence => ComponentStatus::OracleUnboundedEvidence,
                ProbeStatus::Unknown => ComponentStatus::Unknown,
            };
            let maxes: Vec<String> = report.max_mult.iter().map(|m| m.to_string()).collect();
            let depths: Vec<String> = report.depths.iter().map(|d| d.to_string()).collect();
            (
                status,
                format!(
                    "(λ+ρ, α^∨) = ({}); {} probe max multiplicity ({}) at depths ({})",
                    list(&p),
                    sub.spec(),
                    maxes.join(", "),
                    depths.join(", ")
                ),
            )
        }
    };
    Ok(ComponentVerdict {
        component: ComponentInfo::new(alg, comp),
        status,
        witness,
        transported_weight: restrict(lam_t, comp),
        pairings: Weight(p),
    })
}

/// `(λ + ρ, β) ≠ 0` for every isotropic root `β`.
pub fn is_strongly_typical(alg: &Algebra, base: &Base, lam: &Weight) -> Result<bool> {
    let lr = lam + &alg.rho(base);
    for r in alg.roots().iter().filter(|r| r.isotropic) {
        if alg.form(&lr, &r.weight)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn combine(statuses: impl IntoIterator<Item = ComponentStatus>) -> Bounded {
    let mut out = Bounded::Yes;
    for s in statuses {
        if s == ComponentStatus::Unbounded {
            return Bounded::No;
        }
        if !s.is_bounded() {
            out = Bounded::Unknown;
        }
    }
    out
}

fn decided_by(alg: &Algebra, components: &[NiComponent]) -> DecidedBy {
    if components.iter().all(|c| c.rank() == 1) {
        return DecidedBy::Cor1I;
    }
    match alg.family() {
        Family::Osp => {
            let (m, n) = alg.mn();
            if (2..=4).contains(&m)
                || n == 1
                || components.iter().filter(|c| c.rank() > 1).count() == 1
            {
                DecidedBy::Cor1Iii
            } else {
                DecidedBy::ThmBound
            }
        }
        _ => DecidedBy::Cor1Ii,
    }
}

fn component_verdicts(
    alg: &Algebra,
    base: &Base,
    lam: &Weight,
    depth: usize,
) -> Result<(Vec<NiComponent>, Vec<ComponentVerdict>)> {
    let comps = pi_ni(alg).components;
    let mut out = Vec::new();
    for c in &comps {
        let lam_t = transport_weight(alg, lam, base, &c.host_base)?;
        out.push(component_verdict(alg, c, &lam_t, depth)?);
    }
    Ok((comps, out))
}

/// Decides whether `L(base, λ)` is bounded.
pub fn classify(alg: &Algebra, base: &Base, lam: &Weight, depth: usize) -> Result<Verdict> {
    alg.check_dim(lam)?;
    if !alg.is_valid_base(base) {
        return Err(Error::InvalidBase(alg.fmt_base(base)));
    }
    let (comps, verdicts) = component_verdicts(alg, base, lam, depth)?;
    let decided = decided_by(alg, &comps);
    // under the corollaries only components of rank > 1 can fail
    let bounded = if decided == DecidedBy::Cor1I {
        Bounded::Yes
    } else {
        combine(verdicts.iter().map(|v| v.status))
    };
    let mut v = Verdict {
        schema: crate::SCHEMA.into(),
        algebra: alg.spec().to_string(),
        lam: lam.clone(),
        bounded,
        decided_by: decided,
        components: verdicts,
        strongly_typical: is_strongly_typical(alg, base, lam)?,
        degree_bound: None,
    };
    if bounded == Bounded::Yes {
        v.degree_bound = bound_from(alg, base, &comps, &v, depth);
    }
    Ok(v)
}

/// One row of a classifier-versus-oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GridRow {
    pub lam: Weight,
    pub bounded: Bounded,
    pub probe: oracle::ProbeReport,
    pub agree: bool,
}

/// A bounded verdict must come with stable multiplicities and an unbounded
/// one with strictly increasing multiplicities; anything else disagrees.
pub fn agrees_with_probe(bounded: Bounded, probe: ProbeStatus) -> bool {
    matches!(
        (bounded, probe),
        (Bounded::Yes, ProbeStatus::OracleBounded)
            | (Bounded::No, ProbeStatus::OracleUnboundedEvidence)
    )
}

/// Classifies `L(base, λ)` and probes it at `depths`.
pub fn validate_point(
    alg: &Algebra,
    base: &Base,
    lam: &Weight,
    depths: &[usize],
) -> Result<GridRow> {
    let depth = *depths
        .last()
        .ok_or_else(|| Error::InvalidParameter("empty probe schedule".into()))?;
    let verdict = classify(alg, base, lam, depth)?;
    let probe = oracle::boundedness_probe(alg, base, lam, depths)?;
    Ok(GridRow {
        lam: lam.clone(),
        bounded: verdict.bounded,
        agree: agrees_with_probe(verdict.bounded, probe.status),
        probe,
    })
}

/// Classifies `L(λ)` over `osp(m|2n)`, `n > 2`, on the base `Σ_{o_m}` by
/// reducing to `sp(2n)` and the subalgebra `osp(m|4)` on the last simple
/// roots.
pub fn classify_via_thms2(alg: &Algebra, lam: &Weight, depth: usize) -> Result<Verdict> {
    alg.check_dim(lam)?;
    let (m, n) = alg.mn();
    if alg.family() != Family::Osp || n <= 2 {
        return Err(Error::InvalidParameter(format!(
            "the n=2 reduction needs osp(m|2n) with n > 2, got {}",
            alg.spec()
        )));
    }
    let s = alg.layout().eps;
    let base = alg.default_base();
    let rho_sp: Vec<Q> = (0..n).map(|j| Q::from_integer((n - j).into())).collect();
    let y: Vec<Q> = (0..n).map(|j| &lam[s + j] + &rho_sp[j]).collect();
    let (sp_status, sp_witness) = sp_family(SpFamily::Sp, n, &y)?;

    let sub = Algebra::new(AlgebraSpec::Osp { m, n: 2 }, alg.convention())?;
    let mut sub_lam: Vec<Q> = lam.iter().take(s).cloned().collect();
    sub_lam.extend([lam[s + n - 2].clone(), lam[s + n - 1].clone()]);
    let sub_verdict = classify(&sub, sub.default_base(), &Weight(sub_lam), depth)?;

    let mut sp_weight = Weight::zero(alg.dim());
    for j in 0..n {
        sp_weight.0[s + j] = lam[s + j].clone();
    }
    let sp_component = ComponentVerdict {
        component: ComponentInfo {
            name: format!("sp{}", 2 * n),
            kind: ComponentKind::C,
            simples: (1..n)
                .map(|j| format!("δ{j}-δ{}", j + 1))
                .chain([format!("2δ{n}")])
                .collect(),
            host_base: alg.fmt_base(base),
        },
        status: sp_status,
        witness: sp_witness,
        transported_weight: sp_weight,
        pairings: Weight(
            (0..n)
                .map(|j| {
                    if j + 1 < n {
                        &y[j] - &y[j + 1]
                    } else {
                        y[j].clone()
                    }
                })
                .collect(),
        ),
    };
    let bounded = match (sp_status.is_bounded(), sub_verdict.bounded) {
        (false, _) | (_, Bounded::No) => Bounded::No,
        (true, b) => b,
    };
    let strongly_typical = is_strongly_typical(alg, base, lam)?;
    let degree_bound = if bounded == Bounded::Yes {
        degree_bound(alg, base, lam, depth)?
    } else {
        None
    };
    let mut components = vec![sp_component];
    components.extend(sub_verdict.components);
    Ok(Verdict {
        schema: crate::SCHEMA.into(),
        algebra: alg.spec().to_string(),
        lam: lam.clone(),
        bounded,
        decided_by: DecidedBy::Thms2Reduction,
        components,
        strongly_typical,
        degree_bound,
    })
}

/// Degree of one bounded component: `1` in rank one, the Weyl dimension for
/// finite-dimensional Lie components, otherwise the oracle's largest
/// multiplicity up to `depth`.
fn component_degree(
    alg: &Algebra,
    comp: &NiComponent,
    v: &ComponentVerdict,
    lam_t: &Weight,
    depth: usize,
) -> Option<u64> {
    if comp.rank() == 1 {
        return Some(1);
    }
    if v.status == ComponentStatus::FiniteDim && comp.kind != ComponentKind::BcSuper {
        let d = weyl_dimension(alg, comp, lam_t).ok()?;
        return d.to_integer().try_into().ok();
    }
    let (sub, lam) = standalone(comp.kind, &v.pairings.0)?;
    let ch = oracle::truncated_character(&sub, sub.default_base(), &lam, depth).ok()?;
    u64::try_from(crate::characters::degree_of(&ch)).ok()
}

fn bound_from(
    alg: &Algebra,
    base: &Base,
    comps: &[NiComponent],
    v: &Verdict,
    depth: usize,
) -> Option<u64> {
    if alg.family() != Family::Osp {
        return None;
    }
    let (m, n) = alg.mn();
    if m == 0 || n == 0 {
        return None;
    }
    let s = alg.layout().eps as u32;
    let is_delta = |c: &NiComponent| {
        c.simples
            .iter()
            .all(|r| r.weight.iter().take(alg.layout().eps).all(|x| x.is_zero()))
    };
    let degree_of = |pick: &dyn Fn(&NiComponent) -> bool| -> Option<u64> {
        let mut d = 1u64;
        for (c, cv) in comps.iter().zip(&v.components).filter(|(c, _)| pick(c)) {
            let lam_t = transport_weight(alg, &v.lam, base, &c.host_base).ok()?;
            d = d.checked_mul(component_degree(alg, c, cv, &lam_t, depth)?)?;
        }
        Some(d)
    };
    let pow = |e: u32| 2u64.checked_pow(e);
    if m == 3 || m == 4 {
        pow(2 * n as u32)?.checked_mul(degree_of(&|c| is_delta(c))?)
    } else if n == 1 {
        pow(2 * m as u32)?.checked_mul(degree_of(&|c| !is_delta(c))?)
    } else if v.strongly_typical {
        pow(2 * s * n as u32)?.checked_mul(degree_of(&|_| true)?)
    } else {
        None
    }
}

/// Upper bound for the degree of a bounded `L(base, λ)` over `osp(m|2n)`
/// when one of the degree theorems applies. Component degrees of bounded
/// infinite-dimensional factors are measured by the oracle up to `depth`.
pub fn degree_bound(alg: &Algebra, base: &Base, lam: &Weight, depth: usize) -> Result<Option<u64>> {
    let v = classify(alg, base, lam, depth)?;
    if v.bounded != Bounded::Yes {
        return Err(Error::NotBounded);
    }
    Ok(v.degree_bound)
}
