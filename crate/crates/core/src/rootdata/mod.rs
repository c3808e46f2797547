//! Root data of the supported Lie superalgebras.
//!
//! Weights are coordinate vectors in the ε/δ basis of `𝔥*`. For `gl(m|n)` the
//! coordinates are `ε_1..ε_m, δ_1..δ_n`; for `osp(m|2n)` they are
//! `ε_1..ε_s, δ_1..δ_n` with `s = ⌊m/2⌋`. The exceptional algebras use the
//! standard coordinates: `ε_1, ε_2, ε_3` for `D(2,1,a)`, `ε_1, ε_2, ε_3, δ` for
//! `F(4)` and `ε_1, ε_2, δ` for `G(3)` (with `ε_3 = -ε_1 - ε_2`).

mod tables;
mod weight;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num::{One, Signed, Zero};
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::{q, Error, Result, Q};

pub use weight::{format_rational, parse_rational, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraSpec {
    Gl {
        m: usize,
        n: usize,
    },
    /// `sl(k)`; uses `gl(k)` coordinates.
    Sl {
        k: usize,
    },
    /// `osp(m|2n)`. `m = 0` is `sp(2n)`, `n = 0` is `o(m)`.
    Osp {
        m: usize,
        n: usize,
    },
    D21a {
        a: Q,
    },
    F4,
    G3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gl,
    Osp,
    D21a,
    F4,
    G3,
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let num = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| Error::Parse(format!("bad integer {s:?} in {text:?}")))
        };
        let caps = |pat: &str| {
            Regex::new(pat)
                .expect("static regex")
                .captures(&t)
                .map(|c| {
                    c.iter()
                        .skip(1)
                        .map(|m| m.map_or("", |m| m.as_str()).to_string())
                        .collect::<Vec<_>>()
                })
        };

        let spec = if let Some(c) = caps(r"^gl\((\d+)\|(\d+)\)$") {
            AlgebraSpec::Gl {
                m: num(&c[0])?,
                n: num(&c[1])?,
            }
        } else if let Some(c) = caps(r"^osp\((\d+)\|(\d+)\)$") {
            let two_n = num(&c[1])?;
            if two_n % 2 != 0 {
                return Err(Error::Parse(format!(
                    "osp(m|2n) needs an even second index: {text:?}"
                )));
            }
            AlgebraSpec::Osp {
                m: num(&c[0])?,
                n: two_n / 2,
            }
        } else if let Some(c) = caps(r"^sp\((\d+)\)$") {
            let two_n = num(&c[0])?;
            if two_n % 2 != 0 {
                return Err(Error::Parse(format!(
                    "sp(2n) needs an even index: {text:?}"
                )));
            }
            AlgebraSpec::Osp { m: 0, n: two_n / 2 }
        } else if let Some(c) = caps(r"^(?:o|so)\((\d+)\)$") {
            AlgebraSpec::Osp {
                m: num(&c[0])?,
                n: 0,
            }
        } else if let Some(c) = caps(r"^sl\((\d+)\)$") {
            AlgebraSpec::Sl { k: num(&c[0])? }
        } else if let Some(c) = caps(r"^D\(2,1,(?:a=)?([-+0-9/.]+)\)$") {
            AlgebraSpec::D21a {
                a: parse_rational(&c[0])?,
            }
        } else if t == "F(4)" {
            AlgebraSpec::F4
        } else if t == "G(3)" {
            AlgebraSpec::G3
        } else {
            return Err(Error::Parse(format!(
                "unrecognised algebra {text:?}; expected gl(m|n), osp(m|2n), sp(2n), o(m), sl(k), D(2,1,a=p/q), F(4) or G(3)"
            )));
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let bad = |s: String| Err(Error::InvalidParameter(s));
        match self {
            AlgebraSpec::Gl { m, n } if m + n < 2 => bad(format!("gl({m}|{n}) needs m + n ≥ 2")),
            AlgebraSpec::Sl { k } if *k < 2 => bad(format!("sl({k}) needs k ≥ 2")),
            AlgebraSpec::Osp { m, n: 0 } if *m < 3 => {
                bad(format!("o({m}) has no roots; need m ≥ 3"))
            }
            AlgebraSpec::Osp { n, .. } if *n == 0 => Ok(()),
            AlgebraSpec::D21a { a } if a.is_zero() || *a == -Q::one() => bad(format!(
                "D(2,1,a) needs a ∉ {{0, -1}}, got {}",
                format_rational(a)
            )),
            _ => Ok(()),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            AlgebraSpec::Gl { .. } | AlgebraSpec::Sl { .. } => Family::Gl,
            AlgebraSpec::Osp { .. } => Family::Osp,
            AlgebraSpec::D21a { .. } => Family::D21a,
            AlgebraSpec::F4 => Family::F4,
            AlgebraSpec::G3 => Family::G3,
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Gl { m, n } => write!(f, "gl({m}|{n})"),
            AlgebraSpec::Sl { k } => write!(f, "sl({k})"),
            AlgebraSpec::Osp { m: 0, n } => write!(f, "sp({})", 2 * n),
            AlgebraSpec::Osp { m, n: 0 } => write!(f, "o({m})"),
            AlgebraSpec::Osp { m, n } => write!(f, "osp({m}|{})", 2 * n),
            AlgebraSpec::D21a { a } => write!(f, "D(2,1,a={})", format_rational(a)),
            AlgebraSpec::F4 => write!(f, "F(4)"),
            AlgebraSpec::G3 => write!(f, "G(3)"),
        }
    }
}

/// Sign of the ambient invariant form on the δ-block.
///
/// With `delta_sign = -1` (the default) `(ε_i, ε_j) = δ_ij` and
/// `(δ_i, δ_j) = -δ_ij`. With `+1` the whole form is negated, which is the
/// other invariant normalisation in use. Coroot pairings, and hence every
/// boundedness criterion, are the same in both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormConvention {
    pub delta_sign: i8,
}

impl Default for FormConvention {
    fn default() -> Self {
        FormConvention { delta_sign: -1 }
    }
}

impl FormConvention {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "paper" | "default" | "-1" => Ok(FormConvention { delta_sign: -1 }),
            "negated" | "+1" | "1" => Ok(FormConvention { delta_sign: 1 }),
            _ => Err(Error::Parse(format!(
                "unknown form convention {s:?} (use paper|negated)"
            ))),
        }
    }
}

impl fmt::Display for FormConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.delta_sign < 0 {
            "paper"
        } else {
            "negated"
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub weight: Weight,
    pub parity: Parity,
    pub isotropic: bool,
}

impl Root {
    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    pub fn neg(&self) -> Root {
        Root {
            weight: -&self.weight,
            ..self.clone()
        }
    }
}

/// Coordinate names and block sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub eps: usize,
    pub delta: usize,
    pub names: Vec<String>,
}

impl Layout {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    fn eps_delta(eps: usize, delta: usize) -> Self {
        let mut names: Vec<String> = (1..=eps).map(|i| format!("ε{i}")).collect();
        names.extend((1..=delta).map(|j| format!("δ{j}")));
        Layout { eps, delta, names }
    }

    pub fn describe(&self) -> String {
        format!("s={}, n={}", self.eps, self.delta)
    }

    /// Formats a weight as a combination of basis vectors, positive terms
    /// first: `δ1-δ2`, `2δ2`, `δ2-ε1`, `1/2δ-1/2ε1`.
    pub fn format(&self, w: &Weight) -> String {
        let mut out = String::new();
        let terms = w.iter().zip(&self.names).filter(|(c, _)| !c.is_zero());
        let (pos, neg): (Vec<_>, Vec<_>) = terms.partition(|(c, _)| c.is_positive());
        for (c, name) in pos.into_iter().chain(neg) {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&format_rational(&a));
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses a weight. Accepts `x1,..,xs|y1,..,yn`, or a flat list when one
    /// block is empty or the split is unambiguous.
    pub fn parse_weight(&self, text: &str) -> Result<Weight> {
        let text = text.trim();
        let list = |s: &str| -> Result<Vec<Q>> {
            if s.trim().is_empty() {
                return Ok(Vec::new());
            }
            s.split(',').map(parse_rational).collect()
        };
        let coords = match text.split_once('|') {
            Some((a, b)) => {
                let (xs, ys) = (list(a)?, list(b)?);
                if xs.len() != self.eps || ys.len() != self.delta {
                    return Err(self.mismatch(xs.len() + ys.len()));
                }
                [xs, ys].concat()
            }
            None => list(text)?,
        };
        if coords.len() != self.dim() {
            return Err(self.mismatch(coords.len()));
        }
        Ok(Weight(coords))
    }

    /// Parses a combination written as by [`Layout::format`], e.g. `δ2-ε1`,
    /// `2δ2`, `1/2δ-1/2ε1`. ASCII `e` and `d` stand for `ε` and `δ`.
    pub fn parse_combination(&self, text: &str) -> Result<Weight> {
        let t: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .replace('e', "ε")
            .replace('d', "δ");
        let bad = || {
            Error::Parse(format!(
                "cannot read {text:?} as a combination of {}",
                self.names.join(", ")
            ))
        };
        let mut w = Weight::zero(self.dim());
        let mut rest = t.as_str();
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.chars().next() {
                Some('-') => (-1, &rest[1..]),
                Some('+') => (1, &rest[1..]),
                _ => (1, rest),
            };
            let coef_len = body
                .find(|c: char| !(c.is_ascii_digit() || c == '/'))
                .ok_or_else(bad)?;
            let coef = if coef_len == 0 {
                Q::one()
            } else {
                parse_rational(&body[..coef_len])?
            };
            let after = &body[coef_len..];
            // longest name first so that `δ1` wins over `δ`
            let (i, name) = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| after.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len())
                .ok_or_else(bad)?;
            w.0[i] += coef * Q::from_integer(sign.into());
            rest = &after[name.len()..];
        }
        Ok(w)
    }

    pub fn mismatch(&self, got: usize) -> Error {
        Error::DimensionMismatch {
            expected: self.dim(),
            got,
            layout: self.describe(),
        }
    }
}

/// An ordered set of simple roots. Stored in canonical (sorted) order so that
/// bases compare and hash by their root sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base {
    pub simples: Vec<Root>,
}

impl Base {
    pub fn new(mut simples: Vec<Root>) -> Self {
        simples.sort();
        Base { simples }
    }

    pub fn isotropic_count(&self) -> usize {
        self.simples.iter().filter(|r| r.isotropic).count()
    }

    pub fn is_distinguished(&self) -> bool {
        self.isotropic_count() <= 1
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.simples.iter().any(|r| &r.weight == w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoVectors {
    pub rho: Weight,
    pub rho0: Weight,
    pub rho1: Weight,
    pub xi: Weight,
}

/// A word in the Weyl group, listed in the order the reflections are applied.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylWord(pub Vec<Root>);

impl WeylWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Immutable root datum of one superalgebra.
#[derive(Clone, Debug)]
pub struct Algebra {
    spec: AlgebraSpec,
    convention: FormConvention,
    layout: Layout,
    gram: Vec<Vec<Q>>,
    roots: Vec<Root>,
    even_simples: Vec<Root>,
    default_base: Base,
    graph: OnceLock<crate::basegraph::BaseGraph>,
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    Algebra::new(AlgebraSpec::parse(text)?, FormConvention::default())
}

impl Algebra {
    pub fn new(spec: AlgebraSpec, convention: FormConvention) -> Result<Self> {
        spec.validate()?;
        let t = tables::build(&spec, convention);
        let mut alg = Algebra {
            spec,
            convention,
            layout: t.layout,
            gram: t.gram,
            roots: Vec::new(),
            even_simples: Vec::new(),
            default_base: Base::new(Vec::new()),
            graph: OnceLock::new(),
        };
        let mk = |alg: &Algebra, w: Weight, parity: Parity| {
            let isotropic = alg.form_unchecked(&w, &w).is_zero();
            Root {
                weight: w,
                parity,
                isotropic,
            }
        };
        alg.roots = t.roots.into_iter().map(|(w, p)| mk(&alg, w, p)).collect();
        alg.roots.sort();
        alg.even_simples = t
            .even_simples
            .into_iter()
            .map(|w| mk(&alg, w, Parity::Even))
            .collect();
        let simples = t
            .default_base
            .into_iter()
            .map(|w| {
                alg.root(&w)
                    .cloned()
                    .ok_or_else(|| Error::InvalidBase(alg.layout.format(&w)))
            })
            .collect::<Result<Vec<_>>>()?;
        alg.default_base = Base::new(simples);
        Ok(alg)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family()
    }

    pub fn convention(&self) -> FormConvention {
        self.convention
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.layout.dim()
    }

    /// `(m, n)` for `osp(m|2n)` and `gl(m|n)`.
    pub fn mn(&self) -> (usize, usize) {
        match self.spec {
            AlgebraSpec::Gl { m, n } | AlgebraSpec::Osp { m, n } => (m, n),
            AlgebraSpec::Sl { k } => (k, 0),
            _ => (0, 0),
        }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn even_simples(&self) -> &[Root] {
        &self.even_simples
    }

    pub fn default_base(&self) -> &Base {
        &self.default_base
    }

    /// The odd-reflection graph of bases, built on first use.
    pub fn base_graph(&self) -> &crate::basegraph::BaseGraph {
        self.graph
            .get_or_init(|| crate::basegraph::build_graph(self))
    }

    pub fn root(&self, w: &Weight) -> Option<&Root> {
        self.roots.iter().find(|r| &r.weight == w)
    }

    pub fn fmt(&self, w: &Weight) -> String {
        self.layout.format(w)
    }

    pub fn fmt_base(&self, base: &Base) -> String {
        let parts: Vec<String> = crate::basegraph::display_order(self, &base.simples)
            .iter()
            .map(|r| self.fmt(&r.weight))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn parse_weight(&self, text: &str) -> Result<Weight> {
        self.layout.parse_weight(text)
    }

    /// Parses a base written as a root list, `{δ1-δ2, δ2-ε1, ε1-ε2, ε2}`.
    pub fn parse_base(&self, text: &str) -> Result<Base> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let simples = inner
            .split(',')
            .map(|part| {
                let w = self.layout.parse_combination(part)?;
                self.root(&w).cloned().ok_or_else(|| {
                    Error::Parse(format!("{} is not a root of {}", self.fmt(&w), self.spec))
                })
            })
            .collect::<Result<Vec<Root>>>()?;
        let base = Base::new(simples);
        if self.is_valid_base(&base) {
            Ok(base)
        } else {
            Err(Error::InvalidBase(self.fmt_base(&base)))
        }
    }

    pub fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.dim() == self.dim() {
            Ok(())
        } else {
            Err(self.layout.mismatch(w.dim()))
        }
    }

    fn form_unchecked(&self, v: &Weight, w: &Weight) -> Q {
        let mut s = Q::zero();
        for (i, row) in self.gram.iter().enumerate() {
            if v[i].is_zero() {
                continue;
            }
            for (j, g) in row.iter().enumerate() {
                if !g.is_zero() && !w[j].is_zero() {
                    s += &v[i] * g * &w[j];
                }
            }
        }
        s
    }

    /// The invariant bilinear form.
    pub fn form(&self, v: &Weight, w: &Weight) -> Result<Q> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        Ok(self.form_unchecked(v, w))
    }

    /// `(λ, α∨) = 2(λ, α)/(α, α)`.
    pub fn coroot_pair(&self, lam: &Weight, alpha: &Weight) -> Result<Q> {
        self.check_dim(lam)?;
        let norm = self.form(alpha, alpha)?;
        if norm.is_zero() {
            return Err(Error::IsotropicRoot(self.fmt(alpha)));
        }
        Ok(q(2, 1) * self.form_unchecked(lam, alpha) / norm)
    }

    /// `r_α(μ) = μ - (μ, α∨) α`.
    pub fn reflect(&self, mu: &Weight, alpha: &Weight) -> Result<Weight> {
        let c = self.coroot_pair(mu, alpha)?;
        Ok(mu - &alpha.scale(&c))
    }

    /// Coefficients of `v` in the simple roots of `base`, if `v` lies in their
    /// span.
    pub fn base_coefficients(&self, base: &Base, v: &Weight) -> Option<Vec<Q>> {
        let cols: Vec<Vec<Q>> = base.simples.iter().map(|r| r.weight.0.clone()).collect();
        let x = linalg::coordinates_in(&cols, &v.0)?;
        // verify (solve zeroes free variables, but independent simples have none)
        let mut back = Weight::zero(self.dim());
        for (c, r) in x.iter().zip(&base.simples) {
            back += &r.weight.scale(c);
        }
        (back == *v).then_some(x)
    }

    /// `Σ offset_i α_i` over the simple roots of `base`.
    pub fn offset_weight(&self, base: &Base, offset: &[i64]) -> Weight {
        let mut w = Weight::zero(self.dim());
        for (c, r) in offset.iter().zip(&base.simples) {
            w += &r.weight.scale(&Q::from_integer((*c).into()));
        }
        w
    }

    fn is_positive_in(coeffs: &[Q]) -> bool {
        coeffs.iter().all(|c| !c.is_negative()) && coeffs.iter().any(|c| !c.is_zero())
    }

    /// Positive roots with respect to `base`.
    pub fn positive_roots(&self, base: &Base) -> Vec<Root> {
        self.roots
            .iter()
            .filter(|r| {
                self.base_coefficients(base, &r.weight)
                    .is_some_and(|c| Self::is_positive_in(&c))
            })
            .cloned()
            .collect()
    }

    /// Even positive roots fixed by `Π₀`.
    pub fn even_positive_roots(&self) -> Vec<Root> {
        let pi0 = Base::new(self.even_simples.clone());
        self.roots
            .iter()
            .filter(|r| !r.is_odd())
            .filter(|r| {
                self.base_coefficients(&pi0, &r.weight)
                    .is_some_and(|c| Self::is_positive_in(&c))
            })
            .cloned()
            .collect()
    }

    /// Checks that `base` is a base of the root system compatible with `Π₀`:
    /// simples are linearly independent roots, every root is an integral
    /// combination with coefficients of one sign, and the even positive roots
    /// agree with those of `Π₀`.
    pub fn is_valid_base(&self, base: &Base) -> bool {
        if base.simples.iter().any(|r| self.root(&r.weight).is_none()) {
            return false;
        }
        let rows: Vec<Vec<Q>> = base.simples.iter().map(|r| r.weight.0.clone()).collect();
        if linalg::rank(rows) != base.rank() {
            return false;
        }
        let mut positives = BTreeSet::new();
        for r in &self.roots {
            let Some(c) = self.base_coefficients(base, &r.weight) else {
                return false;
            };
            if !c.iter().all(|x| x.is_integer()) {
                return false;
            }
            let pos = c.iter().all(|x| !x.is_negative());
            let neg = c.iter().all(|x| !x.is_positive());
            if !pos && !neg {
                return false;
            }
            if pos && !r.is_odd() {
                positives.insert(r.weight.clone());
            }
        }
        let even: BTreeSet<Weight> = self
            .even_positive_roots()
            .into_iter()
            .map(|r| r.weight)
            .collect();
        positives == even
    }

    /// `ρ = ρ₀ - ρ₁` for `base`, together with `ρ₀`, `ρ₁` and `ξ = Σ δ_i`.
    pub fn rho_vectors(&self, base: &Base) -> RhoVectors {
        let half = q(1, 2);
        let mut rho0 = Weight::zero(self.dim());
        let mut rho1 = Weight::zero(self.dim());
        for r in self.positive_roots(base) {
            if r.is_odd() {
                rho1 += &r.weight;
            } else {
                rho0 += &r.weight;
            }
        }
        let rho0 = rho0.scale(&half);
        let rho1 = rho1.scale(&half);
        RhoVectors {
            rho: &rho0 - &rho1,
            rho0,
            rho1,
            xi: self.xi(),
        }
    }

    pub fn rho(&self, base: &Base) -> Weight {
        self.rho_vectors(base).rho
    }

    /// `ξ = Σ δ_i` (zero when there is no δ-block).
    pub fn xi(&self) -> Weight {
        let mut xi = Weight::zero(self.dim());
        if matches!(self.family(), Family::Osp | Family::Gl) {
            for j in 0..self.layout.delta {
                xi.0[self.layout.eps + j] = Q::one();
            }
        }
        xi
    }

    /// `Δ(λ) = {α ∈ Δ₀ | (λ, α∨) ∈ Z}`.
    pub fn integral_subsystem(&self, lam: &Weight) -> Result<Vec<Root>> {
        self.check_dim(lam)?;
        let mut out = Vec::new();
        for r in self.roots.iter().filter(|r| !r.is_odd()) {
            if self.coroot_pair(lam, &r.weight)?.is_integer() {
                out.push(r.clone());
            }
        }
        Ok(out)
    }

    /// Simple system of a root subsystem: the roots `β ∈ (Δ')⁺` whose
    /// reflection permutes `(Δ')⁺ ∖ {β}`.
    pub fn simple_system(&self, subsys: &[Root], positives: &[Root]) -> Vec<Root> {
        let pos: HashSet<&Weight> = positives.iter().map(|r| &r.weight).collect();
        let sub_pos: Vec<&Root> = subsys.iter().filter(|r| pos.contains(&r.weight)).collect();
        let set: HashSet<&Weight> = sub_pos.iter().map(|r| &r.weight).collect();
        let mut out: Vec<Root> = sub_pos
            .iter()
            .filter(|beta| {
                !beta.isotropic
                    && sub_pos.iter().filter(|g| g.weight != beta.weight).all(|g| {
                        self.reflect(&g.weight, &beta.weight)
                            .map(|w| w != beta.weight && set.contains(&w))
                            .unwrap_or(false)
                    })
            })
            .map(|r| (*r).clone())
            .collect();
        out.sort();
        out
    }

    /// Positive roots `{δ_i ± δ_j, δ_i}` of `B_n` in the δ-block.
    fn bn_positive(&self) -> Vec<Weight> {
        let (e, n) = (self.layout.eps, self.layout.delta);
        let d = |j: usize| Weight::unit(self.dim(), e + j);
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(&d(i) - &d(j));
                out.push(&d(i) + &d(j));
            }
            out.push(d(i));
        }
        out
    }

    /// `μ ∈ 𝒞⁺`: `(μ, α∨) ∉ Z_{<0}` for the positive roots of `B_n`.
    pub fn in_chamber(&self, mu: &Weight) -> Result<bool> {
        for a in self.bn_positive() {
            let c = self.coroot_pair(mu, &a)?;
            if c.is_integer() && c.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Maps `μ` into `𝒞⁺` by an element of `W(Δ(μ-ρ)) ∩ W(sp_2n)`.
    ///
    /// Breadth-first over the orbit, generated by the simple reflections of
    /// `Δ(μ-ρ) ∩ Δ(sp_2n)`, tried in the order `r_{δ1-δ2}, …, r_{δn}` first and
    /// then the remaining simple roots of the subsystem. The first orbit point
    /// in `𝒞⁺` wins, so the word is reduced. Such a point need not exist (e.g.
    /// `osp(1|2)`, `μ = -δ`), which is reported as [`Error::Hypothesis`].
    pub fn dominant_representative(&self, mu: &Weight) -> Result<(WeylWord, Weight)> {
        self.check_dim(mu)?;
        if self.family() != Family::Osp {
            return Err(Error::Unsupported(format!(
                "𝒞⁺ is defined for osp(m|2n), not {}",
                self.spec
            )));
        }
        let lam = mu - &self.rho(&self.default_base);
        let (e, n) = (self.layout.eps, self.layout.delta);
        let in_sp = |w: &Weight| (0..e).all(|i| w[i].is_zero());
        let sub: Vec<Root> = self
            .integral_subsystem(&lam)?
            .into_iter()
            .filter(|r| in_sp(&r.weight))
            .collect();
        let simple = self.simple_system(&sub, &self.even_positive_roots());
        let d = |j: usize| Weight::unit(self.dim(), e + j);
        let mut fixed: Vec<Weight> = (0..n.saturating_sub(1))
            .map(|j| &d(j) - &d(j + 1))
            .collect();
        if n > 0 {
            fixed.push(d(n - 1).scale(&q(2, 1)));
        }
        let mut gens: Vec<Weight> = fixed
            .iter()
            .filter(|w| simple.iter().any(|r| &r.weight == *w))
            .cloned()
            .collect();
        gens.extend(
            simple
                .iter()
                .map(|r| r.weight.clone())
                .filter(|w| !fixed.contains(w)),
        );

        let mut seen = HashSet::from([mu.clone()]);
        let mut queue = VecDeque::from([(mu.clone(), Vec::<Weight>::new())]);
        while let Some((p, word)) = queue.pop_front() {
            if self.in_chamber(&p)? {
                let word = word
                    .iter()
                    .map(|w| self.root(w).cloned().expect("generator is a root"))
                    .collect();
                return Ok((WeylWord(word), p));
            }
            for g in &gens {
                let next = self.reflect(&p, g)?;
                if seen.insert(next.clone()) {
                    let mut w = word.clone();
                    w.push(g.clone());
                    queue.push_back((next, w));
                }
            }
        }
        Err(Error::Hypothesis(format!(
            "no element of W(λ) ∩ W(sp) maps {} into 𝒞⁺",
            self.fmt(mu)
        )))
    }
}

#[cfg(test)]
mod tests;
