//! Truncated formal characters and the strongly typical product formula.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use num::Zero;

use crate::classifier::is_strongly_typical;
use crate::oracle;
use crate::rootdata::{Algebra, AlgebraSpec, Base, Family, Weight};
use crate::{Error, Result, Q};

/// `Σ mult · e^{origin - offset}`, offsets in simple-root coordinates of the
/// base the character was computed for, truncated to height `≤ depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter {
    pub origin: Weight,
    pub depth: usize,
    pub terms: BTreeMap<Vec<i64>, i64>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    offset: Vec<i64>,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    origin: Weight,
    depth: usize,
    terms: Vec<Term>,
}

impl Serialize for FormalCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CharacterJson {
            origin: self.origin.clone(),
            depth: self.depth,
            terms: self
                .terms
                .iter()
                .map(|(o, m)| Term {
                    offset: o.clone(),
                    mult: *m,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FormalCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let c = CharacterJson::deserialize(d)?;
        Ok(FormalCharacter {
            origin: c.origin,
            depth: c.depth,
            terms: c
                .terms
                .into_iter()
                .filter(|t| t.mult != 0)
                .map(|t| (t.offset, t.mult))
                .collect(),
        })
    }
}

pub fn height(offset: &[i64]) -> i64 {
    offset.iter().sum()
}

impl FormalCharacter {
    /// `e^{origin}`.
    pub fn unit(origin: Weight, rank: usize, depth: usize) -> Self {
        FormalCharacter {
            origin,
            depth,
            terms: BTreeMap::from([(vec![0; rank], 1)]),
        }
    }

    pub fn mult(&self, offset: &[i64]) -> i64 {
        self.terms.get(offset).copied().unwrap_or(0)
    }

    /// Keeps only terms of height `≤ depth`.
    pub fn truncate(&self, depth: usize) -> Self {
        FormalCharacter {
            origin: self.origin.clone(),
            depth: depth.min(self.depth),
            terms: self
                .terms
                .iter()
                .filter(|(o, _)| height(o) <= depth as i64)
                .map(|(o, m)| (o.clone(), *m))
                .collect(),
        }
    }

    /// Largest multiplicity among terms of height `≤ depth`.
    pub fn max_mult_up_to(&self, depth: usize) -> i64 {
        self.terms
            .iter()
            .filter(|(o, _)| height(o) <= depth as i64)
            .map(|(_, m)| *m)
            .max()
            .unwrap_or(0)
    }
}

/// Cauchy product truncated to height `≤ depth`.
pub fn char_multiply(
    a: &FormalCharacter,
    b: &FormalCharacter,
    depth: usize,
) -> Result<FormalCharacter> {
    if a.origin.dim() != b.origin.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.origin.dim(),
            got: b.origin.dim(),
            layout: "origin".into(),
        });
    }
    let rank = |c: &FormalCharacter| c.terms.keys().next().map(|o| o.len());
    if let (Some(x), Some(y)) = (rank(a), rank(b)) {
        if x != y {
            return Err(Error::DimensionMismatch {
                expected: x,
                got: y,
                layout: "offset".into(),
            });
        }
    }
    let depth = depth.min(a.depth).min(b.depth);
    let mut terms: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (x, m) in &a.terms {
        if height(x) > depth as i64 {
            continue;
        }
        for (y, k) in &b.terms {
            let o: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            if height(&o) <= depth as i64 {
                *terms.entry(o).or_insert(0) += m * k;
            }
        }
    }
    terms.retain(|_, m| *m != 0);
    Ok(FormalCharacter {
        origin: &a.origin + &b.origin,
        depth,
        terms,
    })
}

/// Largest multiplicity in the truncation window, a lower bound for the
/// degree.
pub fn degree_of(ch: &FormalCharacter) -> i64 {
    ch.max_mult_up_to(ch.depth)
}

/// Rewrites a character of a subalgebra in the ambient base: the `i`-th
/// simple root of the factor has ambient coefficients `embed[i]`; `coords`
/// places factor weight coordinates into ambient ones.
fn embed(
    ch: &FormalCharacter,
    embed: &[Vec<i64>],
    coords: &[usize],
    dim: usize,
    rank: usize,
    depth: usize,
) -> FormalCharacter {
    let mut origin = Weight::zero(dim);
    for (i, &c) in coords.iter().enumerate() {
        origin.0[c] = ch.origin[i].clone();
    }
    let mut terms = BTreeMap::new();
    for (o, m) in &ch.terms {
        let mut t = vec![0i64; rank];
        for (k, row) in o.iter().zip(embed) {
            for (x, r) in t.iter_mut().zip(row) {
                *x += k * r;
            }
        }
        if height(&t) <= depth as i64 {
            terms.insert(t, *m);
        }
    }
    FormalCharacter {
        origin,
        depth,
        terms,
    }
}

fn ambient_offset(alg: &Algebra, base: &Base, w: &Weight) -> Result<Vec<i64>> {
    let c = alg.base_coefficients(base, w).ok_or_else(|| {
        Error::InvalidParameter(format!("{} is not in the root lattice", alg.fmt(w)))
    })?;
    Ok(c.iter()
        .map(|x| x.to_integer().try_into().expect("small coefficient"))
        .collect())
}

/// Character of `L(λ)` over `osp(m|2n)` on the base `Σ_{o_m}` for strongly
/// typical `λ`, as the product of the odd factor
/// `Π_{i,j}(1 + e^{-ε_i-δ_j})(1 + e^{ε_i-δ_j})` with the characters of
/// `L_{osp(p(m)|2n)}(λ_δ - sξ)` and `L_{o_m}(λ_ε)`, shifted by `e^{sξ}`.
pub fn typical_character(
    alg: &Algebra,
    base: &Base,
    lam: &Weight,
    depth: usize,
) -> Result<FormalCharacter> {
    alg.check_dim(lam)?;
    let (m, n) = alg.mn();
    if alg.family() != Family::Osp || m == 0 || n == 0 {
        return Err(Error::Unsupported(format!(
            "the typical product formula is for osp(m|2n) with m, n ≥ 1, not {}",
            alg.spec()
        )));
    }
    if base != alg.default_base() {
        return Err(Error::InvalidBase(format!(
            "the product formula uses Σ_(o_m) = {}",
            alg.fmt_base(alg.default_base())
        )));
    }
    if !is_strongly_typical(alg, base, lam)? {
        return Err(Error::Hypothesis(format!(
            "{} is not strongly typical",
            alg.fmt(lam)
        )));
    }
    let s = alg.layout().eps;
    let lr = lam + &alg.rho(base);
    let delta_roots: Vec<Weight> = alg
        .even_positive_roots()
        .into_iter()
        .map(|r| r.weight)
        .filter(|w| w.iter().take(s).all(|x| x.is_zero()))
        .collect();
    let no_stabiliser = delta_roots.iter().try_fold(true, |acc, w| {
        Ok::<_, Error>(acc && !alg.form(&lr, w)?.is_zero())
    })?;
    let integral_nonzero = (0..n).try_fold(true, |acc, j| {
        let two_delta = Weight::unit(alg.dim(), s + j).scale(&Q::from_integer(2.into()));
        let v = alg.form(&lr, &two_delta)?;
        Ok::<_, Error>(acc && v.is_integer() && !v.is_zero())
    })?;
    if !no_stabiliser && !integral_nonzero {
        return Err(Error::Hypothesis(format!(
            "λ+ρ = {} is orthogonal to an even root of sp(2n) and some (λ+ρ, 2δ_i) is not a nonzero integer",
            alg.fmt(&lr)
        )));
    }

    let rank = base.rank();
    let dim = alg.dim();
    let conv = alg.convention();
    let mut total = FormalCharacter::unit(lam.clone(), rank, depth);
    // odd factor over the positive isotropic roots
    let mut odd = FormalCharacter::unit(Weight::zero(dim), rank, depth);
    for r in alg.positive_roots(base).into_iter().filter(|r| r.isotropic) {
        let o = ambient_offset(alg, base, &r.weight)?;
        let mut f = FormalCharacter::unit(Weight::zero(dim), rank, depth);
        if height(&o) <= depth as i64 {
            f.terms.insert(o, 1);
        }
        odd = char_multiply(&odd, &f, depth)?;
    }
    total = char_multiply(
        &FormalCharacter {
            origin: Weight::zero(dim),
            ..total.clone()
        },
        &odd,
        depth,
    )?;
    total.origin = Weight::zero(dim);

    // L_{osp(p(m)|2n)}(λ_δ - sξ)
    let delta = Algebra::new(AlgebraSpec::Osp { m: m % 2, n }, conv)?;
    let xi = alg.xi();
    let shift = xi.scale(&Q::from_integer((s as i64).into()));
    let lam_delta = Weight((0..n).map(|j| &lam[s + j] - &shift[s + j]).collect());
    let ch_delta = oracle::truncated_character(&delta, delta.default_base(), &lam_delta, depth)?;
    let lift = |sub: &Algebra, coords: &[usize]| -> Result<Vec<Vec<i64>>> {
        sub.default_base()
            .simples
            .iter()
            .map(|r| {
                let mut w = Weight::zero(dim);
                for (i, &c) in coords.iter().enumerate() {
                    w.0[c] = r.weight[i].clone();
                }
                ambient_offset(alg, base, &w)
            })
            .collect()
    };
    let delta_coords: Vec<usize> = (s..s + n).collect();
    let mut ch = embed(
        &ch_delta,
        &lift(&delta, &delta_coords)?,
        &delta_coords,
        dim,
        rank,
        depth,
    );
    ch.origin = &ch.origin + &shift;
    total = char_multiply(&total, &ch, depth)?;

    // L_{o_m}(λ_ε); o_1 and o_2 have no roots
    let eps_coords: Vec<usize> = (0..s).collect();
    let lam_eps = Weight(lam.iter().take(s).cloned().collect());
    let ch_eps = if m >= 3 {
        let om = Algebra::new(AlgebraSpec::Osp { m, n: 0 }, conv)?;
        let c = oracle::truncated_character(&om, om.default_base(), &lam_eps, depth)?;
        embed(&c, &lift(&om, &eps_coords)?, &eps_coords, dim, rank, depth)
    } else {
        let mut origin = Weight::zero(dim);
        for i in 0..s {
            origin.0[i] = lam_eps[i].clone();
        }
        FormalCharacter::unit(origin, rank, depth)
    };
    char_multiply(&total, &ch_eps, depth)
}
