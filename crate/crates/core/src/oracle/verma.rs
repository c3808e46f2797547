//! Verma modules over PBW monomials and their simple quotients.
//!
//! A vector of `M(λ)` is a sparse combination of PBW monomials
//! `f_{β_1} ⋯ f_{β_k} v_λ` with `β_1 ≤ … ≤ β_k` in a fixed order on the
//! positive roots of the base and odd roots used at most once. Elements of
//! `𝔤` act by straightening with the structure constants of the realization.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::sync::Arc;

use num::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::realization::{ElementKind, Realization};
use crate::characters::FormalCharacter;
use crate::linalg;
use crate::rootdata::{format_rational, Algebra, Base, Family, Weight};
use crate::{Error, Result, Q};

pub const MAX_M: usize = 7;
pub const MAX_N: usize = 3;
pub const MAX_DEPTH: usize = 12;
/// Refuse jobs whose estimated cost (sum over weight spaces of
/// `dim² · rank`) exceeds this. One unit is roughly a microsecond, so the
/// limit is a couple of minutes.
pub const COST_LIMIT: u64 = 100_000_000;

/// Sorted positions into the PBW order of negative roots.
type Mono = Vec<u8>;

/// `x · m` for a basis element `x` and monomial `m`, straightened.
type Product = Rc<Vec<(Mono, Q)>>;

/// Total order on positive roots used for PBW monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum PbwOrder {
    /// By height, ties by coordinates.
    #[default]
    Standard,
    /// Explicit list of all positive roots of the base.
    Custom(Vec<Weight>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbwMonomial {
    /// `(β, exponent)` for the factors `f_β^exponent`, in PBW order.
    pub factors: Vec<(Weight, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ShapovalovReport {
    pub schema: String,
    pub algebra: String,
    pub lam: Weight,
    pub mu: Weight,
    pub dimension: usize,
    pub rank: usize,
    pub matrix_hash: String,
}

/// Checks the oracle's hard caps and the cost estimate for a job up to
/// `depth`.
pub fn check_caps(alg: &Algebra, base: &Base, depth: usize) -> Result<u64> {
    let (m, n) = alg.mn();
    let refuse = |reason: String, estimate: u64, limit: u64| {
        Err(Error::OracleCap {
            reason,
            estimate,
            limit,
        })
    };
    if !matches!(alg.family(), Family::Gl | Family::Osp) {
        return Err(Error::Unsupported(format!(
            "the oracle realises gl and osp only, not {}",
            alg.spec()
        )));
    }
    if m > MAX_M || n > MAX_N {
        return refuse(
            format!("{} exceeds m ≤ {MAX_M}, n ≤ {MAX_N}", alg.spec()),
            u64::MAX,
            COST_LIMIT,
        );
    }
    if depth > MAX_DEPTH {
        return refuse(
            format!("depth {depth} exceeds {MAX_DEPTH}"),
            u64::MAX,
            COST_LIMIT,
        );
    }
    let est = estimate_cost(alg, base, depth);
    if est > COST_LIMIT {
        return refuse(format!("{} to depth {depth}", alg.spec()), est, COST_LIMIT);
    }
    Ok(est)
}

/// Positive roots of `base` in simple-root coordinates, with parity.
fn positive_coords(alg: &Algebra, base: &Base) -> Vec<(Weight, Vec<i64>, bool)> {
    alg.positive_roots(base)
        .into_iter()
        .map(|r| {
            let c = alg
                .base_coefficients(base, &r.weight)
                .expect("root in span of base");
            let c = c
                .iter()
                .map(|x| x.to_integer().try_into().expect("small coefficient"))
                .collect();
            (r.weight.clone(), c, r.is_odd())
        })
        .collect()
}

/// Dimensions of the Verma weight spaces of height `≤ depth`: coefficients
/// of `Π_{β even}(1 - e^{-β})^{-1} Π_{β odd}(1 + e^{-β})`.
pub fn weight_space_dims(alg: &Algebra, base: &Base, depth: usize) -> BTreeMap<Vec<i64>, u64> {
    let rank = base.rank();
    let mut dims = BTreeMap::from([(vec![0i64; rank], 1u64)]);
    for (_, c, odd) in positive_coords(alg, base) {
        let h: i64 = c.iter().sum();
        let mut next = dims.clone();
        if odd {
            for (o, k) in &dims {
                if crate::characters::height(o) + h <= depth as i64 {
                    let t: Vec<i64> = o.iter().zip(&c).map(|(a, b)| a + b).collect();
                    *next.entry(t).or_insert(0) += k;
                }
            }
        } else {
            // process in increasing height so repeated use of β is counted
            let mut keys: Vec<Vec<i64>> = next.keys().cloned().collect();
            keys.sort_by_key(|o| crate::characters::height(o));
            let mut i = 0;
            while i < keys.len() {
                let o = keys[i].clone();
                i += 1;
                if crate::characters::height(&o) + h > depth as i64 {
                    continue;
                }
                let t: Vec<i64> = o.iter().zip(&c).map(|(a, b)| a + b).collect();
                let k = next[&o];
                let e = next.entry(t.clone()).or_insert(0);
                if *e == 0 {
                    let pos = keys.partition_point(|x| {
                        crate::characters::height(x) <= crate::characters::height(&t)
                    });
                    keys.insert(pos, t);
                }
                *e += k;
            }
        }
        dims = next;
    }
    dims
}

pub fn estimate_cost(alg: &Algebra, base: &Base, depth: usize) -> u64 {
    let r = base.rank() as u64;
    weight_space_dims(alg, base, depth)
        .values()
        .fold(0u64, |acc, &d| {
            acc.saturating_add(d.saturating_mul(d).saturating_mul(r.max(1)))
        })
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    Cartan(usize),
    Pos,
    /// Position in the PBW order.
    Neg(u8),
}

/// `M(λ)` for a fixed base, with memoised action of basis elements.
pub struct Verma {
    real: Arc<Realization>,
    lam: Weight,
    rank: usize,
    kind: Vec<Kind>,
    /// Basis index of the negative root vector at each PBW position.
    neg: Vec<usize>,
    neg_coords: Vec<Vec<i64>>,
    neg_weight: Vec<Weight>,
    neg_odd: Vec<bool>,
    positive: Vec<Weight>,
    simple_elements: Vec<usize>,
    memo: HashMap<(u16, Mono), Product>,
}

impl Verma {
    pub fn new(
        alg: &Algebra,
        real: Arc<Realization>,
        base: &Base,
        lam: &Weight,
        order: &PbwOrder,
    ) -> Result<Self> {
        alg.check_dim(lam)?;
        let mut pos = positive_coords(alg, base);
        match order {
            PbwOrder::Standard => pos.sort_by(|a, b| {
                let (ha, hb): (i64, i64) = (a.1.iter().sum(), b.1.iter().sum());
                (ha, &a.0).cmp(&(hb, &b.0))
            }),
            PbwOrder::Custom(list) => {
                if list.len() != pos.len() || pos.iter().any(|p| !list.contains(&p.0)) {
                    return Err(Error::InvalidParameter(
                        "custom PBW order must list every positive root once".into(),
                    ));
                }
                pos.sort_by_key(|p| list.iter().position(|w| *w == p.0));
            }
        }
        let mut kind: Vec<Kind> = real
            .basis
            .iter()
            .map(|e| match e.kind {
                ElementKind::Cartan(k) => Kind::Cartan(k),
                ElementKind::Root(_) => Kind::Pos,
            })
            .collect();
        let mut neg = Vec::new();
        for (p, (w, _, _)) in pos.iter().enumerate() {
            let i = real.root_element(&-w).expect("negative root vector");
            kind[i] = Kind::Neg(p as u8);
            neg.push(i);
        }
        let simple_elements = base
            .simples
            .iter()
            .map(|s| real.root_element(&s.weight).expect("simple root vector"))
            .collect();
        Ok(Verma {
            lam: lam.clone(),
            rank: base.rank(),
            kind,
            neg,
            neg_coords: pos.iter().map(|p| p.1.clone()).collect(),
            neg_weight: pos.iter().map(|p| -&p.0).collect(),
            neg_odd: pos.iter().map(|p| p.2).collect(),
            positive: pos.into_iter().map(|p| p.0).collect(),
            simple_elements,
            real,
            memo: HashMap::new(),
        })
    }

    pub fn offset(&self, mono: &[u8]) -> Vec<i64> {
        let mut o = vec![0i64; self.rank];
        for &p in mono {
            for (a, b) in o.iter_mut().zip(&self.neg_coords[p as usize]) {
                *a += b;
            }
        }
        o
    }

    /// PBW monomials of every weight `λ - μ` with `μ` accepted by `keep`,
    /// which must be closed under taking smaller offsets.
    fn monomials(&self, keep: &dyn Fn(&[i64]) -> bool) -> BTreeMap<Vec<i64>, Vec<Mono>> {
        let mut out: BTreeMap<Vec<i64>, Vec<Mono>> = BTreeMap::new();
        let mut stack: Vec<(Mono, Vec<i64>)> = vec![(Vec::new(), vec![0; self.rank])];
        while let Some((m, o)) = stack.pop() {
            let start = m.last().map_or(0, |&p| {
                if self.neg_odd[p as usize] {
                    p as usize + 1
                } else {
                    p as usize
                }
            });
            for p in start..self.neg.len() {
                let t: Vec<i64> = o
                    .iter()
                    .zip(&self.neg_coords[p])
                    .map(|(a, b)| a + b)
                    .collect();
                if keep(&t) {
                    let mut mm = m.clone();
                    mm.push(p as u8);
                    stack.push((mm, t));
                }
            }
            out.entry(o).or_default().push(m);
        }
        for v in out.values_mut() {
            v.sort();
        }
        out
    }

    pub fn to_public(&self, mono: &[u8]) -> PbwMonomial {
        let mut factors: Vec<(Weight, u32)> = Vec::new();
        for &p in mono {
            let w = self.positive[p as usize].clone();
            match factors.last_mut() {
                Some((last, k)) if *last == w => *k += 1,
                _ => factors.push((w, 1)),
            }
        }
        PbwMonomial { factors }
    }

    fn both_odd(&self, a: usize, b: usize) -> bool {
        self.real.basis[a].odd && self.real.basis[b].odd
    }

    /// `x_b · (mono v_λ)`.
    fn act(&mut self, b: usize, mono: &[u8]) -> Product {
        let key = (b as u16, mono.to_vec());
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        let mut acc: HashMap<Mono, Q> = HashMap::new();
        match self.kind[b] {
            Kind::Cartan(k) => {
                let mut c = self.lam[k].clone();
                for &p in mono {
                    c += &self.neg_weight[p as usize][k];
                }
                if !c.is_zero() {
                    acc.insert(mono.to_vec(), c);
                }
            }
            Kind::Pos if mono.is_empty() => {}
            Kind::Neg(p)
                if mono
                    .first()
                    .is_none_or(|&f| p < f || (p == f && !self.neg_odd[p as usize])) =>
            {
                let mut m = Vec::with_capacity(mono.len() + 1);
                m.push(p);
                m.extend_from_slice(mono);
                acc.insert(m, Q::one());
            }
            Kind::Neg(p) if p == mono[0] => {
                // f² = ½[f, f] for odd f
                let half = Q::new(1.into(), 2.into());
                let br = self.real.structure[b][b].clone();
                for (c, coef) in br {
                    let v = self.act(c, &mono[1..]);
                    for (m, x) in v.iter() {
                        *acc.entry(m.clone()).or_insert_with(Q::zero) += &half * &coef * x;
                    }
                }
            }
            _ => {
                // x f₁ rest = (-1)^{|x||f₁|} f₁ (x rest) + [x, f₁] rest
                let f1 = self.neg[mono[0] as usize];
                let rest = &mono[1..];
                let sign = if self.both_odd(b, f1) {
                    -Q::one()
                } else {
                    Q::one()
                };
                let inner = self.act(b, rest);
                for (m, x) in inner.iter() {
                    let v = self.act(f1, m);
                    for (mm, y) in v.iter() {
                        *acc.entry(mm.clone()).or_insert_with(Q::zero) += &sign * x * y;
                    }
                }
                let br = self.real.structure[b][f1].clone();
                for (c, coef) in br {
                    let v = self.act(c, rest);
                    for (m, x) in v.iter() {
                        *acc.entry(m.clone()).or_insert_with(Q::zero) += &coef * x;
                    }
                }
            }
        }
        let mut out: Vec<(Mono, Q)> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let out = Rc::new(out);
        self.memo.insert(key, out.clone());
        out
    }

    /// Matrix of `x_b: M_{λ-μ} → M_{λ-μ+β}` in the given monomial bases
    /// (rows indexed by `target`).
    fn action_matrix(
        &mut self,
        b: usize,
        source: &[Mono],
        target: &HashMap<Mono, usize>,
        ntarget: usize,
    ) -> Vec<Vec<Q>> {
        let mut mat = vec![vec![Q::zero(); source.len()]; ntarget];
        for (j, m) in source.iter().enumerate() {
            let v = self.act(b, m);
            for (mm, x) in v.iter() {
                let i = target[mm];
                mat[i][j] += x;
            }
        }
        mat
    }

    /// Multiplicities of `L(λ)` at every offset accepted by `keep`.
    ///
    /// `w ∈ M_{λ-μ}` lies in the maximal submodule iff `e_α w` does for every
    /// simple `α`; so with `Q_ν` a matrix whose kernel is that submodule at
    /// `ν`, `Q_μ` is a row basis of the stacked `Q_{μ-α} E_α`.
    pub fn multiplicities(
        &mut self,
        keep: &dyn Fn(&[i64]) -> bool,
    ) -> BTreeMap<Vec<i64>, (usize, usize)> {
        let monos = self.monomials(keep);
        let mut order: Vec<&Vec<i64>> = monos.keys().collect();
        order.sort_by_key(|o| (crate::characters::height(o), (*o).clone()));
        let mut quotient: HashMap<Vec<i64>, Vec<Vec<Q>>> = HashMap::new();
        let mut out = BTreeMap::new();
        for mu in order {
            let basis = &monos[mu];
            let q_mu = if crate::characters::height(mu) == 0 {
                vec![vec![Q::one()]]
            } else {
                let mut rows: Vec<Vec<Q>> = Vec::new();
                for (i, &e) in self.simple_elements.clone().iter().enumerate() {
                    let mut nu = mu.clone();
                    nu[i] -= 1;
                    let Some(q_nu) = quotient.get(&nu) else {
                        continue;
                    };
                    if q_nu.is_empty() {
                        continue;
                    }
                    let target: HashMap<Mono, usize> = monos[&nu]
                        .iter()
                        .cloned()
                        .enumerate()
                        .map(|(k, m)| (m, k))
                        .collect();
                    let e_mat = self.action_matrix(e, basis, &target, target.len());
                    for row in q_nu {
                        let mut r = vec![Q::zero(); basis.len()];
                        for (k, c) in row.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            for (j, x) in e_mat[k].iter().enumerate() {
                                if !x.is_zero() {
                                    r[j] += c * x;
                                }
                            }
                        }
                        if r.iter().any(|x| !x.is_zero()) {
                            rows.push(r);
                        }
                    }
                }
                let piv = linalg::row_reduce(&mut rows);
                rows.truncate(piv.len());
                rows
            };
            out.insert(mu.clone(), (basis.len(), q_mu.len()));
            quotient.insert(mu.clone(), q_mu);
        }
        out
    }

    /// Gram matrix `⟨f_I v, f_J v⟩ = π_λ(θ(f_I) f_J v)` of the contravariant
    /// form on `M_{λ-μ}`, with `θ: x_β ↔ x_{-β}`.
    pub fn gram(&mut self, mu: &[i64]) -> (Vec<Mono>, Vec<Vec<Q>>) {
        let bound = mu.to_vec();
        let monos = self.monomials(&|o: &[i64]| o.iter().zip(&bound).all(|(a, b)| a <= b));
        let mut order: Vec<&Vec<i64>> = monos.keys().collect();
        order.sort_by_key(|o| crate::characters::height(o));
        let mut grams: HashMap<Vec<i64>, Vec<Vec<Q>>> = HashMap::new();
        let index: HashMap<&Vec<i64>, HashMap<&Mono, usize>> = monos
            .iter()
            .map(|(o, v)| (o, v.iter().enumerate().map(|(i, m)| (m, i)).collect()))
            .collect();
        for nu in order {
            let basis = &monos[nu];
            let g = if crate::characters::height(nu) == 0 {
                vec![vec![Q::one()]]
            } else {
                let mut g = vec![vec![Q::zero(); basis.len()]; basis.len()];
                for (i, row_mono) in basis.iter().enumerate() {
                    let p = row_mono[0] as usize;
                    let e = self
                        .real
                        .root_element(&self.positive[p])
                        .expect("positive root vector");
                    let sub: Vec<i64> = nu
                        .iter()
                        .zip(&self.neg_coords[p])
                        .map(|(a, b)| a - b)
                        .collect();
                    let sub_index = &index[&sub];
                    let i_rest = sub_index[&row_mono[1..].to_vec()];
                    let sub_gram = &grams[&sub];
                    for (j, col_mono) in basis.iter().enumerate() {
                        let v = self.act(e, col_mono);
                        let mut s = Q::zero();
                        for (k, x) in v.iter() {
                            s += x * &sub_gram[i_rest][sub_index[k]];
                        }
                        g[i][j] = s;
                    }
                }
                g
            };
            grams.insert(nu.clone(), g);
        }
        match grams.remove(&bound) {
            Some(g) => (monos[&bound].clone(), g),
            None => (Vec::new(), Vec::new()),
        }
    }

    /// `⟨a, b⟩` for vectors of one weight space given in `basis`.
    pub fn pair(gram: &[Vec<Q>], a: &[Q], b: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    s += x * &gram[i][j] * y;
                }
            }
        }
        s
    }

    /// `x_b` applied to a vector in `source` basis, written in `target`.
    pub fn apply(&mut self, b: usize, source: &[Mono], v: &[Q], target: &[Mono]) -> Vec<Q> {
        let idx: HashMap<&Mono, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut out = vec![Q::zero(); target.len()];
        for (m, c) in source.iter().zip(v) {
            if c.is_zero() {
                continue;
            }
            for (mm, x) in self.act(b, m).iter() {
                out[idx[mm]] += c * x;
            }
        }
        out
    }

    pub fn realization(&self) -> &Realization {
        &self.real
    }
}

/// Converts `mu` (a sum of positive roots, in ε/δ coordinates) to simple-root
/// coordinates of `base`.
pub fn offset_of(alg: &Algebra, base: &Base, mu: &Weight) -> Result<Vec<i64>> {
    alg.check_dim(mu)?;
    let bad = || {
        Error::InvalidParameter(format!(
            "{} is not in the positive cone of the base",
            alg.fmt(mu)
        ))
    };
    let c = alg.base_coefficients(base, mu).ok_or_else(bad)?;
    c.iter()
        .map(|x| {
            if x.is_integer() && *x >= Q::zero() {
                x.to_integer().try_into().map_err(|_| bad())
            } else {
                Err(bad())
            }
        })
        .collect()
}

/// All PBW monomials of weight `-mu`.
pub fn verma_weight_basis(alg: &Algebra, base: &Base, mu: &Weight) -> Result<Vec<PbwMonomial>> {
    let off = offset_of(alg, base, mu)?;
    let v = Verma::new(
        alg,
        super::realization_for(alg)?,
        base,
        &Weight::zero(alg.dim()),
        &PbwOrder::Standard,
    )?;
    let monos = v.monomials(&|o: &[i64]| o.iter().zip(&off).all(|(a, b)| a <= b));
    Ok(monos
        .get(&off)
        .map(|ms| ms.iter().map(|m| v.to_public(m)).collect())
        .unwrap_or_default())
}

fn matrix_hash(m: &[Vec<Q>]) -> String {
    let mut h = Sha256::new();
    for row in m {
        let s: Vec<String> = row.iter().map(format_rational).collect();
        h.update(s.join(","));
        h.update(";");
    }
    hex::encode(h.finalize())
}

/// `dim L(λ)_{λ-μ}` as the rank of the Shapovalov matrix on `M(λ)_{λ-μ}`.
pub fn shapovalov_rank(
    alg: &Algebra,
    base: &Base,
    lam: &Weight,
    mu: &Weight,
) -> Result<ShapovalovReport> {
    shapovalov_rank_with(alg, base, lam, mu, &PbwOrder::Standard)
}

pub fn shapovalov_rank_with(
    alg: &Algebra,
    base: &Base,
    lam: &Weight,
    mu: &Weight,
    order: &PbwOrder,
) -> Result<ShapovalovReport> {
    let off = offset_of(alg, base, mu)?;
    check_caps(alg, base, crate::characters::height(&off) as usize)?;
    let key = super::cache::Key::rank(alg, base, lam, mu);
    if *order == PbwOrder::Standard {
        if let Some(r) = super::cache::get_rank(&key) {
            return Ok(r);
        }
    }
    let mut v = Verma::new(alg, super::realization_for(alg)?, base, lam, order)?;
    let (_, g) = v.gram(&off);
    let report = ShapovalovReport {
        schema: crate::SCHEMA.into(),
        algebra: alg.spec().to_string(),
        lam: lam.clone(),
        mu: mu.clone(),
        dimension: g.len(),
        rank: linalg::rank(g.clone()),
        matrix_hash: matrix_hash(&g),
    };
    if *order == PbwOrder::Standard {
        super::cache::put_rank(&key, &report);
    }
    Ok(report)
}

/// Multiplicities of `L(base, λ)` at every weight `λ - μ` with
/// `height(μ) ≤ depth`.
pub fn truncated_character(
    alg: &Algebra,
    base: &Base,
    lam: &Weight,
    depth: usize,
) -> Result<FormalCharacter> {
    check_caps(alg, base, depth)?;
    let key = super::cache::Key::character(alg, base, lam, depth);
    if let Some(c) = super::cache::get_character(&key) {
        return Ok(c);
    }
    let mut v = Verma::new(
        alg,
        super::realization_for(alg)?,
        base,
        lam,
        &PbwOrder::Standard,
    )?;
    let d = depth as i64;
    let mults = v.multiplicities(&|o: &[i64]| crate::characters::height(o) <= d);
    let terms = mults
        .into_iter()
        .filter(|(_, (_, r))| *r > 0)
        .map(|(o, (_, r))| (o, r as i64))
        .collect();
    let ch = FormalCharacter {
        origin: lam.clone(),
        depth,
        terms,
    };
    super::cache::put_character(&key, &ch);
    Ok(ch)
}
