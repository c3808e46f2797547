//! Bases compatible with `Π₀`, odd reflections between them, and the
//! nonisotropic simple roots `Π_ni` with their components.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::rootdata::{Algebra, Base, Family, Root, Weight};
use crate::{Error, Result, Q};

/// The odd-reflection graph: vertices are bases, edges are odd reflections.
#[derive(Clone, Debug)]
pub struct BaseGraph {
    pub bases: Vec<Base>,
    /// `edges[i]` lists `(j, α)`: reflecting base `i` at `α` gives base `j`.
    pub edges: Vec<Vec<(usize, Weight)>>,
}

impl BaseGraph {
    pub fn index_of(&self, base: &Base) -> Option<usize> {
        self.bases.iter().position(|b| b == base)
    }

    /// Shortest chain of odd reflections from `from` to `to`.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<(usize, Weight)>> {
        let mut prev: Vec<Option<(usize, Weight)>> = vec![None; self.bases.len()];
        let mut seen = vec![false; self.bases.len()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(i) = queue.pop_front() {
            if i == to {
                break;
            }
            for (j, a) in &self.edges[i] {
                if !seen[*j] {
                    seen[*j] = true;
                    prev[*j] = Some((i, a.clone()));
                    queue.push_back(*j);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut steps = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, a) = prev[cur].clone().expect("visited vertex has a predecessor");
            steps.push((p, a));
            cur = p;
        }
        steps.reverse();
        Some(steps)
    }
}

/// Odd reflection at the isotropic simple root `alpha`.
pub fn odd_reflect(alg: &Algebra, base: &Base, alpha: &Weight) -> Result<Base> {
    let Some(a) = base.simples.iter().find(|r| &r.weight == alpha) else {
        return Err(Error::NotIsotropicSimple(format!(
            "{} is not simple in {}",
            alg.fmt(alpha),
            alg.fmt_base(base)
        )));
    };
    if !a.isotropic {
        return Err(Error::NotIsotropicSimple(format!(
            "{} is not isotropic",
            alg.fmt(alpha)
        )));
    }
    let mut out = Vec::with_capacity(base.rank());
    for b in &base.simples {
        let w = if &b.weight == alpha {
            -alpha
        } else if !alg.form(&b.weight, alpha)?.is_zero() {
            &b.weight + alpha
        } else {
            b.weight.clone()
        };
        let r = alg.root(&w).ok_or_else(|| {
            Error::InvalidBase(format!("odd reflection produced non-root {}", alg.fmt(&w)))
        })?;
        out.push(r.clone());
    }
    Ok(Base::new(out))
}

pub(crate) fn build_graph(alg: &Algebra) -> BaseGraph {
    let mut bases = vec![alg.default_base().clone()];
    let mut index: HashMap<Base, usize> = HashMap::from([(bases[0].clone(), 0)]);
    let mut edges: Vec<Vec<(usize, Weight)>> = vec![Vec::new()];
    let mut i = 0;
    while i < bases.len() {
        let base = bases[i].clone();
        for a in base.simples.iter().filter(|r| r.isotropic) {
            let next =
                odd_reflect(alg, &base, &a.weight).expect("isotropic simple of a valid base");
            let j = *index.entry(next.clone()).or_insert_with(|| {
                bases.push(next);
                edges.push(Vec::new());
                bases.len() - 1
            });
            edges[i].push((j, a.weight.clone()));
        }
        i += 1;
    }
    BaseGraph { bases, edges }
}

/// All bases compatible with `Π₀`, default base first.
pub fn all_bases(alg: &Algebra) -> &[Base] {
    &alg.base_graph().bases
}

pub fn distinguished_bases(alg: &Algebra) -> Vec<Base> {
    all_bases(alg)
        .iter()
        .filter(|b| b.is_distinguished())
        .cloned()
        .collect()
}

/// Moves a highest weight along a chain of odd reflections so that
/// `L(from, λ) = L(to, λ')`.
pub fn transport_weight(alg: &Algebra, lam: &Weight, from: &Base, to: &Base) -> Result<Weight> {
    alg.check_dim(lam)?;
    let g = alg.base_graph();
    let unknown = |b: &Base| {
        Error::InvalidBase(format!(
            "{} is not a base of {}",
            alg.fmt_base(b),
            alg.spec()
        ))
    };
    let i = g.index_of(from).ok_or_else(|| unknown(from))?;
    let j = g.index_of(to).ok_or_else(|| unknown(to))?;
    let path = g.path(i, j).ok_or_else(|| unknown(to))?;
    let mut lam = lam.clone();
    for (_, a) in path {
        lam = step(alg, &lam, &a)?;
    }
    Ok(lam)
}

/// `λ' = λ - α` if `(λ, α) ≠ 0`, else `λ`.
pub(crate) fn step(alg: &Algebra, lam: &Weight, alpha: &Weight) -> Result<Weight> {
    Ok(if alg.form(lam, alpha)?.is_zero() {
        lam.clone()
    } else {
        lam - alpha
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    A,
    B,
    C,
    D,
    G2,
    #[serde(rename = "BCsuper")]
    BcSuper,
    #[serde(rename = "rank1")]
    Rank1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiComponent {
    /// Simple roots in chain order, the distinguished end last.
    pub simples: Vec<Root>,
    pub kind: ComponentKind,
    pub host_base: Base,
}

impl NiComponent {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    /// Human-readable name, e.g. `o5`, `osp(1|4)`, `sl3`.
    pub fn name(&self, alg: &Algebra) -> String {
        let r = self.rank();
        let short_eps = |s: &Root| {
            let nz: Vec<&Q> = s.weight.iter().filter(|x| !x.is_zero()).collect();
            nz.len() == 1 && s.weight.iter().take(alg.layout().eps).any(|x| !x.is_zero())
        };
        match self.kind {
            ComponentKind::A => format!("sl{}", r + 1),
            ComponentKind::B => format!("o{}", 2 * r + 1),
            ComponentKind::C => format!("sp{}", 2 * r),
            ComponentKind::D => format!("o{}", 2 * r),
            ComponentKind::G2 => "G2".into(),
            ComponentKind::BcSuper => format!("osp(1|{})", 2 * r),
            ComponentKind::Rank1 if self.simples[0].is_odd() => "osp(1|2)".into(),
            ComponentKind::Rank1 if alg.family() == Family::Osp && short_eps(&self.simples[0]) => {
                "o3".into()
            }
            ComponentKind::Rank1 => "sl2".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PiNi {
    pub roots: Vec<Root>,
    pub components: Vec<NiComponent>,
}

fn adjacent(alg: &Algebra, a: &Root, b: &Root) -> bool {
    a.weight != b.weight
        && !alg
            .form(&a.weight, &b.weight)
            .expect("same algebra")
            .is_zero()
}

/// Connected components under nonzero form pairing, each sorted.
fn components_of(alg: &Algebra, roots: &[Root]) -> Vec<Vec<Root>> {
    let mut seen = vec![false; roots.len()];
    let mut out = Vec::new();
    for s in 0..roots.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(i) = stack.pop() {
            comp.push(roots[i].clone());
            for j in 0..roots.len() {
                if !seen[j] && adjacent(alg, &roots[i], &roots[j]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn kind_of(alg: &Algebra, simples: &[Root]) -> ComponentKind {
    let r = simples.len();
    if r == 1 {
        return ComponentKind::Rank1;
    }
    if simples.iter().any(|s| s.is_odd()) {
        return ComponentKind::BcSuper;
    }
    let norms: Vec<Q> = simples
        .iter()
        .map(|s| alg.form(&s.weight, &s.weight).expect("same algebra"))
        .collect();
    let abs: Vec<Q> = norms.iter().map(num::Signed::abs).collect();
    let lo = abs.iter().min().expect("nonempty").clone();
    let hi = abs.iter().max().expect("nonempty").clone();
    let ratio = &hi / &lo;
    if ratio == Q::from_integer(3.into()) {
        return ComponentKind::G2;
    }
    if ratio == Q::from_integer(2.into()) {
        let short = abs.iter().filter(|x| **x == lo).count();
        if r == 2 {
            let eps = alg.layout().eps;
            let in_eps = simples
                .iter()
                .all(|s| (eps..alg.dim()).all(|k| s.weight[k].is_zero()));
            return if in_eps {
                ComponentKind::B
            } else {
                ComponentKind::C
            };
        }
        return if short == 1 {
            ComponentKind::B
        } else {
            ComponentKind::C
        };
    }
    let branch = simples
        .iter()
        .any(|a| simples.iter().filter(|b| adjacent(alg, a, b)).count() >= 3);
    if branch {
        ComponentKind::D
    } else {
        ComponentKind::A
    }
}

/// `Π_ni` and its components with their hosting distinguished bases.
pub fn pi_ni(alg: &Algebra) -> PiNi {
    let mut set = BTreeSet::new();
    for b in all_bases(alg) {
        set.extend(b.simples.iter().filter(|r| !r.isotropic).cloned());
    }
    let roots: Vec<Root> = set.into_iter().collect();
    let dist = distinguished_bases(alg);
    let gl_host = gl_sigma_t(alg, &dist);
    let mut components: Vec<NiComponent> = components_of(alg, &roots)
        .into_iter()
        .map(|mut simples| {
            simples.sort_by(|a, b| b.weight.cmp(&a.weight));
            let kind = kind_of(alg, &simples);
            let host_base = gl_host.clone().unwrap_or_else(|| {
                dist.iter()
                    .filter(|b| simples.iter().all(|s| b.contains(&s.weight)))
                    .min()
                    .cloned()
                    .expect("every component lies in a distinguished base")
            });
            NiComponent {
                simples,
                kind,
                host_base,
            }
        })
        .collect();
    components.sort_by(|a, b| b.simples[0].weight.cmp(&a.simples[0].weight));
    PiNi { roots, components }
}

/// For `gl(m|n)` every component uses the distinguished base starting in the
/// δ-block, i.e. the one containing `δn - ε1`.
fn gl_sigma_t(alg: &Algebra, dist: &[Base]) -> Option<Base> {
    if alg.family() != Family::Gl {
        return None;
    }
    let l = alg.layout();
    if l.eps == 0 || l.delta == 0 {
        return Some(alg.default_base().clone());
    }
    let mut w = Weight::zero(alg.dim());
    w.0[l.eps + l.delta - 1] = Q::from_integer(1.into());
    w.0[0] = Q::from_integer((-1).into());
    dist.iter().find(|b| b.contains(&w)).cloned()
}

/// Key for ordering: δ-block coordinates first, then ε-block.
fn delta_first_key(alg: &Algebra, w: &Weight) -> Vec<Q> {
    let e = alg.layout().eps;
    w.0[e..].iter().chain(&w.0[..e]).cloned().collect()
}

/// Orders simple roots along the Dynkin diagram: start at an end whose
/// coordinate sum is zero (largest δ-first key on ties), walk depth-first
/// visiting neighbours in sorted order.
pub fn display_order(alg: &Algebra, simples: &[Root]) -> Vec<Root> {
    let n = simples.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| adjacent(alg, &simples[i], &simples[j]))
                .collect()
        })
        .collect();
    let key = |i: usize| {
        let w = &simples[i].weight;
        let sum: Q = w.iter().sum();
        (sum.is_zero(), adj[i].len() <= 1, delta_first_key(alg, w))
    };
    let mut visited = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let start = (0..n)
            .filter(|&i| !visited[i])
            .max_by(|&a, &b| {
                let (ka, kb) = (key(a), key(b));
                (ka.1, ka.0, ka.2).cmp(&(kb.1, kb.0, kb.2))
            })
            .expect("unvisited vertex");
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if visited[i] {
                continue;
            }
            visited[i] = true;
            out.push(simples[i].clone());
            let mut next: Vec<usize> = adj[i].iter().copied().filter(|&j| !visited[j]).collect();
            next.sort_by(|&a, &b| simples[b].cmp(&simples[a]));
            stack.extend(next);
        }
    }
    out
}

#[cfg(test)]
mod tests;
