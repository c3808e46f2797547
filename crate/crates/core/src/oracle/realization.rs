//! `gl(m|n)` and `osp(m|2n)` as supermatrices, with exact structure constants.

use std::collections::HashMap;

use num::{One, Zero};

use crate::linalg;
use crate::rootdata::{Algebra, Family, Weight};
use crate::{Error, Result, Q};

/// Sparse square matrix: entries `(row, col, value)`, no zeros stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseMatrix(pub Vec<(usize, usize, Q)>);

impl SparseMatrix {
    fn unit(a: usize, b: usize) -> Self {
        SparseMatrix(vec![(a, b, Q::one())])
    }

    fn from_map(m: HashMap<(usize, usize), Q>) -> Self {
        let mut v: Vec<_> = m
            .into_iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|((a, b), x)| (a, b, x))
            .collect();
        v.sort_by_key(|x| (x.0, x.1));
        SparseMatrix(v)
    }

    pub fn get(&self, a: usize, b: usize) -> Q {
        self.0
            .iter()
            .find(|(r, c, _)| *r == a && *c == b)
            .map_or_else(Q::zero, |(_, _, x)| x.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Self) -> HashMap<(usize, usize), Q> {
        let mut out: HashMap<(usize, usize), Q> = HashMap::new();
        for (a, b, x) in &self.0 {
            for (c, d, y) in &other.0 {
                if b == c {
                    *out.entry((*a, *d)).or_insert_with(Q::zero) += x * y;
                }
            }
        }
        out
    }

    fn scale(&self, c: &Q) -> Self {
        SparseMatrix(self.0.iter().map(|(a, b, x)| (*a, *b, x * c)).collect())
    }

    /// `[x, y] = xy - (-1)^{|x||y|} yx`.
    pub fn super_bracket(&self, other: &Self, both_odd: bool) -> Self {
        let mut m = self.mul(other);
        for (k, v) in other.mul(self) {
            let e = m.entry(k).or_insert_with(Q::zero);
            if both_odd {
                *e += v;
            } else {
                *e -= v;
            }
        }
        Self::from_map(m)
    }

    fn add_scaled(&mut self, other: &Self, c: &Q) {
        let mut m: HashMap<(usize, usize), Q> =
            self.0.drain(..).map(|(a, b, x)| ((a, b), x)).collect();
        for (a, b, x) in &other.0 {
            *m.entry((*a, *b)).or_insert_with(Q::zero) += x * c;
        }
        *self = Self::from_map(m);
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ElementKind {
    /// Dual to weight coordinate `k`: `λ(h_k) = λ_k`.
    Cartan(usize),
    Root(Weight),
}

#[derive(Clone, Debug)]
pub struct Element {
    pub kind: ElementKind,
    pub matrix: SparseMatrix,
    pub odd: bool,
    pub weight: Weight,
}

/// Supermatrix model of an algebra. Basis: the Cartan elements `h_k` first,
/// then one root vector per root in [`Algebra::roots`] order. Negative root
/// vectors are normalised so that `x_α ↔ x_{-α}`, `h ↦ h` is an
/// anti-automorphism.
#[derive(Clone, Debug)]
pub struct Realization {
    pub size: usize,
    pub vector_odd: Vec<bool>,
    pub vector_weights: Vec<Weight>,
    pub basis: Vec<Element>,
    /// `structure[i][j]` = coefficients of `[x_i, x_j]`.
    pub structure: Vec<Vec<Vec<(usize, Q)>>>,
    root_index: HashMap<Weight, usize>,
    diag_index: Vec<usize>,
}

pub fn realize(alg: &Algebra) -> Result<Realization> {
    let (vw, odd, form) = match alg.family() {
        Family::Gl => gl_vectors(alg),
        Family::Osp => osp_vectors(alg),
        _ => {
            return Err(Error::Unsupported(format!(
                "no supermatrix realization for {}",
                alg.spec()
            )))
        }
    };
    let dim = alg.dim();
    let size = vw.len();

    // Cartan h_k and the vector index read off by λ(h_k)
    let mut basis = Vec::new();
    let mut diag_index = Vec::new();
    for k in 0..dim {
        let plus = (0..size)
            .find(|&a| vw[a] == Weight::unit(dim, k))
            .expect("basis vector of weight e_k");
        let mut m = vec![(plus, plus, Q::one())];
        if let Some(minus) = (0..size).find(|&a| vw[a] == -&Weight::unit(dim, k)) {
            m.push((minus, minus, -Q::one()));
        }
        m.sort_by_key(|x| (x.0, x.1));
        diag_index.push(plus);
        basis.push(Element {
            kind: ElementKind::Cartan(k),
            matrix: SparseMatrix(m),
            odd: false,
            weight: Weight::zero(dim),
        });
    }

    let mut root_index = HashMap::new();
    for r in alg.roots() {
        let cands: Vec<(usize, usize)> = (0..size)
            .flat_map(|a| (0..size).map(move |b| (a, b)))
            .filter(|&(a, b)| &vw[a] - &vw[b] == r.weight)
            .collect();
        let matrix = match &form {
            None => {
                assert_eq!(
                    cands.len(),
                    1,
                    "gl root spaces are spanned by one matrix unit"
                );
                SparseMatrix::unit(cands[0].0, cands[0].1)
            }
            Some(j) => osp_root_vector(&cands, j, &odd, r.is_odd(), size),
        };
        root_index.insert(r.weight.clone(), basis.len());
        basis.push(Element {
            kind: ElementKind::Root(r.weight.clone()),
            matrix,
            odd: r.is_odd(),
            weight: r.weight.clone(),
        });
    }

    let mut real = Realization {
        size,
        vector_odd: odd,
        vector_weights: vw,
        basis,
        structure: Vec::new(),
        root_index,
        diag_index,
    };
    real.normalise_negatives(alg)?;
    real.structure = (0..real.basis.len())
        .map(|i| {
            (0..real.basis.len())
                .map(|j| real.decompose_bracket(i, j))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(real)
}

/// Vector weights for `gl(m|n)`: `ε_1..ε_m` even, `δ_1..δ_n` odd.
fn gl_vectors(alg: &Algebra) -> (Vec<Weight>, Vec<bool>, Option<Vec<Vec<Q>>>) {
    let l = alg.layout();
    let d = alg.dim();
    let vw = (0..d).map(|k| Weight::unit(d, k)).collect();
    let odd = (0..d).map(|k| k >= l.eps).collect();
    (vw, odd, None)
}

/// Vector weights and Gram matrix of the invariant even supersymmetric form
/// on `ℂ^{m|2n}` for `osp(m|2n)`.
fn osp_vectors(alg: &Algebra) -> (Vec<Weight>, Vec<bool>, Option<Vec<Vec<Q>>>) {
    let (m, n) = alg.mn();
    let s = m / 2;
    let d = alg.dim();
    let mut vw = Vec::new();
    let mut odd = Vec::new();
    for i in 0..s {
        vw.push(Weight::unit(d, i));
        vw.push(-&Weight::unit(d, i));
        odd.extend([false, false]);
    }
    if m % 2 == 1 {
        vw.push(Weight::zero(d));
        odd.push(false);
    }
    for j in 0..n {
        vw.push(Weight::unit(d, s + j));
        vw.push(-&Weight::unit(d, s + j));
        odd.extend([true, true]);
    }
    let size = vw.len();
    let mut j = vec![vec![Q::zero(); size]; size];
    for i in 0..s {
        j[2 * i][2 * i + 1] = Q::one();
        j[2 * i + 1][2 * i] = Q::one();
    }
    if m % 2 == 1 {
        j[2 * s][2 * s] = Q::one();
    }
    let off = m;
    for k in 0..n {
        j[off + 2 * k][off + 2 * k + 1] = Q::one();
        j[off + 2 * k + 1][off + 2 * k] = -Q::one();
    }
    (vw, odd, Some(j))
}

/// The unique (up to scale) matrix supported on `cands` with
/// `B(Xu, v) + (-1)^{|X||u|} B(u, Xv) = 0`.
fn osp_root_vector(
    cands: &[(usize, usize)],
    j: &[Vec<Q>],
    odd: &[bool],
    x_odd: bool,
    size: usize,
) -> SparseMatrix {
    let mut rows = Vec::new();
    for a in 0..size {
        for b in 0..size {
            let sign = if x_odd && odd[a] { -Q::one() } else { Q::one() };
            // Σ_c X[c][a] J[c][b] + sign Σ_c J[a][c] X[c][b]
            let row: Vec<Q> = cands
                .iter()
                .map(|&(r, c)| {
                    let mut v = Q::zero();
                    if c == a {
                        v += &j[r][b];
                    }
                    if c == b {
                        v += &sign * &j[a][r];
                    }
                    v
                })
                .collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let ker = linalg::kernel(&rows, cands.len());
    assert_eq!(ker.len(), 1, "osp root spaces are one-dimensional");
    let v = &ker[0];
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .expect("nonzero kernel vector")
        .clone();
    SparseMatrix(
        cands
            .iter()
            .zip(v)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&(r, c), x)| (r, c, x / &lead))
            .collect(),
    )
    .sorted()
}

impl SparseMatrix {
    fn sorted(mut self) -> Self {
        self.0.sort_by_key(|x| (x.0, x.1));
        self
    }
}

impl Realization {
    pub fn root_element(&self, w: &Weight) -> Option<usize> {
        self.root_index.get(w).copied()
    }

    pub fn cartan_count(&self) -> usize {
        self.diag_index.len()
    }

    pub fn even_dim(&self) -> usize {
        self.basis.iter().filter(|e| !e.odd).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.basis.iter().filter(|e| e.odd).count()
    }

    fn bracket_matrix(&self, i: usize, j: usize) -> SparseMatrix {
        let (x, y) = (&self.basis[i], &self.basis[j]);
        x.matrix.super_bracket(&y.matrix, x.odd && y.odd)
    }

    /// Rescales `x_{-β}` so that `θ: x_β ↔ x_{-β}` is an anti-automorphism.
    /// Simple roots of the default base keep `x_{-α}`; for other positive `β`
    /// with `[x_α, x_{β-α}] = k x_β`, set `x_{-β} := k⁻¹ [x_{-(β-α)}, x_{-α}]`.
    fn normalise_negatives(&mut self, alg: &Algebra) -> Result<()> {
        let base = alg.default_base();
        let mut pos: Vec<(Vec<Q>, Weight)> = alg
            .positive_roots(base)
            .into_iter()
            .map(|r| {
                (
                    alg.base_coefficients(base, &r.weight)
                        .expect("root in span"),
                    r.weight,
                )
            })
            .collect();
        pos.sort_by_key(|(c, _)| c.iter().sum::<Q>());
        for (coeffs, beta) in pos {
            if coeffs.iter().sum::<Q>().is_one() {
                continue;
            }
            let found = base.simples.iter().find_map(|a| {
                let rest = &beta - &a.weight;
                let (ia, ir) = (self.root_element(&a.weight)?, self.root_element(&rest)?);
                let ib = self.root_element(&beta)?;
                let z = self.bracket_matrix(ia, ir);
                let k = coefficient_of(&z, &self.basis[ib].matrix)?;
                (!k.is_zero()).then_some((a.weight.clone(), rest, k))
            });
            let (alpha, rest, k) = found.ok_or_else(|| {
                Error::Unsupported(format!("cannot reach root {} from simples", alg.fmt(&beta)))
            })?;
            let (i_rest, i_alpha) = (
                self.root_element(&-&rest).unwrap(),
                self.root_element(&-&alpha).unwrap(),
            );
            let z = self.bracket_matrix(i_rest, i_alpha);
            let ib = self.root_element(&-&beta).unwrap();
            self.basis[ib].matrix = z.scale(&k.recip());
        }
        Ok(())
    }

    fn decompose_bracket(&self, i: usize, j: usize) -> Result<Vec<(usize, Q)>> {
        let z = self.bracket_matrix(i, j);
        if z.is_zero() {
            return Ok(Vec::new());
        }
        let w = &self.basis[i].weight + &self.basis[j].weight;
        let mut out = Vec::new();
        let mut check = SparseMatrix::default();
        if w.is_zero() {
            for (k, &d) in self.diag_index.iter().enumerate() {
                let c = z.get(d, d);
                if !c.is_zero() {
                    check.add_scaled(&self.basis[k].matrix, &c);
                    out.push((k, c));
                }
            }
        } else if let Some(ib) = self.root_element(&w) {
            let c = coefficient_of(&z, &self.basis[ib].matrix)
                .ok_or_else(|| Error::Unsupported("bracket leaves the root space".into()))?;
            check.add_scaled(&self.basis[ib].matrix, &c);
            out.push((ib, c));
        }
        if check != z {
            return Err(Error::Unsupported(format!(
                "bracket [x{i}, x{j}] is not in the span of the basis"
            )));
        }
        Ok(out)
    }
}

/// `c` with `z = c·x`, when `z` is a multiple of `x`.
fn coefficient_of(z: &SparseMatrix, x: &SparseMatrix) -> Option<Q> {
    let (a, b, v) = x.0.first()?;
    let c = z.get(*a, *b) / v;
    (z.0 == x
        .scale(&c)
        .0
        .into_iter()
        .filter(|(_, _, v)| !v.is_zero())
        .collect::<Vec<_>>())
    .then_some(c)
}
