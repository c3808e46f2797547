//! Root tables, Gram matrices, `Π₀` and default bases.

use num::{One, Zero};

use super::{AlgebraSpec, FormConvention, Layout, Parity, Weight};
use crate::{q, Q};

pub(super) struct Tables {
    pub layout: Layout,
    pub gram: Vec<Vec<Q>>,
    pub roots: Vec<(Weight, Parity)>,
    pub even_simples: Vec<Weight>,
    pub default_base: Vec<Weight>,
}

fn diag(d: &[Q]) -> Vec<Vec<Q>> {
    (0..d.len())
        .map(|i| {
            (0..d.len())
                .map(|j| if i == j { d[i].clone() } else { Q::zero() })
                .collect()
        })
        .collect()
}

/// `±a ± b` for all four sign choices.
fn pm_pm(a: &Weight, b: &Weight) -> [Weight; 4] {
    [a + b, a - b, &(-a) + b, &(-a) - b]
}

fn pm(a: &Weight) -> [Weight; 2] {
    [a.clone(), -a]
}

pub(super) fn build(spec: &AlgebraSpec, conv: FormConvention) -> Tables {
    match spec {
        AlgebraSpec::Gl { m, n } => gl(*m, *n, conv),
        AlgebraSpec::Sl { k } => gl(*k, 0, conv),
        AlgebraSpec::Osp { m, n } => osp(*m, *n, conv),
        AlgebraSpec::D21a { a } => d21a(a),
        AlgebraSpec::F4 => f4(),
        AlgebraSpec::G3 => g3(),
    }
}

/// Gram diagonal for an ε/δ layout. The δ-block gets `delta_sign` only when
/// both blocks are present; the pure even algebras use the positive form.
fn eps_delta_gram(eps: usize, delta: usize, conv: FormConvention) -> Vec<Vec<Q>> {
    let (e, d) = if eps > 0 && delta > 0 {
        let s = Q::from_integer(conv.delta_sign.into());
        (-&s, s)
    } else {
        (Q::one(), Q::one())
    };
    let mut v = vec![e; eps];
    v.extend(vec![d; delta]);
    diag(&v)
}

fn gl(m: usize, n: usize, conv: FormConvention) -> Tables {
    let dim = m + n;
    let u = |i: usize| Weight::unit(dim, i);
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                let odd = (i < m) != (j < m);
                roots.push((&u(i) - &u(j), if odd { Parity::Odd } else { Parity::Even }));
            }
        }
    }
    let even_simples = (0..dim.saturating_sub(1))
        .filter(|&i| i + 1 != m)
        .map(|i| &u(i) - &u(i + 1))
        .collect();
    let default_base = (0..dim.saturating_sub(1))
        .map(|i| &u(i) - &u(i + 1))
        .collect();
    Tables {
        layout: Layout::eps_delta(m, n),
        gram: eps_delta_gram(m, n, conv),
        roots,
        even_simples,
        default_base,
    }
}

fn osp(m: usize, n: usize, conv: FormConvention) -> Tables {
    let s = m / 2;
    let odd_m = m % 2 == 1;
    let dim = s + n;
    let e = |i: usize| Weight::unit(dim, i);
    let d = |j: usize| Weight::unit(dim, s + j);
    let two = q(2, 1);
    let mut roots = Vec::new();

    for i in 0..s {
        for j in i + 1..s {
            roots.extend(pm_pm(&e(i), &e(j)).map(|w| (w, Parity::Even)));
        }
        if odd_m {
            roots.extend(pm(&e(i)).map(|w| (w, Parity::Even)));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            roots.extend(pm_pm(&d(i), &d(j)).map(|w| (w, Parity::Even)));
        }
        roots.extend(pm(&d(i).scale(&two)).map(|w| (w, Parity::Even)));
    }
    if m > 0 {
        for j in 0..n {
            for i in 0..s {
                roots.extend(pm_pm(&e(i), &d(j)).map(|w| (w, Parity::Odd)));
            }
            if odd_m {
                roots.extend(pm(&d(j)).map(|w| (w, Parity::Odd)));
            }
        }
    }

    // simple roots of o(m) on the ε-block
    let mut o_simples: Vec<Weight> = (0..s.saturating_sub(1))
        .map(|i| &e(i) - &e(i + 1))
        .collect();
    if s > 0 {
        if odd_m {
            o_simples.push(e(s - 1));
        } else if s >= 2 {
            o_simples.push(&e(s - 2) + &e(s - 1));
        }
    }
    let mut sp_simples: Vec<Weight> = (0..n.saturating_sub(1))
        .map(|j| &d(j) - &d(j + 1))
        .collect();
    if n > 0 {
        sp_simples.push(d(n - 1).scale(&two));
    }
    let mut even_simples = sp_simples.clone();
    even_simples.extend(o_simples.iter().cloned());

    let default_base = if m == 0 || n == 0 {
        even_simples.clone()
    } else {
        // δ1-δ2, …, δn-ε1, ε1-ε2, …, tail
        let mut b: Vec<Weight> = (0..n - 1).map(|j| &d(j) - &d(j + 1)).collect();
        if s == 0 {
            b.push(d(n - 1));
        } else {
            b.push(&d(n - 1) - &e(0));
            if m == 2 {
                b.push(&d(n - 1) + &e(0));
            } else {
                b.extend(o_simples.iter().cloned());
            }
        }
        b
    };

    Tables {
        layout: Layout::eps_delta(s, n),
        gram: eps_delta_gram(s, n, conv),
        roots,
        even_simples,
        default_base,
    }
}

fn d21a(a: &Q) -> Tables {
    let dim = 3;
    let e = |i: usize| Weight::unit(dim, i);
    let two = q(2, 1);
    let mut roots = Vec::new();
    for i in 0..3 {
        roots.extend(pm(&e(i).scale(&two)).map(|w| (w, Parity::Even)));
    }
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            for s3 in [1, -1] {
                roots.push((Weight::from_ints(&[s1, s2, s3]), Parity::Odd));
            }
        }
    }
    let gram = diag(&[-(Q::one() + a) / q(2, 1), q(1, 2), a / q(2, 1)]);
    Tables {
        layout: Layout {
            eps: 3,
            delta: 0,
            names: vec!["ε1".into(), "ε2".into(), "ε3".into()],
        },
        gram,
        roots,
        even_simples: (0..3).map(|i| e(i).scale(&two)).collect(),
        default_base: vec![
            Weight::from_ints(&[1, -1, -1]),
            e(1).scale(&two),
            e(2).scale(&two),
        ],
    }
}

fn f4() -> Tables {
    let dim = 4;
    let e = |i: usize| Weight::unit(dim, i);
    let delta = e(3);
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            roots.extend(pm_pm(&e(i), &e(j)).map(|w| (w, Parity::Even)));
        }
        roots.extend(pm(&e(i)).map(|w| (w, Parity::Even)));
    }
    roots.extend(pm(&delta).map(|w| (w, Parity::Even)));
    let h = q(1, 2);
    for signs in 0..16u32 {
        let w = Weight(
            (0..4)
                .map(|k| {
                    if signs >> k & 1 == 1 {
                        -h.clone()
                    } else {
                        h.clone()
                    }
                })
                .collect(),
        );
        roots.push((w, Parity::Odd));
    }
    Tables {
        layout: Layout {
            eps: 3,
            delta: 1,
            names: vec!["ε1".into(), "ε2".into(), "ε3".into(), "δ".into()],
        },
        gram: diag(&[Q::one(), Q::one(), Q::one(), q(-3, 1)]),
        roots,
        even_simples: vec![&e(0) - &e(1), &e(1) - &e(2), e(2), delta.clone()],
        default_base: vec![
            Weight(vec![-h.clone(), -h.clone(), -h.clone(), h.clone()]),
            &e(0) - &e(1),
            &e(1) - &e(2),
            e(2),
        ],
    }
}

fn g3() -> Tables {
    let dim = 3;
    let e1 = Weight::from_ints(&[1, 0, 0]);
    let e2 = Weight::from_ints(&[0, 1, 0]);
    let e3 = Weight::from_ints(&[-1, -1, 0]);
    let delta = Weight::from_ints(&[0, 0, 1]);
    let es = [e1.clone(), e2.clone(), e3.clone()];
    let mut roots = Vec::new();
    for i in 0..3 {
        roots.extend(pm(&es[i]).map(|w| (w, Parity::Even)));
        for j in 0..3 {
            if i != j {
                roots.push((&es[i] - &es[j], Parity::Even));
            }
        }
        roots.extend(pm_pm(&es[i], &delta).map(|w| (w, Parity::Odd)));
    }
    roots.extend(pm(&delta.scale(&q(2, 1))).map(|w| (w, Parity::Even)));
    roots.extend(pm(&delta).map(|w| (w, Parity::Odd)));
    debug_assert!(roots.iter().all(|(w, _)| w.dim() == dim));
    let g = |x: i64| q(x, 1);
    Tables {
        layout: Layout {
            eps: 2,
            delta: 1,
            names: vec!["ε1".into(), "ε2".into(), "δ".into()],
        },
        gram: vec![
            vec![g(-2), g(1), g(0)],
            vec![g(1), g(-2), g(0)],
            vec![g(0), g(0), g(2)],
        ],
        roots,
        even_simples: vec![e1.clone(), &e2 - &e1, delta.scale(&q(2, 1))],
        default_base: vec![&delta + &e3, e1.clone(), &e2 - &e1],
    }
}
