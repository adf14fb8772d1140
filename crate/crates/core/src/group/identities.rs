//! Exact replay of the displayed matrix identities behind the elementary
//! factorizations, the commutator formulas and the generator relations.
//!
//! Identities over a ring `K + K e` are instantiated with `e = e_I` for every
//! nonempty `I` in `{1..4}`, the shift pair `x, y` taken in component 5, and
//! `lambda` in `{2, 3, -1/2, 1/7}`.

use std::thread;

use super::corner::{as_matrix, CornerMatrix};
use super::generators::{gen_mu, gen_theta};
use super::word::{GeneratorToken, GroupWord};
use crate::algebra::SnElement;
use crate::error::Result;
use crate::index::{full, nonempty_subsets, set, subsets_of_size, IndexSet};
use crate::scalar::{Scalar, Q};

/// One replayed identity.
#[derive(Clone, PartialEq, Debug)]
pub struct CheckOutcome {
    pub id: String,
    pub label: String,
    pub passed: bool,
    /// Empty on success; otherwise the failing instances.
    pub detail: String,
}

type E = SnElement<Q>;
type M = CornerMatrix<Q>;

/// Sample scalars for the `K + K e` identities.
pub fn sample_lambdas() -> Vec<Q> {
    vec![Q::from_i64(2), Q::from_i64(3), Q::ratio(-1, 2), Q::ratio(1, 7)]
}

/// Elements and `2 x 2` blocks over `S_k`.
struct Ring {
    k: usize,
}

impl Ring {
    fn one(&self) -> E {
        E::one(self.k)
    }
    fn zero(&self) -> E {
        E::zero(self.k)
    }
    fn c(&self, q: &Q) -> E {
        E::scalar(self.k, q.clone())
    }
    fn x(&self, i: usize) -> E {
        E::x(self.k, i).expect("component in range")
    }
    fn y(&self, i: usize) -> E {
        E::y(self.k, i).expect("component in range")
    }
    fn e(&self, s: &IndexSet) -> E {
        E::idempotent(self.k, s).expect("components in range")
    }
    fn ei(&self, i: usize) -> E {
        self.e(&set(&[i]))
    }
    fn m2(&self, a: E, b: E, c: E, d: E) -> Result<M> {
        M::block2(self.k + 1, a, b, c, d)
    }
    fn diag(&self, a: E, d: E) -> Result<M> {
        self.m2(a, self.zero(), self.zero(), d)
    }
    fn lower(&self, c: E) -> Result<M> {
        self.m2(self.one(), self.zero(), c, self.one())
    }
    fn upper(&self, b: E) -> Result<M> {
        self.m2(self.one(), b, self.zero(), self.one())
    }
}

fn prod(ms: &[M]) -> Result<M> {
    let mut acc = ms[0].clone();
    for m in &ms[1..] {
        acc = acc.mat_mul(m)?;
    }
    Ok(acc)
}

fn lambda_ring_cases() -> Vec<(IndexSet, Q)> {
    let mut out = Vec::new();
    for s in nonempty_subsets(&full(4)) {
        for l in sample_lambdas() {
            out.push((s.clone(), l));
        }
    }
    out
}

/// `(1 + lambda e)^-1 = 1 - lambda/(1 + lambda) e`.
fn inv_scaled(r: &Ring, e: &E, l: &Q) -> E {
    &r.one() - &e.scale(&(l.clone() / (Q::from_i64(1) + l.clone())))
}

fn scaled(r: &Ring, e: &E, l: &Q) -> E {
    &r.one() + &e.scale(l)
}

type Failures = Vec<String>;

fn expect(fails: &mut Failures, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        fails.push(what());
    }
}

fn shift_rules() -> Result<Failures> {
    let r = Ring { k: 1 };
    let s = set(&[1]);
    let unit = |i: i64, j: i64| -> E {
        if i < 0 || j < 0 {
            E::zero(1)
        } else {
            E::matrix_unit(1, &s, &[i as u32], &[j as u32]).expect("valid")
        }
    };
    let (x, y) = (r.x(1), r.y(1));
    let mut f = Vec::new();
    for i in 0..=4i64 {
        for j in 0..=4i64 {
            let eij = unit(i, j);
            expect(&mut f, &x * &eij == unit(i + 1, j), || format!("x E_{i}{j}"));
            expect(&mut f, &y * &eij == unit(i - 1, j), || format!("y E_{i}{j}"));
            expect(&mut f, &eij * &x == unit(i, j - 1), || format!("E_{i}{j} x"));
            expect(&mut f, &eij * &y == unit(i, j + 1), || format!("E_{i}{j} y"));
        }
    }
    Ok(f)
}

fn theta_inverse() -> Result<Failures> {
    let n = 4;
    let mut f = Vec::new();
    for size in 2..=4 {
        for s in subsets_of_size(n, size) {
            for &i in &s {
                for &j in &s {
                    if i != j {
                        let t = gen_theta::<Q>(n, i, j, &s)?;
                        let u = gen_theta::<Q>(n, j, i, &s)?;
                        expect(&mut f, (&t * &u).is_one(), || format!("theta_{i}{j}({s:?})"));
                    }
                }
            }
        }
    }
    Ok(f)
}

fn theta_cocycle() -> Result<Failures> {
    let n = 4;
    let mut f = Vec::new();
    for size in 3..=4 {
        for s in subsets_of_size(n, size) {
            for &i in &s {
                for &j in &s {
                    for &k in &s {
                        if i == j || j == k || i == k {
                            continue;
                        }
                        let lhs = &gen_theta::<Q>(n, i, j, &s)? * &gen_theta::<Q>(n, j, k, &s)?;
                        let ok = lhs == gen_theta::<Q>(n, i, k, &s)?;
                        expect(&mut f, ok, || format!("({i},{j},{k}) in {s:?}"));
                    }
                }
            }
        }
    }
    Ok(f)
}

fn lambda_ring_units() -> Result<Failures> {
    let r = Ring { k: 4 };
    let mut f = Vec::new();
    for (s, l) in lambda_ring_cases() {
        let e = r.e(&s);
        let u = scaled(&r, &e, &l);
        let v = inv_scaled(&r, &e, &l);
        expect(&mut f, (&u * &v).is_one() && (&v * &u).is_one(), || format!("inverse {s:?}, {l}"));
        let phi = |t: &Q| -t.clone() / (Q::from_i64(1) + t.clone());
        expect(&mut f, phi(&phi(&l)) == l, || format!("phi involution at {l}"));
        let w = &r.one() - &e.scale(&Q::from_i64(2));
        expect(&mut f, (&w * &w).is_one(), || format!("(1-2e)^2 at {s:?}"));
    }
    Ok(f)
}

fn shift_factorization() -> Result<Failures> {
    let r = Ring { k: 1 };
    let (x, y, e00) = (r.x(1), r.y(1), r.ei(1));
    let mut f = Vec::new();
    for l in sample_lambdas() {
        let one_l = Q::from_i64(1) + l.clone();
        let q = l.clone() / one_l.clone();
        let lhs = prod(&[
            r.lower(y.scale(&-(Q::from_i64(1) / one_l.clone())))?,
            r.upper(x.scale(&l))?,
            r.lower(y.clone())?,
            r.upper(x.scale(&-q.clone()))?,
        ])?;
        let rhs = r
            .diag(r.c(&one_l), r.c(&(Q::from_i64(1) / one_l.clone())))?
            .mat_mul(&r.diag(&r.one() - &e00.scale(&q), r.one())?)?;
        expect(&mut f, lhs == rhs, || format!("lambda = {l}"));
    }
    Ok(f)
}

/// `A1 A2 A3 A4` of the dressed shift identity; `dress_y` multiplies the
/// `y` entries by `e` as well.
fn dressed_shift(r: &Ring, s: &IndexSet, l: &Q, dress_y: bool) -> Result<Failures> {
    let (x, y) = (r.x(5), r.y(5));
    let e00 = r.ei(5);
    let e = r.e(s);
    let u = scaled(r, &e, l);
    let u_inv = inv_scaled(r, &e, l);
    let ey = if dress_y { &e * &y } else { y.clone() };
    let le = e.scale(l);
    let frac = &le * &u_inv;
    let a = [
        r.lower(-&(&u_inv * &ey))?,
        r.upper(&le * &x)?,
        r.lower(ey.clone())?,
        r.upper(-&(&frac * &x))?,
    ];
    let lhs = prod(&a)?;
    let q = l.clone() / (Q::from_i64(1) + l.clone());
    let rhs = r
        .diag(u.clone(), u_inv.clone())?
        .mat_mul(&r.diag(&r.one() - &(&e * &e00).scale(&q), r.one())?)?;
    let mid = r.diag(&r.one() + &(&le * &(&x * &y)), u_inv.clone())?;
    let mut f = Vec::new();
    expect(&mut f, lhs == rhs, || format!("I = {s:?}, lambda = {l}"));
    expect(&mut f, lhs == mid, || format!("collapsed form, I = {s:?}, lambda = {l}"));
    Ok(f)
}

fn lambda_ring_shift_factorization() -> Result<Failures> {
    let r = Ring { k: 5 };
    let mut f = Vec::new();
    for (s, l) in lambda_ring_cases() {
        f.extend(dressed_shift(&r, &s, &l, false)?);
    }
    Ok(f)
}

fn dressed_shift_factorization() -> Result<Failures> {
    let r = Ring { k: 5 };
    let mut f = Vec::new();
    for (s, l) in lambda_ring_cases() {
        f.extend(dressed_shift(&r, &s, &l, true)?);
    }
    Ok(f)
}

/// `B1 B2 B3 [[y, 0], [u E00, x]] B5 B6`.
fn shift_block_product(r: &Ring, comp: usize, u: &E) -> Result<M> {
    let (x, y, e00) = (r.x(comp), r.y(comp), r.ei(comp));
    prod(&[
        r.lower(r.one())?,
        r.upper(-&r.one())?,
        r.lower(&r.one() - &x)?,
        r.m2(y.clone(), r.zero(), u * &e00, x.clone())?,
        r.upper(x)?,
        r.lower(-&y)?,
    ])
}

fn shift_block_reduction() -> Result<Failures> {
    let r = Ring { k: 1 };
    let e00 = r.ei(1);
    let lhs = shift_block_product(&r, 1, &r.one())?;
    let rhs = r.diag(&r.one() - &e00.scale(&Q::from_i64(2)), r.one())?;
    let mut f = Vec::new();
    expect(&mut f, lhs == rhs, || "u = 1".into());
    Ok(f)
}

fn shift_block_inverse() -> Result<Failures> {
    let r = Ring { k: 5 };
    let (x, y, e00) = (r.x(5), r.y(5), r.ei(5));
    let mut f = Vec::new();
    let mut cases: Vec<(String, E, E)> = sample_lambdas()
        .into_iter()
        .map(|l| (format!("u = {l}"), r.c(&l), r.c(&(Q::from_i64(1) / l))))
        .collect();
    for (s, l) in lambda_ring_cases() {
        let e = r.e(&s);
        cases.push((format!("I = {s:?}, lambda = {l}"), scaled(&r, &e, &l), inv_scaled(&r, &e, &l)));
    }
    for (what, u, v) in cases {
        let a = r.m2(y.clone(), r.zero(), &u * &e00, x.clone())?;
        let b = r.m2(x.clone(), &v * &e00, r.zero(), y.clone())?;
        let ok = a.mat_mul(&b)?.is_identity() && b.mat_mul(&a)?.is_identity();
        expect(&mut f, ok, || what);
    }
    Ok(f)
}

fn dressed_shift_block_reduction() -> Result<Failures> {
    let r = Ring { k: 5 };
    let e00 = r.ei(5);
    let mut f = Vec::new();
    for (s, l) in lambda_ring_cases() {
        let e = r.e(&s);
        let le = e.scale(&l);
        let lhs = shift_block_product(&r, 5, &(&r.one() + &le))?;
        let two_le = &r.c(&Q::from_i64(2)) + &le;
        let rhs = r.diag(&r.one() - &(&two_le * &e00), r.one())?;
        let split = r
            .diag(&r.one() - &e00.scale(&Q::from_i64(2)), r.one())?
            .mat_mul(&r.diag(&r.one() + &(&le * &e00), r.one())?)?;
        expect(&mut f, lhs == rhs, || format!("product, I = {s:?}, lambda = {l}"));
        expect(&mut f, rhs == split, || format!("splitting, I = {s:?}, lambda = {l}"));
    }
    Ok(f)
}

/// `[[1 + (y2-1) x1 y1 e, 0], [e2 y1 e, 1 + (x2-1) e]]` as the five-factor
/// product; `e = 1` gives the undressed block with `x2` in the corner.
fn two_component_block(r: &Ring, ei: &E, lower_first: &E) -> Result<(M, M)> {
    let one = r.one();
    let (x1, y1, x2, y2, e2) = (r.x(1), r.y(1), r.x(2), r.y(2), r.ei(2));
    let y2m1 = &y2 - &one;
    let lhs = prod(&[
        r.lower(-&(lower_first * ei))?,
        r.upper(&y2m1 * &x1)?,
        r.lower(&y1 * ei)?,
        r.upper(-&(&y2m1 * &x1))?,
        r.upper(&(&(&y2m1 * &(&one - &x2)) * &x1) * ei)?,
    ])?;
    let rhs = r.m2(
        &one + &(&(&(&y2m1 * &x1) * &y1) * ei),
        r.zero(),
        &(&e2 * &y1) * ei,
        &one + &(&(&x2 - &one) * ei),
    )?;
    Ok((lhs, rhs))
}

fn two_component_block_check() -> Result<Failures> {
    let r = Ring { k: 2 };
    let x2y1 = &r.x(2) * &r.y(1);
    let (lhs, rhs) = two_component_block(&r, &r.one(), &x2y1)?;
    let mut f = Vec::new();
    expect(&mut f, lhs == rhs, || "S_2".into());
    Ok(f)
}

fn dressed_two_component_block() -> Result<Failures> {
    let mut f = Vec::new();
    for m in 3..=5 {
        let r = Ring { k: m };
        let ei = r.e(&(3..=m).collect());
        let x2y1 = &r.x(2) * &r.y(1);
        let (lhs, rhs) = two_component_block(&r, &ei, &x2y1)?;
        expect(&mut f, lhs == rhs, || format!("m = {m}"));
    }
    Ok(f)
}

fn theta_sum_form() -> Result<Failures> {
    let mut f = Vec::new();
    for m in 3..=5 {
        let r = Ring { k: m };
        let one = r.one();
        let ei = r.e(&(3..=m).collect());
        let e1i = &r.ei(1) * &ei;
        let e2i = &r.ei(2) * &ei;
        let sum = &(&(&r.x(2) * &e1i) + &(&(&one - &e1i) * &(&one - &e2i))) + &(&r.y(1) * &e2i);
        expect(&mut f, gen_theta::<Q>(m, 1, 2, &full(m))? == sum, || format!("m = {m}"));
    }
    Ok(f)
}

fn theta_two_block() -> Result<Failures> {
    let r = Ring { k: 2 };
    let (x2, y2, e2) = (r.x(2), r.y(2), r.ei(2));
    let x2y1 = &x2 * &r.y(1);
    let (block, _) = two_component_block(&r, &r.one(), &x2y1)?;
    let lhs = r.m2(x2, e2, r.zero(), y2)?.mat_mul(&block)?;
    let rhs = r.diag(gen_theta::<Q>(2, 1, 2, &full(2))?, r.one())?;
    let mut f = Vec::new();
    expect(&mut f, lhs == rhs, || "S_2".into());
    Ok(f)
}

/// `R = [[1 + (x2-1)(1-e_I), e2 (1-e_I)], [0, e_I + (1-e_I) y2]]`.
fn remainder_block(r: &Ring, ei: &E) -> Result<M> {
    let one = r.one();
    let not_i = &one - ei;
    r.m2(
        &one + &(&(&r.x(2) - &one) * &not_i),
        &r.ei(2) * &not_i,
        r.zero(),
        ei + &(&not_i * &r.y(2)),
    )
}

fn theta_dressed_two_block() -> Result<Failures> {
    let mut f = Vec::new();
    for m in 3..=5 {
        let r = Ring { k: m };
        let one = r.one();
        let ei = r.e(&(3..=m).collect());
        let not_i = &one - &ei;
        let (x2, y2, e2) = (r.x(2), r.y(2), r.ei(2));
        let theta = gen_theta::<Q>(m, 1, 2, &full(m))?;
        let x2y1 = &x2 * &r.y(1);
        let (block, _) = two_component_block(&r, &ei, &x2y1)?;
        let lhs = r.m2(x2.clone(), e2.clone(), r.zero(), y2.clone())?.mat_mul(&block)?;
        let mid = r.m2(
            &theta + &(&(&x2 - &one) * &not_i),
            &e2 * &not_i,
            r.zero(),
            &ei + &(&not_i * &y2),
        )?;
        let rhs = r.diag(theta, one.clone())?.mat_mul(&remainder_block(&r, &ei)?)?;
        expect(&mut f, lhs == mid, || format!("product, m = {m}"));
        expect(&mut f, mid == rhs, || format!("splitting, m = {m}"));
    }
    Ok(f)
}

fn theta_complement_fixed() -> Result<Failures> {
    let mut f = Vec::new();
    for m in 3..=5 {
        let r = Ring { k: m };
        let not_i = &r.one() - &r.e(&(3..=m).collect());
        let theta = gen_theta::<Q>(m, 1, 2, &full(m))?;
        expect(&mut f, &theta * &not_i == not_i, || format!("m = {m}"));
    }
    Ok(f)
}

fn idempotent_block_reduction() -> Result<Failures> {
    let mut f = Vec::new();
    for m in 3..=5 {
        let r = Ring { k: m };
        let one = r.one();
        let ei = r.e(&(3..=m).collect());
        let not_i = &one - &ei;
        let (x2, y2, e2) = (r.x(2), r.y(2), r.ei(2));
        let two_e2 = e2.scale(&Q::from_i64(2));
        let lhs = prod(&[
            r.upper(-&(&(&(&x2 - &one) + &two_e2) * &not_i))?,
            remainder_block(&r, &ei)?,
            r.lower(x2.clone())?,
            r.upper(&(&one - &y2) * &not_i)?,
            r.lower(-&(&one + &(&(&x2 - &one) * &ei)))?,
        ])?;
        let rhs = r.diag(&one - &(&two_e2 * &not_i), one.clone())?;
        expect(&mut f, lhs == rhs, || format!("m = {m}"));
    }
    Ok(f)
}

fn idempotent_diagonal_split() -> Result<Failures> {
    let mut f = Vec::new();
    for m in 3..=5 {
        let r = Ring { k: m };
        let one = r.one();
        let ei = r.e(&(3..=m).collect());
        let two_e2 = r.ei(2).scale(&Q::from_i64(2));
        let lhs = r.diag(&one - &(&two_e2 * &(&one - &ei)), one.clone())?;
        let rhs = r
            .diag(&one - &two_e2, one.clone())?
            .mat_mul(&r.diag(&one - &(&two_e2 * &ei), one.clone())?)?;
        expect(&mut f, lhs == rhs, || format!("m = {m}"));
    }
    Ok(f)
}

/// A unit of `S_3` with its inverse, built from a word.
fn word_unit(tokens: Vec<GeneratorToken<Q>>) -> Result<(E, E)> {
    let w = GroupWord::new(3, tokens);
    Ok((w.eval_element()?, w.inverse().eval_element()?))
}

fn commutator(a: &(E, E), b: &(E, E)) -> E {
    &(&(&a.0 * &b.0) * &a.1) * &b.1
}

fn conj(g: &(E, E), x: &E) -> E {
    &(&g.0 * x) * &g.1
}

fn pmul(a: &(E, E), b: &(E, E)) -> (E, E) {
    (&a.0 * &b.0, &b.1 * &a.1)
}

/// `[a1 b1, a2 b2] = w_a1([b1, a2]) w_a1a2([b1, b2]) [a1, a2] w_a2([a1, b2])`.
pub fn commutator_expansion_holds(a1: &(E, E), b1: &(E, E), a2: &(E, E), b2: &(E, E)) -> bool {
    let lhs = commutator(&pmul(a1, b1), &pmul(a2, b2));
    let rhs = &(&(&conj(a1, &commutator(b1, a2)) * &conj(&pmul(a1, a2), &commutator(b1, b2)))
        * &commutator(a1, a2))
        * &conj(a2, &commutator(a1, b2));
    lhs == rhs
}

fn commutator_expansion() -> Result<Failures> {
    let s = set(&[1, 2, 3]);
    let k = 2;
    let units = [
        word_unit(vec![GeneratorToken::theta(2, 1, s.clone(), 1)])?,
        word_unit(vec![GeneratorToken::mu(set(&[1, 3]), Q::from_i64(3))])?,
        word_unit(vec![GeneratorToken::elem(0, 1, E::x(k, 1)?)])?,
        word_unit(vec![GeneratorToken::elem(1, 0, E::y(k, 2)?), GeneratorToken::theta(1, 2, s, 1)])?,
    ];
    let mut f = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            let (c, d) = ((a + 1) % 4, (b + 2) % 4);
            let ok = commutator_expansion_holds(&units[a], &units[b], &units[c], &units[d]);
            expect(&mut f, ok, || format!("({a},{b},{c},{d})"));
        }
    }
    Ok(f)
}

#[derive(Clone, Copy)]
enum MuCase {
    Disjoint,
    First,
    Second,
}

fn theta_mu_commutators(case: MuCase) -> Result<Failures> {
    let n = 4;
    let mut f = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            if i == j {
                continue;
            }
            let k = match case {
                MuCase::Disjoint => 6 - i - j,
                MuCase::First => i,
                MuCase::Second => j,
            };
            let jset = set(&[i, j, n]);
            let iset = set(&[k, n]);
            let theta = (gen_theta::<Q>(n, i, j, &jset)?, gen_theta::<Q>(n, j, i, &jset)?);
            for l in sample_lambdas() {
                let linv = Q::from_i64(1) / l.clone();
                let mu = (gen_mu(n, &iset, &l)?, gen_mu(n, &iset, &linv)?);
                let c = commutator(&theta, &mu);
                let expected = match case {
                    MuCase::Disjoint => E::one(n),
                    MuCase::First => gen_mu(n, &jset, &linv)?,
                    MuCase::Second => {
                        let e11 = E::matrix_unit(n, &set(&[j]), &[1], &[1])?;
                        let tail = &e11 * &E::idempotent(n, &set(&[i, n]))?;
                        &E::one(n) + &tail.scale(&(l.clone() - Q::from_i64(1)))
                    }
                };
                expect(&mut f, c == expected, || format!("i = {i}, j = {j}, k = {k}, lambda = {l}"));
            }
        }
    }
    Ok(f)
}

fn mu_matrix_form() -> Result<Failures> {
    let n = 4;
    let mut f = Vec::new();
    for s in nonempty_subsets(&full(3)) {
        let mut iset = s.clone();
        iset.insert(n);
        for l in sample_lambdas() {
            let m = as_matrix(&gen_mu(n, &iset, &l)?)?;
            let r = Ring { k: n - 1 };
            let entry = &r.one() + &r.e(&s).scale(&(l.clone() - Q::from_i64(1)));
            expect(&mut f, m == r.diag(entry, r.one())?, || format!("I = {iset:?}, lambda = {l}"));
        }
    }
    Ok(f)
}

fn theta_matrix_form() -> Result<Failures> {
    let n = 4;
    let mut f = Vec::new();
    for s in nonempty_subsets(&full(3)).into_iter().filter(|s| s.len() >= 2) {
        let mut jset = s.clone();
        jset.insert(n);
        for &i in &s {
            for &j in &s {
                if i == j {
                    continue;
                }
                let m = as_matrix(&gen_theta::<Q>(n, i, j, &jset)?)?;
                let r = Ring { k: n - 1 };
                let ok = m == r.diag(gen_theta::<Q>(n - 1, i, j, &s)?, r.one())?;
                expect(&mut f, ok, || format!("theta_{i}{j}({jset:?})"));
            }
        }
    }
    Ok(f)
}

type Check = (&'static str, &'static str, fn() -> Result<Failures>);

fn checks() -> Vec<Check> {
    vec![
        ("shift-rules", "matrix-unit shift rules", shift_rules),
        ("lambda-ring-units", "units of K + Ke", lambda_ring_units),
        ("theta-inverse", "theta_ij theta_ji = 1", theta_inverse),
        ("theta-cocycle", "theta_ij theta_jk = theta_ik", theta_cocycle),
        ("mu-matrix-form", "mu_I(lambda) as a corner matrix", mu_matrix_form),
        ("theta-matrix-form", "theta_ij(J) as a corner matrix", theta_matrix_form),
        ("shift-factorization", "four-factor shift identity", shift_factorization),
        (
            "lambda-ring-shift-factorization",
            "four-factor shift identity over K + Ke",
            lambda_ring_shift_factorization,
        ),
        ("shift-block-reduction", "[[y,0],[E00,x]] reduction", shift_block_reduction),
        ("shift-block-inverse", "[[y,0],[uE00,x]] inverse", shift_block_inverse),
        (
            "dressed-shift-block-reduction",
            "[[y,0],[(1+lambda e)E00,x]] reduction",
            dressed_shift_block_reduction,
        ),
        ("two-component-block", "five-factor block in S_2", two_component_block_check),
        (
            "dressed-two-component-block",
            "five-factor block dressed by e_I",
            dressed_two_component_block,
        ),
        ("theta-sum-form", "theta_12(J) as a sum", theta_sum_form),
        ("theta-two-block", "diag(theta_12, 1) from two blocks", theta_two_block),
        (
            "theta-dressed-two-block",
            "diag(theta_12(J), 1) times remainder",
            theta_dressed_two_block,
        ),
        ("theta-complement-fixed", "theta_12(J)(1 - e_I) = 1 - e_I", theta_complement_fixed),
        ("idempotent-block-reduction", "remainder block reduction", idempotent_block_reduction),
        ("idempotent-diagonal-split", "diag(1 - 2e2(1 - e_I), 1) splitting", idempotent_diagonal_split),
        (
            "dressed-shift-factorization",
            "four-factor shift identity with dressed y",
            dressed_shift_factorization,
        ),
        ("commutator-expansion", "[a1b1, a2b2] expansion", commutator_expansion),
        ("theta-mu-commutator-disjoint", "[theta_ij, mu_{k,n}], k outside {i,j}", || {
            theta_mu_commutators(MuCase::Disjoint)
        }),
        ("theta-mu-commutator-first", "[theta_ij, mu_{i,n}]", || theta_mu_commutators(MuCase::First)),
        ("theta-mu-commutator-second", "[theta_ij, mu_{j,n}]", || theta_mu_commutators(MuCase::Second)),
    ]
}

fn run(check: &Check) -> CheckOutcome {
    let (id, label, f) = check;
    let (passed, detail) = match f() {
        Ok(fails) if fails.is_empty() => (true, String::new()),
        Ok(fails) => (false, fails.join("; ")),
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome { id: id.to_string(), label: label.to_string(), passed, detail }
}

/// Runs every identity; independent cases run on separate threads.
pub fn identity_suite() -> Vec<CheckOutcome> {
    let all = checks();
    thread::scope(|scope| {
        let handles: Vec<_> = all.iter().map(|c| scope.spawn(move || run(c))).collect();
        handles.into_iter().map(|h| h.join().expect("identity check panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_holds() {
        let report = identity_suite();
        for c in &report {
            assert!(c.passed, "{} failed: {}", c.id, c.detail);
        }
        assert!(report.len() >= 20);
    }

    #[test]
    fn printed_dressed_block_factor_does_not_hold() {
        let r = Ring { k: 3 };
        let ei = r.ei(3);
        let x2y2 = &r.x(2) * &r.y(2);
        let (lhs, rhs) = two_component_block(&r, &ei, &x2y2).unwrap();
        assert_ne!(lhs, rhs);
    }
}
