//! The registered checks.
//!
//! Inputs are always a tuple of external numbers; precise inputs are ones
//! with zero magnitude. Every predicate re-checks its own premises so that
//! shrunk tuples cannot turn a vacuous instance into a false failure.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::field::{int, rat, PreciseNum, Rational};
use crate::halfline::{separate_precise, zup_finite, Halfline, Kind};
use crate::naturals::{self, archimedean_witness, is_natural, Expectation};
use crate::neutrix::Factor;
use crate::{ExternalNum, Neutrix};

use super::gen::Gen;
use super::Outcome;

type X = ExternalNum;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// One of the algebraic and order axioms.
    Axiom,
    /// The completeness scheme on represented halflines.
    Scheme,
    /// Axioms on the natural numbers.
    Arithmetic,
    Theorem,
    /// Deliberately wrong law; expected to fail.
    Mutant,
}

pub struct Check {
    pub id: &'static str,
    pub kind: CheckKind,
    pub statement: &'static str,
    pub names: &'static [&'static str],
    gen: fn(&mut Gen<'_>) -> Vec<X>,
    pred: fn(&[X]) -> Outcome,
}

impl Check {
    pub fn generate(&self, g: &mut Gen<'_>) -> Vec<X> {
        (self.gen)(g)
    }

    pub fn evaluate(&self, xs: &[X]) -> Outcome {
        (self.pred)(xs)
    }
}

pub fn catalog() -> &'static [Check] {
    CATALOG
}

pub fn find(id: &str) -> Option<&'static Check> {
    CATALOG.iter().find(|c| c.id == id)
}

// ---------------------------------------------------------------------------
// helpers

fn e(x: &X) -> X {
    x.magnitude()
}

fn u(x: &X) -> X {
    x.unity().expect("zeroless")
}

fn nx(n: Neutrix) -> X {
    X::from_neutrix(n)
}

fn oslash() -> X {
    nx(Neutrix::oslash())
}

fn pound() -> X {
    nx(Neutrix::pound())
}

fn max() -> X {
    nx(Neutrix::Max)
}

fn le(a: &X, b: &X) -> bool {
    a.compare(b) != Ordering::Greater
}

fn lt(a: &X, b: &X) -> bool {
    a.compare(b) == Ordering::Less
}

fn pre(p: PreciseNum) -> X {
    X::precise(p)
}

fn is_magnitude(x: &X) -> bool {
    *x == e(x)
}

fn eq(lhs: &X, rhs: &X, law: &str) -> Outcome {
    if lhs == rhs {
        Outcome::Holds
    } else {
        Outcome::fails(law, format!("left side {lhs}, right side {rhs}"))
    }
}

fn ensure(cond: bool, law: &str, observed: impl FnOnce() -> String) -> Outcome {
    if cond {
        Outcome::Holds
    } else {
        Outcome::fails(law, observed())
    }
}

/// First failure, else `Holds` if anything held, else `Vacuous`.
fn all(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    let mut any = false;
    for p in parts {
        match p {
            Outcome::Holds => any = true,
            Outcome::Vacuous => {}
            f => return f,
        }
    }
    if any {
        Outcome::Holds
    } else {
        Outcome::Vacuous
    }
}

fn sorted(mut v: Vec<X>) -> Vec<X> {
    v.sort_by(|a, b| a.compare(b));
    v
}

fn positive_precise(x: &X) -> Option<&PreciseNum> {
    (x.is_precise() && x.rep().is_positive()).then(|| x.rep())
}

/// Precise witnesses used to quantify over `p` in definitions: powers of
/// `ρ` in quarter steps, with small and large coefficients.
fn precise_grid() -> Vec<PreciseNum> {
    let mut out = vec![PreciseNum::zero()];
    for k in -12..=12 {
        let ex = rat(k, 4);
        for c in [1, 2, 1_000_000] {
            out.push(PreciseNum::monomial(int(c), ex.clone()));
        }
        out.push(PreciseNum::monomial(rat(1, 1_000_000), ex));
    }
    out
}

/// `z` is an ideal of `y`: a magnitude with `z ≤ y` and `pz ≤ z` for every
/// precise `0 ≤ p < y`, with `p` ranging over [`precise_grid`].
fn sampled_ideal(z: &X, y: &X) -> bool {
    is_magnitude(z)
        && le(z, y)
        && precise_grid()
            .into_iter()
            .map(pre)
            .filter(|p| lt(p, y))
            .all(|p| le(&p.ext_mul(z), z))
}

fn idempotent(x: &X) -> bool {
    is_magnitude(x) && x.ext_mul(x) == *x
}

/// Members of a magnitude near its threshold, or other magnitudes below it.
fn inside(g: &mut Gen<'_>, m: &X) -> X {
    match g.below(3) {
        0 => pre(g.member(m)),
        1 => {
            let n = g.neutrix();
            let n = std::cmp::min(n, m.nx().clone());
            X::new(g.member(m), n)
        }
        _ => m.clone(),
    }
}

fn mutant_nx_mul(a: &Neutrix, b: &Neutrix) -> Neutrix {
    match (a, b) {
        (Neutrix::ScaledOslash(q), Neutrix::ScaledPound(r))
        | (Neutrix::ScaledPound(r), Neutrix::ScaledOslash(q)) => Neutrix::ScaledPound(q + r),
        _ => a.mul(b),
    }
}

// ---------------------------------------------------------------------------
// generators

fn g1(g: &mut Gen<'_>) -> Vec<X> {
    vec![g.external()]
}

fn g2(g: &mut Gen<'_>) -> Vec<X> {
    vec![g.external(), g.external()]
}

fn g3(g: &mut Gen<'_>) -> Vec<X> {
    vec![g.external(), g.external(), g.external()]
}

fn g_zeroless(g: &mut Gen<'_>) -> Vec<X> {
    vec![g.zeroless()]
}

fn g_zeroless2(g: &mut Gen<'_>) -> Vec<X> {
    vec![g.zeroless(), g.zeroless()]
}

/// Triples where `y + z` often cancels to lower order, which is where
/// distributivity needs its correction terms.
fn g_cancel(g: &mut Gen<'_>) -> Vec<X> {
    let (x, y) = (g.external(), g.external());
    let z = if g.chance(0.4) {
        &-&y + &pre(g.precise())
    } else {
        g.external()
    };
    vec![x, y, z]
}

fn g_sorted2(g: &mut Gen<'_>) -> Vec<X> {
    let mut v = sorted(vec![g.external(), g.external()]);
    v.push(g.external());
    v
}

fn g_sorted3(g: &mut Gen<'_>) -> Vec<X> {
    sorted(g3(g))
}

fn g_mag2(g: &mut Gen<'_>) -> Vec<X> {
    vec![g.magnitude(), g.magnitude()]
}

fn g_none(_: &mut Gen<'_>) -> Vec<X> {
    Vec::new()
}

// ---------------------------------------------------------------------------
// addition

fn add_assoc(v: &[X]) -> Outcome {
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    eq(&(x + &(y + z)), &(&(x + y) + z), "x + (y + z) = (x + y) + z")
}

fn add_comm(v: &[X]) -> Outcome {
    eq(&(&v[0] + &v[1]), &(&v[1] + &v[0]), "x + y = y + x")
}

fn gen_add_neutral(g: &mut Gen<'_>) -> Vec<X> {
    let x = g.external();
    let f = if g.chance(0.3) {
        g.external()
    } else {
        inside(g, &e(&x))
    };
    vec![x, f]
}

fn add_neutral(v: &[X]) -> Outcome {
    let (x, f) = (&v[0], &v[1]);
    let m = e(x);
    all([
        eq(&(x + &m), x, "x + e(x) = x"),
        if &(x + f) == x {
            eq(&(&m + f), &m, "x + f = x implies e(x) + f = e(x)")
        } else {
            Outcome::Vacuous
        },
    ])
}

fn add_symmetric(v: &[X]) -> Outcome {
    let x = &v[0];
    let s = -x;
    all([
        eq(&(x + &s), &e(x), "x + (-x) = e(x)"),
        eq(&e(&s), &e(x), "e(-x) = e(x)"),
    ])
}

fn add_magnitude_linear(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    let m = e(&(x + y));
    ensure(m == e(x) || m == e(y), "e(x + y) = e(x) or e(x + y) = e(y)", || {
        format!("e(x + y) = {m}, e(x) = {}, e(y) = {}", e(x), e(y))
    })
}

// ---------------------------------------------------------------------------
// multiplication

fn mul_assoc(v: &[X]) -> Outcome {
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    eq(&(x * &(y * z)), &(&(x * y) * z), "x(yz) = (xy)z")
}

fn mul_comm(v: &[X]) -> Outcome {
    eq(&(&v[0] * &v[1]), &(&v[1] * &v[0]), "xy = yx")
}

fn gen_mul_neutral(g: &mut Gen<'_>) -> Vec<X> {
    let x = g.zeroless();
    let w = u(&x);
    let v = match g.below(3) {
        0 => g.external(),
        1 => pre(g.member(&w)),
        _ => w.ext_add(&inside(g, &e(&w))),
    };
    vec![x, v]
}

fn mul_neutral(v: &[X]) -> Outcome {
    let (x, w) = (&v[0], &v[1]);
    if !x.is_zeroless() {
        return Outcome::Vacuous;
    }
    let un = u(x);
    all([
        eq(&(x * &un), x, "x u(x) = x"),
        if &(x * w) == x {
            eq(&(&un * w), &un, "xv = x implies u(x) v = u(x)")
        } else {
            Outcome::Vacuous
        },
    ])
}

fn mul_symmetric(v: &[X]) -> Outcome {
    let x = &v[0];
    if !x.is_zeroless() {
        return Outcome::Vacuous;
    }
    let d = x.ext_inv().expect("zeroless");
    all([
        eq(&(x * &d), &u(x), "x d = u(x) for d = 1/x"),
        ensure(d.is_zeroless(), "1/x is zeroless", || d.to_string()),
        if d.is_zeroless() {
            eq(&u(&d), &u(x), "u(1/x) = u(x)")
        } else {
            Outcome::Vacuous
        },
    ])
}

fn mul_unity_linear(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    if !x.is_zeroless() || !y.is_zeroless() {
        return Outcome::Vacuous;
    }
    let m = u(&(x * y));
    ensure(m == u(x) || m == u(y), "u(xy) = u(x) or u(xy) = u(y)", || {
        format!("u(xy) = {m}, u(x) = {}, u(y) = {}", u(x), u(y))
    })
}

// ---------------------------------------------------------------------------
// order

fn order_reflexive(v: &[X]) -> Outcome {
    ensure(le(&v[0], &v[0]), "x <= x", || "x > x".into())
}

fn gen_antisymmetric(g: &mut Gen<'_>) -> Vec<X> {
    let x = g.external();
    let y = match g.below(3) {
        0 => x.clone(),
        1 => X::new(g.member(&x), x.nx().clone()),
        _ => g.external(),
    };
    vec![x, y]
}

fn order_antisymmetric(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    if !(le(x, y) && le(y, x)) {
        return Outcome::Vacuous;
    }
    eq(x, y, "x <= y and y <= x imply x = y")
}

fn order_transitive(v: &[X]) -> Outcome {
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    if !(le(x, y) && le(y, z)) {
        return Outcome::Vacuous;
    }
    ensure(le(x, z), "x <= y <= z implies x <= z", || "x > z".into())
}

fn order_total(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    let a = x.compare(y);
    let b = y.compare(x);
    ensure(a == b.reverse(), "x <= y or y <= x, consistently", || {
        format!("cmp(x, y) = {a:?}, cmp(y, x) = {b:?}")
    })
}

fn order_add_compat(v: &[X]) -> Outcome {
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    if !le(x, y) {
        return Outcome::Vacuous;
    }
    let (l, r) = (x + z, y + z);
    ensure(le(&l, &r), "x <= y implies x + z <= y + z", || {
        format!("x + z = {l}, y + z = {r}")
    })
}

fn gen_magnitude_bound(g: &mut Gen<'_>) -> Vec<X> {
    let x = g.external();
    let y = if g.chance(0.8) {
        inside(g, &e(&x))
    } else {
        g.external()
    };
    vec![x, y]
}

fn magnitude_bound(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    let m = e(x);
    if (y + &m) != m {
        return Outcome::Vacuous;
    }
    ensure(
        le(y, &m) && le(&-y, &m),
        "y + e(x) = e(x) implies y <= e(x) and -y <= e(x)",
        || format!("y = {y}, e(x) = {m}"),
    )
}

fn gen_mul_compat(g: &mut Gen<'_>) -> Vec<X> {
    let x = g.positive_zeroless();
    let mut v = sorted(vec![g.external(), g.external()]);
    v.insert(0, x);
    v
}

fn order_mul_compat(v: &[X]) -> Outcome {
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    if !(lt(&e(x), x) && le(y, z)) {
        return Outcome::Vacuous;
    }
    let (l, r) = (x * y, x * z);
    ensure(le(&l, &r), "e(x) < x and y <= z imply xy <= xz", || {
        format!("xy = {l}, xz = {r}")
    })
}

fn gen_amplification(g: &mut Gen<'_>) -> Vec<X> {
    let x = g.external();
    let mut v = sorted(vec![g.external().abs(), g.external().abs()]);
    v.insert(0, x);
    v
}

fn amplification(v: &[X]) -> Outcome {
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    if !(le(&e(y), y) && le(y, z)) {
        return Outcome::Vacuous;
    }
    let (l, r) = (&e(x) * y, &e(x) * z);
    ensure(le(&l, &r), "e(y) <= y <= z implies e(x)y <= e(x)z", || {
        format!("e(x)y = {l}, e(x)z = {r}")
    })
}

// ---------------------------------------------------------------------------
// mixed

fn scale(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    let z = &e(x) * y;
    ensure(is_magnitude(&z), "e(x)y = e(z) for z = e(x)y", || {
        format!("e(x)y = {z}, which is not a magnitude")
    })
}

fn product_magnitude(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    eq(
        &e(&(x * y)),
        &(&(&e(x) * y) + &(&e(y) * x)),
        "e(xy) = e(x)y + e(y)x",
    )
}

fn unity_magnitude(v: &[X]) -> Outcome {
    let x = &v[0];
    if !x.is_zeroless() {
        return Outcome::Vacuous;
    }
    let rhs = e(x).ext_div(x).expect("zeroless");
    eq(&e(&u(x)), &rhs, "e(u(x)) = e(x)/x")
}

fn distributivity(v: &[X]) -> Outcome {
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let lhs = &(x * y) + &(x * z);
    let rhs = &(&(x * &(y + z)) + &(&e(x) * y)) + &(&e(x) * z);
    eq(&lhs, &rhs, "xy + xz = x(y + z) + e(x)y + e(x)z")
}

fn distributivity_naive(v: &[X]) -> Outcome {
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    eq(&(&(x * y) + &(x * z)), &(x * &(y + z)), "xy + xz = x(y + z)")
}

fn neg_product(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    eq(&-(x * y), &(&-x * y), "-(xy) = (-x)y")
}

// ---------------------------------------------------------------------------
// existence

fn exists_zero(v: &[X]) -> Outcome {
    eq(&(&X::zero() + &v[0]), &v[0], "0 + x = x")
}

fn exists_one(v: &[X]) -> Outcome {
    eq(&(&X::one() * &v[0]), &v[0], "1 x = x")
}

fn exists_max(v: &[X]) -> Outcome {
    eq(&(&e(&v[0]) + &max()), &max(), "e(x) + M = M")
}

fn nontrivial_magnitude(v: &[X]) -> Outcome {
    let x = &v[0];
    let w = match x.nx() {
        Neutrix::Zero | Neutrix::Max => oslash(),
        _ => x.clone(),
    };
    let m = e(&w);
    ensure(
        m.compare(&X::zero()) != Ordering::Equal && m.compare(&max()) != Ordering::Equal,
        "e(w) != 0 and e(w) != M",
        || format!("w = {w}"),
    )
}

fn decomposition(v: &[X]) -> Outcome {
    let x = &v[0];
    let a = pre(x.rep().clone());
    all([
        eq(&(&a + &e(x)), x, "x = a + e(x) with a the representative"),
        eq(&e(&a), &X::zero(), "e(a) = 0"),
    ])
}

fn gen_separation(g: &mut Gen<'_>) -> Vec<X> {
    sorted(vec![g.magnitude(), g.magnitude()])
}

fn separation(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    if !(is_magnitude(x) && is_magnitude(y) && lt(x, y)) {
        return Outcome::Vacuous;
    }
    match separate_precise(x, y) {
        Err(err) => Outcome::fails("a zeroless z with x < z < y", err.to_string()),
        Ok(z) => {
            let z = pre(z);
            ensure(
                z.is_zeroless() && lt(x, &z) && lt(&z, y),
                "a zeroless z with x < z < y",
                || format!("z = {z}"),
            )
        }
    }
}

// ---------------------------------------------------------------------------
// magnitude product

fn gen_maximal_ideal(g: &mut Gen<'_>) -> Vec<X> {
    let y = if g.chance(0.7) {
        nx(g.pick(&[Neutrix::pound(), Neutrix::Max]).clone())
    } else {
        g.magnitude()
    };
    vec![y, g.magnitude()]
}

fn maximal_ideal(v: &[X]) -> Outcome {
    maximal_ideal_with(v, |a, b| a.ext_mul(b))
}

fn maximal_ideal_mutant(v: &[X]) -> Outcome {
    maximal_ideal_with(v, |a, b| {
        if a.is_precise() || b.is_precise() {
            a.ext_mul(b)
        } else {
            nx(mutant_nx_mul(a.nx(), b.nx()))
        }
    })
}

fn maximal_ideal_with(v: &[X], mul: fn(&X, &X) -> X) -> Outcome {
    let (y, z) = (&v[0], &v[1]);
    if !(idempotent(y) && lt(&X::one(), y)) {
        return Outcome::Vacuous;
    }
    let x = nx(y.nx().maximal_ideal().expect("idempotent above 1"));
    all([
        eq(&mul(&x, y), &x, "xy = x for the maximal ideal x of y"),
        ensure(sampled_ideal(&x, y) && lt(&x, y), "x is an ideal of y below y", || {
            format!("x = {x}")
        }),
        if sampled_ideal(z, y) {
            ensure(le(z, &x) || z == y, "every ideal z of y has z <= x or z = y", || {
                format!("z = {z}, x = {x}")
            })
        } else {
            Outcome::Vacuous
        },
    ])
}

fn gen_magnitude(g: &mut Gen<'_>) -> Vec<X> {
    vec![g.magnitude()]
}

fn scale_to_ring(v: &[X]) -> Outcome {
    let x = &v[0];
    if !is_magnitude(x) {
        return Outcome::Vacuous;
    }
    let (p, i) = x.nx().decompose();
    let i = nx(i);
    all([
        ensure(idempotent(&i), "y idempotent", || format!("y = {i}")),
        eq(&(&pre(p) * &i), x, "x = p y"),
    ])
}

// ---------------------------------------------------------------------------
// completeness scheme

fn gen_dedekind(g: &mut Gen<'_>) -> Vec<X> {
    let b = g.external();
    let c = if g.chance(0.5) {
        X::one()
    } else {
        pre(g.positive_precise())
    };
    let d = pre(g.precise());
    let k = X::from_int(g.int_in(0, 3));
    vec![b, c, d, k]
}

/// Precise points around `t` at the scale of its magnitude.
fn probes(t: &X) -> Vec<PreciseNum> {
    let r = t.rep().clone();
    let mut out = vec![r.clone()];
    let center = t
        .nx()
        .threshold()
        .cloned()
        .or_else(|| match t.nx() {
            Neutrix::Max => Some(int(64)),
            _ => None,
        })
        .unwrap_or_else(|| r.degree().map(|d| d - int(2)).unwrap_or_default());
    for dx in [rat(-1, 2), int(0), rat(1, 2)] {
        for c in [1, 1_000_000] {
            let off = PreciseNum::monomial(int(c), &center + &dx);
            out.push(&r + &off);
            out.push(&r - &off);
        }
    }
    out
}

fn dedekind(v: &[X]) -> Outcome {
    let (b, c, d, k) = (&v[0], &v[1], &v[2], &v[3]);
    let kind = match k.rep().as_poly().and_then(|p| {
        if p.is_zero() {
            Some(0)
        } else if p.is_monomial() && p.degree() == Some(Rational::zero()) {
            p.leading_coeff().and_then(|c| c.to_integer().try_into().ok())
        } else {
            None
        }
    }) {
        Some(i @ 0..=3) if k.is_precise() => i,
        _ => return Outcome::Vacuous,
    };
    if kind == 3 {
        let set = [b.clone(), c.clone(), d.clone()];
        let member = |x: &X| set.iter().any(|s| le(x, s));
        let h = zup_finite(&set).expect("nonempty");
        let sigma = h.bound.clone();
        let pts: Vec<_> = set.iter().flat_map(probes).collect();
        return all(pts.iter().map(|p| {
            let x = pre(p.clone());
            ensure(
                member(&x) == le(&x, &sigma) && h.contains(&x) == member(&x),
                "A(x) iff x <= sigma for A(x) = some s in S has x <= s",
                || format!("x = {x}, sigma = {sigma}"),
            )
        }));
    }
    let Some(cp) = positive_precise(c) else {
        return Outcome::Vacuous;
    };
    if !d.is_precise() {
        return Outcome::Vacuous;
    }
    let kind = Kind::ALL[kind as usize];
    let h = Halfline::lower(kind, b.clone());
    let cx = pre(cp.clone());
    let a = |x: &X| h.contains(&(&(&cx * x) + d));
    // zup of {x : c x + d in H}
    let sigma = (b - d).ext_div(&cx).expect("positive scalar");
    let pts = probes(&sigma)
        .into_iter()
        .chain(probes(b))
        .map(pre)
        .collect::<Vec<_>>();
    all(pts.iter().map(|x| {
        let lhs = a(x);
        // a precise open bound is a hole of zero magnitude
        let hole = kind == Kind::StronglyOpen || (kind == Kind::Open && sigma.is_precise());
        let (rhs, form) = if hole {
            (
                lt(x, &sigma) && !sigma.contains(x.rep()),
                "A(x) iff x lies below every t in tau",
            )
        } else {
            (le(x, &sigma), "A(x) iff x <= sigma")
        };
        ensure(lhs == rhs, form, || {
            format!("x = {x}, A(x) = {lhs}, bound = {sigma}")
        })
    }))
}

// ---------------------------------------------------------------------------
// arithmetic

fn gen_naturals(g: &mut Gen<'_>) -> Vec<X> {
    vec![pre(g.natural()), pre(g.natural()), pre(g.natural())]
}

fn naturals_axioms(v: &[X]) -> Outcome {
    let (x, y) = (v[0].rep(), v[1].rep());
    if !(v[0].is_precise() && v[1].is_precise() && is_natural(x) && is_natural(y)) {
        return Outcome::Vacuous;
    }
    let one = PreciseNum::one();
    let between = [rat(1, 2), rat(1, 3), rat(2, 3)]
        .into_iter()
        .map(PreciseNum::from_rational)
        .chain([PreciseNum::rho_pow(int(-1)), PreciseNum::rho_pow(rat(-1, 2))]);
    all([
        ensure(is_natural(&PreciseNum::zero()), "N(0)", || "0 is not natural".into()),
        ensure(!is_natural(&-&one), "not N(-1)", || "-1 is natural".into()),
        ensure(is_natural(&(x + &one)), "N(x) implies N(x + 1)", || format!("x = {x}")),
        ensure(is_natural(&(x + y)), "N(x + y)", || format!("x + y = {}", x + y)),
        ensure(is_natural(&(x * y)), "N(x y)", || format!("x y = {}", x * y)),
        ensure(!x.is_negative(), "0 <= x", || format!("x = {x}")),
        ensure(
            x.is_zero() || x >= &one,
            "x = 0 or 1 <= x",
            || format!("x = {x}"),
        ),
        ensure(
            x.is_zero() || is_natural(&(x - &one)),
            "x = 0 or N(x - 1)",
            || format!("x = {x}"),
        ),
        all(between.map(|h| {
            let w = x + &h;
            ensure(!is_natural(&w), "no natural strictly between x and x + 1", || {
                format!("{w} is natural")
            })
        })),
    ])
}

fn induction(v: &[X]) -> Outcome {
    let (x, y, z) = (v[0].rep(), v[1].rep(), v[2].rep());
    if !v.iter().all(|t| t.is_precise() && is_natural(t.rep())) {
        return Outcome::Vacuous;
    }
    let zero = PreciseNum::zero();
    let next = x + &PreciseNum::one();
    all(naturals::catalog()
        .iter()
        .filter(|f| f.expectation == Expectation::Holds)
        .map(|f| {
            let base = f.holds(&zero, y, z);
            let step = !f.holds(x, y, z) || f.holds(&next, y, z);
            let here = f.holds(x, y, z);
            ensure(base && step && here, f.text, || {
                format!("{}: base {base}, step {step}, at x {here}", f.id)
            })
        }))
}

fn gen_archimedean(g: &mut Gen<'_>) -> Vec<X> {
    let x = g.positive_zeroless();
    let y = g.positive_zeroless();
    sorted(vec![x, y])
}

fn archimedean(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    let zero = X::zero();
    if !(lt(&zero, x) && lt(x, y)) || *y.nx() == Neutrix::Max {
        return Outcome::Vacuous;
    }
    match archimedean_witness(x, y) {
        Err(err) => Outcome::fails("a natural n with n x > y", err.to_string()),
        Ok(n) => {
            let p = n.to_precise();
            let nx = &pre(p.clone()) * x;
            ensure(is_natural(&p) && lt(y, &nx), "a natural n with n x > y", || {
                format!("n = {n}, n x = {nx}")
            })
        }
    }
}

// ---------------------------------------------------------------------------
// theorems on ⊘ and £

fn oslash_lt_one_lt_pound(_: &[X]) -> Outcome {
    let chain = [X::zero(), oslash(), X::one(), pound(), max()];
    all(chain.windows(2).map(|w| {
        ensure(lt(&w[0], &w[1]), "0 < o < 1 < L < M", || {
            format!("{} is not below {}", w[0], w[1])
        })
    }))
}

fn no_magnitude_between(v: &[X]) -> Outcome {
    let m = &v[0];
    if !is_magnitude(m) {
        return Outcome::Vacuous;
    }
    ensure(!(lt(&oslash(), m) && lt(m, &pound())), "no magnitude m with o < m < L", || {
        format!("m = {m}")
    })
}

fn gen_two_positive(g: &mut Gen<'_>) -> Vec<X> {
    vec![pre(g.positive_precise()), pre(g.positive_precise())]
}

fn iff(a: bool, b: bool, law: &str, obs: impl FnOnce() -> String) -> Outcome {
    ensure(a == b, law, obs)
}

fn lemma_l_lt_p(v: &[X]) -> Outcome {
    let (Some(p), Some(s)) = (positive_precise(&v[0]), positive_precise(&v[1])) else {
        return Outcome::Vacuous;
    };
    let (o, l) = (oslash(), pound());
    let px = pre(p.clone());
    let inv = pre(p.recip().expect("positive"));
    let sq = pre(s * s);
    let sx = pre(s.clone());
    let p2 = &px * &px;
    let show = || format!("p = {px}");
    all([
        iff(lt(&l, &px), lt(&inv, &o), "L < p iff 1/p < o", show),
        iff(lt(&o, &px), lt(&inv, &l), "o < p iff 1/p < L", show),
        if lt(&sq, &o) {
            ensure(lt(&sx, &o), "p < o implies sqrt(p) < o", || format!("sqrt(p) = {sx}"))
        } else {
            Outcome::Vacuous
        },
        if lt(&l, &sq) {
            ensure(lt(&l, &sx), "L < p implies L < sqrt(p)", || format!("sqrt(p) = {sx}"))
        } else {
            Outcome::Vacuous
        },
        if lt(&o, &px) && lt(&px, &l) {
            ensure(lt(&o, &p2) && lt(&p2, &l), "o < p < L implies o < p^2 < L", || {
                format!("p^2 = {p2}")
            })
        } else {
            Outcome::Vacuous
        },
        iff(
            lt(&l, &inv),
            lt(&px, &o),
            "o = sup{p : L < 1/p} and L = inf{1/p : p < o}",
            show,
        ),
    ])
}

fn magnitude_product(a: Neutrix, b: Neutrix, c: Neutrix, law: &str) -> Outcome {
    eq(&(&nx(a) * &nx(b)), &nx(c), law)
}

fn oslash_oslash(_: &[X]) -> Outcome {
    magnitude_product(Neutrix::oslash(), Neutrix::oslash(), Neutrix::oslash(), "o o = o")
}

fn pound_pound(_: &[X]) -> Outcome {
    magnitude_product(Neutrix::pound(), Neutrix::pound(), Neutrix::pound(), "L L = L")
}

fn oslash_pound(_: &[X]) -> Outcome {
    magnitude_product(Neutrix::oslash(), Neutrix::pound(), Neutrix::oslash(), "o L = o")
}

fn mutant_oslash_pound(_: &[X]) -> Outcome {
    let got = nx(mutant_nx_mul(&Neutrix::oslash(), &Neutrix::pound()));
    eq(&got, &oslash(), "o L = o")
}

// ---------------------------------------------------------------------------
// ideals and idempotents

fn gen_max_ideal(g: &mut Gen<'_>) -> Vec<X> {
    let j = nx(g.pick(&[Neutrix::pound(), Neutrix::Max]).clone());
    let mut w = g.positive_precise();
    if g.chance(0.5) {
        w = w.recip().expect("positive");
    }
    vec![j, pre(w)]
}

fn max_ideal(v: &[X]) -> Outcome {
    let (j, w) = (&v[0], &v[1]);
    if !(idempotent(j) && lt(&X::one(), j)) || !w.is_precise() || w.rep().is_zero() {
        return Outcome::Vacuous;
    }
    let i = nx(j.nx().maximal_ideal().expect("idempotent above 1"));
    let table = if *j.nx() == Neutrix::Max {
        X::zero()
    } else {
        oslash()
    };
    let aw = w.abs();
    let a = aw.ext_inv().expect("nonzero");
    all([
        eq(&i, &table, "maximal ideal of L is o, of M is 0"),
        // every 1/|w| with J < |w| is at most I
        if lt(j, &aw) {
            ensure(le(&a, &i), "1/|w| <= I whenever J < |w|", || format!("1/|w| = {a}"))
        } else {
            Outcome::Vacuous
        },
        // nothing below I is an upper bound of the set: |w| in I is beaten by
        // the element 1/w' with w' = 1/|w|
        if lt(&aw, &i) {
            let w2 = aw.ext_inv().expect("nonzero");
            ensure(
                lt(j, &w2) && le(&aw, &w2.ext_inv().expect("nonzero")),
                "I is the least upper bound of {1/w : J < |w|}",
                || format!("|w| = {aw}"),
            )
        } else {
            Outcome::Vacuous
        },
    ])
}

fn gen_idempotents(g: &mut Gen<'_>) -> Vec<X> {
    vec![nx(g.idempotent()), nx(g.idempotent())]
}

fn product_idempotents(v: &[X]) -> Outcome {
    if !(idempotent(&v[0]) && idempotent(&v[1])) {
        return Outcome::Vacuous;
    }
    let (e1, f) = if le(&v[0], &v[1]) {
        (&v[0], &v[1])
    } else {
        (&v[1], &v[0])
    };
    let one = X::one();
    let expected = if lt(f, &one) {
        e1.clone()
    } else {
        let i = nx(f.nx().maximal_ideal().expect("idempotent above 1"));
        if le(e1, &i) {
            e1.clone()
        } else {
            f.clone()
        }
    };
    eq(
        &(e1 * f),
        &expected,
        "ef = e if f < 1 or e <= I, otherwise ef = f",
    )
}

fn gen_unicity(g: &mut Gen<'_>) -> Vec<X> {
    let e1 = nx(g.nonzero_neutrix());
    let (p, _) = e1.nx().decompose();
    let c = g
        .pick(&[int(1), int(2), rat(1, 3), int(-5)])
        .clone();
    let mut q = p.scale(&c);
    if g.chance(0.3) {
        q = &q * &PreciseNum::rho_pow(rat(1, 2));
    }
    vec![e1, pre(q), nx(g.idempotent())]
}

fn unicity_idempotent(v: &[X]) -> Outcome {
    let (m, q, j) = (&v[0], &v[1], &v[2]);
    if !is_magnitude(m) || *m == X::zero() || !q.is_precise() || !idempotent(j) {
        return Outcome::Vacuous;
    }
    let (p, i) = m.nx().decompose();
    let i = nx(i);
    all([
        eq(&(&pre(p) * &i), m, "e = p I"),
        if &(q * j) == m {
            eq(j, &i, "e = p I = q J implies I = J")
        } else {
            Outcome::Vacuous
        },
    ])
}

fn pf_or_eq(v: &[X]) -> Outcome {
    let (a, b) = (&v[0], &v[1]);
    if !(is_magnitude(a) && is_magnitude(b)) {
        return Outcome::Vacuous;
    }
    let (p, side) = a.nx().linearize(b.nx());
    let px = pre(p.clone());
    let rhs = match side {
        Factor::Left => &px * a,
        Factor::Right => &px * b,
    };
    all([
        ensure(p.is_positive(), "p > 0", || format!("p = {p}")),
        eq(&(a * b), &rhs, "ef = pe or ef = pf"),
    ])
}

fn gen_consistency(g: &mut Gen<'_>) -> Vec<X> {
    let j = nx(g.pick(&[Neutrix::pound(), Neutrix::Max]).clone());
    vec![j, pre(g.positive_precise()), pre(g.positive_precise())]
}

fn consistency_order(v: &[X]) -> Outcome {
    let j = &v[0];
    let (Some(p), Some(q)) = (positive_precise(&v[1]), positive_precise(&v[2])) else {
        return Outcome::Vacuous;
    };
    if !(idempotent(j) && lt(&X::one(), j)) {
        return Outcome::Vacuous;
    }
    let i = nx(j.nx().maximal_ideal().expect("idempotent above 1"));
    let ij = &i * j;
    let (p, q) = (pre(p.clone()), pre(q.clone()));
    let (pj, qj, ip, iq) = (&p * j, &q * j, &i * &p, &i * &q);
    let show = || format!("p = {p}, q = {q}, I = {i}, J = {j}");
    all([
        if lt(&p, &i) && lt(&i, &q) {
            ensure(lt(&pj, &ij) && lt(&ij, &qj), "p < I < q implies pJ < IJ < qJ", show)
        } else {
            Outcome::Vacuous
        },
        if lt(&p, j) && lt(j, &q) {
            ensure(le(&ip, &ij) && lt(&ij, &iq), "p < J < q implies Ip <= IJ < Iq", show)
        } else {
            Outcome::Vacuous
        },
        if lt(&p, &i) {
            ensure(lt(&pj, &i), "p < I implies pJ < I", show)
        } else {
            Outcome::Vacuous
        },
        if lt(&i, &p) {
            ensure(le(j, &pj), "I < p implies J <= pJ", show)
        } else {
            Outcome::Vacuous
        },
        iff(pj == *j, lt(&i, &p) && lt(&p, j), "pJ = J iff I < p < J", show),
        if lt(j, &p) {
            ensure(lt(j, &ip), "J < p implies J < pI", show)
        } else {
            Outcome::Vacuous
        },
        if lt(&p, j) {
            all([
                ensure(le(&ip, &i), "p < J implies pI <= I", show),
                iff(ip == i, lt(&i, &p), "pI = I iff I < p < J", show),
            ])
        } else {
            Outcome::Vacuous
        },
        ensure(ip != *j, "no precise p with pI = J", show),
    ])
}

fn gen_consistency_sup(g: &mut Gen<'_>) -> Vec<X> {
    let j = nx(g.pick(&[Neutrix::pound(), Neutrix::Max]).clone());
    vec![j, pre(g.nonzero_precise())]
}

fn consistency_sup(v: &[X]) -> Outcome {
    let (j, p) = (&v[0], &v[1]);
    if !(idempotent(j) && lt(&X::one(), j)) || !p.is_precise() || p.rep().is_zero() {
        return Outcome::Vacuous;
    }
    let i = nx(j.nx().maximal_ideal().expect("idempotent above 1"));
    let ij = &i * j;
    let ap = p.abs();
    let show = || format!("p = {p}, I = {i}, J = {j}");
    all([
        eq(&ij, &i, "IJ = I"),
        if lt(&ap, &i) {
            let pj = p * j;
            // p J lies below I, and 2p J is again an element: no maximum
            let bigger = &pre(p.rep().scale(&int(2))) * j;
            ensure(
                lt(&pj, &ij) && lt(&bigger, &ij),
                "IJ = sup{pJ : |p| < I}",
                show,
            )
        } else {
            Outcome::Vacuous
        },
        if lt(&ap, j) {
            let ip = &i * p;
            let attained = if lt(&i, &ap) { ip == ij } else { true };
            ensure(le(&ip, &ij) && attained, "IJ = max{Iq : |q| < J}", show)
        } else {
            Outcome::Vacuous
        },
        if lt(j, p) {
            ensure(lt(j, &(p * &i)), "J = inf{pI : J < p}", show)
        } else {
            Outcome::Vacuous
        },
        if lt(&i, p) {
            let qj = p * j;
            let attained = if lt(p, j) { qj == *j } else { true };
            ensure(le(j, &qj) && attained, "J = min{qJ : I < q}", show)
        } else {
            Outcome::Vacuous
        },
    ])
}

// ---------------------------------------------------------------------------
// external numbers

fn gen_members3(g: &mut Gen<'_>) -> Vec<X> {
    let v = g_cancel(g);
    let m: Vec<X> = v.iter().map(|t| pre(g.member(t))).collect();
    v.into_iter().chain(m).collect()
}

fn subdistributivity(v: &[X]) -> Outcome {
    let (a, b, c) = (&v[0], &v[1], &v[2]);
    let (x, y, z) = (v[3].rep(), v[4].rep(), v[5].rep());
    if !(v[3..].iter().all(X::is_precise) && a.contains(x) && b.contains(y) && c.contains(z)) {
        return Outcome::Vacuous;
    }
    let whole = a * &(b + c);
    let split = &(a * b) + &(a * c);
    let point = x * &(y + z);
    all([
        ensure(split.contains(&point), "x(y + z) in ab + ac for x in a, y in b, z in c", || {
            format!("x(y + z) = {point}, ab + ac = {split}")
        }),
        ensure(
            matches!(
                whole.relation(&split),
                crate::external::SetRelation::Equal | crate::external::SetRelation::ProperSubset
            ),
            "a(b + c) is contained in ab + ac",
            || format!("a(b + c) = {whole}, ab + ac = {split}"),
        ),
    ])
}

fn gen_trichotomy(g: &mut Gen<'_>) -> Vec<X> {
    let a = g.external();
    let b = match g.below(3) {
        0 => X::new(g.member(&a), g.neutrix()),
        _ => g.external(),
    };
    let (ma, mb) = (pre(g.member(&a)), pre(g.member(&b)));
    vec![a, b, ma, mb]
}

fn trichotomy(v: &[X]) -> Outcome {
    use crate::external::SetRelation::*;
    let (a, b) = (&v[0], &v[1]);
    let (x, y) = (v[2].rep(), v[3].rep());
    if !(a.contains(x) && b.contains(y)) {
        return Outcome::Vacuous;
    }
    let rel = a.relation(b);
    let show = || format!("relation {rel:?}, x = {x}, y = {y}");
    let law = "two external numbers are disjoint or one contains the other";
    match rel {
        Disjoint => ensure(!b.contains(x) && !a.contains(y), law, show),
        Equal => ensure(b.contains(x) && a.contains(y) && a == b, law, show),
        ProperSubset => ensure(b.contains(x) && a.nx() < b.nx(), law, show),
        ProperSuperset => ensure(a.contains(y) && a.nx() > b.nx(), law, show),
    }
}

fn gen_three_cases(g: &mut Gen<'_>) -> Vec<X> {
    let b = if g.chance(0.8) {
        let n = g.nonzero_neutrix();
        X::new(g.precise(), n)
    } else {
        pre(g.precise())
    };
    vec![b]
}

fn three_cases(v: &[X]) -> Outcome {
    let b = &v[0];
    let hs: Vec<Halfline> = Kind::ALL
        .iter()
        .map(|&k| Halfline::lower(k, b.clone()))
        .collect();
    if b.is_precise() {
        return all(probes(b).into_iter().map(|p| {
            let x = pre(p);
            ensure(
                hs[1].contains(&x) == hs[2].contains(&x),
                "open and strongly open coincide for a precise bound",
                || format!("x = {x}"),
            )
        }));
    }
    let mut parts = Vec::new();
    for i in 0..3 {
        for k in i + 1..3 {
            let (h1, h2) = (&hs[i], &hs[k]);
            let w = crate::halfline::separating_element(h1, h2);
            parts.push(ensure(
                w.as_ref()
                    .is_some_and(|w| h1.contains(w) != h2.contains(w)),
                "the three kinds of lower halfline with a common bound are distinct",
                || format!("{h1} and {h2}"),
            ));
        }
    }
    all(parts)
}

fn gen_lemma_rational(g: &mut Gen<'_>) -> Vec<X> {
    let n = g.nonzero_neutrix();
    let p = g.precise();
    // keep the raw representative next to the canonical number
    vec![X::new(p.clone(), n), pre(p)]
}

fn lemma_rational(v: &[X]) -> Outcome {
    let (x, raw) = (&v[0], &v[1]);
    if x.is_precise() || !raw.is_precise() || !x.contains(raw.rep()) {
        return Outcome::Vacuous;
    }
    let rep = x.rep();
    all([
        ensure(
            rep.as_poly().is_some(),
            "a non-precise number is q + N with q a rho-polynomial",
            || format!("representative {rep}"),
        ),
        eq(&(&pre(rep.clone()) + &e(x)), x, "x = q + e(x)"),
        eq(&X::new(raw.rep().clone(), x.nx().clone()), x, "canonical form is unique"),
    ])
}

fn gen_shadow(g: &mut Gen<'_>) -> Vec<X> {
    let mut v: Vec<X> = (0..3).map(|_| pre(g.limited_precise())).collect();
    let d: X = pre(g.member(&oslash()));
    v.push(d);
    v
}

fn shadow_field(v: &[X]) -> Outcome {
    if !v.iter().all(|t| t.is_precise() && t.is_limited()) || !oslash().contains(v[3].rep()) {
        return Outcome::Vacuous;
    }
    let sh = |t: &X| t.shadow().expect("limited");
    let (x, y, z) = (sh(&v[0]), sh(&v[1]), sh(&v[2]));
    let zero = oslash();
    let one = &X::one() + &zero;
    let moved = sh(&(&v[0] + &v[3]));
    let mut parts = vec![
        eq(&moved, &x, "shadow does not depend on the representative"),
        eq(&sh(&(&v[0] + &v[1])), &(&x + &y), "shadow(p + q) = shadow(p) + shadow(q)"),
        eq(&sh(&(&v[0] * &v[1])), &(&x * &y), "shadow(pq) = shadow(p) shadow(q)"),
        eq(&(&x + &(&y + &z)), &(&(&x + &y) + &z), "x + (y + z) = (x + y) + z"),
        eq(&(&x * &(&y * &z)), &(&(&x * &y) * &z), "x(yz) = (xy)z"),
        eq(&(&x + &y), &(&y + &x), "x + y = y + x"),
        eq(&(&x * &y), &(&y * &x), "xy = yx"),
        eq(&(&x + &zero), &x, "x + o = x"),
        eq(&(&x * &one), &x, "x(1 + o) = x"),
        eq(&(&x + &-&x), &zero, "x + (-x) = o"),
        eq(&(&x * &(&y + &z)), &(&(&x * &y) + &(&x * &z)), "x(y + z) = xy + xz"),
        ensure(
            (le(&x, &y) || le(&y, &x)) && (!le(&zero, &x) || !le(&zero, &y) || le(&zero, &(&x * &y))),
            "shadows are totally ordered and nonnegatives are closed under products",
            || format!("x = {x}, y = {y}"),
        ),
        if le(&x, &y) {
            ensure(le(&(&x + &z), &(&y + &z)), "x <= y implies x + z <= y + z", || {
                format!("x = {x}, y = {y}, z = {z}")
            })
        } else {
            Outcome::Vacuous
        },
    ];
    if x != zero {
        let inv = x.ext_inv().expect("shadow is zeroless");
        parts.push(eq(&(&x * &inv), &one, "x (1/x) = 1 + o"));
        parts.push(eq(&sh(&pre(v[0].rep().recip().expect("nonzero"))), &inv, "1/x is a shadow"));
    }
    all(parts)
}

fn unity_product(v: &[X]) -> Outcome {
    let (x, y) = (&v[0], &v[1]);
    if !x.is_zeroless() || !y.is_zeroless() {
        return Outcome::Vacuous;
    }
    eq(&u(&(x * y)), &(&u(x) * &u(y)), "u(xy) = u(x)u(y)")
}

fn inverse_contract(v: &[X]) -> Outcome {
    let b = &v[0];
    if !b.is_zeroless() {
        return Outcome::Vacuous;
    }
    let inv = b.ext_inv().expect("zeroless");
    let scaled = b
        .nx()
        .scale_or_zero(&b.rep().recip().expect("zeroless has nonzero representative"));
    all([
        eq(&(b * &inv), &u(b), "b (1/b) = u(b)"),
        eq(&e(&u(b)), &nx(scaled), "e(u(b)) = e(b)/b"),
    ])
}

fn gen_pairs_with_members(g: &mut Gen<'_>) -> Vec<X> {
    let a = g.external();
    let b = g.external();
    let x = pre(g.member(&a));
    let y = pre(g.member(&b));
    vec![a, b, x, y]
}

fn minkowski(v: &[X]) -> Outcome {
    let (a, b) = (&v[0], &v[1]);
    let (x, y) = (v[2].rep(), v[3].rep());
    if !(a.contains(x) && b.contains(y)) {
        return Outcome::Vacuous;
    }
    let (s, p) = (a + b, a * b);
    all([
        ensure(s.contains(&(x + y)), "x + y in a + b", || format!("x + y = {}", x + y)),
        ensure(p.contains(&(x * y)), "x y in a b", || format!("x y = {}", x * y)),
    ])
}

// ---------------------------------------------------------------------------

macro_rules! check {
    ($id:literal, $kind:ident, $st:literal, [$($n:literal),*], $gen:expr, $pred:expr) => {
        Check {
            id: $id,
            kind: CheckKind::$kind,
            statement: $st,
            names: &[$($n),*],
            gen: $gen,
            pred: $pred,
        }
    };
}

static CATALOG: &[Check] = &[
    check!("axiom.add_assoc", Axiom, "x + (y + z) = (x + y) + z", ["x", "y", "z"], g3, add_assoc),
    check!("axiom.add_comm", Axiom, "x + y = y + x", ["x", "y"], g2, add_comm),
    check!("axiom.add_neutral", Axiom, "for all x there is e with x + e = x and e + f = e whenever x + f = x", ["x", "f"], gen_add_neutral, add_neutral),
    check!("axiom.add_symmetric", Axiom, "for all x there is s with x + s = e(x) and e(s) = e(x)", ["x"], g1, add_symmetric),
    check!("axiom.add_magnitude_linear", Axiom, "e(x + y) = e(x) or e(x + y) = e(y)", ["x", "y"], g2, add_magnitude_linear),
    check!("axiom.mul_assoc", Axiom, "x(yz) = (xy)z", ["x", "y", "z"], g3, mul_assoc),
    check!("axiom.mul_comm", Axiom, "xy = yx", ["x", "y"], g2, mul_comm),
    check!("axiom.mul_neutral", Axiom, "for x != e(x) there is u with xu = x and uv = u whenever xv = x", ["x", "v"], gen_mul_neutral, mul_neutral),
    check!("axiom.mul_symmetric", Axiom, "for x != e(x) there is d with xd = u(x) and u(d) = u(x)", ["x"], g_zeroless, mul_symmetric),
    check!("axiom.mul_unity_linear", Axiom, "u(xy) = u(x) or u(xy) = u(y)", ["x", "y"], g_zeroless2, mul_unity_linear),
    check!("axiom.order_reflexive", Axiom, "x <= x", ["x"], g1, order_reflexive),
    check!("axiom.order_antisymmetric", Axiom, "x <= y and y <= x imply x = y", ["x", "y"], gen_antisymmetric, order_antisymmetric),
    check!("axiom.order_transitive", Axiom, "x <= y and y <= z imply x <= z", ["x", "y", "z"], g_sorted3, order_transitive),
    check!("axiom.order_total", Axiom, "x <= y or y <= x", ["x", "y"], g2, order_total),
    check!("axiom.order_add_compat", Axiom, "x <= y implies x + z <= y + z", ["x", "y", "z"], g_sorted2, order_add_compat),
    check!("axiom.magnitude_bound", Axiom, "y + e(x) = e(x) implies y <= e(x) and -y <= e(x)", ["x", "y"], gen_magnitude_bound, magnitude_bound),
    check!("axiom.order_mul_compat", Axiom, "e(x) < x and y <= z imply xy <= xz", ["x", "y", "z"], gen_mul_compat, order_mul_compat),
    check!("axiom.amplification", Axiom, "e(y) <= y <= z implies e(x)y <= e(x)z", ["x", "y", "z"], gen_amplification, amplification),
    check!("axiom.scale", Axiom, "for all x, y there is z with e(x)y = e(z)", ["x", "y"], g2, scale),
    check!("axiom.product_magnitude", Axiom, "e(xy) = e(x)y + e(y)x", ["x", "y"], g2, product_magnitude),
    check!("axiom.unity_magnitude", Axiom, "x != e(x) implies e(u(x)) = e(x)/x", ["x"], g_zeroless, unity_magnitude),
    check!("axiom.distributivity", Axiom, "xy + xz = x(y + z) + e(x)y + e(x)z", ["x", "y", "z"], g_cancel, distributivity),
    check!("axiom.neg_product", Axiom, "-(xy) = (-x)y", ["x", "y"], g2, neg_product),
    check!("axiom.zero", Axiom, "there is m with m + x = x for all x", ["x"], g1, exists_zero),
    check!("axiom.one", Axiom, "there is u with ux = x for all x", ["x"], g1, exists_one),
    check!("axiom.max", Axiom, "there is M with e(x) + M = M for all x", ["x"], g1, exists_max),
    check!("axiom.nontrivial_magnitude", Axiom, "there is x with e(x) != 0 and e(x) != M", ["x"], g1, nontrivial_magnitude),
    check!("axiom.decomposition", Axiom, "for all x there is a with x = a + e(x) and e(a) = 0", ["x"], g1, decomposition),
    check!("axiom.separation", Axiom, "magnitudes x < y have a zeroless z with x < z < y", ["x", "y"], gen_separation, separation),
    check!("axiom.maximal_ideal", Axiom, "xy = x for y idempotent, 1 < y and x its maximal ideal", ["y", "z"], gen_maximal_ideal, maximal_ideal),
    check!("axiom.scale_to_ring", Axiom, "every magnitude is p y with p precise and y idempotent", ["x"], gen_magnitude, scale_to_ring),
    check!("axiom.dedekind", Scheme, "a represented lower halfline of precise elements is bounded by x <= sigma or by a hole tau", ["b", "c", "d", "k"], gen_dedekind, dedekind),
    check!("axiom.naturals", Arithmetic, "N contains 0, is closed under successor, sum and product, and is discrete", ["x", "y", "z"], gen_naturals, naturals_axioms),
    check!("axiom.induction", Arithmetic, "A(0) and A(x) -> A(x + 1) give A(x), for the catalog formulas", ["x", "y", "z"], gen_naturals, induction),
    check!("axiom.archimedean", Arithmetic, "0 < x < y gives a natural n with n x > y", ["x", "y"], gen_archimedean, archimedean),
    check!("thm.oslash_lt_one_lt_pound", Theorem, "0 < o < 1 < L < M", [], g_none, oslash_lt_one_lt_pound),
    check!("thm.no_magnitude_between", Theorem, "no magnitude lies strictly between o and L", ["m"], gen_magnitude, no_magnitude_between),
    check!("thm.lemma_l_lt_p", Theorem, "L < p iff 1/p < o, o < p iff 1/p < L, and the root and square bounds", ["p", "s"], gen_two_positive, lemma_l_lt_p),
    check!("thm.oslash_oslash", Theorem, "o o = o", [], g_none, oslash_oslash),
    check!("thm.pound_pound", Theorem, "L L = L", [], g_none, pound_pound),
    check!("thm.oslash_pound", Theorem, "o L = o", [], g_none, oslash_pound),
    check!("thm.max_ideal", Theorem, "the maximal ideal of J is sup{1/w : J < |w|}", ["J", "w"], gen_max_ideal, max_ideal),
    check!("thm.product_idempotents", Theorem, "for idempotents e <= f: ef = e if f < 1 or e <= I, else ef = f", ["e", "f"], gen_idempotents, product_idempotents),
    check!("thm.unicity_idempotent", Theorem, "e = pI = qJ with I, J idempotent implies I = J", ["e", "q", "J"], gen_unicity, unicity_idempotent),
    check!("thm.pf_or_eq", Theorem, "ef = pf or ef = pe for a positive precise p", ["e", "f"], g_mag2, pf_or_eq),
    check!("thm.consistency_order", Theorem, "order of pJ, IJ, qJ and Ip, IJ, Iq for the maximal ideal I of J", ["J", "p", "q"], gen_consistency, consistency_order),
    check!("thm.consistency_sup", Theorem, "IJ = sup{pJ : |p| < I} = max{Iq : |q| < J}, J = inf{pI : J < p} = min{qJ : I < q}", ["J", "p"], gen_consistency_sup, consistency_sup),
    check!("thm.formula_dist_total", Theorem, "ab + ac = a(b + c) + Ab + Ac", ["a", "b", "c"], g_cancel, distributivity),
    check!("thm.subdistributivity", Theorem, "a(b + c) is contained in ab + ac", ["a", "b", "c", "x", "y", "z"], gen_members3, subdistributivity),
    check!("thm.trichotomy", Theorem, "two external numbers are disjoint or one contains the other", ["a", "b", "x", "y"], gen_trichotomy, trichotomy),
    check!("thm.three_cases", Theorem, "closed, open and strongly open lower halflines with a common bound are distinct", ["b"], gen_three_cases, three_cases),
    check!("thm.lemma_rational", Theorem, "every non-precise number is q + N with q a rho-polynomial", ["x", "p"], gen_lemma_rational, lemma_rational),
    check!("thm.shadow_field", Theorem, "shadows of limited precise elements form an ordered field", ["p", "q", "r", "d"], gen_shadow, shadow_field),
    check!("thm.unity_product", Theorem, "u(xy) = u(x)u(y)", ["x", "y"], g_zeroless2, unity_product),
    check!("thm.inverse", Theorem, "b (1/b) = u(b) and e(u(b)) = e(b)/b", ["b"], g_zeroless, inverse_contract),
    check!("thm.minkowski", Theorem, "sums and products of members lie in the sum and product", ["a", "b", "x", "y"], gen_pairs_with_members, minkowski),
    check!("axiom.distributivity_naive", Mutant, "xy + xz = x(y + z)", ["x", "y", "z"], g_cancel, distributivity_naive),
    check!("mutant.nx_mul_pound", Mutant, "xy = x for the maximal ideal x of y, with o L = L", ["y", "z"], gen_maximal_ideal, maximal_ideal_mutant),
    check!("mutant.oslash_pound", Mutant, "o L = o, with o L = L", [], g_none, mutant_oslash_pound),
];
