//! Catalogued identities. Each evaluator returns the two sides of every
//! equality it asserts; arguments are named `X, Y, Z, V` in order.

use nalgebra::{DMatrix, DVector};

use super::{Evaluator, IdentityRecord, Pair, RowKind, Val};
use crate::kernel::forms::{eval_form, wedge};
use crate::spectral::spectrum_of;
use crate::structure::Hypothesis::{self, *};
use crate::structure::StructurePoint;

type V = DVector<f64>;
type S = StructurePoint;

const fn rec(id: &'static str, hypothesis: Hypothesis, arity: usize, anchor: &'static str, eval: Evaluator) -> IdentityRecord {
    IdentityRecord { id, hypothesis, arity, needs_fields: false, kind: RowKind::Statement, anchor, erratum: None, eval }
}

const fn axiom(id: &'static str, hypothesis: Hypothesis, arity: usize, anchor: &'static str, eval: Evaluator) -> IdentityRecord {
    IdentityRecord { kind: RowKind::Structure, ..rec(id, hypothesis, arity, anchor, eval) }
}

const fn chain(id: &'static str, arity: usize, anchor: &'static str, eval: Evaluator) -> IdentityRecord {
    IdentityRecord { kind: RowKind::ProofChain, ..rec(id, H1, arity, anchor, eval) }
}

/// Derivation steps towards the second-order conclusions, which assume both
/// extra conditions.
const fn chain_h3(id: &'static str, arity: usize, anchor: &'static str, eval: Evaluator) -> IdentityRecord {
    IdentityRecord { hypothesis: H3, ..chain(id, arity, anchor, eval) }
}

const fn with_erratum(r: IdentityRecord, note: &'static str) -> IdentityRecord {
    IdentityRecord { erratum: Some(note), ..r }
}

const fn with_fields(r: IdentityRecord) -> IdentityRecord {
    IdentityRecord { needs_fields: true, ..r }
}

fn sc(l: f64, r: f64) -> Pair {
    (Val::S(l), Val::S(r))
}

fn vc(l: V, r: V) -> Pair {
    (Val::V(l), Val::V(r))
}

fn zero(s: &S) -> V {
    DVector::zeros(s.dim())
}

/// `(h − φ)²X`.
fn hp2(s: &S, x: &V) -> V {
    s.hp(&s.hp(x))
}

/// `g((∇²_{X,Y} φ)Z, V)`.
fn n2g(s: &S, x: &V, y: &V, z: &V, v: &V) -> f64 {
    s.g(&s.n2phi(x, y, z), v)
}

/// Covariant derivative along `V` of `(X, Y, Z) ↦ η(Z) g((h − φ)X, QY)`.
fn nabla_eta_hp_q(s: &S, v: &V, x: &V, y: &V, z: &V) -> f64 {
    s.nabla_eta(v, z) * s.g(&s.hp(x), &s.q(y))
        + s.eta(z) * (s.g(&s.nhp(v, x), &s.q(y)) + s.g(&s.hp(x), &s.nq(v, y)))
}

// ---------------------------------------------------------------- structure

fn ax1(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    vec![sc(s.g(&s.phi(x), &s.phi(y)), s.g(x, &s.q(y)) - s.eta(x) * s.eta(y))]
}

fn ax2(s: &S, _: &[V]) -> Vec<Pair> {
    vec![sc(s.eta(s.xi()), 1.0), vc(s.phi(s.xi()), zero(s))]
}

fn ax3(s: &S, a: &[V]) -> Vec<Pair> {
    vec![sc(s.eta(&s.phi(&a[0])), 0.0)]
}

fn ax4(s: &S, a: &[V]) -> Vec<Pair> {
    let x = &a[0];
    vec![sc(s.eta(&s.q(x)), s.eta(x)), sc(s.eta(x), s.g(s.xi(), x))]
}

fn ax5(s: &S, a: &[V]) -> Vec<Pair> {
    let x = &a[0];
    vec![vc(s.q(&s.phi(x)), s.phi(&s.q(x)))]
}

fn ax6(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    vec![sc(s.g(&s.phi(x), y), -s.g(x, &s.phi(y))), sc(s.g(&s.q(x), y), s.g(x, &s.q(y)))]
}

fn ric1(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    vec![sc(n2g(s, x, y, z, v) - n2g(s, y, x, z, v), s.rg(x, y, &s.phi(z), v) + s.rg(x, y, z, &s.phi(v)))]
}

fn ns0(s: &S, a: &[V]) -> Vec<Pair> {
    let (y, z) = (&a[0], &a[1]);
    vec![vc(s.nphi(y, z) + s.nphi(z, y), s.xi() * (2.0 * s.g(y, z)) - y * s.eta(z) - z * s.eta(y))]
}

fn ns_skew(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    vec![sc(s.g(&s.nphi(y, v), z), -s.g(&s.nphi(y, z), v)), sc(n2g(s, x, y, v, z), -n2g(s, x, y, z, v))]
}

fn geo1(s: &S, _: &[V]) -> Vec<Pair> {
    vec![vc(s.nabla_xi(s.xi()), zero(s))]
}

fn kill1(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    vec![sc(s.g(&s.nabla_xi(x), y) + s.g(&s.nabla_xi(y), x), 0.0)]
}

fn h1(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    vec![vc(s.h(s.xi()), zero(s)), sc(s.eta(&s.h(x)), 0.0), sc(s.g(&s.h(x), y), -s.g(x, &s.h(y)))]
}

fn h_skew(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    vec![sc(s.g(&s.nh(x, y), z), -s.g(y, &s.nh(x, z)))]
}

fn sas(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    vec![vc(s.nphi(x, y), s.xi() * s.g(x, y) - x * s.eta(y))]
}

fn normal(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    vec![vc(s.nijenhuis(x, y) + s.xi() * (2.0 * s.d_eta(x, y)), zero(s))]
}

fn wc1(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    vec![sc(s.d_eta(x, y), s.g(x, &s.phi(y)))]
}

// ---------------------------------------------------------- first-order facts

fn l1a(s: &S, a: &[V]) -> Vec<Pair> {
    let x = &a[0];
    vec![vc(s.nh(x, s.xi()), -s.h(&s.hp(x)))]
}

fn l1b(s: &S, a: &[V]) -> Vec<Pair> {
    let x = &a[0];
    vec![vc(s.h(&s.phi(x)) + s.phi(&s.h(x)), s.qt(x) * -2.0)]
}

fn l1c(s: &S, a: &[V]) -> Vec<Pair> {
    let x = &a[0];
    vec![vc(s.nphi(x, s.xi()), -s.phi(&s.hp(x)))]
}

fn l1d(s: &S, a: &[V]) -> Vec<Pair> {
    let x = &a[0];
    vec![vc(s.h(&s.q(x)), s.q(&s.h(x)))]
}

fn l1e(s: &S, a: &[V]) -> Vec<Pair> {
    let x = &a[0];
    let h2 = |v: &V| s.h(&s.h(v));
    let p2 = |v: &V| s.phi(&s.phi(v));
    vec![vc(h2(&s.phi(x)), s.phi(&h2(x))), vc(s.h(&p2(x)), p2(&s.h(x))), vc(h2(&p2(x)), p2(&h2(x)))]
}

fn qpar1(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &s.project_ker(&a[1]));
    vec![vc(s.nq(x, y), zero(s))]
}

fn qpar2(s: &S, a: &[V]) -> Vec<Pair> {
    vec![vc(s.nq(s.xi(), &a[0]), zero(s))]
}

fn ci_args(s: &S, a: &[V]) -> (V, V, V) {
    (s.project_ker(&a[0]), s.project_ker(&a[1]), s.project_ker(&a[2]))
}

fn ci1(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = ci_args(s, a);
    vec![sc(s.eta(&s.r(&s.qt(&x), &y, &z)), 0.0)]
}

fn ci2(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = ci_args(s, a);
    vec![sc(s.eta(&s.r(&x, &y, &z)), 0.0)]
}

fn ci3(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = ci_args(s, a);
    vec![sc(s.eta(&s.r(&x, &y, &s.qt(&z))), 0.0)]
}

fn l2a(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    let hx = hp2(s, x);
    vec![
        vc(s.r(x, s.xi(), y), s.nhp(x, y)),
        vc(s.nhp(x, y), s.xi() * s.g(&hx, y) - &hx * s.eta(y)),
    ]
}

fn l2b(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let hx = hp2(s, x);
    vec![sc(s.rg(s.xi(), x, y, z), s.eta(y) * s.g(&hx, z) - s.eta(z) * s.g(&hx, y))]
}

fn l2c(s: &S, a: &[V]) -> Vec<Pair> {
    let x = &a[0];
    let xi = s.xi();
    vec![vc(s.nh(xi, x), s.nphi(xi, x)), vc(s.nphi(xi, x), s.phi(&s.h(x)) + s.qt(x))]
}

fn l3a(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let lhs = s.g(&s.nphi(x, &s.phi(y)), z);
    let rhs = s.g(&s.nphi(x, y), &s.phi(z)) + s.eta(y) * s.g(&s.hp(x), z) + s.eta(z) * s.g(&s.hp(x), &s.q(y));
    vec![sc(lhs, rhs)]
}

fn l3b(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let px = s.phi(x);
    let lhs = s.g(&s.nphi(&px, y), z);
    let rhs = s.g(&s.nphi(x, y), &s.phi(z)) - s.eta(x) * s.g(&s.h(y), z) - 2.0 * s.eta(y) * s.g(&px, z)
        + 2.0 * s.eta(z) * s.g(&px, y)
        - s.eta(z) * s.g(&s.q(x), &s.hp(y));
    vec![sc(lhs, rhs)]
}

fn l3c(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let px = s.phi(x);
    let lhs = s.g(&s.nphi(&px, &s.phi(y)), z);
    let rhs = -s.g(&s.nphi(x, y), &s.q(z))
        + s.eta(x) * s.g(y, &s.h(&s.phi(z)))
        + s.eta(y) * s.g(&(s.h(&px) + s.phi(&px)), z)
        + s.eta(z) * s.g(&s.phi(&s.hp(x)), y)
        + s.eta(z) * s.g(&s.hp(&px), &s.q(y));
    vec![sc(lhs, rhs)]
}

// ----------------------------------------------------------- curvature facts

fn l4a(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let lhs = s.rg(&s.phi(x), y, z, v) + s.rg(x, &s.phi(y), z, v) + s.rg(x, y, &s.phi(z), v) + s.rg(x, y, z, &s.phi(v));
    let rhs = s.g(y, v) * s.g(&s.hp(x), z) - s.g(x, y) * s.g(z, &s.hp(v)) + s.g(y, z) * s.g(x, &s.hp(v))
        - 0.5 * s.g(z, v) * s.g(&s.hp(x), y)
        + 0.5 * s.g(x, z) * s.g(y, &s.hp(v));
    vec![sc(lhs, rhs)]
}

/// Tail shared by the `φX, φY` curvature reductions.
fn l4b_rhs(s: &S, x: &V, y: &V, z: &V, v: &V) -> f64 {
    let (pz, pv) = (s.phi(z), s.phi(v));
    s.rg(x, y, &pz, &pv) - 0.5 * s.delta(x, y, z, v) - s.g(x, y) * s.g(z, &s.qt(v))
        + 0.5 * s.g(y, v) * s.g(&s.phi(&s.hp(x)), z)
        - 0.5 * s.g(y, &pz) * s.g(x, &s.hp(v))
        - 0.5 * s.g(y, &pv) * s.g(&s.hp(x), z)
        - 0.5 * s.g(y, z) * s.g(x, &s.hp(&pv))
        - 0.25 * s.g(x, &pz) * s.g(y, &s.hp(v))
        - 0.25 * s.g(x, z) * s.g(y, &s.hp(&pv))
}

fn l4b(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    vec![sc(s.rg(&s.phi(x), &s.phi(y), z, v), l4b_rhs(s, x, y, z, v))]
}

/// Right side of the `R(φX, φY, φZ, φV)` reduction, without the leading
/// curvature terms.
fn l4c_tail(s: &S, x: &V, y: &V, z: &V, v: &V) -> f64 {
    let (px, py, pv) = (s.phi(x), s.phi(y), s.phi(v));
    let (ppx, ppy) = (s.phi(&px), s.phi(&py));
    let pz = s.phi(z);
    0.5 * s.g(&py, v) * s.g(&s.hp(&px), &pz) + 0.5 * s.g(&ppy, z) * s.g(x, &s.phi(&s.hp(v)))
        - 0.5 * s.g(&ppy, v) * s.g(&s.hp(&px), z)
        + 0.5 * s.g(&py, z) * s.g(&px, &s.hp(&pv))
        + 0.25 * s.g(&ppx, z) * s.g(y, &s.phi(&s.hp(v)))
        + 0.25 * s.g(&px, z) * s.g(&py, &s.hp(&pv))
}

fn l4c(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py) = (s.phi(x), s.phi(y));
    let lhs = s.rg(&px, &py, &s.phi(z), &s.phi(v));
    let rhs = s.rg(&s.q(x), &s.q(y), z, v) - s.eta(x) * s.rg(s.xi(), &s.q(y), z, v)
        + s.eta(y) * s.rg(s.xi(), &s.q(x), z, v)
        + l4c_tail(s, x, y, z, v)
        - s.g(&s.phi(&px), y) * s.g(z, &s.qt(v))
        + 0.5 * s.delta(&px, &py, z, v);
    vec![sc(lhs, rhs)]
}

fn dlt1(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let d = s.delta(x, y, z, v);
    vec![sc(s.delta(y, x, z, v), -d), sc(s.delta(x, y, v, z), -d), sc(s.delta(z, v, x, y), -d)]
}

fn dlt2(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let xi = s.xi();
    vec![
        sc(s.delta(xi, x, y, z), 0.0),
        sc(s.delta(x, xi, y, z), 0.0),
        sc(s.delta(x, y, xi, z), 0.0),
        sc(s.delta(x, y, z, xi), 0.0),
    ]
}

// ------------------------------------------------ second-order conclusions

fn l5a(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    vec![sc(s.g(&s.nphi(x, y), &s.h(z)), l5_rhs(s, x, y, z))]
}

/// `−η(X)g((φh² + Q̃h)Z, Y) + η(Y)g((φh² − h + Q̃h)Z, X)`.
fn l5_rhs(s: &S, x: &V, y: &V, z: &V) -> f64 {
    let hz = s.h(z);
    let c1 = s.phi(&s.h(&hz)) + s.qt(&hz);
    let c2 = &c1 - &hz;
    -s.eta(x) * s.g(&c1, y) + s.eta(y) * s.g(&c2, x)
}

fn pc_fin(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let qz = s.q(z);
    vec![sc(s.g(&s.nphi(x, y), &s.h(&qz)), l5_rhs(s, x, y, &qz))]
}

fn p2a(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    let phx = s.phi(&s.h(x)) + s.q(x);
    let rhs = (s.phi(&s.h(y)) + s.qt(y)) * s.eta(x) - &phx * s.eta(y) + s.xi() * s.g(&phx, y);
    vec![vc(s.nphi(x, y), rhs)]
}

fn p2b(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    let hhx = s.h(&s.hp(x));
    let rhs = (s.phi(&s.h(y)) + s.qt(y)) * s.eta(x) - &hhx * s.eta(y) + s.xi() * s.g(&hhx, y);
    vec![vc(s.nh(x, y), rhs)]
}

fn p2c(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    let phh = |v: &V| s.phi(&s.h(&s.h(v)));
    let ex = phh(y) - s.h(y) + s.qt(&s.phi(y));
    let ey = phh(x) - s.q(&s.h(x)) + s.qt(&s.phi(x)) * 2.0;
    let ez = phh(x) - s.h(x) + s.qt(&s.h(x));
    let rhs = ex * s.eta(x) - ey * s.eta(y) + s.xi() * s.g(&ez, y);
    vec![vc(s.nphih(x, y), rhs)]
}

fn p2d(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y) = (&a[0], &a[1]);
    let p0 = match spectrum_of(s) {
        Ok(spec) => spec.p0(),
        Err(_) => return vec![sc(f64::NAN, 0.0)],
    };
    let v = p0 * &a[2];
    vec![sc(s.g(&s.nphi(x, y), &v), -s.eta(y) * s.g(x, &v))]
}

// ----------------------------------------------------- 2-forms and their d

/// `(η ∧ β)(X, Y, Z)` for the 2-form `β(U, W) = g(AU, W)` (antisymmetrised).
fn eta_wedge(s: &S, a: &DMatrix<f64>, args: &[&V]) -> f64 {
    match wedge(&s.eta_form(), &s.two_form_of(a)) {
        Ok(w) => eval_form(&w, args),
        Err(_) => f64::NAN,
    }
}

fn tf1(s: &S, a: &[V]) -> Vec<Pair> {
    let args = [&a[0], &a[1], &a[2]];
    let phi1_psi0 = s.phi_matrix() * s.h_matrix() + s.qt_matrix();
    vec![sc(eval_form(&s.d_phi0(), &args), eta_wedge(s, &phi1_psi0, &args))]
}

fn tf2(s: &S, a: &[V]) -> Vec<Pair> {
    let args = [&a[0], &a[1], &a[2]];
    let (phi, h, qt) = (s.phi_matrix(), s.h_matrix(), s.qt_matrix());
    let b = phi * h * h - h + qt * phi;
    vec![sc(eval_form(&s.d_phi1(), &args), eta_wedge(s, &b, &args))]
}

fn tf3(s: &S, a: &[V]) -> Vec<Pair> {
    let args = [&a[0], &a[1], &a[2]];
    let (phi, h, qt) = (s.phi_matrix(), s.h_matrix(), s.qt_matrix());
    let b = qt * h - qt * phi;
    vec![sc(eval_form(&s.d_psi0(), &args), -eta_wedge(s, &b, &args))]
}

fn tf4(s: &S, a: &[V]) -> Vec<Pair> {
    let args = [&a[0], &a[1], &a[2], &a[3]];
    let b = s.phi_matrix() * s.h_matrix() + s.qt_matrix();
    let lhs = match wedge(&s.d_eta_form(), &s.two_form_of(&b)) {
        Ok(w) => eval_form(&w, &args),
        Err(_) => f64::NAN,
    };
    vec![sc(lhs, 0.0)]
}

// ------------------------------------------------------ derivation steps

fn pc_ef01(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let hx = s.hp(x);
    let lhs = s.n2phi(x, y, z) + s.n2phi(x, z, y);
    let rhs = &hx * (2.0 * s.g(y, z)) - y * s.g(&hx, z) - z * s.g(&hx, y);
    vec![vc(lhs, rhs)]
}

fn pc_37(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let lhs = s.rg(x, y, z, &s.phi(v)) - s.rg(x, y, v, &s.phi(z)) + n2g(s, x, z, y, v) - n2g(s, y, z, x, v);
    let rhs = 2.0 * s.g(y, z) * s.g(&s.hp(x), v) - 2.0 * s.g(x, z) * s.g(&s.hp(y), v)
        - s.g(y, v) * s.g(&s.hp(x), z)
        + s.g(x, v) * s.g(&s.hp(y), z)
        + 2.0 * s.g(z, v) * s.g(&s.hp(y), x);
    vec![sc(lhs, rhs)]
}

fn pc_38(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let pv = s.phi(v);
    let lhs = s.rg(x, y, z, &pv);
    let bianchi = -s.rg(y, z, x, &pv) - s.rg(z, x, y, &pv);
    let ricci = n2g(s, y, z, v, x) - n2g(s, z, y, v, x) - s.rg(y, z, v, &s.phi(x)) - s.rg(z, x, y, &pv);
    vec![sc(lhs, bianchi), sc(lhs, ricci)]
}

/// Terms shared by the two symmetrised forms of the second-derivative step.
fn pc_39_tail(s: &S, x: &V, y: &V, z: &V, v: &V) -> f64 {
    2.0 * s.g(y, z) * s.g(&s.hp(x), v) - 2.0 * s.g(x, z) * s.g(&s.hp(y), v)
        + 2.0 * s.g(z, v) * s.g(&s.hp(y), x)
        - s.g(y, v) * s.g(&s.hp(x), z)
        + s.g(x, v) * s.g(&s.hp(y), z)
}

fn pc_39(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let lhs = s.rg(x, z, y, &s.phi(v)) - s.rg(x, y, v, &s.phi(z)) - s.rg(y, z, v, &s.phi(x))
        - n2g(s, z, y, v, x)
        - n2g(s, x, z, v, y);
    let rhs = 2.0 * n2g(s, y, z, x, v) + pc_39_tail(s, x, y, z, v);
    vec![sc(lhs, rhs)]
}

fn pc_310(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let lhs = s.rg(x, z, y, &s.phi(v)) - s.rg(x, z, v, &s.phi(y)) - n2g(s, x, z, y, v) + n2g(s, z, x, y, v);
    vec![sc(lhs, 0.0)]
}

fn pc_311(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let lhs = 2.0 * s.rg(x, z, y, &s.phi(v)) - s.rg(x, y, v, &s.phi(z)) - s.rg(y, z, v, &s.phi(x))
        - s.rg(x, z, v, &s.phi(y));
    let rhs = 2.0 * n2g(s, y, v, z, x) + pc_39_tail(s, x, y, z, v);
    vec![sc(lhs, rhs)]
}

fn pc_312(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let lhs = 2.0 * s.rg(x, z, v, &s.phi(y)) - s.rg(x, v, y, &s.phi(z)) - s.rg(v, z, y, &s.phi(x))
        - s.rg(x, z, y, &s.phi(v));
    let rhs = 2.0 * n2g(s, v, y, z, x) + 2.0 * s.g(z, v) * s.g(&s.hp(x), y)
        - 2.0 * s.g(x, z) * s.g(&s.hp(v), y)
        + 2.0 * s.g(y, z) * s.g(&s.hp(v), x)
        - s.g(y, v) * s.g(&s.hp(x), z)
        + s.g(x, y) * s.g(&s.hp(v), z);
    vec![sc(lhs, rhs)]
}

fn pc_313(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let px = s.phi(x);
    let lhs = -s.rg(&s.q(x), y, z, v) + s.eta(x) * s.rg(s.xi(), y, z, v) + s.rg(&px, &s.phi(y), z, v)
        + s.rg(&px, y, &s.phi(z), v)
        + s.rg(&px, y, z, &s.phi(v));
    let rhs = s.g(y, v) * s.g(&s.hp(&px), z) - s.g(&px, y) * s.g(z, &s.hp(v)) + s.g(y, z) * s.g(&px, &s.hp(v))
        - 0.5 * s.g(z, v) * s.g(&s.hp(&px), y)
        + 0.5 * s.g(&px, z) * s.g(y, &s.hp(v));
    vec![sc(lhs, rhs)]
}

fn pc_314(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let py = s.phi(y);
    let lhs = s.rg(x, &s.q(y), z, v) + s.eta(y) * s.rg(s.xi(), x, z, v) - s.rg(&s.phi(x), &py, z, v)
        + s.rg(&py, x, &s.phi(z), v)
        + s.rg(&py, x, z, &s.phi(v));
    let rhs = s.g(x, v) * s.g(&s.hp(&py), z) - s.g(&s.phi(x), y) * s.g(z, &s.hp(v))
        - s.g(x, z) * s.g(&py, &s.hp(v))
        - 0.5 * s.g(z, v) * s.g(x, &s.hp(&py))
        + 0.5 * s.g(&py, z) * s.g(x, &s.hp(v));
    vec![sc(lhs, rhs)]
}

fn pc_315(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py, pz, pv) = (s.phi(x), s.phi(y), s.phi(z), s.phi(v));
    let xi = s.xi();
    let lhs = 2.0 * s.rg(&px, &py, z, v) - 2.0 * s.rg(x, y, z, v) + s.eta(x) * s.rg(xi, y, z, v)
        - s.eta(y) * s.rg(xi, x, z, v)
        + s.rg(&px, y, &pz, v)
        - s.rg(&py, x, &pz, v)
        + s.rg(&px, y, z, &pv)
        - s.rg(&py, x, z, &pv)
        - s.rg(&s.qt(x), y, z, v)
        - s.rg(x, &s.qt(y), z, v);
    let rhs = s.g(y, v) * s.g(&s.hp(&px), z) + s.g(y, z) * s.g(&s.hp(v), &px) + s.g(z, v) * s.g(&s.qt(x), y)
        + 0.5 * s.g(&px, z) * s.g(y, &s.hp(v))
        - 0.5 * s.g(&py, z) * s.g(x, &s.hp(v))
        - s.g(x, v) * s.g(&s.hp(&py), z)
        + s.g(x, z) * s.g(y, &s.phi(&s.hp(v)));
    vec![sc(lhs, rhs)]
}

fn pc_316(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (pz, pv) = (s.phi(z), s.phi(v));
    let lhs = -s.rg(x, y, &s.q(z), v);
    let rhs = -s.eta(z) * s.rg(s.xi(), v, x, y) - s.rg(x, y, &pz, &pv) - s.rg(x, &s.phi(y), &pz, v)
        - s.rg(&s.phi(x), y, &pz, v)
        - s.g(y, v) * s.g(&s.phi(&s.hp(x)), z)
        - s.g(x, y) * s.g(&pz, &s.hp(v))
        + s.g(y, &pz) * s.g(x, &s.hp(v))
        - 0.5 * s.g(&pz, v) * s.g(&s.hp(x), y)
        + 0.5 * s.g(x, &pz) * s.g(y, &s.hp(v));
    vec![sc(lhs, rhs)]
}

fn pc_317(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (pz, pv) = (s.phi(z), s.phi(v));
    let lhs = -s.rg(x, y, z, &s.q(v));
    let rhs = s.eta(v) * s.rg(s.xi(), z, x, y) - s.rg(x, y, &pz, &pv) - s.rg(&s.phi(x), y, z, &pv)
        - s.rg(x, &s.phi(y), z, &pv)
        + s.g(y, &pv) * s.g(&s.hp(x), z)
        - s.g(x, y) * s.g(z, &s.hp(&pv))
        + s.g(y, z) * s.g(x, &s.hp(&pv))
        - 0.5 * s.g(z, &pv) * s.g(&s.hp(x), y)
        + 0.5 * s.g(x, z) * s.g(y, &s.hp(&pv));
    vec![sc(lhs, rhs)]
}

fn pc_318(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (pz, pv) = (s.phi(z), s.phi(v));
    let xi = s.xi();
    let lhs = 2.0 * s.rg(&s.phi(x), &s.phi(y), z, v) - 2.0 * s.rg(x, y, &pz, &pv)
        - s.eta(z) * s.rg(xi, v, x, y)
        + s.eta(v) * s.rg(xi, z, x, y)
        + s.eta(x) * s.rg(xi, y, z, v)
        - s.eta(y) * s.rg(xi, x, z, v)
        + s.delta(x, y, z, v)
        - s.g(y, v) * s.g(&s.phi(&s.hp(x)), z)
        + s.g(y, &pz) * s.g(x, &s.hp(v))
        + s.g(y, &pv) * s.g(&s.hp(x), z)
        + s.g(y, z) * s.g(x, &s.hp(&pv))
        + 2.0 * s.g(x, y) * s.g(z, &s.qt(v))
        + 0.5 * s.g(x, &pz) * s.g(y, &s.hp(v))
        + 0.5 * s.g(x, z) * s.g(y, &s.hp(&pv));
    vec![sc(lhs, 0.0)]
}

fn pc_338(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (py, pz, pv) = (s.phi(y), s.phi(z), s.phi(v));
    let lhs = s.rg(x, &pz, &pv, y) - s.rg(x, &pz, &s.phi(&pv), &py);
    let rhs = s.rg(x, &pz, &pv, y) + s.rg(x, &pz, &s.q(v), &py)
        - s.eta(x) * s.eta(v) * s.g(&hp2(s, &py), &pz);
    vec![sc(lhs, rhs)]
}

fn pc_339(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py, pz, pv) = (s.phi(x), s.phi(y), s.phi(z), s.phi(v));
    let lhs = s.rg(x, z, &pv, &py) + s.rg(x, z, &s.phi(&pv), y) + s.rg(x, &pz, &pv, y) + s.rg(&px, z, &pv, y);
    let rhs = -s.g(y, z) * s.g(&s.phi(&s.hp(x)), v) + s.g(x, z) * s.g(&s.phi(&s.hp(y)), v)
        + s.g(z, &pv) * s.g(x, &(s.h(y) - &py))
        - 0.5 * s.g(y, &pv) * s.g(&s.hp(x), z)
        + 0.5 * s.g(x, &pv) * s.g(&s.hp(y), z);
    vec![sc(lhs, rhs)]
}

/// `½δ(φX,Z,V,φY) + g(φX,Z)g(Q̃φY,V) + …`, the tail common to the
/// `R(φX, Z, φV, ·)` reductions.
fn pc_340_tail(s: &S, x: &V, y: &V, z: &V, v: &V) -> f64 {
    let (px, py, pv) = (s.phi(x), s.phi(y), s.phi(v));
    0.5 * s.delta(&px, z, v, &py) + s.g(&px, z) * s.g(&s.qt(&py), v)
        + 0.5 * s.g(&py, z) * s.g(&s.hp(&px), &pv)
        + 0.5 * s.g(z, &pv) * s.g(&px, &s.hp(&py))
        + 0.5 * s.g(&s.phi(&py), z) * s.g(&s.hp(&px), v)
        + 0.5 * s.g(z, v) * s.g(&s.hp(&px), &s.q(y))
        - 0.25 * s.g(&s.phi(&px), v) * s.g(&s.hp(&py), z)
        + 0.25 * s.g(&px, v) * s.g(&s.q(y), &s.hp(z))
}

fn pc_340(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py) = (s.phi(x), s.phi(y));
    let lhs = s.rg(&px, z, &s.phi(v), &s.phi(&py));
    let rhs = s.rg(&s.phi(&px), &s.phi(z), v, &py) + pc_340_tail(s, x, y, z, v);
    vec![sc(lhs, rhs)]
}

fn pc_8bb(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py, pz, pv) = (s.phi(x), s.phi(y), s.phi(z), s.phi(v));
    let lhs = -s.rg(&px, z, &pv, &s.q(y)) + s.eta(y) * s.rg(&px, z, &pv, s.xi());
    let rhs = -s.rg(&s.q(x), &pz, v, &py) + s.eta(x) * s.rg(s.xi(), &pz, v, &py) + pc_340_tail(s, x, y, z, v);
    vec![sc(lhs, rhs)]
}

fn pc_341(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py, pz, pv) = (s.phi(x), s.phi(y), s.phi(z), s.phi(v));
    let lhs = s.rg(&px, z, &pv, y) + s.rg(&s.q(x), &pz, v, &py);
    let rhs = -s.rg(x, z, &pv, &py) - s.rg(x, z, &s.phi(&pv), y) - s.rg(x, &pz, &pv, y)
        + s.rg(&px, z, &pv, &s.q(y))
        - s.eta(y) * s.eta(z) * s.g(&px, &hp2(s, &pv))
        - s.g(y, z) * s.g(&s.phi(&s.hp(x)), v)
        + s.g(x, z) * s.g(&s.phi(&s.hp(y)), v)
        + s.g(z, &pv) * s.g(x, &s.hp(y))
        - 0.5 * s.g(y, &pv) * s.g(&s.hp(x), z)
        + 0.5 * s.g(x, &pv) * s.g(&s.hp(y), z)
        + s.eta(x) * s.eta(v) * s.g(&py, &hp2(s, &pz))
        + pc_340_tail(s, x, y, z, v);
    vec![sc(lhs, rhs)]
}

fn pc_342(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py, pz, pv) = (s.phi(x), s.phi(y), s.phi(z), s.phi(v));
    let lhs = s.rg(x, &pz, &pv, y) - s.rg(x, &pz, &s.phi(&pv), &py);
    let rhs = -s.rg(&s.q(x), &pz, v, &py) - s.rg(x, z, &pv, &py) - s.rg(x, z, &s.phi(&pv), y)
        - s.rg(x, &pz, &pv, y)
        + s.rg(&px, z, &pv, &s.q(y))
        + s.rg(x, &pz, &s.q(v), &py)
        + s.g(y, z) * s.g(&s.hp(x), &pv)
        + s.g(x, z) * s.g(&s.phi(&s.hp(y)), v)
        + s.g(z, &pv) * s.g(x, &s.hp(y))
        - 0.5 * s.g(y, &pv) * s.g(&s.hp(x), z)
        + 0.5 * s.g(x, &pv) * s.g(&s.hp(y), z)
        + 0.5 * s.delta(&px, z, v, &py)
        + s.g(&px, z) * s.g(&s.qt(&py), v)
        - s.eta(y) * s.eta(z) * s.g(&hp2(s, &pv), &px)
        + 0.5 * s.g(&py, z) * s.g(&s.hp(&px), &pv)
        + 0.5 * s.g(z, &pv) * s.g(&px, &(s.h(&py) + s.q(y)))
        + 0.5 * s.g(&s.phi(&py), z) * s.g(&s.hp(&px), v)
        + 0.5 * s.g(z, v) * s.g(&s.hp(&px), &s.q(y))
        - 0.25 * s.g(&s.phi(&px), v) * s.g(&s.hp(&py), z)
        + 0.25 * s.g(&px, v) * s.g(&s.q(y), &s.hp(z));
    vec![sc(lhs, rhs)]
}

fn pc_343(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py, pz, pv) = (s.phi(x), s.phi(y), s.phi(z), s.phi(v));
    let lhs = s.rg(&px, &py, &pz, &pv) - s.rg(x, y, &pz, &pv);
    let rhs = -s.rg(&px, &py, z, v) + s.rg(&s.q(x), &s.q(y), z, v) - s.eta(x) * s.rg(s.xi(), &s.q(y), z, v)
        + s.eta(y) * s.rg(s.xi(), &s.q(x), z, v)
        + l4c_tail(s, x, y, z, v)
        + 0.5 * s.g(y, v) * s.g(&s.phi(&s.hp(x)), z)
        - 0.5 * s.g(y, &pz) * s.g(x, &s.hp(v))
        - 0.5 * s.g(y, &pv) * s.g(&s.hp(x), z)
        - 0.5 * s.g(y, z) * s.g(x, &s.hp(&pv))
        - 0.25 * s.g(x, &pz) * s.g(y, &s.hp(v))
        - 0.25 * s.g(x, z) * s.g(y, &s.hp(&pv))
        - s.g(&(s.phi(&px) + x), y) * s.g(&s.qt(v), z)
        + 0.5 * s.delta(&px, &py, z, v)
        - 0.5 * s.delta(x, y, z, v);
    vec![sc(lhs, rhs)]
}

/// `g((∇_Vφ)Y, (∇_Xφ)Z) + g((∇_Xφ)Y, (∇_Vφ)Z)`.
fn pair_nphi(s: &S, x: &V, y: &V, z: &V, v: &V) -> f64 {
    s.g(&s.nphi(v, y), &s.nphi(x, z)) + s.g(&s.nphi(x, y), &s.nphi(v, z))
}

fn pc_332(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let rhs = n2g(s, v, x, &s.phi(y), z) + n2g(s, v, x, &s.phi(z), y) - s.g(y, &s.hp(v)) * s.g(&s.hp(x), z)
        - s.eta(y) * s.g(&s.nhp(v, x), z)
        - nabla_eta_hp_q(s, v, x, y, z);
    vec![sc(pair_nphi(s, x, y, z, v), rhs)]
}

fn pc_4a(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (py, pz) = (s.phi(y), s.phi(z));
    let lhs = n2g(s, v, x, &py, z);
    let mid = n2g(s, v, &py, z, x) + 2.0 * s.g(x, &py) * s.g(z, &s.hp(v)) + s.g(x, z) * s.g(y, &s.phi(&s.hp(v)))
        - s.g(&py, z) * s.g(x, &s.hp(v));
    let rhs = -s.rg(x, z, v, &s.q(y)) - s.eta(y) * s.rg(s.xi(), v, x, z)
        + 1.5 * s.g(x, &py) * s.g(z, &s.hp(v))
        + s.g(z, v) * s.g(&s.phi(&s.hp(x)), y)
        + 0.5 * s.g(&py, v) * s.g(&s.hp(x), z)
        - 0.5 * s.rg(x, v, &py, &pz)
        - 0.5 * s.rg(v, z, &py, &s.phi(x))
        - 0.5 * s.rg(x, z, &py, &s.phi(v));
    vec![sc(lhs, mid), sc(lhs, rhs)]
}

fn pc_4aa(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (py, pz) = (s.phi(y), s.phi(z));
    let lhs = n2g(s, v, x, &pz, y);
    let mid = n2g(s, v, &pz, y, x) + 2.0 * s.g(x, &pz) * s.g(y, &s.hp(v)) + s.g(x, y) * s.g(z, &s.phi(&s.hp(v)))
        - s.g(y, &pz) * s.g(x, &s.hp(v));
    let rhs = -s.rg(x, y, v, &s.q(z)) - s.eta(z) * s.rg(s.xi(), v, x, y)
        + 1.5 * s.g(x, &pz) * s.g(y, &s.hp(v))
        + s.g(y, v) * s.g(&s.phi(&s.hp(x)), z)
        + 0.5 * s.g(&pz, v) * s.g(&s.hp(x), y)
        - 0.5 * s.rg(x, v, &pz, &py)
        - 0.5 * s.rg(v, y, &pz, &s.phi(x))
        - 0.5 * s.rg(x, y, &pz, &s.phi(v));
    vec![sc(lhs, mid), sc(lhs, rhs)]
}

fn pc_3b(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py, pz, pv) = (s.phi(x), s.phi(y), s.phi(z), s.phi(v));
    let rhs = -s.rg(x, z, v, &s.q(y)) - s.eta(y) * s.rg(s.xi(), v, x, z) + 0.5 * s.rg(y, v, &pz, &px)
        + 0.5 * s.rg(y, x, &pz, &pv)
        - 0.5 * s.rg(v, z, &py, &px)
        - 0.5 * s.rg(x, z, &py, &pv)
        - s.rg(x, y, v, &s.q(z))
        - s.eta(z) * s.rg(s.xi(), v, x, y)
        - s.g(&s.hp(v), y) * s.g(&s.hp(x), z)
        + 1.5 * s.g(x, &py) * s.g(z, &s.hp(v))
        + s.g(z, v) * s.g(&s.phi(&s.hp(x)), y)
        + 0.5 * s.g(&py, v) * s.g(&s.hp(x), z)
        + 1.5 * s.g(x, &pz) * s.g(y, &s.hp(v))
        + s.g(y, v) * s.g(&s.phi(&s.hp(x)), z)
        + 0.5 * s.g(&pz, v) * s.g(&s.hp(x), y)
        - s.eta(y) * s.g(&s.nhp(v, x), z)
        - nabla_eta_hp_q(s, v, x, y, z);
    vec![sc(pair_nphi(s, x, y, z, v), rhs)]
}

fn pc_334(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py, pz, pv) = (s.phi(x), s.phi(y), s.phi(z), s.phi(v));
    let rhs = -s.rg(x, z, v, &s.q(y)) - s.rg(x, y, v, &s.q(z)) + s.rg(v, z, &px, &py) + s.rg(x, z, &pv, &py)
        - s.g(y, &s.hp(v)) * s.g(&s.hp(x), z)
        - s.eta(x) * s.eta(z) * s.g(y, &hp2(s, v))
        + s.eta(y) * s.eta(z) * s.g(x, &hp2(s, v))
        - 0.5 * s.g(y, z) * s.g(&(s.qt(x) + s.phi(&px)), v)
        + s.g(y, v) * s.g(&s.phi(&s.hp(x)), z)
        + 0.75 * s.g(z, v) * s.g(&s.phi(&s.hp(x)), y)
        - 0.25 * s.g(x, z) * s.g(&s.hp(&py), v)
        - 0.25 * s.g(x, v) * s.g(&s.hp(&py), z)
        - s.g(z, v) * s.g(&s.qt(y), x)
        - 0.5 * s.g(x, z) * s.g(&s.qt(y), v)
        - 1.25 * s.g(x, &pz) * s.g(&s.hp(y), v)
        - 0.25 * s.g(z, &pv) * s.g(&s.hp(x), y)
        + 1.5 * s.g(x, &py) * s.g(&s.hp(v), z)
        - 0.5 * s.g(y, &pv) * s.g(&s.hp(x), z)
        - 0.25 * s.delta(v, z, x, y)
        - 0.25 * s.delta(x, z, v, y)
        - nabla_eta_hp_q(s, v, x, y, z);
    vec![sc(pair_nphi(s, x, y, z, v), rhs)]
}

fn pc_335(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let (px, py, pz, pv) = (s.phi(x), s.phi(y), s.phi(z), s.phi(v));
    let (ppz, ppv) = (s.phi(&pz), s.phi(&pv));
    let lhs = pair_nphi(s, x, y, &pz, &pv);
    let rhs = s.rg(x, &pz, &ppv, &py) - s.rg(x, &pz, &pv, &s.q(y)) - s.rg(x, y, &s.q(&pz), &pv)
        + s.rg(&px, &py, &pz, &pv)
        - s.g(y, &s.hp(&pv)) * s.g(&s.hp(x), &pz)
        - 0.5 * s.g(y, &pz) * s.g(&(s.qt(x) + s.phi(&px)), &pv)
        + s.g(y, &pv) * s.g(&s.phi(&s.hp(x)), &pz)
        - 0.75 * s.g(&ppz, v) * s.g(&s.phi(&s.hp(x)), y)
        - 0.25 * s.g(x, &pz) * s.g(&s.hp(&py), &pv)
        - 0.25 * s.g(x, &pv) * s.g(&s.hp(&py), &pz)
        + s.g(&ppz, v) * s.g(x, &s.qt(y))
        - 0.5 * s.g(x, &pz) * s.g(&s.qt(y), &pv)
        - 1.25 * s.g(x, &ppz) * s.g(&s.hp(y), &pv)
        + 0.25 * s.g(&pz, &s.q(v)) * s.g(&s.hp(x), y)
        + 1.5 * s.g(x, &py) * s.g(&s.hp(&pv), &pz)
        - 0.5 * s.g(y, &ppv) * s.g(&s.hp(x), &pz)
        - 0.25 * s.delta(&pv, &pz, x, y)
        - 0.25 * s.delta(x, &pz, &pv, y);
    vec![sc(lhs, rhs)]
}

fn pc_336(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let nxz = s.nphi(x, z);
    let nvy = s.nphi(v, y);
    let lhs = s.g(&s.nphi(&s.phi(v), y), &s.nphi(x, &s.phi(z)));
    let rhs = s.g(&s.q(&nxz), &nvy) - s.eta(v) * s.g(&nxz, &s.phi(&s.h(y)))
        - 2.0 * s.eta(y) * s.g(&nxz, &s.phi(&s.phi(v)))
        + s.eta(z) * s.g(&nvy, &s.phi(&s.hp(x)))
        - s.eta(z) * s.eta(v) * s.g(&s.hp(x), &s.hp(y))
        - 2.0 * s.eta(z) * s.eta(y) * s.g(&s.hp(x), &s.phi(v))
        - s.g(&s.phi(&s.hp(x)), z) * s.g(y, &s.phi(&s.hp(v)))
        + s.g(y, &s.hp(&s.phi(v))) * s.g(&s.hp(x), &s.q(z));
    vec![sc(lhs, rhs)]
}

fn pc_337(s: &S, a: &[V]) -> Vec<Pair> {
    let (x, y, z, v) = (&a[0], &a[1], &a[2], &a[3]);
    let nxy = s.nphi(x, y);
    let lhs = s.g(&nxy, &s.nphi(&s.phi(v), &s.phi(z)));
    let rhs = s.eta(z) * s.g(&nxy, &s.hp(&s.phi(v))) - s.g(&s.nphi(v, z), &s.q(&nxy))
        + s.eta(v) * s.g(&nxy, &s.phi(&s.h(z)))
        - s.g(&s.phi(&s.hp(x)), y) * s.g(&s.phi(&s.hp(v)), z)
        + s.g(&s.phi(&s.hp(x)), y) * s.g(&s.hp(&s.phi(v)), &s.q(z));
    vec![sc(lhs, rhs)]
}

const FIELD_READING: &str = "∇_V of η(Z)g((h−φ)X,QY) read as the covariant derivative of that tensor";

static CATALOG: &[IdentityRecord] = &[
    axiom("AX-1", H0, 2, "g(φX,φY) = g(X,QY) − η(X)η(Y)", ax1),
    axiom("AX-2", H0, 0, "η(ξ) = 1, φξ = 0", ax2),
    axiom("AX-3", H0, 1, "η∘φ = 0", ax3),
    axiom("AX-4", H0, 1, "η∘Q = η, η(X) = g(ξ,X)", ax4),
    axiom("AX-5", H0, 1, "[Q, φ] = 0", ax5),
    axiom("AX-6", H0, 2, "φ is skew-adjoint and Q is self-adjoint", ax6),
    axiom(
        "RIC-1",
        HAny,
        4,
        "g((∇²_{X,Y}φ)Z,V) − g((∇²_{Y,X}φ)Z,V) = g(R_{X,Y}φZ,V) + g(R_{X,Y}Z,φV)",
        ric1,
    ),
    axiom("NS-0", H1, 2, "(∇_Yφ)Z + (∇_Zφ)Y = 2g(Y,Z)ξ − η(Z)Y − η(Y)Z", ns0),
    rec("NS-SKEW", H1, 4, "g((∇_Yφ)V,Z) = −g((∇_Yφ)Z,V), g((∇²_{X,Y}φ)V,Z) = −g((∇²_{X,Y}φ)Z,V)", ns_skew),
    rec("GEO-1", H1, 0, "∇_ξ ξ = 0", geo1),
    rec("KILL-1", H1, 2, "g(∇_Xξ,Y) + g(∇_Yξ,X) = 0", kill1),
    rec("H-1", H1, 2, "hξ = 0, η∘h = 0, h is skew-adjoint", h1),
    rec("H-SKEW", H1, 3, "g((∇_Xh)Y,Z) = −g(Y,(∇_Xh)Z)", h_skew),
    rec("L1-a", H1, 1, "(∇_X h)ξ = −h(h − φ)X", l1a),
    rec("L1-b", H1, 1, "hφ + φh = −2Q̃", l1b),
    rec("L1-c", H1, 1, "(∇_X φ)ξ = −φ(h − φ)X", l1c),
    rec("L1-d", H1, 1, "hQ = Qh", l1d),
    rec("L1-e", H1, 1, "h² and φ² commute with φ and h: h²φ = φh², hφ² = φ²h, h²φ² = φ²h²", l1e),
    axiom("QPAR-1", H2a, 2, "(∇_X Q̃)Y = 0 for Y ∈ ker η", qpar1),
    with_erratum(
        rec("QPAR-2", H2a, 1, "∇_ξ Q̃ = 0", qpar2),
        "follows from (∇_X Q̃)Y = 0 on ker η, so it is tested under that hypothesis",
    ),
    axiom("CI-1", H2b, 3, "η(R_{Q̃X,Y}Z) = 0 for X,Y,Z ∈ ker η", ci1),
    rec("CI-2", H2b, 3, "η(R_{X,Y}Z) = 0 for X,Y,Z ∈ ker η", ci2),
    rec("CI-3", H2b, 3, "η(R_{X,Y}Q̃Z) = 0 for X,Y,Z ∈ ker η", ci3),
    rec("L2-a", H2b, 2, "R_{X,ξ}Y = (∇_X(h−φ))Y = g((h−φ)²X,Y)ξ − η(Y)(h−φ)²X", l2a),
    rec("L2-b", H2b, 3, "g(R_{ξ,X}Y,Z) = η(Y)g((h−φ)²X,Z) − η(Z)g((h−φ)²X,Y)", l2b),
    rec("L2-c", H2b, 1, "(∇_ξ h)X = (∇_ξ φ)X = φhX + Q̃X", l2c),
    rec("L3-a", H2a, 3, "g((∇_Xφ)φY,Z) = g((∇_Xφ)Y,φZ) + η(Y)g((h−φ)X,Z) + η(Z)g((h−φ)X,QY)", l3a),
    rec(
        "L3-b",
        H2a,
        3,
        "g((∇_{φX}φ)Y,Z) = g((∇_Xφ)Y,φZ) − η(X)g(hY,Z) − 2η(Y)g(φX,Z) + 2η(Z)g(φX,Y) − η(Z)g(QX,(h−φ)Y)",
        l3b,
    ),
    rec(
        "L3-c",
        H2a,
        3,
        "g((∇_{φX}φ)φY,Z) = −g((∇_Xφ)Y,QZ) + η(X)g(Y,hφZ) + η(Y)g(hφX + φ²X,Z) + η(Z)g(φ(h−φ)X,Y) + η(Z)g((h−φ)φX,QY)",
        l3c,
    ),
    rec(
        "L4-a",
        H1,
        4,
        "g(R_{φX,Y}Z,V) + g(R_{X,φY}Z,V) + g(R_{X,Y}φZ,V) + g(R_{X,Y}Z,φV) = g(Y,V)g((h−φ)X,Z) − g(X,Y)g(Z,(h−φ)V) + g(Y,Z)g(X,(h−φ)V) − ½g(Z,V)g((h−φ)X,Y) + ½g(X,Z)g(Y,(h−φ)V)",
        l4a,
    ),
    rec(
        "L4-b",
        H2b,
        4,
        "g(R_{φX,φY}Z,V) = g(R_{X,Y}φZ,φV) − ½δ(X,Y,Z,V) − g(X,Y)g(Z,Q̃V) + ½g(Y,V)g(φ(h−φ)X,Z) − ½g(Y,φZ)g(X,(h−φ)V) − ½g(Y,φV)g((h−φ)X,Z) − ½g(Y,Z)g(X,(h−φ)φV) − ¼g(X,φZ)g(Y,(h−φ)V) − ¼g(X,Z)g(Y,(h−φ)φV)",
        l4b,
    ),
    rec(
        "L4-c",
        H2b,
        4,
        "g(R_{φX,φY}φZ,φV) = g(R_{QX,QY}Z,V) − η(X)g(R_{ξ,QY}Z,V) + η(Y)g(R_{ξ,QX}Z,V) + ½g(φY,V)g((h−φ)φX,φZ) + ½g(φ²Y,Z)g(X,φ(h−φ)V) − ½g(φ²Y,V)g((h−φ)φX,Z) + ½g(φY,Z)g(φX,(h−φ)φV) + ¼g(φ²X,Z)g(Y,φ(h−φ)V) + ¼g(φX,Z)g(φY,(h−φ)φV) − g(φ²X,Y)g(Z,Q̃V) + ½δ(φX,φY,Z,V)",
        l4c,
    ),
    rec("DLT-1", H1, 4, "δ(Y,X,Z,V) = δ(X,Y,V,Z) = δ(Z,V,X,Y) = −δ(X,Y,Z,V)", dlt1),
    rec("DLT-2", H2b, 3, "δ(ξ,Y,Z,V) = δ(X,ξ,Z,V) = δ(X,Y,ξ,V) = δ(X,Y,Z,ξ) = 0", dlt2),
    rec(
        "L5-a",
        H3,
        3,
        "g((∇_Xφ)Y,hZ) = −η(X)g((φh² + Q̃h)Z,Y) + η(Y)g((φh² − h + Q̃h)Z,X)",
        l5a,
    ),
    rec("P2-a", H3, 2, "(∇_Xφ)Y = η(X)(φhY + Q̃Y) − η(Y)(φhX + QX) + g(φhX + QX,Y)ξ", p2a),
    rec("P2-b", H3, 2, "(∇_Xh)Y = η(X)(φhY + Q̃Y) − η(Y)h(h − φ)X + g(h(h − φ)X,Y)ξ", p2b),
    with_erratum(
        rec(
            "P2-c",
            H3,
            2,
            "(∇_X φh)Y = η(X)(φh²Y − hY + Q̃φY) − η(Y)(φh²X − QhX + 2Q̃φX) + g(φh²X − hX + Q̃hX,Y)ξ",
            p2c,
        ),
        "the η(Y) term read as a vector, −η(Y)(φh²X − QhX + 2Q̃φX)",
    ),
    rec("P2-d", H3, 3, "g((∇_Xφ)Y,V) = −η(Y)g(X,V) for V ∈ D₀", p2d),
    rec("TF-1", H3, 3, "dΦ₀ = η ∧ (Φ₁ + Ψ₀)", tf1),
    rec("TF-2", H3, 3, "dΦ₁ = η ∧ (Φ₂ − Φ₀ + Ψ₁)", tf2),
    rec("TF-3", H3, 3, "dΨ₀ = −η ∧ (Ψ₂ − Ψ₁)", tf3),
    rec("TF-4", H3, 4, "dη ∧ (Φ₁ + Ψ₀) = 0", tf4),
    chain(
        "PC-1",
        3,
        "(∇²_{X,Y}φ)Z + (∇²_{X,Z}φ)Y = 2g(Y,Z)(h−φ)X − g((h−φ)X,Z)Y − g((h−φ)X,Y)Z",
        pc_ef01,
    ),
    chain(
        "PC-2",
        4,
        "g(R_{X,Y}Z,φV) − g(R_{X,Y}V,φZ) + g((∇²_{X,Z}φ)Y,V) − g((∇²_{Y,Z}φ)X,V) = 2g(Y,Z)g((h−φ)X,V) − 2g(X,Z)g((h−φ)Y,V) − g(Y,V)g((h−φ)X,Z) + g(X,V)g((h−φ)Y,Z) + 2g(Z,V)g((h−φ)Y,X)",
        pc_37,
    ),
    chain(
        "PC-3",
        4,
        "g(R_{X,Y}Z,φV) = −g(R_{Y,Z}X,φV) − g(R_{Z,X}Y,φV) = g((∇²_{Y,Z}φ)V,X) − g((∇²_{Z,Y}φ)V,X) − g(R_{Y,Z}V,φX) − g(R_{Z,X}Y,φV)",
        pc_38,
    ),
    with_erratum(
        chain(
            "PC-4",
            4,
            "g(R_{X,Z}Y,φV) − g(R_{X,Y}V,φZ) − g(R_{Y,Z}V,φX) − g((∇²_{Z,Y}φ)V,X) − g((∇²_{X,Z}φ)V,Y) = 2g((∇²_{Y,Z}φ)X,V) + 2g(Y,Z)g((X−φ)X,V) − 2g(X,Z)g((h−φ)Y,V) + 2g(Z,V)g((h−φ)Y,X) − g(Y,V)g((h−φ)X,Z) + g(X,V)g((h−φ)Y,Z)",
            pc_39,
        ),
        "(X−φ)X read as (h−φ)X",
    ),
    chain(
        "PC-5",
        4,
        "g(R_{X,Z}Y,φV) − g(R_{X,Z}V,φY) − g((∇²_{X,Z}φ)Y,V) + g((∇²_{Z,X}φ)Y,V) = 0",
        pc_310,
    ),
    chain(
        "PC-6",
        4,
        "2g(R_{X,Z}Y,φV) − g(R_{X,Y}V,φZ) − g(R_{Y,Z}V,φX) − g(R_{X,Z}V,φY) = 2g((∇²_{Y,V}φ)Z,X) + 2g(Y,Z)g((h−φ)X,V) − 2g(X,Z)g((h−φ)Y,V) + 2g(Z,V)g((h−φ)Y,X) − g(Y,V)g((h−φ)X,Z) + g(X,V)g((h−φ)Y,Z)",
        pc_311,
    ),
    chain(
        "PC-7",
        4,
        "2g(R_{X,Z}V,φY) − g(R_{X,V}Y,φZ) − g(R_{V,Z}Y,φX) − g(R_{X,Z}Y,φV) = 2g((∇²_{V,Y}φ)Z,X) + 2g(Z,V)g((h−φ)X,Y) − 2g(X,Z)g((h−φ)V,Y) + 2g(Y,Z)g((h−φ)V,X) − g(Y,V)g((h−φ)X,Z) + g(X,Y)g((h−φ)V,Z)",
        pc_312,
    ),
    chain(
        "PC-8",
        4,
        "−g(R_{QX,Y}Z,V) + η(X)g(R_{ξ,Y}Z,V) + g(R_{φX,φY}Z,V) + g(R_{φX,Y}φZ,V) + g(R_{φX,Y}Z,φV) = g(Y,V)g((h−φ)φX,Z) − g(φX,Y)g(Z,(h−φ)V) + g(Y,Z)g(φX,(h−φ)V) − ½g(Z,V)g((h−φ)φX,Y) + ½g(φX,Z)g(Y,(h−φ)V)",
        pc_313,
    ),
    with_erratum(
        chain(
            "PC-9",
            4,
            "g(R_{X,QY}Z,V) + η(Y)g(R_{ξ,X}Z,V) − g(R_{φX,φY}Z,V) + g(R_{φY,X}φZ,V) + g(R_{φY,X}Z,φV) = g(X,V)g((h−φ)φY,Z) − g(φX,Y)g(Z,(h−φ)V) − g(X,Z)g(φY,(h−φ)V) − ½g(Z,V)g(X,(h−φ)φY) + ½g(φY,Z)g(X,(h−φ)V)",
            pc_314,
        ),
        "g(φ(Y, h−φ)V) read as g(φY,(h−φ)V)",
    ),
    chain(
        "PC-10",
        4,
        "2g(R_{φX,φY}Z,V) − 2g(R_{X,Y}Z,V) + η(X)g(R_{ξ,Y}Z,V) − η(Y)g(R_{ξ,X}Z,V) + g(R_{φX,Y}φZ,V) − g(R_{φY,X}φZ,V) + g(R_{φX,Y}Z,φV) − g(R_{φY,X}Z,φV) − g(R_{Q̃X,Y}Z,V) − g(R_{X,Q̃Y}Z,V) = g(Y,V)g((h−φ)φX,Z) + g(Y,Z)g((h−φ)V,φX) + g(Z,V)g(Q̃X,Y) + ½g(φX,Z)g(Y,(h−φ)V) − ½g(φY,Z)g(X,(h−φ)V) − g(X,V)g((h−φ)φY,Z) + g(X,Z)g(Y,φ(h−φ)V)",
        pc_315,
    ),
    chain(
        "PC-11",
        4,
        "−g(R_{X,Y}QZ,V) = −η(Z)g(R_{ξ,V}X,Y) − g(R_{X,Y}φZ,φV) − g(R_{X,φY}φZ,V) − g(R_{φX,Y}φZ,V) − g(Y,V)g(φ(h−φ)X,Z) − g(X,Y)g(φZ,(h−φ)V) + g(Y,φZ)g(X,(h−φ)V) − ½g(φZ,V)g((h−φ)X,Y) + ½g(X,φZ)g(Y,(h−φ)V)",
        pc_316,
    ),
    chain(
        "PC-12",
        4,
        "−g(R_{X,Y}Z,QV) = η(V)g(R_{ξ,Z}X,Y) − g(R_{X,Y}φZ,φV) − g(R_{φX,Y}Z,φV) − g(R_{X,φY}Z,φV) + g(Y,φV)g((h−φ)X,Z) − g(X,Y)g(Z,(h−φ)φV) + g(Y,Z)g(X,(h−φ)φV) − ½g(Z,φV)g((h−φ)X,Y) + ½g(X,Z)g(Y,(h−φ)φV)",
        pc_317,
    ),
    chain(
        "PC-13",
        4,
        "2g(R_{φX,φY}Z,V) − 2g(R_{X,Y}φZ,φV) − η(Z)g(R_{ξ,V}X,Y) + η(V)g(R_{ξ,Z}X,Y) + η(X)g(R_{ξ,Y}Z,V) − η(Y)g(R_{ξ,X}Z,V) + δ(X,Y,Z,V) − g(Y,V)g(φ(h−φ)X,Z) + g(Y,φZ)g(X,(h−φ)V) + g(Y,φV)g((h−φ)X,Z) + g(Y,Z)g(X,(h−φ)φV) + 2g(X,Y)g(Z,Q̃V) + ½g(X,φZ)g(Y,(h−φ)V) + ½g(X,Z)g(Y,(h−φ)φV) = 0",
        pc_318,
    ),
    chain_h3(
        "PC-14",
        4,
        "g(R_{X,φZ}φV,Y) − g(R_{X,φZ}φ²V,φY) = g(R_{X,φZ}φV,Y) + g(R_{X,φZ}QV,φY) − η(X)η(V)g((h−φ)²φY,φZ)",
        pc_338,
    ),
    chain_h3(
        "PC-15",
        4,
        "g(R_{X,Z}φV,φY) + g(R_{X,Z}φ²V,Y) + g(R_{X,φZ}φV,Y) + g(R_{φX,Z}φV,Y) = −g(Y,Z)g(φ(h−φ)X,V) + g(X,Z)g(φ(h−φ)Y,V) + g(Z,φV)g(X,hY − φY) − ½g(Y,φV)g((h−φ)X,Z) + ½g(X,φV)g((h−φ)Y,Z)",
        pc_339,
    ),
    chain_h3(
        "PC-16",
        4,
        "g(R_{φX,Z}φV,φ²Y) = g(R_{φ²X,φZ}V,φY) + ½δ(φX,Z,V,φY) + g(φX,Z)g(Q̃φY,V) + ½g(φY,Z)g((h−φ)φX,φV) + ½g(Z,φV)g(φX,(h−φ)φY) + ½g(φ²Y,Z)g((h−φ)φX,V) + ½g(Z,V)g((h−φ)φX,QY) − ¼g(φ²X,V)g((h−φ)φY,Z) + ¼g(φX,V)g(QY,(h−φ)Z)",
        pc_340,
    ),
    chain_h3(
        "PC-17",
        4,
        "−g(R_{φX,Z}φV,QY) + η(Y)g(R_{φX,Z}φV,ξ) = −g(R_{QX,φZ}V,φY) + η(X)g(R_{ξ,φZ}V,φY) + ½δ(φX,Z,V,φY) + g(φX,Z)g(Q̃φY,V) + ½g(φY,Z)g((h−φ)φX,φV) + ½g(Z,φV)g(φX,(h−φ)φY) + ½g(φ²Y,Z)g((h−φ)φX,V) + ½g(Z,V)g((h−φ)φX,QY) − ¼g(φ²X,V)g((h−φ)φY,Z) + ¼g(φX,V)g(QY,(h−φ)Z)",
        pc_8bb,
    ),
    chain_h3(
        "PC-18",
        4,
        "g(R_{φX,Z}φV,Y) + g(R_{QX,φZ}V,φY) = −g(R_{X,Z}φV,φY) − g(R_{X,Z}φ²V,Y) − g(R_{X,φZ}φV,Y) + g(R_{φX,Z}φV,QY) − η(Y)η(Z)g(φX,(h−φ)²φV) − g(Y,Z)g(φ(h−φ)X,V) + g(X,Z)g(φ(h−φ)Y,V) + g(Z,φV)g(X,(h−φ)Y) − ½g(Y,φV)g((h−φ)X,Z) + ½g(X,φV)g((h−φ)Y,Z) + η(X)η(V)g(φY,(h−φ)²φZ) + ½δ(φX,Z,V,φY) + g(φX,Z)g(Q̃φY,V) + ½g(φY,Z)g((h−φ)φX,φV) + ½g(Z,φV)g(φX,(h−φ)φY) + ½g(φ²Y,Z)g((h−φ)φX,V) + ½g(Z,V)g((h−φ)φX,QY) − ¼g(φ²X,V)g((h−φ)φY,Z) + ¼g(φX,V)g(QY,(h−φ)Z)",
        pc_341,
    ),
    chain_h3(
        "PC-19",
        4,
        "g(R_{X,φZ}φV,Y) − g(R_{X,φZ}φ²V,φY) = −g(R_{QX,φZ}V,φY) − g(R_{X,Z}φV,φY) − g(R_{X,Z}φ²V,Y) − g(R_{X,φZ}φV,Y) + g(R_{φX,Z}φV,QY) + g(R_{X,φZ}QV,φY) + g(Y,Z)g((h−φ)X,φV) + g(X,Z)g(φ(h−φ)Y,V) + g(Z,φV)g(X,(h−φ)Y) − ½g(Y,φV)g((h−φ)X,Z) + ½g(X,φV)g((h−φ)Y,Z) + ½δ(φX,Z,V,φY) + g(φX,Z)g(Q̃φY,V) − η(Y)η(Z)g((h−φ)²φV,φX) + ½g(φY,Z)g((h−φ)φX,φV) + ½g(Z,φV)g(φX,hφY + QY) + ½g(φ²Y,Z)g((h−φ)φX,V) + ½g(Z,V)g((h−φ)φX,QY) − ¼g(φ²X,V)g((h−φ)φY,Z) + ¼g(φX,V)g(QY,(h−φ)Z)",
        pc_342,
    ),
    chain_h3(
        "PC-20",
        4,
        "g(R_{φX,φY}φZ,φV) − g(R_{X,Y}φZ,φV) = −g(R_{φX,φY}Z,V) + g(R_{QX,QY}Z,V) − η(X)g(R_{ξ,QY}Z,V) + η(Y)g(R_{ξ,QX}Z,V) + ½g(φY,V)g((h−φ)φX,φZ) + ½g(φ²Y,Z)g(X,φ(h−φ)V) − ½g(φ²Y,V)g((h−φ)φX,Z) + ½g(φY,Z)g(φX,(h−φ)φV) + ¼g(φ²X,Z)g(Y,φ(h−φ)V) + ¼g(φX,Z)g(φY,(h−φ)φV) + ½g(Y,V)g(φ(h−φ)X,Z) − ½g(Y,φZ)g(X,(h−φ)V) − ½g(Y,φV)g((h−φ)X,Z) − ½g(Y,Z)g(X,(h−φ)φV) − ¼g(X,φZ)g(Y,(h−φ)V) − ¼g(X,Z)g(Y,(h−φ)φV) − g(φ²X + X,Y)g(Q̃V,Z) + ½δ(φX,φY,Z,V) − ½δ(X,Y,Z,V)",
        pc_343,
    ),
    with_erratum(
        with_fields(chain_h3(
            "PC-21",
            4,
            "g((∇_Vφ)Y,(∇_Xφ)Z) + g((∇_Xφ)Y,(∇_Vφ)Z) = g((∇²_{V,X}φ)φY,Z) + g((∇²_{V,X}φ)φZ,Y) − g(Y,(h−φ)V)g((h−φ)X,Z) − η(Y)g((∇_V(h−φ))X,Z) − ∇_V(η(Z)g((h−φ)X,QY))",
            pc_332,
        )),
        FIELD_READING,
    ),
    chain_h3(
        "PC-22",
        4,
        "g((∇²_{V,X}φ)φY,Z) = g((∇²_{V,φY}φ)Z,X) + 2g(X,φY)g(Z,(h−φ)V) + g(X,Z)g(Y,φ(h−φ)V) − g(φY,Z)g(X,(h−φ)V) = −g(R_{X,Z}V,QY) − η(Y)g(R_{ξ,V}X,Z) + (3/2)g(X,φY)g(Z,(h−φ)V) + g(Z,V)g(φ(h−φ)X,Y) + ½g(φY,V)g((h−φ)X,Z) − ½g(R_{X,V}φY,φZ) − ½g(R_{V,Z}φY,φX) − ½g(R_{X,Z}φY,φV)",
        pc_4a,
    ),
    chain_h3(
        "PC-23",
        4,
        "g((∇²_{V,X}φ)φZ,Y) = g((∇²_{V,φZ}φ)Y,X) + 2g(X,φZ)g(Y,(h−φ)V) + g(X,Y)g(Z,φ(h−φ)V) − g(Y,φZ)g(X,(h−φ)V) = −g(R_{X,Y}V,QZ) − η(Z)g(R_{ξ,V}X,Y) + (3/2)g(X,φZ)g(Y,(h−φ)V) + g(Y,V)g(φ(h−φ)X,Z) + ½g(φZ,V)g((h−φ)X,Y) − ½g(R_{X,V}φZ,φY) − ½g(R_{V,Y}φZ,φX) − ½g(R_{X,Y}φZ,φV)",
        pc_4aa,
    ),
    with_erratum(
        with_fields(chain_h3(
            "PC-24",
            4,
            "g((∇_Vφ)Y,(∇_Xφ)Z) + g((∇_Xφ)Y,(∇_Vφ)Z) = −g(R_{X,Z}V,QY) − η(Y)g(R_{ξ,V}X,Z) + ½g(R_{Y,V}φZ,φX) + ½g(R_{Y,X}φZ,φV) − ½g(R_{V,Z}φY,φX) − ½g(R_{X,Z}φY,φV) − g(R_{X,Y}V,QZ) − η(Z)g(R_{ξ,V}X,Y) − g((h−φ)V,Y)g((h−φ)X,Z) + (3/2)g(X,φY)g(Z,(h−φ)V) + g(Z,V)g(φ(h−φ)X,Y) + ½g(φY,V)g((h−φ)X,Z) + (3/2)g(X,φZ)g(Y,(h−φ)V) + g(Y,V)g(φ(h−φ)X,Z) + ½g(φZ,V)g((h−φ)X,Y) − η(Y)g((∇_V(h−φ))X,Z) − ∇_V(η(Z)g((h−φ)X,QY))",
            pc_3b,
        )),
        FIELD_READING,
    ),
    with_erratum(
        with_fields(chain_h3(
            "PC-25",
            4,
            "g((∇_Vφ)Y,(∇_Xφ)Z) + g((∇_Xφ)Y,(∇_Vφ)Z) = −g(R_{X,Z}V,QY) − g(R_{X,Y}V,QZ) + g(R_{V,Z}φX,φY) + g(R_{X,Z}φV,φY) − g(Y,(h−φ)V)g((h−φ)X,Z) − η(X)η(Z)g(Y,(h−φ)²V) + η(Y)η(Z)g(X,(h−φ)²V) − ½g(Y,Z)g(Q̃X + φ²X,V) + g(Y,V)g(φ(h−φ)X,Z) + ¾g(Z,V)g(φ(h−φ)X,Y) − ¼g(X,Z)g((h−φ)φY,V) − ¼g(X,V)g((h−φ)φY,Z) − g(Z,V)g(Q̃Y,X) − ½g(X,Z)g(Q̃Y,V) − (5/4)g(X,φZ)g((h−φ)Y,V) − ¼g(Z,φV)g((h−φ)X,Y) + (3/2)g(X,φY)g((h−φ)V,Z) − ½g(Y,φV)g((h−φ)X,Z) − ¼δ(V,Z,X,Y) − ¼δ(X,Z,V,Y) − ∇_V(η(Z)g((h−φ)X,QY))",
            pc_334,
        )),
        FIELD_READING,
    ),
    chain_h3(
        "PC-26",
        4,
        "g((∇_{φV}φ)Y,(∇_Xφ)φZ) + g((∇_Xφ)Y,(∇_{φV}φ)φZ) = g(R_{X,φZ}φ²V,φY) − g(R_{X,φZ}φV,QY) − g(R_{X,Y}QφZ,φV) + g(R_{φX,φY}φZ,φV) − g(Y,(h−φ)φV)g((h−φ)X,φZ) − ½g(Y,φZ)g(Q̃X + φ²X,φV) + g(Y,φV)g(φ(h−φ)X,φZ) − ¾g(φ²Z,V)g(φ(h−φ)X,Y) − ¼g(X,φZ)g((h−φ)φY,φV) − ¼g(X,φV)g((h−φ)φY,φZ) + g(φ²Z,V)g(X,Q̃Y) − ½g(X,φZ)g(Q̃Y,φV) − (5/4)g(X,φ²Z)g((h−φ)Y,φV) + ¼g(φZ,QV)g((h−φ)X,Y) + (3/2)g(X,φY)g((h−φ)φV,φZ) − ½g(Y,φ²V)g((h−φ)X,φZ) − ¼δ(φV,φZ,X,Y) − ¼δ(X,φZ,φV,Y)",
        pc_335,
    ),
    chain_h3(
        "PC-27",
        4,
        "g((∇_{φV}φ)Y,(∇_Xφ)φZ) = g(Q(∇_Xφ)Z,(∇_Vφ)Y) − η(V)g((∇_Xφ)Z,φhY) − 2η(Y)g((∇_Xφ)Z,φ²V) + η(Z)g((∇_Vφ)Y,φ(h−φ)X) − η(Z)η(V)g((h−φ)X,(h−φ)Y) − 2η(Z)η(Y)g((h−φ)X,φV) − g(φ(h−φ)X,Z)g(Y,φ(h−φ)V) + g(Y,(h−φ)φV)g((h−φ)X,QZ)",
        pc_336,
    ),
    chain_h3(
        "PC-28",
        4,
        "g((∇_Xφ)Y,(∇_{φV}φ)φZ) = η(Z)g((∇_Xφ)Y,(h−φ)φV) − g((∇_Vφ)Z,Q(∇_Xφ)Y) + η(V)g((∇_Xφ)Y,φhZ) − g(φ(h−φ)X,Y)g(φ(h−φ)V,Z) + g(φ(h−φ)X,Y)g((h−φ)φV,QZ)",
        pc_337,
    ),
    chain_h3(
        "PC-FIN",
        3,
        "g((∇_Xφ)Y,hQZ) = −η(X)g((φh² + Q̃h)QZ,Y) + η(Y)g((φh² − h + Q̃h)QZ,X)",
        pc_fin,
    ),
    rec("E-nS-Sas", Sasakian, 2, "(∇_Xφ)Y = g(X,Y)ξ − η(Y)X", sas),
    with_erratum(
        axiom("NORMAL", Sasakian, 2, "[φ,φ] + dη ⊗ ξ = 0", normal),
        "with dη(X,Y) = ½(Xη(Y) − Yη(X) − η([X,Y])) normality reads [φ,φ] + 2dη ⊗ ξ = 0",
    ),
    axiom("WC-1", WeakContact, 2, "dη(X,Y) = g(X,φY)", wc1),
];

/// Every catalogued identity, in a fixed order.
pub fn catalog() -> &'static [IdentityRecord] {
    CATALOG
}
