use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::{Bounds, Claim, Identity, Params};
use crate::coeffs::kron_coeff;
use crate::error::{Error, Result};
use crate::operators::{apply_kb, kb_as_ud, kb_via_gamma, OperatorExpr};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::symfunc::{jacobi_trudi, rational, skew_schur_of, Rational, SymFunc};
use crate::tableaux::{add_restrict, skew_corners_rhs, verify_jdt_bijection};

fn s(p: &Partition) -> SymFunc {
    SymFunc::schur(p.clone())
}

fn sk(outer: &Partition, inner: &Partition) -> SymFunc {
    skew_schur_of(outer, inner)
}

/// `s_{seq}` straightened by Jacobi–Trudi; `seq` may be any integer sequence.
fn jt(seq: &[i64]) -> SymFunc {
    jacobi_trudi(seq).to_symfunc()
}

fn sign(n: usize) -> Rational {
    rational(if n % 2 == 0 { 1 } else { -1 })
}

fn meet(a: &Partition, b: &Partition) -> Partition {
    Partition::from_multiset(a.parts().iter().zip(b.parts()).map(|(x, y)| *x.min(y)).collect())
}

fn u(f: SymFunc) -> OperatorExpr {
    OperatorExpr::u(f)
}

fn d(f: SymFunc) -> OperatorExpr {
    OperatorExpr::d(f)
}

fn kron(a: &Partition, b: &Partition, c: &Partition) -> Rational {
    rational(kron_coeff(a, b, c).expect("equal sizes") as i64)
}

/// `(μ, c)` with `c = c^outer_{inner, μ} ≠ 0`.
fn lr_quotients(outer: &Partition, inner: &Partition) -> Vec<(Partition, Rational)> {
    sk(outer, inner).terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

type Pair = (Partition, Partition);

fn from_coefficients(coeffs: BTreeMap<Pair, Rational>, word: impl Fn(&Partition, &Partition) -> OperatorExpr) -> OperatorExpr {
    coeffs
        .into_iter()
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .map(|((a, b), c)| word(&a, &b).scale(&c))
        .sum()
}

fn accumulate(map: &mut BTreeMap<Pair, Rational>, key: Pair, c: Rational) {
    *map.entry(key).or_insert_with(|| rational(0)) += c;
}

fn ab(p: &Params) -> (&Partition, &Partition) {
    (p.part("alpha"), p.part("beta"))
}

// Right-hand sides of the commutation relations, term by term.

fn du_terms(alpha: &Partition, beta: &Partition) -> Vec<(Partition, OperatorExpr)> {
    meet(alpha, beta)
        .subpartitions()
        .into_iter()
        .map(|l| {
            let e = u(sk(alpha, &l)) * d(sk(beta, &l));
            (l, e)
        })
        .collect()
}

fn ud_terms(alpha: &Partition, beta: &Partition) -> Vec<(Partition, OperatorExpr)> {
    alpha
        .subpartitions()
        .into_iter()
        .filter(|l| beta.contains(&l.conjugate()))
        .map(|l| {
            let e = (d(sk(beta, &l.conjugate())) * u(sk(alpha, &l))).scale(&sign(l.size()));
            (l, e)
        })
        .collect()
}

fn ku_rhs(alpha: &Partition, beta: &Partition) -> OperatorExpr {
    beta.subpartitions()
        .iter()
        .map(|l| u(sk(beta, l).kronecker(&s(alpha))) * OperatorExpr::k_s(l))
        .sum()
}

fn dk_rhs(alpha: &Partition, beta: &Partition) -> OperatorExpr {
    beta.subpartitions()
        .iter()
        .map(|l| OperatorExpr::k_s(l) * d(sk(beta, l).kronecker(&s(alpha))))
        .sum()
}

/// `((τ, ν), (s_{β/ν} ∗ s_τ) s_{α/τ})`, skipping zero coefficients.
fn kb_coefficients(alpha: &Partition, beta: &Partition) -> Vec<(Pair, SymFunc)> {
    let mut out = Vec::new();
    for nu in beta.subpartitions() {
        let quotient = sk(beta, &nu);
        for tau in alpha.subpartitions().into_iter().filter(|t| t.size() + nu.size() == beta.size()) {
            let f = quotient.kronecker(&s(&tau)) * sk(alpha, &tau);
            if !f.is_zero() {
                out.push(((tau, nu.clone()), f));
            }
        }
    }
    out
}

fn kbu_rhs(alpha: &Partition, beta: &Partition, skip_leading: bool) -> OperatorExpr {
    kb_coefficients(alpha, beta)
        .into_iter()
        .filter(|((t, n), _)| !(skip_leading && t.is_empty() && n == beta))
        .map(|((_, nu), f)| u(f) * OperatorExpr::kb_s(&nu))
        .sum()
}

fn dkb_rhs(alpha: &Partition, beta: &Partition, skip_leading: bool) -> OperatorExpr {
    kb_coefficients(alpha, beta)
        .into_iter()
        .filter(|((t, n), _)| !(skip_leading && t.is_empty() && n == beta))
        .map(|((_, nu), f)| OperatorExpr::kb_s(&nu) * d(f))
        .sum()
}

fn thm_main_1(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let rhs = du_terms(a, b).into_iter().map(|(_, e)| e).sum();
    Ok(vec![Claim::ops("D_β U_α = Σ U_{α/λ} D_{β/λ}", OperatorExpr::d_s(b) * OperatorExpr::u_s(a), rhs)])
}

fn thm_main_2(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let rhs = ud_terms(a, b).into_iter().map(|(_, e)| e).sum();
    Ok(vec![Claim::ops("U_α D_β = Σ (−1)^|λ| D_{β/λ'} U_{α/λ}", OperatorExpr::u_s(a) * OperatorExpr::d_s(b), rhs)])
}

fn thm_main_3(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    Ok(vec![Claim::ops("K_β U_α = Σ U_{s_{β/λ}∗s_α} K_λ", OperatorExpr::k_s(b) * OperatorExpr::u_s(a), ku_rhs(a, b))])
}

fn thm_main_4(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    Ok(vec![Claim::ops("D_α K_β = Σ K_λ D_{s_{β/λ}∗s_α}", OperatorExpr::d_s(a) * OperatorExpr::k_s(b), dk_rhs(a, b))])
}

fn thm_main_5(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    Ok(vec![Claim::ops("K̄_β U_α = Σ U_{(s_{β/ν}∗s_τ)s_{α/τ}} K̄_ν", OperatorExpr::kb_s(b) * OperatorExpr::u_s(a), kbu_rhs(a, b, false))])
}

fn thm_main_6(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    Ok(vec![Claim::ops("D_α K̄_β = Σ K̄_ν D_{(s_{β/ν}∗s_τ)s_{α/τ}}", OperatorExpr::d_s(a) * OperatorExpr::kb_s(b), dkb_rhs(a, b, false))])
}

// Normal forms with structure constants as coefficients.

fn cor_du(alpha: &Partition, beta: &Partition) -> OperatorExpr {
    let mut c = BTreeMap::new();
    for l in meet(alpha, beta).subpartitions() {
        for (mu, x) in lr_quotients(alpha, &l) {
            for (nu, y) in lr_quotients(beta, &l) {
                accumulate(&mut c, (mu.clone(), nu), &x * y);
            }
        }
    }
    from_coefficients(c, |mu, nu| OperatorExpr::u_s(mu) * OperatorExpr::d_s(nu))
}

fn cor_ud(alpha: &Partition, beta: &Partition) -> OperatorExpr {
    let mut c = BTreeMap::new();
    for l in alpha.subpartitions() {
        let lc = l.conjugate();
        if !beta.contains(&lc) {
            continue;
        }
        for (mu, x) in lr_quotients(alpha, &l) {
            for (nu, y) in lr_quotients(beta, &lc) {
                accumulate(&mut c, (mu.clone(), nu), sign(l.size()) * &x * y);
            }
        }
    }
    from_coefficients(c, |mu, nu| OperatorExpr::d_s(nu) * OperatorExpr::u_s(mu))
}

/// `Σ_λ g_{αλμ} c^β_{λν}` keyed by `(μ, ν)`.
fn cor_k_coefficients(alpha: &Partition, beta: &Partition) -> BTreeMap<Pair, Rational> {
    let mut c = BTreeMap::new();
    for nu in beta.subpartitions() {
        for (lambda, y) in lr_quotients(beta, &nu) {
            if lambda.size() != alpha.size() {
                continue;
            }
            for mu in partitions_of(alpha.size()) {
                accumulate(&mut c, (mu.clone(), nu.clone()), kron(alpha, &lambda, &mu) * &y);
            }
        }
    }
    c
}

/// `Σ g_{λτθ} c^β_{λν} c^α_{τσ} c^μ_{θσ}` keyed by `(μ, ν)`.
fn cor_kb_coefficients(alpha: &Partition, beta: &Partition) -> BTreeMap<Pair, Rational> {
    let mut c = BTreeMap::new();
    for nu in beta.subpartitions() {
        for (lambda, x) in lr_quotients(beta, &nu) {
            for tau in alpha.subpartitions().into_iter().filter(|t| t.size() == lambda.size()) {
                for (sigma, y) in lr_quotients(alpha, &tau) {
                    for theta in partitions_of(lambda.size()) {
                        let g = kron(&lambda, &tau, &theta);
                        if num_traits::Zero::is_zero(&g) {
                            continue;
                        }
                        for (mu, z) in (s(&theta) * s(&sigma)).terms() {
                            accumulate(&mut c, (mu.clone(), nu.clone()), &g * &x * &y * z);
                        }
                    }
                }
            }
        }
    }
    c
}

fn cor_main_1(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let rhs = cor_du(a, b);
    let thm: OperatorExpr = du_terms(a, b).into_iter().map(|(_, e)| e).sum();
    Ok(vec![
        Claim::ops("D_β U_α = Σ c^α_{λμ} c^β_{λν} U_μ D_ν", OperatorExpr::d_s(b) * OperatorExpr::u_s(a), rhs.clone()),
        Claim::ops("coefficient form = skew form", thm, rhs),
    ])
}

fn cor_main_2(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let rhs = cor_ud(a, b);
    let thm: OperatorExpr = ud_terms(a, b).into_iter().map(|(_, e)| e).sum();
    Ok(vec![
        Claim::ops("U_α D_β = Σ (−1)^|λ| c^α_{λμ} c^β_{λ'ν} D_ν U_μ", OperatorExpr::u_s(a) * OperatorExpr::d_s(b), rhs.clone()),
        Claim::ops("coefficient form = skew form", thm, rhs),
    ])
}

fn cor_main_3(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let rhs = from_coefficients(cor_k_coefficients(a, b), |mu, nu| OperatorExpr::u_s(mu) * OperatorExpr::k_s(nu));
    Ok(vec![
        Claim::ops("K_β U_α = Σ g_{αλμ} c^β_{λν} U_μ K_ν", OperatorExpr::k_s(b) * OperatorExpr::u_s(a), rhs.clone()),
        Claim::ops("coefficient form = skew form", ku_rhs(a, b), rhs),
    ])
}

fn cor_main_4(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let rhs = from_coefficients(cor_k_coefficients(a, b), |mu, nu| OperatorExpr::k_s(nu) * OperatorExpr::d_s(mu));
    Ok(vec![
        Claim::ops("D_α K_β = Σ g_{αλμ} c^β_{λν} K_ν D_μ", OperatorExpr::d_s(a) * OperatorExpr::k_s(b), rhs.clone()),
        Claim::ops("coefficient form = skew form", dk_rhs(a, b), rhs),
    ])
}

fn cor_main_5(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let rhs = from_coefficients(cor_kb_coefficients(a, b), |mu, nu| OperatorExpr::u_s(mu) * OperatorExpr::kb_s(nu));
    Ok(vec![
        Claim::ops("K̄_β U_α = Σ g_{λτθ} c^β_{λν} c^α_{τσ} c^μ_{θσ} U_μ K̄_ν", OperatorExpr::kb_s(b) * OperatorExpr::u_s(a), rhs.clone()),
        Claim::ops("coefficient form = skew form", kbu_rhs(a, b, false), rhs),
    ])
}

fn cor_main_6(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let rhs = from_coefficients(cor_kb_coefficients(a, b), |mu, nu| OperatorExpr::kb_s(nu) * OperatorExpr::d_s(mu));
    Ok(vec![
        Claim::ops("D_α K̄_β = Σ g_{λτθ} c^β_{λν} c^α_{τσ} c^μ_{θσ} K̄_ν D_μ", OperatorExpr::d_s(a) * OperatorExpr::kb_s(b), rhs.clone()),
        Claim::ops("coefficient form = skew form", dkb_rhs(a, b, false), rhs),
    ])
}

fn commutators_1(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let (ua, db) = (OperatorExpr::u_s(a), OperatorExpr::d_s(b));
    let comm = db.clone() * ua.clone() - ua * db;
    let r1: OperatorExpr = du_terms(a, b).into_iter().filter(|(l, _)| !l.is_empty()).map(|(_, e)| e).sum();
    let r2: OperatorExpr = ud_terms(a, b).into_iter().filter(|(l, _)| !l.is_empty()).map(|(_, e)| -e).sum();
    Ok(vec![
        Claim::ops("[D_β, U_α] = Σ_{λ≠∅} U_{α/λ} D_{β/λ}", comm.clone(), r1),
        Claim::ops("[D_β, U_α] = Σ_{λ≠∅} (−1)^{|λ|−1} D_{β/λ'} U_{α/λ}", comm, r2),
    ])
}

fn commutators_2(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let (ua, kb) = (OperatorExpr::u_s(a), OperatorExpr::kb_s(b));
    let comm = kb.clone() * ua.clone() - ua * kb;
    Ok(vec![Claim::ops("[K̄_β, U_α] = Σ_{(τ,ν)≠(∅,β)} U K̄_ν", comm, kbu_rhs(a, b, true))])
}

fn commutators_3(p: &Params) -> Result<Vec<Claim>> {
    let (a, b) = ab(p);
    let (da, kb) = (OperatorExpr::d_s(a), OperatorExpr::kb_s(b));
    let comm = da.clone() * kb.clone() - kb * da;
    Ok(vec![Claim::ops("[D_α, K̄_β] = Σ_{(τ,ν)≠(∅,β)} K̄_ν D", comm, dkb_rhs(a, b, true))])
}

fn fgb(p: &Params) -> (SymFunc, SymFunc, &Partition) {
    (s(p.part("f")), s(p.part("g")), p.part("beta"))
}

/// `(λ, μ, c^β_{λμ})`
fn coproduct(beta: &Partition) -> Vec<(Partition, Partition, Rational)> {
    beta.subpartitions()
        .into_iter()
        .flat_map(|l| lr_quotients(beta, &l).into_iter().map(move |(m, c)| (l.clone(), m, c)))
        .collect()
}

fn foulkes(p: &Params) -> Result<Vec<Claim>> {
    let (f, g, beta) = fgb(p);
    let lhs = (&f * &g).skew(&s(beta));
    let rhs = coproduct(beta)
        .into_iter()
        .map(|(l, m, c)| (f.skew(&s(&l)) * g.skew(&s(&m))).scale(&c))
        .sum();
    Ok(vec![Claim::values("D_β(fg) = Σ c^β_{λμ} D_λ(f) D_μ(g)", lhs, rhs)])
}

fn littlewood(p: &Params) -> Result<Vec<Claim>> {
    let (f, g, beta) = fgb(p);
    let lhs = s(beta).kronecker(&(&f * &g));
    let rhs = coproduct(beta)
        .into_iter()
        .map(|(l, m, c)| (s(&m).kronecker(&f) * s(&l).kronecker(&g)).scale(&c))
        .sum();
    Ok(vec![Claim::values("s_β ∗ (fg) = Σ c^β_{λμ} (s_μ∗f)(s_λ∗g)", lhs, rhs)])
}

fn similar(p: &Params) -> Result<Vec<Claim>> {
    let (f, g, beta) = fgb(p);
    let lhs = f.kronecker(&g).skew(&s(beta));
    let n = beta.size();
    let mut rhs = SymFunc::zero();
    for l in partitions_of(n) {
        for m in partitions_of(n) {
            let c = kron(beta, &l, &m);
            if !num_traits::Zero::is_zero(&c) {
                rhs = rhs + f.skew(&s(&l)).kronecker(&g.skew(&s(&m))).scale(&c);
            }
        }
    }
    Ok(vec![Claim::values("D_β(f∗g) = Σ g_{βλμ} D_λ(f) ∗ D_μ(g)", lhs, rhs)])
}

fn reverse_foulkes(p: &Params) -> Result<Vec<Claim>> {
    let (a, b, c) = (p.part("alpha"), p.part("beta"), p.part("gamma"));
    let lhs = s(a) * sk(c, b);
    let rhs = a
        .subpartitions()
        .into_iter()
        .filter(|l| b.contains(&l.conjugate()))
        .map(|l| (sk(a, &l) * s(c)).skew(&sk(b, &l.conjugate())).scale(&sign(l.size())))
        .sum();
    Ok(vec![Claim::values("s_α s_{γ/β} = Σ (−1)^|λ| D_{β/λ'}(s_{α/λ} s_γ)", lhs, rhs)])
}

fn row_op(f: fn(&Partition) -> OperatorExpr, n: usize) -> OperatorExpr {
    f(&Partition::row(n))
}

fn gessel_1(p: &Params) -> Result<Vec<Claim>> {
    let (m, n) = (p.int("m"), p.int("n"));
    let lhs = row_op(OperatorExpr::d_s, n) * row_op(OperatorExpr::u_s, m);
    let rhs = (0..=m.min(n)).map(|i| row_op(OperatorExpr::u_s, m - i) * row_op(OperatorExpr::d_s, n - i)).sum();
    Ok(vec![Claim::ops("D_n U_m = Σ_i U_{m−i} D_{n−i}", lhs, rhs)])
}

fn gessel_2(p: &Params) -> Result<Vec<Claim>> {
    let (m, n) = (p.int("m"), p.int("n"));
    let lhs = row_op(OperatorExpr::u_s, m) * row_op(OperatorExpr::d_s, n);
    let mut rhs = row_op(OperatorExpr::d_s, n) * row_op(OperatorExpr::u_s, m);
    if m > 0 && n > 0 {
        rhs = rhs - row_op(OperatorExpr::d_s, n - 1) * row_op(OperatorExpr::u_s, m - 1);
    }
    Ok(vec![Claim::ops("U_m D_n = D_n U_m − D_{n−1} U_{m−1}", lhs, rhs)])
}

fn gessel_3(p: &Params) -> Result<Vec<Claim>> {
    let (m, n) = (p.int("m"), p.int("n"));
    let col = |k: usize| OperatorExpr::d_s(&Partition::column(k));
    let lhs = col(n) * row_op(OperatorExpr::u_s, m);
    let mut rhs = row_op(OperatorExpr::u_s, m) * col(n);
    if m > 0 && n > 0 {
        rhs = rhs + row_op(OperatorExpr::u_s, m - 1) * col(n - 1);
    }
    Ok(vec![Claim::ops("D_{1^n} U_m = U_m D_{1^n} + U_{m−1} D_{1^{n−1}}", lhs, rhs)])
}

fn kb1(_: &Params) -> Result<Vec<Claim>> {
    let one = Partition::row(1);
    let rhs = OperatorExpr::u_s(&one) * OperatorExpr::d_s(&one) - OperatorExpr::identity();
    Ok(vec![Claim::ops("K̄_(1) = U_1 D_1 − 1", OperatorExpr::kb_s(&one), rhs)])
}

fn straightcorners(p: &Params) -> Result<Vec<Claim>> {
    let a = p.part("alpha");
    let n = a.size();
    let mut rhs = s(a).scale_int(a.noc() as i64 - 1);
    for b in a.addremove_set() {
        rhs = rhs + s(&b);
    }
    let mut claims = vec![Claim::values("K̄_(1) s_α = (noc α − 1) s_α + Σ_{addremove} s_β", apply_kb(&s(&Partition::row(1)), &s(a)), rhs.clone())];
    if n >= 2 {
        let hook = Partition::new(vec![n - 1, 1])?;
        claims.push(Claim::values("s_{(n−1,1)} ∗ s_α in the power-sum basis", s(&hook).kronecker(&s(a)), rhs.clone()));
        if n <= 6 {
            let by_characters = SymFunc::from_terms(
                crate::symfunc::Basis::Schur,
                partitions_of(n).into_iter().map(|nu| {
                    let c = kron(&hook, a, &nu);
                    (nu, c)
                }),
            );
            claims.push(Claim::values("s_{(n−1,1)} ∗ s_α by character sums", by_characters, rhs));
        }
    }
    Ok(claims)
}

fn kbk_ud(p: &Params) -> Result<Vec<Claim>> {
    let k = p.int("k");
    let ud = |n: usize| -> OperatorExpr { partitions_of(n).iter().map(|l| OperatorExpr::u_s(l) * OperatorExpr::d_s(l)).sum() };
    let mut rhs = ud(k);
    if k > 0 {
        rhs = rhs - ud(k - 1);
    }
    Ok(vec![Claim::ops("K̄_(k) = Σ_{λ⊢k} U_λ D_λ − Σ_{λ⊢k−1} U_λ D_λ", OperatorExpr::kb_s(&Partition::row(k)), rhs)])
}

fn kbf_ud(p: &Params) -> Result<Vec<Claim>> {
    let f = s(p.part("alpha"));
    let mut claims = vec![Claim::ops("K̄_f = Σ U_{f[X−1]∗s_λ} D_λ", OperatorExpr::kb(f.clone()), kb_as_ud(&f, p.max_g))];
    for g in partitions_up_to(p.max_g) {
        claims.push(Claim::values(format!("K̄_f(s[{g}]) by straightening = by vertex operator"), apply_kb(&f, &s(&g)), kb_via_gamma(&f, &s(&g))));
    }
    Ok(claims)
}

fn hook(first: i64, k: usize) -> Vec<i64> {
    std::iter::once(first).chain(std::iter::repeat_n(1, k)).collect()
}

fn tworow_hook(p: &Params) -> Result<Vec<Claim>> {
    let (a, k) = (p.part("alpha"), p.int("k"));
    let n = a.size();
    // Σ_{ρ⊢q} s_{α/ρ} s_ρ and Σ_{ρ⊢q} s_{α/ρ} s_ρ'
    let sums = |q: usize, conj: bool| -> SymFunc {
        partitions_of(q)
            .iter()
            .map(|r| sk(a, r) * s(&if conj { r.conjugate() } else { r.clone() }))
            .sum()
    };
    let row_rhs = (0..=k).map(|j| u(sums(k - j, false)) * OperatorExpr::kb_s(&Partition::row(j))).sum();
    let col_rhs = (0..=k).map(|j| u(sums(k - j, true)) * OperatorExpr::kb_s(&Partition::column(j))).sum();
    let mut claims = vec![
        Claim::ops("K̄_(k) U_α = Σ_j (Σ_{ρ⊢k−j} U_{α/ρ} U_ρ) K̄_(j)", OperatorExpr::kb_s(&Partition::row(k)) * OperatorExpr::u_s(a), row_rhs),
        Claim::ops("K̄_(1^k) U_α = Σ_j (Σ_{ρ⊢k−j} U_{α/ρ} U_ρ') K̄_(1^j)", OperatorExpr::kb_s(&Partition::column(k)) * OperatorExpr::u_s(a), col_rhs),
    ];
    for g in partitions_up_to(p.max_g) {
        let m = g.size();
        let total = (n + m) as i64 - k as i64;
        let prod = s(a) * s(&g);
        let row: SymFunc = (0..=k).map(|j| sums(k - j, false) * s(&g).kronecker(&jt(&[m as i64 - j as i64, j as i64]))).sum();
        let col: SymFunc = (0..=k).map(|j| sums(k - j, true) * s(&g).kronecker(&jt(&hook(m as i64 - j as i64, j)))).sum();
        claims.push(Claim::values(format!("two-row, γ=({g})"), jt(&[total, k as i64]).kronecker(&prod), row));
        claims.push(Claim::values(format!("hook, γ=({g})"), jt(&hook(total, k)).kronecker(&prod), col));
    }
    Ok(claims)
}

fn littlewood_sum(p: &Params) -> Result<Vec<Claim>> {
    let (a, q) = (p.part("alpha"), p.int("k"));
    let n = a.size();
    let row: SymFunc = partitions_of(q).iter().map(|r| sk(a, r) * s(r)).sum();
    let col: SymFunc = partitions_of(q).iter().map(|r| sk(a, r) * s(&r.conjugate())).sum();
    let (hh, he) = if q <= n {
        (SymFunc::h(n - q) * SymFunc::h(q), SymFunc::h(n - q) * SymFunc::e(q))
    } else {
        (SymFunc::zero(), SymFunc::zero())
    };
    Ok(vec![
        Claim::values("Σ_{ρ⊢q} s_{α/ρ} s_ρ = s_α ∗ h_{n−q} h_q", row, s(a).kronecker(&hh)),
        Claim::values("Σ_{ρ⊢q} s_{α/ρ} s_ρ' = s_α ∗ h_{n−q} e_q", col, s(a).kronecker(&he)),
    ])
}

fn alpha_theta(p: &Params) -> Result<(&Partition, &Partition)> {
    let (a, t) = (p.part("alpha"), p.part("theta"));
    if !a.contains(t) {
        return Err(Error::MalformedParams(format!("θ = ({t}) is not contained in α = ({a})")));
    }
    Ok((a, t))
}

/// `s_{α/θ} ∗ s_{(n−k−1,1)}`
fn corner_kronecker(a: &Partition, t: &Partition) -> SymFunc {
    let m = (a.size() - t.size()) as i64;
    sk(a, t).kronecker(&jt(&[m - 1, 1]))
}

fn skew_corners(p: &Params) -> Result<Vec<Claim>> {
    let (a, t) = alpha_theta(p)?;
    let rhs = skew_corners_rhs(a, t)?;
    Ok(vec![Claim::values(
        "s_{α/θ} ∗ s_{(n−k−1,1)} = (noc α − noc θ − 1) s_{α/θ} + Σ s_{β/θ} − Σ s_{α/φ}",
        corner_kronecker(a, t),
        rhs,
    )])
}

fn nokronecker(p: &Params) -> Result<Vec<Claim>> {
    let (a, t) = alpha_theta(p)?;
    let sum: SymFunc = t.add_set().iter().map(|d| sk(a, d)).sum();
    let rhs = s(&Partition::row(1)) * sum - sk(a, t);
    Ok(vec![Claim::values("s_{α/θ} ∗ s_{(n−k−1,1)} = s_1 Σ_{δ∈add θ} s_{α/δ} − s_{α/θ}", corner_kronecker(a, t), rhs)])
}

fn tabmanip2(p: &Params) -> Result<Vec<Claim>> {
    let (a, t) = alpha_theta(p)?;
    let (restrict, complement) = add_restrict(t, a);
    let add = a.add_set();
    let lhs: SymFunc = add.iter().flat_map(|g| restrict.iter().map(move |d| sk(g, d))).sum();
    let mut rhs = sk(a, t).scale_int(add.len() as i64 - complement.len() as i64);
    for b in a.addremove_set() {
        rhs = rhs + sk(&b, t);
    }
    Ok(vec![
        Claim::values("Σ s_{γ/δ} = (|add α| − |add θ ∖ α|) s_{α/θ} + Σ s_{β/θ}", lhs, rhs),
        Claim::Bijection { label: "jeu de taquin bijection".into(), report: Box::new(verify_jdt_bijection(a, t)?) },
    ])
}

// Instance generators.

fn pairs_ab(b: &Bounds) -> Vec<Params> {
    let parts = partitions_up_to(b.max_ab);
    parts
        .iter()
        .flat_map(|a| parts.iter().map(move |x| Params::new(b.max_g).alpha(a.clone()).beta(x.clone())))
        .collect()
}

fn fg_pairs(max: usize) -> Vec<(Partition, Partition)> {
    let parts = partitions_up_to(max);
    let mut out = Vec::new();
    for f in &parts {
        for g in &parts {
            if f.size() + g.size() <= max {
                out.push((f.clone(), g.clone()));
            }
        }
    }
    out
}

fn fg_beta(b: &Bounds) -> Vec<Params> {
    fg_pairs(b.max_g)
        .into_iter()
        .flat_map(|(f, g)| {
            partitions_up_to(b.max_ab).into_iter().map(move |x| Params::new(b.max_g).f(f.clone()).g(g.clone()).beta(x))
        })
        .collect()
}

fn fg_beta_matched(b: &Bounds) -> Vec<Params> {
    fg_pairs(b.max_g)
        .into_iter()
        .flat_map(|(f, g)| {
            partitions_of(f.size() + g.size()).into_iter().map(move |x| Params::new(b.max_g).f(f.clone()).g(g.clone()).beta(x))
        })
        .collect()
}

fn abg(b: &Bounds) -> Vec<Params> {
    pairs_ab(b)
        .into_iter()
        .flat_map(|p| partitions_up_to(b.max_g).into_iter().map(move |g| p.clone().gamma(g)))
        .collect()
}

fn mn(b: &Bounds) -> Vec<Params> {
    (0..=b.max_ab).flat_map(|m| (0..=b.max_ab).map(move |n| Params::new(b.max_g).m(m).n(n))).collect()
}

fn single(b: &Bounds) -> Vec<Params> {
    vec![Params::new(b.max_g)]
}

fn alphas(b: &Bounds) -> Vec<Params> {
    partitions_up_to(b.max_g).into_iter().map(|a| Params::new(b.max_g).alpha(a)).collect()
}

fn ks(b: &Bounds) -> Vec<Params> {
    (0..=b.max_ab).map(|k| Params::new(b.max_g).k(k)).collect()
}

fn small_alphas(b: &Bounds) -> Vec<Params> {
    partitions_up_to(b.max_ab).into_iter().map(|a| Params::new(b.max_g).alpha(a)).collect()
}

fn alpha_k(b: &Bounds) -> Vec<Params> {
    partitions_up_to(b.max_ab)
        .into_iter()
        .flat_map(|a| (0..=b.max_ab).map(move |k| Params::new(b.max_g).alpha(a.clone()).k(k)))
        .collect()
}

fn alpha_q(b: &Bounds) -> Vec<Params> {
    partitions_up_to(b.max_g)
        .into_iter()
        .flat_map(|a| (0..=b.max_ab).map(move |k| Params::new(b.max_g).alpha(a.clone()).k(k)))
        .collect()
}

fn alpha_theta_all(b: &Bounds, min_gap: usize) -> Vec<Params> {
    partitions_up_to(b.max_g)
        .into_iter()
        .flat_map(|a| {
            a.subpartitions()
                .into_iter()
                .filter(|t| a.size() - t.size() >= min_gap)
                .map(|t| Params::new(b.max_g).alpha(a.clone()).theta(t))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn corner_instances(b: &Bounds) -> Vec<Params> {
    alpha_theta_all(b, 2)
}

fn tab_instances(b: &Bounds) -> Vec<Params> {
    alpha_theta_all(b, 0)
}

const AB: &[&str] = &["alpha", "beta"];
const FGB: &[&str] = &["f", "g", "beta"];
const AT: &[&str] = &["alpha", "theta"];

macro_rules! entry {
    ($id:ident, $statement:expr, $needs:expr, $instances:expr) => {
        Identity { id: stringify!($id), statement: $statement, needs: $needs, check: $id, instances: $instances }
    };
    ($id:literal => $check:ident, $statement:expr, $needs:expr, $instances:expr) => {
        Identity { id: $id, statement: $statement, needs: $needs, check: $check, instances: $instances }
    };
}

/// All identities, in a fixed order.
pub fn catalog() -> &'static [Identity] {
    static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        vec![
            entry!(thm_main_1, "D_β U_α = Σ_λ U_{α/λ} D_{β/λ}", AB, pairs_ab),
            entry!(thm_main_2, "U_α D_β = Σ_λ (−1)^|λ| D_{β/λ'} U_{α/λ}", AB, pairs_ab),
            entry!(thm_main_3, "K_β U_α = Σ_λ U_{s_{β/λ}∗s_α} K_λ", AB, pairs_ab),
            entry!(thm_main_4, "D_α K_β = Σ_λ K_λ D_{s_{β/λ}∗s_α}", AB, pairs_ab),
            entry!(thm_main_5, "K̄_β U_α = Σ_{τ,ν} U_{(s_{β/ν}∗s_τ)s_{α/τ}} K̄_ν", AB, pairs_ab),
            entry!(thm_main_6, "D_α K̄_β = Σ_{τ,ν} K̄_ν D_{(s_{β/ν}∗s_τ)s_{α/τ}}", AB, pairs_ab),
            entry!("thm_main_cor_1" => cor_main_1, "D_β U_α = Σ c^α_{λμ} c^β_{λν} U_μ D_ν", AB, pairs_ab),
            entry!("thm_main_cor_2" => cor_main_2, "U_α D_β = Σ (−1)^|λ| c^α_{λμ} c^β_{λ'ν} D_ν U_μ", AB, pairs_ab),
            entry!("thm_main_cor_3" => cor_main_3, "K_β U_α = Σ g_{αλμ} c^β_{λν} U_μ K_ν", AB, pairs_ab),
            entry!("thm_main_cor_4" => cor_main_4, "D_α K_β = Σ g_{αλμ} c^β_{λν} K_ν D_μ", AB, pairs_ab),
            entry!("thm_main_cor_5" => cor_main_5, "K̄_β U_α = Σ g_{λτθ} c^β_{λν} c^α_{τσ} c^μ_{θσ} U_μ K̄_ν", AB, pairs_ab),
            entry!("thm_main_cor_6" => cor_main_6, "D_α K̄_β = Σ g_{λτθ} c^β_{λν} c^α_{τσ} c^μ_{θσ} K̄_ν D_μ", AB, pairs_ab),
            entry!(commutators_1, "[D_β, U_α] = Σ_{λ≠∅} U_{α/λ} D_{β/λ} = Σ_{λ≠∅} (−1)^{|λ|−1} D_{β/λ'} U_{α/λ}", AB, pairs_ab),
            entry!(commutators_2, "[K̄_β, U_α] = Σ_{(τ,ν)≠(∅,β)} U_{(s_{β/ν}∗s_τ)s_{α/τ}} K̄_ν", AB, pairs_ab),
            entry!(commutators_3, "[D_α, K̄_β] = Σ_{(τ,ν)≠(∅,β)} K̄_ν D_{(s_{β/ν}∗s_τ)s_{α/τ}}", AB, pairs_ab),
            entry!(foulkes, "D_β(fg) = Σ c^β_{λμ} D_λ(f) D_μ(g)", FGB, fg_beta),
            entry!(littlewood, "s_β ∗ (fg) = Σ c^β_{λμ} (s_μ ∗ f)(s_λ ∗ g)", FGB, fg_beta_matched),
            entry!(similar, "D_β(f ∗ g) = Σ g_{βλμ} D_λ(f) ∗ D_μ(g)", FGB, fg_beta),
            entry!(reverse_foulkes, "s_α s_{γ/β} = Σ_λ (−1)^|λ| D_{β/λ'}(s_{α/λ} s_γ)", &["alpha", "beta", "gamma"], abg),
            entry!(gessel_1, "D_n U_m = Σ_i U_{m−i} D_{n−i}", &["m", "n"], mn),
            entry!(gessel_2, "U_m D_n = D_n U_m − D_{n−1} U_{m−1}", &["m", "n"], mn),
            entry!(gessel_3, "D_{1^n} U_m = U_m D_{1^n} + U_{m−1} D_{1^{n−1}}", &["m", "n"], mn),
            entry!(kb1, "K̄_(1) = U_1 D_1 − 1", &[], single),
            entry!(straightcorners, "K̄_(1) s_α = (noc α − 1) s_α + Σ_{β∈addremove α} s_β", &["alpha"], alphas),
            entry!(kbk_ud, "K̄_(k) = Σ_{λ⊢k} U_λ D_λ − Σ_{λ⊢k−1} U_λ D_λ", &["k"], ks),
            entry!(kbf_ud, "K̄_f = Σ_λ U_{f[X−1]∗s_λ} D_λ", &["alpha"], small_alphas),
            entry!(tworow_hook, "K̄_(k) U_α and K̄_(1^k) U_α expansions", &["alpha", "k"], alpha_k),
            entry!(littlewood_sum, "Σ_{ρ⊢q} s_{α/ρ} s_ρ = s_α ∗ h_{(n−q,q)}", &["alpha", "k"], alpha_q),
            entry!(skew_corners, "s_{α/θ} ∗ s_{(n−k−1,1)} by corners", AT, corner_instances),
            entry!(nokronecker, "s_{α/θ} ∗ s_{(n−k−1,1)} = s_1 Σ_{δ∈add θ} s_{α/δ} − s_{α/θ}", AT, corner_instances),
            entry!(tabmanip2, "Σ_{γ∈add α, δ∈add θ, δ⊆α} s_{γ/δ} = k s_{α/θ} + Σ_{β∈addremove α} s_{β/θ}", AT, tab_instances),
        ]
    })
}
