//! The bundled verification suite: one check per acceptance criterion,
//! each reporting pass/fail with a short detail line.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::data;
use crate::groups::GroupData;
use crate::partitions::{enumerate, strict_partitions, MultiPartition, Partition};
use crate::spherical::{brute_table, coset_order, coset_order_brute, reconcile, Readings, Setup};
use crate::symfunc::{alpha_inner, character_table, jack_p, schur_q};
use crate::wreath::{
    decompose_induced, hecke_coefficient, hecke_labels, irrep_labels, k_basis_sg2, sg_order,
    type_centralizer, x_rho, Caps, HgContext, Pi, ThetaCharacter, WreathCharacters,
};
use crate::{CycNum, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {:>2}: {} ({:.2}s) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.seconds,
            self.detail
        )
    }
}

type Check = fn() -> std::result::Result<String, String>;

const CRITERIA: [(u8, &str, Check); 10] = [
    (
        1,
        "twisted Frobenius-Schur indicators of GL2F3",
        twisted_indicators,
    ),
    (
        2,
        "class and character counting identities",
        counting_identities,
    ),
    (
        3,
        "Littlewood decompositions for the trivial group",
        littlewood,
    ),
    (4, "multiplicity-free induced characters", gelfand_triples),
    (5, "Hecke basis support and the SG_2 K-basis", hecke_support),
    (6, "label set cardinalities", cardinalities),
    (7, "cross-engine reconciliation", reconciliation),
    (
        8,
        "C2 spherical tables as scaled character tables",
        c2_factorization,
    ),
    (9, "double coset orders", coset_orders),
    (10, "property suites", property_suites),
];

pub fn titles() -> Vec<(u8, &'static str)> {
    CRITERIA.iter().map(|(i, t, _)| (*i, *t)).collect()
}

/// Runs one criterion; `None` for an unknown id.
pub fn run(id: u8) -> Option<Outcome> {
    let (id, title, check) = CRITERIA.iter().find(|(i, _, _)| *i == id)?;
    let start = Instant::now();
    let (passed, detail) = match std::panic::catch_unwind(check) {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(_) => (false, "panicked".to_string()),
    };
    Some(Outcome {
        id: *id,
        title,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    })
}

pub fn run_all() -> Vec<Outcome> {
    CRITERIA.iter().filter_map(|(i, _, _)| run(*i)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bundled(name: &str) -> std::result::Result<GroupData, String> {
    data::bundled(name).map_err(|e| e.to_string())
}

fn e2s(e: crate::Error) -> String {
    e.to_string()
}

fn twisted_indicators() -> std::result::Result<String, String> {
    let d = bundled("GL2F3")?;
    let xi = d.find_char("chi2").map_err(e2s)?;
    let one = d.trivial_char();
    let col = |eta: usize| -> std::result::Result<Vec<i64>, String> {
        (0..d.num_classes())
            .map(|c| d.nu2(eta, c).map_err(e2s))
            .collect()
    };
    let twisted = col(xi)?;
    let plain = col(one)?;
    ensure(twisted == [0, 0, -1, 0, 0, -1, -1, -1], || {
        format!("nu2^chi2 = {twisted:?}")
    })?;
    ensure(plain == [1, 1, 1, 1, 1, 0, 0, 1], || {
        format!("nu2^1 = {plain:?}")
    })?;
    Ok(format!("nu2^chi2 = {twisted:?}, nu2^1 = {plain:?}"))
}

fn counting_identities() -> std::result::Result<String, String> {
    let mut pairs = 0;
    for name in data::NAMES {
        let d = bundled(name)?;
        for xi in d.linear_characters().map_err(e2s)? {
            let f = d.fusion(xi).map_err(e2s)?;
            let bad = f.check_identities();
            ensure(bad.is_empty(), || format!("{name} xi={xi}: {bad:?}"))?;
            // The stats count characters by ν₂; recount them directly.
            let mut r = 0;
            let mut c = 0;
            for chi in 0..d.num_classes() {
                match d.nu2(xi, chi).map_err(e2s)? {
                    0 => c += 1,
                    _ => r += 1,
                }
            }
            ensure(
                r == f.stats.n_upper_r_xi && c == f.stats.n_upper_c_xi,
                || format!("{name} xi={xi}: character counts {r}/{c}"),
            )?;
            pairs += 1;
        }
    }
    let d = bundled("GL2F3")?;
    let f = d.fusion(d.find_char("chi2").map_err(e2s)?).map_err(e2s)?;
    let s = f.stats;
    ensure(s.n_xi == 1 && s.n_c == 2 && s.n_upper_c_xi == 4, || {
        format!(
            "GL2F3 chi2: n_xi={} n_C={} n^C={}",
            s.n_xi, s.n_c, s.n_upper_c_xi
        )
    })?;
    Ok(format!(
        "{pairs} (group, xi) pairs; GL2F3 chi2: n_xi=1, n_C=2, n^C=4"
    ))
}

fn littlewood() -> std::result::Result<String, String> {
    let d = bundled("trivial")?;
    for n in 1..=3 {
        for pi in Pi::ALL {
            let got = decompose_induced(&d, ThetaCharacter::new(0, pi, n), &Caps::default())
                .map_err(e2s)?;
            ensure(got.iter().all(|(_, m)| *m == 1), || {
                format!("{pi} n={n}: {got:?}")
            })?;
            let got: BTreeSet<Partition> = got.into_iter().map(|(l, _)| l.get(0).clone()).collect();
            let want: BTreeSet<Partition> = match pi {
                Pi::Trivial => enumerate(n).iter().map(|l| l.scale(2)).collect(),
                Pi::Delta => enumerate(n)
                    .iter()
                    .map(|l| l.scale(2).transpose())
                    .collect(),
                Pi::Iota => strict_partitions(n)
                    .iter()
                    .map(|l| l.doubling().map_err(e2s))
                    .collect::<std::result::Result<_, _>>()?,
                Pi::DeltaIota => strict_partitions(n)
                    .iter()
                    .map(|l| l.doubling().map(|p| p.transpose()).map_err(e2s))
                    .collect::<std::result::Result<_, _>>()?,
            };
            ensure(got == want, || format!("{pi} n={n}: {got:?} != {want:?}"))?;
        }
    }
    Ok("n = 1..3, all four characters".into())
}

fn triple_configs() -> Vec<(&'static str, usize)> {
    let mut v: Vec<(&str, usize)> = ["C2", "C3", "C4", "Q8"].iter().map(|g| (*g, 1)).collect();
    v.extend(["C2", "C3", "C4", "Q8"].iter().map(|g| (*g, 2)));
    v.push(("C2", 3));
    v
}

fn gelfand_triples() -> std::result::Result<String, String> {
    let mut count = 0;
    for (g, n) in triple_configs() {
        let d = bundled(g)?;
        for xi in d.linear_characters().map_err(e2s)? {
            let f = d.fusion(xi).map_err(e2s)?;
            for pi in Pi::ALL {
                let got = decompose_induced(&d, ThetaCharacter::new(xi, pi, n), &Caps::default())
                    .map_err(e2s)?;
                ensure(got.iter().all(|(_, m)| *m == 1), || {
                    format!("{g} xi={xi} {pi} n={n}: multiplicities {got:?}")
                })?;
                let got: BTreeSet<MultiPartition> = got.into_iter().map(|(l, _)| l).collect();
                let want: BTreeSet<MultiPartition> = irrep_labels(&d, &f, pi, n)
                    .map_err(e2s)?
                    .into_iter()
                    .map(|i| i.label)
                    .collect();
                ensure(got == want, || {
                    format!("{g} xi={xi} {pi} n={n}: support differs")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} configurations"))
}

fn hecke_support() -> std::result::Result<String, String> {
    let mut count = 0;
    for g in ["C2", "C3", "C4", "Q8"] {
        let d = bundled(g)?;
        for xi in d.linear_characters().map_err(e2s)? {
            let f = d.fusion(xi).map_err(e2s)?;
            for pi in Pi::ALL {
                for n in 1..=2 {
                    let ctx = HgContext::new(&d, ThetaCharacter::new(xi, pi, n), &Caps::default())
                        .map_err(e2s)?;
                    let good = hecke_labels(&d, &f, n, pi.epsilon());
                    for rho in crate::partitions::enumerate_multi(f.g_starstar.len(), n) {
                        let x = x_rho(&f, &rho).map_err(e2s)?;
                        let c = hecke_coefficient(&ctx, &x).map_err(e2s)?;
                        ensure(!c.is_zero() == good.contains(&rho), || {
                            format!("{g} xi={xi} {pi} n={n} at {rho}: coefficient {c}")
                        })?;
                    }
                    count += 1;
                }
            }
        }
    }
    // K-basis of SG_2: 0 on real classes where ξ = −1, 2ζ_g on other real
    // classes, ζ_g on complex classes.
    let d = bundled("GL2F3")?;
    let mut k_entries = 0;
    for xi in d.linear_characters().map_err(e2s)? {
        for eps in [Pi::Trivial, Pi::Delta] {
            for e in k_basis_sg2(&d, xi, eps).map_err(e2s)? {
                let col = d.column(e.element);
                let zeta = CycNum::from_int(d.zeta(col) as i64);
                let want = if d.inverse_column(col) != col {
                    zeta
                } else if *d.chi(xi, e.element) == CycNum::from_int(-1) {
                    CycNum::zero()
                } else {
                    zeta * CycNum::from_int(2)
                };
                ensure(e.coefficient == want, || {
                    format!(
                        "GL2F3 xi={xi} {eps} g={}: {} != {want}",
                        e.element, e.coefficient
                    )
                })?;
                k_entries += 1;
            }
        }
    }
    Ok(format!(
        "{count} configurations, {k_entries} K-basis entries"
    ))
}

fn cardinalities() -> std::result::Result<String, String> {
    let mut count = 0;
    for name in data::NAMES {
        let d = bundled(name)?;
        for xi in d.linear_characters().map_err(e2s)? {
            let f = d.fusion(xi).map_err(e2s)?;
            for pi in Pi::ALL {
                for n in 1..=4 {
                    let rows = irrep_labels(&d, &f, pi, n).map_err(e2s)?.len();
                    let cols = hecke_labels(&d, &f, n, pi.epsilon()).len();
                    ensure(rows == cols, || {
                        format!("{name} xi={xi} {pi} n={n}: {rows} != {cols}")
                    })?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} configurations"))
}

fn reconciliation() -> std::result::Result<String, String> {
    let mut configs: Vec<(&str, usize, Pi, usize)> = Vec::new();
    for xi in 0..2 {
        for pi in Pi::ALL {
            for n in 1..=2 {
                configs.push(("C2", xi, pi, n));
            }
        }
    }
    configs.push(("Q8", 1, Pi::Trivial, 1));
    configs.push(("Q8", 1, Pi::Iota, 1));
    for pi in Pi::ALL {
        for n in 1..=3 {
            configs.push(("trivial", 0, pi, n));
        }
    }
    // The twisted Jack factor itself needs a character with ν₂ = −1.
    configs.push(("Q8", 0, Pi::Trivial, 1));
    configs.push(("Q8", 0, Pi::Trivial, 2));
    let mut cells = 0;
    for &(g, xi, pi, n) in &configs {
        let d = bundled(g)?;
        let s = Setup::new(&d, xi, pi, n).map_err(e2s)?;
        let r = reconcile(&s, &Readings::default(), &Caps::default()).map_err(e2s)?;
        ensure(r.is_clean(), || {
            format!("{g} xi={xi} {pi} n={n}: {:?}", r.mismatches)
        })?;
        cells += r.closed_cells + r.symfunc_terms;
    }
    Ok(format!(
        "{} configurations, {cells} compared values",
        configs.len()
    ))
}

/// Ω(x(ρ̲)) against h_λ/(2^{n−ℓ(ρ)} n!) χ^λ_ρ, ρ = ρ̂, with λ′ in the
/// character for π ∈ {ι, δ⊗ι}. Returns the cells that disagree.
pub fn c2_factorization_mismatches(
    pi: Pi,
    n: usize,
) -> crate::Result<Vec<(String, String, CycNum, CycNum)>> {
    let d = data::bundled("C2")?;
    let s = Setup::new(&d, 1, pi, n)?;
    let t = brute_table(&s, &Caps::default())?;
    let mut bad = Vec::new();
    for (i, row) in s.rows.iter().enumerate() {
        let lambda = row.label.get(0);
        let chi = if pi.has_iota() {
            lambda.transpose()
        } else {
            lambda.clone()
        };
        for (j, col) in s.cols.iter().enumerate() {
            let rho = col.hat();
            let ch = crate::symfunc::sym_character(&chi, &rho)?;
            let want = CycNum::from_rational(Rational::new(
                BigInt::from(lambda.hook_product()) * BigInt::from(ch),
                BigInt::from(2).pow((n - rho.len()) as u32)
                    * BigInt::from(crate::partitions::factorial(n)),
            ));
            if t.values[i][j] != want {
                bad.push((
                    t.row_names[i].clone(),
                    t.col_names[j].clone(),
                    t.values[i][j].clone(),
                    want,
                ));
            }
        }
    }
    Ok(bad)
}

fn c2_factorization() -> std::result::Result<String, String> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=4 {
        for pi in Pi::ALL {
            let bad = c2_factorization_mismatches(pi, n).map_err(e2s)?;
            checked += 1;
            if !bad.is_empty() {
                let all_negated = bad.iter().all(|(_, _, got, want)| *got == -want.clone());
                failures.push(format!(
                    "{pi} n={n}: {} cells differ{}",
                    bad.len(),
                    if all_negated { " by a sign" } else { "" }
                ));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{checked} tables"))
    } else {
        Err(failures.join("; "))
    }
}

fn coset_orders() -> std::result::Result<String, String> {
    for (g, n) in [("C2", 1), ("C4", 1), ("Q8", 1), ("C2", 2)] {
        let d = bundled(g)?;
        let one = d.trivial_char();
        let f = d.fusion(one).map_err(e2s)?;
        let ctx = HgContext::new(
            &d,
            ThetaCharacter::new(one, Pi::Trivial, n),
            &Caps::default(),
        )
        .map_err(e2s)?;
        let mut total = BigInt::zero();
        for rho in crate::partitions::enumerate_multi(f.g_starstar.len(), n) {
            let formula = coset_order(&d, &f, &rho);
            let brute = coset_order_brute(&ctx, &x_rho(&f, &rho).map_err(e2s)?);
            ensure(formula == BigInt::from(brute), || {
                format!("{g} n={n} {rho}: {formula} != {brute}")
            })?;
            total += formula;
        }
        let want = BigInt::from(sg_order(d.order(), 2 * n));
        ensure(total == want, || {
            format!("{g} n={n}: sum {total} != {want}")
        })?;
    }
    Ok("C2, C4, Q8 at n = 1 and C2 at n = 2".into())
}

fn cyclotomic_axioms() -> std::result::Result<usize, String> {
    let mut xs = vec![CycNum::zero(), CycNum::one(), CycNum::from_int(-3)];
    for (m, k) in [(8u32, 1i64), (8, 3), (12, 1), (12, 5), (5, 2), (3, 1)] {
        xs.push(CycNum::zeta(m, k));
    }
    let base = xs.clone();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i + 1..] {
            xs.push(a + b);
            xs.push(a * &CycNum::from_rational(Rational::new(2.into(), 3.into())) - b.clone());
        }
    }
    let mut checks = 0;
    for a in &xs {
        if let Some(inv) = a.inverse() {
            ensure((a * &inv).is_one(), || format!("{a} · {inv} != 1"))?;
        } else {
            ensure(a.is_zero(), || format!("{a} has no inverse"))?;
        }
        for b in xs.iter().step_by(3) {
            ensure(a + b == b + a && a * b == b * a, || {
                format!("commutativity at {a}, {b}")
            })?;
            for c in xs.iter().step_by(7) {
                ensure(&(a * b) * c == a * &(b * c), || {
                    format!("associativity at {a}, {b}, {c}")
                })?;
                ensure(a * &(b + c) == a * b + a * c, || {
                    format!("distributivity at {a}, {b}, {c}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(checks)
}

fn sg_table_orthogonality(d: &GroupData, n: usize) -> std::result::Result<(), String> {
    let w = WreathCharacters::new(d);
    let (labels, types, rows) = w.table(n).map_err(e2s)?;
    let inv_z: Vec<CycNum> = types
        .iter()
        .map(|t| CycNum::from_rational(Rational::new(BigInt::one(), type_centralizer(d, t))))
        .collect();
    for i in 0..labels.len() {
        for j in i..labels.len() {
            let mut s = CycNum::zero();
            for t in 0..types.len() {
                s += &(&(&rows[i][t] * &rows[j][t].conjugate()) * &inv_z[t]);
            }
            let want = if i == j {
                CycNum::one()
            } else {
                CycNum::zero()
            };
            ensure(s == want, || {
                format!("{} SG_{n}: rows {} {}", d.name(), labels[i], labels[j])
            })?;
        }
    }
    Ok(())
}

fn property_suites() -> std::result::Result<String, String> {
    let cyclo_checks = cyclotomic_axioms()?;

    let mut tables = 0;
    for name in data::NAMES {
        let d = bundled(name)?;
        let top = match d.order() {
            1..=2 => 4,
            3..=4 => 3,
            5..=8 => 2,
            _ => 1,
        };
        for n in 1..=top {
            sg_table_orthogonality(&d, n)?;
            tables += 1;
        }
    }

    let mut omega_rows = 0;
    for name in data::NAMES {
        let d = bundled(name)?;
        for xi in d.linear_characters().map_err(e2s)? {
            for pi in Pi::ALL {
                let top = if d.order() <= 4 { 2 } else { 1 };
                for n in 1..=top {
                    // brute_table refuses rows whose value at 1 is not 1.
                    let s = Setup::new(&d, xi, pi, n).map_err(e2s)?;
                    omega_rows += brute_table(&s, &Caps::default()).map_err(e2s)?.rows.len();
                }
            }
        }
    }

    for n in 1..=7 {
        let parts = enumerate(n);
        let table = character_table(n);
        for i in 0..parts.len() {
            for j in i..parts.len() {
                let mut s = Rational::zero();
                for (k, rho) in parts.iter().enumerate() {
                    s += Rational::new(
                        BigInt::from(table[i][k] * table[j][k]),
                        BigInt::from(rho.z()),
                    );
                }
                let want = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                ensure(s == want, || {
                    format!("MN orthogonality n={n} at {} {}", parts[i], parts[j])
                })?;
            }
        }
    }

    let alphas = [
        Rational::from_integer(2.into()),
        Rational::new(1.into(), 2.into()),
        Rational::one(),
        Rational::new(3.into(), 5.into()),
    ];
    for n in 1..=5 {
        let parts = enumerate(n);
        for alpha in &alphas {
            let js: Vec<_> = parts.iter().map(|l| jack_p(l, alpha)).collect();
            for i in 0..js.len() {
                for j in i + 1..js.len() {
                    let v = alpha_inner(&js[i], &js[j], alpha);
                    ensure(v.is_zero(), || {
                        format!("Jack α={alpha} n={n}: <{}, {}> = {v}", parts[i], parts[j])
                    })?;
                }
            }
        }
    }

    for n in 1..=6 {
        for l in strict_partitions(n) {
            let q = schur_q(&l).map_err(e2s)?;
            ensure(
                q.terms()
                    .all(|(k, _)| k.get(0).parts().iter().all(|r| r % 2 == 1)),
                || format!("Q_{l} has an even power sum"),
            )?;
        }
    }

    Ok(format!(
        "{cyclo_checks} cyclotomic triples, {tables} SG_n tables, {omega_rows} spherical rows with Ω(1) = 1, MN n ≤ 7, Jack n ≤ 5, Q n ≤ 6"
    ))
}
