use super::*;
use crate::data;
use crate::partitions::{enumerate_multi, factorial, Partition};
use crate::wreath::{hg_order, sg_order};

fn cyc(q: Rational) -> CycNum {
    CycNum::from_rational(q)
}

fn clean(g: &str, xi: usize, pi: Pi, n: usize, readings: &Readings) -> ReconcileReport {
    let d = data::bundled(g).unwrap();
    let s = Setup::new(&d, xi, pi, n).unwrap();
    reconcile(&s, readings, &Caps::default()).unwrap()
}

#[test]
fn engines_agree() {
    let cases: &[(&str, usize, &[usize])] = &[
        ("trivial", 0, &[1, 2, 3]),
        ("C2", 0, &[1, 2]),
        ("C2", 1, &[1, 2]),
        ("C3", 0, &[1, 2]),
        ("C4", 0, &[1, 2]),
        ("C4", 1, &[1]),
        ("C4", 2, &[1]),
        ("Q8", 0, &[1, 2]),
        ("Q8", 1, &[1]),
        ("C6", 3, &[1]),
        ("GL2F3", 0, &[1]),
        ("GL2F3", 1, &[1]),
    ];
    for &(g, xi, ns) in cases {
        for &n in ns {
            for pi in Pi::ALL {
                let r = clean(g, xi, pi, n, &Readings::default());
                assert!(r.is_clean(), "{g} xi={xi} {pi} n={n}: {:?}", r.mismatches);
                assert!(r.symfunc_terms > 0);
            }
        }
    }
}

#[test]
fn other_readings_are_rejected() {
    let base = Readings::default();
    let r = clean(
        "C2",
        0,
        Pi::Trivial,
        1,
        &Readings {
            prefactor: Prefactor::DimOverGroup,
            ..base
        },
    );
    assert!(!r.is_clean());
    let r = clean(
        "C3",
        0,
        Pi::Iota,
        1,
        &Readings {
            iota_alphabet: IotaAlphabet::ByReality,
            ..base
        },
    );
    assert!(!r.is_clean());
    let r = clean(
        "C2",
        1,
        Pi::Iota,
        2,
        &Readings {
            iota_alphabet: IotaAlphabet::ByReality,
            ..base
        },
    );
    assert!(
        r.ratios.iter().any(|(_, q)| q.is_none()),
        "not a constant multiple"
    );
    // Q8 with ξ = 1 has ν₂(χ5) = −1.
    let r = clean(
        "Q8",
        0,
        Pi::Trivial,
        2,
        &Readings {
            psi: PsiReading::Transposed,
            ..base
        },
    );
    assert!(!r.is_clean());
    let r = clean(
        "Q8",
        0,
        Pi::Trivial,
        2,
        &Readings {
            psi: PsiReading::Untransposed,
            ..base
        },
    );
    assert!(r.ratios.iter().any(|(_, q)| q.is_none()));
}

#[test]
fn identity_value_is_one_in_every_engine() {
    for (g, xi) in [("C2", 1), ("C3", 0), ("Q8", 1), ("C4", 2)] {
        let d = data::bundled(g).unwrap();
        for pi in Pi::ALL {
            for n in 1..=2 {
                let s = Setup::new(&d, xi, pi, n).unwrap();
                let id = s.identity_column().unwrap();
                // x(1ⁿ) = t_n, so the identity label reads conj Θ(t_n).
                let at_tn = s
                    .theta
                    .value(&d, &WreathElement::from_perm(crate::wreath::t_n(n)))
                    .unwrap()
                    .conjugate();
                let b = Brute::new(&d, s.theta, &Caps::default()).unwrap();
                for r in &s.rows {
                    let v = b.value(&r.label, &WreathElement::identity(2 * n)).unwrap();
                    assert_eq!(v, CycNum::one());
                }
                for t in [
                    brute_table(&s, &Caps::default()).unwrap(),
                    closed_table(&s, &Caps::default()).unwrap(),
                    symfunc_table(&s, &Readings::default()).unwrap(),
                ] {
                    assert_eq!(t.rows.len(), t.cols.len());
                    for row in &t.values {
                        assert_eq!(row[id], at_tn, "{g} {pi} n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn bi_equivariance() {
    let d = data::bundled("C3").unwrap();
    for pi in Pi::ALL {
        let s = Setup::new(&d, 0, pi, 2).unwrap();
        let b = Brute::new(&d, s.theta, &Caps::default()).unwrap();
        let labels: Vec<_> = s.rows.iter().map(|r| r.label.clone()).collect();
        let g = d.group();
        let hs = &b.ctx.elements;
        for x in &s.reps {
            let base = b.values(&labels, x, &Caps::default()).unwrap();
            for k in [1usize, 7, 40, 101] {
                let (a, c) = (&hs[k % hs.len()], &hs[(3 * k + 5) % hs.len()]);
                let y = a.mul(x, g).mul(c, g);
                let scale = s.theta.value(&d, a).unwrap().conjugate()
                    * s.theta.value(&d, c).unwrap().conjugate();
                let moved = b.values(&labels, &y, &Caps::default()).unwrap();
                for (u, v) in base.iter().zip(&moved) {
                    assert_eq!(&(u * &scale), v, "{pi}");
                }
            }
        }
    }
}

#[test]
fn orthogonality_with_coset_weights() {
    // Σ_ρ |D_ρ| Ω_λ conj Ω_μ = δ_{λμ} |SG_{2n}| / dim S^{λ̲}.
    for (g, xi, n) in [("C2", 0, 2), ("C2", 1, 2), ("C3", 0, 2), ("Q8", 1, 1)] {
        let d = data::bundled(g).unwrap();
        let chars = WreathCharacters::new(&d);
        for pi in Pi::ALL {
            let s = Setup::new(&d, xi, pi, n).unwrap();
            let t = brute_table(&s, &Caps::default()).unwrap();
            let sizes: Vec<CycNum> = s
                .cols
                .iter()
                .map(|c| cyc(Rational::from_integer(coset_order(&d, &s.fusion, c))))
                .collect();
            for (i, a) in t.values.iter().enumerate() {
                for (j, b) in t.values.iter().enumerate() {
                    let mut sum = CycNum::zero();
                    for k in 0..sizes.len() {
                        sum += &(&(&a[k] * &b[k].conjugate()) * &sizes[k]);
                    }
                    let want = if i == j {
                        cyc(Rational::new(
                            BigInt::from(sg_order(d.order(), 2 * n)),
                            chars.dimension(&t.rows[i]),
                        ))
                    } else {
                        CycNum::zero()
                    };
                    assert_eq!(sum, want, "{g} {pi} n={n} rows {i} {j}");
                }
            }
        }
    }
}

#[test]
fn coset_orders_match_enumeration() {
    for (g, n) in [("C2", 1), ("C4", 1), ("Q8", 1), ("C2", 2)] {
        let d = data::bundled(g).unwrap();
        let fusion = d.fusion(d.trivial_char()).unwrap();
        let ctx = HgContext::new(
            &d,
            ThetaCharacter::new(d.trivial_char(), Pi::Trivial, n),
            &Caps::default(),
        )
        .unwrap();
        let mut total = BigInt::zero();
        for rho in enumerate_multi(fusion.g_starstar.len(), n) {
            let f = coset_order(&d, &fusion, &rho);
            let x = x_rho(&fusion, &rho).unwrap();
            assert_eq!(f, BigInt::from(coset_order_brute(&ctx, &x)), "{g} {rho}");
            total += f;
        }
        assert_eq!(total, BigInt::from(sg_order(d.order(), 2 * n)), "{g} n={n}");
    }
}

#[test]
fn identity_coset_is_the_subgroup() {
    let d = data::bundled("C3").unwrap();
    let fusion = d.fusion(0).unwrap();
    for n in 1..=3 {
        let id = fusion.merged_of_column(d.identity_column());
        let mut comps = vec![Partition::empty(); fusion.g_starstar.len()];
        comps[id] = Partition::new(vec![1; n]).unwrap();
        let rho = MultiPartition::new(comps);
        assert_eq!(coset_order(&d, &fusion, &rho), BigInt::from(hg_order(3, n)));
    }
}

#[test]
fn ch_is_multiplicative() {
    for (g, xi, pi) in [
        ("C2", 0, Pi::Trivial),
        ("C2", 0, Pi::Iota),
        ("C2", 1, Pi::Trivial),
        ("C3", 0, Pi::Iota),
    ] {
        let d = data::bundled(g).unwrap();
        let s1 = Setup::new(&d, xi, pi, 1).unwrap();
        let s2 = Setup::new(&d, xi, pi, 2).unwrap();
        let c1 = HgContext::new(&d, s1.theta, &Caps::default()).unwrap();
        let c2 = HgContext::new(&d, s2.theta, &Caps::default()).unwrap();
        for a in &s1.cols {
            for b in &s1.cols {
                let fa = GroupAlgebra::basis(&s1, &c1, a).unwrap();
                let fb = GroupAlgebra::basis(&s1, &c1, b).unwrap();
                let prod = fa.cross(&fb).sandwich(&c2);
                let lhs = ch_map(&s2, &prod.to_hecke(&s2).unwrap()).unwrap();
                let ra = ch_map(&s1, &fa.to_hecke(&s1).unwrap()).unwrap();
                let rb = ch_map(&s1, &fb.to_hecke(&s1).unwrap()).unwrap();
                assert_eq!(lhs, ra.multiply(&rb).unwrap(), "{g} {pi} {a} x {b}");
            }
        }
    }
}

#[test]
fn ch_of_basis_element_carries_the_radical() {
    let d = data::bundled("C2").unwrap();
    let s = Setup::new(&d, 0, Pi::Iota, 1).unwrap();
    let ctx = HgContext::new(&d, s.theta, &Caps::default()).unwrap();
    for rho in &s.cols {
        let f = GroupAlgebra::basis(&s, &ctx, rho).unwrap();
        let image = ch_map(&s, &f.to_hecke(&s).unwrap()).unwrap();
        // Both classes of C2 are real, each part contributes 2.
        assert_eq!(image.coeff(rho), CycNum::from_int(1 << rho.total_len()));
        assert_eq!(image.len(), 1);
    }
}

#[test]
fn rhs_is_homogeneous() {
    let d = data::bundled("C3").unwrap();
    for pi in Pi::ALL {
        let s = Setup::new(&d, 0, pi, 3).unwrap();
        for row in &s.rows {
            let f = predicted_ch(&s, row, &Readings::default()).unwrap();
            assert!(f.terms().all(|(k, _)| k.weight() == 3));
        }
    }
}

#[test]
fn c2_sign_case_is_scaled_character_table() {
    let d = data::bundled("C2").unwrap();
    for n in 2..=3 {
        for pi in [Pi::Trivial, Pi::Iota] {
            let s = Setup::new(&d, 1, pi, n).unwrap();
            let t = closed_table(&s, &Caps::default()).unwrap();
            for (i, row) in s.rows.iter().enumerate() {
                let lambda = &row.params[0];
                let chi_l = if pi == Pi::Iota {
                    lambda.transpose()
                } else {
                    lambda.clone()
                };
                for (j, col) in s.cols.iter().enumerate() {
                    let rho = col.hat();
                    let ch = crate::symfunc::sym_character(&chi_l, &rho).unwrap();
                    let want = Rational::new(
                        BigInt::from(lambda.hook_product()) * BigInt::from(ch),
                        BigInt::from(2).pow((n - rho.len()) as u32) * BigInt::from(factorial(n)),
                    );
                    assert_eq!(t.values[i][j], cyc(want), "{pi} n={n} {lambda} at {col}");
                }
            }
        }
    }
}

#[test]
fn closed_engine_reports_its_cells() {
    let d = data::bundled("C3").unwrap();
    let s = Setup::new(&d, 0, Pi::Trivial, 2).unwrap();
    let t = closed_table(&s, &Caps::default()).unwrap();
    let multi = s
        .rows
        .iter()
        .position(|r| r.params.iter().filter(|p| !p.is_empty()).count() > 1)
        .unwrap();
    assert!(t.engines[multi].iter().all(|e| *e == Engine::Brute));
    assert!(t.engines[0].iter().all(|e| *e == Engine::Closed));
}

#[test]
fn symfunc_table_matches_brute() {
    let d = data::bundled("Q8").unwrap();
    for pi in Pi::ALL {
        let s = Setup::new(&d, 0, pi, 2).unwrap();
        let a = brute_table(&s, &Caps::default()).unwrap();
        let b = symfunc_table(&s, &Readings::default()).unwrap();
        assert_eq!(a.values, b.values, "{pi}");
    }
}

#[test]
fn table_json_round_trip() {
    let d = data::bundled("C2").unwrap();
    let s = Setup::new(&d, 1, Pi::Iota, 2).unwrap();
    let t = closed_table(&s, &Caps::default()).unwrap();
    let back = SphericalTable::from_json(&t.to_json()).unwrap();
    assert_eq!(back.values, t.values);
    assert_eq!(back.row_names, t.row_names);
    assert_eq!(back.engines, t.engines);
    assert!(t.to_csv().starts_with("label,"));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = SphericalCache::new(dir.path()).unwrap();
    let d = data::bundled("C3").unwrap();
    let s = Setup::new(&d, 0, Pi::Iota, 1).unwrap();
    assert!(cache.get(&s, Engine::Brute).unwrap().is_none());
    let t = cache
        .get_or_compute(&s, Engine::Brute, || brute_table(&s, &Caps::default()))
        .unwrap();
    let again = cache
        .get_or_compute(&s, Engine::Brute, || panic!("should hit"))
        .unwrap();
    assert_eq!(t.values, again.values);
    assert_eq!(again.rows.len(), s.rows.len());
    let other = Setup::new(&d, 0, Pi::Trivial, 1).unwrap();
    assert_ne!(
        SphericalCache::key(&s, Engine::Brute),
        SphericalCache::key(&other, Engine::Brute)
    );
}

#[test]
fn label_outside_support_is_an_error() {
    let d = data::bundled("trivial").unwrap();
    let s = Setup::new(&d, 0, Pi::Trivial, 1).unwrap();
    let b = Brute::new(&d, s.theta, &Caps::default()).unwrap();
    // (1,1) does not occur in the trivial character induced from H_1.
    let bad = MultiPartition::single(1, 0, Partition::new(vec![1, 1]).unwrap());
    assert!(b
        .value(&bad, &WreathElement::identity(2))
        .unwrap()
        .is_zero());
    let f = HeckeElem {
        n: 1,
        values: [(bad, CycNum::one())].into_iter().collect(),
    };
    assert!(matches!(ch_map(&s, &f), Err(Error::SupportViolation(_))));
}

#[test]
fn trivial_group_delta_is_the_half_jack() {
    // |HG_n|⁻¹ CH_δ(Ω) at the label (2μ)′ is (−2)ⁿ ψ(J^{(1/2)}_{μ′}).
    let d = data::bundled("trivial").unwrap();
    let half = Rational::new(1.into(), 2.into());
    for n in 1..=3 {
        let s = Setup::new(&d, 0, Pi::Delta, n).unwrap();
        let t = brute_table(&s, &Caps::default()).unwrap();
        for (i, row) in s.rows.iter().enumerate() {
            let lhs = normalized_ch(&s, &t.values[i]).unwrap();
            let mu = &row.params[0];
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let want = crate::symfunc::jack_p(&mu.transpose(), &half)
                .psi_twist(&half)
                .scale(&Rational::from_integer(BigInt::from(sign << n)))
                .map_coeffs(|q| cyc(q.clone()))
                .change_alphabet(s.fusion.merged_names(), |_, _, _| CycNum::one());
            assert_eq!(lhs, want, "n={n} {}", row.label);
        }
    }
}
