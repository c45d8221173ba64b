use std::sync::OnceLock;

use num_traits::{One, Zero};
use proptest::prelude::*;

use gelfand_triple::data;
use gelfand_triple::partitions::{
    enumerate, factorial, glaisher, glaisher_inverse, odd_partitions,
};
use gelfand_triple::perm::Perm;
use gelfand_triple::spherical::{closed_value, Brute, Setup};
use gelfand_triple::wreath::{Caps, HgContext};
use gelfand_triple::{CycNum, GroupData, Pi, ThetaCharacter, WreathElement};

const PIS: [Pi; 4] = [Pi::Trivial, Pi::Delta, Pi::Iota, Pi::DeltaIota];

fn q8() -> &'static GroupData {
    static G: OnceLock<GroupData> = OnceLock::new();
    G.get_or_init(|| data::bundled("Q8").unwrap())
}

fn c4() -> &'static GroupData {
    static G: OnceLock<GroupData> = OnceLock::new();
    G.get_or_init(|| data::bundled("C4").unwrap())
}

/// Σ_k c_k ζ_m^k with small integer c_k.
fn cyc() -> impl Strategy<Value = CycNum> {
    (
        prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]),
        prop::collection::vec(-3i64..=3, 1..5),
    )
        .prop_map(|(m, cs)| {
            let mut x = CycNum::zero();
            for (k, c) in cs.into_iter().enumerate() {
                x += &(CycNum::zeta(m, k as i64) * CycNum::from_int(c));
            }
            x
        })
}

fn wreath_elt(order: usize, m: usize) -> impl Strategy<Value = WreathElement> {
    (
        prop::collection::vec(0..order, m),
        Just((0..m).collect::<Vec<usize>>()).prop_shuffle(),
    )
        .prop_map(|(base, images)| {
            WreathElement::new(base, Perm::from_images(images).unwrap()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &CycNum::one(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), CycNum::one());
        } else {
            prop_assert!(a.inverse().is_none());
        }
    }

    #[test]
    fn galois_action_is_a_ring_map(a in cyc(), b in cyc(), k in prop::sample::select(vec![1i64, 7, 11, 13, 17, 19, 23, 29])) {
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
    }

    #[test]
    fn display_round_trips(a in cyc()) {
        let again: CycNum = a.to_string().parse().unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn class_type_is_a_conjugation_invariant(
        (x, y) in (1usize..=4).prop_flat_map(|m| (wreath_elt(8, m), wreath_elt(8, m)))
    ) {
        let g = q8().group();
        let conj = y.mul(&x, g).mul(&y.inverse(g), g);
        prop_assert_eq!(conj.class_type(q8()), x.class_type(q8()));
    }

    #[test]
    fn theta_is_multiplicative(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), p in 0usize..4, xi in 0usize..4) {
        let data = q8();
        let theta = ThetaCharacter::new(xi, PIS[p], 2);
        let ctx = HgContext::new(data, theta, &Caps::default()).unwrap();
        let a = i.get(&ctx.elements);
        let b = j.get(&ctx.elements);
        let ab = a.mul(b, data.group());
        prop_assert!(ab.in_hg());
        prop_assert_eq!(
            theta.value(data, &ab).unwrap(),
            theta.value(data, a).unwrap() * theta.value(data, b).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Ω(a x b) = conj Θ(a) conj Θ(b) Ω(x), so the value on a double coset
    /// does not depend on the representative once Θ is accounted for.
    #[test]
    fn spherical_value_is_representative_invariant(
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        col in any::<prop::sample::Index>(),
        p in 0usize..4,
        xi in 0usize..4,
    ) {
        let data = c4();
        let setup = Setup::new(data, xi, PIS[p], 2).unwrap();
        let brute = Brute::new(data, setup.theta, &Caps::default()).unwrap();
        let ctx = &brute.ctx;
        let g = data.group();
        let k = col.index(setup.cols.len());
        let x = &setup.reps[k];
        let a = i.get(&ctx.elements);
        let b = j.get(&ctx.elements);
        let y = a.mul(x, g).mul(b, g);
        let factor = setup.theta.value(data, a).unwrap().conjugate()
            * setup.theta.value(data, b).unwrap().conjugate();
        for row in &setup.rows {
            let at_x = brute.value(&row.label, x).unwrap();
            let at_y = brute.value(&row.label, &y).unwrap();
            prop_assert_eq!(&at_y, &(&factor * &at_x));
            if let Some(c) = closed_value(&setup, row, &setup.cols[k]).unwrap() {
                prop_assert_eq!(c, at_x);
            }
        }
    }

    #[test]
    fn partition_identities(n in 0usize..=9, pick in any::<prop::sample::Index>()) {
        let ps = enumerate(n);
        let p = pick.get(&ps);
        prop_assert_eq!(&p.transpose().transpose(), p);
        prop_assert_eq!(p.hook_product() * p.dim(), factorial(n));
        prop_assert_eq!(p.transpose().hook_product(), p.hook_product());
        let odd = odd_partitions(n);
        if !odd.is_empty() {
            let o = pick.get(&odd);
            let s = glaisher_inverse(o).unwrap();
            prop_assert!(s.is_strict());
            prop_assert_eq!(&glaisher(&s).unwrap(), o);
        }
    }
}
