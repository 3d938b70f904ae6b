use proptest::prelude::*;
use quatcoh::resolution::{rank, KGMatrix, MapName, PeriodicMap};
use quatcoh::secondary::*;
use quatcoh::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn cfg(t: u32) -> GroupConfig {
    GroupConfig::new(t, FieldKind::Gf2).unwrap()
}

fn table(t: u32) -> &'static CochainTable {
    static T2: OnceLock<CochainTable> = OnceLock::new();
    static T4: OnceLock<CochainTable> = OnceLock::new();
    static T8: OnceLock<CochainTable> = OnceLock::new();
    let cell = match t {
        2 => &T2,
        4 => &T4,
        8 => &T8,
        _ => unreachable!(),
    };
    cell.get_or_init(|| CochainTable::new(&cfg(t)).unwrap())
}

fn product(t: u32) -> &'static SecondaryProduct {
    static P2: OnceLock<SecondaryProduct> = OnceLock::new();
    static P4: OnceLock<SecondaryProduct> = OnceLock::new();
    static P8: OnceLock<SecondaryProduct> = OnceLock::new();
    let cell = match t {
        2 => &P2,
        4 => &P4,
        8 => &P8,
        _ => unreachable!(),
    };
    cell.get_or_init(|| SecondaryProduct::new(table(t)))
}

fn el(v: Variant, s: &str) -> RingElement {
    parse_element(s, v).unwrap()
}

fn mono(s: i32, b: Bm) -> BasisMonomial {
    BasisMonomial::new(s, b)
}

#[test]
fn f1_on_examples() {
    let tab = table(2);
    let m = tab.maps();
    assert_eq!(tab.f1(Bm::X.into()), *m.x());
    let expected = m.eval("xxy", 3).unwrap().compose(&m.s_pow(-1));
    assert_eq!(tab.f1(mono(-1, Bm::X2Y)), expected);
}

#[test]
fn f2_named_entries() {
    let t2 = table(2);
    assert_eq!(t2.f2_base(Bm::X, Bm::Y), t2.maps().get(MapName::R).unwrap());
    for t in [4, 8] {
        let tab = table(t);
        let m = tab.maps();
        assert_eq!(*tab.f2_base(Bm::Y, Bm::X), m.eval("p + v", 1).unwrap());
    }
    for t in [2, 4, 8] {
        for c in Bm::ALL {
            assert!(table(t).f2_base(Bm::One, c).is_zero());
        }
    }
}

#[test]
fn f2_tables_pass_both_checks() {
    for t in [2, 4, 8] {
        let checks = table(t).verify_f2();
        assert_eq!(checks.len(), 36);
        assert!(checks.iter().all(F2Check::ok), "t = {t}");
    }
}

fn table_of(v: Variant, rows: [[&str; 6]; 6]) -> Vec<RingElement> {
    rows.iter().flat_map(|r| r.iter().map(|s| el(v, s))).collect()
}

#[test]
fn h_table_generalized() {
    let v = Variant::Generalized;
    let expected = table_of(
        v,
        [
            ["0", "0", "0", "0", "0", "0"],
            ["0", "0", "x", "x^2", "x^2", "x^2*y"],
            ["0", "x", "0", "0", "y^2", "0"],
            ["0", "x^2", "0", "0", "0", "0"],
            ["0", "x^2", "y^2", "0", "0", "0"],
            ["0", "x^2*y", "0", "0", "0", "0"],
        ],
    );
    for t in [4, 8] {
        assert_eq!(product(t).h_table(), &expected[..], "t = {t}");
    }
}

// The quaternion table computed from a valid r̄: its shift defect has class x,
// so every entry fed by r̄ carries x where a defect x + y would give x + y.
#[test]
fn h_table_q8_from_valid_shift_defect() {
    let v = Variant::Q8;
    let expected = table_of(
        v,
        [
            ["0", "0", "0", "0", "0", "0"],
            ["0", "0", "x", "0", "x^2", "0"],
            ["0", "x", "0", "0", "y^2", "0"],
            ["0", "0", "0", "0", "0", "0"],
            ["0", "x^2", "y^2", "0", "0", "0"],
            ["0", "0", "0", "0", "0", "0"],
        ],
    );
    assert_eq!(product(2).h_table(), &expected[..]);
}

#[test]
fn h_of_x_y_is_the_shift_defect_class() {
    let tab = table(2);
    let m = tab.maps();
    let r = m.get(MapName::R).unwrap().clone();
    let defect = m.s().compose(&r).add(&r.compose(m.s()));
    let q = m.eval("xs", 5).unwrap();
    assert_eq!(defect, q);
    assert_eq!(tab.h_class(Bm::X, Bm::Y), RingElement::x(Variant::Q8));
}

fn expected_nonzero(v: Variant) -> Vec<([Bm; 3], RingElement)> {
    let first = match v {
        Variant::Q8 => el(v, "x^2 + y^2"),
        Variant::Generalized => el(v, "x^2"),
    };
    vec![
        ([Bm::X, Bm::Y, Bm::X], first),
        ([Bm::X, Bm::Y, Bm::X2], el(v, "x^2*y")),
        ([Bm::X2, Bm::Y, Bm::X], el(v, "x^2*y")),
    ]
}

#[test]
fn m_on_basis_triples() {
    for t in [2, 4, 8] {
        let p = product(t);
        assert_eq!(p.nonzero_on_basis(Kind::M).unwrap(), expected_nonzero(p.variant()), "t = {t}");
    }
    let v = Variant::Q8;
    let xy = &RingElement::x(v) * &RingElement::y(v);
    assert_eq!(product(2).m(Bm::X.into(), Bm::Y.into(), Bm::X.into()), xy);
}

// ε of x̄₀·f₂(y,x)₅ read in the degree-6 frame (1 0) ↦ s·y², (0 1) ↦ s·xy.
#[test]
fn odd_value_against_component_oracle() {
    let tab = table(2);
    let v = Variant::Q8;
    let f = tab.f2_base(Bm::Y, Bm::X);
    let row = tab.maps().x().component(0).mul(f.component(5)).augmentation();
    assert_eq!(row.len(), 2);
    let sy2 = el(v, "s*y^2").scale(row[0]);
    let sxy = el(v, "s*x^2 + s*y^2").scale(row[1]);
    let oracle = &sy2 + &sxy;
    let value = product(2).m(mono(1, Bm::X), Bm::Y.into(), Bm::X.into());
    assert_eq!(value, oracle);
    assert_eq!(value, el(v, "s*y^2"));
}

#[test]
fn odd_rules() {
    for t in [2, 4, 8] {
        let p = product(t);
        let mut literal_differs = false;
        for a in Bm::ALL {
            for b in Bm::ALL {
                for c in Bm::ALL {
                    let direct = p.odd(OddRule::Direct, a, b, c);
                    assert_eq!(direct, p.odd(OddRule::Recurrence, a, b, c), "t = {t}, ({a},{b},{c})");
                    literal_differs |= p.odd(OddRule::Literal, a, b, c) != direct;
                }
            }
        }
        assert!(literal_differs);
    }
}

#[test]
fn periodicity_matches_direct_evaluation() {
    for t in [2, 4] {
        let tab = table(t);
        let p = product(t);
        for i in -2..=2 {
            for j in -1..=1 {
                for a in Bm::ALL {
                    for b in [Bm::X, Bm::Y, Bm::X2] {
                        for c in [Bm::X, Bm::Y2] {
                            let (ma, mb, mc) = (mono(i, a), mono(j, b), mono(-j, c));
                            assert_eq!(p.m(ma, mb, mc), tab.secondary_class(ma, mb, mc), "t = {t}");
                        }
                    }
                }
            }
        }
    }
}

// m(s, b, c) = 𝒞(h(b, c))·s, so only even powers of s vanish in front.
#[test]
fn m_vanishes_with_a_unit_slot() {
    for t in [2, 4] {
        let p = product(t);
        for s in -1..=1 {
            for u in Bm::ALL {
                for w in Bm::ALL {
                    let one = mono(s, Bm::One);
                    let (u, w) = (mono(-s, u), mono(0, w));
                    assert!(p.m(mono(2 * s, Bm::One), u, w).is_zero());
                    assert!(p.m(u, one, w).is_zero());
                    assert!(p.m(u, w, one).is_zero());
                }
            }
        }
    }
}

#[test]
fn split_is_pointwise() {
    for t in [2, 4] {
        let p = product(t);
        for (i, j, k) in [(0, 0, 0), (1, 0, 0), (1, -1, 2), (-1, 1, 1), (-2, 0, 1)] {
            for a in Bm::ALL {
                for b in Bm::ALL {
                    for c in Bm::ALL {
                        let (a, b, c) = (mono(i, a), mono(j, b), mono(k, c));
                        let sum = &p.value(Kind::MPrime, a, b, c).unwrap() + &p.value(Kind::MDoublePrime, a, b, c).unwrap();
                        assert_eq!(sum, p.value(Kind::M, a, b, c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn m_tilde_only_for_generalized() {
    let err = product(2).value(Kind::MTilde, Bm::X.into(), Bm::X.into(), Bm::X.into());
    assert!(matches!(err, Err(Error::Unsupported(_))));
}

#[test]
fn m_tilde_vanishing_patterns() {
    let p = product(4);
    for i in 1..=2 {
        for j in 1..=2 {
            for a in Bm::ALL {
                for b in Bm::ALL {
                    for c in Bm::ALL {
                        let v = p.value(Kind::MTilde, a.into(), mono(i, b), mono(j, c)).unwrap();
                        assert!(v.is_zero(), "({a}, s^{i}{b}, s^{j}{c}) -> {v}");
                        if a.degree() >= 2 && b.degree() >= 1 && c.degree() >= 1 {
                            let w = p.value(Kind::MTilde, mono(-1, a), mono(i, b), mono(j, c)).unwrap();
                            assert!(w.is_zero());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn cocycle_law_window_two() {
    for (t, kinds) in [
        (2, &[Kind::M, Kind::MPrime, Kind::MDoublePrime][..]),
        (4, &Kind::ALL[..]),
    ] {
        for &kind in kinds {
            let r = verify_cocycle(product(t), kind, 2).unwrap();
            assert_eq!(r.checked, 30usize.pow(4));
            assert!(r.passed(), "t = {t}, {kind}: {:?}", r.failures);
        }
    }
}

#[test]
fn cocycle_check_detects_a_broken_cochain() {
    let p = product(4);
    let mut even = p.even_table().to_vec();
    even[(6 + 1) * 6 + 1] = el(Variant::Generalized, "x^2");
    let broken = SecondaryProduct::from_tables(p.variant(), &even, p.h_table()).unwrap();
    assert!(!verify_cocycle(&broken, Kind::M, 0).unwrap().passed());
}

#[test]
fn gamma_is_nontrivial() {
    for t in [2, 4, 8] {
        let p = product(t);
        for eqs in [default_equations(p.variant(), 5), reference_equations(p.variant())] {
            let c = gamma_certificate(p, Kind::M, &eqs).unwrap();
            match c.verdict {
                GammaVerdict::Nontrivial { verified, .. } => assert!(verified),
                GammaVerdict::Inconclusive { .. } => panic!("t = {t}: no certificate"),
            }
        }
    }
}

#[test]
fn q8_certificate_uses_the_five_triples() {
    let v = Variant::Q8;
    let c = gamma_certificate(product(2), Kind::M, &reference_equations(v)).unwrap();
    let support: Vec<String> = c.support().iter().map(|e| e.to_string()).collect();
    for want in ["(y, x, y)", "(x, y, y)", "(y, y, x)", "(x, x, x)", "(x, y, x)"] {
        assert!(support.iter().any(|s| s == want), "{want} missing from {support:?}");
    }
}

#[test]
fn prime_part_alone_is_also_certified() {
    let p = product(4);
    let c = gamma_certificate(p, Kind::MPrime, &default_equations(p.variant(), 5)).unwrap();
    assert!(c.is_nontrivial());
    let c = gamma_certificate(p, Kind::MDoublePrime, &default_equations(p.variant(), 5)).unwrap();
    assert!(!c.is_nontrivial());
}

// δg₀ for a random g₀ supported on s-exponent 0 must never be certified,
// and the returned witness must reproduce it.
#[test]
fn coboundaries_are_not_certified() {
    let v = Variant::Generalized;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut g0 = Vec::new();
    for b in Bm::ALL {
        for c in Bm::ALL {
            let d = b.degree() + c.degree() - 1;
            let coords: Vec<Gf4> = (0..tate_ring::dim(d)).map(|_| Gf4::from_bits(rng.gen_range(0..2))).collect();
            g0.push(RingElement::from_coords(v, d, &coords));
        }
    }
    let g = |u: &RingElement, w: &RingElement| {
        let mut out = RingElement::zero(v);
        for (a, ka) in u.terms() {
            for (b, kb) in w.terms() {
                if a.s == 0 && b.s == 0 {
                    out += &g0[a.b.index() * 6 + b.b.index()].scale(ka * kb);
                }
            }
        }
        out
    };
    let mut even = Vec::new();
    for a in Bm::ALL {
        for b in Bm::ALL {
            for c in Bm::ALL {
                let (a, b, c) = (RingElement::basis(v, 0, a), RingElement::basis(v, 0, b), RingElement::basis(v, 0, c));
                let mut d = &a * &g(&b, &c);
                d += &g(&(&a * &b), &c);
                d += &g(&a, &(&b * &c));
                d += &(&g(&a, &b) * &c);
                even.push(d);
            }
        }
    }
    let zero_h = vec![RingElement::zero(v); 36];
    let p = SecondaryProduct::from_tables(v, &even, &zero_h).unwrap();
    let c = gamma_certificate(&p, Kind::M, &default_equations(v, 5)).unwrap();
    let GammaVerdict::Inconclusive { witness } = c.verdict else { panic!("coboundary certified") };
    let gw = |u: &RingElement, w: &RingElement| {
        let mut out = RingElement::zero(v);
        for (a, ka) in u.terms() {
            for (b, kb) in w.terms() {
                if let Some((_, _, val)) = witness.iter().find(|(s, t, _)| *s == a && *t == b) {
                    out += &val.scale(ka * kb);
                }
            }
        }
        out
    };
    for eq in &c.equations {
        let (a, b, cc) = (&eq.a, &eq.b, &eq.c);
        let mut d = a * &gw(b, cc);
        d += &gw(&(a * b), cc);
        d += &gw(a, &(b * cc));
        d += &(&gw(a, b) * cc);
        assert_eq!(d, p.eval(Kind::M, a, b, cc).unwrap(), "{eq}");
    }
}

fn random_map(rng: &mut ChaCha8Rng, t: u32, degree: i64) -> PeriodicMap {
    let n = 4 * t as usize;
    PeriodicMap::from_fn(t, degree, 8, |j| {
        let (r, c) = (rank(j), rank(j + degree));
        let entries = (0..r * c)
            .map(|_| AlgebraElement::from_coeffs(t, (0..n).map(|_| Gf4::from_bits(rng.gen_range(0..2))).collect()))
            .collect();
        KGMatrix::from_entries(t, r, c, entries)
    })
}

// Other admissible completions of the solver-filled entries leave m unchanged.
#[test]
fn completed_entries_do_not_affect_m() {
    let base = product(2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        let mut tab = table(2).clone();
        let completed: Vec<(Bm, Bm)> = tab.entries().iter().filter(|e| e.completed()).map(|e| (e.b, e.c)).collect();
        for (b, c) in completed {
            let f = tab.f2_base(b, c).clone();
            let k = random_map(&mut rng, 2, f.degree() - 1);
            let alt = f.add(&tab.maps().d(&k));
            assert_ne!(alt, f);
            tab.replace_entry(b, c, alt).unwrap();
        }
        let p = SecondaryProduct::new(&tab);
        for e in 0..2 {
            for a in Bm::ALL {
                for b in Bm::ALL {
                    for c in Bm::ALL {
                        assert_eq!(p.m(mono(e, a), b.into(), c.into()), base.m(mono(e, a), b.into(), c.into()));
                    }
                }
            }
        }
    }
}

#[test]
fn replacement_must_bound_the_target() {
    let mut tab = table(2).clone();
    let wrong = tab.maps().eval("x^2w", 4).unwrap();
    assert!(tab.replace_entry(Bm::X2, Bm::X2Y, wrong).is_err());
}

fn homogeneous(v: Variant) -> impl Strategy<Value = RingElement> {
    (-2i32..=2, 0i32..4, prop::collection::vec(0u8..4, 2)).prop_map(move |(s, r, bits)| {
        let d = 4 * s + r;
        let n = tate_ring::dim(d);
        let coords: Vec<Gf4> = bits[..n].iter().map(|&b| Gf4::from_bits(b)).collect();
        RingElement::from_coords(v, d, &coords)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trilinear_and_graded(
        u in homogeneous(Variant::Generalized),
        u2 in homogeneous(Variant::Generalized),
        w in homogeneous(Variant::Generalized),
        z in homogeneous(Variant::Generalized),
        k in 0u8..4,
    ) {
        let p = product(4);
        let k = Gf4::from_bits(k);
        for kind in Kind::ALL {
            let val = p.eval(kind, &u, &w, &z).unwrap();
            if let (Some(a), Some(b), Some(c), false) = (u.degree(), w.degree(), z.degree(), val.is_zero()) {
                prop_assert!(val.is_homogeneous_of(a + b + c - 1));
            }
            prop_assert_eq!(p.eval(kind, &u.scale(k), &w, &z).unwrap(), val.scale(k));
            if u.degree() == u2.degree() {
                let lhs = p.eval(kind, &(&u + &u2), &w, &z).unwrap();
                let rhs = &val + &p.eval(kind, &u2, &w, &z).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
