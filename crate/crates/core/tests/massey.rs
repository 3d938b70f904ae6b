use proptest::prelude::*;
use quatcoh::massey::*;
use quatcoh::secondary::{Kind, SecondaryProduct};
use quatcoh::tate_ring::{basis, dim};
use quatcoh::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn product(t: u32) -> &'static SecondaryProduct {
    static P2: OnceLock<SecondaryProduct> = OnceLock::new();
    static P4: OnceLock<SecondaryProduct> = OnceLock::new();
    let cell = if t == 2 { &P2 } else { &P4 };
    cell.get_or_init(|| SecondaryProduct::from_config(&GroupConfig::new(t, FieldKind::Gf2).unwrap()).unwrap())
}

fn el(v: Variant, s: &str) -> RingElement {
    parse_element(s, v).unwrap()
}

const A_ENTRIES: &[&[&str]] = &[&["y", "x+y"], &["x", "y"]];
const D_ENTRIES: &[&[&str]] = &[&["x", "y"], &["x+y", "x"]];

// A in its three roles of the triple (A, A, A).
fn q8_triple() -> [LambdaMatrix; 3] {
    let v = Variant::Q8;
    let mk = |r: i32| LambdaMatrix::parse(v, vec![r, r], vec![r - 1, r - 1], A_ENTRIES).unwrap();
    [mk(0), mk(-1), mk(-2)]
}

fn d_matrix() -> PlainMatrix {
    PlainMatrix::parse(Variant::Q8, D_ENTRIES).unwrap()
}

fn scalar(m: &LambdaMatrix) -> RingElement {
    m.get(0, 0).clone()
}

#[test]
fn a_squared_and_ad_vanish() {
    let [a, b, _] = q8_triple();
    assert!(a.mul(&b).unwrap().is_zero());
    let d = d_matrix();
    assert!(a.plain().mul(&d).unwrap().is_zero());
    assert!(d.mul(a.plain()).unwrap().is_zero());
}

#[test]
fn identity_is_neutral() {
    let [a, _, _] = q8_triple();
    let id = LambdaMatrix::identity(Variant::Q8, a.col_set().clone());
    assert_eq!(a.mul(&id).unwrap(), a);
}

#[test]
fn massey_value_of_the_non_realizable_module() {
    let [a, b, c] = q8_triple();
    let e = m_matrix(product(2), Kind::M, &a, &b, &c).unwrap();
    let expected = LambdaMatrix::parse(Variant::Q8, vec![-1, -1], vec![-3, -3], &[&["x*y", "0"], &["x*y", "x*y"]]);
    assert_eq!(e, expected.unwrap());
    assert_eq!(e.row_set(), &a.row_set().shift(-1));
    assert_eq!(trace_pairing(&e, &d_matrix()).unwrap(), el(Variant::Q8, "x^2*y"));
}

#[test]
fn printed_value_has_the_same_trace() {
    let printed = PlainMatrix::parse(Variant::Q8, &[&["x^2", "0"], &["x^2", "x^2"]]).unwrap();
    let t = printed.mul(&d_matrix()).unwrap().trace().unwrap();
    assert_eq!(t, el(Variant::Q8, "x^2*y"));
}

#[test]
fn non_realizable_module_is_detected() {
    let [a, b, c] = q8_triple();
    let p = product(2);
    let e = m_matrix(p, Kind::M, &a, &b, &c).unwrap();
    let verdict = indeterminacy_member(&e, &a, &c).unwrap();
    assert!(!verdict.in_indeterminacy);
    assert!(verdict.witness.is_none());
    assert!(verdict.certificate.is_some());
    assert!(check_exact(&a, &b).unwrap().exact());
    assert!(check_exact(&b, &c).unwrap().exact());

    let report = realizable_summand(p, Kind::M, &a).unwrap();
    assert!(!report.summand_of_realizable());
    assert!(report.exact_at_j.exact() && report.exact_at_k.exact());
    assert_eq!(report.b.cols(), 2);
}

// Trace against D kills the whole indeterminacy: checked on a basis of the
// unknown X and Y, which suffices by linearity.
#[test]
fn trace_obstruction_vanishes_on_the_indeterminacy() {
    let v = Variant::Q8;
    let [a, _, c] = q8_triple();
    let d = d_matrix();
    let x_rows = a.col_set().shift(-1);
    let y_rows = a.row_set().shift(-1);
    let mut checked = 0;
    for (rows, cols, left) in [(&x_rows, c.col_set(), true), (&y_rows, c.row_set(), false)] {
        for i in 0..rows.len() {
            for j in 0..cols.len() {
                for mu in basis(rows.get(i) - cols.get(j)) {
                    let mut m = PlainMatrix::zero(v, rows.len(), cols.len());
                    m.set(i, j, RingElement::monomial(v, mu));
                    let term = if left { a.plain().mul(&m) } else { m.mul(c.plain()) }.unwrap();
                    assert!(term.mul(&d).unwrap().trace().unwrap().is_zero());
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 16);
}

#[test]
fn scalar_member_with_witness() {
    let v = Variant::Q8;
    let e = LambdaMatrix::parse(v, vec![-1], vec![-4], &[&["x^2*y"]]).unwrap();
    let a = LambdaMatrix::parse(v, vec![0], vec![-1], &[&["x"]]).unwrap();
    let c = LambdaMatrix::parse(v, vec![-2], vec![-4], &[&["y^2"]]).unwrap();
    let verdict = indeterminacy_member(&e, &a, &c).unwrap();
    assert!(verdict.in_indeterminacy);
    let (x, y) = verdict.witness.unwrap();
    let sum = a.plain().mul(x.plain()).unwrap().add(&y.plain().mul(c.plain()).unwrap()).unwrap();
    assert_eq!(&sum, e.plain());
    // x·(xy) = x²y, the hand witness.
    assert_eq!(&(&el(v, "x") * &el(v, "x*y")), e.get(0, 0));
}

#[test]
fn zero_value_is_a_member_with_zero_witness() {
    let [a, _, c] = q8_triple();
    let e = LambdaMatrix::zero(Variant::Q8, a.row_set().shift(-1), c.col_set().clone());
    let verdict = indeterminacy_member(&e, &a, &c).unwrap();
    assert!(verdict.in_indeterminacy);
    let (x, y) = verdict.witness.unwrap();
    assert!(x.is_zero() && y.is_zero());
}

#[test]
fn free_module_is_realizable() {
    let v = Variant::Generalized;
    let a = LambdaMatrix::zero(v, vec![0].into(), vec![0].into());
    let report = realizable_summand(product(4), Kind::M, &a).unwrap();
    assert!(report.summand_of_realizable());
    assert!(report.verdict.value.is_zero());
}

#[test]
fn zero_factor_gives_zero() {
    let [a, b, c] = q8_triple();
    let z = LambdaMatrix::zero(Variant::Q8, b.row_set().clone(), b.col_set().clone());
    assert!(m_matrix(product(2), Kind::M, &a, &z, &c).unwrap().is_zero());
}

#[test]
fn one_by_one_massey_value() {
    let v = Variant::Generalized;
    let a = LambdaMatrix::parse(v, vec![0], vec![-1], &[&["x"]]).unwrap();
    let b = LambdaMatrix::parse(v, vec![-1], vec![-2], &[&["y"]]).unwrap();
    let c = LambdaMatrix::parse(v, vec![-2], vec![-3], &[&["x"]]).unwrap();
    let e = m_matrix(product(4), Kind::M, &a, &b, &c).unwrap();
    assert_eq!(scalar(&e), el(v, "x^2"));
}

#[test]
fn non_composable_triple_is_rejected() {
    let [a, _, c] = q8_triple();
    assert!(m_matrix(product(2), Kind::M, &a, &a, &c).is_err());
}

// All degree-e vectors of Λ^T over GF(2), as coordinate lists.
fn all_vectors(set: &GradedSet, e: i32) -> Vec<Vec<RingElement>> {
    let v = Variant::Generalized;
    let mut out = vec![Vec::new()];
    for &d in set.degrees() {
        let mut next = Vec::new();
        for prefix in &out {
            for bits in 0..(1u32 << dim(d - e)) {
                let coords: Vec<Gf4> = (0..dim(d - e)).map(|k| Gf4::from_bits(((bits >> k) & 1) as u8)).collect();
                let mut p = prefix.clone();
                p.push(RingElement::from_coords(v, d - e, &coords));
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn apply(m: &LambdaMatrix, w: &[RingElement]) -> Vec<RingElement> {
    (0..m.rows())
        .map(|i| {
            let mut acc = RingElement::zero(m.variant());
            for (j, x) in w.iter().enumerate() {
                acc += &(m.get(i, j) * x);
            }
            acc
        })
        .collect()
}

#[test]
fn kernel_of_a_row_matches_brute_force() {
    let v = Variant::Generalized;
    let a = LambdaMatrix::parse(v, vec![0], vec![-1, -1], &[&["x", "x+y"]]).unwrap();
    let k = minimal_kernel_generators(&a, 0).unwrap();
    assert!(has_no_units(&k));
    for e in 0..4 {
        let kernel: BTreeSet<String> = all_vectors(a.col_set(), e)
            .into_iter()
            .filter(|w| apply(&a, w).iter().all(RingElement::is_zero))
            .map(|w| format!("{w:?}"))
            .collect();
        let image: BTreeSet<String> =
            all_vectors(k.col_set(), e).into_iter().map(|w| format!("{:?}", apply(&k, &w))).collect();
        assert_eq!(kernel, image, "degree {e}");
    }
}

#[test]
fn scalar_massey_over_gf2_has_no_counterexamples() {
    let r = enumerate_scalar_triples(product(2), Kind::M, FieldKind::Gf2, 7, 1).unwrap();
    assert_eq!(r.degrees, (-4, 7));
    assert_eq!(r.elements, 24);
    assert!(r.defined > 0);
    assert_eq!(r.defined + r.skipped, 24 * 24 * 24);
    assert!(r.counterexamples.is_empty());
}

#[test]
fn gf4_triple_is_defined_and_fails() {
    let v = Variant::Q8;
    let (a, b) = (el(v, "alpha*x+y"), el(v, "alpha^2*x+y"));
    let (value, member) = scalar_triple(product(2), Kind::M, &a, &b, &a).unwrap().unwrap();
    assert_eq!(value, el(v, "alpha^2*x*y"));
    assert!(!member);
    let r = enumerate_scalar_triples(product(2), Kind::M, FieldKind::Gf4, 7, 1).unwrap();
    assert!(r.counterexamples.iter().any(|(x, y, z, _)| (x, y, z) == (&a, &b, &a)));
}

#[test]
fn undefined_triples_are_skipped() {
    let v = Variant::Q8;
    let (x, y) = (el(v, "x"), el(v, "y"));
    assert!(!(&x * &x).is_zero());
    assert!(scalar_triple(product(2), Kind::M, &x, &x, &y).unwrap().is_none());
}

#[test]
fn sampled_presentations_satisfy_the_identities() {
    let samples = random_presentations(Variant::Generalized, FieldKind::Gf2, 1, 24);
    let reports = check_samples(product(4), &samples).unwrap();
    assert_eq!(reports.len(), 24);
    for (i, r) in reports.iter().enumerate() {
        assert!(r.passed(), "sample {i}: {r:?}");
        assert!(r.a.row_set().degrees().iter().all(|d| (0..=3).contains(d)));
        assert!(r.a.col_set().degrees().iter().all(|d| (-1..=2).contains(d)));
        assert!(r.b.col_set().degrees().iter().all(|d| (-8..=-5).contains(d)));
        assert!(r.c.col_set().degrees().iter().all(|d| (-15..=-12).contains(d)));
    }
    // The identities are not vacuous: m′ is nonzero on some sample.
    let nonzero = reports
        .iter()
        .filter(|r| !m_matrix(product(4), Kind::MPrime, &r.a, &r.b, &r.c).unwrap().is_zero())
        .count();
    assert!(nonzero > 0);
}

#[test]
fn sampling_is_reproducible() {
    let a = random_presentations(Variant::Generalized, FieldKind::Gf2, 7, 5);
    let b = random_presentations(Variant::Generalized, FieldKind::Gf2, 7, 5);
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn products_stay_homogeneous(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_presentation(Variant::Generalized, FieldKind::Gf2, &mut rng);
        let k = minimal_kernel_generators(&a, 0).unwrap();
        let ak = a.mul(&k).unwrap();
        prop_assert!(ak.is_zero());
        prop_assert!(LambdaMatrix::new(ak.row_set().clone(), ak.col_set().clone(), ak.plain().clone()).is_ok());
        prop_assert!(check_exact(&a, &k).unwrap().exact());
    }

    #[test]
    fn constructed_members_are_found(seed in any::<u64>()) {
        let v = Variant::Generalized;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_presentation(v, FieldKind::Gf2, &mut rng);
        let [a, _, c] = minimal_resolution(&a, 0, Windows::default()).unwrap();
        // X and Y with random homogeneous entries give E = AX + YC.
        let x_rows = a.col_set().shift(-1);
        let y_rows = a.row_set().shift(-1);
        let mut rand_matrix = |rows: &GradedSet, cols: &GradedSet| {
            let mut m = PlainMatrix::zero(v, rows.len(), cols.len());
            for i in 0..rows.len() {
                for j in 0..cols.len() {
                    let d = rows.get(i) - cols.get(j);
                    let coords: Vec<Gf4> = (0..dim(d)).map(|_| Gf4::from_bits(rand::Rng::gen_range(&mut rng, 0..2))).collect();
                    m.set(i, j, RingElement::from_coords(v, d, &coords));
                }
            }
            m
        };
        let x = rand_matrix(&x_rows, c.col_set());
        let y = rand_matrix(&y_rows, c.row_set());
        let e = a.plain().mul(&x).unwrap().add(&y.mul(c.plain()).unwrap()).unwrap();
        let e = LambdaMatrix::new(y_rows, c.col_set().clone(), e).unwrap();
        let verdict = indeterminacy_member(&e, &a, &c).unwrap();
        prop_assert!(verdict.in_indeterminacy);
        let (wx, wy) = verdict.witness.unwrap();
        let sum = a.plain().mul(wx.plain()).unwrap().add(&wy.plain().mul(c.plain()).unwrap()).unwrap();
        prop_assert_eq!(&sum, e.plain());
    }

    #[test]
    fn scalar_membership_agrees_with_matrix_membership(ia in 0usize..24, ib in 0usize..24, ic in 0usize..24) {
        let v = Variant::Q8;
        let elements: Vec<RingElement> =
            (-4..=7).flat_map(|d| homogeneous_elements(v, FieldKind::Gf2, d)).collect();
        let (a, b, c) = (&elements[ia], &elements[ib], &elements[ic]);
        let value = product(2).eval(Kind::M, a, b, c).unwrap();
        let (da, db, dc) = (a.degree().unwrap(), b.degree().unwrap(), c.degree().unwrap());
        let one = |r: i32, s: i32, x: &RingElement| {
            LambdaMatrix::new(vec![r].into(), vec![s].into(), PlainMatrix::from_entries(v, 1, 1, vec![x.clone()]).unwrap()).unwrap()
        };
        let am = one(0, -da, a);
        let cm = one(-da - db, -da - db - dc, c);
        let em = one(-1, -da - db - dc, &value);
        let matrix = indeterminacy_member(&em, &am, &cm).unwrap().in_indeterminacy;
        prop_assert_eq!(scalar_member(a, b, c, &value), matrix);
    }
}
