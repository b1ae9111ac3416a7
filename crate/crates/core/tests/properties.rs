use proptest::prelude::*;

use twisted_codes::abelianize::MonomialWitness;
use twisted_codes::catalog;
use twisted_codes::codes::{code_bound, LinearCode, DEFAULT_DISTANCE_BUDGET};
use twisted_codes::crossed::{coboundary_from_lambda, validate, CrossedSystem, SigmaAction};
use twisted_codes::gf::{FieldElem, FiniteField};
use twisted_codes::groups::FiniteGroup;
use twisted_codes::ring::{Ring, RingElem, Side};

const GROUPS: [&str; 5] = ["C4", "S3", "Klein4", "C6", "D4"];

fn units(field: &FiniteField, raw: &[u32]) -> Vec<FieldElem> {
    let q = field.order();
    raw.iter().map(|&r| FieldElem(1 + r % (q - 1))).collect()
}

fn elem(ring: &Ring, raw: &[u32]) -> RingElem {
    let q = ring.field().order();
    RingElem::from_coeffs((0..ring.n()).map(|i| FieldElem(raw[i % raw.len()] % q)).collect())
}

/// A random coboundary over `F_{p^m}` for a catalog group, with a
/// Frobenius action through an index-two subgroup when `m = 2`.
fn coboundary_ring(group: &str, m: u32, skew: bool, raw: &[u32]) -> Ring {
    let field = FiniteField::new(if m == 2 { 2 } else { 3 }, m, None).unwrap();
    let group = FiniteGroup::builtin(group).unwrap();
    let sigma = if skew && m == 2 {
        let h = group.normal_subgroups().into_iter().find(|h| 2 * h.order() == group.order()).unwrap();
        catalog::sign_action(&group, h.members()).unwrap()
    } else {
        SigmaAction::trivial(group.order())
    };
    let mut lambda = units(&field, &raw[..group.order()]);
    lambda[0] = FieldElem::ONE;
    let alpha = coboundary_from_lambda(&field, &group, &sigma, &lambda).unwrap();
    Ring::new(CrossedSystem::new(field, group, sigma, alpha).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn coboundaries_are_cocycles(g in 0usize..5, m in 1u32..3, skew: bool, raw in prop::collection::vec(0u32..64, 8)) {
        let ring = coboundary_ring(GROUPS[g], m, skew, &raw);
        let sys = ring.system();
        let report = validate(sys.field(), sys.group(), sys.sigma(), sys.cocycle());
        prop_assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn multiplication_is_associative_and_unital(
        g in 0usize..5, m in 1u32..3, skew: bool,
        raw in prop::collection::vec(0u32..64, 8),
        x in prop::collection::vec(0u32..9, 8),
        y in prop::collection::vec(0u32..9, 8),
        z in prop::collection::vec(0u32..9, 8),
    ) {
        let ring = coboundary_ring(GROUPS[g], m, skew, &raw);
        let (x, y, z) = (elem(&ring, &x), elem(&ring, &y), elem(&ring, &z));
        prop_assert_eq!(ring.mul(&ring.mul(&x, &y), &z), ring.mul(&x, &ring.mul(&y, &z)));
        prop_assert_eq!(ring.mul(&ring.one(), &x), x.clone());
        prop_assert_eq!(ring.mul(&x, &ring.one()), x.clone());
        prop_assert_eq!(ring.mul(&x, &ring.add(&y, &z)), ring.add(&ring.mul(&x, &y), &ring.mul(&x, &z)));
    }

    #[test]
    fn catalog_rings_are_associative(
        idx in 0usize..64,
        x in prop::collection::vec(0u32..9, 8),
        y in prop::collection::vec(0u32..9, 8),
        z in prop::collection::vec(0u32..9, 8),
    ) {
        let entries = catalog::catalog().unwrap();
        let ring = entries[idx % entries.len()].ring();
        let (x, y, z) = (elem(&ring, &x), elem(&ring, &y), elem(&ring, &z));
        prop_assert_eq!(ring.mul(&ring.mul(&x, &y), &z), ring.mul(&x, &ring.mul(&y, &z)));
    }

    #[test]
    fn principal_ideals_contain_their_generator(
        idx in 0usize..64, left: bool,
        x in prop::collection::vec(0u32..9, 8),
        y in prop::collection::vec(0u32..9, 8),
    ) {
        let entries = catalog::catalog().unwrap();
        let ring = entries[idx % entries.len()].ring();
        let side = if left { Side::Left } else { Side::Right };
        let (x, y) = (elem(&ring, &x), elem(&ring, &y));
        let ideal = ring.principal_ideal(&x, side);
        let probe = match side {
            Side::Left => ring.mul(&y, &x),
            Side::Right => ring.mul(&x, &y),
        };
        prop_assert!(ideal.basis.contains(ring.fp(), &ring.expand(&x)));
        prop_assert!(ideal.basis.contains(ring.fp(), &ring.expand(&probe)));
        let ann = ring.annihilator(&x, side.opposite());
        for a in ring.elements_of(&ann.basis).iter().take(16) {
            let prod = match side {
                Side::Left => ring.mul(&x, a),
                Side::Right => ring.mul(a, &x),
            };
            prop_assert!(prod.is_zero());
        }
    }

    #[test]
    fn witness_composition_matches_sequential_application(
        perm_a in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
        perm_b in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
        diag_a in prop::collection::vec(0u32..8, 6),
        diag_b in prop::collection::vec(0u32..8, 6),
        x in prop::collection::vec(0u32..9, 6),
    ) {
        let field = FiniteField::new(3, 2, None).unwrap();
        let a = MonomialWitness { perm: perm_a, diag: units(&field, &diag_a) };
        let b = MonomialWitness { perm: perm_b, diag: units(&field, &diag_b) };
        let x = RingElem::from_coeffs(x.into_iter().map(FieldElem).collect());
        prop_assert_eq!(a.then(&field, &b).apply(&field, &x), b.apply(&field, &a.apply(&field, &x)));
    }

    #[test]
    fn twisted_principal_codes_meet_the_distance_bound(
        idx in 0usize..64,
        x in prop::collection::vec(0u32..9, 8),
    ) {
        let entries: Vec<_> = catalog::catalog().unwrap().into_iter().filter(|e| e.system.is_twisted_only() && e.code_scale()).collect();
        let ring = entries[idx % entries.len()].ring();
        let x = elem(&ring, &x);
        prop_assume!(!x.is_zero());
        let code = LinearCode::from_ideal(&ring, &ring.principal_ideal(&x, Side::Right));
        let b = code_bound(&code, DEFAULT_DISTANCE_BUDGET).unwrap();
        prop_assert!(b.holds && b.amgm_holds(), "{:?}", b);
    }
}
