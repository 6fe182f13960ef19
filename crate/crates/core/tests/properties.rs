mod common;

use cca_core::{
    extract_dt, jones, jones_span, parse_dt, realize_dt, signature, Error, KnotTable, PlanarDiagram, RationalTangle,
};
use num_rational::Ratio;
use proptest::prelude::*;

fn small_census() -> &'static [PlanarDiagram] {
    static CACHE: std::sync::OnceLock<Vec<PlanarDiagram>> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| common::census_diagrams(10).into_iter().map(|(_, _, d)| d).collect())
}

/// A census diagram with an arbitrary set of crossings changed.
fn changed_census() -> impl Strategy<Value = PlanarDiagram> {
    (0..small_census().len(), any::<u16>()).prop_map(|(i, mask)| {
        let d = &small_census()[i];
        let picks: Vec<usize> = (0..d.crossing_count()).filter(|c| mask >> c & 1 == 1).collect();
        d.crossing_changes(&picks).unwrap()
    })
}

fn twist_sequence() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(prop_oneof![-3..=-1, 1..=3], 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn span_at_most_crossings(d in changed_census(), twists in twist_sequence()) {
        let n = d.crossing_count() as i64;
        prop_assert!(jones_span(&jones(&d).unwrap()).unwrap() <= Ratio::from_integer(n));

        match RationalTangle::new(twists.clone()).unwrap().to_diagram() {
            Ok(r) => {
                let n = r.crossing_count() as i64;
                prop_assert!(jones_span(&jones(&r).unwrap()).unwrap() <= Ratio::from_integer(n));
            }
            Err(Error::MultiComponent(_)) => {}
            Err(e) => panic!("{twists:?}: {e}"),
        }
    }

    #[test]
    fn random_diagrams_satisfy_invariance(d in changed_census()) {
        let v = jones(&d).unwrap();
        prop_assert_eq!(jones(&d.reduce()).unwrap(), v.clone());
        prop_assert_eq!(jones(&d.mirror()).unwrap(), v.mirror());
        let s = signature(&d).unwrap();
        prop_assert_eq!(signature(&d.mirror()).unwrap(), -s);
        prop_assert_eq!(s % 2, 0);
        prop_assert_eq!(kauffman_bracket_of(&d), common::naive_bracket(&d));
    }

    #[test]
    fn dt_round_trips(i in 0..KnotTable::bundled().len(), mask in any::<u16>()) {
        let code = &KnotTable::bundled().records()[i].dt;
        let flipped: Vec<i32> = code
            .labels()
            .iter()
            .enumerate()
            .map(|(j, &e)| if mask >> j & 1 == 1 { -e } else { e })
            .collect();
        let text = format!("{{{{{}}}, {{{}}}}}", flipped.len(), flipped.iter().map(i32::to_string).collect::<Vec<_>>().join(", "));
        let parsed = parse_dt(&text).unwrap();
        prop_assert_eq!(parsed.labels(), &flipped[..]);
        prop_assert_eq!(parse_dt(&parsed.to_string()).unwrap(), parsed.clone());
        // The census codes are realizable and sign changes keep them so.
        let d = realize_dt(&parsed).unwrap();
        let canon = extract_dt(&d).unwrap();
        prop_assert!(canon == parsed.canonical() || canon == mirror_code(&parsed).canonical());
        prop_assert_eq!(extract_dt(&realize_dt(&canon).unwrap()).unwrap(), canon);
    }
}

fn kauffman_bracket_of(d: &PlanarDiagram) -> cca_core::LaurentPolynomial {
    cca_core::kauffman_bracket(d).unwrap()
}

fn mirror_code(c: &cca_core::DtCode) -> cca_core::DtCode {
    cca_core::DtCode::new(c.labels().iter().map(|e| -e).collect()).unwrap()
}
