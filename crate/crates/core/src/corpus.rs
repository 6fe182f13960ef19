//! Reference diagrams: minimal CCA diagrams of the non-alternating CCA knots
//! through 12 crossings, and a non-minimal CCA diagram of 10_151.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusRow {
    pub name: &'static str,
    /// Conway notation as usually written; polyhedral forms included.
    pub conway: &'static str,
    pub dt: &'static str,
}

pub const NON_ALTERNATING_CCA: [CorpusRow; 19] = [
    row("8_19", "3, 3, -2", "{{8},{6,8,-12,2,14,16,-4,10}}"),
    row("8_20", "3, 2, 1, -2", "{{8},{4,8,-12,2,14,16,-6,10}}"),
    row("8_21", "2, 1, 2, 1, -2", "{{8},{4,8,-12,2,14,-6,16,10}}"),
    row("9_42", "2, 2, 3, -2", "{{9},{4,8,18,-14,2,16,-6,10,12}}"),
    row("9_43", "2, 1, 1, 3, -2", "{{9},{4,8,10,-14,2,16,18,-6,12}}"),
    row("9_44", "2, 2, 2, 1, -2", "{{9},{4,8,-12,2,16,-6,18,10,14}}"),
    row("9_45", "2, 1, 1, 2, 1, -2", "{{9},{4,8,10,-16,2,14,18,-6,12}}"),
    row("9_46", "3, 3, -3", "{{9},{8,-12,16,14,18,-4,-2,6,10}}"),
    row("9_47", "8*-2, 0", "{{9},{6,8,10,16,14,-18,4,2,-12}}"),
    row("9_48", "2, 1, 2, 1, -3", "{{9},{4,10,-14,-12,16,2,-6,18,8}}"),
    row("9_49", "-2, 0 : -2, 0 : -2, 0", "{{9},{6,-10,-14,12,-16,-2,18,-4,-8}}"),
    row("10_150", "6*.-2, 2, 2, 2, 0", "{{10},{6,10,16,20,14,2,-18,4,8,-12}}"),
    row("K11n8", "6*2, 2, 1, 0 : -3, 0", "{{11},{4,8,16,20,2,-18,6,22,-12,-10,14}}"),
    row("K11n115", "6*2.-3, 2 : 2, 0", "{{11},{6,12,16,22,-18,-20,2,8,4,-10,14}}"),
    row("K11n123", "6*-3, 2, 2, 2, 0", "{{11},{6,10,16,22,18,2,-20,8,4,-14,-12}}"),
    row("K11n124", "6*2.-2, 2, 2, 2, 0", "{{11},{6,-10,14,20,-2,18,4,22,12,8,16}}"),
    row("K11n143", "6*-2, 2.-2, 2, 0, 2, 0", "{{11},{6,12,-16,22,-18,2,20,-4,-8,14,10}}"),
    row("K11n157", "9*-3", "{{11},{6,18,16,12,4,2,-20,-22,10,8,-14}}"),
    row("K12n147", "-2 -1 -1, 2, 1, 1, 2, 1, 1", "{{12},{4,14,18,16,-12,-22,2,24,20,6,-10,-8}}"),
];

/// 11-crossing CCA diagram of 10_151, whose minimal diagrams are not CCA.
pub const NON_MINIMAL_10_151: CorpusRow =
    row("10_151", "6*2 -1 -1, 2 : 2, 0", "{{11},{-4,10,16,20,2,-22,18,8,12,6,14}}");

const fn row(name: &'static str, conway: &'static str, dt: &'static str) -> CorpusRow {
    CorpusRow { name, conway, dt }
}

/// The 19 minimal diagrams followed by the 10_151 diagram.
pub fn cca_rows() -> impl Iterator<Item = CorpusRow> {
    NON_ALTERNATING_CCA.into_iter().chain([NON_MINIMAL_10_151])
}
