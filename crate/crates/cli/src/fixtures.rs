//! Published values, embedded so that verification needs no network.

/// A published coefficient list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub source: &'static str,
    pub oeis: Option<&'static str>,
    /// Coefficients of `z^0, z^1, ...` as decimal strings.
    pub values: &'static [&'static str],
}

/// A published grid, stored row by row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridFixture {
    pub name: &'static str,
    pub source: &'static str,
    pub row_label: &'static str,
    pub col_label: &'static str,
    pub rows: &'static [&'static [&'static str]],
}

pub const GRAND_ALL: Fixture = Fixture {
    name: "grand-all",
    source: "grand knight's paths by size",
    oeis: Some("A002605"),
    values: &["1", "2", "6", "16", "44", "120", "328", "896", "2448", "6688", "18272"],
};

pub const GRAND_NONNEG: Fixture = Fixture {
    name: "grand-nonneg",
    source: "grand knight's paths ending at non-negative altitude",
    oeis: None,
    values: &["1", "1", "4", "8", "26", "63", "186", "478", "1352", "3574", "9927", "26640", "73354"],
};

pub const GRAND_ALTITUDE_SUM: Fixture = Fixture {
    name: "grand-altitude-sum",
    source: "sum of final altitudes over grand knight's paths ending at non-negative altitude",
    oeis: None,
    values: &["0", "2", "5", "20", "56", "180", "516", "1552", "4452", "13000", "37120", "106684", "303090"],
};

pub const ZIGZAG_TOTAL: Fixture = Fixture {
    name: "zigzag-total",
    source: "grand zigzag knight's paths by size",
    oeis: Some("A128588"),
    values: &[
        "1", "2", "4", "6", "10", "16", "26", "42", "68", "110", "178", "288", "466", "754", "1220", "1974", "3194",
    ],
};

pub const ZIGZAG_NONNEG: Fixture = Fixture {
    name: "zigzag-nonneg",
    source: "grand zigzag knight's paths ending at non-negative altitude",
    oeis: None,
    values: &[
        "1", "1", "3", "3", "7", "9", "18", "24", "45", "63", "115", "166", "296", "435", "763", "1138", "1973",
    ],
};

pub const ZIGZAG_PRIMITIVE: Fixture = Fixture {
    name: "zigzag-primitive",
    source: "grand zigzag knight's paths returning to the x-axis only at the end",
    oeis: None,
    values: &[
        "1", "0", "2", "0", "2", "2", "4", "2", "4", "2", "6", "2", "10", "2", "18", "2", "36", "2", "76", "2", "166",
        "2", "372",
    ],
};

pub const ABOVE_LINE_2: Fixture = Fixture {
    name: "above-line-2",
    source: "grand zigzag knight's paths staying above y = -2",
    oeis: None,
    values: &[
        "1", "2", "4", "6", "9", "15", "23", "38", "58", "95", "147", "239", "373", "603", "947", "1525",
    ],
};

pub const TUBE1_AXIS: Fixture = Fixture {
    name: "tube1-axis",
    source: "grand zigzag knight's paths in [-1, 1] ending on the x-axis",
    oeis: Some("A052535"),
    values: &[
        "1", "0", "0", "0", "2", "2", "2", "2", "4", "6", "8", "10", "14", "20", "28", "38", "52", "72", "100",
    ],
};

pub const TUBE_0_2_AXIS: Fixture = Fixture {
    name: "tube-0-2-axis",
    source: "grand zigzag knight's paths in [0, 2] ending on the x-axis",
    oeis: None,
    values: &[
        "1", "0", "1", "0", "2", "0", "4", "0", "7", "0", "14", "0", "26", "0", "50", "0", "95", "0", "181",
    ],
};

pub const INLINE_LISTS: [Fixture; 9] = [
    GRAND_ALL,
    GRAND_NONNEG,
    GRAND_ALTITUDE_SUM,
    ZIGZAG_TOTAL,
    ZIGZAG_NONNEG,
    ZIGZAG_PRIMITIVE,
    ABOVE_LINE_2,
    TUBE1_AXIS,
    TUBE_0_2_AXIS,
];

/// Grand zigzag knight's paths ending at `(n, k)`; rows `k = 0..=4`, columns `n = 0..=15`.
pub const ZIGZAG_TABLE: GridFixture = GridFixture {
    name: "zigzag-table",
    source: "grand zigzag knight's paths from (0,0) to (n,k)",
    row_label: "k",
    col_label: "n",
    rows: &[
        &["1", "0", "2", "0", "4", "2", "10", "6", "22", "16", "52", "44", "126", "116", "306", "302"],
        &["0", "0", "1", "2", "2", "4", "4", "10", "11", "26", "28", "64", "71", "160", "183", "402"],
        &["0", "1", "0", "1", "0", "3", "2", "7", "6", "16", "18", "40", "52", "100", "142", "252"],
        &["0", "0", "0", "0", "1", "0", "2", "0", "6", "2", "16", "8", "41", "28", "107", "90"],
        &["0", "0", "0", "0", "0", "0", "0", "1", "0", "3", "0", "10", "2", "30", "10", "85"],
    ],
};

/// Grand knight's paths ending at `(n, k)`; rows `n = 0..=9`, columns `k = 0..=9`.
pub const GRAND_TABLE: GridFixture = GridFixture {
    name: "grand-table",
    source: "grand knight's paths from (0,0) to (n,k)",
    row_label: "n",
    col_label: "k",
    rows: &[
        &["1", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
        &["0", "0", "1", "0", "0", "0", "0", "0", "0", "0"],
        &["2", "1", "0", "0", "1", "0", "0", "0", "0", "0"],
        &["0", "2", "3", "2", "0", "0", "1", "0", "0", "0"],
        &["8", "6", "1", "3", "4", "3", "0", "0", "1", "0"],
        &["6", "12", "16", "12", "3", "4", "5", "4", "0", "0"],
        &["44", "33", "18", "21", "27", "20", "6", "5", "6", "5"],
        &["60", "76", "95", "72", "40", "34", "41", "30", "10", "6"],
        &["256", "210", "154", "155", "177", "135", "75", "52", "58", "42"],
        &["460", "520", "581", "480", "335", "288", "299", "228", "126", "76"],
    ],
};

/// Grand zigzag knight's paths whose height range is exactly `k`; rows
/// `k = 1..=3`, columns `n = 0..=16`.
pub const SPAN_TABLE: GridFixture = GridFixture {
    name: "span-table",
    source: "grand zigzag knight's paths of size n and span exactly k",
    row_label: "k-1",
    col_label: "n",
    rows: &[
        &["0", "0", "2", "0", "2", "0", "2", "0", "2", "0", "2", "0", "2", "0", "2", "0", "2"],
        &["0", "2", "2", "6", "6", "12", "14", "24", "30", "46", "60", "88", "118", "168", "228", "320", "438"],
        &["0", "0", "0", "0", "2", "4", "10", "16", "32", "52", "94", "148", "252", "392", "648", "996", "1612"],
    ],
};

pub const GRIDS: [GridFixture; 3] = [ZIGZAG_TABLE, GRAND_TABLE, SPAN_TABLE];

pub fn by_name(name: &str) -> Option<Fixture> {
    INLINE_LISTS.iter().copied().find(|f| f.name == name)
}
