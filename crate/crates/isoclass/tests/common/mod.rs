//! Golden reference data for the classification tables of the three
//! space forms in dimensions 1 to 3: Segre symbol, normal-form
//! descriptor, the variety of invariant totally geodesic submanifolds of
//! each degree, and the dimension vector.
//!
//! Component products are written with factors sorted alphabetically and
//! point factors dropped (`*` is a point, `0` the empty variety), which
//! is the crate's canonical rendering.

use isoclass::segre::Space;

pub struct GoldenRow {
    pub symbol: &'static str,
    pub descriptor: &'static str,
    /// Variety rendering for degrees `0..n`.
    pub gammas: &'static [&'static str],
    pub d: &'static str,
}

pub struct GoldenTable {
    pub space: Space,
    pub n: usize,
    pub rows: &'static [GoldenRow],
}

pub const S1: GoldenTable = GoldenTable {
    space: Space::Spherical,
    n: 1,
    rows: &[
        GoldenRow { symbol: "[2]", descriptor: "eI(2)", gammas: &["P1"], d: "[1]" },
        GoldenRow { symbol: "[1,1]", descriptor: "eI(1)+-eI(1)", gammas: &["* u *"], d: "[(0,0)]" },
        GoldenRow { symbol: "[(1 1)]", descriptor: "R(th)", gammas: &["0"], d: "[-1]" },
    ],
};

pub const S2: GoldenTable = GoldenTable {
    space: Space::Spherical,
    n: 2,
    rows: &[
        GoldenRow { symbol: "[3]", descriptor: "eI(3)", gammas: &["P2", "P2"], d: "[2;2]" },
        GoldenRow {
            symbol: "[2,1]",
            descriptor: "eI(2)+-eI(1)",
            gammas: &["P1 u *", "P1 u *"],
            d: "[(1,0);(1,0)]",
        },
        GoldenRow {
            symbol: "[(1 1),1]",
            descriptor: "R(th)+eI(1)",
            gammas: &["*", "*"],
            d: "[0;0]",
        },
    ],
};

/// The `[4]` row carries the corrected dimension vector `[3;4;3]`: its
/// varieties at degrees 0 and 2 are P3, of dimension 3. Some printings of
/// this table list `[2;4;2]`, which contradicts the P3 column they print
/// beside it.
pub const S3: GoldenTable = GoldenTable {
    space: Space::Spherical,
    n: 3,
    rows: &[
        GoldenRow {
            symbol: "[4]",
            descriptor: "eI(4)",
            gammas: &["P3", "Gr(2,R4)", "P3"],
            d: "[3;4;3]",
        },
        GoldenRow {
            symbol: "[3,1]",
            descriptor: "eI(3)+-eI(1)",
            gammas: &["P2 u *", "P2 u P2", "P2 u *"],
            d: "[(2,0);(2,2);(2,0)]",
        },
        GoldenRow {
            symbol: "[2,2]",
            descriptor: "eI(2)+-eI(2)",
            gammas: &["P1 u P1", "P1xP1 u * u *", "P1 u P1"],
            d: "[(1,1);(2,0,0);(1,1)]",
        },
        GoldenRow {
            symbol: "[(1 1),2]",
            descriptor: "R(th)+eI(2)",
            gammas: &["P1", "* u *", "P1"],
            d: "[1;(0,0);1]",
        },
        GoldenRow {
            symbol: "[(1 1),1,1]",
            descriptor: "R(th)+eI(1)+-eI(1)",
            gammas: &["* u *", "* u *", "* u *"],
            d: "[(0,0);(0,0);(0,0)]",
        },
        GoldenRow {
            symbol: "[(2 2)]",
            descriptor: "R(th)^2",
            gammas: &["0", "PC1", "0"],
            d: "[-1;2;-1]",
        },
        GoldenRow {
            symbol: "[(1 1),(1 1)]",
            descriptor: "R(th1)+R(th2)",
            gammas: &["0", "* u *", "0"],
            d: "[-1;(0,0);-1]",
        },
    ],
};

pub const E1: GoldenTable = GoldenTable {
    space: Space::Euclidean,
    n: 1,
    rows: &[
        GoldenRow { symbol: "[e;1;0]", descriptor: "I(2)", gammas: &["E1"], d: "[1]" },
        GoldenRow { symbol: "[e;0;1]", descriptor: "-I(1)+I(1)", gammas: &["*"], d: "[0]" },
        GoldenRow { symbol: "[h;1;0]", descriptor: "T(a)", gammas: &["0"], d: "[-1]" },
    ],
};

pub const E2: GoldenTable = GoldenTable {
    space: Space::Euclidean,
    n: 2,
    rows: &[
        GoldenRow { symbol: "[e;2;0]", descriptor: "I(3)", gammas: &["E2", "Ga(1,2)"], d: "[2;2]" },
        GoldenRow {
            symbol: "[e;1;1]",
            descriptor: "-I(1)+I(2)",
            gammas: &["E1", "E1 u *"],
            d: "[1;(1,0)]",
        },
        GoldenRow {
            symbol: "[e;0;2]",
            descriptor: "-I(2)+I(1)",
            gammas: &["*", "P1"],
            d: "[0;1]",
        },
        GoldenRow {
            symbol: "[e;0;(1 1)]",
            descriptor: "R(th)+I(1)",
            gammas: &["*", "0"],
            d: "[0;-1]",
        },
        GoldenRow {
            symbol: "[h;2;0]",
            descriptor: "I(1)+T(a)",
            gammas: &["0", "E1"],
            d: "[-1;1]",
        },
        GoldenRow {
            symbol: "[h;1;1]",
            descriptor: "-I(1)+T(a)",
            gammas: &["0", "*"],
            d: "[-1;0]",
        },
    ],
};

pub const E3: GoldenTable = GoldenTable {
    space: Space::Euclidean,
    n: 3,
    rows: &[
        GoldenRow {
            symbol: "[e;3;0]",
            descriptor: "I(4)",
            gammas: &["E3", "Ga(1,3)", "Ga(2,3)"],
            d: "[3;4;3]",
        },
        GoldenRow {
            symbol: "[e;2;1]",
            descriptor: "-I(1)+I(3)",
            gammas: &["E2", "E2 u Ga(1,2)", "Ga(1,2) u *"],
            d: "[2;(2,2);(2,0)]",
        },
        GoldenRow {
            symbol: "[e;1;2]",
            descriptor: "-I(2)+I(2)",
            gammas: &["E1", "P1xE1 u *", "E1 u P1"],
            d: "[1;(2,0);(1,1)]",
        },
        GoldenRow {
            symbol: "[e;1;(1 1)]",
            descriptor: "R(th)+I(2)",
            gammas: &["E1", "*", "E1"],
            d: "[1;0;1]",
        },
        GoldenRow {
            symbol: "[e;0;3]",
            descriptor: "-I(3)+I(1)",
            gammas: &["*", "P2", "P2"],
            d: "[0;2;2]",
        },
        GoldenRow {
            symbol: "[e;0;(1 1),1]",
            descriptor: "R(th)+-I(1)+I(1)",
            gammas: &["*", "*", "*"],
            d: "[0;0;0]",
        },
        GoldenRow {
            symbol: "[h;3;0]",
            descriptor: "I(2)+T(a)",
            gammas: &["0", "E2", "Ga(1,2)"],
            d: "[-1;2;2]",
        },
        GoldenRow {
            symbol: "[h;2;1]",
            descriptor: "-I(1)+I(1)+T(a)",
            gammas: &["0", "E1", "E1 u *"],
            d: "[-1;1;(1,0)]",
        },
        GoldenRow {
            symbol: "[h;1;2]",
            descriptor: "-I(2)+T(a)",
            gammas: &["0", "*", "P1"],
            d: "[-1;0;1]",
        },
        GoldenRow {
            symbol: "[h;1;(1 1)]",
            descriptor: "R(th)+T(a)",
            gammas: &["0", "*", "0"],
            d: "[-1;0;-1]",
        },
    ],
};

pub const H1: GoldenTable = GoldenTable {
    space: Space::Hyperbolic,
    n: 1,
    rows: &[
        GoldenRow { symbol: "[e;2;0]", descriptor: "I(2)", gammas: &["H1"], d: "[1]" },
        GoldenRow { symbol: "[e;1;1]", descriptor: "I(1)+-I(1)", gammas: &["*"], d: "[0]" },
        GoldenRow { symbol: "[h;2;0]", descriptor: "Om(t)", gammas: &["0"], d: "[-1]" },
    ],
};

pub const H2: GoldenTable = GoldenTable {
    space: Space::Hyperbolic,
    n: 2,
    rows: &[
        GoldenRow { symbol: "[e;3;0]", descriptor: "I(3)", gammas: &["H2", "Gh(1,2)"], d: "[2;2]" },
        GoldenRow {
            symbol: "[e;2;1]",
            descriptor: "I(2)+-I(1)",
            gammas: &["H1", "H1 u *"],
            d: "[1;(1,0)]",
        },
        GoldenRow {
            symbol: "[e;1;2]",
            descriptor: "I(1)+-I(2)",
            gammas: &["*", "P1"],
            d: "[0;1]",
        },
        GoldenRow {
            symbol: "[e;1;(1 1)]",
            descriptor: "I(1)+R(th)",
            gammas: &["*", "0"],
            d: "[0;-1]",
        },
        GoldenRow {
            symbol: "[h;2;1]",
            descriptor: "Om(t)+eI(1)",
            gammas: &["0", "*"],
            d: "[-1;0]",
        },
        GoldenRow { symbol: "[p;3;0]", descriptor: "Th", gammas: &["0", "0"], d: "[-1;-1]" },
    ],
};

pub const H3: GoldenTable = GoldenTable {
    space: Space::Hyperbolic,
    n: 3,
    rows: &[
        GoldenRow {
            symbol: "[e;4;0]",
            descriptor: "I(4)",
            gammas: &["H3", "Gh(1,3)", "Gh(2,3)"],
            d: "[3;4;3]",
        },
        GoldenRow {
            symbol: "[e;3;1]",
            descriptor: "I(3)+-I(1)",
            gammas: &["H2", "Gh(1,2) u H2", "Gh(1,2) u *"],
            d: "[2;(2,2);(2,0)]",
        },
        GoldenRow {
            symbol: "[e;2;2]",
            descriptor: "I(2)+-I(2)",
            gammas: &["H1", "H1xP1 u *", "H1 u P1"],
            d: "[1;(2,0);(1,1)]",
        },
        GoldenRow {
            symbol: "[e;2;(1 1)]",
            descriptor: "I(2)+R(th)",
            gammas: &["H1", "*", "H1"],
            d: "[1;0;1]",
        },
        GoldenRow {
            symbol: "[e;1;3]",
            descriptor: "I(1)+-I(3)",
            gammas: &["*", "P2", "P2"],
            d: "[0;2;2]",
        },
        GoldenRow {
            symbol: "[e;1;(1 1),1]",
            descriptor: "I(1)+R(th)+-I(1)",
            gammas: &["*", "*", "*"],
            d: "[0;0;0]",
        },
        GoldenRow {
            symbol: "[h;2;2]",
            descriptor: "Om(t)+eI(2)",
            gammas: &["0", "*", "P1"],
            d: "[-1;0;1]",
        },
        GoldenRow {
            symbol: "[h;2;1,1]",
            descriptor: "Om(t)+eI(1)+-eI(1)",
            gammas: &["0", "*", "* u *"],
            d: "[-1;0;(0,0)]",
        },
        GoldenRow {
            symbol: "[h;2;(1 1)]",
            descriptor: "Om(t)+R(th)",
            gammas: &["0", "*", "0"],
            d: "[-1;0;-1]",
        },
        GoldenRow {
            symbol: "[p;4;0]",
            descriptor: "Th+I(1)",
            gammas: &["0", "0", "E1"],
            d: "[-1;-1;1]",
        },
        GoldenRow {
            symbol: "[p;3;1]",
            descriptor: "Th+-I(1)",
            gammas: &["0", "0", "*"],
            d: "[-1;-1;0]",
        },
    ],
};

pub const ALL_TABLES: [&GoldenTable; 9] = [&S1, &S2, &S3, &E1, &E2, &E3, &H1, &H2, &H3];
