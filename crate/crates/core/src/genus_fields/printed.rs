//! Published formulas, transcribed verbatim. Coefficients may mention
//! `l{s}` (the map components), the auxiliary names `w6 .. w15`,
//! `p7 .. p11`, the genus-2 parameters and, in classical tables,
//! `wp{i}_{k..}` symbols; everything is resolved before use.

/// A field given by `(variable, value)` pairs.
pub type Action = &'static [(&'static str, &'static str)];

/// `[left, right] = sum coefficient * field`.
#[derive(Debug, Clone, Copy)]
pub struct Row {
    pub left: &'static str,
    pub right: &'static str,
    pub terms: &'static [(&'static str, &'static str)],
}

const fn row(
    left: &'static str,
    right: &'static str,
    terms: &'static [(&'static str, &'static str)],
) -> Row {
    Row { left, right, terms }
}

pub mod genus1 {
    use super::*;

    pub const MAP: Action = &[
        ("l4", "-3*x2^2 + 1/2*x4"),
        ("l6", "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4"),
    ];

    pub const L0: Action = &[("x2", "2*x2"), ("x3", "3*x3"), ("x4", "4*x4")];
    pub const L1: Action = &[("x2", "x3"), ("x3", "x4"), ("x4", "12*x2*x3")];
    pub const L2: Action = &[
        ("x2", "2/3*x4 - 2*x2^2"),
        ("x3", "3*x2*x3"),
        ("x4", "2*x2*x4 + 3*x3^2"),
    ];

    pub const TABLE: &[Row] = &[
        row("L0", "L1", &[("1", "L1")]),
        row("L0", "L2", &[("2", "L2")]),
        row("L1", "L2", &[("x2", "L1")]),
    ];

    pub const CLASSICAL: &[Row] = &[
        row("L0", "L1", &[("1", "L1")]),
        row("L0", "L2", &[("2", "L2")]),
        row("L1", "L2", &[("wp2", "L1")]),
    ];
}

pub mod genus2 {
    use super::*;

    pub const MAP: Action = &[
        ("l4", "-3*x2^2 + 1/2*x4 - 2*y4"),
        ("l6", "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4 - 2*x2*y4 + 1/2*y6"),
        ("l8", "(4*x2^2 + y4)*y4 - 1/2*(x4*y4 - x3*y5 + x2*y6)"),
        ("l10", "2*x2*y4^2 + 1/4*y5^2 - 1/2*y4*y6"),
    ];

    pub const L0: Action = &[
        ("x2", "2*x2"),
        ("x3", "3*x3"),
        ("x4", "4*x4"),
        ("y4", "4*y4"),
        ("y5", "5*y5"),
        ("y6", "6*y6"),
    ];

    pub const L1: Action = &[
        ("x2", "x3"),
        ("x3", "x4"),
        ("x4", "4*(3*x2*x3 + y5)"),
        ("y4", "y5"),
        ("y5", "y6"),
        ("y6", "4*(2*x2*y5 + x3*y4)"),
    ];

    pub const L3: Action = &[
        ("x2", "y5"),
        ("y4", "x3*y4 - x2*y5"),
        ("x3", "y6"),
        ("y5", "x4*y4 - x2*y6"),
        ("x4", "4*(2*x2*y5 + x3*y4)"),
        ("y6", "8*x2*x3*y4 - 8*x2^2*y5 + x4*y5 - x3*y6 + 4*y4*y5"),
    ];

    pub const AUX: Action = &[
        ("w6", "3*x2*y4 - 1/2*y6"),
        ("p7", "x3*y4 - x2*y5"),
        ("w9", "-x2*x3*y4 + x2^2*y5 - 1/2*(x4*y5 - x3*y6) + y4*y5"),
    ];

    pub const L2: Action = &[
        ("x2", "8/5*l4 + 2*x2^2 + 4*y4"),
        ("y4", "-4/5*l4*x2 + 2*x2*y4"),
        ("x3", "3*x2*x3 + 5*y5"),
        ("y5", "-4/5*l4*x3 + 3*x3*y4"),
        ("x4", "2*x2*x4 + 3*x3^2 + 6*y6"),
        ("y6", "-4/5*l4*x4 + 4*x4*y4 + 3*x3*y5 - 2*x2*y6"),
    ];

    pub const L4: Action = &[
        ("x2", "2/5*l6 - 2*x2*y4 + y6"),
        ("x3", "x3*y4 + 5*x2*y5"),
        ("x4", "6*x3*y5 + 4*x2*y6"),
        ("y4", "-6/5*l6*x2 + 2*l4*y4 - 4*x2^2*y4 + x4*y4 - 1/2*x3*y5"),
        ("y5", "-6/5*l6*x3 + 2*l4*y5 + 2*x2*x3*y4 - 2*x2^2*y5 + 4*y4*y5 - w9"),
        (
            "y6",
            "-6/5*l6*x4 + 2*l4*y6 + x3^2*y4 + 2*x2*x4*y4 - x2*x3*y5 - 2*x2^2*y6 + 5*y5^2 + 2*y4*y6",
        ),
    ];

    pub const L6: Action = &[
        ("x2", "1/5*l8 + 1/2*(x4*y4 - x2*y6) - y4^2"),
        ("x3", "3*x2*p7 - w9"),
        ("x4", "2*x3^2*y4 + 4*x2*x4*y4 - 2*x2*x3*y5 - 4*x2^2*y6 + y5^2 - 2*y4*y6"),
        ("y4", "-8/5*l8*x2 + 2*l6*y4 - 2*x2*y4^2 - y5^2 + y4*y6"),
        ("y5", "-8/5*l8*x3 + 2*l6*y5 + x3*y4^2 + 5*x2*y4*y5 - y5*y6"),
        ("y6", "-8/5*l8*x4 + 2*l6*y6 + 3*x3*y4*y5 - 3*x2*y5^2 + 6*x2*y4*y6 - y6^2"),
    ];

    /// Extra terms of the hatted fields: `(base, [(coefficient, field)])`.
    pub const HATS: &[(&str, &[(&str, &str)])] = &[
        ("L4", &[("alpha*x3", "L1")]),
        ("L6", &[("beta*x3", "L3"), ("gamma1*y5 + gamma2*x2*x3", "L1")]),
    ];

    /// The prescribed brackets with `L1` that fix the parameters.
    pub const NORMALIZATION: &[Row] = &[
        row("L1", "L0", &[("-1", "L1")]),
        row("L1", "L2", &[("x2", "L1"), ("-1", "L3")]),
        row("L1", "L4", &[("y4", "L1"), ("x2", "L3")]),
        row("L1", "L6", &[("y4", "L3")]),
    ];

    pub const TABLE: &[Row] = &[
        row("L0", "L1", &[("1", "L1")]),
        row("L0", "L2", &[("2", "L2")]),
        row("L0", "L3", &[("3", "L3")]),
        row("L0", "L4", &[("4", "L4")]),
        row("L0", "L6", &[("6", "L6")]),
        row("L1", "L3", &[]),
        row("L1", "L2", &[("x2", "L1"), ("-1", "L3")]),
        row("L1", "L4", &[("y4", "L1"), ("x2", "L3"), ("alpha*x4", "L1")]),
        row(
            "L1",
            "L6",
            &[
                ("y4", "L3"),
                ("gamma2*(x3^2 + x2*x4) + gamma1*y6", "L1"),
                ("beta*x4", "L3"),
            ],
        ),
        row("L3", "L2", &[("y4 + 4/5*l4", "L1")]),
        row(
            "L3",
            "L4",
            &[("w6 + 6/5*l6", "L1"), ("y4 - l4", "L3"), ("alpha*y6", "L1")],
        ),
        row(
            "L3",
            "L6",
            &[
                ("3/5*l8", "L1"),
                ("w6", "L3"),
                ("gamma1*x4*y4 + gamma2*x3*y5 - (gamma1 - gamma2)*x2*y6", "L1"),
                ("beta*y6", "L3"),
            ],
        ),
        row(
            "L2",
            "L4",
            &[
                ("8/5*l6", "L0"),
                ("-8/5*l4", "L2"),
                ("2", "L6"),
                ("-1/2*y5", "L1"),
                ("1/2*x3", "L3"),
                ("2*(alpha - gamma2)*x2*x3 + (5*alpha - 2*gamma1)*y5", "L1"),
                ("(alpha - 2*beta)*x3", "L3"),
            ],
        ),
        row(
            "L2",
            "L6",
            &[
                ("4/5*l8", "L0"),
                ("-4/5*l4", "L4"),
                ("-1/2*p7", "L1"),
                ("1/2*y5", "L3"),
                (
                    "1/5*(2*(alpha - beta - gamma1)*(x4 - 6*x2^2) + 4*gamma2*(x4 - x2^2 + y4) - (8*alpha - 3*beta - 23*gamma1)*y4)*x3",
                    "L1",
                ),
                ("-(gamma1 - 5*gamma2)*x2*y5", "L1"),
                ("(5*beta + gamma1)*y5 + (3*beta + gamma2)*x2*x3", "L3"),
            ],
        ),
        row(
            "L4",
            "L6",
            &[
                ("-2*l10", "L0"),
                ("6/5*l8", "L2"),
                ("-6/5*l6", "L4"),
                ("2*l4", "L6"),
                ("-1/2*w9", "L1"),
                ("1/2*p7", "L3"),
                ("(alpha - beta - gamma1 + 2*gamma2)*(6/5*l6 + w6 + y6)*x3", "L1"),
                (
                    "(2*gamma2*x2^3 - 1/2*gamma2*x3^2 + (6*gamma1 - 7*alpha)*x2*y4 + (beta - gamma2)*y6)*x3",
                    "L1",
                ),
                (
                    "((4*alpha - 3*gamma1 + 5*gamma2)*x2^2 - 1/2*(alpha - gamma1)*x4 + (alpha + 2*gamma1)*y4)*y5",
                    "L1",
                ),
                ("alpha*(gamma2*x3^3 - gamma1*x4*y5 - (beta - gamma1)*x3*y6)", "L1"),
                (
                    "(3*beta - gamma2)*x2^2*x3 + 1/2*beta*(2*alpha - 1)*x3*x4 + (alpha + 2*beta)*x3*y4 + (5*beta - gamma1)*x2*y5",
                    "L3",
                ),
            ],
        ),
    ];

    pub const CLASSICAL: &[Row] = &[
        row("L0", "L1", &[("1", "L1")]),
        row("L0", "L2", &[("2", "L2")]),
        row("L0", "L3", &[("3", "L3")]),
        row("L0", "L4", &[("4", "L4")]),
        row("L0", "L6", &[("6", "L6")]),
        row("L1", "L3", &[]),
        row("L1", "L2", &[("wp2", "L1"), ("-1", "L3")]),
        row("L1", "L4", &[("wp1_3", "L1"), ("wp2", "L3")]),
        row("L1", "L6", &[("wp1_3", "L3")]),
        row("L3", "L2", &[("wp1_3 + 4/5*l4", "L1")]),
        row("L3", "L6", &[("3/5*l8", "L1"), ("wp0_3_3", "L3")]),
        row(
            "L3",
            "L4",
            &[("wp0_3_3 + 6/5*l6", "L1"), ("wp1_3 - l4", "L3")],
        ),
        row(
            "L2",
            "L4",
            &[
                ("8/5*l6", "L0"),
                ("-8/5*l4", "L2"),
                ("2", "L6"),
                ("-1/2*wp2_3", "L1"),
                ("1/2*wp3", "L3"),
            ],
        ),
        row(
            "L2",
            "L6",
            &[
                ("4/5*l8", "L0"),
                ("-4/5*l4", "L4"),
                ("-1/2*wp1_3_3", "L1"),
                ("1/2*wp2_3", "L3"),
            ],
        ),
        row(
            "L4",
            "L6",
            &[
                ("-2*l10", "L0"),
                ("6/5*l8", "L2"),
                ("-6/5*l6", "L4"),
                ("2*l4", "L6"),
                ("-1/2*wp0_3_3_3", "L1"),
                ("1/2*wp1_3_3", "L3"),
            ],
        ),
    ];
}

pub mod genus3 {
    use super::*;

    pub const MAP: Action = &[
        ("l4", "-3*x2^2 + 1/2*x4 - 2*y4"),
        ("l6", "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4 - 2*x2*y4 + 1/2*y6 - 2*z6"),
        ("l8", "4*x2^2*y4 - 1/2*(x4*y4 - x3*y5 + x2*y6) + y4^2 - 2*x2*z6 + 1/2*z8"),
        (
            "l10",
            "2*x2*y4^2 + 1/4*y5^2 - 1/2*y4*y6 - 1/2*(x4*z6 - x3*z7 + x2*z8) + (4*x2^2 + 2*y4)*z6",
        ),
        ("l12", "4*x2*y4*z6 - 1/2*(y6*z6 - y5*z7 + y4*z8) + z6^2"),
        ("l14", "2*x2*z6^2 + 1/4*z7^2 - 1/2*z6*z8"),
    ];

    pub const L1: Action = &[
        ("x2", "x3"),
        ("x3", "x4"),
        ("x4", "4*(3*x2*x3 + y5)"),
        ("y4", "y5"),
        ("y5", "y6"),
        ("y6", "4*(x3*y4 + 2*x2*y5 + z7)"),
        ("z6", "z7"),
        ("z7", "z8"),
        ("z8", "4*(x3*z6 + 2*x2*z7)"),
    ];

    pub const L3_SEEDS: Action = &[
        ("x2", "y5"),
        ("y4", "x3*y4 - x2*y5 + z7"),
        ("z6", "x3*z6 - x2*z7"),
    ];

    pub const L5_SEEDS: Action = &[
        ("x2", "z7"),
        ("y4", "x3*z6 - x2*z7"),
        ("z6", "y5*z6 - y4*z7"),
    ];

    /// `w6 = w_{3,3}`, `w8 = w_{3,5}`, `w10 = w_{5,5}` and the derived names.
    pub const AUX: Action = &[
        ("w6", "3*x2*y4 - 1/2*y6 + 3*z6"),
        ("w8", "3*x2*z6 - 1/2*z8"),
        ("w10", "1/2*(x4*z6 - x3*z7 + x2*z8) - (4*x2^2 + y4)*z6"),
        ("p7", "x3*y4 - x2*y5 + z7"),
        ("p9", "x3*z6 - x2*z7"),
        ("p11", "y5*z6 - y4*z7"),
        (
            "w9",
            "-x3*x2*y4 + x2^2*y5 - 1/2*x4*y5 + 1/2*x3*y6 + y4*y5 + x3*z6 - 2*x2*z7",
        ),
        ("w11", "-x2*x3*z6 + y5*z6 + x2^2*z7 - 1/2*x4*z7 + 1/2*x3*z8"),
        ("w13", "-y5*x2*z6 + x2*y4*z7 - 1/2*y6*z7 + 1/2*y5*z8 + z6*z7"),
        (
            "w15",
            "-y4*y5*z6 + y4^2*z7 + x3*z6^2 - x2*z6*z7 - 1/2*z7*z8 + 1/2*z8*p7 - 1/2*y6*p9 + 1/2*x4*p11",
        ),
    ];

    /// Values of the even fields on `x2, y4, z6`.
    pub const SEEDS: &[(&str, Action)] = &[
        (
            "L2",
            &[
                ("x2", "12/7*l4 + 2*x2^2 + 4*y4"),
                ("y4", "-8/7*l4*x2 + 2*x2*y4 + 6*z6"),
                ("z6", "-4/7*l4*y4 + 2*x2*z6"),
            ],
        ),
        (
            "L4",
            &[
                ("x2", "4/7*l6 - 2*x2*y4 + y6 + 2*z6"),
                ("z6", "-6/7*l6*y4 - 16*x2^2*z6 + 3*x4*z6 - 8*y4*z6 - 1/2*x3*z7"),
                (
                    "y4",
                    "-12/7*l6*x2 - 10*x2^2*y4 + 2*x4*y4 - 4*y4^2 - 1/2*x3*y5 + 2*x2*z6",
                ),
            ],
        ),
        (
            "L6",
            &[
                ("x2", "-4/7*l8 + 4*x2^2*y4 - x2*y6 - 4*x2*z6 + 1/2*x3*y5 + 2*z8"),
                (
                    "y4",
                    "-16/7*l8*x2 + 2*l6*y4 - 2*x2*y4^2 - y5^2 + y4*y6 - 16*x2^2*z6 + 3*x4*z6 - 6*y4*z6 - 1/2*x3*z7",
                ),
                (
                    "z6",
                    "-8/7*l8*y4 + 4*l6*z6 - 2*x2*y4*z6 + y6*z6 - y5*z7 + 2*z6^2",
                ),
            ],
        ),
        (
            "L8",
            &[
                ("x2", "2/7*l10 + x4*z6 - 2*y4*z6 - x2*z8"),
                (
                    "y4",
                    "-6/7*l10*x2 + x3^2*z6 - x2*x4*z6 - 18*x2*y4*z6 + 3*y6*z6 - x2*x3*z7 - 5/2*y5*z7 + x2^2*z8 + 2*y4*z8 - 6*z6^2",
                ),
                (
                    "z6",
                    "-10/7*l10*y4 - x4*y4*z6 + 3/2*x3*y5*z6 + 2*y4^2*z6 - 20*x2*z6^2 - z7^2 + 3*z6*z8 + 4*w6*x2*z6 - 1/2*z7*p7",
                ),
            ],
        ),
        (
            "L10",
            &[
                ("x2", "1/7*l12 + 1/2*y6*z6 - 1/2*y4*z8 - z6^2"),
                (
                    "y4",
                    "-3/7*l12*x2 + 1/2*x3*y5*z6 - 1/2*x2*y6*z6 - 1/2*x3*y4*z7 + 1/2*x2*y4*z8 - 11*x2*z6^2 - 3/2*z7^2 + 3*z6*z8",
                ),
                (
                    "z6",
                    "2/7*l12*y4 - 4*x2*y4^2*z6 + 1/2*y5^2*z6 - y4*y5*z7 + y4^2*z8 + 8*x2^2*z6^2 + x2*z7^2 - 2*x2*z6*z8",
                ),
            ],
        ),
    ];

    /// Brackets with `L1`; these determine the even fields from their seeds.
    pub const WITH_L1: &[Row] = &[
        row("L1", "L0", &[("-1", "L1")]),
        row("L1", "L2", &[("x2", "L1"), ("-1", "L3")]),
        row("L1", "L4", &[("y4", "L1"), ("x2", "L3"), ("-1", "L5")]),
        row("L1", "L6", &[("z6", "L1"), ("y4", "L3"), ("x2", "L5")]),
        row("L1", "L8", &[("z6", "L3"), ("y4", "L5")]),
        row("L1", "L10", &[("z6", "L5")]),
    ];

    pub const WITH_L3: &[Row] = &[
        row("L3", "L2", &[("y4 - l4", "L1"), ("-3", "L5"), ("15/7*l4", "L1")]),
        row("L3", "L4", &[("w6", "L1"), ("y4 - l4", "L3"), ("12/7*l6", "L1")]),
        row(
            "L3",
            "L6",
            &[("w8", "L1"), ("w6", "L3"), ("y4 - l4", "L5"), ("9/7*l8", "L1")],
        ),
        row("L3", "L8", &[("w8", "L3"), ("w6", "L5"), ("6/7*l10", "L1")]),
        row("L3", "L10", &[("w8", "L5"), ("3/7*l12", "L1")]),
    ];

    pub const WITH_L5: &[Row] = &[
        row("L5", "L2", &[("z6", "L1"), ("4/7*l4", "L3")]),
        row(
            "L5",
            "L4",
            &[("w8", "L1"), ("z6", "L3"), ("6/7*l6", "L3"), ("-3*l4", "L5")],
        ),
        row(
            "L5",
            "L6",
            &[
                ("w10", "L1"),
                ("w8", "L3"),
                ("z6", "L5"),
                ("8/7*l8", "L3"),
                ("-2*l6", "L5"),
            ],
        ),
        row(
            "L5",
            "L8",
            &[
                ("-l12", "L1"),
                ("w10", "L3"),
                ("w8", "L5"),
                ("10/7*l10", "L3"),
                ("-l8", "L5"),
            ],
        ),
        row(
            "L5",
            "L10",
            &[
                ("-2*l14", "L1"),
                ("-l12", "L3"),
                ("w10", "L5"),
                ("12/7*l12", "L3"),
            ],
        ),
    ];

    /// The odd part of the remaining brackets, one row per pair of even
    /// fields in the order `(2,4), (2,6), ..., (8,10)`; coefficients of
    /// `L1, L3, L5`, all to be halved. The even part is the structure
    /// matrix of the parameter-space fields.
    pub const HALF: [[&str; 3]; 10] = [
        ["-y5", "x3", "0"],
        ["-p7 - z7", "y5", "x3"],
        ["-2*p9", "z7", "y5"],
        ["-p11", "0", "z7"],
        ["-w9", "p7 - 2*z7", "2*y5"],
        ["-2*w11", "0", "2*p7"],
        ["-w13", "-p11", "2*p9"],
        ["-2*w13", "2*p11 - w11", "w9"],
        ["-w15", "-w13", "w11 + p11"],
        ["0", "-w15", "w13"],
    ];

    pub const CLASSICAL_WITH_L1: &[Row] = &[
        row("L1", "L2", &[("wp2", "L1"), ("-1", "L3")]),
        row("L1", "L4", &[("wp1_3", "L1"), ("wp2", "L3"), ("-1", "L5")]),
        row(
            "L1",
            "L6",
            &[("wp1_5", "L1"), ("wp1_3", "L3"), ("wp2", "L5")],
        ),
        row("L1", "L8", &[("wp1_5", "L3"), ("wp1_3", "L5")]),
        row("L1", "L10", &[("wp1_5", "L5")]),
    ];

    pub const CLASSICAL_WITH_L3: &[Row] = &[
        row(
            "L3",
            "L2",
            &[("wp1_3 - l4", "L1"), ("-3", "L5"), ("15/7*l4", "L1")],
        ),
        row(
            "L3",
            "L4",
            &[("wp0_3_3", "L1"), ("wp1_3 - l4", "L3"), ("12/7*l6", "L1")],
        ),
        row(
            "L3",
            "L6",
            &[
                ("wp0_3_5", "L1"),
                ("wp0_3_3", "L3"),
                ("wp1_3 - l4", "L5"),
                ("9/7*l8", "L1"),
            ],
        ),
        row(
            "L3",
            "L8",
            &[("wp0_3_5", "L3"), ("wp0_3_3", "L5"), ("6/7*l10", "L1")],
        ),
        row("L3", "L10", &[("wp0_3_5", "L5"), ("3/7*l12", "L1")]),
    ];

    pub const CLASSICAL_WITH_L5: &[Row] = &[
        row("L5", "L2", &[("wp1_5", "L1"), ("4/7*l4", "L3")]),
        row(
            "L5",
            "L4",
            &[
                ("wp0_3_5", "L1"),
                ("wp1_5", "L3"),
                ("6/7*l6", "L3"),
                ("-3*l4", "L5"),
            ],
        ),
        row(
            "L5",
            "L6",
            &[
                ("wp0_5_5", "L1"),
                ("wp0_3_5", "L3"),
                ("wp1_5", "L5"),
                ("8/7*l8", "L3"),
                ("-2*l6", "L5"),
            ],
        ),
        row(
            "L5",
            "L8",
            &[
                ("-l12", "L1"),
                ("wp0_5_5", "L3"),
                ("wp0_3_5", "L5"),
                ("10/7*l10", "L3"),
                ("-l8", "L5"),
            ],
        ),
        row(
            "L5",
            "L10",
            &[
                ("-2*l14", "L1"),
                ("-l12", "L3"),
                ("wp0_5_5", "L5"),
                ("12/7*l12", "L3"),
            ],
        ),
    ];

    pub const CLASSICAL_HALF: [[&str; 3]; 10] = [
        ["-wp2_3", "wp3", "0"],
        ["-wp1_3_3 - wp2_5", "wp2_3", "wp3"],
        ["-2*wp1_3_5", "wp2_5", "wp2_3"],
        ["-wp1_5_5", "0", "wp2_5"],
        ["-wp0_3_3_3", "wp1_3_3 - 2*wp2_5", "2*wp2_3"],
        ["-2*wp0_3_3_5", "0", "2*wp1_3_3"],
        ["-wp0_3_5_5", "-wp1_5_5", "2*wp1_3_5"],
        ["-2*wp0_3_5_5", "2*wp1_5_5 - wp0_3_3_5", "wp0_3_3_3"],
        ["-wp0_5_5_5", "-wp0_3_5_5", "wp0_3_3_5 + wp1_5_5"],
        ["0", "-wp0_5_5_5", "wp0_3_5_5"],
    ];
}
