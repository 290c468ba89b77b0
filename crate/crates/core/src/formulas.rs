//! Closed-form expressions, in the syntax of [`crate::expr`].
//!
//! `'` is `D1`; a `_p`/`_b` suffix is `D1`/`D2` of a named series. In the
//! local formulas `LL` and `UD` are the bivariate asymptotic series at one
//! fixed point, `s1`, `s2` the elementary symmetric functions of the second
//! pair of weights. In the tables `L` is the `q2^0` slice of `LL` at the
//! first fixed point.

/// Local `P^1 × P^1`: `J`, `𝕁`, `K`, `𝕂`, `𝕄` in evaluation order.
pub const LOCAL_JKM: [(&str, &str); 40] = [
    // J11 uses the same denominator as J12..J14
    ("J11", "((I11+ I11 I12_b+ I21_p+ I12_b I21_p- I12_p I21_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J12", "((-I11 I12_p+(1+ I12_b)(I12+ I22_p)- I12_p I22_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J13", "((-I12 I12_p+ I23_p+ I12_b I23_p- I12_p I23_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J14", "((I24_p+ I12_b I24_p- I12_p I24_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J15", "((I25_p + I12_b I25_p - I12_p I25_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J21", "((I21 + I12_b I21 + I31_p + I12_b I31_p - I12_p I31_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J22", "(((1 + I12_b) (I22 + I32_p) - I12_p (I21 + I32_b))/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J23", "(((1 + I12_b) (I23 + I33_p) - I12_p (I22 + I33_b))/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J24", "(((1 + I12_b) I34_p - I12_p (I23 + I34_b))/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J25", "((I24 + I12_b I24 + I35_p + I12_b I35_p - I12_p I35_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J26", "(((1 + I12_b) (I25 + I36_p) - I12_p (I24 + I36_b))/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J27", "(((1 + I12_b) I37_p - I12_p (I25 + I37_b))/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J28", "((I38_p + I12_b I38_p - I12_p I38_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("J29", "((I39_p + I12_b I39_p - I12_p I39_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("JJ11", "J12"),
    ("JJ12", "J14"),
    ("JJ13", "J15+s1 J13"),
    ("JJ14", "J11-s2 J13"),
    ("K11", "((-I11 I11_b - I11_b I21_p + I21_b + I11_p I21_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K12", "((I11 (1 + I11_p) - I11_b (I12 + I22_p) + (1 + I11_p) I22_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K13", "((I12 + I11_p I12 - I11_b I23_p + I23_b + I11_p I23_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K14", "((-I11_b I24_p + I24_b + I11_p I24_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K15", "((-I11_b I25_p + I25_b + I11_p I25_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K21", "((-I11_b (I21 + I31_p) + (1 + I11_p) I31_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K22", "(((1 + I11_p) I21 - I11_b (I22 + I32_p) + (1 + I11_p) I32_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K23", "(((1 + I11_p) I22 - I11_b (I23 + I33_p) + (1 + I11_p) I33_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K24", "((I23 + I11_p I23 - I11_b I34_p + I34_b + I11_p I34_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K25", "((-I11_b (I24 + I35_p) + (1 + I11_p) I35_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K26", "(((1 + I11_p) I24 - I11_b (I25 + I36_p) + (1 + I11_p) I36_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K27", "((I25 + I11_p I25 - I11_b I37_p + I37_b + I11_p I37_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K28", "((-I11_b I38_p + I38_b + I11_p I38_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("K29", "((-I11_b I39_p + I39_b + I11_p I39_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("KK11", "K12"),
    ("KK12", "K14"),
    ("KK13", "K15+s1 K13"),
    ("KK14", "K11-s2 K13"),
    ("MM11", "((J26_b + JJ12 - JJ11 JJ12_b - JJ13_b KK11 + (J23_b + JJ11) s1)/(1+JJ11_b))"),
    ("MM12", "((J21_b + J28_b - JJ12 JJ12_b - I11 JJ14_b - JJ13_b KK12 - (J23_b + JJ11) s2)/(1+JJ11_b))"),
    ("MM13", "((J22_b + J29_b - JJ12_b JJ13 + JJ14 - I12 JJ14_b - JJ13_b KK13 + (J27_b + JJ13) s1 + J24_b (s1^2 - s2))/(1+JJ11_b))"),
    ("MM14", "((J25_b - JJ12_b JJ14 - JJ13_b KK14 - (J27_b + JJ13) s2 - J24_b s1 s2)/(1+JJ11_b))"),
];

/// Local Birkhoff coefficients `E_{ij}`.
pub const LOCAL_E: [(&str, &str); 6] = [
    ("E11", "((1+ I12_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("E12", "((-I12_p)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("E21", "((-I11_b)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("E22", "((1+ I11_p)/(1+ I11_p- I11_b I12_p+ I12_b+ I11_p I12_b))"),
    ("E31", "((1)/(1+KK11_p))"),
    ("E32", "((-KK14_p)/(1+KK11_p))"),
];

/// Local: derivatives of `𝕁`, `𝕂`, `𝕄` as rational functions of `I11′`, `I11•`, `LL`, `UD`.
pub const PROP_MG: [(&str, &str); 12] = [
    ("JJ11\'", "-(((LL + UD)^2 (-1 + LL^2 + I11_b (-1 + LL^2) - I11_p LL UD))/(2 (1 + I11_p + I11_b)^2 (-1 + LL^2 - UD^2)))"),
    ("JJ11_b", "((1)/(2 (1 + I11_p + I11_b)^2 (-1 + LL^2 - UD^2)))(2 - 2 LL^2 - LL^3 UD + 2 UD^2 - 2 LL^2 UD^2 - LL UD^3 + (I11_p)^2 (2 - 2 LL^2 + 2 UD^2) + (I11_b)^2 (2 - 2 LL^2 + 2 UD^2) - I11_b (LL^3 UD + LL UD^3 - 4 (1 + UD^2) + 2 LL^2 (2 + UD^2)) + I11_p (4 + 5 UD^2 + UD^4 + LL^2 (-3 + UD^2) + I11_b (4 - 4 LL^2 + 4 UD^2) + 2 LL (UD + UD^3)))"),
    ("JJ14\'", "((1)/(2 (1 + I11_p + I11_b)^2 (-1 + LL^2 - UD^2)))((1 + I11_b) (-1 + LL^2) (-2 + LL^2 - UD^2 + 2 I11_b (-1 + LL^2 + LL UD)) + I11_p (-3 LL^3 UD + 4 (1 + UD^2) - 2 LL^2 (2 + UD^2) + LL UD (4 + UD^2) - 4 I11_b (-1 + LL^2) (1 + LL UD + UD^2)) + 2 (I11_p)^2 (1 + UD^2 + LL^2 (-1 + UD^2) + LL (UD + UD^3)))"),
    ("JJ14_b", "((1)/(2 (1 + I11_p + I11_b)^2 (-1 + LL^2 - UD^2)))((1 + I11_b) LL UD (-2 + LL^2 - UD^2 + 2 I11_b (-1 + LL^2 + LL UD)) + 2 (I11_p)^2 (LL^2 + UD^2 + UD^4 + LL (UD + UD^3)) + I11_p (UD^2 + UD^4 + LL^2 (1 - (3 + 4 I11_b) UD^2) - 2 (1 + 2 I11_b) LL (UD + UD^3)))"),
    ("KK11\'", "((1)/(2 (1 + I11_p + I11_b)^2 (-1 + LL^2 - UD^2)))(2 - 2 LL^2 - LL^3 UD + 2 UD^2 - 2 LL^2 UD^2 - LL UD^3 + (I11_p)^2 (2 - 2 LL^2 + 2 UD^2) + (I11_b)^2 (2 - 2 LL^2 + 2 UD^2) + I11_b (4 + LL^4 - 2 LL UD + 2 LL^3 UD + 3 UD^2 + LL^2 (-5 + UD^2)) - I11_p (LL^3 UD + LL UD^3 + 4 I11_b (-1 + LL^2 - UD^2) - 4 (1 + UD^2) + 2 LL^2 (2 + UD^2)))"),
    ("KK11_b", "-((1)/(2 (1 + I11_p + I11_b)^2 (-1 + LL^2 - UD^2)))((LL + UD)^2 (1 + I11_p - I11_b LL UD + UD^2 + I11_p UD^2))"),
    ("KK14\'", "((1)/(2 (1 + I11_p + I11_b)^2 (-1 + LL^2 - UD^2)))(-2 (I11_b)^2 (-LL^2 + LL^4 - LL UD + LL^3 UD - UD^2) - (1 + I11_p) LL UD (2 - LL^2 + UD^2 + 2 I11_p (1 + LL UD + UD^2)) + I11_b (-LL^4 + UD^2 - 2 LL (UD + 2 I11_p UD) + 2 LL^3 (UD + 2 I11_p UD) + LL^2 (1 + (3 + 4 I11_p) UD^2)))"),
    ("KK14_b", "((1)/(2 (1 + I11_p + I11_b)^2 (-1 + LL^2 - UD^2)))((-2 + LL^2 - UD^2) (1 + UD^2) - 2 (I11_p)^2 (1 + UD^2) (1 + LL UD + UD^2) + I11_p (1 + UD^2) (-4 + LL^2 - 2 LL UD - 3 UD^2 + 4 I11_b (-1 + LL^2 + LL UD)) - 2 (I11_b)^2 (1 - LL UD + LL^3 UD + UD^2 + LL^2 (-1 + UD^2)) + I11_b (-LL^3 UD - 4 (1 + UD^2) + 2 LL^2 (2 + UD^2) + LL UD (4 + 3 UD^2)))"),
    ("MM12\'", "-((1)/((LL + UD)^2))((1 + 3 I11_p + 2 (I11_p)^2) LL^2 + 2 (I11_p + (I11_p)^2 - 2 I11_p I11_b - I11_b (2 + I11_b)) LL UD + (1 + 3 I11_p + 2 (I11_p)^2) UD^2)"),
    ("MM12_b", "((1)/((LL + UD)^2))((1 + I11_b + 2 (I11_b)^2) LL^2 - 2 ((I11_p)^2 - (-1 + I11_b) I11_b + 2 I11_p (1 + I11_b)) LL UD + (1 + I11_b + 2 (I11_b)^2) UD^2)"),
    ("MM13\'", "-((1)/((LL + UD)^2))((1 + I11_p + 2 (I11_p)^2) LL^2 - 2 (I11_p - (I11_p)^2 + 2 I11_p I11_b + I11_b (2 + I11_b)) LL UD + (1 + I11_p + 2 (I11_p)^2) UD^2)"),
    ("MM13_b", "((1)/((LL + UD)^2))((1 + 3 I11_b + 2 (I11_b)^2) LL^2 - 2 ((I11_p)^2 + 2 I11_p (1 + I11_b) - I11_b (1 + I11_b)) LL UD + (1 + 3 I11_b + 2 (I11_b)^2) UD^2)"),
];

/// Surface tables: `q2^0` slices in terms of `B1′` and `L`.
pub const SURFACE_TABLE: [(&str, &str); 20] = [
    ("A1'", "-((1)/((35 + 36 L + 54 L^2) (1 + B1_p)^2))(27 - 27 L^3 + 70 B1_p + 35 B1_p^2 + 36 L B1_p (2 + B1_p) + 54 L^2 B1_p (2 + B1_p))"),
    ("A2\'", "((1)/(3 (35 + 36 L + 54 L^2) (1 + B1_p)^2))(54 (-1 + L^3) + 2 (-46 + 36 L + 54 L^2 + 81 L^3) B1_p + (-46 + 36 L + 54 L^2 + 81 L^3) B1_p^2)"),
    ("B2\'", "-((1)/(3 (35 + 36 L + 54 L^2) (1 + B1_p)^2))(108 + 302 B1_p + 256 B1_p^2 + 70 B1_p^3 + 36 L B1_p (4 + 5 B1_p + 2 B1_p^2) + 54 L^2 B1_p (4 + 5 B1_p + 2 B1_p^2) - 27 L^3 (4 + 6 B1_p + 3 B1_p^2))"),
    ("B3\'", "-((1)/((9 (35 + 36 L + 54 L^2) (1 + B1_p)^2)))((36 L B1_p^2 (6 + 8 B1_p + 3 B1_p^2) + 54 L^2 B1_p^2 (6 + 8 B1_p + 3 B1_p^2) - 27 L^3 (8 + 36 B1_p + 54 B1_p^2 + 36 B1_p^3 + 9 B1_p^4) + 4 (54 + 243 B1_p + 417 B1_p^2 + 313 B1_p^3 + 87 B1_p^4)))"),
    ("C1\'", "0"),
    ("C2\'", "-((1)/((35 + 36 L + 54 L^2) (1 + B1_p)^2))(27 - 27 L^3 + 70 B1_p + 35 B1_p^2 + 36 L B1_p (2 + B1_p) + 54 L^2 B1_p (2 + B1_p))"),
    ("C3\'", "((1)/(3 (35 + 36 L + 54 L^2) (1 + B1_p)^2))(36 L B1_p (2 + B1_p) + 54 L^2 B1_p (2 + B1_p) + 27 L^3 (2 + 6 B1_p + 3 B1_p^2) - 2 (27 + 46 B1_p + 23 B1_p^2))"),
    ("E1\'", "B1_p"),
    ("E2\'", "((2 B1_p)/(3))"),
    ("E3\'", "((1)/(9 (35 + 36 L + 54 L^2) (1 + B1_p)^2))(108 (-1 + L^3) + 324 (-1 + L^3) B1_p - 6 (62 + 36 L + 54 L^2 - 27 L^3) B1_p^2 - 4 (35 + 36 L + 54 L^2) B1_p^3)"),
    ("E4\'", "-((1)/(27 (35 + 36 L + 54 L^2) (1 + B1_p)^2))(72 L B1_p^3 (4 + 3 B1_p) + 108 L^2 B1_p^3 (4 + 3 B1_p) - 54 L^3 (2 + 6 B1_p + 3 B1_p^2)^2 + 8 (27 + 162 B1_p + 324 B1_p^2 + 278 B1_p^3 + 87 B1_p^4))"),
    ("F1\'", "0"),
    ("F2\'", "B1_p"),
    ("F3\'", "-((1)/(3 (35 + 36 L + 54 L^2) (1 + B1_p)^2))(108 + 302 B1_p + 256 B1_p^2 + 70 B1_p^3 + 36 L B1_p (4 + 5 B1_p + 2 B1_p^2) + 54 L^2 B1_p (4 + 5 B1_p + 2 B1_p^2) - 27 L^3 (4 + 6 B1_p + 3 B1_p^2))"),
    ("F4\'", "-((1)/(9 (35 + 36 L + 54 L^2) (1 + B1_p)^2))((36 L B1_p^2 (6 + 8 B1_p + 3 B1_p^2) + 54 L^2 B1_p^2 (6 + 8 B1_p + 3 B1_p^2) - 27 L^3 (8 + 36 B1_p + 54 B1_p^2 + 36 B1_p^3 + 9 B1_p^4) + 4 (54 + 243 B1_p + 417 B1_p^2 + 313 B1_p^3 + 87 B1_p^4)))"),
    ("G1\'", "0"),
    ("G2\'", "B1_p"),
    ("G3\'", "((2 B1_p)/(3))"),
    ("G4\'", "((1)/(9 (35 + 36 L + 54 L^2) (1 + B1_p)^2))(108 (-1 + L^3) + 324 (-1 + L^3) B1_p - 6 (62 + 36 L + 54 L^2 - 27 L^3) B1_p^2 - 4 (35 + 36 L + 54 L^2) B1_p^3)"),
    ("G5\'", "-((1)/(27 (35 + 36 L + 54 L^2) (1 + B1_p)^2))(72 L B1_p^3 (4 + 3 B1_p) + 108 L^2 B1_p^3 (4 + 3 B1_p) - 54 L^3 (2 + 6 B1_p + 3 B1_p^2)^2 + 8 (27 + 162 B1_p + 324 B1_p^2 + 278 B1_p^3 + 87 B1_p^4))"),
];

/// Threefold tables: `q2^0` slices in terms of `B1′` and `L`.
pub const THREEFOLD_TABLE: [(&str, &str); 25] = [
    ("A1'", "((1)/((1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-1 + L^3 - 2 B1_p (2 + 3 L + 3 L^2) - B1_p^2 (2 + 3 L + 3 L^2))"),
    ("A2\'", "((1)/(2 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-2 + 2 L^3 + B1_p^2 (-1 + 3 L + 3 L^2 + 3 L^3) + B1_p (-2 + 6 L + 6 L^2 + 6 L^3))"),
    ("B2\'", "((1)/(2 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-4 + 4 L^3 - 2 B1_p^3 (2 + 3 L + 3 L^2)+ B1_p^2 (-13 - 15 L - 15 L^2 + 3 L^3) + 2 B1_p (-7 - 6 L - 6 L^2 + 3 L^3))"),
    ("B3\'", "((1)/(4 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-8 + 8 L^3 + 36 B1_p (-1 + L^3) + 3 B1_p^4 (-5 - 3 L - 3 L^2 + 3 L^3) + 4 B1_p^3 (-13 - 6 L - 6 L^2 + 9 L^3) + 6 B1_p^2 (-11 - 3 L - 3 L^2 + 9 L^3))"),
    ("C1\'", "0"),
    ("C2\'", "((1)/((1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-1 + L^3 - B1_p^2 (2 + 3 L + 3 L^2) - B1_p (4 + 6 L + 6 L^2))"),
    ("C3\'", "((1)/(2 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-2 + 2 L^3 + B1_p^2 (-1 + 3 L + 3 L^2 + 3 L^3) + B1_p (-2 + 6 L + 6 L^2 + 6 L^3))"),
    ("E1\'", "((1)/(4 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-4 + 4 L^3 + 36 B1_p^3 (-1 + L^3) + 3 B1_p^4 (-5 - 3 L - 3 L^2 + 3 L^3) + 4 B1_p (-4 + 3 L + 3 L^2 + 6 L^3) + 8 B1_p^2 (-4 + 3 L + 3 L^2 + 6 L^3))"),
    ("E2\'", "B1_p"),
    ("E3\'", "((1)/(2 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-2 + 2 L^3 - 2 B1_p^3 (2 + 3 L + 3 L^2) + 6 B1_p (-1 + L^3) + 3 B1_p^2 (-3 - 3 L - 3 L^2 + L^3))"),
    ("F1\'", "((1)/(4 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-8 + 8 L^3 + 36 B1_p (-1 + L^3) + 3 B1_p^4 (-5 - 3 L - 3 L^2 + 3 L^3) + 4 B1_p^3 (-13 - 6 L - 6 L^2 + 9 L^3) + 6 B1_p^2 (-11 - 3 L - 3 L^2 + 9 L^3))"),
    ("F2\'", "B1_p"),
    ("F3\'", "((1)/(2 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-4 + 4 L^3 - 2 B1_p^3 (2 + 3 L + 3 L^2) + B1_p^2 (-13 - 15 L - 15 L^2 + 3 L^3) + 2 B1_p (-7 - 6 L - 6 L^2 + 3 L^3))"),
    ("G1\'", "((1)/(2 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-2 + 2 L^3 + B1_p^2 (-1 + 3 L + 3 L^2 + 3 L^3) + B1_p (-2 + 6 L + 6 L^2 + 6 L^3))"),
    ("G2\'", "0"),
    ("G3\'", "((1)/((1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-1 + L^3 - B1_p^2 (2 + 3 L + 3 L^2) - B1_p (4 + 6 L + 6 L^2))"),
    ("H1\'", "((1)/(2 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-2 + 2 L^3 - 2 B1_p^3 (2 + 3 L + 3 L^2) + 6 B1_p (-1 + L^3) + 3 B1_p^2 (-3 - 3 L - 3 L^2 + L^3))"),
    ("H2\'", "((1)/(4 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-4 + 4 L^3 + 36 B1_p^3 (-1 + L^3) + 3 B1_p^4 (-5 - 3 L - 3 L^2 + 3 L^3) + 4 B1_p (-4 + 3 L + 3 L^2 + 6 L^3) + 8 B1_p^2 (-4 + 3 L + 3 L^2 + 6 L^3))"),
    ("H3\'", "B1_p"),
    ("I1\'", "((1)/(2 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-4 + 4 L^3 - 2 B1_p^3 (2 + 3 L + 3 L^2) + B1_p^2 (-13 - 15 L - 15 L^2 + 3 L^3) + 2 B1_p (-7 - 6 L - 6 L^2 + 3 L^3))"),
    ("I2\'", "((1)/(4 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-8 + 8 L^3 + 36 B1_p (-1 + L^3) + 3 B1_p^4 (-5 - 3 L - 3 L^2 + 3 L^3) + 4 B1_p^3 (-13 - 6 L - 6 L^2 + 9 L^3) + 6 B1_p^2 (-11 - 3 L - 3 L^2 + 9 L^3))"),
    ("I3\'", "B1_p"),
    ("J1\'", "B1_p"),
    ("J2\'", "((1)/(2 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-2 + 2 L^3 - 2 B1_p^3 (2 + 3 L + 3 L^2) + 6 B1_p (-1 + L^3) + 3 B1_p^2 (-3 - 3 L - 3 L^2 + L^3))"),
    ("J3\'", "((1)/(4 (1 + B1_p)^2 (2 + 3 L + 3 L^2)))(-4 + 4 L^3 + 36 B1_p^3 (-1 + L^3) + 3 B1_p^4 (-5 - 3 L - 3 L^2 + 3 L^3) + 4 B1_p (-4 + 3 L + 3 L^2 + 6 L^3) + 8 B1_p^2 (-4 + 3 L + 3 L^2 + 6 L^3))"),
];

/// K3 tables: `q2^0` slices in terms of `A1′`, `B2′`, `E1′`.
pub const K3_TABLE: [(&str, &str); 25] = [
    ("A2\'", "((1)/(4)) (7 A1_p + 4 A1_p^2 - 2 B2_p + 8 E1_p + 16 A1_p E1_p + 8 A1_p^2 E1_p + 4 E1_p^2 + 8 A1_p E1_p^2 + 4 A1_p^2 E1_p^2)"),
    ("B1\'", "A1_p"),
    ("B3\'", "((1)/(32 (1 + A1_p)))(16 A1_p^4 (1 + E1_p)^4 + 8 A1_p^3 (1 + E1_p)^2 (9 + 16 E1_p + 8 E1_p^2) + A1_p^2 (105 + 400 E1_p + 584 E1_p^2 + 384 E1_p^3 + 96 E1_p^4 + 16 B2_p (1 + E1_p)^2) + 4 A1_p (13 + 60 E1_p + 94 E1_p^2 + 64 E1_p^3 + 16 E1_p^4 + B2_p (5 + 16 E1_p + 8 E1_p^2)) + 4 (-3 B2_p^2 + B2_p (-2 + 8 E1_p + 4 E1_p^2) + 2 E1_p (6 + 11 E1_p + 8 E1_p^2 + 2 E1_p^3)))"),
    ("C1\'", "0"),
    ("C2\'", "A1_p"),
    ("C3\'", "((1)/(4))(7 A1_p + 4 A1_p^2 - 2 B2_p + 8 E1_p + 16 A1_p E1_p + 8 A1_p^2 E1_p + 4 E1_p^2 + 8 A1_p E1_p^2 + 4 A1_p^2 E1_p^2)"),
    ("E2\'", "((1)/(4))(9 A1_p + 4 A1_p^2 - 2 B2_p + 6 E1_p + 16 A1_p E1_p + 8 A1_p^2 E1_p + 4 E1_p^2 + 8 A1_p E1_p^2 + 4 A1_p^2 E1_p^2)"),
    ("E3\'", "((1)/(32 (1 + A1_p)))(16 A1_p^4 (1 + E1_p)^4 + 8 A1_p^3 (1 + E1_p)^2 (7 + 16 E1_p + 8 E1_p^2) + A1_p^2 (53 + 304 E1_p + 536 E1_p^2 + 384 E1_p^3 + 96 E1_p^4 + 16 B2_p (1 + E1_p)^2) + 4 A1_p (4 + 38 E1_p + 82 E1_p^2 + 64 E1_p^3 + 16 E1_p^4 + B2_p (11 + 16 E1_p + 8 E1_p^2)) + 4 (-3 B2_p^2 + 4 B2_p (1 + E1_p)^2 + 2 E1_p (3 + 9 E1_p + 8 E1_p^2 + 2 E1_p^3)))"),
    ("E4\'", "((1)/(64 (1 + A1_p)^2))(8 B2_p^3 + 384 A1_p^5 (1 + E1_p)^6 + 64 A1_p^6 (1 + E1_p)^6 - 32 B2_p E1_p (1 + E1_p)^2 (2 + E1_p) - 4 B2_p^2 (1 + 8 E1_p + 4 E1_p^2) + 8 E1_p (5 + 43 E1_p + 104 E1_p^2 + 106 E1_p^3 + 48 E1_p^4 + 8 E1_p^5) + 4 A1_p^4 (1 + E1_p)^2 (213 + 904 E1_p + 1412 E1_p^2 + 960 E1_p^3 + 240 E1_p^4 - 8 B2_p (1 + E1_p)^2) - 2 A1_p^3 (-425 - 2960 E1_p - 8264 E1_p^2 - 11904 E1_p^3 - 9376 E1_p^4 - 3840 E1_p^5 - 640 E1_p^6 + 64 B2_p (1 + E1_p)^4) + A1_p^2 (359 + 3216 E1_p + 10444 E1_p^2 + 16512 E1_p^3 + 13728 E1_p^4 + 5760 E1_p^5 + 960 E1_p^6 - 16 B2_p^2 (1 + E1_p)^2 - 2 B2_p (83 + 352 E1_p + 560 E1_p^2 + 384 E1_p^3 + 96 E1_p^4)) - 4 A1_p (8 B2_p^2 (1 + E1_p)^2 + B2_p (19 + 96 E1_p + 176 E1_p^2 + 128 E1_p^3 + 32 E1_p^4) - 2 (5 + 92 E1_p + 399 E1_p^2 + 736 E1_p^3 + 664 E1_p^4 + 288 E1_p^5 + 48 E1_p^6)))"),
    ("F1\'", "0"),
    ("F2\'", "A1_p"),
    ("F3\'", "B2_p"),
    ("F4\'", "((1)/(32 (1 + A1_p)))(16 A1_p^4 (1 + E1_p)^4 + 8 A1_p^3 (1 + E1_p)^2 (9 + 16 E1_p + 8 E1_p^2) + A1_p^2 (105 + 400 E1_p + 584 E1_p^2 + 384 E1_p^3 + 96 E1_p^4 + 16 B2_p (1 + E1_p)^2) + 4 A1_p (13 + 60 E1_p + 94 E1_p^2 + 64 E1_p^3 + 16 E1_p^4 + B2_p (5 + 16 E1_p + 8 E1_p^2)) + 4 (-3 B2_p^2 + B2_p (-2 + 8 E1_p + 4 E1_p^2) + 2 E1_p (6 + 11 E1_p + 8 E1_p^2 + 2 E1_p^3)))"),
    ("G1\'", "((1)/(128 (1 + A1_p)^2)) (64 A1_p^6 (1 + E1_p)^6 + 16 A1_p^5 (1 + E1_p)^4 (23 + 48 E1_p + 24 E1_p^2) + A1_p^3 (733 + 5376 E1_p + 15616 E1_p^2 + 23168 E1_p^3 + 18592 E1_p^4 + 7680 E1_p^5 + 1280 E1_p^6 - 16 B2_p (1 + E1_p)^2 (9 + 16 E1_p + 8 E1_p^2)) - 4 A1_p^4 (8 B2_p (1 + E1_p)^4 - 3 (1 + E1_p)^2 (65 + 288 E1_p + 464 E1_p^2 + 320 E1_p^3 + 80 E1_p^4)) - 2 A1_p^2 (-137 - 1444 E1_p - 4790 E1_p^2 - 7936 E1_p^3 - 6784 E1_p^4 - 2880 E1_p^5 - 480 E1_p^6 + 8 B2_p^2 (1 + E1_p)^2 + B2_p (105 + 400 E1_p + 584 E1_p^2 + 384 E1_p^3 + 96 E1_p^4)) + 8 (B2_p^3 + B2_p^2 (1 - 4 E1_p - 2 E1_p^2) - 2 B2_p E1_p (6 + 11 E1_p + 8 E1_p^2 + 2 E1_p^3) + 2 E1_p (9 + 17 E1_p + 48 E1_p^2 + 52 E1_p^3 + 24 E1_p^4 + 4 E1_p^5)) - 4 A1_p (B2_p^2 (5 + 16 E1_p + 8 E1_p^2) + 2 B2_p (13 + 60 E1_p + 94 E1_p^2 + 64 E1_p^3 + 16 E1_p^4) - 2 (2 + 102 E1_p + 349 E1_p^2 + 696 E1_p^3 + 654 E1_p^4 + 288 E1_p^5 + 48 E1_p^6)))"),
    ("G2\'", "((E1_p)/(2))"),
    ("G3\'", "((1)/(8)) (-2 B2_p + 4 A1_p^2 (1 + E1_p)^2 + 2 E1_p (3 + 2 E1_p) + A1_p (7 + 16 E1_p + 8 E1_p^2))"),
    ("G4\'", "((1)/(64 (1 + A1_p)))(16 A1_p^4 (1 + E1_p)^4 + 8 A1_p^3 (1 + E1_p)^2 (7 + 16 E1_p + 8 E1_p^2) + A1_p^2 (61 + 304 E1_p + 536 E1_p^2 + 384 E1_p^3 + 96 E1_p^4 + 16 B2_p (1 + E1_p)^2) + 4 A1_p (6 + 38 E1_p + 82 E1_p^2 + 64 E1_p^3 + 16 E1_p^4 + B2_p (7 + 16 E1_p + 8 E1_p^2)) + 4 (-3 B2_p^2 + 4 B2_p E1_p (2 + E1_p) + 2 E1_p (3 + 9 E1_p + 8 E1_p^2 + 2 E1_p^3)))"),
    ("H1\'", "((1)/(64 (1 + A1_p)^2)) (8 B2_p^3 + 384 A1_p^5 (1 + E1_p)^6 + 64 A1_p^6 (1 + E1_p)^6 - 32 B2_p E1_p (1 + E1_p)^2 (2 + E1_p) - 4 B2_p^2 (1 + 8 E1_p + 4 E1_p^2) + 8 E1_p (5 + 43 E1_p + 104 E1_p^2 + 106 E1_p^3 + 48 E1_p^4 + 8 E1_p^5) + 4 A1_p^4 (1 + E1_p)^2 (213 + 904 E1_p + 1412 E1_p^2 + 960 E1_p^3 + 240 E1_p^4 - 8 B2_p (1 + E1_p)^2) - 2 A1_p^3 (-425 - 2960 E1_p - 8264 E1_p^2 - 11904 E1_p^3 - 9376 E1_p^4 - 3840 E1_p^5 - 640 E1_p^6 + 64 B2_p (1 + E1_p)^4) + A1_p^2 (359 + 3216 E1_p + 10444 E1_p^2 + 16512 E1_p^3 + 13728 E1_p^4 + 5760 E1_p^5 + 960 E1_p^6 - 16 B2_p^2 (1 + E1_p)^2 - 2 B2_p (83 + 352 E1_p + 560 E1_p^2 + 384 E1_p^3 + 96 E1_p^4)) - 4 A1_p (8 B2_p^2 (1 + E1_p)^2 + B2_p (19 + 96 E1_p + 176 E1_p^2 + 128 E1_p^3 + 32 E1_p^4) - 2 (5 + 92 E1_p + 399 E1_p^2 + 736 E1_p^3 + 664 E1_p^4 + 288 E1_p^5 + 48 E1_p^6)))"),
    ("H2\'", "E1_p"),
    ("H3\'", "((1)/(4))(9 A1_p + 4 A1_p^2 - 2 B2_p + 6 E1_p + 16 A1_p E1_p + 8 A1_p^2 E1_p + 4 E1_p^2 + 8 A1_p E1_p^2 + 4 A1_p^2 E1_p^2)"),
    ("H4\'", "((1)/(32 (1 + A1_p)))(16 A1_p^4 (1 + E1_p)^4 + 8 A1_p^3 (1 + E1_p)^2 (7 + 16 E1_p + 8 E1_p^2) + A1_p^2 (53 + 304 E1_p + 536 E1_p^2 + 384 E1_p^3 + 96 E1_p^4 + 16 B2_p (1 + E1_p)^2) + 4 A1_p (4 + 38 E1_p + 82 E1_p^2 + 64 E1_p^3 + 16 E1_p^4 + B2_p (11 + 16 E1_p + 8 E1_p^2)) + 4 (-3 B2_p^2 + 4 B2_p (1 + E1_p)^2 + 2 E1_p (3 + 9 E1_p + 8 E1_p^2 + 2 E1_p^3)))"),
    ("I1\'", "((1)/(64 (1 + A1_p)))(16 A1_p^4 (1 + E1_p)^4 + 8 A1_p^3 (1 + E1_p)^2 (7 + 16 E1_p + 8 E1_p^2) + A1_p^2 (61 + 304 E1_p + 536 E1_p^2 + 384 E1_p^3 + 96 E1_p^4 + 16 B2_p (1 + E1_p)^2) + 4 A1_p (6 + 38 E1_p + 82 E1_p^2 + 64 E1_p^3 + 16 E1_p^4 + B2_p (7 + 16 E1_p + 8 E1_p^2)) + 4 (-3 B2_p^2 + 4 B2_p E1_p (2 + E1_p) + 2 E1_p (3 + 9 E1_p + 8 E1_p^2 + 2 E1_p^3)))"),
    ("I2\'", "((1)/(128 (1 + A1_p)^2))(64 A1_p^6 (1 + E1_p)^6 + 16 A1_p^5 (1 + E1_p)^4 (23 + 48 E1_p + 24 E1_p^2) + A1_p^3 (733 + 5376 E1_p + 15616 E1_p^2 + 23168 E1_p^3 + 18592 E1_p^4 + 7680 E1_p^5 + 1280 E1_p^6 - 16 B2_p (1 + E1_p)^2 (9 + 16 E1_p + 8 E1_p^2)) - 4 A1_p^4 (8 B2_p (1 + E1_p)^4 - 3 (1 + E1_p)^2 (65 + 288 E1_p + 464 E1_p^2 + 320 E1_p^3 + 80 E1_p^4)) - 2 A1_p^2 (-137 - 1444 E1_p - 4790 E1_p^2 - 7936 E1_p^3 - 6784 E1_p^4 - 2880 E1_p^5 - 480 E1_p^6 + 8 B2_p^2 (1 + E1_p)^2 + B2_p (105 + 400 E1_p + 584 E1_p^2 + 384 E1_p^3 + 96 E1_p^4)) + 8 (B2_p^3 + B2_p^2 (1 - 4 E1_p - 2 E1_p^2) - 2 B2_p E1_p (6 + 11 E1_p + 8 E1_p^2 + 2 E1_p^3) + 2 E1_p (9 + 17 E1_p + 48 E1_p^2 + 52 E1_p^3 + 24 E1_p^4 + 4 E1_p^5)) - 4 A1_p (B2_p^2 (5 + 16 E1_p + 8 E1_p^2) + 2 B2_p (13 + 60 E1_p + 94 E1_p^2 + 64 E1_p^3 + 16 E1_p^4) - 2 (2 + 102 E1_p + 349 E1_p^2 + 696 E1_p^3 + 654 E1_p^4 + 288 E1_p^5 + 48 E1_p^6)))"),
    ("I3\'", "((E1_p)/(2))"),
    ("I4\'", "((1)/(8))(-2 B2_p + 4 A1_p^2 (1 + E1_p)^2 + 2 E1_p (3 + 2 E1_p) + A1_p (7 + 16 E1_p + 8 E1_p^2))"),
];

/// Local relation among `LL`, `UD` and derivatives of `I11`; evaluates to zero.
pub const RELATION_RE: &str = "(1 + I11_p) LL (LL - UD) UD (LL + UD)^2 (1 - 4 I11_bb LL UD + UD^2 + I11_p (1 + UD^2) + 4 I11_pb (1 + UD^2)) - (I11_b)^2 (UD^3 + UD^5 + LL^5 (1 + UD^2) - LL^3 (1 + UD^2)^2 + LL^4 (UD + UD^3) + LL (UD^2 + UD^4) - LL^2 UD (-3 + 6 UD^2 + UD^4)) + I11_b (4 I11_bb LL^6 UD - 4 (I11_pb + I11_bb) LL^4 UD (1 + UD^2) - (1 + I11_p + 4 I11_pb) UD^3 (1 + UD^2) + LL^3 (1 + UD^2) (1 + I11_p + 2 UD^2 + 2 I11_p UD^2 - 4 I11_bb UD^2 + 4 I11_pb (1 + UD^2)) - LL^5 (1 + UD^2 - 4 I11_bb UD^2 + I11_p (1 + UD^2) + 4 I11_pb (1 + UD^2)) - LL UD^2 (1 + 2 UD^2 - 4 I11_bb UD^2 + UD^4 + 4 I11_pb (1 + UD^2) + I11_p (1 + UD^2)^2) + LL^2 UD (1 + 4 I11_bb + UD^2 + I11_p (1 + UD^2) + 4 I11_pb (1 + UD^2)^2))";

/// K3 fibration quadratic relation; `sg` is `(-1)^j`.
pub const K3_QUADRATIC: &str =
    "2 E1_p + E1_p^2 + 2 A1_p (1 + E1_p)^2 + A1_p^2 (1 + E1_p)^2 - (16 (-1 + L^4))/(16 + 1 + sg 8 L + 24 L^2 + sg 32 L^3)";
