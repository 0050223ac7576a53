//! Built-in catalog entries, stored as catalog text so that coordinates stay
//! exact algebraic expressions.

use crate::catalog::{load_str, CoxeterSimplex};
use crate::error::{Error, Result};

pub(crate) const SOURCES: [(&str, &str); 12] = [
    (
        "U5",
        "\
witt U5
# coxeter [3,3,3,4,3]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 0
vertex 1 1/2 0 0 0 0
vertex 1 1/2 sqrt(3)/6 0 0 0
vertex 1 1/2 sqrt(3)/6 sqrt(6)/12 0 0
vertex 1 1/2 sqrt(3)/6 sqrt(6)/12 sqrt(2)/4 0
form 0 0 0 0 0 1
form 1 -2 0 0 0 -1
form 0 sqrt(3)/3 -1 0 0 0
form 0 0 sqrt(2)/2 -1 0 0
form 0 0 0 sqrt(3) -1 0
form 0 0 0 0 1 0
diagram 0-1:3 1-2:3 2-3:3 3-4:4 4-5:3
volume zeta3 7/46080
",
    ),
    (
        "S5",
        "\
witt S5
# coxeter [4,3,3^{2,1}]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 0
vertex 1 0 0 0 1/sqrt(2) 0
vertex 1 0 0 sqrt(6)/8 3*sqrt(2)/8 0
vertex 1 0 sqrt(3)/6 sqrt(6)/12 sqrt(2)/4 0
vertex 1 1/2 sqrt(3)/6 sqrt(6)/12 sqrt(2)/4 0
form 0 0 0 0 0 1
form 1 0 -2/sqrt(3) -sqrt(6)/3 -sqrt(2) -1
form 0 0 0 -sqrt(3) 1 0
form 0 0 -1/sqrt(2) 1 0 0
form 0 -sqrt(3)/3 1 0 0 0
form 0 1 0 0 0 0
diagram 0-1:3 1-4:3 2-3:4 3-4:3 4-5:3
volume zeta3 7/15360
",
    ),
    (
        "Q5",
        "\
witt Q5
# coxeter [3^{2,1,1,1}]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 0
vertex 1 0 0 0 -1/2 0
vertex 1 0 0 1/2 -1/2 0
vertex 1 0 -1/2 0 -1/2 0
vertex 1 -1/2 0 0 -1/2 0
form 0 0 0 0 0 1
form 1 0 0 0 2 -1
form 0 1 1 -1 -1 0
form 0 0 0 1 0 0
form 0 0 -1 0 0 0
form 0 -1 0 0 0 0
diagram 0-1:3 1-2:3 2-3:3 2-4:3 2-5:3
volume zeta3 7/7680
",
    ),
    (
        "P5",
        "\
witt P5
# coxeter [3,3^{[5]}]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 0
vertex 1 0 0 0 sqrt(2/5) 0
vertex 1 0 0 sqrt(6)/4 3/(2*sqrt(10)) 0
vertex 1 0 1/sqrt(3) 1/sqrt(6) 1/sqrt(10) 0
vertex 1 1/2 1/(2*sqrt(3)) 1/(2*sqrt(6)) 1/(2*sqrt(10)) 0
form 0 0 0 0 0 1
form 1 -1 -1/sqrt(3) -1/sqrt(6) -sqrt(5/2) -1
form 0 0 0 -1 sqrt(5/3) 0
form 0 0 -1/sqrt(2) 1 0 0
form 0 -1/sqrt(3) 1 0 0 0
form 0 1 0 0 0 0
diagram 0-1:3 1-2:3 1-5:3 2-3:3 3-4:3 4-5:3
volume L 3 5 5*sqrt(5)/4608
",
    ),
    (
        "X5",
        "\
witt X5
# coxeter [3,3,4,3,3]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 0
vertex 1 1/2 0 0 0 0
vertex 1 1/2 sqrt(3)/6 0 0 0
vertex 1 1/2 sqrt(3)/6 sqrt(6)/6 0 0
vertex 1 1/2 sqrt(3)/6 sqrt(6)/6 1/sqrt(2) 0 ideal
form 0 0 0 0 0 1/24
form 1/24 -1/12 0 0 0 -1/24
form 0 1/12 -1/(4*sqrt(3)) 0 0 0
form 0 0 1/(4*sqrt(3)) -1/(4*sqrt(6)) 0 0
form 0 0 0 1/(4*sqrt(6)) -1/(12*sqrt(2)) 0
form 0 0 0 0 1/(12*sqrt(2)) 0
diagram 0-1:3 1-2:3 2-3:4 3-4:3 4-5:3
volume zeta3 7/9216
",
    ),
    (
        "R5",
        "\
witt R5
# coxeter [3,4,3,3,4]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 0
vertex 1 sqrt(2)/2 0 0 0 0
vertex 1 sqrt(2)/2 sqrt(6)/6 0 0 0
vertex 1 sqrt(2)/2 sqrt(6)/6 sqrt(3)/6 0 0
vertex 1 sqrt(2)/2 sqrt(6)/6 sqrt(3)/6 1/2 0 ideal
form 0 0 0 0 0 1
form 1 -sqrt(2) 0 0 0 -1
form 0 1/sqrt(3) -1 0 0 0
form 0 0 1/sqrt(2) -1 0 0
form 0 0 0 sqrt(3) -1 0
form 0 0 0 0 1 0
diagram 0-1:4 1-2:3 2-3:3 3-4:4 4-5:3
volume zeta3 7/4608
",
    ),
    (
        "AU5",
        "\
witt AU5
# coxeter [(3^5,4)]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 -1 ideal
vertex 1 0 0 0 6*sqrt(2+sqrt(2))/13 5/13
vertex 1 0 0 1/8*sqrt(2+sqrt(2))*sqrt(3) 3*sqrt(2+sqrt(2))/8 1/2
vertex 1 0 2/35*sqrt(12+6*sqrt(2)) 4/35*sqrt(2+sqrt(2))*sqrt(3) 12*sqrt(2+sqrt(2))/35 19/35
vertex 1 3/22*sqrt(2)*sqrt(2+sqrt(2)) 1/22*sqrt(6)*sqrt(2+sqrt(2)) 1/11*sqrt(2+sqrt(2))*sqrt(3) 3*sqrt(2+sqrt(2))/11 7/11
form 1 -3*sqrt(2)/(2*sqrt(2+sqrt(2))) -sqrt(2)*sqrt(3)/(2*sqrt(2+sqrt(2))) -sqrt(3)/sqrt(2+sqrt(2)) -3/sqrt(2+sqrt(2)) 1
form 1 0 0 0 -4/(3*sqrt(2+sqrt(2))) -1
form 0 0 0 -1 1/sqrt(3) 0
form 0 0 -sqrt(2) 1 0 0
form 0 -1/sqrt(3) 1 0 0 0
form 0 1 0 0 0 0
diagram 0-1:3 0-5:3 1-2:3 2-3:3 3-4:4 4-5:3
volume literal 0.0075726186
",
    ),
    (
        "N5",
        "\
witt N5
# coxeter [4,3,_3^{3,4}]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 0
vertex 1 0 0 0 1 0 ideal
vertex 1 0 0 -1/2 1/2 0
vertex 1 0 1/(2*sqrt(2)) -1/4 3/4 0
vertex 1 sqrt(2)/2 0 -1/2 1/2 0 ideal
form 0 0 0 0 0 1
form 1 0 0 1 -1 -1
form 0 0 -sqrt(2) 1 1 0
form 0 -1 -1 -sqrt(2) 0 0
form 0 0 1 0 0 0
form 0 1 0 0 0 0
diagram 0-1:4 1-3:3 2-4:4 3-4:3 3-5:3
volume zeta3 7/1536
",
    ),
    (
        "O5",
        "\
witt O5
# coxeter [3,4,3,3^{1,1}]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 -1 ideal
vertex 1 0 1/4 sqrt(2)/4 sqrt(6)/4 1/2
vertex 1 0 0 sqrt(2)/4 sqrt(6)/4 1/2
vertex 1 0 0 0 sqrt(6)/4 1/2
vertex 1 sqrt(3)/4 1/4 sqrt(2)/4 sqrt(6)/4 1/2 ideal
form 1 0 0 0 -sqrt(6) 1
form 1 0 0 0 -sqrt(6)/3 -1
form 0 -sqrt(3)/3 1 0 0 0
form 0 0 -sqrt(2) 1 0 0
form 0 0 0 -1 1/sqrt(3) 0
form 0 1 0 0 0 0
diagram 0-4:3 1-4:3 2-3:4 2-5:3 3-4:3
volume zeta3 7/2304
",
    ),
    (
        "M5",
        "\
witt M5
# coxeter [4,3,3^{1,1,1}]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 0
vertex 1 0 0 0 1 0 ideal
vertex 1 0 0 -1/2 1/2 0
vertex 1 0 sqrt(2)/2 -1/2 1/2 0 ideal
vertex 1 sqrt(2)/2 0 -1/2 1/2 0 ideal
form 0 0 0 0 0 1
form 1 0 0 1 -1 -1
form 0 0 0 1 1 0
form 0 -sqrt(2)/2 -sqrt(2)/2 -1 0 0
form 0 0 1 0 0 0
form 0 1 0 0 0 0
diagram 0-1:4 1-3:3 2-3:3 3-4:3 3-5:3
volume zeta3 7/768
",
    ),
    (
        "L5",
        "\
witt L5
# coxeter [3^{1,1,1,1,1}]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 -1 ideal
vertex 1 0 0 0 1 0 ideal
vertex 1 0 0 -1/2 1/2 0
vertex 1 0 sqrt(2)/2 -1/2 1/2 0 ideal
vertex 1 sqrt(2)/2 0 -1/2 1/2 0 ideal
form 1 0 0 1 -1 1
form 1 0 0 1 -1 -1
form 0 0 0 1 1 0
form 0 -1 -1 -sqrt(2) 0 0
form 0 0 1 0 0 0
form 0 1 0 0 0 0
diagram 0-3:3 1-3:3 2-3:3 3-4:3 3-5:3
volume zeta3 7/384
",
    ),
    (
        "UR5",
        "\
witt UR5
# coxeter [(3^2,4)^{[2]}]
dim 5
vertex 1 0 0 0 0 1 ideal
vertex 1 0 0 0 0 -1 ideal
vertex 1 0 0 0 -12/13 5/13 ideal
vertex 1 0 0 sqrt(3)/4 -3/4 1/2 ideal
vertex 1 0 4*sqrt(6)/35 8*sqrt(3)/35 -24/35 19/35 ideal
vertex 1 3*sqrt(2)/11 sqrt(6)/11 2*sqrt(3)/11 -6/11 7/11 ideal
form 1 -3/(2*sqrt(2)) -1/2*sqrt(3/2) -sqrt(3)/2 3/2 1
form 1 0 0 0 2/3 -1
form 0 0 0 -1 -1/sqrt(3) 0
form 0 0 -sqrt(2) 1 0 0
form 0 -1/sqrt(3) 1 0 0 0
form 0 1 0 0 0 0
diagram 0-1:4 0-5:3 1-2:3 2-3:3 3-4:4 4-5:3
volume zeta3 7/288
",
    ),
];

pub fn builtin_symbols() -> Vec<&'static str> {
    SOURCES.iter().map(|(w, _)| *w).collect()
}

pub fn builtin(witt: &str) -> Result<CoxeterSimplex> {
    let (_, text) = SOURCES
        .iter()
        .find(|(w, _)| *w == witt)
        .ok_or_else(|| Error::NotFound { symbol: witt.to_string(), valid: builtin_symbols().join(", ") })?;
    Ok(load_str(text).expect("builtin catalog text parses"))
}

/// All twelve builtins in catalog order.
pub fn builtins() -> Vec<CoxeterSimplex> {
    SOURCES.iter().map(|(_, text)| load_str(text).expect("builtin catalog text parses")).collect()
}
