//! Tabulated formulas for the 108 triangle partition maps.
//!
//! Each formula is stored as text in a small algebraic syntax (see
//! [`crate::expr`]) and compiled once on first use. Juxtaposition is
//! multiplication, `(-1)^k` is the parity sign of the digit.

pub(crate) struct MapRow {
    pub label: &'static str,
    pub forward: [&'static str; 2],
    pub branch: [&'static str; 2],
    pub weight: &'static str,
}

pub(crate) struct BanachRow {
    pub label: &'static str,
    pub g: &'static str,
    pub summand: &'static str,
}

pub(crate) struct EigenRow {
    pub label: &'static str,
    pub h: &'static str,
}

pub(crate) struct DensityRow {
    pub label: &'static str,
    pub r: &'static str,
}

pub(crate) struct HilbertRow {
    pub label: &'static str,
    pub l: &'static str,
    pub j: &'static str,
    pub h: &'static str,
}

pub(crate) static MAP_ROWS: &[MapRow] = &[
    MapRow {
        label: "e,e,e",
        forward: ["y/x", "-((x+k y-1)/x)"],
        branch: ["1/(k x+y+1)", "x/(k x+y+1)"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "e,e,12",
        forward: ["(4 y)/((-1)^k (4 x-y-2)-2 k y+y+2)", "((4-4 k y)/((-1)^k (4 x-y-2)-2 k y+y+2))-1"],
        branch: ["((-1)^k (-x-2 y+(-1)^k (2 k x+x+2 y+2)+2))/(4 (k x+y+1))", "x/(k x+y+1)"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "e,e,23",
        forward: ["(1/2) (1+(-1)^(k+1))+(((-1)^k y)/x)", "(-(2 k+(-1)^k+3) x+2 (-1+(-1)^k) y+4)/(4 x)"],
        branch: ["(4 (-1)^k)/(2 x+(-1)^k (2 k-2 x+4 y+5)-1)", "-((2 (2 x+(-1)^k-1))/(-2 x+(-1)^(k+1) (2 k-2 x+4 y+5)+1))"],
        weight: "64/(abs(2 x+(-1)^k (2 k-2 x+4 y+5)-1)^3)",
    },
    MapRow {
        label: "e,12,e",
        forward: ["(1-(k+1) y)/x", "-((x+k y-1)/x)"],
        branch: ["1/(-x k+y k+k+y+1)", "(-x+y+1)/(-x k+y k+k+y+1)"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "e,12,12",
        forward: ["-((4 (k y+y-1))/((-1)^k (4 x-y-2)-2 k y+y+2))", "((4-4 k y)/((-1)^k (4 x-y-2)-2 k y+y+2))-1"],
        branch: ["-((x+(-1)^(k+1) (x-3 y+1)+2 k (x-y-1)-3 y-3)/(4 (-x k+y k+k+y+1)))", "(-x+y+1)/(-x k+y k+k+y+1)"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "e,12,23",
        forward: ["-((2 k x+x+(-1)^(k+1) (x-2 y)+2 y-4)/(4 x))", "(-(2 k+(-1)^k+3) x+2 (-1+(-1)^k) y+4)/(4 x)"],
        branch: ["(4 (-1)^k)/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)", "(2 (-2 x+(-1)^k+2 y+1))/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)"],
        weight: "64/(abs(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)^3)",
    },
    MapRow {
        label: "e,13,e",
        forward: ["(2 x+k y-1)/x", "1-(y/x)"],
        branch: ["1/(-y k+k-x+2)", "(y-1)/(x+k (y-1)-2)"],
        weight: "1/((-y k+k-x+2)^3)",
    },
    MapRow {
        label: "e,13,12",
        forward: ["((4 k y-4)/((-1)^k (4 x-y-2)-2 k y+y+2))+2", "1-((4 y)/((-1)^k (4 x-y-2)-2 k y+y+2))"],
        branch: ["((-1)^k (-2 x-y+(-1)^k (2 x+2 k (y-1)+y-5)+1))/(4 (x+k (y-1)-2))", "(y-1)/(x+k (y-1)-2)"],
        weight: "1/(abs(x+k (y-1)-2)^3)",
    },
    MapRow {
        label: "e,13,23",
        forward: ["(2 k x+7 x+(-1)^k (x-2 y)+2 y-4)/(4 x)", "(x+(-1)^k (x-2 y))/(2 x)"],
        branch: ["(4 (-1)^k)/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)", "(2 (-2 y+(-1)^k+1))/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)"],
        weight: "64/(abs(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)^3)",
    },
    MapRow {
        label: "e,23,e",
        forward: ["y/x", "(x+k y+y-1)/x"],
        branch: ["1/(k x+x-y+1)", "x/(k x+x-y+1)"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "e,23,12",
        forward: ["(4 y)/((-1)^k (4 x-y-2)-2 k y+y+2)", "((4 (k y+y-1))/((-1)^k (4 x-y-2)-2 k y+y+2))+1"],
        branch: ["((-1)^k (-3 x+(-1)^k ((2 k+3) x-2 y+2)+2 y+2))/(4 (k x+x-y+1))", "x/(k x+x-y+1)"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "e,23,23",
        forward: ["(1/2) (1+(-1)^(k+1))+(((-1)^k y)/x)", "((2 k+(-1)^(k+1)+5) x+2 ((-1)^k y+y-2))/(4 x)"],
        branch: ["(4 (-1)^k)/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)", "(2 (2 x+(-1)^k-1))/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)"],
        weight: "64/(abs(2 x+(-1)^k (2 k+2 x-4 y+5)-1)^3)",
    },
    MapRow {
        label: "e,123,e",
        forward: ["(2 x+k y-1)/x", "(x+k y+y-1)/x"],
        branch: ["1/(-x k+y k+k-x+2)", "(-x+y+1)/(-x k+y k+k-x+2)"],
        weight: "1/((-x+k (-x+y+1)+2)^3)",
    },
    MapRow {
        label: "e,123,12",
        forward: ["((4 k y-4)/((-1)^k (4 x-y-2)-2 k y+y+2))+2", "((4 (k y+y-1))/((-1)^k (4 x-y-2)-2 k y+y+2))+1"],
        branch: ["((-1)^k (-3 x+(-1)^k (3 x+2 k (x-y-1)-y-5)+y+1))/(4 (x+k (x-y-1)-2))", "(-x+y+1)/(-x k+y k+k-x+2)"],
        weight: "1/(abs(x+k (x-y-1)-2)^3)",
    },
    MapRow {
        label: "e,123,23",
        forward: ["(2 k x+7 x+(-1)^k (x-2 y)+2 y-4)/(4 x)", "((2 k+(-1)^(k+1)+5) x+2 ((-1)^k y+y-2))/(4 x)"],
        branch: ["(4 (-1)^k)/(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)", "-((2 (-2 x+(-1)^k+2 y+1))/(2 x-2 y+(-1)^k (-2 k+2 x+2 y-7)-1))"],
        weight: "64/(abs(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)^3)",
    },
    MapRow {
        label: "e,132,e",
        forward: ["(1-(k+1) y)/x", "1-(y/x)"],
        branch: ["1/(k+x-(k+1) y+1)", "(y-1)/(-x+k (y-1)+y-1)"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "e,132,12",
        forward: ["-((4 (k y+y-1))/((-1)^k (4 x-y-2)-2 k y+y+2))", "1-((4 y)/((-1)^k (4 x-y-2)-2 k y+y+2))"],
        branch: ["((-1)^k (2 x-3 y+(-1)^k (-2 x+2 k (y-1)+3 y-3)-1))/(4 (k+1) y-4 (k+x+1))", "(y-1)/(-x+k (y-1)+y-1)"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "e,132,23",
        forward: ["-((2 k x+x+(-1)^(k+1) (x-2 y)+2 y-4)/(4 x))", "(x+(-1)^k (x-2 y))/(2 x)"],
        branch: ["(4 (-1)^k)/((-1)^k (2 k+4 x-2 y+3)-2 y+1)", "-((2 (-2 y+(-1)^k+1))/((-1)^(k+1) (2 k+4 x-2 y+3)+2 y-1))"],
        weight: "64/(abs((-1)^k (2 k+4 x-2 y+3)-2 y+1)^3)",
    },
    MapRow {
        label: "12,e,e",
        forward: ["(4 y)/((-1)^(k+1) (4 x-3 y-2)-2 k y+y+2)", "((4 k y-4)/((-1)^k (4 x-3 y-2)+2 k y-y-2))-1"],
        branch: ["((-1)^k (x+2 y+(-1)^k (2 k x+3 x+2 y+2)-2))/(4 (k x+y+1))", "x/(k x+y+1)"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "12,e,12",
        forward: ["y/(-x+y+1)", "(-x+k y+y)/(x-y-1)"],
        branch: ["(k x+x+y)/(k x+y+1)", "x/(k x+y+1)"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "12,e,123",
        forward: ["(1/2)-(((-1)^k (x+y-1))/(2 (x-y-1)))", "(-3 x+5 y+2 k (-x+y+1)+(-1)^(k+1) (x+y-1)-1)/(4 (x-y-1))"],
        branch: ["(6 x+(-1)^k (2 k-2 x+4 y+3)-3)/(2 x+(-1)^k (2 k-2 x+4 y+5)-1)", "-((2 (2 x+(-1)^k-1))/(-2 x+(-1)^(k+1) (2 k-2 x+4 y+5)+1))"],
        weight: "64/(abs(2 x+(-1)^k (2 k-2 x+4 y+5)-1)^3)",
    },
    MapRow {
        label: "12,12,e",
        forward: ["(4 (k y+y-1))/((-1)^k (4 x-3 y-2)+2 k y-y-2)", "((4 k y-4)/((-1)^k (4 x-3 y-2)+2 k y-y-2))-1"],
        branch: ["-(((-1)^k (x-3 y+(-1)^k (3 x+2 k (x-y-1)-5 (y+1))+1))/(4 (y+k (-x+y+1)+1)))", "(-x+y+1)/(-x k+y k+k+y+1)"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "12,12,12",
        forward: ["(k y+y-1)/(x-y-1)", "(-x+k y+y)/(x-y-1)"],
        branch: ["(k-(k+1) x+(k+2) y+1)/(y+k (-x+y+1)+1)", "(-x+y+1)/(-x k+y k+k+y+1)"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "12,12,123",
        forward: ["(-x+3 y+2 k (-x+y+1)+(-1)^k (x+y-1)-3)/(4 (x-y-1))", "(-3 x+5 y+2 k (-x+y+1)+(-1)^(k+1) (x+y-1)-1)/(4 (x-y-1))"],
        branch: ["(-6 x+6 y+(-1)^k (2 k+2 x+2 y+1)+3)/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)", "(2 (-2 x+(-1)^k+2 y+1))/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)"],
        weight: "64/(abs(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)^3)",
    },
    MapRow {
        label: "12,13,e",
        forward: ["((4-4 k y)/((-1)^k (4 x-3 y-2)+2 k y-y-2))+2", "1-((4 y)/((-1)^(k+1) (4 x-3 y-2)-2 k y+y+2))"],
        branch: ["((-1)^k (2 x+y+(-1)^k (2 x+2 k (y-1)+3 y-7)-1))/(4 (x+k (y-1)-2))", "(y-1)/(x+k (y-1)-2)"],
        weight: "1/(abs(x+k (y-1)-2)^3)",
    },
    MapRow {
        label: "12,13,12",
        forward: ["(-2 x+(k+2) y+1)/(-x+y+1)", "(x-1)/(x-y-1)"],
        branch: ["(x+k (y-1)+y-2)/(x+k (y-1)-2)", "(y-1)/(x+k (y-1)-2)"],
        weight: "-(1/((x+k (y-1)-2)^3))",
    },
    MapRow {
        label: "12,13,123",
        forward: ["(7 x+2 k (x-y-1)-9 y+(-1)^k (x+y-1)-3)/(4 (x-y-1))", "(1/2) ((((-1)^k (x+y-1))/(x-y-1))+1)"],
        branch: ["(-6 y+(-1)^k (2 k-4 x+2 y+5)+3)/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)", "(2 (-2 y+(-1)^k+1))/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)"],
        weight: "64/(abs(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)^3)",
    },
    MapRow {
        label: "12,23,e",
        forward: ["(4 y)/((-1)^(k+1) (4 x-3 y-2)-2 k y+y+2)", "((4-4 (k+1) y)/((-1)^k (4 x-3 y-2)+2 k y-y-2))+1"],
        branch: ["((-1)^k (3 x+(-1)^k ((2 k+5) x-2 y+2)-2 y-2))/(4 (k x+x-y+1))", "x/(k x+x-y+1)"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "12,23,12",
        forward: ["y/(-x+y+1)", "((k+2) y-x)/(-x+y+1)"],
        branch: ["((k+2) x-y)/(k x+x-y+1)", "x/(k x+x-y+1)"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "12,23,123",
        forward: ["(1/2)-(((-1)^k (x+y-1))/(2 (x-y-1)))", "(5 x+2 k (x-y-1)-7 y+(-1)^(k+1) (x+y-1)-1)/(4 (x-y-1))"],
        branch: ["(6 x+(-1)^k (2 k+2 x-4 y+3)-3)/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)", "(2 (2 x+(-1)^k-1))/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)"],
        weight: "64/(abs(2 x+(-1)^k (2 k+2 x-4 y+5)-1)^3)",
    },
    MapRow {
        label: "12,123,e",
        forward: ["((4-4 k y)/((-1)^k (4 x-3 y-2)+2 k y-y-2))+2", "((4-4 (k+1) y)/((-1)^k (4 x-3 y-2)+2 k y-y-2))+1"],
        branch: ["((-1)^k (3 x+(-1)^k (5 x+2 k (x-y-1)-3 y-7)-y-1))/(4 (x+k (x-y-1)-2))", "(-x+y+1)/(-x k+y k+k-x+2)"],
        weight: "1/(abs(x+k (x-y-1)-2)^3)",
    },
    MapRow {
        label: "12,123,12",
        forward: ["(-2 x+(k+2) y+1)/(-x+y+1)", "((k+2) y-x)/(-x+y+1)"],
        branch: ["((k+2) (x-1)-(k+1) y)/(x+k (x-y-1)-2)", "(-x+y+1)/(-x k+y k+k-x+2)"],
        weight: "1/((-x+k (-x+y+1)+2)^3)",
    },
    MapRow {
        label: "12,123,123",
        forward: ["(7 x+2 k (x-y-1)-9 y+(-1)^k (x+y-1)-3)/(4 (x-y-1))", "(5 x+2 k (x-y-1)-7 y+(-1)^(k+1) (x+y-1)-1)/(4 (x-y-1))"],
        branch: ["(-6 x+(-1)^k (2 k-2 x-2 y+5)+6 y+3)/(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)", "-((2 (-2 x+(-1)^k+2 y+1))/(2 x-2 y+(-1)^k (-2 k+2 x+2 y-7)-1))"],
        weight: "64/(abs(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)^3)",
    },
    MapRow {
        label: "12,132,e",
        forward: ["(4 (k y+y-1))/((-1)^k (4 x-3 y-2)+2 k y-y-2)", "1-((4 y)/((-1)^(k+1) (4 x-3 y-2)-2 k y+y+2))"],
        branch: ["((-1)^k (-2 x+3 y+(-1)^k (-2 x+2 k (y-1)+5 y-5)+1))/(4 (k+1) y-4 (k+x+1))", "(y-1)/(-x+k (y-1)+y-1)"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "12,132,12",
        forward: ["(k y+y-1)/(x-y-1)", "(x-1)/(x-y-1)"],
        branch: ["(k+x-(k+2) y+1)/(k+x-(k+1) y+1)", "(y-1)/(-x+k (y-1)+y-1)"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "12,132,123",
        forward: ["(-x+3 y+2 k (-x+y+1)+(-1)^k (x+y-1)-3)/(4 (x-y-1))", "(1/2) ((((-1)^k (x+y-1))/(x-y-1))+1)"],
        branch: ["((-1)^k (2 k+4 x-2 y+1)-6 y+3)/((-1)^k (2 k+4 x-2 y+3)-2 y+1)", "-((2 (-2 y+(-1)^k+1))/((-1)^(k+1) (2 k+4 x-2 y+3)+2 y-1))"],
        weight: "64/(abs((-1)^k (2 k+4 x-2 y+3)-2 y+1)^3)",
    },
    MapRow {
        label: "13,e,13",
        forward: ["(x-1)/(y-1)", "(-x k+k-y)/(y-1)"],
        branch: ["1-(x/(k x+y+1))", "1-(1/(k x+y+1))"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "13,e,123",
        forward: ["(4-4 x)/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3)", "((4 k (x-1)+4)/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3))-1"],
        branch: ["1-(x/(k x+y+1))", "((-1)^k (x+2 y+(-1)^k (2 k x-x+2 y+2)-2))/(4 (k x+y+1))"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "13,e,132",
        forward: ["(1/2)-(((-1)^k (-2 x+y+1))/(2 (y-1)))", "(-2 x+(-1)^k (2 x-y-1)-2 k (y-1)-3 y+1)/(4 (y-1))"],
        branch: ["(-2 x+(-1)^k (2 k-2 x+4 y+3)+1)/(2 x+(-1)^k (2 k-2 x+4 y+5)-1)", "(2 x+(-1)^k (2 k-2 x+4 y+1)-1)/(2 x+(-1)^k (2 k-2 x+4 y+5)-1)"],
        weight: "64/(abs(2 x+(-1)^k (2 k-2 x+4 y+5)-1)^3)",
    },
    MapRow {
        label: "13,12,13",
        forward: ["(k-(k+1) x)/(y-1)", "(-x k+k-y)/(y-1)"],
        branch: ["(-x k+y k+k+x)/(-x k+y k+k+y+1)", "1-(1/(-x k+y k+k+y+1))"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "13,12,123",
        forward: ["(4 (k (x-1)+x))/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3)", "((4 k (x-1)+4)/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3))-1"],
        branch: ["(-x k+y k+k+x)/(-x k+y k+k+y+1)", "(x+(-1)^(k+1) (x-3 y+1)+y+2 k (-x+y+1)+1)/(4 (y+k (-x+y+1)+1))"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "13,12,132",
        forward: ["(-2 (1+(-1)^k) x-2 k (y-1)+(-1+(-1)^k) (y+1))/(4 (y-1))", "(-2 x+(-1)^k (2 x-y-1)-2 k (y-1)-3 y+1)/(4 (y-1))"],
        branch: ["(2 x-2 y+(-1)^k (2 k+2 x+2 y+1)-1)/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)", "(-2 x+2 y+(-1)^k (2 k+2 x+2 y-1)+1)/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)"],
        weight: "64/(abs(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)^3)",
    },
    MapRow {
        label: "13,13,13",
        forward: ["((k (x-1)+1)/(y-1))+2", "(y-x)/(y-1)"],
        branch: ["(x+k (y-1)-y-1)/(x+k (y-1)-2)", "1+(1/(x+k (y-1)-2))"],
        weight: "-(1/((x+k (y-1)-2)^3))",
    },
    MapRow {
        label: "13,13,123",
        forward: ["1/(((k (x-1)+1)/(-x+(-1)^k (x-4 y+1)+1))+(1/2))", "((4 (x-1))/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3))+1"],
        branch: ["(x+k (y-1)-y-1)/(x+k (y-1)-2)", "((-1)^k (2 x+(-1)^k (2 x+2 k (y-1)-y-3)+y-1))/(4 (x+k (y-1)-2))"],
        weight: "1/(abs(x+k (y-1)-2)^3)",
    },
    MapRow {
        label: "13,13,132",
        forward: ["(-2 (-1+(-1)^k) x+2 k (y-1)+7 y+(-1)^k (y+1)-5)/(4 (y-1))", "(1/2) ((((-1)^k (-2 x+y+1))/(y-1))+1)"],
        branch: ["(2 y+(-1)^k (2 k-4 x+2 y+5)-1)/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)", "(-2 y+(-1)^k (2 k-4 x+2 y+3)+1)/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)"],
        weight: "64/(abs(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)^3)",
    },
    MapRow {
        label: "13,23,13",
        forward: ["(x-1)/(y-1)", "((k+1) (x-1)+y)/(y-1)"],
        branch: ["1-(x/(k x+x-y+1))", "1+(1/(-(k+1) x+y-1))"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "13,23,123",
        forward: ["(4-4 x)/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3)", "((4 k-4 (k+1) x)/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3))+1"],
        branch: ["1-(x/(k x+x-y+1))", "((-1)^k (3 x+(-1)^k (2 k x+x-2 y+2)-2 y-2))/(4 (k x+x-y+1))"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "13,23,132",
        forward: ["(1/2)-(((-1)^k (-2 x+y+1))/(2 (y-1)))", "(2 x+(-1)^k (2 x-y-1)+2 k (y-1)+5 y-3)/(4 (y-1))"],
        branch: ["(-2 x+(-1)^k (2 k+2 x-4 y+3)+1)/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)", "(2 x+(-1)^k (2 k+2 x-4 y+1)-1)/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)"],
        weight: "64/(abs(2 x+(-1)^k (2 k+2 x-4 y+5)-1)^3)",
    },
    MapRow {
        label: "13,123,13",
        forward: ["((k (x-1)+1)/(y-1))+2", "((k+1) (x-1)+y)/(y-1)"],
        branch: ["(k (x-y-1)+y-1)/(x+k (x-y-1)-2)", "1+(1/(x+k (x-y-1)-2))"],
        weight: "1/((-x+k (-x+y+1)+2)^3)",
    },
    MapRow {
        label: "13,123,123",
        forward: ["1/(((k (x-1)+1)/(-x+(-1)^k (x-4 y+1)+1))+(1/2))", "((4 k-4 (k+1) x)/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3))+1"],
        branch: ["(k (x-y-1)+y-1)/(x+k (x-y-1)-2)", "((-1)^k (3 x-y+(-1)^k (x+2 k (x-y-1)+y-3)-1))/(4 (x+k (x-y-1)-2))"],
        weight: "1/(abs(x+k (x-y-1)-2)^3)",
    },
    MapRow {
        label: "13,123,132",
        forward: ["(-2 (-1+(-1)^k) x+2 k (y-1)+7 y+(-1)^k (y+1)-5)/(4 (y-1))", "(2 x+(-1)^k (2 x-y-1)+2 k (y-1)+5 y-3)/(4 (y-1))"],
        branch: ["(2 x+(-1)^k (2 k-2 x-2 y+5)-2 y-1)/(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)", "(-2 x+(-1)^k (2 k-2 x-2 y+3)+2 y+1)/(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)"],
        weight: "64/(abs(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)^3)",
    },
    MapRow {
        label: "13,132,13",
        forward: ["(k-(k+1) x)/(y-1)", "(y-x)/(y-1)"],
        branch: ["(-y k+k+x)/(k+x-(k+1) y+1)", "1+(1/(-x+k (y-1)+y-1))"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "13,132,123",
        forward: ["(4 (k (x-1)+x))/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3)", "((4 (x-1))/(2 k (x-1)-x+(-1)^k (x-4 y+1)+3))+1"],
        branch: ["(-y k+k+x)/(k+x-(k+1) y+1)", "((-1)^k (-2 x+3 y+(-1)^k (-2 x+2 k (y-1)+y-1)+1))/(4 (k+1) y-4 (k+x+1))"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "13,132,132",
        forward: ["(-2 (1+(-1)^k) x-2 k (y-1)+(-1+(-1)^k) (y+1))/(4 (y-1))", "(1/2) ((((-1)^k (-2 x+y+1))/(y-1))+1)"],
        branch: ["((-1)^k (2 k+4 x-2 y+1)+2 y-1)/((-1)^k (2 k+4 x-2 y+3)-2 y+1)", "((-1)^k (2 k+4 x-2 y-1)-2 y+1)/((-1)^k (2 k+4 x-2 y+3)-2 y+1)"],
        weight: "64/(abs((-1)^k (2 k+4 x-2 y+3)-2 y+1)^3)",
    },
    MapRow {
        label: "23,e,e",
        forward: ["(x+(-1)^k (x-2 y))/(2 x)", "(-2 k x-5 x+(-1)^k (x-2 y)+2 y+4)/(4 x)"],
        branch: ["(4 (-1)^k)/(2 x+(-1)^k (2 k-2 x+4 y+5)-1)", "-((2 (-2 x+(-1)^k+1))/(-2 x+(-1)^(k+1) (2 k-2 x+4 y+5)+1))"],
        weight: "64/(abs(2 x+(-1)^k (2 k-2 x+4 y+5)-1)^3)",
    },
    MapRow {
        label: "23,e,23",
        forward: ["1-(y/x)", "(-(k+1) x+k y+1)/x"],
        branch: ["1/(k x+y+1)", "(1-x)/(k x+y+1)"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "23,e,132",
        forward: ["(4 (x-y))/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2)", "((4 k (y-x)+4)/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2))-1"],
        branch: ["((-1)^k (-x-2 y+(-1)^k (2 k x+x+2 y+2)+2))/(4 (k x+y+1))", "((-1)^k (-x-2 y+(-1)^k (2 k x-3 x+2 y+2)+2))/(4 (k x+y+1))"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "23,12,e",
        forward: ["(2 ((-1)^k y+y+2)-(2 k+(-1)^k+3) x)/(4 x)", "(-2 k x-5 x+(-1)^k (x-2 y)+2 y+4)/(4 x)"],
        branch: ["(4 (-1)^k)/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)", "(2 (2 x+(-1)^k-2 y-1))/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)"],
        weight: "64/(abs(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)^3)",
    },
    MapRow {
        label: "23,12,23",
        forward: ["(-(k+1) x+k y+y+1)/x", "(-(k+1) x+k y+1)/x"],
        branch: ["1/(-x k+y k+k+y+1)", "(x-y)/(-x k+y k+k+y+1)"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "23,12,132",
        forward: ["(4 (-(k+1) x+k y+y+1))/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2)", "((4 k (y-x)+4)/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2))-1"],
        branch: ["(-x+(-1)^k (x-3 y+1)+3 y+2 k (-x+y+1)+3)/(4 (y+k (-x+y+1)+1))", "((-1)^k (x-3 y+(-1)^(k+1) (-3 x+2 k (x-y-1)+y+1)+1))/(4 (y+k (-x+y+1)+1))"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "23,13,e",
        forward: ["((2 k+(-1)^(k+1)+9) x+2 (-1+(-1)^k) y-4)/(4 x)", "(1/2) (1+(-1)^(k+1))+(((-1)^k y)/x)"],
        branch: ["(4 (-1)^k)/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)", "(2 (2 y+(-1)^k-1))/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)"],
        weight: "64/(abs(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)^3)",
    },
    MapRow {
        label: "23,13,23",
        forward: ["((k+2) x-k y-1)/x", "y/x"],
        branch: ["1/(-y k+k-x+2)", "y/(-y k+k-x+2)"],
        weight: "1/((-y k+k-x+2)^3)",
    },
    MapRow {
        label: "23,13,132",
        forward: ["1/(((k (y-x)+1)/(x-y+(-1)^k (3 x+y-2)))+(1/2))", "((4 y-4 x)/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2))+1"],
        branch: ["((-1)^k (-2 x-y+(-1)^k (2 x+2 k (y-1)+y-5)+1))/(4 (x+k (y-1)-2))", "((-1)^k (-2 x+(-1)^k (2 x+2 k (y-1)-3 y-1)-y+1))/(4 (x+k (y-1)-2))"],
        weight: "1/(abs(x+k (y-1)-2)^3)",
    },
    MapRow {
        label: "23,23,e",
        forward: ["(x+(-1)^k (x-2 y))/(2 x)", "((2 k+(-1)^k+7) x-2 ((-1)^k y+y+2))/(4 x)"],
        branch: ["(4 (-1)^k)/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)", "(2 (-2 x+(-1)^k+1))/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)"],
        weight: "64/(abs(2 x+(-1)^k (2 k+2 x-4 y+5)-1)^3)",
    },
    MapRow {
        label: "23,23,23",
        forward: ["1-(y/x)", "((k+2) x-(k+1) y-1)/x"],
        branch: ["1/(k x+x-y+1)", "(1-x)/(k x+x-y+1)"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "23,23,132",
        forward: ["(4 (x-y))/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2)", "((4 (k x+x-(k+1) y-1))/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2))+1"],
        branch: ["((-1)^k (-3 x+(-1)^k ((2 k+3) x-2 y+2)+2 y+2))/(4 (k x+x-y+1))", "((-1)^k (-3 x+(-1)^k ((2 k-1) x-2 y+2)+2 y+2))/(4 (k x+x-y+1))"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "23,123,e",
        forward: ["((2 k+(-1)^(k+1)+9) x+2 (-1+(-1)^k) y-4)/(4 x)", "((2 k+(-1)^k+7) x-2 ((-1)^k y+y+2))/(4 x)"],
        branch: ["(4 (-1)^k)/(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)", "(-4 x-2 (-1)^k+4 y+2)/(2 x-2 y+(-1)^k (-2 k+2 x+2 y-7)-1)"],
        weight: "64/(abs(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)^3)",
    },
    MapRow {
        label: "23,123,23",
        forward: ["((k+2) x-k y-1)/x", "((k+2) x-(k+1) y-1)/x"],
        branch: ["1/(-x k+y k+k-x+2)", "(y-x)/(x+k (x-y-1)-2)"],
        weight: "1/((-x+k (-x+y+1)+2)^3)",
    },
    MapRow {
        label: "23,123,132",
        forward: ["1/(((k (y-x)+1)/(x-y+(-1)^k (3 x+y-2)))+(1/2))", "((4 (k x+x-(k+1) y-1))/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2))+1"],
        branch: ["((-1)^k (-3 x+(-1)^k (3 x+2 k (x-y-1)-y-5)+y+1))/(4 (x+k (x-y-1)-2))", "((-1)^k (-3 x+y+(-1)^k (-x+2 k (x-y-1)+3 y-1)+1))/(4 (x+k (x-y-1)-2))"],
        weight: "1/(abs(x+k (x-y-1)-2)^3)",
    },
    MapRow {
        label: "23,132,e",
        forward: ["(2 ((-1)^k y+y+2)-(2 k+(-1)^k+3) x)/(4 x)", "(1/2) (1+(-1)^(k+1))+(((-1)^k y)/x)"],
        branch: ["(4 (-1)^k)/((-1)^k (2 k+4 x-2 y+3)-2 y+1)", "-((2 (2 y+(-1)^k-1))/((-1)^(k+1) (2 k+4 x-2 y+3)+2 y-1))"],
        weight: "64/(abs((-1)^k (2 k+4 x-2 y+3)-2 y+1)^3)",
    },
    MapRow {
        label: "23,132,23",
        forward: ["(-(k+1) x+k y+y+1)/x", "y/x"],
        branch: ["1/(k+x-(k+1) y+1)", "y/(k+x-(k+1) y+1)"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "23,132,132",
        forward: ["(4 (-(k+1) x+k y+y+1))/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2)", "((4 y-4 x)/(-2 k x+x+2 k y-y+(-1)^k (3 x+y-2)+2))+1"],
        branch: ["((-1)^k (2 x-3 y+(-1)^k (-2 x+2 k (y-1)+3 y-3)-1))/(4 (k+1) y-4 (k+x+1))", "((-1)^k (2 x-3 y+(-1)^(k+1) (2 x-2 k (y-1)+y-1)-1))/(4 (k+1) y-4 (k+x+1))"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "123,e,13",
        forward: ["(1/2) ((((-1)^k (-2 x+y+1))/(y-1))+1)", "-((-2 x+(-1)^k (2 x-y-1)+2 k (y-1)+5 y+1)/(4 (y-1)))"],
        branch: ["(6 x+(-1)^k (2 k-2 x+4 y+3)-3)/(2 x+(-1)^k (2 k-2 x+4 y+5)-1)", "(2 x+(-1)^k (2 k-2 x+4 y+1)-1)/(2 x+(-1)^k (2 k-2 x+4 y+5)-1)"],
        weight: "64/(abs(2 x+(-1)^k (2 k-2 x+4 y+5)-1)^3)",
    },
    MapRow {
        label: "123,e,23",
        forward: ["(4 y-4 x)/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2)", "((4 k (x-y)-4)/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2))-1"],
        branch: ["((-1)^k (x+2 y+(-1)^k (2 k x+3 x+2 y+2)-2))/(4 (k x+y+1))", "((-1)^k (x+2 y+(-1)^k (2 k x-x+2 y+2)-2))/(4 (k x+y+1))"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "123,e,132",
        forward: ["(y-x)/(y-1)", "(k x-(k+1) y)/(y-1)"],
        branch: ["(k x+x+y)/(k x+y+1)", "1-(1/(k x+y+1))"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "123,12,13",
        forward: ["-((-2 (1+(-1)^k) x+2 k (y-1)+(3+(-1)^k) (y+1))/(4 (y-1)))", "-((-2 x+(-1)^k (2 x-y-1)+2 k (y-1)+5 y+1)/(4 (y-1)))"],
        branch: ["(-6 x+6 y+(-1)^k (2 k+2 x+2 y+1)+3)/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)", "(-2 x+2 y+(-1)^k (2 k+2 x+2 y-1)+1)/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)"],
        weight: "64/(abs(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)^3)",
    },
    MapRow {
        label: "123,12,23",
        forward: ["(4 (k x+x-(k+1) y-1))/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2)", "((4 k (x-y)-4)/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2))-1"],
        branch: ["-(((-1)^k (x-3 y+(-1)^k (3 x+2 k (x-y-1)-5 (y+1))+1))/(4 (y+k (-x+y+1)+1)))", "(x+(-1)^(k+1) (x-3 y+1)+y+2 k (-x+y+1)+1)/(4 (y+k (-x+y+1)+1))"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "123,12,132",
        forward: ["(k x+x-(k+1) y-1)/(y-1)", "(k x-(k+1) y)/(y-1)"],
        branch: ["(k-(k+1) x+(k+2) y+1)/(y+k (-x+y+1)+1)", "1-(1/(-x k+y k+k+y+1))"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "123,13,13",
        forward: ["(-2 x+(-1)^k (2 x-y-1)+2 k (y-1)+9 y-3)/(4 (y-1))", "(1/2)-(((-1)^k (-2 x+y+1))/(2 (y-1)))"],
        branch: ["(-6 y+(-1)^k (2 k-4 x+2 y+5)+3)/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)", "(-2 y+(-1)^k (2 k-4 x+2 y+3)+1)/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)"],
        weight: "64/(abs(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)^3)",
    },
    MapRow {
        label: "123,13,23",
        forward: ["1/(((k (x-y)-1)/(-x+y+(-1)^k (x+3 y-2)))+(1/2))", "((4 (x-y))/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2))+1"],
        branch: ["((-1)^k (2 x+y+(-1)^k (2 x+2 k (y-1)+3 y-7)-1))/(4 (x+k (y-1)-2))", "((-1)^k (2 x+(-1)^k (2 x+2 k (y-1)-y-3)+y-1))/(4 (x+k (y-1)-2))"],
        weight: "1/(abs(x+k (y-1)-2)^3)",
    },
    MapRow {
        label: "123,13,132",
        forward: ["k+((-x k+k+1)/(y-1))+2", "(x-1)/(y-1)"],
        branch: ["(x+k (y-1)+y-2)/(x+k (y-1)-2)", "1+(1/(x+k (y-1)-2))"],
        weight: "-(1/((x+k (y-1)-2)^3))",
    },
    MapRow {
        label: "123,23,13",
        forward: ["(1/2) ((((-1)^k (-2 x+y+1))/(y-1))+1)", "(-2 (1+(-1)^k) x+2 k (y-1)+7 y+(-1)^k (y+1)-1)/(4 (y-1))"],
        branch: ["(6 x+(-1)^k (2 k+2 x-4 y+3)-3)/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)", "(2 x+(-1)^k (2 k+2 x-4 y+1)-1)/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)"],
        weight: "64/(abs(2 x+(-1)^k (2 k+2 x-4 y+5)-1)^3)",
    },
    MapRow {
        label: "123,23,23",
        forward: ["(4 y-4 x)/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2)", "((4 (-(k+1) x+k y+y+1))/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2))+1"],
        branch: ["((-1)^k (3 x+(-1)^k ((2 k+5) x-2 y+2)-2 y-2))/(4 (k x+x-y+1))", "((-1)^k (3 x+(-1)^k (2 k x+x-2 y+2)-2 y-2))/(4 (k x+x-y+1))"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "123,23,132",
        forward: ["(y-x)/(y-1)", "((k+2) y-(k+1) x)/(y-1)"],
        branch: ["((k+2) x-y)/(k x+x-y+1)", "1+(1/(-(k+1) x+y-1))"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "123,123,13",
        forward: ["(-2 x+(-1)^k (2 x-y-1)+2 k (y-1)+9 y-3)/(4 (y-1))", "(-2 (1+(-1)^k) x+2 k (y-1)+7 y+(-1)^k (y+1)-1)/(4 (y-1))"],
        branch: ["(-6 x+(-1)^k (2 k-2 x-2 y+5)+6 y+3)/(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)", "(-2 x+(-1)^k (2 k-2 x-2 y+3)+2 y+1)/(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)"],
        weight: "64/(abs(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)^3)",
    },
    MapRow {
        label: "123,123,23",
        forward: ["1/(((k (x-y)-1)/(-x+y+(-1)^k (x+3 y-2)))+(1/2))", "((4 (-(k+1) x+k y+y+1))/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2))+1"],
        branch: ["((-1)^k (3 x+(-1)^k (5 x+2 k (x-y-1)-3 y-7)-y-1))/(4 (x+k (x-y-1)-2))", "((-1)^k (3 x-y+(-1)^k (x+2 k (x-y-1)+y-3)-1))/(4 (x+k (x-y-1)-2))"],
        weight: "1/(abs(x+k (x-y-1)-2)^3)",
    },
    MapRow {
        label: "123,123,132",
        forward: ["k+((-x k+k+1)/(y-1))+2", "((k+2) y-(k+1) x)/(y-1)"],
        branch: ["((k+2) (x-1)-(k+1) y)/(x+k (x-y-1)-2)", "1+(1/(x+k (x-y-1)-2))"],
        weight: "1/((-x+k (-x+y+1)+2)^3)",
    },
    MapRow {
        label: "123,132,13",
        forward: ["-((-2 (1+(-1)^k) x+2 k (y-1)+(3+(-1)^k) (y+1))/(4 (y-1)))", "(1/2)-(((-1)^k (-2 x+y+1))/(2 (y-1)))"],
        branch: ["((-1)^k (2 k+4 x-2 y+1)-6 y+3)/((-1)^k (2 k+4 x-2 y+3)-2 y+1)", "((-1)^k (2 k+4 x-2 y-1)-2 y+1)/((-1)^k (2 k+4 x-2 y+3)-2 y+1)"],
        weight: "64/(abs((-1)^k (2 k+4 x-2 y+3)-2 y+1)^3)",
    },
    MapRow {
        label: "123,132,23",
        forward: ["(4 (k x+x-(k+1) y-1))/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2)", "((4 (x-y))/(2 k x-x-2 k y+y+(-1)^k (x+3 y-2)-2))+1"],
        branch: ["((-1)^k (-2 x+3 y+(-1)^k (-2 x+2 k (y-1)+5 y-5)+1))/(4 (k+1) y-4 (k+x+1))", "((-1)^k (-2 x+3 y+(-1)^k (-2 x+2 k (y-1)+y-1)+1))/(4 (k+1) y-4 (k+x+1))"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "123,132,132",
        forward: ["(k x+x-(k+1) y-1)/(y-1)", "(x-1)/(y-1)"],
        branch: ["(k+x-(k+2) y+1)/(k+x-(k+1) y+1)", "1+(1/(-x+k (y-1)+y-1))"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "132,e,12",
        forward: ["(1/2) ((((-1)^k (x+y-1))/(x-y-1))+1)", "(-5 x+3 y+2 k (-x+y+1)+(-1)^k (x+y-1)+1)/(4 (x-y-1))"],
        branch: ["(-2 x+(-1)^k (2 k-2 x+4 y+3)+1)/(2 x+(-1)^k (2 k-2 x+4 y+5)-1)", "-((2 (-2 x+(-1)^k+1))/(-2 x+(-1)^(k+1) (2 k-2 x+4 y+5)+1))"],
        weight: "64/(abs(2 x+(-1)^k (2 k-2 x+4 y+5)-1)^3)",
    },
    MapRow {
        label: "132,e,13",
        forward: ["(4 (x-1))/(-2 k (x-1)+x+(-1)^k (3 x-4 y-1)-3)", "((4 k (x-1)+4)/(2 k (x-1)-x+(-1)^(k+1) (3 x-4 y-1)+3))-1"],
        branch: ["1-(x/(k x+y+1))", "((-1)^k (-x-2 y+(-1)^k (2 k x-3 x+2 y+2)+2))/(4 (k x+y+1))"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "132,e,123",
        forward: ["(x-1)/(x-y-1)", "((k (x-1)+1)/(-x+y+1))-1"],
        branch: ["1-(x/(k x+y+1))", "(1-x)/(k x+y+1)"],
        weight: "1/((k x+y+1)^3)",
    },
    MapRow {
        label: "132,12,12",
        forward: ["(-3 x+y+2 k (-x+y+1)+(-1)^(k+1) (x+y-1)-1)/(4 (x-y-1))", "(-5 x+3 y+2 k (-x+y+1)+(-1)^k (x+y-1)+1)/(4 (x-y-1))"],
        branch: ["(2 x-2 y+(-1)^k (2 k+2 x+2 y+1)-1)/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)", "(2 (2 x+(-1)^k-2 y-1))/(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)"],
        weight: "64/(abs(-2 x+2 y+(-1)^k (2 k+2 x+2 y+3)+1)^3)",
    },
    MapRow {
        label: "132,12,13",
        forward: ["(4 (k (x-1)+x))/(2 k (x-1)-x+(-1)^(k+1) (3 x-4 y-1)+3)", "((4 k (x-1)+4)/(2 k (x-1)-x+(-1)^(k+1) (3 x-4 y-1)+3))-1"],
        branch: ["(-x k+y k+k+x)/(-x k+y k+k+y+1)", "((-1)^k (x-3 y+(-1)^(k+1) (-3 x+2 k (x-y-1)+y+1)+1))/(4 (y+k (-x+y+1)+1))"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "132,12,123",
        forward: ["(k (x-1)+x)/(-x+y+1)", "((k (x-1)+1)/(-x+y+1))-1"],
        branch: ["(-x k+y k+k+x)/(-x k+y k+k+y+1)", "(x-y)/(-x k+y k+k+y+1)"],
        weight: "1/((-x k+y k+k+y+1)^3)",
    },
    MapRow {
        label: "132,13,12",
        forward: ["(9 x+2 k (x-y-1)-7 y+(-1)^(k+1) (x+y-1)-5)/(4 (x-y-1))", "(1/2)-(((-1)^k (x+y-1))/(2 (x-y-1)))"],
        branch: ["(2 y+(-1)^k (2 k-4 x+2 y+5)-1)/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)", "(2 (2 y+(-1)^k-1))/(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)"],
        weight: "64/(abs(-2 y+(-1)^k (2 k-4 x+2 y+7)+1)^3)",
    },
    MapRow {
        label: "132,13,13",
        forward: ["((-4 k (x-1)-4)/(2 k (x-1)-x+(-1)^(k+1) (3 x-4 y-1)+3))+2", "((4-4 x)/(-2 k (x-1)+x+(-1)^k (3 x-4 y-1)-3))+1"],
        branch: ["(x+k (y-1)-y-1)/(x+k (y-1)-2)", "((-1)^k (-2 x+(-1)^k (2 x+2 k (y-1)-3 y-1)-y+1))/(4 (x+k (y-1)-2))"],
        weight: "1/(abs(x+k (y-1)-2)^3)",
    },
    MapRow {
        label: "132,13,123",
        forward: ["((-x k+k-1)/(-x+y+1))+2", "y/(-x+y+1)"],
        branch: ["(x+k (y-1)-y-1)/(x+k (y-1)-2)", "y/(-y k+k-x+2)"],
        weight: "-(1/((x+k (y-1)-2)^3))",
    },
    MapRow {
        label: "132,23,12",
        forward: ["(1/2) ((((-1)^k (x+y-1))/(x-y-1))+1)", "(7 x+2 k (x-y-1)-5 y+(-1)^k (x+y-1)-3)/(4 (x-y-1))"],
        branch: ["(-2 x+(-1)^k (2 k+2 x-4 y+3)+1)/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)", "(2 (-2 x+(-1)^k+1))/(2 x+(-1)^k (2 k+2 x-4 y+5)-1)"],
        weight: "64/(abs(2 x+(-1)^k (2 k+2 x-4 y+5)-1)^3)",
    },
    MapRow {
        label: "132,23,13",
        forward: ["(4 (x-1))/(-2 k (x-1)+x+(-1)^k (3 x-4 y-1)-3)", "((4 k-4 (k+1) x)/(2 k (x-1)-x+(-1)^(k+1) (3 x-4 y-1)+3))+1"],
        branch: ["1-(x/(k x+x-y+1))", "((-1)^k (-3 x+(-1)^k ((2 k-1) x-2 y+2)+2 y+2))/(4 (k x+x-y+1))"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "132,23,123",
        forward: ["(x-1)/(x-y-1)", "(-x k+k-2 x+y+1)/(-x+y+1)"],
        branch: ["1-(x/(k x+x-y+1))", "(1-x)/(k x+x-y+1)"],
        weight: "1/((k x+x-y+1)^3)",
    },
    MapRow {
        label: "132,123,12",
        forward: ["(9 x+2 k (x-y-1)-7 y+(-1)^(k+1) (x+y-1)-5)/(4 (x-y-1))", "(7 x+2 k (x-y-1)-5 y+(-1)^k (x+y-1)-3)/(4 (x-y-1))"],
        branch: ["(2 x+(-1)^k (2 k-2 x-2 y+5)-2 y-1)/(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)", "(-4 x-2 (-1)^k+4 y+2)/(2 x-2 y+(-1)^k (-2 k+2 x+2 y-7)-1)"],
        weight: "64/(abs(-2 x+(-1)^k (2 k-2 x-2 y+7)+2 y+1)^3)",
    },
    MapRow {
        label: "132,123,13",
        forward: ["((-4 k (x-1)-4)/(2 k (x-1)-x+(-1)^(k+1) (3 x-4 y-1)+3))+2", "((4 k-4 (k+1) x)/(2 k (x-1)-x+(-1)^(k+1) (3 x-4 y-1)+3))+1"],
        branch: ["(k (x-y-1)+y-1)/(x+k (x-y-1)-2)", "((-1)^k (-3 x+y+(-1)^k (-x+2 k (x-y-1)+3 y-1)+1))/(4 (x+k (x-y-1)-2))"],
        weight: "1/(abs(x+k (x-y-1)-2)^3)",
    },
    MapRow {
        label: "132,123,123",
        forward: ["((-x k+k-1)/(-x+y+1))+2", "(-x k+k-2 x+y+1)/(-x+y+1)"],
        branch: ["(k (x-y-1)+y-1)/(x+k (x-y-1)-2)", "(y-x)/(x+k (x-y-1)-2)"],
        weight: "1/((-x+k (-x+y+1)+2)^3)",
    },
    MapRow {
        label: "132,132,12",
        forward: ["(-3 x+y+2 k (-x+y+1)+(-1)^(k+1) (x+y-1)-1)/(4 (x-y-1))", "(1/2)-(((-1)^k (x+y-1))/(2 (x-y-1)))"],
        branch: ["((-1)^k (2 k+4 x-2 y+1)+2 y-1)/((-1)^k (2 k+4 x-2 y+3)-2 y+1)", "-((2 (2 y+(-1)^k-1))/((-1)^(k+1) (2 k+4 x-2 y+3)+2 y-1))"],
        weight: "64/(abs((-1)^k (2 k+4 x-2 y+3)-2 y+1)^3)",
    },
    MapRow {
        label: "132,132,13",
        forward: ["(4 (k (x-1)+x))/(2 k (x-1)-x+(-1)^(k+1) (3 x-4 y-1)+3)", "((4-4 x)/(-2 k (x-1)+x+(-1)^k (3 x-4 y-1)-3))+1"],
        branch: ["(-y k+k+x)/(k+x-(k+1) y+1)", "((-1)^k (2 x-3 y+(-1)^(k+1) (2 x-2 k (y-1)+y-1)-1))/(4 (k+1) y-4 (k+x+1))"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
    MapRow {
        label: "132,132,123",
        forward: ["(k (x-1)+x)/(-x+y+1)", "y/(-x+y+1)"],
        branch: ["(-y k+k+x)/(k+x-(k+1) y+1)", "y/(k+x-(k+1) y+1)"],
        weight: "1/((k+x-(k+1) y+1)^3)",
    },
];

pub(crate) static BANACH_ROWS: &[BanachRow] = &[
    BanachRow { label: "e,e,e", g: "x", summand: "x/((k x+y+1)^2)" },
    BanachRow { label: "e,12,e", g: "(-x+y+1)^2", summand: "-(((x-y-1)^2)/((x k-y k-k+x-2 y-1)^2 (x k-y k-k-y-1)))" },
    BanachRow { label: "e,13,e", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k+x-2) (y k-k+x-y-1)^2))" },
    BanachRow { label: "e,13,12", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k+x-2) (y k-k+x-y-1)^2))" },
    BanachRow { label: "e,23,e", g: "x (1-y)", summand: "(x-x y)/((k x-y+1) (k x+x-y+1))" },
    BanachRow { label: "e,123,e", g: "(-x+y+1)^2", summand: "-(((x-y-1)^2)/((x k-y k-k+x-2) (x k-y k-k+2 x-y-2)^2))" },
    BanachRow { label: "e,132,e", g: "x (1-y)", summand: "(x-x y)/((y k-k-x) (y k-k-x+y-1))" },
    BanachRow { label: "e,132,12", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k-x)^2 (y k-k-x+y-1)))" },
    BanachRow { label: "12,e,12", g: "x^2", summand: "(x^2)/((k x+y+1) (k x+x+y)^2)" },
    BanachRow { label: "12,12,12", g: "-x+y+1", summand: "(-x+y+1)/((-x k+y k+k+y+1)^2)" },
    BanachRow { label: "12,13,e", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k+x-2) (y k-k+x-y-1)^2))" },
    BanachRow { label: "12,13,12", g: "(1-y) (-x+y+1)", summand: "((x-y-1) (y-1))/((y k-k+x-2) (y k-k+x-y-1))" },
    BanachRow { label: "12,23,12", g: "x^2", summand: "(x^2)/((k x+x-y+1) (k x+2 x-y)^2)" },
    BanachRow { label: "12,123,12", g: "(1-y) (-x+y+1)", summand: "((x-y-1) (y-1))/((x k-y k-k+x-2) (x k-y k-k+y-1))" },
    BanachRow { label: "12,132,e", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k-x)^2 (y k-k-x+y-1)))" },
    BanachRow { label: "12,132,12", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k-x)^2 (y k-k-x+y-1)))" },
    BanachRow { label: "13,e,13", g: "x^2", summand: "(x^2)/((k x+y+1) (k x-x+y+1)^2)" },
    BanachRow { label: "13,e,123", g: "x^2", summand: "(x^2)/((k x+y+1) (k x-x+y+1)^2)" },
    BanachRow { label: "13,12,13", g: "(-x+y+1)^2", summand: "-(((x-y-1)^2)/((x k-y k-k+x-2 y-1)^2 (x k-y k-k-y-1)))" },
    BanachRow { label: "13,13,13", g: "1-y", summand: "(1-y)/((y k-k+x-2)^2)" },
    BanachRow { label: "13,23,13", g: "x (1-y)", summand: "(x-x y)/((k x-y+1) (k x+x-y+1))" },
    BanachRow { label: "13,23,123", g: "x^2", summand: "(x^2)/((k x-y+1)^2 (k x+x-y+1))" },
    BanachRow { label: "13,123,13", g: "(-x+y+1)^2", summand: "-(((x-y-1)^2)/((x k-y k-k+x-2) (x k-y k-k+2 x-y-2)^2))" },
    BanachRow { label: "13,132,13", g: "x (1-y)", summand: "(x-x y)/((y k-k-x) (y k-k-x+y-1))" },
    BanachRow { label: "23,e,23", g: "x (-x+y+1)", summand: "-((x (x-y-1))/((k x+y+1) (k x-x+y+1)))" },
    BanachRow { label: "23,12,23", g: "x (-x+y+1)", summand: "-((x (x-y-1))/((x k-y k-k-x) (x k-y k-k-y-1)))" },
    BanachRow { label: "23,12,132", g: "(-x+y+1)^2", summand: "-(((x-y-1)^2)/((x k-y k-k-x)^2 (x k-y k-k-y-1)))" },
    BanachRow { label: "23,13,23", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k+x-2) (y k-k+x+y-2)^2))" },
    BanachRow { label: "23,23,23", g: "x", summand: "x/((k x+x-y+1)^2)" },
    BanachRow { label: "23,123,23", g: "(-x+y+1)^2", summand: "-(((x-y-1)^2)/((x k-y k-k+x-2) (x k-y k-k+y-1)^2))" },
    BanachRow { label: "23,132,23", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k-x+y-1) (y k-k-x+2 y-1)^2))" },
    BanachRow { label: "123,e,132", g: "x^2", summand: "(x^2)/((k x+y+1) (k x+x+y)^2)" },
    BanachRow { label: "123,12,23", g: "-x+y+1", summand: "(x-y-1)/((x k-y k-k-x) (x k-y k-k-y-1)^2)" },
    BanachRow { label: "123,12,132", g: "-x+y+1", summand: "(x-y-1)/((x k-y k-k-x) (x k-y k-k-y-1)^2)" },
    BanachRow { label: "123,13,132", g: "(1-y) (-x+y+1)", summand: "((x-y-1) (y-1))/((y k-k+x-2) (y k-k+x-y-1))" },
    BanachRow { label: "123,23,132", g: "1-y", summand: "(1-y)/((-k x-x+y-1)^2)" },
    BanachRow { label: "123,123,23", g: "(-x+y+1)^2", summand: "-(((x-y-1)^2)/((x k-y k-k+x-2) (x k-y k-k+y-1)^2))" },
    BanachRow { label: "123,123,132", g: "(1-y) (-x+y+1)", summand: "((x-y-1) (y-1))/((x k-y k-k+x-2) (x k-y k-k+y-1))" },
    BanachRow { label: "123,132,132", g: "(1-y) (x-y+1)", summand: "((y-1) (-x+y-1))/((y k-k-x+y-1) (y k-k-x+2 y-2))" },
    BanachRow { label: "132,e,13", g: "x^2", summand: "(x^2)/((k x+y+1) (k x-x+y+1)^2)" },
    BanachRow { label: "132,e,123", g: "x (-x+y+1)", summand: "-((x (x-y-1))/((k x+y+1) (k x-x+y+1)))" },
    BanachRow { label: "132,12,123", g: "x (-x+y+1)", summand: "-((x (x-y-1))/((x k-y k-k-x) (x k-y k-k-y-1)))" },
    BanachRow { label: "132,13,123", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k+x-2) (y k-k+x+y-2)^2))" },
    BanachRow { label: "132,23,13", g: "x^2", summand: "(x^2)/((k x-y+1)^2 (k x+x-y+1))" },
    BanachRow { label: "132,23,123", g: "x (1-y)", summand: "(x-x y)/((k x-y+1) (k x+x-y+1) (k x+2 x-y))" },
    BanachRow { label: "132,123,123", g: "-x+y+1", summand: "(-x+y+1)/((x k-y k-k+x-2)^2)" },
    BanachRow { label: "132,132,123", g: "(1-y)^2", summand: "-(((y-1)^2)/((y k-k-x+y-1) (y k-k-x+2 y-1)^2))" },
];

pub(crate) static EIGEN_ROWS: &[EigenRow] = &[
    EigenRow { label: "e,e,e", h: "1/(x (y+1))" },
    EigenRow { label: "e,23,e", h: "1/(x (1-y))" },
    EigenRow { label: "e,132,e", h: "1/(x (1-y))" },
    EigenRow { label: "12,12,12", h: "1/((y+1) (-x+y+1))" },
    EigenRow { label: "12,13,12", h: "1/((1-y) (-x+y+1))" },
    EigenRow { label: "12,123,12", h: "1/((1-y) (-x+y+1))" },
    EigenRow { label: "13,13,13", h: "1/((x-2) (1-y))" },
    EigenRow { label: "13,23,13", h: "1/(x (1-y))" },
    EigenRow { label: "13,132,13", h: "1/(x (1-y))" },
    EigenRow { label: "23,e,23", h: "1/(x (-x+y+1))" },
    EigenRow { label: "23,12,23", h: "1/(x (-x+y+1))" },
    EigenRow { label: "23,23,23", h: "1/(x (x-y+1))" },
    EigenRow { label: "123,13,132", h: "1/((1-y) (-x+y+1))" },
    EigenRow { label: "123,123,132", h: "1/((1-y) (-x+y+1))" },
    EigenRow { label: "123,132,132", h: "1/((1-y) (x-y+1))" },
    EigenRow { label: "132,e,123", h: "1/(x (-x+y+1))" },
    EigenRow { label: "132,12,123", h: "1/(x (-x+y+1))" },
    EigenRow { label: "132,123,123", h: "1/((x-2) (-x+y+1))" },
];

pub(crate) static DENSITY_ROWS: &[DensityRow] = &[
    DensityRow { label: "e,e,e", r: "12/(pi^2 x (y+1))" },
    DensityRow { label: "e,23,e", r: "6/(pi^2 x (1-y))" },
    DensityRow { label: "e,132,e", r: "6/(pi^2 x (1-y))" },
    DensityRow { label: "12,12,12", r: "12/(pi^2 (y+1) (-x+y+1))" },
    DensityRow { label: "12,13,12", r: "6/(pi^2 (1-y) (-x+y+1))" },
    DensityRow { label: "12,123,12", r: "6/(pi^2 (1-y) (-x+y+1))" },
    DensityRow { label: "13,13,13", r: "12/(pi^2 (2-x) (1-y))" },
    DensityRow { label: "13,23,13", r: "6/(pi^2 x (1-y))" },
    DensityRow { label: "13,132,13", r: "6/(pi^2 x (1-y))" },
    DensityRow { label: "23,e,23", r: "6/(pi^2 x (-x+y+1))" },
    DensityRow { label: "23,12,23", r: "6/(pi^2 x (-x+y+1))" },
    DensityRow { label: "23,23,23", r: "12/(pi^2 x (x-y+1))" },
    DensityRow { label: "123,13,132", r: "6/(pi^2 (1-y) (-x+y+1))" },
    DensityRow { label: "123,123,132", r: "6/(pi^2 (1-y) (-x+y+1))" },
    DensityRow { label: "123,132,132", r: "12/(pi^2 (1-y) (x-y+1))" },
    DensityRow { label: "132,e,123", r: "6/(pi^2 x (-x+y+1))" },
    DensityRow { label: "132,12,123", r: "6/(pi^2 x (-x+y+1))" },
    DensityRow { label: "132,123,123", r: "12/(pi^2 (2-x) (-x+y+1))" },
];

pub(crate) static HILBERT_ROWS: &[HilbertRow] = &[
    HilbertRow { label: "e,e,e", l: "(y+1)/x", j: "1/(x^3)", h: "y" },
    HilbertRow { label: "e,e,12", l: "(y+1)/x", j: "1/(x^3)", h: "y" },
    HilbertRow { label: "e,12,e", l: "(y+1)/(-x+y+1)", j: "1/((-x+y+1)^3)", h: "y" },
    HilbertRow { label: "e,13,e", l: "(x-2)/(y-1)", j: "1/((1-y)^3)", h: "y" },
    HilbertRow { label: "e,23,e", l: "(x-y+1)/x", j: "1/(x^3)", h: "y" },
    HilbertRow { label: "e,23,12", l: "(x-y+1)/x", j: "1/(x^3)", h: "y" },
    HilbertRow { label: "e,123,e", l: "(x-2)/(x-y-1)", j: "1/((-x+y+1)^3)", h: "y" },
    HilbertRow { label: "e,132,e", l: "1-(x/(y-1))", j: "1/((1-y)^3)", h: "y" },
    HilbertRow { label: "12,e,e", l: "(y+1)/x", j: "1/(x^3)", h: "y" },
    HilbertRow { label: "12,e,12", l: "(y+1)/x", j: "1/(x^3)", h: "y" },
    HilbertRow { label: "12,12,12", l: "(y+1)/(-x+y+1)", j: "1/((-x+y+1)^3)", h: "y" },
    HilbertRow { label: "12,13,12", l: "(x-2)/(y-1)", j: "1/((1-y)^3)", h: "y" },
    HilbertRow { label: "12,23,e", l: "(x-y+1)/x", j: "1/(x^3)", h: "y" },
    HilbertRow { label: "12,23,12", l: "(x-y+1)/x", j: "1/(x^3)", h: "y" },
    HilbertRow { label: "12,123,12", l: "(x-2)/(x-y-1)", j: "1/((-x+y+1)^3)", h: "y" },
    HilbertRow { label: "12,132,12", l: "1-(x/(y-1))", j: "1/((1-y)^3)", h: "y" },
    HilbertRow { label: "13,e,13", l: "(y+1)/x", j: "1/(x^3)", h: "1-x" },
    HilbertRow { label: "13,e,123", l: "(y+1)/x", j: "1/(x^3)", h: "1-x" },
    HilbertRow { label: "13,12,13", l: "(y+1)/(-x+y+1)", j: "1/((-x+y+1)^3)", h: "1-x" },
    HilbertRow { label: "13,13,13", l: "(x-2)/(y-1)", j: "1/((1-y)^3)", h: "1-x" },
    HilbertRow { label: "13,23,13", l: "(x-y+1)/x", j: "1/(x^3)", h: "1-x" },
    HilbertRow { label: "13,23,123", l: "(x-y+1)/x", j: "1/(x^3)", h: "1-x" },
    HilbertRow { label: "13,123,13", l: "(x-2)/(x-y-1)", j: "1/((-x+y+1)^3)", h: "1-x" },
    HilbertRow { label: "13,132,13", l: "1-(x/(y-1))", j: "1/((1-y)^3)", h: "1-x" },
    HilbertRow { label: "23,e,23", l: "(y+1)/x", j: "1/(x^3)", h: "x-y" },
    HilbertRow { label: "23,12,23", l: "(y+1)/(-x+y+1)", j: "1/((-x+y+1)^3)", h: "x-y" },
    HilbertRow { label: "23,13,23", l: "(x-2)/(y-1)", j: "1/((1-y)^3)", h: "x-y" },
    HilbertRow { label: "23,23,23", l: "(x-y+1)/x", j: "1/(x^3)", h: "x-y" },
    HilbertRow { label: "23,123,23", l: "(x-2)/(x-y-1)", j: "1/((-x+y+1)^3)", h: "x-y" },
    HilbertRow { label: "23,132,23", l: "1-(x/(y-1))", j: "1/((1-y)^3)", h: "x-y" },
    HilbertRow { label: "123,e,132", l: "(y+1)/x", j: "1/(x^3)", h: "x-y" },
    HilbertRow { label: "123,12,132", l: "(y+1)/(-x+y+1)", j: "1/((-x+y+1)^3)", h: "x-y" },
    HilbertRow { label: "123,13,132", l: "(x-2)/(y-1)", j: "1/((1-y)^3)", h: "x-y" },
    HilbertRow { label: "123,23,132", l: "(x-y+1)/x", j: "1/(x^3)", h: "x-y" },
    HilbertRow { label: "123,123,132", l: "(x-2)/(x-y-1)", j: "1/((-x+y+1)^3)", h: "x-y" },
    HilbertRow { label: "123,132,132", l: "1-(x/(y-1))", j: "1/((1-y)^3)", h: "x-y" },
    HilbertRow { label: "132,e,13", l: "(y+1)/x", j: "1/(x^3)", h: "1-x" },
    HilbertRow { label: "132,e,123", l: "(y+1)/x", j: "1/(x^3)", h: "1-x" },
    HilbertRow { label: "132,12,123", l: "(y+1)/(-x+y+1)", j: "1/((-x+y+1)^3)", h: "1-x" },
    HilbertRow { label: "132,13,123", l: "(x-2)/(y-1)", j: "1/((1-y)^3)", h: "1-x" },
    HilbertRow { label: "132,23,13", l: "(x-y+1)/x", j: "1/(x^3)", h: "1-x" },
    HilbertRow { label: "132,23,123", l: "(x-y+1)/x", j: "1/(x^3)", h: "1-x" },
    HilbertRow { label: "132,123,123", l: "(x-2)/(x-y-1)", j: "1/((-x+y+1)^3)", h: "1-x" },
    HilbertRow { label: "132,132,123", l: "1-(x/(y-1))", j: "1/((1-y)^3)", h: "1-x" },
];
