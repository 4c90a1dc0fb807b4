//! Division numbers for minimal triples with at most three parts, the hook
//! assignments they describe, and the resulting formulas for `c` and `g`.

use std::fmt;

use jlk_algebra::{r_to_alpha, BigRational, RatFunc1, UniPoly, R};

use crate::error::{CoreError, Result};
use crate::horn::{classify_cases, horn_facets};
use crate::jack::{self, hook_products, Poly, RF};
use crate::partition::{Cell, Partition};
use crate::phi::{phi, strip_term, LinExpr};
use crate::tableau::lr_count;

/// Reading of the symbol `𝔡_{ijk}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `|λ_i − μ_j − ν_k|`
    #[default]
    Minus,
    /// `|λ_i + μ_j − ν_k|`
    Plus,
}

impl std::str::FromStr for Convention {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minus" => Ok(Convention::Minus),
            "plus" => Ok(Convention::Plus),
            _ => Err(CoreError::InvalidArgument(format!(
                "unknown convention {s:?}"
            ))),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Minus => "minus",
            Convention::Plus => "plus",
        })
    }
}

/// Which version of the division-number table to read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TableVersion {
    /// Rows exactly as published.
    #[default]
    Printed,
    /// Rows 6, 8, 9, 10, 14 and 15 replaced by versions that reproduce the
    /// oracle.
    Corrected,
}

impl std::str::FromStr for TableVersion {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(TableVersion::Printed),
            "corrected" => Ok(TableVersion::Corrected),
            _ => Err(CoreError::InvalidArgument(format!(
                "unknown table version {s:?}"
            ))),
        }
    }
}

impl fmt::Display for TableVersion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableVersion::Printed => "printed",
            TableVersion::Corrected => "corrected",
        })
    }
}

/// Convention plus table version.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Reading {
    pub convention: Convention,
    pub table: TableVersion,
}

impl From<Convention> for Reading {
    fn from(convention: Convention) -> Self {
        Reading {
            convention,
            table: TableVersion::Printed,
        }
    }
}

/// One entry of a division-number table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum E {
    Z,
    D(u8, u8, u8),
    /// `𝔡 − 𝔭`
    Dm(u8, u8, u8),
    /// `𝔡 + 𝔭`
    Dp(u8, u8, u8),
    P,
    Mu12,
    Nu12,
    /// `λ_2 − λ_3 + 𝔭`
    Lp23,
}

use E::*;

/// Rows: λ as `[n13, n12, n11, n23, n22, n33]`, then μ and ν as
/// `[n13, n12, n23]`.
type Row = ([E; 6], [E; 3], [E; 3]);

const LAM_1: [E; 6] = [
    D(3, 3, 3),
    D(2, 2, 2),
    Z,
    D(3, 3, 3),
    D(2, 2, 2),
    D(3, 3, 3),
];
const LAM_8: [E; 6] = [D(3, 3, 3), Z, Z, Z, Z, D(3, 3, 3)];
const LAM_10: [E; 6] = [Dp(1, 1, 1), D(2, 2, 3), Z, Dp(2, 2, 1), D(2, 2, 3), P];

const ROW_8: Row = (
    [D(3, 3, 3), D(2, 2, 3), Z, Z, Z, D(3, 3, 3)],
    [Z, Z, D(3, 3, 3)],
    [D(2, 1, 3), D(1, 1, 1), Z],
);

const ROW_9: Row = (
    [D(3, 3, 3), D(2, 3, 2), Z, Z, Z, D(3, 3, 3)],
    [D(2, 3, 1), D(1, 1, 1), Z],
    [Z, Z, D(3, 3, 3)],
);

const ROW_6: Row = (
    [D(3, 3, 3), Dm(1, 2, 3), Z, P, D(2, 3, 1), Z],
    [Dm(2, 1, 2), D(1, 2, 2), D(1, 3, 1)],
    [Dp(1, 1, 3), D(2, 2, 1), D(1, 1, 2)],
);

const TABLE: [Row; 18] = [
    // 1  μ3 = μ2
    (
        LAM_1,
        [Z, D(1, 1, 1), Z],
        [D(3, 3, 3), D(2, 2, 2), D(3, 3, 3)],
    ),
    // 2  μ2 = μ1
    (
        [
            D(1, 1, 1),
            D(2, 1, 3),
            Z,
            D(2, 2, 2),
            D(2, 1, 3),
            D(1, 1, 1),
        ],
        [Z, Z, D(3, 3, 3)],
        [D(2, 1, 3), D(1, 1, 1), D(2, 1, 3)],
    ),
    // 3  ν3 = ν2
    (
        LAM_1,
        [D(3, 3, 3), D(2, 2, 2), D(3, 3, 3)],
        [Z, D(1, 1, 1), Z],
    ),
    // 4  ν2 = ν1
    (
        [
            D(1, 1, 1),
            D(2, 3, 1),
            Z,
            D(2, 2, 2),
            D(2, 3, 1),
            D(1, 1, 1),
        ],
        [D(2, 3, 1), D(1, 1, 1), D(2, 3, 1)],
        [Z, Z, D(3, 3, 3)],
    ),
    // 5  λ3 = λ2
    (
        [D(1, 1, 1), Z, Z, D(3, 3, 3), Z, D(2, 2, 3)],
        [D(2, 3, 2), D(2, 2, 3), D(2, 2, 2)],
        [D(2, 2, 3), D(2, 3, 2), D(2, 2, 3)],
    ),
    // 6  λ2 = λ1
    (
        [D(3, 3, 3), Dm(3, 2, 2), Z, P, D(2, 3, 1), D(2, 2, 1)],
        [Dm(2, 1, 2), Mu12, D(2, 2, 1)],
        [Dp(2, 3, 1), D(2, 2, 1), D(2, 3, 1)],
    ),
    // 7  λ1 = μ1 + ν1
    (
        [Z, Z, Z, D(3, 3, 3), Z, D(3, 3, 3)],
        [Z, Z, D(3, 3, 3)],
        [Z, Z, D(3, 3, 3)],
    ),
    // 8  λ2 = μ1 + ν2
    (LAM_8, [Z, Z, D(3, 3, 3)], [D(3, 3, 3), D(1, 1, 1), Z]),
    // 9  λ2 = μ2 + ν1
    (LAM_8, [D(3, 3, 3), D(1, 1, 1), Z], [Z, Z, D(3, 3, 3)]),
    // 10 λ3 = μ1 + ν3
    (
        LAM_10,
        [P, Z, Dp(2, 2, 3)],
        [D(1, 1, 1), Dp(2, 2, 3), D(2, 2, 1)],
    ),
    // 11 λ3 = μ2 + ν2
    (
        [D(3, 3, 3), D(2, 2, 2), Z, D(3, 3, 3), D(2, 2, 2), Z],
        [D(3, 3, 2), D(2, 2, 3), Z],
        [D(3, 2, 3), D(2, 3, 2), Z],
    ),
    // 12 λ3 = μ3 + ν1
    (
        LAM_10,
        [D(1, 1, 1), Dp(2, 2, 3), D(2, 2, 1)],
        [P, Z, Dp(2, 2, 3)],
    ),
    // 13 λ3 = μ3 + ν3
    (
        [Z, D(1, 1, 1), Z, Z, D(1, 1, 1), Z],
        [Z, D(1, 1, 1), Z],
        [Z, D(1, 1, 1), Z],
    ),
    // 14 λ2 = μ3 + ν2
    (
        [D(3, 2, 3), Z, Z, D(3, 3, 3), Z, D(3, 2, 3)],
        [D(3, 2, 3), Z, D(3, 3, 3)],
        [Z, D(1, 1, 1), Z],
    ),
    // 15 λ2 = μ2 + ν3
    (
        [D(3, 3, 2), Z, Z, D(3, 3, 3), Z, D(3, 3, 2)],
        [Z, D(1, 1, 1), Z],
        [D(3, 3, 2), Z, D(3, 3, 3)],
    ),
    // 16 λ1 = μ3 + ν1
    (
        [
            D(3, 3, 3),
            D(2, 3, 2),
            Z,
            D(3, 2, 3),
            D(2, 2, 2),
            D(3, 2, 3),
        ],
        [Z, Mu12, Z],
        [D(3, 3, 3), D(2, 3, 2), D(3, 2, 3)],
    ),
    // 17 λ1 = μ2 + ν2
    (
        [
            D(1, 1, 1),
            Dm(2, 2, 3),
            Z,
            Dp(2, 2, 2),
            D(1, 1, 3),
            Dp(1, 2, 1),
        ],
        [Dm(1, 1, 2), Z, D(2, 2, 1)],
        [Dp(2, 1, 3), D(1, 2, 1), Lp23],
    ),
    // 18 λ1 = μ1 + ν3
    (
        [
            D(3, 3, 3),
            D(2, 2, 3),
            Z,
            D(3, 3, 2),
            D(2, 2, 2),
            D(3, 3, 2),
        ],
        [D(3, 3, 3), D(2, 2, 3), D(3, 3, 2)],
        [Z, Nu12, Z],
    ),
];

/// Strip positions `(row, block)` of the λ entries, in table order.
pub const LAMBDA_STRIPS: [(usize, usize); 6] = [(1, 3), (1, 2), (1, 1), (2, 3), (2, 2), (3, 3)];
/// `(i, j)` of the μ/ν entries: strip `i` of block `j − 1`.
pub const SMALL_STRIPS: [(usize, usize); 3] = [(1, 3), (1, 2), (2, 3)];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisionNumbers {
    /// `[n13, n12, n11, n23, n22, n33]`
    pub lambda: [u32; 6],
    /// `[n13, n12, n23]`
    pub mu: [u32; 3],
    pub nu: [u32; 3],
}

impl DivisionNumbers {
    pub fn zero() -> Self {
        DivisionNumbers {
            lambda: [0; 6],
            mu: [0; 3],
            nu: [0; 3],
        }
    }

    /// From the array notation `"a,b,c/d,e/f"` and `"a,b/c"`.
    pub fn parse(lambda: &str, mu: &str, nu: &str) -> Result<Self> {
        fn nums<const N: usize>(s: &str) -> Result<[u32; N]> {
            let v: Vec<u32> = s
                .split(['/', ','])
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| CoreError::InvalidArgument(format!("bad division numbers {s:?}")))?;
            v.try_into().map_err(|_| {
                CoreError::InvalidArgument(format!("expected {N} division numbers in {s:?}"))
            })
        }
        Ok(DivisionNumbers {
            lambda: nums(lambda)?,
            mu: nums(mu)?,
            nu: nums(nu)?,
        })
    }

    pub fn lambda_text(&self) -> String {
        let l = &self.lambda;
        format!("{},{},{}/{},{}/{}", l[0], l[1], l[2], l[3], l[4], l[5])
    }

    pub fn small_text(v: &[u32; 3]) -> String {
        format!("{},{}/{}", v[0], v[1], v[2])
    }

    /// `(Σn^λ, Σn^μ, Σn^ν)`.
    pub fn totals(&self) -> (u32, u32, u32) {
        (
            self.lambda.iter().sum(),
            self.mu.iter().sum(),
            self.nu.iter().sum(),
        )
    }

    pub fn balanced(&self) -> bool {
        let (l, m, n) = self.totals();
        l == m + n
    }
}

impl fmt::Display for DivisionNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "λ:[{}] μ:[{}] ν:[{}]",
            self.lambda_text(),
            Self::small_text(&self.mu),
            Self::small_text(&self.nu)
        )
    }
}

fn p3(p: &Partition) -> Result<[i64; 4]> {
    if p.len() > 3 {
        return Err(CoreError::OutsideP3);
    }
    // 1-based with a trailing zero for ξ_4
    Ok([0, p.part(1) as i64, p.part(2) as i64, p.part(3) as i64])
}

/// Width of λ's strip in row `i` of block `j`.
fn lambda_width(l: &[i64; 4], j: usize) -> i64 {
    l[j] - if j < 3 { l[j + 1] } else { 0 }
}

/// Width of the μ/ν strip `(i, j)`, which lies in block `j − 1`.
fn small_width(x: &[i64; 4], j: usize) -> i64 {
    x[j - 1] - x[j]
}

/// Division numbers of `case_id` for the triple.
pub fn division_numbers(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    case_id: u8,
    reading: impl Into<Reading>,
) -> Result<DivisionNumbers> {
    if !(1..=18).contains(&case_id) {
        return Err(CoreError::InvalidArgument(format!(
            "case {case_id} outside 1..=18"
        )));
    }
    let Reading { convention, table } = reading.into();
    match (table, case_id) {
        (TableVersion::Corrected, 6) => eval_row(&ROW_6, lambda, mu, nu, case_id, convention),
        (TableVersion::Corrected, 8) => eval_row(&ROW_8, lambda, mu, nu, case_id, convention),
        (TableVersion::Corrected, 9) => eval_row(&ROW_9, lambda, mu, nu, case_id, convention),
        // row 12 with μ and ν exchanged
        (TableVersion::Corrected, 10) => {
            let dn = eval_row(&TABLE[11], lambda, nu, mu, case_id, convention)?;
            Ok(DivisionNumbers {
                lambda: dn.lambda,
                mu: dn.nu,
                nu: dn.mu,
            })
        }
        (TableVersion::Corrected, 14 | 15) => {
            let (l, m, n) = TABLE[case_id as usize - 1];
            eval_row(&(l, n, m), lambda, mu, nu, case_id, convention)
        }
        _ => eval_row(
            &TABLE[case_id as usize - 1],
            lambda,
            mu,
            nu,
            case_id,
            convention,
        ),
    }
}

fn eval_row(
    row: &Row,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    case_id: u8,
    conv: Convention,
) -> Result<DivisionNumbers> {
    let (l, m, n) = (p3(lambda)?, p3(mu)?, p3(nu)?);
    let d = |i: u8, j: u8, k: u8| {
        let (a, b, c) = (l[i as usize], m[j as usize], n[k as usize]);
        match conv {
            Convention::Minus => (a - b - c).abs(),
            Convention::Plus => (a + b - c).abs(),
        }
    };
    let p = (l[3] - m[2] - n[3]).max(0);
    let eval = |e: E| match e {
        Z => 0,
        D(i, j, k) => d(i, j, k),
        Dm(i, j, k) => d(i, j, k) - p,
        Dp(i, j, k) => d(i, j, k) + p,
        P => p,
        Mu12 => m[1] - m[2],
        Nu12 => n[1] - n[2],
        Lp23 => l[2] - l[3] + p,
    };
    let (tl, tm, tn) = row;
    let check = |v: i64, width: i64, what: String| -> Result<u32> {
        if v < 0 || v > width {
            return Err(CoreError::ConventionViolation(format!(
                "case {case_id}: {what} = {v} outside [0, {width}]"
            )));
        }
        Ok(v as u32)
    };
    let mut dn = DivisionNumbers::zero();
    for (s, &(i, j)) in LAMBDA_STRIPS.iter().enumerate() {
        dn.lambda[s] = check(eval(tl[s]), lambda_width(&l, j), format!("λ n{i}{j}"))?;
    }
    for (s, &(i, j)) in SMALL_STRIPS.iter().enumerate() {
        dn.mu[s] = check(eval(tm[s]), small_width(&m, j), format!("μ n{i}{j}"))?;
        dn.nu[s] = check(eval(tn[s]), small_width(&n, j), format!("ν n{i}{j}"))?;
    }
    Ok(dn)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hook {
    Upper,
    Lower,
}

/// Hook type per box, row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub shape: Partition,
    pub rows: Vec<Vec<Hook>>,
}

impl Grid {
    pub fn filled(shape: &Partition, h: Hook) -> Self {
        Grid {
            shape: shape.clone(),
            rows: shape.parts().iter().map(|&w| vec![h; w as usize]).collect(),
        }
    }

    /// Parses `u`/`l` rows separated by `,` or ` / `.
    pub fn parse(shape: &Partition, s: &str) -> Result<Self> {
        let rows: Vec<Vec<Hook>> = s
            .split([',', '/'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.chars()
                    .map(|c| match c {
                        'u' => Ok(Hook::Upper),
                        'l' => Ok(Hook::Lower),
                        _ => Err(CoreError::InvalidArgument(format!("bad hook letter {c:?}"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let widths: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        if widths != shape.parts() {
            return Err(CoreError::InvalidArgument(format!(
                "grid {s:?} does not have shape {shape:?}"
            )));
        }
        Ok(Grid {
            shape: shape.clone(),
            rows,
        })
    }

    pub fn get(&self, c: Cell) -> Hook {
        self.rows[c.row as usize - 1][c.col as usize - 1]
    }

    fn set(&mut self, row: usize, col: i64, h: Hook) {
        self.rows[row - 1][col as usize - 1] = h;
    }

    pub fn count(&self, h: Hook) -> usize {
        self.rows.iter().flatten().filter(|&&x| x == h).count()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|h| match h {
                        Hook::Upper => 'u',
                        Hook::Lower => 'l',
                    })
                    .collect()
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Hook choices for the three diagrams of a triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookAssignment {
    pub lambda: Grid,
    pub mu: Grid,
    pub nu: Grid,
}

impl HookAssignment {
    /// Every hook standard: upper in `λ`, lower in `μ` and `ν`.
    pub fn standard(lambda: &Partition, mu: &Partition, nu: &Partition) -> Self {
        HookAssignment {
            lambda: Grid::filled(lambda, Hook::Upper),
            mu: Grid::filled(mu, Hook::Lower),
            nu: Grid::filled(nu, Hook::Lower),
        }
    }

    /// λ flips sit at the right end of each strip, μ/ν flips at the left end.
    pub fn from_division_numbers(
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        dn: &DivisionNumbers,
    ) -> Result<Self> {
        let mut a = Self::standard(lambda, mu, nu);
        let l = p3(lambda)?;
        for (s, &(i, j)) in LAMBDA_STRIPS.iter().enumerate() {
            let n = dn.lambda[s] as i64;
            if n > lambda_width(&l, j) {
                return Err(CoreError::ConventionViolation(format!(
                    "λ n{i}{j} = {n} exceeds its strip"
                )));
            }
            for col in l[j] - n + 1..=l[j] {
                a.lambda.set(i, col, Hook::Lower);
            }
        }
        for (grid, p, counts) in [(&mut a.mu, mu, &dn.mu), (&mut a.nu, nu, &dn.nu)] {
            let x = p3(p)?;
            for (s, &(i, j)) in SMALL_STRIPS.iter().enumerate() {
                let n = counts[s] as i64;
                if n > small_width(&x, j) {
                    return Err(CoreError::ConventionViolation(format!(
                        "n{i}{j} = {n} exceeds its strip"
                    )));
                }
                for col in x[j] + 1..=x[j] + n {
                    grid.set(i, col, Hook::Upper);
                }
            }
        }
        Ok(a)
    }

    pub fn parse(
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        grids: [&str; 3],
    ) -> Result<Self> {
        Ok(HookAssignment {
            lambda: Grid::parse(lambda, grids[0])?,
            mu: Grid::parse(mu, grids[1])?,
            nu: Grid::parse(nu, grids[2])?,
        })
    }

    /// Flipped boxes: lower hooks in `λ`, upper hooks in `μ`, `ν`.
    pub fn flip_counts(&self) -> (usize, usize, usize) {
        (
            self.lambda.count(Hook::Lower),
            self.mu.count(Hook::Upper),
            self.nu.count(Hook::Upper),
        )
    }
}

fn hook_poly(p: &Partition, c: Cell, h: Hook) -> Poly {
    let (a, l, _) = p.arm_leg_hook(c).expect("cell of its own diagram");
    match h {
        Hook::Upper => UniPoly::from_ints(&[l as i64, a as i64 + 1]),
        Hook::Lower => UniPoly::from_ints(&[l as i64 + 1, a as i64]),
    }
}

/// Product of the chosen hooks over all boxes of all three diagrams.
pub fn g_product(a: &HookAssignment) -> Poly {
    let mut g = Poly::one();
    for grid in [&a.lambda, &a.mu, &a.nu] {
        for c in grid.shape.cells() {
            g = &g * &hook_poly(&grid.shape, c, grid.get(c));
        }
    }
    g
}

pub fn stanley_g_product(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    dn: &DivisionNumbers,
) -> Result<Poly> {
    Ok(g_product(&HookAssignment::from_division_numbers(
        lambda, mu, nu, dn,
    )?))
}

/// `h^{ij} = ξ_i − ξ_j + (j−i)r`.
fn anchor(x: &[i64; 4], i: usize, j: usize) -> LinExpr {
    LinExpr::ints(x[i] - x[j], (j - i) as i64)
}

/// Product of strip terms `[h^{ij}_λ; n]` and `[−h^{ij}_ξ; n]`, in `α`.
pub fn evaluate_d_anchors(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    dn: &DivisionNumbers,
) -> Result<RF> {
    let l = p3(lambda)?;
    let mut acc = RatFunc1::<R>::one();
    for (s, &(i, j)) in LAMBDA_STRIPS.iter().enumerate() {
        acc = &acc * &strip_term(&anchor(&l, i, j), dn.lambda[s]);
    }
    for (p, counts) in [(mu, &dn.mu), (nu, &dn.nu)] {
        let x = p3(p)?;
        for (s, &(i, j)) in SMALL_STRIPS.iter().enumerate() {
            acc = &acc * &strip_term(&anchor(&x, i, j).neg(), counts[s]);
        }
    }
    Ok(r_to_alpha(&acc))
}

/// Product of per-box flip ratios `φ(α−1; h*_λ)` and `φ(α−1; −h^ξ_*)`.
pub fn evaluate_d_boxes(a: &HookAssignment) -> Result<RF> {
    let x = RF::from_poly(UniPoly::from_ints(&[-1, 1]));
    let mut acc = RF::one();
    for c in a.lambda.shape.cells() {
        if a.lambda.get(c) == Hook::Lower {
            let h = RF::from_poly(hook_poly(&a.lambda.shape, c, Hook::Upper));
            acc = &acc * &phi(&x, &[h])?;
        }
    }
    for grid in [&a.mu, &a.nu] {
        for c in grid.shape.cells() {
            if grid.get(c) == Hook::Upper {
                let h = RF::from_poly(hook_poly(&grid.shape, c, Hook::Lower));
                acc = &acc * &phi(&x, &[-h])?;
            }
        }
    }
    Ok(acc)
}

/// `d^λ_{μν}` by both the anchor product and the box product, which must
/// agree.
pub fn evaluate_d(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    dn: &DivisionNumbers,
) -> Result<RF> {
    let a = evaluate_d_anchors(lambda, mu, nu, dn)?;
    let b = evaluate_d_boxes(&HookAssignment::from_division_numbers(lambda, mu, nu, dn)?)?;
    if a != b {
        return Err(CoreError::PathDisagreement);
    }
    Ok(a)
}

/// Strips the third-column blocks: `c^λ_{μν} = c^{λ−ω^μ_3−ω^ν_3}_{μ−ω^μ_3, ν−ω^ν_3}`.
pub fn reduce_3to2(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<(Partition, Partition, Partition)> {
    if lambda.len() > 3 || mu.len() > 3 || nu.len() > 3 {
        return Err(CoreError::OutsideP3);
    }
    let (m3, n3) = (mu.part(3), nu.part(3));
    Ok((
        lambda.minus_columns(3, m3 + n3)?,
        mu.minus_columns(3, m3)?,
        nu.minus_columns(3, n3)?,
    ))
}

/// Nonzero terms of both sides of the associativity identity
/// `Σ_κ c^κ_{μζ} c^λ_{κε} = Σ_η c^η_{ζε} c^λ_{μη}`.
pub type PathTerms = (Vec<(Partition, RF)>, Vec<(Partition, RF)>);

pub fn minimal_path_terms(
    lambda: &Partition,
    mu: &Partition,
    zeta: &Partition,
    eps: &Partition,
) -> Result<PathTerms> {
    let n = lambda.len().max(1);
    let mut left = Vec::new();
    for (kappa, c) in jack::product_coeffs(mu, zeta, n)?.iter() {
        let v = c * &jack::lr_coeff_n(lambda, kappa, eps, n)?;
        if !v.is_zero() {
            left.push((kappa.clone(), v));
        }
    }
    let mut right = Vec::new();
    for (eta, c) in jack::product_coeffs(zeta, eps, n)?.iter() {
        let v = c * &jack::lr_coeff_n(lambda, mu, eta, n)?;
        if !v.is_zero() {
            right.push((eta.clone(), v));
        }
    }
    Ok((left, right))
}

pub fn minimal_path_check(
    lambda: &Partition,
    mu: &Partition,
    zeta: &Partition,
    eps: &Partition,
) -> Result<bool> {
    let (l, r) = minimal_path_terms(lambda, mu, zeta, eps)?;
    let sum = |v: &[(Partition, RF)]| v.iter().fold(RF::zero(), |a, (_, x)| &a + x);
    Ok(sum(&l) == sum(&r))
}

/// Outcome of one division-number row on a triple.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseOutcome {
    pub case_id: u8,
    pub division_numbers: Option<DivisionNumbers>,
    pub d: Option<RF>,
    pub g: Option<Poly>,
    pub error: Option<CoreError>,
    pub match_c: bool,
    pub match_g: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TripleReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub lr_count: u64,
    pub minimal: bool,
    pub facets: Vec<u8>,
    /// Canonical (smallest) case id for minimal triples.
    pub case: Option<u8>,
    pub division_numbers: Option<DivisionNumbers>,
    pub d: Option<RF>,
    pub c_oracle: RF,
    pub g_formula: Option<Poly>,
    pub g_oracle: Option<Poly>,
    pub match_c: bool,
    pub match_g: bool,
    pub balance: Option<bool>,
    /// Anchor and box evaluations disagreed for the canonical case.
    pub path_disagreement: bool,
    /// First error from the canonical case, if any.
    pub error: Option<CoreError>,
    /// Every facet's division-number row evaluated on this triple.
    pub all_cases: Vec<CaseOutcome>,
}

impl TripleReport {
    /// Every facet's row reproduces the oracle coefficient.
    pub fn all_cases_agree(&self) -> bool {
        self.all_cases.iter().all(|c| c.match_c)
    }
}

fn run_case(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    case_id: u8,
    reading: Reading,
    c: &RF,
    g: Option<&Poly>,
) -> CaseOutcome {
    let mut out = CaseOutcome {
        case_id,
        division_numbers: None,
        d: None,
        g: None,
        error: None,
        match_c: false,
        match_g: false,
    };
    let dn = match division_numbers(lambda, mu, nu, case_id, reading) {
        Ok(dn) => dn,
        Err(e) => {
            out.error = Some(e);
            return out;
        }
    };
    out.division_numbers = Some(dn.clone());
    match evaluate_d(lambda, mu, nu, &dn) {
        Ok(d) => {
            out.match_c = &d == c;
            out.d = Some(d);
        }
        Err(e) => out.error = Some(e),
    }
    if let Ok(gf) = stanley_g_product(lambda, mu, nu, &dn) {
        out.match_g = g == Some(&gf);
        out.g = Some(gf);
    }
    out
}

pub fn verify_triple(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<TripleReport> {
    verify_triple_with(lambda, mu, nu, Convention::Minus)
}

pub fn verify_triple_with(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    reading: impl Into<Reading>,
) -> Result<TripleReport> {
    let reading = reading.into();
    let count = lr_count(lambda, mu, nu);
    let in_p3 = lambda.len() <= 3 && mu.len() <= 3 && nu.len() <= 3;
    // boundary triples with longer λ are reported, never classified
    if !in_p3 && count == 1 {
        return Err(CoreError::OutsideP3);
    }
    let facets = if in_p3 {
        horn_facets(lambda, mu, nu)?.equalities
    } else {
        vec![]
    };
    let n = lambda.len().max(3);
    let c_oracle = jack::lr_coeff_n(lambda, mu, nu, n)?;
    let g_oracle = if count > 0 {
        Some(jack::g_from_c(lambda, mu, nu, &c_oracle)?)
    } else {
        None
    };
    let mut report = TripleReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        lr_count: count,
        minimal: count == 1,
        facets,
        case: None,
        division_numbers: None,
        d: None,
        c_oracle,
        g_formula: None,
        g_oracle,
        match_c: false,
        match_g: false,
        balance: None,
        path_disagreement: false,
        error: None,
        all_cases: Vec::new(),
    };
    if !report.minimal {
        return Ok(report);
    }
    let cases = classify_cases(lambda, mu, nu)?;
    report.all_cases = cases
        .iter()
        .map(|&k| {
            run_case(
                lambda,
                mu,
                nu,
                k,
                reading,
                &report.c_oracle,
                report.g_oracle.as_ref(),
            )
        })
        .collect();
    let first = report.all_cases[0].clone();
    report.case = Some(first.case_id);
    report.balance = first
        .division_numbers
        .as_ref()
        .map(DivisionNumbers::balanced);
    report.division_numbers = first.division_numbers;
    report.d = first.d;
    report.g_formula = first.g;
    report.match_c = first.match_c;
    report.match_g = first.match_g;
    report.path_disagreement = first.error == Some(CoreError::PathDisagreement);
    report.error = first.error;
    Ok(report)
}

/// Hook-product normalization `H*_λ H^μ_* H^ν_*`.
pub fn g_normalizer(lambda: &Partition, mu: &Partition, nu: &Partition) -> Poly {
    &(&hook_products(lambda).upper * &hook_products(mu).lower) * &hook_products(nu).lower
}

/// Value of `d` at `α = 1`.
pub fn at_alpha_one(d: &RF) -> Result<BigRational> {
    Ok(d.eval(&BigRational::from_integer(1.into()))?)
}

/// Division numbers printed as an alternative for the `(8,7,4),(6,3),(5,5)`
/// example, with their grids.
pub fn fixture_874() -> (DivisionNumbers, [&'static str; 3]) {
    (
        DivisionNumbers::parse("3,2,0/2,2/3", "2,3/2", "1,0/4").expect("literal"),
        ["ulllullu / uullull / ulll", "uuluuu / uul", "ullll / uuuul"],
    )
}

/// Printed grids for `(4,2,2),(3,2,1),(1,1)` and its transpose.
pub const FIXTURE_422: [&str; 3] = ["uuuu,ul,uu", "lll,lu,l", "l,l"];
pub const FIXTURE_3311: [&str; 3] = ["lll,lul,l,l", "uuu,ul,u", "uu"];

/// Grids for `(2,2,2,1,1),(2,1,1),(2,1,1)` with `?` at six boxes; exactly
/// one of them is a lower hook.
pub const FIXTURE_22211: [&str; 3] = ["ll,ll,u?,l,?", "u?,l,?", "u?,l,?"];

/// The six completions of [`FIXTURE_22211`].
pub fn fixture_22211_completions() -> Vec<[String; 3]> {
    let total: usize = FIXTURE_22211.iter().map(|g| g.matches('?').count()).sum();
    (0..total)
        .map(|which| {
            let mut k = 0;
            FIXTURE_22211.map(|g| {
                g.chars()
                    .map(|c| {
                        if c == '?' {
                            k += 1;
                            if k - 1 == which {
                                'l'
                            } else {
                                'u'
                            }
                        } else {
                            c
                        }
                    })
                    .collect()
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use jlk_algebra::int;

    fn p(v: &[u32]) -> Partition {
        Partition::of(v)
    }

    fn rf(n: &[i64], d: &[i64]) -> RF {
        RF::new(UniPoly::from_ints(n), UniPoly::from_ints(d)).unwrap()
    }

    #[test]
    fn case4_examples() {
        let (l, m, n) = (p(&[4, 2, 2]), p(&[3, 2, 1]), p(&[1, 1]));
        let dn = division_numbers(&l, &m, &n, 4, Convention::Minus).unwrap();
        assert_eq!(
            dn,
            DivisionNumbers::parse("0,0,0/1,0/0", "0,0/0", "0,0/1").unwrap()
        );
        assert_eq!(evaluate_d(&l, &m, &n, &dn).unwrap(), rf(&[0, 2], &[1, 1]));
        assert!(dn.balanced());

        let (l, m, n) = (p(&[8, 7, 4]), p(&[6, 3]), p(&[5, 5]));
        let dn = division_numbers(&l, &m, &n, 4, Convention::Minus).unwrap();
        assert_eq!(
            dn,
            DivisionNumbers::parse("3,2,0/1,2/3", "2,3/2", "0,0/4").unwrap()
        );
        assert_eq!(dn.totals(), (11, 7, 4));
        let (alt, grids) = fixture_874();
        let a = HookAssignment::from_division_numbers(&l, &m, &n, &alt).unwrap();
        assert_eq!(a.lambda.to_string(), grids[0]);
        assert_eq!(a.mu.to_string(), grids[1]);
        assert_eq!(a.nu.to_string(), grids[2]);
        assert_eq!(
            evaluate_d(&l, &m, &n, &alt).unwrap(),
            evaluate_d(&l, &m, &n, &dn).unwrap()
        );
    }

    #[test]
    fn trivial_cases() {
        let (l, m, n) = (p(&[3, 1]), p(&[3, 1]), p(&[]));
        let r = verify_triple(&l, &m, &n).unwrap();
        assert!(r.all_cases_agree());
        assert!(r.c_oracle.is_one());
        assert!(evaluate_d(&l, &m, &n, &DivisionNumbers::zero())
            .unwrap()
            .is_one());
        let g = stanley_g_product(&p(&[1]), &p(&[1]), &p(&[]), &DivisionNumbers::zero()).unwrap();
        assert_eq!(g, UniPoly::from_ints(&[0, 1]));
    }

    #[test]
    fn out_of_range_is_an_error() {
        assert!(matches!(
            division_numbers(
                &p(&[4, 2, 2]),
                &p(&[3, 2, 1]),
                &p(&[1, 1]),
                4,
                Convention::Plus
            ),
            Err(CoreError::ConventionViolation(_)) | Ok(_)
        ));
        assert!(
            division_numbers(&p(&[1, 1, 1, 1]), &p(&[]), &p(&[]), 1, Convention::Minus).is_err()
        );
    }

    #[test]
    fn example_grids() {
        let (l, m, n) = (p(&[4, 2, 2]), p(&[3, 2, 1]), p(&[1, 1]));
        let printed = HookAssignment::parse(&l, &m, &n, FIXTURE_422).unwrap();
        let table = HookAssignment::from_division_numbers(
            &l,
            &m,
            &n,
            &division_numbers(&l, &m, &n, 4, Convention::Minus).unwrap(),
        )
        .unwrap();
        assert_eq!(table.lambda, printed.lambda);
        assert_eq!(g_product(&printed), g_product(&table));
        assert_eq!(
            evaluate_d_boxes(&printed).unwrap(),
            evaluate_d_boxes(&table).unwrap()
        );
    }

    #[test]
    fn reductions() {
        let r = reduce_3to2(&p(&[4, 2, 2]), &p(&[3, 2, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(r, (p(&[3, 1, 1]), p(&[2, 1]), p(&[1, 1])));
        let r = reduce_3to2(&p(&[3, 3, 3]), &p(&[1, 1, 1]), &p(&[2, 2, 2])).unwrap();
        assert_eq!(r, (p(&[]), p(&[]), p(&[])));
        assert_eq!(
            reduce_3to2(&p(&[5, 1]), &p(&[3, 1]), &p(&[2])).unwrap(),
            (p(&[5, 1]), p(&[3, 1]), p(&[2]))
        );
        assert!(reduce_3to2(&p(&[2, 2, 1]), &p(&[1, 1, 1]), &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn report_examples() {
        let r = verify_triple(&p(&[4, 2, 2]), &p(&[3, 2, 1]), &p(&[1, 1])).unwrap();
        assert!(r.minimal && r.match_c && r.match_g);
        assert_eq!(r.case, Some(4));
        assert_eq!(r.balance, Some(true));
        let r = verify_triple(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap();
        assert!(!r.minimal);
        assert_eq!(r.lr_count, 2);
        assert!(r.d.is_none());
        assert_eq!(at_alpha_one(&r.c_oracle).unwrap(), int(2));
        let r = verify_triple(&p(&[5, 3, 2, 1]), &p(&[3, 2, 1]), &p(&[2, 2, 1])).unwrap();
        assert!(!r.minimal && r.facets.is_empty());
        assert_eq!(r.lr_count, 2);
    }

    #[test]
    fn table_versions() {
        let (l, m, n) = (p(&[3, 3, 1]), p(&[2, 1]), p(&[3, 1]));
        let printed = verify_triple_with(&l, &m, &n, Reading::default()).unwrap();
        let corrected = Reading {
            table: TableVersion::Corrected,
            ..Default::default()
        };
        let fixed = verify_triple_with(&l, &m, &n, corrected).unwrap();
        assert_eq!(printed.case, fixed.case);
        assert!(!printed.match_c);
        assert!(fixed.match_c && fixed.match_g && fixed.balance == Some(true));
        // rows outside the corrected set are shared
        let t = (p(&[4, 2, 2]), p(&[3, 2, 1]), p(&[1, 1]));
        assert_eq!(
            division_numbers(&t.0, &t.1, &t.2, 4, Reading::default()).unwrap(),
            division_numbers(&t.0, &t.1, &t.2, 4, corrected).unwrap()
        );
        assert_eq!(
            "corrected".parse::<TableVersion>().unwrap(),
            TableVersion::Corrected
        );
        assert!("errata".parse::<TableVersion>().is_err());
    }
}
