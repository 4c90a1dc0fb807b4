//! JSON and text renderings of reports.

use std::fmt::Write as _;

use jlk_algebra::{BiPoly, BigInt, BigRational, Indeterminate, RatFunc1, RatFunc2, UniPoly};
use jlk_core::horn::{FillingProfile, Triple};
use jlk_core::macdonald::TripleReportQT;
use jlk_core::stanley::{DivisionNumbers, HookAssignment, TripleReport};
use jlk_core::sweep::{SweepSummary, SweepSummaryQT};
use jlk_core::Partition;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::Value;

fn int(b: &BigInt) -> Value {
    Value::Number(b.to_string().parse().expect("integer literal"))
}

fn parts(p: &Partition) -> Vec<u32> {
    p.parts().to_vec()
}

fn triple_json(t: &Triple) -> [Vec<u32>; 3] {
    [parts(&t.0), parts(&t.1), parts(&t.2)]
}

/// Divides out the common content and makes the leading denominator
/// coefficient positive.
fn normalize(mut num: Vec<BigInt>, mut den: Vec<BigInt>) -> (Vec<BigInt>, Vec<BigInt>) {
    let g = num.iter().chain(&den).fold(BigInt::zero(), |a, c| a.gcd(c));
    let flip = den
        .iter()
        .rev()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.is_negative());
    if !g.is_zero() && !g.is_one() {
        num.iter_mut()
            .chain(den.iter_mut())
            .for_each(|c| *c = &*c / &g);
    }
    if flip {
        num.iter_mut().chain(den.iter_mut()).for_each(|c| *c = -&*c);
    }
    (num, den)
}

fn scale_all(v: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    v.iter().map(|c| c * k).collect()
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct JsonRat {
    pub num: Vec<Value>,
    pub den: Vec<Value>,
}

/// `num` and `den` as ascending integer coefficient arrays.
pub fn rat1<V: Indeterminate>(f: &RatFunc1<V>) -> JsonRat {
    let (ln, n) = f.num().integer_form();
    let (ld, d) = f.den().integer_form();
    let (n, d) = normalize(scale_all(&n, &ld), scale_all(&d, &ln));
    JsonRat {
        num: n.iter().map(int).collect(),
        den: d.iter().map(int).collect(),
    }
}

fn bi_terms(p: &BiPoly) -> (BigInt, Vec<(u32, u32, BigRational)>) {
    let l = p
        .terms()
        .values()
        .fold(BigInt::one(), |a, c| a.lcm(c.denom()));
    (
        l,
        p.terms()
            .iter()
            .map(|(&(i, j), c)| (i, j, c.clone()))
            .collect(),
    )
}

/// Bivariate version: each entry is `[q_exp, t_exp, coeff]`.
pub fn rat2(f: &RatFunc2) -> JsonRat {
    let (ln, n) = bi_terms(f.num());
    let (ld, d) = bi_terms(f.den());
    let k = ln.lcm(&ld);
    let to_int = |v: &[(u32, u32, BigRational)]| -> Vec<(u32, u32, BigInt)> {
        v.iter()
            .map(|(i, j, c)| {
                (
                    *i,
                    *j,
                    (c * BigRational::from_integer(k.clone())).to_integer(),
                )
            })
            .collect()
    };
    let (n, d) = (to_int(&n), to_int(&d));
    let g = n.iter().chain(&d).fold(BigInt::zero(), |a, t| a.gcd(&t.2));
    let row = |(i, j, c): &(u32, u32, BigInt)| {
        let c = if g.is_zero() { c.clone() } else { c / &g };
        Value::Array(vec![Value::from(*i), Value::from(*j), int(&c)])
    };
    JsonRat {
        num: n.iter().map(row).collect(),
        den: d.iter().map(row).collect(),
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct JsonPoly {
    pub coeffs: Vec<Value>,
    pub den: Value,
}

pub fn poly<V: Indeterminate>(p: &UniPoly<V>) -> JsonPoly {
    let (l, c) = p.integer_form();
    JsonPoly {
        coeffs: c.iter().map(int).collect(),
        den: int(&l),
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct JsonDivision {
    pub lambda: [u32; 6],
    pub mu: [u32; 3],
    pub nu: [u32; 3],
}

impl From<&DivisionNumbers> for JsonDivision {
    fn from(d: &DivisionNumbers) -> Self {
        JsonDivision {
            lambda: d.lambda,
            mu: d.mu,
            nu: d.nu,
        }
    }
}

/// One verified triple. The first twelve keys are the stable schema.
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct JsonReport {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub nu: Vec<u32>,
    pub minimal: bool,
    pub facets: Vec<u8>,
    pub case: Option<u8>,
    pub division_numbers: Option<JsonDivision>,
    pub c: JsonRat,
    pub g: Option<JsonPoly>,
    pub match_c: bool,
    pub match_g: bool,
    pub balance: Option<bool>,
    pub flavor: &'static str,
    pub lr_count: u64,
    pub transpose_ok: Option<bool>,
    pub error: Option<String>,
    #[serde(skip)]
    pub c_text: String,
    #[serde(skip)]
    pub g_text: Option<String>,
}

impl JsonReport {
    pub fn jack(r: &TripleReport) -> Self {
        JsonReport {
            lambda: parts(&r.lambda),
            mu: parts(&r.mu),
            nu: parts(&r.nu),
            minimal: r.minimal,
            facets: r.facets.clone(),
            case: r.case,
            division_numbers: r.division_numbers.as_ref().map(Into::into),
            c: rat1(&r.c_oracle),
            g: r.g_oracle.as_ref().map(poly),
            match_c: r.match_c,
            match_g: r.match_g,
            balance: r.balance,
            flavor: "jack",
            lr_count: r.lr_count,
            transpose_ok: None,
            error: r.error.as_ref().map(ToString::to_string),
            c_text: r.c_oracle.to_string(),
            g_text: r.g_oracle.as_ref().map(ToString::to_string),
        }
    }

    pub fn qt(r: &TripleReportQT, facets: Vec<u8>, lr_count: u64) -> Self {
        JsonReport {
            lambda: parts(&r.lambda),
            mu: parts(&r.mu),
            nu: parts(&r.nu),
            minimal: r.minimal,
            facets,
            case: r.case,
            division_numbers: r.division_numbers.as_ref().map(Into::into),
            c: rat2(&r.c_oracle),
            g: None,
            match_c: r.match_c,
            match_g: false,
            balance: r.division_numbers.as_ref().map(DivisionNumbers::balanced),
            flavor: "qt",
            lr_count,
            transpose_ok: r.transpose_ok,
            error: r.error.as_ref().map(ToString::to_string),
            c_text: r.c_oracle.to_string(),
            g_text: None,
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let p = |v: &[u32]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(
            s,
            "triple    ({}) ({}) ({})",
            p(&self.lambda),
            p(&self.mu),
            p(&self.nu)
        );
        let _ = writeln!(s, "minimal   {} (lr_count {})", self.minimal, self.lr_count);
        let _ = writeln!(s, "facets    {:?}", self.facets);
        if let Some(c) = self.case {
            let _ = writeln!(s, "case      {c}");
        }
        if let Some(d) = &self.division_numbers {
            let _ = writeln!(s, "division  λ:{:?} μ:{:?} ν:{:?}", d.lambda, d.mu, d.nu);
        }
        let _ = writeln!(s, "c         {}", self.c_text);
        if let Some(g) = &self.g_text {
            let _ = writeln!(s, "g         {g}");
        }
        let _ = writeln!(s, "match_c   {}", self.match_c);
        if self.flavor == "jack" {
            let _ = writeln!(s, "match_g   {}", self.match_g);
        }
        if let Some(b) = self.balance {
            let _ = writeln!(s, "balance   {b}");
        }
        if let Some(t) = self.transpose_ok {
            let _ = writeln!(s, "transpose {t}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error     {e}");
        }
        s
    }
}

#[derive(Serialize)]
struct CaseRow {
    case: u8,
    canonical: u64,
    canonical_mismatches: u64,
    on_facet: u64,
    facet_mismatches: u64,
    unbalanced: u64,
    out_of_range: u64,
}

#[derive(Serialize)]
struct SweepJson {
    flavor: &'static str,
    max_weight: u32,
    d_convention: String,
    table: String,
    triples: u64,
    mismatches: usize,
    per_case: Vec<CaseRow>,
    c_mismatches: Vec<[Vec<u32>; 3]>,
    g_mismatches: Vec<[Vec<u32>; 3]>,
    path_disagreements: Vec<[Vec<u32>; 3]>,
    balance_violations: Vec<[Vec<u32>; 3]>,
    range_violations: Vec<[Vec<u32>; 3]>,
    facet_disagreements: usize,
    alpha_one_failures: Vec<[Vec<u32>; 3]>,
}

fn triples(v: &[Triple]) -> Vec<[Vec<u32>; 3]> {
    v.iter().map(triple_json).collect()
}

pub fn sweep_json(s: &SweepSummary) -> Value {
    let j = SweepJson {
        flavor: "jack",
        max_weight: s.max_weight,
        d_convention: s.reading.convention.to_string(),
        table: s.reading.table.to_string(),
        triples: s.triples,
        mismatches: s.mismatches(),
        per_case: s
            .per_case
            .iter()
            .map(|(&case, st)| CaseRow {
                case,
                canonical: st.canonical,
                canonical_mismatches: st.canonical_mismatches,
                on_facet: st.on_facet,
                facet_mismatches: st.facet_mismatches,
                unbalanced: st.unbalanced,
                out_of_range: st.out_of_range,
            })
            .collect(),
        c_mismatches: triples(&s.c_mismatches),
        g_mismatches: triples(&s.g_mismatches),
        path_disagreements: triples(&s.path_disagreements),
        balance_violations: triples(&s.balance_violations),
        range_violations: triples(&s.range_violations),
        facet_disagreements: s.facet_disagreements.len(),
        alpha_one_failures: triples(&s.alpha_one_failures),
    };
    serde_json::to_value(j).expect("serializable")
}

pub fn sweep_text(s: &SweepSummary) -> String {
    let mut o = String::new();
    let _ = writeln!(
        o,
        "sweep max_weight={} d_convention={} table={}",
        s.max_weight, s.reading.convention, s.reading.table
    );
    let _ = writeln!(o, "triples checked      {}", s.triples);
    let _ = writeln!(
        o,
        "case  canonical  mismatched  on_facet  facet_mismatched  unbalanced"
    );
    for (k, st) in &s.per_case {
        let _ = writeln!(
            o,
            "{k:>4}  {:>9}  {:>10}  {:>8}  {:>16}  {:>10}",
            st.canonical, st.canonical_mismatches, st.on_facet, st.facet_mismatches, st.unbalanced
        );
    }
    let _ = writeln!(o, "c mismatches         {}", s.c_mismatches.len());
    let _ = writeln!(o, "g mismatches         {}", s.g_mismatches.len());
    let _ = writeln!(o, "path disagreements   {}", s.path_disagreements.len());
    let _ = writeln!(o, "balance violations   {}", s.balance_violations.len());
    let _ = writeln!(o, "facet disagreements  {}", s.facet_disagreements.len());
    let _ = writeln!(o, "wall time            {:.2}s", s.elapsed.as_secs_f64());
    for t in &s.c_mismatches {
        let _ = writeln!(o, "MISMATCH {} | {} | {}", t.0, t.1, t.2);
    }
    o
}

#[derive(Serialize)]
struct CaseRowQT {
    case: u8,
    canonical: u64,
    canonical_mismatches: u64,
}

#[derive(Serialize)]
struct SweepJsonQT {
    flavor: &'static str,
    max_weight: u32,
    triples: u64,
    mismatches: usize,
    per_case: Vec<CaseRowQT>,
    c_mismatches: Vec<[Vec<u32>; 3]>,
}

pub fn sweep_qt_json(s: &SweepSummaryQT) -> Value {
    let j = SweepJsonQT {
        flavor: "qt",
        max_weight: s.max_weight,
        triples: s.triples,
        mismatches: s.mismatches.len(),
        per_case: s
            .per_case
            .iter()
            .map(|(&case, &(n, bad))| CaseRowQT {
                case,
                canonical: n,
                canonical_mismatches: bad,
            })
            .collect(),
        c_mismatches: triples(&s.mismatches),
    };
    serde_json::to_value(j).expect("serializable")
}

pub fn sweep_qt_text(s: &SweepSummaryQT) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "qt sweep max_weight={}", s.max_weight);
    let _ = writeln!(o, "triples checked  {}", s.triples);
    for (k, (n, bad)) in &s.per_case {
        let _ = writeln!(o, "case {k:>2}  {n:>6} checked  {bad:>4} mismatched");
    }
    let _ = writeln!(o, "mismatches       {}", s.mismatches.len());
    let _ = writeln!(o, "wall time        {:.2}s", s.elapsed.as_secs_f64());
    for t in &s.mismatches {
        let _ = writeln!(o, "MISMATCH {} | {} | {}", t.0, t.1, t.2);
    }
    o
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct JsonFilling {
    pub a1: u32,
    pub b1: u32,
    pub b2: u32,
    pub c1: u32,
    pub c2: u32,
    pub o1: u32,
    pub o2: u32,
    pub g1: u32,
    pub g2: u32,
    pub mu3: u32,
    pub nu3: u32,
    pub kind: String,
    pub facet: u8,
}

impl From<&FillingProfile> for JsonFilling {
    fn from(f: &FillingProfile) -> Self {
        JsonFilling {
            a1: f.a1,
            b1: f.b1,
            b2: f.b2,
            c1: f.c1,
            c2: f.c2,
            o1: f.o1,
            o2: f.o2,
            g1: f.g1,
            g2: f.g2,
            mu3: f.mu3,
            nu3: f.nu3,
            kind: format!("{:?}-{:?} {:?}", f.letter, f.roman, f.overlap),
            facet: f.filling_facet(),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct JsonGrids {
    pub lambda: String,
    pub mu: String,
    pub nu: String,
}

impl From<&HookAssignment> for JsonGrids {
    fn from(a: &HookAssignment) -> Self {
        JsonGrids {
            lambda: a.lambda.to_string(),
            mu: a.mu.to_string(),
            nu: a.nu.to_string(),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct JsonAlternative {
    pub division_numbers: JsonDivision,
    pub grids: JsonGrids,
    pub same_value: bool,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct JsonClassify {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub nu: Vec<u32>,
    pub horn_feasible: bool,
    pub facets: Vec<u8>,
    pub minimal: bool,
    pub lr_count: u64,
    pub cases: Vec<u8>,
    pub case: Option<u8>,
    pub filling: Option<JsonFilling>,
    pub division_numbers: Option<JsonDivision>,
    pub grids: Option<JsonGrids>,
    pub alternative: Option<JsonAlternative>,
    pub error: Option<String>,
}

impl JsonClassify {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let p = |v: &[u32]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(
            s,
            "triple    ({}) ({}) ({})",
            p(&self.lambda),
            p(&self.mu),
            p(&self.nu)
        );
        let _ = writeln!(
            s,
            "horn      feasible={} facets={:?}",
            self.horn_feasible, self.facets
        );
        let _ = writeln!(s, "minimal   {} (lr_count {})", self.minimal, self.lr_count);
        if let Some(c) = self.case {
            let _ = writeln!(s, "cases     {:?} (canonical {c})", self.cases);
        }
        if let Some(f) = &self.filling {
            let _ = writeln!(
                s,
                "filling   {} a1={} b1={} b2={} c1={} c2={} o1={} o2={} g1={} g2={} -> facet {}",
                f.kind, f.a1, f.b1, f.b2, f.c1, f.c2, f.o1, f.o2, f.g1, f.g2, f.facet
            );
        }
        if let Some(d) = &self.division_numbers {
            let _ = writeln!(s, "division  λ:{:?} μ:{:?} ν:{:?}", d.lambda, d.mu, d.nu);
        }
        if let Some(g) = &self.grids {
            let _ = writeln!(s, "λ grid    {}", g.lambda);
            let _ = writeln!(s, "μ grid    {}", g.mu);
            let _ = writeln!(s, "ν grid    {}", g.nu);
        }
        if let Some(a) = &self.alternative {
            let d = &a.division_numbers;
            let _ = writeln!(
                s,
                "alternative division  λ:{:?} μ:{:?} ν:{:?}",
                d.lambda, d.mu, d.nu
            );
            let _ = writeln!(s, "alternative λ grid    {}", a.grids.lambda);
            let _ = writeln!(s, "alternative μ grid    {}", a.grids.mu);
            let _ = writeln!(s, "alternative ν grid    {}", a.grids.nu);
            let _ = writeln!(s, "alternative gives the same value: {}", a.same_value);
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error     {e}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use jlk_algebra::{int, rat, Alpha};

    #[test]
    fn rational_arrays() {
        // (16α+32α²)/3 over (1+α)/2
        let f = RatFunc1::<Alpha>::new(
            UniPoly::from_coeffs(vec![int(0), rat(16, 3), rat(32, 3)]),
            UniPoly::from_coeffs(vec![rat(1, 2), rat(1, 2)]),
        )
        .unwrap();
        let j = serde_json::to_string(&rat1(&f)).unwrap();
        assert_eq!(j, r#"{"num":[0,32,64],"den":[3,3]}"#);
        let p = UniPoly::<Alpha>::from_coeffs(vec![int(0), rat(16, 3), rat(32, 3)]);
        assert_eq!(
            serde_json::to_string(&poly(&p)).unwrap(),
            r#"{"coeffs":[0,16,32],"den":3}"#
        );
    }

    #[test]
    fn bivariate_arrays() {
        let f = RatFunc2::new(BiPoly::one_minus(1, 0), BiPoly::one_minus(1, 1)).unwrap();
        let j = serde_json::to_string(&rat2(&f)).unwrap();
        assert!(j.contains("[0,0,"), "{j}");
    }
}
