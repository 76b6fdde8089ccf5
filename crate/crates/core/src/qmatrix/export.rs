use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::QMatrix;
use crate::error::Result;
use crate::qfield::{eval_at_kappa, ratq_to_json, LaurentPoly, QNumeric, RatQ};

/// `{"n": N, "order": [[heights]...], "entries": [[RatQ]...]}`.
pub fn to_json(m: &QMatrix) -> Value {
    let entries: Vec<Value> =
        (0..m.dim()).map(|i| Value::Array((0..m.dim()).map(|j| ratq_to_json(m.get(i, j))).collect())).collect();
    json!({ "n": m.n(), "order": m.order(), "entries": entries })
}

/// One line per entry: `row,col,alpha,beta,re,im`, paths as step strings.
pub fn to_csv(m: &QMatrix, ctx: &QNumeric) -> Result<String> {
    let mut out = String::from("row,col,alpha,beta,re,im\n");
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            let z = eval_at_kappa(m.get(i, j), ctx)?;
            let (a, b) = (m.order()[i].steps(), m.order()[j].steps());
            writeln!(out, "{i},{j},{a},{b},{:.17e},{:.17e}", z.re, z.im).unwrap();
        }
    }
    Ok(out)
}

pub fn to_latex(m: &QMatrix) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim()).map(|j| latex_entry(m.get(i, j))).collect();
        writeln!(out, "{} \\\\", row.join(" & ")).unwrap();
    }
    out.push_str("\\end{pmatrix}\n");
    out
}

/// Writes `x` as a signed ratio of products of q-integers when it has that
/// form, otherwise as a ratio of polynomials.
pub fn latex_entry(x: &RatQ) -> String {
    if x.is_zero() {
        return "0".into();
    }
    if let Some((neg, num, den)) = q_integer_factors(x) {
        let prod = |ks: &[i64]| {
            if ks.is_empty() {
                "1".to_string()
            } else {
                ks.iter().map(|k| format!("[{k}]")).collect()
            }
        };
        let sign = if neg { "-" } else { "" };
        return if den.is_empty() {
            format!("{sign}{}", prod(&num))
        } else {
            format!("{sign}\\frac{{{}}}{{{}}}", prod(&num), prod(&den))
        };
    }
    if x.den().is_one() {
        latex_poly(x.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_poly(x.num()), latex_poly(x.den()))
    }
}

/// Dense coefficients of `q^(k-1) [k] = 1 + q^2 + ... + q^(2k-2)`.
fn shifted_q_integer(k: i64) -> Vec<BigRational> {
    (0..2 * k - 1).map(|i| if i % 2 == 0 { BigRational::one() } else { BigRational::zero() }).collect()
}

/// Greedily strips q-integer factors, largest first.
fn strip(p: &LaurentPoly, max_k: i64) -> (Vec<i64>, Vec<BigRational>) {
    let (_, dense) = p.dense();
    let mut rest = dense.to_vec();
    let mut ks = Vec::new();
    for k in (2..=max_k).rev() {
        let d = shifted_q_integer(k);
        while rest.len() >= d.len() {
            let (quot, rem) = crate::qfield::upoly_div_rem(&rest, &d);
            if !rem.is_empty() {
                break;
            }
            rest = quot;
            ks.push(k);
        }
    }
    ks.reverse();
    (ks, rest)
}

fn q_integer_factors(x: &RatQ) -> Option<(bool, Vec<i64>, Vec<i64>)> {
    let max_k = x.num().high_degree()?.abs().max(x.den().high_degree()?) + 2;
    let (num, nrest) = strip(x.num(), max_k);
    let (den, drest) = strip(x.den(), max_k);
    if nrest.len() != 1 || drest.len() != 1 {
        return None;
    }
    let build = |ks: &[i64]| ks.iter().fold(RatQ::one(), |acc, &k| acc * RatQ::q_integer(k).unwrap());
    let candidate = build(&num).checked_div(&build(&den)).ok()?;
    let neg = (&nrest[0] / &drest[0]).is_negative();
    let signed = if neg { -candidate } else { candidate };
    (signed == *x).then_some((neg, num, den))
}

fn latex_poly(p: &LaurentPoly) -> String {
    let mut out = String::new();
    let terms: Vec<(i64, &BigRational)> = p.terms().collect();
    for (k, (e, c)) in terms.iter().rev().enumerate() {
        let abs = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let coeff = if abs.is_integer() {
            abs.numer().to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        match (*e, abs.is_one()) {
            (0, _) => out.push_str(&coeff),
            (_, true) => {}
            (_, false) => out.push_str(&coeff),
        }
        match *e {
            0 => {}
            1 => out.push('q'),
            e => write!(out, "q^{{{e}}}").unwrap(),
        }
    }
    out
}
