//! Membership of a homogeneous polynomial in an ideal generated by
//! homogeneous polynomials, decided degree by degree with exact linear
//! algebra.

mod multipoly;
mod parse;

pub use multipoly::{monomials_of_degree, power_sum, Monomial, MultiPoly};
pub use parse::{parse_poly, parse_poly_list};

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::MembershipError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MembershipAnswer {
    pub member: bool,
    /// One cofactor per generator (zero where the generator cannot
    /// contribute); empty when not a member.
    pub cofactors: Vec<MultiPoly>,
    /// Degree of the graded piece that was solved.
    pub degree: u32,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
}

fn bits(q: &BigRational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

/// Solve `A x = b` exactly; columns of `a` are sparse over row indices.
/// Returns a solution (free variables zero) and the rank, or `None` if the
/// system is inconsistent.
fn solve(
    rows: usize,
    cols: &[Vec<(usize, BigRational)>],
    rhs: &[(usize, BigRational)],
) -> (Option<Vec<BigRational>>, usize) {
    let n = cols.len();
    let mut m = vec![vec![BigRational::zero(); n + 1]; rows];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col {
            m[*i][j] = v.clone();
        }
    }
    for (i, v) in rhs {
        m[*i][n] = v.clone();
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows {
            break;
        }
        // smallest nonzero entry by bit size keeps the numbers short
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| bits(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r][c..].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (k, pv) in pivot_row.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    row[k] -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    if m[rank..].iter().any(|row| !row[n].is_zero()) {
        return (None, rank);
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][n].clone();
    }
    (Some(x), rank)
}

/// Decide whether `target` lies in the ideal generated by `generators`.
/// For homogeneous inputs only the graded piece of degree `deg target`
/// matters, so this is a finite linear system.
pub fn graded_membership(target: &MultiPoly, generators: &[MultiPoly]) -> Result<MembershipAnswer, MembershipError> {
    let nvars = target.nvars();
    if generators.iter().any(|g| g.nvars() != nvars) {
        return Err(MembershipError::DegreeMismatch("generators use a different number of variables".into()));
    }
    let zero_answer = |degree| MembershipAnswer {
        member: true,
        cofactors: vec![MultiPoly::zero(nvars); generators.len()],
        degree,
        unknowns: 0,
        equations: 0,
        rank: 0,
    };
    if target.is_zero() {
        return Ok(zero_answer(0));
    }
    let d = target
        .homogeneous_degree()
        .ok_or_else(|| MembershipError::DegreeMismatch(format!("target {target} is not homogeneous")))?;
    let mut gdeg = Vec::with_capacity(generators.len());
    for g in generators {
        if g.is_zero() {
            gdeg.push(None);
            continue;
        }
        let e = g
            .homogeneous_degree()
            .ok_or_else(|| MembershipError::DegreeMismatch(format!("generator {g} is not homogeneous")))?;
        gdeg.push(Some(e));
    }
    if !gdeg.iter().flatten().any(|&e| e <= d) {
        return Err(MembershipError::DegreeMismatch(format!("no generator has degree <= {d}, the target degree")));
    }

    let rows_list = monomials_of_degree(nvars, d);
    let row_of: HashMap<&Monomial, usize> = rows_list.iter().enumerate().map(|(i, m)| (m, i)).collect();
    // column = (generator index, multiplier monomial)
    let mut labels: Vec<(usize, Monomial)> = Vec::new();
    let mut cols: Vec<Vec<(usize, BigRational)>> = Vec::new();
    for (gi, (g, e)) in generators.iter().zip(&gdeg).enumerate() {
        let Some(e) = *e else { continue };
        if e > d {
            continue;
        }
        for mono in monomials_of_degree(nvars, d - e) {
            let col = g
                .terms()
                .map(|(gm, c)| {
                    let prod: Monomial = gm.iter().zip(&mono).map(|(a, b)| a + b).collect();
                    (row_of[&prod], c.clone())
                })
                .collect();
            cols.push(col);
            labels.push((gi, mono));
        }
    }
    let rhs: Vec<(usize, BigRational)> = target.terms().map(|(m, c)| (row_of[m], c.clone())).collect();
    let (sol, rank) = solve(rows_list.len(), &cols, &rhs);
    let mut ans = MembershipAnswer {
        member: false,
        cofactors: Vec::new(),
        degree: d,
        unknowns: cols.len(),
        equations: rows_list.len(),
        rank,
    };
    let Some(x) = sol else { return Ok(ans) };
    let mut cof = vec![MultiPoly::zero(nvars); generators.len()];
    for ((gi, mono), v) in labels.into_iter().zip(x) {
        cof[gi].add_term(mono, v);
    }
    // recompute with ordinary polynomial multiplication
    let recon = cof.iter().zip(generators).fold(MultiPoly::zero(nvars), |acc, (c, g)| acc.add(&c.mul(g)));
    assert_eq!(&recon, target, "cofactor verification failed");
    ans.member = true;
    ans.cofactors = cof;
    Ok(ans)
}

/// `(x2^2 x3^2 + x2^2 x4^2 + x3^2 x4^2 - x1^4)^2 - k (x1 x2 x3 x4)^2`.
pub fn zerodivisor_form(k: i64) -> MultiPoly {
    let x = |i| MultiPoly::var(4, i);
    let sq = |p: MultiPoly| p.mul(&p);
    let inner = sq(x(1).mul(&x(2))).add(&sq(x(1).mul(&x(3)))).add(&sq(x(2).mul(&x(3)))).sub(&x(0).pow(4));
    let prod = x(0).mul(&x(1)).mul(&x(2)).mul(&x(3));
    sq(inner).sub(&sq(prod).scale(&BigRational::from_integer(k.into())))
}

/// Membership of [`zerodivisor_form`] with coefficient `k` in `(p_2, p_8)`
/// in four variables.
pub fn zerodivisor_identity_with(k: i64) -> MembershipAnswer {
    graded_membership(&zerodivisor_form(k), &[power_sum(4, 2), power_sum(4, 8)]).expect("fixed homogeneous instance")
}

pub fn zerodivisor_identity_check() -> MembershipAnswer {
    zerodivisor_identity_with(2)
}
