//! Sparse multivariate polynomials with rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, BigRational::one())
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        MultiPoly::monomial(m, BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut p = MultiPoly::zero(m.len());
        p.add_term(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        assert_eq!(m.len(), self.nvars, "monomial has wrong number of variables");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree of every term if they all agree, `None` for the zero
    /// polynomial or a non-homogeneous one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &BigRational) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                r.add_term(m, c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        (0..e).fold(MultiPoly::one(self.nvars), |acc, _| acc.mul(self))
    }
}

/// `x_1^a + ... + x_n^a`.
pub fn power_sum(nvars: usize, a: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    for i in 0..nvars {
        let mut m = vec![0; nvars];
        m[i] = a;
        p.add_term(m, BigRational::one());
    }
    p
}

/// All exponent vectors of total degree `d` in `nvars` variables, in
/// lexicographic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, d: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out
}

fn rational_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", rational_string(&a))?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", rational_string(&a), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    nvars: usize,
    terms: Vec<(Monomial, String)>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), rational_string(c))).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = Wire::deserialize(d)?;
        let mut p = MultiPoly::zero(w.nvars);
        for (m, c) in w.terms {
            if m.len() != w.nvars {
                return Err(D::Error::custom("monomial length does not match nvars"));
            }
            let q = match c.split_once('/') {
                Some((n, dd)) => {
                    let n: BigInt = n.parse().map_err(D::Error::custom)?;
                    let dd: BigInt = dd.parse().map_err(D::Error::custom)?;
                    if dd.is_zero() {
                        return Err(D::Error::custom("zero denominator"));
                    }
                    BigRational::new(n, dd)
                }
                None => BigRational::from_integer(c.parse().map_err(D::Error::custom)?),
            };
            p.add_term(m, q);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_display() {
        assert_eq!(power_sum(2, 3).to_string(), "x1^3 + x2^3");
        assert_eq!(power_sum(4, 1).len(), 4);
        assert_eq!(power_sum(3, 2).homogeneous_degree(), Some(2));
        let p = power_sum(2, 1).sub(&MultiPoly::one(2));
        assert_eq!(p.homogeneous_degree(), None);
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(4, 8).len(), 165);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 5), vec![vec![5]]);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = power_sum(3, 2);
        assert!(p.sub(&p).is_zero());
        let q = power_sum(3, 1).pow(2).sub(&p);
        assert!(q.terms().all(|(_, c)| *c == BigRational::from_integer(2.into())));
    }

    #[test]
    fn serde_roundtrip() {
        let p = power_sum(3, 2).scale(&BigRational::new(3.into(), 7.into()));
        let s = serde_json::to_string(&p).unwrap();
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
