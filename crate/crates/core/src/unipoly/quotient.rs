//! Arithmetic in `K[x]/(q)` for squarefree `q`, splitting the modulus
//! whenever a zero divisor shows up, and gcds of polynomials in a second
//! variable `y` over such rings.

use super::dense::DensePoly;
use super::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct QuotientElem<F: Field> {
    rep: DensePoly<F>,
    modulus: DensePoly<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InverseOrSplit<F: Field> {
    Inverse(QuotientElem<F>),
    /// Nontrivial monic factorization `modulus = g * h`.
    Split(DensePoly<F>, DensePoly<F>),
    /// The element is zero in the ring.
    Zero,
}

impl<F: Field> QuotientElem<F> {
    /// `modulus` must be squarefree of positive degree.
    pub fn new(rep: DensePoly<F>, modulus: &DensePoly<F>) -> Self {
        let modulus = modulus.monic();
        QuotientElem { rep: rep.rem(&modulus), modulus }
    }

    pub fn rep(&self) -> &DensePoly<F> {
        &self.rep
    }

    pub fn modulus(&self) -> &DensePoly<F> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        QuotientElem { rep: self.rep.add(&o.rep), modulus: self.modulus.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        QuotientElem { rep: self.rep.sub(&o.rep), modulus: self.modulus.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        QuotientElem { rep: self.rep.mul(&o.rep).rem(&self.modulus), modulus: self.modulus.clone() }
    }

    pub fn inverse_or_split(&self) -> InverseOrSplit<F> {
        if self.rep.is_zero() {
            return InverseOrSplit::Zero;
        }
        let (g, s, _) = self.rep.ext_gcd(&self.modulus);
        if g.is_one() {
            return InverseOrSplit::Inverse(QuotientElem { rep: s.rem(&self.modulus), modulus: self.modulus.clone() });
        }
        let h = self.modulus.exact_div(&g).expect("gcd divides modulus");
        InverseOrSplit::Split(g.monic(), h.monic())
    }

    pub fn reduce_to(&self, m: &DensePoly<F>) -> Self {
        QuotientElem::new(self.rep.clone(), m)
    }
}

/// Polynomial in `y` over `K[x]/(m)`: coefficients constant term first,
/// each already reduced modulo `m`.
pub type YPoly<F> = Vec<DensePoly<F>>;

fn trim<F: Field>(p: &mut YPoly<F>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn reduce_y<F: Field>(p: &YPoly<F>, m: &DensePoly<F>) -> YPoly<F> {
    let mut out: YPoly<F> = p.iter().map(|c| c.rem(m)).collect();
    trim(&mut out);
    out
}

enum Step<F: Field> {
    Done(YPoly<F>),
    Split(DensePoly<F>, DensePoly<F>),
}

fn invert_lc<F: Field>(c: &DensePoly<F>, m: &DensePoly<F>) -> Result<DensePoly<F>, (DensePoly<F>, DensePoly<F>)> {
    match QuotientElem::new(c.clone(), m).inverse_or_split() {
        InverseOrSplit::Inverse(inv) => Ok(inv.rep),
        InverseOrSplit::Split(g, h) => Err((g, h)),
        InverseOrSplit::Zero => unreachable!("leading coefficients are trimmed"),
    }
}

/// Monic gcd of two y-polynomials over `K[x]/(m)`, or a split of `m`.
fn ygcd_step<F: Field>(a: &YPoly<F>, b: &YPoly<F>, m: &DensePoly<F>) -> Step<F> {
    let mut a = reduce_y(a, m);
    let mut b = reduce_y(b, m);
    loop {
        if b.is_empty() {
            if a.is_empty() {
                return Step::Done(a);
            }
            let inv = match invert_lc(a.last().expect("nonempty"), m) {
                Ok(v) => v,
                Err((g, h)) => return Step::Split(g, h),
            };
            let monic: YPoly<F> = a.iter().map(|c| c.mul(&inv).rem(m)).collect();
            return Step::Done(monic);
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let inv = match invert_lc(b.last().expect("nonempty"), m) {
            Ok(v) => v,
            Err((g, h)) => return Step::Split(g, h),
        };
        // a <- a mod b
        let db = b.len() - 1;
        while a.len() > db {
            let k = a.len() - 1;
            let c = a[k].mul(&inv).rem(m);
            for (j, bc) in b.iter().enumerate() {
                a[k - db + j] = a[k - db + j].sub(&c.mul(bc)).rem(m);
            }
            debug_assert!(a[k].is_zero());
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Gcd of several y-polynomials over `K[x]/(m)` with dynamic splitting.
/// Returns `(component modulus, monic gcd over that component)`; the
/// component moduli are pairwise coprime and multiply to `monic(m)`.
pub fn ygcd_split<F: Field>(polys: &[YPoly<F>], m: &DensePoly<F>) -> Vec<(DensePoly<F>, YPoly<F>)> {
    let mut out = Vec::new();
    let mut work = vec![m.monic()];
    while let Some(mm) = work.pop() {
        if mm.is_constant() {
            continue;
        }
        let mut acc: YPoly<F> = Vec::new();
        let mut split = None;
        for p in polys {
            match ygcd_step(&acc, p, &mm) {
                Step::Done(g) => acc = g,
                Step::Split(g, h) => {
                    split = Some((g, h));
                    break;
                }
            }
        }
        match split {
            Some((g, h)) => {
                work.push(h);
                work.push(g);
            }
            None => out.push((mm, acc)),
        }
    }
    out
}

/// Convert a bivariate polynomial given as y-coefficients in `K[x]`.
pub fn ypoly_from<F: Field>(coeffs: Vec<DensePoly<F>>) -> YPoly<F> {
    let mut v = coeffs;
    trim(&mut v);
    v
}
