//! Small finite fields `F_q`, `q = p^m ≤ 2^16`, and vectors over them.
//!
//! Elements are polynomials over `F_p` of degree `< m`, reduced modulo a
//! fixed monic irreducible. An element is identified by its coefficient
//! vector read as a base-`p` integer, `c₀ + c₁p + … + c_{m−1}p^{m−1}`; that
//! integer is also the element ordering used to label nonzero elements.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

const MAX_ORDER: u64 = 1 << 16;

/// A field element, stored as its base-`p` index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The field `F_{p^m}` with its defining polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GfContext {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients low to high (length `m + 1`).
    modulus: Vec<u32>,
}

impl GfContext {
    /// Builds `F_{p^m}` using the lexicographically smallest monic irreducible
    /// of degree `m` (coefficients compared from the constant term up).
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge(p, m))? as u32;
        let modulus = smallest_irreducible(p, m as usize);
        Ok(Self { p, m, q, modulus })
    }

    pub fn shared(p: u32, m: u32) -> Result<Arc<Self>> {
        Self::new(p, m).map(Arc::new)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Field order `q`.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    pub fn element(&self, index: u32) -> Result<Elem> {
        if index < self.q {
            Ok(Elem(index))
        } else {
            Err(Error::IndexOutOfRange {
                index: index as usize,
                size: self.q as usize,
            })
        }
    }

    /// Element with the given coefficients, constant term first.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Elem {
        let mut poly: Vec<u32> = coeffs.iter().map(|c| c % self.p).collect();
        self.reduce(&mut poly);
        Elem(self.encode(&poly))
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs
            .iter()
            .take(self.m as usize)
            .rev()
            .fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        Elem(self.encode(&sum))
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let c: Vec<u32> = self
            .coeffs(a)
            .iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        Elem(self.encode(&c))
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Schoolbook polynomial product followed by reduction.
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.m as usize - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let mut poly: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        self.reduce(&mut poly);
        Elem(self.encode(&poly))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (!a.is_zero()).then(|| self.pow(a, self.q as u64 - 2))
    }

    /// Position of a nonzero element among the nonzero elements in ascending
    /// index order (`0..q−1`).
    pub fn nonzero_label(&self, a: Elem) -> Option<usize> {
        (!a.is_zero()).then(|| a.0 as usize - 1)
    }

    /// Reduces `poly` (coefficients low to high, already mod p) modulo the
    /// defining polynomial, leaving `m` coefficients.
    fn reduce(&self, poly: &mut Vec<u32>) {
        let m = self.m as usize;
        let p = self.p;
        while poly.len() > m {
            let top = poly.pop().expect("nonempty");
            if top != 0 {
                let shift = poly.len() - m;
                // Subtract top * x^shift * modulus (the leading term is already gone).
                for (i, &c) in self.modulus[..m].iter().enumerate() {
                    let idx = shift + i;
                    poly[idx] = ((poly[idx] as u64 + p as u64 - (top as u64 * c as u64) % p as u64)
                        % p as u64) as u32;
                }
            }
        }
        poly.resize(m, 0);
    }
}

impl fmt::Debug for GfContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.m, self.modulus)
    }
}

/// A vector of `F_q^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GfVec {
    ctx: Arc<GfContext>,
    coords: Vec<Elem>,
}

impl GfVec {
    pub fn new(ctx: &Arc<GfContext>, coords: Vec<Elem>) -> Result<Self> {
        if let Some(bad) = coords.iter().find(|e| e.0 >= ctx.q) {
            return Err(Error::IndexOutOfRange {
                index: bad.0 as usize,
                size: ctx.q as usize,
            });
        }
        Ok(Self {
            ctx: Arc::clone(ctx),
            coords,
        })
    }

    pub fn context(&self) -> &Arc<GfContext> {
        &self.ctx
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|e| e.is_zero())
    }

    /// `Σ uᵢ·vᵢ`.
    pub fn inner(&self, other: &GfVec) -> Result<Elem> {
        if self.coords.len() != other.coords.len()
            || !(Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx)
        {
            return Err(Error::VectorMismatch);
        }
        Ok(inner_raw(&self.ctx, &self.coords, &other.coords))
    }

    pub fn scale(&self, c: Elem) -> GfVec {
        GfVec {
            ctx: Arc::clone(&self.ctx),
            coords: self.coords.iter().map(|&x| self.ctx.mul(c, x)).collect(),
        }
    }
}

impl fmt::Debug for GfVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|e| e.0.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) fn inner_raw(ctx: &GfContext, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| ctx.add(acc, ctx.mul(x, y)))
}

/// Nonzero vectors of `F_q^k` in lexicographic order (coordinate 0 most
/// significant, elements by index).
pub fn nonzero_vectors(ctx: &Arc<GfContext>, k: usize) -> Result<Vec<GfVec>> {
    let total = (ctx.q as u64)
        .checked_pow(k as u32)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| Error::InvalidParameter(format!("q^k = {}^{k} is too large", ctx.q)))?;
    Ok((1..total)
        .map(|t| {
            let mut coords = vec![Elem::ZERO; k];
            let mut rest = t;
            for c in coords.iter_mut().rev() {
                *c = Elem((rest % ctx.q as u64) as u32);
                rest /= ctx.q as u64;
            }
            GfVec {
                ctx: Arc::clone(ctx),
                coords,
            }
        })
        .collect())
}

/// One representative per one-dimensional subspace of `F_q^k`: the nonzero
/// vectors whose first nonzero coordinate is 1, in lexicographic order.
pub fn projective_normals(ctx: &Arc<GfContext>, k: usize) -> Result<Vec<GfVec>> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "dimension k must be at least 1".into(),
        ));
    }
    Ok(nonzero_vectors(ctx, k)?
        .into_iter()
        .filter(|v| v.coords.iter().find(|e| !e.is_zero()) == Some(&Elem::ONE))
        .collect())
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Lexicographically smallest monic irreducible of degree `m` over `F_p`.
fn smallest_irreducible(p: u32, m: usize) -> Vec<u32> {
    let total = (p as u64).pow(m as u32);
    for t in 0..total {
        // Constant term is the most significant digit of t.
        let mut poly = vec![0u32; m + 1];
        let mut rest = t;
        for c in poly[..m].iter_mut().rev() {
            *c = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        poly[m] = 1;
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("an irreducible of every degree exists over a prime field")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for t in 0..count {
            let mut divisor = vec![0u32; d + 1];
            let mut rest = t;
            for c in divisor[..d].iter_mut() {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            divisor[d] = 1;
            if poly_rem_is_zero(poly, &divisor, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(num: &[u32], monic: &[u32], p: u32) -> bool {
    let d = monic.len() - 1;
    let mut r = num.to_vec();
    while r.len() > d {
        let top = r.pop().expect("nonempty");
        if top != 0 {
            let shift = r.len() - d;
            for (i, &c) in monic[..d].iter().enumerate() {
                r[shift + i] = ((r[shift + i] as u64 + p as u64
                    - (top as u64 * c as u64) % p as u64)
                    % p as u64) as u32;
            }
        }
    }
    r.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_examples() {
        let f3 = GfContext::new(3, 1).unwrap();
        assert_eq!(f3.elements().count(), 3);
        assert_eq!(f3.modulus(), &[0, 1]);

        let f9 = GfContext::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        assert_eq!(f9.order(), 9);

        assert_eq!(GfContext::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(GfContext::new(2, 17), Err(Error::FieldTooLarge(2, 17)));
        assert_eq!(GfContext::new(3, 0), Err(Error::ZeroDegree));
        assert!(GfContext::new(2, 16).is_ok());
    }

    #[test]
    fn inner_examples() {
        let f3 = GfContext::shared(3, 1).unwrap();
        let v = |c: &[u32]| GfVec::new(&f3, c.iter().map(|&x| Elem(x)).collect()).unwrap();
        assert_eq!(v(&[1, 2]).inner(&v(&[2, 2])), Ok(Elem(0)));
        assert_eq!(v(&[1, 2]).inner(&v(&[0, 0])), Ok(Elem(0)));
        assert_eq!(v(&[1, 2]).inner(&v(&[1])), Err(Error::VectorMismatch));

        let f9 = GfContext::shared(3, 2).unwrap();
        let x = f9.from_coeffs(&[0, 1]);
        let u = GfVec::new(&f9, vec![x, Elem::ONE]).unwrap();
        let w = GfVec::new(&f9, vec![x, Elem::ZERO]).unwrap();
        assert_eq!(u.inner(&w), Ok(Elem(2)));
        assert_eq!(u.inner(&v(&[1, 1])), Err(Error::VectorMismatch));
    }

    #[test]
    fn projective_normal_examples() {
        let f3 = GfContext::shared(3, 1).unwrap();
        let one = projective_normals(&f3, 1).unwrap();
        assert_eq!(format!("{one:?}"), "[(1)]");
        let two = projective_normals(&f3, 2).unwrap();
        assert_eq!(format!("{two:?}"), "[(0,1), (1,0), (1,1), (1,2)]");
        let f9 = GfContext::shared(3, 2).unwrap();
        assert_eq!(projective_normals(&f9, 2).unwrap().len(), 10);
        assert!(projective_normals(&f3, 0).is_err());
    }

    #[test]
    fn inverse_and_labels() {
        let f25 = GfContext::new(5, 2).unwrap();
        for a in f25.elements().filter(|a| !a.is_zero()) {
            assert_eq!(f25.mul(a, f25.inv(a).unwrap()), Elem::ONE);
        }
        assert_eq!(f25.inv(Elem::ZERO), None);
        assert_eq!(f25.nonzero_label(Elem(1)), Some(0));
        assert_eq!(f25.nonzero_label(Elem(24)), Some(23));
    }
}
