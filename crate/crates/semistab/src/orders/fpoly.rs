//! Dense polynomials over a prime field F_q and their factorization
//! (squarefree, distinct-degree, equal-degree with a deterministic sequence
//! of test polynomials).

use crate::arith::{mul_mod, pow_mod};

/// Coefficients low to high, no trailing zeros; the zero polynomial is empty.
pub type Poly = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub q: u64,
}

impl Fp {
    pub fn new(q: u64) -> Self {
        Fp { q }
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.q - 2, self.q)
    }

    pub fn trim(&self, mut a: Poly) -> Poly {
        for x in a.iter_mut() {
            *x %= self.q;
        }
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn from_i64(&self, c: &[i64]) -> Poly {
        self.trim(c.iter().map(|&x| x.rem_euclid(self.q as i64) as u64).collect())
    }

    pub fn degree(a: &Poly) -> Option<usize> {
        a.len().checked_sub(1)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let v = (0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.q).collect();
        self.trim(v)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + self.q - b.get(i).copied().unwrap_or(0)) % self.q)
            .collect();
        self.trim(v)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = (v[i + j] + mul_mod(x, y, self.q)) % self.q;
            }
        }
        self.trim(v)
    }

    pub fn scale(&self, a: &Poly, c: u64) -> Poly {
        self.trim(a.iter().map(|&x| mul_mod(x, c, self.q)).collect())
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        match a.last() {
            Some(&lc) => self.scale(a, self.inv(lc)),
            None => Vec::new(),
        }
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let db = Self::degree(b).expect("division by the zero polynomial");
        let inv = self.inv(b[db]);
        let mut r = a.clone();
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut quot = vec![0u64; r.len() - db];
        while let Some(dr) = Self::degree(&r) {
            if dr < db {
                break;
            }
            let c = mul_mod(r[dr], inv, self.q);
            quot[dr - db] = c;
            for (i, &y) in b.iter().enumerate() {
                let k = dr - db + i;
                r[k] = (r[k] + self.q - mul_mod(c, y, self.q)) % self.q;
            }
            r = self.trim(r);
        }
        (self.trim(quot), r)
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Poly {
        self.divrem(a, b).1
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &Poly) -> Poly {
        self.trim(a.iter().enumerate().skip(1).map(|(i, &c)| mul_mod(c, i as u64 % self.q, self.q)).collect())
    }

    pub fn powmod(&self, a: &Poly, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&vec![1], m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
            base = self.rem(&self.mul(&base, &base), m);
            e >>= 1;
        }
        acc
    }

    pub fn is_one(a: &Poly) -> bool {
        a.len() == 1 && a[0] == 1
    }

    /// Squarefree decomposition of a monic polynomial: `(factor, multiplicity)`.
    pub fn squarefree(&self, f: &Poly) -> Vec<(Poly, u32)> {
        let f = self.monic(f);
        let mut out = Vec::new();
        if Self::degree(&f).unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative(&f);
        let mut c = self.gcd(&f, &d);
        let mut w = self.divrem(&f, &c).0;
        let mut i = 1;
        while !Self::is_one(&w) {
            let y = self.gcd(&w, &c);
            let fac = self.divrem(&w, &y).0;
            if !Self::is_one(&fac) {
                out.push((fac, i));
            }
            w = y.clone();
            c = self.divrem(&c, &y).0;
            i += 1;
        }
        if !Self::is_one(&c) {
            // c(x) = g(x^q): take the q-th root coefficientwise
            let q = self.q as usize;
            let root: Poly = c.iter().step_by(q).copied().collect();
            for (g, m) in self.squarefree(&root) {
                out.push((g, m * self.q as u32));
            }
        }
        out
    }

    /// Distinct-degree factorization of a squarefree monic polynomial.
    pub fn distinct_degree(&self, f: &Poly) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: Poly = vec![0, 1];
        let mut h = x.clone();
        let mut d = 0;
        while Self::degree(&f).unwrap_or(0) >= 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, self.q as u128, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if !Self::is_one(&g) {
                out.push((g.clone(), d));
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
            }
        }
        if Self::degree(&f).unwrap_or(0) > 0 {
            let deg = Self::degree(&f).unwrap();
            out.push((f, deg));
        }
        out
    }

    /// The `k`-th polynomial in a fixed enumeration by base-`q` digits.
    fn nth_poly(&self, mut k: u64) -> Poly {
        let mut v = Vec::new();
        while k > 0 {
            v.push(k % self.q);
            k /= self.q;
        }
        self.trim(v)
    }

    /// Splits a squarefree monic product of irreducibles of degree `d`.
    pub fn equal_degree(&self, f: &Poly, d: usize) -> Vec<Poly> {
        let n = Self::degree(f).unwrap_or(0);
        if n == d {
            return vec![f.clone()];
        }
        let mut k = self.q;
        loop {
            let a = self.nth_poly(k);
            k += 1;
            if Self::degree(&a).unwrap_or(0) >= n {
                continue;
            }
            let b = if self.q == 2 {
                // trace a + a² + … + a^{2^{d−1}}
                let mut t = self.rem(&a, f);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = self.rem(&self.mul(&t, &t), f);
                    acc = self.add(&acc, &t);
                }
                acc
            } else {
                let e = ((self.q as u128).pow(d as u32) - 1) / 2;
                self.sub(&self.powmod(&a, e, f), &vec![1])
            };
            let g = self.gcd(&b, f);
            let dg = Self::degree(&g).unwrap_or(0);
            if dg > 0 && dg < n {
                let h = self.divrem(f, &g).0;
                let mut out = self.equal_degree(&g, d);
                out.extend(self.equal_degree(&h, d));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// sorted by degree and then coefficients.
    pub fn factor(&self, f: &Poly) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        for (g, m) in self.squarefree(f) {
            for (h, d) in self.distinct_degree(&g) {
                for irr in self.equal_degree(&h, d) {
                    out.push((irr, m));
                }
            }
        }
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.iter().rev().cmp(b.0.iter().rev())));
        out
    }

    pub fn is_irreducible(&self, f: &Poly) -> bool {
        let fs = self.factor(f);
        fs.len() == 1 && fs[0].1 == 1
    }
}
