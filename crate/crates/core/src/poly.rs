//! Univariate polynomials, just enough to find eigenvalues.

use rand::Rng;

use crate::field::Field;
use crate::linalg::Mat;

/// Coefficients in ascending degree order, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<F>(Vec<F>);

impl<F: Field> Poly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn x() -> Self {
        Poly(vec![F::zero(), F::one()])
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: F) -> F {
        self.0.iter().rev().fold(F::zero(), |acc, &c| acc * x + c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let get = |v: &Vec<F>, i: usize| v.get(i).copied().unwrap_or(F::zero());
        Self::new((0..n).map(|i| get(&self.0, i) + get(&o.0, i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-F::one()))
    }

    pub fn scale(&self, c: F) -> Self {
        Self::new(self.0.iter().map(|&a| a * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.0[dd].try_inv().expect("nonzero leading coefficient");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd] * lead_inv;
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in d.0.iter().enumerate() {
                r[k + j] -= c * b;
            }
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            None => Self::zero(),
            Some(&l) => self.scale(l.try_inv().expect("nonzero")),
        }
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::constant(F::one()).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Distinct roots in the ground field, sorted by residue.
    pub fn roots<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<F> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        if d == 0 {
            return Vec::new();
        }
        let p = F::characteristic();
        let f = self.monic();
        if p <= 64 {
            let mut out: Vec<F> = (0..p)
                .map(|v| F::from_i64(v as i64))
                .filter(|&x| f.eval(x).is_zero())
                .collect();
            out.sort();
            return out;
        }
        // product of the distinct linear factors
        let xp = Self::x().pow_mod(p, &f);
        let g = Self::gcd(&f, &xp.sub(&Self::x()));
        let mut out = Vec::new();
        split_linear(&g, rng, &mut out);
        out.sort();
        out
    }
}

fn split_linear<F: Field, R: Rng + ?Sized>(g: &Poly<F>, rng: &mut R, out: &mut Vec<F>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let m = g.monic();
            out.push(-m.0[0]);
        }
        Some(_) => {
            let half = (F::characteristic() - 1) / 2;
            loop {
                let a = F::sample(rng);
                let t = Poly::new(vec![a, F::one()]).pow_mod(half, g);
                let h = Poly::gcd(g, &t.sub(&Poly::constant(F::one())));
                let hd = h.degree().unwrap_or(0);
                if hd > 0 && hd < g.degree().unwrap() {
                    let (q, _) = g.div_rem(&h);
                    split_linear(&h, rng, out);
                    split_linear(&q, rng, out);
                    return;
                }
            }
        }
    }
}

/// Characteristic polynomial `det(xI - m)` via reduction to Hessenberg form.
pub fn charpoly<F: Field>(m: &Mat<F>) -> Poly<F> {
    assert!(m.is_square());
    let n = m.rows();
    let mut h = m.clone();
    for c in 0..n.saturating_sub(2) {
        let Some(p) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
            continue;
        };
        if p != c + 1 {
            for j in 0..n {
                let t = h[(p, j)];
                h[(p, j)] = h[(c + 1, j)];
                h[(c + 1, j)] = t;
            }
            for i in 0..n {
                let t = h[(i, p)];
                h[(i, p)] = h[(i, c + 1)];
                h[(i, c + 1)] = t;
            }
        }
        let inv = h[(c + 1, c)].try_inv().unwrap();
        for i in c + 2..n {
            let f = h[(i, c)] * inv;
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = h[(c + 1, j)];
                h[(i, j)] -= f * v;
            }
            for k in 0..n {
                let v = h[(k, i)];
                h[(k, c + 1)] += f * v;
            }
        }
    }
    // p_k = charpoly of the leading k x k block
    let mut ps: Vec<Poly<F>> = vec![Poly::constant(F::one())];
    for k in 1..=n {
        let xk = Poly::new(vec![-h[(k - 1, k - 1)], F::one()]);
        let mut pk = xk.mul(&ps[k - 1]);
        let mut prod = F::one();
        for i in (1..k).rev() {
            prod *= h[(i, i - 1)];
            let c = prod * h[(i - 1, k - 1)];
            pk = pk.sub(&ps[i - 1].scale(c));
        }
        ps.push(pk);
    }
    ps.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, One, Zero};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F = Fp<32003>;

    fn det<F: Field>(m: &Mat<F>) -> F {
        // cofactor-free elimination determinant for the oracle
        let n = m.rows();
        let mut a = m.clone();
        let mut d = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                for j in 0..n {
                    let t = a[(p, j)];
                    a[(p, j)] = a[(c, j)];
                    a[(c, j)] = t;
                }
                d = -d;
            }
            d *= a[(c, c)];
            let inv = a[(c, c)].try_inv().unwrap();
            for i in c + 1..n {
                let f = a[(i, c)] * inv;
                for j in c..n {
                    let v = a[(c, j)];
                    a[(i, j)] -= f * v;
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinant_at_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 0..7 {
            let m = Mat::<F>::random(n, n, &mut rng);
            let cp = charpoly(&m);
            assert_eq!(cp.degree(), Some(n));
            for x in [0i64, 1, 5, -9, 1234] {
                let x = F::from_i64(x);
                let shifted = Mat::scalar(n, x).sub(&m);
                assert_eq!(cp.eval(x), det(&shifted));
            }
        }
    }

    #[test]
    fn roots_of_product_of_linears() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rs = [3i64, 17, 17, 30000, -4];
        let mut f = Poly::constant(F::one());
        for &r in &rs {
            f = f.mul(&Poly::new(vec![F::from_i64(-r), F::one()]));
        }
        // irreducible quadratic x^2 - 2 has no roots when 2 is a non-residue
        f = f.mul(&Poly::new(vec![F::from_i64(-5), F::zero(), F::one()]));
        let mut expect: Vec<F> = [3i64, 17, 30000, -4].iter().map(|&r| F::from_i64(r)).collect();
        if F::from_i64(5).pow((32003 - 1) / 2) == F::one() {
            // 5 is a square mod 32003; include its roots
            for v in 0..32003u64 {
                let x = F::new(v);
                if x * x == F::from_i64(5) {
                    expect.push(x);
                }
            }
        }
        expect.sort();
        assert_eq!(f.roots(&mut rng), expect);
    }

    #[test]
    fn small_field_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f: Poly<Fp<7>> = Poly::new(vec![Fp::new(6), Fp::new(0), Fp::new(1)]);
        assert_eq!(f.roots(&mut rng), vec![Fp::new(1), Fp::new(6)]);
    }
}
