//! Error-free floating-point transformations and nonoverlapping expansion
//! arithmetic (Shewchuk-style). An expansion is a sum of `f64` components
//! stored in increasing order of magnitude; its value is exact as long as no
//! intermediate product underflows or overflows.

const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1

#[inline]
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let x = a + b;
    let bv = x - a;
    let av = x - bv;
    let br = b - bv;
    let ar = a - av;
    (x, ar + br)
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let c = SPLITTER * a;
    let big = c - a;
    let hi = c - big;
    (hi, a - hi)
}

#[inline]
pub(crate) fn two_product(a: f64, b: f64) -> (f64, f64) {
    let x = a * b;
    let (ahi, alo) = split(a);
    let (bhi, blo) = split(b);
    let err1 = x - ahi * bhi;
    let err2 = err1 - alo * bhi;
    let err3 = err2 - ahi * blo;
    (x, alo * blo - err3)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct Expansion(Vec<f64>);

impl Expansion {
    #[cfg(test)]
    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            Self(Vec::new())
        } else {
            Self(vec![v])
        }
    }

    /// Exact `a - b`.
    pub fn diff(a: f64, b: f64) -> Self {
        let (x, y) = two_sum(a, -b);
        Self::from_pair(x, y)
    }

    /// Exact `a * b`.
    #[cfg(test)]
    pub fn product(a: f64, b: f64) -> Self {
        let (x, y) = two_product(a, b);
        Self::from_pair(x, y)
    }

    fn from_pair(hi: f64, lo: f64) -> Self {
        let mut v = Vec::with_capacity(2);
        if lo != 0.0 {
            v.push(lo);
        }
        if hi != 0.0 {
            v.push(hi);
        }
        Self(v)
    }

    /// Adds a single component (grow-expansion with zero elimination).
    fn grow(&self, b: f64) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut q = b;
        for &e in &self.0 {
            let (sum, err) = two_sum(q, e);
            q = sum;
            if err != 0.0 {
                out.push(err);
            }
        }
        if q != 0.0 {
            out.push(q);
        }
        Self(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut acc, rest) = if self.0.len() >= other.0.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for &c in &rest.0 {
            acc = acc.grow(c);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|v| -v).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Scale by a single `f64` (scale-expansion with zero elimination).
    fn scale(&self, b: f64) -> Self {
        let mut out = Vec::with_capacity(2 * self.0.len());
        let mut iter = self.0.iter();
        let Some(&first) = iter.next() else {
            return Self::default();
        };
        let (mut q, lo) = two_product(first, b);
        if lo != 0.0 {
            out.push(lo);
        }
        for &e in iter {
            let (p_hi, p_lo) = two_product(e, b);
            let (sum, err) = two_sum(q, p_lo);
            if err != 0.0 {
                out.push(err);
            }
            let (nq, err2) = two_sum(p_hi, sum);
            if err2 != 0.0 {
                out.push(err2);
            }
            q = nq;
        }
        if q != 0.0 {
            out.push(q);
        }
        Self(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::default();
        for &c in &other.0 {
            acc = acc.add(&self.scale(c));
        }
        acc
    }

    /// Sign of the exact value: the sign of the largest-magnitude component.
    pub fn signum(&self) -> i8 {
        match self.0.last() {
            None => 0,
            Some(&v) if v > 0.0 => 1,
            Some(_) => -1,
        }
    }

    #[cfg(test)]
    pub fn approx(&self) -> f64 {
        self.0.iter().sum()
    }
}
