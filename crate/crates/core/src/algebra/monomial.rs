use std::fmt;

use smallvec::SmallVec;

pub(crate) type Exps = SmallVec<[u32; 8]>;

/// A normal-form word `x^alpha y^beta` of `S_n`.
///
/// Stored as the concatenation `alpha ++ beta`, so the derived ordering is
/// lexicographic on `(alpha, beta)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SnMonomial {
    exps: Exps,
}

impl SnMonomial {
    pub fn one(n: usize) -> Self {
        SnMonomial { exps: SmallVec::from_elem(0, 2 * n) }
    }

    pub fn new(alpha: &[u32], beta: &[u32]) -> Self {
        assert_eq!(alpha.len(), beta.len(), "alpha and beta must have equal length");
        let mut exps = Exps::with_capacity(2 * alpha.len());
        exps.extend_from_slice(alpha);
        exps.extend_from_slice(beta);
        SnMonomial { exps }
    }

    pub(crate) fn from_exps(exps: Exps) -> Self {
        debug_assert!(exps.len() % 2 == 0);
        SnMonomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn alpha(&self) -> &[u32] {
        &self.exps[..self.n()]
    }

    pub fn beta(&self) -> &[u32] {
        &self.exps[self.n()..]
    }

    /// `(alpha_c, beta_c)` for the 0-based component `c`.
    pub fn component(&self, c: usize) -> (u32, u32) {
        (self.exps[c], self.exps[self.n() + c])
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Normal-form product. Per component `y^b x^c` collapses to `x^(c-b)` or
    /// `y^(b-c)`, so `(x^a y^b)(x^c y^d) = x^(a + (c-b)+) y^(d + (b-c)+)`.
    pub fn mul(&self, other: &SnMonomial) -> SnMonomial {
        let n = self.n();
        debug_assert_eq!(n, other.n());
        let mut exps = Exps::from_elem(0, 2 * n);
        for k in 0..n {
            let (a, b) = self.component(k);
            let (c, d) = other.component(k);
            exps[k] = a + c.saturating_sub(b);
            exps[n + k] = d + b.saturating_sub(c);
        }
        SnMonomial { exps }
    }
}

impl fmt::Display for SnMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        let n = self.n();
        for (letter, offset) in [('x', 0), ('y', n)] {
            for c in 0..n {
                let e = self.exps[offset + c];
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{letter}{}", c + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapse_rule() {
        // (x^2 y^3)(x y) = x^2 y^3 ; y^2 x^3 = x
        let a = SnMonomial::new(&[2], &[3]);
        let b = SnMonomial::new(&[1], &[1]);
        assert_eq!(a.mul(&b), SnMonomial::new(&[2], &[3]));
        let y2 = SnMonomial::new(&[0], &[2]);
        let x3 = SnMonomial::new(&[3], &[0]);
        assert_eq!(y2.mul(&x3), SnMonomial::new(&[1], &[0]));
    }

    #[test]
    fn display() {
        assert_eq!(SnMonomial::new(&[2, 1], &[3, 0]).to_string(), "x1^2*x2*y1^3");
        assert_eq!(SnMonomial::one(3).to_string(), "1");
    }
}
