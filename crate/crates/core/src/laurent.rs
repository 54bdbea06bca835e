//! Sparse exact Laurent polynomials in one variable v over the integers.

use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial: exponent -> nonzero integer coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `coeff * v^exp`.
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// (exponent, coefficient) pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn insert(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.insert(e, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.insert(e, -c);
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            out.insert(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by `v^exp`.
    pub fn shift(&self, exp: i64) -> LaurentPoly {
        let coeffs = self.coeffs.iter().map(|(&e, &c)| (e + exp, c)).collect();
        LaurentPoly { coeffs }
    }

    /// The bar involution v -> v^{-1}.
    pub fn bar(&self) -> LaurentPoly {
        let coeffs = self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect();
        LaurentPoly { coeffs }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.bar()
    }

    /// Evaluate at v = 1 (sum of coefficients).
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// All exponents >= 1 and all coefficients positive: membership in
    /// `v * Z_{>=0}[v]`.
    pub fn is_positive_with_positive_valuation(&self) -> bool {
        self.coeffs.iter().all(|(&e, &c)| e >= 1 && c > 0)
    }

    /// Exact division; `None` when `divisor` does not divide exactly over
    /// the integers.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        let d_lead_exp = divisor.max_exp().unwrap();
        let d_lead_coeff = divisor.coefficient(d_lead_exp);
        let d_min = divisor.min_exp().unwrap();
        loop {
            if rem.is_zero() {
                return Some(quotient);
            }
            let r_lead_exp = rem.max_exp().unwrap();
            // Once the remainder's span drops below the divisor's, division
            // cannot be exact.
            if rem.max_exp().unwrap() - rem.min_exp().unwrap()
                < divisor.max_exp().unwrap() - d_min
            {
                return None;
            }
            let r_lead_coeff = rem.coefficient(r_lead_exp);
            if r_lead_coeff % d_lead_coeff != 0 {
                return None;
            }
            let q = LaurentPoly::monomial(r_lead_exp - d_lead_exp, r_lead_coeff / d_lead_coeff);
            rem = rem.sub(&q.mul(divisor));
            quotient = quotient.add(&q);
        }
    }

    /// The balanced quantum integer `[k] = v^{k-1} + v^{k-3} + ... + v^{1-k}`.
    pub fn quantum_integer(k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        let k = k as i64;
        let mut e = 1 - k;
        while e < k {
            out.insert(e, 1);
            e += 2;
        }
        out
    }

    /// `[k]! = [1][2]...[k]`.
    pub fn quantum_factorial(k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for j in 1..=k {
            out = out.mul(&LaurentPoly::quantum_integer(j));
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            let body = match e {
                0 => format!("{mag}"),
                1 if mag == 1 => "v".to_string(),
                1 => format!("{mag}v"),
                _ if mag == 1 => format!("v^{e}"),
                _ => format!("{mag}v^{e}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}
