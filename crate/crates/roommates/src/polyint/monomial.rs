//! Packed exponent vectors used as sparse-polynomial keys.

use std::fmt;

/// Maximum number of live variables an integrand may have.
pub const MAX_VARS: usize = 16;

const BITS: u32 = 8;
const MASK: u128 = 0xFF;

/// Exponent vector of a monomial, packed 8 bits per variable into a `u128`.
///
/// Instance sizes stay small (n <= 16 live variables) and each variable
/// occurs in at most n - 1 bilinear factors, one unary factor and one linear
/// prefactor, so exponents fit comfortably in 8 bits. Packing makes the
/// monomial a cheap, fixed-size hash key, which dominates the cost of
/// polynomial arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial(u128);

impl Monomial {
    /// The empty monomial x^0 (the constant 1).
    pub const fn unit() -> Self {
        Monomial(0)
    }

    /// Builds a monomial from explicit exponents, one per variable.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        assert!(exponents.len() <= MAX_VARS, "too many variables");
        let mut packed = 0u128;
        for (v, &e) in exponents.iter().enumerate() {
            assert!(e <= MASK as u32, "exponent {e} does not fit in 8 bits");
            packed |= u128::from(e) << (BITS * v as u32);
        }
        Monomial(packed)
    }

    /// Exponent of variable `v`.
    pub fn exponent(self, v: usize) -> u32 {
        debug_assert!(v < MAX_VARS);
        ((self.0 >> (BITS * v as u32)) & MASK) as u32
    }

    /// This monomial times x_v.
    pub fn times_var(self, v: usize) -> Self {
        debug_assert!(v < MAX_VARS);
        let shifted = 1u128 << (BITS * v as u32);
        assert!(
            (self.0 >> (BITS * v as u32)) & MASK != MASK,
            "exponent overflow for variable {v}"
        );
        Monomial(self.0 + shifted)
    }

    /// This monomial with variable `v`'s exponent set to zero.
    pub fn without_var(self, v: usize) -> Self {
        debug_assert!(v < MAX_VARS);
        Monomial(self.0 & !(MASK << (BITS * v as u32)))
    }

    /// True when every exponent is zero.
    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    /// True when variable `v` does not occur.
    pub fn misses_var(self, v: usize) -> bool {
        self.exponent(v) == 0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in 0..MAX_VARS {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
            first = false;
        }
        Ok(())
    }
}
