use core::fmt;

/// Largest number of ring variables supported by [`Monomial`].
pub const MAX_VARS: usize = 16;

/// Exponent vector with a cached total degree.
///
/// Exponents are stored inline so that monomials are `Copy`; positions past
/// the ambient ring's variable count are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS], degree: 0 };

    /// Panics if more than [`MAX_VARS`] exponents are given or an exponent
    /// exceeds `u16::MAX`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut m = Self::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
            m.degree += e;
        }
        m
    }

    pub fn var(index: usize, power: u32) -> Self {
        assert!(index < MAX_VARS, "variable index out of range");
        let mut m = Self::ONE;
        m.exps[index] = u16::try_from(power).expect("exponent overflow");
        m.degree = power;
        m
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u32 {
        u32::from(self.exps[index])
    }

    /// The first `nvars` exponents.
    pub fn exponents(&self, nvars: usize) -> impl Iterator<Item = u32> + '_ {
        self.exps[..nvars].iter().map(|&e| u32::from(e))
    }

    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        weights
            .iter()
            .zip(self.exps.iter())
            .map(|(&w, &e)| u64::from(w) * u64::from(e))
            .sum()
    }

    /// Index of the only variable occurring, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        out.degree += other.degree;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for (a, &b) in out.exps.iter_mut().zip(self.exps.iter()) {
            *a -= b;
        }
        out.degree -= self.degree;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Self::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.degree += u32::from(out.exps[i]);
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub(crate) fn raw(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    /// Exponent vector with position `index` replaced.
    pub fn with_exponent(&self, index: usize, e: u32) -> Monomial {
        let mut out = *self;
        out.degree = out.degree - u32::from(out.exps[index]) + e;
        out.exps[index] = u16::try_from(e).expect("exponent overflow");
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}
