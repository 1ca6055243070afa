use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::algebra::{rat, Rational};
use crate::{Error, Result};

/// Cohomology of an irreducible homogeneous bundle: zero, or a single
/// irreducible representation in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cohomology {
    Vanishes,
    Nonzero { degree: u32, highest_weight: Vec<i64>, rep_dimension: u64 },
}

impl Cohomology {
    /// `(-1)^degree · dimension`.
    pub fn euler(&self) -> i64 {
        match self {
            Cohomology::Vanishes => 0,
            Cohomology::Nonzero { degree, rep_dimension, .. } => {
                let d = *rep_dimension as i64;
                if degree.is_even() {
                    d
                } else {
                    -d
                }
            }
        }
    }
}

fn check_bundle_weight(weight: &[i64]) -> Result<()> {
    if weight.len() < 2 || weight[0] < weight[1] || weight[2..].iter().any(|&w| w != 0) {
        return Err(Error::MalformedWeight(format!("{weight:?} is not of the form (w1 >= w2, 0, ..., 0)")));
    }
    Ok(())
}

fn to_dimension(r: Rational) -> u64 {
    debug_assert!(r.is_integer());
    r.to_integer().to_u64().expect("representation dimension fits in u64")
}

/// Weyl dimension of the `GL(m)` irreducible with dominant weight `lambda`.
pub fn gl_dimension(lambda: &[i64]) -> u64 {
    let m = lambda.len();
    let mut d = rat(1);
    for i in 0..m {
        for j in i + 1..m {
            d *= Rational::new((lambda[i] - lambda[j] + (j - i) as i64).into(), ((j - i) as i64).into());
        }
    }
    to_dimension(d)
}

/// Weyl dimension of the `Sp(2k)` irreducible with dominant weight `lambda`.
pub fn sp_dimension(lambda: &[i64]) -> u64 {
    let k = lambda.len();
    let rho: Vec<i64> = (1..=k as i64).rev().collect();
    let l: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut d = rat(1);
    for i in 0..k {
        for j in i + 1..k {
            let num = (l[i] - l[j]) * (l[i] + l[j]);
            let den = (rho[i] - rho[j]) * (rho[i] + rho[j]);
            d *= Rational::new(num.into(), den.into());
        }
        d *= Rational::new(l[i].into(), rho[i].into());
    }
    to_dimension(d)
}

/// Borel–Weil–Bott for `GL(m)`, `m = weight.len()`.
pub fn bbw_gl(weight: &[i64]) -> Result<Cohomology> {
    check_bundle_weight(weight)?;
    let m = weight.len();
    let rho: Vec<i64> = (0..m as i64).rev().collect();
    let mut mu: Vec<i64> = weight.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut degree = 0u32;
    // bubble sort into strictly decreasing order, one step per transposition
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..m - 1 {
            if mu[i] == mu[i + 1] {
                return Ok(Cohomology::Vanishes);
            }
            if mu[i] < mu[i + 1] {
                mu.swap(i, i + 1);
                degree += 1;
                changed = true;
            }
        }
    }
    let lambda: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a - b).collect();
    let rep_dimension = gl_dimension(&lambda);
    Ok(Cohomology::Nonzero { degree, highest_weight: lambda, rep_dimension })
}

/// Borel–Weil–Bott for `Sp(2k)`, `k = weight.len()`.
pub fn bbw_sp(weight: &[i64]) -> Result<Cohomology> {
    check_bundle_weight(weight)?;
    let k = weight.len();
    let rho: Vec<i64> = (1..=k as i64).rev().collect();
    let mut mu: Vec<i64> = weight.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut abs: Vec<i64> = mu.iter().map(|x| x.abs()).collect();
    abs.sort_unstable();
    if abs[0] == 0 || abs.windows(2).any(|w| w[0] == w[1]) {
        return Ok(Cohomology::Vanishes);
    }
    // simple reflections: adjacent swaps and the sign flip of the last entry
    let mut degree = 0u32;
    loop {
        if let Some(i) = (0..k - 1).find(|&i| mu[i] < mu[i + 1]) {
            mu.swap(i, i + 1);
        } else if mu[k - 1] < 0 {
            mu[k - 1] = -mu[k - 1];
        } else {
            break;
        }
        degree += 1;
    }
    let lambda: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a - b).collect();
    let rep_dimension = sp_dimension(&lambda);
    Ok(Cohomology::Nonzero { degree, highest_weight: lambda, rep_dimension })
}
