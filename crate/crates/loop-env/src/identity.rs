use std::fmt;
use std::str::FromStr;

use quiver_core::{BigRational, CoweightVector, Quiver};

use crate::env::{divided_power, EnvElt, Pbw, PbwOrder};
use crate::lie::{LieEltLoop, LoopAlgebra};
use crate::slope::{slope_project, SlopeIdealSpec};
use crate::theta::{e_sym, exp_series};
use crate::LoopError;

/// Which of the two `A_1^(1)` generating-series identities to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentitySeries {
    /// `Σ (−1)^ℓ f^(ℓ)(es⁻¹)^(ℓ) u^{−ℓ} = exp(Σ hs^{−k}u^{−k}/k)`
    H,
    /// `Σ (−1)^ℓ f^(ℓ)(es⁻¹)^(ℓ+1) u^{−ℓ−1} = (Σ es^{−k}u^{−k}) exp(Σ hs^{−k}u^{−k}/k)`
    E,
}

impl fmt::Display for IdentitySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentitySeries::H => "h-series",
            IdentitySeries::E => "e-series",
        })
    }
}

impl FromStr for IdentitySeries {
    type Err = LoopError;

    fn from_str(s: &str) -> Result<Self, LoopError> {
        match s {
            "h" | "h-series" => Ok(IdentitySeries::H),
            "e" | "e-series" => Ok(IdentitySeries::E),
            _ => Err(LoopError::Parse(format!("unknown series `{s}`, expected h-series or e-series"))),
        }
    }
}

/// One coefficient of an identity: both sides in `U⁻(Lsl₂)/J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCoefficient {
    pub order: u32,
    pub lhs: EnvElt,
    pub rhs: EnvElt,
}

impl IdentityCoefficient {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub series: IdentitySeries,
    pub coefficients: Vec<IdentityCoefficient>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.coefficients.iter().all(IdentityCoefficient::holds)
    }

    /// First failing coefficient, if any.
    pub fn witness(&self) -> Option<&IdentityCoefficient> {
        self.coefficients.iter().find(|c| !c.holds())
    }
}

/// Largest order accepted by [`verify_identity_a1`].
pub const MAX_IDENTITY_ORDER: u32 = 8;

/// The algebra, order and quotient used for the `A_1^(1)` identities:
/// `θ = (−1, 1)` and `J` the left ideal of slopes above `0`, i.e. generated
/// by the `f s^a` with `a ≤ 0`.
pub fn a1_setup(q: &Quiver) -> Result<(LoopAlgebra, CoweightVector), LoopError> {
    let alg = LoopAlgebra::new(q)?;
    if alg.vertices() != 2 {
        return Err(LoopError::Domain("the identities are stated for A_1^(1)".into()));
    }
    Ok((alg, CoweightVector::from_ints(&[-1, 1])))
}

/// Checks the `u^{−n}` coefficients, `1 ≤ n ≤ order`, in `U⁻(Lsl₂)/J`.
pub fn verify_identity_a1(q: &Quiver, series: IdentitySeries, order: u32) -> Result<IdentityReport, LoopError> {
    if order > MAX_IDENTITY_ORDER {
        return Err(LoopError::Domain(format!("order {order} exceeds the cap {MAX_IDENTITY_ORDER}")));
    }
    let (alg, theta) = a1_setup(q)?;
    let pbw = Pbw::new(&alg, PbwOrder::slope(&alg, theta.clone())?);
    let spec = SlopeIdealSpec::nonpositive(theta);
    let f = LieEltLoop::basis(alg.root(&[-1], 0, 0));
    let e1 = LieEltLoop::basis(alg.root(&[1], -1, 0));
    let p = exp_series(&pbw, 1, order as usize)?;
    let mut coefficients = vec![];
    for n in 1..=order {
        let (fl, el) = match series {
            IdentitySeries::H => (n, n),
            IdentitySeries::E => (n - 1, n),
        };
        let sign = BigRational::from_integer(if fl % 2 == 0 { 1.into() } else { (-1).into() });
        let lhs = pbw.mul(&divided_power(&pbw, &f, fl)?, &divided_power(&pbw, &e1, el)?)?.scale(&sign);
        let rhs = match series {
            IdentitySeries::H => p[n as usize].clone(),
            IdentitySeries::E => {
                let mut acc = EnvElt::zero();
                for k in 1..=n {
                    let e = EnvElt::monomial(vec![e_sym(&alg, 1, -i64::from(k))]);
                    acc = acc.add(&pbw.mul(&e, &p[(n - k) as usize])?);
                }
                acc
            }
        };
        coefficients.push(IdentityCoefficient {
            order: n,
            lhs: slope_project(&pbw, &spec, &lhs)?,
            rhs: slope_project(&pbw, &spec, &rhs)?,
        });
    }
    Ok(IdentityReport { series, coefficients })
}
