//! Piecewise-constant problem data: the diffusion matrix A, reaction c, Robin
//! weight alpha, and the two eigenvalue weights beta1 (domain) and beta2
//! (Neumann boundary).

use nalgebra::Matrix2;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoefficientError {
    #[error("no {name} coefficient for region label {region}")]
    MissingRegion { name: &'static str, region: i32 },
    #[error("diffusion matrix for region {region} is not symmetric")]
    NotSymmetric { region: i32 },
    #[error("diffusion matrix for region {region} has minimal eigenvalue {eig:.3e} below {threshold:.1e}")]
    NotPositiveDefinite {
        region: i32,
        eig: f64,
        threshold: f64,
    },
    #[error("{name} must be nonnegative, got {value}")]
    Negative { name: &'static str, value: f64 },
}

/// A piecewise-constant coefficient: one value per region label, with an
/// optional global fallback.
#[derive(Debug, Clone)]
pub struct RegionMap<T: Copy> {
    global: Option<T>,
    overrides: BTreeMap<i32, T>,
}

impl<T: Copy> RegionMap<T> {
    pub fn constant(value: T) -> Self {
        RegionMap {
            global: Some(value),
            overrides: BTreeMap::new(),
        }
    }

    pub fn from_regions(values: BTreeMap<i32, T>) -> Self {
        RegionMap {
            global: None,
            overrides: values,
        }
    }

    pub fn set(&mut self, region: i32, value: T) {
        self.overrides.insert(region, value);
    }

    pub fn get(&self, name: &'static str, region: i32) -> Result<T, CoefficientError> {
        self.overrides
            .get(&region)
            .copied()
            .or(self.global)
            .ok_or(CoefficientError::MissingRegion { name, region })
    }

    pub fn values(&self) -> impl Iterator<Item = (Option<i32>, T)> + '_ {
        self.global
            .iter()
            .map(|&v| (None, v))
            .chain(self.overrides.iter().map(|(&r, &v)| (Some(r), v)))
    }
}

/// Coefficients of the eigenvalue problem
/// `-div(A grad u) + c u = lambda beta1 u` in the domain with
/// `(A grad u) . n + alpha u = lambda beta2 u` on the Neumann part and `u = 0`
/// on the Dirichlet part.
#[derive(Debug, Clone)]
pub struct ProblemCoefficients {
    pub diffusion: RegionMap<Matrix2<f64>>,
    pub reaction: RegionMap<f64>,
    pub robin: f64,
    pub weight_domain: RegionMap<f64>,
    pub weight_boundary: f64,
}

impl ProblemCoefficients {
    /// The Laplace eigenvalue problem: A = I, c = alpha = 0, beta1 = 1,
    /// beta2 = 0.
    pub fn laplace() -> Self {
        ProblemCoefficients {
            diffusion: RegionMap::constant(Matrix2::identity()),
            reaction: RegionMap::constant(0.0),
            robin: 0.0,
            weight_domain: RegionMap::constant(1.0),
            weight_boundary: 0.0,
        }
    }

    /// Check symmetry, uniform positive definiteness of A, and the sign
    /// conditions c, alpha, beta1, beta2 >= 0.
    pub fn validate(&self, pd_threshold: f64) -> Result<(), CoefficientError> {
        for (region, a) in self.diffusion.values() {
            let region = region.unwrap_or(0);
            if (a[(0, 1)] - a[(1, 0)]).abs() > 1e-14 * a.norm() {
                return Err(CoefficientError::NotSymmetric { region });
            }
            let eig = min_eigenvalue_sym2(&a);
            if eig < pd_threshold {
                return Err(CoefficientError::NotPositiveDefinite {
                    region,
                    eig,
                    threshold: pd_threshold,
                });
            }
        }
        for (_, c) in self.reaction.values() {
            if c < 0.0 {
                return Err(CoefficientError::Negative {
                    name: "c",
                    value: c,
                });
            }
        }
        if self.robin < 0.0 {
            return Err(CoefficientError::Negative {
                name: "alpha",
                value: self.robin,
            });
        }
        for (_, b1) in self.weight_domain.values() {
            if b1 < 0.0 {
                return Err(CoefficientError::Negative {
                    name: "beta1",
                    value: b1,
                });
            }
        }
        if self.weight_boundary < 0.0 {
            return Err(CoefficientError::Negative {
                name: "beta2",
                value: self.weight_boundary,
            });
        }
        Ok(())
    }
}

/// Smaller eigenvalue of a symmetric 2x2 matrix.
pub fn min_eigenvalue_sym2(a: &Matrix2<f64>) -> f64 {
    let tr = a[(0, 0)] + a[(1, 1)];
    let det = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
    let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
    0.5 * (tr - disc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_lookup_prefers_override() {
        let mut m = RegionMap::constant(1.0);
        m.set(3, 2.5);
        assert_eq!(m.get("c", 0).unwrap(), 1.0);
        assert_eq!(m.get("c", 3).unwrap(), 2.5);
        let only: RegionMap<f64> = RegionMap::from_regions([(1, 4.0)].into());
        assert!(only.get("c", 0).is_err());
    }

    #[test]
    fn validation_rejects_indefinite_diffusion() {
        let mut coeffs = ProblemCoefficients::laplace();
        coeffs.diffusion = RegionMap::constant(Matrix2::new(1.0, 2.0, 2.0, 1.0));
        assert!(matches!(
            coeffs.validate(1e-12),
            Err(CoefficientError::NotPositiveDefinite { .. })
        ));
        let mut neg = ProblemCoefficients::laplace();
        neg.reaction = RegionMap::constant(-1.0);
        assert!(matches!(
            neg.validate(1e-12),
            Err(CoefficientError::Negative { name: "c", .. })
        ));
    }
}
