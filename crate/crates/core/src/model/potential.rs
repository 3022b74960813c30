use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat_int, IntMatrix, Rat, RatMatrix};

/// Weights `q_j` with `A_W q = (1, ..., 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub q: Vec<Rat>,
    pub sum: Rat,
}

impl WeightSystem {
    /// The index `k = sum q_j` when it is a positive integer.
    pub fn k(&self) -> Option<i64> {
        crate::linalg::to_i64(&self.sum).filter(|k| *k > 0)
    }

    pub fn max_weight(&self) -> Rat {
        self.q.iter().max().cloned().unwrap_or_else(Rat::zero)
    }
}

/// An invertible potential `W = sum_i c_i prod_j x_j^{a_ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potential {
    exponents: Vec<Vec<i64>>,
    coefficients: Vec<Rat>,
    weights: WeightSystem,
}

impl Potential {
    /// Validates the exponent matrix and solves for the weights.
    pub fn new(matrix: Vec<Vec<i64>>, coefficients: Option<Vec<Rat>>) -> Result<Self> {
        let d = matrix.len();
        for row in &matrix {
            if row.len() != d {
                return Err(Error::NotSquare {
                    rows: d,
                    cols: row.len(),
                });
            }
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if a < 0 {
                    return Err(Error::NegativeExponent {
                        row: i,
                        col: j,
                        value: a,
                    });
                }
            }
            if row.iter().all(|&a| a == 0) {
                return Err(Error::ZeroRow(i));
            }
        }
        let a = RatMatrix::from_i64(&matrix);
        if a.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let q = a.solve(&vec![Rat::one(); d]).ok_or(Error::SingularMatrix)?;
        if let Some((index, value)) = q.iter().enumerate().find(|(_, x)| !x.is_positive()) {
            return Err(Error::NonPositiveWeight {
                index,
                value: value.to_string(),
            });
        }
        let coefficients = match coefficients {
            None => vec![Rat::one(); d],
            Some(c) => {
                if c.len() != d {
                    return Err(Error::CoefficientCount {
                        expected: d,
                        got: c.len(),
                    });
                }
                if let Some(index) = c.iter().position(Zero::is_zero) {
                    return Err(Error::ZeroCoefficient { index });
                }
                c
            }
        };
        let sum = q.iter().sum();
        Ok(Potential {
            exponents: matrix,
            coefficients,
            weights: WeightSystem { q, sum },
        })
    }

    /// Fermat sum `x_1^{a_1} + ... + x_d^{a_d}`.
    pub fn fermat(exponents: &[i64]) -> Result<Self> {
        let d = exponents.len();
        let matrix = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { exponents[i] } else { 0 })
                    .collect()
            })
            .collect();
        Potential::new(matrix, None)
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    pub fn exponent_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64(&self.exponents)
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coefficients
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn q(&self) -> &[Rat] {
        &self.weights.q
    }

    pub fn det(&self) -> i64 {
        use num_traits::ToPrimitive;
        self.exponent_matrix()
            .det()
            .to_i64()
            .expect("determinant fits in i64")
    }

    /// Same potential with the coefficients replaced.
    pub fn with_coefficients(&self, coefficients: Vec<Rat>) -> Result<Self> {
        Potential::new(self.exponents.clone(), Some(coefficients))
    }

    /// `W^T = sum_i prod_j y_j^{a_ji}` with unit coefficients.
    pub fn transpose(&self) -> Result<Self> {
        let d = self.dim();
        let t = (0..d)
            .map(|i| (0..d).map(|j| self.exponents[j][i]).collect())
            .collect();
        Potential::new(t, None)
    }

    /// `(1/q_j - 1)` multiplied over all variables.
    pub fn milnor_number(&self) -> Rat {
        self.q().iter().map(|q| q.recip() - Rat::one()).product()
    }

    /// Top degree of the Milnor ring, `sum_j (1 - 2 q_j)`.
    pub fn socle_degree(&self) -> Rat {
        self.q().iter().map(|q| Rat::one() - rat_int(2) * q).sum()
    }

    pub fn central_charge(&self) -> Rat {
        rat_int(self.dim() as i64) - rat_int(2) * &self.weights.sum
    }

    pub fn describe(&self) -> String {
        let mut terms = Vec::new();
        for (row, c) in self.exponents.iter().zip(&self.coefficients) {
            let mono: Vec<String> = row
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(j, &a)| {
                    if a == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, a)
                    }
                })
                .collect();
            let mono = mono.join("*");
            if c.is_one() {
                terms.push(mono);
            } else {
                terms.push(format!("({c})*{mono}"));
            }
        }
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn fermat_cubic_weights() {
        let p = Potential::fermat(&[3, 3, 3]).unwrap();
        assert_eq!(p.q(), &[rat(1, 3), rat(1, 3), rat(1, 3)]);
        assert_eq!(p.weights().k(), Some(1));
        assert_eq!(p.central_charge(), rat_int(1));
    }

    #[test]
    fn chain_weights_are_non_integral() {
        let p = Potential::new(vec![vec![2, 1], vec![0, 2]], None).unwrap();
        assert_eq!(p.q(), &[rat(1, 4), rat(1, 2)]);
        assert_eq!(p.weights().sum, rat(3, 4));
        assert_eq!(p.weights().k(), None);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert_eq!(
            Potential::new(vec![vec![1, 1], vec![1, 1]], None),
            Err(Error::SingularMatrix)
        );
        assert!(matches!(
            Potential::new(vec![vec![2, -1], vec![0, 2]], None),
            Err(Error::NegativeExponent { .. })
        ));
        assert!(matches!(
            Potential::new(vec![vec![2, 1]], None),
            Err(Error::NotSquare { .. })
        ));
        // x^1 y^3 + x^3 y^1 has positive weights, x y^3 + y with x^2 ... check a negative weight case
        assert!(matches!(
            Potential::new(vec![vec![1, 2], vec![0, 1]], None),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            Potential::new(vec![vec![2]], Some(vec![rat_int(0)])),
            Err(Error::ZeroCoefficient { .. })
        ));
    }

    #[test]
    fn transpose_is_an_involution() {
        let p = Potential::new(vec![vec![2, 1], vec![0, 2]], None).unwrap();
        let t = p.transpose().unwrap();
        assert_eq!(t.exponents(), &[vec![2, 0], vec![1, 2]]);
        assert_eq!(t.transpose().unwrap(), p);
        let f = Potential::fermat(&[3, 3, 3]).unwrap();
        assert_eq!(f.transpose().unwrap(), f);
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(
            Potential::fermat(&[3, 3, 3]).unwrap().milnor_number(),
            rat_int(8)
        );
        let p = Potential::new(vec![vec![2, 1], vec![0, 2]], None).unwrap();
        assert_eq!(p.milnor_number(), rat_int(3));
    }
}
