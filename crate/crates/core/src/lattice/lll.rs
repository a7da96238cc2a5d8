//! LLL with exact rational Gram–Schmidt. The lattices here have dimension
//! at most ~10, so exact arithmetic costs nothing and there is no precision
//! to audit.

use crate::algebra::field::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum LatticeError {
    #[error("basis rows are linearly dependent")]
    DependentBasis,
    #[error("delta must satisfy 1/4 < delta < 1")]
    BadDelta,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct GramSchmidt {
    /// mu[i][j] for j < i
    mu: Vec<Vec<Rational>>,
    /// squared norms of the orthogonalized vectors
    norm_sq: Vec<Rational>,
}

fn gram_schmidt(basis: &[Vec<BigInt>]) -> Result<GramSchmidt, LatticeError> {
    let n = basis.len();
    let mut mu = vec![vec![Rational::zero(); n]; n];
    let mut norm_sq = vec![Rational::zero(); n];
    // b*_i . b*_j bookkeeping via mu and norms only
    let mut star: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut v: Vec<Rational> = basis[i]
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        for j in 0..i {
            let num: Rational = basis[i]
                .iter()
                .zip(&star[j])
                .map(|(x, y)| Rational::from_integer(x.clone()) * y)
                .sum();
            let m = num / &norm_sq[j];
            for (vk, sk) in v.iter_mut().zip(&star[j]) {
                *vk -= &m * sk;
            }
            mu[i][j] = m;
        }
        let ns: Rational = v.iter().map(|x| x * x).sum();
        if ns.is_zero() {
            return Err(LatticeError::DependentBasis);
        }
        norm_sq[i] = ns;
        star.push(v);
    }
    Ok(GramSchmidt { mu, norm_sq })
}

fn round_rational(x: &Rational) -> BigInt {
    // nearest integer, ties toward zero
    let two = BigInt::from(2);
    let n = x.numer();
    let d = x.denom();
    if n.is_negative() {
        -((-n * &two + d) / (d * &two))
    } else {
        (n * &two + d) / (d * &two)
    }
}

/// Lovász-reduced basis generating the same lattice.
pub fn lll_reduce(basis: &[Vec<BigInt>], delta: &Rational) -> Result<Vec<Vec<BigInt>>, LatticeError> {
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));
    if delta <= &quarter || delta >= &Rational::one() {
        return Err(LatticeError::BadDelta);
    }
    let mut b: Vec<Vec<BigInt>> = basis.to_vec();
    let n = b.len();
    if n <= 1 {
        gram_schmidt(&b)?;
        return Ok(b);
    }
    let mut k = 1usize;
    let mut gs = gram_schmidt(&b)?;
    while k < n {
        // size-reduce b_k, refreshing mu after each subtraction
        for j in (0..k).rev() {
            let q = round_rational(&gs.mu[k][j]);
            if !q.is_zero() {
                let bj = b[j].clone();
                for (x, y) in b[k].iter_mut().zip(&bj) {
                    *x -= &q * y;
                }
                gs = gram_schmidt(&b)?;
            }
        }
        let lhs = &gs.norm_sq[k];
        let rhs = (delta - &gs.mu[k][k - 1] * &gs.mu[k][k - 1]) * &gs.norm_sq[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            b.swap(k - 1, k);
            gs = gram_schmidt(&b)?;
            k = k.max(2) - 1;
        }
    }
    Ok(b)
}

/// Gram determinant of the basis (squared lattice volume); invariant under
/// reduction, which the tests use as the same-lattice witness.
pub fn gram_det(basis: &[Vec<BigInt>]) -> BigInt {
    let n = basis.len();
    let mut g = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            g[i][j] = Rational::from_integer(dot(&basis[i], &basis[j]));
        }
    }
    // fraction-free enough for our sizes: plain rational elimination
    let mut det = Rational::one();
    for col in 0..n {
        let piv = (col..n).find(|&r| !g[r][col].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => return BigInt::zero(),
        };
        if piv != col {
            g.swap(piv, col);
            det = -det;
        }
        det *= &g[col][col];
        let inv = g[col][col].recip();
        for r in col + 1..n {
            let f = &g[r][col] * &inv;
            if f.is_zero() {
                continue;
            }
            let row = g[col].clone();
            for c in col..n {
                g[r][c] -= &f * &row[c];
            }
        }
    }
    assert!(det.denom().is_one());
    det.numer().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat;

    fn delta() -> Rational {
        rat(3, 4)
    }

    #[test]
    fn identity_fixed() {
        let id: Vec<Vec<BigInt>> = (0..3)
            .map(|i| (0..3).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        assert_eq!(lll_reduce(&id, &delta()).unwrap(), id);
    }

    #[test]
    fn planted_short_vector_dim2() {
        // {(1,0),(phi,1)} with large phi: exhaustive short-vector search in
        // dimension 2 against the LLL first vector
        let phi = BigInt::from(1_000_003);
        let basis = vec![
            vec![BigInt::one(), BigInt::zero()],
            vec![phi.clone(), BigInt::one()],
        ];
        let red = lll_reduce(&basis, &delta()).unwrap();
        assert_eq!(gram_det(&red), gram_det(&basis));
        let first_norm = dot(&red[0], &red[0]);
        // brute force lambda_1 over small coefficient combinations
        let mut best: Option<BigInt> = None;
        for a in -60i64..=60 {
            for b in -60i64..=60 {
                if a == 0 && b == 0 {
                    continue;
                }
                let v: Vec<BigInt> = (0..2)
                    .map(|c| BigInt::from(a) * &basis[0][c] + BigInt::from(b) * &basis[1][c])
                    .collect();
                let n = dot(&v, &v);
                if best.as_ref().map_or(true, |b| &n < b) {
                    best = Some(n);
                }
            }
        }
        let lambda1_sq = best.unwrap();
        // LLL guarantee with delta 3/4 in dim 2: |b1|^2 <= 2 lambda_1^2
        assert!(first_norm <= lambda1_sq * 2);
    }

    #[test]
    fn dependent_rows_rejected() {
        let basis = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(lll_reduce(&basis, &delta()), Err(LatticeError::DependentBasis));
    }
}
