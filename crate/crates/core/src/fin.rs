//! Index bijections witnessing finiteness of sums and products.
//!
//! Binary sums concatenate ranges, products are row-major blocks, and
//! the n-ary forms fold the binary ones left-associated. Zero-size
//! summands and factors are legal and give empty ranges.

use alloc::vec::Vec;
use core::fmt;

/// Position in `Fin(N) + Fin(M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumIndex {
    Left(usize),
    Right(usize),
}

/// Position in `Fin(N) × Fin(M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductIndex {
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FinError {
    OutOfRange,
    LengthMismatch { sizes: usize, coords: usize },
}

impl fmt::Display for FinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinError::OutOfRange => write!(f, "index out of range"),
            FinError::LengthMismatch { sizes, coords } => {
                write!(f, "{sizes} sizes but {coords} coordinates")
            }
        }
    }
}

impl core::error::Error for FinError {}

/// Left(i) ↦ i, Right(i) ↦ N+i.
pub fn sum_index(s: SumIndex, n: usize, m: usize) -> Result<usize, FinError> {
    match s {
        SumIndex::Left(i) if i < n => Ok(i),
        SumIndex::Right(i) if i < m => Ok(n + i),
        _ => Err(FinError::OutOfRange),
    }
}

pub fn sum_unindex(k: usize, n: usize, m: usize) -> Result<SumIndex, FinError> {
    if k < n {
        Ok(SumIndex::Left(k))
    } else if k < n + m {
        Ok(SumIndex::Right(k - n))
    } else {
        Err(FinError::OutOfRange)
    }
}

/// Row-major: (first, second) ↦ first·M + second.
pub fn product_index(p: ProductIndex, n: usize, m: usize) -> Result<usize, FinError> {
    if p.first < n && p.second < m {
        Ok(p.first * m + p.second)
    } else {
        Err(FinError::OutOfRange)
    }
}

pub fn product_unindex(k: usize, n: usize, m: usize) -> Result<ProductIndex, FinError> {
    if m == 0 || k >= n * m {
        return Err(FinError::OutOfRange);
    }
    Ok(ProductIndex {
        first: k / m,
        second: k % m,
    })
}

/// Prefix-sum offsetting onto `Fin(Σ sizes)`.
pub fn nary_sum_index(sizes: &[usize], which: usize, offset: usize) -> Result<usize, FinError> {
    if which >= sizes.len() || offset >= sizes[which] {
        return Err(FinError::OutOfRange);
    }
    Ok(sizes[..which].iter().sum::<usize>() + offset)
}

pub fn nary_sum_unindex(sizes: &[usize], k: usize) -> Result<(usize, usize), FinError> {
    let mut rest = k;
    for (which, &size) in sizes.iter().enumerate() {
        if rest < size {
            return Ok((which, rest));
        }
        rest -= size;
    }
    Err(FinError::OutOfRange)
}

/// Mixed-radix encoding, most-significant coordinate first.
pub fn nary_product_index(sizes: &[usize], coords: &[usize]) -> Result<usize, FinError> {
    if sizes.len() != coords.len() {
        return Err(FinError::LengthMismatch {
            sizes: sizes.len(),
            coords: coords.len(),
        });
    }
    let mut acc = 0;
    for (&size, &c) in sizes.iter().zip(coords) {
        if c >= size {
            return Err(FinError::OutOfRange);
        }
        acc = acc * size + c;
    }
    Ok(acc)
}

pub fn nary_product_unindex(sizes: &[usize], k: usize) -> Result<Vec<usize>, FinError> {
    let total: usize = sizes.iter().product();
    if k >= total {
        return Err(FinError::OutOfRange);
    }
    let mut coords = alloc::vec![0; sizes.len()];
    let mut rest = k;
    for (i, &size) in sizes.iter().enumerate().rev() {
        coords[i] = rest % size;
        rest /= size;
    }
    Ok(coords)
}
