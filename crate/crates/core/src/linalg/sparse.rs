//! Sorted sparse vectors: `(index, value)` pairs with strictly increasing
//! indices and no stored zeros.

use crate::rational::Rational;

pub type SparseVec = Vec<(usize, Rational)>;

pub fn from_dense(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn unit(i: usize) -> SparseVec {
    vec![(i, Rational::one())]
}

pub fn get(v: &SparseVec, i: usize) -> Option<&Rational> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

pub fn scale(v: &SparseVec, s: &Rational) -> SparseVec {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * s)).collect()
}

/// `a + s * b`.
pub fn axpy(a: &SparseVec, s: &Rational, b: &SparseVec) -> SparseVec {
    if s.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let bj = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ai < bj {
            out.push(a[i].clone());
            i += 1;
        } else if bj < ai {
            out.push((bj, s * &b[j].1));
            j += 1;
        } else {
            let x = &a[i].1 + &(s * &b[j].1);
            if !x.is_zero() {
                out.push((ai, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sub(a: &SparseVec, b: &SparseVec) -> SparseVec {
    axpy(a, &-Rational::one(), b)
}

/// Accumulates unsorted contributions into a canonical sparse vector.
pub fn collect(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseVec {
    let mut map = std::collections::BTreeMap::<usize, Rational>::new();
    for (i, x) in entries {
        if x.is_zero() {
            continue;
        }
        let slot = map.entry(i).or_insert_with(Rational::zero);
        *slot += &x;
    }
    map.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// `Σ v_i · f(i)`: applies the linear map with basis images `f(i)`.
pub fn apply_linear(v: &SparseVec, f: impl Fn(usize) -> SparseVec) -> SparseVec {
    collect(v.iter().flat_map(|(i, c)| f(*i).into_iter().map(move |(j, x)| (j, &x * c))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels() {
        let a = from_dense(&[1.into(), 0.into(), 2.into()]);
        let b = from_dense(&[1.into(), 1.into(), 0.into()]);
        let c = axpy(&a, &(-1).into(), &b);
        assert_eq!(c, vec![(1, Rational::from_int(-1)), (2, Rational::from_int(2))]);
        assert_eq!(to_dense(&c, 3)[0], Rational::zero());
    }
}
