//! Gaussian elimination over `F_q`.

use crate::field::{BaseField, Fq};

/// Row space of a set of vectors kept in reduced echelon form.
///
/// Each stored row also records how it is expressed in terms of the inserted
/// vectors, so dependencies can be read off (used for minimal polynomials).
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    rows: Vec<Vec<Fq>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<Fq>>,
    inserted: usize,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self { rows: Vec::new(), pivots: Vec::new(), combos: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis, returning the remainder and the
    /// combination of inserted vectors that was subtracted.
    fn reduce(&self, f: &BaseField, v: &[Fq]) -> (Vec<Fq>, Vec<Fq>) {
        let mut r = v.to_vec();
        let mut combo = vec![Fq::ZERO; self.inserted + 1];
        for ((row, &p), c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            let coef = r[p];
            if coef.is_zero() {
                continue;
            }
            axpy(f, &mut r, f.neg(coef), row);
            axpy(f, &mut combo, coef, c);
        }
        (r, combo)
    }

    /// Inserts `v`. Returns `None` if `v` was independent; otherwise the
    /// coefficients `c` with `v = sum_i c_i v_i` over previously inserted vectors.
    pub fn insert(&mut self, f: &BaseField, v: &[Fq]) -> Option<Vec<Fq>> {
        let (r, mut combo) = self.reduce(f, v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            combo.truncate(self.inserted);
            return Some(combo);
        };
        // r = v - sum combo_i v_i; normalize and record r in terms of inserted vectors.
        let inv = f.inv(r[p]).expect("nonzero pivot");
        let row: Vec<Fq> = r.iter().map(|&x| f.mul(x, inv)).collect();
        let mut c: Vec<Fq> = combo.iter().map(|&x| f.mul(f.neg(x), inv)).collect();
        c[self.inserted] = inv;
        // Keep reduced form: clear column p from the other rows.
        for (other, oc) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            let coef = other[p];
            if !coef.is_zero() {
                axpy(f, other, f.neg(coef), &row);
                oc.resize(self.inserted + 1, Fq::ZERO);
                axpy(f, oc, f.neg(coef), &c);
            }
        }
        for oc in self.combos.iter_mut() {
            oc.resize(self.inserted + 1, Fq::ZERO);
        }
        self.rows.push(row);
        self.pivots.push(p);
        self.combos.push(c);
        self.inserted += 1;
        None
    }

    pub fn contains(&self, f: &BaseField, v: &[Fq]) -> bool {
        self.reduce(f, v).0.iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the inserted independent vectors, if `v` is in the span.
    pub fn coordinates(&self, f: &BaseField, v: &[Fq]) -> Option<Vec<Fq>> {
        let (r, mut combo) = self.reduce(f, v);
        combo.truncate(self.inserted);
        r.iter().all(|x| x.is_zero()).then_some(combo)
    }
}

impl Default for EchelonBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// `y += a x`, lengths may differ (extra entries of `x` beyond `y` must be zero).
pub fn axpy(f: &BaseField, y: &mut [Fq], a: Fq, x: &[Fq]) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = f.add(*yi, f.mul(a, xi));
        }
    }
}

pub fn rank(f: &BaseField, rows: &[Vec<Fq>]) -> usize {
    let mut b = EchelonBasis::new();
    for r in rows {
        b.insert(f, r);
    }
    b.rank()
}

/// Basis of `{x : A x = 0}` for an `m x n` matrix given by rows.
pub fn nullspace(f: &BaseField, a: &[Vec<Fq>], n: usize) -> Vec<Vec<Fq>> {
    let mut m: Vec<Vec<Fq>> = a.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, pr);
        let inv = f.inv(m[r][col]).expect("nonzero");
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = f.neg(row[col]);
                axpy(f, row, c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Fq::ZERO; n];
            v[fc] = Fq::ONE;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: &BaseField, xs: &[i64]) -> Vec<Fq> {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn dependencies_are_reported() {
        let f = BaseField::new(5, 1).unwrap();
        let mut b = EchelonBasis::new();
        assert!(b.insert(&f, &v(&f, &[1, 2, 0])).is_none());
        assert!(b.insert(&f, &v(&f, &[0, 1, 1])).is_none());
        // 2*(1,2,0) + 3*(0,1,1) = (2, 7, 3) = (2, 2, 3)
        assert_eq!(b.insert(&f, &v(&f, &[2, 2, 3])), Some(v(&f, &[2, 3])));
        assert_eq!(b.rank(), 2);
        assert!(b.contains(&f, &v(&f, &[1, 3, 1])));
        assert_eq!(b.coordinates(&f, &v(&f, &[1, 3, 1])), Some(v(&f, &[1, 1])));
    }

    #[test]
    fn kernel_of_small_matrix() {
        let f = BaseField::new(3, 1).unwrap();
        let a = vec![v(&f, &[1, 1, 0]), v(&f, &[2, 2, 0])];
        let k = nullspace(&f, &a, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            for row in &a {
                let dot = row.iter().zip(x).fold(Fq::ZERO, |s, (&p, &q)| f.add(s, f.mul(p, q)));
                assert!(dot.is_zero());
            }
        }
        assert_eq!(rank(&f, &a), 1);
    }
}
