//! Hot numeric loops shared by the tape ops.
//!
//! Plain slices and ikj loop orders so the compiler can vectorize; every
//! network in the crate bottoms out in these three matmul variants.

/// `out += a (m x k) * b (k x n)`
pub fn matmul_acc(out: &mut [f64], a: &[f64], b: &[f64], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(out.len(), m * n);
    for i in 0..m {
        let arow = &a[i * k..(i + 1) * k];
        let orow = &mut out[i * n..(i + 1) * n];
        for (kk, &aik) in arow.iter().enumerate() {
            if aik == 0.0 {
                continue;
            }
            let brow = &b[kk * n..(kk + 1) * n];
            for j in 0..n {
                orow[j] += aik * brow[j];
            }
        }
    }
}

/// `out += a (m x k) * b^T` where `b` is `n x k`.
pub fn matmul_nt_acc(out: &mut [f64], a: &[f64], b: &[f64], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), n * k);
    debug_assert_eq!(out.len(), m * n);
    for i in 0..m {
        let arow = &a[i * k..(i + 1) * k];
        let orow = &mut out[i * n..(i + 1) * n];
        for j in 0..n {
            let brow = &b[j * k..(j + 1) * k];
            let mut acc = 0.0;
            for kk in 0..k {
                acc += arow[kk] * brow[kk];
            }
            orow[j] += acc;
        }
    }
}

/// `out += a^T * b` where `a` is `k x m` and `b` is `k x n`.
pub fn matmul_tn_acc(out: &mut [f64], a: &[f64], b: &[f64], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), k * m);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(out.len(), m * n);
    for kk in 0..k {
        let arow = &a[kk * m..(kk + 1) * m];
        let brow = &b[kk * n..(kk + 1) * n];
        for i in 0..m {
            let aki = arow[i];
            if aki == 0.0 {
                continue;
            }
            let orow = &mut out[i * n..(i + 1) * n];
            for j in 0..n {
                orow[j] += aki * brow[j];
            }
        }
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_variants_agree() {
        // a = [[1,2],[3,4],[5,6]] (3x2), b = [[7,8,9],[10,11,12]] (2x3)
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let b = [7.0, 8.0, 9.0, 10.0, 11.0, 12.0];
        let mut c = vec![0.0; 9];
        matmul_acc(&mut c, &a, &b, 3, 2, 3);
        assert_eq!(c, vec![27.0, 30.0, 33.0, 61.0, 68.0, 75.0, 95.0, 106.0, 117.0]);

        // nt: a (3x2) * bt^T where bt = b^T (3x2) gives the same product
        let bt = [7.0, 10.0, 8.0, 11.0, 9.0, 12.0];
        let mut c2 = vec![0.0; 9];
        matmul_nt_acc(&mut c2, &a, &bt, 3, 2, 3);
        assert_eq!(c, c2);

        // tn: at^T (3x2 from 2x3) * b
        let at = [1.0, 3.0, 5.0, 2.0, 4.0, 6.0];
        let mut c3 = vec![0.0; 9];
        matmul_tn_acc(&mut c3, &at, &b, 3, 2, 3);
        assert_eq!(c, c3);
    }
}
