//! Arithmetic modulo the Mersenne prime `2^61 - 1`.

pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn reduce(x: u128) -> u64 {
    let lo = (x as u64 & P) as u128;
    let hi = x >> 61;
    let mut s = lo + hi;
    s = (s & P as u128) + (s >> 61);
    let mut r = s as u64;
    if r >= P {
        r -= P;
    }
    r
}

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    reduce(a as u128 * b as u128)
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

/// Determinant of a square matrix given row-major; consumes the buffer.
pub fn det(m: &mut [u64], n: usize) -> u64 {
    let mut result = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
            return 0;
        };
        if piv != col {
            for j in 0..n {
                m.swap(piv * n + j, col * n + j);
            }
            result = sub(0, result);
        }
        let d = m[col * n + col];
        result = mul(result, d);
        let dinv = inv(d);
        for r in col + 1..n {
            let f = m[r * n + col];
            if f == 0 {
                continue;
            }
            let f = mul(f, dinv);
            for j in col..n {
                let v = mul(f, m[col * n + j]);
                m[r * n + j] = sub(m[r * n + j], v);
            }
        }
    }
    result
}

/// Row-major `(d+1) x (d+1)` matrix turning values at `0, 1, ..., d` into
/// monomial coefficients: `coeff[i] = sum_j inv[i][j] * value[j]`.
pub fn inverse_vandermonde(d: usize) -> Vec<u64> {
    let size = d + 1;
    let mut out = vec![0u64; size * size];
    for j in 0..size {
        // Lagrange basis polynomial for node j
        let mut poly = vec![1u64];
        let mut denom = 1u64;
        for m in 0..size {
            if m == j {
                continue;
            }
            // poly *= (x - m)
            let mut next = vec![0u64; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                next[i + 1] = add(next[i + 1], c);
                next[i] = sub(next[i], mul(c, m as u64));
            }
            poly = next;
            denom = mul(denom, sub(j as u64, m as u64));
        }
        let dinv = inv(denom);
        for (i, &c) in poly.iter().enumerate() {
            out[i * size + j] = mul(c, dinv);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_matches_modulo() {
        for &(a, b) in &[(P - 1, P - 1), (123456789, 987654321), (1 << 60, 3)] {
            assert_eq!(mul(a, b) as u128, (a as u128 * b as u128) % P as u128);
        }
        assert_eq!(mul(7, inv(7)), 1);
    }

    #[test]
    fn determinant_small() {
        let mut m = vec![2, 3, 1, 4];
        assert_eq!(det(&mut m, 2), 5);
        let mut m = vec![0, 1, 1, 0];
        assert_eq!(det(&mut m, 2), P - 1);
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        // f(x) = 3 + 2x + 5x^3
        let f = |x: u64| add(add(3, mul(2, x)), mul(5, pow(x, 3)));
        let vals: Vec<u64> = (0..4).map(f).collect();
        let iv = inverse_vandermonde(3);
        let coeffs: Vec<u64> = (0..4)
            .map(|i| (0..4).fold(0, |acc, j| add(acc, mul(iv[i * 4 + j], vals[j]))))
            .collect();
        assert_eq!(coeffs, vec![3, 2, 0, 5]);
    }
}
