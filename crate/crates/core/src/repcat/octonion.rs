//! Split octonions by Cayley–Dickson doubling of `M_2(Q)`.
//!
//! An octonion is a pair `(a, b)` of 2×2 matrices, stored as
//! `[a11, a12, a21, a22, b11, b12, b21, b22]`, with
//!
//! ```text
//! (a, b)(c, d) = (ac + d̄b, da + bc̄),   conj(a, b) = (ā, −b),
//! ```
//!
//! where `ā` is the adjugate. The norm is `n(a, b) = det a − det b`.

use crate::exactlin::Scalar;

pub type Oct = [Scalar; 8];

type M2 = [Scalar; 4];

fn m2_mul(x: &M2, y: &M2) -> M2 {
    [
        &x[0] * &y[0] + &x[1] * &y[2],
        &x[0] * &y[1] + &x[1] * &y[3],
        &x[2] * &y[0] + &x[3] * &y[2],
        &x[2] * &y[1] + &x[3] * &y[3],
    ]
}

fn m2_adj(x: &M2) -> M2 {
    [x[3].clone(), -&x[1], -&x[2], x[0].clone()]
}

fn m2_add(x: &M2, y: &M2) -> M2 {
    [&x[0] + &y[0], &x[1] + &y[1], &x[2] + &y[2], &x[3] + &y[3]]
}

fn m2_det(x: &M2) -> Scalar {
    &x[0] * &x[3] - &x[1] * &x[2]
}

fn split(x: &Oct) -> (M2, M2) {
    (
        [x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()],
        [x[4].clone(), x[5].clone(), x[6].clone(), x[7].clone()],
    )
}

fn join(a: M2, b: M2) -> Oct {
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [a0, a1, a2, a3, b0, b1, b2, b3]
}

pub fn zero() -> Oct {
    std::array::from_fn(|_| Scalar::zero())
}

pub fn one() -> Oct {
    let mut o = zero();
    o[0] = Scalar::one();
    o[3] = Scalar::one();
    o
}

pub fn basis(i: usize) -> Oct {
    let mut o = zero();
    o[i] = Scalar::one();
    o
}

pub fn from_slice(v: &[Scalar]) -> Oct {
    std::array::from_fn(|i| v[i].clone())
}

pub fn mul(x: &Oct, y: &Oct) -> Oct {
    let (a, b) = split(x);
    let (c, d) = split(y);
    let first = m2_add(&m2_mul(&a, &c), &m2_mul(&m2_adj(&d), &b));
    let second = m2_add(&m2_mul(&d, &a), &m2_mul(&b, &m2_adj(&c)));
    join(first, second)
}

pub fn conj(x: &Oct) -> Oct {
    let (a, b) = split(x);
    join(m2_adj(&a), b.map(|v| -v))
}

pub fn add(x: &Oct, y: &Oct) -> Oct {
    std::array::from_fn(|i| &x[i] + &y[i])
}

pub fn sub(x: &Oct, y: &Oct) -> Oct {
    std::array::from_fn(|i| &x[i] - &y[i])
}

pub fn scale(x: &Oct, c: &Scalar) -> Oct {
    std::array::from_fn(|i| &x[i] * c)
}

pub fn norm(x: &Oct) -> Scalar {
    let (a, b) = split(x);
    m2_det(&a) - m2_det(&b)
}

/// Real part trace `t(x) = x + x̄`, a scalar multiple of `1`.
pub fn trace(x: &Oct) -> Scalar {
    &x[0] + &x[3]
}

/// Polar form `⟨x, y⟩ = n(x + y) − n(x) − n(y)`.
pub fn polar(x: &Oct, y: &Oct) -> Scalar {
    norm(&add(x, y)) - norm(x) - norm(y)
}

/// Basis of the trace-zero part: `E11 − E22, E12, E21` in `a`, all of `b`.
pub fn imaginary_basis() -> Vec<Oct> {
    let mut h = zero();
    h[0] = Scalar::one();
    h[3] = Scalar::from_int(-1);
    vec![h, basis(1), basis(2), basis(4), basis(5), basis(6), basis(7)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{random_vector, seeded};

    fn rand_oct(rng: &mut crate::exactlin::EngineRng) -> Oct {
        from_slice(&random_vector(rng, 8, 9))
    }

    #[test]
    fn composition_and_conjugation() {
        let mut rng = seeded(5);
        for _ in 0..20 {
            let x = rand_oct(&mut rng);
            let y = rand_oct(&mut rng);
            assert_eq!(norm(&mul(&x, &y)), norm(&x) * norm(&y));
            assert_eq!(mul(&x, &conj(&x)), scale(&one(), &norm(&x)));
            assert_eq!(conj(&mul(&x, &y)), mul(&conj(&y), &conj(&x)));
        }
    }

    #[test]
    fn alternative() {
        let mut rng = seeded(6);
        let x = rand_oct(&mut rng);
        let y = rand_oct(&mut rng);
        assert_eq!(mul(&mul(&x, &x), &y), mul(&x, &mul(&x, &y)));
        assert_eq!(mul(&mul(&y, &x), &x), mul(&y, &mul(&x, &x)));
        // not associative
        let z = rand_oct(&mut rng);
        assert_ne!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
    }
}
