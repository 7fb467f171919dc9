//! Complete factorization over the integers.
//!
//! Pipeline: signed content, Yun square-free decomposition, then for each
//! square-free piece a Zassenhaus round: monic transform, factorization mod
//! a small prime by deterministic Berlekamp, quadratic Hensel lifting past
//! twice the Mignotte bound, and subset recombination by increasing
//! cardinality with a constant-term divisibility prefilter. Everything is
//! deterministic; no randomized splitting is used anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::IntPolynomial;
use crate::error::CoreError;

/// Factorization `input = content · Π factors[i].0 ^ factors[i].1` with each
/// factor irreducible over the integers, primitive, positive leading
/// coefficient. Factors are sorted by degree, then coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// Signed content: the input divided by the product of factor powers.
    pub content: String,
    /// Irreducible factors with multiplicities, deterministic order.
    pub factors: Vec<(IntPolynomial, usize)>,
}

impl Factorization {
    /// Re-multiplies the factorization; equals the original input.
    pub fn expand(&self) -> IntPolynomial {
        let c: BigInt = self.content.parse().expect("content is a decimal integer");
        let mut acc = IntPolynomial::new(vec![c]);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    pub fn content_int(&self) -> BigInt {
        self.content.parse().expect("content is a decimal integer")
    }
}

/// Factors a nonzero integer polynomial completely.
pub fn factor_over_integers(p: &IntPolynomial) -> Result<Factorization, CoreError> {
    if p.is_zero() {
        return Err(CoreError::ZeroPolynomial);
    }
    let mut content = p.content();
    if p.leading_coeff().is_negative() {
        content = -content;
    }
    let pp = p.primitive_positive();
    let mut factors: Vec<(IntPolynomial, usize)> = Vec::new();
    for (piece, mult) in pp.square_free_decomposition()? {
        for irreducible in factor_squarefree(&piece) {
            factors.push((irreducible, mult));
        }
    }
    factors.sort_by(|a, b| {
        let da = a.0.degree().unwrap_or(0);
        let db = b.0.degree().unwrap_or(0);
        da.cmp(&db).then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(Factorization {
        content: content.to_string(),
        factors,
    })
}

/// Factors a primitive square-free polynomial with positive leading
/// coefficient into irreducibles.
fn factor_squarefree(q: &IntPolynomial) -> Vec<IntPolynomial> {
    let deg = q.degree().expect("square-free piece is nonzero");
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![q.clone()];
    }
    let (stripped, xpow) = q.strip_x_factors();
    let mut out = Vec::new();
    if xpow > 0 {
        // Square-free input carries at most one factor of x.
        out.push(IntPolynomial::from_i64(&[0, 1]));
    }
    let sdeg = stripped.degree().unwrap_or(0);
    if sdeg == 1 {
        out.push(stripped);
        return out;
    }
    if sdeg == 0 {
        return out;
    }

    // Monic transform: F(x) = lc^(n-1) · q(x/lc) is monic with integer
    // coefficients and scaled roots; factors pull back exactly.
    let lead = stripped.leading_coeff();
    let n = sdeg;
    let monic = {
        let mut coeffs = Vec::with_capacity(n + 1);
        // Coefficient of y^k is a_k * lead^(n-1-k); the top one is
        // lead * lead^(-1) = 1 and is written directly.
        for k in 0..n {
            coeffs.push(stripped.coeff(k) * lead.pow((n - 1 - k) as u32));
        }
        coeffs.push(BigInt::one());
        IntPolynomial::new(coeffs)
    };
    debug_assert!(monic.leading_coeff().is_one());

    let monic_factors = factor_monic_squarefree(&monic);
    for h in monic_factors {
        let pulled = if lead.is_one() {
            h
        } else {
            h.compose_scaled_arg(&lead).primitive_positive()
        };
        out.push(pulled);
    }
    out
}

/// Zassenhaus on a monic square-free polynomial with nonzero constant term.
fn factor_monic_squarefree(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.degree().expect("monic polynomial is nonzero");
    debug_assert!(n >= 2);
    debug_assert!(!f.constant_term().is_zero());

    // First prime where f stays square-free; exists because disc(f) != 0.
    let prime = pick_prime(f);
    let f_mod = reduce_mod_p(f, prime);
    let local = berlekamp(&f_mod, prime);
    if local.len() == 1 {
        return vec![f.clone()];
    }

    // Mignotte: any monic divisor h of f has height(h) <= 2^n * ||f||_2.
    let norm2_ceil = f.norm_squared().sqrt() + BigInt::one();
    let bound: BigInt = norm2_ceil << n;
    let target = {
        let two_b = &bound * BigInt::from(2);
        let mut m = BigInt::from(prime);
        while m <= two_b {
            m = &m * &m;
        }
        m
    };

    let lifted = hensel_lift_tree(f, &local, prime, &target);
    recombine(f.clone(), lifted, &target)
}

/// Subset recombination: finds true factors as centered products of lifted
/// modular factors, smallest subsets first.
fn recombine(
    mut f: IntPolynomial,
    lifted: Vec<IntPolynomial>,
    modulus: &BigInt,
) -> Vec<IntPolynomial> {
    let mut live: Vec<usize> = (0..lifted.len()).collect();
    let mut out = Vec::new();
    'search: loop {
        let r = live.len();
        for cardinality in 1..=r / 2 {
            let mut comb: Vec<usize> = (0..cardinality).collect();
            loop {
                let candidate = {
                    let mut acc = IntPolynomial::one();
                    for &ci in &comb {
                        acc = mod_reduce(&acc.mul(&lifted[live[ci]]), modulus);
                    }
                    center_mod(&acc, modulus)
                };
                let c0 = candidate.constant_term();
                let prefilter_ok = !c0.is_zero() && f.constant_term().is_multiple_of(&c0);
                if prefilter_ok {
                    if let Some(quotient) = f.try_div_exact(&candidate) {
                        out.push(candidate);
                        f = quotient;
                        let remove: Vec<usize> = comb.iter().map(|&ci| live[ci]).collect();
                        live.retain(|i| !remove.contains(i));
                        continue 'search;
                    }
                }
                if !next_combination(&mut comb, r) {
                    break;
                }
            }
        }
        break;
    }
    if f.degree().unwrap_or(0) >= 1 {
        out.push(f);
    }
    out
}

/// Advances `comb` to the next lexicographic cardinality-k subset of
/// `0..n`; false when exhausted.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest prime modulo which `f` remains square-free (never divides the
/// leading coefficient since `f` is monic).
fn pick_prime(f: &IntPolynomial) -> u64 {
    let mut p = 2u64;
    loop {
        let fp = reduce_mod_p(f, p);
        let dfp = pderiv(&fp, p);
        if !dfp.is_empty() {
            let g = pgcd(fp.clone(), dfp, p);
            if g.len() == 1 {
                return p;
            }
        }
        p = next_prime(p);
    }
}

fn next_prime(p: u64) -> u64 {
    let mut candidate = p + 1;
    'outer: loop {
        let mut d = 2u64;
        while d * d <= candidate {
            if candidate % d == 0 {
                candidate += 1;
                continue 'outer;
            }
            d += 1;
        }
        return candidate;
    }
}

// --- arithmetic in F_p[x]: Vec<u64> ascending, trailing zeros stripped ---

fn pnorm(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn reduce_mod_p(f: &IntPolynomial, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    pnorm(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect(),
    )
}

fn pmul_scalar(a: &[u64], s: u64, p: u64) -> Vec<u64> {
    pnorm(
        a.iter()
            .map(|&x| ((x as u128 * s as u128) % p as u128) as u64)
            .collect(),
    )
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    pnorm(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u128 * y as u128) % p as u128;
        }
    }
    pnorm(out.into_iter().map(|x| x as u64).collect())
}

fn pinv_scalar(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

fn pmonic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => Vec::new(),
        Some(&1) => a.to_vec(),
        Some(&lc) => pmul_scalar(a, pinv_scalar(lc, p), p),
    }
}

/// Division with remainder in F_p[x]; divisor nonzero.
fn pdivrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by zero in F_p[x]");
    let db = b.len() - 1;
    let inv_lead = pinv_scalar(b[db], p);
    let mut rem: Vec<u64> = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), pnorm(rem));
    }
    let mut quot = vec![0u64; rem.len() - db];
    for k in (db..rem.len()).rev() {
        let coef = (rem[k] as u128 * inv_lead as u128 % p as u128) as u64;
        if coef == 0 {
            continue;
        }
        quot[k - db] = coef;
        for (j, &bc) in b.iter().enumerate() {
            let sub = coef as u128 * bc as u128 % p as u128;
            let idx = k - db + j;
            rem[idx] = ((rem[idx] as u128 + p as u128 - sub) % p as u128) as u64;
        }
    }
    rem.truncate(db);
    (pnorm(quot), pnorm(rem))
}

fn pgcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let (_, r) = pdivrem(&a, &b, p);
        a = b;
        b = r;
    }
    pmonic(&a, p)
}

/// Extended Euclid in F_p[x]: returns (s, t) with s·a + t·b = 1.
/// Requires gcd(a, b) = 1.
fn pxgcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0: Vec<u64> = vec![1];
    let mut s1: Vec<u64> = Vec::new();
    let mut t0: Vec<u64> = Vec::new();
    let mut t1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = pdivrem(&r0, &r1, p);
        let new_s = psub(&s0, &pmul(&q, &s1, p), p);
        let new_t = psub(&t0, &pmul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = new_s;
        t0 = t1;
        t1 = new_t;
    }
    assert_eq!(r0.len(), 1, "pxgcd requires coprime inputs");
    let inv = pinv_scalar(r0[0], p);
    (pmul_scalar(&s0, inv, p), pmul_scalar(&t0, inv, p))
}

fn pderiv(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    pnorm(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| (c as u128 * (k as u128 % p as u128) % p as u128) as u64)
            .collect(),
    )
}

// --- deterministic Berlekamp over F_p ---

/// Factors a monic square-free polynomial mod p into monic irreducibles.
/// Deterministic: nullspace basis order and the exhaustive scan over
/// F_p shift values fix the output order.
fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    // x^p mod f by repeated squaring.
    let xp = {
        let x = vec![0u64, 1];
        let mut acc = vec![1u64];
        let mut base = {
            let (_, r) = pdivrem(&x, f, p);
            r
        };
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                let (_, r) = pdivrem(&pmul(&acc, &base, p), f, p);
                acc = r;
            }
            e >>= 1;
            if e > 0 {
                let (_, r) = pdivrem(&pmul(&base, &base, p), f, p);
                base = r;
            }
        }
        acc
    };

    // Column j of Q is x^(jp) mod f; assemble Q - I row-major.
    let mut a = vec![0u64; n * n];
    let mut col = vec![1u64];
    for j in 0..n {
        for (i, &c) in col.iter().enumerate() {
            a[i * n + j] = c;
        }
        a[j * n + j] = (a[j * n + j] + p - 1) % p;
        if j + 1 < n {
            let (_, r) = pdivrem(&pmul(&col, &xp, p), f, p);
            col = r;
        }
    }

    // Nullspace of (Q - I) by row reduction.
    let mut pivot_of_col = vec![usize::MAX; n];
    let mut row = 0usize;
    for col_idx in 0..n {
        let pivot_row = (row..n).find(|&r| a[r * n + col_idx] != 0);
        let Some(pr) = pivot_row else { continue };
        for j in 0..n {
            a.swap(row * n + j, pr * n + j);
        }
        let inv = pinv_scalar(a[row * n + col_idx], p);
        for j in 0..n {
            a[row * n + j] = (a[row * n + j] as u128 * inv as u128 % p as u128) as u64;
        }
        for r in 0..n {
            if r != row && a[r * n + col_idx] != 0 {
                let factor = a[r * n + col_idx];
                for j in 0..n {
                    let sub = factor as u128 * a[row * n + j] as u128 % p as u128;
                    a[r * n + j] = ((a[r * n + j] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        pivot_of_col[col_idx] = row;
        row += 1;
    }
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for j in 0..n {
        if pivot_of_col[j] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; n];
        v[j] = 1;
        for c in 0..n {
            let pr = pivot_of_col[c];
            if pr != usize::MAX {
                let entry = a[pr * n + j];
                if entry != 0 {
                    v[c] = p - entry;
                }
            }
        }
        basis.push(pnorm(v));
    }
    let r = basis.len();
    if r == 1 {
        return vec![f.to_vec()];
    }

    // Split with each non-constant basis element over all shifts in F_p.
    let mut factors: Vec<Vec<u64>> = vec![f.to_vec()];
    for b in &basis {
        if factors.len() == r {
            break;
        }
        if b.len() <= 1 {
            continue;
        }
        let mut next: Vec<Vec<u64>> = Vec::new();
        for u in factors {
            if u.len() <= 2 {
                next.push(u);
                continue;
            }
            let (_, b_mod_u) = pdivrem(b, &u, p);
            let mut rest = u;
            for s in 0..p {
                if rest.len() <= 1 {
                    break;
                }
                let shifted = psub(&b_mod_u, &[s], p);
                let g = pgcd(rest.clone(), shifted, p);
                if g.len() > 1 && g.len() < rest.len() {
                    let (q, rem) = pdivrem(&rest, &g, p);
                    debug_assert!(rem.is_empty());
                    next.push(g);
                    rest = pmonic(&q, p);
                }
            }
            if rest.len() > 1 {
                next.push(rest);
            }
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), r, "Berlekamp split count");
    factors
}

// --- Hensel lifting mod p^(2^j) with BigInt coefficients in [0, m) ---

fn mod_reduce(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn center_mod(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    let half = m / BigInt::from(2);
    IntPolynomial::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division with remainder mod m by a monic divisor (stored leading
/// coefficient exactly 1).
fn mod_divrem_monic(
    a: &IntPolynomial,
    b: &IntPolynomial,
    m: &BigInt,
) -> (IntPolynomial, IntPolynomial) {
    let db = b.degree().expect("monic divisor is nonzero");
    debug_assert!(b.leading_coeff().is_one());
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    if rem.len() <= db {
        return (IntPolynomial::zero(), a.clone());
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let coef = rem[k].mod_floor(m);
        if coef.is_zero() {
            rem[k] = BigInt::zero();
            continue;
        }
        for (j, bc) in b.coeffs().iter().enumerate() {
            let idx = k - db + j;
            rem[idx] = (&rem[idx] - &coef * bc).mod_floor(m);
        }
        quot[k - db] = coef;
    }
    rem.truncate(db);
    (
        IntPolynomial::new(quot),
        IntPolynomial::new(rem.into_iter().map(|c| c.mod_floor(m)).collect()),
    )
}

fn mod_mul(a: &IntPolynomial, b: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    mod_reduce(&a.mul(b), m)
}

fn lift_u64_poly(v: &[u64]) -> IntPolynomial {
    IntPolynomial::new(v.iter().map(|&c| BigInt::from(c)).collect())
}

/// One quadratic Hensel step: from f ≡ g·h, s·g + t·h ≡ 1 (mod m) to the
/// same congruences mod m², preserving monicity and degrees.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &IntPolynomial,
    g: &IntPolynomial,
    h: &IntPolynomial,
    s: &IntPolynomial,
    t: &IntPolynomial,
    m: &BigInt,
) -> (IntPolynomial, IntPolynomial, IntPolynomial, IntPolynomial) {
    let m2 = m * m;
    let e = mod_reduce(&f.sub(&g.mul(h)), &m2);
    let (q, r) = mod_divrem_monic(&mod_mul(s, &e, &m2), h, &m2);
    let g_new = mod_reduce(&g.add(&mod_mul(t, &e, &m2)).add(&mod_mul(&q, g, &m2)), &m2);
    let h_new = mod_reduce(&h.add(&r), &m2);
    let b = mod_reduce(
        &mod_mul(s, &g_new, &m2)
            .add(&mod_mul(t, &h_new, &m2))
            .sub(&IntPolynomial::one()),
        &m2,
    );
    let (c, d) = mod_divrem_monic(&mod_mul(s, &b, &m2), &h_new, &m2);
    let s_new = mod_reduce(&s.sub(&d), &m2);
    let t_new = mod_reduce(
        &t.sub(&mod_mul(t, &b, &m2)).sub(&mod_mul(&c, &g_new, &m2)),
        &m2,
    );
    (g_new, h_new, s_new, t_new)
}

/// Lifts the mod-p factor list of a monic `f` to factors mod `target`
/// (a power p^(2^j)), recursively splitting the list in halves.
fn hensel_lift_tree(
    f: &IntPolynomial,
    local: &[Vec<u64>],
    p: u64,
    target: &BigInt,
) -> Vec<IntPolynomial> {
    if local.len() == 1 {
        return vec![mod_reduce(f, target)];
    }
    let mid = local.len() / 2;
    let (left, right) = local.split_at(mid);
    let g0: Vec<u64> = left.iter().fold(vec![1u64], |acc, x| pmul(&acc, x, p));
    let h0: Vec<u64> = right.iter().fold(vec![1u64], |acc, x| pmul(&acc, x, p));
    let (s0, t0) = pxgcd(&g0, &h0, p);

    let mut g = lift_u64_poly(&g0);
    let mut h = lift_u64_poly(&h0);
    let mut s = lift_u64_poly(&s0);
    let mut t = lift_u64_poly(&t0);
    let mut m = BigInt::from(p);
    while &m < target {
        let (g2, h2, s2, t2) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    debug_assert_eq!(&m, target, "lift modulus ladder must land on target");
    debug_assert!(g.leading_coeff().is_one());
    debug_assert!(h.leading_coeff().is_one());

    let mut out = hensel_lift_tree(&g, left, p, target);
    out.extend(hensel_lift_tree(&h, right, p, target));
    out
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    /// Pool of pairwise distinct known irreducibles over Z.
    fn pool() -> Vec<IntPolynomial> {
        vec![
            p(&[-1, 1]),
            p(&[1, 1]),
            p(&[-2, 1]),
            p(&[3, 1]),
            p(&[-1, 2]),
            p(&[1, 0, 1]),
            p(&[1, 1, 1]),
            p(&[1, -3, 1]),
            p(&[-1, -1, 1]),
            p(&[-2, 0, 0, 1]),
            p(&[1, -1, -1, -1, 1]),
            p(&[1, 0, 0, 0, 1]),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// Factoring a constructed product of known irreducibles recovers
        /// exactly the constructed multiset and content.
        #[test]
        fn recovers_constructed_products(
            mults in proptest::collection::vec(0usize..3, 12),
            content in -9i64..=9,
        ) {
            prop_assume!(content != 0);
            let pool = pool();
            let total_degree: usize = pool
                .iter()
                .zip(&mults)
                .map(|(f, &m)| f.degree().unwrap() * m)
                .sum();
            prop_assume!((1..=14).contains(&total_degree));
            let mut f = IntPolynomial::new(vec![BigInt::from(content)]);
            let mut expected: Vec<(IntPolynomial, usize)> = Vec::new();
            for (g, &m) in pool.iter().zip(&mults) {
                if m > 0 {
                    expected.push((g.clone(), m));
                    for _ in 0..m {
                        f = f.mul(g);
                    }
                }
            }
            expected.sort_by(|a, b| {
                let da = a.0.degree().unwrap_or(0);
                let db = b.0.degree().unwrap_or(0);
                da.cmp(&db).then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
            });
            let fac = factor_over_integers(&f).unwrap();
            prop_assert_eq!(fac.content_int(), BigInt::from(content));
            prop_assert_eq!(&fac.factors, &expected);
            prop_assert_eq!(fac.expand(), f);
        }

        /// For arbitrary inputs the factorization re-multiplies to the
        /// input and all parts are primitive with positive lead.
        #[test]
        fn expand_is_left_inverse(coeffs in proptest::collection::vec(-8i64..=8, 1..9)) {
            let f = IntPolynomial::from_i64(&coeffs);
            prop_assume!(!f.is_zero());
            let fac = factor_over_integers(&f).unwrap();
            prop_assert_eq!(fac.expand(), f.clone());
            for (g, _) in &fac.factors {
                prop_assert!(g.leading_coeff().is_positive());
                prop_assert_eq!(g.content(), BigInt::one());
                prop_assert!(g.degree().unwrap_or(0) >= 1);
            }
        }
    }
}
