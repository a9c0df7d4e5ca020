//! Arithmetic in a prime field F_q and its degree-m extension F_{q^m}.
//!
//! Elements of F_{q^m} are stored in the polynomial basis 1, x, ..., x^{m-1}
//! of F_q[x]/(f) with every base-field digit packed into a fixed-width bit
//! slot of a `u128`. For q = 2 this is the usual bit-vector representation
//! and addition is a XOR. The packing bounds the supported sizes to
//! `m * ceil(log2 q) <= 128`: every desk-scale instance and the published
//! LG sets up to m = 117. Larger sets are only handled by the closed-form
//! estimator.
//!
//! The Frobenius automorphism a -> a^q is F_q-linear, so all its powers are
//! tabulated once per context and applied as a digit-weighted sum of table
//! entries.

use rand::Rng;
use thiserror::Error;

use crate::matrix::MatFq;

/// Errors raised while building a field or manipulating its elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("modulus is reducible over F_{q}")]
    ReducibleModulus { q: u32 },
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{l} does not divide the extension degree {m}")]
    NotADivisor { l: usize, m: usize },
    #[error("field F_{q}^{m} does not fit the packed element representation")]
    Unsupported { q: u32, m: usize },
    #[error("malformed element encoding {0:?}")]
    BadEncoding(String),
}

/// An element of F_{q^m}; only meaningful together with its [`FieldCtx`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fqm(pub(crate) u128);

impl Fqm {
    pub const ZERO: Fqm = Fqm(0);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Raw packed representation.
    pub fn to_bits(self) -> u128 {
        self.0
    }
}

/// How [`FieldCtx::random_element`] restricts its draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementConstraint {
    Any,
    NotInPrimeField,
    InSubfield(usize),
}

/// The extension F_{q^m} / F_q.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    q: u32,
    m: usize,
    /// m + 1 digits, constant term first, monic.
    modulus: Vec<u8>,
    width: u32,
    digit_mask: u128,
    full_mask: u128,
    /// Lower m digits of the modulus, packed (used by the q = 2 reduction).
    low_modulus: u128,
    /// `frob[i * m + j] = (x^j)^{q^i}` for i, j in 0..m.
    frob: Vec<Fqm>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

pub(crate) fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn digit_width(q: u32) -> u32 {
    32 - (q - 1).leading_zeros()
}

impl FieldCtx {
    /// Builds F_{q^m}. Without an explicit modulus the lexicographically
    /// smallest monic irreducible polynomial is used, where polynomials are
    /// ordered by the integer sum c_i q^i of their lower coefficients.
    pub fn new(q: u32, m: usize, modulus: Option<&[u8]>) -> Result<FieldCtx, FieldError> {
        if !is_prime(q) {
            return Err(FieldError::NotPrime(q));
        }
        if m == 0 || q > 255 || digit_width(q) as usize * m > 128 {
            return Err(FieldError::Unsupported { q, m });
        }
        match modulus {
            Some(coeffs) => {
                let mut coeffs: Vec<u8> = coeffs.to_vec();
                if coeffs.iter().any(|&c| c as u32 >= q) {
                    return Err(FieldError::BadEncoding(format!("{coeffs:?}")));
                }
                while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
                    coeffs.pop();
                }
                if coeffs.len() != m + 1 {
                    return Err(FieldError::DegreeMismatch { expected: m, got: coeffs.len().saturating_sub(1) });
                }
                let lead = coeffs[m] as u32;
                if lead != 1 {
                    let inv = pow_mod_prime(lead, q - 2, q);
                    for c in coeffs.iter_mut() {
                        *c = ((*c as u32 * inv) % q) as u8;
                    }
                }
                let raw = FieldCtx::raw(q, m, coeffs);
                if !raw.modulus_is_irreducible() {
                    return Err(FieldError::ReducibleModulus { q });
                }
                Ok(raw.with_frobenius_tables())
            }
            None => {
                let mut lower = vec![0u8; m];
                loop {
                    let mut coeffs = lower.clone();
                    coeffs.push(1);
                    let raw = FieldCtx::raw(q, m, coeffs);
                    if raw.modulus_is_irreducible() {
                        return Ok(raw.with_frobenius_tables());
                    }
                    // base-q counter over the lower coefficients, c_0 least significant
                    let mut i = 0;
                    loop {
                        lower[i] += 1;
                        if (lower[i] as u32) < q {
                            break;
                        }
                        lower[i] = 0;
                        i += 1;
                        if i == m {
                            unreachable!("irreducible polynomials exist in every degree");
                        }
                    }
                }
            }
        }
    }

    fn raw(q: u32, m: usize, modulus: Vec<u8>) -> FieldCtx {
        let width = digit_width(q);
        let bits = width as usize * m;
        let full_mask = if bits == 128 { u128::MAX } else { (1u128 << bits) - 1 };
        let mut ctx = FieldCtx {
            q,
            m,
            modulus,
            width,
            digit_mask: (1u128 << width) - 1,
            full_mask,
            low_modulus: 0,
            frob: Vec::new(),
        };
        ctx.low_modulus = ctx.pack(&ctx.modulus[..m]);
        ctx
    }

    fn with_frobenius_tables(mut self) -> FieldCtx {
        let m = self.m;
        let mut table = vec![Fqm::ZERO; m * m];
        for j in 0..m {
            table[j] = self.monomial(j);
        }
        if m > 1 {
            for j in 0..m {
                table[m + j] = self.pow(table[j], self.q as u128);
            }
        }
        self.frob = table;
        for i in 2..m {
            for j in 0..m {
                let prev = self.frob[(i - 1) * m + j];
                self.frob[i * m + j] = self.frob1(prev);
            }
        }
        self
    }

    /// Ben-Or: f of degree m is irreducible iff gcd(x^{q^i} - x, f) = 1 for i <= m/2.
    fn modulus_is_irreducible(&self) -> bool {
        let x = self.monomial(1);
        let mut power = x;
        for _ in 1..=self.m / 2 {
            power = self.pow(power, self.q as u128);
            let diff = self.sub(power, x);
            let mut r: Vec<u8> = self.digits(diff);
            trim(&mut r);
            let g = poly_gcd(self.modulus.clone(), r, self.q);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Modulus coefficients, constant term first (length m + 1).
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn zero(&self) -> Fqm {
        Fqm::ZERO
    }

    pub fn one(&self) -> Fqm {
        Fqm(1)
    }

    /// The class of x in F_q[x]/(f), the root of the modulus.
    pub fn generator(&self) -> Fqm {
        self.monomial(1)
    }

    /// x^j reduced modulo f.
    pub fn monomial(&self, j: usize) -> Fqm {
        if j < self.m {
            return Fqm(1u128 << (j as u32 * self.width));
        }
        let mut a = self.monomial(self.m - 1);
        for _ in self.m - 1..j {
            a = self.times_x(a);
        }
        a
    }

    /// a * x, reducing x^m = -(f_0 + ... + f_{m-1} x^{m-1}).
    fn times_x(&self, a: Fqm) -> Fqm {
        let top = self.digit(a, self.m - 1) as u32;
        let shifted = Fqm((a.0 << self.width) & self.full_mask);
        if top == 0 {
            return shifted;
        }
        let low = Fqm(self.low_modulus);
        self.sub(shifted, self.scale(low, top))
    }

    /// Lifts a base-field digit.
    pub fn from_base(&self, c: u32) -> Fqm {
        Fqm((c % self.q) as u128)
    }

    pub fn digit(&self, a: Fqm, j: usize) -> u8 {
        ((a.0 >> (j as u32 * self.width)) & self.digit_mask) as u8
    }

    /// Polynomial-basis coordinates, constant term first.
    pub fn digits(&self, a: Fqm) -> Vec<u8> {
        (0..self.m).map(|j| self.digit(a, j)).collect()
    }

    /// Inverse of [`FieldCtx::digits`]; missing trailing digits are zero.
    pub fn from_digits(&self, digits: &[u8]) -> Fqm {
        debug_assert!(digits.len() <= self.m);
        Fqm(self.pack(digits))
    }

    fn pack(&self, digits: &[u8]) -> u128 {
        digits
            .iter()
            .enumerate()
            .fold(0u128, |acc, (j, &d)| acc | ((d as u128 % self.q as u128) << (j as u32 * self.width)))
    }

    pub fn is_in_prime_field(&self, a: Fqm) -> bool {
        a.0 & !self.digit_mask == 0
    }

    pub fn add(&self, a: Fqm, b: Fqm) -> Fqm {
        if self.q == 2 {
            return Fqm(a.0 ^ b.0);
        }
        let mut out = 0u128;
        for j in 0..self.m {
            let s = (self.digit(a, j) as u32 + self.digit(b, j) as u32) % self.q;
            out |= (s as u128) << (j as u32 * self.width);
        }
        Fqm(out)
    }

    pub fn neg(&self, a: Fqm) -> Fqm {
        if self.q == 2 {
            return a;
        }
        let mut out = 0u128;
        for j in 0..self.m {
            let d = self.digit(a, j) as u32;
            out |= (((self.q - d) % self.q) as u128) << (j as u32 * self.width);
        }
        Fqm(out)
    }

    pub fn sub(&self, a: Fqm, b: Fqm) -> Fqm {
        if self.q == 2 {
            return Fqm(a.0 ^ b.0);
        }
        self.add(a, self.neg(b))
    }

    /// Multiplies by a base-field scalar.
    pub fn scale(&self, a: Fqm, c: u32) -> Fqm {
        let c = c % self.q;
        if self.q == 2 || c == 1 {
            return if c == 0 { Fqm::ZERO } else { a };
        }
        let mut out = 0u128;
        for j in 0..self.m {
            let d = (self.digit(a, j) as u32 * c) % self.q;
            out |= (d as u128) << (j as u32 * self.width);
        }
        Fqm(out)
    }

    pub fn mul(&self, a: Fqm, b: Fqm) -> Fqm {
        if a.0 == 0 || b.0 == 0 {
            return Fqm::ZERO;
        }
        if self.q == 2 {
            return Fqm(self.mul_binary(a.0, b.0));
        }
        self.mul_generic(a, b)
    }

    fn mul_binary(&self, a: u128, mut b: u128) -> u128 {
        let top = 1u128 << (self.m - 1);
        let mut acc = 0u128;
        let mut x = a;
        loop {
            if b & 1 == 1 {
                acc ^= x;
            }
            b >>= 1;
            if b == 0 {
                return acc;
            }
            let carry = x & top != 0;
            x = (x << 1) & self.full_mask;
            if carry {
                x ^= self.low_modulus;
            }
        }
    }

    fn mul_generic(&self, a: Fqm, b: Fqm) -> Fqm {
        let m = self.m;
        let q = self.q;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u32; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u32 * y as u32) % q;
            }
        }
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            // x^d = -x^{d-m} (f - x^m)
            for j in 0..m {
                let t = (c * self.modulus[j] as u32) % q;
                prod[d - m + j] = (prod[d - m + j] + q - t) % q;
            }
            prod[d] = 0;
        }
        let out: Vec<u8> = prod[..m].iter().map(|&c| c as u8).collect();
        Fqm(self.pack(&out))
    }

    pub fn square(&self, a: Fqm) -> Fqm {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Fqm, mut e: u128) -> Fqm {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(base);
            }
        }
        acc
    }

    /// a^{-1} = a^{q-2} * prod_{i=1}^{m-1} (a^{q-1})^{[i]}, using q^m - 2 = (q - 2) + (q - 1)(q + ... + q^{m-1}).
    pub fn inv(&self, a: Fqm) -> Result<Fqm, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    pub(crate) fn inv_nonzero(&self, a: Fqm) -> Fqm {
        debug_assert!(!a.is_zero());
        let b = self.pow(a, (self.q - 1) as u128);
        let mut acc = self.pow(a, (self.q - 2) as u128);
        for i in 1..self.m {
            acc = self.mul(acc, self.frobenius(b, i as i64));
        }
        acc
    }

    pub fn div(&self, a: Fqm, b: Fqm) -> Result<Fqm, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn frob1(&self, a: Fqm) -> Fqm {
        self.apply_frob_row(a, 1)
    }

    fn apply_frob_row(&self, a: Fqm, i: usize) -> Fqm {
        let row = &self.frob[i * self.m..(i + 1) * self.m];
        if self.q == 2 {
            let mut acc = 0u128;
            let mut bits = a.0;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                acc ^= row[j].0;
                bits &= bits - 1;
            }
            return Fqm(acc);
        }
        let mut acc = Fqm::ZERO;
        for (j, &img) in row.iter().enumerate() {
            let d = self.digit(a, j);
            if d != 0 {
                acc = self.add(acc, self.scale(img, d as u32));
            }
        }
        acc
    }

    /// a^{[i]} = a^{q^i}; `i` is taken modulo m, negative values included.
    pub fn frobenius(&self, a: Fqm, i: i64) -> Fqm {
        let i = i.rem_euclid(self.m as i64) as usize;
        if i == 0 {
            return a;
        }
        if self.frob.is_empty() {
            let mut out = a;
            for _ in 0..i {
                out = self.pow(out, self.q as u128);
            }
            return out;
        }
        self.apply_frob_row(a, i)
    }

    /// F_q-basis of the subfield F_{q^l}, the kernel of a -> a^{[l]} - a.
    pub fn subfield_basis(&self, l: usize) -> Result<Vec<Fqm>, FieldError> {
        if l == 0 || !self.m.is_multiple_of(l) {
            return Err(FieldError::NotADivisor { l, m: self.m });
        }
        let m = self.m;
        let mut map = MatFq::zeros(self.q, m, m);
        for j in 0..m {
            let xj = self.monomial(j);
            let img = self.sub(self.frobenius(xj, l as i64), xj);
            for i in 0..m {
                map.set(i, j, self.digit(img, i));
            }
        }
        let kernel = map.kernel();
        debug_assert_eq!(kernel.len(), l);
        Ok(kernel.iter().map(|v| self.from_digits(v)).collect())
    }

    pub fn is_in_subfield(&self, a: Fqm, l: usize) -> bool {
        self.frobenius(a, l as i64) == a
    }

    /// Uniform element of F_{q^m}.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fqm {
        if self.q == 2 {
            return Fqm(rng.gen::<u128>() & self.full_mask);
        }
        let digits: Vec<u8> = (0..self.m).map(|_| rng.gen_range(0..self.q) as u8).collect();
        self.from_digits(&digits)
    }

    /// Uniform nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fqm {
        loop {
            let a = self.random(rng);
            if !a.is_zero() {
                return a;
            }
        }
    }

    /// Uniform element of the F_q-span of `basis`.
    pub fn random_in_span<R: Rng + ?Sized>(&self, rng: &mut R, basis: &[Fqm]) -> Fqm {
        basis.iter().fold(Fqm::ZERO, |acc, &b| {
            let c = rng.gen_range(0..self.q);
            self.add(acc, self.scale(b, c))
        })
    }

    pub fn random_element<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        constraint: ElementConstraint,
    ) -> Result<Fqm, FieldError> {
        match constraint {
            ElementConstraint::Any => Ok(self.random(rng)),
            ElementConstraint::NotInPrimeField => {
                if self.m == 1 {
                    return Err(FieldError::NotADivisor { l: 1, m: 1 });
                }
                loop {
                    let a = self.random(rng);
                    if !self.is_in_prime_field(a) {
                        return Ok(a);
                    }
                }
            }
            ElementConstraint::InSubfield(l) => {
                let basis = self.subfield_basis(l)?;
                Ok(self.random_in_span(rng, &basis))
            }
        }
    }

    /// Digit string, constant term first, one base-36 character per digit.
    pub fn encode(&self, a: Fqm) -> String {
        (0..self.m).map(|j| char::from_digit(self.digit(a, j) as u32, 36).expect("q <= 36")).collect()
    }

    pub fn decode(&self, s: &str) -> Result<Fqm, FieldError> {
        if s.chars().count() != self.m {
            return Err(FieldError::BadEncoding(s.to_string()));
        }
        let mut digits = Vec::with_capacity(self.m);
        for ch in s.chars() {
            match ch.to_digit(36) {
                Some(d) if d < self.q => digits.push(d as u8),
                _ => return Err(FieldError::BadEncoding(s.to_string())),
            }
        }
        Ok(self.from_digits(&digits))
    }

    /// Modulus as a digit string of length m + 1.
    pub fn encode_modulus(&self) -> String {
        self.modulus.iter().map(|&d| char::from_digit(d as u32, 36).expect("q <= 36")).collect()
    }
}

pub(crate) fn pow_mod_prime(mut a: u32, mut e: u32, q: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = (a % q) as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q as u64;
        }
        base = base * base % q as u64;
        e >>= 1;
    }
    a = acc as u32;
    a
}

fn trim(p: &mut Vec<u8>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// a mod b over F_q, both trimmed, b nonzero.
fn poly_rem(mut a: Vec<u8>, b: &[u8], q: u32) -> Vec<u8> {
    let db = b.len() - 1;
    let inv_lead = pow_mod_prime(b[db] as u32, q - 2, q);
    while a.len() > db {
        let da = a.len() - 1;
        let c = (a[da] as u32 * inv_lead) % q;
        for (i, &bi) in b.iter().enumerate() {
            let t = (c * bi as u32) % q;
            let idx = da - db + i;
            a[idx] = ((a[idx] as u32 + q - t) % q) as u8;
        }
        trim(&mut a);
    }
    a
}

fn poly_gcd(mut a: Vec<u8>, mut b: Vec<u8>, q: u32) -> Vec<u8> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(a, &b, q);
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn gf8() -> FieldCtx {
        FieldCtx::new(2, 3, Some(&[1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn degree_one_field_is_prime_field() {
        let f = FieldCtx::new(2, 1, None).unwrap();
        assert_eq!(f.m(), 1);
        assert_eq!(f.modulus().len(), 2);
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert!(f.random(&mut rng).0 <= 1);
        }
        assert_eq!(f.mul(f.one(), f.one()), f.one());
    }

    #[test]
    fn rejects_reducible_and_bad_inputs() {
        assert_eq!(FieldCtx::new(2, 3, Some(&[1, 0, 0, 1])).unwrap_err(), FieldError::ReducibleModulus { q: 2 });
        assert_eq!(FieldCtx::new(4, 3, None).unwrap_err(), FieldError::NotPrime(4));
        assert!(matches!(FieldCtx::new(2, 3, Some(&[1, 1, 1])), Err(FieldError::DegreeMismatch { .. })));
    }

    /// Exhaustive factor search over F_2: a degree-m polynomial is reducible
    /// iff some polynomial of degree 1..=m/2 divides it.
    fn reducible_by_trial_division(f: u32, m: u32) -> bool {
        for d in 1..=m / 2 {
            for g in (1u32 << d)..(1u32 << (d + 1)) {
                let mut r = f;
                while r != 0 && 31 - r.leading_zeros() >= d {
                    let shift = 31 - r.leading_zeros() - d;
                    r ^= g << shift;
                }
                if r == 0 {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for m in 2..=8u32 {
            for low in 0..(1u32 << m) {
                let f = low | (1 << m);
                let coeffs: Vec<u8> = (0..=m).map(|i| ((f >> i) & 1) as u8).collect();
                let ours = FieldCtx::new(2, m as usize, Some(&coeffs)).is_ok();
                assert_eq!(ours, !reducible_by_trial_division(f, m), "f = {f:b}");
            }
        }
    }

    #[test]
    fn default_modulus_is_smallest_irreducible() {
        assert_eq!(FieldCtx::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldCtx::new(2, 4, None).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        // x^2 + 1 = (x+1)^2 over F_2 is skipped, x^2 + x + 1 chosen
        assert_eq!(FieldCtx::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        // over F_3: x^2 + 1 is irreducible (no roots)
        assert_eq!(FieldCtx::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn schoolbook_product_in_gf8() {
        let f = gf8();
        let x = f.monomial(1);
        let x2 = f.monomial(2);
        // x * x^2 = x^3 = x + 1 mod x^3 + x + 1
        assert_eq!(f.mul(x, x2), f.from_digits(&[1, 1, 0]));
        assert_eq!(f.mul(x2, x2), f.from_digits(&[0, 1, 1]));
    }

    #[test]
    fn inverses_and_identity() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        for (q, m) in [(2, 13), (2, 128), (3, 5), (5, 4), (2, 1)] {
            let f = FieldCtx::new(q, m, None).unwrap();
            for _ in 0..100 {
                let a = f.random_nonzero(&mut rng);
                assert_eq!(f.mul(a, f.one()), a);
                assert_eq!(f.mul(f.inv(a).unwrap(), a), f.one());
            }
            assert_eq!(f.inv(f.zero()), Err(FieldError::DivisionByZero));
        }
    }

    #[test]
    fn frobenius_is_power_of_q() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for (q, m) in [(2, 7), (3, 4), (2, 20)] {
            let f = FieldCtx::new(q, m, None).unwrap();
            for _ in 0..20 {
                let a = f.random(&mut rng);
                let mut p = a;
                for i in 0..=m as i64 {
                    assert_eq!(f.frobenius(a, i), p);
                    p = f.pow(p, q as u128);
                }
                assert_eq!(f.frobenius(a, m as i64), a);
                assert_eq!(f.frobenius(f.frobenius(a, -1), 1), a);
            }
        }
    }

    #[test]
    fn subfield_of_gf64_matches_enumeration() {
        let f = FieldCtx::new(2, 6, None).unwrap();
        let basis = f.subfield_basis(2).unwrap();
        assert_eq!(basis.len(), 2);
        let fixed: Vec<Fqm> = (0..64u128).map(Fqm).filter(|&x| f.pow(x, 4) == x).collect();
        assert_eq!(fixed.len(), 4);
        let span: Vec<Fqm> = (0..4u32).map(|c| f.add(f.scale(basis[0], c & 1), f.scale(basis[1], c >> 1))).collect();
        for x in fixed {
            assert!(span.contains(&x));
        }
        assert_eq!(f.subfield_basis(1).unwrap(), vec![f.one()]);
        assert_eq!(f.subfield_basis(6).unwrap().len(), 6);
        assert!(matches!(f.subfield_basis(4), Err(FieldError::NotADivisor { .. })));
    }

    #[test]
    fn constrained_draws() {
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let f = FieldCtx::new(2, 10, None).unwrap();
        for _ in 0..1000 {
            let a = f.random_element(&mut rng, ElementConstraint::NotInPrimeField).unwrap();
            assert!(!f.is_in_prime_field(a));
        }
        for _ in 0..200 {
            let a = f.random_element(&mut rng, ElementConstraint::InSubfield(5)).unwrap();
            assert_eq!(f.frobenius(a, 5), a);
        }
    }

    #[test]
    fn text_encoding() {
        let f = gf8();
        let a = f.from_digits(&[1, 0, 1]);
        assert_eq!(f.encode(a), "101");
        assert_eq!(f.decode("101").unwrap(), a);
        assert_eq!(f.encode_modulus(), "1101");
        assert!(f.decode("12").is_err());
        assert!(f.decode("1021").is_err());
    }
}
