//! Exact integer predicates and the Bruck-Ryser-Chowla test.
//!
//! The heart of the module is [`legendre_solvable`], which decides whether
//! `a·x² + b·y² + c·z² = 0` has a nontrivial integer solution. It works in
//! three stages:
//!
//! 1. [`reduce_form`] brings the coefficients to squarefree, pairwise coprime
//!    form, remembering how to map a solution of the reduced form back.
//! 2. [`local_obstruction`] evaluates Hilbert symbols at the real place and at
//!    every prime dividing `2abc`. A failing place proves unsolvability.
//! 3. [`holzer_search`] exhaustively searches the box
//!    `|x| ≤ √|bc|, |y| ≤ √|ac|, |z| ≤ √|ab|`. Holzer's theorem guarantees that
//!    a solvable reduced form has a solution inside it, so this search is the
//!    authoritative decider.
//!
//! All arithmetic is checked; overflow is reported, never wrapped.

use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberTheoryError {
    #[error("expected a nonnegative integer, got {0}")]
    Negative(i64),
    #[error("expected a positive integer, got 0")]
    Zero,
    #[error("the all-zero form has only trivial meaning")]
    ZeroForm,
    #[error("need k > lambda, got k = {k}, lambda = {lambda}")]
    Degenerate { k: u64, lambda: u64 },
    #[error("need n >= 2, got {0}")]
    TooFewPoints(u64),
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
}

type Result<T> = std::result::Result<T, NumberTheoryError>;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Floor square root.
pub fn isqrt(m: u64) -> u64 {
    m.isqrt()
}

pub fn is_perfect_square(m: i64) -> Result<bool> {
    if m < 0 {
        return Err(NumberTheoryError::Negative(m));
    }
    let m = m as u64;
    let t = isqrt(m);
    Ok(t * t == m)
}

/// Prime factorisation by trial division, ascending, with multiplicity.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.checked_mul(p).is_some_and(|sq| sq <= m) {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    factors
}

/// True iff `m = p^e` for a prime `p` and `e ≥ 1`. `1` is not a prime power.
pub fn is_prime_power(m: u64) -> Result<bool> {
    if m == 0 {
        return Err(NumberTheoryError::Zero);
    }
    Ok(factorize(m).len() == 1)
}

/// A place of ℚ at which a form can fail to be isotropic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Place {
    /// All coefficients share a sign.
    Real,
    Prime(u64),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Real => f.write_str("the reals (all coefficients share a sign)"),
            Self::Prime(p) => write!(f, "the {p}-adic numbers"),
        }
    }
}

/// A form `a·x² + b·y² + c·z²` in squarefree, pairwise coprime shape, plus the
/// rational scale factors taking its solutions to the original form's.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedForm {
    pub coeffs: [i64; 3],
    /// `original[i] = reduced[i] * num[i] / den[i]`.
    scale: [(u128, u128); 3],
}

impl ReducedForm {
    /// Maps a solution of the reduced form to a primitive solution of the
    /// original form.
    pub fn lift(&self, reduced: [i64; 3]) -> Result<[i64; 3]> {
        let overflow = || NumberTheoryError::Overflow("lifting a witness");
        let mut lcm: u128 = 1;
        for &(_, den) in &self.scale {
            lcm = (lcm / gcd_u128(lcm, den))
                .checked_mul(den)
                .ok_or_else(overflow)?;
        }
        let mut out = [0i128; 3];
        for i in 0..3 {
            let (num, den) = self.scale[i];
            let factor = i128::try_from(num.checked_mul(lcm / den).ok_or_else(overflow)?)
                .map_err(|_| overflow())?;
            out[i] = (reduced[i] as i128)
                .checked_mul(factor)
                .ok_or_else(overflow)?;
        }
        let g = out
            .iter()
            .fold(0u128, |g, &v| gcd_u128(g, v.unsigned_abs()));
        let mut lifted = [0i64; 3];
        for i in 0..3 {
            let v = if g > 1 { out[i] / g as i128 } else { out[i] };
            lifted[i] = i64::try_from(v).map_err(|_| overflow())?;
        }
        Ok(lifted)
    }
}

/// Reduces nonzero coefficients to squarefree, pairwise coprime form.
///
/// Removing a common factor leaves solutions unchanged. A square factor
/// `a = s²a'` is absorbed into the variable (`X = s·x`). A prime `p` dividing
/// two coefficients must divide the third variable, which gives
/// `(a/p, b/p, c·p)` with `z = p·Z`. Each pass shrinks `|abc|`, so the loop
/// terminates.
pub fn reduce_form(a: i64, b: i64, c: i64) -> Result<ReducedForm> {
    if a == 0 || b == 0 || c == 0 {
        return Err(NumberTheoryError::ZeroForm);
    }
    let mut coeffs = [a as i128, b as i128, c as i128];
    let mut scale = [(1u128, 1u128); 3];
    'reduce: loop {
        let g = coeffs
            .iter()
            .fold(0u128, |g, &v| gcd_u128(g, v.unsigned_abs()));
        if g > 1 {
            coeffs.iter_mut().for_each(|v| *v /= g as i128);
        }

        for i in 0..3 {
            let square = square_part(coeffs[i].unsigned_abs())?;
            if square > 1 {
                coeffs[i] /= (square * square) as i128;
                scale[i].1 = scale[i]
                    .1
                    .checked_mul(square)
                    .ok_or(NumberTheoryError::Overflow("reducing a form"))?;
            }
        }

        // Only valid on a squarefree form with no common factor, so restart
        // after every move.
        for (i, j, other) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let g = gcd_u128(coeffs[i].unsigned_abs(), coeffs[j].unsigned_abs());
            if g > 1 {
                coeffs[i] /= g as i128;
                coeffs[j] /= g as i128;
                coeffs[other] = coeffs[other]
                    .checked_mul(g as i128)
                    .ok_or(NumberTheoryError::Overflow("reducing a form"))?;
                scale[other].0 = scale[other]
                    .0
                    .checked_mul(g)
                    .ok_or(NumberTheoryError::Overflow("reducing a form"))?;
                continue 'reduce;
            }
        }
        break;
    }
    let mut out = [0i64; 3];
    for i in 0..3 {
        out[i] =
            i64::try_from(coeffs[i]).map_err(|_| NumberTheoryError::Overflow("reducing a form"))?;
    }
    Ok(ReducedForm { coeffs: out, scale })
}

/// Largest `s` with `s² | m`.
fn square_part(m: u128) -> Result<u128> {
    let m = u64::try_from(m).map_err(|_| NumberTheoryError::Overflow("reducing a form"))?;
    Ok(factorize(m)
        .into_iter()
        .map(|(p, e)| (p as u128).pow(e / 2))
        .product())
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(u/p)` for an odd prime `p` not dividing `u`.
fn legendre_symbol(u: i128, p: u64) -> i32 {
    let r = u.rem_euclid(p as i128) as u64;
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Splits `v = p^e · u` with `p ∤ u`.
fn split_power(mut v: i128, p: u64) -> (u32, i128) {
    let mut e = 0;
    while v % p as i128 == 0 {
        v /= p as i128;
        e += 1;
    }
    (e, v)
}

/// Hilbert symbol `(a, b)_p` for nonzero `a`, `b`.
fn hilbert_symbol(a: i128, b: i128, p: u64) -> i32 {
    let (alpha, u) = split_power(a, p);
    let (beta, v) = split_power(b, p);
    if p == 2 {
        let eps = |t: i128| ((t.rem_euclid(4) - 1) / 2) as u32;
        let omega = |t: i128| {
            let r = t.rem_euclid(8);
            u32::from(r == 3 || r == 5)
        };
        let exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        if exponent % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let mut sign = if (alpha * beta) % 2 == 1 && p % 4 == 3 {
            -1
        } else {
            1
        };
        if beta % 2 == 1 {
            sign *= legendre_symbol(u, p);
        }
        if alpha % 2 == 1 {
            sign *= legendre_symbol(v, p);
        }
        sign
    }
}

/// The first place where the reduced form fails to be isotropic, if any.
///
/// The real place is checked first, then odd primes dividing `abc` in
/// ascending order, then 2. Places not dividing `2abc` never obstruct.
pub fn local_obstruction(form: &ReducedForm) -> Option<Place> {
    let [a, b, c] = form.coeffs;
    if (a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0) {
        return Some(Place::Real);
    }
    let mut primes: Vec<u64> = [a, b, c]
        .iter()
        .flat_map(|v| factorize(v.unsigned_abs()))
        .map(|(p, _)| p)
        .filter(|&p| p != 2)
        .collect();
    primes.sort_unstable();
    primes.dedup();
    primes.push(2);
    // ax² + by² + cz² is isotropic over ℚ_p iff (-ac, -bc)_p = 1.
    let s = -(a as i128 * c as i128);
    let t = -(b as i128 * c as i128);
    primes
        .into_iter()
        .find(|&p| hilbert_symbol(s, t, p) == -1)
        .map(Place::Prime)
}

/// Exhaustive search of the Holzer box of a reduced form.
///
/// Enumerates the two coordinates with the smaller bounds and solves for the
/// remaining one, so the cost is the product of the two smaller bounds.
/// Returns the first nonzero solution in enumeration order.
pub fn holzer_search(form: &ReducedForm) -> Option<[i64; 3]> {
    let coeffs = form.coeffs.map(|v| v as i128);
    let bound = |i: usize, j: usize| isqrt((coeffs[i] * coeffs[j]).unsigned_abs() as u64) as i128;
    let bounds = [bound(1, 2), bound(0, 2), bound(0, 1)];
    let solve_for = (0..3)
        .max_by_key(|&i| (bounds[i], std::cmp::Reverse(i)))
        .expect("three coordinates");
    let (outer, inner) = match solve_for {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    for u in 0..=bounds[outer] {
        for v in 0..=bounds[inner] {
            if u == 0 && v == 0 {
                continue;
            }
            let rest = -(coeffs[outer] * u * u + coeffs[inner] * v * v);
            if rest % coeffs[solve_for] != 0 {
                continue;
            }
            let sq = rest / coeffs[solve_for];
            if sq < 0 {
                continue;
            }
            let w = isqrt(sq as u64) as i128;
            if w * w != sq {
                continue;
            }
            let mut sol = [0i64; 3];
            sol[outer] = u as i64;
            sol[inner] = v as i64;
            sol[solve_for] = w as i64;
            return Some(sol);
        }
    }
    None
}

/// Why a ternary form has no nontrivial solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalObstruction {
    pub place: Place,
    /// Coefficients of the reduced form the obstruction was found on.
    pub reduced: [i64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LegendreOutcome {
    pub solvable: bool,
    pub witness: Option<[i64; 3]>,
    pub obstruction: Option<LocalObstruction>,
}

/// Decides `a·x² + b·y² + c·z² = 0` over the integers, excluding `(0, 0, 0)`.
///
/// A solvable answer always carries a primitive witness that has been checked
/// by substitution into the original equation.
pub fn legendre_solvable(a: i64, b: i64, c: i64) -> Result<LegendreOutcome> {
    let coeffs = [a, b, c];
    if coeffs == [0, 0, 0] {
        return Err(NumberTheoryError::ZeroForm);
    }
    if let Some(i) = coeffs.iter().position(|&v| v == 0) {
        let mut witness = [0; 3];
        witness[i] = 1;
        return Ok(LegendreOutcome {
            solvable: true,
            witness: Some(witness),
            obstruction: None,
        });
    }
    let form = reduce_form(a, b, c)?;
    if let Some(place) = local_obstruction(&form) {
        return Ok(LegendreOutcome {
            solvable: false,
            witness: None,
            obstruction: Some(LocalObstruction {
                place,
                reduced: form.coeffs,
            }),
        });
    }
    match holzer_search(&form) {
        Some(found) => {
            let witness = form.lift(found)?;
            assert!(
                form_value(coeffs, witness)? == 0 && witness != [0, 0, 0],
                "lifted witness {witness:?} does not solve {coeffs:?}"
            );
            Ok(LegendreOutcome {
                solvable: true,
                witness: Some(witness),
                obstruction: None,
            })
        }
        // Local solvability everywhere implies a rational point, so this arm
        // is unreachable unless one of the two deciders is wrong.
        None => Ok(LegendreOutcome {
            solvable: false,
            witness: None,
            obstruction: None,
        }),
    }
}

/// `a·x² + b·y² + c·z²`, checked.
pub fn form_value(coeffs: [i64; 3], point: [i64; 3]) -> Result<i128> {
    let overflow = || NumberTheoryError::Overflow("evaluating a form");
    let mut acc: i128 = 0;
    for i in 0..3 {
        let sq = (point[i] as i128)
            .checked_mul(point[i] as i128)
            .ok_or_else(overflow)?;
        let term = sq.checked_mul(coeffs[i] as i128).ok_or_else(overflow)?;
        acc = acc.checked_add(term).ok_or_else(overflow)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BrcCase {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrcObstruction {
    /// Even `n` with `k - λ` not a square.
    NotSquare { k_minus_lambda: u64 },
    /// Odd `n`: the equation fails to be solvable locally.
    Local(LocalObstruction),
    /// Odd `n`: locally solvable but the box search found nothing.
    SearchExhausted { reduced: [i64; 3] },
}

impl fmt::Display for BrcObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSquare { k_minus_lambda } => {
                write!(f, "k-lambda = {k_minus_lambda} not a perfect square")
            }
            Self::Local(o) => write!(
                f,
                "no solution over {} (reduced form {:?})",
                o.place, o.reduced
            ),
            Self::SearchExhausted { reduced } => {
                write!(
                    f,
                    "no solution in the bounded box of reduced form {reduced:?}"
                )
            }
        }
    }
}

impl Serialize for BrcObstruction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Outcome of the Bruck-Ryser-Chowla test for symmetric `(n, k, λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BrcVerdict {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub applicable_case: BrcCase,
    pub passes: bool,
    /// `(x, y, z)` with `x² = (k-λ)y² + (-1)^((n-1)/2)·λ·z²`, odd case only.
    pub witness: Option<[i64; 3]>,
    pub obstruction: Option<BrcObstruction>,
}

impl fmt::Display for BrcVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, k, l) = (self.n, self.k, self.lambda);
        match (self.passes, self.applicable_case) {
            (true, BrcCase::Even) => write!(
                f,
                "passes: n = {n} even and k-lambda = {} is a perfect square",
                k - l
            ),
            (true, BrcCase::Odd) => {
                let [x, y, z] = self.witness.expect("odd pass carries a witness");
                let coef = |c: u64| if c == 1 { String::new() } else { c.to_string() };
                write!(
                    f,
                    "passes: x^2 = {}y^2 {} {}z^2 solved by (x, y, z) = ({x}, {y}, {z})",
                    coef(k - l),
                    if (n - 1) / 2 % 2 == 0 { '+' } else { '-' },
                    coef(l)
                )
            }
            (false, _) => write!(
                f,
                "fails: {}",
                self.obstruction.expect("failure carries an obstruction")
            ),
        }
    }
}

/// Bruck-Ryser-Chowla test for a symmetric `(n, k, λ)` design.
pub fn brc_check(n: u64, k: u64, lambda: u64) -> Result<BrcVerdict> {
    if n < 2 {
        return Err(NumberTheoryError::TooFewPoints(n));
    }
    if k <= lambda {
        return Err(NumberTheoryError::Degenerate { k, lambda });
    }
    let diff = k - lambda;
    let mut verdict = BrcVerdict {
        n,
        k,
        lambda,
        applicable_case: BrcCase::Even,
        passes: false,
        witness: None,
        obstruction: None,
    };
    if n.is_multiple_of(2) {
        let diff_i = i64::try_from(diff).map_err(|_| NumberTheoryError::Overflow("k - lambda"))?;
        verdict.passes = is_perfect_square(diff_i)?;
        if !verdict.passes {
            verdict.obstruction = Some(BrcObstruction::NotSquare {
                k_minus_lambda: diff,
            });
        }
        return Ok(verdict);
    }
    verdict.applicable_case = BrcCase::Odd;
    let to_i64 =
        |v: u64| i64::try_from(v).map_err(|_| NumberTheoryError::Overflow("BRC coefficients"));
    let sign = if ((n - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    // x² = (k-λ)y² + sign·λ·z²  <=>  x² - (k-λ)y² - sign·λ·z² = 0
    let outcome = legendre_solvable(1, -to_i64(diff)?, -sign * to_i64(lambda)?)?;
    verdict.passes = outcome.solvable;
    verdict.witness = outcome.witness;
    if !outcome.solvable {
        verdict.obstruction = Some(match outcome.obstruction {
            Some(o) => BrcObstruction::Local(o),
            None => BrcObstruction::SearchExhausted {
                reduced: reduce_form(1, -to_i64(diff)?, -sign * to_i64(lambda)?)?.coeffs,
            },
        });
    }
    Ok(verdict)
}

/// Ryser's hypothesis: `n` odd and `gcd(k, λ) = 1`.
pub fn ryser_applies(n: u64, k: u64, lambda: u64) -> bool {
    n % 2 == 1 && gcd(k, lambda) == 1
}
