//! Local Hilbert symbols over Q and the norm test for quadratic fields.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Trial division bound; a residue left after dividing out every prime up to
/// this bound is prime when it is below the square of the bound.
const TRIAL_LIMIT: u64 = 1_000_000;

/// A place of Q.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Prime {
    Infinity,
    Finite(BigInt),
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prime::Infinity => write!(f, "inf"),
            Prime::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// Prime factorization of `|n|` as `(p, exponent)` pairs in increasing order.
/// `n` must be nonzero.
pub fn factor(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    assert!(!n.is_zero(), "factor(0)");
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut push = |m: &mut BigInt, p: BigInt| {
        let mut e = 0u32;
        while (&*m % &p).is_zero() {
            *m /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(&mut m, BigInt::from(2));
    let mut p = 3u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        push(&mut m, bp);
        p += 2;
    }
    if !m.is_one() {
        let limit = BigInt::from(TRIAL_LIMIT);
        if m > &limit * &limit && BigInt::from(p) > limit {
            return Err(Error::UnfactoredResidue(m.to_string()));
        }
        out.push((m, 1));
    }
    Ok(out)
}

/// Exponent of `p` in the nonzero integer `n`, and the cofactor.
fn split_valuation(n: &BigInt, p: &BigInt) -> (u64, BigInt) {
    let mut m = n.clone();
    let mut v = 0;
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    (v, m)
}

/// Legendre symbol `(u/p)` for an odd prime `p` not dividing `u`.
pub fn legendre(u: &BigInt, p: &BigInt) -> i32 {
    let e = (p - 1u32) / 2u32;
    let r = u.mod_floor(p).modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// A nonzero rational replaced by an integer in the same square class.
fn square_class_int(a: &Rat) -> BigInt {
    a.numer() * a.denom()
}

/// The local Hilbert symbol `(a, b)_p`.
pub fn hilbert_symbol(a: &Rat, b: &Rat, p: &Prime) -> i32 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    let a = square_class_int(a);
    let b = square_class_int(b);
    match p {
        Prime::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Prime::Finite(p) => {
            let (alpha, u) = split_valuation(&a, p);
            let (beta, v) = split_valuation(&b, p);
            if *p == BigInt::from(2) {
                let eps = |x: &BigInt| ((x - 1u32) / 2u32).mod_floor(&BigInt::from(2)).to_u64().unwrap();
                let omega = |x: &BigInt| ((x * x - 1u32) / 8u32).mod_floor(&BigInt::from(2)).to_u64().unwrap();
                let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
                if e % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                let eps_p = ((p - 1u32) / 2u32).mod_floor(&BigInt::from(2)).to_u64().unwrap();
                let mut s = if (alpha * beta * eps_p) % 2 == 0 { 1 } else { -1 };
                if beta % 2 == 1 {
                    s *= legendre(&u, p);
                }
                if alpha % 2 == 1 {
                    s *= legendre(&v, p);
                }
                s
            }
        }
    }
}

/// Places where `(a, b)_p` can be nontrivial: infinity, 2, and the primes
/// dividing the numerators and denominators of `a` and `b`.
pub fn relevant_places(a: &Rat, b: &Rat) -> Result<Vec<Prime>> {
    let mut primes = BTreeSet::new();
    primes.insert(BigInt::from(2));
    for x in [a.numer(), a.denom(), b.numer(), b.denom()] {
        if !x.is_zero() {
            for (p, _) in factor(x)? {
                primes.insert(p);
            }
        }
    }
    let mut out = vec![Prime::Infinity];
    out.extend(primes.into_iter().map(Prime::Finite));
    Ok(out)
}

/// Whether `q` is a norm from `Q(sqrt(minus_d))`, decided by the local
/// symbols `(q, minus_d)_p` at every relevant place.
pub fn is_norm(q: &Rat, minus_d: &Rat) -> Result<bool> {
    assert!(!q.is_zero(), "is_norm(0)");
    assert!(minus_d.is_negative(), "is_norm expects an imaginary quadratic field");
    Ok(relevant_places(q, minus_d)?
        .iter()
        .all(|p| hilbert_symbol(q, minus_d, p) == 1))
}
