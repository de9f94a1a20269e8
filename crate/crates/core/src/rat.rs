//! Exact rational scalars and their canonical string form.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The scalar type of the whole crate: arbitrary-precision rationals,
/// always reduced, denominator always positive.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rzero() -> Rat {
    Rat::zero()
}

pub fn rone() -> Rat {
    Rat::one()
}

/// Canonical serialization `num/den` with den > 0, even for integers.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `num/den` or a bare integer.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let denom: BigInt = d
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(numer, denom))
}

/// Scales a rational vector to integer entries with content 1 and a positive
/// leading coefficient. Used to normalize intertwiner generators.
pub fn normalize_primitive(v: &mut [Rat]) {
    let mut lcm = BigInt::one();
    for x in v.iter() {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    for x in v.iter_mut() {
        *x *= Rat::from_integer(lcm.clone());
    }
    let mut gcd = BigInt::zero();
    for x in v.iter() {
        gcd = num_integer::gcd(gcd, x.numer().clone());
    }
    if !gcd.is_zero() {
        for x in v.iter_mut() {
            *x /= Rat::from_integer(gcd.clone());
        }
    }
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let r = rat(-6, 4);
        assert_eq!(rat_to_string(&r), "-3/2");
        assert_eq!(rat_from_str("-3/2").unwrap(), r);
        assert_eq!(rat_from_str("7").unwrap(), rint(7));
        assert_eq!(rat_to_string(&rint(7)), "7/1");
    }

    #[test]
    fn denominator_positive_after_ops() {
        let r = rat(1, -3);
        assert_eq!(rat_to_string(&r), "-1/3");
        let s = &r + &rat(1, 3);
        assert!(s.is_zero());
    }

    #[test]
    fn primitive_normalization() {
        let mut v = vec![rat(-2, 3), rat(4, 3), rzero()];
        normalize_primitive(&mut v);
        assert_eq!(v, vec![rint(1), rint(-2), rzero()]);
    }
}
