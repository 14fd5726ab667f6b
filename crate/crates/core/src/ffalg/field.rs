use crate::error::{Error, Result};

/// A prime field `F_q` with `2 <= q <= 13`. Elements are stored as reduced `u8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSize(u8);

const PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

impl FieldSize {
    pub fn new(q: u32) -> Result<Self> {
        if PRIMES.contains(&q) {
            Ok(FieldSize(q as u8))
        } else {
            Err(Error::InvalidField(q))
        }
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.0 as u32
    }

    /// Reduce an arbitrary integer into `0..q`.
    #[inline]
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.0 as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        let q = self.0 as u16;
        (if s >= q { s - q } else { s }) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        let q = self.0 as u16;
        let s = a as u16 + q - b as u16;
        (if s >= q { s - q } else { s }) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.0 as u16) as u8
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a != 0, "inverse of zero in F_{}", self.0);
        // Fermat: a^(q-2)
        let mut result = 1u8;
        let mut base = a;
        let mut e = self.0 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `q^e` as an exact integer, or `None` on overflow.
    pub fn pow_count(self, e: usize) -> Option<u128> {
        (self.0 as u128).checked_pow(e as u32)
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.0
    }
}
