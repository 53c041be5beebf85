//! Dirichlet characters of odd modulus with exact cyclotomic values.
//!
//! The unit group mod d (d odd) is presented by one generator per odd prime
//! power factor, found by CRT-lifting a primitive root of each factor. A
//! character is then a choice of exponent against each generator; values land
//! in the cyclotomic field whose order is the group exponent, reduced to each
//! value's own minimal order.

use num_integer::Integer;

use crate::arith::{euler_phi, factorize, mult_order, mul_mod, pow_mod};
use crate::cyclo::CycloRational;
use crate::error::{Error, Result};

/// The unit group (Z/d)^* for odd d, with a fixed generating set ordered by
/// ascending prime factor.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    modulus: u64,
    gens: Vec<u64>,
    orders: Vec<u64>,
    exponent: u64,
    // every exponent tuple together with the residue it generates
    tuples: Vec<(u64, Vec<u64>)>,
}

impl UnitGroup {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus == 0 || modulus % 2 == 0 {
            return Err(Error::BadModulus(modulus));
        }
        let mut gens = Vec::new();
        let mut orders = Vec::new();
        for (p, k) in factorize(modulus) {
            let q = p.pow(k);
            let root = primitive_root(p, q);
            gens.push(crt(root, q, 1, modulus / q));
            orders.push(euler_phi(q));
        }
        let exponent = orders.iter().fold(1, |acc, &o| acc.lcm(&o));
        let count: u64 = orders.iter().product();
        let mut tuples = Vec::with_capacity(count as usize);
        for idx in 0..count {
            let exps = Self::decompose(idx, &orders);
            let mut residue = 1 % modulus;
            for (g, e) in gens.iter().zip(&exps) {
                residue = mul_mod(residue, pow_mod(*g, *e, modulus), modulus);
            }
            tuples.push((residue, exps));
        }
        Ok(UnitGroup {
            modulus,
            gens,
            orders,
            exponent,
            tuples,
        })
    }

    fn decompose(mut idx: u64, orders: &[u64]) -> Vec<u64> {
        let mut exps = vec![0u64; orders.len()];
        for (i, &o) in orders.iter().enumerate().rev() {
            exps[i] = idx % o;
            idx /= o;
        }
        exps
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn generator_orders(&self) -> &[u64] {
        &self.orders
    }

    /// lcm of the generator orders; every character value is a root of unity
    /// of this order.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn character_count(&self) -> u64 {
        euler_phi(self.modulus)
    }

    /// The character at a lexicographic index over exponent tuples, the first
    /// generator most significant.
    pub fn character(&self, index: u64) -> Result<Character> {
        let count = self.character_count();
        if index >= count {
            return Err(Error::CharacterIndex {
                modulus: self.modulus,
                index,
                count,
            });
        }
        let exps = Self::decompose(index, &self.orders);
        let m = self.exponent;
        let mut values = vec![CycloRational::zero(); self.modulus as usize];
        for (residue, t) in &self.tuples {
            let s = exps
                .iter()
                .zip(t)
                .zip(&self.orders)
                .fold(0u64, |acc, ((&e, &ti), &o)| {
                    (acc + e % m * (ti % m) % m * (m / o)) % m
                });
            values[*residue as usize] = zeta_power(m, s);
        }
        let order = exps
            .iter()
            .zip(&self.orders)
            .fold(1u64, |acc, (&e, &o)| acc.lcm(&(o / o.gcd(&e))));
        let conductor = conductor_of(self.modulus, &self.tuples, &values);
        Ok(Character {
            modulus: self.modulus,
            index,
            exponents: exps,
            order,
            conductor,
            values,
        })
    }

    pub fn characters(&self) -> Vec<Character> {
        (0..self.character_count())
            .map(|i| self.character(i).expect("index within count"))
            .collect()
    }
}

/// zeta_m^e at its minimal order.
fn zeta_power(m: u64, e: u64) -> CycloRational {
    let e = e % m;
    if e == 0 {
        return CycloRational::one();
    }
    let g = m.gcd(&e);
    let (m, e) = (m / g, e / g);
    if m == 2 {
        CycloRational::from_int(-1)
    } else {
        CycloRational::root_of_unity(m, e)
    }
}

/// Smallest primitive root of the odd prime power q = p^k.
fn primitive_root(p: u64, q: u64) -> u64 {
    let target = euler_phi(q);
    (2..q)
        .find(|&g| g % p != 0 && mult_order(g, q) == target)
        .expect("odd prime powers are cyclic")
}

/// x with x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2.
fn crt(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    if m2 == 1 {
        return r1 % m1.max(1);
    }
    let (m1i, m2i) = (m1 as i128, m2 as i128);
    let eg = m1i.extended_gcd(&m2i);
    debug_assert_eq!(eg.gcd, 1);
    let inv = eg.x.rem_euclid(m2i);
    let k = ((r2 as i128 - r1 as i128).rem_euclid(m2i) * inv).rem_euclid(m2i);
    (r1 as i128 + m1i * k) as u64
}

/// Smallest f | d through which the values factor: chi(a) = 1 for every unit
/// a = 1 (mod f).
fn conductor_of(d: u64, tuples: &[(u64, Vec<u64>)], values: &[CycloRational]) -> u64 {
    crate::arith::divisors(d)
        .into_iter()
        .find(|&f| {
            tuples
                .iter()
                .filter(|(residue, _)| residue % f == 1 % f)
                .all(|(residue, _)| values[*residue as usize].is_one())
        })
        .expect("d itself always works")
}

/// A Dirichlet character of odd modulus, tabulated on all residues, with
/// zero at the non-units.
#[derive(Clone, Debug)]
pub struct Character {
    modulus: u64,
    index: u64,
    exponents: Vec<u64>,
    order: u64,
    conductor: u64,
    values: Vec<CycloRational>,
}

impl Character {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Exponents against the unit group generators.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Multiplicative order of the character.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    /// chi(l), taking l by its residue.
    pub fn value(&self, l: u64) -> &CycloRational {
        &self.values[(l % self.modulus) as usize]
    }

    /// Values on the residues 0..modulus.
    pub fn values(&self) -> &[CycloRational] {
        &self.values
    }
}

/// All characters mod d in index order.
pub fn enumerate_characters(d: u64) -> Result<Vec<Character>> {
    Ok(UnitGroup::new(d)?.characters())
}

/// The single character at the given index.
pub fn character(d: u64, index: u64) -> Result<Character> {
    UnitGroup::new(d)?.character(index)
}
