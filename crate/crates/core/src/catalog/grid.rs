//! Default parameter grids.
//!
//! Each slot contributes its candidate values; the full product is kept when
//! it has at most [`GRID_CAP`] points. Larger products keep a covering set
//! (every value of every slot appears at least once) and fill the rest from
//! a shuffle seeded by the identity id, so grids are stable across runs.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use super::{Bindings, IdentityDescriptor, ParamSlot, ParamValue, SlotKind};
use crate::qseries::Monomial;
use crate::rational::{int, rat, Rational};

pub const GRID_CAP: usize = 40;

pub fn rational_values() -> Vec<Rational> {
    vec![int(-2), int(-1), rat(-1, 2), rat(1, 3), rat(1, 2), rat(2, 3), int(2)]
}

pub fn monomial_values() -> Vec<Monomial> {
    vec![
        Monomial::q(),
        Monomial::new(int(1), 2),
        Monomial::new(int(-1), 1),
        Monomial::new(rat(1, 2), 1),
    ]
}

/// Candidate values for one slot, poles removed.
pub fn slot_values(slot: &ParamSlot) -> Vec<ParamValue> {
    let constants = || {
        rational_values()
            .into_iter()
            .filter(|r| !slot.poles.contains(r))
            .map(|r| ParamValue::Mono(Monomial::constant(r)))
    };
    let monomials = || monomial_values().into_iter().map(ParamValue::Mono);
    match &slot.kind {
        SlotKind::Rational => constants().collect(),
        SlotKind::Monomial => monomials().collect(),
        SlotKind::Either => constants().chain(monomials()).collect(),
        SlotKind::Integer { defaults, .. } => defaults.iter().map(|&v| ParamValue::Int(v)).collect(),
    }
}

fn id_seed(id: &str) -> u64 {
    let digest = Sha256::digest(id.as_bytes());
    u64::from_le_bytes(digest[..8].try_into().expect("digest has 32 bytes"))
}

/// Index tuples chosen from a product of the given sizes.
fn choose_points(sizes: &[usize], seed: u64) -> Vec<Vec<usize>> {
    let total: usize = sizes.iter().product();
    let decode = |mut flat: usize| -> Vec<usize> {
        let mut point = vec![0; sizes.len()];
        for (slot, &len) in sizes.iter().enumerate().rev() {
            point[slot] = flat % len;
            flat /= len;
        }
        point
    };
    if total <= GRID_CAP {
        return (0..total).map(decode).collect();
    }
    let longest = sizes.iter().copied().max().unwrap_or(1);
    let mut chosen: Vec<Vec<usize>> = (0..longest).map(|i| sizes.iter().map(|&len| i % len).collect()).collect();
    let mut rest: Vec<usize> = (0..total).collect();
    rest.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    for flat in rest {
        if chosen.len() >= GRID_CAP {
            break;
        }
        let point = decode(flat);
        if !chosen.contains(&point) {
            chosen.push(point);
        }
    }
    chosen.sort();
    chosen
}

/// The default grid of an identity.
pub fn default_grid(desc: &IdentityDescriptor) -> Vec<Bindings> {
    grid_with_overrides(desc, &Bindings::new())
}

/// The default grid with some slots pinned to given values.
pub fn grid_with_overrides(desc: &IdentityDescriptor, pinned: &Bindings) -> Vec<Bindings> {
    let values: Vec<Vec<ParamValue>> = desc
        .slots
        .iter()
        .map(|slot| match pinned.get(slot.name) {
            Some(v) => vec![v.clone()],
            None => slot_values(slot),
        })
        .collect();
    let sizes: Vec<usize> = values.iter().map(Vec::len).collect();
    if sizes.contains(&0) {
        return Vec::new();
    }
    choose_points(&sizes, id_seed(desc.id))
        .into_iter()
        .map(|point| {
            let mut b = Bindings::new();
            for ((slot, vals), i) in desc.slots.iter().zip(&values).zip(point) {
                b.set(slot.name, vals[i].clone());
            }
            b
        })
        .collect()
}

/// Hex SHA-256 over every id and its default grid.
pub fn grid_hash(entries: &[IdentityDescriptor]) -> String {
    let mut hasher = Sha256::new();
    for desc in entries {
        hasher.update(desc.id.as_bytes());
        for b in default_grid(desc) {
            hasher.update(b"|");
            hasher.update(b.to_string().as_bytes());
        }
        hasher.update(b"\n");
    }
    hex::encode(hasher.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products_are_kept_whole() {
        let pts = choose_points(&[2, 3], 7);
        assert_eq!(pts.len(), 6);
    }

    #[test]
    fn large_products_are_capped_and_covering() {
        let sizes = [11, 4, 10, 4, 5];
        let pts = choose_points(&sizes, 99);
        assert_eq!(pts.len(), GRID_CAP);
        for (slot, &len) in sizes.iter().enumerate() {
            for v in 0..len {
                assert!(pts.iter().any(|p| p[slot] == v));
            }
        }
        assert_eq!(pts, choose_points(&sizes, 99));
    }
}
