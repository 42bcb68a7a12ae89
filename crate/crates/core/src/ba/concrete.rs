//! Finite Boolean algebras presented by concrete objects.
//!
//! Regular closed sets, clopen sets, simple ideals and Boolean subalgebras
//! all arrive as explicit finite families with their own join. A
//! [`ConcreteBa`] validates such a family against the powerset over its
//! atoms and hands out canonical atom coordinates, so the rest of the crate
//! can work with [`Elem`] masks and translate back when a witness needs to
//! be shown in the original terms.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::ba::powerset::{Elem, Powerset, MAX_ATOMS};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ConcreteBa<T> {
    algebra: Powerset,
    atoms: Vec<T>,
    decode: Vec<T>,
    encode: BTreeMap<T, Elem>,
}

impl<T: Ord + Clone + Debug> ConcreteBa<T> {
    /// Validate `elements` under `leq` and `join` as a Boolean algebra.
    ///
    /// Atoms are listed in the order of `T`. Fails with a structure error if
    /// the family is not a finite Boolean algebra (every element must be
    /// the join of the atoms below it, every set of atoms must be realized,
    /// and `join` must be union of atom sets).
    pub fn new<I, L, J>(elements: I, leq: L, join: J) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        L: Fn(&T, &T) -> bool,
        J: Fn(&T, &T) -> T,
    {
        let mut elems: Vec<T> = elements.into_iter().collect();
        elems.sort();
        elems.dedup();
        let bottom = elems
            .iter()
            .find(|b| elems.iter().all(|x| leq(b, x)))
            .cloned()
            .ok_or_else(|| Error::Structure("family has no least element".into()))?;
        let atoms: Vec<T> = elems
            .iter()
            .filter(|&x| *x != bottom)
            .filter(|&x| {
                !elems
                    .iter()
                    .any(|y| *y != bottom && y != x && leq(y, x))
            })
            .cloned()
            .collect();
        if atoms.len() > MAX_ATOMS {
            return Err(Error::Size {
                what: "atoms of concrete algebra",
                got: atoms.len(),
                cap: MAX_ATOMS,
            });
        }
        let algebra = Powerset::new(atoms.len())?;
        if elems.len() != algebra.size() {
            return Err(Error::Structure(format!(
                "{} elements over {} atoms: not a Boolean algebra",
                elems.len(),
                atoms.len()
            )));
        }
        let mut encode = BTreeMap::new();
        let mut decode: Vec<Option<T>> = vec![None; algebra.size()];
        for x in &elems {
            let mask = Elem::from_atoms(
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| leq(a, x))
                    .map(|(i, _)| i),
            );
            if decode[mask.0 as usize].is_some() {
                return Err(Error::Structure(format!(
                    "{x:?} shares its atoms with another element"
                )));
            }
            decode[mask.0 as usize] = Some(x.clone());
            encode.insert(x.clone(), mask);
        }
        let decode: Vec<T> = decode.into_iter().map(|x| x.expect("counted")).collect();
        for x in &elems {
            for y in &elems {
                let (mx, my) = (encode[x], encode[y]);
                if leq(x, y) != algebra.leq(mx, my) {
                    return Err(Error::Structure(format!(
                        "order of {x:?} and {y:?} is not atom inclusion"
                    )));
                }
                let j = join(x, y);
                if encode.get(&j) != Some(&algebra.join(mx, my)) {
                    return Err(Error::Structure(format!(
                        "join of {x:?} and {y:?} is not the union of their atoms"
                    )));
                }
            }
        }
        Ok(ConcreteBa {
            algebra,
            atoms,
            decode,
            encode,
        })
    }

    pub fn algebra(&self) -> Powerset {
        self.algebra
    }

    pub fn atoms(&self) -> &[T] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.decode.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn encode(&self, x: &T) -> Option<Elem> {
        self.encode.get(x).copied()
    }

    pub fn decode(&self, e: Elem) -> &T {
        &self.decode[e.0 as usize]
    }

    /// Elements in canonical (mask) order.
    pub fn elements(&self) -> impl Iterator<Item = &T> {
        self.decode.iter()
    }
}
