use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;

use crate::error::{Error, Result};

/// Default bound on orbit and closure sizes.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// Minimal group interface needed for Schreier generators and closures.
pub trait GroupElement: Clone + Eq + Hash {
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
}

#[derive(Debug, Clone)]
pub struct OrbitResult<P, G> {
    pub orbit: Vec<P>,
    /// `transversal[i]` maps the seed to `orbit[i]`.
    pub transversal: Vec<G>,
    pub stabilizer_generators: Vec<G>,
    pub size: usize,
}

impl<P: Eq + Hash, G> OrbitResult<P, G> {
    pub fn position(&self, point: &P) -> Option<usize> {
        self.orbit.iter().position(|p| p == point)
    }
}

/// Orbit of `seed` under the group generated by `generators`, with Schreier
/// generators for the stabilizer.
///
/// `action(g, p)` must be a left action. Compatibility with composition is
/// checked on all generator pairs at the seed before the walk starts.
pub fn orbit_with_stabilizer<P, G, A>(
    generators: &[G],
    identity: &G,
    action: A,
    seed: &P,
    cap: usize,
) -> Result<OrbitResult<P, G>>
where
    P: Clone + Eq + Hash,
    G: GroupElement,
    A: Fn(&G, &P) -> P,
{
    if action(identity, seed) != *seed {
        return Err(Error::input("identity does not fix the seed point"));
    }
    for g in generators {
        for h in generators {
            if action(&g.mul(h), seed) != action(g, &action(h, seed)) {
                return Err(Error::input("action is not compatible with composition"));
            }
        }
    }

    let mut index: HashMap<P, usize> = HashMap::new();
    let mut orbit = vec![seed.clone()];
    let mut transversal = vec![identity.clone()];
    index.insert(seed.clone(), 0);
    let mut schreier: Vec<G> = Vec::new();
    let mut seen_schreier: HashSet<G> = HashSet::new();
    let mut queue = VecDeque::from([0usize]);

    while let Some(i) = queue.pop_front() {
        for s in generators {
            let image = action(s, &orbit[i]);
            let candidate = s.mul(&transversal[i]);
            match index.get(&image) {
                Some(&j) => {
                    let gen = transversal[j].inv().mul(&candidate);
                    if gen != *identity && seen_schreier.insert(gen.clone()) {
                        schreier.push(gen);
                    }
                }
                None => {
                    if orbit.len() >= cap {
                        return Err(Error::SizeLimit {
                            what: "orbit size",
                            value: orbit.len() as u128 + 1,
                            limit: cap as u128,
                        });
                    }
                    index.insert(image.clone(), orbit.len());
                    queue.push_back(orbit.len());
                    orbit.push(image);
                    transversal.push(candidate);
                }
            }
        }
    }

    let size = orbit.len();
    Ok(OrbitResult {
        orbit,
        transversal,
        stabilizer_generators: schreier,
        size,
    })
}

/// All elements of the subgroup generated by `generators`, identity first.
pub fn closure<G: GroupElement>(generators: &[G], identity: &G, cap: usize) -> Result<Vec<G>> {
    let mut seen: HashSet<G> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity.clone()];
    let mut i = 0;
    while i < elements.len() {
        for s in generators {
            let next = elements[i].mul(s);
            if seen.insert(next.clone()) {
                if elements.len() >= cap {
                    return Err(Error::SizeLimit {
                        what: "subgroup order",
                        value: elements.len() as u128 + 1,
                        limit: cap as u128,
                    });
                }
                elements.push(next);
            }
        }
        i += 1;
    }
    Ok(elements)
}
