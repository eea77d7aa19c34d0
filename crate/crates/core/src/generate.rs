//! Seeded random instances.
//!
//! A [`Profile`] fixes the matroid shape, the kind of uncertainty areas, the
//! share of trivial elements and the cost model. [`generate`] is
//! deterministic in `(seed, profile)`.
//!
//! Profile strings, as accepted by [`MatroidProfile::parse`] and
//! [`AreaProfile::parse`]:
//!
//! | text | meaning |
//! |------|---------|
//! | `graphic:V:E` | `E` random edges on `V` vertices |
//! | `uniform:N:K` | rank-`K` uniform matroid on `N` elements |
//! | `partition:N:C1,C2,..` | `N` elements in random blocks with capacities `C1,C2,..` |
//! | `mixed` | open, closed, half-open, two-point, union and point areas on `[0,6]` |
//! | `two-point:L:U` | every area is `{L,U}` |

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::rational::{frac, int, parse_rational, Rational};
use crate::uncertainty::{ElementData, IntervalPiece, UncertainInstance, UncertaintyArea};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidProfile {
    Graphic { vertices: usize, edges: usize },
    Uniform { n: usize, rank: usize },
    Partition { n: usize, capacities: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AreaProfile {
    Mixed,
    TwoPoint { lo: Rational, hi: Rational },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostProfile {
    Unit,
    /// Costs drawn from `{1/2, 1, 2, 3}`.
    Random,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub matroid: MatroidProfile,
    pub areas: AreaProfile,
    pub trivial_fraction: f64,
    pub costs: CostProfile,
}

impl Profile {
    pub fn new(matroid: MatroidProfile) -> Self {
        Profile {
            matroid,
            areas: AreaProfile::Mixed,
            trivial_fraction: 0.1,
            costs: CostProfile::Unit,
        }
    }

    pub fn areas(mut self, areas: AreaProfile) -> Self {
        self.areas = areas;
        self
    }

    pub fn trivial_fraction(mut self, f: f64) -> Self {
        self.trivial_fraction = f;
        self
    }

    pub fn costs(mut self, costs: CostProfile) -> Self {
        self.costs = costs;
        self
    }
}

fn numbers<T: FromStr>(parts: &[&str], text: &str) -> Result<Vec<T>> {
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid profile {text:?}: bad number {p:?}")))
        })
        .collect()
}

impl MatroidProfile {
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        let bad = |why: &str| Error::Parse(format!("invalid profile {text:?}: {why}"));
        let profile = match parts.as_slice() {
            ["graphic", rest @ ..] if rest.len() == 2 => {
                let v: Vec<usize> = numbers(rest, text)?;
                MatroidProfile::Graphic {
                    vertices: v[0],
                    edges: v[1],
                }
            }
            ["uniform", rest @ ..] if rest.len() == 2 => {
                let v: Vec<usize> = numbers(rest, text)?;
                MatroidProfile::Uniform {
                    n: v[0],
                    rank: v[1],
                }
            }
            ["partition", n, caps] => MatroidProfile::Partition {
                n: numbers::<usize>(&[n], text)?[0],
                capacities: numbers(&caps.split(',').collect::<Vec<_>>(), text)?,
            },
            _ => {
                return Err(bad(
                    "expected graphic:V:E, uniform:N:K or partition:N:C1,C2,..",
                ))
            }
        };
        profile.validate()?;
        Ok(profile)
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: String| Err(Error::Parse(format!("infeasible profile: {why}")));
        match self {
            MatroidProfile::Graphic { vertices, edges } => {
                if *vertices == 0 && *edges > 0 {
                    return bad("edges need at least one vertex".into());
                }
            }
            MatroidProfile::Uniform { n, rank } => {
                if rank > n {
                    return bad(format!("rank {rank} exceeds {n} elements"));
                }
            }
            MatroidProfile::Partition { capacities, .. } => {
                if capacities.is_empty() {
                    return bad("partition needs at least one block".into());
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        match self {
            MatroidProfile::Graphic { edges, .. } => *edges,
            MatroidProfile::Uniform { n, .. } | MatroidProfile::Partition { n, .. } => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl AreaProfile {
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        match parts.as_slice() {
            ["mixed"] => Ok(AreaProfile::Mixed),
            ["two-point", lo, hi] | ["two_point", lo, hi] => {
                let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
                if lo >= hi {
                    return Err(Error::Parse(format!(
                        "invalid area profile {text:?}: need L < U"
                    )));
                }
                Ok(AreaProfile::TwoPoint { lo, hi })
            }
            _ => Err(Error::Parse(format!(
                "invalid area profile {text:?}: expected mixed or two-point:L:U"
            ))),
        }
    }
}

/// Element names `e1, e2, ..`, zero-padded so lexicographic order is numeric.
pub fn element_names(n: usize) -> Vec<String> {
    let width = n.to_string().len();
    (1..=n).map(|i| format!("e{i:0width$}")).collect()
}

fn random_matroid(rng: &mut ChaCha8Rng, profile: &MatroidProfile) -> Result<Matroid> {
    let names = element_names(profile.len());
    match profile {
        MatroidProfile::Graphic { vertices, .. } => {
            let edges = names.into_iter().map(|name| {
                let u = rng.gen_range(0..*vertices);
                let v = if *vertices > 1 && rng.gen_range(0..12) != 0 {
                    let w = rng.gen_range(0..*vertices - 1);
                    if w >= u {
                        w + 1
                    } else {
                        w
                    }
                } else {
                    u
                };
                (name, u, v)
            });
            Matroid::graphic(*vertices, edges.collect::<Vec<_>>())
        }
        MatroidProfile::Uniform { rank, .. } => Matroid::uniform(names, *rank),
        MatroidProfile::Partition { capacities, .. } => {
            let items: Vec<_> = names
                .into_iter()
                .map(|name| (name, rng.gen_range(0..capacities.len())))
                .collect();
            Matroid::partition(items, capacities.clone())
        }
    }
}

const SPAN: i64 = 6;

fn ordered_pair(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> (i64, i64) {
    let a = rng.gen_range(lo..hi);
    let b = rng.gen_range(a + 1..=hi);
    (a, b)
}

fn mixed_area(rng: &mut ChaCha8Rng) -> UncertaintyArea {
    let piece = |lo: i64, hi: i64, lo_open: bool, hi_open: bool| {
        IntervalPiece::new(int(lo), int(hi), lo_open, hi_open).expect("lo < hi")
    };
    let pieces = match rng.gen_range(0..6) {
        0 => {
            let (a, b) = ordered_pair(rng, 0, SPAN);
            vec![piece(a, b, true, true)]
        }
        1 => {
            let (a, b) = ordered_pair(rng, 0, SPAN);
            vec![piece(a, b, false, false)]
        }
        2 => {
            let (a, b) = ordered_pair(rng, 0, SPAN);
            let lo_open = rng.gen_bool(0.5);
            vec![piece(a, b, lo_open, !lo_open)]
        }
        3 => {
            let (a, b) = ordered_pair(rng, 0, SPAN);
            vec![IntervalPiece::point(int(a)), IntervalPiece::point(int(b))]
        }
        4 => {
            let (a, b) = ordered_pair(rng, 0, SPAN - 2);
            let (c, d) = ordered_pair(rng, b + 1, SPAN);
            vec![
                piece(a, b, rng.gen_bool(0.5), rng.gen_bool(0.5)),
                piece(c, d, rng.gen_bool(0.5), rng.gen_bool(0.5)),
            ]
        }
        _ => {
            let (a, b) = ordered_pair(rng, 0, SPAN);
            let mid = rng.gen_range(a..=b);
            vec![piece(a, b, true, true), IntervalPiece::point(int(mid))]
        }
    };
    UncertaintyArea::new(pieces).expect("pieces are valid")
}

/// A half-integer point of `area`, attained endpoints chosen half the time.
fn random_weight(rng: &mut ChaCha8Rng, area: &UncertaintyArea) -> Rational {
    let mut ends = Vec::new();
    for p in area.pieces() {
        if !p.lo_open {
            ends.push(p.lo);
        }
        if !p.hi_open {
            ends.push(p.hi);
        }
    }
    if !ends.is_empty() && rng.gen_bool(0.5) {
        return *ends.choose(rng).expect("non-empty");
    }
    let lo = (area.lower() * int(2)).to_integer();
    let hi = (area.upper() * int(2)).to_integer();
    let grid: Vec<Rational> = (lo..=hi)
        .map(|k| Rational::new(k, 2))
        .filter(|&v| area.contains(v))
        .collect();
    match grid.choose(rng) {
        Some(&v) => v,
        None => area.clamp(area.lower()),
    }
}

fn random_cost(rng: &mut ChaCha8Rng, costs: CostProfile) -> Rational {
    match costs {
        CostProfile::Unit => int(1),
        CostProfile::Random => *[frac(1, 2), int(1), int(2), int(3)]
            .choose(rng)
            .expect("non-empty"),
    }
}

pub fn generate(seed: u64, profile: &Profile) -> Result<UncertainInstance> {
    profile.matroid.validate()?;
    if !(0.0..=1.0).contains(&profile.trivial_fraction) {
        return Err(Error::Parse(format!(
            "infeasible profile: trivial fraction {} outside [0,1]",
            profile.trivial_fraction
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matroid = random_matroid(&mut rng, &profile.matroid)?;
    let names: Vec<String> = matroid.names().to_vec();
    let mut data = Vec::with_capacity(names.len());
    for name in names {
        let trivial = rng.gen_bool(profile.trivial_fraction);
        let (area, weight) = match &profile.areas {
            AreaProfile::TwoPoint { lo, hi } if !trivial => {
                let w = if rng.gen_bool(0.5) { *lo } else { *hi };
                (UncertaintyArea::two_point(*lo, *hi), w)
            }
            AreaProfile::TwoPoint { lo, hi } => {
                let w = if rng.gen_bool(0.5) { *lo } else { *hi };
                (UncertaintyArea::point(w), w)
            }
            AreaProfile::Mixed => {
                let area = mixed_area(&mut rng);
                let w = random_weight(&mut rng, &area);
                if trivial {
                    (UncertaintyArea::point(w), w)
                } else {
                    (area, w)
                }
            }
        };
        let cost = random_cost(&mut rng, profile.costs);
        data.push((name, ElementData::new(area, weight, cost)));
    }
    UncertainInstance::new(matroid, data)
}

/// Cycles through small graphic, uniform and partition profiles with at most
/// `max_elements` elements; used to build test corpora.
pub fn corpus_profile(index: u64, max_elements: usize) -> Profile {
    let mut rng = ChaCha8Rng::seed_from_u64(index ^ 0x9e37_79b9_7f4a_7c15);
    let n = rng.gen_range(max_elements.clamp(1, 3)..=max_elements.max(1));
    let matroid = match index % 3 {
        0 => MatroidProfile::Graphic {
            vertices: rng.gen_range(3..=5),
            edges: n,
        },
        1 => MatroidProfile::Uniform {
            n,
            rank: rng.gen_range(1..n.max(2)).min(n),
        },
        _ => {
            let blocks = rng.gen_range(1..=3);
            MatroidProfile::Partition {
                n,
                capacities: (0..blocks).map(|_| rng.gen_range(1..=2)).collect(),
            }
        }
    };
    let costs = if rng.gen_bool(0.5) {
        CostProfile::Unit
    } else {
        CostProfile::Random
    };
    Profile::new(matroid).costs(costs).trivial_fraction(0.1)
}
