use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{lll_values, LllParameters};
use crate::error::{Error, Result};
use crate::events::enumerate_special_tuples;
use crate::graph::{max_degree, Graph};
use crate::par;
use crate::precise::{to_f64, Interval};
use crate::util::for_each_connected_set;

pub const CERTIFICATE_MAX_VERTICES: usize = 30;
pub const CERTIFICATE_MAX_M: usize = 3;

/// Bad-event family, with the tuple size or vertex-set size where relevant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum EventFamily {
    Edge,
    Tuple(usize),
    KVertex(usize),
}

impl fmt::Display for EventFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EventFamily::Edge => write!(f, "edge"),
            EventFamily::Tuple(t) => write!(f, "tuple_{t}"),
            EventFamily::KVertex(k) => write!(f, "k_vertex_{k}"),
        }
    }
}

impl FromStr for EventFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let size = |t: &str| t.parse::<usize>().map_err(|_| Error::UnknownName(s.to_string()));
        if s == "edge" {
            Ok(EventFamily::Edge)
        } else if let Some(t) = s.strip_prefix("tuple_") {
            Ok(EventFamily::Tuple(size(t)?))
        } else if let Some(k) = s.strip_prefix("k_vertex_") {
            Ok(EventFamily::KVertex(size(k)?))
        } else {
            Err(Error::UnknownName(s.to_string()))
        }
    }
}

impl From<EventFamily> for String {
    fn from(f: EventFamily) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for EventFamily {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Summary of one event family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: EventFamily,
    pub events: usize,
    /// Exact probability of each event in the family.
    pub probability: String,
    /// The coarser bound `p^(k-2)` for k-vertex events.
    pub probability_bound: Option<String>,
    /// The weight `x_i` assigned to the family.
    pub weight: f64,
    /// Largest number of dependent events from each family, over the events
    /// of this family.
    pub max_dependencies: BTreeMap<EventFamily, u64>,
    /// Smallest `x_i ∏(1 - x_j) - Pr(A_i)` over the family, using the lower
    /// bound of the product. Negative means the condition failed.
    pub worst_residual: f64,
    pub worst_event: Vec<usize>,
    pub failures: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub palette_size: u64,
    pub total_events: usize,
    pub families: Vec<FamilyReport>,
    pub pass: bool,
}

struct Event {
    family: EventFamily,
    mask: u64,
}

/// Checks the asymmetric local-lemma condition for every bad event of `g`
/// with palette size `s`.
///
/// Events are edges, special tuples and connected bipartite vertex sets `A`
/// with `3 <= |A| <= m + 2`, at least `m + 1` induced edges and no special
/// tuple inside either side. Two events depend on each other iff their
/// vertex sets meet.
pub fn lll_certificate_exact(g: &Graph, m: usize, s: u64) -> Result<CertificateReport> {
    let n = g.vertex_count();
    if n > CERTIFICATE_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "certificate vertex count",
            limit: CERTIFICATE_MAX_VERTICES,
            actual: n,
        });
    }
    if m > CERTIFICATE_MAX_M {
        return Err(Error::SizeLimit {
            what: "certificate m",
            limit: CERTIFICATE_MAX_M,
            actual: m,
        });
    }
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("palette size must be positive".into()));
    }
    let delta = max_degree(g);
    if delta == 0 {
        return Ok(CertificateReport {
            n,
            m,
            delta,
            palette_size: s,
            total_events: 0,
            families: Vec::new(),
            pass: true,
        });
    }
    let params = lll_values(m, delta, s)?;
    let events = enumerate_events(g, m)?;

    let mut families: Vec<EventFamily> = events.iter().map(|e| e.family).collect();
    families.sort_unstable();
    families.dedup();
    let family_index: HashMap<EventFamily, usize> =
        families.iter().enumerate().map(|(i, &f)| (f, i)).collect();

    // containing[f][U] = number of events of family f whose set contains U.
    let mut containing: Vec<HashMap<u64, u64>> = vec![HashMap::new(); families.len()];
    for e in &events {
        let table = &mut containing[family_index[&e.family]];
        for_each_submask(e.mask, |u| *table.entry(u).or_insert(0) += 1);
    }

    let counts: Vec<Vec<u64>> = par::map(&events, |e| {
        let own = family_index[&e.family];
        (0..families.len())
            .map(|f| {
                let meeting = intersecting(&containing[f], e.mask);
                if f == own {
                    meeting - 1
                } else {
                    meeting
                }
            })
            .collect()
    });

    let weights: Vec<Interval> = families.iter().map(|&f| weight(&params, f)).collect();
    let complements: Vec<Interval> = weights.iter().map(Interval::one_minus).collect();
    let mut rhs_cache: HashMap<(usize, &[u64]), BigRational> = HashMap::new();
    let mut reports: Vec<FamilyReport> = families
        .iter()
        .zip(&weights)
        .map(|(&family, w)| FamilyReport {
            family,
            events: 0,
            probability: probability(family, s).to_string(),
            probability_bound: match family {
                EventFamily::KVertex(k) => Some(params.p.pow(k as i32 - 2).to_string()),
                _ => None,
            },
            weight: w.midpoint_f64(),
            max_dependencies: families.iter().map(|&f| (f, 0)).collect(),
            worst_residual: f64::INFINITY,
            worst_event: Vec::new(),
            failures: 0,
            holds: true,
        })
        .collect();
    let probabilities: Vec<BigRational> = families.iter().map(|&f| probability(f, s)).collect();

    for (e, count) in events.iter().zip(&counts) {
        let fi = family_index[&e.family];
        let bound = rhs_cache.entry((fi, count.as_slice())).or_insert_with(|| {
            let mut acc = weights[fi].clone();
            for (c, &k) in complements.iter().zip(count) {
                acc = acc.mul(&c.powu(k));
            }
            acc.lo().clone()
        });
        let residual = &*bound - &probabilities[fi];
        let report = &mut reports[fi];
        report.events += 1;
        for (f, &k) in families.iter().zip(count) {
            let slot = report.max_dependencies.get_mut(f).expect("every family is listed");
            *slot = (*slot).max(k);
        }
        let r = to_f64(&residual);
        if r < report.worst_residual || report.worst_event.is_empty() {
            report.worst_residual = r;
            report.worst_event = mask_vertices(e.mask);
        }
        if residual < BigRational::from_integer(0.into()) {
            report.failures += 1;
            report.holds = false;
        }
    }
    let pass = reports.iter().all(|r| r.holds);
    Ok(CertificateReport {
        n,
        m,
        delta,
        palette_size: s,
        total_events: events.len(),
        families: reports,
        pass,
    })
}

fn enumerate_events(g: &Graph, m: usize) -> Result<Vec<Event>> {
    let masks = g.adjacency_masks();
    let mut events: Vec<Event> = g
        .edges()
        .map(|(u, v)| Event {
            family: EventFamily::Edge,
            mask: 1 << u | 1 << v,
        })
        .collect();
    let tuples: Vec<u64> = enumerate_special_tuples(g, m)?
        .iter()
        .map(|t| t.vertices.iter().fold(0, |acc, v| acc | 1 << v))
        .collect();
    events.extend(tuples.iter().map(|&mask| Event {
        family: EventFamily::Tuple(mask.count_ones() as usize),
        mask,
    }));
    for_each_connected_set(&masks, m + 2, |set| {
        let k = set.count_ones() as usize;
        if k < 3 {
            return;
        }
        let Some(sides) = bipartition_mask(&masks, set) else {
            return;
        };
        let induced: u32 = mask_vertices(set)
            .iter()
            .map(|&v| (masks[v] & set).count_ones())
            .sum::<u32>()
            / 2;
        if (induced as usize) < m + 1 {
            return;
        }
        if tuples.iter().any(|&t| t & !sides.0 == 0 || t & !sides.1 == 0) {
            return;
        }
        events.push(Event {
            family: EventFamily::KVertex(k),
            mask: set,
        });
    });
    Ok(events)
}

/// Sides of the connected induced subgraph on `set`, if it is bipartite.
fn bipartition_mask(masks: &[u64], set: u64) -> Option<(u64, u64)> {
    let mut sides = [1u64 << set.trailing_zeros(), 0];
    let mut frontier = sides[0];
    let mut cur = 0;
    while frontier != 0 {
        let reach = mask_vertices(frontier).iter().fold(0, |acc, &v| acc | masks[v]) & set;
        if reach & sides[cur] != 0 {
            return None;
        }
        frontier = reach & !sides[1 - cur];
        sides[1 - cur] |= reach;
        cur = 1 - cur;
    }
    Some((sides[0], sides[1]))
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn for_each_submask(mask: u64, mut f: impl FnMut(u64)) {
    let mut u = mask;
    while u != 0 {
        f(u);
        u = (u - 1) & mask;
    }
}

/// Events whose set meets `mask`, by inclusion-exclusion over the nonempty
/// subsets of `mask`.
fn intersecting(containing: &HashMap<u64, u64>, mask: u64) -> u64 {
    let mut total: i64 = 0;
    for_each_submask(mask, |u| {
        let c = containing.get(&u).copied().unwrap_or(0) as i64;
        if u.count_ones() % 2 == 1 {
            total += c;
        } else {
            total -= c;
        }
    });
    total as u64
}

fn probability(family: EventFamily, s: u64) -> BigRational {
    let s_big = BigInt::from(s);
    match family {
        EventFamily::Edge => BigRational::new(BigInt::one(), s_big),
        EventFamily::Tuple(t) => BigRational::new(BigInt::one(), s_big.pow(t as u32 - 1)),
        EventFamily::KVertex(k) => {
            BigRational::new(&s_big * (&s_big - 1), s_big.pow(k as u32))
        }
    }
}

fn weight(params: &LllParameters, family: EventFamily) -> Interval {
    match family {
        EventFamily::Edge => params.x.interval(),
        EventFamily::Tuple(t) => params.y[&t].interval(),
        EventFamily::KVertex(k) => params.z[&k].interval(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use crate::lll::{palette_size, Constant};

    fn c4() -> Graph {
        generate(GraphKind::Cycle(4), None).unwrap()
    }

    #[test]
    fn edgeless_passes_vacuously() {
        let r = lll_certificate_exact(&Graph::empty(5), 2, 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.total_events, 0);
    }

    #[test]
    fn max_degree_one_is_out_of_domain() {
        let k2 = generate(GraphKind::Path(2), None).unwrap();
        assert!(lll_certificate_exact(&k2, 1, 5).is_err());
    }

    #[test]
    fn size_limits() {
        let big = generate(GraphKind::Path(31), None).unwrap();
        assert!(lll_certificate_exact(&big, 2, 100).unwrap_err().is_size_limit());
        assert!(lll_certificate_exact(&c4(), 4, 100).unwrap_err().is_size_limit());
    }

    #[test]
    fn c4_event_structure() {
        // Four edges and the two opposite pairs; the whole cycle is excluded
        // because both sides are special pairs.
        let r = lll_certificate_exact(&c4(), 2, 64).unwrap();
        assert_eq!(r.total_events, 6);
        let edge = &r.families[0];
        assert_eq!(edge.family, EventFamily::Edge);
        assert_eq!(edge.events, 4);
        assert_eq!(edge.max_dependencies[&EventFamily::Edge], 2);
        assert_eq!(edge.max_dependencies[&EventFamily::Tuple(2)], 2);
        let tuple = &r.families[1];
        assert_eq!(tuple.max_dependencies[&EventFamily::Edge], 4);
        assert_eq!(tuple.max_dependencies[&EventFamily::Tuple(2)], 0);
    }

    #[test]
    fn c4_pass_and_fail() {
        // Edge condition: 1/s <= (1/2)(1/2)^2 (1 - 2^(-3/2))^2 ≈ 0.0522.
        let bound = 0.5 * 0.25 * (1.0 - 2f64.powf(-1.5)).powi(2);
        let r = lll_certificate_exact(&c4(), 2, 64).unwrap();
        assert!(r.pass);
        assert!((r.families[0].worst_residual - (bound - 1.0 / 64.0)).abs() < 1e-12);
        let r = lll_certificate_exact(&c4(), 2, 3).unwrap();
        assert!(!r.pass);
        assert!(!r.families[0].holds);
        assert_eq!(r.families[0].failures, 4);
    }

    #[test]
    fn k_vertex_events_on_a_path() {
        // P4 at m = 2: the whole path is the only set with 3 induced edges.
        let p4 = generate(GraphKind::Path(4), None).unwrap();
        let r = lll_certificate_exact(&p4, 2, 1000).unwrap();
        let kv: Vec<_> = r
            .families
            .iter()
            .filter(|f| matches!(f.family, EventFamily::KVertex(_)))
            .collect();
        assert_eq!(kv.len(), 1);
        assert_eq!(kv[0].family, EventFamily::KVertex(4));
        assert_eq!(kv[0].events, 1);
        assert_eq!(kv[0].probability, "999/1000000000");
        assert_eq!(kv[0].probability_bound.as_deref(), Some("1/1000000"));
    }

    #[test]
    fn dependency_counts_match_pairwise_scan() {
        let g = generate(
            GraphKind::RandomBoundedDegree { n: 14, max_degree: 4, p_edge: 0.35 },
            Some(3),
        )
        .unwrap();
        for m in 1..=3 {
            let events = enumerate_events(&g, m).unwrap();
            let mut containing: HashMap<EventFamily, HashMap<u64, u64>> = HashMap::new();
            for e in &events {
                let t = containing.entry(e.family).or_default();
                for_each_submask(e.mask, |u| *t.entry(u).or_insert(0) += 1);
            }
            for e in &events {
                for (f, table) in &containing {
                    let direct = events
                        .iter()
                        .filter(|o| o.family == *f && o.mask & e.mask != 0)
                        .count() as u64;
                    assert_eq!(intersecting(table, e.mask), direct);
                }
            }
        }
    }

    #[test]
    fn monotone_in_palette_size() {
        for kind in [GraphKind::Cycle(4), GraphKind::Path(4), GraphKind::Complete(4)] {
            let g = generate(kind.clone(), None).unwrap();
            let top = palette_size(2, max_degree(&g), Constant::integer(64)).unwrap();
            let mut seen_pass = false;
            for s in (1..=10).map(|i| i * top / 10) {
                let pass = lll_certificate_exact(&g, 2, s.max(1)).unwrap().pass;
                assert!(pass || !seen_pass, "{kind:?} at s = {s}");
                seen_pass |= pass;
            }
            assert!(seen_pass);
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in [EventFamily::Edge, EventFamily::Tuple(3), EventFamily::KVertex(5)] {
            assert_eq!(f.to_string().parse::<EventFamily>().unwrap(), f);
        }
        assert!("tuple_x".parse::<EventFamily>().is_err());
    }
}
