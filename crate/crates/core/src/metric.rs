//! Hop distances, metric representations and resolving-set verification.

use std::collections::{HashMap, VecDeque};
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Distance sentinel for "no path".
pub const UNREACHABLE: u8 = u8::MAX;

/// All-pairs hop distances, one byte per entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, v: usize) -> &[u8] {
        &self.d[v * self.n..(v + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&UNREACHABLE)
    }

    /// Largest distance, `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u8> {
        if self.is_connected() {
            Some(self.d.iter().copied().max().unwrap_or(0))
        } else {
            None
        }
    }

    /// One CSV row per source vertex; unreachable entries are written as `inf`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
        for v in 0..self.n {
            w.write_record(self.row(v).iter().map(|&x| {
                if x == UNREACHABLE {
                    "inf".to_string()
                } else {
                    x.to_string()
                }
            }))?;
        }
        w.flush()?;
        Ok(())
    }

    fn require_connected(&self, name: &str) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected(name.to_owned()))
        }
    }
}

/// BFS from every vertex. Rows are computed in parallel and merged in order.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let rows: Vec<Vec<u8>> = (0..n).into_par_iter().map(|s| bfs_row(g, s)).collect::<Result<_>>()?;
    Ok(DistanceMatrix { n, d: rows.concat() })
}

fn bfs_row(g: &Graph, source: usize) -> Result<Vec<u8>> {
    let mut row = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::from([source]);
    row[source] = 0;
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &v in g.neighbors(u) {
            if row[v] == UNREACHABLE {
                if next == UNREACHABLE {
                    return Err(Error::DistanceOverflow);
                }
                row[v] = next;
                queue.push_back(v);
            }
        }
    }
    Ok(row)
}

pub fn diameter(g: &Graph) -> Result<Option<u8>> {
    Ok(distance_matrix(g)?.diameter())
}

/// Distance in `And(k)` without building the graph: 0, 1 when the difference
/// is `1 mod 3`, otherwise 2.
pub fn andrasfai_distance(k: usize, u: usize, v: usize) -> Result<u8> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "closed-form distance needs k >= 2, got {k}"
        )));
    }
    let m = 3 * k - 1;
    for x in [u, v] {
        if x >= m {
            return Err(Error::InvalidVertex { vertex: x, n: m });
        }
    }
    Ok(if u == v {
        0
    } else if ((u + m - v) % m) % 3 == 1 {
        1
    } else {
        2
    })
}

/// Metric representation `r(v | W)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Code {
    pub landmarks: Vec<usize>,
    pub entries: Vec<u8>,
}

impl Code {
    pub fn of(v: usize, landmarks: &[usize], dm: &DistanceMatrix) -> Result<Code> {
        check_ids(std::iter::once(v).chain(landmarks.iter().copied()), dm.n())?;
        dm.require_connected("input")?;
        Ok(Code {
            landmarks: landmarks.to_vec(),
            entries: landmarks.iter().map(|&w| dm.get(v, w)).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ResolvingCertificate {
    Resolving,
    /// `u < v` share `code`; the pair is the lexicographically smallest one.
    NotResolving {
        witness: [usize; 2],
        code: Vec<u8>,
    },
}

impl ResolvingCertificate {
    pub fn is_resolving(&self) -> bool {
        matches!(self, ResolvingCertificate::Resolving)
    }
}

pub fn is_resolving(g: &Graph, landmarks: &[usize]) -> Result<ResolvingCertificate> {
    let dm = distance_matrix(g)?;
    dm.require_connected(g.name())?;
    resolving_certificate(&dm, landmarks)
}

/// Same as [`is_resolving`] on a precomputed matrix.
pub fn resolving_certificate(dm: &DistanceMatrix, landmarks: &[usize]) -> Result<ResolvingCertificate> {
    check_ids(landmarks.iter().copied(), dm.n())?;
    dm.require_connected("input")?;
    let mut first_seen: HashMap<Vec<u8>, usize> = HashMap::with_capacity(dm.n());
    let mut best: Option<[usize; 2]> = None;
    for v in 0..dm.n() {
        let code: Vec<u8> = landmarks.iter().map(|&w| dm.get(v, w)).collect();
        match first_seen.get(&code) {
            // the first clash of each class is that class's smallest pair
            Some(&u) => {
                if best.is_none_or(|[bu, _]| u < bu) {
                    best = Some([u, v]);
                }
            }
            None => {
                first_seen.insert(code, v);
            }
        }
    }
    Ok(match best {
        None => ResolvingCertificate::Resolving,
        Some([u, v]) => ResolvingCertificate::NotResolving {
            witness: [u, v],
            code: landmarks.iter().map(|&w| dm.get(u, w)).collect(),
        },
    })
}

/// Resolvability test on a diameter-2 graph: every pair of non-landmarks
/// must see some landmark at distances `{1, 2}`.
pub fn resolves_by_diameter_two_rule(dm: &DistanceMatrix, landmarks: &[usize]) -> Result<bool> {
    check_ids(landmarks.iter().copied(), dm.n())?;
    if dm.diameter() != Some(2) {
        return Err(Error::InvalidParameter("graph does not have diameter 2".into()));
    }
    let mut is_landmark = vec![false; dm.n()];
    for &w in landmarks {
        is_landmark[w] = true;
    }
    let rest: Vec<usize> = (0..dm.n()).filter(|&v| !is_landmark[v]).collect();
    Ok(rest.iter().enumerate().all(|(i, &u)| {
        rest[i + 1..].iter().all(|&v| {
            landmarks.iter().any(|&w| {
                let (a, b) = (dm.get(w, u), dm.get(w, v));
                (a, b) == (1, 2) || (a, b) == (2, 1)
            })
        })
    }))
}

/// Vertices `x` with `d(x,u) != d(x,v)`.
pub fn distinguisher_set(u: usize, v: usize, dm: &DistanceMatrix) -> Result<Vec<usize>> {
    check_ids([u, v], dm.n())?;
    if u == v {
        return Err(Error::InvalidParameter("distinguisher set needs u != v".into()));
    }
    dm.require_connected("input")?;
    let (ru, rv) = (dm.row(u), dm.row(v));
    Ok((0..dm.n()).filter(|&x| ru[x] != rv[x]).collect())
}

/// Twin classes under `N(u) \ {v} = N(v) \ {u}`, covering adjacent and
/// non-adjacent twins. Classes are sorted and ordered by smallest member.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if class_of[u].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[u] = Some(id);
        let mut members = vec![u];
        for (v, slot) in class_of.iter_mut().enumerate().skip(u + 1) {
            if slot.is_none() && are_twins(g, u, v) {
                *slot = Some(id);
                members.push(v);
            }
        }
        classes.push(members);
    }
    classes
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.neighbors(u).iter().filter(|&&x| x != v);
    let b = g.neighbors(v).iter().filter(|&&x| x != u);
    a.eq(b)
}

fn check_ids(ids: impl IntoIterator<Item = usize>, n: usize) -> Result<()> {
    for v in ids {
        if v >= n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{andrasfai, cartesian_product, complement, complete, cycle, path};

    #[test]
    fn path_distances() {
        let dm = distance_matrix(&path(3).unwrap()).unwrap();
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.diameter(), Some(2));
    }

    #[test]
    fn andrasfai_four_distances() {
        let dm = distance_matrix(&andrasfai(4).unwrap()).unwrap();
        for s in [1, 4, 7, 10] {
            assert_eq!(dm.get(0, s), 1);
        }
        assert!((0..11).all(|u| (0..11).all(|v| dm.get(u, v) <= 2)));
        assert_eq!(andrasfai_distance(4, 0, 1).unwrap(), 1);
        assert_eq!(andrasfai_distance(4, 0, 0).unwrap(), 0);
        assert_eq!(andrasfai_distance(4, 2, 0).unwrap(), 2);
        assert_eq!(dm.get(2, 0), 2);
    }

    #[test]
    fn closed_form_rejections() {
        assert!(andrasfai_distance(1, 0, 1).is_err());
        assert!(andrasfai_distance(4, 0, 11).is_err());
    }

    #[test]
    fn disconnected_complement() {
        let co = complement(&andrasfai(1).unwrap());
        let dm = distance_matrix(&co).unwrap();
        assert_eq!(dm.get(0, 1), UNREACHABLE);
        assert_eq!(dm.diameter(), None);
        assert!(matches!(is_resolving(&co, &[0]), Err(Error::Disconnected(_))));
        assert!(Code::of(0, &[1], &dm).is_err());
        assert!(distinguisher_set(0, 1, &dm).is_err());
    }

    #[test]
    fn distance_overflow() {
        assert!(matches!(
            distance_matrix(&path(300).unwrap()),
            Err(Error::DistanceOverflow)
        ));
        assert!(distance_matrix(&path(255).unwrap()).is_ok());
    }

    #[test]
    fn codes() {
        let dm = distance_matrix(&andrasfai(4).unwrap()).unwrap();
        let s = [1, 4, 7, 10];
        assert_eq!(Code::of(0, &s, &dm).unwrap().entries, vec![1, 1, 1, 1]);
        assert_eq!(Code::of(2, &s, &dm).unwrap().entries, vec![1, 2, 2, 2]);
        assert_eq!(Code::of(7, &s, &dm).unwrap().entries[2], 0);
        assert!(Code::of(11, &s, &dm).is_err());
    }

    #[test]
    fn resolving_examples() {
        for k in 1..=8 {
            let s: Vec<usize> = (0..k).map(|i| 3 * i + 1).collect();
            assert!(is_resolving(&andrasfai(k).unwrap(), &s).unwrap().is_resolving());
        }
        let g = cycle(6).unwrap();
        assert_eq!(
            is_resolving(&g, &[]).unwrap(),
            ResolvingCertificate::NotResolving {
                witness: [0, 1],
                code: vec![]
            }
        );
        for x in 0..6 {
            let w: Vec<usize> = (0..6).filter(|&v| v != x).collect();
            assert!(is_resolving(&g, &w).unwrap().is_resolving());
        }
        assert!(is_resolving(&g, &[6]).is_err());
    }

    #[test]
    fn smallest_witness_pair() {
        // path 0-1-2-3-4 with landmark 2: classes {1,3}, {0,4}
        let cert = is_resolving(&path(5).unwrap(), &[2]).unwrap();
        assert_eq!(
            cert,
            ResolvingCertificate::NotResolving {
                witness: [0, 4],
                code: vec![2]
            }
        );
    }

    #[test]
    fn distinguishers() {
        let dm = distance_matrix(&path(3).unwrap()).unwrap();
        assert_eq!(distinguisher_set(0, 2, &dm).unwrap(), vec![0, 2]);
        assert!(distinguisher_set(1, 1, &dm).is_err());
        let dm = distance_matrix(&complete(4).unwrap()).unwrap();
        assert_eq!(distinguisher_set(1, 3, &dm).unwrap(), vec![1, 3]);
        let dm = distance_matrix(&andrasfai(4).unwrap()).unwrap();
        let d = distinguisher_set(2, 3, &dm).unwrap();
        assert!(d.contains(&1) && d.contains(&4));
    }

    #[test]
    fn twins() {
        for k in 2..=10 {
            let g = andrasfai(k).unwrap();
            assert!(twin_classes(&g).iter().all(|c| c.len() == 1), "k={k}");
        }
        assert_eq!(twin_classes(&complete(5).unwrap()), vec![vec![0, 1, 2, 3, 4]]);
        // the two leaves of P3 share the neighborhood {1}
        assert_eq!(twin_classes(&path(3).unwrap()), vec![vec![0, 2], vec![1]]);
        assert_eq!(
            twin_classes(&path(4).unwrap()),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        // C4: opposite corners are false twins
        assert_eq!(twin_classes(&cycle(4).unwrap()), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn diameters() {
        for k in 2..=10 {
            assert_eq!(diameter(&andrasfai(k).unwrap()).unwrap(), Some(2));
        }
        for k in 3..=10 {
            assert_eq!(diameter(&complement(&andrasfai(k).unwrap())).unwrap(), Some(2));
        }
        assert_eq!(diameter(&complete(6).unwrap()).unwrap(), Some(1));
        assert_eq!(diameter(&complete(1).unwrap()).unwrap(), Some(0));
    }

    #[test]
    fn diameter_two_rule_matches_on_c5() {
        let dm = distance_matrix(&cycle(5).unwrap()).unwrap();
        for w in [vec![0], vec![0, 1], vec![0, 2], vec![]] {
            assert_eq!(
                resolves_by_diameter_two_rule(&dm, &w).unwrap(),
                resolving_certificate(&dm, &w).unwrap().is_resolving()
            );
        }
        let dm = distance_matrix(&path(4).unwrap()).unwrap();
        assert!(resolves_by_diameter_two_rule(&dm, &[0]).is_err());
    }

    #[test]
    fn csv_export() {
        let mut buf = Vec::new();
        distance_matrix(&path(3).unwrap()).unwrap().write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "0,1,2\n1,0,1\n2,1,0\n");
        let mut buf = Vec::new();
        distance_matrix(&complement(&path(2).unwrap()))
            .unwrap()
            .write_csv(&mut buf)
            .unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "0,inf\ninf,0\n");
    }

    #[test]
    fn product_distance_is_additive() {
        let g = andrasfai(3).unwrap();
        let dg = distance_matrix(&g).unwrap();
        let p = cartesian_product(&g, &path(3).unwrap());
        let dp = distance_matrix(&p).unwrap();
        for a in 0..p.n() {
            for b in 0..p.n() {
                let (i, t, j, s) = (a % 8, a / 8, b % 8, b / 8);
                assert_eq!(dp.get(a, b), dg.get(i, j) + t.abs_diff(s) as u8);
            }
        }
    }
}
