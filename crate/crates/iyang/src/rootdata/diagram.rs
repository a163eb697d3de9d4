//! Quasi-split Satake diagrams of ADE type.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The Dynkin family of a simply-laced diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinKind {
    /// Type `A_n`, `n >= 1`.
    A,
    /// Type `D_n`, `n >= 4`.
    D,
    /// Type `E_n`, `n` in `{6, 7, 8}`.
    E,
}

impl fmt::Display for DynkinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DynkinKind::A => "A",
            DynkinKind::D => "D",
            DynkinKind::E => "E",
        };
        f.write_str(s)
    }
}

/// Which part of `I = I_1 ⊔ I_0 ⊔ I_{-1}` a node lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeClass {
    /// Chosen representative of a two-element `tau`-orbit.
    One,
    /// A `tau`-fixed node.
    Zero,
    /// The partner `tau(i)` of a node `i` in `I_1`.
    MinusOne,
}

/// The two colours of the bipartite split of `I_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    /// Orthogonal colour `⊕`.
    Plus,
    /// Symplectic colour `⊖`.
    Minus,
}

impl Sign {
    /// The opposite colour.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `"+"` or `"-"`.
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

/// Cartan matrix of a simply-laced Dynkin diagram with Bourbaki numbering.
pub fn cartan_matrix(kind: DynkinKind, rank: usize) -> Result<Vec<Vec<i64>>> {
    let edges = dynkin_edges(kind, rank)?;
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    Ok(c)
}

/// Edges `(a, b)` with `a < b`, zero-based, of the Dynkin graph.
fn dynkin_edges(kind: DynkinKind, rank: usize) -> Result<Vec<(usize, usize)>> {
    let bad = || Error::UnsupportedDiagram(format!("{}{}", kind, rank));
    match kind {
        DynkinKind::A => {
            if rank == 0 {
                return Err(bad());
            }
            Ok((1..rank).map(|i| (i - 1, i)).collect())
        }
        DynkinKind::D => {
            if rank < 4 {
                return Err(bad());
            }
            let mut e: Vec<(usize, usize)> = (1..rank - 1).map(|i| (i - 1, i)).collect();
            e.push((rank - 3, rank - 1));
            Ok(e)
        }
        DynkinKind::E => {
            if !(6..=8).contains(&rank) {
                return Err(bad());
            }
            // 1-3-4-5-6-7-8 with 2 attached to 4.
            let mut e = vec![(0, 2), (1, 3)];
            for i in 3..rank {
                e.push((i - 1, i));
            }
            Ok(e)
        }
    }
}

/// A quasi-split Satake diagram with a fixed orientation and bipartite split of `I_0`.
///
/// Nodes are numbered `0..rank` internally; rendered labels are one-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeDiagram {
    kind: DynkinKind,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    tau: Vec<usize>,
    arrows: BTreeSet<(usize, usize)>,
    bipartite: BTreeMap<usize, Sign>,
    classes: Vec<NodeClass>,
}

impl SatakeDiagram {
    /// The split diagram (`tau = id`) with the default orientation and colouring.
    pub fn split(kind: DynkinKind, rank: usize) -> Result<SatakeDiagram> {
        SatakeDiagram::new(kind, rank, &(0..rank).collect::<Vec<_>>(), None, None)
    }

    /// Builds and validates a diagram.
    ///
    /// `tau` is the zero-based involution. When `arrows` is `None` the first
    /// valid orientation in enumeration order is used; when `bipartite` is
    /// `None` the smallest node of every connected component of `I_0` is `⊖`.
    pub fn new(
        kind: DynkinKind,
        rank: usize,
        tau: &[usize],
        arrows: Option<&[(usize, usize)]>,
        bipartite: Option<&BTreeMap<usize, Sign>>,
    ) -> Result<SatakeDiagram> {
        let cartan = cartan_matrix(kind, rank)?;
        if tau.len() != rank || tau.iter().any(|&t| t >= rank) {
            return Err(Error::UnsupportedDiagram("tau has the wrong length or range".into()));
        }
        for i in 0..rank {
            if tau[tau[i]] != i {
                return Err(Error::UnsupportedDiagram(format!(
                    "tau is not an involution at node {}",
                    i + 1
                )));
            }
            for j in 0..rank {
                if cartan[i][j] != cartan[tau[i]][tau[j]] {
                    return Err(Error::UnsupportedDiagram(format!(
                        "tau does not preserve the Cartan matrix at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let classes = choose_classes(&cartan, tau);
        let mut d = SatakeDiagram {
            kind,
            rank,
            cartan,
            tau: tau.to_vec(),
            arrows: BTreeSet::new(),
            bipartite: BTreeMap::new(),
            classes,
        };
        d.arrows = match arrows {
            Some(a) => {
                let set: BTreeSet<(usize, usize)> = a.iter().cloned().collect();
                d.check_orientation(&set)?;
                set
            }
            None => d
                .valid_orientations()
                .into_iter()
                .next()
                .ok_or_else(|| Error::UnsupportedDiagram("no valid orientation".into()))?,
        };
        d.bipartite = match bipartite {
            Some(b) => {
                d.check_bipartite(b)?;
                b.clone()
            }
            None => d.default_bipartite(),
        };
        Ok(d)
    }

    /// Returns a copy with another orientation.
    pub fn with_orientation(&self, arrows: &[(usize, usize)]) -> Result<SatakeDiagram> {
        SatakeDiagram::new(self.kind, self.rank, &self.tau, Some(arrows), Some(&self.bipartite))
    }

    /// Returns a copy with the bipartite colours of `I_0` swapped.
    pub fn with_flipped_bipartite(&self) -> SatakeDiagram {
        let mut d = self.clone();
        for s in d.bipartite.values_mut() {
            *s = s.flip();
        }
        d
    }

    /// The Dynkin family.
    pub fn kind(&self) -> DynkinKind {
        self.kind
    }

    /// Number of nodes.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The Cartan matrix.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Entry `c_{ij}`.
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// The involution.
    pub fn tau(&self, i: usize) -> usize {
        self.tau[i]
    }

    /// The involution as a vector.
    pub fn tau_vec(&self) -> &[usize] {
        &self.tau
    }

    /// True when `tau` is the identity.
    pub fn is_split(&self) -> bool {
        (0..self.rank).all(|i| self.tau[i] == i)
    }

    /// Class of node `i`.
    pub fn class(&self, i: usize) -> NodeClass {
        self.classes[i]
    }

    /// Nodes of the given class in increasing order.
    pub fn nodes_of(&self, class: NodeClass) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.classes[i] == class).collect()
    }

    /// The nodes of `I_1 ⊔ I_0`, which index the independent variables.
    pub fn i_iota(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| self.classes[i] != NodeClass::MinusOne)
            .collect()
    }

    /// Dynkin neighbours of `i`.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.rank)
            .filter(|&j| j != i && self.cartan[i][j] != 0)
            .collect()
    }

    /// True when the orientation has the arrow `from -> to`.
    pub fn arrow(&self, from: usize, to: usize) -> bool {
        self.arrows.contains(&(from, to))
    }

    /// The oriented arrows.
    pub fn arrows(&self) -> &BTreeSet<(usize, usize)> {
        &self.arrows
    }

    /// Nodes `j` with an arrow `j -> i`.
    pub fn into_node(&self, i: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|(_, b)| *b == i)
            .map(|(a, _)| *a)
            .collect()
    }

    /// Nodes `j` with an arrow `i -> j`.
    pub fn out_of(&self, i: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|(a, _)| *a == i)
            .map(|(_, b)| *b)
            .collect()
    }

    /// Bipartite colour of a node of `I_0`.
    pub fn colour(&self, i: usize) -> Option<Sign> {
        self.bipartite.get(&i).copied()
    }

    /// The bipartite colouring of `I_0`.
    pub fn bipartite(&self) -> &BTreeMap<usize, Sign> {
        &self.bipartite
    }

    /// Dynkin edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for a in 0..self.rank {
            for b in a + 1..self.rank {
                if self.cartan[a][b] != 0 {
                    e.push((a, b));
                }
            }
        }
        e
    }

    /// Checks that every Dynkin edge is oriented exactly once and that the
    /// orientation is compatible with `tau`: for an arrow `a -> b` touching a
    /// node outside `I_0`, the arrow `tau(b) -> tau(a)` is present as well.
    pub fn check_orientation(&self, arrows: &BTreeSet<(usize, usize)>) -> Result<()> {
        for &(a, b) in arrows {
            if a >= self.rank || b >= self.rank || a == b || self.cartan[a][b] == 0 {
                return Err(Error::UnsupportedDiagram(format!(
                    "arrow {}->{} is not a Dynkin edge",
                    a + 1,
                    b + 1
                )));
            }
        }
        for (a, b) in self.edges() {
            let n = arrows.contains(&(a, b)) as u8 + arrows.contains(&(b, a)) as u8;
            if n != 1 {
                return Err(Error::UnsupportedDiagram(format!(
                    "edge {}-{} must be oriented exactly once",
                    a + 1,
                    b + 1
                )));
            }
        }
        for &(a, b) in arrows {
            let moved = self.tau[a] != a || self.tau[b] != b;
            if moved && !arrows.contains(&(self.tau[b], self.tau[a])) {
                return Err(Error::UnsupportedDiagram(format!(
                    "orientation not tau-compatible at {}->{}",
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(())
    }

    /// Every orientation accepted by [`SatakeDiagram::check_orientation`], in a fixed order.
    pub fn valid_orientations(&self) -> Vec<BTreeSet<(usize, usize)>> {
        let edges = self.edges();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << edges.len()) {
            let set: BTreeSet<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if mask >> k & 1 == 0 { (a, b) } else { (b, a) })
                .collect();
            if self.check_orientation(&set).is_ok() {
                out.push(set);
            }
        }
        out
    }

    fn check_bipartite(&self, b: &BTreeMap<usize, Sign>) -> Result<()> {
        let i0 = self.nodes_of(NodeClass::Zero);
        if b.keys().cloned().collect::<Vec<_>>() != i0 {
            return Err(Error::UnsupportedDiagram(
                "bipartite colouring must cover exactly I_0".into(),
            ));
        }
        for (x, y) in self.edges() {
            if let (Some(s), Some(t)) = (b.get(&x), b.get(&y)) {
                if s == t {
                    return Err(Error::UnsupportedDiagram(format!(
                        "adjacent nodes {} and {} share a colour",
                        x + 1,
                        y + 1
                    )));
                }
            }
        }
        Ok(())
    }

    fn default_bipartite(&self) -> BTreeMap<usize, Sign> {
        let i0 = self.nodes_of(NodeClass::Zero);
        let mut colours = BTreeMap::new();
        for &start in &i0 {
            if colours.contains_key(&start) {
                continue;
            }
            colours.insert(start, Sign::Minus);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let cx = colours[&x];
                for y in self.neighbours(x) {
                    if self.classes[y] == NodeClass::Zero && !colours.contains_key(&y) {
                        colours.insert(y, cx.flip());
                        stack.push(y);
                    }
                }
            }
        }
        colours
    }

    /// Short human-readable label such as `A3 tau=(1 3)`.
    pub fn label(&self) -> String {
        let pairs: Vec<String> = (0..self.rank)
            .filter(|&i| self.tau[i] > i)
            .map(|i| format!("({} {})", i + 1, self.tau[i] + 1))
            .collect();
        if pairs.is_empty() {
            format!("{}{} split", self.kind, self.rank)
        } else {
            format!("{}{} tau={}", self.kind, self.rank, pairs.join(""))
        }
    }
}

/// Greedy choice of `I_1`: orbits are scanned in order of their smallest
/// node, preferring at each step a node adjacent to one already chosen.
fn choose_classes(cartan: &[Vec<i64>], tau: &[usize]) -> Vec<NodeClass> {
    let n = tau.len();
    let mut classes = vec![NodeClass::Zero; n];
    let mut orbits: Vec<(usize, usize)> = (0..n).filter(|&i| tau[i] > i).map(|i| (i, tau[i])).collect();
    let mut chosen: Vec<usize> = Vec::new();
    while !orbits.is_empty() {
        let adjacent = |v: usize| chosen.iter().any(|&c| cartan[c][v] != 0);
        let mut pick: Option<(usize, usize)> = None;
        for (k, &(a, b)) in orbits.iter().enumerate() {
            if adjacent(a) {
                pick = Some((k, a));
                break;
            }
            if adjacent(b) {
                pick = Some((k, b));
                break;
            }
        }
        let (k, v) = pick.unwrap_or((0, orbits[0].0));
        let (a, b) = orbits.remove(k);
        let other = if v == a { b } else { a };
        classes[v] = NodeClass::One;
        classes[other] = NodeClass::MinusOne;
        chosen.push(v);
    }
    classes
}

/// Positive roots as simple-root coordinate vectors, ordered by height then lexicographically.
pub fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut all: BTreeSet<Vec<i64>> = (0..n).map(simple).collect();
    let mut layer: Vec<Vec<i64>> = (0..n).map(simple).collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // p = length of the alpha_i-string below beta.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        for r in &next {
            all.insert(r.clone());
        }
        layer = next.into_iter().collect();
    }
    let mut out: Vec<Vec<i64>> = all.into_iter().collect();
    out.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_shapes() {
        assert_eq!(cartan_matrix(DynkinKind::A, 1).unwrap(), vec![vec![2]]);
        assert_eq!(
            cartan_matrix(DynkinKind::A, 3).unwrap(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        let d4 = cartan_matrix(DynkinKind::D, 4).unwrap();
        assert_eq!(d4[1], vec![-1, 2, -1, -1]);
        assert!(cartan_matrix(DynkinKind::E, 5).is_err());
        assert!(cartan_matrix(DynkinKind::D, 3).is_err());
    }

    #[test]
    fn root_counts() {
        let count = |k, n| positive_roots(&cartan_matrix(k, n).unwrap()).len();
        assert_eq!(count(DynkinKind::A, 1), 1);
        assert_eq!(count(DynkinKind::A, 2), 3);
        for n in 1..=8 {
            assert_eq!(count(DynkinKind::A, n), n * (n + 1) / 2);
        }
        for n in 4..=8 {
            assert_eq!(count(DynkinKind::D, n), n * (n - 1));
        }
        assert_eq!(count(DynkinKind::E, 6), 36);
        assert_eq!(count(DynkinKind::E, 7), 63);
        assert_eq!(count(DynkinKind::E, 8), 120);
    }

    #[test]
    fn aiii3_orientations_and_classes() {
        let d = SatakeDiagram::new(DynkinKind::A, 3, &[2, 1, 0], None, None).unwrap();
        assert_eq!(d.class(0), NodeClass::One);
        assert_eq!(d.class(1), NodeClass::Zero);
        assert_eq!(d.class(2), NodeClass::MinusOne);
        let all = d.valid_orientations();
        assert_eq!(all.len(), 2);
        assert!(all.contains(&[(0, 1), (1, 2)].into_iter().collect()));
        assert!(all.contains(&[(1, 0), (2, 1)].into_iter().collect()));
    }

    #[test]
    fn bad_tau_rejected() {
        assert!(SatakeDiagram::new(DynkinKind::A, 3, &[1, 0, 2], None, None).is_err());
        assert!(SatakeDiagram::new(DynkinKind::A, 2, &[1, 1], None, None).is_err());
    }

    #[test]
    fn e6_i1_connected() {
        let d = SatakeDiagram::new(DynkinKind::E, 6, &[5, 1, 4, 3, 2, 0], None, None).unwrap();
        assert_eq!(d.nodes_of(NodeClass::One), vec![0, 2]);
    }
}
