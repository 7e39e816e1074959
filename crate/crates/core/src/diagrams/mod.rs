//! Chord diagrams on an oriented circle.
//!
//! A diagram of degree `n` is a fixed-point-free involution on the `2n`
//! endpoint positions `0..2n`, read counterclockwise. Two diagrams are equal
//! in the algebra only up to rotation of the positions; reflections change the
//! circle orientation and are never applied.

mod fourterm;
mod sum;

use std::collections::BTreeSet;
use std::fmt;

pub use fourterm::{generate_4t, FourTermQuadruple, MAX_4T_DEGREE};
pub use sum::DiagramSum;

use crate::chromatic::WeightedGraph;
use crate::error::{Error, Result};
use crate::par::{self, Execution};

pub const MAX_ENUM_DEGREE: usize = 6;

const WORD_LABELS: &[u8] = b"123456789abcdefghijklmnopqrstuvwxyz";

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    pairing: Vec<usize>,
}

impl ChordDiagram {
    /// The bare circle `S^1`.
    pub fn circle() -> Self {
        ChordDiagram { pairing: Vec::new() }
    }

    pub fn new(pairing: Vec<usize>) -> Result<Self> {
        let m = pairing.len();
        if !m.is_multiple_of(2) {
            return Err(Error::InvalidDiagram(format!("odd number of endpoints ({m})")));
        }
        for (i, &j) in pairing.iter().enumerate() {
            if j >= m || j == i || pairing[j] != i {
                return Err(Error::InvalidDiagram(format!("position {i} is not paired consistently")));
            }
        }
        Ok(ChordDiagram { pairing })
    }

    /// Builds a diagram from a circular sequence of chord labels, each
    /// occurring exactly twice.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Result<Self> {
        let mut first: std::collections::HashMap<T, usize> = std::collections::HashMap::new();
        let mut pairing = vec![usize::MAX; labels.len()];
        for (i, l) in labels.iter().enumerate() {
            match first.remove(l) {
                Some(j) => {
                    pairing[i] = j;
                    pairing[j] = i;
                }
                None => {
                    first.insert(l.clone(), i);
                }
            }
        }
        if !first.is_empty() || pairing.contains(&usize::MAX) {
            return Err(Error::InvalidDiagram("every label must occur exactly twice".into()));
        }
        ChordDiagram::new(pairing)
    }

    /// Parses a double-occurrence word such as `"1212"`; `"o"` is the bare circle.
    pub fn from_word(word: &str) -> Result<Self> {
        let word = word.trim();
        if word == "o" {
            return Ok(Self::circle());
        }
        if word.is_empty() {
            return Err(Error::InvalidDiagram("empty word".into()));
        }
        let mut labels = Vec::new();
        for c in word.chars() {
            if !c.is_ascii_alphanumeric() || c == '0' {
                return Err(Error::InvalidDiagram(format!("invalid chord label {c:?}")));
            }
            labels.push(c.to_ascii_lowercase());
        }
        let mut counts = std::collections::HashMap::new();
        for &c in &labels {
            *counts.entry(c).or_insert(0) += 1;
        }
        if let Some((c, k)) = counts.iter().find(|(_, &k)| k != 2) {
            return Err(Error::InvalidDiagram(format!("label {c:?} occurs {k} times")));
        }
        Self::from_labels(&labels)
    }

    /// Double-occurrence word with first-occurrence relabelling.
    pub fn to_word(&self) -> String {
        if self.pairing.is_empty() {
            return "o".to_string();
        }
        let mut label = vec![0u8; self.pairing.len()];
        let mut next = 0;
        let mut out = String::with_capacity(self.pairing.len());
        for i in 0..self.pairing.len() {
            let j = self.pairing[i];
            if j > i {
                label[i] = WORD_LABELS.get(next).copied().unwrap_or(b'?');
                next += 1;
            } else {
                label[i] = label[j];
            }
            out.push(label[i] as char);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.pairing.len() / 2
    }

    pub fn points(&self) -> usize {
        self.pairing.len()
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn partner(&self, i: usize) -> usize {
        self.pairing[i]
    }

    pub fn is_circle(&self) -> bool {
        self.pairing.is_empty()
    }

    /// Chords as `(a, b)` with `a < b`, ordered by `a`.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.pairing.len()).filter(|&i| self.pairing[i] > i).map(|i| (i, self.pairing[i])).collect()
    }

    /// Whether the endpoints of the two chords alternate around the circle.
    pub fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
        let inside = |x: usize| a.0 < x && x < a.1;
        inside(b.0) != inside(b.1)
    }

    /// Shifts labels so that old position `k` becomes position 0.
    pub fn rotate(&self, k: usize) -> Self {
        let m = self.pairing.len();
        if m == 0 {
            return self.clone();
        }
        let k = k % m;
        let pairing = (0..m).map(|i| (self.pairing[(i + k) % m] + m - k) % m).collect();
        ChordDiagram { pairing }
    }

    /// Lexicographically smallest pairing over all rotations.
    pub fn canonicalize(&self) -> Self {
        (0..self.pairing.len().max(1)).map(|k| self.rotate(k)).min().expect("at least one rotation")
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// One weight-1 vertex per chord (in [`chords`](Self::chords) order),
    /// adjacent when the chords cross.
    pub fn intersection_graph(&self) -> WeightedGraph {
        let chords = self.chords();
        let mut edges = Vec::new();
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if Self::chords_cross(chords[i], chords[j]) {
                    edges.push((i, j));
                }
            }
        }
        WeightedGraph::new(vec![1; chords.len()], &edges).expect("intersection graph is simple")
    }

    /// Whether no two chords cross.
    pub fn is_noncrossing(&self) -> bool {
        let chords = self.chords();
        (0..chords.len()).all(|i| (i + 1..chords.len()).all(|j| !Self::chords_cross(chords[i], chords[j])))
    }

    /// Circular sequence of chord indices (as in [`chords`](Self::chords)).
    pub fn labels(&self) -> Vec<usize> {
        let mut idx = vec![0; self.pairing.len()];
        for (c, (a, b)) in self.chords().into_iter().enumerate() {
            idx[a] = c;
            idx[b] = c;
        }
        idx
    }

    /// The subdiagram on the chords whose index satisfies `keep`, endpoints in
    /// their original circular order.
    pub fn subdiagram(&self, keep: impl Fn(usize) -> bool) -> Self {
        let labels: Vec<usize> = self.labels().into_iter().filter(|&c| keep(c)).collect();
        Self::from_labels(&labels).expect("subset of a valid diagram")
    }

    /// Connected sum: cut `self` at gap `cut1` (just before position `cut1`)
    /// and `other` at `cut2`, then splice the two arcs into one circle.
    pub fn connected_sum(&self, cut1: usize, other: &Self, cut2: usize) -> Result<Self> {
        let gap_ok = |d: &Self, g: usize| g < d.points().max(1);
        if !gap_ok(self, cut1) {
            return Err(Error::InvalidGap { gap: cut1, points: self.points() });
        }
        if !gap_ok(other, cut2) {
            return Err(Error::InvalidGap { gap: cut2, points: other.points() });
        }
        let la = self.rotate(cut1).labels();
        let lb = other.rotate(cut2).labels();
        let off = self.degree();
        let joined: Vec<usize> = la.into_iter().chain(lb.into_iter().map(|c| c + off)).collect();
        Self::from_labels(&joined)
    }

    /// Number of boundary circles when every chord is thickened to an untwisted
    /// band: the cycle count of `i -> partner(i) + 1`.
    pub fn band_circle_count(&self) -> usize {
        let m = self.pairing.len();
        if m == 0 {
            return 1;
        }
        let mut seen = vec![false; m];
        let mut cycles = 0;
        for s in 0..m {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = (self.pairing[i] + 1) % m;
            }
        }
        cycles
    }

    /// All `r^n` assignments of colours `0..r` to the chords, each with the
    /// subdiagrams of the individual colour classes.
    pub fn chord_colorings(&self, r: usize) -> Vec<ChordColoring> {
        assert!(r >= 1, "at least one colour is required");
        let n = self.degree();
        let total = r.checked_pow(n as u32).expect("too many colourings");
        (0..total)
            .map(|mut code| {
                let mut assignment = vec![0; n];
                for slot in assignment.iter_mut() {
                    *slot = code % r;
                    code /= r;
                }
                let parts = (0..r).map(|c| self.subdiagram(|k| assignment[k] == c)).collect();
                ChordColoring { assignment, parts }
            })
            .collect()
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() > WORD_LABELS.len() {
            return write!(f, "{:?}", self.pairing);
        }
        f.write_str(&self.to_word())
    }
}

/// One term of the iterated coproduct: chord `k` gets colour `assignment[k]`
/// and `parts[c]` is the subdiagram of colour `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordColoring {
    pub assignment: Vec<usize>,
    pub parts: Vec<ChordDiagram>,
}

fn involutions(m: usize) -> Vec<Vec<usize>> {
    fn go(p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = p.iter().position(|&x| x == usize::MAX) else {
            out.push(p.clone());
            return;
        };
        for j in i + 1..p.len() {
            if p[j] == usize::MAX {
                p[i] = j;
                p[j] = i;
                go(p, out);
                p[i] = usize::MAX;
                p[j] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; m], &mut out);
    out
}

/// All canonical diagrams of degree `n`, sorted by pairing.
pub fn enumerate_diagrams(n: usize) -> Result<Vec<ChordDiagram>> {
    enumerate_diagrams_with(n, Execution::default())
}

pub fn enumerate_diagrams_with(n: usize, exec: Execution) -> Result<Vec<ChordDiagram>> {
    if n > MAX_ENUM_DEGREE {
        return Err(Error::DegreeTooLarge { degree: n, max: MAX_ENUM_DEGREE });
    }
    let all = involutions(2 * n);
    let canon = par::map(exec, &all, |p| ChordDiagram { pairing: p.clone() }.canonicalize());
    Ok(canon.into_iter().collect::<BTreeSet<_>>().into_iter().collect())
}

/// Every canonical diagram of degree `1..=max_degree` (plus the circle if `include_circle`).
pub fn diagrams_up_to(max_degree: usize, include_circle: bool) -> Result<Vec<ChordDiagram>> {
    let mut out = Vec::new();
    if include_circle {
        out.push(ChordDiagram::circle());
    }
    for n in 1..=max_degree {
        out.extend(enumerate_diagrams(n)?);
    }
    Ok(out)
}
