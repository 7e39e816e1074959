use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// One crossing: arc labels counterclockwise starting at the incoming
/// under-strand. A positive crossing has its over-strand running from slot 3
/// to slot 1, a negative one from slot 1 to slot 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub slots: [u32; 4],
    pub sign: i8,
}

impl Crossing {
    /// Whether the arc at `slot` points into the crossing.
    pub fn is_incoming(&self, slot: usize) -> bool {
        match slot {
            0 => true,
            2 => false,
            3 => self.sign > 0,
            _ => self.sign < 0,
        }
    }

    fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.slots;
        if self.sign > 0 {
            Crossing { slots: [d, a, b, c], sign: -1 }
        } else {
            Crossing { slots: [b, c, d, a], sign: 1 }
        }
    }
}

/// One link component as the arcs met along the orientation, starting at its
/// lowest label. `passes[i]` is the crossing and slot where `arcs[i]` ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPath {
    pub arcs: Vec<u32>,
    pub passes: Vec<(usize, usize)>,
}

/// An oriented link diagram in PD form with blackboard framing.
///
/// Components without crossings are kept as a count of free loops; they
/// come after all other components in component order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// Solves for the orientation of every strand from the arc labels alone.
///
/// Each crossing carries two unknowns: whether slot 0 is incoming and whether
/// slot 3 is incoming; every arc must enter one crossing and leave another.
/// With `fixed_under` the slot-0 unknowns are pinned to "incoming".
fn orient(raw: &[[u32; 4]], fixed_under: bool) -> Result<Vec<Crossing>> {
    let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (c, slots) in raw.iter().enumerate() {
        for (s, &l) in slots.iter().enumerate() {
            occ.entry(l).or_default().push((c, s));
        }
    }
    if let Some((&l, _)) = occ.iter().find(|(_, v)| v.len() != 2) {
        return Err(Error::DanglingArc(l));
    }
    // literal for "slot is incoming": (variable, negated)
    let lit = |c: usize, s: usize| -> (usize, bool) {
        match s {
            0 => (2 * c, false),
            2 => (2 * c, true),
            3 => (2 * c + 1, false),
            _ => (2 * c + 1, true),
        }
    };
    let nvars = 2 * raw.len();
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); nvars];
    for (&l, v) in &occ {
        let (v1, n1) = lit(v[0].0, v[0].1);
        let (v2, n2) = lit(v[1].0, v[1].1);
        // exactly one end incoming: val1 ^ val2 = 1 ^ n1 ^ n2
        let parity = !(n1 ^ n2);
        if v1 == v2 {
            if parity {
                return Err(Error::InconsistentOrientation(format!("arc {l} enters or leaves at both ends")));
            }
            continue;
        }
        adj[v1].push((v2, parity));
        adj[v2].push((v1, parity));
    }
    let mut val: Vec<Option<bool>> = vec![None; nvars];
    let mut queue = VecDeque::new();
    let assign = |val: &mut Vec<Option<bool>>, queue: &mut VecDeque<usize>, v: usize, x: bool| -> Result<()> {
        match val[v] {
            Some(y) if y != x => Err(Error::InconsistentOrientation(format!("crossing {} has no consistent orientation", v / 2))),
            Some(_) => Ok(()),
            None => {
                val[v] = Some(x);
                queue.push_back(v);
                Ok(())
            }
        }
    };
    let propagate = |val: &mut Vec<Option<bool>>, queue: &mut VecDeque<usize>| -> Result<()> {
        while let Some(v) = queue.pop_front() {
            let x = val[v].expect("assigned");
            for &(u, parity) in &adj[v] {
                assign(val, queue, u, x ^ parity)?;
            }
        }
        Ok(())
    };
    if fixed_under {
        for c in 0..raw.len() {
            assign(&mut val, &mut queue, 2 * c, true)?;
        }
        propagate(&mut val, &mut queue)?;
    }
    for v in 0..nvars {
        if val[v].is_none() {
            let guess = if fixed_under && v % 2 == 1 {
                // a component passing only over: read the direction off the labels
                let [_, b, _, d] = raw[v / 2];
                b == d + 1 || d > b + 1
            } else {
                true
            };
            assign(&mut val, &mut queue, v, guess)?;
            propagate(&mut val, &mut queue)?;
        }
    }
    Ok(raw
        .iter()
        .enumerate()
        .map(|(c, &slots)| {
            let (under_in, over_in) = (val[2 * c].expect("solved"), val[2 * c + 1].expect("solved"));
            let [a, b, cc, d] = slots;
            if under_in {
                Crossing { slots, sign: if over_in { 1 } else { -1 } }
            } else {
                // rotate so the incoming under-arc comes first; slot 3 becomes old slot 1
                Crossing { slots: [cc, d, a, b], sign: if over_in { -1 } else { 1 } }
            }
        })
        .collect())
}

struct UnionFind(HashMap<u32, u32>);

impl UnionFind {
    fn find(&mut self, x: u32) -> u32 {
        let p = *self.0.get(&x).unwrap_or(&x);
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0.insert(x, r);
        r
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0.insert(ra.max(rb), ra.min(rb));
        }
    }
}

impl LinkDiagram {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        LinkDiagram { crossings: Vec::new(), free_loops: 1 }
    }

    /// `k` disjoint crossingless circles.
    pub fn unlink(k: usize) -> Self {
        LinkDiagram { crossings: Vec::new(), free_loops: k }
    }

    /// Builds a diagram from PD crossings whose slot 0 is the incoming
    /// under-arc; over-strand directions are inferred.
    pub fn from_pd(crossings: &[[u32; 4]], free_loops: usize) -> Result<Self> {
        if crossings.iter().flatten().any(|&l| l == 0) {
            return Err(Error::MalformedPd("arc labels must be positive".into()));
        }
        let oriented = orient(crossings, true)?;
        Ok(LinkDiagram { crossings: oriented, free_loops }.canonical())
    }

    /// Parses PD text: one `X[a,b,c,d]` per line, `Loop[a]` for a component
    /// without crossings, `#` comments. Empty input is the unknot.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        let mut loops = BTreeSet::new();
        let mut any = false;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim().trim_end_matches([',', ';']).trim();
            if line.is_empty() {
                continue;
            }
            any = true;
            let bad = |msg: &str| Error::MalformedPd(format!("line {}: {msg}: {line:?}", lineno + 1));
            let (head, rest) = line.split_once('[').ok_or_else(|| bad("expected X[...] or Loop[...]"))?;
            let body = rest.strip_suffix(']').ok_or_else(|| bad("missing closing bracket"))?;
            let labels: Vec<u32> = body
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad("arc labels must be positive integers")))
                .collect::<Result<_>>()?;
            if labels.contains(&0) {
                return Err(bad("arc labels must be positive integers"));
            }
            match (head.trim(), labels.len()) {
                ("X", 4) => raw.push([labels[0], labels[1], labels[2], labels[3]]),
                ("Loop", 1) => {
                    if !loops.insert(labels[0]) {
                        return Err(Error::DanglingArc(labels[0]));
                    }
                }
                ("X", _) => return Err(bad("a crossing needs four arc labels")),
                ("Loop", _) => return Err(bad("a loop needs one arc label")),
                _ => return Err(bad("expected X[...] or Loop[...]")),
            }
        }
        if !any {
            return Ok(Self::unknot());
        }
        if let Some(&l) = loops.iter().find(|l| raw.iter().flatten().any(|x| x == *l)) {
            return Err(Error::DanglingArc(l));
        }
        Self::from_pd(&raw, loops.len())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Arc label -> the crossing and slot where the arc ends.
    fn heads(&self) -> HashMap<u32, (usize, usize)> {
        let mut h = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                if c.is_incoming(s) {
                    h.insert(c.slots[s], (i, s));
                }
            }
        }
        h
    }

    /// Components that meet a crossing, ordered by lowest arc label.
    pub fn paths(&self) -> Vec<ComponentPath> {
        let heads = self.heads();
        let mut labels: Vec<u32> = heads.keys().copied().collect();
        labels.sort_unstable();
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for &start in &labels {
            if seen.contains_key(&start) {
                continue;
            }
            let mut path = ComponentPath { arcs: Vec::new(), passes: Vec::new() };
            let mut l = start;
            loop {
                seen.insert(l, ());
                let (c, s) = heads[&l];
                path.arcs.push(l);
                path.passes.push((c, s));
                l = self.crossings[c].slots[(s + 2) % 4];
                if l == start {
                    break;
                }
            }
            out.push(path);
        }
        out
    }

    /// Number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        self.paths().len() + self.free_loops
    }

    fn component_of(&self, paths: &[ComponentPath]) -> HashMap<u32, usize> {
        paths.iter().enumerate().flat_map(|(i, p)| p.arcs.iter().map(move |&l| (l, i))).collect()
    }

    /// Writhe of each component counting only its self-crossings.
    pub fn self_writhes(&self) -> Vec<i64> {
        let paths = self.paths();
        let comp = self.component_of(&paths);
        let mut w = vec![0i64; paths.len() + self.free_loops];
        for c in &self.crossings {
            let (u, o) = (comp[&c.slots[0]], comp[&c.slots[1]]);
            if u == o {
                w[u] += c.sign as i64;
            }
        }
        w
    }

    /// Renumbers arcs consecutively along the components, taken in `order`,
    /// each starting `offsets[i]` arcs after its lowest label.
    pub fn relabel(&self, order: &[usize], offsets: &[usize]) -> LinkDiagram {
        let paths = self.paths();
        assert_eq!(order.len(), paths.len(), "one entry per component");
        let mut map = HashMap::new();
        let mut next = 1u32;
        for &ci in order {
            let arcs = &paths[ci].arcs;
            let off = offsets.get(ci).copied().unwrap_or(0) % arcs.len();
            for k in 0..arcs.len() {
                map.insert(arcs[(off + k) % arcs.len()], next);
                next += 1;
            }
        }
        let mut crossings: Vec<Crossing> =
            self.crossings.iter().map(|c| Crossing { slots: c.slots.map(|l| map[&l]), sign: c.sign }).collect();
        crossings.sort_unstable();
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    /// Labels `1..=2n` along the components in their current order, starting
    /// at each component's lowest label; crossings sorted.
    pub fn canonical(&self) -> LinkDiagram {
        let n = self.paths().len();
        self.relabel(&(0..n).collect::<Vec<_>>(), &vec![0; n])
    }

    /// Text that is equal for equal canonical diagrams, signs included.
    pub fn key(&self) -> String {
        let c = self.canonical();
        let mut s = format!("L{}", c.free_loops);
        for x in &c.crossings {
            s.push_str(&format!(
                "|{},{},{},{}{}",
                x.slots[0],
                x.slots[1],
                x.slots[2],
                x.slots[3],
                if x.sign > 0 { '+' } else { '-' }
            ));
        }
        s
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.crossings.len() {
            Ok(())
        } else {
            Err(Error::MissingCrossing(i))
        }
    }

    /// Exchanges over and under at crossing `i`.
    pub fn switch_crossing(&self, i: usize) -> Result<LinkDiagram> {
        self.check(i)?;
        let mut k = self.clone();
        k.crossings[i] = k.crossings[i].switched();
        Ok(k.canonical())
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self.crossings.iter().map(Crossing::switched).collect();
        LinkDiagram { crossings, free_loops: self.free_loops }.canonical()
    }

    fn resolve(&self, i: usize, pairs: [(u32, u32); 2], reorient: bool) -> Result<LinkDiagram> {
        let mut uf = UnionFind(HashMap::new());
        for (a, b) in pairs {
            uf.union(a, b);
        }
        let rest: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| Crossing { slots: c.slots.map(|l| uf.find(l)), sign: c.sign })
            .collect();
        let used: BTreeSet<u32> = rest.iter().flat_map(|c| c.slots).collect();
        let roots: BTreeSet<u32> = self.crossings[i].slots.iter().map(|&l| uf.find(l)).collect();
        let new_loops = roots.iter().filter(|r| !used.contains(r)).count();
        let crossings = if reorient { orient(&rest.iter().map(|c| c.slots).collect::<Vec<_>>(), false)? } else { rest };
        Ok(LinkDiagram { crossings, free_loops: self.free_loops + new_loops }.canonical())
    }

    /// The smoothing at crossing `i` that respects the orientation.
    pub fn smooth_oriented(&self, i: usize) -> Result<LinkDiagram> {
        self.check(i)?;
        let c = self.crossings[i];
        let [a, b, cc, d] = c.slots;
        let pairs = if c.sign > 0 { [(a, b), (d, cc)] } else { [(a, d), (b, cc)] };
        self.resolve(i, pairs, false)
    }

    /// The other smoothing at crossing `i`, reoriented afterwards.
    pub fn smooth_unoriented(&self, i: usize) -> Result<LinkDiagram> {
        self.check(i)?;
        let c = self.crossings[i];
        let [a, b, cc, d] = c.slots;
        let pairs = if c.sign > 0 { [(a, d), (b, cc)] } else { [(a, b), (cc, d)] };
        self.resolve(i, pairs, true).map_err(|e| match e {
            Error::InconsistentOrientation(m) => Error::Inconsistent(format!("reorientation failed: {m}")),
            e => e,
        })
    }

    /// Component `comp` alone: crossings with other components are erased.
    pub fn extract_component(&self, comp: usize) -> Result<LinkDiagram> {
        let paths = self.paths();
        if comp >= paths.len() + self.free_loops {
            return Err(Error::InvalidComponent(comp));
        }
        if comp >= paths.len() {
            return Ok(Self::unknot());
        }
        let of = self.component_of(&paths);
        let mut uf = UnionFind(HashMap::new());
        let mut kept = Vec::new();
        for c in &self.crossings {
            let [a, b, cc, d] = c.slots;
            match (of[&a] == comp, of[&b] == comp) {
                (true, true) => kept.push(*c),
                (true, false) => uf.union(a, cc),
                (false, true) => uf.union(b, d),
                (false, false) => {}
            }
        }
        if kept.is_empty() {
            return Ok(Self::unknot());
        }
        let crossings = kept.into_iter().map(|c| Crossing { slots: c.slots.map(|l| uf.find(l)), sign: c.sign }).collect();
        Ok(LinkDiagram { crossings, free_loops: 0 }.canonical())
    }

    /// Split union: `other` drawn beside `self`.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let off = self.crossings.iter().flat_map(|c| c.slots).max().unwrap_or(0);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing { slots: c.slots.map(|l| l + off), sign: c.sign }));
        LinkDiagram { crossings, free_loops: self.free_loops + other.free_loops }.canonical()
    }

    /// Connected sum of two knot diagrams, joined at their first arcs.
    pub fn connected_sum_knots(&self, other: &LinkDiagram) -> Result<LinkDiagram> {
        for k in [self, other] {
            let c = k.component_count();
            if c != 1 {
                return Err(Error::NotAKnot(c));
            }
        }
        if self.crossings.is_empty() {
            return Ok(other.canonical());
        }
        if other.crossings.is_empty() {
            return Ok(self.canonical());
        }
        let k1 = self.canonical();
        let k2 = other.canonical();
        let off = 2 * k1.crossings.len() as u32;
        let mut k2s: Vec<Crossing> =
            k2.crossings.iter().map(|c| Crossing { slots: c.slots.map(|l| l + off), sign: c.sign }).collect();
        let (l1, l2) = (1u32, off + 1);
        let mut k1s = k1.crossings.clone();
        let (c1, s1) = k1.heads()[&l1];
        k1s[c1].slots[s1] = l2;
        let (c2, s2) = k2.heads()[&1];
        k2s[c2].slots[s2] = l1;
        k1s.extend(k2s);
        Ok(LinkDiagram { crossings: k1s, free_loops: 0 }.canonical())
    }

    /// First crossing met on its under-strand when the components are walked
    /// in order from their basepoints, if any.
    pub fn first_ascending_crossing(&self) -> Option<usize> {
        let mut seen = vec![false; self.crossings.len()];
        for p in self.paths() {
            for &(c, s) in &p.passes {
                if !seen[c] {
                    seen[c] = true;
                    if s == 0 {
                        return Some(c);
                    }
                }
            }
        }
        None
    }

    /// Adds a kink of the given sign on arc `arc`.
    /// A crossingless diagram takes the kink on one of its loops; `arc` is then ignored.
    pub fn add_kink(&self, arc: u32, sign: i8) -> Result<LinkDiagram> {
        let kink_sign = if sign > 0 { 1 } else { -1 };
        if self.crossings.is_empty() && self.free_loops > 0 {
            let slots = if sign > 0 { [1, 1, 2, 2] } else { [1, 2, 2, 1] };
            return Ok(
                LinkDiagram { crossings: vec![Crossing { slots, sign: kink_sign }], free_loops: self.free_loops - 1 }.canonical()
            );
        }
        let heads = self.heads();
        let &(c, s) = heads.get(&arc).ok_or(Error::DanglingArc(arc))?;
        let top = self.crossings.iter().flat_map(|x| x.slots).max().unwrap_or(0);
        let (p, q) = (top + 1, top + 2);
        let mut crossings = self.crossings.clone();
        crossings[c].slots[s] = p;
        let kink = if sign > 0 { [arc, p, q, q] } else { [arc, q, q, p] };
        crossings.push(Crossing { slots: kink, sign: kink_sign });
        Ok(LinkDiagram { crossings, free_loops: self.free_loops }.canonical())
    }

    /// Faces of the projection, each as the cyclic list of (crossing, slot)
    /// darts met while walking its boundary.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let mut other = HashMap::new();
        let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                occ.entry(c.slots[s]).or_default().push((i, s));
            }
        }
        for v in occ.values() {
            other.insert(v[0], v[1]);
            other.insert(v[1], v[0]);
        }
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for i in 0..self.crossings.len() {
            for s in 0..4 {
                if seen.contains(&(i, s)) {
                    continue;
                }
                let mut face = Vec::new();
                let mut dart = (i, s);
                while seen.insert(dart) {
                    face.push(dart);
                    let (j, t) = other[&dart];
                    dart = (j, (t + 1) % 4);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Euler-characteristic test that the PD data describes a planar projection.
    pub fn is_planar(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return true;
        }
        // faces are traced per connected piece; a planar piece with m crossings has m + 2
        self.faces().len() == n + 2 * self.shadow_pieces()
    }

    fn shadow_pieces(&self) -> usize {
        let mut uf = UnionFind(HashMap::new());
        for c in &self.crossings {
            for s in 1..4 {
                uf.union(c.slots[0], c.slots[s]);
            }
        }
        let labels: BTreeSet<u32> = self.crossings.iter().flat_map(|c| c.slots).collect();
        labels.into_iter().map(|l| uf.find(l)).collect::<BTreeSet<_>>().len()
    }

    /// Pushes one edge of a face over another, creating a bigon (a second
    /// Reidemeister move). `face` indexes [`faces`](Self::faces) and `e1`,
    /// `e2` are distinct positions on its boundary; the edge at `e1` goes over.
    pub fn add_bigon(&self, face: usize, e1: usize, e2: usize) -> Result<LinkDiagram> {
        let faces = self.faces();
        let f = faces.get(face).ok_or_else(|| Error::MalformedPd(format!("no face {face}")))?;
        if e1 == e2 || e1 >= f.len() || e2 >= f.len() {
            return Err(Error::MalformedPd("need two distinct boundary edges".into()));
        }
        let mut other = HashMap::new();
        {
            let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
            for (i, c) in self.crossings.iter().enumerate() {
                for s in 0..4 {
                    occ.entry(c.slots[s]).or_default().push((i, s));
                }
            }
            for v in occ.values() {
                other.insert(v[0], v[1]);
                other.insert(v[1], v[0]);
            }
        }
        let (d1, d2) = (f[e1], f[e2]);
        let (l1, l2) = (self.crossings[d1.0].slots[d1.1], self.crossings[d2.0].slots[d2.1]);
        if l1 == l2 {
            return Err(Error::MalformedPd("both positions are the same edge".into()));
        }
        let top = self.crossings.iter().flat_map(|x| x.slots).max().unwrap_or(0);
        let (e1b, e1c, e2b, e2c) = (top + 1, top + 2, top + 3, top + 4);
        let mut crossings = self.crossings.clone();
        // each edge is walked from its dart d to the far end; the far ends get the last piece
        let far1 = other[&d1];
        let far2 = other[&d2];
        crossings[far1.0].slots[far1.1] = e1c;
        crossings[far2.0].slots[far2.1] = e2c;
        // with the face on the walking side, edge 1 dips across edge 2 at x, then back at y.
        // counterclockwise neighbourhoods, starting on edge 1's near side:
        let x = [l1, e2c, e1b, e2b];
        let y = [e1c, e2b, e1b, l2];
        let along1 = !self.crossings[d1.0].is_incoming(d1.1);
        let along2 = !self.crossings[d2.0].is_incoming(d2.1);
        let mk = |ring: [u32; 4], under_in_pos: usize, over_in_pos: usize| -> Crossing {
            let slots =
                [ring[under_in_pos], ring[(under_in_pos + 1) % 4], ring[(under_in_pos + 2) % 4], ring[(under_in_pos + 3) % 4]];
            let rel = (over_in_pos + 4 - under_in_pos) % 4;
            Crossing { slots, sign: if rel == 3 { 1 } else { -1 } }
        };
        // edge 2 runs through position 3 then 1 when walked along the face
        let (xu, yu) = if along2 { (3, 3) } else { (1, 1) };
        let (xo, yo) = if along1 { (0, 2) } else { (2, 0) };
        crossings.push(mk(x, xu, xo));
        crossings.push(mk(y, yu, yo));
        Ok(LinkDiagram { crossings, free_loops: self.free_loops }.canonical())
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        let mut next = c.crossings.iter().flat_map(|x| x.slots).max().unwrap_or(0);
        for x in &c.crossings {
            writeln!(f, "X[{},{},{},{}]", x.slots[0], x.slots[1], x.slots[2], x.slots[3])?;
        }
        for _ in 0..c.free_loops {
            next += 1;
            writeln!(f, "Loop[{next}]")?;
        }
        Ok(())
    }
}
