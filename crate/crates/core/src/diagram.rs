//! Planar knot diagrams and the elementary moves on them.
//!
//! A diagram is a list of 4-valent crossings. Each crossing lists the edges
//! at its four ports in counterclockwise order, and records which opposite
//! pair of ports carries the over-strand. Edges are bare identifiers; every
//! identifier occurs in exactly two port slots.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// Which opposite pair of port slots carries the over-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverPair {
    /// Slots 0 and 2.
    Even,
    /// Slots 1 and 3.
    Odd,
}

impl OverPair {
    pub fn flipped(self) -> Self {
        match self {
            OverPair::Even => OverPair::Odd,
            OverPair::Odd => OverPair::Even,
        }
    }

    fn parity(self) -> usize {
        match self {
            OverPair::Even => 0,
            OverPair::Odd => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    /// Edge identifiers in counterclockwise order.
    pub ports: [u32; 4],
    pub over: OverPair,
}

impl Crossing {
    pub fn new(ports: [u32; 4], over: OverPair) -> Self {
        Self { ports, over }
    }

    /// Whether the strand through `slot` is the over-strand.
    pub fn is_over_slot(&self, slot: usize) -> bool {
        slot % 2 == self.over.parity()
    }
}

/// `(crossing, slot)`.
type Corner = (usize, usize);

/// Index of a crossing in a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingSelector(pub usize);

/// One pass of the strand through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub in_slot: usize,
    pub over: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
}

impl PlanarDiagram {
    /// The crossingless diagram of the unknot.
    pub fn unknot() -> Self {
        Self { crossings: Vec::new() }
    }

    /// Builds a diagram, checking port incidences, connectivity and
    /// planarity. Edge identifiers are renumbered densely.
    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Self> {
        let mut count: HashMap<u32, usize> = HashMap::new();
        for x in &crossings {
            for &e in &x.ports {
                *count.entry(e).or_default() += 1;
            }
        }
        if let Some((e, k)) = count.iter().find(|(_, &k)| k != 2) {
            return Err(Error::InvalidDiagram(format!(
                "edge {e} occurs in {k} port slots"
            )));
        }
        let d = Self { crossings }.relabeled();
        if !d.is_connected() {
            return Err(Error::InvalidDiagram("diagram is split".into()));
        }
        if !d.is_planar() {
            return Err(Error::InvalidDiagram("rotation system is not planar".into()));
        }
        Ok(d)
    }

    /// Same as [`from_crossings`](Self::from_crossings) but without the
    /// planarity check; used by searches that test planarity themselves.
    pub(crate) fn from_crossings_unchecked(crossings: Vec<Crossing>) -> Self {
        Self { crossings }.relabeled()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    fn relabeled(mut self) -> Self {
        let mut map: HashMap<u32, u32> = HashMap::new();
        for x in &mut self.crossings {
            for e in &mut x.ports {
                let next = map.len() as u32;
                *e = *map.entry(*e).or_insert(next);
            }
        }
        self
    }

    /// For every (crossing, slot), the (crossing, slot) at the other end of
    /// its edge.
    pub(crate) fn partners(&self) -> Vec<[(usize, usize); 4]> {
        let mut first: HashMap<u32, (usize, usize)> = HashMap::new();
        let mut out = vec![[(usize::MAX, 0); 4]; self.crossings.len()];
        for (c, x) in self.crossings.iter().enumerate() {
            for (s, &e) in x.ports.iter().enumerate() {
                if let Some((c2, s2)) = first.remove(&e) {
                    out[c][s] = (c2, s2);
                    out[c2][s2] = (c, s);
                } else {
                    first.insert(e, (c, s));
                }
            }
        }
        out
    }

    fn is_connected(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return true;
        }
        let partners = self.partners();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for &(c2, _) in &partners[c] {
                if !seen[c2] {
                    seen[c2] = true;
                    stack.push(c2);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Faces as cycles of corners; corner `(c, i)` is the wedge at crossing
    /// `c` between slots `i` and `i + 1`.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let partners = self.partners();
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for i in 0..4 {
                if seen[c][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut cc, mut ci) = (c, i);
                while !seen[cc][ci] {
                    seen[cc][ci] = true;
                    face.push((cc, ci));
                    let (c2, s2) = partners[cc][(ci + 1) % 4];
                    cc = c2;
                    ci = s2;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Face index of every corner.
    pub(crate) fn corner_faces(&self) -> (Vec<[usize; 4]>, usize) {
        let faces = self.faces();
        let mut out = vec![[0; 4]; self.crossings.len()];
        for (f, face) in faces.iter().enumerate() {
            for &(c, i) in face {
                out[c][i] = f;
            }
        }
        (out, faces.len())
    }

    /// Euler characteristic check for a connected 4-valent map.
    pub fn is_planar(&self) -> bool {
        let n = self.crossings.len();
        n == 0 || self.faces().len() == n + 2
    }

    /// Closed strands, each as its sequence of passages. The first strand
    /// starts by entering crossing 0 through slot 0.
    pub fn strands(&self) -> Vec<Vec<Passage>> {
        let n = self.crossings.len();
        let partners = self.partners();
        let mut used = vec![[false; 2]; n];
        let mut out = Vec::new();
        for c0 in 0..n {
            for p in 0..2 {
                if used[c0][p] {
                    continue;
                }
                let mut strand = Vec::new();
                let (mut c, mut s) = (c0, p);
                while !used[c][s % 2] {
                    used[c][s % 2] = true;
                    strand.push(Passage {
                        crossing: c,
                        in_slot: s,
                        over: self.crossings[c].is_over_slot(s),
                    });
                    let (c2, s2) = partners[c][(s + 2) % 4];
                    c = c2;
                    s = s2;
                }
                out.push(strand);
            }
        }
        out
    }

    /// Number of closed strands; the crossingless diagram counts as one.
    pub fn component_count(&self) -> usize {
        if self.crossings.is_empty() {
            1
        } else {
            self.strands().len()
        }
    }

    /// The single strand of a knot diagram, oriented from the basepoint.
    pub fn knot_passages(&self) -> Result<Vec<Passage>> {
        if self.crossings.is_empty() {
            return Ok(Vec::new());
        }
        let mut strands = self.strands();
        if strands.len() != 1 {
            return Err(Error::MultiComponent(strands.len()));
        }
        Ok(strands.pop().unwrap())
    }

    pub fn require_knot(&self) -> Result<()> {
        match self.component_count() {
            1 => Ok(()),
            k => Err(Error::MultiComponent(k)),
        }
    }

    /// Crossing signs (+1 / -1) under the strand orientation.
    pub fn crossing_signs(&self) -> Result<Vec<i8>> {
        let passages = self.knot_passages()?;
        let mut under_in = vec![0; self.crossings.len()];
        let mut over_in = vec![0; self.crossings.len()];
        for p in passages {
            if p.over {
                over_in[p.crossing] = p.in_slot;
            } else {
                under_in[p.crossing] = p.in_slot;
            }
        }
        Ok(under_in
            .iter()
            .zip(&over_in)
            .map(|(&u, &o)| if o == (u + 3) % 4 { 1 } else { -1 })
            .collect())
    }

    pub fn writhe(&self) -> Result<i64> {
        Ok(self.crossing_signs()?.iter().map(|&s| s as i64).sum())
    }

    /// Over and under passages alternate along every strand.
    pub fn is_alternating_diagram(&self) -> bool {
        self.strands().iter().all(|strand| {
            (0..strand.len()).all(|i| strand[i].over != strand[(i + 1) % strand.len()].over)
        })
    }

    pub fn crossing_change(&self, sel: CrossingSelector) -> Result<Self> {
        self.crossing_changes(&[sel.0])
    }

    /// Changes every listed crossing at once.
    pub fn crossing_changes(&self, indices: &[usize]) -> Result<Self> {
        let mut out = self.clone();
        for &i in indices {
            let n = out.crossings.len();
            let x = out
                .crossings
                .get_mut(i)
                .ok_or(Error::SelectorOutOfRange { index: i, n })?;
            x.over = x.over.flipped();
        }
        Ok(out)
    }

    pub fn mirror(&self) -> Self {
        Self {
            crossings: self
                .crossings
                .iter()
                .map(|x| Crossing::new(x.ports, x.over.flipped()))
                .collect(),
        }
    }

    /// Applies R1 untwists, nugatory-crossing removals and R2 bigon
    /// removals until none applies. Each move removes crossings.
    pub fn reduce(&self) -> Self {
        let mut d = self.clone();
        while let Some(next) = d.reduce_step() {
            debug_assert!(next.crossings.len() < d.crossings.len());
            d = next;
        }
        d
    }

    fn reduce_step(&self) -> Option<Self> {
        if self.crossings.is_empty() {
            return None;
        }
        if let Some(d) = self.try_r1() {
            return Some(d);
        }
        let (corner_face, _) = self.corner_faces();
        if let Some(d) = self.try_nugatory(&corner_face) {
            return Some(d);
        }
        self.try_r2()
    }

    fn try_r1(&self) -> Option<Self> {
        for (c, x) in self.crossings.iter().enumerate() {
            for i in 0..4 {
                if x.ports[i] == x.ports[(i + 1) % 4] {
                    let a = x.ports[(i + 2) % 4];
                    let b = x.ports[(i + 3) % 4];
                    return Some(self.rebuild(&[c], &[(a, b)], &[]));
                }
            }
        }
        None
    }

    fn try_nugatory(&self, corner_face: &[[usize; 4]]) -> Option<Self> {
        for (c, x) in self.crossings.iter().enumerate() {
            for i in 0..2 {
                if corner_face[c][i] != corner_face[c][i + 2] {
                    continue;
                }
                // The curve through the shared face and the crossing cuts the
                // diagram; the side holding slots i+1 and i+2 is turned over.
                let side = self.side_of(c, (i + 1) % 4);
                let joins = [(x.ports[0], x.ports[2]), (x.ports[1], x.ports[3])];
                return Some(self.rebuild(&[c], &joins, &side));
            }
        }
        None
    }

    /// Crossings reachable from the edge at `(c, slot)` without passing
    /// through `c`.
    fn side_of(&self, c: usize, slot: usize) -> Vec<usize> {
        let partners = self.partners();
        let mut seen = vec![false; self.crossings.len()];
        seen[c] = true;
        let start = partners[c][slot].0;
        let mut out = Vec::new();
        if start == c {
            return out;
        }
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            out.push(v);
            for &(w, _) in &partners[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out
    }

    fn try_r2(&self) -> Option<Self> {
        let partners = self.partners();
        for face in &self.faces() {
            if face.len() != 2 {
                continue;
            }
            let (c1, i) = face[0];
            let (c2, _) = face[1];
            if c1 == c2 {
                continue;
            }
            let x1 = &self.crossings[c1];
            let x2 = &self.crossings[c2];
            let (sa, sb) = (i, (i + 1) % 4);
            let (pa, pb) = (partners[c1][sa], partners[c1][sb]);
            debug_assert!(pa.0 == c2 && pb.0 == c2);
            if x1.is_over_slot(sa) != x2.is_over_slot(pa.1) {
                continue;
            }
            let joins = [
                (x1.ports[(sa + 2) % 4], x2.ports[(pa.1 + 2) % 4]),
                (x1.ports[(sb + 2) % 4], x2.ports[(pb.1 + 2) % 4]),
            ];
            return Some(self.rebuild(&[c1, c2], &joins, &[]));
        }
        None
    }

    /// Removes crossings, merges edge pairs, and turns the `flipped`
    /// crossings over (reverse port order and swap over/under).
    fn rebuild(&self, removed: &[usize], joins: &[(u32, u32)], flipped: &[usize]) -> Self {
        let mut parent: HashMap<u32, u32> = HashMap::new();
        fn find(parent: &mut HashMap<u32, u32>, e: u32) -> u32 {
            let p = *parent.get(&e).unwrap_or(&e);
            if p == e {
                return e;
            }
            let r = find(parent, p);
            parent.insert(e, r);
            r
        }
        for &(a, b) in joins {
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                parent.insert(rb, ra);
            }
        }
        let mut crossings = Vec::with_capacity(self.crossings.len() - removed.len());
        for (c, x) in self.crossings.iter().enumerate() {
            if removed.contains(&c) {
                continue;
            }
            let mut ports = x.ports.map(|e| find(&mut parent, e));
            let mut over = x.over;
            if flipped.contains(&c) {
                ports.swap(1, 3);
                over = over.flipped();
            }
            crossings.push(Crossing::new(ports, over));
        }
        Self { crossings }.relabeled()
    }

    /// Every diagram one Reidemeister III move away, in a fixed order.
    pub fn r3_moves(&self) -> Vec<Self> {
        let partners = self.partners();
        let mut out = Vec::new();
        for face in self.faces() {
            let [(a, i), (b, j), (c, k)] = face[..] else { continue };
            if a == b || b == c || a == c {
                continue;
            }
            let corners = [(a, i), (b, j), (c, k)];
            // Side m runs from slot i_m + 1 at v_m to slot i_{m+1} at v_{m+1}.
            let sides: Vec<((usize, usize), (usize, usize))> = (0..3)
                .map(|m| {
                    let (v, s) = corners[m];
                    let start = (v, (s + 1) % 4);
                    debug_assert_eq!(partners[v][start.1], corners[(m + 1) % 3]);
                    (start, corners[(m + 1) % 3])
                })
                .collect();
            // Some side must lie entirely above or below the other two.
            let movable = sides.iter().any(|&((v, p), (w, q))| {
                self.crossings[v].is_over_slot(p) == self.crossings[w].is_over_slot(q)
            });
            if movable {
                out.push(self.apply_r3(&sides));
            }
        }
        out
    }

    /// Each side of the triangle is pushed across the opposite crossing: at
    /// every crossing the triangle moves to the opposite quadrant.
    fn apply_r3(&self, sides: &[(Corner, Corner)]) -> Self {
        let mut crossings = self.crossings.clone();
        let first = self.crossings.iter().flat_map(|x| x.ports).max().unwrap_or(0) + 1;
        for (fresh, &((v, p), (w, q))) in (first..).zip(sides) {
            crossings[v].ports[p] = self.crossings[w].ports[(q + 2) % 4];
            crossings[w].ports[q] = self.crossings[v].ports[(p + 2) % 4];
            crossings[v].ports[(p + 2) % 4] = fresh;
            crossings[w].ports[(q + 2) % 4] = fresh;
        }
        Self { crossings }.relabeled()
    }

    /// [`reduce`](Self::reduce), then a breadth-first search through
    /// Reidemeister III moves for a diagram that reduces further, repeated
    /// while one is found. At most `budget` diagrams are visited per round.
    /// Deterministic.
    pub fn simplify(&self, budget: usize) -> Self {
        let mut best = self.reduce();
        'round: loop {
            let n = best.crossing_count();
            let mut seen: HashSet<Vec<(u32, [u32; 4], OverPair)>> = HashSet::new();
            seen.insert(best.shape_key());
            let mut queue = VecDeque::from([best.clone()]);
            while let Some(d) = queue.pop_front() {
                for next in d.r3_moves() {
                    let r = next.reduce();
                    if r.crossing_count() < n {
                        best = r;
                        continue 'round;
                    }
                    if seen.len() < budget && seen.insert(next.shape_key()) {
                        queue.push_back(next);
                    }
                }
            }
            return best;
        }
    }

    /// Labeling-independent key: crossings and edges renumbered in order of
    /// a traversal from the least starting port.
    fn shape_key(&self) -> Vec<(u32, [u32; 4], OverPair)> {
        let partners = self.partners();
        let n = self.crossings.len();
        let mut best: Option<Vec<(u32, [u32; 4], OverPair)>> = None;
        for c0 in 0..n {
            for r0 in 0..4 {
                // Breadth-first numbering; each crossing is rotated so the
                // port it was reached through comes first.
                let mut order = vec![usize::MAX; n];
                let mut rot = vec![0; n];
                let mut queue = VecDeque::from([(c0, r0)]);
                order[c0] = 0;
                rot[c0] = r0;
                let mut next_id = 1;
                let mut seq = Vec::with_capacity(n);
                while let Some((c, r)) = queue.pop_front() {
                    let mut ids = [0u32; 4];
                    for k in 0..4 {
                        let (c2, s2) = partners[c][(r + k) % 4];
                        if order[c2] == usize::MAX {
                            order[c2] = next_id;
                            rot[c2] = s2;
                            next_id += 1;
                            queue.push_back((c2, s2));
                        }
                        ids[k] = (order[c2] * 4 + (s2 + 4 - rot[c2]) % 4) as u32;
                    }
                    let over = if self.crossings[c].is_over_slot(r) { OverPair::Even } else { OverPair::Odd };
                    seq.push((order[c] as u32, ids, over));
                }
                if best.as_ref().is_none_or(|b| seq < *b) {
                    best = Some(seq);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// Splits along a connected-sum cut into the two summand diagrams, if
    /// the diagram has one.
    pub fn connected_sum_split(&self) -> Option<(Self, Self)> {
        let (e1, e2) = self.two_edge_cut()?;
        let partners = self.partners();
        let n = self.crossings.len();
        let start = self.crossings.iter().position(|x| x.ports.contains(&e1))?;
        let mut side = vec![false; n];
        side[start] = true;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for (s, &(c2, _)) in partners[c].iter().enumerate() {
                let e = self.crossings[c].ports[s];
                if e != e1 && e != e2 && !side[c2] {
                    side[c2] = true;
                    stack.push(c2);
                }
            }
        }
        let factor = |keep: bool| {
            let crossings: Vec<Crossing> = (0..n)
                .filter(|&c| side[c] == keep)
                .map(|c| {
                    let x = self.crossings[c];
                    Crossing::new(x.ports.map(|e| if e == e2 { e1 } else { e }), x.over)
                })
                .collect();
            Self { crossings }.relabeled()
        };
        let (a, b) = (factor(true), factor(false));
        if a.crossings.is_empty() || b.crossings.is_empty() {
            return None;
        }
        Some((a, b))
    }

    /// A pair of distinct edges bordering the same two distinct faces, i.e.
    /// a visible connected-sum decomposition.
    pub fn has_two_edge_cut(&self) -> bool {
        self.two_edge_cut().is_some()
    }

    fn two_edge_cut(&self) -> Option<(u32, u32)> {
        let (corner_face, _) = self.corner_faces();
        let mut seen: HashMap<(usize, usize), u32> = HashMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                let f1 = corner_face[c][(s + 3) % 4];
                let f2 = corner_face[c][s];
                if f1 == f2 {
                    continue;
                }
                let key = (f1.min(f2), f1.max(f2));
                let e = x.ports[s];
                match seen.get(&key) {
                    Some(&e0) if e0 != e => return Some((e0, e)),
                    _ => {
                        seen.insert(key, e);
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Standard trefoil: three crossings, strand 0..5.
    pub(crate) fn trefoil() -> PlanarDiagram {
        // PD X[1,5,2,4], X[3,1,4,6], X[5,3,6,2] with under-strand in slots 0,2.
        let x = |a, b, c, d| Crossing::new([a, b, c, d], OverPair::Odd);
        PlanarDiagram::from_crossings(vec![x(1, 5, 2, 4), x(3, 1, 4, 6), x(5, 3, 6, 2)]).unwrap()
    }

    fn kink() -> PlanarDiagram {
        PlanarDiagram::from_crossings(vec![Crossing::new([0, 0, 1, 1], OverPair::Even)]).unwrap()
    }

    fn double_kink() -> PlanarDiagram {
        PlanarDiagram::from_crossings(vec![
            Crossing::new([0, 0, 1, 2], OverPair::Even),
            Crossing::new([1, 3, 3, 2], OverPair::Odd),
        ])
        .unwrap()
    }

    #[test]
    fn rejects_bad_incidence() {
        let e = PlanarDiagram::from_crossings(vec![Crossing::new([0, 1, 2, 3], OverPair::Even)]);
        assert!(matches!(e, Err(Error::InvalidDiagram(_))));
    }

    #[test]
    fn trefoil_basics() {
        let t = trefoil();
        assert!(t.is_planar());
        assert_eq!(t.component_count(), 1);
        assert!(t.is_alternating_diagram());
        assert_eq!(t.writhe().unwrap().abs(), 3);
        assert_eq!(t.faces().len(), 5);
    }

    #[test]
    fn unknot_conventions() {
        let u = PlanarDiagram::unknot();
        assert_eq!(u.component_count(), 1);
        assert_eq!(u.writhe().unwrap(), 0);
        assert!(u.is_alternating_diagram());
        assert_eq!(u.reduce(), u);
    }

    #[test]
    fn crossing_change_is_an_involution() {
        let t = trefoil();
        for c in 0..3 {
            let once = t.crossing_change(CrossingSelector(c)).unwrap();
            assert_ne!(once, t);
            let w = t.writhe().unwrap();
            assert_eq!((once.writhe().unwrap() - w).abs(), 2);
            assert_eq!(once.crossing_change(CrossingSelector(c)).unwrap(), t);
        }
        assert!(matches!(
            t.crossing_change(CrossingSelector(3)),
            Err(Error::SelectorOutOfRange { index: 3, n: 3 })
        ));
    }

    #[test]
    fn mirror_negates_writhe() {
        let t = trefoil();
        assert_eq!(t.mirror().writhe().unwrap(), -t.writhe().unwrap());
        assert_eq!(t.mirror().mirror(), t);
        assert!(t.mirror().is_alternating_diagram());
    }

    #[test]
    fn kinks_untwist() {
        assert_eq!(kink().reduce().crossing_count(), 0);
        let d = double_kink();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.reduce().crossing_count(), 0);
    }

    #[test]
    fn changed_trefoil_reduces_to_unknot() {
        let t = trefoil();
        for c in 0..3 {
            let d = t.crossing_change(CrossingSelector(c)).unwrap();
            assert!(!d.is_alternating_diagram());
            assert_eq!(d.reduce().crossing_count(), 0);
        }
        assert_eq!(t.reduce(), t);
    }

    #[test]
    fn hopf_link_has_two_components() {
        let hopf = PlanarDiagram::from_crossings(vec![
            Crossing::new([0, 1, 2, 3], OverPair::Even),
            Crossing::new([2, 1, 0, 3], OverPair::Even),
        ])
        .unwrap();
        assert_eq!(hopf.component_count(), 2);
        assert!(matches!(hopf.writhe(), Err(Error::MultiComponent(2))));
    }
}
