use std::collections::BTreeSet;

use super::{enumerate_diagrams, ChordDiagram};

pub const MAX_4T_DEGREE: usize = 5;

/// Four diagrams related by `w(d1) - w(d2) - w(d3) + w(d4) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourTermQuadruple {
    pub d1: ChordDiagram,
    pub d2: ChordDiagram,
    pub d3: ChordDiagram,
    pub d4: ChordDiagram,
}

impl FourTermQuadruple {
    pub fn members(&self) -> [(&ChordDiagram, i64); 4] {
        [(&self.d1, 1), (&self.d2, -1), (&self.d3, -1), (&self.d4, 1)]
    }

    /// Signed sum of `w` over the four members.
    pub fn evaluate<T, F>(&self, mut w: F) -> T
    where
        T: std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
        F: FnMut(&ChordDiagram) -> T,
    {
        w(&self.d1) - w(&self.d2) - w(&self.d3) + w(&self.d4)
    }

    fn key(&self) -> Vec<(ChordDiagram, i64)> {
        let mut pos: Vec<(ChordDiagram, i64)> = self.members().iter().map(|(d, s)| ((*d).clone(), *s)).collect();
        let mut neg: Vec<(ChordDiagram, i64)> = pos.iter().map(|(d, s)| (d.clone(), -s)).collect();
        pos.sort();
        neg.sort();
        pos.min(neg)
    }
}

/// Inserts a new chord into `template`: its fixed end goes in gap `gap`, its
/// moving end just after (`after = true`) or just before the occurrence of
/// the old endpoint `at`.
fn insert_chord(template: &[usize], gap: usize, at: usize, after: bool) -> ChordDiagram {
    const NEW: usize = usize::MAX;
    // tag every old endpoint with its position so `at` can be found again
    let mut seq: Vec<(usize, Option<usize>)> = template.iter().enumerate().map(|(i, &c)| (c, Some(i))).collect();
    seq.insert(gap, (NEW, None));
    let idx = seq.iter().position(|&(_, p)| p == Some(at)).expect("endpoint present");
    seq.insert(if after { idx + 1 } else { idx }, (NEW, None));
    let labels: Vec<usize> = seq.into_iter().map(|(c, _)| c).collect();
    ChordDiagram::from_labels(&labels).expect("inserted chord is valid").canonicalize()
}

fn circle_sign_sum(q: &FourTermQuadruple) -> std::collections::BTreeMap<usize, i64> {
    let mut acc = std::collections::BTreeMap::new();
    for (d, s) in q.members() {
        *acc.entry(d.band_circle_count()).or_insert(0) += s;
    }
    acc.retain(|_, v| *v != 0);
    acc
}

/// All distinct 4T relations of degree `n` (`2 <= n <= 5`).
///
/// # Panics
/// If `n` is out of range, or a generated relation is not annihilated by the
/// circle-count weight system.
pub fn generate_4t(n: usize) -> Vec<FourTermQuadruple> {
    assert!((2..=MAX_4T_DEGREE).contains(&n), "4T generation supports degrees 2..={MAX_4T_DEGREE}");
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in enumerate_diagrams(n - 1).expect("degree within guard") {
        let labels = t.labels();
        for (p, q) in t.chords() {
            for gap in 0..=labels.len() {
                let quad = FourTermQuadruple {
                    d1: insert_chord(&labels, gap, p, true),
                    d2: insert_chord(&labels, gap, p, false),
                    d3: insert_chord(&labels, gap, q, false),
                    d4: insert_chord(&labels, gap, q, true),
                };
                assert!(circle_sign_sum(&quad).is_empty(), "4T convention check failed for template {t}");
                if seen.insert(quad.key()) {
                    out.push(quad);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_is_nonempty_and_balanced() {
        let qs = generate_4t(2);
        assert!(!qs.is_empty());
        for q in &qs {
            assert!(q.members().iter().all(|(d, _)| d.degree() == 2));
            assert_eq!(q.evaluate(|d| d.band_circle_count() as i64), 0);
        }
    }

    #[test]
    fn higher_degrees() {
        for n in 3..=4 {
            let qs = generate_4t(n);
            assert!(qs.iter().all(|q| q.members().iter().all(|(d, _)| d.degree() == n && d.is_canonical())));
            // some relation must be non-trivial once n >= 3
            assert!(qs.iter().any(|q| {
                let mut v: Vec<_> = q.members().iter().map(|(d, s)| ((*d).clone(), *s)).collect();
                v.sort();
                let mut acc = std::collections::BTreeMap::new();
                for (d, s) in v {
                    *acc.entry(d).or_insert(0i64) += s;
                }
                acc.values().any(|&c| c != 0)
            }));
        }
    }

    #[test]
    fn no_duplicate_relations() {
        let qs = generate_4t(3);
        let keys: BTreeSet<_> = qs.iter().map(|q| q.key()).collect();
        assert_eq!(keys.len(), qs.len());
    }

    #[test]
    fn transposed_convention_is_detected() {
        let broken = enumerate_diagrams(3).unwrap().into_iter().any(|t| {
            let labels = t.labels();
            t.chords().into_iter().any(|(p, q)| {
                (0..=labels.len()).any(|gap| {
                    let quad = FourTermQuadruple {
                        d1: insert_chord(&labels, gap, p, true),
                        d2: insert_chord(&labels, gap, p, false),
                        d3: insert_chord(&labels, gap, q, true),
                        d4: insert_chord(&labels, gap, q, false),
                    };
                    !circle_sign_sum(&quad).is_empty()
                })
            })
        });
        assert!(broken);
    }

    #[test]
    #[should_panic]
    fn guard() {
        generate_4t(6);
    }
}
