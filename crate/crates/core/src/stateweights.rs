//! State-sum weight systems: circle counting for gl and so, the top weight
//! system, and the colouring weight systems built from the coproduct.

use num::{One, Zero};

use crate::chromatic::{wbar_rf, ColorWeightTable};
use crate::diagrams::ChordDiagram;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::polycore::{MPoly, Monomial, Rat, VarId};

/// How a chord is replaced by a band.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    /// Untwisted band; traversal keeps its direction.
    Preserve,
    /// Half-twisted band; traversal comes back reversed.
    Reverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieFamily {
    Gl,
    So,
}

impl std::str::FromStr for LieFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(LieFamily::Gl),
            "so" => Ok(LieFamily::So),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown Lie family {s:?}") }),
        }
    }
}

impl std::fmt::Display for LieFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LieFamily::Gl => "gl",
            LieFamily::So => "so",
        })
    }
}

/// 1 if no two chords cross, else 0.
pub fn w_top(d: &ChordDiagram) -> Rat {
    if d.is_noncrossing() {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// Number of closed curves after replacing chord `k` (in
/// [`ChordDiagram::chords`] order) by band `res[k]`.
///
/// Every curve is walked once in each direction over the `4n` directed
/// arc ends, so the directed cycle count is halved.
pub fn circle_count(d: &ChordDiagram, res: &[Smoothing]) -> usize {
    let m = d.points();
    if m == 0 {
        return 1;
    }
    assert_eq!(res.len(), d.degree(), "one smoothing per chord");
    let labels = d.labels();
    // state 2*x + s: arriving at point x moving forward (s = 0) or backward (s = 1)
    let step = |state: usize| -> usize {
        let (x, back) = (state / 2, state % 2 == 1);
        let y = d.partner(x);
        let keep = res[labels[x]] == Smoothing::Preserve;
        let forward_out = keep != back;
        if forward_out {
            2 * ((y + 1) % m)
        } else {
            2 * ((y + m - 1) % m) + 1
        }
    };
    let mut seen = vec![false; 2 * m];
    let mut cycles = 0;
    for s in 0..2 * m {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut cur = s;
        while !seen[cur] {
            seen[cur] = true;
            cur = step(cur);
        }
    }
    debug_assert!(cycles % 2 == 0);
    cycles / 2
}

fn t_pow(e: usize) -> MPoly {
    MPoly::var_pow(VarId::T, e as i64)
}

/// `t^(c - 1)` with `c` the all-untwisted circle count.
pub fn w_gl(d: &ChordDiagram) -> MPoly {
    t_pow(circle_count(d, &vec![Smoothing::Preserve; d.degree()]) - 1)
}

/// Signed sum over subsets `S` of chords smoothed with a twist:
/// `sum (-1)^|S| t^(c_S - 1)`.
pub fn w_so(d: &ChordDiagram) -> MPoly {
    w_so_with(d, Execution::default())
}

pub fn w_so_with(d: &ChordDiagram, exec: Execution) -> MPoly {
    let n = d.degree();
    assert!(n < usize::BITS as usize, "too many chords for a subset sum");
    par::sum_range(
        exec,
        1 << n,
        MPoly::zero(),
        |mask| {
            let res: Vec<Smoothing> =
                (0..n).map(|k| if mask >> k & 1 == 1 { Smoothing::Reverse } else { Smoothing::Preserve }).collect();
            let term = t_pow(circle_count(d, &res) - 1);
            if mask.count_ones() % 2 == 1 {
                -term
            } else {
                term
            }
        },
        |a, b| &a + &b,
    )
}

/// The weight system of `family` on one diagram.
pub fn w_lie(d: &ChordDiagram, family: LieFamily) -> MPoly {
    match family {
        LieFamily::Gl => w_gl(d),
        LieFamily::So => w_so(d),
    }
}

fn x_monomial(degrees: impl IntoIterator<Item = usize>) -> Monomial {
    Monomial::new(degrees.into_iter().enumerate().map(|(i, k)| (VarId::X(i as u32 + 1), k as i64))).expect("non-negative")
}

/// Coproduct expansion `sum over colourings of prod_i x_i^deg(D_i) * W(D_1 ... D_r)`.
pub fn w_rx(d: &ChordDiagram, r: usize) -> MPoly {
    let mut out = MPoly::zero();
    for c in d.chord_colorings(r) {
        if c.parts.iter().all(|p| p.is_noncrossing()) {
            out.add_term(x_monomial(c.parts.iter().map(|p| p.degree())), Rat::one());
        }
    }
    out
}

/// Coproduct expansion with `f_i` applied to the degree of colour class `i`,
/// cross-checked against the proper-colouring sum on the intersection graph.
pub fn w_rf(d: &ChordDiagram, tbl: &ColorWeightTable) -> Result<Rat> {
    let r = tbl.colors();
    let mut via_coproduct = Rat::zero();
    if r > 0 {
        for c in d.chord_colorings(r) {
            if c.parts.iter().all(|p| p.is_noncrossing()) {
                let mut prod = Rat::one();
                for (i, p) in c.parts.iter().enumerate() {
                    prod *= tbl.get(i, p.degree() as u32)?;
                }
                via_coproduct += prod;
            }
        }
    } else if d.is_circle() {
        via_coproduct = Rat::one();
    }
    let via_graph = wbar_rf(&d.intersection_graph(), tbl)?;
    if via_coproduct != via_graph {
        return Err(Error::Inconsistent(format!(
            "coproduct expansion gives {via_coproduct}, colouring sum gives {via_graph} on {d}"
        )));
    }
    Ok(via_graph)
}

/// Two-colouring count of the intersection graph: 0 unless bipartite, then
/// `2^(number of components)`.
pub fn w21_embeddings(d: &ChordDiagram) -> Rat {
    let g = d.intersection_graph();
    if g.is_bipartite() {
        Rat::from_integer(num::BigInt::one() << g.components().len())
    } else {
        Rat::zero()
    }
}

/// Direct-sum weight system: `sum over colourings of prod_i x_i^deg(D_i) w(D_i)`.
pub fn w_gr(d: &ChordDiagram, family: LieFamily, r: usize) -> MPoly {
    let mut out = MPoly::zero();
    for c in d.chord_colorings(r) {
        let mut term = MPoly::term(Rat::one(), x_monomial(c.parts.iter().map(|p| p.degree())));
        for p in &c.parts {
            term = &term * &w_lie(p, family);
        }
        out += &term;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{diagrams_up_to, generate_4t};
    use crate::polycore::int;
    use proptest::prelude::*;

    fn d(w: &str) -> ChordDiagram {
        ChordDiagram::from_word(w).unwrap()
    }

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn top_examples() {
        assert_eq!(w_top(&d("1122")), int(1));
        assert_eq!(w_top(&d("1212")), int(0));
        assert_eq!(w_top(&ChordDiagram::circle()), int(1));
    }

    #[test]
    fn circle_count_examples() {
        assert_eq!(circle_count(&d("11"), &[Smoothing::Preserve]), 2);
        assert_eq!(circle_count(&d("1212"), &[Smoothing::Preserve; 2]), 1);
        assert_eq!(circle_count(&d("11"), &[Smoothing::Reverse]), 1);
        for x in diagrams_up_to(5, true).unwrap() {
            assert_eq!(circle_count(&x, &vec![Smoothing::Preserve; x.degree()]), x.band_circle_count());
        }
    }

    #[test]
    fn circle_bound() {
        for x in diagrams_up_to(4, false).unwrap() {
            let n = x.degree();
            for mask in 0..1usize << n {
                let res: Vec<_> =
                    (0..n).map(|k| if mask >> k & 1 == 1 { Smoothing::Reverse } else { Smoothing::Preserve }).collect();
                let c = circle_count(&x, &res);
                assert!(c <= n + 1);
                if c == n + 1 {
                    assert!(mask == 0 && x.is_noncrossing(), "{x} mask {mask}");
                }
            }
        }
    }

    #[test]
    fn gl_so_examples() {
        assert_eq!(w_gl(&d("11")), p("t"));
        assert_eq!(w_gl(&d("1212")), p("1"));
        assert_eq!(w_gl(&d("1122")), p("t^2"));
        assert_eq!(w_so(&d("11")), p("t - 1"));
        assert_eq!(w_so(&ChordDiagram::circle()), p("1"));
        for x in diagrams_up_to(4, true).unwrap() {
            let n = x.degree() as i64;
            let top = MPoly::constant(w_top(&x));
            assert_eq!(w_gl(&x).coeff_of(VarId::T, n), top);
            assert_eq!(w_so(&x).coeff_of(VarId::T, n), top);
            assert!(w_gl(&x).max_degree_in(VarId::T).unwrap_or(0) <= n);
        }
    }

    #[test]
    fn so_parallel_matches_sequential() {
        for x in diagrams_up_to(4, false).unwrap() {
            assert_eq!(w_so_with(&x, Execution::Sequential), w_so_with(&x, Execution::Parallel));
        }
    }

    #[test]
    fn wrx_examples() {
        assert_eq!(w_rx(&d("1212"), 2), p("2*x1*x2"));
        assert_eq!(w_rx(&d("1122"), 2), p("(x1 + x2)^2"));
        assert_eq!(w_rx(&d("11"), 3), p("x1 + x2 + x3"));
        assert_eq!(w_rx(&ChordDiagram::circle(), 2), p("1"));
    }

    #[test]
    fn wrf_examples() {
        let ones = ColorWeightTable::ones(2, 6);
        assert_eq!(w_rf(&d("1212"), &ones).unwrap(), int(2));
        assert_eq!(w_rf(&d("123123"), &ones).unwrap(), int(0));
        for x in diagrams_up_to(4, true).unwrap() {
            assert_eq!(w_rf(&x, &ColorWeightTable::ones(1, 4)).unwrap(), w_top(&x));
            let tbl = ColorWeightTable::from_fn(3, 4, |i, k| int((i as i64 + 2) * k as i64 - 1));
            assert!(w_rf(&x, &tbl).is_ok());
        }
    }

    #[test]
    fn w21_examples() {
        assert_eq!(w21_embeddings(&d("1212")), int(2));
        assert_eq!(w21_embeddings(&d("123312")), int(4));
        assert_eq!(w21_embeddings(&d("123123")), int(0));
        for x in diagrams_up_to(4, true).unwrap() {
            assert_eq!(w21_embeddings(&x), w_rf(&x, &ColorWeightTable::ones(2, 4)).unwrap());
        }
    }

    #[test]
    fn wgr_examples() {
        assert_eq!(w_gr(&d("11"), LieFamily::Gl, 2), p("(x1 + x2)*t"));
        assert_eq!(w_gr(&ChordDiagram::circle(), LieFamily::So, 3), p("1"));
        for x in diagrams_up_to(3, false).unwrap() {
            for r in 1..=2 {
                let top = x.degree() as i64;
                assert_eq!(w_gr(&x, LieFamily::Gl, r).coeff_of(VarId::T, top), w_rx(&x, r));
                assert_eq!(w_gr(&x, LieFamily::So, r).coeff_of(VarId::T, top), w_rx(&x, r));
            }
        }
    }

    #[test]
    fn four_term_vanishing() {
        for n in 2..=4 {
            for q in generate_4t(n) {
                assert!(q.evaluate(w_gl).is_zero());
                assert!(q.evaluate(w_so).is_zero());
                assert!(q.evaluate(|x| MPoly::constant(w21_embeddings(x))).is_zero());
                for r in 1..=3 {
                    assert!(q.evaluate(|x| w_rx(x, r)).is_zero());
                }
            }
        }
    }

    #[test]
    fn symmetric_in_colours() {
        let swap = |v: VarId| match v {
            VarId::X(1) => VarId::X(2),
            VarId::X(2) => VarId::X(1),
            o => o,
        };
        for x in diagrams_up_to(3, false).unwrap() {
            let a = w_rx(&x, 3);
            assert_eq!(a.rename(swap).unwrap(), a);
            let b = w_gr(&x, LieFamily::So, 2);
            assert_eq!(b.rename(swap).unwrap(), b);
        }
    }

    fn arb_small() -> impl Strategy<Value = ChordDiagram> {
        (1usize..=3, any::<u64>()).prop_map(|(n, i)| {
            let all = crate::diagrams::enumerate_diagrams(n).unwrap();
            all[(i % all.len() as u64) as usize].clone()
        })
    }

    proptest! {
        #[test]
        fn multiplicative_under_connected_sum(a in arb_small(), b in arb_small(), c1 in 0usize..6, c2 in 0usize..6) {
            let s = a.connected_sum(c1 % a.points(), &b, c2 % b.points()).unwrap();
            prop_assert_eq!(w_gl(&s), &w_gl(&a) * &w_gl(&b));
            prop_assert_eq!(w_so(&s), &w_so(&a) * &w_so(&b));
            prop_assert_eq!(
                crate::chromatic::gamma_bar(&s).unwrap(),
                &crate::chromatic::gamma_bar(&a).unwrap() * &crate::chromatic::gamma_bar(&b).unwrap()
            );
        }
    }
}
