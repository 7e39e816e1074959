use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chordweave::chromatic::{chromatic_from_wrx, gamma_bar, reduce, wbar_rf, wbar_rx, ColorWeightTable, WeightedGraph};
use chordweave::diagrams::{diagrams_up_to, generate_4t, ChordDiagram};
use chordweave::lambda_chi::{chi_eval, Superalgebra};
use chordweave::oracle::{interpolate_wgr, oracle_eval, LieSpec};
use chordweave::polycore::{expand_exponential, int, power_sum_bindings, rat};
use chordweave::skein::{self, corpus, corpus_knot, LinkDiagram};
use chordweave::stateweights::{w21_embeddings, w_gl, w_gr, w_rx, w_so, LieFamily};
use chordweave::{MPoly, Rat, VarId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

fn p(s: &str) -> MPoly {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn at_t(q: &MPoly, n: i64) -> Rat {
    q.substitute(&BTreeMap::from([(VarId::T, MPoly::int(n))])).unwrap().as_constant().unwrap()
}

/// Cycle count of `rotation ∘ pairing` on the 2n points.
fn circles(d: &ChordDiagram) -> u32 {
    let m = d.points();
    if m == 0 {
        return 1;
    }
    let mut seen = vec![false; m];
    let mut cycles = 0;
    for s in 0..m {
        if !seen[s] {
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = (d.partner(i) + 1) % m;
            }
        }
    }
    cycles
}

/// Brute-force colouring sum: every map chords -> colours whose classes are
/// crossing-free, weighted by `prod x_i^{class size}`.
fn colouring_sum(d: &ChordDiagram, r: usize) -> MPoly {
    let chords = d.chords();
    let n = chords.len();
    let mut out = MPoly::zero();
    for code in 0..r.pow(n as u32) {
        let colour: Vec<usize> = (0..n).map(|i| code / r.pow(i as u32) % r).collect();
        let ok = (0..n).all(|a| (a + 1..n).all(|b| colour[a] != colour[b] || !ChordDiagram::chords_cross(chords[a], chords[b])));
        if ok {
            out += &colour.iter().map(|&c| MPoly::var(VarId::X(c as u32 + 1))).product::<MPoly>();
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let t = corpus_knot("trefoil-right").unwrap();
    ensure(t.writhe() == 3, || format!("writhe {}", t.writhe()))?;
    let u = skein::upsilon(&t).map_err(|e| e.to_string())?;
    ensure(u == p("2*y - y^-1"), || format!("Υ = {u}"))?;
    let m = skein::upsilon(&t.mirror()).map_err(|e| e.to_string())?;
    ensure(m == p("2*y^-1 - y"), || format!("mirror Υ = {m}"))
}

fn oracle_criterion(family: LieFamily, max_degree: usize, ns: [usize; 2]) -> Outcome {
    for d in diagrams_up_to(max_degree, true).unwrap() {
        for n in ns {
            let got = oracle_eval(&LieSpec::simple(family, n), &d).map_err(|e| e.to_string())?;
            let state = if family == LieFamily::Gl { w_gl(&d) } else { w_so(&d) };
            let want = int(n as i64) * at_t(&state, n as i64);
            ensure(got == want, || format!("{d}, n={n}: oracle {got} vs {want}"))?;
            if family == LieFamily::Gl {
                let power = num::pow(int(n as i64), circles(&d) as usize);
                ensure(got == power, || format!("{d}, n={n}: oracle {got} vs n^c = {power}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for d in diagrams_up_to(5, false).unwrap() {
        for r in 1..=3 {
            let brute = colouring_sum(&d, r);
            let (a, b) = (wbar_rx(&d.intersection_graph(), r), w_rx(&d, r));
            ensure(a == brute && b == brute, || format!("{d}, r={r}: graph {a}, diagram {b}, brute force {brute}"))?;
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for d in diagrams_up_to(4, false).unwrap() {
        let (a, b) = (chromatic_from_wrx(&d).map_err(|e| e.to_string())?, gamma_bar(&d).map_err(|e| e.to_string())?);
        ensure(a == b, || format!("{d}: {a} vs {b}"))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20261015);
    let tables: Vec<ColorWeightTable> = (1..=3)
        .map(|r| {
            let vals: Vec<Vec<i64>> = (0..r).map(|_| (0..=18).map(|_| rng.random_range(-4..=4)).collect()).collect();
            ColorWeightTable::from_fn(r, 18, |c, w| int(vals[c][w as usize]))
        })
        .collect();
    for _ in 0..200 {
        let n = rng.random_range(1..=6);
        let weights: Vec<u32> = (0..n).map(|_| rng.random_range(1..=3)).collect();
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.random_bool(0.5)).collect();
        let g = WeightedGraph::new(weights, &edges).unwrap();
        let v = reduce(&g).map_err(|e| e.to_string())?;
        for &e in &edges {
            let (del, con) = (g.delete_edge(e).unwrap(), g.contract_edge(e).unwrap());
            let rhs = &reduce(&del).unwrap() - &reduce(&con).unwrap();
            ensure(v == rhs, || format!("reduce fails on {} at {e:?}", g.to_json()))?;
            for t in &tables {
                let (a, b, c) = (wbar_rf(&g, t).unwrap(), wbar_rf(&del, t).unwrap(), wbar_rf(&con, t).unwrap());
                ensure(a == &b - &c, || format!("wbar_rf fails on {} at {e:?}", g.to_json()))?;
            }
        }
        for r in 1..=3 {
            let sub = v.substitute(&power_sum_bindings(g.degree(), r, VarId::S)).unwrap();
            ensure(sub == wbar_rx(&g, r), || format!("substitution fails on {}, r={r}", g.to_json()))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let gl2 = LieSpec::simple(LieFamily::Gl, 2);
    let so3 = LieSpec::simple(LieFamily::So, 3);
    for n in 2..=4 {
        for q in generate_4t(n) {
            let show = || format!("{} - {} - {} + {}", q.d1, q.d2, q.d3, q.d4);
            ensure(q.evaluate(w_gl).is_zero(), || format!("w_gl: {}", show()))?;
            ensure(q.evaluate(w_so).is_zero(), || format!("w_so: {}", show()))?;
            for r in 1..=3 {
                ensure(q.evaluate(|d| w_rx(d, r)).is_zero(), || format!("w_rx r={r}: {}", show()))?;
            }
            ensure(q.evaluate(w21_embeddings) == int(0), || format!("w21: {}", show()))?;
            ensure(q.evaluate(|d| gamma_bar(d).unwrap()).is_zero(), || format!("gamma_bar: {}", show()))?;
            if n <= 3 {
                for spec in [&gl2, &so3] {
                    ensure(q.evaluate(|d| oracle_eval(spec, d).unwrap()) == int(0), || format!("oracle: {}", show()))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for d in diagrams_up_to(4, false).unwrap() {
        for r in 1..=2 {
            for family in [LieFamily::Gl, LieFamily::So] {
                let w = w_gr(&d, family, r);
                let top = w.coeff_of(VarId::T, d.degree() as i64);
                ensure(top == colouring_sum(&d, r), || format!("{d}, {family}, r={r}: top coefficient {top}"))?;
                if d.degree() <= 2 {
                    let interp = interpolate_wgr(&d, family, r).map_err(|e| e.to_string())?;
                    ensure(interp == w, || format!("{d}, {family}, r={r}: interpolated {interp} vs {w}"))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let half = BTreeMap::from([(VarId::Y, rat(1, 2))]);
    for name in ["trefoil-right", "trefoil-left", "figure-eight", "granny", "square"] {
        let k = corpus_knot(name).unwrap();
        let u = skein::upsilon(&k).map_err(|e| e.to_string())?;
        let want = expand_exponential(&u, &half, 6).unwrap();
        let h = skein::homfly_diagonal(&k, 6).map_err(|e| e.to_string())?;
        let f = skein::kauffman_diagonal(&k, 6).map_err(|e| e.to_string())?;
        ensure(h == want && f == want, || format!("{name}: homfly {h}, kauffman {f}, Υ series {want}"))?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let oo = LinkDiagram::unlink(2);
    let h = skein::homfly(&oo).map_err(|e| e.to_string())?;
    let f = skein::kauffman(&oo).map_err(|e| e.to_string())?;
    ensure(h == p("(a - a^-1)*z^-1"), || format!("homfly {h}"))?;
    ensure(f == p("(a - a^-1)*z^-1 + 1"), || format!("kauffman {f}"))
}

fn criterion_11() -> Outcome {
    let ks = corpus();
    let mut pairs = 0;
    'outer: for i in 0..ks.len() {
        for j in i..ks.len() {
            if pairs == 10 {
                break 'outer;
            }
            let (k1, k2) = (&ks[i].1, &ks[j].1);
            let s = k1.connected_sum_knots(k2).unwrap();
            let lhs = skein::upsilon(&s).unwrap();
            let rhs = &skein::upsilon(k1).unwrap() * &skein::upsilon(k2).unwrap();
            ensure(lhs == rhs, || format!("{} # {}: {lhs} vs {rhs}", ks[i].0, ks[j].0))?;
            pairs += 1;
        }
    }
    ensure(pairs == 10, || format!("only {pairs} pairs"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, k) in &ks {
        let u = skein::upsilon(k).unwrap();
        let len = k.paths().first().map_or(1, |p| p.arcs.len());
        for _ in 0..5 {
            let off = rng.random_range(0..len);
            let moved = if k.crossing_count() == 0 { k.clone() } else { k.relabel(&[0], &[off]) };
            let v = skein::upsilon(&moved).unwrap();
            ensure(v == u, || format!("{name} from arc offset {off}: {v} vs {u}"))?;
        }
    }
    Ok(())
}

fn criterion_12() -> Outcome {
    let g = chi_eval(&p("x3 - 4*t^3"), Superalgebra::G3).map_err(|e| e.to_string())?;
    let f = chi_eval(&p("3*x3 - 7*t^3"), Superalgebra::F4).map_err(|e| e.to_string())?;
    ensure(g.is_zero() && f.is_zero(), || format!("G3 gives {g}, F4 gives {f}"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("Υ(right trefoil) = 2y - y^-1, mirror 2y^-1 - y", Duration::from_secs(1), Box::new(criterion_1)),
        (
            "gl oracle = n·w_gl(n), degree ≤ 4, n ∈ {2,3}",
            Duration::from_secs(120),
            Box::new(|| oracle_criterion(LieFamily::Gl, 4, [2, 3])),
        ),
        (
            "so oracle = n·w_so(n), degree ≤ 3, n ∈ {3,4}",
            Duration::from_secs(300),
            Box::new(|| oracle_criterion(LieFamily::So, 3, [3, 4])),
        ),
        ("wbar_rx(Γ(D), r) = w_rx(D, r), degree ≤ 5, r ≤ 3", Duration::from_secs(120), Box::new(criterion_4)),
        ("chromatic_from_wrx = gamma_bar, degree ≤ 4", Duration::MAX, Box::new(criterion_5)),
        ("chromatic relation and substitution on 200 random graphs", Duration::MAX, Box::new(criterion_6)),
        ("4T quadruples of degree ≤ 4 annihilated", Duration::MAX, Box::new(criterion_7)),
        ("direct-sum top coefficient and interpolation", Duration::MAX, Box::new(criterion_8)),
        ("Homfly/Kauffman diagonals = Υ(e^{h/2}) to order 6", Duration::from_secs(300), Box::new(criterion_9)),
        ("split-union factors for O ⊔ O", Duration::MAX, Box::new(criterion_10)),
        ("Υ multiplicative on 10 pairs, basepoint independent", Duration::MAX, Box::new(criterion_11)),
        ("χ_G3(x3 - 4t^3) = 0 and χ_F4(3x3 - 7t^3) = 0", Duration::MAX, Box::new(criterion_12)),
    ];
    let mut failures = 0;
    for (i, (desc, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = outcome.and_then(|_| ensure(took <= *limit, || format!("took {took:?}, limit {limit:?}")));
        match outcome {
            Ok(()) => println!("PASS criterion {:>2}: {desc} ({:.2}s)", i + 1, took.as_secs_f64()),
            Err(e) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {desc} ({:.2}s): {e}", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
