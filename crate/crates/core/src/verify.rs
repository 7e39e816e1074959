//! Exhaustive property suites over bounded inputs. Failures are reported
//! with the first counterexample in input order, never raised.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chromatic::{self, wbar_rf, wbar_rx, ChromaticReducer, ColorWeightTable, WeightedGraph};
use crate::diagrams::{diagrams_up_to, generate_4t, ChordDiagram, FourTermQuadruple, MAX_4T_DEGREE, MAX_ENUM_DEGREE};
use crate::error::{Error, Result};
use crate::lambda_chi::{chi_eval, vanishing_identities};
use crate::oracle::{interpolate_wgr, oracle_eval_with, LieSpec};
use crate::par::{self, Execution};
use crate::polycore::{int, power_sum_bindings, MPoly, Rat, VarId};
use crate::skein::{self, corpus, corpus_knot, LinkDiagram, SkeinEvaluator};
use crate::stateweights::{w21_embeddings, w_gl, w_gr, w_rx, w_so, LieFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Suite {
    #[serde(rename = "fourT")]
    FourT,
    #[serde(rename = "oracle")]
    Oracle,
    #[serde(rename = "triangle")]
    Triangle,
    #[serde(rename = "chromrel")]
    ChromRel,
    #[serde(rename = "skein")]
    Skein,
    #[serde(rename = "chi")]
    Chi,
}

pub const SUITES: [Suite; 6] = [Suite::FourT, Suite::Oracle, Suite::Triangle, Suite::ChromRel, Suite::Skein, Suite::Chi];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::FourT => "fourT",
            Suite::Oracle => "oracle",
            Suite::Triangle => "triangle",
            Suite::ChromRel => "chromrel",
            Suite::Skein => "skein",
            Suite::Chi => "chi",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SUITES
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown suite {s:?}") })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Input bounds of a suite.
///
/// `max_degree` is the chord-diagram degree for the diagram suites and the
/// series order for `skein`. In `oracle`, `so` runs at one degree less and at
/// ranks `n + 1`, and the interpolation check at two degrees less.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_degree: usize,
    pub ns: Vec<usize>,
    pub r: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Bounds {
    pub fn default_for(suite: Suite) -> Self {
        let (max_degree, r) = match suite {
            Suite::FourT => (4, 3),
            Suite::Oracle => (4, 2),
            Suite::Triangle => (5, 3),
            Suite::ChromRel => (6, 3),
            Suite::Skein => (6, 1),
            Suite::Chi => (5, 1),
        };
        Bounds { max_degree, ns: vec![2, 3], r, samples: 200, seed: 0x5eed }
    }

    fn check(&self, suite: Suite) -> Result<()> {
        let max = match suite {
            Suite::FourT => MAX_4T_DEGREE,
            Suite::Oracle | Suite::Triangle => MAX_ENUM_DEGREE,
            Suite::ChromRel => chromatic::MAX_CANON_VERTICES,
            Suite::Skein => skein::MAX_DIAGONAL_ORDER,
            Suite::Chi => 99,
        };
        if self.max_degree > max {
            return Err(Error::DegreeTooLarge { degree: self.max_degree, max });
        }
        if self.r > 6 {
            return Err(Error::DegreeTooLarge { degree: self.r, max: 6 });
        }
        if self.ns.iter().any(|&n| n == 0 || n > 8) {
            return Err(Error::DegreeTooLarge { degree: self.ns.iter().copied().max().unwrap_or(0), max: 8 });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub bounds: Bounds,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Outcome = std::result::Result<(), String>;

fn expect_eq<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T, what: impl fmt::Display) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

fn lift<T>(r: Result<T>, what: impl fmt::Display) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

/// Runs `f` on every item and keeps the first failure in input order.
fn check<T, F>(name: impl Into<String>, exec: Execution, items: &[T], f: F) -> CheckResult
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync + Send,
{
    let counterexample = par::map(exec, items, |x| f(x).err()).into_iter().flatten().next();
    CheckResult { name: name.into(), cases: items.len(), passed: counterexample.is_none(), counterexample }
}

pub fn run_suite(suite: Suite, bounds: &Bounds, exec: Execution) -> Result<SuiteReport> {
    bounds.check(suite)?;
    let checks = match suite {
        Suite::FourT => four_term(bounds, exec)?,
        Suite::Oracle => oracle(bounds, exec)?,
        Suite::Triangle => triangle(bounds, exec)?,
        Suite::ChromRel => chromatic_relation(bounds, exec)?,
        Suite::Skein => skein_suite(bounds, exec)?,
        Suite::Chi => chi(bounds),
    };
    Ok(SuiteReport { suite, bounds: bounds.clone(), checks })
}

fn at_t(p: &MPoly, n: usize) -> Rat {
    let b = BTreeMap::from([(VarId::T, MPoly::int(n as i64))]);
    p.substitute(&b).ok().and_then(|v| v.as_constant()).expect("polynomial in t only")
}

fn annihilates<T, F>(q: &FourTermQuadruple, w: F) -> Outcome
where
    T: Zero + PartialEq + fmt::Display + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
    F: FnMut(&ChordDiagram) -> T,
{
    let v = q.evaluate(w);
    if v.is_zero() {
        Ok(())
    } else {
        Err(format!("{} - {} - {} + {} = {v}", q.d1, q.d2, q.d3, q.d4))
    }
}

fn oracle_specs(bounds: &Bounds) -> Vec<LieSpec> {
    let gl = bounds.ns.iter().map(|&n| LieSpec::simple(LieFamily::Gl, n));
    let so = bounds.ns.iter().map(|&n| LieSpec::simple(LieFamily::So, n + 1));
    gl.chain(so).collect()
}

fn four_term(bounds: &Bounds, exec: Execution) -> Result<Vec<CheckResult>> {
    let quads: Vec<FourTermQuadruple> = (2..=bounds.max_degree).flat_map(generate_4t).collect();
    let mut out =
        vec![check("w_gl", exec, &quads, |q| annihilates(q, w_gl)), check("w_so", exec, &quads, |q| annihilates(q, w_so))];
    for r in 1..=bounds.r {
        out.push(check(format!("w_rx r={r}"), exec, &quads, |q| annihilates(q, |d| w_rx(d, r))));
    }
    out.push(check("w21_embeddings", exec, &quads, |q| annihilates(q, w21_embeddings)));
    out.push(check("gamma_bar", exec, &quads, |q| {
        let mut red = ChromaticReducer::new();
        let mut err = None;
        let v = q.evaluate(|d| {
            red.reduce(&d.intersection_graph()).unwrap_or_else(|e| {
                err = Some(e.to_string());
                MPoly::zero()
            })
        });
        match err {
            Some(e) => Err(e),
            None if v.is_zero() => Ok(()),
            None => Err(format!("{} - {} - {} + {} = {v}", q.d1, q.d2, q.d3, q.d4)),
        }
    }));
    let small: Vec<&FourTermQuadruple> = quads.iter().filter(|q| q.d1.degree() <= 3).collect();
    for spec in oracle_specs(bounds) {
        let name = format!("oracle {}_{}", spec.family, spec.n);
        out.push(check(name, exec, &small, |q| {
            let vals: Vec<Rat> = q
                .members()
                .iter()
                .map(|(d, _)| oracle_eval_with(&spec, d, Execution::Sequential))
                .collect::<Result<_>>()
                .map_err(|e| e.to_string())?;
            let total = &vals[0] - &vals[1] - &vals[2] + &vals[3];
            expect_eq(&total, &Rat::zero(), format!("{} - {} - {} + {}", q.d1, q.d2, q.d3, q.d4))
        }));
    }
    Ok(out)
}

fn oracle(bounds: &Bounds, exec: Execution) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let all = diagrams_up_to(bounds.max_degree, true)?;
    for spec in oracle_specs(bounds) {
        let (family, n) = (spec.family, spec.n);
        let max = if family == LieFamily::So { bounds.max_degree.saturating_sub(1) } else { bounds.max_degree };
        let ds: Vec<&ChordDiagram> = all.iter().filter(|d| d.degree() <= max).collect();
        out.push(check(format!("oracle {family}_{n} = n * w_{family}(n)"), exec, &ds, |d| {
            let got = lift(oracle_eval_with(&spec, d, Execution::Sequential), d)?;
            let poly = if family == LieFamily::Gl { w_gl(d) } else { w_so(d) };
            expect_eq(&got, &(int(n as i64) * at_t(&poly, n)), d)
        }));
    }
    let cases: Vec<(&ChordDiagram, usize)> =
        all.iter().filter(|d| !d.is_circle()).flat_map(|d| (1..=bounds.r).map(move |r| (d, r))).collect();
    for family in [LieFamily::Gl, LieFamily::So] {
        out.push(check(format!("top t-coefficient of w_gr({family}) = w_rx"), exec, &cases, |&(d, r)| {
            let top = w_gr(d, family, r).coeff_of(VarId::T, d.degree() as i64);
            expect_eq(&top, &w_rx(d, r), format!("{d}, r={r}"))
        }));
    }
    let small: Vec<(&ChordDiagram, usize)> = cases.iter().copied().filter(|(d, _)| d.degree() + 2 <= bounds.max_degree).collect();
    for family in [LieFamily::Gl, LieFamily::So] {
        out.push(check(format!("interpolated {family} direct sum = w_gr"), exec, &small, |&(d, r)| {
            let got = lift(interpolate_wgr(d, family, r), d)?;
            expect_eq(&got, &w_gr(d, family, r), format!("{d}, r={r}"))
        }));
    }
    Ok(out)
}

fn triangle(bounds: &Bounds, exec: Execution) -> Result<Vec<CheckResult>> {
    let ds = diagrams_up_to(bounds.max_degree, false)?;
    let cases: Vec<(&ChordDiagram, usize)> = ds.iter().flat_map(|d| (1..=bounds.r).map(move |r| (d, r))).collect();
    Ok(vec![
        check("wbar_rx(intersection graph) = w_rx", exec, &cases, |&(d, r)| {
            expect_eq(&wbar_rx(&d.intersection_graph(), r), &w_rx(d, r), format!("{d}, r={r}"))
        }),
        check("chromatic_from_wrx = gamma_bar", exec, &ds, |d| {
            let back = lift(chromatic::chromatic_from_wrx(d), d)?;
            expect_eq(&back, &lift(chromatic::gamma_bar(d), d)?, d)
        }),
    ])
}

/// Deterministic random weighted graphs with up to `max_vertices` vertices
/// and weights in `1..=3`.
pub fn random_graphs(count: usize, max_vertices: usize, seed: u64) -> Vec<WeightedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_vertices.max(1));
            let weights: Vec<u32> = (0..n).map(|_| rng.random_range(1..=3)).collect();
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.random_bool(0.5) {
                        edges.push((a, b));
                    }
                }
            }
            WeightedGraph::new(weights, &edges).expect("valid random graph")
        })
        .collect()
}

fn chromatic_relation(bounds: &Bounds, exec: Execution) -> Result<Vec<CheckResult>> {
    let graphs = random_graphs(bounds.samples, bounds.max_degree, bounds.seed);
    let max_w = 3 * bounds.max_degree as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed ^ 0x7ab1e);
    let tables: Vec<ColorWeightTable> = (1..=bounds.r)
        .map(|r| {
            let vals: Vec<Vec<i64>> = (0..r).map(|_| (0..=max_w).map(|_| rng.random_range(-3..=3)).collect()).collect();
            ColorWeightTable::from_fn(r, max_w, |c, w| int(vals[c][w as usize]))
        })
        .collect();
    let show = |g: &WeightedGraph| g.to_json();
    Ok(vec![
        check("reduce: G = G/e' - G/e''", exec, &graphs, |g| {
            let mut red = ChromaticReducer::new();
            let v = lift(red.reduce(g), show(g))?;
            for e in g.edges() {
                let del = lift(red.reduce(&lift(g.delete_edge(e), show(g))?), show(g))?;
                let con = lift(red.reduce(&lift(g.contract_edge(e), show(g))?), show(g))?;
                expect_eq(&v, &(&del - &con), format!("{} edge {e:?}", show(g)))?;
            }
            Ok(())
        }),
        check("wbar_rf: G = G/e' - G/e''", exec, &graphs, |g| {
            for tbl in &tables {
                let v = lift(wbar_rf(g, tbl), show(g))?;
                for e in g.edges() {
                    let del = lift(wbar_rf(&lift(g.delete_edge(e), show(g))?, tbl), show(g))?;
                    let con = lift(wbar_rf(&lift(g.contract_edge(e), show(g))?, tbl), show(g))?;
                    expect_eq(&v, &(del - con), format!("{} edge {e:?}, r={}", show(g), tbl.colors()))?;
                }
            }
            Ok(())
        }),
        check("reduce with s_d -> power sums = wbar_rx", exec, &graphs, |g| {
            let v = lift(ChromaticReducer::new().reduce(g), show(g))?;
            for r in 1..=bounds.r {
                let b = power_sum_bindings(g.degree(), r, VarId::S);
                let sub = lift(v.substitute(&b), show(g))?;
                expect_eq(&sub, &wbar_rx(g, r), format!("{}, r={r}", show(g)))?;
            }
            Ok(())
        }),
    ])
}

fn knot(name: &str) -> LinkDiagram {
    corpus_knot(name).expect("built-in knot")
}

fn p(text: &str) -> MPoly {
    text.parse().expect("valid polynomial")
}

fn skein_suite(bounds: &Bounds, exec: Execution) -> Result<Vec<CheckResult>> {
    let order = bounds.max_degree;
    let mut out = Vec::new();
    let named: Vec<(&str, LinkDiagram, MPoly)> = vec![
        ("trefoil-right", knot("trefoil-right"), p("2*y - y^-1")),
        ("mirror trefoil-right", knot("trefoil-right").mirror(), p("2*y^-1 - y")),
        ("unknot", LinkDiagram::unknot(), MPoly::one()),
    ];
    out.push(check("upsilon values", exec, &named, |(name, k, want)| expect_eq(&lift(skein::upsilon(k), name)?, want, name)));
    let diag: Vec<(&str, LinkDiagram)> =
        ["trefoil-right", "trefoil-left", "figure-eight", "granny", "square"].into_iter().map(|n| (n, knot(n))).collect();
    out.push(check(format!("diagonals = upsilon series to order {order}"), exec, &diag, |(name, k)| {
        let want = lift(skein::upsilon_series(&lift(skein::upsilon(k), name)?, order), name)?;
        expect_eq(&lift(skein::homfly_diagonal(k, order), name)?, &want, format!("{name} homfly"))?;
        expect_eq(&lift(skein::kauffman_diagonal(k, order), name)?, &want, format!("{name} kauffman"))
    }));
    out.push(check("split-union factors", exec, &[()], |_| {
        let oo = LinkDiagram::unlink(2);
        expect_eq(&lift(skein::homfly(&oo), "O+O")?, &skein::homfly_loop_factor(), "homfly O+O")?;
        expect_eq(&lift(skein::kauffman(&oo), "O+O")?, &skein::kauffman_loop_factor(), "kauffman O+O")?;
        let (t, e) = (knot("trefoil-right"), knot("figure-eight"));
        let u = t.disjoint_union(&e);
        let mut ev = SkeinEvaluator::new();
        let h = &skein::homfly_loop_factor() * &(&lift(ev.homfly(&t), "3_1")? * &lift(ev.homfly(&e), "4_1")?);
        expect_eq(&lift(ev.homfly(&u), "3_1+4_1")?, &h, "homfly 3_1+4_1")?;
        let f = &skein::kauffman_loop_factor() * &(&lift(ev.kauffman(&t), "3_1")? * &lift(ev.kauffman(&e), "4_1")?);
        expect_eq(&lift(ev.kauffman(&u), "3_1+4_1")?, &f, "kauffman 3_1+4_1")
    }));
    let ks = corpus();
    let mut pairs = Vec::new();
    for i in 0..ks.len() {
        for j in i..ks.len() {
            if ks[i].1.crossing_count() + ks[j].1.crossing_count() <= 10 && pairs.len() < 10 {
                pairs.push((i, j));
            }
        }
    }
    out.push(check("upsilon(K1 # K2) = upsilon(K1) upsilon(K2)", exec, &pairs, |&(i, j)| {
        let ((n1, k1), (n2, k2)) = (&ks[i], &ks[j]);
        let what = format!("{n1} # {n2}");
        let sum = lift(k1.connected_sum_knots(k2), &what)?;
        let prod = &lift(skein::upsilon(k1), n1)? * &lift(skein::upsilon(k2), n2)?;
        expect_eq(&lift(skein::upsilon(&sum), &what)?, &prod, what)
    }));
    out.push(check("basepoint independence", exec, &ks, |(name, k)| {
        let mut ev = SkeinEvaluator::new();
        let (u, h) = (lift(ev.upsilon(k), name)?, lift(ev.homfly(k), name)?);
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        let lens: Vec<usize> = k.paths().iter().map(|p| p.arcs.len()).collect();
        for _ in 0..5 {
            let offsets: Vec<usize> = lens.iter().map(|&l| rng.random_range(0..l)).collect();
            let moved = k.relabel(&(0..lens.len()).collect::<Vec<_>>(), &offsets);
            let mut fresh = SkeinEvaluator::new();
            expect_eq(&lift(fresh.upsilon(&moved), name)?, &u, format!("{name} upsilon, offsets {offsets:?}"))?;
            expect_eq(&lift(fresh.homfly(&moved), name)?, &h, format!("{name} homfly, offsets {offsets:?}"))?;
        }
        Ok(())
    }));
    let crossings: Vec<(&str, &LinkDiagram, usize)> = ks
        .iter()
        .filter(|(_, k)| k.crossing_count() <= 5)
        .flat_map(|(n, k)| (0..k.crossing_count()).map(move |i| (*n, k, i)))
        .collect();
    out.push(check("skein relations at every crossing", exec, &crossings, |&(name, k, i)| {
        let what = format!("{name} crossing {i}");
        let eps = MPoly::int(k.crossings()[i].sign as i64);
        let (sw, or, un) =
            (lift(k.switch_crossing(i), &what)?, lift(k.smooth_oriented(i), &what)?, lift(k.smooth_unoriented(i), &what)?);
        let mut ev = SkeinEvaluator::new();
        let z = MPoly::var(VarId::Z);
        let dh = lift(ev.homfly(k), &what)? - lift(ev.homfly(&sw), &what)?;
        expect_eq(&dh, &(&eps * &(&z * &lift(ev.homfly(&or), &what)?)), format!("{what} homfly"))?;
        let df = lift(ev.kauffman(k), &what)? - lift(ev.kauffman(&sw), &what)?;
        let rhs = &eps * &(&z * &(lift(ev.kauffman(&or), &what)? - lift(ev.kauffman(&un), &what)?));
        expect_eq(&df, &rhs, format!("{what} kauffman"))?;
        let du = lift(ev.upsilon(k), &what)? - lift(ev.upsilon(&sw), &what)?;
        let prod = &lift(ev.upsilon(&lift(or.extract_component(0), &what)?), &what)?
            * &lift(ev.upsilon(&lift(or.extract_component(1), &what)?), &what)?;
        expect_eq(&du, &(&eps * &(&p("y - y^-1") * &prod)), format!("{what} upsilon"))
    }));
    Ok(out)
}

fn chi(bounds: &Bounds) -> Vec<CheckResult> {
    let ids = vanishing_identities();
    let mut out = vec![check("printed vanishings", Execution::Sequential, &ids, |(w, e)| {
        expect_eq(&lift(chi_eval(e, *w), e)?, &MPoly::zero(), format!("{w}: {e}"))
    })];
    let odd: Vec<u32> = (1..=bounds.max_degree as u32).filter(|n| n % 2 == 1).collect();
    out.push(check("x1^n maps to (2t)^n", Execution::Sequential, &odd, |&n| {
        for (w, _) in &ids {
            let want = MPoly::var_pow(VarId::T, n as i64).scale(&int(1 << n));
            expect_eq(&lift(chi_eval(&MPoly::var_pow(VarId::X(1), n as i64), *w), n)?, &want, format!("{w}, n={n}"))?;
        }
        Ok(())
    }));
    out
}
